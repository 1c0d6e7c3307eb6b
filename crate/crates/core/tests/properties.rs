use heisdouble::combinatorics::{compositions, partitions};
use heisdouble::element::{Basis, DynHeisenberg, GradedElement};
use heisdouble::expr::{evaluate, Context, Val};
use heisdouble::instances::SymBasis;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn random_element(basis: Basis, max_deg: usize) -> impl Strategy<Value = GradedElement<BigRational>> {
    let keys: Vec<Vec<usize>> = match basis.algebra() {
        heisdouble::element::Algebra::Sym => (0..=max_deg).flat_map(partitions).map(|p| p.parts().to_vec()).collect(),
        heisdouble::element::Algebra::QSym | heisdouble::element::Algebra::NSym => (0..=max_deg)
            .flat_map(compositions)
            .map(|c| c.parts().to_vec())
            .collect(),
        _ => (0..=max_deg).map(|n| vec![n]).collect(),
    };
    let n = keys.len();
    prop::collection::vec((0..n, -4i64..=4), 0..4).prop_map(move |terms| {
        let mut u = GradedElement::zero(basis);
        for (i, c) in terms {
            let e = GradedElement::basis_element(basis, keys[i].clone()).unwrap();
            u = u.add(&e.scale(&BigRational::from_integer(c.into()))).unwrap();
        }
        u
    })
}

fn any_basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convert_round_trips(
        (u, target) in any_basis().prop_flat_map(|b| {
            let same: Vec<Basis> = Basis::ALL.into_iter().filter(|t| t.algebra() == b.algebra()).collect();
            (random_element(b, 4), prop::sample::select(same))
        })
    ) {
        let there = u.convert(target).unwrap();
        prop_assert_eq!(there.convert(u.basis()).unwrap(), u);
    }

    #[test]
    fn products_associate(
        (x, y, z) in any_basis().prop_flat_map(|b| (random_element(b, 3), random_element(b, 2), random_element(b, 2)))
    ) {
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let r = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn counit_sides_of_coproduct(a in random_element(Basis::Sym(SymBasis::S), 4)) {
        // Only the 1 ⊗ a and a ⊗ 1 terms survive when pairing one side with the unit.
        let c = a.coproduct().unwrap();
        let left: Vec<_> = c.terms.iter().filter(|((l, _), _)| l.is_empty()).map(|((_, r), v)| (r.clone(), v.clone())).collect();
        let expect: Vec<_> = a.terms().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        prop_assert_eq!(left, expect);
    }

    #[test]
    fn heisenberg_product_associates(
        a in random_element(Basis::M, 2),
        x in random_element(Basis::Nh, 2),
        b in random_element(Basis::F, 2),
        y in random_element(Basis::R, 2),
    ) {
        let u = DynHeisenberg::from_sides(&a, &x).unwrap();
        let v = DynHeisenberg::from_sides(&b, &y).unwrap();
        let w = DynHeisenberg::embed(&x).add(&DynHeisenberg::embed(&b)).unwrap();
        let l = u.mul(&v).unwrap().mul(&w).unwrap();
        let r = u.mul(&v.mul(&w).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn fock_action_is_a_module(
        a in random_element(Basis::M, 2),
        x in random_element(Basis::Nh, 2),
        y in random_element(Basis::Nh, 2),
        v in random_element(Basis::M, 3),
    ) {
        let u = DynHeisenberg::from_sides(&a, &x).unwrap();
        let w = DynHeisenberg::embed(&y);
        let l = u.mul(&w).unwrap().fock_apply(&v).unwrap();
        let r = u.fock_apply(&w.fock_apply(&v).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn parser_matches_direct_construction(i in 1usize..4, j in 1usize..4, c in -5i64..=5) {
        let src = format!("{c}*M[{i},{j}] - M[{j}]*M[{i}]");
        let v = evaluate::<BigInt>(&src, &Context::default()).unwrap();
        let m = |idx: Vec<usize>| GradedElement::<BigInt>::basis_element(Basis::M, idx).unwrap();
        let expect = m(vec![i, j]).scale(&BigInt::from(c)).sub(&m(vec![j]).mul(&m(vec![i])).unwrap()).unwrap();
        prop_assert_eq!(v, Val::Element(expect));
    }
}
