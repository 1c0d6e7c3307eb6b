use std::collections::BTreeMap;

use heisdouble::combinatorics::{compositions, partitions, Composition};
use heisdouble::element::{pair, Basis, GradedElement};
use heisdouble::hopf::{antipode_involution_check, axiom_check, pairing_check, HopfAlgebra};
use heisdouble::instances::quasi::r_to_h;
use heisdouble::instances::sym::{cartan_chi, h_n};
use heisdouble::instances::{
    DividedPowers, NSym, NilcoxeterPair, Polynomial, PowerSumPair, QSym, QuasiPair, Sym, SymBasis, SymPair,
};
use heisdouble::lincomb::LinComb;
use heisdouble::report::Report;
use num_bigint::BigInt;
use num_traits::{One, Zero};

const D: usize = 6;

fn assert_passed(r: Report) {
    assert!(r.passed(), "{}: {:?}", r.suite, r.failures.first());
}

#[test]
fn hopf_axioms_all_instances() {
    assert_passed(axiom_check(Sym::shared(), D));
    assert_passed(axiom_check(QSym::shared(), D));
    assert_passed(axiom_check(NSym::shared(), D));
    assert_passed(axiom_check(&DividedPowers, D));
    assert_passed(axiom_check(&Polynomial, D));
}

#[test]
fn antipodes_are_involutions() {
    assert_passed(antipode_involution_check(Sym::shared(), D));
    assert_passed(antipode_involution_check(QSym::shared(), D));
    assert_passed(antipode_involution_check(NSym::shared(), D));
}

#[test]
fn dual_pairs() {
    assert_passed(pairing_check(SymPair::shared(), D));
    assert_passed(pairing_check(QuasiPair::shared(), D));
    assert_passed(pairing_check(NilcoxeterPair::shared(), D));
    for ell in [2, 3] {
        assert_passed(pairing_check(&PowerSumPair::quotient(ell), D));
    }
}

fn el(b: Basis, idx: &[usize]) -> GradedElement<BigInt> {
    GradedElement::basis_element(b, idx.to_vec()).unwrap()
}

#[test]
fn ribbons_dual_to_fundamentals() {
    for d in 0..=D {
        for a in compositions(d) {
            for b in compositions(d) {
                let v = pair(&el(Basis::R, a.parts()), &el(Basis::F, b.parts())).unwrap();
                assert_eq!(v, BigInt::from((a == b) as u8), "{a} {b}");
            }
        }
    }
}

#[test]
fn schur_self_dual() {
    let s = Basis::Sym(SymBasis::S);
    for d in 0..=D {
        for l in partitions(d) {
            for m in partitions(d) {
                let v = pair(&el(s, l.parts()), &el(s, m.parts())).unwrap();
                assert_eq!(v, BigInt::from((l == m) as u8), "{l:?} {m:?}");
            }
        }
    }
}

#[test]
fn ribbon_refinement_direction() {
    let r = r_to_h(&Composition::new(vec![1, 1]).unwrap());
    let mut expect = LinComb::basis(Composition::new(vec![1, 1]).unwrap());
    expect.add_term(Composition::new(vec![2]).unwrap(), -BigInt::one());
    assert_eq!(r, expect);
}

type SymElt = LinComb<heisdouble::combinatorics::Partition, BigInt>;

/// Determinant by expansion along the first row, entries in Sym.
fn det(m: &[Vec<SymElt>]) -> SymElt {
    let n = m.len();
    if n == 0 {
        return Sym::shared().one();
    }
    let mut out = SymElt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SymElt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = Sym::shared().mul(&m[0][j], &det(&minor));
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_scaled(&term, &sign);
    }
    out
}

/// Ribbon Jacobi-Trudi: the image of 𝐫_α in Sym is the determinant with
/// entries h_{α_i + ... + α_j} on and above the diagonal, 1 just below it.
#[test]
fn ribbon_jacobi_trudi() {
    for d in 1..=D {
        for alpha in compositions(d) {
            let a = alpha.parts();
            let l = a.len();
            let m: Vec<Vec<SymElt>> = (0..l)
                .map(|i| {
                    (0..l)
                        .map(|j| {
                            if j >= i {
                                h_n(a[i..=j].iter().sum())
                            } else if j + 1 == i {
                                Sym::shared().one()
                            } else {
                                SymElt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            let r: LinComb<Composition, BigInt> = r_to_h(&alpha);
            assert_eq!(cartan_chi(&r), det(&m), "{alpha}");
        }
    }
}

/// Expands M_γ in `n` commuting variables: exponent vector to coefficient.
fn expand(gamma: &Composition, n: usize) -> BTreeMap<Vec<usize>, BigInt> {
    fn go(parts: &[usize], from: usize, e: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, BigInt>) {
        let Some((&p, rest)) = parts.split_first() else {
            *out.entry(e.clone()).or_insert_with(BigInt::zero) += 1;
            return;
        };
        for i in from..e.len() {
            e[i] = p;
            go(rest, i + 1, e, out);
            e[i] = 0;
        }
    }
    let mut out = BTreeMap::new();
    go(gamma.parts(), 0, &mut vec![0; n], &mut out);
    out
}

fn poly_mul(a: &BTreeMap<Vec<usize>, BigInt>, b: &BTreeMap<Vec<usize>, BigInt>) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let e: Vec<usize> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn quasi_shuffle_matches_power_series() {
    let q = QSym::shared();
    for total in 0..=D {
        for i in 0..=total {
            for a in compositions(i) {
                for b in compositions(total - i) {
                    let n = total.max(1);
                    let prod = q.mul_basis(&a, &b);
                    let mut lhs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
                    for (g, c) in &prod {
                        for (e, v) in expand(g, n) {
                            *lhs.entry(e).or_insert_with(BigInt::zero) += c * v;
                        }
                    }
                    lhs.retain(|_, c| !c.is_zero());
                    assert_eq!(lhs, poly_mul(&expand(&a, n), &expand(&b, n)), "{a} * {b}");
                }
            }
        }
    }
}
