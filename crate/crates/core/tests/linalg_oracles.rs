use heisdouble::linalg::{hnf, kernel, smith, IntMatrix, IntegerLattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-6i64..=6, rows * cols).prop_map(move |v| IntMatrix::from_i64(rows, cols, &v).unwrap())
}

fn shapes() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors.
fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let rows: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect())
                .collect();
            let d = IntMatrix::from_rows(k, &rows).unwrap().det().unwrap();
            g = g.gcd(&d);
        }
    }
    g
}

proptest! {
    #[test]
    fn smith_invariants_are_minor_gcd_ratios(a in shapes()) {
        let inv = smith(&a).invariants;
        let mut prod = BigInt::from(1);
        for (k, d) in inv.iter().enumerate() {
            prod *= d;
            prop_assert_eq!(&prod, &minor_gcd(&a, k + 1));
            if k > 0 && !d.is_zero() {
                prop_assert!((d % &inv[k - 1]).is_zero());
            }
        }
    }

    #[test]
    fn smith_transforms(a in shapes()) {
        let s = smith(&a);
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.det().unwrap().abs() == BigInt::from(1));
        prop_assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(a.cols()));
    }

    #[test]
    fn hermite_round_trip(a in shapes()) {
        let (h, u) = hnf(&a);
        prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
        prop_assert!(u.det().unwrap().abs() == BigInt::from(1));
        // Same row lattice both ways.
        let la = IntegerLattice::from_matrix(&a);
        let lh = IntegerLattice::from_matrix(&h);
        prop_assert!(la.contains(&lh) && lh.contains(&la));
        prop_assert_eq!(la.rank(), a.rank());
    }

    #[test]
    fn kernel_is_left_annihilator(a in shapes()) {
        let k = kernel(&a);
        prop_assert_eq!(k.rank() + a.rank(), a.rows());
        for row in k.basis_rows() {
            prop_assert!(a.left_apply(&row).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert!(k.is_saturated());
    }
}

#[test]
fn smith_example() {
    let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]).unwrap();
    assert_eq!(smith(&a).invariants, vec![BigInt::from(2), BigInt::from(4)]);
}
