//! Quasisymmetric functions (M basis) and noncommutative symmetric
//! functions (complete basis 𝐡), with their fundamental and ribbon bases.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{compositions, partitions, Composition};
use crate::hopf::{DualPair, HopfAlgebra, Memo};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::Scalar;

type Comb = LinComb<Composition, BigInt>;

fn sign(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[derive(Default)]
pub struct QSym {
    products: Memo<(Composition, Composition), Comb>,
    antipodes: Memo<Composition, Comb>,
}

impl QSym {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance; its caches are shared by every caller.
    pub fn shared() -> &'static QSym {
        static CELL: OnceLock<QSym> = OnceLock::new();
        CELL.get_or_init(QSym::new)
    }

    /// `M_α · M_β` by the three-way recursion on leading parts.
    pub fn quasi_shuffle(&self, a: &Composition, b: &Composition) -> Comb {
        if a.is_empty() {
            return LinComb::basis(b.clone());
        }
        if b.is_empty() {
            return LinComb::basis(a.clone());
        }
        // The product is commutative; memoize on the ordered pair.
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.products.get_or_insert_with(&key, || {
            let (x, xs) = a.parts().split_first().expect("nonempty");
            let (y, ys) = b.parts().split_first().expect("nonempty");
            let xs = Composition::from_parts_unchecked(xs.to_vec());
            let ys = Composition::from_parts_unchecked(ys.to_vec());
            let mut out = LinComb::zero();
            let mut prepend = |head: usize, tail: Comb| {
                for (g, c) in tail.into_terms() {
                    let mut parts = vec![head];
                    parts.extend_from_slice(g.parts());
                    out.add_term(Composition::from_parts_unchecked(parts), c);
                }
            };
            prepend(*x, self.quasi_shuffle(&xs, b));
            prepend(*y, self.quasi_shuffle(a, &ys));
            prepend(x + y, self.quasi_shuffle(&xs, &ys));
            out
        })
    }
}

impl HopfAlgebra for QSym {
    type Key = Composition;

    fn name(&self) -> String {
        "QSym".into()
    }

    fn basis_name(&self) -> &'static str {
        "M"
    }

    fn basis(&self, d: usize) -> Vec<Composition> {
        compositions(d)
    }

    fn one_key(&self) -> Composition {
        Composition::empty()
    }

    fn mul_basis(&self, a: &Composition, b: &Composition) -> Comb {
        self.quasi_shuffle(a, b)
    }

    /// Deconcatenation.
    fn coproduct_basis(&self, a: &Composition) -> Tensor<Composition, Composition, BigInt> {
        a.deconcatenations().map(|t| (t, BigInt::one())).collect()
    }

    fn antipode_cache(&self) -> Option<&Memo<Composition, Comb>> {
        Some(&self.antipodes)
    }
}

#[derive(Default)]
pub struct NSym {
    antipodes: Memo<Composition, Comb>,
}

impl NSym {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shared() -> &'static NSym {
        static CELL: OnceLock<NSym> = OnceLock::new();
        CELL.get_or_init(NSym::new)
    }
}

impl HopfAlgebra for NSym {
    type Key = Composition;

    fn name(&self) -> String {
        "NSym".into()
    }

    fn basis_name(&self) -> &'static str {
        "nh"
    }

    fn basis(&self, d: usize) -> Vec<Composition> {
        compositions(d)
    }

    fn one_key(&self) -> Composition {
        Composition::empty()
    }

    /// `𝐡_α 𝐡_β = 𝐡_{α·β}`.
    fn mul_basis(&self, a: &Composition, b: &Composition) -> Comb {
        LinComb::basis(a.concat(b))
    }

    /// `Δ𝐡_n = Σ 𝐡_i ⊗ 𝐡_{n-i}`, extended multiplicatively.
    fn coproduct_basis(&self, a: &Composition) -> Tensor<Composition, Composition, BigInt> {
        let mut acc: Tensor<Composition, Composition, BigInt> =
            LinComb::basis((Composition::empty(), Composition::empty()));
        for &p in a.parts() {
            let mut next = LinComb::zero();
            for ((l, r), c) in &acc {
                for i in 0..=p {
                    let l2 = if i == 0 { l.clone() } else { l.concat(&single(i)) };
                    let r2 = if i == p { r.clone() } else { r.concat(&single(p - i)) };
                    next.add_term((l2, r2), c.clone());
                }
            }
            acc = next;
        }
        acc
    }

    fn antipode_cache(&self) -> Option<&Memo<Composition, Comb>> {
        Some(&self.antipodes)
    }
}

fn single(n: usize) -> Composition {
    Composition::from_parts_unchecked(vec![n])
}

/// The pair `(NSym, QSym)` with `⟨𝐡_α, M_β⟩ = δ_{αβ}`.
pub struct QuasiPair;

impl QuasiPair {
    pub fn shared() -> &'static QuasiPair {
        &QuasiPair
    }
}

impl DualPair for QuasiPair {
    type Plus = QSym;
    type Minus = NSym;

    fn name(&self) -> String {
        "qsym".into()
    }

    fn plus(&self) -> &QSym {
        QSym::shared()
    }

    fn minus(&self) -> &NSym {
        NSym::shared()
    }

    fn pair_basis(&self, x: &Composition, a: &Composition) -> BigInt {
        BigInt::from(u8::from(x == a))
    }

    /// The image of the Cartan map is the embedded copy of Sym.
    fn in_projective_image<R: Scalar>(&self, a: &LinComb<Composition, R>) -> bool {
        is_symmetric(a)
    }

    fn projective_basis(&self, d: usize) -> Vec<Comb> {
        partitions(d).iter().map(crate::instances::sym::m_to_qsym).collect()
    }
}

/// True iff the M-coefficients only depend on the sorted index.
pub fn is_symmetric<R: Scalar>(a: &LinComb<Composition, R>) -> bool {
    a.iter().all(|(alpha, c)| {
        alpha
            .sort_to_partition()
            .rearrangements()
            .iter()
            .all(|beta| a.coeff(beta) == *c)
    })
}

/// `F_α = Σ_{β ⪯ α} M_β`.
pub fn f_to_m(alpha: &Composition) -> Comb {
    alpha.refinements().into_iter().map(|b| (b, BigInt::one())).collect()
}

/// `M_α = Σ_{β ⪯ α} (-1)^{ℓ(β)-ℓ(α)} F_β`.
pub fn m_to_f(alpha: &Composition) -> Comb {
    alpha
        .refinements()
        .into_iter()
        .map(|b| {
            let s = sign(b.len() - alpha.len());
            (b, s)
        })
        .collect()
}

/// `𝐫_α = Σ_{α ⪯ β} (-1)^{ℓ(α)-ℓ(β)} 𝐡_β`.
pub fn r_to_h(alpha: &Composition) -> Comb {
    alpha
        .coarsenings()
        .into_iter()
        .map(|b| {
            let s = sign(alpha.len() - b.len());
            (b, s)
        })
        .collect()
}

/// `𝐡_α = Σ_{α ⪯ β} 𝐫_β`.
pub fn h_to_r(alpha: &Composition) -> Comb {
    alpha.coarsenings().into_iter().map(|b| (b, BigInt::one())).collect()
}

/// `𝐫_α 𝐫_β = 𝐫_{α·β} + 𝐫_{α⊙β}`, the second term only when both are nonempty.
pub fn ribbon_mul(a: &Composition, b: &Composition) -> Comb {
    let mut out = LinComb::basis(a.concat(b));
    if let Ok(n) = a.near_concat(b) {
        out.add_term(n, BigInt::one());
    }
    out
}

/// `Δ F_α = Σ F_β ⊗ F_γ` over `α = β·γ` and `α = β⊙γ`.
pub fn f_coproduct(alpha: &Composition) -> Tensor<Composition, Composition, BigInt> {
    let mut out = LinComb::zero();
    for (b, c) in alpha.deconcatenations() {
        out.add_term((b, c), BigInt::one());
    }
    for (i, &p) in alpha.parts().iter().enumerate() {
        for j in 1..p {
            let mut left = alpha.parts()[..i].to_vec();
            left.push(j);
            let mut right = vec![p - j];
            right.extend_from_slice(&alpha.parts()[i + 1..]);
            out.add_term(
                (
                    Composition::from_parts_unchecked(left),
                    Composition::from_parts_unchecked(right),
                ),
                BigInt::one(),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{axiom_check, pairing_check};

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn terms(v: &[(&[usize], i64)]) -> Comb {
        v.iter().map(|(p, k)| (c(p), BigInt::from(*k))).collect()
    }

    #[test]
    fn quasi_shuffle_examples() {
        let q = QSym::new();
        assert_eq!(q.quasi_shuffle(&c(&[]), &c(&[2, 1])), terms(&[(&[2, 1], 1)]));
        assert_eq!(q.quasi_shuffle(&c(&[1]), &c(&[1])), terms(&[(&[1, 1], 2), (&[2], 1)]));
        assert_eq!(
            q.quasi_shuffle(&c(&[1]), &c(&[2])),
            terms(&[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
    }

    #[test]
    fn coproduct_examples() {
        let q = QSym::new();
        let d = q.coproduct_basis(&c(&[1, 2]));
        assert_eq!(d.len(), 3);
        assert!(d.coeff(&(c(&[1]), c(&[2]))).is_one());
        let f = f_coproduct(&c(&[2]));
        assert_eq!(f.len(), 3);
        assert!(f.coeff(&(c(&[1]), c(&[1]))).is_one());
        assert_eq!(q.coproduct_basis(&c(&[])), LinComb::basis((c(&[]), c(&[]))));
        let n = NSym::new();
        let d = n.coproduct_basis(&c(&[2]));
        assert_eq!(d.len(), 3);
        assert!(d.coeff(&(c(&[1]), c(&[1]))).is_one());
        assert!(d.coeff(&(c(&[]), c(&[2]))).is_one());
    }

    #[test]
    fn nsym_products() {
        let n = NSym::new();
        assert_eq!(n.mul_basis(&c(&[1]), &c(&[2])), terms(&[(&[1, 2], 1)]));
        assert_eq!(
            ribbon_mul(&c(&[1, 2, 1]), &c(&[3, 5])),
            terms(&[(&[1, 2, 1, 3, 5], 1), (&[1, 2, 4, 5], 1)])
        );
        assert_eq!(ribbon_mul(&c(&[]), &c(&[2])), terms(&[(&[2], 1)]));
    }

    #[test]
    fn ribbon_direction_regression() {
        // 𝐫_{(1,1)} = 𝐡_{(1,1)} − 𝐡_{(2)}; the opposite direction would give 𝐡_{(1,1)} alone.
        assert_eq!(r_to_h(&c(&[1, 1])), terms(&[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(f_to_m(&c(&[2])), terms(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn conversions_are_mutually_inverse() {
        for d in 0..=7 {
            for a in compositions(d) {
                let back = f_to_m(&a).map_linear(m_to_f);
                assert_eq!(back, LinComb::basis(a.clone()));
                let back = m_to_f(&a).map_linear(f_to_m);
                assert_eq!(back, LinComb::basis(a.clone()));
                let back = r_to_h(&a).map_linear(h_to_r);
                assert_eq!(back, LinComb::basis(a.clone()));
            }
        }
    }

    #[test]
    fn ribbon_product_matches_conversion() {
        let n = NSym::new();
        for i in 0..=3 {
            for j in 0..=3 {
                for a in compositions(i) {
                    for b in compositions(j) {
                        let via_h = n.mul(&r_to_h(&a), &r_to_h(&b));
                        let direct = ribbon_mul(&a, &b).map_linear(r_to_h);
                        assert_eq!(via_h, direct, "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn f_coproduct_matches_conversion() {
        let q = QSym::new();
        for d in 0..=5 {
            for a in compositions(d) {
                let via_m = q.coproduct(&f_to_m(&a));
                let direct = f_coproduct(&a).map_linear(|(b, g)| {
                    let mut out = LinComb::zero();
                    for (x, s) in &f_to_m(b) {
                        for (y, t) in &f_to_m(g) {
                            out.add_term((x.clone(), y.clone()), s * t);
                        }
                    }
                    out
                });
                assert_eq!(via_m, direct, "{a}");
            }
        }
    }

    #[test]
    fn closed_form_antipode() {
        // S(M_α) = (-1)^{ℓ(α)} Σ_{rev(α) ⪯ β} M_β.
        let q = QSym::new();
        for d in 0..=5 {
            for a in compositions(d) {
                let mut rev = a.parts().to_vec();
                rev.reverse();
                let rev = c(&rev);
                let expect: Comb = rev.coarsenings().into_iter().map(|b| (b, sign(a.len()))).collect();
                assert_eq!(q.antipode_basis(&a), expect, "{a}");
            }
        }
    }

    #[test]
    fn axioms_small() {
        assert!(axiom_check(&QSym::new(), 4).passed());
        assert!(axiom_check(&NSym::new(), 4).passed());
        assert!(pairing_check(QuasiPair::shared(), 4).passed());
    }

    #[test]
    fn symmetric_detection() {
        assert!(is_symmetric(&terms(&[(&[2, 1], 1), (&[1, 2], 1)])));
        assert!(!is_symmetric(&terms(&[(&[2, 1], 1)])));
    }
}
