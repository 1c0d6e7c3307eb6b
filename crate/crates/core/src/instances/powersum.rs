//! Sym in power-sum coordinates, and the quotient pair
//! `(Sym/J_ℓ, J_ℓ^⊥)` where `J_ℓ` is spanned by the `p_λ` having some part
//! divisible by `ℓ`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{partitions, partitions_no_part_divisible, Partition};
use crate::hopf::{DualPair, HopfAlgebra};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// All of Sym, basis `p_λ`.
    Full,
    /// `Sym/J_ℓ`, basis `q_λ = p_λ + J_ℓ`.
    Quotient(usize),
    /// `J_ℓ^⊥`, basis `p_λ` with no part divisible by `ℓ`.
    Perp(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct PowerSum {
    pub role: Role,
}

impl PowerSum {
    fn admits(&self, l: &Partition) -> bool {
        match self.role {
            Role::Full => true,
            Role::Quotient(e) | Role::Perp(e) => !l.has_part_divisible_by(e),
        }
    }
}

/// All sub-multisets `μ ⊆ λ` with the multiplicity weight `Π C(m_i(λ), m_i(μ))`.
pub fn submultisets(lambda: &Partition) -> Vec<(Partition, Partition, BigInt)> {
    let mult = lambda.multiplicities();
    let mut out = vec![(Vec::new(), Vec::new(), BigInt::from(1))];
    for &(part, m) in &mult {
        let mut next = Vec::new();
        for (l, r, w) in &out {
            for k in 0..=m {
                let mut l2: Vec<usize> = l.clone();
                l2.extend(std::iter::repeat(part).take(k));
                let mut r2: Vec<usize> = r.clone();
                r2.extend(std::iter::repeat(part).take(m - k));
                next.push((l2, r2, w * binomial(m as u64, k as u64)));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r, w)| {
            (
                Partition::from_parts_unchecked(l),
                Partition::from_parts_unchecked(r),
                w,
            )
        })
        .collect()
}

impl HopfAlgebra for PowerSum {
    type Key = Partition;

    fn name(&self) -> String {
        match self.role {
            Role::Full => "Sym".into(),
            Role::Quotient(e) => format!("Sym/J{e}"),
            Role::Perp(e) => format!("J{e}perp"),
        }
    }

    fn basis_name(&self) -> &'static str {
        match self.role {
            Role::Quotient(_) => "q",
            _ => "p",
        }
    }

    fn basis(&self, d: usize) -> Vec<Partition> {
        match self.role {
            Role::Full => partitions(d),
            Role::Quotient(e) | Role::Perp(e) => partitions_no_part_divisible(d, e),
        }
    }

    fn one_key(&self) -> Partition {
        Partition::empty()
    }

    /// `p_λ p_μ = p_{λ∪μ}`. On the quotient a product landing in `J_ℓ`
    /// vanishes; with admissible factors this never happens.
    fn mul_basis(&self, a: &Partition, b: &Partition) -> LinComb<Partition, BigInt> {
        let u = a.union(b);
        if self.admits(&u) {
            LinComb::basis(u)
        } else {
            LinComb::zero()
        }
    }

    /// Every `p_n` is primitive.
    fn coproduct_basis(&self, a: &Partition) -> Tensor<Partition, Partition, BigInt> {
        submultisets(a).into_iter().map(|(l, r, w)| ((l, r), w)).collect()
    }
}

/// `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`, either on all of Sym or between `J_ℓ^⊥` and
/// `Sym/J_ℓ` by pairing against coset representatives.
#[derive(Clone, Copy, Debug)]
pub struct PowerSumPair {
    pub ell: Option<usize>,
    plus: PowerSum,
    minus: PowerSum,
}

impl PowerSumPair {
    pub fn full() -> Self {
        PowerSumPair {
            ell: None,
            plus: PowerSum { role: Role::Full },
            minus: PowerSum { role: Role::Full },
        }
    }

    pub fn quotient(ell: usize) -> Self {
        PowerSumPair {
            ell: Some(ell),
            plus: PowerSum {
                role: Role::Quotient(ell),
            },
            minus: PowerSum { role: Role::Perp(ell) },
        }
    }
}

impl DualPair for PowerSumPair {
    type Plus = PowerSum;
    type Minus = PowerSum;

    fn name(&self) -> String {
        match self.ell {
            None => "powersum".into(),
            Some(e) => format!("rootofunity{e}"),
        }
    }

    fn plus(&self) -> &PowerSum {
        &self.plus
    }

    fn minus(&self) -> &PowerSum {
        &self.minus
    }

    fn pair_basis(&self, x: &Partition, a: &Partition) -> BigInt {
        if x == a {
            x.z_factor()
        } else {
            BigInt::zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{axiom_check, pairing_check};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let full = PowerSum { role: Role::Full };
        assert_eq!(full.mul_basis(&p(&[2]), &p(&[1])), LinComb::basis(p(&[2, 1])));
        let pr = PowerSumPair::full();
        assert_eq!(pr.pair_basis(&p(&[1, 1]), &p(&[1, 1])), BigInt::from(2));
        assert!(pr.pair_basis(&p(&[2]), &p(&[1, 1])).is_zero());
        let d = full.coproduct_basis(&p(&[1, 1]));
        assert_eq!(d.coeff(&(p(&[1]), p(&[1]))), BigInt::from(2));
    }

    #[test]
    fn quotient_pairs_are_hopf_pairings() {
        for ell in [2, 3] {
            let pr = PowerSumPair::quotient(ell);
            assert!(axiom_check(pr.plus(), 4).passed());
            assert!(pairing_check(&pr, 4).passed());
        }
    }
}
