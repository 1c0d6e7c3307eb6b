//! The ideal `J_ℓ ⊂ Sym_ℚ` spanned by the `p_λ` with a part divisible by
//! `ℓ`, its orthogonal complement, and the Heisenberg double of the pair
//! `(Sym/J_ℓ, J_ℓ^⊥)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::combinatorics::{ell_regular_partitions, partitions, partitions_no_part_divisible, Partition};
use crate::error::{Error, Result};
use crate::heisenberg::{Checker, Double};
use crate::hopf::{DualPair, HopfAlgebra};
use crate::instances::sym::{to_monomial, SymBasis};
use crate::instances::{PowerSum, PowerSumPair, Role, SymPair};
use crate::lincomb::LinComb;
use crate::report::Report;

type PElt = LinComb<Partition, BigRational>;

fn check_ell(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::Usage(format!("ℓ must be at least 2, got {ell}")));
    }
    Ok(())
}

/// Power-sum indices of degree `n` split into a basis of `J_ℓ` and one of
/// `J_ℓ^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSplit {
    pub ideal: Vec<Partition>,
    pub perp: Vec<Partition>,
}

impl IdealSplit {
    pub fn to_json(&self) -> Value {
        let f = |v: &[Partition]| v.iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>();
        json!({"ideal_basis": f(&self.ideal), "perp_basis": f(&self.perp)})
    }
}

pub fn ideal_split(ell: usize, n: usize) -> Result<IdealSplit> {
    check_ell(ell)?;
    let (ideal, perp) = partitions(n).into_iter().partition(|l| l.has_part_divisible_by(ell));
    Ok(IdealSplit { ideal, perp })
}

/// `(#ℓ-regular partitions of n, #partitions of n with no part divisible by ℓ)`.
pub fn glaisher_counts(ell: usize, n: usize) -> Result<(usize, usize)> {
    check_ell(ell)?;
    Ok((
        ell_regular_partitions(n, ell).len(),
        partitions_no_part_divisible(n, ell).len(),
    ))
}

/// Orthogonality and dimension bookkeeping of the split, and the ideal
/// property of `J_ℓ`, in degrees `≤ max_degree`.
pub fn split_check(ell: usize, max_degree: usize) -> Result<Report> {
    check_ell(ell)?;
    let mut rep = Report::new(format!("ideal_split:{ell}"), max_degree);
    let full = PowerSumPair::full();
    let sym = PowerSum { role: Role::Full };
    let quot = PowerSum {
        role: Role::Quotient(ell),
    };
    let perp = PowerSum { role: Role::Perp(ell) };
    for n in 0..=max_degree {
        let s = ideal_split(ell, n)?;
        for i in &s.ideal {
            for j in &s.perp {
                let v = full.pair_basis(j, i);
                rep.check(v.is_zero(), || "J_ℓ ⊥ J_ℓ^⊥".into(), || json!([i.parts(), j.parts()]));
            }
        }
        rep.check(
            s.ideal.len() + s.perp.len() == partitions(n).len(),
            || format!("dim J_ℓ + dim J_ℓ^⊥ = p({n})"),
            || s.to_json(),
        );
        rep.check(
            quot.basis(n).len() == perp.basis(n).len(),
            || format!("dim (Sym/J_ℓ)_{n} = dim (J_ℓ^⊥)_{n}"),
            || json!(n),
        );
        for i in &s.ideal {
            for m in 1..=6 {
                let prod = sym.mul_basis(&Partition::from_parts_unchecked(vec![m]), i);
                rep.check(
                    prod.keys().all(|k| k.has_part_divisible_by(ell)),
                    || format!("p_{m} J_ℓ ⊆ J_ℓ"),
                    || json!(i.parts()),
                );
            }
        }
    }
    Ok(rep)
}

/// `[p_m*, q_n] = m δ_{mn}` together with `[q_m, q_n] = 0` and
/// `[p_m*, p_n*] = 0` for `m, n ≤ max_degree` prime to `ℓ`, both in the
/// double and on the quotient Fock space.
pub fn quotient_heisenberg_check(ell: usize, max_degree: usize) -> Result<Report> {
    check_ell(ell)?;
    let pair = PowerSumPair::quotient(ell);
    let dbl = Double::new(&pair);
    let mut rep = Report::new(format!("rootofunity:{ell}"), max_degree);
    let mut ck = Checker {
        rep: &mut rep,
        max_degree,
    };
    let gen = |n: usize| -> PElt { LinComb::basis(Partition::from_parts_unchecked(vec![n])) };
    let allowed: Vec<usize> = (1..=max_degree).filter(|n| n % ell != 0).collect();
    for &m in &allowed {
        for &n in &allowed {
            let c = dbl.commutator(&dbl.minus(&gen(m)), &dbl.plus(&gen(n)))?;
            let rhs = if m == n {
                dbl.one().scale(&BigRational::from_integer(BigInt::from(m)))
            } else {
                dbl.zero()
            };
            ck.relation(&dbl, || format!("[p_{m}*, q_{n}] = {m}δ"), &c, &rhs, n);
            let c = dbl.commutator(&dbl.plus(&gen(m)), &dbl.plus(&gen(n)))?;
            ck.relation(&dbl, || format!("[q_{m}, q_{n}] = 0"), &c, &dbl.zero(), m + n);
            let c = dbl.commutator(&dbl.minus(&gen(m)), &dbl.minus(&gen(n)))?;
            ck.relation(&dbl, || format!("[p_{m}*, p_{n}*] = 0"), &c, &dbl.zero(), 0);
        }
    }
    Ok(rep)
}

/// `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ` recomputed through the m/h pairing of Sym.
pub fn z_cross_check(max_degree: usize) -> Report {
    let mut rep = Report::new("z_lambda", max_degree);
    let sym = SymPair::shared();
    for n in 0..=max_degree {
        let ps: Vec<(Partition, PElt)> = partitions(n)
            .into_iter()
            .map(|l| {
                let m = to_monomial(SymBasis::P, &LinComb::basis(l.clone())).expect("rational p basis");
                (l, m)
            })
            .collect();
        for (l, pl) in &ps {
            for (mu, pm) in &ps {
                let v = sym.pair(pl, pm);
                let expect = if l == mu {
                    BigRational::from_integer(l.z_factor())
                } else {
                    BigRational::zero()
                };
                rep.check(
                    v == expect,
                    || "⟨p_λ, p_μ⟩ = δ z_λ".into(),
                    || json!([l.parts(), mu.parts()]),
                );
            }
        }
    }
    rep
}

/// Glaisher's equality for every `n ≤ max_n` and `2 ≤ ℓ ≤ max_ell`.
pub fn glaisher_check(max_n: usize, max_ell: usize) -> Report {
    let mut rep = Report::new("glaisher", max_n);
    for ell in 2..=max_ell {
        for n in 0..=max_n {
            let (a, b) = glaisher_counts(ell, n).expect("ℓ ≥ 2");
            rep.check(a == b, || format!("Glaisher ℓ = {ell}, n = {n}"), || json!([a, b]));
        }
    }
    rep
}

/// Everything above for one `ℓ`, as served by the command line.
pub fn rootofunity_suite(ell: usize, max_degree: usize) -> Result<Report> {
    let mut rep = quotient_heisenberg_check(ell, max_degree)?;
    rep.absorb(split_check(ell, max_degree)?);
    rep.absorb(z_cross_check(max_degree));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn split_examples() {
        let s = ideal_split(2, 2).unwrap();
        assert_eq!(s.ideal, vec![p(&[2])]);
        assert_eq!(s.perp, vec![p(&[1, 1])]);
        let s = ideal_split(3, 2).unwrap();
        assert!(s.ideal.is_empty());
        assert_eq!(s.perp.len(), 2);
        let s = ideal_split(2, 4).unwrap();
        let mut ideal = s.ideal.clone();
        ideal.sort();
        let mut expect = vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1])];
        expect.sort();
        assert_eq!(ideal, expect);
        let mut perp = s.perp.clone();
        perp.sort();
        let mut expect = vec![p(&[3, 1]), p(&[1, 1, 1, 1])];
        expect.sort();
        assert_eq!(perp, expect);
        assert!(matches!(ideal_split(1, 3), Err(Error::Usage(_))));
    }

    #[test]
    fn glaisher_examples() {
        assert_eq!(glaisher_counts(2, 5).unwrap(), (3, 3));
        assert_eq!(glaisher_counts(2, 1).unwrap(), (1, 1));
        let (a, b) = glaisher_counts(3, 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn power_sum_pairing_examples() {
        let full = PowerSumPair::full();
        assert_eq!(full.pair_basis(&p(&[1, 1]), &p(&[1, 1])), BigInt::from(2));
        assert!(full.pair_basis(&p(&[2]), &p(&[1, 1])).is_zero());
        assert!(z_cross_check(5).passed());
    }

    #[test]
    fn small_quotient_doubles() {
        for ell in [2, 3] {
            let r = rootofunity_suite(ell, 4).unwrap();
            assert!(r.passed(), "{:?}", r.failures.first());
        }
    }
}
