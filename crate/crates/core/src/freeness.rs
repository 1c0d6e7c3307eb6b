//! QSym is a free Sym-module: the filtration `QS^{(n)}`, the vacuum vectors
//! of its subquotients, and a certified ℤ-basis `{m_λ · g}` degree by degree.
//!
//! Everything happens in M-coordinates of `QSym_d`, indexed by
//! `compositions(d)` in canonical order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinatorics::{compositions, partitions, Composition};
use crate::error::{domain, Error, Result};
use crate::hopf::{element_json, HopfAlgebra};
use crate::instances::sym::m_to_qsym;
use crate::instances::QSym;
use crate::linalg::{kernel, smith, IntMatrix, IntegerLattice, Quotient};
use crate::lincomb::LinComb;
use crate::report::Report;

type Vector = Vec<BigInt>;

/// Canonical M-basis of each degree with a reverse index.
struct Coords {
    bases: Vec<Vec<Composition>>,
    index: Vec<BTreeMap<Composition, usize>>,
}

impl Coords {
    fn new(max_degree: usize) -> Self {
        let bases: Vec<Vec<Composition>> = (0..=max_degree).map(compositions).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        Coords { bases, index }
    }

    fn dim(&self, d: usize) -> usize {
        self.bases[d].len()
    }

    fn to_vector(&self, d: usize, u: &LinComb<Composition, BigInt>) -> Vector {
        let mut v = vec![BigInt::zero(); self.dim(d)];
        for (k, c) in u {
            v[self.index[d][k]] = c.clone();
        }
        v
    }

    fn to_element(&self, d: usize, v: &[BigInt]) -> LinComb<Composition, BigInt> {
        v.iter()
            .enumerate()
            .map(|(i, c)| (self.bases[d][i].clone(), c.clone()))
            .collect()
    }

    /// `e_k · v`, with `e_k = M_{1^k}`.
    fn mul_e(&self, k: usize, d: usize, v: &[BigInt]) -> Vector {
        let e = LinComb::basis(Composition::new(vec![1; k]).expect("positive parts"));
        let prod = QSym::shared().mul(&e, &self.to_element(d, v));
        self.to_vector(d + k, &prod)
    }

    /// `𝐡_k*(v)`: chops a last part equal to `k`.
    fn skew_h(&self, k: usize, d: usize, v: &[BigInt]) -> Vector {
        let mut out = vec![BigInt::zero(); self.dim(d - k)];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let alpha = &self.bases[d][i];
            if alpha.last() == Some(k) {
                let head = alpha.without_last().expect("nonempty");
                out[self.index[d - k][&head]] += c;
            }
        }
        out
    }
}

/// `QS^{(n)}_d` for every level `n` and degree `d` up to a bound.
pub struct Filtration {
    max_degree: usize,
    coords: Coords,
    /// `levels[n][d]`.
    levels: Vec<Vec<IntegerLattice>>,
}

/// One lattice `QS^{(n)}_d ⊆ ℤ^{compositions(d)}`.
#[derive(Clone, Debug)]
pub struct FiltrationPiece {
    pub level: usize,
    pub degree: usize,
    pub lattice: IntegerLattice,
}

impl Filtration {
    /// Closes `{M_α : ℓ(α) ≤ n}` under `e_k ·` and `𝐡_k*` inside degrees
    /// `≤ max_degree`, for each `n ≤ max_degree`.
    pub fn new(max_degree: usize) -> Result<Self> {
        let coords = Coords::new(max_degree);
        let mut levels = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let seeds: Vec<Vec<Vector>> = (0..=max_degree)
                .map(|d| {
                    coords.bases[d]
                        .iter()
                        .filter(|a| a.len() <= n)
                        .map(|a| coords.to_vector(d, &LinComb::basis(a.clone())))
                        .collect()
                })
                .collect();
            levels.push(close(&coords, max_degree, seeds)?);
        }
        Ok(Filtration {
            max_degree,
            coords,
            levels,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `QS^{(n)}_d`; levels above `d` all equal `QSym_d`.
    pub fn piece(&self, n: usize, d: usize) -> &IntegerLattice {
        &self.levels[n.min(self.max_degree)][d]
    }

    /// `QS^{(n−1)}_d`, with `QS^{(−1)} = 0`.
    fn lower(&self, n: usize, d: usize) -> IntegerLattice {
        if n == 0 {
            IntegerLattice::zero(self.coords.dim(d))
        } else {
            self.piece(n - 1, d).clone()
        }
    }

    /// `V_n(d) = QS^{(n)}_d / QS^{(n−1)}_d`, which must be free.
    pub fn subquotient(&self, n: usize, d: usize) -> Result<Quotient> {
        let q = self.piece(n, d).quotient(&self.lower(n, d))?;
        if !q.is_free() {
            return Err(Error::Torsion {
                level: n,
                degree: d,
                invariants: q.torsion(),
            });
        }
        Ok(q)
    }

    /// Lifts of a ℤ-basis of the vacuum vectors of `V_n` in degree `d`: the
    /// joint kernel of the induced `𝐡_k* : V_n(d) → V_n(d−k)`, `1 ≤ k ≤ d`.
    /// The kernel basis is Hermite-normal and each lift is reduced modulo
    /// `QS^{(n−1)}_d`, with a positive leading coefficient.
    pub fn vacuum_vectors(&self, n: usize, d: usize) -> Result<Vec<Vector>> {
        let q = self.subquotient(n, d)?;
        let reps = &q.representatives;
        if reps.is_empty() {
            return Ok(Vec::new());
        }
        let mut columns: Vec<Vec<BigInt>> = vec![Vec::new(); reps.len()];
        for k in 1..=d {
            let target = self.subquotient(n, d - k)?;
            for (i, r) in reps.iter().enumerate() {
                let s = self.coords.skew_h(k, d, r);
                let class = target
                    .class_of(&s)
                    .ok_or_else(|| Error::Domain(format!("𝐡_{k}* leaves QS^({n}) in degree {d}")))?;
                columns[i].extend(class);
            }
        }
        let width = columns[0].len();
        let kern = if width == 0 {
            IntegerLattice::full(reps.len())
        } else {
            kernel(&IntMatrix::from_rows(width, &columns)?)
        };
        let lower = self.lower(n, d);
        let mut out = Vec::new();
        for c in kern.basis_rows() {
            let mut v = vec![BigInt::zero(); self.coords.dim(d)];
            for (ci, r) in c.iter().zip(reps) {
                for (vk, rk) in v.iter_mut().zip(r) {
                    *vk += ci * rk;
                }
            }
            let mut v = lower.reduce(&v);
            if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                v.iter_mut().for_each(|x| *x = -x.clone());
            }
            out.push(v);
        }
        Ok(out)
    }

    pub fn element(&self, d: usize, v: &[BigInt]) -> LinComb<Composition, BigInt> {
        self.coords.to_element(d, v)
    }
}

fn close(coords: &Coords, max_degree: usize, seeds: Vec<Vec<Vector>>) -> Result<Vec<IntegerLattice>> {
    let mut lat: Vec<IntegerLattice> = seeds
        .iter()
        .enumerate()
        .map(|(d, s)| IntegerLattice::from_generators(coords.dim(d), s))
        .collect::<Result<_>>()?;
    loop {
        let mut pending: Vec<Vec<Vector>> = vec![Vec::new(); max_degree + 1];
        for d in 0..=max_degree {
            for v in lat[d].basis_rows() {
                for k in 1..=max_degree - d {
                    let w = coords.mul_e(k, d, &v);
                    if !lat[d + k].member(&w) {
                        pending[d + k].push(w);
                    }
                }
                for k in 1..=d {
                    let w = coords.skew_h(k, d, &v);
                    if !lat[d - k].member(&w) {
                        pending[d - k].push(w);
                    }
                }
            }
        }
        if pending.iter().all(Vec::is_empty) {
            return Ok(lat);
        }
        for (d, extra) in pending.into_iter().enumerate() {
            if !extra.is_empty() {
                let mut rows = lat[d].basis_rows();
                rows.extend(extra);
                lat[d] = IntegerLattice::from_generators(coords.dim(d), &rows)?;
            }
        }
    }
}

/// `QS^{(n)}_d` on its own.
pub fn filtration_piece(n: usize, d: usize) -> Result<FiltrationPiece> {
    let f = Filtration::new(d.max(n).max(1))?;
    Ok(FiltrationPiece {
        level: n,
        degree: d,
        lattice: f.piece(n, d).clone(),
    })
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub degree: usize,
    pub level: usize,
    pub element: LinComb<Composition, BigInt>,
}

/// Generators `g` such that `{m_λ g : |λ| + deg g = d}` is a ℤ-basis of
/// `QSym_d` for every `d ≤ max_degree`, with the determinants proving it.
#[derive(Clone, Debug)]
pub struct FreeBasisCertificate {
    pub max_degree: usize,
    pub generators: Vec<Generator>,
    pub counts: Vec<usize>,
    pub determinants: Vec<BigInt>,
    /// `m_λ · g` in M-coordinates, one square matrix per degree.
    pub matrices: Vec<IntMatrix>,
}

impl FreeBasisCertificate {
    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|g| json!({"degree": g.degree, "level": g.level, "element": element_json("QSym", "M", &g.element)}))
            .collect();
        json!({
            "max_degree": self.max_degree,
            "counts": self.counts,
            "determinants": self.determinants.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "generators": gens,
        })
    }
}

/// Rows `m_λ · g` for all generators of degree `≤ d` in M-coordinates of
/// degree `d`.
fn certificate_rows(coords: &Coords, gens: &[Generator], d: usize) -> Vec<Vector> {
    let q = QSym::shared();
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| g.degree <= d) {
        for lambda in partitions(d - g.degree) {
            let prod = q.mul(&m_to_qsym(&lambda), &g.element);
            rows.push(coords.to_vector(d, &prod));
        }
    }
    rows
}

/// Builds the generators from the vacuum vectors of every `V_n` and checks
/// unimodularity in each degree.
pub fn free_generators(max_degree: usize) -> Result<FreeBasisCertificate> {
    let filt = Filtration::new(max_degree)?;
    free_generators_from(&filt)
}

pub fn free_generators_from(filt: &Filtration) -> Result<FreeBasisCertificate> {
    let max_degree = filt.max_degree;
    let mut generators = Vec::new();
    let mut counts = Vec::new();
    let mut determinants = Vec::new();
    let mut matrices = Vec::new();
    for d in 0..=max_degree {
        let before = generators.len();
        for n in 0..=d {
            for v in filt.vacuum_vectors(n, d)? {
                generators.push(Generator {
                    degree: d,
                    level: n,
                    element: filt.element(d, &v),
                });
            }
        }
        counts.push(generators.len() - before);
        let rows = certificate_rows(&filt.coords, &generators, d);
        let dim = filt.coords.dim(d);
        if rows.len() != dim {
            let m = IntMatrix::from_rows(dim, &rows)?;
            return Err(Error::NotUnimodular {
                degree: d,
                invariants: smith(&m).invariants,
            });
        }
        let m = IntMatrix::from_rows(dim, &rows)?;
        let det = m.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular {
                degree: d,
                invariants: smith(&m).invariants,
            });
        }
        determinants.push(det);
        matrices.push(m);
    }
    Ok(FreeBasisCertificate {
        max_degree,
        generators,
        counts,
        determinants,
        matrices,
    })
}

/// Coefficients of `(1 + Σ_{d≥1} 2^{d−1} t^d) / Σ_d p(d) t^d` up to `t^D`,
/// by exact power-series division.
pub fn hilbert_series_counts(max_degree: usize) -> Vec<BigInt> {
    let num: Vec<BigInt> = (0..=max_degree)
        .map(|d| {
            if d == 0 {
                BigInt::one()
            } else {
                BigInt::one() << (d - 1)
            }
        })
        .collect();
    let den: Vec<BigInt> = (0..=max_degree).map(|d| BigInt::from(partitions(d).len())).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let mut c = num[d].clone();
        for (i, o) in out.iter().enumerate() {
            c -= o * &den[d - i];
        }
        // den[0] = 1.
        out.push(c);
    }
    out
}

/// Generator counts against the series quotient, plus the rank checks.
pub fn hilbert_check(max_degree: usize) -> Result<Report> {
    let cert = free_generators(max_degree)?;
    let mut rep = Report::new("hilbert", max_degree);
    hilbert_into(&mut rep, &cert, max_degree);
    Ok(rep)
}

fn hilbert_into(rep: &mut Report, cert: &FreeBasisCertificate, max_degree: usize) {
    let expect = hilbert_series_counts(max_degree);
    for d in 0..=max_degree {
        rep.check(
            BigInt::from(cert.counts[d]) == expect[d],
            || format!("generator count in degree {d} matches the series quotient"),
            || json!({"degree": d, "found": cert.counts[d], "expected": expect[d].to_string()}),
        );
        let q = compositions(d).len();
        let want = if d == 0 { 1 } else { 1usize << (d - 1) };
        rep.check(q == want, || format!("rank QSym_{d} = 2^(d−1)"), || json!(q));
        let s = QSym::shared()
            .basis(d)
            .iter()
            .filter(|a| a.is_partition_shaped())
            .count();
        rep.check(
            s == partitions(d).len(),
            || format!("rank Sym_{d} = p({d})"),
            || json!(s),
        );
    }
}

/// The checks behind the certificate: filtration monotonicity, exhaustion
/// and stability, torsion-freeness of every `V_n`, unimodularity, the
/// Hilbert series, and a direct independence spot check.
pub fn freeness_report(max_degree: usize) -> Result<(Report, FreeBasisCertificate)> {
    let filt = Filtration::new(max_degree)?;
    let mut rep = Report::new("freeness", max_degree);
    let coords = &filt.coords;
    for d in 0..=max_degree {
        rep.check(
            filt.piece(0, d).rank() == partitions(d).len(),
            || format!("QS^(0)_{d} = Sym_{d}"),
            || json!(filt.piece(0, d).rank()),
        );
        rep.check(
            filt.piece(d, d).rank() == coords.dim(d),
            || format!("QS^({d})_{d} = QSym_{d}"),
            || json!(filt.piece(d, d).rank()),
        );
        for n in 0..=d {
            if n > 0 {
                rep.check(
                    filt.piece(n, d).contains(filt.piece(n - 1, d)),
                    || format!("QS^({})_{d} ⊆ QS^({n})_{d}", n - 1),
                    || json!([n, d]),
                );
            }
            let stable = filt.piece(n, d).basis_rows().iter().all(|v| {
                (1..=max_degree - d).all(|k| filt.piece(n, d + k).member(&coords.mul_e(k, d, v)))
                    && (1..=d).all(|k| filt.piece(n, d - k).member(&coords.skew_h(k, d, v)))
            });
            rep.check(stable, || format!("QS^({n}) is stable in degree {d}"), || json!([n, d]));
            let q = filt.piece(n, d).quotient(&filt.lower(n, d))?;
            rep.check(
                q.is_free(),
                || format!("V_{n} is torsion-free in degree {d}"),
                || json!(q.torsion().iter().map(|t| t.to_string()).collect::<Vec<_>>()),
            );
        }
    }
    let cert = free_generators_from(&filt)?;
    for (d, det) in cert.determinants.iter().enumerate() {
        rep.check(
            det.abs().is_one(),
            || format!("det = ±1 in degree {d}"),
            || json!(det.to_string()),
        );
    }
    hilbert_into(&mut rep, &cert, max_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (d, m) in cert.matrices.iter().enumerate() {
        for _ in 0..10 {
            let c: Vec<BigInt> = (0..m.rows()).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect();
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let v = m.left_apply(&c)?;
            rep.check(
                v.iter().any(|x| !x.is_zero()),
                || format!("Sym-combination of generators vanishes in degree {d}"),
                || json!(c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            );
        }
    }
    Ok((rep, cert))
}

/// The closed form `QS^{(n)}_d = span{e_λ M_γ : ℓ(γ) ≤ n, |λ| + |γ| = d}`.
pub fn closed_form_piece(n: usize, d: usize) -> Result<IntegerLattice> {
    let coords = Coords::new(d);
    let q = QSym::shared();
    let mut rows = Vec::new();
    for g in 0..=d {
        for gamma in compositions(g).into_iter().filter(|c| c.len() <= n) {
            for lambda in partitions(d - g) {
                let mut e: LinComb<Composition, BigInt> = LinComb::basis(Composition::empty());
                for &part in lambda.parts() {
                    e = q.mul(&e, &LinComb::basis(Composition::new(vec![1; part]).expect("positive")));
                }
                let prod = q.mul(&e, &LinComb::basis(gamma.clone()));
                rows.push(coords.to_vector(d, &prod));
            }
        }
    }
    if rows.is_empty() {
        return domain("no spanning vectors");
    }
    IntegerLattice::from_generators(coords.dim(d), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_examples() {
        assert_eq!(filtration_piece(0, 3).unwrap().lattice.rank(), 3);
        assert_eq!(filtration_piece(1, 1).unwrap().lattice.rank(), 1);
        for d in 1..=3 {
            assert_eq!(filtration_piece(d, d).unwrap().lattice.rank(), 1 << (d - 1));
        }
    }

    #[test]
    fn vacuum_examples() {
        let f = Filtration::new(3).unwrap();
        // M_(1) = m_(1) already lies in Sym, so V_1 vanishes in degree 1.
        assert!(f.vacuum_vectors(1, 1).unwrap().is_empty());
        assert!(f.vacuum_vectors(1, 2).unwrap().is_empty());
        assert_eq!(f.vacuum_vectors(0, 0).unwrap().len(), 1);
        for n in 1..=3 {
            assert!(f.vacuum_vectors(n, 0).unwrap().is_empty());
        }
    }

    #[test]
    fn series_quotient() {
        let c: Vec<i64> = hilbert_series_counts(6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 0, 0, 1, 2, 5, 9]);
        assert_eq!(hilbert_series_counts(0), vec![BigInt::one()]);
    }

    #[test]
    fn small_certificates() {
        let c = free_generators(2).unwrap();
        assert_eq!(c.counts, vec![1, 0, 0]);
        let c = free_generators(4).unwrap();
        assert_eq!(c.counts, vec![1, 0, 0, 1, 2]);
        assert!(c.determinants.iter().all(|d| d.abs().is_one()));
        assert!(hilbert_check(4).unwrap().passed());
    }
}
