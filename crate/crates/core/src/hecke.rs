//! Hecke-like algebras `A_n(c, d)`: generators `T_1 … T_{n-1}` with the braid
//! relations and `T_i² = c T_i + d`, in the basis `T_w`, `w ∈ S_n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinatorics::Permutation;
use crate::error::{domain, Error, Result};
use crate::linalg::rational_det;
use crate::lincomb::LinComb;
use crate::report::Report;
use crate::scalar::{binomial, encode_rational, factorial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeckeParams {
    pub c: BigRational,
    pub d: BigRational,
}

impl HeckeParams {
    pub fn new(c: BigRational, d: BigRational) -> Self {
        HeckeParams { c, d }
    }

    pub fn nilcoxeter() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn zero_hecke() -> Self {
        Self::new(-BigRational::one(), BigRational::zero())
    }

    /// `c = q − 1`, `d = q`.
    pub fn hecke(q: BigRational) -> Self {
        Self::new(q.clone() - BigRational::one(), q)
    }

    /// Nilcoxeter, 0-Hecke, and the Hecke algebra at `q = 3`.
    pub fn standard() -> Vec<(&'static str, HeckeParams)> {
        vec![
            ("nilcoxeter", Self::nilcoxeter()),
            ("0-Hecke", Self::zero_hecke()),
            ("Hecke q=3", Self::hecke(BigRational::from_integer(BigInt::from(3)))),
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({"c": encode_rational(&self.c), "d": encode_rational(&self.d)})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    params: HeckeParams,
    terms: LinComb<Permutation, BigRational>,
}

impl HeckeElement {
    /// Fails if some permutation has the wrong rank.
    pub fn new(rank: usize, params: HeckeParams, terms: LinComb<Permutation, BigRational>) -> Result<Self> {
        if let Some(w) = terms.keys().find(|w| w.rank() != rank) {
            return domain(format!("T_{w} does not live in A_{rank}"));
        }
        Ok(HeckeElement { rank, params, terms })
    }

    pub fn one(rank: usize, params: &HeckeParams) -> Self {
        Self::basis(params, Permutation::identity(rank))
    }

    pub fn basis(params: &HeckeParams, w: Permutation) -> Self {
        HeckeElement {
            rank: w.rank(),
            params: params.clone(),
            terms: LinComb::basis(w),
        }
    }

    /// `T_i` in `A_n`.
    pub fn generator(n: usize, params: &HeckeParams, i: usize) -> Result<Self> {
        Ok(Self::basis(params, Permutation::generator(n, i)?))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    pub fn terms(&self) -> &LinComb<Permutation, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return domain(format!("ranks differ: {} and {}", self.rank, other.rank));
        }
        if self.params != other.params {
            return domain("parameters differ");
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.with_terms(&self.terms + &other.terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.with_terms(&self.terms - &other.terms))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        self.with_terms(self.terms.scale(s))
    }

    fn with_terms(&self, terms: LinComb<Permutation, BigRational>) -> Self {
        HeckeElement {
            rank: self.rank,
            params: self.params.clone(),
            terms,
        }
    }

    /// `u · T_i`: `T_w T_i = T_{ws_i}` if `ws_i` is longer, else
    /// `c T_w + d T_{ws_i}`.
    pub fn mul_generator(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.rank {
            return domain(format!("no generator T_{i} in A_{}", self.rank));
        }
        let mut out = LinComb::zero();
        for (w, a) in &self.terms {
            let ws = w.right_mul_generator(i)?;
            if w.right_ascent(i) {
                out.add_term(ws, a.clone());
            } else {
                out.add_term(w.clone(), a.clone() * self.params.c.clone());
                out.add_term(ws, a.clone() * self.params.d.clone());
            }
        }
        Ok(self.with_terms(out))
    }

    /// `u · v`, expanding each `T_w` of `v` along its lex-least reduced word.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_along(other, Permutation::reduced_word)
    }

    /// `u · v` along a caller-chosen reduced word for each `T_w`.
    pub fn mul_along(&self, other: &Self, word: impl Fn(&Permutation) -> Vec<usize>) -> Result<Self> {
        self.compatible(other)?;
        let mut out = LinComb::zero();
        for (w, b) in &other.terms {
            let mut acc = self.clone();
            for i in word(w) {
                acc = acc.mul_generator(i)?;
            }
            out.add_scaled(&acc.terms, b);
        }
        Ok(self.with_terms(out))
    }

    /// Product of `T_{i₁} ⋯ T_{i_r}`.
    pub fn word(n: usize, params: &HeckeParams, word: &[usize]) -> Result<Self> {
        let mut acc = Self::one(n, params);
        for &i in word {
            acc = acc.mul_generator(i)?;
        }
        Ok(acc)
    }

    /// The Frobenius trace `λ(T_w) = δ_{w, w₀}`.
    pub fn trace(&self) -> BigRational {
        self.terms.coeff(&Permutation::longest(self.rank))
    }

    /// The Nakayama automorphism, `T_i ↦ T_{n−i}`.
    pub fn nakayama(&self) -> Result<Self> {
        let n = self.rank;
        let mut out = LinComb::zero();
        for (w, a) in &self.terms {
            let word: Vec<usize> = w.reduced_word().into_iter().map(|i| n - i).collect();
            out.add_scaled(&Self::word(n, &self.params, &word)?.terms, a);
        }
        Ok(self.with_terms(out))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, a)| json!({"perm": w.one_line(), "coeff": encode_rational(a)}))
            .collect();
        json!({"rank": self.rank, "params": self.params.to_json(), "terms": terms})
    }
}

/// `λ(T_u T_v)` over `u, v ∈ S_n` in lexicographic order.
pub fn gram_matrix(n: usize, params: &HeckeParams) -> Result<Vec<Vec<BigRational>>> {
    let perms = Permutation::all(n);
    let mut rows = Vec::with_capacity(perms.len());
    for u in &perms {
        let tu = HeckeElement::basis(params, u.clone());
        let mut row = Vec::with_capacity(perms.len());
        for v in &perms {
            row.push(tu.mul(&HeckeElement::basis(params, v.clone()))?.trace());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `ρ_{m,n}(u ⊗ v)`: `v` is shifted past the first `m` strands.
pub fn external_embed(u: &HeckeElement, v: &HeckeElement) -> Result<HeckeElement> {
    if u.params != v.params {
        return domain("parameters differ");
    }
    let (m, n) = (u.rank, v.rank);
    let total = m + n;
    let lift_u = HeckeElement::new(
        total,
        u.params.clone(),
        u.terms.iter().map(|(w, a)| (w.shifted(0, total), a.clone())).collect(),
    )?;
    let mut out = LinComb::zero();
    for (w, b) in &v.terms {
        let word: Vec<usize> = w.reduced_word().into_iter().map(|i| i + m).collect();
        let mut acc = lift_u.clone();
        for i in word {
            acc = acc.mul_generator(i)?;
        }
        out.add_scaled(&acc.terms, b);
    }
    Ok(lift_u.with_terms(out))
}

/// `ρ` on a tensor of several factors, left to right.
pub fn external_embed_all(factors: &[HeckeElement]) -> Result<HeckeElement> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::Usage("no factors".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| external_embed(&acc, f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub r: usize,
    pub representative: Vec<usize>,
    pub cardinality: BigInt,
}

impl DoubleCoset {
    pub fn to_json(&self) -> Value {
        json!({"r": self.r, "representative": self.representative, "cardinality": self.cardinality.to_string()})
    }
}

fn check_cosets_params(k: usize, l: usize, n: usize, m: usize) -> Result<usize> {
    if k + l != n + m {
        return domain(format!("k + ℓ = {} but n + m = {}", k + l, n + m));
    }
    Ok(k + l)
}

/// `w_r` for the double coset `(S_k × S_ℓ) w (S_n × S_m)` with
/// `|w({1..n}) ∩ {1..k}| = r`.
pub fn coset_representative(k: usize, l: usize, n: usize, m: usize, r: usize) -> Result<Permutation> {
    let total = check_cosets_params(k, l, n, m)?;
    let lo = n.saturating_sub(l);
    if r < lo || r > n.min(k) {
        return domain(format!("r = {r} outside [{lo}, {}]", n.min(k)));
    }
    let w: Vec<usize> = (1..=total)
        .map(|i| {
            if i <= r {
                i
            } else if i <= n {
                i - r + k
            } else if i <= n + k - r {
                i - n + r
            } else {
                i
            }
        })
        .collect();
    Permutation::new(w)
}

/// Every double coset with its minimal representative and `m!·n!·C(k,r)·C(ℓ,n−r)`.
pub fn double_cosets(k: usize, l: usize, n: usize, m: usize) -> Result<Vec<DoubleCoset>> {
    check_cosets_params(k, l, n, m)?;
    let mut out = Vec::new();
    for r in n.saturating_sub(l)..=n.min(k) {
        let w = coset_representative(k, l, n, m, r)?;
        let card = factorial(m as u64)
            * factorial(n as u64)
            * binomial(k as u64, r as u64)
            * binomial(l as u64, (n - r) as u64);
        out.push(DoubleCoset {
            r,
            representative: w.one_line().to_vec(),
            cardinality: card,
        });
    }
    Ok(out)
}

fn coset_invariant(w: &Permutation, k: usize, n: usize) -> usize {
    (1..=n).filter(|&i| w.apply(i) <= k).count()
}

/// Partitions `S_N` into double cosets by orbit closure and compares with
/// [`double_cosets`]: sizes, the invariant `r`, and minimality of `w_r`.
pub fn verify_double_cosets(k: usize, l: usize, n: usize, m: usize) -> Result<Report> {
    let total = check_cosets_params(k, l, n, m)?;
    let mut rep = Report::new(format!("double_cosets:{k},{l},{n},{m}"), total);
    let cosets = double_cosets(k, l, n, m)?;
    let mut sum = BigInt::zero();
    let mut seen: BTreeMap<Permutation, usize> = BTreeMap::new();
    for dc in &cosets {
        let w = Permutation::new(dc.representative.clone())?;
        // Orbit under left S_k×S_ℓ (values) and right S_n×S_m (positions).
        let mut orbit = vec![w.clone()];
        let mut members: BTreeMap<Permutation, ()> = BTreeMap::new();
        members.insert(w.clone(), ());
        while let Some(u) = orbit.pop() {
            for i in 1..total {
                let mut next = Vec::new();
                if i != k {
                    next.push(u.left_mul_generator(i)?);
                }
                if i != n {
                    next.push(u.right_mul_generator(i)?);
                }
                for v in next {
                    if members.insert(v.clone(), ()).is_none() {
                        orbit.push(v);
                    }
                }
            }
        }
        let ok_size = BigInt::from(members.len()) == dc.cardinality;
        rep.check(
            ok_size,
            || format!("|C_{}| = m!n!C(k,r)C(ℓ,n−r)", dc.r),
            || json!({"r": dc.r, "orbit": members.len()}),
        );
        let all_r = members.keys().all(|u| coset_invariant(u, k, n) == dc.r);
        rep.check(
            all_r,
            || format!("C_{} is the set with invariant r", dc.r),
            || json!(dc.r),
        );
        let minimal = members.keys().all(|u| u.length() > w.length() || *u == w);
        rep.check(
            minimal,
            || format!("w_{} is the unique shortest element of C_{}", dc.r, dc.r),
            || json!(dc.representative),
        );
        for u in members.keys() {
            *seen.entry(u.clone()).or_default() += 1;
        }
        sum += &dc.cardinality;
    }
    rep.check(
        sum == factorial(total as u64),
        || "Σ|C_r| = N!".into(),
        || json!(sum.to_string()),
    );
    rep.check(
        seen.len() == Permutation::all(total).len() && seen.values().all(|&c| c == 1),
        || "the double cosets partition S_N".into(),
        || json!(seen.len()),
    );
    Ok(rep)
}

/// All parameter tuples `(k, ℓ, n, m)` with `k + ℓ = n + m = N`.
pub fn coset_parameters(total: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 0..=total {
        for n in 0..=total {
            out.push((k, total - k, n, total - n));
        }
    }
    out
}

/// `T_{w_r} ρ(a₁⊗a₂⊗a₃⊗a₄) = ρ(a₁⊗a₃⊗a₂⊗a₄) T_{w_r}` for every `r` and every
/// tuple of basis elements `T_w` of `A_r × A_{n−r} × A_{k−r} × A_{ℓ+r−n}`.
pub fn verify_twr_commutation(k: usize, l: usize, n: usize, m: usize, params: &HeckeParams) -> Result<Report> {
    let total = check_cosets_params(k, l, n, m)?;
    let mut rep = Report::new(format!("twr:{k},{l},{n},{m}"), total);
    for r in n.saturating_sub(l)..=n.min(k) {
        let w = coset_representative(k, l, n, m, r)?;
        let tw = HeckeElement::basis(params, w);
        let sizes = [r, n - r, k - r, l + r - n];
        let bases: Vec<Vec<HeckeElement>> = sizes
            .iter()
            .map(|&s| {
                Permutation::all(s)
                    .into_iter()
                    .map(|p| HeckeElement::basis(params, p))
                    .collect()
            })
            .collect();
        for a1 in &bases[0] {
            for a2 in &bases[1] {
                for a3 in &bases[2] {
                    for a4 in &bases[3] {
                        let lhs = tw.mul(&external_embed_all(&[a1.clone(), a2.clone(), a3.clone(), a4.clone()])?)?;
                        let rhs = external_embed_all(&[a1.clone(), a3.clone(), a2.clone(), a4.clone()])?.mul(&tw)?;
                        rep.check(
                            lhs == rhs,
                            || format!("T_w{r} intertwines the middle factors"),
                            || json!([a1.to_json(), a2.to_json(), a3.to_json(), a4.to_json()]),
                        );
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// The structural checks on `A_n` for every `n ≤ max_rank` and every
/// standard parameter set.
pub fn hecke_suite(max_rank: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("hecke", max_rank);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (label, params) in HeckeParams::standard() {
        for n in 1..=max_rank {
            let perms = Permutation::all(n);
            rep.check(
                BigInt::from(perms.len()) == factorial(n as u64),
                || format!("{label}: A_{n} has n! basis elements"),
                || json!(n),
            );
            // Closure: right multiplication by generators stays in rank n.
            for w in &perms {
                for i in 1..n {
                    let p = HeckeElement::basis(&params, w.clone()).mul_generator(i)?;
                    rep.check(
                        p.terms.keys().all(|u| u.rank() == n),
                        || format!("{label}: T_w T_{i} stays in A_{n}"),
                        || json!(w.one_line()),
                    );
                }
            }
            // Quadratic relation and invertibility dichotomy.
            for i in 1..n {
                let ti = HeckeElement::generator(n, &params, i)?;
                let one = HeckeElement::one(n, &params);
                let shifted = ti.sub(&one.scale(&params.c))?;
                let prod = ti.mul(&shifted)?;
                if params.d.is_zero() {
                    rep.check(
                        prod.is_zero(),
                        || format!("{label}: T_{i}(T_{i} − c) = 0"),
                        || prod.to_json(),
                    );
                } else {
                    let inv = prod.scale(&(BigRational::one() / params.d.clone()));
                    rep.check(
                        inv == one,
                        || format!("{label}: T_{i}(T_{i} − c)/d = 1"),
                        || prod.to_json(),
                    );
                }
            }
            if n <= 5 {
                for _ in 0..20 {
                    let u = random_element(&mut rng, n, &params);
                    let v = random_element(&mut rng, n, &params);
                    let a = u.mul(&v)?;
                    let b = u.mul_along(&v, Permutation::alternate_reduced_word)?;
                    rep.check(
                        a == b,
                        || format!("{label}: product is independent of the reduced word"),
                        || json!([u.to_json(), v.to_json()]),
                    );
                }
            }
            if n <= 4 {
                let w0 = Permutation::longest(n);
                rep.check(
                    HeckeElement::basis(&params, w0).trace().is_one(),
                    || format!("{label}: λ(T_w0) = 1"),
                    || json!(n),
                );
                for w in &perms {
                    let tw = HeckeElement::basis(&params, w.clone());
                    for i in 1..n {
                        let l = tw.mul_generator(i)?.trace();
                        let r = HeckeElement::generator(n, &params, n - i)?.mul(&tw)?.trace();
                        rep.check(
                            l == r,
                            || format!("{label}: λ(T_w T_{i}) = λ(T_{} T_w)", n - i),
                            || json!(w.one_line()),
                        );
                    }
                }
                let g = gram_matrix(n, &params)?;
                rep.check(
                    !rational_det(&g).is_zero(),
                    || format!("{label}: Gram matrix of A_{n} is nonsingular"),
                    || json!(n),
                );
                for i in 1..n {
                    let ti = HeckeElement::generator(n, &params, i)?;
                    rep.check(
                        ti.nakayama()? == HeckeElement::generator(n, &params, n - i)?,
                        || format!("{label}: ψ(T_{i}) = T_{}", n - i),
                        || json!(n),
                    );
                }
                for _ in 0..20 {
                    let u = random_element(&mut rng, n, &params);
                    let v = random_element(&mut rng, n, &params);
                    let lhs = u.mul(&v)?.nakayama()?;
                    let rhs = u.nakayama()?.mul(&v.nakayama()?)?;
                    rep.check(
                        lhs == rhs,
                        || format!("{label}: ψ is multiplicative"),
                        || json!([u.to_json(), v.to_json()]),
                    );
                    rep.check(
                        u.nakayama()?.nakayama()? == u,
                        || format!("{label}: ψ² = id"),
                        || u.to_json(),
                    );
                }
            }
        }
    }
    Ok(rep)
}

/// A random element with up to three terms and small integer coefficients.
pub fn random_element(rng: &mut impl Rng, n: usize, params: &HeckeParams) -> HeckeElement {
    let perms = Permutation::all(n);
    let mut terms = LinComb::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        terms.add_term(w, BigRational::from_integer(BigInt::from(rng.gen_range(-3..=3))));
    }
    HeckeElement {
        rank: n,
        params: params.clone(),
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn quadratic_relation() {
        let nil = HeckeParams::nilcoxeter();
        let t1 = HeckeElement::generator(2, &nil, 1).unwrap();
        assert!(t1.mul(&t1).unwrap().is_zero());
        let h = HeckeParams::hecke(q(3));
        let t1 = HeckeElement::generator(2, &h, 1).unwrap();
        let expect = t1.scale(&q(2)).add(&HeckeElement::one(2, &h).scale(&q(3))).unwrap();
        assert_eq!(t1.mul(&t1).unwrap(), expect);
        let t1 = HeckeElement::generator(3, &h, 1).unwrap();
        let t2 = HeckeElement::generator(3, &h, 2).unwrap();
        let s12 = Permutation::from_word(3, &[1, 2]).unwrap();
        assert_eq!(t1.mul(&t2).unwrap(), HeckeElement::basis(&h, s12));
    }

    #[test]
    fn mismatches_are_domain_errors() {
        let nil = HeckeParams::nilcoxeter();
        let a = HeckeElement::one(2, &nil);
        let b = HeckeElement::one(3, &nil);
        assert!(matches!(a.mul(&b), Err(Error::Domain(_))));
        let c = HeckeElement::one(2, &HeckeParams::zero_hecke());
        assert!(matches!(a.mul(&c), Err(Error::Domain(_))));
    }

    #[test]
    fn frobenius_examples() {
        let nil = HeckeParams::nilcoxeter();
        assert!(HeckeElement::basis(&nil, Permutation::longest(3)).trace().is_one());
        assert!(HeckeElement::one(3, &nil).trace().is_zero());
        let t1 = HeckeElement::generator(3, &nil, 1).unwrap();
        assert_eq!(t1.nakayama().unwrap(), HeckeElement::generator(3, &nil, 2).unwrap());
        let g = gram_matrix(3, &nil).unwrap();
        let d = rational_det(&g);
        assert!(d == q(1) || d == q(-1));
    }

    #[test]
    fn embedding_examples() {
        let nil = HeckeParams::nilcoxeter();
        let one1 = HeckeElement::one(1, &nil);
        assert_eq!(external_embed(&one1, &one1).unwrap(), HeckeElement::one(2, &nil));
        let t1 = HeckeElement::generator(2, &nil, 1).unwrap();
        assert_eq!(
            external_embed(&t1, &one1).unwrap(),
            HeckeElement::generator(3, &nil, 1).unwrap()
        );
        let one2 = HeckeElement::one(2, &nil);
        assert_eq!(
            external_embed(&one2, &t1).unwrap(),
            HeckeElement::generator(4, &nil, 3).unwrap()
        );
        let zero = HeckeElement::one(0, &nil);
        assert_eq!(external_embed(&zero, &t1).unwrap(), t1);
    }

    #[test]
    fn coset_examples() {
        let c = double_cosets(1, 1, 1, 1).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].representative, vec![2, 1]);
        assert_eq!(c[1].representative, vec![1, 2]);
        assert!(c.iter().all(|x| x.cardinality == BigInt::one()));
        let c = double_cosets(2, 1, 2, 1).unwrap();
        let s: BigInt = c.iter().map(|x| x.cardinality.clone()).sum();
        assert_eq!(s, BigInt::from(6));
        let c = double_cosets(3, 0, 3, 0).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].representative, vec![1, 2, 3]);
        assert!(double_cosets(2, 1, 1, 1).is_err());
    }

    #[test]
    fn small_suites() {
        assert!(hecke_suite(3, 1).unwrap().passed());
        for (k, l, n, m) in coset_parameters(3) {
            assert!(verify_double_cosets(k, l, n, m).unwrap().passed());
            for (_, p) in HeckeParams::standard() {
                assert!(verify_twr_commutation(k, l, n, m, &p).unwrap().passed());
            }
        }
    }
}
