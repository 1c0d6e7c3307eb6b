//! The Heisenberg double `𝔥(H⁺, H⁻)`: normal-form products `a # x`, the
//! lowest-weight Fock space on `H⁺`, the highest-weight Fock space on `H⁻`,
//! and the commutator suites.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinatorics::{compositions, partitions, Composition, Partition};
use crate::error::{domain, Error, Result};
use crate::hopf::{antipode_involution_check, basis_json, element_json, lift, BasisKey, DualPair, HopfAlgebra};
use crate::instances::quasi::f_to_m;
use crate::instances::sym::{e_n, h_n, m_to_qsym, p_n, sym_as_qsym};
use crate::instances::{NilcoxeterPair, QuasiPair, SymPair};
use crate::linalg::rational_inverse;
use crate::lincomb::{LinComb, Tensor};
use crate::report::Report;
use crate::scalar::{binomial, encode_rational, Scalar};

pub type PlusKey<P> = <<P as DualPair>::Plus as HopfAlgebra>::Key;
pub type MinusKey<P> = <<P as DualPair>::Minus as HopfAlgebra>::Key;

/// An element `Σ c · a # x` of a Heisenberg double, kept in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergElement<A: Ord, X: Ord, R> {
    pair: String,
    terms: Tensor<A, X, R>,
}

impl<A: BasisKey, X: BasisKey, R: Scalar> HeisenbergElement<A, X, R> {
    pub fn new(pair: impl Into<String>, terms: Tensor<A, X, R>) -> Self {
        HeisenbergElement {
            pair: pair.into(),
            terms,
        }
    }

    pub fn pair(&self) -> &str {
        &self.pair
    }

    pub fn terms(&self) -> &Tensor<A, X, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Sorted list of the degrees `deg a − deg x` that occur.
    pub fn degrees(&self) -> Vec<isize> {
        let mut out: Vec<isize> = self
            .terms
            .keys()
            .map(|(a, x)| a.degree() as isize - x.degree() as isize)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn same_pair(&self, other: &Self) -> Result<()> {
        if self.pair != other.pair {
            return domain(format!(
                "elements of different Heisenberg doubles ({} and {})",
                self.pair, other.pair
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_pair(other)?;
        Ok(Self::new(self.pair.clone(), &self.terms + &other.terms))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_pair(other)?;
        Ok(Self::new(self.pair.clone(), &self.terms - &other.terms))
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(self.pair.clone(), self.terms.scale(s))
    }

    /// The plus-part multiplying each minus basis element: `u = Σ_x a_x # x`.
    pub fn plus_parts(&self) -> BTreeMap<X, LinComb<A, R>> {
        let mut out: BTreeMap<X, LinComb<A, R>> = BTreeMap::new();
        for ((a, x), c) in &self.terms {
            out.entry(x.clone()).or_default().add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, x), c)| {
                json!({"plus": a.index(), "minus": x.index(), "coeff": encode_rational(&c.to_rational())})
            })
            .collect();
        json!({"pair": self.pair, "terms": terms})
    }
}

type Elt<P, R> = HeisenbergElement<PlusKey<P>, MinusKey<P>, R>;

/// `x*(a) = Σ ⟨x, a₂⟩ a₁` on basis elements.
pub fn skew_basis<P: DualPair>(p: &P, x: &MinusKey<P>, a: &PlusKey<P>) -> LinComb<PlusKey<P>, BigInt> {
    let mut out = LinComb::zero();
    if x.degree() > a.degree() {
        return out;
    }
    for ((a1, a2), c) in &p.plus().coproduct_basis(a) {
        if a2.degree() != x.degree() {
            continue;
        }
        let v = p.pair_basis(x, a2);
        if !v.is_zero() {
            out.add_term(a1.clone(), c * v);
        }
    }
    out
}

/// The left-regular action of `H⁻` on `H⁺`, extended bilinearly.
pub fn skew<P: DualPair, R: Scalar>(
    p: &P,
    x: &LinComb<MinusKey<P>, R>,
    a: &LinComb<PlusKey<P>, R>,
) -> LinComb<PlusKey<P>, R> {
    let mut out = LinComb::zero();
    for (xk, c) in x {
        for (ak, d) in a {
            out.add_scaled(&lift(&skew_basis(p, xk, ak)), &(c.clone() * d.clone()));
        }
    }
    out
}

/// The action of `H⁺` on `H⁻` used for the highest-weight Fock space:
/// `a ▷ y = Σ ⟨y₁, S(a)⟩ y₂`.
pub fn hw_plus_action<P: DualPair, R: Scalar>(
    p: &P,
    a: &LinComb<PlusKey<P>, R>,
    y: &LinComb<MinusKey<P>, R>,
) -> LinComb<MinusKey<P>, R> {
    let sa = p.plus().antipode(a);
    let mut out = LinComb::zero();
    for (yk, c) in y {
        for ((y1, y2), e) in &p.minus().coproduct_basis(yk) {
            let v = p.pair(&LinComb::basis(y1.clone()), &sa);
            if !v.is_zero() {
                out.add_term(y2.clone(), c.clone() * R::from_bigint(e.clone()) * v);
            }
        }
    }
    out
}

/// A handle on the Heisenberg double of one registered dual pair.
pub struct Double<'a, P: DualPair> {
    pair: &'a P,
}

impl<'a, P: DualPair> Double<'a, P> {
    pub fn new(pair: &'a P) -> Self {
        Double { pair }
    }

    pub fn dual_pair(&self) -> &P {
        self.pair
    }

    pub fn name(&self) -> String {
        self.pair.name()
    }

    pub fn element<R: Scalar>(&self, terms: Tensor<PlusKey<P>, MinusKey<P>, R>) -> Elt<P, R> {
        HeisenbergElement::new(self.pair.name(), terms)
    }

    pub fn one<R: Scalar>(&self) -> Elt<P, R> {
        self.element(LinComb::basis((
            self.pair.plus().one_key(),
            self.pair.minus().one_key(),
        )))
    }

    pub fn zero<R: Scalar>(&self) -> Elt<P, R> {
        self.element(LinComb::zero())
    }

    /// `a # 1`.
    pub fn plus<R: Scalar>(&self, a: &LinComb<PlusKey<P>, R>) -> Elt<P, R> {
        self.pure(a, &self.pair.minus().one())
    }

    /// `1 # x`.
    pub fn minus<R: Scalar>(&self, x: &LinComb<MinusKey<P>, R>) -> Elt<P, R> {
        self.pure(&self.pair.plus().one(), x)
    }

    /// `a # x`, already in normal form.
    pub fn pure<R: Scalar>(&self, a: &LinComb<PlusKey<P>, R>, x: &LinComb<MinusKey<P>, R>) -> Elt<P, R> {
        let mut t = LinComb::zero();
        for (ak, c) in a {
            for (xk, d) in x {
                t.add_term((ak.clone(), xk.clone()), c.clone() * d.clone());
            }
        }
        self.element(t)
    }

    fn owns<R: Scalar>(&self, u: &Elt<P, R>) -> Result<()> {
        if u.pair != self.pair.name() {
            return domain(format!(
                "element of the {} double used with the {} double",
                u.pair,
                self.pair.name()
            ));
        }
        Ok(())
    }

    /// `(a # x)(b # y) = Σ ⟨x₁, b₂⟩ a b₁ # x₂ y`.
    pub fn mul_basis(
        &self,
        a: &PlusKey<P>,
        x: &MinusKey<P>,
        b: &PlusKey<P>,
        y: &MinusKey<P>,
    ) -> Tensor<PlusKey<P>, MinusKey<P>, BigInt> {
        let (hp, hm) = (self.pair.plus(), self.pair.minus());
        let dx = hm.coproduct_basis(x);
        let db = hp.coproduct_basis(b);
        let mut out = LinComb::zero();
        for ((b1, b2), cb) in &db {
            for ((x1, x2), cx) in &dx {
                if x1.degree() != b2.degree() {
                    continue;
                }
                let v = self.pair.pair_basis(x1, b2);
                if v.is_zero() {
                    continue;
                }
                let w = cb * cx * v;
                let left = hp.mul_basis(a, b1);
                let right = hm.mul_basis(x2, y);
                for (l, e) in &left {
                    for (r, f) in &right {
                        out.add_term((l.clone(), r.clone()), &w * e * f);
                    }
                }
            }
        }
        out
    }

    pub fn mul<R: Scalar>(&self, u: &Elt<P, R>, v: &Elt<P, R>) -> Result<Elt<P, R>> {
        self.owns(u)?;
        self.owns(v)?;
        let mut out = LinComb::zero();
        for ((a, x), c) in &u.terms {
            for ((b, y), d) in &v.terms {
                out.add_scaled(&lift(&self.mul_basis(a, x, b, y)), &(c.clone() * d.clone()));
            }
        }
        Ok(self.element(out))
    }

    /// `uv − vu`.
    pub fn commutator<R: Scalar>(&self, u: &Elt<P, R>, v: &Elt<P, R>) -> Result<Elt<P, R>> {
        self.mul(u, v)?.checked_sub(&self.mul(v, u)?)
    }

    /// The lowest-weight Fock space: `(a # x)(b) = a · x*(b)`.
    pub fn fock_apply<R: Scalar>(&self, u: &Elt<P, R>, b: &LinComb<PlusKey<P>, R>) -> Result<LinComb<PlusKey<P>, R>> {
        self.owns(u)?;
        let hp = self.pair.plus();
        let mut out = LinComb::zero();
        for (x, a) in u.plus_parts() {
            let s = skew(self.pair, &LinComb::basis(x), b);
            if !s.is_zero() {
                out += &hp.mul(&a, &s);
            }
        }
        Ok(out)
    }

    /// The highest-weight Fock space on `H⁻`: minus parts multiply on the
    /// left, plus parts act through [`hw_plus_action`]. Only defined on the
    /// projective double, so every plus-part must lie in the Cartan image.
    pub fn hw_fock_apply<R: Scalar>(
        &self,
        u: &Elt<P, R>,
        y: &LinComb<MinusKey<P>, R>,
    ) -> Result<LinComb<MinusKey<P>, R>> {
        self.owns(u)?;
        let hm = self.pair.minus();
        let mut out = LinComb::zero();
        for (x, a) in u.plus_parts() {
            if !self.pair.in_projective_image(&a) {
                return domain(format!(
                    "plus-part {} is outside the projective image",
                    element_json(&self.pair.plus().name(), self.pair.plus().basis_name(), &a)
                ));
            }
            let xy = hm.mul(&LinComb::basis(x), y);
            out += &hw_plus_action(self.pair, &a, &xy);
        }
        Ok(out)
    }

    pub fn plus_json<R: Scalar>(&self, a: &LinComb<PlusKey<P>, R>) -> Value {
        let h = self.pair.plus();
        element_json(&h.name(), h.basis_name(), a)
    }

    pub fn minus_json<R: Scalar>(&self, x: &LinComb<MinusKey<P>, R>) -> Value {
        let h = self.pair.minus();
        element_json(&h.name(), h.basis_name(), x)
    }
}

/// Exact matrices of a homogeneous operator on a graded algebra, one block
/// per source degree. Columns follow the canonical basis order of the
/// source degree, rows that of the target degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTable<R> {
    pub max_degree: usize,
    pub shift: isize,
    pub blocks: Vec<(usize, Vec<Vec<R>>)>,
}

impl<R: Scalar> OperatorTable<R> {
    /// Tabulates `f` on every basis element of degree `≤ max_degree`.
    /// Fails if `f` is not homogeneous of degree `shift`.
    pub fn build<H: HopfAlgebra>(
        h: &H,
        max_degree: usize,
        shift: isize,
        mut f: impl FnMut(&H::Key) -> Result<LinComb<H::Key, R>>,
    ) -> Result<Self> {
        let mut blocks = Vec::new();
        for d in 0..=max_degree {
            let src = h.basis(d);
            let target = d as isize + shift;
            let tgt = if target >= 0 {
                h.basis(target as usize)
            } else {
                Vec::new()
            };
            let mut rows = vec![vec![R::zero(); src.len()]; tgt.len()];
            for (j, k) in src.iter().enumerate() {
                let img = f(k)?;
                for (t, c) in &img {
                    if t.degree() as isize != target {
                        return domain(format!("operator is not homogeneous of degree {shift}"));
                    }
                    let i = tgt
                        .binary_search(t)
                        .map_err(|_| Error::Domain("unknown basis key".into()))?;
                    rows[i][j] = c.clone();
                }
            }
            blocks.push((d, rows));
        }
        Ok(OperatorTable {
            max_degree,
            shift,
            blocks,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks
            .iter()
            .all(|(_, m)| m.iter().all(|r| r.iter().all(Zero::is_zero)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    SymEh,
    SymOther,
    SymP,
    QuasiM,
    QuasiF,
    QuasiSym,
    ProjPresentation,
    Weyl,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::SymEh,
        Suite::SymOther,
        Suite::SymP,
        Suite::QuasiM,
        Suite::QuasiF,
        Suite::QuasiSym,
        Suite::ProjPresentation,
        Suite::Weyl,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::SymEh => "sym_eh",
            Suite::SymOther => "sym_other",
            Suite::SymP => "sym_p",
            Suite::QuasiM => "quasi_M",
            Suite::QuasiF => "quasi_F",
            Suite::QuasiSym => "quasi_m",
            Suite::ProjPresentation => "proj_presentation",
            Suite::Weyl => "weyl",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

/// Checks one identity `lhs = rhs` symbolically, then as operators on the
/// lowest-weight Fock space: against every plus basis element `b` with
/// `plus_degree + deg b ≤ max_degree`.
pub(crate) struct Checker<'r> {
    pub(crate) rep: &'r mut Report,
    pub(crate) max_degree: usize,
}

impl Checker<'_> {
    pub(crate) fn relation<P: DualPair, R: Scalar>(
        &mut self,
        dbl: &Double<'_, P>,
        identity: impl Fn() -> String,
        lhs: &Elt<P, R>,
        rhs: &Elt<P, R>,
        plus_degree: usize,
    ) {
        let diff = lhs.checked_sub(rhs).expect("same double");
        self.rep
            .check(diff.is_zero(), || format!("{} (in 𝔥)", identity()), || diff.to_json());
        if plus_degree > self.max_degree {
            return;
        }
        for b in dbl.dual_pair().plus().basis_up_to(self.max_degree - plus_degree) {
            let eb = LinComb::basis(b.clone());
            let l = dbl.fock_apply(lhs, &eb).expect("same double");
            let r = dbl.fock_apply(rhs, &eb).expect("same double");
            let h = dbl.dual_pair().plus();
            self.rep.check(
                l == r,
                || format!("{} (on Fock space)", identity()),
                || basis_json(h, &b),
            );
        }
    }
}

fn comp(parts: Vec<usize>) -> Composition {
    Composition::new(parts).expect("positive parts")
}

fn nh(n: usize) -> LinComb<Composition, BigInt> {
    if n == 0 {
        LinComb::basis(Composition::empty())
    } else {
        LinComb::basis(comp(vec![n]))
    }
}

/// Runs one relation suite with generator degrees up to `max_degree`.
pub fn verify_relations(suite: Suite, max_degree: usize) -> Report {
    let mut rep = Report::new(suite.tag(), max_degree);
    let d = max_degree;
    match suite {
        Suite::SymEh | Suite::SymOther => {
            let dbl = Double::new(SymPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            for n in 1..=d {
                for k in 1..=d {
                    if suite == Suite::SymEh {
                        let (en, ek) = (dbl.plus(&e_n(n)), dbl.plus(&e_n(k)));
                        let c = dbl.commutator(&en, &ek).expect("same double");
                        ck.relation(&dbl, || format!("[e_{n}, e_{k}] = 0"), &c, &dbl.zero(), n + k);
                        let (hn, hk) = (dbl.minus(&h_n(n)), dbl.minus(&h_n(k)));
                        let c = dbl.commutator(&hn, &hk).expect("same double");
                        ck.relation(&dbl, || format!("[h_{n}*, h_{k}*] = 0"), &c, &dbl.zero(), 0);
                        let c = dbl
                            .commutator(&dbl.minus(&h_n(n)), &dbl.plus(&e_n(k)))
                            .expect("same double");
                        let rhs = dbl.pure(&e_n(k - 1), &h_n(n - 1));
                        ck.relation(
                            &dbl,
                            || format!("[h_{n}*, e_{k}] = e_{}h_{}*", k - 1, n - 1),
                            &c,
                            &rhs,
                            k,
                        );
                    } else {
                        let c = dbl
                            .commutator(&dbl.minus(&e_n(n)), &dbl.plus(&h_n(k)))
                            .expect("same double");
                        let rhs = dbl.pure(&h_n(k - 1), &e_n(n - 1));
                        ck.relation(
                            &dbl,
                            || format!("[e_{n}*, h_{k}] = h_{}e_{}*", k - 1, n - 1),
                            &c,
                            &rhs,
                            k,
                        );
                        let c = dbl
                            .commutator(&dbl.minus(&h_n(n)), &dbl.plus(&h_n(k)))
                            .expect("same double");
                        let mut rhs = dbl.zero();
                        for i in 1..=n.min(k) {
                            rhs = rhs
                                .checked_add(&dbl.pure(&h_n(k - i), &h_n(n - i)))
                                .expect("same double");
                        }
                        ck.relation(&dbl, || format!("[h_{n}*, h_{k}] = Σ h_(k-i) h_(n-i)*"), &c, &rhs, k);
                        let c = dbl
                            .commutator(&dbl.minus(&e_n(n)), &dbl.plus(&e_n(k)))
                            .expect("same double");
                        let mut rhs = dbl.zero();
                        for i in 1..=n.min(k) {
                            rhs = rhs
                                .checked_add(&dbl.pure(&e_n(k - i), &e_n(n - i)))
                                .expect("same double");
                        }
                        ck.relation(&dbl, || format!("[e_{n}*, e_{k}] = Σ e_(k-i) e_(n-i)*"), &c, &rhs, k);
                    }
                }
            }
        }
        Suite::SymP => {
            let dbl = Double::new(SymPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            let pq = |n: usize| -> LinComb<Partition, BigRational> { lift(&p_n(n)) };
            for n in 1..=d {
                for k in 1..=d {
                    let c = dbl
                        .commutator(&dbl.minus(&pq(n)), &dbl.plus(&pq(k)))
                        .expect("same double");
                    let rhs = if n == k {
                        dbl.one::<BigRational>()
                            .scale(&BigRational::from_integer(BigInt::from(n)))
                    } else {
                        dbl.zero()
                    };
                    ck.relation(&dbl, || format!("[p_{n}*, p_{k}] = {n}δ"), &c, &rhs, k);
                    let c = dbl
                        .commutator(&dbl.plus(&pq(n)), &dbl.plus(&pq(k)))
                        .expect("same double");
                    ck.relation(&dbl, || format!("[p_{n}, p_{k}] = 0"), &c, &dbl.zero(), n + k);
                    let c = dbl
                        .commutator(&dbl.minus(&pq(n)), &dbl.minus(&pq(k)))
                        .expect("same double");
                    ck.relation(&dbl, || format!("[p_{n}*, p_{k}*] = 0"), &c, &dbl.zero(), 0);
                }
            }
        }
        Suite::QuasiM | Suite::QuasiF => {
            let dbl = Double::new(QuasiPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            for size in 1..=d {
                for alpha in compositions(size) {
                    let r = alpha.last().expect("nonempty");
                    let head = alpha.without_last().expect("nonempty");
                    for n in 1..=d {
                        if suite == Suite::QuasiM {
                            let c = dbl
                                .commutator(&dbl.minus(&nh(n)), &dbl.plus(&LinComb::basis(alpha.clone())))
                                .expect("same double");
                            let rhs = if r <= n {
                                dbl.pure(&LinComb::basis(head.clone()), &nh(n - r))
                            } else {
                                dbl.zero()
                            };
                            ck.relation(
                                &dbl,
                                || format!("[𝐡_{n}*, M{alpha}] = M{head}𝐡_{}*", n as isize - r as isize),
                                &c,
                                &rhs,
                                size,
                            );
                        } else {
                            let c = dbl
                                .commutator(&dbl.minus(&nh(n)), &dbl.plus(&f_to_m(&alpha)))
                                .expect("same double");
                            let mut rhs = dbl.zero();
                            for i in 1..=r.min(n) {
                                let mut parts = head.parts().to_vec();
                                if r > i {
                                    parts.push(r - i);
                                }
                                let f = f_to_m(&comp(parts));
                                rhs = rhs.checked_add(&dbl.pure(&f, &nh(n - i))).expect("same double");
                            }
                            ck.relation(&dbl, || format!("[𝐡_{n}*, F{alpha}] = Σ F 𝐡*"), &c, &rhs, size);
                        }
                    }
                }
            }
        }
        Suite::QuasiSym => {
            let dbl = Double::new(QuasiPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            for size in 1..=d {
                for lambda in partitions(size) {
                    for n in 1..=d {
                        let c = dbl
                            .commutator(&dbl.minus(&nh(n)), &dbl.plus(&m_to_qsym(&lambda)))
                            .expect("same double");
                        let mut rhs = dbl.zero();
                        for j in 1..=n {
                            if let Some(mu) = lambda.remove_part(j) {
                                rhs = rhs
                                    .checked_add(&dbl.pure(&m_to_qsym(&mu), &nh(n - j)))
                                    .expect("same double");
                            }
                        }
                        ck.relation(
                            &dbl,
                            || format!("[𝐡_{n}*, m{lambda:?}] = Σ m_(λ-j) 𝐡_(n-j)*"),
                            &c,
                            &rhs,
                            size,
                        );
                    }
                }
                // The three named corollaries: p_k, e_k and h_k.
                let k = size;
                for n in 1..=d {
                    let emb = |u: LinComb<Partition, BigInt>| sym_as_qsym(&u);
                    let c = dbl
                        .commutator(&dbl.minus(&nh(n)), &dbl.plus(&emb(p_n(k))))
                        .expect("same double");
                    let rhs = if k <= n { dbl.minus(&nh(n - k)) } else { dbl.zero() };
                    ck.relation(&dbl, || format!("[𝐡_{n}*, p_{k}] = 𝐡_(n-k)*"), &c, &rhs, k);
                    let c = dbl
                        .commutator(&dbl.minus(&nh(n)), &dbl.plus(&emb(e_n(k))))
                        .expect("same double");
                    let rhs = dbl.pure(&emb(e_n(k - 1)), &nh(n - 1));
                    ck.relation(&dbl, || format!("[𝐡_{n}*, e_{k}] = e_(k-1)𝐡_(n-1)*"), &c, &rhs, k);
                    let c = dbl
                        .commutator(&dbl.minus(&nh(n)), &dbl.plus(&emb(h_n(k))))
                        .expect("same double");
                    let mut rhs = dbl.zero();
                    for j in 1..=n.min(k) {
                        rhs = rhs
                            .checked_add(&dbl.pure(&emb(h_n(k - j)), &nh(n - j)))
                            .expect("same double");
                    }
                    ck.relation(&dbl, || format!("[𝐡_{n}*, h_{k}] = Σ h_(k-j)𝐡_(n-j)*"), &c, &rhs, k);
                }
            }
        }
        Suite::ProjPresentation => {
            let dbl = Double::new(QuasiPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            let e = |k: usize| sym_as_qsym(&e_n(k));
            for n in 1..=d {
                for k in 1..=d {
                    let c = dbl.commutator(&dbl.plus(&e(n)), &dbl.plus(&e(k))).expect("same double");
                    ck.relation(&dbl, || format!("[e_{n}, e_{k}] = 0"), &c, &dbl.zero(), n + k);
                    let c = dbl
                        .commutator(&dbl.minus(&nh(n)), &dbl.plus(&e(k)))
                        .expect("same double");
                    let rhs = dbl.pure(&e(k - 1), &nh(n - 1));
                    ck.relation(&dbl, || format!("[𝐡_{n}*, e_{k}] = e_(k-1)𝐡_(n-1)*"), &c, &rhs, k);
                }
            }
        }
        Suite::Weyl => {
            let dbl = Double::new(NilcoxeterPair::shared());
            let mut ck = Checker {
                rep: &mut rep,
                max_degree: d,
            };
            for a in 1..=d {
                for b in 1..=d {
                    let c = dbl
                        .commutator(&dbl.minus(&LinComb::basis(a)), &dbl.plus(&LinComb::basis(b)))
                        .expect("same double");
                    let mut rhs = dbl.zero();
                    for i in 1..=a.min(b) {
                        let t = LinComb::term((b - i, a - i), binomial(a as u64, i as u64));
                        rhs = rhs.checked_add(&dbl.element(t)).expect("same double");
                    }
                    ck.relation(
                        &dbl,
                        || format!("[∂^{a}, x^({b})] = Σ C({a},i) x^({b}-i) ∂^({a}-i)"),
                        &c,
                        &rhs,
                        b,
                    );
                }
            }
        }
    }
    rep
}

/// `P_ℓ = Σ_j b_j # x_j` over dual bases of degree `ℓ` must act as the
/// identity on `H⁺_ℓ` and as zero below.
pub fn stone_von_neumann<P: DualPair>(p: &P, ell: usize, max_degree: usize) -> Result<Report> {
    if ell == 0 || ell > max_degree {
        return Err(Error::Usage(format!("need 1 ≤ ℓ ≤ D, got ℓ = {ell}, D = {max_degree}")));
    }
    let mut rep = Report::new(format!("stone_von_neumann:{}:{ell}", p.name()), max_degree);
    let dbl = Double::new(p);
    let projector = projector(p, ell)?;
    for d in 0..=ell {
        for c in p.plus().basis(d) {
            let ec: LinComb<_, BigRational> = LinComb::basis(c.clone());
            let img = dbl.fock_apply(&projector, &ec)?;
            let expect = if d == ell { ec } else { LinComb::zero() };
            rep.check(
                img == expect,
                || {
                    if d == ell {
                        format!("P_{ell} is the identity in degree {ell}")
                    } else {
                        format!("P_{ell} vanishes in degree {d}")
                    }
                },
                || basis_json(p.plus(), &c),
            );
        }
    }
    Ok(rep)
}

/// `P_ℓ` itself, over ℚ: the plus side of the dual basis comes from the
/// inverse Gram matrix.
pub fn projector<P: DualPair>(p: &P, ell: usize) -> Result<Elt<P, BigRational>> {
    let xs = p.minus().basis(ell);
    let as_ = p.plus().basis(ell);
    let g = p.gram(ell);
    let q: Vec<Vec<BigRational>> = (0..g.rows())
        .map(|i| {
            (0..g.cols())
                .map(|j| BigRational::from_integer(g[(i, j)].clone()))
                .collect()
        })
        .collect();
    let inv = rational_inverse(&q).ok_or_else(|| Error::Domain(format!("pairing is degenerate in degree {ell}")))?;
    let mut t = LinComb::zero();
    for (i, x) in xs.iter().enumerate() {
        for (j, a) in as_.iter().enumerate() {
            t.add_term((a.clone(), x.clone()), inv[j][i].clone());
        }
    }
    Ok(HeisenbergElement::new(p.name(), t))
}

/// Draws `samples` random nonzero elements with plus and minus basis
/// degrees `≤ max_degree` and finds, for each, a basis element of the Fock
/// space it does not annihilate.
pub fn faithfulness_witnesses<P: DualPair>(p: &P, samples: usize, max_degree: usize, seed: u64) -> Report {
    let mut rep = Report::new(format!("faithfulness:{}", p.name()), max_degree);
    let dbl = Double::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pluses = p.plus().basis_up_to(max_degree);
    let minuses = p.minus().basis_up_to(max_degree);
    for _ in 0..samples {
        let u = loop {
            let mut t = LinComb::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let a = pluses.choose(&mut rng).expect("nonempty basis").clone();
                let x = minuses.choose(&mut rng).expect("nonempty basis").clone();
                let mut c: i64 = rng.gen_range(-4..=4);
                if c == 0 {
                    c = 5;
                }
                t.add_term((a, x), BigInt::from(c));
            }
            if !t.is_zero() {
                break dbl.element(t);
            }
        };
        let top = u.terms().keys().map(|(_, x)| x.degree()).max().unwrap_or(0);
        let found = p.plus().basis_up_to(top).into_iter().find(|b| {
            !dbl.fock_apply(&u, &LinComb::basis(b.clone()))
                .expect("same double")
                .is_zero()
        });
        rep.check(
            found.is_some(),
            || "some Fock basis element is not annihilated".into(),
            || u.to_json(),
        );
    }
    rep
}

/// `𝐡₁*𝐡₂* − 𝐡₂*𝐡₁*` is a nonzero element of the projective double that
/// kills the embedded Sym, but acts nontrivially on the highest-weight
/// Fock space.
pub fn nonfaithfulness_witness(max_degree: usize) -> Report {
    let mut rep = Report::new("nonfaithfulness:quasi", max_degree);
    let p = QuasiPair::shared();
    let dbl = Double::new(p);
    let z = dbl
        .commutator(&dbl.minus(&nh(1)), &dbl.minus(&nh(2)))
        .expect("same double");
    rep.check(!z.is_zero(), || "𝐡₁*𝐡₂* − 𝐡₂*𝐡₁* ≠ 0".into(), || z.to_json());
    for λ in (0..=max_degree).flat_map(partitions) {
        let img = dbl.fock_apply(&z, &m_to_qsym(&λ)).expect("same double");
        rep.check(
            img.is_zero(),
            || "acts as zero on embedded Sym".into(),
            || json!(λ.parts()),
        );
    }
    let vac = dbl.hw_fock_apply(&z, &nh(0)).expect("plus-part is 1");
    let expect = &LinComb::basis(comp(vec![1, 2])) - &LinComb::basis(comp(vec![2, 1]));
    rep.check(
        vac == expect,
        || "acts on the highest-weight vacuum as 𝐡₁₂ − 𝐡₂₁".into(),
        || dbl.minus_json(&vac),
    );
    rep
}

/// Operator form of `x a = Σ ⟨x₁, a₂⟩ a₁ x₂` on the lowest-weight Fock space,
/// together with the module axiom for the product that realizes it.
pub fn lowest_weight_selftest<P: DualPair>(p: &P, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("lowest_weight_selftest:{}", p.name()), max_degree);
    let dbl = Double::new(p);
    let (hp, hm) = (p.plus(), p.minus());
    for x in hm.basis_up_to(max_degree) {
        let dx = hm.coproduct_basis(&x);
        let ex = LinComb::basis(x.clone());
        for a in hp.basis_up_to(max_degree) {
            let ea = LinComb::basis(a.clone());
            let prod = dbl.mul(&dbl.minus(&ex), &dbl.plus(&ea)).expect("same double");
            for b in hp.basis_up_to(max_degree - a.degree()) {
                let eb = LinComb::basis(b.clone());
                let lhs = skew(p, &ex, &hp.mul(&ea, &eb));
                let mut rhs = LinComb::zero();
                for ((x1, x2), c) in &dx {
                    let s1 = skew(p, &LinComb::basis(x1.clone()), &ea);
                    let s2 = skew(p, &LinComb::basis(x2.clone()), &eb);
                    rhs.add_scaled(&hp.mul(&s1, &s2), c);
                }
                let via = dbl.fock_apply(&prod, &eb).expect("same double");
                let witness = || json!([basis_json(hm, &x), basis_json(hp, &a), basis_json(hp, &b)]);
                rep.check(lhs == rhs, || "x*(ab) = Σ x₁*(a) x₂*(b)".into(), witness);
                rep.check(lhs == via, || "((1#x)(a#1))(b) = x*(ab)".into(), witness);
            }
        }
    }
    rep
}

/// The same relation on the highest-weight Fock space `H⁻`, for `a` running
/// over a basis of the Cartan image, plus `S² = id` on `H⁺`, which the
/// action formula relies on.
pub fn highest_weight_selftest<P: DualPair>(p: &P, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("highest_weight_selftest:{}", p.name()), max_degree);
    let dbl = Double::new(p);
    let (hp, hm) = (p.plus(), p.minus());
    rep.absorb(antipode_involution_check(hp, max_degree));
    let projective: Vec<LinComb<PlusKey<P>, BigInt>> = (0..=max_degree).flat_map(|d| p.projective_basis(d)).collect();
    for x in hm.basis_up_to(max_degree) {
        let dx = hm.coproduct_basis(&x);
        let ex = LinComb::basis(x.clone());
        for a in &projective {
            let prod = dbl.mul(&dbl.minus(&ex), &dbl.plus(a)).expect("same double");
            for y in hm.basis_up_to(max_degree - x.degree()) {
                let ey = LinComb::basis(y.clone());
                let lhs = hm.mul(&ex, &hw_plus_action(p, a, &ey));
                let mut rhs = LinComb::zero();
                for ((x1, x2), c) in &dx {
                    let s1 = skew(p, &LinComb::basis(x1.clone()), a);
                    let x2y = hm.mul_basis(x2, &y);
                    rhs.add_scaled(&hw_plus_action(p, &s1, &lift(&x2y)), c);
                }
                let witness = || json!([basis_json(hm, &x), dbl.plus_json(a), basis_json(hm, &y)]);
                rep.check(lhs == rhs, || "x(a▷y) = Σ x₁*(a) ▷ (x₂y)".into(), witness);
                match dbl.hw_fock_apply(&prod, &ey) {
                    Ok(via) => rep.check(via == lhs, || "((1#x)(a#1))▷y = x(a▷y)".into(), witness),
                    Err(_) => rep.check(false, || "product stays in the projective double".into(), witness),
                };
                let hmul = hm.mul(&ex, &ey);
                rep.check(
                    dbl.hw_fock_apply(&dbl.minus(&ex), &ey).expect("plus-part is 1") == hmul,
                    || "1#x acts by left multiplication".into(),
                    witness,
                );
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{PowerSumPair, Sym};

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn skew_examples() {
        let sym = SymPair::shared();
        let h2: LinComb<Partition, BigInt> = h_n(2);
        assert_eq!(skew(sym, &h2, &h_n(5)), h_n(3));
        let pq = |n| p_n(n);
        assert!(skew(sym, &pq(1), &pq(2)).is_zero());
        let q = QuasiPair::shared();
        assert_eq!(skew_basis(q, &c(&[1]), &c(&[2, 1])), LinComb::basis(c(&[2])));
    }

    #[test]
    fn product_examples() {
        let q = QuasiPair::shared();
        let dbl = Double::new(q);
        let m1: LinComb<Composition, BigInt> = LinComb::basis(c(&[1]));
        let prod = dbl.mul(&dbl.minus(&nh(1)), &dbl.plus(&m1)).unwrap();
        let expect = dbl.pure(&m1, &nh(1)).checked_add(&dbl.one()).unwrap();
        assert_eq!(prod, expect);

        let s = Double::new(SymPair::shared());
        let c = s.commutator(&s.minus(&h_n(2)), &s.plus(&h_n(3))).unwrap();
        let rhs = s.pure(&h_n(2), &h_n(1)).checked_add(&s.pure(&h_n(1), &h_n(0))).unwrap();
        assert_eq!(c, rhs);
    }

    #[test]
    fn mismatched_doubles_are_rejected() {
        let q = Double::new(QuasiPair::shared());
        let u: Elt<QuasiPair, BigInt> = q.one();
        let mut v = u.clone();
        v.pair = "sym".into();
        assert!(matches!(q.mul(&u, &v), Err(Error::Domain(_))));
    }

    #[test]
    fn fock_examples() {
        let q = Double::new(QuasiPair::shared());
        let m2: LinComb<Composition, BigInt> = LinComb::basis(c(&[2]));
        assert_eq!(
            q.fock_apply(&q.minus(&nh(2)), &m2).unwrap(),
            LinComb::basis(Composition::empty())
        );
        let s = Double::new(SymPair::shared());
        let h1: LinComb<Partition, BigInt> = h_n(1);
        assert_eq!(s.fock_apply(&s.pure(&h1, &h1), &h1).unwrap(), h1);
    }

    #[test]
    fn highest_weight_examples() {
        let q = Double::new(QuasiPair::shared());
        let vac = nh(0);
        assert_eq!(q.hw_fock_apply(&q.minus(&nh(2)), &vac).unwrap(), nh(2));
        let e2 = sym_as_qsym(&e_n(2));
        assert!(q.hw_fock_apply(&q.plus(&e2), &vac).unwrap().is_zero());
        let m21: LinComb<Composition, BigInt> = LinComb::basis(c(&[2, 1]));
        assert!(matches!(q.hw_fock_apply(&q.plus(&m21), &vac), Err(Error::Domain(_))));
    }

    #[test]
    fn operator_tables() {
        let s = Double::new(SymPair::shared());
        let u = s.minus(&h_n(1));
        let t = OperatorTable::build(Sym::shared(), 3, -1, |b| s.fock_apply(&u, &LinComb::basis(b.clone()))).unwrap();
        assert_eq!(t.blocks.len(), 4);
        assert!(!t.is_zero());
        // h₁* = ∂/∂p₁ and m_(2,1) = p₂p₁ − p₃.
        let img = s.fock_apply(&u, &LinComb::basis(pt(&[2, 1]))).unwrap();
        assert_eq!(img, LinComb::basis(pt(&[2])));
        let bad = OperatorTable::<BigInt>::build(Sym::shared(), 2, 0, |b| Ok(LinComb::basis(b.union(&pt(&[1])))));
        assert!(bad.is_err());
    }

    #[test]
    fn suites_pass_at_small_degree() {
        for s in Suite::ALL {
            let r = verify_relations(s, 4);
            assert!(r.passed(), "{s}: {:?}", r.failures.first());
            assert!(r.checks > 0);
        }
        assert_eq!("quasi_M".parse::<Suite>().unwrap(), Suite::QuasiM);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn projectors() {
        assert!(stone_von_neumann(QuasiPair::shared(), 2, 5).unwrap().passed());
        assert!(stone_von_neumann(SymPair::shared(), 1, 1).unwrap().passed());
        assert!(stone_von_neumann(NilcoxeterPair::shared(), 3, 3).unwrap().passed());
        assert!(stone_von_neumann(&PowerSumPair::quotient(2), 3, 4).unwrap().passed());
        assert!(stone_von_neumann(SymPair::shared(), 0, 3).is_err());
    }

    #[test]
    fn faithfulness_and_its_failure() {
        assert!(faithfulness_witnesses(QuasiPair::shared(), 10, 3, 7).passed());
        assert!(nonfaithfulness_witness(5).passed());
    }

    #[test]
    fn selftests() {
        assert!(lowest_weight_selftest(QuasiPair::shared(), 3).passed());
        let r = highest_weight_selftest(QuasiPair::shared(), 3);
        assert!(r.passed(), "{:?}", r.failures.first());
        assert!(highest_weight_selftest(SymPair::shared(), 3).passed());
        assert!(highest_weight_selftest(NilcoxeterPair::shared(), 4).passed());
    }
}
