//! Elements tagged by a named basis, as read and written by the command
//! line. Arithmetic always goes through the canonical basis of the algebra
//! the tag belongs to.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::heisenberg::{skew, Double, HeisenbergElement, MinusKey, PlusKey};
use crate::hopf::{element_json, lift, BasisKey, DualPair, HopfAlgebra};
use crate::instances::nilcoxeter::{DividedPowers, Polynomial};
use crate::instances::quasi::{f_to_m, h_to_r, m_to_f, r_to_h};
use crate::instances::sym::{from_monomial, qsym_as_sym, sym_as_qsym, to_monomial};
use crate::instances::{NSym, NilcoxeterPair, QSym, QuasiPair, Sym, SymBasis, SymPair};
use crate::lincomb::LinComb;
use crate::scalar::{encode_rational, Scalar};

/// Basis keys that can be rebuilt from their serialized index.
pub trait FromIndex: BasisKey {
    fn from_index(index: &[usize]) -> Result<Self>;
}

impl FromIndex for Composition {
    fn from_index(index: &[usize]) -> Result<Self> {
        Composition::new(index.to_vec())
    }
}

impl FromIndex for Partition {
    fn from_index(index: &[usize]) -> Result<Self> {
        Partition::new(index.to_vec())
    }
}

impl FromIndex for usize {
    fn from_index(index: &[usize]) -> Result<Self> {
        match index {
            [n] => Ok(*n),
            _ => Err(Error::Parse(format!("expected a single exponent, got {index:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    QSym,
    NSym,
    Sym,
    Poly,
    Gamma,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::QSym => "QSym",
            Algebra::NSym => "NSym",
            Algebra::Sym => "Sym",
            Algebra::Poly => "Z[x]",
            Algebra::Gamma => "Gamma",
        }
    }

    pub fn canonical_basis(self) -> Basis {
        match self {
            Algebra::QSym => Basis::M,
            Algebra::NSym => Basis::Nh,
            Algebra::Sym => Basis::Sym(SymBasis::M),
            Algebra::Poly => Basis::X,
            Algebra::Gamma => Basis::XDiv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    F,
    Nh,
    R,
    Sym(SymBasis),
    X,
    XDiv,
}

impl Basis {
    pub const ALL: [Basis; 11] = [
        Basis::M,
        Basis::F,
        Basis::Nh,
        Basis::R,
        Basis::Sym(SymBasis::M),
        Basis::Sym(SymBasis::H),
        Basis::Sym(SymBasis::E),
        Basis::Sym(SymBasis::P),
        Basis::Sym(SymBasis::S),
        Basis::X,
        Basis::XDiv,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::Nh => "nh",
            Basis::R => "r",
            Basis::Sym(b) => b.tag(),
            Basis::X => "x",
            Basis::XDiv => "xdiv",
        }
    }

    pub fn algebra(self) -> Algebra {
        match self {
            Basis::M | Basis::F => Algebra::QSym,
            Basis::Nh | Basis::R => Algebra::NSym,
            Basis::Sym(_) => Algebra::Sym,
            Basis::X => Algebra::Poly,
            Basis::XDiv => Algebra::Gamma,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Basis> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

type Index = Vec<usize>;

/// `Σ c · B[index]` in one named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<R> {
    basis: Basis,
    terms: LinComb<Index, R>,
}

fn retag<K: BasisKey, R: Scalar>(u: &LinComb<K, R>) -> LinComb<Index, R> {
    u.iter().map(|(k, c)| (k.index(), c.clone())).collect()
}

fn typed<K: FromIndex, R: Scalar>(u: &LinComb<Index, R>) -> Result<LinComb<K, R>> {
    u.iter().map(|(k, c)| Ok((K::from_index(k)?, c.clone()))).collect()
}

fn map_comp<R: Scalar>(
    u: &LinComb<Index, R>,
    f: impl Fn(&Composition) -> LinComb<Composition, BigInt>,
) -> Result<LinComb<Index, R>> {
    let t: LinComb<Composition, R> = typed(u)?;
    Ok(retag(&t.map_linear(|k| lift(&f(k)))))
}

impl<R: Scalar> GradedElement<R> {
    pub fn zero(basis: Basis) -> Self {
        GradedElement {
            basis,
            terms: LinComb::zero(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        let idx = match basis.algebra() {
            Algebra::Poly | Algebra::Gamma => vec![0],
            _ => Vec::new(),
        };
        GradedElement {
            basis,
            terms: LinComb::basis(idx),
        }
    }

    /// A single basis element; the index is validated against the basis.
    pub fn basis_element(basis: Basis, index: Vec<usize>) -> Result<Self> {
        match basis.algebra() {
            Algebra::QSym | Algebra::NSym => {
                Composition::from_index(&index)?;
            }
            Algebra::Sym => {
                Partition::from_index(&index)?;
            }
            Algebra::Poly | Algebra::Gamma => {
                usize::from_index(&index)?;
            }
        }
        if basis == Basis::Sym(SymBasis::P) {
            to_monomial::<R>(SymBasis::P, &LinComb::zero())?;
        }
        Ok(GradedElement {
            basis,
            terms: LinComb::basis(index),
        })
    }

    pub fn from_typed<K: BasisKey>(basis: Basis, u: &LinComb<K, R>) -> Self {
        GradedElement { basis, terms: retag(u) }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn algebra(&self) -> Algebra {
        self.basis.algebra()
    }

    pub fn terms(&self) -> &LinComb<Index, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The same element in the canonical basis of its algebra.
    pub fn canonical(&self) -> Result<Self> {
        let terms = match self.basis {
            Basis::F => map_comp(&self.terms, f_to_m)?,
            Basis::R => map_comp(&self.terms, r_to_h)?,
            Basis::Sym(b) if b != SymBasis::M => retag(&to_monomial(b, &typed::<Partition, R>(&self.terms)?)?),
            _ => self.terms.clone(),
        };
        Ok(GradedElement {
            basis: self.algebra().canonical_basis(),
            terms,
        })
    }

    /// Re-expresses the element in `target`. Sym and QSym convert into
    /// each other through the embedding; the other direction needs a
    /// symmetric input.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        let mut c = self.canonical()?;
        match (c.algebra(), target.algebra()) {
            (a, b) if a == b => {}
            (Algebra::Sym, Algebra::QSym) => {
                c = GradedElement {
                    basis: Basis::M,
                    terms: retag(&sym_as_qsym(&typed::<Partition, R>(&c.terms)?)),
                };
            }
            (Algebra::QSym, Algebra::Sym) => {
                let s = qsym_as_sym(&typed::<Composition, R>(&c.terms)?)
                    .ok_or_else(|| Error::Domain("element of QSym is not symmetric".into()))?;
                c = GradedElement {
                    basis: Basis::Sym(SymBasis::M),
                    terms: retag(&s),
                };
            }
            (a, b) => {
                return Err(Error::Configuration(format!(
                    "no map from {} to {}",
                    a.name(),
                    b.name()
                )))
            }
        }
        let terms = match target {
            Basis::F => map_comp(&c.terms, m_to_f)?,
            Basis::R => map_comp(&c.terms, h_to_r)?,
            Basis::Sym(b) if b != SymBasis::M => retag(&from_monomial(b, &typed::<Partition, R>(&c.terms)?)?),
            _ => c.terms,
        };
        Ok(GradedElement { basis: target, terms })
    }

    fn same_algebra(&self, other: &Self) -> Result<Self> {
        if self.algebra() != other.algebra() {
            return Err(Error::Configuration(format!(
                "cannot combine elements of {} and {}",
                self.algebra().name(),
                other.algebra().name()
            )));
        }
        other.convert(self.basis)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let o = self.same_algebra(other)?;
        Ok(GradedElement {
            basis: self.basis,
            terms: &self.terms + &o.terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let o = self.same_algebra(other)?;
        Ok(GradedElement {
            basis: self.basis,
            terms: &self.terms - &o.terms,
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        GradedElement {
            basis: self.basis,
            terms: self.terms.scale(s),
        }
    }

    /// Product in the algebra, expressed in the basis of `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (a, b) = (self.canonical()?, other.canonical()?);
        let prod = match self.algebra() {
            Algebra::QSym => mul_in(QSym::shared(), &a.terms, &b.terms)?,
            Algebra::NSym => mul_in(NSym::shared(), &a.terms, &b.terms)?,
            Algebra::Sym => mul_in(Sym::shared(), &a.terms, &b.terms)?,
            Algebra::Poly => mul_in(&Polynomial, &a.terms, &b.terms)?,
            Algebra::Gamma => mul_in(&DividedPowers, &a.terms, &b.terms)?,
        };
        GradedElement {
            basis: a.basis,
            terms: prod,
        }
        .convert(self.basis)
    }

    /// `Δ(self)` with both tensor factors in the basis of `self`.
    pub fn coproduct(&self) -> Result<TensorElement<R>> {
        let a = self.canonical()?;
        let cop = match self.algebra() {
            Algebra::QSym => coproduct_in(QSym::shared(), &a.terms)?,
            Algebra::NSym => coproduct_in(NSym::shared(), &a.terms)?,
            Algebra::Sym => coproduct_in(Sym::shared(), &a.terms)?,
            Algebra::Poly => coproduct_in(&Polynomial, &a.terms)?,
            Algebra::Gamma => coproduct_in(&DividedPowers, &a.terms)?,
        };
        let mut terms = LinComb::zero();
        for ((l, r), c) in &cop {
            let l: GradedElement<R> = GradedElement {
                basis: a.basis,
                terms: LinComb::basis(l.clone()),
            }
            .convert(self.basis)?;
            let r: GradedElement<R> = GradedElement {
                basis: a.basis,
                terms: LinComb::basis(r.clone()),
            }
            .convert(self.basis)?;
            for (li, lc) in &l.terms {
                for (ri, rc) in &r.terms {
                    terms.add_term((li.clone(), ri.clone()), c.clone() * lc.clone() * rc.clone());
                }
            }
        }
        Ok(TensorElement {
            basis: self.basis,
            terms,
        })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"index": k, "coeff": encode_rational(&c.to_rational())}))
            .collect();
        json!({"algebra": self.algebra().name(), "basis": self.basis.tag(), "terms": terms})
    }

    /// Reads the element JSON schema back.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("element JSON: {m}"));
        let basis: Basis = v["basis"].as_str().ok_or_else(|| bad("missing basis"))?.parse()?;
        if let Some(a) = v["algebra"].as_str() {
            if a != basis.algebra().name() {
                return Err(bad("algebra and basis disagree"));
            }
        }
        let mut out = GradedElement::zero(basis);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let index: Vec<usize> = serde_json::from_value(t["index"].clone()).map_err(|e| bad(&e.to_string()))?;
            let coeff = t["coeff"].as_str().ok_or_else(|| bad("coefficient must be a string"))?;
            let q = crate::scalar::parse_rational(coeff)?;
            let c = R::from_rational(&q)
                .ok_or_else(|| Error::ScalarDomain(format!("coefficient {coeff} is not an integer")))?;
            let e = GradedElement::basis_element(basis, index)?;
            out = out.add(&e.scale(&c))?;
        }
        Ok(out)
    }
}

fn mul_in<H: HopfAlgebra, R: Scalar>(h: &H, a: &LinComb<Index, R>, b: &LinComb<Index, R>) -> Result<LinComb<Index, R>>
where
    H::Key: FromIndex,
{
    Ok(retag(&h.mul(&typed(a)?, &typed(b)?)))
}

fn coproduct_in<H: HopfAlgebra, R: Scalar>(h: &H, a: &LinComb<Index, R>) -> Result<LinComb<(Index, Index), R>>
where
    H::Key: FromIndex,
{
    Ok(h.coproduct(&typed(a)?)
        .iter()
        .map(|((l, r), c)| ((l.index(), r.index()), c.clone()))
        .collect())
}

/// An element of `H ⊗ H` with both factors in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<R> {
    pub basis: Basis,
    pub terms: LinComb<(Index, Index), R>,
}

impl<R: Scalar> TensorElement<R> {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| json!({"index": [a, b], "coeff": encode_rational(&c.to_rational())}))
            .collect();
        json!({"algebra": self.basis.algebra().name(), "basis": self.basis.tag(), "terms": terms})
    }
}

/// The registered dual pairs, named by their plus side (the Fock space).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// `(QSym, NSym)`.
    Quasi,
    /// `(Sym, Sym)`.
    Sym,
    /// `(Γ, ℤ[x])`.
    Nilcoxeter,
}

impl PairKind {
    pub fn plus(self) -> Algebra {
        match self {
            PairKind::Quasi => Algebra::QSym,
            PairKind::Sym => Algebra::Sym,
            PairKind::Nilcoxeter => Algebra::Gamma,
        }
    }

    pub fn minus(self) -> Algebra {
        match self {
            PairKind::Quasi => Algebra::NSym,
            PairKind::Sym => Algebra::Sym,
            PairKind::Nilcoxeter => Algebra::Poly,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairKind::Quasi => "qsym",
            PairKind::Sym => "sym",
            PairKind::Nilcoxeter => "nilcoxeter",
        }
    }

    /// The pair with the given plus and minus sides.
    pub fn of(plus: Algebra, minus: Algebra) -> Result<PairKind> {
        [PairKind::Quasi, PairKind::Sym, PairKind::Nilcoxeter]
            .into_iter()
            .find(|k| k.plus() == plus && k.minus() == minus)
            .ok_or_else(|| {
                Error::Configuration(format!(
                    "({}, {}) is not a registered dual pair",
                    plus.name(),
                    minus.name()
                ))
            })
    }

    /// The pair containing `a` on its plus side, or failing that on its
    /// minus side; `true` means plus.
    pub fn containing(a: Algebra) -> (PairKind, bool) {
        match a {
            Algebra::QSym => (PairKind::Quasi, true),
            Algebra::NSym => (PairKind::Quasi, false),
            Algebra::Sym => (PairKind::Sym, true),
            Algebra::Gamma => (PairKind::Nilcoxeter, true),
            Algebra::Poly => (PairKind::Nilcoxeter, false),
        }
    }
}

macro_rules! on_pair {
    ($kind:expr, |$p:ident| $body:expr) => {
        match $kind {
            PairKind::Quasi => {
                let $p = QuasiPair::shared();
                $body
            }
            PairKind::Sym => {
                let $p = SymPair::shared();
                $body
            }
            PairKind::Nilcoxeter => {
                let $p = NilcoxeterPair::shared();
                $body
            }
        }
    };
}

fn sides(x: &Basis, a: &Basis) -> Result<PairKind> {
    match PairKind::of(a.algebra(), x.algebra()) {
        Ok(k) => Ok(k),
        Err(_) => PairKind::of(x.algebra(), a.algebra()),
    }
}

/// `⟨u, v⟩` for elements on the two sides of a registered pair, in either
/// order.
pub fn pair<R: Scalar>(u: &GradedElement<R>, v: &GradedElement<R>) -> Result<R> {
    let kind = sides(&u.basis, &v.basis)?;
    let (x, a) = if kind.minus() == u.algebra() && kind.plus() == v.algebra() {
        (u.canonical()?, v.canonical()?)
    } else {
        (v.canonical()?, u.canonical()?)
    };
    on_pair!(kind, |p| pair_in(p, &x.terms, &a.terms))
}

fn pair_in<P: DualPair, R: Scalar>(p: &P, x: &LinComb<Index, R>, a: &LinComb<Index, R>) -> Result<R>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    Ok(p.pair(&typed::<MinusKey<P>, R>(x)?, &typed::<PlusKey<P>, R>(a)?))
}

/// The skew action `x*(a)` of the minus side on the plus side, in the basis
/// of `a`.
pub fn skew_action<R: Scalar>(x: &GradedElement<R>, a: &GradedElement<R>) -> Result<GradedElement<R>> {
    let kind = PairKind::of(a.algebra(), x.algebra())?;
    let (xc, ac) = (x.canonical()?, a.canonical()?);
    let terms = on_pair!(kind, |p| skew_in(p, &xc.terms, &ac.terms))?;
    GradedElement { basis: ac.basis, terms }.convert(a.basis)
}

fn skew_in<P: DualPair, R: Scalar>(p: &P, x: &LinComb<Index, R>, a: &LinComb<Index, R>) -> Result<LinComb<Index, R>>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    Ok(retag(&skew(
        p,
        &typed::<MinusKey<P>, R>(x)?,
        &typed::<PlusKey<P>, R>(a)?,
    )))
}

/// An element of one of the registered Heisenberg doubles, stored in the
/// canonical bases of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynHeisenberg<R> {
    kind: PairKind,
    terms: LinComb<(Index, Index), R>,
}

impl<R: Scalar> DynHeisenberg<R> {
    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn one(kind: PairKind) -> Self {
        let a = GradedElement::<R>::one(kind.plus().canonical_basis());
        let x = GradedElement::<R>::one(kind.minus().canonical_basis());
        DynHeisenberg::pure(kind, &a, &x).expect("units lie in the pair")
    }

    /// `a # x`.
    pub fn pure(kind: PairKind, a: &GradedElement<R>, x: &GradedElement<R>) -> Result<Self> {
        if a.algebra() != kind.plus() || x.algebra() != kind.minus() {
            return Err(Error::Configuration(format!(
                "{} # {} is not in the {} double",
                a.algebra().name(),
                x.algebra().name(),
                kind.name()
            )));
        }
        let (a, x) = (a.canonical()?, x.canonical()?);
        let mut terms = LinComb::zero();
        for (i, c) in &a.terms {
            for (j, d) in &x.terms {
                terms.add_term((i.clone(), j.clone()), c.clone() * d.clone());
            }
        }
        Ok(DynHeisenberg { kind, terms })
    }

    /// `a # x` with the pair read off the two sides.
    pub fn from_sides(a: &GradedElement<R>, x: &GradedElement<R>) -> Result<Self> {
        DynHeisenberg::pure(PairKind::of(a.algebra(), x.algebra())?, a, x)
    }

    /// `a # 1` or `1 # x`, depending on which side `u` lives.
    pub fn embed(u: &GradedElement<R>) -> Self {
        let (kind, plus) = PairKind::containing(u.algebra());
        let res = if plus {
            DynHeisenberg::pure(kind, u, &GradedElement::one(kind.minus().canonical_basis()))
        } else {
            DynHeisenberg::pure(kind, &GradedElement::one(kind.plus().canonical_basis()), u)
        };
        res.expect("the side matches the pair")
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::Configuration(format!(
                "elements of the {} and {} doubles",
                self.kind.name(),
                other.kind.name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(DynHeisenberg {
            kind: self.kind,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(DynHeisenberg {
            kind: self.kind,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        DynHeisenberg {
            kind: self.kind,
            terms: self.terms.scale(s),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        let terms = on_pair!(self.kind, |p| heis_mul_in(p, &self.terms, &other.terms))?;
        Ok(DynHeisenberg { kind: self.kind, terms })
    }

    /// Action on the lowest-weight Fock space (the plus side).
    pub fn fock_apply(&self, b: &GradedElement<R>) -> Result<GradedElement<R>> {
        if b.algebra() != self.kind.plus() {
            return Err(Error::Configuration(format!(
                "the {} Fock space is {}, not {}",
                self.kind.name(),
                self.kind.plus().name(),
                b.algebra().name()
            )));
        }
        let bc = b.canonical()?;
        let terms = on_pair!(self.kind, |p| fock_in(p, &self.terms, &bc.terms))?;
        GradedElement { basis: bc.basis, terms }.convert(b.basis)
    }

    /// Action on the highest-weight Fock space (the minus side).
    pub fn hw_fock_apply(&self, y: &GradedElement<R>) -> Result<GradedElement<R>> {
        if y.algebra() != self.kind.minus() {
            return Err(Error::Configuration(format!(
                "the {} highest-weight Fock space is {}, not {}",
                self.kind.name(),
                self.kind.minus().name(),
                y.algebra().name()
            )));
        }
        let yc = y.canonical()?;
        let terms = on_pair!(self.kind, |p| hw_fock_in(p, &self.terms, &yc.terms))?;
        GradedElement { basis: yc.basis, terms }.convert(y.basis)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, x), c)| json!({"plus": a, "minus": x, "coeff": encode_rational(&c.to_rational())}))
            .collect();
        json!({
            "pair": self.kind.name(),
            "plus_basis": self.kind.plus().canonical_basis().tag(),
            "minus_basis": self.kind.minus().canonical_basis().tag(),
            "terms": terms,
        })
    }
}

type HeisTerms<R> = LinComb<(Index, Index), R>;

fn typed_heis<P: DualPair, R: Scalar>(p: &P, t: &HeisTerms<R>) -> Result<HeisenbergElement<PlusKey<P>, MinusKey<P>, R>>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    let terms = t
        .iter()
        .map(|((a, x), c)| Ok(((PlusKey::<P>::from_index(a)?, MinusKey::<P>::from_index(x)?), c.clone())))
        .collect::<Result<_>>()?;
    Ok(Double::new(p).element(terms))
}

fn heis_mul_in<P: DualPair, R: Scalar>(p: &P, u: &HeisTerms<R>, v: &HeisTerms<R>) -> Result<HeisTerms<R>>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    let prod = Double::new(p).mul(&typed_heis(p, u)?, &typed_heis(p, v)?)?;
    Ok(prod
        .terms()
        .iter()
        .map(|((a, x), c)| ((a.index(), x.index()), c.clone()))
        .collect())
}

fn fock_in<P: DualPair, R: Scalar>(p: &P, u: &HeisTerms<R>, b: &LinComb<Index, R>) -> Result<LinComb<Index, R>>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    Ok(retag(&Double::new(p).fock_apply(&typed_heis(p, u)?, &typed(b)?)?))
}

fn hw_fock_in<P: DualPair, R: Scalar>(p: &P, u: &HeisTerms<R>, y: &LinComb<Index, R>) -> Result<LinComb<Index, R>>
where
    PlusKey<P>: FromIndex,
    MinusKey<P>: FromIndex,
{
    Ok(retag(&Double::new(p).hw_fock_apply(&typed_heis(p, u)?, &typed(y)?)?))
}

/// Canonical-basis JSON of a typed element, for callers that already hold
/// one.
pub fn typed_json<H: HopfAlgebra, R: Scalar>(h: &H, u: &LinComb<H::Key, R>) -> Value {
    element_json(&h.name(), h.basis_name(), u)
}
