//! A small expression language for elements.
//!
//! ```text
//! sum     := hprod (('+' | '-') hprod)*
//! hprod   := product ('#' product)?
//! product := unary ('*' unary)*
//! unary   := '-' unary | atom
//! atom    := INT ('/' INT)? | NAME '[' ints? ']' | '(' sum ')'
//! ```
//!
//! `NAME` is a basis tag (`M`, `F`, `nh`, `r`, `m`, `h`, `e`, `p`, `s`,
//! `x`, `xdiv`), `T` for a Hecke basis element given in one-line notation,
//! or `t` for a Hecke generator. `a # x` builds an element of a Heisenberg
//! double; a product of elements from the two sides of a registered pair is
//! taken in the double. Hecke elements of different ranks meet in the larger
//! rank.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::combinatorics::Permutation;
use crate::element::{Basis, DynHeisenberg, GradedElement, PairKind};
use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, HeckeParams};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Frac(BigInt, BigInt),
    Atom(String, Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Hash(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Name(chars[start..i].iter().collect())));
        } else if "+-*/#()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} at offset {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        let at = match self.toks.get(self.pos) {
            Some((o, _)) => format!("offset {o}"),
            None => "end of input".into(),
        };
        Err(Error::Parse(format!("{what} at {at}")))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected {c:?}"))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.hprod()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.hprod()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.hprod()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn hprod(&mut self) -> Result<Expr> {
        let e = self.product()?;
        if self.eat('#') {
            return Ok(Expr::Hash(Box::new(e), Box::new(self.product()?)));
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.eat('*') {
            e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let d = self.int()?;
                    if d == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    return Ok(Expr::Frac(n, d));
                }
                Ok(Expr::Int(n))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                self.expect('[')?;
                let mut idx = Vec::new();
                if !self.eat(']') {
                    loop {
                        let n = self.int()?;
                        let n: usize = (&n)
                            .try_into()
                            .map_err(|_| Error::Parse(format!("index {n} too large")))?;
                        idx.push(n);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::Atom(name, idx))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.err("expected a scalar, basis element or '('"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// The value of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Val<R> {
    Scalar(R),
    Element(GradedElement<R>),
    Heisenberg(DynHeisenberg<R>),
    Hecke(HeckeElement),
}

impl<R: Scalar> Val<R> {
    pub fn to_json(&self) -> Value {
        match self {
            Val::Scalar(s) => Value::String(crate::scalar::encode_rational(&s.to_rational())),
            Val::Element(e) => e.to_json(),
            Val::Heisenberg(h) => h.to_json(),
            Val::Hecke(h) => h.to_json(),
        }
    }
}

/// Parameters of the Hecke-like algebra that `T[..]` and `t[..]` live in.
#[derive(Clone, Debug)]
pub struct Context {
    pub hecke: HeckeParams,
    /// Smallest rank given to Hecke atoms.
    pub min_rank: usize,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            hecke: HeckeParams::nilcoxeter(),
            min_rank: 0,
        }
    }
}

pub fn evaluate<R: Scalar>(src: &str, ctx: &Context) -> Result<Val<R>> {
    eval(&parse(src)?, ctx)
}

/// Evaluates and insists on a graded element.
pub fn evaluate_element<R: Scalar>(src: &str) -> Result<GradedElement<R>> {
    match evaluate::<R>(src, &Context::default())? {
        Val::Element(e) => Ok(e),
        other => Err(Error::Usage(format!(
            "expected an element of a Hopf algebra, got {}",
            kind(&other)
        ))),
    }
}

fn kind<R>(v: &Val<R>) -> &'static str {
    match v {
        Val::Scalar(_) => "a scalar",
        Val::Element(_) => "an element",
        Val::Heisenberg(_) => "a Heisenberg double element",
        Val::Hecke(_) => "a Hecke-like algebra element",
    }
}

fn scalar<R: Scalar>(q: BigRational) -> Result<R> {
    R::from_rational(&q).ok_or_else(|| Error::ScalarDomain(format!("{q} needs rational scalars")))
}

fn eval<R: Scalar>(e: &Expr, ctx: &Context) -> Result<Val<R>> {
    Ok(match e {
        Expr::Int(n) => Val::Scalar(R::from_bigint(n.clone())),
        Expr::Frac(n, d) => Val::Scalar(scalar(BigRational::new(n.clone(), d.clone()))?),
        Expr::Atom(name, idx) => atom(name, idx, ctx)?,
        Expr::Neg(a) => mul(Val::Scalar(-R::one()), eval(a, ctx)?)?,
        Expr::Add(a, b) => add(eval(a, ctx)?, eval(b, ctx)?)?,
        Expr::Sub(a, b) => {
            let nb = mul(Val::Scalar(-R::one()), eval(b, ctx)?)?;
            add(eval(a, ctx)?, nb)?
        }
        Expr::Mul(a, b) => mul(eval(a, ctx)?, eval(b, ctx)?)?,
        Expr::Hash(a, b) => hash(eval(a, ctx)?, eval(b, ctx)?)?,
    })
}

fn atom<R: Scalar>(name: &str, idx: &[usize], ctx: &Context) -> Result<Val<R>> {
    match name {
        "T" => {
            let w = Permutation::new(idx.to_vec())?;
            let h = HeckeElement::basis(&ctx.hecke, w);
            Ok(Val::Hecke(widen(&h, ctx.min_rank)?))
        }
        "t" => match idx {
            [i] if *i >= 1 => Ok(Val::Hecke(HeckeElement::generator(
                (*i + 1).max(ctx.min_rank),
                &ctx.hecke,
                *i,
            )?)),
            _ => Err(Error::Parse(format!("t[..] takes one index ≥ 1, got {idx:?}"))),
        },
        _ => {
            let b: Basis = name.parse()?;
            Ok(Val::Element(GradedElement::basis_element(b, idx.to_vec())?))
        }
    }
}

/// `A_n ⊆ A_N` through `S_n ⊆ S_N`.
fn widen(h: &HeckeElement, n: usize) -> Result<HeckeElement> {
    if h.rank() >= n {
        return Ok(h.clone());
    }
    let terms: LinComb<Permutation, BigRational> =
        h.terms().iter().map(|(w, c)| (w.shifted(0, n), c.clone())).collect();
    HeckeElement::new(n, h.params().clone(), terms)
}

fn common_rank(a: &HeckeElement, b: &HeckeElement) -> Result<(HeckeElement, HeckeElement)> {
    let n = a.rank().max(b.rank());
    Ok((widen(a, n)?, widen(b, n)?))
}

fn mismatch<R, T>(a: &Val<R>, b: &Val<R>, op: &str) -> Result<T> {
    Err(Error::Configuration(format!("cannot {op} {} and {}", kind(a), kind(b))))
}

fn add<R: Scalar>(a: Val<R>, b: Val<R>) -> Result<Val<R>> {
    use Val::*;
    Ok(match (a, b) {
        (Scalar(s), Scalar(t)) => Scalar(s + t),
        (Scalar(s), Element(e)) | (Element(e), Scalar(s)) => Element(e.add(&GradedElement::one(e.basis()).scale(&s))?),
        (Scalar(s), Heisenberg(h)) | (Heisenberg(h), Scalar(s)) => {
            Heisenberg(h.add(&DynHeisenberg::one(h.kind()).scale(&s))?)
        }
        (Scalar(s), Hecke(h)) | (Hecke(h), Scalar(s)) => {
            Hecke(h.add(&HeckeElement::one(h.rank(), h.params()).scale(&s.to_rational()))?)
        }
        (Element(e), Element(f)) => Element(e.add(&f)?),
        (Element(e), Heisenberg(h)) => Heisenberg(DynHeisenberg::embed(&e).add(&h)?),
        (Heisenberg(h), Element(e)) => Heisenberg(h.add(&DynHeisenberg::embed(&e))?),
        (Heisenberg(h), Heisenberg(k)) => Heisenberg(h.add(&k)?),
        (Hecke(h), Hecke(k)) => {
            let (h, k) = common_rank(&h, &k)?;
            Hecke(h.add(&k)?)
        }
        (a, b) => return mismatch(&a, &b, "add"),
    })
}

fn mul<R: Scalar>(a: Val<R>, b: Val<R>) -> Result<Val<R>> {
    use Val::*;
    Ok(match (a, b) {
        (Scalar(s), Scalar(t)) => Scalar(s * t),
        (Scalar(s), Element(e)) | (Element(e), Scalar(s)) => Element(e.scale(&s)),
        (Scalar(s), Heisenberg(h)) | (Heisenberg(h), Scalar(s)) => Heisenberg(h.scale(&s)),
        (Scalar(s), Hecke(h)) | (Hecke(h), Scalar(s)) => Hecke(h.scale(&s.to_rational())),
        (Element(e), Element(f)) if e.algebra() == f.algebra() => Element(e.mul(&f)?),
        (Element(e), Element(f)) => Heisenberg(DynHeisenberg::embed(&e).mul(&DynHeisenberg::embed(&f))?),
        (Element(e), Heisenberg(h)) => Heisenberg(DynHeisenberg::embed(&e).mul(&h)?),
        (Heisenberg(h), Element(e)) => Heisenberg(h.mul(&DynHeisenberg::embed(&e))?),
        (Heisenberg(h), Heisenberg(k)) => Heisenberg(h.mul(&k)?),
        (Hecke(h), Hecke(k)) => {
            let (h, k) = common_rank(&h, &k)?;
            Hecke(h.mul(&k)?)
        }
        (a, b) => return mismatch(&a, &b, "multiply"),
    })
}

const PAIRS: [PairKind; 3] = [PairKind::Quasi, PairKind::Sym, PairKind::Nilcoxeter];

fn hash<R: Scalar>(a: Val<R>, b: Val<R>) -> Result<Val<R>> {
    use Val::*;
    let h = match (a, b) {
        (Element(a), Element(x)) => DynHeisenberg::from_sides(&a, &x)?,
        (Element(a), Scalar(s)) => {
            let kind = PAIRS.into_iter().find(|k| k.plus() == a.algebra()).ok_or_else(|| {
                Error::Configuration(format!("{} is not the plus side of a pair", a.algebra().name()))
            })?;
            DynHeisenberg::pure(kind, &a, &GradedElement::one(kind.minus().canonical_basis()).scale(&s))?
        }
        (Scalar(s), Element(x)) => {
            let kind = PAIRS.into_iter().find(|k| k.minus() == x.algebra()).ok_or_else(|| {
                Error::Configuration(format!("{} is not the minus side of a pair", x.algebra().name()))
            })?;
            DynHeisenberg::pure(kind, &GradedElement::one(kind.plus().canonical_basis()).scale(&s), &x)?
        }
        (Scalar(_), Scalar(_)) => return Err(Error::Usage("a # x needs at least one algebra element".into())),
        (a, b) => return mismatch(&a, &b, "form a # x from"),
    };
    Ok(Heisenberg(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::SymBasis;

    fn el(src: &str) -> GradedElement<BigInt> {
        evaluate_element(src).unwrap()
    }

    #[test]
    fn grammar() {
        assert_eq!(
            parse("M[1,2] + 2*M[3]").unwrap(),
            Expr::Add(
                Box::new(Expr::Atom("M".into(), vec![1, 2])),
                Box::new(Expr::Mul(
                    Box::new(Expr::Int(2.into())),
                    Box::new(Expr::Atom("M".into(), vec![3]))
                ))
            )
        );
        assert_eq!(parse("M[]").unwrap(), Expr::Atom("M".into(), vec![]));
        for bad in ["M[1,", "M[1]]", "2 +", "M[a]", "M 1", "()", "1/0", "$"] {
            assert!(matches!(parse(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(el("M[1]*M[1]"), el("2*M[1,1] + M[2]"));
        assert_eq!(el("M[1]*M[1] - M[2]"), el("M[1,1]+M[1,1]"));
        assert_eq!(el("-(s[1]) + s[1]").terms().len(), 0);
        let u = el("nh[2]*r[1,1]");
        assert_eq!(u.basis(), Basis::Nh);
        assert_eq!(el("s[2,1]").basis(), Basis::Sym(SymBasis::S));
        assert_eq!(el("1 + x[1]"), el("x[0] + x[1]"));
        assert!(matches!(
            evaluate_element::<BigInt>("1/2*M[1]"),
            Err(Error::ScalarDomain(_))
        ));
        assert!(matches!(
            evaluate_element::<BigInt>("p[2]"),
            Err(Error::ScalarDomain(_))
        ));
        assert!(evaluate_element::<BigRational>("1/2*p[2] + p[1,1]").is_ok());
        assert!(matches!(evaluate_element::<BigInt>("Q[1]"), Err(Error::Parse(_))));
        assert!(matches!(evaluate_element::<BigInt>("M[0]"), Err(Error::Domain(_))));
    }

    #[test]
    fn heisenberg_expressions() {
        let ctx = Context::default();
        let c = evaluate::<BigInt>("nh[1]*M[1] - M[1]*nh[1]", &ctx).unwrap();
        assert_eq!(c, Val::Heisenberg(DynHeisenberg::one(PairKind::Quasi)));
        let c = evaluate::<BigInt>("(1 # m[1]) * (m[1] # 1) - m[1] # m[1]", &ctx).unwrap();
        assert_eq!(c, Val::Heisenberg(DynHeisenberg::one(PairKind::Sym)));
        assert!(matches!(evaluate::<BigInt>("1 # 2", &ctx), Err(Error::Usage(_))));
        assert!(matches!(
            evaluate::<BigInt>("M[1] # m[1]", &ctx),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn hecke_expressions() {
        let ctx = Context {
            hecke: HeckeParams::zero_hecke(),
            min_rank: 0,
        };
        // T_1² = −T_1 in the 0-Hecke algebra.
        let v = evaluate::<BigInt>("t[1]*t[1] + t[1]", &ctx).unwrap();
        match v {
            Val::Hecke(h) => assert!(h.is_zero()),
            other => panic!("{other:?}"),
        }
        let v = evaluate::<BigInt>("t[1]*t[2]", &ctx).unwrap();
        let w = evaluate::<BigInt>("T[2,3,1]", &ctx).unwrap();
        assert_eq!(v, w);
    }
}
