//! The nilcoxeter pair: divided powers `Γ = ℤ[x, x²/2!, …]` against the
//! polynomial ring `ℤ[x]`, with `⟨xᵐ, x^{(n)}⟩ = δ_{mn}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::hopf::{DualPair, HopfAlgebra};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::{binomial, factorial, Scalar, ScalarDomain};

/// Divided powers, basis `x^{(n)} = xⁿ/n!`.
pub struct DividedPowers;

impl HopfAlgebra for DividedPowers {
    type Key = usize;

    fn name(&self) -> String {
        "Gamma".into()
    }

    fn basis_name(&self) -> &'static str {
        "xdiv"
    }

    fn basis(&self, d: usize) -> Vec<usize> {
        vec![d]
    }

    fn one_key(&self) -> usize {
        0
    }

    /// `x^{(m)} x^{(n)} = C(m+n, n) x^{(m+n)}`.
    fn mul_basis(&self, a: &usize, b: &usize) -> LinComb<usize, BigInt> {
        LinComb::term(a + b, binomial((a + b) as u64, *b as u64))
    }

    fn coproduct_basis(&self, a: &usize) -> Tensor<usize, usize, BigInt> {
        (0..=*a).map(|i| ((i, a - i), BigInt::one())).collect()
    }
}

/// Polynomials, basis `xⁿ`.
pub struct Polynomial;

impl HopfAlgebra for Polynomial {
    type Key = usize;

    fn name(&self) -> String {
        "Z[x]".into()
    }

    fn basis_name(&self) -> &'static str {
        "x"
    }

    fn basis(&self, d: usize) -> Vec<usize> {
        vec![d]
    }

    fn one_key(&self) -> usize {
        0
    }

    fn mul_basis(&self, a: &usize, b: &usize) -> LinComb<usize, BigInt> {
        LinComb::basis(a + b)
    }

    /// `x` is primitive, so `Δxⁿ = Σ C(n,i) xⁱ ⊗ x^{n-i}`.
    fn coproduct_basis(&self, a: &usize) -> Tensor<usize, usize, BigInt> {
        (0..=*a).map(|i| ((i, a - i), binomial(*a as u64, i as u64))).collect()
    }
}

pub struct NilcoxeterPair;

impl NilcoxeterPair {
    pub fn shared() -> &'static NilcoxeterPair {
        &NilcoxeterPair
    }
}

impl DualPair for NilcoxeterPair {
    type Plus = DividedPowers;
    type Minus = Polynomial;

    fn name(&self) -> String {
        "nilcoxeter".into()
    }

    fn plus(&self) -> &DividedPowers {
        &DividedPowers
    }

    fn minus(&self) -> &Polynomial {
        &Polynomial
    }

    fn pair_basis(&self, x: &usize, a: &usize) -> BigInt {
        BigInt::from(u8::from(x == a))
    }

    /// Over ℤ the Cartan image is spanned by `n!·x^{(n)}`; over ℚ it is
    /// everything.
    fn in_projective_image<R: Scalar>(&self, a: &LinComb<usize, R>) -> bool {
        if R::DOMAIN == ScalarDomain::Rational {
            return true;
        }
        a.iter().all(|(n, c)| {
            let q = c.to_rational();
            q.is_integer() && q.to_integer().is_multiple_of(&factorial(*n as u64))
        })
    }

    fn projective_basis(&self, d: usize) -> Vec<LinComb<usize, BigInt>> {
        vec![LinComb::term(d, factorial(d as u64))]
    }
}

/// Cartan map `ℤ[x] → Γ`, `xⁿ ↦ n!·x^{(n)}`.
pub fn cartan_poly<R: Scalar>(u: &LinComb<usize, R>) -> LinComb<usize, R> {
    u.iter()
        .map(|(n, c)| (*n, c.clone() * R::from_bigint(factorial(*n as u64))))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
