//! Graded connected Hopf algebras and Hopf pairings, generically.
//!
//! An instance supplies structure constants on its canonical basis over ℤ;
//! everything else (bilinear extension, counit, antipode, pairing of
//! elements, axiom checks) is provided here for any [`Scalar`].

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{Composition, Partition};
use crate::linalg::IntMatrix;
use crate::lincomb::{LinComb, Tensor};
use crate::report::Report;
use crate::scalar::{encode_rational, Scalar};

pub trait BasisKey: Ord + Clone + Debug + Hash + Send + Sync + 'static {
    fn degree(&self) -> usize;
    /// The index as a plain list of integers, for serialization.
    fn index(&self) -> Vec<usize>;
}

impl BasisKey for Composition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn index(&self) -> Vec<usize> {
        self.parts().to_vec()
    }
}

impl BasisKey for Partition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn index(&self) -> Vec<usize> {
        self.parts().to_vec()
    }
}

/// Powers `xⁿ` and divided powers `x^{(n)}` are indexed by `n`.
impl BasisKey for usize {
    fn degree(&self) -> usize {
        *self
    }

    fn index(&self) -> Vec<usize> {
        vec![*self]
    }
}

/// A cache that is safe to share between threads. Values are computed
/// outside the lock, so recursive fills are fine.
pub struct Memo<K, V> {
    map: Mutex<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.lock().expect("memo lock").get(key) {
            return v.clone();
        }
        let v = f();
        self.map
            .lock()
            .expect("memo lock")
            .entry(key.clone())
            .or_insert(v)
            .clone()
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

/// Converts integer structure constants into any scalar ring.
pub fn lift<K: Ord + Clone, R: Scalar>(x: &LinComb<K, BigInt>) -> LinComb<K, R> {
    x.iter().map(|(k, c)| (k.clone(), R::from_bigint(c.clone()))).collect()
}

pub trait HopfAlgebra: Send + Sync {
    type Key: BasisKey;

    /// Algebra tag, e.g. `"QSym"`.
    fn name(&self) -> String;
    /// Name of the canonical basis, e.g. `"M"`.
    fn basis_name(&self) -> &'static str;
    /// Canonical basis of the degree-`d` component, in canonical order.
    fn basis(&self, d: usize) -> Vec<Self::Key>;
    fn one_key(&self) -> Self::Key;
    fn mul_basis(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key, BigInt>;
    fn coproduct_basis(&self, a: &Self::Key) -> Tensor<Self::Key, Self::Key, BigInt>;

    fn antipode_cache(&self) -> Option<&Memo<Self::Key, LinComb<Self::Key, BigInt>>> {
        None
    }

    /// `S(a)` from `Σ S(a₁)a₂ = ε(a)`, recursing on the reduced coproduct.
    fn antipode_basis(&self, a: &Self::Key) -> LinComb<Self::Key, BigInt> {
        let compute = || {
            if a.degree() == 0 {
                return LinComb::basis(a.clone());
            }
            let mut out = LinComb::zero();
            for ((a1, a2), c) in &self.coproduct_basis(a) {
                if a2.degree() == 0 {
                    continue;
                }
                let s = self.antipode_basis(a1);
                let prod = self.mul(&s, &LinComb::basis(a2.clone()));
                out.add_scaled(&prod, &-c.clone());
            }
            out
        };
        match self.antipode_cache() {
            Some(memo) => memo.get_or_insert_with(a, compute),
            None => compute(),
        }
    }

    fn basis_up_to(&self, d: usize) -> Vec<Self::Key> {
        (0..=d).flat_map(|k| self.basis(k)).collect()
    }

    fn one<R: Scalar>(&self) -> LinComb<Self::Key, R> {
        LinComb::basis(self.one_key())
    }

    fn mul<R: Scalar>(&self, u: &LinComb<Self::Key, R>, v: &LinComb<Self::Key, R>) -> LinComb<Self::Key, R> {
        let mut out = LinComb::zero();
        for (a, c) in u {
            for (b, d) in v {
                out.add_scaled(&lift(&self.mul_basis(a, b)), &(c.clone() * d.clone()));
            }
        }
        out
    }

    fn coproduct<R: Scalar>(&self, u: &LinComb<Self::Key, R>) -> Tensor<Self::Key, Self::Key, R> {
        u.map_linear(|a| lift(&self.coproduct_basis(a)))
    }

    fn counit<R: Scalar>(&self, u: &LinComb<Self::Key, R>) -> R {
        u.coeff(&self.one_key())
    }

    fn antipode<R: Scalar>(&self, u: &LinComb<Self::Key, R>) -> LinComb<Self::Key, R> {
        u.map_linear(|a| lift(&self.antipode_basis(a)))
    }

    /// Multiplication on `H ⊗ H`, factorwise.
    fn tensor_mul<R: Scalar>(
        &self,
        u: &Tensor<Self::Key, Self::Key, R>,
        v: &Tensor<Self::Key, Self::Key, R>,
    ) -> Tensor<Self::Key, Self::Key, R> {
        let mut out = LinComb::zero();
        for ((a1, a2), c) in u {
            for ((b1, b2), d) in v {
                let l = self.mul_basis(a1, b1);
                let r = self.mul_basis(a2, b2);
                let cd = c.clone() * d.clone();
                for (x, e) in &l {
                    for (y, f) in &r {
                        out.add_term((x.clone(), y.clone()), cd.clone() * R::from_bigint(e * f));
                    }
                }
            }
        }
        out
    }
}

pub fn degree_component<K: BasisKey, R: Scalar>(u: &LinComb<K, R>, d: usize) -> LinComb<K, R> {
    u.filter(|k| k.degree() == d)
}

/// A Hopf pairing `⟨·,·⟩ : H⁻ × H⁺ → ℤ`.
pub trait DualPair: Send + Sync {
    type Plus: HopfAlgebra;
    type Minus: HopfAlgebra;

    fn name(&self) -> String;
    fn plus(&self) -> &Self::Plus;
    fn minus(&self) -> &Self::Minus;
    /// `⟨x, a⟩` on canonical basis elements; zero across degrees.
    fn pair_basis(&self, x: &<Self::Minus as HopfAlgebra>::Key, a: &<Self::Plus as HopfAlgebra>::Key) -> BigInt;

    /// Whether `a` lies in the image of the Cartan map, the plus half of
    /// the projective double.
    fn in_projective_image<R: Scalar>(&self, _a: &LinComb<<Self::Plus as HopfAlgebra>::Key, R>) -> bool {
        true
    }

    /// A ℤ-basis of the Cartan image in degree `d`.
    fn projective_basis(&self, d: usize) -> Vec<LinComb<<Self::Plus as HopfAlgebra>::Key, BigInt>> {
        self.plus().basis(d).into_iter().map(LinComb::basis).collect()
    }

    fn pair<R: Scalar>(
        &self,
        x: &LinComb<<Self::Minus as HopfAlgebra>::Key, R>,
        a: &LinComb<<Self::Plus as HopfAlgebra>::Key, R>,
    ) -> R {
        let mut out = R::zero();
        for (xk, c) in x {
            for (ak, d) in a {
                if xk.degree() != ak.degree() {
                    continue;
                }
                let p = self.pair_basis(xk, ak);
                if !p.is_zero() {
                    out = out + c.clone() * d.clone() * R::from_bigint(p);
                }
            }
        }
        out
    }

    /// Gram matrix of the pairing in degree `d`: rows minus, columns plus.
    fn gram(&self, d: usize) -> IntMatrix {
        let xs = self.minus().basis(d);
        let as_ = self.plus().basis(d);
        let rows: Vec<Vec<BigInt>> = xs
            .iter()
            .map(|x| as_.iter().map(|a| self.pair_basis(x, a)).collect())
            .collect();
        IntMatrix::from_rows(as_.len(), &rows).expect("rectangular by construction")
    }
}

/// Element JSON: `{"algebra", "basis", "terms": [{"index", "coeff"}]}`.
pub fn element_json<K: BasisKey, R: Scalar>(algebra: &str, basis: &str, u: &LinComb<K, R>) -> Value {
    let terms: Vec<Value> = u
        .iter()
        .map(|(k, c)| json!({"index": k.index(), "coeff": encode_rational(&c.to_rational())}))
        .collect();
    json!({"algebra": algebra, "basis": basis, "terms": terms})
}

pub fn basis_json<H: HopfAlgebra>(h: &H, k: &H::Key) -> Value {
    element_json::<_, BigInt>(&h.name(), h.basis_name(), &LinComb::basis(k.clone()))
}

pub fn tensor_json<K1: BasisKey, K2: BasisKey, R: Scalar>(u: &Tensor<K1, K2, R>) -> Value {
    let terms: Vec<Value> = u
        .iter()
        .map(|((a, b), c)| json!({"index": [a.index(), b.index()], "coeff": encode_rational(&c.to_rational())}))
        .collect();
    json!({"terms": terms})
}

fn triple_coproducts<H: HopfAlgebra>(
    h: &H,
    a: &H::Key,
) -> (
    LinComb<(H::Key, H::Key, H::Key), BigInt>,
    LinComb<(H::Key, H::Key, H::Key), BigInt>,
) {
    let d = h.coproduct_basis(a);
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a1, a2), c) in &d {
        for ((b1, b2), e) in &h.coproduct_basis(a1) {
            left.add_term((b1.clone(), b2.clone(), a2.clone()), c * e);
        }
        for ((b1, b2), e) in &h.coproduct_basis(a2) {
            right.add_term((a1.clone(), b1.clone(), b2.clone()), c * e);
        }
    }
    (left, right)
}

/// Checks the graded connected Hopf axioms on all basis elements of
/// degree ≤ `max_degree` (pairs and triples bounded by total degree).
pub fn axiom_check<H: HopfAlgebra>(h: &H, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("hopf_axioms:{}", h.name()), max_degree);
    let one: LinComb<H::Key, BigInt> = h.one();
    let all = h.basis_up_to(max_degree);
    let w = |k: &H::Key| basis_json(h, k);

    rep.check(
        h.basis(0) == vec![h.one_key()],
        || "connected: degree 0 is spanned by the unit".into(),
        || json!(null),
    );
    rep.check(
        h.coproduct_basis(&h.one_key()) == LinComb::basis((h.one_key(), h.one_key())),
        || "Δ(1) = 1⊗1".into(),
        || w(&h.one_key()),
    );
    for a in &all {
        let ea: LinComb<H::Key, BigInt> = LinComb::basis(a.clone());
        rep.check(
            h.mul(&one, &ea) == ea && h.mul(&ea, &one) == ea,
            || "unit law 1·a = a = a·1".into(),
            || w(a),
        );
        let delta = h.coproduct_basis(a);
        let homogeneous = delta.keys().all(|(x, y)| x.degree() + y.degree() == a.degree());
        rep.check(homogeneous, || "Δ preserves degree".into(), || w(a));
        let (l, r) = triple_coproducts(h, a);
        rep.check(l == r, || "coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ".into(), || w(a));
        // (ε⊗id)Δ = id = (id⊗ε)Δ
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a1, a2), c) in &delta {
            if a1.degree() == 0 {
                left.add_scaled(
                    &LinComb::basis(a2.clone()),
                    &(c * h.counit::<BigInt>(&LinComb::basis(a1.clone()))),
                );
            }
            if a2.degree() == 0 {
                right.add_scaled(
                    &LinComb::basis(a1.clone()),
                    &(c * h.counit::<BigInt>(&LinComb::basis(a2.clone()))),
                );
            }
        }
        rep.check(left == ea && right == ea, || "counit laws".into(), || w(a));
        // ∇(S⊗id)Δ = ηε = ∇(id⊗S)Δ
        let expect = if a.degree() == 0 { ea.clone() } else { LinComb::zero() };
        let mut ls = LinComb::zero();
        let mut rs = LinComb::zero();
        for ((a1, a2), c) in &delta {
            let e1 = LinComb::basis(a1.clone());
            let e2 = LinComb::basis(a2.clone());
            ls.add_scaled(&h.mul(&h.antipode(&e1), &e2), c);
            rs.add_scaled(&h.mul(&e1, &h.antipode(&e2)), c);
        }
        rep.check(ls == expect, || "antipode law ∇(S⊗id)Δ = ηε".into(), || w(a));
        rep.check(rs == expect, || "antipode law ∇(id⊗S)Δ = ηε".into(), || w(a));
        let s = h.antipode_basis(a);
        rep.check(
            s.keys().all(|k| k.degree() == a.degree()),
            || "antipode preserves degree".into(),
            || w(a),
        );
    }
    for a in &all {
        for b in &all {
            if a.degree() + b.degree() > max_degree {
                continue;
            }
            let ea = LinComb::basis(a.clone());
            let eb = LinComb::basis(b.clone());
            let ab: LinComb<H::Key, BigInt> = h.mul(&ea, &eb);
            rep.check(
                ab.keys().all(|k| k.degree() == a.degree() + b.degree()),
                || "product preserves degree".into(),
                || json!([w(a), w(b)]),
            );
            let lhs = h.coproduct(&ab);
            let rhs = h.tensor_mul(&h.coproduct_basis(a), &h.coproduct_basis(b));
            rep.check(
                lhs == rhs,
                || "Δ is an algebra map Δ(ab) = Δ(a)Δ(b)".into(),
                || json!([w(a), w(b)]),
            );
            rep.check(
                h.counit(&ab) == h.counit(&ea) * h.counit(&eb),
                || "ε is an algebra map".into(),
                || json!([w(a), w(b)]),
            );
            for c in &all {
                if a.degree() + b.degree() + c.degree() > max_degree {
                    continue;
                }
                let ec = LinComb::basis(c.clone());
                let l = h.mul(&ab, &ec);
                let r = h.mul(&ea, &h.mul(&eb, &ec));
                rep.check(l == r, || "associativity".into(), || json!([w(a), w(b), w(c)]));
            }
        }
    }
    rep
}

/// `S² = id` on every basis element of degree ≤ `max_degree`.
pub fn antipode_involution_check<H: HopfAlgebra>(h: &H, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("antipode_involution:{}", h.name()), max_degree);
    for a in h.basis_up_to(max_degree) {
        let ea: LinComb<H::Key, BigInt> = LinComb::basis(a.clone());
        rep.check(
            h.antipode(&h.antipode(&ea)) == ea,
            || "S² = id".into(),
            || basis_json(h, &a),
        );
    }
    rep
}

/// Checks that `⟨·,·⟩` is a nondegenerate Hopf pairing up to `max_degree`.
pub fn pairing_check<P: DualPair>(p: &P, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("dual_pair:{}", p.name()), max_degree);
    let (hp, hm) = (p.plus(), p.minus());
    let one_p: LinComb<_, BigInt> = hp.one();
    let one_m: LinComb<_, BigInt> = hm.one();
    rep.check(p.pair(&one_m, &one_p).is_one(), || "⟨1,1⟩ = 1".into(), || json!(null));
    for d in 0..=max_degree {
        let xs = hm.basis(d);
        let as_ = hp.basis(d);
        rep.check(
            xs.len() == as_.len(),
            || format!("graded dimensions agree in degree {d}"),
            || json!(d),
        );
        if xs.len() == as_.len() {
            let det = p.gram(d).det().expect("square");
            rep.check(
                !det.is_zero(),
                || format!("pairing nondegenerate in degree {d}"),
                || json!(d),
            );
        }
        for x in &xs {
            let ex: LinComb<_, BigInt> = LinComb::basis(x.clone());
            let dx = hm.coproduct(&ex);
            // ⟨x, ab⟩ = ⟨Δx, a⊗b⟩ for all a, b with deg a + deg b = d.
            for i in 0..=d {
                for a in hp.basis(i) {
                    for b in hp.basis(d - i) {
                        let ab = hp.mul_basis(&a, &b);
                        let lhs = p.pair(&ex, &lift(&ab));
                        let mut rhs = BigInt::zero();
                        for ((x1, x2), c) in &dx {
                            if x1.degree() == i {
                                rhs += c * p.pair_basis(x1, &a) * p.pair_basis(x2, &b);
                            }
                        }
                        rep.check(
                            lhs == rhs,
                            || "⟨x, ab⟩ = ⟨Δx, a⊗b⟩".into(),
                            || json!([basis_json(hm, x), basis_json(hp, &a), basis_json(hp, &b)]),
                        );
                    }
                }
            }
        }
        for a in &as_ {
            let ea = LinComb::basis(a.clone());
            let da = hp.coproduct(&ea);
            for i in 0..=d {
                for x in hm.basis(i) {
                    for y in hm.basis(d - i) {
                        let xy = hm.mul_basis(&x, &y);
                        let lhs = p.pair(&lift(&xy), &ea);
                        let mut rhs = BigInt::zero();
                        for ((a1, a2), c) in &da {
                            if a1.degree() == i {
                                rhs += c * p.pair_basis(&x, a1) * p.pair_basis(&y, a2);
                            }
                        }
                        rep.check(
                            lhs == rhs,
                            || "⟨xy, a⟩ = ⟨x⊗y, Δa⟩".into(),
                            || json!([basis_json(hm, &x), basis_json(hm, &y), basis_json(hp, a)]),
                        );
                    }
                }
            }
            let ea: LinComb<_, BigInt> = ea;
            rep.check(
                p.pair(&one_m, &ea) == hp.counit(&ea),
                || "⟨1, a⟩ = ε(a)".into(),
                || basis_json(hp, a),
            );
        }
        for x in &xs {
            let ex: LinComb<_, BigInt> = LinComb::basis(x.clone());
            rep.check(
                p.pair(&ex, &one_p) == hm.counit(&ex),
                || "⟨x, 1⟩ = ε(x)".into(),
                || basis_json(hm, x),
            );
        }
    }
    rep
}
