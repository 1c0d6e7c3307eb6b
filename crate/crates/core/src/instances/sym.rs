//! Symmetric functions, realized inside QSym through
//! `m_λ = Σ_{α̃ = λ} M_α`, with the h, e, p and Schur bases as views.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{partitions, Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::hopf::{lift, DualPair, HopfAlgebra, Memo};
use crate::instances::quasi::QSym;
use crate::linalg::rational_inverse;
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::{Scalar, ScalarDomain};

type PComb = LinComb<Partition, BigInt>;

/// `m_λ ↦ Σ_{α̃=λ} M_α`.
pub fn m_to_qsym(lambda: &Partition) -> LinComb<Composition, BigInt> {
    lambda
        .rearrangements()
        .into_iter()
        .map(|a| (a, BigInt::one()))
        .collect()
}

/// Embeds an m-basis element into QSym.
pub fn sym_as_qsym<R: Scalar>(u: &LinComb<Partition, R>) -> LinComb<Composition, R> {
    u.map_linear(|l| lift(&m_to_qsym(l)))
}

/// Reads a symmetric QSym element back in the m basis; `None` if it is not
/// symmetric.
pub fn qsym_as_sym<R: Scalar>(u: &LinComb<Composition, R>) -> Option<LinComb<Partition, R>> {
    if !crate::instances::quasi::is_symmetric(u) {
        return None;
    }
    Some(
        u.iter()
            .filter(|(a, _)| a.is_partition_shaped())
            .map(|(a, c)| (a.sort_to_partition(), c.clone()))
            .collect(),
    )
}

#[derive(Default)]
pub struct Sym {
    products: Memo<(Partition, Partition), PComb>,
    coproducts: Memo<Partition, Tensor<Partition, Partition, BigInt>>,
    antipodes: Memo<Partition, PComb>,
}

impl Sym {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shared() -> &'static Sym {
        static CELL: OnceLock<Sym> = OnceLock::new();
        CELL.get_or_init(Sym::new)
    }
}

impl HopfAlgebra for Sym {
    type Key = Partition;

    fn name(&self) -> String {
        "Sym".into()
    }

    fn basis_name(&self) -> &'static str {
        "m"
    }

    fn basis(&self, d: usize) -> Vec<Partition> {
        partitions(d)
    }

    fn one_key(&self) -> Partition {
        Partition::empty()
    }

    /// Embed, quasi-shuffle, and read the coefficients at partition-shaped
    /// compositions.
    fn mul_basis(&self, a: &Partition, b: &Partition) -> PComb {
        if a.is_empty() {
            return LinComb::basis(b.clone());
        }
        if b.is_empty() {
            return LinComb::basis(a.clone());
        }
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.products.get_or_insert_with(&key, || {
            let q = QSym::shared();
            let prod = q.mul(&m_to_qsym(a), &m_to_qsym(b));
            prod.iter()
                .filter(|(g, _)| g.is_partition_shaped())
                .map(|(g, c)| (g.sort_to_partition(), c.clone()))
                .collect()
        })
    }

    fn coproduct_basis(&self, a: &Partition) -> Tensor<Partition, Partition, BigInt> {
        self.coproducts.get_or_insert_with(a, || {
            let q = QSym::shared();
            q.coproduct(&m_to_qsym(a))
                .iter()
                .filter(|((x, y), _)| x.is_partition_shaped() && y.is_partition_shaped())
                .map(|((x, y), c)| ((x.sort_to_partition(), y.sort_to_partition()), c.clone()))
                .collect()
        })
    }

    fn antipode_cache(&self) -> Option<&Memo<Partition, PComb>> {
        Some(&self.antipodes)
    }
}

/// Named bases of Sym; `M` is the canonical monomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    M,
    H,
    E,
    P,
    S,
}

impl SymBasis {
    pub fn tag(self) -> &'static str {
        match self {
            SymBasis::M => "m",
            SymBasis::H => "h",
            SymBasis::E => "e",
            SymBasis::P => "p",
            SymBasis::S => "s",
        }
    }
}

/// Change of basis in one degree.
#[derive(Debug)]
pub struct ConversionTable {
    pub keys: Vec<Partition>,
    /// `to_m[i]`: the basis element `keys[i]` in the m basis.
    pub to_m: Vec<PComb>,
    /// `from_m[i]`: `m_{keys[i]}` in the target basis.
    pub from_m: Vec<LinComb<Partition, BigRational>>,
}

fn power_of(sym: &Sym, factors: impl Iterator<Item = PComb>) -> PComb {
    factors.fold(sym.one(), |acc, f| sym.mul(&acc, &f))
}

/// `h_n = Σ_{μ ⊢ n} m_μ`.
pub fn h_n(n: usize) -> PComb {
    partitions(n).into_iter().map(|p| (p, BigInt::one())).collect()
}

/// `e_n = m_{(1ⁿ)}`.
pub fn e_n(n: usize) -> PComb {
    LinComb::basis(Partition::from_parts_unchecked(vec![1; n]))
}

/// `p_n = m_{(n)}`; `p_0 = 1`.
pub fn p_n(n: usize) -> PComb {
    if n == 0 {
        return LinComb::basis(Partition::empty());
    }
    LinComb::basis(Partition::from_parts_unchecked(vec![n]))
}

/// Complete homogeneous `h_λ` in the m basis.
pub fn h_to_m(lambda: &Partition) -> PComb {
    let sym = Sym::shared();
    power_of(sym, lambda.parts().iter().map(|&n| h_n(n)))
}

pub fn e_to_m(lambda: &Partition) -> PComb {
    let sym = Sym::shared();
    power_of(sym, lambda.parts().iter().map(|&n| e_n(n)))
}

pub fn p_to_m(lambda: &Partition) -> PComb {
    let sym = Sym::shared();
    power_of(sym, lambda.parts().iter().map(|&n| p_n(n)))
}

/// `s_λ = det(h_{λ_i - i + j})`, expanded by the Leibniz formula into the
/// h basis.
pub fn schur_in_h(lambda: &Partition) -> PComb {
    let l = lambda.len();
    let mut out = LinComb::zero();
    for sigma in Permutation::all(l) {
        let mut parts = Vec::with_capacity(l);
        let mut ok = true;
        for i in 0..l {
            let v = lambda.parts()[i] as i64 - i as i64 + sigma.apply(i + 1) as i64 - 1;
            if v < 0 {
                ok = false;
                break;
            }
            if v > 0 {
                parts.push(v as usize);
            }
        }
        if !ok {
            continue;
        }
        let sgn = if sigma.length() % 2 == 0 { 1 } else { -1 };
        let key = Partition::from_unsorted(parts).expect("positive parts");
        out.add_term(key, BigInt::from(sgn));
    }
    out
}

pub fn s_to_m(lambda: &Partition) -> PComb {
    schur_in_h(lambda).map_linear(h_to_m)
}

fn build_table(basis: SymBasis, d: usize) -> ConversionTable {
    let keys = partitions(d);
    let to_m: Vec<PComb> = keys
        .iter()
        .map(|k| match basis {
            SymBasis::M => LinComb::basis(k.clone()),
            SymBasis::H => h_to_m(k),
            SymBasis::E => e_to_m(k),
            SymBasis::P => p_to_m(k),
            SymBasis::S => s_to_m(k),
        })
        .collect();
    let a: Vec<Vec<BigRational>> = to_m
        .iter()
        .map(|row| keys.iter().map(|k| BigRational::from_integer(row.coeff(k))).collect())
        .collect();
    let inv = rational_inverse(&a).expect("every named basis of Sym is a basis");
    let from_m = inv
        .into_iter()
        .map(|row| keys.iter().cloned().zip(row).filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    ConversionTable { keys, to_m, from_m }
}

/// Per-degree conversion tables, built once and shared.
pub fn conversion_table(basis: SymBasis, d: usize) -> Arc<ConversionTable> {
    static TABLES: OnceLock<Memo<(SymBasis, usize), Arc<ConversionTable>>> = OnceLock::new();
    TABLES
        .get_or_init(Memo::new)
        .get_or_insert_with(&(basis, d), || Arc::new(build_table(basis, d)))
}

fn check_domain<R: Scalar>(basis: SymBasis) -> Result<()> {
    if basis == SymBasis::P && R::DOMAIN == ScalarDomain::Integer {
        return Err(Error::ScalarDomain("the power-sum basis needs rational scalars".into()));
    }
    Ok(())
}

/// Expresses an element given in `basis` in the m basis.
pub fn to_monomial<R: Scalar>(basis: SymBasis, u: &LinComb<Partition, R>) -> Result<LinComb<Partition, R>> {
    check_domain::<R>(basis)?;
    Ok(u.map_linear(|k| {
        let t = conversion_table(basis, k.size());
        let i = t.keys.binary_search_by(|x| x.cmp(k)).expect("key in table");
        lift(&t.to_m[i])
    }))
}

/// Expresses an m-basis element in `basis`. Fails if a coefficient is not
/// representable in `R`.
pub fn from_monomial<R: Scalar>(basis: SymBasis, u: &LinComb<Partition, R>) -> Result<LinComb<Partition, R>> {
    check_domain::<R>(basis)?;
    let mut out = LinComb::zero();
    for (k, c) in u {
        let t = conversion_table(basis, k.size());
        let i = t.keys.binary_search_by(|x| x.cmp(k)).expect("key in table");
        for (j, q) in &t.from_m[i] {
            let q = R::from_rational(q)
                .ok_or_else(|| Error::ScalarDomain(format!("m_{k} has a non-integral {} coefficient", basis.tag())))?;
            out.add_term(j.clone(), c.clone() * q);
        }
    }
    Ok(out)
}

/// The self-dual pair `(Sym, Sym)` with `⟨m_λ, h_μ⟩ = δ_{λμ}`; both sides
/// are stored in the m basis.
pub struct SymPair;

impl SymPair {
    pub fn shared() -> &'static SymPair {
        &SymPair
    }
}

impl DualPair for SymPair {
    type Plus = Sym;
    type Minus = Sym;

    fn name(&self) -> String {
        "sym".into()
    }

    fn plus(&self) -> &Sym {
        Sym::shared()
    }

    fn minus(&self) -> &Sym {
        Sym::shared()
    }

    /// `⟨m_μ, m_λ⟩` is the h_λ-coefficient of m_μ.
    fn pair_basis(&self, x: &Partition, a: &Partition) -> BigInt {
        if x.size() != a.size() {
            return BigInt::zero();
        }
        let t = conversion_table(SymBasis::H, x.size());
        let i = t.keys.binary_search_by(|k| k.cmp(x)).expect("key in table");
        let q = t.from_m[i].coeff(a);
        debug_assert!(q.is_integer());
        q.to_integer()
    }
}

/// Cartan map `χ : NSym → Sym`, `𝐡_α ↦ h_{α̃}`, landing in the m basis.
pub fn cartan_chi<R: Scalar>(u: &LinComb<Composition, R>) -> LinComb<Partition, R> {
    u.map_linear(|a| lift(&h_to_m(&a.sort_to_partition())))
}
