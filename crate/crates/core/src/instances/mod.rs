//! The concrete Hopf algebras and dual pairs.

pub mod nilcoxeter;
pub mod powersum;
pub mod quasi;
pub mod sym;

pub use nilcoxeter::{DividedPowers, NilcoxeterPair, Polynomial};
pub use powersum::{PowerSum, PowerSumPair, Role};
pub use quasi::{NSym, QSym, QuasiPair};
pub use sym::{Sym, SymBasis, SymPair};
