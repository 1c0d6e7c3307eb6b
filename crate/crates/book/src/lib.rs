//! The guide in `book/` compiled as documentation, so that `cargo test`
//! runs its listings. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/combinatorics.md")]
pub mod combinatorics {}
#[doc = include_str!("../../../book/src/hopf.md")]
pub mod hopf {}
#[doc = include_str!("../../../book/src/heisenberg.md")]
pub mod heisenberg {}
#[doc = include_str!("../../../book/src/hecke.md")]
pub mod hecke {}
#[doc = include_str!("../../../book/src/rootofunity.md")]
pub mod rootofunity {}
#[doc = include_str!("../../../book/src/freeness.md")]
pub mod freeness {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
