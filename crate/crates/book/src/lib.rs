//! The guide under `book/` is plain mdbook, which cannot run snippets that
//! depend on this workspace. Each chapter is included here as module docs so
//! `cargo test` compiles and runs every Rust block in it.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/semigroups.md")]
pub mod semigroups {}
#[doc = include_str!("../../../book/src/patterns.md")]
pub mod patterns {}
#[doc = include_str!("../../../book/src/admission.md")]
pub mod admission {}
#[doc = include_str!("../../../book/src/varieties.md")]
pub mod varieties {}
#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
