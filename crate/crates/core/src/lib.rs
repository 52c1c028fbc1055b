//! Tetris-like games on small boards as finite transformation semigroups.
//!
//! [`engine`] plays the game and enumerates reachable boards, [`tsgrp`]
//! enumerates the generated semigroup, [`holonomy`] computes the holonomy
//! decomposition without enumerating it, and [`wordlang`] reads and
//! evaluates event words. The guide in `book/` walks through each stage.

pub mod engine;
mod error;
pub mod holonomy;
pub mod tsgrp;
pub mod wordlang;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/engine.md")]
    mod engine {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/holonomy.md")]
    mod holonomy {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
