//! Noncommutative Gröbner bases over the rationals, applied to partially
//! prescribed block matrix inverse completion problems.

pub mod alphabet;
pub mod classify;
pub mod completion;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod numeric;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod word;

pub use alphabet::{Alphabet, Sym, Symbol, SymbolKind};
pub use error::{AlgebraError, Result};
pub use order::{MonomialOrder, OrderKind};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{Polynomial, Term};
pub use rational::Rational;
pub use word::Word;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/intro.md")]
mod book_intro {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/algebra.md")]
mod book_algebra {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/reduction.md")]
mod book_reduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/bases.md")]
mod book_bases {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/completion.md")]
mod book_completion {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/classification.md")]
mod book_classification {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/numeric.md")]
mod book_numeric {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
