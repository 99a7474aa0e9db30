//! Exact computation of Hilbert series of noncommutative monomial algebras.
//!
//! The crate combines four ingredients:
//!
//! * word and language combinatorics with degree-truncated set algebra ([`lang`]),
//! * context-free grammars with bounded enumeration, derivation counting and
//!   ambiguity certification ([`grammar`]), plus regular languages and right
//!   quotients ([`regular`]),
//! * an exact symbolic kernel over `Q(t)`: rational functions, lex Gröbner
//!   bases, elimination and power-series root lifting ([`algebra`]),
//! * the algebraic-system pipeline for grammars ([`csys`]), chain languages and
//!   Hilbert series assembly ([`homology`]) and degree-truncated
//!   noncommutative completion ([`gsb`]).
//!
//! Everything here is `no_std` + `alloc`; file formats and the command-line
//! front end live in the `nchilbert` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod csys;
pub mod error;
pub mod grammar;
pub mod gsb;
pub mod homology;
pub mod lang;
pub mod regular;

pub use error::{Error, ErrorKind, Result};
