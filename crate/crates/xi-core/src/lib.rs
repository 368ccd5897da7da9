//! Exact engine for the signature defect Ξ₃ of Fox 3-colored knots.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed with
//! big integers and rationals; no floating point value ever decides a sign.
//!
//! Pipeline, roughly in dependency order:
//!
//! * [`diagram`]: validated planar diagrams with α and companion curves.
//! * [`coloring`]: Fox colorings, dihedral permutations, anchor-path monodromy.
//! * [`seifert`]: symmetrized Seifert forms and mod p characteristic classes.
//! * [`signature`]: exact signatures, including Tristram–Levine at p-th roots of unity.
//! * [`cover`]: the lifted cell complex of the 3-fold irregular dihedral cover.
//! * [`linking`]: bounding chains, linking blocks and the matrix `M`.
//! * [`xi`]: the final evaluation and the ribbon verdict.
#![no_std]

extern crate alloc;

pub mod coloring;
pub mod cover;
pub mod cyclotomic;
pub mod diagram;
pub mod error;
pub mod linking;
pub mod matrix;
pub mod seifert;
pub mod signature;
pub mod snf;
pub mod xi;

pub use error::Error;

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;
