//! Self-dual repeated-root cyclic and negacyclic codes over `F_{p^s}`.
//!
//! The crate builds finite fields and polynomial rings, factors `x^n - a` via
//! cyclotomic cosets, classifies and enumerates self-dual constacyclic codes,
//! and checks every structural criterion against a brute-force oracle based on
//! generator matrices.

pub mod arith;
pub mod catalog;
pub mod claims;
pub mod cli;
pub mod codes;
pub mod cyclo;
mod ext;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{make_field, Field, FieldElement};
pub use poly::{Poly, Shift};
