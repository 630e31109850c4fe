//! Exact-arithmetic engine for finitely presented Lie algebras.
//!
//! Elements of a free Lie algebra are written in the basis of regular
//! (Lyndon–Shirshov) words. Relator sets are checked and completed to
//! Gröbner–Shirshov bases, after which the irreducible regular words give a
//! linear basis of the quotient. An independent oracle expands everything
//! into the free associative algebra and recomputes quotient dimensions by
//! plain linear algebra.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod freelie;
pub mod gsbasis;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod words;

pub use error::{Error, Result};
pub use freelie::LieElement;
pub use gsbasis::{GsBasis, Presentation};
pub use scalar::{FieldSpec, Scalar};
pub use words::{Alphabet, Letter, Monomial, Word};
