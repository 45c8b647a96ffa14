//! Involutive divisions and involutive bases.
//!
//! The crate covers the whole pipeline from exponent-vector monomials to
//! minimal involutive bases of polynomial ideals over the rationals:
//!
//! - [`monomials`]: monomials, variable sets and the admissible orderings.
//! - [`divisions`]: Thomas, Janet, Pommaret, Division I, Division II and the
//!   ordering-induced divisions.
//! - [`mono_completion`]: completion of monomial sets to involution and the
//!   involutivity predicates used to check it.
//! - [`polynomials`]: exact sparse polynomials, normal forms and a Buchberger
//!   Gröbner basis used as an oracle.
//! - [`basis`]: minimal involutive bases of polynomial ideals.
//! - [`problem`]: the line-oriented problem file format.
//! - [`samples`]: benchmark systems and seeded random inputs.

pub mod basis;
pub mod divisions;
pub mod error;
pub mod mono_completion;
pub mod monomials;
mod parse;
pub mod polynomials;
pub mod problem;
pub mod samples;

pub use basis::{is_involutive_basis, minimal_involutive_basis, BasisError, BasisOptions, BasisStats};
pub use divisions::{Division, Separation};
pub use error::{Error, Limit, ParseError};
pub use mono_completion::{involutive_complete, CompletionError, CompletionLimits, CompletionOptions, CompletionStats};
pub use monomials::{Monomial, MonomialOrdering, VarSet, VariableContext};
pub use polynomials::{Polynomial, Term};
pub use problem::ProblemFile;
