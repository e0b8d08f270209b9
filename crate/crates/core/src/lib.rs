//! Focused proof search for intuitionistic (LJF), classical (LKF) and linear
//! (LLF) sequent calculi, with polarity-driven embeddings, translations into
//! linear logic, independent proof checkers and decision oracles.

pub mod error;
pub mod syntax;

pub use error::{FragmentError, SyntaxError};
pub use syntax::{BiasMap, CFormula, IFormula, LFormula, Polarity, Term};
pub mod bench;
pub mod embed;
pub mod kernel;
pub mod linear;
pub mod oracle;
pub mod polarity;
pub mod search;
