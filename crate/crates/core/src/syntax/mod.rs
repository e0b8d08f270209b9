//! Terms, the intuitionistic, classical and linear formula languages, their
//! ASCII parsers and printers, and atom bias maps.

mod bias;
mod cformula;
mod iformula;
mod lexer;
mod lformula;
mod parse;
mod print;
mod term;

pub use bias::{BiasMap, Polarity};
pub use cformula::CFormula;
pub use iformula::IFormula;
pub use lformula::{lneg, LFormula};
pub use parse::{
    classical_nnf, parse_cformula_with, parse_iformula, parse_iformula_with, parse_ilist,
    parse_lformula, ParseOptions, KEYWORDS, PHI,
};
pub use print::join;
pub use term::{Atom, Term};

pub(crate) use lexer::{tokenize, Tok};
pub(crate) use parse::Parser;
