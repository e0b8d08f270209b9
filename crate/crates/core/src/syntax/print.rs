//! Printers for the three formula types. Each emits the minimal parentheses
//! needed for the matching parser to rebuild the same tree.

use std::fmt::{self, Display, Formatter, Write};

use super::cformula::CFormula;
use super::iformula::IFormula;
use super::lformula::LFormula;

const QUANT: u8 = 0;
const PREFIX: u8 = 5;
const PRIMARY: u8 = 6;

fn open(f: &mut Formatter<'_>, own: u8, min: u8) -> fmt::Result {
    if own < min {
        f.write_char('(')?;
    }
    Ok(())
}

fn close(f: &mut Formatter<'_>, own: u8, min: u8) -> fmt::Result {
    if own < min {
        f.write_char(')')?;
    }
    Ok(())
}

type Body<'a> = Box<dyn Fn(&mut Formatter<'_>) -> fmt::Result + 'a>;

fn write_i(f: &mut Formatter<'_>, fm: &IFormula, min: u8) -> fmt::Result {
    use IFormula::*;
    let (own, body): (u8, Body<'_>) = match fm {
        Atom(a) => (PRIMARY, Box::new(move |f| write!(f, "{a}"))),
        True => (PRIMARY, Box::new(|f| f.write_str("true"))),
        False => (PRIMARY, Box::new(|f| f.write_str("false"))),
        Impl(l, r) if **r == False => (
            PREFIX,
            Box::new(move |f| {
                f.write_char('~')?;
                write_i(f, l, PREFIX)
            }),
        ),
        Impl(l, r) => (
            1,
            Box::new(move |f| {
                write_i(f, l, 2)?;
                f.write_str(" -> ")?;
                write_i(f, r, 1)
            }),
        ),
        Disj(l, r) => (
            2,
            Box::new(move |f| {
                write_i(f, l, 2)?;
                f.write_str(" | ")?;
                write_i(f, r, 3)
            }),
        ),
        ConjNeg(l, r) => (
            3,
            Box::new(move |f| {
                write_i(f, l, 3)?;
                f.write_str(" &- ")?;
                write_i(f, r, 4)
            }),
        ),
        ConjPos(l, r) => (
            4,
            Box::new(move |f| {
                write_i(f, l, 4)?;
                f.write_str(" &+ ")?;
                write_i(f, r, PREFIX)
            }),
        ),
        Exists(x, b) => (
            QUANT,
            Box::new(move |f| {
                write!(f, "exists {x}. ")?;
                write_i(f, b, QUANT)
            }),
        ),
        Forall(x, b) => (
            QUANT,
            Box::new(move |f| {
                write!(f, "forall {x}. ")?;
                write_i(f, b, QUANT)
            }),
        ),
    };
    open(f, own, min)?;
    body(f)?;
    close(f, own, min)
}

fn write_c(f: &mut Formatter<'_>, fm: &CFormula, min: u8) -> fmt::Result {
    use CFormula::*;
    let bin =
        |f: &mut Formatter<'_>, l: &CFormula, op: &str, r: &CFormula, lvl: u8| -> fmt::Result {
            write_c(f, l, lvl)?;
            f.write_str(op)?;
            write_c(f, r, lvl + 1)
        };
    let own = match fm {
        PosLit(_) | True | False => PRIMARY,
        NegLit(_) | NotTrue | NotFalse => PREFIX,
        OrNeg(..) => 1,
        OrPos(..) => 2,
        AndNeg(..) => 3,
        AndPos(..) => 4,
        Exists(..) | Forall(..) => QUANT,
    };
    open(f, own, min)?;
    match fm {
        PosLit(a) => write!(f, "{a}")?,
        NegLit(a) => write!(f, "~{a}")?,
        True => f.write_str("#t")?,
        False => f.write_str("#f")?,
        NotTrue => f.write_str("~#t")?,
        NotFalse => f.write_str("~#f")?,
        OrNeg(l, r) => bin(f, l, " |- ", r, 1)?,
        OrPos(l, r) => bin(f, l, " |+ ", r, 2)?,
        AndNeg(l, r) => bin(f, l, " &- ", r, 3)?,
        AndPos(l, r) => bin(f, l, " &+ ", r, 4)?,
        Exists(x, b) => {
            write!(f, "exists {x}. ")?;
            write_c(f, b, QUANT)?
        }
        Forall(x, b) => {
            write!(f, "forall {x}. ")?;
            write_c(f, b, QUANT)?
        }
    }
    close(f, own, min)
}

fn write_l(f: &mut Formatter<'_>, fm: &LFormula, min: u8) -> fmt::Result {
    use LFormula::*;
    let bin =
        |f: &mut Formatter<'_>, l: &LFormula, op: &str, r: &LFormula, lvl: u8| -> fmt::Result {
            write_l(f, l, lvl)?;
            f.write_str(op)?;
            write_l(f, r, lvl + 1)
        };
    let own = match fm {
        Atom(_) | NegAtom(_) | One | Zero | Top | Bot => PRIMARY,
        Bang(_) | Quest(_) => PREFIX,
        Plus(..) => 1,
        With(..) => 2,
        Par(..) => 3,
        Tensor(..) => 4,
        Exists(..) | Forall(..) => QUANT,
    };
    open(f, own, min)?;
    match fm {
        Atom(a) => write!(f, "{a}")?,
        NegAtom(a) => write!(f, "{a}^")?,
        One => f.write_str("1")?,
        Zero => f.write_str("0")?,
        Top => f.write_str("top")?,
        Bot => f.write_str("bot")?,
        Bang(b) => {
            f.write_char('!')?;
            write_l(f, b, PREFIX)?
        }
        Quest(b) => {
            f.write_char('?')?;
            write_l(f, b, PREFIX)?
        }
        Plus(l, r) => bin(f, l, " (+) ", r, 1)?,
        With(l, r) => bin(f, l, " & ", r, 2)?,
        Par(l, r) => bin(f, l, " par ", r, 3)?,
        Tensor(l, r) => bin(f, l, " * ", r, 4)?,
        Exists(x, b) => {
            write!(f, "exists {x}. ")?;
            write_l(f, b, QUANT)?
        }
        Forall(x, b) => {
            write!(f, "forall {x}. ")?;
            write_l(f, b, QUANT)?
        }
    }
    close(f, own, min)
}

impl Display for IFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_i(f, self, QUANT)
    }
}

impl Display for CFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_c(f, self, QUANT)
    }
}

impl Display for LFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_l(f, self, QUANT)
    }
}

/// Joins displayable items with `", "`.
pub fn join<T: Display>(items: &[T]) -> String {
    let mut out = String::new();
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse::{classical_nnf, parse_iformula, parse_lformula};

    #[test]
    fn minimal_parentheses() {
        for (src, printed) in [
            ("a -> (b -> c)", "a -> b -> c"),
            ("(a -> b) -> c", "(a -> b) -> c"),
            ("(a &+ b) &- c", "a &+ b &- c"),
            ("a &+ (b &- c)", "a &+ (b &- c)"),
            ("a -> false", "~a"),
            ("~(a | b)", "~(a | b)"),
            ("(forall x. p(x)) -> q", "(forall x. p(x)) -> q"),
        ] {
            assert_eq!(parse_iformula(src).unwrap().to_string(), printed, "{src}");
        }
    }

    #[test]
    fn classical_printing() {
        assert_eq!(classical_nnf("~(p &+ q)").unwrap().to_string(), "~p |- ~q");
        assert_eq!(
            classical_nnf("(p |+ q) &- ~#t").unwrap().to_string(),
            "(p |+ q) &- ~#t"
        );
    }

    #[test]
    fn linear_printing() {
        assert_eq!(parse_lformula("!(p & q)").unwrap().to_string(), "!(p & q)");
        assert_eq!(
            parse_lformula("(a * b) par c").unwrap().to_string(),
            "a * b par c"
        );
        assert_eq!(
            parse_lformula("a * (b par c)").unwrap().to_string(),
            "a * (b par c)"
        );
        assert_eq!(parse_lformula("?(q^)").unwrap().to_string(), "?q^");
    }
}
