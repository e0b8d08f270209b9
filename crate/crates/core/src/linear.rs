//! Translations of intuitionistic and classical formulas into linear logic.
//!
//! * 0/1: `B¹` for the right side, `B⁰` for the left, `(B⁰)⊥` for the left
//!   side of a one-sided sequent.
//! * q/j: the LJQ′ translation (all atoms positive).
//! * ±1: the permeation translation; atoms follow bias, compound cases wrap
//!   negative subformulas in `!` on the left.
//! * polaro: classical formulas, `?`/`!` inserted where polarities disagree
//!   with the connective.

use std::str::FromStr;

use crate::embed::Side;
use crate::error::FragmentError;
use crate::polarity::{cpolarity, ipolarity};
use crate::syntax::{lneg, BiasMap, CFormula, IFormula, LFormula, Polarity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinScheme {
    ZeroOneRight,
    ZeroOneLeft,
    ZeroOneLeftNeg,
    QjRight,
    QjLeft,
    Pm1Left,
    Pm1Right,
    ConjLjf(Side),
    Polaro,
}

impl LinScheme {
    /// Parses the CLI scheme name; `pm1` and `conj` take their side separately.
    pub fn from_cli(name: &str, side: Side) -> Result<Self, String> {
        Ok(match name {
            "01r" => LinScheme::ZeroOneRight,
            "01l" => LinScheme::ZeroOneLeft,
            "01ln" => LinScheme::ZeroOneLeftNeg,
            "qj-r" => LinScheme::QjRight,
            "qj-l" => LinScheme::QjLeft,
            "pm1" => match side {
                Side::Left => LinScheme::Pm1Left,
                Side::Right => LinScheme::Pm1Right,
            },
            "conj" => LinScheme::ConjLjf(side),
            "polaro" => LinScheme::Polaro,
            _ => return Err(format!("unknown translation scheme {name:?}")),
        })
    }

    pub fn is_classical(self) -> bool {
        self == LinScheme::Polaro
    }
}

impl FromStr for LinScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LinScheme::from_cli(s, Side::Left)
    }
}

/// Input to a translation: polaro reads classical formulas, every other scheme intuitionistic ones.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    Int(&'a IFormula),
    Classical(&'a CFormula),
}

pub fn translate_linear(
    src: Source<'_>,
    scheme: LinScheme,
    bias: &BiasMap,
) -> Result<LFormula, FragmentError> {
    match (src, scheme) {
        (Source::Classical(c), LinScheme::Polaro) => Ok(polaro(c, bias)),
        (Source::Classical(_), _) => Err(FragmentError::new(
            "linear",
            "only polaro accepts classical formulas",
        )),
        (Source::Int(_), LinScheme::Polaro) => Err(FragmentError::new(
            "polaro",
            "polaro expects a classical formula",
        )),
        (Source::Int(f), LinScheme::ZeroOneRight) => Ok(zero_one_right(f, true)),
        (Source::Int(f), LinScheme::ZeroOneLeft) => Ok(zero_one_left(f, true)),
        (Source::Int(f), LinScheme::ZeroOneLeftNeg) => Ok(lneg(&zero_one_left(f, true))),
        (Source::Int(f), LinScheme::QjRight) => qj_right(f),
        (Source::Int(f), LinScheme::QjLeft) => qj_left(f),
        (Source::Int(f), LinScheme::Pm1Left) => Ok(pm1(f, Side::Left, bias)),
        (Source::Int(f), LinScheme::Pm1Right) => Ok(pm1(f, Side::Right, bias)),
        (Source::Int(f), LinScheme::ConjLjf(side)) => match f {
            IFormula::ConjPos(..) | IFormula::ConjNeg(..) => Ok(pm1(f, side, bias)),
            _ => Err(FragmentError::new(
                "conj",
                "the conjunction translation needs a conjunction at the root",
            )),
        },
    }
}

/// `B¹`. With `negation_row`, `A ⊃ false` uses the dedicated `¬` row.
pub fn zero_one_right(f: &IFormula, negation_row: bool) -> LFormula {
    use IFormula::*;
    let r = |g: &IFormula| zero_one_right(g, negation_row);
    let l = |g: &IFormula| zero_one_left(g, negation_row);
    match f {
        Atom(a) => LFormula::Atom(a.clone()),
        True => LFormula::One,
        False => LFormula::Zero,
        ConjPos(p, q) | ConjNeg(p, q) => LFormula::bang(LFormula::with(r(p), r(q))),
        Disj(p, q) => LFormula::plus(LFormula::bang(r(p)), LFormula::bang(r(q))),
        Impl(p, q) if negation_row && **q == False => {
            LFormula::bang(LFormula::par(LFormula::Zero, LFormula::quest(lneg(&l(p)))))
        }
        Impl(p, q) => LFormula::bang(LFormula::par(LFormula::quest(lneg(&l(p))), r(q))),
        Exists(x, p) => LFormula::exists(x.clone(), LFormula::bang(r(p))),
        Forall(x, p) => LFormula::bang(LFormula::forall(x.clone(), r(p))),
    }
}

/// `B⁰`.
pub fn zero_one_left(f: &IFormula, negation_row: bool) -> LFormula {
    use IFormula::*;
    let r = |g: &IFormula| zero_one_right(g, negation_row);
    let l = |g: &IFormula| zero_one_left(g, negation_row);
    match f {
        Atom(a) => LFormula::Atom(a.clone()),
        True => LFormula::Top,
        False => LFormula::Zero,
        ConjPos(p, q) | ConjNeg(p, q) => LFormula::with(LFormula::bang(l(p)), LFormula::bang(l(q))),
        Disj(p, q) => LFormula::plus(LFormula::bang(l(p)), LFormula::bang(l(q))),
        Impl(p, q) if negation_row && **q == False => {
            LFormula::lolli(LFormula::bang(r(p)), LFormula::Zero)
        }
        Impl(p, q) => LFormula::lolli(LFormula::bang(r(p)), LFormula::bang(l(q))),
        Exists(x, p) => LFormula::exists(x.clone(), LFormula::bang(l(p))),
        Forall(x, p) => LFormula::forall(x.clone(), LFormula::bang(l(p))),
    }
}

fn qj_fragment(f: &IFormula) -> Result<(), FragmentError> {
    match f {
        IFormula::True => Err(FragmentError::new(
            "qj",
            "true is outside the LJQ' fragment",
        )),
        IFormula::Exists(..) | IFormula::Forall(..) => Err(FragmentError::new(
            "qj",
            "quantifiers are outside the LJQ' fragment",
        )),
        _ => Ok(()),
    }
}

/// `Bq`, the right-side LJQ′ translation.
pub fn qj_right(f: &IFormula) -> Result<LFormula, FragmentError> {
    use IFormula::*;
    qj_fragment(f)?;
    Ok(match f {
        Atom(a) => LFormula::Atom(a.clone()),
        False => LFormula::Zero,
        ConjPos(a, b) | ConjNeg(a, b) => LFormula::tensor(qj_right(a)?, qj_right(b)?),
        Disj(a, b) => LFormula::plus(qj_right(a)?, qj_right(b)?),
        Impl(a, b) => LFormula::tensor(
            LFormula::lolli(LFormula::bang(qj_left(a)?), qj_right(b)?),
            LFormula::One,
        ),
        True | Exists(..) | Forall(..) => unreachable!("rejected by qj_fragment"),
    })
}

/// `Bj`, the left-side LJQ′ translation.
pub fn qj_left(f: &IFormula) -> Result<LFormula, FragmentError> {
    use IFormula::*;
    qj_fragment(f)?;
    Ok(match f {
        Atom(a) => LFormula::Atom(a.clone()),
        False => LFormula::Zero,
        ConjPos(a, b) | ConjNeg(a, b) => {
            LFormula::tensor(LFormula::bang(qj_left(a)?), LFormula::bang(qj_left(b)?))
        }
        Disj(a, b) => LFormula::plus(LFormula::bang(qj_left(a)?), LFormula::bang(qj_left(b)?)),
        Impl(a, b) => LFormula::lolli(qj_right(a)?, LFormula::bang(qj_left(b)?)),
        True | Exists(..) | Forall(..) => unreachable!("rejected by qj_fragment"),
    })
}

/// The ±1 translation: `B⁻¹` on the left, `B⁺¹` on the right.
pub fn pm1(f: &IFormula, side: Side, bias: &BiasMap) -> LFormula {
    use IFormula::*;
    let same = |g: &IFormula| pm1(g, side, bias);
    // left-side operand: negative subformulas lose permeation unless banged
    let wrap = |g: &IFormula| {
        let t = pm1(g, Side::Left, bias);
        match ipolarity(g, bias) {
            Polarity::Pos => t,
            Polarity::Neg => LFormula::bang(t),
        }
    };
    match (f, side) {
        (Atom(a), Side::Left) => match bias.get(&a.name) {
            Polarity::Pos => LFormula::bang(LFormula::Atom(a.clone())),
            Polarity::Neg => LFormula::Atom(a.clone()),
        },
        (Atom(a), Side::Right) => match bias.get(&a.name) {
            Polarity::Pos => LFormula::Atom(a.clone()),
            Polarity::Neg => LFormula::quest(LFormula::Atom(a.clone())),
        },
        (True, _) => LFormula::One,
        (False, _) => LFormula::Zero,
        (ConjPos(a, b), Side::Left) => LFormula::tensor(wrap(a), wrap(b)),
        (ConjPos(a, b), Side::Right) => LFormula::tensor(same(a), same(b)),
        (ConjNeg(a, b), _) => LFormula::with(same(a), same(b)),
        (Disj(a, b), Side::Left) => LFormula::plus(wrap(a), wrap(b)),
        (Disj(a, b), Side::Right) => LFormula::plus(same(a), same(b)),
        (Impl(a, b), Side::Left) => LFormula::lolli(pm1(a, Side::Right, bias), same(b)),
        (Impl(a, b), Side::Right) => LFormula::lolli(wrap(a), same(b)),
        (Exists(x, a), Side::Left) => LFormula::exists(x.clone(), wrap(a)),
        (Exists(x, a), Side::Right) => LFormula::exists(x.clone(), same(a)),
        (Forall(x, a), _) => LFormula::forall(x.clone(), same(a)),
    }
}

/// Polaro translation of a classical formula.
pub fn polaro(f: &CFormula, bias: &BiasMap) -> LFormula {
    use CFormula::*;
    let p = |g: &CFormula| polaro(g, bias);
    // operand of a negative connective: positives need `?`
    let quest = |g: &CFormula| match cpolarity(g, bias) {
        Polarity::Neg => p(g),
        Polarity::Pos => LFormula::quest(p(g)),
    };
    // operand of a positive connective: negatives need `!`
    let bang = |g: &CFormula| match cpolarity(g, bias) {
        Polarity::Pos => p(g),
        Polarity::Neg => LFormula::bang(p(g)),
    };
    match f {
        PosLit(a) => LFormula::Atom(a.clone()),
        NegLit(a) => LFormula::NegAtom(a.clone()),
        True => LFormula::One,
        False => LFormula::Zero,
        NotTrue => LFormula::Bot,
        NotFalse => LFormula::Top,
        OrNeg(a, b) => LFormula::par(quest(a), quest(b)),
        AndNeg(a, b) => LFormula::with(quest(a), quest(b)),
        AndPos(a, b) => LFormula::tensor(bang(a), bang(b)),
        OrPos(a, b) => LFormula::plus(bang(a), bang(b)),
        Forall(x, a) => LFormula::forall(x.clone(), quest(a)),
        Exists(x, a) => LFormula::exists(x.clone(), bang(a)),
    }
}
