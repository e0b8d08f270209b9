//! Formula-to-formula embeddings into LJF: the hereditary LJ and LJQ′ l/r
//! translations, the λRCC guard device, and the polarized ≈ embedding of
//! classical logic.

use std::fmt;
use std::str::FromStr;

use crate::error::FragmentError;
use crate::polarity::{delay_neg, delay_pos, ipolarity};
use crate::syntax::{Atom, BiasMap, CFormula, IFormula, Polarity, PHI};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingScheme {
    LjLr,
    LjqLr,
    RccGuard,
    ClassicalApprox,
}

impl FromStr for EmbeddingScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lj" => Ok(EmbeddingScheme::LjLr),
            "ljq" => Ok(EmbeddingScheme::LjqLr),
            "rcc" => Ok(EmbeddingScheme::RccGuard),
            "classical" => Ok(EmbeddingScheme::ClassicalApprox),
            _ => Err(format!(
                "unknown embedding scheme {s:?} (expected lj|ljq|rcc|classical)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "l" | "left" => Ok(Side::Left),
            "r" | "right" => Ok(Side::Right),
            _ => Err(format!("unknown side {s:?} (expected l|r)")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "l",
            Side::Right => "r",
        })
    }
}

/// Embeds an intuitionistic formula under one of the intuitionistic schemes.
/// `bias` is consulted only by the guard device.
pub fn embed(
    f: &IFormula,
    scheme: EmbeddingScheme,
    side: Side,
    bias: &BiasMap,
) -> Result<IFormula, FragmentError> {
    match scheme {
        EmbeddingScheme::LjLr => Ok(embed_lj(f, side)),
        EmbeddingScheme::LjqLr => embed_ljq(f, side),
        EmbeddingScheme::RccGuard => Ok(rcc_guard(f, bias)),
        EmbeddingScheme::ClassicalApprox => Err(FragmentError::new(
            "classical",
            "the classical embedding takes a classical formula",
        )),
    }
}

/// Embeds a sequent: hypotheses on the left side, goal on the right.
pub fn embed_sequent(
    gamma: &[IFormula],
    goal: &IFormula,
    scheme: EmbeddingScheme,
    bias: &BiasMap,
) -> Result<(Vec<IFormula>, IFormula), FragmentError> {
    let hyps = gamma
        .iter()
        .map(|g| embed(g, scheme, Side::Left, bias))
        .collect::<Result<Vec<_>, _>>()?;
    let goal = match scheme {
        EmbeddingScheme::RccGuard => goal.clone(),
        _ => embed(goal, scheme, Side::Right, bias)?,
    };
    Ok((hyps, goal))
}

/// Hereditary embedding of arbitrary LJ proofs. Both conjunction annotations
/// are read as plain ∧.
pub fn embed_lj(f: &IFormula, side: Side) -> IFormula {
    use IFormula::*;
    let l = |g: &IFormula| embed_lj(g, Side::Left);
    let r = |g: &IFormula| embed_lj(g, Side::Right);
    match (f, side) {
        (Atom(_), _) => f.clone(),
        (False, Side::Left) => delay_neg(False),
        (False, Side::Right) => False,
        (True, Side::Left) => delay_neg(True),
        (True, Side::Right) => True,
        (ConjPos(a, b) | ConjNeg(a, b), Side::Left) => {
            IFormula::conj_neg(delay_pos(l(a)), delay_pos(l(b)))
        }
        (ConjPos(a, b) | ConjNeg(a, b), Side::Right) => delay_pos(IFormula::conj_neg(r(a), r(b))),
        (Disj(a, b), Side::Left) => delay_neg(IFormula::disj(l(a), l(b))),
        (Disj(a, b), Side::Right) => IFormula::disj(delay_neg(r(a)), delay_neg(r(b))),
        (Impl(a, b), Side::Left) => IFormula::imp(delay_neg(r(a)), delay_pos(l(b))),
        (Impl(a, b), Side::Right) => delay_pos(IFormula::imp(l(a), r(b))),
        (Exists(x, a), Side::Left) => delay_neg(IFormula::exists(x.clone(), l(a))),
        (Exists(x, a), Side::Right) => IFormula::exists(x.clone(), delay_neg(r(a))),
        (Forall(x, a), Side::Left) => IFormula::forall(x.clone(), delay_pos(l(a))),
        (Forall(x, a), Side::Right) => delay_pos(IFormula::forall(x.clone(), r(a))),
    }
}

/// LJQ′ embedding on the propositional {atom, false, ∧, ∨, ⊃} fragment; left
/// images are negative, right images positive. Atoms must be biased positive.
pub fn embed_ljq(f: &IFormula, side: Side) -> Result<IFormula, FragmentError> {
    use IFormula::*;
    let l = |g: &IFormula| embed_ljq(g, Side::Left);
    let r = |g: &IFormula| embed_ljq(g, Side::Right);
    Ok(match (f, side) {
        (Atom(_), _) => f.clone(),
        (False, Side::Left) => delay_neg(False),
        (False, Side::Right) => False,
        (ConjPos(a, b) | ConjNeg(a, b), Side::Left) => delay_neg(IFormula::conj_pos(l(a)?, l(b)?)),
        (ConjPos(a, b) | ConjNeg(a, b), Side::Right) => IFormula::conj_pos(r(a)?, r(b)?),
        (Disj(a, b), Side::Left) => delay_neg(IFormula::disj(l(a)?, l(b)?)),
        (Disj(a, b), Side::Right) => IFormula::disj(r(a)?, r(b)?),
        (Impl(a, b), Side::Left) => IFormula::imp(r(a)?, delay_pos(l(b)?)),
        (Impl(a, b), Side::Right) => delay_pos(IFormula::imp(l(a)?, r(b)?)),
        (True, _) => {
            return Err(FragmentError::new(
                "ljq",
                "true is outside the LJQ' fragment",
            ))
        }
        (Exists(..) | Forall(..), _) => {
            return Err(FragmentError::new(
                "ljq",
                "quantifiers are outside the LJQ' fragment",
            ))
        }
    })
}

/// True when the formula lies in the LJQ′ source fragment.
pub fn in_ljq_fragment(f: &IFormula) -> bool {
    embed_ljq(f, Side::Left).is_ok()
}

/// λRCC guard: a clause `E ⊃ D` with positive atom `E` becomes `E ⊃ ∂⁺D`
/// (D negative) or `E ⊃ ∂⁺∂⁻D` (D positive). Only the top level is touched;
/// other formulas pass through unchanged.
pub fn rcc_guard(f: &IFormula, bias: &BiasMap) -> IFormula {
    match f {
        IFormula::Impl(e, d) if e.is_atom() && ipolarity(e, bias) == Polarity::Pos => {
            let guarded = match ipolarity(d, bias) {
                Polarity::Neg => delay_pos((**d).clone()),
                Polarity::Pos => delay_pos(delay_neg((**d).clone())),
            };
            IFormula::imp((**e).clone(), guarded)
        }
        _ => f.clone(),
    }
}

/// The distinguished positive atom φ of the classical embedding.
pub fn phi() -> IFormula {
    IFormula::Atom(Atom::prop(PHI))
}

/// `~A = A ⊃ φ`.
pub fn tilde(f: IFormula) -> IFormula {
    IFormula::imp(f, phi())
}

/// Every ≈ image is either `P` or `~P` with `P` positive.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Approx {
    Plain(IFormula),
    Tilde(IFormula),
}

impl Approx {
    fn formula(self) -> IFormula {
        match self {
            Approx::Plain(p) => p,
            Approx::Tilde(p) => tilde(p),
        }
    }

    /// The image with one more `~` cancelled against the outer shape: `A ↦ ~A`, `~A ↦ A`.
    fn flipped(self) -> IFormula {
        match self {
            Approx::Plain(p) => tilde(p),
            Approx::Tilde(p) => p,
        }
    }
}

fn approx(f: &CFormula, bias: &BiasMap) -> Approx {
    use CFormula::*;
    match f {
        PosLit(a) => match bias.get(&a.name) {
            Polarity::Pos => Approx::Plain(IFormula::Atom(a.clone())),
            Polarity::Neg => Approx::Tilde(IFormula::Atom(a.clone())),
        },
        NegLit(a) => match bias.get(&a.name) {
            Polarity::Pos => Approx::Tilde(IFormula::Atom(a.clone())),
            Polarity::Neg => Approx::Plain(IFormula::Atom(a.clone())),
        },
        True => Approx::Plain(IFormula::True),
        False => Approx::Plain(IFormula::False),
        NotTrue => Approx::Tilde(IFormula::True),
        NotFalse => Approx::Tilde(IFormula::False),
        AndPos(a, b) => Approx::Plain(IFormula::conj_pos(
            approx(a, bias).formula(),
            approx(b, bias).formula(),
        )),
        OrPos(a, b) => Approx::Plain(IFormula::disj(
            approx(a, bias).formula(),
            approx(b, bias).formula(),
        )),
        AndNeg(a, b) => Approx::Tilde(IFormula::disj(
            approx(a, bias).flipped(),
            approx(b, bias).flipped(),
        )),
        OrNeg(a, b) => Approx::Tilde(IFormula::conj_pos(
            approx(a, bias).flipped(),
            approx(b, bias).flipped(),
        )),
        Exists(x, a) => Approx::Plain(IFormula::exists(x.clone(), approx(a, bias).formula())),
        Forall(x, a) => Approx::Tilde(IFormula::exists(x.clone(), approx(a, bias).flipped())),
    }
}

/// The ≈ embedding of a classical formula. Classical atoms of either bias
/// become intuitionistic atoms meant to be read positively.
pub fn embed_classical(f: &CFormula, bias: &BiasMap) -> IFormula {
    approx(f, bias).formula()
}

/// Maps the classical end-sequent `⊢ Γ` to the intuitionistic sequent
/// `≈(¬Γ) ⊢ φ`, to be searched with every atom biased positive.
pub fn embed_classical_sequent(gamma: &[CFormula], bias: &BiasMap) -> (Vec<IFormula>, IFormula) {
    (
        gamma
            .iter()
            .map(|c| embed_classical(&c.negate(), bias))
            .collect(),
        phi(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{classical_nnf, parse_iformula_with, ParseOptions};

    fn p(s: &str) -> IFormula {
        parse_iformula_with(s, ParseOptions::internal()).unwrap()
    }

    #[test]
    fn ljq_left_implication() {
        let f = p("a -> b");
        assert_eq!(embed_ljq(&f, Side::Left).unwrap(), p("a -> true &+ b"));
    }

    #[test]
    fn lj_right_conjunction() {
        let f = p("a & b");
        assert_eq!(embed_lj(&f, Side::Right), p("true &+ (a &- b)"));
    }

    #[test]
    fn rcc_guard_negative_body() {
        let bias = BiasMap::uniform(Polarity::Pos).with("d", Polarity::Neg);
        assert_eq!(rcc_guard(&p("e -> d"), &bias), p("e -> true &+ d"));
        assert_eq!(
            rcc_guard(&p("e -> (d &- d)"), &bias),
            p("e -> true &+ (d &- d)")
        );
        assert_eq!(
            rcc_guard(&p("e -> f"), &bias),
            p("e -> true &+ (true -> f)")
        );
        // negative guard atom: untouched
        assert_eq!(rcc_guard(&p("d -> e"), &bias), p("d -> e"));
    }

    #[test]
    fn classical_negative_conjunction() {
        let f = classical_nnf("a &- b").unwrap();
        let got = embed_classical(&f, &BiasMap::default());
        assert_eq!(got, p("((a -> _phi) | (b -> _phi)) -> _phi"));
    }

    #[test]
    fn ljq_rejects_true() {
        assert!(embed_ljq(&p("true -> a"), Side::Left).is_err());
    }
}
