//! Formula polarity in both logics and the two delay operators.

use crate::syntax::{BiasMap, CFormula, IFormula, Polarity};

/// Intuitionistic polarity: atoms follow the bias; true, false, ∧⁺, ∨, ∃ are
/// positive; ∧⁻, ⊃, ∀ are negative.
pub fn ipolarity(f: &IFormula, bias: &BiasMap) -> Polarity {
    use IFormula::*;
    match f {
        Atom(a) => bias.get(&a.name),
        True | False | ConjPos(..) | Disj(..) | Exists(..) => Polarity::Pos,
        ConjNeg(..) | Impl(..) | Forall(..) => Polarity::Neg,
    }
}

/// Classical polarity. A literal `~a` has the opposite polarity of `a`.
pub fn cpolarity(f: &CFormula, bias: &BiasMap) -> Polarity {
    use CFormula::*;
    match f {
        PosLit(a) => bias.get(&a.name),
        NegLit(a) => bias.get(&a.name).flip(),
        True | False | AndPos(..) | OrPos(..) | Exists(..) => Polarity::Pos,
        NotTrue | NotFalse | AndNeg(..) | OrNeg(..) | Forall(..) => Polarity::Neg,
    }
}

pub fn is_positive(f: &IFormula, bias: &BiasMap) -> bool {
    ipolarity(f, bias) == Polarity::Pos
}

pub fn is_negative(f: &IFormula, bias: &BiasMap) -> bool {
    ipolarity(f, bias) == Polarity::Neg
}

/// `∂⁺B = true ∧⁺ B`, positive for every B.
pub fn delay_pos(f: IFormula) -> IFormula {
    IFormula::conj_pos(IFormula::True, f)
}

/// `∂⁻B = true ⊃ B`, negative for every B.
pub fn delay_neg(f: IFormula) -> IFormula {
    IFormula::imp(IFormula::True, f)
}

pub fn is_delay_pos(f: &IFormula) -> bool {
    matches!(f, IFormula::ConjPos(l, _) if **l == IFormula::True)
}

pub fn is_delay_neg(f: &IFormula) -> bool {
    matches!(f, IFormula::Impl(l, _) if **l == IFormula::True)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{classical_nnf, parse_iformula};

    fn pos_a() -> BiasMap {
        BiasMap::uniform(Polarity::Neg).with("a", Polarity::Pos)
    }

    #[test]
    fn intuitionistic_connectives() {
        let b = BiasMap::default();
        assert_eq!(
            ipolarity(&parse_iformula("a -> b").unwrap(), &b),
            Polarity::Neg
        );
        assert_eq!(
            ipolarity(&parse_iformula("a &+ b").unwrap(), &b),
            Polarity::Pos
        );
        assert_eq!(
            ipolarity(&parse_iformula("a &- b").unwrap(), &b),
            Polarity::Neg
        );
        assert_eq!(
            ipolarity(&parse_iformula("a | b").unwrap(), &b),
            Polarity::Pos
        );
        assert_eq!(
            ipolarity(&parse_iformula("forall x. p(x)").unwrap(), &b),
            Polarity::Neg
        );
        assert_eq!(
            ipolarity(&parse_iformula("exists x. p(x)").unwrap(), &b),
            Polarity::Pos
        );
        assert_eq!(ipolarity(&IFormula::True, &b), Polarity::Pos);
        assert_eq!(ipolarity(&IFormula::False, &b), Polarity::Pos);
    }

    #[test]
    fn atoms_follow_bias() {
        let a = IFormula::atom("a");
        assert_eq!(
            ipolarity(&a, &BiasMap::uniform(Polarity::Pos)),
            Polarity::Pos
        );
        assert_eq!(
            ipolarity(
                &a,
                &BiasMap::uniform(Polarity::Pos).with("a", Polarity::Neg)
            ),
            Polarity::Neg
        );
    }

    #[test]
    fn classical_polarity() {
        let b = BiasMap::default();
        assert_eq!(
            cpolarity(&classical_nnf("x &- y").unwrap(), &b),
            Polarity::Neg
        );
        assert_eq!(
            cpolarity(&classical_nnf("x |- y").unwrap(), &b),
            Polarity::Neg
        );
        assert_eq!(
            cpolarity(&classical_nnf("x |+ y").unwrap(), &b),
            Polarity::Pos
        );
        assert_eq!(cpolarity(&CFormula::True, &b), Polarity::Pos);
        assert_eq!(cpolarity(&CFormula::False, &b), Polarity::Pos);
        assert_eq!(cpolarity(&CFormula::NotTrue, &b), Polarity::Neg);
        assert_eq!(cpolarity(&CFormula::NotFalse, &b), Polarity::Neg);
        assert_eq!(cpolarity(&CFormula::neg_lit("p"), &b), Polarity::Neg);
        let nb = BiasMap::uniform(Polarity::Neg);
        assert_eq!(cpolarity(&CFormula::neg_lit("p"), &nb), Polarity::Pos);
    }

    #[test]
    fn delays_force_polarity() {
        let d = delay_neg(IFormula::atom("a"));
        assert_eq!(d, IFormula::imp(IFormula::True, IFormula::atom("a")));
        assert_eq!(ipolarity(&d, &pos_a()), Polarity::Neg);
        let ab = parse_iformula("a -> b").unwrap();
        let d = delay_pos(ab.clone());
        assert_eq!(d, IFormula::conj_pos(IFormula::True, ab));
        assert_eq!(ipolarity(&d, &pos_a()), Polarity::Pos);
    }
}
