use super::term::{Atom, Term};

/// Polarized classical formula, always in negation normal form: the only
/// negations are on literals and constants, and implications exist only
/// through their definitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CFormula {
    PosLit(Atom),
    NegLit(Atom),
    True,
    False,
    NotTrue,
    NotFalse,
    AndPos(Box<CFormula>, Box<CFormula>),
    AndNeg(Box<CFormula>, Box<CFormula>),
    OrPos(Box<CFormula>, Box<CFormula>),
    OrNeg(Box<CFormula>, Box<CFormula>),
    Exists(String, Box<CFormula>),
    Forall(String, Box<CFormula>),
}

impl CFormula {
    pub fn lit(name: impl Into<String>) -> Self {
        CFormula::PosLit(Atom::prop(name))
    }

    pub fn neg_lit(name: impl Into<String>) -> Self {
        CFormula::NegLit(Atom::prop(name))
    }

    pub fn and_pos(l: CFormula, r: CFormula) -> Self {
        CFormula::AndPos(Box::new(l), Box::new(r))
    }

    pub fn and_neg(l: CFormula, r: CFormula) -> Self {
        CFormula::AndNeg(Box::new(l), Box::new(r))
    }

    pub fn or_pos(l: CFormula, r: CFormula) -> Self {
        CFormula::OrPos(Box::new(l), Box::new(r))
    }

    pub fn or_neg(l: CFormula, r: CFormula) -> Self {
        CFormula::OrNeg(Box::new(l), Box::new(r))
    }

    /// `a ⊃⁺ b`, defined as `¬a ∨⁺ b`.
    pub fn imp_pos(l: CFormula, r: CFormula) -> Self {
        CFormula::or_pos(l.negate(), r)
    }

    /// `a ⊃⁻ b`, defined as `¬a ∨⁻ b`.
    pub fn imp_neg(l: CFormula, r: CFormula) -> Self {
        CFormula::or_neg(l.negate(), r)
    }

    pub fn exists(var: impl Into<String>, body: CFormula) -> Self {
        CFormula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: CFormula) -> Self {
        CFormula::Forall(var.into(), Box::new(body))
    }

    /// De Morgan negation: ¬A/A, ∧⁺/∨⁻, ∧⁻/∨⁺, ∀/∃.
    pub fn negate(&self) -> CFormula {
        use CFormula::*;
        match self {
            PosLit(a) => NegLit(a.clone()),
            NegLit(a) => PosLit(a.clone()),
            True => NotTrue,
            False => NotFalse,
            NotTrue => True,
            NotFalse => False,
            AndPos(l, r) => CFormula::or_neg(l.negate(), r.negate()),
            AndNeg(l, r) => CFormula::or_pos(l.negate(), r.negate()),
            OrPos(l, r) => CFormula::and_neg(l.negate(), r.negate()),
            OrNeg(l, r) => CFormula::and_pos(l.negate(), r.negate()),
            Exists(x, b) => CFormula::forall(x.clone(), b.negate()),
            Forall(x, b) => CFormula::exists(x.clone(), b.negate()),
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, CFormula::PosLit(_) | CFormula::NegLit(_))
    }

    pub fn subst(&self, var: &str, by: &Term) -> CFormula {
        use CFormula::*;
        match self {
            PosLit(a) => PosLit(a.subst(var, by)),
            NegLit(a) => NegLit(a.subst(var, by)),
            True | False | NotTrue | NotFalse => self.clone(),
            AndPos(l, r) => CFormula::and_pos(l.subst(var, by), r.subst(var, by)),
            AndNeg(l, r) => CFormula::and_neg(l.subst(var, by), r.subst(var, by)),
            OrPos(l, r) => CFormula::or_pos(l.subst(var, by), r.subst(var, by)),
            OrNeg(l, r) => CFormula::or_neg(l.subst(var, by), r.subst(var, by)),
            Exists(x, _) | Forall(x, _) if x == var => self.clone(),
            Exists(x, b) => CFormula::exists(x.clone(), b.subst(var, by)),
            Forall(x, b) => CFormula::forall(x.clone(), b.subst(var, by)),
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        use CFormula::*;
        match self {
            PosLit(a) | NegLit(a) => a.mentions(name),
            True | False | NotTrue | NotFalse => false,
            AndPos(l, r) | AndNeg(l, r) | OrPos(l, r) | OrNeg(l, r) => {
                l.mentions(name) || r.mentions(name)
            }
            Exists(_, b) | Forall(_, b) => b.mentions(name),
        }
    }

    pub fn connectives(&self) -> usize {
        use CFormula::*;
        match self {
            PosLit(_) | NegLit(_) | True | False | NotTrue | NotFalse => 0,
            AndPos(l, r) | AndNeg(l, r) | OrPos(l, r) | OrNeg(l, r) => {
                1 + l.connectives() + r.connectives()
            }
            Exists(_, b) | Forall(_, b) => 1 + b.connectives(),
        }
    }

    pub fn is_propositional(&self) -> bool {
        use CFormula::*;
        match self {
            PosLit(a) | NegLit(a) => a.args.is_empty(),
            True | False | NotTrue | NotFalse => true,
            AndPos(l, r) | AndNeg(l, r) | OrPos(l, r) | OrNeg(l, r) => {
                l.is_propositional() && r.is_propositional()
            }
            Exists(..) | Forall(..) => false,
        }
    }

    pub fn atoms(&self, out: &mut Vec<Atom>) {
        use CFormula::*;
        match self {
            PosLit(a) | NegLit(a) => {
                if !out.contains(a) {
                    out.push(a.clone())
                }
            }
            True | False | NotTrue | NotFalse => {}
            AndPos(l, r) | AndNeg(l, r) | OrPos(l, r) | OrNeg(l, r) => {
                l.atoms(out);
                r.atoms(out);
            }
            Exists(_, b) | Forall(_, b) => b.atoms(out),
        }
    }
}
