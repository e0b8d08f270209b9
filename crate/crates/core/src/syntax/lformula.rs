use super::term::{Atom, Term};

/// Linear logic formula in negation normal form; `⊸` does not exist as a
/// constructor and is encoded as `lneg(a) ⅋ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LFormula {
    Atom(Atom),
    NegAtom(Atom),
    One,
    Zero,
    Top,
    Bot,
    Tensor(Box<LFormula>, Box<LFormula>),
    Plus(Box<LFormula>, Box<LFormula>),
    With(Box<LFormula>, Box<LFormula>),
    Par(Box<LFormula>, Box<LFormula>),
    Bang(Box<LFormula>),
    Quest(Box<LFormula>),
    Exists(String, Box<LFormula>),
    Forall(String, Box<LFormula>),
}

impl LFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        LFormula::Atom(Atom::prop(name))
    }

    pub fn tensor(l: LFormula, r: LFormula) -> Self {
        LFormula::Tensor(Box::new(l), Box::new(r))
    }

    pub fn plus(l: LFormula, r: LFormula) -> Self {
        LFormula::Plus(Box::new(l), Box::new(r))
    }

    pub fn with(l: LFormula, r: LFormula) -> Self {
        LFormula::With(Box::new(l), Box::new(r))
    }

    pub fn par(l: LFormula, r: LFormula) -> Self {
        LFormula::Par(Box::new(l), Box::new(r))
    }

    pub fn bang(f: LFormula) -> Self {
        LFormula::Bang(Box::new(f))
    }

    pub fn quest(f: LFormula) -> Self {
        LFormula::Quest(Box::new(f))
    }

    /// `a ⊸ b` as `a^⊥ ⅋ b`.
    pub fn lolli(l: LFormula, r: LFormula) -> Self {
        LFormula::par(lneg(&l), r)
    }

    pub fn exists(var: impl Into<String>, body: LFormula) -> Self {
        LFormula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: LFormula) -> Self {
        LFormula::Forall(var.into(), Box::new(body))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, LFormula::Atom(_) | LFormula::NegAtom(_))
    }

    /// Top-level connective is one of ⊥ ⅋ ? ⊤ & ∀.
    pub fn is_asynchronous(&self) -> bool {
        matches!(
            self,
            LFormula::Bot
                | LFormula::Par(..)
                | LFormula::Quest(_)
                | LFormula::Top
                | LFormula::With(..)
                | LFormula::Forall(..)
        )
    }

    /// Top-level connective is one of 1 ⊗ ! 0 ⊕ ∃.
    pub fn is_synchronous(&self) -> bool {
        matches!(
            self,
            LFormula::One
                | LFormula::Tensor(..)
                | LFormula::Bang(_)
                | LFormula::Zero
                | LFormula::Plus(..)
                | LFormula::Exists(..)
        )
    }

    pub fn subst(&self, var: &str, by: &Term) -> LFormula {
        use LFormula::*;
        match self {
            Atom(a) => Atom(a.subst(var, by)),
            NegAtom(a) => NegAtom(a.subst(var, by)),
            One | Zero | Top | Bot => self.clone(),
            Tensor(l, r) => LFormula::tensor(l.subst(var, by), r.subst(var, by)),
            Plus(l, r) => LFormula::plus(l.subst(var, by), r.subst(var, by)),
            With(l, r) => LFormula::with(l.subst(var, by), r.subst(var, by)),
            Par(l, r) => LFormula::par(l.subst(var, by), r.subst(var, by)),
            Bang(b) => LFormula::bang(b.subst(var, by)),
            Quest(b) => LFormula::quest(b.subst(var, by)),
            Exists(x, _) | Forall(x, _) if x == var => self.clone(),
            Exists(x, b) => LFormula::exists(x.clone(), b.subst(var, by)),
            Forall(x, b) => LFormula::forall(x.clone(), b.subst(var, by)),
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        use LFormula::*;
        match self {
            Atom(a) | NegAtom(a) => a.mentions(name),
            One | Zero | Top | Bot => false,
            Tensor(l, r) | Plus(l, r) | With(l, r) | Par(l, r) => {
                l.mentions(name) || r.mentions(name)
            }
            Bang(b) | Quest(b) | Exists(_, b) | Forall(_, b) => b.mentions(name),
        }
    }
}

/// De Morgan dual. An involution on every value.
pub fn lneg(f: &LFormula) -> LFormula {
    use LFormula::*;
    match f {
        Atom(a) => NegAtom(a.clone()),
        NegAtom(a) => Atom(a.clone()),
        One => Bot,
        Bot => One,
        Zero => Top,
        Top => Zero,
        Tensor(l, r) => LFormula::par(lneg(l), lneg(r)),
        Par(l, r) => LFormula::tensor(lneg(l), lneg(r)),
        Plus(l, r) => LFormula::with(lneg(l), lneg(r)),
        With(l, r) => LFormula::plus(lneg(l), lneg(r)),
        Bang(b) => LFormula::quest(lneg(b)),
        Quest(b) => LFormula::bang(lneg(b)),
        Exists(x, b) => LFormula::forall(x.clone(), lneg(b)),
        Forall(x, b) => LFormula::exists(x.clone(), lneg(b)),
    }
}
