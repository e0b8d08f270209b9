use super::term::{Atom, Term};

/// Intuitionistic formula with the two conjunctions kept apart.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IFormula {
    Atom(Atom),
    True,
    False,
    ConjPos(Box<IFormula>, Box<IFormula>),
    ConjNeg(Box<IFormula>, Box<IFormula>),
    Disj(Box<IFormula>, Box<IFormula>),
    Impl(Box<IFormula>, Box<IFormula>),
    Exists(String, Box<IFormula>),
    Forall(String, Box<IFormula>),
}

impl IFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        IFormula::Atom(Atom::prop(name))
    }

    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Self {
        IFormula::Atom(Atom::new(name, args))
    }

    pub fn conj_pos(l: IFormula, r: IFormula) -> Self {
        IFormula::ConjPos(Box::new(l), Box::new(r))
    }

    pub fn conj_neg(l: IFormula, r: IFormula) -> Self {
        IFormula::ConjNeg(Box::new(l), Box::new(r))
    }

    pub fn disj(l: IFormula, r: IFormula) -> Self {
        IFormula::Disj(Box::new(l), Box::new(r))
    }

    pub fn imp(l: IFormula, r: IFormula) -> Self {
        IFormula::Impl(Box::new(l), Box::new(r))
    }

    /// `~f`, sugar for `f -> false`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: IFormula) -> Self {
        IFormula::imp(f, IFormula::False)
    }

    pub fn exists(var: impl Into<String>, body: IFormula) -> Self {
        IFormula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: IFormula) -> Self {
        IFormula::Forall(var.into(), Box::new(body))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            IFormula::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, IFormula::Atom(_))
    }

    pub fn subst(&self, var: &str, by: &Term) -> IFormula {
        use IFormula::*;
        match self {
            Atom(a) => Atom(a.subst(var, by)),
            True | False => self.clone(),
            ConjPos(l, r) => IFormula::conj_pos(l.subst(var, by), r.subst(var, by)),
            ConjNeg(l, r) => IFormula::conj_neg(l.subst(var, by), r.subst(var, by)),
            Disj(l, r) => IFormula::disj(l.subst(var, by), r.subst(var, by)),
            Impl(l, r) => IFormula::imp(l.subst(var, by), r.subst(var, by)),
            Exists(x, _) | Forall(x, _) if x == var => self.clone(),
            Exists(x, b) => IFormula::exists(x.clone(), b.subst(var, by)),
            Forall(x, b) => IFormula::forall(x.clone(), b.subst(var, by)),
        }
    }

    /// True when `name` occurs as a functor or free variable anywhere.
    pub fn mentions(&self, name: &str) -> bool {
        use IFormula::*;
        match self {
            Atom(a) => a.mentions(name),
            True | False => false,
            ConjPos(l, r) | ConjNeg(l, r) | Disj(l, r) | Impl(l, r) => {
                l.mentions(name) || r.mentions(name)
            }
            Exists(_, b) | Forall(_, b) => b.mentions(name),
        }
    }

    pub fn is_propositional(&self) -> bool {
        use IFormula::*;
        match self {
            Atom(a) => a.args.is_empty(),
            True | False => true,
            ConjPos(l, r) | ConjNeg(l, r) | Disj(l, r) | Impl(l, r) => {
                l.is_propositional() && r.is_propositional()
            }
            Exists(..) | Forall(..) => false,
        }
    }

    /// Number of connectives (constants and atoms count zero).
    pub fn connectives(&self) -> usize {
        use IFormula::*;
        match self {
            Atom(_) | True | False => 0,
            ConjPos(l, r) | ConjNeg(l, r) | Disj(l, r) | Impl(l, r) => {
                1 + l.connectives() + r.connectives()
            }
            Exists(_, b) | Forall(_, b) => 1 + b.connectives(),
        }
    }

    pub fn atoms(&self, out: &mut Vec<Atom>) {
        use IFormula::*;
        match self {
            Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone())
                }
            }
            True | False => {}
            ConjPos(l, r) | ConjNeg(l, r) | Disj(l, r) | Impl(l, r) => {
                l.atoms(out);
                r.atoms(out);
            }
            Exists(_, b) | Forall(_, b) => b.atoms(out),
        }
    }

    /// Rewrites every conjunction to the given annotation.
    pub fn with_conjunctions(&self, positive: bool) -> IFormula {
        self.map_conj(&|_| positive)
    }

    /// Swaps every ∧⁺ with ∧⁻.
    pub fn flip_conjunctions(&self) -> IFormula {
        self.map_conj(&|was_pos| !was_pos)
    }

    fn map_conj(&self, pick: &dyn Fn(bool) -> bool) -> IFormula {
        use IFormula::*;
        let both = |l: &IFormula, r: &IFormula, was_pos: bool| {
            let (l, r) = (l.map_conj(pick), r.map_conj(pick));
            if pick(was_pos) {
                IFormula::conj_pos(l, r)
            } else {
                IFormula::conj_neg(l, r)
            }
        };
        match self {
            Atom(_) | True | False => self.clone(),
            ConjPos(l, r) => both(l, r, true),
            ConjNeg(l, r) => both(l, r, false),
            Disj(l, r) => IFormula::disj(l.map_conj(pick), r.map_conj(pick)),
            Impl(l, r) => IFormula::imp(l.map_conj(pick), r.map_conj(pick)),
            Exists(x, b) => IFormula::exists(x.clone(), b.map_conj(pick)),
            Forall(x, b) => IFormula::forall(x.clone(), b.map_conj(pick)),
        }
    }
}
