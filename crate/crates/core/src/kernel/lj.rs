use std::fmt;
use std::str::FromStr;

use super::multiset::{multiset_eq, multiset_sum, sorted};
use super::seqparse::{items, parser};
use super::{check_tree, ensure, Calculus, Check, Inst, ProofTree, Sequent, Violation};
use crate::error::SyntaxError;
use crate::syntax::{join, IFormula, Parser, Tok};

/// Propositional LJ. Left rules keep their principal formula in the premise
/// (so no contraction rule is needed) and record it in `inst`.
pub const LJ_RULES: &[(&str, usize)] = &[
    ("Ax", 0),
    ("falseL", 0),
    ("trueR", 0),
    ("andR", 2),
    ("andL1", 1),
    ("andL2", 1),
    ("orR1", 1),
    ("orR2", 1),
    ("orL", 2),
    ("impR", 1),
    ("impL", 2),
];

/// `Γ ==> R` with Γ a sorted multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LjSequent {
    pub gamma: Vec<IFormula>,
    pub rhs: IFormula,
}

impl LjSequent {
    pub fn new(gamma: &[IFormula], rhs: IFormula) -> Self {
        LjSequent {
            gamma: sorted(gamma),
            rhs,
        }
    }

    /// The same sequent with `extra` added to Γ.
    pub fn extend(&self, extra: &IFormula, rhs: IFormula) -> Self {
        LjSequent::new(&multiset_sum(&self.gamma, std::slice::from_ref(extra)), rhs)
    }
}

impl fmt::Display for LjSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gamma.is_empty() {
            write!(f, "==> {}", self.rhs)
        } else {
            write!(f, "{} ==> {}", join(&self.gamma), self.rhs)
        }
    }
}

impl FromStr for LjSequent {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Self, SyntaxError> {
        let mut p = parser(text)?;
        let gamma = items(&mut p, &Tok::Entails, Parser::iformula)?;
        p.expect(&Tok::Entails, "'==>'")?;
        let rhs = p.iformula()?;
        p.finish()?;
        Ok(LjSequent::new(&gamma, rhs))
    }
}

pub fn check_lj(p: &ProofTree) -> Result<(), Violation> {
    check_tree(p, Calculus::Lj, LJ_RULES, &check_node)
}

fn lj(s: &Sequent) -> &LjSequent {
    match s {
        Sequent::Lj(s) => s,
        _ => unreachable!("calculus checked before rules"),
    }
}

fn conjuncts(f: &IFormula) -> Option<(&IFormula, &IFormula)> {
    match f {
        IFormula::ConjNeg(a, b) | IFormula::ConjPos(a, b) => Some((a, b)),
        _ => None,
    }
}

fn check_node(node: &ProofTree) -> Check {
    let c = lj(&node.conclusion);
    let prem = |i: usize| lj(&node.premises[i].conclusion);
    let expect = |i: usize, want: LjSequent| {
        ensure(
            multiset_eq(&prem(i).gamma, &want.gamma) && prem(i).rhs == want.rhs,
            || format!("premise {i} must be {want}"),
        )
    };
    let principal = || -> Result<&IFormula, String> {
        match &node.inst {
            Some(Inst::Principal(f)) if c.gamma.contains(f) => Ok(f),
            Some(Inst::Principal(f)) => Err(format!("principal formula {f} is not in Γ")),
            _ => Err("left rule without a recorded principal formula".into()),
        }
    };
    let same_gamma = |rhs: &IFormula| LjSequent::new(&c.gamma, rhs.clone());
    match node.rule.as_str() {
        "Ax" => {
            ensure(c.rhs.is_atom(), || "Ax is restricted to atoms".into())?;
            ensure(c.gamma.contains(&c.rhs), || {
                format!("Ax needs {} in Γ", c.rhs)
            })
        }
        "falseL" => ensure(c.gamma.contains(&IFormula::False), || {
            "falseL needs false in Γ".into()
        }),
        "trueR" => ensure(c.rhs == IFormula::True, || {
            "trueR needs true on the right".into()
        }),
        "andR" => {
            let (a, b) = conjuncts(&c.rhs).ok_or("andR needs a conjunction on the right")?;
            expect(0, same_gamma(a))?;
            expect(1, same_gamma(b))
        }
        "andL1" | "andL2" => {
            let f = principal()?;
            let (a, b) =
                conjuncts(f).ok_or_else(|| format!("principal {f} is not a conjunction"))?;
            let part = if node.rule == "andL1" { a } else { b };
            expect(0, c.extend(part, c.rhs.clone()))
        }
        "orR1" | "orR2" => {
            let IFormula::Disj(a, b) = &c.rhs else {
                return Err("orR needs a disjunction on the right".into());
            };
            expect(0, same_gamma(if node.rule == "orR1" { a } else { b }))
        }
        "orL" => {
            let f = principal()?;
            let IFormula::Disj(a, b) = f else {
                return Err(format!("principal {f} is not a disjunction"));
            };
            expect(0, c.extend(a, c.rhs.clone()))?;
            expect(1, c.extend(b, c.rhs.clone()))
        }
        "impR" => {
            let IFormula::Impl(a, b) = &c.rhs else {
                return Err("impR needs an implication on the right".into());
            };
            expect(0, c.extend(a, (**b).clone()))
        }
        "impL" => {
            let f = principal()?;
            let IFormula::Impl(a, b) = f else {
                return Err(format!("principal {f} is not an implication"));
            };
            expect(0, same_gamma(a))?;
            expect(1, c.extend(b, c.rhs.clone()))
        }
        other => Err(format!("no LJ rule named {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_iformula;

    fn node(rule: &str, s: &str, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree::new(rule, Sequent::Lj(s.parse().unwrap()), premises)
    }

    #[test]
    fn sequent_text_round_trips() {
        for s in ["==> a -> a", "a, a &- b ==> a"] {
            assert_eq!(s.parse::<LjSequent>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn and_left_retains_principal() {
        let p = node(
            "andL1",
            "a &- b ==> a",
            vec![node("Ax", "a, a &- b ==> a", vec![])],
        )
        .with_inst(Inst::Principal(parse_iformula("a & b").unwrap()));
        assert_eq!(check_lj(&p), Ok(()));
        let mut missing = p.clone();
        missing.inst = None;
        assert!(check_lj(&missing).is_err());
    }
}
