use std::fmt;
use std::str::FromStr;

use super::multiset::{multiset_eq, multiset_sum, remove_one, sorted};
use super::seqparse::{bracketed, parser};
use super::{
    check_tree, ensure, fresh_constant, witness, Calculus, Check, ProofTree, Sequent, Violation,
};
use crate::error::SyntaxError;
use crate::syntax::{join, lneg, BiasMap, LFormula, Parser, Polarity, Term, Tok};

pub const LLF_RULES: &[(&str, usize)] = &[
    ("bot", 1),
    ("par", 1),
    ("?", 1),
    ("top", 0),
    ("&", 2),
    ("forall", 1),
    ("Rup", 1),
    ("one", 0),
    ("tensor", 2),
    ("!", 1),
    ("plus_l", 1),
    ("plus_r", 1),
    ("exists", 1),
    ("Rdown", 1),
    ("I1", 0),
    ("I2", 0),
    ("D1", 1),
    ("D2", 1),
];

/// LLF sequents `[Ψ] ; [Δ] =UP=> [L]` and `[Ψ] ; [Δ] =DN=> F`. Ψ and Δ are
/// sorted multisets; L is an ordered list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LlfSequent {
    Up {
        psi: Vec<LFormula>,
        delta: Vec<LFormula>,
        list: Vec<LFormula>,
    },
    Down {
        psi: Vec<LFormula>,
        delta: Vec<LFormula>,
        focus: LFormula,
    },
}

impl LlfSequent {
    pub fn up(psi: &[LFormula], delta: &[LFormula], list: Vec<LFormula>) -> Self {
        LlfSequent::Up {
            psi: sorted(psi),
            delta: sorted(delta),
            list,
        }
    }

    pub fn down(psi: &[LFormula], delta: &[LFormula], focus: LFormula) -> Self {
        LlfSequent::Down {
            psi: sorted(psi),
            delta: sorted(delta),
            focus,
        }
    }

    pub fn psi(&self) -> &[LFormula] {
        match self {
            LlfSequent::Up { psi, .. } | LlfSequent::Down { psi, .. } => psi,
        }
    }

    pub fn delta(&self) -> &[LFormula] {
        match self {
            LlfSequent::Up { delta, .. } | LlfSequent::Down { delta, .. } => delta,
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        let m = |v: &[LFormula]| v.iter().any(|f| f.mentions(name));
        m(self.psi())
            || m(self.delta())
            || match self {
                LlfSequent::Up { list, .. } => m(list),
                LlfSequent::Down { focus, .. } => focus.mentions(name),
            }
    }
}

impl fmt::Display for LlfSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ; [{}]", join(self.psi()), join(self.delta()))?;
        match self {
            LlfSequent::Up { list, .. } => write!(f, " =UP=> [{}]", join(list)),
            LlfSequent::Down { focus, .. } => write!(f, " =DN=> {focus}"),
        }
    }
}

impl FromStr for LlfSequent {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Self, SyntaxError> {
        let mut p = parser(text)?;
        let psi = bracketed(&mut p, Parser::lformula)?;
        p.expect(&Tok::Semi, "';'")?;
        let delta = bracketed(&mut p, Parser::lformula)?;
        let seq = if p.eat(&Tok::Up) {
            LlfSequent::up(&psi, &delta, bracketed(&mut p, Parser::lformula)?)
        } else {
            p.expect(&Tok::Down, "'=UP=>' or '=DN=>'")?;
            LlfSequent::down(&psi, &delta, p.lformula()?)
        };
        p.finish()?;
        Ok(seq)
    }
}

/// Literal polarity: `a` follows the bias of `a`, `a^` the opposite.
fn positive_literal(f: &LFormula, bias: &BiasMap) -> bool {
    match f {
        LFormula::Atom(a) => bias.get(&a.name) == Polarity::Pos,
        LFormula::NegAtom(a) => bias.get(&a.name) == Polarity::Neg,
        _ => false,
    }
}

fn negative_literal(f: &LFormula, bias: &BiasMap) -> bool {
    f.is_literal() && !positive_literal(f, bias)
}

pub fn check_llf(p: &ProofTree, bias: &BiasMap) -> Result<(), Violation> {
    check_tree(p, Calculus::Llf, LLF_RULES, &|node| {
        Node { node, bias }.check()
    })
}

struct Node<'a> {
    node: &'a ProofTree,
    bias: &'a BiasMap,
}

fn llf(s: &Sequent) -> &LlfSequent {
    match s {
        Sequent::Llf(s) => s,
        _ => unreachable!("calculus checked before rules"),
    }
}

type Up<'a> = (&'a [LFormula], &'a [LFormula], &'a [LFormula]);
type Down<'a> = (&'a [LFormula], &'a [LFormula], &'a LFormula);
type Head<'a> = (&'a [LFormula], &'a [LFormula], &'a LFormula, &'a [LFormula]);

impl<'a> Node<'a> {
    fn concl(&self) -> &'a LlfSequent {
        llf(&self.node.conclusion)
    }

    fn prem(&self, i: usize) -> &'a LlfSequent {
        llf(&self.node.premises[i].conclusion)
    }

    fn up(&self, s: &'a LlfSequent, which: &str) -> Result<Up<'a>, String> {
        match s {
            LlfSequent::Up { psi, delta, list } => Ok((psi, delta, list)),
            _ => Err(format!("{which} must be an up sequent")),
        }
    }

    fn down(&self, s: &'a LlfSequent, which: &str) -> Result<Down<'a>, String> {
        match s {
            LlfSequent::Down { psi, delta, focus } => Ok((psi, delta, focus)),
            _ => Err(format!("{which} must be a down sequent")),
        }
    }

    /// Conclusion is `Ψ;Δ ⇑ F, L`; returns (Ψ, Δ, F, L).
    fn head(&self) -> Result<Head<'a>, String> {
        let (psi, delta, list) = self.up(self.concl(), "conclusion")?;
        match list.split_first() {
            Some((f, rest)) => Ok((psi, delta, f, rest)),
            None => Err(format!("{} needs a non-empty list", self.node.rule)),
        }
    }

    /// Premise `i` is `Ψ';Δ' ⇑ L'`.
    fn premise_up(
        &self,
        i: usize,
        psi: &[LFormula],
        delta: &[LFormula],
        list: &[LFormula],
    ) -> Check {
        let (p1, d1, l1) = self.up(self.prem(i), "premise")?;
        ensure(multiset_eq(p1, psi), || {
            format!("premise {i} has the wrong Ψ")
        })?;
        ensure(multiset_eq(d1, delta), || {
            format!("premise {i} has the wrong Δ")
        })?;
        ensure(l1 == list, || format!("premise {i} has the wrong list"))
    }

    fn premise_down(
        &self,
        i: usize,
        psi: &[LFormula],
        delta: &[LFormula],
        focus: &LFormula,
    ) -> Check {
        let (p1, d1, f1) = self.down(self.prem(i), "premise")?;
        ensure(multiset_eq(p1, psi), || {
            format!("premise {i} has the wrong Ψ")
        })?;
        ensure(multiset_eq(d1, delta), || {
            format!("premise {i} has the wrong Δ")
        })?;
        ensure(f1 == focus, || format!("premise {i} must focus on {focus}"))
    }

    fn check(&self) -> Check {
        let c = self.concl();
        if let Some(d) = c.delta().iter().find(|d| d.is_asynchronous()) {
            return Err(format!("{d} in Δ is asynchronous"));
        }
        let cons = |f: &LFormula, rest: &[LFormula]| {
            let mut v = vec![f.clone()];
            v.extend_from_slice(rest);
            v
        };
        match self.node.rule.as_str() {
            "bot" => {
                let (psi, delta, f, rest) = self.head()?;
                ensure(*f == LFormula::Bot, || {
                    "bot needs ⊥ at the head of the list".into()
                })?;
                self.premise_up(0, psi, delta, rest)
            }
            "par" => {
                let (psi, delta, f, rest) = self.head()?;
                let LFormula::Par(a, b) = f else {
                    return Err(format!("par needs a ⅋ head, got {f}"));
                };
                let mut list = vec![(**a).clone(), (**b).clone()];
                list.extend_from_slice(rest);
                self.premise_up(0, psi, delta, &list)
            }
            "?" => {
                let (psi, delta, f, rest) = self.head()?;
                let LFormula::Quest(a) = f else {
                    return Err(format!("? needs a ? head, got {f}"));
                };
                self.premise_up(0, &multiset_sum(psi, &[(**a).clone()]), delta, rest)
            }
            "top" => {
                let (_, _, f, _) = self.head()?;
                ensure(*f == LFormula::Top, || {
                    "top needs ⊤ at the head of the list".into()
                })
            }
            "&" => {
                let (psi, delta, f, rest) = self.head()?;
                let LFormula::With(a, b) = f else {
                    return Err(format!("& needs a & head, got {f}"));
                };
                self.premise_up(0, psi, delta, &cons(a, rest))?;
                self.premise_up(1, psi, delta, &cons(b, rest))
            }
            "forall" => {
                let (psi, delta, f, rest) = self.head()?;
                let LFormula::Forall(x, b) = f else {
                    return Err(format!("forall needs a ∀ head, got {f}"));
                };
                let k = fresh_constant(self.node, &|n| c.mentions(n))?;
                self.premise_up(0, psi, delta, &cons(&b.subst(x, &Term::constant(k)), rest))
            }
            "Rup" => {
                let (psi, delta, f, rest) = self.head()?;
                ensure(!f.is_asynchronous(), || {
                    format!("R⇑ on {f}, which is asynchronous")
                })?;
                self.premise_up(0, psi, &multiset_sum(delta, std::slice::from_ref(f)), rest)
            }
            "one" => {
                let (_, delta, f) = self.down(c, "conclusion")?;
                ensure(*f == LFormula::One, || "one needs focus on 1".into())?;
                ensure(delta.is_empty(), || "one needs an empty Δ".into())
            }
            "tensor" => {
                let (psi, delta, f) = self.down(c, "conclusion")?;
                let LFormula::Tensor(a, b) = f else {
                    return Err(format!("tensor needs focus on ⊗, got {f}"));
                };
                let (p0, d0, f0) = self.down(self.prem(0), "left premise")?;
                let (p1, d1, f1) = self.down(self.prem(1), "right premise")?;
                ensure(multiset_eq(p0, psi) && multiset_eq(p1, psi), || {
                    "premises must keep Ψ".into()
                })?;
                ensure(f0 == &**a && f1 == &**b, || {
                    "premises must focus on the two factors".into()
                })?;
                ensure(multiset_eq(delta, &multiset_sum(d0, d1)), || {
                    "premise contexts do not partition Δ".into()
                })
            }
            "!" => {
                let (psi, delta, f) = self.down(c, "conclusion")?;
                let LFormula::Bang(a) = f else {
                    return Err(format!("! needs focus on !, got {f}"));
                };
                ensure(delta.is_empty(), || "! needs an empty Δ".into())?;
                self.premise_up(0, psi, &[], &[(**a).clone()])
            }
            "plus_l" | "plus_r" => {
                let (psi, delta, f) = self.down(c, "conclusion")?;
                let LFormula::Plus(a, b) = f else {
                    return Err(format!("{} needs focus on ⊕, got {f}", self.node.rule));
                };
                let part = if self.node.rule == "plus_l" { a } else { b };
                self.premise_down(0, psi, delta, part)
            }
            "exists" => {
                let (psi, delta, f) = self.down(c, "conclusion")?;
                let LFormula::Exists(x, b) = f else {
                    return Err(format!("exists needs focus on ∃, got {f}"));
                };
                let t = witness(self.node)?;
                self.premise_down(0, psi, delta, &b.subst(x, t))
            }
            "Rdown" => {
                let (psi, delta, f) = self.down(c, "conclusion")?;
                let ok = f.is_asynchronous() || negative_literal(f, self.bias);
                ensure(ok, || {
                    format!("R⇓ on {f}, which is neither asynchronous nor a negative literal")
                })?;
                self.premise_up(0, psi, delta, std::slice::from_ref(f))
            }
            "I1" => {
                let (_, delta, k) = self.down(c, "conclusion")?;
                ensure(positive_literal(k, self.bias), || {
                    format!("I1 needs a positive literal, got {k}")
                })?;
                ensure(delta == [lneg(k)], || format!("I1 needs Δ = {}", lneg(k)))
            }
            "I2" => {
                let (psi, delta, k) = self.down(c, "conclusion")?;
                ensure(positive_literal(k, self.bias), || {
                    format!("I2 needs a positive literal, got {k}")
                })?;
                ensure(delta.is_empty(), || "I2 needs an empty Δ".into())?;
                ensure(psi.contains(&lneg(k)), || {
                    format!("I2 needs {} in Ψ", lneg(k))
                })
            }
            "D1" => {
                let (psi, delta, list) = self.up(c, "conclusion")?;
                ensure(list.is_empty(), || "D1 needs an empty list".into())?;
                let (p1, d1, f) = self.down(self.prem(0), "premise")?;
                ensure(!negative_literal(f, self.bias), || {
                    format!("D1 on {f}, a negative literal")
                })?;
                ensure(multiset_eq(p1, psi), || "premise must keep Ψ".into())?;
                let rest =
                    remove_one(delta, f).ok_or_else(|| format!("D1 focus {f} is not in Δ"))?;
                ensure(multiset_eq(d1, &rest), || {
                    "premise Δ must drop the focused formula".into()
                })
            }
            "D2" => {
                let (psi, delta, list) = self.up(c, "conclusion")?;
                ensure(list.is_empty(), || "D2 needs an empty list".into())?;
                let (p1, d1, f) = self.down(self.prem(0), "premise")?;
                ensure(!negative_literal(f, self.bias), || {
                    format!("D2 on {f}, a negative literal")
                })?;
                ensure(psi.contains(f), || format!("D2 focus {f} is not in Ψ"))?;
                ensure(multiset_eq(p1, psi) && multiset_eq(d1, delta), || {
                    "premise must keep Ψ and Δ".into()
                })
            }
            other => Err(format!("no LLF rule named {other}")),
        }
    }
}
