use std::fmt;
use std::str::FromStr;

use super::multiset::{multiset_eq, multiset_sum, set_insert, set_of, some_principal};
use super::seqparse::{bracketed, parser};
use super::{
    check_tree, ensure, fresh_constant, witness, Calculus, Check, ProofTree, Sequent, Violation,
};
use crate::error::SyntaxError;
use crate::polarity::cpolarity;
use crate::syntax::{join, BiasMap, CFormula, Parser, Polarity, Term, Tok};

pub const LKF_RULES: &[(&str, usize)] = &[
    ("Store", 1),
    ("Focus", 1),
    ("Release", 1),
    ("ID+", 0),
    ("ID-", 0),
    ("indeed", 0),
    ("absurd", 0),
    ("trivial", 1),
    ("&-", 2),
    ("|-", 1),
    ("forall", 1),
    ("&+", 2),
    ("|+", 1),
    ("exists", 1),
];

/// LKF sequents `==> [Θ], Γ` and `=>> [Θ], A`. Θ is a sorted set; Γ keeps
/// its order and is compared as a multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LkfSequent {
    Unfocused {
        theta: Vec<CFormula>,
        gamma: Vec<CFormula>,
    },
    Focused {
        theta: Vec<CFormula>,
        stoup: CFormula,
    },
}

impl LkfSequent {
    pub fn unfocused(theta: &[CFormula], gamma: Vec<CFormula>) -> Self {
        LkfSequent::Unfocused {
            theta: set_of(theta),
            gamma,
        }
    }

    pub fn focused(theta: &[CFormula], stoup: CFormula) -> Self {
        LkfSequent::Focused {
            theta: set_of(theta),
            stoup,
        }
    }

    pub fn end_sequent(gamma: &[CFormula]) -> Self {
        LkfSequent::Unfocused {
            theta: Vec::new(),
            gamma: gamma.to_vec(),
        }
    }

    pub fn theta(&self) -> &[CFormula] {
        match self {
            LkfSequent::Unfocused { theta, .. } | LkfSequent::Focused { theta, .. } => theta,
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.theta().iter().any(|t| t.mentions(name))
            || match self {
                LkfSequent::Unfocused { gamma, .. } => gamma.iter().any(|g| g.mentions(name)),
                LkfSequent::Focused { stoup, .. } => stoup.mentions(name),
            }
    }
}

impl fmt::Display for LkfSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LkfSequent::Unfocused { theta, gamma } => {
                write!(f, "==> [{}]", join(theta))?;
                for g in gamma {
                    write!(f, ", {g}")?;
                }
                Ok(())
            }
            LkfSequent::Focused { theta, stoup } => write!(f, "=>> [{}], {stoup}", join(theta)),
        }
    }
}

impl FromStr for LkfSequent {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Self, SyntaxError> {
        let mut p = parser(text)?;
        let seq = if p.eat(&Tok::FocusEntails) {
            let theta = bracketed(&mut p, Parser::cformula)?;
            p.expect(&Tok::Comma, "',' before the stoup")?;
            LkfSequent::focused(&theta, p.cformula()?)
        } else {
            p.expect(&Tok::Entails, "'==>' or '=>>'")?;
            let theta = bracketed(&mut p, Parser::cformula)?;
            let mut gamma = Vec::new();
            while p.eat(&Tok::Comma) {
                gamma.push(p.cformula()?);
            }
            LkfSequent::unfocused(&theta, gamma)
        };
        p.finish()?;
        Ok(seq)
    }
}

/// Checks every node against the LKF rules and that the root is an
/// end-sequent `==> [], Γ`.
pub fn check_lkf(p: &ProofTree, bias: &BiasMap) -> Result<(), Violation> {
    if let Sequent::Lkf(root) = &p.conclusion {
        let is_end = matches!(root, LkfSequent::Unfocused { theta, .. } if theta.is_empty());
        if !is_end {
            return Err(Violation {
                path: Vec::new(),
                rule: p.rule.clone(),
                reason: "end-sequent must have the form ==> [], Γ".into(),
            });
        }
    }
    check_tree(p, Calculus::Lkf, LKF_RULES, &|node| {
        Node { node, bias }.check()
    })
}

struct Node<'a> {
    node: &'a ProofTree,
    bias: &'a BiasMap,
}

fn lkf(s: &Sequent) -> &LkfSequent {
    match s {
        Sequent::Lkf(s) => s,
        _ => unreachable!("calculus checked before rules"),
    }
}

impl<'a> Node<'a> {
    fn concl(&self) -> &'a LkfSequent {
        lkf(&self.node.conclusion)
    }

    fn prem(&self, i: usize) -> &'a LkfSequent {
        lkf(&self.node.premises[i].conclusion)
    }

    fn pos(&self, f: &CFormula) -> bool {
        cpolarity(f, self.bias) == Polarity::Pos
    }

    /// Storable: a positive formula or a negative literal.
    fn is_c(&self, f: &CFormula) -> bool {
        self.pos(f) || f.is_literal()
    }

    fn unfocused(
        &self,
        s: &'a LkfSequent,
        which: &str,
    ) -> Result<(&'a [CFormula], &'a [CFormula]), String> {
        match s {
            LkfSequent::Unfocused { theta, gamma } => Ok((theta, gamma)),
            _ => Err(format!("{which} must be an unfocused sequent")),
        }
    }

    fn focused(
        &self,
        s: &'a LkfSequent,
        which: &str,
    ) -> Result<(&'a [CFormula], &'a CFormula), String> {
        match s {
            LkfSequent::Focused { theta, stoup } => Ok((theta, stoup)),
            _ => Err(format!("{which} must be a focused sequent")),
        }
    }

    fn check(&self) -> Check {
        let c = self.concl();
        if let Some(t) = c.theta().iter().find(|t| !self.is_c(t)) {
            return Err(format!(
                "{t} in [Θ] is neither positive nor a negative literal"
            ));
        }
        match self.node.rule.as_str() {
            "Store" => {
                let (theta, gamma) = self.unfocused(c, "conclusion")?;
                let (t1, g1) = self.unfocused(self.prem(0), "premise")?;
                let ok = some_principal(gamma, |x, rest| {
                    self.is_c(x) && multiset_eq(g1, rest) && t1 == set_insert(theta, x.clone())
                });
                ensure(ok, || {
                    "no positive formula or negative literal of Γ is stored".into()
                })
            }
            "Focus" => {
                let (theta, gamma) = self.unfocused(c, "conclusion")?;
                ensure(gamma.is_empty(), || "Focus needs an empty Γ".into())?;
                let (t1, p) = self.focused(self.prem(0), "premise")?;
                ensure(t1 == theta, || "premise must keep Θ".into())?;
                ensure(theta.contains(p), || format!("stoup {p} is not in Θ"))?;
                ensure(self.pos(p), || {
                    format!("Focus on {p}, which is not positive")
                })
            }
            "Release" => {
                let (theta, n) = self.focused(c, "conclusion")?;
                ensure(!self.pos(n), || {
                    format!("Release of {n}, which is not negative")
                })?;
                let (t1, g1) = self.unfocused(self.prem(0), "premise")?;
                ensure(t1 == theta && g1 == [n.clone()], || {
                    format!("premise must be ==> [Θ], {n}")
                })
            }
            "ID+" | "ID-" => {
                let (theta, l) = self.focused(c, "conclusion")?;
                let shape_ok = matches!(
                    (self.node.rule.as_str(), l),
                    ("ID+", CFormula::PosLit(_)) | ("ID-", CFormula::NegLit(_))
                );
                ensure(shape_ok && self.pos(l), || {
                    format!(
                        "{} needs a positive literal of the right sign, got {l}",
                        self.node.rule
                    )
                })?;
                let dual = l.negate();
                ensure(theta.contains(&dual), || {
                    format!("complement {dual} is not in Θ")
                })
            }
            "indeed" => {
                let (_, t) = self.focused(c, "conclusion")?;
                ensure(*t == CFormula::True, || "indeed needs the stoup #t".into())
            }
            "absurd" => {
                let (_, gamma) = self.unfocused(c, "conclusion")?;
                ensure(gamma.contains(&CFormula::NotFalse), || {
                    "absurd needs ~#f in Γ".into()
                })
            }
            "trivial" => self.gamma_rule(|x| (*x == CFormula::NotTrue).then(Vec::new)),
            "|-" => self.gamma_rule(|x| match x {
                CFormula::OrNeg(a, b) => Some(vec![(**a).clone(), (**b).clone()]),
                _ => None,
            }),
            "forall" => {
                let k = fresh_constant(self.node, &|n| c.mentions(n))?;
                let k = Term::constant(k);
                self.gamma_rule(|x| match x {
                    CFormula::Forall(y, a) => Some(vec![a.subst(y, &k)]),
                    _ => None,
                })
            }
            "&-" => {
                let (theta, gamma) = self.unfocused(c, "conclusion")?;
                let (t0, g0) = self.unfocused(self.prem(0), "left premise")?;
                let (t1, g1) = self.unfocused(self.prem(1), "right premise")?;
                ensure(t0 == theta && t1 == theta, || "premises must keep Θ".into())?;
                let ok = some_principal(gamma, |x, rest| match x {
                    CFormula::AndNeg(a, b) => {
                        multiset_eq(g0, &multiset_sum(rest, &[(**a).clone()]))
                            && multiset_eq(g1, &multiset_sum(rest, &[(**b).clone()]))
                    }
                    _ => false,
                });
                ensure(ok, || "no &- formula of Γ matches the premises".into())
            }
            "&+" => {
                let (theta, f) = self.focused(c, "conclusion")?;
                let CFormula::AndPos(a, b) = f else {
                    return Err(format!("&+ needs a &+ stoup, got {f}"));
                };
                for (i, part) in [a, b].into_iter().enumerate() {
                    let (t, s) = self.focused(self.prem(i), "premise")?;
                    ensure(t == theta && s == &**part, || {
                        format!("premise {i} must focus on {part}")
                    })?;
                }
                Ok(())
            }
            "|+" => {
                let (theta, f) = self.focused(c, "conclusion")?;
                let CFormula::OrPos(a, b) = f else {
                    return Err(format!("|+ needs a |+ stoup, got {f}"));
                };
                let (t, s) = self.focused(self.prem(0), "premise")?;
                ensure(t == theta, || "premise must keep Θ".into())?;
                ensure(s == &**a || s == &**b, || {
                    format!("premise stoup {s} is neither disjunct")
                })
            }
            "exists" => {
                let (theta, f) = self.focused(c, "conclusion")?;
                let CFormula::Exists(x, a) = f else {
                    return Err(format!("exists needs an ∃ stoup, got {f}"));
                };
                let t = witness(self.node)?;
                let (t1, s) = self.focused(self.prem(0), "premise")?;
                ensure(t1 == theta && *s == a.subst(x, t), || {
                    format!("premise must focus on the instance at {t}")
                })
            }
            other => Err(format!("no LKF rule named {other}")),
        }
    }

    /// One-premise unfocused rules acting on a Γ member.
    fn gamma_rule(&self, replace: impl Fn(&CFormula) -> Option<Vec<CFormula>>) -> Check {
        let (theta, gamma) = self.unfocused(self.concl(), "conclusion")?;
        let (t1, g1) = self.unfocused(self.prem(0), "premise")?;
        ensure(t1 == theta, || "premise must keep Θ".into())?;
        let ok = some_principal(gamma, |x, rest| {
            replace(x).is_some_and(|added| multiset_eq(g1, &multiset_sum(rest, &added)))
        });
        ensure(ok, || {
            format!("no formula of Γ is decomposed by {}", self.node.rule)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(rule: &str, s: &str, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree::new(rule, Sequent::Lkf(s.parse().unwrap()), premises)
    }

    #[test]
    fn sequent_text_round_trips() {
        for s in [
            "==> []",
            "==> [], p |- ~p",
            "=>> [p, ~q], p |+ q",
            "==> [~p], ~#t, #t",
        ] {
            let seq: LkfSequent = s.parse().unwrap();
            assert_eq!(seq.to_string(), s);
        }
    }

    #[test]
    fn absurd_closes_not_false() {
        let p = node("absurd", "==> [], ~#f", vec![]);
        assert!(check_lkf(&p, &BiasMap::default()).is_ok());
    }

    #[test]
    fn excluded_middle_with_one_focus() {
        let bias = BiasMap::default();
        let proof = node(
            "|-",
            "==> [], p |- ~p",
            vec![node(
                "Store",
                "==> [], p, ~p",
                vec![node(
                    "Store",
                    "==> [p], ~p",
                    vec![node(
                        "Focus",
                        "==> [p, ~p]",
                        vec![node("ID+", "=>> [p, ~p], p", vec![])],
                    )],
                )],
            )],
        );
        assert_eq!(check_lkf(&proof, &bias), Ok(()));
    }

    #[test]
    fn focus_on_negative_is_rejected() {
        let bias = BiasMap::default();
        let p = node(
            "Focus",
            "==> [~p]",
            vec![node("ID-", "=>> [~p], ~p", vec![])],
        );
        let wrapped = node("Store", "==> [], ~p", vec![p]);
        let err = check_lkf(&wrapped, &bias).unwrap_err();
        assert_eq!(err.path, vec![0]);
    }

    #[test]
    fn root_must_be_an_end_sequent() {
        let p = node("ID+", "=>> [~p], p", vec![]);
        assert!(check_lkf(&p, &BiasMap::default()).is_err());
    }
}
