use std::fmt;
use std::str::FromStr;

use super::multiset::{
    multiset_eq, multiset_sum, remove_one, set_insert, set_of, set_union, some_principal,
};
use super::seqparse::{bracketed, parser};
use super::{
    check_tree, ensure, fresh_constant, witness, Calculus, Check, ProofTree, Sequent, Violation,
};
use crate::error::SyntaxError;
use crate::polarity::{is_negative, is_positive};
use crate::syntax::{join, BiasMap, IFormula, Parser, Tok};

pub const LJF_RULES: &[(&str, usize)] = &[
    ("Lf", 1),
    ("Rf", 1),
    ("Rl", 1),
    ("Rr", 1),
    ("[]l", 1),
    ("[]r", 1),
    ("Ir", 0),
    ("Il", 0),
    ("falseL", 0),
    ("trueL", 1),
    ("trueR", 0),
    ("&-L", 1),
    ("&+L", 1),
    ("&-R", 2),
    ("&+R", 2),
    ("|L", 2),
    ("|R", 1),
    ("->L", 2),
    ("->R", 1),
    ("existsL", 1),
    ("existsR", 1),
    ("forallL", 1),
    ("forallR", 1),
];

pub const LJF_CUT_RULES: &[(&str, usize)] = &[
    ("Cut+", 2),
    ("Cut-", 2),
    ("Cut1<-", 2),
    ("Cut2<-", 2),
    ("Cut->", 2),
];

/// Right-hand side of an unfocused sequent: `R` or the stored `[R]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rhs {
    Formula(IFormula),
    Boxed(IFormula),
}

impl Rhs {
    pub fn formula(&self) -> &IFormula {
        match self {
            Rhs::Formula(f) | Rhs::Boxed(f) => f,
        }
    }

    pub fn is_boxed(&self) -> bool {
        matches!(self, Rhs::Boxed(_))
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Formula(r) => write!(f, "{r}"),
            Rhs::Boxed(r) => write!(f, "[{r}]"),
        }
    }
}

/// LJF sequents. Γ is kept as a sorted set; Θ keeps its order (the search
/// engine processes it first-in first-out) but is compared as a multiset.
/// A border sequent `[Γ] --> [R]` is the unfocused form with empty Θ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LjfSequent {
    Unfocused {
        gamma: Vec<IFormula>,
        theta: Vec<IFormula>,
        rhs: Rhs,
    },
    LeftFocus {
        gamma: Vec<IFormula>,
        focus: IFormula,
        rhs: IFormula,
    },
    RightFocus {
        gamma: Vec<IFormula>,
        focus: IFormula,
    },
}

impl LjfSequent {
    pub fn unfocused(gamma: &[IFormula], theta: Vec<IFormula>, rhs: Rhs) -> Self {
        LjfSequent::Unfocused {
            gamma: set_of(gamma),
            theta,
            rhs,
        }
    }

    pub fn border(gamma: &[IFormula], r: IFormula) -> Self {
        Self::unfocused(gamma, Vec::new(), Rhs::Boxed(r))
    }

    pub fn left_focus(gamma: &[IFormula], focus: IFormula, r: IFormula) -> Self {
        LjfSequent::LeftFocus {
            gamma: set_of(gamma),
            focus,
            rhs: r,
        }
    }

    pub fn right_focus(gamma: &[IFormula], focus: IFormula) -> Self {
        LjfSequent::RightFocus {
            gamma: set_of(gamma),
            focus,
        }
    }

    /// The end-sequent `[], Θ --> R` for hypotheses Θ and goal R.
    pub fn end_sequent(hyps: &[IFormula], goal: &IFormula) -> Self {
        LjfSequent::Unfocused {
            gamma: Vec::new(),
            theta: hyps.to_vec(),
            rhs: Rhs::Formula(goal.clone()),
        }
    }

    pub fn gamma(&self) -> &[IFormula] {
        match self {
            LjfSequent::Unfocused { gamma, .. }
            | LjfSequent::LeftFocus { gamma, .. }
            | LjfSequent::RightFocus { gamma, .. } => gamma,
        }
    }

    pub fn is_border(&self) -> bool {
        matches!(self, LjfSequent::Unfocused { theta, rhs: Rhs::Boxed(_), .. } if theta.is_empty())
    }

    pub fn mentions(&self, name: &str) -> bool {
        let in_gamma = self.gamma().iter().any(|g| g.mentions(name));
        in_gamma
            || match self {
                LjfSequent::Unfocused { theta, rhs, .. } => {
                    theta.iter().any(|t| t.mentions(name)) || rhs.formula().mentions(name)
                }
                LjfSequent::LeftFocus { focus, rhs, .. } => {
                    focus.mentions(name) || rhs.mentions(name)
                }
                LjfSequent::RightFocus { focus, .. } => focus.mentions(name),
            }
    }
}

impl fmt::Display for LjfSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(self.gamma()))?;
        match self {
            LjfSequent::Unfocused { theta, rhs, .. } => {
                for t in theta {
                    write!(f, ", {t}")?;
                }
                write!(f, " --> {rhs}")
            }
            LjfSequent::LeftFocus { focus, rhs, .. } => write!(f, " -{{{focus}}}-> [{rhs}]"),
            LjfSequent::RightFocus { focus, .. } => write!(f, " -R-> {focus}"),
        }
    }
}

impl FromStr for LjfSequent {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Self, SyntaxError> {
        let mut p = parser(text)?;
        let gamma = bracketed(&mut p, Parser::iformula)?;
        let seq = if p.eat(&Tok::FocusOpen) {
            let focus = p.iformula()?;
            p.expect(&Tok::FocusClose, "'}->'")?;
            p.expect(&Tok::LBracket, "'[' before the right-hand side")?;
            let r = p.iformula()?;
            p.expect(&Tok::RBracket, "']'")?;
            LjfSequent::left_focus(&gamma, focus, r)
        } else if p.eat(&Tok::RightFocus) {
            LjfSequent::right_focus(&gamma, p.iformula()?)
        } else {
            let mut theta = Vec::new();
            while p.eat(&Tok::Comma) {
                theta.push(p.iformula()?);
            }
            p.expect(&Tok::LongArrow, "'-->'")?;
            let rhs = if p.eat(&Tok::LBracket) {
                let r = p.iformula()?;
                p.expect(&Tok::RBracket, "']'")?;
                Rhs::Boxed(r)
            } else {
                Rhs::Formula(p.iformula()?)
            };
            LjfSequent::unfocused(&gamma, theta, rhs)
        };
        p.finish()?;
        Ok(seq)
    }
}

/// Checks every node against the LJF rules; the cut rules are accepted only
/// when `allow_cut` is set.
pub fn check_ljf(p: &ProofTree, bias: &BiasMap, allow_cut: bool) -> Result<(), Violation> {
    let mut rules = LJF_RULES.to_vec();
    if allow_cut {
        rules.extend_from_slice(LJF_CUT_RULES);
    }
    check_tree(p, Calculus::Ljf, &rules, &|node| {
        Node { node, bias }.check()
    })
}

struct Node<'a> {
    node: &'a ProofTree,
    bias: &'a BiasMap,
}

fn ljf(s: &Sequent) -> &LjfSequent {
    match s {
        Sequent::Ljf(s) => s,
        _ => unreachable!("calculus checked before rules"),
    }
}

struct Unf<'a> {
    gamma: &'a [IFormula],
    theta: &'a [IFormula],
    rhs: &'a Rhs,
}

impl<'a> Node<'a> {
    fn concl(&self) -> &'a LjfSequent {
        ljf(&self.node.conclusion)
    }

    fn prem(&self, i: usize) -> &'a LjfSequent {
        ljf(&self.node.premises[i].conclusion)
    }

    fn pos(&self, f: &IFormula) -> bool {
        is_positive(f, self.bias)
    }

    fn neg(&self, f: &IFormula) -> bool {
        is_negative(f, self.bias)
    }

    /// A formula allowed in Γ: negative, or a positive atom.
    fn is_c(&self, f: &IFormula) -> bool {
        self.neg(f) || (f.is_atom() && self.pos(f))
    }

    /// A formula allowed in `[R]`: positive, or a negative atom.
    fn is_d(&self, f: &IFormula) -> bool {
        self.pos(f) || (f.is_atom() && self.neg(f))
    }

    fn well_formed(&self, s: &LjfSequent) -> Check {
        if let Some(g) = s.gamma().iter().find(|g| !self.is_c(g)) {
            return Err(format!(
                "{g} in [Γ] is neither negative nor a positive atom"
            ));
        }
        let boxed = match s {
            LjfSequent::Unfocused {
                rhs: Rhs::Boxed(r), ..
            }
            | LjfSequent::LeftFocus { rhs: r, .. } => Some(r),
            _ => None,
        };
        match boxed {
            Some(r) if !self.is_d(r) => {
                Err(format!("[{r}] is neither positive nor a negative atom"))
            }
            _ => Ok(()),
        }
    }

    fn unfocused(&self, s: &'a LjfSequent, which: &str) -> Result<Unf<'a>, String> {
        match s {
            LjfSequent::Unfocused { gamma, theta, rhs } => Ok(Unf { gamma, theta, rhs }),
            _ => Err(format!("{which} must be an unfocused sequent")),
        }
    }

    fn left(
        &self,
        s: &'a LjfSequent,
        which: &str,
    ) -> Result<(&'a [IFormula], &'a IFormula, &'a IFormula), String> {
        match s {
            LjfSequent::LeftFocus { gamma, focus, rhs } => Ok((gamma, focus, rhs)),
            _ => Err(format!("{which} must be a left-focus sequent")),
        }
    }

    fn right(
        &self,
        s: &'a LjfSequent,
        which: &str,
    ) -> Result<(&'a [IFormula], &'a IFormula), String> {
        match s {
            LjfSequent::RightFocus { gamma, focus } => Ok((gamma, focus)),
            _ => Err(format!("{which} must be a right-focus sequent")),
        }
    }

    fn check(&self) -> Check {
        let c = self.concl();
        self.well_formed(c)?;
        match self.node.rule.as_str() {
            "Lf" => {
                let u = self.unfocused(c, "conclusion")?;
                ensure(u.theta.is_empty(), || "Lf needs an empty Θ".into())?;
                let Rhs::Boxed(r) = u.rhs else {
                    return Err("Lf needs a boxed right-hand side".into());
                };
                let (g, n, r1) = self.left(self.prem(0), "premise")?;
                ensure(g == u.gamma && r1 == r, || {
                    "premise must keep Γ and R".into()
                })?;
                ensure(u.gamma.contains(n), || {
                    format!("focused formula {n} is not in Γ")
                })?;
                ensure(self.neg(n), || {
                    format!("Lf focuses {n}, which is not negative")
                })
            }
            "Rf" => {
                let u = self.unfocused(c, "conclusion")?;
                ensure(u.theta.is_empty(), || "Rf needs an empty Θ".into())?;
                let Rhs::Boxed(r) = u.rhs else {
                    return Err("Rf needs a boxed right-hand side".into());
                };
                let (g, p) = self.right(self.prem(0), "premise")?;
                ensure(g == u.gamma && p == r, || {
                    "premise must focus on [R] with the same Γ".into()
                })?;
                ensure(self.pos(p), || {
                    format!("Rf focuses {p}, which is not positive")
                })
            }
            "Rl" => {
                let (g, p, r) = self.left(c, "conclusion")?;
                ensure(self.pos(p), || {
                    format!("Rl releases {p}, which is not positive")
                })?;
                let u = self.unfocused(self.prem(0), "premise")?;
                ensure(u.gamma == g, || "premise must keep Γ".into())?;
                ensure(u.theta == [p.clone()], || {
                    "premise Θ must be exactly the released formula".into()
                })?;
                ensure(*u.rhs == Rhs::Boxed(r.clone()), || {
                    "premise must keep [R]".into()
                })
            }
            "Rr" => {
                let (g, n) = self.right(c, "conclusion")?;
                ensure(self.neg(n), || {
                    format!("Rr releases {n}, which is not negative")
                })?;
                let u = self.unfocused(self.prem(0), "premise")?;
                ensure(u.gamma == g && u.theta.is_empty(), || {
                    "premise must be [Γ] --> N".into()
                })?;
                ensure(*u.rhs == Rhs::Formula(n.clone()), || {
                    "premise must have the released formula on the right".into()
                })
            }
            "[]l" => {
                let u = self.unfocused(c, "conclusion")?;
                let v = self.unfocused(self.prem(0), "premise")?;
                ensure(v.rhs == u.rhs, || {
                    "premise must keep the right-hand side".into()
                })?;
                let ok = some_principal(u.theta, |x, rest| {
                    self.is_c(x)
                        && multiset_eq(v.theta, rest)
                        && v.gamma == set_insert(u.gamma, x.clone())
                });
                ensure(ok, || {
                    "no negative formula or positive atom of Θ is moved into Γ".into()
                })
            }
            "[]r" => {
                let u = self.unfocused(c, "conclusion")?;
                let Rhs::Formula(d) = u.rhs else {
                    return Err("[]r needs an unboxed right-hand side".into());
                };
                ensure(self.is_d(d), || {
                    format!("[]r stores {d}, which is neither positive nor a negative atom")
                })?;
                let v = self.unfocused(self.prem(0), "premise")?;
                ensure(v.gamma == u.gamma && multiset_eq(v.theta, u.theta), || {
                    "premise must keep Γ and Θ".into()
                })?;
                ensure(*v.rhs == Rhs::Boxed(d.clone()), || {
                    "premise must store the right-hand side".into()
                })
            }
            "Ir" => {
                let (g, p) = self.right(c, "conclusion")?;
                ensure(p.is_atom() && self.pos(p), || {
                    format!("Ir needs a positive atom, got {p}")
                })?;
                ensure(g.contains(p), || format!("Ir requires {p} in Γ"))
            }
            "Il" => {
                let (_, n, r) = self.left(c, "conclusion")?;
                ensure(n.is_atom() && self.neg(n), || {
                    format!("Il needs a negative atom, got {n}")
                })?;
                ensure(n == r, || format!("Il needs [{n}] on the right, got [{r}]"))
            }
            "falseL" => {
                let u = self.unfocused(c, "conclusion")?;
                ensure(u.theta.contains(&IFormula::False), || {
                    "falseL needs false in Θ".into()
                })
            }
            "trueL" => self.theta_rule(|x| (*x == IFormula::True).then(Vec::new)),
            "trueR" => {
                let (_, p) = self.right(c, "conclusion")?;
                ensure(*p == IFormula::True, || "trueR needs focus on true".into())
            }
            "&-L" => {
                let (g, f, r) = self.left(c, "conclusion")?;
                let IFormula::ConjNeg(a1, a2) = f else {
                    return Err(format!("&-L needs focus on a &- formula, got {f}"));
                };
                let (g1, a, r1) = self.left(self.prem(0), "premise")?;
                ensure(g1 == g && r1 == r, || "premise must keep Γ and R".into())?;
                ensure(a == &**a1 || a == &**a2, || {
                    format!("premise focus {a} is neither conjunct")
                })
            }
            "&+L" => self.theta_rule(|x| match x {
                IFormula::ConjPos(a, b) => Some(vec![(**a).clone(), (**b).clone()]),
                _ => None,
            }),
            "&-R" => {
                let u = self.unfocused(c, "conclusion")?;
                let Rhs::Formula(IFormula::ConjNeg(a, b)) = u.rhs else {
                    return Err("&-R needs a &- formula on the right".into());
                };
                self.same_context(&u, 0, Rhs::Formula((**a).clone()))?;
                self.same_context(&u, 1, Rhs::Formula((**b).clone()))
            }
            "&+R" => {
                let (g, f) = self.right(c, "conclusion")?;
                let IFormula::ConjPos(a, b) = f else {
                    return Err(format!("&+R needs focus on a &+ formula, got {f}"));
                };
                for (i, part) in [a, b].into_iter().enumerate() {
                    let (g1, p) = self.right(self.prem(i), "premise")?;
                    ensure(g1 == g && p == &**part, || {
                        format!("premise {i} must focus on {part}")
                    })?;
                }
                Ok(())
            }
            "|L" => {
                let u = self.unfocused(c, "conclusion")?;
                let v0 = self.unfocused(self.prem(0), "left premise")?;
                let v1 = self.unfocused(self.prem(1), "right premise")?;
                let same = v0.gamma == u.gamma
                    && v1.gamma == u.gamma
                    && v0.rhs == u.rhs
                    && v1.rhs == u.rhs;
                ensure(same, || {
                    "premises must keep Γ and the right-hand side".into()
                })?;
                let ok = some_principal(u.theta, |x, rest| match x {
                    IFormula::Disj(a, b) => {
                        multiset_eq(v0.theta, &multiset_sum(rest, &[(**a).clone()]))
                            && multiset_eq(v1.theta, &multiset_sum(rest, &[(**b).clone()]))
                    }
                    _ => false,
                });
                ensure(ok, || "no disjunction in Θ matches the premises".into())
            }
            "|R" => {
                let (g, f) = self.right(c, "conclusion")?;
                let IFormula::Disj(a1, a2) = f else {
                    return Err(format!("|R needs focus on a disjunction, got {f}"));
                };
                let (g1, a) = self.right(self.prem(0), "premise")?;
                ensure(g1 == g, || "premise must keep Γ".into())?;
                ensure(a == &**a1 || a == &**a2, || {
                    format!("premise focus {a} is neither disjunct")
                })
            }
            "->L" => {
                let (g, f, r) = self.left(c, "conclusion")?;
                let IFormula::Impl(a, b) = f else {
                    return Err(format!("->L needs focus on an implication, got {f}"));
                };
                let (g0, a0) = self.right(self.prem(0), "left premise")?;
                ensure(g0 == g && a0 == &**a, || {
                    format!("left premise must be [Γ] -R-> {a}")
                })?;
                let (g1, b1, r1) = self.left(self.prem(1), "right premise")?;
                ensure(g1 == g && b1 == &**b && r1 == r, || {
                    format!("right premise must be [Γ] -{{{b}}}-> [{r}]")
                })
            }
            "->R" => {
                let u = self.unfocused(c, "conclusion")?;
                let Rhs::Formula(IFormula::Impl(a, b)) = u.rhs else {
                    return Err("->R needs an implication on the right".into());
                };
                let v = self.unfocused(self.prem(0), "premise")?;
                ensure(v.gamma == u.gamma, || "premise must keep Γ".into())?;
                ensure(
                    multiset_eq(v.theta, &multiset_sum(u.theta, &[(**a).clone()])),
                    || format!("premise Θ must add {a}"),
                )?;
                ensure(*v.rhs == Rhs::Formula((**b).clone()), || {
                    format!("premise must prove {b}")
                })
            }
            "existsL" => {
                let k = fresh_constant(self.node, &|n| c.mentions(n))?;
                let k = crate::syntax::Term::constant(k);
                self.theta_rule(|x| match x {
                    IFormula::Exists(y, a) => Some(vec![a.subst(y, &k)]),
                    _ => None,
                })
            }
            "existsR" => {
                let (g, f) = self.right(c, "conclusion")?;
                let IFormula::Exists(x, a) = f else {
                    return Err(format!("existsR needs focus on ∃, got {f}"));
                };
                let t = witness(self.node)?;
                let (g1, p) = self.right(self.prem(0), "premise")?;
                ensure(g1 == g && *p == a.subst(x, t), || {
                    format!("premise must focus on the instance at {t}")
                })
            }
            "forallL" => {
                let (g, f, r) = self.left(c, "conclusion")?;
                let IFormula::Forall(x, a) = f else {
                    return Err(format!("forallL needs focus on ∀, got {f}"));
                };
                let t = witness(self.node)?;
                let (g1, p, r1) = self.left(self.prem(0), "premise")?;
                ensure(g1 == g && r1 == r && *p == a.subst(x, t), || {
                    format!("premise must focus on the instance at {t}")
                })
            }
            "forallR" => {
                let u = self.unfocused(c, "conclusion")?;
                let Rhs::Formula(IFormula::Forall(y, a)) = u.rhs else {
                    return Err("forallR needs ∀ on the right".into());
                };
                let k = fresh_constant(self.node, &|n| c.mentions(n))?;
                self.same_context(
                    &u,
                    0,
                    Rhs::Formula(a.subst(y, &crate::syntax::Term::constant(k))),
                )
            }
            "Cut+" | "Cut-" => self.cut_unfocused(),
            "Cut1<-" | "Cut2<-" => self.cut_left(),
            "Cut->" => self.cut_right(),
            other => Err(format!("no LJF rule named {other}")),
        }
    }

    /// Premise `i` is unfocused with the conclusion's Γ and Θ and right side `rhs`.
    fn same_context(&self, u: &Unf, i: usize, rhs: Rhs) -> Check {
        let v = self.unfocused(self.prem(i), "premise")?;
        ensure(v.gamma == u.gamma && multiset_eq(v.theta, u.theta), || {
            format!("premise {i} must keep Γ and Θ")
        })?;
        ensure(*v.rhs == rhs, || {
            format!("premise {i} must have {rhs} on the right")
        })
    }

    /// One-premise left rules acting on a Θ member: `replace` gives the
    /// formulas that take the principal's place.
    fn theta_rule(&self, replace: impl Fn(&IFormula) -> Option<Vec<IFormula>>) -> Check {
        let u = self.unfocused(self.concl(), "conclusion")?;
        let v = self.unfocused(self.prem(0), "premise")?;
        ensure(v.gamma == u.gamma && v.rhs == u.rhs, || {
            "premise must keep Γ and the right-hand side".into()
        })?;
        let ok = some_principal(u.theta, |x, rest| {
            replace(x).is_some_and(|added| multiset_eq(v.theta, &multiset_sum(rest, &added)))
        });
        ensure(ok, || {
            format!("no formula of Θ is decomposed by {}", self.node.rule)
        })
    }

    fn cut_unfocused(&self) -> Check {
        let u = self.unfocused(self.concl(), "conclusion")?;
        let v0 = self.unfocused(self.prem(0), "left premise")?;
        let v1 = self.unfocused(self.prem(1), "right premise")?;
        let Rhs::Formula(cut) = v0.rhs else {
            return Err("left premise of a cut proves an unboxed formula".into());
        };
        ensure(v1.rhs == u.rhs, || {
            "right premise must keep the right-hand side".into()
        })?;
        if self.node.rule == "Cut+" {
            ensure(self.pos(cut), || {
                format!("Cut+ on {cut}, which is not positive")
            })?;
            let rest =
                remove_one(v1.theta, cut).ok_or_else(|| format!("right premise Θ lacks {cut}"))?;
            ensure(set_union(v0.gamma, v1.gamma) == u.gamma, || {
                "conclusion Γ must be the union".into()
            })?;
            ensure(multiset_eq(u.theta, &multiset_sum(v0.theta, &rest)), || {
                "conclusion Θ must be the sum".into()
            })
        } else {
            ensure(self.is_c(cut), || {
                format!("Cut- on {cut}, which is neither negative nor a positive atom")
            })?;
            gamma_union(u.gamma, v0.gamma, v1.gamma, cut)?;
            ensure(
                multiset_eq(u.theta, &multiset_sum(v0.theta, v1.theta)),
                || "conclusion Θ must be the sum".into(),
            )
        }
    }

    fn cut_left(&self) -> Check {
        let (g, b, r) = self.left(self.concl(), "conclusion")?;
        if self.node.rule == "Cut1<-" {
            let (g0, b0, p) = self.left(self.prem(0), "left premise")?;
            ensure(b0 == b, || "left premise must keep the focus".into())?;
            ensure(self.pos(p), || {
                format!("Cut1<- on {p}, which is not positive")
            })?;
            let v = self.unfocused(self.prem(1), "right premise")?;
            ensure(v.theta == [p.clone()], || {
                format!("right premise Θ must be exactly {p}")
            })?;
            ensure(*v.rhs == Rhs::Boxed(r.clone()), || {
                "right premise must keep [R]".into()
            })?;
            ensure(set_union(g0, v.gamma) == g, || {
                "conclusion Γ must be the union".into()
            })
        } else {
            let v = self.unfocused(self.prem(0), "left premise")?;
            let Rhs::Formula(n) = v.rhs else {
                return Err("left premise must prove an unboxed formula".into());
            };
            ensure(v.theta.is_empty(), || "left premise Θ must be empty".into())?;
            ensure(self.neg(n), || {
                format!("Cut2<- on {n}, which is not negative")
            })?;
            let (g1, b1, r1) = self.left(self.prem(1), "right premise")?;
            ensure(b1 == b && r1 == r, || {
                "right premise must keep the focus and [R]".into()
            })?;
            gamma_union(g, v.gamma, g1, n)
        }
    }

    fn cut_right(&self) -> Check {
        let (g, r) = self.right(self.concl(), "conclusion")?;
        let (g0, cut) = self.right(self.prem(0), "left premise")?;
        ensure(self.is_c(cut), || {
            format!("Cut-> on {cut}, which is neither negative nor a positive atom")
        })?;
        let (g1, r1) = self.right(self.prem(1), "right premise")?;
        ensure(r1 == r, || "right premise must keep the focus".into())?;
        gamma_union(g, g0, g1, cut)
    }
}

/// `[cut, Γ']` is `with_cut`; the conclusion Γ must be Γ₀ ∪ Γ'.
fn gamma_union(
    concl: &[IFormula],
    g0: &[IFormula],
    with_cut: &[IFormula],
    cut: &IFormula,
) -> Check {
    ensure(with_cut.contains(cut), || {
        format!("right premise Γ lacks {cut}")
    })?;
    let without = remove_one(with_cut, cut).expect("checked above");
    let ok = set_union(g0, with_cut) == concl || set_union(g0, &without) == concl;
    ensure(ok, || {
        "conclusion Γ must be the union of the premise contexts".into()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_iformula_with, ParseOptions, Polarity};

    fn f(s: &str) -> IFormula {
        parse_iformula_with(s, ParseOptions::internal()).unwrap()
    }

    fn node(rule: &str, s: &str, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree::new(rule, Sequent::Ljf(s.parse().unwrap()), premises)
    }

    #[test]
    fn sequent_text_round_trips() {
        for s in [
            "[a, a -> b] --> [c]",
            "[a], b, c &+ d --> e",
            "[] -{a -> b}-> [c]",
            "[a] -R-> a",
            "[] --> a -> a",
        ] {
            let seq: LjfSequent = s.parse().unwrap();
            assert_eq!(seq.to_string(), s);
        }
    }

    #[test]
    fn gamma_is_a_sorted_set() {
        let seq: LjfSequent = "[b, a, b] -R-> a".parse().unwrap();
        assert_eq!(seq.gamma(), &[f("a"), f("b")]);
    }

    #[test]
    fn initial_rules() {
        let bias = BiasMap::uniform(Polarity::Pos).with("c", Polarity::Neg);
        assert!(check_ljf(&node("Ir", "[a] -R-> a", vec![]), &bias, false).is_ok());
        let err = check_ljf(&node("Ir", "[b] -R-> a", vec![]), &bias, false).unwrap_err();
        assert!(err.reason.contains("in Γ"), "{err}");
        assert!(check_ljf(&node("Il", "[] -{c}-> [c]", vec![]), &bias, false).is_ok());
        assert!(check_ljf(&node("Il", "[] -{a}-> [a]", vec![]), &bias, false).is_err());
    }

    #[test]
    fn arity_and_unknown_rules() {
        let bias = BiasMap::default();
        let leaf = node("Ir", "[a] -R-> a", vec![]);
        let err =
            check_ljf(&node("Ir", "[a] -R-> a", vec![leaf.clone()]), &bias, false).unwrap_err();
        assert!(err.reason.contains("premise"));
        assert!(check_ljf(&node("Zz", "[a] -R-> a", vec![]), &bias, false).is_err());
    }
}
