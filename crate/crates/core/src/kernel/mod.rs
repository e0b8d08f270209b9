//! Proof objects, the four sequent families and their rule-by-rule checkers.

mod lj;
mod ljf;
mod lkf;
mod llf;
mod map;
pub(crate) mod multiset;
mod render;
mod seqparse;

use std::fmt;

use thiserror::Error;

use crate::syntax::{IFormula, Term};

pub use lj::{check_lj, LjSequent, LJ_RULES};
pub use ljf::{check_ljf, LjfSequent, Rhs, LJF_CUT_RULES, LJF_RULES};
pub use lkf::{check_lkf, LkfSequent, LKF_RULES};
pub use llf::{check_llf, LlfSequent, LLF_RULES};
pub use map::{lj_sequent_to_llf, map_lj_to_llf, MapError};
pub use render::{from_json, render, to_json, Format, JsonError, LATEX_PREAMBLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Calculus {
    Ljf,
    Lkf,
    Llf,
    Lj,
}

impl Calculus {
    pub fn name(self) -> &'static str {
        match self {
            Calculus::Ljf => "ljf",
            Calculus::Lkf => "lkf",
            Calculus::Llf => "llf",
            Calculus::Lj => "lj",
        }
    }

    pub fn from_name(name: &str) -> Option<Calculus> {
        match name {
            "ljf" => Some(Calculus::Ljf),
            "lkf" => Some(Calculus::Lkf),
            "llf" => Some(Calculus::Llf),
            "lj" => Some(Calculus::Lj),
            _ => None,
        }
    }

    /// Rule names with their premise counts (cut-free LJF).
    pub fn rules(self) -> &'static [(&'static str, usize)] {
        match self {
            Calculus::Ljf => LJF_RULES,
            Calculus::Lkf => LKF_RULES,
            Calculus::Llf => LLF_RULES,
            Calculus::Lj => LJ_RULES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sequent {
    Ljf(LjfSequent),
    Lkf(LkfSequent),
    Llf(LlfSequent),
    Lj(LjSequent),
}

impl Sequent {
    pub fn calculus(&self) -> Calculus {
        match self {
            Sequent::Ljf(_) => Calculus::Ljf,
            Sequent::Lkf(_) => Calculus::Lkf,
            Sequent::Llf(_) => Calculus::Llf,
            Sequent::Lj(_) => Calculus::Lj,
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequent::Ljf(s) => s.fmt(f),
            Sequent::Lkf(s) => s.fmt(f),
            Sequent::Llf(s) => s.fmt(f),
            Sequent::Lj(s) => s.fmt(f),
        }
    }
}

/// Extra data a rule instance needs beyond its conclusion and premises.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Inst {
    /// Witness of ∃R/∀L, or the fresh eigen-constant of ∀R/∃L.
    Term(Term),
    /// Principal formula of an LJ left rule.
    Principal(IFormula),
}

impl fmt::Display for Inst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inst::Term(t) => write!(f, "term:{t}"),
            Inst::Principal(p) => write!(f, "formula:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub rule: String,
    pub conclusion: Sequent,
    pub premises: Vec<ProofTree>,
    pub inst: Option<Inst>,
}

impl ProofTree {
    pub fn new(rule: impl Into<String>, conclusion: Sequent, premises: Vec<ProofTree>) -> Self {
        ProofTree {
            rule: rule.into(),
            conclusion,
            premises,
            inst: None,
        }
    }

    pub fn with_inst(mut self, inst: Inst) -> Self {
        self.inst = Some(inst);
        self
    }

    pub fn calculus(&self) -> Calculus {
        self.conclusion.calculus()
    }

    /// Total number of inference nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn count_rule(&self, rule: &str) -> usize {
        usize::from(self.rule == rule)
            + self
                .premises
                .iter()
                .map(|p| p.count_rule(rule))
                .sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(ProofTree::height)
            .max()
            .unwrap_or(0)
    }

    /// Pre-order traversal with the child-index path of each node.
    pub fn walk<'a>(&'a self, visit: &mut dyn FnMut(&[usize], &'a ProofTree)) {
        fn go<'a>(
            t: &'a ProofTree,
            path: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[usize], &'a ProofTree),
        ) {
            visit(path, t);
            for (i, p) in t.premises.iter().enumerate() {
                path.push(i);
                go(p, path, visit);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), visit)
    }

    pub fn node_at(&self, path: &[usize]) -> Option<&ProofTree> {
        path.iter().try_fold(self, |t, &i| t.premises.get(i))
    }

    pub fn node_at_mut(&mut self, path: &[usize]) -> Option<&mut ProofTree> {
        path.iter().try_fold(self, |t, &i| t.premises.get_mut(i))
    }

    /// Paths of every node, in pre-order.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.walk(&mut |p, _| out.push(p.to_vec()));
        out
    }
}

/// Why a proof tree was rejected, and where.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{rule} at {path:?}: {reason}")]
pub struct Violation {
    pub path: Vec<usize>,
    pub rule: String,
    pub reason: String,
}

pub(crate) type Check = Result<(), String>;

pub(crate) fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

/// Runs `node_check` on every node, reporting the first failing path.
pub(crate) fn check_tree(
    tree: &ProofTree,
    calculus: Calculus,
    rules: &[(&str, usize)],
    node_check: &dyn Fn(&ProofTree) -> Check,
) -> Result<(), Violation> {
    let mut failure = None;
    tree.walk(&mut |path, node| {
        if failure.is_some() {
            return;
        }
        let result = if node.calculus() != calculus {
            Err(format!(
                "sequent belongs to {} inside a {} proof",
                node.calculus().name(),
                calculus.name()
            ))
        } else if node.premises.iter().any(|p| p.calculus() != calculus) {
            Err("premise from a different calculus".to_string())
        } else {
            let arity = rules.iter().find(|(r, _)| *r == node.rule).map(|(_, n)| *n);
            match arity {
                None => Err(format!("unknown {} rule", calculus.name())),
                Some(n) if n != node.premises.len() => Err(format!(
                    "rule takes {n} premise(s), node has {}",
                    node.premises.len()
                )),
                Some(_) => node_check(node),
            }
        };
        if let Err(reason) = result {
            failure = Some(Violation {
                path: path.to_vec(),
                rule: node.rule.clone(),
                reason,
            });
        }
    });
    failure.map_or(Ok(()), Err)
}

/// The eigen-constant recorded at `node`, which must not satisfy `mentioned`.
pub(crate) fn fresh_constant<'a>(
    node: &'a ProofTree,
    mentioned: &dyn Fn(&str) -> bool,
) -> Result<&'a str, String> {
    match &node.inst {
        Some(Inst::Term(Term::App(c, args))) if args.is_empty() => {
            if mentioned(c) {
                Err(format!("eigen-constant {c} occurs in the conclusion"))
            } else {
                Ok(c)
            }
        }
        _ => Err("missing eigen-constant".to_string()),
    }
}

pub(crate) fn witness(node: &ProofTree) -> Result<&Term, String> {
    match &node.inst {
        Some(Inst::Term(t)) if t.is_ground() => Ok(t),
        Some(Inst::Term(_)) => Err("witness term is not ground".to_string()),
        _ => Err("missing witness term".to_string()),
    }
}
