//! Backtracking focused proof search for LJF and LKF, proof enumeration, and
//! a node-bounded LJ enumerator.

mod lj;
mod ljf;
mod lkf;

use crate::kernel::{Inst, ProofTree, Sequent};
use crate::syntax::Term;

pub use lj::enumerate_lj;
pub use ljf::{enumerate_ljf, prove_ljf, prove_ljf_from};
pub use lkf::{enumerate_lkf, prove_lkf};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChoiceOrder {
    #[default]
    Declaration,
    Reversed,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Bound on decide rules along any one branch.
    pub max_decides: usize,
    pub term_domain: Vec<Term>,
    pub loop_check: bool,
    pub choice_order: ChoiceOrder,
    pub enumerate_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_decides: 64,
            term_domain: Vec::new(),
            loop_check: true,
            choice_order: ChoiceOrder::Declaration,
            enumerate_limit: 1000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Decide nodes (Lf/Rf or Focus) in the returned proof.
    pub decides: usize,
    /// Rule applications attempted during search.
    pub nodes_expanded: usize,
    /// Inference nodes in the returned proof; zero when none is returned.
    pub proof_nodes: usize,
    /// Alternatives that were tried and failed.
    pub backtracks: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proved,
    /// No proof exists within the decide bound, and the bound was never the
    /// reason a branch was cut.
    Exhausted,
    /// No proof found, but some branch ran out of decides.
    ResourceLimit,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub proof: Option<ProofTree>,
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn proved(&self) -> bool {
        self.verdict == Verdict::Proved
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub proofs: Vec<ProofTree>,
    /// The enumeration stopped at `enumerate_limit`; more proofs may exist.
    pub truncated: bool,
    pub stats: SearchStats,
}

/// Number of decide nodes on the branch that has the most of them.
pub fn decide_depth(p: &ProofTree, decide_rules: &[&str]) -> usize {
    let own = usize::from(decide_rules.contains(&p.rule.as_str()));
    own + p
        .premises
        .iter()
        .map(|q| decide_depth(q, decide_rules))
        .max()
        .unwrap_or(0)
}

fn finish_stats(stats: &mut SearchStats, proof: Option<&ProofTree>, decide_rules: &[&str]) {
    if let Some(p) = proof {
        stats.proof_nodes = p.size();
        stats.decides = decide_rules.iter().map(|r| p.count_rule(r)).sum();
    }
}

/// A partially built focus phase: rule nodes whose open leaves are released
/// sequents still to be proved.
#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
pub(crate) enum Frag<H> {
    Node {
        rule: &'static str,
        concl: Sequent,
        inst: Option<Inst>,
        kids: Vec<Frag<H>>,
    },
    Hole(H),
}

impl<H> Frag<H> {
    pub(crate) fn leaf(rule: &'static str, concl: Sequent) -> Self {
        Frag::Node {
            rule,
            concl,
            inst: None,
            kids: Vec::new(),
        }
    }

    pub(crate) fn node(rule: &'static str, concl: Sequent, kids: Vec<Frag<H>>) -> Self {
        Frag::Node {
            rule,
            concl,
            inst: None,
            kids,
        }
    }

    pub(crate) fn with_inst(
        rule: &'static str,
        concl: Sequent,
        inst: Inst,
        kids: Vec<Frag<H>>,
    ) -> Self {
        Frag::Node {
            rule,
            concl,
            inst: Some(inst),
            kids,
        }
    }
}

pub(crate) trait HoleSolver<H> {
    fn want(&self) -> usize;
    fn solve(&mut self, hole: &H, budget: usize) -> Vec<ProofTree>;
}

pub(crate) fn fill<H, S: HoleSolver<H>>(
    solver: &mut S,
    frag: &Frag<H>,
    budget: usize,
) -> Vec<ProofTree> {
    match frag {
        Frag::Hole(h) => solver.solve(h, budget),
        Frag::Node {
            rule,
            concl,
            inst,
            kids,
        } => {
            let mut rows: Vec<Vec<ProofTree>> = vec![Vec::new()];
            for kid in kids {
                let sols = fill(solver, kid, budget);
                if sols.is_empty() {
                    return Vec::new();
                }
                rows = combine(rows, sols, solver.want());
            }
            rows.into_iter()
                .map(|premises| ProofTree {
                    rule: rule.to_string(),
                    conclusion: concl.clone(),
                    premises,
                    inst: inst.clone(),
                })
                .collect()
        }
    }
}

/// Cartesian extension of premise rows, truncated to `want` rows.
pub(crate) fn combine(
    rows: Vec<Vec<ProofTree>>,
    sols: Vec<ProofTree>,
    want: usize,
) -> Vec<Vec<ProofTree>> {
    // Rows and solutions are moved on their last use; proofs can be large.
    let (nrows, nsols) = (rows.len(), sols.len());
    let mut sols: Vec<Option<ProofTree>> = sols.into_iter().map(Some).collect();
    let mut out = Vec::new();
    for (i, row) in rows.into_iter().enumerate() {
        let mut row = Some(row);
        for (j, s) in sols.iter_mut().enumerate() {
            if out.len() >= want {
                return out;
            }
            let mut r = if j + 1 == nsols {
                row.take()
            } else {
                row.clone()
            }
            .expect("row in use");
            r.push(if i + 1 == nrows { s.take() } else { s.clone() }.expect("solution in use"));
            out.push(r);
        }
    }
    out
}

/// Cartesian product of alternative lists, truncated to `want`.
pub(crate) fn product<T: Clone>(lists: Vec<Vec<T>>, want: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::new();
        'outer: for row in &rows {
            for x in &list {
                if next.len() >= want {
                    break 'outer;
                }
                let mut r = row.clone();
                r.push(x.clone());
                next.push(r);
            }
        }
        rows = next;
    }
    rows
}

/// Records a loop-check prune against ancestor `i`.
pub(crate) fn add_prune(prunes: &mut Vec<usize>, i: usize) {
    if !prunes.contains(&i) {
        prunes.push(i);
    }
}

/// Stack positions of every dependency of a memoized failure, or `None` if
/// one of them is no longer an ancestor.
pub(crate) fn positions<A: PartialEq>(ancestors: &[A], deps: &[A]) -> Option<Vec<usize>> {
    deps.iter()
        .map(|d| ancestors.iter().position(|a| a == d))
        .collect()
}
