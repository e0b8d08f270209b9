use std::collections::HashMap;
use std::mem;

use super::{
    add_prune, combine, decide_depth, fill, finish_stats, positions, product, ChoiceOrder,
    Enumeration, Frag, HoleSolver, SearchConfig, SearchResult, SearchStats, Verdict,
};
use crate::kernel::multiset::set_insert;
use crate::kernel::{Inst, LkfSequent, ProofTree, Sequent};
use crate::polarity::cpolarity;
use crate::syntax::{BiasMap, CFormula, Polarity, Term};

const DECIDES: &[&str] = &["Focus"];

/// Searches for an LKF proof of `==> [], gamma` with iterative deepening on
/// the number of Focus rules per branch.
pub fn prove_lkf(gamma: &[CFormula], bias: &BiasMap, cfg: &SearchConfig) -> SearchResult {
    let mut engine = Engine::new(bias, cfg, 1);
    for budget in 0..=cfg.max_decides {
        engine.reset_branch_state();
        let found = engine
            .unfocused(Vec::new(), gamma.to_vec(), budget)
            .into_iter()
            .next();
        if let Some(proof) = found {
            finish_stats(&mut engine.stats, Some(&proof), DECIDES);
            return SearchResult {
                proof: Some(proof),
                verdict: Verdict::Proved,
                stats: engine.stats,
            };
        }
        if !engine.hit_limit {
            return SearchResult {
                proof: None,
                verdict: Verdict::Exhausted,
                stats: engine.stats,
            };
        }
    }
    SearchResult {
        proof: None,
        verdict: Verdict::ResourceLimit,
        stats: engine.stats,
    }
}

/// All LKF proofs of `==> [], gamma` within the decide bound, up to
/// `cfg.enumerate_limit`.
pub fn enumerate_lkf(gamma: &[CFormula], bias: &BiasMap, cfg: &SearchConfig) -> Enumeration {
    let mut engine = Engine::new(bias, cfg, cfg.enumerate_limit.max(1));
    let proofs = engine.unfocused(Vec::new(), gamma.to_vec(), cfg.max_decides);
    let truncated = proofs.len() >= cfg.enumerate_limit;
    let mut stats = engine.stats;
    finish_stats(&mut stats, proofs.first(), DECIDES);
    Enumeration {
        proofs,
        truncated,
        stats,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    theta: Vec<CFormula>,
    eigen: Vec<Term>,
}

enum Memo {
    /// Fails while the listed ancestors are on the branch: at every budget
    /// when `within` is `None`, otherwise (for a failure cut by the budget) at budgets up to
    /// `within.1` in deepening round `within.0`.
    Fail {
        deps: Vec<Vec<CFormula>>,
        within: Option<(usize, usize)>,
    },
    Proof {
        depth: usize,
        proof: ProofTree,
    },
}

struct Engine<'a> {
    bias: &'a BiasMap,
    cfg: &'a SearchConfig,
    want: usize,
    stats: SearchStats,
    hit_limit: bool,
    prunes: Vec<usize>,
    ancestors: Vec<Vec<CFormula>>,
    eigen: Vec<Term>,
    memo: HashMap<Key, Memo>,
    fresh: usize,
    /// Iterative-deepening round; budget-cut failures are only reused within it.
    round: usize,
}

type KFrag = Frag<LkfSequent>;

impl<'a> Engine<'a> {
    fn new(bias: &'a BiasMap, cfg: &'a SearchConfig, want: usize) -> Self {
        Engine {
            bias,
            cfg,
            want,
            stats: SearchStats::default(),
            hit_limit: false,
            prunes: Vec::new(),
            ancestors: Vec::new(),
            eigen: Vec::new(),
            memo: HashMap::new(),
            fresh: 0,
            round: 0,
        }
    }

    fn reset_branch_state(&mut self) {
        self.round += 1;
        self.hit_limit = false;
        self.prunes.clear();
        self.ancestors.clear();
        self.eigen.clear();
    }

    fn pos(&self, f: &CFormula) -> bool {
        cpolarity(f, self.bias) == Polarity::Pos
    }

    fn wrap(
        &self,
        rule: &str,
        concl: &LkfSequent,
        inst: Option<Inst>,
        premises: Vec<ProofTree>,
    ) -> Vec<ProofTree> {
        premises
            .into_iter()
            .map(|p| ProofTree {
                rule: rule.to_string(),
                conclusion: Sequent::Lkf(concl.clone()),
                premises: vec![p],
                inst: inst.clone(),
            })
            .collect()
    }

    /// The asynchronous phase, taking Γ first-in first-out.
    fn unfocused(
        &mut self,
        theta: Vec<CFormula>,
        gamma: Vec<CFormula>,
        budget: usize,
    ) -> Vec<ProofTree> {
        use CFormula::*;
        self.stats.nodes_expanded += 1;
        if gamma.is_empty() {
            return self.border(theta, budget);
        }
        let concl = LkfSequent::Unfocused {
            theta: theta.clone(),
            gamma: gamma.clone(),
        };
        let mut rest = gamma;
        let x = rest.remove(0);
        match x {
            NotFalse => vec![ProofTree::new("absurd", Sequent::Lkf(concl), Vec::new())],
            NotTrue => {
                let found = self.unfocused(theta, rest, budget);
                self.wrap("trivial", &concl, None, found)
            }
            AndNeg(a, b) => {
                let mut left_gamma = rest.clone();
                left_gamma.push(*a);
                let left = self.unfocused(theta.clone(), left_gamma, budget);
                if left.is_empty() {
                    return left;
                }
                rest.push(*b);
                let right = self.unfocused(theta, rest, budget);
                combine(
                    left.into_iter().map(|p| vec![p]).collect(),
                    right,
                    self.want,
                )
                .into_iter()
                .map(|premises| ProofTree::new("&-", Sequent::Lkf(concl.clone()), premises))
                .collect()
            }
            OrNeg(a, b) => {
                rest.push(*a);
                rest.push(*b);
                let found = self.unfocused(theta, rest, budget);
                self.wrap("|-", &concl, None, found)
            }
            Forall(y, a) => {
                let k = Term::constant(format!("_k{}", self.fresh));
                self.fresh += 1;
                rest.push(a.subst(&y, &k));
                self.eigen.push(k.clone());
                let found = self.unfocused(theta, rest, budget);
                self.eigen.pop();
                self.wrap("forall", &concl, Some(Inst::Term(k)), found)
            }
            c => {
                let theta = set_insert(&theta, c);
                let found = self.unfocused(theta, rest, budget);
                self.wrap("Store", &concl, None, found)
            }
        }
    }

    fn border(&mut self, theta: Vec<CFormula>, budget: usize) -> Vec<ProofTree> {
        if self.cfg.loop_check {
            if let Some(i) = self.ancestors.iter().position(|a| *a == theta) {
                add_prune(&mut self.prunes, i);
                self.stats.backtracks += 1;
                return Vec::new();
            }
        }
        let key = Key {
            theta,
            eigen: self.eigen.clone(),
        };
        match self.memo.get(&key) {
            Some(Memo::Fail { deps, within })
                if within.is_none_or(|(r, w)| r == self.round && budget <= w) =>
            {
                if let Some(at) = positions(&self.ancestors, deps) {
                    for i in at {
                        add_prune(&mut self.prunes, i);
                    }
                    self.hit_limit |= within.is_some();
                    return Vec::new();
                }
            }
            Some(Memo::Proof { depth, proof }) if self.want == 1 && *depth <= budget => {
                return vec![proof.clone()];
            }
            _ => {}
        }
        let mut candidates: Vec<CFormula> =
            key.theta.iter().filter(|p| self.pos(p)).cloned().collect();
        if self.cfg.choice_order == ChoiceOrder::Reversed {
            candidates.reverse();
        }
        if candidates.is_empty() {
            self.memo.insert(
                key,
                Memo::Fail {
                    deps: Vec::new(),
                    within: None,
                },
            );
            return Vec::new();
        }
        if budget == 0 {
            self.hit_limit = true;
            return Vec::new();
        }
        let concl = Sequent::Lkf(LkfSequent::Unfocused {
            theta: key.theta.clone(),
            gamma: Vec::new(),
        });
        let saved_hit = mem::replace(&mut self.hit_limit, false);
        let saved_prunes = mem::take(&mut self.prunes);
        let index = self.ancestors.len();
        if self.cfg.loop_check {
            self.ancestors.push(key.theta.clone());
        }
        let mut results = Vec::new();
        'choices: for p in candidates {
            self.stats.nodes_expanded += 1;
            let frags = self.focused(&key.theta, &p);
            if frags.is_empty() {
                self.stats.backtracks += 1;
            }
            for frag in frags {
                let decide = Frag::node("Focus", concl.clone(), vec![frag]);
                let found = fill(self, &decide, budget - 1);
                if found.is_empty() {
                    self.stats.backtracks += 1;
                    continue;
                }
                results.extend(found);
                if results.len() >= self.want {
                    results.truncate(self.want);
                    break 'choices;
                }
            }
        }
        if self.cfg.loop_check {
            self.ancestors.pop();
        }
        let sub_hit = self.hit_limit;
        self.hit_limit = saved_hit || sub_hit;
        let outer: Vec<usize> = mem::replace(&mut self.prunes, saved_prunes)
            .into_iter()
            .filter(|&i| i < index)
            .collect();
        for &i in &outer {
            add_prune(&mut self.prunes, i);
        }
        if results.is_empty() {
            let deps = outer.iter().map(|&i| self.ancestors[i].clone()).collect();
            let within = sub_hit.then_some((self.round, budget));
            self.memo.insert(key, Memo::Fail { deps, within });
        } else if self.want == 1 {
            let depth = decide_depth(&results[0], DECIDES);
            self.memo.insert(
                key,
                Memo::Proof {
                    depth,
                    proof: results[0].clone(),
                },
            );
        }
        results
    }

    /// All ways to run the focused phase on stoup `f`, up to its releases.
    fn focused(&mut self, theta: &[CFormula], f: &CFormula) -> Vec<KFrag> {
        use CFormula::*;
        self.stats.nodes_expanded += 1;
        let concl = Sequent::Lkf(LkfSequent::Focused {
            theta: theta.to_vec(),
            stoup: f.clone(),
        });
        if !self.pos(f) {
            let hole = LkfSequent::Unfocused {
                theta: theta.to_vec(),
                gamma: vec![f.clone()],
            };
            return vec![Frag::node("Release", concl, vec![Frag::Hole(hole)])];
        }
        match f {
            PosLit(_) | NegLit(_) => {
                let rule = if matches!(f, PosLit(_)) { "ID+" } else { "ID-" };
                if theta.contains(&f.negate()) {
                    vec![Frag::leaf(rule, concl)]
                } else {
                    Vec::new()
                }
            }
            True => vec![Frag::leaf("indeed", concl)],
            AndPos(a, b) => {
                let left = self.focused(theta, a);
                if left.is_empty() {
                    return left;
                }
                let right = self.focused(theta, b);
                product(vec![left, right], usize::MAX)
                    .into_iter()
                    .map(|kids| Frag::node("&+", concl.clone(), kids))
                    .collect()
            }
            OrPos(a, b) => {
                let mut out: Vec<KFrag> = self
                    .focused(theta, a)
                    .into_iter()
                    .map(|k| Frag::node("|+", concl.clone(), vec![k]))
                    .collect();
                out.extend(
                    self.focused(theta, b)
                        .into_iter()
                        .map(|k| Frag::node("|+", concl.clone(), vec![k])),
                );
                out
            }
            Exists(x, a) => {
                let domain: Vec<Term> = self
                    .cfg
                    .term_domain
                    .iter()
                    .chain(self.eigen.iter())
                    .cloned()
                    .collect();
                let mut out = Vec::new();
                for t in domain {
                    for k in self.focused(theta, &a.subst(x, &t)) {
                        out.push(Frag::with_inst(
                            "exists",
                            concl.clone(),
                            Inst::Term(t.clone()),
                            vec![k],
                        ));
                    }
                }
                out
            }
            _ => Vec::new(),
        }
    }
}

impl HoleSolver<LkfSequent> for Engine<'_> {
    fn want(&self) -> usize {
        self.want
    }

    fn solve(&mut self, hole: &LkfSequent, budget: usize) -> Vec<ProofTree> {
        match hole {
            LkfSequent::Unfocused { theta, gamma } => {
                self.unfocused(theta.clone(), gamma.clone(), budget)
            }
            LkfSequent::Focused { theta, stoup } => {
                let frags = self.focused(theta, stoup);
                let mut out = Vec::new();
                for frag in frags {
                    out.extend(fill(self, &frag, budget));
                    if out.len() >= self.want {
                        out.truncate(self.want);
                        break;
                    }
                }
                out
            }
        }
    }
}
