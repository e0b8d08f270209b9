use std::collections::HashMap;
use std::mem;

use super::{
    add_prune, combine, decide_depth, fill, finish_stats, positions, product, ChoiceOrder,
    Enumeration, Frag, HoleSolver, SearchConfig, SearchResult, SearchStats, Verdict,
};
use crate::kernel::multiset::set_insert;
use crate::kernel::{Inst, LjfSequent, ProofTree, Rhs, Sequent};
use crate::polarity::{is_negative, is_positive};
use crate::syntax::{BiasMap, IFormula, Term};

const DECIDES: &[&str] = &["Lf", "Rf"];

/// Searches for an LJF proof of `[], gamma --> goal`, deepening the decide
/// bound one step at a time so the first proof found is decide-minimal.
pub fn prove_ljf(
    gamma: &[IFormula],
    goal: &IFormula,
    bias: &BiasMap,
    cfg: &SearchConfig,
) -> SearchResult {
    prove_ljf_from(&LjfSequent::end_sequent(gamma, goal), bias, cfg)
}

/// As [`prove_ljf`], from an arbitrary LJF sequent.
pub fn prove_ljf_from(seq: &LjfSequent, bias: &BiasMap, cfg: &SearchConfig) -> SearchResult {
    let mut engine = Engine::new(bias, cfg, 1);
    for budget in 0..=cfg.max_decides {
        engine.reset_branch_state();
        let found = engine.solve_any(seq, budget).into_iter().next();
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

/// All LJF proofs of `[], gamma --> goal` with at most `cfg.max_decides`
/// decides on every branch, up to `cfg.enumerate_limit`, in search order.
pub fn enumerate_ljf(
    gamma: &[IFormula],
    goal: &IFormula,
    bias: &BiasMap,
    cfg: &SearchConfig,
) -> Enumeration {
    let mut engine = Engine::new(bias, cfg, cfg.enumerate_limit.max(1));
    let seq = LjfSequent::end_sequent(gamma, goal);
    let proofs = engine.solve_any(&seq, cfg.max_decides);
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
    gamma: Vec<IFormula>,
    r: IFormula,
    eigen: Vec<Term>,
}

/// `(round, budget)` of a budget-cut failure; `None` for a clean one.
type Bound = Option<(usize, usize)>;

type Failed = (Vec<IFormula>, Bound);

enum Memo {
    /// Fails while the listed ancestors are on the branch (the loop check
    /// pruned against them): at every budget when `within` is `None`,
    /// otherwise (for a failure cut by the budget) at budgets up to
    /// `within.1` in deepening round `within.0`.
    Fail {
        deps: Vec<(Vec<IFormula>, IFormula)>,
        within: Bound,
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
    /// Ancestor indices that loop-check prunes pointed at.
    prunes: Vec<usize>,
    ancestors: Vec<(Vec<IFormula>, IFormula)>,
    eigen: Vec<Term>,
    memo: HashMap<Key, Memo>,
    /// Γ sets whose failure did not depend on the branch, per
    /// (R, eigen-constants), with the same bound as `Memo::Fail::within`: any
    /// subset fails too, by weakening.
    unprovable: HashMap<(IFormula, Vec<Term>), Vec<Failed>>,
    fresh: usize,
    /// Iterative-deepening round; budget-cut failures are only reused within it.
    round: usize,
}

type LFrag = Frag<LjfSequent>;

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
            unprovable: HashMap::new(),
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

    fn fresh_constant(&mut self) -> Term {
        let k = Term::constant(format!("_k{}", self.fresh));
        self.fresh += 1;
        k
    }

    fn domain(&self) -> Vec<Term> {
        self.cfg
            .term_domain
            .iter()
            .chain(self.eigen.iter())
            .cloned()
            .collect()
    }

    fn solve_any(&mut self, seq: &LjfSequent, budget: usize) -> Vec<ProofTree> {
        match seq {
            LjfSequent::Unfocused { gamma, theta, rhs } => {
                self.unfocused(gamma.clone(), theta.clone(), rhs.clone(), budget)
            }
            LjfSequent::LeftFocus { gamma, focus, rhs } => {
                let frags = self.focus_left(gamma, focus, rhs);
                self.solve_frags(frags, budget)
            }
            LjfSequent::RightFocus { gamma, focus } => {
                let frags = self.focus_right(gamma, focus);
                self.solve_frags(frags, budget)
            }
        }
    }

    fn solve_frags(&mut self, frags: Vec<LFrag>, budget: usize) -> Vec<ProofTree> {
        let mut out = Vec::new();
        for frag in frags {
            let found = fill(self, &frag, budget);
            if found.is_empty() {
                self.stats.backtracks += 1;
            }
            out.extend(found);
            if out.len() >= self.want {
                out.truncate(self.want);
                break;
            }
        }
        out
    }

    fn wrap(
        &self,
        rule: &str,
        concl: &LjfSequent,
        inst: Option<Inst>,
        premises: Vec<ProofTree>,
    ) -> Vec<ProofTree> {
        premises
            .into_iter()
            .map(|p| ProofTree {
                rule: rule.to_string(),
                conclusion: Sequent::Ljf(concl.clone()),
                premises: vec![p],
                inst: inst.clone(),
            })
            .collect()
    }

    fn wrap2(
        &self,
        rule: &str,
        concl: &LjfSequent,
        left: Vec<ProofTree>,
        right: Vec<ProofTree>,
    ) -> Vec<ProofTree> {
        let rows = combine(
            left.into_iter().map(|p| vec![p]).collect(),
            right,
            self.want,
        );
        rows.into_iter()
            .map(|premises| ProofTree::new(rule, Sequent::Ljf(concl.clone()), premises))
            .collect()
    }

    /// The asynchronous phase: right-hand side first, then Θ first-in first-out.
    fn unfocused(
        &mut self,
        gamma: Vec<IFormula>,
        theta: Vec<IFormula>,
        rhs: Rhs,
        budget: usize,
    ) -> Vec<ProofTree> {
        use IFormula::*;
        self.stats.nodes_expanded += 1;
        let concl = LjfSequent::Unfocused {
            gamma: gamma.clone(),
            theta: theta.clone(),
            rhs: rhs.clone(),
        };
        match rhs {
            Rhs::Formula(r) => match r {
                ConjNeg(a, b) => {
                    let left =
                        self.unfocused(gamma.clone(), theta.clone(), Rhs::Formula(*a), budget);
                    if left.is_empty() {
                        return left;
                    }
                    let right = self.unfocused(gamma, theta, Rhs::Formula(*b), budget);
                    self.wrap2("&-R", &concl, left, right)
                }
                Impl(a, b) => {
                    let mut theta = theta;
                    theta.push(*a);
                    let found = self.unfocused(gamma, theta, Rhs::Formula(*b), budget);
                    self.wrap("->R", &concl, None, found)
                }
                Forall(x, a) => {
                    let k = self.fresh_constant();
                    self.eigen.push(k.clone());
                    let found = self.unfocused(gamma, theta, Rhs::Formula(a.subst(&x, &k)), budget);
                    self.eigen.pop();
                    self.wrap("forallR", &concl, Some(Inst::Term(k)), found)
                }
                d => {
                    let found = self.unfocused(gamma, theta, Rhs::Boxed(d), budget);
                    self.wrap("[]r", &concl, None, found)
                }
            },
            Rhs::Boxed(r) => {
                if theta.is_empty() {
                    return self.border(gamma, r, budget);
                }
                let mut rest = theta;
                let x = rest.remove(0);
                match x {
                    False => vec![ProofTree::new("falseL", Sequent::Ljf(concl), Vec::new())],
                    True => {
                        let found = self.unfocused(gamma, rest, Rhs::Boxed(r), budget);
                        self.wrap("trueL", &concl, None, found)
                    }
                    ConjPos(a, b) => {
                        rest.push(*a);
                        rest.push(*b);
                        let found = self.unfocused(gamma, rest, Rhs::Boxed(r), budget);
                        self.wrap("&+L", &concl, None, found)
                    }
                    Disj(a, b) => {
                        let mut left_theta = rest.clone();
                        left_theta.push(*a);
                        let left = self.unfocused(
                            gamma.clone(),
                            left_theta,
                            Rhs::Boxed(r.clone()),
                            budget,
                        );
                        if left.is_empty() {
                            return left;
                        }
                        rest.push(*b);
                        let right = self.unfocused(gamma, rest, Rhs::Boxed(r), budget);
                        self.wrap2("|L", &concl, left, right)
                    }
                    Exists(y, a) => {
                        let k = self.fresh_constant();
                        rest.push(a.subst(&y, &k));
                        self.eigen.push(k.clone());
                        let found = self.unfocused(gamma, rest, Rhs::Boxed(r), budget);
                        self.eigen.pop();
                        self.wrap("existsL", &concl, Some(Inst::Term(k)), found)
                    }
                    c => {
                        let gamma = set_insert(&gamma, c);
                        let found = self.unfocused(gamma, rest, Rhs::Boxed(r), budget);
                        self.wrap("[]l", &concl, None, found)
                    }
                }
            }
        }
    }

    fn decide_candidates(&self, gamma: &[IFormula], r: &IFormula) -> Vec<(&'static str, IFormula)> {
        let mut out = Vec::new();
        if is_positive(r, self.bias) {
            out.push(("Rf", r.clone()));
        }
        let mut left: Vec<(&'static str, IFormula)> = gamma
            .iter()
            .filter(|g| is_negative(g, self.bias))
            .map(|g| ("Lf", g.clone()))
            .collect();
        if self.cfg.choice_order == ChoiceOrder::Reversed {
            left.reverse();
        }
        out.extend(left);
        out
    }

    fn border(&mut self, gamma: Vec<IFormula>, r: IFormula, budget: usize) -> Vec<ProofTree> {
        let anc = (gamma, r);
        if self.cfg.loop_check {
            if let Some(i) = self.ancestors.iter().position(|a| *a == anc) {
                add_prune(&mut self.prunes, i);
                self.stats.backtracks += 1;
                return Vec::new();
            }
        }
        let (gamma, r) = anc;
        let key = Key {
            gamma,
            r,
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
        if self.subsumed(&key, budget) {
            return Vec::new();
        }
        let candidates = self.decide_candidates(&key.gamma, &key.r);
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
        let concl = Sequent::Ljf(LjfSequent::border(&key.gamma, key.r.clone()));
        let saved_hit = mem::replace(&mut self.hit_limit, false);
        let saved_prunes = mem::take(&mut self.prunes);
        let index = self.ancestors.len();
        if self.cfg.loop_check {
            self.ancestors.push((key.gamma.clone(), key.r.clone()));
        }
        let mut results = Vec::new();
        'choices: for (rule, f) in candidates {
            self.stats.nodes_expanded += 1;
            let frags = if rule == "Rf" {
                self.focus_right(&key.gamma, &f)
            } else {
                self.focus_left(&key.gamma, &f, &key.r)
            };
            if frags.is_empty() {
                self.stats.backtracks += 1;
            }
            for frag in frags {
                let decide = Frag::node(rule, concl.clone(), vec![frag]);
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
            let within = sub_hit.then_some((self.round, budget));
            if outer.is_empty() {
                self.record_unprovable(&key, within);
            }
            let deps = outer.iter().map(|&i| self.ancestors[i].clone()).collect();
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

    /// Whether a recorded failure covers `key` at `budget`; reusing a
    /// budget-cut failure marks the search as cut.
    fn subsumed(&mut self, key: &Key, budget: usize) -> bool {
        let round = self.round;
        let covers = |w: &Bound| w.is_none_or(|(r, b)| r == round && budget <= b);
        let hit = self
            .unprovable
            .get(&(key.r.clone(), key.eigen.clone()))
            .and_then(|sets| {
                sets.iter()
                    .find(|(big, w)| covers(w) && is_subset(&key.gamma, big))
            });
        match hit {
            Some((_, w)) => {
                self.hit_limit |= w.is_some();
                true
            }
            None => false,
        }
    }

    fn record_unprovable(&mut self, key: &Key, within: Bound) {
        let round = self.round;
        // `a` is at least as strong as `b`
        let stronger = |a: &Bound, b: &Bound| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((ra, ba)), Some((rb, bb))) => ra == rb && ba >= bb,
        };
        let sets = self
            .unprovable
            .entry((key.r.clone(), key.eigen.clone()))
            .or_default();
        sets.retain(|(_, w)| w.is_none_or(|(r, _)| r == round));
        if sets
            .iter()
            .any(|(big, w)| stronger(w, &within) && is_subset(&key.gamma, big))
        {
            return;
        }
        sets.retain(|(small, w)| !(stronger(&within, w) && is_subset(small, &key.gamma)));
        sets.push((key.gamma.clone(), within));
    }

    /// All ways to run the right-focus phase on `f`, up to its releases.
    fn focus_right(&mut self, gamma: &[IFormula], f: &IFormula) -> Vec<LFrag> {
        use IFormula::*;
        self.stats.nodes_expanded += 1;
        let concl = Sequent::Ljf(LjfSequent::RightFocus {
            gamma: gamma.to_vec(),
            focus: f.clone(),
        });
        if is_negative(f, self.bias) {
            let hole = LjfSequent::Unfocused {
                gamma: gamma.to_vec(),
                theta: Vec::new(),
                rhs: Rhs::Formula(f.clone()),
            };
            return vec![Frag::node("Rr", concl, vec![Frag::Hole(hole)])];
        }
        match f {
            Atom(_) => {
                if gamma.contains(f) {
                    vec![Frag::leaf("Ir", concl)]
                } else {
                    Vec::new()
                }
            }
            True => vec![Frag::leaf("trueR", concl)],
            ConjPos(a, b) => {
                let left = self.focus_right(gamma, a);
                if left.is_empty() {
                    return left;
                }
                let right = self.focus_right(gamma, b);
                product(vec![left, right], usize::MAX)
                    .into_iter()
                    .map(|kids| Frag::node("&+R", concl.clone(), kids))
                    .collect()
            }
            Disj(a, b) => {
                let mut out: Vec<LFrag> = self
                    .focus_right(gamma, a)
                    .into_iter()
                    .map(|k| Frag::node("|R", concl.clone(), vec![k]))
                    .collect();
                out.extend(
                    self.focus_right(gamma, b)
                        .into_iter()
                        .map(|k| Frag::node("|R", concl.clone(), vec![k])),
                );
                out
            }
            Exists(x, a) => {
                let mut out = Vec::new();
                for t in self.domain() {
                    for k in self.focus_right(gamma, &a.subst(x, &t)) {
                        out.push(Frag::with_inst(
                            "existsR",
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

    /// All ways to run the left-focus phase on `f` against `[r]`.
    fn focus_left(&mut self, gamma: &[IFormula], f: &IFormula, r: &IFormula) -> Vec<LFrag> {
        use IFormula::*;
        self.stats.nodes_expanded += 1;
        let concl = Sequent::Ljf(LjfSequent::LeftFocus {
            gamma: gamma.to_vec(),
            focus: f.clone(),
            rhs: r.clone(),
        });
        if is_positive(f, self.bias) {
            let hole = LjfSequent::Unfocused {
                gamma: gamma.to_vec(),
                theta: vec![f.clone()],
                rhs: Rhs::Boxed(r.clone()),
            };
            return vec![Frag::node("Rl", concl, vec![Frag::Hole(hole)])];
        }
        match f {
            Atom(_) => {
                if f == r {
                    vec![Frag::leaf("Il", concl)]
                } else {
                    Vec::new()
                }
            }
            ConjNeg(a, b) => {
                let mut out: Vec<LFrag> = self
                    .focus_left(gamma, a, r)
                    .into_iter()
                    .map(|k| Frag::node("&-L", concl.clone(), vec![k]))
                    .collect();
                out.extend(
                    self.focus_left(gamma, b, r)
                        .into_iter()
                        .map(|k| Frag::node("&-L", concl.clone(), vec![k])),
                );
                out
            }
            Impl(a, b) => {
                let tail = self.focus_left(gamma, b, r);
                if tail.is_empty() {
                    return tail;
                }
                let head = self.focus_right(gamma, a);
                product(vec![head, tail], usize::MAX)
                    .into_iter()
                    .map(|kids| Frag::node("->L", concl.clone(), kids))
                    .collect()
            }
            Forall(x, a) => {
                let mut out = Vec::new();
                for t in self.domain() {
                    for k in self.focus_left(gamma, &a.subst(x, &t), r) {
                        out.push(Frag::with_inst(
                            "forallL",
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

impl HoleSolver<LjfSequent> for Engine<'_> {
    fn want(&self) -> usize {
        self.want
    }

    fn solve(&mut self, hole: &LjfSequent, budget: usize) -> Vec<ProofTree> {
        self.solve_any(hole, budget)
    }
}

/// Subset test on sorted, duplicate-free vectors.
fn is_subset<T: Ord>(small: &[T], big: &[T]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}
