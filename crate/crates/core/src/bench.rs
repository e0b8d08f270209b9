//! The Fibonacci Horn-clause benchmark: the same clauses proved under an
//! all-positive bias (forward chaining) and an all-negative bias (backward
//! chaining).

use crate::search::{prove_ljf, SearchConfig, Verdict};
use crate::syntax::{Atom, BiasMap, IFormula, Polarity, Term};

/// Largest `n` accepted by [`run_chain_bench`].
pub const MAX_N: usize = 14;

pub const CSV_HEADER: &str = "n,provable,proof_nodes,decides,nodes_expanded";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibInstance {
    pub n: usize,
    pub clauses: Vec<IFormula>,
    pub goal: IFormula,
}

pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn fib_atom(k: usize) -> IFormula {
    IFormula::Atom(Atom::new(
        "fib",
        vec![
            Term::constant(k.to_string()),
            Term::constant(fib(k).to_string()),
        ],
    ))
}

/// Ground clauses `fib(0,0)`, `fib(1,1)` and
/// `fib(k,f) &+ fib(k+1,f') -> fib(k+2,f+f')` for `k < n - 1`.
pub fn gen_fib(n: usize) -> FibInstance {
    let mut clauses = vec![fib_atom(0), fib_atom(1)];
    for k in 0..n.saturating_sub(1) {
        clauses.push(IFormula::imp(
            IFormula::conj_pos(fib_atom(k), fib_atom(k + 1)),
            fib_atom(k + 2),
        ));
    }
    FibInstance {
        n,
        clauses,
        goal: fib_atom(n),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub provable: bool,
    pub verdict: Verdict,
    pub proof_nodes: usize,
    pub decides: usize,
    pub nodes_expanded: usize,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        let provable = match self.verdict {
            Verdict::ResourceLimit => "resource-limit".to_string(),
            _ => self.provable.to_string(),
        };
        format!(
            "{},{},{},{},{}",
            self.n, provable, self.proof_nodes, self.decides, self.nodes_expanded
        )
    }
}

/// Proves `gen_fib(n)` for `n = 0..=max_n` under a uniform atom bias.
pub fn run_chain_bench(max_n: usize, bias: Polarity) -> Result<Vec<BenchRow>, String> {
    if max_n > MAX_N {
        return Err(format!("max n is {MAX_N}, got {max_n}"));
    }
    let bias = BiasMap::uniform(bias);
    let cfg = SearchConfig::default();
    Ok((0..=max_n)
        .map(|n| {
            let inst = gen_fib(n);
            let r = prove_ljf(&inst.clauses, &inst.goal, &bias, &cfg);
            BenchRow {
                n,
                provable: r.proved(),
                verdict: r.verdict,
                proof_nodes: r.stats.proof_nodes,
                decides: r.stats.decides,
                nodes_expanded: r.stats.nodes_expanded,
            }
        })
        .collect())
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances() {
        let zero = gen_fib(0);
        assert_eq!(zero.goal.to_string(), "fib(0,0)");
        assert_eq!(zero.clauses.len(), 2);
        assert_eq!(gen_fib(5).goal.to_string(), "fib(5,5)");
        assert_eq!(gen_fib(10).goal.to_string(), "fib(10,55)");
        assert_eq!(gen_fib(7).clauses.len(), 8);
    }
}
