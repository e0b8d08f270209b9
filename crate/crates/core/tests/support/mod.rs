#![allow(dead_code)]

pub mod tables;

use focalis::kernel::{check_lj, check_ljf, check_lkf, check_llf, ProofTree};
use focalis::syntax::{BiasMap, IFormula};

/// Fibonacci numbers with fib(1) = fib(2) = 1.
pub fn fib(n: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Swaps every ∧⁺ with ∧⁻.
pub fn flip_conj(f: &IFormula) -> IFormula {
    use IFormula::*;
    match f {
        ConjPos(a, b) => IFormula::conj_neg(flip_conj(a), flip_conj(b)),
        ConjNeg(a, b) => IFormula::conj_pos(flip_conj(a), flip_conj(b)),
        Disj(a, b) => IFormula::disj(flip_conj(a), flip_conj(b)),
        Impl(a, b) => IFormula::imp(flip_conj(a), flip_conj(b)),
        Exists(x, a) => IFormula::exists(x.clone(), flip_conj(a)),
        Forall(x, a) => IFormula::forall(x.clone(), flip_conj(a)),
        Atom(_) | True | False => f.clone(),
    }
}

/// Runs the checker matching the proof's calculus (cut-free for LJF).
pub fn check_any(p: &ProofTree, bias: &BiasMap) -> bool {
    use focalis::kernel::Calculus::*;
    match p.calculus() {
        Ljf => check_ljf(p, bias, false).is_ok(),
        Lkf => check_lkf(p, bias).is_ok(),
        Llf => check_llf(p, bias).is_ok(),
        Lj => check_lj(p).is_ok(),
    }
}

/// Every single-node mutation of `p`: each node relabelled to every other
/// rule of its calculus, and each premise deleted in turn.
pub fn mutations(p: &ProofTree) -> Vec<ProofTree> {
    let rules = p.calculus().rules();
    let mut out = Vec::new();
    for path in p.paths() {
        let node = p.node_at(&path).unwrap();
        for (name, _) in rules {
            if *name != node.rule {
                let mut m = p.clone();
                m.node_at_mut(&path).unwrap().rule = name.to_string();
                out.push(m);
            }
        }
        for i in 0..node.premises.len() {
            let mut m = p.clone();
            m.node_at_mut(&path).unwrap().premises.remove(i);
            out.push(m);
        }
    }
    out
}
