use std::collections::HashMap;

use crate::kernel::{Inst, LjSequent, ProofTree, Sequent};
use crate::syntax::IFormula;

/// Every LJ proof of `seq` with at most `max_nodes` inference nodes, in a
/// deterministic order. Left rules retain their principal formula, so the
/// node bound is what keeps the enumeration finite.
pub fn enumerate_lj(seq: &LjSequent, max_nodes: usize) -> Vec<ProofTree> {
    Enumerator::default().proofs(seq, max_nodes)
}

#[derive(Default)]
struct Enumerator {
    memo: HashMap<(LjSequent, usize), Vec<ProofTree>>,
}

impl Enumerator {
    fn proofs(&mut self, s: &LjSequent, n: usize) -> Vec<ProofTree> {
        if n == 0 {
            return Vec::new();
        }
        let key = (s.clone(), n);
        if let Some(found) = self.memo.get(&key) {
            return found.clone();
        }
        let out = self.expand(s, n);
        self.memo.insert(key, out.clone());
        out
    }

    fn expand(&mut self, s: &LjSequent, n: usize) -> Vec<ProofTree> {
        use IFormula::*;
        let node = |rule: &str, premises: Vec<ProofTree>| {
            ProofTree::new(rule, Sequent::Lj(s.clone()), premises)
        };
        let mut out = Vec::new();
        if s.rhs.is_atom() && s.gamma.contains(&s.rhs) {
            out.push(node("Ax", Vec::new()));
        }
        if s.gamma.contains(&False) {
            out.push(node("falseL", Vec::new()));
        }
        match &s.rhs {
            True => out.push(node("trueR", Vec::new())),
            ConjNeg(a, b) | ConjPos(a, b) => {
                let left = LjSequent::new(&s.gamma, (**a).clone());
                let right = LjSequent::new(&s.gamma, (**b).clone());
                for premises in self.pairs(&left, &right, n - 1) {
                    out.push(node("andR", premises));
                }
            }
            Disj(a, b) => {
                for (rule, part) in [("orR1", a), ("orR2", b)] {
                    for p in self.proofs(&LjSequent::new(&s.gamma, (**part).clone()), n - 1) {
                        out.push(node(rule, vec![p]));
                    }
                }
            }
            Impl(a, b) => {
                for p in self.proofs(&s.extend(a, (**b).clone()), n - 1) {
                    out.push(node("impR", vec![p]));
                }
            }
            _ => {}
        }
        let mut principals = s.gamma.clone();
        principals.dedup();
        for f in principals {
            let with_inst = |t: ProofTree| t.with_inst(Inst::Principal(f.clone()));
            match &f {
                ConjNeg(a, b) | ConjPos(a, b) => {
                    for (rule, part) in [("andL1", a), ("andL2", b)] {
                        for p in self.proofs(&s.extend(part, s.rhs.clone()), n - 1) {
                            out.push(with_inst(node(rule, vec![p])));
                        }
                    }
                }
                Disj(a, b) => {
                    let left = s.extend(a, s.rhs.clone());
                    let right = s.extend(b, s.rhs.clone());
                    for premises in self.pairs(&left, &right, n - 1) {
                        out.push(with_inst(node("orL", premises)));
                    }
                }
                Impl(a, b) => {
                    let left = LjSequent::new(&s.gamma, (**a).clone());
                    let right = s.extend(b, s.rhs.clone());
                    for premises in self.pairs(&left, &right, n - 1) {
                        out.push(with_inst(node("impL", premises)));
                    }
                }
                _ => {}
            }
        }
        out
    }

    /// Proof pairs for two premises with at most `n` nodes between them.
    fn pairs(&mut self, left: &LjSequent, right: &LjSequent, n: usize) -> Vec<Vec<ProofTree>> {
        if n < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for l in self.proofs(left, n - 1) {
            for r in self.proofs(right, n - l.size()) {
                out.push(vec![l.clone(), r]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_lj;

    #[test]
    fn conjunction_projection_has_two_small_proofs() {
        let s: LjSequent = "a & b, b & a ==> a".parse().unwrap();
        let proofs = enumerate_lj(&s, 2);
        assert_eq!(proofs.len(), 2);
        for p in &proofs {
            assert_eq!(check_lj(p), Ok(()));
        }
    }
}
