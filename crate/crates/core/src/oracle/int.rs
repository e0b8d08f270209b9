use std::collections::HashMap;
use std::rc::Rc;

use crate::error::FragmentError;
use crate::syntax::IFormula;

/// Decides intuitionistic provability of `gamma ⊢ goal` with the
/// contraction-free calculus G4ip. Both conjunctions read as plain ∧.
pub fn oracle_int(gamma: &[IFormula], goal: &IFormula) -> Result<bool, FragmentError> {
    let hyps = gamma.iter().map(lower).collect::<Result<Vec<_>, _>>()?;
    let goal = lower(goal)?;
    Ok(G4::default().prove(canon(hyps), goal))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum P {
    Atom(Rc<str>),
    Bot,
    Top,
    And(Rc<P>, Rc<P>),
    Or(Rc<P>, Rc<P>),
    Imp(Rc<P>, Rc<P>),
}

fn lower(f: &IFormula) -> Result<P, FragmentError> {
    use IFormula::*;
    let bin = |a: &IFormula, b: &IFormula| -> Result<(Rc<P>, Rc<P>), FragmentError> {
        Ok((Rc::new(lower(a)?), Rc::new(lower(b)?)))
    };
    Ok(match f {
        Atom(a) if a.args.is_empty() => P::Atom(a.name.as_str().into()),
        True => P::Top,
        False => P::Bot,
        ConjPos(a, b) | ConjNeg(a, b) => {
            let (a, b) = bin(a, b)?;
            P::And(a, b)
        }
        Disj(a, b) => {
            let (a, b) = bin(a, b)?;
            P::Or(a, b)
        }
        Impl(a, b) => {
            let (a, b) = bin(a, b)?;
            P::Imp(a, b)
        }
        other => {
            return Err(FragmentError::new(
                "oracle_int",
                format!("not propositional: {other}"),
            ))
        }
    })
}

fn canon(mut v: Vec<P>) -> Vec<P> {
    v.sort();
    v.dedup();
    v
}

fn with(gamma: &[P], skip: usize, added: &[P]) -> Vec<P> {
    let mut v: Vec<P> = gamma
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, p)| p.clone())
        .collect();
    v.extend(added.iter().cloned());
    canon(v)
}

#[derive(Default)]
struct G4 {
    memo: HashMap<(Vec<P>, P), bool>,
}

impl G4 {
    fn prove(&mut self, gamma: Vec<P>, goal: P) -> bool {
        let key = (gamma, goal);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = self.step(&key.0, &key.1);
        self.memo.insert(key, v);
        v
    }

    fn step(&mut self, gamma: &[P], goal: &P) -> bool {
        if gamma.contains(&P::Bot) || *goal == P::Top || gamma.contains(goal) {
            return true;
        }
        // Invertible right rules.
        match goal {
            P::And(a, b) => {
                return self.prove(gamma.to_vec(), (**a).clone())
                    && self.prove(gamma.to_vec(), (**b).clone());
            }
            P::Imp(a, b) => {
                return self.prove(with(gamma, usize::MAX, &[(**a).clone()]), (**b).clone())
            }
            _ => {}
        }
        // Invertible left rules.
        for (i, h) in gamma.iter().enumerate() {
            let next = match h {
                P::Top => Some(with(gamma, i, &[])),
                P::And(a, b) => Some(with(gamma, i, &[(**a).clone(), (**b).clone()])),
                P::Or(a, b) => {
                    return self.prove(with(gamma, i, &[(**a).clone()]), goal.clone())
                        && self.prove(with(gamma, i, &[(**b).clone()]), goal.clone());
                }
                P::Imp(c, b) => match &**c {
                    P::Top => Some(with(gamma, i, &[(**b).clone()])),
                    P::Bot => Some(with(gamma, i, &[])),
                    P::And(c1, c2) => Some(with(
                        gamma,
                        i,
                        &[P::Imp(c1.clone(), Rc::new(P::Imp(c2.clone(), b.clone())))],
                    )),
                    P::Or(c1, c2) => Some(with(
                        gamma,
                        i,
                        &[P::Imp(c1.clone(), b.clone()), P::Imp(c2.clone(), b.clone())],
                    )),
                    P::Atom(_) if gamma.contains(c) => Some(with(gamma, i, &[(**b).clone()])),
                    _ => None,
                },
                _ => None,
            };
            if let Some(next) = next {
                return self.prove(next, goal.clone());
            }
        }
        // Non-invertible rules.
        if let P::Or(a, b) = goal {
            if self.prove(gamma.to_vec(), (**a).clone())
                || self.prove(gamma.to_vec(), (**b).clone())
            {
                return true;
            }
        }
        for (i, h) in gamma.iter().enumerate() {
            if let P::Imp(cd, b) = h {
                if let P::Imp(_, d) = &**cd {
                    let left = with(gamma, i, &[P::Imp(d.clone(), b.clone())]);
                    if self.prove(left, (**cd).clone())
                        && self.prove(with(gamma, i, &[(**b).clone()]), goal.clone())
                    {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_iformula;

    fn holds(hyps: &[&str], goal: &str) -> bool {
        let hyps: Vec<IFormula> = hyps.iter().map(|h| parse_iformula(h).unwrap()).collect();
        oracle_int(&hyps, &parse_iformula(goal).unwrap()).unwrap()
    }

    #[test]
    fn textbook_cases() {
        assert!(!holds(&[], "a | ~a"));
        assert!(holds(&[], "~~(a | ~a)"));
        assert!(holds(&["a -> b", "a"], "b"));
        assert!(!holds(&[], "((a -> b) -> a) -> a"));
        assert!(holds(&[], "~~~a -> ~a"));
        assert!(!holds(&[], "~~a -> a"));
        assert!(holds(&["(a -> b) -> c", "b"], "c"));
    }

    #[test]
    fn rejects_quantifiers() {
        assert!(oracle_int(&[], &parse_iformula("forall X. p(X)").unwrap()).is_err());
    }
}
