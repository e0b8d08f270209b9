use thiserror::Error;

use super::{Inst, LjSequent, LlfSequent, ProofTree, Sequent};
use crate::linear::{zero_one_left, zero_one_right};
use crate::syntax::{lneg, IFormula, LFormula};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("not an LJ proof node: {0}")]
    NotLj(String),
    #[error("unsupported LJ rule {0}")]
    Unsupported(String),
    #[error("{rule}: {reason}")]
    Malformed { rule: String, reason: String },
}

fn one(f: &IFormula) -> LFormula {
    zero_one_right(f, false)
}

/// `(D⁰)⊥`, the image of a left-hand formula in Ψ.
fn zero_perp(f: &IFormula) -> LFormula {
    lneg(&zero_one_left(f, false))
}

fn psi(gamma: &[IFormula]) -> Vec<LFormula> {
    gamma.iter().map(zero_perp).collect()
}

/// `⊢ (Γ⁰)⊥ : ⇑ R¹`, the image of the LJ end-sequent `Γ ⊢ R`.
pub fn lj_sequent_to_llf(s: &LjSequent) -> LlfSequent {
    LlfSequent::up(&psi(&s.gamma), &[], vec![one(&s.rhs)])
}

/// The neutral sequent `⊢ (Γ⁰)⊥ : R¹ ⇑` at which every cluster starts.
fn neutral(s: &LjSequent) -> LlfSequent {
    LlfSequent::up(&psi(&s.gamma), &[one(&s.rhs)], Vec::new())
}

fn llf(rule: &str, s: LlfSequent, premises: Vec<ProofTree>) -> ProofTree {
    ProofTree::new(rule, Sequent::Llf(s), premises)
}

/// Maps a propositional LJ proof to the LLF proof of the 0/1 image of its
/// end-sequent, one rule cluster per LJ inference. LLF atoms are read with
/// an all-positive bias.
pub fn map_lj_to_llf(p: &ProofTree) -> Result<ProofTree, MapError> {
    let Sequent::Lj(s) = &p.conclusion else {
        return Err(MapError::NotLj(p.rule.clone()));
    };
    Ok(llf("Rup", lj_sequent_to_llf(s), vec![cluster(p)?]))
}

/// `⊢ Ψ : ⇑ R¹` released to the neutral sequent of `premise`.
fn release(premise: &ProofTree) -> Result<ProofTree, MapError> {
    let s = lj_of(premise)?;
    Ok(llf(
        "Rup",
        LlfSequent::up(&psi(&s.gamma), &[], vec![one(&s.rhs)]),
        vec![cluster(premise)?],
    ))
}

/// `?(D⁰)⊥` on the list, stored in Ψ, reaching the neutral sequent of `premise`.
fn store(
    gamma_psi: &[LFormula],
    delta: &[LFormula],
    added: &IFormula,
    premise: &ProofTree,
) -> Result<ProofTree, MapError> {
    let q = LFormula::quest(zero_perp(added));
    Ok(llf(
        "?",
        LlfSequent::up(gamma_psi, delta, vec![q]),
        vec![cluster(premise)?],
    ))
}

fn lj_of(p: &ProofTree) -> Result<&LjSequent, MapError> {
    match &p.conclusion {
        Sequent::Lj(s) => Ok(s),
        _ => Err(MapError::NotLj(p.rule.clone())),
    }
}

fn cluster(p: &ProofTree) -> Result<ProofTree, MapError> {
    let s = lj_of(p)?;
    let malformed = |reason: &str| MapError::Malformed {
        rule: p.rule.clone(),
        reason: reason.to_string(),
    };
    let ps = psi(&s.gamma);
    let r1 = one(&s.rhs);
    let top = neutral(s);
    let down_r = |f: LFormula| LlfSequent::down(&ps, &[], f);
    let principal = || match &p.inst {
        Some(Inst::Principal(f)) => Ok(f),
        _ => Err(malformed("missing principal formula")),
    };
    let prem = |i: usize| {
        p.premises
            .get(i)
            .ok_or_else(|| malformed("missing premise"))
    };
    // Left clusters decide on the Ψ image of the principal with R¹ kept in Δ.
    let down_l = |f: LFormula| LlfSequent::down(&ps, std::slice::from_ref(&r1), f);
    let up_l = |list: Vec<LFormula>| LlfSequent::up(&ps, std::slice::from_ref(&r1), list);
    let tree = match p.rule.as_str() {
        "Ax" => llf("D1", top, vec![llf("I2", down_r(r1.clone()), vec![])]),
        "trueR" => llf("D1", top, vec![llf("one", down_r(LFormula::One), vec![])]),
        "falseL" => {
            let t = LFormula::Top;
            let rdown = llf(
                "Rdown",
                down_l(t.clone()),
                vec![llf("top", up_l(vec![t.clone()]), vec![])],
            );
            llf("D2", top, vec![rdown])
        }
        "andR" => {
            let LFormula::Bang(inner) = &r1 else {
                return Err(malformed("right conjunction image"));
            };
            let amp = llf(
                "&",
                LlfSequent::up(&ps, &[], vec![(**inner).clone()]),
                vec![release(prem(0)?)?, release(prem(1)?)?],
            );
            llf("D1", top, vec![llf("!", down_r(r1.clone()), vec![amp])])
        }
        "orR1" | "orR2" => {
            let LFormula::Plus(a, b) = &r1 else {
                return Err(malformed("right disjunction image"));
            };
            let (rule, part) = if p.rule == "orR1" {
                ("plus_l", a)
            } else {
                ("plus_r", b)
            };
            let bang = llf("!", down_r((**part).clone()), vec![release(prem(0)?)?]);
            llf("D1", top, vec![llf(rule, down_r(r1.clone()), vec![bang])])
        }
        "impR" => {
            let IFormula::Impl(a, _) = &s.rhs else {
                return Err(malformed("right implication"));
            };
            let LFormula::Bang(inner) = &r1 else {
                return Err(malformed("right implication image"));
            };
            let LFormula::Par(q, b1) = &**inner else {
                return Err(malformed("right implication image"));
            };
            debug_assert_eq!(**q, LFormula::quest(zero_perp(a)));
            let stored = llf(
                "?",
                LlfSequent::up(&ps, &[], vec![(**q).clone(), (**b1).clone()]),
                vec![release(prem(0)?)?],
            );
            let par = llf(
                "par",
                LlfSequent::up(&ps, &[], vec![(**inner).clone()]),
                vec![stored],
            );
            llf("D1", top, vec![llf("!", down_r(r1.clone()), vec![par])])
        }
        "andL1" | "andL2" => {
            let f = principal()?;
            let (IFormula::ConjNeg(a, b) | IFormula::ConjPos(a, b)) = f else {
                return Err(malformed("principal is not a conjunction"));
            };
            let img = zero_perp(f);
            let LFormula::Plus(qa, qb) = &img else {
                return Err(malformed("left conjunction image"));
            };
            let (rule, part, q) = if p.rule == "andL1" {
                ("plus_l", a, qa)
            } else {
                ("plus_r", b, qb)
            };
            let stored = store(&ps, std::slice::from_ref(&r1), part, prem(0)?)?;
            let rdown = llf("Rdown", down_l((**q).clone()), vec![stored]);
            llf("D2", top, vec![llf(rule, down_l(img.clone()), vec![rdown])])
        }
        "orL" => {
            let f = principal()?;
            let IFormula::Disj(a, b) = f else {
                return Err(malformed("principal is not a disjunction"));
            };
            let img = zero_perp(f);
            let amp = llf(
                "&",
                up_l(vec![img.clone()]),
                vec![
                    store(&ps, std::slice::from_ref(&r1), a, prem(0)?)?,
                    store(&ps, std::slice::from_ref(&r1), b, prem(1)?)?,
                ],
            );
            llf("D2", top, vec![llf("Rdown", down_l(img), vec![amp])])
        }
        "impL" => {
            let f = principal()?;
            let IFormula::Impl(_, b) = f else {
                return Err(malformed("principal is not an implication"));
            };
            let img = zero_perp(f);
            let LFormula::Tensor(bang_a, q) = &img else {
                return Err(malformed("left implication image"));
            };
            let LFormula::Bang(_) = &**bang_a else {
                return Err(malformed("left implication image"));
            };
            let left = llf("!", down_r((**bang_a).clone()), vec![release(prem(0)?)?]);
            let right = llf(
                "Rdown",
                down_l((**q).clone()),
                vec![store(&ps, std::slice::from_ref(&r1), b, prem(1)?)?],
            );
            llf(
                "D2",
                top,
                vec![llf("tensor", down_l(img.clone()), vec![left, right])],
            )
        }
        other => return Err(MapError::Unsupported(other.to_string())),
    };
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_lj, check_llf};
    use crate::syntax::{parse_iformula, BiasMap};

    fn lj(rule: &str, s: &str, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree::new(rule, Sequent::Lj(s.parse().unwrap()), premises)
    }

    fn principal(s: &str) -> Inst {
        Inst::Principal(parse_iformula(s).unwrap())
    }

    #[test]
    fn and_left_maps_to_plus_release_store() {
        let p = lj(
            "andL1",
            "a & b ==> a",
            vec![lj("Ax", "a, a & b ==> a", vec![])],
        )
        .with_inst(principal("a & b"));
        check_lj(&p).unwrap();
        let m = map_lj_to_llf(&p).unwrap();
        assert_eq!(check_llf(&m, &BiasMap::default()), Ok(()));
        let rules: Vec<&str> = {
            let mut v = Vec::new();
            m.walk(&mut |_, t| v.push(t.rule.as_str()));
            v
        };
        assert_eq!(rules, ["Rup", "D2", "plus_l", "Rdown", "?", "D1", "I2"]);
        assert_eq!(m.conclusion.to_string(), "[?a^ (+) ?b^] ; [] =UP=> [a]");
    }

    #[test]
    fn every_cluster_checks() {
        let p = lj(
            "impR",
            "==> (a -> b) -> (a | false) -> b & true",
            vec![lj(
                "impR",
                "a -> b ==> (a | false) -> b & true",
                vec![lj(
                    "orL",
                    "a -> b, a | false ==> b & true",
                    vec![
                        lj(
                            "andR",
                            "a, a -> b, a | false ==> b & true",
                            vec![
                                lj(
                                    "impL",
                                    "a, a -> b, a | false ==> b",
                                    vec![
                                        lj("Ax", "a, a -> b, a | false ==> a", vec![]),
                                        lj("Ax", "a, b, a -> b, a | false ==> b", vec![]),
                                    ],
                                )
                                .with_inst(principal("a -> b")),
                                lj("trueR", "a, a -> b, a | false ==> true", vec![]),
                            ],
                        ),
                        lj("falseL", "false, a -> b, a | false ==> b & true", vec![]),
                    ],
                )
                .with_inst(principal("a | false"))],
            )],
        );
        assert_eq!(check_lj(&p), Ok(()));
        let m = map_lj_to_llf(&p).unwrap();
        assert_eq!(check_llf(&m, &BiasMap::default()), Ok(()));
    }

    #[test]
    fn right_disjunction_cluster() {
        let p = lj("orR2", "b ==> a | b", vec![lj("Ax", "b ==> b", vec![])]);
        let m = map_lj_to_llf(&p).unwrap();
        assert_eq!(check_llf(&m, &BiasMap::default()), Ok(()));
    }
}
