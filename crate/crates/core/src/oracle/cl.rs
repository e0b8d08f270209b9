use crate::error::FragmentError;
use crate::syntax::{CFormula, IFormula};

/// Truth-table tautology check on the polarity erasure of `f`.
pub fn oracle_cl(f: &CFormula) -> Result<bool, FragmentError> {
    let mut names = Vec::new();
    atoms(f, &mut names)?;
    names.sort();
    names.dedup();
    let n = names.len();
    Ok((0u64..1 << n).all(|bits| {
        let value = |name: &str| {
            let i = names
                .iter()
                .position(|m| m == name)
                .expect("collected atom");
            bits >> i & 1 == 1
        };
        eval(f, &value)
    }))
}

fn atoms(f: &CFormula, out: &mut Vec<String>) -> Result<(), FragmentError> {
    use CFormula::*;
    match f {
        PosLit(a) | NegLit(a) if a.args.is_empty() => out.push(a.name.clone()),
        True | False | NotTrue | NotFalse => {}
        AndPos(a, b) | AndNeg(a, b) | OrPos(a, b) | OrNeg(a, b) => {
            atoms(a, out)?;
            atoms(b, out)?;
        }
        other => {
            return Err(FragmentError::new(
                "oracle_cl",
                format!("not propositional: {other}"),
            ))
        }
    }
    Ok(())
}

fn eval(f: &CFormula, value: &dyn Fn(&str) -> bool) -> bool {
    use CFormula::*;
    match f {
        PosLit(a) => value(&a.name),
        NegLit(a) => !value(&a.name),
        True | NotFalse => true,
        False | NotTrue => false,
        AndPos(a, b) | AndNeg(a, b) => eval(a, value) && eval(b, value),
        OrPos(a, b) | OrNeg(a, b) => eval(a, value) || eval(b, value),
        Exists(..) | Forall(..) => unreachable!("rejected while collecting atoms"),
    }
}

/// The intuitionistic reading of a propositional classical formula with its
/// polarity annotations erased: `~a` becomes `a -> false`.
pub fn erase_classical(f: &CFormula) -> Result<IFormula, FragmentError> {
    use CFormula::*;
    Ok(match f {
        PosLit(a) if a.args.is_empty() => IFormula::Atom(a.clone()),
        NegLit(a) if a.args.is_empty() => IFormula::not(IFormula::Atom(a.clone())),
        True | NotFalse => IFormula::True,
        False | NotTrue => IFormula::False,
        AndPos(a, b) | AndNeg(a, b) => IFormula::conj_neg(erase_classical(a)?, erase_classical(b)?),
        OrPos(a, b) | OrNeg(a, b) => IFormula::disj(erase_classical(a)?, erase_classical(b)?),
        other => {
            return Err(FragmentError::new(
                "erase_classical",
                format!("not propositional: {other}"),
            ))
        }
    })
}
