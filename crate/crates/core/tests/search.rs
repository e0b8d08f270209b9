use focalis::kernel::{check_lj, check_ljf, check_lkf, LjSequent, ProofTree};
use focalis::search::{
    enumerate_lj, enumerate_ljf, enumerate_lkf, prove_ljf, prove_lkf, SearchConfig, Verdict,
};
use focalis::syntax::{classical_nnf, parse_iformula, BiasMap, IFormula, Polarity};

fn f(s: &str) -> IFormula {
    parse_iformula(s).unwrap()
}

fn fs(items: &[&str]) -> Vec<IFormula> {
    items.iter().map(|s| f(s)).collect()
}

fn first_decide(p: &ProofTree) -> Option<&ProofTree> {
    if p.rule == "Lf" || p.rule == "Rf" {
        return Some(p);
    }
    p.premises.iter().find_map(first_decide)
}

fn focus_of(decide: &ProofTree) -> String {
    let child = &decide.premises[0].conclusion.to_string();
    child
        .split("-{")
        .nth(1)
        .and_then(|s| s.split("}->").next())
        .unwrap_or("")
        .to_string()
}

#[test]
fn chaining_example_first_decide_follows_bias() {
    let gamma = fs(&["a", "a -> b", "b -> c"]);
    let forward = BiasMap::uniform(Polarity::Pos).with("c", Polarity::Neg);
    let backward = BiasMap::uniform(Polarity::Pos).with("b", Polarity::Neg);
    let cfg = SearchConfig {
        max_decides: 4,
        enumerate_limit: 100,
        ..Default::default()
    };
    for (bias, expected) in [(&forward, "a -> b"), (&backward, "b -> c")] {
        let all = enumerate_ljf(&gamma, &f("c"), bias, &cfg);
        assert!(!all.proofs.is_empty());
        for p in &all.proofs {
            assert_eq!(check_ljf(p, bias, false), Ok(()));
            assert_eq!(focus_of(first_decide(p).unwrap()), expected);
        }
    }
}

#[test]
fn peirce_is_exhausted() {
    let r = prove_ljf(
        &[],
        &f("((a -> b) -> a) -> a"),
        &BiasMap::default(),
        &SearchConfig::default(),
    );
    assert_eq!(r.verdict, Verdict::Exhausted);
}

#[test]
fn disjunction_elimination_has_one_proof() {
    let bias = BiasMap::uniform(Polarity::Pos);
    let cfg = SearchConfig {
        max_decides: 1,
        ..Default::default()
    };
    let all = enumerate_ljf(&fs(&["a | a"]), &f("a"), &bias, &cfg);
    assert_eq!(all.proofs.len(), 1);
    assert_eq!(check_ljf(&all.proofs[0], &bias, false), Ok(()));
}

#[test]
fn found_proofs_check() {
    for bias in [
        BiasMap::uniform(Polarity::Pos),
        BiasMap::uniform(Polarity::Neg),
    ] {
        for (hyps, goal) in [
            (vec![], "a -> a"),
            (vec!["a &+ b"], "b &- a"),
            (vec!["a | b", "a -> c", "b -> c"], "c"),
            (vec![], "~~(a | ~a)"),
            (vec!["forall X. p(X) -> q(X)", "p(k)"], "exists Y. q(Y)"),
        ] {
            let cfg = SearchConfig {
                term_domain: vec![focalis::syntax::Term::constant("k")],
                ..Default::default()
            };
            let r = prove_ljf(&fs(&hyps), &f(goal), &bias, &cfg);
            assert!(r.proved(), "{goal}");
            assert_eq!(check_ljf(r.proof.as_ref().unwrap(), &bias, false), Ok(()));
        }
    }
}

#[test]
fn excluded_middle_focus_counts() {
    let bias = BiasMap::default();
    let count = |text: &str, limit: usize| {
        let cfg = SearchConfig {
            max_decides: limit,
            ..Default::default()
        };
        enumerate_lkf(&[classical_nnf(text).unwrap()], &bias, &cfg)
            .proofs
            .iter()
            .map(|p| p.count_rule("Focus"))
            .min()
    };
    assert_eq!(count("p |- ~p", 2), Some(1));
    assert_eq!(count("p |+ ~p", 1), None);
    assert_eq!(count("p |+ ~p", 2), Some(2));
    let r = prove_lkf(
        &[classical_nnf("p |+ ~p").unwrap()],
        &bias,
        &SearchConfig::default(),
    );
    assert_eq!(check_lkf(r.proof.as_ref().unwrap(), &bias), Ok(()));
}

#[test]
fn lj_enumeration_checks() {
    let s: LjSequent = "a & b ==> b & a".parse().unwrap();
    let proofs = enumerate_lj(&s, 6);
    assert!(!proofs.is_empty());
    for p in &proofs {
        assert_eq!(check_lj(p), Ok(()));
        assert!(p.size() <= 6);
    }
}
