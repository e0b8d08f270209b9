use std::collections::HashSet;
use std::io::Write;
use std::thread;
use std::time::{Duration, Instant};

use focalis::bench::run_chain_bench;
use focalis::embed::{embed_sequent, in_ljq_fragment, EmbeddingScheme};
use focalis::kernel::{
    check_lj, check_ljf, check_lkf, check_llf, map_lj_to_llf, render, to_json, Format, LjSequent,
    LjfSequent, ProofTree, Sequent,
};
use focalis::linear::zero_one_left;
use focalis::oracle::{
    atom_names, gen_classical, gen_corpus, oracle_cl, oracle_int, BiasPreset, CorpusBounds,
    CorpusItem, Generator, PRESETS,
};
use focalis::polarity::{delay_neg, delay_pos, is_delay_neg, is_delay_pos};
use focalis::search::{enumerate_lj, enumerate_lkf, prove_ljf, prove_lkf, SearchConfig, Verdict};
use focalis::syntax::{classical_nnf, lneg, BiasMap, IFormula, Polarity};

mod support;
use support::tables::{self, bias, f, left_negated};
use support::{check_any, fib, flip_conj, mutations};

const CORPUS_SEED: u64 = 1;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Written straight to the process stdout so the lines survive output capture.
fn report(n: usize, title: &str, elapsed: Duration, o: &Outcome) {
    let line = format!(
        "criterion {n} [{}] {title}: {} ({:.1}s)\n",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        elapsed.as_secs_f64()
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}

fn corpus() -> Vec<CorpusItem> {
    let exhaustive = gen_corpus(
        Generator::Exhaustive,
        CorpusBounds {
            atoms: 2,
            max_conn: 3,
            ..CorpusBounds::default()
        },
        CORPUS_SEED,
    );
    let random = random_corpus();
    exhaustive.items.into_iter().chain(random).collect()
}

fn random_corpus() -> Vec<CorpusItem> {
    gen_corpus(
        Generator::Random,
        CorpusBounds {
            atoms: 3,
            max_conn: 12,
            count: 500,
            max_hyps: 3,
        },
        CORPUS_SEED,
    )
    .items
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

/// Runs `job` once per bias preset on its own thread, in preset order.
fn per_preset<T: Send>(job: impl Fn(BiasPreset) -> T + Sync) -> Vec<T> {
    thread::scope(|s| {
        let handles: Vec<_> = PRESETS
            .iter()
            .map(|&p| {
                let job = &job;
                s.spawn(move || job(p))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

fn first_decide(p: &ProofTree) -> Option<&ProofTree> {
    if p.rule == "Lf" || p.rule == "Rf" {
        return Some(p);
    }
    p.premises.iter().find_map(first_decide)
}

fn focus_formula(p: &ProofTree) -> Option<&IFormula> {
    match &p.conclusion {
        Sequent::Ljf(LjfSequent::LeftFocus { focus, .. })
        | Sequent::Ljf(LjfSequent::RightFocus { focus, .. }) => Some(focus),
        _ => None,
    }
}

fn all_nodes(p: &ProofTree) -> Vec<&ProofTree> {
    let mut out = Vec::new();
    p.walk(&mut |_, n| out.push(n));
    out
}

// ---------------------------------------------------------------- criterion 1

fn chaining_bench() -> Outcome {
    let pos = match run_chain_bench(12, Polarity::Pos) {
        Ok(rows) => rows,
        Err(e) => return outcome(false, e),
    };
    let neg = match run_chain_bench(12, Polarity::Neg) {
        Ok(rows) => rows,
        Err(e) => return outcome(false, e),
    };
    let in_range = |rows: &[focalis::bench::BenchRow]| {
        rows.iter()
            .filter(|r| (4..=12).contains(&r.n))
            .cloned()
            .collect::<Vec<_>>()
    };
    let (pos, neg) = (in_range(&pos), in_range(&neg));
    if pos.len() != 9 || neg.len() != 9 || pos.iter().chain(&neg).any(|r| !r.provable) {
        return outcome(false, "missing or unprovable instances for n=4..12");
    }
    let c = pos
        .iter()
        .map(|r| r.proof_nodes as f64 / r.n as f64)
        .fold(0.0, f64::max);
    let above_fib = neg.iter().all(|r| r.proof_nodes as u64 >= fib(r.n as u64));
    let ratios: Vec<f64> = neg
        .windows(2)
        .filter(|w| w[1].n >= 8)
        .map(|w| w[1].proof_nodes as f64 / w[0].proof_nodes as f64)
        .collect();
    let ratios_ok = ratios.iter().all(|r| (1.4..=1.9).contains(r));
    let (lo, hi) = ratios
        .iter()
        .fold((f64::MAX, 0.0f64), |(lo, hi), r| (lo.min(*r), hi.max(*r)));
    outcome(
        c <= 25.0 && above_fib && ratios_ok,
        format!(
            "all-pos max proof_nodes/n = {c:.2}; all-neg proof_nodes >= fib(n): {above_fib}; \
             growth ratio n>=8 in [{lo:.3}, {hi:.3}]"
        ),
    )
}

// ---------------------------------------------------------------- criterion 2

struct PresetRun {
    verdicts: Vec<bool>,
    disagree: usize,
    limits: usize,
    checker_failures: usize,
    proofs: usize,
}

fn ljf_vs_oracle(items: &[CorpusItem], expected: &[bool]) -> Vec<PresetRun> {
    per_preset(|preset| {
        let mut run = PresetRun {
            verdicts: Vec::with_capacity(items.len()),
            disagree: 0,
            limits: 0,
            checker_failures: 0,
            proofs: 0,
        };
        for (item, want) in items.iter().zip(expected) {
            let b = preset.bias_for(&item.gamma, &item.goal);
            let r = prove_ljf(&item.gamma, &item.goal, &b, &cfg());
            if r.verdict == Verdict::ResourceLimit {
                run.limits += 1;
            }
            if r.proved() != *want || r.verdict == Verdict::ResourceLimit {
                run.disagree += 1;
            }
            if let Some(p) = &r.proof {
                run.proofs += 1;
                if check_ljf(p, &b, false).is_err() {
                    run.checker_failures += 1;
                }
            }
            run.verdicts.push(r.proved());
        }
        run
    })
}

// ---------------------------------------------------------------- criterion 3

fn lkf_vs_oracle() -> (Outcome, usize, usize) {
    let formulas = gen_classical(500, 3, 12, CORPUS_SEED);
    let names = atom_names(3);
    let runs = per_preset(|preset| {
        let b = preset.bias(&names);
        let (mut disagree, mut fails, mut proofs, mut taut) = (0, 0, 0, 0);
        for c in &formulas {
            let want = oracle_cl(c).unwrap();
            taut += want as usize;
            let r = prove_lkf(std::slice::from_ref(c), &b, &cfg());
            if r.proved() != want || r.verdict == Verdict::ResourceLimit {
                disagree += 1;
            }
            if let Some(p) = &r.proof {
                proofs += 1;
                fails += check_lkf(p, &b).is_err() as usize;
            }
        }
        (disagree, fails, proofs, taut)
    });
    let disagree: usize = runs.iter().map(|r| r.0).sum();
    let fails: usize = runs.iter().map(|r| r.1).sum();
    let proofs: usize = runs.iter().map(|r| r.2).sum();
    let o = outcome(
        disagree == 0,
        format!(
            "{} formulas ({} tautologies) x {} presets, {disagree} disagreements",
            formulas.len(),
            runs[0].3,
            PRESETS.len()
        ),
    );
    (o, proofs, fails)
}

// ---------------------------------------------------------------- criterion 4

fn invariance(items: &[CorpusItem], runs: &[PresetRun]) -> Outcome {
    let across = (0..items.len())
        .filter(|&i| runs.iter().any(|r| r.verdicts[i] != runs[0].verdicts[i]))
        .count();
    let flipped = per_preset(|preset| {
        let idx = PRESETS.iter().position(|p| *p == preset).unwrap();
        items
            .iter()
            .enumerate()
            .filter(|(i, item)| {
                let gamma: Vec<IFormula> = item.gamma.iter().map(flip_conj).collect();
                let goal = flip_conj(&item.goal);
                let b = preset.bias_for(&gamma, &goal);
                prove_ljf(&gamma, &goal, &b, &cfg()).proved() != runs[idx].verdicts[*i]
            })
            .count()
    });
    let flips: usize = flipped.iter().sum();
    outcome(
        across == 0 && flips == 0,
        format!(
            "{} sequents: {across} differ across presets, {flips} differ after swapping the conjunctions",
            items.len()
        ),
    )
}

// ---------------------------------------------------------------- criterion 5

fn delays_and_embeddings(items: &[CorpusItem], expected: &[bool]) -> (Outcome, Vec<ProofTree>) {
    let random = items.len() - 500;
    type Variant = fn(&CorpusItem) -> (Vec<IFormula>, IFormula);
    let variants: [(&str, Variant); 4] = [
        ("goal+", |it| (it.gamma.clone(), delay_pos(it.goal.clone()))),
        ("goal-", |it| (it.gamma.clone(), delay_neg(it.goal.clone()))),
        ("hyps+", |it| {
            (
                it.gamma.iter().cloned().map(delay_pos).collect(),
                it.goal.clone(),
            )
        }),
        ("hyps-", |it| {
            (
                it.gamma.iter().cloned().map(delay_neg).collect(),
                it.goal.clone(),
            )
        }),
    ];
    // delays: every variant on the random corpus, the goal variants on the whole corpus
    let delay_bad: usize = per_preset(|preset| {
        let mut bad = 0;
        for (i, item) in items.iter().enumerate() {
            let chosen = if i >= random {
                &variants[..]
            } else {
                &variants[..2]
            };
            for (_, v) in chosen {
                let (gamma, goal) = v(item);
                let b = preset.bias_for(&gamma, &goal);
                bad += (prove_ljf(&gamma, &goal, &b, &cfg()).proved() != expected[i]) as usize;
            }
        }
        bad
    })
    .iter()
    .sum();

    let embedded = |scheme: EmbeddingScheme, preset: BiasPreset, keep: bool| {
        let (mut bad, mut count, mut proofs) = (0, 0, Vec::new());
        for (i, item) in items.iter().enumerate() {
            if scheme == EmbeddingScheme::LjqLr
                && !(in_ljq_fragment(&item.goal) && item.gamma.iter().all(in_ljq_fragment))
            {
                continue;
            }
            let b0 = BiasMap::default();
            let (gamma, goal) = embed_sequent(&item.gamma, &item.goal, scheme, &b0).unwrap();
            let b = preset.bias_for(&gamma, &goal);
            let r = prove_ljf(&gamma, &goal, &b, &cfg());
            count += 1;
            bad += (r.proved() != expected[i]) as usize;
            if keep && i >= random {
                if let Some(p) = r.proof {
                    proofs.push((p, b));
                }
            }
        }
        (bad, count, proofs)
    };
    let lj = per_preset(|preset| embedded(EmbeddingScheme::LjLr, preset, true));
    let ljq = embedded(EmbeddingScheme::LjqLr, BiasPreset::AllPos, false);
    let lj_bad: usize = lj.iter().map(|r| r.0).sum();
    let lj_count: usize = lj.iter().map(|r| r.1).sum();
    let mut proofs = Vec::new();
    let mut check_fail = 0;
    for (_, _, ps) in lj {
        for (p, b) in ps {
            check_fail += check_ljf(&p, &b, false).is_err() as usize;
            proofs.push(p);
        }
    }
    let o = outcome(
        delay_bad == 0 && lj_bad == 0 && ljq.0 == 0 && check_fail == 0,
        format!(
            "delay mismatches {delay_bad}; LJ l/r {lj_bad}/{lj_count} mismatches; \
             LJQ' l/r {}/{} mismatches (all atoms positive)",
            ljq.0, ljq.1
        ),
    );
    (o, proofs)
}

// ---------------------------------------------------------------- criterion 6

fn chaining_first_decide(bias_text: &str) -> Option<String> {
    let hyps = vec![f("a"), f("a -> b"), f("b -> c")];
    let r = prove_ljf(&hyps, &f("c"), &bias(bias_text), &cfg());
    let d = first_decide(r.proof.as_ref()?)?;
    focus_formula(&d.premises[0]).map(|g| g.to_string())
}

fn negative_fragment(f: &IFormula) -> bool {
    use IFormula::*;
    match f {
        Atom(_) => true,
        ConjNeg(a, b) | Impl(a, b) => negative_fragment(a) && negative_fragment(b),
        Forall(_, a) => negative_fragment(a),
        _ => false,
    }
}

/// Non-delay introduction rules in the synchronous phase starting at `p`.
fn phase_intros(p: &ProofTree) -> usize {
    if matches!(p.rule.as_str(), "Rr" | "Rl" | "Ir" | "Il" | "trueR") {
        return 0;
    }
    let delay = match focus_formula(p) {
        Some(g) => (p.rule == "&+R" && is_delay_pos(g)) || (p.rule == "->L" && is_delay_neg(g)),
        None => return 0,
    };
    (!delay) as usize + p.premises.iter().map(phase_intros).sum::<usize>()
}

fn structural(
    items: &[CorpusItem],
    lj_embedded: &[ProofTree],
) -> (Outcome, Vec<(ProofTree, BiasMap)>) {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut proofs = Vec::new();

    // (a) forward vs backward chaining
    let fwd = chaining_first_decide("a=+,b=+,c=-");
    let bwd = chaining_first_decide("a=+,b=-,c=-");
    let bwd_default = chaining_first_decide("b=-");
    let a_ok = fwd.as_deref() == Some("a -> b")
        && bwd.as_deref() == Some("b -> c")
        && bwd_default.as_deref() == Some("b -> c");
    pass &= a_ok;
    notes.push(format!(
        "(a) first decides {} / {}",
        fwd.unwrap_or_default(),
        bwd.unwrap_or_default()
    ));

    // (b) excluded middle
    let b = BiasMap::default();
    let focus_counts = |text: &str, decides: usize| {
        let c = SearchConfig {
            max_decides: decides,
            ..cfg()
        };
        let e = enumerate_lkf(&[classical_nnf(text).unwrap()], &b, &c);
        e.proofs.iter().map(|p| p.count_rule("Focus")).min()
    };
    let neg_min = focus_counts("p |- ~p", 1);
    let pos_one = focus_counts("p |+ ~p", 1);
    let pos_min = focus_counts("p |+ ~p", 2);
    let b_ok = neg_min == Some(1) && pos_one.is_none() && pos_min == Some(2);
    pass &= b_ok;
    notes.push(format!(
        "(b) Focus nodes: |- {neg_min:?}, |+ {pos_min:?} (none with 1: {})",
        pos_one.is_none()
    ));

    // (c) uniform proofs on the negative fragment
    let neg_bias = BiasPreset::AllNeg;
    let (mut uniform, mut non_uniform) = (0, 0);
    for item in items
        .iter()
        .filter(|it| negative_fragment(&it.goal) && it.gamma.iter().all(negative_fragment))
    {
        let bm = neg_bias.bias_for(&item.gamma, &item.goal);
        let r = prove_ljf(&item.gamma, &item.goal, &bm, &cfg());
        let Some(p) = r.proof else { continue };
        let ok = all_nodes(&p).iter().all(|n| match n.rule.as_str() {
            "Rf" => false,
            "Lf" => match &n.conclusion {
                Sequent::Ljf(LjfSequent::Unfocused { rhs, .. }) => rhs.formula().is_atom(),
                _ => false,
            },
            _ => true,
        });
        if ok {
            uniform += 1;
        } else {
            non_uniform += 1;
        }
        if proofs.len() < 60 {
            proofs.push((p, bm));
        }
    }
    pass &= non_uniform == 0 && uniform > 0;
    notes.push(format!("(c) {uniform} uniform, {non_uniform} not"));

    // (d) delays stop focus in LJ-embedded proofs
    let mut phases = 0;
    let mut long = 0;
    for p in lj_embedded {
        for n in all_nodes(p) {
            if n.rule == "Lf" || n.rule == "Rf" {
                phases += 1;
                long += (phase_intros(&n.premises[0]) > 1) as usize;
            }
        }
    }
    pass &= long == 0 && phases > 0;
    notes.push(format!(
        "(d) {phases} focused phases, {long} longer than one LJ rule"
    ));

    (outcome(pass, notes.join("; ")), proofs)
}

// ---------------------------------------------------------------- criterion 7

fn integrity(checked: usize, failures: usize, samples: &[(ProofTree, BiasMap)]) -> Outcome {
    let mut tried = 0;
    let mut accepted = Vec::new();
    for (p, b) in samples {
        assert!(check_any(p, b), "sample proof must check before mutation");
        for m in mutations(p) {
            tried += 1;
            if check_any(&m, b) && accepted.len() < 3 {
                accepted.push(render(&m, Format::Text).to_string());
            }
        }
    }
    let calculi: HashSet<_> = samples.iter().map(|(p, _)| p.calculus().name()).collect();
    let mut names: Vec<_> = calculi.into_iter().collect();
    names.sort();
    outcome(
        failures == 0 && accepted.is_empty() && samples.len() >= 200,
        format!(
            "{checked} engine proofs checked, {failures} rejected; {tried} mutations of {} proofs ({}) , {} accepted{}",
            samples.len(),
            names.join("/"),
            accepted.len(),
            accepted
                .first()
                .map(|a| format!(": {a}"))
                .unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- criterion 8

fn translation_goldens(items: &[CorpusItem]) -> Outcome {
    let tables = tables::all_tables();
    let rows: usize = tables.iter().map(|t| t.rows.len()).sum();
    let bad: Vec<String> = tables.iter().flat_map(|t| t.mismatches()).collect();
    let mut formulas = 0;
    let mut duality = 0;
    for item in items {
        for b in item.gamma.iter().chain([&item.goal]) {
            formulas += 1;
            duality += (lneg(&zero_one_left(b, true)) != left_negated(b)) as usize;
        }
    }
    outcome(
        bad.is_empty() && duality == 0,
        format!(
            "{rows} table rows, {} mismatched{}; left-negated identity on {formulas} formulas, {duality} failures",
            bad.len(),
            bad.first().map(|b| format!(" ({b})")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- criterion 9

fn lj_to_llf(samples: &mut Vec<(ProofTree, BiasMap)>) -> Outcome {
    let sequents = [
        "a ==> a",
        "a & b, b & a ==> a",
        "a | b ==> b | a",
        "a, a -> b ==> b",
        "a, b ==> a & b",
    ];
    let b = BiasMap::default();
    let (mut total, mut bad, mut collisions) = (0, 0, 0);
    let mut counts = Vec::new();
    for text in sequents {
        let s: LjSequent = text.parse().unwrap();
        let proofs = enumerate_lj(&s, 6);
        counts.push(proofs.len());
        let mut seen = HashSet::new();
        for p in &proofs {
            total += 1;
            if check_lj(p).is_err() {
                bad += 1;
                continue;
            }
            match map_lj_to_llf(p) {
                Ok(m) => {
                    bad += check_llf(&m, &b).is_err() as usize;
                    collisions += !seen.insert(to_json(&m)) as usize;
                    if samples.len() < 400 && p.size() >= 3 {
                        samples.push((p.clone(), b.clone()));
                    }
                }
                Err(_) => bad += 1,
            }
        }
    }
    outcome(
        bad == 0 && collisions == 0 && counts.iter().all(|&c| c > 0),
        format!(
            "{total} LJ proofs (per sequent {counts:?}), {bad} failed mapping or check_llf, {collisions} collisions"
        ),
    )
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    let mut run = |n: usize, title: &str, o: Outcome, elapsed: Duration| {
        report(n, title, elapsed, &o);
        if !o.pass {
            failed.push(n);
        }
    };

    let t = Instant::now();
    let o = chaining_bench();
    let e = t.elapsed();
    let o = Outcome {
        pass: o.pass && e < Duration::from_secs(30),
        ..o
    };
    run(1, "Fibonacci chaining, n=4..12", o, e);

    let items = corpus();
    let expected: Vec<bool> = items
        .iter()
        .map(|it| oracle_int(&it.gamma, &it.goal).unwrap())
        .collect();

    let t = Instant::now();
    let runs = ljf_vs_oracle(&items, &expected);
    let e = t.elapsed();
    let disagree: usize = runs.iter().map(|r| r.disagree).sum();
    let limits: usize = runs.iter().map(|r| r.limits).sum();
    let mut checked: usize = runs.iter().map(|r| r.proofs).sum();
    let mut check_failures: usize = runs.iter().map(|r| r.checker_failures).sum();
    run(
        2,
        "LJF vs intuitionistic oracle",
        outcome(
            disagree == 0 && e < Duration::from_secs(60),
            format!(
                "{} sequents ({} provable) x {} presets, {disagree} disagreements, {limits} resource limits",
                items.len(),
                expected.iter().filter(|b| **b).count(),
                PRESETS.len()
            ),
        ),
        e,
    );

    let t = Instant::now();
    let (o, lkf_proofs, lkf_fail) = lkf_vs_oracle();
    let e = t.elapsed();
    checked += lkf_proofs;
    check_failures += lkf_fail;
    let o = Outcome {
        pass: o.pass && e < Duration::from_secs(60),
        ..o
    };
    run(3, "LKF vs classical oracle", o, e);

    let t = Instant::now();
    let o = invariance(&items, &runs);
    run(4, "verdict invariance", o, t.elapsed());

    let t = Instant::now();
    let (o, lj_embedded) = delays_and_embeddings(&items, &expected);
    checked += lj_embedded.len();
    run(5, "delays and embeddings", o, t.elapsed());

    let t = Instant::now();
    let (o, mut samples) = structural(&items, &lj_embedded);
    run(6, "structural shape", o, t.elapsed());

    let t = Instant::now();
    let o9 = lj_to_llf(&mut samples);
    let e9 = t.elapsed();

    let t = Instant::now();
    let random = &items[items.len() - 500..];
    for preset in [BiasPreset::AllPos, BiasPreset::AllNeg] {
        let found = random.iter().filter_map(|item| {
            let b = preset.bias_for(&item.gamma, &item.goal);
            prove_ljf(&item.gamma, &item.goal, &b, &cfg())
                .proof
                .map(|p| (p, b))
        });
        samples.extend(found.take(100));
    }
    let names = atom_names(3);
    let cb = BiasPreset::Alternating.bias(&names);
    for c in gen_classical(200, 3, 8, CORPUS_SEED + 1) {
        if let Some(p) = prove_lkf(&[c], &cb, &cfg()).proof {
            samples.push((p, cb.clone()));
        }
    }
    let o = integrity(checked, check_failures, &samples);
    run(7, "checker integrity", o, t.elapsed());

    let t = Instant::now();
    let o = translation_goldens(&items);
    run(8, "translation goldens", o, t.elapsed());

    run(9, "LJ to LLF mapping", o9, e9);

    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
