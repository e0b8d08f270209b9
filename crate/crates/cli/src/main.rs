use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use focalis::bench::{run_chain_bench, to_csv};
use focalis::embed::{embed, embed_classical, EmbeddingScheme, Side};
use focalis::kernel::{
    check_lj, check_ljf, check_lkf, check_llf, from_json, render, Calculus, Format, LjSequent,
    ProofTree,
};
use focalis::linear::{translate_linear, LinScheme, Source};
use focalis::oracle::{gen_corpus, oracle_int, BiasPreset, CorpusBounds, Generator, PRESETS};
use focalis::search::{
    enumerate_lj, enumerate_ljf, enumerate_lkf, prove_ljf, prove_lkf, ChoiceOrder, SearchConfig,
    SearchResult, SearchStats, Verdict,
};
use focalis::syntax::{
    classical_nnf, parse_ilist, BiasMap, CFormula, IFormula, ParseOptions, Polarity, Term,
};

const GRAMMAR: &str = "\
formula syntax:
  intuitionistic  a | p(t,..) | true | false | A &+ B | A &- B | A & B | A | B | A -> B | ~A
                  | exists X. A | forall X. A
  classical       a | ~a | #t | #f | ~#t | ~#f | A &+ B | A &- B | A |+ B | A |- B
                  | A ->+ B | A ->- B | exists X. A | forall X. A
  linear          a | a^ | 1 | 0 | top | bot | A * B | A (+) B | A & B | A par B | !A | ?A
  bias            \"a=+,b=-\" with --bias-default + or -
  hypotheses      comma-separated list, or a file with one formula per line (# comments)";

/// Exit statuses: proved/success, disproved/exhausted, resource limit, usage error.
const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_LIMIT: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "focalis",
    version,
    about = "Focused proof search and checking for LJF, LKF and LLF"
)]
struct Cli {
    /// Print the rule catalog (name and premise count) of a calculus.
    #[arg(long, value_name = "CALCULUS")]
    rules: Option<RulesArg>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesArg {
    Ljf,
    Lkf,
    Llf,
    Lj,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a focused proof.
    Prove(ProveArgs),
    /// Translate a formula into linear logic.
    Translate(TranslateArgs),
    /// Embed a formula into LJF.
    Embed(EmbedArgs),
    /// Check a proof in JSON form.
    Check(CheckArgs),
    /// Cross-check LJF search against the intuitionistic oracle on a corpus.
    Xcheck(XcheckArgs),
    /// Run a benchmark.
    Bench {
        #[command(subcommand)]
        which: BenchCommand,
    },
    /// Enumerate proofs within a bound.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Fibonacci Horn clauses under a uniform bias.
    Fib(FibArgs),
}

#[derive(Args)]
struct BiasArgs {
    /// Atom polarities, e.g. "a=+,b=-".
    #[arg(long, default_value = "")]
    bias: String,
    /// Polarity of atoms not listed in --bias.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    bias_default: String,
}

impl BiasArgs {
    fn bias(&self) -> Result<BiasMap> {
        let default: Polarity = self
            .bias_default
            .parse()
            .map_err(|e| anyhow!("--bias-default: {e}"))?;
        BiasMap::parse(&self.bias, default).map_err(|e| anyhow!("--bias: {e}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Logic {
    Ljf,
    Lkf,
}

#[derive(Args)]
struct SequentArgs {
    /// Goal formula (inline or a file path). For lkf, the classical formula to prove.
    #[arg(long)]
    goal: String,
    /// Hypotheses: a comma-separated list or a file with one formula per line.
    #[arg(long, default_value = "")]
    hyp: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 64)]
    max_decides: usize,
    /// Ground terms for existential and universal instantiation, e.g. "c1,c2".
    #[arg(long, default_value = "")]
    domain: String,
    /// Disable the loop check at border sequents.
    #[arg(long)]
    no_loop_check: bool,
    /// Try decide candidates in reverse declaration order.
    #[arg(long)]
    reversed: bool,
}

impl SearchArgs {
    fn config(&self, enumerate_limit: usize) -> Result<SearchConfig> {
        let term_domain = split_list(&self.domain)
            .map(|t| {
                if t.chars().all(|c| c.is_alphanumeric() || c == '_') && !t.starts_with('_') {
                    Ok(Term::constant(t))
                } else {
                    Err(anyhow!("--domain: {t:?} is not a constant"))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SearchConfig {
            max_decides: self.max_decides,
            term_domain,
            loop_check: !self.no_loop_check,
            choice_order: if self.reversed {
                ChoiceOrder::Reversed
            } else {
                ChoiceOrder::Declaration
            },
            enumerate_limit,
        })
    }
}

#[derive(Args)]
struct ProveArgs {
    #[arg(long, value_enum, default_value = "ljf")]
    logic: Logic,
    #[command(flatten)]
    sequent: SequentArgs,
    #[command(flatten)]
    bias: BiasArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, default_value = "text")]
    emit: String,
    /// Print search statistics on stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct TranslateArgs {
    /// 01r | 01l | 01ln | qj-r | qj-l | pm1 | conj | polaro
    #[arg(long)]
    scheme: String,
    /// Side for pm1 and conj.
    #[arg(long, default_value = "r")]
    side: String,
    #[command(flatten)]
    bias: BiasArgs,
    formula: String,
}

#[derive(Args)]
struct EmbedArgs {
    /// lj | ljq | rcc | classical
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value = "r")]
    side: String,
    #[command(flatten)]
    bias: BiasArgs,
    formula: String,
}

#[derive(Args)]
struct CheckArgs {
    file: String,
    /// Accept the LJF cut rules.
    #[arg(long)]
    allow_cut: bool,
    #[command(flatten)]
    bias: BiasArgs,
}

#[derive(Args)]
struct XcheckArgs {
    #[arg(long, default_value_t = 1)]
    corpus_seed: u64,
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    atoms: usize,
    #[arg(long, default_value_t = 12)]
    max_conn: usize,
    /// "all" or a comma-separated list of all-pos, all-neg, alternating, random[:SEED].
    #[arg(long, default_value = "all")]
    bias_presets: String,
    /// Use every formula up to --max-conn connectives instead of random sequents.
    #[arg(long)]
    exhaustive: bool,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Args)]
struct FibArgs {
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    bias: String,
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumLogic {
    Ljf,
    Lkf,
    Lj,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value = "ljf")]
    logic: EnumLogic,
    #[command(flatten)]
    sequent: SequentArgs,
    #[command(flatten)]
    bias: BiasArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, default_value_t = 1000)]
    limit: usize,
    /// Node bound for LJ enumeration.
    #[arg(long, default_value_t = 6)]
    max_nodes: usize,
    #[arg(long, default_value = "text")]
    emit: String,
    /// Print only the number of proofs.
    #[arg(long)]
    count: bool,
}

/// A failure that is the caller's fault: bad flags, unreadable input, syntax errors.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            eprint!("{e}");
            eprintln!("\n{GRAMMAR}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            eprintln!("\n{GRAMMAR}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Usage> {
    if let Some(calc) = cli.rules {
        let calc = match calc {
            RulesArg::Ljf => Calculus::Ljf,
            RulesArg::Lkf => Calculus::Lkf,
            RulesArg::Llf => Calculus::Llf,
            RulesArg::Lj => Calculus::Lj,
        };
        for (name, arity) in calc.rules() {
            println!("{name} {arity}");
        }
        if calc == Calculus::Ljf {
            for (name, arity) in focalis::kernel::LJF_CUT_RULES {
                println!("{name} {arity}");
            }
        }
        if cli.command.is_none() {
            return Ok(EXIT_OK);
        }
    }
    match cli.command {
        None => Err(Usage(anyhow!("no subcommand given; try --help"))),
        Some(Command::Prove(a)) => prove(a),
        Some(Command::Translate(a)) => translate(a),
        Some(Command::Embed(a)) => embed_cmd(a),
        Some(Command::Check(a)) => check(a),
        Some(Command::Xcheck(a)) => xcheck(a),
        Some(Command::Bench {
            which: BenchCommand::Fib(a),
        }) => bench_fib(a),
        Some(Command::Enumerate(a)) => enumerate(a),
    }
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// The argument itself, or the contents of the file it names.
fn inline_or_file(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if !arg.is_empty() && path.is_file() {
        fs::read_to_string(path).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

/// Hypothesis items: lines of a file (with `#` comments) or one inline comma list.
fn hyp_items(arg: &str) -> Result<Vec<String>> {
    let path = Path::new(arg);
    if !arg.is_empty() && path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        Ok(text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect())
    } else if arg.trim().is_empty() {
        Ok(Vec::new())
    } else {
        Ok(vec![arg.to_string()])
    }
}

fn parse_i(text: &str) -> Result<IFormula> {
    let mut list =
        parse_ilist(text.trim(), ParseOptions::default()).map_err(|e| anyhow!("{text:?}: {e}"))?;
    match list.len() {
        1 => Ok(list.remove(0)),
        _ => bail!("{text:?}: expected exactly one formula"),
    }
}

fn int_sequent(args: &SequentArgs) -> Result<(Vec<IFormula>, IFormula)> {
    let mut hyps = Vec::new();
    for item in hyp_items(&args.hyp)? {
        hyps.extend(
            parse_ilist(&item, ParseOptions::default())
                .map_err(|e| anyhow!("--hyp {item:?}: {e}"))?,
        );
    }
    let goal = parse_i(&inline_or_file(&args.goal)?).context("--goal")?;
    Ok((hyps, goal))
}

/// The one-sided classical sequent `⊢ ~H1, .., ~Hn, G`.
fn classical_sequent(args: &SequentArgs) -> Result<Vec<CFormula>> {
    let mut gamma = Vec::new();
    for item in hyp_items(&args.hyp)? {
        for part in split_top_level(&item) {
            let h = classical_nnf(&part).map_err(|e| anyhow!("--hyp {part:?}: {e}"))?;
            gamma.push(h.negate());
        }
    }
    let goal = inline_or_file(&args.goal)?;
    gamma.push(classical_nnf(goal.trim()).map_err(|e| anyhow!("--goal: {e}"))?);
    Ok(gamma)
}

/// Splits a comma list at commas outside parentheses.
fn split_top_level(text: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().expect("non-empty").push(c);
    }
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn format_arg(emit: &str) -> Result<Format> {
    emit.parse().map_err(|e: String| anyhow!("--emit: {e}"))
}

fn stats_line(verdict: Option<Verdict>, s: &SearchStats) -> String {
    let mut line = String::new();
    if let Some(v) = verdict {
        let v = match v {
            Verdict::Proved => "proved",
            Verdict::Exhausted => "exhausted",
            Verdict::ResourceLimit => "resource-limit",
        };
        let _ = write!(line, "verdict={v} ");
    }
    let _ = write!(
        line,
        "decides={} nodes_expanded={} proof_nodes={} backtracks={}",
        s.decides, s.nodes_expanded, s.proof_nodes, s.backtracks
    );
    line
}

fn prove(a: ProveArgs) -> Result<u8, Usage> {
    let bias = a.bias.bias()?;
    let cfg = a.search.config(1)?;
    let format = format_arg(&a.emit)?;
    let result: SearchResult = match a.logic {
        Logic::Ljf => {
            let (hyps, goal) = int_sequent(&a.sequent)?;
            prove_ljf(&hyps, &goal, &bias, &cfg)
        }
        Logic::Lkf => prove_lkf(&classical_sequent(&a.sequent)?, &bias, &cfg),
    };
    if let Some(p) = &result.proof {
        print_proof(p, format);
    }
    if a.stats {
        eprintln!("{}", stats_line(Some(result.verdict), &result.stats));
    }
    Ok(match result.verdict {
        Verdict::Proved => EXIT_OK,
        Verdict::Exhausted => {
            eprintln!("no proof: search space exhausted");
            EXIT_NO
        }
        Verdict::ResourceLimit => {
            eprintln!("no proof within {} decides per branch", cfg.max_decides);
            EXIT_LIMIT
        }
    })
}

fn print_proof(p: &ProofTree, format: Format) {
    let out = render(p, format);
    if out.ends_with('\n') {
        print!("{out}");
    } else {
        println!("{out}");
    }
}

fn translate(a: TranslateArgs) -> Result<u8, Usage> {
    let side: Side = a.side.parse().map_err(|e: String| anyhow!("--side: {e}"))?;
    let scheme = LinScheme::from_cli(&a.scheme, side).map_err(|e| anyhow!("--scheme: {e}"))?;
    let bias = a.bias.bias()?;
    let text = inline_or_file(&a.formula)?;
    let out = if scheme.is_classical() {
        let c = classical_nnf(text.trim()).map_err(|e| anyhow!("{e}"))?;
        translate_linear(Source::Classical(&c), scheme, &bias)
    } else {
        let opts = ParseOptions {
            plain_conj_pos: matches!(scheme, LinScheme::QjLeft | LinScheme::QjRight),
            ..Default::default()
        };
        let f =
            focalis::syntax::parse_iformula_with(text.trim(), opts).map_err(|e| anyhow!("{e}"))?;
        translate_linear(Source::Int(&f), scheme, &bias)
    };
    match out {
        Ok(l) => {
            println!("{l}");
            Ok(EXIT_OK)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(EXIT_NO)
        }
    }
}

fn embed_cmd(a: EmbedArgs) -> Result<u8, Usage> {
    let side: Side = a.side.parse().map_err(|e: String| anyhow!("--side: {e}"))?;
    let scheme: EmbeddingScheme = a
        .scheme
        .parse()
        .map_err(|e: String| anyhow!("--scheme: {e}"))?;
    let bias = a.bias.bias()?;
    let text = inline_or_file(&a.formula)?;
    let out = if scheme == EmbeddingScheme::ClassicalApprox {
        let c = classical_nnf(text.trim()).map_err(|e| anyhow!("{e}"))?;
        Ok(embed_classical(&c, &bias))
    } else {
        let opts = ParseOptions {
            plain_conj_pos: scheme == EmbeddingScheme::LjqLr,
            ..Default::default()
        };
        let f =
            focalis::syntax::parse_iformula_with(text.trim(), opts).map_err(|e| anyhow!("{e}"))?;
        embed(&f, scheme, side, &bias)
    };
    match out {
        Ok(f) => {
            println!("{f}");
            Ok(EXIT_OK)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(EXIT_NO)
        }
    }
}

fn check(a: CheckArgs) -> Result<u8, Usage> {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file))?;
    let proof = from_json(&text).map_err(|e| anyhow!("{}: {e}", a.file))?;
    let bias = a.bias.bias()?;
    let verdict = match proof.calculus() {
        Calculus::Ljf => check_ljf(&proof, &bias, a.allow_cut),
        Calculus::Lkf => check_lkf(&proof, &bias),
        Calculus::Llf => check_llf(&proof, &bias),
        Calculus::Lj => check_lj(&proof),
    };
    match verdict {
        Ok(()) => {
            println!(
                "ok: {} proof, {} nodes",
                proof.calculus().name(),
                proof.size()
            );
            Ok(EXIT_OK)
        }
        Err(v) => {
            let path: Vec<String> = v.path.iter().map(usize::to_string).collect();
            println!(
                "violation at [{}] ({}): {}",
                path.join(","),
                v.rule,
                v.reason
            );
            Ok(EXIT_NO)
        }
    }
}

struct PresetRow {
    preset: BiasPreset,
    items: usize,
    agree: usize,
    disagree: usize,
    limit: usize,
}

fn xcheck(a: XcheckArgs) -> Result<u8, Usage> {
    let presets: Vec<BiasPreset> = if a.bias_presets == "all" {
        PRESETS.to_vec()
    } else {
        split_list(&a.bias_presets)
            .map(|p| {
                p.parse::<BiasPreset>()
                    .map_err(|e| anyhow!("--bias-presets: {e}"))
            })
            .collect::<Result<_>>()?
    };
    let (generator, bounds) = if a.exhaustive {
        (
            Generator::Exhaustive,
            CorpusBounds {
                atoms: a.atoms,
                max_conn: a.max_conn,
                count: 0,
                max_hyps: 0,
            },
        )
    } else {
        (
            Generator::Random,
            CorpusBounds {
                atoms: a.atoms,
                max_conn: a.max_conn,
                count: a.n,
                max_hyps: 3,
            },
        )
    };
    let corpus = gen_corpus(generator, bounds, a.corpus_seed);
    let truth: Vec<bool> = corpus
        .items
        .iter()
        .map(|it| oracle_int(&it.gamma, &it.goal).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let cfg = SearchConfig::default();
    let rows: Vec<PresetRow> = std::thread::scope(|s| {
        let handles: Vec<_> = presets
            .iter()
            .map(|&preset| {
                let (corpus, truth, cfg) = (&corpus, &truth, &cfg);
                s.spawn(move || {
                    let mut row = PresetRow {
                        preset,
                        items: corpus.items.len(),
                        agree: 0,
                        disagree: 0,
                        limit: 0,
                    };
                    for (it, &want) in corpus.items.iter().zip(truth) {
                        let bias = preset.bias_for(&it.gamma, &it.goal);
                        let r = prove_ljf(&it.gamma, &it.goal, &bias, cfg);
                        match r.verdict {
                            Verdict::ResourceLimit => row.limit += 1,
                            _ if r.proved() == want => row.agree += 1,
                            _ => row.disagree += 1,
                        }
                    }
                    row
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("xcheck worker panicked"))
            .collect()
    });
    let pass = |r: &PresetRow| r.agree == r.items;
    println!(
        "{:<16} {:>6} {:>6} {:>9} {:>6}  result",
        "preset", "items", "agree", "disagree", "limit"
    );
    for r in &rows {
        println!(
            "{:<16} {:>6} {:>6} {:>9} {:>6}  {}",
            r.preset.to_string(),
            r.items,
            r.agree,
            r.disagree,
            r.limit,
            if pass(r) { "pass" } else { "FAIL" }
        );
    }
    if let Some(path) = &a.csv {
        let mut csv = String::from("preset,items,agree,disagree,resource_limit,result\n");
        for r in &rows {
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{}",
                r.preset,
                r.items,
                r.agree,
                r.disagree,
                r.limit,
                if pass(r) { "pass" } else { "fail" }
            );
        }
        fs::write(path, csv).with_context(|| format!("writing {path}"))?;
    }
    Ok(if rows.iter().all(pass) {
        EXIT_OK
    } else {
        EXIT_NO
    })
}

fn bench_fib(a: FibArgs) -> Result<u8, Usage> {
    let bias: Polarity = a.bias.parse().map_err(|e| anyhow!("--bias: {e}"))?;
    let rows = run_chain_bench(a.max_n, bias).map_err(|e| anyhow!("--max-n: {e}"))?;
    let csv = to_csv(&rows);
    print!("{csv}");
    if let Some(path) = &a.csv {
        fs::write(path, &csv).with_context(|| format!("writing {path}"))?;
    }
    Ok(if rows.iter().all(|r| r.provable) {
        EXIT_OK
    } else {
        EXIT_LIMIT
    })
}

fn enumerate(a: EnumerateArgs) -> Result<u8, Usage> {
    let bias = a.bias.bias()?;
    let cfg = a.search.config(a.limit)?;
    let format = format_arg(&a.emit)?;
    let (proofs, truncated, stats) = match a.logic {
        EnumLogic::Ljf => {
            let (hyps, goal) = int_sequent(&a.sequent)?;
            let e = enumerate_ljf(&hyps, &goal, &bias, &cfg);
            (e.proofs, e.truncated, Some(e.stats))
        }
        EnumLogic::Lkf => {
            let e = enumerate_lkf(&classical_sequent(&a.sequent)?, &bias, &cfg);
            (e.proofs, e.truncated, Some(e.stats))
        }
        EnumLogic::Lj => {
            let (hyps, goal) = int_sequent(&a.sequent)?;
            let mut proofs = enumerate_lj(&LjSequent::new(&hyps, goal), a.max_nodes);
            let truncated = proofs.len() > a.limit;
            proofs.truncate(a.limit);
            (proofs, truncated, None)
        }
    };
    if a.count {
        println!("{}{}", proofs.len(), if truncated { "+" } else { "" });
    } else {
        for (i, p) in proofs.iter().enumerate() {
            if format != Format::Json {
                println!("# proof {} ({} nodes)", i + 1, p.size());
            }
            print_proof(p, format);
        }
    }
    if let Some(s) = stats {
        eprintln!("{}", stats_line(None, &s));
    }
    Ok(if proofs.is_empty() { EXIT_NO } else { EXIT_OK })
}
