use focalis::embed::{embed_classical, embed_lj, embed_ljq, Side};
use focalis::linear::{pm1, polaro, qj_left, qj_right, zero_one_left, zero_one_right};
use focalis::syntax::{classical_nnf, lneg, parse_iformula, BiasMap, IFormula, LFormula, Polarity};

pub fn f(s: &str) -> IFormula {
    parse_iformula(s).unwrap()
}

pub fn bias(s: &str) -> BiasMap {
    BiasMap::parse(s, Polarity::Pos).unwrap()
}

/// One golden table: rendered output next to the expected text, per row.
pub struct Table {
    pub name: &'static str,
    pub rows: Vec<(String, String, String)>,
}

impl Table {
    fn new<I: ToString>(name: &'static str, rows: Vec<(I, String, &str)>) -> Self {
        Table {
            name,
            rows: rows
                .into_iter()
                .map(|(i, got, want)| (i.to_string(), got, want.to_string()))
                .collect(),
        }
    }

    pub fn mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|(_, got, want)| got != want)
            .map(|(input, got, want)| format!("{}: {input}: got {got:?}, want {want:?}", self.name))
            .collect()
    }
}

pub fn all_tables() -> Vec<Table> {
    vec![
        zero_one_table(),
        qj_table(),
        permeation_atoms(),
        permeation_disjunction_left(),
        conjunction_table(),
        ljq_embedding_list(),
        lj_embedding_table(),
        classical_embedding_table(),
        polaro_negative_disjunction(),
    ]
}

pub fn zero_one_table() -> Table {
    let atoms = [
        "q",
        "true",
        "false",
        "p & q",
        "p | q",
        "p -> q",
        "~p",
        "exists X. p(X)",
        "forall X. p(X)",
    ];
    let one = [
        "q",
        "1",
        "0",
        "!(p & q)",
        "!p (+) !q",
        "!(?p^ par q)",
        "!(0 par ?p^)",
        "exists X. !p(X)",
        "!(forall X. p(X))",
    ];
    let zero = [
        "q",
        "top",
        "0",
        "!p & !q",
        "!p (+) !q",
        "?p^ par !q",
        "?p^ par 0",
        "exists X. !p(X)",
        "forall X. !p(X)",
    ];
    let zero_neg = [
        "q^",
        "0",
        "top",
        "?p^ (+) ?q^",
        "?p^ & ?q^",
        "!p * ?q^",
        "!p * top",
        "forall X. ?p(X)^",
        "exists X. ?p(X)^",
    ];
    let mut rows = Vec::new();
    for i in 0..atoms.len() {
        let b = f(atoms[i]);
        rows.push((atoms[i], zero_one_right(&b, true).to_string(), one[i]));
        rows.push((atoms[i], zero_one_left(&b, true).to_string(), zero[i]));
        rows.push((
            atoms[i],
            lneg(&zero_one_left(&b, true)).to_string(),
            zero_neg[i],
        ));
    }
    Table::new("0/1", rows)
}

pub fn qj_table() -> Table {
    let cases = [
        ("c", "c", "c"),
        ("false", "0", "0"),
        ("a & b", "a * b", "!a * !b"),
        ("a | b", "a (+) b", "!a (+) !b"),
        ("a -> b", "(?a^ par b) * 1", "a^ par !b"),
    ];
    let mut rows = Vec::new();
    for (input, q, j) in cases {
        rows.push((input, qj_right(&f(input)).unwrap().to_string(), q));
        rows.push((input, qj_left(&f(input)).unwrap().to_string(), j));
    }
    Table::new("q/j", rows)
}

pub fn permeation_atoms() -> Table {
    let b = bias("p=+,n=-");
    let rows = vec![
        ("p left", pm1(&f("p"), Side::Left, &b).to_string(), "!p"),
        ("p right", pm1(&f("p"), Side::Right, &b).to_string(), "p"),
        ("n left", pm1(&f("n"), Side::Left, &b).to_string(), "n"),
        ("n right", pm1(&f("n"), Side::Right, &b).to_string(), "?n"),
    ];
    Table::new("±1 atoms", rows)
}

pub fn permeation_disjunction_left() -> Table {
    let b = bias("p=+,q=+,n=-,m=-");
    let cases = [
        ("p | q", "!p (+) !q"),
        ("p | n", "!p (+) !n"),
        ("n | p", "!n (+) !p"),
        ("n | m", "!n (+) !m"),
    ];
    let rows: Vec<_> = cases
        .iter()
        .map(|(i, w)| (*i, pm1(&f(i), Side::Left, &b).to_string(), *w))
        .collect();
    Table::new("±1 disjunction", rows)
}

pub fn conjunction_table() -> Table {
    let b = bias("p=+,q=+,n=-,m=-");
    let cases = [
        ("p &+ q", Side::Left, "!p * !q"),
        ("p &+ n", Side::Left, "!p * !n"),
        ("n &+ p", Side::Left, "!n * !p"),
        ("n &+ m", Side::Left, "!n * !m"),
        ("p &+ n", Side::Right, "p * ?n"),
        ("p &- n", Side::Left, "!p & n"),
        ("p &- n", Side::Right, "p & ?n"),
    ];
    let rows: Vec<_> = cases
        .iter()
        .map(|(i, s, w)| (*i, pm1(&f(i), *s, &b).to_string(), *w))
        .collect();
    Table::new("conjunction", rows)
}

pub fn ljq_embedding_list() -> Table {
    let cases = [
        ("c", "c", "c"),
        ("false", "~true", "false"),
        ("a & b", "true -> a &+ b", "a &+ b"),
        ("a | b", "true -> a | b", "a | b"),
        ("a -> b", "a -> true &+ b", "true &+ (a -> b)"),
    ];
    let mut rows = Vec::new();
    for (input, l, r) in cases {
        rows.push((
            input,
            embed_ljq(&f(input), Side::Left).unwrap().to_string(),
            l,
        ));
        rows.push((
            input,
            embed_ljq(&f(input), Side::Right).unwrap().to_string(),
            r,
        ));
    }
    Table::new("LJQ' l/r", rows)
}

pub fn lj_embedding_table() -> Table {
    let cases = [
        ("c", "c", "c"),
        ("false", "~true", "false"),
        ("true", "true -> true", "true"),
        ("a & b", "true &+ a &- true &+ b", "true &+ (a &- b)"),
        ("a | b", "true -> a | b", "(true -> a) | (true -> b)"),
        ("a -> b", "(true -> a) -> true &+ b", "true &+ (a -> b)"),
        (
            "exists X. p(X)",
            "true -> (exists X. p(X))",
            "exists X. true -> p(X)",
        ),
        (
            "forall X. p(X)",
            "forall X. true &+ p(X)",
            "true &+ (forall X. p(X))",
        ),
    ];
    let mut rows = Vec::new();
    for (input, l, r) in cases {
        rows.push((input, embed_lj(&f(input), Side::Left).to_string(), l));
        rows.push((input, embed_lj(&f(input), Side::Right).to_string(), r));
    }
    Table::new("LJ l/r", rows)
}

pub fn classical_embedding_table() -> Table {
    // rows: (bias of a, bias of b) giving the images A/~A and B/~B
    let rows_bias = ["a=+,b=+", "a=+,b=-", "a=-,b=+", "a=-,b=-"];
    let and_pos = [
        "a &+ b",
        "a &+ (b -> _phi)",
        "(a -> _phi) &+ b",
        "(a -> _phi) &+ (b -> _phi)",
    ];
    let and_neg = [
        "(a -> _phi) | (b -> _phi) -> _phi",
        "(a -> _phi) | b -> _phi",
        "a | (b -> _phi) -> _phi",
        "a | b -> _phi",
    ];
    let or_pos = [
        "a | b",
        "a | (b -> _phi)",
        "(a -> _phi) | b",
        "(a -> _phi) | (b -> _phi)",
    ];
    let or_neg = [
        "(a -> _phi) &+ (b -> _phi) -> _phi",
        "(a -> _phi) &+ b -> _phi",
        "a &+ (b -> _phi) -> _phi",
        "a &+ b -> _phi",
    ];
    let imp_pos = [
        "(a -> _phi) | b",
        "(a -> _phi) | (b -> _phi)",
        "a | b",
        "a | (b -> _phi)",
    ];
    let imp_neg = [
        "a &+ (b -> _phi) -> _phi",
        "a &+ b -> _phi",
        "(a -> _phi) &+ (b -> _phi) -> _phi",
        "(a -> _phi) &+ b -> _phi",
    ];
    let neg = ["a -> _phi", "a -> _phi", "a", "a"];
    let forall = [
        "(exists X. a(X) -> _phi) -> _phi",
        "(exists X. a(X) -> _phi) -> _phi",
        "(exists X. a(X)) -> _phi",
        "(exists X. a(X)) -> _phi",
    ];
    let exists = [
        "exists X. a(X)",
        "exists X. a(X)",
        "exists X. a(X) -> _phi",
        "exists X. a(X) -> _phi",
    ];
    let columns: [(&str, &[&str; 4]); 9] = [
        ("a &+ b", &and_pos),
        ("a &- b", &and_neg),
        ("a |+ b", &or_pos),
        ("a |- b", &or_neg),
        ("a ->+ b", &imp_pos),
        ("a ->- b", &imp_neg),
        ("~a", &neg),
        ("forall X. a(X)", &forall),
        ("exists X. a(X)", &exists),
    ];
    let mut rows = Vec::new();
    for (i, bias_text) in rows_bias.iter().enumerate() {
        let b = bias(bias_text);
        for (input, want) in &columns {
            let got = embed_classical(&classical_nnf(input).unwrap(), &b).to_string();
            rows.push((*input, got, want[i]));
        }
    }
    Table::new("classical", rows)
}

pub fn polaro_negative_disjunction() -> Table {
    let cases = [
        ("a=-,b=-", "a par b"),
        ("a=-,b=+", "a par ?b"),
        ("a=+,b=-", "?a par b"),
        ("a=+,b=+", "?a par ?b"),
    ];
    let rows: Vec<_> = cases
        .iter()
        .map(|(b, w)| {
            (
                *b,
                polaro(&classical_nnf("a |- b").unwrap(), &bias(b)).to_string(),
                *w,
            )
        })
        .collect();
    Table::new("polaro", rows)
}

/// Third column of the 0/1 table, built directly from its rows.
pub fn left_negated(b: &IFormula) -> LFormula {
    use IFormula::*;
    match b {
        Atom(a) => LFormula::NegAtom(a.clone()),
        True => LFormula::Zero,
        False => LFormula::Top,
        ConjPos(p, q) | ConjNeg(p, q) => LFormula::plus(
            LFormula::quest(left_negated(p)),
            LFormula::quest(left_negated(q)),
        ),
        Disj(p, q) => LFormula::with(
            LFormula::quest(left_negated(p)),
            LFormula::quest(left_negated(q)),
        ),
        Impl(p, q) if **q == False => {
            LFormula::tensor(LFormula::bang(zero_one_right(p, true)), LFormula::Top)
        }
        Impl(p, q) => LFormula::tensor(
            LFormula::bang(zero_one_right(p, true)),
            LFormula::quest(left_negated(q)),
        ),
        Exists(x, p) => LFormula::forall(x.clone(), LFormula::quest(left_negated(p))),
        Forall(x, p) => LFormula::exists(x.clone(), LFormula::quest(left_negated(p))),
    }
}
