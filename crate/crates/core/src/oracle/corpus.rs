use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Atom, BiasMap, CFormula, IFormula, Polarity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Every goal formula up to the connective bound, with no hypotheses.
    Exhaustive,
    /// Seeded sequents with up to `max_hyps` hypotheses.
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusBounds {
    pub atoms: usize,
    /// Connective bound: per formula when exhaustive, per sequent when random.
    pub max_conn: usize,
    /// Number of items (random only).
    pub count: usize,
    pub max_hyps: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            atoms: 3,
            max_conn: 12,
            count: 500,
            max_hyps: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusItem {
    pub gamma: Vec<IFormula>,
    pub goal: IFormula,
    /// A sampled bias; all-positive for exhaustive items.
    pub bias: BiasMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub seed: u64,
    pub generator: Generator,
    pub bounds: CorpusBounds,
    pub items: Vec<CorpusItem>,
}

pub fn atom_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + (i % 26) as u8) as char).to_string() + &"'".repeat(i / 26))
        .collect()
}

/// Generates a corpus reproducibly from `bounds` and `seed`. Exhaustive
/// corpora ignore the seed; their leaves are the atoms and `false`.
pub fn gen_corpus(generator: Generator, bounds: CorpusBounds, seed: u64) -> Corpus {
    let atoms = atom_names(bounds.atoms);
    let items = match generator {
        Generator::Exhaustive => {
            let mut by_size: Vec<Vec<IFormula>> = Vec::new();
            for k in 0..=bounds.max_conn {
                let level = if k == 0 {
                    atoms
                        .iter()
                        .map(IFormula::atom)
                        .chain([IFormula::False])
                        .collect()
                } else {
                    let mut level = Vec::new();
                    for ctor in I_CONNECTIVES {
                        for i in 0..k {
                            for l in &by_size[i] {
                                for r in &by_size[k - 1 - i] {
                                    level.push(ctor(l.clone(), r.clone()));
                                }
                            }
                        }
                    }
                    level
                };
                by_size.push(level);
            }
            by_size
                .into_iter()
                .flatten()
                .map(|goal| CorpusItem {
                    gamma: Vec::new(),
                    goal,
                    bias: BiasMap::default(),
                })
                .collect()
        }
        Generator::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..bounds.count)
                .map(|_| {
                    let hyps = rng.gen_range(0..=bounds.max_hyps);
                    let total = rng.gen_range(0..=bounds.max_conn);
                    let sizes = split(&mut rng, total, hyps + 1);
                    let mut formulas: Vec<IFormula> = sizes
                        .iter()
                        .map(|&k| random_i(&mut rng, &atoms, k))
                        .collect();
                    let goal = formulas.pop().expect("at least the goal");
                    let bias = random_bias(&mut rng, &atoms);
                    CorpusItem {
                        gamma: formulas,
                        goal,
                        bias,
                    }
                })
                .collect()
        }
    };
    Corpus {
        seed,
        generator,
        bounds,
        items,
    }
}

/// Seeded random polarized classical formulas over `atoms` atoms, each with
/// at most `max_conn` connectives.
pub fn gen_classical(count: usize, atoms: usize, max_conn: usize, seed: u64) -> Vec<CFormula> {
    let names = atom_names(atoms);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=max_conn);
            random_c(&mut rng, &names, k)
        })
        .collect()
}

const I_CONNECTIVES: [fn(IFormula, IFormula) -> IFormula; 4] = [
    IFormula::conj_pos,
    IFormula::conj_neg,
    IFormula::disj,
    IFormula::imp,
];

const C_CONNECTIVES: [fn(CFormula, CFormula) -> CFormula; 4] = [
    CFormula::and_pos,
    CFormula::and_neg,
    CFormula::or_pos,
    CFormula::or_neg,
];

/// Distributes `total` connectives over `parts` formulas.
fn split(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![0; parts];
    for _ in 0..total {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    sizes
}

fn catalan(n: usize) -> f64 {
    (0..n).fold(1.0, |c, i| c * 2.0 * (2 * i + 1) as f64 / (i + 2) as f64)
}

/// Size of the left subtree for a binary tree with `k` internal nodes drawn
/// uniformly among all shapes.
fn left_size(rng: &mut ChaCha8Rng, k: usize) -> usize {
    let total = catalan(k);
    let mut x = rng.gen::<f64>() * total;
    for i in 0..k {
        let w = catalan(i) * catalan(k - 1 - i);
        if x < w {
            return i;
        }
        x -= w;
    }
    k - 1
}

fn random_i(rng: &mut ChaCha8Rng, atoms: &[String], k: usize) -> IFormula {
    if k == 0 {
        return match rng.gen_range(0..20) {
            0..=1 => IFormula::False,
            2 => IFormula::True,
            _ => IFormula::atom(atoms[rng.gen_range(0..atoms.len())].clone()),
        };
    }
    let ctor = I_CONNECTIVES[rng.gen_range(0..I_CONNECTIVES.len())];
    let i = left_size(rng, k);
    let l = random_i(rng, atoms, i);
    let r = random_i(rng, atoms, k - 1 - i);
    ctor(l, r)
}

fn random_c(rng: &mut ChaCha8Rng, atoms: &[String], k: usize) -> CFormula {
    if k == 0 {
        let a = Atom::prop(atoms[rng.gen_range(0..atoms.len())].clone());
        return match rng.gen_range(0..10) {
            0 => CFormula::True,
            1 => CFormula::NotFalse,
            2 if rng.gen_bool(0.5) => CFormula::False,
            2 => CFormula::NotTrue,
            3..=5 => CFormula::PosLit(a),
            _ => CFormula::NegLit(a),
        };
    }
    let ctor = C_CONNECTIVES[rng.gen_range(0..C_CONNECTIVES.len())];
    let i = left_size(rng, k);
    let l = random_c(rng, atoms, i);
    let r = random_c(rng, atoms, k - 1 - i);
    ctor(l, r)
}

fn random_bias(rng: &mut ChaCha8Rng, atoms: &[String]) -> BiasMap {
    let mut bias = BiasMap::default();
    for a in atoms {
        bias.set(
            a.clone(),
            if rng.gen_bool(0.5) {
                Polarity::Pos
            } else {
                Polarity::Neg
            },
        );
    }
    bias
}

/// Named bias assignments used for cross-checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiasPreset {
    AllPos,
    AllNeg,
    /// Atoms in sorted order alternate +, -, +, ...
    Alternating,
    /// Each atom's polarity drawn from a seeded generator.
    Random(u64),
}

pub const PRESETS: [BiasPreset; 4] = [
    BiasPreset::AllPos,
    BiasPreset::AllNeg,
    BiasPreset::Alternating,
    BiasPreset::Random(0x5eed),
];

impl BiasPreset {
    /// The bias this preset assigns to the given atom names.
    pub fn bias(&self, atoms: &[String]) -> BiasMap {
        let mut names = atoms.to_vec();
        names.sort();
        names.dedup();
        match self {
            BiasPreset::AllPos => BiasMap::uniform(Polarity::Pos),
            BiasPreset::AllNeg => BiasMap::uniform(Polarity::Neg),
            BiasPreset::Alternating => {
                let mut bias = BiasMap::uniform(Polarity::Pos);
                for (i, a) in names.iter().enumerate() {
                    bias.set(
                        a.clone(),
                        if i % 2 == 0 {
                            Polarity::Pos
                        } else {
                            Polarity::Neg
                        },
                    );
                }
                bias
            }
            BiasPreset::Random(seed) => random_bias(&mut ChaCha8Rng::seed_from_u64(*seed), &names),
        }
    }

    /// The bias for every atom occurring in a sequent.
    pub fn bias_for(&self, gamma: &[IFormula], goal: &IFormula) -> BiasMap {
        let mut atoms = Vec::new();
        for f in gamma.iter().chain([goal]) {
            f.atoms(&mut atoms);
        }
        self.bias(&atoms.into_iter().map(|a| a.name).collect::<Vec<_>>())
    }
}

impl fmt::Display for BiasPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiasPreset::AllPos => f.write_str("all-pos"),
            BiasPreset::AllNeg => f.write_str("all-neg"),
            BiasPreset::Alternating => f.write_str("alternating"),
            BiasPreset::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for BiasPreset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all-pos" | "all_pos" | "+" => Ok(BiasPreset::AllPos),
            "all-neg" | "all_neg" | "-" => Ok(BiasPreset::AllNeg),
            "alternating" => Ok(BiasPreset::Alternating),
            "random" => Ok(PRESETS[3]),
            other => match other.strip_prefix("random:").map(str::parse) {
                Some(Ok(seed)) => Ok(BiasPreset::Random(seed)),
                _ => Err(format!("unknown bias preset {other:?}")),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..6).map(|n| catalan(n).round() as u64).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn preset_names_round_trip() {
        for p in PRESETS {
            assert_eq!(p.to_string().parse::<BiasPreset>(), Ok(p));
        }
    }
}
