//! Ground-truth decision procedures that share no code with the focused
//! engines, and the seeded corpora used to cross-check them.

mod cl;
mod corpus;
mod int;

pub use cl::{erase_classical, oracle_cl};
pub use corpus::{
    atom_names, gen_classical, gen_corpus, BiasPreset, Corpus, CorpusBounds, CorpusItem, Generator,
    PRESETS,
};
pub use int::oracle_int;
