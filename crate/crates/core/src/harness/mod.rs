//! Exhaustive verification campaigns over graph corpora.

pub mod campaign;
pub mod checks;
pub mod corpus;

pub use campaign::{run_campaign, CampaignReport, CheckTally, Counterexample, InfrastructureFailure};
pub use checks::{select_checks, Check, CheckOutcome, GraphProfile, Status, Subject, CHECKS};
pub use corpus::{
    builtin_connected, builtin_cubic, load_corpus_text, resolve_corpus, Corpus, CorpusEntry,
};
