//! Line-based clone detection for IEC 61131-3 Structured Text and C/C++.
//!
//! The crate finds Type 1 (exact) and Type 2 (identifier/literal
//! normalized) code clones by fingerprinting significant source lines,
//! computes duplication metrics with plot-ready scatter and treemap
//! datasets, ranks and samples clone classes into inspection groups, and
//! scores inter-rater reliability of clone ratings with ICC(3,k).
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! - `tokenize_and_normalize`: lexing and the four normalization modes
//! - `detect_clones`: clone classes over an in-memory corpus
//! - `duplication_report`: duplication metrics, scatter and treemap data
//! - `sample_study_groups`: ranking strategies and study-group assembly
//! - `rater_reliability`: Likert encoding and ICC(3,k) with F test and CI
//! - `end_to_end`: walk a directory tree and run the whole pipeline
//!
//! The `stclone` binary wraps the same pipeline behind `detect` and
//! `study` subcommands.

pub mod cli;
pub mod corpus;
pub mod detect;
pub mod lang;
pub mod lexer;
pub mod metrics;
pub mod normalize;
pub mod schema;
pub mod select;
pub mod stats;
pub mod token;

pub use detect::{detect, find_maximal_runs, CloneClass, ClonePair, CorpusFile, DetectionConfig};
pub use lang::{LanguageId, LanguageProfile};
pub use normalize::{normalize_line, significant_lines, NormalizationOptions, SignificantLine};
pub use token::{Token, TokenKind};
