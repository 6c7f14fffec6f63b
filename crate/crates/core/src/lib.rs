//! Grammar-pattern analysis for source code identifiers.
//!
//! The pipeline mirrors how identifier names are studied in practice:
//!
//! 1. [`ingest`] scans a C/C++/Java source tree and extracts class, function,
//!    parameter, attribute and declaration-statement names with their types.
//! 2. [`split`] breaks each name into word tokens (`GetUserToken` becomes
//!    `Get User Token`) while keeping domain terms such as `IPV4` whole.
//! 3. [`tagger`] assigns one reduced part-of-speech tag per token, using a
//!    built-in heuristic tagger, an external Penn Treebank tagger behind a
//!    line protocol, or a strength-weighted ensemble of both.
//! 4. [`analysis`], [`gold`] and [`lint`] consume the resulting grammar
//!    patterns: frequency reports, accuracy against human annotations, and
//!    naming suggestions.
//!
//! The tag vocabulary lives in [`tagset`].

pub mod analysis;
pub mod dictionary;
pub mod gold;
pub mod ingest;
pub mod lint;
pub mod split;
pub mod tagger;
pub mod tagset;

pub use ingest::{Category, Identifier, IdentifierSet, Language, ScanConfig};
pub use split::{split, SplitIdentifier, Splitter};
pub use tagset::{GrammarPattern, PennTag, PosTag};
