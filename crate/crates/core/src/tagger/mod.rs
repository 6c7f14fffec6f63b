//! Taggers that turn split identifiers into grammar patterns.
//!
//! * [`HeuristicTagger`]: rule-based, driven by the bundled verb lexicon,
//!   closed-class word lists, surface plural morphology, and per-system
//!   preamble lexicons.
//! * [`ExternalTagger`]: any Penn Treebank tagger behind a line protocol,
//!   with the "+I" trick for function names.
//! * [`EnsembleTagger`]: per-token selection among member taggers weighted
//!   by a [`StrengthTable`].

mod ensemble;
mod external;
mod heuristic;
pub mod lexicon;
mod preamble;
mod strength;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{Category, Identifier, TypeClassifier};
use crate::split::{SplitError, Splitter};
use crate::tagset::{GrammarPattern, UnknownPennTag};

pub use ensemble::{ensemble_tag, EnsembleTagger, TagProposal};
pub use external::{
    external_tag, parse_response, AdapterError, PennAdapter, ProcessAdapter, ADAPTER_ENV,
};
pub use heuristic::{heuristic_tag, HeuristicTagger};
pub use preamble::{
    detect_preambles, PreambleConfig, PreambleError, PreambleLexicon, DEFAULT_ALLOWLIST,
    DEFAULT_HUNGARIAN,
};
pub use strength::{StrengthError, StrengthTable};

pub use external::ExternalTagger;

/// What a tagger may know about an identifier besides its tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TagContext<'a> {
    pub category: Category,
    pub boolean: bool,
    pub collection: bool,
    pub system: &'a str,
}

impl<'a> TagContext<'a> {
    pub fn new(category: Category) -> Self {
        TagContext {
            category,
            boolean: false,
            collection: false,
            system: "",
        }
    }

    pub fn for_identifier(ident: &'a Identifier, classifier: &TypeClassifier) -> Self {
        TagContext {
            category: ident.category,
            boolean: classifier.is_boolean(ident),
            collection: classifier.is_collection(ident),
            system: &ident.system,
        }
    }
}

#[derive(Debug, Error)]
pub enum TagError {
    #[error("tagger adapter failed on `{identifier}`: {source}")]
    Adapter {
        identifier: String,
        #[source]
        source: AdapterError,
    },
    #[error("tagger returned {got} tags for {expected} tokens of `{identifier}`")]
    Alignment {
        identifier: String,
        expected: usize,
        got: usize,
    },
    #[error("tagger returned an unmappable tag for `{identifier}`: {source}")]
    UnknownTag {
        identifier: String,
        #[source]
        source: UnknownPennTag,
    },
    #[error("no tag proposals for token {index} of `{identifier}`")]
    NoProposals { identifier: String, index: usize },
    #[error(transparent)]
    Split(#[from] SplitError),
}

/// A source of grammar patterns.
pub trait Tagger {
    /// Label recorded on outputs and used as the strength-table key.
    fn id(&self) -> &str;

    fn tag(&mut self, tokens: &[String], ctx: &TagContext<'_>) -> Result<GrammarPattern, TagError>;
}

/// An identifier with its tokens and the pattern one tagger assigned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotated {
    #[serde(flatten)]
    pub identifier: Identifier,
    pub tokens: Vec<String>,
    pub pattern: GrammarPattern,
    pub tagger: String,
}

/// Split and tag every identifier, preserving input order.
pub fn annotate_all(
    identifiers: &[Identifier],
    splitter: &Splitter,
    classifier: &TypeClassifier,
    tagger: &mut dyn Tagger,
) -> Result<Vec<Annotated>, TagError> {
    identifiers
        .iter()
        .map(|ident| {
            let tokens = splitter.split(&ident.name)?;
            let ctx = TagContext::for_identifier(ident, classifier);
            let pattern = tagger.tag(&tokens, &ctx)?;
            Ok(Annotated {
                identifier: ident.clone(),
                tokens,
                pattern,
                tagger: tagger.id().to_string(),
            })
        })
        .collect()
}

/// Parse an annotated JSONL stream; the error carries the 1-based line.
pub fn read_annotated_jsonl(text: &str) -> Result<Vec<Annotated>, (usize, String)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let a: Annotated = serde_json::from_str(line).map_err(|e| (i + 1, e.to_string()))?;
        if a.tokens.len() != a.pattern.len() {
            return Err((
                i + 1,
                format!(
                    "{} tokens but {} tags for `{}`",
                    a.tokens.len(),
                    a.pattern.len(),
                    a.identifier.name
                ),
            ));
        }
        out.push(a);
    }
    Ok(out)
}

pub(crate) fn joined(tokens: &[String]) -> String {
    tokens.join(" ")
}
