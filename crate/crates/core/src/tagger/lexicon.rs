//! Word lists and surface morphology used by the heuristic tagger.
//!
//! The verb lexicon ships in `data/verbs.txt` (one word per line, `#`
//! comments). See that file for its provenance.

use std::collections::HashSet;
use std::sync::LazyLock;

use crate::tagset::PosTag;

static VERBS: LazyLock<HashSet<&'static str>> =
    LazyLock::new(|| word_lines(include_str!("../../data/verbs.txt")).collect());

const AUXILIARIES: &[&str] = &[
    "is", "are", "was", "were", "be", "been", "being", "has", "have", "had", "do", "does", "did",
    "can", "could", "should", "would", "will", "shall", "may", "might", "must",
];

const PREPOSITIONS: &[&str] = &[
    "about", "above", "across", "after", "against", "along", "among", "around", "as", "at",
    "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "despite",
    "during", "for", "from", "in", "inside", "into", "near", "of", "on", "onto", "outside", "over",
    "per", "through", "to", "toward", "towards", "under", "until", "upon", "via", "with", "within",
    "without",
];

const DETERMINERS: &[&str] = &[
    "the", "this", "that", "these", "those", "which", "a", "an", "all", "any", "each", "every",
    "some", "both", "either", "neither", "another",
];

const CONJUNCTIONS: &[&str] = &["and", "or", "nor", "but", "yet"];

// "i" is left out: as a token it is nearly always a loop index.
const PRONOUNS: &[&str] = &[
    "me",
    "you",
    "he",
    "she",
    "him",
    "her",
    "it",
    "we",
    "us",
    "they",
    "them",
    "my",
    "your",
    "our",
    "their",
    "his",
    "its",
    "itself",
    "myself",
    "yourself",
    "themselves",
];

const IRREGULAR_PLURALS: &[&str] = &[
    "indices",
    "vertices",
    "matrices",
    "appendices",
    "children",
    "data",
    "people",
    "men",
    "women",
    "criteria",
    "media",
    "feet",
    "teeth",
    "mice",
    "geese",
    "radii",
    "phenomena",
    "axes",
    "analyses",
    "bases",
    "crises",
    "theses",
    "leaves",
    "lives",
    "knives",
    "halves",
];

// Words ending in a lone "s" that are not plural nouns.
const NOT_PLURAL: &[&str] = &[
    "this",
    "its",
    "his",
    "has",
    "was",
    "does",
    "yes",
    "plus",
    "minus",
    "bias",
    "alias",
    "canvas",
    "atlas",
    "lens",
    "gas",
    "contains",
    "equals",
    "exists",
    "belongs",
    "allows",
    "requires",
    "includes",
    "supports",
    "accepts",
    "implements",
    "extends",
    "intersects",
    "overlaps",
    "always",
    "perhaps",
    "whereas",
    "unless",
    "towards",
    "afterwards",
    "besides",
    "news",
    "physics",
    "mathematics",
    "maths",
    "thanks",
    "ios",
    "macos",
    "gps",
    "dns",
    "https",
    "sms",
    "os",
    "ms",
    "ns",
    "us",
    "kbps",
    "mbps",
    "fps",
    "rgbs",
];

fn word_lines(text: &'static str) -> impl Iterator<Item = &'static str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// True for tokens made only of ASCII digits.
pub fn is_digits(token: &str) -> bool {
    !token.is_empty() && token.bytes().all(|b| b.is_ascii_digit())
}

/// Plural-noun surface check: a known irregular plural, or an alphabetic
/// word ending in `s` that does not end in `ss`, `us` or `is`.
pub fn is_plural(token: &str) -> bool {
    let lower = token.to_lowercase();
    if IRREGULAR_PLURALS.contains(&lower.as_str()) {
        return true;
    }
    if lower.chars().count() < 3 || !lower.chars().all(char::is_alphabetic) {
        return false;
    }
    if NOT_PLURAL.contains(&lower.as_str()) {
        return false;
    }
    lower.ends_with('s')
        && !lower.ends_with("ss")
        && !lower.ends_with("us")
        && !lower.ends_with("is")
}

pub fn is_verb(token: &str) -> bool {
    VERBS.contains(token.to_lowercase().as_str())
}

pub fn is_auxiliary(token: &str) -> bool {
    AUXILIARIES.contains(&token.to_lowercase().as_str())
}

/// Tag for prepositions, determiners, conjunctions and pronouns.
pub fn closed_class_tag(token: &str) -> Option<PosTag> {
    let lower = token.to_lowercase();
    let w = lower.as_str();
    if PREPOSITIONS.contains(&w) {
        Some(PosTag::P)
    } else if DETERMINERS.contains(&w) {
        Some(PosTag::DT)
    } else if CONJUNCTIONS.contains(&w) {
        Some(PosTag::CJ)
    } else if PRONOUNS.contains(&w) {
        Some(PosTag::PR)
    } else {
        None
    }
}

/// Number of entries in the bundled verb lexicon.
pub fn verb_count() -> usize {
    VERBS.len()
}
