//! The reduced part-of-speech tagset, grammar patterns, and the mapping from
//! Penn Treebank annotations onto the reduced set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::Category;

/// One of the eleven reduced part-of-speech tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PosTag {
    /// Noun.
    N,
    /// Determiner.
    DT,
    /// Conjunction.
    CJ,
    /// Preposition.
    P,
    /// Plural noun.
    NPL,
    /// Noun modifier: adjective or noun adjunct.
    NM,
    /// Verb.
    V,
    /// Verb modifier (adverb).
    VM,
    /// Pronoun.
    PR,
    /// Digit.
    D,
    /// Preamble.
    PRE,
}

impl PosTag {
    pub const ALL: [PosTag; 11] = [
        PosTag::N,
        PosTag::DT,
        PosTag::CJ,
        PosTag::P,
        PosTag::NPL,
        PosTag::NM,
        PosTag::V,
        PosTag::VM,
        PosTag::PR,
        PosTag::D,
        PosTag::PRE,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::N => "N",
            PosTag::DT => "DT",
            PosTag::CJ => "CJ",
            PosTag::P => "P",
            PosTag::NPL => "NPL",
            PosTag::NM => "NM",
            PosTag::V => "V",
            PosTag::VM => "VM",
            PosTag::PR => "PR",
            PosTag::D => "D",
            PosTag::PRE => "PRE",
        }
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown part-of-speech tag `{0}`")]
pub struct UnknownTag(pub String);

impl FromStr for PosTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl Serialize for PosTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PosTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered, non-empty tag sequence: one tag per identifier token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrammarPattern(Vec<PosTag>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("empty grammar pattern")]
    Empty,
    #[error(transparent)]
    UnknownTag(#[from] UnknownTag),
}

impl GrammarPattern {
    pub fn new(tags: Vec<PosTag>) -> Result<Self, PatternError> {
        if tags.is_empty() {
            Err(PatternError::Empty)
        } else {
            Ok(GrammarPattern(tags))
        }
    }

    pub fn tags(&self) -> &[PosTag] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; patterns are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> PosTag {
        self.0[0]
    }

    pub fn last(&self) -> PosTag {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, tag: PosTag) -> bool {
        self.0.contains(&tag)
    }
}

impl From<GrammarPattern> for Vec<PosTag> {
    fn from(p: GrammarPattern) -> Self {
        p.0
    }
}

/// Parse whitespace-separated tag abbreviations, e.g. `NM NM N`.
pub fn parse_pattern(text: &str) -> Result<GrammarPattern, PatternError> {
    let tags = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<PosTag>, _>>()?;
    GrammarPattern::new(tags)
}

/// Canonical text form: single-space-separated abbreviations.
pub fn format_pattern(pattern: &GrammarPattern) -> String {
    pattern.to_string()
}

impl fmt::Display for GrammarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tag) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(tag.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for GrammarPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

impl Serialize for GrammarPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GrammarPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The Penn Treebank annotations the mapping table covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PennTag {
    CC,
    CD,
    DT,
    FW,
    IN,
    JJ,
    JJR,
    JJS,
    LS,
    MD,
    NN,
    NNP,
    NNPS,
    NNS,
    PRP,
    PRPS,
    RB,
    RBR,
    RP,
    SYM,
    TO,
    VB,
    VBD,
    VBG,
    VBN,
    VBP,
    VBZ,
}

impl PennTag {
    pub const ALL: [PennTag; 27] = [
        PennTag::CC,
        PennTag::CD,
        PennTag::DT,
        PennTag::FW,
        PennTag::IN,
        PennTag::JJ,
        PennTag::JJR,
        PennTag::JJS,
        PennTag::LS,
        PennTag::MD,
        PennTag::NN,
        PennTag::NNP,
        PennTag::NNPS,
        PennTag::NNS,
        PennTag::PRP,
        PennTag::PRPS,
        PennTag::RB,
        PennTag::RBR,
        PennTag::RP,
        PennTag::SYM,
        PennTag::TO,
        PennTag::VB,
        PennTag::VBD,
        PennTag::VBG,
        PennTag::VBN,
        PennTag::VBP,
        PennTag::VBZ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PennTag::CC => "CC",
            PennTag::CD => "CD",
            PennTag::DT => "DT",
            PennTag::FW => "FW",
            PennTag::IN => "IN",
            PennTag::JJ => "JJ",
            PennTag::JJR => "JJR",
            PennTag::JJS => "JJS",
            PennTag::LS => "LS",
            PennTag::MD => "MD",
            PennTag::NN => "NN",
            PennTag::NNP => "NNP",
            PennTag::NNPS => "NNPS",
            PennTag::NNS => "NNS",
            PennTag::PRP => "PRP",
            PennTag::PRPS => "PRP$",
            PennTag::RB => "RB",
            PennTag::RBR => "RBR",
            PennTag::RP => "RP",
            PennTag::SYM => "SYM",
            PennTag::TO => "TO",
            PennTag::VB => "VB",
            PennTag::VBD => "VBD",
            PennTag::VBG => "VBG",
            PennTag::VBN => "VBN",
            PennTag::VBP => "VBP",
            PennTag::VBZ => "VBZ",
        }
    }
}

impl fmt::Display for PennTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown Penn Treebank tag `{0}`")]
pub struct UnknownPennTag(pub String);

impl FromStr for PennTag {
    type Err = UnknownPennTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PennTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownPennTag(s.to_string()))
    }
}

/// Map a Penn tag onto the reduced set. Past tense and participle forms are
/// verbs inside function names and noun modifiers everywhere else.
pub fn map_penn_tag(tag: PennTag, category: Category) -> PosTag {
    use PennTag::*;
    match tag {
        CC => PosTag::CJ,
        CD => PosTag::D,
        DT => PosTag::DT,
        FW | LS | NN | NNP | SYM => PosTag::N,
        IN | TO => PosTag::P,
        JJ | JJR | JJS => PosTag::NM,
        NNS | NNPS => PosTag::NPL,
        PRP | PRPS => PosTag::PR,
        RB | RBR | RP => PosTag::VM,
        MD | VB | VBP | VBZ => PosTag::V,
        VBD | VBG | VBN => {
            if category == Category::Function {
                PosTag::V
            } else {
                PosTag::NM
            }
        }
    }
}

/// Real Penn tags outside the mapping table. They are folded into N.
const UNTABLED_PENN: &[&str] = &[
    "EX", "PDT", "POS", "RBS", "UH", "WDT", "WP", "WP$", "WRB", "NIL",
];

/// Outcome of mapping free-form tag text from an external tagger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappedLabel {
    Tabled(PosTag),
    /// A genuine Penn tag with no table row; mapped to N.
    Fallback(PosTag),
}

impl MappedLabel {
    pub fn tag(self) -> PosTag {
        match self {
            MappedLabel::Tabled(t) | MappedLabel::Fallback(t) => t,
        }
    }
}

/// Map tag text. Untabled Penn tags fall back to N (logged); anything else
/// is an error rather than a silent coercion.
pub fn map_penn_label(label: &str, category: Category) -> Result<MappedLabel, UnknownPennTag> {
    if let Ok(tag) = label.parse::<PennTag>() {
        return Ok(MappedLabel::Tabled(map_penn_tag(tag, category)));
    }
    if UNTABLED_PENN.contains(&label) {
        log::warn!("Penn tag {label} has no mapping row; using N");
        return Ok(MappedLabel::Fallback(PosTag::N));
    }
    Err(UnknownPennTag(label.to_string()))
}
