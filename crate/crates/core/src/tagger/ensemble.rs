//! Strength-weighted per-token ensemble.

use serde::{Deserialize, Serialize};

use crate::tagset::{GrammarPattern, PosTag};

use super::lexicon::is_plural;
use super::{joined, StrengthTable, TagContext, TagError, Tagger};

/// One tagger's tag for one token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagProposal {
    pub index: usize,
    pub tag: PosTag,
    pub source: String,
}

/// Choose one proposal per token: the one whose (source, tag) weight is
/// highest, except that a plural-looking token takes an `NPL` proposal over
/// a winning `N`. Equal weights go to the source listed first in
/// `priority`; unlisted sources rank after listed ones, by name.
pub fn ensemble_tag(
    tokens: &[String],
    proposals: &[Vec<TagProposal>],
    table: &StrengthTable,
    priority: &[String],
) -> Result<GrammarPattern, TagError> {
    let rank = |source: &str| {
        priority
            .iter()
            .position(|p| p == source)
            .unwrap_or(priority.len())
    };
    let mut tags = Vec::with_capacity(tokens.len());
    for (index, token) in tokens.iter().enumerate() {
        let candidates = proposals.get(index).map(Vec::as_slice).unwrap_or(&[]);
        let best = candidates
            .iter()
            .max_by(|a, b| {
                let wa = table.get(&a.source, a.tag);
                let wb = table.get(&b.source, b.tag);
                wa.total_cmp(&wb)
                    .then_with(|| rank(&b.source).cmp(&rank(&a.source)))
                    .then_with(|| b.source.cmp(&a.source))
            })
            .ok_or_else(|| TagError::NoProposals {
                identifier: joined(tokens),
                index,
            })?;
        let mut tag = best.tag;
        if tag == PosTag::N && is_plural(token) && candidates.iter().any(|p| p.tag == PosTag::NPL) {
            tag = PosTag::NPL;
        }
        tags.push(tag);
    }
    GrammarPattern::new(tags).map_err(|_| TagError::NoProposals {
        identifier: String::new(),
        index: 0,
    })
}

/// Runs each member tagger and merges their patterns with [`ensemble_tag`].
/// Member order doubles as the tie-break priority.
pub struct EnsembleTagger {
    members: Vec<Box<dyn Tagger + Send>>,
    table: StrengthTable,
    priority: Vec<String>,
}

impl EnsembleTagger {
    pub fn new(members: Vec<Box<dyn Tagger + Send>>, table: StrengthTable) -> Self {
        let priority = members.iter().map(|m| m.id().to_string()).collect();
        EnsembleTagger {
            members,
            table,
            priority,
        }
    }

    pub fn with_priority(mut self, priority: Vec<String>) -> Self {
        self.priority = priority;
        self
    }
}

impl Tagger for EnsembleTagger {
    fn id(&self) -> &str {
        "ensemble"
    }

    fn tag(&mut self, tokens: &[String], ctx: &TagContext<'_>) -> Result<GrammarPattern, TagError> {
        let mut proposals: Vec<Vec<TagProposal>> = vec![Vec::new(); tokens.len()];
        for member in &mut self.members {
            let pattern = member.tag(tokens, ctx)?;
            if pattern.len() != tokens.len() {
                return Err(TagError::Alignment {
                    identifier: joined(tokens),
                    expected: tokens.len(),
                    got: pattern.len(),
                });
            }
            for (index, &tag) in pattern.tags().iter().enumerate() {
                proposals[index].push(TagProposal {
                    index,
                    tag,
                    source: member.id().to_string(),
                });
            }
        }
        ensemble_tag(tokens, &proposals, &self.table, &self.priority)
    }
}
