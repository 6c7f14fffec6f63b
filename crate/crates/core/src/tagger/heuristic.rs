//! Rule-based tagger.
//!
//! Rules, in priority order, for token `i` of `n`:
//!
//! 1. all digits → `D`
//! 2. part of the leading run of preamble tokens (never the head) → `PRE`
//! 3. a closed-class word in a multi-word name, not at the head → `P`,
//!    `DT`, `CJ` or `PR`
//! 4. the head with plural morphology → `NPL` (optionally any plural token)
//! 5. the first non-preamble token of a function or boolean name, if it is
//!    in the verb lexicon → `V`; an auxiliary verb passes the verb reading on
//!    to a following lexicon verb (`should draw border` → `V V N`)
//! 6. the head → `N`, everything else → `NM`
//! 7. a modifier right before a `P` or `CJ` heads its own phrase → `N`,
//!    or `NPL` when plural (`index by name` → `N P N`)
//!
//! The head is the last token that is not all digits, so `event 0` is
//! `N D`.

use crate::tagset::{GrammarPattern, PosTag};

use super::lexicon::{closed_class_tag, is_auxiliary, is_digits, is_plural, is_verb};
use super::{PreambleLexicon, TagContext, TagError, Tagger};

/// Tag `tokens` with the heuristic rules.
pub fn heuristic_tag(
    tokens: &[String],
    ctx: &TagContext<'_>,
    preambles: &PreambleLexicon,
    interior_plurals: bool,
) -> GrammarPattern {
    assert!(!tokens.is_empty(), "heuristic_tag needs at least one token");
    let n = tokens.len();
    let head = tokens.iter().rposition(|t| !is_digits(t));
    let verb_eligible = ctx.category == crate::Category::Function || ctx.boolean;

    let mut tags = Vec::with_capacity(n);
    let mut in_preamble = true;
    let mut verb_slot_used = false;
    for (i, token) in tokens.iter().enumerate() {
        let is_head = Some(i) == head;
        let tag = if is_digits(token) {
            PosTag::D
        } else if in_preamble && !is_head && preambles.is_preamble(ctx.system, token) {
            PosTag::PRE
        } else {
            in_preamble = false;
            let closed = if n > 1 && !is_head {
                closed_class_tag(token)
            } else {
                None
            };
            let first_slot = !verb_slot_used;
            verb_slot_used = true;
            let chained = i > 0
                && !is_head
                && tags.last() == Some(&PosTag::V)
                && is_auxiliary(&tokens[i - 1]);
            if let Some(c) = closed {
                c
            } else if (is_head || interior_plurals) && is_plural(token) {
                PosTag::NPL
            } else if verb_eligible && (first_slot || chained) && is_verb(token) {
                PosTag::V
            } else if is_head {
                PosTag::N
            } else {
                PosTag::NM
            }
        };
        tags.push(tag);
    }
    for i in 0..n.saturating_sub(1) {
        if tags[i] == PosTag::NM && matches!(tags[i + 1], PosTag::P | PosTag::CJ) {
            tags[i] = if is_plural(&tokens[i]) {
                PosTag::NPL
            } else {
                PosTag::N
            };
        }
    }
    GrammarPattern::new(tags).expect("non-empty")
}

/// [`heuristic_tag`] bundled with its lexicon.
#[derive(Debug, Clone, Default)]
pub struct HeuristicTagger {
    pub preambles: PreambleLexicon,
    pub interior_plurals: bool,
}

impl HeuristicTagger {
    pub fn new(preambles: PreambleLexicon) -> Self {
        HeuristicTagger {
            preambles,
            interior_plurals: false,
        }
    }
}

impl Tagger for HeuristicTagger {
    fn id(&self) -> &str {
        "heuristic"
    }

    fn tag(&mut self, tokens: &[String], ctx: &TagContext<'_>) -> Result<GrammarPattern, TagError> {
        Ok(heuristic_tag(
            tokens,
            ctx,
            &self.preambles,
            self.interior_plurals,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Category;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    fn tag(s: &str, category: Category, boolean: bool, collection: bool) -> String {
        let ctx = TagContext {
            category,
            boolean,
            collection,
            system: "sys",
        };
        heuristic_tag(&toks(s), &ctx, &PreambleLexicon::default(), false).to_string()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            tag(
                "tile list head",
                Category::DeclarationStatement,
                false,
                false
            ),
            "NM NM N"
        );
        assert_eq!(
            tag("get user token", Category::Function, false, false),
            "V NM N"
        );
        assert_eq!(tag("num cols", Category::Attribute, false, true), "NM NPL");
        assert_eq!(
            tag(
                "is first frame",
                Category::DeclarationStatement,
                true,
                false
            ),
            "V NM N"
        );
        assert_eq!(
            tag("msg", Category::DeclarationStatement, false, false),
            "N"
        );
        assert_eq!(tag("g assert", Category::Function, false, false), "PRE V");
    }

    #[test]
    fn digits_and_heads() {
        assert_eq!(tag("event 0", Category::Attribute, false, false), "N D");
        assert_eq!(tag("2", Category::Attribute, false, false), "D");
        assert_eq!(tag("vec 3 d", Category::Attribute, false, false), "NM D N");
    }

    #[test]
    fn verbs_need_function_or_boolean_context() {
        assert_eq!(
            tag("draw border", Category::Attribute, false, false),
            "NM N"
        );
        assert_eq!(tag("draw border", Category::Function, false, false), "V N");
        assert_eq!(
            tag("should draw border", Category::Function, false, false),
            "V V N"
        );
        assert_eq!(tag("deep stub", Category::Function, false, false), "NM N");
        assert_eq!(tag("run", Category::Function, false, false), "V");
        assert_eq!(tag("frame", Category::Attribute, true, false), "N");
    }

    #[test]
    fn closed_class_words() {
        assert_eq!(
            tag("get path for user", Category::Function, false, false),
            "V N P N"
        );
        assert_eq!(
            tag("tile index by name", Category::Attribute, false, false),
            "NM N P N"
        );
        assert_eq!(
            tag("items or nodes", Category::Attribute, false, false),
            "NPL CJ NPL"
        );
        assert_eq!(
            tag("convert to string", Category::Function, false, false),
            "V P N"
        );
        assert_eq!(tag("all", Category::Attribute, false, false), "N");
    }

    #[test]
    fn hungarian_and_detected_preambles() {
        let mut lex = PreambleLexicon::default();
        lex.add_system_preamble("grpc", "grpc").unwrap();
        let ctx = TagContext {
            category: Category::Attribute,
            boolean: false,
            collection: false,
            system: "grpc",
        };
        let p = |s: &str| heuristic_tag(&toks(s), &ctx, &lex, false).to_string();
        assert_eq!(p("grpc json writer"), "PRE NM N");
        assert_eq!(p("m count"), "PRE N");
        assert_eq!(p("m"), "N");
        assert_eq!(p("count m"), "NM N");
        let other = TagContext {
            system: "other",
            ..ctx
        };
        assert_eq!(
            heuristic_tag(&toks("grpc json writer"), &other, &lex, false).to_string(),
            "NM NM N"
        );
    }

    #[test]
    fn interior_plurals_flag() {
        let ctx = TagContext::new(Category::Attribute);
        let lex = PreambleLexicon::default();
        assert_eq!(
            heuristic_tag(&toks("items count"), &ctx, &lex, false).to_string(),
            "NM N"
        );
        assert_eq!(
            heuristic_tag(&toks("items count"), &ctx, &lex, true).to_string(),
            "NPL N"
        );
    }
}
