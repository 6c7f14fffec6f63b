//! Pattern frequency reports and semantic cross-tabulations.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::dictionary::WordList;
use crate::gold::Ratio;
use crate::ingest::{Category, Language, TypeClassifier};
use crate::tagger::lexicon::is_digits;
use crate::tagger::Annotated;
use crate::tagset::PosTag;

/// How identifiers are grouped before counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GroupBy {
    #[default]
    All,
    Category,
    Language,
    CategoryAndLanguage,
}

impl std::str::FromStr for GroupBy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" | "none" => Ok(GroupBy::All),
            "category" => Ok(GroupBy::Category),
            "language" => Ok(GroupBy::Language),
            "category-language" | "category,language" => Ok(GroupBy::CategoryAndLanguage),
            _ => Err(format!("unknown grouping `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternCount {
    pub pattern: String,
    pub count: usize,
    pub share: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupFrequencies {
    pub category: Option<Category>,
    pub language: Option<Language>,
    pub total: usize,
    /// Count descending, then pattern text ascending.
    pub patterns: Vec<PatternCount>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct FrequencyReport {
    pub groups: Vec<GroupFrequencies>,
}

fn ranked(counts: HashMap<String, usize>) -> Vec<(String, usize)> {
    let mut v: Vec<(String, usize)> = counts.into_iter().collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    v
}

/// Count canonical pattern texts per group.
pub fn pattern_frequencies(annotated: &[Annotated], group_by: GroupBy) -> FrequencyReport {
    type Key = (Option<Category>, Option<Language>);
    let mut groups: BTreeMap<Key, HashMap<String, usize>> = BTreeMap::new();
    for a in annotated {
        let id = &a.identifier;
        let key = match group_by {
            GroupBy::All => (None, None),
            GroupBy::Category => (Some(id.category), None),
            GroupBy::Language => (None, Some(id.language)),
            GroupBy::CategoryAndLanguage => (Some(id.category), Some(id.language)),
        };
        *groups
            .entry(key)
            .or_default()
            .entry(a.pattern.to_string())
            .or_insert(0) += 1;
    }
    let groups = groups
        .into_iter()
        .map(|((category, language), counts)| {
            let total: usize = counts.values().sum();
            let patterns = ranked(counts)
                .into_iter()
                .map(|(pattern, count)| PatternCount {
                    pattern,
                    count,
                    share: count as f64 / total as f64,
                })
                .collect();
            GroupFrequencies {
                category,
                language,
                total,
                patterns,
            }
        })
        .collect();
    FrequencyReport { groups }
}

impl FrequencyReport {
    pub fn group(
        &self,
        category: Option<Category>,
        language: Option<Language>,
    ) -> Option<&GroupFrequencies> {
        self.groups
            .iter()
            .find(|g| g.category == category && g.language == language)
    }

    /// `category,language,pattern,count,share_pct`; share to one decimal.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("category,language,pattern,count,share_pct\n");
        for g in &self.groups {
            let cat = g.category.map(|c| c.as_str()).unwrap_or("all");
            let lang = g.language.map(|l| l.as_str()).unwrap_or("all");
            for p in &g.patterns {
                let _ = writeln!(
                    out,
                    "{cat},{lang},{},{},{:.1}",
                    p.pattern,
                    p.count,
                    p.share * 100.0
                );
            }
        }
        out
    }
}

/// Pattern counts across all groups, largest first, singletons included.
pub fn distribution(report: &FrequencyReport) -> Vec<(String, usize)> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for g in &report.groups {
        for p in &g.patterns {
            *counts.entry(p.pattern.clone()).or_insert(0) += p.count;
        }
    }
    ranked(counts)
}

pub fn distribution_csv(series: &[(String, usize)]) -> String {
    let mut out = String::from("pattern,count\n");
    for (p, c) in series {
        let _ = writeln!(out, "{p},{c}");
    }
    out
}

/// Shape of a frequency series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LongTail {
    pub unique_patterns: usize,
    pub identifiers: usize,
    pub singletons: usize,
    pub at_least_five: usize,
    /// Share of identifiers covered by the most frequent 10% of patterns.
    pub top_decile_share: Option<f64>,
}

pub fn long_tail(series: &[(String, usize)]) -> LongTail {
    let identifiers: usize = series.iter().map(|(_, c)| c).sum();
    let top = series.len().div_ceil(10);
    let top_mass: usize = series.iter().take(top).map(|(_, c)| c).sum();
    LongTail {
        unique_patterns: series.len(),
        identifiers,
        singletons: series.iter().filter(|(_, c)| *c == 1).count(),
        at_least_five: series.iter().filter(|(_, c)| *c >= 5).count(),
        top_decile_share: Ratio::new(top_mass, identifiers).value(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossTabRow {
    pub category: Category,
    pub count_a: usize,
    pub count_b: usize,
    pub count_both: usize,
    /// Percentage of A that is also B; `None` when there is no A.
    pub pct_b_given_a: Option<f64>,
    /// Percentage of B that is also A; `None` when there is no B.
    pub pct_a_given_b: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossTab {
    pub a: &'static str,
    pub b: &'static str,
    pub rows: Vec<CrossTabRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl CrossTab {
    pub fn row(&self, category: Category) -> Option<&CrossTabRow> {
        self.rows.iter().find(|r| r.category == category)
    }

    pub fn to_csv(&self) -> String {
        let fmt = |p: Option<f64>| p.map(|v| format!("{v:.1}")).unwrap_or_else(|| "N/A".into());
        let (a, b) = (self.a, self.b);
        let mut out = format!("category,{a},{b},{a}_and_{b},pct_{b}_given_{a},pct_{a}_given_{b}\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.category,
                r.count_a,
                r.count_b,
                r.count_both,
                fmt(r.pct_b_given_a),
                fmt(r.pct_a_given_b)
            );
        }
        out
    }
}

fn cross_tab<FA, FB>(
    annotated: &[Annotated],
    categories: &[Category],
    a: &'static str,
    b: &'static str,
    pred_a: FA,
    pred_b: FB,
) -> CrossTab
where
    FA: Fn(&Annotated) -> bool,
    FB: Fn(&Annotated) -> bool,
{
    let rows = categories
        .iter()
        .map(|&category| {
            let (mut ca, mut cb, mut both) = (0, 0, 0);
            for x in annotated
                .iter()
                .filter(|x| x.identifier.category == category)
            {
                let (ia, ib) = (pred_a(x), pred_b(x));
                ca += usize::from(ia);
                cb += usize::from(ib);
                both += usize::from(ia && ib);
            }
            CrossTabRow {
                category,
                count_a: ca,
                count_b: cb,
                count_both: both,
                pct_b_given_a: Ratio::new(both, ca).percent(),
                pct_a_given_b: Ratio::new(both, cb).percent(),
            }
        })
        .collect();
    CrossTab {
        a,
        b,
        rows,
        note: None,
    }
}

/// Verb-containing patterns against boolean types (A = verb, B = boolean).
pub fn verb_boolean_stats(annotated: &[Annotated], classifier: &TypeClassifier) -> CrossTab {
    cross_tab(
        annotated,
        &[
            Category::Parameter,
            Category::DeclarationStatement,
            Category::Attribute,
        ],
        "verb",
        "boolean",
        |x| x.pattern.contains(PosTag::V),
        |x| classifier.is_boolean(&x.identifier),
    )
}

/// Collection types against plural-ending patterns (A = collection,
/// B = plural). Collection types come from a keyword scan and are not
/// hand-verified.
pub fn plural_collection_stats(annotated: &[Annotated], classifier: &TypeClassifier) -> CrossTab {
    let mut t = cross_tab(
        annotated,
        &[
            Category::Parameter,
            Category::DeclarationStatement,
            Category::Attribute,
            Category::Function,
        ],
        "collection",
        "plural",
        |x| classifier.is_collection(&x.identifier),
        |x| x.pattern.last() == PosTag::NPL,
    );
    t.note = Some("collection types detected by keyword scan; not manually verified");
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub struct TokenCounts {
    pub abbreviations: usize,
    pub dictionary_terms: usize,
    pub digits: usize,
}

impl TokenCounts {
    pub fn tokens(&self) -> usize {
        self.abbreviations + self.dictionary_terms + self.digits
    }

    /// Abbreviations per dictionary term.
    pub fn ratio_to_dictionary(&self) -> Option<f64> {
        Ratio::new(self.abbreviations, self.dictionary_terms).value()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbbreviationReport {
    pub by_language: BTreeMap<Language, TokenCounts>,
    pub total: TokenCounts,
}

/// Classify every token as a dictionary term, an abbreviation, or digits.
pub fn abbreviation_stats(annotated: &[Annotated], dictionary: &WordList) -> AbbreviationReport {
    let mut by_language: BTreeMap<Language, TokenCounts> = BTreeMap::new();
    let mut total = TokenCounts::default();
    for a in annotated {
        let c = by_language.entry(a.identifier.language).or_default();
        for token in &a.tokens {
            let slot = if is_digits(token) {
                &mut c.digits
            } else if dictionary.contains(token) {
                &mut c.dictionary_terms
            } else {
                &mut c.abbreviations
            };
            *slot += 1;
        }
    }
    for c in by_language.values() {
        total.abbreviations += c.abbreviations;
        total.dictionary_terms += c.dictionary_terms;
        total.digits += c.digits;
    }
    AbbreviationReport { by_language, total }
}

impl AbbreviationReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "language,abbreviations,dictionary_terms,digits,abbreviation_per_dictionary_pct\n",
        );
        let row = |out: &mut String, name: &str, c: &TokenCounts| {
            let pct = c
                .ratio_to_dictionary()
                .map(|v| format!("{:.1}", v * 100.0))
                .unwrap_or_else(|| "N/A".into());
            let _ = writeln!(
                out,
                "{name},{},{},{},{pct}",
                c.abbreviations, c.dictionary_terms, c.digits
            );
        };
        for (lang, c) in &self.by_language {
            row(&mut out, lang.as_str(), c);
        }
        row(&mut out, "total", &self.total);
        out
    }
}
