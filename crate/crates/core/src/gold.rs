//! Gold annotations and tagger accuracy.
//!
//! Pattern-level accuracy is the share of identifiers whose whole tool
//! pattern equals the gold pattern; word-level accuracy is the share of
//! individual tokens whose tool tag equals the gold tag. An identifier whose
//! tool pattern has a different length from its gold pattern earns no word
//! credit and is listed in the result.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dictionary::WordList;
use crate::ingest::{Category, Identifier, Language};
use crate::tagger::lexicon::is_digits;
use crate::tagger::Annotated;
use crate::tagset::{GrammarPattern, PosTag};

/// One human-annotated identifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldEntry {
    pub identifier: String,
    pub tokens: Vec<String>,
    pub category: Category,
    pub language: Language,
    pub system: String,
    pub pattern: GrammarPattern,
    pub type_name: Option<String>,
    /// Patterns stored by other tools, keyed by column name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tools: BTreeMap<String, GrammarPattern>,
    /// 1-based CSV line the entry came from.
    pub row: usize,
}

impl GoldEntry {
    pub fn to_identifier(&self) -> Identifier {
        Identifier {
            name: self.identifier.clone(),
            category: self.category,
            language: self.language,
            type_name: self.type_name.clone(),
            file: "gold".to_string(),
            line: self.row as u32,
            system: self.system.clone(),
        }
    }

    /// The entry as an annotation carrying the gold pattern.
    pub fn to_annotated(&self) -> Annotated {
        self.annotated_with(self.pattern.clone(), "gold")
    }

    pub fn annotated_with(&self, pattern: GrammarPattern, tagger: &str) -> Annotated {
        Annotated {
            identifier: self.to_identifier(),
            tokens: self.tokens.clone(),
            pattern,
            tagger: tagger.to_string(),
        }
    }
}

/// Header names for the gold columns. Columns outside the mapping become
/// tool columns unless `tools` lists them explicitly. Readable from TOML.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ColumnMapping {
    pub identifier: String,
    pub split: String,
    pub category: String,
    pub language: String,
    pub system: String,
    pub pattern: String,
    pub type_name: String,
    pub tools: Option<Vec<String>>,
}

impl Default for ColumnMapping {
    fn default() -> Self {
        ColumnMapping {
            identifier: "identifier".into(),
            split: "split".into(),
            category: "category".into(),
            language: "language".into(),
            system: "system".into(),
            pattern: "pattern".into(),
            type_name: "type_name".into(),
            tools: None,
        }
    }
}

impl ColumnMapping {
    pub fn from_toml_str(text: &str) -> Result<Self, GoldError> {
        toml::from_str(text).map_err(|e| GoldError::Mapping(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowError {
    pub row: usize,
    pub message: String,
}

impl fmt::Display for RowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {}: {}", self.row, self.message)
    }
}

#[derive(Debug, Error)]
pub enum GoldError {
    #[error("cannot read gold file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("gold file has no header row")]
    NoHeader,
    #[error("gold header lacks required column `{0}`")]
    MissingColumn(String),
    #[error("invalid column mapping: {0}")]
    Mapping(String),
    #[error("{} invalid gold row(s); first: {}", .0.len(), .0[0])]
    Rows(Vec<RowError>),
}

pub fn load_gold(path: &Path, mapping: &ColumnMapping) -> Result<Vec<GoldEntry>, GoldError> {
    let text = std::fs::read_to_string(path).map_err(|e| GoldError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_gold(&text, mapping)
}

pub fn parse_gold(text: &str, mapping: &ColumnMapping) -> Result<Vec<GoldEntry>, GoldError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|_| GoldError::NoHeader)?.clone();
    if headers.is_empty() || headers.iter().all(|h| h.trim().is_empty()) {
        return Err(GoldError::NoHeader);
    }
    let find = |name: &str| headers.iter().position(|h| h.trim() == name);
    let required =
        |name: &str| find(name).ok_or_else(|| GoldError::MissingColumn(name.to_string()));
    let c_ident = required(&mapping.identifier)?;
    let c_split = required(&mapping.split)?;
    let c_cat = required(&mapping.category)?;
    let c_pattern = required(&mapping.pattern)?;
    let c_lang = find(&mapping.language);
    let c_system = find(&mapping.system);
    let c_type = find(&mapping.type_name);
    let known = [
        Some(c_ident),
        Some(c_split),
        Some(c_cat),
        Some(c_pattern),
        c_lang,
        c_system,
        c_type,
    ];
    let tool_cols: Vec<(String, usize)> = match &mapping.tools {
        Some(names) => names
            .iter()
            .map(|n| required(n).map(|c| (n.clone(), c)))
            .collect::<Result<_, _>>()?,
        None => headers
            .iter()
            .enumerate()
            .filter(|(i, h)| !known.contains(&Some(*i)) && !h.trim().is_empty())
            .map(|(i, h)| (h.trim().to_string(), i))
            .collect(),
    };

    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 2;
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                errors.push(RowError {
                    row,
                    message: e.to_string(),
                });
                continue;
            }
        };
        if record.iter().all(|f| f.trim().is_empty()) {
            continue;
        }
        let get = |c: usize| record.get(c).unwrap_or("").trim();
        let opt = |c: Option<usize>| c.map(get).filter(|s| !s.is_empty());
        let mut problems = Vec::new();

        let identifier = get(c_ident).to_string();
        if identifier.is_empty() {
            problems.push("empty identifier".to_string());
        }
        let tokens: Vec<String> = get(c_split)
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if tokens.is_empty() {
            problems.push("empty split".to_string());
        }
        let category = get(c_cat)
            .parse::<Category>()
            .map_err(|e| problems.push(e.to_string()))
            .ok();
        let language = match opt(c_lang) {
            Some(l) => l
                .parse::<Language>()
                .map_err(|e| problems.push(e.to_string()))
                .ok(),
            None => Some(Language::Unknown),
        };
        let pattern = get(c_pattern)
            .parse::<GrammarPattern>()
            .map_err(|e| problems.push(format!("pattern: {e}")))
            .ok();
        if let Some(p) = &pattern {
            if !tokens.is_empty() && p.len() != tokens.len() {
                problems.push(format!("{} tokens but {} tags", tokens.len(), p.len()));
            }
        }
        let mut tools = BTreeMap::new();
        for (name, c) in &tool_cols {
            let cell = get(*c);
            if cell.is_empty() {
                continue;
            }
            match cell.parse::<GrammarPattern>() {
                Ok(p) => {
                    tools.insert(name.clone(), p);
                }
                Err(e) => problems.push(format!("{name}: {e}")),
            }
        }
        match (problems.is_empty(), category, language, pattern) {
            (true, Some(category), Some(language), Some(pattern)) => entries.push(GoldEntry {
                identifier,
                tokens,
                category,
                language,
                system: opt(c_system).unwrap_or("").to_string(),
                pattern,
                type_name: opt(c_type).map(str::to_string),
                tools,
                row,
            }),
            _ => errors.push(RowError {
                row,
                message: problems.join("; "),
            }),
        }
    }
    if errors.is_empty() {
        Ok(entries)
    } else {
        Err(GoldError::Rows(errors))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no tool pattern for gold identifier `{identifier}` (row {row})")]
    Missing { identifier: String, row: usize },
    #[error("{extra} tool patterns beyond the gold set")]
    Extra { extra: usize },
}

/// An exact fraction. `value` is `None` when the denominator is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Ratio {
    pub numerator: usize,
    pub denominator: usize,
}

impl Ratio {
    pub fn new(numerator: usize, denominator: usize) -> Self {
        Ratio {
            numerator,
            denominator,
        }
    }

    pub fn value(&self) -> Option<f64> {
        (self.denominator > 0).then(|| self.numerator as f64 / self.denominator as f64)
    }

    pub fn percent(&self) -> Option<f64> {
        self.value().map(|v| v * 100.0)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Ratio", 3)?;
        st.serialize_field("numerator", &self.numerator)?;
        st.serialize_field("denominator", &self.denominator)?;
        st.serialize_field("value", &self.value())?;
        st.end()
    }
}

fn check_aligned(gold: &[GoldEntry], tool: &[GrammarPattern]) -> Result<(), EvalError> {
    if tool.len() < gold.len() {
        let g = &gold[tool.len()];
        return Err(EvalError::Missing {
            identifier: g.identifier.clone(),
            row: g.row,
        });
    }
    if tool.len() > gold.len() {
        return Err(EvalError::Extra {
            extra: tool.len() - gold.len(),
        });
    }
    Ok(())
}

/// Order tool patterns to match `gold`, looking each up by identifier
/// name.
pub fn align_by_name(
    gold: &[GoldEntry],
    tool: &HashMap<String, GrammarPattern>,
) -> Result<Vec<GrammarPattern>, EvalError> {
    gold.iter()
        .map(|g| {
            tool.get(&g.identifier)
                .cloned()
                .ok_or_else(|| EvalError::Missing {
                    identifier: g.identifier.clone(),
                    row: g.row,
                })
        })
        .collect()
}

/// The patterns a stored tool column holds for every gold entry.
pub fn stored_tool(gold: &[GoldEntry], tool: &str) -> Result<Vec<GrammarPattern>, EvalError> {
    gold.iter()
        .map(|g| {
            g.tools
                .get(tool)
                .cloned()
                .ok_or_else(|| EvalError::Missing {
                    identifier: g.identifier.clone(),
                    row: g.row,
                })
        })
        .collect()
}

/// Identifiers whose whole pattern matches, over all identifiers.
pub fn pattern_accuracy(gold: &[GoldEntry], tool: &[GrammarPattern]) -> Result<Ratio, EvalError> {
    check_aligned(gold, tool)?;
    let hits = gold
        .iter()
        .zip(tool)
        .filter(|(g, t)| g.pattern == **t)
        .count();
    Ok(Ratio::new(hits, gold.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordAccuracy {
    pub ratio: Ratio,
    /// Identifiers whose tool pattern length differs from gold.
    pub length_mismatches: Vec<String>,
}

fn positional_hits(g: &GrammarPattern, t: &GrammarPattern) -> Option<usize> {
    (g.len() == t.len()).then(|| {
        g.tags()
            .iter()
            .zip(t.tags())
            .filter(|(a, b)| a == b)
            .count()
    })
}

/// Matching token tags over all gold tokens.
pub fn word_accuracy(
    gold: &[GoldEntry],
    tool: &[GrammarPattern],
) -> Result<WordAccuracy, EvalError> {
    check_aligned(gold, tool)?;
    let mut hits = 0;
    let mut words = 0;
    let mut length_mismatches = Vec::new();
    for (g, t) in gold.iter().zip(tool) {
        words += g.pattern.len();
        match positional_hits(&g.pattern, t) {
            Some(h) => hits += h,
            None => length_mismatches.push(g.identifier.clone()),
        }
    }
    Ok(WordAccuracy {
        ratio: Ratio::new(hits, words),
        length_mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TagAgreement {
    pub tag: PosTag,
    pub human_count: usize,
    pub tool_agree_count: usize,
    pub pct: Option<f64>,
}

/// For each tag the humans used: how often, and how often the tool agreed.
pub fn per_tag_agreement(
    gold: &[GoldEntry],
    tool: &[GrammarPattern],
) -> Result<Vec<TagAgreement>, EvalError> {
    check_aligned(gold, tool)?;
    let mut human: BTreeMap<PosTag, usize> = BTreeMap::new();
    let mut agree: BTreeMap<PosTag, usize> = BTreeMap::new();
    for (g, t) in gold.iter().zip(tool) {
        let aligned = g.pattern.len() == t.len();
        for (i, &tag) in g.pattern.tags().iter().enumerate() {
            *human.entry(tag).or_insert(0) += 1;
            if aligned && t.tags()[i] == tag {
                *agree.entry(tag).or_insert(0) += 1;
            }
        }
    }
    Ok(PosTag::ALL
        .iter()
        .filter_map(|tag| {
            let h = *human.get(tag)?;
            let a = agree.get(tag).copied().unwrap_or(0);
            Some(TagAgreement {
                tag: *tag,
                human_count: h,
                tool_agree_count: a,
                pct: Ratio::new(a, h).percent(),
            })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Misannotation {
    pub pattern: String,
    pub misses: usize,
    /// Share of all misses in the category.
    pub share: Option<f64>,
}

/// Gold patterns the tool most often got wrong, per category.
pub fn top_misannotated(
    gold: &[GoldEntry],
    tool: &[GrammarPattern],
    k: usize,
) -> Result<BTreeMap<Category, Vec<Misannotation>>, EvalError> {
    check_aligned(gold, tool)?;
    let mut by_cat: BTreeMap<Category, BTreeMap<String, usize>> = BTreeMap::new();
    for (g, t) in gold.iter().zip(tool) {
        if g.pattern != *t {
            *by_cat
                .entry(g.category)
                .or_default()
                .entry(g.pattern.to_string())
                .or_insert(0) += 1;
        }
    }
    Ok(by_cat
        .into_iter()
        .map(|(cat, counts)| {
            let total: usize = counts.values().sum();
            let mut ranked: Vec<(String, usize)> = counts.into_iter().collect();
            ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            let rows = ranked
                .into_iter()
                .take(k)
                .map(|(pattern, misses)| Misannotation {
                    pattern,
                    misses,
                    share: Ratio::new(misses, total).value(),
                })
                .collect();
            (cat, rows)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Breakdown {
    pub pattern_accuracy: Ratio,
    pub word_accuracy: Ratio,
}

/// Word accuracy restricted to dictionary words, abbreviations and digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TokenClassAccuracy {
    pub dictionary: Ratio,
    pub abbreviation: Ratio,
    pub digit: Ratio,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalResult {
    pub tool: String,
    pub identifiers: usize,
    pub words: usize,
    pub pattern_accuracy: Ratio,
    pub word_accuracy: Ratio,
    pub length_mismatches: Vec<String>,
    pub per_tag: Vec<TagAgreement>,
    pub by_category: BTreeMap<Category, Breakdown>,
    pub by_language: BTreeMap<Language, Breakdown>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_token_class: Option<TokenClassAccuracy>,
    pub top_misannotated: BTreeMap<Category, Vec<Misannotation>>,
}

/// Every metric for one tool in one pass.
pub fn evaluate(
    gold: &[GoldEntry],
    tool_name: &str,
    tool: &[GrammarPattern],
    dictionary: Option<&WordList>,
    top_k: usize,
) -> Result<EvalResult, EvalError> {
    let pattern = pattern_accuracy(gold, tool)?;
    let word = word_accuracy(gold, tool)?;

    let mut groups_cat: BTreeMap<Category, (Vec<GoldEntry>, Vec<GrammarPattern>)> = BTreeMap::new();
    let mut groups_lang: BTreeMap<Language, (Vec<GoldEntry>, Vec<GrammarPattern>)> =
        BTreeMap::new();
    for (g, t) in gold.iter().zip(tool) {
        let e = groups_cat.entry(g.category).or_default();
        e.0.push(g.clone());
        e.1.push(t.clone());
        let e = groups_lang.entry(g.language).or_default();
        e.0.push(g.clone());
        e.1.push(t.clone());
    }
    let breakdown =
        |(g, t): (Vec<GoldEntry>, Vec<GrammarPattern>)| -> Result<Breakdown, EvalError> {
            Ok(Breakdown {
                pattern_accuracy: pattern_accuracy(&g, &t)?,
                word_accuracy: word_accuracy(&g, &t)?.ratio,
            })
        };
    let by_category = groups_cat
        .into_iter()
        .map(|(k, v)| breakdown(v).map(|b| (k, b)))
        .collect::<Result<_, _>>()?;
    let by_language = groups_lang
        .into_iter()
        .map(|(k, v)| breakdown(v).map(|b| (k, b)))
        .collect::<Result<_, _>>()?;

    let by_token_class = dictionary.map(|dict| {
        let mut c = TokenClassAccuracy {
            dictionary: Ratio::default(),
            abbreviation: Ratio::default(),
            digit: Ratio::default(),
        };
        for (g, t) in gold.iter().zip(tool) {
            let aligned = g.pattern.len() == t.len() && g.tokens.len() == g.pattern.len();
            for (i, token) in g.tokens.iter().enumerate() {
                let bucket = if is_digits(token) {
                    &mut c.digit
                } else if dict.contains(token) {
                    &mut c.dictionary
                } else {
                    &mut c.abbreviation
                };
                bucket.denominator += 1;
                if aligned && g.pattern.tags()[i] == t.tags()[i] {
                    bucket.numerator += 1;
                }
            }
        }
        c
    });

    Ok(EvalResult {
        tool: tool_name.to_string(),
        identifiers: gold.len(),
        words: word.ratio.denominator,
        pattern_accuracy: pattern,
        word_accuracy: word.ratio,
        length_mismatches: word.length_mismatches,
        per_tag: per_tag_agreement(gold, tool)?,
        by_category,
        by_language,
        by_token_class,
        top_misannotated: top_misannotated(gold, tool, top_k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tagset::parse_pattern;

    const HEADER: &str = "identifier,split,category,language,system,pattern,type_name\n";

    fn entry(name: &str, split: &str, cat: Category, pattern: &str) -> GoldEntry {
        GoldEntry {
            identifier: name.into(),
            tokens: split.split_whitespace().map(String::from).collect(),
            category: cat,
            language: Language::C,
            system: "s".into(),
            pattern: parse_pattern(pattern).unwrap(),
            type_name: None,
            tools: BTreeMap::new(),
            row: 2,
        }
    }

    fn pats(list: &[&str]) -> Vec<GrammarPattern> {
        list.iter().map(|p| parse_pattern(p).unwrap()).collect()
    }

    #[test]
    fn loads_valid_row() {
        let text =
            format!("{HEADER}tile_list_head,tile list head,declaration,C,gimp,NM NM N,GList*\n");
        let gold = parse_gold(&text, &ColumnMapping::default()).unwrap();
        assert_eq!(gold.len(), 1);
        let g = &gold[0];
        assert_eq!(g.tokens, ["tile", "list", "head"]);
        assert_eq!(g.category, Category::DeclarationStatement);
        assert_eq!(g.pattern.to_string(), "NM NM N");
        assert_eq!(g.type_name.as_deref(), Some("GList*"));
        assert_eq!(g.row, 2);
    }

    #[test]
    fn rejects_length_mismatch_with_row_number() {
        let text = format!("{HEADER}a,x y z,attribute,C,s,NM N,\nb,b,attribute,C,s,N,\n");
        match parse_gold(&text, &ColumnMapping::default()) {
            Err(GoldError::Rows(rows)) => {
                assert_eq!(rows.len(), 1);
                assert_eq!(rows[0].row, 2);
                assert!(rows[0].message.contains("3 tokens but 2 tags"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn header_only_is_empty() {
        assert!(parse_gold(HEADER, &ColumnMapping::default())
            .unwrap()
            .is_empty());
        assert!(matches!(
            parse_gold("name,split\n", &ColumnMapping::default()),
            Err(GoldError::MissingColumn(_))
        ));
    }

    #[test]
    fn mapping_and_tool_columns() {
        let text = "Name,Words,Kind,Pattern,posse,swum\nfoo,foo,function,V,N,V\n";
        let mapping = ColumnMapping {
            identifier: "Name".into(),
            split: "Words".into(),
            category: "Kind".into(),
            pattern: "Pattern".into(),
            ..ColumnMapping::default()
        };
        let gold = parse_gold(text, &mapping).unwrap();
        assert_eq!(gold[0].tools.len(), 2);
        assert_eq!(gold[0].tools["posse"].to_string(), "N");
        assert_eq!(gold[0].language, Language::Unknown);
        let acc = pattern_accuracy(&gold, &stored_tool(&gold, "swum").unwrap()).unwrap();
        assert_eq!(acc, Ratio::new(1, 1));
    }

    #[test]
    fn worked_accuracy_example() {
        let gold = vec![
            entry("id1", "a b c", Category::Function, "V NM N"),
            entry("id2", "d e f", Category::Function, "V NM N"),
        ];
        let tool = pats(&["NM NM N", "NM NM N"]);
        assert_eq!(pattern_accuracy(&gold, &tool).unwrap(), Ratio::new(0, 2));
        assert_eq!(word_accuracy(&gold, &tool).unwrap().ratio, Ratio::new(4, 6));
        let perfect = pats(&["V NM N", "V NM N"]);
        assert_eq!(
            pattern_accuracy(&gold, &perfect).unwrap().value(),
            Some(1.0)
        );
        assert_eq!(
            word_accuracy(&gold, &perfect).unwrap().ratio.value(),
            Some(1.0)
        );
    }

    #[test]
    fn length_mismatch_earns_nothing() {
        let gold = vec![
            entry("id1", "a b c", Category::Attribute, "NM NM N"),
            entry("id2", "d e f", Category::Attribute, "NM NM N"),
        ];
        let tool = pats(&["NM N", "NM NM N"]);
        let w = word_accuracy(&gold, &tool).unwrap();
        assert_eq!(w.ratio, Ratio::new(3, 6));
        assert_eq!(w.length_mismatches, ["id1"]);
    }

    #[test]
    fn missing_tool_pattern_names_identifier() {
        let gold = vec![entry("only", "x", Category::Attribute, "N")];
        assert!(matches!(
            pattern_accuracy(&gold, &[]),
            Err(EvalError::Missing { identifier, .. }) if identifier == "only"
        ));
        assert!(align_by_name(&gold, &HashMap::new()).is_err());
    }

    #[test]
    fn per_tag_table() {
        let gold = vec![entry("x", "a b c", Category::Function, "NM N V")];
        let rows = per_tag_agreement(&gold, &pats(&["NM N N"])).unwrap();
        let find = |t: PosTag| rows.iter().find(|r| r.tag == t).unwrap();
        assert_eq!(
            (
                find(PosTag::NM).human_count,
                find(PosTag::NM).tool_agree_count
            ),
            (1, 1)
        );
        assert_eq!(
            (
                find(PosTag::N).human_count,
                find(PosTag::N).tool_agree_count
            ),
            (1, 1)
        );
        assert_eq!(
            (
                find(PosTag::V).human_count,
                find(PosTag::V).tool_agree_count
            ),
            (1, 0)
        );
        assert_eq!(find(PosTag::V).pct, Some(0.0));
        assert_eq!(rows.len(), 3);
        assert!(per_tag_agreement(&[], &[]).unwrap().is_empty());
    }

    #[test]
    fn misannotation_ranking() {
        let mut gold = Vec::new();
        let mut tool = Vec::new();
        for _ in 0..3 {
            gold.push(entry("a", "a b", Category::Attribute, "NM N"));
            tool.push(parse_pattern("N N").unwrap());
        }
        gold.push(entry("b", "b c", Category::Attribute, "V N"));
        tool.push(parse_pattern("NM N").unwrap());
        gold.push(entry("c", "c d", Category::Attribute, "NM N"));
        tool.push(parse_pattern("NM N").unwrap());
        let top = top_misannotated(&gold, &tool, 5).unwrap();
        let rows = &top[&Category::Attribute];
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].pattern.as_str(), rows[0].misses), ("NM N", 3));
        assert_eq!((rows[1].pattern.as_str(), rows[1].misses), ("V N", 1));
        assert_eq!(rows[0].share, Some(0.75));
        let same: Vec<_> = gold.iter().map(|g| g.pattern.clone()).collect();
        assert!(top_misannotated(&gold, &same, 5).unwrap().is_empty());
    }

    #[test]
    fn evaluate_self_is_perfect() {
        let gold = vec![
            entry("a", "get x", Category::Function, "V N"),
            entry("b", "num cols", Category::Attribute, "NM NPL"),
        ];
        let tool: Vec<_> = gold.iter().map(|g| g.pattern.clone()).collect();
        let r = evaluate(&gold, "self", &tool, Some(&WordList::bundled()), 5).unwrap();
        assert_eq!(r.pattern_accuracy.value(), Some(1.0));
        assert_eq!(r.word_accuracy.value(), Some(1.0));
        assert!(r.per_tag.iter().all(|t| t.pct == Some(100.0)));
        let classes = r.by_token_class.unwrap();
        assert_eq!(
            classes.dictionary.denominator
                + classes.abbreviation.denominator
                + classes.digit.denominator,
            4
        );
    }
}
