//! Naming lints grounded in observed grammar-pattern tendencies.
//!
//! | rule                   | fires when                                           |
//! |------------------------|------------------------------------------------------|
//! | `boolean-no-verb`      | boolean type and no `V` in the pattern               |
//! | `collection-not-plural`| collection type, not a function, last tag ≠ `NPL`    |
//! | `plural-function-note` | function, last tag `NPL`, return type not collection |
//! | `function-no-verb`     | function and no `V` in the pattern                   |
//! | `preamble-note`        | first tag `PRE`, or first of several tokens is a known preamble |
//!
//! Every rule is advisory. Rules can be disabled and their severity changed.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{Category, Identifier, TypeClassifier};
use crate::tagger::{Annotated, PreambleLexicon};
use crate::tagset::{GrammarPattern, PosTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    BooleanNoVerb,
    CollectionNotPlural,
    PluralFunctionNote,
    FunctionNoVerb,
    PreambleNote,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::BooleanNoVerb,
        Rule::CollectionNotPlural,
        Rule::PluralFunctionNote,
        Rule::FunctionNoVerb,
        Rule::PreambleNote,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::BooleanNoVerb => "boolean-no-verb",
            Rule::CollectionNotPlural => "collection-not-plural",
            Rule::PluralFunctionNote => "plural-function-note",
            Rule::FunctionNoVerb => "function-no-verb",
            Rule::PreambleNote => "preamble-note",
        }
    }

    pub fn default_severity(self) -> Severity {
        match self {
            Rule::BooleanNoVerb | Rule::CollectionNotPlural | Rule::FunctionNoVerb => {
                Severity::Suggestion
            }
            Rule::PluralFunctionNote | Rule::PreambleNote => Severity::Info,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let short = ["r1", "r2", "r3", "r4", "r5"];
        Rule::ALL
            .into_iter()
            .enumerate()
            .find(|(i, r)| r.name() == s || short[*i] == s.to_ascii_lowercase())
            .map(|(_, r)| r)
            .ok_or_else(|| format!("unknown lint rule `{s}`"))
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Suggestion,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleSetting {
    pub enabled: Option<bool>,
    pub severity: Option<Severity>,
}

/// Rule toggles and severity overrides. Readable from TOML:
///
/// ```toml
/// [rules.preamble-note]
/// enabled = false
/// [rules.function-no-verb]
/// severity = "info"
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LintConfig {
    pub rules: BTreeMap<Rule, RuleSetting>,
}

impl LintConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, LintError> {
        toml::from_str(text).map_err(|e| LintError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, LintError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LintError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn enabled(&self, rule: Rule) -> bool {
        self.rules
            .get(&rule)
            .and_then(|s| s.enabled)
            .unwrap_or(true)
    }

    pub fn severity(&self, rule: Rule) -> Severity {
        self.rules
            .get(&rule)
            .and_then(|s| s.severity)
            .unwrap_or_else(|| rule.default_severity())
    }

    pub fn set_enabled(&mut self, rule: Rule, enabled: bool) {
        self.rules.entry(rule).or_default().enabled = Some(enabled);
    }
}

#[derive(Debug, Error)]
pub enum LintError {
    #[error("`{name}` has {tokens} tokens but a {tags}-tag pattern")]
    Misaligned {
        name: String,
        tokens: usize,
        tags: usize,
    },
    #[error("invalid lint configuration: {0}")]
    Config(String),
}

/// Type facts and lexicon the rules consult.
#[derive(Debug, Clone, Copy)]
pub struct LintContext<'a> {
    pub boolean: bool,
    pub collection: bool,
    pub preambles: &'a PreambleLexicon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub pattern: GrammarPattern,
    pub tokens: Vec<String>,
    pub boolean: bool,
    pub collection: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintFinding {
    pub rule: Rule,
    pub severity: Severity,
    pub file: String,
    pub line: u32,
    pub name: String,
    pub category: Category,
    pub message: String,
    pub evidence: Evidence,
}

impl fmt::Display for LintFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: [{}] {}",
            self.file, self.line, self.rule, self.message
        )
    }
}

/// Which rules hold for a (category, type flags, pattern, tokens) tuple,
/// irrespective of configuration.
pub fn firing_rules(
    category: Category,
    boolean: bool,
    collection: bool,
    pattern: &GrammarPattern,
    leading_preamble: bool,
) -> Vec<Rule> {
    let function = category == Category::Function;
    let has_verb = pattern.contains(PosTag::V);
    let plural_end = pattern.last() == PosTag::NPL;
    let mut out = Vec::new();
    if boolean && !has_verb {
        out.push(Rule::BooleanNoVerb);
    }
    if collection && !function && !plural_end {
        out.push(Rule::CollectionNotPlural);
    }
    if function && plural_end && !collection {
        out.push(Rule::PluralFunctionNote);
    }
    if function && !has_verb {
        out.push(Rule::FunctionNoVerb);
    }
    if pattern.first() == PosTag::PRE || leading_preamble {
        out.push(Rule::PreambleNote);
    }
    out
}

fn message(rule: Rule, ident: &Identifier, tokens: &[String]) -> String {
    let name = &ident.name;
    match rule {
        Rule::BooleanNoVerb => format!(
            "boolean `{name}` contains no verb; predicate names such as is/has/can + noun read as questions"
        ),
        Rule::CollectionNotPlural => {
            format!("collection-typed `{name}` does not end in a plural noun")
        }
        Rule::PluralFunctionNote => format!(
            "function `{name}` ends in a plural but does not return a collection; the plural may describe the data it operates on"
        ),
        Rule::FunctionNoVerb => {
            format!("function `{name}` contains no verb; the action it performs is implied")
        }
        Rule::PreambleNote => format!(
            "`{}` in `{name}` looks like a preamble that namespaces the name without describing its role",
            tokens[0]
        ),
    }
}

/// Findings for one identifier, in rule order.
pub fn lint(
    ident: &Identifier,
    tokens: &[String],
    pattern: &GrammarPattern,
    ctx: &LintContext<'_>,
    config: &LintConfig,
) -> Result<Vec<LintFinding>, LintError> {
    if tokens.len() != pattern.len() {
        return Err(LintError::Misaligned {
            name: ident.name.clone(),
            tokens: tokens.len(),
            tags: pattern.len(),
        });
    }
    let leading = tokens.len() > 1 && ctx.preambles.is_preamble(&ident.system, &tokens[0]);
    Ok(firing_rules(
        ident.category,
        ctx.boolean,
        ctx.collection,
        pattern,
        leading,
    )
    .into_iter()
    .filter(|r| config.enabled(*r))
    .map(|rule| LintFinding {
        rule,
        severity: config.severity(rule),
        file: ident.file.clone(),
        line: ident.line,
        name: ident.name.clone(),
        category: ident.category,
        message: message(rule, ident, tokens),
        evidence: Evidence {
            pattern: pattern.clone(),
            tokens: tokens.to_vec(),
            boolean: ctx.boolean,
            collection: ctx.collection,
        },
    })
    .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintReport {
    pub findings: Vec<LintFinding>,
    /// Finding count per rule name; rules that never fired are omitted.
    pub summary: BTreeMap<String, usize>,
}

impl LintReport {
    pub fn to_text(&self) -> String {
        self.findings.iter().map(|f| format!("{f}\n")).collect()
    }
}

/// Lint a whole annotated set. Findings are ordered by file, line, name,
/// then rule.
pub fn lint_corpus(
    annotated: &[Annotated],
    classifier: &TypeClassifier,
    preambles: &PreambleLexicon,
    config: &LintConfig,
) -> Result<LintReport, LintError> {
    let mut findings = Vec::new();
    for a in annotated {
        let ctx = LintContext {
            boolean: classifier.is_boolean(&a.identifier),
            collection: classifier.is_collection(&a.identifier),
            preambles,
        };
        findings.extend(lint(&a.identifier, &a.tokens, &a.pattern, &ctx, config)?);
    }
    findings.sort_by(|x, y| {
        (&x.file, x.line, &x.name, x.rule).cmp(&(&y.file, y.line, &y.name, y.rule))
    });
    let mut summary = BTreeMap::new();
    for f in &findings {
        *summary.entry(f.rule.name().to_string()).or_insert(0) += 1;
    }
    Ok(LintReport { findings, summary })
}
