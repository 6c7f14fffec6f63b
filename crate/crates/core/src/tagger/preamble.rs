//! Preamble lexicons: leading tokens that namespace or type-mark a name
//! without describing it (`g_assert`, `m_count`, `grpc_json_writer`).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dictionary::WordList;
use crate::ingest::Identifier;
use crate::split::Splitter;

use super::lexicon::is_digits;

/// Hungarian-style prefixes recognized in every system.
pub const DEFAULT_HUNGARIAN: &[&str] = &["m", "p", "f", "g", "s"];

/// Frequent leading abbreviations that carry meaning and so are never
/// preambles.
pub const DEFAULT_ALLOWLIST: &[&str] = &[
    "api", "ascii", "ast", "cpu", "css", "csv", "db", "dns", "dom", "ftp", "gpu", "gui", "html",
    "http", "id", "io", "ip", "json", "jvm", "max", "min", "num", "os", "pdf", "png", "ram", "rgb",
    "rgba", "sql", "ssh", "ssl", "tcp", "tls", "udp", "ui", "uri", "url", "usb", "utf", "uuid",
    "xml",
];

#[derive(Debug, Error)]
pub enum PreambleError {
    #[error("`{0}` is both a preamble and an allowlisted domain term")]
    Overlap(String),
    #[error("invalid preamble configuration: {0}")]
    Config(String),
    #[error("cannot read preamble configuration {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Detection thresholds and fixed lists. Readable from TOML:
///
/// ```toml
/// min_share = 0.25
/// min_ident_count = 20
/// max_len = 4
/// hungarian = ["m", "p", "f", "g", "s"]
/// allowlist = ["xml", "json"]
///
/// [preambles]
/// gimp = ["gimp"]
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PreambleConfig {
    /// Fraction of a system's identifiers a first token must begin.
    pub min_share: f64,
    /// Minimum number of identifiers the token must begin.
    pub min_ident_count: usize,
    /// Longest candidate, in characters.
    pub max_len: usize,
    pub hungarian: Vec<String>,
    pub allowlist: Vec<String>,
    /// Curated per-system preambles, added to whatever is detected.
    pub preambles: BTreeMap<String, Vec<String>>,
    /// Turn corpus-based detection off to use only the fixed lists.
    pub detect: bool,
}

impl Default for PreambleConfig {
    fn default() -> Self {
        PreambleConfig {
            min_share: 0.25,
            min_ident_count: 20,
            max_len: 4,
            hungarian: DEFAULT_HUNGARIAN.iter().map(|s| s.to_string()).collect(),
            allowlist: DEFAULT_ALLOWLIST.iter().map(|s| s.to_string()).collect(),
            preambles: BTreeMap::new(),
            detect: true,
        }
    }
}

impl PreambleConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, PreambleError> {
        let cfg: PreambleConfig =
            toml::from_str(text).map_err(|e| PreambleError::Config(e.to_string()))?;
        if !(0.0..=1.0).contains(&cfg.min_share) {
            return Err(PreambleError::Config(format!(
                "min_share {} is outside [0, 1]",
                cfg.min_share
            )));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, PreambleError> {
        let text = std::fs::read_to_string(path).map_err(|e| PreambleError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_toml_str(&text)
    }
}

/// Per-system preamble sets plus the global Hungarian prefixes. Tokens are
/// stored lowercased. The allowlist never intersects either set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreambleLexicon {
    systems: BTreeMap<String, BTreeSet<String>>,
    hungarian: BTreeSet<String>,
    allowlist: BTreeSet<String>,
}

impl Default for PreambleLexicon {
    fn default() -> Self {
        PreambleLexicon::new(DEFAULT_HUNGARIAN, DEFAULT_ALLOWLIST).expect("defaults are disjoint")
    }
}

fn lowered<S: AsRef<str>>(items: &[S]) -> BTreeSet<String> {
    items.iter().map(|s| s.as_ref().to_lowercase()).collect()
}

impl PreambleLexicon {
    pub fn new<S: AsRef<str>>(hungarian: &[S], allowlist: &[S]) -> Result<Self, PreambleError> {
        let hungarian = lowered(hungarian);
        let allowlist = lowered(allowlist);
        if let Some(t) = hungarian.intersection(&allowlist).next() {
            return Err(PreambleError::Overlap(t.clone()));
        }
        Ok(PreambleLexicon {
            systems: BTreeMap::new(),
            hungarian,
            allowlist,
        })
    }

    /// Lists from a configuration, without any corpus detection.
    pub fn from_config(config: &PreambleConfig) -> Result<Self, PreambleError> {
        let mut lex = PreambleLexicon::new(&config.hungarian, &config.allowlist)?;
        for (system, tokens) in &config.preambles {
            for t in tokens {
                lex.add_system_preamble(system, t)?;
            }
        }
        Ok(lex)
    }

    pub fn add_system_preamble(&mut self, system: &str, token: &str) -> Result<(), PreambleError> {
        let t = token.to_lowercase();
        if self.allowlist.contains(&t) {
            return Err(PreambleError::Overlap(t));
        }
        self.systems
            .entry(system.to_string())
            .or_default()
            .insert(t);
        Ok(())
    }

    pub fn is_preamble(&self, system: &str, token: &str) -> bool {
        let t = token.to_lowercase();
        !self.allowlist.contains(&t)
            && (self.hungarian.contains(&t)
                || self.systems.get(system).is_some_and(|s| s.contains(&t)))
    }

    pub fn is_allowlisted(&self, token: &str) -> bool {
        self.allowlist.contains(&token.to_lowercase())
    }

    pub fn hungarian(&self) -> &BTreeSet<String> {
        &self.hungarian
    }

    /// Detected or curated preambles of one system (Hungarian excluded).
    pub fn system_preambles(&self, system: &str) -> Option<&BTreeSet<String>> {
        self.systems.get(system)
    }

    pub fn systems(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.systems.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// Find first tokens that begin an outsized share of a system's
/// identifiers and are neither dictionary words nor allowlisted.
pub fn detect_preambles(
    corpus: &[Identifier],
    splitter: &Splitter,
    dictionary: &WordList,
    config: &PreambleConfig,
) -> Result<PreambleLexicon, PreambleError> {
    let mut lex = PreambleLexicon::from_config(config)?;
    if !config.detect {
        return Ok(lex);
    }
    let mut per_system: BTreeMap<&str, (usize, HashMap<String, usize>)> = BTreeMap::new();
    for ident in corpus {
        let Ok(tokens) = splitter.split(&ident.name) else {
            continue;
        };
        let (total, firsts) = per_system.entry(&ident.system).or_default();
        *total += 1;
        if tokens.len() >= 2 {
            *firsts.entry(tokens[0].to_lowercase()).or_insert(0) += 1;
        }
    }
    for (system, (total, firsts)) in per_system {
        for (token, count) in firsts {
            let share = count as f64 / total as f64;
            let candidate = count >= config.min_ident_count
                && share >= config.min_share
                && token.chars().count() <= config.max_len
                && !is_digits(&token)
                && !lex.is_allowlisted(&token)
                && !lex.hungarian.contains(&token)
                && !dictionary.contains(&token);
            if candidate {
                log::debug!("{system}: `{token}` begins {count}/{total} identifiers; preamble");
                lex.add_system_preamble(system, &token)?;
            }
        }
    }
    Ok(lex)
}
