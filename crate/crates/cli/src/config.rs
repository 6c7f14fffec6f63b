//! Optional TOML run configuration. Flags win over file values; relative
//! paths in the file resolve against the file's directory.

use std::path::{Path, PathBuf};

use namegram::lint::LintConfig;
use namegram::Language;
use serde::Deserialize;

use crate::{Format, TaggerKind};

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub languages: Option<Vec<Language>>,
    pub system: Option<String>,
    pub loose_boolean: Option<bool>,
    pub include_tests: Option<bool>,
    pub follow_links: Option<bool>,
    pub tagger: Option<TaggerKind>,
    pub interior_plurals: Option<bool>,
    pub strengths: Option<PathBuf>,
    pub dictionary: Option<PathBuf>,
    pub preamble_config: Option<PathBuf>,
    pub overrides: Option<PathBuf>,
    pub columns: Option<PathBuf>,
    pub format: Option<Format>,
    pub top_k: Option<usize>,
    pub lint: Option<LintConfig>,
}

impl RunConfig {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read config {}: {e}", path.display()))?;
        let mut cfg: RunConfig = toml::from_str(&text)
            .map_err(|e| anyhow::anyhow!("invalid config {}: {e}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [
            &mut cfg.strengths,
            &mut cfg.dictionary,
            &mut cfg.preamble_config,
            &mut cfg.overrides,
            &mut cfg.columns,
        ]
        .into_iter()
        .flatten()
        {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }
}
