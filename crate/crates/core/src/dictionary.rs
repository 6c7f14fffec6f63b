//! English word list for telling dictionary terms from abbreviations.
//!
//! A bundled list ships in `data/words.txt`; any other newline-separated
//! list (with `#` comments) can be loaded instead. Lookups are
//! case-insensitive and strip regular inflections, so `factors`,
//! `stopped` and `categories` are found through `factor`, `stop` and
//! `category`.

use std::collections::HashSet;
use std::path::Path;

use thiserror::Error;

const BUNDLED: &str = include_str!("../data/words.txt");

#[derive(Debug, Error)]
pub enum DictionaryError {
    #[error("cannot read dictionary {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("dictionary {0} contains no words")]
    Empty(String),
}

#[derive(Debug, Clone)]
pub struct WordList {
    words: HashSet<String>,
}

impl WordList {
    pub fn bundled() -> Self {
        Self::from_text(BUNDLED)
    }

    pub fn from_text(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        WordList { words }
    }

    pub fn load(path: &Path) -> Result<Self, DictionaryError> {
        let text = std::fs::read_to_string(path).map_err(|e| DictionaryError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        let list = Self::from_text(&text);
        if list.is_empty() {
            return Err(DictionaryError::Empty(path.display().to_string()));
        }
        Ok(list)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True when the token, or a regular base form of it, is listed.
    pub fn contains(&self, token: &str) -> bool {
        let lower = token.to_lowercase();
        if self.words.contains(&lower) {
            return true;
        }
        if !lower.chars().all(|c| c.is_ascii_alphabetic()) {
            return false;
        }
        base_forms(&lower).iter().any(|b| self.words.contains(b))
    }
}

/// Candidate lemmas for an inflected form.
fn base_forms(word: &str) -> Vec<String> {
    fn add(out: &mut Vec<String>, stem: &str, with_e: bool) {
        if stem.len() < 2 {
            return;
        }
        out.push(stem.to_string());
        if with_e {
            out.push(format!("{stem}e"));
        }
        let b = stem.as_bytes();
        let n = b.len();
        if n >= 3 && b[n - 1] == b[n - 2] && !b"aeiou".contains(&b[n - 1]) {
            out.push(stem[..n - 1].to_string());
        }
    }
    let mut out = Vec::new();
    if let Some(stem) = word.strip_suffix("ies") {
        out.push(format!("{stem}y"));
    }
    if let Some(stem) = word.strip_suffix("es") {
        add(&mut out, stem, false);
    }
    if let Some(stem) = word.strip_suffix('s') {
        if !word.ends_with("ss") {
            add(&mut out, stem, false);
        }
    }
    if let Some(stem) = word.strip_suffix("ied") {
        out.push(format!("{stem}y"));
    }
    for suffix in ["ed", "ing", "er", "est"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            add(&mut out, stem, true);
        }
    }
    out
}
