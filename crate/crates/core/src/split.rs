//! Identifier splitting.
//!
//! Names are cut at separator characters, at lower→upper transitions, at
//! letter↔digit transitions, and before the last capital of an acronym that
//! runs into a capitalized word (`XMLReader` → `XML Reader`). A digit run
//! that directly follows an all-caps run of two or more letters stays
//! attached to it, so `IPV4` and `MP3` survive as domain terms while
//! `event0` becomes `event 0`.
//!
//! Curated corrections can be layered on top with [`SplitOverrides`].

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::Identifier;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("identifier `{0}` contains no letters or digits")]
    NoWords(String),
}

#[derive(Debug, Error)]
pub enum OverrideError {
    #[error("cannot read split overrides {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("split overrides row {row}: {message}")]
    Row { row: usize, message: String },
}

/// Split a raw identifier into word tokens.
pub fn split(name: &str) -> Result<Vec<String>, SplitError> {
    let mut tokens = Vec::new();
    for chunk in name.split(|c: char| !c.is_alphanumeric()) {
        if !chunk.is_empty() {
            split_chunk(chunk, &mut tokens);
        }
    }
    if tokens.is_empty() {
        return Err(SplitError::NoWords(name.to_string()));
    }
    Ok(tokens)
}

fn is_lowerish(c: char) -> bool {
    c.is_alphabetic() && !c.is_uppercase()
}

fn split_chunk(chunk: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = chunk.chars().collect();
    let mut start = 0;
    for i in 1..chars.len() {
        let (prev, cur) = (chars[i - 1], chars[i]);
        let next = chars.get(i + 1).copied();
        let boundary = if is_lowerish(prev) && cur.is_uppercase() {
            true
        } else if prev.is_uppercase() && cur.is_uppercase() && next.is_some_and(is_lowerish) {
            // `URLs` is a plural acronym, not `UR Ls`.
            let lone_s = next == Some('s') && !chars.get(i + 2).copied().is_some_and(is_lowerish);
            !lone_s
        } else if prev.is_alphabetic() && cur.is_numeric() {
            let run = &chars[start..i];
            !(run.len() >= 2 && run.iter().all(|c| c.is_uppercase()))
        } else {
            prev.is_numeric() && cur.is_alphabetic()
        };
        if boundary {
            out.push(chars[start..i].iter().collect());
            start = i;
        }
    }
    out.push(chars[start..].iter().collect());
}

/// Strip everything but letters and digits and lowercase the rest.
fn squash(text: &str) -> String {
    text.chars()
        .filter(|c| c.is_alphanumeric())
        .flat_map(char::to_lowercase)
        .collect()
}

/// Curated per-name token lists that replace the machine split verbatim.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplitOverrides {
    map: HashMap<String, Vec<String>>,
}

impl SplitOverrides {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add one override, enforcing that the tokens spell the name.
    pub fn insert(&mut self, name: &str, tokens: Vec<String>) -> Result<(), String> {
        if tokens.is_empty() {
            return Err(format!("override for `{name}` has no tokens"));
        }
        if let Some(bad) = tokens
            .iter()
            .find(|t| t.is_empty() || !t.chars().all(char::is_alphanumeric))
        {
            return Err(format!("override token `{bad}` for `{name}` is not a word"));
        }
        let joined: String = tokens.concat();
        if squash(&joined) != squash(name) {
            return Err(format!(
                "override tokens `{}` do not spell `{name}`",
                tokens.join(" ")
            ));
        }
        self.map.insert(name.to_string(), tokens);
        Ok(())
    }

    /// Parse `raw_name,space_separated_tokens` rows. A first row whose
    /// first cell is `raw_name` is treated as a header.
    pub fn from_csv_str(text: &str) -> Result<Self, OverrideError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut out = SplitOverrides::new();
        for (i, record) in reader.records().enumerate() {
            let row = i + 1;
            let record = record.map_err(|e| OverrideError::Row {
                row,
                message: e.to_string(),
            })?;
            if record.iter().all(str::is_empty) {
                continue;
            }
            if row == 1 && record.get(0) == Some("raw_name") {
                continue;
            }
            if record.len() != 2 {
                return Err(OverrideError::Row {
                    row,
                    message: format!("expected 2 columns, found {}", record.len()),
                });
            }
            let tokens = record[1].split_whitespace().map(str::to_string).collect();
            out.insert(&record[0], tokens)
                .map_err(|message| OverrideError::Row { row, message })?;
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<Self, OverrideError> {
        let text = std::fs::read_to_string(path).map_err(|e| OverrideError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_csv_str(&text)
    }

    pub fn get(&self, name: &str) -> Option<&[String]> {
        self.map.get(name).map(Vec::as_slice)
    }

    /// The override for `name` if one exists, otherwise `tokens` unchanged.
    pub fn apply(&self, name: &str, tokens: Vec<String>) -> Vec<String> {
        match self.map.get(name) {
            Some(curated) => curated.clone(),
            None => tokens,
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// An identifier together with its word tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitIdentifier {
    pub identifier: Identifier,
    pub tokens: Vec<String>,
}

/// The heuristic splitter plus any curated overrides.
#[derive(Debug, Clone, Default)]
pub struct Splitter {
    overrides: SplitOverrides,
}

impl Splitter {
    pub fn new(overrides: SplitOverrides) -> Self {
        Splitter { overrides }
    }

    pub fn split(&self, name: &str) -> Result<Vec<String>, SplitError> {
        if let Some(curated) = self.overrides.get(name) {
            return Ok(curated.to_vec());
        }
        split(name)
    }

    pub fn split_identifier(&self, ident: &Identifier) -> Result<SplitIdentifier, SplitError> {
        Ok(SplitIdentifier {
            identifier: ident.clone(),
            tokens: self.split(&ident.name)?,
        })
    }
}
