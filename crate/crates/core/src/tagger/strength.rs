//! Per-tagger, per-tag reliability weights for the ensemble.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::tagset::PosTag;

/// Published per-tag agreement with human annotators, as
/// `(tag, human count, rule-based tagger agreements, statistical tagger
/// agreements)`. The default table seeds "heuristic" from the first
/// tagger column and "external" from the second; tags absent here get 0.
const SEED_AGREEMENT: &[(PosTag, u32, u32, u32)] = &[
    (PosTag::NM, 1604, 1508, 252),
    (PosTag::N, 1141, 976, 1064),
    (PosTag::V, 305, 171, 233),
    (PosTag::NPL, 238, 0, 171),
    (PosTag::PRE, 105, 2, 0),
    (PosTag::P, 94, 28, 85),
    (PosTag::D, 27, 5, 27),
    (PosTag::DT, 15, 13, 9),
    (PosTag::VM, 13, 0, 9),
    (PosTag::CJ, 8, 0, 4),
];

#[derive(Debug, Error)]
pub enum StrengthError {
    #[error("strength table row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("strength table is missing the `{0}` column")]
    MissingColumn(&'static str),
    #[error("cannot read strength table {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Weights in `[0, 1]` keyed by (tagger id, tag). Missing cells read as 0.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StrengthTable {
    weights: BTreeMap<(String, PosTag), f64>,
}

impl StrengthTable {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Weights seeded from published per-tag agreement rates.
    pub fn seeded() -> Self {
        let mut t = Self::empty();
        for &(tag, human, rule_based, statistical) in SEED_AGREEMENT {
            let h = f64::from(human);
            t.weights
                .insert(("heuristic".into(), tag), f64::from(rule_based) / h);
            t.weights
                .insert(("external".into(), tag), f64::from(statistical) / h);
        }
        t
    }

    pub fn get(&self, tagger: &str, tag: PosTag) -> f64 {
        self.weights
            .get(&(tagger.to_string(), tag))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn set(&mut self, tagger: &str, tag: PosTag, weight: f64) -> Result<(), String> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(format!(
                "weight {weight} for {tagger}/{tag} is outside [0, 1]"
            ));
        }
        self.weights.insert((tagger.to_string(), tag), weight);
        Ok(())
    }

    /// Weights measured against gold data: `(tag, human count, agreements)`.
    /// Tags with no human occurrences are left unset.
    pub fn from_agreement<I>(tagger: &str, rows: I) -> Self
    where
        I: IntoIterator<Item = (PosTag, usize, usize)>,
    {
        let mut t = Self::empty();
        t.merge_agreement(tagger, rows);
        t
    }

    pub fn merge_agreement<I>(&mut self, tagger: &str, rows: I)
    where
        I: IntoIterator<Item = (PosTag, usize, usize)>,
    {
        for (tag, human, agree) in rows {
            if human > 0 {
                let w = (agree.min(human)) as f64 / human as f64;
                self.weights.insert((tagger.to_string(), tag), w);
            }
        }
    }

    /// CSV with header `tagger,tag,weight`.
    pub fn from_csv_str(text: &str) -> Result<Self, StrengthError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = reader
            .headers()
            .map_err(|e| StrengthError::Row {
                row: 1,
                message: e.to_string(),
            })?
            .clone();
        let col = |name: &'static str| {
            headers
                .iter()
                .position(|h| h == name)
                .ok_or(StrengthError::MissingColumn(name))
        };
        let (ci, ct, cw) = (col("tagger")?, col("tag")?, col("weight")?);
        let mut table = Self::empty();
        for (i, record) in reader.records().enumerate() {
            let row = i + 2;
            let err = |message: String| StrengthError::Row { row, message };
            let record = record.map_err(|e| err(e.to_string()))?;
            let field = |c: usize| record.get(c).unwrap_or("");
            let tagger = field(ci);
            if tagger.is_empty() {
                return Err(err("empty tagger id".into()));
            }
            let tag: PosTag = field(ct)
                .parse()
                .map_err(|e: crate::tagset::UnknownTag| err(e.to_string()))?;
            let weight: f64 = field(cw)
                .parse()
                .map_err(|_| err(format!("weight `{}` is not a number", field(cw))))?;
            table.set(tagger, tag, weight).map_err(err)?;
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self, StrengthError> {
        let text = std::fs::read_to_string(path).map_err(|e| StrengthError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_csv_str(&text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("tagger,tag,weight\n");
        for ((tagger, tag), w) in &self.weights {
            out.push_str(&format!("{tagger},{tag},{w}\n"));
        }
        out
    }

    pub fn taggers(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.weights.keys().map(|(t, _)| t.as_str()).collect();
        ids.dedup();
        ids
    }
}
