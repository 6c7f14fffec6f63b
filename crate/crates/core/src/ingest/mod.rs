//! Source tree scanning and identifier extraction.
//!
//! Declarations are read from a concrete syntax tree (tree-sitter) and
//! classified into five identifier categories. Only names that are
//! lexically present in the source are reported; nothing is preprocessed or
//! macro-expanded. Test code is dropped at the directory, file, class and
//! function level.

mod classify;
mod extract;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

pub use classify::{
    is_boolean_type, is_collection_type, is_test_artifact, is_test_token, TypeClassifier,
};

/// The role an identifier plays in the program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Class,
    Function,
    Parameter,
    Attribute,
    /// A function-local or global variable.
    DeclarationStatement,
}

impl Category {
    pub const ALL: [Category; 5] = [
        Category::Class,
        Category::Function,
        Category::Parameter,
        Category::Attribute,
        Category::DeclarationStatement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Class => "class",
            Category::Function => "function",
            Category::Parameter => "parameter",
            Category::Attribute => "attribute",
            Category::DeclarationStatement => "declaration",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identifier category `{0}`")]
pub struct UnknownCategory(pub String);

impl FromStr for Category {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .chars()
            .filter(|c| c.is_alphanumeric())
            .flat_map(char::to_lowercase)
            .collect();
        Ok(match norm.as_str() {
            "class" | "classes" | "classname" | "classnames" => Category::Class,
            "function" | "functions" | "method" | "methods" | "functionname" | "functionnames" => {
                Category::Function
            }
            "parameter" | "parameters" | "param" | "params" | "parametername"
            | "parameternames" => Category::Parameter,
            "attribute" | "attributes" | "attr" | "field" | "fields" | "attributename"
            | "attributenames" => Category::Attribute,
            "declaration"
            | "declarations"
            | "decl"
            | "decls"
            | "declarationstatement"
            | "declarationstatements"
            | "declarationname"
            | "declarationnames" => Category::DeclarationStatement,
            _ => return Err(UnknownCategory(s.to_string())),
        })
    }
}

/// Source language, inferred from the file extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    C,
    Cpp,
    Java,
    CSharp,
    Unknown,
}

impl Language {
    pub fn as_str(self) -> &'static str {
        match self {
            Language::C => "C",
            Language::Cpp => "C++",
            Language::Java => "Java",
            Language::CSharp => "C#",
            Language::Unknown => "unknown",
        }
    }

    /// `.h` is read as C even though C++ projects use it too.
    pub fn from_extension(ext: &str) -> Language {
        match ext.to_ascii_lowercase().as_str() {
            "c" | "h" => Language::C,
            "cpp" | "hpp" | "cc" | "hh" | "cxx" | "hxx" | "c++" | "h++" => Language::Cpp,
            "java" => Language::Java,
            "cs" => Language::CSharp,
            _ => Language::Unknown,
        }
    }

    pub fn from_path(path: &Path) -> Language {
        path.extension()
            .and_then(|e| e.to_str())
            .map(Language::from_extension)
            .unwrap_or(Language::Unknown)
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown language `{0}`")]
pub struct UnknownLanguage(pub String);

impl FromStr for Language {
    type Err = UnknownLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "c" => Language::C,
            "c++" | "cpp" | "cxx" => Language::Cpp,
            "java" => Language::Java,
            "c#" | "csharp" | "cs" => Language::CSharp,
            "unknown" | "" => Language::Unknown,
            _ => return Err(UnknownLanguage(s.to_string())),
        })
    }
}

macro_rules! serde_via_str {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_str!(Category);
serde_via_str!(Language);

/// One extracted identifier declaration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identifier {
    pub name: String,
    pub category: Category,
    pub language: Language,
    /// Declared type, or the return type for functions. Array declarators
    /// append `[]` so the brackets survive into type classification.
    pub type_name: Option<String>,
    /// Path relative to the scan root, `/`-separated.
    pub file: String,
    /// 1-based line of the name.
    pub line: u32,
    pub system: String,
}

impl Identifier {
    /// True when `name` is a legal identifier in the given language.
    pub fn is_legal_name(name: &str, language: Language) -> bool {
        let mut chars = name.chars();
        let Some(first) = chars.next() else {
            return false;
        };
        let extra_ok = |c: char| c == '_' || (c == '$' && language == Language::Java);
        (first.is_alphabetic() || extra_ok(first))
            && chars.all(|c| c.is_alphanumeric() || extra_ok(c))
    }

    fn sort_key(&self) -> (&str, u32, &str, Category) {
        (&self.file, self.line, &self.name, self.category)
    }
}

/// Scan settings. Readable from TOML; every field is optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    pub languages: Vec<Language>,
    /// System label recorded on every identifier. Defaults to the name of
    /// the scan root directory.
    pub system: Option<String>,
    /// Treat integer types as boolean-like.
    pub loose_boolean: bool,
    pub exclude_tests: bool,
    pub follow_links: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            languages: vec![Language::C, Language::Cpp, Language::Java],
            system: None,
            loose_boolean: false,
            exclude_tests: true,
            follow_links: false,
        }
    }
}

impl ScanConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, ScanError> {
        toml::from_str(text).map_err(|e| ScanError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ScanError> {
        let text = std::fs::read_to_string(path).map_err(|e| ScanError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn classifier(&self) -> TypeClassifier {
        TypeClassifier {
            loose_boolean: self.loose_boolean,
        }
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("scan root {path} is not readable: {source}")]
    UnreadableRoot {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("scan root {0} is not a directory")]
    NotADirectory(PathBuf),
    #[error("scan configuration names no languages")]
    NoLanguages,
    #[error("invalid scan configuration: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A non-fatal problem met while scanning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanWarning {
    pub file: String,
    pub message: String,
}

/// The identifiers of one scan, sorted by file, line, then name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentifierSet {
    pub entries: Vec<Identifier>,
    pub provenance: ScanConfig,
    #[serde(default)]
    pub warnings: Vec<ScanWarning>,
}

impl IdentifierSet {
    pub fn from_entries(mut entries: Vec<Identifier>, provenance: ScanConfig) -> Self {
        entries.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        IdentifierSet {
            entries,
            provenance,
            warnings: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn category_counts(&self) -> BTreeMap<Category, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.category).or_insert(0) += 1;
        }
        counts
    }

    /// One JSON object per line, in set order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("identifier serializes"));
            out.push('\n');
        }
        out
    }
}

/// Parse a JSONL identifier stream. Blank lines are skipped; the error names
/// the 1-based line that failed.
pub fn read_identifiers_jsonl(text: &str) -> Result<Vec<Identifier>, (usize, serde_json::Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| (i + 1, e)))
        .collect()
}

/// Walk `root` and extract every non-test declaration in the configured
/// languages.
pub fn scan_corpus(root: &Path, config: &ScanConfig) -> Result<IdentifierSet, ScanError> {
    if config.languages.is_empty() {
        return Err(ScanError::NoLanguages);
    }
    let meta = std::fs::metadata(root).map_err(|e| ScanError::UnreadableRoot {
        path: root.to_path_buf(),
        source: e,
    })?;
    if !meta.is_dir() {
        return Err(ScanError::NotADirectory(root.to_path_buf()));
    }
    std::fs::read_dir(root).map_err(|e| ScanError::UnreadableRoot {
        path: root.to_path_buf(),
        source: e,
    })?;

    let system = config
        .system
        .clone()
        .unwrap_or_else(|| default_system_label(root));
    let mut provenance = config.clone();
    provenance.system = Some(system.clone());

    let mut warnings = Vec::new();
    let mut files = Vec::new();
    let walker = WalkDir::new(root)
        .follow_links(config.follow_links)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || !e.file_name().to_string_lossy().starts_with('.'));
    for entry in walker {
        let entry = match entry {
            Ok(e) => e,
            Err(err) => {
                let file = err
                    .path()
                    .map(|p| relative_path(root, p))
                    .unwrap_or_default();
                warnings.push(ScanWarning {
                    file,
                    message: err.to_string(),
                });
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let language = Language::from_path(entry.path());
        if language == Language::Unknown || !config.languages.contains(&language) {
            continue;
        }
        let rel = relative_path(root, entry.path());
        if config.exclude_tests && is_test_artifact(&rel) {
            log::debug!("skipping test artifact {rel}");
            continue;
        }
        files.push((entry.into_path(), rel, language));
    }

    let results: Vec<_> = files
        .par_iter()
        .map(|(path, rel, language)| {
            let outcome = std::fs::read(path)
                .map_err(|e| format!("unreadable: {e}"))
                .and_then(|bytes| extract::extract_source(&bytes, *language, config.exclude_tests));
            (rel, *language, outcome)
        })
        .collect();

    let mut entries = Vec::new();
    for (rel, language, outcome) in results {
        match outcome {
            Ok(extracted) => {
                if let Some(message) = extracted.warning {
                    warnings.push(ScanWarning {
                        file: rel.clone(),
                        message,
                    });
                }
                entries.extend(extracted.decls.into_iter().map(|d| Identifier {
                    name: d.name,
                    category: d.category,
                    language,
                    type_name: d.type_name,
                    file: rel.clone(),
                    line: d.line,
                    system: system.clone(),
                }));
            }
            Err(message) => {
                log::warn!("{rel}: {message}; file skipped");
                warnings.push(ScanWarning {
                    file: rel.clone(),
                    message,
                });
            }
        }
    }

    let mut set = IdentifierSet::from_entries(entries, provenance);
    set.warnings = warnings;
    Ok(set)
}

/// Extract identifiers from a single in-memory source text.
pub fn extract_from_source(
    source: &str,
    language: Language,
    file: &str,
    system: &str,
) -> Result<Vec<Identifier>, String> {
    let extracted = extract::extract_source(source.as_bytes(), language, true)?;
    let mut out: Vec<Identifier> = extracted
        .decls
        .into_iter()
        .map(|d| Identifier {
            name: d.name,
            category: d.category,
            language,
            type_name: d.type_name,
            file: file.to_string(),
            line: d.line,
            system: system.to_string(),
        })
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

fn default_system_label(root: &Path) -> String {
    let resolved = root.canonicalize().unwrap_or_else(|_| root.to_path_buf());
    resolved
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "system".to_string())
}

fn relative_path(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_aliases_parse() {
        assert_eq!("declaration".parse(), Ok(Category::DeclarationStatement));
        assert_eq!("Decls".parse(), Ok(Category::DeclarationStatement));
        assert_eq!("Attribute Names".parse(), Ok(Category::Attribute));
        assert_eq!("method".parse(), Ok(Category::Function));
        assert!("enum".parse::<Category>().is_err());
    }

    #[test]
    fn language_from_extension() {
        assert_eq!(Language::from_extension("h"), Language::C);
        assert_eq!(Language::from_extension("hh"), Language::Cpp);
        assert_eq!(Language::from_extension("CC"), Language::Cpp);
        assert_eq!(Language::from_extension("java"), Language::Java);
        assert_eq!(Language::from_extension("cs"), Language::CSharp);
        assert_eq!(Language::from_extension("rs"), Language::Unknown);
    }

    #[test]
    fn identifier_json_shape() {
        let id = Identifier {
            name: "isFirstFrame".into(),
            category: Category::Attribute,
            language: Language::Cpp,
            type_name: Some("bool".into()),
            file: "src/a.cpp".into(),
            line: 3,
            system: "demo".into(),
        };
        let json = serde_json::to_string(&id).unwrap();
        assert_eq!(
            json,
            r#"{"name":"isFirstFrame","category":"attribute","language":"C++","type_name":"bool","file":"src/a.cpp","line":3,"system":"demo"}"#
        );
        let back: Identifier = serde_json::from_str(&json).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn legal_names() {
        assert!(Identifier::is_legal_name("m_count", Language::C));
        assert!(Identifier::is_legal_name("$proxy", Language::Java));
        assert!(!Identifier::is_legal_name("$proxy", Language::C));
        assert!(!Identifier::is_legal_name("9lives", Language::C));
        assert!(!Identifier::is_legal_name("operator+", Language::Cpp));
        assert!(!Identifier::is_legal_name("", Language::Cpp));
    }

    #[test]
    fn scan_config_toml() {
        let cfg = ScanConfig::from_toml_str(
            "languages = [\"Java\", \"cpp\"]\nloose_boolean = true\nsystem = \"gimp\"\n",
        )
        .unwrap();
        assert_eq!(cfg.languages, vec![Language::Java, Language::Cpp]);
        assert!(cfg.loose_boolean);
        assert!(cfg.exclude_tests);
        assert_eq!(cfg.system.as_deref(), Some("gimp"));
        assert!(ScanConfig::from_toml_str("bogus = 1").is_err());
    }

    #[test]
    fn empty_language_list_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = ScanConfig {
            languages: vec![],
            ..ScanConfig::default()
        };
        assert!(matches!(
            scan_corpus(dir.path(), &cfg),
            Err(ScanError::NoLanguages)
        ));
    }

    #[test]
    fn missing_root_is_fatal() {
        let err = scan_corpus(Path::new("/definitely/not/here"), &ScanConfig::default());
        assert!(matches!(err, Err(ScanError::UnreadableRoot { .. })));
    }
}
