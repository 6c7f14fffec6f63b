use std::path::{Path, PathBuf};

use namegram::ingest::scan_corpus;
use namegram::{Category, Identifier, Language, ScanConfig};

fn sample() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/sample_project")
}

fn find<'a>(entries: &'a [Identifier], name: &str, category: Category) -> &'a Identifier {
    entries
        .iter()
        .find(|e| e.name == name && e.category == category)
        .unwrap_or_else(|| panic!("{name} ({category:?}) not extracted"))
}

#[test]
fn all_categories_and_languages_appear() {
    let set = scan_corpus(&sample(), &ScanConfig::default()).unwrap();
    let counts = set.category_counts();
    for cat in Category::ALL {
        assert!(
            counts.get(&cat).copied().unwrap_or(0) > 10,
            "{cat:?}: {counts:?}"
        );
    }
    for lang in [Language::C, Language::Cpp, Language::Java] {
        assert!(set.entries.iter().any(|e| e.language == lang), "{lang:?}");
    }
    assert!(set.entries.iter().all(|e| e.system == "sample_project"));
}

#[test]
fn declarations_carry_types() {
    let set = scan_corpus(&sample(), &ScanConfig::default()).unwrap();
    let e = &set.entries;
    assert_eq!(
        find(e, "is_visible", Category::Attribute)
            .type_name
            .as_deref(),
        Some("bool")
    );
    assert_eq!(
        find(e, "findByName", Category::Function)
            .type_name
            .as_deref(),
        Some("Tile")
    );
    assert_eq!(
        find(e, "levelFile", Category::Parameter)
            .type_name
            .as_deref(),
        Some("Path")
    );
    assert_eq!(
        find(e, "m_commands", Category::Attribute)
            .type_name
            .as_deref(),
        Some("std::vector<DrawCommand>")
    );
    assert_eq!(find(e, "TileSet", Category::Class).language, Language::Java);
    let local = find(e, "hash_value", Category::DeclarationStatement);
    assert_eq!(local.file, "src/c/hash_table.c");
    assert!(local.line > 1);
}

#[test]
fn test_code_is_excluded_unless_asked() {
    let default = scan_corpus(&sample(), &ScanConfig::default()).unwrap();
    assert!(default
        .entries
        .iter()
        .all(|e| !e.file.starts_with("tests/")));
    assert!(default.entries.iter().all(|e| e.name != "testHarnessHook"));

    let all = scan_corpus(
        &sample(),
        &ScanConfig {
            exclude_tests: false,
            ..ScanConfig::default()
        },
    )
    .unwrap();
    assert!(all.entries.iter().any(|e| e.file.starts_with("tests/")));
    assert!(all.entries.iter().any(|e| e.name == "testHarnessHook"));
    assert!(all.len() > default.len());
}

#[test]
fn language_filter_and_system_label() {
    let cfg = ScanConfig {
        languages: vec![Language::Cpp],
        system: Some("kit".into()),
        ..ScanConfig::default()
    };
    let set = scan_corpus(&sample(), &cfg).unwrap();
    assert!(!set.is_empty());
    assert!(set
        .entries
        .iter()
        .all(|e| e.language == Language::Cpp && e.system == "kit"));
}

#[test]
fn jsonl_is_stable_and_sorted() {
    let a = scan_corpus(&sample(), &ScanConfig::default()).unwrap();
    let b = scan_corpus(&sample(), &ScanConfig::default()).unwrap();
    assert_eq!(a.to_jsonl(), b.to_jsonl());
    let keys: Vec<_> = a.entries.iter().map(|e| (e.file.clone(), e.line)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let back = namegram::ingest::read_identifiers_jsonl(&a.to_jsonl()).unwrap();
    assert_eq!(back, a.entries);
}

#[test]
fn syntax_errors_give_partial_results_and_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("broken.c"),
        "int good_count;\nvoid oops( {\nint after_error;\n",
    )
    .unwrap();
    let set = scan_corpus(dir.path(), &ScanConfig::default()).unwrap();
    assert!(set.entries.iter().any(|e| e.name == "good_count"));
    assert_eq!(set.warnings.len(), 1);
    assert_eq!(set.warnings[0].file, "broken.c");
}

#[test]
fn missing_root_is_an_error() {
    assert!(scan_corpus(Path::new("/no/such/root"), &ScanConfig::default()).is_err());
}
