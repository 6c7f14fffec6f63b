//! Test-code detection and type classification.

use crate::split::split;
use crate::tagger::lexicon::is_plural;

use super::Identifier;

const TEST_WORDS: &[&str] = &[
    "test",
    "tests",
    "testing",
    "tester",
    "testers",
    "unittest",
    "unittests",
    "testcase",
    "testcases",
    "testsuite",
];

const COLLECTION_WORDS: &[&str] = &[
    "list",
    "map",
    "dictionary",
    "collection",
    "array",
    "vector",
    "data",
    "set",
];

const TYPE_QUALIFIERS: &[&str] = &[
    "const",
    "volatile",
    "static",
    "final",
    "mutable",
    "constexpr",
    "register",
    "extern",
    "inline",
    "transient",
    "readonly",
];

/// True when a split token is the word "test" or one of its inflections.
pub fn is_test_token(token: &str) -> bool {
    TEST_WORDS.contains(&token.to_lowercase().as_str())
}

/// True when any path segment, file stem or name contains "test" as a whole
/// token after identifier splitting. `attestation` is not a test artifact;
/// `src/tests/util.c` and `FooTest` are.
pub fn is_test_artifact(path_or_name: &str) -> bool {
    split(path_or_name)
        .map(|tokens| tokens.iter().any(|t| is_test_token(t)))
        .unwrap_or(false)
}

/// Keyword, plural and bracket scan for collection-like types.
pub fn is_collection_type(type_name: &str) -> bool {
    let text = type_name.trim();
    if text.is_empty() {
        return false;
    }
    if text.contains('[') || text.ends_with("...") {
        return true;
    }
    let Ok(tokens) = split(text) else {
        return false;
    };
    if tokens
        .iter()
        .any(|t| COLLECTION_WORDS.contains(&t.to_lowercase().as_str()))
    {
        return true;
    }
    let outer = text.split('<').next().unwrap_or(text);
    split(outer)
        .ok()
        .and_then(|t| t.last().cloned())
        .is_some_and(|last| is_plural(&last))
}

/// `bool`-like types, and with `loose` also integer types.
pub fn is_boolean_type(type_name: &str, loose: bool) -> bool {
    let Some(base) = base_type(type_name) else {
        return false;
    };
    let lower = base.to_lowercase();
    let simple = lower.rsplit(['.', ':']).next().unwrap_or(&lower);
    let boolean = matches!(
        simple,
        "bool"
            | "boolean"
            | "_bool"
            | "gboolean"
            | "jboolean"
            | "glboolean"
            | "atomicboolean"
            | "atomic_bool"
            | "atomic<bool>"
    );
    boolean || (loose && is_integer_type(simple))
}

/// Strips qualifiers and references; pointers make the type non-scalar.
fn base_type(type_name: &str) -> Option<String> {
    let cleaned = type_name.replace('&', " ");
    if cleaned.contains('*') || cleaned.contains('[') {
        return None;
    }
    let words: Vec<&str> = cleaned
        .split_whitespace()
        .filter(|w| !TYPE_QUALIFIERS.contains(w))
        .collect();
    if words.is_empty() {
        None
    } else {
        Some(words.join(" "))
    }
}

fn is_integer_type(lower: &str) -> bool {
    let words: Vec<&str> = lower.split_whitespace().collect();
    if !words.is_empty()
        && words
            .iter()
            .all(|w| matches!(*w, "int" | "short" | "long" | "signed" | "unsigned"))
    {
        return true;
    }
    let w = lower.strip_suffix("_t").unwrap_or(lower);
    let numbered = |prefix: &str| {
        w.strip_prefix(prefix)
            .is_some_and(|rest| rest.is_empty() || rest.bytes().all(|b| b.is_ascii_digit()))
    };
    matches!(
        w,
        "integer"
            | "byte"
            | "size"
            | "ssize"
            | "ptrdiff"
            | "intptr"
            | "uintptr"
            | "uint"
            | "dword"
            | "word"
            | "glint"
            | "gluint"
            | "glsizei"
            | "atomicinteger"
            | "atomiclong"
    ) || numbered("int")
        || numbered("uint")
        || numbered("gint")
        || numbered("guint")
        || numbered("u")
        || numbered("i")
}

/// Type predicates bound to one scan configuration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TypeClassifier {
    pub loose_boolean: bool,
}

impl TypeClassifier {
    pub fn is_boolean(&self, ident: &Identifier) -> bool {
        self.is_boolean_text(ident.type_name.as_deref())
    }

    pub fn is_collection(&self, ident: &Identifier) -> bool {
        self.is_collection_text(ident.type_name.as_deref())
    }

    pub fn is_boolean_text(&self, type_name: Option<&str>) -> bool {
        type_name.is_some_and(|t| is_boolean_type(t, self.loose_boolean))
    }

    pub fn is_collection_text(&self, type_name: Option<&str>) -> bool {
        type_name.is_some_and(is_collection_type)
    }
}
