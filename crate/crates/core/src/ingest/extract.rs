//! Declaration extraction from tree-sitter syntax trees.
//!
//! Each language gets a small visitor keyed on declaration node kinds.
//! Anything not dispatched is walked through, so parameters are only
//! reported from the constructs that own them (methods, constructors,
//! catch clauses) and lambda parameters never are.

use tree_sitter::{Node, Parser};

use super::{is_test_artifact, Category, Identifier, Language};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Decl {
    pub name: String,
    pub category: Category,
    pub type_name: Option<String>,
    pub line: u32,
}

#[derive(Debug, Default)]
pub(crate) struct Extracted {
    pub decls: Vec<Decl>,
    /// Set when the file parsed with syntax errors; the decls are partial.
    pub warning: Option<String>,
}

pub(crate) fn extract_source(
    bytes: &[u8],
    language: Language,
    exclude_tests: bool,
) -> Result<Extracted, String> {
    let grammar: tree_sitter::Language = match language {
        Language::C => tree_sitter_c::LANGUAGE.into(),
        Language::Cpp => tree_sitter_cpp::LANGUAGE.into(),
        Language::Java => tree_sitter_java::LANGUAGE.into(),
        Language::CSharp => tree_sitter_c_sharp::LANGUAGE.into(),
        Language::Unknown => return Err("no grammar for unknown language".into()),
    };
    let mut parser = Parser::new();
    parser
        .set_language(&grammar)
        .map_err(|e| format!("grammar load failed: {e}"))?;
    let tree = parser
        .parse(bytes, None)
        .ok_or_else(|| "parser produced no tree".to_string())?;
    let root = tree.root_node();

    let mut walker = Walker {
        src: bytes,
        language,
        exclude_tests,
        out: Vec::new(),
    };
    match language {
        Language::Java => walker.java(root),
        Language::C | Language::Cpp => walker.c_family(root),
        Language::CSharp => walker.csharp(root),
        Language::Unknown => unreachable!(),
    }
    let warning = root
        .has_error()
        .then(|| "syntax errors; extraction may be partial".to_string());
    Ok(Extracted {
        decls: walker.out,
        warning,
    })
}

fn named_children<'t>(node: Node<'t>) -> Vec<Node<'t>> {
    let mut cursor = node.walk();
    node.named_children(&mut cursor).collect()
}

fn field_children<'t>(node: Node<'t>, field: &str) -> Vec<Node<'t>> {
    let mut cursor = node.walk();
    node.children_by_field_name(field, &mut cursor).collect()
}

/// How a C/C++ declarator resolved.
enum Declarator<'t> {
    Var {
        name: Node<'t>,
        suffix: String,
    },
    Func {
        name: Option<Node<'t>>,
        suffix: String,
        params: Option<Node<'t>>,
    },
    FnPointer {
        name: Node<'t>,
    },
    Unnamed,
}

struct Walker<'s> {
    src: &'s [u8],
    language: Language,
    exclude_tests: bool,
    out: Vec<Decl>,
}

impl<'s> Walker<'s> {
    fn text(&self, node: Node) -> Option<&'s str> {
        std::str::from_utf8(&self.src[node.byte_range()]).ok()
    }

    fn type_text(&self, node: Option<Node>) -> Option<String> {
        let raw = String::from_utf8_lossy(&self.src[node?.byte_range()]).into_owned();
        let norm = raw.split_whitespace().collect::<Vec<_>>().join(" ");
        (!norm.is_empty()).then_some(norm)
    }

    fn push(&mut self, name: Node, category: Category, type_name: Option<String>) {
        let Some(raw) = self.text(name) else { return };
        let raw = if self.language == Language::CSharp {
            raw.strip_prefix('@').unwrap_or(raw)
        } else {
            raw
        };
        // `_` and friends carry no words to split.
        if !Identifier::is_legal_name(raw, self.language) || !raw.chars().any(char::is_alphanumeric)
        {
            return;
        }
        self.out.push(Decl {
            name: raw.to_string(),
            category,
            type_name,
            line: name.start_position().row as u32 + 1,
        });
    }

    fn is_excluded(&self, name: Option<Node>) -> bool {
        self.exclude_tests
            && name
                .and_then(|n| self.text(n))
                .is_some_and(is_test_artifact)
    }

    // ---- Java ----

    fn java(&mut self, node: Node) {
        match node.kind() {
            "class_declaration"
            | "interface_declaration"
            | "enum_declaration"
            | "record_declaration"
            | "annotation_type_declaration" => {
                let name = node.child_by_field_name("name");
                if self.is_excluded(name) {
                    return;
                }
                if let Some(name) = name {
                    self.push(name, Category::Class, None);
                }
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.java_params(params, Category::Attribute);
                }
                let enum_name = (node.kind() == "enum_declaration")
                    .then(|| name.and_then(|n| self.type_text(Some(n))))
                    .flatten();
                if let Some(body) = node.child_by_field_name("body") {
                    for child in named_children(body) {
                        if child.kind() == "enum_constant" {
                            if let Some(n) = child.child_by_field_name("name") {
                                self.push(n, Category::Attribute, enum_name.clone());
                            }
                        }
                        self.java(child);
                    }
                }
                return;
            }
            "method_declaration" | "annotation_type_element_declaration" => {
                let name = node.child_by_field_name("name");
                if self.is_excluded(name) {
                    return;
                }
                let mut ty = self.type_text(node.child_by_field_name("type"));
                if let (Some(t), Some(d)) = (&mut ty, node.child_by_field_name("dimensions")) {
                    t.push_str(&self.type_text(Some(d)).unwrap_or_default());
                }
                if let Some(name) = name {
                    self.push(name, Category::Function, ty);
                }
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.java_params(params, Category::Parameter);
                }
                if let Some(body) = node.child_by_field_name("body") {
                    self.java(body);
                }
                return;
            }
            "constructor_declaration" | "compact_constructor_declaration" => {
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.java_params(params, Category::Parameter);
                }
                if let Some(body) = node.child_by_field_name("body") {
                    self.java(body);
                }
                return;
            }
            "field_declaration" | "constant_declaration" => {
                self.java_variables(node, Category::Attribute);
            }
            "local_variable_declaration" => {
                self.java_variables(node, Category::DeclarationStatement);
            }
            "enhanced_for_statement" | "resource" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = self.type_text(node.child_by_field_name("type"));
                    self.push(name, Category::DeclarationStatement, ty);
                }
            }
            "catch_formal_parameter" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = named_children(node)
                        .into_iter()
                        .find(|c| c.kind() == "catch_type");
                    self.push(name, Category::Parameter, self.type_text(ty));
                }
            }
            _ => {}
        }
        for child in named_children(node) {
            self.java(child);
        }
    }

    fn java_variables(&mut self, node: Node, category: Category) {
        let base = self.type_text(node.child_by_field_name("type"));
        for decl in field_children(node, "declarator") {
            let Some(name) = decl.child_by_field_name("name") else {
                continue;
            };
            let mut ty = base.clone();
            if let (Some(t), Some(d)) = (&mut ty, decl.child_by_field_name("dimensions")) {
                t.push_str(&self.type_text(Some(d)).unwrap_or_default());
            }
            self.push(name, category, ty);
        }
    }

    fn java_params(&mut self, params: Node, category: Category) {
        for p in named_children(params) {
            match p.kind() {
                "formal_parameter" => {
                    let Some(name) = p.child_by_field_name("name") else {
                        continue;
                    };
                    let mut ty = self.type_text(p.child_by_field_name("type"));
                    if let (Some(t), Some(d)) = (&mut ty, p.child_by_field_name("dimensions")) {
                        t.push_str(&self.type_text(Some(d)).unwrap_or_default());
                    }
                    self.push(name, category, ty);
                }
                "spread_parameter" => {
                    let children = named_children(p);
                    let ty = children
                        .iter()
                        .find(|c| !matches!(c.kind(), "modifiers" | "variable_declarator"))
                        .and_then(|t| self.type_text(Some(*t)))
                        .map(|t| format!("{t}..."));
                    let name = children
                        .iter()
                        .find(|c| c.kind() == "variable_declarator")
                        .and_then(|d| d.child_by_field_name("name"));
                    if let Some(name) = name {
                        self.push(name, category, ty);
                    }
                }
                _ => {}
            }
        }
    }

    // ---- C and C++ ----

    /// Declared base type with its cv-qualifiers, e.g. `const char`.
    fn c_base_type(&self, node: Node) -> Option<String> {
        let base = self.type_text(node.child_by_field_name("type"))?;
        let quals: Vec<String> = named_children(node)
            .into_iter()
            .filter(|c| c.kind() == "type_qualifier")
            .filter_map(|c| self.type_text(Some(c)))
            .collect();
        if quals.is_empty() {
            Some(base)
        } else {
            Some(format!("{} {base}", quals.join(" ")))
        }
    }

    fn resolve<'t>(&self, node: Node<'t>) -> Declarator<'t> {
        let mut suffix = String::new();
        let mut cur = node;
        loop {
            let next = match cur.kind() {
                "identifier" | "field_identifier" | "type_identifier" => {
                    return Declarator::Var { name: cur, suffix };
                }
                "qualified_identifier" | "template_function" => cur.child_by_field_name("name"),
                "pointer_declarator" => {
                    suffix.push('*');
                    cur.child_by_field_name("declarator")
                }
                "reference_declarator" => {
                    suffix.push('&');
                    named_children(cur).into_iter().next()
                }
                "array_declarator" => {
                    suffix.push_str("[]");
                    cur.child_by_field_name("declarator")
                }
                "init_declarator" => cur.child_by_field_name("declarator"),
                "parenthesized_declarator" | "attributed_declarator" => {
                    named_children(cur).into_iter().next()
                }
                "function_declarator" => {
                    let params = cur.child_by_field_name("parameters");
                    let Some(inner) = cur.child_by_field_name("declarator") else {
                        return Declarator::Unnamed;
                    };
                    if inner.kind() == "parenthesized_declarator" {
                        return match self.resolve(inner) {
                            Declarator::Var { name, .. } | Declarator::FnPointer { name } => {
                                Declarator::FnPointer { name }
                            }
                            _ => Declarator::Unnamed,
                        };
                    }
                    let name = match self.resolve(inner) {
                        Declarator::Var { name, .. } => Some(name),
                        _ => None,
                    };
                    return Declarator::Func {
                        name,
                        suffix,
                        params,
                    };
                }
                _ => return Declarator::Unnamed,
            };
            match next {
                Some(n) => cur = n,
                None => return Declarator::Unnamed,
            }
        }
    }

    fn c_family(&mut self, node: Node) {
        match node.kind() {
            "struct_specifier" | "class_specifier" | "union_specifier" | "enum_specifier" => {
                if node.child_by_field_name("body").is_some() {
                    let name = node.child_by_field_name("name");
                    if self.is_excluded(name) {
                        return;
                    }
                    if let Some(name) = name {
                        if let Declarator::Var { name, .. } = self.resolve(name) {
                            self.push(name, Category::Class, None);
                        }
                    }
                    if node.kind() == "enum_specifier" {
                        self.c_enumerators(node, name);
                        return;
                    }
                }
            }
            "type_definition" => {
                // `typedef struct { ... } name;` names an otherwise anonymous type.
                if let Some(spec) = node.child_by_field_name("type") {
                    let anonymous = matches!(
                        spec.kind(),
                        "struct_specifier"
                            | "class_specifier"
                            | "union_specifier"
                            | "enum_specifier"
                    ) && spec.child_by_field_name("name").is_none()
                        && spec.child_by_field_name("body").is_some();
                    if anonymous {
                        let decl = field_children(node, "declarator").into_iter().next();
                        let name = decl.and_then(|d| match self.resolve(d) {
                            Declarator::Var { name, suffix } if suffix.is_empty() => Some(name),
                            _ => None,
                        });
                        if self.is_excluded(name) {
                            return;
                        }
                        if let Some(name) = name {
                            self.push(name, Category::Class, None);
                        }
                        if spec.kind() == "enum_specifier" {
                            self.c_enumerators(spec, name);
                            return;
                        }
                    }
                }
            }
            "function_definition" => {
                self.c_function_definition(node);
                return;
            }
            "declaration" | "field_declaration" => {
                let in_class = node.kind() == "field_declaration"
                    || node
                        .parent()
                        .is_some_and(|p| p.kind() == "field_declaration_list");
                self.c_declaration(node, in_class);
            }
            "for_range_loop" => {
                let base = self.c_base_type(node);
                if let Some(decl) = node.child_by_field_name("declarator") {
                    if let Declarator::Var { name, suffix } = self.resolve(decl) {
                        let ty = base.map(|b| format!("{b}{suffix}"));
                        self.push(name, Category::DeclarationStatement, ty);
                    }
                }
            }
            "catch_clause" => {
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.c_params(params);
                }
            }
            "friend_declaration" => return,
            "lambda_expression" => {
                if let Some(body) = node.child_by_field_name("body") {
                    self.c_family(body);
                }
                return;
            }
            _ => {}
        }
        for child in named_children(node) {
            self.c_family(child);
        }
    }

    fn c_enumerators(&mut self, spec: Node, name: Option<Node>) {
        let enum_name = name.and_then(|n| self.type_text(Some(n)));
        if let Some(body) = spec.child_by_field_name("body") {
            for e in named_children(body) {
                if e.kind() == "enumerator" {
                    if let Some(n) = e.child_by_field_name("name") {
                        self.push(n, Category::Attribute, enum_name.clone());
                    }
                }
            }
        }
    }

    fn c_function_definition(&mut self, node: Node) {
        let base = self.c_base_type(node);
        let Some(decl) = node.child_by_field_name("declarator") else {
            return;
        };
        if let Declarator::Func {
            name,
            suffix,
            params,
        } = self.resolve(decl)
        {
            if self.is_excluded(name) {
                return;
            }
            // No return type: constructor, destructor or conversion; the
            // name repeats the class name and is not reported.
            if let (Some(name), Some(base)) = (name, &base) {
                self.push(name, Category::Function, Some(format!("{base}{suffix}")));
            }
            if let Some(params) = params {
                self.c_params(params);
            }
        }
        if let Some(body) = node.child_by_field_name("body") {
            self.c_family(body);
        }
    }

    fn c_declaration(&mut self, node: Node, in_class: bool) {
        let base = self.c_base_type(node);
        for decl in field_children(node, "declarator") {
            match self.resolve(decl) {
                Declarator::Var { name, suffix } => {
                    let Some(base) = &base else { continue };
                    let category = if in_class {
                        Category::Attribute
                    } else {
                        Category::DeclarationStatement
                    };
                    self.push(name, category, Some(format!("{base}{suffix}")));
                }
                Declarator::FnPointer { name } => {
                    let Some(base) = &base else { continue };
                    let category = if in_class {
                        Category::Attribute
                    } else {
                        Category::DeclarationStatement
                    };
                    self.push(name, category, Some(format!("{base} (*)()")));
                }
                Declarator::Func {
                    name,
                    suffix,
                    params,
                } => {
                    if self.is_excluded(name) {
                        continue;
                    }
                    if let (Some(name), Some(base)) = (name, &base) {
                        self.push(name, Category::Function, Some(format!("{base}{suffix}")));
                    }
                    if let Some(params) = params {
                        self.c_params(params);
                    }
                }
                Declarator::Unnamed => {}
            }
        }
    }

    fn c_params(&mut self, params: Node) {
        for p in named_children(params) {
            if !matches!(
                p.kind(),
                "parameter_declaration" | "optional_parameter_declaration"
            ) {
                continue;
            }
            let Some(decl) = p.child_by_field_name("declarator") else {
                continue;
            };
            let base = self.c_base_type(p);
            match self.resolve(decl) {
                Declarator::Var { name, suffix } => {
                    self.push(
                        name,
                        Category::Parameter,
                        base.map(|b| format!("{b}{suffix}")),
                    );
                }
                Declarator::FnPointer { name } => {
                    self.push(
                        name,
                        Category::Parameter,
                        base.map(|b| format!("{b} (*)()")),
                    );
                }
                Declarator::Func {
                    name: Some(name), ..
                } => {
                    self.push(name, Category::Parameter, base);
                }
                _ => {}
            }
        }
    }

    // ---- C# (extraction only) ----

    fn csharp(&mut self, node: Node) {
        match node.kind() {
            "class_declaration"
            | "interface_declaration"
            | "struct_declaration"
            | "enum_declaration"
            | "record_declaration" => {
                let name = node.child_by_field_name("name");
                if self.is_excluded(name) {
                    return;
                }
                if let Some(name) = name {
                    self.push(name, Category::Class, None);
                }
            }
            "method_declaration" | "local_function_statement" => {
                let name = node.child_by_field_name("name");
                if self.is_excluded(name) {
                    return;
                }
                let ty = self.type_text(
                    node.child_by_field_name("returns")
                        .or_else(|| node.child_by_field_name("type")),
                );
                if let Some(name) = name {
                    self.push(name, Category::Function, ty);
                }
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.csharp_params(params);
                }
                if let Some(body) = node.child_by_field_name("body") {
                    self.csharp(body);
                }
                return;
            }
            "constructor_declaration" => {
                if let Some(params) = node.child_by_field_name("parameters") {
                    self.csharp_params(params);
                }
                if let Some(body) = node.child_by_field_name("body") {
                    self.csharp(body);
                }
                return;
            }
            "property_declaration" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = self.type_text(node.child_by_field_name("type"));
                    self.push(name, Category::Attribute, ty);
                }
            }
            "enum_member_declaration" => {
                if let Some(name) = node.child_by_field_name("name") {
                    self.push(name, Category::Attribute, None);
                }
            }
            "variable_declaration" => {
                let in_class = node.parent().is_some_and(|p| {
                    matches!(p.kind(), "field_declaration" | "event_field_declaration")
                });
                let category = if in_class {
                    Category::Attribute
                } else {
                    Category::DeclarationStatement
                };
                let ty = self.type_text(node.child_by_field_name("type"));
                for d in named_children(node) {
                    if d.kind() == "variable_declarator" {
                        if let Some(name) = d.child_by_field_name("name") {
                            self.push(name, category, ty.clone());
                        }
                    }
                }
            }
            "foreach_statement" => {
                if let Some(left) = node.child_by_field_name("left") {
                    if left.kind() == "identifier" {
                        let ty = self.type_text(node.child_by_field_name("type"));
                        self.push(left, Category::DeclarationStatement, ty);
                    }
                }
            }
            "catch_declaration" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = self.type_text(node.child_by_field_name("type"));
                    self.push(name, Category::Parameter, ty);
                }
            }
            "lambda_expression" | "anonymous_method_expression" => {
                if let Some(body) = node.child_by_field_name("body") {
                    self.csharp(body);
                }
                return;
            }
            _ => {}
        }
        for child in named_children(node) {
            self.csharp(child);
        }
    }

    fn csharp_params(&mut self, params: Node) {
        let mut pending_type: Option<Node> = None;
        let mut cursor = params.walk();
        for (i, child) in params.children(&mut cursor).enumerate() {
            match (child.kind(), params.field_name_for_child(i as u32)) {
                ("parameter", _) => {
                    if let Some(name) = child.child_by_field_name("name") {
                        let ty = self.type_text(child.child_by_field_name("type"));
                        self.push(name, Category::Parameter, ty);
                    }
                }
                // `params T[] name` appears as loose type/name fields.
                (_, Some("type")) => pending_type = Some(child),
                (_, Some("name")) => {
                    let ty = self
                        .type_text(pending_type.take())
                        .map(|t| format!("{t}..."));
                    self.push(child, Category::Parameter, ty);
                }
                _ => {}
            }
        }
    }
}
