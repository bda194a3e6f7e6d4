//! The JSON facet document read by every subcommand.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use zkloop_core::{SimplicialComplex, VertexSubset};

pub const SCHEMA_VERSION: u32 = 1;

const FIELDS: [&str; 5] = ["schema_version", "name", "vertex_count", "facets", "golod_assert"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema_version: u32,
    pub name: String,
    pub vertex_count: usize,
    /// Facets as 1-indexed vertex lists.
    pub facets: Vec<Vec<u32>>,
    /// Members of `C_K` whose rational Golodness the author vouches for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golod_assert: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub line: Option<usize>,
    pub message: String,
}

impl DocumentError {
    fn new(line: Option<usize>, message: impl Into<String>) -> Self {
        DocumentError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for DocumentError {}

/// A parsed document together with the complex it describes.
#[derive(Debug, Clone)]
pub struct Input {
    pub document: ComplexDocument,
    pub complex: SimplicialComplex,
    pub asserted: BTreeSet<VertexSubset>,
}

impl ComplexDocument {
    pub fn from_complex(name: &str, complex: &SimplicialComplex) -> Self {
        ComplexDocument {
            schema_version: SCHEMA_VERSION,
            name: name.to_owned(),
            vertex_count: complex.vertex_count(),
            facets: complex.facets().iter().map(|f| f.to_vec()).collect(),
            golod_assert: None,
        }
    }

    /// Pretty JSON with a trailing newline; the format of the shipped
    /// fixtures.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"schema_version\": {},\n", self.schema_version));
        out.push_str(&format!(
            "  \"name\": {},\n",
            serde_json::to_string(&self.name).expect("strings serialize")
        ));
        out.push_str(&format!("  \"vertex_count\": {},\n", self.vertex_count));
        out.push_str("  \"facets\": [\n");
        out.push_str(&list_lines(&self.facets));
        if let Some(asserted) = &self.golod_assert {
            out.push_str("  ],\n  \"golod_assert\": [\n");
            out.push_str(&list_lines(asserted));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

fn list_lines(lists: &[Vec<u32>]) -> String {
    let lines: Vec<String> = lists
        .iter()
        .map(|f| format!("    {}", serde_json::to_string(f).expect("integer lists serialize")))
        .collect();
    if lines.is_empty() {
        String::new()
    } else {
        lines.join(",\n") + "\n"
    }
}

/// Parses and validates a document. Under `strict`, unknown fields,
/// repeated vertices within a facet and non-maximal facets are errors;
/// otherwise they are ignored or normalized away.
pub fn parse(text: &str, strict: bool) -> Result<Input, DocumentError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| DocumentError::new(Some(e.line()), e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| DocumentError::new(Some(1), "expected a JSON object"))?;
    if strict {
        if let Some(key) = object.keys().find(|k| !FIELDS.contains(&k.as_str())) {
            return Err(DocumentError::new(
                line_of_key(text, key),
                format!("unknown field `{key}`"),
            ));
        }
    }
    let document: ComplexDocument =
        serde_json::from_value(value).map_err(|e| DocumentError::new(None, e.to_string()))?;
    if document.schema_version != SCHEMA_VERSION {
        return Err(DocumentError::new(
            line_of_key(text, "schema_version"),
            format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                document.schema_version
            ),
        ));
    }
    let m = document.vertex_count;
    let check_list = |key: &str, index: usize, list: &[u32]| -> Result<(), DocumentError> {
        let line = || line_of_element(text, key, index);
        if list.is_empty() {
            return Err(DocumentError::new(line(), format!("{key}[{index}] is empty")));
        }
        if let Some(v) = list.iter().find(|&&v| v == 0 || v as usize > m) {
            return Err(DocumentError::new(
                line(),
                format!("{key}[{index}]: vertex {v} is outside 1..={m}"),
            ));
        }
        if strict && list.iter().collect::<BTreeSet<_>>().len() != list.len() {
            return Err(DocumentError::new(line(), format!("{key}[{index}] repeats a vertex")));
        }
        Ok(())
    };
    for (i, f) in document.facets.iter().enumerate() {
        check_list("facets", i, f)?;
    }
    let complex = SimplicialComplex::from_facets(m, document.facets.iter().map(|f| f.iter().copied()))
        .map_err(|e| DocumentError::new(line_of_key(text, "facets"), e.to_string()))?;
    if strict && complex.facets().len() != document.facets.len() {
        return Err(DocumentError::new(
            line_of_key(text, "facets"),
            "facets repeat or contain one another",
        ));
    }
    let mut asserted = BTreeSet::new();
    for (i, s) in document.golod_assert.iter().flatten().enumerate() {
        check_list("golod_assert", i, s)?;
        let subset = VertexSubset::from_vertices(m, s.iter().copied())
            .map_err(|e| DocumentError::new(line_of_element(text, "golod_assert", i), e.to_string()))?;
        asserted.insert(subset);
    }
    Ok(Input {
        document,
        complex,
        asserted,
    })
}

fn line_at(text: &str, offset: usize) -> usize {
    text[..offset].matches('\n').count() + 1
}

fn line_of_key(text: &str, key: &str) -> Option<usize> {
    text.find(&format!("\"{key}\"")).map(|at| line_at(text, at))
}

/// Line on which element `index` of the top-level array `key` starts.
fn line_of_element(text: &str, key: &str, index: usize) -> Option<usize> {
    let start = text.find(&format!("\"{key}\""))?;
    let open = start + text[start..].find('[')?;
    let mut depth = 0usize;
    let mut seen = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    for (offset, c) in text[open..].char_indices() {
        if in_string {
            match c {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => in_string = false,
                _ => {}
            }
            continue;
        }
        match c {
            '"' => in_string = true,
            '[' => {
                depth += 1;
                if depth == 2 {
                    if seen == index {
                        return Some(line_at(text, open + offset));
                    }
                    seen += 1;
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const PATH: &str = "{\n  \"schema_version\": 1,\n  \"name\": \"p\",\n  \"vertex_count\": 3,\n  \"facets\": [\n    [1,2],\n    [2,3]\n  ]\n}\n";

    #[test]
    fn parses_a_path() {
        let input = parse(PATH, true).unwrap();
        assert_eq!(input.complex.vertex_count(), 3);
        assert!(input.asserted.is_empty());
    }

    #[test]
    fn zero_index_points_at_its_line() {
        let bad = PATH.replace("[2,3]", "[0,3]");
        let err = parse(&bad, false).unwrap_err();
        assert_eq!(err.line, Some(7));
        assert!(err.message.contains("vertex 0"), "{err}");
    }

    #[test]
    fn strict_mode_rejects_unknown_fields() {
        let extra = PATH.replace("\"name\"", "\"colour\": \"red\",\n  \"name\"");
        assert!(parse(&extra, false).is_ok());
        let err = parse(&extra, true).unwrap_err();
        assert_eq!(err.line, Some(3));
    }

    #[test]
    fn strict_mode_rejects_non_maximal_facets() {
        let redundant = PATH.replace("[2,3]", "[2,3],\n    [3]");
        assert!(parse(&redundant, false).is_ok());
        assert!(parse(&redundant, true).is_err());
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let err = parse("{\n  \"schema_version\": 1,\n  oops\n}", false).unwrap_err();
        assert_eq!(err.line, Some(3));
    }

    #[test]
    fn rendering_round_trips() {
        let input = parse(PATH, true).unwrap();
        assert_eq!(input.document.to_json(), PATH);
        let mut doc = input.document.clone();
        doc.golod_assert = Some(vec![vec![1, 2]]);
        let again = parse(&doc.to_json(), true).unwrap();
        assert_eq!(again.document, doc);
        assert_eq!(again.asserted.len(), 1);
    }
}
