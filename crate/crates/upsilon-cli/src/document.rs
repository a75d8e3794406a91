//! The on-disk complex format.
//!
//! A complex document is UTF-8 JSON with a name, a generator list, and the
//! differential as adjacency lists; see `schema/complex.schema.json` for the
//! formal schema. Filtration levels in documents are integers only —
//! rational levels arise inside computations, never in inputs.

use serde::{Deserialize, Serialize};
use upsilon_core::complex::{Complex, Generator, ValidationReport};

/// Serialized form of a complex.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub differential: Vec<ArrowDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub id: String,
    pub maslov: i64,
    pub alg: i64,
    pub alex: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub from: String,
    pub to: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    /// Malformed JSON or schema mismatch; carries serde's line and column.
    #[error("syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    /// Structurally impossible complex (duplicate or unknown ids).
    #[error("{0}")]
    Build(#[from] upsilon_core::Error),
    /// The complex parsed but violates admissibility axioms.
    #[error("complex is not admissible:\n{0}")]
    Validation(ValidationReport),
}

/// Parses a document without the admissibility gate. Structural errors
/// (syntax, unknown ids) still fail.
pub fn parse_unvalidated(text: &str) -> Result<(String, Complex), DocumentError> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    let generators = doc
        .generators
        .into_iter()
        .map(|g| Generator::new(g.id, g.maslov, g.alg, g.alex))
        .collect();
    let arrows = doc
        .differential
        .into_iter()
        .map(|a| (a.from, a.to))
        .collect();
    Ok((doc.name, Complex::new(generators, arrows)?))
}

/// Parses and validates a document; every complex returned from here is
/// admissible.
pub fn parse_complex(text: &str) -> Result<(String, Complex), DocumentError> {
    let (name, complex) = parse_unvalidated(text)?;
    let report = complex.validate();
    if !report.is_admissible() {
        return Err(DocumentError::Validation(report));
    }
    Ok((name, complex))
}

/// Serializes a complex, preserving generator order. Boundary target lists
/// come out in generator order, so emit-then-parse reproduces the complex
/// exactly.
pub fn emit_complex(name: &str, c: &Complex) -> String {
    let generators = c
        .generators()
        .iter()
        .map(|g| GeneratorDoc {
            id: g.id.clone(),
            maslov: g.maslov,
            alg: g.alg,
            alex: g.alex,
        })
        .collect();
    let differential = c
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| !c.boundary_of(*i).is_empty())
        .map(|(i, g)| ArrowDoc {
            from: g.id.clone(),
            to: c
                .boundary_of(i)
                .iter()
                .map(|&t| c.generator(t).id.clone())
                .collect(),
        })
        .collect();
    let doc = ComplexDocument {
        name: name.to_string(),
        generators,
        differential,
    };
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}
