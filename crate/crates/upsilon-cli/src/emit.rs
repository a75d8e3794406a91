//! Result documents and the piecewise-linear emitters.

use serde::Serialize;
use upsilon_core::pl::PLFunction;
use upsilon_core::upsilon::BoundsReport;

use crate::format_rational;

/// Envelope for computed invariants: what was computed, on which input, by
/// which engine version, and the exact payload.
#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub invariant: &'static str,
    pub input: String,
    pub engine_version: &'static str,
    pub payload: Payload,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Pl { vertices: Vec<VertexDoc> },
    Bounds { g3: i64, g4: i64, gc: i64 },
}

/// One vertex of a piecewise-linear function, both coordinates exact.
#[derive(Debug, Serialize)]
pub struct VertexDoc {
    pub t: String,
    pub value: String,
}

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlFormat {
    Json,
    Csv,
}

fn vertex_docs(f: &PLFunction) -> Vec<VertexDoc> {
    f.vertices()
        .iter()
        .map(|&(t, v)| VertexDoc {
            t: format_rational(t),
            value: format_rational(v),
        })
        .collect()
}

/// Renders a piecewise-linear function. JSON carries the exact vertex list;
/// CSV adds a decimal approximation column for plotting.
pub fn emit_pl(f: &PLFunction, format: PlFormat) -> String {
    match format {
        PlFormat::Json => serde_json::to_string_pretty(&vertex_docs(f))
            .expect("vertex serialization cannot fail"),
        PlFormat::Csv => {
            let mut out = String::from("t,value,approx\n");
            for &(t, v) in f.vertices() {
                let approx = *v.numer() as f64 / *v.denom() as f64;
                out.push_str(&format!(
                    "{},{},{}\n",
                    format_rational(t),
                    format_rational(v),
                    approx
                ));
            }
            out
        }
    }
}

/// Wraps a piecewise-linear function in a result document.
pub fn pl_result(input: &str, f: &PLFunction) -> ResultDocument {
    ResultDocument {
        invariant: "upsilon",
        input: input.to_string(),
        engine_version: ENGINE_VERSION,
        payload: Payload::Pl {
            vertices: vertex_docs(f),
        },
    }
}

/// Wraps genus bounds in a result document.
pub fn bounds_result(input: &str, b: &BoundsReport) -> ResultDocument {
    ResultDocument {
        invariant: "genus-bounds",
        input: input.to_string(),
        engine_version: ENGINE_VERSION,
        payload: Payload::Bounds {
            g3: b.g3,
            g4: b.g4,
            gc: b.gc,
        },
    }
}
