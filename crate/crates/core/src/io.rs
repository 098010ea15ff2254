//! Input documents, JSON reports and Graphviz export.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::analysis::{AnalysisReport, Witness};
use crate::c0::C0Analysis;
use crate::error::{Error, Result};
use crate::pair::Mode;
use crate::relation::{RelationRecord, RelationSystem};
use crate::scalar::Scalar;
use crate::space::{FiniteSpace, Subspace};

pub const FORMAT_VERSION: u32 = 1;

/// One generator entry: a fraction string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry(Scalar);

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let text = match &value {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            other => {
                return Err(de::Error::custom(Error::Fraction(other.to_string())));
            }
        };
        text.parse().map(Entry).map_err(de::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    #[serde(default)]
    format: Option<u32>,
    points: Vec<String>,
    #[serde(default)]
    generators: Vec<Vec<Entry>>,
    #[serde(default)]
    mode: Option<Mode>,
    #[serde(default)]
    c0: bool,
    #[serde(default)]
    infinity_label: Option<String>,
}

/// A parsed input document.
#[derive(Clone, Debug)]
pub struct SubspaceSpec {
    pub space: FiniteSpace,
    pub generators: Vec<Vec<Scalar>>,
    pub subspace: Subspace,
    pub mode: Option<Mode>,
    pub c0: bool,
    pub infinity_label: Option<String>,
}

/// Parses a JSON subspace document and reduces its generators.
pub fn parse_subspace(bytes: &[u8]) -> Result<SubspaceSpec> {
    let raw: RawSpec = serde_json::from_slice(bytes).map_err(|e| Error::Format(e.to_string()))?;
    if let Some(v) = raw.format {
        if v != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported format version {v}")));
        }
    }
    let space = FiniteSpace::new(raw.points)?;
    let generators: Vec<Vec<Scalar>> =
        raw.generators.into_iter().map(|row| row.into_iter().map(|e| e.0).collect()).collect();
    let subspace = Subspace::span(&space, &generators)?;
    Ok(SubspaceSpec {
        space,
        generators,
        subspace,
        mode: raw.mode,
        c0: raw.c0,
        infinity_label: raw.infinity_label,
    })
}

/// Parses a comma-separated row of fractions such as `1,1/2,-3`.
pub fn parse_row(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(str::parse).collect()
}

#[derive(Serialize)]
pub struct InputEcho {
    pub points: Vec<String>,
    pub generators: Vec<Vec<Scalar>>,
}

impl InputEcho {
    pub fn new(spec: &SubspaceSpec) -> Self {
        InputEcho { points: spec.space.labels().to_vec(), generators: spec.generators.clone() }
    }
}

#[derive(Serialize)]
pub struct WitnessDoc {
    pub op: crate::analysis::Op,
    pub f: Vec<Scalar>,
    pub g: Vec<Scalar>,
    pub combined: Vec<Scalar>,
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> Self {
        WitnessDoc {
            op: w.op,
            f: w.f.values().to_vec(),
            g: w.g.values().to_vec(),
            combined: w.combined.values().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct C0Doc {
    pub infinity_label: String,
    pub holds: bool,
    pub relations: Vec<RelationRecord>,
    pub hull: Vec<Vec<Scalar>>,
}

impl C0Doc {
    pub fn new(infinity_label: &str, analysis: &C0Analysis) -> Self {
        C0Doc {
            infinity_label: infinity_label.to_string(),
            holds: analysis.holds,
            relations: analysis.relations.records(),
            hull: analysis.hull.basis().vectors().to_vec(),
        }
    }
}

/// Full output of `analyze`. Field order is the JSON key order.
#[derive(Serialize)]
pub struct ReportDocument {
    pub format: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub mode: Mode,
    pub seed: u64,
    pub budget: usize,
    pub input: InputEcho,
    /// Labels of the space the analysis ran on (includes infinity under `--c0`).
    pub points: Vec<String>,
    pub basis: Vec<Vec<Scalar>>,
    pub is_sublattice: bool,
    pub is_subalgebra: bool,
    pub lattice_hull: Vec<Vec<Scalar>>,
    pub algebra_hull: Vec<Vec<Scalar>>,
    pub relations_lattice: Vec<RelationRecord>,
    pub relations_algebra: Vec<RelationRecord>,
    pub separates_points: bool,
    pub non_separated_pairs: Vec<[String; 2]>,
    pub zero_set: Vec<String>,
    pub witness: Option<WitnessDoc>,
    pub witness_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c0: Option<C0Doc>,
}

impl ReportDocument {
    pub fn new(
        spec: &SubspaceSpec,
        analyzed: &Subspace,
        report: &AnalysisReport,
        mode: Mode,
        seed: u64,
        budget: usize,
    ) -> Self {
        let space = analyzed.space();
        let label = |i: usize| space.label(i).to_string();
        ReportDocument {
            format: FORMAT_VERSION,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            mode,
            seed,
            budget,
            input: InputEcho::new(spec),
            points: space.labels().to_vec(),
            basis: analyzed.basis().vectors().to_vec(),
            is_sublattice: report.is_sublattice,
            is_subalgebra: report.is_subalgebra,
            lattice_hull: report.lattice_hull.basis().vectors().to_vec(),
            algebra_hull: report.algebra_hull.basis().vectors().to_vec(),
            relations_lattice: report.relations_lattice.records(),
            relations_algebra: report.relations_algebra.records(),
            separates_points: report.separation.separates,
            non_separated_pairs: report
                .separation
                .non_separated_pairs
                .iter()
                .map(|&(x, y)| [label(x), label(y)])
                .collect(),
            zero_set: report.separation.zero_set.iter().map(|&t| label(t)).collect(),
            witness: report.witness.as_ref().map(WitnessDoc::from),
            witness_note: report.witness_note.clone(),
            c0: None,
        }
    }
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering of a relation system: equalities as undirected double
/// edges, `0 < λ < 1` as labelled arrows `t → s`, zero points annotated `=0`.
pub fn emit_dot(system: &RelationSystem) -> String {
    let space = system.space();
    let zeros = system.zero_points();
    let mut out = String::from("digraph relations {\n    node [shape=ellipse];\n");
    for (i, label) in space.labels().iter().enumerate() {
        if zeros.contains(&i) {
            out.push_str(&format!("    {} [label={}];\n", quote(label), quote(&format!("{label} =0"))));
        } else {
            out.push_str(&format!("    {};\n", quote(label)));
        }
    }
    for r in system.relations().iter().filter(|r| r.t != r.s) {
        let (t, s) = (quote(space.label(r.t)), quote(space.label(r.s)));
        if r.lambda.is_one() {
            out.push_str(&format!("    {t} -> {s} [dir=none, color=\"black:black\"];\n"));
        } else {
            out.push_str(&format!("    {t} -> {s} [label=\"λ={}\"];\n", r.lambda));
        }
    }
    out.push_str("}\n");
    out
}
