//! Serializable report shapes and their plain-text rendering. Field order in
//! each struct is the key order in the emitted JSON.

use std::fmt::Write;

use cyclograph_core::formulas::{Comparison, CountEntry, Detection, FormulaInputs, VerificationReport};
use cyclograph_core::structure::Check;
use cyclograph_core::{ComponentReport, CountResult};
use serde::Serialize;

use crate::spec::GroupSpecDocument;

#[derive(Serialize)]
pub struct DetectionJson {
    pub found: bool,
    pub structure: Option<String>,
    pub case: Option<String>,
    pub p: Option<u64>,
    #[serde(rename = "K_order")]
    pub k_order: Option<u64>,
    #[serde(rename = "H_order")]
    pub h_order: Option<u64>,
    #[serde(rename = "index_G_L")]
    pub index_g_l: Option<u64>,
}

impl From<&Detection> for DetectionJson {
    fn from(d: &Detection) -> Self {
        DetectionJson {
            found: d.found,
            structure: d.structure.map(|s| s.to_string()),
            case: d.case.map(|c| c.to_string()),
            p: d.p,
            k_order: d.k_order,
            h_order: d.h_order,
            index_g_l: d.index_g_l,
        }
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct CountJson {
    pub graph: String,
    pub method: String,
    pub value: u64,
}

#[derive(Serialize)]
pub struct ComparisonJson {
    pub name: String,
    pub formula: Option<u64>,
    pub brute: Option<u64>,
    pub status: String,
    pub note: Option<String>,
}

#[derive(Serialize)]
pub struct ReportJson<'a> {
    pub spec: &'a GroupSpecDocument,
    pub order: u64,
    /// `computed`, or `skipped: <reason>` when the group was not enumerated.
    pub brute_force: String,
    pub detection: DetectionJson,
    pub checks: Vec<CheckJson>,
    pub counts: Vec<CountJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparisons: Option<Vec<ComparisonJson>>,
}

fn checks_json(checks: &[Check]) -> Vec<CheckJson> {
    checks
        .iter()
        .map(|c| CheckJson {
            name: c.name.clone(),
            pass: c.pass,
        })
        .collect()
}

fn counts_json(counts: &[CountEntry]) -> Vec<CountJson> {
    counts
        .iter()
        .map(|c| CountJson {
            graph: c.graph.to_string(),
            method: c.method.to_string(),
            value: c.value,
        })
        .collect()
}

fn comparisons_json(comparisons: &[Comparison]) -> Vec<ComparisonJson> {
    comparisons
        .iter()
        .map(|c| ComparisonJson {
            name: c.name.clone(),
            formula: c.formula,
            brute: c.brute,
            status: c.status.to_string(),
            note: c.note.clone(),
        })
        .collect()
}

/// The `verify` report; `info` drops the comparisons.
pub fn report_json<'a>(
    spec: &'a GroupSpecDocument,
    report: &VerificationReport,
    brute_force: &str,
    with_comparisons: bool,
) -> ReportJson<'a> {
    ReportJson {
        spec,
        order: report.order,
        brute_force: brute_force.into(),
        detection: (&report.detection).into(),
        checks: checks_json(&report.checks),
        counts: counts_json(&report.counts),
        comparisons: with_comparisons.then(|| comparisons_json(&report.comparisons)),
    }
}

fn or_dash(v: Option<u64>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn detection_text(d: &Detection) -> String {
    if !d.found {
        return "no Frobenius or 2-Frobenius structure".into();
    }
    let mut s = d.structure.map(|k| k.to_string()).unwrap_or_default();
    if let Some(case) = d.case {
        let _ = write!(s, ", case {case}");
    }
    if let Some(p) = d.p {
        let _ = write!(s, " (p = {p})");
    }
    let _ = write!(s, ", |K| = {}", or_dash(d.k_order));
    let _ = write!(s, ", |H| = {}", or_dash(d.h_order));
    if d.index_g_l.is_some() {
        let _ = write!(s, ", |G:L| = {}", or_dash(d.index_g_l));
    }
    s
}

pub fn report_text(report: &VerificationReport, brute_force: &str, with_comparisons: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", report.order);
    let _ = writeln!(out, "brute force: {brute_force}");
    let _ = writeln!(out, "detection: {}", detection_text(&report.detection));
    if !report.checks.is_empty() {
        let _ = writeln!(out, "checks:");
        for c in &report.checks {
            let _ = writeln!(out, "  {:<5} {}", if c.pass { "pass" } else { "FAIL" }, c.name);
        }
    }
    let _ = writeln!(out, "counts:");
    for c in &report.counts {
        let _ = writeln!(out, "  {:<10} {:<12} {}", c.graph.to_string(), c.method.to_string(), c.value);
    }
    if with_comparisons {
        let _ = writeln!(out, "comparisons:");
        for c in &report.comparisons {
            let _ = write!(
                out,
                "  {:<20} formula {:<8} brute {:<8} {}",
                c.name,
                or_dash(c.formula),
                or_dash(c.brute),
                c.status
            );
            if let Some(note) = &c.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize)]
pub struct FormulaInputsJson {
    #[serde(rename = "K_order")]
    pub k_order: u64,
    #[serde(rename = "index_L_K")]
    pub index_l_k: Option<u64>,
    pub m_p: Option<u64>,
    pub m_p_star: Option<u64>,
    pub p: Option<u64>,
}

impl From<&FormulaInputs> for FormulaInputsJson {
    fn from(i: &FormulaInputs) -> Self {
        FormulaInputsJson {
            k_order: i.k_order,
            index_l_k: i.index_l_k,
            m_p: i.m_p,
            m_p_star: i.m_p_star,
            p: i.p,
        }
    }
}

#[derive(Serialize)]
pub struct FormulaJson {
    pub name: String,
    pub inputs: FormulaInputsJson,
}

/// A single component count, from either brute force or a formula.
#[derive(Serialize)]
pub struct ComponentJson {
    pub component_count: u64,
    pub graph: String,
    pub method: String,
    pub vertex_count: Option<u64>,
    pub component_sizes: Option<Vec<u64>>,
    pub formula: Option<FormulaJson>,
}

impl From<&ComponentReport> for ComponentJson {
    fn from(r: &ComponentReport) -> Self {
        ComponentJson {
            component_count: r.component_count,
            graph: r.kind.to_string(),
            method: r.method.to_string(),
            vertex_count: Some(r.vertex_count),
            component_sizes: r.component_sizes.clone(),
            formula: None,
        }
    }
}

impl ComponentJson {
    pub fn from_formula(graph: &str, r: &CountResult) -> Self {
        ComponentJson {
            component_count: r.value,
            graph: graph.into(),
            method: r.method.to_string(),
            vertex_count: None,
            component_sizes: None,
            formula: Some(FormulaJson {
                name: r.formula.to_string(),
                inputs: (&r.inputs).into(),
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("{} graph: {} components ({})", self.graph, self.component_count, self.method);
        if let Some(v) = self.vertex_count {
            let _ = write!(s, ", {v} vertices");
        }
        if let Some(f) = &self.formula {
            let i = &f.inputs;
            let _ = write!(s, ", formula {} with |K| = {}", f.name, i.k_order);
            for (label, value) in [("|L:K|", i.index_l_k), ("m_p", i.m_p), ("m_p^*", i.m_p_star), ("p", i.p)] {
                if let Some(v) = value {
                    let _ = write!(s, ", {label} = {v}");
                }
            }
        }
        if let Some(sizes) = &self.component_sizes {
            let _ = write!(s, "\nsizes: {}", compress_sizes(sizes));
        }
        s
    }
}

/// `[1, 1, 1, 3]` as `1 x3, 3`.
fn compress_sizes(sizes: &[u64]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let mut j = i;
        while j < sizes.len() && sizes[j] == sizes[i] {
            j += 1;
        }
        parts.push(if j - i > 1 {
            format!("{} x{}", sizes[i], j - i)
        } else {
            sizes[i].to_string()
        });
        i = j;
    }
    parts.join(", ")
}
