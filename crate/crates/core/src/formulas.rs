//! Closed-form component counts, the subgroup counts they consume, and a
//! report that sets each formula next to its brute-force value.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::is_power_of;
use crate::error::{Error, Result};
use crate::field::AffineGroupSpec;
use crate::graphs::{delta_components, gamma_components, GraphKind, Method};
use crate::group::EnumeratedGroup;
use crate::structure::{
    detect_frobenius, detect_two_frobenius, verify_structure, CaseLabel, Check, FrobeniusDecomposition,
    TwoFrobeniusDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaName {
    /// `|K| + 1`, kernel of mixed order.
    ThmA,
    /// `|K| + m_p(G)`, `K` and `G/L` both p-groups.
    ThmB,
    /// `|K| + |L:K| + m_p^*`.
    ThmC,
    /// Frobenius group with p-group kernel: `|K| + m_p(K)`.
    FrobKernelPPower,
    /// Frobenius group with kernel of mixed order: `|K| + 1`.
    FrobKernelMixed,
    /// Commuting graph of a 2-Frobenius group: `|K| + 1`.
    GammaTwoFrobenius,
}

impl fmt::Display for FormulaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaName::ThmA => "ThmA",
            FormulaName::ThmB => "ThmB",
            FormulaName::ThmC => "ThmC",
            FormulaName::FrobKernelPPower => "FrobKernelPPower",
            FormulaName::FrobKernelMixed => "FrobKernelMixed",
            FormulaName::GammaTwoFrobenius => "GammaTwoFrobenius",
        })
    }
}

/// Quantities a formula consumed; unused ones stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormulaInputs {
    pub k_order: u64,
    pub index_l_k: Option<u64>,
    pub m_p: Option<u64>,
    pub m_p_star: Option<u64>,
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub value: u64,
    pub formula: FormulaName,
    /// `Formula` when the inputs came from an enumerated group, `Structured`
    /// when they were read off an affine spec.
    pub method: Method,
    pub inputs: FormulaInputs,
}

impl CountResult {
    /// Re-evaluates the named formula on the stored inputs.
    pub fn recompute(&self) -> Option<u64> {
        let i = &self.inputs;
        match self.formula {
            FormulaName::ThmA | FormulaName::FrobKernelMixed | FormulaName::GammaTwoFrobenius => {
                Some(i.k_order + 1)
            }
            FormulaName::ThmB | FormulaName::FrobKernelPPower => Some(i.k_order + i.m_p?),
            FormulaName::ThmC => Some(i.k_order + i.index_l_k? + i.m_p_star?),
        }
    }
}

fn count_order_p<'a>(group: &EnumeratedGroup, members: impl Iterator<Item = &'a usize>, p: u64) -> Result<u64> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let elements = members.filter(|&&x| group.element_order(x) == p).count() as u64;
    if !elements.is_multiple_of(p - 1) {
        return Err(Error::Inconsistent(format!(
            "{elements} elements of order {p} do not split into subgroups of order {p}"
        )));
    }
    Ok(elements / (p - 1))
}

/// Number of subgroups of order `p`.
pub fn m_p(group: &EnumeratedGroup, p: u64) -> Result<u64> {
    let all: Vec<usize> = (0..group.order()).collect();
    count_order_p(group, all.iter(), p)
}

/// Number of order-`p` subgroups whose centralizer is a p-group, i.e. that
/// no element of another prime order centralizes.
pub fn m_p_star(group: &EnumeratedGroup, p: u64) -> Result<u64> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut seen = vec![false; group.order()];
    let mut buf = vec![0; group.degree()];
    let mut count = 0;
    for x in 1..group.order() {
        if seen[x] || group.element_order(x) != p {
            continue;
        }
        let mut cur = x;
        while cur != 0 {
            seen[cur] = true;
            cur = group.product_with(cur, x, &mut buf);
        }
        if is_power_of(group.centralizer_order(x), p) {
            count += 1;
        }
    }
    Ok(count)
}

/// Δ count for a verified 2-Frobenius decomposition of an enumerated group.
pub fn delta_count_two_frobenius(group: &EnumeratedGroup, dec: &TwoFrobeniusDecomposition<'_>) -> Result<CountResult> {
    let k_order = dec.k_order();
    let result = match dec.case_label {
        CaseLabel::A => CountResult {
            value: k_order + 1,
            formula: FormulaName::ThmA,
            method: Method::Formula,
            inputs: FormulaInputs {
                k_order,
                ..FormulaInputs::default()
            },
        },
        CaseLabel::B => {
            let p = dec.p.ok_or_else(|| Error::Inconsistent("case B without a prime".into()))?;
            let m = m_p(group, p)?;
            CountResult {
                value: k_order + m,
                formula: FormulaName::ThmB,
                method: Method::Formula,
                inputs: FormulaInputs {
                    k_order,
                    m_p: Some(m),
                    p: Some(p),
                    ..FormulaInputs::default()
                },
            }
        }
        CaseLabel::C => {
            let p = dec.p.ok_or_else(|| Error::Inconsistent("case C without a prime".into()))?;
            let m = m_p_star(group, p)?;
            CountResult {
                value: k_order + dec.h_order + m,
                formula: FormulaName::ThmC,
                method: Method::Formula,
                inputs: FormulaInputs {
                    k_order,
                    index_l_k: Some(dec.h_order),
                    m_p_star: Some(m),
                    p: Some(p),
                    ..FormulaInputs::default()
                },
            }
        }
    };
    Ok(result)
}

/// Δ count for an affine group read off its spec, without enumerating it.
pub fn delta_count_structured(spec: &AffineGroupSpec) -> Result<CountResult> {
    let k_order = spec.k_order();
    match spec.case_label() {
        CaseLabel::A => Ok(CountResult {
            value: k_order + 1,
            formula: FormulaName::ThmA,
            method: Method::Structured,
            inputs: FormulaInputs {
                k_order,
                ..FormulaInputs::default()
            },
        }),
        CaseLabel::B => Err(Error::Uncomputable(
            "case B needs m_p(G), which the structured path does not provide; enumerate the group".into(),
        )),
        CaseLabel::C => {
            let breakdown = spec.stabilizer_breakdown()?;
            let m = breakdown.m_p_star()?;
            Ok(CountResult {
                value: k_order + spec.d() + m,
                formula: FormulaName::ThmC,
                method: Method::Structured,
                inputs: FormulaInputs {
                    k_order,
                    index_l_k: Some(spec.d()),
                    m_p_star: Some(m),
                    p: Some(breakdown.p),
                    ..FormulaInputs::default()
                },
            })
        }
    }
}

pub fn delta_count_frobenius(dec: &FrobeniusDecomposition<'_>) -> Result<CountResult> {
    let group = dec.kernel.group();
    let k_order = dec.kernel.order() as u64;
    match crate::arith::prime_power_base(k_order) {
        Some(p) => {
            let m = count_order_p(group, dec.kernel.members().iter(), p)?;
            Ok(CountResult {
                value: k_order + m,
                formula: FormulaName::FrobKernelPPower,
                method: Method::Formula,
                inputs: FormulaInputs {
                    k_order,
                    m_p: Some(m),
                    p: Some(p),
                    ..FormulaInputs::default()
                },
            })
        }
        None => Ok(CountResult {
            value: k_order + 1,
            formula: FormulaName::FrobKernelMixed,
            method: Method::Formula,
            inputs: FormulaInputs {
                k_order,
                ..FormulaInputs::default()
            },
        }),
    }
}

pub fn gamma_count_two_frobenius(k_order: u64, method: Method) -> CountResult {
    CountResult {
        value: k_order + 1,
        formula: FormulaName::GammaTwoFrobenius,
        method,
        inputs: FormulaInputs {
            k_order,
            ..FormulaInputs::default()
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    TwoFrobenius,
    Frobenius,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::TwoFrobenius => "2-frobenius",
            StructureKind::Frobenius => "frobenius",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Detection {
    pub found: bool,
    pub structure: Option<StructureKind>,
    pub case: Option<CaseLabel>,
    pub p: Option<u64>,
    pub k_order: Option<u64>,
    /// Complement order: `|L:K|` for 2-Frobenius groups, `|G:K|` for Frobenius groups.
    pub h_order: Option<u64>,
    pub index_g_l: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountEntry {
    pub graph: GraphKind,
    pub method: Method,
    pub value: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComparisonStatus {
    Match,
    Mismatch,
    Skipped,
}

impl fmt::Display for ComparisonStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComparisonStatus::Match => "match",
            ComparisonStatus::Mismatch => "mismatch",
            ComparisonStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub name: String,
    pub formula: Option<u64>,
    pub brute: Option<u64>,
    pub status: ComparisonStatus,
    /// Why a side is missing, when one is.
    pub note: Option<String>,
}

impl Comparison {
    fn new(name: &str, formula: Option<u64>, brute: Option<u64>, note: Option<String>) -> Self {
        let status = match (formula, brute) {
            (Some(f), Some(b)) if f == b => ComparisonStatus::Match,
            (Some(_), Some(_)) => ComparisonStatus::Mismatch,
            _ => ComparisonStatus::Skipped,
        };
        Comparison {
            name: name.into(),
            formula,
            brute,
            status,
            note,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub order: u64,
    pub detection: Detection,
    pub checks: Vec<Check>,
    pub counts: Vec<CountEntry>,
    pub comparisons: Vec<Comparison>,
}

impl VerificationReport {
    /// True when no comparison is a mismatch.
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(|c| c.status != ComparisonStatus::Mismatch)
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn count(&self, graph: GraphKind, method: Method) -> Option<u64> {
        self.counts
            .iter()
            .find(|c| c.graph == graph && c.method == method)
            .map(|c| c.value)
    }

    pub fn comparison(&self, name: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.name == name)
    }

    fn push_count(&mut self, graph: GraphKind, method: Method, value: u64) {
        self.counts.push(CountEntry { graph, method, value });
    }
}

pub const CMP_DELTA: &str = "delta";
pub const CMP_GAMMA: &str = "gamma";
pub const CMP_DELTA_STRUCTURED: &str = "delta (structured)";
pub const CMP_M_P_STAR: &str = "m_p^*";
pub const CMP_K_ORDER: &str = "|K|";
pub const CMP_H_ORDER: &str = "|L:K|";
pub const CMP_INDEX: &str = "|G:L|";
pub const CHECK_BREAKDOWN_TOTAL: &str = "stabilizer breakdown covers every nonzero vector of K";
pub const CHECK_BREAKDOWN_FIXED: &str = "fixed plus free vectors account for K#";

fn error_note(e: &Error) -> Option<String> {
    Some(format!("skipped: {e}"))
}

/// Runs detection, every applicable formula, and the brute-force counts that
/// fit under `pair_cap`, and lines them up. Pass the enumerated group when
/// there is one; pass the affine spec to add the structured cross-checks
/// (and to get formula values when the group is too large to enumerate).
pub fn verify(
    group: Option<&EnumeratedGroup>,
    affine: Option<&AffineGroupSpec>,
    pair_cap: u64,
) -> Result<VerificationReport> {
    let order = match (group, affine) {
        (Some(g), _) => g.order() as u64,
        (None, Some(s)) => s.group_order(),
        (None, None) => return Err(Error::InvalidFamily("verify needs a group or an affine spec".into())),
    };
    let mut report = VerificationReport {
        order,
        detection: Detection::default(),
        checks: Vec::new(),
        counts: Vec::new(),
        comparisons: Vec::new(),
    };
    match group {
        Some(g) => verify_enumerated(g, affine, pair_cap, &mut report)?,
        None => verify_structured_only(affine.expect("checked above"), &mut report)?,
    }
    Ok(report)
}

fn gamma_brute(group: &EnumeratedGroup, pair_cap: u64, report: &mut VerificationReport) -> (Option<u64>, Option<String>) {
    match gamma_components(group, pair_cap) {
        Ok(r) => {
            report.push_count(GraphKind::Commuting, Method::BruteForce, r.component_count);
            (Some(r.component_count), None)
        }
        Err(e) => (None, error_note(&e)),
    }
}

fn verify_enumerated(
    group: &EnumeratedGroup,
    affine: Option<&AffineGroupSpec>,
    pair_cap: u64,
    report: &mut VerificationReport,
) -> Result<()> {
    let delta_brute = delta_components(group).component_count;
    report.push_count(GraphKind::Cyclic, Method::BruteForce, delta_brute);

    if let Some(dec) = detect_two_frobenius(group)? {
        report.detection = Detection {
            found: true,
            structure: Some(StructureKind::TwoFrobenius),
            case: Some(dec.case_label),
            p: dec.p,
            k_order: Some(dec.k_order()),
            h_order: Some(dec.h_order),
            index_g_l: Some(dec.index_g_l),
        };
        report.checks.extend(verify_structure(group, &dec)?.checks);

        let delta = delta_count_two_frobenius(group, &dec)?;
        report.push_count(GraphKind::Cyclic, Method::Formula, delta.value);
        report
            .comparisons
            .push(Comparison::new(CMP_DELTA, Some(delta.value), Some(delta_brute), None));

        let gamma = gamma_count_two_frobenius(dec.k_order(), Method::Formula);
        report.push_count(GraphKind::Commuting, Method::Formula, gamma.value);
        let (brute, note) = gamma_brute(group, pair_cap, report);
        report
            .comparisons
            .push(Comparison::new(CMP_GAMMA, Some(gamma.value), brute, note));

        if let Some(spec) = affine {
            compare_with_spec(group, &dec, spec, delta_brute, report);
        }
    } else if let Some(dec) = detect_frobenius(group) {
        let k_order = dec.kernel.order() as u64;
        report.detection = Detection {
            found: true,
            structure: Some(StructureKind::Frobenius),
            case: None,
            p: crate::arith::prime_power_base(k_order),
            k_order: Some(k_order),
            h_order: Some(dec.complement_order),
            index_g_l: None,
        };
        let delta = delta_count_frobenius(&dec)?;
        report.push_count(GraphKind::Cyclic, Method::Formula, delta.value);
        report
            .comparisons
            .push(Comparison::new(CMP_DELTA, Some(delta.value), Some(delta_brute), None));
        // No Γ formula exists for Frobenius groups; only the brute count is reported.
        gamma_brute(group, pair_cap, report);
    } else {
        gamma_brute(group, pair_cap, report);
    }
    Ok(())
}

fn compare_with_spec(
    group: &EnumeratedGroup,
    dec: &TwoFrobeniusDecomposition<'_>,
    spec: &AffineGroupSpec,
    delta_brute: u64,
    report: &mut VerificationReport,
) {
    report
        .comparisons
        .push(Comparison::new(CMP_K_ORDER, Some(spec.k_order()), Some(dec.k_order()), None));
    report
        .comparisons
        .push(Comparison::new(CMP_H_ORDER, Some(spec.d()), Some(dec.h_order), None));
    report
        .comparisons
        .push(Comparison::new(CMP_INDEX, Some(spec.e()), Some(dec.index_g_l), None));
    match delta_count_structured(spec) {
        Ok(structured) => {
            report.push_count(GraphKind::Cyclic, Method::Structured, structured.value);
            report.comparisons.push(Comparison::new(
                CMP_DELTA_STRUCTURED,
                Some(structured.value),
                Some(delta_brute),
                None,
            ));
            if let (Some(m), Some(p)) = (structured.inputs.m_p_star, structured.inputs.p) {
                let enumerated = m_p_star(group, p).ok();
                report
                    .comparisons
                    .push(Comparison::new(CMP_M_P_STAR, Some(m), enumerated, None));
            }
        }
        Err(e) => report.comparisons.push(Comparison::new(
            CMP_DELTA_STRUCTURED,
            None,
            Some(delta_brute),
            error_note(&e),
        )),
    }
}

fn verify_structured_only(spec: &AffineGroupSpec, report: &mut VerificationReport) -> Result<()> {
    let case = spec.case_label();
    report.detection = Detection {
        found: true,
        structure: Some(StructureKind::TwoFrobenius),
        case: Some(case),
        p: spec.characteristic(),
        k_order: Some(spec.k_order()),
        h_order: Some(spec.d()),
        index_g_l: Some(spec.e()),
    };
    let not_enumerated = Some(String::from("skipped: group not enumerated"));
    match delta_count_structured(spec) {
        Ok(delta) => {
            report.push_count(GraphKind::Cyclic, Method::Structured, delta.value);
            report.comparisons.push(Comparison::new(
                CMP_DELTA_STRUCTURED,
                Some(delta.value),
                None,
                not_enumerated.clone(),
            ));
            if let Some(m) = delta.inputs.m_p_star {
                report
                    .comparisons
                    .push(Comparison::new(CMP_M_P_STAR, Some(m), None, not_enumerated.clone()));
            }
        }
        Err(e) => report
            .comparisons
            .push(Comparison::new(CMP_DELTA_STRUCTURED, None, None, error_note(&e))),
    }
    if case == CaseLabel::C {
        if let Ok(b) = spec.stabilizer_breakdown() {
            let nonzero = spec.k_order() - 1;
            report
                .checks
                .push(Check::new(CHECK_BREAKDOWN_TOTAL, b.total_vectors() == nonzero));
            let free = b.vectors_with_stabilizer_order(1);
            report
                .checks
                .push(Check::new(CHECK_BREAKDOWN_FIXED, b.fixed_vectors() + free == nonzero));
        }
    }
    let gamma = gamma_count_two_frobenius(spec.k_order(), Method::Structured);
    report.push_count(GraphKind::Commuting, Method::Structured, gamma.value);
    report
        .comparisons
        .push(Comparison::new(CMP_GAMMA, Some(gamma.value), None, not_enumerated));
    Ok(())
}
