//! The full analysis of one algebra as a serializable result tree.
//!
//! All rationals are strings and all subspaces are canonical bases, so the
//! JSON form is deterministic and round-trips exactly.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    annihilator, check_hom_leibniz, check_hom_lie, check_regular, compute_j, derived, is_ideal,
    semidirect_product, HomAlgebra, IdentityReport, Witness,
};
use crate::connections::{
    connected, connection_classes, nj_classes, nj_connected, verify_connection, verify_nj_connection,
    Connection, RootPartition, Side,
};
use crate::decomposition::{check_pairwise_zero, global_from_partition, GlobalDecomposition};
use crate::diagnostics::{
    check_ideal_homogeneous, check_ideal_statements, check_j_left_annihilated, check_maximal_length,
    check_root_multiplicative, decide_simplicity, probe_ideals, split_roots_by_j, sub_ideals_of_j, JSplit,
    NotSimpleWitness, SimplicityVerdict,
};
use crate::error::{Error, Result};
use crate::io::matrix_to_strings;
use crate::linalg::{format_scalar, Subspace, Vector};
use crate::roots::{decompose, semidirect_weight_check, verify_split, Root, SemidirectEmbedding, SplitDecomposition};

pub const SCHEMA_VERSION: u32 = 1;

pub type Strings = Vec<String>;
/// A canonical subspace basis.
pub type Basis = Vec<Strings>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub holds: bool,
    pub witness: Option<String>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraInfo {
    pub name: String,
    pub dim: usize,
    pub basis: Strings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInfo {
    pub values: Strings,
    pub space: Basis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionInfo {
    pub h_basis: Basis,
    pub phi_h: Vec<Strings>,
    pub roots: Vec<RootInfo>,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateInfo {
    pub from: Strings,
    pub to: Strings,
    pub chain: Vec<Strings>,
    pub partial_sums: Vec<Strings>,
    pub start_shift: usize,
    pub end_shift: usize,
    pub end_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionsInfo {
    pub classes: Vec<Vec<Strings>>,
    pub certificates: Vec<CertificateInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandInfo {
    pub class_roots: Vec<Strings>,
    pub i0: Basis,
    pub v: Basis,
    pub i: Basis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalInfo {
    pub u: Basis,
    pub summands: Vec<SummandInfo>,
    pub direct: bool,
    pub direct_reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JSplitInfo {
    pub lambda_j: Vec<Strings>,
    pub lambda_not_j: Vec<Strings>,
    pub mixed: Vec<Strings>,
    pub j_cap_h: Basis,
    pub maximal_length: bool,
    pub root_multiplicative: Check,
    pub root_multiplicative_literal: bool,
    pub nj_classes_j: Option<Vec<Vec<Strings>>>,
    pub nj_classes_not_j: Option<Vec<Vec<Strings>>>,
    pub minimal_closed_sets: Option<Vec<Vec<Strings>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessInfo {
    pub kind: String,
    pub source: Option<String>,
    pub basis: Option<Basis>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictInfo {
    pub status: String,
    pub certificate: Vec<Check>,
    pub witness: Option<WitnessInfo>,
    pub reasons: Strings,
    pub notes: Strings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightInfo {
    pub embedding: String,
    pub holds: bool,
    pub mismatches: Strings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectInfo {
    pub dim: usize,
    pub hom_lie: Check,
    pub weights: Vec<WeightInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub algebra: AlgebraInfo,
    pub validity: Vec<Check>,
    pub j: Option<Basis>,
    pub error: Option<ErrorInfo>,
    pub decomposition: Option<DecompositionInfo>,
    pub connections: Option<ConnectionsInfo>,
    pub global: Option<GlobalInfo>,
    pub j_split: Option<JSplitInfo>,
    pub verdict: Option<VerdictInfo>,
    pub semidirect: Option<SemidirectInfo>,
    pub checks: Vec<Check>,
}

fn strings(v: &[crate::linalg::Scalar]) -> Strings {
    v.iter().map(format_scalar).collect()
}

fn basis(s: &Subspace) -> Basis {
    s.basis().iter().map(|v| strings(v)).collect()
}

fn root(r: &Root) -> Strings {
    strings(r.values())
}

fn roots(rs: &[Root]) -> Vec<Strings> {
    rs.iter().map(root).collect()
}

fn partition(p: &RootPartition) -> Vec<Vec<Strings>> {
    p.classes.iter().map(|c| roots(c)).collect()
}

pub fn describe_witness(a: &HomAlgebra, w: &Witness) -> String {
    match w {
        Witness::Basis { indices, residual } => {
            let labels: Vec<&str> = indices.iter().map(|&i| a.labels()[i].as_str()).collect();
            format!("({}) with residual {}", labels.join(", "), a.describe(residual))
        }
        Witness::Vector { vector } => a.describe(vector),
        Witness::Roots { roots } => {
            let shown: Vec<String> = roots.iter().map(Root::to_string).collect();
            shown.join(", ")
        }
    }
}

pub fn check(a: &HomAlgebra, r: &IdentityReport) -> Check {
    Check {
        property: r.property.clone(),
        holds: r.holds,
        witness: r.witness.as_ref().map(|w| describe_witness(a, w)),
        detail: r.detail.clone(),
    }
}

fn simple_check(property: impl Into<String>, holds: bool, detail: Option<String>) -> Check {
    Check {
        property: property.into(),
        holds,
        witness: None,
        detail,
    }
}

/// The variant name of an error, e.g. `HNotMaximal`.
pub fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

pub fn error_info(e: &Error) -> ErrorInfo {
    ErrorInfo {
        kind: error_kind(e),
        message: e.to_string(),
    }
}

fn certificate(alpha: &Root, beta: &Root, c: &Connection) -> CertificateInfo {
    CertificateInfo {
        from: root(alpha),
        to: root(beta),
        chain: roots(&c.chain),
        partial_sums: roots(&c.partial_sums),
        start_shift: c.start_shift,
        end_shift: c.end_shift,
        end_sign: c.end_sign,
    }
}

fn global_info(g: &GlobalDecomposition) -> GlobalInfo {
    GlobalInfo {
        u: basis(&g.u),
        summands: g
            .summands
            .iter()
            .map(|s| SummandInfo {
                class_roots: roots(&s.class_roots),
                i0: basis(&s.i0),
                v: basis(&s.v),
                i: basis(&s.i),
            })
            .collect(),
        direct: g.direct,
        direct_reason: g.direct_reason.clone(),
    }
}

fn verdict_info(a: &HomAlgebra, v: &SimplicityVerdict) -> VerdictInfo {
    let mut info = VerdictInfo {
        status: v.status().into(),
        certificate: Vec::new(),
        witness: None,
        reasons: Vec::new(),
        notes: Vec::new(),
    };
    match v {
        SimplicityVerdict::Simple { certificate, notes } => {
            info.certificate = certificate
                .iter()
                .map(|c| simple_check(c.name.clone(), c.holds, None))
                .collect();
            info.notes = notes.clone();
        }
        SimplicityVerdict::NotSimple { witness } => {
            info.witness = Some(match witness {
                NotSimpleWitness::ProductZero => WitnessInfo {
                    kind: "product is zero".into(),
                    source: None,
                    basis: None,
                    detail: None,
                },
                NotSimpleWitness::Ideal { subspace, source } => WitnessInfo {
                    kind: "ideal".into(),
                    source: Some(source.clone()),
                    basis: Some(basis(subspace)),
                    detail: Some(a.describe_subspace(subspace)),
                },
                NotSimpleWitness::NecessaryCondition { report } => WitnessInfo {
                    kind: "necessary condition fails".into(),
                    source: Some(report.property.clone()),
                    basis: None,
                    detail: report.detail.clone(),
                },
            });
        }
        SimplicityVerdict::Inconclusive { reasons, notes } => {
            info.reasons = reasons.clone();
            info.notes = notes.clone();
        }
    }
    info
}

struct Builder<'a> {
    a: &'a HomAlgebra,
    checks: Vec<Check>,
}

impl Builder<'_> {
    fn push(&mut self, r: &IdentityReport) {
        let c = check(self.a, r);
        self.checks.push(c);
    }

    fn flag(&mut self, property: impl Into<String>, holds: bool) {
        self.checks.push(simple_check(property, holds, None));
    }
}

/// Runs every stage that its prerequisites allow. The first mathematical
/// error stops the pipeline and is recorded in `error`.
pub fn build_report(a: &HomAlgebra, h: &[Vector]) -> Report {
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        algebra: AlgebraInfo {
            name: a.name().to_string(),
            dim: a.dim(),
            basis: a.labels().to_vec(),
        },
        validity: [check_hom_leibniz(a), check_regular(a), check_hom_lie(a)]
            .iter()
            .map(|r| check(a, r))
            .collect(),
        j: None,
        error: None,
        decomposition: None,
        connections: None,
        global: None,
        j_split: None,
        verdict: None,
        semidirect: None,
        checks: Vec::new(),
    };
    let mut b = Builder { a, checks: Vec::new() };
    if let Err(e) = fill(&mut report, &mut b, h) {
        report.error = Some(error_info(&e));
    }
    report.checks = b.checks;
    report
}

fn fill(report: &mut Report, b: &mut Builder<'_>, h: &[Vector]) -> Result<()> {
    let a = b.a;
    let d = decompose(a, h)?;
    let j = compute_j(a)?;
    report.j = Some(basis(&j));
    b.flag("[L, J] = 0", true);
    report.decomposition = Some(DecompositionInfo {
        h_basis: d.h_basis().iter().map(|v| strings(v)).collect(),
        phi_h: matrix_to_strings(d.system().phi_h()),
        roots: d
            .roots()
            .iter()
            .map(|r| RootInfo {
                values: root(r),
                space: basis(&d.root_space(r)),
            })
            .collect(),
        symmetric: d.is_symmetric(),
    });
    for r in verify_split(&d)? {
        b.push(&r);
    }

    semidirect_stage(report, b, &d)?;
    let js = split_roots_by_j(&d)?;
    j_stage(report, b, &d, &js)?;
    if let Some(p) = connection_stage(report, b, &d)? {
        let g = global_from_partition(&d, &p)?;
        b.flag("U + sum of class ideals = L", true);
        b.push(&check_pairwise_zero(a, &g.summands)?);
        if annihilator(a).is_zero() && derived(a).is_full() {
            b.flag("direct sum of class ideals when Z(L) = 0 and [L, L] = L", g.direct);
        }
        report.global = Some(global_info(&g));
    }
    verdict_stage(report, b, &d, &js)
}

fn semidirect_stage(report: &mut Report, b: &mut Builder<'_>, d: &SplitDecomposition) -> Result<()> {
    let a = b.a;
    let sp = semidirect_product(a)?;
    let hom_lie = check_hom_lie(&sp.algebra);
    b.push(&hom_lie);
    let expected = 2 * a.dim() - sp.j.dim();
    b.flag(
        format!("semidirect product has dimension 2n - dim J = {expected}"),
        sp.algebra.dim() == expected,
    );
    let mut weights = Vec::new();
    for embedding in [SemidirectEmbedding::Quotient, SemidirectEmbedding::Diagonal] {
        let w = semidirect_weight_check(d, &sp, embedding)?;
        if embedding == SemidirectEmbedding::Quotient {
            b.flag("semidirect weight spaces are L_a + L_a/(L_a n J)", w.holds);
        }
        weights.push(WeightInfo {
            embedding: embedding.name().into(),
            holds: w.holds,
            mismatches: w.mismatches,
        });
    }
    report.semidirect = Some(SemidirectInfo {
        dim: sp.algebra.dim(),
        hom_lie: check(&sp.algebra, &hom_lie),
        weights,
    });
    Ok(())
}

fn j_stage(report: &mut Report, b: &mut Builder<'_>, d: &SplitDecomposition, js: &JSplit) -> Result<()> {
    let a = b.a;
    let maximal = check_maximal_length(d);
    let z_zero = annihilator(a).is_zero();
    b.push(&check_j_left_annihilated(d, js)?);
    b.push(&check_ideal_homogeneous(d, &js.j)?);
    if maximal {
        b.flag("no mixed roots under maximal length", js.mixed.is_empty());
    }
    if z_zero {
        b.flag("J n H = 0 when Z(L) = 0", js.j_cap_h.is_zero());
    }
    let rm = check_root_multiplicative(d, js)?;
    let nj = |side| nj_classes(d, js, side).ok().map(|p| partition(&p));
    let minimal = sub_ideals_of_j(d, js).ok();
    if let Some(sets) = &minimal {
        for s in sets {
            b.flag(
                format!("L over {} is an ideal", roots_label(s)),
                is_ideal(a, &d.span_of_roots(s))?,
            );
        }
    }
    let mut replay = true;
    for side in [Side::J, Side::NotJ] {
        let members = match side {
            Side::J => &js.lambda_j,
            Side::NotJ => &js.lambda_not_j,
        };
        for x in members {
            for y in members {
                if let Some(c) = nj_connected(d, js, x, y)? {
                    replay &= verify_nj_connection(d.system(), js, x, y, &c);
                }
            }
        }
    }
    b.flag("every not-J certificate replays", replay);
    report.j_split = Some(JSplitInfo {
        lambda_j: roots(&js.lambda_j),
        lambda_not_j: roots(&js.lambda_not_j),
        mixed: roots(&js.mixed),
        j_cap_h: basis(&js.j_cap_h),
        maximal_length: maximal,
        root_multiplicative: check(a, &rm.report()),
        root_multiplicative_literal: rm.holds_literal(),
        nj_classes_j: nj(Side::J),
        nj_classes_not_j: nj(Side::NotJ),
        minimal_closed_sets: minimal.map(|m| m.iter().map(|s| roots(s)).collect()),
    });
    Ok(())
}

fn roots_label(rs: &[Root]) -> String {
    let shown: Vec<String> = rs.iter().map(Root::to_string).collect();
    format!("{{{}}}", shown.join(", "))
}

fn connection_stage(
    report: &mut Report,
    b: &mut Builder<'_>,
    d: &SplitDecomposition,
) -> Result<Option<RootPartition>> {
    if !d.is_symmetric() {
        return Ok(None);
    }
    let p = connection_classes(d)?;
    b.flag("connection is an equivalence relation", true);
    let sys = d.system();
    let mut certificates = Vec::new();
    let mut replay = true;
    for class in &p.classes {
        let first = &class[0];
        for beta in class {
            let c = connected(d, first, beta)?
                .ok_or_else(|| Error::Internal(format!("{first} and {beta} share a class but are not connected")))?;
            replay &= verify_connection(sys, first, beta, &c);
            certificates.push(certificate(first, beta, &c));
        }
    }
    let mut orbit_ok = true;
    for alpha in d.roots() {
        for x in d.root_orbit(alpha)? {
            for y in d.root_orbit(alpha)? {
                orbit_ok &= connected(d, &x, &y)?.is_some();
            }
        }
    }
    b.flag("roots in one twist orbit are connected", orbit_ok);
    b.flag("every connection certificate replays", replay);
    report.connections = Some(ConnectionsInfo {
        classes: partition(&p),
        certificates,
    });
    Ok(Some(p))
}

fn verdict_stage(report: &mut Report, b: &mut Builder<'_>, d: &SplitDecomposition, js: &JSplit) -> Result<()> {
    let a = b.a;
    let maximal = check_maximal_length(d);
    let z_zero = annihilator(a).is_zero();
    if a.product_is_zero() {
        // probes would all be trivial; nothing more to assert
    } else {
        for (source, ideal) in probe_ideals(d, js)? {
            let hom = check_ideal_homogeneous(d, &ideal)?;
            if !hom.holds {
                b.push(&IdentityReport { property: format!("{source}: homogeneous"), ..hom });
            }
            if maximal && z_zero && !ideal.is_zero() {
                let has_root_space = d
                    .roots()
                    .iter()
                    .any(|r| ideal.contains(&d.root_space(r)).unwrap_or(false));
                if !has_root_space {
                    b.flag(format!("{source}: contains a root space"), false);
                }
            }
            for r in check_ideal_statements(d, js, &ideal)? {
                if !r.holds {
                    b.push(&IdentityReport { property: format!("{source}: {}", r.property), ..r });
                }
            }
        }
        b.flag("probe ideals are homogeneous and satisfy the ideal statements", true);
    }
    let verdict = decide_simplicity(d)?;
    if let SimplicityVerdict::NotSimple {
        witness: NotSimpleWitness::Ideal { subspace, .. },
    } = &verdict
    {
        let ok = is_ideal(a, subspace)? && !subspace.is_zero() && *subspace != js.j && !subspace.is_full();
        b.flag("witness ideal re-verifies and differs from 0, J, L", ok);
    }
    report.verdict = Some(verdict_info(a, &verdict));
    Ok(())
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    /// Checks that must hold but did not.
    pub fn violations(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}
