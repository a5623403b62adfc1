//! The `J`-split of the roots, maximal length, homogeneity, root
//! multiplicativity, ideals inside `J` and the simplicity verdict.

use std::collections::BTreeSet;

use crate::algebra::{
    annihilator, compute_j, derived, ideal_closure, is_ideal, lie_annihilator, IdentityReport, Witness,
};
use crate::connections::{nj_class_of, nj_classes, Side};
use crate::decomposition::{bracket_span, check_simple_necessary, global_decomposition, opposite_products};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::roots::{is_symmetric_set, Root, SplitDecomposition};

/// Roots sorted by how their root space meets `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JSplit {
    pub j: Subspace,
    /// `L_a` inside `J`.
    pub lambda_j: Vec<Root>,
    /// `L_a` meeting `J` trivially.
    pub lambda_not_j: Vec<Root>,
    /// Neither; empty under maximal length.
    pub mixed: Vec<Root>,
    pub j_cap_h: Subspace,
}

impl JSplit {
    pub fn lambda_j_set(&self) -> BTreeSet<Root> {
        self.lambda_j.iter().cloned().collect()
    }

    pub fn lambda_not_j_set(&self) -> BTreeSet<Root> {
        self.lambda_not_j.iter().cloned().collect()
    }
}

pub fn split_roots_by_j(d: &SplitDecomposition) -> Result<JSplit> {
    let j = compute_j(d.algebra())?;
    let mut lambda_j = Vec::new();
    let mut lambda_not_j = Vec::new();
    let mut mixed = Vec::new();
    for alpha in d.roots() {
        let space = d.root_space(alpha);
        let meet = space.intersect(&j)?;
        if meet == space {
            lambda_j.push(alpha.clone());
        } else if meet.is_zero() {
            lambda_not_j.push(alpha.clone());
        } else {
            mixed.push(alpha.clone());
        }
    }
    let j_cap_h = j.intersect(d.h())?;
    Ok(JSplit {
        j,
        lambda_j,
        lambda_not_j,
        mixed,
        j_cap_h,
    })
}

/// Every root space is one-dimensional.
pub fn check_maximal_length(d: &SplitDecomposition) -> bool {
    d.roots().iter().all(|a| d.root_space(a).dim() == 1)
}

/// `I = (I n H) + sum (I n L_a)` for an ideal `I`.
pub fn check_ideal_homogeneous(d: &SplitDecomposition, ideal: &Subspace) -> Result<IdentityReport> {
    if !is_ideal(d.algebra(), ideal)? {
        return Err(Error::NotAnIdeal(d.algebra().describe_subspace(ideal)));
    }
    let mut parts = ideal.intersect(d.h())?;
    for alpha in d.roots() {
        parts = parts.sum(&ideal.intersect(&d.root_space(alpha))?)?;
    }
    let property = "ideal is the sum of its homogeneous components";
    if &parts == ideal {
        Ok(IdentityReport::pass(property))
    } else {
        let v = ideal
            .basis()
            .iter()
            .find(|v| !parts.contains_vector(v).unwrap_or(false))
            .cloned()
            .unwrap_or_default();
        Ok(IdentityReport::fail(
            property,
            Witness::Vector { vector: v },
            format!("components span dimension {} of {}", parts.dim(), ideal.dim()),
        ))
    }
}

/// `H = sum over Lambda^notJ of [L_a, L_-a]`.
pub fn check_h_generated(d: &SplitDecomposition, js: &JSplit) -> Result<bool> {
    Ok(&opposite_products(d, &js.lambda_not_j)? == d.h())
}

/// `[L_a, L_g] = 0` for every `a` in `Lambda + {0}` and `g` in `Lambda^J`, in
/// that order.
pub fn check_j_left_annihilated(d: &SplitDecomposition, js: &JSplit) -> Result<IdentityReport> {
    let property = "[L_a, L_g] = 0 for g in Lambda^J";
    let mut weights = vec![Root::zero(d.rank())];
    weights.extend(d.roots().iter().cloned());
    for alpha in &weights {
        for gamma in &js.lambda_j {
            let s = bracket_span(d.algebra(), &d.root_space(alpha), &d.root_space(gamma))?;
            if let Some(v) = s.basis().first() {
                return Ok(IdentityReport::fail(
                    property,
                    Witness::Vector { vector: v.clone() },
                    format!("[L_{alpha}, L_{gamma}] != 0"),
                ));
            }
        }
    }
    Ok(IdentityReport::pass(property))
}

/// One tested implication of root multiplicativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityInstance {
    /// Left factor of the product that must be nonzero.
    pub left: Root,
    /// Right factor.
    pub right: Root,
    /// `left o phi^-1 + right o phi^-1`.
    pub target: Root,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiplicativity {
    /// `a, b` in `Lambda^notJ` with `a phi^-1 + b phi^-1` in `Lambda`: `[L_a, L_b] != 0`.
    pub condition1: Vec<MultiplicativityInstance>,
    /// `a` in `Lambda^notJ`, `g` in `Lambda^J`, sum in `Lambda^J`: `[L_g, L_a] != 0`.
    pub condition2_swapped: Vec<MultiplicativityInstance>,
    /// The same pairs with the product `[L_a, L_g]`.
    pub condition2_literal: Vec<MultiplicativityInstance>,
}

impl RootMultiplicativity {
    fn all(list: &[MultiplicativityInstance]) -> bool {
        list.iter().all(|i| i.nonzero)
    }

    /// The verdict used downstream: condition 1 and swapped condition 2.
    pub fn holds(&self) -> bool {
        Self::all(&self.condition1) && Self::all(&self.condition2_swapped)
    }

    pub fn holds_literal(&self) -> bool {
        Self::all(&self.condition1) && Self::all(&self.condition2_literal)
    }

    pub fn report(&self) -> IdentityReport {
        let property = "root-multiplicative (condition 2 as [L_g, L_a])";
        let failed: Vec<Root> = self
            .condition1
            .iter()
            .chain(&self.condition2_swapped)
            .filter(|i| !i.nonzero)
            .flat_map(|i| [i.left.clone(), i.right.clone()])
            .collect();
        let detail = format!(
            "{} condition-1 and {} condition-2 instances; literal order {}",
            self.condition1.len(),
            self.condition2_swapped.len(),
            if self.holds_literal() { "holds" } else { "fails" }
        );
        if failed.is_empty() {
            IdentityReport::pass(property).with_detail(detail)
        } else {
            IdentityReport::fail(property, Witness::Roots { roots: failed }, detail)
        }
    }
}

pub fn check_root_multiplicative(d: &SplitDecomposition, js: &JSplit) -> Result<RootMultiplicativity> {
    let sys = d.system();
    let a = d.algebra();
    let nonzero = |x: &Root, y: &Root| -> Result<bool> {
        Ok(!bracket_span(a, &d.root_space(x), &d.root_space(y))?.is_zero())
    };
    let in_j = js.lambda_j_set();
    let mut condition1 = Vec::new();
    for x in &js.lambda_not_j {
        for y in &js.lambda_not_j {
            let target = sys.twist(x).add(&sys.twist(y));
            if sys.contains(&target) {
                condition1.push(MultiplicativityInstance {
                    left: x.clone(),
                    right: y.clone(),
                    nonzero: nonzero(x, y)?,
                    target,
                });
            }
        }
    }
    let mut condition2_swapped = Vec::new();
    let mut condition2_literal = Vec::new();
    for x in &js.lambda_not_j {
        for g in &js.lambda_j {
            let target = sys.twist(x).add(&sys.twist(g));
            if in_j.contains(&target) {
                condition2_swapped.push(MultiplicativityInstance {
                    left: g.clone(),
                    right: x.clone(),
                    target: target.clone(),
                    nonzero: nonzero(g, x)?,
                });
                condition2_literal.push(MultiplicativityInstance {
                    left: x.clone(),
                    right: g.clone(),
                    target,
                    nonzero: nonzero(x, g)?,
                });
            }
        }
    }
    Ok(RootMultiplicativity {
        condition1,
        condition2_swapped,
        condition2_literal,
    })
}

/// Smallest subset of `Lambda^J` containing `seeds` that is closed under
/// `b -> b phi^-1` and under `b -> b phi^-1 + g phi^-1` whenever
/// `[L_b, L_g] != 0` for `g` in `Lambda + {0}`.
pub fn close_root_set(d: &SplitDecomposition, js: &JSplit, seeds: &[Root]) -> Result<BTreeSet<Root>> {
    let sys = d.system();
    let a = d.algebra();
    let in_j = js.lambda_j_set();
    let mut weights = vec![Root::zero(d.rank())];
    weights.extend(d.roots().iter().cloned());
    let mut set: BTreeSet<Root> = BTreeSet::new();
    let mut stack: Vec<Root> = Vec::new();
    for s in seeds {
        if !in_j.contains(s) {
            return Err(Error::ClassMismatch(format!("{s} is not in Lambda^J")));
        }
        if set.insert(s.clone()) {
            stack.push(s.clone());
        }
    }
    while let Some(beta) = stack.pop() {
        let mut next = vec![sys.twist(&beta)];
        let lb = d.root_space(&beta);
        for gamma in &weights {
            if !bracket_span(a, &lb, &d.root_space(gamma))?.is_zero() {
                let t = sys.twist(&beta).add(&sys.twist(gamma));
                if !t.is_zero() {
                    next.push(t);
                }
            }
        }
        for t in next {
            if !in_j.contains(&t) {
                return Err(Error::Internal(format!("{t} reached from {beta} is not in Lambda^J")));
            }
            if set.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    Ok(set)
}

/// Minimal nonempty closed subsets of `Lambda^J`, each sorted, in order of
/// their smallest root. Requires maximal length and `Z(L) = 0`.
pub fn sub_ideals_of_j(d: &SplitDecomposition, js: &JSplit) -> Result<Vec<Vec<Root>>> {
    if !check_maximal_length(d) {
        return Err(Error::HypothesisMissing("not of maximal length".into()));
    }
    if !annihilator(d.algebra()).is_zero() {
        return Err(Error::HypothesisMissing("Z(L) != 0".into()));
    }
    let closures = js
        .lambda_j
        .iter()
        .map(|b| close_root_set(d, js, std::slice::from_ref(b)))
        .collect::<Result<Vec<_>>>()?;
    let mut minimal: Vec<BTreeSet<Root>> = Vec::new();
    for c in &closures {
        let has_smaller = closures.iter().any(|o| o.len() < c.len() && o.is_subset(c));
        if !has_smaller && !minimal.contains(c) {
            minimal.push(c.clone());
        }
    }
    let mut out: Vec<Vec<Root>> = minimal.into_iter().map(|s| s.into_iter().collect()).collect();
    out.sort();
    Ok(out)
}

/// `L_{Lambda_a^J}`: the sum of root spaces of the `not-J` class of `a` in `Lambda^J`.
pub fn class_j_ideal(d: &SplitDecomposition, js: &JSplit, alpha: &Root) -> Result<Subspace> {
    if !derived(d.algebra()).is_full() {
        return Err(Error::HypothesisMissing("[L, L] != L".into()));
    }
    if !js.lambda_j.contains(alpha) {
        return Err(Error::HypothesisMissing(format!("{alpha} is not in Lambda^J")));
    }
    let class = nj_class_of(d, js, alpha)?;
    let space = d.span_of_roots(&class);
    if !is_ideal(d.algebra(), &space)? {
        return Err(Error::Internal(format!("L over the class of {alpha} is not an ideal")));
    }
    Ok(space)
}

/// Why a verdict of `NotSimple` was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSimpleWitness {
    /// The product vanishes identically.
    ProductZero,
    /// An ideal different from `0`, `J` and `L`.
    Ideal { subspace: Subspace, source: String },
    /// A necessary condition for simplicity fails; no ideal was exhibited.
    NecessaryCondition { report: IdentityReport },
}

/// One line of a simplicity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateItem {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple {
        certificate: Vec<CertificateItem>,
        notes: Vec<String>,
    },
    NotSimple {
        witness: NotSimpleWitness,
    },
    Inconclusive {
        reasons: Vec<String>,
        notes: Vec<String>,
    },
}

impl SimplicityVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            SimplicityVerdict::Simple { .. } => "Simple",
            SimplicityVerdict::NotSimple { .. } => "NotSimple",
            SimplicityVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// The fixed, ordered list of candidate ideals tried for refutation.
pub fn probe_ideals(d: &SplitDecomposition, js: &JSplit) -> Result<Vec<(String, Subspace)>> {
    let a = d.algebra();
    let mut probes = Vec::new();
    for alpha in d.roots() {
        probes.push((format!("ideal generated by L_{alpha}"), ideal_closure(a, &d.root_space(alpha))?));
    }
    probes.push(("ideal generated by J".into(), ideal_closure(a, &js.j)?));
    probes.push(("ideal generated by Z(L)".into(), ideal_closure(a, &annihilator(a))?));
    probes.push((
        "ideal generated by Z_Lie(L)".into(),
        ideal_closure(a, &lie_annihilator(d, js)?)?,
    ));
    if let Ok(sets) = sub_ideals_of_j(d, js) {
        for s in sets {
            let shown: Vec<String> = s.iter().map(Root::to_string).collect();
            probes.push((
                format!("ideal generated by L over {{{}}}", shown.join(", ")),
                ideal_closure(a, &d.span_of_roots(&s))?,
            ));
        }
    }
    if d.is_symmetric() {
        let g = global_decomposition(d)?;
        let mut sum = Subspace::zero(a.dim());
        for s in &g.summands {
            probes.push((format!("class ideal of {}", s.class_roots[0]), s.i.clone()));
            sum = sum.sum(&s.i)?;
        }
        probes.push(("sum of class ideals".into(), sum));
    }
    Ok(probes)
}

/// Refutes by exhibiting an ideal, certifies under the maximal-length
/// hypotheses, or says which hypotheses are missing.
pub fn decide_simplicity(d: &SplitDecomposition) -> Result<SimplicityVerdict> {
    let a = d.algebra();
    if a.product_is_zero() {
        return Ok(SimplicityVerdict::NotSimple {
            witness: NotSimpleWitness::ProductZero,
        });
    }
    let js = split_roots_by_j(d)?;
    for (source, ideal) in probe_ideals(d, &js)? {
        if !ideal.is_zero() && ideal != js.j && !ideal.is_full() {
            return Ok(SimplicityVerdict::NotSimple {
                witness: NotSimpleWitness::Ideal {
                    subspace: ideal,
                    source,
                },
            });
        }
    }
    let necessary = check_simple_necessary(d)?;
    if !necessary.holds && d.is_symmetric() {
        return Ok(SimplicityVerdict::NotSimple {
            witness: NotSimpleWitness::NecessaryCondition { report: necessary },
        });
    }

    let mut certificate = Vec::new();
    let mut notes = Vec::new();
    let mut item = |name: &str, holds: bool| {
        certificate.push(CertificateItem {
            name: name.into(),
            holds,
        })
    };
    let maximal = check_maximal_length(d);
    item("maximal length", maximal);
    item("[L, L] = L", derived(a).is_full());
    item("Z_Lie(L) = 0", lie_annihilator(d, &js)?.is_zero());
    item("Z(L) = 0", annihilator(a).is_zero());
    item("H = sum over Lambda^notJ of [L_a, L_-a]", check_h_generated(d, &js)?);
    let rm = check_root_multiplicative(d, &js)?;
    item("root-multiplicative", rm.holds());
    if rm.holds() != rm.holds_literal() {
        notes.push(format!(
            "root multiplicativity holds with condition 2 read as [L_g, L_a] but {} with the literal order [L_a, L_g]",
            if rm.holds_literal() { "holds" } else { "fails" }
        ));
    }
    let j_sym = is_symmetric_set(&js.lambda_j_set());
    let nj_sym = is_symmetric_set(&js.lambda_not_j_set());
    item("Lambda^J symmetric", j_sym);
    item("Lambda^notJ symmetric", nj_sym);
    let one_class = |side: Side, allow_empty: bool| -> bool {
        match nj_classes(d, &js, side) {
            Ok(p) => p.len() == 1 || (allow_empty && p.is_empty()),
            Err(_) => false,
        }
    };
    item("Lambda^notJ is one not-J class", one_class(Side::NotJ, false));
    item("Lambda^J is one not-J class", one_class(Side::J, true));
    let minimal = if maximal {
        match sub_ideals_of_j(d, &js) {
            Ok(sets) => sets.is_empty() || (sets.len() == 1 && sets[0] == js.lambda_j),
            Err(_) => false,
        }
    } else {
        false
    };
    item("Lambda^J is the only minimal closed set", minimal);

    let failed: Vec<String> = certificate
        .iter()
        .filter(|c| !c.holds)
        .map(|c| format!("not verified: {}", c.name))
        .collect();
    if failed.is_empty() {
        Ok(SimplicityVerdict::Simple { certificate, notes })
    } else {
        Ok(SimplicityVerdict::Inconclusive {
            reasons: failed,
            notes,
        })
    }
}

/// Checks, on one concrete ideal, the conclusions of the statements about
/// ideals of algebras of maximal length whose hypotheses hold here.
/// Statements whose hypotheses fail are reported as passing with a note.
pub fn check_ideal_statements(d: &SplitDecomposition, js: &JSplit, ideal: &Subspace) -> Result<Vec<IdentityReport>> {
    let a = d.algebra();
    if !is_ideal(a, ideal)? {
        return Err(Error::NotAnIdeal(a.describe_subspace(ideal)));
    }
    let skipped = |name: &str, why: &str| IdentityReport::pass(name).with_detail(format!("not applicable: {why}"));
    let verdict = |name: &str, ok: bool, detail: &str| {
        if ok {
            IdentityReport::pass(name)
        } else {
            let v = ideal.basis().first().cloned().unwrap_or_default();
            IdentityReport::fail(name, Witness::Vector { vector: v }, detail)
        }
    };
    let z_zero = annihilator(a).is_zero();
    let maximal = check_maximal_length(d);
    let rm = check_root_multiplicative(d, js)?.holds();
    let nj_sym = is_symmetric_set(&js.lambda_not_j_set());
    let j_sym = is_symmetric_set(&js.lambda_j_set());
    let nj_one = nj_sym && nj_classes(d, js, Side::NotJ).map(|p| p.len() == 1).unwrap_or(false);
    let lie_zero = lie_annihilator(d, js)?.is_zero();
    let perfect = derived(a).is_full();
    let j_one = perfect && j_sym && nj_classes(d, js, Side::J).map(|p| p.len() <= 1).unwrap_or(false);

    let mut out = Vec::new();
    let name = "ideal-inside-H-is-zero";
    if !z_zero {
        out.push(skipped(name, "Z(L) != 0"));
    } else if !d.h().contains(ideal)? {
        out.push(skipped(name, "ideal not inside H"));
    } else {
        out.push(verdict(name, ideal.is_zero(), "nonzero ideal inside H"));
    }

    let h_plus_j = d.h().sum(&js.j)?;
    let base = maximal && rm && nj_one && lie_zero;
    let name = "ideal-outside-H+J-is-L";
    if !base {
        out.push(skipped(name, "hypotheses not met"));
    } else if h_plus_j.contains(ideal)? {
        out.push(skipped(name, "ideal inside H + J"));
    } else {
        out.push(verdict(name, ideal.is_full(), "ideal outside H + J is proper"));
    }

    let name = "ideal-outside-J-is-L";
    if !(base && z_zero && j_one) {
        out.push(skipped(name, "hypotheses not met"));
    } else if js.j.contains(ideal)? {
        out.push(skipped(name, "ideal inside J"));
    } else {
        out.push(verdict(name, ideal.is_full(), "ideal outside J is proper"));
    }

    let name = "ideal-inside-J-splits";
    if !(maximal && z_zero && perfect) {
        out.push(skipped(name, "hypotheses not met"));
    } else if ideal.is_zero() || !js.j.contains(ideal)? {
        out.push(skipped(name, "ideal not a nonzero subspace of J"));
    } else if *ideal == js.j {
        out.push(IdentityReport::pass(name).with_detail("I = J"));
    } else {
        let rest: Vec<Root> = js
            .lambda_j
            .iter()
            .filter(|b| !ideal.contains(&d.root_space(b)).unwrap_or(false))
            .cloned()
            .collect();
        let k = d.span_of_roots(&rest);
        let ok = ideal.intersect(&k)?.is_zero() && ideal.sum(&k)? == js.j && is_ideal(a, &k)?;
        out.push(verdict(name, ok, "J is not I + K with K an ideal"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::roots::decompose;

    fn r(xs: &[i64]) -> Root {
        Root::from_i64(xs)
    }

    fn load(name: &str) -> SplitDecomposition {
        let (a, h) = corpus::load(name).unwrap();
        decompose(&a, &h).unwrap()
    }

    #[test]
    fn j_split() {
        let js = split_roots_by_j(&load("sl2")).unwrap();
        assert!(js.lambda_j.is_empty());
        assert_eq!(js.lambda_not_j, vec![r(&[-2]), r(&[2])]);

        let d = load("sl2v1");
        let js = split_roots_by_j(&d).unwrap();
        assert_eq!(js.lambda_j, vec![r(&[-1]), r(&[1])]);
        assert_eq!(js.lambda_not_j, vec![r(&[-2]), r(&[2])]);
        assert!(js.j_cap_h.is_zero());
        assert!(js.mixed.is_empty());

        let js = split_roots_by_j(&load("nml")).unwrap();
        assert_eq!(js.mixed, vec![r(&[-1]), r(&[1])]);
    }

    #[test]
    fn maximal_length() {
        assert!(check_maximal_length(&load("sl2")));
        assert!(check_maximal_length(&load("sl2v1")));
        assert!(check_maximal_length(&load("d6")));
        assert!(!check_maximal_length(&load("nml")));
    }

    #[test]
    fn homogeneity() {
        let d = load("sl2v1");
        let a = d.algebra();
        let js = split_roots_by_j(&d).unwrap();
        assert!(check_ideal_homogeneous(&d, &js.j).unwrap().holds);
        assert!(check_ideal_homogeneous(&d, &Subspace::full(5)).unwrap().holds);
        let mut v = a.basis_vector(1);
        v[3] = crate::linalg::int(1);
        let i = ideal_closure(a, &Subspace::span(5, vec![v]).unwrap()).unwrap();
        assert!(check_ideal_homogeneous(&d, &i).unwrap().holds);
        let not_ideal = Subspace::span(5, vec![a.basis_vector(1)]).unwrap();
        assert!(matches!(check_ideal_homogeneous(&d, &not_ideal), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn h_generated() {
        for name in ["sl2", "sl2v1"] {
            let d = load(name);
            let js = split_roots_by_j(&d).unwrap();
            assert!(check_h_generated(&d, &js).unwrap(), "{name}");
        }
        let d = load("a0");
        let js = split_roots_by_j(&d).unwrap();
        assert!(!check_h_generated(&d, &js).unwrap());
    }

    #[test]
    fn multiplicativity_readings() {
        let d = load("sl2");
        let rm = check_root_multiplicative(&d, &split_roots_by_j(&d).unwrap()).unwrap();
        assert!(rm.condition1.is_empty() && rm.condition2_swapped.is_empty());
        assert!(rm.holds());

        let d = load("sl2v1");
        let js = split_roots_by_j(&d).unwrap();
        let rm = check_root_multiplicative(&d, &js).unwrap();
        assert!(rm.holds());
        assert!(!rm.holds_literal());
        let pairs: Vec<(Root, Root)> = rm
            .condition2_swapped
            .iter()
            .map(|i| (i.right.clone(), i.left.clone()))
            .collect();
        assert!(pairs.contains(&(r(&[2]), r(&[-1]))));
        assert!(pairs.contains(&(r(&[-2]), r(&[1]))));
        assert!(rm.condition2_literal.iter().all(|i| !i.nonzero));
        assert!(check_j_left_annihilated(&d, &js).unwrap().holds);
    }

    #[test]
    fn closed_sets_inside_j() {
        let d = load("sl2v1");
        let js = split_roots_by_j(&d).unwrap();
        assert_eq!(sub_ideals_of_j(&d, &js).unwrap(), vec![vec![r(&[-1]), r(&[1])]]);

        let d = load("sl2");
        assert!(sub_ideals_of_j(&d, &split_roots_by_j(&d).unwrap()).unwrap().is_empty());

        let d = load("split_j");
        let js = split_roots_by_j(&d).unwrap();
        let sets = sub_ideals_of_j(&d, &js).unwrap();
        assert_eq!(sets.len(), 2);
        for s in &sets {
            let space = d.span_of_roots(s);
            assert!(is_ideal(d.algebra(), &space).unwrap());
        }
        let i = d.span_of_roots(&sets[0]);
        let k = d.span_of_roots(&sets[1]);
        assert_eq!(i.sum(&k).unwrap(), js.j);
        assert!(i.intersect(&k).unwrap().is_zero());

        assert!(matches!(
            sub_ideals_of_j(&load("nml"), &split_roots_by_j(&load("nml")).unwrap()),
            Err(Error::HypothesisMissing(_))
        ));
    }

    #[test]
    fn class_ideals_inside_j() {
        let d = load("sl2v1");
        let js = split_roots_by_j(&d).unwrap();
        assert_eq!(class_j_ideal(&d, &js, &r(&[1])).unwrap(), js.j);

        let d = load("sl2");
        let js = split_roots_by_j(&d).unwrap();
        assert!(matches!(class_j_ideal(&d, &js, &r(&[2])), Err(Error::HypothesisMissing(_))));

        let d = load("split_j");
        let js = split_roots_by_j(&d).unwrap();
        let one = class_j_ideal(&d, &js, &r(&[1, 0])).unwrap();
        assert_eq!(one.dim(), 2);
        assert!(js.j.contains(&one).unwrap() && one != js.j);
    }

    #[test]
    fn verdicts() {
        assert!(matches!(decide_simplicity(&load("sl2")).unwrap(), SimplicityVerdict::Simple { .. }));
        match decide_simplicity(&load("sl2v1")).unwrap() {
            SimplicityVerdict::Simple { certificate, notes } => {
                assert!(certificate.iter().all(|c| c.holds));
                assert_eq!(notes.len(), 1);
            }
            other => panic!("{other:?}"),
        }
        let d6 = load("d6");
        match decide_simplicity(&d6).unwrap() {
            SimplicityVerdict::NotSimple {
                witness: NotSimpleWitness::Ideal { subspace, .. },
            } => {
                let a = d6.algebra();
                let first = Subspace::span(6, (0..3).map(|i| a.basis_vector(i))).unwrap();
                assert_eq!(subspace, first);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            decide_simplicity(&load("a0")).unwrap(),
            SimplicityVerdict::NotSimple {
                witness: NotSimpleWitness::ProductZero
            }
        );
        assert_eq!(decide_simplicity(&load("split_j")).unwrap().status(), "NotSimple");
        assert_eq!(decide_simplicity(&load("nml")).unwrap().status(), "NotSimple");
    }

    #[test]
    fn ideal_statements_on_sl2v1() {
        let d = load("sl2v1");
        let a = d.algebra();
        let js = split_roots_by_j(&d).unwrap();
        let from_e = ideal_closure(a, &Subspace::span(5, vec![a.basis_vector(1)]).unwrap()).unwrap();
        assert!(from_e.is_full());
        for ideal in [from_e, js.j.clone(), Subspace::zero(5)] {
            for report in check_ideal_statements(&d, &js, &ideal).unwrap() {
                assert!(report.holds, "{}", report.property);
            }
        }
    }
}
