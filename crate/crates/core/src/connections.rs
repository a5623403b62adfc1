//! Connections of roots and their `not-J` refinement, with certificate replay.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::algebra::derived;
use crate::diagnostics::JSplit;
use crate::error::{Error, Result};
use crate::roots::{is_symmetric_set, Root, RootSystem, SplitDecomposition};

/// A certificate that `alpha` is connected to `beta`.
///
/// `chain[0] = alpha o phi^-start_shift`, `partial_sums[0] = chain[0]` and
/// `partial_sums[i+1] = partial_sums[i] o phi^-1 + chain[i+1] o phi^-1`;
/// the last partial sum is `end_sign * beta o phi^-end_shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub chain: Vec<Root>,
    pub partial_sums: Vec<Root>,
    pub start_shift: usize,
    pub end_shift: usize,
    pub end_sign: i8,
}

impl Connection {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The same connection started `r` twist steps later: every chain root
    /// and partial sum is composed with `phi^-r`.
    pub fn shifted(&self, sys: &RootSystem, r: usize) -> Connection {
        let z = r as i64;
        Connection {
            chain: self.chain.iter().map(|a| sys.twist_pow(a, z)).collect(),
            partial_sums: self.partial_sums.iter().map(|s| sys.twist_pow(s, z)).collect(),
            start_shift: self.start_shift + r,
            end_shift: self.end_shift + r,
            end_sign: self.end_sign,
        }
    }
}

/// A partition of a root set into classes, each sorted, ordered by their
/// smallest root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPartition {
    pub classes: Vec<Vec<Root>>,
}

impl RootPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, alpha: &Root) -> Option<&[Root]> {
        self.classes
            .iter()
            .find(|c| c.contains(alpha))
            .map(Vec::as_slice)
    }
}

/// Side of the `J` split a root lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    J,
    NotJ,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::J => "J",
            Side::NotJ => "not-J",
        }
    }

    fn roots(self, js: &JSplit) -> &[Root] {
        match self {
            Side::J => &js.lambda_j,
            Side::NotJ => &js.lambda_not_j,
        }
    }
}

struct Search<'a> {
    sys: &'a RootSystem,
    links: &'a [Root],
    allowed: Option<&'a BTreeSet<Root>>,
}

impl Search<'_> {
    fn admissible(&self, sigma: &Root) -> bool {
        match self.allowed {
            Some(a) => a.contains(sigma),
            None => self.sys.contains(sigma),
        }
    }

    fn accepted(&self, sigma: &Root) -> bool {
        self.allowed.is_none_or(|a| a.contains(sigma))
    }

    /// Shortest connection by breadth-first search over partial sums.
    fn run(&self, alpha: &Root, beta: &Root) -> Result<Option<Connection>> {
        let start = self.sys.orbit(alpha)?;
        let beta_orbit = self.sys.orbit(beta)?;
        let mut targets: BTreeMap<Root, (usize, i8)> = BTreeMap::new();
        for (m, r) in beta_orbit.iter().enumerate() {
            targets.entry(r.clone()).or_insert((m, 1));
        }
        for (m, r) in beta_orbit.iter().enumerate() {
            targets.entry(r.neg()).or_insert((m, -1));
        }

        let finish = |chain: Vec<Root>, sums: Vec<Root>, n: usize, (m, e): (usize, i8)| Connection {
            chain,
            partial_sums: sums,
            start_shift: n,
            end_shift: m,
            end_sign: e,
        };

        // state -> (parent state, link root); roots with no parent are starts
        let mut parent: BTreeMap<Root, Option<(Root, Root)>> = BTreeMap::new();
        let mut start_shift: BTreeMap<Root, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for (n, a1) in start.iter().enumerate() {
            if let Some(&t) = targets.get(a1) {
                if self.accepted(a1) {
                    return Ok(Some(finish(vec![a1.clone()], vec![a1.clone()], n, t)));
                }
            }
            if self.admissible(a1) && !parent.contains_key(a1) {
                parent.insert(a1.clone(), None);
                start_shift.insert(a1.clone(), n);
                queue.push_back(a1.clone());
            }
        }

        let rebuild = |parent: &BTreeMap<Root, Option<(Root, Root)>>, last: &Root| {
            let mut chain = Vec::new();
            let mut sums = vec![last.clone()];
            let mut cur = last.clone();
            while let Some(Some((prev, link))) = parent.get(&cur) {
                chain.push(link.clone());
                sums.push(prev.clone());
                cur = prev.clone();
            }
            chain.push(cur.clone());
            chain.reverse();
            sums.reverse();
            (chain, sums, cur)
        };

        while let Some(sigma) = queue.pop_front() {
            let base = self.sys.twist(&sigma);
            for gamma in self.links {
                let next = base.add(&self.sys.twist(gamma));
                if let Some(&t) = targets.get(&next) {
                    if self.accepted(&next) {
                        let (mut chain, mut sums, first) = rebuild(&parent, &sigma);
                        chain.push(gamma.clone());
                        sums.push(next);
                        let n = start_shift[&first];
                        return Ok(Some(finish(chain, sums, n, t)));
                    }
                }
                if self.admissible(&next) && !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((sigma.clone(), gamma.clone())));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }
}

fn require_root(sys: &RootSystem, alpha: &Root) -> Result<()> {
    if sys.contains(alpha) {
        Ok(())
    } else {
        Err(Error::RootNotInLambda(alpha.to_string()))
    }
}

/// A shortest certificate that `alpha` is connected to `beta`, if any.
pub fn connected(d: &SplitDecomposition, alpha: &Root, beta: &Root) -> Result<Option<Connection>> {
    let sys = d.system();
    require_root(sys, alpha)?;
    require_root(sys, beta)?;
    Search {
        sys,
        links: sys.roots(),
        allowed: None,
    }
    .run(alpha, beta)
}

/// Replays a certificate against the definition, using matrix powers of the
/// twist rather than the search's step map.
pub fn verify_connection(sys: &RootSystem, alpha: &Root, beta: &Root, c: &Connection) -> bool {
    let k = c.chain.len();
    if k == 0 || c.partial_sums.len() != k || !(c.end_sign == 1 || c.end_sign == -1) {
        return false;
    }
    if !sys.contains(alpha) || !sys.contains(beta) {
        return false;
    }
    if c.chain.iter().any(|r| !sys.contains(r)) {
        return false;
    }
    if c.chain[0] != sys.twist_pow(alpha, c.start_shift as i64) {
        return false;
    }
    let mut sigma = c.chain[0].clone();
    for i in 0..k {
        if i > 0 {
            sigma = sys.twist_pow(&sigma, 1).add(&sys.twist_pow(&c.chain[i], 1));
        }
        if sigma != c.partial_sums[i] {
            return false;
        }
        if i + 1 < k && !sys.contains(&sigma) {
            return false;
        }
    }
    let end = sys.twist_pow(beta, c.end_shift as i64);
    let end = if c.end_sign == 1 { end } else { end.neg() };
    sigma == end
}

/// Full reachability table of `connected` over `Lambda`, with the
/// equivalence-relation properties asserted.
fn reachability<F>(roots: &[Root], mut reach: F) -> Result<Vec<Vec<bool>>>
where
    F: FnMut(&Root, &Root) -> Result<bool>,
{
    let n = roots.len();
    let mut table = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = reach(&roots[i], &roots[j])?;
        }
    }
    for i in 0..n {
        if !table[i][i] {
            return Err(Error::Internal(format!("{} is not connected to itself", roots[i])));
        }
        for j in 0..n {
            if table[i][j] != table[j][i] {
                return Err(Error::Internal(format!(
                    "connection between {} and {} is not symmetric",
                    roots[i], roots[j]
                )));
            }
            for k in 0..n {
                if table[i][j] && table[j][k] && !table[i][k] {
                    return Err(Error::Internal(format!(
                        "connection is not transitive through {} -> {} -> {}",
                        roots[i], roots[j], roots[k]
                    )));
                }
            }
        }
    }
    Ok(table)
}

fn partition(roots: &[Root], table: &[Vec<bool>]) -> RootPartition {
    let mut assigned = vec![false; roots.len()];
    let mut classes = Vec::new();
    for i in 0..roots.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for j in i..roots.len() {
            if table[i][j] {
                assigned[j] = true;
                class.push(roots[j].clone());
            }
        }
        classes.push(class);
    }
    RootPartition { classes }
}

/// `Lambda / ~`. Requires a symmetric root system.
pub fn connection_classes(d: &SplitDecomposition) -> Result<RootPartition> {
    if !d.is_symmetric() {
        return Err(Error::HypothesisMissing("the root system is not symmetric".into()));
    }
    let roots = d.roots();
    let table = reachability(roots, |a, b| Ok(connected(d, a, b)?.is_some()))?;
    Ok(partition(roots, &table))
}

fn side_of(js: &JSplit, alpha: &Root) -> Option<Side> {
    if js.lambda_j.contains(alpha) {
        Some(Side::J)
    } else if js.lambda_not_j.contains(alpha) {
        Some(Side::NotJ)
    } else {
        None
    }
}

/// A shortest `not-J` connection: links from `Lambda^notJ`, every partial
/// sum on the side of `alpha`.
pub fn nj_connected(
    d: &SplitDecomposition,
    js: &JSplit,
    alpha: &Root,
    beta: &Root,
) -> Result<Option<Connection>> {
    let sys = d.system();
    require_root(sys, alpha)?;
    require_root(sys, beta)?;
    let side = side_of(js, alpha)
        .ok_or_else(|| Error::ClassMismatch(format!("{alpha} is a mixed root")))?;
    if side_of(js, beta) != Some(side) {
        return Err(Error::ClassMismatch(format!(
            "{alpha} and {beta} are not both in Lambda^{}",
            side.name()
        )));
    }
    let allowed: BTreeSet<Root> = side.roots(js).iter().cloned().collect();
    Search {
        sys,
        links: &js.lambda_not_j,
        allowed: Some(&allowed),
    }
    .run(alpha, beta)
}

/// `verify_connection` plus the `not-J` filters.
pub fn verify_nj_connection(
    sys: &RootSystem,
    js: &JSplit,
    alpha: &Root,
    beta: &Root,
    c: &Connection,
) -> bool {
    let Some(side) = side_of(js, alpha) else {
        return false;
    };
    if side_of(js, beta) != Some(side) {
        return false;
    }
    let allowed = side.roots(js);
    verify_connection(sys, alpha, beta, c)
        && c.chain.iter().skip(1).all(|r| js.lambda_not_j.contains(r))
        && c.partial_sums.iter().all(|s| allowed.contains(s))
}

fn nj_hypotheses(d: &SplitDecomposition, js: &JSplit, side: Side) -> Result<()> {
    let set = |roots: &[Root]| roots.iter().cloned().collect::<BTreeSet<Root>>();
    if !is_symmetric_set(&set(&js.lambda_not_j)) {
        return Err(Error::HypothesisMissing("Lambda^notJ is not symmetric".into()));
    }
    if side == Side::J {
        if !derived(d.algebra()).is_full() {
            return Err(Error::HypothesisMissing("[L, L] != L".into()));
        }
        if !is_symmetric_set(&set(&js.lambda_j)) {
            return Err(Error::HypothesisMissing("Lambda^J is not symmetric".into()));
        }
    }
    Ok(())
}

/// Classes of `~_notJ` on one side of the split.
pub fn nj_classes(d: &SplitDecomposition, js: &JSplit, side: Side) -> Result<RootPartition> {
    nj_hypotheses(d, js, side)?;
    let roots = side.roots(js);
    let table = reachability(roots, |a, b| Ok(nj_connected(d, js, a, b)?.is_some()))?;
    Ok(partition(roots, &table))
}

/// `Lambda_alpha^gamma`: the roots on the side of `alpha` that are
/// `not-J`-connected to it.
pub fn nj_class_of(d: &SplitDecomposition, js: &JSplit, alpha: &Root) -> Result<Vec<Root>> {
    require_root(d.system(), alpha)?;
    let side = side_of(js, alpha)
        .ok_or_else(|| Error::ClassMismatch(format!("{alpha} is a mixed root")))?;
    let partition = nj_classes(d, js, side)?;
    Ok(partition
        .class_of(alpha)
        .map(<[Root]>::to_vec)
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::yau_twist;
    use crate::corpus;
    use crate::diagnostics::split_roots_by_j;
    use crate::linalg::Matrix;
    use crate::roots::decompose;

    fn r(xs: &[i64]) -> Root {
        Root::from_i64(xs)
    }

    fn load(name: &str) -> SplitDecomposition {
        let (a, h) = corpus::load(name).unwrap();
        decompose(&a, &h).unwrap()
    }

    #[test]
    fn sl2_opposite_roots_in_one_step() {
        let d = load("sl2");
        let c = connected(&d, &r(&[2]), &r(&[-2])).unwrap().unwrap();
        assert_eq!(c.chain, vec![r(&[2])]);
        assert_eq!((c.start_shift, c.end_shift, c.end_sign), (0, 0, -1));
        assert!(verify_connection(d.system(), &r(&[2]), &r(&[-2]), &c));
    }

    #[test]
    fn reflexive_certificate() {
        let d = load("sl2v1");
        for alpha in d.roots() {
            let c = connected(&d, alpha, alpha).unwrap().unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c.end_sign, 1);
        }
    }

    #[test]
    fn sl2v1_two_step_chain_replays() {
        let d = load("sl2v1");
        let sys = d.system();
        let chain = Connection {
            chain: vec![r(&[1]), r(&[-2])],
            partial_sums: vec![r(&[1]), r(&[-1])],
            start_shift: 0,
            end_shift: 0,
            end_sign: 1,
        };
        assert!(verify_connection(sys, &r(&[1]), &r(&[-1]), &chain));
        let mut forged = chain.clone();
        forged.partial_sums[1] = r(&[1]);
        assert!(!verify_connection(sys, &r(&[1]), &r(&[-1]), &forged));
        // the search finds the shorter sign certificate
        let found = connected(&d, &r(&[1]), &r(&[-1])).unwrap().unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found.end_sign, -1);
        let c = connected(&d, &r(&[1]), &r(&[2])).unwrap().unwrap();
        assert!(verify_connection(sys, &r(&[1]), &r(&[2]), &c));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn classes() {
        assert_eq!(connection_classes(&load("sl2")).unwrap().classes, vec![vec![r(&[-2]), r(&[2])]]);
        let d6 = connection_classes(&load("d6")).unwrap();
        assert_eq!(
            d6.classes,
            vec![vec![r(&[-2, 0]), r(&[2, 0])], vec![r(&[0, -2]), r(&[0, 2])]]
        );
        assert_eq!(connection_classes(&load("sl2v1")).unwrap().len(), 1);
    }

    fn swapped_d6() -> SplitDecomposition {
        let (a, h) = corpus::load("d6").unwrap();
        let swap = Matrix::from_i64(&[
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
        ]);
        let t = yau_twist(&a, &swap).unwrap();
        decompose(&t, &h).unwrap()
    }

    #[test]
    fn twist_orbits_join_classes() {
        let d = swapped_d6();
        assert_eq!(d.root_orbit(&r(&[2, 0])).unwrap(), vec![r(&[2, 0]), r(&[0, 2])]);
        let c = connected(&d, &r(&[2, 0]), &r(&[0, 2])).unwrap().unwrap();
        assert_eq!(c.len(), 1);
        assert!(verify_connection(d.system(), &r(&[2, 0]), &r(&[0, 2]), &c));
        assert_eq!(connection_classes(&d).unwrap().len(), 1);
    }

    #[test]
    fn shifted_certificates_still_verify() {
        for d in [swapped_d6(), load("sl2v1"), load("split_j")] {
            let sys = d.system();
            for a in d.roots() {
                for b in d.roots() {
                    if let Some(c) = connected(&d, a, b).unwrap() {
                        for shift in 1..4 {
                            assert!(verify_connection(sys, a, b, &c.shifted(sys, shift)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn non_root_is_rejected() {
        let d = load("sl2");
        assert!(matches!(connected(&d, &r(&[3]), &r(&[2])), Err(Error::RootNotInLambda(_))));
    }

    #[test]
    fn nj_examples() {
        let d = load("sl2v1");
        let js = split_roots_by_j(&d).unwrap();
        let c = nj_connected(&d, &js, &r(&[2]), &r(&[-2])).unwrap().unwrap();
        assert_eq!(c.len(), 1);
        let c = nj_connected(&d, &js, &r(&[1]), &r(&[-1])).unwrap().unwrap();
        assert!(verify_nj_connection(d.system(), &js, &r(&[1]), &r(&[-1]), &c));
        let two_step = Connection {
            chain: vec![r(&[1]), r(&[-2])],
            partial_sums: vec![r(&[1]), r(&[-1])],
            start_shift: 0,
            end_shift: 0,
            end_sign: 1,
        };
        assert!(verify_nj_connection(d.system(), &js, &r(&[1]), &r(&[-1]), &two_step));
        assert!(nj_connected(&d, &js, &r(&[1]), &r(&[1])).unwrap().is_some());
        assert!(matches!(
            nj_connected(&d, &js, &r(&[1]), &r(&[2])),
            Err(Error::ClassMismatch(_))
        ));
        assert_eq!(nj_classes(&d, &js, Side::NotJ).unwrap().classes, vec![vec![r(&[-2]), r(&[2])]]);
        assert_eq!(nj_classes(&d, &js, Side::J).unwrap().classes, vec![vec![r(&[-1]), r(&[1])]]);
        assert_eq!(nj_class_of(&d, &js, &r(&[1])).unwrap(), vec![r(&[-1]), r(&[1])]);

        let d6 = load("d6");
        let js6 = split_roots_by_j(&d6).unwrap();
        assert_eq!(nj_classes(&d6, &js6, Side::NotJ).unwrap().len(), 2);
    }

    #[test]
    fn nj_certificates_are_plain_certificates() {
        for name in ["sl2v1", "split_j", "d6"] {
            let d = load(name);
            let js = split_roots_by_j(&d).unwrap();
            for side in [Side::J, Side::NotJ] {
                let roots = side.roots(&js).to_vec();
                for a in &roots {
                    for b in &roots {
                        if let Some(c) = nj_connected(&d, &js, a, b).unwrap() {
                            assert!(verify_nj_connection(d.system(), &js, a, b, &c));
                            assert!(verify_connection(d.system(), a, b, &c));
                        }
                    }
                }
            }
        }
    }
}
