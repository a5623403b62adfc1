//! Class ideals `I_[alpha] = I_0 + V` and the global decomposition
//! `L = U + sum I_[alpha]`.

use crate::algebra::{annihilator, derived, ideal_closure, HomAlgebra, IdentityReport, Witness};
use crate::connections::{connection_classes, RootPartition};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, Subspace, Vector};
use crate::roots::{Root, SplitDecomposition};

/// The ideal attached to one connection class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSummand {
    pub class_roots: Vec<Root>,
    /// `span{[L_b, L_-b] : b in class}`, inside `H`.
    pub i0: Subspace,
    /// `sum of L_b over the class`.
    pub v: Subspace,
    /// `i0 + v`
    pub i: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDecomposition {
    /// Complement in `H` of `sum_a [L_a, L_-a]`.
    pub u: Subspace,
    pub summands: Vec<IdealSummand>,
    pub direct: bool,
    pub direct_reason: String,
}

/// Span of all products `[x, y]` with `x in a`, `y in b`.
pub fn bracket_span(alg: &HomAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let mut products = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            products.push(alg.bracket(x, y)?);
        }
    }
    Subspace::span(alg.dim(), products)
}

/// `sum [L_b, L_-b]` over the given roots (terms with `-b` outside `Lambda` vanish).
pub fn opposite_products<'a, I>(d: &SplitDecomposition, roots: I) -> Result<Subspace>
where
    I: IntoIterator<Item = &'a Root>,
{
    let mut acc = Subspace::zero(d.algebra().dim());
    for beta in roots {
        let neg = beta.neg();
        if !d.system().contains(&neg) {
            continue;
        }
        acc = acc.sum(&bracket_span(d.algebra(), &d.root_space(beta), &d.root_space(&neg))?)?;
    }
    Ok(acc)
}

fn summand_for(d: &SplitDecomposition, class: &[Root]) -> Result<IdealSummand> {
    let a = d.algebra();
    let i0 = opposite_products(d, class)?;
    let v = d.span_of_roots(class);
    let i = i0.sum(&v)?;
    if ideal_closure(a, &i)? != i {
        return Err(Error::Internal(format!(
            "class ideal of {} is not an ideal",
            class[0]
        )));
    }
    if i.image(a.phi())? != i {
        return Err(Error::Internal(format!(
            "class ideal of {} is not phi-stable",
            class[0]
        )));
    }
    Ok(IdealSummand {
        class_roots: class.to_vec(),
        i0,
        v,
        i,
    })
}

/// `I_[alpha]` for a class of `connection_classes`.
pub fn build_class_ideal(d: &SplitDecomposition, class_roots: &[Root]) -> Result<IdealSummand> {
    let mut sorted = class_roots.to_vec();
    sorted.sort();
    sorted.dedup();
    let partition = connection_classes(d)?;
    if !partition.classes.contains(&sorted) {
        let shown: Vec<String> = sorted.iter().map(Root::to_string).collect();
        return Err(Error::NotAClass(format!("{{{}}}", shown.join(", "))));
    }
    summand_for(d, &sorted)
}

/// `[I, I'] = 0` for every pair of distinct summands, in both orders.
pub fn check_pairwise_zero(a: &HomAlgebra, summands: &[IdealSummand]) -> Result<IdentityReport> {
    let property = "products of distinct class ideals vanish";
    for (p, s) in summands.iter().enumerate() {
        for (q, t) in summands.iter().enumerate() {
            if p == q {
                continue;
            }
            for x in s.i.basis() {
                for y in t.i.basis() {
                    let prod = a.bracket(x, y)?;
                    if !is_zero_vector(&prod) {
                        return Ok(IdentityReport::fail(
                            property,
                            Witness::Vector { vector: prod },
                            format!(
                                "[{}, {}] != 0 between the classes of {} and {}",
                                a.describe(x),
                                a.describe(y),
                                s.class_roots[0],
                                t.class_roots[0]
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(IdentityReport::pass(property))
}

/// Whether `L` is the direct sum of the class ideals, which is only claimed
/// when `Z(L) = 0` and `[L, L] = L`.
pub fn check_direct_sum(d: &SplitDecomposition, summands: &[IdealSummand]) -> Result<(bool, String)> {
    let a = d.algebra();
    let mut missing = Vec::new();
    if !derived(a).is_full() {
        missing.push("[L, L] != L");
    }
    if !annihilator(a).is_zero() {
        missing.push("Z(L) != 0");
    }
    if !missing.is_empty() {
        return Ok((false, format!("hypotheses not met: {}", missing.join("; "))));
    }
    let mut total = Subspace::zero(a.dim());
    let mut dims = 0;
    for s in summands {
        total = total.sum(&s.i)?;
        dims += s.i.dim();
    }
    if !total.is_full() {
        return Ok((false, format!("class ideals span dimension {} of {}", total.dim(), a.dim())));
    }
    if dims != a.dim() {
        return Ok((false, format!("class ideal dimensions add to {dims}, not {}", a.dim())));
    }
    Ok((true, "L is the direct sum of the class ideals".into()))
}

/// `L = U + sum I_[alpha]`, with `U` completed from the `H` basis in order.
pub fn global_decomposition(d: &SplitDecomposition) -> Result<GlobalDecomposition> {
    let partition = connection_classes(d)?;
    global_from_partition(d, &partition)
}

pub fn global_from_partition(d: &SplitDecomposition, partition: &RootPartition) -> Result<GlobalDecomposition> {
    let a = d.algebra();
    let n = a.dim();
    let s = opposite_products(d, d.roots())?;
    let mut acc = s.clone();
    let mut u_vectors: Vec<Vector> = Vec::new();
    for h in d.h_basis() {
        if !acc.contains_vector(h)? {
            acc = acc.sum(&Subspace::span(n, vec![h.clone()])?)?;
            u_vectors.push(h.clone());
        }
    }
    let u = Subspace::span(n, u_vectors)?;
    let summands = partition
        .classes
        .iter()
        .map(|c| summand_for(d, c))
        .collect::<Result<Vec<_>>>()?;
    let mut total = u.clone();
    for summand in &summands {
        total = total.sum(&summand.i)?;
    }
    if !total.is_full() {
        return Err(Error::Internal(format!(
            "U + sum of class ideals has dimension {} of {n}",
            total.dim()
        )));
    }
    let (direct, direct_reason) = check_direct_sum(d, &summands)?;
    Ok(GlobalDecomposition {
        u,
        summands,
        direct,
        direct_reason,
    })
}

/// The two necessary conditions for simplicity: a single connection class
/// and `H = sum [L_a, L_-a]`.
pub fn check_simple_necessary(d: &SplitDecomposition) -> Result<IdentityReport> {
    let property = "single connection class and H = sum [L_a, L_-a]";
    let partition = match connection_classes(d) {
        Ok(p) => p,
        Err(Error::HypothesisMissing(why)) => {
            return Ok(IdentityReport {
                property: property.into(),
                holds: false,
                witness: None,
                detail: Some(why),
            })
        }
        Err(e) => return Err(e),
    };
    if partition.len() != 1 {
        let firsts: Vec<Root> = partition.classes.iter().map(|c| c[0].clone()).collect();
        return Ok(IdentityReport::fail(
            property,
            Witness::Roots { roots: firsts },
            format!("{} connection classes", partition.len()),
        ));
    }
    let s = opposite_products(d, d.roots())?;
    if &s != d.h() {
        let missing = d
            .h_basis()
            .iter()
            .find(|h| !s.contains_vector(h).unwrap_or(false))
            .cloned()
            .unwrap_or_default();
        return Ok(IdentityReport::fail(
            property,
            Witness::Vector { vector: missing },
            format!("sum [L_a, L_-a] has dimension {} inside H of dimension {}", s.dim(), d.h().dim()),
        ));
    }
    Ok(IdentityReport::pass(property))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::roots::decompose;

    fn load(name: &str) -> SplitDecomposition {
        let (a, h) = corpus::load(name).unwrap();
        decompose(&a, &h).unwrap()
    }

    fn span(a: &HomAlgebra, idx: &[usize]) -> Subspace {
        Subspace::span(a.dim(), idx.iter().map(|&i| a.basis_vector(i))).unwrap()
    }

    #[test]
    fn sl2_class_ideal_is_everything() {
        let d = load("sl2");
        let a = d.algebra();
        let s = build_class_ideal(&d, d.roots()).unwrap();
        assert_eq!(s.i0, span(a, &[0]));
        assert_eq!(s.v, span(a, &[1, 2]));
        assert!(s.i.is_full());
    }

    #[test]
    fn d6_class_ideals_are_the_copies() {
        let d = load("d6");
        let a = d.algebra();
        let first = build_class_ideal(&d, &[Root::from_i64(&[2, 0]), Root::from_i64(&[-2, 0])]).unwrap();
        assert_eq!(first.i, span(a, &[0, 1, 2]));
        let g = global_decomposition(&d).unwrap();
        assert!(g.u.is_zero());
        assert_eq!(g.summands.len(), 2);
        assert!(g.direct);
        assert!(check_pairwise_zero(a, &g.summands).unwrap().holds);
        let dims: usize = g.summands.iter().map(|s| s.i.dim()).sum();
        assert_eq!(dims, 6);
        assert!(g.summands[0].i.intersect(&g.summands[1].i).unwrap().is_zero());
    }

    #[test]
    fn not_a_class() {
        let d = load("d6");
        assert!(matches!(
            build_class_ideal(&d, &[Root::from_i64(&[2, 0])]),
            Err(Error::NotAClass(_))
        ));
    }

    #[test]
    fn sl2v1_single_summand() {
        let d = load("sl2v1");
        let g = global_decomposition(&d).unwrap();
        assert!(g.u.is_zero());
        assert_eq!(g.summands.len(), 1);
        assert!(g.summands[0].i.is_full());
        assert_eq!(g.summands[0].i0, span(d.algebra(), &[0]));
        assert!(g.direct);
    }

    #[test]
    fn a0_degenerate() {
        let d = load("a0");
        let g = global_decomposition(&d).unwrap();
        assert!(g.u.is_full());
        assert!(g.summands.is_empty());
        assert!(!g.direct);
        assert!(g.direct_reason.contains("[L, L] != L"));
        assert!(check_pairwise_zero(d.algebra(), &g.summands).unwrap().holds);
    }

    #[test]
    fn necessary_conditions() {
        assert!(!check_simple_necessary(&load("d6")).unwrap().holds);
        assert!(check_simple_necessary(&load("sl2")).unwrap().holds);
        assert!(check_simple_necessary(&load("sl2v1")).unwrap().holds);
    }
}
