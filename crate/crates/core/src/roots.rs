//! Split root-space decompositions `L = H + sum L_alpha` and the action of
//! the twist on roots.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::algebra::{check_hom_leibniz, check_regular, HomAlgebra, IdentityReport, SemidirectProduct, Witness};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, coordinates, dot, format_vector, int, is_zero_vector, kernel, neg_vector,
    simultaneous_eigenspaces, zero_vector, Matrix, Scalar, Subspace, Vector,
};

/// A linear functional on `H`, stored by its values on the chosen `H` basis.
///
/// Roots proper are nonzero; the zero functional appears as the weight of
/// `L_0 = H`. Ordering is lexicographic on the value vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vector);

impl Root {
    pub fn new(values: Vector) -> Self {
        Root(values)
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Root(values.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Root(zero_vector(rank))
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }

    pub fn neg(&self) -> Root {
        Root(neg_vector(&self.0))
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Value on the element of `H` with the given coordinates.
    pub fn eval(&self, coords: &[Scalar]) -> Scalar {
        dot(&self.0, coords)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.0))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root{}", format_vector(&self.0))
    }
}

/// The combinatorial part of a decomposition: the root set `Lambda` and the
/// twist restricted to `H`, which acts on functionals by `alpha -> alpha o phi^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    roots: Vec<Root>,
    set: BTreeSet<Root>,
    phi_h: Matrix,
    /// Transpose of `phi_h^-1`; maps value vectors of `alpha` to those of `alpha o phi^-1`.
    dual_twist: Matrix,
}

impl RootSystem {
    pub fn new(roots: Vec<Root>, phi_h: Matrix) -> Result<Self> {
        let rank = phi_h.rows();
        if !phi_h.is_square() {
            return Err(Error::NotSquare {
                rows: phi_h.rows(),
                cols: phi_h.cols(),
            });
        }
        if let Some(bad) = roots.iter().find(|r| r.rank() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: bad.rank(),
            });
        }
        if roots.iter().any(Root::is_zero) {
            return Err(Error::RootNotInLambda("the zero functional is never a root".into()));
        }
        let inv = phi_h.inverse().ok_or(Error::Singular)?;
        let set: BTreeSet<Root> = roots.into_iter().collect();
        Ok(RootSystem {
            roots: set.iter().cloned().collect(),
            set,
            phi_h,
            dual_twist: inv.transpose(),
        })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_set(&self) -> &BTreeSet<Root> {
        &self.set
    }

    pub fn rank(&self) -> usize {
        self.phi_h.rows()
    }

    pub fn phi_h(&self) -> &Matrix {
        &self.phi_h
    }

    pub fn contains(&self, alpha: &Root) -> bool {
        self.set.contains(alpha)
    }

    pub fn contains_or_zero(&self, alpha: &Root) -> bool {
        alpha.is_zero() || self.set.contains(alpha)
    }

    pub fn index_of(&self, alpha: &Root) -> Option<usize> {
        self.roots.binary_search(alpha).ok()
    }

    /// `alpha o phi^-1`
    pub fn twist(&self, alpha: &Root) -> Root {
        Root(self.dual_twist.mul_vec(&alpha.0).expect("root rank matches H"))
    }

    /// `alpha o phi^-z`, computed from a matrix power (independent of `twist`).
    pub fn twist_pow(&self, alpha: &Root, z: i64) -> Root {
        let p = self.phi_h.pow(-z).expect("phi restricted to H is invertible");
        Root(p.transpose().mul_vec(&alpha.0).expect("root rank matches H"))
    }

    /// `alpha o phi^-z`, required to land in `Lambda + {0}`.
    pub fn root_phi_pow(&self, alpha: &Root, z: i64) -> Result<Root> {
        if !self.contains_or_zero(alpha) {
            return Err(Error::RootNotInLambda(alpha.to_string()));
        }
        let out = self.twist_pow(alpha, z);
        if !self.contains_or_zero(&out) {
            return Err(Error::Internal(format!(
                "{alpha} o phi^{} = {out} is not a root",
                -z
            )));
        }
        Ok(out)
    }

    /// The cycle `[alpha, alpha o phi^-1, alpha o phi^-2, ...]` through `alpha`.
    pub fn orbit(&self, alpha: &Root) -> Result<Vec<Root>> {
        if !self.contains(alpha) {
            return Err(Error::RootNotInLambda(alpha.to_string()));
        }
        let mut cycle = vec![alpha.clone()];
        let mut next = self.twist(alpha);
        while next != *alpha {
            if !self.contains(&next) || cycle.len() > self.roots.len() {
                return Err(Error::Internal(format!(
                    "orbit of {alpha} leaves Lambda at {next}"
                )));
            }
            cycle.push(next.clone());
            next = self.twist(&next);
        }
        Ok(cycle)
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric_set(&self.set)
    }

    /// True when `alpha -> alpha o phi^-1` maps `Lambda` bijectively onto itself.
    pub fn twist_permutes_roots(&self) -> bool {
        let image: BTreeSet<Root> = self.roots.iter().map(|r| self.twist(r)).collect();
        image == self.set
    }
}

/// Closed under `alpha -> -alpha`.
pub fn is_symmetric_set(roots: &BTreeSet<Root>) -> bool {
    roots.iter().all(|r| roots.contains(&r.neg()))
}

/// An element `h0` of `H` with `alpha(h0) != 0` and `alpha(h0) != beta(h0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingElement {
    /// Coordinates in the `H` basis.
    pub coords: Vector,
    /// The element as a vector of `L`.
    pub vector: Vector,
}

/// Coordinates of a separating element: basis elements first, then
/// `h_i + t h_j` for `t = 1, 2, ...`.
pub fn separating_coordinates(alpha: &Root, beta: &Root) -> Result<Vector> {
    if alpha.is_zero() {
        return Err(Error::NotSeparable("alpha is the zero functional".into()));
    }
    if alpha == beta {
        return Err(Error::NotSeparable("alpha equals beta".into()));
    }
    let r = alpha.rank();
    let good = |c: &Vector| {
        let a = alpha.eval(c);
        !a.is_zero() && a != beta.eval(c)
    };
    for i in 0..r {
        let mut c = zero_vector(r);
        c[i] = int(1);
        if good(&c) {
            return Ok(c);
        }
    }
    // Each inequality fails for at most one t on a line where it is not
    // identically violated, so t <= 3 always suffices.
    for t in 1..=3 {
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let mut c = zero_vector(r);
                c[i] = int(1);
                c[j] = int(t);
                if good(&c) {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::Internal(format!("no separating element for {alpha}, {beta}")))
}

/// A verified split decomposition of a regular Hom-Leibniz algebra.
#[derive(Clone, Debug)]
pub struct SplitDecomposition {
    algebra: HomAlgebra,
    h_basis: Vec<Vector>,
    h: Subspace,
    system: RootSystem,
    root_spaces: BTreeMap<Root, Subspace>,
}

impl SplitDecomposition {
    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    /// The ordered basis `h_1..h_r` in which root values are expressed.
    pub fn h_basis(&self) -> &[Vector] {
        &self.h_basis
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn roots(&self) -> &[Root] {
        self.system.roots()
    }

    pub fn rank(&self) -> usize {
        self.h_basis.len()
    }

    /// `L_alpha`; `H` for the zero functional and `0` for non-roots.
    pub fn root_space(&self, alpha: &Root) -> Subspace {
        if alpha.is_zero() {
            return self.h.clone();
        }
        self.root_spaces
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.algebra.dim()))
    }

    pub fn root_spaces(&self) -> &BTreeMap<Root, Subspace> {
        &self.root_spaces
    }

    /// The element `sum c_i h_i` of `L`.
    pub fn h_element(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vector(self.algebra.dim());
        for (c, h) in coords.iter().zip(&self.h_basis) {
            axpy(&mut v, c, h);
        }
        v
    }

    /// Sum of root spaces over a set of roots.
    pub fn span_of_roots<'a, I>(&self, roots: I) -> Subspace
    where
        I: IntoIterator<Item = &'a Root>,
    {
        let vectors: Vec<Vector> = roots
            .into_iter()
            .flat_map(|r| self.root_space(r).basis().to_vec())
            .collect();
        Subspace::from_vectors_unchecked(self.algebra.dim(), vectors)
    }

    pub fn root_phi_pow(&self, alpha: &Root, z: i64) -> Result<Root> {
        self.system.root_phi_pow(alpha, z)
    }

    pub fn root_orbit(&self, alpha: &Root) -> Result<Vec<Root>> {
        self.system.orbit(alpha)
    }

    pub fn is_symmetric(&self) -> bool {
        self.system.is_symmetric()
    }

    pub fn find_separating_element(&self, alpha: &Root, beta: &Root) -> Result<SeparatingElement> {
        let coords = separating_coordinates(alpha, beta)?;
        let vector = self.h_element(&coords);
        Ok(SeparatingElement { coords, vector })
    }

    /// The operators `phi^-1 o R_h` for each `H` basis element; `v` is in
    /// `L_alpha` iff it is a joint eigenvector with eigenvalues `alpha(h_i)`.
    pub fn weight_operators(&self) -> Result<Vec<Matrix>> {
        weight_operators(&self.algebra, &self.h_basis)
    }
}

fn weight_operators(a: &HomAlgebra, h_basis: &[Vector]) -> Result<Vec<Matrix>> {
    let inv = a.phi_inverse().ok_or(Error::Singular)?;
    h_basis
        .iter()
        .map(|h| inv.mul(&a.right_multiplication(h)?))
        .collect()
}

/// Computes and certifies `L = H + sum_alpha L_alpha` for the given `H` basis.
pub fn decompose(a: &HomAlgebra, h_basis: &[Vector]) -> Result<SplitDecomposition> {
    let hl = check_hom_leibniz(a);
    if !hl.holds {
        return Err(Error::NotHomLeibniz(hl.detail.unwrap_or_default()));
    }
    let reg = check_regular(a);
    if !reg.holds {
        return Err(Error::NotRegular(reg.detail.unwrap_or_default()));
    }
    let n = a.dim();
    let h = Subspace::span(n, h_basis.to_vec())?;
    if h.dim() != h_basis.len() {
        return Err(Error::DependentHBasis);
    }
    for (i, x) in h_basis.iter().enumerate() {
        for (j, y) in h_basis.iter().enumerate() {
            if !is_zero_vector(&a.bracket(x, y)?) {
                return Err(Error::NotAbelian { left: i, right: j });
            }
        }
    }
    if h.image(a.phi())? != h {
        return Err(Error::NotPhiStable);
    }
    let mut phi_h = Matrix::zeros(h_basis.len(), h_basis.len());
    for (j, x) in h_basis.iter().enumerate() {
        let image = a.apply_phi(x)?;
        let c = coordinates(h_basis, &image)?.ok_or(Error::NotPhiStable)?;
        for (i, value) in c.into_iter().enumerate() {
            phi_h.set(i, j, value);
        }
    }

    let ops = weight_operators(a, h_basis)?;
    let pieces = simultaneous_eigenspaces(&ops, n)?;
    let mut roots = Vec::new();
    let mut root_spaces = BTreeMap::new();
    let mut covered = Subspace::zero(n);
    for (values, space) in pieces {
        covered = covered.sum(&space)?;
        let root = Root::new(values);
        if root.is_zero() {
            if space != h {
                return Err(Error::HNotMaximal {
                    l0: a.describe_subspace(&space),
                });
            }
        } else {
            roots.push(root.clone());
            root_spaces.insert(root, space);
        }
    }
    if !covered.is_full() {
        return Err(Error::NotSplit {
            uncovered: covered.complement().to_strings(),
        });
    }
    let system = RootSystem::new(roots, phi_h)?;
    Ok(SplitDecomposition {
        algebra: a.clone(),
        h_basis: h_basis.to_vec(),
        h,
        system,
        root_spaces,
    })
}

fn weight_label(alpha: &Root) -> String {
    if alpha.is_zero() {
        "L_0".into()
    } else {
        format!("L_{alpha}")
    }
}

/// Subspace containment as a report entry.
fn containment(property: String, inner: &Subspace, outer: &Subspace) -> IdentityReport {
    match inner.basis().iter().find(|v| !outer.contains_vector(v).unwrap_or(false)) {
        None => IdentityReport::pass(property),
        Some(v) => IdentityReport::fail(
            property,
            Witness::Vector { vector: v.clone() },
            "vector escapes the target space",
        ),
    }
}

/// Re-derives every structural containment of a split decomposition:
/// `L_0 = H`, the direct sum, the twist permuting roots,
/// `phi(L_alpha) <= L_{alpha phi^-1}` and
/// `[L_alpha, L_beta] <= L_{alpha phi^-1 + beta phi^-1}` over `Lambda + {0}`.
pub fn verify_split(d: &SplitDecomposition) -> Result<Vec<IdentityReport>> {
    let a = d.algebra();
    let n = a.dim();
    let sys = d.system();
    let mut out = Vec::new();

    let mut l0 = Subspace::full(n);
    for op in d.weight_operators()? {
        l0 = l0.intersect(&kernel(&op))?;
    }
    out.push(containment("L_0 = H (L_0 in H)".into(), &l0, d.h()));

    let total: usize = d.h().dim() + d.root_spaces.values().map(Subspace::dim).sum::<usize>();
    let sum = d.root_spaces.values().try_fold(d.h().clone(), |acc, s| acc.sum(s))?;
    if total == n && sum.is_full() {
        out.push(IdentityReport::pass("direct sum of H and root spaces is L"));
    } else {
        let witness = sum.complement().basis().first().cloned().unwrap_or_else(|| zero_vector(n));
        out.push(IdentityReport::fail(
            "direct sum of H and root spaces is L",
            Witness::Vector { vector: witness },
            format!("dimensions add to {total}, span has dimension {}", sum.dim()),
        ));
    }

    if sys.twist_permutes_roots() {
        out.push(IdentityReport::pass("alpha -> alpha phi^-1 permutes Lambda"));
    } else {
        let escaped: Vec<Root> = sys.roots().iter().filter(|r| !sys.contains(&sys.twist(r))).cloned().collect();
        out.push(IdentityReport::fail(
            "alpha -> alpha phi^-1 permutes Lambda",
            Witness::Roots { roots: escaped },
            "twisted roots leave Lambda",
        ));
    }

    let mut weights = vec![Root::zero(d.rank())];
    weights.extend(sys.roots().iter().cloned());
    for alpha in &weights {
        let space = d.root_space(alpha);
        let target_root = sys.twist(alpha);
        let target = if sys.contains_or_zero(&target_root) {
            d.root_space(&target_root)
        } else {
            Subspace::zero(n)
        };
        let image = space.image(a.phi())?;
        out.push(containment(
            format!("phi({}) in {}", weight_label(alpha), weight_label(&target_root)),
            &image,
            &target,
        ));
    }
    for alpha in &weights {
        let la = d.root_space(alpha);
        for beta in &weights {
            let lb = d.root_space(beta);
            let target_root = sys.twist(alpha).add(&sys.twist(beta));
            let target = if sys.contains_or_zero(&target_root) {
                d.root_space(&target_root)
            } else {
                Subspace::zero(n)
            };
            let mut products = Vec::new();
            for x in la.basis() {
                for y in lb.basis() {
                    products.push(a.bracket(x, y)?);
                }
            }
            let image = Subspace::span(n, products)?;
            out.push(containment(
                format!(
                    "[{}, {}] in {}",
                    weight_label(alpha),
                    weight_label(beta),
                    weight_label(&target_root)
                ),
                &image,
                &target,
            ));
        }
    }
    Ok(out)
}

/// How `H` sits inside the semidirect product when checking its weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemidirectEmbedding {
    /// `h -> (0, h + J)`, the copy of `H/(J n H)` inside `L/J`.
    Quotient,
    /// `h -> (h, h + J)`.
    Diagonal,
}

impl SemidirectEmbedding {
    pub fn name(self) -> &'static str {
        match self {
            SemidirectEmbedding::Quotient => "quotient",
            SemidirectEmbedding::Diagonal => "diagonal",
        }
    }
}

/// Outcome of comparing the semidirect product's weight spaces with
/// `L_lambda + L_lambda/(L_lambda n J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectWeightCheck {
    pub embedding: SemidirectEmbedding,
    pub holds: bool,
    pub mismatches: Vec<String>,
}

pub fn semidirect_weight_check(
    d: &SplitDecomposition,
    product: &SemidirectProduct,
    embedding: SemidirectEmbedding,
) -> Result<SemidirectWeightCheck> {
    let big = &product.algebra;
    let zero = zero_vector(d.algebra().dim());
    let h_hat: Vec<Vector> = d
        .h_basis()
        .iter()
        .map(|h| match embedding {
            SemidirectEmbedding::Quotient => product.pair(&zero, h),
            SemidirectEmbedding::Diagonal => product.pair(h, h),
        })
        .collect();
    let ops = weight_operators(big, &h_hat)?;
    let pieces = simultaneous_eigenspaces(&ops, big.dim())?;
    let mut mismatches = Vec::new();
    let mut found: BTreeMap<Root, usize> = BTreeMap::new();
    let mut total = 0;
    for (values, space) in &pieces {
        found.insert(Root::new(values.clone()), space.dim());
        total += space.dim();
    }
    let mut weights = vec![Root::zero(d.rank())];
    weights.extend(d.roots().iter().cloned());
    for lambda in &weights {
        let space = d.root_space(lambda);
        let in_j = space.intersect(&product.j)?.dim();
        let expected = 2 * space.dim() - in_j;
        let actual = found.remove(lambda).unwrap_or(0);
        if actual != expected {
            mismatches.push(format!(
                "weight {lambda}: dimension {actual}, expected {expected}"
            ));
        }
    }
    for (lambda, dim) in found {
        mismatches.push(format!("unexpected weight {lambda} of dimension {dim}"));
    }
    if total != big.dim() {
        mismatches.push(format!(
            "weight spaces span dimension {total} of {}",
            big.dim()
        ));
    }
    Ok(SemidirectWeightCheck {
        embedding,
        holds: mismatches.is_empty(),
        mismatches,
    })
}
