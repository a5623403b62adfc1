//! The Hom-Leibniz algebra value type and the algebra-level constructions
//! that do not need a root decomposition (plus the Lie-annihilator, which does).

use num_traits::{One, Zero};

use crate::diagnostics::JSplit;
use crate::error::{Error, Result};
use crate::linalg::{
    add_vectors, axpy, format_vector, is_zero_vector, kernel, neg_vector, sub_vectors,
    unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector,
};
use crate::roots::{Root, SplitDecomposition};

/// A finite-dimensional algebra `(L, [.,.], phi)` given by structure constants.
///
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`. The twist matrix acts on column
/// vectors: column `j` of `phi` holds the coordinates of `phi(e_j)`.
/// Nothing about the identities is assumed at construction; use the
/// `check_*` functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    /// `bracket[i * dim + j]` = coordinates of `[e_i, e_j]`.
    bracket: Vec<Vector>,
    phi: Matrix,
    phi_inv: Option<Matrix>,
}

impl HomAlgebra {
    pub fn new(name: impl Into<String>, labels: Vec<String>, bracket: Vec<Vector>, phi: Matrix) -> Result<Self> {
        let dim = labels.len();
        if bracket.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: bracket.len(),
            });
        }
        if let Some(bad) = bracket.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        if phi.rows() != dim || phi.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: phi.rows().max(phi.cols()),
            });
        }
        let phi_inv = phi.inverse();
        Ok(HomAlgebra {
            name: name.into(),
            dim,
            labels,
            bracket,
            phi,
            phi_inv,
        })
    }

    /// Builds from sparse entries `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`.
    pub fn from_entries(
        name: impl Into<String>,
        labels: &[&str],
        entries: &[(usize, usize, usize, Scalar)],
        phi: Option<Matrix>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut bracket = vec![zero_vector(dim); dim * dim];
        for (i, j, k, c) in entries {
            for &idx in &[*i, *j, *k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange {
                        field: "bracket".into(),
                        index: idx,
                        bound: dim,
                    });
                }
            }
            bracket[i * dim + j][*k] += c;
        }
        HomAlgebra::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            bracket,
            phi.unwrap_or_else(|| Matrix::identity(dim)),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn phi_inverse(&self) -> Option<&Matrix> {
        self.phi_inv.as_ref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i * self.dim + j]
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `sum_{i,j} x_i y_j [e_i, e_j]`
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        Ok(out)
    }

    pub fn apply_phi(&self, v: &[Scalar]) -> Result<Vector> {
        self.phi.mul_vec(v)
    }

    pub fn apply_phi_inv(&self, v: &[Scalar]) -> Result<Vector> {
        self.phi_inv.as_ref().ok_or(Error::Singular)?.mul_vec(v)
    }

    /// Matrix of `x -> [x, v]`.
    pub fn right_multiplication(&self, v: &[Scalar]) -> Result<Matrix> {
        let cols = (0..self.dim)
            .map(|k| self.bracket(&unit_vector(self.dim, k), v))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x -> [v, x]`.
    pub fn left_multiplication(&self, v: &[Scalar]) -> Result<Matrix> {
        let cols = (0..self.dim)
            .map(|k| self.bracket(v, &unit_vector(self.dim, k)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// True when every structure constant vanishes.
    pub fn product_is_zero(&self) -> bool {
        self.bracket.iter().all(|v| is_zero_vector(v))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    /// Human-readable linear combination of basis labels.
    pub fn describe(&self, v: &[Scalar]) -> String {
        let mut terms = Vec::new();
        for (c, label) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                terms.push(label.clone());
            } else if *c == -Scalar::one() {
                terms.push(format!("-{label}"));
            } else {
                terms.push(format!("{c}*{label}"));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    pub fn describe_subspace(&self, s: &Subspace) -> String {
        let parts: Vec<String> = s.basis().iter().map(|v| self.describe(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

/// Evidence that an identity or containment fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Basis indices whose evaluation leaves the nonzero `residual`.
    Basis { indices: Vec<usize>, residual: Vector },
    /// A nonzero vector that violates the property (e.g. escapes a subspace).
    Vector { vector: Vector },
    /// Roots exhibiting a combinatorial failure.
    Roots { roots: Vec<Root> },
}

/// Outcome of one property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

impl IdentityReport {
    pub fn pass(property: impl Into<String>) -> Self {
        IdentityReport {
            property: property.into(),
            holds: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(property: impl Into<String>, witness: Witness, detail: impl Into<String>) -> Self {
        IdentityReport {
            property: property.into(),
            holds: false,
            witness: Some(witness),
            detail: Some(detail.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

fn basis_failure(property: &str, indices: Vec<usize>, residual: Vector, detail: String) -> IdentityReport {
    IdentityReport::fail(property, Witness::Basis { indices, residual }, detail)
}

/// Residual of the Hom-Leibniz identity on basis elements `x, y, z`:
/// `[[y,z],phi(x)] - [[y,x],phi(z)] - [phi(y),[z,x]]`.
pub fn hom_leibniz_residual(a: &HomAlgebra, x: usize, y: usize, z: usize) -> Result<Vector> {
    let phi_x = a.phi.column(x);
    let phi_y = a.phi.column(y);
    let phi_z = a.phi.column(z);
    let t1 = a.bracket(a.basis_bracket(y, z), &phi_x)?;
    let t2 = a.bracket(a.basis_bracket(y, x), &phi_z)?;
    let t3 = a.bracket(&phi_y, a.basis_bracket(z, x))?;
    Ok(sub_vectors(&sub_vectors(&t1, &t2), &t3))
}

/// The Hom-Leibniz identity on all basis triples (complete by trilinearity).
/// A witness lists the indices as `[x, y, z]`.
pub fn check_hom_leibniz(a: &HomAlgebra) -> IdentityReport {
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = hom_leibniz_residual(a, x, y, z).expect("basis vectors have the right length");
                if !is_zero_vector(&r) {
                    let l = a.labels();
                    return basis_failure(
                        "hom-leibniz",
                        vec![x, y, z],
                        r,
                        format!(
                            "[[{y},{z}],phi({x})] != [[{y},{x}],phi({z})] + [phi({y}),[{z},{x}]]",
                            x = l[x],
                            y = l[y],
                            z = l[z]
                        ),
                    );
                }
            }
        }
    }
    IdentityReport::pass("hom-leibniz")
}

/// Regularity: `phi` invertible and multiplicative on basis pairs.
pub fn check_regular(a: &HomAlgebra) -> IdentityReport {
    if a.phi_inv.is_none() {
        let k = kernel(&a.phi);
        let v = k.basis()[0].clone();
        return IdentityReport::fail("regular", Witness::Vector { vector: v }, "phi is not invertible");
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.phi.mul_vec(a.basis_bracket(i, j)).expect("square phi");
            let rhs = a
                .bracket(&a.phi.column(i), &a.phi.column(j))
                .expect("basis vectors have the right length");
            let r = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&r) {
                let l = a.labels();
                return basis_failure(
                    "regular",
                    vec![i, j],
                    r,
                    format!("phi([{a},{b}]) != [phi({a}),phi({b})]", a = l[i], b = l[j]),
                );
            }
        }
    }
    IdentityReport::pass("regular")
}

/// Antisymmetry on basis pairs, then the cyclic Hom-Jacobi identity on triples.
pub fn check_hom_lie(a: &HomAlgebra) -> IdentityReport {
    let n = a.dim();
    let l = a.labels();
    for i in 0..n {
        for j in i..n {
            let r = add_vectors(a.basis_bracket(i, j), a.basis_bracket(j, i));
            if !is_zero_vector(&r) {
                return basis_failure(
                    "hom-lie",
                    vec![i, j],
                    r,
                    format!("[{b}, {a}] != -[{a}, {b}]", a = l[i], b = l[j]),
                );
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t1 = a.bracket(a.basis_bracket(x, y), &a.phi.column(z)).expect("len");
                let t2 = a.bracket(a.basis_bracket(y, z), &a.phi.column(x)).expect("len");
                let t3 = a.bracket(a.basis_bracket(z, x), &a.phi.column(y)).expect("len");
                let r = add_vectors(&add_vectors(&t1, &t2), &t3);
                if !is_zero_vector(&r) {
                    return basis_failure(
                        "hom-lie",
                        vec![x, y, z],
                        r,
                        format!("Hom-Jacobi fails on ({}, {}, {})", l[x], l[y], l[z]),
                    );
                }
            }
        }
    }
    IdentityReport::pass("hom-lie")
}

/// Least subspace containing `s` that is closed under left and right
/// multiplication by every basis element, `phi` and (when it exists) `phi^-1`.
pub fn ideal_closure(a: &HomAlgebra, s: &Subspace) -> Result<Subspace> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    let n = a.dim();
    let mut current = s.clone();
    loop {
        let mut generators: Vec<Vector> = current.basis().to_vec();
        for b in current.basis() {
            for j in 0..n {
                let e = unit_vector(n, j);
                generators.push(a.bracket(b, &e)?);
                generators.push(a.bracket(&e, b)?);
            }
            generators.push(a.apply_phi(b)?);
            if let Some(inv) = &a.phi_inv {
                generators.push(inv.mul_vec(b)?);
            }
        }
        let next = Subspace::span(n, generators)?;
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

/// True when `s` is already an ideal.
pub fn is_ideal(a: &HomAlgebra, s: &Subspace) -> Result<bool> {
    Ok(ideal_closure(a, s)? == *s)
}

/// The ideal generated by all squares `[x, x]`, seeded through polarization.
/// Fails with `JNotLeftCentral` if `[L, J] != 0`.
pub fn compute_j(a: &HomAlgebra) -> Result<Subspace> {
    let n = a.dim();
    let mut seeds = Vec::new();
    for i in 0..n {
        seeds.push(a.basis_bracket(i, i).clone());
        for j in i + 1..n {
            seeds.push(add_vectors(a.basis_bracket(i, j), a.basis_bracket(j, i)));
        }
    }
    let j = ideal_closure(a, &Subspace::span(n, seeds)?)?;
    for i in 0..n {
        for v in j.basis() {
            if !is_zero_vector(&a.bracket(&unit_vector(n, i), v)?) {
                return Err(Error::JNotLeftCentral {
                    left: a.labels()[i].clone(),
                });
            }
        }
    }
    Ok(j)
}

/// `{x : [x, b] = [b, x] = 0 for every b in probes}`.
pub fn annihilator_of(a: &HomAlgebra, probes: &[Vector]) -> Result<Subspace> {
    let n = a.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for b in probes {
        rows.extend(a.right_multiplication(b)?.to_rows());
        rows.extend(a.left_multiplication(b)?.to_rows());
    }
    if rows.is_empty() {
        return Ok(Subspace::full(n));
    }
    Ok(kernel(&Matrix::from_rows(rows)?))
}

/// `Z(L) = {x : [x, L] + [L, x] = 0}`.
pub fn annihilator(a: &HomAlgebra) -> Subspace {
    let probes: Vec<Vector> = (0..a.dim()).map(|i| unit_vector(a.dim(), i)).collect();
    annihilator_of(a, &probes).expect("basis probes have the algebra's dimension")
}

/// Elements killed on both sides by `H` and every root space outside `J`.
pub fn lie_annihilator(d: &SplitDecomposition, js: &JSplit) -> Result<Subspace> {
    let mut probes: Vec<Vector> = d.h().basis().to_vec();
    for alpha in &js.lambda_not_j {
        probes.extend(d.root_space(alpha).basis().iter().cloned());
    }
    annihilator_of(d.algebra(), &probes)
}

/// `[L, L]`
pub fn derived(a: &HomAlgebra) -> Subspace {
    Subspace::from_vectors_unchecked(a.dim(), a.bracket.clone())
}

/// The Hom-Lie semidirect product `L x| L/J` together with the data needed
/// to embed `L` and project onto `L/J`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub algebra: HomAlgebra,
    pub j: Subspace,
    /// Coordinates of `L` whose unit vectors represent the basis of `L/J`.
    pub quotient_indices: Vec<usize>,
    base_dim: usize,
}

impl SemidirectProduct {
    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    /// Coordinates of `x + J` in the chosen basis of `L/J`.
    pub fn project(&self, x: &[Scalar]) -> Vector {
        let r = self.j.reduce(x);
        self.quotient_indices.iter().map(|&c| r[c].clone()).collect()
    }

    /// `(a, x + J)` as a vector of the product.
    pub fn pair(&self, a: &[Scalar], x: &[Scalar]) -> Vector {
        let mut v = a.to_vec();
        v.extend(self.project(x));
        v
    }
}

/// `[(a, x+J), (b, y+J)] = ([a,y] - [b,x], [x,y] + J)` with twist
/// `phi(a, x+J) = (phi(a), phi(x)+J)`. Requires a Hom-Leibniz input so that
/// `[L, J] = 0` makes the first component well defined.
pub fn semidirect_product(a: &HomAlgebra) -> Result<SemidirectProduct> {
    let report = check_hom_leibniz(a);
    if !report.holds {
        return Err(Error::NotHomLeibniz(report.detail.unwrap_or_default()));
    }
    let j = compute_j(a)?;
    let n = a.dim();
    let quotient_indices = j.complement_indices();
    let q = quotient_indices.len();
    let total = n + q;
    let proto = SemidirectProduct {
        algebra: a.clone(),
        j: j.clone(),
        quotient_indices: quotient_indices.clone(),
        base_dim: n,
    };
    let embed_first = |v: &Vector| {
        let mut out = v.clone();
        out.extend(zero_vector(q));
        out
    };
    let embed_second = |v: &Vector| {
        let mut out = zero_vector(n);
        out.extend(proto.project(v));
        out
    };

    let mut bracket = vec![zero_vector(total); total * total];
    for i in 0..n {
        for (cq, &c) in quotient_indices.iter().enumerate() {
            let forward = embed_first(a.basis_bracket(i, c));
            bracket[i * total + n + cq] = forward.clone();
            bracket[(n + cq) * total + i] = neg_vector(&forward);
        }
    }
    for (cq, &c) in quotient_indices.iter().enumerate() {
        for (dq, &d) in quotient_indices.iter().enumerate() {
            bracket[(n + cq) * total + n + dq] = embed_second(a.basis_bracket(c, d));
        }
    }

    let mut phi = Matrix::zeros(total, total);
    for r in 0..n {
        for c in 0..n {
            phi.set(r, c, a.phi().get(r, c).clone());
        }
    }
    for (cq, &c) in quotient_indices.iter().enumerate() {
        let image = proto.project(&a.phi().column(c));
        for (r, x) in image.into_iter().enumerate() {
            phi.set(n + r, n + cq, x);
        }
    }

    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(quotient_indices.iter().map(|&c| format!("{}+J", a.labels()[c])));
    let algebra = HomAlgebra::new(format!("{}-semidirect", a.name()), labels, bracket, phi)?;
    Ok(SemidirectProduct {
        algebra,
        j,
        quotient_indices,
        base_dim: n,
    })
}

/// Yau twist: bracket `psi o [.,.]` and twist `psi o phi`.
///
/// `psi` must be an invertible bracket automorphism commuting with `phi`;
/// the result is re-checked for the Hom-Leibniz identity and regularity.
pub fn yau_twist(a: &HomAlgebra, psi: &Matrix) -> Result<HomAlgebra> {
    let n = a.dim();
    if psi.rows() != n || psi.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: psi.rows(),
        });
    }
    if psi.inverse().is_none() {
        return Err(Error::NotAutomorphism("psi is not invertible".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = psi.mul_vec(a.basis_bracket(i, j))?;
            let rhs = a.bracket(&psi.column(i), &psi.column(j))?;
            if lhs != rhs {
                let l = a.labels();
                return Err(Error::NotAutomorphism(format!(
                    "psi([{a},{b}]) = {} but [psi({a}),psi({b})] = {}",
                    format_vector(&lhs),
                    format_vector(&rhs),
                    a = l[i],
                    b = l[j]
                )));
            }
        }
    }
    if psi.mul(a.phi())? != a.phi().mul(psi)? {
        return Err(Error::NotAutomorphism("psi does not commute with phi".into()));
    }
    let bracket = a
        .bracket
        .iter()
        .map(|v| psi.mul_vec(v))
        .collect::<Result<Vec<_>>>()?;
    let phi = psi.mul(a.phi())?;
    let twisted = HomAlgebra::new(a.name(), a.labels().to_vec(), bracket, phi)?;
    if check_hom_leibniz(a).holds {
        let hl = check_hom_leibniz(&twisted);
        if !hl.holds {
            return Err(Error::Internal(format!(
                "Yau twist lost the Hom-Leibniz identity: {}",
                hl.detail.unwrap_or_default()
            )));
        }
    }
    if check_regular(a).holds {
        let reg = check_regular(&twisted);
        if !reg.holds {
            return Err(Error::Internal(format!(
                "Yau twist lost regularity: {}",
                reg.detail.unwrap_or_default()
            )));
        }
    }
    Ok(twisted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{frac, int};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn bracket_examples() {
        let sl2 = corpus::sl2();
        assert_eq!(sl2.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 2, 0]));
        assert!(is_zero_vector(&sl2.bracket(&v(&[0, 0, 0]), &v(&[3, 1, 4])).unwrap()));
        let lb2 = corpus::lb2();
        assert_eq!(lb2.bracket(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert!(matches!(sl2.bracket(&v(&[1]), &v(&[1, 0, 0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn untwisted_bracket_with_scaling_twist_fails_hom_leibniz() {
        let sl2 = corpus::sl2();
        let phi = Matrix::diagonal(&[int(1), int(2), int(1)]);
        let bad = HomAlgebra::new("bad", sl2.labels().to_vec(), sl2.bracket.clone(), phi).unwrap();
        let report = check_hom_leibniz(&bad);
        assert!(!report.holds);
        let Some(Witness::Basis { indices, residual }) = report.witness else {
            panic!("expected a basis witness");
        };
        assert!(!is_zero_vector(&residual));
        let recomputed = hom_leibniz_residual(&bad, indices[0], indices[1], indices[2]).unwrap();
        assert_eq!(recomputed, residual);
    }

    #[test]
    fn regularity_examples() {
        assert!(check_regular(&corpus::sl2c()).holds);
        assert!(check_regular(&corpus::lb2()).holds);
        let sl2 = corpus::sl2();
        let singular = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let bad = HomAlgebra::new("s", sl2.labels().to_vec(), sl2.bracket.clone(), singular).unwrap();
        let r = check_regular(&bad);
        assert!(!r.holds);
        assert!(matches!(r.witness, Some(Witness::Vector { .. })));
    }

    #[test]
    fn hom_lie_examples() {
        assert!(check_hom_lie(&corpus::sl2()).holds);
        let r = check_hom_lie(&corpus::lb2());
        assert!(!r.holds);
        let Some(Witness::Basis { indices, residual }) = r.witness else { panic!() };
        assert_eq!(indices, vec![1, 1]);
        assert_eq!(residual, v(&[2, 0]));
    }

    #[test]
    fn closure_examples() {
        let sl2 = corpus::sl2();
        assert!(ideal_closure(&sl2, &Subspace::zero(3)).unwrap().is_zero());
        let e = Subspace::span(3, vec![v(&[0, 1, 0])]).unwrap();
        assert!(ideal_closure(&sl2, &e).unwrap().is_full());

        let sl2v1 = corpus::sl2v1();
        let m_plus = Subspace::span(5, vec![v(&[0, 0, 0, 1, 0])]).unwrap();
        let closure = ideal_closure(&sl2v1, &m_plus).unwrap();
        assert_eq!(closure, Subspace::span(5, vec![v(&[0, 0, 0, 1, 0]), v(&[0, 0, 0, 0, 1])]).unwrap());
    }

    #[test]
    fn j_examples() {
        assert!(compute_j(&corpus::sl2()).unwrap().is_zero());
        assert_eq!(compute_j(&corpus::lb2()).unwrap(), Subspace::span(2, vec![v(&[1, 0])]).unwrap());
        let j = compute_j(&corpus::sl2v1()).unwrap();
        assert_eq!(j, Subspace::span(5, vec![v(&[0, 0, 0, 1, 0]), v(&[0, 0, 0, 0, 1])]).unwrap());
    }

    #[test]
    fn j_rejects_right_central_squares() {
        // [e1, e1] = e2 and [e1, e2] = e2: squares are not left-central.
        let a = HomAlgebra::from_entries(
            "bad",
            &["e1", "e2"],
            &[(0, 0, 1, int(1)), (0, 1, 1, int(1))],
            None,
        )
        .unwrap();
        assert!(matches!(compute_j(&a), Err(Error::JNotLeftCentral { .. })));
    }

    #[test]
    fn annihilator_and_derived() {
        let a0 = corpus::a0();
        assert!(annihilator(&a0).is_full());
        assert!(derived(&a0).is_zero());
        assert!(annihilator(&corpus::sl2()).is_zero());
        assert!(annihilator(&corpus::sl2v1()).is_zero());
        assert!(derived(&corpus::sl2()).is_full());
        assert!(derived(&corpus::sl2v1()).is_full());
    }

    #[test]
    fn semidirect_examples() {
        let s = semidirect_product(&corpus::a0()).unwrap();
        assert_eq!(s.algebra.dim(), 4);
        assert!(s.algebra.product_is_zero());
        let s = semidirect_product(&corpus::sl2()).unwrap();
        assert_eq!(s.algebra.dim(), 6);
        assert!(check_hom_lie(&s.algebra).holds);
        let s = semidirect_product(&corpus::sl2v1()).unwrap();
        assert_eq!(s.algebra.dim(), 8);
        assert!(check_hom_lie(&s.algebra).holds);
    }

    #[test]
    fn yau_twist_examples() {
        let sl2 = corpus::sl2();
        assert_eq!(yau_twist(&sl2, &Matrix::identity(3)).unwrap(), sl2);
        let psi = Matrix::diagonal(&[int(1), int(2), frac(1, 2)]);
        let twisted = yau_twist(&sl2, &psi).unwrap();
        assert_eq!(twisted.bracket, corpus::sl2c().bracket);
        assert_eq!(twisted.phi, corpus::sl2c().phi);
        assert!(check_hom_leibniz(&twisted).holds);
        assert!(check_regular(&twisted).holds);
        let back = yau_twist(&twisted, &psi.inverse().unwrap()).unwrap();
        assert_eq!(back, sl2);

        let bad = Matrix::diagonal(&[int(1), int(2), int(1)]);
        assert!(matches!(yau_twist(&sl2, &bad), Err(Error::NotAutomorphism(_))));
    }
}
