//! Exact rational vectors, matrices and subspaces.
//!
//! Everything here is over `Q` via [`num_rational::BigRational`], so every
//! identity test downstream is a zero test, never a tolerance test.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// A dense coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn neg_vector(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `p`, `-p`, `p/q` or `-p/q` exactly. Rejects zero denominators,
/// whitespace and decimal notation.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid_int = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || !valid_int(den, false) {
        return None;
    }
    let p: BigInt = num.parse().ok()?;
    let q: BigInt = den.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Scalar::new(p, q))
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|r| format_vector(self.row(r))).collect();
        write!(f, "Matrix[{}]", rows.join(", "))
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Integer entries, row by row. Panics on ragged input; test and fixture helper.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self - lambda * I`
    pub fn shift(&self, lambda: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (reduced, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, reduced.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Integer power; negative exponents need an invertible matrix.
    pub fn pow(&self, exponent: i64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let base = if exponent < 0 {
            self.inverse().ok_or(Error::Singular)?
        } else {
            self.clone()
        };
        let mut result = Matrix::identity(self.rows);
        let mut sq = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(result)
    }

    /// Coefficients `c[0..=n]` of `det(xI - M) = sum c[k] x^k` by the
    /// Faddeev-LeVerrier recurrence (exact over `Q`).
    pub fn characteristic_polynomial(&self) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            let c = coeffs[n - k + 1].clone();
            for i in 0..n {
                let v = next.get(i, i) + &c;
                next.set(i, i, v);
            }
            m = next;
            let am = self.mul(&m)?;
            coeffs[n - k] = -am.trace() / int(k as i64);
        }
        Ok(coeffs)
    }
}

/// Reduced row-echelon form and the pivot column of each nonzero row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a.get(row, col).recip();
        for c in col..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        let pivot_row: Vector = a.row(row).to_vec();
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                if !pivot_row[c].is_zero() {
                    let v = a.get(r, c) - &factor * &pivot_row[c];
                    a.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Null space `{v : m v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(n);
        v[free] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free).clone();
        }
        basis.push(v);
    }
    Subspace::from_vectors_unchecked(n, basis)
}

/// Solves `m x = b`; `None` when inconsistent. Returns one particular solution.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let mut aug = Matrix::zeros(m.rows(), m.cols() + 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols(), b[r].clone());
    }
    let (reduced, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = zero_vector(m.cols());
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = reduced.get(i, m.cols()).clone();
    }
    Ok(Some(x))
}

/// Coordinates of `v` in an ordered, linearly independent `basis`.
pub fn coordinates(basis: &[Vector], v: &[Scalar]) -> Result<Option<Vector>> {
    let m = Matrix::from_columns(v.len(), basis)?;
    solve(&m, v)
}

/// A linear subspace of `Q^n`, stored by its canonical RREF basis.
///
/// Two subspaces are equal iff their canonical bases are identical, so the
/// derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "span{{{}}} in Q^{}", rows.join(", "), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let vectors: Vec<Vector> = vectors.into_iter().collect();
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        Ok(Self::from_vectors_unchecked(ambient, vectors))
    }

    pub(crate) fn from_vectors_unchecked(ambient: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(vectors).expect("vectors share the ambient length");
        let (r, pivots) = rref(&m);
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff `v`
    /// lies in the subspace. Entries at pivot columns of the result are zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(other.basis.iter().all(|v| is_zero_vector(&self.reduce(v))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Self::from_vectors_unchecked(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned().collect(),
        ))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let columns: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        let relations = kernel(&Matrix::from_columns(self.ambient, &columns)?);
        let k = self.basis.len();
        let vectors = relations
            .basis
            .iter()
            .map(|rel| {
                let mut v = zero_vector(self.ambient);
                for (c, b) in rel[..k].iter().zip(&self.basis) {
                    axpy(&mut v, c, b);
                }
                v
            })
            .collect();
        Ok(Self::from_vectors_unchecked(self.ambient, vectors))
    }

    /// Image under a square linear map.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        self.check_ambient(m.cols())?;
        let vectors = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors_unchecked(m.rows(), vectors))
    }

    /// Indices of standard basis vectors completing this subspace to the
    /// whole space: exactly the non-pivot coordinates.
    pub fn complement_indices(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }

    /// Deterministic complement spanned by non-pivot standard basis vectors.
    pub fn complement(&self) -> Subspace {
        let vectors = self
            .complement_indices()
            .into_iter()
            .map(|i| unit_vector(self.ambient, i))
            .collect();
        Self::from_vectors_unchecked(self.ambient, vectors)
    }

    /// Basis rendered as rational strings, for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(format_scalar).collect())
            .collect()
    }
}

/// Rational roots of the characteristic polynomial with algebraic
/// multiplicities, in increasing order. Irrational eigenvalues are omitted.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<(Scalar, usize)>> {
    let poly = m.characteristic_polynomial()?;
    Ok(rational_roots(&poly))
}

/// Rational roots (with multiplicity) of `sum c[k] x^k`, increasing order.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<(Scalar, usize)> {
    let mut poly: Vec<Scalar> = coeffs.to_vec();
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    let mut found = BTreeMap::new();
    let mut zero_mult = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        found.insert(Scalar::zero(), zero_mult);
    }
    if poly.len() > 1 {
        let ints = primitive_integer_polynomial(&poly);
        let lead = ints.last().expect("nonconstant").abs();
        let constant = ints[0].abs();
        let ps = divisors(&constant);
        let qs = divisors(&lead);
        let mut candidates: Vec<Scalar> = Vec::new();
        for p in &ps {
            for q in &qs {
                let r = Scalar::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mut mult = 0;
            while poly.len() > 1 && horner(&poly, &r).is_zero() {
                poly = deflate(&poly, &r);
                mult += 1;
            }
            if mult > 0 {
                found.insert(r, mult);
            }
        }
    }
    found.into_iter().collect()
}

fn horner(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - r)`, assuming `r` is a root.
fn deflate(poly: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let n = poly.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for k in (0..n).rev() {
        carry = &poly[k + 1] + carry * r;
        out[k] = carry.clone();
    }
    out
}

fn primitive_integer_polynomial(poly: &[Scalar]) -> Vec<BigInt> {
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

/// All positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigUint> {
    let mut rest = n.magnitude().clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut take = |rest: &mut BigUint, d: BigUint| {
        let mut e = 0;
        while (&*rest % &d).is_zero() {
            *rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
    };
    take(&mut rest, BigUint::from(2u32));
    let mut d = BigUint::from(3u32);
    while &d * &d <= rest {
        take(&mut rest, d.clone());
        d += 2u32;
    }
    if rest > BigUint::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Joint eigenspace refinement: eigenspaces of `ops[0]`, then inside each piece
/// the eigenspaces of `ops[1]`, and so on. Pieces are nonzero, pairwise
/// independent and sorted by value vector; they need not span `Q^dim`.
pub fn simultaneous_eigenspaces(ops: &[Matrix], dim: usize) -> Result<Vec<(Vector, Subspace)>> {
    let mut pieces: Vec<(Vector, Subspace)> = vec![(Vec::new(), Subspace::full(dim))];
    for op in ops {
        if op.rows() != dim || op.cols() != dim {
            return Err(if op.is_square() {
                Error::DimensionMismatch {
                    expected: dim,
                    found: op.rows(),
                }
            } else {
                Error::NotSquare {
                    rows: op.rows(),
                    cols: op.cols(),
                }
            });
        }
        let eigenvalues = rational_eigenvalues(op)?;
        let eigenspaces: Vec<(Scalar, Subspace)> = eigenvalues
            .into_iter()
            .map(|(lambda, _)| {
                let space = kernel(&op.shift(&lambda));
                (lambda, space)
            })
            .collect();
        let mut next = Vec::new();
        for (values, piece) in &pieces {
            for (lambda, space) in &eigenspaces {
                let refined = piece.intersect(space)?;
                if !refined.is_zero() {
                    let mut v = values.clone();
                    v.push(lambda.clone());
                    next.push((v, refined));
                }
            }
        }
        pieces = next;
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pieces)
}

/// Approximate magnitude for diagnostics; never used in decisions.
pub fn approx(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Matrix::identity(2);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);

        let (r, p) = rref(&Matrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let z = Matrix::zeros(2, 3);
        let (r, p) = rref(&z);
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        assert!(kernel(&Matrix::zeros(3, 3)).is_full());
        let k = kernel(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, Subspace::span(2, vec![v(&[1, -1])]).unwrap());
    }

    #[test]
    fn lattice_operations() {
        let e1 = Subspace::span(2, vec![v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, vec![v(&[0, 1])]).unwrap();
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);

        let a = Subspace::span(3, vec![v(&[1, 1, 0])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), a);
        assert!(b.contains(&a).unwrap());
        assert!(!a.contains(&b).unwrap());

        let c = Subspace::zero(4);
        assert!(matches!(e1.sum(&c), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn eigenvalue_examples() {
        let d = Matrix::diagonal(&[int(2), int(-2)]);
        assert_eq!(rational_eigenvalues(&d).unwrap(), vec![(int(-2), 1), (int(2), 1)]);
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(rational_eigenvalues(&swap).unwrap(), vec![(int(-1), 1), (int(1), 1)]);
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rational_eigenvalues(&rot).unwrap().is_empty());
        let jordan = Matrix::from_rows(vec![
            vec![frac(1, 2), int(1)],
            vec![int(0), frac(1, 2)],
        ])
        .unwrap();
        assert_eq!(rational_eigenvalues(&jordan).unwrap(), vec![(frac(1, 2), 2)]);
        let nil = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
        assert_eq!(rational_eigenvalues(&nil).unwrap(), vec![(int(0), 2), (int(3), 1)]);
    }

    #[test]
    fn simultaneous_refinement() {
        let pieces = simultaneous_eigenspaces(&[Matrix::diagonal(&[int(2), int(-2), int(0)])], 3).unwrap();
        let values: Vec<Vector> = pieces.iter().map(|p| p.0.clone()).collect();
        assert_eq!(values, vec![v(&[-2]), v(&[0]), v(&[2])]);
        assert!(pieces.iter().all(|p| p.1.dim() == 1));

        let pieces = simultaneous_eigenspaces(
            &[Matrix::identity(2), Matrix::from_i64(&[&[0, 1], &[1, 0]])],
            2,
        )
        .unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].0, v(&[1, -1]));
        assert_eq!(pieces[0].1, Subspace::span(2, vec![v(&[1, -1])]).unwrap());
        assert_eq!(pieces[1].0, v(&[1, 1]));
        assert_eq!(pieces[1].1, Subspace::span(2, vec![v(&[1, 1])]).unwrap());

        let pieces = simultaneous_eigenspaces(&[], 3).unwrap();
        assert_eq!(pieces, vec![(Vec::new(), Subspace::full(3))]);
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3/6"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("-4"), Some(int(-4)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("1/-2"), None);
        assert_eq!(parse_scalar("0.5"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
    }

    #[test]
    fn inverse_and_powers() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m.pow(-2).unwrap(), inv.mul(&inv).unwrap());
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_and_coordinates() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        assert_eq!(coordinates(&basis, &v(&[2, 5, 3])).unwrap(), Some(v(&[2, 3])));
        assert_eq!(coordinates(&basis, &v(&[1, 0, 0])).unwrap(), None);
    }
}
