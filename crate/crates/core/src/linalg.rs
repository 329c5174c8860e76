//! Dense exact linear algebra: matrices, reduced row echelon form, and
//! canonical subspaces.
//!
//! Vectors are row vectors throughout. A [`Subspace`] stores its basis in
//! reduced row echelon form, so two subspaces are equal exactly when their
//! stored matrices are equal.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::{par, Budget};

/// Coordinates of an element of `F^n`.
pub type Vector<F> = Vec<<F as Field>::Elem>;

pub fn zero_vector<F: Field>(field: &F, n: usize) -> Vector<F> {
    vec![field.zero(); n]
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|a| field.is_zero(a))
}

/// `y += a * x`
pub fn axpy<F: Field>(field: &F, y: &mut [F::Elem], a: &F::Elem, x: &[F::Elem]) {
    if field.is_zero(a) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !field.is_zero(xi) {
            *yi = field.mul_add(yi, a, xi);
        }
    }
}

pub fn scale<F: Field>(field: &F, a: &F::Elem, x: &[F::Elem]) -> Vector<F> {
    x.iter().map(|xi| field.mul(a, xi)).collect()
}

pub fn add_vectors<F: Field>(field: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    x.iter().zip(y).map(|(a, b)| field.add(a, b)).collect()
}

pub fn sub_vectors<F: Field>(field: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    x.iter().zip(y).map(|(a, b)| field.sub(a, b)).collect()
}

/// The `index`-th vector of `F^n` in base-`|F|` little-endian order.
pub fn vector_from_index<F: FiniteField>(field: &F, n: usize, mut index: u64) -> Vector<F> {
    let q = field.size();
    (0..n)
        .map(|_| {
            let e = field.element(index % q);
            index /= q;
            e
        })
        .collect()
}

/// `|F|^n`, or `None` on overflow.
pub fn element_count<F: FiniteField>(field: &F, n: usize) -> Option<u64> {
    field.size().checked_pow(u32::try_from(n).ok()?)
}

pub(crate) fn check_elements<F: FiniteField>(field: &F, n: usize, what: &'static str, budget: &Budget) -> Result<u64> {
    match element_count(field, n) {
        Some(c) if c <= budget.max_elements => Ok(c),
        other => Err(Error::BudgetExceeded {
            what,
            needed: other.unwrap_or(u64::MAX),
            budget: budget.max_elements,
        }),
    }
}

/// One representative of every 1-dimensional subspace of `F^n`: the nonzero
/// vectors whose first nonzero coordinate is 1, in index order.
pub fn projective_points<F: FiniteField>(field: &F, n: usize, budget: &Budget) -> Result<Vec<Vector<F>>> {
    let total = check_elements(field, n, "projective point scan", budget)?;
    let one = field.one();
    Ok((1..total)
        .map(|i| vector_from_index(field, n, i))
        .filter(|v| v.iter().find(|a| !field.is_zero(a)) == Some(&one))
        .collect())
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|a| self.field.format(a)).collect())
            .collect();
        f.debug_struct("Matrix")
            .field("field", &self.field.to_string())
            .field("rows", &rows)
            .finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Build from row vectors of a common length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: &[Vector<F>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Parse from integer literals (reduced into the field).
    pub fn from_i64(field: F, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<Vector<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, &vecs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_vectors(&self) -> Vec<Vector<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            let row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                axpy(&self.field, row, self.get(r, k), other.row(k));
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn left_apply(&self, v: &[F::Elem]) -> Result<Vector<F>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = zero_vector(&self.field, self.cols);
        for (k, a) in v.iter().enumerate() {
            axpy(&self.field, &mut out, a, self.row(k));
        }
        Ok(out)
    }

    /// Matrix times column vector: `self * v`.
    pub fn apply(&self, v: &[F::Elem]) -> Result<Vector<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| self.field.mul_add(&acc, a, b))
            })
            .collect())
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns. Zero rows
    /// end up at the bottom and are truncated.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !f.is_zero(self.get(r, c))) else {
                continue;
            };
            if pr != lead {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(self.get(lead, c)).expect("pivot is nonzero");
            for k in 0..cols {
                let v = f.mul(&inv, self.get(lead, k));
                self.set(lead, k, v);
            }
            let pivot_row = self.row(lead).to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let coef = self.get(r, c).clone();
                if f.is_zero(&coef) {
                    continue;
                }
                let neg = f.neg(&coef);
                axpy(&f, &mut self.data[r * cols..(r + 1) * cols], &neg, &pivot_row);
            }
            pivots.push(c);
            lead += 1;
        }
        self.rows = lead;
        self.data.truncate(lead * cols);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector<F>> {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        nullspace_of_rref(&self.field, self.cols, r.data(), &pivots)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(f.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }
}

fn nullspace_of_rref<F: Field>(field: &F, cols: usize, rref_data: &[F::Elem], pivots: &[usize]) -> Vec<Vector<F>> {
    let mut out = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    for free in 0..cols {
        if pivot_iter.peek() == Some(&&free) {
            pivot_iter.next();
            continue;
        }
        let mut x = zero_vector(field, cols);
        x[free] = field.one();
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = field.neg(&rref_data[i * cols + free]);
        }
        out.push(x);
    }
    out
}

/// Canonical reduced row echelon form and rank.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize) {
    let mut r = m.clone();
    let rank = r.rref_in_place().len();
    (r, rank)
}

/// A solution of `A x = b`: one particular solution plus a kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<F: Field> {
    pub particular: Vector<F>,
    pub kernel: Vec<Vector<F>>,
}

/// Solve `a * x = b`, or `None` when the system is inconsistent.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F::Elem]) -> Result<Option<Solution<F>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let f = a.field().clone();
    let n = a.cols();
    let mut aug = Matrix::zeros(f.clone(), a.rows(), n + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, br.clone());
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = zero_vector(&f, n);
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug.get(i, n).clone();
    }
    let coeff: Vec<F::Elem> = (0..aug.rows()).flat_map(|r| aug.row(r)[..n].to_vec()).collect();
    let kernel = nullspace_of_rref(&f, n, &coeff, &pivots);
    Ok(Some(Solution { particular, kernel }))
}

/// A subspace of `F^n` held in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    pivots: Vec<usize>,
    /// `pivots.len() * ambient` entries, row-major.
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Ordering key: dimension, then the row-major RREF entries.
impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.data.cmp(&other.data))
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            pivots: Vec::new(),
            data: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let m = Matrix::identity(field, ambient);
        Subspace {
            field: m.field.clone(),
            ambient,
            pivots: (0..ambient).collect(),
            data: m.data,
        }
    }

    pub fn from_vectors(field: F, ambient: usize, vs: &[Vector<F>]) -> Result<Self> {
        let mut m = Matrix::from_rows(field, ambient, vs)?;
        let pivots = m.rref_in_place();
        Ok(Subspace {
            field: m.field,
            ambient,
            pivots,
            data: m.data,
        })
    }

    /// Row space of an arbitrary matrix.
    pub fn row_space(m: &Matrix<F>) -> Self {
        let mut r = m.clone();
        let ambient = r.cols();
        let pivots = r.rref_in_place();
        Subspace {
            field: r.field,
            ambient,
            pivots,
            data: r.data,
        }
    }

    pub(crate) fn from_rref_parts(field: F, ambient: usize, pivots: Vec<usize>, data: Vec<F::Elem>) -> Self {
        debug_assert_eq!(data.len(), pivots.len() * ambient);
        Subspace {
            field,
            ambient,
            pivots,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    /// The RREF entries, row-major.
    pub fn rref_data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn basis_row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.ambient..(i + 1) * self.ambient]
    }
    pub fn basis(&self) -> impl Iterator<Item = &[F::Elem]> + '_ {
        (0..self.dim()).map(move |i| self.basis_row(i))
    }
    pub fn basis_vectors(&self) -> Vec<Vector<F>> {
        self.basis().map(|r| r.to_vec()).collect()
    }
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix {
            field: self.field.clone(),
            rows: self.dim(),
            cols: self.ambient,
            data: self.data.clone(),
        }
    }

    /// `dim:[row;row]` with entries in the field's textual form.
    pub fn label(&self) -> String {
        let rows: Vec<String> = self
            .basis()
            .map(|r| r.iter().map(|a| self.field.format(a)).collect::<Vec<_>>().join(","))
            .collect();
        format!("{}:[{}]", self.dim(), rows.join(";"))
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field.to_string(), other.field.to_string()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Subtract off the pivot components; the result is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        for (i, &pc) in self.pivots.iter().enumerate() {
            if self.field.is_zero(&v[pc]) {
                continue;
            }
            let coef = self.field.neg(&v[pc]);
            let row = &self.data[i * self.ambient..(i + 1) * self.ambient];
            axpy(&self.field, v, &coef, row);
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&self.field, &w)
    }

    /// Coordinates of `v` in the RREF basis. Only meaningful when `v` lies in
    /// the subspace: they are just the entries at the pivot columns.
    pub fn coordinates(&self, v: &[F::Elem]) -> Vector<F> {
        self.pivots.iter().map(|&c| v[c].clone()).collect()
    }

    /// Adjoin `v`, keeping the basis canonical. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.insert_unchecked(v.to_vec()))
    }

    pub(crate) fn insert_unchecked(&mut self, mut v: Vector<F>) -> bool {
        let f = self.field.clone();
        let n = self.ambient;
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|a| !f.is_zero(a)) else {
            return false;
        };
        let inv = f.inv(&v[c]).expect("nonzero");
        for a in v.iter_mut() {
            *a = f.mul(&inv, a);
        }
        for i in 0..self.dim() {
            let coef = self.data[i * n + c].clone();
            if !f.is_zero(&coef) {
                let neg = f.neg(&coef);
                axpy(&f, &mut self.data[i * n..(i + 1) * n], &neg, &v);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(pos, c);
        self.data.splice(pos * n..pos * n, v);
        true
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Self) -> bool {
        self.dim() <= other.dim() && self.basis().all(|r| other.contains_unchecked(r))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Self) -> Self {
        let (mut big, small) = if self.dim() >= other.dim() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for r in small.basis() {
            if big.is_full() {
                break;
            }
            big.insert_unchecked(r.to_vec());
        }
        big
    }

    /// `{x : <u, x> = 0 for all u}` under the standard bilinear form; has
    /// dimension `n - dim` and `ann(ann(U)) = U`.
    pub fn annihilator(&self) -> Self {
        let kernel = nullspace_of_rref(&self.field, self.ambient, &self.data, &self.pivots);
        Self::from_vectors(self.field.clone(), self.ambient, &kernel).expect("lengths agree")
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.intersection_unchecked(other))
    }

    pub(crate) fn intersection_unchecked(&self, other: &Self) -> Self {
        if self.leq_unchecked(other) {
            return self.clone();
        }
        if other.leq_unchecked(self) {
            return other.clone();
        }
        self.annihilator().sum_unchecked(&other.annihilator()).annihilator()
    }
}

pub fn subspace_from_vectors<F: Field>(field: F, n: usize, vs: &[Vector<F>]) -> Result<Subspace<F>> {
    Subspace::from_vectors(field, n, vs)
}

pub fn subspace_sum<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
    u.sum(v)
}

pub fn subspace_intersection<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
    u.intersection(v)
}

pub fn subspace_leq<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<bool> {
    u.leq(v)
}

pub fn subspace_contains<F: Field>(v: &Subspace<F>, x: &[F::Elem]) -> Result<bool> {
    v.contains(x)
}

/// Every subspace of `F^n`, each exactly once, ordered by dimension and then
/// by RREF entries.
///
/// RREF shapes are generated directly: choose pivot columns, then fill the
/// free entries (right of each pivot, outside the pivot columns) with every
/// field element.
pub fn enumerate_subspaces<F: FiniteField>(field: F, n: usize, budget: &Budget) -> Result<Vec<Subspace<F>>> {
    check_elements(&field, n, "subspace enumeration", budget)?;
    let patterns: Vec<Vec<usize>> = (0..=n).flat_map(|k| (0..n).combinations(k)).collect();
    let chunks = par::map_slice(&patterns, |pivots| subspaces_with_pivots(field, n, pivots));
    let mut all: Vec<Subspace<F>> = chunks.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

fn subspaces_with_pivots<F: FiniteField>(field: F, n: usize, pivots: &[usize]) -> Vec<Subspace<F>> {
    let k = pivots.len();
    let mut template = vec![field.zero(); k * n];
    let mut free = Vec::new();
    for (i, &pc) in pivots.iter().enumerate() {
        template[i * n + pc] = field.one();
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                free.push(i * n + c);
            }
        }
    }
    let q = field.size();
    let total = q.pow(free.len() as u32);
    (0..total)
        .map(|mut idx| {
            let mut data = template.clone();
            for &pos in &free {
                data[pos] = field.element(idx % q);
                idx /= q;
            }
            Subspace::from_rref_parts(field, n, pivots.to_vec(), data)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn sub(p: u32, n: usize, vs: &[&[i64]]) -> Subspace<PrimeField> {
        let field = f(p);
        let vecs: Vec<Vec<u32>> = vs
            .iter()
            .map(|v| v.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Subspace::from_vectors(field, n, &vecs).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(f(3), 2);
        let (r, rank) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(rank, 2);

        let m = Matrix::from_i64(f(3), &[&[1, 1], &[2, 2]]).unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64(f(3), &[&[1, 1]]).unwrap());

        let q = Matrix::from_i64(Rationals, &[&[2, 4], &[1, 3]]).unwrap();
        let (r, rank) = rref(&q);
        assert_eq!(rank, 2);
        assert_eq!(r, Matrix::identity(Rationals, 2));
    }

    #[test]
    fn subspace_from_vectors_examples() {
        assert!(sub(2, 3, &[]).is_zero());
        let s = sub(2, 3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.rref_data(), &[1, 1, 0, 0, 0, 1]);
        let s = sub(5, 2, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis_row(0), &[1, 2]);
        let err = Subspace::from_vectors(f(5), 2, &[vec![1, 2, 3]]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn sum_examples() {
        let u = sub(3, 3, &[&[1, 2, 0]]);
        let zero = Subspace::zero(f(3), 3);
        assert_eq!(u.sum(&zero).unwrap(), u);
        let a = sub(3, 3, &[&[1, 0, 0]]);
        let b = sub(3, 3, &[&[0, 1, 0]]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(u.sum(&u).unwrap(), u);
        let other = Subspace::zero(f(3), 2);
        assert!(u.sum(&other).is_err());
        let other_field = Subspace::zero(f(5), 3);
        assert!(matches!(u.sum(&other_field), Err(Error::MixedFields(..))));
    }

    #[test]
    fn intersection_examples() {
        let u = sub(3, 3, &[&[1, 2, 0], &[0, 1, 1]]);
        let full = Subspace::full(f(3), 3);
        assert_eq!(u.intersection(&full).unwrap(), u);
        let a = sub(2, 2, &[&[1, 0]]);
        let b = sub(2, 2, &[&[0, 1]]);
        assert!(a.intersection(&b).unwrap().is_zero());
        let x = sub(3, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        let y = sub(3, 3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(x.intersection(&y).unwrap(), sub(3, 3, &[&[0, 1, 0]]));
    }

    #[test]
    fn leq_examples() {
        let u = sub(2, 2, &[&[1, 1]]);
        let zero = Subspace::zero(f(2), 2);
        assert!(zero.leq(&u).unwrap());
        assert!(u.leq(&u).unwrap());
        let a = sub(2, 2, &[&[1, 0]]);
        let b = sub(2, 2, &[&[0, 1]]);
        assert!(!a.leq(&b).unwrap());
        assert!(!b.contains(&[1, 0]).unwrap());
        assert!(b.contains(&[0, 1]).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        let b = Budget::default();
        assert_eq!(enumerate_subspaces(f(2), 2, &b).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(f(3), 2, &b).unwrap().len(), 6);
        assert_eq!(enumerate_subspaces(f(2), 3, &b).unwrap().len(), 16);
        let tight = Budget {
            max_elements: 8,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_subspaces(f(3), 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_subspaces(f(3), 3, &Budget::default()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.first().unwrap().is_zero());
        assert!(all.last().unwrap().is_full());
    }

    #[test]
    fn solve_examples() {
        let field = f(7);
        let id = Matrix::identity(field, 3);
        let sol = solve_linear(&id, &[3, 4, 5]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![3, 4, 5]);
        assert!(sol.kernel.is_empty());

        let z = Matrix::zeros(field, 2, 2);
        assert!(solve_linear(&z, &[1, 0]).unwrap().is_none());

        let a = Matrix::from_i64(f(2), &[&[1, 1]]).unwrap();
        let sol = solve_linear(&a, &[0]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![0, 0]);
        assert_eq!(sol.kernel, vec![vec![1, 1]]);

        assert!(solve_linear(&a, &[0, 1]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(Rationals, &[&[2, 1], &[7, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Rationals, 2));
        let s = Matrix::from_i64(f(3), &[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn annihilator_is_involutive() {
        let u = sub(5, 4, &[&[1, 2, 0, 3], &[0, 1, 4, 4]]);
        let a = u.annihilator();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.annihilator(), u);
    }
}
