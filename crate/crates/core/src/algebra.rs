//! Structure tensors and the validated [`LeibnizAlgebra`] type.
//!
//! Conventions: `[e_i, e_j] = sum_k c[i][j][k] e_k`. An algebra is a *right*
//! Leibniz algebra, i.e. `[x,[y,z]] = [[x,y],z] - [[x,z],y]` for all x, y, z,
//! which makes every right multiplication `R_x: y -> [y,x]` a derivation.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector};

/// A raw structure tensor. May or may not satisfy any identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor<F: Field> {
    field: F,
    dim: usize,
    /// `dim^3` entries; `c[(i*dim + j)*dim + k]`.
    c: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for StructureTensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .nonzero_entries()
            .map(|(i, j, k, v)| format!("[{i},{j}]_{k}={}", self.field.format(v)))
            .collect();
        write!(f, "StructureTensor({}, dim {}, {:?})", self.field, self.dim, entries)
    }
}

impl<F: Field> StructureTensor<F> {
    pub fn zero(field: F, dim: usize) -> Self {
        let c = vec![field.zero(); dim * dim * dim];
        StructureTensor { field, dim, c }
    }

    /// Build from sparse entries `(i, j, k, value)`; later entries for the
    /// same position overwrite earlier ones.
    pub fn from_entries(field: F, dim: usize, entries: &[(usize, usize, usize, F::Elem)]) -> Result<Self> {
        let mut t = Self::zero(field, dim);
        for (i, j, k, v) in entries {
            t.set(*i, *j, *k, v.clone())?;
        }
        Ok(t)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F::Elem) -> Result<()> {
        let n = self.dim;
        for idx in [i, j, k] {
            if idx >= n {
                return Err(Error::InvalidParameter(format!(
                    "basis index {idx} out of range for dimension {n}"
                )));
            }
        }
        self.c[(i * n + j) * n + k] = v;
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        let n = self.dim;
        &self.c[(i * n + j) * n + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F::Elem)> + '_ {
        let n = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !self.field.is_zero(v))
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    fn bracket_raw(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let n = self.dim;
        let f = &self.field;
        let mut out = zero_vector(f, n);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                axpy(f, &mut out, &f.mul(xi, yj), self.product(i, j));
            }
        }
        out
    }

    fn first_violation(&self, right: bool) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let f = &self.field;
        let e: Vec<Vector<F>> = (0..n).map(|i| unit_vector(f, n, i)).collect();
        for i in 0..n {
            for j in 0..n {
                let xy = self.product(i, j).to_vec();
                for k in 0..n {
                    // [x,[y,z]]
                    let lhs = self.bracket_raw(&e[i], self.product(j, k));
                    // [[x,y],z]
                    let a = self.bracket_raw(&xy, &e[k]);
                    let rhs = if right {
                        // - [[x,z],y]
                        sub_vectors(f, &a, &self.bracket_raw(self.product(i, k), &e[j]))
                    } else {
                        // + [y,[x,z]]
                        let b = self.bracket_raw(&e[j], self.product(i, k));
                        a.iter().zip(&b).map(|(u, v)| f.add(u, v)).collect()
                    };
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis triple (lexicographic) violating the right identity.
    pub fn right_leibniz_violation(&self) -> Option<(usize, usize, usize)> {
        self.first_violation(true)
    }

    /// First basis triple violating `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
    pub fn left_leibniz_violation(&self) -> Option<(usize, usize, usize)> {
        self.first_violation(false)
    }

    pub fn check_right_leibniz(&self) -> bool {
        self.right_leibniz_violation().is_none()
    }

    pub fn check_left_leibniz(&self) -> bool {
        self.left_leibniz_violation().is_none()
    }
}

pub fn check_right_leibniz<F: Field>(c: &StructureTensor<F>) -> bool {
    c.check_right_leibniz()
}

pub fn check_left_leibniz<F: Field>(c: &StructureTensor<F>) -> bool {
    c.check_left_leibniz()
}

/// A finite-dimensional right Leibniz algebra. The identity is checked on
/// construction and cannot be bypassed.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra<F: Field> {
    name: String,
    tensor: StructureTensor<F>,
    /// `(i, j)` with `[e_i, e_j] != 0`.
    support: Vec<(usize, usize)>,
}

impl<F: Field> fmt::Debug for LeibnizAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeibnizAlgebra")
            .field("name", &self.name)
            .field("tensor", &self.tensor)
            .finish()
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    pub fn new(name: impl Into<String>, tensor: StructureTensor<F>) -> Result<Self> {
        if let Some((i, j, k)) = tensor.right_leibniz_violation() {
            return Err(Error::NotLeibniz(i, j, k));
        }
        let n = tensor.dim;
        let support = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !is_zero_vector(&tensor.field, tensor.product(i, j)))
            .collect();
        Ok(LeibnizAlgebra {
            name: name.into(),
            tensor,
            support,
        })
    }

    /// Convenience constructor from sparse `(i, j, k, value)` entries.
    pub fn from_entries(
        name: impl Into<String>,
        field: F,
        dim: usize,
        entries: &[(usize, usize, usize, F::Elem)],
    ) -> Result<Self> {
        Self::new(name, StructureTensor::from_entries(field, dim, entries)?)
    }

    pub fn abelian(field: F, dim: usize) -> Self {
        Self::new(format!("abelian({dim})"), StructureTensor::zero(field, dim)).expect("zero tensor")
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
    pub fn field(&self) -> &F {
        &self.tensor.field
    }
    pub fn dim(&self) -> usize {
        self.tensor.dim
    }
    pub fn tensor(&self) -> &StructureTensor<F> {
        &self.tensor
    }
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        self.tensor.product(i, j)
    }
    pub fn unit(&self, i: usize) -> Vector<F> {
        unit_vector(self.field(), self.dim(), i)
    }
    pub fn zero_vector(&self) -> Vector<F> {
        zero_vector(self.field(), self.dim())
    }
    pub fn zero_subspace(&self) -> Subspace<F> {
        Subspace::zero(self.field().clone(), self.dim())
    }
    pub fn full_subspace(&self) -> Subspace<F> {
        Subspace::full(self.field().clone(), self.dim())
    }
    pub fn span(&self, vs: &[Vector<F>]) -> Result<Subspace<F>> {
        Subspace::from_vectors(self.field().clone(), self.dim(), vs)
    }

    fn check_vector(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace<F>) -> Result<()> {
        if s.field() != self.field() {
            return Err(Error::MixedFields(s.field().to_string(), self.field().to_string()));
        }
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vector<F>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn bracket_unchecked(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let f = self.field();
        let mut out = zero_vector(f, self.dim());
        for &(i, j) in &self.support {
            let (xi, yj) = (&x[i], &y[j]);
            if f.is_zero(xi) || f.is_zero(yj) {
                continue;
            }
            axpy(f, &mut out, &f.mul(xi, yj), self.tensor.product(i, j));
        }
        out
    }

    pub fn square(&self, x: &[F::Elem]) -> Result<Vector<F>> {
        self.bracket(x, x)
    }

    /// True iff `x^2 = 0` for every x: all `e_i^2` vanish and the structure
    /// constants are antisymmetric.
    pub fn is_lie(&self) -> bool {
        let f = self.field();
        let n = self.dim();
        (0..n).all(|i| {
            is_zero_vector(f, self.basis_product(i, i))
                && (i + 1..n).all(|j| {
                    self.basis_product(i, j)
                        .iter()
                        .zip(self.basis_product(j, i))
                        .all(|(a, b)| f.is_zero(&f.add(a, b)))
                })
        })
    }

    pub fn check_left_leibniz(&self) -> bool {
        self.tensor.check_left_leibniz()
    }

    /// Satisfies both the right and the left identity.
    pub fn is_symmetric(&self) -> bool {
        self.check_left_leibniz()
    }

    pub fn is_abelian(&self) -> bool {
        self.support.is_empty()
    }

    /// Matrix of `R_x: y -> [y, x]` acting on row vectors: row `i` is `[e_i, x]`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Result<Matrix<F>> {
        self.check_vector(x)?;
        let rows: Vec<Vector<F>> = (0..self.dim())
            .map(|i| self.bracket_unchecked(&self.unit(i), x))
            .collect();
        Matrix::from_rows(self.field().clone(), self.dim(), &rows)
    }

    /// `[U, V]`: span of the brackets of basis vectors.
    pub fn product_space(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        Ok(self.product_space_unchecked(u, v))
    }

    pub(crate) fn product_space_unchecked(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut out = self.zero_subspace();
        for a in u.basis() {
            for b in v.basis() {
                out.insert_unchecked(self.bracket_unchecked(a, b));
                if out.is_full() {
                    return out;
                }
            }
        }
        out
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        self.check_subspace(s)?;
        Ok(self.is_subalgebra_unchecked(s))
    }

    pub(crate) fn is_subalgebra_unchecked(&self, s: &Subspace<F>) -> bool {
        s.basis()
            .all(|a| s.basis().all(|b| s.contains_unchecked(&self.bracket_unchecked(a, b))))
    }

    /// Smallest subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vector<F>]) -> Result<Subspace<F>> {
        let s = self.span(gens)?;
        Ok(self.closure_of(s))
    }

    /// Smallest subalgebra containing the subspace `s`.
    pub fn closure_of(&self, mut s: Subspace<F>) -> Subspace<F> {
        // Every pair among `gens[..done]` has been bracketed; `gens` always
        // spans `s`.
        let mut gens = s.basis_vectors();
        let mut done = 0;
        while done < gens.len() && !s.is_full() {
            let end = gens.len();
            for i in 0..end {
                for j in 0..end {
                    if i < done && j < done {
                        continue;
                    }
                    let v = self.bracket_unchecked(&gens[i], &gens[j]);
                    if s.insert_unchecked(v.clone()) {
                        gens.push(v);
                        if s.is_full() {
                            return s;
                        }
                    }
                }
            }
            done = end;
        }
        s
    }

    /// `[U,L] + [L,U] <= U`.
    pub fn is_ideal(&self, u: &Subspace<F>) -> Result<bool> {
        self.check_subspace(u)?;
        Ok(self.is_ideal_unchecked(u))
    }

    pub(crate) fn is_ideal_unchecked(&self, u: &Subspace<F>) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.unit(i);
            u.basis().all(|a| {
                u.contains_unchecked(&self.bracket_unchecked(a, &e))
                    && u.contains_unchecked(&self.bracket_unchecked(&e, a))
            })
        })
    }

    /// Re-express the algebra in the basis `f_i = sum_j P[i][j] e_j`.
    pub fn change_of_basis(&self, p: &Matrix<F>) -> Result<Self> {
        if p.rows() != self.dim() || p.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.rows().max(p.cols()),
            });
        }
        let p_inv = p.inverse()?;
        let n = self.dim();
        let mut t = StructureTensor::zero(self.field().clone(), n);
        for i in 0..n {
            for j in 0..n {
                let w = self.bracket_unchecked(p.row(i), p.row(j));
                let coords = p_inv.left_apply(&w)?;
                for (k, v) in coords.into_iter().enumerate() {
                    t.set(i, j, k, v)?;
                }
            }
        }
        // Isomorphic to a Leibniz algebra, so validation cannot fail.
        Self::new(self.name.clone(), t)
    }

    /// The subalgebra `s` as an algebra in its own right, in the coordinates
    /// of its RREF basis.
    pub fn subalgebra_as_algebra(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_subalgebra(s)? {
            return Err(Error::InvalidParameter("subspace is not a subalgebra".into()));
        }
        let d = s.dim();
        let mut t = StructureTensor::zero(self.field().clone(), d);
        for a in 0..d {
            for b in 0..d {
                let w = self.bracket_unchecked(s.basis_row(a), s.basis_row(b));
                for (k, v) in s.coordinates(&w).into_iter().enumerate() {
                    t.set(a, b, k, v)?;
                }
            }
        }
        Self::new(format!("{}|sub{}", self.name, d), t)
    }

    /// `L / K` for an ideal `K`.
    pub fn quotient(&self, k: &Subspace<F>) -> Result<Quotient<F>> {
        if !self.is_ideal(k)? {
            return Err(Error::NotAnIdeal);
        }
        let complement: Vec<usize> = (0..self.dim()).filter(|c| !k.pivots().contains(c)).collect();
        let m = complement.len();
        let mut t = StructureTensor::zero(self.field().clone(), m);
        let proj = |v: Vector<F>| -> Vector<F> {
            let mut v = v;
            k.reduce(&mut v);
            complement.iter().map(|&c| v[c].clone()).collect()
        };
        for (s, &cs) in complement.iter().enumerate() {
            for (u, &cu) in complement.iter().enumerate() {
                let w = proj(self.basis_product(cs, cu).to_vec());
                for (r, v) in w.into_iter().enumerate() {
                    t.set(s, u, r, v)?;
                }
            }
        }
        let algebra = Self::new(format!("{}/{}", self.name, k.dim()), t)?;
        Ok(Quotient {
            algebra,
            kernel: k.clone(),
            complement,
        })
    }
}

/// A quotient algebra `L/K` with its projection.
///
/// The quotient basis is the image of the standard basis vectors `e_c` for the
/// non-pivot columns `c` of `K`'s RREF, which span a complement of `K`.
#[derive(Debug, Clone)]
pub struct Quotient<F: Field> {
    pub algebra: LeibnizAlgebra<F>,
    pub kernel: Subspace<F>,
    pub complement: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn project(&self, x: &[F::Elem]) -> Vector<F> {
        let mut v = x.to_vec();
        self.kernel.reduce(&mut v);
        self.complement.iter().map(|&c| v[c].clone()).collect()
    }

    /// The representative supported on the complement columns.
    pub fn lift(&self, y: &[F::Elem]) -> Vector<F> {
        let f = self.algebra.field();
        let mut v = zero_vector(f, self.kernel.ambient_dim());
        for (&c, a) in self.complement.iter().zip(y) {
            v[c] = a.clone();
        }
        v
    }

    pub fn project_subspace(&self, u: &Subspace<F>) -> Subspace<F> {
        let images: Vec<Vector<F>> = u.basis().map(|r| self.project(r)).collect();
        Subspace::from_vectors(self.algebra.field().clone(), self.algebra.dim(), &images)
            .expect("projected vectors have quotient dimension")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    /// x, y, z with [x,y] = z = -[y,x].
    fn heisenberg(field: PrimeField) -> LeibnizAlgebra<PrimeField> {
        let m1 = field.from_i64(-1);
        LeibnizAlgebra::from_entries("heis", field, 3, &[(0, 1, 2, 1), (1, 0, 2, m1)]).unwrap()
    }

    #[test]
    fn invalid_tensor_is_rejected_with_triple() {
        // e0^2 = e1, [e1,e0] = e1, [e0,e1] = e0
        let t = StructureTensor::from_entries(f3(), 2, &[(0, 0, 1, 1), (1, 0, 1, 1), (0, 1, 0, 1)]).unwrap();
        let err = LeibnizAlgebra::new("bad", t.clone()).unwrap_err();
        assert!(matches!(err, Error::NotLeibniz(..)));
        assert!(!t.check_right_leibniz());
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        assert!(StructureTensor::from_entries(f3(), 2, &[(0, 2, 1, 1)]).is_err());
    }

    #[test]
    fn heisenberg_basics() {
        let h = heisenberg(f3());
        assert!(h.is_lie());
        assert!(h.is_symmetric());
        let l = h.full_subspace();
        let d = h.product_space(&l, &l).unwrap();
        assert_eq!(d, h.span(&[h.unit(2)]).unwrap());
        assert!(h.is_ideal(&h.span(&[h.unit(2)]).unwrap()).unwrap());
        assert!(!h.is_ideal(&h.span(&[h.unit(0)]).unwrap()).unwrap());
        let closure = h.subalgebra_closure(&[h.unit(0), h.unit(1)]).unwrap();
        assert!(closure.is_full());
    }

    #[test]
    fn bracket_checks_lengths() {
        let h = heisenberg(f3());
        assert!(h.bracket(&[1, 0], &[0, 1, 0]).is_err());
        assert_eq!(h.bracket(&[1, 0, 0], &[0, 1, 0]).unwrap(), vec![0, 0, 1]);
        assert_eq!(h.bracket(&[0, 1, 0], &[1, 0, 0]).unwrap(), vec![0, 0, 2]);
    }

    #[test]
    fn identity_change_of_basis_is_identity() {
        let h = heisenberg(f3());
        let p = Matrix::identity(f3(), 3);
        assert_eq!(h.change_of_basis(&p).unwrap().tensor(), h.tensor());
        let singular = Matrix::zeros(f3(), 3, 3);
        assert_eq!(h.change_of_basis(&singular).unwrap_err(), Error::Singular);
    }

    #[test]
    fn quotient_requires_ideal() {
        let h = heisenberg(f3());
        let fx = h.span(&[h.unit(0)]).unwrap();
        assert_eq!(h.quotient(&fx).unwrap_err(), Error::NotAnIdeal);
        let fz = h.span(&[h.unit(2)]).unwrap();
        let q = h.quotient(&fz).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_abelian());
    }
}
