//! Structural invariants: series, Leibniz kernel, square-zero subalgebra,
//! centre, ideals, supersolvability and shape detection.

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::error::Result;
use crate::field::{Field, FieldDescriptor, FiniteField};
use crate::lattice;
use crate::linalg::{element_count, projective_points, scale, sub_vectors, Matrix, Subspace, Vector};
use crate::{par, Budget};

/// `L^1 = L, L^{k+1} = [L^k, L]`, up to and including the first repeated term.
pub fn lower_central_series<F: Field>(l: &LeibnizAlgebra<F>) -> Vec<Subspace<F>> {
    let full = l.full_subspace();
    stabilize(full.clone(), |s| l.product_space_unchecked(s, &full))
}

/// `L^(0) = L, L^(k+1) = [L^(k), L^(k)]`, up to the first repeated term.
pub fn derived_series<F: Field>(l: &LeibnizAlgebra<F>) -> Vec<Subspace<F>> {
    stabilize(l.full_subspace(), |s| l.product_space_unchecked(s, s))
}

fn stabilize<F: Field>(start: Subspace<F>, step: impl Fn(&Subspace<F>) -> Subspace<F>) -> Vec<Subspace<F>> {
    let mut series = vec![start];
    loop {
        let last = series.last().expect("non-empty");
        let next = step(last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

/// Class `c` with `L^{c+1} = 0 != L^c`; `None` if not nilpotent. The zero
/// algebra has class 0.
pub fn nilpotency_class<F: Field>(l: &LeibnizAlgebra<F>) -> Option<usize> {
    let s = lower_central_series(l);
    s.last().expect("non-empty").is_zero().then(|| s.len() - 1)
}

pub fn is_nilpotent<F: Field>(l: &LeibnizAlgebra<F>) -> bool {
    nilpotency_class(l).is_some()
}

/// Length `d` with `L^(d) = 0 != L^(d-1)`; `None` if not solvable.
pub fn derived_length<F: Field>(l: &LeibnizAlgebra<F>) -> Option<usize> {
    let s = derived_series(l);
    s.last().expect("non-empty").is_zero().then(|| s.len() - 1)
}

pub fn is_solvable<F: Field>(l: &LeibnizAlgebra<F>) -> bool {
    derived_length(l).is_some()
}

/// `L^2 = [L, L]`.
pub fn derived_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let full = l.full_subspace();
    l.product_space_unchecked(&full, &full)
}

/// `I = span{x^2}`, spanned by the `e_i^2` and the `[e_i,e_j] + [e_j,e_i]`.
pub fn leibniz_kernel<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let f = l.field();
    let n = l.dim();
    let mut out = l.zero_subspace();
    for i in 0..n {
        out.insert_unchecked(l.basis_product(i, i).to_vec());
        for j in i + 1..n {
            let s = l
                .basis_product(i, j)
                .iter()
                .zip(l.basis_product(j, i))
                .map(|(a, b)| f.add(a, b))
                .collect();
            out.insert_unchecked(s);
        }
    }
    out
}

/// `Z(L) = {x : [x, L] = [L, x] = 0}`.
pub fn center<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let f = l.field().clone();
    let n = l.dim();
    // One row per (i, k) for [x, e_i] and one for [e_i, x]; columns index x.
    let mut m = Matrix::zeros(f.clone(), 2 * n * n, n);
    for a in 0..n {
        for i in 0..n {
            for k in 0..n {
                m.set(i * n + k, a, l.basis_product(a, i)[k].clone());
                m.set(n * n + i * n + k, a, l.basis_product(i, a)[k].clone());
            }
        }
    }
    Subspace::from_vectors(f, n, &m.nullspace()).expect("kernel vectors have length n")
}

pub fn is_ideal<F: Field>(l: &LeibnizAlgebra<F>, u: &Subspace<F>) -> Result<bool> {
    l.is_ideal(u)
}

/// The largest ideal of `L` inside `W`, as the descending fixpoint
/// `W_{k+1} = {x in W_k : [x,L] + [L,x] <= W_k}`.
pub fn largest_ideal_in<F: Field>(l: &LeibnizAlgebra<F>, w: &Subspace<F>) -> Result<Subspace<F>> {
    l.full_subspace().check_compatible(w)?;
    let f = l.field().clone();
    let n = l.dim();
    let mut cur = w.clone();
    loop {
        if cur.is_zero() || l.is_ideal_unchecked(&cur) {
            return Ok(cur);
        }
        let basis = cur.basis_vectors();
        let ann = cur.annihilator();
        // x = sum t_j w_j qualifies iff every annihilator functional kills
        // [x, e_i] and [e_i, x].
        let mut rows = Vec::new();
        for i in 0..n {
            let e = l.unit(i);
            for phi in ann.basis() {
                let dot = |v: &Vector<F>| v.iter().zip(phi).fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b));
                rows.push(basis.iter().map(|b| dot(&l.bracket_unchecked(b, &e))).collect());
                rows.push(basis.iter().map(|b| dot(&l.bracket_unchecked(&e, b))).collect());
            }
        }
        let m = Matrix::from_rows(f.clone(), basis.len(), &rows)?;
        let next: Vec<Vector<F>> = m
            .nullspace()
            .iter()
            .map(|t| {
                let mut x = l.zero_vector();
                for (tj, b) in t.iter().zip(&basis) {
                    crate::linalg::axpy(&f, &mut x, tj, b);
                }
                x
            })
            .collect();
        let next = Subspace::from_vectors(f.clone(), n, &next)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// True iff there is a complete flag of ideals. A 1-dimensional ideal is
/// found by scanning lines, then the quotient is tested recursively.
pub fn is_supersolvable<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<bool> {
    if l.dim() <= 1 {
        return Ok(true);
    }
    let points = projective_points(l.field(), l.dim(), budget)?;
    let hit = par::find_first(0..points.len(), |i| {
        let line = l.span(&points[i..=i]).expect("same length");
        l.is_ideal_unchecked(&line).then_some(line)
    });
    match hit {
        Some(line) => is_supersolvable(&l.quotient(&line)?.algebra, budget),
        None => Ok(false),
    }
}

/// The subalgebra `J` generated by square-zero elements.
#[derive(Debug, Clone)]
pub struct SquareZero<F: Field> {
    pub j: Subspace<F>,
    /// Linear span of the square-zero set (before closure).
    pub span: Subspace<F>,
    /// Number of square-zero elements, zero included. `None` when built from
    /// witnesses.
    pub count: Option<u64>,
    /// Whether the square-zero set is itself a subspace.
    pub set_is_subspace: Option<bool>,
    /// Set when built from a witness list: `j` is only a lower bound.
    pub lower_bound: bool,
    /// Normalized representatives of the square-zero lines.
    pub points: Vec<Vector<F>>,
}

/// Exhaustive scan of `F^n` for square-zero elements, then closure.
pub fn square_zero_subalgebra<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<SquareZero<F>> {
    let f = l.field();
    let points = projective_points(f, l.dim(), budget)?;
    let flags = par::map_slice(&points, |x| {
        crate::linalg::is_zero_vector(f, &l.bracket_unchecked(x, x))
    });
    let points: Vec<Vector<F>> = points
        .into_iter()
        .zip(flags)
        .filter_map(|(x, z)| z.then_some(x))
        .collect();
    let mut span = l.zero_subspace();
    for x in &points {
        span.insert_unchecked(x.clone());
        if span.is_full() {
            break;
        }
    }
    let q = f.size();
    let count = 1 + (q - 1) * points.len() as u64;
    let set_is_subspace = element_count(f, span.dim()) == Some(count);
    Ok(SquareZero {
        j: l.closure_of(span.clone()),
        span,
        count: Some(count),
        set_is_subspace: Some(set_is_subspace),
        lower_bound: false,
        points,
    })
}

/// Closure of explicitly supplied square-zero elements; works over any field
/// but only bounds `J` from below.
pub fn square_zero_from_witnesses<F: Field>(l: &LeibnizAlgebra<F>, witnesses: &[Vector<F>]) -> Result<SquareZero<F>> {
    for w in witnesses {
        if !crate::linalg::is_zero_vector(l.field(), &l.square(w)?) {
            return Err(crate::Error::InvalidParameter("witness does not square to zero".into()));
        }
    }
    let span = l.span(witnesses)?;
    Ok(SquareZero {
        j: l.closure_of(span.clone()),
        span,
        count: None,
        set_is_subspace: None,
        lower_bound: true,
        points: witnesses.to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    Abelian,
    AlmostAbelianLie,
    AlmostAbelianNonlie,
    Extraspecial,
    Other,
}

impl ShapeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ShapeClass::Abelian => "abelian",
            ShapeClass::AlmostAbelianLie => "almost_abelian_lie",
            ShapeClass::AlmostAbelianNonlie => "almost_abelian_nonlie",
            ShapeClass::Extraspecial => "extraspecial",
            ShapeClass::Other => "other",
        }
    }

    pub fn is_abelian_or_almost_abelian(&self) -> bool {
        matches!(
            self,
            ShapeClass::Abelian | ShapeClass::AlmostAbelianLie | ShapeClass::AlmostAbelianNonlie
        )
    }

    pub fn is_almost_abelian(&self) -> bool {
        matches!(self, ShapeClass::AlmostAbelianLie | ShapeClass::AlmostAbelianNonlie)
    }
}

/// `L = A + Fy` with `[a, y] = a` on the abelian ideal `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostAbelianWitness<F: Field> {
    pub a: Subspace<F>,
    pub y: Vector<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape<F: Field> {
    pub class: ShapeClass,
    pub almost_abelian: Option<AlmostAbelianWitness<F>>,
}

/// Tag the algebra as abelian, almost abelian (Lie or non-Lie),
/// extraspecial, or other.
///
/// Almost abelian: `A = L^2` must be an abelian ideal of codimension 1, `R_v`
/// must act on `A` as `c * id` with `c != 0` for the first basis vector `v`
/// outside `A`, and with `y = v / c` the left action `[y, a]` must be `-a`
/// (Lie) or `0` (non-Lie) throughout. Extraspecial: class at most 2 with
/// `Z(L) = L^2` one-dimensional.
pub fn classify_shape<F: Field>(l: &LeibnizAlgebra<F>) -> Shape<F> {
    let shape = |class, almost_abelian| Shape { class, almost_abelian };
    let l2 = derived_algebra(l);
    if l2.is_zero() {
        return shape(ShapeClass::Abelian, None);
    }
    if let Some((class, w)) = detect_almost_abelian(l, &l2) {
        return shape(class, Some(w));
    }
    if l2.dim() == 1 && matches!(nilpotency_class(l), Some(c) if c <= 2) && center(l) == l2 {
        return shape(ShapeClass::Extraspecial, None);
    }
    shape(ShapeClass::Other, None)
}

fn detect_almost_abelian<F: Field>(
    l: &LeibnizAlgebra<F>,
    a: &Subspace<F>,
) -> Option<(ShapeClass, AlmostAbelianWitness<F>)> {
    let f = l.field();
    let n = l.dim();
    if a.dim() + 1 != n || !l.product_space_unchecked(a, a).is_zero() {
        return None;
    }
    let v = (0..n).map(|i| l.unit(i)).find(|e| !a.contains_unchecked(e))?;
    let mut c: Option<F::Elem> = None;
    for (row, &pc) in a.basis().zip(a.pivots()) {
        let w = l.bracket_unchecked(row, &v);
        let ci = w[pc].clone();
        if w != scale(f, &ci, row) || c.as_ref().is_some_and(|c| *c != ci) {
            return None;
        }
        c = Some(ci);
    }
    let cinv = f.inv(&c?)?;
    let y = scale(f, &cinv, &v);
    let left: Vec<Vector<F>> = a.basis().map(|row| l.bracket_unchecked(&y, row)).collect();
    let class = if left
        .iter()
        .zip(a.basis())
        .all(|(w, row)| w.iter().zip(row).all(|(x, r)| f.is_zero(&f.add(x, r))))
    {
        ShapeClass::AlmostAbelianLie
    } else if left.iter().all(|w| crate::linalg::is_zero_vector(f, w)) {
        ShapeClass::AlmostAbelianNonlie
    } else {
        return None;
    };
    Some((class, AlmostAbelianWitness { a: a.clone(), y }))
}

/// `L = E + Z` with `Z` central, `E` extraspecial, and the square-zero set an
/// abelian ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraspecialSumWitness<F: Field> {
    pub e: Subspace<F>,
    pub z: Subspace<F>,
}

/// Decompose `L = E + Z` when `L` is nilpotent of class 2 with `dim L^2 = 1`:
/// `Z` complements `L^2` in the centre and `E` contains `L^2` and complements
/// the centre. The decomposition is then checked directly.
pub fn detect_extraspecial_sum<F: FiniteField>(
    l: &LeibnizAlgebra<F>,
    budget: &Budget,
) -> Result<Option<ExtraspecialSumWitness<F>>> {
    let l2 = derived_algebra(l);
    if l2.dim() != 1 || nilpotency_class(l) != Some(2) {
        return Ok(None);
    }
    let zl = center(l);
    if !l2.leq_unchecked(&zl) {
        return Ok(None);
    }
    let mut acc = l2.clone();
    let mut z = l.zero_subspace();
    for b in zl.basis_vectors() {
        if acc.insert_unchecked(b.clone()) {
            z.insert_unchecked(b);
        }
    }
    let mut acc = zl.clone();
    let mut e = l2.clone();
    for i in 0..l.dim() {
        if acc.insert_unchecked(l.unit(i)) {
            e.insert_unchecked(l.unit(i));
        }
    }
    let e_alg = l.subalgebra_as_algebra(&e)?;
    if classify_shape(&e_alg).class != ShapeClass::Extraspecial || !l.is_ideal_unchecked(&e) {
        return Ok(None);
    }
    let sz = square_zero_subalgebra(l, budget)?;
    let j_ok = sz.set_is_subspace == Some(true)
        && l.product_space_unchecked(&sz.j, &sz.j).is_zero()
        && l.is_ideal_unchecked(&sz.j);
    Ok(j_ok.then_some(ExtraspecialSumWitness { e, z }))
}

/// `L = B + Fy + Fy^2` with `B` an abelian ideal, `[b,y] = b = -[y,b]` and
/// `Z(L) = Fy^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIvWitness<F: Field> {
    pub b: Subspace<F>,
    pub y: Vector<F>,
}

/// Detector for the `B + Fy + Fy^2` shape. `A = L^2` must have codimension 1
/// and contain the 1-dimensional centre. For the first basis vector `v`
/// outside `A` the nonzero eigenvalue `c` of `R_v` on `A` is found by
/// scanning the field; `y = v / c` and `B` is the 1-eigenspace of `R_y` on
/// `A`.
pub fn detect_symmetric_iv<F: FiniteField>(l: &LeibnizAlgebra<F>) -> Option<SymmetricIvWitness<F>> {
    let f = *l.field();
    let n = l.dim();
    if n < 3 {
        return None;
    }
    let zl = center(l);
    let a = derived_algebra(l);
    if zl.dim() != 1 || a.dim() + 1 != n || !zl.leq_unchecked(&a) {
        return None;
    }
    let v = (0..n).map(|i| l.unit(i)).find(|e| !a.contains_unchecked(e))?;
    let abasis = a.basis_vectors();
    (1..f.size()).find_map(|ci| {
        let c = f.element(ci);
        let y = scale(&f, &f.inv(&c)?, &v);
        let rows: Vec<Vector<F>> = abasis
            .iter()
            .map(|ai| sub_vectors(&f, &l.bracket_unchecked(ai, &y), ai))
            .collect();
        let m = Matrix::from_rows(f, n, &rows).ok()?.transpose();
        let combos: Vec<Vector<F>> = m
            .nullspace()
            .iter()
            .map(|t| {
                let mut x = l.zero_vector();
                for (tj, b) in t.iter().zip(&abasis) {
                    crate::linalg::axpy(&f, &mut x, tj, b);
                }
                x
            })
            .collect();
        let b = l.span(&combos).ok()?;
        let y2 = l.bracket_unchecked(&y, &y);
        let fy2 = l.span(&[y2]).ok()?;
        let ok = b.dim() + 1 == a.dim()
            && fy2 == zl
            && b.sum_unchecked(&fy2) == a
            && l.product_space_unchecked(&b, &b).is_zero()
            && b.basis().all(|r| {
                let w = l.bracket_unchecked(&y, r);
                w.iter().zip(r).all(|(x, s)| f.is_zero(&f.add(x, s)))
            });
        ok.then(|| SymmetricIvWitness { b, y })
    })
}

/// First normalized `x` with `<x> = L`, if any.
pub fn cyclic_generator<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Option<Vector<F>>> {
    let n = l.dim();
    // L / L^2 is spanned by the image of a generator.
    if n == 0 || derived_algebra(l).dim() + 1 < n {
        return Ok(None);
    }
    let points = projective_points(l.field(), n, budget)?;
    Ok(par::find_first(0..points.len(), |i| {
        let s = l.span(&points[i..=i]).expect("same length");
        l.closure_of(s).is_full().then(|| points[i].clone())
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicForm {
    /// `x^{n+1} = 0`.
    Nilpotent,
    /// `x^{n+1} = c x^n`, `c != 0`; rescaling `x` makes `c = 1`.
    Solvable,
    Other,
}

/// Read off the multiplication table in the power basis `x, x^2, ..., x^n`
/// (`x^{i+1} = [x^i, x]`) and compare it with the two cyclic forms.
pub fn cyclic_form<F: Field>(l: &LeibnizAlgebra<F>, x: &[F::Elem]) -> CyclicForm {
    let f = l.field();
    let n = l.dim();
    let mut powers = vec![x.to_vec()];
    for _ in 0..n {
        let next = l.bracket_unchecked(powers.last().expect("non-empty"), x);
        powers.push(next);
    }
    let basis = &powers[..n];
    let Ok(m) = Matrix::from_rows(f.clone(), n, basis) else {
        return CyclicForm::Other;
    };
    if m.rank() != n {
        return CyclicForm::Other;
    }
    let others_vanish =
        (0..n).all(|i| (1..n).all(|j| crate::linalg::is_zero_vector(f, &l.bracket_unchecked(&basis[i], &basis[j]))));
    if !others_vanish {
        return CyclicForm::Other;
    }
    let Ok(inv) = m.inverse() else {
        return CyclicForm::Other;
    };
    let coords = inv.left_apply(&powers[n]).expect("length n");
    if coords.iter().all(|c| f.is_zero(c)) {
        CyclicForm::Nilpotent
    } else if coords[..n - 1].iter().all(|c| f.is_zero(c)) {
        CyclicForm::Solvable
    } else {
        CyclicForm::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicExtensionKind {
    /// `x^{k+1} = x^k` with `k >= 2`, `[a, x] = a`, `[x, a] = 0`.
    NonLie,
    /// `x^{k+1} = 0`, `[a, x] = a`, `[x, a] = -a`, `A != 0`.
    Sqrt,
}

/// `L = A + <x>` with `A` abelian and `<x>` cyclic with basis `x, ..., x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicExtensionWitness<F: Field> {
    pub x: Vector<F>,
    pub k: usize,
    pub a: Subspace<F>,
}

/// Search for a decomposition `L = A + <x>` of the given kind, where all
/// products other than those listed on [`CyclicExtensionKind`] and the power
/// relations `[x^i, x] = x^{i+1}` vanish.
///
/// For each candidate line `Fx` the powers of `x` are computed and the
/// defining relation is checked (rescaling `x` in the non-Lie case). `A` is
/// then taken from the solution space `K` of the linear conditions on
/// `[a, x^i]` and `[x^i, a]`, which must be abelian and together with `<x>`
/// span `L`.
pub fn detect_cyclic_extension<F: FiniteField>(
    l: &LeibnizAlgebra<F>,
    kind: CyclicExtensionKind,
    budget: &Budget,
) -> Result<Option<CyclicExtensionWitness<F>>> {
    if l.dim() == 0 {
        return Ok(None);
    }
    let f = l.field();
    let points = projective_points(f, l.dim(), budget)?;
    Ok(par::find_first(0..points.len(), |i| match kind {
        CyclicExtensionKind::NonLie => cyclic_extension_at(l, &points[i], kind),
        // [a, x] = a fixes the scale of x, and nilpotent powers cannot, so
        // every nonzero multiple of the point is tried.
        CyclicExtensionKind::Sqrt => (1..f.size()).find_map(|c| {
            let x = scale(f, &f.element(c), &points[i]);
            cyclic_extension_at(l, &x, kind)
        }),
    }))
}

fn powers_of<F: Field>(l: &LeibnizAlgebra<F>, x: &[F::Elem]) -> (Vec<Vector<F>>, Vector<F>) {
    let mut span = l.zero_subspace();
    let mut powers = Vec::new();
    let mut p = x.to_vec();
    while span.insert_unchecked(p.clone()) {
        powers.push(p.clone());
        p = l.bracket_unchecked(&p, x);
    }
    (powers, p)
}

fn cyclic_extension_at<F: FiniteField>(
    l: &LeibnizAlgebra<F>,
    x0: &[F::Elem],
    kind: CyclicExtensionKind,
) -> Option<CyclicExtensionWitness<F>> {
    let f = l.field();
    let n = l.dim();
    let (powers, next) = powers_of(l, x0);
    let k = powers.len();
    let x = match kind {
        CyclicExtensionKind::NonLie => {
            let last = &powers[k - 1];
            let pc = last.iter().position(|a| !f.is_zero(a))?;
            let c = f.mul(&next[pc], &f.inv(&last[pc])?);
            if k < 2 || f.is_zero(&c) || next != scale(f, &c, last) {
                return None;
            }
            scale(f, &f.inv(&c)?, x0)
        }
        CyclicExtensionKind::Sqrt => {
            if !crate::linalg::is_zero_vector(f, &next) {
                return None;
            }
            x0.to_vec()
        }
    };
    let (powers, _) = powers_of(l, &x);
    // Row v collects every condition evaluated at e_v; K is the left kernel.
    let rows: Vec<Vector<F>> = (0..n)
        .map(|v| {
            let e = l.unit(v);
            let mut row = sub_vectors(f, &l.bracket_unchecked(&e, &x), &e);
            let left = l.bracket_unchecked(&x, &e);
            row.extend(match kind {
                CyclicExtensionKind::NonLie => left,
                CyclicExtensionKind::Sqrt => crate::linalg::add_vectors(f, &left, &e),
            });
            for p in &powers[1..] {
                row.extend(l.bracket_unchecked(&e, p));
                row.extend(l.bracket_unchecked(p, &e));
            }
            row
        })
        .collect();
    let m = Matrix::from_rows(*f, n * (2 * k), &rows).ok()?.transpose();
    let kspace = l.span(&m.nullspace()).ok()?;
    let c = l.span(&powers).ok()?;
    if !c.sum_unchecked(&kspace).is_full() || !l.product_space_unchecked(&kspace, &kspace).is_zero() {
        return None;
    }
    let mut acc = c.intersection_unchecked(&kspace);
    let mut a = l.zero_subspace();
    for b in kspace.basis_vectors() {
        if acc.insert_unchecked(b.clone()) {
            a.insert_unchecked(b);
        }
    }
    if kind == CyclicExtensionKind::Sqrt && a.is_zero() {
        return None;
    }
    Some(CyclicExtensionWitness { x, k, a })
}

/// Computed invariants of one algebra. Entries that need exhaustive scans
/// are `None` over the rationals.
#[derive(Debug, Clone)]
pub struct StructureReport<F: Field> {
    pub name: String,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub is_lie: bool,
    pub is_symmetric: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
    pub is_supersolvable: Option<bool>,
    pub kernel: Subspace<F>,
    pub square_zero: Option<SquareZero<F>>,
    pub center: Subspace<F>,
    pub derived_algebra: Subspace<F>,
    pub frattini: Option<Subspace<F>>,
    pub lower_central_series: Vec<Subspace<F>>,
    pub derived_series: Vec<Subspace<F>>,
    pub shape: Shape<F>,
    pub notes: Vec<String>,
}

pub const EXTRASPECIAL_NOTE: &str =
    "extraspecial is detected as: nilpotent of class <= 2 with Z(L) = L^2 one-dimensional";

/// Invariants computable over any field.
pub fn structure_report<F: Field>(l: &LeibnizAlgebra<F>) -> StructureReport<F> {
    let shape = classify_shape(l);
    let mut notes = Vec::new();
    if shape.class == ShapeClass::Extraspecial {
        notes.push(EXTRASPECIAL_NOTE.to_string());
    }
    StructureReport {
        name: l.name().to_string(),
        field: l.field().descriptor(),
        dim: l.dim(),
        is_lie: l.is_lie(),
        is_symmetric: l.is_symmetric(),
        nilpotency_class: nilpotency_class(l),
        derived_length: derived_length(l),
        is_supersolvable: None,
        kernel: leibniz_kernel(l),
        square_zero: None,
        center: center(l),
        derived_algebra: derived_algebra(l),
        frattini: None,
        lower_central_series: lower_central_series(l),
        derived_series: derived_series(l),
        shape,
        notes,
    }
}

/// Full report over a prime field, including `J`, `phi(L)` and
/// supersolvability.
pub fn structure_report_finite<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<StructureReport<F>> {
    let mut r = structure_report(l);
    r.square_zero = Some(square_zero_subalgebra(l, budget)?);
    r.is_supersolvable = Some(is_supersolvable(l, budget)?);
    r.frattini = Some(lattice::frattini_ideal(l, budget)?);
    Ok(r)
}
