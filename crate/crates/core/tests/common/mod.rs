//! Independent brute-force oracles shared by the integration tests. They use
//! only raw structure constants and basic subspace membership, never the
//! library's closure, lattice or ideal machinery.

#![allow(dead_code)]

use std::sync::OnceLock;

use leibniz_core::catalog::{self, CorpusMember};
use leibniz_core::linalg::enumerate_subspaces;
use leibniz_core::{Budget, Field, FiniteField, LeibnizAlgebra, PrimeField, Subspace, Vector};

pub fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn v(field: PrimeField, xs: &[i64]) -> Vector<PrimeField> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn span(l: &LeibnizAlgebra<PrimeField>, vs: &[&[i64]]) -> Subspace<PrimeField> {
    let f = *l.field();
    Subspace::from_vectors(f, l.dim(), &vs.iter().map(|x| v(f, x)).collect::<Vec<_>>()).unwrap()
}

/// Shared corpus for seed 0.
pub fn corpus() -> &'static [CorpusMember] {
    static C: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    C.get_or_init(|| catalog::corpus(0))
}

/// `sum_{i,j} x_i y_j c_ij`, straight from the tensor.
pub fn naive_bracket<F: Field>(l: &LeibnizAlgebra<F>, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    let f = l.field();
    let n = l.dim();
    let t = l.tensor();
    let mut out = vec![f.zero(); n];
    for (i, xi) in x.iter().enumerate().take(n) {
        for (j, yj) in y.iter().enumerate().take(n) {
            let s = f.mul(xi, yj);
            if f.is_zero(&s) {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(&s, t.get(i, j, k)));
            }
        }
    }
    out
}

pub fn naive_is_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> bool {
    let b = s.basis_vectors();
    b.iter()
        .all(|x| b.iter().all(|y| s.contains(&naive_bracket(l, x, y)).unwrap()))
}

pub fn naive_is_ideal<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> bool {
    let b = s.basis_vectors();
    (0..l.dim()).all(|i| {
        let e = l.unit(i);
        b.iter()
            .all(|x| s.contains(&naive_bracket(l, x, &e)).unwrap() && s.contains(&naive_bracket(l, &e, x)).unwrap())
    })
}

/// Subalgebras as the bracket-closed members of the full subspace list.
pub fn brute_subalgebras<F: FiniteField>(l: &LeibnizAlgebra<F>) -> Vec<Subspace<F>> {
    enumerate_subspaces(*l.field(), l.dim(), &Budget::default())
        .unwrap()
        .into_iter()
        .filter(|s| naive_is_subalgebra(l, s))
        .collect()
}

/// Largest ideal inside the intersection of maximal subalgebras, by
/// filtering every subspace.
pub fn brute_frattini<F: FiniteField>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let subs = brute_subalgebras(l);
    let proper: Vec<&Subspace<F>> = subs.iter().filter(|s| !s.is_full()).collect();
    let maximal: Vec<&Subspace<F>> = proper
        .iter()
        .copied()
        .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && s.leq(t).unwrap()))
        .collect();
    let mut w = l.full_subspace();
    for m in maximal {
        w = w.intersection(m).unwrap();
    }
    let mut phi = l.zero_subspace();
    for s in enumerate_subspaces(*l.field(), l.dim(), &Budget::default()).unwrap() {
        if s.leq(&w).unwrap() && naive_is_ideal(l, &s) {
            phi = phi.sum(&s).unwrap();
        }
    }
    phi
}

/// Every element of `F^n` in index order.
pub fn all_vectors<F: FiniteField>(field: F, n: usize) -> Vec<Vector<F>> {
    let q = field.size();
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let e = field.element(idx % q);
                    idx /= q;
                    e
                })
                .collect()
        })
        .collect()
}

/// Smallest bracket-closed subspace containing `gens`, by naive iteration.
pub fn naive_closure<F: Field>(l: &LeibnizAlgebra<F>, gens: &[Vector<F>]) -> Subspace<F> {
    let mut s = Subspace::from_vectors(l.field().clone(), l.dim(), gens).unwrap();
    loop {
        let b = s.basis_vectors();
        let mut grown = s.clone();
        for x in &b {
            for y in &b {
                grown = grown
                    .sum(&Subspace::from_vectors(l.field().clone(), l.dim(), &[naive_bracket(l, x, y)]).unwrap())
                    .unwrap();
            }
        }
        if grown == s {
            return s;
        }
        s = grown;
    }
}

/// Elementwise WQI by direct scan of all pairs.
pub fn naive_wqi_elementwise<F: FiniteField>(l: &LeibnizAlgebra<F>) -> bool {
    let vs = all_vectors(*l.field(), l.dim());
    let closures: Vec<Subspace<F>> = vs.iter().map(|x| naive_closure(l, std::slice::from_ref(x))).collect();
    (0..vs.len()).all(|i| {
        (0..vs.len()).all(|j| {
            closures[i]
                .sum(&closures[j])
                .unwrap()
                .contains(&naive_bracket(l, &vs[i], &vs[j]))
                .unwrap()
        })
    })
}

/// Number of k-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

pub fn labels(subs: &[Subspace<PrimeField>]) -> Vec<String> {
    subs.iter().map(Subspace::label).collect()
}
