//! Subalgebra lattices over prime fields and the lattice conditions on them.
//!
//! Nodes are kept in the canonical subspace order (dimension, then RREF
//! entries), so node 0 is the zero subalgebra and the last node is `L`. Every
//! counterexample search returns the first violation in node-index order.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::{check_elements, projective_points, Subspace, Vector};
use crate::structure::largest_ideal_in;
use crate::{par, Budget};

/// Join/meet tables are precomputed up to this many nodes.
const TABLE_LIMIT: usize = 2048;

pub struct SubalgebraLattice<F: FiniteField> {
    algebra: LeibnizAlgebra<F>,
    nodes: Vec<Subspace<F>>,
    index: HashMap<Subspace<F>, usize>,
    /// `below[v]` = `{u : u <= v}`.
    below: Vec<FixedBitSet>,
    /// `above[u]` = `{v : u <= v}`.
    above: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    /// `covered_by[u]` = upper covers of `u` as a set.
    covered_by: Vec<FixedBitSet>,
    join_table: Option<Vec<u32>>,
    meet_table: Option<Vec<u32>>,
}

impl<F: FiniteField> std::fmt::Debug for SubalgebraLattice<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubalgebraLattice")
            .field("algebra", &self.algebra.name())
            .field("nodes", &self.nodes)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticeStats {
    pub nodes: usize,
    pub edges: usize,
    pub height: usize,
    pub atoms: usize,
    pub coatoms: usize,
}

pub fn enumerate_subalgebras<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<SubalgebraLattice<F>> {
    SubalgebraLattice::new(l, budget)
}

impl<F: FiniteField> SubalgebraLattice<F> {
    /// Breadth-first search from the zero subalgebra: every subalgebra is
    /// reached by a chain of closures `S -> <S, x>` over lines `Fx`.
    pub fn new(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Self> {
        check_elements(l.field(), l.dim(), "subalgebra enumeration", budget)?;
        let points = projective_points(l.field(), l.dim(), budget)?;
        let zero = l.zero_subspace();
        let mut seen: HashSet<Subspace<F>> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let found = par::map_slice(&frontier, |s| {
                let mut local: Vec<Subspace<F>> = Vec::new();
                for x in &points {
                    if s.contains_unchecked(x) {
                        continue;
                    }
                    let mut t = s.clone();
                    t.insert_unchecked(x.clone());
                    let t = l.closure_of(t);
                    if !local.contains(&t) {
                        local.push(t);
                    }
                }
                local
            });
            let mut next = Vec::new();
            for t in found.into_iter().flatten() {
                if seen.contains(&t) {
                    continue;
                }
                seen.insert(t.clone());
                if seen.len() > budget.max_nodes {
                    return Err(Error::BudgetExceeded {
                        what: "subalgebra lattice nodes",
                        needed: seen.len() as u64,
                        budget: budget.max_nodes as u64,
                    });
                }
                next.push(t);
            }
            frontier = next;
        }
        let mut nodes: Vec<Subspace<F>> = seen.into_iter().collect();
        nodes.sort();
        Ok(Self::from_nodes(l.clone(), nodes))
    }

    /// Build the order, covers and tables for an already closed node set.
    fn from_nodes(algebra: LeibnizAlgebra<F>, nodes: Vec<Subspace<F>>) -> Self {
        let n = nodes.len();
        let index: HashMap<Subspace<F>, usize> = nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let below: Vec<FixedBitSet> = par::map_range(0..n, |v| {
            let mut bits = FixedBitSet::with_capacity(n);
            for u in 0..=v {
                if nodes[u].dim() < nodes[v].dim() && nodes[u].leq_unchecked(&nodes[v]) || u == v {
                    bits.insert(u);
                }
            }
            bits
        });
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for (v, bits) in below.iter().enumerate() {
            for u in bits.ones() {
                above[u].insert(v);
            }
        }
        let lower_covers: Vec<Vec<usize>> = par::map_range(0..n, |v| {
            below[v]
                .ones()
                .filter(|&u| u != v && above[u].intersection(&below[v]).count() == 2)
                .collect()
        });
        let mut upper_covers = vec![Vec::new(); n];
        let mut covered_by = vec![FixedBitSet::with_capacity(n); n];
        for (v, lc) in lower_covers.iter().enumerate() {
            for &u in lc {
                upper_covers[u].push(v);
                covered_by[u].insert(v);
            }
        }
        let mut lat = SubalgebraLattice {
            algebra,
            nodes,
            index,
            below,
            above,
            upper_covers,
            lower_covers,
            covered_by,
            join_table: None,
            meet_table: None,
        };
        if n <= TABLE_LIMIT {
            let rows = par::map_range(0..n, |i| {
                (0..n)
                    .map(|j| (lat.join_scan(i, j) as u32, lat.meet_scan(i, j) as u32))
                    .collect::<Vec<_>>()
            });
            let (join, meet) = rows.into_iter().flatten().unzip();
            lat.join_table = Some(join);
            lat.meet_table = Some(meet);
        }
        lat
    }

    pub fn algebra(&self) -> &LeibnizAlgebra<F> {
        &self.algebra
    }
    pub fn len(&self) -> usize {
        self.nodes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
    pub fn nodes(&self) -> &[Subspace<F>] {
        &self.nodes
    }
    pub fn node(&self, i: usize) -> &Subspace<F> {
        &self.nodes[i]
    }
    pub fn index_of(&self, s: &Subspace<F>) -> Option<usize> {
        self.index.get(s).copied()
    }
    pub fn bottom(&self) -> usize {
        0
    }
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }
    /// `u` is covered by `v`.
    pub fn is_cover(&self, u: usize, v: usize) -> bool {
        self.covered_by[u].contains(v)
    }
    pub fn upper_covers(&self, u: usize) -> &[usize] {
        &self.upper_covers[u]
    }
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower_covers[v]
    }

    fn join_scan(&self, i: usize, j: usize) -> usize {
        // Nodes are sorted by dimension, so the first common upper bound is
        // the least one.
        self.above[i]
            .intersection(&self.above[j])
            .next()
            .expect("top is an upper bound")
    }

    fn meet_scan(&self, i: usize, j: usize) -> usize {
        self.below[i]
            .intersection(&self.below[j])
            .next_back()
            .expect("bottom is a lower bound")
    }

    #[inline]
    pub fn join_index(&self, i: usize, j: usize) -> usize {
        match &self.join_table {
            Some(t) => t[i * self.nodes.len() + j] as usize,
            None => self.join_scan(i, j),
        }
    }

    #[inline]
    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        match &self.meet_table {
            Some(t) => t[i * self.nodes.len() + j] as usize,
            None => self.meet_scan(i, j),
        }
    }

    fn require_node(&self, s: &Subspace<F>) -> Result<usize> {
        self.index_of(s).ok_or(Error::NotANode)
    }

    /// `<U, V>`, the subalgebra generated by both.
    pub fn join(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.require_node(u)?;
        self.require_node(v)?;
        Ok(self.algebra.closure_of(u.sum_unchecked(v)))
    }

    pub fn meet(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.require_node(u)?;
        self.require_node(v)?;
        Ok(u.intersection_unchecked(v))
    }

    /// Recompute every pairwise join and meet from the subspaces and compare
    /// with the order-theoretic tables.
    pub fn verify_closure(&self) -> bool {
        let n = self.len();
        par::find_first(0..n, |i| {
            (0..n).find(|&j| {
                let (u, v) = (&self.nodes[i], &self.nodes[j]);
                let join = self.algebra.closure_of(u.sum_unchecked(v));
                let meet = u.intersection_unchecked(v);
                self.index_of(&join) != Some(self.join_index(i, j))
                    || self.index_of(&meet) != Some(self.meet_index(i, j))
            })
        })
        .is_none()
    }

    /// Co-atoms: the subalgebras covered by `L`.
    pub fn maximal_subalgebras(&self) -> Vec<Subspace<F>> {
        self.lower_covers[self.top()]
            .iter()
            .map(|&i| self.nodes[i].clone())
            .collect()
    }

    /// Largest ideal inside the intersection of the maximal subalgebras.
    pub fn frattini_ideal(&self) -> Subspace<F> {
        let meet = self
            .maximal_subalgebras()
            .iter()
            .fold(self.algebra.full_subspace(), |acc, m| acc.intersection_unchecked(m));
        largest_ideal_in(&self.algebra, &meet).expect("same ambient space")
    }

    /// First `(U, V, W)` with `U <= W` and `<U,V> ∩ W != <U, V ∩ W>`.
    pub fn modular_violation(&self) -> Option<[usize; 3]> {
        let n = self.len();
        par::find_first(0..n, |u| {
            for v in 0..n {
                if self.leq(v, u) {
                    continue;
                }
                let uv = self.join_index(u, v);
                for w in self.above[u].ones() {
                    if self.leq(v, w) {
                        continue;
                    }
                    if self.meet_index(uv, w) != self.join_index(u, self.meet_index(v, w)) {
                        return Some([u, v, w]);
                    }
                }
            }
            None
        })
    }

    pub fn is_modular(&self) -> bool {
        self.modular_violation().is_none()
    }

    /// First `(U, B)` with `U ∩ B` maximal in `B` but `U` not maximal in
    /// `<U, B>`.
    pub fn upper_semimodular_violation(&self) -> Option<[usize; 2]> {
        let n = self.len();
        par::find_first(0..n, |u| {
            (0..n)
                .find(|&b| self.is_cover(self.meet_index(u, b), b) && !self.is_cover(u, self.join_index(u, b)))
                .map(|b| [u, b])
        })
    }

    pub fn is_upper_semimodular(&self) -> bool {
        self.upper_semimodular_violation().is_none()
    }

    /// Abstract covering form: whenever `a` and `b` both cover `a ∧ b`, the
    /// join `a ∨ b` covers both.
    pub fn birkhoff_upper_violation(&self) -> Option<[usize; 2]> {
        let n = self.len();
        par::find_first(0..n, |a| {
            (0..n)
                .find(|&b| {
                    let m = self.meet_index(a, b);
                    let j = self.join_index(a, b);
                    a != b
                        && self.is_cover(m, a)
                        && self.is_cover(m, b)
                        && !(self.is_cover(a, j) && self.is_cover(b, j))
                })
                .map(|b| [a, b])
        })
    }

    /// Dual condition: if `B` is covered by `<U, B>` then `U ∩ B` is covered
    /// by `U`.
    pub fn lower_semimodular_violation(&self) -> Option<[usize; 2]> {
        let n = self.len();
        par::find_first(0..n, |u| {
            (0..n)
                .find(|&b| self.is_cover(b, self.join_index(u, b)) && !self.is_cover(self.meet_index(u, b), u))
                .map(|b| [u, b])
        })
    }

    pub fn is_lower_semimodular_lattice(&self) -> bool {
        self.lower_semimodular_violation().is_none()
    }

    fn wqi_pair_ok(&self, u: usize, v: usize) -> bool {
        if self.leq(u, v) || self.leq(v, u) {
            return true;
        }
        let (a, b) = (&self.nodes[u], &self.nodes[v]);
        let sum = a.sum_unchecked(b);
        let l = &self.algebra;
        a.basis().all(|x| {
            b.basis().all(|y| {
                sum.contains_unchecked(&l.bracket_unchecked(x, y)) && sum.contains_unchecked(&l.bracket_unchecked(y, x))
            })
        })
    }

    /// `[U,V] + [V,U] <= U + V` for every subalgebra `V`.
    pub fn is_weak_quasi_ideal(&self, u: &Subspace<F>) -> Result<bool> {
        let i = self.require_node(u)?;
        Ok((0..self.len()).all(|v| self.wqi_pair_ok(i, v)))
    }

    /// First pair `(U, V)`, `U < V` in node order, where `U` fails the
    /// weak quasi-ideal condition against `V`. The condition is symmetric in
    /// `U` and `V`.
    pub fn wqi_violation(&self) -> Option<[usize; 2]> {
        let n = self.len();
        par::find_first(0..n, |u| (u + 1..n).find(|&v| !self.wqi_pair_ok(u, v)).map(|v| [u, v]))
    }

    pub fn all_subalgebras_wqi(&self) -> bool {
        self.wqi_violation().is_none()
    }

    pub fn stats(&self) -> LatticeStats {
        let n = self.len();
        let mut height = vec![0usize; n];
        for v in 0..n {
            height[v] = self.lower_covers[v].iter().map(|&u| height[u] + 1).max().unwrap_or(0);
        }
        LatticeStats {
            nodes: n,
            edges: self.lower_covers.iter().map(Vec::len).sum(),
            height: height[self.top()],
            atoms: self.upper_covers[0].len(),
            coatoms: self.lower_covers[self.top()].len(),
        }
    }
}

pub fn lattice_stats<F: FiniteField>(lat: &SubalgebraLattice<F>) -> LatticeStats {
    lat.stats()
}

/// `phi(L)`. Builds the subalgebra lattice.
pub fn frattini_ideal<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    Ok(SubalgebraLattice::new(l, budget)?.frattini_ideal())
}

/// First element pair `(x, y)` with `[x, y]` or `[y, x]` outside
/// `<x> + <y>`, scanning normalized line representatives. Rescaling either
/// argument does not change the condition, so lines suffice.
pub fn wqi_elementwise_violation<F: FiniteField>(
    l: &LeibnizAlgebra<F>,
    budget: &Budget,
) -> Result<Option<(Vector<F>, Vector<F>)>> {
    check_elements(l.field(), 2 * l.dim(), "element pair scan", budget)?;
    let points = projective_points(l.field(), l.dim(), budget)?;
    let closures = par::map_slice(&points, |x| {
        l.closure_of(l.span(std::slice::from_ref(x)).expect("length n"))
    });
    let m = points.len();
    Ok(par::find_first(0..m, |i| {
        (i + 1..m)
            .find(|&j| {
                let sum = closures[i].sum_unchecked(&closures[j]);
                !sum.contains_unchecked(&l.bracket_unchecked(&points[i], &points[j]))
                    || !sum.contains_unchecked(&l.bracket_unchecked(&points[j], &points[i]))
            })
            .map(|j| (points[i].clone(), points[j].clone()))
    }))
}

pub fn wqi_elementwise<F: FiniteField>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<bool> {
    Ok(wqi_elementwise_violation(l, budget)?.is_none())
}
