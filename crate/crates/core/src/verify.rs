//! Machine-checkable renderings of the structure results, run against
//! concrete algebras.
//!
//! A check evaluates its hypotheses in order and stops at the first one that
//! fails (`not_applicable`). Only when all hold is the conclusion evaluated.
//! The results are proved theorems, so a `fail` signals a defect in this
//! crate; its witness localizes the problem. Checks marked report-only render
//! necessity directions whose hypotheses have no finite-field model: they
//! are informational and never count as failures.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::catalog::{CorpusMember, Family, FamilySpec};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::lattice::{wqi_elementwise_violation, SubalgebraLattice};
use crate::linalg::{Subspace, Vector};
use crate::structure::{
    self, classify_shape, cyclic_form, cyclic_generator, detect_cyclic_extension, detect_extraspecial_sum,
    detect_symmetric_iv, is_solvable, leibniz_kernel, CyclicExtensionKind, CyclicForm, ShapeClass, SquareZero,
};
use crate::{par, Budget};

pub struct CheckInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub report_only: bool,
}

const fn check(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo {
        id,
        statement,
        report_only: false,
    }
}

const fn report(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo {
        id,
        statement,
        report_only: true,
    }
}

pub const CHECKS: &[CheckInfo] = &[
    check(
        "thm-abalab",
        "solvable, upper semi-modular => J abelian or almost abelian",
    ),
    check(
        "prop-usm2",
        "solvable, upper semi-modular => L/I abelian or almost abelian",
    ),
    check("thm-alab", "solvable, upper semi-modular, J almost abelian => J = L"),
    check("thm-ideal", "solvable, upper semi-modular, char != 2 => J is an ideal"),
    check(
        "cor-J-span",
        "solvable, upper semi-modular => J = span of the square-zero set",
    ),
    check(
        "lem-two",
        "solvable, USM, generated by two square-zero lines => dim L = 2",
    ),
    check(
        "lem-three",
        "solvable, USM, non-abelian, generated by three square-zero lines => Z(L) = 0",
    ),
    check(
        "lem-1dim",
        "solvable, all proper subalgebras 1-dim => dim L = 2, Lie or cyclic",
    ),
    check("lem-kernel", "phi(L) <= I => I(L/phi) = I/phi"),
    check(
        "lem-qi",
        "elementwise weak quasi-ideal <=> every subalgebra a weak quasi-ideal",
    ),
    check(
        "lem-wqi-phi",
        "every subalgebra a weak quasi-ideal => L/phi abelian or almost abelian",
    ),
    check("lem-cyclic", "L cyclic => (all weak quasi-ideals <=> form (i) or (ii))"),
    check("lem-int", "all weak quasi-ideals, phi != 0 => I ∩ phi != 0"),
    check(
        "thm-nonlie-suff",
        "non-Lie families => all weak quasi-ideals, L/phi almost abelian non-Lie",
    ),
    check(
        "thm-sqrt-suff",
        "sqrt family => all weak quasi-ideals, L/phi almost abelian Lie",
    ),
    check(
        "rem-equiv",
        "solvable => (modular <=> upper semi-modular <=> all weak quasi-ideals)",
    ),
    check("thm-sym-suff", "symmetric of shape (i)-(iv) => modular"),
    report(
        "thm-nonlie-nec",
        "all WQI, L/phi almost abelian non-Lie => shape (i) or (ii)",
    ),
    report(
        "thm-sqrt-nec",
        "char != 2, all WQI, L/phi almost abelian Lie => A + <x> shape",
    ),
    report("thm-sym-nec", "symmetric, modular => shape (i)-(iv)"),
];

pub fn check_info(id: &str) -> Result<&'static CheckInfo> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

pub fn all_check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Serializable counterexample data.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subspaces: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { witness: Witness },
    NotApplicable { failed_hypothesis: String },
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail { .. } => "fail",
            Status::NotApplicable { .. } => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub check: String,
    pub report_only: bool,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(flatten)]
    pub status: Status,
}

type ElementPair<F> = (Vector<F>, Vector<F>);

/// Lazily computed invariants shared by all checks on one algebra.
pub struct Analysis<'a, F: FiniteField> {
    pub algebra: &'a LeibnizAlgebra<F>,
    pub family: Option<FamilySpec>,
    pub seed: Option<u64>,
    budget: Budget,
    solvable: OnceCell<bool>,
    lattice: OnceCell<Result<SubalgebraLattice<F>>>,
    modular: OnceCell<Option<[usize; 3]>>,
    usm: OnceCell<Option<[usize; 2]>>,
    wqi: OnceCell<Option<[usize; 2]>>,
    wqi_elem: OnceCell<Result<Option<ElementPair<F>>>>,
    square_zero: OnceCell<Result<SquareZero<F>>>,
    phi: OnceCell<Result<Subspace<F>>>,
    kernel: OnceCell<Subspace<F>>,
}

fn cached<T: Clone>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'a, F: FiniteField> Analysis<'a, F> {
    pub fn new(algebra: &'a LeibnizAlgebra<F>, budget: Budget) -> Self {
        Analysis {
            algebra,
            family: None,
            seed: None,
            budget,
            solvable: OnceCell::new(),
            lattice: OnceCell::new(),
            modular: OnceCell::new(),
            usm: OnceCell::new(),
            wqi: OnceCell::new(),
            wqi_elem: OnceCell::new(),
            square_zero: OnceCell::new(),
            phi: OnceCell::new(),
            kernel: OnceCell::new(),
        }
    }

    pub fn with_provenance(mut self, family: Option<FamilySpec>, seed: Option<u64>) -> Self {
        self.family = family;
        self.seed = seed;
        self
    }

    pub fn solvable(&self) -> bool {
        *self.solvable.get_or_init(|| is_solvable(self.algebra))
    }

    pub fn lattice(&self) -> Result<&SubalgebraLattice<F>> {
        self.lattice
            .get_or_init(|| SubalgebraLattice::new(self.algebra, &self.budget))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn modular_violation(&self) -> Result<Option<[usize; 3]>> {
        let lat = self.lattice()?;
        Ok(*self.modular.get_or_init(|| lat.modular_violation()))
    }

    pub fn usm_violation(&self) -> Result<Option<[usize; 2]>> {
        let lat = self.lattice()?;
        Ok(*self.usm.get_or_init(|| lat.upper_semimodular_violation()))
    }

    pub fn wqi_violation(&self) -> Result<Option<[usize; 2]>> {
        let lat = self.lattice()?;
        Ok(*self.wqi.get_or_init(|| lat.wqi_violation()))
    }

    pub fn modular(&self) -> Result<bool> {
        Ok(self.modular_violation()?.is_none())
    }
    pub fn usm(&self) -> Result<bool> {
        Ok(self.usm_violation()?.is_none())
    }
    pub fn all_wqi(&self) -> Result<bool> {
        Ok(self.wqi_violation()?.is_none())
    }

    pub fn wqi_elementwise(&self) -> Result<&Option<(Vector<F>, Vector<F>)>> {
        cached(&self.wqi_elem, || wqi_elementwise_violation(self.algebra, &self.budget))
    }

    pub fn square_zero(&self) -> Result<&SquareZero<F>> {
        cached(&self.square_zero, || {
            structure::square_zero_subalgebra(self.algebra, &self.budget)
        })
    }

    pub fn phi(&self) -> Result<&Subspace<F>> {
        cached(&self.phi, || Ok(self.lattice()?.frattini_ideal()))
    }

    pub fn kernel(&self) -> &Subspace<F> {
        self.kernel.get_or_init(|| leibniz_kernel(self.algebra))
    }

    pub fn j_shape(&self) -> Result<ShapeClass> {
        let j = &self.square_zero()?.j;
        Ok(classify_shape(&self.algebra.subalgebra_as_algebra(j)?).class)
    }

    pub fn phi_quotient_shape(&self) -> Result<ShapeClass> {
        let q = self.algebra.quotient(self.phi()?)?;
        Ok(classify_shape(&q.algebra).class)
    }

    fn label(&self, s: &Subspace<F>) -> String {
        s.label()
    }

    fn element(&self, v: &[F::Elem]) -> Vec<String> {
        v.iter().map(|a| self.algebra.field().format(a)).collect()
    }

    fn node_labels(&self, idx: &[usize]) -> Result<Vec<String>> {
        let lat = self.lattice()?;
        Ok(idx.iter().map(|&i| lat.node(i).label()).collect())
    }

    /// Distinct square-zero lines `Fx, Fy` with `<x, y> = L`.
    fn two_generators(&self) -> Result<Option<ElementPair<F>>> {
        let pts = &self.square_zero()?.points;
        let l = self.algebra;
        Ok(par::find_first(0..pts.len(), |i| {
            (i + 1..pts.len())
                .find(|&j| {
                    l.closure_of(l.span(&[pts[i].clone(), pts[j].clone()]).expect("length n"))
                        .is_full()
                })
                .map(|j| (pts[i].clone(), pts[j].clone()))
        }))
    }

    /// Three distinct square-zero lines generating `L`. Pairs are grouped by
    /// the subalgebra they generate, so each third line is tried once per
    /// distinct pair closure.
    fn three_generators(&self) -> Result<Option<[Vector<F>; 3]>> {
        let pts = &self.square_zero()?.points;
        let l = self.algebra;
        let mut groups: Vec<(Subspace<F>, usize, usize)> = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let s = l.closure_of(l.span(&[pts[i].clone(), pts[j].clone()])?);
                if !groups.iter().any(|(t, _, _)| *t == s) {
                    groups.push((s, i, j));
                }
            }
        }
        for (s, i, j) in &groups {
            for (k, z) in pts.iter().enumerate() {
                if k == *i || k == *j {
                    continue;
                }
                let mut t = s.clone();
                t.insert_unchecked(z.clone());
                if l.closure_of(t).is_full() {
                    return Ok(Some([pts[*i].clone(), pts[*j].clone(), z.clone()]));
                }
            }
        }
        Ok(None)
    }

    fn matches_symmetric_shape(&self) -> Result<Option<&'static str>> {
        let l = self.algebra;
        Ok(match classify_shape(l).class {
            ShapeClass::Abelian => Some("(i) abelian"),
            ShapeClass::AlmostAbelianLie => Some("(ii) almost abelian Lie"),
            _ if detect_extraspecial_sum(l, &self.budget)?.is_some() => Some("(iii) extraspecial plus centre"),
            _ if detect_symmetric_iv(l).is_some() => Some("(iv) B + Fy + Fy^2"),
            _ => None,
        })
    }
}

/// Hypotheses evaluated so far and the verdict.
struct Eval {
    hyps: Vec<Hypothesis>,
    status: Option<Status>,
}

impl Eval {
    fn new() -> Self {
        Eval {
            hyps: Vec::new(),
            status: None,
        }
    }

    /// Record a hypothesis; on failure the check becomes not applicable.
    fn require(&mut self, name: &str, holds: bool) -> bool {
        self.hyps.push(Hypothesis {
            name: name.to_string(),
            holds,
        });
        if !holds {
            self.status = Some(Status::NotApplicable {
                failed_hypothesis: name.to_string(),
            });
        }
        holds
    }

    fn conclude(mut self, holds: bool, witness: impl FnOnce() -> Result<Witness>) -> Result<Self> {
        self.status = Some(if holds {
            Status::Pass
        } else {
            Status::Fail { witness: witness()? }
        });
        Ok(self)
    }
}

fn detail(s: impl Into<String>) -> Witness {
    Witness {
        detail: s.into(),
        ..Witness::default()
    }
}

macro_rules! require {
    ($e:ident, $name:expr, $val:expr) => {
        if !$e.require($name, $val) {
            return Ok($e);
        }
    };
}

/// Evaluate one check on one algebra.
pub fn run_check<F: FiniteField>(id: &str, a: &Analysis<'_, F>) -> Result<TheoremReport> {
    let info = check_info(id)?;
    let eval = evaluate(id, a)?;
    Ok(TheoremReport {
        algebra: a.algebra.name().to_string(),
        seed: a.seed,
        check: info.id.to_string(),
        report_only: info.report_only,
        hypotheses: eval.hyps,
        status: eval.status.expect("every check concludes or stops at a hypothesis"),
    })
}

fn evaluate<F: FiniteField>(id: &str, a: &Analysis<'_, F>) -> Result<Eval> {
    let l = a.algebra;
    let mut e = Eval::new();
    match id {
        "thm-abalab" | "prop-usm2" | "thm-alab" | "thm-ideal" | "cor-J-span" | "lem-two" | "lem-three" => {
            require!(e, "solvable", a.solvable());
            require!(e, "upper semi-modular", a.usm()?);
            match id {
                "thm-abalab" => {
                    let shape = a.j_shape()?;
                    let j = &a.square_zero()?.j;
                    e.conclude(shape.is_abelian_or_almost_abelian(), || {
                        Ok(Witness {
                            subspaces: vec![a.label(j)],
                            detail: format!("J classifies as {}", shape.as_str()),
                            ..Witness::default()
                        })
                    })
                }
                "prop-usm2" => {
                    let i = a.kernel();
                    let shape = classify_shape(&l.quotient(i)?.algebra).class;
                    e.conclude(shape.is_abelian_or_almost_abelian(), || {
                        Ok(Witness {
                            subspaces: vec![a.label(i)],
                            detail: format!("L/I classifies as {}", shape.as_str()),
                            ..Witness::default()
                        })
                    })
                }
                "thm-alab" => {
                    require!(e, "J almost abelian", a.j_shape()?.is_almost_abelian());
                    let j = &a.square_zero()?.j;
                    e.conclude(j.is_full(), || {
                        Ok(Witness {
                            subspaces: vec![a.label(j)],
                            ..Witness::default()
                        })
                    })
                }
                "thm-ideal" => {
                    require!(e, "characteristic != 2", l.field().characteristic() != 2);
                    let j = &a.square_zero()?.j;
                    e.conclude(l.is_ideal(j)?, || {
                        Ok(Witness {
                            subspaces: vec![a.label(j)],
                            detail: "J is not an ideal".into(),
                            ..Witness::default()
                        })
                    })
                }
                "cor-J-span" => {
                    let sz = a.square_zero()?;
                    e.conclude(sz.j == sz.span, || {
                        Ok(Witness {
                            subspaces: vec![a.label(&sz.j), a.label(&sz.span)],
                            detail: "J differs from the span of the square-zero set".into(),
                            ..Witness::default()
                        })
                    })
                }
                "lem-two" => {
                    let gens = a.two_generators()?;
                    require!(e, "generated by two square-zero lines", gens.is_some());
                    let (x, y) = gens.expect("checked");
                    e.conclude(l.dim() == 2, || {
                        Ok(Witness {
                            elements: vec![a.element(&x), a.element(&y)],
                            detail: format!("dim L = {}", l.dim()),
                            ..Witness::default()
                        })
                    })
                }
                _ => {
                    require!(e, "non-abelian", !l.is_abelian());
                    let gens = a.three_generators()?;
                    require!(e, "generated by three square-zero lines", gens.is_some());
                    let z = structure::center(l);
                    e.conclude(z.is_zero(), || {
                        let g = gens.expect("checked");
                        Ok(Witness {
                            subspaces: vec![a.label(&z)],
                            elements: g.iter().map(|v| a.element(v)).collect(),
                            ..Witness::default()
                        })
                    })
                }
            }
        }
        "lem-1dim" => {
            require!(e, "solvable", a.solvable());
            require!(e, "dim L >= 2", l.dim() >= 2);
            let lat = a.lattice()?;
            let proper_1dim = (1..lat.top()).all(|i| lat.node(i).dim() == 1);
            require!(e, "all proper subalgebras 1-dimensional", proper_1dim);
            let cyclic = cyclic_generator(l, &a.budget)?.is_some();
            e.conclude(l.dim() == 2 && (l.is_lie() || cyclic), || {
                Ok(detail(format!("dim {}, lie {}, cyclic {cyclic}", l.dim(), l.is_lie())))
            })
        }
        "lem-kernel" => {
            let phi = a.phi()?;
            let i = a.kernel();
            require!(e, "phi(L) <= I", phi.leq(i)?);
            let q = l.quotient(phi)?;
            let lhs = leibniz_kernel(&q.algebra);
            let rhs = q.project_subspace(i);
            e.conclude(lhs == rhs, || {
                Ok(Witness {
                    subspaces: vec![a.label(&lhs), a.label(&rhs)],
                    detail: "I(L/phi) != I/phi".into(),
                    ..Witness::default()
                })
            })
        }
        "lem-qi" => {
            let elem = a.wqi_elementwise()?.clone();
            let sub = a.wqi_violation()?;
            e.conclude(elem.is_none() == sub.is_none(), || {
                let mut w = Witness {
                    detail: format!("elementwise {}, subalgebra-level {}", elem.is_none(), sub.is_none()),
                    ..Witness::default()
                };
                if let Some((x, y)) = &elem {
                    w.elements = vec![a.element(x), a.element(y)];
                }
                if let Some(pair) = sub {
                    w.subspaces = a.node_labels(&pair)?;
                }
                Ok(w)
            })
        }
        "lem-wqi-phi" => {
            require!(e, "every subalgebra a weak quasi-ideal", a.all_wqi()?);
            let shape = a.phi_quotient_shape()?;
            e.conclude(shape.is_abelian_or_almost_abelian(), || {
                Ok(Witness {
                    subspaces: vec![a.label(a.phi()?)],
                    detail: format!("L/phi classifies as {}", shape.as_str()),
                    ..Witness::default()
                })
            })
        }
        "lem-cyclic" => {
            let g = cyclic_generator(l, &a.budget)?;
            require!(e, "cyclic", g.is_some());
            let x = g.expect("checked");
            let form = cyclic_form(l, &x);
            let wqi = a.all_wqi()?;
            e.conclude(wqi == (form != CyclicForm::Other), || {
                Ok(Witness {
                    elements: vec![a.element(&x)],
                    detail: format!("all WQI {wqi}, power table form {form:?}"),
                    ..Witness::default()
                })
            })
        }
        "lem-int" => {
            require!(e, "every subalgebra a weak quasi-ideal", a.all_wqi()?);
            let phi = a.phi()?;
            require!(e, "phi(L) != 0", !phi.is_zero());
            let meet = a.kernel().intersection(phi)?;
            e.conclude(!meet.is_zero(), || {
                Ok(Witness {
                    subspaces: vec![a.label(a.kernel()), a.label(phi)],
                    ..Witness::default()
                })
            })
        }
        "thm-nonlie-suff" | "thm-sqrt-suff" => {
            let (families, target): (&[Family], _) = if id == "thm-nonlie-suff" {
                (
                    &[Family::AlmostAbelianNonlie, Family::FamilyNonlieIi],
                    ShapeClass::AlmostAbelianNonlie,
                )
            } else {
                (&[Family::FamilySqrt], ShapeClass::AlmostAbelianLie)
            };
            let built = a.family.as_ref().is_some_and(|f| families.contains(&f.family));
            require!(e, "built by the family constructor", built);
            let wqi = a.all_wqi()?;
            let shape = a.phi_quotient_shape()?;
            e.conclude(wqi && shape == target, || {
                let mut w = detail(format!("all WQI {wqi}, L/phi classifies as {}", shape.as_str()));
                w.subspaces = vec![a.label(a.phi()?)];
                Ok(w)
            })
        }
        "rem-equiv" => {
            require!(e, "solvable", a.solvable());
            let (m, u, w) = (a.modular()?, a.usm()?, a.all_wqi()?);
            e.conclude(m == u && u == w, || {
                Ok(detail(format!("modular {m}, usm {u}, all WQI {w}")))
            })
        }
        "thm-sym-suff" => {
            require!(e, "symmetric", l.is_symmetric());
            let shape = a.matches_symmetric_shape()?;
            require!(e, "shape (i)-(iv)", shape.is_some());
            let v = a.modular_violation()?;
            e.conclude(v.is_none(), || {
                let mut w = detail(format!("shape {}", shape.expect("checked")));
                w.subspaces = a.node_labels(&v.expect("violation"))?;
                Ok(w)
            })
        }
        "thm-nonlie-nec" => {
            require!(e, "every subalgebra a weak quasi-ideal", a.all_wqi()?);
            require!(
                e,
                "L/phi almost abelian non-Lie",
                a.phi_quotient_shape()? == ShapeClass::AlmostAbelianNonlie
            );
            let ok = classify_shape(l).class == ShapeClass::AlmostAbelianNonlie
                || detect_cyclic_extension(l, CyclicExtensionKind::NonLie, &a.budget)?.is_some();
            e.conclude(ok, || Ok(detail("no decomposition of shape (i) or (ii) found")))
        }
        "thm-sqrt-nec" => {
            require!(e, "characteristic != 2", l.field().characteristic() != 2);
            require!(e, "every subalgebra a weak quasi-ideal", a.all_wqi()?);
            require!(
                e,
                "L/phi almost abelian Lie",
                a.phi_quotient_shape()? == ShapeClass::AlmostAbelianLie
            );
            let ok = detect_cyclic_extension(l, CyclicExtensionKind::Sqrt, &a.budget)?.is_some();
            e.conclude(ok, || Ok(detail("no decomposition A + <x> found")))
        }
        "thm-sym-nec" => {
            require!(e, "symmetric", l.is_symmetric());
            require!(e, "modular", a.modular()?);
            let shape = a.matches_symmetric_shape()?;
            e.conclude(shape.is_some(), || {
                Ok(detail("modular symmetric algebra outside shapes (i)-(iv)"))
            })
        }
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Per-check counts over a suite run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub report_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub summary: BTreeMap<String, CheckSummary>,
    pub reports: Vec<TheoremReport>,
}

impl SuiteResult {
    /// Failures of asserted (non report-only) checks.
    pub fn hard_failures(&self) -> Vec<&TheoremReport> {
        self.reports
            .iter()
            .filter(|r| !r.report_only && matches!(r.status, Status::Fail { .. }))
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.hard_failures().is_empty()
    }
}

pub fn summarize(reports: Vec<TheoremReport>) -> SuiteResult {
    let mut summary: BTreeMap<String, CheckSummary> = BTreeMap::new();
    for r in &reports {
        let s = summary.entry(r.check.clone()).or_default();
        s.report_only = r.report_only;
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail { .. } => s.fail += 1,
            Status::NotApplicable { .. } => s.not_applicable += 1,
        }
    }
    SuiteResult { summary, reports }
}

/// Run `ids` on every corpus member, in corpus order.
pub fn run_suite(corpus: &[CorpusMember], ids: &[&str], budget: &Budget) -> Result<SuiteResult> {
    for id in ids {
        check_info(id)?;
    }
    let per_member = par::map_slice(corpus, |m| -> Result<Vec<TheoremReport>> {
        let a =
            Analysis::new(&m.algebra, *budget).with_provenance(m.provenance.family.clone(), Some(m.provenance.seed));
        ids.iter().map(|id| run_check(id, &a)).collect()
    });
    let mut reports = Vec::new();
    for r in per_member {
        reports.extend(r?);
    }
    Ok(summarize(reports))
}

/// Run `ids` on a single algebra.
pub fn run_on_algebra<F: FiniteField>(
    l: &LeibnizAlgebra<F>,
    family: Option<FamilySpec>,
    ids: &[&str],
    budget: &Budget,
) -> Result<SuiteResult> {
    let a = Analysis::new(l, *budget).with_provenance(family, None);
    let reports = ids.iter().map(|id| run_check(id, &a)).collect::<Result<Vec<_>>>()?;
    Ok(summarize(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, FamilySpec};
    use crate::field::PrimeField;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn status(id: &str, l: &LeibnizAlgebra<PrimeField>, family: Option<FamilySpec>) -> Status {
        let a = Analysis::new(l, Budget::default()).with_provenance(family, None);
        run_check(id, &a).unwrap().status
    }

    #[test]
    fn spec_examples() {
        let sqrt = catalog::family_sqrt(2, 2, f(3)).unwrap();
        assert_eq!(status("thm-ideal", &sqrt, None), Status::Pass);
        let h = catalog::heisenberg_lie(f(2));
        assert_eq!(status("rem-equiv", &h, None), Status::Pass);
        let ab = catalog::abelian(2, f(3));
        assert!(
            matches!(status("thm-alab", &ab, None), Status::NotApplicable { failed_hypothesis } if failed_hypothesis == "J almost abelian")
        );
    }

    #[test]
    fn unknown_check_is_an_error() {
        let ab = catalog::abelian(1, f(2));
        let a = Analysis::new(&ab, Budget::default());
        assert_eq!(
            run_check("thm-nope", &a).unwrap_err(),
            Error::UnknownCheck("thm-nope".into())
        );
    }

    #[test]
    fn family_sufficiency_needs_provenance() {
        let l = catalog::family_nonlie_ii(2, 1, f(3)).unwrap();
        assert!(matches!(
            status("thm-nonlie-suff", &l, None),
            Status::NotApplicable { .. }
        ));
        let spec = FamilySpec::new(Family::FamilyNonlieIi, &[2, 1]);
        assert_eq!(status("thm-nonlie-suff", &l, Some(spec)), Status::Pass);
    }

    #[test]
    fn empty_suite() {
        let r = run_suite(&[], &all_check_ids(), &Budget::default()).unwrap();
        assert!(r.summary.is_empty() && r.reports.is_empty() && r.passed());
    }
}
