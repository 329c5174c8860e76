//! Algebra file format, JSON reports and DOT export.
//!
//! An algebra file is a JSON object:
//!
//! ```json
//! {
//!   "name": "cyclic_nilpotent(2)",
//!   "field": {"type": "prime", "p": 3},
//!   "dim": 2,
//!   "brackets": [[0, 0, 1, "1"]]
//! }
//! ```
//!
//! Each bracket entry `[i, j, k, v]` sets the coefficient of `e_k` in
//! `[e_i, e_j]` to `v`, with 0-based indices. Values are decimal integers
//! (reduced mod p) or, over Q, `"num/den"` strings. Omitted entries are zero.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{LeibnizAlgebra, StructureTensor};
use crate::any::AnyAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, FiniteField, PrimeField, Rationals};
use crate::lattice::SubalgebraLattice;
use crate::linalg::Subspace;
use crate::structure::StructureReport;
use crate::verify::SuiteResult;

/// Version stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub brackets: Vec<(usize, usize, usize, String)>,
}

impl AlgebraSpec {
    pub fn from_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> Self {
        let f = l.field();
        AlgebraSpec {
            name: l.name().to_string(),
            field: f.descriptor(),
            dim: l.dim(),
            brackets: l
                .tensor()
                .nonzero_entries()
                .map(|(i, j, k, v)| (i, j, k, f.format(v)))
                .collect(),
        }
    }

    fn tensor<F: Field>(&self, field: F) -> Result<StructureTensor<F>> {
        let mut t = StructureTensor::zero(field.clone(), self.dim);
        let mut seen = std::collections::HashSet::new();
        for (pos, (i, j, k, v)) in self.brackets.iter().enumerate() {
            let at = |e: Error| Error::Parse(format!("brackets[{pos}]: {e}"));
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Parse(format!(
                    "brackets[{pos}]: duplicate entry ({i}, {j}, {k})"
                )));
            }
            let v = field.parse(v).map_err(at)?;
            t.set(*i, *j, *k, v).map_err(at)?;
        }
        Ok(t)
    }

    pub fn to_algebra(&self) -> Result<AnyAlgebra> {
        Ok(match self.field {
            FieldDescriptor::Prime { p } => AnyAlgebra::Prime(LeibnizAlgebra::new(
                self.name.clone(),
                self.tensor(PrimeField::new(p)?)?,
            )?),
            FieldDescriptor::Rational => {
                AnyAlgebra::Rational(LeibnizAlgebra::new(self.name.clone(), self.tensor(Rationals)?)?)
            }
        })
    }
}

/// Parse an algebra file. Schema errors carry the line and column; tensors
/// failing the right Leibniz identity are rejected with the first violating
/// basis triple.
pub fn parse_spec(text: &str) -> Result<AnyAlgebra> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.to_algebra()
}

/// Deterministic file text: entries in `(i, j, k)` order, one per line.
pub fn emit_spec<F: Field>(l: &LeibnizAlgebra<F>) -> String {
    let spec = AlgebraSpec::from_algebra(l);
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", to_json(&spec.name));
    let _ = writeln!(out, "  \"field\": {},", to_json(&spec.field));
    let _ = writeln!(out, "  \"dim\": {},", spec.dim);
    if spec.brackets.is_empty() {
        out.push_str("  \"brackets\": []\n");
    } else {
        out.push_str("  \"brackets\": [\n");
        let lines: Vec<String> = spec.brackets.iter().map(|b| format!("    {}", to_json(b))).collect();
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  ]\n");
    }
    out.push_str("}\n");
    out
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// Hasse diagram of the covering relation, bottom to top.
pub fn export_dot<F: FiniteField>(lat: &SubalgebraLattice<F>) -> String {
    let mut out = String::from("digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in lat.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", s.label());
    }
    for u in 0..lat.len() {
        for &v in lat.upper_covers(u) {
            let _ = writeln!(out, "  n{u} -> n{v};");
        }
    }
    out.push_str("}\n");
    out
}

fn labels<F: Field>(s: &[Subspace<F>]) -> Vec<String> {
    s.iter().map(Subspace::label).collect()
}

/// Lattice report: statistics, verdicts with witnesses, nodes and covers.
pub fn lattice_report_json<F: FiniteField>(lat: &SubalgebraLattice<F>) -> Value {
    let l = lat.algebra();
    let node_witness = |w: Option<Vec<usize>>| -> Value {
        match w {
            None => Value::Null,
            Some(idx) => json!(idx.iter().map(|&i| lat.node(i).label()).collect::<Vec<_>>()),
        }
    };
    let modular = lat.modular_violation();
    let usm = lat.upper_semimodular_violation();
    let lsm = lat.lower_semimodular_violation();
    let wqi = lat.wqi_violation();
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": l.name(),
        "field": l.field().descriptor(),
        "dim": l.dim(),
        "stats": lat.stats(),
        "verdicts": {
            "modular": modular.is_none(),
            "upper_semimodular": usm.is_none(),
            "lower_semimodular": lsm.is_none(),
            "all_wqi": wqi.is_none(),
        },
        "witnesses": {
            "modular": node_witness(modular.map(|w| w.to_vec())),
            "upper_semimodular": node_witness(usm.map(|w| w.to_vec())),
            "lower_semimodular": node_witness(lsm.map(|w| w.to_vec())),
            "all_wqi": node_witness(wqi.map(|w| w.to_vec())),
        },
        "frattini": lat.frattini_ideal().label(),
        "nodes": labels(lat.nodes()),
        "covers": (0..lat.len())
            .flat_map(|u| lat.upper_covers(u).iter().map(move |&v| [u, v]))
            .collect::<Vec<_>>(),
    })
}

pub fn structure_report_json<F: Field>(r: &StructureReport<F>) -> Value {
    let f = r.kernel.field();
    let square_zero = r.square_zero.as_ref().map(|sz| {
        json!({
            "j": sz.j.label(),
            "span": sz.span.label(),
            "count": sz.count,
            "set_is_subspace": sz.set_is_subspace,
            "lower_bound": sz.lower_bound,
        })
    });
    let almost_abelian = r.shape.almost_abelian.as_ref().map(|w| {
        json!({
            "a": w.a.label(),
            "y": w.y.iter().map(|c| f.format(c)).collect::<Vec<_>>(),
        })
    });
    json!({
        "schema_version": SCHEMA_VERSION,
        "name": r.name,
        "field": r.field,
        "dim": r.dim,
        "is_lie": r.is_lie,
        "is_symmetric": r.is_symmetric,
        "nilpotency_class": r.nilpotency_class,
        "derived_length": r.derived_length,
        "is_supersolvable": r.is_supersolvable,
        "kernel": r.kernel.label(),
        "square_zero": square_zero,
        "center": r.center.label(),
        "derived_algebra": r.derived_algebra.label(),
        "frattini": r.frattini.as_ref().map(Subspace::label),
        "lower_central_series": labels(&r.lower_central_series),
        "derived_series": labels(&r.derived_series),
        "shape": r.shape.class,
        "almost_abelian": almost_abelian,
        "notes": r.notes,
    })
}

/// Suite report. `seed` is recorded when the run used the corpus.
pub fn suite_report_json(result: &SuiteResult, seed: Option<u64>) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "passed": result.passed(),
        "summary": result.summary,
        "reports": result.reports,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Plain-text summary table of a suite run.
pub fn suite_table(result: &SuiteResult) -> String {
    let mut out = format!("{:<16} {:>6} {:>6} {:>6}  note\n", "check", "pass", "fail", "n/a");
    for (id, s) in &result.summary {
        let note = if s.report_only { "report-only" } else { "" };
        let _ = writeln!(
            out,
            "{id:<16} {:>6} {:>6} {:>6}  {note}",
            s.pass, s.fail, s.not_applicable
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Budget;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn abelian_round_trip() {
        let l = catalog::abelian(2, f(2));
        let text = emit_spec(&l);
        assert!(text.contains("\"brackets\": []"));
        assert_eq!(parse_spec(&text).unwrap(), AnyAlgebra::Prime(l));
    }

    #[test]
    fn single_entry_is_cyclic_nilpotent() {
        let text = r#"{"name":"c","field":{"type":"prime","p":3},"dim":2,"brackets":[[0,0,1,"1"]]}"#;
        let AnyAlgebra::Prime(l) = parse_spec(text).unwrap() else {
            panic!()
        };
        assert_eq!(l.tensor(), catalog::cyclic_nilpotent(2, f(3)).unwrap().tensor());
    }

    #[test]
    fn identity_violation_names_triple() {
        let text = r#"{"name":"bad","field":{"type":"prime","p":3},"dim":2,
            "brackets":[[0,0,1,"1"],[1,0,1,"1"],[0,1,0,"1"]]}"#;
        assert!(matches!(parse_spec(text), Err(Error::NotLeibniz(..))));
    }

    #[test]
    fn schema_errors() {
        let e = parse_spec(r#"{"name":"x","field":{"type":"prime","p":3},"dim":2}"#).unwrap_err();
        assert!(
            e.to_string().contains("brackets") && e.to_string().contains("line"),
            "{e}"
        );
        let e = parse_spec(r#"{"name":"x","field":{"type":"prime","p":4},"dim":1,"brackets":[]}"#).unwrap_err();
        assert_eq!(e, Error::InvalidPrime(4));
        let e =
            parse_spec(r#"{"name":"x","field":{"type":"prime","p":3},"dim":1,"brackets":[[0,1,0,"1"]]}"#).unwrap_err();
        assert!(e.to_string().contains("brackets[0]") && e.to_string().contains("out of range"));
        let e = parse_spec(r#"{"name":"x","field":{"type":"prime","p":3},"dim":1,"brackets":[[0,0,0,"1/2"]]}"#)
            .unwrap_err();
        assert!(e.to_string().contains("decimal integer"));
    }

    #[test]
    fn rationals_round_trip() {
        let l = catalog::family_sqrt(1, 2, Rationals).unwrap();
        let text = emit_spec(&l);
        assert!(text.contains("\"type\":\"rational\""));
        assert_eq!(parse_spec(&text).unwrap(), AnyAlgebra::Rational(l));
    }

    #[test]
    fn dot_export_of_m3() {
        let lat = SubalgebraLattice::new(&catalog::abelian(2, f(2)), &Budget::default()).unwrap();
        let dot = export_dot(&lat);
        assert_eq!(dot.matches("->").count(), 6);
        assert_eq!(dot.matches("[label=").count(), 5);
        assert!(dot.contains("label=\"0:[]\""));
    }

    #[test]
    fn chain_dot_export() {
        let lat = SubalgebraLattice::new(&catalog::cyclic_nilpotent(2, f(2)).unwrap(), &Budget::default()).unwrap();
        assert_eq!(export_dot(&lat).matches("->").count(), 2);
    }
}
