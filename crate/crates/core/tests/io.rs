mod common;

use common::{corpus, f};
use leibniz_core::any::AnyAlgebra;
use leibniz_core::catalog;
use leibniz_core::io::{
    emit_spec, export_dot, lattice_report_json, parse_spec, structure_report_json, suite_report_json, SCHEMA_VERSION,
};
use leibniz_core::structure::{structure_report, structure_report_finite};
use leibniz_core::verify::run_suite;
use leibniz_core::{Budget, Error, Rationals, SubalgebraLattice};

#[test]
fn spec_round_trip_on_corpus() {
    for m in corpus() {
        let text = emit_spec(&m.algebra);
        assert_eq!(text, emit_spec(&m.algebra));
        match parse_spec(&text).unwrap() {
            AnyAlgebra::Prime(l) => {
                assert_eq!(l.tensor(), m.algebra.tensor());
                assert_eq!(l.name(), m.algebra.name());
                assert_eq!(emit_spec(&l), text);
            }
            AnyAlgebra::Rational(_) => panic!("field changed"),
        }
    }
}

#[test]
fn entries_are_sorted_and_reduced() {
    let text = r#"{"name":"c","field":{"type":"prime","p":3},"dim":2,
        "brackets":[[1,0,1,"0"],[0,0,1,"4"]]}"#;
    let AnyAlgebra::Prime(l) = parse_spec(text).unwrap() else {
        panic!()
    };
    assert_eq!(l.tensor(), catalog::cyclic_nilpotent(2, f(3)).unwrap().tensor());
    assert!(emit_spec(&l).contains("[0,0,1,\"1\"]"));
}

#[test]
fn rational_values() {
    let text = r#"{"name":"q","field":{"type":"rational"},"dim":2,"brackets":[[0,1,0,"2/4"],[1,0,0,"-1/2"]]}"#;
    let AnyAlgebra::Rational(l) = parse_spec(text).unwrap() else {
        panic!()
    };
    assert!(l.is_lie());
    let out = emit_spec(&l);
    assert!(out.contains("\"1/2\"") && out.contains("\"-1/2\""));
    let bad = r#"{"name":"q","field":{"type":"rational"},"dim":1,"brackets":[[0,0,0,"1/0"]]}"#;
    assert!(matches!(parse_spec(bad), Err(Error::Parse(_))));
    // Over Q the lattice is unavailable; the generic report still works.
    let r = structure_report(&catalog::family_sqrt(2, 1, Rationals).unwrap());
    assert_eq!(structure_report_json(&r)["square_zero"], serde_json::Value::Null);
}

#[test]
fn schema_violations_are_positioned() {
    for text in [
        "{",
        r#"{"name":1,"field":{"type":"prime","p":3},"dim":1,"brackets":[]}"#,
        r#"{"name":"x","field":{"type":"complex"},"dim":1,"brackets":[]}"#,
        r#"{"name":"x","field":{"type":"prime","p":3},"dim":1,"brackets":[],"extra":0}"#,
    ] {
        let e = parse_spec(text).unwrap_err();
        assert!(matches!(&e, Error::Parse(m) if m.contains("line")), "{e}");
    }
    let dup = r#"{"name":"x","field":{"type":"prime","p":3},"dim":1,"brackets":[[0,0,0,"0"],[0,0,0,"0"]]}"#;
    assert!(parse_spec(dup).unwrap_err().to_string().contains("duplicate"));
}

#[test]
fn dot_exports() {
    let h = catalog::heisenberg_lie(f(2));
    let lat = SubalgebraLattice::new(&h, &Budget::default()).unwrap();
    let dot = export_dot(&lat);
    assert_eq!(dot.matches("->").count(), 19);
    assert_eq!(
        dot,
        export_dot(&SubalgebraLattice::new(&h, &Budget::default()).unwrap())
    );
    assert!(dot.starts_with("digraph") && dot.contains("n0 [label=\"0:[]\"]"));
}

#[test]
fn json_reports_carry_schema_version() {
    let l = catalog::cyclic_solvable(3, f(3)).unwrap();
    let lat = SubalgebraLattice::new(&l, &Budget::default()).unwrap();
    let v = lattice_report_json(&lat);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["verdicts"]["modular"], true);
    assert_eq!(v["stats"]["nodes"], 8);
    let r = structure_report_finite(&l, &Budget::default()).unwrap();
    let v = structure_report_json(&r);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["frattini"], "1:[0,1,2]");
    let s = run_suite(&corpus()[..4], &["lem-qi"], &Budget::default()).unwrap();
    let v = suite_report_json(&s, Some(0));
    assert_eq!(
        (v["schema_version"].as_u64(), v["seed"].as_u64()),
        (Some(SCHEMA_VERSION as u64), Some(0))
    );
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
}
