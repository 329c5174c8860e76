//! Acceptance run: one `PASS`/`FAIL` line per criterion, exit status 1 if any
//! criterion fails. Oracles here use raw structure constants and subspace
//! membership only.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use leibniz_core::catalog::{self, random_invertible, rng_for, CorpusMember};
use leibniz_core::lattice::{enumerate_subalgebras, wqi_elementwise};
use leibniz_core::linalg::enumerate_subspaces;
use leibniz_core::structure::{
    center, classify_shape, derived_algebra, is_solvable, leibniz_kernel, square_zero_subalgebra, ShapeClass,
};
use leibniz_core::verify::{run_suite, Status};
use leibniz_core::{par, Budget, Field, LeibnizAlgebra, PrimeField, SubalgebraLattice, Subspace, Vector};

type L = LeibnizAlgebra<PrimeField>;
type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn budget() -> Budget {
    Budget::default()
}

fn lattice(l: &L) -> SubalgebraLattice<PrimeField> {
    SubalgebraLattice::new(l, &budget()).unwrap()
}

fn naive_bracket(l: &L, x: &[u32], y: &[u32]) -> Vector<PrimeField> {
    let f = l.field();
    let n = l.dim();
    let mut out = vec![f.zero(); n];
    for (i, xi) in x.iter().enumerate().take(n) {
        for (j, yj) in y.iter().enumerate().take(n) {
            let s = f.mul(xi, yj);
            for (k, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(&s, l.tensor().get(i, j, k)));
            }
        }
    }
    out
}

fn naive_is_subalgebra(l: &L, s: &Subspace<PrimeField>) -> bool {
    let b = s.basis_vectors();
    b.iter()
        .all(|x| b.iter().all(|y| s.contains(&naive_bracket(l, x, y)).unwrap()))
}

fn naive_closure(l: &L, s: &Subspace<PrimeField>) -> Subspace<PrimeField> {
    let mut s = s.clone();
    loop {
        let b = s.basis_vectors();
        let mut grown = s.clone();
        for x in &b {
            for y in &b {
                grown.insert(&naive_bracket(l, x, y)).unwrap();
            }
        }
        if grown == s {
            return s;
        }
        s = grown;
    }
}

fn brute_subalgebras(l: &L) -> Vec<Subspace<PrimeField>> {
    enumerate_subspaces(*l.field(), l.dim(), &budget())
        .unwrap()
        .into_iter()
        .filter(|s| naive_is_subalgebra(l, s))
        .collect()
}

/// `a < b` with no subalgebra strictly between.
fn naive_cover(subs: &[Subspace<PrimeField>], a: &Subspace<PrimeField>, b: &Subspace<PrimeField>) -> bool {
    a != b
        && a.leq(b).unwrap()
        && !subs
            .iter()
            .any(|s| s != a && s != b && a.leq(s).unwrap() && s.leq(b).unwrap())
}

fn span(l: &L, vs: &[Vector<PrimeField>]) -> Subspace<PrimeField> {
    Subspace::from_vectors(*l.field(), l.dim(), vs).unwrap()
}

fn timed(limit: Option<Duration>, start: Instant, detail: String) -> Outcome {
    let t = start.elapsed();
    match limit {
        Some(max) if t > max => Err(format!("{detail}; took {t:.2?}, limit {max:?}")),
        _ => Ok(format!("{detail}; {t:.2?}")),
    }
}

fn criterion_1(corpus: &[CorpusMember]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for m in corpus {
        let l = &m.algebra;
        if (m.provenance.p as u64).pow(l.dim() as u32) > 81 {
            continue;
        }
        let lib: BTreeSet<String> = enumerate_subalgebras(l, &budget())
            .map_err(|e| format!("{}: {e}", l.name()))?
            .nodes()
            .iter()
            .map(Subspace::label)
            .collect();
        let brute: BTreeSet<String> = brute_subalgebras(l).iter().map(Subspace::label).collect();
        if lib != brute {
            return Err(format!("{}: library and brute-force subalgebra sets differ", l.name()));
        }
        checked += 1;
    }
    timed(
        Some(Duration::from_secs(10)),
        start,
        format!("{checked} algebras, sets equal"),
    )
}

fn criterion_2(corpus: &[CorpusMember]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut dim2_f2 = 0;
    for m in corpus.iter().filter(|m| m.provenance.p <= 3) {
        let l = &m.algebra;
        let elem = wqi_elementwise(l, &budget()).map_err(|e| e.to_string())?;
        let sub = lattice(l).all_subalgebras_wqi();
        if elem != sub {
            return Err(format!("{}: elementwise {elem}, subalgebra-level {sub}", l.name()));
        }
        checked += 1;
        dim2_f2 += usize::from(m.provenance.family.is_none());
    }
    if checked < 60 || dim2_f2 != catalog::exhaustive_dim2().len() {
        return Err(format!("only {checked} algebras ({dim2_f2} from the dim-2 sweep)"));
    }
    timed(
        Some(Duration::from_secs(30)),
        start,
        format!("{checked} algebras over F_2/F_3 incl. {dim2_f2} dim-2 F_2, verdicts agree"),
    )
}

/// Stated closed forms, checked as written: phi(cyclic_nilpotent(n)) = L^2
/// and phi(cyclic_solvable(n)) = sum_{i=2}^n F(a^i - a^{i-1}). With basis
/// a^1, ..., a^n the power a^i is the unit vector e_{i-1}.
fn criterion_3() -> Outcome {
    let mut mismatches = Vec::new();
    for p in [2, 3] {
        let f = field(p);
        for n in 2..=4 {
            let l = catalog::cyclic_nilpotent(n, f).unwrap();
            let phi = lattice(&l).frattini_ideal();
            if phi != derived_algebra(&l) {
                mismatches.push(format!("{}: phi {} != L^2", l.name(), phi.label()));
            }
            let l = catalog::cyclic_solvable(n, f).unwrap();
            let phi = lattice(&l).frattini_ideal();
            let gens: Vec<Vector<PrimeField>> = (2..=n)
                .map(|i| {
                    let mut v = l.zero_vector();
                    v[i - 1] = f.one();
                    v[i - 2] = f.neg(&f.one());
                    v
                })
                .collect();
            let stated = span(&l, &gens);
            if phi != stated {
                mismatches.push(format!(
                    "{}: phi {} != stated {}",
                    l.name(),
                    phi.label(),
                    stated.label()
                ));
            }
        }
    }
    if mismatches.is_empty() {
        Ok("12 algebras match".into())
    } else {
        Err(format!(
            "{} of 12 mismatch: {}",
            mismatches.len(),
            mismatches.join("; ")
        ))
    }
}

fn criterion_4(corpus: &[CorpusMember]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for m in corpus {
        let l = &m.algebra;
        if l.dim() > 4 || !is_solvable(l) {
            continue;
        }
        let lat = lattice(l);
        let v = (lat.is_modular(), lat.is_upper_semimodular(), lat.all_subalgebras_wqi());
        if v.0 != v.1 || v.1 != v.2 {
            return Err(format!("{}: modular/USM/all-WQI = {v:?}", l.name()));
        }
        checked += 1;
    }
    timed(
        Some(Duration::from_secs(120)),
        start,
        format!("{checked} solvable algebras, zero violations"),
    )
}

fn criterion_5(corpus: &[CorpusMember]) -> Outcome {
    let ids = [
        "thm-abalab",
        "prop-usm2",
        "thm-alab",
        "thm-ideal",
        "cor-J-span",
        "lem-two",
        "lem-three",
    ];
    let r = run_suite(corpus, &ids, &budget()).map_err(|e| e.to_string())?;
    let fails: Vec<String> = r
        .hard_failures()
        .iter()
        .map(|t| format!("{} on {}", t.check, t.algebra))
        .collect();
    if !fails.is_empty() {
        return Err(format!("{} fails: {}", fails.len(), fails.join("; ")));
    }
    let abalab = &r.summary["thm-abalab"];
    if abalab.pass + abalab.fail < 10 {
        return Err(format!(
            "only {} members applicable to thm-abalab",
            abalab.pass + abalab.fail
        ));
    }
    // Characteristic 2 must never reach the thm-ideal conclusion.
    if r.reports.iter().any(|t| {
        t.check == "thm-ideal" && t.algebra.contains("/F_2") && !matches!(t.status, Status::NotApplicable { .. })
    }) {
        return Err("thm-ideal applied over F_2".into());
    }
    let summary: Vec<String> = ids
        .iter()
        .map(|id| format!("{id} {}/{}", r.summary[*id].pass, r.summary[*id].not_applicable))
        .collect();
    Ok(format!("zero fails (pass/n.a.: {})", summary.join(", ")))
}

fn quotient_shape(l: &L) -> Result<(bool, ShapeClass), String> {
    let lat = lattice(l);
    let phi = lat.frattini_ideal();
    let q = l.quotient(&phi).map_err(|e| e.to_string())?;
    Ok((lat.all_subalgebras_wqi(), classify_shape(&q.algebra).class))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut check = |l: L, want: ShapeClass| -> Result<(), String> {
        let (wqi, class) = quotient_shape(&l)?;
        checked += 1;
        if !wqi || class != want {
            return Err(format!("{}: all-WQI {wqi}, L/phi is {}", l.name(), class.as_str()));
        }
        Ok(())
    };
    for p in [2, 3] {
        for k in 2..=3 {
            for m in 0..=2 {
                check(
                    catalog::family_nonlie_ii(k, m, field(p)).unwrap(),
                    ShapeClass::AlmostAbelianNonlie,
                )?;
            }
        }
    }
    for p in [3, 5] {
        for k in 1..=2 {
            for m in 1..=2 {
                check(
                    catalog::family_sqrt(k, m, field(p)).unwrap(),
                    ShapeClass::AlmostAbelianLie,
                )?;
            }
        }
    }
    Ok(format!("{checked} algebras all-WQI with the expected L/phi shape"))
}

fn criterion_7() -> Outcome {
    let mut algebras = Vec::new();
    for p in [3, 5] {
        for m in 1..=2 {
            algebras.push(catalog::symmetric_iv(m, field(p)).unwrap());
        }
        for z in 0..=1 {
            algebras.push(catalog::extraspecial_plus_center(field(p), z).unwrap());
        }
    }
    for l in &algebras {
        if !l.is_symmetric() || !lattice(l).is_modular() {
            return Err(format!(
                "{}: symmetric {}, modular {}",
                l.name(),
                l.is_symmetric(),
                lattice(l).is_modular()
            ));
        }
    }
    Ok(format!("{} algebras symmetric and modular", algebras.len()))
}

/// Replays each witness against the brute-force subalgebra list.
fn criterion_8() -> Outcome {
    let mut lines = Vec::new();
    for p in [2, 3] {
        let l = catalog::heisenberg_lie(field(p));
        let lat = lattice(&l);
        let subs = brute_subalgebras(&l);
        let node = |i: usize| lat.node(i).clone();
        let gen = |a: &Subspace<PrimeField>, b: &Subspace<PrimeField>| naive_closure(&l, &a.sum(b).unwrap());

        let witnesses = (
            lat.modular_violation(),
            lat.upper_semimodular_violation(),
            lat.wqi_violation(),
        );
        par::set_sequential(true);
        let again = (
            lat.modular_violation(),
            lat.upper_semimodular_violation(),
            lat.wqi_violation(),
        );
        par::set_sequential(false);
        let relattice = lattice(&l);
        let third = (
            relattice.modular_violation(),
            relattice.upper_semimodular_violation(),
            relattice.wqi_violation(),
        );
        if witnesses != again || witnesses != third {
            return Err(format!("{}: witnesses not reproducible", l.name()));
        }

        let [u, v, w] = witnesses.0.ok_or(format!("{}: reported modular", l.name()))?;
        let (u, v, w) = (node(u), node(v), node(w));
        let lhs = gen(&u, &v).intersection(&w).unwrap();
        let rhs = gen(&u, &v.intersection(&w).unwrap());
        if !u.leq(&w).unwrap() || lhs == rhs {
            return Err(format!("{}: modular witness does not replay", l.name()));
        }

        let [u, b] = witnesses
            .1
            .ok_or(format!("{}: reported upper semi-modular", l.name()))?;
        let (u, b) = (node(u), node(b));
        if !naive_cover(&subs, &u.intersection(&b).unwrap(), &b) || naive_cover(&subs, &u, &gen(&u, &b)) {
            return Err(format!("{}: semi-modularity witness does not replay", l.name()));
        }

        let [a, b] = witnesses.2.ok_or(format!("{}: reported all-WQI", l.name()))?;
        let (a, b) = (node(a), node(b));
        let sum = a.sum(&b).unwrap();
        let escapes = a.basis_vectors().iter().any(|x| {
            b.basis_vectors().iter().any(|y| {
                !sum.contains(&naive_bracket(&l, x, y)).unwrap() || !sum.contains(&naive_bracket(&l, y, x)).unwrap()
            })
        });
        if !escapes {
            return Err(format!("{}: WQI witness does not replay", l.name()));
        }
        lines.push(format!(
            "{}: modular {}, USM {}, WQI {}",
            l.name(),
            fmt3(witnesses.0),
            fmt2(witnesses.1),
            fmt2(witnesses.2)
        ));
    }
    Ok(lines.join("; "))
}

fn fmt3(w: Option<[usize; 3]>) -> String {
    format!("{:?}", w.unwrap())
}

fn fmt2(w: Option<[usize; 2]>) -> String {
    format!("{:?}", w.unwrap())
}

#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    kernel: usize,
    j: usize,
    center: usize,
    verdicts: [bool; 4],
}

fn invariants(l: &L) -> Invariants {
    let lat = lattice(l);
    Invariants {
        kernel: leibniz_kernel(l).dim(),
        j: square_zero_subalgebra(l, &budget()).unwrap().j.dim(),
        center: center(l).dim(),
        verdicts: [
            lat.is_modular(),
            lat.is_upper_semimodular(),
            lat.is_lower_semimodular_lattice(),
            lat.all_subalgebras_wqi(),
        ],
    }
}

fn criterion_9(corpus: &[CorpusMember]) -> Outcome {
    const CHANGES: usize = 50;
    let start = Instant::now();
    let failures = par::map_slice(corpus, |m| {
        let l = &m.algebra;
        let i = leibniz_kernel(l);
        let q = l.quotient(&i).unwrap();
        if !q.algebra.is_lie() {
            return Some(format!("{}: L/I is not Lie", l.name()));
        }
        if !l.product_space(&l.full_subspace(), &i).unwrap().is_zero() {
            return Some(format!("{}: [L,I] != 0", l.name()));
        }
        let base = invariants(l);
        let mut rng = rng_for(
            9,
            l.name()
                .bytes()
                .fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64)),
        );
        for c in 0..CHANGES {
            let t = l
                .change_of_basis(&random_invertible(l.field(), l.dim(), &mut rng))
                .unwrap();
            let got = invariants(&t);
            if got != base {
                return Some(format!("{} change {c}: {got:?} != {base:?}", l.name()));
            }
        }
        None
    });
    let failures: Vec<String> = failures.into_iter().flatten().collect();
    if !failures.is_empty() {
        return Err(format!("{} violations: {}", failures.len(), failures.join("; ")));
    }
    timed(
        None,
        start,
        format!("{} algebras x {CHANGES} basis changes, zero violations", corpus.len()),
    )
}

fn criterion_10() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_leibniz"))
            .args(["verify", "--corpus", "--seed", "7", "--json"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        if !o.status.success() {
            return Err(format!("run {run} exited with {}", o.status));
        }
        outputs.push((std::fs::read(&path).map_err(|e| e.to_string())?, o.stdout));
    }
    if outputs[0] != outputs[1] {
        return Err("JSON reports or summaries differ between runs".into());
    }
    Ok(format!(
        "two runs byte-identical ({} bytes of JSON)",
        outputs[0].0.len()
    ))
}

fn main() {
    let corpus = catalog::corpus(0);
    let criteria: Vec<Criterion> = vec![
        ("enumeration oracle", Box::new(|| criterion_1(&corpus))),
        ("elementwise WQI equivalence", Box::new(|| criterion_2(&corpus))),
        ("cyclic Frattini closed forms", Box::new(criterion_3)),
        (
            "solvable modular/USM/all-WQI equivalence",
            Box::new(|| criterion_4(&corpus)),
        ),
        ("structure suite has zero fails", Box::new(|| criterion_5(&corpus))),
        ("non-Lie and sqrt sufficiency", Box::new(criterion_6)),
        ("symmetric sufficiency", Box::new(criterion_7)),
        ("Heisenberg negative control", Box::new(criterion_8)),
        ("kernel laws and basis invariance", Box::new(|| criterion_9(&corpus))),
        ("verify determinism", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
