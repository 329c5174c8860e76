//! Named algebra families, the exhaustive 2-dimensional sweep over F_2, and
//! the seeded verification corpus.
//!
//! Basis conventions are 0-based. Cyclic parts use `e_{i-1} = x^i`; where an
//! abelian ideal `A` is present its basis comes first.
//!
//! | family | basis | nonzero products |
//! |---|---|---|
//! | `cyclic_nilpotent(n)` | `a^1..a^n` | `[a^i, a] = a^{i+1}` |
//! | `cyclic_solvable(n)` | `a^1..a^n` | as above, plus `[a^n, a] = a^n` |
//! | `almost_abelian_lie(n)` | `a_1..a_{n-1}, y` | `[a, y] = a`, `[y, a] = -a` |
//! | `almost_abelian_nonlie(n)` | `a_1..a_{n-1}, y` | `[a, y] = a` |
//! | `family_nonlie_ii(k, m)` | `a_1..a_m, x..x^k` | `[x^i, x] = x^{i+1}`, `[x^k, x] = x^k`, `[a, x] = a` |
//! | `family_sqrt(k, m)` | `a_1..a_m, x..x^k` | `[x^i, x] = x^{i+1}` (`i < k`), `[a, x] = a`, `[x, a] = -a` |
//! | `symmetric_iv(m)` | `b_1..b_m, y, y^2` | `[b, y] = b`, `[y, b] = -b`, `[y, y] = y^2` |
//! | `extraspecial_plus_center(z)` | `e, e^2, z_1..z_z` | `[e, e] = e^2` |
//! | `heisenberg_lie` | `x, y, z` | `[x, y] = z = -[y, x]` |

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{LeibnizAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::Matrix;
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Abelian,
    CyclicNilpotent,
    CyclicSolvable,
    AlmostAbelianLie,
    AlmostAbelianNonlie,
    FamilyNonlieIi,
    FamilySqrt,
    SymmetricIv,
    ExtraspecialPlusCenter,
    HeisenbergLie,
}

pub struct FamilyInfo {
    pub family: Family,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        family: Family::Abelian,
        params: &["n"],
        summary: "all products zero",
    },
    FamilyInfo {
        family: Family::CyclicNilpotent,
        params: &["n"],
        summary: "[a^i,a] = a^{i+1}, n >= 1",
    },
    FamilyInfo {
        family: Family::CyclicSolvable,
        params: &["n"],
        summary: "[a^i,a] = a^{i+1}, [a^n,a] = a^n, n >= 2",
    },
    FamilyInfo {
        family: Family::AlmostAbelianLie,
        params: &["n"],
        summary: "A + Fy, [a,y] = a = -[y,a], n >= 2",
    },
    FamilyInfo {
        family: Family::AlmostAbelianNonlie,
        params: &["n"],
        summary: "A + Fy, [a,y] = a, [y,a] = 0, n >= 2",
    },
    FamilyInfo {
        family: Family::FamilyNonlieIi,
        params: &["k", "m"],
        summary: "A + <x>, x^{k+1} = x^k, [a,x] = a, k >= 2",
    },
    FamilyInfo {
        family: Family::FamilySqrt,
        params: &["k", "m"],
        summary: "A + <x>, x^{k+1} = 0, [a,x] = a = -[x,a], k >= 1, m >= 1, char != 2",
    },
    FamilyInfo {
        family: Family::SymmetricIv,
        params: &["m"],
        summary: "B + Fy + Fy^2, [b,y] = b = -[y,b], m >= 1, char != 2",
    },
    FamilyInfo {
        family: Family::ExtraspecialPlusCenter,
        params: &["z_dim"],
        summary: "E + Z with E: e^2 = z_E, Z central abelian",
    },
    FamilyInfo {
        family: Family::HeisenbergLie,
        params: &[],
        summary: "[x,y] = z = -[y,x]",
    },
];

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Abelian => "abelian",
            Family::CyclicNilpotent => "cyclic_nilpotent",
            Family::CyclicSolvable => "cyclic_solvable",
            Family::AlmostAbelianLie => "almost_abelian_lie",
            Family::AlmostAbelianNonlie => "almost_abelian_nonlie",
            Family::FamilyNonlieIi => "family_nonlie_ii",
            Family::FamilySqrt => "family_sqrt",
            Family::SymmetricIv => "symmetric_iv",
            Family::ExtraspecialPlusCenter => "extraspecial_plus_center",
            Family::HeisenbergLie => "heisenberg_lie",
        }
    }

    pub fn info(&self) -> &'static FamilyInfo {
        FAMILIES
            .iter()
            .find(|i| i.family == *self)
            .expect("every family is listed")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FAMILIES
            .iter()
            .map(|i| i.family)
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilySpec {
            family,
            params: params.to_vec(),
        }
    }

    /// Whether the member satisfies the left identity as well. For cyclic
    /// parts this needs `x^3 = 0`: `[x,[x,x]] = 0` but
    /// `[[x,x],x] + [x,[x,x]] = x^3`.
    pub fn symmetric(&self) -> bool {
        match self.family {
            Family::Abelian
            | Family::AlmostAbelianLie
            | Family::SymmetricIv
            | Family::ExtraspecialPlusCenter
            | Family::HeisenbergLie => true,
            Family::CyclicNilpotent => self.params.first().is_some_and(|&n| n <= 2),
            Family::FamilySqrt => self.params.first().is_some_and(|&k| k <= 2),
            _ => false,
        }
    }

    pub fn build<F: Field>(&self, field: F) -> Result<LeibnizAlgebra<F>> {
        let expected = self.family.info().params.len();
        if self.params.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "{} takes {expected} parameter(s) ({}), got {}",
                self.family,
                self.family.info().params.join(", "),
                self.params.len()
            )));
        }
        let p = &self.params;
        match self.family {
            Family::Abelian => Ok(abelian(p[0], field)),
            Family::CyclicNilpotent => cyclic_nilpotent(p[0], field),
            Family::CyclicSolvable => cyclic_solvable(p[0], field),
            Family::AlmostAbelianLie => almost_abelian_lie(p[0], field),
            Family::AlmostAbelianNonlie => almost_abelian_nonlie(p[0], field),
            Family::FamilyNonlieIi => family_nonlie_ii(p[0], p[1], field),
            Family::FamilySqrt => family_sqrt(p[0], p[1], field),
            Family::SymmetricIv => symmetric_iv(p[0], field),
            Family::ExtraspecialPlusCenter => extraspecial_plus_center(field, p[0]),
            Family::HeisenbergLie => Ok(heisenberg_lie(field)),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.family, ps.join(","))
    }
}

type Entry<F> = (usize, usize, usize, <F as Field>::Elem);

fn named<F: Field>(name: String, field: F, dim: usize, entries: Vec<Entry<F>>) -> Result<LeibnizAlgebra<F>> {
    let tag = format!("{name}/{field}");
    LeibnizAlgebra::from_entries(tag, field, dim, &entries)
}

fn param_error(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn require_odd_characteristic<F: Field>(field: &F, family: &str) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(param_error(format!("{family} requires characteristic != 2")));
    }
    Ok(())
}

/// Powers of `x` at `offset..offset+k`: `[x^i, x] = x^{i+1}` for `i < k`.
fn cyclic_entries<F: Field>(field: &F, offset: usize, k: usize) -> Vec<Entry<F>> {
    (0..k.saturating_sub(1))
        .map(|i| (offset + i, offset, offset + i + 1, field.one()))
        .collect()
}

pub fn abelian<F: Field>(n: usize, field: F) -> LeibnizAlgebra<F> {
    named(format!("abelian({n})"), field, n, vec![]).expect("zero tensor is valid")
}

pub fn cyclic_nilpotent<F: Field>(n: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    if n < 1 {
        return Err(param_error("cyclic_nilpotent needs n >= 1".into()));
    }
    let e = cyclic_entries(&field, 0, n);
    named(format!("cyclic_nilpotent({n})"), field, n, e)
}

pub fn cyclic_solvable<F: Field>(n: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    if n < 2 {
        return Err(param_error(
            "cyclic_solvable needs n >= 2 ([a,a] = a violates the Leibniz identity)".into(),
        ));
    }
    let mut e = cyclic_entries(&field, 0, n);
    e.push((n - 1, 0, n - 1, field.one()));
    named(format!("cyclic_solvable({n})"), field, n, e)
}

fn almost_abelian<F: Field>(n: usize, field: F, lie: bool) -> Result<LeibnizAlgebra<F>> {
    let name = if lie {
        "almost_abelian_lie"
    } else {
        "almost_abelian_nonlie"
    };
    if n < 2 {
        return Err(param_error(format!("{name} needs n >= 2")));
    }
    let y = n - 1;
    let mut e = Vec::new();
    for a in 0..y {
        e.push((a, y, a, field.one()));
        if lie {
            e.push((y, a, a, field.from_i64(-1)));
        }
    }
    named(format!("{name}({n})"), field, n, e)
}

pub fn almost_abelian_lie<F: Field>(n: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    almost_abelian(n, field, true)
}

pub fn almost_abelian_nonlie<F: Field>(n: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    almost_abelian(n, field, false)
}

pub fn family_nonlie_ii<F: Field>(k: usize, m: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    if k < 2 {
        return Err(param_error("family_nonlie_ii needs k >= 2".into()));
    }
    let x = m;
    let mut e = cyclic_entries(&field, x, k);
    e.push((x + k - 1, x, x + k - 1, field.one()));
    for a in 0..m {
        e.push((a, x, a, field.one()));
    }
    named(format!("family_nonlie_ii({k},{m})"), field, k + m, e)
}

pub fn family_sqrt<F: Field>(k: usize, m: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    require_odd_characteristic(&field, "family_sqrt")?;
    if k < 1 || m < 1 {
        return Err(param_error("family_sqrt needs k >= 1 and m >= 1".into()));
    }
    let x = m;
    let mut e = cyclic_entries(&field, x, k);
    for a in 0..m {
        e.push((a, x, a, field.one()));
        e.push((x, a, a, field.from_i64(-1)));
    }
    named(format!("family_sqrt({k},{m})"), field, k + m, e)
}

pub fn symmetric_iv<F: Field>(m: usize, field: F) -> Result<LeibnizAlgebra<F>> {
    require_odd_characteristic(&field, "symmetric_iv")?;
    if m < 1 {
        return Err(param_error("symmetric_iv needs m >= 1".into()));
    }
    let (y, y2) = (m, m + 1);
    let mut e = vec![(y, y, y2, field.one())];
    for b in 0..m {
        e.push((b, y, b, field.one()));
        e.push((y, b, b, field.from_i64(-1)));
    }
    named(format!("symmetric_iv({m})"), field, m + 2, e)
}

pub fn extraspecial_plus_center<F: Field>(field: F, z_dim: usize) -> Result<LeibnizAlgebra<F>> {
    let e = vec![(0, 0, 1, field.one())];
    named(format!("extraspecial_plus_center({z_dim})"), field, 2 + z_dim, e)
}

pub fn heisenberg_lie<F: Field>(field: F) -> LeibnizAlgebra<F> {
    let e = vec![(0, 1, 2, field.one()), (1, 0, 2, field.from_i64(-1))];
    named("heisenberg_lie".into(), field, 3, e).expect("Heisenberg is a Lie algebra")
}

/// Every right Leibniz algebra structure on F_2^2: all 256 tensors, filtered
/// by the identity.
pub fn exhaustive_dim2() -> Vec<LeibnizAlgebra<PrimeField>> {
    let f2 = PrimeField::new(2).expect("2 is prime");
    par::map_range(0..256, |bits| {
        let mut t = StructureTensor::zero(f2, 2);
        for pos in 0..8 {
            let v = (bits >> pos) as u32 & 1;
            t.set(pos / 4, (pos / 2) % 2, pos % 2, v).expect("indices < 2");
        }
        LeibnizAlgebra::new(format!("dim2_f2_{bits:03}/F_2"), t).ok()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// A random invertible matrix drawn with `Field::random`.
pub fn random_invertible<F: Field, R: rand::Rng>(field: &F, n: usize, rng: &mut R) -> Matrix<F> {
    loop {
        let data = (0..n * n).map(|_| field.random(rng)).collect();
        let m = Matrix::new(field.clone(), n, n, data).expect("n*n entries");
        if m.rank() == n {
            return m;
        }
    }
}

/// Deterministic RNG for `(seed, stream)`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Provenance of a corpus member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// `None` for members of the exhaustive sweep.
    pub family: Option<FamilySpec>,
    pub p: u32,
    pub seed: u64,
    /// 0 for the constructor's own basis, `1..` for random basis changes.
    pub basis_change: usize,
}

#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub algebra: LeibnizAlgebra<PrimeField>,
    pub provenance: Provenance,
}

/// Number of random re-emissions of each family member.
pub const CORPUS_BASIS_CHANGES: usize = 3;

/// Family parameters used in the corpus over `F_p`: dimension at most 4 for
/// p <= 3 and at most 3 for p = 5.
pub fn corpus_specs(p: u32) -> Vec<FamilySpec> {
    let max_dim = if p <= 3 { 4 } else { 3 };
    let mut specs = Vec::new();
    let mut push = |family, params: &[usize], dim: usize| {
        if dim <= max_dim {
            specs.push(FamilySpec::new(family, params));
        }
    };
    for n in 1..=4 {
        push(Family::Abelian, &[n], n);
        push(Family::CyclicNilpotent, &[n], n);
        if n >= 2 {
            push(Family::CyclicSolvable, &[n], n);
            push(Family::AlmostAbelianLie, &[n], n);
            push(Family::AlmostAbelianNonlie, &[n], n);
        }
    }
    for k in 2..=3 {
        for m in 0..=2 {
            push(Family::FamilyNonlieIi, &[k, m], k + m);
        }
    }
    if p != 2 {
        for k in 1..=3 {
            for m in 1..=3 {
                push(Family::FamilySqrt, &[k, m], k + m);
            }
        }
        for m in 1..=2 {
            push(Family::SymmetricIv, &[m], m + 2);
        }
    }
    for z in 0..=2 {
        push(Family::ExtraspecialPlusCenter, &[z], z + 2);
    }
    push(Family::HeisenbergLie, &[], 3);
    specs
}

/// The verification corpus: every family member from [`corpus_specs`] over
/// F_2, F_3 and F_5, each followed by [`CORPUS_BASIS_CHANGES`] random changes
/// of basis, then the exhaustive 2-dimensional sweep over F_2.
pub fn corpus(seed: u64) -> Vec<CorpusMember> {
    let mut jobs = Vec::new();
    for p in [2u32, 3, 5] {
        for spec in corpus_specs(p) {
            jobs.push((p, spec));
        }
    }
    let groups = par::map_range(0..jobs.len(), |idx| {
        let (p, spec) = &jobs[idx];
        let field = PrimeField::new(*p).expect("corpus primes are valid");
        let base = spec.build(field).expect("corpus parameters are valid");
        let mut rng = rng_for(seed, idx as u64);
        let mut out = Vec::with_capacity(1 + CORPUS_BASIS_CHANGES);
        for bc in 0..=CORPUS_BASIS_CHANGES {
            let algebra = if bc == 0 {
                base.clone()
            } else {
                let m = random_invertible(&field, base.dim(), &mut rng);
                let name = format!("{}#bc{bc}", base.name());
                base.change_of_basis(&m).expect("invertible").with_name(name)
            };
            out.push(CorpusMember {
                algebra,
                provenance: Provenance {
                    family: Some(spec.clone()),
                    p: *p,
                    seed,
                    basis_change: bc,
                },
            });
        }
        out
    });
    let mut members: Vec<CorpusMember> = groups.into_iter().flatten().collect();
    members.extend(exhaustive_dim2().into_iter().map(|algebra| CorpusMember {
        algebra,
        provenance: Provenance {
            family: None,
            p: 2,
            seed,
            basis_change: 0,
        },
    }));
    members
}

/// Convenience for tests and benches: `spec` over `F_p`.
pub fn build_prime(spec: &FamilySpec, p: u32) -> Result<LeibnizAlgebra<PrimeField>> {
    spec.build(PrimeField::new(p)?)
}
