//! Seeded randomized checks of the linear algebra, plus the code-level
//! implications that must hold on every code the crate produces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{degree_distribution, feasibility_check, seventeen_config_count};
use crate::error::Result;
use crate::fields::gf;
use crate::linalg::{Matrix, Subspace, SubspaceCode};

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;
pub const DEFAULT_CASES: usize = 10_000;

const ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub violations: usize,
    /// Description of the first violation.
    pub first: Option<String>,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }
}

fn random_matrix(rng: &mut impl Rng, q: u32, r: usize, c: usize) -> Matrix {
    let rows: Vec<Vec<u8>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..q) as u8).collect()).collect();
    Matrix::from_rows(q, c, &rows).expect("shape")
}

fn random_subspace(rng: &mut impl Rng, q: u32, v: usize) -> Subspace {
    let r = rng.gen_range(0..=v);
    Subspace::span(&random_matrix(rng, q, r, v))
}

fn dot(q: u32, a: &[u8], b: &[u8]) -> u8 {
    let f = gf(q).expect("supported");
    a.iter().zip(b).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y)))
}

/// Random invertible matrix: identity hit with random elementary row operations.
fn random_invertible(rng: &mut impl Rng, q: u32, n: usize) -> Matrix {
    let f = gf(q).expect("supported");
    let mut rows: Vec<Vec<u8>> = Matrix::identity(q, n).to_rows();
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let c = rng.gen_range(1..q) as u8;
        if i == j {
            rows[i].iter_mut().for_each(|x| *x = f.mul(*x, c));
        } else {
            let src = rows[j].clone();
            rows[i].iter_mut().zip(&src).for_each(|(x, &y)| *x = f.add(*x, f.mul(c, y)));
        }
    }
    Matrix::from_rows(q, n, &rows).expect("shape")
}

fn run(name: &'static str, cases: usize, mut case: impl FnMut(usize) -> Option<String>) -> CheckResult {
    let mut violations = 0;
    let mut first = None;
    for i in 0..cases {
        if let Some(msg) = case(i) {
            violations += 1;
            first.get_or_insert(format!("case {i}: {msg}"));
        }
    }
    CheckResult { name, cases, violations, first }
}

fn metric_suite(rng: &mut ChaCha8Rng, cases: usize) -> CheckResult {
    run("subspace metric", cases, |_| {
        let q = *ORDERS.choose(rng).expect("nonempty");
        let v = rng.gen_range(1..=8);
        let (a, b, c) = (random_subspace(rng, q, v), random_subspace(rng, q, v), random_subspace(rng, q, v));
        let d = |x: &Subspace, y: &Subspace| x.distance(y).expect("same ambient");
        if d(&a, &b) != d(&b, &a) {
            return Some("asymmetric".into());
        }
        if d(&a, &c) > d(&a, &b) + d(&b, &c) {
            return Some("triangle inequality".into());
        }
        if (d(&a, &b) == 0) != (a == b) {
            return Some("identity of indiscernibles".into());
        }
        let sum = a.sum(&b).expect("same ambient").dim();
        if d(&a, &b) != 2 * sum - a.dim() - b.dim() {
            return Some("distance differs from 2 dim(A+B) - dim A - dim B".into());
        }
        None
    })
}

fn rref_suite(rng: &mut ChaCha8Rng, cases: usize) -> CheckResult {
    run("reduced row echelon form", cases, |_| {
        let q = *ORDERS.choose(rng).expect("nonempty");
        let c = rng.gen_range(1..=9);
        let r = rng.gen_range(1..=6);
        let m = random_matrix(rng, q, r, c);
        let (e, rank) = m.rref();
        if !e.is_canonical() || e.nrows() != rank {
            return Some("not canonical".into());
        }
        if e.rref().0 != e {
            return Some("not idempotent".into());
        }
        if m.transpose().rank() != rank {
            return Some("row rank differs from column rank".into());
        }
        if rank > 0 && m.vstack(&e).expect("shape").rank() != rank {
            return Some("row space changed".into());
        }
        let g = random_invertible(rng, q, r);
        if g.mul(&m).expect("shape").rref().0 != e {
            return Some("row operations changed the canonical form".into());
        }
        None
    })
}

fn duality_suite(rng: &mut ChaCha8Rng, cases: usize) -> CheckResult {
    run("duality", cases, |_| {
        let q = *ORDERS.choose(rng).expect("nonempty");
        let v = rng.gen_range(1..=8);
        let u = random_subspace(rng, q, v);
        let w = random_subspace(rng, q, v);
        let ud = u.dual();
        if ud.dim() + u.dim() != v {
            return Some("dim U + dim U^perp != v".into());
        }
        if ud.dual() != u {
            return Some("U^perp^perp != U".into());
        }
        for a in u.cm().to_rows() {
            for b in ud.cm().to_rows() {
                if dot(q, &a, &b) != 0 {
                    return Some("U^perp not orthogonal to U".into());
                }
            }
        }
        let s = u.sum(&w).expect("same ambient");
        if s.dual() != ud.intersect(&w.dual()).expect("same ambient") {
            return Some("(U+W)^perp != U^perp ∩ W^perp".into());
        }
        if ud.distance(&w.dual()).expect("same ambient") != u.distance(&w).expect("same ambient") {
            return Some("duality changed the distance".into());
        }
        None
    })
}

/// Metric, RREF and duality suites, `cases` each, from one seed.
pub fn property_suite(seed: u64, cases: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![metric_suite(&mut rng, cases), rref_suite(&mut rng, cases), duality_suite(&mut rng, cases)]
}

/// Codes with `|C| >= 73` have a point of degree 9, codes with `|C| >= 74` a
/// pair of degree-9 points on a codeword. `None` when neither size applies.
pub fn configuration_lemmas(c: &SubspaceCode) -> Result<Option<bool>> {
    if c.len() < 73 {
        return Ok(None);
    }
    let nine = degree_distribution(c)?.get(&9).copied().unwrap_or(0) > 0;
    let seventeen = c.len() < 74 || seventeen_config_count(c)? > 0;
    Ok(Some(nine && seventeen))
}

/// Random subcodes of `c` of every size from `min` up, checked against
/// `configuration_lemmas` and the incidence constraints (code and dual).
pub fn subcode_suite(c: &SubspaceCode, min: usize, per_size: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (min..=c.len()).collect();
    let mut out = CheckResult { name: "configuration lemmas on subcodes", cases: 0, violations: 0, first: None };
    for &n in &sizes {
        for _ in 0..per_size {
            let mut m = c.members().to_vec();
            m.shuffle(&mut rng);
            m.truncate(n);
            let sub = SubspaceCode::new(c.ambient_dim(), c.q(), m)?;
            out.cases += 1;
            let lemmas = configuration_lemmas(&sub)?.unwrap_or(true);
            let feasible = feasibility_check(&sub)?.pass() && feasibility_check(&sub.dual_code())?.pass();
            if !(lemmas && feasible) {
                out.violations += 1;
                out.first.get_or_insert(format!("subcode of size {n}"));
            }
        }
    }
    Ok(out)
}
