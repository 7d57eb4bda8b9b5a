//! Verification and structural fingerprints of constant-dimension codes.
//!
//! Degrees, light plane, position of `S`, 9- and 17-configurations and the
//! incidence constraints are written for planes in PG(5, q); the
//! collineation searches need q = 2.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Display;

use rayon::prelude::*;

use crate::binary::{automorphism_count, find_isomorphism, BinStructure, Collineation};
use crate::error::{Error, Result};
use crate::fields::gf;
use crate::geometry::{gaussian, special_flat, GeometrySpec};
use crate::linalg::{Subspace, SubspaceCode};
use crate::spreads::{classify_type, PartialSpread, SpreadType};

/// Multiset of integers as value -> multiplicity.
pub type Distribution = BTreeMap<usize, usize>;

/// `5^7 9^56`. Multiplicity 1 is written without an exponent, zero
/// multiplicities are skipped.
pub fn power_notation<K: Display, I: IntoIterator<Item = (K, usize)>>(items: I) -> String {
    let parts: Vec<String> = items
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(k, m)| if m == 1 { k.to_string() } else { format!("{k}^{m}") })
        .collect();
    parts.join(" ")
}

fn require_planes_in_pg5(c: &SubspaceCode) -> Result<()> {
    if c.ambient_dim() != 6 || c.constant_dim() != Some(3) {
        return Err(Error::Unsupported("needs a code of planes in PG(5,q)".into()));
    }
    Ok(())
}

fn require_binary(c: &SubspaceCode) -> Result<()> {
    if c.q() != 2 || c.ambient_dim() > 6 {
        return Err(Error::Unsupported("collineation search needs q = 2 and v <= 6".into()));
    }
    Ok(())
}

/// Minimum distance together with the first pair (in code order) attaining it.
pub fn min_distance_witness(c: &SubspaceCode) -> Result<(usize, usize, usize)> {
    if c.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let m = c.members();
    let best = (0..m.len())
        .into_par_iter()
        .map(|i| {
            let mut best = (usize::MAX, i, i);
            for j in i + 1..m.len() {
                let d = m[i].distance(&m[j]).expect("common ambient space");
                if d < best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .min()
        .expect("nonempty");
    Ok(best)
}

pub fn min_distance(c: &SubspaceCode) -> Result<usize> {
    Ok(min_distance_witness(c)?.0)
}

/// `r(P)` for every point of the ambient space, zero included.
pub fn point_degrees(c: &SubspaceCode) -> Result<HashMap<Subspace, usize>> {
    let geom = GeometrySpec::new(c.ambient_dim(), c.q())?;
    let mut deg: HashMap<Subspace, usize> = geom.points().map(|p| (p, 0)).collect();
    for e in c {
        for p in e.points() {
            *deg.get_mut(&p).expect("point of the ambient space") += 1;
        }
    }
    Ok(deg)
}

pub fn degree_distribution(c: &SubspaceCode) -> Result<Distribution> {
    let mut d = Distribution::new();
    for r in point_degrees(c)?.into_values() {
        *d.entry(r).or_default() += 1;
    }
    Ok(d)
}

/// Planes `S` with every point of `S` of degree at most `low` and every other
/// point of degree at least `high`, by a sweep over all planes.
pub fn light_plane_candidates(c: &SubspaceCode, low: usize, high: usize) -> Result<Vec<Subspace>> {
    if c.ambient_dim() < 3 {
        return Ok(Vec::new());
    }
    let deg = point_degrees(c)?;
    // a plane qualifies iff its point set is exactly the light points
    if deg.values().any(|&r| r > low && r < high) {
        return Ok(Vec::new());
    }
    let light = deg.values().filter(|&&r| r <= low).count() as u128;
    if light != gaussian(3, 1, c.q() as u64) {
        return Ok(Vec::new());
    }
    let planes: Vec<Subspace> = GeometrySpec::new(c.ambient_dim(), c.q())?.planes().collect();
    let mut found: Vec<Subspace> = planes.into_par_iter().filter(|s| s.points().all(|p| deg[&p] <= low)).collect();
    found.sort();
    Ok(found)
}

/// The plane of the light-plane property with the thresholds 6 and 8, when
/// it exists and is unique.
pub fn find_light_plane(c: &SubspaceCode) -> Result<Option<Subspace>> {
    let found = light_plane_candidates(c, 6, 8)?;
    Ok(if found.len() == 1 { Some(found[0]) } else { None })
}

/// Frequencies of `dim(E ∩ S)` over the codewords, indexed by dimension.
pub fn s_profile(c: &SubspaceCode, s: &Subspace) -> Result<Vec<usize>> {
    let mut out = vec![0; s.dim() + 1];
    for e in c {
        out[e.intersect_dim(s)?] += 1;
    }
    Ok(out)
}

/// The image of `e ⊇ p` in `V/p`, identified with GF(q)^(v-1) by subtracting
/// the multiple of `p` that clears its pivot coordinate and dropping that
/// coordinate.
pub fn quotient_by_point(e: &Subspace, p: &Subspace) -> Result<Subspace> {
    if p.dim() != 1 || !e.contains(p)? {
        return Err(Error::Degenerate("quotient needs a point contained in the subspace".into()));
    }
    let f = gf(e.q())?;
    let pv = p.point_vector();
    let j = p.pivots()[0];
    let rows: Vec<Vec<u8>> = e
        .cm()
        .to_rows()
        .into_iter()
        .map(|x| {
            let c = x[j];
            let mut y: Vec<u8> = x.iter().zip(&pv).map(|(&a, &b)| f.sub(a, f.mul(c, b))).collect();
            y.remove(j);
            y
        })
        .collect();
    Subspace::from_rows(e.q(), e.ambient_dim() - 1, &rows)
}

/// Codewords through `p`.
pub fn derived_code(c: &SubspaceCode, p: &Subspace) -> Vec<Subspace> {
    c.iter().filter(|e| e.contains(p).unwrap_or(false)).copied().collect()
}

#[derive(Clone, Debug)]
pub struct NineConfiguration {
    pub point: Subspace,
    pub planes: Vec<Subspace>,
    /// The nine planes through the point, as lines of PG(4, 2).
    pub derived: PartialSpread,
    pub ty: SpreadType,
}

/// Every point of degree 9 with its derived partial spread and spread type.
pub fn nine_configurations(c: &SubspaceCode, budget: u64) -> Result<Vec<NineConfiguration>> {
    require_planes_in_pg5(c)?;
    require_binary(c)?;
    let deg = point_degrees(c)?;
    let mut points: Vec<Subspace> = deg.iter().filter(|(_, &r)| r == 9).map(|(p, _)| *p).collect();
    points.sort();
    points
        .into_par_iter()
        .map(|p| {
            let planes = derived_code(c, &p);
            let lines = planes.iter().map(|e| quotient_by_point(e, &p)).collect::<Result<Vec<_>>>()?;
            let derived = PartialSpread::new(lines)?;
            let ty = classify_type(&derived, budget)?;
            Ok(NineConfiguration { point: p, planes, derived, ty })
        })
        .collect()
}

/// `X^28 E^28`-style summary of the types.
pub fn type_summary(configs: &[NineConfiguration]) -> String {
    power_notation(SpreadType::ALL.iter().map(|t| (t, configs.iter().filter(|n| n.ty == *t).count())))
}

/// Unordered pairs of points of degree `q^3 + 1` joined by a codeword.
pub fn seventeen_config_count(c: &SubspaceCode) -> Result<usize> {
    require_planes_in_pg5(c)?;
    let q = c.q() as usize;
    let full = q * q * q + 1;
    let deg = point_degrees(c)?;
    let mut pairs = HashSet::new();
    for e in c {
        let heavy: Vec<Subspace> = e.points().filter(|p| deg[p] == full).collect();
        for i in 0..heavy.len() {
            for j in i + 1..heavy.len() {
                pairs.insert((heavy[i].min(heavy[j]), heavy[i].max(heavy[j])));
            }
        }
    }
    Ok(pairs.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub bound: usize,
    pub max_seen: usize,
}

impl FamilyCheck {
    pub fn pass(&self) -> bool {
        self.max_seen <= self.bound
    }
}

/// The four incidence constraint families: codewords through a line, through
/// a point, inside a hyperplane, inside a solid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub lines: FamilyCheck,
    pub points: FamilyCheck,
    pub hyperplanes: FamilyCheck,
    pub solids: FamilyCheck,
}

impl Feasibility {
    pub fn pass(&self) -> bool {
        self.families().iter().all(|(_, f)| f.pass())
    }

    pub fn families(&self) -> [(&'static str, FamilyCheck); 4] {
        [("lines", self.lines), ("points", self.points), ("hyperplanes", self.hyperplanes), ("solids", self.solids)]
    }
}

fn max_line_multiplicity(c: &SubspaceCode) -> usize {
    let mut count: HashMap<Subspace, usize> = HashMap::new();
    for e in c {
        for l in e.subspaces(2) {
            *count.entry(l).or_default() += 1;
        }
    }
    count.into_values().max().unwrap_or(0)
}

pub fn feasibility_check(c: &SubspaceCode) -> Result<Feasibility> {
    require_planes_in_pg5(c)?;
    let q = c.q() as usize;
    let spread = q * q * q + 1;
    let dual = c.dual_code();
    let max_deg = |c: &SubspaceCode| -> Result<usize> { Ok(point_degrees(c)?.into_values().max().unwrap_or(0)) };
    Ok(Feasibility {
        lines: FamilyCheck { bound: 1, max_seen: max_line_multiplicity(c) },
        points: FamilyCheck { bound: spread, max_seen: max_deg(c)? },
        // E ⊆ H iff H^⊥ ⊆ E^⊥
        hyperplanes: FamilyCheck { bound: spread, max_seen: max_deg(&dual)? },
        solids: FamilyCheck { bound: 1, max_seen: max_line_multiplicity(&dual) },
    })
}

/// Outcome of the sweep over all `k`-flats for maximality at distance `d`.
#[derive(Clone, Debug)]
pub struct Maximality {
    pub distance: usize,
    pub checked: usize,
    /// Flats at distance `>= d` from every codeword.
    pub addable: Vec<Subspace>,
    /// For each rejected flat, the first codeword closer than `d`.
    pub blockers: Vec<(Subspace, usize)>,
}

impl Maximality {
    pub fn maximal(&self) -> bool {
        self.addable.is_empty()
    }
}

pub fn is_maximal(c: &SubspaceCode, d: usize) -> Result<Maximality> {
    let k = c.constant_dim().ok_or_else(|| Error::Unsupported("maximality needs a constant-dimension code".into()))?;
    let flats: Vec<Subspace> = GeometrySpec::new(c.ambient_dim(), c.q())?.flats(k).filter(|e| !c.contains(e)).collect();
    let checked = flats.len();
    let verdicts: Vec<(Subspace, Option<usize>)> = flats
        .into_par_iter()
        .map(|e| {
            let b = c.iter().position(|m| m.distance(&e).expect("same ambient") < d);
            (e, b)
        })
        .collect();
    let mut addable = Vec::new();
    let mut blockers = Vec::new();
    for (e, b) in verdicts {
        match b {
            Some(i) => blockers.push((e, i)),
            None => addable.push(e),
        }
    }
    Ok(Maximality { distance: d, checked, addable, blockers })
}

/// Maximum size of a partial line spread in PG(v-1, q).
pub fn partial_spread_max(v: usize, q: u32) -> Result<u128> {
    if v < 4 {
        return Err(Error::Unsupported("partial line spreads need v >= 4".into()));
    }
    gf(q)?;
    let q = q as u128;
    let lowest = if v.is_multiple_of(2) { 2 } else { 3 };
    let mut s = 1;
    let mut e = lowest;
    while e <= v - 2 {
        s += q.pow(e as u32);
        e += 2;
    }
    Ok(s)
}

/// `A_q(n, 2δ; δ)` where known: spreads when `δ | n`, partial line spreads
/// when `δ = 2`.
pub fn spread_number(n: usize, delta: usize, q: u32) -> Option<u128> {
    if delta == 0 || n < delta {
        return None;
    }
    if n.is_multiple_of(delta) {
        let q = q as u128;
        return Some((q.pow(n as u32) - 1) / (q.pow(delta as u32) - 1));
    }
    if delta == 2 {
        return partial_spread_max(n, q).ok();
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    pub v: usize,
    pub d: usize,
    pub k: usize,
    pub q: u32,
}

impl BoundQuery {
    pub fn new(v: usize, d: usize, k: usize, q: u32) -> Result<BoundQuery> {
        gf(q)?;
        if k == 0 || k >= v || d == 0 || d % 2 == 1 || d > 2 * k.min(v - k) {
            return Err(Error::Degenerate(format!("no bound query for v={v} d={d} k={k}")));
        }
        Ok(BoundQuery { v, d, k, q })
    }
}

/// Every ingredient of the recursive bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundTrace {
    pub query: BoundQuery,
    pub t: usize,
    pub delta: usize,
    /// `v - k + d/2`
    pub inner_v: usize,
    pub numerator: u128,
    pub denominator: u128,
    pub inner: Option<u128>,
    /// `floor(numerator * inner / denominator)`, absent when `inner` is unknown.
    pub value: Option<u128>,
}

pub fn recursive_bound(bq: BoundQuery) -> BoundTrace {
    let BoundQuery { v, d, k, q } = bq;
    let t = k - d / 2 + 1;
    let delta = d / 2;
    let inner_v = v - k + delta;
    let numerator = gaussian(v as i64, t as i64 - 1, q as u64);
    let denominator = gaussian(k as i64, t as i64 - 1, q as u64);
    let inner = spread_number(inner_v, delta, q);
    let value = inner.map(|a| numerator * a / denominator);
    BoundTrace { query: bq, t, delta, inner_v, numerator, denominator, inner, value }
}

/// Collineation group order and whether a correlation maps the code to itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutInfo {
    pub collineations: u64,
    pub self_dual: bool,
}

impl AutInfo {
    /// Order of the group of collineations and correlations fixing the code.
    pub fn with_correlations(&self) -> u64 {
        if self.self_dual {
            2 * self.collineations
        } else {
            self.collineations
        }
    }
}

fn structure(c: &SubspaceCode) -> Result<BinStructure> {
    require_binary(c)?;
    BinStructure::from_subspaces(c.ambient_dim(), c.members())
}

fn intersection_types(c: &SubspaceCode) -> Distribution {
    let m = c.members();
    let mut d = Distribution::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            *d.entry(m[i].intersect_dim(&m[j]).expect("same ambient")).or_default() += 1;
        }
    }
    d
}

/// A collineation mapping `a` onto `b`, after cheap invariant filters.
pub fn find_code_isomorphism(a: &SubspaceCode, b: &SubspaceCode, budget: u64) -> Result<Option<Collineation>> {
    require_binary(a)?;
    require_binary(b)?;
    if a.len() != b.len() || a.ambient_dim() != b.ambient_dim() {
        return Ok(None);
    }
    let dims = |c: &SubspaceCode| {
        let mut v: Vec<usize> = c.iter().map(Subspace::dim).collect();
        v.sort_unstable();
        v
    };
    if dims(a) != dims(b) || degree_distribution(a)? != degree_distribution(b)? || intersection_types(a) != intersection_types(b) {
        return Ok(None);
    }
    find_isomorphism(&structure(a)?, &structure(b)?, budget)
}

pub fn are_isomorphic(a: &SubspaceCode, b: &SubspaceCode, budget: u64) -> Result<bool> {
    Ok(find_code_isomorphism(a, b, budget)?.is_some())
}

pub fn automorphism_order(c: &SubspaceCode, budget: u64) -> Result<AutInfo> {
    let collineations = automorphism_count(&structure(c)?, budget)?;
    let self_dual = are_isomorphic(c, &c.dual_code(), budget)?;
    Ok(AutInfo { collineations, self_dual })
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub aut: bool,
    pub budget: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { aut: false, budget: crate::binary::DEFAULT_BUDGET }
    }
}

/// Everything `analyze` could compute for a code; parts that do not apply
/// to the parameters are `None` or empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    pub v: usize,
    pub q: u32,
    pub k: Option<usize>,
    pub size: usize,
    pub min_distance: Option<usize>,
    pub degree_distribution: Distribution,
    pub light_plane: Option<Subspace>,
    /// The plane the profile is taken against: the light plane, else the
    /// special plane.
    pub s_plane: Option<Subspace>,
    pub s_profile: Option<Vec<usize>>,
    pub nine_configs: Vec<(Subspace, SpreadType)>,
    pub seventeen_config_count: Option<usize>,
    pub feasibility: Option<Feasibility>,
    pub aut: Option<AutInfo>,
}

impl CodeReport {
    pub fn nine_config_summary(&self) -> String {
        power_notation(SpreadType::ALL.iter().map(|t| (t, self.nine_configs.iter().filter(|n| n.1 == *t).count())))
    }
}

pub fn analyze(c: &SubspaceCode, opts: AnalyzeOptions) -> Result<CodeReport> {
    let k = c.constant_dim();
    let min_distance = if c.len() >= 2 { Some(min_distance(c)?) } else { None };
    let degree_distribution = degree_distribution(c)?;
    if let Some(k) = k {
        let flags: usize = degree_distribution.iter().map(|(r, m)| r * m).sum();
        debug_assert_eq!(flags as u128, c.len() as u128 * gaussian(k as i64, 1, c.q() as u64));
    }
    let pg5_planes = c.ambient_dim() == 6 && k == Some(3);
    let binary_planes = pg5_planes && c.q() == 2;
    let light_plane = if pg5_planes { find_light_plane(c)? } else { None };
    let s_plane = if pg5_planes { Some(light_plane.unwrap_or_else(|| special_flat(6, 3, c.q()))) } else { None };
    let s_profile = match &s_plane {
        Some(s) => Some(s_profile(c, s)?),
        None => None,
    };
    let nine_configs = if binary_planes {
        nine_configurations(c, opts.budget)?.into_iter().map(|n| (n.point, n.ty)).collect()
    } else {
        Vec::new()
    };
    let seventeen_config_count = if pg5_planes { Some(seventeen_config_count(c)?) } else { None };
    let feasibility = if pg5_planes { Some(feasibility_check(c)?) } else { None };
    let aut = if opts.aut { Some(automorphism_order(c, opts.budget)?) } else { None };
    Ok(CodeReport {
        v: c.ambient_dim(),
        q: c.q(),
        k,
        size: c.len(),
        min_distance,
        degree_distribution,
        light_plane,
        s_plane,
        s_profile,
        nine_configs,
        seventeen_config_count,
        feasibility,
        aut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::DEFAULT_BUDGET;
    use crate::constructions::{construction_a, construction_a_core, lift_gabidulin, maximal_core_plus_s};
    use crate::geometry::plane_spread_field_reduction;

    fn dist(d: &Distribution) -> String {
        power_notation(d.iter().map(|(k, m)| (k, *m)))
    }

    #[test]
    fn notation() {
        assert_eq!(power_notation([(0, 48), (1, 28), (2, 0), (3, 1)]), "0^48 1^28 3");
    }

    #[test]
    fn min_distances() {
        assert_eq!(min_distance(&construction_a(2).unwrap()).unwrap(), 4);
        assert_eq!(min_distance(&lift_gabidulin(2).unwrap()).unwrap(), 4);
        assert_eq!(min_distance(&plane_spread_field_reduction(2).unwrap()).unwrap(), 6);
        let one = SubspaceCode::new(6, 2, vec![special_flat(6, 3, 2)]).unwrap();
        assert!(matches!(min_distance(&one), Err(Error::SingletonCode)));
    }

    #[test]
    fn degrees_of_type_a() {
        let c = construction_a(2).unwrap();
        let d = degree_distribution(&c).unwrap();
        assert_eq!(dist(&d), "5^7 9^56");
        assert_eq!(d.iter().map(|(r, m)| r * m).sum::<usize>(), 77 * 7);
        let lmrd = lift_gabidulin(2).unwrap();
        let deg = point_degrees(&lmrd).unwrap();
        let s = special_flat(6, 3, 2);
        assert!(s.points().all(|p| deg[&p] == 0));
    }

    #[test]
    fn light_planes() {
        let s = special_flat(6, 3, 2);
        assert_eq!(find_light_plane(&construction_a(2).unwrap()).unwrap(), Some(s));
        assert_eq!(light_plane_candidates(&lift_gabidulin(2).unwrap(), 6, 8).unwrap(), vec![s]);
        let few = SubspaceCode::new(6, 2, GeometrySpec::new(6, 2).unwrap().planes().take(10).collect()).unwrap();
        assert_eq!(find_light_plane(&few).unwrap(), None);
    }

    #[test]
    fn profiles() {
        let s = special_flat(6, 3, 2);
        assert_eq!(s_profile(&construction_a(2).unwrap(), &s).unwrap(), vec![56, 14, 7, 0]);
        assert_eq!(s_profile(&lift_gabidulin(2).unwrap(), &s).unwrap(), vec![64, 0, 0, 0]);
        assert_eq!(s_profile(&maximal_core_plus_s(2).unwrap(), &s).unwrap()[3], 1);
    }

    #[test]
    fn quotient_is_a_line() {
        for q in [2, 3] {
            let c = construction_a(q).unwrap();
            let e = c.members()[0];
            for p in e.points() {
                let l = quotient_by_point(&e, &p).unwrap();
                assert_eq!((l.dim(), l.ambient_dim()), (2, 5));
            }
            let off = GeometrySpec::new(6, q).unwrap().points().find(|p| !e.contains(p).unwrap()).unwrap();
            assert!(quotient_by_point(&e, &off).is_err());
        }
    }

    #[test]
    fn configurations_of_type_a() {
        let c = construction_a(2).unwrap();
        let n = nine_configurations(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(n.len(), 56);
        assert_eq!(type_summary(&n), "X^28 E^28");
        assert_eq!(seventeen_config_count(&c).unwrap(), 1428);
        let lmrd = lift_gabidulin(2).unwrap();
        assert!(nine_configurations(&lmrd, DEFAULT_BUDGET).unwrap().is_empty());
        assert_eq!(seventeen_config_count(&lmrd).unwrap(), 0);
    }

    #[test]
    fn feasibility() {
        let c = construction_a(2).unwrap();
        let f = feasibility_check(&c).unwrap();
        assert!(f.pass());
        assert_eq!(f.points.max_seen, 9);
        assert!(feasibility_check(&c.dual_code()).unwrap().pass());
        let s = special_flat(6, 3, 2);
        let t = Subspace::coordinate(2, 6, &[2, 3, 4]);
        let bad = SubspaceCode::new(6, 2, vec![s, t]).unwrap();
        assert!(!feasibility_check(&bad).unwrap().lines.pass());
    }

    #[test]
    fn maximality() {
        let m = is_maximal(&construction_a(2).unwrap(), 4).unwrap();
        assert!(m.maximal());
        assert_eq!(m.checked + 77, 1395);
        let core = construction_a_core(2).unwrap();
        let m = is_maximal(&core.core(), 4).unwrap();
        assert!(!m.maximal());
        for e in &core.line_planes {
            assert!(m.addable.contains(e));
        }
        assert!(is_maximal(&plane_spread_field_reduction(2).unwrap(), 6).unwrap().maximal());
    }

    #[test]
    fn bounds() {
        let b = |v, d, k, q| recursive_bound(BoundQuery::new(v, d, k, q).unwrap()).value;
        assert_eq!(b(6, 4, 3, 2), Some(81));
        assert_eq!(b(6, 4, 3, 3), Some(784));
        assert_eq!(b(6, 4, 2, 2), Some(21));
        assert_eq!(b(5, 4, 2, 2), Some(9));
        assert_eq!(b(13, 6, 5, 2), None);
        assert_eq!(partial_spread_max(5, 2).unwrap(), 9);
        assert_eq!(partial_spread_max(6, 2).unwrap(), 21);
        assert_eq!(partial_spread_max(7, 2).unwrap(), 41);
        assert!(BoundQuery::new(6, 3, 3, 2).is_err());
        assert!(BoundQuery::new(6, 8, 3, 2).is_err());
    }

    #[test]
    fn bound_matches_spread_counts() {
        for q in [2u32, 3, 4] {
            let q3 = (q as u128).pow(3);
            let t = recursive_bound(BoundQuery::new(6, 4, 3, q).unwrap());
            assert_eq!(t.value, Some((q3 + 1) * (q3 + 1)));
            assert_eq!(spread_number(6, 3, q), Some(q3 + 1));
        }
    }

    #[test]
    fn automorphisms_of_type_a() {
        let c = construction_a(2).unwrap();
        let a = automorphism_order(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(a.collineations, 168);
        assert!(a.self_dual);
        assert_eq!(a.with_correlations(), 336);
        assert!(are_isomorphic(&c, &c, DEFAULT_BUDGET).unwrap());
        let small = SubspaceCode::new(6, 2, c.members()[..66].to_vec()).unwrap();
        assert!(!are_isomorphic(&c, &small, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn spread_code_is_transitive() {
        let c = plane_spread_field_reduction(2).unwrap();
        let st = BinStructure::from_subspaces(6, c.members()).unwrap();
        let group = crate::binary::automorphisms(&st, DEFAULT_BUDGET).unwrap();
        let blocks = st.blocks().to_vec();
        let orbit: HashSet<u64> = group.iter().map(|g| g.apply_mask(blocks[0])).collect();
        assert_eq!(orbit.len(), 9);
    }

    #[test]
    fn report() {
        let r = analyze(&construction_a(2).unwrap(), AnalyzeOptions::default()).unwrap();
        assert_eq!(r.min_distance, Some(4));
        assert_eq!(r.s_profile, Some(vec![56, 14, 7, 0]));
        assert_eq!(r.nine_config_summary(), "X^28 E^28");
        assert_eq!(r.seventeen_config_count, Some(1428));
        assert!(r.feasibility.unwrap().pass());
        let r3 = analyze(&construction_a(3).unwrap(), AnalyzeOptions::default()).unwrap();
        assert_eq!(r3.size, 754);
        let flags: usize = r3.degree_distribution.iter().map(|(r, m)| r * m).sum();
        assert_eq!(flags, 754 * 13);
    }
}
