//! The lifted Gabidulin code, the rearranged code of old and new planes, and
//! its extension by planes meeting the special plane `S` in a line.
//!
//! Vectors of GF(q^3) x GF(q^3) become vectors of GF(q)^6 through the field
//! basis, first component first, so `S = {0} x GF(q^3)` is spanned by the
//! last three unit vectors.

use std::collections::{HashMap, HashSet};

use crate::error::Result;
use crate::fields::{gf3, ExtElem, ExtField};
use crate::gabidulin::{alt_form, codewords, elements_of_rows, removable_set, LinPoly};
use crate::geometry::{pair_coords, special_flat, GeometrySpec};
use crate::linalg::{CanonicalMatrices, Subspace, SubspaceCode};

/// The plane `{(x, f(x))}`, i.e. the lift `<(I_3 | A)>` of the matrix of `f`.
pub fn graph_plane(ef: &ExtField, f: &LinPoly) -> Subspace {
    let rows: Vec<[u8; 6]> = ef.basis().iter().map(|&b| pair_coords(ef.q(), b, f.eval(ef, b))).collect();
    Subspace::from_rows(ef.q(), 6, &rows).expect("six columns")
}

fn plane_of(ef: &ExtField, pairs: &[(ExtElem, ExtElem)]) -> Subspace {
    let rows: Vec<[u8; 6]> = pairs.iter().map(|&(x, y)| pair_coords(ef.q(), x, y)).collect();
    Subspace::from_rows(ef.q(), 6, &rows).expect("six columns")
}

/// The LMRD code: all q^6 lifted Gabidulin codewords.
pub fn lift_gabidulin(q: u32) -> Result<SubspaceCode> {
    let ef = gf3(q)?;
    let members = codewords(q)?.map(|f| graph_plane(ef, &f)).collect();
    SubspaceCode::new(6, q, members)
}

/// Minimal representative of `GF(q)^x * x`.
pub fn projective_rep(ef: &ExtField, x: ExtElem) -> ExtElem {
    ef.base().elements().skip(1).map(|c| ef.scale(c, x)).min().expect("q >= 2")
}

/// The first element (in integer order) with nonzero trace.
pub fn first_nonzero_trace(ef: &ExtField) -> ExtElem {
    ef.elements().find(|&v| ef.trace(v) != 0).expect("trace is onto")
}

/// The plane `N(a, b, c) = {(x, c x^q - c^q x + y (a b^q - a^q b)) : x in <a,b>, y in GF(q)}`.
pub fn new_plane(ef: &ExtField, a: ExtElem, b: ExtElem, c: ExtElem) -> Subspace {
    let h = |x: ExtElem| alt_form(ef, c, x);
    plane_of(ef, &[(a, h(a)), (b, h(b)), (ExtElem::ZERO, alt_form(ef, a, b))])
}

/// The plane spanned by `(x, x^{q+1} v0)` and the line
/// `{(0, y) : Tr(y x^{-q-1}) = 0}` of `S`.
pub fn line_plane(ef: &ExtField, x: ExtElem, v0: ExtElem) -> Subspace {
    let xq1 = ef.mul(x, ef.frobenius(x));
    let w = ef.inv(xq1).expect("x nonzero");
    let mut kernel: Vec<ExtElem> = Vec::new();
    for y in ef.elements().filter(|&y| ef.trace(ef.mul(y, w)) == 0) {
        kernel.push(y);
        if !ef.independent(&kernel) {
            kernel.pop();
        }
    }
    let mut pairs = vec![(x, ef.mul(xq1, v0))];
    pairs.extend(kernel.into_iter().map(|y| (ExtElem::ZERO, y)));
    plane_of(ef, &pairs)
}

/// The pieces of the construction: old lifted planes, new planes meeting `S`
/// in a point, and planes meeting `S` in a line.
#[derive(Clone, Debug)]
pub struct ConstructionAParts {
    pub q: u32,
    pub v0: ExtElem,
    pub old_planes: SubspaceCode,
    /// Lifted planes of `R = {u x^q - u^q x}`, replaced by the new planes.
    pub removed_planes: SubspaceCode,
    pub new_planes: SubspaceCode,
    pub line_planes: SubspaceCode,
}

impl ConstructionAParts {
    /// Old and new planes: a `(6, q^6+q^2+q, 4; 3)_q` code.
    pub fn core(&self) -> SubspaceCode {
        self.old_planes.extended(self.new_planes.iter().copied()).expect("disjoint parts")
    }

    /// All three parts: a `(6, q^6+2q^2+2q+1, 4; 3)_q` code.
    pub fn full(&self) -> SubspaceCode {
        self.core().extended(self.line_planes.iter().copied()).expect("disjoint parts")
    }
}

/// Builds all parts of the construction.
///
/// New planes: one per 2-dimensional `Z` (canonical order) and coset
/// `c + Z`, represented by its minimal element. Line planes: one per
/// projective point `GF(q) x`, represented by its minimal element.
pub fn construction_a_core(q: u32) -> Result<ConstructionAParts> {
    let ef = gf3(q)?;
    let removed: HashSet<LinPoly> = removable_set(q)?.into_iter().collect();
    let mut old = Vec::new();
    let mut gone = Vec::new();
    for f in codewords(q)? {
        if removed.contains(&f) {
            gone.push(graph_plane(ef, &f));
        } else {
            old.push(graph_plane(ef, &f));
        }
    }

    let mut new = Vec::new();
    for zm in CanonicalMatrices::new(q, 3, 2) {
        let ab = elements_of_rows(ef, &zm);
        let zset: Vec<ExtElem> =
            ef.elements().filter(|&x| crate::gabidulin::ext_span(ef, &ab).contains_vector(&ef.coords(x))).collect();
        let mut seen = HashSet::new();
        for c in ef.elements() {
            let rep = zset.iter().map(|&z| ef.add(c, z)).min().expect("Z nonempty");
            if seen.insert(rep) {
                new.push(new_plane(ef, ab[0], ab[1], rep));
            }
        }
    }

    let v0 = first_nonzero_trace(ef);
    let mut reps: Vec<ExtElem> = ef.elements().skip(1).map(|x| projective_rep(ef, x)).collect();
    reps.sort();
    reps.dedup();
    let lines = reps.iter().map(|&x| line_plane(ef, x, v0)).collect();

    Ok(ConstructionAParts {
        q,
        v0,
        old_planes: SubspaceCode::new(6, q, old)?,
        removed_planes: SubspaceCode::new(6, q, gone)?,
        new_planes: SubspaceCode::new(6, q, new)?,
        line_planes: SubspaceCode::new(6, q, lines)?,
    })
}

/// The full construction, of size `q^6 + 2q^2 + 2q + 1`.
pub fn construction_a(q: u32) -> Result<SubspaceCode> {
    Ok(construction_a_core(q)?.full())
}

/// Old and new planes together with `S`.
pub fn maximal_core_plus_s(q: u32) -> Result<SubspaceCode> {
    construction_a_core(q)?.core().extended([special_flat(6, 3, q)])
}

/// Multiplicity with which each line disjoint from `s` is covered.
pub fn disjoint_line_coverage(code: &SubspaceCode, s: &Subspace) -> HashMap<Subspace, usize> {
    let mut cover = HashMap::new();
    for e in code {
        for l in e.subspaces(2) {
            if l.sum_dim(s).expect("same ambient") == s.dim() + 2 {
                *cover.entry(l).or_insert(0) += 1;
            }
        }
    }
    cover
}

/// Outcome of the LMRD extension-cap sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmrdCapReport {
    pub planes: usize,
    /// Planes meeting `S` in at most a point; each contains an already covered line.
    pub rejected: usize,
    /// Planes meeting `S` exactly in a line.
    pub meeting_s_in_line: usize,
    pub s_addable: bool,
    /// `q^6 + q^2 + q + 1`.
    pub bound: u64,
}

impl LmrdCapReport {
    pub fn holds(&self) -> bool {
        self.rejected + self.meeting_s_in_line + 1 == self.planes && self.s_addable
    }
}

/// Sweeps all planes of PG(5, q): every plane meeting `S` in at most a point
/// contains a line covered by the LMRD code, so only planes meeting `S` in a
/// line (pairwise distance 4 forces distinct lines, at most q^2+q+1 of them)
/// or `S` itself can be added.
pub fn lmrd_cap_check(q: u32) -> Result<LmrdCapReport> {
    let lmrd = lift_gabidulin(q)?;
    let s = special_flat(6, 3, q);
    let covered = disjoint_line_coverage(&lmrd, &s);
    let geom = GeometrySpec::new(6, q)?;
    let (mut planes, mut rejected, mut in_line) = (0, 0, 0);
    for e in geom.planes() {
        planes += 1;
        match e.intersect_dim(&s)? {
            0 | 1 => {
                if e.subspaces(2).any(|l| covered.contains_key(&l)) {
                    rejected += 1;
                }
            }
            2 => in_line += 1,
            _ => {}
        }
    }
    let s_addable = lmrd.iter().all(|e| e.distance(&s).map(|d| d >= 4).unwrap_or(false));
    let q = q as u64;
    Ok(LmrdCapReport {
        planes,
        rejected,
        meeting_s_in_line: in_line,
        s_addable,
        bound: q.pow(6) + q * q + q + 1,
    })
}

/// Greedily adds candidates that keep the minimum distance at least `d`.
pub fn greedy_code<I>(q: u32, v: usize, d: usize, candidates: I) -> Result<SubspaceCode>
where
    I: IntoIterator<Item = Subspace>,
{
    let mut members: Vec<Subspace> = Vec::new();
    for c in candidates {
        let mut ok = true;
        for m in &members {
            if m.distance(&c)? < d {
                ok = false;
                break;
            }
        }
        if ok {
            members.push(c);
        }
    }
    SubspaceCode::new(v, q, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gabidulin::alternating;

    fn min_dist(code: &SubspaceCode) -> usize {
        let m = code.members();
        let mut best = usize::MAX;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                best = best.min(m[i].distance(&m[j]).unwrap());
            }
        }
        best
    }

    #[test]
    fn line_planes_for_q4() {
        let ef = gf3(4).unwrap();
        let v0 = first_nonzero_trace(ef);
        let s = special_flat(6, 3, 4);
        for x in ef.elements().skip(1).take(5) {
            let e = line_plane(ef, x, v0);
            assert_eq!((e.dim(), e.intersect_dim(&s).unwrap()), (3, 2));
        }
        assert_eq!(construction_a(4).unwrap().len(), 4137);
    }

    #[test]
    fn lifted_code_q2() {
        let c = lift_gabidulin(2).unwrap();
        assert_eq!(c.len(), 64);
        assert_eq!(min_dist(&c), 4);
        let s = special_flat(6, 3, 2);
        let cover = disjoint_line_coverage(&c, &s);
        assert_eq!(cover.len(), 448);
        assert!(cover.values().all(|&m| m == 1));
    }

    #[test]
    fn lifted_planes_are_identity_blocks() {
        let ef = gf3(3).unwrap();
        for f in codewords(3).unwrap().step_by(37) {
            let p = graph_plane(ef, &f);
            assert_eq!(p.pivots(), vec![0, 1, 2]);
            let a = f.matrix(ef);
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(p.cm().get(i, 3 + j), a.get(i, j));
                }
            }
        }
    }

    #[test]
    fn core_part_sizes() {
        for q in [2u32, 3] {
            let parts = construction_a_core(q).unwrap();
            let qq = q as usize;
            assert_eq!(parts.old_planes.len(), qq.pow(6) - qq.pow(3));
            assert_eq!(parts.removed_planes.len(), qq.pow(3));
            assert_eq!(parts.new_planes.len(), qq.pow(3) + qq * qq + qq);
            assert_eq!(parts.line_planes.len(), qq * qq + qq + 1);
            assert_eq!(parts.core().len(), qq.pow(6) + qq * qq + qq);
        }
    }

    #[test]
    fn q2_sizes_and_distance() {
        let parts = construction_a_core(2).unwrap();
        assert_eq!(parts.v0, ExtElem(1));
        assert_eq!(min_dist(&parts.core()), 4);
        let full = parts.full();
        assert_eq!(full.len(), 77);
        assert_eq!(min_dist(&full), 4);
        let plus = maximal_core_plus_s(2).unwrap();
        assert_eq!(plus.len(), 71);
        assert_eq!(min_dist(&plus), 4);
    }

    #[test]
    fn new_plane_independent_of_coset_rep() {
        let ef = gf3(3).unwrap();
        let [a, b, _] = ef.basis();
        let c = ExtElem(17);
        let p = new_plane(ef, a, b, c);
        for z in [a, b, ef.add(a, b), ef.scale(2, b)] {
            assert_eq!(new_plane(ef, a, b, ef.add(c, z)), p);
        }
    }

    #[test]
    fn new_planes_through_points_of_s() {
        for q in [2u32, 3] {
            let parts = construction_a_core(q).unwrap();
            let s = special_flat(6, 3, q);
            let mut per_point: HashMap<Subspace, usize> = HashMap::new();
            for n in &parts.new_planes {
                let m = n.intersect(&s).unwrap();
                assert_eq!(m.dim(), 1);
                *per_point.entry(m).or_default() += 1;
            }
            assert_eq!(per_point.len() as u32, q * q + q + 1);
            assert!(per_point.values().all(|&c| c == q as usize));
        }
    }

    #[test]
    fn rearrangement_conserves_lines() {
        for q in [2u32, 3] {
            let parts = construction_a_core(q).unwrap();
            let s = special_flat(6, 3, q);
            let removed = disjoint_line_coverage(&parts.removed_planes, &s);
            let added = disjoint_line_coverage(&parts.new_planes, &s);
            assert_eq!(removed, added);
            let core = disjoint_line_coverage(&parts.core(), &s);
            let qq = q as usize;
            assert_eq!(core.len(), qq.pow(6) * (qq * qq + qq + 1));
            assert!(core.values().all(|&m| m == 1));
        }
    }

    #[test]
    fn removed_planes_cover_trace_zero_points() {
        for q in [2u32, 3] {
            let ef = gf3(q).unwrap();
            let parts = construction_a_core(q).unwrap();
            let mut cover: HashMap<Subspace, usize> = HashMap::new();
            for e in &parts.removed_planes {
                for p in e.points() {
                    *cover.entry(p).or_default() += 1;
                }
            }
            let mut expected = HashSet::new();
            for x in ef.elements().skip(1) {
                for v in ef.elements().filter(|&v| ef.trace(v) == 0) {
                    let y = ef.mul(ef.mul(x, ef.frobenius(x)), v);
                    expected.insert(Subspace::from_rows(q, 6, &[pair_coords(q, x, y)]).unwrap());
                }
            }
            let qq = q as usize;
            assert_eq!(expected.len(), qq * qq * (qq * qq + qq + 1));
            assert_eq!(cover.keys().copied().collect::<HashSet<_>>(), expected);
            assert!(cover.values().all(|&c| c == qq));
            // removed planes are the lifts of R
            let lifted: HashSet<Subspace> =
                ef.elements().map(|u| graph_plane(ef, &alternating(ef, u))).collect();
            assert_eq!(lifted, parts.removed_planes.iter().copied().collect());
        }
    }

    #[test]
    fn line_planes_behave() {
        for q in [2u32, 3] {
            let parts = construction_a_core(q).unwrap();
            let s = special_flat(6, 3, q);
            let meets: Vec<Subspace> = parts.line_planes.iter().map(|e| e.intersect(&s).unwrap()).collect();
            assert!(meets.iter().all(|m| m.dim() == 2));
            assert_eq!(meets.iter().collect::<HashSet<_>>().len(), meets.len());
            let lp = parts.line_planes.members();
            for i in 0..lp.len() {
                for j in i + 1..lp.len() {
                    let m = lp[i].intersect(&lp[j]).unwrap();
                    assert!(s.contains(&m).unwrap());
                }
            }
            let new_lines: HashSet<Subspace> = parts.new_planes.iter().flat_map(|n| n.subspaces(2).collect::<Vec<_>>()).collect();
            for e in lp {
                assert!(e.subspaces(2).all(|l| !new_lines.contains(&l)));
            }
        }
    }

    #[test]
    fn lmrd_cap_q2() {
        let rep = lmrd_cap_check(2).unwrap();
        assert_eq!(rep.planes, 1395);
        assert_eq!(rep.rejected, 1296);
        assert_eq!(rep.meeting_s_in_line, 98);
        assert!(rep.s_addable);
        assert_eq!(rep.bound, 71);
        assert!(rep.holds());
    }

    #[test]
    fn greedy_respects_distance() {
        let g = GeometrySpec::new(6, 2).unwrap();
        let c = greedy_code(2, 6, 4, g.planes()).unwrap();
        assert!(c.len() >= 2);
        assert_eq!(min_dist(&c), 4);
    }
}
