//! Partial line spreads of size 9 in PG(4,2): reguli, the four types X, E,
//! IΔ and IΔ′, hole structure, exhaustive classification and symmetry data.

use std::fmt;
use std::str::FromStr;

use crate::binary::{
    automorphisms, extend_span, find_isomorphism, mask_points, mask_subspace, point_orbits, subspace_mask,
    BinStructure,
};
use crate::error::{Error, Result};
use crate::geometry::{plane_spread_field_reduction, GeometrySpec};
use crate::linalg::{Matrix, Subspace};

/// Order of GL(5, 2).
pub const GL52_ORDER: u64 = 9_999_360;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpreadType {
    X,
    E,
    IDelta,
    IDeltaPrime,
}

impl SpreadType {
    pub const ALL: [SpreadType; 4] = [SpreadType::X, SpreadType::E, SpreadType::IDelta, SpreadType::IDeltaPrime];

    pub fn pattern(self) -> Pattern {
        match self {
            SpreadType::X => Pattern::X,
            SpreadType::E => Pattern::E,
            SpreadType::IDelta | SpreadType::IDeltaPrime => Pattern::IDelta,
        }
    }

    /// ASCII name used in files and on the command line.
    pub fn ascii(self) -> &'static str {
        match self {
            SpreadType::X => "X",
            SpreadType::E => "E",
            SpreadType::IDelta => "ID",
            SpreadType::IDeltaPrime => "ID'",
        }
    }
}

impl fmt::Display for SpreadType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpreadType::X => "X",
            SpreadType::E => "E",
            SpreadType::IDelta => "IΔ",
            SpreadType::IDeltaPrime => "IΔ′",
        })
    }
}

impl FromStr for SpreadType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpreadType> {
        match s {
            "X" | "x" => Ok(SpreadType::X),
            "E" | "e" => Ok(SpreadType::E),
            "ID" | "id" | "IΔ" => Ok(SpreadType::IDelta),
            "ID'" | "id'" | "IDp" | "idp" | "IΔ′" | "IΔ'" => Ok(SpreadType::IDeltaPrime),
            _ => Err(Error::Unsupported(format!("unknown spread type {s:?} (expected X, E, ID, ID')"))),
        }
    }
}

/// Regulus pattern of a size-9 partial spread.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    X,
    E,
    IDelta,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::X => "X",
            Pattern::E => "E",
            Pattern::IDelta => "IΔ",
        })
    }
}

fn span_mask(mask: u64) -> u64 {
    let mut span = 1u64;
    for x in mask_points(mask) {
        if span >> x & 1 == 0 {
            span = extend_span(span, x as usize);
        }
    }
    span
}

fn span_dim(mask: u64) -> u32 {
    span_mask(mask).count_ones().trailing_zeros()
}

fn point(x: u8) -> Subspace {
    mask_subspace(5, 1 << x)
}

/// Pairwise disjoint lines of PG(4, 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSpread {
    lines: Vec<Subspace>,
}

impl PartialSpread {
    pub fn new(lines: Vec<Subspace>) -> Result<PartialSpread> {
        for l in &lines {
            if l.q() != 2 || l.ambient_dim() != 5 || l.dim() != 2 {
                return Err(Error::Degenerate("partial spreads consist of lines of PG(4,2)".into()));
            }
        }
        let masks: Vec<u64> = lines.iter().map(subspace_mask).collect();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                if masks[i] & masks[j] != 0 {
                    return Err(Error::Degenerate(format!("lines {i} and {j} meet")));
                }
            }
        }
        Ok(PartialSpread { lines })
    }

    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn masks(&self) -> Vec<u64> {
        self.lines.iter().map(subspace_mask).collect()
    }

    pub fn covered(&self) -> u64 {
        self.masks().iter().fold(0, |a, m| a | m)
    }

    pub fn holes(&self) -> Vec<Subspace> {
        let all = (1u64 << 32) - 2;
        mask_points(all & !self.covered()).map(point).collect()
    }

    pub fn structure(&self) -> BinStructure {
        BinStructure::new(5, self.masks())
    }

    /// Image under a collineation.
    pub fn map(&self, g: &crate::binary::Collineation) -> PartialSpread {
        let lines = self.masks().into_iter().map(|m| mask_subspace(5, g.apply_mask(m))).collect();
        PartialSpread { lines }
    }
}

/// Three pairwise skew lines spanning a solid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regulus {
    pub lines: [Subspace; 3],
}

impl Regulus {
    pub fn solid(&self) -> Subspace {
        self.lines[0].sum(&self.lines[1]).and_then(|s| s.sum(&self.lines[2])).expect("same ambient")
    }

    pub fn points(&self) -> u64 {
        self.lines.iter().map(subspace_mask).fold(0, |a, m| a | m)
    }
}

/// The triple as a regulus if the lines are pairwise skew and span a solid.
pub fn regulus_of(l1: &Subspace, l2: &Subspace, l3: &Subspace) -> Option<Regulus> {
    let (a, b, c) = (subspace_mask(l1), subspace_mask(l2), subspace_mask(l3));
    if a & b != 0 || a & c != 0 || b & c != 0 {
        return None;
    }
    (span_dim(a | b | c) == 4).then_some(Regulus { lines: [*l1, *l2, *l3] })
}

/// The three transversals of a regulus.
pub fn opposite_regulus(r: &Regulus) -> Regulus {
    let [l1, l2, l3] = &r.lines;
    let mut out = Vec::new();
    for p in l1.points() {
        let plane = p.sum(l2).expect("same ambient");
        let r3 = plane.intersect(l3).expect("same ambient");
        out.push(p.sum(&r3).expect("same ambient"));
    }
    Regulus { lines: [out[0], out[1], out[2]] }
}

/// All lines of PG(4, 2) other than the given ones meeting each of them.
pub fn transversals(lines: &[Subspace]) -> Vec<Subspace> {
    let masks: Vec<u64> = lines.iter().map(subspace_mask).collect();
    all_line_masks()
        .into_iter()
        .filter(|m| masks.iter().all(|l| l & m != 0 && l != m))
        .map(|m| mask_subspace(5, m))
        .collect()
}

fn all_line_masks() -> Vec<u64> {
    GeometrySpec::new(5, 2).expect("PG(4,2)").lines().map(|l| subspace_mask(&l)).collect()
}

/// Hole structure and regulus pattern of a size-9 partial spread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadProfile {
    pub holes: Vec<Subspace>,
    /// The plane `E` with `holes = E \ L`.
    pub plane: Subspace,
    pub line: Subspace,
    /// Index triples of the contained reguli.
    pub reguli: Vec<[usize; 3]>,
    /// Number of reguli through each line.
    pub regulus_counts: Vec<usize>,
    pub pattern: Pattern,
}

/// Holes, hole plane, reguli, regulus counts, pattern.
type MaskProfile = (u64, u64, Vec<[usize; 3]>, Vec<usize>, Pattern);

fn profile_masks(masks: &[u64]) -> Result<MaskProfile> {
    if masks.len() != 9 {
        return Err(Error::Degenerate(format!("profile needs 9 lines, got {}", masks.len())));
    }
    let covered = masks.iter().fold(0, |a, m| a | m);
    let holes = ((1u64 << 32) - 2) & !covered;
    if holes.count_ones() != 4 {
        return Err(Error::Degenerate("a size-9 partial spread has 4 holes".into()));
    }
    let plane = span_mask(holes) & !1;
    let line = plane & !holes;
    if plane.count_ones() != 7 || span_mask(line) & !1 != line || line.count_ones() != 3 {
        return Err(Error::Degenerate("holes do not form a plane minus a line".into()));
    }
    let mut reguli = Vec::new();
    for i in 0..9 {
        for j in i + 1..9 {
            for k in j + 1..9 {
                if span_dim(masks[i] | masks[j] | masks[k]) == 4 {
                    reguli.push([i, j, k]);
                }
            }
        }
    }
    if reguli.len() != 4 {
        return Err(Error::Degenerate(format!("expected 4 reguli, found {}", reguli.len())));
    }
    let mut counts = vec![0usize; 9];
    for r in &reguli {
        for &i in r {
            counts[i] += 1;
        }
    }
    for (i, &m) in masks.iter().enumerate() {
        let expect = match (m & line).count_ones() {
            3 => 4,
            1 => 2,
            _ => 1,
        };
        if counts[i] != expect {
            return Err(Error::Degenerate("regulus counts contradict the hole structure".into()));
        }
    }
    let meeting: Vec<usize> = (0..9).filter(|&i| (masks[i] & line).count_ones() == 1).collect();
    let pattern = if counts.contains(&4) {
        Pattern::X
    } else if reguli.iter().any(|r| meeting.iter().all(|i| r.contains(i))) {
        Pattern::E
    } else {
        Pattern::IDelta
    };
    Ok((holes, plane, reguli, counts, pattern))
}

pub fn profile(ps: &PartialSpread) -> Result<SpreadProfile> {
    let (holes, plane, reguli, regulus_counts, pattern) = profile_masks(&ps.masks())?;
    Ok(SpreadProfile {
        holes: mask_points(holes).map(point).collect(),
        plane: mask_subspace(5, plane),
        line: mask_subspace(5, plane & !holes),
        reguli,
        regulus_counts,
        pattern,
    })
}

fn drop_last_coordinate(s: &Subspace) -> Subspace {
    Subspace::span(&s.cm().select_columns(&[0, 1, 2, 3, 4]))
}

fn type_x() -> PartialSpread {
    let spread = plane_spread_field_reduction(2).expect("GF(2)");
    let h = Subspace::coordinate(2, 6, &[0, 1, 2, 3, 4]);
    let mut lines = Vec::new();
    for e in &spread {
        let sec = drop_last_coordinate(&e.intersect(&h).expect("same ambient"));
        if sec.dim() == 3 {
            lines.push(sec.subspaces(2).next().expect("a plane has lines"));
        } else {
            lines.push(sec);
        }
    }
    lines.sort();
    PartialSpread::new(lines).expect("hyperplane section of a spread")
}

fn type_e() -> PartialSpread {
    let x = type_x();
    let prof = profile(&x).expect("size 9");
    let r = prof.reguli[0];
    let reg = Regulus { lines: [x.lines[r[0]], x.lines[r[1]], x.lines[r[2]]] };
    let opp = opposite_regulus(&reg);
    let mut lines: Vec<Subspace> =
        x.lines.iter().enumerate().filter(|(i, _)| !r.contains(i)).map(|(_, l)| *l).collect();
    lines.extend(opp.lines);
    lines.sort();
    PartialSpread::new(lines).expect("regulus replacement keeps lines disjoint")
}

/// Ingredients of the IΔ construction.
#[derive(Clone, Debug)]
pub struct IDeltaFrame {
    pub l: [Subspace; 3],
    pub transversal: Subspace,
    pub solids: [Subspace; 4],
    pub plane: Subspace,
    /// All choices of `(L1', L2', L3')` with `Li' ⊂ Hi` keeping the six lines skew.
    pub wirings: Vec<[Subspace; 3]>,
}

/// `L1 = <e1,e2>`, `L2 = <e3,e4>`, `L3 = <e5, e1+e3>`, their transversal,
/// the solids, the plane `E` and the wirings.
pub fn idelta_frame() -> IDeltaFrame {
    let q = 2;
    let l1 = Subspace::from_rows(q, 5, &[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]]).expect("valid");
    let l2 = Subspace::from_rows(q, 5, &[[0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]).expect("valid");
    let l3 = Subspace::from_rows(q, 5, &[[0, 0, 0, 0, 1], [1, 0, 1, 0, 0]]).expect("valid");
    let sum = |a: &Subspace, b: &Subspace| a.sum(b).expect("same ambient");
    let h1 = sum(&l2, &l3);
    let h2 = sum(&l1, &l3);
    let h3 = sum(&l1, &l2);
    let t = h1.intersect(&h2).and_then(|x| x.intersect(&h3)).expect("same ambient");
    assert_eq!(t.dim(), 2, "three lines off a solid have a line as transversal");
    let geom = GeometrySpec::new(5, 2).expect("PG(4,2)");
    let meets_in_t = |x: &Subspace, h: &Subspace| x.intersect(h).expect("same ambient") == t;
    let plane = geom
        .planes()
        .find(|e| e.contains(&t).unwrap() && [&h1, &h2, &h3].iter().all(|h| meets_in_t(e, h)))
        .expect("E exists");
    let h4 = geom
        .flats(4)
        .find(|h| h.contains(&t).unwrap() && meets_in_t(&plane, h) && ![&h1, &h2, &h3].contains(&h))
        .expect("H4 exists");
    let lines: Vec<Subspace> = geom.lines().collect();
    let skew = |a: &Subspace, b: &Subspace| a.intersect_dim(b).unwrap() == 0;
    let base = [l1, l2, l3];
    let cands = |h: &Subspace| -> Vec<Subspace> {
        lines.iter().filter(|m| h.contains(m).unwrap() && base.iter().all(|b| skew(b, m))).copied().collect()
    };
    let (c1, c2, c3) = (cands(&h1), cands(&h2), cands(&h3));
    let mut wirings = Vec::new();
    for a in &c1 {
        for b in c2.iter().filter(|b| skew(a, b)) {
            for c in c3.iter().filter(|c| skew(a, c) && skew(b, c)) {
                wirings.push([*a, *b, *c]);
            }
        }
    }
    IDeltaFrame { l: base, transversal: t, solids: [h1, h2, h3, h4], plane, wirings }
}

/// The two size-9 completions of the first wiring: `L, L'` completed to a
/// spread of `H4` in both possible ways.
pub fn idelta_completions(frame: &IDeltaFrame, wiring: &[Subspace; 3]) -> Vec<PartialSpread> {
    let h4 = frame.solids[3];
    let ys: Vec<Subspace> = wiring.iter().map(|m| m.intersect(&h4).expect("same ambient")).collect();
    let lprime = ys[0].sum(&ys[1]).and_then(|s| s.sum(&ys[2])).expect("same ambient");
    assert_eq!(lprime.dim(), 2, "the points Li' ∩ H4 are collinear");
    let used = subspace_mask(&frame.transversal) | subspace_mask(&lprime);
    let h4_mask = subspace_mask(&h4);
    let free: Vec<u64> = all_line_masks()
        .into_iter()
        .filter(|&m| m & !h4_mask == 0 && m & used == 0)
        .collect();
    let mut out = Vec::new();
    for i in 0..free.len() {
        for j in i + 1..free.len() {
            for k in j + 1..free.len() {
                let (a, b, c) = (free[i], free[j], free[k]);
                if a & b == 0 && a & c == 0 && b & c == 0 {
                    let mut lines: Vec<Subspace> = frame.l.to_vec();
                    lines.extend(wiring.iter().copied());
                    lines.extend([a, b, c].iter().map(|&m| mask_subspace(5, m)));
                    lines.sort();
                    out.push(PartialSpread::new(lines).expect("disjoint by construction"));
                }
            }
        }
    }
    out
}

/// A representative of each type. The two IΔ completions are labelled in
/// the order in which they are found.
pub fn construct_type(t: SpreadType) -> PartialSpread {
    match t {
        SpreadType::X => type_x(),
        SpreadType::E => type_e(),
        SpreadType::IDelta | SpreadType::IDeltaPrime => {
            let frame = idelta_frame();
            let mut comps = idelta_completions(&frame, &frame.wirings[0]);
            let i = if t == SpreadType::IDelta { 0 } else { 1 };
            comps.swap_remove(i)
        }
    }
}

/// The type of a size-9 partial spread: its pattern, with the two IΔ
/// classes told apart by an isomorphism test against the representatives.
pub fn classify_type(ps: &PartialSpread, budget: u64) -> Result<SpreadType> {
    let prof = profile(ps)?;
    Ok(match prof.pattern {
        Pattern::X => SpreadType::X,
        Pattern::E => SpreadType::E,
        Pattern::IDelta => {
            let st = ps.structure();
            let rep = construct_type(SpreadType::IDelta).structure();
            if find_isomorphism(&st, &rep, budget)?.is_some() {
                SpreadType::IDelta
            } else {
                let rep2 = construct_type(SpreadType::IDeltaPrime).structure();
                if find_isomorphism(&st, &rep2, budget)?.is_none() {
                    return Err(Error::Degenerate("IΔ-pattern spread matches neither representative".into()));
                }
                SpreadType::IDeltaPrime
            }
        }
    })
}

/// One isomorphism class found by the exhaustive search.
#[derive(Clone, Debug)]
pub struct SpreadClass {
    pub ty: SpreadType,
    pub pattern: Pattern,
    pub representative: PartialSpread,
    /// Number of enumerated spreads (through the fixed skew pair) in the class.
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub classes: Vec<SpreadClass>,
    /// Size-9 partial spreads containing the fixed pair of skew lines.
    pub enumerated: usize,
}

/// Enumerates every size-9 partial spread through `<e1,e2>` and `<e3,e4>`
/// (GL(5,2) is transitive on skew pairs) and sorts them into isomorphism
/// classes: fingerprints first, then explicit isomorphism tests.
pub fn classify_all_size9(budget: u64) -> Result<Classification> {
    let lines = all_line_masks();
    let l1 = subspace_mask(&Subspace::coordinate(2, 5, &[0, 1]));
    let l2 = subspace_mask(&Subspace::coordinate(2, 5, &[2, 3]));
    let cands: Vec<u64> = lines.iter().copied().filter(|&m| m & (l1 | l2) == 0).collect();
    let mut found: Vec<Vec<u64>> = Vec::new();
    let mut stack = vec![l1, l2];
    fn extend(cands: &[u64], from: usize, used: u64, stack: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if stack.len() == 9 {
            out.push(stack.clone());
            return;
        }
        for i in from..cands.len() {
            if cands[i] & used == 0 {
                stack.push(cands[i]);
                extend(cands, i + 1, used | cands[i], stack, out);
                stack.pop();
            }
        }
    }
    extend(&cands, 0, l1 | l2, &mut stack, &mut found);

    type Key = (Pattern, (Vec<u64>, Vec<u32>));
    let mut classes: Vec<(Key, BinStructure, SpreadClass)> = Vec::new();
    for masks in &found {
        let (_, _, _, _, pattern) = profile_masks(masks)?;
        let st = BinStructure::new(5, masks.clone());
        let key = (pattern, st.fingerprint());
        let mut hit = None;
        for (i, (k, rep, _)) in classes.iter().enumerate() {
            if *k == key && find_isomorphism(&st, rep, budget)?.is_some() {
                hit = Some(i);
                break;
            }
        }
        match hit {
            Some(i) => classes[i].2.found += 1,
            None => {
                let mut ls: Vec<Subspace> = masks.iter().map(|&m| mask_subspace(5, m)).collect();
                ls.sort();
                let ps = PartialSpread::new(ls)?;
                let ty = classify_type(&ps, budget)?;
                classes.push((key, st, SpreadClass { ty, pattern, representative: ps, found: 1 }));
            }
        }
    }
    let mut classes: Vec<SpreadClass> = classes.into_iter().map(|c| c.2).collect();
    classes.sort_by_key(|c| c.ty);
    Ok(Classification { classes, enumerated: found.len() })
}

/// Stabilizer order and point orbits of a partial spread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadSymmetry {
    pub order: u64,
    /// Orbit sizes on the covered points, largest first.
    pub orbits: Vec<usize>,
}

impl SpreadSymmetry {
    /// Orbit sizes on the points of the corresponding 9-configuration.
    pub fn doubled(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| 2 * o).collect()
    }
}

fn orbit_sizes(group: &[crate::binary::Collineation], points: u64) -> Vec<usize> {
    let mut sizes: Vec<usize> = point_orbits(group, points).iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Stabilizer of the partial spread in GL(5, 2) and its orbits on covered points.
pub fn spread_aut_and_orbits(ps: &PartialSpread, budget: u64) -> Result<SpreadSymmetry> {
    let st = ps.structure();
    let group = automorphisms(&st, budget)?;
    Ok(SpreadSymmetry { order: group.len() as u64, orbits: orbit_sizes(&group, ps.covered()) })
}

/// The nine planes of PG(5, 2) through `P = e6` whose quotient by `P` is `ps`.
pub fn nine_configuration_of(ps: &PartialSpread) -> Vec<Subspace> {
    let p = [0u8, 0, 0, 0, 0, 1];
    ps.lines
        .iter()
        .map(|l| {
            let m = l.cm().hstack(&Matrix::zeros(2, 2, 1)).expect("shapes");
            let mut rows = m.to_rows();
            rows.push(p.to_vec());
            Subspace::from_rows(2, 6, &rows).expect("valid")
        })
        .collect()
}

/// Stabilizer of the nine planes in GL(6, 2), with orbits on the 54 points
/// they cover besides `P`.
pub fn nine_configuration_symmetry(ps: &PartialSpread, budget: u64) -> Result<SpreadSymmetry> {
    let planes = nine_configuration_of(ps);
    let st = BinStructure::from_subspaces(6, &planes)?;
    let group = automorphisms(&st, budget)?;
    let covered = st.blocks().iter().fold(0, |a, m| a | m) & !(1u64 << 32);
    Ok(SpreadSymmetry { order: group.len() as u64, orbits: orbit_sizes(&group, covered) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::DEFAULT_BUDGET;

    fn skew_lines_in_solid() -> (Subspace, Subspace, Subspace) {
        let s = Subspace::coordinate(2, 5, &[0, 1, 2, 3]);
        let ls: Vec<Subspace> = s.subspaces(2).collect();
        let a = ls[0];
        let b = *ls.iter().find(|l| l.intersect_dim(&a).unwrap() == 0).unwrap();
        let c = *ls
            .iter()
            .find(|l| l.intersect_dim(&a).unwrap() == 0 && l.intersect_dim(&b).unwrap() == 0)
            .unwrap();
        (a, b, c)
    }

    #[test]
    fn regulus_basics() {
        let (a, b, c) = skew_lines_in_solid();
        let r = regulus_of(&a, &b, &c).expect("skew lines in a solid");
        let opp = opposite_regulus(&r);
        assert_eq!(opp.points(), r.points());
        assert_eq!(r.points().count_ones(), 9);
        for m in &opp.lines {
            for l in &r.lines {
                assert_eq!(m.intersect_dim(l).unwrap(), 1);
            }
        }
        let back = opposite_regulus(&opp);
        let mut x = back.lines.to_vec();
        let mut y = r.lines.to_vec();
        x.sort();
        y.sort();
        assert_eq!(x, y);
        let f = idelta_frame();
        assert!(regulus_of(&f.l[0], &f.l[1], &f.l[2]).is_none());
        assert_eq!(transversals(&f.l), vec![f.transversal]);
        assert_eq!(transversals(&[a, b, c]).len(), 3);
    }

    #[test]
    fn constructed_types_have_expected_profiles() {
        for t in SpreadType::ALL {
            let ps = construct_type(t);
            assert_eq!(ps.len(), 9);
            let p = profile(&ps).unwrap();
            assert_eq!(p.holes.len(), 4);
            assert_eq!(p.reguli.len(), 4);
            assert_eq!(p.pattern, t.pattern());
            let mut counts = p.regulus_counts.clone();
            counts.sort();
            match t.pattern() {
                Pattern::X => assert_eq!(counts, vec![1, 1, 1, 1, 1, 1, 1, 1, 4]),
                _ => assert_eq!(counts, vec![1, 1, 1, 1, 1, 1, 2, 2, 2]),
            }
        }
    }

    #[test]
    fn x_reguli_share_the_line() {
        let ps = construct_type(SpreadType::X);
        let p = profile(&ps).unwrap();
        let l = ps.lines().iter().position(|m| *m == p.line).expect("L is a spread line");
        assert!(p.reguli.iter().all(|r| r.contains(&l)));
    }

    #[test]
    fn idelta_has_regulus_off_e() {
        for t in [SpreadType::IDelta, SpreadType::IDeltaPrime] {
            let ps = construct_type(t);
            let p = profile(&ps).unwrap();
            let off: Vec<_> = p
                .reguli
                .iter()
                .filter(|r| r.iter().all(|&i| ps.lines()[i].intersect_dim(&p.plane).unwrap() == 0))
                .collect();
            assert_eq!(off.len(), 1);
        }
    }

    #[test]
    fn solids_without_holes_hold_three_lines() {
        let g = GeometrySpec::new(5, 2).unwrap();
        for t in SpreadType::ALL {
            let ps = construct_type(t);
            let p = profile(&ps).unwrap();
            let mut empty = 0;
            for h in g.flats(4) {
                let holes = p.holes.iter().filter(|x| h.contains(x).unwrap()).count();
                let lines = ps.lines().iter().filter(|l| h.contains(l).unwrap()).count();
                assert_eq!(2 * lines + holes, 6);
                if holes == 0 {
                    empty += 1;
                    assert_eq!(lines, 3);
                }
            }
            assert_eq!(empty, 4);
        }
    }

    #[test]
    fn idelta_wirings_are_equivalent() {
        let f = idelta_frame();
        assert_eq!(f.wirings.len(), 8);
        let six = |w: &[Subspace; 3]| {
            let mut v = f.l.to_vec();
            v.extend(w.iter().copied());
            BinStructure::from_subspaces(5, &v).unwrap()
        };
        let first = six(&f.wirings[0]);
        for w in &f.wirings[1..] {
            assert!(find_isomorphism(&six(w), &first, DEFAULT_BUDGET).unwrap().is_some());
        }
        assert_eq!(idelta_completions(&f, &f.wirings[0]).len(), 2);
    }

    #[test]
    fn idelta_classes_differ() {
        let a = construct_type(SpreadType::IDelta).structure();
        let b = construct_type(SpreadType::IDeltaPrime).structure();
        assert!(find_isomorphism(&a, &b, DEFAULT_BUDGET).unwrap().is_none());
        for t in SpreadType::ALL {
            assert_eq!(classify_type(&construct_type(t), DEFAULT_BUDGET).unwrap(), t);
        }
    }

    #[test]
    fn type_names_parse() {
        for t in SpreadType::ALL {
            assert_eq!(t.ascii().parse::<SpreadType>().unwrap(), t);
        }
        assert!("Q".parse::<SpreadType>().is_err());
    }

    #[test]
    fn stabilizers_and_orbits() {
        let want = [
            (SpreadType::X, 24, vec![24, 3]),
            (SpreadType::E, 6, vec![6, 6, 6, 6, 3]),
            (SpreadType::IDelta, 6, vec![6, 6, 3, 3, 3, 3, 3]),
            (SpreadType::IDeltaPrime, 6, vec![6, 6, 3, 3, 3, 3, 3]),
        ];
        for (t, order, orbits) in want {
            let ps = construct_type(t);
            let s = spread_aut_and_orbits(&ps, DEFAULT_BUDGET).unwrap();
            assert_eq!((s.order, &s.orbits), (order, &orbits), "{t}");
            // the 2^5 elations with centre P that fix every plane through P
            let n = nine_configuration_symmetry(&ps, DEFAULT_BUDGET).unwrap();
            assert_eq!(n.order, 32 * order);
            assert_eq!(n.orbits, s.doubled());
        }
    }

    #[test]
    fn classification_count_matches_stabilizers() {
        let c = classify_all_size9(DEFAULT_BUDGET).unwrap();
        let tys: Vec<SpreadType> = c.classes.iter().map(|k| k.ty).collect();
        assert_eq!(tys, SpreadType::ALL.to_vec());
        // |GL(5,2)| / |Aut| spreads per class, each holding 36 of the 8680
        // skew pairs
        let mut total = 0;
        for k in &c.classes {
            let aut = spread_aut_and_orbits(&k.representative, DEFAULT_BUDGET).unwrap().order;
            let expect = GL52_ORDER / aut * 36 / 8680;
            assert_eq!(k.found as u64, expect, "{}", k.ty);
            total += k.found;
        }
        assert_eq!(total, c.enumerated);
    }
}
