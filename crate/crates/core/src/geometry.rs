//! Flats of PG(v-1, q), the special flat, plane spreads and the affine
//! matrix geometry.

use crate::error::{Error, Result};
use crate::fields::{gf, gf3};
use crate::linalg::{CanonicalMatrices, Matrix, Subspace, SubspaceCode};

/// Number of `k`-dimensional subspaces of GF(q)^v (zero outside `0..=v`).
pub fn gaussian(v: i64, k: i64, q: u64) -> u128 {
    if k < 0 || k > v || v < 0 {
        return 0;
    }
    // q-Pascal: [n, j] = [n-1, j-1] + q^j [n-1, j]
    let (v, k) = (v as usize, k as usize);
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for n in 1..=v {
        for j in (1..=k.min(n)).rev() {
            row[j] =row[j - 1] + (q as u128).pow(j as u32) * row[j];
        }
    }
    row[k]
}

/// PG(v-1, q) with its flat counts.
#[derive(Clone, Debug)]
pub struct GeometrySpec {
    v: usize,
    q: u32,
    counts: Vec<u128>,
}

impl GeometrySpec {
    pub fn new(v: usize, q: u32) -> Result<GeometrySpec> {
        gf(q)?;
        if v > crate::linalg::MAX_DIM {
            return Err(Error::DimensionMismatch(format!("ambient dimension {v} too large")));
        }
        let counts = (0..=v).map(|k| gaussian(v as i64, k as i64, q as u64)).collect();
        Ok(GeometrySpec { v, q, counts })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn flat_count(&self, k: usize) -> u128 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// All `k`-dimensional subspaces in canonical order.
    pub fn flats(&self, k: usize) -> impl Iterator<Item = Subspace> {
        CanonicalMatrices::new(self.q, self.v, k).map(|m| Subspace::from_canonical(m).expect("canonical"))
    }

    pub fn points(&self) -> impl Iterator<Item = Subspace> {
        self.flats(1)
    }

    pub fn lines(&self) -> impl Iterator<Item = Subspace> {
        self.flats(2)
    }

    pub fn planes(&self) -> impl Iterator<Item = Subspace> {
        self.flats(3)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.q, self.v)
    }
}

/// The flat spanned by the last `v - k` unit vectors.
pub fn special_flat(v: usize, k: usize, q: u32) -> Subspace {
    Subspace::coordinate(q, v, &(k..v).collect::<Vec<_>>())
}

/// Lines of the geometry meeting `s` trivially.
pub fn lines_disjoint_from<'a>(geom: &'a GeometrySpec, s: &'a Subspace) -> impl Iterator<Item = Subspace> + 'a {
    geom.lines().filter(move |l| l.sum_dim(s).expect("same ambient") == s.dim() + 2)
}

/// Maps a pair of GF(q^3) elements to GF(q)^6, first component first.
pub fn pair_coords(q: u32, x: crate::fields::ExtElem, y: crate::fields::ExtElem) -> [u8; 6] {
    let ef = gf3(q).expect("supported field");
    let (a, b) = (ef.coords(x), ef.coords(y));
    [a[0], a[1], a[2], b[0], b[1], b[2]]
}

/// The Desarguesian plane spread of PG(5,q): the GF(q)-subspaces underlying
/// the points of PG(1, q^3).
pub fn plane_spread_field_reduction(q: u32) -> Result<SubspaceCode> {
    let ef = gf3(q)?;
    let basis = ef.basis();
    let mut members = Vec::new();
    for m in ef.elements() {
        let rows: Vec<[u8; 6]> = basis.iter().map(|&b| pair_coords(q, b, ef.mul(m, b))).collect();
        members.push(Subspace::from_rows(q, 6, &rows)?);
    }
    members.push(special_flat(6, 3, q));
    SubspaceCode::new(6, q, members)
}

/// The flat with canonical matrix `(I_m | A ; 0 | Z)` of Lemma-4 type: an
/// `(m + t)`-space meeting the special `n`-flat exactly in `<Z>`.
pub fn affine_matrix_flat(z: &Matrix, a: &Matrix) -> Result<Subspace> {
    let (t, n) = (z.nrows(), z.ncols());
    let m = a.nrows();
    if a.ncols() != n || a.q() != z.q() {
        return Err(Error::DimensionMismatch("A and Z must have the same number of columns".into()));
    }
    let rank = z.rank();
    if rank != t {
        return Err(Error::RankDeficient { rank, expected: t });
    }
    let q = z.q();
    let top = Matrix::identity(q, m).hstack(a)?;
    let bottom = Matrix::zeros(q, t, m).hstack(z)?;
    Ok(Subspace::span(&top.vstack(&bottom)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn gaussian_product(v: u32, k: u32, q: u128) -> u128 {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= q.pow(v - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian(6, 3, 2), 1395);
        assert_eq!(gaussian(5, 2, 2), 155);
        assert_eq!(gaussian(7, 0, 5), 1);
        assert_eq!(gaussian(4, 5, 2), 0);
        assert_eq!(gaussian(4, -1, 2), 0);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for v in 0..=8 {
                for k in 0..=v {
                    assert_eq!(gaussian(v as i64, k as i64, q), gaussian_product(v, k, q as u128), "{v} {k} {q}");
                }
            }
        }
        let total: u128 = (0..=6).map(|k| gaussian(6, k, 2)).sum();
        assert_eq!(total, 2825);
    }

    #[test]
    fn flat_enumeration_pg52() {
        let g = GeometrySpec::new(6, 2).unwrap();
        let planes: Vec<_> = g.planes().collect();
        assert_eq!(planes.len() as u128, g.flat_count(3));
        assert_eq!(planes.len(), 1395);
        assert_eq!(g.points().count(), 63);
        assert_eq!(planes[0], Subspace::coordinate(2, 6, &[0, 1, 2]));
    }

    #[test]
    fn points_on_planes_flag_count() {
        for q in [2u32, 3] {
            let g = GeometrySpec::new(if q == 2 { 6 } else { 5 }, q).unwrap();
            let mut deg: HashMap<Subspace, u128> = HashMap::new();
            for p in g.planes() {
                for pt in p.points() {
                    *deg.entry(pt).or_default() += 1;
                }
            }
            let expect = gaussian(g.v() as i64 - 1, 2, q as u64);
            assert_eq!(deg.len() as u128, g.flat_count(1));
            assert!(deg.values().all(|&d| d == expect));
        }
    }

    #[test]
    fn disjoint_line_counts() {
        for (q, n) in [(2u32, 448usize), (3, 9477)] {
            let g = GeometrySpec::new(6, q).unwrap();
            let s = special_flat(6, 3, q);
            let lines: Vec<_> = lines_disjoint_from(&g, &s).collect();
            let qq = q as usize;
            assert_eq!(lines.len(), qq.pow(6) * (qq * qq + qq + 1));
            assert_eq!(lines.len(), n);
            assert!(lines.iter().all(|l| l.intersect(&s).unwrap().dim() == 0));
        }
    }

    #[test]
    fn field_reduction_spreads_partition_points() {
        for q in [2u32, 3, 4] {
            let spread = plane_spread_field_reduction(q).unwrap();
            assert_eq!(spread.len() as u32, q * q * q + 1);
            let mut seen: HashMap<Subspace, usize> = HashMap::new();
            for e in &spread {
                for p in e.points() {
                    *seen.entry(p).or_default() += 1;
                }
            }
            assert_eq!(seen.len() as u128, gaussian(6, 1, q as u64));
            assert!(seen.values().all(|&c| c == 1));
            for (i, a) in spread.iter().enumerate() {
                for b in &spread.members()[i + 1..] {
                    assert_eq!(a.distance(b).unwrap(), 6);
                }
            }
        }
    }

    #[test]
    fn hyperplane_sections_of_plane_spread() {
        let spread = plane_spread_field_reduction(2).unwrap();
        let g = GeometrySpec::new(6, 2).unwrap();
        for h in g.flats(5) {
            let dims: Vec<usize> = spread.iter().map(|e| e.intersect(&h).unwrap().dim()).collect();
            assert_eq!(dims.iter().filter(|&&d| d == 3).count(), 1);
            assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 8);
        }
    }

    #[test]
    fn affine_flats_meet_special_flat_in_z() {
        let q = 2;
        let s = special_flat(5, 2, q);
        let empty = Matrix::zeros(q, 0, 3);
        let a = Matrix::from_rows(q, 3, &[[1, 0, 1], [0, 1, 1]]).unwrap();
        let f = affine_matrix_flat(&empty, &a).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.intersect(&s).unwrap().dim(), 0);

        let z = Matrix::from_rows(q, 3, &[[0, 1, 0]]).unwrap();
        let f = affine_matrix_flat(&z, &a).unwrap();
        assert_eq!(f.dim(), 3);
        let meet = f.intersect(&s).unwrap();
        assert_eq!(meet, Subspace::from_rows(q, 5, &[[0, 0, 0, 1, 0]]).unwrap());

        // parallel class: all A give flats with the same space at infinity
        let mut flats = std::collections::HashSet::new();
        for code in 0u32..64 {
            let rows: Vec<Vec<u8>> =
                (0..2).map(|i| (0..3).map(|j| ((code >> (3 * i + j)) & 1) as u8).collect()).collect();
            let a = Matrix::from_rows(q, 3, &rows).unwrap();
            let f = affine_matrix_flat(&z, &a).unwrap();
            assert_eq!(f.intersect(&s).unwrap(), meet);
            flats.insert(f);
        }
        assert_eq!(flats.len(), 1 << (2 * (3 - 1)));

        let bad = Matrix::from_rows(q, 3, &[[1, 1, 0], [1, 1, 0]]).unwrap();
        assert!(matches!(affine_matrix_flat(&bad, &a), Err(Error::RankDeficient { .. })));
    }
}
