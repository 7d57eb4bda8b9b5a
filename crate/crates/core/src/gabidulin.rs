//! The q-ary (3,3,2) Gabidulin code `{a0 x + a1 x^q}` over GF(q^3), its rank
//! distribution, and the constant-rank subspaces used to rearrange lifted
//! codewords.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fields::{gf3, ExtElem, ExtField};
use crate::linalg::{CanonicalMatrices, Matrix, Subspace};

/// The linearized polynomial `x -> a0 x + a1 x^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinPoly {
    pub a0: ExtElem,
    pub a1: ExtElem,
}

impl LinPoly {
    pub const ZERO: LinPoly = LinPoly { a0: ExtElem::ZERO, a1: ExtElem::ZERO };

    pub fn new(a0: ExtElem, a1: ExtElem) -> LinPoly {
        LinPoly { a0, a1 }
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn eval(&self, ef: &ExtField, x: ExtElem) -> ExtElem {
        ef.add(ef.mul(self.a0, x), ef.mul(self.a1, ef.frobenius(x)))
    }

    pub fn add(&self, ef: &ExtField, other: &LinPoly) -> LinPoly {
        LinPoly { a0: ef.add(self.a0, other.a0), a1: ef.add(self.a1, other.a1) }
    }

    pub fn sub(&self, ef: &ExtField, other: &LinPoly) -> LinPoly {
        LinPoly { a0: ef.sub(self.a0, other.a0), a1: ef.sub(self.a1, other.a1) }
    }

    /// Multiplication by a base-field scalar.
    pub fn scale(&self, ef: &ExtField, c: u8) -> LinPoly {
        LinPoly { a0: ef.scale(c, self.a0), a1: ef.scale(c, self.a1) }
    }

    /// Multiplication by an element of GF(q^3).
    pub fn times(&self, ef: &ExtField, c: ExtElem) -> LinPoly {
        LinPoly { a0: ef.mul(c, self.a0), a1: ef.mul(c, self.a1) }
    }

    /// The 3x3 matrix over GF(q) acting on coordinate row vectors.
    pub fn matrix(&self, ef: &ExtField) -> Matrix {
        ef.matrix_of(|x| self.eval(ef, x))
    }
}

/// `u x^q - u^q x`; its kernel is `GF(q) u`.
pub fn alternating(ef: &ExtField, u: ExtElem) -> LinPoly {
    LinPoly { a0: ef.neg(ef.frobenius(u)), a1: u }
}

/// `a b^q - a^q b`.
pub fn alt_form(ef: &ExtField, a: ExtElem, b: ExtElem) -> ExtElem {
    ef.sub(ef.mul(a, ef.frobenius(b)), ef.mul(ef.frobenius(a), b))
}

/// All q^6 codewords, `a0` major.
pub fn codewords(q: u32) -> Result<impl Iterator<Item = LinPoly>> {
    let ef = gf3(q)?;
    Ok(ef.elements().flat_map(move |a0| ef.elements().map(move |a1| LinPoly { a0, a1 })))
}

/// Rank through the norm criterion: `a1 (x^q - b x)` with `b = -a0/a1` has a
/// nontrivial kernel iff `b` has norm 1.
fn rank_by_norm(ef: &ExtField, f: &LinPoly) -> usize {
    if f.is_zero() {
        return 0;
    }
    if f.a0.is_zero() || f.a1.is_zero() {
        return 3;
    }
    let b = ef.neg(ef.div(f.a0, f.a1).expect("a1 nonzero"));
    if ef.norm(b) == 1 {
        2
    } else {
        3
    }
}

/// Rank of the GF(q)-linear map `f`, computed from its coordinate matrix and
/// checked against the norm criterion.
pub fn rank_of(ef: &ExtField, f: &LinPoly) -> usize {
    let by_matrix = f.matrix(ef).rank();
    let by_norm = rank_by_norm(ef, f);
    assert_eq!(by_matrix, by_norm, "rank criteria disagree for {f:?}");
    by_matrix
}

/// Number of codewords of each rank 0..=3.
pub fn rank_distribution(q: u32) -> Result<[u64; 4]> {
    let ef = gf3(q)?;
    let mut hist = [0u64; 4];
    for f in codewords(q)? {
        hist[rank_of(ef, &f)] += 1;
    }
    Ok(hist)
}

/// The closed form `(1, 0, (q^3-1)(q^2+q+1), (q^3-1)(q^3-q^2-q))`.
pub fn rank_distribution_formula(q: u64) -> [u64; 4] {
    let c = q * q * q - 1;
    [1, 0, c * (q * q + q + 1), c * (q * q * q - q * q - q)]
}

/// Outcome of restricting the matrix-form code through `A -> ZA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictionWitness {
    pub domain: u64,
    pub image_size: u64,
    pub codomain: u64,
    pub injective: bool,
    pub surjective: bool,
}

impl RestrictionWitness {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Collects the image of the code under `A -> ZA` for a full-rank `t x 3`
/// matrix `Z`. The map is a bijection onto GF(q)^{2x3} when `t = 2`.
pub fn mrd_restriction(z: &Matrix) -> Result<RestrictionWitness> {
    let q = z.q();
    let ef = gf3(q)?;
    if z.ncols() != 3 {
        return Err(Error::DimensionMismatch("Z must have 3 columns".into()));
    }
    let rank = z.rank();
    if rank != z.nrows() {
        return Err(Error::RankDeficient { rank, expected: z.nrows() });
    }
    let mut image = HashSet::new();
    let mut domain = 0u64;
    for f in codewords(q)? {
        image.insert(z.mul(&f.matrix(ef))?);
        domain += 1;
    }
    let codomain = (q as u64).pow(3 * z.nrows() as u32);
    let image_size = image.len() as u64;
    Ok(RestrictionWitness {
        domain,
        image_size,
        codomain,
        injective: image_size == domain,
        surjective: image_size == codomain,
    })
}

/// Elements of GF(q^3) with the given coordinate rows.
pub fn elements_of_rows(ef: &ExtField, m: &Matrix) -> Vec<ExtElem> {
    (0..m.nrows()).map(|i| ef.from_coords([m.get(i, 0), m.get(i, 1), m.get(i, 2)])).collect()
}

/// GF(q)-span of elements of GF(q^3), as a subspace of GF(q)^3.
pub fn ext_span(ef: &ExtField, xs: &[ExtElem]) -> Subspace {
    let rows: Vec<[u8; 3]> = xs.iter().map(|&x| ef.coords(x)).collect();
    Subspace::from_rows(ef.q(), 3, &rows).expect("3 columns")
}

/// A two-dimensional constant-rank-2 space `<f, g>` attached to a
/// two-dimensional `Z = <a, b>` and a point `P = <c>` of GF(q^3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstantRankSpace {
    pub f: LinPoly,
    pub g: LinPoly,
    pub a: ExtElem,
    pub b: ExtElem,
    pub c: ExtElem,
}

impl ConstantRankSpace {
    /// All q^2 members.
    pub fn members(&self, ef: &ExtField) -> Vec<LinPoly> {
        let base = ef.base();
        let mut out = Vec::new();
        for s in base.elements() {
            for t in base.elements() {
                out.push(self.f.scale(ef, s).add(ef, &self.g.scale(ef, t)));
            }
        }
        out
    }

    pub fn z(&self, ef: &ExtField) -> Subspace {
        ext_span(ef, &[self.a, self.b])
    }

    pub fn p(&self, ef: &ExtField) -> Subspace {
        ext_span(ef, &[self.c])
    }
}

/// `f = c (a x^q - a^q x) / (a b^q - a^q b)` and
/// `g = c (b x^q - b^q x) / (b a^q - b^q a)`.
pub fn d_space(ef: &ExtField, a: ExtElem, b: ExtElem, c: ExtElem) -> Result<ConstantRankSpace> {
    if c.is_zero() {
        return Err(Error::Degenerate("c must be nonzero".into()));
    }
    let dab = alt_form(ef, a, b);
    if dab.is_zero() || a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("a and b must be linearly independent".into()));
    }
    let dba = alt_form(ef, b, a);
    let f = alternating(ef, a).times(ef, ef.div(c, dab).expect("nonzero"));
    let g = alternating(ef, b).times(ef, ef.div(c, dba).expect("nonzero"));
    Ok(ConstantRankSpace { f, g, a, b, c })
}

/// `D(Z, P)` recovered directly as the set of codewords `A` with `<ZA> = P`.
pub fn d_space_by_search(ef: &ExtField, z: &Subspace, p: &Subspace) -> Result<Vec<LinPoly>> {
    let zm = z.cm();
    let mut out = Vec::new();
    for f in codewords(ef.q())? {
        let za = zm.mul(&f.matrix(ef))?;
        if Subspace::span(&za) == *p || (f.is_zero()) {
            out.push(f);
        }
    }
    Ok(out)
}

/// The removable set `R = {u x^q - u^q x}`.
pub fn removable_set(q: u32) -> Result<Vec<LinPoly>> {
    let ef = gf3(q)?;
    Ok(ef.elements().map(|u| alternating(ef, u)).collect())
}

/// `Z' = GF(q) (a b^q - a^q b)` for `Z = <a, b>`.
pub fn corr(ef: &ExtField, z: &Subspace) -> Result<Subspace> {
    if z.dim() != 2 || z.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch("corr expects a 2-dimensional subspace of GF(q^3)".into()));
    }
    let ab = elements_of_rows(ef, z.cm());
    Ok(ext_span(ef, &[alt_form(ef, ab[0], ab[1])]))
}

/// Whether `bc^q - b^q c`, `ca^q - c^q a`, `ab^q - a^q b` span GF(q^3).
pub fn triple_determinant_check(ef: &ExtField, a: ExtElem, b: ExtElem, c: ExtElem) -> bool {
    ef.independent(&[alt_form(ef, b, c), alt_form(ef, c, a), alt_form(ef, a, b)])
}

/// Per-condition results of checking the removable set against the three
/// hypotheses of the simultaneous rearrangement lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovableReport {
    pub q: u32,
    pub size: usize,
    /// `D(Z, Z') ⊆ R` for every 2-dimensional `Z`.
    pub contains_d_spaces: bool,
    /// `Z -> Z'` is a bijection from lines to points of PG(2, q).
    pub corr_bijective: bool,
    /// `rank(ZA1 - ZA2 ; s) = 3` for `A1, A2` in different cosets of `D(Z, Z')`.
    pub cosets_separated: bool,
    pub pairs_checked: u64,
}

impl RemovableReport {
    pub fn all_hold(&self) -> bool {
        self.contains_d_spaces && self.corr_bijective && self.cosets_separated
    }
}

/// Exhaustively checks the three hypotheses for `R = {u x^q - u^q x}`.
pub fn verify_removable(q: u32) -> Result<RemovableReport> {
    let ef = gf3(q)?;
    let r = removable_set(q)?;
    let r_set: HashSet<LinPoly> = r.iter().copied().collect();
    let mats: Vec<Matrix> = r.iter().map(|f| f.matrix(ef)).collect();
    let mut contains = true;
    let mut images = HashSet::new();
    let mut separated = true;
    let mut pairs = 0u64;
    let mut zs = 0usize;
    for zm in CanonicalMatrices::new(q, 3, 2) {
        zs += 1;
        let z = Subspace::from_canonical(zm)?;
        let p = corr(ef, &z)?;
        images.insert(p);
        let ab = elements_of_rows(ef, &zm);
        let d = d_space(ef, ab[0], ab[1], elements_of_rows(ef, p.cm())[0])?;
        let d_members: HashSet<LinPoly> = d.members(ef).into_iter().collect();
        let searched: HashSet<LinPoly> = d_space_by_search(ef, &z, &p)?.into_iter().collect();
        contains &= d_members == searched && d_members.iter().all(|f| r_set.contains(f));

        // coset label of A in R / D: the image ZA modulo <s>
        let s = *p.cm();
        let mut coset_of: HashMap<LinPoly, usize> = HashMap::new();
        let mut reps: Vec<LinPoly> = Vec::new();
        for f in &r {
            let label = reps.iter().position(|g| d_members.contains(&f.sub(ef, g)));
            let label = label.unwrap_or_else(|| {
                reps.push(*f);
                reps.len() - 1
            });
            coset_of.insert(*f, label);
        }
        let za: Vec<Matrix> = mats.iter().map(|m| zm.mul(m).expect("shapes")).collect();
        for i in 0..r.len() {
            for j in 0..r.len() {
                if coset_of[&r[i]] == coset_of[&r[j]] {
                    continue;
                }
                pairs += 1;
                let diff = za[i].sub(&za[j])?;
                if diff.vstack(&s)?.rank() != 3 {
                    separated = false;
                }
            }
        }
    }
    let npoints = CanonicalMatrices::new(q, 3, 1).count();
    Ok(RemovableReport {
        q,
        size: r_set.len(),
        contains_d_spaces: contains,
        corr_bijective: images.len() == zs && zs == npoints,
        cosets_separated: separated,
        pairs_checked: pairs,
    })
}
