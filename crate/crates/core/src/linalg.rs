//! Matrices over GF(q) in packed row form, reduced row echelon ("canonical")
//! matrices, and subspaces represented by their canonical matrix.
//!
//! Each row is one `u64`. For `q = 2` column `j` is bit `j`; otherwise column
//! `j` occupies the nibble at bits `4j..4j+4` and holds the element code.
//! At most [`MAX_DIM`] rows and columns are supported.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{gf, Field};

pub const MAX_DIM: usize = 12;

#[inline]
fn width(q: u32) -> u32 {
    if q == 2 {
        1
    } else {
        4
    }
}

/// A matrix over GF(q) with at most 12 rows and 12 columns.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Matrix {
    q: u8,
    nrows: u8,
    ncols: u8,
    rows: [u64; MAX_DIM],
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[q={}; {}x{}](", self.q, self.nrows, self.ncols)?;
        for i in 0..self.nrows() {
            if i > 0 {
                write!(f, ",")?;
            }
            for j in 0..self.ncols() {
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, ")")
    }
}

impl Matrix {
    fn check_shape(r: usize, c: usize) -> Result<()> {
        if r > MAX_DIM || c > MAX_DIM {
            return Err(Error::DimensionMismatch(format!("{r}x{c} exceeds {MAX_DIM}x{MAX_DIM}")));
        }
        Ok(())
    }

    pub fn zeros(q: u32, nrows: usize, ncols: usize) -> Matrix {
        assert!(nrows <= MAX_DIM && ncols <= MAX_DIM, "matrix too large");
        Matrix { q: q as u8, nrows: nrows as u8, ncols: ncols as u8, rows: [0; MAX_DIM] }
    }

    pub fn identity(q: u32, n: usize) -> Matrix {
        let mut m = Matrix::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<R: AsRef<[u8]>>(q: u32, ncols: usize, rows: &[R]) -> Result<Matrix> {
        Matrix::check_shape(rows.len(), ncols)?;
        let mut m = Matrix::zeros(q, rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {ncols}", r.len())));
            }
            for (j, &x) in r.iter().enumerate() {
                if x as u32 >= q {
                    return Err(Error::DimensionMismatch(format!("entry {x} is not an element of GF({q})")));
                }
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from packed row words.
    pub fn from_words(q: u32, ncols: usize, words: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(q, words.len(), ncols);
        m.rows[..words.len()].copy_from_slice(words);
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn nrows(&self) -> usize {
        self.nrows as usize
    }

    pub fn ncols(&self) -> usize {
        self.ncols as usize
    }

    pub fn words(&self) -> &[u64] {
        &self.rows[..self.nrows()]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        let w = width(self.q());
        ((self.rows[i] >> (w * j as u32)) & ((1 << w) - 1)) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        let w = width(self.q());
        let mask = ((1u64 << w) - 1) << (w * j as u32);
        self.rows[i] = (self.rows[i] & !mask) | ((x as u64) << (w * j as u32));
    }

    pub fn is_zero(&self) -> bool {
        self.words().iter().all(|&r| r == 0)
    }

    fn field(&self) -> &'static Field {
        gf(self.q()).expect("matrix over a supported field")
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.q(), self.ncols(), self.nrows());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows() || self.q != other.q {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut out = Matrix::zeros(self.q(), self.nrows(), other.ncols());
        let ops = RowOps::new(self.q());
        for i in 0..self.nrows() {
            let mut acc = 0u64;
            for k in 0..self.ncols() {
                let c = self.get(i, k);
                if c != 0 {
                    acc = ops.axpy(acc, c, other.rows[k], other.ncols());
                }
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        let f = self.field();
        self.combine(other, f.neg(1))
    }

    fn combine(&self, other: &Matrix, c: u8) -> Result<Matrix> {
        if (self.nrows, self.ncols, self.q) != (other.nrows, other.ncols, other.q) {
            return Err(Error::DimensionMismatch("matrix shapes differ".into()));
        }
        let ops = RowOps::new(self.q());
        let mut out = *self;
        for i in 0..self.nrows() {
            out.rows[i] = ops.axpy(self.rows[i], c, other.rows[i], self.ncols());
        }
        Ok(out)
    }

    pub fn scale(&self, c: u8) -> Matrix {
        let ops = RowOps::new(self.q());
        let mut out = *self;
        for i in 0..self.nrows() {
            out.rows[i] = ops.scale(self.rows[i], c, self.ncols());
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.ncols || self.q != other.q {
            return Err(Error::DimensionMismatch("vstack needs equal column counts".into()));
        }
        Matrix::check_shape(self.nrows() + other.nrows(), self.ncols())?;
        let mut out = *self;
        out.nrows += other.nrows;
        let end = out.nrows();
        out.rows[self.nrows()..end].copy_from_slice(other.words());
        Ok(out)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows || self.q != other.q {
            return Err(Error::DimensionMismatch("hstack needs equal row counts".into()));
        }
        Matrix::check_shape(self.nrows(), self.ncols() + other.ncols())?;
        let shift = width(self.q()) * self.ncols as u32;
        let mut out = *self;
        out.ncols += other.ncols;
        for i in 0..self.nrows() {
            out.rows[i] |= other.rows[i] << shift;
        }
        Ok(out)
    }

    pub fn push_row(&mut self, row: &[u8]) -> Result<()> {
        if row.len() != self.ncols() {
            return Err(Error::DimensionMismatch("row length".into()));
        }
        Matrix::check_shape(self.nrows() + 1, self.ncols())?;
        let i = self.nrows();
        self.nrows += 1;
        self.rows[i] = 0;
        for (j, &x) in row.iter().enumerate() {
            self.set(i, j, x);
        }
        Ok(())
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.ncols()).map(|j| self.get(i, j)).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.q(), self.nrows(), cols.len());
        for i in 0..self.nrows() {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows removed, and the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = *self;
        let rank = m.rref_in_place();
        m.nrows = rank as u8;
        for r in m.rows[rank..].iter_mut() {
            *r = 0;
        }
        (m, rank)
    }

    fn rref_in_place(&mut self) -> usize {
        let n = self.nrows();
        let ncols = self.ncols();
        if self.q == 2 {
            let mut r = 0;
            for col in 0..ncols {
                let bit = 1u64 << col;
                let Some(p) = (r..n).find(|&i| self.rows[i] & bit != 0) else { continue };
                self.rows.swap(r, p);
                let pivot_row = self.rows[r];
                for i in 0..n {
                    if i != r && self.rows[i] & bit != 0 {
                        self.rows[i] ^= pivot_row;
                    }
                }
                r += 1;
                if r == n {
                    break;
                }
            }
            return r;
        }
        let ops = RowOps::new(self.q());
        let f = ops.field;
        let mut r = 0;
        for col in 0..ncols {
            let Some(p) = (r..n).find(|&i| self.get(i, col) != 0) else { continue };
            self.rows.swap(r, p);
            let lead = self.get(r, col);
            if lead != 1 {
                self.rows[r] = ops.scale(self.rows[r], f.inv(lead), ncols);
            }
            let pivot_row = self.rows[r];
            for i in 0..n {
                if i != r {
                    let e = self.get(i, col);
                    if e != 0 {
                        self.rows[i] = ops.axpy(self.rows[i], f.neg(e), pivot_row, ncols);
                    }
                }
            }
            r += 1;
            if r == n {
                break;
            }
        }
        r
    }

    pub fn rank(&self) -> usize {
        let mut m = *self;
        m.rref_in_place()
    }

    /// Leading column of every row (`None` for a zero row).
    pub fn leading_columns(&self) -> Vec<Option<usize>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).find(|&j| self.get(i, j) != 0)).collect()
    }

    /// Whether the matrix is in reduced row echelon form without zero rows.
    pub fn is_canonical(&self) -> bool {
        let leads = self.leading_columns();
        let mut prev: Option<usize> = None;
        for (i, lead) in leads.iter().enumerate() {
            let Some(c) = *lead else { return false };
            if prev.is_some_and(|p| c <= p) || self.get(i, c) != 1 {
                return false;
            }
            if (0..self.nrows()).any(|k| k != i && self.get(k, c) != 0) {
                return false;
            }
            prev = Some(c);
        }
        true
    }

    /// Pivot columns of a canonical matrix.
    pub fn pivots(&self) -> Vec<usize> {
        self.leading_columns().into_iter().flatten().collect()
    }
}

/// Packed row arithmetic for one field.
pub(crate) struct RowOps {
    q: u32,
    field: &'static Field,
    char2: bool,
}

impl RowOps {
    pub(crate) fn new(q: u32) -> RowOps {
        let field = gf(q).expect("supported field");
        RowOps { q, field, char2: field.characteristic() == 2 }
    }

    #[inline]
    pub(crate) fn scale(&self, row: u64, c: u8, ncols: usize) -> u64 {
        if c == 1 {
            return row;
        }
        if c == 0 {
            return 0;
        }
        if self.q == 2 {
            return row;
        }
        let mut out = 0u64;
        for j in 0..ncols {
            let x = ((row >> (4 * j)) & 0xf) as u8;
            if x != 0 {
                out |= (self.field.mul(c, x) as u64) << (4 * j);
            }
        }
        out
    }

    /// `acc + c * row`.
    #[inline]
    pub(crate) fn axpy(&self, acc: u64, c: u8, row: u64, ncols: usize) -> u64 {
        if c == 0 {
            return acc;
        }
        let s = self.scale(row, c, ncols);
        if self.char2 {
            return acc ^ s;
        }
        let mut out = 0u64;
        for j in 0..ncols {
            let x = ((acc >> (4 * j)) & 0xf) as u8;
            let y = ((s >> (4 * j)) & 0xf) as u8;
            out |= (self.field.add(x, y) as u64) << (4 * j);
        }
        out
    }
}

/// Checks the closure of canonical matrices under multiplication: returns
/// `Z * U`, which must again be canonical when both factors are.
pub fn canonical_product_check(z: &Matrix, u: &Matrix) -> Result<Matrix> {
    let prod = z.mul(u)?;
    if z.is_canonical() && u.is_canonical() && !prod.is_canonical() {
        return Err(Error::NotCanonical);
    }
    Ok(prod)
}

/// Iterator over all canonical `k x v` matrices of rank `k`, i.e. over all
/// `k`-dimensional subspaces of GF(q)^v.
///
/// Order: pivot tuples lexicographically, then the free entries row-major with
/// symbols `0 < 1 < ... < q-1`, the first free entry most significant.
pub struct CanonicalMatrices {
    q: u32,
    v: usize,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u8>,
    done: bool,
}

impl CanonicalMatrices {
    pub fn new(q: u32, v: usize, k: usize) -> CanonicalMatrices {
        let mut it = CanonicalMatrices {
            q,
            v,
            k,
            pivots: (0..k).collect(),
            free: Vec::new(),
            counter: Vec::new(),
            done: k > v,
        };
        if !it.done {
            it.reset_free();
        }
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for j in p + 1..self.v {
                if !self.pivots.contains(&j) {
                    self.free.push((i, j));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn advance_pivots(&mut self) -> bool {
        let (k, v) = (self.k, self.v);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < v - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for CanonicalMatrices {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        let mut m = Matrix::zeros(self.q, self.k, self.v);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        for (&(i, j), &c) in self.free.iter().zip(&self.counter) {
            m.set(i, j, c);
        }
        // advance
        let mut pos = self.counter.len();
        loop {
            if pos == 0 {
                if self.advance_pivots() {
                    self.reset_free();
                } else {
                    self.done = true;
                }
                break;
            }
            pos -= 1;
            self.counter[pos] += 1;
            if (self.counter[pos] as u32) < self.q {
                break;
            }
            self.counter[pos] = 0;
        }
        Some(m)
    }
}

/// A subspace of GF(q)^v stored as its canonical matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subspace {
    cm: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ",")?;
            }
            for j in 0..self.ambient_dim() {
                write!(f, "{}", self.cm.get(i, j))?;
            }
        }
        write!(f, ">")
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.cm.q, self.cm.ncols, self.cm.nrows)
            .cmp(&(other.cm.q, other.cm.ncols, other.cm.nrows))
            .then_with(|| self.pivots().cmp(&other.pivots()))
            .then_with(|| {
                for i in 0..self.dim() {
                    for j in 0..self.ambient_dim() {
                        match self.cm.get(i, j).cmp(&other.cm.get(i, j)) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    /// The row space of `m`.
    pub fn span(m: &Matrix) -> Subspace {
        Subspace { cm: m.rref().0 }
    }

    pub fn from_rows<R: AsRef<[u8]>>(q: u32, v: usize, rows: &[R]) -> Result<Subspace> {
        Ok(Subspace::span(&Matrix::from_rows(q, v, rows)?))
    }

    /// Wraps a matrix that must already be canonical.
    pub fn from_canonical(cm: Matrix) -> Result<Subspace> {
        if !cm.is_canonical() {
            return Err(Error::NotCanonical);
        }
        Ok(Subspace { cm })
    }

    pub(crate) fn from_canonical_unchecked(cm: Matrix) -> Subspace {
        debug_assert!(cm.is_canonical());
        Subspace { cm }
    }

    pub fn zero(q: u32, v: usize) -> Subspace {
        Subspace { cm: Matrix::zeros(q, 0, v) }
    }

    pub fn full(q: u32, v: usize) -> Subspace {
        Subspace { cm: Matrix::identity(q, v) }
    }

    /// Span of the unit vectors with the given (0-based) indices.
    pub fn coordinate(q: u32, v: usize, indices: &[usize]) -> Subspace {
        let mut m = Matrix::zeros(q, indices.len(), v);
        for (i, &j) in indices.iter().enumerate() {
            m.set(i, j, 1);
        }
        Subspace::span(&m)
    }

    pub fn cm(&self) -> &Matrix {
        &self.cm
    }

    pub fn dim(&self) -> usize {
        self.cm.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cm.ncols()
    }

    pub fn q(&self) -> u32 {
        self.cm.q()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.cm.pivots()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.q() != other.q() {
            return Err(Error::AmbientMismatch {
                left: (self.ambient_dim(), self.q()),
                right: (other.ambient_dim(), other.q()),
            });
        }
        Ok(())
    }

    /// Stacked generators of `U + W`, reduced one row at a time when both
    /// matrices together would exceed the row limit.
    fn sum_generators(&self, other: &Subspace) -> Result<Matrix> {
        self.same_ambient(other)?;
        if self.dim() + other.dim() <= MAX_DIM {
            return Ok(self.cm.vstack(&other.cm).expect("dimensions checked"));
        }
        let mut acc = self.cm;
        for i in 0..other.dim() {
            if acc.nrows() == self.ambient_dim() {
                break;
            }
            let row = Matrix::from_words(self.q(), self.ambient_dim(), &other.cm.words()[i..i + 1]);
            acc = acc.vstack(&row).expect("at most v rows").rref().0;
        }
        Ok(acc)
    }

    /// `dim(U + W)` without building the canonical matrix of the sum.
    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.sum_generators(other)?.rank())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::span(&self.sum_generators(other)?))
    }

    /// `U ∩ W = (U^⊥ + W^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    /// Subspace distance `dim(U+W) - dim(U∩W)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        let s = self.sum_dim(other)?;
        Ok(2 * s - self.dim() - other.dim())
    }

    /// Orthogonal complement for the standard dot product.
    pub fn dual(&self) -> Subspace {
        let (q, v) = (self.q(), self.ambient_dim());
        let f = gf(q).expect("supported field");
        let pivots = self.pivots();
        let mut m = Matrix::zeros(q, v - self.dim(), v);
        for (r, j) in (0..v).filter(|j| !pivots.contains(j)).enumerate() {
            m.set(r, j, 1);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(r, p, f.neg(self.cm.get(i, j)));
            }
        }
        Subspace::span(&m)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum_dim(other)? == self.dim())
    }

    pub fn contains_vector(&self, x: &[u8]) -> bool {
        let mut m = self.cm;
        if m.push_row(x).is_err() {
            return false;
        }
        m.rank() == self.dim()
    }

    /// All `t`-dimensional subspaces, as `Z * cm(U)` for canonical `Z`.
    pub fn subspaces(&self, t: usize) -> impl Iterator<Item = Subspace> + '_ {
        CanonicalMatrices::new(self.q(), self.dim(), t)
            .map(move |z| Subspace::from_canonical_unchecked(z.mul(&self.cm).expect("shapes agree")))
    }

    pub fn points(&self) -> impl Iterator<Item = Subspace> + '_ {
        self.subspaces(1)
    }

    /// The unique canonical generator of a one-dimensional subspace.
    pub fn point_vector(&self) -> Vec<u8> {
        assert_eq!(self.dim(), 1, "not a point");
        self.cm.row(0)
    }
}

/// Finite set of pairwise distinct subspaces in a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCode {
    v: usize,
    q: u32,
    members: Vec<Subspace>,
}

impl SubspaceCode {
    pub fn new(v: usize, q: u32, members: Vec<Subspace>) -> Result<SubspaceCode> {
        let mut seen = HashSet::with_capacity(members.len());
        for (i, m) in members.iter().enumerate() {
            if m.ambient_dim() != v || m.q() != q {
                return Err(Error::AmbientMismatch { left: (v, q), right: (m.ambient_dim(), m.q()) });
            }
            if !seen.insert(*m) {
                return Err(Error::DuplicateCodeword(i));
            }
        }
        Ok(SubspaceCode { v, q, members })
    }

    pub fn ambient_dim(&self) -> usize {
        self.v
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.members.contains(s)
    }

    /// Common dimension of the members, if there is one.
    pub fn constant_dim(&self) -> Option<usize> {
        let k = self.members.first()?.dim();
        self.members.iter().all(|m| m.dim() == k).then_some(k)
    }

    pub fn dual_code(&self) -> SubspaceCode {
        SubspaceCode { v: self.v, q: self.q, members: self.members.iter().map(Subspace::dual).collect() }
    }

    /// A new code with `extra` appended.
    pub fn extended<I: IntoIterator<Item = Subspace>>(&self, extra: I) -> Result<SubspaceCode> {
        let mut members = self.members.clone();
        members.extend(extra);
        SubspaceCode::new(self.v, self.q, members)
    }
}

impl<'a> IntoIterator for &'a SubspaceCode {
    type Item = &'a Subspace;
    type IntoIter = std::slice::Iter<'a, Subspace>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
