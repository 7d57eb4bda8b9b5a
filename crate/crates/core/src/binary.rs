//! Collineation search over GF(2)^n (n <= 6).
//!
//! A structure is a list of blocks (subspaces) given as point masks: bit `x`
//! of a mask is set when the nonzero vector `x` lies in the block, where bit
//! `j` of `x` is coordinate `j`. Isomorphisms and automorphisms are elements
//! of GL(n, 2) found by backtracking over images of a basis, pruned by an
//! invariant point colouring and by block images inside the partial span.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
const ROUNDS: usize = 3;

/// Point mask of a subspace of GF(2)^n.
pub fn subspace_mask(s: &Subspace) -> u64 {
    assert!(s.q() == 2 && s.ambient_dim() <= 6, "binary structures need GF(2)^n with n <= 6");
    let words = s.cm().words();
    let mut mask = 0u64;
    for c in 1u32..(1 << words.len()) {
        let mut x = 0u64;
        for (i, w) in words.iter().enumerate() {
            if c >> i & 1 == 1 {
                x ^= w;
            }
        }
        mask |= 1 << x;
    }
    mask
}

/// The vectors (as integers) of a point mask.
pub fn mask_points(mask: u64) -> impl Iterator<Item = u8> {
    (1..64u8).filter(move |&x| mask >> x & 1 == 1)
}

/// `span` (a mask containing bit 0) enlarged by the vector `x`.
pub fn extend_span(span: u64, x: usize) -> u64 {
    let mut out = span;
    for y in 0..64 {
        if span >> y & 1 == 1 {
            out |= 1 << (y ^ x);
        }
    }
    out
}

/// The subspace spanned by the points of a mask.
pub fn mask_subspace(n: usize, mask: u64) -> Subspace {
    let mut span = 1u64;
    let mut words = Vec::new();
    for x in mask_points(mask) {
        if span >> x & 1 == 0 {
            words.push(x as u64);
            span = extend_span(span, x as usize);
        }
    }
    Subspace::span(&Matrix::from_words(2, n, &words))
}

/// Blocks of subspaces of GF(2)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinStructure {
    n: usize,
    blocks: Vec<u64>,
}

impl BinStructure {
    pub fn new(n: usize, blocks: Vec<u64>) -> BinStructure {
        assert!(n <= 6);
        BinStructure { n, blocks }
    }

    pub fn from_subspaces<'a, I: IntoIterator<Item = &'a Subspace>>(n: usize, subspaces: I) -> Result<BinStructure> {
        let mut blocks = Vec::new();
        for s in subspaces {
            if s.q() != 2 || s.ambient_dim() != n || n > 6 {
                return Err(Error::Unsupported("collineation search needs subspaces of GF(2)^n, n <= 6".into()));
            }
            blocks.push(subspace_mask(s));
        }
        Ok(BinStructure { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    fn npoints(&self) -> usize {
        1 << self.n
    }

    /// An invariant colouring of the vectors (index 0 unused).
    pub fn colours(&self) -> Vec<u64> {
        let n = self.npoints();
        let mut col: Vec<u64> = (0..n)
            .map(|x| {
                let mut sizes: Vec<u32> =
                    self.blocks.iter().filter(|&&b| b >> x & 1 == 1).map(|b| b.count_ones()).collect();
                sizes.sort_unstable();
                hash_of(&sizes)
            })
            .collect();
        col[0] = 0;
        for _ in 0..ROUNDS {
            let mut next = vec![0u64; n];
            for x in 1..n {
                let mut on_blocks: Vec<u64> = self
                    .blocks
                    .iter()
                    .filter(|&&b| b >> x & 1 == 1)
                    .map(|&b| {
                        let mut cs: Vec<u64> = mask_points(b).map(|y| col[y as usize]).collect();
                        cs.sort_unstable();
                        hash_of(&cs)
                    })
                    .collect();
                on_blocks.sort_unstable();
                let mut on_lines: Vec<(u64, u64)> = (1..n)
                    .filter(|&y| y != x)
                    .map(|y| {
                        let (c1, c2) = (col[y], col[x ^ y]);
                        (c1.min(c2), c1.max(c2))
                    })
                    .collect();
                on_lines.sort_unstable();
                next[x] = hash_of(&(col[x], on_blocks, on_lines));
            }
            col = next;
        }
        col
    }

    /// Sorted colour multiset and block-size multiset; equal for isomorphic structures.
    pub fn fingerprint(&self) -> (Vec<u64>, Vec<u32>) {
        let mut c = self.colours()[1..].to_vec();
        c.sort_unstable();
        let mut b: Vec<u32> = self.blocks.iter().map(|b| b.count_ones()).collect();
        b.sort_unstable();
        (c, b)
    }
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// An element of GL(n, 2) given by the image of every vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Collineation {
    images: Vec<u8>,
}

impl Collineation {
    pub fn identity(n: usize) -> Collineation {
        Collineation { images: (0..1u16 << n).map(|x| x as u8).collect() }
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    pub fn apply_mask(&self, m: u64) -> u64 {
        mask_points(m).fold(0, |acc, x| acc | 1 << self.apply(x))
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    First,
    All,
}

struct Search<'a> {
    n: usize,
    b_colours: Vec<u64>,
    a_colours: Vec<u64>,
    a_blocks: &'a [u64],
    b_set: HashSet<u64>,
    basis: Vec<u8>,
    /// Blocks of `a` first contained in the span of `basis[..=i]`.
    new_blocks: Vec<Vec<usize>>,
    xs: Vec<u8>,
    ys: Vec<u8>,
    img: Vec<u8>,
    chosen: Vec<u8>,
    budget: u64,
    nodes: u64,
    mode: Mode,
    found: Vec<Collineation>,
    count: u64,
    keep: bool,
}

impl<'a> Search<'a> {
    fn new(a: &'a BinStructure, b: &BinStructure, budget: u64, mode: Mode, keep: bool) -> Search<'a> {
        let n = a.n;
        let a_colours = a.colours();
        let b_colours = b.colours();
        let mut class_size = std::collections::HashMap::new();
        for &c in &a_colours[1..] {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        // greedy basis: most newly contained blocks, then rarest colour
        let mut basis: Vec<u8> = Vec::new();
        let mut span_mask = 1u64;
        let mut new_blocks = Vec::new();
        let mut done: Vec<bool> = vec![false; a.blocks.len()];
        for _ in 0..n {
            let mut best: Option<(usize, usize, u8, u64)> = None;
            for x in 1..(1u16 << n) as usize {
                if span_mask >> x & 1 == 1 {
                    continue;
                }
                let grown = extend_span(span_mask, x);
                let contained = a.blocks.iter().enumerate().filter(|(i, &bl)| !done[*i] && bl & !grown == 0).count();
                let key = (contained, usize::MAX - class_size[&a_colours[x]], x as u8, grown);
                if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
                    best = Some(key);
                }
            }
            let (_, _, x, grown) = best.expect("vector outside a proper subspace");
            basis.push(x);
            span_mask = grown;
            let mut level = Vec::new();
            for (i, &bl) in a.blocks.iter().enumerate() {
                if !done[i] && bl & !span_mask == 0 {
                    done[i] = true;
                    level.push(i);
                }
            }
            new_blocks.push(level);
        }
        let size = 1 << n;
        Search {
            n,
            b_colours,
            a_colours,
            a_blocks: &a.blocks,
            b_set: b.blocks.iter().copied().collect(),
            basis,
            new_blocks,
            xs: vec![0; size],
            ys: vec![0; size],
            img: vec![0; size],
            chosen: Vec::new(),
            budget,
            nodes: 0,
            mode,
            found: Vec::new(),
            count: 0,
            keep,
        }
    }

    /// Returns `true` to stop the search.
    fn rec(&mut self, level: usize) -> Result<bool> {
        if level == self.n {
            self.count += 1;
            if self.keep {
                self.found.push(Collineation { images: self.img.clone() });
            }
            return Ok(self.mode == Mode::First);
        }
        let x = self.basis[level];
        let half = 1usize << level;
        let want = self.a_colours[x as usize];
        let mut span_b = 0u64;
        for c in 0..half {
            span_b |= 1 << self.ys[c];
        }
        for y in 1..(1usize << self.n) {
            if self.b_colours[y] != want || span_b >> y & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mut ok = true;
            for c in 0..half {
                let xv = self.xs[c] ^ x;
                let yv = self.ys[c] ^ y as u8;
                if self.a_colours[xv as usize] != self.b_colours[yv as usize] {
                    ok = false;
                    break;
                }
                self.xs[c + half] = xv;
                self.ys[c + half] = yv;
                self.img[xv as usize] = yv;
            }
            if !ok {
                continue;
            }
            for &bi in &self.new_blocks[level] {
                let m = mask_points(self.a_blocks[bi]).fold(0u64, |acc, p| acc | 1 << self.img[p as usize]);
                if !self.b_set.contains(&m) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.chosen.push(y as u8);
            let stop = self.rec(level + 1)?;
            self.chosen.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn run(&mut self) -> Result<()> {
        self.xs[0] = 0;
        self.ys[0] = 0;
        self.img[0] = 0;
        self.rec(0)?;
        Ok(())
    }
}

fn compatible(a: &BinStructure, b: &BinStructure) -> bool {
    a.n == b.n && a.blocks.len() == b.blocks.len() && a.fingerprint() == b.fingerprint()
}

/// A collineation mapping the blocks of `a` onto the blocks of `b`, if any.
pub fn find_isomorphism(a: &BinStructure, b: &BinStructure, budget: u64) -> Result<Option<Collineation>> {
    if !compatible(a, b) {
        return Ok(None);
    }
    let mut s = Search::new(a, b, budget, Mode::First, true);
    s.run()?;
    Ok(s.found.pop())
}

/// Every collineation stabilizing the block set.
pub fn automorphisms(a: &BinStructure, budget: u64) -> Result<Vec<Collineation>> {
    let mut s = Search::new(a, a, budget, Mode::All, true);
    s.run()?;
    Ok(s.found)
}

/// Order of the block stabilizer, without storing its elements.
pub fn automorphism_count(a: &BinStructure, budget: u64) -> Result<u64> {
    let mut s = Search::new(a, a, budget, Mode::All, false);
    s.run()?;
    Ok(s.count)
}

/// Orbits of `group` on the points of `points`, each sorted, ordered by
/// smallest element.
pub fn point_orbits(group: &[Collineation], points: u64) -> Vec<Vec<u8>> {
    let mut orbits: Vec<Vec<u8>> = Vec::new();
    let mut seen = 0u64;
    for p in mask_points(points) {
        if seen >> p & 1 == 1 {
            continue;
        }
        let mut orbit = vec![p];
        seen |= 1 << p;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in group {
                let y = g.apply(x);
                if seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}
