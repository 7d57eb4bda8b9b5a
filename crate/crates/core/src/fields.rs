//! Arithmetic in GF(q) for the small prime powers `q <= 9`, and in the cubic
//! extension GF(q^3).
//!
//! Elements of GF(q), `q = p^e`, are encoded as integers `0..q` whose base-`p`
//! digits are the polynomial coefficients modulo the field's defining
//! polynomial (lowest degree first). Elements of GF(q^3) are encoded the same
//! way one level up: `c0 + c1*q + c2*q^2` stands for `c0 + c1*a + c2*a^2`
//! where `a` is a root of the fixed cubic and `c_i` are GF(q) codes.
//!
//! Multiplication goes through log/antilog tables built from a primitive
//! element found by search. Addition is digit-wise.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Orders for which [`make_field`] succeeds.
pub const SUPPORTED_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Defining polynomials of the non-prime fields, monic, coefficients low to high.
/// These are the Conway polynomials, so the class of `x` is primitive.
const PRIME_POWER_MODULI: [(u32, &[u8]); 3] = [(4, &[1, 1, 1]), (8, &[1, 1, 0, 1]), (9, &[2, 2, 1])];

fn prime_power(q: u32) -> Option<(u8, u8)> {
    match q {
        2 | 3 | 5 | 7 => Some((q as u8, 1)),
        4 => Some((2, 2)),
        8 => Some((2, 3)),
        9 => Some((3, 2)),
        _ => None,
    }
}

fn digits(mut x: u32, base: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % base);
        x /= base;
    }
    out
}

fn undigits(ds: &[u32], base: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * base + d)
}

/// Schoolbook product of two encoded polynomials over GF(p), reduced modulo a
/// monic polynomial of degree `e`.
fn poly_mul_mod(a: u32, b: u32, p: u32, modulus: &[u8]) -> u32 {
    let e = modulus.len() - 1;
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let mut prod = vec![0u32; 2 * e];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (e..2 * e).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for k in 0..e {
            let sub = c * modulus[k] as u32 % p;
            prod[deg - e + k] = (prod[deg - e + k] + p - sub) % p;
        }
    }
    undigits(&prod[..e], p)
}

/// GF(q) with full operation tables.
#[derive(Clone, Debug)]
pub struct Field {
    q: u8,
    p: u8,
    e: u8,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    log: Vec<u8>,
    antilog: Vec<u8>,
}

/// Builds GF(q) from the fixed modulus table.
pub fn make_field(q: u32) -> Result<Field> {
    let (p, e) = prime_power(q).ok_or(Error::UnsupportedOrder(q))?;
    let modulus: Vec<u8> = if e == 1 {
        vec![0, 1]
    } else {
        PRIME_POWER_MODULI.iter().find(|(o, _)| *o == q).map(|(_, m)| m.to_vec()).expect("modulus table")
    };
    let (pu, qu) = (p as u32, q);
    let n = q as usize;

    let mut add = vec![0u8; n * n];
    for a in 0..qu {
        for b in 0..qu {
            let da = digits(a, pu, e as usize);
            let db = digits(b, pu, e as usize);
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
            add[(a * qu + b) as usize] = undigits(&s, pu) as u8;
        }
    }

    let schoolbook = |a: u32, b: u32| if e == 1 { a * b % pu } else { poly_mul_mod(a, b, pu, &modulus) };
    let generator = (2..qu)
        .chain(std::iter::once(1))
        .find(|&g| {
            let mut x = g;
            let mut order = 1;
            while x != 1 {
                x = schoolbook(x, g);
                order += 1;
            }
            order == qu - 1
        })
        .expect("multiplicative group is cyclic");

    let mut antilog = vec![0u8; n - 1];
    let mut log = vec![0u8; n];
    let mut x = 1u32;
    for (i, a) in antilog.iter_mut().enumerate() {
        *a = x as u8;
        log[x as usize] = i as u8;
        x = schoolbook(x, generator);
    }

    let mut mul = vec![0u8; n * n];
    for a in 1..n {
        for b in 1..n {
            mul[a * n + b] = antilog[(log[a] as usize + log[b] as usize) % (n - 1)];
        }
    }
    let mut neg = vec![0u8; n];
    let mut inv = vec![0u8; n];
    for a in 0..n {
        neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u8;
        if a != 0 {
            inv[a] = antilog[(n - 1 - log[a] as usize) % (n - 1)];
        }
    }

    Ok(Field { q: q as u8, p, e, modulus, add, mul, neg, inv, log, antilog })
}

/// Shared, lazily built copy of GF(q).
pub fn gf(q: u32) -> Result<&'static Field> {
    static CACHE: [OnceLock<Field>; 10] = [const { OnceLock::new() }; 10];
    let (_, _) = prime_power(q).ok_or(Error::UnsupportedOrder(q))?;
    Ok(CACHE[q as usize].get_or_init(|| make_field(q).expect("supported order")))
}

impl Field {
    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.e as u32
    }

    /// Coefficients of the defining polynomial over GF(p), lowest first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0 by convention.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn div(&self, a: u8, b: u8) -> u8 {
        assert!(b != 0, "division by zero in GF({})", self.q);
        self.mul(a, self.inv(b))
    }

    pub fn log(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn antilog(&self, i: usize) -> u8 {
        self.antilog[i % (self.q as usize - 1)]
    }

    pub fn pow(&self, a: u8, n: u64) -> u8 {
        if n == 0 {
            return 1;
        }
        match self.log(a) {
            None => 0,
            Some(l) => self.antilog((l as u64 * n % (self.q as u64 - 1)) as usize),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    /// The canonical embedding of an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.p as i64) as u8
    }
}

/// Element of GF(q^3) in coefficient encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExtElem(pub u16);

impl ExtElem {
    pub const ZERO: ExtElem = ExtElem(0);
    pub const ONE: ExtElem = ExtElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(q^3) over a base field GF(q), together with a fixed GF(q)-basis.
///
/// For `q = 2` the defining cubic is `x^3 + x^2 + 1` and the basis is the normal
/// basis `(b, b^2, b^4)` of a root `b`. For larger `q` the cubic is the first
/// irreducible `x^3 + c2 x^2 + c1 x + c0` in order of increasing
/// `c0 + c1 q + c2 q^2`, and the basis is the polynomial basis `(1, a, a^2)`.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: Field,
    q: u32,
    order: u32,
    modulus: [u8; 3],
    basis: [ExtElem; 3],
    log: Vec<u16>,
    antilog: Vec<u16>,
    frob: Vec<u16>,
    coords: Vec<[u8; 3]>,
}

fn cubic_is_irreducible(f: &Field, m: [u8; 3]) -> bool {
    // A cubic is irreducible iff it has no root.
    f.elements().all(|x| {
        let x2 = f.mul(x, x);
        let x3 = f.mul(x2, x);
        let v = f.add(f.add(x3, f.mul(m[2], x2)), f.add(f.mul(m[1], x), m[0]));
        v != 0
    })
}

/// The first irreducible monic cubic over GF(q) in the documented search order.
pub fn default_cubic(f: &Field) -> [u8; 3] {
    let q = f.order();
    (0..q * q * q)
        .map(|n| [(n % q) as u8, (n / q % q) as u8, (n / (q * q)) as u8])
        .find(|&m| m[0] != 0 && cubic_is_irreducible(f, m))
        .expect("irreducible cubics exist over every finite field")
}

/// Builds GF(q^3) over `base`.
pub fn ext_field(base: &Field) -> ExtField {
    let q = base.order();
    let modulus = if q == 2 { [1, 0, 1] } else { default_cubic(base) };
    ExtField::with_modulus(base.clone(), modulus)
}

/// Shared, lazily built GF(q^3).
pub fn gf3(q: u32) -> Result<&'static ExtField> {
    static CACHE: [OnceLock<ExtField>; 10] = [const { OnceLock::new() }; 10];
    let base = gf(q)?;
    Ok(CACHE[q as usize].get_or_init(|| ext_field(base)))
}

impl ExtField {
    fn with_modulus(base: Field, modulus: [u8; 3]) -> ExtField {
        let q = base.order();
        let order = q * q * q;
        let mut ef = ExtField {
            base,
            q,
            order,
            modulus,
            basis: [ExtElem(1), ExtElem(q as u16), ExtElem((q * q) as u16)],
            log: Vec::new(),
            antilog: Vec::new(),
            frob: Vec::new(),
            coords: Vec::new(),
        };

        let generator = (2..order)
            .map(|g| ExtElem(g as u16))
            .find(|&g| {
                let mut x = g;
                let mut n = 1;
                while x != ExtElem::ONE {
                    x = ef.mul_schoolbook(x, g);
                    n += 1;
                }
                n == order - 1
            })
            .expect("multiplicative group is cyclic");
        let n = order as usize;
        ef.antilog = vec![0; n - 1];
        ef.log = vec![0; n];
        let mut x = ExtElem::ONE;
        for i in 0..n - 1 {
            ef.antilog[i] = x.0;
            ef.log[x.0 as usize] = i as u16;
            x = ef.mul_schoolbook(x, generator);
        }
        ef.frob = (0..order).map(|x| ef.pow(ExtElem(x as u16), q as u64).0).collect();

        if q == 2 {
            let beta = ExtElem(2);
            ef.basis = [beta, ef.pow(beta, 2), ef.pow(beta, 4)];
        }
        ef.coords = vec![[0; 3]; n];
        let mut seen = vec![false; n];
        for c in 0..order {
            let cs = [(c % q) as u8, (c / q % q) as u8, (c / (q * q)) as u8];
            let x = ef.from_coords(cs);
            assert!(!seen[x.0 as usize], "basis is not linearly independent");
            seen[x.0 as usize] = true;
            ef.coords[x.0 as usize] = cs;
        }
        ef
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The base field order q.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// q^3.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `(c0, c1, c2)` of the defining cubic `x^3 + c2 x^2 + c1 x + c0`.
    pub fn modulus(&self) -> [u8; 3] {
        self.modulus
    }

    pub fn basis(&self) -> [ExtElem; 3] {
        self.basis
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElem> {
        (0..self.order as u16).map(ExtElem)
    }

    fn split(&self, x: ExtElem) -> [u8; 3] {
        let q = self.q as u16;
        [(x.0 % q) as u8, (x.0 / q % q) as u8, (x.0 / (q * q)) as u8]
    }

    fn join(&self, d: [u8; 3]) -> ExtElem {
        let q = self.q as u16;
        ExtElem(d[0] as u16 + q * (d[1] as u16 + q * d[2] as u16))
    }

    /// Embeds a base-field element.
    pub fn embed(&self, c: u8) -> ExtElem {
        ExtElem(c as u16)
    }

    pub fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let (x, y) = (self.split(a), self.split(b));
        let f = &self.base;
        self.join([f.add(x[0], y[0]), f.add(x[1], y[1]), f.add(x[2], y[2])])
    }

    pub fn neg(&self, a: ExtElem) -> ExtElem {
        let x = self.split(a);
        let f = &self.base;
        self.join([f.neg(x[0]), f.neg(x[1]), f.neg(x[2])])
    }

    pub fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        self.add(a, self.neg(b))
    }

    /// Product through the log tables.
    pub fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        if a.is_zero() || b.is_zero() {
            return ExtElem::ZERO;
        }
        let n = self.order as usize - 1;
        ExtElem(self.antilog[(self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize) % n])
    }

    /// Product by polynomial multiplication modulo the defining cubic.
    pub fn mul_schoolbook(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let f = &self.base;
        let (x, y) = (self.split(a), self.split(b));
        let mut prod = [0u8; 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = f.add(prod[i + j], f.mul(x[i], y[j]));
            }
        }
        for deg in (3..5).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for k in 0..3 {
                prod[deg - 3 + k] = f.sub(prod[deg - 3 + k], f.mul(c, self.modulus[k]));
            }
        }
        self.join([prod[0], prod[1], prod[2]])
    }

    /// Multiplication by a base-field scalar.
    pub fn scale(&self, c: u8, a: ExtElem) -> ExtElem {
        let x = self.split(a);
        let f = &self.base;
        self.join([f.mul(c, x[0]), f.mul(c, x[1]), f.mul(c, x[2])])
    }

    pub fn inv(&self, a: ExtElem) -> Option<ExtElem> {
        if a.is_zero() {
            return None;
        }
        let n = self.order as usize - 1;
        Some(ExtElem(self.antilog[(n - self.log[a.0 as usize] as usize) % n]))
    }

    pub fn div(&self, a: ExtElem, b: ExtElem) -> Option<ExtElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn log(&self, a: ExtElem) -> Option<u16> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    pub fn pow(&self, a: ExtElem, n: u64) -> ExtElem {
        if n == 0 {
            return ExtElem::ONE;
        }
        if a.is_zero() {
            return ExtElem::ZERO;
        }
        if self.log.is_empty() {
            // Tables not built yet: square and multiply.
            let (mut base, mut e, mut acc) = (a, n, ExtElem::ONE);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_schoolbook(acc, base);
                }
                base = self.mul_schoolbook(base, base);
                e >>= 1;
            }
            return acc;
        }
        let m = self.order as u64 - 1;
        ExtElem(self.antilog[(self.log[a.0 as usize] as u64 * (n % m) % m) as usize])
    }

    /// `x -> x^q`.
    pub fn frobenius(&self, x: ExtElem) -> ExtElem {
        ExtElem(self.frob[x.0 as usize])
    }

    /// `x + x^q + x^(q^2)`, an element of the base field.
    pub fn trace(&self, x: ExtElem) -> u8 {
        let x1 = self.frobenius(x);
        let x2 = self.frobenius(x1);
        let t = self.add(self.add(x, x1), x2);
        debug_assert!(t.0 < self.q as u16, "trace left the base field");
        t.0 as u8
    }

    /// `x^(q^2 + q + 1)`, an element of the base field.
    pub fn norm(&self, x: ExtElem) -> u8 {
        let q = self.q as u64;
        let n = self.pow(x, q * q + q + 1);
        debug_assert!(n.0 < self.q as u16, "norm left the base field");
        n.0 as u8
    }

    /// Coordinates relative to [`ExtField::basis`].
    pub fn coords(&self, x: ExtElem) -> [u8; 3] {
        self.coords[x.0 as usize]
    }

    pub fn from_coords(&self, c: [u8; 3]) -> ExtElem {
        let mut acc = ExtElem::ZERO;
        for (ci, bi) in c.iter().zip(self.basis) {
            acc = self.add(acc, self.scale(*ci, bi));
        }
        acc
    }

    /// Whether the given elements are linearly independent over GF(q).
    pub fn independent(&self, xs: &[ExtElem]) -> bool {
        use crate::linalg::Matrix;
        let rows: Vec<Vec<u8>> = xs.iter().map(|&x| self.coords(x).to_vec()).collect();
        let m = Matrix::from_rows(self.q, 3, &rows).expect("3 columns");
        m.rank() == xs.len()
    }

    /// Coordinate matrix (acting on row vectors) of a GF(q)-linear map of GF(q^3).
    pub fn matrix_of(&self, map: impl Fn(ExtElem) -> ExtElem) -> crate::linalg::Matrix {
        let rows: Vec<Vec<u8>> = self.basis.iter().map(|&b| self.coords(map(b)).to_vec()).collect();
        crate::linalg::Matrix::from_rows(self.q, 3, &rows).expect("3 columns")
    }
}
