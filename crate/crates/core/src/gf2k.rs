//! Arithmetic in the finite fields GF(2^k), 1 <= k <= 32.
//!
//! Elements are bit vectors in the polynomial basis of a fixed irreducible
//! modulus, one canonical modulus per k (see [`MODULUS_TABLE`]). Every
//! modulus is chosen so that the basis root x is a primitive element; the
//! published generator `g` is therefore the class of x, and coefficients
//! print as polynomials in `g`. Addition is bitwise xor, multiplication is
//! carry-less multiplication followed by reduction.

use crate::error::{Error, Result};
use std::fmt;

/// Canonical modulus per extension degree, indexed by k - 1. Entry k is the
/// smallest-value irreducible polynomial of degree k over GF(2) whose root x
/// is primitive (k = 1 uses x itself so the quotient is the prime field).
/// Bit i of an entry is the coefficient of x^i, including the leading term.
pub const MODULUS_TABLE: [u64; 32] = [
    0x2,         // k=1:  x
    0x7,         // k=2:  x^2 + x + 1
    0xb,         // k=3:  x^3 + x + 1
    0x13,        // k=4:  x^4 + x + 1
    0x25,        // k=5:  x^5 + x^2 + 1
    0x43,        // k=6:  x^6 + x + 1
    0x83,        // k=7:  x^7 + x + 1
    0x11d,       // k=8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,       // k=9:  x^9 + x^4 + 1
    0x409,       // k=10: x^10 + x^3 + 1
    0x805,       // k=11: x^11 + x^2 + 1
    0x1053,      // k=12: x^12 + x^6 + x^4 + x + 1
    0x201b,      // k=13: x^13 + x^4 + x^3 + x + 1
    0x402b,      // k=14: x^14 + x^5 + x^3 + x + 1
    0x8003,      // k=15: x^15 + x + 1
    0x1002d,     // k=16: x^16 + x^5 + x^3 + x^2 + 1
    0x20009,     // k=17: x^17 + x^3 + 1
    0x40027,     // k=18: x^18 + x^5 + x^2 + x + 1
    0x80027,     // k=19: x^19 + x^5 + x^2 + x + 1
    0x100009,    // k=20: x^20 + x^3 + 1
    0x200005,    // k=21: x^21 + x^2 + 1
    0x400003,    // k=22: x^22 + x + 1
    0x800021,    // k=23: x^23 + x^5 + 1
    0x100001b,   // k=24: x^24 + x^4 + x^3 + x + 1
    0x2000009,   // k=25: x^25 + x^3 + 1
    0x4000047,   // k=26: x^26 + x^6 + x^2 + x + 1
    0x8000027,   // k=27: x^27 + x^5 + x^2 + x + 1
    0x10000009,  // k=28: x^28 + x^3 + 1
    0x20000005,  // k=29: x^29 + x^2 + 1
    0x40000053,  // k=30: x^30 + x^6 + x^4 + x + 1
    0x80000009,  // k=31: x^31 + x^3 + 1
    0x1000000af, // k=32: x^32 + x^7 + x^5 + x^3 + x^2 + x + 1
];

/// A finite field GF(2^k) as a value: extension degree, modulus, generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldCtx {
    k: u32,
    modulus: u64,
    generator: u64,
}

/// An element of a [`FieldCtx`], carrying its field. The representation is
/// the bit vector of coefficients in the polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    ctx: FieldCtx,
    bits: u64,
}

fn clmul(a: u64, b: u64) -> u128 {
    let mut acc: u128 = 0;
    let mut a = a;
    let mut shift = 0u32;
    while a != 0 {
        let tz = a.trailing_zeros();
        shift += tz;
        acc ^= (b as u128) << shift;
        a >>= tz + 1;
        shift += 1;
    }
    acc
}

impl FieldCtx {
    /// The canonical field with 2^k elements.
    pub fn new(k: u32) -> Result<FieldCtx> {
        if k == 0 || k > 32 {
            return Err(Error::UnsupportedFieldSize(k));
        }
        let modulus = MODULUS_TABLE[(k - 1) as usize];
        let generator = if k == 1 { 1 } else { 0b10 };
        Ok(FieldCtx { k, modulus, generator })
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { ctx: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { ctx: *self, bits: 1 }
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement { ctx: *self, bits: self.generator }
    }

    /// Element from its bit representation; `None` if out of range.
    pub fn element(&self, bits: u64) -> Option<FieldElement> {
        if bits < self.order() {
            Some(FieldElement { ctx: *self, bits })
        } else {
            None
        }
    }

    /// All elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let ctx = *self;
        (0..self.order()).map(move |bits| FieldElement { ctx, bits })
    }

    fn reduce(&self, mut x: u128) -> u64 {
        let k = self.k as i32;
        let m = self.modulus as u128;
        while x >> k != 0 {
            let d = 127 - x.leading_zeros() as i32;
            x ^= m << (d - k);
        }
        x as u64
    }

    /// GF(2^(k*m)) together with the canonical embedding of this field.
    pub fn extend(&self, m: u32) -> Result<(FieldCtx, Embedding)> {
        let km = self.k.checked_mul(m).ok_or(Error::ExtensionTooLarge(u32::MAX))?;
        if km > 32 {
            return Err(Error::ExtensionTooLarge(km));
        }
        let big = FieldCtx::new(km)?;
        let emb = Embedding::new(*self, big)?;
        Ok((big, emb))
    }

    /// Parse an element in the `g^i` / integer syntax, e.g. "g^2+g", "1", "0".
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let mut acc = self.zero();
        for part in s.split('+') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse { pos: 0, msg: format!("empty summand in element '{s}'") });
            }
            let val = if let Some(rest) = part.strip_prefix("g^") {
                let e: u64 = rest.trim().parse().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad exponent in element '{s}'"),
                })?;
                self.generator().pow(e)
            } else if part == "g" {
                self.generator()
            } else {
                let n: u64 = part.parse().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad element syntax '{s}'"),
                })?;
                if n % 2 == 0 { self.zero() } else { self.one() }
            };
            acc = acc + val;
        }
        Ok(acc)
    }
}

impl FieldElement {
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn pow(self, mut e: u64) -> FieldElement {
        let mut base = self;
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        // Fermat: a^(2^k - 2)
        self.pow(self.ctx.order() - 2)
    }

    /// The Frobenius square a^2.
    pub fn square(self) -> FieldElement {
        self * self
    }

    /// The unique b with b^2 = a, i.e. a^(2^(k-1)).
    pub fn sqrt(self) -> FieldElement {
        let mut r = self;
        for _ in 0..self.ctx.k - 1 {
            r = r.square();
        }
        r
    }

    /// Multiplicative order (0 has none; returns 0 for it).
    pub fn multiplicative_order(self) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let n = self.ctx.order() - 1;
        let mut ord = n;
        for p in factor_u64(n) {
            while ord % p == 0 && self.pow(ord / p).is_one() {
                ord /= p;
            }
        }
        ord
    }

    /// A deterministic d-th root if one exists in this field (smallest by
    /// bit value). Even parts of d are peeled off through the bijective
    /// square root; for the odd part the root is produced by exponent
    /// inversion when `gcd(d, n/g)` = 1 and by a short subgroup scan
    /// otherwise.
    pub fn nth_root(self, d: u64) -> Option<FieldElement> {
        assert!(d > 0);
        if self.is_zero() {
            return Some(self);
        }
        let mut a = self;
        let mut d = d;
        while d % 2 == 0 {
            a = a.sqrt();
            d /= 2;
        }
        if d == 1 {
            return Some(a);
        }
        let n = a.ctx.order() - 1;
        let g = gcd_u64(d, n);
        if !a.pow(n / g).is_one() {
            return None; // not a d-th power
        }
        if gcd_u64(d, n / g) == 1 {
            let e = inv_mod(d % (n / g), n / g)?;
            let r = a.pow(e);
            debug_assert!(r.pow(d) == a);
            // canonical: smallest root among r * (d-th roots of unity)
            return Some(smallest_root_times_unity(r, d, n));
        }
        // Rare case: scan the order-(n/g') subgroup is overkill; fall back to
        // a full root-of-unity adjusted search from a pumped exponent.
        for cand in a.ctx.elements() {
            if !cand.is_zero() && cand.pow(d) == a {
                return Some(cand);
            }
        }
        None
    }

    pub fn to_syntax(&self) -> String {
        if self.bits == 0 {
            return "0".to_string();
        }
        let mut parts = vec![];
        for i in (0..self.ctx.k).rev() {
            if (self.bits >> i) & 1 == 1 {
                parts.push(match i {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{i}"),
                });
            }
        }
        parts.join("+")
    }
}

fn smallest_root_times_unity(r: FieldElement, d: u64, n: u64) -> FieldElement {
    let g = gcd_u64(d, n);
    if g == 1 {
        return r;
    }
    let zeta = r.ctx().generator().pow(n / g);
    let mut best = r;
    let mut cur = r;
    for _ in 1..g {
        cur = cur * zeta;
        if cur.bits() < best.bits() {
            best = cur;
        }
    }
    best
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

pub(crate) fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut fs = vec![];
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            fs.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.ctx, rhs.ctx, "field mismatch");
        FieldElement { ctx: self.ctx, bits: self.bits ^ rhs.bits }
    }
}

// Subtraction equals addition in characteristic 2; provided for readability.
impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + rhs
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.ctx, rhs.ctx, "field mismatch");
        FieldElement { ctx: self.ctx, bits: self.ctx.reduce(clmul(self.bits, rhs.bits)) }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_syntax())
    }
}

/// The canonical field homomorphism GF(2^k) -> GF(2^(k*m)), determined by
/// sending the small basis root to the smallest root of the small modulus
/// inside the big field.
#[derive(Debug, Clone)]
pub struct Embedding {
    from: FieldCtx,
    to: FieldCtx,
    /// Images of the basis powers x^0 .. x^(k-1).
    powers: Vec<u64>,
}

impl Embedding {
    fn new(from: FieldCtx, to: FieldCtx) -> Result<Embedding> {
        assert!(to.k % from.k == 0);
        if from == to {
            let powers = (0..from.k).map(|i| 1u64 << i).collect();
            return Ok(Embedding { from, to, powers });
        }
        // Root of the small modulus inside `to`: the modulus is a GF(2)
        // polynomial, so lift it coefficient-wise and split it.
        let coeffs: Vec<FieldElement> = (0..=from.k)
            .map(|i| if (from.modulus >> i) & 1 == 1 { to.one() } else { to.zero() })
            .collect();
        let p = UPoly::new(to, coeffs);
        let roots = p.roots_in_field()?;
        let beta = *roots.first().ok_or_else(|| {
            Error::Inconsistency("small modulus has no root in extension".into())
        })?;
        let mut powers = Vec::with_capacity(from.k as usize);
        let mut acc = to.one();
        for _ in 0..from.k {
            powers.push(acc.bits());
            acc = acc * beta;
        }
        Ok(Embedding { from, to, powers })
    }

    pub fn from_ctx(&self) -> FieldCtx {
        self.from
    }

    pub fn to_ctx(&self) -> FieldCtx {
        self.to
    }

    pub fn apply(&self, a: FieldElement) -> FieldElement {
        assert_eq!(a.ctx, self.from, "embedding domain mismatch");
        let mut bits = 0u64;
        for (i, p) in self.powers.iter().enumerate() {
            if (a.bits >> i) & 1 == 1 {
                bits ^= p;
            }
        }
        FieldElement { ctx: self.to, bits }
    }
}

/// All roots in the element's own field of the univariate polynomial with
/// the given coefficients (ascending degree), found by exhaustive
/// evaluation over the field.
pub fn poly_roots(coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let nonzero = coeffs.iter().any(|c| !c.is_zero());
    if !nonzero {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = coeffs[0].ctx;
    let mut roots = vec![];
    for a in ctx.elements() {
        let mut acc = ctx.zero();
        for c in coeffs.iter().rev() {
            acc = acc * a + *c;
        }
        if acc.is_zero() {
            roots.push(a);
        }
    }
    Ok(roots)
}

// ---------------------------------------------------------------------------
// Univariate polynomials over a FieldCtx: the root-finding engine used for
// splitting resolvents over extensions without scanning large fields.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial; coefficients ascending, trailing zeros
/// trimmed (zero polynomial has empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    ctx: FieldCtx,
    coeffs: Vec<u64>,
}

impl UPoly {
    pub fn new(ctx: FieldCtx, coeffs: Vec<FieldElement>) -> UPoly {
        let mut bits: Vec<u64> = coeffs
            .iter()
            .map(|c| {
                assert_eq!(c.ctx, ctx);
                c.bits
            })
            .collect();
        while bits.last() == Some(&0) {
            bits.pop();
        }
        UPoly { ctx, coeffs: bits }
    }

    pub fn zero(ctx: FieldCtx) -> UPoly {
        UPoly { ctx, coeffs: vec![] }
    }

    pub fn from_bits(ctx: FieldCtx, mut coeffs: Vec<u64>) -> UPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { ctx, coeffs }
    }

    pub fn monomial(ctx: FieldCtx, c: FieldElement, e: usize) -> UPoly {
        if c.is_zero() {
            return UPoly::zero(ctx);
        }
        let mut coeffs = vec![0u64; e + 1];
        coeffs[e] = c.bits;
        UPoly { ctx, coeffs }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let bits = self.coeffs.get(i).copied().unwrap_or(0);
        FieldElement { ctx: self.ctx, bits }
    }

    pub fn leading(&self) -> FieldElement {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    pub fn eval(&self, a: FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for i in (0..self.coeffs.len()).rev() {
            acc = acc * a + self.coeff(i);
        }
        acc
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        assert_eq!(self.ctx, rhs.ctx);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs.get(i).copied().unwrap_or(0) ^ rhs.coeffs.get(i).copied().unwrap_or(0);
        }
        UPoly::from_bits(self.ctx, coeffs)
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        assert_eq!(self.ctx, rhs.ctx);
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(self.ctx);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                coeffs[i + j] ^= self.ctx.reduce(clmul(a, b));
            }
        }
        UPoly::from_bits(self.ctx, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> UPoly {
        if c.is_zero() {
            return UPoly::zero(self.ctx);
        }
        let coeffs = self.coeffs.iter().map(|&a| (FieldElement { ctx: self.ctx, bits: a } * c).bits).collect();
        UPoly::from_bits(self.ctx, coeffs)
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, rhs: &UPoly) -> (UPoly, UPoly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let d = rhs.degree().unwrap();
        let lead_inv = rhs.leading().inv();
        let mut rem = self.clone();
        if rem.degree().map_or(true, |n| n < d) {
            return (UPoly::zero(self.ctx), rem);
        }
        let mut q = vec![0u64; rem.degree().unwrap() - d + 1];
        while let Some(n) = rem.degree() {
            if n < d {
                break;
            }
            let c = rem.leading() * lead_inv;
            q[n - d] = c.bits;
            // rem -= c * x^(n-d) * rhs
            for (i, &b) in rhs.coeffs.iter().enumerate() {
                let sub = (FieldElement { ctx: self.ctx, bits: b } * c).bits;
                rem.coeffs[n - d + i] ^= sub;
            }
            while rem.coeffs.last() == Some(&0) {
                rem.coeffs.pop();
            }
        }
        (UPoly::from_bits(self.ctx, q), rem)
    }

    pub fn rem(&self, rhs: &UPoly) -> UPoly {
        self.divrem(rhs).1
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading().inv())
    }

    pub fn gcd(&self, rhs: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative with characteristic-2 coefficients.
    pub fn derivative(&self) -> UPoly {
        let mut coeffs = vec![0u64; self.coeffs.len().saturating_sub(1)];
        for (i, c) in coeffs.iter_mut().enumerate() {
            if i % 2 == 0 {
                // derivative of x^(i+1), exponent i+1 odd
                *c = self.coeffs[i + 1];
            }
        }
        UPoly::from_bits(self.ctx, coeffs)
    }

    /// If all exponents are even the polynomial is a perfect square; extract
    /// the square root.
    fn sqrt_poly(&self) -> Option<UPoly> {
        if self.coeffs.iter().skip(1).step_by(2).any(|&c| c != 0) {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .step_by(2)
            .map(|&c| FieldElement { ctx: self.ctx, bits: c }.sqrt().bits)
            .collect();
        Some(UPoly::from_bits(self.ctx, coeffs))
    }

    /// Product of the distinct irreducible factors (the radical), monic.
    pub fn radical(&self) -> UPoly {
        assert!(!self.is_zero());
        if self.degree() == Some(0) {
            return UPoly::from_bits(self.ctx, vec![1]);
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.sqrt_poly().expect("zero derivative implies perfect square").radical();
        }
        let g = self.gcd(&d);
        if g.degree() == Some(0) {
            return self.monic();
        }
        let s = self.divrem(&g).0; // product of factors with multiplicity not divisible by 2
        let r_rest = g.radical();
        // union of distinct factors: s * (r_rest / gcd(r_rest, s))
        let overlap = r_rest.gcd(&s);
        s.monic().mul(&r_rest.divrem(&overlap).0)
    }

    /// x^(2^e) mod self, by iterated squaring.
    fn frobenius_power_x(&self, e: u32) -> UPoly {
        let x = UPoly::monomial(self.ctx, self.ctx.one(), 1);
        let mut t = x.rem(self);
        for _ in 0..e {
            t = t.mul(&t).rem(self);
        }
        t
    }

    /// Distinct-degree factorization of a squarefree polynomial: returns
    /// pairs (d, product of all irreducible factors of degree d), d
    /// ascending.
    pub fn distinct_degree_factor(&self) -> Vec<(u32, UPoly)> {
        let mut s = self.monic();
        let mut out = vec![];
        let k = self.ctx.k;
        let mut d = 1u32;
        // w = x^(q^d) mod s, recomputed from scratch per round against the
        // shrinking s (degrees here are tiny).
        while s.degree().map_or(false, |n| n >= 1) {
            if (s.degree().unwrap() as u32) < 2 * d {
                // remainder is a single irreducible factor
                out.push((s.degree().unwrap() as u32, s.clone()));
                break;
            }
            let w = s.frobenius_power_x(k * d);
            let x = UPoly::monomial(self.ctx, self.ctx.one(), 1);
            let diff = w.add(&x.rem(&s));
            let g = if diff.is_zero() { s.clone() } else { s.gcd(&diff) };
            if g.degree().map_or(false, |n| n >= 1) {
                out.push((d, g.clone()));
                s = s.divrem(&g).0;
            }
            d += 1;
        }
        out
    }

    /// All roots of this polynomial lying in its own coefficient field,
    /// found deterministically (no field scan): radical, then gcd with
    /// x^q - x, then trace-based splitting. Sorted by bit value.
    pub fn roots_in_field(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(vec![]);
        }
        let rad = self.radical();
        // factor of rad splitting into linears over this field
        let w = rad.frobenius_power_x(self.ctx.k);
        let x = UPoly::monomial(self.ctx, self.ctx.one(), 1);
        let diff = w.add(&x.rem(&rad));
        let lin = if diff.is_zero() { rad.clone() } else { rad.gcd(&diff) };
        let mut roots = vec![];
        if lin.degree().map_or(false, |n| n >= 1) {
            split_linear_factors(&lin, &mut roots);
        }
        roots.sort_by_key(|r| r.bits());
        Ok(roots)
    }

    /// All roots over the algebraic closure, reported per geometric root as
    /// (absolute extension degree over this field, extended ctx, embedding
    /// from this field, root). Roots of the same factor degree share the
    /// ctx/embedding. Sorted by (degree, bits).
    pub fn roots_over_extensions(&self) -> Result<Vec<ExtensionRoot>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let rad = self.radical();
        if rad.degree() == Some(0) {
            return Ok(vec![]);
        }
        let mut out = vec![];
        for (d, prod) in rad.distinct_degree_factor() {
            let (ext, emb) = self.ctx.extend(d)?;
            let lifted = UPoly::from_bits(
                ext,
                prod.coeffs.iter().map(|&b| emb.apply(FieldElement { ctx: self.ctx, bits: b }).bits()).collect(),
            );
            let mut roots = vec![];
            split_linear_factors(&lifted, &mut roots);
            roots.sort_by_key(|r| r.bits());
            for r in roots {
                out.push(ExtensionRoot { degree: d, ctx: ext, embedding: emb.clone(), root: r });
            }
        }
        Ok(out)
    }
}

/// A root of a polynomial found in an extension field.
#[derive(Debug, Clone)]
pub struct ExtensionRoot {
    /// Degree of the extension over the coefficient field.
    pub degree: u32,
    pub ctx: FieldCtx,
    pub embedding: Embedding,
    pub root: FieldElement,
}

/// Split a squarefree product of linear factors over its own field using
/// gcds with trace polynomials Tr(c x). The powers of the generator form a
/// basis, and the trace form is nondegenerate, so some basis multiplier
/// separates any two distinct roots.
fn split_linear_factors(p: &UPoly, out: &mut Vec<FieldElement>) {
    let d = p.degree().unwrap();
    if d == 0 {
        return;
    }
    if d == 1 {
        // monic-normalize: root = c0 / c1
        let root = p.coeff(0) * p.leading().inv();
        out.push(root);
        return;
    }
    let ctx = p.ctx();
    let g = ctx.generator();
    let mut c = ctx.one();
    for _ in 0..ctx.k {
        // trace poly: sum_{i<k} (c x)^(2^i) mod p
        let cx = UPoly::monomial(ctx, c, 1);
        let mut term = cx.rem(p);
        let mut tr = UPoly::zero(ctx);
        for _ in 0..ctx.k {
            tr = tr.add(&term);
            term = term.mul(&term).rem(p);
        }
        if !tr.is_zero() {
            let h = p.gcd(&tr);
            if let Some(dh) = h.degree() {
                if dh >= 1 && dh < d {
                    split_linear_factors(&h, out);
                    split_linear_factors(&p.divrem(&h).0, out);
                    return;
                }
            }
        }
        c = c * g;
    }
    unreachable!("trace splitting failed on a fully split squarefree polynomial");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u32) -> FieldCtx {
        FieldCtx::new(k).unwrap()
    }

    #[test]
    fn modulus_table_irreducible_and_primitive() {
        for k in 1..=32u32 {
            let ctx = gf(k);
            // irreducibility: x^(2^k) == x mod f and gcd criteria per prime p | k
            let x = ctx.generator();
            if k == 1 {
                assert_eq!(ctx.order(), 2);
                continue;
            }
            let mut t = ctx.element(0b10).unwrap();
            for _ in 0..k {
                t = t.square();
            }
            assert_eq!(t.bits(), 0b10, "x^(2^k) != x for k={k}");
            for p in factor_u64(k as u64) {
                let e = k as u64 / p;
                let mut s = ctx.element(0b10).unwrap();
                for _ in 0..e {
                    s = s.square();
                }
                // x^(2^(k/p)) - x must be a unit mod f: nonzero and coprime.
                // Since f is irreducible iff this gcd is 1, check by gcd of
                // bit polynomials over GF(2).
                let diff = s.bits() ^ 0b10;
                assert_ne!(diff, 0, "repeated subfield root for k={k}");
                assert_eq!(gf2_poly_gcd(diff as u128, ctx.modulus_bits() as u128), 1);
            }
            // primitivity of x
            assert_eq!(x.multiplicative_order(), ctx.order() - 1, "x not primitive for k={k}");
        }
    }

    fn gf2_poly_gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let db = 127 - b.leading_zeros() as i32;
            loop {
                if a == 0 {
                    break;
                }
                let da = 127 - a.leading_zeros() as i32;
                if da < db {
                    break;
                }
                a ^= b << (da - db);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a
    }

    #[test]
    fn field_make_examples() {
        let f2 = gf(1);
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.elements().count(), 2);

        let f4 = gf(2);
        assert_eq!(f4.order(), 4);
        let g = f4.generator();
        assert_eq!(g.square(), g + f4.one(), "g^2 = g + 1 in GF(4)");

        let f8 = gf(3);
        assert_eq!(f8.generator().multiplicative_order(), 7);

        assert!(FieldCtx::new(0).is_err());
        assert!(FieldCtx::new(33).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for k in 1..=4u32 {
            let ctx = gf(k);
            for a in ctx.elements() {
                assert!((a + a).is_zero(), "char 2");
                for b in ctx.elements() {
                    assert_eq!((a + b).square(), a.square() + b.square(), "Frobenius additivity");
                    assert_eq!(a * b, b * a);
                    for c in ctx.elements() {
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_sqrt_exhaustive() {
        for k in 1..=8u32 {
            let ctx = gf(k);
            let mut seen = std::collections::HashSet::new();
            for a in ctx.elements() {
                assert_eq!(a.sqrt().square(), a, "sqrt round trip k={k}");
                assert!(seen.insert(a.sqrt().bits()), "sqrt not injective");
                if !a.is_zero() {
                    assert!((a * a.inv()).is_one());
                }
            }
        }
        let f4 = gf(2);
        let g = f4.generator();
        assert_eq!(g.sqrt(), g.square(), "sqrt(g) = g^2 in GF(4)");
        assert_eq!(f4.zero().sqrt(), f4.zero());
        assert_eq!(f4.one().sqrt(), f4.one());
    }

    #[test]
    fn poly_roots_examples() {
        let f2 = gf(1);
        // x^2 + 1 over GF(2) -> {1}
        let roots = poly_roots(&[f2.one(), f2.zero(), f2.one()]).unwrap();
        assert_eq!(roots, vec![f2.one()]);
        // x^2 + x + 1 over GF(2) -> empty
        let roots = poly_roots(&[f2.one(), f2.one(), f2.one()]).unwrap();
        assert!(roots.is_empty());
        // x^2 + x + 1 over GF(4) -> {g, g+1}
        let f4 = gf(2);
        let roots = poly_roots(&[f4.one(), f4.one(), f4.one()]).unwrap();
        let g = f4.generator();
        assert_eq!(roots, vec![g, g + f4.one()]);
        // zero polynomial
        assert_eq!(poly_roots(&[f2.zero()]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn extend_embeds_ring_homomorphism() {
        let f2 = gf(1);
        let (f4, emb) = f2.extend(2).unwrap();
        assert_eq!(f4.order(), 4);
        assert!(emb.apply(f2.one()).is_one());
        // x^2+x+1 gains two roots after embedding
        let p = UPoly::new(f4, vec![f4.one(), f4.one(), f4.one()]);
        assert_eq!(p.roots_in_field().unwrap().len(), 2);

        let f4 = gf(2);
        let (f16, emb) = f4.extend(2).unwrap();
        assert_eq!(f16.order(), 16);
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(emb.apply(a * b), emb.apply(a) * emb.apply(b));
                assert_eq!(emb.apply(a + b), emb.apply(a) + emb.apply(b));
            }
        }
        // injectivity
        let mut images = std::collections::HashSet::new();
        for a in f4.elements() {
            assert!(images.insert(emb.apply(a).bits()));
        }
        assert!(gf(3).extend(11).is_err(), "3 * 11 > 32");
    }

    #[test]
    fn upoly_roots_match_exhaustive_search() {
        // factor-based root finder against the brute-force oracle
        for k in [1u32, 2, 3, 4] {
            let ctx = gf(k);
            let mut lcg: u64 = 0x2545F4914F6CDD1D;
            for _ in 0..40 {
                let deg = 1 + (lcg % 6) as usize;
                let mut coeffs = vec![];
                for _ in 0..=deg {
                    lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    coeffs.push(ctx.element(lcg % ctx.order()).unwrap());
                }
                if coeffs.iter().all(|c| c.is_zero()) {
                    coeffs[deg] = ctx.one();
                }
                let brute = poly_roots(&coeffs).unwrap();
                let fast = UPoly::new(ctx, coeffs).roots_in_field().unwrap();
                assert_eq!(brute, fast);
            }
        }
    }

    #[test]
    fn roots_over_extensions_finds_conjugates() {
        let f2 = gf(1);
        // x^2 + x + 1: two conjugate roots of degree 2
        let p = UPoly::new(f2, vec![f2.one(), f2.one(), f2.one()]);
        let roots = p.roots_over_extensions().unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.degree == 2));
        for r in &roots {
            assert!(p
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, &b)| r.embedding.apply(FieldElement { ctx: f2, bits: b }) * r.root.pow(i as u64))
                .fold(r.ctx.zero(), |acc, t| acc + t)
                .is_zero());
        }
        // (x^2+x+1)(x+1): degrees 1 and 2
        let q = p.mul(&UPoly::new(f2, vec![f2.one(), f2.one()]));
        let roots = q.roots_over_extensions().unwrap();
        let degs: Vec<u32> = roots.iter().map(|r| r.degree).collect();
        assert_eq!(degs, vec![1, 2, 2]);
    }

    #[test]
    fn nth_root_small_fields() {
        for k in 1..=4u32 {
            let ctx = gf(k);
            for d in 1..=7u64 {
                for a in ctx.elements() {
                    if let Some(r) = a.nth_root(d) {
                        assert_eq!(r.pow(d), a);
                    } else {
                        assert!(ctx.elements().all(|x| x.pow(d) != a || x.is_zero() && !a.is_zero()));
                    }
                }
            }
        }
    }
}
