//! Arithmetic in F_q (q prime) and in F_{q^n} = F_q[T]/psi(T).
//!
//! Elements are coefficient vectors in the power basis 1, alpha, ...,
//! alpha^{n-1}, where alpha is the class of T. The canonical encoding of an
//! element is `sum coeffs[i] * q^i` (constant term least significant), a
//! bijection onto `[0, q^n)`.

use std::cmp::Ordering;
use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::fqpoly::{inv_mod, FqPoly};

pub const MAX_Q: u32 = 1 << 16;
/// Largest admissible field size; keeps exponent arithmetic inside `u128`.
pub const MAX_FIELD_BITS: u32 = 120;
/// Default cap on the number of elements a full enumeration may produce.
pub const DEFAULT_ENUM_GUARD: u128 = 1 << 24;

/// An element of F_{q^n}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFElem {
    coeffs: Vec<u32>,
}

impl FFElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Ordered by canonical encoding.
impl Ord for FFElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FFElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Carry-less product of two bit masks of degree < n, reduced by `psi`.
/// The unreduced product must fit the word: 2n - 1 bits.
fn clmul_reduce<W>(x: W, y: W, psi: W, n: u32) -> W
where
    W: Copy
        + PartialEq
        + From<u8>
        + std::ops::BitXor<Output = W>
        + std::ops::BitAnd<Output = W>
        + std::ops::Sub<Output = W>
        + std::ops::Shl<u32, Output = W>
        + std::ops::Shr<u32, Output = W>
        + BitScan,
{
    let zero = W::from(0);
    let one = W::from(1);
    let mut prod = zero;
    let mut rest = x;
    while rest != zero {
        prod = prod ^ (y << rest.trailing());
        rest = rest & (rest - one);
    }
    while prod >> n != zero {
        prod = prod ^ (psi << (prod.top() - n));
    }
    prod
}

trait BitScan {
    fn trailing(self) -> u32;
    fn top(self) -> u32;
}

impl BitScan for u64 {
    fn trailing(self) -> u32 {
        self.trailing_zeros()
    }
    fn top(self) -> u32 {
        63 - self.leading_zeros()
    }
}

impl BitScan for u128 {
    fn trailing(self) -> u32 {
        self.trailing_zeros()
    }
    fn top(self) -> u32 {
        127 - self.leading_zeros()
    }
}

/// The extension F_{q^n} together with its defining modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldParams {
    q: u32,
    n: usize,
    psi: FqPoly,
    /// `-psi_j mod q` for j < n, used to fold high-degree terms.
    neg_psi: Vec<u64>,
    /// floor(2^64 / q), for Barrett reduction of accumulated products.
    barrett: u64,
    /// Bit mask of psi when q = 2 and n <= 64, so products fit in a u128.
    binary_psi: Option<u128>,
    size: u128,
}

fn check_base(q: u32, n: usize) -> Result<u128> {
    if !(2..=MAX_Q).contains(&q) || !arith::is_prime_u64(q as u64) {
        return Err(Error::invalid(format!(
            "q = {q} must be a prime in [2, 2^16]"
        )));
    }
    if n == 0 {
        return Err(Error::invalid("extension degree n must be at least 1"));
    }
    let size = u32::try_from(n)
        .ok()
        .and_then(|n| arith::checked_pow(q as u128, n))
        .filter(|&s| s <= 1u128 << MAX_FIELD_BITS)
        .ok_or_else(|| {
            Error::invalid(format!(
                "q^n = {q}^{n} exceeds the 2^{MAX_FIELD_BITS} field-size cap"
            ))
        })?;
    Ok(size)
}

/// The monic irreducible polynomial of degree `n` over F_q with the smallest
/// encoding.
pub fn find_irreducible(q: u32, n: usize) -> Result<FqPoly> {
    let size = check_base(q, n)?;
    // Monic degree-n polynomials have encodings size..2*size; scan upward.
    (0..size)
        .map(|low| FqPoly::from_encoding(size + low, q))
        .find(|f| f.is_irreducible(q))
        .ok_or_else(|| Error::invalid("no irreducible polynomial found"))
}

impl FieldParams {
    /// F_{q^n} with the canonical (smallest-encoding) irreducible modulus.
    pub fn new(q: u32, n: usize) -> Result<Self> {
        let psi = find_irreducible(q, n)?;
        Self::with_modulus(q, psi)
    }

    /// F_q[T]/psi for an explicit monic irreducible `psi`.
    pub fn with_modulus(q: u32, psi: FqPoly) -> Result<Self> {
        let n = psi
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::invalid("modulus must have degree at least 1"))?;
        let size = check_base(q, n)?;
        if psi.coeffs().iter().any(|&c| c >= q) {
            return Err(Error::invalid("modulus coefficients must lie in [0, q)"));
        }
        if !psi.is_monic() {
            return Err(Error::invalid(format!("modulus {psi} is not monic")));
        }
        if !psi.is_irreducible(q) {
            return Err(Error::invalid(format!(
                "modulus {psi} is reducible over F_{q}"
            )));
        }
        let neg_psi = psi.coeffs()[..n]
            .iter()
            .map(|&c| ((q - c) % q) as u64)
            .collect();
        let binary_psi = (q == 2 && n <= 64).then(|| {
            psi.coeffs()
                .iter()
                .enumerate()
                .fold(0u128, |m, (i, &c)| m | ((c as u128) << i))
        });
        Ok(FieldParams {
            q,
            n,
            psi,
            neg_psi,
            barrett: (u64::MAX / q as u64) + u64::from(u64::MAX % q as u64 == q as u64 - 1),
            binary_psi,
            size,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn psi(&self) -> &FqPoly {
        &self.psi
    }

    /// Encoding of the modulus, `sum psi_i q^i` (a degree-n monic has one more digit).
    pub fn psi_encoding(&self) -> u128 {
        self.psi
            .encoding(self.q)
            .expect("monic of degree n encodes below 2^121")
    }

    /// The modulus as comma-separated residues, constant term first.
    pub fn psi_string(&self) -> String {
        self.psi
            .coeffs()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// q^n.
    pub fn size(&self) -> u128 {
        self.size
    }

    /// q^n - 1, the order of the multiplicative group.
    pub fn group_order(&self) -> u128 {
        self.size - 1
    }

    pub fn zero(&self) -> FFElem {
        FFElem {
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FFElem {
        self.from_base(1)
    }

    /// The image of a residue of F_q.
    pub fn from_base(&self, c: u32) -> FFElem {
        let mut x = self.zero();
        x.coeffs[0] = c % self.q;
        x
    }

    /// The generator alpha = T mod psi.
    pub fn alpha(&self) -> FFElem {
        self.from_poly(&FqPoly::t())
    }

    pub fn from_coeffs(&self, coeffs: Vec<u32>) -> Result<FFElem> {
        if coeffs.len() != self.n || coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::invalid(format!(
                "element must have {} coefficients in [0, {})",
                self.n, self.q
            )));
        }
        Ok(FFElem { coeffs })
    }

    pub fn from_encoding(&self, mut enc: u128) -> Result<FFElem> {
        if enc >= self.size {
            return Err(Error::invalid(format!(
                "encoding {enc} is outside [0, {})",
                self.size
            )));
        }
        let q = self.q as u128;
        let coeffs = (0..self.n)
            .map(|_| {
                let c = (enc % q) as u32;
                enc /= q;
                c
            })
            .collect();
        Ok(FFElem { coeffs })
    }

    pub fn encode(&self, x: &FFElem) -> u128 {
        x.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.q as u128 + c as u128)
    }

    /// The element as a polynomial in T of degree < n.
    pub fn to_poly(&self, x: &FFElem) -> FqPoly {
        FqPoly::new(x.coeffs.clone(), self.q)
    }

    pub fn from_poly(&self, p: &FqPoly) -> FFElem {
        let r = p.rem(&self.psi, self.q).expect("modulus is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.n, 0);
        FFElem { coeffs }
    }

    pub fn add(&self, a: &FFElem, b: &FFElem) -> FFElem {
        let q = self.q;
        FFElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= q {
                        s - q
                    } else {
                        s
                    }
                })
                .collect(),
        }
    }

    pub fn neg(&self, a: &FFElem) -> FFElem {
        let q = self.q;
        FFElem {
            coeffs: a.coeffs.iter().map(|&x| (q - x) % q).collect(),
        }
    }

    pub fn sub(&self, a: &FFElem, b: &FFElem) -> FFElem {
        self.add(a, &self.neg(b))
    }

    /// Multiplication by a scalar from F_q.
    pub fn scale(&self, a: &FFElem, s: u32) -> FFElem {
        let q = self.q as u64;
        FFElem {
            coeffs: a
                .coeffs
                .iter()
                .map(|&x| ((x as u64 * (s as u64 % q)) % q) as u32)
                .collect(),
        }
    }

    /// x mod q for x < 2^63.
    #[inline]
    fn reduce(&self, x: u64) -> u64 {
        let quot = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let r = x - quot * self.q as u64;
        if r >= self.q as u64 {
            r - self.q as u64
        } else {
            r
        }
    }

    /// Whether [`mul_bits`](Self::mul_bits) is available: q = 2 and n <= 64.
    pub fn is_small_binary(&self) -> bool {
        self.binary_psi.is_some()
    }

    /// Product of two elements given by their encodings, which for q = 2 are
    /// the coefficient bit masks. Requires [`is_small_binary`](Self::is_small_binary).
    pub fn mul_bits(&self, x: u128, y: u128) -> u128 {
        let psi = self.binary_psi.expect("binary field with n <= 64");
        let n = self.n as u32;
        if n <= 32 {
            return clmul_reduce(x as u64, y as u64, psi as u64, n) as u128;
        }
        clmul_reduce(x, y, psi, n)
    }

    fn to_bits(a: &FFElem) -> u128 {
        a.coeffs.iter().rev().fold(0u128, |m, &c| (m << 1) | c as u128)
    }

    fn unpack_bits(&self, x: u128) -> FFElem {
        FFElem {
            coeffs: (0..self.n).map(|i| ((x >> i) & 1) as u32).collect(),
        }
    }

    pub fn mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        if self.binary_psi.is_some() {
            return self.unpack_bits(self.mul_bits(Self::to_bits(a), Self::to_bits(b)));
        }
        self.mul_coeffs(a, b)
    }

    fn mul_coeffs(&self, a: &FFElem, b: &FFElem) -> FFElem {
        const STACK: usize = 63;
        let n = self.n;
        let mut stack = [0u64; STACK];
        let mut heap = Vec::new();
        let acc: &mut [u64] = if 2 * n - 1 <= STACK {
            &mut stack[..2 * n - 1]
        } else {
            heap.resize(2 * n - 1, 0);
            &mut heap
        };
        // Each slot collects at most n products below q^2 <= 2^32 and at
        // most n - 1 folded terms below q^2, so it stays below 2^40.
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u64;
            for (slot, &y) in acc[i..i + n].iter_mut().zip(&b.coeffs) {
                *slot += x * y as u64;
            }
        }
        for i in (n..2 * n - 1).rev() {
            let c = self.reduce(acc[i]);
            if c == 0 {
                continue;
            }
            for (slot, &p) in acc[i - n..i].iter_mut().zip(&self.neg_psi) {
                *slot += c * p;
            }
        }
        FFElem {
            coeffs: acc[..n].iter().map(|&c| self.reduce(c) as u32).collect(),
        }
    }

    pub fn square(&self, a: &FFElem) -> FFElem {
        self.mul(a, a)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in F_q[T].
    pub fn inv(&self, a: &FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, s) = self.to_poly(a).ext_gcd(&self.psi, self.q);
        debug_assert_eq!(g, FqPoly::one());
        Ok(self.from_poly(&s))
    }

    pub fn div(&self, a: &FFElem, b: &FFElem) -> Result<FFElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: &FFElem, mut exp: u128) -> FFElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp != 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Returns `Ok(())` when `x` is a well-formed element of this field.
    pub fn check(&self, x: &FFElem) -> Result<()> {
        if x.coeffs.len() != self.n || x.coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::invalid("element does not belong to this field"));
        }
        Ok(())
    }

    /// All elements in increasing encoding order.
    pub fn enumerate(&self, guard: u128) -> Result<ElementRange<'_>> {
        if self.size > guard {
            return Err(Error::GuardExceeded {
                what: "field enumeration",
                needed: self.size,
                limit: guard,
            });
        }
        Ok(ElementRange::new(self, 0, self.size))
    }

    /// Parses a decimal element encoding.
    pub fn parse_element(&self, s: &str) -> Result<FFElem> {
        let enc: u128 = s
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad element encoding {s:?}")))?;
        self.from_encoding(enc)
    }
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}^{} psi={} ({})",
            self.q,
            self.n,
            self.psi_string(),
            self.psi
        )
    }
}

/// Parses a comma-separated list of residues mod q, constant term first.
pub fn parse_fq_poly(s: &str, q: u32) -> Result<FqPoly> {
    let coeffs = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .ok()
                .filter(|&c| c < q)
                .ok_or_else(|| Error::invalid(format!("bad residue {t:?} mod {q}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FqPoly::new(coeffs, q))
}

/// Elements whose encodings lie in a half-open range, in increasing order.
///
/// Ranges partition cleanly, so sweeps can be split across workers by
/// encoding interval.
#[derive(Clone, Debug)]
pub struct ElementRange<'a> {
    ctx: &'a FieldParams,
    next: Option<FFElem>,
    remaining: u128,
}

impl<'a> ElementRange<'a> {
    /// Elements with encodings in `[start, end)`; `end` is clamped to `q^n`.
    pub fn new(ctx: &'a FieldParams, start: u128, end: u128) -> Self {
        let end = end.min(ctx.size);
        let remaining = end.saturating_sub(start);
        let next = (remaining > 0).then(|| ctx.from_encoding(start).expect("start < end <= size"));
        ElementRange {
            ctx,
            next,
            remaining,
        }
    }
}

impl Iterator for ElementRange<'_> {
    type Item = FFElem;

    fn next(&mut self) -> Option<FFElem> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut succ = cur.clone();
            for c in succ.coeffs.iter_mut() {
                *c += 1;
                if *c < self.ctx.q {
                    break;
                }
                *c = 0;
            }
            self.next = Some(succ);
        }
        Some(cur)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Inverse of a nonzero residue mod a prime q.
pub fn inv_base(a: u32, q: u32) -> Result<u32> {
    if a.is_multiple_of(q) {
        return Err(Error::ZeroInverse);
    }
    Ok(inv_mod(a % q, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f16() -> FieldParams {
        FieldParams::new(2, 4).unwrap()
    }

    fn e(ctx: &FieldParams, enc: u128) -> FFElem {
        ctx.from_encoding(enc).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(find_irreducible(2, 1).unwrap().encoding(2), Some(2));
        assert_eq!(find_irreducible(2, 4).unwrap().encoding(2), Some(19));
        assert_eq!(find_irreducible(3, 2).unwrap().encoding(3), Some(10));
        assert_eq!(f16().psi_string(), "1,1,0,0,1");
    }

    #[test]
    fn canonical_modulus_is_smallest() {
        // Independent oracle: trial division by every monic of degree <= n/2.
        for (q, n) in [(2u32, 4usize), (2, 6), (3, 3), (5, 2)] {
            let size = (q as u128).pow(n as u32);
            let first = (0..size)
                .map(|low| FqPoly::from_encoding(size + low, q))
                .find(|f| {
                    (1..=n / 2).all(|d| {
                        let b = (q as u128).pow(d as u32);
                        (0..b).all(|l| {
                            !f.rem(&FqPoly::from_encoding(b + l, q), q)
                                .unwrap()
                                .is_zero()
                        })
                    })
                })
                .unwrap();
            assert_eq!(find_irreducible(q, n).unwrap(), first);
        }
    }

    #[test]
    fn parameter_bounds() {
        assert!(FieldParams::new(4, 2).is_err());
        assert!(FieldParams::new(2, 0).is_err());
        assert!(FieldParams::new(2, 121).is_err());
        assert!(FieldParams::new(65537, 1).is_err());
        assert!(FieldParams::new(3, 76).is_err()); // 3^76 > 2^120
        assert!(FieldParams::with_modulus(2, FqPoly::new(vec![1, 0, 1], 2)).is_err());
        assert!(FieldParams::with_modulus(2, FqPoly::new(vec![1, 1, 1], 2)).is_ok());
    }

    #[test]
    fn large_modulus_is_found() {
        let ctx = FieldParams::new(2, 120).unwrap();
        assert_eq!(ctx.group_order(), (1u128 << 120) - 1);
        let x = ctx.alpha();
        assert_eq!(ctx.pow(&x, ctx.size()), x);
    }

    #[test]
    fn f16_examples() {
        let ctx = f16();
        assert_eq!(ctx.mul(&e(&ctx, 2), &e(&ctx, 8)), e(&ctx, 3));
        assert_eq!(ctx.inv(&e(&ctx, 2)).unwrap(), e(&ctx, 9));
        assert_eq!(ctx.pow(&e(&ctx, 2), 15), ctx.one());
        assert_eq!(ctx.inv(&ctx.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn enumeration_order() {
        let ctx = FieldParams::new(2, 2).unwrap();
        let encs: Vec<u128> = ctx.enumerate(DEFAULT_ENUM_GUARD).unwrap().map(|x| ctx.encode(&x)).collect();
        assert_eq!(encs, vec![0, 1, 2, 3]);
        let ctx = FieldParams::new(3, 1).unwrap();
        assert_eq!(ctx.enumerate(DEFAULT_ENUM_GUARD).unwrap().count(), 3);
        let ctx = f16();
        let all: Vec<FFElem> = ctx.enumerate(DEFAULT_ENUM_GUARD).unwrap().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(ctx.encode(&all[0]), 0);
        assert_eq!(ctx.encode(&all[15]), 15);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            ctx.enumerate(8),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn mul_matches_polynomial_reduction() {
        let ctx = FieldParams::new(3, 5).unwrap();
        for a in (0..243).step_by(7) {
            for b in (0..243).step_by(11) {
                let (x, y) = (e(&ctx, a), e(&ctx, b));
                let via_poly = ctx.from_poly(&ctx.to_poly(&x).mul(&ctx.to_poly(&y), 3));
                assert_eq!(ctx.mul(&x, &y), via_poly);
            }
        }
    }

    #[test]
    fn binary_fast_path_matches_coefficient_path() {
        let ctx = FieldParams::new(2, 8).unwrap();
        assert!(ctx.is_small_binary());
        for a in 0..256 {
            for b in 0..256 {
                let (x, y) = (e(&ctx, a), e(&ctx, b));
                assert_eq!(ctx.mul(&x, &y), ctx.mul_coeffs(&x, &y));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [32, 61, 64] {
            let ctx = FieldParams::new(2, n).unwrap();
            for _ in 0..1000 {
                let (x, y) = (e(&ctx, rng.random_range(0..ctx.size())), e(&ctx, rng.random_range(0..ctx.size())));
                let via_poly = ctx.from_poly(&ctx.to_poly(&x).mul(&ctx.to_poly(&y), 2));
                assert_eq!(ctx.mul(&x, &y), via_poly);
                assert_eq!(ctx.mul_coeffs(&x, &y), via_poly);
            }
        }
        assert!(FieldParams::new(2, 64).unwrap().is_small_binary());
        assert!(!FieldParams::new(2, 65).unwrap().is_small_binary());
        assert!(!FieldParams::new(3, 5).unwrap().is_small_binary());
    }

    #[test]
    fn frobenius_fixed_points() {
        for (q, n) in [(2u32, 12usize), (3, 7), (5, 4)] {
            let ctx = FieldParams::new(q, n).unwrap();
            for x in ctx.enumerate(1 << 12).unwrap() {
                assert_eq!(ctx.pow(&x, ctx.size()), x);
            }
        }
    }

    #[test]
    fn parses() {
        let ctx = f16();
        assert_eq!(ctx.parse_element(" 9 ").unwrap(), e(&ctx, 9));
        assert!(ctx.parse_element("16").is_err());
        assert_eq!(parse_fq_poly("1,1,0,0,1", 2).unwrap(), *ctx.psi());
        assert!(parse_fq_poly("1,2", 2).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn encoding_round_trip(enc in 0u128..(1 << 16)) {
                let ctx = FieldParams::new(2, 16).unwrap();
                prop_assert_eq!(ctx.encode(&ctx.from_encoding(enc).unwrap()), enc);
            }

            #[test]
            fn field_axioms(a in 0u128..6561, b in 0u128..6561, c in 0u128..6561) {
                let ctx = FieldParams::new(3, 8).unwrap();
                let (a, b, c) = (e(&ctx, a), e(&ctx, b), e(&ctx, c));
                prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
                prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
                prop_assert_eq!(
                    ctx.mul(&a, &ctx.add(&b, &c)),
                    ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
                );
                prop_assert_eq!(ctx.add(&a, &ctx.neg(&a)), ctx.zero());
                if !a.is_zero() {
                    prop_assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
                }
            }
        }
    }
}
