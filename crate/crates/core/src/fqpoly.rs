//! Dense polynomials over a prime field F_q, coefficients stored constant term first.
//!
//! The modulus `q` is passed to each operation rather than stored, so the
//! same type serves as the extension modulus, as extension elements before
//! reduction, and as numerators/denominators in F_q(T).

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqPoly {
    coeffs: Vec<u32>,
}

pub(crate) fn inv_mod(a: u32, q: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(q));
    arith::pow_mod(a as u128, q as u128 - 2, q as u128) as u32
}

impl FqPoly {
    pub fn zero() -> Self {
        FqPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FqPoly { coeffs: vec![1] }
    }

    /// The indeterminate T.
    pub fn t() -> Self {
        FqPoly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: u32, q: u32) -> Self {
        Self::new(vec![c], q)
    }

    /// Builds a polynomial, reducing coefficients mod q and trimming trailing zeros.
    pub fn new(mut coeffs: Vec<u32>, q: u32) -> Self {
        for c in coeffs.iter_mut() {
            *c %= q;
        }
        let mut p = FqPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for height computations.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Little-endian base-q encoding, or `None` if it overflows `u128`.
    pub fn encoding(&self, q: u32) -> Option<u128> {
        let mut acc: u128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(q as u128)?.checked_add(c as u128)?;
        }
        Some(acc)
    }

    pub fn from_encoding(mut enc: u128, q: u32) -> Self {
        let mut coeffs = Vec::new();
        while enc != 0 {
            coeffs.push((enc % q as u128) as u32);
            enc /= q as u128;
        }
        FqPoly { coeffs }
    }

    pub fn add(&self, other: &Self, q: u32) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((a as u64 + b as u64) % q as u64) as u32
            })
            .collect();
        let mut p = FqPoly { coeffs };
        p.trim();
        p
    }

    pub fn neg(&self, q: u32) -> Self {
        FqPoly {
            coeffs: self.coeffs.iter().map(|&c| (q - c) % q).collect(),
        }
    }

    pub fn sub(&self, other: &Self, q: u32) -> Self {
        self.add(&other.neg(q), q)
    }

    pub fn scale(&self, s: u32, q: u32) -> Self {
        let s = s % q;
        let mut p = FqPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| ((c as u64 * s as u64) % q as u64) as u32)
                .collect(),
        };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self, q: u32) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let q64 = q as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % q64;
            }
        }
        let mut p = FqPoly {
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
        };
        p.trim();
        p
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self, q: u32) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let q64 = q as u64;
        let inv_lead = inv_mod(divisor.lead(), q) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] % q64;
            if c == 0 {
                continue;
            }
            let factor = c * inv_lead % q64;
            quot[i - dd] = factor as u32;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = (rem[k] + (q64 - factor) * b as u64) % q64;
            }
        }
        rem.truncate(dd);
        let mut r = FqPoly {
            coeffs: rem.into_iter().map(|c| (c % q64) as u32).collect(),
        };
        r.trim();
        let mut qt = FqPoly { coeffs: quot };
        qt.trim();
        Ok((qt, r))
    }

    pub fn rem(&self, divisor: &Self, q: u32) -> Result<Self> {
        Ok(self.div_rem(divisor, q)?.1)
    }

    pub fn monic(&self, q: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(inv_mod(self.lead(), q), q)
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is 0.
    pub fn gcd(&self, other: &Self, q: u32) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, q).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(q)
    }

    /// `(g, s)` with `g = gcd(self, modulus)` monic and `s * self = g mod modulus`.
    pub fn ext_gcd(&self, modulus: &Self, q: u32) -> (Self, Self) {
        let (mut r0, mut r1) = (modulus.clone(), self.clone());
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1, q).expect("nonzero divisor");
            let s = s0.sub(&qt.mul(&s1, q), q);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.is_zero() {
            return (r0, s0);
        }
        let inv = inv_mod(r0.lead(), q);
        (r0.scale(inv, q), s0.scale(inv, q))
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self, q: u32) -> Result<Self> {
        self.mul(other, q).rem(modulus, q)
    }

    pub fn pow_mod(&self, mut exp: u128, modulus: &Self, q: u32) -> Result<Self> {
        let mut base = self.rem(modulus, q)?;
        let mut acc = Self::one().rem(modulus, q)?;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus, q)?;
            }
            base = base.mul_mod(&base, modulus, q)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32, q: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self, q);
        }
        acc
    }

    /// Rabin's test: T^{q^n} = T mod self, and gcd(T^{q^{n/l}} - T, self) = 1
    /// for every prime l dividing n = deg self.
    pub fn is_irreducible(&self, q: u32) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let t = Self::t();
        // frob[k] = T^{q^k} mod self for k = 0..=n
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(t.rem(self, q).expect("nonzero"));
        for k in 1..=n {
            let next = frob[k - 1].pow_mod(q as u128, self, q).expect("nonzero");
            frob.push(next);
        }
        if frob[n] != frob[0] {
            return false;
        }
        let factors = arith::factor(n as u128).expect("small degree");
        factors.iter().all(|&(l, _)| {
            let k = n / l as usize;
            let diff = frob[k].sub(&t, q);
            diff.gcd(self, q).degree() == Some(0)
        })
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join("+")
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("T"))
    }
}
