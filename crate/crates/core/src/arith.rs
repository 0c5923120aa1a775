//! Integer arithmetic on `u128`: modular multiplication, primality, and the
//! factorization of group orders up to 2^120.
//!
//! Factoring is trial division up to 10^6 followed by Brent's variant of
//! Pollard rho (deterministic seeds) on the remaining cofactor. Every prime
//! reported is certified: below ~3.3e24 by Miller-Rabin with the first
//! thirteen prime bases (a proven deterministic set in that range), above by
//! a Lucas certificate built from the factorization of `p - 1`.

use crate::error::{Error, Result};

const TRIAL_LIMIT: u128 = 1_000_000;
/// Miller-Rabin with bases 2..=41 is exact below this bound.
const MR_DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const RHO_ITERATIONS: u64 = 1 << 26;
const RHO_SEEDS: u128 = 24;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow, which cannot happen for divisors
/// of a common group order.
pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow")
}

pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Full 256-bit product as `(hi, lo)`.
fn widening_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let ll = a_lo * b_lo;
    let lh = a_lo * b_hi;
    let hl = a_hi * b_lo;
    let hh = a_hi * b_hi;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let lo = (ll & MASK) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    // a, b < n <= 2^127 so the sum cannot wrap.
    let s = a + b;
    if s >= n {
        s - n
    } else {
        s
    }
}

/// `a * b mod n` for `a, b < n`, `n < 2^127`.
pub fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a * b) % n;
    }
    let (mut a, mut b) = (a, b);
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, n);
        }
        a = add_mod(a, a, n);
        b >>= 1;
    }
    acc
}

pub fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    if n == 1 {
        return 0;
    }
    base %= n;
    let mut acc = 1;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Montgomery form modulo an odd `n < 2^127`, used on the rho hot path.
struct Montgomery {
    n: u128,
    neg_inv: u128,
}

impl Montgomery {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1);
        // Newton iteration for n^-1 mod 2^128; each step doubles the correct bits.
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        Montgomery {
            n,
            neg_inv: inv.wrapping_neg(),
        }
    }

    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.neg_inv);
        let (mh, ml) = widening_mul(m, self.n);
        let (_, carry) = lo.overflowing_add(ml);
        let t = hi + mh + carry as u128;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = widening_mul(a, b);
        self.redc(hi, lo)
    }
}

fn miller_rabin(n: u128, bases: &[u128]) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in bases {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test; exact below `MR_DETERMINISTIC_BOUND`.
pub fn is_probable_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    miller_rabin(n, &MR_BASES)
}

/// Exact primality test for any `n < 2^127`.
///
/// Fails only when a large candidate's `n - 1` cannot be factored, in which
/// case no certificate can be produced.
pub fn is_prime(n: u128) -> Result<bool> {
    if !is_probable_prime(n) {
        return Ok(false);
    }
    if n < MR_DETERMINISTIC_BOUND {
        return Ok(true);
    }
    lucas_certificate(n)
}

/// Lucas test: n is prime iff some witness has order exactly n - 1.
/// Different witnesses per prime factor are allowed (Brillhart-Lehmer-Selfridge).
fn lucas_certificate(n: u128) -> Result<bool> {
    let factors = factor(n - 1)?;
    for &(l, _) in &factors {
        let mut found = false;
        for a in 2u128..500 {
            if pow_mod(a, n - 1, n) != 1 {
                return Ok(false);
            }
            if pow_mod(a, (n - 1) / l, n) != 1 {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::FactorizationFailed(n));
        }
    }
    Ok(true)
}

/// Deterministic primality for small integers (field characteristics).
pub fn is_prime_u64(n: u64) -> bool {
    // Below the MR bound the answer is exact.
    is_probable_prime(n as u128)
}

fn rho_brent(n: u128, c: u128) -> Option<u128> {
    let mont = Montgomery::new(n);
    // Values live in Montgomery form; the constant offset need not be converted
    // since any fixed c gives a valid pseudo-random map.
    let step = |x: u128| {
        let y = mont.mul(x, x);
        let s = y + c;
        if s >= n {
            s - n
        } else {
            s
        }
    };
    let mut y = 2 % n;
    let mut r: u64 = 1;
    let mut q: u128 = 1;
    let mut x = y;
    let mut ys = y;
    let mut g: u128 = 1;
    let mut iterations: u64 = 0;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                let diff = x.abs_diff(y);
                q = mont.mul(q, diff);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        iterations += r;
        if iterations > RHO_ITERATIONS {
            return None;
        }
        r *= 2;
    }
    if g == n {
        // Backtrack one step at a time from the last saved point.
        loop {
            ys = step(ys);
            let diff = x.abs_diff(ys);
            g = gcd(diff, n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_cofactor(n: u128, out: &mut Vec<u128>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    // After trial division every prime factor exceeds TRIAL_LIMIT.
    if n < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(n)? {
        out.push(n);
        return Ok(());
    }
    for c in 1..=RHO_SEEDS {
        if let Some(d) = rho_brent(n, c) {
            split_cofactor(d, out)?;
            split_cofactor(n / d, out)?;
            return Ok(());
        }
    }
    Err(Error::FactorizationFailed(n))
}

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
pub fn factor(n: u128) -> Result<Vec<(u128, u32)>> {
    if n == 0 {
        return Err(Error::invalid("cannot factor 0"));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    let mut p: u128 = 2;
    while p <= TRIAL_LIMIT && p * p <= rest {
        while rest.is_multiple_of(p) {
            primes.push(p);
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if rest <= TRIAL_LIMIT * TRIAL_LIMIT && p * p > rest {
            primes.push(rest);
        } else {
            split_cofactor(rest, &mut primes)?;
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u128, u32)> = Vec::new();
    for prime in primes {
        match out.last_mut() {
            Some((last, e)) if *last == prime => *e += 1,
            _ => out.push((prime, 1)),
        }
    }
    Ok(out)
}

/// All divisors of the number with the given factorization, sorted ascending.
pub fn divisors(factors: &[(u128, u32)]) -> Vec<u128> {
    let mut divs = vec![1u128];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Möbius function for small arguments.
pub fn mobius(mut k: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}
