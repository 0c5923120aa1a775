//! Places, divisors and height-bounded rational functions of the rational
//! function field K = F_q(T).
//!
//! The places of K are the monic irreducible polynomials of F_q[T] plus the
//! place at infinity, which has degree 1. For f = a/b in lowest terms the
//! order at a finite place P is the multiplicity of P in a minus that in b,
//! and the order at infinity is deg b - deg a.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::fqpoly::{inv_mod, FqPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// A monic irreducible polynomial of F_q[T].
    Finite(FqPoly),
    Infinity,
}

impl Place {
    pub fn finite(p: FqPoly, q: u32) -> Result<Self> {
        if !p.is_monic() || !p.is_irreducible(q) {
            return Err(Error::invalid(format!("{p} is not a monic irreducible over F_{q}")));
        }
        Ok(Place::Finite(p))
    }

    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(p) => p.degree().expect("irreducible is nonzero") as u32,
            Place::Infinity => 1,
        }
    }
}

/// Finite places by degree then coefficients (highest first); infinity last.
impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, _) => Ordering::Greater,
            (_, Place::Infinity) => Ordering::Less,
            (Place::Finite(a), Place::Finite(b)) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev())),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// All monic irreducible polynomials of degree `k` over F_q, by encoding.
pub fn monic_irreducibles(q: u32, k: usize) -> Vec<FqPoly> {
    let base = arith::checked_pow(q as u128, k as u32).expect("small degree");
    (0..base)
        .map(|low| FqPoly::from_encoding(base + low, q))
        .filter(|p| p.is_irreducible(q))
        .collect()
}

/// Number of places of F_q(T) of degree k: the necklace count
/// (1/k) Σ_{j | k} μ(j) q^{k/j}, plus the infinite place when k = 1.
pub fn places_of_degree(q: u32, k: u32) -> Result<u128> {
    if k == 0 {
        return Ok(0);
    }
    let mut total: i128 = 0;
    for j in 1..=k {
        if !k.is_multiple_of(j) {
            continue;
        }
        let term = arith::checked_pow(q as u128, k / j)
            .and_then(|t| i128::try_from(t).ok())
            .ok_or_else(|| Error::invalid("place count overflows"))?;
        total += arith::mobius(j as u64) as i128 * term;
    }
    let finite = (total / k as i128) as u128;
    Ok(finite + u128::from(k == 1))
}

/// A divisor Σ n_P P with finitely many nonzero n_P.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFDivisor {
    support: BTreeMap<Place, i64>,
}

impl FFDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Place, i64)>>(terms: I) -> Self {
        let mut d = Self::zero();
        for (p, n) in terms {
            d.add_term(p, n);
        }
        d
    }

    pub fn add_term(&mut self, place: Place, n: i64) {
        let entry = self.support.entry(place.clone()).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.support.remove(&place);
        }
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.support.get(place).copied().unwrap_or(0)
    }

    pub fn support(&self) -> &BTreeMap<Place, i64> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// deg D = Σ n_P deg P.
    pub fn degree(&self) -> i64 {
        self.support
            .iter()
            .map(|(p, &n)| n * p.degree() as i64)
            .sum()
    }

    /// max |n_P|, 0 for the zero divisor.
    pub fn height(&self) -> i64 {
        self.support.values().map(|n| n.abs()).max().unwrap_or(0)
    }

    pub fn is_effective(&self) -> bool {
        self.support.values().all(|&n| n > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, &n) in &other.support {
            out.add_term(p.clone(), n);
        }
        out
    }

    pub fn neg(&self) -> Self {
        FFDivisor {
            support: self.support.iter().map(|(p, &n)| (p.clone(), -n)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Componentwise `self <= other`.
    pub fn is_le(&self, other: &Self) -> bool {
        self.support
            .keys()
            .chain(other.support.keys())
            .all(|p| self.multiplicity(p) <= other.multiplicity(p))
    }

    /// D_0 = Σ_{n_P > 0} n_P P.
    pub fn zero_part(&self) -> Self {
        FFDivisor {
            support: self
                .support
                .iter()
                .filter(|(_, &n)| n > 0)
                .map(|(p, &n)| (p.clone(), n))
                .collect(),
        }
    }

    /// D_∞ = -Σ_{n_P < 0} n_P P, so that D = D_0 - D_∞.
    pub fn pole_part(&self) -> Self {
        FFDivisor {
            support: self
                .support
                .iter()
                .filter(|(_, &n)| n < 0)
                .map(|(p, &n)| (p.clone(), -n))
                .collect(),
        }
    }

    /// Componentwise minimum, absent places counting as 0.
    pub fn meet(&self, other: &Self) -> Self {
        let places: BTreeSet<&Place> = self.support.keys().chain(other.support.keys()).collect();
        Self::from_terms(
            places
                .into_iter()
                .map(|p| (p.clone(), self.multiplicity(p).min(other.multiplicity(p)))),
        )
    }
}

impl fmt::Display for FFDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .support
            .iter()
            .map(|(p, &n)| if n == 1 { p.to_string() } else { format!("{n}{p}") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// (D_0, D_∞, min{D, E}).
pub fn parts_and_min(d: &FFDivisor, e: &FFDivisor) -> (FFDivisor, FFDivisor, FFDivisor) {
    (d.zero_part(), d.pole_part(), d.meet(e))
}

/// τ(D) = #{E : 0 <= E <= D} = Π (n_P + 1) for effective D.
pub fn tau(d: &FFDivisor) -> Result<u128> {
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(d.support.values().map(|&n| n as u128 + 1).product())
}

/// An element of F_q(T) in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFnQ {
    num: FqPoly,
    den: FqPoly,
    q: u32,
}

impl RatFnQ {
    pub fn new(num: FqPoly, den: FqPoly, q: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RatFnQ {
                num,
                den: FqPoly::one(),
                q,
            });
        }
        let g = num.gcd(&den, q);
        let num = num.div_rem(&g, q)?.0;
        let den = den.div_rem(&g, q)?.0;
        let inv = inv_mod(den.lead(), q);
        Ok(RatFnQ {
            num: num.scale(inv, q),
            den: den.scale(inv, q),
            q,
        })
    }

    pub fn polynomial(p: FqPoly, q: u32) -> Self {
        Self::new(p, FqPoly::one(), q).expect("denominator is one")
    }

    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// max(deg num, deg den): the T-degree of the minimal polynomial den·X - num.
    pub fn height(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.num, self.q),
            self.den.mul(&other.den, self.q),
            self.q,
        )
        .expect("product of nonzero denominators")
    }
}

impl fmt::Display for RatFnQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == FqPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Factors a monic polynomial by trial division against monic irreducibles
/// of increasing degree.
fn factor_monic(p: &FqPoly, q: u32) -> Vec<(FqPoly, i64)> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while rest.degree().is_some_and(|d| d >= 2 * k) {
        for cand in monic_irreducibles(q, k) {
            let mut mult = 0;
            loop {
                let (quot, rem) = rest.div_rem(&cand, q).expect("nonzero");
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        k += 1;
    }
    // Whatever is left has no factor of degree <= deg/2.
    if rest.degree().is_some_and(|d| d >= 1) {
        out.push((rest, 1));
    }
    out
}

/// The principal divisor (f) = Σ ord_P(f) P.
pub fn principal_divisor(f: &RatFnQ) -> Result<FFDivisor> {
    if f.is_zero() {
        return Err(Error::invalid("the zero function has no divisor"));
    }
    let q = f.q;
    let mut div = FFDivisor::zero();
    for (p, n) in factor_monic(&f.num.monic(q), q) {
        div.add_term(Place::Finite(p), n);
    }
    for (p, n) in factor_monic(&f.den, q) {
        div.add_term(Place::Finite(p), -n);
    }
    let ord_inf = f.den.degree_or_zero() as i64 - f.num.degree_or_zero() as i64;
    div.add_term(Place::Infinity, ord_inf);
    Ok(div)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PoleBound {
    pub height: usize,
    /// deg (f)_∞
    pub pole_degree: i64,
    /// deg (f)_∞ <= 2h
    pub bound_ok: bool,
    /// deg (f)_∞ = h, which holds exactly over F_q(T)
    pub identity_holds: bool,
}

pub fn height_and_pole_bound(f: &RatFnQ) -> Result<PoleBound> {
    let div = principal_divisor(f)?;
    let h = f.height();
    let pole_degree = div.pole_part().degree();
    Ok(PoleBound {
        height: h,
        pole_degree,
        bound_ok: pole_degree <= 2 * h as i64,
        identity_holds: pole_degree == h as i64,
    })
}

/// Effective-divisor counts by degree, with the q^{2r} bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorCounts {
    pub q: u32,
    /// Number of effective divisors of degree exactly r, for r = 0..=max.
    pub exact: Vec<u128>,
    /// Number of degree at most r.
    pub cumulative: Vec<u128>,
    /// q^{2r}.
    pub bound: Vec<u128>,
}

pub const MAX_COUNT_DEGREE: u32 = 12;

fn binomial(n: u128, k: u128) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Counts effective divisors of F_q(T) by degree via the generating function
/// Π_P (1 - x^{deg P})^{-1}, grouping places by degree.
pub fn count_effective_divisors(q: u32, r: u32) -> Result<DivisorCounts> {
    if !arith::is_prime_u64(q as u64) {
        return Err(Error::invalid(format!("q = {q} is not prime")));
    }
    if r > MAX_COUNT_DEGREE {
        return Err(Error::invalid(format!(
            "degree bound r = {r} exceeds {MAX_COUNT_DEGREE}"
        )));
    }
    let overflow = || Error::invalid("divisor count overflows u128");
    let r = r as usize;
    let mut exact = vec![0u128; r + 1];
    exact[0] = 1;
    for k in 1..=r {
        let places = places_of_degree(q, k as u32)?;
        // Multiply by (1 - x^k)^{-N}; the coefficient of x^{jk} is C(N + j - 1, j).
        let mut next = vec![0u128; r + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            let mut acc: u128 = 0;
            for j in 0..=t / k {
                let ways = if j == 0 {
                    1
                } else {
                    binomial(places + j as u128 - 1, j as u128).ok_or_else(overflow)?
                };
                let term = ways.checked_mul(exact[t - j * k]).ok_or_else(overflow)?;
                acc = acc.checked_add(term).ok_or_else(overflow)?;
            }
            *slot = acc;
        }
        exact = next;
    }
    let mut cumulative = Vec::with_capacity(r + 1);
    let mut running: u128 = 0;
    for &c in &exact {
        running = running.checked_add(c).ok_or_else(overflow)?;
        cumulative.push(running);
    }
    let bound = (0..=r)
        .map(|i| arith::checked_pow(q as u128, 2 * i as u32).ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(DivisorCounts {
        q,
        exact,
        cumulative,
        bound,
    })
}

/// All places of degree at most `r`, in place order.
pub fn places_up_to(q: u32, r: u32) -> Vec<Place> {
    let mut out: Vec<Place> = (1..=r as usize)
        .flat_map(|k| monic_irreducibles(q, k))
        .map(Place::Finite)
        .collect();
    if r >= 1 {
        out.push(Place::Infinity);
    }
    out.sort();
    out
}

/// Explicit list of every effective divisor of degree at most `r`.
pub fn effective_divisors_up_to(q: u32, r: u32) -> Vec<FFDivisor> {
    fn rec(places: &[Place], budget: i64, cur: &mut FFDivisor, out: &mut Vec<FFDivisor>) {
        let Some((first, rest)) = places.split_first() else {
            out.push(cur.clone());
            return;
        };
        let deg = first.degree() as i64;
        let mut mult = 0;
        loop {
            rec(rest, budget - mult * deg, cur, out);
            if (mult + 1) * deg > budget {
                break;
            }
            mult += 1;
            cur.add_term(first.clone(), 1);
        }
        if mult > 0 {
            cur.add_term(first.clone(), -mult);
        }
    }
    let places = places_up_to(q, r);
    let mut out = Vec::new();
    rec(&places, r as i64, &mut FFDivisor::zero(), &mut out);
    out
}

/// The ν-fold product set of a finite subset of F_q(T).
#[derive(Clone, Debug, PartialEq)]
pub struct RatProductSet {
    pub set: BTreeSet<RatFnQ>,
    pub max_height: usize,
    /// #A^{(ν)} / (#A)^ν
    pub ratio: f64,
}

pub fn product_set_ratfns(a: &BTreeSet<RatFnQ>, nu: u32, guard: u128) -> Result<RatProductSet> {
    if nu == 0 {
        return Err(Error::invalid("product set needs ν >= 1"));
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let predicted = (a.len() as u128).saturating_pow(nu);
    if predicted > guard {
        return Err(Error::GuardExceeded {
            what: "rational-function product set",
            needed: predicted,
            limit: guard,
        });
    }
    let mut current = a.clone();
    for _ in 1..nu {
        current = current
            .iter()
            .flat_map(|x| a.iter().map(move |y| x.mul(y)))
            .collect();
    }
    let max_height = current.iter().map(RatFnQ::height).max().unwrap_or(0);
    let ratio = current.len() as f64 / (a.len() as f64).powi(nu as i32);
    Ok(RatProductSet {
        set: current,
        max_height,
        ratio,
    })
}

/// A random nonzero element with numerator and denominator degree at most `max_deg`.
pub fn random_ratfn<R: Rng + ?Sized>(q: u32, max_deg: usize, rng: &mut R) -> RatFnQ {
    let mut poly = |monic: bool| {
        let deg = rng.random_range(0..=max_deg);
        let mut c: Vec<u32> = (0..deg).map(|_| rng.random_range(0..q)).collect();
        c.push(if monic { 1 } else { rng.random_range(1..q) });
        FqPoly::new(c, q)
    };
    let num = poly(false);
    let den = poly(true);
    RatFnQ::new(num, den, q).expect("monic denominator")
}

/// A random effective divisor of degree at most `max_deg`, supported on
/// places of degree at most 3.
pub fn random_effective_divisor<R: Rng + ?Sized>(q: u32, max_deg: u32, rng: &mut R) -> FFDivisor {
    let places = places_up_to(q, 3.min(max_deg.max(1)));
    let target = rng.random_range(0..=max_deg) as i64;
    let mut d = FFDivisor::zero();
    let mut deg = 0;
    for _ in 0..64 {
        let p = &places[rng.random_range(0..places.len())];
        if deg + p.degree() as i64 <= target {
            deg += p.degree() as i64;
            d.add_term(p.clone(), 1);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(c: &[u32], q: u32) -> FqPoly {
        FqPoly::new(c.to_vec(), q)
    }

    fn fin(c: &[u32]) -> Place {
        Place::Finite(p(c, 2))
    }

    #[test]
    fn principal_divisor_examples() {
        let q = 2;
        let f = RatFnQ::new(p(&[0, 1], q), p(&[1, 1], q), q).unwrap();
        let expected = FFDivisor::from_terms([(fin(&[0, 1]), 1), (fin(&[1, 1]), -1)]);
        assert_eq!(principal_divisor(&f).unwrap(), expected);
        let t = RatFnQ::polynomial(FqPoly::t(), q);
        let expected = FFDivisor::from_terms([(fin(&[0, 1]), 1), (Place::Infinity, -1)]);
        assert_eq!(principal_divisor(&t).unwrap(), expected);
        let one = RatFnQ::polynomial(FqPoly::one(), q);
        assert!(principal_divisor(&one).unwrap().is_zero());
        let zero = RatFnQ::polynomial(FqPoly::zero(), q);
        assert!(principal_divisor(&zero).is_err());
    }

    #[test]
    fn parts_and_min_examples() {
        let (pp, qq) = (fin(&[0, 1]), fin(&[1, 1]));
        let d = FFDivisor::from_terms([(pp.clone(), 1), (qq.clone(), -1)]);
        let (d0, dinf, _) = parts_and_min(&d, &FFDivisor::zero());
        assert_eq!(d0, FFDivisor::from_terms([(pp.clone(), 1)]));
        assert_eq!(dinf, FFDivisor::from_terms([(qq.clone(), 1)]));
        assert_eq!(d0.sub(&dinf), d);
        let a = FFDivisor::from_terms([(pp.clone(), 1)]);
        assert_eq!(a.meet(&a.neg()), a.neg());
        let b = FFDivisor::from_terms([(pp.clone(), 2), (qq, 1)]);
        assert_eq!(b.meet(&a), a);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&FFDivisor::zero()).unwrap(), 1);
        let d = FFDivisor::from_terms([(fin(&[0, 1]), 2), (fin(&[1, 1]), 1)]);
        assert_eq!(tau(&d).unwrap(), 6);
        assert_eq!(tau(&d.neg()), Err(Error::NotEffective));
    }

    #[test]
    fn tau_matches_enumeration() {
        let all = effective_divisors_up_to(2, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let d = random_effective_divisor(2, 8, &mut rng);
            let count = all.iter().filter(|e| e.is_le(&d)).count() as u128;
            assert_eq!(tau(&d).unwrap(), count, "D = {d}");
        }
    }

    #[test]
    fn counting_examples() {
        let c = count_effective_divisors(2, 2).unwrap();
        assert_eq!(c.cumulative, vec![1, 4, 11]);
        assert_eq!(c.exact, vec![1, 3, 7]);
        assert_eq!(c.bound, vec![1, 4, 16]);
        assert!(count_effective_divisors(4, 2).is_err());
        assert!(count_effective_divisors(2, 13).is_err());
    }

    #[test]
    fn counting_matches_enumeration_and_bound() {
        for q in [2u32, 3] {
            let c = count_effective_divisors(q, 6).unwrap();
            for r in 0..=6 {
                assert!(c.cumulative[r] <= c.bound[r], "q={q} r={r}");
            }
            for r in 0..=4u32 {
                let n = effective_divisors_up_to(q, r).len() as u128;
                assert_eq!(c.cumulative[r as usize], n, "q={q} r={r}");
            }
        }
    }

    #[test]
    fn place_counts() {
        // Monic irreducibles over F_2 of degrees 1..6: 2, 1, 2, 3, 6, 9.
        let expected = [3u128, 1, 2, 3, 6, 9];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(places_of_degree(2, k as u32 + 1).unwrap(), e);
            let listed = monic_irreducibles(2, k + 1).len() as u128 + u128::from(k == 0);
            assert_eq!(listed, e);
        }
        assert_eq!(places_of_degree(3, 2).unwrap(), 3);
    }

    #[test]
    fn pole_bound_examples() {
        let q = 2;
        let b = height_and_pole_bound(&RatFnQ::polynomial(p(&[0, 0, 1], q), q)).unwrap();
        assert_eq!((b.height, b.pole_degree, b.bound_ok), (2, 2, true));
        let f = RatFnQ::new(p(&[1, 0, 0, 1], q), p(&[1, 1], q), q).unwrap();
        assert_eq!(f.num(), &p(&[1, 1, 1], q));
        let b = height_and_pole_bound(&f).unwrap();
        assert_eq!((b.height, b.pole_degree), (2, 2));
        let f = RatFnQ::new(FqPoly::one(), p(&[0, 1, 1], q), q).unwrap();
        let b = height_and_pole_bound(&f).unwrap();
        assert_eq!((b.height, b.pole_degree), (2, 2));
        assert!(b.identity_holds);
    }

    #[test]
    fn random_principal_divisors() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for q in [2u32, 3, 5] {
            for _ in 0..60 {
                let f = random_ratfn(q, 6, &mut rng);
                let div = principal_divisor(&f).unwrap();
                assert_eq!(div.degree(), 0, "f = {f}");
                let b = height_and_pole_bound(&f).unwrap();
                assert!(b.bound_ok && b.identity_holds);
                // Reassemble f from its finite places.
                let mut num = FqPoly::one();
                let mut den = FqPoly::one();
                for (pl, &n) in div.support() {
                    if let Place::Finite(pp) = pl {
                        let pw = pp.pow(n.unsigned_abs() as u32, q);
                        if n > 0 {
                            num = num.mul(&pw, q);
                        } else {
                            den = den.mul(&pw, q);
                        }
                    }
                }
                assert_eq!(num, f.num().monic(q));
                assert_eq!(&den, f.den());
            }
        }
    }

    #[test]
    fn product_set_examples() {
        let q = 2;
        let a: BTreeSet<_> = [
            RatFnQ::polynomial(p(&[0, 1], q), q),
            RatFnQ::polynomial(p(&[1, 1], q), q),
        ]
        .into();
        let ps = product_set_ratfns(&a, 2, 1 << 20).unwrap();
        let expected: BTreeSet<_> = [&[0u32, 0, 1][..], &[0, 1, 1], &[1, 0, 1]]
            .iter()
            .map(|c| RatFnQ::polynomial(p(c, q), q))
            .collect();
        assert_eq!(ps.set, expected);
        assert_eq!(ps.max_height, 2);
        assert!((ps.ratio - 0.75).abs() < 1e-12);
        let one: BTreeSet<_> = [RatFnQ::polynomial(FqPoly::one(), q)].into();
        assert_eq!(product_set_ratfns(&one, 3, 1 << 20).unwrap().set, one);
    }

    #[test]
    fn product_set_size_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for nu in 1..=3 {
            let a: BTreeSet<_> = (0..12).map(|_| random_ratfn(3, 3, &mut rng)).collect();
            let ps = product_set_ratfns(&a, nu, 1 << 20).unwrap();
            assert!(ps.set.len() as u128 <= (a.len() as u128).pow(nu));
            assert!(ps.ratio <= 1.0);
        }
    }
}
