//! Power oracles x ↦ f(x)^e with query accounting, and ground-truth checks of
//! whether two such oracles can be told apart at all.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{ElementRange, FFElem, FieldParams};
use crate::polyrat::Poly;

/// Largest field a full indistinguishability scan will sweep.
pub const DEFAULT_SCAN_GUARD: u128 = 1 << 22;

/// The query interface a tester sees: answers and a call counter, nothing else.
pub trait Oracle: Sync {
    fn query(&self, x: &FFElem) -> FFElem;

    /// Total number of queries answered so far.
    fn queries(&self) -> u64;
}

/// D_{e,f}: returns f(x)^e for a hidden monic f and a public e | q^n - 1.
#[derive(Debug)]
pub struct PowerOracle<'a> {
    ctx: &'a FieldParams,
    hidden: Poly,
    e: u128,
    queries: AtomicU64,
}

fn check_exponent(ctx: &FieldParams, e: u128) -> Result<()> {
    if e == 0 || !ctx.group_order().is_multiple_of(e) {
        return Err(Error::invalid(format!(
            "exponent e = {e} must divide q^n - 1 = {}",
            ctx.group_order()
        )));
    }
    Ok(())
}

impl<'a> PowerOracle<'a> {
    pub fn new(ctx: &'a FieldParams, hidden: Poly, e: u128) -> Result<Self> {
        check_exponent(ctx, e)?;
        if !hidden.is_monic(ctx) {
            return Err(Error::invalid("hidden polynomial must be monic"));
        }
        Ok(PowerOracle {
            ctx,
            hidden,
            e,
            queries: AtomicU64::new(0),
        })
    }

    pub fn e(&self) -> u128 {
        self.e
    }
}

impl Oracle for PowerOracle<'_> {
    fn query(&self, x: &FFElem) -> FFElem {
        self.queries.fetch_add(1, Ordering::Relaxed);
        self.ctx.pow(&self.hidden.eval(x, self.ctx), self.e)
    }

    fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMethod {
    /// Decided from degrees alone: (q^n - 1)/e > d.
    DegreeArgument,
    FullScan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub indistinguishable: bool,
    pub method: VerdictMethod,
    /// Number of points compared when the verdict came from a scan.
    pub scan_size: Option<u128>,
}

/// Whether f(x)^e = g(x)^e at every x ∈ F_{q^n}.
pub fn indistinguishable_scan(
    ctx: &FieldParams,
    f: &Poly,
    g: &Poly,
    e: u128,
    guard: u128,
) -> Result<EquivalenceVerdict> {
    check_exponent(ctx, e)?;
    if ctx.size() > guard {
        return Err(Error::GuardExceeded {
            what: "indistinguishability scan",
            needed: ctx.size(),
            limit: guard,
        });
    }
    const CHUNK: u128 = 1 << 10;
    let chunks: Vec<u128> = (0..ctx.size().div_ceil(CHUNK)).collect();
    let same = chunks.par_iter().all(|&k| {
        ElementRange::new(ctx, k * CHUNK, (k + 1) * CHUNK).all(|x| {
            ctx.pow(&f.eval(&x, ctx), e) == ctx.pow(&g.eval(&x, ctx), e)
        })
    });
    Ok(EquivalenceVerdict {
        indistinguishable: same,
        method: VerdictMethod::FullScan,
        scan_size: Some(ctx.size()),
    })
}

/// Indistinguishability of D_{e,f} and D_{e,g} for monic f, g of equal degree d.
///
/// With K = (q^n - 1)/e > d we have e·d < q^n, so f(x)^e = g(x)^e on all of
/// F_{q^n} forces f^e = g^e as polynomials, hence f/g is an e-th root of
/// unity in F(X), a constant, and monicity gives f = g. Otherwise the
/// oracles are compared exhaustively.
pub fn equivalence_check(
    ctx: &FieldParams,
    f: &Poly,
    g: &Poly,
    e: u128,
    scan_guard: u128,
) -> Result<EquivalenceVerdict> {
    check_exponent(ctx, e)?;
    if !f.is_monic(ctx) || !g.is_monic(ctx) || f.degree() != g.degree() {
        return Err(Error::invalid("f and g must be monic of equal degree"));
    }
    let d = f.degree().expect("monic is nonzero") as u128;
    if ctx.group_order() / e > d {
        return Ok(EquivalenceVerdict {
            indistinguishable: f == g,
            method: VerdictMethod::DegreeArgument,
            scan_size: None,
        });
    }
    indistinguishable_scan(ctx, f, g, e, scan_guard)
}

/// All divisors e of q^n - 1, ascending.
pub fn admissible_exponents(ctx: &FieldParams) -> Result<Vec<u128>> {
    Ok(arith::divisors(&arith::factor(ctx.group_order())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::random_monic_with;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f16() -> FieldParams {
        FieldParams::new(2, 4).unwrap()
    }

    fn poly(ctx: &FieldParams, encs: &[u128]) -> Poly {
        Poly::from_encodings(ctx, encs).unwrap()
    }

    #[test]
    fn query_examples() {
        let ctx = f16();
        let a = ctx.from_encoding(2).unwrap();
        let o = PowerOracle::new(&ctx, poly(&ctx, &[1, 1]), 15).unwrap();
        assert_eq!(o.query(&ctx.zero()), ctx.one());
        let o = PowerOracle::new(&ctx, poly(&ctx, &[0, 1]), 3).unwrap();
        assert_eq!(o.query(&a), ctx.from_encoding(8).unwrap());
        let o = PowerOracle::new(&ctx, poly(&ctx, &[0, 1]), 15).unwrap();
        assert_eq!(o.query(&a), ctx.one());
        assert_eq!(o.queries(), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        let ctx = f16();
        assert!(PowerOracle::new(&ctx, poly(&ctx, &[0, 1]), 4).is_err());
        assert!(PowerOracle::new(&ctx, poly(&ctx, &[0, 1]), 0).is_err());
        assert!(PowerOracle::new(&ctx, poly(&ctx, &[0, 3]), 5).is_err());
    }

    #[test]
    fn counter_under_concurrency() {
        let ctx = FieldParams::new(2, 10).unwrap();
        let o = PowerOracle::new(&ctx, poly(&ctx, &[5, 1]), 3).unwrap();
        let points: Vec<_> = ctx.enumerate(1 << 10).unwrap().collect();
        points.par_iter().for_each(|x| {
            o.query(x);
        });
        std::thread::scope(|s| {
            for chunk in points.chunks(100) {
                let o = &o;
                s.spawn(move || chunk.iter().for_each(|x| drop(o.query(x))));
            }
        });
        assert_eq!(o.queries(), 2048);
    }

    #[test]
    fn scan_examples() {
        let ctx = f16();
        let x = poly(&ctx, &[0, 1]);
        let x1 = poly(&ctx, &[1, 1]);
        let v = indistinguishable_scan(&ctx, &x, &x, 15, DEFAULT_SCAN_GUARD).unwrap();
        assert!(v.indistinguishable);
        assert_eq!(v.scan_size, Some(16));
        assert!(!indistinguishable_scan(&ctx, &x, &x1, 15, DEFAULT_SCAN_GUARD).unwrap().indistinguishable);
        for c in 1..16 {
            let g = poly(&ctx, &[c, 1]);
            assert!(!indistinguishable_scan(&ctx, &x, &g, 15, DEFAULT_SCAN_GUARD).unwrap().indistinguishable);
        }
        assert!(matches!(
            indistinguishable_scan(&ctx, &x, &x1, 15, 8),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn shortcut_examples() {
        let ctx = FieldParams::new(2, 12).unwrap();
        let f = poly(&ctx, &[3, 0, 1]);
        let g = poly(&ctx, &[5, 1, 1]);
        let v = equivalence_check(&ctx, &f, &g, 13, DEFAULT_SCAN_GUARD).unwrap();
        assert_eq!(v.method, VerdictMethod::DegreeArgument);
        assert!(!v.indistinguishable);
        assert!(equivalence_check(&ctx, &f, &f, 13, DEFAULT_SCAN_GUARD).unwrap().indistinguishable);
        let ctx = f16();
        let v = equivalence_check(&ctx, &poly(&ctx, &[0, 1]), &poly(&ctx, &[1, 1]), 15, DEFAULT_SCAN_GUARD)
            .unwrap();
        assert_eq!(v.method, VerdictMethod::FullScan);
    }

    #[test]
    fn same_roots_are_indistinguishable_at_k_one() {
        // K = 1: f(x)^e is 1 off the roots and 0 on them.
        let ctx = FieldParams::new(2, 12).unwrap();
        let a = Poly::linear(&ctx, ctx.from_encoding(9).unwrap());
        let b = Poly::linear(&ctx, ctx.from_encoding(100).unwrap());
        let f = a.pow(2, &ctx).mul(&b, &ctx);
        let g = a.mul(&b.pow(2, &ctx), &ctx);
        let v = equivalence_check(&ctx, &f, &g, 4095, DEFAULT_SCAN_GUARD).unwrap();
        assert_eq!(v.method, VerdictMethod::FullScan);
        assert!(v.indistinguishable);
        assert!(!equivalence_check(&ctx, &f, &g, 1365, DEFAULT_SCAN_GUARD).unwrap().indistinguishable);
    }

    #[test]
    fn shortcut_agrees_with_scan() {
        let ctx = FieldParams::new(2, 8).unwrap();
        let exps = admissible_exponents(&ctx).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let d = rng.random_range(1..=3);
            let e = exps[rng.random_range(0..exps.len())];
            let f = random_monic_with(&ctx, d, &mut rng);
            let g = if rng.random_bool(0.3) { f.clone() } else { random_monic_with(&ctx, d, &mut rng) };
            let shortcut = equivalence_check(&ctx, &f, &g, e, DEFAULT_SCAN_GUARD).unwrap();
            let scan = indistinguishable_scan(&ctx, &f, &g, e, DEFAULT_SCAN_GUARD).unwrap();
            assert_eq!(shortcut.indistinguishable, scan.indistinguishable);
        }
    }
}
