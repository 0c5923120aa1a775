//! Identity testing from power oracles.
//!
//! Two testers are provided. The naive test compares the oracles on e·d + 1
//! fixed inputs. The subspace test compares them on every x ∈ V_m, with m
//! chosen from e, d and a tuning constant c:
//!
//! ```text
//! δ = log e / (n log q)
//! ν = ⌊ c^{1 + 1/(2d)} / (2δ)^{1/(2d)} ⌋      (at least 1)
//! m = ⌊ 2 log e / (ν log q) ⌋                  (clamped to [1, n])
//! ```
//!
//! A mismatch is a certificate that f ≠ g. Agreement on all of V_m proves
//! f^e = g^e as polynomials once q^m > e·d (root counting); below that
//! threshold the verdict is reported as unguaranteed.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{ElementRange, FFElem, FieldParams};
use crate::oracle::Oracle;
use crate::polyrat::Poly;
use crate::subspace::SubspaceSpec;

pub const DEFAULT_C: f64 = 0.5;

/// Distance to an integer below which a floor is flagged as fragile.
const BOUNDARY_EPS: f64 = 1.0 / (1u64 << 40) as f64;

#[derive(Clone, Debug, PartialEq)]
pub struct TestParams {
    pub d: usize,
    pub e: u128,
    /// log e / (n log q), so that e = q^{δ n}.
    pub delta: f64,
    pub c: f64,
    pub nu: u32,
    pub m: usize,
    /// ⌊2 log e / (ν log q)⌋ before clamping to [1, n].
    pub m_formula: i64,
    /// ν or m was raised or lowered to stay in range.
    pub clamped: bool,
    /// A floored quantity sat within 2^-40 of an integer.
    pub near_boundary: bool,
    pub nu_overridden: bool,
    pub m_overridden: bool,
}

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < BOUNDARY_EPS
}

/// Parameter selection for the subspace test. `nu` and `m` may be forced.
pub fn choose_params(
    ctx: &FieldParams,
    e: u128,
    d: usize,
    c: f64,
    nu_override: Option<u32>,
    m_override: Option<usize>,
) -> Result<TestParams> {
    if e < 2 || !ctx.group_order().is_multiple_of(e) {
        return Err(Error::invalid(format!(
            "e = {e} must be at least 2 and divide q^n - 1 = {}",
            ctx.group_order()
        )));
    }
    if d == 0 {
        return Err(Error::invalid("degree d must be at least 1"));
    }
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::invalid(format!("c = {c} must lie in (0, 1]")));
    }
    if nu_override == Some(0) {
        return Err(Error::invalid("ν must be at least 1"));
    }
    if let Some(m) = m_override {
        SubspaceSpec::new(ctx, m)?;
    }
    let log_e = (e as f64).ln();
    let log_q = (ctx.q() as f64).ln();
    let n = ctx.n();
    let delta = log_e / (n as f64 * log_q);
    let two_d = 2.0 * d as f64;

    let mut clamped = false;
    let mut near_boundary = false;
    let nu = match nu_override {
        Some(nu) => nu,
        None => {
            let raw = c.powf(1.0 + 1.0 / two_d) / (2.0 * delta).powf(1.0 / two_d);
            near_boundary |= near_integer(raw);
            let fl = raw.floor();
            if fl < 1.0 {
                clamped = true;
                1
            } else {
                fl as u32
            }
        }
    };
    let m_raw = 2.0 * log_e / (nu as f64 * log_q);
    let m_formula = m_raw.floor() as i64;
    let m = match m_override {
        Some(m) => m,
        None => {
            near_boundary |= near_integer(m_raw);
            let m = m_formula.clamp(1, n as i64) as usize;
            clamped |= m as i64 != m_formula;
            m
        }
    };
    Ok(TestParams {
        d,
        e,
        delta,
        c,
        nu,
        m,
        m_formula,
        clamped,
        near_boundary,
        nu_overridden: nu_override.is_some(),
        m_overridden: m_override.is_some(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The oracles agreed everywhere they were asked.
    EqualOrIndistinguishable,
    Distinct,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::EqualOrIndistinguishable => "equal-or-indistinguishable",
            Verdict::Distinct => "distinct",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestReport {
    pub verdict: Verdict,
    /// Smallest-encoding input on which the oracles differ.
    pub witness: Option<FFElem>,
    pub queries_f: u64,
    pub queries_g: u64,
    /// Subspace dimension for subspace runs; absent for the naive test.
    pub m: Option<usize>,
    /// Size of the planned query set (q^m or e·d + 1).
    pub planned: u128,
    /// The verdict is provably correct whenever f^e ≠ g^e as polynomials.
    pub guaranteed: bool,
}

fn sweep(oracle_f: &dyn Oracle, oracle_g: &dyn Oracle, points: ElementRange<'_>) -> (Option<FFElem>, u64, u64) {
    let (f0, g0) = (oracle_f.queries(), oracle_g.queries());
    let mut witness = None;
    for x in points {
        if oracle_f.query(&x) != oracle_g.query(&x) {
            witness = Some(x);
            break;
        }
    }
    (witness, oracle_f.queries() - f0, oracle_g.queries() - g0)
}

fn report(witness: Option<FFElem>, queries: (u64, u64), m: Option<usize>, planned: u128, guaranteed: bool) -> TestReport {
    TestReport {
        verdict: if witness.is_some() {
            Verdict::Distinct
        } else {
            Verdict::EqualOrIndistinguishable
        },
        witness,
        queries_f: queries.0,
        queries_g: queries.1,
        m,
        planned,
        guaranteed,
    }
}

/// Queries both oracles on V_m in encoding order, stopping at the first mismatch.
pub fn subspace_test(
    oracle_f: &dyn Oracle,
    oracle_g: &dyn Oracle,
    ctx: &FieldParams,
    m: usize,
    e: u128,
    d: usize,
    guard: u128,
) -> Result<TestReport> {
    let spec = SubspaceSpec::new(ctx, m)?;
    let points = spec.elements(ctx, guard)?;
    let planned = spec.size(ctx);
    let (witness, qf, qg) = sweep(oracle_f, oracle_g, points);
    let guaranteed = e
        .checked_mul(d as u128)
        .is_some_and(|ed| planned > ed);
    Ok(report(witness, (qf, qg), Some(m), planned, guaranteed))
}

/// Queries both oracles on encodings 0, 1, ..., e·d.
pub fn naive_test(
    oracle_f: &dyn Oracle,
    oracle_g: &dyn Oracle,
    ctx: &FieldParams,
    e: u128,
    d: usize,
) -> Result<TestReport> {
    let planned = e
        .checked_mul(d as u128)
        .and_then(|ed| ed.checked_add(1))
        .filter(|&p| p <= ctx.size())
        .ok_or_else(|| {
            Error::invalid(format!(
                "naive test needs e·d + 1 <= q^n; e = {e}, d = {d}, q^n = {}",
                ctx.size()
            ))
        })?;
    let (witness, qf, qg) = sweep(oracle_f, oracle_g, ElementRange::new(ctx, 0, planned));
    Ok(report(witness, (qf, qg), None, planned, true))
}

/// The smallest m such that V_m contains an input where f(x)^e ≠ g(x)^e,
/// or `None` when no such input exists in F_{q^n}.
pub fn witness_profile(
    ctx: &FieldParams,
    f: &Poly,
    g: &Poly,
    e: u128,
    guard: u128,
) -> Result<Option<usize>> {
    let q = ctx.q() as u128;
    let mut lo = 0u128;
    for m in 1..=ctx.n() {
        let hi = arith::checked_pow(q, m as u32).expect("q^m <= q^n");
        if hi > guard {
            return Err(Error::GuardExceeded {
                what: "witness profile",
                needed: hi,
                limit: guard,
            });
        }
        // Only V_m \ V_{m-1} = encodings [q^{m-1}, q^m) is new.
        let found = ElementRange::new(ctx, lo, hi)
            .any(|x| ctx.pow(&f.eval(&x, ctx), e) != ctx.pow(&g.eval(&x, ctx), e));
        if found {
            return Ok(Some(m));
        }
        lo = hi;
    }
    Ok(None)
}
