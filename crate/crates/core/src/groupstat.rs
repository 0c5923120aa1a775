//! Multiplicative-group analytics on F_{q^n}^*: element orders, value sets of
//! rational functions, the smallest subgroup containing a set, and ν-fold
//! product sets.
//!
//! F_{q^n}^* is cyclic, so for each divisor e of q^n - 1 there is exactly one
//! subgroup of order e. The smallest subgroup containing a set is therefore
//! the one generated by it, whose order is the lcm of the element orders.

use std::collections::BTreeSet;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{ElementRange, FFElem, FieldParams};
use crate::Guards;
use crate::polyrat::{normalize_rat, Poly, RatFn, RatValue};
use crate::subspace::SubspaceSpec;

pub use crate::DEFAULT_PRODUCT_GUARD;

/// Prime factorization of q^n - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u128,
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn of(n: u128) -> Result<Self> {
        let factors = arith::factor(n)?;
        let product = factors.iter().try_fold(1u128, |acc, &(p, e)| {
            arith::checked_pow(p, e).and_then(|pe| acc.checked_mul(pe))
        });
        if product != Some(n) {
            return Err(Error::FactorizationFailed(n));
        }
        Ok(Factorization { n, factors })
    }

    pub fn value(&self) -> u128 {
        self.n
    }

    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn divisors(&self) -> Vec<u128> {
        arith::divisors(&self.factors)
    }

    /// Renders as `3^2*5*7*13`.
    pub fn display(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn factor_group_order(ctx: &FieldParams) -> Result<Factorization> {
    Factorization::of(ctx.group_order())
}

/// Multiplicative order of a nonzero element.
pub fn element_order(ctx: &FieldParams, fact: &Factorization, x: &FFElem) -> Result<u128> {
    if x.is_zero() {
        return Err(Error::invalid("zero has no multiplicative order"));
    }
    let mut order = fact.value();
    for &(p, e) in fact.factors() {
        for _ in 0..e {
            let candidate = order / p;
            if ctx.pow(x, candidate) == ctx.one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// The value set r(S) split into nonzero values, zeros and poles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValueSetSummary {
    /// Distinct nonzero values r(x).
    pub values: BTreeSet<FFElem>,
    /// Points with r(x) = 0.
    pub zero_hits: u128,
    /// Points where the reduced denominator vanishes.
    pub poles: u128,
    /// Number of points scanned.
    pub domain_size: u128,
}

impl ValueSetSummary {
    pub fn size(&self) -> usize {
        self.values.len()
    }

    fn absorb(&mut self, other: ValueSetSummary) {
        self.values.extend(other.values);
        self.zero_hits += other.zero_hits;
        self.poles += other.poles;
        self.domain_size += other.domain_size;
    }
}

pub fn value_set<I>(ctx: &FieldParams, r: &RatFn, points: I) -> ValueSetSummary
where
    I: IntoIterator<Item = FFElem>,
{
    let mut summary = ValueSetSummary::default();
    let mut seen = FxHashSet::default();
    for x in points {
        summary.domain_size += 1;
        match r.eval(&x, ctx) {
            RatValue::Pole => summary.poles += 1,
            RatValue::Value(v) if v.is_zero() => summary.zero_hits += 1,
            RatValue::Value(v) => {
                seen.insert(v);
            }
        }
    }
    summary.values = seen.into_iter().collect();
    summary
}

const SWEEP_CHUNK: u128 = 1 << 10;

/// r(V_m), swept in parallel over encoding ranges. The result does not
/// depend on the number of workers.
pub fn value_set_subspace(
    ctx: &FieldParams,
    r: &RatFn,
    m: usize,
    guard: u128,
) -> Result<ValueSetSummary> {
    let spec = SubspaceSpec::new(ctx, m)?;
    // Validates the guard before any work is scheduled.
    spec.elements(ctx, guard)?;
    let size = spec.size(ctx);
    let chunks: Vec<u128> = (0..size.div_ceil(SWEEP_CHUNK)).collect();
    let partials: Vec<ValueSetSummary> = chunks
        .par_iter()
        .map(|&k| {
            let range = ElementRange::new(ctx, k * SWEEP_CHUNK, ((k + 1) * SWEEP_CHUNK).min(size));
            value_set(ctx, r, range)
        })
        .collect();
    let mut out = ValueSetSummary::default();
    for p in partials {
        out.absorb(p);
    }
    Ok(out)
}

/// A subgroup of the cyclic group F_{q^n}^*, determined by its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupDesc {
    pub order: u128,
}

/// The unique smallest subgroup containing every element of `set`.
pub fn smallest_containing_subgroup<'a, I>(
    ctx: &FieldParams,
    fact: &Factorization,
    set: I,
) -> Result<SubgroupDesc>
where
    I: IntoIterator<Item = &'a FFElem>,
{
    let mut order: Option<u128> = None;
    for a in set {
        if a.is_zero() {
            return Err(Error::ZeroInSet);
        }
        let acc = order.unwrap_or(1);
        // Skip the order computation when a already lies in the current subgroup.
        if order.is_some() && ctx.pow(a, acc) == ctx.one() {
            continue;
        }
        order = Some(arith::lcm(acc, element_order(ctx, fact, a)?));
    }
    order
        .map(|order| SubgroupDesc { order })
        .ok_or(Error::EmptySet)
}

/// E_r(V_m) for r = f/g together with the underlying value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceSubgroup {
    pub subgroup: SubgroupDesc,
    pub summary: ValueSetSummary,
    /// False when f, g are not monic of equal degree (the setting the
    /// bounds are stated for); the computation still proceeds.
    pub monic_equal_degree: bool,
}

/// E_r(V_m), computed on the nonzero part of r(V_m); zeros are reported in
/// the summary.
pub fn e_r_of_subspace(
    ctx: &FieldParams,
    fact: &Factorization,
    f: &Poly,
    g: &Poly,
    m: usize,
    guard: u128,
) -> Result<SubspaceSubgroup> {
    let r = normalize_rat(f, g, ctx)?;
    let summary = value_set_subspace(ctx, &r, m, guard)?;
    if summary.values.is_empty() {
        return Err(Error::DegenerateValueSet);
    }
    let subgroup = smallest_containing_subgroup(ctx, fact, &summary.values)?;
    Ok(SubspaceSubgroup {
        subgroup,
        summary,
        monic_equal_degree: f.is_monic(ctx) && g.is_monic(ctx) && f.degree() == g.degree(),
    })
}

/// The ν-fold product set A^{(ν)} = {a_1 ... a_ν : a_i ∈ A}, built
/// incrementally as A^{(k+1)} = A^{(k)} · A.
pub fn product_set(
    ctx: &FieldParams,
    set: &BTreeSet<FFElem>,
    nu: u32,
    guard: u128,
) -> Result<BTreeSet<FFElem>> {
    if nu == 0 {
        return Err(Error::invalid("product set needs ν >= 1"));
    }
    let predicted = (set.len() as u128).saturating_pow(nu);
    if predicted > guard {
        return Err(Error::GuardExceeded {
            what: "product set",
            needed: predicted,
            limit: guard,
        });
    }
    if ctx.is_small_binary() {
        return Ok(product_set_binary(ctx, set, nu));
    }
    let base: Vec<&FFElem> = set.iter().collect();
    let mut current: FxHashSet<FFElem> = set.iter().cloned().collect();
    for _ in 1..nu {
        let layer: Vec<&FFElem> = current.iter().collect();
        current = layer
            .par_iter()
            .fold(FxHashSet::default, |mut acc, x| {
                for a in &base {
                    acc.insert(ctx.mul(x, a));
                }
                acc
            })
            .reduce(FxHashSet::default, |mut a, b| {
                a.extend(b);
                a
            });
    }
    Ok(current.into_iter().collect())
}

/// [`product_set`] on bit-mask encodings, for q = 2 and n <= 64.
fn product_set_binary(ctx: &FieldParams, set: &BTreeSet<FFElem>, nu: u32) -> BTreeSet<FFElem> {
    let base: Vec<u128> = set.iter().map(|x| ctx.encode(x)).collect();
    let mut current: FxHashSet<u128> = base.iter().copied().collect();
    for _ in 1..nu {
        let layer: Vec<u128> = current.iter().copied().collect();
        current = layer
            .par_iter()
            .fold(FxHashSet::default, |mut acc, &x| {
                acc.extend(base.iter().map(|&a| ctx.mul_bits(x, a)));
                acc
            })
            .reduce(FxHashSet::default, |mut a, b| {
                a.extend(b);
                a
            });
    }
    current
        .into_iter()
        .map(|x| ctx.from_encoding(x).expect("product stays in the field"))
        .collect()
}

/// Growth of A^{(ν)} for A = r(V_m) \ {0}.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub d: usize,
    pub m: usize,
    pub nu: u32,
    pub size_a: usize,
    pub size_a_nu: usize,
    /// log #A^{(ν)} / (ν m log q); at most 1.
    pub rho: f64,
    pub zero_hits: u128,
    pub poles: u128,
    /// E_r(V_m), the order of the subgroup generated by A.
    pub e_order: u128,
    /// (q^m - zero_hits - poles) / d, a lower bound on #A whenever f ≠ g
    /// are monic of degree d: each value λ has at most d preimages, the
    /// roots of f - λg.
    pub floor: f64,
    pub floor_ok: bool,
}

pub fn growth_report(
    ctx: &FieldParams,
    fact: &Factorization,
    f: &Poly,
    g: &Poly,
    m: usize,
    nu: u32,
    guards: Guards,
) -> Result<GrowthReport> {
    let er = e_r_of_subspace(ctx, fact, f, g, m, guards.enumeration)?;
    let pset = product_set(ctx, &er.summary.values, nu, guards.product)?;
    let d = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0)).max(1);
    let size_a = er.summary.size();
    let regular = er.summary.domain_size - er.summary.zero_hits - er.summary.poles;
    let rho = (pset.len() as f64).ln() / (nu as f64 * m as f64 * (ctx.q() as f64).ln());
    Ok(GrowthReport {
        d,
        m,
        nu,
        size_a,
        size_a_nu: pset.len(),
        rho,
        zero_hits: er.summary.zero_hits,
        poles: er.summary.poles,
        e_order: er.subgroup.order,
        floor: regular as f64 / d as f64,
        floor_ok: (size_a as u128) * (d as u128) >= regular,
    })
}
