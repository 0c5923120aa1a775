//! The F_q-linear subspaces V_m = span(1, alpha, ..., alpha^{m-1}) of F_{q^n}.
//!
//! In the canonical encoding V_m is exactly the encodings `[0, q^m)`.

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{ElementRange, FieldParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceSpec {
    m: usize,
}

impl SubspaceSpec {
    pub fn new(ctx: &FieldParams, m: usize) -> Result<Self> {
        if m == 0 || m > ctx.n() {
            return Err(Error::invalid(format!(
                "subspace dimension m = {m} must lie in [1, {}]",
                ctx.n()
            )));
        }
        Ok(SubspaceSpec { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// #V_m = q^m.
    pub fn size(&self, ctx: &FieldParams) -> u128 {
        arith::checked_pow(ctx.q() as u128, self.m as u32).expect("q^m <= q^n")
    }

    pub fn elements<'a>(&self, ctx: &'a FieldParams, guard: u128) -> Result<ElementRange<'a>> {
        let size = self.size(ctx);
        if size > guard {
            return Err(Error::GuardExceeded {
                what: "subspace enumeration",
                needed: size,
                limit: guard,
            });
        }
        Ok(ElementRange::new(ctx, 0, size))
    }
}

/// Elements of V_m in increasing encoding order.
pub fn enumerate_vm(ctx: &FieldParams, m: usize, guard: u128) -> Result<ElementRange<'_>> {
    SubspaceSpec::new(ctx, m)?.elements(ctx, guard)
}
