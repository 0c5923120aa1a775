//! Identity testing of hidden polynomials from power oracles over F_{q^n}.
//!
//! Given oracles x ↦ f(x)^e and x ↦ g(x)^e for unknown monic f, g over a
//! high-degree extension F_{q^n}, decide whether f = g. The crate provides
//! the testers ([`tester`]), the oracles ([`oracle`]), and the objects the
//! analysis of the subspace tester is built on: value sets of rational
//! functions on the subspaces V_m and the smallest subgroups containing
//! them ([`groupstat`]), ν-fold product sets, and divisors of F_q(T)
//! ([`ffdiv`]).

pub mod arith;
pub mod error;
pub mod ffdiv;
pub mod fqpoly;
pub mod gf;
pub mod groupstat;
pub mod oracle;
pub mod polyrat;
pub mod subspace;
pub mod tester;
pub mod verify;

pub use error::{Error, Result};
pub use ffdiv::{FFDivisor, Place, RatFnQ};
pub use fqpoly::FqPoly;
pub use gf::{FFElem, FieldParams};
pub use groupstat::{Factorization, GrowthReport, SubgroupDesc, ValueSetSummary};
pub use oracle::{EquivalenceVerdict, Oracle, PowerOracle};
pub use polyrat::{Poly, RatFn, RatValue};
pub use subspace::SubspaceSpec;
pub use tester::{TestParams, TestReport, Verdict};

/// Default cap on predicted product-set work, `(#A)^ν`.
pub const DEFAULT_PRODUCT_GUARD: u128 = 1 << 26;

/// Work limits for exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Maximum number of field elements a sweep may enumerate.
    pub enumeration: u128,
    /// Maximum predicted product-set work.
    pub product: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            enumeration: gf::DEFAULT_ENUM_GUARD,
            product: DEFAULT_PRODUCT_GUARD,
        }
    }
}

impl Guards {
    /// Enumeration limit 2^bits; the product limit keeps its 4x headroom.
    pub fn from_bits(bits: u32) -> Self {
        let bits = bits.min(120);
        Guards {
            enumeration: 1u128 << bits,
            product: 1u128 << (bits + 2),
        }
    }
}
