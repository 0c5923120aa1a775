//! Univariate polynomials and reduced rational functions over F_{q^n}.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{FFElem, FieldParams};

/// Coefficients constant term first; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FFElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FFElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one(ctx: &FieldParams) -> Self {
        Self::constant(ctx.one())
    }

    /// The monic linear polynomial X + c.
    pub fn linear(ctx: &FieldParams, c: FFElem) -> Self {
        Self::from_coeffs(vec![c, ctx.one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<FFElem>) -> Self {
        while coeffs.last().is_some_and(FFElem::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_encodings(ctx: &FieldParams, encs: &[u128]) -> Result<Self> {
        let coeffs = encs
            .iter()
            .map(|&e| ctx.from_encoding(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Parses comma-separated element encodings, constant term first ("0,1" is X).
    pub fn parse(ctx: &FieldParams, s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| ctx.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Inverse of [`Poly::parse`]; the zero polynomial renders as "0".
    pub fn to_encoding_string(&self, ctx: &FieldParams) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| ctx.encode(c).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&FFElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, ctx: &FieldParams) -> bool {
        self.lead() == Some(&ctx.one())
    }

    pub fn add(&self, other: &Self, ctx: &FieldParams) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = ctx.zero();
        let coeffs = (0..len)
            .map(|i| {
                ctx.add(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self, ctx: &FieldParams) -> Self {
        let neg = Poly {
            coeffs: other.coeffs.iter().map(|c| ctx.neg(c)).collect(),
        };
        self.add(&neg, ctx)
    }

    pub fn scale(&self, s: &FFElem, ctx: &FieldParams) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| ctx.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &Self, ctx: &FieldParams) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(&out[i + j], &ctx.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, exp: u32, ctx: &FieldParams) -> Self {
        (0..exp).fold(Self::one(ctx), |acc, _| acc.mul(self, ctx))
    }

    pub fn div_rem(&self, divisor: &Self, ctx: &FieldParams) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let inv_lead = ctx.inv(divisor.lead().expect("nonzero"))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ctx.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = ctx.mul(&rem[i], &inv_lead);
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = ctx.sub(&rem[k], &ctx.mul(&factor, b));
            }
            quot[i - dd] = factor;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self, ctx: &FieldParams) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&ctx.inv(l).expect("lead is nonzero"), ctx),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FFElem, ctx: &FieldParams) -> FFElem {
        self.coeffs
            .iter()
            .rev()
            .fold(ctx.zero(), |acc, c| ctx.add(&ctx.mul(&acc, x), c))
    }
}

/// Monic gcd by Euclid's algorithm.
pub fn gcd_poly(a: &Poly, b: &Poly, ctx: &FieldParams) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("gcd of two zero polynomials"));
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y, ctx)?.1;
        x = y;
        y = r;
    }
    Ok(x.monic(ctx))
}

/// A rational function num/den with coprime parts and monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

/// Outcome of evaluating a rational function at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatValue {
    Value(FFElem),
    Pole,
}

impl RatFn {
    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn eval(&self, x: &FFElem, ctx: &FieldParams) -> RatValue {
        let d = self.den.eval(x, ctx);
        if d.is_zero() {
            return RatValue::Pole;
        }
        let n = self.num.eval(x, ctx);
        RatValue::Value(ctx.div(&n, &d).expect("denominator is nonzero"))
    }
}

/// Reduces f/g to lowest terms with a monic denominator.
pub fn normalize_rat(f: &Poly, g: &Poly, ctx: &FieldParams) -> Result<RatFn> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.is_zero() {
        return Ok(RatFn {
            num: Poly::zero(),
            den: Poly::one(ctx),
        });
    }
    let h = gcd_poly(f, g, ctx)?;
    let num = f.div_rem(&h, ctx)?.0;
    let den = g.div_rem(&h, ctx)?.0;
    let inv = ctx.inv(den.lead().expect("den is nonzero"))?;
    Ok(RatFn {
        num: num.scale(&inv, ctx),
        den: den.scale(&inv, ctx),
    })
}

/// A monic polynomial of degree `d` with uniformly random lower coefficients.
pub fn random_monic_with<R: Rng + ?Sized>(ctx: &FieldParams, d: usize, rng: &mut R) -> Poly {
    let mut coeffs: Vec<FFElem> = (0..d)
        .map(|_| {
            let enc = rng.random_range(0..ctx.size());
            ctx.from_encoding(enc).expect("in range")
        })
        .collect();
    coeffs.push(ctx.one());
    Poly::from_coeffs(coeffs)
}

/// Seeded variant of [`random_monic_with`]; equal seeds give equal polynomials.
pub fn random_monic(ctx: &FieldParams, d: usize, seed: u64) -> Result<Poly> {
    if d == 0 {
        return Err(Error::invalid("random_monic needs degree at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_monic_with(ctx, d, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f16() -> FieldParams {
        FieldParams::new(2, 4).unwrap()
    }

    fn poly(ctx: &FieldParams, encs: &[u128]) -> Poly {
        Poly::from_encodings(ctx, encs).unwrap()
    }

    #[test]
    fn evaluation() {
        let ctx = f16();
        let x5 = ctx.from_encoding(5).unwrap();
        assert_eq!(poly(&ctx, &[0, 1]).eval(&x5, &ctx), x5);
        assert_eq!(poly(&ctx, &[1, 1]).eval(&ctx.zero(), &ctx), ctx.one());
        let a = ctx.from_encoding(2).unwrap();
        assert_eq!(
            poly(&ctx, &[0, 0, 1]).eval(&a, &ctx),
            ctx.from_encoding(4).unwrap()
        );
    }

    #[test]
    fn gcd_examples() {
        let ctx = f16();
        let x = poly(&ctx, &[0, 1]);
        assert_eq!(gcd_poly(&poly(&ctx, &[0, 1, 1]), &x, &ctx).unwrap(), x);
        let p = poly(&ctx, &[3, 7, 5]);
        assert_eq!(gcd_poly(&p, &Poly::zero(), &ctx).unwrap(), p.monic(&ctx));
        assert_eq!(gcd_poly(&p, &p, &ctx).unwrap(), p.monic(&ctx));
        assert!(gcd_poly(&Poly::zero(), &Poly::zero(), &ctx).is_err());
    }

    #[test]
    fn normalization_examples() {
        let ctx = f16();
        let r = normalize_rat(&poly(&ctx, &[0, 1, 1]), &poly(&ctx, &[0, 1]), &ctx).unwrap();
        assert_eq!(r.num(), &poly(&ctx, &[1, 1]));
        assert_eq!(r.den(), &Poly::one(&ctx));
        let f = poly(&ctx, &[6, 2, 1]);
        let r = normalize_rat(&f, &Poly::one(&ctx), &ctx).unwrap();
        assert_eq!(r.num(), &f);
        let r = normalize_rat(&Poly::zero(), &f, &ctx).unwrap();
        assert!(r.num().is_zero());
        assert_eq!(r.den(), &Poly::one(&ctx));
        assert_eq!(normalize_rat(&f, &Poly::zero(), &ctx), Err(Error::ZeroDivisor));
    }

    #[test]
    fn rational_evaluation() {
        let ctx = f16();
        let r = normalize_rat(&poly(&ctx, &[1, 1]), &poly(&ctx, &[0, 1]), &ctx).unwrap();
        assert_eq!(r.eval(&ctx.zero(), &ctx), RatValue::Pole);
        let r = normalize_rat(&poly(&ctx, &[0, 1]), &poly(&ctx, &[1, 1]), &ctx).unwrap();
        assert_eq!(r.eval(&ctx.one(), &ctx), RatValue::Pole);
        assert_eq!(r.eval(&ctx.zero(), &ctx), RatValue::Value(ctx.zero()));
    }

    #[test]
    fn random_monic_shape() {
        let ctx = FieldParams::new(2, 16).unwrap();
        for d in 1..5 {
            let p = random_monic(&ctx, d, 42).unwrap();
            assert_eq!(p.degree(), Some(d));
            assert!(p.is_monic(&ctx));
            assert_eq!(p, random_monic(&ctx, d, 42).unwrap());
        }
        assert!(random_monic(&ctx, 0, 1).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let ctx = f16();
        let p = Poly::parse(&ctx, "3,0,1").unwrap();
        assert_eq!(p.to_encoding_string(&ctx), "3,0,1");
        assert!(Poly::parse(&ctx, "3,x").is_err());
        assert!(Poly::parse(&ctx, "0").unwrap().is_zero());
    }

    proptest! {
        #[test]
        fn normalize_is_reduced_and_consistent(
            seed in any::<u64>(),
            df in 0usize..4,
            dg in 1usize..4,
            common in 0usize..3,
        ) {
            let ctx = FieldParams::new(3, 3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = if common == 0 { Poly::one(&ctx) } else { random_monic_with(&ctx, common, &mut rng) };
            let f = if df == 0 { Poly::one(&ctx) } else { random_monic_with(&ctx, df, &mut rng) };
            let f = f.scale(&ctx.from_encoding(2).unwrap(), &ctx).mul(&h, &ctx);
            let g = random_monic_with(&ctx, dg, &mut rng).mul(&h, &ctx);
            let r = normalize_rat(&f, &g, &ctx).unwrap();
            prop_assert!(r.den().is_monic(&ctx));
            prop_assert_eq!(gcd_poly(r.num(), r.den(), &ctx).unwrap(), Poly::one(&ctx));
            for x in ctx.enumerate(1 << 10).unwrap() {
                let gx = g.eval(&x, &ctx);
                if gx.is_zero() {
                    continue;
                }
                let expected = ctx.div(&f.eval(&x, &ctx), &gx).unwrap();
                prop_assert_eq!(r.eval(&x, &ctx), RatValue::Value(expected));
            }
        }
    }
}
