//! Cross-module invariants, checked against brute-force ground truth.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powid_core::ffdiv;
use powid_core::groupstat::{self, factor_group_order};
use powid_core::oracle::{self, DEFAULT_SCAN_GUARD};
use powid_core::polyrat::random_monic_with;
use powid_core::tester::{self, Verdict};
use powid_core::{FFElem, FieldParams, Oracle, Poly, PowerOracle};

const GUARD: u128 = 1 << 20;

fn field(which: u8) -> FieldParams {
    match which % 3 {
        0 => FieldParams::new(2, 10).unwrap(),
        1 => FieldParams::new(3, 5).unwrap(),
        _ => FieldParams::new(5, 4).unwrap(),
    }
}

/// f, and g equal to f about a third of the time.
fn instance(ctx: &FieldParams, rng: &mut ChaCha8Rng, d: usize) -> (Poly, Poly) {
    let f = random_monic_with(ctx, d, rng);
    let g = if rng.random_range(0..3) == 0 { f.clone() } else { random_monic_with(ctx, d, rng) };
    (f, g)
}

fn exponent(ctx: &FieldParams, rng: &mut ChaCha8Rng) -> u128 {
    let exps = oracle::admissible_exponents(ctx).unwrap();
    exps[rng.random_range(0..exps.len())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subspace_test_is_sound_and_accounts_queries(seed in any::<u64>(), which in any::<u8>(), d in 1usize..4) {
        let ctx = field(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = instance(&ctx, &mut rng, d);
        let e = exponent(&ctx, &mut rng);
        let m = rng.random_range(1..=ctx.n());
        let of = PowerOracle::new(&ctx, f.clone(), e).unwrap();
        let og = PowerOracle::new(&ctx, g.clone(), e).unwrap();
        let r = tester::subspace_test(&of, &og, &ctx, m, e, d, GUARD).unwrap();
        let size = (ctx.q() as u128).pow(m as u32);
        prop_assert_eq!(r.planned, size);
        prop_assert_eq!(r.queries_f as u128, of.queries() as u128);
        prop_assert_eq!(r.queries_g as u128, og.queries() as u128);
        match (&r.verdict, &r.witness) {
            (Verdict::Distinct, Some(x)) => {
                prop_assert_ne!(of.query(x), og.query(x));
                prop_assert_eq!(r.queries_f as u128, ctx.encode(x) + 1);
                // witness_profile never exceeds a dimension that already has a witness.
                let wm = tester::witness_profile(&ctx, &f, &g, e, GUARD).unwrap();
                prop_assert!(wm.is_some_and(|wm| wm <= m));
            }
            (Verdict::EqualOrIndistinguishable, None) => prop_assert_eq!(r.queries_f as u128, size),
            other => prop_assert!(false, "inconsistent report {:?}", other),
        }
    }

    #[test]
    fn guaranteed_subspace_test_is_complete(seed in any::<u64>(), which in any::<u8>(), d in 1usize..4) {
        let ctx = field(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = instance(&ctx, &mut rng, d);
        let e = exponent(&ctx, &mut rng);
        let Some(m) = (1..=ctx.n()).find(|&m| (ctx.q() as u128).pow(m as u32) > e * d as u128) else {
            return Ok(());
        };
        let of = PowerOracle::new(&ctx, f.clone(), e).unwrap();
        let og = PowerOracle::new(&ctx, g.clone(), e).unwrap();
        let r = tester::subspace_test(&of, &og, &ctx, m, e, d, GUARD).unwrap();
        prop_assert!(r.guaranteed);
        let truth = oracle::equivalence_check(&ctx, &f, &g, e, DEFAULT_SCAN_GUARD).unwrap();
        if !truth.indistinguishable {
            prop_assert_eq!(r.verdict, Verdict::Distinct);
        }
    }

    #[test]
    fn naive_test_is_exact_below_the_degree_bound(seed in any::<u64>(), which in any::<u8>(), d in 1usize..4) {
        let ctx = field(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = instance(&ctx, &mut rng, d);
        let e = exponent(&ctx, &mut rng);
        prop_assume!(ctx.group_order() / e > d as u128);
        let of = PowerOracle::new(&ctx, f.clone(), e).unwrap();
        let og = PowerOracle::new(&ctx, g.clone(), e).unwrap();
        let r = tester::naive_test(&of, &og, &ctx, e, d).unwrap();
        let expected = if f == g { Verdict::EqualOrIndistinguishable } else { Verdict::Distinct };
        prop_assert_eq!(r.verdict, expected);
        prop_assert!(r.queries_f as u128 <= e * d as u128 + 1);
    }

    #[test]
    fn shortcut_matches_full_scan(seed in any::<u64>(), which in any::<u8>(), d in 1usize..4) {
        let ctx = field(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = instance(&ctx, &mut rng, d);
        let e = exponent(&ctx, &mut rng);
        let shortcut = oracle::equivalence_check(&ctx, &f, &g, e, DEFAULT_SCAN_GUARD).unwrap();
        let scan = oracle::indistinguishable_scan(&ctx, &f, &g, e, DEFAULT_SCAN_GUARD).unwrap();
        prop_assert_eq!(shortcut.indistinguishable, scan.indistinguishable);
        if f == g {
            prop_assert!(shortcut.indistinguishable);
        }
    }

    #[test]
    fn subgroup_is_minimal_and_floor_holds(seed in any::<u64>(), which in any::<u8>(), d in 1usize..4) {
        let ctx = field(which);
        let fact = factor_group_order(&ctx).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_monic_with(&ctx, d, &mut rng);
        let g = random_monic_with(&ctx, d, &mut rng);
        prop_assume!(f != g);
        let m = rng.random_range(1..=ctx.n());
        match groupstat::e_r_of_subspace(&ctx, &fact, &f, &g, m, GUARD) {
            Ok(er) => {
                let s = &er.summary;
                prop_assert!((s.size() as u128) * d as u128 >= s.domain_size - s.zero_hits - s.poles);
                let brute = fact
                    .divisors()
                    .into_iter()
                    .find(|&t| s.values.iter().all(|a| ctx.pow(a, t) == ctx.one()))
                    .unwrap();
                prop_assert_eq!(er.subgroup.order, brute);
            }
            Err(powid_core::Error::DegenerateValueSet) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn product_set_bounded_by_subgroup(seed in any::<u64>(), nu in 1u32..4) {
        let ctx = FieldParams::new(2, 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let exps = oracle::admissible_exponents(&ctx).unwrap();
        let order = exps[rng.random_range(0..exps.len())];
        // A inside the subgroup of the given order, with 1 ∈ A.
        let gen = ctx.pow(&ctx.alpha(), ctx.group_order() / order);
        let mut a: BTreeSet<FFElem> = (0..rng.random_range(1..12))
            .map(|_| ctx.pow(&gen, rng.random_range(0..order)))
            .collect();
        a.insert(ctx.one());
        let p = groupstat::product_set(&ctx, &a, nu, 1 << 26).unwrap();
        let next = groupstat::product_set(&ctx, &a, nu + 1, 1 << 26).unwrap();
        prop_assert!(p.len() <= next.len());
        prop_assert!((p.len() as u128) <= order.min((a.len() as u128).pow(nu)));
    }

    #[test]
    fn principal_divisors_and_pole_bound(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = ffdiv::random_ratfn(q, 6, &mut rng);
        prop_assert_eq!(ffdiv::principal_divisor(&f).unwrap().degree(), 0);
        let b = ffdiv::height_and_pole_bound(&f).unwrap();
        prop_assert!(b.bound_ok);
        prop_assert!(b.identity_holds);
    }
}

#[test]
fn tau_matches_enumeration() {
    for q in [2u32, 3] {
        let all = ffdiv::effective_divisors_up_to(q, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(q as u64);
        for _ in 0..40 {
            let d = ffdiv::random_effective_divisor(q, 5, &mut rng);
            let count = all.iter().filter(|s| s.is_le(&d)).count() as u128;
            assert_eq!(ffdiv::tau(&d).unwrap(), count, "{d}");
        }
    }
}
