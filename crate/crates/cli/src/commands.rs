use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use powid_core::gf::parse_fq_poly;
use powid_core::groupstat;
use powid_core::polyrat::{normalize_rat, random_monic_with};
use powid_core::tester::{self, DEFAULT_C};
use powid_core::{ffdiv, verify, Error, FieldParams, Guards, Oracle, Poly, PowerOracle, Verdict};

use crate::args::{Command, Options};
use crate::report::{Cell, Report};
use crate::{config, CliResult};

const GROWTH_COLUMNS: [&str; 12] = [
    "q", "n", "psi", "d", "m", "nu", "sizeA", "sizeAnu", "rho", "zero_hits", "poles", "E_order",
];
const TEST_COLUMNS: [&str; 14] = [
    "q", "n", "psi", "e", "d", "c", "delta", "nu", "m", "verdict", "witness", "queries_f", "queries_g",
    "guaranteed",
];
const COUNT_COLUMNS: [&str; 5] = ["q", "r", "count_exact", "count_cumulative", "bound_q2r"];

pub fn run(command: Command, opts: &Options) -> CliResult<Report> {
    match command {
        Command::Field => field(opts),
        Command::Etest => etest(opts),
        Command::Ers => ers(opts),
        Command::Pset => pset(opts),
        Command::Divlab => divlab(opts),
        Command::Witness => witness(opts),
        Command::Verify => verify_all(opts),
    }
}

fn build_field(opts: &Options) -> CliResult<FieldParams> {
    let q = opts.q.ok_or_else(|| config("--q is required"))?;
    let ctx = match &opts.psi {
        Some(psi) => {
            let ctx = FieldParams::with_modulus(q, parse_fq_poly(psi, q)?)?;
            if opts.n.is_some_and(|n| n != ctx.n()) {
                return Err(config(format!("--n disagrees with deg psi = {}", ctx.n())));
            }
            ctx
        }
        None => FieldParams::new(q, opts.n.ok_or_else(|| config("--n or --psi is required"))?)?,
    };
    Ok(ctx)
}

fn guards(opts: &Options) -> CliResult<Guards> {
    if opts.guard_bits > 100 {
        return Err(config("--guard-bits must be at most 100"));
    }
    Ok(Guards::from_bits(opts.guard_bits))
}

fn header(report: &mut Report, command: Command, ctx: Option<&FieldParams>, seed: Option<u64>) {
    report.meta("tool", "powid");
    report.meta("version", env!("CARGO_PKG_VERSION"));
    report.meta("command", command.name());
    match ctx {
        Some(ctx) => {
            report.meta("q", ctx.q());
            report.meta("n", ctx.n());
            report.meta("psi", ctx.psi_encoding());
        }
        None => {
            report.meta("q", "-");
            report.meta("n", "-");
            report.meta("psi", "-");
        }
    }
    report.meta("seed", seed.map_or_else(|| "-".to_string(), |s| s.to_string()));
}

/// Exponent from --e, validated against q^n - 1 before any work.
fn exponent(opts: &Options, ctx: &FieldParams) -> CliResult<u128> {
    let e = opts.e.ok_or_else(|| config("--e is required"))?;
    if e < 2 || !ctx.group_order().is_multiple_of(e) {
        return Err(config(format!(
            "--e {e} must be at least 2 and divide q^n - 1 = {}",
            ctx.group_order()
        )));
    }
    Ok(e)
}

/// The (f, g) pairs to study: the explicit pair, or `trials` seeded random pairs of degree d.
fn pairs(opts: &Options, ctx: &FieldParams, require_monic: bool) -> CliResult<Vec<(Poly, Poly)>> {
    match (&opts.f, &opts.g) {
        (Some(f), Some(g)) => {
            let f = Poly::parse(ctx, f)?;
            let g = Poly::parse(ctx, g)?;
            if f.is_zero() || g.is_zero() {
                return Err(config("f and g must be nonzero"));
            }
            if require_monic && (!f.is_monic(ctx) || !g.is_monic(ctx) || f.degree() != g.degree()) {
                return Err(config("f and g must be monic of equal degree"));
            }
            Ok(vec![(f, g)])
        }
        (None, None) => {
            let seed = opts
                .seed
                .ok_or_else(|| config("--seed is required when f and g are drawn at random"))?;
            let d = opts.d.unwrap_or(1);
            if d == 0 {
                return Err(config("--d must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..opts.trials.unwrap_or(1))
                .map(|_| {
                    let f = random_monic_with(ctx, d, &mut rng);
                    let g = random_monic_with(ctx, d, &mut rng);
                    (f, g)
                })
                .collect())
        }
        _ => Err(config("give both --f and --g, or neither")),
    }
}

fn degree(f: &Poly, g: &Poly) -> usize {
    f.degree().unwrap_or(0).max(g.degree().unwrap_or(0))
}

fn field(opts: &Options) -> CliResult<Report> {
    let ctx = build_field(opts)?;
    let fact = groupstat::factor_group_order(&ctx)?;
    let mut report = Report::new(&["q", "n", "psi", "modulus", "size", "group_order", "factorization"]);
    header(&mut report, Command::Field, Some(&ctx), opts.seed);
    report.push(vec![
        ctx.q().into(),
        ctx.n().into(),
        ctx.psi_encoding().into(),
        ctx.psi_string().into(),
        ctx.size().into(),
        ctx.group_order().into(),
        fact.display().into(),
    ]);
    if fact.value() != ctx.group_order() {
        report.fail("factorization does not multiply back to q^n - 1");
    }
    Ok(report)
}

fn etest(opts: &Options) -> CliResult<Report> {
    let ctx = build_field(opts)?;
    let e = exponent(opts, &ctx)?;
    let guards = guards(opts)?;
    let c = opts.c.unwrap_or(DEFAULT_C);
    let mut report = Report::new(&TEST_COLUMNS);
    header(&mut report, Command::Etest, Some(&ctx), opts.seed);
    for (f, g) in pairs(opts, &ctx, true)? {
        let d = degree(&f, &g);
        let params = tester::choose_params(&ctx, e, d, c, opts.nu, opts.m)?;
        if params.clamped {
            report.note("ν or m was clamped into range");
        }
        if params.near_boundary {
            report.note("a floored parameter sat within 2^-40 of an integer");
        }
        let of = PowerOracle::new(&ctx, f.clone(), e)?;
        let og = PowerOracle::new(&ctx, g.clone(), e)?;
        let sub = tester::subspace_test(&of, &og, &ctx, params.m, e, d, guards.enumeration)?;
        if sub.verdict == Verdict::EqualOrIndistinguishable && !sub.guaranteed {
            report.note(
                "q^m <= e·d: an equal-or-indistinguishable verdict does not certify f = g",
            );
        }
        let row = |r: &tester::TestReport, nu: Option<u32>| -> Vec<Cell> {
            vec![
                ctx.q().into(),
                ctx.n().into(),
                ctx.psi_encoding().into(),
                e.into(),
                d.into(),
                c.into(),
                params.delta.into(),
                nu.into(),
                r.m.into(),
                r.verdict.to_string().into(),
                r.witness.as_ref().map(|w| ctx.encode(w)).into(),
                r.queries_f.into(),
                r.queries_g.into(),
                r.guaranteed.into(),
            ]
        };
        report.push(row(&sub, Some(params.nu)));
        check_witness(&mut report, &ctx, &f, &g, e, &sub)?;

        let naive_size = e.checked_mul(d as u128).and_then(|x| x.checked_add(1));
        if naive_size.is_some_and(|s| s <= ctx.size() && s <= guards.enumeration) {
            let of = PowerOracle::new(&ctx, f.clone(), e)?;
            let og = PowerOracle::new(&ctx, g.clone(), e)?;
            let naive = tester::naive_test(&of, &og, &ctx, e, d)?;
            report.push(row(&naive, None));
            check_witness(&mut report, &ctx, &f, &g, e, &naive)?;
            if sub.guaranteed && naive.verdict != sub.verdict {
                report.fail(format!(
                    "naive and guaranteed subspace verdicts disagree for f = {}, g = {}",
                    f.to_encoding_string(&ctx),
                    g.to_encoding_string(&ctx)
                ));
            }
        } else {
            report.note("naive test skipped: e·d + 1 exceeds the field or the guard");
        }
    }
    Ok(report)
}

fn check_witness(
    report: &mut Report,
    ctx: &FieldParams,
    f: &Poly,
    g: &Poly,
    e: u128,
    r: &tester::TestReport,
) -> CliResult<()> {
    if let Some(x) = &r.witness {
        let of = PowerOracle::new(ctx, f.clone(), e)?;
        let og = PowerOracle::new(ctx, g.clone(), e)?;
        if of.query(x) == og.query(x) {
            report.fail(format!("witness {} does not separate the oracles", ctx.encode(x)));
        }
    }
    Ok(())
}

/// Dimensions to sweep: --m alone, or 1..=n up to the enumeration guard.
fn dimensions(opts: &Options, ctx: &FieldParams, guards: Guards, default_max: usize) -> CliResult<Vec<usize>> {
    if let Some(m) = opts.m {
        if m == 0 || m > ctx.n() {
            return Err(config(format!("--m must lie in [1, {}]", ctx.n())));
        }
        return Ok(vec![m]);
    }
    let q = ctx.q() as u128;
    Ok((1..=default_max.min(ctx.n()))
        .take_while(|&m| q.checked_pow(m as u32).is_some_and(|s| s <= guards.enumeration))
        .collect())
}

fn ers(opts: &Options) -> CliResult<Report> {
    let ctx = build_field(opts)?;
    let guards = guards(opts)?;
    let fact = groupstat::factor_group_order(&ctx)?;
    let mut report = Report::new(&["q", "n", "psi", "d", "m", "sizeA", "zero_hits", "poles", "E_order", "index"]);
    header(&mut report, Command::Ers, Some(&ctx), opts.seed);
    let ms = dimensions(opts, &ctx, guards, ctx.n())?;
    for (f, g) in pairs(opts, &ctx, false)? {
        let d = degree(&f, &g);
        let r = normalize_rat(&f, &g, &ctx)?;
        for &m in &ms {
            let s = groupstat::value_set_subspace(&ctx, &r, m, guards.enumeration)?;
            let order = if s.values.is_empty() {
                None
            } else {
                let sub = groupstat::smallest_containing_subgroup(&ctx, &fact, &s.values)?;
                if ctx.group_order() % sub.order != 0
                    || s.values.iter().any(|v| ctx.pow(v, sub.order) != ctx.one())
                {
                    report.fail(format!("E order {} does not annihilate r(V_{m})", sub.order));
                }
                Some(sub.order)
            };
            report.push(vec![
                ctx.q().into(),
                ctx.n().into(),
                ctx.psi_encoding().into(),
                d.into(),
                m.into(),
                s.size().into(),
                s.zero_hits.into(),
                s.poles.into(),
                order.into(),
                order.map(|o| ctx.group_order() / o).into(),
            ]);
        }
    }
    Ok(report)
}

fn pset(opts: &Options) -> CliResult<Report> {
    let ctx = build_field(opts)?;
    let guards = guards(opts)?;
    let fact = groupstat::factor_group_order(&ctx)?;
    let mut report = Report::new(&GROWTH_COLUMNS);
    header(&mut report, Command::Pset, Some(&ctx), opts.seed);
    let ms = dimensions(opts, &ctx, guards, 4)?;
    let max_nu = opts.nu.unwrap_or(2);
    if max_nu == 0 {
        return Err(config("--nu must be at least 1"));
    }
    for (f, g) in pairs(opts, &ctx, false)? {
        let d = degree(&f, &g);
        let distinct_monic = f != g && f.is_monic(&ctx) && g.is_monic(&ctx) && f.degree() == g.degree();
        for &m in &ms {
            for nu in 1..=max_nu {
                match groupstat::growth_report(&ctx, &fact, &f, &g, m, nu, guards) {
                    Ok(r) => {
                        if distinct_monic && !r.floor_ok {
                            report.fail(format!("preimage floor violated at m = {m}"));
                        }
                        report.push(vec![
                            ctx.q().into(),
                            ctx.n().into(),
                            ctx.psi_encoding().into(),
                            r.d.into(),
                            m.into(),
                            nu.into(),
                            r.size_a.into(),
                            r.size_a_nu.into(),
                            r.rho.into(),
                            r.zero_hits.into(),
                            r.poles.into(),
                            r.e_order.into(),
                        ]);
                    }
                    Err(Error::DegenerateValueSet) => {
                        let r = normalize_rat(&f, &g, &ctx)?;
                        let s = groupstat::value_set_subspace(&ctx, &r, m, guards.enumeration)?;
                        report.push(vec![
                            ctx.q().into(),
                            ctx.n().into(),
                            ctx.psi_encoding().into(),
                            d.into(),
                            m.into(),
                            nu.into(),
                            0usize.into(),
                            0usize.into(),
                            Cell::Empty,
                            s.zero_hits.into(),
                            s.poles.into(),
                            Cell::Empty,
                        ]);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(report)
}

fn witness(opts: &Options) -> CliResult<Report> {
    let ctx = build_field(opts)?;
    let e = exponent(opts, &ctx)?;
    let guards = guards(opts)?;
    let mut report = Report::new(&["q", "n", "psi", "e", "d", "f", "g", "witness_m", "indistinguishable"]);
    header(&mut report, Command::Witness, Some(&ctx), opts.seed);
    for (f, g) in pairs(opts, &ctx, false)? {
        let m = tester::witness_profile(&ctx, &f, &g, e, guards.enumeration)?;
        if f == g && m.is_some() {
            report.fail("a witness was found for f = g");
        }
        report.push(vec![
            ctx.q().into(),
            ctx.n().into(),
            ctx.psi_encoding().into(),
            e.into(),
            degree(&f, &g).into(),
            f.to_encoding_string(&ctx).into(),
            g.to_encoding_string(&ctx).into(),
            m.into(),
            m.is_none().into(),
        ]);
    }
    Ok(report)
}

fn divlab(opts: &Options) -> CliResult<Report> {
    let q = opts.q.ok_or_else(|| config("--q is required"))?;
    let seed = opts.seed.ok_or_else(|| config("--seed is required for divlab"))?;
    let max_r = opts.r.unwrap_or(2);
    let counts = ffdiv::count_effective_divisors(q, max_r)?;
    let mut report = Report::new(&COUNT_COLUMNS);
    header(&mut report, Command::Divlab, None, Some(seed));
    report.meta("base_q", q);
    for r in 0..=max_r as usize {
        report.push(vec![
            q.into(),
            r.into(),
            counts.exact[r].into(),
            counts.cumulative[r].into(),
            counts.bound[r].into(),
        ]);
        if counts.cumulative[r] > counts.bound[r] {
            report.fail(format!("cumulative count exceeds q^(2r) at r = {r}"));
        }
    }

    let trials = opts.trials.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Sub-divisor enumeration stays small at degree 4.
    let tau_degree = 4;
    let all = ffdiv::effective_divisors_up_to(q, tau_degree);
    let mut tau_ok = 0;
    for _ in 0..trials {
        let d = ffdiv::random_effective_divisor(q, tau_degree, &mut rng);
        let exhaustive = all.iter().filter(|s| s.is_le(&d)).count() as u128;
        if ffdiv::tau(&d)? == exhaustive {
            tau_ok += 1;
        } else {
            report.fail(format!("tau({d}) disagrees with enumeration"));
        }
    }
    let mut degree_ok = 0;
    let mut bound_ok = 0;
    for _ in 0..trials {
        let f = ffdiv::random_ratfn(q, 6, &mut rng);
        if ffdiv::principal_divisor(&f)?.degree() == 0 {
            degree_ok += 1;
        } else {
            report.fail(format!("principal divisor of {f} has nonzero degree"));
        }
        let b = ffdiv::height_and_pole_bound(&f)?;
        if b.bound_ok && b.identity_holds {
            bound_ok += 1;
        } else {
            report.fail(format!("pole bound fails for {f}"));
        }
    }
    report.note(format!("tau matches sub-divisor enumeration: {tau_ok}/{trials}"));
    report.note(format!("principal divisors of degree 0: {degree_ok}/{trials}"));
    report.note(format!("deg (f)_inf = h <= 2h: {bound_ok}/{trials}"));
    Ok(report)
}

fn verify_all(opts: &Options) -> CliResult<Report> {
    let seed = opts.seed.ok_or_else(|| config("--seed is required for verify"))?;
    let mut report = Report::new(&["criterion", "name", "passed", "detail"]);
    header(&mut report, Command::Verify, None, Some(seed));
    for o in verify::run_all(seed) {
        if !o.passed {
            report.fail(format!("criterion {} ({})", o.id, o.name));
        }
        report.push(vec![(o.id as u32).into(), o.name.into(), o.passed.into(), o.detail.into()]);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Format;

    fn opts() -> Options {
        Options {
            q: Some(2),
            n: Some(4),
            psi: None,
            e: None,
            d: None,
            c: None,
            nu: None,
            m: None,
            f: None,
            g: None,
            seed: None,
            trials: None,
            r: None,
            format: Format::Csv,
            out: None,
            guard_bits: 24,
        }
    }

    fn cell<'a>(r: &'a Report, row: usize, col: &str) -> &'a Cell {
        let i = r.columns.iter().position(|c| *c == col).unwrap();
        &r.rows[row][i]
    }

    #[test]
    fn field_row() {
        let r = run(Command::Field, &opts()).unwrap();
        assert_eq!(cell(&r, 0, "psi"), &Cell::Int(19));
        assert_eq!(cell(&r, 0, "modulus"), &Cell::Text("1,1,0,0,1".into()));
        assert_eq!(cell(&r, 0, "factorization"), &Cell::Text("3*5".into()));
    }

    #[test]
    fn psi_override() {
        let mut o = opts();
        o.n = None;
        o.psi = Some("1,0,0,1,1".into());
        let r = run(Command::Field, &o).unwrap();
        assert_eq!(cell(&r, 0, "psi"), &Cell::Int(25));
        o.psi = Some("1,0,0,0,1".into());
        assert_eq!(run(Command::Field, &o).unwrap_err().exit_code(), 2);
        o.psi = Some("1,1,0,0,1".into());
        o.n = Some(5);
        assert_eq!(run(Command::Field, &o).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn etest_equal_pair() {
        let mut o = opts();
        o.n = Some(12);
        o.e = Some(13);
        o.f = Some("3,0,1".into());
        o.g = Some("3,0,1".into());
        let r = run(Command::Etest, &o).unwrap();
        assert!(r.failures.is_empty());
        for row in 0..r.rows.len() {
            assert_eq!(cell(&r, row, "verdict"), &Cell::Text("equal-or-indistinguishable".into()));
        }
    }

    #[test]
    fn etest_distinct_pair() {
        let mut o = opts();
        o.n = Some(12);
        o.e = Some(13);
        o.f = Some("3,0,1".into());
        o.g = Some("5,1,1".into());
        o.m = Some(5);
        let r = run(Command::Etest, &o).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert_eq!(cell(&r, 0, "verdict"), &Cell::Text("distinct".into()));
        assert_eq!(cell(&r, 0, "guaranteed"), &Cell::Bool(true));
        assert_eq!(cell(&r, 1, "m"), &Cell::Empty);
    }

    #[test]
    fn config_errors() {
        let mut o = opts();
        o.e = Some(4);
        assert_eq!(run(Command::Etest, &o).unwrap_err().exit_code(), 2);
        o.e = Some(5);
        assert_eq!(run(Command::Etest, &o).unwrap_err().exit_code(), 2, "seed missing");
        o.f = Some("0,1".into());
        assert_eq!(run(Command::Etest, &o).unwrap_err().exit_code(), 2, "g missing");
        assert_eq!(run(Command::Verify, &opts()).unwrap_err().exit_code(), 2);
        let mut o = opts();
        o.q = Some(4);
        assert_eq!(run(Command::Field, &o).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn guard_exceeded() {
        let mut o = opts();
        o.n = Some(20);
        o.seed = Some(1);
        o.m = Some(20);
        o.guard_bits = 10;
        assert_eq!(run(Command::Ers, &o).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn divlab_counts() {
        let mut o = opts();
        o.seed = Some(3);
        o.trials = Some(10);
        let r = run(Command::Divlab, &o).unwrap();
        assert!(r.failures.is_empty());
        let cum: Vec<&Cell> = (0..3).map(|i| cell(&r, i, "count_cumulative")).collect();
        assert_eq!(cum, [&Cell::Int(1), &Cell::Int(4), &Cell::Int(11)]);
        assert_eq!(cell(&r, 2, "bound_q2r"), &Cell::Int(16));
    }

    #[test]
    fn witness_rows() {
        let mut o = opts();
        o.e = Some(5);
        o.f = Some("0,1".into());
        o.g = Some("1,1".into());
        let r = run(Command::Witness, &o).unwrap();
        assert_eq!(cell(&r, 0, "witness_m"), &Cell::Int(1));
        o.g = o.f.clone();
        let r = run(Command::Witness, &o).unwrap();
        assert_eq!(cell(&r, 0, "witness_m"), &Cell::Empty);
        assert_eq!(cell(&r, 0, "indistinguishable"), &Cell::Bool(true));
    }

    #[test]
    fn ers_and_pset_tables() {
        let mut o = opts();
        o.n = Some(10);
        o.seed = Some(9);
        o.d = Some(2);
        let r = run(Command::Ers, &o).unwrap();
        assert_eq!(r.rows.len(), 10);
        assert!(r.failures.is_empty());
        let r = run(Command::Pset, &o).unwrap();
        assert_eq!(r.rows.len(), 8);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn equal_pair_growth_is_flat() {
        let mut o = opts();
        o.f = Some("2,1".into());
        o.g = Some("2,1".into());
        o.m = Some(2);
        let r = run(Command::Pset, &o).unwrap();
        assert_eq!(cell(&r, 0, "sizeAnu"), &Cell::Int(1));
        assert_eq!(cell(&r, 1, "rho"), &Cell::Float(0.0));
    }
}
