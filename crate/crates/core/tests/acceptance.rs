//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::time::Instant;

use cycpres::arith::{abs_pow_diff, gcd};
use cycpres::classify::{classify, derive, euler_characteristic, fix_order, fixed_point_free, Kind, ParamsM};
use cycpres::metastruct::{b_presentation, gbar_params, h242_order, j_presentation, GnklParams};
use cycpres::oracle::verify::{g_cyclic, g_presentation, verify_example_one, verify_gnkl, VerifyConfig};
use cycpres::oracle::{
    abelianization, cyclic_group_order, element_orders, fixed_coset_counts_e, group_order, regular_rep_cyclic,
    shift_model_fix_order_e,
    todd_coxeter_with, EnumOptions, Strategy,
};
use cycpres::classify::{cyclic_condition, finite_subgroup_bound};
use cycpres::par::{par_map, Execution};
use cycpres::words::{cyclic_presentation, e_presentation, Word, T};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Criterion 3 reaches `|E| = 8 · 20000`; the cap leaves room for
/// redundant cosets during enumeration.
const LARGE_CAP: usize = 2_000_000;
/// Cap for the index of `<t>` when the regular enumeration overflows.
const INDEX_CAP: usize = 8_000_000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, checked: usize, what: &str) -> Outcome {
    if failures.is_empty() {
        Outcome {
            ok: true,
            detail: format!("{checked} {what} checked"),
        }
    } else {
        let shown: Vec<&String> = failures.iter().take(if std::env::var_os("ACCEPT_ALL").is_some() { usize::MAX } else { 5 }).collect();
        Outcome {
            ok: false,
            detail: format!("{} of {checked} {what} failed: {shown:?}", failures.len()),
        }
    }
}

fn opts(max_cosets: usize) -> EnumOptions {
    EnumOptions::with_max(max_cosets)
}

fn word(pairs: &[(u32, i64)]) -> Word {
    Word::from_pairs(pairs.iter().copied())
}

/// `(r, n, s, A)` with `|r|,|s| ≤ 4`, `n ≤ 8`, `(n,A) = (r,s) = 1`,
/// `0 < |r^n - s^n| ≤ 20000`.
fn theorem_a_tuples() -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for n in 1..=8i64 {
        for r in -4..=4i64 {
            for s in -4..=4i64 {
                if gcd(r, s) != 1 {
                    continue;
                }
                let mu = abs_pow_diff(r, s, n as u32);
                if mu.is_zero() || mu > BigInt::from(20_000) {
                    continue;
                }
                for a in (0..n).filter(|&a| gcd(n, a) == 1) {
                    out.push((r, n, s, a));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = verify_example_one(&VerifyConfig::default());
    let secs = start.elapsed().as_secs_f64();
    let fails: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status != cycpres::oracle::CheckStatus::Pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    let mut out = outcome(fails, report.checks.len(), "values");
    if secs >= 60.0 {
        out.ok = false;
        out.detail.push_str(&format!("; took {secs:.1} s, limit 60 s"));
    }
    out
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut cases = Vec::new();
    for rho in -3..=3i64 {
        for sigma in -3..=3i64 {
            if gcd(rho, sigma) != 1 {
                continue;
            }
            for m in 1..=5u32 {
                let order = abs_pow_diff(rho, sigma, m);
                if !order.is_zero() && order <= BigInt::from(5000) {
                    cases.push((rho, sigma, m, order));
                }
            }
        }
    }
    let results = par_map(Execution::Parallel, &cases, |(rho, sigma, m, order)| {
        let pres = cyclic_presentation(*m, &word(&[(0, *rho), (1 % *m, -*sigma)])).unwrap();
        let got = group_order(&pres, &opts(200_000));
        let ab = abelianization(&pres);
        if got.as_ref() != Some(order) || !ab.is_cyclic() || ab.order().as_ref() != Some(order) {
            Some(format!("G_{m}(x_0^{rho} x_1^{}): order {got:?}, ab {ab}, expected {order}", -sigma))
        } else {
            None
        }
    });
    let mut out = outcome(results.into_iter().flatten().collect(), cases.len(), "groups");
    let secs = start.elapsed().as_secs_f64();
    if secs >= 120.0 {
        out.ok = false;
        out.detail.push_str(&format!("; took {secs:.1} s, limit 120 s"));
    }
    out
}

fn criterion_3(tuples: &[(i64, i64, i64, i64)]) -> Outcome {
    let results = par_map(Execution::Parallel, tuples, |&(r, n, s, a)| {
        let expected = abs_pow_diff(r, s, n as u32) * n;
        let pres = e_presentation(r, n, s, a);
        // t ↦ 1, y ↦ 0 maps E onto Z_n, so |t| = n and |E| = n [E : <t>].
        let got = group_order(&pres, &opts(LARGE_CAP)).or_else(|| {
            let index_opts = EnumOptions {
                max_cosets: INDEX_CAP,
                strategy: Strategy::Hlt,
            };
            todd_coxeter_with(&pres, &[Word::gen(T)], &index_opts)
                .ok()
                .map(|table| BigInt::from(table.num_cosets()) * n)
        });
        (got.as_ref() != Some(&expected)).then(|| format!("E({r},{n},{s},{a}): {got:?} vs {expected}"))
    });
    outcome(results.into_iter().flatten().collect(), tuples.len(), "tuples")
}

/// `E(r,n,s,A) ≅ E(-r,n,-s,A)` carries `G` for `f` to `G` for `-f`, so the
/// `r ≥ 0` half of the sweep covers every group.
fn criterion_4(tuples: &[(i64, i64, i64, i64)]) -> Outcome {
    let mut params = Vec::new();
    for &(r, n, s, a) in tuples.iter().filter(|t| t.0 >= 0) {
        for f in 0..n {
            if let Ok(p) = ParamsM::new(r, n, s, f, a) {
                if classify(&p).map(|c| c.kind.is_finite()).unwrap_or(false) {
                    params.push(p);
                }
            }
        }
    }
    let results = par_map(Execution::Parallel, &params, |p| {
        let dec = match gbar_params(p) {
            Ok(d) => d,
            Err(e) => return Some(format!("{p}: {e}")),
        };
        let g = g_presentation(p);
        let order_g = cyclic_group_order(&g_cyclic(p), &opts(INDEX_CAP));
        let b = match b_presentation(&dec.factor) {
            Ok(b) => b,
            Err(e) => return Some(format!("{p}: {e}")),
        };
        let order_b = group_order(&b, &opts(LARGE_CAP));
        let (ab_g, ab_b) = (abelianization(&g), abelianization(&b));
        let predicted = dec.factor.order().map(|o| o * dec.copies);
        let ok = dec.copies == 1
            && dec.free_rank == 0
            && order_g.is_some()
            && order_g == order_b
            && order_g == predicted
            && ab_g == ab_b;
        (!ok).then(|| {
            format!(
                "{p}: |G| {order_g:?}, |{}| {order_b:?}, copies {}, free rank {}, ab {ab_g} vs {ab_b}",
                dec.factor, dec.copies, dec.free_rank
            )
        })
    });
    outcome(results.into_iter().flatten().collect(), params.len(), "(tuple, f) pairs")
}

fn criterion_5() -> Outcome {
    let mut fails = Vec::new();
    let cfg = VerifyConfig::default();
    let g6 = cyclic_presentation(6, &word(&[(0, 1), (2, 1), (5, 1)])).unwrap();
    let b: cycpres::words::FinitePresentation = "< a, b | a^21, b*a*b^-1*a^-16, b^3*a^-7 >".parse().unwrap();
    let order = group_order(&g6, &opts(200_000));
    if order != Some(BigInt::from(63)) || abelianization(&g6) != abelianization(&b) {
        fails.push(format!("G_6(x_0x_2x_5): order {order:?}, ab {} vs {}", abelianization(&g6), abelianization(&b)));
    }
    let report = verify_gnkl(&GnklParams::new(6, 2, 5).unwrap(), &cfg);
    if !report.passed() {
        fails.push(report.to_string());
    }
    for n in 4..=6i64 {
        let expected = BigInt::from(2).pow(n as u32) - BigInt::from(-1).pow(n as u32);
        let pres = cyclic_presentation(n as u32, &GnklParams::new(n, 0, 1).unwrap().word()).unwrap();
        let got = group_order(&pres, &opts(200_000));
        if got.as_ref() != Some(&expected) {
            fails.push(format!("G_{n}(x_0^2 x_1): {got:?} vs {expected}"));
        }
        let report = verify_gnkl(&GnklParams::new(n, 0, 1).unwrap(), &cfg);
        if !report.passed() {
            fails.push(report.to_string());
        }
    }
    let g12 = cyclic_presentation(12, &word(&[(0, 1), (4, 1), (11, 1)])).unwrap();
    let ab = abelianization(&g12);
    if ab.invariant_factors != vec![BigInt::from(5)] || ab.free_rank != 2 {
        fails.push(format!("G_12(x_0x_4x_11): ab {ab}"));
    }
    outcome(fails, 8, "values")
}

fn criterion_6(tuples: &[(i64, i64, i64, i64)]) -> Outcome {
    let nontrivial: Vec<_> = tuples
        .iter()
        .copied()
        .filter(|&(r, n, s, _)| abs_pow_diff(r, s, n as u32) > BigInt::one())
        .collect();
    let results = par_map(Execution::Parallel, &nontrivial, |&(r, n, s, a)| {
        let mut fails = Vec::new();
        let counts = match fixed_coset_counts_e(r, n, s, a, &opts(INDEX_CAP)) {
            Ok(c) => c,
            Err(e) => return vec![format!("E({r},{n},{s},{a}): {e}")],
        };
        // Same E up to y ↦ y^-1, with f = 0 always admissible.
        let p = ParamsM::new(r.abs(), n, if r < 0 { -s } else { s }, 0, a).unwrap();
        for j in 0..n {
            let d = gcd(n, j) as u32;
            let formula = abs_pow_diff(r, s, d);
            let classified = fix_order(&p, j).ok();
            let cosets = BigInt::from(counts[j as usize]);
            let model = shift_model_fix_order_e(r, n, s, j).ok();
            let free = fixed_point_free(&p, j).ok();
            let free_expected = gcd(n, j) == 1 && (r - s).abs() == 1;
            let ok = classified.as_ref() == Some(&formula)
                && cosets == formula
                && model.as_ref() == Some(&formula)
                && free == Some(free_expected)
                && free_expected == cosets.is_one();
            if !ok {
                fails.push(format!(
                    "({r},{n},{s},{a}) j={j}: formula {formula}, fix_order {classified:?}, cosets {cosets}, model {model:?}, fpf {free:?}"
                ));
            }
        }
        fails
    });
    let checked = nontrivial.iter().map(|t| t.1 as usize).sum();
    outcome(results.into_iter().flatten().collect(), checked, "(tuple, j) pairs")
}

fn criterion_7() -> Outcome {
    let mut params = Vec::new();
    for n in 1..=12i64 {
        for r in 0..=6i64 {
            for s in -6..=6i64 {
                for f in (0..n).filter(|f| (f * (r - s)).rem_euclid(n) == 0) {
                    for a in 0..n {
                        params.push(ParamsM::new(r, n, s, f, a).unwrap());
                    }
                }
            }
        }
    }
    params.retain(|p| !derive(p).mu.is_zero());
    let results = par_map(Execution::Parallel, &params, |p| {
        let d = derive(p);
        let c = match classify(p) {
            Ok(c) => c,
            Err(e) => return (Some(format!("{p}: {e}")), None),
        };
        let chi = euler_characteristic(p);
        let sign_ok = match c.kind {
            Kind::Finite { .. } => chi.is_positive(),
            Kind::VirtuallyInfiniteCyclic => chi.is_zero(),
            Kind::VirtuallyNonabelianFree => chi.is_negative(),
            Kind::EqualPowers { .. } => false,
        };
        let mu_ok = p.r() * p.s() == 0 || p.a() == 0 || d.mu >= BigInt::from(3);
        (
            (!sign_ok).then(|| format!("{p}: kind {}, χ {chi}", c.kind.name())),
            (!mu_ok).then(|| format!("{p}: μ = {}", d.mu)),
        )
    });
    let (sign, mu): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let sign: Vec<String> = sign.into_iter().flatten().collect();
    let mu: Vec<String> = mu.into_iter().flatten().collect();
    let sign_part = outcome(sign, params.len(), "kind/χ-sign agreements");
    let mu_part = outcome(mu, params.len(), "μ ≥ 3 bounds");
    Outcome {
        ok: sign_part.ok && mu_part.ok,
        detail: format!("{}; {}", sign_part.detail, mu_part.detail),
    }
}

fn criterion_8() -> Outcome {
    let mut fails = Vec::new();
    for (m, k, expected) in [(3, -2, 60), (5, -1, 500), (5, -2, 500)] {
        let got = group_order(&j_presentation(4, m, k), &opts(200_000));
        if got != Some(BigInt::from(expected)) {
            fails.push(format!("J_4({m},{k}): {got:?} vs {expected}"));
        }
    }
    for k in [2u32, 3] {
        let j = j_presentation(4, 2 * i64::from(k) - 1, -2);
        let got = group_order(&j, &opts(200_000));
        if got != Some(h242_order(k) * 4) {
            fails.push(format!("h242_order({k}) · 4 = {} vs J_4({},-2) = {got:?}", h242_order(k) * 4, 2 * k - 1));
        }
    }
    if h242_order(2) != BigInt::from(15) {
        fails.push(format!("h242_order(2) = {}", h242_order(2)));
    }
    let mut hits = Vec::new();
    for n in 2..=12i64 {
        for r in -8..=8i64 {
            for s in -8..=8i64 {
                if r * s != 0 && abs_pow_diff(r, s, n as u32) * n == BigInt::from(500) {
                    hits.push((r, n, s));
                }
            }
        }
    }
    if !hits.is_empty() {
        fails.push(format!("500 = n|r^n - s^n| for {hits:?}"));
    }
    outcome(fails, 7, "values")
}

fn criterion_9() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut params = Vec::new();
    for n in 1..=8i64 {
        for r in 0..=4i64 {
            for s in -4..=4i64 {
                for f in (0..n).filter(|f| (f * (r - s)).rem_euclid(n) == 0) {
                    for a in 0..n {
                        let p = ParamsM::new(r, n, s, f, a).unwrap();
                        let finite_small = classify(&p)
                            .ok()
                            .and_then(|c| c.kind.order_g().cloned())
                            .is_some_and(|o| o > BigInt::one() && o <= BigInt::from(cfg.element_cap));
                        if finite_small && cyclic_condition(&p) {
                            params.push(p);
                        }
                    }
                }
            }
        }
    }
    let results = par_map(Execution::Parallel, &params, |p| {
        let l = finite_subgroup_bound(p).ok()?;
        let orders = regular_rep_cyclic(&g_cyclic(p), &opts(INDEX_CAP), cfg.element_cap)
            .and_then(|pg| element_orders(&pg));
        match orders {
            Ok(orders) => {
                let bad: Vec<u64> = orders
                    .into_iter()
                    .filter(|&o| !l.is_multiple_of(&BigInt::from(o)))
                    .collect();
                (!bad.is_empty()).then(|| format!("{p}: orders {:?} do not divide l = {l}", &bad[..bad.len().min(3)]))
            }
            Err(e) => Some(format!("{p}: {e}")),
        }
    });
    outcome(results.into_iter().flatten().collect(), params.len(), "finite tuples")
}

fn main() {
    let tuples = theorem_a_tuples();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 Example 1 regression", Box::new(criterion_1)),
        ("2 cyclic two-letter sweep", Box::new(criterion_2)),
        ("3 E order sweep", Box::new(|| criterion_3(&tuples))),
        ("4 G versus metacyclic factor", Box::new(|| criterion_4(&tuples))),
        ("5 three-letter spot values", Box::new(criterion_5)),
        ("6 fixed-point triple agreement", Box::new(|| criterion_6(&tuples))),
        ("7 Euler characteristic trichotomy", Box::new(criterion_7)),
        ("8 comparison values", Box::new(criterion_8)),
        ("9 finite subgroup exponent bound", Box::new(criterion_9)),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.starts_with(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {} ({:.1} s)", out.detail, start.elapsed().as_secs_f64());
        if !out.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
