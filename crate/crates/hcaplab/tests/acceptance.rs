//! Acceptance suite: every release criterion at its stated tolerance, one
//! pass/fail line per criterion. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines.

use hcaplab::capacity::{
    bound_constants, hcap_wos, hcap_zipper, strip_exit_prob, strip_exit_prob_mc, WosParams,
};
use hcaplab::cli::run_from;
use hcaplab::cover::{cover_sums, coverage_check, default_eps_stop, default_grid, greedy_cover};
use hcaplab::hsiz::hsiz_quadtree;
use hcaplab::hull::{Hull, Primitive};
use hcaplab::verify::{corpus, theorem1_corpus, TheoremReport, Verdict, VerifyBudget};
use hcaplab::rng::path_rng;
use rand::Rng;
use std::f64::consts::PI;

const CORPUS_SEED: u64 = 2026;
const CORPUS_SIZE: usize = 100;

struct Outcome {
    criterion: usize,
    pass: bool,
    detail: String,
}

fn check(criterion: usize, pass: bool, detail: String, out: &mut Vec<Outcome>) {
    println!(
        "criterion {criterion:2}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    out.push(Outcome {
        criterion,
        pass,
        detail,
    });
}

fn slit() -> Hull {
    Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 })
}

fn rect(x_lo: f64, x_hi: f64, h: f64) -> Hull {
    Hull::single(Primitive::Rect { x_lo, x_hi, h })
}

/// 1. Slit capacity: WoS at n = 1e6 and the zipper both reach the exact 1/2
///    within 1% + 3 sigma.
fn criterion_1(out: &mut Vec<Outcome>) {
    let est = hcap_wos(
        &slit(),
        &WosParams {
            n_paths: 1_000_000,
            y_start: 32.0,
            eps: 1e-4,
            seed: 7,
        },
    )
    .unwrap();
    let wos_tol = 0.01 * 0.5 + 3.0 * est.std_error;
    let wos_ok = (est.value - 0.5).abs() <= wos_tol;
    let zip = hcap_zipper(&slit(), 1e-3).unwrap().estimate;
    let zip_ok = (zip.value - 0.5).abs() <= 0.01 * 0.5;
    check(
        1,
        wos_ok && zip_ok,
        format!(
            "wos {:.6} (|d|={:.2e} <= {:.2e}), zipper {:.6}",
            est.value,
            (est.value - 0.5).abs(),
            wos_tol,
            zip.value
        ),
        out,
    );
}

/// 2. Half-disk capacity 2 within 1% + 3 sigma at n = 1e6.
fn criterion_2(out: &mut Vec<Outcome>) {
    let hull = Hull::single(Primitive::HalfDisk {
        x0: 0.0,
        r: 2f64.sqrt(),
    });
    let est = hcap_wos(
        &hull,
        &WosParams {
            n_paths: 1_000_000,
            y_start: 32.0,
            eps: 1e-4,
            seed: 11,
        },
    )
    .unwrap();
    let tol = 0.01 * 2.0 + 3.0 * est.std_error;
    check(
        2,
        (est.value - 2.0).abs() <= tol,
        format!("wos {:.6}, |d| = {:.2e} <= {:.2e}", est.value, (est.value - 2.0).abs(), tol),
        out,
    );
}

/// 3. Rectangle hsiz: quadtree at tol = 1e-3 hits pi + 8 within tol.
fn criterion_3(out: &mut Vec<Outcome>) {
    let area = hsiz_quadtree(&rect(-2.0, 2.0, 1.0), 1e-3).unwrap();
    let gap = (area.value - (PI + 8.0)).abs();
    check(
        3,
        gap <= 1e-3,
        format!(
            "quadtree {:.8} vs pi+8 = {:.8}, |d| = {gap:.2e} (certified +-{:.2e}, {} cells)",
            area.value,
            PI + 8.0,
            area.error_bound,
            area.cells_or_samples
        ),
        out,
    );
}

/// 4. Constant chain: R(i,1) and R(i,2) estimates stay under 2 and 7/2, and
///    R(i,2) exceeds the inscribed unit half-disk.
fn criterion_4(out: &mut Vec<Outcome>) {
    let r1 = rect(-1.0, 1.0, 1.0);
    let r2 = rect(-2.0, 2.0, 1.0);
    let e1 = hcap_wos(&r1, &WosParams::for_hull(&r1, 1_000_000, 13)).unwrap();
    let e2 = hcap_wos(&r2, &WosParams::for_hull(&r2, 1_000_000, 17)).unwrap();
    let ok = e1.value + 3.0 * e1.std_error < 2.0
        && e2.value + 3.0 * e2.std_error < 3.5
        && e2.value > 1.0;
    check(
        4,
        ok,
        format!(
            "hcap(R(i,1)) = {:.4} + 3s < 2; hcap(R(i,2)) = {:.4} + 3s < 3.5 and > 1",
            e1.value, e2.value
        ),
        out,
    );
}

/// 5. rho constants at c = 8/5 and the exit-probability identity.
fn criterion_5(out: &mut Vec<Outcome>) {
    let b = bound_constants(8.0 / 5.0);
    let bound = b.rho * b.rho / (PI + 64.0 / 5.0);
    let identity = (b.exit_prob - 2f64.sqrt() * b.rho).abs();
    let ok = bound > 1.0 / 66.0 && identity <= 1e-12;
    check(
        5,
        ok,
        format!(
            "rho^2/(pi+64/5) = {bound:.12} > 1/66 = {:.12}; |exit - sqrt2 rho| = {identity:.2e}",
            1.0 / 66.0
        ),
        out,
    );
}

/// 6. Strip exit probability MC at n = 1e6 matches the formula within 3 sigma
///    for c in {1/2, 1, 2}.
fn criterion_6(out: &mut Vec<Outcome>) {
    let mut pass = true;
    let mut details = Vec::new();
    for (c, seed) in [(0.5, 19u64), (1.0, 23), (2.0, 29)] {
        let est = strip_exit_prob_mc(c, 1_000_000, 1e-6, seed).unwrap();
        let exact = strip_exit_prob(c);
        let z = (est.value - exact).abs() / est.std_error;
        pass &= z <= 3.0;
        details.push(format!("c={c}: {:.5} vs {:.5} ({z:.2} sigma)", est.value, exact));
    }
    check(6, pass, details.join("; "), out);
}

/// 7. Theorem sandwich on the seeded 100-hull corpus: no violations.
fn criterion_7(reports: &[TheoremReport], out: &mut Vec<Outcome>) {
    let pass_n = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let inconclusive = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Inconclusive)
        .count();
    let violations: Vec<&TheoremReport> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Violated)
        .collect();
    check(
        7,
        violations.is_empty(),
        format!(
            "{pass_n} pass, {inconclusive} inconclusive, {} violated of {}",
            violations.len(),
            reports.len()
        ),
        out,
    );
}

/// 8. Covering construction on the corpus: disjoint intervals, monotone
///    heights, sampled coverage, and the area sandwich at c = 1.
fn criterion_8(
    hulls: &[(String, Hull)],
    reports: &[TheoremReport],
    out: &mut Vec<Outcome>,
) {
    let mut failures = Vec::new();
    for ((id, hull), report) in hulls.iter().zip(reports) {
        let cover = greedy_cover(hull, 1.0, default_grid(hull), default_eps_stop(hull));
        let cov = coverage_check(hull, &cover, 10_000, 0xC0FE ^ report.hcap.seed);
        if !cov.pass() {
            failures.push(format!(
                "{id}: coverage {} violations, disjoint {}, monotone {}",
                cov.violations.len(),
                cov.disjoint_ok,
                cov.monotone_ok
            ));
            continue;
        }
        let sums = cover_sums(&cover);
        let hsiz = &report.hsiz;
        // grid-level coverage can leak area near rectangle edges; allow the
        // certified area error, the eps_stop truncation and an edge strip of
        // width 2*grid per element
        let edge_leak: f64 = 2.0 * cover.grid
            * cover
                .elements
                .iter()
                .map(|e| 2.0 * e.z.y + 2.0 * cover.grid)
                .sum::<f64>();
        let slack = hsiz.error_bound + cover.truncation_hsiz + edge_leak + 1e-9;
        if !(sums.hsiz_lo <= hsiz.value + slack && hsiz.value - slack <= sums.hsiz_hi) {
            failures.push(format!(
                "{id}: sandwich {:.4} <= {:.4} <= {:.4} fails (slack {slack:.2e})",
                sums.hsiz_lo, hsiz.value, sums.hsiz_hi
            ));
        }
    }
    check(
        8,
        failures.is_empty(),
        if failures.is_empty() {
            format!("covers pass on all {} corpus hulls", hulls.len())
        } else {
            failures.join("; ")
        },
        out,
    );
}

/// 9. Property suite: the lower bound on every corpus hull with slit
///    saturation, the capacity inequality on 50 rect pairs, and the scaling
///    law for r in {1/2, 2}.
fn criterion_9(reports: &[TheoremReport], hulls: &[(String, Hull)], out: &mut Vec<Outcome>) {
    let mut failures = Vec::new();
    // lower bound from the already-computed corpus estimates
    for ((id, hull), r) in hulls.iter().zip(reports) {
        let floor = 0.5 * hull.sup_im() * hull.sup_im();
        if r.hcap.value + r.hcap.half_width() < floor {
            failures.push(format!("{id}: {} < Im^2/2 = {floor}", r.hcap.value));
        }
    }
    // slit saturation at n = 1e6
    let sat = hcap_wos(
        &slit(),
        &WosParams {
            n_paths: 1_000_000,
            y_start: 8.0,
            eps: 1e-4,
            seed: 31,
        },
    )
    .unwrap();
    if (sat.value - 0.5).abs() > sat.half_width() {
        failures.push(format!(
            "slit saturation: |{} - 0.5| > {}",
            sat.value,
            sat.half_width()
        ));
    }
    // capacity inequality on 50 random overlapping rectangle pairs
    use rayon::prelude::*;
    let pair_failures: Vec<String> = (0..50u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = path_rng(0xACCE97, i);
            let a1 = -3.0 + 3.0 * rng.gen::<f64>();
            let w1 = 0.5 + 2.5 * rng.gen::<f64>();
            let h1 = 0.3 + 1.2 * rng.gen::<f64>();
            let a2 = a1 + 0.8 * w1 * rng.gen::<f64>();
            let w2 = 0.5 + 2.5 * rng.gen::<f64>();
            let h2 = 0.3 + 1.2 * rng.gen::<f64>();
            let r1 = Primitive::Rect { x_lo: a1, x_hi: a1 + w1, h: h1 };
            let r2 = Primitive::Rect { x_lo: a2, x_hi: a2 + w2, h: h2 };
            let inter = Primitive::Rect {
                x_lo: a2,
                x_hi: (a1 + w1).min(a2 + w2),
                h: h1.min(h2),
            };
            let hu = Hull::new(vec![r1.clone(), r2.clone()]).unwrap();
            let n = 30_000;
            let y = WosParams::for_hull(&hu, 1, 0).y_start;
            let with = |hull: &Hull, s: u64| {
                let params = WosParams {
                    n_paths: n,
                    y_start: y.max(4.0 * hull.sup_im()),
                    eps: 1e-4 * hull.sup_im(),
                    seed: s,
                };
                hcap_wos(hull, &params).unwrap()
            };
            let e1 = with(&Hull::single(r1), 4 * i);
            let e2 = with(&Hull::single(r2), 4 * i + 1);
            let eu = with(&hu, 4 * i + 2);
            let ei = with(&Hull::single(inter), 4 * i + 3);
            let lhs = eu.value - e2.value;
            let rhs = e1.value - ei.value;
            let sigma = (e1.std_error.powi(2)
                + e2.std_error.powi(2)
                + eu.std_error.powi(2)
                + ei.std_error.powi(2))
            .sqrt();
            let allow = 3.0 * sigma
                + e1.bias_bound
                + e2.bias_bound
                + eu.bias_bound
                + ei.bias_bound;
            if lhs <= rhs + allow {
                None
            } else {
                Some(format!("pair {i}: {lhs:.4} > {rhs:.4} + {allow:.4}"))
            }
        })
        .collect();
    failures.extend(pair_failures);
    // scaling law on the slit with exact references
    for (r, seed) in [(0.5_f64, 37u64), (2.0, 41)] {
        let scaled = slit().scale(r);
        let est = hcap_wos(&scaled, &WosParams::for_hull(&scaled, 300_000, seed)).unwrap();
        let target = r * r * 0.5;
        if (est.value - target).abs() > 3.0 * est.std_error + est.bias_bound {
            failures.push(format!(
                "scaling r={r}: {} vs {target} (3s+bias {})",
                est.value,
                3.0 * est.std_error + est.bias_bound
            ));
        }
    }
    check(
        9,
        failures.is_empty(),
        if failures.is_empty() {
            "lower bound on 100 hulls; slit saturation; 50 capacity-inequality pairs; scaling".into()
        } else {
            failures.join("; ")
        },
        out,
    );
}

/// 10. Determinism: bit-identical estimates and byte-identical CLI output at
///     any worker count.
fn criterion_10(out: &mut Vec<Outcome>) {
    let hull = rect(-1.0, 1.0, 1.0);
    let params = WosParams::for_hull(&hull, 100_000, 43);
    let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let pool2 = rayon::ThreadPoolBuilder::new().num_threads(2).build().unwrap();
    let a = pool1.install(|| hcap_wos(&hull, &params).unwrap());
    let b = pool2.install(|| hcap_wos(&hull, &params).unwrap());
    let wos_ok = a.value.to_bits() == b.value.to_bits()
        && a.std_error.to_bits() == b.std_error.to_bits();
    let qa = pool1.install(|| hsiz_quadtree(&hull, 1e-3).unwrap());
    let qb = pool2.install(|| hsiz_quadtree(&hull, 1e-3).unwrap());
    let quad_ok =
        qa.value.to_bits() == qb.value.to_bits() && qa.cells_or_samples == qb.cells_or_samples;
    // CLI: identical config + seed => byte-identical files
    let dir = tempfile::tempdir().unwrap();
    let hull_path = dir.path().join("slit.json");
    std::fs::write(
        &hull_path,
        r#"{"primitives": [{"kind": "vslit", "x0": 0.0, "h": 1.0}]}"#,
    )
    .unwrap();
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    for (o, w) in [(&out1, "1"), (&out2, "2")] {
        let code = run_from([
            "hcaplab",
            "hcap",
            "--method",
            "wos",
            "--n",
            "2e4",
            "--seed",
            "7",
            "--workers",
            w,
            "--out",
            &o.to_string_lossy(),
            &hull_path.to_string_lossy(),
        ]);
        assert_eq!(code, 0);
    }
    let cli_ok = std::fs::read(&out1).unwrap() == std::fs::read(&out2).unwrap();
    check(
        10,
        wos_ok && quad_ok && cli_ok,
        format!("wos bit-identical: {wos_ok}; quadtree bit-identical: {quad_ok}; cli bytes: {cli_ok}"),
        out,
    );
}

#[test]
fn acceptance() {
    let mut outcomes = Vec::new();
    criterion_1(&mut outcomes);
    criterion_2(&mut outcomes);
    criterion_3(&mut outcomes);
    criterion_4(&mut outcomes);
    criterion_5(&mut outcomes);
    criterion_6(&mut outcomes);

    let hulls = corpus(CORPUS_SEED, CORPUS_SIZE);
    let reports = theorem1_corpus(&hulls, &VerifyBudget::default(), 7);
    criterion_7(&reports, &mut outcomes);
    criterion_8(&hulls, &reports, &mut outcomes);
    criterion_9(&reports, &hulls, &mut outcomes);
    criterion_10(&mut outcomes);

    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| format!("criterion {}: {}", o.criterion, o.detail))
        .collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
