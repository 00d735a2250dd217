//! End-to-end acceptance run. Prints one line per criterion and fails if any
//! criterion fails.

use std::f64::consts::{LN_2, PI, TAU};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypcover::experiments::{
    self, median, summarize_widths, sweep_dominance, sweep_table1, sweep_width, RowConfig, SweepGrid, WidthKind,
};
use hypcover_core::generator::{generate, sample_coordinates};
use hypcover_core::geometry::*;
use hypcover_core::kernel::reduce_dominance_exhaustive;
use hypcover_core::solver::{vc_brute_force, vc_hybrid, Embedding, HybridConfig};
use hypcover_core::{Graph, ModelParams, Unbounded};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn params(n: usize) -> ModelParams {
    ModelParams::new(n, 0.75, 8.0).unwrap()
}

/// 300 Erdős–Rényi graphs, n in 1..=14, 100 each at p = 0.1, 0.3, 0.5.
fn random_suite() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..300)
        .map(|i| {
            let p = [0.1, 0.3, 0.5][i % 3];
            let n = rng.gen_range(1..=14);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).0
        })
        .collect()
}

fn opt(g: &Graph) -> usize {
    vc_brute_force(g).unwrap().size()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cfg = HybridConfig::default();
    let mut mismatches = 0;
    let suite = random_suite();
    for g in &suite {
        if vc_hybrid(g, None, &cfg, &Unbounded).unwrap().size() != opt(g) {
            mismatches += 1;
        }
    }
    for seed in 0..20 {
        let s = generate(&params(60), seed).unwrap();
        if vc_hybrid(&s.graph, Some(Embedding::of(&s)), &cfg, &Unbounded).unwrap().size() != opt(&s.graph) {
            mismatches += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 120.0,
        format!("{mismatches} mismatches over {} random + 20 hyperbolic graphs, {secs:.1}s", suite.len()),
    )
}

fn criterion_2() -> Outcome {
    let mut mismatches = 0;
    let suite = random_suite();
    for g in &suite {
        let k = reduce_dominance_exhaustive(g);
        if k.forced_cover.len() + opt(&k.reduced.graph) != opt(g) {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{mismatches} mismatches over {} graphs", suite.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let grid = SweepGrid {
        ns: vec![2000],
        seeds: (0..20).collect(),
        alpha: 0.75,
        kappa_bar: 8.0,
    };
    let rows = sweep_dominance(&grid, None, 4).unwrap();
    let ok = rows.iter().filter(|r| r.success).count();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        ok * 100 >= 80 * rows.len() && secs < 300.0,
        format!("inner disk fully dominant in {ok}/{} seeds, {secs:.1}s", rows.len()),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let ds = [8, 16, 32, 64];
    let grid = SweepGrid {
        ns: vec![1000, 4000, 16000],
        seeds: (0..10).collect(),
        alpha: 0.75,
        kappa_bar: 8.0,
    };
    let rows = sweep_width(&grid, &ds, 4).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for s in summarize_widths(&rows) {
        let (bound, label) = match s.kind {
            WidthKind::OuterBand => (10.0 * s.scale, format!("band n={}", s.n)),
            WidthKind::MaxDegree(d) if s.n == 16000 => (20.0 * s.scale, format!("d={d}")),
            WidthKind::MaxDegree(_) => continue,
        };
        pass &= s.median_width <= bound;
        parts.push(format!("{label}: {} <= {bound:.0}", s.median_width));
    }
    let secs = start.elapsed().as_secs_f64();
    pass &= secs < 900.0;
    outcome(pass, format!("{}, {secs:.1}s", parts.join("; ")))
}

fn criterion_5() -> Outcome {
    let mut degrees: Vec<f64> = (0..20)
        .map(|seed| generate(&params(979), seed).unwrap().graph.average_degree())
        .collect();
    let med = median(&mut degrees).unwrap();

    let p = params(100_000);
    let mut r: Vec<f64> = sample_coordinates(&p, 99).iter().map(|c| c.r).collect();
    r.sort_by(f64::total_cmp);
    let n = r.len() as f64;
    let ks = r
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = radial_cdf(x, &p).unwrap();
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max);
    outcome(
        (6.0..=11.0).contains(&med) && ks < 0.02,
        format!("median average degree {med:.3}, radial KS {ks:.4}"),
    )
}

fn criterion_6() -> Outcome {
    let grid = SweepGrid {
        ns: vec![5000],
        seeds: (0..20).collect(),
        alpha: 0.75,
        kappa_bar: 8.0,
    };
    let rows = sweep_table1(&grid, &RowConfig::deterministic(), 4).unwrap();
    let all_easy = rows.iter().all(|r| r.easy);
    let med = |f: fn(&experiments::ExperimentRow) -> Option<f64>| {
        let mut v: Vec<f64> = rows.iter().filter_map(f).collect();
        median(&mut v).unwrap_or(f64::NAN)
    };
    let (g, two, four) = (med(|r| r.greedy), med(|r| r.two_ad), med(|r| r.four_ad));
    outcome(
        all_easy && g <= 1.05 && four <= two && two <= g,
        format!("medians greedy {g:.4}, 2-adaptive {two:.4}, 4-adaptive {four:.4}; all exact: {all_easy}"),
    )
}

fn bisect_angle(r1: f64, r2: f64, target: f64) -> f64 {
    let d = |a: f64| hyp_distance(PolarPoint::new(r1, 0.0), PolarPoint::new(r2, a));
    let (mut lo, mut hi) = (0.0, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if d(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn geometry_checks() -> Vec<(&'static str, bool)> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let close = |a: f64, b: f64| (a - b).abs() < 1e-9;

    checks.push(("disk radius domain error at argument 1", disk_radius(1, 8.0 / PI).is_err()));
    checks.push((
        "disk radius at n=979",
        close(disk_radius(979, 8.0).unwrap(), 11.483_603_513_362_22),
    ));
    checks.push((
        "doubling n adds 2 ln 2",
        close(disk_radius(2000, 8.0).unwrap() - disk_radius(1000, 8.0).unwrap(), 2.0 * LN_2),
    ));

    let p = PolarPoint::new(3.7, 1.2);
    checks.push(("dist(p, p) = 0", hyp_distance(p, p) == 0.0));
    checks.push((
        "dist to origin equals radius",
        [0.5, 4.0, 11.0]
            .iter()
            .all(|&r| close(hyp_distance(PolarPoint::new(r, 0.0), PolarPoint::new(0.0, 2.5)), r)),
    ));
    checks.push(("distance symmetric on 1000 pairs", {
        (0..1000).all(|_| {
            let a = PolarPoint::new(rng.gen::<f64>() * 12.0, rng.gen::<f64>() * TAU);
            let b = PolarPoint::new(rng.gen::<f64>() * 12.0, rng.gen::<f64>() * TAU);
            hyp_distance(a, b) == hyp_distance(b, a)
        })
    }));

    let big_r = params(979).radius();
    checks.push(("theta from origin is pi", connection_angle(0.0, 5.0, big_r) == PI));
    let theta = connection_angle(big_r, big_r, big_r);
    let (c, s) = (big_r.cosh(), big_r.sinh());
    checks.push((
        "theta(R, R) closed form and bisection",
        close(theta, ((c * c - c) / (s * s)).acos()) && close(theta, bisect_angle(big_r, big_r, big_r)),
    ));
    checks.push(("theta non-increasing in r2", {
        let grid: Vec<f64> = (0..=60).map(|i| big_r * i as f64 / 60.0).collect();
        grid.iter().all(|&r1| {
            grid.windows(2)
                .all(|w| connection_angle(r1, w[1], big_r) <= connection_angle(r1, w[0], big_r) + 1e-15)
        })
    }));

    checks.push(("delta(r, r) = 0", dominance_angle(6.0, 6.0, big_r).unwrap() == 0.0));
    checks.push(("delta non-negative and non-decreasing", {
        let grid: Vec<f64> = (0..=40).map(|i| big_r * i as f64 / 40.0).collect();
        grid.iter().enumerate().all(|(i, &ru)| {
            let d: Vec<f64> = grid[i..].iter().map(|&rv| dominance_angle(ru, rv, big_r).unwrap()).collect();
            d.iter().all(|&x| x >= 0.0) && d.windows(2).all(|w| w[1] >= w[0] - 1e-15)
        })
    }));
    checks.push(("dominance region containment, 10^4 points", {
        let p = params(1000);
        let big_r = p.radius();
        let mut violations = 0;
        let mut inside = 0;
        while inside < 10_000 {
            let ru = big_r * (0.5 + 0.45 * rng.gen::<f64>());
            let rv = ru + (big_r - ru) * rng.gen::<f64>();
            let delta = dominance_angle(ru, rv, big_r).unwrap();
            if delta <= 0.0 {
                continue;
            }
            let u = PolarPoint::new(ru, 0.0);
            let v = PolarPoint::new(rv, delta * rng.gen::<f64>());
            for _ in 0..100 {
                let r = radial_quantile(rng.gen(), &p).unwrap();
                let span = connection_angle(r, rv, big_r);
                let w = PolarPoint::new(r, v.phi + span * (2.0 * rng.gen::<f64>() - 1.0));
                if hyp_distance(v, w) <= big_r {
                    inside += 1;
                    if hyp_distance(u, w) > big_r + 1e-9 {
                        violations += 1;
                    }
                }
            }
        }
        violations == 0
    }));

    let p = params(979);
    checks.push((
        "radial cdf and quantile endpoints",
        radial_cdf(0.0, &p).unwrap() == 0.0
            && radial_cdf(p.radius(), &p).unwrap() == 1.0
            && radial_quantile(0.0, &p).unwrap() == 0.0
            && close(radial_quantile(1.0, &p).unwrap(), p.radius()),
    ));
    checks.push((
        "radial quantile round trip",
        [1.0, 5.0, 10.0]
            .iter()
            .all(|&r| close(radial_quantile(radial_cdf(r, &p).unwrap(), &p).unwrap(), r)),
    ));

    let p = params(10_000);
    let big_r = p.radius();
    checks.push(("mu(D) vanishes at R", mu_dominance_area(big_r, &p).unwrap() == 0.0));
    checks.push(("mu(D) at 0.75R matches Monte Carlo", {
        let r_u = 0.75 * big_r;
        let trials = 1_000_000;
        let hits = (0..trials)
            .filter(|_| {
                let phi = rng.gen::<f64>() * TAU;
                let r = radial_quantile(rng.gen(), &p).unwrap();
                r >= r_u && angular_distance(phi, 0.0) <= dominance_angle(r_u, r, big_r).unwrap()
            })
            .count();
        let est = hits as f64 / trials as f64;
        let se = (est * (1.0 - est) / trials as f64).sqrt();
        (est - mu_dominance_area(r_u, &p).unwrap()).abs() <= 3.0 * se
    }));
    for (label, f) in [
        ("mu(D) / leading term in [0.5, 1.5] at 0.6R", 0.6),
        ("mu(D) / leading term in [0.5, 1.5] at 0.7R", 0.7),
        ("mu(D) / leading term in [0.5, 1.5] at 0.8R", 0.8),
        ("mu(D) / leading term in [0.5, 1.5] at 0.9R", 0.9),
    ] {
        let r_u = f * big_r;
        let ratio = mu_dominance_area(r_u, &p).unwrap() / mu_dominance_area_leading(r_u, &p);
        println!("    mu(D) / leading at {f}R = {ratio:.4}");
        checks.push((label, (0.5..=1.5).contains(&ratio)));
    }
    checks.push(("arc region vanishes at R", mu_arc_region(big_r, &p).unwrap() == 0.0));
    checks.push((
        "arc region is a probability",
        [0.5, 0.6, 0.8, 0.95]
            .iter()
            .all(|&f| mu_arc_region(f * big_r, &p).unwrap() <= 1.0),
    ));
    checks.push(("arc region within [0.3, 1.7] of bound at 0.8R", {
        let r = 0.8 * big_r;
        (0.3..=1.7).contains(&(mu_arc_region(r, &p).unwrap() / mu_arc_region_bound(r, &p)))
    }));

    let p = params(1000);
    checks.push((
        "R and rho at n=1000, c=1",
        close(p.radius(), 11.526_050_786_265_47) && close(rho_threshold(&p, 1.0).unwrap(), 7.660_761_318_433_343),
    ));
    checks.push((
        "rho = R - 2 when ln(n^c) = e",
        (rho_threshold(&p, std::f64::consts::E / 1000f64.ln()).unwrap() - (p.radius() - 2.0)).abs() < 1e-12,
    ));
    checks.push(("rho increasing in n", {
        let rhos: Vec<f64> = [500, 1000, 2000, 4000, 8000, 16000]
            .iter()
            .map(|&n| rho_threshold(&params(n), 1.0).unwrap())
            .collect();
        rhos.windows(2).all(|w| w[1] > w[0])
    }));
    checks.push(("high-degree threshold at n=1000", close(high_degree_threshold(&p), 20.723_265_836_946_41)));
    checks.push((
        "expected degree halves over 2 ln 2",
        (expected_degree_at_radius(8.0, &p) / expected_degree_at_radius(8.0 + 2.0 * LN_2, &p) - 2.0).abs() < 1e-12,
    ));
    checks.push(("observed degree near expected at 0.7R", {
        let p = params(10_000);
        let s = generate(&p, 21).unwrap();
        let r = 0.7 * p.radius();
        let bin: Vec<usize> = (0..p.n()).filter(|&v| (s.coords[v].r - r).abs() <= 0.1).collect();
        let mean = bin.iter().map(|&v| s.graph.degree(v) as f64).sum::<f64>() / bin.len() as f64;
        (0.5..=2.0).contains(&(mean / expected_degree_at_radius(r, &p)))
    }));
    checks
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let checks = geometry_checks();
    let secs = start.elapsed().as_secs_f64();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(
        failed.is_empty() && secs < 60.0,
        format!(
            "{}/{} checks, {secs:.1}s{}",
            checks.len() - failed.len(),
            checks.len(),
            if failed.is_empty() {
                String::new()
            } else {
                format!("; failed: {}", failed.join(", "))
            }
        ),
    )
}

/// Every CSV the experiment pipeline writes, concatenated.
fn pipeline_bytes(threads: usize) -> Vec<u8> {
    let grid = SweepGrid {
        ns: vec![800, 1600],
        seeds: vec![3, 4, 5],
        alpha: 0.75,
        kappa_bar: 8.0,
    };
    let mut out = Vec::new();
    let rows = sweep_table1(&grid, &RowConfig::deterministic(), threads).unwrap();
    experiments::write_table1_csv(&mut out, &rows).unwrap();
    let rows = sweep_dominance(&grid, None, threads).unwrap();
    experiments::write_dominance_csv(&mut out, &rows).unwrap();
    let rows = sweep_width(&grid, &[8, 16], threads).unwrap();
    experiments::write_width_csv(&mut out, &rows).unwrap();
    experiments::write_width_summary_csv(&mut out, &summarize_widths(&rows)).unwrap();
    out
}

fn criterion_8() -> Outcome {
    let a = pipeline_bytes(1);
    let b = pipeline_bytes(3);
    outcome(
        a == b && !a.is_empty(),
        format!("two runs of {} bytes, identical: {}", a.len(), a == b),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let total = Instant::now();
    let mut failed = Vec::new();
    for (id, run) in criteria {
        let o = run();
        println!("criterion {id}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
    }
    println!("total {:.1?}", Duration::from_secs_f64(total.elapsed().as_secs_f64()));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
