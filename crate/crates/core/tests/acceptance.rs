//! Acceptance suite. Each test runs one criterion end to end and prints a
//! single `PASS`/`FAIL` line; tolerances are exact unless stated.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use ramsey_forge::*;

use common::{alpha_by_enumeration, edges_of, small_packing};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Check) {
    let start = Instant::now();
    let mut result = body();
    let elapsed = start.elapsed();
    if result.is_ok() && elapsed > limit {
        result = Err(format!("took {elapsed:?}, limit {limit:?}"));
    }
    match &result {
        Ok(()) => println!("PASS criterion {id:>2}: {title} ({elapsed:.2?})"),
        Err(e) => println!("FAIL criterion {id:>2}: {title}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {id} failed: {e}");
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn gamma(d: Design) -> (OrderedDesign, IncidenceGraph) {
    let od = OrderedDesign::by_id(d);
    let g = build_gamma(&od).expect("valid packing");
    (od, g)
}

#[test]
fn criterion_01_projective_family() {
    criterion(1, "projective planes p in {2,3,5,7}", secs(5), || {
        for p in [2usize, 3, 5, 7] {
            let pts = p * p + p + 1;
            let (od, g) = gamma(projective_plane(p as u64).map_err(|e| e.to_string())?);
            ensure!(
                g.vertex_count() == pts * (p + 1),
                "p={p}: {} vertices",
                g.vertex_count()
            );
            ensure!(check_clique_free(&g, 3).is_none(), "p={p}: triangle found");
            let greedy = greedy_independent_set(&od, &g);
            ensure!(greedy.len() == pts, "p={p}: greedy {}", greedy.len());
            ensure!(
                verify_independent(&g, &greedy),
                "p={p}: greedy not independent"
            );
            ensure!(
                upper_bound_alpha(od.design()) == 2 * pts,
                "p={p}: upper bound"
            );
            let chi = chromatic_lower_bound(od.design());
            ensure!(
                chi == Fraction::new(p as u64 + 1, 2),
                "p={p}: chromatic {chi}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_02_affine_family() {
    criterion(
        2,
        "affine planes p in {2,3,5}, exact alpha for p <= 3",
        secs(10),
        || {
            for p in [2usize, 3, 5] {
                let (od, g) = gamma(affine_plane(p as u64).map_err(|e| e.to_string())?);
                ensure!(g.vertex_count() == p * p * p + p * p, "p={p}: vertices");
                ensure!(check_clique_free(&g, 3).is_none(), "p={p}: triangle found");
                let greedy = greedy_independent_set(&od, &g);
                ensure!(greedy.len() == p * p + p, "p={p}: greedy {}", greedy.len());
                ensure!(
                    verify_independent(&g, &greedy),
                    "p={p}: greedy not independent"
                );
                let upper = upper_bound_alpha(od.design());
                ensure!(upper == 2 * p * p + p, "p={p}: upper {upper}");
                if p <= 3 {
                    let exact = exact_max_independent_set(&g, 64).map_err(|e| e.to_string())?;
                    ensure!(
                        verify_independent(&g, &exact),
                        "p={p}: exact set not independent"
                    );
                    ensure!(
                        greedy.len() <= exact.len() && exact.len() <= upper,
                        "p={p}: alpha {} outside [{}, {upper}]",
                        exact.len(),
                        greedy.len()
                    );
                    println!("    AG(2,{p}): alpha = {}", exact.len());
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_03_any_n_family() {
    criterion(3, "G_n for every n in 1..=300", secs(30), || {
        for n in 1..=300usize {
            let (d, trace) = trim_to_n(n).map_err(|e| e.to_string())?;
            let cube = trace.k.pow(3) + trace.k.pow(2);
            ensure!(
                n <= cube && cube <= 6 * n,
                "n={n}: k={} out of range",
                trace.k
            );
            ensure!(
                trace.k <= trace.p && trace.p <= 2 * trace.k,
                "n={n}: p={}",
                trace.p
            );
            let (od, g) = gamma(d);
            ensure!(
                g.vertex_count() == n,
                "n={n}: {} vertices",
                g.vertex_count()
            );
            ensure!(check_clique_free(&g, 3).is_none(), "n={n}: triangle found");
            let greedy = greedy_independent_set(&od, &g);
            ensure!(
                greedy.len() == od.design().block_count(),
                "n={n}: greedy {}",
                greedy.len()
            );
            let upper = upper_bound_alpha(od.design()) as f64;
            let bound = 48.0 * 2f64.cbrt() * (n as f64).powf(2.0 / 3.0);
            ensure!(
                upper.total_cmp(&bound).is_le(),
                "n={n}: |A'|+|B'| = {upper} > {bound}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_04_grid_family() {
    criterion(4, "grid lines N in {1,2,3,4}", secs(10), || {
        for n in 1..=4usize {
            let d = grid_line_design(n).map_err(|e| e.to_string())?;
            ensure!(rectangle_free(&d), "N={n}: rectangle found");
            let (od, g) = gamma(d);
            let v = n.pow(4);
            ensure!(
                g.vertex_count() == v,
                "N={n}: {} vertices",
                g.vertex_count()
            );
            ensure!(check_clique_free(&g, 3).is_none(), "N={n}: triangle found");
            let greedy = greedy_independent_set(&od, &g);
            // vertices^(3/4) = N³ exactly
            ensure!(greedy.len() == n.pow(3), "N={n}: greedy {}", greedy.len());
            ensure!(
                verify_independent(&g, &greedy),
                "N={n}: greedy not independent"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_05_exact_oracle_equivalence() {
    criterion(
        5,
        "branch and bound equals 2^v enumeration on 50 packings",
        secs(30),
        || {
            for seed in 0..50u64 {
                let d = small_packing(seed);
                ensure!(validate_packing(&d).valid(), "seed {seed}: invalid packing");
                let (_, g) = gamma(d.clone());
                ensure!(
                    g.vertex_count() <= 20,
                    "seed {seed}: {} vertices",
                    g.vertex_count()
                );
                let bb = exact_max_independent_set(&g, 64).map_err(|e| e.to_string())?;
                ensure!(
                    verify_independent(&g, &bb),
                    "seed {seed}: witness not independent"
                );
                let brute = alpha_by_enumeration(g.vertex_count(), &edges_of(g.adjacency()));
                ensure!(
                    bb.len() == brute,
                    "seed {seed}: b&b {} vs enumeration {brute}",
                    bb.len()
                );
                let (a, b) = (d.point_count(), d.block_count());
                ensure!(b <= brute && brute <= a + b, "seed {seed}: sandwich broken");
                ensure!(brute >= a.div_ceil(b), "seed {seed}: alpha < ceil(a/b)");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_06_half_approximation() {
    criterion(
        6,
        "greedy >= (|A|+|B|)/2 on Steiner/PBD instances",
        secs(5),
        || {
            let mut designs: Vec<(String, Design)> = Vec::new();
            for p in [2u64, 3, 5, 7] {
                designs.push((format!("PG(2,{p})"), projective_plane(p).unwrap()));
            }
            for p in [2u64, 3, 5] {
                designs.push((format!("AG(2,{p})"), affine_plane(p).unwrap()));
            }
            for (name, d) in designs {
                let steiner = d
                    .blocks()
                    .first()
                    .map(|b| is_steiner(&d, b.len()))
                    .unwrap_or(false);
                let pbd = is_pairwise_balanced(&d).unwrap_or(false);
                ensure!(steiner || pbd, "{name}: neither Steiner nor PBD");
                ensure!(fisher_holds(&d), "{name}: Fisher inequality fails");
                let (od, g) = gamma(d);
                let greedy = greedy_independent_set(&od, &g).len();
                let upper = upper_bound_alpha(od.design());
                ensure!(2 * greedy >= upper, "{name}: 2*{greedy} < {upper}");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_incidence_inequality() {
    criterion(
        7,
        "quadratic and cube-root incidence bounds",
        secs(5),
        || {
            let mut designs: Vec<(String, Design)> = Vec::new();
            for p in [2u64, 3, 5, 7] {
                designs.push((format!("PG(2,{p})"), projective_plane(p).unwrap()));
            }
            for p in [2u64, 3, 5] {
                designs.push((format!("AG(2,{p})"), affine_plane(p).unwrap()));
            }
            for n in 1..=4 {
                designs.push((format!("grid {n}"), grid_line_design(n).unwrap()));
            }
            for n in 1..=300 {
                designs.push((format!("G_{n}"), trim_to_n(n).unwrap().0));
            }
            for seed in 0..100u64 {
                let d = random_packing(
                    6 + (seed % 10) as usize,
                    2 + (seed % 4) as usize,
                    2,
                    20,
                    seed,
                )
                .unwrap();
                designs.push((format!("random seed {seed}"), d));
            }
            for (name, d) in &designs {
                ensure!(validate_packing(d).valid(), "{name}: invalid packing");
                ensure!(ravsky_quadratic_check(d), "{name}: quadratic check fails");
                let ab = upper_bound_alpha(d) as f64;
                let lb = ravsky_lower_bound(incidence_count(d));
                ensure!(ab.total_cmp(&lb).is_gt(), "{name}: a+b = {ab} <= {lb}");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_higher_clique_freeness() {
    criterion(
        8,
        "K4-free for strength 3, K5-free for strength 4",
        secs(20),
        || {
            let mut with_triangles = 0;
            for seed in 0..20u64 {
                let d = random_packing(8 + (seed % 5) as usize, 4, 3, 10, seed).unwrap();
                ensure!(
                    validate_packing(&d).valid(),
                    "strength 3 seed {seed}: invalid"
                );
                let (_, g) = gamma(d);
                ensure!(
                    g.vertex_count() <= 60,
                    "seed {seed}: {} vertices",
                    g.vertex_count()
                );
                ensure!(g.m() == 4, "seed {seed}: m = {}", g.m());
                if let Some(c) = check_clique_free(&g, 4) {
                    return Err(format!("strength 3 seed {seed}: K4 {c:?}"));
                }
                if check_clique_free(&g, 3).is_some() {
                    with_triangles += 1;
                }
            }
            println!("    {with_triangles}/20 strength-3 graphs contain triangles");
            for seed in 0..5u64 {
                let d = random_packing(8 + (seed % 3) as usize, 5, 4, 8, 100 + seed).unwrap();
                ensure!(
                    validate_packing(&d).valid(),
                    "strength 4 seed {seed}: invalid"
                );
                let (_, g) = gamma(d);
                ensure!(
                    g.vertex_count() <= 60,
                    "seed {seed}: {} vertices",
                    g.vertex_count()
                );
                if let Some(c) = check_clique_free(&g, 5) {
                    return Err(format!("strength 4 seed {seed}: K5 {c:?}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_09_order_robustness() {
    criterion(9, "Fano under 20 random point orders", secs(5), || {
        let fano = projective_plane(2).unwrap();
        let mut alphas = Vec::new();
        for seed in 0..20u64 {
            let od = OrderedDesign::shuffled(fano.clone(), seed);
            let g = build_gamma(&od).map_err(|e| e.to_string())?;
            ensure!(
                check_clique_free(&g, 3).is_none(),
                "seed {seed}: triangle found"
            );
            let greedy = greedy_independent_set(&od, &g);
            ensure!(greedy.len() == 7, "seed {seed}: greedy {}", greedy.len());
            ensure!(
                verify_independent(&g, &greedy),
                "seed {seed}: greedy not independent"
            );
            let alpha = exact_max_independent_set(&g, 64)
                .map_err(|e| e.to_string())?
                .len();
            ensure!((7..=14).contains(&alpha), "seed {seed}: alpha {alpha}");
            alphas.push(alpha);
        }
        println!("    alpha per order: {alphas:?}");
        Ok(())
    });
}

#[test]
fn criterion_10_sweep_determinism() {
    criterion(
        10,
        "sweep --n 1..100 is byte-identical across runs",
        secs(60),
        || {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            let exe = env!("CARGO_BIN_EXE_ramsey-forge");
            let mut outputs = Vec::new();
            for run in 0..2 {
                let path = dir.path().join(format!("sweep{run}.csv"));
                let status = Command::new(exe)
                    .args(["sweep", "--n", "1..100", "--order", "random"])
                    .arg("--out")
                    .arg(&path)
                    .env("RAMSEY_FORGE_SEED", "2024")
                    .status()
                    .map_err(|e| e.to_string())?;
                ensure!(status.success(), "run {run} exited with {status}");
                outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
            }
            ensure!(outputs[0] == outputs[1], "reports differ");
            let text = String::from_utf8(outputs[0].clone()).map_err(|e| e.to_string())?;
            ensure!(text.lines().count() == 101, "expected header + 100 rows");
            ensure!(
                text.lines().nth(1).unwrap().starts_with("trim,1,2024,"),
                "seed not recorded"
            );
            Ok(())
        },
    );
}
