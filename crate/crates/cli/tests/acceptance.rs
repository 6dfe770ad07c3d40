//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.
//!
//! Run with `cargo test -p seven-circles-cli --test acceptance`
//! (add `--release` for speed).

mod common;

use std::f64::consts::TAU;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seven_circles::models::{f, f_inv, g, g_inv, klein_to_poincare, poincare_to_klein};
use seven_circles::prelude::*;
use seven_circles::sampling::{
    random_disk_point, random_hexagon, random_sizes, random_symmetric_hexagon,
};

const SEED: u64 = 20_240_601;

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn theorem3_suite() -> Result<Outcome> {
    let mut r = rng(1);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let h = random_hexagon(&mut r);
        let perim = triangle_perimeter(&small_triangle(&h)?)?;
        worst = worst.max(theorem3_residual(&h)?.abs() / (1.0 + perim));
    }
    Ok(outcome(
        worst < 1e-8,
        format!("10000 hexagons, max relative residual {worst:.3e} (< 1e-8)"),
    ))
}

fn worked_configuration() -> Result<Outcome> {
    let h = IdealHexagon::from_degrees([0.0, 60.0, 120.0, 180.0, 240.0, 330.0])?;
    let l = (1.0 + 3f64.sqrt()).ln();
    let a = alternating_perimeter(&h, &UNIT_SIZES)?.abs();
    let t = small_triangle(&h)?;
    let perim = triangle_perimeter(&t)?;
    let q2 = t.vertices()[1].to_complex();
    let ea = (a - 2.0 * l).abs();
    let ep = (perim - l).abs();
    let eq = (q2 - Complex64::new(0.18960, 0.0)).norm();
    Ok(outcome(
        ea < 1e-9 && ep < 1e-8 && eq < 1e-4,
        format!("|A| err {ea:.1e} (< 1e-9), perim err {ep:.1e} (< 1e-8), q2 err {eq:.1e} (< 1e-4)"),
    ))
}

fn theorem4_suite() -> Result<Outcome> {
    let mut r = rng(3);
    let (mut max_a, mut max_p, mut max_fix) = (0.0f64, 0.0f64, 0.0f64);
    let mut misses = 0;
    for _ in 0..1_000 {
        let (h, _) = random_symmetric_hexagon(&mut r, 0.9);
        max_a = max_a.max(alternating_perimeter(&h, &UNIT_SIZES)?.abs());
        let t = small_triangle(&h)?;
        max_p = max_p.max(triangle_perimeter(&t)?);
        match point_reflection_symmetry(&h, 1e-8) {
            Some(p) => max_fix = max_fix.max((p.to_complex() - t.centroid()).norm()),
            None => misses += 1,
        }
    }
    Ok(outcome(
        max_a < 1e-9 && max_p < 1e-7 && max_fix < 1e-7 && misses == 0,
        format!(
            "1000 symmetric hexagons, max |A| {max_a:.1e} (< 1e-9), max perim {max_p:.1e} (< 1e-7), \
             fixed point err {max_fix:.1e} (< 1e-7), {misses} unrecognised"
        ),
    ))
}

fn seven_circles_suite() -> Result<Outcome> {
    let mut r = rng(4);
    let (mut max_res, mut max_p) = (0.0f64, 0.0f64);
    let mut unsolved = 0;
    for _ in 0..1_000 {
        let a = random_hexagon(&mut r).angles();
        let t5 = [a[0], a[1], a[2], a[3], a[4]];
        let s1 = r.gen_range(-3.0f64..3.0).exp();
        let gap = (t5[0] - t5[4]).rem_euclid(TAU);
        let m = (gap / 4.0).min(1e-7);
        let Some(t6) = solve_closure(t5, s1, (t5[4] + m, t5[4] + gap - m))? else {
            unsolved += 1;
            continue;
        };
        let c = build_tangent_chain([t5[0], t5[1], t5[2], t5[3], t5[4], t6], s1)?;
        max_res = max_res.max((c.closure_residual() - 1.0).abs());
        let h = chain_to_hexagon(&c);
        max_p = max_p.max(triangle_perimeter(&small_triangle(&h)?)?);
    }
    Ok(outcome(
        max_res < 1e-10 && max_p < 1e-7 && unsolved == 0,
        format!(
            "1000 solved chains, max |residual - 1| {max_res:.1e} (< 1e-10), max perim {max_p:.1e} (< 1e-7), \
             {unsolved} unsolved"
        ),
    ))
}

fn horodisk_independence() -> Result<Outcome> {
    let mut r = rng(5);
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let h = random_hexagon(&mut r);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for _ in 0..10 {
            let a = alternating_perimeter(&h, &random_sizes(&mut r))?;
            lo = lo.min(a);
            hi = hi.max(a);
        }
        worst = worst.max(hi - lo);
    }
    Ok(outcome(
        worst < 1e-10,
        format!("1000 hexagons x 10 size vectors, max spread {worst:.1e} (< 1e-10)"),
    ))
}

fn trisum_suite() -> Result<Outcome> {
    let mut r = rng(6);
    let mut worst = 0.0f64;
    let mut n = 0;
    while n < 1_000 {
        let h = random_hexagon(&mut r);
        let s = random_sizes(&mut r);
        match trisum_residual(&h, &s) {
            Ok(v) => worst = worst.max(v.abs()),
            Err(Error::DegenerateTriangle) => continue,
            Err(e) => return Err(e),
        }
        n += 1;
    }
    Ok(outcome(
        worst < 1e-9,
        format!("1000 hexagons, max |trisum| {worst:.1e} (< 1e-9)"),
    ))
}

fn model_conformance() -> Result<Outcome> {
    let mut r = rng(7);
    let (mut trip, mut transport) = (0.0f64, 0.0f64);
    let mut realness_failures = 0;
    for _ in 0..10_000 {
        let z = random_disk_point(&mut r, 0.999);
        let k = KleinPoint::from_complex(z)?;
        let p = PoincarePoint::from_complex(z)?;
        for back in [
            f(&f_inv(&k)).to_complex(),
            g(&g_inv(&p)).to_complex(),
            klein_to_poincare(&poincare_to_klein(&p)).to_complex(),
            poincare_to_klein(&klein_to_poincare(&k)).to_complex(),
        ] {
            trip = trip.max((back - z).norm());
        }

        // three points on one Klein chord land on one geodesic
        let ta = r.gen_range(0.0..TAU);
        let a = IdealPoint::new(ta);
        let b = IdealPoint::new(ta + r.gen_range(0.05..TAU - 0.05));
        let geo = Geodesic::new(a, b)?;
        for _ in 0..3 {
            let t = r.gen_range(0.001..0.999);
            let kp = KleinPoint::from_complex(a.u() * (1.0 - t) + b.u() * t)?;
            transport = transport.max(geo.distance_to_carrier(klein_to_poincare(&kp).to_complex()));
        }

        let w = PoincarePoint::from_complex(random_disk_point(&mut r, 0.999))?;
        if hyp_distance(&p, &w).is_err() {
            realness_failures += 1;
        }
    }
    Ok(outcome(
        trip < 1e-12 && transport < 1e-10 && realness_failures == 0,
        format!(
            "10000 points, max round trip {trip:.1e} (< 1e-12), collinear transport {transport:.1e} (< 1e-10), \
             {realness_failures} realness failures"
        ),
    ))
}

fn tangency_oracle() -> Result<Outcome> {
    let mut r = rng(8);
    let mut disagreements = 0;
    let mut tangent_pairs = 0;
    for i in 0..1_000 {
        let a = IdealPoint::new(r.gen_range(0.0..TAU));
        let b = IdealPoint::new(a.theta() + r.gen_range(0.05..TAU - 0.05));
        let sa = r.gen_range(-3.0f64..3.0).exp();
        let exact = (a.u() - b.u()).norm_sqr() / sa;
        let sb = if i % 2 == 0 {
            exact
        } else {
            let d = r.gen_range(1e-4f64..1e-1) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
            exact * (1.0 + d)
        };
        let (ha, hb) = (Horodisk::new(a, sa)?, Horodisk::new(b, sb)?);
        let by_size = are_tangent(&ha, &hb, 1e-9)?;
        let dist = (ha.euclidean_center() - hb.euclidean_center()).norm();
        let rsum = ha.euclidean_radius() + hb.euclidean_radius();
        let by_circles = ((dist - rsum) / rsum).abs() < 1e-9;
        tangent_pairs += by_size as usize;
        if by_size != by_circles {
            disagreements += 1;
        }
    }
    Ok(outcome(
        disagreements == 0 && tangent_pairs == 500,
        format!("1000 pairs, {tangent_pairs} tangent, {disagreements} disagreements"),
    ))
}

fn chain_identity() -> Result<Outcome> {
    let mut r = rng(9);
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let t = random_hexagon(&mut r).angles();
        let s1 = r.gen_range(-3.0f64..3.0).exp();
        let c = build_tangent_chain(t, s1)?;
        let a = alternating_perimeter(&chain_to_hexagon(&c), c.sizes())?;
        worst = worst.max((a - (s1 / c.seventh_size()).ln()).abs());
    }
    Ok(outcome(
        worst < 1e-10,
        format!("1000 chains, max |A - log(s1/s7)| {worst:.1e} (< 1e-10)"),
    ))
}

fn cli_golden() -> Outcome {
    let mut failures = Vec::new();
    for (name, args) in common::GOLDEN {
        if let Err(e) = common::check_golden(name, args) {
            failures.push(e);
        }
    }
    let n = common::GOLDEN.len();
    if failures.is_empty() {
        outcome(true, format!("{n} golden files match"))
    } else {
        outcome(false, failures.join("; "))
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "alternating perimeter is twice the small triangle",
            Box::new(|| theorem3_suite().unwrap_or_else(err)),
        ),
        (
            "worked configuration",
            Box::new(|| worked_configuration().unwrap_or_else(err)),
        ),
        (
            "point-symmetric hexagons",
            Box::new(|| theorem4_suite().unwrap_or_else(err)),
        ),
        (
            "closed chains have a triple point",
            Box::new(|| seven_circles_suite().unwrap_or_else(err)),
        ),
        (
            "independence of horodisk sizes",
            Box::new(|| horodisk_independence().unwrap_or_else(err)),
        ),
        (
            "reflected triangle sums",
            Box::new(|| trisum_suite().unwrap_or_else(err)),
        ),
        (
            "model conformance",
            Box::new(|| model_conformance().unwrap_or_else(err)),
        ),
        (
            "tangency oracle",
            Box::new(|| tangency_oracle().unwrap_or_else(err)),
        ),
        (
            "chain identity",
            Box::new(|| chain_identity().unwrap_or_else(err)),
        ),
        ("CLI golden files", Box::new(cli_golden)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let secs = start.elapsed().as_secs_f64();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{:>2}] {name}: {} ({secs:.2}s)", i + 1, o.detail);
        failed += !o.pass as usize;
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn err(e: Error) -> Outcome {
    outcome(false, format!("error: {e}"))
}
