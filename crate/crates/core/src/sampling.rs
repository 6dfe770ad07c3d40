//! Seeded random configurations for property checks.
//!
//! Every sampler takes the generator explicitly, so batches are reproducible
//! from a seed and can be split across workers by seeding each one separately.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;

use crate::hexagon::IdealHexagon;
use crate::mobius::MobiusTransform;

/// Random hexagons are rejected unless consecutive vertices are at least
/// this far apart (radians).
pub const MIN_SAMPLE_SEPARATION: f64 = 1e-3;

/// Uniform (by area) in the disk of the given Euclidean radius.
pub fn random_disk_point<R: Rng + ?Sized>(rng: &mut R, max_radius: f64) -> Complex64 {
    let r = max_radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

/// A disk isometry `rotation ∘ J` where `J` swaps `0` and a random point.
pub fn random_isometry<R: Rng + ?Sized>(rng: &mut R, max_radius: f64) -> MobiusTransform {
    let p = random_disk_point(rng, max_radius);
    let j = MobiusTransform::isometry_to_zero(p).expect("sample point lies in the disk");
    MobiusTransform::rotation(rng.gen_range(0.0..TAU)).compose(&j)
}

/// Six uniform angles, sorted, with rejection on [`MIN_SAMPLE_SEPARATION`].
pub fn random_hexagon<R: Rng + ?Sized>(rng: &mut R) -> IdealHexagon {
    loop {
        let mut t: [f64; 6] = std::array::from_fn(|_| rng.gen_range(0.0..TAU));
        t.sort_by(f64::total_cmp);
        let gaps_ok = (0..6).all(|k| {
            let gap = if k < 5 {
                t[k + 1] - t[k]
            } else {
                t[0] + TAU - t[5]
            };
            gap > MIN_SAMPLE_SEPARATION
        });
        if gaps_ok {
            if let Ok(h) = IdealHexagon::from_radians(t) {
                return h;
            }
        }
    }
}

/// A hexagon with `θ_{k+3} = θ_k + π`, moved by a random isometry whose
/// translation part has Euclidean size below `max_push`. Returns the hexagon
/// and the image of the origin, which is its centre of symmetry.
pub fn random_symmetric_hexagon<R: Rng + ?Sized>(
    rng: &mut R,
    max_push: f64,
) -> (IdealHexagon, Complex64) {
    loop {
        let mut t: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.0..PI));
        t.sort_by(f64::total_cmp);
        let gaps_ok = t[1] - t[0] > MIN_SAMPLE_SEPARATION
            && t[2] - t[1] > MIN_SAMPLE_SEPARATION
            && t[0] + PI - t[2] > MIN_SAMPLE_SEPARATION;
        if !gaps_ok {
            continue;
        }
        let base =
            match IdealHexagon::from_radians([t[0], t[1], t[2], t[0] + PI, t[1] + PI, t[2] + PI]) {
                Ok(h) => h,
                Err(_) => continue,
            };
        let push = random_isometry(rng, max_push);
        let Ok(h) = base.transform(&push) else {
            continue;
        };
        if h.min_separation() > MIN_SAMPLE_SEPARATION {
            let center = push
                .apply(Complex64::new(0.0, 0.0))
                .expect("origin is not a pole");
            return (h, center);
        }
    }
}

/// Six horodisk sizes, log-uniform in `[e^-3, e^3]`.
pub fn random_sizes<R: Rng + ?Sized>(rng: &mut R) -> [f64; 6] {
    std::array::from_fn(|_| rng.gen_range(-3.0f64..3.0).exp())
}
