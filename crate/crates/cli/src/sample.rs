//! Seeded batches of random hexagons.
//!
//! Sample `i` draws from a ChaCha8 generator seeded with the batch seed on
//! stream `i`, so every sample is reproducible on its own and the summary
//! does not depend on how work is split across threads.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use seven_circles::prelude::*;
use seven_circles::sampling::{random_hexagon, random_sizes, random_symmetric_hexagon};

use crate::report::{num, stats_text};

/// Euclidean bound on how far the symmetric samples are pushed off centre.
pub const SYMMETRIC_PUSH: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Uniformly random vertex angles.
    Random,
    /// Point-symmetric hexagons moved by a random isometry.
    Symmetric,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Summary {
    pub count: u64,
    /// Largest `| |A| - 2 perim | / (1 + perim)`.
    pub max_theorem3_residual: f64,
    /// Largest `|trisum|` over samples with a non-degenerate triangle.
    pub max_trisum_residual: f64,
    pub max_abs_alternating_perimeter: f64,
    pub max_triangle_perimeter: f64,
    /// Symmetric mode: largest distance between the recovered fixed point and
    /// the known centre.
    pub max_fixed_point_error: f64,
    /// Symmetric mode: samples where no symmetry was recognised.
    pub symmetry_misses: u64,
    /// Samples where a computation returned an error.
    pub errors: u64,
}

impl Summary {
    fn merge(self, o: Self) -> Self {
        Self {
            count: self.count + o.count,
            max_theorem3_residual: self.max_theorem3_residual.max(o.max_theorem3_residual),
            max_trisum_residual: self.max_trisum_residual.max(o.max_trisum_residual),
            max_abs_alternating_perimeter: self
                .max_abs_alternating_perimeter
                .max(o.max_abs_alternating_perimeter),
            max_triangle_perimeter: self.max_triangle_perimeter.max(o.max_triangle_perimeter),
            max_fixed_point_error: self.max_fixed_point_error.max(o.max_fixed_point_error),
            symmetry_misses: self.symmetry_misses + o.symmetry_misses,
            errors: self.errors + o.errors,
        }
    }

    pub fn to_text(self, mode: Mode) -> String {
        let mut rows = vec![
            ("count", self.count.to_string()),
            ("max_theorem3_residual", num(&self.max_theorem3_residual)),
            ("max_trisum_residual", num(&self.max_trisum_residual)),
            (
                "max_abs_alternating_perimeter",
                num(&self.max_abs_alternating_perimeter),
            ),
            ("max_triangle_perimeter", num(&self.max_triangle_perimeter)),
        ];
        if mode == Mode::Symmetric {
            rows.push(("max_fixed_point_error", num(&self.max_fixed_point_error)));
            rows.push(("symmetry_misses", self.symmetry_misses.to_string()));
        }
        rows.push(("errors", self.errors.to_string()));
        stats_text(&rows)
    }
}

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn one(seed: u64, index: u64, mode: Mode, tol: f64) -> Summary {
    let mut rng = rng_for(seed, index);
    let (hex, centre) = match mode {
        Mode::Random => (random_hexagon(&mut rng), None),
        Mode::Symmetric => {
            let (h, c) = random_symmetric_hexagon(&mut rng, SYMMETRIC_PUSH);
            (h, Some(c))
        }
    };
    let sizes = random_sizes(&mut rng);
    let mut s = Summary {
        count: 1,
        ..Summary::default()
    };
    let run = |s: &mut Summary| -> seven_circles::Result<()> {
        let alt = alternating_perimeter(&hex, &sizes)?;
        let perim = triangle_perimeter(&small_triangle(&hex)?)?;
        s.max_abs_alternating_perimeter = alt.abs();
        s.max_triangle_perimeter = perim;
        s.max_theorem3_residual = theorem3_residual(&hex)?.abs() / (1.0 + perim);
        match trisum_residual(&hex, &sizes) {
            Ok(r) => s.max_trisum_residual = r.abs(),
            Err(Error::DegenerateTriangle) => {}
            Err(e) => return Err(e),
        }
        if let Some(c) = centre {
            match point_reflection_symmetry(&hex, tol) {
                Some(p) => s.max_fixed_point_error = (p.to_complex() - c).norm(),
                None => s.symmetry_misses = 1,
            }
        }
        Ok(())
    };
    if run(&mut s).is_err() {
        s.errors = 1;
    }
    s
}

/// Runs `count` samples. `threads = 0` uses rayon's default pool.
pub fn run(count: u64, seed: u64, mode: Mode, tol: f64, threads: usize) -> Summary {
    let work = || {
        (0..count)
            .into_par_iter()
            .map(|i| one(seed, i, mode, tol))
            .reduce(Summary::default, Summary::merge)
    };
    if threads == 0 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}
