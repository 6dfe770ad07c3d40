//! Chains of six horodisks, each tangent to the next, and the Seven Circles
//! check.
//!
//! Tangency of horodisks at `u` and `v` means `s_u s_v = |u - v|²`, so a chain
//! is determined by its base points and the first size: `s_{k+1} =
//! |u_k - u_{k+1}|² / s_k`. Carrying the recursion once more around the
//! sixth side gives `s₇`; the chain closes (horodisk 6 touches horodisk 1)
//! exactly when `s₇ = s₁`.

use std::f64::consts::TAU;

use crate::circles::{alternating_perimeter, are_tangent, Horodisk};
use crate::error::{Error, Result};
use crate::geodesics::{IdealPoint, EPS_SEP};
use crate::hexagon::{point_reflection_symmetry, small_triangle, triangle_perimeter, IdealHexagon};
use crate::models::PoincarePoint;

/// Relative tolerance for accepting consecutive horodisks as tangent when a
/// chain is assembled from measured circles.
pub const CHAIN_TANGENCY_TOL: f64 = 1e-8;

/// Bisection stops once `|residual - 1|` is below this.
pub const CLOSURE_TOL: f64 = 1e-10;

fn chord2(a: f64, b: f64) -> f64 {
    let h = 2.0 * ((a - b) / 2.0).sin();
    h * h
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleChain {
    bases: [IdealPoint; 6],
    sizes: [f64; 6],
    closure_residual: f64,
}

impl CircleChain {
    pub fn bases(&self) -> &[IdealPoint; 6] {
        &self.bases
    }

    pub fn sizes(&self) -> &[f64; 6] {
        &self.sizes
    }

    /// `s₇ / s₁`; one exactly when the chain closes.
    pub fn closure_residual(&self) -> f64 {
        self.closure_residual
    }

    /// The size the seventh horodisk would need to touch horodisk six.
    pub fn seventh_size(&self) -> f64 {
        self.closure_residual * self.sizes[0]
    }

    pub fn closes(&self, tol: f64) -> bool {
        (self.closure_residual - 1.0).abs() < tol
    }

    pub fn horodisks(&self) -> [Horodisk; 6] {
        std::array::from_fn(|k| {
            Horodisk::new(self.bases[k], self.sizes[k]).expect("chain sizes are positive")
        })
    }

    /// Assembles a chain from six horodisks in cyclic order. Pairs (1,2)
    /// through (5,6) must be tangent within [`CHAIN_TANGENCY_TOL`]; the last
    /// pair only contributes to the closure residual.
    pub fn from_horodisks(h: &[Horodisk; 6]) -> Result<Self> {
        let bases = h.map(|d| d.base());
        IdealHexagon::new(bases).map_err(|e| Error::InvalidAngles(e.to_string()))?;
        for k in 0..5 {
            if !are_tangent(&h[k], &h[k + 1], CHAIN_TANGENCY_TOL)? {
                return Err(Error::InvalidAngles(format!(
                    "horodisks {} and {} are not tangent",
                    k + 1,
                    k + 2
                )));
            }
        }
        let sizes = h.map(|d| d.size());
        let s7 = chord2(bases[5].theta(), bases[0].theta()) / sizes[5];
        Ok(Self {
            bases,
            sizes,
            closure_residual: s7 / sizes[0],
        })
    }
}

/// Propagates the tangency law from `s1` around the given base angles.
pub fn build_tangent_chain(thetas: [f64; 6], s1: f64) -> Result<CircleChain> {
    if !(s1 > 0.0 && s1.is_finite()) {
        return Err(Error::NonPositiveSize(s1));
    }
    let hex =
        IdealHexagon::from_radians(thetas).map_err(|e| Error::InvalidAngles(e.to_string()))?;
    let bases = *hex.vertices();
    let mut sizes = [0.0; 6];
    sizes[0] = s1;
    for k in 0..5 {
        sizes[k + 1] = chord2(bases[k].theta(), bases[k + 1].theta()) / sizes[k];
    }
    let s7 = chord2(bases[5].theta(), bases[0].theta()) / sizes[5];
    Ok(CircleChain {
        bases,
        sizes,
        closure_residual: s7 / s1,
    })
}

pub fn chain_to_hexagon(c: &CircleChain) -> IdealHexagon {
    IdealHexagon::new(c.bases).expect("chain bases are cyclically ordered")
}

/// Finds the sixth base angle that closes the chain started at the five
/// given angles with first size `s1`.
///
/// The search runs over `arc = (lo, hi)` in radians, which must lie inside
/// the free arc between the fifth and first angles. The log of the closure
/// residual decreases monotonically along that arc, so plain bisection
/// applies. Returns `None` when the residual does not cross one on the arc.
/// The result is reduced into `[0, 2π)`.
pub fn solve_closure(thetas5: [f64; 5], s1: f64, arc: (f64, f64)) -> Result<Option<f64>> {
    if !(s1 > 0.0 && s1.is_finite()) {
        return Err(Error::NonPositiveSize(s1));
    }
    if thetas5.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidAngles("non-finite angle".into()));
    }
    let start = thetas5[0];
    let mut offsets = [0.0; 5];
    for k in 1..5 {
        offsets[k] = (thetas5[k] - start).rem_euclid(TAU);
        if !(offsets[k] - offsets[k - 1] > EPS_SEP) {
            return Err(Error::InvalidAngles(format!(
                "angle {} is not strictly after angle {}",
                k + 1,
                k
            )));
        }
    }
    let (lo, hi) = arc;
    if !(lo.is_finite() && hi.is_finite() && lo < hi && hi - lo < TAU) {
        return Err(Error::InvalidArc(format!(
            "({lo}, {hi}) is not a proper arc"
        )));
    }
    let lo_off = (lo - start).rem_euclid(TAU);
    let hi_off = lo_off + (hi - lo);
    if !(lo_off - offsets[4] > EPS_SEP && TAU - hi_off > EPS_SEP) {
        return Err(Error::InvalidArc(
            "arc must lie strictly between the fifth and first angles".into(),
        ));
    }

    // s5 from the prefix; the closure residual as a function of the sixth offset.
    let mut s = s1;
    for k in 0..4 {
        s = chord2(offsets[k], offsets[k + 1]) / s;
    }
    let s5 = s;
    let log_residual = |off: f64| -> f64 {
        let s6 = chord2(offsets[4], off) / s5;
        let s7 = chord2(off, TAU) / s6;
        (s7 / s1).ln()
    };

    let (mut a, mut b) = (lo_off, hi_off);
    let (fa, fb) = (log_residual(a), log_residual(b));
    if fa == 0.0 {
        return Ok(Some((start + a).rem_euclid(TAU)));
    }
    if fb == 0.0 {
        return Ok(Some((start + b).rem_euclid(TAU)));
    }
    if fa.signum() == fb.signum() {
        return Ok(None);
    }
    let mut prev = fa;
    for i in 1..8 {
        let f = log_residual(a + (b - a) * i as f64 / 8.0);
        if f > prev {
            return Err(Error::InvalidArc(
                "closure residual is not monotone on the arc".into(),
            ));
        }
        prev = f;
    }

    let mut fa = fa;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = log_residual(mid);
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let root = 0.5 * (a + b);
    if !((log_residual(root).exp() - 1.0).abs() < CLOSURE_TOL) {
        return Err(Error::NumericalInstability(
            "bisection did not reach the closure tolerance".into(),
        ));
    }
    Ok(Some((start + root).rem_euclid(TAU)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SevenCirclesReport {
    pub closure_residual: f64,
    pub closes: bool,
    /// Signed alternating perimeter with the chain's own sizes; equals
    /// `log(s₁ / s₇)`.
    pub alternating_perimeter: f64,
    pub triangle_perimeter: f64,
    pub triple_point: bool,
    pub triple_point_location: Option<PoincarePoint>,
    pub symmetry_fixed_point: Option<PoincarePoint>,
    pub verdict: Verdict,
}

pub fn verify_seven_circles(c: &CircleChain, tol: f64) -> Result<SevenCirclesReport> {
    let hex = chain_to_hexagon(c);
    let alt = alternating_perimeter(&hex, &c.sizes)?;
    let tri = small_triangle(&hex)?;
    let perim = triangle_perimeter(&tri)?;
    let triple_point = perim < tol;
    let triple_point_location = if triple_point {
        PoincarePoint::from_complex(tri.centroid()).ok()
    } else {
        None
    };
    let symmetry_fixed_point = point_reflection_symmetry(&hex, tol);
    let closes = c.closes(tol);
    let pass = closes && alt.abs() < tol && triple_point && symmetry_fixed_point.is_some();
    Ok(SevenCirclesReport {
        closure_residual: c.closure_residual,
        closes,
        alternating_perimeter: alt,
        triangle_perimeter: perim,
        triple_point,
        triple_point_location,
        symmetry_fixed_point,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}
