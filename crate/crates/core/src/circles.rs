//! Hyperbolic disks, horodisks, and horodisk-clipped lengths.
//!
//! A horodisk based at the ideal point `u` is parametrized by its size
//! `s = 2r / (1 - r)`, where `r` is its Euclidean radius. With this
//! coordinate two horodisks at `u` and `v` are tangent exactly when
//! `|u - v|² = s_u s_v`, and the length of the geodesic `uv` outside both is
//! `log(|u - v|² / (s_u s_v))`. Lengths are signed: overlapping horodisks give
//! a negative clipped length.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geodesics::{IdealPoint, EPS_SEP};
use crate::hexagon::IdealHexagon;
use crate::mobius::MobiusTransform;
use crate::models::PoincarePoint;

/// Tolerance for accepting a Euclidean circle as internally tangent to the
/// unit circle.
pub const HORODISK_TANGENCY_TOL: f64 = 1e-9;

fn check_size(s: f64) -> Result<()> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveSize(s))
    }
}

/// `B(center, radius)`: points within hyperbolic distance `radius` of `center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicDisk {
    center: PoincarePoint,
    radius: f64,
}

impl HyperbolicDisk {
    pub fn new(center: PoincarePoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::NonPositiveRadius(radius));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> PoincarePoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// The same set as a Euclidean disk: `(center, radius)`.
    ///
    /// The origin-centred disk has Euclidean radius `tanh(radius / 2)`; its
    /// image under the isometry taking `0` to the hyperbolic center is
    /// computed in closed form.
    pub fn to_euclidean(&self) -> (Complex64, f64) {
        let rho = (self.radius / 2.0).tanh();
        let z0 = self.center.to_complex();
        let m2 = z0.norm_sqr();
        let den = 1.0 - rho * rho * m2;
        (z0 * ((1.0 - rho * rho) / den), rho * (1.0 - m2) / den)
    }
}

/// A horodisk: base point on the ideal boundary and positive size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Horodisk {
    base: IdealPoint,
    size: f64,
}

impl Horodisk {
    pub fn new(base: IdealPoint, size: f64) -> Result<Self> {
        check_size(size)?;
        Ok(Self { base, size })
    }

    /// Recovers a horodisk from a Euclidean circle tangent to the unit circle
    /// from inside.
    pub fn from_euclidean(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < 1.0)
            || !((center.norm() + radius - 1.0).abs() < HORODISK_TANGENCY_TOL)
        {
            return Err(Error::NotAHorodisk);
        }
        Ok(Self {
            base: IdealPoint::from_complex(center),
            size: 2.0 * radius / (1.0 - radius),
        })
    }

    pub fn base(&self) -> IdealPoint {
        self.base
    }

    pub fn size(&self) -> f64 {
        self.size
    }

    pub fn euclidean_radius(&self) -> f64 {
        self.size / (self.size + 2.0)
    }

    pub fn euclidean_center(&self) -> Complex64 {
        self.base.u() * (1.0 - self.euclidean_radius())
    }

    /// Image under a disk isometry. The base moves to `t(base)` and the size
    /// scales by `|t'(base)| = 1 / |c·base + d|²`, which keeps every
    /// `|u - v|² / (s_u s_v)` and so every clipped length unchanged.
    pub fn transform(&self, t: &MobiusTransform) -> Result<Self> {
        if !t.is_disk_isometry(HORODISK_TANGENCY_TOL) {
            return Err(Error::NotAHorodisk);
        }
        let u = self.base.u();
        let (_, _, c, d) = t.coefficients();
        let base = IdealPoint::from_complex(t.apply(u)?);
        Self::new(base, self.size / (c * u + d).norm_sqr())
    }
}

/// Size-product tangency test `|u₁ - u₂|² = s₁ s₂`, with relative tolerance.
pub fn are_tangent(h1: &Horodisk, h2: &Horodisk, tol: f64) -> Result<bool> {
    if h1.base.separation(&h2.base) <= EPS_SEP {
        return Err(Error::SameBasePoint);
    }
    let chord2 = (h1.base.u() - h2.base.u()).norm_sqr();
    let prod = h1.size * h2.size;
    Ok((chord2 - prod).abs() <= tol * chord2.max(prod))
}

/// Signed length of the geodesic `ab` outside the horodisks of sizes
/// `sa`, `sb` based at its endpoints.
pub fn clipped_length_ideal(a: &IdealPoint, sa: f64, b: &IdealPoint, sb: f64) -> Result<f64> {
    check_size(sa)?;
    check_size(sb)?;
    if a.separation(b) <= EPS_SEP {
        return Err(Error::SameBasePoint);
    }
    // |e^{iα} - e^{iβ}|² = 4 sin²((α - β)/2), accurate for close angles
    let half = 2.0 * ((a.theta() - b.theta()) / 2.0).sin();
    Ok((half * half / (sa * sb)).ln())
}

/// Signed length of the geodesic from the interior point `p` to the ideal
/// point `a`, outside the horodisk of size `sa` at `a`.
pub fn clipped_length_mixed(p: &PoincarePoint, a: &IdealPoint, sa: f64) -> Result<f64> {
    check_size(sa)?;
    let z = p.to_complex();
    let num = 2.0 * (z - a.u()).norm_sqr();
    Ok((num / (sa * (1.0 - z.norm_sqr()))).ln())
}

/// Alternating sum of clipped side lengths, `S₁ - S₂ + S₃ - S₄ + S₅ - S₆`,
/// where side `k` joins `v_k` to `v_{k+1}`. The value does not depend on the
/// sizes chosen.
pub fn alternating_perimeter(p: &IdealHexagon, sizes: &[f64; 6]) -> Result<f64> {
    let v = p.vertices();
    let mut total = 0.0;
    for k in 0..6 {
        let next = (k + 1) % 6;
        let side = clipped_length_ideal(&v[k], sizes[k], &v[next], sizes[next])?;
        if k % 2 == 0 {
            total += side;
        } else {
            total -= side;
        }
    }
    Ok(total)
}

/// A triangle with two ideal vertices and one interior apex. The side
/// opposite the apex joins the two ideal vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiIdealTriangle {
    ideal1: IdealPoint,
    ideal2: IdealPoint,
    apex: PoincarePoint,
}

impl SemiIdealTriangle {
    pub fn new(ideal1: IdealPoint, ideal2: IdealPoint, apex: PoincarePoint) -> Result<Self> {
        if ideal1.separation(&ideal2) <= EPS_SEP {
            return Err(Error::CoincidentIdealPoints);
        }
        Ok(Self {
            ideal1,
            ideal2,
            apex,
        })
    }

    pub fn ideal_vertices(&self) -> (IdealPoint, IdealPoint) {
        (self.ideal1, self.ideal2)
    }

    pub fn apex(&self) -> PoincarePoint {
        self.apex
    }

    /// `L'₁ + L'₂ - L'₃`: the two apex sides minus the ideal side, each
    /// clipped by the horodisks of sizes `s1`, `s2` at the ideal vertices.
    pub fn a_value(&self, s1: f64, s2: f64) -> Result<f64> {
        let l1 = clipped_length_mixed(&self.apex, &self.ideal1, s1)?;
        let l2 = clipped_length_mixed(&self.apex, &self.ideal2, s2)?;
        let l3 = clipped_length_ideal(&self.ideal1, s1, &self.ideal2, s2)?;
        Ok(l1 + l2 - l3)
    }
}
