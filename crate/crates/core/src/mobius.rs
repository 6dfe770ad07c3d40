//! Mobius transformations `z -> (az + b) / (cz + d)` and the isometries of
//! the Poincare disk built from them.
//!
//! Coefficients are always stored with `ad - bc = 1`. The pair `(a, b, c, d)`
//! and `(-a, -b, -c, -d)` describe the same map, so equality is up to sign.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Threshold for pole and degeneracy detection.
pub const EPS_DEGEN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusTransform {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusTransform {
    /// Builds a transform from raw coefficients, rescaling to unit determinant.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det.norm() > EPS_DEGEN) || !det.is_finite() {
            return Err(Error::DegenerateTransform);
        }
        let k = det.sqrt();
        Ok(Self {
            a: a / k,
            b: b / k,
            c: c / k,
            d: d / k,
        })
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    /// Rotation about the origin, `z -> e^{i theta} z`.
    pub fn rotation(theta: f64) -> Self {
        let half = Complex64::from_polar(1.0, theta / 2.0);
        Self {
            a: half,
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: half.conj(),
        }
    }

    /// The involutive isometry `z -> (z - p) / (conj(p) z - 1)` swapping `p` and `0`.
    pub fn isometry_to_zero(p: Complex64) -> Result<Self> {
        if !(p.norm_sqr() < 1.0) {
            return Err(Error::NotInDisk { x: p.re, y: p.im });
        }
        Self::new(
            Complex64::new(1.0, 0.0),
            -p,
            p.conj(),
            Complex64::new(-1.0, 0.0),
        )
    }

    /// The half-turn about `p`: conjugate of `z -> -z` by [`Self::isometry_to_zero`].
    pub fn point_reflection(p: Complex64) -> Result<Self> {
        let j = Self::isometry_to_zero(p)?;
        Ok(j.compose(&Self::rotation(std::f64::consts::PI)).compose(&j))
    }

    /// The unique transform sending `from[k]` to `to[k]` for `k = 0, 1, 2`.
    pub fn from_three_points(from: [Complex64; 3], to: [Complex64; 3]) -> Result<Self> {
        let src = Self::to_zero_one_infinity(from)?;
        let dst = Self::to_zero_one_infinity(to)?;
        Ok(dst.inverse().compose(&src))
    }

    // z1 -> 0, z2 -> 1, z3 -> infinity
    fn to_zero_one_infinity([z1, z2, z3]: [Complex64; 3]) -> Result<Self> {
        let p = z2 - z3;
        let q = z2 - z1;
        Self::new(p, -z1 * p, q, -z3 * q)
    }

    pub fn coefficients(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() <= EPS_DEGEN {
            return Err(Error::Pole);
        }
        Ok((self.a * z + self.b) / den)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        // Product of unit-determinant matrices; renormalize to absorb rounding.
        Self::new(a, b, c, d).unwrap_or(Self { a, b, c, d })
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Coefficient-wise comparison up to the global sign ambiguity.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let diff = |s: f64| {
            [
                self.a - other.a * s,
                self.b - other.b * s,
                self.c - other.c * s,
                self.d - other.d * s,
            ]
            .iter()
            .all(|w| w.norm() <= tol)
        };
        diff(1.0) || diff(-1.0)
    }

    /// Decides whether the map preserves the open unit disk by recovering the
    /// normal form `e^{i theta} (z - alpha) / (1 - conj(alpha) z)`.
    pub fn is_disk_isometry(&self, tol: f64) -> bool {
        match self.disk_normal_form() {
            Some((theta, alpha)) => {
                if !(alpha.norm() < 1.0) {
                    return false;
                }
                let rebuilt = Self::from_normal_form(theta, alpha);
                match rebuilt {
                    Ok(r) => {
                        let scale = self.a.norm().max(1.0);
                        self.approx_eq(&r, tol * scale)
                    }
                    Err(_) => false,
                }
            }
            None => false,
        }
    }

    /// Recovers `(theta, alpha)` assuming the normal form; `None` when `a = 0`.
    pub fn disk_normal_form(&self) -> Option<(f64, Complex64)> {
        if self.a.norm() <= EPS_DEGEN {
            return None;
        }
        let alpha = -self.b / self.a;
        let theta = 2.0 * self.a.arg();
        Some((theta, alpha))
    }

    pub fn from_normal_form(theta: f64, alpha: Complex64) -> Result<Self> {
        let rot = Complex64::from_polar(1.0, theta);
        Self::new(rot, -rot * alpha, -alpha.conj(), Complex64::new(1.0, 0.0))
    }

    /// Fixed points of the map in the finite plane (one or two, or none for
    /// translations `z -> z + b`). The identity reports no fixed points.
    pub fn fixed_points(&self) -> Vec<Complex64> {
        // c z^2 + (d - a) z - b = 0
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if c.norm() <= EPS_DEGEN {
            let lin = d - a;
            if lin.norm() <= EPS_DEGEN {
                return Vec::new();
            }
            return vec![b / lin];
        }
        let disc = ((d - a) * (d - a) + 4.0 * b * c).sqrt();
        let half = -(d - a);
        // Pick the numerically stable root first, then Vieta.
        let q = if (half + disc).norm() >= (half - disc).norm() {
            half + disc
        } else {
            half - disc
        };
        let z1 = q / (2.0 * c);
        let z2 = if q.norm() > EPS_DEGEN {
            -2.0 * b / q
        } else {
            z1
        };
        vec![z1, z2]
    }
}

/// Image of a Euclidean circle under a Mobius map, assuming the image is
/// again a finite circle. Uses three sampled points and their circumcircle.
pub fn circle_image(
    t: &MobiusTransform,
    center: Complex64,
    radius: f64,
) -> Result<(Complex64, f64)> {
    let pts: Vec<Complex64> = [0.0, 2.0, 4.0]
        .iter()
        .map(|k| t.apply(center + Complex64::from_polar(radius, k * std::f64::consts::PI / 3.0)))
        .collect::<Result<_>>()?;
    circumcircle(pts[0], pts[1], pts[2])
}

/// Circle through three points.
pub fn circumcircle(p: Complex64, q: Complex64, r: Complex64) -> Result<(Complex64, f64)> {
    let b = q - p;
    let c = r - p;
    let cross = b.re * c.im - b.im * c.re;
    if cross.abs() <= EPS_DEGEN * (b.norm() * c.norm()).max(f64::MIN_POSITIVE) {
        return Err(Error::NumericalInstability("collinear points".into()));
    }
    let d = 2.0 * cross;
    let b2 = b.norm_sqr();
    let c2 = c.norm_sqr();
    let ux = (c.im * b2 - b.im * c2) / d;
    let uy = (b.re * c2 - c.re * b2) / d;
    let off = Complex64::new(ux, uy);
    Ok((p + off, off.norm()))
}
