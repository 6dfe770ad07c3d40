//! The Klein, Poincare and hemisphere models of the hyperbolic plane, and the
//! maps between them.
//!
//! Vertical projection `f` relates the hemisphere and Klein models;
//! stereographic projection `g` from the south pole relates the hemisphere
//! and Poincare models. The Klein/Poincare conversions are the composites
//! `g ∘ f⁻¹` and `f ∘ g⁻¹`, evaluated through closed forms.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points must satisfy `x² + y² < 1 - DISK_MARGIN`.
pub const DISK_MARGIN: f64 = 1e-14;

/// Hemisphere inputs within this distance of the unit sphere are renormalized.
pub const SPHERE_RENORM_TOL: f64 = 1e-9;

fn check_disk(x: f64, y: f64) -> Result<()> {
    let r2 = x * x + y * y;
    if r2.is_finite() && r2 < 1.0 - DISK_MARGIN {
        Ok(())
    } else {
        Err(Error::NotInDisk { x, y })
    }
}

/// A point of the open unit disk in the Klein model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KleinPoint {
    x: f64,
    y: f64,
}

impl KleinPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        check_disk(x, y)?;
        Ok(Self { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }
}

/// A point of the open unit disk in the Poincare model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincarePoint {
    x: f64,
    y: f64,
}

impl PoincarePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        check_disk(x, y)?;
        Ok(Self { x, y })
    }

    pub fn origin() -> Self {
        Self { x: 0.0, y: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// A point of the open northern hemisphere of the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HemispherePoint {
    x: f64,
    y: f64,
    z: f64,
}

impl HemispherePoint {
    /// Accepts points within [`SPHERE_RENORM_TOL`] of the sphere and
    /// rescales them onto it; rejects anything farther off or with `z <= 0`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || (n2 - 1.0).abs() >= SPHERE_RENORM_TOL || !(z > 0.0) {
            return Err(Error::NotOnHemisphere { x, y, z });
        }
        let n = n2.sqrt();
        Ok(Self {
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }
}

/// Vertical projection onto the Klein disk.
pub fn f(h: &HemispherePoint) -> KleinPoint {
    KleinPoint { x: h.x, y: h.y }
}

/// Vertical lift from the Klein disk to the hemisphere.
pub fn f_inv(k: &KleinPoint) -> HemispherePoint {
    let z = (1.0 - k.x * k.x - k.y * k.y).sqrt();
    HemispherePoint { x: k.x, y: k.y, z }
}

/// Stereographic projection from the south pole onto the Poincare disk.
pub fn g(h: &HemispherePoint) -> PoincarePoint {
    let s = 1.0 + h.z;
    PoincarePoint {
        x: h.x / s,
        y: h.y / s,
    }
}

/// Inverse stereographic projection.
pub fn g_inv(p: &PoincarePoint) -> HemispherePoint {
    let r2 = p.x * p.x + p.y * p.y;
    let s = 1.0 / (1.0 + r2);
    HemispherePoint {
        x: 2.0 * p.x * s,
        y: 2.0 * p.y * s,
        z: (1.0 - r2) * s,
    }
}

/// `g ∘ f⁻¹`, i.e. `k / (1 + sqrt(1 - |k|²))`.
pub fn klein_to_poincare(k: &KleinPoint) -> PoincarePoint {
    let s = 1.0 + (1.0 - k.x * k.x - k.y * k.y).sqrt();
    PoincarePoint {
        x: k.x / s,
        y: k.y / s,
    }
}

/// `f ∘ g⁻¹`, i.e. `2p / (1 + |p|²)`.
pub fn poincare_to_klein(p: &PoincarePoint) -> KleinPoint {
    let s = 2.0 / (1.0 + p.x * p.x + p.y * p.y);
    // |2p/(1+|p|²)| can round up to the margin for points extremely close to
    // the boundary; clamp so the result stays a valid Klein point.
    let (x, y) = (p.x * s, p.y * s);
    let r2 = x * x + y * y;
    if r2 < 1.0 - DISK_MARGIN {
        KleinPoint { x, y }
    } else {
        let shrink = ((1.0 - 2.0 * DISK_MARGIN) / r2).sqrt();
        KleinPoint {
            x: x * shrink,
            y: y * shrink,
        }
    }
}
