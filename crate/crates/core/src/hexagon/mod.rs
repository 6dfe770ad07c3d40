//! Ideal hexagons, their main diagonals and small triangle, and numerical
//! checks of the hexagon theorems.
//!
//! For an ideal hexagon `P` with vertices `v1..v6`:
//!
//! * `|A(P)| = 2 · perimeter(T_P)`, where `A(P)` is the alternating perimeter
//!   and `T_P` the triangle cut out by the diagonals `v_k v_{k+3}`;
//! * the diagonals are concurrent iff `P` has a point reflection symmetry
//!   iff `A(P) = 0`.
//!
//! The tangent six-circle chains of [`chain`] produce exactly the hexagons
//! with `A(P) = 0`.

pub mod chain;

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::circles::{alternating_perimeter, SemiIdealTriangle};
use crate::error::{Error, Result};
use crate::geodesics::{hyp_distance, intersect, Geodesic, IdealPoint, EPS_SEP};
use crate::mobius::MobiusTransform;
use crate::models::PoincarePoint;

/// Default tolerance for the triple-point test, in hyperbolic length.
pub const TRIPLE_POINT_TOL: f64 = 1e-8;

/// `trisum_residual` refuses triangles with perimeter at or below this.
pub const DEGENERATE_PERIMETER: f64 = 1e-9;

/// Small-triangle vertices closer than this (Euclidean) are one point.
pub const COINCIDENT_VERTICES: f64 = 1e-12;

pub const UNIT_SIZES: [f64; 6] = [1.0; 6];

/// Six ideal points in strictly increasing counterclockwise order from `v1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealHexagon {
    vertices: [IdealPoint; 6],
}

impl IdealHexagon {
    /// Rejects vertex lists that are not strictly cyclically ordered; the
    /// input is never re-sorted since that would change the diagonals.
    pub fn new(vertices: [IdealPoint; 6]) -> Result<Self> {
        let start = vertices[0].theta();
        let mut prev = 0.0;
        for (k, v) in vertices.iter().enumerate().skip(1) {
            let off = (v.theta() - start).rem_euclid(TAU);
            if !(off - prev > EPS_SEP) {
                return Err(Error::InvalidHexagon(format!(
                    "vertex {} is not strictly after vertex {} in counterclockwise order",
                    k + 1,
                    k
                )));
            }
            prev = off;
        }
        if !(TAU - prev > EPS_SEP) {
            return Err(Error::InvalidHexagon("vertex 6 wraps past vertex 1".into()));
        }
        Ok(Self { vertices })
    }

    pub fn from_radians(thetas: [f64; 6]) -> Result<Self> {
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidHexagon("non-finite angle".into()));
        }
        Self::new(thetas.map(IdealPoint::new))
    }

    pub fn from_degrees(degs: [f64; 6]) -> Result<Self> {
        Self::from_radians(degs.map(f64::to_radians))
    }

    pub fn vertices(&self) -> &[IdealPoint; 6] {
        &self.vertices
    }

    pub fn angles(&self) -> [f64; 6] {
        self.vertices.map(|v| v.theta())
    }

    /// Smallest angular gap between cyclically consecutive vertices.
    pub fn min_separation(&self) -> f64 {
        (0..6)
            .map(|k| self.vertices[k].separation(&self.vertices[(k + 1) % 6]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Image under a disk isometry, keeping the image of `v1` first.
    pub fn transform(&self, t: &MobiusTransform) -> Result<Self> {
        let mut out = self.vertices;
        for v in out.iter_mut() {
            *v = IdealPoint::from_complex(t.apply(v.u())?);
        }
        Self::new(out)
    }
}

/// The diagonals `(v1, v4)`, `(v2, v5)`, `(v3, v6)`.
pub fn main_diagonals(p: &IdealHexagon) -> [Geodesic; 3] {
    let v = p.vertices();
    // Cyclic ordering keeps v_k and v_{k+3} well separated.
    [0, 1, 2].map(|k| Geodesic::new(v[k], v[k + 3]).expect("opposite vertices are distinct"))
}

/// Vertices of the triangle bounded by the three main diagonals `d1, d2, d3`:
/// `q1 = d1 ∩ d2`, `q2 = d1 ∩ d3`, `q3 = d2 ∩ d3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallTriangle {
    q: [PoincarePoint; 3],
    degenerate: bool,
}

impl SmallTriangle {
    pub fn vertices(&self) -> &[PoincarePoint; 3] {
        &self.q
    }

    /// All three vertices coincide within [`COINCIDENT_VERTICES`].
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Intersection point of diagonals `i` and `j` (0-based, distinct).
    pub fn apex(&self, i: usize, j: usize) -> PoincarePoint {
        match (i.min(j), i.max(j)) {
            (0, 1) => self.q[0],
            (0, 2) => self.q[1],
            (1, 2) => self.q[2],
            _ => panic!("diagonal indices must be distinct and below 3"),
        }
    }

    /// Euclidean centroid of the vertices; the triple point when degenerate.
    pub fn centroid(&self) -> Complex64 {
        self.q.iter().map(|q| q.to_complex()).sum::<Complex64>() / 3.0
    }
}

pub fn small_triangle(p: &IdealHexagon) -> Result<SmallTriangle> {
    let [d1, d2, d3] = main_diagonals(p);
    let meet = |a: &Geodesic, b: &Geodesic| -> Result<PoincarePoint> {
        intersect(a, b)?.ok_or_else(|| {
            Error::Internal("main diagonals of an ordered hexagon failed to cross".into())
        })
    };
    let q = [meet(&d1, &d2)?, meet(&d1, &d3)?, meet(&d2, &d3)?];
    let z = q.map(|p| p.to_complex());
    let degenerate = (z[0] - z[1]).norm() <= COINCIDENT_VERTICES
        && (z[1] - z[2]).norm() <= COINCIDENT_VERTICES
        && (z[0] - z[2]).norm() <= COINCIDENT_VERTICES;
    Ok(SmallTriangle { q, degenerate })
}

pub fn triangle_perimeter(t: &SmallTriangle) -> Result<f64> {
    if t.degenerate {
        return Ok(0.0);
    }
    let [a, b, c] = t.q;
    Ok(hyp_distance(&a, &b)? + hyp_distance(&b, &c)? + hyp_distance(&c, &a)?)
}

/// `|A(P)| - 2 · perimeter(T_P)` with unit horodisk sizes.
pub fn theorem3_residual(p: &IdealHexagon) -> Result<f64> {
    let alt = alternating_perimeter(p, &UNIT_SIZES)?;
    let perim = triangle_perimeter(&small_triangle(p)?)?;
    Ok(alt.abs() - 2.0 * perim)
}

/// The semi-ideal triangle on side `k` (0-based, joining `v_k` and
/// `v_{k+1}`) with apex where the two diagonals through those vertices meet.
fn side_triangle(p: &IdealHexagon, t: &SmallTriangle, k: usize) -> Result<SemiIdealTriangle> {
    let v = p.vertices();
    let apex = t.apex(k % 3, (k + 1) % 3);
    SemiIdealTriangle::new(v[k], v[(k + 1) % 6], apex)
}

/// The three pairs `(Y, G)` of semi-ideal triangles. `Y` sits on an odd side
/// (1, 3, 5 counting from one) and `G` on the opposite side; each pair shares
/// its apex, and the half-turn about that apex carries `Y` onto `G`.
pub fn reflected_triangle_pairs(
    p: &IdealHexagon,
) -> Result<[(SemiIdealTriangle, SemiIdealTriangle); 3]> {
    let t = small_triangle(p)?;
    let pair = |k: usize| -> Result<_> {
        Ok((side_triangle(p, &t, k)?, side_triangle(p, &t, (k + 3) % 6)?))
    };
    Ok([pair(0)?, pair(2)?, pair(4)?])
}

/// `A(Y₁) + A(Y₂) + A(Y₃) - (A(G₁) + A(G₂) + A(G₃))` using the horodisk sizes
/// `sizes[k]` at vertex `v_{k+1}`.
pub fn trisum_residual(p: &IdealHexagon, sizes: &[f64; 6]) -> Result<f64> {
    let t = small_triangle(p)?;
    if !(triangle_perimeter(&t)? > DEGENERATE_PERIMETER) {
        return Err(Error::DegenerateTriangle);
    }
    let index_of = |ip: &IdealPoint| {
        p.vertices()
            .iter()
            .position(|v| v == ip)
            .expect("triangle vertex is a hexagon vertex")
    };
    let a_of = |tri: &SemiIdealTriangle| {
        let (i1, i2) = tri.ideal_vertices();
        tri.a_value(sizes[index_of(&i1)], sizes[index_of(&i2)])
    };
    let mut total = 0.0;
    for (y, g) in reflected_triangle_pairs(p)? {
        total += a_of(&y)? - a_of(&g)?;
    }
    Ok(total)
}

pub fn check_triple_point(p: &IdealHexagon, tol: f64) -> Result<bool> {
    Ok(triangle_perimeter(&small_triangle(p)?)? < tol)
}

/// Looks for a point reflection swapping opposite vertices.
///
/// The Mobius map `M` with `M(v_k) = v_{k+3}` for `k = 1, 2, 3` is unique;
/// the hexagon is point-symmetric when `M` preserves the disk, has trace zero
/// (so squares to the identity), and has an interior fixed point `z0` about
/// which opposite vertices are antipodal: moving `z0` to the origin sends
/// `v_{k+3}` to `-v_k`. Returns `z0` in that case.
pub fn point_reflection_symmetry(p: &IdealHexagon, tol: f64) -> Option<PoincarePoint> {
    let u = p.vertices().map(|v| v.u());
    let m = MobiusTransform::from_three_points([u[0], u[1], u[2]], [u[3], u[4], u[5]]).ok()?;
    if !m.is_disk_isometry(tol) {
        return None;
    }
    // with ad - bc = 1, M is an involution exactly when its trace vanishes
    let (a, _, _, d) = m.coefficients();
    if !(m.trace().norm() <= tol * (a.norm() + d.norm())) {
        return None;
    }
    let z0 = m.fixed_points().into_iter().find(|z| z.norm_sqr() < 1.0)?;
    let j = MobiusTransform::isometry_to_zero(z0).ok()?;
    let mut w = [Complex64::new(0.0, 0.0); 6];
    for k in 0..6 {
        w[k] = j.apply(u[k]).ok()?;
    }
    for k in 0..3 {
        if !((w[k + 3] + w[k]).norm() <= tol) {
            return None;
        }
    }
    PoincarePoint::from_complex(z0).ok()
}
