//! Ideal points, geodesics of the Poincare disk, and the cross-ratio distance.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::MobiusTransform;
use crate::models::PoincarePoint;

/// Minimum angular separation between distinct ideal points.
pub const EPS_SEP: f64 = 1e-9;
/// Endpoints this close to antipodal get a diameter carrier.
pub const EPS_ANTI: f64 = 1e-9;

/// A point of the ideal boundary, stored by angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealPoint {
    theta: f64,
}

impl IdealPoint {
    /// Any finite angle; reduced into `[0, 2π)`.
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        if t >= TAU {
            t = 0.0;
        }
        Self { theta: t }
    }

    pub fn from_degrees(deg: f64) -> Self {
        Self::new(deg.to_radians())
    }

    /// Direction of a nonzero complex number.
    pub fn from_complex(u: Complex64) -> Self {
        Self::new(u.im.atan2(u.re))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn u(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// Angular distance along the circle, in `[0, π]`.
    pub fn separation(&self, other: &IdealPoint) -> f64 {
        let d = (self.theta - other.theta).rem_euclid(TAU);
        d.min(TAU - d)
    }
}

/// Euclidean support of a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Carrier {
    /// Diameter through the origin in direction `angle`.
    Diameter { angle: f64 },
    /// Circle orthogonal to the unit circle.
    OrthoCircle { center: Complex64, radius: f64 },
}

/// A geodesic, identified by its two ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    a: IdealPoint,
    b: IdealPoint,
    carrier: Carrier,
}

impl Geodesic {
    pub fn new(a: IdealPoint, b: IdealPoint) -> Result<Self> {
        let sep = a.separation(&b);
        if !(sep > EPS_SEP) {
            return Err(Error::CoincidentIdealPoints);
        }
        let carrier = if (sep - PI).abs() < EPS_ANTI {
            Carrier::Diameter { angle: a.theta }
        } else {
            let (ua, ub) = (a.u(), b.u());
            let center = (ua + ub) / (1.0 + (ua * ub.conj()).re);
            Carrier::OrthoCircle {
                center,
                radius: (center - ua).norm(),
            }
        };
        Ok(Self { a, b, carrier })
    }

    /// The geodesic through two distinct interior points.
    pub fn through(p: &PoincarePoint, q: &PoincarePoint) -> Result<Self> {
        let (a, d) = ideal_endpoints(p, q)?;
        Self::new(a, d)
    }

    pub fn endpoints(&self) -> (IdealPoint, IdealPoint) {
        (self.a, self.b)
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    fn same_endpoints(&self, other: &Geodesic) -> bool {
        let near = |p: &IdealPoint, q: &IdealPoint| p.separation(q) <= EPS_SEP;
        (near(&self.a, &other.a) && near(&self.b, &other.b))
            || (near(&self.a, &other.b) && near(&self.b, &other.a))
    }

    /// Euclidean distance from `p` to the carrier.
    pub fn distance_to_carrier(&self, p: Complex64) -> f64 {
        match self.carrier {
            Carrier::Diameter { angle } => (p * Complex64::from_polar(1.0, -angle)).im.abs(),
            Carrier::OrthoCircle { center, radius } => ((p - center).norm() - radius).abs(),
        }
    }

    pub fn contains(&self, p: &PoincarePoint, tol: f64) -> bool {
        self.distance_to_carrier(p.to_complex()) <= tol
    }
}

/// Ideal endpoints `(a, d)` of the geodesic through `b` and `c`, ordered so
/// that `a, b, c, d` occur in that order along it.
pub fn ideal_endpoints(b: &PoincarePoint, c: &PoincarePoint) -> Result<(IdealPoint, IdealPoint)> {
    let (bz, cz) = (b.to_complex(), c.to_complex());
    if (bz - cz).norm() <= 1e-12 {
        return Err(Error::CoincidentPoints);
    }
    // Move b to the origin; the geodesic becomes a diameter through J(c).
    let j = MobiusTransform::isometry_to_zero(bz)?;
    let cj = j.apply(cz)?;
    let dir = cj / cj.norm();
    let a = j.apply(-dir)?;
    let d = j.apply(dir)?;
    Ok((IdealPoint::from_complex(a), IdealPoint::from_complex(d)))
}

/// The cross-ratio `(a-c)(b-d) / ((a-b)(c-d))` for the ordered endpoints of
/// the geodesic through `b` and `c`.
pub fn distance_cross_ratio(b: &PoincarePoint, c: &PoincarePoint) -> Result<Complex64> {
    let (a, d) = ideal_endpoints(b, c)?;
    let (a, d) = (a.u(), d.u());
    let (bz, cz) = (b.to_complex(), c.to_complex());
    Ok((a - cz) * (bz - d) / ((a - bz) * (cz - d)))
}

/// Hyperbolic distance as the logarithm of the endpoint cross-ratio.
///
/// The cross-ratio is checked to be real and at least one rather than being
/// coerced; a violation is reported as [`Error::NumericalInstability`].
pub fn hyp_distance(b: &PoincarePoint, c: &PoincarePoint) -> Result<f64> {
    if (b.to_complex() - c.to_complex()).norm() <= 1e-12 {
        return Ok(0.0);
    }
    let v = distance_cross_ratio(b, c)?;
    if !(v.im.abs() < 1e-9 * (1.0 + v.norm())) || !(v.re >= 1.0 - 1e-12) {
        return Err(Error::NumericalInstability(format!(
            "cross-ratio {v} is not a real number >= 1"
        )));
    }
    Ok(v.re.max(1.0).ln())
}

/// Intersection of two geodesics inside the disk, if they cross.
///
/// Both geodesics are straight chords in the Klein model; the chords are
/// intersected there and the point is carried back to the Poincare model.
pub fn intersect(g1: &Geodesic, g2: &Geodesic) -> Result<Option<PoincarePoint>> {
    if g1.same_endpoints(g2) {
        return Err(Error::IdenticalGeodesics);
    }
    let (p1, q1) = (g1.a.u(), g1.b.u());
    let (p2, q2) = (g2.a.u(), g2.b.u());
    let cross = |u: Complex64, v: Complex64| u.re * v.im - u.im * v.re;
    let d1 = q1 - p1;
    let d2 = q2 - p2;
    let denom = cross(d1, d2);
    if denom.abs() <= 1e-15 * d1.norm() * d2.norm() {
        return Ok(None);
    }
    // Chord parameters measured from both ends of each chord, so that
    // t * (1 - t) is available without cancellation near either end.
    let t = cross(p2 - p1, d2) / denom;
    let t_rev = cross(p2 - q1, d2) / -denom;
    let s = cross(p2 - p1, d1) / denom;
    let s_rev = cross(q2 - p1, d1) / -denom;
    if !(t > 0.0 && t_rev > 0.0 && s > 0.0 && s_rev > 0.0) {
        return Ok(None);
    }
    let k = if t <= t_rev {
        p1 + d1 * t
    } else {
        q1 - d1 * t_rev
    };
    // For a point on the chord, 1 - |k|² = t (1 - t) |q1 - p1|².
    let w = (t * t_rev).sqrt() * d1.norm();
    let p = k / (1.0 + w);
    Ok(PoincarePoint::from_complex(p).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(x: f64, y: f64) -> PoincarePoint {
        PoincarePoint::new(x, y).unwrap()
    }

    #[test]
    fn ideal_point_normalizes() {
        assert!((IdealPoint::new(-PI / 2.0).theta() - 1.5 * PI).abs() < 1e-15);
        assert!(IdealPoint::new(TAU).theta().abs() < 1e-15);
        assert!((IdealPoint::new(1.0).u().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn antipodal_pair_is_a_diameter() {
        let g = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI)).unwrap();
        assert_eq!(g.carrier(), Carrier::Diameter { angle: 0.0 });
    }

    #[test]
    fn quarter_turn_carrier() {
        let g = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI / 2.0)).unwrap();
        match g.carrier() {
            Carrier::OrthoCircle { center, radius } => {
                assert!((center - Complex64::new(1.0, 1.0)).norm() < 1e-15);
                assert!((radius - 1.0).abs() < 1e-15);
                assert!((center.norm_sqr() - 1.0 - radius * radius).abs() < 1e-10);
            }
            c => panic!("unexpected carrier {c:?}"),
        }
    }

    #[test]
    fn worked_carrier() {
        let g = Geodesic::new(
            IdealPoint::new(2.0 * PI / 3.0),
            IdealPoint::new(11.0 * PI / 6.0),
        )
        .unwrap();
        match g.carrier() {
            Carrier::OrthoCircle { center, radius } => {
                let expect = 1.0 + 3f64.sqrt();
                assert!((center - Complex64::new(expect, expect)).norm() < 1e-12);
                assert!((radius - (2.0 + 3f64.sqrt())).abs() < 1e-12);
                assert!((center.norm_sqr() - 1.0 - radius * radius).abs() < 1e-10);
                for e in [g.a.u(), g.b.u()] {
                    assert!(((e - center).norm() - radius).abs() < 1e-10);
                }
            }
            c => panic!("unexpected carrier {c:?}"),
        }
    }

    #[test]
    fn coincident_ideal_points_rejected() {
        assert_eq!(
            Geodesic::new(IdealPoint::new(1.0), IdealPoint::new(1.0 + 1e-12)),
            Err(Error::CoincidentIdealPoints)
        );
    }

    #[test]
    fn endpoints_of_real_diameter() {
        let (a, d) = ideal_endpoints(&pp(0.0, 0.0), &pp(0.5, 0.0)).unwrap();
        assert!((a.u() - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((d.u() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn endpoints_ordering_on_imaginary_axis() {
        let (a, d) = ideal_endpoints(&pp(0.0, 0.5), &pp(0.0, 0.0)).unwrap();
        assert!((a.u() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((d.u() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn endpoints_need_distinct_points() {
        let p = pp(0.2, 0.1);
        assert_eq!(ideal_endpoints(&p, &p), Err(Error::CoincidentPoints));
    }

    #[test]
    fn distance_examples() {
        let p = pp(0.3, 0.1);
        assert_eq!(hyp_distance(&p, &p).unwrap(), 0.0);
        let d = hyp_distance(&pp(0.0, 0.0), &pp(0.5, 0.0)).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-14);
        let d = hyp_distance(&pp(0.0, 0.0), &pp(0.0, 0.5)).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-14);
        assert!((d - 1.0986123).abs() < 1e-7);
    }

    #[test]
    fn orthogonal_diameters_meet_at_origin() {
        let g1 = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI)).unwrap();
        let g2 = Geodesic::new(IdealPoint::new(PI / 2.0), IdealPoint::new(1.5 * PI)).unwrap();
        let p = intersect(&g1, &g2).unwrap().unwrap();
        assert!(p.to_complex().norm() < 1e-15);
    }

    #[test]
    fn worked_intersection() {
        let g1 = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI)).unwrap();
        let g2 = Geodesic::new(
            IdealPoint::new(2.0 * PI / 3.0),
            IdealPoint::new(11.0 * PI / 6.0),
        )
        .unwrap();
        let p = intersect(&g1, &g2).unwrap().unwrap();
        // x = c - sqrt(R² - c²) with c = 1 + √3, R = 2 + √3
        let c = 1.0 + 3f64.sqrt();
        let r = 2.0 + 3f64.sqrt();
        let x = c - (r * r - c * c).sqrt();
        assert!((p.x() - x).abs() < 1e-12);
        assert!(p.y().abs() < 1e-12);
        assert!((p.x() - 0.18960).abs() < 1e-4);
    }

    #[test]
    fn disjoint_geodesics_do_not_meet() {
        let g1 = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI / 6.0)).unwrap();
        let g2 = Geodesic::new(IdealPoint::new(PI), IdealPoint::new(7.0 * PI / 6.0)).unwrap();
        assert_eq!(intersect(&g1, &g2).unwrap(), None);
    }

    #[test]
    fn geodesics_sharing_an_endpoint_do_not_meet_inside() {
        let g1 = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(2.0)).unwrap();
        let g2 = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(4.0)).unwrap();
        assert_eq!(intersect(&g1, &g2).unwrap(), None);
    }

    #[test]
    fn identical_geodesics_rejected() {
        let g1 = Geodesic::new(IdealPoint::new(0.3), IdealPoint::new(2.0)).unwrap();
        let g2 = Geodesic::new(IdealPoint::new(2.0), IdealPoint::new(0.3)).unwrap();
        assert_eq!(intersect(&g1, &g2), Err(Error::IdenticalGeodesics));
    }

    #[test]
    fn on_geodesic_cases() {
        let diam = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI)).unwrap();
        assert!(diam.contains(&pp(0.3, 0.0), 1e-12));
        assert!(!diam.contains(&pp(0.3, 0.2), 1e-9));
        let arc = Geodesic::new(IdealPoint::new(0.0), IdealPoint::new(PI / 2.0)).unwrap();
        let diag =
            Geodesic::new(IdealPoint::new(PI / 4.0), IdealPoint::new(5.0 * PI / 4.0)).unwrap();
        let p = intersect(&arc, &diag).unwrap().unwrap();
        assert!(arc.contains(&p, 1e-12));
        assert!(diag.contains(&p, 1e-12));
    }
}
