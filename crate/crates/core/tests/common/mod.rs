//! Independent oracles shared by the integration tests. None of these go
//! through the cross-ratio, Klein-chord, or log-size code paths they check.
#![allow(dead_code)]

use seven_circles::Complex64;

/// Closed-form Poincare distance `2 artanh(|b - c| / |1 - conj(b) c|)`.
pub fn distance_oracle(b: Complex64, c: Complex64) -> f64 {
    let num = (b - c).norm();
    let den = (Complex64::new(1.0, 0.0) - b.conj() * c).norm();
    2.0 * (num / den).atanh()
}

/// Points where two circles cross.
pub fn circle_circle(c1: Complex64, r1: f64, c2: Complex64, r2: f64) -> Vec<Complex64> {
    let d = (c2 - c1).norm();
    if d > r1 + r2 || d < (r1 - r2).abs() || d == 0.0 {
        return Vec::new();
    }
    let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    let h = (r1 * r1 - a * a).max(0.0).sqrt();
    let e = (c2 - c1) / d;
    let mid = c1 + e * a;
    let perp = Complex64::new(-e.im, e.re);
    vec![mid + perp * h, mid - perp * h]
}

/// Points where the line through the origin in direction `angle` meets a circle.
pub fn line_circle(angle: f64, c: Complex64, r: f64) -> Vec<Complex64> {
    let e = Complex64::from_polar(1.0, angle);
    // |t e - c|² = r²  →  t² - 2 t Re(e conj(c)) + |c|² - r² = 0
    let b = (e * c.conj()).re;
    let disc = b * b - (c.norm_sqr() - r * r);
    if disc < 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    vec![e * (b + s), e * (b - s)]
}

/// Euclidean form of the horodisk of size `s` at `u`.
pub fn horocircle(u: Complex64, s: f64) -> (Complex64, f64) {
    let r = s / (s + 2.0);
    (u * (1.0 - r), r)
}

/// Crossing of a geodesic carrier with a horocircle, other than the shared
/// ideal point `u`.
pub fn carrier_horocircle_point(
    carrier: seven_circles::geodesics::Carrier,
    u: Complex64,
    s: f64,
) -> Complex64 {
    use seven_circles::geodesics::Carrier;
    let (hc, hr) = horocircle(u, s);
    let pts = match carrier {
        Carrier::Diameter { angle } => line_circle(angle, hc, hr),
        Carrier::OrthoCircle { center, radius } => circle_circle(center, radius, hc, hr),
    };
    pts.into_iter()
        .max_by(|a, b| (a - u).norm().total_cmp(&(b - u).norm()))
        .expect("carrier crosses the horocircle")
}
