//! Verification reports for hexagon and chain scenes.
//!
//! The text form is one `key = value` per line. Floats use the shortest
//! representation that parses back to the same value, lists are comma
//! separated, points are `x, y`, and missing values are `none`.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde::Serialize;
use seven_circles::prelude::*;

use crate::error::{CliError, Result};
use crate::scene::{AngleUnit, Scene, SceneKind};

/// Key reference shown by `--help`.
pub const REPORT_KEYS: &str = "\
Report keys (hexagon and chain):
  kind                       hexagon | chain
  angle_unit                 deg | rad, the unit of `angles` and `solved_theta6`
  angles                     vertex angles as given
  s1                         first horodisk size (chains)
  solved_theta6              sixth angle found by closure solving, or none
  sizes                      horodisk sizes used for the alternating perimeter
  alternating_perimeter      signed A(P)
  abs_alternating_perimeter  |A(P)|
  triangle_perimeter         hyperbolic perimeter of the small triangle
  triple_point               true when the main diagonals are concurrent
  triple_point_location      the common point, or none
  symmetry_fixed_point       centre of a point reflection symmetry, or none
  theorem3_residual          |A(P)| - 2 perimeter, unit sizes
  trisum_residual            sum over the three reflected pairs, none if degenerate
  closure_residual           s7 / s1 (chains), or none
  verdict                    PASS | FAIL
  tol                        tolerance used for the verdict";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub kind: &'static str,
    pub angle_unit: AngleUnit,
    pub angles: Vec<f64>,
    pub s1: Option<f64>,
    pub solved_theta6: Option<f64>,
    pub sizes: [f64; 6],
    pub alternating_perimeter: f64,
    pub abs_alternating_perimeter: f64,
    pub triangle_perimeter: f64,
    pub triple_point: bool,
    pub triple_point_location: Option<[f64; 2]>,
    pub symmetry_fixed_point: Option<[f64; 2]>,
    pub theorem3_residual: f64,
    pub trisum_residual: Option<f64>,
    pub closure_residual: Option<f64>,
    pub verdict: String,
    pub tol: f64,
}

fn xy(p: &PoincarePoint) -> [f64; 2] {
    [p.x(), p.y()]
}

fn trisum(hex: &IdealHexagon, sizes: &[f64; 6]) -> Result<Option<f64>> {
    match trisum_residual(hex, sizes) {
        Ok(v) => Ok(Some(v)),
        Err(Error::DegenerateTriangle) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// The search arc used when none is given: the open arc from the fifth angle
/// to the first, shrunk slightly at both ends.
pub fn default_arc(thetas5: &[f64; 5]) -> (f64, f64) {
    let gap = (thetas5[0] - thetas5[4]).rem_euclid(TAU);
    let margin = (gap / 4.0).min(1e-7);
    (thetas5[4] + margin, thetas5[4] + gap - margin)
}

/// The chain for a chain scene, solving for the sixth angle if needed.
/// Returns the chain and the solved angle in radians.
pub fn chain_of(
    angles: &[f64],
    s1: f64,
    arc: Option<(f64, f64)>,
) -> Result<(CircleChain, Option<f64>)> {
    match angles.len() {
        6 => {
            if arc.is_some() {
                return Err(CliError::Input(
                    "--arc only applies when solving for the sixth angle".into(),
                ));
            }
            let t: [f64; 6] = angles.try_into().expect("length checked");
            Ok((build_tangent_chain(t, s1).map_err(input)?, None))
        }
        5 => {
            let t: [f64; 5] = angles.try_into().expect("length checked");
            let arc = arc.unwrap_or_else(|| default_arc(&t));
            let theta6 = solve_closure(t, s1, arc)
                .map_err(input)?
                .ok_or(CliError::NoClosure)?;
            let full = [t[0], t[1], t[2], t[3], t[4], theta6];
            Ok((build_tangent_chain(full, s1).map_err(input)?, Some(theta6)))
        }
        n => Err(CliError::Input(format!(
            "a chain needs 5 or 6 angles, got {n}"
        ))),
    }
}

/// Validation failures on user-supplied angles are input errors.
fn input(e: Error) -> CliError {
    match e {
        Error::InvalidAngles(_)
        | Error::InvalidArc(_)
        | Error::InvalidHexagon(_)
        | Error::NonPositiveSize(_) => CliError::Input(e.to_string()),
        e => CliError::Compute(e),
    }
}

pub fn hexagon_report(scene: &Scene, tol: f64) -> Result<Report> {
    let t: [f64; 6] = scene
        .radians()
        .try_into()
        .map_err(|_| CliError::Input("a hexagon needs 6 angles".into()))?;
    let hex = IdealHexagon::from_radians(t).map_err(input)?;
    let sizes = scene.sizes.unwrap_or(UNIT_SIZES);
    let alt = alternating_perimeter(&hex, &sizes)?;
    let tri = small_triangle(&hex)?;
    let perim = triangle_perimeter(&tri)?;
    let triple_point = perim < tol;
    let location = if triple_point {
        PoincarePoint::from_complex(tri.centroid())
            .ok()
            .map(|p| xy(&p))
    } else {
        None
    };
    let theorem3 = theorem3_residual(&hex)?;
    let trisum = trisum(&hex, &sizes)?;
    let holds = theorem3.abs() / (1.0 + perim) < tol && trisum.is_none_or(|r| r.abs() < tol);
    Ok(Report {
        kind: "hexagon",
        angle_unit: scene.unit,
        angles: scene.angles.clone(),
        s1: None,
        solved_theta6: None,
        sizes,
        alternating_perimeter: alt,
        abs_alternating_perimeter: alt.abs(),
        triangle_perimeter: perim,
        triple_point,
        triple_point_location: location,
        symmetry_fixed_point: point_reflection_symmetry(&hex, tol).map(|p| xy(&p)),
        theorem3_residual: theorem3,
        trisum_residual: trisum,
        closure_residual: None,
        verdict: if holds { Verdict::Pass } else { Verdict::Fail }.to_string(),
        tol,
    })
}

pub fn chain_report(scene: &Scene, arc: Option<(f64, f64)>, tol: f64) -> Result<Report> {
    let SceneKind::Chain { s1 } = scene.kind else {
        return Err(CliError::Input("scene has no chain".into()));
    };
    let arc = arc.map(|(lo, hi)| (scene.unit.radians(lo), scene.unit.radians(hi)));
    let (chain, theta6) = chain_of(&scene.radians(), s1, arc)?;
    let hex = chain_to_hexagon(&chain);
    let v = verify_seven_circles(&chain, tol)?;
    Ok(Report {
        kind: "chain",
        angle_unit: scene.unit,
        angles: scene.angles.clone(),
        s1: Some(s1),
        solved_theta6: theta6.map(|t| scene.unit.in_unit(t)),
        sizes: *chain.sizes(),
        alternating_perimeter: v.alternating_perimeter,
        abs_alternating_perimeter: v.alternating_perimeter.abs(),
        triangle_perimeter: v.triangle_perimeter,
        triple_point: v.triple_point,
        triple_point_location: v.triple_point_location.as_ref().map(xy),
        symmetry_fixed_point: v.symmetry_fixed_point.as_ref().map(xy),
        theorem3_residual: theorem3_residual(&hex)?,
        trisum_residual: trisum(&hex, chain.sizes())?,
        closure_residual: Some(v.closure_residual),
        verdict: v.verdict.to_string(),
        tol,
    })
}

/// Shortest round-trip form, with an exponent for very small or large values.
pub fn num(v: &f64) -> String {
    format!("{v:?}")
}

fn list(v: &[f64]) -> String {
    v.iter().map(num).collect::<Vec<_>>().join(", ")
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> String) -> String {
    v.as_ref().map_or_else(|| "none".to_string(), f)
}

impl Report {
    pub fn to_text(&self) -> String {
        let rows: [(&str, String); 17] = [
            ("kind", self.kind.to_string()),
            ("angle_unit", self.angle_unit.name().to_string()),
            ("angles", list(&self.angles)),
            ("s1", opt(&self.s1, num)),
            ("solved_theta6", opt(&self.solved_theta6, num)),
            ("sizes", list(&self.sizes)),
            ("alternating_perimeter", num(&self.alternating_perimeter)),
            (
                "abs_alternating_perimeter",
                num(&self.abs_alternating_perimeter),
            ),
            ("triangle_perimeter", num(&self.triangle_perimeter)),
            ("triple_point", self.triple_point.to_string()),
            (
                "triple_point_location",
                opt(&self.triple_point_location, |p| list(p)),
            ),
            (
                "symmetry_fixed_point",
                opt(&self.symmetry_fixed_point, |p| list(p)),
            ),
            ("theorem3_residual", num(&self.theorem3_residual)),
            ("trisum_residual", opt(&self.trisum_residual, num)),
            ("closure_residual", opt(&self.closure_residual, num)),
            ("verdict", self.verdict.clone()),
            ("tol", num(&self.tol)),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            writeln!(out, "{k} = {v}").expect("writing to a String");
        }
        out
    }
}

/// Formats `key = value` lines for an ordered list of numeric statistics.
pub fn stats_text(rows: &[(&str, String)]) -> String {
    rows.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}
