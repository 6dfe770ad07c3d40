//! Point conversion between the disk models.

use seven_circles::models::{self, HemispherePoint, KleinPoint, PoincarePoint};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    Klein,
    Poincare,
    Hemisphere,
}

impl Model {
    fn dim(self) -> usize {
        match self {
            Model::Hemisphere => 3,
            _ => 2,
        }
    }
}

fn bad(e: seven_circles::Error) -> CliError {
    CliError::Input(e.to_string())
}

fn to_hemisphere(coords: &[f64], from: Model) -> Result<HemispherePoint, CliError> {
    Ok(match from {
        Model::Klein => models::f_inv(&KleinPoint::new(coords[0], coords[1]).map_err(bad)?),
        Model::Poincare => models::g_inv(&PoincarePoint::new(coords[0], coords[1]).map_err(bad)?),
        Model::Hemisphere => HemispherePoint::new(coords[0], coords[1], coords[2]).map_err(bad)?,
    })
}

/// Converts a point given in `from` coordinates to `to` coordinates.
pub fn convert(coords: &[f64], from: Model, to: Model) -> Result<Vec<f64>, CliError> {
    if coords.len() != from.dim() {
        return Err(CliError::Input(format!(
            "a {from:?} point has {} coordinates, got {}",
            from.dim(),
            coords.len()
        )));
    }
    // Direct maps where they exist keep the closed forms exact.
    match (from, to) {
        (Model::Klein, Model::Poincare) => {
            let p = models::klein_to_poincare(&KleinPoint::new(coords[0], coords[1]).map_err(bad)?);
            return Ok(vec![p.x(), p.y()]);
        }
        (Model::Poincare, Model::Klein) => {
            let k =
                models::poincare_to_klein(&PoincarePoint::new(coords[0], coords[1]).map_err(bad)?);
            return Ok(vec![k.x(), k.y()]);
        }
        _ => {}
    }
    let h = to_hemisphere(coords, from)?;
    Ok(match to {
        Model::Klein => {
            let k = models::f(&h);
            vec![k.x(), k.y()]
        }
        Model::Poincare => {
            let p = models::g(&h);
            vec![p.x(), p.y()]
        }
        Model::Hemisphere => vec![h.x(), h.y(), h.z()],
    })
}

/// Fifteen significant digits, trailing zeros dropped, and no negative zero.
pub fn format_sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() {
            "0".into()
        } else {
            v.to_string()
        };
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (14 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}
