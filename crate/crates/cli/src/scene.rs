//! Scene files and the validated scene built from files or flags.
//!
//! ```json
//! {"hexagon_deg": [0, 60, 120, 180, 240, 330], "sizes": [1, 1, 1, 1, 1, 1]}
//! {"chain_deg": [0, 60, 120, 180, 240], "s1": 1.0, "render": {"layers": ["chain", "klein"]}}
//! ```
//!
//! Angles in scene files are always degrees. A chain with five angles asks
//! for the sixth to be solved so that the chain closes.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    /// Horodisks of the chain (or of the given sizes).
    Chain,
    /// Hexagon sides and main diagonals as straight chords.
    Klein,
    /// Hexagon sides and main diagonals as geodesic arcs.
    Poincare,
    /// The small triangle cut out by the main diagonals.
    Triangle,
}

pub const DEFAULT_LAYERS: [Layer; 3] = [Layer::Chain, Layer::Poincare, Layer::Triangle];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderOptions {
    #[serde(default = "default_width")]
    pub width: u32,
    #[serde(default = "default_stroke")]
    pub stroke_width: f64,
    #[serde(default = "default_layers")]
    pub layers: Vec<Layer>,
}

fn default_width() -> u32 {
    1000
}

fn default_stroke() -> f64 {
    2.0
}

fn default_layers() -> Vec<Layer> {
    DEFAULT_LAYERS.to_vec()
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width: default_width(),
            stroke_width: default_stroke(),
            layers: default_layers(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub hexagon_deg: Option<Vec<f64>>,
    pub chain_deg: Option<Vec<f64>>,
    pub s1: Option<f64>,
    pub sizes: Option<Vec<f64>>,
    pub render: Option<RenderOptions>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    Deg,
    Rad,
}

impl AngleUnit {
    pub fn radians(self, a: f64) -> f64 {
        match self {
            AngleUnit::Deg => a.to_radians(),
            AngleUnit::Rad => a,
        }
    }

    pub fn in_unit(self, a: f64) -> f64 {
        match self {
            AngleUnit::Deg => a.to_degrees(),
            AngleUnit::Rad => a,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AngleUnit::Deg => "deg",
            AngleUnit::Rad => "rad",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SceneKind {
    Hexagon,
    /// Five angles means the sixth is to be solved.
    Chain {
        s1: f64,
    },
}

/// A scene with validated shape: six hexagon angles, or five or six chain
/// angles, in the unit recorded alongside them.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub kind: SceneKind,
    pub angles: Vec<f64>,
    pub unit: AngleUnit,
    pub sizes: Option<[f64; 6]>,
    pub render: RenderOptions,
}

impl Scene {
    pub fn hexagon(
        angles: Vec<f64>,
        unit: AngleUnit,
        sizes: Option<Vec<f64>>,
    ) -> Result<Self, CliError> {
        if angles.len() != 6 {
            return Err(CliError::Input(format!(
                "a hexagon needs 6 angles, got {}",
                angles.len()
            )));
        }
        Ok(Self {
            kind: SceneKind::Hexagon,
            angles,
            unit,
            sizes: sizes.map(check_sizes).transpose()?,
            render: RenderOptions::default(),
        })
    }

    pub fn chain(angles: Vec<f64>, unit: AngleUnit, s1: f64) -> Result<Self, CliError> {
        if angles.len() != 5 && angles.len() != 6 {
            return Err(CliError::Input(format!(
                "a chain needs 5 or 6 angles, got {}",
                angles.len()
            )));
        }
        if !(s1 > 0.0 && s1.is_finite()) {
            return Err(CliError::Input(format!("s1 must be positive, got {s1}")));
        }
        Ok(Self {
            kind: SceneKind::Chain { s1 },
            angles,
            unit,
            sizes: None,
            render: RenderOptions::default(),
        })
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read scene {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let file: SceneFile =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad scene: {e}")))?;
        let mut scene = match (file.hexagon_deg, file.chain_deg) {
            (Some(h), None) => {
                if file.s1.is_some() {
                    return Err(CliError::Input("s1 only applies to chains".into()));
                }
                Scene::hexagon(h, AngleUnit::Deg, file.sizes)?
            }
            (None, Some(c)) => {
                if file.sizes.is_some() {
                    return Err(CliError::Input(
                        "sizes of a chain follow from s1; drop \"sizes\"".into(),
                    ));
                }
                Scene::chain(c, AngleUnit::Deg, file.s1.unwrap_or(1.0))?
            }
            _ => {
                return Err(CliError::Input(
                    "scene needs exactly one of \"hexagon_deg\" and \"chain_deg\"".into(),
                ))
            }
        };
        if let Some(r) = file.render {
            scene.render = r;
        }
        Ok(scene)
    }

    pub fn radians(&self) -> Vec<f64> {
        self.angles.iter().map(|a| self.unit.radians(*a)).collect()
    }
}

pub fn check_sizes(v: Vec<f64>) -> Result<[f64; 6], CliError> {
    let arr: [f64; 6] = v
        .try_into()
        .map_err(|v: Vec<f64>| CliError::Input(format!("need 6 sizes, got {}", v.len())))?;
    if let Some(s) = arr.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(CliError::Input(format!("sizes must be positive, got {s}")));
    }
    Ok(arr)
}
