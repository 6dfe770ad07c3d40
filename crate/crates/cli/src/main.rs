//! `seven-circles`: verify the Seven Circles theorem and its hyperbolic
//! versions on ideal hexagons and horodisk chains, and draw them.

mod convert;
mod error;
mod render;
mod report;
mod sample;
mod scene;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use seven_circles::prelude::*;

use crate::error::{CliError, Result};
use crate::scene::{AngleUnit, Layer, Scene, SceneKind};

const EXIT_CODES: &str = "\
Exit codes:
  0  computed (a FAIL verdict is still a successful run)
  1  computation failed
  2  invalid input
  3  no closing sixth angle in the search arc
  4  output could not be written";

#[derive(Debug, Parser)]
#[command(name = "seven-circles", version, about, after_long_help = EXIT_CODES)]
struct Cli {
    /// Tolerance for verdicts, triple points and symmetry detection.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Read and print angles in radians instead of degrees.
    #[arg(long, global = true)]
    radians: bool,
    /// Seed for `sample`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Also write the result as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a point between the Klein, Poincare and hemisphere models.
    #[command(allow_negative_numbers = true)]
    Convert {
        /// Two coordinates, or three for the hemisphere.
        #[arg(required = true, num_args = 2..=3)]
        coords: Vec<f64>,
        #[arg(long, value_enum)]
        from: convert::Model,
        #[arg(long, value_enum)]
        to: convert::Model,
    },
    /// Report on an ideal hexagon: alternating perimeter, small triangle,
    /// triple point and symmetry.
    #[command(allow_negative_numbers = true, after_long_help = report::REPORT_KEYS)]
    Hexagon {
        /// Six vertex angles in counter-clockwise order.
        #[arg(value_delimiter = ',')]
        angles: Vec<f64>,
        /// Horodisk sizes, six positive numbers (default all 1).
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<f64>>,
        /// Scene file instead of angles.
        #[arg(long, conflicts_with_all = ["angles", "sizes"])]
        scene: Option<PathBuf>,
    },
    /// Build a chain of six tangent horodisks and check whether it closes.
    /// With five angles the sixth is solved so that it does.
    #[command(allow_negative_numbers = true, after_long_help = report::REPORT_KEYS)]
    Chain {
        /// Five or six base angles in counter-clockwise order.
        #[arg(value_delimiter = ',')]
        angles: Vec<f64>,
        /// Size of the first horodisk.
        #[arg(long, default_value_t = 1.0)]
        s1: f64,
        /// Scene file instead of angles.
        #[arg(long, conflicts_with = "angles")]
        scene: Option<PathBuf>,
        /// Solve for the sixth angle (requires five angles).
        #[arg(long)]
        solve_closure: bool,
        /// Search arc LO,HI for the sixth angle (default: between the fifth
        /// and first angles).
        #[arg(long, value_delimiter = ',', num_args = 1, value_names = ["LO,HI"])]
        arc: Option<Vec<f64>>,
    },
    /// Check the hexagon identities on a seeded batch of random hexagons.
    Sample {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = sample::Mode::Random)]
        mode: sample::Mode,
        /// Worker threads (0: one per core). The output does not depend on it.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Draw a hexagon or chain as SVG.
    #[command(allow_negative_numbers = true)]
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Scene file.
    #[arg(long, conflicts_with_all = ["hexagon", "chain"])]
    scene: Option<PathBuf>,
    /// Six hexagon angles.
    #[arg(long, value_delimiter = ',', conflicts_with = "chain")]
    hexagon: Option<Vec<f64>>,
    /// Five or six chain angles.
    #[arg(long, value_delimiter = ',')]
    chain: Option<Vec<f64>>,
    /// Size of the first chain horodisk (default 1).
    #[arg(long, requires = "chain")]
    s1: Option<f64>,
    /// Horodisk sizes for a hexagon.
    #[arg(long, value_delimiter = ',', requires = "hexagon")]
    sizes: Option<Vec<f64>>,
    /// Layers to draw (default chain,poincare,triangle).
    #[arg(long, value_enum, value_delimiter = ',')]
    layers: Option<Vec<Layer>>,
    /// Image width and height in pixels.
    #[arg(long)]
    width: Option<u32>,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn unit(radians: bool) -> AngleUnit {
    if radians {
        AngleUnit::Rad
    } else {
        AngleUnit::Deg
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(path: Option<&PathBuf>, value: &T) -> Result<()> {
    if let Some(p) = path {
        let mut text =
            serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
        text.push('\n');
        write_file(p, &text)?;
    }
    Ok(())
}

fn print(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn load_scene(path: &Path, radians: bool) -> Result<Scene> {
    if radians {
        return Err(CliError::Input(
            "scene files are in degrees; drop --radians".into(),
        ));
    }
    Scene::from_file(path)
}

fn arc_pair(arc: Option<Vec<f64>>) -> Result<Option<(f64, f64)>> {
    match arc.as_deref() {
        None => Ok(None),
        Some(&[lo, hi]) => Ok(Some((lo, hi))),
        Some(v) => Err(CliError::Input(format!(
            "--arc takes LO,HI, got {} values",
            v.len()
        ))),
    }
}

fn run(cli: Cli) -> Result<()> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Input(format!(
            "--tol must be positive, got {}",
            cli.tol
        )));
    }
    let unit = unit(cli.radians);
    match cli.command {
        Command::Convert { coords, from, to } => {
            let out = convert::convert(&coords, from, to)?;
            let text: Vec<String> = out.iter().map(|v| convert::format_sig15(*v)).collect();
            write_json(cli.json.as_ref(), &out)?;
            print(&format!("{}\n", text.join(" ")))
        }
        Command::Hexagon {
            angles,
            sizes,
            scene,
        } => {
            let scene = match scene {
                Some(p) => load_scene(&p, cli.radians)?,
                None => Scene::hexagon(angles, unit, sizes)?,
            };
            if scene.kind != SceneKind::Hexagon {
                return Err(CliError::Input(
                    "scene describes a chain; use `chain`".into(),
                ));
            }
            let r = report::hexagon_report(&scene, cli.tol)?;
            write_json(cli.json.as_ref(), &r)?;
            print(&r.to_text())
        }
        Command::Chain {
            angles,
            s1,
            scene,
            solve_closure,
            arc,
        } => {
            let scene = match scene {
                Some(p) => load_scene(&p, cli.radians)?,
                None => Scene::chain(angles, unit, s1)?,
            };
            if scene.kind == SceneKind::Hexagon {
                return Err(CliError::Input(
                    "scene describes a hexagon; use `hexagon`".into(),
                ));
            }
            if solve_closure && scene.angles.len() != 5 {
                return Err(CliError::Input(
                    "--solve-closure needs exactly five angles".into(),
                ));
            }
            let r = report::chain_report(&scene, arc_pair(arc)?, cli.tol)?;
            write_json(cli.json.as_ref(), &r)?;
            print(&r.to_text())
        }
        Command::Sample {
            count,
            mode,
            threads,
        } => {
            let s = sample::run(count, cli.seed, mode, cli.tol, threads);
            write_json(cli.json.as_ref(), &s)?;
            print(&s.to_text(mode))
        }
        Command::Render(args) => {
            if cli.json.is_some() {
                return Err(CliError::Input("render does not write JSON".into()));
            }
            let mut scene = match (args.scene, args.hexagon, args.chain) {
                (Some(p), None, None) => load_scene(&p, cli.radians)?,
                (None, Some(h), None) => Scene::hexagon(h, unit, args.sizes)?,
                (None, None, Some(c)) => Scene::chain(c, unit, args.s1.unwrap_or(1.0))?,
                _ => {
                    return Err(CliError::Input(
                        "give one of --scene, --hexagon, --chain".into(),
                    ))
                }
            };
            if let Some(l) = args.layers {
                scene.render.layers = l;
            }
            if let Some(w) = args.width {
                scene.render.width = w;
            }
            let (hex, sizes) = match scene.kind {
                SceneKind::Hexagon => {
                    let t: [f64; 6] = scene.radians().try_into().expect("validated");
                    let hex = IdealHexagon::from_radians(t)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    (hex, scene.sizes.unwrap_or(UNIT_SIZES))
                }
                SceneKind::Chain { s1 } => {
                    let (c, _) = report::chain_of(&scene.radians(), s1, None)?;
                    (chain_to_hexagon(&c), *c.sizes())
                }
            };
            let svg = render::render_svg(&hex, &sizes, &scene.render)?;
            match args.out {
                Some(p) => write_file(&p, &svg),
                None => print(&svg),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
