//! Numerical hyperbolic geometry in the unit disk.
//!
//! * [`models`]: Klein, Poincare and hemisphere models and the maps between them.
//! * [`mobius`]: Mobius transformations and disk isometries.
//! * [`geodesics`]: ideal points, geodesics, and the cross-ratio distance.
//! * [`circles`]: hyperbolic disks, horodisks, and clipped lengths.
//! * [`hexagon`]: ideal hexagons, their small triangle, horodisk chains, and
//!   checks of the Seven Circles theorem and its hyperbolic versions.
//! * [`sampling`]: seeded random configurations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circles;
pub mod error;
pub mod geodesics;
pub mod hexagon;
pub mod mobius;
pub mod models;
pub mod sampling;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub mod prelude {
    pub use crate::circles::{
        alternating_perimeter, are_tangent, clipped_length_ideal, clipped_length_mixed, Horodisk,
        HyperbolicDisk, SemiIdealTriangle,
    };
    pub use crate::error::{Error, Result};
    pub use crate::geodesics::{
        hyp_distance, ideal_endpoints, intersect, Carrier, Geodesic, IdealPoint,
    };
    pub use crate::hexagon::chain::{
        build_tangent_chain, chain_to_hexagon, solve_closure, verify_seven_circles, CircleChain,
        SevenCirclesReport, Verdict,
    };
    pub use crate::hexagon::{
        check_triple_point, main_diagonals, point_reflection_symmetry, small_triangle,
        theorem3_residual, triangle_perimeter, trisum_residual, IdealHexagon, SmallTriangle,
        UNIT_SIZES,
    };
    pub use crate::mobius::MobiusTransform;
    pub use crate::models::{HemispherePoint, KleinPoint, PoincarePoint};
    pub use num_complex::Complex64;
}
