use thiserror::Error;

/// Errors raised by the geometry engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({x}, {y}) is not inside the open unit disk")]
    NotInDisk { x: f64, y: f64 },
    #[error("point ({x}, {y}, {z}) is not on the open northern hemisphere")]
    NotOnHemisphere { x: f64, y: f64, z: f64 },
    #[error("degenerate Mobius transform (|ad - bc| too small)")]
    DegenerateTransform,
    #[error("point is the pole of the transform")]
    Pole,
    #[error("ideal points coincide")]
    CoincidentIdealPoints,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("geodesics are identical")]
    IdenticalGeodesics,
    #[error("numerical instability: {0}")]
    NumericalInstability(String),
    #[error("circle is not internally tangent to the unit circle")]
    NotAHorodisk,
    #[error("horodisks share a base point")]
    SameBasePoint,
    #[error("horodisk size must be positive and finite, got {0}")]
    NonPositiveSize(f64),
    #[error("hyperbolic radius must be positive and finite, got {0}")]
    NonPositiveRadius(f64),
    #[error("invalid hexagon: {0}")]
    InvalidHexagon(String),
    #[error("invalid angles: {0}")]
    InvalidAngles(String),
    #[error("invalid search arc: {0}")]
    InvalidArc(String),
    #[error("small triangle is degenerate")]
    DegenerateTriangle,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
