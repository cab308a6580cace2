//! Positions, mutual distances, oriented areas and shape classification for
//! the two-parallel-lines parametrization.
//!
//! All types are plain immutable values and every function is pure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default absolute tolerance for shape classification decisions.
pub const DEFAULT_CLASS_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("parameter a = {0} must be >= 1")]
    ABelowOne(f64),
    #[error("parameters must satisfy b > c, got b = {b}, c = {c}")]
    HeightsOutOfOrder { b: f64, c: f64 },
    #[error("parameter {name} = {value} is not finite")]
    NotFinite { name: &'static str, value: f64 },
    #[error("distance {name} = {value} must be positive")]
    NonPositiveDistance { name: &'static str, value: f64 },
}

/// Position parameters `(a, b, c)` of a two-parallel-lines configuration.
///
/// The first body is pinned at the origin, the second at `(0, a)` on the same
/// vertical line, and the remaining two at `(1, b)` and `(1, c)` on the line
/// `x = 1`. Construction enforces `a >= 1` and `b > c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrapezoidConfig {
    a: f64,
    b: f64,
    c: f64,
}

impl TrapezoidConfig {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, GeometryError> {
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if !value.is_finite() {
                return Err(GeometryError::NotFinite { name, value });
            }
        }
        if a < 1.0 {
            return Err(GeometryError::ABelowOne(a));
        }
        if b <= c {
            return Err(GeometryError::HeightsOutOfOrder { b, c });
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Body positions in order 1..4.
    pub fn positions(&self) -> [[f64; 2]; 4] {
        [[0.0, 0.0], [0.0, self.a], [1.0, self.b], [1.0, self.c]]
    }

    /// The relabeling (1 <-> 2, 3 <-> 4) composed with the reflection that
    /// restores the normal form; maps `(a, b, c)` to `(a, a - c, a - b)`.
    pub fn relabeled(&self) -> Result<Self, GeometryError> {
        Self::new(self.a, self.a - self.c, self.a - self.b)
    }
}

/// Positions of the four bodies for a valid configuration.
pub fn positions_from_config(cfg: &TrapezoidConfig) -> [[f64; 2]; 4] {
    cfg.positions()
}

/// The six mutual distances, stored once with `r_ij = r_ji`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MutualDistances {
    pub r12: f64,
    pub r13: f64,
    pub r14: f64,
    pub r23: f64,
    pub r24: f64,
    pub r34: f64,
}

impl MutualDistances {
    pub fn new(
        r12: f64,
        r13: f64,
        r14: f64,
        r23: f64,
        r24: f64,
        r34: f64,
    ) -> Result<Self, GeometryError> {
        let pairs = [
            ("r12", r12),
            ("r13", r13),
            ("r14", r14),
            ("r23", r23),
            ("r24", r24),
            ("r34", r34),
        ];
        for (name, value) in pairs {
            if !(value.is_finite() && value > 0.0) {
                return Err(GeometryError::NonPositiveDistance { name, value });
            }
        }
        Ok(Self {
            r12,
            r13,
            r14,
            r23,
            r24,
            r34,
        })
    }

    /// Closed-form distances of a two-parallel-lines configuration.
    pub fn from_config(cfg: &TrapezoidConfig) -> Self {
        let (a, b, c) = (cfg.a(), cfg.b(), cfg.c());
        Self {
            r12: a,
            r13: (1.0 + b * b).sqrt(),
            r14: (1.0 + c * c).sqrt(),
            r23: (1.0 + (a - b) * (a - b)).sqrt(),
            r24: (1.0 + (a - c) * (a - c)).sqrt(),
            r34: b - c,
        }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.r12, self.r13, self.r14, self.r23, self.r24, self.r34]
    }

    /// Largest of the six distances; the natural length scale.
    pub fn scale(&self) -> f64 {
        self.as_array().into_iter().fold(0.0, f64::max)
    }

    /// Sides of the quadrilateral in cyclic order 12, 23, 34, 14.
    pub fn sides(&self) -> [f64; 4] {
        [self.r12, self.r23, self.r34, self.r14]
    }

    /// The two diagonals 13 and 24.
    pub fn diagonals(&self) -> [f64; 2] {
        [self.r13, self.r24]
    }
}

/// Distances derived from positions.
pub fn mutual_distances(cfg: &TrapezoidConfig) -> MutualDistances {
    MutualDistances::from_config(cfg)
}

/// Signed areas of the four triangles, each omitting one body, with the
/// alternating sign convention `delta_i = (-1)^(i+1) area_i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrientedAreas {
    pub delta1: f64,
    pub delta2: f64,
    pub delta3: f64,
    pub delta4: f64,
}

fn triangle_area(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
    0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))
}

impl OrientedAreas {
    /// Areas computed directly from the four positions.
    pub fn from_positions(q: &[[f64; 2]; 4]) -> Self {
        let a1 = triangle_area(q[1], q[2], q[3]);
        let a2 = triangle_area(q[0], q[2], q[3]);
        let a3 = triangle_area(q[0], q[1], q[3]);
        let a4 = triangle_area(q[0], q[1], q[2]);
        Self {
            delta1: a1,
            delta2: -a2,
            delta3: a3,
            delta4: -a4,
        }
    }

    /// Closed forms for the parallel-lines labeling:
    /// `(-r34/2, r34/2, -r12/2, r12/2)`.
    pub fn from_distances(r: &MutualDistances) -> Self {
        Self {
            delta1: -0.5 * r.r34,
            delta2: 0.5 * r.r34,
            delta3: -0.5 * r.r12,
            delta4: 0.5 * r.r12,
        }
    }

    pub fn sum(&self) -> f64 {
        self.delta1 + self.delta2 + self.delta3 + self.delta4
    }
}

/// The bordered determinant `288 V^2` of the six mutual distances; zero
/// exactly when the distances embed in the plane.
pub fn cayley_menger(r: &MutualDistances) -> f64 {
    let s12 = r.r12 * r.r12;
    let s13 = r.r13 * r.r13;
    let s14 = r.r14 * r.r14;
    let s23 = r.r23 * r.r23;
    let s24 = r.r24 * r.r24;
    let s34 = r.r34 * r.r34;
    let m = nalgebra::Matrix5::new(
        0.0, 1.0, 1.0, 1.0, 1.0, //
        1.0, 0.0, s12, s13, s14, //
        1.0, s12, 0.0, s23, s24, //
        1.0, s13, s23, 0.0, s34, //
        1.0, s14, s24, s34, 0.0,
    );
    m.determinant()
}

/// Shape labels, most specific first in the containment chains
/// square < rectangle < parallelogram and square < rhombus < parallelogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrapezoidClass {
    AcuteTrapezoid,
    ObtuseTrapezoid,
    RightTrapezoid,
    IsoscelesTrapezoid,
    ThreeSidesEqual,
    Parallelogram,
    Rhombus,
    Rectangle,
    Square,
    NonTrapezoid,
}

impl TrapezoidClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::AcuteTrapezoid => "AcuteTrapezoid",
            Self::ObtuseTrapezoid => "ObtuseTrapezoid",
            Self::RightTrapezoid => "RightTrapezoid",
            Self::IsoscelesTrapezoid => "IsoscelesTrapezoid",
            Self::ThreeSidesEqual => "ThreeSidesEqual",
            Self::Parallelogram => "Parallelogram",
            Self::Rhombus => "Rhombus",
            Self::Rectangle => "Rectangle",
            Self::Square => "Square",
            Self::NonTrapezoid => "NonTrapezoid",
        }
    }
}

impl std::fmt::Display for TrapezoidClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TrapezoidClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "AcuteTrapezoid" => Ok(Self::AcuteTrapezoid),
            "ObtuseTrapezoid" => Ok(Self::ObtuseTrapezoid),
            "RightTrapezoid" => Ok(Self::RightTrapezoid),
            "IsoscelesTrapezoid" => Ok(Self::IsoscelesTrapezoid),
            "ThreeSidesEqual" => Ok(Self::ThreeSidesEqual),
            "Parallelogram" => Ok(Self::Parallelogram),
            "Rhombus" => Ok(Self::Rhombus),
            "Rectangle" => Ok(Self::Rectangle),
            "Square" => Ok(Self::Square),
            "NonTrapezoid" => Ok(Self::NonTrapezoid),
            other => Err(format!("unknown shape class `{other}`")),
        }
    }
}

/// Classify a configuration, resolving ties to the most specific label.
///
/// Equalities of sides and angle conditions are decided within the absolute
/// tolerance `eps` in normalized units. The angle tests reduce to sign tests
/// on `c` and `a - b`: the base angle at the origin is right when `c = 0`
/// and the one at `(0, a)` is right when `a = b`.
pub fn classify(cfg: &TrapezoidConfig, eps: f64) -> TrapezoidClass {
    let (a, b, c) = (cfg.a(), cfg.b(), cfg.c());
    let r = MutualDistances::from_config(cfg);

    // Collinear triples cannot occur with two bodies on each of two distinct
    // vertical lines, but a collapsing side (b -> c) degenerates the shape.
    if r.r34 <= eps {
        return TrapezoidClass::NonTrapezoid;
    }

    let is_parallelogram = (a - (b - c)).abs() <= eps;
    let right_at_origin = c.abs() <= eps;
    let right_at_top = (a - b).abs() <= eps;

    if is_parallelogram {
        let sides_equal = (r.r12 - r.r14).abs() <= eps;
        return match (sides_equal, right_at_origin) {
            (true, true) => TrapezoidClass::Square,
            (true, false) => TrapezoidClass::Rhombus,
            (false, true) => TrapezoidClass::Rectangle,
            // A parallelogram here has right angles iff c = 0.
            (false, false) => TrapezoidClass::Parallelogram,
        };
    }

    let is_isosceles = (r.r23 - r.r14).abs() <= eps;
    if is_isosceles {
        if (r.r23 - r.r34).abs() <= eps || (r.r23 - r.r12).abs() <= eps {
            return TrapezoidClass::ThreeSidesEqual;
        }
        return TrapezoidClass::IsoscelesTrapezoid;
    }

    if right_at_origin || right_at_top {
        return TrapezoidClass::RightTrapezoid;
    }

    // Generic trapezoid: acute iff both angles adjacent to the longer base
    // are acute. On the longer base r12 those angles are controlled by the
    // signs of c and a - b; on r34 the signs flip.
    let acute = if r.r12 >= r.r34 {
        c > 0.0 && a > b
    } else {
        c < 0.0 && a < b
    };
    if acute {
        TrapezoidClass::AcuteTrapezoid
    } else {
        TrapezoidClass::ObtuseTrapezoid
    }
}
