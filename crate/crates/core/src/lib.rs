//! Planar four-body trapezoid central configurations.
//!
//! Two bodies sit on each of two parallel vertical lines one unit apart:
//! `q1 = (0,0)`, `q2 = (0,a)`, `q3 = (1,b)`, `q4 = (1,c)` with `m1 = 1`.
//! The crate computes the closed-form masses that make such a configuration
//! central, characterizes the two-dimensional solution surface `D = 0`
//! together with its boundary families (equilateral-restricted, rhombus,
//! isosceles trapezoid), traces the one-parameter families living on the
//! surface, and isolates the special constants of the equal-mass curves with
//! exact integer arithmetic.
//!
//! Modules:
//! - [`geometry`]: positions, mutual distances, oriented areas, planarity
//!   volume, shape classification.
//! - [`dziobeck`]: the central-configuration algebra on mutual distances
//!   (the compatibility function `D`, the multiplier lambda, closed-form
//!   masses, and an independent Cartesian least-squares oracle).
//! - [`families`]: boundary curves, the right-trapezoid family, implicit
//!   surface solving and equal-mass curve continuation.
//! - [`realroots`]: exact polynomial arithmetic, Sturm chains, Sylvester
//!   resultants and radical elimination for the equal-mass constants.
//! - [`verify`]: executable claim-by-claim checks with JSON reports.
//! - [`cli`]: the command-line surface (`eval`, `trace`, `plot`, `verify`,
//!   `roots`).

pub mod cli;
pub mod dziobeck;
pub mod families;
pub mod geometry;
pub mod realroots;
pub mod verify;

pub use dziobeck::{MassSet, SumsProducts};
pub use geometry::{MutualDistances, OrientedAreas, TrapezoidClass, TrapezoidConfig};
