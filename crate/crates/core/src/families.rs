//! One-parameter families on the solution surface and its boundary.
//!
//! In the `(a, b, c)` parametrization the surface `D = 0` is bounded by
//! three curves meeting at three corner points:
//! - `C1`: the equilateral-restricted family `(2/sqrt3, 1/sqrt3, c)` with a
//!   zero fourth mass,
//! - `C2`: the rhombus family `(sqrt(1+c^2), c + sqrt(1+c^2), c)`,
//! - `C3`: the isosceles family `a = b + c` cut out by `f(b, c) = 0`.
//!
//! The right-trapezoid slice `c = 0` carries a family joining the square
//! `(1, 1)` to `(2/sqrt3, 1/sqrt3)`, and two equal-mass curves (`m2 = m3`
//! and `m2 = 1`) cross the interior; both are traced here by
//! predictor-corrector continuation over `(b, c)` with `a` recovered from
//! the implicit surface at every step.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dziobeck::{
    dziobeck_d, in_omega_tilde, lambda_of, masses_closed_form, surface_tolerance, DziobeckError,
    MassSet, DEFAULT_ORDERING_EPS,
};
use crate::geometry::{
    classify, mutual_distances, GeometryError, MutualDistances, TrapezoidClass, TrapezoidConfig,
    DEFAULT_CLASS_EPS,
};

pub const SQRT3: f64 = 1.732_050_807_568_877_2;
pub const INV_SQRT3: f64 = 0.577_350_269_189_625_8;
/// `2/sqrt(3)`, the equilateral side length of the `C1` family.
pub const TWO_OVER_SQRT3: f64 = 1.154_700_538_379_251_5;

/// Bisection width target for one-dimensional root refinement.
const ROOT_WIDTH: f64 = 1e-13;

/// Chain margin at which a trace is declared to have reached the boundary.
const BOUNDARY_MARGIN: f64 = 1e-8;

/// Smallest continuation step before a trace gives up and lands.
const MIN_TRACE_STEP: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} outside ({lo}, {hi})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("no sign change bracket found: {0}")]
    BracketFailure(&'static str),
    #[error("continuation failed: {0}")]
    TraceDiverged(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Dziobeck(#[from] DziobeckError),
}

/// Identifier of a traced family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    C1,
    C2,
    C3,
    RightTrapezoid,
    EqualMass23,
    EqualMass12,
    SurfaceGrid,
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            Self::C1 => "c1",
            Self::C2 => "c2",
            Self::C3 => "c3",
            Self::RightTrapezoid => "right",
            Self::EqualMass23 => "m2m3",
            Self::EqualMass12 => "m2eq1",
            Self::SurfaceGrid => "surface",
        }
    }
}

impl std::str::FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c1" => Ok(Self::C1),
            "c2" => Ok(Self::C2),
            "c3" => Ok(Self::C3),
            "right" => Ok(Self::RightTrapezoid),
            "m2m3" => Ok(Self::EqualMass23),
            "m2eq1" => Ok(Self::EqualMass12),
            "surface" => Ok(Self::SurfaceGrid),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// Which equal-mass curve to trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualMassCurve {
    /// Zero set of `m2 - m3`.
    EqualMass23,
    /// Zero set of `m2 - 1`.
    EqualMass12,
}

/// One point along a family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceSample {
    pub param: f64,
    pub config: TrapezoidConfig,
    pub distances: MutualDistances,
    pub masses: MassSet,
    pub class: TrapezoidClass,
}

/// Ordered samples along a one-parameter family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyTrace {
    pub family: FamilyId,
    pub samples: Vec<TraceSample>,
}

impl FamilyTrace {
    pub fn is_param_strictly_monotone(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].param > w[0].param)
    }
}

fn make_sample(param: f64, config: TrapezoidConfig, masses: MassSet) -> TraceSample {
    let distances = mutual_distances(&config);
    TraceSample {
        param,
        config,
        distances,
        masses,
        class: classify(&config, DEFAULT_CLASS_EPS),
    }
}

/// Bisection to a fixed interval width; callers guarantee the sign change.
fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        if (hi - lo).abs() <= ROOT_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Mass `m2` along `C1` as a function of `c`.
pub fn mu2(c: f64) -> f64 {
    let k1 = (c * c + 1.0).sqrt();
    let k2 = (3.0 * c * c - 4.0 * SQRT3 * c + 7.0).sqrt();
    let k1_3 = k1.powi(3);
    let k2_3 = k2.powi(3);
    (8.0 * SQRT3 - 9.0 * k1_3) * k2_3 / (9.0 * k1_3 * (k2_3 - 8.0))
}

/// Mass `m3` along `C1` as a function of `c`.
pub fn mu3(c: f64) -> f64 {
    let k1 = (c * c + 1.0).sqrt();
    let k2 = (3.0 * c * c - 4.0 * SQRT3 * c + 7.0).sqrt();
    let k1_3 = k1.powi(3);
    2.0 * (SQRT3 - 3.0 * c).powi(2) * (8.0 * SQRT3 - 9.0 * k1_3)
        / (27.0 * (SQRT3 * c + 1.0) * k1_3 * k2 * k2)
}

/// Mass `m2 = m4` along the rhombus family `C2` as a function of `c`.
pub fn mu_r(c: f64) -> f64 {
    let k = (1.0 + c * c).sqrt();
    let minus = ((c - k) * (c - k) + 1.0).powf(1.5);
    let plus = ((c + k) * (c + k) + 1.0).powf(1.5);
    let k3 = k.powi(3);
    -minus * (plus - k3) / ((k3 - minus) * plus)
}

/// Point of the equilateral-restricted boundary family `C1`.
pub fn curve_c1(c: f64) -> Result<(TrapezoidConfig, MassSet), FamilyError> {
    if !(c > -INV_SQRT3 && c < INV_SQRT3) {
        return Err(FamilyError::OutOfRange {
            name: "c",
            value: c,
            lo: -INV_SQRT3,
            hi: INV_SQRT3,
        });
    }
    let config = TrapezoidConfig::new(TWO_OVER_SQRT3, INV_SQRT3, c)?;
    let lambda = lambda_of(&mutual_distances(&config))?.lambda;
    let masses = MassSet {
        m2: mu2(c),
        m3: mu3(c),
        m4: 0.0,
        lambda,
    };
    Ok((config, masses))
}

/// Point of the rhombus boundary family `C2`.
pub fn curve_c2(c: f64) -> Result<(TrapezoidConfig, MassSet), FamilyError> {
    if !(c > -INV_SQRT3 && c <= 0.0) {
        return Err(FamilyError::OutOfRange {
            name: "c",
            value: c,
            lo: -INV_SQRT3,
            hi: 0.0,
        });
    }
    let k = (1.0 + c * c).sqrt();
    let config = TrapezoidConfig::new(k, c + k, c)?;
    let lambda = lambda_of(&mutual_distances(&config))?.lambda;
    let m = mu_r(c);
    let masses = MassSet {
        m2: m,
        m3: 1.0,
        m4: m,
        lambda,
    };
    Ok((config, masses))
}

/// The isosceles compatibility function; its zero set (with `a = b + c`)
/// is the boundary family `C3`.
pub fn isosceles_f(b: f64, c: f64) -> f64 {
    let bc3 = (b + c).powi(3);
    let k1 = (c * c + 1.0).powf(1.5);
    let k2 = (b * b + 1.0).powf(1.5);
    let d3 = (b - c).powi(3);
    (bc3 - k1) * (k2 - d3) - (k2 - bc3) * (k1 - d3)
}

/// Solve `f(b, c) = 0` for `b` at fixed `c` in `(0, 1/sqrt3)`.
pub fn solve_isosceles_b(c: f64) -> Result<f64, FamilyError> {
    if !(c > 0.0 && c < INV_SQRT3) {
        return Err(FamilyError::OutOfRange {
            name: "c",
            value: c,
            lo: 0.0,
            hi: INV_SQRT3,
        });
    }
    let f = |b: f64| isosceles_f(b, c);
    // A single admissible sign change lives in (c, 3]; scan, then bisect.
    let lo = c + 1e-9;
    let hi = 3.0;
    let n = 600;
    let mut prev_b = lo;
    let mut prev_f = f(lo);
    for i in 1..=n {
        let b = lo + (hi - lo) * i as f64 / n as f64;
        let fb = f(b);
        if prev_f == 0.0 {
            return Ok(prev_b);
        }
        if (fb > 0.0) != (prev_f > 0.0) {
            return Ok(bisect(&f, prev_b, b));
        }
        prev_b = b;
        prev_f = fb;
    }
    Err(FamilyError::BracketFailure(
        "isosceles compatibility has no sign change in (c, 3]",
    ))
}

/// Lower edge `a = (b^2+1)/(2b)` of the admissible right-trapezoid region.
pub fn right_a_lower(b: f64) -> f64 {
    (b * b + 1.0) / (2.0 * b)
}

/// Upper edge `a = sqrt(1+b^2)` of the admissible right-trapezoid region.
pub fn right_a_upper(b: f64) -> f64 {
    (1.0 + b * b).sqrt()
}

/// Solve `D = 0` for `a` on the right-trapezoid slice, `b` in `(1/sqrt3, 1]`.
///
/// `D` is positive on the lower edge and negative on the upper edge, and
/// strictly decreasing in `a` between them, so plain bisection suffices.
pub fn solve_right_trapezoid_a(b: f64) -> Result<f64, FamilyError> {
    if !(b > INV_SQRT3 && b <= 1.0) {
        return Err(FamilyError::OutOfRange {
            name: "b",
            value: b,
            lo: INV_SQRT3,
            hi: 1.0,
        });
    }
    let d_of = |a: f64| dziobeck_d(&mutual_distances(&TrapezoidConfig::new(a, b, 0.0).unwrap()));
    let lo = right_a_lower(b).max(1.0);
    let hi = right_a_upper(b);
    let d_lo = d_of(lo);
    // The root sits exactly on the lower edge at the square end.
    if d_lo <= 0.0 {
        return Ok(lo);
    }
    Ok(bisect(&d_of, lo, hi))
}

/// All admissible roots of `D(a; b, c) = 0` on the ordering-constrained
/// `a`-bracket; empirically at most one per `(b, c)`.
pub fn solve_surface_a(b: f64, c: f64) -> Vec<f64> {
    if b <= 0.0 || b <= c {
        return Vec::new();
    }
    // Ordering constraints translate to a-bounds:
    //   r12 >= r23  =>  a >= (1+b^2)/(2b)
    //   r24 >= r13  =>  a >= b + c
    //   r23 >= r14  =>  a >= b + |c|  (given a >= b on the admissible set)
    //   r13 >  r12  =>  a <= sqrt(1+b^2)
    let lo = right_a_lower(b).max(b + c.abs()).max(1.0);
    let hi = right_a_upper(b);
    if !(lo.is_finite() && hi.is_finite()) || lo > hi + 1e-12 {
        return Vec::new();
    }

    let config_at = |a: f64| TrapezoidConfig::new(a.max(1.0), b, c).ok();
    let d_of = |a: f64| {
        config_at(a)
            .map(|cfg| dziobeck_d(&mutual_distances(&cfg)))
            .unwrap_or(f64::NAN)
    };

    let mut roots: Vec<f64> = Vec::new();
    let push_root = |roots: &mut Vec<f64>, a: f64| {
        if !roots.iter().any(|r| (r - a).abs() < 1e-9) {
            roots.push(a);
        }
    };

    // Degenerate bracket: the two edges meet (the C1 limit).
    if hi - lo <= 1e-9 {
        let mid = 0.5 * (lo + hi);
        if let Some(cfg) = config_at(mid) {
            let r = mutual_distances(&cfg);
            if dziobeck_d(&r).abs() <= surface_tolerance(&r) {
                push_root(&mut roots, mid);
            }
        }
        return roots;
    }

    let n = 400;
    let mut prev_a = lo;
    let mut prev_d = d_of(lo);
    // Roots sitting exactly on the bracket edges produce no sign change.
    if let Some(cfg) = config_at(lo) {
        let r = mutual_distances(&cfg);
        if prev_d.abs() <= surface_tolerance(&r) {
            push_root(&mut roots, lo);
        }
    }
    for i in 1..=n {
        let a = lo + (hi - lo) * i as f64 / n as f64;
        let d = d_of(a);
        if d.is_nan() {
            prev_a = a;
            prev_d = d;
            continue;
        }
        if !prev_d.is_nan() && prev_d != 0.0 && (d > 0.0) != (prev_d > 0.0) {
            push_root(&mut roots, bisect(&d_of, prev_a, a));
        } else if d == 0.0 {
            push_root(&mut roots, a);
        }
        prev_a = a;
        prev_d = d;
    }
    if let Some(cfg) = config_at(hi) {
        let r = mutual_distances(&cfg);
        if d_of(hi).abs() <= surface_tolerance(&r) {
            push_root(&mut roots, hi);
        }
    }

    let mut admissible: Vec<f64> = roots
        .into_iter()
        .filter(|&a| {
            config_at(a)
                .map(|cfg| in_omega_tilde(&mutual_distances(&cfg), DEFAULT_ORDERING_EPS))
                .unwrap_or(false)
        })
        .collect();
    admissible.sort_by(|x, y| x.partial_cmp(y).unwrap());
    admissible
}

/// A fully evaluated surface point at `(b, c)`.
#[derive(Debug, Clone, Copy)]
pub struct SurfacePoint {
    pub config: TrapezoidConfig,
    pub distances: MutualDistances,
    pub masses: MassSet,
}

/// Resolve `(b, c)` to a surface point, preferring the root nearest `hint`.
pub fn surface_point(b: f64, c: f64, hint: Option<f64>) -> Option<SurfacePoint> {
    let roots = solve_surface_a(b, c);
    if roots.is_empty() {
        return None;
    }
    let a = match hint {
        Some(h) => roots
            .iter()
            .copied()
            .min_by(|x, y| (x - h).abs().partial_cmp(&(y - h).abs()).unwrap())?,
        None => roots[0],
    };
    let config = TrapezoidConfig::new(a, b, c).ok()?;
    let distances = mutual_distances(&config);
    let masses = masses_closed_form(&distances).ok()?;
    Some(SurfacePoint {
        config,
        distances,
        masses,
    })
}

/// Smallest slack in the admissible ordering chain; zero on the boundary.
pub fn chain_margin(r: &MutualDistances) -> f64 {
    (r.r24 - r.r13)
        .min(r.r13 - r.r12)
        .min(r.r12 - r.r23)
        .min(r.r23 - r.r14)
        .min(r.r14 - r.r34)
}

/// Uniform trace of `C1`; parameter is `c`, ascending.
pub fn trace_c1(lo: f64, hi: f64, n: usize) -> Result<FamilyTrace, FamilyError> {
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let c = lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64;
        let (config, masses) = curve_c1(c)?;
        samples.push(make_sample(c, config, masses));
    }
    Ok(FamilyTrace {
        family: FamilyId::C1,
        samples,
    })
}

/// Uniform trace of the rhombus family `C2`; parameter is `c`, ascending.
pub fn trace_c2(lo: f64, hi: f64, n: usize) -> Result<FamilyTrace, FamilyError> {
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let c = lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64;
        let (config, masses) = curve_c2(c)?;
        samples.push(make_sample(c, config, masses));
    }
    Ok(FamilyTrace {
        family: FamilyId::C2,
        samples,
    })
}

/// Uniform trace of the isosceles family `C3`; parameter is `c`, ascending.
pub fn trace_c3(lo: f64, hi: f64, n: usize) -> Result<FamilyTrace, FamilyError> {
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let c = lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64;
        let b = solve_isosceles_b(c)?;
        let config = TrapezoidConfig::new(b + c, b, c)?;
        let masses = masses_closed_form(&mutual_distances(&config))?;
        samples.push(make_sample(c, config, masses));
    }
    Ok(FamilyTrace {
        family: FamilyId::C3,
        samples,
    })
}

/// Trace of the right-trapezoid family; the parameter decreases in `b` so
/// the trace runs from the square `(1,1)` to `(2/sqrt3, 1/sqrt3)`.
pub fn trace_right(lo_b: f64, hi_b: f64, n: usize) -> Result<FamilyTrace, FamilyError> {
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let b = hi_b - (hi_b - lo_b) * i as f64 / (n - 1).max(1) as f64;
        let a = solve_right_trapezoid_a(b)?;
        let config = TrapezoidConfig::new(a, b, 0.0)?;
        let masses = masses_closed_form(&mutual_distances(&config))?;
        samples.push(make_sample(-b, config, masses));
    }
    Ok(FamilyTrace {
        family: FamilyId::RightTrapezoid,
        samples,
    })
}

/// Grid sweep of the full surface; parameter is the running sample index.
pub fn trace_surface_grid(grid_b: usize, grid_c: usize) -> Result<FamilyTrace, FamilyError> {
    let b_lo = INV_SQRT3 + 1e-6;
    let b_hi = 1.0;
    let c_lo = -INV_SQRT3 + 1e-6;
    let c_hi = INV_SQRT3 - 1e-6;
    let mut samples = Vec::new();
    for i in 0..grid_b {
        let b = b_lo + (b_hi - b_lo) * i as f64 / (grid_b - 1).max(1) as f64;
        for j in 0..grid_c {
            let c = c_lo + (c_hi - c_lo) * j as f64 / (grid_c - 1).max(1) as f64;
            if let Some(point) = surface_point(b, c, None) {
                let param = samples.len() as f64;
                samples.push(make_sample(param, point.config, point.masses));
            }
        }
    }
    Ok(FamilyTrace {
        family: FamilyId::SurfaceGrid,
        samples,
    })
}

/// Crossing parameter on `C1` where the equal-mass condition holds:
/// `mu2 = mu3` for the first curve, `mu2 = 1` for the second.
pub fn solve_equal_mass_on_c1(which: EqualMassCurve) -> Result<f64, FamilyError> {
    let h = |c: f64| match which {
        EqualMassCurve::EqualMass23 => mu2(c) - mu3(c),
        EqualMassCurve::EqualMass12 => mu2(c) - 1.0,
    };
    let lo = -INV_SQRT3 + 1e-9;
    let hi = INV_SQRT3 - 1e-9;
    let n = 2000;
    let mut prev_c = lo;
    let mut prev_h = h(lo);
    for i in 1..=n {
        let c = lo + (hi - lo) * i as f64 / n as f64;
        let hc = h(c);
        if (hc > 0.0) != (prev_h > 0.0) {
            return Ok(bisect(&h, prev_c, c));
        }
        prev_c = c;
        prev_h = hc;
    }
    Err(FamilyError::BracketFailure("no equal-mass crossing on C1"))
}

fn equal_mass_target(point: &SurfacePoint, which: EqualMassCurve) -> f64 {
    match which {
        EqualMassCurve::EqualMass23 => point.masses.m2 - point.masses.m3,
        EqualMassCurve::EqualMass12 => point.masses.m2 - 1.0,
    }
}

#[derive(Clone, Copy)]
struct CurveState {
    b: f64,
    c: f64,
    point: SurfacePoint,
}

fn eval_state(b: f64, c: f64, hint: Option<f64>) -> Option<CurveState> {
    surface_point(b, c, hint).map(|point| CurveState { b, c, point })
}

fn target_at(b: f64, c: f64, hint: Option<f64>, which: EqualMassCurve) -> Option<f64> {
    surface_point(b, c, hint).map(|p| equal_mass_target(&p, which))
}

/// Finite-difference gradient of the target over `(b, c)`.
fn target_gradient(state: &CurveState, which: EqualMassCurve) -> Option<(f64, f64)> {
    let h = 3e-8;
    let hint = Some(state.point.config.a());
    let fb1 = target_at(state.b + h, state.c, hint, which)?;
    let fb0 = target_at(state.b - h, state.c, hint, which)?;
    let fc1 = target_at(state.b, state.c + h, hint, which)?;
    let fc0 = target_at(state.b, state.c - h, hint, which)?;
    Some(((fb1 - fb0) / (2.0 * h), (fc1 - fc0) / (2.0 * h)))
}

/// Newton correction toward the zero level set along the gradient.
fn correct(b0: f64, c0: f64, hint: f64, which: EqualMassCurve) -> Option<CurveState> {
    let mut b = b0;
    let mut c = c0;
    let mut hint = hint;
    for _ in 0..30 {
        let state = eval_state(b, c, Some(hint))?;
        let value = equal_mass_target(&state.point, which);
        if value.abs() <= 1e-10 {
            return Some(state);
        }
        let (gb, gc) = target_gradient(&state, which)?;
        let norm2 = gb * gb + gc * gc;
        if norm2 < 1e-30 {
            return None;
        }
        let scale = value / norm2;
        b -= scale * gb;
        c -= scale * gc;
        hint = state.point.config.a();
    }
    None
}

fn seed_equal_mass(which: EqualMassCurve) -> Result<CurveState, FamilyError> {
    let b_candidates: &[f64] = match which {
        EqualMassCurve::EqualMass23 => &[0.85, 0.8, 0.9, 0.75, 0.95],
        EqualMassCurve::EqualMass12 => &[0.8, 0.75, 0.85, 0.7, 0.9],
    };
    for &b in b_candidates {
        let mut prev: Option<(f64, f64)> = None;
        let n = 400;
        for i in 0..=n {
            let c = -0.55 + 1.1 * i as f64 / n as f64;
            let Some(value) = target_at(b, c, None, which) else {
                prev = None;
                continue;
            };
            if let Some((pc, pv)) = prev {
                if pv == 0.0 || (value > 0.0) != (pv > 0.0) {
                    let h = |c: f64| target_at(b, c, None, which).unwrap_or(f64::NAN);
                    let c_root = bisect(&h, pc, c);
                    if let Some(state) = eval_state(b, c_root, None) {
                        return Ok(state);
                    }
                }
            }
            prev = Some((c, value));
        }
    }
    Err(FamilyError::BracketFailure(
        "no seed bracket for the equal-mass curve",
    ))
}

/// Land a terminated trace endpoint exactly on the analytic boundary curve
/// it approached.
fn boundary_landing(
    last: &CurveState,
    which: EqualMassCurve,
) -> Result<(TrapezoidConfig, MassSet), FamilyError> {
    if last.b <= INV_SQRT3 + 1e-3 {
        // Landing on C1: solve the equality in closed form.
        let c_star = solve_equal_mass_on_c1(which)?;
        let (config, masses) = curve_c1(c_star)?;
        return Ok((config, masses));
    }
    match which {
        EqualMassCurve::EqualMass23 => {
            // The only boundary point of C2 u C3 with m2 = m3 is the square.
            let config = TrapezoidConfig::new(1.0, 1.0, 0.0)?;
            let masses = masses_closed_form(&mutual_distances(&config))?;
            Ok((config, masses))
        }
        EqualMassCurve::EqualMass12 => {
            // m2 = 1 holds along all of C3; project onto it at fixed c.
            let c = last.c;
            let b = solve_isosceles_b(c)?;
            let config = TrapezoidConfig::new(b + c, b, c)?;
            let masses = masses_closed_form(&mutual_distances(&config))?;
            Ok((config, masses))
        }
    }
}

/// Trace an equal-mass curve across the surface by arc-length
/// predictor-corrector continuation, landing both ends on the analytic
/// boundary curves.
pub fn trace_equal_mass_curve(
    which: EqualMassCurve,
    step: f64,
) -> Result<FamilyTrace, FamilyError> {
    let family = match which {
        EqualMassCurve::EqualMass23 => FamilyId::EqualMass23,
        EqualMassCurve::EqualMass12 => FamilyId::EqualMass12,
    };
    let seed = seed_equal_mass(which)?;
    let (g_b, g_c) = target_gradient(&seed, which)
        .ok_or_else(|| FamilyError::TraceDiverged("gradient undefined at seed".into()))?;
    let norm = (g_b * g_b + g_c * g_c).sqrt();
    if norm < 1e-30 {
        return Err(FamilyError::TraceDiverged(
            "vanishing gradient at seed".into(),
        ));
    }
    let seed_tangent = (-g_c / norm, g_b / norm);

    let march = |dir: f64| -> Vec<(f64, CurveState)> {
        let mut out: Vec<(f64, CurveState)> = Vec::new();
        let mut current = seed;
        let mut tangent = (dir * seed_tangent.0, dir * seed_tangent.1);
        let mut s = step;
        let mut arclen = 0.0;
        for _ in 0..200_000 {
            if chain_margin(&current.point.distances) <= BOUNDARY_MARGIN {
                break;
            }
            let pb = current.b + s * tangent.0;
            let pc = current.c + s * tangent.1;
            match correct(pb, pc, current.point.config.a(), which) {
                Some(next) => {
                    let db = next.b - current.b;
                    let dc = next.c - current.c;
                    let advanced = (db * db + dc * dc).sqrt();
                    // Reject stalls and backtracking corrections.
                    if advanced < 1e-14 || db * tangent.0 + dc * tangent.1 <= 0.0 {
                        s *= 0.5;
                        if s < MIN_TRACE_STEP {
                            break;
                        }
                        continue;
                    }
                    if let Some((gb, gc)) = target_gradient(&next, which) {
                        let n = (gb * gb + gc * gc).sqrt();
                        if n > 1e-30 {
                            let mut t = (-gc / n, gb / n);
                            if t.0 * tangent.0 + t.1 * tangent.1 < 0.0 {
                                t = (-t.0, -t.1);
                            }
                            tangent = t;
                        }
                    }
                    arclen += advanced;
                    current = next;
                    out.push((arclen, current));
                    s = (s * 1.3).min(step);
                }
                None => {
                    s *= 0.5;
                    if s < MIN_TRACE_STEP {
                        break;
                    }
                }
            }
        }
        out
    };

    let forward = march(1.0);
    let backward = march(-1.0);

    let mut samples: Vec<TraceSample> = Vec::new();
    for (arc, state) in backward.iter().rev() {
        samples.push(make_sample(-arc, state.point.config, state.point.masses));
    }
    samples.push(make_sample(0.0, seed.point.config, seed.point.masses));
    for (arc, state) in &forward {
        samples.push(make_sample(*arc, state.point.config, state.point.masses));
    }

    if samples.len() < 3 {
        return Err(FamilyError::TraceDiverged(
            "continuation produced too few points".into(),
        ));
    }

    // Land both ends on the analytic boundaries.
    let first_state = backward.last().map(|(_, s)| *s).unwrap_or(seed);
    let last_state = forward.last().map(|(_, s)| *s).unwrap_or(seed);
    let (cfg_lo, m_lo) = boundary_landing(&first_state, which)?;
    let (cfg_hi, m_hi) = boundary_landing(&last_state, which)?;

    let first = samples.first().unwrap();
    let last = samples.last().unwrap();
    let d_lo = ((cfg_lo.b() - first.config.b()).powi(2)
        + (cfg_lo.c() - first.config.c()).powi(2))
    .sqrt();
    let d_hi =
        ((cfg_hi.b() - last.config.b()).powi(2) + (cfg_hi.c() - last.config.c()).powi(2)).sqrt();
    let first_param = first.param;
    let last_param = last.param;

    let mut landed = Vec::with_capacity(samples.len() + 2);
    landed.push(make_sample(first_param - d_lo.max(1e-12), cfg_lo, m_lo));
    landed.extend(samples);
    landed.push(make_sample(last_param + d_hi.max(1e-12), cfg_hi, m_hi));

    Ok(FamilyTrace {
        family,
        samples: landed,
    })
}
