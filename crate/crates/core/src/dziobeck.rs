//! Central-configuration algebra on mutual distances: the compatibility
//! function `D`, the multiplier lambda, closed-form masses, the admissible
//! ordering predicate, and an independent Cartesian least-squares oracle.
//!
//! Everything here works on inverse-cube distances. With
//! `s1 = r12^-3 + r34^-3`, `p1 = r12^-3 * r34^-3` and cyclic analogues for
//! the (13,24) and (14,23) pairings, a planar four-body central
//! configuration forces the three points `(s_i, p_i)` onto a common line of
//! slope lambda; `D = 0` is the factored form of that collinearity.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::MutualDistances;

/// Relative surface-membership tolerance; the cutoff scales with the cube of
/// the largest distance (`D` is homogeneous in the distances).
pub const SURFACE_TOL_REL: f64 = 1e-11;

/// Branch switch for the degenerate mass formula, relative to the scale.
pub const RHOMBUS_BRANCH_EPS: f64 = 1e-9;

/// Default slack for the admissible ordering chain.
pub const DEFAULT_ORDERING_EPS: f64 = 1e-9;

/// Residual norm below which the Cartesian solve certifies a CC.
pub const ORACLE_RESIDUAL_TOL: f64 = 1e-9;

/// Negative-mass slack: closed forms may dip this far below zero from
/// cancellation at family boundaries where a mass vanishes.
const MASS_NEGATIVE_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DziobeckError {
    #[error("distances are not on the solution surface: |D| = {d_abs:.3e} > {tol:.3e}")]
    NotOnSurface { d_abs: f64, tol: f64 },
    #[error("mass m{which} = {value} is not positive")]
    NonPositiveMass { which: u8, value: f64 },
    #[error("mass formula m{which} degenerates for these distances")]
    FormulaDegenerate { which: u8 },
    #[error("pairing {i}-{j} has equal sums but distinct products; no finite slope")]
    DegeneratePairing { i: u8, j: u8 },
    #[error("all sums and products coincide; lambda is undefined by the quotients")]
    AllEqual,
    #[error("positions admit no central configuration: residual {residual:.3e}")]
    NoSolution { residual: f64 },
    #[error("positions are degenerate (coincident or collinear bodies)")]
    DegeneratePositions,
}

/// Sums and products of inverse-cube distances for the three pairings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumsProducts {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl SumsProducts {
    pub fn from_distances(r: &MutualDistances) -> Self {
        let inv3 = |x: f64| x.powi(-3);
        let (a, b) = (inv3(r.r12), inv3(r.r34));
        let (c, e) = (inv3(r.r13), inv3(r.r24));
        let (f, g) = (inv3(r.r14), inv3(r.r23));
        Self {
            s1: a + b,
            s2: c + e,
            s3: f + g,
            p1: a * b,
            p2: c * e,
            p3: f * g,
        }
    }

    fn sums(&self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }

    fn products(&self) -> [f64; 3] {
        [self.p1, self.p2, self.p3]
    }
}

/// Masses normalized by `m1 = 1`, together with the multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassSet {
    pub m2: f64,
    pub m3: f64,
    pub m4: f64,
    pub lambda: f64,
}

impl MassSet {
    pub fn m1(&self) -> f64 {
        1.0
    }

    /// All four masses in body order.
    pub fn as_array(&self) -> [f64; 4] {
        [1.0, self.m2, self.m3, self.m4]
    }
}

/// The factored planar-compatibility function
/// `D = (r13^3-r12^3)(r23^3-r34^3)(r24^3-r14^3)
///     - (r12^3-r14^3)(r24^3-r34^3)(r13^3-r23^3)`.
pub fn dziobeck_d(r: &MutualDistances) -> f64 {
    let c = |x: f64| x * x * x;
    (c(r.r13) - c(r.r12)) * (c(r.r23) - c(r.r34)) * (c(r.r24) - c(r.r14))
        - (c(r.r12) - c(r.r14)) * (c(r.r24) - c(r.r34)) * (c(r.r13) - c(r.r23))
}

/// Surface-membership cutoff for a given distance set.
pub fn surface_tolerance(r: &MutualDistances) -> f64 {
    SURFACE_TOL_REL * r.scale().powi(3).max(1.0)
}

/// True if `D` vanishes within the scaled surface tolerance.
pub fn on_surface(r: &MutualDistances) -> bool {
    dziobeck_d(r).abs() <= surface_tolerance(r)
}

/// Multiplier estimate: the median of the defined quotients
/// `(p_i - p_j)/(s_i - s_j)` and their maximum pairwise disagreement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaEstimate {
    pub lambda: f64,
    pub spread: f64,
}

/// Slope of the line through the `(s_i, p_i)` points.
///
/// A pairing with coincident sums and products imposes no constraint and is
/// skipped; one with equal sums but distinct products has no finite slope
/// and is an error. The spread vanishes (up to rounding) exactly on `D = 0`.
pub fn lambda_of(r: &MutualDistances) -> Result<LambdaEstimate, DziobeckError> {
    let sp = SumsProducts::from_distances(r);
    let s = sp.sums();
    let p = sp.products();
    let s_eps = 1e-12 * s.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let p_eps = 1e-12 * p.iter().fold(0.0_f64, |m, v| m.max(v.abs()));

    let mut quotients = Vec::with_capacity(3);
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let ds = s[i] - s[j];
        let dp = p[i] - p[j];
        if ds.abs() > s_eps {
            quotients.push(dp / ds);
        } else if dp.abs() > p_eps {
            return Err(DziobeckError::DegeneratePairing {
                i: i as u8 + 1,
                j: j as u8 + 1,
            });
        }
    }
    if quotients.is_empty() {
        return Err(DziobeckError::AllEqual);
    }
    quotients.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let lambda = match quotients.len() {
        1 => quotients[0],
        2 => 0.5 * (quotients[0] + quotients[1]),
        _ => quotients[1],
    };
    let spread = quotients[quotients.len() - 1] - quotients[0];
    Ok(LambdaEstimate { lambda, spread })
}

/// Admissible ordering chain `r24 >= r13 > r12 >= r23 >= r14 >= r34`,
/// each link allowed `eps` of slack.
pub fn in_omega_tilde(r: &MutualDistances, eps: f64) -> bool {
    r.r24 + eps >= r.r13
        && r.r13 + eps > r.r12
        && r.r12 + eps >= r.r23
        && r.r23 + eps >= r.r14
        && r.r14 + eps >= r.r34
}

/// Closed-form masses for distances on the solution surface.
///
/// The generic formulas degenerate to 0/0 when `r12 = r14` and `r23 = r34`
/// simultaneously (the rhombus family); there `m3` switches to the
/// alternative expression that stays well defined.
pub fn masses_closed_form(r: &MutualDistances) -> Result<MassSet, DziobeckError> {
    let d = dziobeck_d(r);
    let tol = surface_tolerance(r);
    if d.abs() > tol {
        return Err(DziobeckError::NotOnSurface { d_abs: d.abs(), tol });
    }

    let cube = |x: f64| x * x * x;
    let (c12, c13, c14) = (cube(r.r12), cube(r.r13), cube(r.r14));
    let (c23, c24, c34) = (cube(r.r23), cube(r.r24), cube(r.r34));

    let m2 = c23 * c24 * (c13 - c14) / (c13 * c14 * (c24 - c23));

    let branch_eps = RHOMBUS_BRANCH_EPS * r.scale();
    let rhombus = (r.r12 - r.r14).abs() <= branch_eps && (r.r23 - r.r34).abs() <= branch_eps;
    let m3 = if rhombus {
        r.r34.powi(5) * (c14 - c24) * (c14 - c13)
            / (r.r14.powi(5) * (c13 - c34) * (c24 - c34))
    } else {
        c23 * r.r34.powi(2) * (c12 - c14) / (r.r12.powi(2) * c14 * (c23 - c34))
    };

    let m4 = c24 * r.r34.powi(2) * (c13 - c12) / (r.r12.powi(2) * c13 * (c24 - c34));

    for (which, value) in [(2u8, m2), (3, m3), (4, m4)] {
        if !value.is_finite() {
            return Err(DziobeckError::FormulaDegenerate { which });
        }
        if value < -MASS_NEGATIVE_SLACK {
            return Err(DziobeckError::NonPositiveMass { which, value });
        }
    }

    let lambda = lambda_of(r)?.lambda;
    Ok(MassSet {
        m2,
        m3,
        m4,
        lambda,
    })
}

fn pair_distance(q: &[[f64; 2]; 4], i: usize, j: usize) -> f64 {
    let dx = q[i][0] - q[j][0];
    let dy = q[i][1] - q[j][1];
    (dx * dx + dy * dy).sqrt()
}

/// Independent certification oracle on Cartesian positions.
///
/// Solves the acceleration-difference equations
/// `qdd_k - qdd_l + lambda (q_k - q_l) = 0` over the pairs
/// (2,1), (3,1), (4,1), (3,2) for `(m2, m3, m4, lambda)` with `m1 = 1`,
/// in the least-squares sense; differencing eliminates the center of mass.
/// The residual norm certifies the configuration: positions that are not a
/// central configuration for any masses leave a large residual.
///
/// Deliberately independent of all mutual-distance algebra.
pub fn masses_cartesian_oracle(q: &[[f64; 2]; 4]) -> Result<(MassSet, f64), DziobeckError> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pair_distance(q, i, j) < 1e-12 {
                return Err(DziobeckError::DegeneratePositions);
            }
        }
    }
    let area = (q[1][0] - q[0][0]) * (q[2][1] - q[0][1]) - (q[2][0] - q[0][0]) * (q[1][1] - q[0][1]);
    if area.abs() < 1e-12 {
        let area2 =
            (q[1][0] - q[0][0]) * (q[3][1] - q[0][1]) - (q[3][0] - q[0][0]) * (q[1][1] - q[0][1]);
        if area2.abs() < 1e-12 {
            return Err(DziobeckError::DegeneratePositions);
        }
    }

    // u[k][j] = (q_j - q_k) / r_kj^3, the per-unit-mass pull of j on k.
    let mut u = [[[0.0f64; 2]; 4]; 4];
    for k in 0..4 {
        for j in 0..4 {
            if j == k {
                continue;
            }
            let r = pair_distance(q, k, j);
            let r3 = r * r * r;
            u[k][j] = [(q[j][0] - q[k][0]) / r3, (q[j][1] - q[k][1]) / r3];
        }
    }

    let pairs = [(1usize, 0usize), (2, 0), (3, 0), (2, 1)];
    let mut a = DMatrix::<f64>::zeros(8, 4);
    let mut rhs = DVector::<f64>::zeros(8);
    for (row_pair, &(k, l)) in pairs.iter().enumerate() {
        for axis in 0..2 {
            let row = 2 * row_pair + axis;
            // Columns 0..3: m2, m3, m4. Body 1 (mass 1) goes to the RHS.
            for (col, body) in (1..4).enumerate() {
                let mut coeff = 0.0;
                if body != k {
                    coeff += u[k][body][axis];
                }
                if body != l {
                    coeff -= u[l][body][axis];
                }
                a[(row, col)] = coeff;
            }
            a[(row, 3)] = q[k][axis] - q[l][axis];
            let constant = if k != 0 { u[k][0][axis] } else { 0.0 }
                - if l != 0 { u[l][0][axis] } else { 0.0 };
            rhs[row] = -constant;
        }
    }

    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(&rhs, 1e-14)
        .map_err(|_| DziobeckError::DegeneratePositions)?;
    let residual = (&a * &x - &rhs).norm();
    if residual > ORACLE_RESIDUAL_TOL {
        return Err(DziobeckError::NoSolution { residual });
    }
    // The Cartesian multiplier is M * lambda in the distance-quotient
    // normalization; divide by the total mass to match.
    let total = 1.0 + x[0] + x[1] + x[2];
    Ok((
        MassSet {
            m2: x[0],
            m3: x[1],
            m4: x[2],
            lambda: x[3] / total,
        },
        residual,
    ))
}

/// The six terms of `dD/da` on the right-trapezoid slice plus the three
/// sign-controlling combinations used to pin its sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GFunctions {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
    pub f5: f64,
    pub f6: f64,
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
    /// `3 (f1 + ... + f6)`; the `a`-derivative of `D` along `c = 0` slices.
    pub dd_da: f64,
}

impl GFunctions {
    pub fn pair_sums(&self) -> (f64, f64, f64) {
        (self.f1 + self.f4, self.f2 + self.f5, self.f3 + self.f6)
    }
}

/// Evaluate the `dD/da` decomposition and the auxiliary sign functions.
///
/// The `f` terms assemble the exact derivative only on right-trapezoid
/// distances (`c = 0`, where `r14` and `r34` do not vary with `a`); the
/// `g` functions are defined for any distances.
pub fn g_functions(r: &MutualDistances) -> GFunctions {
    let cube = |x: f64| x * x * x;
    let (c12, c13, c14) = (cube(r.r12), cube(r.r13), cube(r.r14));
    let (c23, c24, c34) = (cube(r.r23), cube(r.r24), cube(r.r34));
    let (r12, r23, r24, r34) = (r.r12, r.r23, r.r24, r.r34);

    let f1 = -r12 * r12 * (c24 - c14) * (c23 - c34);
    let f2 = -r12 * r12 * (c13 - c23) * (c24 - c34);
    let f3 = r23 * (r12 - r34) * (c13 - c12) * (c24 - c14);
    let f4 = r23 * (r12 - r34) * (c12 - c14) * (c24 - c34);
    let f5 = r12 * r24 * (c13 - c12) * (c23 - c34);
    let f6 = -r12 * r24 * (c12 - c14) * (c13 - c23);

    let g1 = -r34 * r23 * (c13 - c12) - r12 * (r12 - r23) * (r12 * r23 * (r12 + r23) + c13);
    let g2 = -r12 * (r24 - r12) * (c14 + r12 * r12 * r24 + r12 * r24 * r24);
    let g3 = -r24 * r12 * (c23 - c34) + r23 * (r12 - r34) * (c24 - c34);

    GFunctions {
        f1,
        f2,
        f3,
        f4,
        f5,
        f6,
        g1,
        g2,
        g3,
        dd_da: 3.0 * (f1 + f2 + f3 + f4 + f5 + f6),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{mutual_distances, TrapezoidConfig};

    fn cfg(a: f64, b: f64, c: f64) -> TrapezoidConfig {
        TrapezoidConfig::new(a, b, c).unwrap()
    }

    fn square() -> MutualDistances {
        mutual_distances(&cfg(1.0, 1.0, 0.0))
    }

    fn right_endpoint() -> MutualDistances {
        mutual_distances(&cfg(2.0 / 3.0_f64.sqrt(), 1.0 / 3.0_f64.sqrt(), 0.0))
    }

    /// Collinearity determinant of the three (s_i, p_i) points; independent
    /// route to the compatibility condition.
    fn collinearity_det(r: &MutualDistances) -> f64 {
        let sp = SumsProducts::from_distances(r);
        (sp.s2 - sp.s1) * (sp.p3 - sp.p1) - (sp.s3 - sp.s1) * (sp.p2 - sp.p1)
    }

    /// Bisect D = 0 in `a` on the right-trapezoid slice; test-local oracle.
    fn right_root(b: f64) -> f64 {
        let d_of = |a: f64| dziobeck_d(&mutual_distances(&cfg(a, b, 0.0)));
        let mut lo = (b * b + 1.0) / (2.0 * b);
        let mut hi = (1.0 + b * b).sqrt();
        assert!(d_of(lo) > 0.0 && d_of(hi) < 0.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if d_of(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn d_vanishes_on_square_and_endpoint() {
        assert_eq!(dziobeck_d(&square()), 0.0);
        assert!(dziobeck_d(&right_endpoint()).abs() < 1e-10);
    }

    #[test]
    fn d_matches_collinearity_determinant() {
        // Exact identity: D = det3 * (prod r_ij)^3.
        for (a, b, c) in [(1.2, 0.9, 0.1), (1.4, 0.7, -0.3), (1.05, 1.0, 0.2)] {
            let r = mutual_distances(&cfg(a, b, c));
            let prod: f64 = r.as_array().iter().product();
            let expected = collinearity_det(&r) * prod.powi(3);
            let d = dziobeck_d(&r);
            assert!(
                (d - expected).abs() <= 1e-12 * d.abs().max(1.0),
                "D = {d}, det route = {expected}"
            );
        }
        let r = mutual_distances(&cfg(1.2, 0.9, 0.1));
        assert!(dziobeck_d(&r).abs() > 1e-3);
    }

    #[test]
    fn lambda_on_square() {
        let r = square();
        let sp = SumsProducts::from_distances(&r);
        let expected = (sp.p1 - sp.p2) / (sp.s1 - sp.s2);
        let est = lambda_of(&r).unwrap();
        assert!((est.lambda - expected).abs() < 1e-14);
        assert!(est.spread <= 1e-12);
        assert!(est.lambda > 0.0);
    }

    #[test]
    fn lambda_on_endpoint_and_off_surface() {
        let est = lambda_of(&right_endpoint()).unwrap();
        assert!(est.lambda.is_finite());
        assert!(est.spread <= 1e-10);

        // Perturbed square sits off the surface; the quotients disagree.
        let r = mutual_distances(&cfg(1.05, 1.0, 0.0));
        let est = lambda_of(&r).unwrap();
        assert!(est.spread > 1e-4);
    }

    #[test]
    fn lambda_all_equal_for_equilateral_distances() {
        let r = MutualDistances::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(lambda_of(&r), Err(DziobeckError::AllEqual));
    }

    #[test]
    fn masses_on_square_are_unit() {
        let m = masses_closed_form(&square()).unwrap();
        assert!((m.m2 - 1.0).abs() < 1e-14);
        assert!((m.m3 - 1.0).abs() < 1e-14);
        assert!((m.m4 - 1.0).abs() < 1e-14);
        assert!(m.lambda > 0.0);
    }

    #[test]
    fn masses_at_right_endpoint_match_radical_forms() {
        let m = masses_closed_form(&right_endpoint()).unwrap();
        let m2_exact = 7.0 * (8.0 * 3.0_f64.sqrt() - 9.0) * (49.0 + 8.0 * 7.0_f64.sqrt()) / 2511.0;
        let m3_exact = 2.0 / 63.0 * (8.0 * 3.0_f64.sqrt() - 9.0);
        assert!((m.m2 - m2_exact).abs() < 1e-10, "m2 = {}", m.m2);
        assert!((m.m3 - m3_exact).abs() < 1e-10, "m3 = {}", m.m3);
        assert!(m.m4.abs() < 1e-10, "m4 = {}", m.m4);
    }

    #[test]
    fn masses_reject_off_surface_distances() {
        let r = mutual_distances(&cfg(1.05, 1.0, 0.0));
        assert!(matches!(
            masses_closed_form(&r),
            Err(DziobeckError::NotOnSurface { .. })
        ));
    }

    #[test]
    fn rhombus_branch_agrees_with_cartesian_oracle() {
        let c = -0.3_f64;
        let k = (1.0 + c * c).sqrt();
        let config = cfg(k, c + k, c);
        let m = masses_closed_form(&mutual_distances(&config)).unwrap();
        assert!((m.m3 - 1.0).abs() < 1e-12);
        assert!((m.m2 - m.m4).abs() < 1e-12);

        let (oracle, residual) = masses_cartesian_oracle(&config.positions()).unwrap();
        assert!(residual < 1e-12);
        assert!((m.m2 - oracle.m2).abs() < 1e-9);
        assert!((m.m3 - oracle.m3).abs() < 1e-9);
        assert!((m.m4 - oracle.m4).abs() < 1e-9);
    }

    #[test]
    fn oracle_on_square_positions() {
        let (m, residual) = masses_cartesian_oracle(&cfg(1.0, 1.0, 0.0).positions()).unwrap();
        assert!(residual <= 1e-12);
        for v in [m.m2, m.m3, m.m4] {
            assert!((v - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn oracle_rejects_generic_positions() {
        let q = [[0.0, 0.0], [0.1, 1.3], [1.2, 0.9], [0.9, -0.4]];
        assert!(matches!(
            masses_cartesian_oracle(&q),
            Err(DziobeckError::NoSolution { .. })
        ));
    }

    #[test]
    fn oracle_matches_closed_form_at_endpoint() {
        let config = cfg(2.0 / 3.0_f64.sqrt(), 1.0 / 3.0_f64.sqrt(), 0.0);
        let closed = masses_closed_form(&mutual_distances(&config)).unwrap();
        let (oracle, _) = masses_cartesian_oracle(&config.positions()).unwrap();
        assert!((closed.m2 - oracle.m2).abs() < 1e-9);
        assert!((closed.m3 - oracle.m3).abs() < 1e-9);
        assert!((closed.m4 - oracle.m4).abs() < 1e-9);
        assert!((closed.lambda - oracle.lambda).abs() < 1e-9);
    }

    #[test]
    fn ordering_chain() {
        assert!(in_omega_tilde(&square(), DEFAULT_ORDERING_EPS));
        assert!(in_omega_tilde(&right_endpoint(), DEFAULT_ORDERING_EPS));

        let bad = MutualDistances::new(1.5, 1.6, 1.0, 1.2, 1.7, 1.2).unwrap();
        assert!(!in_omega_tilde(&bad, DEFAULT_ORDERING_EPS));
    }

    #[test]
    fn g3_negative_at_endpoint() {
        let g = g_functions(&right_endpoint());
        assert!(g.g3 < 0.0, "g3 = {}", g.g3);
    }

    #[test]
    fn dd_da_matches_finite_differences() {
        let h = 1e-6;
        for b in [0.95, 0.8, 0.65] {
            let a = right_root(b);
            let g = g_functions(&mutual_distances(&cfg(a, b, 0.0)));
            let dp = dziobeck_d(&mutual_distances(&cfg(a + h, b, 0.0)));
            let dm = dziobeck_d(&mutual_distances(&cfg(a - h, b, 0.0)));
            let fd = (dp - dm) / (2.0 * h);
            assert!(
                (g.dd_da - fd).abs() <= 1e-6 * fd.abs().max(1.0),
                "b = {b}: closed {} vs fd {fd}",
                g.dd_da
            );
        }
    }

    #[test]
    fn pair_sum_signs_on_the_right_family() {
        for b in [0.99, 0.9, 0.75, 0.62] {
            let a = right_root(b);
            let g = g_functions(&mutual_distances(&cfg(a, b, 0.0)));
            let (s14, s25, s36) = g.pair_sums();
            assert!(s14 < 0.0, "f1+f4 = {s14} at b = {b}");
            assert!(s25 < 0.0, "f2+f5 = {s25} at b = {b}");
            assert!(s36 <= 1e-12, "f3+f6 = {s36} at b = {b}");
            assert!(g.dd_da < 0.0);
        }
    }

    #[test]
    fn pair_sums_reduce_to_g_functions_on_the_surface() {
        // On D = 0 the three pair sums factor through g1, g2, g3.
        let cube = |x: f64| x * x * x;
        for b in [0.9, 0.7] {
            let a = right_root(b);
            let r = mutual_distances(&cfg(a, b, 0.0));
            let g = g_functions(&r);
            let (c12, c13, c14) = (cube(r.r12), cube(r.r13), cube(r.r14));
            let (c23, c24, c34) = (cube(r.r23), cube(r.r24), cube(r.r34));
            let (s14, s25, s36) = g.pair_sums();
            let id1 = g.g1 * (c12 - c14) * (c24 - c34) / (c13 - c12);
            let id2 = g.g2 * (c13 - c12) * (c23 - c34) / (c12 - c14);
            let id3 = g.g3 * (c13 - c12) * (c24 - c14) / (c24 - c34);
            assert!((s14 - id1).abs() <= 1e-8 * id1.abs().max(1e-3));
            assert!((s25 - id2).abs() <= 1e-8 * id2.abs().max(1e-3));
            assert!((s36 - id3).abs() <= 1e-8 * id3.abs().max(1e-3));
        }
    }

    #[test]
    fn closed_form_matches_oracle_along_right_family() {
        for i in 0..100 {
            let b = 1.0 / 3.0_f64.sqrt() + 1e-3 + (1.0 - 1.0 / 3.0_f64.sqrt() - 2e-3) * i as f64 / 99.0;
            let a = right_root(b);
            let config = cfg(a, b, 0.0);
            let closed = masses_closed_form(&mutual_distances(&config)).unwrap();
            let (oracle, _) = masses_cartesian_oracle(&config.positions()).unwrap();
            let tol = |x: f64, y: f64| (x - y).abs() <= 1e-8 * x.abs().max(y.abs()).max(1.0);
            assert!(tol(closed.m2, oracle.m2), "b={b} m2 {} {}", closed.m2, oracle.m2);
            assert!(tol(closed.m3, oracle.m3), "b={b} m3 {} {}", closed.m3, oracle.m3);
            assert!(tol(closed.m4, oracle.m4), "b={b} m4 {} {}", closed.m4, oracle.m4);
        }
    }
}
