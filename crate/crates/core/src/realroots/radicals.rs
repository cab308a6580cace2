//! Radical elimination for the equal-mass conditions on the boundary
//! family `C1`, producing integer polynomials in `c` amenable to exact
//! Sturm counting.
//!
//! On `C1` the two conditions are radical equations in `c` built from
//! `k1 = sqrt(c^2+1)`, `k2 = sqrt(3c^2 - 4 sqrt3 c + 7)` and the constant
//! `sqrt3`. Clearing denominators and squaring out one radical at a time
//! (largest syntactic depth first: `k1`, then `k2`, then the `sqrt3`
//! conjugate) yields an integer polynomial whose real roots contain the
//! zeros of the original expression. Each squaring can introduce spurious
//! roots, including the mirror image `c -> -c` from the `sqrt3` conjugate
//! step, so every candidate is filtered by back-substitution into the
//! original radical expression.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::ExactPolynomial;
use crate::families::{mu2, mu3, EqualMassCurve, INV_SQRT3};

/// Residual bound for accepting a candidate root after back-substitution.
pub const FILTER_RESIDUAL_TOL: f64 = 1e-10;

/// Element of `Z[c][sqrt3]`: `re + im * sqrt3` with polynomial parts.
#[derive(Debug, Clone, PartialEq, Eq)]
struct QuadPoly {
    re: ExactPolynomial,
    im: ExactPolynomial,
}

impl QuadPoly {
    fn new(re: ExactPolynomial, im: ExactPolynomial) -> Self {
        Self { re, im }
    }

    fn from_int(re: &[i64]) -> Self {
        Self::new(ExactPolynomial::from_i64(re), ExactPolynomial::zero())
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    fn sub(&self, other: &Self) -> Self {
        Self::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    fn mul(&self, other: &Self) -> Self {
        // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s  with s^2 = 3.
        let three = BigInt::from(3);
        let re = self
            .re
            .mul(&other.re)
            .add(&self.im.mul(&other.im).scale(&three));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Self::new(re, im)
    }

    fn scale_int(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::new(self.re.scale(&k), self.im.scale(&k))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = QuadPoly::from_int(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Norm over the `sqrt3` extension: `re^2 - 3 im^2`.
    fn norm(&self) -> ExactPolynomial {
        let three = BigInt::from(3);
        self.re.mul(&self.re).sub(&self.im.mul(&self.im).scale(&three))
    }
}

/// Outcome of a radical elimination.
#[derive(Debug, Clone)]
pub struct RadicalElimination {
    pub which: EqualMassCurve,
    /// Integer polynomial in `c` containing the zeros of the condition.
    pub polynomial: ExactPolynomial,
    pub degree: usize,
    /// Degree previously reported for this condition's rationalization.
    pub reference_degree: usize,
    /// Set when the elimination path lands on a different degree than the
    /// reference; informational, not an error.
    pub degree_mismatch: bool,
    /// One entry per squaring, in order; each is a potential source of
    /// spurious roots.
    pub squarings: Vec<&'static str>,
}

/// Radical-free integer polynomial for the equal-mass condition on `C1`.
pub fn eliminate_radicals_c1(which: EqualMassCurve) -> RadicalElimination {
    // tau = k2^2 = (3c^2 + 7) - 4c*sqrt3,  upsilon = k1^2 = c^2 + 1.
    let tau = QuadPoly::new(
        ExactPolynomial::from_i64(&[7, 0, 3]),
        ExactPolynomial::from_i64(&[0, -4]),
    );

    let (norm_input, squarings, reference_degree) = match which {
        EqualMassCurve::EqualMass23 => {
            // Condition: (sqrt3 c + 1) k2^5 = 2 (1 - sqrt3 c)^2 (k2^3 - 8),
            // i.e. P + Q k2 = 0 with
            //   P = 16 (1 - sqrt3 c)^2,
            //   Q = (sqrt3 c + 1) tau^2 - 2 (1 - sqrt3 c)^2 tau.
            let one_minus = QuadPoly::new(
                ExactPolynomial::from_i64(&[1]),
                ExactPolynomial::from_i64(&[0, -1]),
            );
            let one_plus = QuadPoly::new(
                ExactPolynomial::from_i64(&[1]),
                ExactPolynomial::from_i64(&[0, 1]),
            );
            let one_minus_sq = one_minus.pow(2);
            let p = one_minus_sq.scale_int(16);
            let q = one_plus.mul(&tau.pow(2)).sub(&one_minus_sq.mul(&tau).scale_int(2));
            // First squaring removes k2: P^2 - Q^2 tau.
            let f = p.pow(2).sub(&q.pow(2).mul(&tau));
            (
                f,
                vec![
                    "square out k2 = sqrt(3c^2 - 4 sqrt3 c + 7)",
                    "multiply by the sqrt3 conjugate",
                ],
                24,
            )
        }
        EqualMassCurve::EqualMass12 => {
            // Condition: 4 sqrt3 k2^3 = 9 k1^3 (k2^3 - 4).
            // Squaring k1 out: 48 tau^3 = 81 u^3 (tau^3 - 8 tau k2 + 16),
            // then isolating k2: 648 u^3 tau k2 = 81 u^3 (tau^3 + 16) - 48 tau^3
            // and squaring again: (648 u^3 tau)^2 tau = W^2.
            let upsilon = QuadPoly::from_int(&[1, 0, 1]);
            let u3 = upsilon.pow(3);
            let tau3 = tau.pow(3);
            let w = u3
                .mul(&tau3.add(&QuadPoly::from_int(&[16])))
                .scale_int(81)
                .sub(&tau3.scale_int(48));
            let lhs = u3.pow(2).mul(&tau3).scale_int(648 * 648);
            let f = w.pow(2).sub(&lhs);
            (
                f,
                vec![
                    "square out k1 = sqrt(c^2 + 1)",
                    "square out k2 = sqrt(3c^2 - 4 sqrt3 c + 7)",
                    "multiply by the sqrt3 conjugate",
                ],
                22,
            )
        }
    };

    let polynomial = norm_input.norm().primitive();
    let polynomial = match polynomial.leading() {
        Some(lc) if num_traits::Signed::is_negative(lc) => polynomial.neg(),
        _ => polynomial,
    };
    let degree = polynomial.degree().unwrap_or(0);
    RadicalElimination {
        which,
        polynomial,
        degree,
        reference_degree,
        degree_mismatch: degree != reference_degree,
        squarings,
    }
}

/// The original radical expression whose zeros the elimination targets.
pub fn radical_expression(which: EqualMassCurve, c: f64) -> f64 {
    match which {
        EqualMassCurve::EqualMass23 => mu2(c) - mu3(c),
        EqualMassCurve::EqualMass12 => mu2(c) - 1.0,
    }
}

/// Root report for an eliminated condition on the open admissible interval.
#[derive(Debug, Clone)]
pub struct C1RootReport {
    pub elimination: RadicalElimination,
    /// Exact count of distinct real roots of the radical-free polynomial
    /// on the interval (spurious roots included).
    pub sturm_count_raw: usize,
    /// All refined roots on the interval, ascending.
    pub roots_raw: Vec<f64>,
    /// Roots surviving back-substitution into the radical expression.
    pub roots_admissible: Vec<f64>,
    /// Residual of the radical expression at each admissible root.
    pub residuals: Vec<f64>,
}

/// Full pipeline: eliminate, count and isolate by exact Sturm machinery,
/// refine, and filter by back-substitution.
///
/// The square-free reduction and the Sturm chain are built once and shared
/// between the count, the isolation, and the refinement.
pub fn c1_roots(which: EqualMassCurve, tol: f64) -> C1RootReport {
    let elimination = eliminate_radicals_c1(which);
    // Rational brackets for the open interval (-1/sqrt3, 1/sqrt3); the f64
    // endpoints are within 1 ulp of the irrational bounds and the genuine
    // roots lie far inside.
    let lo = BigRational::from_float(-INV_SQRT3).unwrap();
    let hi = BigRational::from_float(INV_SQRT3).unwrap();
    let (raw_count, roots_raw) =
        super::sturm::count_and_refine(&elimination.polynomial, &lo, &hi, tol);
    let mut roots_admissible = Vec::new();
    let mut residuals = Vec::new();
    for &root in &roots_raw {
        let residual = radical_expression(which, root);
        if residual.abs() <= FILTER_RESIDUAL_TOL {
            roots_admissible.push(root);
            residuals.push(residual);
        }
    }
    C1RootReport {
        elimination,
        sturm_count_raw: raw_count,
        roots_raw,
        roots_admissible,
        residuals,
    }
}
