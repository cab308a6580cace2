//! Bivariate integer polynomials and exact Sylvester resultants.
//!
//! The resultant is computed by evaluation-interpolation: the Sylvester
//! matrix is built once over `Z[y]`, its entries are evaluated at enough
//! integer points, each numeric determinant is taken fraction-free
//! (Bareiss), and the results are interpolated back exactly. Building the
//! matrix before evaluating keeps the determinant equal to the resultant
//! even at points where a leading coefficient vanishes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::ExactPolynomial;

/// Which variable a resultant eliminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Polynomial in `Z[x, y]`, stored as coefficients of powers of `x`,
/// each itself a polynomial in `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs_x: Vec<ExactPolynomial>,
}

impl BivariatePoly {
    pub fn new(mut coeffs_x: Vec<ExactPolynomial>) -> Self {
        while coeffs_x.last().is_some_and(|c| c.is_zero()) {
            coeffs_x.pop();
        }
        Self { coeffs_x }
    }

    /// Build from `(i, j, coeff)` triples meaning `coeff * x^i * y^j`.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let deg_x = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut cols: Vec<Vec<BigInt>> = vec![Vec::new(); deg_x + 1];
        for &(i, j, c) in terms {
            if cols[i].len() <= j {
                cols[i].resize(j + 1, BigInt::zero());
            }
            cols[i][j] += BigInt::from(c);
        }
        Self::new(cols.into_iter().map(ExactPolynomial::new).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs_x.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        if self.coeffs_x.is_empty() {
            None
        } else {
            Some(self.coeffs_x.len() - 1)
        }
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs_x.iter().filter_map(|c| c.degree()).max()
    }

    /// Swap the roles of the two variables.
    pub fn transpose(&self) -> Self {
        let dy = self.degree_y().map_or(0, |d| d);
        let dx = self.coeffs_x.len();
        let mut cols: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); dx]; dy + 1];
        for (i, cy) in self.coeffs_x.iter().enumerate() {
            for (j, c) in cy.coeffs().iter().enumerate() {
                cols[j][i] = c.clone();
            }
        }
        Self::new(cols.into_iter().map(ExactPolynomial::new).collect())
    }

    pub fn eval_xy(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for cy in self.coeffs_x.iter().rev() {
            acc = acc * x + cy.eval_rational(y);
        }
        acc
    }
}

/// Fraction-free determinant of an integer matrix (Bareiss).
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `p` and `q` with respect to `x`, entries in `Z[y]`.
fn sylvester_matrix_x(p: &BivariatePoly, q: &BivariatePoly) -> Vec<Vec<ExactPolynomial>> {
    let m = p.degree_x().expect("nonzero p");
    let n = q.degree_x().expect("nonzero q");
    let size = m + n;
    let mut rows = vec![vec![ExactPolynomial::zero(); size]; size];
    for (row, item) in rows.iter_mut().enumerate().take(n) {
        // Row of p coefficients, highest degree first, shifted by `row`.
        for (k, c) in p.coeffs_x.iter().rev().enumerate() {
            item[row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs_x.iter().rev().enumerate() {
            rows[n + row][row + k] = c.clone();
        }
    }
    rows
}

/// Exact resultant eliminating the requested variable; the result is a
/// univariate polynomial in the surviving variable.
///
/// Containment: if `(x0, y0)` solves `p = q = 0`, the surviving coordinate
/// is a root of the resultant (possibly among extra spurious roots).
pub fn sylvester_resultant(p: &BivariatePoly, q: &BivariatePoly, eliminate: Var) -> ExactPolynomial {
    let (p, q) = match eliminate {
        Var::X => (p.clone(), q.clone()),
        Var::Y => (p.transpose(), q.transpose()),
    };
    if p.is_zero() || q.is_zero() {
        return ExactPolynomial::zero();
    }
    let m = p.degree_x().unwrap();
    let n = q.degree_x().unwrap();
    if m == 0 {
        return p.coeffs_x[0].clone().pow(n as u32);
    }
    if n == 0 {
        return q.coeffs_x[0].clone().pow(m as u32);
    }

    let matrix = sylvester_matrix_x(&p, &q);
    let dy_p = p.degree_y().unwrap_or(0);
    let dy_q = q.degree_y().unwrap_or(0);
    let degree_bound = m * dy_q + n * dy_p;

    // Evaluate at 0, 1, -1, 2, -2, ... and interpolate exactly.
    let mut points: Vec<BigInt> = Vec::with_capacity(degree_bound + 1);
    let mut next = 0i64;
    while points.len() <= degree_bound {
        points.push(BigInt::from(next));
        next = if next > 0 { -next } else { -next + 1 };
    }
    let values: Vec<BigInt> = points
        .iter()
        .map(|y0| {
            let numeric: Vec<Vec<BigInt>> = matrix
                .iter()
                .map(|row| row.iter().map(|e| e.eval_int(y0)).collect())
                .collect();
            bareiss_determinant(&numeric)
        })
        .collect();

    interpolate_integer(&points, &values)
}

/// Lagrange interpolation through integer nodes with an integer result.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> ExactPolynomial {
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); points.len()];
    for (k, (xk, yk)) in points.iter().zip(values).enumerate() {
        if yk.is_zero() {
            continue;
        }
        // Basis polynomial prod_{j != k} (y - x_j) / (x_k - x_j).
        let mut basis: Vec<BigRational> = vec![BigRational::from_integer(yk.clone())];
        for (j, xj) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let denom = BigRational::from_integer(xk - xj);
            let shift = BigRational::from_integer(xj.clone());
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                let scaled = b / &denom;
                next[i + 1] += &scaled;
                next[i] -= &scaled * &shift;
            }
            basis = next;
        }
        for (i, b) in basis.into_iter().enumerate() {
            acc[i] += b;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(c.denom().is_one(), "resultant interpolation not integral");
            c.numer().clone()
        })
        .collect();
    ExactPolynomial::new(coeffs)
}

#[allow(dead_code)]
fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;


    #[test]
    fn determinant_reference() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(-1)],
            vec![BigInt::from(0), BigInt::from(5), BigInt::from(4)],
        ];
        // det = 2*(12+5) - 0 + 1*(5-0) = 39
        assert_eq!(bareiss_determinant(&m), BigInt::from(39));

        let singular = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(bareiss_determinant(&singular), BigInt::zero());
    }

    #[test]
    fn circle_line_resultant() {
        // Res_x[x^2 + y^2 - 1, x - y] = 2y^2 - 1 (up to sign).
        let circle = BivariatePoly::from_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let line = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, -1)]);
        let res = sylvester_resultant(&circle, &line, Var::X);
        let expected = ExactPolynomial::from_i64(&[-1, 0, 2]);
        assert!(res == expected || res == expected.neg(), "got {res}");
    }

    #[test]
    fn squared_distance_substitution() {
        // Eliminating r from r^2 - (b^2 + 1) against P(r, b) matches the
        // direct substitution r = +-sqrt(b^2+1): P(r,b)*P(-r,b) evaluated.
        // Use P = r^3 + b r - 2  (x ~ r, y ~ b).
        let rel = BivariatePoly::from_terms(&[(2, 0, 1), (0, 2, -1), (0, 0, -1)]);
        let p = BivariatePoly::from_terms(&[(3, 0, 1), (1, 1, 1), (0, 0, -2)]);
        let res = sylvester_resultant(&p, &rel, Var::X);
        for b0 in [-2.0f64, -0.5, 0.3, 1.7] {
            let r = (b0 * b0 + 1.0).sqrt();
            let eval_p = |x: f64| x * x * x + b0 * x - 2.0;
            let expected = eval_p(r) * eval_p(-r);
            let got = res
                .eval_rational(&BigRational::from_float(b0).unwrap())
                .to_f64()
                .unwrap();
            assert!(
                (got - expected).abs() <= 1e-9 * expected.abs().max(1.0),
                "b0 = {b0}: resultant {got} vs substitution {expected}"
            );
        }
    }

    #[test]
    fn containment_on_constructed_common_zeros() {
        // p = (x - y)(x + 2y - 1), q = (x - y)(x - 3) vanish along x = y;
        // the resultant must vanish identically (a common factor in x).
        let p = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, -1)]);
        let p = {
            let other = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, 2), (0, 0, -1)]);
            mul(&p, &other)
        };
        let q = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, -1)]);
        let q = {
            let other = BivariatePoly::from_terms(&[(1, 0, 1), (0, 0, -3)]);
            mul(&q, &other)
        };
        let res = sylvester_resultant(&p, &q, Var::X);
        assert!(res.is_zero());
    }

    #[test]
    fn containment_on_transversal_system() {
        // p = x^2 + y^2 - 5, q = x*y - 2 meet at (1,2),(2,1),(-1,-2),(-2,-1).
        let p = BivariatePoly::from_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -5)]);
        let q = BivariatePoly::from_terms(&[(1, 1, 1), (0, 0, -2)]);
        let res_y = sylvester_resultant(&p, &q, Var::X);
        for y0 in [2i64, 1, -2, -1] {
            let v = res_y.eval_rational(&BigRational::from_integer(BigInt::from(y0)));
            assert!(v.is_zero(), "y = {y0} not a root of {res_y}");
        }
        let res_x = sylvester_resultant(&p, &q, Var::Y);
        for x0 in [2i64, 1, -2, -1] {
            let v = res_x.eval_rational(&BigRational::from_integer(BigInt::from(x0)));
            assert!(v.is_zero(), "x = {x0} not a root of {res_x}");
        }
    }

    #[test]
    fn containment_on_seeded_random_systems() {
        // Brute-force common zeros on a grid (with polish) project into the
        // resultant's root set.
        let mut state = 0xdead_beef_cafe_f00d_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..6 {
            let mut terms_p = Vec::new();
            let mut terms_q = Vec::new();
            for i in 0..=2usize {
                for j in 0..=(2 - i) {
                    terms_p.push((i, j, next()));
                    terms_q.push((i, j, next()));
                }
            }
            let p = BivariatePoly::from_terms(&terms_p);
            let q = BivariatePoly::from_terms(&terms_q);
            if p.degree_x().is_none() || q.degree_x().is_none() {
                continue;
            }
            if p.degree_x() == Some(0) && q.degree_x() == Some(0) {
                continue;
            }
            let res = sylvester_resultant(&p, &q, Var::X);
            if res.is_zero() {
                continue;
            }
            // Grid search + Newton polish for common zeros; plain f64
            // evaluation is plenty for locating them.
            let to_f64_grid = |f: &BivariatePoly| -> Vec<Vec<f64>> {
                f.coeffs_x
                    .iter()
                    .map(|cy| cy.coeffs().iter().map(|c| c.to_f64().unwrap()).collect())
                    .collect()
            };
            let pg = to_f64_grid(&p);
            let qg = to_f64_grid(&q);
            let eval_grid = |g: &[Vec<f64>], x: f64, y: f64| {
                g.iter().rev().fold(0.0, |acc, cy| {
                    acc * x + cy.iter().rev().fold(0.0, |a, c| a * y + c)
                })
            };
            let eval = |which: bool, x: f64, y: f64| {
                if which {
                    eval_grid(&pg, x, y)
                } else {
                    eval_grid(&qg, x, y)
                }
            };
            let n = 60;
            for i in 0..n {
                for j in 0..n {
                    let x = -3.0 + 6.0 * i as f64 / (n - 1) as f64;
                    let y = -3.0 + 6.0 * j as f64 / (n - 1) as f64;
                    let (mut x, mut y) = (x, y);
                    // Newton for the 2x2 system with numeric Jacobian.
                    let mut converged = false;
                    for _ in 0..40 {
                        let f1 = eval(true, x, y);
                        let f2 = eval(false, x, y);
                        if f1.abs() < 1e-12 && f2.abs() < 1e-12 {
                            converged = true;
                            break;
                        }
                        let h = 1e-7;
                        let j11 = (eval(true, x + h, y) - eval(true, x - h, y)) / (2.0 * h);
                        let j12 = (eval(true, x, y + h) - eval(true, x, y - h)) / (2.0 * h);
                        let j21 = (eval(false, x + h, y) - eval(false, x - h, y)) / (2.0 * h);
                        let j22 = (eval(false, x, y + h) - eval(false, x, y - h)) / (2.0 * h);
                        let det = j11 * j22 - j12 * j21;
                        if det.abs() < 1e-14 {
                            break;
                        }
                        x -= (f1 * j22 - f2 * j12) / det;
                        y -= (j11 * f2 - j21 * f1) / det;
                        if !x.is_finite() || !y.is_finite() || x.abs() > 50.0 || y.abs() > 50.0 {
                            break;
                        }
                    }
                    if converged {
                        let v = res
                            .eval_rational(&BigRational::from_float(y).unwrap())
                            .to_f64()
                            .unwrap();
                        let scale: f64 = res
                            .coeffs()
                            .iter()
                            .map(|c| c.to_f64().unwrap().abs())
                            .fold(1.0, f64::max);
                        assert!(
                            v.abs() <= 1e-6 * scale * y.abs().max(1.0).powi(res.degree().unwrap_or(0) as i32),
                            "common zero ({x}, {y}) not contained: res(y) = {v}"
                        );
                    }
                }
            }
        }
    }

    fn mul(a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        let da = a.degree_x().unwrap();
        let db = b.degree_x().unwrap();
        let mut out = vec![ExactPolynomial::zero(); da + db + 1];
        for (i, ca) in a.coeffs_x.iter().enumerate() {
            for (j, cb) in b.coeffs_x.iter().enumerate() {
                out[i + j] = out[i + j].add(&ca.mul(cb));
            }
        }
        BivariatePoly::new(out)
    }
}
