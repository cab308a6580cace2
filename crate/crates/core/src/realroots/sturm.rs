//! Sturm chains and exact real-root counting, isolation, and refinement.
//!
//! All sign decisions are made in exact rational arithmetic; floating point
//! appears only when a refined root is finally reported as `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::ExactPolynomial;

/// An interval `(lo, hi]` containing exactly one real root.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    /// True when the underlying polynomial was reduced to its square-free
    /// part, so the isolated root is simple.
    pub multiplicity_free: bool,
}

/// Canonical Sturm sequence: `p`, `p'`, then negated remainders, each
/// stripped to a primitive representative with the sign preserved.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<ExactPolynomial>,
}

impl SturmChain {
    /// Build the chain for a square-free polynomial (callers reduce first).
    pub fn new(p: &ExactPolynomial) -> Self {
        let p0 = p.primitive();
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative().primitive();
        if p1.is_zero() {
            return Self { chain };
        }
        chain.push(p1);
        loop {
            let n = chain.len();
            let rem = chain[n - 2].pseudo_rem_sign_safe(&chain[n - 1]);
            if rem.is_zero() {
                break;
            }
            chain.push(rem.neg().primitive());
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn sign_variations_at(&self, x: &BigRational) -> usize {
        let mut variations = 0;
        let mut prev: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                variations += 1;
            }
            prev = s;
        }
        variations
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let vl = self.sign_variations_at(lo);
        let vh = self.sign_variations_at(hi);
        vl.saturating_sub(vh)
    }

    /// Split `(lo, hi]` into intervals holding exactly one root each.
    pub fn isolate(&self, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
        let n = self.count_roots(lo, hi);
        match n {
            0 => Vec::new(),
            1 => vec![(lo.clone(), hi.clone())],
            _ => {
                let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
                let mut left = self.isolate(lo, &mid);
                left.extend(self.isolate(&mid, hi));
                left
            }
        }
    }
}

/// Exact number of distinct real roots of `p` in `(lo, hi]`.
///
/// The square-free part is taken first, so multiple roots count once.
pub fn sturm_count(p: &ExactPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    let sf = p.square_free_part();
    if sf.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmChain::new(&sf).count_roots(lo, hi)
}

/// Refine the single root of square-free `p` inside `(lo, hi]` to width
/// `tol` by exact-sign bisection.
fn refine_interval(
    p: &ExactPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    tol: &BigRational,
) -> (BigRational, BigRational) {
    if p.sign_at(&hi) == 0 {
        return (hi.clone(), hi);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let s_hi = p.sign_at(&hi);
    // The left endpoint may sit on a different root of p; nudge right until
    // its sign is defined and still opposite to the right endpoint's.
    let mut s_lo = p.sign_at(&lo);
    if s_lo == 0 || s_lo == s_hi {
        let mut shift = (&hi - &lo) / BigRational::from_integer(BigInt::from(1024));
        loop {
            let probe = &lo + &shift;
            let s = p.sign_at(&probe);
            if s != 0 && s != s_hi {
                lo = probe;
                s_lo = s;
                break;
            }
            if s == 0 {
                // Probe landed on the isolated root itself.
                return (probe.clone(), probe);
            }
            shift /= &two;
        }
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let s = p.sign_at(&mid);
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Isolate every root of `p` in `(lo, hi]` and refine each to `tol`,
/// returning the refined values in increasing order.
pub fn isolate_and_refine(
    p: &ExactPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    tol: f64,
) -> Vec<f64> {
    let intervals = isolate_roots(p, lo, hi);
    let sf = p.square_free_part();
    let tol_q = BigRational::from_float(tol).expect("finite tolerance");
    let mut roots: Vec<f64> = intervals
        .into_iter()
        .map(|iv| {
            let (l, h) = refine_interval(&sf, iv.lo, iv.hi, &tol_q);
            let mid = (&l + &h) / BigRational::from_integer(BigInt::from(2));
            rational_to_f64(&mid)
        })
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Count and refine in one pass, sharing the square-free reduction and the
/// chain across all stages.
pub(crate) fn count_and_refine(
    p: &ExactPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    tol: f64,
) -> (usize, Vec<f64>) {
    let sf = p.square_free_part();
    if sf.degree().unwrap_or(0) == 0 {
        return (0, Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let count = chain.count_roots(lo, hi);
    let tol_q = BigRational::from_float(tol).expect("finite tolerance");
    let mut roots: Vec<f64> = chain
        .isolate(lo, hi)
        .into_iter()
        .map(|(l, h)| {
            let (l, h) = refine_interval(&sf, l, h, &tol_q);
            rational_to_f64(&((&l + &h) / BigRational::from_integer(BigInt::from(2))))
        })
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (count, roots)
}

/// Isolating intervals for the distinct real roots of `p` in `(lo, hi]`.
pub fn isolate_roots(
    p: &ExactPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Vec<IsolatingInterval> {
    let sf = p.square_free_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf);
    chain
        .isolate(lo, hi)
        .into_iter()
        .map(|(lo, hi)| IsolatingInterval {
            lo,
            hi,
            multiplicity_free: true,
        })
        .collect()
}

/// Convert an exact rational to the nearest f64.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    // Scale into i128 range by shifting both parts; exact enough for f64.
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let bits_n = q.numer().bits() as i64;
        let bits_d = q.denom().bits() as i64;
        let shift = (bits_n.max(bits_d) - 100).max(0) as u64;
        let n = q.numer() >> shift;
        let d = q.denom() >> shift;
        n.to_f64().unwrap() / d.to_f64().unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_i64(coeffs)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_reference_cases() {
        // x^2 - 2 has one root in (0, 2).
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &q(0, 1), &q(2, 1)), 1);
        // x^2 + 1 has none anywhere real.
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &q(-10, 1), &q(10, 1)), 0);
        // x^3 - 2x has three in (-2, 2].
        assert_eq!(sturm_count(&p(&[0, -2, 0, 1]), &q(-2, 1), &q(2, 1)), 3);
        // Multiple roots count once: (x-1)^2.
        assert_eq!(sturm_count(&p(&[1, -2, 1]), &q(0, 1), &q(2, 1)), 1);
        // Half-open semantics: root exactly at hi counts, at lo does not.
        assert_eq!(sturm_count(&p(&[-1, 1]), &q(0, 1), &q(1, 1)), 1);
        assert_eq!(sturm_count(&p(&[-1, 1]), &q(1, 1), &q(2, 1)), 0);
    }

    #[test]
    fn isolate_and_refine_cubic() {
        let roots = isolate_and_refine(&p(&[0, -2, 0, 1]), &q(-2, 1), &q(2, 1), 1e-12);
        assert_eq!(roots.len(), 3);
        let s = 2.0_f64.sqrt();
        assert!((roots[0] + s).abs() < 1e-11);
        assert!(roots[1].abs() < 1e-11);
        assert!((roots[2] - s).abs() < 1e-11);
    }

    #[test]
    fn refine_handles_root_at_endpoint_probe() {
        // Roots at 0 and 1; isolating (−1/2, 1] then refining must not be
        // confused by the probe landing near 0.
        let poly = p(&[0, 1]).mul(&p(&[-1, 1]));
        let roots = isolate_and_refine(&poly, &q(-1, 2), &q(3, 2), 1e-12);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].abs() < 1e-11);
        assert!((roots[1] - 1.0).abs() < 1e-11);
    }

    #[test]
    fn residual_of_refined_roots_is_small() {
        // Coefficient-scaled residual bound at the refined roots.
        let poly = p(&[-35, 12, 9, -7, 1, 3]);
        let roots = isolate_and_refine(&poly, &q(-100, 1), &q(100, 1), 1e-12);
        assert!(!roots.is_empty());
        use num_traits::ToPrimitive;
        let scale: f64 = poly
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap().abs())
            .fold(0.0, f64::max);
        for r in roots {
            let v = poly.eval_rational(&BigRational::from_float(r).unwrap());
            let v = rational_to_f64(&v);
            assert!(v.abs() <= 1e-10 * scale, "residual {v} at root {r}");
        }
    }

    #[test]
    fn count_matches_dense_sampling_on_seeded_polynomials() {
        // Deterministic pseudo-random integer polynomials of degree <= 12;
        // the oracle densely samples sign changes.
        let mut state = 0x1234_5678_9abc_def0_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 21) as i64 - 10
        };
        for trial in 0usize..10 {
            let deg = 3 + (trial % 10);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| next()).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let poly = p(&coeffs).square_free_part();
            let lo = -12.0;
            let hi = 12.0;
            let n = 200_000;
            let mut oracle = 0;
            let mut prev = 0.0_f64;
            let mut prev_set = false;
            let eval = |x: f64| {
                poly.coeffs()
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| {
                        use num_traits::ToPrimitive;
                        acc * x + c.to_f64().unwrap()
                    })
            };
            for i in 0..=n {
                let x = lo + (hi - lo) * i as f64 / n as f64;
                let v = eval(x);
                if v == 0.0 {
                    continue;
                }
                if prev_set && (v > 0.0) != (prev > 0.0) {
                    oracle += 1;
                }
                prev = v;
                prev_set = true;
            }
            let exact = sturm_count(&poly, &q(-12, 1), &q(12, 1));
            assert_eq!(exact, oracle, "polynomial {poly}");
        }
    }
}
