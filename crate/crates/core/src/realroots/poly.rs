//! Dense univariate polynomials with exact big-integer coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial over the integers, dense coefficients in ascending degree.
/// The zero polynomial is an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigInt>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the polynomial at a rational point: -1, 0, or 1.
    ///
    /// Evaluates the homogenized form `sum c_i n^i d^(deg-i)` in pure
    /// integer arithmetic; no rational normalization happens on the way.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.coeffs.is_empty() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        let mut acc = BigInt::zero();
        let mut d_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &d_pow;
            d_pow *= d;
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of all coefficients; zero polynomial has content 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd_bigint(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `d` with a positive multiplier, so the
    /// result is a positive-constant multiple of the rational remainder.
    ///
    /// Each elimination step rescales by `lc(d)^2 > 0`; no divisions occur
    /// and callers strip the content afterwards anyway.
    pub fn pseudo_rem_sign_safe(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let lc2 = &lc * &lc;
        let mut rem = self.clone();
        while let Some(n) = rem.degree() {
            if n < dd {
                break;
            }
            let lead = rem.leading().unwrap() * &lc;
            let mut shifted = vec![BigInt::zero(); n - dd];
            shifted.extend(d.coeffs.iter().map(|c| c * &lead));
            rem = rem.scale(&lc2).sub(&Self::new(shifted));
            debug_assert!(rem.degree().map_or(true, |m| m < n));
        }
        rem
    }

    /// Exact division; `None` if `d` does not divide `self` over Q.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree()?;
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let lc = BigRational::from_integer(d.leading().unwrap().clone());
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for i in (dd..=n).rev() {
            let q = &rem[i] / &lc;
            quot[i - dd] = q.clone();
            if q.is_zero() {
                continue;
            }
            for j in 0..=dd {
                let t = &q * BigRational::from_integer(d.coeffs[j].clone());
                rem[i - dd + j] -= t;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        // Integral quotients only; primitive inputs guarantee this here.
        let mut out = Vec::with_capacity(quot.len());
        for q in quot {
            if !q.denom().is_one() {
                return None;
            }
            out.push(q.numer().clone());
        }
        Some(Self::new(out))
    }

    /// Primitive positive gcd via the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return normalize_sign(b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem_sign_safe(&b).primitive();
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    /// Square-free part `p / gcd(p, p')`, primitive with positive leading
    /// coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.primitive();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return normalize_sign(p);
        }
        normalize_sign(
            p.div_exact(&g)
                .expect("gcd divides the polynomial exactly"),
        )
    }
}

fn normalize_sign(p: ExactPolynomial) -> ExactPolynomial {
    match p.leading() {
        Some(lc) if lc.is_negative() => p.neg(),
        _ => p,
    }
}

pub(crate) fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl std::fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag} x")?,
                _ if mag.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{mag} x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}
