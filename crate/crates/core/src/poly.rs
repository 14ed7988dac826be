//! Dense single-variable polynomials with exact coefficient arithmetic.
//!
//! Brute-force oracle used to cross-check closed-form polynomial identities
//! (trinomial powers, Hermite products) by expand-then-differentiate.

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 64;

/// Coefficients in ascending power order; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePolynomial {
    coeffs: Vec<f64>,
}

impl DensePolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        if coeffs.len() - 1 > MAX_DEGREE {
            return Err(Error::DegreeOverflow(coeffs.len() - 1));
        }
        Ok(Self { coeffs })
    }

    pub fn constant(c: f64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let deg = self.degree() + other.degree();
        if deg > MAX_DEGREE {
            return Err(Error::DegreeOverflow(deg));
        }
        let mut out = vec![0.0; deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::constant(1.0);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(0.0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| k as f64 * c)
            .collect();
        Self::new(coeffs).expect("derivative cannot raise the degree")
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_pow() {
        let p = DensePolynomial::new(vec![1.0, 1.0]).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.coeffs(), &[1.0, 2.0, 1.0]);
        // (x^2 + 2x + 1)^4 at 0.7 against the two-route value ((0.7+1)^2)^4.
        let t = DensePolynomial::new(vec![1.0, 2.0, 1.0]).unwrap();
        let v = t.pow(4).unwrap().eval(0.7);
        assert!((v - 1.7f64.powi(8)).abs() < 1e-10);
    }

    #[test]
    fn derivative_cases() {
        let p = DensePolynomial::new(vec![1.0, 2.0, 1.0]).unwrap();
        assert_eq!(p.derivative().coeffs(), &[2.0, 2.0]);
        assert_eq!(DensePolynomial::constant(5.0).derivative().coeffs(), &[0.0]);
    }

    #[test]
    fn degree_overflow() {
        let p = DensePolynomial::new(vec![1.0; 34]).unwrap();
        assert!(matches!(p.mul(&p), Err(Error::DegreeOverflow(66))));
        let q = DensePolynomial::new(vec![1.0; 33]).unwrap();
        assert!(q.mul(&q).is_ok());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = DensePolynomial::new(vec![1.0, 2.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.degree(), 1);
    }
}
