//! Gamma/Beta scalar kernel.
//!
//! Lanczos approximation (g = 7, 9 terms) with the reflection formula for
//! arguments below 1/2. Poles are detected by integer proximity; the
//! reciprocal is entire and returns exactly 0 there.

use crate::error::{Error, Result};

const PI: f64 = std::f64::consts::PI;

// Lanczos g = 7 coefficients (GSL / numerical recipes lineage).
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const POLE_EPS: f64 = 1e-12;

/// True when `x` sits on a pole of Gamma (0, -1, -2, ...).
pub fn is_gamma_pole(x: f64) -> bool {
    x <= POLE_EPS && (x - x.round()).abs() < POLE_EPS
}

fn lanczos_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * lanczos_gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let w = x + 7.5;
    (2.0 * PI).sqrt() * w.powf(x + 0.5) * (-w).exp() * acc
}

/// Euler Gamma function. Errors at non-positive integers.
pub fn gamma(x: f64) -> Result<f64> {
    if is_gamma_pole(x) {
        return Err(Error::GammaPole(x));
    }
    // Exact factorial path keeps integer arguments at full precision.
    if x > 0.0 && x <= 171.0 && (x - x.round()).abs() < POLE_EPS {
        return Ok(factorial(x.round() as usize - 1));
    }
    Ok(lanczos_gamma(x))
}

/// Entire reciprocal 1/Gamma(x); exactly 0 at non-positive integers.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if is_gamma_pole(x) {
        return 0.0;
    }
    if x > 0.0 && x <= 171.0 && (x - x.round()).abs() < POLE_EPS {
        return 1.0 / factorial(x.round() as usize - 1);
    }
    1.0 / lanczos_gamma(x)
}

/// Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
pub fn beta(a: f64, b: f64) -> Result<f64> {
    if is_gamma_pole(a + b) {
        // Gamma(a+b) poles make the quotient zero unless a or b also poles.
        if is_gamma_pole(a) || is_gamma_pole(b) {
            return Err(Error::GammaPole(a.min(b)));
        }
        return Ok(0.0);
    }
    Ok(gamma(a)? * gamma(b)? / gamma(a + b)?)
}

/// n! as f64, exact up to 170.
pub fn factorial(n: usize) -> f64 {
    static TABLE: std::sync::OnceLock<[f64; 171]> = std::sync::OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut t = [1.0f64; 171];
        for i in 1..171 {
            t[i] = t[i - 1] * i as f64;
        }
        t
    });
    t[n.min(170)]
}

/// Binomial coefficient C(n, k) as f64.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}
