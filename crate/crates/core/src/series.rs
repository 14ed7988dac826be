//! Truncated formal power series about 0.
//!
//! A series holds exactly `order + 1` finite coefficients; arithmetic never
//! reads or writes beyond the truncation order, so products truncate at the
//! smaller order of the two operands.

use crate::error::{Error, Result};
use crate::gamma::{factorial, reciprocal_gamma};

/// Default truncation order for internally built series.
pub const DEFAULT_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedPowerSeries {
    coeffs: Vec<f64>,
    label: Option<String>,
}

/// Tail behaviour of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConvergenceStatus {
    Converged,
    ConditionallyConvergent,
    Divergent,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceFlag {
    pub status: ConvergenceStatus,
    /// Last inspected coefficient-ratio (growth rate witness).
    pub witness: Option<f64>,
}

impl TruncatedPowerSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("series needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("series coefficients must be finite".into()));
        }
        Ok(Self { coeffs, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Series built from a coefficient rule c_k = f(k), k = 0..=order.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> f64) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
            label: None,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k] + other.coeffs[k])
    }

    pub fn scale(&self, a: f64) -> Self {
        Self::from_fn(self.order(), |k| a * self.coeffs[k])
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| {
            (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum()
        })
    }

    /// Horner evaluation of the truncation, descending order.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Termwise derivative; order drops by one (a constant stays order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::from_fn(0, |_| 0.0);
        }
        Self::from_fn(self.order() - 1, |k| (k as f64 + 1.0) * self.coeffs[k + 1])
    }

    /// Antiderivative with zero constant term; order grows by one.
    pub fn antiderivative(&self) -> Self {
        Self::from_fn(self.order() + 1, |k| {
            if k == 0 {
                0.0
            } else {
                self.coeffs[k - 1] / k as f64
            }
        })
    }

    /// Inspects |c_{k+1}/c_k| over the last ceil(N/3) orders.
    ///
    /// Zero coefficients (lacunary series) are skipped; the ratio between the
    /// surviving neighbours is normalized per index gap.
    pub fn classify_tail(&self) -> ConvergenceFlag {
        let n = self.order();
        if n < 8 {
            return ConvergenceFlag {
                status: ConvergenceStatus::Undetermined,
                witness: None,
            };
        }
        let window = n.div_ceil(3);
        let start = n - window;
        let nonzero: Vec<(usize, f64)> = (start..=n)
            .filter(|&k| self.coeffs[k] != 0.0)
            .map(|k| (k, self.coeffs[k].abs()))
            .collect();
        if nonzero.len() < 2 {
            return ConvergenceFlag {
                status: ConvergenceStatus::Converged,
                witness: Some(0.0),
            };
        }
        let ratios: Vec<f64> = nonzero
            .windows(2)
            .map(|w| {
                let (i, a) = w[0];
                let (j, b) = w[1];
                (b / a).powf(1.0 / (j - i) as f64)
            })
            .collect();
        let witness = Some(*ratios.last().unwrap());
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        let status = if min > GROWTH_THRESHOLD {
            ConvergenceStatus::Divergent
        } else if max < 0.5 {
            ConvergenceStatus::Converged
        } else if max <= GROWTH_THRESHOLD {
            ConvergenceStatus::ConditionallyConvergent
        } else {
            ConvergenceStatus::Undetermined
        };
        ConvergenceFlag { status, witness }
    }
}

/// Sustained per-order growth beyond this flags divergence (factorial-type
/// tails clear it at order 40, unit-radius tails do not).
const GROWTH_THRESHOLD: f64 = 1.2;

// Named series used by the transform machinery, the CLI and the catalog.

/// exp(x) to the given order.
pub fn exp_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |k| 1.0 / factorial(k)).with_label("exp")
}

/// exp(-x) to the given order.
pub fn exp_neg_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |k| {
        (if k % 2 == 0 { 1.0 } else { -1.0 }) / factorial(k)
    })
    .with_label("exp_neg")
}

/// Geometric series 1/(1-x).
pub fn geometric_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |_| 1.0).with_label("geometric")
}

/// 0-order Tricomi function C_0: coefficients (-1)^r / (r!)^2.
pub fn tricomi_c0_series(order: usize) -> TruncatedPowerSeries {
    tricomi_series(0.0, order).with_label("tricomi_c0")
}

/// Real-order Tricomi C_nu: coefficients (-1)^r / (r! Gamma(r + nu + 1)).
pub fn tricomi_series(nu: f64, order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |r| {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sign / factorial(r) * reciprocal_gamma(r as f64 + nu + 1.0)
    })
}

/// J_0(x) as a series in x (odd coefficients vanish).
pub fn bessel_j0_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |k| {
        if k % 2 != 0 {
            return 0.0;
        }
        let r = k / 2;
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sign / (factorial(r) * factorial(r) * 4f64.powi(r as i32))
    })
    .with_label("j0")
}

/// Gaussian exp(-(x/2)^2) as a series in x.
pub fn gaussian_quarter_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |k| {
        if k % 2 != 0 {
            return 0.0;
        }
        let r = k / 2;
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sign / (factorial(r) * 4f64.powi(r as i32))
    })
    .with_label("gaussian_quarter")
}

/// Gaussian exp(-u) viewed in the compressed variable u = (x/2)^2.
pub fn exp_neg_compressed_series(order: usize) -> TruncatedPowerSeries {
    exp_neg_series(order).with_label("exp_neg_u")
}

/// Look up a named series (CLI surface).
pub fn named_series(name: &str, order: usize) -> Result<TruncatedPowerSeries> {
    match name {
        "exp" => Ok(exp_series(order)),
        "exp_neg" => Ok(exp_neg_series(order)),
        "geometric" => Ok(geometric_series(order)),
        "tricomi_c0" => Ok(tricomi_c0_series(order)),
        "tricomi_c1" => Ok(tricomi_series(1.0, order).with_label("tricomi_c1")),
        "j0" => Ok(bessel_j0_series(order)),
        "gaussian_quarter" => Ok(gaussian_quarter_series(order)),
        _ => Err(Error::UnknownFunction(name.into())),
    }
}
