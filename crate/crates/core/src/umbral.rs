//! Umbral weights and Borel-family coefficient transforms, plus the
//! integral-operator utilities (negative-derivative integration,
//! Gauss-Weierstrass smoothing, trinomial derivatives).
//!
//! Everything here acts on coefficient sequences; the integral definitions of
//! the same operators live only in the verification oracles.

use crate::error::{Error, Result};
use crate::gamma::{beta, factorial, gamma, reciprocal_gamma};
use crate::quad;
use crate::series::{ConvergenceFlag, TruncatedPowerSeries};
use crate::special;

type WeightFn = Box<dyn Fn(usize) -> f64 + Send + Sync>;
type FactorFn = Box<dyn Fn(usize) -> Result<f64> + Send + Sync>;

/// A vacuum rule: exponent r of the umbral operator maps to a scalar weight.
pub struct UmbralWeight {
    name: String,
    weight: WeightFn,
}

impl UmbralWeight {
    pub fn new(name: impl Into<String>, weight: impl Fn(usize) -> f64 + Send + Sync + 'static) -> Self {
        Self { name: name.into(), weight: Box::new(weight) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self, r: usize) -> f64 {
        (self.weight)(r)
    }

    /// w_r = 1 (identity).
    pub fn unit() -> Self {
        Self::new("unit", |_| 1.0)
    }

    /// c-hat vacuum: r-th power weight 1/Gamma(alpha r + 1).
    pub fn c_hat(alpha: f64) -> Self {
        Self::new(format!("c_hat({alpha})"), move |r| {
            reciprocal_gamma(alpha * r as f64 + 1.0)
        })
    }

    /// h-hat vacuum: theta_r = y^{r/2} r!/Gamma(r/2+1) |cos(r pi/2)|.
    pub fn h_hat(y: f64) -> Self {
        Self::new(format!("h_hat({y})"), move |r| special::hermite_theta(y, r))
    }

    /// m-th order h-hat vacuum: y^{r/m} r!/Gamma(r/m+1) on multiples of m.
    pub fn h_hat_m(y: f64, m: u32) -> Self {
        Self::new(format!("h_hat_m({y},{m})"), move |r| {
            special::hermite_theta_m(y, m as usize, r)
        })
    }

    /// d-hat vacuum: Gamma(nu + 1/2)/Gamma(nu + 1/2 + r).
    pub fn d_hat(nu: f64) -> Self {
        Self::new(format!("d_hat({nu})"), move |r| {
            gamma(nu + 0.5).map_or(f64::NAN, |g| g * reciprocal_gamma(nu + 0.5 + r as f64))
        })
    }

    /// Monomial selector: r! on r = m, zero elsewhere.
    pub fn p_hat(m: u32) -> Self {
        Self::new(format!("p_hat({m})"), move |r| {
            if r == m as usize {
                factorial(r)
            } else {
                0.0
            }
        })
    }

    /// H-hat vacuum: r-th power weight H_r(x, y).
    pub fn h_cap(x: f64, y: f64) -> Self {
        Self::new(format!("H_hat({x},{y})"), move |r| {
            special::hermite2(r as u32, x, y)
        })
    }
}

/// Coefficient-wise weighting: c_r -> c_r w_r, order preserved.
pub fn umbral_apply(f: &TruncatedPowerSeries, w: &UmbralWeight) -> TruncatedPowerSeries {
    // Weights are materialized once per invocation.
    let weights: Vec<f64> = (0..=f.order()).map(|r| w.weight(r)).collect();
    TruncatedPowerSeries::from_fn(f.order(), |r| f.coeff(r) * weights[r])
}

/// A Borel-family operator as a per-order multiplicative factor.
pub struct CoefficientTransform {
    name: String,
    factor: FactorFn,
    inverse: bool,
}

impl CoefficientTransform {
    /// Borel / Borel-Leroy transform: factor(r) = Gamma(gamma + alpha r)/Gamma(gamma).
    pub fn borel(alpha: f64, gamma_p: f64) -> Self {
        Self {
            name: format!("borel({alpha},{gamma_p})"),
            factor: Box::new(move |r| {
                Ok(gamma(gamma_p + alpha * r as f64)? / gamma(gamma_p)?)
            }),
            inverse: false,
        }
    }

    /// B-Borel transform: factor(r) = B(gamma + alpha r, beta + delta r)/B(gamma, beta).
    pub fn bborel(alpha: f64, gamma_p: f64, beta_p: f64, delta: f64) -> Self {
        Self {
            name: format!("bborel({alpha},{gamma_p},{beta_p},{delta})"),
            factor: Box::new(move |r| {
                let rf = r as f64;
                Ok(beta(gamma_p + alpha * rf, beta_p + delta * rf)? / beta(gamma_p, beta_p)?)
            }),
            inverse: false,
        }
    }

    pub fn inverse(mut self) -> Self {
        self.inverse = !self.inverse;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    /// Effective multiplier at order r, inversion included.
    pub fn multiplier(&self, r: usize) -> Result<f64> {
        let f = (self.factor)(r).map_err(|_| Error::BadFactor(r))?;
        if !f.is_finite() || (self.inverse && f == 0.0) {
            return Err(Error::BadFactor(r));
        }
        Ok(if self.inverse { 1.0 / f } else { f })
    }
}

/// Applies a transform and classifies the tail of the result.
pub fn apply_transform(
    f: &TruncatedPowerSeries,
    t: &CoefficientTransform,
) -> Result<(TruncatedPowerSeries, ConvergenceFlag)> {
    let mut coeffs = Vec::with_capacity(f.order() + 1);
    for r in 0..=f.order() {
        coeffs.push(f.coeff(r) * t.multiplier(r)?);
    }
    let out = TruncatedPowerSeries::new(coeffs)?;
    let flag = out.classify_tail();
    Ok((out, flag))
}

/// Integral-scaling law of the alpha-order Borel transform: if the whole-line
/// integral of f is k, the transformed function integrates to k Gamma(1 - alpha).
pub fn borel_integral_scaling(k: f64, alpha: f64) -> Result<f64> {
    if alpha.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "borel_integral_scaling requires |alpha| < 1 (got {alpha})"
        )));
    }
    Ok(k * gamma(1.0 - alpha)?)
}

/// Negative-derivative antiderivative: F(x) = sum_{s=0}^{S-1} (-1)^s
/// x^{s+1}/(s+1)! f^(s)(x), with `derivs(s)` supplying f^(s) at x.
pub fn negative_derivative_integrate(
    derivs: impl Fn(usize) -> f64,
    x: f64,
    terms: usize,
) -> f64 {
    let mut sum = 0.0;
    let mut pow = x;
    for s in 0..terms.max(1) {
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * pow / factorial(s + 1) * derivs(s);
        pow *= x;
    }
    sum
}

/// Gauss-Weierstrass transform (1/(2 sqrt(pi y))) int e^{-(xi-x)^2/(4y)} f(xi) d xi,
/// realizing e^{y d_x^2}; quadrature over the effective window x +- 12 sqrt(2y).
pub fn gauss_weierstrass(f: impl Fn(f64) -> f64, x: f64, y: f64) -> Result<f64> {
    if y <= 0.0 {
        return Err(Error::Domain(format!("gauss_weierstrass requires y > 0 (got {y})")));
    }
    let half_window = 12.0 * (2.0 * y).sqrt();
    let norm = 1.0 / (2.0 * (std::f64::consts::PI * y).sqrt());
    let r = quad::integrate_finite(
        |xi| norm * (-(xi - x) * (xi - x) / (4.0 * y)).exp() * f(xi),
        x - half_window,
        x + half_window,
        1e-11,
    );
    r.require("gauss_weierstrass")
}

/// m-th derivative of (a x^2 + b x + c)^n as the closed double-factor sum.
pub fn trinomial_derivative(m: u32, n: u32, a: f64, b: f64, c: f64, x: f64) -> f64 {
    let (m, n) = (m as usize, n as usize);
    let base = a * x * x + b * x + c;
    let lin = 2.0 * a * x + b;
    let mut sum = 0.0;
    for r in 0..=m / 2 {
        let k = n as i64 - m as i64 + r as i64;
        if k < 0 {
            continue; // 1/(n-m+r)! vanishes at negative integers
        }
        sum += lin.powi((m - 2 * r) as i32) * a.powi(r as i32)
            / (factorial(m - 2 * r) * factorial(r))
            * factorial(n) / factorial(k as usize)
            * base.powi(k as i32);
    }
    factorial(m) * sum
}

/// Negative umbral power of the two-variable Hermite umbra with arguments
/// (x, -y): (1/Gamma(mu)) int_0^inf e^{-x s - y s^2} s^{mu-1} ds.
pub fn hermite_umbral_negative_power(x: f64, y: f64, mu: f64) -> Result<f64> {
    if mu <= 0.0 || y <= 0.0 {
        return Err(Error::Domain(format!(
            "hermite_umbral_negative_power requires mu > 0 and y > 0 (got {mu}, {y})"
        )));
    }
    let g = gamma(mu)?;
    let r = if mu >= 1.0 {
        quad::integrate_halfline_decaying(
            |s| (-x * s - y * s * s).exp() * s.powf(mu - 1.0),
            1e-10,
        )
    } else {
        // s = u^{1/mu} removes the s^{mu-1} endpoint singularity.
        quad::integrate_halfline_decaying(
            |u| {
                let s = u.powf(1.0 / mu);
                (-x * s - y * s * s).exp() / mu
            },
            1e-10,
        )
    };
    Ok(r.require("hermite_umbral_negative_power")? / g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::finite_difference;
    use crate::series;
    use crate::series::ConvergenceStatus;
    use crate::special::{bessel_j, hermite2};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn umbral_apply_unit_and_selector() {
        let f = series::exp_series(12);
        let id = umbral_apply(&f, &UmbralWeight::unit());
        assert_eq!(id.coeffs(), f.coeffs());
        // Monomial selector on the exponential series leaves x^3 alone.
        let sel = umbral_apply(&f, &UmbralWeight::p_hat(3));
        for k in 0..=12 {
            let expect = if k == 3 { 1.0 } else { 0.0 };
            assert_eq!(sel.coeff(k), expect);
        }
    }

    #[test]
    fn c_hat_gaussian_gives_j0() {
        // Weighted Gaussian in the compressed variable u = (x/2)^2, evaluated
        // pointwise against the direct series.
        let f = series::exp_neg_compressed_series(40);
        let g = umbral_apply(&f, &UmbralWeight::c_hat(1.0));
        for i in 0..=30 {
            let x = 6.0 * i as f64 / 30.0;
            let u = (x / 2.0) * (x / 2.0);
            assert!((g.eval(u) - bessel_j(0, x)).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn borel_tricomi_chain() {
        let c0 = series::tricomi_c0_series(30);
        let b = CoefficientTransform::borel(1.0, 1.0);
        let (e, flag) = apply_transform(&c0, &b).unwrap();
        for r in 0..=30 {
            let expect = (if r % 2 == 0 { 1.0 } else { -1.0 }) / factorial(r);
            assert!((e.coeff(r) - expect).abs() < 1e-15);
        }
        assert_eq!(flag.status, ConvergenceStatus::Converged);

        let (geo, flag) = apply_transform(&e, &b).unwrap();
        for r in 0..=30 {
            let expect = if r % 2 == 0 { 1.0 } else { -1.0 };
            assert!((geo.coeff(r) - expect).abs() < 1e-13);
        }
        assert_eq!(flag.status, ConvergenceStatus::ConditionallyConvergent);

        let (div, flag) = apply_transform(&geo, &b).unwrap();
        assert!((div.coeff(5).abs() - factorial(5)).abs() < 1e-10);
        assert_eq!(flag.status, ConvergenceStatus::Divergent);
    }

    #[test]
    fn borel_half_on_j0_gives_gaussian() {
        let j0 = series::bessel_j0_series(40);
        let b = CoefficientTransform::borel(0.5, 1.0);
        let (g, flag) = apply_transform(&j0, &b).unwrap();
        let expect = series::gaussian_quarter_series(40);
        for k in 0..=40 {
            assert!((g.coeff(k) - expect.coeff(k)).abs() < 1e-15, "k={k}");
        }
        assert_eq!(flag.status, ConvergenceStatus::Converged);
    }

    #[test]
    fn borel_leroy_on_tricomi() {
        // The (gamma+1)-indexed transform of C_gamma, checked termwise up to
        // the constant Gamma(gamma+1) carried by the normalized factor.
        let gamma_p = 0.75f64;
        let alpha = 1.0;
        let c = series::tricomi_series(gamma_p, 25);
        let t = CoefficientTransform::borel(alpha, gamma_p + 1.0);
        let (out, _) = apply_transform(&c, &t).unwrap();
        let scale = gamma(gamma_p + 1.0).unwrap();
        for r in 0..=25usize {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            let expect = sign * gamma(alpha * r as f64 + gamma_p + 1.0).unwrap()
                / factorial(r)
                * reciprocal_gamma(r as f64 + gamma_p + 1.0);
            assert!(
                (out.coeff(r) * scale - expect).abs() < 1e-12 * expect.abs().max(1.0),
                "r={r}"
            );
        }
    }

    #[test]
    fn bborel_raises_wright_index() {
        // W_(a,0) -> W_(a,b) coefficients, up to the Gamma(b+1) constant in the
        // normalized Beta factor.
        let (alpha, beta_p) = (0.5f64, 0.75f64);
        let w0 = TruncatedPowerSeries::from_fn(25, |r| {
            reciprocal_gamma(alpha * r as f64 + 1.0) / factorial(r)
        });
        let t = CoefficientTransform::bborel(alpha, 1.0, beta_p, 0.0);
        let (out, _) = apply_transform(&w0, &t).unwrap();
        let scale = gamma(beta_p + 1.0).unwrap();
        for r in 0..=25usize {
            let expect = reciprocal_gamma(alpha * r as f64 + beta_p + 1.0) / factorial(r);
            assert!(
                (out.coeff(r) / scale - expect).abs() < 1e-12 * expect.abs().max(1.0),
                "r={r}"
            );
        }
    }

    #[test]
    fn scaling_law_cases() {
        assert_eq!(borel_integral_scaling(3.25, 0.0).unwrap(), 3.25);
        let v = borel_integral_scaling(PI.sqrt(), 0.5).unwrap();
        assert!((v - PI).abs() < 1e-12);
        assert!(borel_integral_scaling(1.0, 1.0).is_err());
    }

    #[test]
    fn ndo_cases() {
        // f = 1: the series collapses to x.
        assert_eq!(negative_derivative_integrate(|s| if s == 0 { 1.0 } else { 0.0 }, 2.5, 10), 2.5);
        // f = e^x at x = 1.
        let e = 1f64.exp();
        let v = negative_derivative_integrate(|_| e, 1.0, 30);
        assert!((v - (e - 1.0)).abs() < 1e-12);
        // f = H_4(x, y): against the polynomial antiderivative.
        let (x, y, n) = (0.9, 0.3, 4u32);
        let v = negative_derivative_integrate(
            |s| {
                if s > n as usize {
                    0.0
                } else {
                    factorial(n as usize) / factorial(n as usize - s)
                        * hermite2(n - s as u32, x, y)
                }
            },
            x,
            8,
        );
        // Antiderivative of H_4 = x^4 + 12x^2 y + 12 y^2 vanishing at 0.
        let truth = x.powi(5) / 5.0 + 4.0 * x.powi(3) * y + 12.0 * y * y * x;
        assert!((v - truth).abs() < 1e-12, "{v} vs {truth}");
    }

    #[test]
    fn ndo_differentiates_back_to_cos() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let f = |s: usize, x: f64| (x + s as f64 * PI / 2.0).cos();
        for _ in 0..10 {
            let x: f64 = rng.gen_range(0.2..2.0);
            let big_f = |x: f64| negative_derivative_integrate(|s| f(s, x), x, 40);
            let d = finite_difference(big_f, x, 1, 0.0);
            assert!((d - x.cos()).abs() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn gauss_weierstrass_cases() {
        assert!((gauss_weierstrass(|_| 1.0, 0.3, 0.7).unwrap() - 1.0).abs() < 1e-9);
        let (x, y) = (0.5, 0.2);
        let v = gauss_weierstrass(|xi| xi.powi(3), x, y).unwrap();
        assert!((v - hermite2(3, x, y)).abs() < 1e-8);
        // Gaussian image: e^{y d_x^2} e^{x^2 t} at t=0.5, y=0.1, x=1.
        let (t, y, x) = (0.5, 0.1, 1.0);
        let v = gauss_weierstrass(|xi| (xi * xi * t).exp(), x, y).unwrap();
        let truth = (1.0 - 4.0 * y * t).powf(-0.5) * (x * x * t / (1.0 - 4.0 * y * t)).exp();
        assert!((v - truth).abs() < 1e-8);
        assert!(gauss_weierstrass(|_| 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn trinomial_cases() {
        let (a, b, c, x) = (1.3, -0.7, 0.4, 0.6);
        let base = a * x * x + b * x + c;
        assert!((trinomial_derivative(0, 3, a, b, c, x) - base.powi(3)).abs() < 1e-12);
        assert!((trinomial_derivative(2, 1, 1.0, 0.0, 0.0, 5.0) - 2.0).abs() < 1e-13);
        // First derivative sanity: n (2ax+b) (..)^{n-1}.
        let d = trinomial_derivative(1, 4, a, b, c, x);
        assert!((d - 4.0 * (2.0 * a * x + b) * base.powi(3)).abs() < 1e-11);
    }

    #[test]
    fn negative_power_cases() {
        let v = hermite_umbral_negative_power(2.0, 1e-8, 1.0).unwrap();
        assert!((v - 0.5).abs() < 1e-6);
        let v = hermite_umbral_negative_power(1.0, 1e-8, 2.0).unwrap();
        assert!((v - 1.0).abs() < 1e-6);
        let lhs = crate::special::quartic_gaussian_integral(1.0, 1.0).unwrap();
        let rhs = PI.sqrt() * hermite_umbral_negative_power(1.0, 1.0, 0.5).unwrap();
        assert!((lhs - rhs).abs() < 1e-7, "{lhs} vs {rhs}");
        assert!(hermite_umbral_negative_power(1.0, -1.0, 0.5).is_err());
    }

    #[test]
    fn inverse_with_zero_factor_errors() {
        // Non-positive gamma hits a Gamma pole in the factor.
        let t = CoefficientTransform::borel(1.0, -2.0);
        let f = series::exp_series(10);
        assert!(matches!(apply_transform(&f, &t), Err(Error::BadFactor(_))));
    }

    fn arb_series25() -> impl Strategy<Value = TruncatedPowerSeries> {
        proptest::collection::vec(-3.0f64..3.0, 26)
            .prop_map(|v| TruncatedPowerSeries::new(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn borel_round_trip(f in arb_series25(), ai in 0..2usize, gi in 0..2usize) {
            let alpha = [0.5, 1.0][ai];
            let gamma_p = [1.0, 2.0][gi];
            let fwd = CoefficientTransform::borel(alpha, gamma_p);
            let inv = CoefficientTransform::borel(alpha, gamma_p).inverse();
            let (mid, _) = apply_transform(&f, &fwd).unwrap();
            let (back, _) = apply_transform(&mid, &inv).unwrap();
            for k in 0..=25 {
                prop_assert!((back.coeff(k) - f.coeff(k)).abs() <= 1e-12 * f.coeff(k).abs().max(1.0));
            }
        }
    }
}
