//! Independent numerical oracles: adaptive quadrature, semi-infinite
//! integrators and finite-difference derivatives.
//!
//! These exist to cross-check closed forms; nothing in the operator or
//! special-function paths depends on them being fast.

use crate::error::{Error, Result};

/// Hard cap on integrand evaluations per top-level integral.
const EVAL_CAP: u64 = 2_000_000;

#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

impl QuadratureResult {
    /// Converged value, or an error carrying the context string.
    pub fn require(self, what: &str) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NonConverged(format!(
                "{what}: err_est={:.3e} after {} evaluations",
                self.abs_err_estimate, self.evaluations
            )))
        }
    }
}

// 15-point Kronrod abscissae (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One Gauss-Kronrod 7-15 panel: (kronrod value, |K15 - G7| error estimate).
fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64, evals: &mut u64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    *evals += 15;
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = half * XGK[j];
        let fsum = f(center - x) + f(center + x);
        kron += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    ((kron * half), ((kron - gauss) * half).abs())
}

/// Adaptive bisection over [a, b] with the embedded G7/K15 error estimate.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> QuadratureResult {
    let f: &dyn Fn(f64) -> f64 = &f;
    let mut evals: u64 = 0;
    // Worklist of (a, b, value, err) panels, refined worst-first.
    let (v, e) = gk15(f, a, b, &mut evals);
    let mut panels = vec![(a, b, v, e)];
    // Panels too narrow to split retain their value and error here.
    let mut stuck_value = 0.0;
    let mut stuck_err = 0.0;
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum::<f64>() + stuck_err;
        if total_err <= tol || evals >= EVAL_CAP || panels.is_empty() {
            break;
        }
        // Split the panel with the largest error.
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .unwrap();
        let (pa, pb, pv, pe) = panels.swap_remove(idx);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            stuck_value += pv;
            stuck_err += pe;
            continue;
        }
        let (v1, e1) = gk15(f, pa, mid, &mut evals);
        let (v2, e2) = gk15(f, mid, pb, &mut evals);
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }
    let value: f64 = panels.iter().map(|p| p.2).sum::<f64>() + stuck_value;
    let err: f64 = panels.iter().map(|p| p.3).sum::<f64>() + stuck_err;
    QuadratureResult {
        value,
        abs_err_estimate: err,
        evaluations: evals,
        converged: err <= tol,
    }
}

/// Integral over [0, inf) of an eventually-decaying integrand, via the
/// substitution x = t/(1-t) mapped onto [0, 1).
pub fn integrate_halfline_decaying(f: impl Fn(f64) -> f64, tol: f64) -> QuadratureResult {
    let g = |t: f64| {
        let om = 1.0 - t;
        let x = t / om;
        let v = f(x) / (om * om);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate_finite(g, 0.0, 1.0 - 1e-9, tol)
}

/// Integral over the whole real line of a decaying integrand.
pub fn integrate_real_line(f: impl Fn(f64) -> f64, tol: f64) -> QuadratureResult {
    let right = integrate_halfline_decaying(|x| f(x), tol / 2.0);
    let left = integrate_halfline_decaying(|x| f(-x), tol / 2.0);
    QuadratureResult {
        value: left.value + right.value,
        abs_err_estimate: left.abs_err_estimate + right.abs_err_estimate,
        evaluations: left.evaluations + right.evaluations,
        converged: left.converged && right.converged,
    }
}

/// Maximum number of sign-change lobes summed before acceleration.
const MAX_LOBES: usize = 40;

/// Conditionally convergent oscillatory integral over [start, inf).
///
/// Sign changes of the integrand are bracketed by scanning and refined by
/// bisection; the alternating lobe series is accelerated by an iterated
/// Euler transformation.
pub fn integrate_halfline_oscillatory_from(
    f: impl Fn(f64) -> f64,
    start: f64,
    scan_step: f64,
    tol: f64,
) -> QuadratureResult {
    let f: &dyn Fn(f64) -> f64 = &f;
    let mut evals: u64 = 0;
    let mut err_acc = 0.0;

    // Locate up to MAX_LOBES + 1 sign changes past `start`.
    let mut zeros = Vec::with_capacity(MAX_LOBES + 1);
    let mut x = start;
    let mut fx = f(x);
    evals += 1;
    // Step off an exact zero at the left endpoint.
    while fx == 0.0 && evals < 64 {
        x += scan_step * 1e-3;
        fx = f(x);
        evals += 1;
    }
    while zeros.len() <= MAX_LOBES && evals < EVAL_CAP / 2 {
        let x2 = x + scan_step;
        let fx2 = f(x2);
        evals += 1;
        if fx.signum() != fx2.signum() {
            // Bisection on the sign.
            let (mut lo, mut hi, mut flo) = (x, x2, fx);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                evals += 1;
                if fm == 0.0 {
                    lo = mid;
                    break;
                }
                if flo.signum() == fm.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if hi - lo < 1e-13 * hi.abs().max(1.0) {
                    break;
                }
            }
            zeros.push(0.5 * (lo + hi));
        }
        x = x2;
        fx = fx2;
    }
    if zeros.len() < 6 {
        return QuadratureResult {
            value: f64::NAN,
            abs_err_estimate: f64::INFINITY,
            evaluations: evals,
            converged: false,
        };
    }

    // Products of a fast oscillation with a slowly oscillating kernel also
    // change sign at the kernel's zeros, which splinters some lobes and
    // defeats the acceleration. The located zeros therefore only calibrate
    // the dominant half-period (their median spacing); the accelerated
    // segments are equally spaced at that period so their areas form a
    // smoothly modulated alternating sequence.
    let mut gaps: Vec<f64> = zeros.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let period = gaps[gaps.len() / 2];

    let head = integrate_finite(f, start, zeros[0], tol / 4.0);
    evals += head.evaluations;
    err_acc += head.abs_err_estimate;
    let mut lobes = Vec::with_capacity(MAX_LOBES);
    for k in 0..MAX_LOBES {
        let a = zeros[0] + k as f64 * period;
        let r = integrate_finite(f, a, a + period, tol / 4.0);
        evals += r.evaluations;
        err_acc += r.abs_err_estimate / (k as f64 + 1.0);
        lobes.push(r.value);
    }

    // Iterated Euler transformation on the partial-sum sequence; the spread
    // between the last two diagonal entries witnesses the remaining error.
    let mut partial: Vec<f64> = Vec::with_capacity(lobes.len());
    let mut s = 0.0;
    for l in &lobes {
        s += l;
        partial.push(s);
    }
    let (last, accel_err) = euler_diagonal(&partial);
    let err = err_acc + accel_err.max(1e-16);
    QuadratureResult {
        value: head.value + last,
        abs_err_estimate: err,
        evaluations: evals,
        converged: err <= tol && evals < EVAL_CAP,
    }
}

/// Iterated Euler (pairwise averaging) of a partial-sum sequence down to the
/// full diagonal. Returns the diagonal value and the spread between the last
/// two averaging levels as an error witness.
fn euler_diagonal(partial: &[f64]) -> (f64, f64) {
    let mut row: Vec<f64> = partial.to_vec();
    let mut last = *row.last().unwrap();
    let mut prev = last;
    while row.len() > 1 {
        row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        prev = last;
        last = *row.last().unwrap();
    }
    (last, (last - prev).abs())
}

/// Oscillatory integral over [0, inf) with the default scan step.
pub fn integrate_halfline_oscillatory(f: impl Fn(f64) -> f64, tol: f64) -> QuadratureResult {
    integrate_halfline_oscillatory_from(f, 0.0, 0.5, tol)
}

/// Central-difference derivative of the given order (1..=4), Richardson
/// extrapolated once. Step defaults per the tolerance budget when h <= 0.
pub fn finite_difference(f: impl Fn(f64) -> f64, x: f64, order: u32, h: f64) -> f64 {
    let f: &dyn Fn(f64) -> f64 = &f;
    let h = if h > 0.0 {
        h
    } else if order <= 2 {
        1e-2 * x.abs().max(1.0)
    } else {
        5e-2
    };
    let stencil = |h: f64| -> f64 {
        match order {
            0 => f(x),
            1 => (f(x + h) - f(x - h)) / (2.0 * h),
            2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
            3 => (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h))
                / (2.0 * h * h * h),
            4 => {
                (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h))
                    / (h * h * h * h)
            }
            _ => panic!("finite_difference supports orders 0..=4"),
        }
    };
    let d1 = stencil(h);
    let d2 = stencil(h / 2.0);
    // One Richardson step: the central stencils above are O(h^2) accurate.
    (4.0 * d2 - d1) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn finite_basics() {
        let r = integrate_finite(|_| 1.0, 0.0, 1.0, 1e-12);
        assert!((r.value - 1.0).abs() < 1e-13);
        let r = integrate_finite(|x| x * x, 0.0, 1.0, 1e-12);
        assert!((r.value - 1.0 / 3.0).abs() < 1e-13);
        let r = integrate_finite(f64::sin, 0.0, PI, 1e-13);
        assert!((r.value - 2.0).abs() < 1e-12);
        assert!(r.converged);
    }

    #[test]
    fn error_estimate_bounds_true_error_for_polynomials() {
        for deg in 0..=10 {
            let f = |x: f64| x.powi(deg);
            let r = integrate_finite(f, 0.0, 1.0, 1e-10);
            let truth = 1.0 / (deg as f64 + 1.0);
            assert!(
                (r.value - truth).abs() <= r.abs_err_estimate + 1e-15,
                "deg {deg}: err {} est {}",
                (r.value - truth).abs(),
                r.abs_err_estimate
            );
        }
    }

    #[test]
    fn halfline_decaying_cases() {
        let r = integrate_halfline_decaying(|x| (-x).exp(), 1e-10);
        assert!((r.value - 1.0).abs() < 1e-9);
        let r = integrate_halfline_decaying(|x| (-x * x).exp(), 1e-10);
        assert!((r.value - PI.sqrt() / 2.0).abs() < 1e-9);
    }

    #[test]
    fn oscillatory_sinc_calibration() {
        let r = integrate_halfline_oscillatory(|x| if x == 0.0 { 1.0 } else { x.sin() / x }, 1e-6);
        assert!(r.converged, "est {}", r.abs_err_estimate);
        assert!((r.value - PI / 2.0).abs() < 1e-6, "value {}", r.value);
    }

    #[test]
    fn derivative_cases() {
        assert!((finite_difference(|x| x * x, 3.0, 1, 0.0) - 6.0).abs() < 1e-9);
        assert!(finite_difference(f64::sin, 0.0, 2, 0.0).abs() < 1e-9);
        assert!((finite_difference(f64::exp, 0.0, 4, 0.0) - 1.0).abs() < 1e-6);
    }
}
