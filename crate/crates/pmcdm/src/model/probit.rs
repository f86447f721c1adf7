//! Standard-normal CDF and quantile (probit) functions.
//!
//! The quantile uses Wichura's AS 241 rational approximations (the PPND16
//! variant), accurate to about 1e-15 over the full open interval, including
//! the extreme tails needed by the truncated-normal sampler. The CDF is
//! evaluated through the complementary error function so that upper-tail
//! values do not cancel.

use statrs::function::erf::erfc;

/// Probit inputs are clamped to `[PROBIT_CLAMP, 1 - PROBIT_CLAMP]` so that
/// boundary mastery scores map to large finite values instead of infinities.
pub const PROBIT_CLAMP: f64 = 1e-12;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Standard-normal CDF.
pub fn norm_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / SQRT_2)
}

/// Standard-normal quantile of `u`, after clamping `u` into
/// `[PROBIT_CLAMP, 1 - PROBIT_CLAMP]`.
pub fn probit(u: f64) -> f64 {
    norm_quantile(u.clamp(PROBIT_CLAMP, 1.0 - PROBIT_CLAMP))
}

/// Inverse of [`probit`]: the standard-normal CDF.
pub fn probit_inv(x: f64) -> f64 {
    norm_cdf(x)
}

/// Unclamped standard-normal quantile (AS 241). Requires `p` in `(0,1)`.
pub(crate) fn norm_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0, "norm_quantile needs p in (0,1), got {p}");
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * poly(&A, r) / poly(&B, r);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        let r = r - 1.6;
        poly(&C, r) / poly(&D, r)
    } else {
        let r = r - 5.0;
        poly(&E, r) / poly(&F, r)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

fn poly(coeffs: &[f64; 8], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

const A: [f64; 8] = [
    3.3871328727963666080e0,
    1.3314166789178437745e2,
    1.9715909503065514427e3,
    1.3731693765509461125e4,
    4.5921953931549871457e4,
    6.7265770927008700853e4,
    3.3430575583588128105e4,
    2.5090809287301226727e3,
];

const B: [f64; 8] = [
    1.0,
    4.2313330701600911252e1,
    6.8718700749205790830e2,
    5.3941960214247511077e3,
    2.1213794301586595867e4,
    3.9307895800092710610e4,
    2.8729085735721942674e4,
    5.2264952788528545610e3,
];

const C: [f64; 8] = [
    1.42343711074968357734e0,
    4.6303378461565452959e0,
    5.7694972214606914055e0,
    3.64784832476320460504e0,
    1.27045825245236838258e0,
    2.4178072517745061177e-1,
    2.27238449892691845833e-2,
    7.7454501427834140764e-4,
];

const D: [f64; 8] = [
    1.0,
    2.05319162663775882187e0,
    1.6763848301838038494e0,
    6.8976733498510000455e-1,
    1.4810397642748007459e-1,
    1.51986665636164571966e-2,
    5.475938084995344946e-4,
    1.05075007164441684324e-9,
];

const E: [f64; 8] = [
    6.6579046435011037772e0,
    5.4637849111641143699e0,
    1.7848265399172913358e0,
    2.9656057182850489123e-1,
    2.6532189526576123093e-2,
    1.2426609473880784386e-3,
    2.71155556874348757815e-5,
    2.01033439929228813265e-7,
];

const F: [f64; 8] = [
    1.0,
    5.9983220655588793769e-1,
    1.3692988092273580531e-1,
    1.48753612908506148525e-2,
    7.868691311456132591e-4,
    1.8463183175100546818e-5,
    1.4215117583164458887e-7,
    2.04426310338993978564e-15,
];
