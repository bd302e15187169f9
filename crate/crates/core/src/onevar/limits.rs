use serde::Serialize;

use super::{bessel_eval, gegenbauer, qultra};
use crate::error::{Error, Result};
use crate::orthopoly::macdonald_q1_limit;

/// `C_n^k(t) / C_n^k(1)` in floating point.
///
/// With `R_n = C_n^k / C_n^k(1)` the three-term recurrence becomes
/// `(n + 2k - 1) R_n = 2(n + k - 1) t R_{n-1} - (n - 1) R_{n-2}`, which stays
/// bounded by one on `[-1, 1]` and includes the Chebyshev case `k = 0`.
pub fn gegenbauer_normalized_f64(n: u32, k: u32, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let kf = k as f64;
    let (mut prev, mut cur) = (1.0f64, t);
    for m in 2..=n {
        let mf = m as f64;
        let next = (2.0 * (mf + kf - 1.0) * t * cur - (mf - 1.0) * prev) / (mf + 2.0 * kf - 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// One row of the ultraspherical-to-Bessel comparison.
#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub k: u32,
    pub lambda: f64,
    pub x: f64,
    pub big_n: u32,
    pub n: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// `C_{n_N}^k(cos(x/N)) / C_{n_N}^k(1)` against `𝒥_k(λx)` with
/// `n_N = round(λN)`. No tolerance is applied here; callers compare the gap.
pub fn limit_ultra_to_bessel(k: u32, lambda: f64, x: f64, big_n: u32) -> Result<LimitRow> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if lambda.is_nan() || lambda < 0.0 || !lambda.is_finite() || !x.is_finite() {
        return Err(Error::InvalidArgument("λ must be finite and nonnegative, x finite".into()));
    }
    let n = (lambda * big_n as f64).round() as u32;
    let lhs = gegenbauer_normalized_f64(n, k, (x / big_n as f64).cos());
    let rhs = bessel_eval(k, lambda * x, 1e-15)?;
    Ok(LimitRow {
        k,
        lambda,
        x,
        big_n,
        n,
        lhs,
        rhs,
        gap: (lhs - rhs).abs(),
    })
}

/// Coefficient-wise comparison of the q-ultraspherical polynomial at
/// `v = 1` with the Gegenbauer polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct QLimitRow {
    pub n: u32,
    pub k: u32,
    pub equal: bool,
    /// `(μ, coefficient at v = 1, Jacobi coefficient)`.
    pub coeffs: Vec<(i32, String, String)>,
}

pub fn limit_q_to_1(n: u32, k: u32) -> Result<QLimitRow> {
    let q = macdonald_q1_limit(&qultra(n, k)?)?;
    let j = gegenbauer(n, k)?.trig;
    let mut coeffs = Vec::new();
    for (mu, c) in j.coeffs() {
        coeffs.push((
            mu.coords()[0],
            crate::exactnum::format_rational(&q.coeff(mu)),
            crate::exactnum::format_rational(c),
        ));
    }
    let equal = q.coeffs() == j.coeffs();
    Ok(QLimitRow { n, k, equal, coeffs })
}
