//! The rank-one tower: Bessel-type series, the generalized exponential and
//! the one-variable Dunkl operator, Gegenbauer polynomials with their shift
//! operators, the q-ultraspherical family, and the two limit transitions.
//!
//! Everything symbolic is exact; floating point appears only in
//! [`bessel_eval`] and the numeric limit in [`limit_ultra_to_bessel`].

mod gegenbauer;
mod limits;
mod qultra;
#[cfg(test)]
mod tests;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use gegenbauer::{
    adjointness_report, cheb_to_laurent, direct_norm_ratio, gegenbauer, gegenbauer_ode_holds,
    laurent_to_cheb, norm_by_shift_recursion, norm_ratio_by_shift, s_minus, s_plus, shift_pair, transported_form,
    AdjointnessReport, Gegenbauer, ShiftPair,
};
pub use limits::{
    gegenbauer_normalized_f64, limit_q_to_1, limit_ultra_to_bessel, LimitRow, QLimitRow,
};
pub use qultra::{qdiff_apply, qdiff_check, qdiff_expected, qultra};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, ComplexRational, Rational};

/// `Σ_{j≤N} a_j u^j` with complex rational coefficients, `u = λx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ComplexRational>,
}

fn re(r: Rational) -> ComplexRational {
    Complex::new(r, Rational::zero())
}

fn i_times(c: &ComplexRational) -> ComplexRational {
    Complex::new(-c.im.clone(), c.re.clone())
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<ComplexRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least a_0");
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> ComplexRational {
        self.coeffs.get(j).cloned().unwrap_or_else(Complex::zero)
    }

    /// Keep the terms of degree at most `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// `u ↦ -u`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self::new((0..n).map(|j| &self.coeffs[j] + &other.coeffs[j]).collect())
    }

    pub fn scale(&self, s: &ComplexRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn times_i(&self) -> Self {
        Self::new(self.coeffs.iter().map(i_times).collect())
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im.is_zero())
    }

    /// Real parts as `f64`, for plotting and numeric comparison.
    pub fn real_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| crate::exactnum::rational_to_f64(&c.re))
            .collect()
    }
}

/// `(a)_j = a (a+1) … (a+j-1)`.
pub fn pochhammer(a: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| acc * (a + int(i as i64)))
}

/// `a_{2j}` of the Bessel-type series: `(-1/4)^j / ((k+½)_j j!)`.
fn bessel_even(k: u32, j: usize) -> Rational {
    let a = int(k as i64) + rat(1, 2);
    let fact: Rational = (1..=j).map(|i| int(i as i64)).product();
    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
    sign / (pochhammer(&a, j) * fact * int(4).pow(j as i32))
}

/// Coefficients of `𝒥_k(u) = Σ_j (-u²/4)^j / ((k+½)_j j!)` up to `u^N`.
pub fn bessel_coeffs(k: u32, n: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=n)
            .map(|d| {
                if d % 2 == 0 {
                    re(bessel_even(k, d / 2))
                } else {
                    Complex::zero()
                }
            })
            .collect(),
    )
}

/// `ℰ_k(u) = 𝒥_k(u) + (iu / (2k+1)) 𝒥_{k+1}(u)` up to `u^N`.
pub fn gen_exp_coeffs(k: u32, n: usize) -> TruncatedSeries {
    let scale = int(2 * k as i64 + 1).recip();
    TruncatedSeries::new(
        (0..=n)
            .map(|d| {
                if d % 2 == 0 {
                    re(bessel_even(k, d / 2))
                } else {
                    Complex::new(Rational::zero(), bessel_even(k + 1, d / 2) * &scale)
                }
            })
            .collect(),
    )
}

/// The one-variable Dunkl operator `f ↦ f' + k (f(u) - f(-u)) / u`, acting
/// on `u^j` by `(j + 2k [j odd]) u^{j-1}`. The result has order `N - 1`.
pub fn dunkl1d_apply(k: u32, s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if s.order() == 0 {
        return Err(Error::InvalidArgument(
            "series of order 0 has no derivative to keep".into(),
        ));
    }
    Ok(TruncatedSeries::new(
        (1..=s.order())
            .map(|j| {
                let f = j as i64 + if j % 2 == 1 { 2 * k as i64 } else { 0 };
                s.coeffs[j].clone() * re(int(f))
            })
            .collect(),
    ))
}

/// Summary of the exact coefficient identities of the rank-one tower at
/// one multiplicity and truncation order.
#[derive(Debug, Clone, Serialize)]
pub struct TowerReport {
    pub k: u32,
    pub order: usize,
    /// `D ℰ_k = i ℰ_k` through order `N - 1`.
    pub eigen_relation: bool,
    /// `𝒥_k(u) = ½ (ℰ_k(u) + ℰ_k(-u))`.
    pub even_part: bool,
    /// `D² 𝒥_k = -𝒥_k` through order `N - 2`.
    pub second_order: bool,
    /// `ℰ_k(0) = 𝒥_k(0) = 1`.
    pub value_at_zero: bool,
}

impl TowerReport {
    pub fn passed(&self) -> bool {
        self.eigen_relation && self.even_part && self.second_order && self.value_at_zero
    }
}

pub fn tower_report(k: u32, n: usize) -> Result<TowerReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("tower checks need order at least 2".into()));
    }
    let e = gen_exp_coeffs(k, n);
    let j = bessel_coeffs(k, n);
    let de = dunkl1d_apply(k, &e)?;
    let eigen_relation = de == e.truncate(n - 1).times_i();
    let half = re(rat(1, 2));
    let even_part = e.add(&e.reflect()).scale(&half) == j;
    let ddj = dunkl1d_apply(k, &dunkl1d_apply(k, &j)?)?;
    let second_order = ddj == j.truncate(n - 2).scale(&re(int(-1)));
    let one = re(int(1));
    let value_at_zero = e.coeff(0) == one && j.coeff(0) == one;
    Ok(TowerReport {
        k,
        order: n,
        eigen_relation,
        even_part,
        second_order,
        value_at_zero,
    })
}

/// `𝒥_k(x)` to within `tol`.
///
/// The partial sums are formed exactly over the rationals (every finite
/// `f64` is a dyadic rational). Once `x²/4 < (k+½+j)(j+1)` the terms
/// alternate and shrink, so the truncation error is at most the first
/// omitted term; summation stops when that term is below `tol / 2`. The
/// only floating-point error left is the final rounding, which must also fit
/// in the remaining `tol / 2`.
pub fn bessel_eval(k: u32, x: f64, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    if !x.is_finite() || x.abs() > MAX_BESSEL_ARG {
        return Err(Error::InvalidArgument(format!(
            "x must be finite with |x| ≤ {MAX_BESSEL_ARG}"
        )));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let xr = Rational::from_float(x).expect("finite");
    let half_tol = Rational::from_float(tol / 2.0).expect("finite");
    let z = &xr * &xr / int(4);
    let a = int(k as i64) + rat(1, 2);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut j = 0i64;
    loop {
        let denom = (&a + int(j)) * int(j + 1);
        let next = -(&term * &z) / &denom;
        if z < denom && next.abs() <= half_tol {
            break;
        }
        term = next;
        sum += &term;
        j += 1;
    }
    let out = crate::exactnum::rational_to_f64(&sum);
    if out.abs() * f64::EPSILON > tol {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol:e} is below the double-precision resolution of the result"
        )));
    }
    Ok(out)
}

/// Largest argument accepted by [`bessel_eval`]; the exact partial sums
/// grow like `e^{|x|}` in size before cancelling.
pub const MAX_BESSEL_ARG: f64 = 1000.0;
