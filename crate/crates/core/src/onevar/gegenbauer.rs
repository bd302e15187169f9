use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, ChebPoly, Rational};
use crate::laurent::LaurentPoly;
use crate::orthopoly::{jacobi, weight_delta_k, OrthoPoly};
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

fn a1() -> RootSystem {
    RootSystem::parse("A1").expect("A1 is supported")
}

/// Gegenbauer polynomial in two forms: the A1 Jacobi polynomial
/// `Σ c_j m_j` in `z = e^{iθ}`, and the same function as a polynomial in
/// `x = cos θ`. The leading orbit-sum coefficient is one.
#[derive(Debug, Clone)]
pub struct Gegenbauer {
    pub n: u32,
    pub k: u32,
    pub trig: OrthoPoly<Rational>,
    pub cheb: ChebPoly,
}

fn chebyshev_t(n: usize) -> Vec<ChebPoly> {
    let x = ChebPoly::var();
    let two_x = x.scale(&int(2));
    let mut t = vec![ChebPoly::one(), x];
    while t.len() <= n {
        let l = t.len();
        let next = &(&two_x * &t[l - 1]) - &t[l - 2];
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

/// Rewrite an invariant A1 Laurent polynomial through
/// `z^j + z^{-j} = 2 T_j(x)`.
pub fn laurent_to_cheb(f: &LaurentPoly<Rational>) -> Result<ChebPoly> {
    if f.rank() != 1 {
        return Err(Error::RankMismatch { expected: 1, got: f.rank() });
    }
    let top = f.max_exponent() as usize;
    let t = chebyshev_t(top);
    let mut out = ChebPoly::zero();
    for (w, c) in f.terms() {
        let j = w.coords()[0];
        if f.coeff(&Weight::new(&[-j])) != *c {
            return Err(Error::NotInvariant);
        }
        // Each pair z^j, z^{-j} contributes c T_j; z^0 contributes c.
        out = &out + &t[j.unsigned_abs() as usize].scale(c);
    }
    Ok(out)
}

/// `x ↦ (z + z^{-1}) / 2`.
pub fn cheb_to_laurent(p: &ChebPoly) -> LaurentPoly<Rational> {
    let half = rat(1, 2);
    let x = LaurentPoly::from_terms(
        1,
        [(Weight::new(&[1]), half.clone()), (Weight::new(&[-1]), half)],
    );
    let mut out = LaurentPoly::zero(1);
    let mut power = LaurentPoly::one(1);
    for (i, c) in p.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.mul(&x);
        }
        if !c.is_zero() {
            out = out.add(&power.scale(c));
        }
    }
    out
}

pub fn gegenbauer(n: u32, k: u32) -> Result<Gegenbauer> {
    let rs = a1();
    let trig = jacobi(&rs, &Weight::new(&[n as i32]), &MultiplicityFn::uniform(k))?;
    let cheb = laurent_to_cheb(&trig.to_laurent(&rs))?;
    Ok(Gegenbauer { n, k, trig, cheb })
}

/// `<f, g>_k = CT(f g δ_k) / 4^k` with `x = (z + z^{-1})/2`, which equals
/// `(1/π) ∫_{-1}^{1} f g (1 - x²)^{k - ½} dx`.
pub fn transported_form(f: &ChebPoly, g: &ChebPoly, k: u32) -> Rational {
    let delta = weight_delta_k(&a1(), &MultiplicityFn::uniform(k));
    let ct = cheb_to_laurent(f).ct_pairing(&cheb_to_laurent(g), &delta);
    ct / int(4).pow(k as i32)
}

/// `(1 - x²) y'' - (2k+1) x y' + n(n+2k) y = 0` as a polynomial identity.
pub fn gegenbauer_ode_holds(g: &Gegenbauer) -> bool {
    let y = &g.cheb;
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let x = ChebPoly::var();
    let one_minus_x2 = &ChebPoly::one() - &(&x * &x);
    let n = int(g.n as i64);
    let lhs = &(&(&one_minus_x2 * &d2) - &(&x * &d1).scale(&int(2 * g.k as i64 + 1)))
        + &y.scale(&(&n * (&n + int(2 * g.k as i64))));
    lhs.is_zero()
}

/// `S₊ = d/dx`, lowering `C_n^k` to a multiple of `C_{n-1}^{k+1}`.
pub fn s_plus(f: &ChebPoly) -> ChebPoly {
    f.derivative()
}

/// `S₋ = (1 - x²) d/dx - (2k+1) x`, raising `C_{n-1}^{k+1}` to a multiple
/// of `C_n^k`.
pub fn s_minus(g: &ChebPoly, k: u32) -> ChebPoly {
    let x = ChebPoly::var();
    let one_minus_x2 = &ChebPoly::one() - &(&x * &x);
    &(&one_minus_x2 * &g.derivative()) - &(&x * g).scale(&int(2 * k as i64 + 1))
}

/// The scalar `c` with `f = c · target`.
fn ratio(f: &ChebPoly, target: &ChebPoly) -> Option<Rational> {
    let d = target.degree()?;
    let c = f.coeff(d) / target.coeff(d);
    (target.scale(&c) == *f).then_some(c)
}

/// `S₊ C_n^k = a C_{n-1}^{k+1}` and `S₋ C_{n-1}^{k+1} = b C_n^k`.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftPair {
    pub n: u32,
    pub k: u32,
    #[serde(with = "crate::exactnum::rational_str")]
    pub a: Rational,
    #[serde(with = "crate::exactnum::rational_str")]
    pub b: Rational,
}

pub fn shift_pair(n: u32, k: u32) -> Result<ShiftPair> {
    if n == 0 {
        return Err(Error::InvalidArgument("shift operators need n ≥ 1".into()));
    }
    let upper = gegenbauer(n, k)?;
    let lower = gegenbauer(n - 1, k + 1)?;
    let a = ratio(&s_plus(&upper.cheb), &lower.cheb).ok_or_else(|| {
        Error::NotProportional(format!("d/dx C_{n}^{k} is not a multiple of C_{}^{}", n - 1, k + 1))
    })?;
    let b = ratio(&s_minus(&lower.cheb, k), &upper.cheb).ok_or_else(|| {
        Error::NotProportional(format!("S₋ C_{}^{} is not a multiple of C_{n}^{k}", n - 1, k + 1))
    })?;
    Ok(ShiftPair { n, k, a, b })
}

/// `<C_n^k, C_n^k>_k / <C_{n-1}^{k+1}, C_{n-1}^{k+1}>_{k+1} = -a/b`, from
/// `a <C_{n-1}^{k+1}, C_{n-1}^{k+1}>_{k+1} = <S₊C_n^k, C_{n-1}^{k+1}>_{k+1}
///  = -<C_n^k, S₋C_{n-1}^{k+1}>_k = -b <C_n^k, C_n^k>_k`.
pub fn norm_ratio_by_shift(n: u32, k: u32) -> Result<Rational> {
    let sp = shift_pair(n, k)?;
    Ok(-(sp.a / sp.b))
}

/// The same ratio from the two constant-term norms.
pub fn direct_norm_ratio(n: u32, k: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("shift operators need n ≥ 1".into()));
    }
    let upper = gegenbauer(n, k)?.cheb;
    let lower = gegenbauer(n - 1, k + 1)?.cheb;
    Ok(transported_form(&upper, &upper, k) / transported_form(&lower, &lower, k + 1))
}

/// `<P_n, P_n>` for the A1 Jacobi polynomial under `CT(f bar(g) δ_k)`,
/// obtained without any Gram solve: the shift ratios walk `(n, k)` down to
/// `(0, k + n)`, where the norm is `CT(δ_{k+n}) = binom(2(k+n), k+n)`, and
/// the factors `4^k` convert between the transported and constant-term forms.
pub fn norm_by_shift_recursion(n: u32, k: u32) -> Result<Rational> {
    let top = k + n;
    let ct: Rational = (1..=top as i64)
        .map(|i| int(top as i64 + i) / int(i))
        .product();
    let mut transported = ct / int(4).pow(top as i32);
    for i in 0..n {
        transported *= norm_ratio_by_shift(n - i, k + i)?;
    }
    Ok(transported * int(4).pow(k as i32))
}

#[derive(Debug, Clone, Serialize)]
pub struct AdjointnessReport {
    pub k: u32,
    pub max_degree: u32,
    pub checks: usize,
    pub failures: usize,
}

/// `<S₊f, g>_{k+1} = -<f, S₋g>_k` on all pairs of monomials `x^i, x^j`
/// with `i, j ≤ max_degree`.
pub fn adjointness_report(k: u32, max_degree: u32) -> AdjointnessReport {
    let monos: Vec<ChebPoly> = (0..=max_degree as usize)
        .map(|i| ChebPoly::monomial(i, Rational::one()))
        .collect();
    let mut checks = 0;
    let mut failures = 0;
    for f in &monos {
        for g in &monos {
            checks += 1;
            let lhs = transported_form(&s_plus(f), g, k + 1);
            let rhs = -transported_form(f, &s_minus(g, k), k);
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    AdjointnessReport {
        k,
        max_degree,
        checks,
        failures,
    }
}
