use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{ExactDiv, QRat};
use crate::laurent::LaurentPoly;
use crate::orthopoly::{macdonald, OrthoPoly};
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

fn a1() -> RootSystem {
    RootSystem::parse("A1").expect("A1 is supported")
}

/// The q-ultraspherical polynomial: A1 Macdonald polynomial for `(n)`.
pub fn qultra(n: u32, k: u32) -> Result<OrthoPoly<QRat>> {
    macdonald(&a1(), &Weight::new(&[n as i32]), &MultiplicityFn::uniform(k))
}

/// `P(v^s z)`: `X^{(j)} ↦ v^{sj} X^{(j)}`.
fn v_dilate(f: &LaurentPoly<QRat>, s: i32) -> LaurentPoly<QRat> {
    LaurentPoly::from_terms(
        1,
        f.terms()
            .map(|(w, c)| (*w, c * &QRat::v_pow(s * w.coords()[0]))),
    )
}

/// The q-difference operator
/// `P ↦ (1 - q^k z²)/(1 - z²) P(q^{½} z) + (1 - q^k z^{-2})/(1 - z^{-2}) P(q^{-½} z)`,
/// combined over the single denominator `1 - z²` and divided exactly.
pub fn qdiff_apply(k: u32, f: &LaurentPoly<QRat>) -> Result<LaurentPoly<QRat>> {
    if f.rank() != 1 {
        return Err(Error::RankMismatch { expected: 1, got: f.rank() });
    }
    let two = Weight::new(&[2]);
    let qk = QRat::q_pow(k as i32);
    let up = v_dilate(f, 1);
    let down = v_dilate(f, -1);
    // (1 - q^k z²) P(vz) - (z² - q^k) P(z/v)
    let first = up.mul_one_minus_scaled(&qk, &two);
    let second = down.shift(&two).sub(&down.scale(&qk));
    first.sub(&second).div_one_minus(&two)
}

/// `v^{-n} + v^{n+2k}`.
pub fn qdiff_expected(n: u32, k: u32) -> QRat {
    &QRat::v_pow(-(n as i32)) + &QRat::v_pow((n + 2 * k) as i32)
}

/// Apply the q-difference operator to `P` and return the measured
/// eigenvalue, failing unless it equals `v^{-n} + v^{n+2k}`.
pub fn qdiff_check(p: &OrthoPoly<QRat>) -> Result<QRat> {
    let rs = a1();
    let k = p.k.of(&rs.positive_roots()[0]);
    let n = p.lambda.coords()[0] as u32;
    let f = p.to_laurent(&rs);
    let g = qdiff_apply(k, &f)?;
    let lead = f.coeff(&p.lambda);
    let c = g
        .coeff(&p.lambda)
        .div_exact(&lead)
        .ok_or_else(|| Error::Consistency("zero leading coefficient".into()))?;
    if f.scale(&c).sub(&g).terms().any(|(_, x)| !x.is_zero()) {
        return Err(Error::NotProportional(format!(
            "q-difference image of P_{n} is not a multiple of P_{n}"
        )));
    }
    let expected = qdiff_expected(n, k);
    if c != expected {
        return Err(Error::Consistency(format!(
            "q-difference eigenvalue {c} differs from {expected}"
        )));
    }
    Ok(c)
}
