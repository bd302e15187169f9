use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::coeff::{Coeff, ExactDiv, FieldCoeff};
use super::rational::{format_rational, Rational};
use super::unipoly::VPoly;
use crate::error::{Error, Result};

/// Rational function in `v = q^{1/2}` with rational coefficients.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic, so two values are
/// equal iff their representations are structurally equal. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: VPoly,
    den: VPoly,
}

pub fn qrat_normalize(num: VPoly, den: VPoly) -> Result<QRat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(QRat::zero());
    }
    let g = VPoly::gcd(&num, &den);
    let (mut num, mut den) = if g.is_one() {
        (num, den)
    } else {
        (
            num.div_rem(&g).expect("gcd is nonzero").0,
            den.div_rem(&g).expect("gcd is nonzero").0,
        )
    };
    let lc = den.leading().expect("nonzero").clone();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Ok(QRat { num, den })
}

/// Value (or limit) of `r` at `v = v0`.
///
/// Since `r` is gcd-reduced a vanishing denominator is a genuine pole; the
/// removable case is handled by [`QRat::eval_fraction`] for raw pairs.
pub fn qrat_eval(r: &QRat, v0: &Rational) -> Result<Rational> {
    QRat::eval_fraction(&r.num, &r.den, v0)
}

impl QRat {
    pub fn new(num: VPoly, den: VPoly) -> Result<Self> {
        qrat_normalize(num, den)
    }

    pub fn from_poly(p: VPoly) -> Self {
        QRat { num: p, den: VPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(VPoly::constant(c))
    }

    /// `v^e` for any integer `e`.
    pub fn v_pow(e: i32) -> Self {
        let m = VPoly::monomial(e.unsigned_abs() as usize, Rational::one());
        if e >= 0 {
            Self::from_poly(m)
        } else {
            QRat { num: VPoly::one(), den: m }
        }
    }

    /// `q^e = v^{2e}`.
    pub fn q_pow(e: i32) -> Self {
        Self::v_pow(2 * e)
    }

    pub fn num(&self) -> &VPoly {
        &self.num
    }

    pub fn den(&self) -> &VPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Evaluate `num/den` at `v0`, cancelling common factors `(v - v0)` first.
    pub fn eval_fraction(num: &VPoly, den: &VPoly, v0: &Rational) -> Result<Rational> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Rational::zero());
        }
        let mn = num.root_multiplicity(v0);
        let md = den.root_multiplicity(v0);
        if md > mn {
            return Err(Error::Pole {
                order: md - mn,
                at: format_rational(v0),
            });
        }
        if md == 0 {
            return Ok(num.eval(v0) / den.eval(v0));
        }
        let lin = VPoly::new(vec![-v0.clone(), Rational::one()]).pow(md as u32);
        let n = num.div_rem(&lin)?.0;
        let d = den.div_rem(&lin)?.0;
        Ok(n.eval(v0) / d.eval(v0))
    }

    pub fn eval_f64(&self, v0: f64) -> f64 {
        self.num.eval_f64(v0) / self.den.eval_f64(v0)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(qrat_normalize(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
    }

    pub fn to_json(&self) -> QRatJson {
        QRatJson {
            num: self.num.to_pairs(),
            den: self.den.to_pairs(),
        }
    }

    pub fn from_json(j: &QRatJson) -> Result<Self> {
        qrat_normalize(VPoly::from_pairs(&j.num)?, VPoly::from_pairs(&j.den)?)
    }

    fn combine(a: &QRat, b: &QRat, sub: bool) -> QRat {
        let (n, d) = if a.den == b.den {
            let n = if sub { &a.num - &b.num } else { &a.num + &b.num };
            (n, a.den.clone())
        } else {
            let l = &a.num * &b.den;
            let r = &b.num * &a.den;
            (if sub { &l - &r } else { &l + &r }, &a.den * &b.den)
        };
        qrat_normalize(n, d).expect("product of nonzero denominators")
    }
}

/// JSON shape `{"num": [[e, "c"], ...], "den": [[e, "c"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRatJson {
    pub num: Vec<(usize, String)>,
    pub den: Vec<(usize, String)>,
}

impl Serialize for QRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QRatJson::deserialize(d)?;
        QRat::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        QRat::combine(self, rhs, false)
    }
}

impl<'a> Sub<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        if rhs.num.is_zero() {
            return self.clone();
        }
        QRat::combine(self, rhs, true)
    }
}

impl<'a> Mul<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.num.is_zero() || rhs.num.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        qrat_normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat {
            num: VPoly::zero(),
            den: VPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::from_poly(VPoly::one())
    }
}

impl Coeff for QRat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        QRat::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return QRat::zero();
        }
        QRat {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }
}

impl ExactDiv for QRat {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|i| self * &i)
    }
}

impl FieldCoeff for QRat {
    fn inv(&self) -> Option<Self> {
        QRat::inv(self)
    }
}
