use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, ExactDiv};
use super::rational::Rational;
use super::unipoly::UniPoly;

/// Dense polynomial with integer coefficients, lowest degree first.
///
/// This is the working domain of the fraction-free kernels: integer
/// arithmetic avoids a gcd per coefficient operation, which dominates the
/// cost of the same computations over [`UniPoly`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `None` unless every coefficient is an integer.
    pub fn from_unipoly(p: &UniPoly) -> Option<Self> {
        p.coeffs()
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Rewrite `p(t)` with only exponents divisible by `step` as `p̃(t^step)`.
    pub fn deflate(&self, step: usize) -> Option<Self> {
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % step != 0 && !c.is_zero())
        {
            return None;
        }
        Some(ZPoly {
            coeffs: self.coeffs.iter().step_by(step).cloned().collect(),
        })
    }

    /// Inverse of [`ZPoly::deflate`].
    pub fn inflate(&self, step: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        ZPoly { coeffs }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut g = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let g = lr.gcd(lb);
            let (mr, mb) = (lb / &g, &lr / &g);
            for c in r.iter_mut() {
                *c *= &mr;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    r[dr - db + j] -= &mb * bj;
                }
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        ZPoly { coeffs: r }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.coeffs.is_empty() {
            let r = x.pseudo_rem(&y).primitive_part();
            x = y;
            y = r;
        }
        x
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b, sign) {
                (Some(a), Some(b), 1) => a + b,
                (Some(a), Some(b), _) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), 1) => b.clone(),
                (None, Some(b), _) => -b,
                (None, None, _) => BigInt::zero(),
            });
        }
        Self::new(out)
    }
}

impl Zero for ZPoly {
    fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ZPoly {
    fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }
}

impl std::ops::Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        self.combine(&rhs, 1)
    }
}

impl std::ops::Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        self.mul_ref(&rhs)
    }
}

impl Coeff for ZPoly {
    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    fn neg_ref(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Integers embed; a non-integral rational has no image and panics.
    fn from_rational(r: &Rational) -> Self {
        assert!(r.is_integer(), "ZPoly only embeds integers");
        Self::new(vec![r.to_integer()])
    }
}

impl ExactDiv for ZPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(Self::zero());
        };
        if nd < dd {
            return None;
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        rem[..dd].iter().all(Zero::is_zero).then(|| Self::new(quot))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn exact_division() {
        let a = z(&[-1, 0, 1]);
        let b = z(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(z(&[1, 1])));
        assert_eq!(z(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(z(&[2, 2]).div_exact(&z(&[3])), None);
    }

    #[test]
    fn gcd_and_deflation() {
        let a = z(&[-1, 0, 1]).mul_ref(&z(&[2, 3]));
        let b = z(&[-1, 1]).mul_ref(&z(&[0, 0, 5]));
        assert_eq!(ZPoly::gcd(&a, &b), z(&[-1, 1]));
        let even = z(&[1, 0, -3, 0, 2]);
        assert_eq!(even.deflate(2), Some(z(&[1, -3, 2])));
        assert_eq!(even.deflate(2).unwrap().inflate(2), even);
        assert_eq!(z(&[0, 1]).deflate(2), None);
    }
}
