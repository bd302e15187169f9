use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// A commutative ring of exact coefficients.
///
/// Generic code in [`crate::laurent`] and [`crate::orthopoly`] is written
/// against this trait so that the same kernels serve `Rational`, `VPoly`
/// and `QRat`.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Embedding of the rationals.
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }
}

/// Integral domain with exact division (`None` when the divisor does not
/// divide). Used by fraction-free elimination.
pub trait ExactDiv: Coeff {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait FieldCoeff: ExactDiv {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}
