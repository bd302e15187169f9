//! Laurent polynomials `Σ c_μ X^μ` in the weight lattice, the multiplicative
//! realization of trigonometric polynomials on the torus (`X^μ ↔ e^{i<μ,x>}`).
//!
//! Coefficients are generic over [`Coeff`]. The directional derivative is
//! realized without the factor `i`: `deriv(ξ, X^λ) = <λ,ξ> X^λ`, which keeps
//! every multivariate computation in real exact arithmetic.

mod format;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{Coeff, Rational};
use crate::par::Exec;
use crate::rootdata::{RootSystem, Weight, WeylElement};

pub use format::{CoeffFormat, LaurentJson, TermJson};

/// Product size (`|f|·|g|`) above which [`LaurentPoly::mul_exec`] splits the
/// work across threads.
const PAR_MUL_THRESHOLD: usize = 4096;

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C> {
    rank: usize,
    terms: BTreeMap<Weight, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn constant(rank: usize, c: C) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    pub fn monomial(exp: Weight, c: C) -> Self {
        let mut p = Self::zero(exp.rank());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// `X^μ` with coefficient one.
    pub fn x(exp: Weight) -> Self {
        Self::monomial(exp, C::one())
    }

    /// Collects terms, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Weight, C)>>(rank: usize, terms: I) -> Self {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            assert_eq!(w.rank(), rank, "exponent rank mismatch");
            p.add_term(w, &c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    /// Terms in graded-lex order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn coeff(&self, exp: &Weight) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, exp: &Weight) -> Option<&C> {
        self.terms.get(exp)
    }

    pub fn add_term(&mut self, exp: Weight, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero(self.rank);
        for (w, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(*w, d);
            }
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.rank);
        }
        self.map_coeffs(|c| c.mul_ref(s))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, &c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    /// `X^shift · f`.
    pub fn shift(&self, by: &Weight) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (*w + *by, c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_exec(other, Exec::Sequential)
    }

    /// Product; large products are split into blocks of `self`'s terms that
    /// are multiplied concurrently and merged in block order.
    pub fn mul_exec(&self, other: &Self, exec: Exec) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in product");
        let work = self.len() * other.len();
        if !exec.is_parallel() || work < PAR_MUL_THRESHOLD || self.len() < 2 {
            let mut out = Self::zero(self.rank);
            for (a, ca) in &self.terms {
                for (b, cb) in &other.terms {
                    out.add_term(*a + *b, &ca.mul_ref(cb));
                }
            }
            return out;
        }
        let lhs: Vec<(&Weight, &C)> = self.terms.iter().collect();
        let blocks = lhs.len().min(64);
        let size = lhs.len().div_ceil(blocks);
        let chunks: Vec<&[(&Weight, &C)]> = lhs.chunks(size).collect();
        let partials = exec.map(&chunks, |chunk| {
            let mut part = Self::zero(self.rank);
            for (a, ca) in chunk.iter() {
                for (b, cb) in &other.terms {
                    part.add_term(**a + *b, &ca.mul_ref(cb));
                }
            }
            part
        });
        let mut out = Self::zero(self.rank);
        for part in partials {
            for (w, c) in part.terms {
                out.add_term(w, &c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficient of `X^0`.
    pub fn constant_term(&self) -> C {
        self.coeff(&Weight::zero(self.rank))
    }

    /// `X^μ ↦ X^{-μ}` with coefficients unchanged.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (-*w, c.clone())).collect(),
        }
    }

    pub fn weyl_act(&self, rs: &RootSystem, w: &WeylElement) -> Self {
        self.map_exponents(|e| w.act(rs, e))
    }

    /// Action of the reflection in the positive root with index `root`.
    pub fn reflect(&self, rs: &RootSystem, root: usize) -> Self {
        self.map_exponents(|e| rs.reflect(root, e))
    }

    pub fn reflect_simple(&self, rs: &RootSystem, i: usize) -> Self {
        self.map_exponents(|e| rs.reflect_simple(i, e))
    }

    fn map_exponents<F: Fn(&Weight) -> Weight>(&self, f: F) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    pub fn is_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| self.reflect_simple(rs, i) == *self)
    }

    /// `(1 - X^β) f`.
    pub fn mul_one_minus(&self, beta: &Weight) -> Self {
        self.sub(&self.shift(beta))
    }

    /// `(1 - c X^β) f`.
    pub fn mul_one_minus_scaled(&self, c: &C, beta: &Weight) -> Self {
        self.sub(&self.shift(beta).scale(c))
    }

    /// Exact quotient `g` with `(1 - X^β) g = f`.
    ///
    /// Exponents split into β-strings `r + tβ`; along each string the
    /// quotient coefficients are running sums of `f`, and divisibility is
    /// equivalent to every string summing to zero.
    pub fn div_one_minus(&self, beta: &Weight) -> Result<Self> {
        let p = beta
            .coords()
            .iter()
            .position(|&x| x != 0)
            .ok_or_else(|| Error::NotDivisible("division by 1 - X^0".into()))?;
        let bp = beta.coords()[p];
        let mut strings: BTreeMap<Weight, BTreeMap<i32, &C>> = BTreeMap::new();
        for (w, c) in &self.terms {
            let t = w.coords()[p].div_euclid(bp);
            let r = w.add_scaled(beta, -t);
            strings.entry(r).or_default().insert(t, c);
        }
        let mut out = Self::zero(self.rank);
        for (r, string) in strings {
            let lo = *string.keys().next().expect("nonempty string");
            let hi = *string.keys().next_back().expect("nonempty string");
            let mut acc = C::zero();
            for t in lo..=hi {
                if let Some(c) = string.get(&t) {
                    acc.add_assign_ref(c);
                }
                if t < hi {
                    if !acc.is_zero() {
                        out.terms.insert(r.add_scaled(beta, t), acc.clone());
                    }
                } else if !acc.is_zero() {
                    return Err(Error::NotDivisible(format!(
                        "nonzero remainder dividing by 1 - X^{beta} along the string through {r}"
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Exact quotient by `(1 - X^{-α})` for the positive root with index `root`.
    pub fn div_exact(&self, rs: &RootSystem, root: usize) -> Result<Self> {
        self.div_one_minus(&-rs.positive_roots()[root].weight)
    }

    /// `X^λ ↦ <λ, ξ> X^λ`.
    pub fn deriv(&self, rs: &RootSystem, xi: &[Rational]) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let s = rs.inner_weight_vec(w, xi);
            if !s.is_zero() {
                out.terms.insert(*w, c.mul_ref(&C::from_rational(&s)));
            }
        }
        out
    }

    /// `X^λ ↦ <λ, η> X^λ` for a weight `η` (e.g. a root).
    pub fn deriv_weight(&self, rs: &RootSystem, eta: &Weight) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let s = rs.inner_weights(w, eta);
            if !s.is_zero() {
                out.terms.insert(*w, c.mul_ref(&C::from_rational(&s)));
            }
        }
        out
    }

    /// `CT(f · bar(g) · δ) = Σ f_a g_b δ_{b-a}`, computed without forming
    /// the triple product.
    pub fn ct_pairing(&self, g: &Self, delta: &Self) -> C {
        let mut acc = C::zero();
        for (a, fa) in &self.terms {
            for (b, gb) in &g.terms {
                if let Some(d) = delta.terms.get(&(*b - *a)) {
                    acc.add_assign_ref(&fa.mul_ref(gb).mul_ref(d));
                }
            }
        }
        acc
    }

    /// Largest absolute exponent coordinate.
    pub fn max_exponent(&self) -> i32 {
        self.terms.keys().map(Weight::max_abs).max().unwrap_or(0)
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})X^{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
