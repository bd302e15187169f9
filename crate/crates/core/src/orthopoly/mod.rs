//! Orbit sums, the weights `δ_k` and `δ_{k,q}`, constant-term inner
//! products, and Jacobi / Macdonald polynomials built by an exact Gram
//! solve over the strict lower ideal.
//!
//! Both weights are finite products over all roots:
//!
//! * `δ_k = ∏_{α∈R} (1 - X^α)^{k_α}` over `Q`,
//! * `δ_{k,q} = ∏_{α∈R} (X^α; q)_{k_α}` with coefficients in `Q[v]`, `q = v²`.
//!
//! `<f, g> = CT(f · bar(g) · δ)`.

mod basis;
mod report;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exactnum::{qrat_eval, ExactDiv, FieldCoeff, QRat, Rational, VPoly, ZPoly};
use crate::linalg::fraction_free_solve;
use crate::par::Exec;
use crate::laurent::{CoeffFormat, LaurentPoly};
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

pub use basis::OrthoBasis;
pub use report::{
    collision_report, norm_table, printed_condition_report, CollisionReport, NormEntry, NormTable,
    OrthogonalityEntry, OrthogonalityReport, PrintedConditionReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Jacobi,
    Macdonald,
}

/// Coefficient field of an orthogonal family together with the integral
/// domain in which its Gram matrices live.
pub trait OrthoField: FieldCoeff + CoeffFormat {
    /// Gram entries and weight coefficients; fraction-free solves run here.
    type Ring: ExactDiv + CoeffFormat;
    const FAMILY: Family;

    fn weight(rs: &RootSystem, k: &MultiplicityFn) -> LaurentPoly<Self::Ring>;
    fn from_ring(x: &Self::Ring) -> Self;
    fn from_fraction(num: &Self::Ring, den: &Self::Ring) -> Result<Self>;
    /// Numerators over one common denominator.
    fn common_denominator(cs: &[Self]) -> (Vec<Self::Ring>, Self::Ring);

    /// Solve `A x = b` for a single right-hand side; `None` if `A` is singular.
    fn solve(a: &[Vec<Self::Ring>], b: &[Self::Ring], exec: Exec) -> Result<Option<Vec<Self>>> {
        let rhs: Vec<Vec<Self::Ring>> = b.iter().map(|x| vec![x.clone()]).collect();
        let Some(sol) = fraction_free_solve(a, &rhs, exec)? else {
            return Ok(None);
        };
        sol.numerators
            .iter()
            .map(|n| Self::from_fraction(&n[0], &sol.det))
            .collect::<Result<_>>()
            .map(Some)
    }
}

impl OrthoField for Rational {
    type Ring = Rational;
    const FAMILY: Family = Family::Jacobi;

    fn weight(rs: &RootSystem, k: &MultiplicityFn) -> LaurentPoly<Rational> {
        weight_delta_k(rs, k)
    }

    fn from_ring(x: &Rational) -> Self {
        x.clone()
    }

    fn from_fraction(num: &Rational, den: &Rational) -> Result<Self> {
        crate::exactnum::rat_arith(num, den, crate::exactnum::ArithOp::Div)
    }

    fn common_denominator(cs: &[Self]) -> (Vec<Rational>, Rational) {
        (cs.to_vec(), Rational::from_integer(1.into()))
    }
}

impl OrthoField for QRat {
    type Ring = VPoly;
    const FAMILY: Family = Family::Macdonald;

    fn weight(rs: &RootSystem, k: &MultiplicityFn) -> LaurentPoly<VPoly> {
        weight_delta_kq(rs, k)
    }

    fn from_ring(x: &VPoly) -> Self {
        QRat::from_poly(x.clone())
    }

    fn from_fraction(num: &VPoly, den: &VPoly) -> Result<Self> {
        QRat::new(num.clone(), den.clone())
    }

    fn common_denominator(cs: &[Self]) -> (Vec<VPoly>, VPoly) {
        let mut l = VPoly::one();
        for c in cs {
            if !c.den().is_one() {
                let g = VPoly::gcd(&l, c.den());
                l = &l * &c.den().div_exact(&g).expect("gcd divides");
            }
        }
        let nums = cs
            .iter()
            .map(|c| c.num() * &l.div_exact(c.den()).expect("den divides lcm"))
            .collect();
        (nums, l)
    }

    /// Gram matrices of `δ_{k,q}` have integer coefficients in `q = v²`, so
    /// the elimination runs over `Z[q]` and fractions are reduced there
    /// before returning to `v`.
    fn solve(a: &[Vec<VPoly>], b: &[VPoly], exec: Exec) -> Result<Option<Vec<QRat>>> {
        let Some((step, za, zb)) = integral_in_power(a, b) else {
            let rhs: Vec<Vec<VPoly>> = b.iter().map(|x| vec![x.clone()]).collect();
            let Some(sol) = fraction_free_solve(a, &rhs, exec)? else {
                return Ok(None);
            };
            return sol
                .numerators
                .iter()
                .map(|n| QRat::new(n[0].clone(), sol.det.clone()))
                .collect::<Result<_>>()
                .map(Some);
        };
        let rhs: Vec<Vec<ZPoly>> = zb.into_iter().map(|x| vec![x]).collect();
        let Some(sol) = fraction_free_solve(&za, &rhs, exec)? else {
            return Ok(None);
        };
        sol.numerators
            .iter()
            .map(|n| {
                let n = &n[0];
                if n.is_zero() {
                    return Ok(QRat::zero());
                }
                let g = ZPoly::gcd(n, &sol.det);
                let num = n.div_exact(&g).expect("gcd divides");
                let den = sol.det.div_exact(&g).expect("gcd divides");
                QRat::new(num.inflate(step).to_unipoly(), den.inflate(step).to_unipoly())
            })
            .collect::<Result<_>>()
            .map(Some)
    }
}

type IntegralSystem = (usize, Vec<Vec<ZPoly>>, Vec<ZPoly>);

/// Integer form of a polynomial system, deflated to `v²` when only even
/// powers occur.
fn integral_in_power(a: &[Vec<VPoly>], b: &[VPoly]) -> Option<IntegralSystem> {
    let za: Vec<Vec<ZPoly>> = a
        .iter()
        .map(|row| row.iter().map(ZPoly::from_unipoly).collect::<Option<_>>())
        .collect::<Option<_>>()?;
    let zb: Vec<ZPoly> = b.iter().map(ZPoly::from_unipoly).collect::<Option<_>>()?;
    let deflated = || -> Option<(Vec<Vec<ZPoly>>, Vec<ZPoly>)> {
        let da = za
            .iter()
            .map(|row| row.iter().map(|p| p.deflate(2)).collect::<Option<_>>())
            .collect::<Option<_>>()?;
        let db = zb.iter().map(|p| p.deflate(2)).collect::<Option<_>>()?;
        Some((da, db))
    };
    match deflated() {
        Some((da, db)) => Some((2, da, db)),
        None => Some((1, za, zb)),
    }
}

/// A weight function `δ` with the multiplicity it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFn<C: crate::exactnum::Coeff> {
    pub poly: LaurentPoly<C>,
    pub k: MultiplicityFn,
    pub q_deformed: bool,
}

/// `m_λ = Σ_{μ∈Wλ} X^μ`.
pub fn monomial_sym<C: crate::exactnum::Coeff>(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<LaurentPoly<C>> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    Ok(LaurentPoly::from_terms(
        rs.rank(),
        rs.weyl_orbit(lambda).into_iter().map(|w| (w, C::one())),
    ))
}

/// `δ_k = ∏_{α∈R} (1 - X^α)^{k_α}`.
pub fn weight_delta_k(rs: &RootSystem, k: &MultiplicityFn) -> LaurentPoly<Rational> {
    let mut d = LaurentPoly::one(rs.rank());
    for root in rs.positive_roots() {
        for _ in 0..k.of(root) {
            d = d.mul_one_minus(&root.weight).mul_one_minus(&-root.weight);
        }
    }
    d
}

/// `δ_{k,q} = ∏_{α∈R} ∏_{j<k_α} (1 - q^j X^α)` with `q = v²`.
pub fn weight_delta_kq(rs: &RootSystem, k: &MultiplicityFn) -> LaurentPoly<VPoly> {
    let mut d = LaurentPoly::one(rs.rank());
    for root in rs.positive_roots() {
        for j in 0..k.of(root) as usize {
            let qj = VPoly::monomial(2 * j, Rational::from_integer(1.into()));
            d = d
                .mul_one_minus_scaled(&qj, &root.weight)
                .mul_one_minus_scaled(&qj, &-root.weight);
        }
    }
    d
}

pub fn weight_fn_k(rs: &RootSystem, k: &MultiplicityFn) -> WeightFn<Rational> {
    WeightFn {
        poly: weight_delta_k(rs, k),
        k: *k,
        q_deformed: false,
    }
}

pub fn weight_fn_kq(rs: &RootSystem, k: &MultiplicityFn) -> WeightFn<QRat> {
    WeightFn {
        poly: weight_delta_kq(rs, k).map_coeffs(|c| QRat::from_poly(c.clone())),
        k: *k,
        q_deformed: true,
    }
}

/// `CT(f · bar(g) · δ)`.
pub fn inner_product<C: crate::exactnum::Coeff>(
    f: &LaurentPoly<C>,
    g: &LaurentPoly<C>,
    delta: &LaurentPoly<C>,
) -> C {
    f.ct_pairing(g, delta)
}

/// `P_λ = Σ_{μ⪯λ} c_μ m_μ` with `c_λ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoPoly<F> {
    pub lambda: Weight,
    pub k: MultiplicityFn,
    pub family: Family,
    /// Coefficients in lower-ideal order; `λ` is last with coefficient one.
    coeffs: Vec<(Weight, F)>,
}

impl<F: OrthoField> OrthoPoly<F> {
    pub fn from_coeffs(lambda: Weight, k: MultiplicityFn, coeffs: Vec<(Weight, F)>) -> Self {
        OrthoPoly {
            lambda,
            k,
            family: F::FAMILY,
            coeffs,
        }
    }

    pub fn coeffs(&self) -> &[(Weight, F)] {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Weight) -> F {
        self.coeffs
            .iter()
            .find(|(w, _)| w == mu)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// Expansion in `X^μ`.
    pub fn to_laurent(&self, rs: &RootSystem) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero(rs.rank());
        for (mu, c) in &self.coeffs {
            for w in rs.weyl_orbit(mu) {
                out.add_term(w, c);
            }
        }
        out
    }

    pub fn to_json(&self) -> OrthoPolyJson {
        OrthoPolyJson {
            lambda: self.lambda.coords().to_vec(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, c)| CoeffEntry {
                    mu: mu.coords().to_vec(),
                    c: c.to_json(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub mu: Vec<i32>,
    pub c: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthoPolyJson {
    pub lambda: Vec<i32>,
    pub coeffs: Vec<CoeffEntry>,
}

/// Build `P_λ` of the given family.
pub fn ortho_poly<F: OrthoField>(
    rs: &RootSystem,
    lambda: &Weight,
    k: &MultiplicityFn,
) -> Result<OrthoPoly<F>> {
    let basis = OrthoBasis::<F>::new(rs, k, std::slice::from_ref(lambda), Exec::Sequential)?;
    basis.poly(lambda)
}

pub fn jacobi(rs: &RootSystem, lambda: &Weight, k: &MultiplicityFn) -> Result<OrthoPoly<Rational>> {
    ortho_poly(rs, lambda, k)
}

pub fn macdonald(rs: &RootSystem, lambda: &Weight, k: &MultiplicityFn) -> Result<OrthoPoly<QRat>> {
    ortho_poly(rs, lambda, k)
}

/// `<P, P>`.
pub fn squared_norm<F: OrthoField>(rs: &RootSystem, p: &OrthoPoly<F>) -> Result<F> {
    let basis = OrthoBasis::<F>::new(rs, &p.k, std::slice::from_ref(&p.lambda), Exec::Sequential)?;
    basis.pairing(p, p)
}

/// `<P, P> / CT(δ)`.
pub fn norm_ratio<F: OrthoField>(rs: &RootSystem, p: &OrthoPoly<F>) -> Result<F> {
    let ct = F::from_ring(&F::weight(rs, &p.k).constant_term());
    squared_norm(rs, p)?
        .div_ref(&ct)
        .ok_or(Error::DivisionByZero)
}

/// Evaluate every coefficient at `v = 1`, cancelling removable singularities.
pub fn macdonald_q1_limit(p: &OrthoPoly<QRat>) -> Result<OrthoPoly<Rational>> {
    let one = Rational::from_integer(1.into());
    let coeffs = p
        .coeffs
        .iter()
        .map(|(mu, c)| Ok((*mu, qrat_eval(c, &one)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrthoPoly {
        lambda: p.lambda,
        k: p.k,
        family: Family::Jacobi,
        coeffs,
    })
}

/// `<λ, λ + Σ_{α>0} k_α α>`.
pub fn eigenvalue(rs: &RootSystem, lambda: &Weight, k: &MultiplicityFn) -> Rational {
    rs.inner_weights(lambda, &(*lambda + rs.rho_k(k)))
}

/// Coefficient maps keyed by weight, for comparisons across families.
pub fn coeff_map<F: Clone>(p: &OrthoPoly<F>) -> BTreeMap<Weight, F> {
    p.coeffs.iter().cloned().collect()
}

#[cfg(test)]
mod tests;
