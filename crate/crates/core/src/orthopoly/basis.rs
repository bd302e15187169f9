use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{monomial_sym, OrthoField, OrthoPoly};
use crate::error::{Error, Result};
use crate::exactnum::Coeff;
use crate::laurent::LaurentPoly;
use crate::par::Exec;
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

/// The orbit sums `m_μ` for every dominant `μ` below a set of top weights,
/// with their full Gram matrix `G_{μν} = <m_μ, m_ν>` under one weight.
///
/// All polynomials of one family and multiplicity are solved against the
/// same matrix, and every pairing `<P_λ, P_μ>` reduces to `c_λᵀ G c_μ`.
pub struct OrthoBasis<F: OrthoField> {
    rs: RootSystem,
    k: MultiplicityFn,
    delta: LaurentPoly<F::Ring>,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    gram: Vec<Vec<F::Ring>>,
    exec: Exec,
}

/// A polynomial written as `Σ_i nums[i] m_{weights[idx[i]]} / den`.
struct Cleared<R> {
    idx: Vec<usize>,
    nums: Vec<R>,
    den: R,
}

impl<F: OrthoField> OrthoBasis<F> {
    pub fn new(rs: &RootSystem, k: &MultiplicityFn, tops: &[Weight], exec: Exec) -> Result<Self> {
        let mut set = BTreeSet::new();
        for t in tops {
            set.extend(rs.lower_ideal(t)?);
        }
        let weights: Vec<Weight> = set.into_iter().collect();
        let index = weights.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let delta = F::weight(rs, k);
        let orbits: Vec<LaurentPoly<F::Ring>> = weights
            .iter()
            .map(|w| monomial_sym(rs, w))
            .collect::<Result<_>>()?;
        let n = weights.len();
        let upper: Vec<Vec<F::Ring>> = exec.map_range(n, |i| {
            (i..n)
                .map(|j| orbits[i].ct_pairing(&orbits[j], &delta))
                .collect()
        });
        let mut gram = vec![vec![F::Ring::zero(); n]; n];
        for (i, row) in upper.into_iter().enumerate() {
            for (off, g) in row.into_iter().enumerate() {
                let j = i + off;
                gram[j][i] = g.clone();
                gram[i][j] = g;
            }
        }
        Ok(OrthoBasis {
            rs: rs.clone(),
            k: *k,
            delta,
            weights,
            index,
            gram,
            exec,
        })
    }

    /// All dominant weights of coordinate sum at most `height`, with their
    /// lower ideals.
    pub fn up_to_height(rs: &RootSystem, k: &MultiplicityFn, height: u32, exec: Exec) -> Result<Self> {
        Self::new(rs, k, &rs.dominant_weights(height), exec)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn multiplicity(&self) -> &MultiplicityFn {
        &self.k
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn delta(&self) -> &LaurentPoly<F::Ring> {
        &self.delta
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.index.contains_key(w)
    }

    fn idx(&self, w: &Weight) -> Result<usize> {
        self.index.get(w).copied().ok_or_else(|| {
            Error::InvalidArgument(format!("weight {w} lies outside the precomputed basis"))
        })
    }

    /// `<m_μ, m_ν>`.
    pub fn gram_entry(&self, mu: &Weight, nu: &Weight) -> Result<F::Ring> {
        Ok(self.gram[self.idx(mu)?][self.idx(nu)?].clone())
    }

    /// Gram matrix restricted to the listed weights.
    pub fn gram_matrix(&self, ws: &[Weight]) -> Result<Vec<Vec<F::Ring>>> {
        let ix: Vec<usize> = ws.iter().map(|w| self.idx(w)).collect::<Result<_>>()?;
        Ok(ix
            .iter()
            .map(|&i| ix.iter().map(|&j| self.gram[i][j].clone()).collect())
            .collect())
    }

    /// Solve `Σ_μ c_μ <m_μ, m_ν> = -<m_λ, m_ν>` for all dominant `ν ≺ λ`.
    pub fn poly(&self, lambda: &Weight) -> Result<OrthoPoly<F>> {
        let ideal = self.rs.lower_ideal(lambda)?;
        let li = self.idx(lambda)?;
        let strict = &ideal[..ideal.len() - 1];
        let ix: Vec<usize> = strict.iter().map(|w| self.idx(w)).collect::<Result<_>>()?;
        let mut coeffs = Vec::with_capacity(ideal.len());
        if !ix.is_empty() {
            let a: Vec<Vec<F::Ring>> = ix
                .iter()
                .map(|&nu| ix.iter().map(|&mu| self.gram[nu][mu].clone()).collect())
                .collect();
            let b: Vec<F::Ring> = ix.iter().map(|&nu| self.gram[nu][li].neg_ref()).collect();
            let sol = F::solve(&a, &b, self.exec)?
                .ok_or_else(|| Error::SingularGram(lambda.coords().to_vec()))?;
            coeffs.extend(strict.iter().copied().zip(sol));
        }
        coeffs.push((*lambda, F::one()));
        Ok(OrthoPoly::from_coeffs(*lambda, self.k, coeffs))
    }

    /// Every polynomial for the listed weights, computed concurrently.
    pub fn polys(&self, lambdas: &[Weight]) -> Result<Vec<OrthoPoly<F>>> {
        self.exec.map(lambdas, |l| self.poly(l)).into_iter().collect()
    }

    fn clear(&self, p: &OrthoPoly<F>) -> Result<Cleared<F::Ring>> {
        let cs: Vec<F> = p.coeffs().iter().map(|(_, c)| c.clone()).collect();
        let (nums, den) = F::common_denominator(&cs);
        let idx = p
            .coeffs()
            .iter()
            .map(|(w, _)| self.idx(w))
            .collect::<Result<_>>()?;
        Ok(Cleared { idx, nums, den })
    }

    /// `G · numerators(p)` over the whole basis.
    fn gram_times(&self, c: &Cleared<F::Ring>) -> Vec<F::Ring> {
        (0..self.weights.len())
            .map(|row| {
                let mut acc = F::Ring::zero();
                for (&j, n) in c.idx.iter().zip(&c.nums) {
                    let g = &self.gram[row][j];
                    if !g.is_zero() && !n.is_zero() {
                        acc.add_assign_ref(&g.mul_ref(n));
                    }
                }
                acc
            })
            .collect()
    }

    fn dot(c: &Cleared<F::Ring>, w: &[F::Ring]) -> F::Ring {
        let mut acc = F::Ring::zero();
        for (&i, n) in c.idx.iter().zip(&c.nums) {
            if !w[i].is_zero() {
                acc.add_assign_ref(&n.mul_ref(&w[i]));
            }
        }
        acc
    }

    /// `<P, Q>`.
    pub fn pairing(&self, p: &OrthoPoly<F>, q: &OrthoPoly<F>) -> Result<F> {
        let cp = self.clear(p)?;
        let cq = self.clear(q)?;
        let num = Self::dot(&cp, &self.gram_times(&cq));
        F::from_fraction(&num, &cp.den.mul_ref(&cq.den))
    }

    /// `<P, m_μ>`.
    pub fn pairing_with_orbit_sum(&self, p: &OrthoPoly<F>, mu: &Weight) -> Result<F> {
        let cp = self.clear(p)?;
        let j = self.idx(mu)?;
        let mut num = F::Ring::zero();
        for (&i, n) in cp.idx.iter().zip(&cp.nums) {
            num.add_assign_ref(&n.mul_ref(&self.gram[i][j]));
        }
        F::from_fraction(&num, &cp.den)
    }

    /// The full table `<P_a, P_b>` for the given polynomials.
    pub(super) fn pairing_table(&self, polys: &[OrthoPoly<F>]) -> Result<Vec<Vec<F>>> {
        let cleared: Vec<Cleared<F::Ring>> =
            polys.iter().map(|p| self.clear(p)).collect::<Result<_>>()?;
        let images: Vec<Vec<F::Ring>> = self.exec.map(&cleared, |c| self.gram_times(c));
        self.exec
            .map_range(polys.len(), |a| {
                (0..polys.len())
                    .map(|b| {
                        let num = Self::dot(&cleared[a], &images[b]);
                        if num.is_zero() {
                            Ok(F::zero())
                        } else {
                            F::from_fraction(&num, &cleared[a].den.mul_ref(&cleared[b].den))
                        }
                    })
                    .collect::<Result<Vec<F>>>()
            })
            .into_iter()
            .collect()
    }

    /// `<P, m_μ>` for every basis weight `μ`.
    pub(super) fn orbit_pairings(&self, p: &OrthoPoly<F>) -> Result<Vec<F>> {
        let cp = self.clear(p)?;
        self.gram_times(&cp)
            .iter()
            .map(|num| {
                if num.is_zero() {
                    Ok(F::zero())
                } else {
                    F::from_fraction(num, &cp.den)
                }
            })
            .collect()
    }
}
