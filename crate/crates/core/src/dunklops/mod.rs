//! Dunkl-type operators: the rational operators on polynomials over `V`,
//! and the trigonometric operators (Heckman, Cherednik, the second-order
//! operator `L̂`) on Laurent polynomials.

mod ambient;
mod report;
#[cfg(test)]
mod tests;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use ambient::AmbientPoly;
pub use report::{
    box_weights, casimir_relation, commutator_report_rational, commutator_report_trig, conjugation_report,
    eigen_check, joint_eigen_report, CasimirRelation, CommutatorReport, CommutatorWitness,
    ConjugationReport, ConjugationWitness, EigenCheck, JointEigenReport,
};

use crate::error::{Error, Result};
use crate::exactnum::{int, Coeff, Rational};
use crate::laurent::LaurentPoly;
use crate::rootdata::{MultiplicityFn, RootSystem, Weight, WeylElement};

/// A nonzero direction `ξ ∈ V`, in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionalSymbol {
    xi: Vec<Rational>,
}

impl DirectionalSymbol {
    pub fn new(xi: Vec<Rational>) -> Result<Self> {
        if xi.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("direction must be nonzero".into()));
        }
        Ok(DirectionalSymbol { xi })
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        Self::new(w.coords().iter().map(|&c| int(c as i64)).collect())
    }

    /// The fundamental weight `ϖ_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut xi = vec![Rational::zero(); rank];
        xi[i] = Rational::one();
        DirectionalSymbol { xi }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.xi
    }

    pub fn rank(&self) -> usize {
        self.xi.len()
    }

    /// `w ξ`.
    pub fn act(&self, rs: &RootSystem, w: &WeylElement) -> Self {
        DirectionalSymbol {
            xi: w.act_rational(rs, &self.xi),
        }
    }

    /// The orbit `Wξ` without repetitions, sorted.
    pub fn orbit(&self, rs: &RootSystem) -> Vec<Self> {
        let mut out: Vec<Self> = rs.weyl_group().iter().map(|w| self.act(rs, w)).collect();
        out.sort();
        out.dedup();
        out
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.xi.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: self.xi.len(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for DirectionalSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.xi.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorKind {
    Rational,
    Heckman,
    Cherednik,
}

/// One directional operator together with its multiplicity.
#[derive(Debug, Clone)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub xi: DirectionalSymbol,
    pub k: MultiplicityFn,
}

impl OperatorSpec {
    pub fn new(kind: OperatorKind, xi: DirectionalSymbol, k: MultiplicityFn) -> Self {
        OperatorSpec { kind, xi, k }
    }

    /// Apply a trigonometric operator. Fails for the rational kind.
    pub fn apply_laurent<C: Coeff>(&self, rs: &RootSystem, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        match self.kind {
            OperatorKind::Heckman => heckman_apply(rs, &self.k, &self.xi, f),
            OperatorKind::Cherednik => cherednik_apply(rs, &self.k, &self.xi, f),
            OperatorKind::Rational => Err(Error::InvalidArgument(
                "the rational operator acts on polynomials over V, not Laurent polynomials".into(),
            )),
        }
    }

    /// Apply the rational operator. Fails for the trigonometric kinds.
    pub fn apply_ambient(&self, rs: &RootSystem, p: &AmbientPoly) -> Result<AmbientPoly> {
        match self.kind {
            OperatorKind::Rational => rational_dunkl_apply(rs, &self.k, &self.xi, p),
            _ => Err(Error::InvalidArgument(
                "trigonometric operators act on Laurent polynomials".into(),
            )),
        }
    }
}

/// `y_i = <α_i, x>` pulled back along `s_α`: the substitution
/// `y_i ↦ y_i - <α_i, α^∨> <α, x>`.
fn reflection_forms(rs: &RootSystem, root: usize) -> Vec<Vec<Rational>> {
    let r = &rs.positive_roots()[root];
    let n = rs.rank();
    let two_over = int(2) / &r.norm;
    (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            let c = rs.inner_roots(&e, &r.simple) * &two_over;
            (0..n)
                .map(|j| {
                    let delta = if i == j { Rational::one() } else { Rational::zero() };
                    delta - &c * int(r.simple[j])
                })
                .collect()
        })
        .collect()
}

/// `p ∘ s_α`.
pub fn ambient_reflect(rs: &RootSystem, root: usize, p: &AmbientPoly) -> AmbientPoly {
    p.substitute_linear(&reflection_forms(rs, root))
}

/// `∂_ξ p = Σ_i <α_i, ξ> ∂p/∂y_i`.
pub fn ambient_deriv(rs: &RootSystem, xi: &DirectionalSymbol, p: &AmbientPoly) -> AmbientPoly {
    let mut out = AmbientPoly::zero(p.rank());
    for i in 0..rs.rank() {
        let s = rs.inner_weight_vec(&rs.simple_root(i), xi.coords());
        if !s.is_zero() {
            out = out.add(&p.partial(i).scale(&s));
        }
    }
    out
}

/// `D_ξ p = ∂_ξ p + Σ_{α>0} k_α <α, ξ> (p - p∘s_α) / <α, x>`.
pub fn rational_dunkl_apply(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    p: &AmbientPoly,
) -> Result<AmbientPoly> {
    xi.check(rs)?;
    if p.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: p.rank(),
        });
    }
    let mut out = ambient_deriv(rs, xi, p);
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let c = rs.inner_weight_vec(&r.weight, xi.coords()) * int(k.of(r) as i64);
        if c.is_zero() {
            continue;
        }
        let diff = p.sub(&ambient_reflect(rs, idx, p));
        let l: Vec<Rational> = r.simple.iter().map(|&s| int(s)).collect();
        out = out.add(&diff.div_linear(&l)?.scale(&c));
    }
    Ok(out)
}

fn check_laurent<C: Coeff>(rs: &RootSystem, f: &LaurentPoly<C>) -> Result<()> {
    if f.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: f.rank(),
        });
    }
    Ok(())
}

/// `(f - s_α f) / (1 - X^{-α})` for every positive root, paired with
/// `k_α <α, ξ>`; roots with a vanishing factor are skipped.
fn reflection_quotients<C: Coeff>(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    f: &LaurentPoly<C>,
) -> Result<Vec<(usize, Rational, LaurentPoly<C>)>> {
    let mut out = Vec::new();
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let c = rs.inner_weight_vec(&r.weight, xi.coords()) * int(k.of(r) as i64);
        if c.is_zero() {
            continue;
        }
        let q = f.sub(&f.reflect(rs, idx)).div_exact(rs, idx)?;
        out.push((idx, c, q));
    }
    Ok(out)
}

/// Heckman operator
/// `∂_ξ + ½ Σ_{α>0} k_α <α, ξ> (1 + X^{-α})/(1 - X^{-α}) (1 - s_α)`.
pub fn heckman_apply<C: Coeff>(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    f: &LaurentPoly<C>,
) -> Result<LaurentPoly<C>> {
    xi.check(rs)?;
    check_laurent(rs, f)?;
    let mut out = f.deriv(rs, xi.coords());
    let half = Rational::new(1.into(), 2.into());
    for (idx, c, q) in reflection_quotients(rs, k, xi, f)? {
        let minus = -rs.positive_roots()[idx].weight;
        let term = q.add(&q.shift(&minus));
        out = out.add(&term.scale_rational(&(c * &half)));
    }
    Ok(out)
}

/// Cherednik operator
/// `∂_ξ + Σ_{α>0} k_α <α, ξ> (1 - X^{-α})^{-1} (1 - s_α) - <ρ(k), ξ>`.
pub fn cherednik_apply<C: Coeff>(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    f: &LaurentPoly<C>,
) -> Result<LaurentPoly<C>> {
    xi.check(rs)?;
    check_laurent(rs, f)?;
    let mut out = f.deriv(rs, xi.coords());
    for (_, c, q) in reflection_quotients(rs, k, xi, f)? {
        out = out.add(&q.scale_rational(&c));
    }
    let rho = rs.inner_weight_vec(&rs.rho_k(k), xi.coords()) / int(2);
    Ok(out.sub(&f.scale_rational(&rho)))
}

/// The second-order operator on invariant Laurent polynomials,
/// `L̂ = Δ + Σ_{α>0} k_α (1 + X^{-α})/(1 - X^{-α}) ∂_α`, where `Δ` multiplies
/// `X^λ` by `<λ, λ>`. Its eigenvalue on `P_λ` is `<λ, λ + 2ρ(k)>`.
pub fn l_apply<C: Coeff>(rs: &RootSystem, k: &MultiplicityFn, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    check_laurent(rs, f)?;
    if !f.is_invariant(rs) {
        return Err(Error::NotInvariant);
    }
    let mut out = LaurentPoly::from_terms(
        rs.rank(),
        f.terms()
            .map(|(w, c)| (*w, c.mul_ref(&C::from_rational(&rs.inner_weights(w, w))))),
    );
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let ka = k.of(r);
        if ka == 0 {
            continue;
        }
        let d = f.deriv_weight(rs, &r.weight);
        let term = d.add(&d.shift(&-r.weight)).div_exact(rs, idx)?;
        out = out.add(&term.scale_rational(&int(ka as i64)));
    }
    Ok(out)
}

/// `Σ_{η ∈ Wξ} (D_η)^j f` with `D` the Heckman operator, for invariant `f`.
pub fn symmetrized_power<C: Coeff>(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    j: u32,
    f: &LaurentPoly<C>,
) -> Result<LaurentPoly<C>> {
    xi.check(rs)?;
    check_laurent(rs, f)?;
    if !f.is_invariant(rs) {
        return Err(Error::NotInvariant);
    }
    let mut out = LaurentPoly::zero(rs.rank());
    for eta in xi.orbit(rs) {
        let mut g = f.clone();
        for _ in 0..j {
            g = heckman_apply(rs, k, &eta, &g)?;
        }
        out = out.add(&g);
    }
    if !out.is_invariant(rs) {
        return Err(Error::Consistency(
            "symmetrized Heckman power left the invariant subspace".into(),
        ));
    }
    Ok(out)
}
