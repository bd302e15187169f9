use serde::Serialize;
use serde_json::Value;

use super::{eigenvalue, OrthoBasis, OrthoField, OrthoPoly};
use crate::error::Result;
use crate::exactnum::{format_rational, Rational};
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityEntry {
    pub lambda: Vec<i32>,
    pub mu: Vec<i32>,
    pub comparable: bool,
    pub value: Value,
    pub zero: bool,
}

/// `<P_λ, P_μ>` for all pairs of a set of dominant weights.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityReport {
    pub root_system: String,
    pub k: MultiplicityFn,
    pub family: super::Family,
    pub weights: Vec<Vec<i32>>,
    pub entries: Vec<OrthogonalityEntry>,
    pub off_diagonal_pairs: usize,
    pub incomparable_pairs: usize,
    pub nonzero_off_diagonal: usize,
    pub nonpositive_norms: usize,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.nonzero_off_diagonal == 0 && self.nonpositive_norms == 0
    }
}

impl<F: OrthoField> OrthoBasis<F> {
    /// Build `P_λ` for each listed weight and tabulate all pairings,
    /// including pairs that are incomparable in the dominance order.
    pub fn orthogonality_report(
        &self,
        lambdas: &[Weight],
        positive: impl Fn(&F) -> bool,
    ) -> Result<(Vec<OrthoPoly<F>>, OrthogonalityReport)> {
        let polys = self.polys(lambdas)?;
        let table = self.pairing_table(&polys)?;
        let rs = self.root_system();
        let mut entries = Vec::new();
        let (mut off, mut incomparable, mut nonzero, mut nonpositive) = (0, 0, 0, 0);
        for (a, la) in lambdas.iter().enumerate() {
            for (b, lb) in lambdas.iter().enumerate() {
                let v = &table[a][b];
                let comparable = rs.dominance_leq(la, lb) || rs.dominance_leq(lb, la);
                if a == b {
                    if !positive(v) {
                        nonpositive += 1;
                    }
                } else {
                    off += 1;
                    if !comparable {
                        incomparable += 1;
                    }
                    if !v.is_zero() {
                        nonzero += 1;
                    }
                }
                entries.push(OrthogonalityEntry {
                    lambda: la.coords().to_vec(),
                    mu: lb.coords().to_vec(),
                    comparable,
                    value: v.to_json(),
                    zero: v.is_zero(),
                });
            }
        }
        let report = OrthogonalityReport {
            root_system: rs.name(),
            k: *self.multiplicity(),
            family: F::FAMILY,
            weights: lambdas.iter().map(|w| w.coords().to_vec()).collect(),
            entries,
            off_diagonal_pairs: off,
            incomparable_pairs: incomparable,
            nonzero_off_diagonal: nonzero,
            nonpositive_norms: nonpositive,
        };
        Ok((polys, report))
    }
}

/// Two readings of the defining orthogonality condition, tested on every
/// pair `(P_λ, m_μ)` of a basis:
///
/// * `literal`: `<P_λ, m_μ> = 0` whenever `μ ⋠ λ`;
/// * `swapped`: `<P_λ, m_μ> = 0` whenever `λ ⋠ μ`.
#[derive(Debug, Clone, Serialize)]
pub struct PrintedConditionReport {
    pub pairs_checked: usize,
    pub literal_conditions: usize,
    pub literal_violations: usize,
    pub literal_witness: Option<(Vec<i32>, Vec<i32>, Value)>,
    pub swapped_conditions: usize,
    pub swapped_violations: usize,
}

pub fn printed_condition_report<F: OrthoField>(
    basis: &OrthoBasis<F>,
    polys: &[OrthoPoly<F>],
) -> Result<PrintedConditionReport> {
    let rs = basis.root_system();
    let mut rep = PrintedConditionReport {
        pairs_checked: 0,
        literal_conditions: 0,
        literal_violations: 0,
        literal_witness: None,
        swapped_conditions: 0,
        swapped_violations: 0,
    };
    for p in polys {
        let vals = basis.orbit_pairings(p)?;
        for (mu, v) in basis.weights().iter().zip(&vals) {
            rep.pairs_checked += 1;
            if !rs.dominance_leq(mu, &p.lambda) {
                rep.literal_conditions += 1;
                if !v.is_zero() {
                    rep.literal_violations += 1;
                    if rep.literal_witness.is_none() {
                        rep.literal_witness =
                            Some((p.lambda.coords().to_vec(), mu.coords().to_vec(), v.to_json()));
                    }
                }
            }
            if !rs.dominance_leq(&p.lambda, mu) {
                rep.swapped_conditions += 1;
                if !v.is_zero() {
                    rep.swapped_violations += 1;
                }
            }
        }
    }
    Ok(rep)
}

/// Pairs `μ ≺ λ` whose second-order eigenvalues coincide; a collision means
/// the eigen-equation alone does not pin down `P_λ` inside its lower ideal.
#[derive(Debug, Clone, Serialize)]
pub struct CollisionReport {
    pub weights_checked: usize,
    pub collisions: Vec<(Vec<i32>, Vec<i32>, String)>,
}

pub fn collision_report(
    rs: &RootSystem,
    k: &MultiplicityFn,
    lambdas: &[Weight],
) -> Result<CollisionReport> {
    let mut collisions = Vec::new();
    for lam in lambdas {
        let e: Rational = eigenvalue(rs, lam, k);
        for mu in rs.lower_ideal(lam)? {
            if mu != *lam && eigenvalue(rs, &mu, k) == e {
                collisions.push((lam.coords().to_vec(), mu.coords().to_vec(), format_rational(&e)));
            }
        }
    }
    Ok(CollisionReport {
        weights_checked: lambdas.len(),
        collisions,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NormEntry {
    pub lambda: Vec<i32>,
    pub norm: Value,
    pub ratio: Value,
    pub positive: bool,
}

/// `CT(δ)` and, for every dominant `λ` up to a height, `<P_λ, P_λ>` and
/// `<P_λ, P_λ> / CT(δ)`.
#[derive(Debug, Clone, Serialize)]
pub struct NormTable {
    pub root_system: String,
    pub k: MultiplicityFn,
    pub family: super::Family,
    pub ct: Value,
    pub entries: Vec<NormEntry>,
    pub all_positive: bool,
}

pub fn norm_table<F: OrthoField>(
    rs: &RootSystem,
    k: &MultiplicityFn,
    max_height: u32,
    exec: crate::par::Exec,
    positive: impl Fn(&F) -> bool,
) -> Result<NormTable> {
    let lambdas = rs.dominant_weights(max_height);
    let basis = OrthoBasis::<F>::new(rs, k, &lambdas, exec)?;
    let ct = F::from_ring(&basis.delta().constant_term());
    let polys = basis.polys(&lambdas)?;
    let mut entries = Vec::with_capacity(polys.len());
    let mut all_positive = positive(&ct);
    for p in &polys {
        let norm = basis.pairing(p, p)?;
        let ratio = norm.div_ref(&ct).ok_or(crate::error::Error::DivisionByZero)?;
        let ok = positive(&norm) && positive(&ratio);
        all_positive &= ok;
        entries.push(NormEntry {
            lambda: p.lambda.coords().to_vec(),
            norm: norm.to_json(),
            ratio: ratio.to_json(),
            positive: ok,
        });
    }
    Ok(NormTable {
        root_system: rs.name(),
        k: *k,
        family: F::FAMILY,
        ct: ct.to_json(),
        entries,
        all_positive,
    })
}
