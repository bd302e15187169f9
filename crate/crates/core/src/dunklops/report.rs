use std::collections::HashMap;

use serde::Serialize;

use super::{
    cherednik_apply, heckman_apply, l_apply, rational_dunkl_apply, symmetrized_power, AmbientPoly,
    DirectionalSymbol, OperatorKind,
};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, Rational};
use crate::laurent::LaurentPoly;
use crate::orthopoly::{eigenvalue, monomial_sym, OrthoPoly};
use crate::par::Exec;
use crate::rootdata::{MultiplicityFn, RootSystem, Weight};

/// Every weight with all fundamental coordinates in `[-radius, radius]`.
pub fn box_weights(rank: usize, radius: i32) -> Vec<Weight> {
    let side = (2 * radius + 1) as usize;
    let total = side.pow(rank as u32);
    (0..total)
        .map(|mut n| {
            let mut c = vec![0i32; rank];
            for x in c.iter_mut() {
                *x = (n % side) as i32 - radius;
                n /= side;
            }
            Weight::new(&c)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutatorWitness {
    pub xi: String,
    pub eta: String,
    /// Exponent of the basis monomial the commutator fails on.
    pub input: Vec<i64>,
    pub nonzero_terms: usize,
}

/// Result of applying `[D_ξ, D_η]` to every basis element, for every pair
/// of distinct fundamental directions.
#[derive(Debug, Clone, Serialize)]
pub struct CommutatorReport {
    pub operator: OperatorKind,
    pub root_system: String,
    pub k: MultiplicityFn,
    pub basis_size: usize,
    pub direction_pairs: usize,
    pub checks: usize,
    pub failures: usize,
    pub witness: Option<CommutatorWitness>,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn direction_pairs(rank: usize) -> Vec<(DirectionalSymbol, DirectionalSymbol)> {
    let mut out = Vec::new();
    for a in 0..rank {
        for b in a + 1..rank {
            out.push((
                DirectionalSymbol::fundamental(rank, a),
                DirectionalSymbol::fundamental(rank, b),
            ));
        }
    }
    out
}

fn collect_report(
    operator: OperatorKind,
    rs: &RootSystem,
    k: &MultiplicityFn,
    basis_size: usize,
    pairs: &[(DirectionalSymbol, DirectionalSymbol)],
    results: Vec<Result<Option<CommutatorWitness>>>,
) -> Result<CommutatorReport> {
    let checks = results.len();
    let mut failures = 0;
    let mut witness = None;
    for r in results {
        if let Some(w) = r? {
            failures += 1;
            witness.get_or_insert(w);
        }
    }
    Ok(CommutatorReport {
        operator,
        root_system: rs.name(),
        k: *k,
        basis_size,
        direction_pairs: pairs.len(),
        checks,
        failures,
        witness,
    })
}

/// Image of a polynomial under a linear operator known on monomials.
fn apply_tabulated(
    p: &AmbientPoly,
    index: &HashMap<Vec<u32>, usize>,
    table: &[AmbientPoly],
) -> Option<AmbientPoly> {
    let mut out = AmbientPoly::zero(p.rank());
    for (e, c) in p.terms() {
        out = out.add(&table[*index.get(e)?].scale(c));
    }
    Some(out)
}

/// `[D_ξ, D_η] y^e` for all monomials of degree at most `max_degree`.
///
/// Each operator lowers degree, so the basis is closed under all of them;
/// the images of the basis monomials are tabulated once per direction and
/// the commutators are assembled from the tables.
pub fn commutator_report_rational(
    rs: &RootSystem,
    k: &MultiplicityFn,
    max_degree: u32,
    exec: Exec,
) -> Result<CommutatorReport> {
    let basis = AmbientPoly::monomials_up_to(rs.rank(), max_degree);
    let index: HashMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.terms().next().expect("monomial").0.clone(), i))
        .collect();
    let dirs: Vec<DirectionalSymbol> = (0..rs.rank())
        .map(|i| DirectionalSymbol::fundamental(rs.rank(), i))
        .collect();
    let jobs: Vec<(usize, usize)> = (0..dirs.len())
        .flat_map(|d| (0..basis.len()).map(move |b| (d, b)))
        .collect();
    let flat = exec
        .map(&jobs, |&(d, b)| rational_dunkl_apply(rs, k, &dirs[d], &basis[b]))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let tables: Vec<&[AmbientPoly]> = flat.chunks(basis.len()).collect();
    let pairs = direction_pairs(rs.rank());
    let jobs: Vec<(usize, usize, usize)> = (0..rs.rank())
        .flat_map(|a| (a + 1..rs.rank()).map(move |b| (a, b)))
        .flat_map(|(a, b)| (0..basis.len()).map(move |m| (a, b, m)))
        .collect();
    let results = exec.map(&jobs, |&(a, b, m)| {
        let not_closed = || Error::Consistency("operator raised the degree".into());
        let ab = apply_tabulated(&tables[b][m], &index, tables[a]).ok_or_else(not_closed)?;
        let ba = apply_tabulated(&tables[a][m], &index, tables[b]).ok_or_else(not_closed)?;
        let c = ab.sub(&ba);
        Ok((!c.is_zero()).then(|| CommutatorWitness {
            xi: dirs[a].to_string(),
            eta: dirs[b].to_string(),
            input: basis[m]
                .terms()
                .next()
                .map(|(e, _)| e.iter().map(|&x| x as i64).collect())
                .unwrap_or_default(),
            nonzero_terms: c.terms().count(),
        }))
    });
    collect_report(OperatorKind::Rational, rs, k, basis.len(), &pairs, results)
}

fn apply_trig(
    kind: OperatorKind,
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    f: &LaurentPoly<Rational>,
) -> Result<LaurentPoly<Rational>> {
    match kind {
        OperatorKind::Heckman => heckman_apply(rs, k, xi, f),
        OperatorKind::Cherednik => cherednik_apply(rs, k, xi, f),
        OperatorKind::Rational => Err(Error::InvalidArgument(
            "expected a trigonometric operator".into(),
        )),
    }
}

/// `[D_ξ, D_η] X^μ` for every `μ` in the box of the given radius.
pub fn commutator_report_trig(
    rs: &RootSystem,
    k: &MultiplicityFn,
    kind: OperatorKind,
    radius: i32,
    exec: Exec,
) -> Result<CommutatorReport> {
    let basis = box_weights(rs.rank(), radius);
    let pairs = direction_pairs(rs.rank());
    let jobs: Vec<(usize, usize)> = (0..pairs.len())
        .flat_map(|p| (0..basis.len()).map(move |b| (p, b)))
        .collect();
    let results = exec.map(&jobs, |&(p, b)| {
        let (xi, eta) = &pairs[p];
        let f = LaurentPoly::<Rational>::x(basis[b]);
        let ab = apply_trig(kind, rs, k, xi, &apply_trig(kind, rs, k, eta, &f)?)?;
        let ba = apply_trig(kind, rs, k, eta, &apply_trig(kind, rs, k, xi, &f)?)?;
        let c = ab.sub(&ba);
        Ok((!c.is_zero()).then(|| CommutatorWitness {
            xi: xi.to_string(),
            eta: eta.to_string(),
            input: basis[b].coords().iter().map(|&x| x as i64).collect(),
            nonzero_terms: c.len(),
        }))
    });
    collect_report(kind, rs, k, basis.len(), &pairs, results)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugationWitness {
    pub word: Vec<usize>,
    pub xi: String,
    pub input: Vec<i32>,
}

/// Compares `w D_ξ w^{-1}` with `D_{wξ}` on the box monomials, for every
/// group element and every fundamental direction.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugationReport {
    pub operator: OperatorKind,
    pub root_system: String,
    pub checks: usize,
    pub mismatches: usize,
    pub witness: Option<ConjugationWitness>,
}

impl ConjugationReport {
    pub fn equivariant(&self) -> bool {
        self.mismatches == 0
    }
}

pub fn conjugation_report(
    rs: &RootSystem,
    k: &MultiplicityFn,
    kind: OperatorKind,
    radius: i32,
    exec: Exec,
) -> Result<ConjugationReport> {
    let group = rs.weyl_group();
    let basis = box_weights(rs.rank(), radius);
    let dirs: Vec<DirectionalSymbol> = (0..rs.rank())
        .map(|i| DirectionalSymbol::fundamental(rs.rank(), i))
        .collect();
    let mut jobs = Vec::new();
    for w in 0..group.len() {
        for d in 0..dirs.len() {
            for b in 0..basis.len() {
                jobs.push((w, d, b));
            }
        }
    }
    let results: Vec<Result<Option<ConjugationWitness>>> = exec.map(&jobs, |&(w, d, b)| {
        let g = &group[w];
        let xi = &dirs[d];
        let f = LaurentPoly::<Rational>::x(basis[b]);
        let lhs = apply_trig(kind, rs, k, xi, &f.weyl_act(rs, &g.inverse()))?.weyl_act(rs, g);
        let rhs = apply_trig(kind, rs, k, &xi.act(rs, g), &f)?;
        Ok((lhs != rhs).then(|| ConjugationWitness {
            word: g.word().to_vec(),
            xi: xi.to_string(),
            input: basis[b].coords().to_vec(),
        }))
    });
    let checks = results.len();
    let mut mismatches = 0;
    let mut witness = None;
    for r in results {
        if let Some(w) = r? {
            mismatches += 1;
            witness.get_or_insert(w);
        }
    }
    Ok(ConjugationReport {
        operator: kind,
        root_system: rs.name(),
        checks,
        mismatches,
        witness,
    })
}

/// `L̂ P = c P` with the measured scalar `c` against `<λ, λ + 2ρ(k)>`.
#[derive(Debug, Clone, Serialize)]
pub struct EigenCheck {
    pub lambda: Vec<i32>,
    pub proportional: bool,
    pub measured: Option<String>,
    pub expected: String,
}

impl EigenCheck {
    pub fn passed(&self) -> bool {
        self.proportional && self.measured.as_deref() == Some(self.expected.as_str())
    }
}

/// The scalar `c` with `g = c f`, if any.
fn proportionality(f: &LaurentPoly<Rational>, g: &LaurentPoly<Rational>) -> Option<Rational> {
    let (w, lead) = f.terms().last()?;
    let c = g.coeff(w) / lead;
    (f.scale_rational(&c) == *g).then_some(c)
}

pub fn eigen_check(rs: &RootSystem, p: &OrthoPoly<Rational>) -> Result<EigenCheck> {
    let f = p.to_laurent(rs);
    let g = l_apply(rs, &p.k, &f)?;
    let c = proportionality(&f, &g);
    Ok(EigenCheck {
        lambda: p.lambda.coords().to_vec(),
        proportional: c.is_some(),
        measured: c.as_ref().map(format_rational),
        expected: format_rational(&eigenvalue(rs, &p.lambda, &p.k)),
    })
}

/// Symmetrized Heckman powers `S_j = Σ_{η∈Wξ} D_η^j` on a family of
/// polynomials: each must be an eigenfunction, and the operators must
/// commute on the orbit sums spanning the same space.
#[derive(Debug, Clone, Serialize)]
pub struct JointEigenReport {
    pub root_system: String,
    pub k: MultiplicityFn,
    pub xi: String,
    pub powers: Vec<u32>,
    pub polys_checked: usize,
    /// `(λ, j, eigenvalue)`; `None` when `S_j P_λ` is not proportional.
    pub eigenvalues: Vec<(Vec<i32>, u32, Option<String>)>,
    pub commuting_checks: usize,
    pub commuting_failures: usize,
}

impl JointEigenReport {
    pub fn passed(&self) -> bool {
        self.commuting_failures == 0 && self.eigenvalues.iter().all(|e| e.2.is_some())
    }
}

pub fn joint_eigen_report(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    powers: &[u32],
    polys: &[OrthoPoly<Rational>],
    exec: Exec,
) -> Result<JointEigenReport> {
    let eig: Vec<Result<Vec<(Vec<i32>, u32, Option<String>)>>> = exec.map(polys, |p| {
        let f = p.to_laurent(rs);
        powers
            .iter()
            .map(|&j| {
                let g = symmetrized_power(rs, k, xi, j, &f)?;
                Ok((
                    p.lambda.coords().to_vec(),
                    j,
                    proportionality(&f, &g).as_ref().map(format_rational),
                ))
            })
            .collect()
    });
    let mut eigenvalues = Vec::new();
    for e in eig {
        eigenvalues.extend(e?);
    }
    let mut pairs = Vec::new();
    for (a, &ja) in powers.iter().enumerate() {
        for &jb in &powers[a + 1..] {
            for p in polys {
                pairs.push((ja, jb, p.lambda));
            }
        }
    }
    let comm: Vec<Result<bool>> = exec.map(&pairs, |&(ja, jb, lam)| {
        let m = monomial_sym::<Rational>(rs, &lam)?;
        let ab = symmetrized_power(rs, k, xi, ja, &symmetrized_power(rs, k, xi, jb, &m)?)?;
        let ba = symmetrized_power(rs, k, xi, jb, &symmetrized_power(rs, k, xi, ja, &m)?)?;
        Ok(ab == ba)
    });
    let mut failures = 0;
    for c in comm {
        if !c? {
            failures += 1;
        }
    }
    Ok(JointEigenReport {
        root_system: rs.name(),
        k: *k,
        xi: xi.to_string(),
        powers: powers.to_vec(),
        polys_checked: polys.len(),
        eigenvalues,
        commuting_checks: pairs.len(),
        commuting_failures: failures,
    })
}

/// Affine relation `s_λ = a e_λ + b` between the eigenvalue `s_λ` of the
/// symmetrized square and the eigenvalue `e_λ` of `L̂`, fitted on the first
/// two polynomials with distinct `e_λ` and tested on the rest.
#[derive(Debug, Clone, Serialize)]
pub struct CasimirRelation {
    pub a: String,
    pub b: String,
    pub points: usize,
    pub consistent: bool,
}

pub fn casimir_relation(
    rs: &RootSystem,
    k: &MultiplicityFn,
    xi: &DirectionalSymbol,
    polys: &[OrthoPoly<Rational>],
) -> Result<CasimirRelation> {
    let mut pts: Vec<(Rational, Rational)> = Vec::new();
    for p in polys {
        let f = p.to_laurent(rs);
        let g = symmetrized_power(rs, k, xi, 2, &f)?;
        let s = proportionality(&f, &g).ok_or_else(|| {
            Error::NotProportional(format!("symmetrized square on P_{}", p.lambda))
        })?;
        pts.push((eigenvalue(rs, &p.lambda, k), s));
    }
    let (e0, s0) = pts
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no polynomials supplied".into()))?;
    let (e1, s1) = pts
        .iter()
        .find(|(e, _)| *e != e0)
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("need two distinct eigenvalues".into()))?;
    let a = (&s1 - &s0) / (&e1 - &e0);
    let b = &s0 - &a * &e0;
    let consistent = pts.iter().all(|(e, s)| &a * e + &b == *s);
    Ok(CasimirRelation {
        a: format_rational(&a),
        b: format_rational(&b),
        points: pts.len(),
        consistent,
    })
}
