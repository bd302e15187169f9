use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::laurent::{CoeffFormat, LaurentJson, TermJson};

/// Polynomial on `V` in the coordinates `y_i = <α_i, x>` (one per simple
/// root), with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmbientPoly {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl AmbientPoly {
    pub fn zero(rank: usize) -> Self {
        AmbientPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(vec![0; rank], c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The coordinate `y_i`.
    pub fn var(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// The linear form `Σ_j l_j y_j`.
    pub fn linear(l: &[Rational]) -> Self {
        let mut p = Self::zero(l.len());
        for (j, c) in l.iter().enumerate() {
            let mut e = vec![0; l.len()];
            e[j] = 1;
            p.add_term(e, c);
        }
        p
    }

    /// Every monomial `y^e` with `|e| ≤ degree`, in graded order.
    pub fn monomials_up_to(rank: usize, degree: u32) -> Vec<AmbientPoly> {
        let mut out = Vec::new();
        for d in 0..=degree {
            let mut e = vec![0u32; rank];
            compositions(d, 0, &mut e, &mut |e| {
                out.push(Self::monomial(e.to_vec(), Rational::one()))
            });
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Vec<u32>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.rank);
        }
        AmbientPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// `∂/∂y_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, &(c * int(e[i] as i64)));
            }
        }
        out
    }

    /// Substitute `y_i ↦ Σ_j forms[i][j] y_j`.
    pub fn substitute_linear(&self, forms: &[Vec<Rational>]) -> Self {
        let lin: Vec<AmbientPoly> = forms.iter().map(|f| Self::linear(f)).collect();
        let mut powers: HashMap<(usize, u32), AmbientPoly> = HashMap::new();
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let mut term = Self::constant(self.rank, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, k))
                    .or_insert_with(|| (0..k).fold(Self::one(self.rank), |acc, _| acc.mul(&lin[i])));
                term = term.mul(p);
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact quotient by the linear form `Σ_j l_j y_j`.
    ///
    /// Eliminates the first variable with a nonzero coefficient; the
    /// remainder is what is left once that variable no longer occurs.
    pub fn div_linear(&self, l: &[Rational]) -> Result<Self> {
        let p = l
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::NotDivisible("division by the zero form".into()))?;
        let lead_inv = l[p].recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        loop {
            let Some((e, c)) = rem
                .terms
                .iter()
                .filter(|(e, _)| e[p] > 0)
                .max_by_key(|(e, _)| e[p])
                .map(|(e, c)| (e.clone(), c.clone()))
            else {
                break;
            };
            let mut qe = e.clone();
            qe[p] -= 1;
            let t = Self::monomial(qe, &c * &lead_inv);
            rem = rem.sub(&t.mul(&Self::linear(l)));
            quot = quot.add(&t);
        }
        if !rem.is_zero() {
            return Err(Error::NotDivisible(format!(
                "nonzero remainder dividing by the linear form {l:?}"
            )));
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.iter().map(|&x| x as i32).collect(),
                    coeff: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &LaurentJson, rank: usize) -> Result<Self> {
        let mut p = Self::zero(rank);
        for t in &j.terms {
            if t.exp.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: t.exp.len(),
                });
            }
            if t.exp.iter().any(|&x| x < 0) {
                return Err(Error::InvalidArgument(
                    "polynomial exponents must be nonnegative".into(),
                ));
            }
            let e = t.exp.iter().map(|&x| x as u32).collect();
            p.add_term(e, &Rational::from_json(&t.coeff)?);
        }
        Ok(p)
    }
}

fn compositions(rest: u32, i: usize, e: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if i + 1 == e.len() {
        e[i] = rest;
        f(e);
        return;
    }
    for k in (0..=rest).rev() {
        e[i] = k;
        compositions(rest - k, i + 1, e, f);
    }
    e[i] = 0;
}

impl std::fmt::Debug for AmbientPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*y^{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
