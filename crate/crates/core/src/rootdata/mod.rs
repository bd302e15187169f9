//! Reduced classical root systems (types A, B, C, D, rank at most 4), their
//! Weyl group action on the weight lattice, dominance order and
//! multiplicity functions.
//!
//! Weights are integer vectors in the fundamental-weight basis and roots are
//! integer vectors in the simple-root basis; the Cartan matrix converts
//! between them, so no irrational coordinates ever appear.
//!
//! Normalization: long roots have squared length 4 (for A and D every root
//! is long), short roots squared length 2. For `A1` this realizes the root
//! system as `{±2} ⊂ R` with the fundamental weight equal to `1`, so
//! `<n ϖ, n ϖ + k α> = n(n + 2k)`.

mod weight;
mod weyl;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::linalg;

pub use weight::{Weight, MAX_RANK};
pub use weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl RootType {
    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
        }
    }
}

/// Length class of a root: `1` for long roots (all roots of A and D),
/// `2` for short roots.
pub type RootClass = u8;
pub const LONG: RootClass = 1;
pub const SHORT: RootClass = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coordinates in the simple-root basis (all nonnegative).
    pub simple: Vec<i64>,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
    /// `<λ, α^∨> = Σ λ_i coroot_i` for a weight `λ`.
    pub coroot: Vec<i64>,
    /// `<α, α>`.
    pub norm: Rational,
    pub class: RootClass,
}

#[derive(Clone)]
pub struct RootSystem {
    label: RootType,
    rank: usize,
    /// `cartan[i][j] = <α_i, α_j^∨>`.
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Rational>>,
    simple_norms: Vec<i64>,
    simple_gram: Vec<Vec<Rational>>,
    fund_gram: Vec<Vec<Rational>>,
    roots: Vec<PositiveRoot>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.name())
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.rank == other.rank
    }
}

/// Multiplicity function: a nonnegative integer per root-length class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicityFn {
    pub long: u32,
    pub short: u32,
}

impl MultiplicityFn {
    pub fn uniform(k: u32) -> Self {
        MultiplicityFn { long: k, short: k }
    }

    pub fn new(long: u32, short: u32) -> Self {
        MultiplicityFn { long, short }
    }

    /// From a list `[k_long]` or `[k_long, k_short]`.
    pub fn from_slice(ks: &[u32]) -> Result<Self> {
        match ks {
            [k] => Ok(Self::uniform(*k)),
            [l, s] => Ok(Self::new(*l, *s)),
            _ => Err(Error::InvalidArgument(format!(
                "multiplicity needs one or two values, got {}",
                ks.len()
            ))),
        }
    }

    pub fn of_class(&self, class: RootClass) -> u32 {
        if class == SHORT {
            self.short
        } else {
            self.long
        }
    }

    pub fn of(&self, root: &PositiveRoot) -> u32 {
        self.of_class(root.class)
    }

    pub fn is_zero(&self) -> bool {
        self.long == 0 && self.short == 0
    }

    pub fn max(&self) -> u32 {
        self.long.max(self.short)
    }
}

impl fmt::Display for MultiplicityFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.long == self.short {
            write!(f, "{}", self.long)
        } else {
            write!(f, "({},{})", self.long, self.short)
        }
    }
}

pub fn build_root_system(label: RootType, rank: usize) -> Result<RootSystem> {
    RootSystem::build(label, rank)
}

impl RootSystem {
    pub fn build(label: RootType, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedRootSystem {
            label: label.letter(),
            rank,
        };
        let ok = match label {
            RootType::A => (1..=4).contains(&rank),
            RootType::B | RootType::C => (2..=4).contains(&rank),
            RootType::D => (3..=4).contains(&rank),
        };
        if !ok {
            return Err(unsupported());
        }
        let n = rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
            if i + 1 < n {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        let mut simple_norms = vec![4i64; n];
        match label {
            RootType::A => {}
            RootType::B => {
                cartan[n - 2][n - 1] = -2;
                simple_norms[n - 1] = 2;
            }
            RootType::C => {
                cartan[n - 1][n - 2] = -2;
                for x in simple_norms.iter_mut().take(n - 1) {
                    *x = 2;
                }
            }
            RootType::D => {
                cartan[n - 2][n - 1] = 0;
                cartan[n - 1][n - 2] = 0;
                cartan[n - 3][n - 1] = -1;
                cartan[n - 1][n - 3] = -1;
            }
        }
        let simple_gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| int(cartan[i][j] * simple_norms[j]) / int(2))
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Rational>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let inv_cartan = linalg::inverse(&cartan_q).ok_or_else(unsupported)?;
        let fund_gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &inv_cartan[j][i] * int(simple_norms[i]) / int(2))
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            label,
            rank,
            cartan,
            inv_cartan,
            simple_norms,
            simple_gram,
            fund_gram,
            roots: Vec::new(),
        };
        rs.roots = rs.generate_positive_roots();
        rs.check_invariants()?;
        rs.verify_axioms()?;
        Ok(rs)
    }

    /// Parse labels like `"C2"` or `"a3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty root system label".into()))?;
        let label = match letter.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            other => {
                return Err(Error::UnsupportedRootSystem {
                    label: other,
                    rank: 0,
                })
            }
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad root system label {s:?}")))?;
        Self::build(label, rank)
    }

    pub fn label(&self) -> RootType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label.letter(), self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_gram(&self) -> &[Vec<Rational>] {
        &self.simple_gram
    }

    pub fn fund_gram(&self) -> &[Vec<Rational>] {
        &self.fund_gram
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    /// Number of distinct root lengths.
    pub fn num_classes(&self) -> usize {
        let classes: BTreeSet<_> = self.roots.iter().map(|r| r.class).collect();
        classes.len()
    }

    /// `α_i` in fundamental coordinates (row `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        let coords: Vec<i32> = self.cartan[i].iter().map(|&x| x as i32).collect();
        Weight::new(&coords)
    }

    fn root_from_simple(&self, simple: &[i64]) -> PositiveRoot {
        let n = self.rank;
        let mut w = vec![0i32; n];
        for (i, &c) in simple.iter().enumerate() {
            for j in 0..n {
                w[j] += (c * self.cartan[i][j]) as i32;
            }
        }
        let norm = self.inner_roots(simple, simple);
        // α^∨ = Σ_i c_i |α_i|^2/|α|^2 α_i^∨
        let coroot = simple
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let x = int(c * self.simple_norms[i]) / &norm;
                debug_assert!(x.is_integer());
                x.to_integer().try_into().expect("small coroot")
            })
            .collect();
        PositiveRoot {
            simple: simple.to_vec(),
            weight: Weight::new(&w),
            coroot,
            norm,
            class: LONG,
        }
    }

    fn generate_positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.rank;
        let mut seen: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        for e in &queue {
            seen.insert((1, e.clone()));
        }
        while let Some(beta) = queue.pop() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[j][i]).sum();
                let mut img = beta.clone();
                img[i] -= pairing;
                if img.iter().all(|&x| x >= 0) && img.iter().any(|&x| x > 0) {
                    let key = (img.iter().sum::<i64>(), img.clone());
                    if seen.insert(key) {
                        queue.push(img);
                    }
                }
            }
        }
        let mut roots: Vec<PositiveRoot> = seen
            .into_iter()
            .map(|(_, s)| self.root_from_simple(&s))
            .collect();
        let max_norm = roots.iter().map(|r| r.norm.clone()).max().expect("nonempty");
        for r in &mut roots {
            r.class = if r.norm == max_norm { LONG } else { SHORT };
        }
        roots
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.rank;
        let fail = |m: &str| Err(Error::Consistency(format!("{}: {m}", self.name())));
        for i in 0..n {
            if self.cartan[i][i] != 2 {
                return fail("Cartan diagonal must be 2");
            }
            for j in 0..n {
                if i != j && self.cartan[i][j] > 0 {
                    return fail("Cartan off-diagonal must be <= 0");
                }
                if self.simple_gram[i][j] != self.simple_gram[j][i] {
                    return fail("simple Gram matrix not symmetric");
                }
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<Rational>> = self.simple_gram[..k]
                .iter()
                .map(|r| r[..k].to_vec())
                .collect();
            if !determinant(&minor).is_positive() {
                return fail("simple Gram matrix not positive definite");
            }
        }
        if self.num_classes() > 2 {
            return fail("more than two root lengths");
        }
        Ok(())
    }

    /// Exhaustive check of the two root-system axioms on all pairs of roots:
    /// `s_α(β) ∈ R` and `2<β,α>/<α,α> ∈ Z`.
    pub fn verify_axioms(&self) -> Result<()> {
        let all = self.all_roots_simple();
        let set: HashSet<&Vec<i64>> = all.iter().collect();
        for a in &all {
            let aa = self.inner_roots(a, a);
            for b in &all {
                let ratio = int(2) * self.inner_roots(b, a) / &aa;
                if !ratio.is_integer() {
                    return Err(Error::Consistency(format!(
                        "{}: 2<β,α>/<α,α> = {ratio} not integral for α={a:?}, β={b:?}",
                        self.name()
                    )));
                }
                let m: i64 = ratio.to_integer().try_into().expect("small");
                let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - m * y).collect();
                if !set.contains(&img) {
                    return Err(Error::Consistency(format!(
                        "{}: s_α(β) = {img:?} is not a root",
                        self.name()
                    )));
                }
            }
        }
        Ok(())
    }

    /// All roots (positive and negative) in simple-root coordinates.
    pub fn all_roots_simple(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .flat_map(|r| [r.simple.clone(), r.simple.iter().map(|x| -x).collect()])
            .collect()
    }

    /// `<λ, α^∨>` for the positive root with index `root`.
    pub fn pairing(&self, lambda: &Weight, root: usize) -> i32 {
        let r = &self.roots[root];
        lambda
            .coords()
            .iter()
            .zip(&r.coroot)
            .map(|(&x, &c)| x * c as i32)
            .sum()
    }

    /// `s_α(λ)` for the positive root with index `root`.
    pub fn reflect(&self, root: usize, lambda: &Weight) -> Weight {
        let p = self.pairing(lambda, root);
        lambda.add_scaled(&self.roots[root].weight, -p)
    }

    /// `s_i(λ) = λ - λ_i α_i`.
    pub fn reflect_simple(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.coords()[i];
        if li == 0 {
            return *lambda;
        }
        lambda.add_scaled(&self.simple_root(i), -li)
    }

    /// Reflection of a rational vector in fundamental coordinates.
    pub fn reflect_rational(&self, root: usize, xi: &[Rational]) -> Vec<Rational> {
        let r = &self.roots[root];
        let p: Rational = xi.iter().zip(&r.coroot).map(|(x, &c)| x * int(c)).sum();
        xi.iter()
            .zip(r.weight.coords())
            .map(|(x, &a)| x - &p * int(a as i64))
            .collect()
    }

    pub fn reflect_simple_rational(&self, i: usize, xi: &[Rational]) -> Vec<Rational> {
        let li = xi[i].clone();
        xi.iter()
            .zip(&self.cartan[i])
            .map(|(x, &a)| x - &li * int(a))
            .collect()
    }

    /// Inner product of two vectors in fundamental coordinates.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * yj * &self.fund_gram[i][j];
                }
            }
        }
        acc
    }

    pub fn inner_weights(&self, x: &Weight, y: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (i, &xi) in x.coords().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coords().iter().enumerate() {
                if yj != 0 {
                    acc += &self.fund_gram[i][j] * int(xi as i64 * yj as i64);
                }
            }
        }
        acc
    }

    /// `<λ, ξ>` for a weight and a rational vector.
    pub fn inner_weight_vec(&self, x: &Weight, xi: &[Rational]) -> Rational {
        let xq: Vec<Rational> = x.coords().iter().map(|&c| int(c as i64)).collect();
        self.inner(&xq, xi)
    }

    /// Inner product of two vectors in simple-root coordinates.
    pub fn inner_roots(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                if ai != 0 && bj != 0 {
                    acc += &self.simple_gram[i][j] * int(ai * bj);
                }
            }
        }
        acc
    }

    /// Express a weight in simple-root coordinates (rational in general).
    pub fn to_simple_coords(&self, w: &Weight) -> Vec<Rational> {
        (0..self.rank)
            .map(|j| {
                w.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| &self.inv_cartan[i][j] * int(x as i64))
                    .sum()
            })
            .collect()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    /// The unique dominant weight in the Weyl orbit of `λ`.
    pub fn dominant_rep(&self, lambda: &Weight) -> Weight {
        let mut w = *lambda;
        while let Some(i) = w.coords().iter().position(|&x| x < 0) {
            w = self.reflect_simple(i, &w);
        }
        w
    }

    /// Weyl orbit of `λ`, sorted.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(*lambda);
        let mut stack = vec![*lambda];
        while let Some(w) = stack.pop() {
            for i in 0..self.rank {
                let img = self.reflect_simple(i, &w);
                if seen.insert(img) {
                    stack.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `μ ⪯ λ`: `λ - μ` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        let diff = *lambda - *mu;
        self.to_simple_coords(&diff)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// All dominant `μ ⪯ λ`, ordered by decreasing height of `λ - μ`
    /// (ties broken lexicographically), so `λ` comes last.
    pub fn lower_ideal(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords().to_vec()));
        }
        // Every dominant μ ⪯ λ satisfies w0 λ ⪯ μ, bounding the search box.
        let lowest = -self.dominant_rep(&-*lambda);
        let span = self.to_simple_coords(&(*lambda - lowest));
        let bounds: Vec<i64> = span
            .iter()
            .map(|c| c.to_integer().try_into().expect("small"))
            .collect();
        let mut found: Vec<(i64, Weight)> = Vec::new();
        let mut c = vec![0i64; self.rank];
        loop {
            let mut mu = *lambda;
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    mu = mu.add_scaled(&self.simple_root(i), -(ci as i32));
                }
            }
            if mu.is_dominant() {
                found.push((c.iter().sum(), mu));
            }
            // odometer increment
            let mut i = 0;
            loop {
                if i == self.rank {
                    found.sort_by(|(ha, a), (hb, b)| hb.cmp(ha).then(a.coords().cmp(b.coords())));
                    return Ok(found.into_iter().map(|(_, w)| w).collect());
                }
                c[i] += 1;
                if c[i] <= bounds[i] {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// Dominant weights with coordinate sum at most `max_height`, sorted.
    pub fn dominant_weights(&self, max_height: u32) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut c = vec![0i32; self.rank];
        loop {
            if c.iter().map(|&x| x as u32).sum::<u32>() <= max_height {
                out.push(Weight::new(&c));
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort();
                    return out;
                }
                c[i] += 1;
                if c[i] as u32 <= max_height {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// `Σ_{α>0} k_α α` in fundamental coordinates (twice `ρ(k)`).
    pub fn rho_k(&self, k: &MultiplicityFn) -> Weight {
        let mut acc = Weight::zero(self.rank);
        for r in &self.roots {
            acc = acc.add_scaled(&r.weight, k.of(r) as i32);
        }
        acc
    }

    /// One reduced word for every element of the Weyl group.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        weyl::enumerate(self)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn info(&self) -> RootSystemInfo {
        let s = |m: &[Vec<Rational>]| -> Vec<Vec<String>> {
            m.iter()
                .map(|r| r.iter().map(crate::exactnum::format_rational).collect())
                .collect()
        };
        RootSystemInfo {
            label: self.name(),
            rank: self.rank,
            cartan: self.cartan.clone(),
            simple_gram: s(&self.simple_gram),
            fund_gram: s(&self.fund_gram),
            positive_roots: self.roots.iter().map(|r| r.simple.clone()).collect(),
            root_class: self.roots.iter().map(|r| r.class).collect(),
            root_norms: self
                .roots
                .iter()
                .map(|r| crate::exactnum::format_rational(&r.norm))
                .collect(),
        }
    }
}

/// JSON description of a root system; positive roots in graded-lex order of
/// their simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemInfo {
    #[serde(rename = "type")]
    pub label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_gram: Vec<Vec<String>>,
    pub fund_gram: Vec<Vec<String>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub root_class: Vec<RootClass>,
    pub root_norms: Vec<String>,
}

fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = int(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests;
