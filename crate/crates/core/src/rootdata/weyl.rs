use std::collections::{HashSet, VecDeque};

use crate::exactnum::Rational;

use super::{RootSystem, Weight};

/// A Weyl group element stored as a reduced word `s_{i1} s_{i2} … s_{ik}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        WeylElement { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn act(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(*lambda, |w, &i| rs.reflect_simple(i, &w))
    }

    pub fn act_rational(&self, rs: &RootSystem, xi: &[Rational]) -> Vec<Rational> {
        self.word
            .iter()
            .rev()
            .fold(xi.to_vec(), |w, &i| rs.reflect_simple_rational(i, &w))
    }
}

/// Breadth-first search over the (free) orbit of `ρ`, which yields a reduced
/// word for each group element.
pub(super) fn enumerate(rs: &RootSystem) -> Vec<WeylElement> {
    let rho = Weight::new(&vec![1; rs.rank()]);
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(rho);
    queue.push_back((rho, WeylElement::identity()));
    while let Some((img, w)) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = rs.reflect_simple(i, &img);
            if seen.insert(next) {
                let mut word = Vec::with_capacity(w.word.len() + 1);
                word.push(i);
                word.extend_from_slice(&w.word);
                queue.push_back((next, WeylElement { word }));
            }
        }
        out.push(w);
    }
    out
}
