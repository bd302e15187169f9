use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_RANK: usize = 4;

/// Integral weight in fundamental-weight coordinates.
///
/// Ordered graded-lexicographically: first by coordinate sum, then
/// lexicographically. This is the iteration order of every sparse map keyed
/// by weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight {
    rank: u8,
    c: [i32; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i32]) -> Self {
        assert!(
            !coords.is_empty() && coords.len() <= MAX_RANK,
            "weight rank must be 1..={MAX_RANK}"
        );
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight {
            rank: coords.len() as u8,
            c,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(&vec![0; rank])
    }

    /// The `i`-th fundamental weight.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.c[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.c[..self.rank as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0)
    }

    /// Sum of fundamental coordinates.
    pub fn height(&self) -> i64 {
        self.coords().iter().map(|&x| x as i64).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }

    pub fn scaled(&self, s: i32) -> Self {
        let mut out = *self;
        for x in &mut out.c[..self.rank as usize] {
            *x *= s;
        }
        out
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &Weight, s: i32) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = *self;
        for i in 0..self.rank as usize {
            out.c[i] += s * other.c[i];
        }
        out
    }

    pub fn max_abs(&self) -> i32 {
        self.coords().iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.height().cmp(&other.height()))
            .then_with(|| self.coords().cmp(other.coords()))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        self.add_scaled(&rhs, 1)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self.add_scaled(&rhs, -1)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        if v.is_empty() || v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("weight rank must be 1..=4"));
        }
        Ok(Weight::new(&v))
    }
}
