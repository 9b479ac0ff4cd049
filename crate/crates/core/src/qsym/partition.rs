use std::fmt;
use std::str::FromStr;

use super::composition::{parse_parts, Composition};
use crate::error::{Error, Result};

/// A partition `λ ⊢ n` with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not a partition (parts must be positive and weakly decreasing)"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `λᵀ`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `δₙ = (n−1, n−2, …, 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition((1..n).rev().collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition::from_parts_unchecked(self.0.clone())
    }

    /// Every `λ ⊢ n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn all_strict(n: usize) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(|p| p.is_strict()).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_composition(), f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all_strict(6).len(), 4);
        let l: Partition = "[3,1]".parse().unwrap();
        assert_eq!(l.conjugate().to_string(), "[2,1,1]");
        assert_eq!(Partition::staircase(4).to_string(), "[3,2,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(Partition::all(0), vec![Partition::default()]);
    }
}
