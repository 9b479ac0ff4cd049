use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer composition `α ⊨ n`. The empty composition has weight 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
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

    /// `I(α) = {α₁, α₁+α₂, …, α₁+⋯+α_{l−1}}`.
    pub fn subset(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::subset`] for a given weight.
    pub fn from_subset(n: usize, set: &BTreeSet<usize>) -> Result<Self> {
        if n == 0 {
            if !set.is_empty() {
                return Err(Error::InvalidInput("weight 0 admits only the empty set".into()));
            }
            return Ok(Composition::empty());
        }
        if set.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::InvalidInput(format!("subset must lie in 1..{}", n - 1)));
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &i in set.iter().chain(std::iter::once(&n)) {
            parts.push(i - prev);
            prev = i;
        }
        Ok(Composition(parts))
    }

    /// `I(α)` as a bitmask: bit `i−1` set iff `i ∈ I(α)`.
    pub fn mask(&self) -> u64 {
        let mut acc = 0;
        let mut m = 0u64;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            m |= 1 << (acc - 1);
        }
        m
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                parts.push(i - prev);
                prev = i;
            }
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// `αʳ`.
    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `αᶜ`, the composition with `I(αᶜ) = [n−1] − I(α)`.
    pub fn complement(&self) -> Self {
        let n = self.weight();
        if n == 0 {
            return Composition::empty();
        }
        let full = (1u64 << (n - 1)) - 1;
        Composition::from_mask(n, full & !self.mask())
    }

    /// `αᵗ = (αʳ)ᶜ`.
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// All parts except the last are at least 2.
    pub fn is_peak(&self) -> bool {
        self.0.iter().take(self.0.len().saturating_sub(1)).all(|&p| p >= 2)
    }

    /// `α♭ = (α_l+1, α_{l−1}, …, α₂, α₁−1)` for a peak composition, with a
    /// single part left unchanged.
    pub fn flat(&self) -> Result<Self> {
        if !self.is_peak() {
            return Err(Error::InvalidInput(format!("{self} is not a peak composition")));
        }
        let l = self.0.len();
        if l <= 1 {
            return Ok(self.clone());
        }
        let mut parts: Vec<usize> = self.0.iter().rev().copied().collect();
        parts[0] += 1;
        parts[l - 1] -= 1;
        Ok(Composition(parts))
    }

    /// `Λ(α)`: `I(Λ(α)) = {i ≥ 2 : i ∈ I(α), i−1 ∉ I(α)}`.
    pub fn lambda(&self) -> Self {
        let n = self.weight();
        let m = self.mask();
        // bit i−1 for i; i−1 ∉ I means bit i−2 clear; i ≥ 2 means bit ≥ 1
        let peaks = m & !(m << 1) & !1;
        Composition::from_mask(n, peaks)
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Every `α ⊨ n`, ordered by bitmask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        (0..1u64 << (n - 1)).map(|m| Composition::from_mask(n, m)).collect()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Parses `[1,2]`, `(1,2)` or `1,2`; `[]` is the empty composition.
pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
        .unwrap_or(t);
    if inner.trim().is_empty() || inner.trim() == "∅" {
        return Ok(Vec::new());
    }
    let mut pos = t.len() - inner.len() - if t.ends_with([']', ')']) { 1 } else { 0 };
    let mut out = Vec::new();
    for part in inner.split(',') {
        let v = part
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(pos, format!("expected a part, found `{}`", part.trim())))?;
        if v == 0 {
            return Err(Error::parse(pos, "parts must be positive"));
        }
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn subsets() {
        assert_eq!(c("[2,2]").subset(), BTreeSet::from([2]));
        assert_eq!(c("[4]").complement(), c("[1,1,1,1]"));
        assert_eq!(c("[]").complement(), c("[]"));
        assert_eq!(c("[1,2,1]").lambda().subset(), BTreeSet::from([3]));
        for n in 0..7 {
            for a in Composition::all(n) {
                assert_eq!(Composition::from_subset(n, &a.subset()).unwrap(), a);
                assert_eq!(Composition::from_mask(n, a.mask()), a);
                assert_eq!(a.transpose(), a.complement().reverse());
                assert_eq!(a.complement().complement(), a);
            }
        }
    }

    #[test]
    fn flats() {
        assert_eq!(c("[2,2]").flat().unwrap(), c("[3,1]"));
        assert_eq!(c("[3]").flat().unwrap(), c("[3]"));
        assert_eq!(c("[2,3,1]").flat().unwrap(), c("[2,3,1]"));
        assert!(c("[1,2]").flat().is_err());
        assert!(c("[2,1]").is_peak());
    }

    #[test]
    fn parsing() {
        assert_eq!(c("(1, 2)"), c("[1,2]"));
        assert_eq!(c("[]").weight(), 0);
        assert!("[1,0]".parse::<Composition>().is_err());
        assert!(matches!("[1,x]".parse::<Composition>(), Err(Error::Parse { pos: 3, .. })));
    }
}
