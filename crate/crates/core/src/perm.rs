//! Permutations and signed permutations in one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{flatten, parse_letters, render_letters, Letter, Word};

/// An element of `Sₙ` stored as `π(1)…π(n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<Letter>);

impl Permutation {
    pub fn new(oneline: Vec<Letter>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in oneline.iter().enumerate() {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidInput(format!(
                    "{} is not a permutation of 1..{n} (position {})",
                    render_letters(oneline.iter().map(|&l| l as i64)),
                    i + 1
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(oneline))
    }

    pub(crate) fn from_vec_unchecked(v: Vec<Letter>) -> Self {
        debug_assert!(Permutation::new(v.clone()).is_ok());
        Permutation(v)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as Letter).collect())
    }

    /// `n⋯321`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as Letter).rev().collect())
    }

    pub fn oneline(&self) -> &[Letter] {
        &self.0
    }

    /// `n` for an element of `Sₙ`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as Letter + 1;
        }
        Permutation(inv)
    }

    /// Right multiplication by `sᵢ`: swaps positions `i` and `i+1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    pub fn is_321_avoiding(&self) -> bool {
        // some j has a larger value to its left and a smaller one to its right
        let v = &self.0;
        let n = v.len();
        let mut prefix_max = 0;
        let mut suffix_min = vec![Letter::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(v[i]);
        }
        for j in 0..n {
            if prefix_max > v[j] && suffix_min[j + 1] < v[j] {
                return false;
            }
            prefix_max = prefix_max.max(v[j]);
        }
        true
    }

    /// `u ⊕ v = u (v↑m)`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.size() as Letter;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + m));
        Permutation(v)
    }

    /// The unique factorisation `π = π¹ ⊕ ⋯ ⊕ πᵏ` into irreducible blocks.
    pub fn irreducible_factors(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut running_max = 0;
        for (i, &v) in self.0.iter().enumerate() {
            running_max = running_max.max(v as usize);
            if running_max == i + 1 {
                let block: Vec<Letter> = self.0[start..=i]
                    .iter()
                    .map(|&x| x - start as Letter)
                    .collect();
                out.push(Permutation(block));
                start = i + 1;
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible_factors().len() <= 1
    }

    /// `πᵢ = i−1` whenever `πᵢ < i`.
    pub fn satisfies_decreasing_word_criterion(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize >= i + 1 || v as usize == i)
    }

    /// Cycle decomposition, each cycle listed from its largest element.
    pub fn cycles(&self) -> Vec<Vec<Letter>> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as Letter);
                x = self.0[x - 1] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Every cycle has the form `(b, b−1, …, a)`.
    pub fn has_descending_cycles(&self) -> bool {
        self.cycles()
            .iter()
            .all(|c| c.windows(2).all(|p| p[1] + 1 == p[0]))
    }

    pub fn to_word(&self) -> Word {
        Word::from_vec_unchecked(self.0.clone())
    }

    /// All of `Sₙ` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<Letter> = (1..=n as Letter).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(self.0.iter().map(|&l| l as i64)))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_letters(s)?;
        let mut v = Vec::with_capacity(raw.len());
        for (i, x) in raw.into_iter().enumerate() {
            if x <= 0 {
                return Err(Error::parse(i, format!("entry {x} must be positive")));
            }
            v.push(x as Letter);
        }
        Permutation::new(v)
    }
}

fn letter_set(w: &[Letter], name: &str) -> Result<BTreeSet<Letter>> {
    let set: BTreeSet<Letter> = w.iter().copied().collect();
    if set.len() != w.len() {
        return Err(Error::InvalidOperands(format!("{name} has repeated letters")));
    }
    Ok(set)
}

fn slash_sets(a: &[Letter], b: &[Letter]) -> Result<(BTreeSet<Letter>, BTreeSet<Letter>, Letter)> {
    let sa = letter_set(a, "left operand")?;
    let sb = letter_set(b, "right operand")?;
    let n = (a.len() + b.len()) as Letter;
    if sa.iter().chain(sb.iter()).any(|&x| x == 0 || x > n) {
        return Err(Error::InvalidOperands(format!(
            "letters must lie in 1..{n} for operands of total length {n}"
        )));
    }
    Ok((sa, sb, n))
}

/// Order-preserving relabelling of `w`'s letters onto `target`.
fn relabel_onto(w: &[Letter], target: &[Letter]) -> Vec<Letter> {
    flatten(w).into_iter().map(|i| target[i as usize - 1]).collect()
}

/// `a ⫽ b = a ψ(b)` where `ψ` maps `b`'s letters order-preservingly onto the
/// complement of `a`'s letters.
pub fn slash_over(a: &[Letter], b: &[Letter]) -> Result<Permutation> {
    let (sa, _, n) = slash_sets(a, b)?;
    let comp: Vec<Letter> = (1..=n).filter(|x| !sa.contains(x)).collect();
    let mut v = a.to_vec();
    v.extend(relabel_onto(b, &comp));
    Permutation::new(v).map_err(|e| Error::InvalidOperands(e.to_string()))
}

/// `a ⑊ b = φ(a) b` where `φ` maps `a`'s letters order-preservingly onto the
/// complement of `b`'s letters.
pub fn slash_under(a: &[Letter], b: &[Letter]) -> Result<Permutation> {
    let (_, sb, n) = slash_sets(a, b)?;
    let comp: Vec<Letter> = (1..=n).filter(|x| !sb.contains(x)).collect();
    let mut v = relabel_onto(a, &comp);
    v.extend_from_slice(b);
    Permutation::new(v).map_err(|e| Error::InvalidOperands(e.to_string()))
}

/// An element of the hyperoctahedral group `Bₙ`, stored as the window
/// `π(1)…π(n)`; `π(−i) = −π(i)` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in window.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidInput(format!(
                    "{} is not a signed permutation of ±1..{n} (position {})",
                    render_signed(&window),
                    i + 1
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(window))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `ℓ₀(π) = #{i : π(i) < 0}`.
    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }

    /// Membership in `Dₙ`: an even number of negative entries.
    pub fn in_type_d(&self) -> bool {
        self.negatives() % 2 == 0
    }

    /// Inversions of the window `π(1)…π(n)`.
    pub fn window_inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn apply(&self, i: i32) -> i32 {
        let v = self.0[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.size(), other.size(), "composing signed permutations of different sizes");
        SignedPermutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let target = i as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -target } else { target };
        }
        SignedPermutation(inv)
    }

    pub(crate) fn window_mut(&mut self) -> &mut Vec<i32> {
        &mut self.0
    }

    /// One-line notation with barred negative entries.
    pub fn human(&self) -> String {
        self.0
            .iter()
            .map(|&v| {
                if v < 0 {
                    format!("{}\u{0305}", -v)
                } else {
                    v.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(if self.0.iter().any(|v| v.abs() > 9) { "," } else { "" })
    }

    /// All of `Bₙ`: windows ordered lexicographically by absolute values,
    /// then by sign pattern.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::with_capacity((1..=n).product::<usize>() << n);
        for p in Permutation::all(n) {
            for signs in 0u32..(1 << n) {
                out.push(SignedPermutation(
                    p.0.iter()
                        .enumerate()
                        .map(|(i, &v)| if signs >> i & 1 == 1 { -(v as i32) } else { v as i32 })
                        .collect(),
                ));
            }
        }
        out
    }
}

fn render_signed(v: &[i32]) -> String {
    if v.iter().any(|&x| x < 0) {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    } else {
        render_letters(v.iter().map(|&x| x as i64))
    }
}

impl From<&Permutation> for SignedPermutation {
    fn from(p: &Permutation) -> Self {
        SignedPermutation(p.0.iter().map(|&x| x as i32).collect())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_signed(&self.0))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_letters(s)?;
        let mut v = Vec::with_capacity(raw.len());
        for (i, x) in raw.into_iter().enumerate() {
            let x = i32::try_from(x).map_err(|_| Error::parse(i, "entry out of range"))?;
            v.push(x);
        }
        SignedPermutation::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn slash_examples() {
        let a = [1, 3, 5, 7];
        let b = [6, 5, 4, 3];
        assert_eq!(slash_over(&a, &b).unwrap(), p("13578642"));
        assert_eq!(slash_under(&a, &b).unwrap(), p("12786543"));
        assert_eq!(slash_over(&[2, 1, 3], &[]).unwrap(), p("213"));
        assert_eq!(slash_under(&[], &[2, 1, 3]).unwrap(), p("213"));
        assert_eq!(slash_over(&[], &[2, 1, 3]).unwrap(), p("213"));
    }

    #[test]
    fn slash_rejects_bad_operands() {
        assert!(matches!(slash_over(&[1, 1], &[2]), Err(Error::InvalidOperands(_))));
        assert!(matches!(slash_under(&[1], &[9]), Err(Error::InvalidOperands(_))));
    }

    #[test]
    fn direct_sums_and_factors() {
        assert_eq!(p("231").direct_sum(&p("312")), p("231645"));
        assert_eq!(p("123").irreducible_factors(), vec![p("1"), p("1"), p("1")]);
        assert_eq!(p("21435").irreducible_factors(), vec![p("21"), p("21"), p("1")]);
        assert!(p("4123").is_irreducible());
    }

    #[test]
    fn factors_are_irreducible_and_recombine() {
        for n in 1..=6 {
            for pi in Permutation::all(n) {
                let fs = pi.irreducible_factors();
                assert!(fs.iter().all(|f| f.is_irreducible()));
                let back = fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.direct_sum(f));
                assert_eq!(back, pi);
            }
        }
    }

    #[test]
    fn pattern_avoidance() {
        assert!(p("4123").is_321_avoiding());
        assert!(!p("321").is_321_avoiding());
        for pi in Permutation::all(3) {
            // brute-force triple scan
            let v = pi.oneline();
            let has = v[0] > v[1] && v[1] > v[2];
            assert_eq!(pi.is_321_avoiding(), !has);
        }
    }

    #[test]
    fn group_operations() {
        assert_eq!(Permutation::all(4).len(), 24);
        let x = p("4213");
        assert!(x.compose(&x.inverse()).is_identity());
        assert_eq!(p("321").inversions(), 3);
        let s = SignedPermutation::new(vec![2, -3, -1]).unwrap();
        assert!(s.compose(&s.inverse()).is_identity());
        assert_eq!(SignedPermutation::all(2).len(), 8);
        assert!(s.in_type_d());
    }

    #[test]
    fn signed_rendering() {
        let s: SignedPermutation = "1,-3,-2".parse().unwrap();
        assert_eq!(s.to_string(), "1,-3,-2");
        assert_eq!(s.human(), "13\u{305}2\u{305}");
        assert_eq!("213".parse::<SignedPermutation>().unwrap().to_string(), "213");
        assert!("1,-1".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn descending_cycle_criteria_agree() {
        for n in 1..=6 {
            for pi in Permutation::all(n) {
                assert_eq!(
                    pi.satisfies_decreasing_word_criterion(),
                    pi.has_descending_cycles(),
                    "{pi}"
                );
            }
        }
    }
}
