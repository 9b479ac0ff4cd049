//! Words over the positive integers and the shuffle algebra on them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linear::{int, LinComb, Rational};

pub type Letter = u32;

/// A finite sequence of positive integers. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if let Some(p) = letters.iter().position(|&l| l == 0) {
            return Err(Error::InvalidInput(format!(
                "word letters must be positive (position {})",
                p + 1
            )));
        }
        Ok(Word(letters))
    }

    /// Caller guarantees all letters are positive.
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l > 0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `max(∅) = 0`.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn shift(&self, by: Letter) -> Word {
        Word(self.0.iter().map(|&l| l + by).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn has_distinct_letters(&self) -> bool {
        let set: BTreeSet<_> = self.0.iter().collect();
        set.len() == self.0.len()
    }

    pub fn count_letter(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }
}

impl From<Word> for Vec<Letter> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// Order-preserving relabelling of the letters onto `{1,…,m}` where `m` is the
/// number of distinct letters. Repeated letters stay equal.
pub fn flatten(w: &[Letter]) -> Vec<Letter> {
    let mut distinct: Vec<Letter> = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    w.iter()
        .map(|l| distinct.binary_search(l).unwrap() as Letter + 1)
        .collect()
}

impl Word {
    pub fn flatten(&self) -> Word {
        Word(flatten(&self.0))
    }

    pub fn is_packed(&self) -> bool {
        flatten(&self.0) == self.0
    }
}

/// All `C(ℓ(u)+ℓ(v), ℓ(u))` interleavings of `u` and `v`, with multiplicity.
pub fn shuffle(u: &[Letter], v: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    for_each_shuffle(u, v, &mut buf, &mut |w| out.push(w.to_vec()));
    out
}

/// Visits every interleaving of `u` and `v` without allocating per word.
pub fn for_each_shuffle(
    u: &[Letter],
    v: &[Letter],
    buf: &mut Vec<Letter>,
    f: &mut impl FnMut(&[Letter]),
) {
    if u.is_empty() || v.is_empty() {
        let mark = buf.len();
        buf.extend_from_slice(u);
        buf.extend_from_slice(v);
        f(buf);
        buf.truncate(mark);
        return;
    }
    buf.push(u[0]);
    for_each_shuffle(&u[1..], v, buf, f);
    buf.pop();
    buf.push(v[0]);
    for_each_shuffle(u, &v[1..], buf, f);
    buf.pop();
}

/// The shuffle product as a linear combination of words.
pub fn shuffle_product(u: &Word, v: &Word) -> LinComb<Word> {
    shuffle(&u.0, &v.0).into_iter().map(Word).collect()
}

/// The shuffle-algebra antipode `S(w) = (-1)^ℓ(w) wʳ`.
pub fn shuffle_antipode(w: &Word) -> (Rational, Word) {
    let sign = if w.len() % 2 == 0 { int(1) } else { int(-1) };
    (sign, w.reversed())
}

/// Deconcatenation coproduct of the shuffle algebra.
pub fn deconcatenate(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.len())
        .map(|i| (w.slice(0..i), w.slice(i..w.len())))
        .collect()
}

/// `{i : wᵢ > wᵢ₊₁}`, 1-indexed.
pub fn descents(w: &[Letter]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// `{i : 1<i<n, wᵢ₋₁ ≤ wᵢ > wᵢ₊₁}`.
pub fn peaks(w: &[Letter]) -> BTreeSet<usize> {
    (2..w.len())
        .filter(|&i| w[i - 2] <= w[i - 1] && w[i - 1] > w[i])
        .collect()
}

/// `{i : 1<i<n, wᵢ₋₁ ≥ wᵢ < wᵢ₊₁}`.
pub fn valleys(w: &[Letter]) -> BTreeSet<usize> {
    (2..w.len())
        .filter(|&i| w[i - 2] >= w[i - 1] && w[i - 1] < w[i])
        .collect()
}

pub(crate) fn render_letters(letters: impl Iterator<Item = i64> + Clone) -> String {
    let compact = letters.clone().all(|l| (0..=9).contains(&l));
    if compact {
        letters.map(|l| l.to_string()).collect()
    } else {
        letters.map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses a digit string (`2364`) or a comma list (`2,3,10`). Position in
/// errors is the byte offset of the offending entry.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        let mut out = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let t = part.trim();
            let v = t
                .parse::<i64>()
                .map_err(|_| Error::parse(pos, format!("expected an integer, found `{t}`")))?;
            out.push(v);
            pos += part.len() + 1;
        }
        Ok(out)
    } else {
        s.char_indices()
            .map(|(i, c)| {
                c.to_digit(10)
                    .map(i64::from)
                    .ok_or_else(|| Error::parse(i, format!("expected a digit, found `{c}`")))
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(self.0.iter().map(|&l| l as i64)))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_letters(s)?;
        let mut out = Vec::with_capacity(raw.len());
        for (i, l) in raw.into_iter().enumerate() {
            if l <= 0 || l > Letter::MAX as i64 {
                return Err(Error::parse(i, format!("letter {l} is not a positive integer")));
            }
            out.push(l as Letter);
        }
        Ok(Word(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(w("2364").flatten(), w("1243"));
        assert_eq!(w("123").flatten(), w("123"));
        assert_eq!(w("53").flatten(), w("21"));
        assert_eq!(Word::empty().flatten(), Word::empty());
        assert_eq!(w("512").flatten(), w("312"));
        assert_eq!(w("3113").flatten(), w("2112"));
    }

    #[test]
    fn shuffle_with_multiplicity() {
        let got = shuffle_product(&w("12"), &w("21"));
        let want: LinComb<Word> = [
            (w("1221"), int(2)),
            (w("1212"), int(1)),
            (w("2121"), int(1)),
            (w("2112"), int(2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(shuffle_product(&Word::empty(), &w("31")), LinComb::basis(w("31")));
        assert_eq!(
            shuffle_product(&w("1"), &w("1")),
            LinComb::term(w("11"), int(2))
        );
    }

    #[test]
    fn antipode() {
        assert_eq!(shuffle_antipode(&w("123")), (int(-1), w("321")));
        assert_eq!(shuffle_antipode(&Word::empty()), (int(1), Word::empty()));
        assert_eq!(shuffle_antipode(&w("12")), (int(1), w("21")));
    }

    #[test]
    fn antipode_is_convolution_inverse_of_identity() {
        // Σ S(w₁…wᵢ) ⧢ wᵢ₊₁…wₙ = ε(w)
        for word in ["1", "12", "213", "1121"] {
            let word = w(word);
            let mut acc = LinComb::zero();
            for (a, b) in deconcatenate(&word) {
                let (sign, sa) = shuffle_antipode(&a);
                acc.add_scaled(&shuffle_product(&sa, &b), &sign);
            }
            assert!(acc.is_zero(), "{word}");
        }
    }

    #[test]
    fn descent_peak_valley_sets() {
        let x = w("1254");
        assert_eq!(descents(x.letters()), BTreeSet::from([3]));
        assert_eq!(peaks(x.letters()), BTreeSet::from([3]));
        assert!(valleys(x.letters()).is_empty());
        assert!(descents(&[]).is_empty());
        assert_eq!(valleys(w("2113").letters()), BTreeSet::from([3]));
        assert_eq!(peaks(w("1221").letters()), BTreeSet::from([3]));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(w("2,10,3").to_string(), "2,10,3");
        assert_eq!(w("213").to_string(), "213");
        assert!(matches!("2a3".parse::<Word>(), Err(Error::Parse { pos: 1, .. })));
        assert!("1,0".parse::<Word>().is_err());
    }
}
