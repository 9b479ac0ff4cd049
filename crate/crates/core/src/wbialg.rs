//! The word bialgebra W on symbols `[w,n]`: product by shifted shuffle,
//! coproduct by deconcatenation.

use std::fmt;
use std::str::FromStr;

use num::One;

use crate::bialgebra::{degree_zero_counit, Bialgebra};
use crate::error::{Error, Result};
use crate::linear::{int, LinComb, Rational, Tensor};
use crate::word::{flatten, for_each_shuffle, Letter, Word};

/// The basis symbol `[w,n]` with `max(w) ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WKey {
    pub word: Word,
    pub frame: usize,
}

impl WKey {
    pub fn new(word: Word, frame: usize) -> Result<Self> {
        if word.max_letter() as usize > frame {
            return Err(Error::InvalidInput(format!(
                "letter {} exceeds frame {frame}",
                word.max_letter()
            )));
        }
        Ok(WKey { word, frame })
    }

    pub(crate) fn new_unchecked(word: Word, frame: usize) -> Self {
        WKey { word, frame }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

impl fmt::Display for WKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.word, self.frame)
    }
}

impl FromStr for WKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected `[w;n]`"))?;
        let (w, n) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(1, "expected `;` between word and frame"))?;
        let word: Word = w.parse().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(pos + 1, msg),
            other => other,
        })?;
        let frame = n
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(w.len() + 2, format!("bad frame `{n}`")))?;
        WKey::new(word, frame)
    }
}

/// `[v,m]·[w,n] = [v ⧢ (w↑m), m+n]`.
pub fn w_product(a: &WKey, b: &WKey) -> LinComb<WKey> {
    let shifted: Vec<Letter> = b.word.letters().iter().map(|&l| l + a.frame as Letter).collect();
    let frame = a.frame + b.frame;
    let mut out = LinComb::zero();
    let mut buf = Vec::new();
    for_each_shuffle(a.word.letters(), &shifted, &mut buf, &mut |u| {
        out.add_term(WKey::new_unchecked(Word::from_vec_unchecked(u.to_vec()), frame), int(1));
    });
    out
}

/// `Δ([w,n]) = Σᵢ [w₁⋯wᵢ,n] ⊗ [wᵢ₊₁⋯w_m,n]`.
pub fn w_coproduct(a: &WKey) -> LinComb<Tensor<WKey, WKey>> {
    let w = &a.word;
    (0..=w.len())
        .map(|i| {
            Tensor(
                WKey::new_unchecked(w.slice(0..i), a.frame),
                WKey::new_unchecked(w.slice(i..w.len()), a.frame),
            )
        })
        .collect()
}

pub fn w_counit(a: &WKey) -> Rational {
    degree_zero_counit(a.degree())
}

/// `[w,n] ↦ 1/ℓ(w)!`.
pub fn counting_character(a: &WKey) -> Rational {
    let mut f = Rational::one();
    for i in 2..=a.degree() as i64 {
        f *= int(i);
    }
    f.recip()
}

/// The packed representative `fl(w)` of `[w,n]` modulo the packed-word ideal.
pub fn pack_project(a: &WKey) -> Word {
    Word::from_vec_unchecked(flatten(a.word.letters()))
}

/// W as a [`Bialgebra`].
#[derive(Clone, Copy, Debug, Default)]
pub struct WordBialgebra;

impl Bialgebra for WordBialgebra {
    type Key = WKey;

    fn one(&self) -> WKey {
        WKey::new_unchecked(Word::empty(), 0)
    }
    fn product(&self, a: &WKey, b: &WKey) -> LinComb<WKey> {
        w_product(a, b)
    }
    fn coproduct(&self, a: &WKey) -> LinComb<Tensor<WKey, WKey>> {
        w_coproduct(a)
    }
    fn counit(&self, a: &WKey) -> Rational {
        w_counit(a)
    }
    fn degree(&self, a: &WKey) -> usize {
        a.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rat;

    fn k(s: &str) -> WKey {
        s.parse().unwrap()
    }

    #[test]
    fn product_example() {
        let got = w_product(&k("[12;3]"), &k("[2;2]"));
        let want: LinComb<WKey> = [k("[125;5]"), k("[152;5]"), k("[512;5]")].into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(w_product(&k("[;0]"), &k("[31;4]")), LinComb::basis(k("[31;4]")));
        let got = w_product(&k("[1;2]"), &k("[1;2]"));
        assert_eq!(got, [k("[13;4]"), k("[31;4]")].into_iter().collect());
    }

    #[test]
    fn coproduct_example() {
        let got = w_coproduct(&k("[12;3]"));
        let want: LinComb<Tensor<WKey, WKey>> = [
            Tensor(k("[;3]"), k("[12;3]")),
            Tensor(k("[1;3]"), k("[2;3]")),
            Tensor(k("[12;3]"), k("[;3]")),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(w_counit(&k("[;4]")), int(1));
        assert_eq!(w_counit(&k("[1;4]")), int(0));
    }

    #[test]
    fn counting_and_packing() {
        assert_eq!(counting_character(&k("[;7]")), int(1));
        assert_eq!(counting_character(&k("[125;5]")), rat(1, 6));
        assert_eq!(pack_project(&k("[125;5]")).to_string(), "123");
        assert_eq!(pack_project(&k("[512;5]")).to_string(), "312");
    }

    #[test]
    fn key_format() {
        assert_eq!(k("[12;3]").to_string(), "[12;3]");
        assert_eq!(k("[2,10;10]").to_string(), "[2,10;10]");
        assert!("[4;3]".parse::<WKey>().is_err());
        assert!("12;3".parse::<WKey>().is_err());
    }
}
