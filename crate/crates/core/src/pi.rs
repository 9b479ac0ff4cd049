//! The bialgebra Π spanned by `[π] = Σ_{w∈𝓡(π)} [w,n]` for `π ∈ S_{n+1}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One};

use crate::bialgebra::{degree_zero_counit, Bialgebra};
use crate::coxeter::{count_reduced_words_a, length_additive_prefixes, reduced_words_a, TypeA};
use crate::error::{Error, Result};
use crate::linear::{int, LinComb, Rational, Tensor};
use crate::oracle::shuffle_classes;
use crate::perm::{slash_over, slash_under, Permutation};
use crate::wbialg::WKey;
use crate::word::{flatten, Letter, Word};

/// The basis symbol `[π]`; `π ∈ S_{n+1}` has frame `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiKey(pub Permutation);

impl PiKey {
    pub fn frame(&self) -> usize {
        self.0.size().saturating_sub(1)
    }

    pub fn degree(&self) -> usize {
        self.0.inversions()
    }

    /// `[1]`, the unit of Π.
    pub fn one() -> Self {
        PiKey(Permutation::identity(1))
    }
}

impl fmt::Display for PiKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl FromStr for PiKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (inner, off) = match t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            Some(inner) => (inner, 1),
            None => (t, 0),
        };
        let p: Permutation = inner.parse().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(pos + off, msg),
            other => other,
        })?;
        if p.size() == 0 {
            return Err(Error::InvalidInput("[π] needs π ∈ Sₙ with n ≥ 1".into()));
        }
        Ok(PiKey(p))
    }
}

/// `[π]` expanded in W.
pub fn pi_to_w(key: &PiKey) -> LinComb<WKey> {
    let n = key.frame();
    reduced_words_a(&key.0)
        .into_iter()
        .map(|w| WKey::new_unchecked(w, n))
        .collect()
}

/// Groups a W-element into Π-keys. Fails unless the element is a sum of
/// `[π]` with coefficients constant on each set of reduced words.
pub fn w_to_pi(x: &LinComb<WKey>) -> Result<LinComb<PiKey>> {
    let g = |n: usize| TypeA { n: n + 1 };
    let mut out = LinComb::zero();
    let mut seen: HashMap<PiKey, Rational> = HashMap::new();
    for (k, c) in x.iter() {
        let pi = crate::coxeter::evaluate_word(&g(k.frame), k.word.letters());
        if pi.inversions() != k.degree() {
            return Err(Error::NotInSpan(format!("{k} is not a reduced word")));
        }
        let key = PiKey(pi);
        match seen.get(&key) {
            Some(prev) if prev != c => {
                return Err(Error::NotInSpan(format!("coefficients differ within {key}")));
            }
            Some(_) => {}
            None => {
                seen.insert(key.clone(), c.clone());
                out.add_term(key, c.clone());
            }
        }
    }
    if &linear_pi_to_w(&out) != x {
        return Err(Error::NotInSpan("missing reduced words".into()));
    }
    Ok(out)
}

pub fn linear_pi_to_w(x: &LinComb<PiKey>) -> LinComb<WKey> {
    crate::linear::linear_extend(x, pi_to_w)
}

/// Memoised evaluation of the recursive set 𝒮⧢(u,v).
#[derive(Default)]
pub struct SShuffle {
    memo: HashMap<(Permutation, Permutation), BTreeSet<Permutation>>,
}

impl SShuffle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn compute(&mut self, u: &Permutation, v: &Permutation) -> Result<BTreeSet<Permutation>> {
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let out = self.compute_uncached(u, v)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn compute_uncached(&mut self, u: &Permutation, v: &Permutation) -> Result<BTreeSet<Permutation>> {
        let m = u.size() - 1;
        let ml = m as Letter;
        let us = u.oneline();
        let w: Vec<Letter> = v.oneline().iter().map(|&x| x + ml).collect();
        if us[m] == ml + 1 {
            let mut p = us[..m].to_vec();
            p.extend_from_slice(&w);
            return Ok(BTreeSet::from([Permutation::from_vec_unchecked(p)]));
        }
        if w[0] == ml + 1 {
            let mut p = us.to_vec();
            p.extend_from_slice(&w[1..]);
            return Ok(BTreeSet::from([Permutation::from_vec_unchecked(p)]));
        }
        let j = us.iter().position(|&x| x == ml + 1).unwrap() + 1;
        let k = w.iter().position(|&x| x == ml + 1).unwrap();
        let u_tilde = Permutation::from_vec_unchecked(flatten(&us[j..]));
        let v_tilde = Permutation::from_vec_unchecked(flatten(&v.oneline()[..k]));
        let mut out = BTreeSet::new();
        for sigma in self.compute(&u_tilde, v)? {
            out.insert(slash_over(&us[..j], sigma.oneline())?);
        }
        for sigma in self.compute(u, &v_tilde)? {
            let p = slash_under(sigma.oneline(), &w[k..])?;
            if !out.insert(p.clone()) {
                return Err(Error::InternalInconsistency(format!(
                    "the two branches for 𝒮⧢({u},{v}) share {p}"
                )));
            }
        }
        Ok(out)
    }
}

/// 𝒮⧢(u,v) ⊂ S_{m+n+1} for `u ∈ S_{m+1}`, `v ∈ S_{n+1}`.
pub fn s_shuffle(u: &Permutation, v: &Permutation) -> Result<BTreeSet<Permutation>> {
    SShuffle::new().compute(u, v)
}

/// 𝒮⧢(X,Y) as a disjoint union over pairs.
pub fn s_shuffle_sets(
    cache: &mut SShuffle,
    xs: &BTreeSet<Permutation>,
    ys: &BTreeSet<Permutation>,
) -> Result<BTreeSet<Permutation>> {
    let mut out = BTreeSet::new();
    for x in xs {
        for y in ys {
            for p in cache.compute(x, y)? {
                if !out.insert(p.clone()) {
                    return Err(Error::InternalInconsistency(format!(
                        "{p} appears in two of the sets 𝒮⧢(u,v)"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// 𝒮⧢(π¹, 𝒮⧢(π², …, πᵏ)).
pub fn s_shuffle_multi(seq: &[Permutation]) -> Result<BTreeSet<Permutation>> {
    let (last, init) = seq
        .split_last()
        .ok_or_else(|| Error::InvalidInput("𝒮⧢ of an empty sequence".into()))?;
    let mut cache = SShuffle::new();
    let mut acc = BTreeSet::from([last.clone()]);
    for p in init.iter().rev() {
        acc = s_shuffle_sets(&mut cache, &BTreeSet::from([p.clone()]), &acc)?;
    }
    Ok(acc)
}

/// `[u]·[v] = Σ_{π∈𝒮⧢(u,v)} [π]`.
pub fn pi_product(u: &PiKey, v: &PiKey) -> Result<LinComb<PiKey>> {
    Ok(s_shuffle(&u.0, &v.0)?.into_iter().map(PiKey).collect())
}

/// `[u]·[v]` computed by shuffling reduced words. A degree-zero factor
/// contributes only the empty word, so the product is `[u ⊕ 1]` or
/// `[1 ⊕ v]` with the identity sized to the other frame, returned without
/// expanding anything.
pub fn pi_product_oracle(u: &PiKey, v: &PiKey) -> Result<LinComb<PiKey>> {
    let m = u.frame();
    if v.degree() == 0 {
        return Ok(LinComb::basis(PiKey(u.0.direct_sum(&Permutation::identity(v.frame())))));
    }
    if u.degree() == 0 {
        return Ok(LinComb::basis(PiKey(Permutation::identity(m).direct_sum(&v.0))));
    }
    let left: Vec<Vec<Letter>> = reduced_words_a(&u.0).into_iter().map(Vec::from).collect();
    let right: Vec<Vec<Letter>> = reduced_words_a(&v.0)
        .into_iter()
        .map(|w| w.letters().iter().map(|&l| l + m as Letter).collect())
        .collect();
    let g = TypeA { n: m + v.frame() + 1 };
    Ok(shuffle_classes(&g, &left, &right)?.into_iter().map(PiKey).collect())
}

/// The two-term product rule for 321-avoiding permutations.
pub fn fc_product(u: &PiKey, v: &PiKey) -> Result<LinComb<PiKey>> {
    for x in [u, v] {
        if !x.0.is_321_avoiding() {
            return Err(Error::PreconditionViolation(format!("{} contains the pattern 321", x.0)));
        }
    }
    let m = u.0.size();
    let ml = m as Letter;
    let us = u.0.oneline();
    let w: Vec<Letter> = v.0.oneline().iter().map(|&x| x + ml - 1).collect();
    let mut uw = us.to_vec();
    uw.extend_from_slice(&w);
    let occurrences: Vec<usize> = (0..uw.len()).filter(|&i| uw[i] == ml).collect();

    let mut u_prime = uw.clone();
    u_prime[occurrences[1]] = us[m - 1];
    u_prime.remove(m - 1);

    let mut v_prime = uw;
    v_prime[occurrences[0]] = w[0];
    v_prime.remove(m);

    let mut out = LinComb::basis(PiKey(Permutation::new(u_prime.clone())?));
    if u_prime != v_prime {
        out.add_term(PiKey(Permutation::new(v_prime)?), int(1));
    }
    Ok(out)
}

/// `Δ[π] = Σ_{π ≐ π′π″} [π′] ⊗ [π″]`.
pub fn pi_coproduct(u: &PiKey) -> LinComb<Tensor<PiKey, PiKey>> {
    let g = TypeA { n: u.0.size() };
    length_additive_prefixes(&g, &u.0)
        .into_iter()
        .map(|p| {
            let rest = p.inverse().compose(&u.0);
            Tensor(PiKey(p), PiKey(rest))
        })
        .collect()
}

pub fn pi_counit(u: &PiKey) -> Rational {
    degree_zero_counit(u.degree())
}

/// `[π] ↦ r(π)/ℓ(π)!`.
pub fn pi_counting_character(u: &PiKey) -> Rational {
    let r = count_reduced_words_a(&u.0);
    let mut fact = BigUint::one();
    for i in 2..=u.degree() as u64 {
        fact *= i;
    }
    Rational::new(r.into(), fact.into())
}

/// Checks that flattening maps 𝓡(π) bijectively onto the disjoint union of
/// 𝓡(σ) over σ ∈ 𝒮⧢(π¹,…,πᵏ) for the irreducible factors πⁱ of π.
pub fn flatten_reduced_words_bijection_check(pi: &Permutation) -> Result<bool> {
    let words = reduced_words_a(pi);
    let flat: BTreeSet<Word> = words
        .iter()
        .map(|w| Word::from_vec_unchecked(flatten(w.letters())))
        .collect();
    if flat.len() != words.len() {
        return Ok(false);
    }
    let targets = s_shuffle_multi(&pi.irreducible_factors())?;
    let mut union = BTreeSet::new();
    for sigma in &targets {
        for w in reduced_words_a(sigma) {
            if !union.insert(w) {
                return Ok(false);
            }
        }
    }
    Ok(union == flat)
}

/// Π as a [`Bialgebra`]. Products go through the recursive rule.
#[derive(Clone, Copy, Debug, Default)]
pub struct PiBialgebra;

impl Bialgebra for PiBialgebra {
    type Key = PiKey;

    fn one(&self) -> PiKey {
        PiKey::one()
    }
    fn product(&self, a: &PiKey, b: &PiKey) -> LinComb<PiKey> {
        pi_product(a, b).expect("𝒮⧢ recursion is internally consistent")
    }
    fn coproduct(&self, a: &PiKey) -> LinComb<Tensor<PiKey, PiKey>> {
        pi_coproduct(a)
    }
    fn counit(&self, a: &PiKey) -> Rational {
        pi_counit(a)
    }
    fn degree(&self, a: &PiKey) -> usize {
        a.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn k(s: &str) -> PiKey {
        s.parse().unwrap()
    }

    #[test]
    fn degree_zero_shortcut_matches_expansion() {
        for u in Permutation::all(4) {
            for n in 1..=2 {
                let left: Vec<Vec<Letter>> = reduced_words_a(&u).into_iter().map(Vec::from).collect();
                let full = shuffle_classes(&TypeA { n: 3 + n }, &left, &[Vec::new()]).unwrap();
                let got = pi_product_oracle(&PiKey(u.clone()), &PiKey(Permutation::identity(n))).unwrap();
                let want: LinComb<PiKey> = full.into_iter().map(PiKey).collect();
                assert_eq!(got, want);
            }
        }
    }

    fn set(xs: &[&str]) -> BTreeSet<Permutation> {
        xs.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn listed_s_shuffles() {
        assert_eq!(s_shuffle(&p("231"), &p("312")).unwrap(), set(&["23514", "25134"]));
        assert_eq!(s_shuffle(&p("312"), &p("231")).unwrap(), set(&["31452", "41253"]));
        assert_eq!(
            s_shuffle(&p("4213"), &p("4132")).unwrap(),
            set(&["4217365", "7213465"])
        );
        assert_eq!(
            s_shuffle(&p("4132"), &p("4213")).unwrap(),
            set(&["4137526", "4157236", "4172536", "5137246", "5172346", "7132546"])
        );
    }

    #[test]
    fn unit_and_oracle_agree_on_small_cases() {
        assert_eq!(pi_product(&k("1"), &k("312")).unwrap(), LinComb::basis(k("312")));
        assert_eq!(pi_product(&k("312"), &k("1")).unwrap(), LinComb::basis(k("312")));
        for x in Permutation::all(3) {
            for y in Permutation::all(3) {
                let (u, v) = (PiKey(x.clone()), PiKey(y));
                assert_eq!(pi_product(&u, &v).unwrap(), pi_product_oracle(&u, &v).unwrap());
            }
        }
    }

    #[test]
    fn fully_commutative_rule() {
        let got = fc_product(&k("4123"), &k("2341")).unwrap();
        assert_eq!(got.to_string(), "[4125673] + [5123674]");
        assert_eq!(fc_product(&k("1"), &k("1")).unwrap(), LinComb::basis(k("1")));
        assert!(matches!(
            fc_product(&k("321"), &k("1")),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn coproduct_small() {
        let got = pi_coproduct(&k("21"));
        assert_eq!(got.to_string(), "[12] ⊗ [21] + [21] ⊗ [12]");
        assert_eq!(pi_coproduct(&k("321")).len(), 6);
        assert_eq!(pi_coproduct(&k("1")).to_string(), "[1] ⊗ [1]");
        assert_eq!(pi_counit(&k("1")), int(1));
    }

    #[test]
    fn flattening_example() {
        assert!(flatten_reduced_words_bijection_check(&p("231645")).unwrap());
        let target = s_shuffle_multi(&[p("231"), p("312")]).unwrap();
        assert_eq!(target, set(&["23514", "25134"]));
    }

    #[test]
    fn back_to_pi() {
        let x = linear_pi_to_w(&pi_product(&k("231"), &k("312")).unwrap());
        assert_eq!(w_to_pi(&x).unwrap().to_string(), "[23514] + [25134]");
    }
}
