//! Coxeter groups of types A, B and D acting on one-line notation, and
//! reduced-word enumeration by descent recursion.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};
use crate::word::{Letter, Word};

/// A finite Coxeter group with generators `s₁,…,s_rank` acting on the right.
pub trait CoxeterGroup: Sync {
    type Elem: Clone + Ord + Hash + Send + Sync + fmt::Display;

    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    /// `x · sᵢ`.
    fn right_mul(&self, x: &Self::Elem, i: usize) -> Self::Elem;
    fn length(&self, x: &Self::Elem) -> usize;
    fn compose(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inverse(&self, x: &Self::Elem) -> Self::Elem;
    fn contains(&self, x: &Self::Elem) -> bool;
    fn elements(&self) -> Vec<Self::Elem>;

    fn is_right_descent(&self, x: &Self::Elem, i: usize) -> bool {
        self.length(&self.right_mul(x, i)) < self.length(x)
    }

    /// `x ← x · sᵢ`. Generators are involutions, so applying twice undoes it.
    fn right_mul_assign(&self, x: &mut Self::Elem, i: usize) {
        *x = self.right_mul(x, i);
    }
}

/// `Sₙ` with `sᵢ = (i, i+1)`.
#[derive(Clone, Copy, Debug)]
pub struct TypeA {
    pub n: usize,
}

/// `Bₙ` with `s₁ = (−1,1)` and `sᵢ = (−i,−i+1)(i−1,i)` for `i ≥ 2`.
#[derive(Clone, Copy, Debug)]
pub struct TypeB {
    pub n: usize,
}

/// `Dₙ` with `s₁ = (−2,1)(−1,2)` and `sᵢ` as in type B for `i ≥ 2`.
#[derive(Clone, Copy, Debug)]
pub struct TypeD {
    pub n: usize,
}

impl CoxeterGroup for TypeA {
    type Elem = Permutation;

    fn rank(&self) -> usize {
        self.n.saturating_sub(1)
    }
    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }
    fn right_mul(&self, x: &Permutation, i: usize) -> Permutation {
        let mut y = x.clone();
        y.swap_positions(i);
        y
    }
    fn length(&self, x: &Permutation) -> usize {
        x.inversions()
    }
    fn compose(&self, x: &Permutation, y: &Permutation) -> Permutation {
        x.compose(y)
    }
    fn inverse(&self, x: &Permutation) -> Permutation {
        x.inverse()
    }
    fn contains(&self, x: &Permutation) -> bool {
        x.size() == self.n
    }
    fn elements(&self) -> Vec<Permutation> {
        Permutation::all(self.n)
    }
    fn is_right_descent(&self, x: &Permutation, i: usize) -> bool {
        x.at(i) > x.at(i + 1)
    }
    fn right_mul_assign(&self, x: &mut Permutation, i: usize) {
        x.swap_positions(i);
    }
}

fn signed_right_mul(x: &SignedPermutation, i: usize, d: bool) -> SignedPermutation {
    let mut y = x.clone();
    signed_right_mul_assign(&mut y, i, d);
    y
}

fn signed_right_mul_assign(y: &mut SignedPermutation, i: usize, d: bool) {
    let w = y.window_mut();
    match (i, d) {
        (1, false) => w[0] = -w[0],
        (1, true) => {
            let (a, b) = (w[0], w[1]);
            w[0] = -b;
            w[1] = -a;
        }
        _ => w.swap(i - 2, i - 1),
    }
}

/// `inv(π) + Σ_{π(i)<0} |π(i)|`.
pub fn length_b_formula(x: &SignedPermutation) -> usize {
    x.window_inversions()
        + x.window()
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs() as usize)
            .sum::<usize>()
}

/// `inv(π) + Σ_{π(i)<0} (|π(i)| − 1)`.
pub fn length_d_formula(x: &SignedPermutation) -> usize {
    x.window_inversions()
        + x.window()
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs() as usize - 1)
            .sum::<usize>()
}

impl CoxeterGroup for TypeB {
    type Elem = SignedPermutation;

    fn rank(&self) -> usize {
        self.n
    }
    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }
    fn right_mul(&self, x: &SignedPermutation, i: usize) -> SignedPermutation {
        signed_right_mul(x, i, false)
    }
    fn right_mul_assign(&self, x: &mut SignedPermutation, i: usize) {
        signed_right_mul_assign(x, i, false);
    }
    fn length(&self, x: &SignedPermutation) -> usize {
        length_b_formula(x)
    }
    fn compose(&self, x: &SignedPermutation, y: &SignedPermutation) -> SignedPermutation {
        x.compose(y)
    }
    fn inverse(&self, x: &SignedPermutation) -> SignedPermutation {
        x.inverse()
    }
    fn contains(&self, x: &SignedPermutation) -> bool {
        x.size() == self.n
    }
    fn elements(&self) -> Vec<SignedPermutation> {
        SignedPermutation::all(self.n)
    }
    fn is_right_descent(&self, x: &SignedPermutation, i: usize) -> bool {
        let w = x.window();
        if i == 1 {
            w[0] < 0
        } else {
            w[i - 2] > w[i - 1]
        }
    }
}

impl CoxeterGroup for TypeD {
    type Elem = SignedPermutation;

    fn rank(&self) -> usize {
        if self.n < 2 {
            0
        } else {
            self.n
        }
    }
    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }
    fn right_mul(&self, x: &SignedPermutation, i: usize) -> SignedPermutation {
        signed_right_mul(x, i, true)
    }
    fn right_mul_assign(&self, x: &mut SignedPermutation, i: usize) {
        signed_right_mul_assign(x, i, true);
    }
    fn length(&self, x: &SignedPermutation) -> usize {
        length_d_formula(x)
    }
    fn compose(&self, x: &SignedPermutation, y: &SignedPermutation) -> SignedPermutation {
        x.compose(y)
    }
    fn inverse(&self, x: &SignedPermutation) -> SignedPermutation {
        x.inverse()
    }
    fn contains(&self, x: &SignedPermutation) -> bool {
        x.size() == self.n && x.in_type_d()
    }
    fn elements(&self) -> Vec<SignedPermutation> {
        SignedPermutation::all(self.n)
            .into_iter()
            .filter(|x| x.in_type_d())
            .collect()
    }
    fn is_right_descent(&self, x: &SignedPermutation, i: usize) -> bool {
        let w = x.window();
        if i == 1 {
            w[0] + w[1] < 0
        } else {
            w[i - 2] > w[i - 1]
        }
    }
}

/// `s_{w₁} s_{w₂} ⋯ s_{w_l}`.
pub fn evaluate_word<G: CoxeterGroup>(g: &G, w: &[Letter]) -> G::Elem {
    w.iter()
        .fold(g.identity(), |x, &i| g.right_mul(&x, i as usize))
}

/// Visits every reduced word of `x`. The callback sees letters in order.
pub fn for_each_reduced_word<G: CoxeterGroup>(g: &G, x: &G::Elem, f: &mut impl FnMut(&[Letter])) {
    fn go<G: CoxeterGroup>(
        g: &G,
        x: &G::Elem,
        len: usize,
        suffix: &mut Vec<Letter>,
        out: &mut Vec<Letter>,
        f: &mut impl FnMut(&[Letter]),
    ) {
        if len == 0 {
            out.clear();
            out.extend(suffix.iter().rev());
            f(out);
            return;
        }
        for i in 1..=g.rank() {
            if g.is_right_descent(x, i) {
                suffix.push(i as Letter);
                go(g, &g.right_mul(x, i), len - 1, suffix, out, f);
                suffix.pop();
            }
        }
    }
    let len = g.length(x);
    go(g, x, len, &mut Vec::with_capacity(len), &mut Vec::with_capacity(len), f);
}

/// The set of reduced words of `x`; empty when `x` lies outside the group.
pub fn reduced_words<G: CoxeterGroup>(g: &G, x: &G::Elem) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    if g.contains(x) {
        for_each_reduced_word(g, x, &mut |w| {
            out.insert(Word::from_vec_unchecked(w.to_vec()));
        });
    }
    out
}

/// `|𝓡(x)|` by memoised descent recursion.
pub fn count_reduced_words<G: CoxeterGroup>(g: &G, x: &G::Elem) -> BigUint {
    count_reduced_words_cached(g, x, &mut HashMap::new())
}

/// As [`count_reduced_words`], sharing `memo` across calls on the same group.
pub fn count_reduced_words_cached<G: CoxeterGroup>(
    g: &G,
    x: &G::Elem,
    memo: &mut HashMap<G::Elem, BigUint>,
) -> BigUint {
    fn go<G: CoxeterGroup>(g: &G, x: &G::Elem, memo: &mut HashMap<G::Elem, BigUint>) -> BigUint {
        if let Some(c) = memo.get(x) {
            return c.clone();
        }
        let c = if g.length(x) == 0 {
            BigUint::one()
        } else {
            let mut c = BigUint::zero();
            for i in 1..=g.rank() {
                if g.is_right_descent(x, i) {
                    c += go(g, &g.right_mul(x, i), memo);
                }
            }
            c
        };
        memo.insert(x.clone(), c.clone());
        c
    }
    if !g.contains(x) {
        return BigUint::zero();
    }
    go(g, x, memo)
}

/// Breadth-first distances from the identity in the right Cayley graph.
/// Independent of the closed-form length functions.
pub fn cayley_distances<G: CoxeterGroup>(g: &G) -> HashMap<G::Elem, usize> {
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(g.identity(), 0);
    queue.push_back(g.identity());
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for i in 1..=g.rank() {
            let y = g.right_mul(&x, i);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All `x′` with `x = x′x″` and `ℓ(x) = ℓ(x′) + ℓ(x″)`, found as the elements
/// reachable from the identity along prefixes of reduced words of `x`.
pub fn length_additive_prefixes<G: CoxeterGroup>(g: &G, x: &G::Elem) -> BTreeSet<G::Elem> {
    let total = g.length(x);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(g.identity());
    queue.push_back(g.identity());
    while let Some(p) = queue.pop_front() {
        let lp = g.length(&p);
        for i in 1..=g.rank() {
            let q = g.right_mul(&p, i);
            if g.length(&q) != lp + 1 || seen.contains(&q) {
                continue;
            }
            let rest = g.compose(&g.inverse(&q), x);
            if g.length(&rest) + lp + 1 == total {
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    seen
}

pub fn reduced_words_a(x: &Permutation) -> BTreeSet<Word> {
    reduced_words(&TypeA { n: x.size() }, x)
}

pub fn reduced_words_b(x: &SignedPermutation) -> BTreeSet<Word> {
    reduced_words(&TypeB { n: x.size() }, x)
}

/// Empty when `x ∉ Dₙ`.
pub fn reduced_words_d(x: &SignedPermutation) -> BTreeSet<Word> {
    reduced_words(&TypeD { n: x.size() }, x)
}

pub fn length_a(x: &Permutation) -> usize {
    x.inversions()
}

pub fn length_b(x: &SignedPermutation) -> usize {
    length_b_formula(x)
}

pub fn length_d(x: &SignedPermutation) -> Result<usize> {
    if !x.in_type_d() {
        return Err(Error::NotInGroup(format!("{x} (odd number of negative entries, not in D{})", x.size())));
    }
    Ok(length_d_formula(x))
}

/// `r(π) = |𝓡(π)|`.
pub fn count_reduced_words_a(x: &Permutation) -> BigUint {
    count_reduced_words(&TypeA { n: x.size() }, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn words(xs: &[&str]) -> BTreeSet<Word> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(reduced_words_a(&p("231")), words(&["12"]));
        assert_eq!(reduced_words_a(&p("312")), words(&["21"]));
        assert_eq!(reduced_words_a(&p("123")), words(&[""]));
        assert_eq!(
            reduced_words_a(&p("231645")),
            words(&["1254", "1524", "1542", "5124", "5142", "5412"])
        );
        assert_eq!(reduced_words_a(&p("321")), words(&["121", "212"]));
        assert_eq!(count_reduced_words_a(&p("4321")), BigUint::from(16u32));
    }

    #[test]
    fn type_b_and_d_examples() {
        assert_eq!(reduced_words_b(&sp("-1,2")), words(&["1"]));
        assert!(reduced_words_d(&sp("-1,2")).is_empty());
        assert_eq!(reduced_words_d(&sp("-2,-1")), words(&["1"]));
        assert_eq!(length_d(&sp("-1,2")), Err(Error::NotInGroup("-1,2 (odd number of negative entries, not in D2)".into())));
        for w in reduced_words_b(&sp("-2,-1")) {
            assert_eq!(evaluate_word(&TypeB { n: 2 }, w.letters()), sp("-2,-1"));
        }
    }

    #[test]
    fn descent_shortcuts_match_lengths() {
        let b = TypeB { n: 3 };
        let d = TypeD { n: 3 };
        for x in b.elements() {
            for i in 1..=3 {
                assert_eq!(
                    b.is_right_descent(&x, i),
                    b.length(&b.right_mul(&x, i)) < b.length(&x)
                );
                if x.in_type_d() {
                    assert_eq!(
                        d.is_right_descent(&x, i),
                        d.length(&d.right_mul(&x, i)) < d.length(&x)
                    );
                }
            }
        }
    }

    #[test]
    fn length_formulas_match_bfs() {
        let b = TypeB { n: 3 };
        let dist = cayley_distances(&b);
        assert_eq!(dist.len(), 48);
        for (x, d) in &dist {
            assert_eq!(length_b_formula(x), *d, "{x}");
        }
        let d4 = TypeD { n: 4 };
        let dist = cayley_distances(&d4);
        assert_eq!(dist.len(), 192);
        for (x, d) in &dist {
            assert_eq!(length_d_formula(x), *d, "{x}");
        }
    }

    #[test]
    fn prefixes_of_longest_element() {
        let g = TypeA { n: 3 };
        assert_eq!(length_additive_prefixes(&g, &p("321")).len(), 6);
        assert_eq!(length_additive_prefixes(&g, &p("231")).len(), 3);
    }
}
