//! The permutation families 𝒜(n) and ℬ(m,n), and the counts N(p,q).

use std::collections::BTreeSet;

use num::BigUint;

use crate::coxeter::count_reduced_words_a;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Letter;

/// Relabels a permutation of `1..k` order-preservingly onto `targets`.
fn relabel(p: &Permutation, targets: &[Letter]) -> Vec<Letter> {
    p.oneline().iter().map(|&x| targets[x as usize - 1]).collect()
}

/// 𝒜(n): `π₁ = πₙ + 1` and the flattened middle lies in 𝒜(n−2).
pub fn gen_a_set(n: usize) -> Result<BTreeSet<Permutation>> {
    match n {
        0 => Err(Error::InvalidInput("𝒜(n) needs n ≥ 1".into())),
        1 => Ok(BTreeSet::from([Permutation::identity(1)])),
        2 => Ok(BTreeSet::from([Permutation::longest(2)])),
        _ => {
            let inner = gen_a_set(n - 2)?;
            let mut out = BTreeSet::new();
            for k in 1..n as Letter {
                let rest: Vec<Letter> = (1..=n as Letter).filter(|&x| x != k && x != k + 1).collect();
                for sigma in &inner {
                    let mut v = vec![k + 1];
                    v.extend(relabel(sigma, &rest));
                    v.push(k);
                    out.insert(Permutation::from_vec_unchecked(v));
                }
            }
            Ok(out)
        }
    }
}

/// ℬ(m,n) for `1 ≤ m ≤ n`.
pub fn gen_b_set(m: usize, n: usize) -> Result<BTreeSet<Permutation>> {
    if m == 0 || m > n {
        return Err(Error::InvalidInput(format!("ℬ(m,n) needs 1 ≤ m ≤ n, got m={m}, n={n}")));
    }
    if m == 1 || m == n {
        return Ok(BTreeSet::from([Permutation::longest(n)]));
    }
    let ml = m as Letter;
    let rest: Vec<Letter> = (1..=n as Letter).filter(|&x| x != ml).collect();
    let mut out = BTreeSet::new();
    for sigma in gen_b_set(m - 1, n - 1)? {
        let mut v = vec![ml];
        v.extend(relabel(&sigma, &rest));
        out.insert(Permutation::from_vec_unchecked(v));
    }
    for sigma in gen_b_set(m, n - 1)? {
        let mut v = relabel(&sigma, &rest);
        v.push(ml);
        out.insert(Permutation::from_vec_unchecked(v));
    }
    Ok(out)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `N(p,q) = C(P+Q, P) · r(p⋯321) · r(q⋯321)` with `P = C(p,2)`, `Q = C(q,2)`.
pub fn n_pq(p: usize, q: usize) -> BigUint {
    let big_p = (p * p.saturating_sub(1) / 2) as u64;
    let big_q = (q * q.saturating_sub(1) / 2) as u64;
    binomial(big_p + big_q, big_p)
        * count_reduced_words_a(&Permutation::longest(p))
        * count_reduced_words_a(&Permutation::longest(q))
}

/// Searches for a strictly decreasing reduced word directly, building it
/// from the right with increasing letters.
pub fn has_decreasing_reduced_word(pi: &Permutation) -> bool {
    fn go(x: &mut Permutation, min_letter: usize) -> bool {
        if x.is_identity() {
            return true;
        }
        for i in min_letter..x.size() {
            if x.at(i) > x.at(i + 1) {
                x.swap_positions(i);
                let found = go(x, i + 1);
                x.swap_positions(i);
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(&mut pi.clone(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[&str]) -> BTreeSet<Permutation> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn listed_families() {
        assert_eq!(gen_a_set(3).unwrap(), set(&["231", "312"]));
        assert_eq!(gen_a_set(4).unwrap(), set(&["2431", "3412", "4213"]));
        assert_eq!(
            gen_a_set(5).unwrap(),
            set(&["24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"])
        );
        assert_eq!(gen_b_set(2, 4).unwrap(), set(&["2431", "3412", "4132"]));
        assert_eq!(gen_b_set(3, 4).unwrap(), set(&["3241", "3412", "4213"]));
        assert_eq!(
            gen_b_set(3, 5).unwrap(),
            set(&["32541", "34512", "35142", "42513", "45123", "52143"])
        );
        assert_eq!(gen_b_set(4, 5).unwrap(), set(&["43251", "43512", "45213", "53214"]));
        assert_eq!(gen_b_set(1, 4).unwrap(), set(&["4321"]));
        assert!(gen_b_set(0, 3).is_err());
        assert!(gen_b_set(4, 3).is_err());
        assert!(gen_a_set(0).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        // C(4,1)·r(321)·r(21) = 4·2·1
        assert_eq!(n_pq(3, 2), BigUint::from(8u32));
    }

    #[test]
    fn decreasing_words() {
        assert!(has_decreasing_reduced_word(&"123".parse().unwrap()));
        assert!(!has_decreasing_reduced_word(&"231".parse().unwrap()));
        assert!(has_decreasing_reduced_word(&"312".parse().unwrap()));
        assert!(!has_decreasing_reduced_word(&"321".parse().unwrap()));
    }
}
