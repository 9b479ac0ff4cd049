//! Brute-force products computed on reduced words: shuffle every pair of
//! words, evaluate each interleaving in the group, and check that the words
//! landing on each element are exactly its reduced words.

use std::collections::{BTreeMap, HashMap};

use num::BigUint;
use rayon::prelude::*;

use crate::coxeter::{count_reduced_words_cached, CoxeterGroup};
use crate::error::{Error, Result};
use crate::word::Letter;

/// Words from different `(a, b)` pairs or different interleavings are
/// distinct because `a` and `b` use disjoint alphabets, so counts equal
/// numbers of distinct words.
fn classify<G: CoxeterGroup>(
    g: &G,
    left: &[Vec<Letter>],
    right: &[Vec<Letter>],
) -> Result<HashMap<G::Elem, u64>> {
    fn go<G: CoxeterGroup>(
        g: &G,
        a: &[Letter],
        b: &[Letter],
        x: &mut G::Elem,
        counts: &mut HashMap<G::Elem, u64>,
        ok: &mut bool,
    ) {
        if !*ok {
            return;
        }
        if a.is_empty() && b.is_empty() {
            match counts.get_mut(x) {
                Some(c) => *c += 1,
                None => {
                    counts.insert(x.clone(), 1);
                }
            }
            return;
        }
        for (head, rest_a, rest_b) in [
            (a.first(), a.get(1..).unwrap_or(&[]), b),
            (b.first(), a, b.get(1..).unwrap_or(&[])),
        ] {
            let Some(&i) = head else { continue };
            let i = i as usize;
            if g.is_right_descent(x, i) {
                *ok = false;
                return;
            }
            g.right_mul_assign(x, i);
            go(g, rest_a, rest_b, x, counts, ok);
            g.right_mul_assign(x, i);
        }
    }

    left.par_iter()
        .map(|a| {
            let mut counts = HashMap::new();
            let mut x = g.identity();
            let mut ok = true;
            for b in right {
                go(g, a, b, &mut x, &mut counts, &mut ok);
            }
            if ok {
                Ok(counts)
            } else {
                Err(Error::InternalInconsistency(format!(
                    "a shuffle of {} with a right factor word is not reduced",
                    crate::word::Word::from_vec_unchecked(a.clone())
                )))
            }
        })
        .try_reduce(HashMap::new, |mut acc, part| {
            for (k, c) in part {
                *acc.entry(k).or_insert(0) += c;
            }
            Ok(acc)
        })
}

/// Elements hit by shuffling `left` words with (already shifted) `right`
/// words, after checking each class is a full set of reduced words hit
/// exactly once.
pub fn shuffle_classes<G: CoxeterGroup>(
    g: &G,
    left: &[Vec<Letter>],
    right: &[Vec<Letter>],
) -> Result<Vec<G::Elem>> {
    let counts = classify(g, left, right)?;
    let sorted: BTreeMap<_, _> = counts.into_iter().collect();
    let mut memo = HashMap::new();
    for (x, c) in &sorted {
        let r = count_reduced_words_cached(g, x, &mut memo);
        if r != BigUint::from(*c) {
            return Err(Error::InternalInconsistency(format!(
                "{c} shuffled words evaluate to {x}, which has {r} reduced words"
            )));
        }
    }
    Ok(sorted.into_keys().collect())
}
