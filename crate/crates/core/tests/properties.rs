use std::collections::{BTreeSet, HashMap};

use cb_core::bialgebra::{check_associative, check_coassociative, check_compatible, check_counit};
use cb_core::coxeter::{evaluate_word, reduced_words_a, TypeA};
use cb_core::families::has_decreasing_reduced_word;
use cb_core::linear::{int, LinComb};
use cb_core::perm::Permutation;
use cb_core::pi::{pi_product, PiBialgebra, PiKey};
use cb_core::qsym::{kostka, m_to_k, m_to_l, Composition, Partition, QSym};
use cb_core::verify::ssyt_count;
use cb_core::wbialg::{w_coproduct, w_counit, w_product, WKey, WordBialgebra};
use cb_core::word::{shuffle, Letter, Word};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as Letter).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn wkey(max_frame: usize, max_len: usize) -> impl Strategy<Value = WKey> {
    (0..=max_frame).prop_flat_map(move |n| {
        let letters = if n == 0 {
            Just(vec![]).boxed()
        } else {
            prop::collection::vec(1..=n as Letter, 0..=max_len).boxed()
        };
        letters.prop_map(move |w| WKey::new(Word::new(w).unwrap(), n).unwrap())
    })
}

fn composition(max: usize) -> impl Strategy<Value = Composition> {
    (0..=max).prop_flat_map(|n| {
        let masks = if n == 0 { 0..1u64 } else { 0..1u64 << (n - 1) };
        masks.prop_map(move |m| Composition::from_mask(n, m))
    })
}

/// Connected components of reduced words under commutation and braid moves.
fn braid_classes(pi: &Permutation) -> usize {
    let words: Vec<Vec<Letter>> = reduced_words_a(pi).into_iter().map(Vec::from).collect();
    let index: HashMap<&[Letter], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn root(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, w) in words.iter().enumerate() {
        for j in 0..w.len() {
            let mut v = w.clone();
            if j + 1 < w.len() && w[j].abs_diff(w[j + 1]) > 1 {
                v.swap(j, j + 1);
            } else if j + 2 < w.len() && w[j] == w[j + 2] && w[j].abs_diff(w[j + 1]) == 1 {
                v[j] = w[j + 1];
                v[j + 1] = w[j];
                v[j + 2] = w[j + 1];
            } else {
                continue;
            }
            let k = *index.get(v.as_slice()).expect("move keeps words reduced");
            let (a, b) = (root(&mut parent, i), root(&mut parent, k));
            parent[a] = b;
        }
    }
    (0..words.len()).filter(|&i| root(&mut parent, i) == i).count()
}

#[test]
fn reduced_words_are_braid_connected() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            assert_eq!(braid_classes(&p), 1, "{p}");
        }
    }
}

#[test]
fn decreasing_word_criterion() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let brute = reduced_words_a(&p)
                .iter()
                .any(|w| w.letters().windows(2).all(|x| x[0] > x[1]));
            assert_eq!(has_decreasing_reduced_word(&p), brute, "{p}");
            assert_eq!(p.satisfies_decreasing_word_criterion(), brute, "{p}");
            assert_eq!(p.has_descending_cycles(), brute, "{p}");
        }
    }
}

#[test]
fn kostka_against_tableaux() {
    for n in 1..=6 {
        for l in Partition::all(n) {
            for mu in Partition::all(n) {
                assert_eq!(kostka(&l, mu.parts()), ssyt_count(&l, mu.parts()), "K({l},{mu})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_words_evaluate_back(p in (1..=6usize).prop_flat_map(perm)) {
        let g = TypeA { n: p.size() };
        for w in reduced_words_a(&p) {
            prop_assert_eq!(w.len(), p.inversions());
            prop_assert_eq!(&evaluate_word(&g, w.letters()), &p);
        }
    }

    #[test]
    fn shuffle_count_and_flatten(
        u in prop::collection::vec(1..9 as Letter, 0..5),
        v in prop::collection::vec(1..9 as Letter, 0..5),
    ) {
        let s = shuffle(&u, &v);
        let binom = (1..=v.len()).fold(1usize, |a, k| a * (u.len() + k) / k);
        prop_assert_eq!(s.len(), binom);
        let w = Word::new(u).unwrap();
        prop_assert_eq!(w.flatten().flatten(), w.flatten());
        prop_assert!(w.flatten().is_packed());
    }

    #[test]
    fn lincomb_json_roundtrip(terms in prop::collection::vec((composition(5), -40i64..40, 1i64..9), 0..6)) {
        let x: LinComb<Composition> = terms
            .into_iter()
            .map(|(k, a, b)| (k, int(a) / int(b)))
            .collect();
        prop_assert_eq!(LinComb::<Composition>::from_json(&x.to_json()).unwrap(), x.clone());
        let rendered = QSym(x.clone()).render(cb_core::qsym::Basis::M).unwrap();
        prop_assert_eq!(QSym::parse(&rendered).unwrap(), QSym(x));
    }

    #[test]
    fn w_laws(a in wkey(3, 3), b in wkey(3, 3), c in wkey(2, 2)) {
        let alg = WordBialgebra;
        prop_assert!(check_associative(&alg, &a, &b, &c).is_ok());
        prop_assert!(check_coassociative(&alg, &a).is_ok());
        prop_assert!(check_counit(&alg, &a).is_ok());
        prop_assert!(check_compatible(&alg, &a, &b).is_ok());
    }

    #[test]
    fn empty_word_in_positive_frame_is_not_invertible(n in 1..4usize, y in wkey(3, 3)) {
        // grouplike of counit 1, yet no product with it reaches the unit
        let e = WKey::new(Word::empty(), n).unwrap();
        prop_assert_eq!(w_counit(&e), int(1));
        prop_assert_eq!(w_coproduct(&e).len(), 1);
        prop_assert!(w_product(&e, &y).keys().all(|k| k.frame >= n));
    }

    #[test]
    fn pi_associative(u in perm(3), v in perm(3), w in perm(2)) {
        prop_assert!(check_associative(&PiBialgebra, &PiKey(u), &PiKey(v), &PiKey(w)).is_ok());
    }

    #[test]
    fn pi_products_stay_in_frame(u in perm(3), v in perm(4)) {
        let p = pi_product(&PiKey(u.clone()), &PiKey(v.clone())).unwrap();
        let degree = u.inversions() + v.inversions();
        prop_assert!(p.keys().all(|k| k.0.size() == 6 && k.0.inversions() == degree));
        prop_assert!(p.iter().all(|(_, c)| *c == int(1)));
    }

    #[test]
    fn qsym_basis_roundtrips(a in composition(8)) {
        let basis = LinComb::basis(a.clone());
        prop_assert_eq!(m_to_l(&QSym::l(&a).0), basis);
        if let Ok(k) = QSym::k(&a) {
            prop_assert_eq!(m_to_k(&k.0).unwrap(), LinComb::basis(a.clone()));
        }
    }

    #[test]
    fn qsym_commutative(a in composition(4), b in composition(4)) {
        let (x, y) = (QSym::l(&a), QSym::m(b));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }
}

#[test]
fn peak_compositions_only_for_k() {
    let all: BTreeSet<bool> = (1..=5)
        .flat_map(Composition::all)
        .map(|a| QSym::k(&a).is_ok() == a.is_peak())
        .collect();
    assert_eq!(all, BTreeSet::from([true]));
}
