//! Stanley symmetric functions of types A, B, C and D.

use std::collections::HashMap;

use num::Zero;

use crate::coxeter::{for_each_reduced_word, CoxeterGroup, TypeA, TypeB, TypeD};
use crate::error::{Error, Result};
use crate::linear::{pow2, LinComb, Rational};
use crate::perm::{Permutation, SignedPermutation};
use crate::pi::{pi_counting_character, pi_product, pi_to_w, PiKey};
use crate::psi::{small_letters, Psi};
use crate::qsym::{is_symmetric, k_to_m, l_masks_to_m, Composition, QSym};
use crate::typebd::{signed_to_w, SignedKey, SignedType};
use crate::word::Letter;
use crate::zeta::{Policy, ZetaRegistry};

fn ascent_mask(w: &[Letter]) -> u64 {
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).fold(0, |m, i| m | 1 << (i - 1))
}

fn peak_mask(w: &[Letter]) -> u64 {
    (2..w.len())
        .filter(|&i| w[i - 2] <= w[i - 1] && w[i - 1] > w[i])
        .fold(0, |m, i| m | 1 << (i - 1))
}

fn require_symmetric(what: &str, f: QSym) -> Result<QSym> {
    if !is_symmetric(&f) {
        return Err(Error::InternalInconsistency(format!("{what} is not symmetric: {f}")));
    }
    Ok(f)
}

/// `F_π = Σ_{w∈𝓡(π)} L_{αᶜ}` with `I(α) = Des(w)`.
pub fn stanley_f(pi: &Permutation) -> Result<QSym> {
    let g = TypeA { n: pi.size() };
    let l = g.length(pi);
    let mut masks: HashMap<u64, Rational> = HashMap::new();
    let one = Rational::from_integer(1.into());
    for_each_reduced_word(&g, pi, &mut |w| {
        *masks.entry(ascent_mask(w)).or_insert_with(Rational::zero) += &one;
    });
    require_symmetric(&format!("F_{pi}"), QSym(l_masks_to_m(l, &masks)))
}

/// `Ψ_>([π])` evaluated from its defining sum over compositions.
pub fn stanley_f_via_psi(pi: &Permutation) -> Result<QSym> {
    let psi = Psi::new(&ZetaRegistry::standard(), "gt", Policy::Fail)?;
    Ok(psi.apply(&pi_to_w(&PiKey(pi.clone()))))
}

/// `Σ_w 2^{−o(w)} K_{Peak(w)}` over reduced words of `pi` in `g`, where
/// `o(w)` counts letters at most `small` (no weight when `small` is `None`).
fn weighted_peak_sum<G: CoxeterGroup>(g: &G, pi: &G::Elem, small: Option<Letter>) -> Result<QSym> {
    if !g.contains(pi) {
        return Ok(QSym::zero());
    }
    let l = g.length(pi);
    let mut by_peak: HashMap<(u64, usize), Rational> = HashMap::new();
    let one = Rational::from_integer(1.into());
    for_each_reduced_word(g, pi, &mut |w| {
        let o = small.map_or(0, |s| small_letters(w, s));
        *by_peak.entry((peak_mask(w), o)).or_insert_with(Rational::zero) += &one;
    });
    let mut out = LinComb::zero();
    let mut keys: Vec<_> = by_peak.into_iter().collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0));
    for ((mask, o), c) in keys {
        let alpha = Composition::from_mask(l, mask);
        out.add_scaled(&k_to_m(&alpha)?, &(c * pow2(-(o as i64))));
    }
    Ok(QSym(out))
}

/// `F^B_π = Ψ^B([π]_B)`.
pub fn stanley_fb(pi: &SignedPermutation) -> Result<QSym> {
    let f = weighted_peak_sum(&TypeB { n: pi.size() }, pi, Some(1))?;
    require_symmetric(&format!("F^B_{pi}"), f)
}

/// `F^C_π = Ψ^C([π]_B)`.
pub fn stanley_fc(pi: &SignedPermutation) -> Result<QSym> {
    let f = weighted_peak_sum(&TypeB { n: pi.size() }, pi, None)?;
    require_symmetric(&format!("F^C_{pi}"), f)
}

/// `F^D_π = Ψ^D([π]_D)`; zero when `π ∉ Dₙ`.
pub fn stanley_fd(pi: &SignedPermutation) -> Result<QSym> {
    let f = weighted_peak_sum(&TypeD { n: pi.size() }, pi, Some(2))?;
    require_symmetric(&format!("F^D_{pi}"), f)
}

/// The signed constructors evaluated through a registered functional
/// (`B`, `C` or `D`) and the defining sum over compositions.
pub fn stanley_signed_via_psi(zeta: &str, pi: &SignedPermutation) -> Result<QSym> {
    let ty = match zeta {
        "B" | "C" => SignedType::B,
        "D" => SignedType::D,
        other => return Err(Error::UnknownName(format!("{other} (expected B, C or D)"))),
    };
    let x = match ty {
        SignedType::B => signed_to_w(&SignedKey::b(pi.clone())),
        SignedType::D => match SignedKey::d(pi.clone()) {
            Some(k) => signed_to_w(&k),
            None => return Ok(QSym::zero()),
        },
    };
    Ok(Psi::new(&ZetaRegistry::standard(), zeta, Policy::Fail)?.apply(&x))
}

/// `r(·)/ℓ(·)!` is multiplicative on `[u]·[v]`.
pub fn counting_morphism_check(u: &PiKey, v: &PiKey) -> Result<bool> {
    let lhs: Rational = pi_product(u, v)?
        .iter()
        .map(|(k, c)| c * pi_counting_character(k))
        .sum();
    Ok(lhs == pi_counting_character(u) * pi_counting_character(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::{expand_in_schur, schur_s, Partition};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn type_a() {
        assert_eq!(stanley_f(&p("21")).unwrap(), QSym::parse("M[1]").unwrap());
        assert_eq!(stanley_f(&p("1")).unwrap(), QSym::one());
        let f = stanley_f(&p("4321")).unwrap();
        assert_eq!(f, schur_s(&Partition::staircase(4)));
        assert_eq!(f, stanley_f_via_psi(&p("4321")).unwrap());
        assert_eq!(expand_in_schur(&stanley_f(&p("2143")).unwrap()).unwrap().to_string(), "[1,1] + [2]");
    }

    #[test]
    fn signed() {
        assert_eq!(stanley_fb(&sp("1,2")).unwrap(), QSym::one());
        let x = sp("-1,2");
        assert_eq!(stanley_fb(&x).unwrap(), QSym::parse("M[1]").unwrap());
        assert_eq!(stanley_fc(&x).unwrap(), QSym::parse("2*M[1]").unwrap());
        assert_eq!(stanley_fd(&x).unwrap(), QSym::zero());
        for s in ["-2,1,3", "1,-3,-2", "-3,-2,-1"] {
            let x = sp(s);
            assert_eq!(stanley_fb(&x).unwrap(), stanley_signed_via_psi("B", &x).unwrap());
            assert_eq!(stanley_fc(&x).unwrap(), stanley_signed_via_psi("C", &x).unwrap());
            assert_eq!(stanley_fd(&x).unwrap(), stanley_signed_via_psi("D", &x).unwrap());
        }
    }

    #[test]
    fn counting() {
        assert!(counting_morphism_check(&"321".parse().unwrap(), &"21".parse().unwrap()).unwrap());
        assert!(counting_morphism_check(&PiKey::one(), &"312".parse().unwrap()).unwrap());
    }
}
