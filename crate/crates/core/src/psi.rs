//! The morphism `Ψ(x) = Σ_α ζ_α(x) M_α` from W to QSym, its closed forms
//! in the fundamental and peak bases, and the weighted variants used for
//! signed permutations.

use std::sync::Arc;

use num::Zero;

use crate::error::{Error, Result};
use crate::linear::{pow2, LinComb, Rational, Tensor};
use crate::qsym::{k_to_m, l_to_m, Basis, Composition, QSym};
use crate::wbialg::WKey;
use crate::word::{descents, peaks, valleys, Letter};
use crate::zeta::{admit, Policy, Zeta, ZetaRegistry};

/// `Ψ` for a fixed functional that has passed (or been excused from) its
/// self-test.
#[derive(Clone, Debug)]
pub struct Psi {
    zeta: Arc<dyn Zeta>,
    warning: Option<String>,
}

impl Psi {
    pub fn new(registry: &ZetaRegistry, name: &str, policy: Policy) -> Result<Self> {
        Psi::from_zeta(registry.get(name)?, registry, policy)
    }

    pub fn from_zeta(zeta: Arc<dyn Zeta>, registry: &ZetaRegistry, policy: Policy) -> Result<Self> {
        let warning = admit(zeta.as_ref(), registry, policy)?;
        Ok(Psi { zeta, warning })
    }

    pub fn zeta(&self) -> &dyn Zeta {
        self.zeta.as_ref()
    }

    /// The self-test failure tolerated under [`Policy::Warn`].
    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    pub fn apply_key(&self, a: &WKey) -> QSym {
        psi_key(self.zeta.as_ref(), a)
    }

    pub fn apply(&self, x: &LinComb<WKey>) -> QSym {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            out.add_scaled(&self.apply_key(a).0, c);
        }
        QSym(out)
    }

    pub fn apply_tensor(&self, x: &LinComb<Tensor<WKey, WKey>>) -> LinComb<Tensor<Composition, Composition>> {
        let mut out = LinComb::zero();
        for (Tensor(a, b), c) in x.iter() {
            let (pa, pb) = (self.apply_key(a), self.apply_key(b));
            out.add_scaled(&crate::linear::tensor(&pa.0, &pb.0), c);
        }
        out
    }
}

/// `Σ_α ζ_α([w,n]) M_α`, with no self-test.
pub fn psi_key(zeta: &dyn Zeta, a: &WKey) -> QSym {
    let w = a.word.letters();
    let l = w.len();
    if l == 0 {
        return QSym::one().scale(&zeta.eval_key(a));
    }
    // block values ζ([wᵢ⋯wⱼ₋₁,n]), then one product per composition
    let mut block = vec![vec![Rational::zero(); l + 1]; l + 1];
    for i in 0..l {
        for j in i + 1..=l {
            block[i][j] = zeta.eval(&w[i..j], a.frame);
        }
    }
    let mut out = LinComb::zero();
    for alpha in Composition::all(l) {
        let mut c = Rational::from_integer(1.into());
        let mut start = 0;
        for &p in alpha.parts() {
            c *= &block[start][start + p];
            if c.is_zero() {
                break;
            }
            start += p;
        }
        out.add_term(alpha, c);
    }
    QSym(out)
}

fn comp_of(n: usize, set: impl IntoIterator<Item = usize>) -> Composition {
    Composition::from_mask(n, set.into_iter().fold(0u64, |m, i| m | 1 << (i - 1)))
}

fn reversed(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().copied().collect()
}

/// Closed form of `Ψ` for the eight monotone configurations (and `C`),
/// returned with the basis it is naturally a single term in.
pub fn psi_fast_term(config: &str, a: &WKey) -> Result<(Basis, Composition)> {
    let u = a.word.letters();
    let n = u.len();
    let r = reversed(u);
    let out = match config {
        "le" => (Basis::L, comp_of(n, descents(u))),
        "gt" => (Basis::L, comp_of(n, descents(u)).complement()),
        "ge" => (Basis::L, comp_of(n, descents(&r)).reverse()),
        "lt" => (Basis::L, comp_of(n, descents(&r)).transpose()),
        "gtle" | "C" => (Basis::K, comp_of(n, peaks(u))),
        "ltge" => (Basis::K, comp_of(n, valleys(u))),
        "gelt" => (Basis::K, comp_of(n, peaks(&r)).flat()?),
        "legt" => (Basis::K, comp_of(n, valleys(&r)).flat()?),
        other => {
            return Err(Error::UnknownName(format!(
                "{other} has no closed form (expected le, gt, ge, lt, gtle, ltge, gelt, legt or C)"
            )))
        }
    };
    Ok(out)
}

pub fn psi_fast(config: &str, a: &WKey) -> Result<QSym> {
    let (basis, alpha) = psi_fast_term(config, a)?;
    Ok(match basis {
        Basis::L => QSym(l_to_m(&alpha)),
        Basis::K => QSym(k_to_m(&alpha)?),
        Basis::M => QSym::m(alpha),
    })
}

/// `L_α ↦ K_{Λ(α)}`.
pub fn theta(x: &QSym) -> Result<QSym> {
    let mut out = LinComb::zero();
    for (alpha, c) in x.to_l().iter() {
        out.add_scaled(&k_to_m(&alpha.lambda())?, c);
    }
    Ok(QSym(out))
}

/// Number of letters of `w` that are at most `small`.
pub fn small_letters(w: &[Letter], small: Letter) -> usize {
    w.iter().filter(|&&l| l <= small).count()
}

fn weighted_peak(x: &LinComb<WKey>, small: Option<Letter>) -> QSym {
    let mut by_peak: LinComb<Composition> = LinComb::zero();
    for (a, c) in x.iter() {
        let w = a.word.letters();
        let weight = small.map_or_else(|| pow2(0), |s| pow2(-(small_letters(w, s) as i64)));
        by_peak.add_term(comp_of(w.len(), peaks(w)), c * weight);
    }
    QSym::from_basis(Basis::K, &by_peak).expect("peak sets index peak compositions")
}

/// `Ψ^B([w,n]) = 2^{−o_B(w)} Ψ_{>|≤}([w,n])`, with `o_B` counting 1s.
pub fn psi_b(x: &LinComb<WKey>) -> QSym {
    weighted_peak(x, Some(1))
}

/// `Ψ^C = Ψ_{>|≤}`.
pub fn psi_c(x: &LinComb<WKey>) -> QSym {
    weighted_peak(x, None)
}

/// `Ψ^D([w,n]) = 2^{−o_D(w)} Ψ_{>|≤}([w,n])`, with `o_D` counting 1s and 2s.
pub fn psi_d(x: &LinComb<WKey>) -> QSym {
    weighted_peak(x, Some(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> WKey {
        s.parse().unwrap()
    }

    fn q(s: &str) -> QSym {
        QSym::parse(s).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(psi_fast("gt", &k("[21;2]")).unwrap(), q("L[2]"));
        assert_eq!(psi_fast("le", &k("[12;3]")).unwrap(), q("L[2]"));
        assert_eq!(psi_fast("le", &k("[;3]")).unwrap(), QSym::one());
        assert_eq!(psi_fast("gtle", &k("[132;3]")).unwrap(), q("K[2,1]"));
        assert!(psi_fast("B", &k("[1;1]")).is_err());
    }

    #[test]
    fn agrees_with_definition() {
        let r = ZetaRegistry::standard();
        for name in ["le", "ge", "lt", "gt", "gtle", "ltge", "gelt", "legt", "C"] {
            let psi = Psi::new(&r, name, Policy::Fail).unwrap();
            for a in crate::zeta::sample_keys(3, 4) {
                assert_eq!(psi.apply_key(&a), psi_fast(name, &a).unwrap(), "{name} at {a}");
            }
        }
    }

    #[test]
    fn theta_of_fundamental() {
        for a in crate::zeta::sample_keys(3, 4) {
            let x = LinComb::basis(a.clone());
            let le = QSym(l_to_m(&comp_of(a.degree(), descents(a.word.letters()))));
            assert_eq!(theta(&le).unwrap(), psi_c(&x));
        }
    }

    #[test]
    fn weighted_routes() {
        let r = ZetaRegistry::standard();
        let b = Psi::new(&r, "B", Policy::Fail).unwrap();
        let d = Psi::new(&r, "D", Policy::Fail).unwrap();
        for a in crate::zeta::sample_keys(3, 4) {
            let x = LinComb::basis(a.clone());
            assert_eq!(b.apply(&x), psi_b(&x));
            assert_eq!(d.apply(&x), psi_d(&x));
        }
    }
}
