//! The right Π-module coalgebras spanned by `[π]_B` and `[π]_D`.
//!
//! No closed rule for the action is known; it is computed here by shuffling
//! reduced words and regrouping.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::{length_additive_prefixes, reduced_words, CoxeterGroup, TypeB, TypeD};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Tensor};
use crate::oracle::shuffle_classes;
use crate::perm::SignedPermutation;
use crate::pi::PiKey;
use crate::wbialg::WKey;
use crate::word::Letter;

/// Which signed-permutation type a key belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignedType {
    B,
    D,
}

impl SignedType {
    fn suffix(self) -> &'static str {
        match self {
            SignedType::B => "_B",
            SignedType::D => "_D",
        }
    }
}

/// `[π]_B` or `[π]_D` for `π ∈ Bₙ`; frame `n`. A `D` key is only ever built
/// for `π ∈ Dₙ`, since `[π]_D = 0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedKey {
    pub ty: SignedType,
    pub perm: SignedPermutation,
}

pub type BPiKey = SignedKey;
pub type DPiKey = SignedKey;

impl SignedKey {
    pub fn b(perm: SignedPermutation) -> Self {
        SignedKey { ty: SignedType::B, perm }
    }

    /// `None` when `perm ∉ Dₙ`, where `[perm]_D = 0`.
    pub fn d(perm: SignedPermutation) -> Option<Self> {
        perm.in_type_d().then_some(SignedKey { ty: SignedType::D, perm })
    }

    pub fn frame(&self) -> usize {
        self.perm.size()
    }

    pub fn degree(&self) -> usize {
        match self.ty {
            SignedType::B => TypeB { n: self.frame() }.length(&self.perm),
            SignedType::D => TypeD { n: self.frame() }.length(&self.perm),
        }
    }

    /// The same key as a linear combination; zero for an odd `D` key.
    pub fn to_lincomb(ty: SignedType, perm: SignedPermutation) -> LinComb<SignedKey> {
        match ty {
            SignedType::B => LinComb::basis(SignedKey::b(perm)),
            SignedType::D => SignedKey::d(perm).map(LinComb::basis).unwrap_or_default(),
        }
    }
}

impl fmt::Display for SignedKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.perm, self.ty.suffix())
    }
}

impl FromStr for SignedKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, ty) = if let Some(b) = t.strip_suffix("_B") {
            (b, SignedType::B)
        } else if let Some(b) = t.strip_suffix("_D") {
            (b, SignedType::D)
        } else {
            return Err(Error::parse(t.len(), "expected a `_B` or `_D` suffix"));
        };
        let inner = body
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected `[π]_B` or `[π]_D`"))?;
        let perm: SignedPermutation = inner.parse().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(pos + 1, msg),
            other => other,
        })?;
        match ty {
            SignedType::B => Ok(SignedKey::b(perm)),
            SignedType::D => SignedKey::d(perm.clone())
                .ok_or_else(|| Error::NotInGroup(format!("{perm} (odd number of negative entries)"))),
        }
    }
}

fn words_of(key: &SignedKey) -> Vec<Vec<Letter>> {
    let n = key.frame();
    let set = match key.ty {
        SignedType::B => reduced_words(&TypeB { n }, &key.perm),
        SignedType::D => reduced_words(&TypeD { n }, &key.perm),
    };
    set.into_iter().map(Vec::from).collect()
}

/// `[π]_B` or `[π]_D` expanded in W.
pub fn signed_to_w(key: &SignedKey) -> LinComb<WKey> {
    let n = key.frame();
    words_of(key)
        .into_iter()
        .map(|w| WKey::new_unchecked(crate::word::Word::from_vec_unchecked(w), n))
        .collect()
}

/// `[π′]_B·[π″]` (or the type D analogue) by shuffling reduced words. When
/// `π″` is an identity the only shuffles are the words of `π′` themselves,
/// which are the reduced words of `π′ ⊕ 1ₙ`.
pub fn module_action(u: &SignedKey, v: &PiKey) -> Result<LinComb<SignedKey>> {
    let m = u.frame();
    if v.degree() == 0 {
        let mut window = u.perm.window().to_vec();
        window.extend((m + 1..=m + v.frame()).map(|i| i as i32));
        let perm = SignedPermutation::new(window)?;
        return Ok(LinComb::basis(SignedKey { ty: u.ty, perm }));
    }
    let left = words_of(u);
    let right: Vec<Vec<Letter>> = crate::coxeter::reduced_words_a(&v.0)
        .into_iter()
        .map(|w| w.letters().iter().map(|&l| l + m as Letter).collect())
        .collect();
    let n = m + v.frame();
    let elems = match u.ty {
        SignedType::B => shuffle_classes(&TypeB { n }, &left, &right)?,
        SignedType::D => shuffle_classes(&TypeD { n }, &left, &right)?,
    };
    Ok(elems
        .into_iter()
        .map(|perm| SignedKey { ty: u.ty, perm })
        .collect())
}

pub fn bmodule_action(u: &BPiKey, v: &PiKey) -> Result<LinComb<BPiKey>> {
    expect_type(u, SignedType::B)?;
    module_action(u, v)
}

pub fn dmodule_action(u: &DPiKey, v: &PiKey) -> Result<LinComb<DPiKey>> {
    expect_type(u, SignedType::D)?;
    module_action(u, v)
}

fn expect_type(u: &SignedKey, ty: SignedType) -> Result<()> {
    if u.ty != ty {
        return Err(Error::InvalidOperands(format!("expected a {} key, got {u}", ty.suffix())));
    }
    Ok(())
}

/// Extends the action linearly in both arguments.
pub fn act(x: &LinComb<SignedKey>, y: &LinComb<PiKey>) -> Result<LinComb<SignedKey>> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&module_action(a, b)?, &(c * d));
        }
    }
    Ok(out)
}

/// `Δ[π]_B = Σ_{π ≐_B π′π″} [π′]_B ⊗ [π″]_B`, and likewise for type D.
pub fn signed_coproduct(u: &SignedKey) -> LinComb<Tensor<SignedKey, SignedKey>> {
    let n = u.frame();
    let prefixes = match u.ty {
        SignedType::B => length_additive_prefixes(&TypeB { n }, &u.perm),
        SignedType::D => length_additive_prefixes(&TypeD { n }, &u.perm),
    };
    prefixes
        .into_iter()
        .map(|p| {
            let rest = p.inverse().compose(&u.perm);
            Tensor(SignedKey { ty: u.ty, perm: p }, SignedKey { ty: u.ty, perm: rest })
        })
        .collect()
}

pub fn b_coproduct(u: &BPiKey) -> LinComb<Tensor<BPiKey, BPiKey>> {
    signed_coproduct(u)
}

pub fn d_coproduct(u: &DPiKey) -> LinComb<Tensor<DPiKey, DPiKey>> {
    signed_coproduct(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SignedKey {
        s.parse().unwrap()
    }

    #[test]
    fn key_format() {
        assert_eq!(sk("[1,-3,-2]_B").to_string(), "[1,-3,-2]_B");
        assert_eq!(sk("[213]_D").to_string(), "[213]_D");
        assert!(matches!("[-1,2]_D".parse::<SignedKey>(), Err(Error::NotInGroup(_))));
        assert!("[12]".parse::<SignedKey>().is_err());
    }

    #[test]
    fn small_coproducts() {
        assert_eq!(b_coproduct(&sk("[12]_B")).len(), 1);
        assert_eq!(b_coproduct(&sk("[-1,2]_B")).len(), 2);
    }

    #[test]
    fn unit_action() {
        let u = sk("[1,-3,-2]_B");
        assert_eq!(bmodule_action(&u, &PiKey::one()).unwrap(), LinComb::basis(u.clone()));
        assert_eq!(
            bmodule_action(&u, &"12".parse().unwrap()).unwrap().len(),
            1
        );
    }

    #[test]
    fn listed_b_action() {
        let got = bmodule_action(&sk("[1,-3,-2]_B"), &"312".parse().unwrap()).unwrap();
        let want: LinComb<SignedKey> = ["[1,-3,5,-2,4]_B", "[1,-5,-2,3,4]_B", "[5,-3,-2,1,4]_B"]
            .iter()
            .map(|s| sk(s))
            .collect();
        assert_eq!(got, want);
    }
}
