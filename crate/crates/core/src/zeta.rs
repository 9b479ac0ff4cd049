//! Linear functionals `ζ : W → 𝕜`, their convolution, and a registry that
//! selects them by name.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{int, pow2, LinComb, Rational};
use crate::qsym::Composition;
use crate::wbialg::{w_product, WKey};
use crate::word::Letter;

/// How a functional is expected to interact with the product on W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `ζ(a·b) = ζ(a)ζ(b)` for all `a, b`.
    Character,
    /// `ζ(a·b) = ζ(a)·acting(b)` whenever `a` has frame at least `min_frame`.
    Module { acting: String, min_frame: usize },
}

pub trait Zeta: Send + Sync {
    fn name(&self) -> &str;
    fn describe(&self) -> String;
    fn eval(&self, word: &[Letter], frame: usize) -> Rational;

    fn kind(&self) -> Kind {
        Kind::Character
    }

    fn eval_key(&self, a: &WKey) -> Rational {
        self.eval(a.word.letters(), a.frame)
    }
}

impl fmt::Debug for dyn Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zeta({})", self.name())
    }
}

/// The four monotonicity relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Lt,
    Gt,
}

impl Rel {
    pub fn holds(self, a: Letter, b: Letter) -> bool {
        match self {
            Rel::Le => a <= b,
            Rel::Ge => a >= b,
            Rel::Lt => a < b,
            Rel::Gt => a > b,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rel::Le => "le",
            Rel::Ge => "ge",
            Rel::Lt => "lt",
            Rel::Gt => "gt",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Le => "≤",
            Rel::Ge => "≥",
            Rel::Lt => "<",
            Rel::Gt => ">",
        }
    }
}

/// `ζ_•([w,n]) = 1` if consecutive letters of `w` all satisfy `•`.
#[derive(Clone, Copy, Debug)]
pub struct Monotone(pub Rel);

impl Zeta for Monotone {
    fn name(&self) -> &str {
        self.0.name()
    }
    fn describe(&self) -> String {
        format!("ζ{}: 1 on words with consecutive letters related by {}", self.0.symbol(), self.0.symbol())
    }
    fn eval(&self, word: &[Letter], _frame: usize) -> Rational {
        int(word.windows(2).all(|p| self.0.holds(p[0], p[1])) as i64)
    }
}

/// The unit of the convolution monoid: 1 on empty words, 0 elsewhere.
#[derive(Clone, Copy, Debug)]
pub struct CounitZeta;

impl Zeta for CounitZeta {
    fn name(&self) -> &str {
        "counit"
    }
    fn describe(&self) -> String {
        "ε: 1 on the empty word, 0 otherwise".into()
    }
    fn eval(&self, word: &[Letter], _frame: usize) -> Rational {
        int(word.is_empty() as i64)
    }
}

/// `(ζζ′)([w,n]) = Σᵢ ζ([w₁⋯wᵢ,n])·ζ′([wᵢ₊₁⋯,n])`.
pub struct Convolution {
    name: String,
    left: Arc<dyn Zeta>,
    right: Arc<dyn Zeta>,
}

pub fn convolve(left: Arc<dyn Zeta>, right: Arc<dyn Zeta>) -> Convolution {
    Convolution {
        name: format!("{}{}", left.name(), right.name()),
        left,
        right,
    }
}

impl Convolution {
    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}

impl Zeta for Convolution {
    fn name(&self) -> &str {
        &self.name
    }
    fn describe(&self) -> String {
        format!("convolution of {} and {}", self.left.name(), self.right.name())
    }
    fn eval(&self, word: &[Letter], frame: usize) -> Rational {
        let mut total = Rational::zero();
        for i in 0..=word.len() {
            let a = self.left.eval(&word[..i], frame);
            if a.is_zero() {
                continue;
            }
            total += a * self.right.eval(&word[i..], frame);
        }
        total
    }
}

/// `2^{−o(w)}·ζ([w,n])`, where `o(w)` counts letters at most `small`.
pub struct Weighted {
    name: String,
    small: Letter,
    base: Arc<dyn Zeta>,
}

impl Weighted {
    pub fn new(name: &str, small: Letter, base: Arc<dyn Zeta>) -> Self {
        Weighted {
            name: name.to_string(),
            small,
            base,
        }
    }
}

impl Zeta for Weighted {
    fn name(&self) -> &str {
        &self.name
    }
    fn describe(&self) -> String {
        format!(
            "2^(-#letters ≤ {}) times {}",
            self.small,
            self.base.name()
        )
    }
    fn eval(&self, word: &[Letter], frame: usize) -> Rational {
        let o = word.iter().filter(|&&l| l <= self.small).count();
        pow2(-(o as i64)) * self.base.eval(word, frame)
    }
    fn kind(&self) -> Kind {
        Kind::Module {
            acting: self.base.name().to_string(),
            min_frame: self.small as usize,
        }
    }
}

/// `ζ_α([w,n])`: the product of `ζ` over the blocks of `w` of sizes `α`.
pub fn zeta_alpha(zeta: &dyn Zeta, alpha: &Composition, a: &WKey) -> Rational {
    let w = a.word.letters();
    if alpha.weight() != w.len() {
        return Rational::zero();
    }
    if alpha.is_empty() {
        return Rational::one();
    }
    let mut out = Rational::one();
    let mut start = 0;
    for &p in alpha.parts() {
        out *= zeta.eval(&w[start..start + p], a.frame);
        if out.is_zero() {
            break;
        }
        start += p;
    }
    out
}

/// Named functionals.
#[derive(Clone, Default)]
pub struct ZetaRegistry {
    entries: BTreeMap<String, Arc<dyn Zeta>>,
}

impl ZetaRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `le ge lt gt`, the four two-step convolutions `gtle ltge gelt legt`,
    /// and `B C D`.
    pub fn standard() -> Self {
        let mut r = ZetaRegistry::empty();
        let rels = [Rel::Le, Rel::Ge, Rel::Lt, Rel::Gt];
        for rel in rels {
            r.register(Arc::new(Monotone(rel)));
        }
        let m = |rel| -> Arc<dyn Zeta> { Arc::new(Monotone(rel)) };
        for (a, b) in [(Rel::Gt, Rel::Le), (Rel::Lt, Rel::Ge), (Rel::Ge, Rel::Lt), (Rel::Le, Rel::Gt)] {
            r.register(Arc::new(convolve(m(a), m(b))));
        }
        let c: Arc<dyn Zeta> = Arc::new(convolve(m(Rel::Gt), m(Rel::Le)).named("C"));
        r.register(c.clone());
        r.register(Arc::new(Weighted::new("B", 1, c.clone())));
        r.register(Arc::new(Weighted::new("D", 2, c)));
        r.register(Arc::new(CounitZeta));
        r
    }

    pub fn register(&mut self, z: Arc<dyn Zeta>) {
        self.entries.insert(z.name().to_string(), z);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Zeta>> {
        self.entries.get(name).cloned().ok_or_else(|| {
            Error::UnknownName(format!(
                "{name} (known functionals: {})",
                self.names().collect::<Vec<_>>().join(", ")
            ))
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// What to do when a functional fails its multiplicativity self-test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Policy {
    #[default]
    Fail,
    Warn,
    Skip,
}

/// Keys `[w,n]` with `n ≤ max_frame` and `ℓ(w) ≤ max_len`.
pub fn sample_keys(max_frame: usize, max_len: usize) -> Vec<WKey> {
    let mut out = Vec::new();
    for n in 0..=max_frame {
        let mut layer = vec![Vec::<Letter>::new()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                out.push(WKey::new_unchecked(crate::word::Word::from_vec_unchecked(w.clone()), n));
                for l in 1..=n as Letter {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            layer = next;
        }
    }
    out
}

/// Checks the law stated by `zeta.kind()` on every pair of `keys`. Returns
/// the first counterexample.
pub fn self_test(zeta: &dyn Zeta, registry: &ZetaRegistry, keys: &[WKey]) -> Result<Option<String>> {
    let (acting, min_frame) = match zeta.kind() {
        Kind::Character => (None, 0),
        Kind::Module { acting, min_frame } => (Some(registry.get(&acting)?), min_frame),
    };
    for a in keys.iter().filter(|a| a.frame >= min_frame) {
        let za = zeta.eval_key(a);
        for b in keys {
            let lhs: Rational = w_product(a, b).iter().map(|(k, c)| c * zeta.eval_key(k)).sum();
            let zb = match &acting {
                Some(act) => act.eval_key(b),
                None => zeta.eval_key(b),
            };
            let rhs = &za * zb;
            if lhs != rhs {
                return Ok(Some(format!("{}: ζ({a}·{b}) = {lhs} ≠ {rhs}", zeta.name())));
            }
        }
    }
    for n in 0..=2 {
        let e = WKey::new_unchecked(crate::word::Word::empty(), n);
        if !zeta.eval_key(&e).is_one() {
            return Ok(Some(format!("{}: value at {e} is not 1", zeta.name())));
        }
    }
    Ok(None)
}

/// Applies `policy` to the outcome of [`self_test`] on a small default
/// sample. `Ok(Some(_))` carries a warning.
pub fn admit(zeta: &dyn Zeta, registry: &ZetaRegistry, policy: Policy) -> Result<Option<String>> {
    if policy == Policy::Skip {
        return Ok(None);
    }
    match self_test(zeta, registry, &sample_keys(3, 2))? {
        None => Ok(None),
        Some(w) if policy == Policy::Warn => Ok(Some(w)),
        Some(w) => Err(Error::PreconditionViolation(format!("not multiplicative: {w}"))),
    }
}

/// Sums a functional over a linear combination.
pub fn eval_lincomb(zeta: &dyn Zeta, x: &LinComb<WKey>) -> Rational {
    x.iter().map(|(k, c)| c * zeta.eval_key(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> WKey {
        s.parse().unwrap()
    }

    #[test]
    fn basic_values() {
        let r = ZetaRegistry::standard();
        let ev = |n: &str, s: &str| r.get(n).unwrap().eval_key(&k(s));
        assert_eq!(ev("gt", "[21;2]"), int(1));
        assert_eq!(ev("lt", "[12;3]"), int(1));
        assert_eq!(ev("lt", "[21;3]"), int(0));
        assert_eq!(ev("le", "[;5]"), int(1));
        assert_eq!(ev("gtle", "[;5]"), int(1));
        // 1|21 and 12|1 both vanish: 121 rises before it falls
        assert_eq!(ev("gtle", "[121;2]"), int(0));
        assert_eq!(ev("gtle", "[211;2]"), int(2));
        assert_eq!(ev("gtle", "[3112;3]"), int(2));
        assert_eq!(ev("gtle", "[3132;3]"), int(0));
        assert_eq!(ev("gtle", "[1;3]"), int(2));
        assert_eq!(ev("B", "[211;2]"), int(1) / int(2));
        assert_eq!(ev("D", "[211;2]"), int(2) / int(8));
        assert!(r.get("nope").is_err());
    }

    #[test]
    fn counit_is_a_unit() {
        let r = ZetaRegistry::standard();
        let e = r.get("counit").unwrap();
        let z = r.get("gtle").unwrap();
        let left = convolve(e.clone(), z.clone());
        let right = convolve(z.clone(), e);
        for a in sample_keys(3, 4) {
            assert_eq!(left.eval_key(&a), z.eval_key(&a));
            assert_eq!(right.eval_key(&a), z.eval_key(&a));
        }
    }

    #[test]
    fn blocks() {
        let le = Monotone(Rel::Le);
        let a = k("[3121;3]");
        assert_eq!(zeta_alpha(&le, &"[1,1,1,1]".parse().unwrap(), &a), int(1));
        assert_eq!(zeta_alpha(&le, &"[1,3]".parse().unwrap(), &a), int(0));
        assert_eq!(zeta_alpha(&le, &"[2,2]".parse().unwrap(), &a), int(0));
        assert_eq!(zeta_alpha(&le, &"[1,2,1]".parse().unwrap(), &a), int(1));
        assert_eq!(zeta_alpha(&le, &"[2]".parse().unwrap(), &a), int(0));
    }

    #[test]
    fn self_tests() {
        let r = ZetaRegistry::standard();
        for name in ["le", "ge", "lt", "gt", "gtle", "ltge", "gelt", "legt", "B", "C", "D", "counit"] {
            let z = r.get(name).unwrap();
            assert_eq!(admit(z.as_ref(), &r, Policy::Fail).unwrap(), None, "{name}");
        }
        // the weighted functionals are not characters on all of W
        let b = r.get("B").unwrap();
        let mut bare = ZetaRegistry::empty();
        bare.register(Arc::new(ForceCharacter(b)));
        let z = bare.get("B").unwrap();
        assert!(admit(z.as_ref(), &bare, Policy::Fail).is_err());
        assert!(admit(z.as_ref(), &bare, Policy::Warn).unwrap().is_some());
    }

    struct ForceCharacter(Arc<dyn Zeta>);

    impl Zeta for ForceCharacter {
        fn name(&self) -> &str {
            self.0.name()
        }
        fn describe(&self) -> String {
            self.0.describe()
        }
        fn eval(&self, word: &[Letter], frame: usize) -> Rational {
            self.0.eval(word, frame)
        }
    }
}
