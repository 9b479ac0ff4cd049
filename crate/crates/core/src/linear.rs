//! Sparse formal linear combinations with exact rational coefficients.
//!
//! Every algebra in this crate is a vector space with a distinguished basis,
//! and every structure map is defined on basis keys and extended linearly.
//! [`LinComb`] is that vector space; [`bilinear_extend`] and
//! [`linear_extend`] do the extending.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^e` for possibly negative `e`.
pub fn pow2(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// A finite map from basis keys to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(key, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, Rational> {
        self.terms
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut x = LinComb::zero();
        for (k, c) in iter {
            x.add_term(k, c);
        }
        x
    }
}

impl<K: Ord + Clone> FromIterator<K> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        iter.into_iter().map(|k| (k, Rational::one())).collect()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Rational::one())
    }
}

/// Extends a map on basis keys linearly.
pub fn linear_extend<K, J>(x: &LinComb<K>, mut f: impl FnMut(&K) -> LinComb<J>) -> LinComb<J>
where
    K: Ord + Clone,
    J: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        out.add_scaled(&f(k), c);
    }
    out
}

/// Extends a map on pairs of basis keys bilinearly.
pub fn bilinear_extend<K1, K2, K3>(
    x: &LinComb<K1>,
    y: &LinComb<K2>,
    mut f: impl FnMut(&K1, &K2) -> LinComb<K3>,
) -> LinComb<K3>
where
    K1: Ord + Clone,
    K2: Ord + Clone,
    K3: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

/// Extends a scalar-valued map on keys linearly.
pub fn linear_functional<K: Ord + Clone>(
    x: &LinComb<K>,
    mut f: impl FnMut(&K) -> Rational,
) -> Rational {
    x.iter()
        .fold(Rational::zero(), |acc, (k, c)| acc + f(k) * c)
}

/// Ordered pair of keys: a basis element of a tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

pub const TENSOR_SEP: &str = " ⊗ ";

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0, TENSOR_SEP, self.1)
    }
}

impl<A, B> FromStr for Tensor<A, B>
where
    A: FromStr<Err = Error>,
    B: FromStr<Err = Error>,
{
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let i = find_top_level(s, TENSOR_SEP)
            .ok_or_else(|| Error::parse(0, "expected a tensor `a ⊗ b`"))?;
        let left = s[..i].parse::<A>()?;
        let right = s[i + TENSOR_SEP.len()..].parse::<B>().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + i + TENSOR_SEP.len(),
                msg,
            },
            other => other,
        })?;
        Ok(Tensor(left, right))
    }
}

fn find_top_level(s: &str, pat: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(pat) {
            return Some(i);
        }
    }
    None
}

/// Tensor product of two linear combinations.
pub fn tensor<A, B>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<Tensor<A, B>>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    bilinear_extend(x, y, |a, b| LinComb::basis(Tensor(a.clone(), b.clone())))
}

fn render_coeff(c: &Rational, key: &str, first: bool, out: &mut String) {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if !mag.is_one() {
        out.push_str(&mag.to_string());
        out.push('*');
    }
    out.push_str(key);
}

impl<K: Ord + Clone> LinComb<K> {
    /// Canonical text form `c1*K1 + c2*K2 + …` with terms sorted by their
    /// rendered key. Unit coefficients are omitted.
    pub fn render_with(&self, mut key: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut rendered: Vec<(String, &Rational)> =
            self.terms.iter().map(|(k, c)| (key(k), c)).collect();
        rendered.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = String::new();
        for (i, (k, c)) in rendered.iter().enumerate() {
            render_coeff(c, k, i == 0, &mut out);
        }
        out
    }

    pub fn to_json_with(&self, mut key: impl FnMut(&K) -> String) -> Value {
        let mut rendered: Vec<(String, &Rational)> =
            self.terms.iter().map(|(k, c)| (key(k), c)).collect();
        rendered.sort_by(|a, b| a.0.cmp(&b.0));
        let terms: Vec<Value> = rendered
            .into_iter()
            .map(|(k, c)| {
                json!({
                    "key": k,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl<K: Ord + Clone + fmt::Display> LinComb<K> {
    pub fn to_json(&self) -> Value {
        self.to_json_with(|k| k.to_string())
    }
}

impl<K: Ord + Clone + FromStr<Err = Error>> LinComb<K> {
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("linear combination JSON: {m}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = LinComb::zero();
        for t in terms {
            let key = t
                .get("key")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without string `key`"))?
                .parse::<K>()?;
            let field = |name: &str| -> Result<BigInt> {
                let raw = t.get(name).ok_or_else(|| bad("term missing num/den"))?;
                let s = match raw {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(bad("num/den must be a string or integer")),
                };
                s.parse::<BigInt>()
                    .map_err(|_| bad(&format!("bad integer `{s}`")))
            };
            let den = field("den")?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            out.add_term(key, Rational::new(field("num")?, den));
        }
        Ok(out)
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|k| k.to_string()))
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits `s` into signed term strings at top-level ` + ` / ` - ` separators.
fn split_terms(s: &str) -> Vec<(usize, bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'[' | b'(' => depth += 1,
            b']' | b')' => depth -= 1,
            b' ' if depth == 0
                && i + 2 < bytes.len()
                && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-')
                && bytes[i + 2] == b' ' =>
            {
                out.push((start, neg, &s[start..i]));
                neg = bytes[i + 1] == b'-';
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out.push((start, neg, &s[start..]));
    out
}

impl<K: Ord + Clone + FromStr<Err = Error>> FromStr for LinComb<K> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(LinComb::zero());
        }
        let mut out = LinComb::zero();
        for (pos, mut neg, mut body) in split_terms(s) {
            let mut pos = pos;
            if let Some(rest) = body.strip_prefix('-') {
                neg = !neg;
                body = rest;
                pos += 1;
            }
            let (coeff, key_str, key_pos) = match body.find('*') {
                Some(star)
                    if body[..star]
                        .chars()
                        .all(|c| c.is_ascii_digit() || c == '/')
                        && star > 0 =>
                {
                    let c = body[..star]
                        .parse::<Rational>()
                        .map_err(|_| Error::parse(pos, "bad coefficient"))?;
                    (c, &body[star + 1..], pos + star + 1)
                }
                _ => (Rational::one(), body, pos),
            };
            let key = key_str.parse::<K>().map_err(|e| match e {
                Error::Parse { pos, msg } => Error::parse(pos + key_pos, msg),
                other => other,
            })?;
            out.add_term(key, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct Sym(String);
    impl fmt::Display for Sym {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "[{}]", self.0)
        }
    }
    impl FromStr for Sym {
        type Err = Error;
        fn from_str(s: &str) -> Result<Self> {
            s.strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .map(|r| Sym(r.to_string()))
                .ok_or_else(|| Error::parse(0, "expected [..]"))
        }
    }
    fn k(s: &str) -> Sym {
        Sym(s.into())
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = LinComb::term(k("a"), int(1));
        let y = LinComb::term(k("a"), int(-1));
        assert!((&x + &y).is_zero());
    }

    #[test]
    fn scaling_by_zero_is_empty() {
        let x: LinComb<Sym> = [k("a"), k("b")].into_iter().collect();
        assert!(x.scale(&int(0)).is_zero());
    }

    #[test]
    fn coeff_lookup() {
        let x = LinComb::term(k("a"), rat(3, 2));
        assert_eq!(x.coeff(&k("a")), rat(3, 2));
        assert_eq!(x.coeff(&k("b")), int(0));
    }

    #[test]
    fn bilinear_extension_of_singletons_is_f() {
        let f = |a: &Sym, b: &Sym| LinComb::basis(Sym(format!("{}{}", a.0, b.0)));
        let x = LinComb::basis(k("p"));
        let y = LinComb::basis(k("q"));
        assert_eq!(bilinear_extend(&x, &y, f), LinComb::basis(k("pq")));
    }

    #[test]
    fn symmetric_map_extends_symmetrically() {
        let f = |a: &Sym, b: &Sym| {
            let mut v = [a.0.clone(), b.0.clone()];
            v.sort();
            LinComb::basis(Sym(v.concat()))
        };
        let x: LinComb<Sym> = [(k("a"), int(2)), (k("b"), rat(-1, 3))].into_iter().collect();
        let y: LinComb<Sym> = [(k("c"), int(5)), (k("a"), int(1))].into_iter().collect();
        assert_eq!(bilinear_extend(&x, &y, f), bilinear_extend(&y, &x, f));
    }

    #[test]
    fn renders_and_parses() {
        let x: LinComb<Sym> = [(k("b"), int(2)), (k("a"), int(1)), (k("c"), rat(-3, 4))]
            .into_iter()
            .collect();
        let s = x.to_string();
        assert_eq!(s, "[a] + 2*[b] - 3/4*[c]");
        assert_eq!(s.parse::<LinComb<Sym>>().unwrap(), x);
        assert_eq!("-[a]".parse::<LinComb<Sym>>().unwrap(), LinComb::term(k("a"), int(-1)));
        assert_eq!(LinComb::<Sym>::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let x: LinComb<Sym> = [(k("x y"), rat(7, 3)), (k("z"), int(-2))].into_iter().collect();
        let v = x.to_json();
        assert_eq!(v["terms"][0]["num"], "7");
        assert_eq!(LinComb::<Sym>::from_json(&v).unwrap(), x);
    }

    #[test]
    fn tensor_keys_parse_inside_sums() {
        type T = Tensor<Sym, Sym>;
        let x: LinComb<T> = [
            (Tensor(k("1"), k("2")), int(1)),
            (Tensor(k(""), k("12")), int(-2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(x.to_string().parse::<LinComb<T>>().unwrap(), x);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "[a] + 2*b".parse::<LinComb<Sym>>().unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 8, .. }), "{err:?}");
    }
}
