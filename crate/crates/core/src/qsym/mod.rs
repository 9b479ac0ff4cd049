//! Quasi-symmetric functions, stored in the monomial basis, with the
//! fundamental and peak bases available as views.

mod composition;
mod partition;
mod sym;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use serde_json::{json, Value};

pub use composition::Composition;
pub use partition::Partition;
pub use sym::{
    expand_in_p, expand_in_schur, is_symmetric, kostka, monomial_sym, omega, schur_p, schur_q, schur_s,
    to_monomial_sym,
};

use crate::bialgebra::{degree_zero_counit, Bialgebra};
use crate::error::{Error, Result};
use crate::linear::{int, pow2, LinComb, Rational, Tensor};

/// Which basis a rendering or parse refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    L,
    K,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::K => "K",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(Basis::M),
            "L" | "F" => Ok(Basis::L),
            "K" => Ok(Basis::K),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// An element of QSym, held as a combination of `M_α`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QSym(pub LinComb<Composition>);

impl QSym {
    pub fn zero() -> Self {
        QSym(LinComb::zero())
    }

    pub fn one() -> Self {
        QSym::m(Composition::empty())
    }

    pub fn m(alpha: Composition) -> Self {
        QSym(LinComb::basis(alpha))
    }

    pub fn l(alpha: &Composition) -> Self {
        QSym(l_to_m(alpha))
    }

    pub fn k(alpha: &Composition) -> Result<Self> {
        Ok(QSym(k_to_m(alpha)?))
    }

    pub fn monomials(&self) -> &LinComb<Composition> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSym(self.0.scale(c))
    }

    pub fn mul(&self, other: &QSym) -> QSym {
        QSym(crate::linear::bilinear_extend(&self.0, &other.0, m_product))
    }

    pub fn coproduct(&self) -> LinComb<Tensor<Composition, Composition>> {
        crate::linear::linear_extend(&self.0, m_coproduct)
    }

    pub fn to_l(&self) -> LinComb<Composition> {
        m_to_l(&self.0)
    }

    pub fn to_k(&self) -> Result<LinComb<Composition>> {
        m_to_k(&self.0)
    }

    pub fn in_basis(&self, basis: Basis) -> Result<LinComb<Composition>> {
        match basis {
            Basis::M => Ok(self.0.clone()),
            Basis::L => Ok(self.to_l()),
            Basis::K => self.to_k(),
        }
    }

    pub fn from_basis(basis: Basis, x: &LinComb<Composition>) -> Result<Self> {
        match basis {
            Basis::M => Ok(QSym(x.clone())),
            Basis::L => Ok(QSym(crate::linear::linear_extend(x, l_to_m))),
            Basis::K => {
                let mut out = LinComb::zero();
                for (a, c) in x.iter() {
                    out.add_scaled(&k_to_m(a)?, c);
                }
                Ok(QSym(out))
            }
        }
    }

    pub fn render(&self, basis: Basis) -> Result<String> {
        let x = self.in_basis(basis)?;
        Ok(x.render_with(|a| format!("{}{a}", basis.tag())))
    }

    pub fn to_json(&self, basis: Basis) -> Result<Value> {
        let x = self.in_basis(basis)?;
        let mut v = x.to_json();
        v["basis"] = json!(basis.tag());
        Ok(v)
    }

    /// Parses `M[1,2] + 2*M[3]`, or the same with `L`/`K` keys (one basis per
    /// expression).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "0" {
            return Ok(QSym::zero());
        }
        let basis = t
            .chars()
            .find(|c| matches!(c, 'M' | 'L' | 'K' | 'F'))
            .ok_or_else(|| Error::parse(0, "expected basis letter M, L or K"))?;
        let tag = basis.to_string();
        let basis: Basis = tag.parse()?;
        let stripped = t.replace(&tag, "");
        let x: LinComb<Composition> = stripped.parse()?;
        QSym::from_basis(basis, &x)
    }

    /// Homogeneous pieces by degree.
    pub fn components(&self) -> BTreeMap<usize, LinComb<Composition>> {
        let mut out: BTreeMap<usize, LinComb<Composition>> = BTreeMap::new();
        for (a, c) in self.0.iter() {
            out.entry(a.weight()).or_default().add_term(a.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Add for &QSym {
    type Output = QSym;
    fn add(self, o: &QSym) -> QSym {
        QSym(&self.0 + &o.0)
    }
}

impl std::ops::Sub for &QSym {
    type Output = QSym;
    fn sub(self, o: &QSym) -> QSym {
        QSym(&self.0 - &o.0)
    }
}

impl std::ops::AddAssign<&QSym> for QSym {
    fn add_assign(&mut self, o: &QSym) {
        self.0 += &o.0;
    }
}

impl fmt::Display for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render_with(|a| format!("M{a}")))
    }
}

impl fmt::Debug for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quasi-shuffle product of monomial basis keys.
pub fn m_product(a: &Composition, b: &Composition) -> LinComb<Composition> {
    fn go(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut LinComb<Composition>) {
        if a.is_empty() || b.is_empty() {
            let mut v = prefix.clone();
            v.extend_from_slice(a);
            v.extend_from_slice(b);
            out.add_term(Composition::from_parts_unchecked(v), int(1));
            return;
        }
        prefix.push(a[0]);
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        go(a, &b[1..], prefix, out);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        go(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    go(a.parts(), b.parts(), &mut Vec::new(), &mut out);
    out
}

/// `Δ(M_α) = Σ_{α=βγ} M_β ⊗ M_γ`.
pub fn m_coproduct(a: &Composition) -> LinComb<Tensor<Composition, Composition>> {
    let p = a.parts();
    (0..=p.len())
        .map(|i| {
            Tensor(
                Composition::from_parts_unchecked(p[..i].to_vec()),
                Composition::from_parts_unchecked(p[i..].to_vec()),
            )
        })
        .collect()
}

/// `L_α = Σ_{I(β) ⊇ I(α)} M_β`.
pub fn l_to_m(alpha: &Composition) -> LinComb<Composition> {
    let n = alpha.weight();
    if n == 0 {
        return LinComb::basis(Composition::empty());
    }
    let full = (1u64 << (n - 1)) - 1;
    let base = alpha.mask();
    let free = full & !base;
    // enumerate submasks of `free`
    let mut out = LinComb::zero();
    let mut sub = free;
    loop {
        out.add_term(Composition::from_mask(n, base | sub), int(1));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    out
}

/// Converts coefficients indexed by descent masks (all of weight `n`) to the
/// monomial basis by a superset-sum transform, i.e. `Σ c_S L_S`.
pub fn l_masks_to_m(n: usize, coeffs: &HashMap<u64, Rational>) -> LinComb<Composition> {
    if n == 0 {
        return coeffs
            .get(&0)
            .map(|c| LinComb::term(Composition::empty(), c.clone()))
            .unwrap_or_default();
    }
    let bits = n - 1;
    let mut table = vec![Rational::zero(); 1 << bits];
    for (&m, c) in coeffs {
        table[m as usize] += c;
    }
    // M-coefficient of β is Σ over α with I(α) ⊆ I(β)
    for b in 0..bits {
        for m in 0..table.len() {
            if m >> b & 1 == 1 {
                let lower = table[m ^ (1 << b)].clone();
                table[m] += lower;
            }
        }
    }
    table
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (Composition::from_mask(n, m as u64), c))
        .collect()
}

/// Inverse of [`l_to_m`] by Möbius inversion on subsets.
pub fn m_to_l(x: &LinComb<Composition>) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        let n = a.weight();
        if n == 0 {
            out.add_term(a.clone(), c.clone());
            continue;
        }
        let full = (1u64 << (n - 1)) - 1;
        let base = a.mask();
        let free = full & !base;
        let mut sub = free;
        loop {
            let sign = if sub.count_ones() % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(Composition::from_mask(n, base | sub), sign);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out
}

/// `K_α = Σ_{I(α) ⊆ I(β) ∪ (I(β)+1)} 2^{ℓ(β)} M_β` for a peak composition α.
pub fn k_to_m(alpha: &Composition) -> Result<LinComb<Composition>> {
    if !alpha.is_peak() {
        return Err(Error::InvalidInput(format!("{alpha} is not a peak composition")));
    }
    let n = alpha.weight();
    if n == 0 {
        return Ok(LinComb::basis(Composition::empty()));
    }
    let full = (1u64 << (n - 1)) - 1;
    let target = alpha.mask();
    let mut out = LinComb::zero();
    for m in 0..=full {
        let cover = (m | (m << 1)) & full;
        if target & !cover == 0 {
            out.add_term(Composition::from_mask(n, m), pow2(m.count_ones() as i64 + 1));
        }
    }
    Ok(out)
}

/// Order used to peel off peak functions: fewer elements of `I(β)` first,
/// then the lexicographically largest `I(β)`.
fn peel_key(a: &Composition) -> (usize, usize, std::cmp::Reverse<Vec<usize>>) {
    (a.weight(), a.len(), std::cmp::Reverse(a.subset().into_iter().collect()))
}

/// Expansion in the peak basis; fails with `NotInSpan` outside it.
pub fn m_to_k(x: &LinComb<Composition>) -> Result<LinComb<Composition>> {
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    while let Some(lead) = rest.keys().min_by_key(|a| peel_key(a)).cloned() {
        if !lead.is_peak() {
            return Err(Error::NotInSpan(format!(
                "M{lead} cannot lead a peak expansion; residual {}",
                rest.render_with(|a| format!("M{a}"))
            )));
        }
        let scale = if lead.is_empty() { Rational::one() } else { pow2(lead.len() as i64) };
        let c = rest.coeff(&lead) / scale;
        rest.add_scaled(&k_to_m(&lead)?, &-c.clone());
        out.add_term(lead, c);
    }
    Ok(out)
}

/// `L_β ↦ L_{βʳ}`, applied in the fundamental basis.
pub fn reversal_involution(x: &QSym) -> QSym {
    let l = x.to_l().map_keys(|a| a.reverse());
    QSym::from_basis(Basis::L, &l).expect("fundamental basis is total")
}

/// QSym in the monomial basis as a [`Bialgebra`].
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymM;

impl Bialgebra for QSymM {
    type Key = Composition;

    fn one(&self) -> Composition {
        Composition::empty()
    }
    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        m_product(a, b)
    }
    fn coproduct(&self, a: &Composition) -> LinComb<Tensor<Composition, Composition>> {
        m_coproduct(a)
    }
    fn counit(&self, a: &Composition) -> Rational {
        degree_zero_counit(a.weight())
    }
    fn degree(&self, a: &Composition) -> usize {
        a.weight()
    }
}

/// Expands `x` as a polynomial in `vars` variables: exponent vector ↦
/// coefficient. Faithful on compositions with at most `vars` parts.
pub fn expand_polynomial(x: &QSym, vars: usize) -> BTreeMap<Vec<usize>, Rational> {
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (a, c) in x.0.iter() {
        let l = a.len();
        if l > vars {
            continue;
        }
        // choose increasing positions i₁ < ⋯ < i_l
        let mut positions: Vec<usize> = (0..l).collect();
        loop {
            let mut e = vec![0; vars];
            for (k, &p) in positions.iter().enumerate() {
                e[p] = a.parts()[k];
            }
            *out.entry(e).or_insert_with(Rational::zero) += c;
            let Some(k) = (0..l).rev().find(|&k| positions[k] < vars - l + k) else {
                break;
            };
            positions[k] += 1;
            for t in k + 1..l {
                positions[t] = positions[t - 1] + 1;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Polynomial product on exponent-vector maps.
pub fn multiply_polynomials(
    x: &BTreeMap<Vec<usize>, Rational>,
    y: &BTreeMap<Vec<usize>, Rational>,
) -> BTreeMap<Vec<usize>, Rational> {
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (e, c) in x {
        for (f, d) in y {
            let g: Vec<usize> = e.iter().zip(f).map(|(a, b)| a + b).collect();
            *out.entry(g).or_insert_with(Rational::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn q(s: &str) -> QSym {
        QSym::parse(s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(QSym::m(c("[1]")).mul(&QSym::m(c("[1]"))), q("2*M[1,1] + M[2]"));
        assert_eq!(QSym::m(c("[1]")).mul(&QSym::m(c("[2]"))), q("M[1,2] + M[2,1] + M[3]"));
        assert_eq!(QSym::one().mul(&q("M[2,1]")), q("M[2,1]"));
    }

    #[test]
    fn products_match_polynomials() {
        for (a, b) in [("[1]", "[1]"), ("[1]", "[2]"), ("[2,1]", "[1,1]")] {
            let (x, y) = (QSym::m(c(a)), QSym::m(c(b)));
            let d = x.0.keys().chain(y.0.keys()).map(|k| k.weight()).sum::<usize>();
            let lhs = expand_polynomial(&x.mul(&y), d);
            let rhs = multiply_polynomials(&expand_polynomial(&x, d), &expand_polynomial(&y, d));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn peak_display() {
        let got = QSym::k(&c("[2,2]")).unwrap();
        assert_eq!(
            got,
            q("4*M[1,3] + 4*M[2,2] + 8*M[1,1,2] + 8*M[1,2,1] + 8*M[2,1,1] + 16*M[1,1,1,1]")
        );
        assert_eq!(got.to_k().unwrap(), LinComb::basis(c("[2,2]")));
    }

    #[test]
    fn fundamental_basis() {
        let l3 = QSym::l(&c("[3]"));
        assert_eq!(l3.0.len(), 4);
        assert_eq!(l3.to_l(), LinComb::basis(c("[3]")));
        let mut masks = HashMap::new();
        masks.insert(c("[1,2]").mask(), int(1));
        assert_eq!(l_masks_to_m(3, &masks), l_to_m(&c("[1,2]")));
        assert!(m_to_k(&LinComb::basis(c("[1,2]"))).is_err());
    }

    #[test]
    fn coproduct_example() {
        let got = m_coproduct(&c("[1,2]"));
        assert_eq!(got.to_string(), "[1,2] ⊗ [] + [1] ⊗ [2] + [] ⊗ [1,2]");
    }

    #[test]
    fn reversal() {
        let x = QSym::l(&c("[1,2]"));
        assert_eq!(reversal_involution(&x), QSym::l(&c("[2,1]")));
        let k = QSym::k(&c("[2,2]")).unwrap();
        assert_eq!(reversal_involution(&k), QSym::k(&c("[3,1]")).unwrap());
    }
}
