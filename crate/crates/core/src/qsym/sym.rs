//! Symmetric functions inside QSym: monomial, Schur s and Schur P/Q
//! functions, triangular expansions, and the involution ω.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num::Zero;

use super::{Basis, Composition, Partition, QSym};
use crate::error::{Error, Result};
use crate::linear::{int, LinComb, Rational};

/// `m_λ = Σ_{sort(α)=λ} M_α`.
pub fn monomial_sym(lambda: &Partition) -> QSym {
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    let mut out = LinComb::zero();
    // distinct rearrangements in lexicographic order
    loop {
        out.add_term(Composition::from_parts_unchecked(parts.clone()), int(1));
        let Some(i) = (1..parts.len()).rev().find(|&i| parts[i - 1] < parts[i]) else {
            break;
        };
        let j = (i..parts.len()).rev().find(|&j| parts[j] > parts[i - 1]).unwrap();
        parts.swap(i - 1, j);
        parts[i..].reverse();
    }
    QSym(out)
}

fn from_monomial_coeffs(coeffs: impl IntoIterator<Item = (Partition, Rational)>) -> QSym {
    let mut out = QSym::zero();
    for (mu, c) in coeffs {
        if !c.is_zero() {
            out += &monomial_sym(&mu).scale(&c);
        }
    }
    out
}

/// Number of semistandard tableaux of shape `λ` and content `μ`, by adding
/// one horizontal strip per letter.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u64 {
    fn strips(
        lambda: &[usize],
        cur: &[usize],
        size: usize,
        row: usize,
        next: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == lambda.len() {
            if size == 0 {
                out.push(next.clone());
            }
            return;
        }
        let lo = cur[row];
        // a horizontal strip never extends past the old end of the row above
        let hi = if row == 0 { lambda[0] } else { cur[row - 1].min(lambda[row]) };
        for v in lo..=hi.max(lo) {
            if v - lo > size {
                break;
            }
            next.push(v);
            strips(lambda, cur, size - (v - lo), row + 1, next, out);
            next.pop();
        }
    }
    fn go(lambda: &[usize], cur: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        if mu.is_empty() {
            return u64::from(cur == lambda);
        }
        let key = (cur.clone(), mu.len());
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let mut shapes = Vec::new();
        strips(lambda, &cur, mu[0], 0, &mut Vec::new(), &mut shapes);
        let total = shapes.into_iter().map(|s| go(lambda, s, &mu[1..], memo)).sum();
        memo.insert(key, total);
        total
    }
    if lambda.weight() != mu.iter().sum::<usize>() {
        return 0;
    }
    let l = lambda.parts();
    go(l, vec![0; l.len()], mu, &mut HashMap::new())
}

/// Number of marked shifted tableaux of shifted shape `λ` (strict) and
/// content `μ`. With `primed_diagonal` false, diagonal cells must be
/// unprimed.
pub fn marked_shifted_count(lambda: &Partition, mu: &[usize], primed_diagonal: bool) -> u64 {
    fn next_shapes(lambda: &[usize], cur: &[usize], size: usize, row: usize, next: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == lambda.len() {
            if size == 0 {
                out.push(next.clone());
            }
            return;
        }
        let lo = cur[row];
        for v in lo..=lambda[row] {
            if v - lo > size {
                break;
            }
            // strictness of the new shape
            if row > 0 && v > 0 && next[row - 1] <= v {
                break;
            }
            next.push(v);
            next_shapes(lambda, cur, size - (v - lo), row + 1, next, out);
            next.pop();
        }
    }
    fn strip_fillings(cur: &[usize], next: &[usize], primed_diagonal: bool) -> u64 {
        // cells (row, col) of the shifted skew shape; row i starts at column i
        let cells: Vec<(usize, usize)> = (0..next.len())
            .flat_map(|i| (i + cur[i]..i + next[i]).map(move |j| (i, j)))
            .collect();
        let t = cells.len();
        let mut count = 0;
        'subset: for primed in 0u64..(1 << t) {
            let is_primed = |k: usize| primed >> k & 1 == 1;
            for (k, &(r, c)) in cells.iter().enumerate() {
                if is_primed(k) {
                    if !primed_diagonal && r == c {
                        continue 'subset;
                    }
                    // k′ at most once per row, and it must start the row's run
                    if cells.iter().enumerate().any(|(o, &(r2, c2))| o != k && r2 == r && (c2 < c || is_primed(o))) {
                        continue 'subset;
                    }
                } else if cells.iter().enumerate().any(|(o, &(r2, c2))| o != k && c2 == c && (r2 > r || !is_primed(o))) {
                    // unprimed k at most once per column, and it must end the column's run
                    continue 'subset;
                }
            }
            count += 1;
        }
        count
    }
    fn go(
        lambda: &[usize],
        cur: Vec<usize>,
        mu: &[usize],
        diag: bool,
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        if mu.is_empty() {
            return u64::from(cur == lambda);
        }
        let key = (cur.clone(), mu.len());
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let mut shapes = Vec::new();
        next_shapes(lambda, &cur, mu[0], 0, &mut Vec::new(), &mut shapes);
        let total = shapes
            .into_iter()
            .map(|s| strip_fillings(&cur, &s, diag) * go(lambda, s, &mu[1..], diag, memo))
            .sum();
        memo.insert(key, total);
        total
    }
    if lambda.weight() != mu.iter().sum::<usize>() {
        return 0;
    }
    let l = lambda.parts();
    go(l, vec![0; l.len()], mu, primed_diagonal, &mut HashMap::new())
}

type Cache = Mutex<HashMap<(char, Partition), QSym>>;

fn cached(kind: char, lambda: &Partition, build: impl FnOnce() -> QSym) -> QSym {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(kind, lambda.clone())) {
        return hit.clone();
    }
    let value = build();
    cache
        .lock()
        .unwrap()
        .entry((kind, lambda.clone()))
        .or_insert(value)
        .clone()
}

/// `s_λ = Σ_μ K_{λμ} m_μ`.
pub fn schur_s(lambda: &Partition) -> QSym {
    cached('s', lambda, || {
        from_monomial_coeffs(
            Partition::all(lambda.weight())
                .into_iter()
                .map(|mu| {
                    let k = kostka(lambda, mu.parts());
                    (mu, int(k as i64))
                }),
        )
    })
}

fn require_strict(lambda: &Partition) -> Result<()> {
    if !lambda.is_strict() {
        return Err(Error::InvalidInput(format!("{lambda} is not a strict partition")));
    }
    Ok(())
}

fn shifted(kind: char, lambda: &Partition, primed_diagonal: bool) -> Result<QSym> {
    require_strict(lambda)?;
    Ok(cached(kind, lambda, || {
        from_monomial_coeffs(Partition::all(lambda.weight()).into_iter().map(|mu| {
            let k = marked_shifted_count(lambda, mu.parts(), primed_diagonal);
            (mu, int(k as i64))
        }))
    }))
}

/// Schur Q-function: marked shifted tableaux, primes allowed anywhere.
pub fn schur_q(lambda: &Partition) -> Result<QSym> {
    shifted('Q', lambda, true)
}

/// Schur P-function: marked shifted tableaux with an unprimed diagonal.
pub fn schur_p(lambda: &Partition) -> Result<QSym> {
    shifted('P', lambda, false)
}

/// Whether `M_α` and `M_β` have equal coefficients whenever `sort(α) = sort(β)`.
pub fn is_symmetric(x: &QSym) -> bool {
    let mut seen: HashMap<Vec<usize>, Rational> = HashMap::new();
    for (a, c) in x.monomials().iter() {
        match seen.get(&a.sorted()) {
            Some(prev) if prev != c => return false,
            Some(_) => {}
            None => {
                seen.insert(a.sorted(), c.clone());
            }
        }
    }
    seen.into_iter()
        .all(|(parts, c)| monomial_sym(&Partition::from_unsorted(parts)).monomials().keys().all(|a| x.monomials().coeff(a) == c))
}

/// Coefficients in the monomial symmetric basis.
pub fn to_monomial_sym(x: &QSym) -> Result<LinComb<Partition>> {
    if !is_symmetric(x) {
        return Err(Error::NotInSpan(format!("{x} is not symmetric")));
    }
    Ok(x.monomials()
        .iter()
        .filter(|(a, _)| a.parts().windows(2).all(|w| w[0] >= w[1]))
        .map(|(a, c)| (Partition::from_unsorted(a.parts().to_vec()), c.clone()))
        .collect())
}

/// Peels off leading terms in lexicographic order using a basis whose
/// element indexed by `λ` is `m_λ` plus lexicographically smaller terms.
fn triangular_expand(
    x: &QSym,
    mut basis: impl FnMut(&Partition) -> Result<LinComb<Partition>>,
) -> Result<LinComb<Partition>> {
    let mut rest: BTreeMap<Partition, Rational> = to_monomial_sym(x)?.into_terms();
    let mut out = LinComb::zero();
    while let Some((lead, c)) = rest.pop_last() {
        let b = basis(&lead)?;
        let unit = b.coeff(&lead);
        let scale = c / unit;
        for (mu, d) in b.iter() {
            if mu == &lead {
                continue;
            }
            let e = rest.entry(mu.clone()).or_insert_with(Rational::zero);
            *e -= &scale * d;
            if e.is_zero() {
                rest.remove(mu);
            }
        }
        out.add_term(lead, scale);
    }
    Ok(out)
}

/// `x = Σ c_λ s_λ`.
pub fn expand_in_schur(x: &QSym) -> Result<LinComb<Partition>> {
    triangular_expand(x, |lambda| to_monomial_sym(&schur_s(lambda)))
}

/// `x = Σ c_λ P_λ`; fails with `NotInSpan` when a non-strict leading term
/// remains.
pub fn expand_in_p(x: &QSym) -> Result<LinComb<Partition>> {
    triangular_expand(x, |lambda| {
        if !lambda.is_strict() {
            return Err(Error::NotInSpan(format!(
                "leading term m{lambda} is not indexed by a strict partition"
            )));
        }
        to_monomial_sym(&schur_p(lambda)?)
    })
}

/// `L_α ↦ L_{αᶜ}`; on symmetric functions `s_λ ↦ s_{λᵀ}`.
pub fn omega(x: &QSym) -> QSym {
    let l = x.to_l().map_keys(|a| a.complement());
    QSym::from_basis(Basis::L, &l).expect("fundamental basis is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::pow2;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_s(&p("[1]")), QSym::parse("M[1]").unwrap());
        let s21 = to_monomial_sym(&schur_s(&p("[2,1]"))).unwrap();
        assert_eq!(s21.to_string(), "2*[1,1,1] + [2,1]");
        assert_eq!(omega(&schur_s(&p("[2,1]"))), schur_s(&p("[2,1]")));
        assert_eq!(omega(&schur_s(&p("[3,1]"))), schur_s(&p("[2,1,1]")));
    }

    #[test]
    fn schur_pq() {
        let p2 = to_monomial_sym(&schur_p(&p("[2]")).unwrap()).unwrap();
        assert_eq!(p2.to_string(), "2*[1,1] + [2]");
        assert!(schur_q(&p("[1,1]")).is_err());
        for n in 1..=6 {
            for l in Partition::all_strict(n) {
                let q = schur_q(&l).unwrap();
                assert!(is_symmetric(&q));
                assert_eq!(q, schur_p(&l).unwrap().scale(&pow2(l.len() as i64)));
                assert_eq!(expand_in_p(&schur_p(&l).unwrap()).unwrap(), LinComb::basis(l.clone()));
            }
        }
    }

    #[test]
    fn expansions() {
        let x = &schur_s(&p("[2,1]")) + &schur_s(&p("[3]")).scale(&int(2));
        let e = expand_in_schur(&x).unwrap();
        assert_eq!(e.to_string(), "[2,1] + 2*[3]");
        let m = monomial_sym(&p("[1]"));
        assert_eq!(expand_in_schur(&m).unwrap().to_string(), "[1]");
        assert!(matches!(
            expand_in_schur(&QSym::parse("M[1,2]").unwrap()),
            Err(Error::NotInSpan(_))
        ));
        assert!(matches!(expand_in_p(&schur_s(&p("[1,1]"))), Err(Error::NotInSpan(_))));
    }
}
