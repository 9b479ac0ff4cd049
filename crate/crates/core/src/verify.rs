//! Named verification suites. Each suite runs a family of exact checks and
//! reports pass/fail per check, with a witness on failure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use num::{BigUint, One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bialgebra::{
    check_associative, check_coassociative, check_compatible, check_counit, check_graded, check_unit,
};
use crate::coxeter::{
    cayley_distances, count_reduced_words_a, length_b_formula, length_d_formula, reduced_words_a, TypeB, TypeD,
};
use crate::error::Result;
use crate::families::{binomial, gen_a_set, gen_b_set, n_pq};
use crate::linear::{int, linear_extend, pow2, tensor, LinComb, Rational, Tensor};
use crate::perm::{Permutation, SignedPermutation};
use crate::pi::{
    fc_product, flatten_reduced_words_bijection_check, pi_coproduct, pi_product, pi_product_oracle, pi_to_w,
    s_shuffle, PiBialgebra, PiKey,
};
use crate::psi::{psi_b, psi_c, psi_d, psi_fast, theta, Psi};
use crate::qsym::{
    expand_in_p, expand_in_schur, expand_polynomial, is_symmetric, l_to_m, m_to_l, omega, schur_p, schur_q, schur_s,
    Composition, Partition, QSym, QSymM,
};
use crate::stanley::{
    counting_morphism_check, stanley_f, stanley_f_via_psi, stanley_fb, stanley_fc, stanley_fd,
    stanley_signed_via_psi,
};
use crate::typebd::{act, module_action, signed_coproduct, signed_to_w, SignedKey, SignedType};
use crate::wbialg::{w_coproduct, w_product, WKey, WordBialgebra};
use crate::word::{Letter, Word};
use crate::zeta::{sample_keys, Kind, Policy, ZetaRegistry};

/// The outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Runs `f`; `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`, and an
/// error fails with its message.
pub fn check(name: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) -> Check {
    let (pass, witness) = match f() {
        Ok(None) => (true, None),
        Ok(Some(w)) => (false, Some(w)),
        Err(e) => (false, Some(e.to_string())),
    };
    Check {
        name: name.into(),
        pass,
        witness,
    }
}

fn differ<T: PartialEq + Display>(what: impl Display, lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} ≠ {rhs}"))
}

/// The first witness produced over `items`.
fn first<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Result<Option<String>>) -> Result<Option<String>> {
    for x in items {
        if let Some(w) = f(x)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// As [`first`], evaluated in parallel; the reported witness is the one for
/// the earliest item.
fn first_par<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Option<String>> + Sync) -> Result<Option<String>> {
    let found: Vec<(usize, String)> = items
        .par_iter()
        .enumerate()
        .filter_map(|(i, x)| match f(x) {
            Ok(None) => None,
            Ok(Some(w)) => Some((i, w)),
            Err(e) => Some((i, e.to_string())),
        })
        .collect();
    Ok(found.into_iter().min_by_key(|(i, _)| *i).map(|(_, w)| w))
}

/// `k` draws with replacement from `pool` under a fixed seed.
pub fn sample<T: Clone>(pool: &[T], k: usize, seed: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).filter_map(|_| pool.choose(&mut rng).cloned()).collect()
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &str;
    fn describe(&self) -> &str;
    /// The size bound used when none is given.
    fn default_max_n(&self) -> Option<usize>;
    fn run(&self, max_n: Option<usize>) -> Vec<Check>;
}

struct FnSuite {
    name: &'static str,
    describe: &'static str,
    max_n: Option<usize>,
    run: fn(usize) -> Vec<Check>,
}

impl Suite for FnSuite {
    fn name(&self) -> &str {
        self.name
    }
    fn describe(&self) -> &str {
        self.describe
    }
    fn default_max_n(&self) -> Option<usize> {
        self.max_n
    }
    fn run(&self, max_n: Option<usize>) -> Vec<Check> {
        (self.run)(max_n.or(self.max_n).unwrap_or(0))
    }
}

/// Suites in registration order.
#[derive(Default)]
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn register(&mut self, s: Box<dyn Suite>) {
        self.suites.retain(|t| t.name() != s.name());
        self.suites.push(s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| {
                crate::Error::UnknownName(format!(
                    "{name} (known suites: all, {})",
                    self.names().collect::<Vec<_>>().join(", ")
                ))
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.suites.iter().map(|s| s.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|s| s.as_ref())
    }

    pub fn standard() -> Self {
        let mut r = SuiteRegistry::default();
        let table: [(&'static str, &'static str, Option<usize>, fn(usize) -> Vec<Check>); 24] = [
            ("family-sizes", "sizes and lengths of the families 𝒜(n), ℬ(m,n) up to n", Some(9), family_sizes),
            ("a5-sum", "the worked reduced-word sums over 𝒜(5) and ℬ(3,5)", None, a5_sum),
            ("middle-sums", "Σ_{𝒜(n)} r = Σ_{ℬ(p,n)} r for both middle p", Some(7), middle_sums),
            ("npq-sums", "N(p,q) = Σ_{ℬ(p,n)} r for all 1 ≤ p ≤ n", Some(7), npq_sums),
            ("product-oracle", "𝒮⧢ product equals the word-shuffle oracle on S_{m+1}×S_{n+1}, m+n ≤ N", Some(6), product_oracle),
            ("pi-bialgebra", "associativity, coassociativity, compatibility and counit on Π", Some(5), pi_bialgebra),
            ("flatten-bijection", "flattening reduced words of π onto the factor shuffle", Some(5), flatten_bijection),
            ("fc-product", "two-term rule for 321-avoiding pairs", Some(4), fc_products),
            ("psi-fast", "Ψ from its definition equals the closed forms (ℓ(w) ≤ N, letters ≤ 4)", Some(6), psi_fast_suite),
            ("stanley-a", "F_π symmetric, Schur positive, F_{π⁻¹} = ω(F_π), F_{w₀} = s_δ", Some(5), stanley_a),
            ("product-formula", "F_u F_v = Σ_{𝒮⧢(u,v)} F_π and the Schur P identities", Some(6), product_formula),
            ("bd-actions", "the eight displayed type B/D actions", None, bd_actions),
            ("stanley-bcd", "F^B, F^C, F^D symmetries and positivity on B_N", Some(3), stanley_bcd),
            ("lengths-bd", "type B/D length formulas against Cayley-graph distance (B_N, D_{N+1})", Some(3), lengths_bd),
            ("counting-character", "r(·)/ℓ(·)! is multiplicative on Π", Some(4), counting_character),
            ("p42", "P_(4,2) = Σ_{ℬ(3,5)} F_π", None, p42),
            ("qsym-laws", "QSym basis changes, product and coproduct laws", Some(6), qsym_laws),
            ("schur-pq", "Q_λ = 2^ℓ P_λ, symmetry and expansions for |λ| ≤ N", Some(8), schur_pq),
            ("w-bialgebra", "bialgebra laws on W and the non-Hopf witness", Some(3), w_bialgebra),
            ("psi-morphism", "Ψ is multiplicative for every registered ζ", Some(6), psi_morphism),
            ("coalgebra-morphism", "Ψ commutes with coproducts on Π up to degree N", Some(5), coalgebra_morphism),
            ("module-axioms", "right Π-module and module-coalgebra laws on B₂, D₂", Some(3), module_axioms),
            ("module-morphism", "Ψ^B, Ψ^D intertwine the action with Ψ_{>|≤}", Some(3), module_morphism),
            ("signed-coproducts", "coproduct formulas for F^B, F^C, F^D on B_N", Some(3), signed_coproducts),
        ];
        for (name, describe, max_n, run) in table {
            r.register(Box::new(FnSuite {
                name,
                describe,
                max_n,
                run,
            }));
        }
        r
    }
}

fn perms(s: &[&str]) -> BTreeSet<Permutation> {
    s.iter().map(|x| x.parse().expect("literal permutation")).collect()
}

fn r_of(p: &Permutation) -> BigUint {
    count_reduced_words_a(p)
}

fn double_factorial(k: usize) -> BigUint {
    (1..=k).rev().step_by(2).fold(BigUint::one(), |a, x| a * x)
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn middle(n: usize) -> [usize; 2] {
    [(n + 1) / 2, (n + 2) / 2]
}

fn family_sizes(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(check(format!("|𝒜({n})| = ({})!!", n - 1), || {
            let a = gen_a_set(n)?;
            let [p, q] = middle(n);
            let want_len = choose2(p) + choose2(q);
            if let Some(x) = a.iter().find(|x| x.inversions() != want_len) {
                return Ok(Some(format!("{x} has length {} ≠ {want_len}", x.inversions())));
            }
            Ok(differ("size", &BigUint::from(a.len()), &double_factorial(n - 1)))
        }));
        out.push(check(format!("|ℬ(m,{n})| = C({},m−1)", n - 1), || {
            first(1..=n, |m| {
                let b = gen_b_set(m, n)?;
                let want_len = choose2(m) + choose2(n - m + 1);
                if let Some(x) = b.iter().find(|x| x.inversions() != want_len) {
                    return Ok(Some(format!("{x} ∈ ℬ({m},{n}) has length {}", x.inversions())));
                }
                Ok(differ(format!("|ℬ({m},{n})|"), &BigUint::from(b.len()), &binomial(n as u64 - 1, m as u64 - 1)))
            })
        }));
    }
    out.push(check("listed families", || {
        let listed: [(&str, Result<BTreeSet<Permutation>>, &[&str]); 10] = [
            ("𝒜(3)", gen_a_set(3), &["231", "312"]),
            ("𝒜(4)", gen_a_set(4), &["2431", "3412", "4213"]),
            ("𝒜(5)", gen_a_set(5), &["24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"]),
            ("ℬ(2,3)", gen_b_set(2, 3), &["231", "312"]),
            ("ℬ(2,4)", gen_b_set(2, 4), &["2431", "3412", "4132"]),
            ("ℬ(3,4)", gen_b_set(3, 4), &["3241", "3412", "4213"]),
            ("ℬ(2,5)", gen_b_set(2, 5), &["25431", "35412", "45132", "51432"]),
            ("ℬ(3,5)", gen_b_set(3, 5), &["32541", "34512", "35142", "42513", "45123", "52143"]),
            ("ℬ(4,5)", gen_b_set(4, 5), &["43251", "43512", "45213", "53214"]),
            ("ℬ(1,4)", gen_b_set(1, 4), &["4321"]),
        ];
        first(listed, |(name, got, want)| {
            let got = got?;
            let want = perms(want);
            Ok((got != want).then(|| format!("{name}: got {got:?}")))
        })
    }));
    out
}

const A5: [&str; 8] = ["24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"];
const B35: [&str; 6] = ["32541", "34512", "35142", "42513", "45123", "52143"];

fn a5_sum(_: usize) -> Vec<Check> {
    let terms = |list: &[&str]| -> Vec<u64> {
        list.iter()
            .map(|s| r_of(&s.parse().unwrap()).try_into().expect("small count"))
            .collect()
    };
    vec![
        check("𝒜(5) terms 9+10+5+16+16+5+10+9", || {
            if gen_a_set(5)? != perms(&A5) {
                return Ok(Some("𝒜(5) differs from the listed set".into()));
            }
            let got = terms(&A5);
            Ok((got != [9, 10, 5, 16, 16, 5, 10, 9]).then(|| format!("{got:?}")))
        }),
        check("ℬ(3,5) terms 19+5+16+16+5+19", || {
            if gen_b_set(3, 5)? != perms(&B35) {
                return Ok(Some("ℬ(3,5) differs from the listed set".into()));
            }
            let got = terms(&B35);
            Ok((got != [19, 5, 16, 16, 5, 19]).then(|| format!("{got:?}")))
        }),
        check("both sums are 80", || {
            let a: u64 = terms(&A5).iter().sum();
            let b: u64 = terms(&B35).iter().sum();
            Ok((a != 80 || b != 80).then(|| format!("{a} and {b}")))
        }),
    ]
}

fn sum_r(set: &BTreeSet<Permutation>) -> BigUint {
    set.iter().map(r_of).sum()
}

fn middle_sums(max_n: usize) -> Vec<Check> {
    (1..=max_n)
        .map(|n| {
            check(format!("n = {n}"), move || {
                let a = sum_r(&gen_a_set(n)?);
                first(middle(n), |p| Ok(differ(format!("Σ𝒜({n}) vs Σℬ({p},{n})"), &a, &sum_r(&gen_b_set(p, n)?))))
            })
        })
        .collect()
}

fn npq_sums(max_n: usize) -> Vec<Check> {
    let mut out = vec![
        check("r(321) = 2 by enumeration", || {
            Ok(differ("r(321)", &reduced_words_a(&"321".parse()?).len(), &2))
        }),
        check("r(4321) = 16 by enumeration", || {
            Ok(differ("r(4321)", &reduced_words_a(&"4321".parse()?).len(), &16))
        }),
    ];
    for n in 1..=max_n {
        out.push(check(format!("N(p,q) = Σ_ℬ(p,{n}) r"), move || {
            first(1..=n, |p| Ok(differ(format!("p = {p}"), &n_pq(p, n + 1 - p), &sum_r(&gen_b_set(p, n)?))))
        }));
        out.push(check(format!("N(p,q) = Σ_𝒜({n}) r"), move || {
            let [p, q] = middle(n);
            Ok(differ("middle p", &n_pq(p, q), &sum_r(&gen_a_set(n)?)))
        }));
        out.push(check(format!("[p⋯21]·[q⋯21] = Σ_ℬ(p,{n}) [π]"), move || {
            first(1..=n, |p| {
                let got = pi_product(&PiKey(Permutation::longest(p)), &PiKey(Permutation::longest(n + 1 - p)))?;
                let want: LinComb<PiKey> = gen_b_set(p, n)?.into_iter().map(PiKey).collect();
                Ok(differ(format!("p = {p}"), &got, &want))
            })
        }));
    }
    out
}

fn render_set(s: &BTreeSet<Permutation>) -> String {
    let parts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn product_oracle(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let listed = [
        ("231", "312", "{23514, 25134}"),
        ("312", "231", "{31452, 41253}"),
        ("4213", "4132", "{4217365, 7213465}"),
        ("4132", "4213", "{4137526, 4157236, 4172536, 5137246, 5172346, 7132546}"),
    ];
    for (u, v, want) in listed {
        out.push(check(format!("𝒮⧢({u},{v}) = {want}"), move || {
            let (u, v): (Permutation, Permutation) = (u.parse()?, v.parse()?);
            let set = s_shuffle(&u, &v)?;
            let oracle: BTreeSet<Permutation> =
                pi_product_oracle(&PiKey(u), &PiKey(v))?.keys().map(|k| k.0.clone()).collect();
            Ok(differ("recursion", &render_set(&set), &want.to_string())
                .or_else(|| differ("oracle", &render_set(&oracle), &want.to_string())))
        }));
    }
    for a in 1..=max_n + 1 {
        for b in 1..=max_n + 2 - a {
            out.push(check(format!("S{a} × S{b}"), move || {
                let pairs: Vec<(Permutation, Permutation)> = Permutation::all(a)
                    .into_iter()
                    .flat_map(|u| Permutation::all(b).into_iter().map(move |v| (u.clone(), v)))
                    .collect();
                first_par(&pairs, |(u, v)| {
                    let (u, v) = (PiKey(u.clone()), PiKey(v.clone()));
                    Ok(differ(format!("[{}]·[{}]", u.0, v.0), &pi_product(&u, &v)?, &pi_product_oracle(&u, &v)?))
                })
            }));
        }
    }
    out
}

fn all_pi(n: usize) -> Vec<PiKey> {
    Permutation::all(n).into_iter().map(PiKey).collect()
}

fn pi_bialgebra(max_n: usize) -> Vec<Check> {
    let alg = PiBialgebra;
    let s3 = all_pi(3);
    let s4 = all_pi(4);
    let wit = |r: Result<()>| -> Result<Option<String>> {
        match r {
            Ok(()) => Ok(None),
            Err(e) => Ok(Some(e.to_string())),
        }
    };
    vec![
        check("associativity on S3 (exhaustive)", || {
            first(s3.iter(), |a| {
                first(s3.iter(), |b| first(s3.iter(), |c| wit(check_associative(&alg, a, b, c))))
            })
        }),
        check("associativity on S4 (200 sampled triples)", || {
            let t = sample(&s4, 600, 11);
            first(t.chunks(3), |c| wit(check_associative(&alg, &c[0], &c[1], &c[2])))
        }),
        check(format!("coassociativity and counit on S{max_n} (exhaustive)"), || {
            first(all_pi(max_n), |a| {
                Ok(wit(check_coassociative(&alg, &a))?.or(wit(check_counit(&alg, &a))?))
            })
        }),
        check("compatibility on S4 (100 sampled pairs)", || {
            let t = sample(&s4, 200, 12);
            first_par(&t.chunks(2).collect::<Vec<_>>(), |c| wit(check_compatible(&alg, &c[0], &c[1])))
        }),
        check("unit and grading on S3 × S3", || {
            first(s3.iter(), |a| {
                if let Some(w) = wit(check_unit(&alg, a))? {
                    return Ok(Some(w));
                }
                first(s3.iter(), |b| wit(check_graded(&alg, a, b)))
            })
        }),
        check("coproduct regroups the W deconcatenation", || {
            first(all_pi(4), |a| {
                let via_w = linear_extend(&pi_to_w(&a), w_coproduct);
                let via_pi: LinComb<Tensor<WKey, WKey>> = linear_extend(&pi_coproduct(&a), |Tensor(x, y)| {
                    tensor(&pi_to_w(x), &pi_to_w(y))
                });
                Ok(differ(&a, &via_w, &via_pi))
            })
        }),
    ]
}

fn words(xs: &[&str]) -> BTreeSet<Word> {
    xs.iter().map(|s| s.parse().expect("literal word")).collect()
}

fn flatten_bijection(max_n: usize) -> Vec<Check> {
    let mut out = vec![check("𝓡(231645) and its flattening", || {
        let pi: Permutation = "231645".parse()?;
        let r = reduced_words_a(&pi);
        if r != words(&["1254", "1524", "1542", "5124", "5142", "5412"]) {
            return Ok(Some(format!("𝓡(231645) = {r:?}")));
        }
        let flat: BTreeSet<Word> = r.iter().map(|w| w.flatten()).collect();
        let want = words(&["1243", "1423", "1432", "4123", "4132", "4312"]);
        let mut union = reduced_words_a(&"23514".parse()?);
        union.extend(reduced_words_a(&"25134".parse()?));
        if flat != want || union != want {
            return Ok(Some("flattened words differ from 𝓡(23514) ⊔ 𝓡(25134)".into()));
        }
        Ok((!flatten_reduced_words_bijection_check(&pi)?).then(|| "bijection check failed".into()))
    })];
    for n in 1..=max_n {
        out.push(check(format!("all π ∈ S{n}"), move || {
            first(Permutation::all(n), |p| {
                Ok((!flatten_reduced_words_bijection_check(&p)?).then(|| p.to_string()))
            })
        }));
    }
    out
}

fn fc_products(max_n: usize) -> Vec<Check> {
    vec![
        check("[4123]·[2341] = [4125673] + [5123674]", || {
            let got = fc_product(&"4123".parse()?, &"2341".parse()?)?;
            let main = pi_product(&"4123".parse()?, &"2341".parse()?)?;
            Ok(differ("rule", &got.to_string(), &"[4125673] + [5123674]".to_string())
                .or_else(|| differ("product", &main, &got)))
        }),
        check(format!("all 321-avoiding pairs up to S{max_n}"), || {
            let fc: Vec<PiKey> = (1..=max_n)
                .flat_map(all_pi)
                .filter(|k| k.0.is_321_avoiding())
                .collect();
            first(fc.iter(), |u| {
                first(fc.iter(), |v| Ok(differ(format!("{u}·{v}"), &fc_product(u, v)?, &pi_product(u, v)?)))
            })
        }),
    ]
}

const FAST: [&str; 8] = ["le", "gt", "ge", "lt", "gtle", "ltge", "gelt", "legt"];

fn psi_fast_suite(max_len: usize) -> Vec<Check> {
    let mut out = vec![check("K_(2,2) in the monomial basis", || {
        let k = QSym::k(&"[2,2]".parse()?)?;
        let want = QSym::parse("4*M[1,3] + 4*M[2,2] + 8*M[1,1,2] + 8*M[1,2,1] + 8*M[2,1,1] + 16*M[1,1,1,1]")?;
        let subsets: BTreeSet<BTreeSet<usize>> = k.monomials().keys().map(|b| b.subset()).collect();
        let listed: BTreeSet<BTreeSet<usize>> =
            [vec![1], vec![2], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
                .into_iter()
                .map(|v| v.into_iter().collect())
                .collect();
        Ok(differ("K_(2,2)", &k, &want).or_else(|| (subsets != listed).then(|| format!("{subsets:?}"))))
    })];
    let keys: Vec<WKey> = sample_keys(4, max_len).into_iter().filter(|k| k.frame == 4).collect();
    let registry = ZetaRegistry::standard();
    for name in FAST {
        let keys = &keys;
        let registry = &registry;
        out.push(check(format!("Ψ_{name} = closed form on {} words", keys.len()), move || {
            let psi = Psi::new(registry, name, Policy::Fail)?;
            first_par(keys, |a| Ok(differ(format!("{name} at {a}"), &psi.apply_key(a), &psi_fast(name, a)?)))
        }));
    }
    out.push(check("Θ∘Ψ_≤ = Ψ_{>|≤} and Θ∘Ψ_≥ = Ψ_{<|≥}", || {
        first_par(&keys, |a| {
            let up = theta(&psi_fast("le", a)?)?;
            let down = theta(&psi_fast("ge", a)?)?;
            let (gtle, ltge) = (psi_fast("gtle", a)?, psi_fast("ltge", a)?);
            Ok(differ(format!("at {a}"), &up, &gtle).or_else(|| differ(format!("at {a}"), &down, &ltge)))
        })
    }));
    out
}

/// `F_π` from its defining power series in `vars` variables: each reduced
/// word contributes every weakly increasing index sequence that strictly
/// increases across ascents.
pub fn stanley_polynomial(pi: &Permutation, vars: usize) -> BTreeMap<Vec<usize>, Rational> {
    fn go(
        w: &[Letter],
        j: usize,
        lo: usize,
        vars: usize,
        exps: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, Rational>,
    ) {
        if j == w.len() {
            *out.entry(exps.clone()).or_insert_with(Rational::zero) += int(1);
            return;
        }
        let start = if j > 0 && w[j - 1] < w[j] { lo + 1 } else { lo };
        for i in start..vars {
            exps[i] += 1;
            go(w, j + 1, i, vars, exps, out);
            exps[i] -= 1;
        }
    }
    let mut out = BTreeMap::new();
    for w in reduced_words_a(pi) {
        go(w.letters(), 0, 0, vars, &mut vec![0; vars], &mut out);
    }
    out
}

fn schur_coeffs_ok(f: &QSym) -> Result<Option<String>> {
    let e = expand_in_schur(f)?;
    Ok((!e.is_nonnegative_integral()).then(|| format!("Schur expansion {e}")))
}

fn stanley_a(max_n: usize) -> Vec<Check> {
    let registry = ZetaRegistry::standard();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let registry = registry.clone();
        out.push(check(format!("S{n}: symmetric, Schur positive, F_(π⁻¹) = ω(F_π)"), move || {
            first_par(&Permutation::all(n), |p| {
                let f = stanley_f(p)?;
                if let Some(w) = schur_coeffs_ok(&f)? {
                    return Ok(Some(format!("{p}: {w}")));
                }
                Ok(differ(format!("{p}"), &stanley_f(&p.inverse())?, &omega(&f)))
            })
            .and_then(|w| {
                if w.is_some() {
                    return Ok(w);
                }
                let ps: Vec<Psi> = ["ge", "lt", "le"]
                    .iter()
                    .map(|z| Psi::new(&registry, z, Policy::Fail))
                    .collect::<Result<_>>()?;
                first_par(&Permutation::all(n), |p| {
                    let x = pi_to_w(&PiKey(p.clone()));
                    let f = stanley_f(p)?;
                    let finv = stanley_f(&p.inverse())?;
                    Ok(differ(format!("Ψ_> at {p}"), &stanley_f_via_psi(p)?, &f)
                        .or_else(|| differ(format!("Ψ_≥ at {p}"), &ps[0].apply(&x), &f))
                        .or_else(|| differ(format!("Ψ_< at {p}"), &ps[1].apply(&x), &finv))
                        .or_else(|| differ(format!("Ψ_≤ at {p}"), &ps[2].apply(&x), &finv)))
                })
            })
        }));
        out.push(check(format!("F_(w₀⁽{n}⁾) = s_δ{n}"), move || {
            Ok(differ(
                "w₀",
                &stanley_f(&Permutation::longest(n))?,
                &schur_s(&Partition::staircase(n)),
            ))
        }));
    }
    out.push(check("power-series definition on S4", || {
        first(Permutation::all(4), |p| {
            let f = stanley_f(&p)?;
            let l = p.inversions().max(1);
            let direct = stanley_polynomial(&p, l);
            Ok((expand_polynomial(&f, l) != direct).then(|| format!("{p}")))
        })
    }));
    out.push(check("ω(s_λ) = s_(λᵀ) up to weight 6", || {
        first((1..=6).flat_map(Partition::all), |l| {
            Ok(differ(&l, &omega(&schur_s(&l)), &schur_s(&l.conjugate())))
        })
    }));
    out
}

fn staircase_p(n: usize) -> Partition {
    Partition::from_unsorted((0..n).map(|i| n.saturating_sub(1 + 2 * i)).collect())
}

fn sum_f(set: impl IntoIterator<Item = Permutation>) -> Result<QSym> {
    let mut acc = QSym::zero();
    for p in set {
        acc += &stanley_f(&p)?;
    }
    Ok(acc)
}

fn product_formula(max_n: usize) -> Vec<Check> {
    let mut out = vec![check("F_u F_v = Σ_{𝒮⧢(u,v)} F_π on S3 × S3", || {
        let s3 = Permutation::all(3);
        first(s3.iter(), |u| {
            first(s3.iter(), |v| {
                let lhs = stanley_f(u)?.mul(&stanley_f(v)?);
                Ok(differ(format!("{u}, {v}"), &lhs, &sum_f(s_shuffle(u, v)?)?))
            })
        })
    })];
    for n in 1..=max_n {
        out.push(check(format!("P_{} = Σ_ℬ(p,{n}) F_π for both middle p", staircase_p(n)), move || {
            let target = schur_p(&staircase_p(n))?;
            first(middle(n), |p| Ok(differ(format!("p = {p}"), &sum_f(gen_b_set(p, n)?)?, &target)))
        }));
        out.push(check(format!("s_δp s_δq = P_{} (n = {n})", staircase_p(n)), move || {
            let [p, q] = middle(n);
            let lhs = schur_s(&Partition::staircase(p)).mul(&schur_s(&Partition::staircase(q)));
            Ok(differ("product", &lhs, &schur_p(&staircase_p(n))?))
        }));
    }
    out
}

fn p42(_: usize) -> Vec<Check> {
    vec![check("P_(4,2) = F_32541 + F_34512 + F_35142 + F_42513 + F_45123 + F_52143", || {
        if gen_b_set(3, 5)? != perms(&B35) {
            return Ok(Some("ℬ(3,5) differs from the listed six".into()));
        }
        let sum = sum_f(perms(&B35))?;
        let p = schur_p(&"[4,2]".parse()?)?;
        Ok(differ("P_(4,2)", &sum, &p).or_else(|| {
            expand_in_p(&sum)
                .ok()
                .filter(|e| *e != LinComb::basis("[4,2]".parse().unwrap()))
                .map(|e| format!("P-expansion {e}"))
        }))
    })]
}

const BD_DISPLAYS: [(&str, &str, &str); 8] = [
    ("[1,-2,-3]_B", "213", "[1,4,-3,-2,5]_B + [1,-2,4,-3,5]_B + [1,-2,-4,3,5]_B + [1,-4,-3,2,5]_B + [4,-2,-3,1,5]_B"),
    ("[1,-2,-3]_D", "213", "[1,4,-3,-2,5]_D + [1,-2,4,-3,5]_D + [1,-2,-4,3,5]_D + [1,-4,-3,2,5]_D + [4,-2,-3,1,5]_D + [-4,-2,-3,-1,5]_D"),
    ("[1,-2,-3]_B", "231", "[1,4,-3,5,-2]_B + [1,-2,4,5,-3]_B + [1,-2,-4,5,3]_B + [1,-4,-3,5,2]_B + [4,-2,-3,5,1]_B"),
    ("[1,-2,-3]_D", "231", "[1,4,-3,5,-2]_D + [1,-2,4,5,-3]_D + [1,-2,-4,5,3]_D + [1,-4,-3,5,2]_D + [4,-2,-3,5,1]_D + [-4,-2,-3,5,-1]_D"),
    ("[1,-3,-2]_B", "312", "[1,-3,5,-2,4]_B + [1,-5,-2,3,4]_B + [5,-3,-2,1,4]_B"),
    ("[1,-3,-2]_D", "312", "[1,-3,5,-2,4]_D + [1,-5,-2,3,4]_D + [5,-3,-2,1,4]_D + [-5,-3,-2,-1,4]_D"),
    ("[1,-3,-2]_B", "321", "[1,-3,5,4,-2]_B + [1,-4,5,-2,3]_B + [1,-5,-2,4,3]_B + [4,-3,5,-2,1]_B + [5,-3,-2,4,1]_B + [5,-4,-2,1,3]_B"),
    ("[1,-3,-2]_D", "321", "[1,-3,5,4,-2]_D + [1,-4,5,-2,3]_D + [1,-5,-2,4,3]_D + [4,-3,5,-2,1]_D + [5,-3,-2,4,1]_D + [5,-4,-2,1,3]_D + [-4,-3,5,-2,-1]_D + [-5,-3,-2,4,-1]_D + [-5,-4,-2,-1,3]_D"),
];

fn bd_actions(_: usize) -> Vec<Check> {
    BD_DISPLAYS
        .iter()
        .map(|&(x, v, want)| {
            check(format!("{x}·[{v}]"), move || {
                let x: SignedKey = x.parse()?;
                let got = module_action(&x, &v.parse()?)?;
                let want: LinComb<SignedKey> = want
                    .split(" + ")
                    .map(|t| Ok((t.parse::<SignedKey>()?, int(1))))
                    .collect::<Result<_>>()?;
                Ok(differ("terms", &got, &want))
            })
        })
        .collect()
}

fn q_coeffs_ok(f: &QSym) -> Result<Option<String>> {
    let e = expand_in_p(f)?;
    let q: LinComb<Partition> = e.iter().map(|(l, c)| (l.clone(), c * pow2(-(l.len() as i64)))).collect();
    Ok((!q.is_nonnegative_integral()).then(|| format!("Q-expansion {q}")))
}

fn p_coeffs_ok(f: &QSym) -> Result<Option<String>> {
    let e = expand_in_p(f)?;
    Ok((!e.is_nonnegative_integral()).then(|| format!("P-expansion {e}")))
}

fn stanley_bcd(max_n: usize) -> Vec<Check> {
    let bn = SignedPermutation::all(max_n);
    let dn: Vec<SignedPermutation> = bn.iter().filter(|p| p.in_type_d()).cloned().collect();
    let bn2 = bn.clone();
    vec![
        check(format!("F^C = 2^ℓ₀ F^B on B{max_n}"), || {
            first_par(&bn, |p| {
                let scaled = stanley_fb(p)?.scale(&pow2(p.negatives() as i64));
                Ok(differ(p, &stanley_fc(p)?, &scaled))
            })
        }),
        check(format!("F^B and F^C invariant under inversion on B{max_n}"), || {
            first_par(&bn, |p| {
                let q = p.inverse();
                Ok(differ(p, &stanley_fb(p)?, &stanley_fb(&q)?).or(differ(p, &stanley_fc(p)?, &stanley_fc(&q)?)))
            })
        }),
        check(format!("F^D invariant under inversion on D{max_n}"), || {
            first_par(&dn, |p| Ok(differ(p, &stanley_fd(p)?, &stanley_fd(&p.inverse())?)))
        }),
        check(format!("F^D vanishes off D{max_n}"), || {
            first(bn2.iter().filter(|p| !p.in_type_d()), |p| {
                Ok((!stanley_fd(p)?.is_zero()).then(|| p.to_string()))
            })
        }),
        check(format!("F^B, F^D P-positive and F^C Q-positive on B{max_n}"), || {
            first_par(&bn, |p| {
                if let Some(w) = p_coeffs_ok(&stanley_fb(p)?)? {
                    return Ok(Some(format!("F^B_{p}: {w}")));
                }
                if let Some(w) = q_coeffs_ok(&stanley_fc(p)?)? {
                    return Ok(Some(format!("F^C_{p}: {w}")));
                }
                p_coeffs_ok(&stanley_fd(p)?).map(|w| w.map(|w| format!("F^D_{p}: {w}")))
            })
        }),
        check(format!("weighted peak sums equal Ψ from ζ^B, ζ^C, ζ^D on B{max_n}"), || {
            first_par(&bn, |p| {
                Ok(differ(p, &stanley_fb(p)?, &stanley_signed_via_psi("B", p)?)
                    .or(differ(p, &stanley_fc(p)?, &stanley_signed_via_psi("C", p)?))
                    .or(differ(p, &stanley_fd(p)?, &stanley_signed_via_psi("D", p)?)))
            })
        }),
    ]
}

fn lengths_bd(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(check(format!("B{n}"), move || {
            let g = TypeB { n };
            let d = cayley_distances(&g);
            if d.len() != (1..=n).product::<usize>() << n {
                return Ok(Some(format!("BFS reached {} elements", d.len())));
            }
            let mut sorted: Vec<_> = d.into_iter().collect();
            sorted.sort();
            first(sorted, |(x, k)| Ok(differ(&x, &length_b_formula(&x), &k)))
        }));
    }
    for n in 2..=max_n + 1 {
        out.push(check(format!("D{n}"), move || {
            let g = TypeD { n };
            let d = cayley_distances(&g);
            if d.len() != (1..=n).product::<usize>() << (n - 1) {
                return Ok(Some(format!("BFS reached {} elements", d.len())));
            }
            let mut sorted: Vec<_> = d.into_iter().collect();
            sorted.sort();
            first(sorted, |(x, k)| Ok(differ(&x, &length_d_formula(&x), &k)))
        }));
    }
    out
}

fn counting_character(max_n: usize) -> Vec<Check> {
    vec![
        check("S3 × S3 (exhaustive)", || {
            let s3 = all_pi(3);
            first(s3.iter(), |u| {
                first(s3.iter(), |v| Ok((!counting_morphism_check(u, v)?).then(|| format!("{u}·{v}"))))
            })
        }),
        check(format!("S{max_n} × S{max_n} (200 sampled pairs)"), || {
            let t = sample(&all_pi(max_n), 400, 14);
            first_par(&t.chunks(2).collect::<Vec<_>>(), |c| {
                Ok((!counting_morphism_check(&c[0], &c[1])?).then(|| format!("{}·{}", c[0], c[1])))
            })
        }),
    ]
}

fn qsym_laws(max_w: usize) -> Vec<Check> {
    let alg = QSymM;
    let comps = |n: usize| -> Vec<Composition> { (0..=n).flat_map(Composition::all).collect() };
    let wit = |r: Result<()>| -> Result<Option<String>> { Ok(r.err().map(|e| e.to_string())) };
    vec![
        check("m_to_l ∘ l_to_m = id up to weight 8", || {
            first(comps(8), |a| Ok(differ(&a, &m_to_l(&l_to_m(&a)), &LinComb::basis(a.clone()))))
        }),
        check(format!("commutative and associative to total weight {max_w}"), move || {
            let all = comps(max_w);
            first(all.iter(), |a| {
                first(all.iter().filter(|b| a.weight() + b.weight() <= max_w), |b| {
                    let (x, y) = (QSym::m(a.clone()), QSym::m(b.clone()));
                    if let Some(w) = differ(format!("{a}·{b}"), &x.mul(&y), &y.mul(&x)) {
                        return Ok(Some(w));
                    }
                    first(all.iter().filter(|c| a.weight() + b.weight() + c.weight() <= max_w), |c| {
                        wit(check_associative(&alg, a, b, c))
                    })
                })
            })
        }),
        check(format!("coassociative with counit to weight {max_w}"), move || {
            first(comps(max_w), |a| Ok(wit(check_coassociative(&alg, &a))?.or(wit(check_counit(&alg, &a))?)))
        }),
        check(format!("compatible on 150 sampled pairs of total weight ≤ {max_w}"), move || {
            let all = comps(max_w / 2);
            let t = sample(&all, 300, 21);
            first(t.chunks(2), |c| wit(check_compatible(&alg, &c[0], &c[1])))
        }),
        check("products agree with truncated power series", move || {
            let all = comps(4);
            first(all.iter(), |a| {
                first(all.iter().filter(|b| a.weight() + b.weight() <= 5), |b| {
                    let (x, y) = (QSym::m(a.clone()), QSym::m(b.clone()));
                    let d = a.weight() + b.weight();
                    let lhs = expand_polynomial(&x.mul(&y), d);
                    let rhs = crate::qsym::multiply_polynomials(&expand_polynomial(&x, d), &expand_polynomial(&y, d));
                    Ok((lhs != rhs).then(|| format!("{a}·{b}")))
                })
            })
        }),
        check("L_β ↦ L_βʳ sends K_α to K_α♭ up to weight 8", || {
            first((0..=8).flat_map(Composition::all).filter(|a| a.is_peak()), |a| {
                Ok(differ(&a, &crate::qsym::reversal_involution(&QSym::k(&a)?), &QSym::k(&a.flat()?)?))
            })
        }),
    ]
}

fn schur_pq(max_w: usize) -> Vec<Check> {
    let strict: Vec<Partition> = (0..=max_w).flat_map(Partition::all_strict).collect();
    vec![
        check(format!("Q_λ = 2^ℓ(λ) P_λ for |λ| ≤ {max_w}"), || {
            first_par(&strict, |l| {
                Ok(differ(l, &schur_q(l)?, &schur_p(l)?.scale(&pow2(l.len() as i64))))
            })
        }),
        check("P_λ symmetric, expand_in_P(P_λ) = P_λ, peak support", || {
            first_par(&strict, |l| {
                let p = schur_p(l)?;
                if !is_symmetric(&p) {
                    return Ok(Some(format!("P_{l} not symmetric")));
                }
                p.to_k()?;
                Ok(differ(l, &expand_in_p(&p)?, &LinComb::basis(l.clone())))
            })
        }),
        check("Q_(n) = Θ(L_(n))", || {
            first(1..=max_w, |n| {
                let l = QSym::l(&Composition::from_mask(n, 0));
                Ok(differ(n, &schur_q(&Partition::from_unsorted(vec![n]))?, &theta(&l)?))
            })
        }),
        check("s_λ unitriangular with K_λλ = 1", || {
            first((1..=max_w.min(7)).flat_map(Partition::all), |l| {
                let m = crate::qsym::to_monomial_sym(&schur_s(&l))?;
                let lead = m.keys().last().cloned();
                Ok((lead.as_ref() != Some(&l) || !m.coeff(&l).is_one()).then(|| format!("s_{l} = {m}")))
            })
        }),
        check("Kostka numbers against tableau enumeration", || {
            first((1..=5).flat_map(Partition::all), |l| {
                first(Partition::all(l.weight()), |mu| {
                    Ok(differ(
                        format!("K({l},{mu})"),
                        &crate::qsym::kostka(&l, mu.parts()),
                        &ssyt_count(&l, mu.parts()),
                    ))
                })
            })
        }),
    ]
}

/// Semistandard tableaux of shape `λ` and content `μ`, filled cell by cell.
pub fn ssyt_count(lambda: &Partition, mu: &[usize]) -> u64 {
    fn go(shape: &[usize], grid: &mut Vec<Vec<usize>>, cell: usize, left: &mut Vec<usize>) -> u64 {
        let total: usize = shape.iter().sum();
        if cell == total {
            return u64::from(left.iter().all(|&c| c == 0));
        }
        let (mut r, mut c, mut k) = (0, 0, cell);
        while k >= shape[r] {
            k -= shape[r];
            r += 1;
        }
        c += k;
        let mut count = 0;
        for v in 0..left.len() {
            if left[v] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            count += go(shape, grid, cell + 1, left);
            left[v] += 1;
        }
        count
    }
    if lambda.weight() != mu.iter().sum::<usize>() {
        return 0;
    }
    let shape = lambda.parts();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p]).collect();
    go(shape, &mut grid, 0, &mut mu.to_vec())
}

fn w_bialgebra(max: usize) -> Vec<Check> {
    let alg = WordBialgebra;
    let keys = sample_keys(max, max);
    let small = sample_keys(2, 2);
    let wit = |r: Result<()>| -> Result<Option<String>> { Ok(r.err().map(|e| e.to_string())) };
    vec![
        check("associativity on small keys", || {
            first(small.iter(), |a| first(small.iter(), |b| first(small.iter(), |c| wit(check_associative(&alg, a, b, c)))))
        }),
        check(format!("coassociativity, counit and unit on ℓ(w), frame ≤ {max}"), || {
            first(keys.iter(), |a| {
                Ok(wit(check_coassociative(&alg, a))?
                    .or(wit(check_counit(&alg, a))?)
                    .or(wit(check_unit(&alg, a))?))
            })
        }),
        check("compatibility and grading on 200 sampled pairs", || {
            let t = sample(&keys, 400, 31);
            first(t.chunks(2), |c| Ok(wit(check_compatible(&alg, &c[0], &c[1]))?.or(wit(check_graded(&alg, &c[0], &c[1]))?)))
        }),
        check("[∅,n]·x never returns [∅,0] for n ≥ 1", || {
            let unit = WKey::new_unchecked(Word::empty(), 0);
            first(1..=max, |n| {
                let e = WKey::new_unchecked(Word::empty(), n);
                first(keys.iter(), |x| {
                    let p = w_product(&e, x);
                    Ok((p.coeff(&unit) != Rational::zero()).then(|| format!("[;{n}]·{x}")))
                })
            })
        }),
    ]
}

fn psi_morphism(max_deg: usize) -> Vec<Check> {
    let registry = ZetaRegistry::standard();
    let half = max_deg / 2;
    let pool = sample_keys(3, half);
    registry
        .names()
        .map(|name| {
            let registry = registry.clone();
            let pool = pool.clone();
            let name = name.to_string();
            check(format!("Ψ for ζ = {name} on 150 sampled pairs of total degree ≤ {max_deg}"), move || {
                let psi = Psi::new(&registry, &name, Policy::Fail)?;
                let (acting, min_frame) = match psi.zeta().kind() {
                    Kind::Character => (None, 0),
                    Kind::Module { acting, min_frame } => (Some(Psi::new(&registry, &acting, Policy::Fail)?), min_frame),
                };
                let eligible: Vec<WKey> = pool.iter().filter(|k| k.frame >= min_frame).cloned().collect();
                let left = sample(&eligible, 150, 41);
                let right = sample(&pool, 150, 42);
                first(left.iter().zip(&right), |(a, b)| {
                    let lhs = psi.apply(&w_product(a, b));
                    let rb = acting.as_ref().unwrap_or(&psi).apply_key(b);
                    Ok(differ(format!("{a}·{b}"), &lhs, &psi.apply_key(a).mul(&rb)))
                })
            })
        })
        .collect()
}

fn qsym_tensor(x: &LinComb<Tensor<PiKey, PiKey>>, f: impl Fn(&PiKey) -> Result<QSym>) -> Result<LinComb<Tensor<Composition, Composition>>> {
    let mut out = LinComb::zero();
    for (Tensor(a, b), c) in x.iter() {
        out.add_scaled(&tensor(&f(a)?.0, &f(b)?.0), c);
    }
    Ok(out)
}

fn coalgebra_morphism(max_deg: usize) -> Vec<Check> {
    let keys: Vec<PiKey> = (1..=5).flat_map(all_pi).filter(|k| k.degree() <= max_deg).collect();
    let keys2 = keys.clone();
    vec![
        check(format!("(Ψ_>⊗Ψ_>)∘Δ = Δ∘Ψ_> on Π to degree {max_deg}"), move || {
            let psi = Psi::new(&ZetaRegistry::standard(), "gt", Policy::Fail)?;
            first_par(&keys, |k| {
                let x = pi_to_w(k);
                Ok(differ(k, &psi.apply_tensor(&linear_extend(&x, w_coproduct)), &psi.apply(&x).coproduct()))
            })
        }),
        check("Δ(F_π) = Σ F_π′ ⊗ F_π″", move || {
            first_par(&keys2, |k| {
                let lhs = stanley_f(&k.0)?.coproduct();
                Ok(differ(k, &lhs, &qsym_tensor(&pi_coproduct(k), |x| stanley_f(&x.0))?))
            })
        }),
    ]
}

fn signed_keys(ty: SignedType, n: usize) -> Vec<SignedKey> {
    SignedPermutation::all(n)
        .into_iter()
        .filter_map(|p| match ty {
            SignedType::B => Some(SignedKey::b(p)),
            SignedType::D => SignedKey::d(p),
        })
        .collect()
}

fn module_axioms(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for ty in [SignedType::B, SignedType::D] {
        let tag = if ty == SignedType::B { "B" } else { "D" };
        out.push(check(format!("(x·[u])·[v] = x·([u][v]) on {tag}2 × S2 × S2"), move || {
            let s2 = all_pi(2);
            first(signed_keys(ty, 2), |x| {
                first(s2.iter(), |u| {
                    first(s2.iter(), |v| {
                        let lhs = act(&module_action(&x, u)?, &LinComb::basis(v.clone()))?;
                        let rhs = act(&LinComb::basis(x.clone()), &pi_product(u, v)?)?;
                        Ok(differ(format!("{x}, {u}, {v}"), &lhs, &rhs))
                    })
                })
            })
        }));
        out.push(check(format!("x·[1] = x and degrees add on {tag}{max_n} × S≤3"), move || {
            let vs: Vec<PiKey> = (1..=3).flat_map(all_pi).collect();
            first_par(&signed_keys(ty, max_n), |x| {
                if let Some(w) = differ(x, &module_action(x, &PiKey::one())?, &LinComb::basis(x.clone())) {
                    return Ok(Some(w));
                }
                first(vs.iter(), |v| {
                    let want = x.degree() + v.degree();
                    Ok(module_action(x, v)?
                        .keys()
                        .find(|k| k.degree() != want)
                        .map(|k| format!("{x}·{v} ∋ {k}")))
                })
            })
        }));
        out.push(check(format!("Δ(x·[v]) = Δ(x)·Δ([v]) on {tag}2 × S≤3"), move || {
            let vs: Vec<PiKey> = (1..=3).flat_map(all_pi).collect();
            first(signed_keys(ty, 2), |x| {
                first(vs.iter(), |v| {
                    let lhs = linear_extend(&module_action(&x, v)?, signed_coproduct);
                    let mut rhs = LinComb::zero();
                    for (Tensor(x1, x2), c) in signed_coproduct(&x).iter() {
                        for (Tensor(v1, v2), d) in pi_coproduct(v).iter() {
                            let t = tensor(&module_action(x1, v1)?, &module_action(x2, v2)?);
                            rhs.add_scaled(&t, &(c * d));
                        }
                    }
                    Ok(differ(format!("{x}·{v}"), &lhs, &rhs))
                })
            })
        }));
    }
    out
}

fn module_morphism(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (ty, lo) in [(SignedType::B, 2), (SignedType::D, 2)] {
        let tag = if ty == SignedType::B { "B" } else { "D" };
        out.push(check(format!("Ψ^{tag}(x·[v]) = Ψ^{tag}(x)·Ψ_(>|≤)([v]) on {tag}{lo}..{tag}{max_n} × S2, S3"), move || {
            let psi = |x: &LinComb<WKey>| if ty == SignedType::B { psi_b(x) } else { psi_d(x) };
            let vs: Vec<PiKey> = [2, 3].into_iter().flat_map(all_pi).collect();
            let xs: Vec<SignedKey> = (lo..=max_n).flat_map(|n| signed_keys(ty, n)).collect();
            first_par(&xs, |x| {
                first(vs.iter(), |v| {
                    let prod = module_action(x, v)?;
                    let lhs = psi(&linear_extend(&prod, signed_to_w));
                    let rhs = psi(&signed_to_w(x)).mul(&psi_c(&pi_to_w(v)));
                    Ok(differ(format!("{x}·{v}"), &lhs, &rhs))
                })
            })
        }));
    }
    out.push(check("with Ψ_> on the acting side the law fails (witness expected)", || {
        let x: SignedKey = "[-1,2]_B".parse()?;
        let v: PiKey = "21".parse()?;
        let gt = Psi::new(&ZetaRegistry::standard(), "gt", Policy::Fail)?;
        let lhs = psi_b(&linear_extend(&module_action(&x, &v)?, signed_to_w));
        let rhs = psi_b(&signed_to_w(&x)).mul(&gt.apply(&pi_to_w(&v)));
        Ok((lhs == rhs).then(|| "Ψ_> variant unexpectedly holds".to_string()))
    }));
    out
}

fn signed_coproducts(max_n: usize) -> Vec<Check> {
    type F = fn(&SignedPermutation) -> Result<QSym>;
    let cases: [(&str, SignedType, F); 3] =
        [("B", SignedType::B, stanley_fb), ("C", SignedType::B, stanley_fc), ("D", SignedType::D, stanley_fd)];
    cases
        .into_iter()
        .map(|(tag, ty, f)| {
            check(format!("Δ(F^{tag}_π) = Σ F^{tag}_π′ ⊗ F^{tag}_π″ on {}{max_n}", if ty == SignedType::B { "B" } else { "D" }), move || {
                let keys = signed_keys(ty, max_n);
                first_par(&keys, |k| {
                    let lhs = f(&k.perm)?.coproduct();
                    let mut rhs = LinComb::zero();
                    for (Tensor(a, b), c) in signed_coproduct(k).iter() {
                        rhs.add_scaled(&tensor(&f(&a.perm)?.0, &f(&b.perm)?.0), c);
                    }
                    Ok(differ(k, &lhs, &rhs))
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let r = SuiteRegistry::standard();
        assert!(r.get("a5-sum").is_ok());
        assert!(matches!(r.get("nope"), Err(crate::Error::UnknownName(_))));
        assert_eq!(r.names().count(), 24);
    }

    #[test]
    fn quick_suites_pass() {
        let r = SuiteRegistry::standard();
        for name in ["a5-sum", "bd-actions", "p42"] {
            for c in r.get(name).unwrap().run(None) {
                assert!(c.pass, "{name}: {} {:?}", c.name, c.witness);
            }
        }
    }

    #[test]
    fn ssyt_oracle() {
        assert_eq!(ssyt_count(&"[2,1]".parse().unwrap(), &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&"[2,1]".parse().unwrap(), &[2, 1]), 1);
    }

    #[test]
    fn direct_series() {
        let f = stanley_polynomial(&"21".parse().unwrap(), 2);
        assert_eq!(f.len(), 2);
    }
}
