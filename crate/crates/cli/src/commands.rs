use std::fmt::Display;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use cb_core::coxeter::{count_reduced_words_a, reduced_words_a, reduced_words_b, reduced_words_d};
use cb_core::families::{gen_a_set, gen_b_set};
use cb_core::linear::{linear_extend, pow2, LinComb, Tensor};
use cb_core::perm::{Permutation, SignedPermutation};
use cb_core::pi::{linear_pi_to_w, pi_coproduct, pi_product, pi_product_oracle, pi_to_w, s_shuffle, PiKey};
use cb_core::psi::Psi;
use cb_core::qsym::{
    expand_in_p, expand_in_schur, expand_polynomial, m_coproduct, multiply_polynomials, Basis, Composition,
    Partition, QSym,
};
use cb_core::stanley::{stanley_f, stanley_fb, stanley_fc, stanley_fd, stanley_signed_via_psi};
use cb_core::typebd::{module_action, signed_coproduct, signed_to_w, SignedKey};
use cb_core::verify::{check, Check, SuiteRegistry};
use cb_core::wbialg::{w_coproduct, w_product, WKey};
use cb_core::word::{Letter, Word};
use cb_core::zeta::{Kind, Policy, ZetaRegistry};
use cb_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{Cli, Cmd, Dataset, Family, Group, OutBasis, PolicyArg, ProductKind, StanleyType};

const CAP_A: usize = 7;
const CAP_BD: usize = 4;

pub fn run(cli: &Cli, mut r: Report) -> Result<(Report, Option<PathBuf>)> {
    let mut output = None;
    match &cli.cmd {
        Cmd::ReducedWords { group, perm } => reduced_words(cli, &mut r, *group, perm)?,
        Cmd::Product { kind, lhs, rhs, oracle } => product(cli, &mut r, *kind, lhs, rhs, *oracle)?,
        Cmd::Coproduct { kind, arg } => coproduct(cli, &mut r, *kind, arg)?,
        Cmd::Stanley { ty, perm, basis } => stanley(cli, &mut r, *ty, perm, *basis)?,
        Cmd::Verify { suite, max_n, list } => verify(&mut r, suite, *max_n, *list)?,
        Cmd::Export {
            dataset,
            left,
            right,
            output: out,
        } => {
            export(cli, &mut r, *dataset, left.as_deref(), right.as_deref(), out.is_some())?;
            output = out.clone();
        }
        Cmd::Families { family, n, m } => families(cli, &mut r, *family, *n, *m)?,
    }
    Ok((r, output))
}

fn cap(cli: &Cli, what: impl Display, n: usize, limit: usize, kind: &str) -> Result<()> {
    if n > limit && !cli.force {
        return Err(Error::LimitExceeded(format!(
            "{what} has n = {n}, above the {kind} cap n ≤ {limit}; pass --force to go ahead"
        )));
    }
    Ok(())
}

fn cap_degree(cli: &Cli, what: impl Display, d: usize) -> Result<()> {
    if d > cli.max_degree && !cli.force {
        return Err(Error::LimitExceeded(format!(
            "{what} has length {d}, above CB_MAX_DEGREE = {}; pass --force to go ahead",
            cli.max_degree
        )));
    }
    Ok(())
}

fn policy(cli: &Cli) -> Policy {
    match cli.zeta_policy {
        PolicyArg::Fail => Policy::Fail,
        PolicyArg::Warn => Policy::Warn,
        PolicyArg::Skip => Policy::Skip,
    }
}

fn chosen_psi(cli: &Cli, r: &mut Report) -> Result<Option<Psi>> {
    let Some(name) = &cli.zeta else { return Ok(None) };
    let psi = Psi::new(&ZetaRegistry::standard(), name, policy(cli))?;
    if let Some(w) = psi.warning() {
        r.warnings.push(format!("ζ = {name} failed its self-test: {w}"));
    }
    Ok(Some(psi))
}

fn report_psi(cli: &Cli, r: &mut Report, psi: &Psi, x: &LinComb<WKey>) {
    let name = cli.zeta.as_deref().unwrap_or_default();
    let image = psi.apply(x);
    r.line(format!("Ψ_{name} = {image}"));
    r.set("psi", json!({ "zeta": name, "basis": "M", "value": image.0.to_json_with(|a| a.to_string()) }));
}

fn render<K: Ord + Clone + Display>(r: &mut Report, key: &str, x: &LinComb<K>) {
    r.line(x.to_string());
    r.set(key, x.to_json());
}

fn word_list(ws: impl IntoIterator<Item = Word>) -> Vec<String> {
    ws.into_iter()
        .map(|w| if w.is_empty() { "∅".to_string() } else { w.to_string() })
        .collect()
}

/// Accepts `1,-3,-2` as well as `[1,-3,-2]_B`.
fn signed_key(group: Group, s: &str) -> Result<SignedKey> {
    let t = s.trim();
    let t = t.strip_suffix("_B").or_else(|| t.strip_suffix("_D")).unwrap_or(t);
    let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
    let perm: SignedPermutation = t.parse()?;
    match group {
        Group::D => SignedKey::d(perm.clone()).ok_or_else(|| Error::NotInGroup(format!("{perm} (odd number of negative entries)"))),
        _ => Ok(SignedKey::b(perm)),
    }
}

fn reduced_words(cli: &Cli, r: &mut Report, group: Group, s: &str) -> Result<()> {
    let psi = chosen_psi(cli, r)?;
    let (words, w) = match group {
        Group::A => {
            let p: Permutation = s.parse()?;
            cap(cli, &p, p.size(), CAP_A, "type A")?;
            cap_degree(cli, &p, p.inversions())?;
            (reduced_words_a(&p), pi_to_w(&PiKey(p)))
        }
        Group::B | Group::D => {
            let key = signed_key(group, s)?;
            cap(cli, &key, key.frame(), CAP_BD, "type B/D")?;
            cap_degree(cli, &key, key.degree())?;
            let words = if group == Group::B { reduced_words_b(&key.perm) } else { reduced_words_d(&key.perm) };
            (words, signed_to_w(&key))
        }
    };
    let listed = word_list(words);
    r.line(format!("r = {}", listed.len()));
    r.lines.extend(listed.iter().cloned());
    r.set("count", json!(listed.len()));
    r.set("words", json!(listed));
    if let Some(psi) = psi {
        report_psi(cli, r, &psi, &w);
    }
    Ok(())
}

fn pi_key(s: &str) -> Result<PiKey> {
    s.parse()
}

/// `[w;n]`, with `:` accepted for `;` and the brackets optional.
fn w_key(s: &str) -> Result<WKey> {
    let t = s.trim().replace(':', ";");
    let t = t.as_str();
    if t.starts_with('[') {
        t.parse()
    } else {
        format!("[{t}]").parse()
    }
}

fn composition(s: &str) -> Result<Composition> {
    let t = s.trim();
    if t.starts_with('[') {
        t.parse()
    } else {
        format!("[{t}]").parse()
    }
}

/// Shuffle of two words by first-letter recursion, kept apart from the
/// library's shuffle routines so it can serve as their oracle.
fn shuffle_oracle(u: &[Letter], v: &[Letter], prefix: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(w);
        return;
    }
    prefix.push(u[0]);
    shuffle_oracle(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0]);
    shuffle_oracle(u, &v[1..], prefix, out);
    prefix.pop();
}

fn w_product_oracle(a: &WKey, b: &WKey) -> Result<LinComb<WKey>> {
    let shifted: Vec<Letter> = b.word.letters().iter().map(|&l| l + a.frame as Letter).collect();
    let mut all = Vec::new();
    shuffle_oracle(a.word.letters(), &shifted, &mut Vec::new(), &mut all);
    let frame = a.frame + b.frame;
    all.into_iter()
        .map(|w| Ok((WKey::new(Word::new(w)?, frame)?, pow2(0))))
        .collect()
}

fn w_lin_product(x: &LinComb<WKey>, y: &LinComb<WKey>) -> LinComb<WKey> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&w_product(a, b), &(c * d));
        }
    }
    out
}

/// `Ψ(a·b) = Ψ(a)·Ψ'(b)` for the law the functional declares.
fn psi_product_check(lhs: &LinComb<WKey>, rhs: &LinComb<WKey>, min_frame: usize, psi: &Psi) -> Result<Check> {
    let (acting, min) = match psi.zeta().kind() {
        Kind::Character => (None, 0),
        Kind::Module { acting, min_frame: m } => (Some(Psi::new(&ZetaRegistry::standard(), &acting, Policy::Skip)?), m),
    };
    let name = format!("Ψ_{} respects this product", psi.zeta().name());
    if min_frame < min {
        return Ok(Check {
            name: format!("{name} (not applicable: left frame below {min})"),
            pass: true,
            witness: None,
        });
    }
    Ok(check(name, || {
        let product = w_lin_product(lhs, rhs);
        let l = psi.apply(&product);
        let rr = psi.apply(lhs).mul(&acting.as_ref().unwrap_or(psi).apply(rhs));
        Ok((l != rr).then(|| format!("{l} ≠ {rr}")))
    }))
}

fn agreement<T: PartialEq + Display>(name: &str, main: &T, other: Result<T>) -> Check {
    check(name, || {
        let other = other?;
        Ok((*main != other).then(|| format!("{main} ≠ {other}")))
    })
}

fn product(cli: &Cli, r: &mut Report, kind: ProductKind, lhs: &str, rhs: &str, oracle: bool) -> Result<()> {
    let psi = chosen_psi(cli, r)?;
    match kind {
        ProductKind::Pi => {
            let (u, v) = (pi_key(lhs)?, pi_key(rhs)?);
            cap(cli, format!("{u}·{v}"), u.frame() + v.frame() + 1, CAP_A, "type A")?;
            cap_degree(cli, format!("{u}·{v}"), u.degree() + v.degree())?;
            let p = pi_product(&u, &v)?;
            render(r, "product", &p);
            if oracle {
                r.checks.push(agreement("shuffle oracle agrees", &p, pi_product_oracle(&u, &v)));
            }
            if let Some(psi) = psi {
                report_psi(cli, r, &psi, &linear_pi_to_w(&p));
                r.checks.push(psi_product_check(&pi_to_w(&u), &pi_to_w(&v), u.frame(), &psi)?);
            }
        }
        ProductKind::Word => {
            let (a, b) = (w_key(lhs)?, w_key(rhs)?);
            cap_degree(cli, format!("{a}·{b}"), a.degree() + b.degree())?;
            let p = w_product(&a, &b);
            render(r, "product", &p);
            if oracle {
                r.checks.push(agreement("recursive shuffle agrees", &p, w_product_oracle(&a, &b)));
            }
            if let Some(psi) = psi {
                report_psi(cli, r, &psi, &p);
                r.checks.push(psi_product_check(&LinComb::basis(a.clone()), &LinComb::basis(b), a.frame, &psi)?);
            }
        }
        ProductKind::QsymM => {
            let (a, b) = (composition(lhs)?, composition(rhs)?);
            cap_degree(cli, format!("M{a}·M{b}"), a.weight() + b.weight())?;
            let (x, y) = (QSym::m(a), QSym::m(b));
            let p = x.mul(&y);
            r.line(p.to_string());
            r.set("product", p.to_json(Basis::M)?);
            if oracle {
                let d = x.mul(&y).components().keys().max().copied().unwrap_or(0);
                r.checks.push(check("polynomial multiplication agrees", || {
                    let lhs = expand_polynomial(&p, d);
                    let rhs = multiply_polynomials(&expand_polynomial(&x, d), &expand_polynomial(&y, d));
                    Ok((lhs != rhs).then(|| format!("truncations to {d} variables differ")))
                }));
            }
        }
        ProductKind::Bmod | ProductKind::Dmod => {
            let group = if kind == ProductKind::Bmod { Group::B } else { Group::D };
            let x = signed_key(group, lhs)?;
            let v = pi_key(rhs)?;
            cap(cli, &x, x.frame(), CAP_BD, "type B/D")?;
            cap(cli, &v, v.0.size(), CAP_A, "type A")?;
            cap_degree(cli, format!("{x}·{v}"), x.degree() + v.degree())?;
            let p = module_action(&x, &v)?;
            render(r, "product", &p);
            if oracle {
                let (sx, pv) = (signed_to_w(&x), pi_to_w(&v));
                r.checks.push(agreement(
                    "word-level product agrees",
                    &w_lin_product(&sx, &pv),
                    Ok(linear_extend(&p, signed_to_w)),
                ));
            }
            if let Some(psi) = psi {
                let image = linear_extend(&p, signed_to_w);
                report_psi(cli, r, &psi, &image);
                r.checks.push(psi_product_check(&signed_to_w(&x), &pi_to_w(&v), x.frame(), &psi)?);
            }
        }
    }
    Ok(())
}

fn coalgebra_check(psi: &Psi, x: &LinComb<WKey>) -> Check {
    check(format!("Ψ_{} commutes with the coproduct", psi.zeta().name()), || {
        let lhs = psi.apply_tensor(&linear_extend(x, w_coproduct));
        let rhs = psi.apply(x).coproduct();
        Ok((lhs != rhs).then(|| format!("{lhs} ≠ {rhs}")))
    })
}

fn coproduct(cli: &Cli, r: &mut Report, kind: ProductKind, arg: &str) -> Result<()> {
    let psi = chosen_psi(cli, r)?;
    let w = match kind {
        ProductKind::Pi => {
            let u = pi_key(arg)?;
            cap(cli, &u, u.0.size(), CAP_A, "type A")?;
            render(r, "coproduct", &pi_coproduct(&u));
            Some(pi_to_w(&u))
        }
        ProductKind::Word => {
            let a = w_key(arg)?;
            render(r, "coproduct", &w_coproduct(&a));
            Some(LinComb::basis(a))
        }
        ProductKind::QsymM => {
            let a = composition(arg)?;
            let c: LinComb<Tensor<Composition, Composition>> = m_coproduct(&a);
            render(r, "coproduct", &c);
            None
        }
        ProductKind::Bmod | ProductKind::Dmod => {
            let group = if kind == ProductKind::Bmod { Group::B } else { Group::D };
            let x = signed_key(group, arg)?;
            cap(cli, &x, x.frame(), CAP_BD, "type B/D")?;
            render(r, "coproduct", &signed_coproduct(&x));
            Some(signed_to_w(&x))
        }
    };
    if let (Some(psi), Some(w)) = (psi, w) {
        report_psi(cli, r, &psi, &w);
        r.checks.push(coalgebra_check(&psi, &w));
    }
    Ok(())
}

fn render_expansion(r: &mut Report, prefix: &str, e: &LinComb<Partition>) {
    r.line(e.render_with(|l| format!("{prefix}{l}")));
    r.set("basis", json!(prefix));
    r.set("expansion", e.to_json());
}

fn stanley(cli: &Cli, r: &mut Report, ty: StanleyType, s: &str, basis: OutBasis) -> Result<()> {
    let f = match ty {
        StanleyType::A => {
            let p: Permutation = s.parse()?;
            cap(cli, &p, p.size(), CAP_A, "type A")?;
            cap_degree(cli, &p, p.inversions())?;
            let f = stanley_f(&p)?;
            if let Some(name) = &cli.zeta {
                let psi = chosen_psi(cli, r)?.expect("zeta given");
                let target = match name.as_str() {
                    "gt" | "ge" => Some(f.clone()),
                    "lt" | "le" => Some(stanley_f(&p.inverse())?),
                    _ => None,
                };
                let image = psi.apply(&pi_to_w(&PiKey(p.clone())));
                match target {
                    Some(t) => r.checks.push(agreement(&format!("Ψ_{name} route agrees"), &t, Ok(image))),
                    None => r.warnings.push(format!("Ψ_{name} is not a route to F_π or F_(π⁻¹); ignored")),
                }
            }
            f
        }
        _ => {
            let group = if ty == StanleyType::D { Group::D } else { Group::B };
            let key = signed_key(group, s);
            let perm = signed_key(Group::B, s)?.perm;
            cap(cli, &perm, perm.size(), CAP_BD, "type B/D")?;
            let f = match ty {
                StanleyType::B => stanley_fb(&perm)?,
                StanleyType::C => stanley_fc(&perm)?,
                _ => {
                    if key.is_err() {
                        r.warnings.push(format!("{perm} is not in D{}; F^D vanishes", perm.size()));
                    }
                    stanley_fd(&perm)?
                }
            };
            if let Some(name) = &cli.zeta {
                let letter = match ty {
                    StanleyType::B => "B",
                    StanleyType::C => "C",
                    _ => "D",
                };
                if name == letter {
                    r.checks.push(agreement(&format!("Ψ_{name} route agrees"), &f, stanley_signed_via_psi(name, &perm)));
                } else {
                    r.warnings.push(format!("--zeta {name} does not match type {letter}; ignored"));
                }
            }
            f
        }
    };
    match basis {
        OutBasis::M | OutBasis::L | OutBasis::K => {
            let b = match basis {
                OutBasis::M => Basis::M,
                OutBasis::L => Basis::L,
                _ => Basis::K,
            };
            r.line(f.render(b)?);
            r.set("basis", json!(b.tag()));
            r.set("expansion", f.to_json(b)?);
        }
        OutBasis::Schur => render_expansion(r, "s", &expand_in_schur(&f)?),
        OutBasis::P => render_expansion(r, "P", &expand_in_p(&f)?),
        OutBasis::Q => {
            let q: LinComb<Partition> = expand_in_p(&f)?
                .iter()
                .map(|(l, c)| (l.clone(), c * pow2(-(l.len() as i64))))
                .collect();
            render_expansion(r, "Q", &q);
        }
    }
    Ok(())
}

fn verify(r: &mut Report, suite: &str, max_n: Option<usize>, list: bool) -> Result<()> {
    let registry = SuiteRegistry::standard();
    if list {
        let mut names = Vec::new();
        for s in registry.iter() {
            let n = s.default_max_n().map_or(String::new(), |n| format!(" (default --max-n {n})"));
            r.line(format!("{:<20} {}{n}", s.name(), s.describe()));
            names.push(json!({ "name": s.name(), "describe": s.describe(), "default_max_n": s.default_max_n() }));
        }
        r.set("suites", json!(names));
        return Ok(());
    }
    let suites: Vec<_> = if suite == "all" {
        registry.iter().collect()
    } else {
        vec![registry.get(suite)?]
    };
    for s in suites {
        for mut c in s.run(max_n) {
            c.name = format!("{}: {}", s.name(), c.name);
            r.checks.push(c);
        }
    }
    let ok = r.checks.iter().filter(|c| c.pass).count();
    r.set("passed", json!(ok));
    r.set("total", json!(r.checks.len()));
    Ok(())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidInput(format!("range `{s}`: expected `n` or `a..b`"));
    match s.split_once("..") {
        Some((a, b)) => Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn range_max(r: &RangeInclusive<usize>) -> usize {
    if r.is_empty() {
        0
    } else {
        *r.end()
    }
}

fn export(cli: &Cli, r: &mut Report, dataset: Dataset, left: Option<&str>, right: Option<&str>, to_file: bool) -> Result<()> {
    let default = if dataset == Dataset::SshuffleTable { "3" } else { "2" };
    let lr = parse_range(left.unwrap_or(default))?;
    let rr = parse_range(right.unwrap_or(default))?;
    let name = match dataset {
        Dataset::BmodTable => "bmod-table",
        Dataset::DmodTable => "dmod-table",
        Dataset::SshuffleTable => "sshuffle-table",
    };
    let mut rows = Vec::new();
    let mut text = Vec::new();
    match dataset {
        Dataset::SshuffleTable => {
            cap(cli, "--left", range_max(&lr), CAP_A, "type A")?;
            cap(cli, "--right", range_max(&rr), CAP_A, "type A")?;
            cap(cli, "the product", (range_max(&lr) + range_max(&rr)).saturating_sub(1), CAP_A, "type A")?;
            for a in lr.clone() {
                for b in rr.clone() {
                    for u in Permutation::all(a) {
                        for v in Permutation::all(b) {
                            let set: Vec<String> = s_shuffle(&u, &v)?.iter().map(|p| p.to_string()).collect();
                            text.push(format!("{u} {v}: {}", set.join(" ")));
                            rows.push(json!({ "left": u.to_string(), "right": v.to_string(), "result": set }));
                        }
                    }
                }
            }
        }
        Dataset::BmodTable | Dataset::DmodTable => {
            let group = if dataset == Dataset::BmodTable { Group::B } else { Group::D };
            cap(cli, "--left", range_max(&lr), CAP_BD, "type B/D")?;
            cap(cli, "--right", range_max(&rr), CAP_BD, "module table")?;
            for a in lr.clone() {
                let xs: Vec<SignedKey> = SignedPermutation::all(a)
                    .into_iter()
                    .filter_map(|p| if group == Group::B { Some(SignedKey::b(p)) } else { SignedKey::d(p) })
                    .collect();
                for b in rr.clone() {
                    for x in &xs {
                        for v in Permutation::all(b) {
                            let v = PiKey(v);
                            let terms: Vec<String> = module_action(x, &v)?.keys().map(|k| k.to_string()).collect();
                            text.push(format!("{x}·{v} = {}", terms.join(" + ")));
                            rows.push(json!({ "left": x.to_string(), "right": v.to_string(), "result": terms }));
                        }
                    }
                }
            }
        }
    }
    if to_file {
        r.line(format!("{name}: {} rows", rows.len()));
    } else {
        r.lines.extend(text);
    }
    r.set("dataset", json!(name));
    r.set("left", json!(format!("{}..{}", lr.start(), lr.end())));
    r.set("right", json!(format!("{}..{}", rr.start(), rr.end())));
    r.set("rows", Value::Array(rows));
    Ok(())
}

fn families(cli: &Cli, r: &mut Report, family: Family, n: usize, m: Option<usize>) -> Result<()> {
    cap(cli, "the family", n, 9, "family")?;
    let (label, set) = match family {
        Family::A => (format!("𝒜({n})"), gen_a_set(n)?),
        Family::B => {
            let m = m.ok_or_else(|| Error::InvalidInput("ℬ(m,n) needs --m".into()))?;
            (format!("ℬ({m},{n})"), gen_b_set(m, n)?)
        }
    };
    let counted = n <= CAP_A || cli.force;
    if !counted {
        r.warnings.push(format!("reduced-word counts skipped above n = {CAP_A}; pass --force"));
    }
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for p in &set {
        if counted {
            let c = count_reduced_words_a(p);
            r.line(format!("{p} {c}"));
            rows.push(json!({ "perm": p.to_string(), "r": c.to_string() }));
            counts.push(c);
        } else {
            r.line(p.to_string());
            rows.push(json!({ "perm": p.to_string() }));
        }
    }
    r.line(format!("|{label}| = {}", set.len()));
    r.set("family", json!(label));
    r.set("size", json!(set.len()));
    r.set("members", Value::Array(rows));
    if counted {
        let total = counts.into_iter().reduce(|a, b| a + b).unwrap_or_default();
        r.line(format!("Σ r = {total}"));
        r.set("sum_r", json!(total.to_string()));
    }
    Ok(())
}
