//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;

use cb_core::verify::{Check, SuiteRegistry};

const CRITERIA: [(&str, &[(&str, Option<usize>)]); 14] = [
    ("family sizes |𝒜(n)|, |ℬ(m,n)| for n ≤ 9", &[("family-sizes", Some(9))]),
    ("worked reduced-word sums over 𝒜(5) and ℬ(3,5)", &[("a5-sum", None)]),
    ("Σ_𝒜 r = Σ_ℬ r and N(p,q) for n ≤ 7", &[("middle-sums", Some(7)), ("npq-sums", Some(7))]),
    ("product equals the shuffle oracle for m+n ≤ 6, listed 𝒮⧢ sets", &[("product-oracle", Some(6))]),
    ("bialgebra laws on Π", &[("pi-bialgebra", Some(5))]),
    ("flattening bijection on S5 and the 231645 instance", &[("flatten-bijection", Some(5))]),
    ("321-avoiding product rule on S4 × S4", &[("fc-product", Some(4))]),
    ("Ψ closed forms for ℓ(w) ≤ 6, letters ≤ 4; K_(2,2)", &[("psi-fast", Some(6))]),
    ("F_π symmetric, Schur positive, ω-twisted by inversion on S5", &[("stanley-a", Some(5))]),
    ("product formula and Schur P identities for n ≤ 6", &[("product-formula", Some(6)), ("p42", None)]),
    ("eight displayed B/D actions", &[("bd-actions", None)]),
    ("F^B, F^C, F^D relations and positivity on B3, D3", &[("stanley-bcd", Some(3))]),
    ("B/D length formulas against Cayley distance on B3, D4", &[("lengths-bd", Some(3))]),
    ("counting character multiplicativity", &[("counting-character", Some(4))]),
];

fn main() -> ExitCode {
    let registry = SuiteRegistry::standard();
    let mut failed = 0;
    for (i, (title, suites)) in CRITERIA.iter().enumerate() {
        let checks: Vec<Check> = suites
            .iter()
            .flat_map(|&(name, n)| registry.get(name).expect("registered suite").run(n))
            .collect();
        let bad: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
        let tag = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {title} ({}/{} checks)", i + 1, checks.len() - bad.len(), checks.len());
        for c in &bad {
            println!("       {}: {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
        failed += usize::from(!bad.is_empty());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
