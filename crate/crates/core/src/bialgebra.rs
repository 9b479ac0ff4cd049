//! A common interface for the graded bialgebras in this crate, and checkers
//! for the bialgebra axioms on basis elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::linear::{bilinear_extend, int, linear_extend, LinComb, Rational, Tensor};

pub trait Bialgebra {
    type Key: Ord + Clone + fmt::Display;

    fn one(&self) -> Self::Key;
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
    fn coproduct(&self, a: &Self::Key) -> LinComb<Tensor<Self::Key, Self::Key>>;
    fn counit(&self, a: &Self::Key) -> Rational;
    fn degree(&self, a: &Self::Key) -> usize;

    fn mul(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        bilinear_extend(x, y, |a, b| self.product(a, b))
    }

    fn comul(&self, x: &LinComb<Self::Key>) -> LinComb<Tensor<Self::Key, Self::Key>> {
        linear_extend(x, |a| self.coproduct(a))
    }
}

fn violation(law: &str, witness: String) -> Error {
    Error::InternalInconsistency(format!("{law} fails at {witness}"))
}

/// `(ab)c = a(bc)`.
pub fn check_associative<B: Bialgebra>(alg: &B, a: &B::Key, b: &B::Key, c: &B::Key) -> Result<()> {
    let left = alg.mul(&alg.product(a, b), &LinComb::basis(c.clone()));
    let right = alg.mul(&LinComb::basis(a.clone()), &alg.product(b, c));
    if left != right {
        return Err(violation("associativity", format!("({a}, {b}, {c})")));
    }
    Ok(())
}

/// `1·a = a·1 = a`.
pub fn check_unit<B: Bialgebra>(alg: &B, a: &B::Key) -> Result<()> {
    let a1 = LinComb::basis(a.clone());
    if alg.product(&alg.one(), a) != a1 || alg.product(a, &alg.one()) != a1 {
        return Err(violation("unit law", a.to_string()));
    }
    Ok(())
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ`, compared on flattened triples.
pub fn check_coassociative<B: Bialgebra>(alg: &B, a: &B::Key) -> Result<()> {
    let delta = alg.coproduct(a);
    let mut left: LinComb<(B::Key, B::Key, B::Key)> = LinComb::zero();
    let mut right: LinComb<(B::Key, B::Key, B::Key)> = LinComb::zero();
    for (Tensor(x, y), c) in delta.iter() {
        for (Tensor(x1, x2), d) in alg.coproduct(x).iter() {
            left.add_term((x1.clone(), x2.clone(), y.clone()), c * d);
        }
        for (Tensor(y1, y2), d) in alg.coproduct(y).iter() {
            right.add_term((x.clone(), y1.clone(), y2.clone()), c * d);
        }
    }
    if left != right {
        return Err(violation("coassociativity", a.to_string()));
    }
    Ok(())
}

/// `(ε⊗id)Δ = (id⊗ε)Δ = id`.
pub fn check_counit<B: Bialgebra>(alg: &B, a: &B::Key) -> Result<()> {
    let delta = alg.coproduct(a);
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for (Tensor(x, y), c) in delta.iter() {
        left.add_term(y.clone(), c * alg.counit(x));
        right.add_term(x.clone(), c * alg.counit(y));
    }
    let a1 = LinComb::basis(a.clone());
    if left != a1 || right != a1 {
        return Err(violation("counit law", a.to_string()));
    }
    Ok(())
}

/// `Δ(ab) = Δ(a)Δ(b)` with the componentwise product on the tensor square.
pub fn check_compatible<B: Bialgebra>(alg: &B, a: &B::Key, b: &B::Key) -> Result<()> {
    let left = alg.comul(&alg.product(a, b));
    let mut right = LinComb::zero();
    for (Tensor(a1, a2), c) in alg.coproduct(a).iter() {
        for (Tensor(b1, b2), d) in alg.coproduct(b).iter() {
            let first = alg.product(a1, b1);
            let second = alg.product(a2, b2);
            let coeff = c * d;
            for (x, e) in first.iter() {
                for (y, f) in second.iter() {
                    right.add_term(Tensor(x.clone(), y.clone()), &coeff * e * f);
                }
            }
        }
    }
    if left != right {
        return Err(violation("bialgebra compatibility", format!("({a}, {b})")));
    }
    Ok(())
}

/// Every term of `ab` has degree `deg a + deg b`, and every coproduct term of
/// `a` splits its degree.
pub fn check_graded<B: Bialgebra>(alg: &B, a: &B::Key, b: &B::Key) -> Result<()> {
    let d = alg.degree(a) + alg.degree(b);
    if alg.product(a, b).keys().any(|k| alg.degree(k) != d) {
        return Err(violation("grading of the product", format!("({a}, {b})")));
    }
    if alg
        .coproduct(a)
        .keys()
        .any(|Tensor(x, y)| alg.degree(x) + alg.degree(y) != alg.degree(a))
    {
        return Err(violation("grading of the coproduct", a.to_string()));
    }
    Ok(())
}

/// Counit that is 1 on degree zero keys.
pub(crate) fn degree_zero_counit(deg: usize) -> Rational {
    if deg == 0 {
        int(1)
    } else {
        int(0)
    }
}
