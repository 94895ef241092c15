use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A finite formal sum `Σ c_b · b` with exact rational coefficients.
///
/// Zero coefficients are never stored, and terms are kept in the basis
/// type's canonical order, so two combinations are equal exactly when they
/// have the same terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
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

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Adds `c · b` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `scale · other` in place.
    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c * scale);
        }
    }

    /// `self + scale · other`.
    pub fn combine(&self, other: &Self, scale: &Rational) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, scale);
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * s)).collect(),
        }
    }

    /// Linear extension of a basis-level map.
    pub fn flat_map<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Linear extension of a basis-level map that may fail.
    pub fn try_flat_map<C, F>(&self, mut f: F) -> Result<LinComb<C>>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<LinComb<C>>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b)?, c);
        }
        Ok(out)
    }

    /// Relabels basis elements; coefficients of colliding images add up.
    pub fn map_basis<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: FnMut(&B) -> bool>(&self, mut keep: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of a basis-level product.
    pub fn bilinear<C, D, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in other.iter() {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Linear functional evaluation `Σ c_b · f(b)`.
    pub fn eval<F: FnMut(&B) -> Rational>(&self, mut f: F) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (b, c)| acc + c * f(b))
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord + Clone> Add<&'a LinComb<B>> for &'a LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &'a LinComb<B>) -> LinComb<B> {
        self.combine(rhs, &Rational::one())
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: LinComb<B>) -> LinComb<B> {
        &self + &rhs
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl<'a, B: Ord + Clone> Sub<&'a LinComb<B>> for &'a LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &'a LinComb<B>) -> LinComb<B> {
        self.combine(rhs, &-Rational::one())
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: LinComb<B>) -> LinComb<B> {
        &self - &rhs
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&-Rational::one())
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -&self
    }
}

impl<B: Ord + Clone> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elementary tensor `left ⊗ right`. Ordered componentwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<B>(pub B, pub B);

impl<B: fmt::Display> fmt::Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

/// Threefold tensor, the codomain of iterated coproducts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor3<B>(pub B, pub B, pub B);

impl<B: fmt::Display> fmt::Display for Tensor3<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {} (x) {}", self.0, self.1, self.2)
    }
}

impl<B: Ord + Clone> LinComb<Tensor<B>> {
    /// `(f ⊗ g)` applied to every elementary tensor.
    pub fn map_tensor<C, F, G>(&self, mut f: F, mut g: G) -> LinComb<Tensor<C>>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
        G: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (Tensor(a, b), c) in self.iter() {
            let fa = f(a);
            let gb = g(b);
            for (x, cx) in fa.iter() {
                for (y, cy) in gb.iter() {
                    out.add_term(Tensor(x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }
}

/// Bilinear extension of a basis pairing. The rule returns `None` for basis
/// pairs it does not cover, which is reported as an error naming the pair.
pub fn pair_eval<B1, B2, F>(x: &LinComb<B1>, y: &LinComb<B2>, mut rule: F) -> Result<Rational>
where
    B1: Ord + Clone + fmt::Display,
    B2: Ord + Clone + fmt::Display,
    F: FnMut(&B1, &B2) -> Option<Rational>,
{
    let mut total = Rational::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let v = rule(a, b).ok_or_else(|| Error::UndefinedPairing {
                left: a.to_string(),
                right: b.to_string(),
            })?;
            total += ca * cb * v;
        }
    }
    Ok(total)
}

/// Kronecker pairing `⟨u, v*⟩ = δ_{u,v}`.
pub fn kronecker<B: PartialEq>(a: &B, b: &B) -> Option<Rational> {
    Some(if a == b { Rational::one() } else { Rational::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    fn x() -> LinComb<&'static str> {
        LinComb::basis("x")
    }

    #[test]
    fn combine_cancels_to_empty() {
        let a = x().scale(&qi(2));
        let b = x().scale(&qi(-2));
        assert!(a.combine(&b, &qi(1)).is_zero());
    }

    #[test]
    fn combine_distinct_basis() {
        let s = x().combine(&LinComb::basis("y"), &qi(1));
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&"x"), qi(1));
        assert_eq!(s.coeff(&"y"), qi(1));
    }

    #[test]
    fn combine_rational_scale() {
        let a = x().scale(&q(1, 2));
        let b = x().scale(&qi(3));
        assert_eq!(a.combine(&b, &q(1, 3)), x().scale(&q(3, 2)));
    }

    #[test]
    fn scale_by_zero_is_empty() {
        assert!(x().scale(&qi(0)).is_zero());
    }

    #[test]
    fn display_absorbs_sign() {
        let s = x().combine(&LinComb::basis("y"), &q(-1, 2));
        assert_eq!(s.to_string(), "1*x + -1/2*y");
        assert_eq!(LinComb::<&str>::zero().to_string(), "0");
    }

    #[test]
    fn kronecker_pairings() {
        let w = LinComb::basis("w");
        assert_eq!(pair_eval(&w, &w, kronecker).unwrap(), qi(1));
        let v = LinComb::basis("v");
        assert_eq!(pair_eval(&w, &v, kronecker).unwrap(), qi(0));
        let lhs = LinComb::basis("a").scale(&qi(2)) + LinComb::basis("b");
        let rhs = LinComb::basis("a") - LinComb::basis("b");
        assert_eq!(pair_eval(&lhs, &rhs, kronecker).unwrap(), qi(1));
    }

    #[test]
    fn undefined_pair_is_named() {
        let a = LinComb::basis("a");
        let b = LinComb::basis("b");
        let err = pair_eval(&a, &b, |_, _| None).unwrap_err();
        assert_eq!(
            err,
            Error::UndefinedPairing {
                left: "a".into(),
                right: "b".into()
            }
        );
    }
}
