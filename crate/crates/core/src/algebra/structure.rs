use std::fmt;
use std::hash::Hash;

use num_traits::{One, Zero};

use super::{LinComb, Rational, Tensor, Tensor3};

/// A graded connected bialgebra presented on a basis.
///
/// Implementors supply the basis-level unit, product and coproduct; the
/// linear extensions and the axiom checks are provided.
pub trait Bialgebra {
    type Basis: Ord + Clone + Hash + fmt::Debug + fmt::Display;

    fn unit(&self) -> Self::Basis;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct_basis(&self, b: &Self::Basis) -> LinComb<Tensor<Self::Basis>>;

    fn counit_basis(&self, b: &Self::Basis) -> Rational {
        if *b == self.unit() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn one(&self) -> LinComb<Self::Basis> {
        LinComb::basis(self.unit())
    }

    fn mul(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.bilinear(y, |a, b| self.mul_basis(a, b))
    }

    fn coproduct(&self, x: &LinComb<Self::Basis>) -> LinComb<Tensor<Self::Basis>> {
        x.flat_map(|b| self.coproduct_basis(b))
    }

    fn counit(&self, x: &LinComb<Self::Basis>) -> Rational {
        x.eval(|b| self.counit_basis(b))
    }

    /// Componentwise product in `H ⊗ H`.
    fn tensor_mul(
        &self,
        x: &LinComb<Tensor<Self::Basis>>,
        y: &LinComb<Tensor<Self::Basis>>,
    ) -> LinComb<Tensor<Self::Basis>> {
        x.bilinear(y, |Tensor(a1, a2), Tensor(b1, b2)| {
            self.mul_basis(a1, b1).bilinear(&self.mul_basis(a2, b2), |l, r| {
                LinComb::basis(Tensor(l.clone(), r.clone()))
            })
        })
    }

    /// `(Δ ⊗ id)Δ(b)`.
    fn left_iterated_coproduct(&self, b: &Self::Basis) -> LinComb<Tensor3<Self::Basis>> {
        let mut out = LinComb::zero();
        for (Tensor(x, y), c) in self.coproduct_basis(b).iter() {
            for (Tensor(x1, x2), c2) in self.coproduct_basis(x).iter() {
                out.add_term(Tensor3(x1.clone(), x2.clone(), y.clone()), c * c2);
            }
        }
        out
    }

    /// `(id ⊗ Δ)Δ(b)`.
    fn right_iterated_coproduct(&self, b: &Self::Basis) -> LinComb<Tensor3<Self::Basis>> {
        let mut out = LinComb::zero();
        for (Tensor(x, y), c) in self.coproduct_basis(b).iter() {
            for (Tensor(y1, y2), c2) in self.coproduct_basis(y).iter() {
                out.add_term(Tensor3(x.clone(), y1.clone(), y2.clone()), c * c2);
            }
        }
        out
    }

    fn is_coassociative_on(&self, b: &Self::Basis) -> bool {
        self.left_iterated_coproduct(b) == self.right_iterated_coproduct(b)
    }

    /// `(ε ⊗ id)Δ(b) = b = (id ⊗ ε)Δ(b)`.
    fn satisfies_counit_on(&self, b: &Self::Basis) -> bool {
        let delta = self.coproduct_basis(b);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (Tensor(x, y), c) in delta.iter() {
            left.add_term(y.clone(), c * self.counit_basis(x));
            right.add_term(x.clone(), c * self.counit_basis(y));
        }
        let expected = LinComb::basis(b.clone());
        left == expected && right == expected
    }

    /// `Δ(ab) = Δ(a)Δ(b)`.
    fn coproduct_is_multiplicative_on(&self, a: &Self::Basis, b: &Self::Basis) -> bool {
        let lhs = self.coproduct(&self.mul_basis(a, b));
        let rhs = self.tensor_mul(&self.coproduct_basis(a), &self.coproduct_basis(b));
        lhs == rhs
    }
}

/// A bialgebra with an antipode.
pub trait HopfAlgebra: Bialgebra {
    fn antipode_basis(&self, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn antipode(&self, x: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.flat_map(|b| self.antipode_basis(b))
    }

    /// `m(S ⊗ id)Δ(b)`.
    fn s_star_id(&self, b: &Self::Basis) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (Tensor(x, y), c) in self.coproduct_basis(b).iter() {
            out.add_scaled(&self.mul(&self.antipode_basis(x), &LinComb::basis(y.clone())), c);
        }
        out
    }

    /// `m(id ⊗ S)Δ(b)`.
    fn id_star_s(&self, b: &Self::Basis) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (Tensor(x, y), c) in self.coproduct_basis(b).iter() {
            out.add_scaled(&self.mul(&LinComb::basis(x.clone()), &self.antipode_basis(y)), c);
        }
        out
    }

    /// `S * id = id * S = unit ∘ ε` on `b`.
    fn antipode_law_holds_on(&self, b: &Self::Basis) -> bool {
        let expected = self.one().scale(&self.counit_basis(b));
        self.s_star_id(b) == expected && self.id_star_s(b) == expected
    }
}
