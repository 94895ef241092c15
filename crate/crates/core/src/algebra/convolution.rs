use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use super::{factorial, qi, Bialgebra, LinComb, Rational, Tensor};

/// `(f * g)(x) = m(f ⊗ g)Δ(x)`.
pub fn convolve_at<B, F, G, C>(f: F, g: G, coproduct: C, x: &B) -> Rational
where
    B: Ord + Clone,
    F: Fn(&B) -> Rational,
    G: Fn(&B) -> Rational,
    C: Fn(&B) -> LinComb<Tensor<B>>,
{
    coproduct(x).eval(|Tensor(a, b)| f(a) * g(b))
}

/// The convolution `f * g` as a functional.
pub fn convolve<B, F, G, C>(f: F, g: G, coproduct: C) -> impl Fn(&B) -> Rational
where
    B: Ord + Clone,
    F: Fn(&B) -> Rational,
    G: Fn(&B) -> Rational,
    C: Fn(&B) -> LinComb<Tensor<B>>,
{
    move |x| convolve_at(&f, &g, &coproduct, x)
}

type CoproductCache<B> = RefCell<HashMap<B, LinComb<Tensor<B>>>>;

/// Memoized convolution powers `g^{*k}` of a functional on a bialgebra basis.
pub struct ConvolutionPowers<'a, H: Bialgebra, F> {
    algebra: &'a H,
    base: F,
    coproducts: CoproductCache<H::Basis>,
    memo: RefCell<HashMap<(usize, H::Basis), Rational>>,
}

impl<'a, H, F> ConvolutionPowers<'a, H, F>
where
    H: Bialgebra,
    F: Fn(&H::Basis) -> Rational,
{
    pub fn new(algebra: &'a H, base: F) -> Self {
        Self {
            algebra,
            base,
            coproducts: RefCell::new(HashMap::new()),
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn base(&self, x: &H::Basis) -> Rational {
        (self.base)(x)
    }

    fn coproduct(&self, x: &H::Basis) -> LinComb<Tensor<H::Basis>> {
        if let Some(d) = self.coproducts.borrow().get(x) {
            return d.clone();
        }
        let d = self.algebra.coproduct_basis(x);
        self.coproducts.borrow_mut().insert(x.clone(), d.clone());
        d
    }

    /// `g^{*k}(x)`, with `g^{*0} = ε`.
    pub fn power(&self, k: usize, x: &H::Basis) -> Rational {
        if k == 0 {
            return self.algebra.counit_basis(x);
        }
        if k == 1 {
            return (self.base)(x);
        }
        let key = (k, x.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let v = self
            .coproduct(x)
            .eval(|Tensor(a, b)| self.power(k - 1, a) * (self.base)(b));
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }
}

impl<'a, H, F> ConvolutionPowers<'a, H, F>
where
    H: Bialgebra,
    F: Fn(&H::Basis) -> Rational,
{
    /// `Σ_{k=0}^{max_k} g^{*k}(x) / k!`.
    pub fn exp_at(&self, x: &H::Basis, max_k: usize) -> Rational {
        (0..=max_k).fold(Rational::zero(), |acc, k| acc + self.power(k, x) / factorial(k))
    }

    /// `Σ_{k=1}^{max_k} (-1)^{k+1} g^{*k}(x) / k`, where the base functional
    /// is already `a - ε`.
    pub fn log_at(&self, x: &H::Basis, max_k: usize) -> Rational {
        (1..=max_k).fold(Rational::zero(), |acc, k| {
            let term = self.power(k, x) / qi(k as i64);
            if k % 2 == 1 {
                acc + term
            } else {
                acc - term
            }
        })
    }
}
