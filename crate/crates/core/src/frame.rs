//! Exact truncations of the universal singular frame: the coefficients
//! `1 / (k_1 (k_1 + k_2) … (k_1 + … + k_n))`, the functional `α^U` on
//! labeled forests, exp/log of forest functionals, `β^U = log α^U`, and the
//! Hall polynomial representation of `Σ_w α^U_w w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, qi, ConvolutionPowers, LinComb, Rational};
use crate::error::{Error, Result};
use crate::lyndon::{hall_polynomial, hall_trees, HallTree, Orientation};
use crate::tree_hopf::CkHopf;
use crate::trees::{labeled_forests, linear_extensions, sym_order, Forest, Tree};
use crate::words::{concat_dual, words_up_to_weight, DualWord, DualWordElement, Word};

/// A polynomial in one variable `x` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UnivariatePoly {
    /// `coeffs[i]` multiplies `x^i`; no trailing zeros.
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `∫_0^x g(s) ds`.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / qi(i as i64 + 1)));
        Self::new(coeffs)
    }

    /// `∫_0^x g(s) s^{k-1} ds`.
    pub fn integrate_weighted(&self, k: u32) -> Self {
        let shift = k as usize - 1;
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        UnivariatePoly::new(coeffs).integrate()
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn add(self, other: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        UnivariatePoly::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn mul(self, other: &UnivariatePoly) -> UnivariatePoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UnivariatePoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `1 / Π_j (k_1 + … + k_j)`; the empty word gives 1.
pub fn frame_coefficient(w: &Word) -> Rational {
    let mut partial = 0i64;
    let mut denom = Rational::one();
    for &k in w.letters() {
        partial += k as i64;
        denom *= qi(partial);
    }
    denom.recip()
}

/// `∫_{0 ≤ s_1 ≤ … ≤ s_n ≤ 1} s_1^{k_1 - 1} … s_n^{k_n - 1} ds`.
pub fn iterated_integral(w: &Word) -> Rational {
    w.letters()
        .iter()
        .fold(UnivariatePoly::one(), |g, &k| g.integrate_weighted(k))
        .eval(&Rational::one())
}

/// `α^U(u) = Σ_{w(>)} α^U_{w(>)}` over linear extensions.
pub fn alpha_u(u: &Forest) -> Result<Rational> {
    Ok(linear_extensions(u)?.iter().map(frame_coefficient).sum())
}

/// The polynomial `g_u(x)` with `g_{B+_{f_k}(v)} = ∫_0^x g_v(s) s^{k-1} ds`
/// and `g_{uv} = g_u g_v`.
pub fn alpha_u_poly(u: &Forest) -> Result<UnivariatePoly> {
    fn tree(t: &Tree) -> Result<UnivariatePoly> {
        let k = t.label().ok_or_else(|| Error::UnlabeledVertex(t.to_string()))?;
        let mut g = UnivariatePoly::one();
        for c in t.children() {
            g = &g * &tree(c)?;
        }
        Ok(g.integrate_weighted(k))
    }
    u.trees()
        .iter()
        .try_fold(UnivariatePoly::one(), |acc, t| Ok(&acc * &tree(t)?))
}

/// `α^U(u)` through the integral recursion, evaluated at `x = 1`.
pub fn alpha_u_integral(u: &Forest) -> Result<Rational> {
    Ok(alpha_u_poly(u)?.eval(&Rational::one()))
}

/// A linear functional on labeled forests of weight at most `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestFunctional {
    max_weight: u32,
    values: BTreeMap<Forest, Rational>,
}

impl ForestFunctional {
    /// Tabulates `f` on every labeled forest of weight ≤ `max_weight`.
    pub fn from_fn(max_weight: u32, mut f: impl FnMut(&Forest) -> Result<Rational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for n in 0..=max_weight {
            for u in labeled_forests(n) {
                let v = f(&u)?;
                values.insert(u, v);
            }
        }
        Ok(ForestFunctional { max_weight, values })
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn get(&self, u: &Forest) -> Option<&Rational> {
        self.values.get(u)
    }

    /// The value on `u`; forests out of range are an error.
    pub fn at(&self, u: &Forest) -> Result<Rational> {
        self.values
            .get(u)
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("forest {u} outside weight {}", self.max_weight)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.values.iter()
    }

    fn unit_value(&self) -> Rational {
        self.values
            .get(&Forest::empty())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn map_powers(
        &self,
        base: impl Fn(&Forest) -> Rational,
        finish: impl Fn(&ConvolutionPowers<'_, CkHopf, &dyn Fn(&Forest) -> Rational>, &Forest) -> Rational,
    ) -> Self {
        let h = CkHopf::poset();
        let base: &dyn Fn(&Forest) -> Rational = &base;
        let powers = ConvolutionPowers::new(&h, base);
        let values = self.values.keys().map(|u| (u.clone(), finish(&powers, u))).collect();
        ForestFunctional {
            max_weight: self.max_weight,
            values,
        }
    }
}

/// `exp a = Σ_{k=0}^{|u|} a^{*k} / k!`; requires `a(𝕀) = 0`.
pub fn forest_exp(a: &ForestFunctional) -> Result<ForestFunctional> {
    let unit = a.unit_value();
    if !unit.is_zero() {
        return Err(Error::UnitValue {
            expected: "0".into(),
            found: unit.to_string(),
        });
    }
    let base = |u: &Forest| a.values.get(u).cloned().unwrap_or_else(Rational::zero);
    Ok(a.map_powers(base, |p, u| p.exp_at(u, u.size())))
}

/// `log a = Σ_{k=1}^{|u|} (-1)^{k+1} (a - ε)^{*k} / k`; requires `a(𝕀) = 1`.
pub fn forest_log(a: &ForestFunctional) -> Result<ForestFunctional> {
    let unit = a.unit_value();
    if !unit.is_one() {
        return Err(Error::UnitValue {
            expected: "1".into(),
            found: unit.to_string(),
        });
    }
    let base = |u: &Forest| {
        if u.is_empty() {
            Rational::zero()
        } else {
            a.values.get(u).cloned().unwrap_or_else(Rational::zero)
        }
    };
    Ok(a.map_powers(base, |p, u| p.log_at(u, u.size())))
}

/// `α^U` tabulated up to weight `max_weight`.
pub fn alpha_u_functional(max_weight: u32) -> ForestFunctional {
    ForestFunctional::from_fn(max_weight, alpha_u).expect("labeled forests have labeled vertices")
}

/// `β^U = log α^U` up to weight `max_weight`.
pub fn beta_u(max_weight: u32) -> ForestFunctional {
    forest_log(&alpha_u_functional(max_weight)).expect("α^U(𝕀) = 1")
}

/// One term `α^U_w e_{-k_1} … e_{-k_n} v^{Σ k_j} z^{-n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameTerm {
    pub word: Word,
    pub coeff: Rational,
    pub v_pow: u32,
    pub z_pow: i64,
}

/// The frame series truncated at weight `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSeries {
    pub max_weight: u32,
    pub terms: Vec<FrameTerm>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<u32>,
    coeff: String,
    v_pow: u32,
    z_pow: i64,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    max_weight: u32,
    terms: Vec<TermJson>,
}

impl FrameSeries {
    pub fn to_json(&self) -> String {
        let s = SeriesJson {
            max_weight: self.max_weight,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    word: t.word.letters().to_vec(),
                    coeff: t.coeff.to_string(),
                    v_pow: t.v_pow,
                    z_pow: t.z_pow,
                })
                .collect(),
        };
        serde_json::to_string(&s).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<FrameSeries> {
        let s: SeriesJson = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        let terms = s
            .terms
            .into_iter()
            .map(|t| {
                let coeff = t.coeff.parse::<Rational>().map_err(|e| Error::Invalid(e.to_string()))?;
                Ok(FrameTerm {
                    word: Word::new(t.word),
                    coeff,
                    v_pow: t.v_pow,
                    z_pow: t.z_pow,
                })
            })
            .collect::<Result<_>>()?;
        Ok(FrameSeries {
            max_weight: s.max_weight,
            terms,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.terms {
            out.push_str(&format!("{} * ", t.coeff));
            for k in t.word.letters() {
                out.push_str(&format!("e(-{k})"));
            }
            out.push_str(&format!(" v^{} z^{}\n", t.v_pow, t.z_pow));
        }
        out
    }
}

/// All nonempty words of weight ≤ N with their frame coefficients.
pub fn frame_series(max_weight: u32) -> FrameSeries {
    let terms = words_up_to_weight(max_weight)
        .into_iter()
        .filter(|w| !w.is_empty())
        .map(|w| FrameTerm {
            coeff: frame_coefficient(&w),
            v_pow: w.weight(),
            z_pow: -(w.len() as i64),
            word: w,
        })
        .collect();
    FrameSeries { max_weight, terms }
}

/// `Σ β^U(t) t` over Hall trees of weight ≤ N.
pub fn hall_representation(max_weight: u32) -> Vec<(HallTree, Rational)> {
    let beta = beta_u(max_weight);
    hall_trees(max_weight)
        .into_iter()
        .map(|t| {
            let c = beta
                .at(&Forest::single(t.tree.clone()))
                .expect("Hall trees are in range");
            (t, c)
        })
        .collect()
}

/// A word where the two sides of the Hall identity differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallIdentityMismatch {
    pub word: Word,
    pub frame: Rational,
    pub hall: Rational,
}

#[derive(Clone, Debug)]
pub struct HallIdentityReport {
    pub max_weight: u32,
    pub orientation: Orientation,
    pub weighting: HallWeighting,
    pub mismatches: Vec<HallIdentityMismatch>,
}

impl HallIdentityReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn truncate_dual(x: &DualWordElement, max_weight: u32) -> DualWordElement {
    x.filter(|d| d.0.weight() <= max_weight)
}

/// How `β^U(t)` enters the Hall exponential.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HallWeighting {
    /// `Σ_t β^U(t) E(t)`.
    #[default]
    Literal,
    /// `Σ_t β^U(t) / |sym(t)| E(t)`. Since `⟨E(t), π(t)⟩ = |sym(t)|`, this is
    /// the coefficient of `E(t)` in `log Σ_w α^U_w w`.
    Symmetry,
}

/// `exp(Σ_t β^U(t) E(t))` in the concatenation algebra, truncated at weight N.
pub fn hall_exponential(max_weight: u32, orientation: Orientation, weighting: HallWeighting) -> DualWordElement {
    let x: DualWordElement = hall_representation(max_weight)
        .iter()
        .fold(LinComb::zero(), |acc, (t, c)| {
            let c = match weighting {
                HallWeighting::Literal => c.clone(),
                HallWeighting::Symmetry => c / qi(sym_order(&t.tree) as i64),
            };
            acc.combine(&hall_polynomial(t, orientation), &c)
        });
    let mut out = LinComb::basis(DualWord(Word::empty()));
    let mut power = out.clone();
    for k in 1..=max_weight as usize {
        power = truncate_dual(&concat_dual(&power, &x), max_weight);
        out.add_scaled(&power, &factorial(k).recip());
    }
    out
}

/// Compares `Σ_w α^U_w w` with `exp(Σ_t β^U(t) E(t))` word by word.
pub fn hall_identity_check(max_weight: u32, orientation: Orientation) -> HallIdentityReport {
    hall_identity_check_with(max_weight, orientation, HallWeighting::Literal)
}

pub fn hall_identity_check_with(
    max_weight: u32,
    orientation: Orientation,
    weighting: HallWeighting,
) -> HallIdentityReport {
    let hall = hall_exponential(max_weight, orientation, weighting);
    let mismatches = words_up_to_weight(max_weight)
        .into_iter()
        .filter_map(|w| {
            let frame = frame_coefficient(&w);
            let h = hall.coeff(&DualWord(w.clone()));
            (frame != h).then_some(HallIdentityMismatch {
                word: w,
                frame,
                hall: h,
            })
        })
        .collect();
    HallIdentityReport {
        max_weight,
        orientation,
        weighting,
        mismatches,
    }
}
