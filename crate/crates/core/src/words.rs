//! Shuffle and quasi-shuffle Hopf algebras on the graded alphabet
//! `{f_1, f_2, ...}` and their graded dual, the concatenation algebra on
//! the letters `e_{-k} ↔ f_k*`.
//!
//! A letter `f_k` is stored as the integer `k`, which is also its weight.
//! `H_U` is the instance `(words, shuffle, ZERO pairing)`; `U(L_U)` is the
//! concatenation dual, whose letters are printed as starred words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{factorial, q, qi, Bialgebra, HopfAlgebra, LinComb, Rational, Tensor};
use crate::error::{Error, Result};

/// A finite word in the letters `f_k`, `k ≥ 1`. The empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(letters.iter().all(|&k| k > 0), "letters are positive");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(k: u32) -> Self {
        Word::new(vec![k])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, k: u32) -> Word {
        let mut v = self.0.clone();
        v.push(k);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Dual basis element `w*`.
    pub fn dual(&self) -> DualWord {
        DualWord(self.clone())
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word::new(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "f{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        crate::parse::parse_word(s)
    }
}

/// Dual basis element `w*` of the concatenation algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualWord(pub Word);

impl DualWord {
    pub fn word(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for DualWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", self.0)
    }
}

impl fmt::Debug for DualWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of a word algebra.
pub type WordElement = LinComb<Word>;
/// Element of the concatenation dual.
pub type DualWordElement = LinComb<DualWord>;

/// Commutative merge rule on letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum HoffmanPairing {
    /// `[a, b] = 0`: the quasi-shuffle is the plain shuffle.
    #[default]
    Zero,
    /// `[f_a, f_b] = f_{a+b}`: the quasi-shuffle is the QSYM product.
    Additive,
}

impl HoffmanPairing {
    pub fn bracket(self, a: u32, b: u32) -> Option<u32> {
        match self {
            HoffmanPairing::Zero => None,
            HoffmanPairing::Additive => Some(a + b),
        }
    }

    /// Iterated bracket `[a_1, ..., a_n] = [a_1, [a_2, ...]]`; `None` is zero.
    pub fn bracket_seq(self, letters: &[u32]) -> Option<u32> {
        let (&last, rest) = letters.split_last()?;
        rest.iter().rev().try_fold(last, |acc, &a| self.bracket(a, acc))
    }
}

impl fmt::Display for HoffmanPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HoffmanPairing::Zero => f.write_str("ZERO"),
            HoffmanPairing::Additive => f.write_str("ADDITIVE"),
        }
    }
}

/// All words of weight exactly `n`, in canonical order.
pub fn words_of_weight(n: u32) -> Vec<Word> {
    let mut out: Vec<Word> = compositions(n as usize)
        .into_iter()
        .map(|c| Word::new(c.into_iter().map(|k| k as u32).collect()))
        .collect();
    out.sort();
    out
}

/// All words of weight at most `n`, including the empty word.
pub fn words_up_to_weight(n: u32) -> Vec<Word> {
    (0..=n).flat_map(words_of_weight).collect()
}

/// Compositions of `n` (ordered sequences of positive integers summing to `n`).
/// `compositions(0)` is the single empty composition.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Shuffle product, summed over the `(m, n)`-shuffles: each subset of `m`
/// positions out of `m + n` receives the letters of `x` in order.
pub fn shuffle(x: &Word, y: &Word) -> WordElement {
    let (m, n) = (x.len(), y.len());
    let mut out = LinComb::zero();
    let mut positions = Vec::with_capacity(m);
    fn rec(x: &Word, y: &Word, start: usize, total: usize, positions: &mut Vec<usize>, out: &mut WordElement) {
        if positions.len() == x.len() {
            let mut letters = Vec::with_capacity(total);
            let (mut i, mut j) = (0, 0);
            for p in 0..total {
                if i < positions.len() && positions[i] == p {
                    letters.push(x.0[i]);
                    i += 1;
                } else {
                    letters.push(y.0[j]);
                    j += 1;
                }
            }
            out.add_term(Word(letters), Rational::one());
            return;
        }
        let remaining = x.len() - positions.len();
        for p in start..=total - remaining {
            positions.push(p);
            rec(x, y, p + 1, total, positions, out);
            positions.pop();
        }
    }
    rec(x, y, 0, m + n, &mut positions, &mut out);
    out
}

/// Quasi-shuffle product by the first-letter recursion
/// `aw₁ ⋆ bw₂ = a(w₁ ⋆ bw₂) + b(aw₁ ⋆ w₂) + [a,b](w₁ ⋆ w₂)`.
pub fn quasi_shuffle(x: &Word, y: &Word, p: HoffmanPairing) -> WordElement {
    let mut memo = HashMap::new();
    qsh(&x.0, &y.0, p, &mut memo)
}

fn qsh(x: &[u32], y: &[u32], p: HoffmanPairing, memo: &mut HashMap<(Vec<u32>, Vec<u32>), WordElement>) -> WordElement {
    if x.is_empty() {
        return LinComb::basis(Word(y.to_vec()));
    }
    if y.is_empty() {
        return LinComb::basis(Word(x.to_vec()));
    }
    let key = (x.to_vec(), y.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let prefix = |a: u32, e: &WordElement| -> WordElement {
        e.map_basis(|w| {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(a);
            v.extend_from_slice(&w.0);
            Word(v)
        })
    };
    let (a, b) = (x[0], y[0]);
    let mut out = prefix(a, &qsh(&x[1..], y, p, memo));
    out += &prefix(b, &qsh(x, &y[1..], p, memo));
    if let Some(c) = p.bracket(a, b) {
        out += &prefix(c, &qsh(&x[1..], &y[1..], p, memo));
    }
    memo.insert(key, out.clone());
    out
}

/// Bilinear quasi-shuffle of two elements.
pub fn quasi_shuffle_elements(x: &WordElement, y: &WordElement, p: HoffmanPairing) -> WordElement {
    x.bilinear(y, |a, b| quasi_shuffle(a, b, p))
}

/// Deconcatenation `Δ(w) = Σ_{uv=w} u ⊗ v`.
pub fn deconcat_coproduct(w: &Word) -> LinComb<Tensor<Word>> {
    (0..=w.len())
        .map(|i| (Tensor(w.slice(0, i), w.slice(i, w.len())), Rational::one()))
        .collect()
}

/// `I[w]`: the composition `I` of `|w|` groups consecutive letters and
/// brackets each group. `None` when some bracket vanishes.
pub fn composition_action(parts: &[usize], w: &Word, p: HoffmanPairing) -> Option<Word> {
    debug_assert_eq!(parts.iter().sum::<usize>(), w.len());
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &len in parts {
        out.push(p.bracket_seq(&w.0[start..start + len])?);
        start += len;
    }
    Some(Word(out))
}

/// Antipode by `S(w) = -Σ_{k<n} S(a₁…a_k) ⋆ a_{k+1}…a_n`.
pub fn word_antipode_recursive(w: &Word, p: HoffmanPairing) -> WordElement {
    let mut memo: HashMap<Word, WordElement> = HashMap::new();
    antipode_rec(w, p, &mut memo)
}

fn antipode_rec(w: &Word, p: HoffmanPairing, memo: &mut HashMap<Word, WordElement>) -> WordElement {
    if w.is_empty() {
        return LinComb::basis(Word::empty());
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let n = w.len();
    let mut out = LinComb::zero();
    for k in 0..n {
        let s = antipode_rec(&w.slice(0, k), p, memo);
        let tail = LinComb::basis(w.slice(k, n));
        out.add_scaled(&quasi_shuffle_elements(&s, &tail, p), &-Rational::one());
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Antipode by the closed form `S(w) = (-1)^n Σ_{I ∈ C(n)} I[a_n … a_1]`.
pub fn word_antipode_closed(w: &Word, p: HoffmanPairing) -> WordElement {
    let n = w.len();
    let sign = if n.is_multiple_of(2) { qi(1) } else { qi(-1) };
    let rev = w.reversed();
    let mut out = LinComb::zero();
    for parts in compositions(n) {
        if let Some(v) = composition_action(&parts, &rev, p) {
            out.add_term(v, sign.clone());
        }
    }
    out
}

/// Hoffman exponential `τ(w) = Σ_I 1/(i₁!…i_l!) I[w]`.
pub fn hoffman_tau(w: &Word, p: HoffmanPairing) -> WordElement {
    let mut out = LinComb::zero();
    for parts in compositions(w.len()) {
        if let Some(v) = composition_action(&parts, w, p) {
            let denom = parts.iter().fold(Rational::one(), |acc, &i| acc * factorial(i));
            out.add_term(v, denom.recip());
        }
    }
    out
}

/// Inverse of [`hoffman_tau`]: `ψ(w) = Σ_I (-1)^{|w|-l}/(i₁…i_l) I[w]`.
pub fn hoffman_psi(w: &Word, p: HoffmanPairing) -> WordElement {
    let n = w.len();
    let mut out = LinComb::zero();
    for parts in compositions(n) {
        if let Some(v) = composition_action(&parts, w, p) {
            let l = parts.len();
            let sign = if (n - l).is_multiple_of(2) { 1 } else { -1 };
            let denom: i64 = parts.iter().map(|&i| i as i64).product();
            out.add_term(v, q(sign, denom));
        }
    }
    out
}

/// The word Hopf algebra `(K⟨A⟩, ⋆_p, Δ_deconcat)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WordHopf {
    pub pairing: HoffmanPairing,
}

impl WordHopf {
    pub fn shuffle() -> Self {
        Self {
            pairing: HoffmanPairing::Zero,
        }
    }

    pub fn quasi_shuffle() -> Self {
        Self {
            pairing: HoffmanPairing::Additive,
        }
    }
}

impl Bialgebra for WordHopf {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn mul_basis(&self, a: &Word, b: &Word) -> WordElement {
        quasi_shuffle(a, b, self.pairing)
    }

    fn coproduct_basis(&self, b: &Word) -> LinComb<Tensor<Word>> {
        deconcat_coproduct(b)
    }
}

impl HopfAlgebra for WordHopf {
    fn antipode_basis(&self, b: &Word) -> WordElement {
        word_antipode_recursive(b, self.pairing)
    }
}

/// Concatenation product of dual elements, `conc(u* ⊗ v*) = (uv)*`.
pub fn concat_dual(x: &DualWordElement, y: &DualWordElement) -> DualWordElement {
    x.bilinear(y, |a, b| LinComb::basis(a.0.concat(&b.0).dual()))
}

/// `δ(w*) = Σ_{u,v} ⟨u ⋆ v, w*⟩ u* ⊗ v*`, by scanning every pair of words
/// whose weights add up to the weight of `w`.
pub fn dual_delta(w: &Word, p: HoffmanPairing) -> LinComb<Tensor<DualWord>> {
    let n = w.weight();
    let mut out = LinComb::zero();
    for k in 0..=n {
        let lefts = words_of_weight(k);
        let rights = words_of_weight(n - k);
        for u in &lefts {
            for v in &rights {
                if p == HoffmanPairing::Zero && u.len() + v.len() != w.len() {
                    continue;
                }
                let c = quasi_shuffle(u, v, p).coeff(w);
                out.add_term(Tensor(u.dual(), v.dual()), c);
            }
        }
    }
    out
}

/// The graded dual Hopf algebra `(K⟨A⟩*, conc, δ_p)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConcatDual {
    pub pairing: HoffmanPairing,
}

impl Bialgebra for ConcatDual {
    type Basis = DualWord;

    fn unit(&self) -> DualWord {
        Word::empty().dual()
    }

    fn mul_basis(&self, a: &DualWord, b: &DualWord) -> DualWordElement {
        LinComb::basis(a.0.concat(&b.0).dual())
    }

    fn coproduct_basis(&self, b: &DualWord) -> LinComb<Tensor<DualWord>> {
        dual_delta(&b.0, self.pairing)
    }
}

/// Natural pairing between words and dual words.
pub fn word_pairing(x: &WordElement, y: &DualWordElement) -> Rational {
    x.iter()
        .map(|(w, c)| c * y.coeff(&w.dual()))
        .fold(Rational::zero(), |a, b| a + b)
}

fn require_additive(p: HoffmanPairing, what: &'static str) -> Result<()> {
    match p {
        HoffmanPairing::Additive => Ok(()),
        HoffmanPairing::Zero => Err(Error::DegeneratePairing(what)),
    }
}

/// Words `a₁…a_n` whose full bracket equals the letter `k`.
fn bracket_preimages(k: u32, p: HoffmanPairing) -> Vec<Word> {
    words_of_weight(k)
        .into_iter()
        .filter(|w| p.bracket_seq(w.letters()) == Some(k))
        .collect()
}

fn letterwise_dual_map<F>(u: &DualWordElement, p: HoffmanPairing, coeff: F) -> DualWordElement
where
    F: Fn(usize) -> Rational,
{
    let mut letter_images: HashMap<u32, DualWordElement> = HashMap::new();
    u.flat_map(|dw| {
        let mut acc: DualWordElement = LinComb::basis(Word::empty().dual());
        for &k in dw.0.letters() {
            let img = letter_images
                .entry(k)
                .or_insert_with(|| {
                    bracket_preimages(k, p)
                        .into_iter()
                        .map(|w| {
                            let c = coeff(w.len());
                            (w.dual(), c)
                        })
                        .collect()
                })
                .clone();
            acc = concat_dual(&acc, &img);
        }
        acc
    })
}

/// Dual Hoffman map `τ*(u*) = Σ_n 1/n! Σ_{[a₁…a_n]=u} (a₁…a_n)*`, extended
/// multiplicatively over concatenation.
pub fn tau_star(u: &DualWordElement, p: HoffmanPairing) -> Result<DualWordElement> {
    require_additive(p, "tau_star")?;
    Ok(letterwise_dual_map(u, p, |n| factorial(n).recip()))
}

/// Inverse of [`tau_star`]: coefficients `(-1)^{n-1}/n`.
pub fn psi_star(u: &DualWordElement, p: HoffmanPairing) -> Result<DualWordElement> {
    require_additive(p, "psi_star")?;
    Ok(letterwise_dual_map(u, p, |n| {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        q(sign, n as i64)
    }))
}

/// Lie bracket `[x, y] = xy - yx` in the concatenation algebra.
pub fn lie_bracket(x: &DualWordElement, y: &DualWordElement) -> DualWordElement {
    concat_dual(x, y) - concat_dual(y, x)
}

/// Primitivity under the shuffle-dual coproduct: `δ(x) = x ⊗ 1 + 1 ⊗ x`.
pub fn is_lie_polynomial(x: &DualWordElement) -> bool {
    let one = Word::empty().dual();
    let delta = x.flat_map(|w| dual_delta(&w.0, HoffmanPairing::Zero));
    let mut expected = LinComb::zero();
    for (w, c) in x.iter() {
        expected.add_term(Tensor(w.clone(), one.clone()), c.clone());
        expected.add_term(Tensor(one.clone(), w.clone()), c.clone());
    }
    delta == expected
}

/// The generator `e_{-k}` of `U(L_U)`, i.e. the dual letter `f_k*`.
pub fn e_gen(k: u32) -> DualWordElement {
    LinComb::basis(Word::letter(k).dual())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec())
    }

    fn lc(terms: &[(&[u32], Rational)]) -> WordElement {
        terms.iter().map(|(v, c)| (w(v), c.clone())).collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&w(&[1]), &w(&[2])), lc(&[(&[1, 2], qi(1)), (&[2, 1], qi(1))]));
        assert_eq!(
            shuffle(&w(&[1]), &w(&[2, 1])),
            lc(&[(&[1, 2, 1], qi(1)), (&[2, 1, 1], qi(2))])
        );
        assert_eq!(shuffle(&Word::empty(), &w(&[3, 1])), LinComb::basis(w(&[3, 1])));
    }

    #[test]
    fn quasi_shuffle_examples() {
        let a = HoffmanPairing::Additive;
        assert_eq!(
            quasi_shuffle(&w(&[1]), &w(&[1]), a),
            lc(&[(&[1, 1], qi(2)), (&[2], qi(1))])
        );
        assert_eq!(
            quasi_shuffle(&w(&[1]), &w(&[1]), HoffmanPairing::Zero),
            lc(&[(&[1, 1], qi(2))])
        );
        assert_eq!(
            quasi_shuffle(&w(&[2, 1]), &Word::empty(), a),
            LinComb::basis(w(&[2, 1]))
        );
    }

    #[test]
    fn deconcat_examples() {
        assert_eq!(
            deconcat_coproduct(&Word::empty()),
            LinComb::basis(Tensor(Word::empty(), Word::empty()))
        );
        let d = deconcat_coproduct(&w(&[1, 2]));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&Tensor(w(&[1]), w(&[2]))), qi(1));
        assert_eq!(deconcat_coproduct(&w(&[1, 1, 1, 1])).len(), 5);
    }

    #[test]
    fn antipode_examples() {
        let z = HoffmanPairing::Zero;
        let a = HoffmanPairing::Additive;
        assert_eq!(word_antipode_recursive(&w(&[1]), z), lc(&[(&[1], qi(-1))]));
        assert_eq!(word_antipode_recursive(&w(&[1, 2]), z), lc(&[(&[2, 1], qi(1))]));
        assert_eq!(word_antipode_closed(&w(&[1, 2]), z), lc(&[(&[2, 1], qi(1))]));
        let expected = lc(&[(&[1, 1], qi(1)), (&[2], qi(1))]);
        assert_eq!(word_antipode_recursive(&w(&[1, 1]), a), expected);
        assert_eq!(word_antipode_closed(&w(&[1, 1]), a), expected);
    }

    #[test]
    fn tau_psi_examples() {
        let a = HoffmanPairing::Additive;
        assert_eq!(hoffman_tau(&w(&[1]), a), LinComb::basis(w(&[1])));
        assert_eq!(hoffman_tau(&w(&[1, 1]), a), lc(&[(&[1, 1], qi(1)), (&[2], q(1, 2))]));
        let t = hoffman_tau(&w(&[1, 2, 1]), a);
        let back = t.flat_map(|x| hoffman_psi(x, a));
        assert_eq!(back, LinComb::basis(w(&[1, 2, 1])));
    }

    #[test]
    fn dual_examples() {
        let x = LinComb::basis(w(&[1]).dual());
        let y = LinComb::basis(w(&[2]).dual());
        assert_eq!(concat_dual(&x, &y), LinComb::basis(w(&[1, 2]).dual()));
        let d = dual_delta(&w(&[2]), HoffmanPairing::Additive);
        assert_eq!(d.coeff(&Tensor(w(&[1]).dual(), w(&[1]).dual())), qi(1));
        let d = dual_delta(&w(&[1, 2]), HoffmanPairing::Zero);
        assert_eq!(d.coeff(&Tensor(w(&[2]).dual(), w(&[1]).dual())), qi(1));
        assert_eq!(d.coeff(&Tensor(w(&[1]).dual(), w(&[2]).dual())), qi(1));
    }

    #[test]
    fn tau_star_examples() {
        let a = HoffmanPairing::Additive;
        assert_eq!(tau_star(&e_gen(1), a).unwrap(), e_gen(1));
        let expected: DualWordElement = [(w(&[2]).dual(), qi(1)), (w(&[1, 1]).dual(), q(1, 2))]
            .into_iter()
            .collect();
        assert_eq!(tau_star(&e_gen(2), a).unwrap(), expected);
        let back = psi_star(&tau_star(&e_gen(3), a).unwrap(), a).unwrap();
        assert_eq!(back, e_gen(3));
        assert_eq!(
            tau_star(&e_gen(1), HoffmanPairing::Zero),
            Err(Error::DegeneratePairing("tau_star"))
        );
    }

    #[test]
    fn lie_examples() {
        let b = lie_bracket(&e_gen(1), &e_gen(2));
        let expected: DualWordElement = [(w(&[1, 2]).dual(), qi(1)), (w(&[2, 1]).dual(), qi(-1))]
            .into_iter()
            .collect();
        assert_eq!(b, expected);
        assert!(is_lie_polynomial(&b));
        assert!(!is_lie_polynomial(&LinComb::basis(w(&[1, 2]).dual())));
    }

    #[test]
    fn word_display_and_order() {
        assert_eq!(w(&[1, 2, 1]).to_string(), "f1.f2.f1");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w(&[1, 2]).dual().to_string(), "f1.f2*");
        assert!(w(&[3]) < w(&[1, 1, 1, 1]));
    }

    #[test]
    fn bracket_seq_nesting() {
        let a = HoffmanPairing::Additive;
        assert_eq!(a.bracket_seq(&[1, 2, 3]), Some(6));
        assert_eq!(HoffmanPairing::Zero.bracket_seq(&[4]), Some(4));
        assert_eq!(HoffmanPairing::Zero.bracket_seq(&[1, 1]), None);
    }
}
