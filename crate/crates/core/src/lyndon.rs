//! Lyndon words over the graded alphabet, the induced Hall set of labeled
//! rooted trees, Hall polynomials and the PBW basis of the concatenation
//! algebra, and the Lyndon-basis decomposition of the shuffle algebra.
//!
//! Letters are ordered by `f_n < f_m ⇔ n > m`, so `f_1` is the largest.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{factorial, LinComb, Rational};
use crate::error::{Error, Result};
use crate::trees::{bplus, graft, Forest, Tree};
use crate::words::{
    concat_dual, e_gen, lie_bracket, shuffle, words_up_to_weight, DualWord, DualWordElement, Word, WordElement,
};

/// `f_a` compared with `f_b` in the alphabet order.
pub fn letter_order(a: u32, b: u32) -> Ordering {
    b.cmp(&a)
}

/// Alphabetical order: a proper prefix is smaller, otherwise the first
/// differing letter decides.
pub fn word_compare(u: &Word, v: &Word) -> Ordering {
    for (&a, &b) in u.letters().iter().zip(v.letters()) {
        match letter_order(a, b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    u.len().cmp(&v.len())
}

pub fn is_lyndon(w: &Word) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| word_compare(w, &w.slice(i, w.len())) == Ordering::Less)
}

/// All Lyndon words of weight at most `max_weight`, alphabetically sorted.
pub fn lyndon_generate(max_weight: u32) -> Vec<Word> {
    let mut out: Vec<Word> = words_up_to_weight(max_weight).into_iter().filter(is_lyndon).collect();
    out.sort_by(word_compare);
    out
}

/// The unique factorization into a non-increasing sequence of Lyndon words.
pub fn lyndon_factorize(w: &Word) -> Vec<Word> {
    let mut factors: Vec<Word> = w.letters().iter().map(|&k| Word::letter(k)).collect();
    loop {
        let pos = factors
            .windows(2)
            .position(|p| word_compare(&p[0], &p[1]) == Ordering::Less);
        match pos {
            Some(i) => {
                let merged = factors[i].concat(&factors[i + 1]);
                factors.splice(i..i + 2, [merged]);
            }
            None => return factors,
        }
    }
}

/// Splits a Lyndon word of length ≥ 2 as `uv` with `v` its longest proper
/// Lyndon suffix.
pub fn standard_factorization(w: &Word) -> Option<(Word, Word)> {
    (1..w.len())
        .map(|i| (w.slice(0, i), w.slice(i, w.len())))
        .find(|(_, v)| is_lyndon(v))
}

/// Which way a Hall tree's bracket is taken.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Orientation {
    /// `E(t) = [E(t²), E(t¹)]`.
    #[default]
    Frame,
    /// `E(t) = [E(t¹), E(t²)]`.
    Classical,
}

/// A tree of the Lyndon-induced Hall set with its foliage and standard
/// decomposition.
#[derive(Clone, PartialEq, Eq)]
pub struct HallTree {
    pub tree: Tree,
    pub foliage: Word,
    pub decomposition: Option<Box<(HallTree, HallTree)>>,
}

impl HallTree {
    pub fn weight(&self) -> u32 {
        self.foliage.weight()
    }

    pub fn polynomial(&self, orientation: Orientation) -> DualWordElement {
        hall_polynomial(self, orientation)
    }
}

impl Ord for HallTree {
    fn cmp(&self, other: &Self) -> Ordering {
        word_compare(&self.foliage, &other.foliage)
    }
}

impl PartialOrd for HallTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HallTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

impl fmt::Debug for HallTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <{}>", self.tree, self.foliage)
    }
}

pub fn hall_tree_of_lyndon(w: &Word) -> Result<HallTree> {
    if !is_lyndon(w) {
        return Err(Error::NotLyndon(w.to_string()));
    }
    Ok(build_hall_tree(w))
}

fn build_hall_tree(w: &Word) -> HallTree {
    match standard_factorization(w) {
        None => HallTree {
            tree: Tree::leaf(w.letters()[0]),
            foliage: w.clone(),
            decomposition: None,
        },
        Some((u, v)) => {
            let tu = build_hall_tree(&u);
            let tv = build_hall_tree(&v);
            HallTree {
                tree: graft(&tu.tree, &Forest::single(tv.tree.clone())),
                foliage: w.clone(),
                decomposition: Some(Box::new((tu, tv))),
            }
        }
    }
}

/// Foliage read from the tree alone: the root letter, then the branch
/// foliages in decreasing Hall order.
pub fn foliage_of(t: &Tree) -> Result<Word> {
    let root = t.label().ok_or_else(|| Error::UnlabeledVertex(t.to_string()))?;
    let mut branches = t.children().iter().map(foliage_of).collect::<Result<Vec<_>>>()?;
    branches.sort_by(|a, b| word_compare(b, a));
    Ok(branches.iter().fold(Word::letter(root), |acc, b| acc.concat(b)))
}

/// Standard decomposition computed from the tree: remove one copy of the
/// smallest root branch.
pub fn remove_smallest_branch(t: &Tree) -> Result<Option<(Tree, Tree)>> {
    if t.children().is_empty() {
        return Ok(None);
    }
    let mut best: Option<(usize, Word)> = None;
    for (i, c) in t.children().iter().enumerate() {
        let f = foliage_of(c)?;
        if best.as_ref().is_none_or(|(_, b)| word_compare(&f, b) == Ordering::Less) {
            best = Some((i, f));
        }
    }
    let (i, _) = best.expect("non-empty children");
    let mut rest = t.children().to_vec();
    let smallest = rest.remove(i);
    Ok(Some((Tree::node(t.label(), rest), smallest)))
}

/// All Hall trees of weight at most `max_weight`, in Hall order.
pub fn hall_trees(max_weight: u32) -> Vec<HallTree> {
    lyndon_generate(max_weight).iter().map(build_hall_tree).collect()
}

/// `E(•_{f_k}) = e_{-k}`; otherwise a bracket of the decomposition.
pub fn hall_polynomial(t: &HallTree, orientation: Orientation) -> DualWordElement {
    match &t.decomposition {
        None => e_gen(t.foliage.letters()[0]),
        Some(d) => {
            let e1 = hall_polynomial(&d.0, orientation);
            let e2 = hall_polynomial(&d.1, orientation);
            match orientation {
                Orientation::Frame => lie_bracket(&e2, &e1),
                Orientation::Classical => lie_bracket(&e1, &e2),
            }
        }
    }
}

/// A Hall forest `t_1^{r_1} … t_m^{r_m}` with `t_1 > … > t_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HallForest {
    pub factors: Vec<(HallTree, usize)>,
}

impl HallForest {
    /// The Hall forest whose foliages concatenate to `w`.
    pub fn of_word(w: &Word) -> HallForest {
        let mut factors: Vec<(HallTree, usize)> = Vec::new();
        for l in lyndon_factorize(w) {
            match factors.last_mut() {
                Some((t, r)) if t.foliage == l => *r += 1,
                _ => factors.push((build_hall_tree(&l), 1)),
            }
        }
        HallForest { factors }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(t, r)| t.weight() * *r as u32).sum()
    }

    pub fn forest(&self) -> Forest {
        Forest::new(
            self.factors
                .iter()
                .flat_map(|(t, r)| std::iter::repeat_n(t.tree.clone(), *r))
                .collect(),
        )
    }

    pub fn foliage(&self) -> Word {
        self.factors
            .iter()
            .flat_map(|(t, r)| std::iter::repeat_n(&t.foliage, *r))
            .fold(Word::empty(), |acc, w| acc.concat(w))
    }
}

impl fmt::Display for HallForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.forest().fmt(f)
    }
}

/// All Hall forests of weight exactly `n` (one per word of weight `n`).
pub fn hall_forests(n: u32) -> Vec<HallForest> {
    crate::words::words_of_weight(n)
        .iter()
        .map(HallForest::of_word)
        .collect()
}

/// `E(u) = E(u²) E(u¹)` where `u²` is the smallest tree of `u`; so the
/// factors appear from smallest to largest.
pub fn pbw_element(u: &HallForest, orientation: Orientation) -> DualWordElement {
    let mut out = LinComb::basis(DualWord(Word::empty()));
    for (t, r) in &u.factors {
        let e = hall_polynomial(t, orientation);
        for _ in 0..*r {
            out = concat_dual(&e, &out);
        }
    }
    out
}

/// `t^{∘r} = t ∘ (t ∘ (… ∘ t))`.
pub fn graft_power(t: &Tree, r: usize) -> Tree {
    assert!(r >= 1, "graft power needs r ≥ 1");
    (1..r).fold(t.clone(), |acc, _| graft(t, &Forest::single(acc)))
}

/// `ξ(t_1^{r_1} … t_m^{r_m}) = t_1^{∘r_1} ∘ (t_2^{∘r_2} … t_m^{∘r_m})`.
pub fn xi(u: &HallForest) -> Result<Tree> {
    let (first, rest) = u
        .factors
        .split_first()
        .ok_or_else(|| Error::Invalid("xi of the empty forest".into()))?;
    let head = graft_power(&first.0.tree, first.1);
    let tail = Forest::new(rest.iter().map(|(t, r)| graft_power(&t.tree, *r)).collect());
    Ok(graft(&head, &tail))
}

/// How the third Hall-set axiom treats the smallest branch `t_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomReading {
    /// Drop every copy of `t_m`.
    DropAll,
    /// Drop a single copy of `t_m`.
    DropOne,
}

/// Outcome of checking the Hall-set axioms on the trees of weight ≤ N.
#[derive(Clone, Debug, Default)]
pub struct HallAxiomReport {
    pub total_order: bool,
    pub letters: bool,
    pub membership: Vec<String>,
    pub branches_larger: bool,
}

impl HallAxiomReport {
    pub fn all_hold(&self) -> bool {
        self.total_order && self.letters && self.membership.is_empty() && self.branches_larger
    }
}

/// Checks the four Hall-set axioms on the Lyndon-induced trees of weight
/// at most `max_weight`. The membership axiom is tested against every
/// candidate `B+_a(u)` whose branches are Hall trees; failures are listed.
pub fn check_hall_axioms(max_weight: u32, reading: AxiomReading) -> HallAxiomReport {
    let hall = hall_trees(max_weight);
    let members: BTreeSet<Tree> = hall.iter().map(|h| h.tree.clone()).collect();
    let foliage = |t: &Tree| foliage_of(t).expect("labeled");
    let greater = |a: &Tree, b: &Tree| word_compare(&foliage(a), &foliage(b)) == Ordering::Greater;

    let foliages: BTreeSet<Word> = hall.iter().map(|h| h.foliage.clone()).collect();
    let total_order = foliages.len() == hall.len();
    let letters = (1..=max_weight).all(|k| members.contains(&Tree::leaf(k)));
    let branches_larger = hall
        .iter()
        .all(|h| h.tree.children().iter().all(|c| greater(c, &h.tree)));

    let mut membership = Vec::new();
    for a in 1..max_weight {
        for hf in (1..=max_weight - a).flat_map(hall_forests) {
            let u = hf.forest();
            let candidate = bplus(&u, Some(a));
            let (tm, rm) = hf.factors.last().expect("non-empty");
            let mut reduced: Vec<Tree> = hf.forest().trees().to_vec();
            let drop = match reading {
                AxiomReading::DropAll => *rm,
                AxiomReading::DropOne => 1,
            };
            for _ in 0..drop {
                let i = reduced.iter().position(|t| *t == tm.tree).expect("present");
                reduced.remove(i);
            }
            let smaller = bplus(&Forest::new(reduced), Some(a));
            let condition = members.contains(&smaller) && greater(&tm.tree, &smaller);
            if members.contains(&candidate) != condition {
                membership.push(candidate.to_string());
            }
        }
    }
    HallAxiomReport {
        total_order,
        letters,
        membership,
        branches_larger,
    }
}

/// A commutative monomial in Lyndon words, factors in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LyndonMonomial(pub Vec<Word>);

impl fmt::Display for LyndonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for w in &self.0 {
            write!(f, "{{{w}}}")?;
        }
        Ok(())
    }
}

/// Shuffle product of the factors of a monomial.
pub fn expand_monomial(m: &LyndonMonomial) -> WordElement {
    m.0.iter().fold(LinComb::basis(Word::empty()), |acc, w| {
        acc.bilinear(&LinComb::basis(w.clone()), shuffle)
    })
}

pub fn expand_lyndon_polynomial(p: &LinComb<LyndonMonomial>) -> WordElement {
    p.flat_map(expand_monomial)
}

/// Writes a shuffle-algebra element as a polynomial in Lyndon words by
/// repeatedly eliminating the alphabetically largest word.
pub fn lyndon_poly_decompose(x: &WordElement) -> LinComb<LyndonMonomial> {
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    while let Some(w) = rest.basis_elements().max_by(|a, b| word_compare(a, b)).cloned() {
        let c = rest.coeff(&w);
        let factors = lyndon_factorize(&w);
        let mut mult = Rational::one();
        let mut run = 1;
        for i in 1..=factors.len() {
            if i < factors.len() && factors[i] == factors[i - 1] {
                run += 1;
            } else {
                mult *= factorial(run);
                run = 1;
            }
        }
        let mut sorted = factors;
        sorted.sort();
        let m = LyndonMonomial(sorted);
        let coeff = c / mult;
        rest.add_scaled(&expand_monomial(&m), &-coeff.clone());
        debug_assert!(rest.coeff(&w).is_zero());
        out.add_term(m, coeff);
    }
    out
}
