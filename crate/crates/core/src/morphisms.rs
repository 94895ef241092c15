//! Maps between the tree algebras, the word algebras and the (quasi-,
//! noncommutative) symmetric functions: `π` and its kernel, `SYM ⊂ QSYM`,
//! `NSYM`, the square of ladder maps and its dual, Zhao's map and its
//! dual `Z*`, their lifts `Z_u`, `ρ`, the `β` maps, `F`, `F*`, and a
//! data-driven checker for commutative diagrams.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::algebra::{q, qi, Bialgebra, LinComb, Rational, Tensor};
use crate::error::{Error, Result};
use crate::tree_hopf::{gl_product, planar_diamond, CkElement, GlElement};
use crate::trees::{
    graft, label_assignments, linear_extensions, planar_embeddings, sym_order, unlabeled_trees, Forest, OrderedForest,
    PlanarTree, Tree,
};
use crate::words::{
    compositions, deconcat_coproduct, quasi_shuffle, shuffle, words_of_weight, words_up_to_weight, DualWord,
    DualWordElement, HoffmanPairing, Word, WordElement,
};

// ---------------------------------------------------------------------------
// π

/// `π(u) = Σ w(>)` over the linear extensions of a labeled forest.
pub fn pi(u: &Forest) -> Result<WordElement> {
    Ok(linear_extensions(u)?
        .into_iter()
        .map(|w| (w, Rational::one()))
        .collect())
}

pub fn pi_lin(x: &CkElement) -> Result<WordElement> {
    x.try_flat_map(pi)
}

/// `α(u) = Σ α_{w(>)}` over linear extensions.
pub fn alpha_of(u: &Forest, coeffs: impl Fn(&Word) -> Rational) -> Result<Rational> {
    Ok(linear_extensions(u)?.iter().map(coeffs).sum())
}

/// A kernel generator together with the family it belongs to.
#[derive(Clone, Debug)]
pub struct KernelGenerator {
    pub family: &'static str,
    pub element: CkElement,
}

fn single(t: Tree) -> Forest {
    Forest::single(t)
}

fn graft_tree(s: &Tree, t: &Tree) -> Tree {
    graft(s, &single(t.clone()))
}

/// All instances of the kernel generator families with total label weight
/// at most `max_weight`:
///
/// * `t∘z + z∘t − tz`
/// * `s∘(t∘z) + s∘(z∘t) − s∘(tz)`
/// * `s∘(tz) + z∘(ts) + t∘(sz) − tzs`
/// * `Π t_i − Σ t_i ∘ Π_{j≠i} t_j` for `m ≥ 2` trees
pub fn kernel_generators(max_weight: u32) -> Vec<KernelGenerator> {
    let trees: Vec<Tree> = (1..=max_weight).flat_map(crate::trees::labeled_trees).collect();
    let one = Rational::one;
    let mut out = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for z in &trees[i..] {
            if t.weight() + z.weight() > max_weight {
                continue;
            }
            let e: CkElement = [
                (single(graft_tree(t, z)), one()),
                (single(graft_tree(z, t)), one()),
                (Forest::new(vec![t.clone(), z.clone()]), -one()),
            ]
            .into_iter()
            .collect();
            out.push(KernelGenerator {
                family: "t.z+z.t-tz",
                element: e,
            });
        }
    }
    for s in &trees {
        for (i, t) in trees.iter().enumerate() {
            for z in &trees[i..] {
                if s.weight() + t.weight() + z.weight() > max_weight {
                    continue;
                }
                let tz = Forest::new(vec![t.clone(), z.clone()]);
                let e: CkElement = [
                    (single(graft_tree(s, &graft_tree(t, z))), one()),
                    (single(graft_tree(s, &graft_tree(z, t))), one()),
                    (single(graft(s, &tz)), -one()),
                ]
                .into_iter()
                .collect();
                out.push(KernelGenerator {
                    family: "s.(t.z)+s.(z.t)-s.(tz)",
                    element: e,
                });
                let pair = |a: &Tree, b: &Tree| Forest::new(vec![a.clone(), b.clone()]);
                let e: CkElement = [
                    (single(graft(s, &pair(t, z))), one()),
                    (single(graft(z, &pair(t, s))), one()),
                    (single(graft(t, &pair(s, z))), one()),
                    (Forest::new(vec![t.clone(), z.clone(), s.clone()]), -one()),
                ]
                .into_iter()
                .collect();
                out.push(KernelGenerator {
                    family: "s.(tz)+z.(ts)+t.(sz)-tzs",
                    element: e,
                });
            }
        }
    }
    for m in 2..=max_weight as usize {
        for combo in multisets_of_trees(&trees, m, max_weight) {
            let mut e = LinComb::basis(Forest::new(combo.clone()));
            for i in 0..combo.len() {
                let mut rest = combo.clone();
                let ti = rest.remove(i);
                e.add_term(single(graft(&ti, &Forest::new(rest))), -one());
            }
            out.push(KernelGenerator {
                family: "prod-sum",
                element: e,
            });
        }
    }
    out
}

fn multisets_of_trees(trees: &[Tree], m: usize, max_weight: u32) -> Vec<Vec<Tree>> {
    fn go(trees: &[Tree], m: usize, budget: u32, start: usize, acc: &mut Vec<Tree>, out: &mut Vec<Vec<Tree>>) {
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        for i in start..trees.len() {
            if trees[i].weight() <= budget {
                acc.push(trees[i].clone());
                go(trees, m, budget - trees[i].weight(), i, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(trees, m, max_weight, 0, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// QSYM, SYM, NSYM

/// A composition `I = (i_1, …, i_k)`, indexing the monomial `M_I`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn ones(n: usize) -> Composition {
        Composition(vec![1; n])
    }

    fn word(&self) -> Word {
        Word::new(self.0.clone())
    }

    fn of_word(w: &Word) -> Composition {
        Composition(w.letters().to_vec())
    }

    /// `φ(I)`: forget the order of the parts.
    pub fn partition(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, prefix: &str, parts: &[u32]) -> fmt::Result {
    write!(f, "{prefix}(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, "M", &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A partition, parts in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.sort_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=max)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, "", &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type QsymElement = LinComb<Composition>;

/// `M_I · M_J` by the quasi-shuffle with the additive pairing.
pub fn qsym_product(a: &Composition, b: &Composition) -> QsymElement {
    quasi_shuffle(&a.word(), &b.word(), HoffmanPairing::Additive).map_basis(Composition::of_word)
}

pub fn qsym_mul(x: &QsymElement, y: &QsymElement) -> QsymElement {
    x.bilinear(y, qsym_product)
}

/// QSYM as a bialgebra: quasi-shuffle product, deconcatenation coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct Qsym;

impl Bialgebra for Qsym {
    type Basis = Composition;

    fn unit(&self) -> Composition {
        Composition::default()
    }

    fn mul_basis(&self, a: &Composition, b: &Composition) -> QsymElement {
        qsym_product(a, b)
    }

    fn coproduct_basis(&self, b: &Composition) -> LinComb<Tensor<Composition>> {
        deconcat_coproduct(&b.word()).map_basis(|Tensor(x, y)| Tensor(Composition::of_word(x), Composition::of_word(y)))
    }
}

/// `m_λ = Σ_{φ(I) = λ} M_I`.
pub fn monomial_symmetric(lambda: &Partition) -> QsymElement {
    let mut parts = lambda.0.clone();
    parts.sort();
    let mut out = LinComb::zero();
    loop {
        out.add_term(Composition(parts.clone()), Rational::one());
        if !next_permutation_u32(&mut parts) {
            return out;
        }
    }
}

fn next_permutation_u32(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `e_n = m_{(1,…,1)} = M_{(1,…,1)}`.
pub fn elementary(n: usize) -> QsymElement {
    LinComb::basis(Composition::ones(n))
}

/// `e_μ = Π e_{μ_i}`.
pub fn elementary_monomial(mu: &Partition) -> QsymElement {
    mu.0.iter().fold(LinComb::basis(Composition::default()), |acc, &p| {
        qsym_mul(&acc, &elementary(p as usize))
    })
}

/// Whether a QSYM element is symmetric (coefficients depend only on `φ(I)`).
pub fn is_symmetric(x: &QsymElement) -> bool {
    x.iter().all(|(c, v)| {
        monomial_symmetric(&c.partition())
            .basis_elements()
            .all(|d| &x.coeff(d) == v)
    })
}

/// Expresses a symmetric function as a polynomial in the `e_n`: the
/// result maps `μ` to the coefficient of `e_μ`.
pub fn sym_to_e_basis(x: &QsymElement) -> Result<LinComb<Partition>> {
    if !is_symmetric(x) {
        return Err(Error::NotSymmetric(x.to_string()));
    }
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    // e_{λ'} = m_λ + terms with lexicographically smaller partitions.
    while let Some(lambda) = rest
        .basis_elements()
        .map(Composition::partition)
        .max_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.0.cmp(&b.0)))
    {
        let c = rest.coeff(&Composition(lambda.0.clone()));
        let mu = lambda.conjugate();
        rest.add_scaled(&elementary_monomial(&mu), &-c.clone());
        out.add_term(mu, c);
    }
    Ok(out)
}

/// A word `z_{i_1} … z_{i_k}` in NSYM.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NsymWord(pub Word);

impl fmt::Display for NsymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, k) in self.0.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "z{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NsymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type NsymElement = LinComb<NsymWord>;

// ---------------------------------------------------------------------------
// The ladder square and its dual

fn planar_is_ladder(t: &PlanarTree) -> bool {
    t.label().is_none()
        && match t.children() {
            [] => true,
            [c] => planar_is_ladder(c),
            _ => false,
        }
}

fn is_ladder(t: &Tree) -> bool {
    t.label().is_none()
        && match t.children() {
            [] => true,
            [c] => is_ladder(c),
            _ => false,
        }
}

/// `α1(z_{i_1} … z_{i_k})` = the ordered forest of planar ladders.
pub fn alpha1(x: &NsymElement) -> LinComb<OrderedForest> {
    x.map_basis(|w| OrderedForest(w.0.letters().iter().map(|&n| PlanarTree::ladder(n as usize)).collect()))
}

/// Forget the planar order.
pub fn alpha2(x: &LinComb<OrderedForest>) -> CkElement {
    x.map_basis(OrderedForest::to_forest)
}

/// `z_n ↦ m_{(1,…,1)}`, multiplicatively.
pub fn alpha3(x: &NsymElement) -> QsymElement {
    x.flat_map(|w| {
        w.0.letters()
            .iter()
            .fold(LinComb::basis(Composition::default()), |acc, &n| {
                qsym_mul(&acc, &elementary(n as usize))
            })
    })
}

/// `e_n = m_{(1,…,1)} ↦ l_n`, multiplicatively; the input must be symmetric.
pub fn alpha4(x: &QsymElement) -> Result<CkElement> {
    Ok(sym_to_e_basis(x)?.map_basis(|mu| Forest::new(mu.0.iter().map(|&n| Tree::ladder(n as usize)).collect())))
}

/// `α1*(t_I) = M_I` for `t_I = B+(l_{i_1}, …, l_{i_k})` planar, else 0.
pub fn alpha1_star(x: &LinComb<PlanarTree>) -> QsymElement {
    x.flat_map(|t| {
        if t.label().is_none() && t.children().iter().all(planar_is_ladder) {
            LinComb::basis(Composition(t.children().iter().map(|c| c.size() as u32).collect()))
        } else {
            LinComb::zero()
        }
    })
}

/// `α2*(t) = |sym(t)| Σ_{s ∈ α2⁻¹(t)} s`.
pub fn alpha2_star(x: &GlElement) -> LinComb<PlanarTree> {
    x.flat_map(|t| {
        let c = qi(sym_order(t) as i64);
        planar_embeddings(t).into_iter().map(|s| (s, c.clone())).collect()
    })
}

/// The inclusion `SYM → QSYM`.
pub fn alpha3_star(x: &QsymElement) -> QsymElement {
    x.clone()
}

/// `α4*(t_J) = |sym(t_J)| m_J` for `t_J = B+(l_{j_1}, …, l_{j_k})`, else 0.
pub fn alpha4_star(x: &GlElement) -> QsymElement {
    x.flat_map(|t| {
        if t.label().is_none() && t.children().iter().all(is_ladder) {
            let j = Partition::new(t.children().iter().map(|c| c.size() as u32).collect());
            monomial_symmetric(&j).scale(&qi(sym_order(t) as i64))
        } else {
            LinComb::zero()
        }
    })
}

// ---------------------------------------------------------------------------
// Zhao

/// `k_n = Σ_{|t| = n+1} t / |sym(t)|`.
pub fn zhao_k(n: usize) -> GlElement {
    unlabeled_trees(n + 1)
        .into_iter()
        .map(|t| {
            let s = sym_order(&t) as i64;
            (t, q(1, s))
        })
        .collect()
}

fn gl_mul(x: &GlElement, y: &GlElement) -> GlElement {
    x.bilinear(y, gl_product)
}

/// `ε_0 = •`, `ε_n = Σ_{i=1}^{n} (−1)^{i−1} k_i ○ ε_{n−i}`.
pub fn zhao_eps(n: usize) -> GlElement {
    let mut eps: Vec<GlElement> = vec![LinComb::basis(Tree::dot())];
    for m in 1..=n {
        let mut e = LinComb::zero();
        for i in 1..=m {
            let sign = if i % 2 == 1 { qi(1) } else { qi(-1) };
            e.add_scaled(&gl_mul(&zhao_k(i), &eps[m - i]), &sign);
        }
        eps.push(e);
    }
    eps.pop().expect("ε_0 present")
}

/// `Z(z_{i_1} … z_{i_k}) = ε_{i_1} ○ … ○ ε_{i_k}`.
pub fn zhao_z(x: &NsymElement) -> GlElement {
    x.flat_map(|w| {
        w.0.letters().iter().fold(LinComb::basis(Tree::dot()), |acc, &n| {
            gl_mul(&acc, &zhao_eps(n as usize))
        })
    })
}

/// `A+(M_I) = M_{I ⊔ (1)}`.
pub fn aplus(x: &QsymElement) -> QsymElement {
    x.map_basis(|c| {
        let mut p = c.0.clone();
        p.push(1);
        Composition(p)
    })
}

/// The algebra morphism `Z*: H_CK → QSYM` with `Z*(B+(u)) = A+(Z*(u))`.
pub fn zhao_zstar(x: &CkElement) -> QsymElement {
    fn tree(t: &Tree) -> QsymElement {
        aplus(&forest(&t.strip_root()))
    }
    fn forest(u: &Forest) -> QsymElement {
        u.trees().iter().fold(LinComb::basis(Composition::default()), |acc, t| {
            qsym_mul(&acc, &tree(t))
        })
    }
    x.flat_map(forest)
}

/// `Z_u(w) = Z*(l_n)` with `n` the length of `w`.
pub fn z_u(x: &WordElement) -> QsymElement {
    x.map_basis(|w| Composition::ones(w.len()))
}

/// `Z_u*(z_n) = e_{−n}`, multiplicatively.
pub fn z_u_star(x: &NsymElement) -> DualWordElement {
    x.map_basis(|w| DualWord(w.0.clone()))
}

// ---------------------------------------------------------------------------
// ρ, β, F

fn truncate(x: &WordElement, max_weight: u32) -> WordElement {
    x.filter(|w| w.weight() <= max_weight)
}

/// `ρ(u) = Σ_{v ∈ [u]} π(v)` over all labelings of `u` with weight ≤ N,
/// each labeling counted once.
pub fn rho(x: &CkElement, max_weight: Option<u32>) -> Result<WordElement> {
    let n = max_weight.ok_or(Error::MissingBound("rho"))?;
    x.try_flat_map(|u| {
        let mut out = LinComb::zero();
        for v in label_assignments(u, n) {
            out += &pi(&v)?;
        }
        Ok(out)
    })
}

/// `ρ*(e_{−n}) = l_n`, multiplicatively into the GL algebra.
pub fn rho_star(x: &DualWordElement) -> GlElement {
    x.flat_map(|w| {
        w.0.letters().iter().fold(LinComb::basis(Tree::dot()), |acc, &n| {
            gl_mul(&acc, &LinComb::basis(Tree::ladder(n as usize)))
        })
    })
}

/// `F(w)`: the labeled ladder with `π(l^w) = w`.
pub fn f_map(x: &WordElement) -> Result<GlElement> {
    x.try_flat_map(|w| Ok(LinComb::basis(Tree::labeled_ladder(w)?)))
}

/// `F*(u)`: dualize `π(u)`.
pub fn f_star(x: &CkElement) -> Result<DualWordElement> {
    Ok(pi_lin(x)?.map_basis(|w| DualWord(w.clone())))
}

pub fn beta1(x: &NsymElement) -> LinComb<OrderedForest> {
    alpha1(x)
}

pub fn beta3(x: &NsymElement) -> QsymElement {
    alpha3(x)
}

/// `β2(u) = Σ_{v ∈ [u]} π(v)`, truncated at weight N.
pub fn beta2(x: &LinComb<OrderedForest>, max_weight: Option<u32>) -> Result<WordElement> {
    let n = max_weight.ok_or(Error::MissingBound("beta2"))?;
    rho(&alpha2(x), Some(n))
}

/// `β4(e_n) = Σ_{v ∈ [l_n]} π(v)`, extended multiplicatively through the
/// shuffle product and truncated at weight N.
pub fn beta4(x: &QsymElement, max_weight: Option<u32>) -> Result<WordElement> {
    let n = max_weight.ok_or(Error::MissingBound("beta4"))?;
    let gens: BTreeMap<u32, WordElement> = (1..=n)
        .map(|k| {
            Ok((
                k,
                rho(&LinComb::basis(Forest::single(Tree::ladder(k as usize))), Some(n))?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(sym_to_e_basis(x)?.flat_map(|mu| {
        let mut acc = LinComb::basis(Word::empty());
        for p in &mu.0 {
            let g = gens.get(p).cloned().unwrap_or_default();
            acc = truncate(&acc.bilinear(&g, shuffle), n);
        }
        acc
    }))
}

pub fn beta1_star(x: &LinComb<PlanarTree>) -> QsymElement {
    alpha1_star(x)
}

pub fn beta3_star(x: &QsymElement) -> QsymElement {
    alpha3_star(x)
}

/// `β4*(e_{−n}) = α4*(l_n)`, multiplicatively into QSYM.
pub fn beta4_star(x: &DualWordElement) -> QsymElement {
    x.flat_map(|w| {
        w.0.letters()
            .iter()
            .fold(LinComb::basis(Composition::default()), |acc, &n| {
                qsym_mul(&acc, &alpha4_star(&LinComb::basis(Tree::ladder(n as usize))))
            })
    })
}

/// `β2*(e_{−n}) = α2*(l_n)`, multiplicatively into `(planar trees, ⋄)`.
pub fn beta2_star(x: &DualWordElement) -> LinComb<PlanarTree> {
    x.flat_map(|w| {
        w.0.letters().iter().fold(LinComb::basis(PlanarTree::dot()), |acc, &n| {
            let g = alpha2_star(&LinComb::basis(Tree::ladder(n as usize)));
            acc.bilinear(&g, planar_diamond)
        })
    })
}

/// `θ1 = β2 ∘ β1`.
pub fn theta1(x: &NsymElement, max_weight: Option<u32>) -> Result<WordElement> {
    beta2(&beta1(x), max_weight)
}

/// `θ1*`, the transpose of `θ1` under `⟨w*, w⟩ = 1` and `⟨z_I, M_I⟩ = 1`,
/// restricted to weight ≤ N.
pub fn theta1_star(x: &DualWordElement, max_weight: Option<u32>) -> Result<QsymElement> {
    let n = max_weight.ok_or(Error::MissingBound("theta1*"))?;
    let mut out = LinComb::zero();
    for w in words_up_to_weight(n) {
        let image = theta1(&LinComb::basis(NsymWord(w.clone())), Some(n))?;
        let c: Rational = x.iter().map(|(d, c)| c * image.coeff(&d.0)).sum();
        out.add_term(Composition(w.letters().to_vec()), c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Diagram checking

/// An element of one of the algebras the maps act on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Nsym(NsymElement),
    /// QSYM; SYM elements are symmetric QSYM elements.
    Qsym(QsymElement),
    Ck(CkElement),
    Gl(GlElement),
    Foissy(LinComb<OrderedForest>),
    Planar(LinComb<PlanarTree>),
    /// The shuffle algebra `H_U`.
    Shuffle(WordElement),
    /// The concatenation algebra `U(L)`.
    Dual(DualWordElement),
}

impl Element {
    pub fn algebra(&self) -> &'static str {
        match self {
            Element::Nsym(_) => "NSYM",
            Element::Qsym(_) => "QSYM",
            Element::Ck(_) => "H_CK",
            Element::Gl(_) => "H_GL",
            Element::Foissy(_) => "H_F",
            Element::Planar(_) => "H_P",
            Element::Shuffle(_) => "H_U",
            Element::Dual(_) => "U(L)",
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nsym(x) => x.fmt(f),
            Element::Qsym(x) => x.fmt(f),
            Element::Ck(x) => x.fmt(f),
            Element::Gl(x) => x.fmt(f),
            Element::Foissy(x) => x.fmt(f),
            Element::Planar(x) => x.fmt(f),
            Element::Shuffle(x) => x.fmt(f),
            Element::Dual(x) => x.fmt(f),
        }
    }
}

/// The names accepted by [`apply_map`].
pub const MAP_NAMES: &[&str] = &[
    "alpha1", "alpha2", "alpha3", "alpha4", "alpha1*", "alpha2*", "alpha3*", "alpha4*", "beta1", "beta2", "beta3",
    "beta4", "beta1*", "beta2*", "beta3*", "beta4*", "theta1", "theta1*", "Z", "Z*", "Z_u", "Z_u*", "rho", "rho*", "F",
    "F*", "pi",
];

/// Applies a named map. `max_weight` is the truncation used by the maps
/// that sum over infinitely many labelings.
pub fn apply_map(name: &str, x: &Element, max_weight: Option<u32>) -> Result<Element> {
    use Element::*;
    let mismatch = || Error::DomainMismatch {
        map: name.to_string(),
        found: x.algebra().to_string(),
    };
    Ok(match (name, x) {
        ("alpha1" | "beta1", Nsym(v)) => Foissy(alpha1(v)),
        ("alpha2", Foissy(v)) => Ck(alpha2(v)),
        ("alpha3" | "beta3", Nsym(v)) => Qsym(alpha3(v)),
        ("alpha4", Qsym(v)) => Ck(alpha4(v)?),
        ("alpha1*" | "beta1*", Planar(v)) => Qsym(alpha1_star(v)),
        ("alpha2*", Gl(v)) => Planar(alpha2_star(v)),
        ("alpha3*" | "beta3*", Qsym(v)) => Qsym(alpha3_star(v)),
        ("alpha4*", Gl(v)) => Qsym(alpha4_star(v)),
        ("beta2", Foissy(v)) => Shuffle(beta2(v, max_weight)?),
        // a planar tree enters through its ordered forest of branches
        ("beta2", Planar(v)) => Shuffle(beta2(
            &v.map_basis(|t| OrderedForest(t.children().to_vec())),
            max_weight,
        )?),
        ("beta4", Qsym(v)) => Shuffle(beta4(v, max_weight)?),
        ("beta2*", Dual(v)) => Planar(beta2_star(v)),
        ("beta4*", Dual(v)) => Qsym(beta4_star(v)),
        ("theta1", Nsym(v)) => Shuffle(theta1(v, max_weight)?),
        ("theta1*", Dual(v)) => Qsym(theta1_star(v, max_weight)?),
        ("Z", Nsym(v)) => Gl(zhao_z(v)),
        ("Z*", Ck(v)) => Qsym(zhao_zstar(v)),
        ("Z_u", Shuffle(v)) => Qsym(z_u(v)),
        ("Z_u*", Nsym(v)) => Dual(z_u_star(v)),
        ("rho", Ck(v)) => Shuffle(rho(v, max_weight)?),
        ("rho*", Dual(v)) => Gl(rho_star(v)),
        ("F", Shuffle(v)) => Gl(f_map(v)?),
        ("F*", Ck(v)) => Dual(f_star(v)?),
        ("pi", Ck(v)) => Shuffle(pi_lin(v)?),
        (n, _) if MAP_NAMES.contains(&n) => return Err(mismatch()),
        (n, _) => return Err(Error::UnknownMap(n.to_string())),
    })
}

/// Applies maps in order (first name first).
pub fn apply_path(path: &[&str], x: &Element, max_weight: Option<u32>) -> Result<Element> {
    path.iter()
        .try_fold(x.clone(), |acc, name| apply_map(name, &acc, max_weight))
}

/// Which basis elements a diagram is probed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probe {
    /// Words `z_I` of weight ≤ N.
    NsymWords,
    /// `e_μ` for partitions of weight ≤ N.
    SymElementary,
    /// Unlabeled trees with at most N non-root vertices.
    GlTrees,
    /// Dual words of weight ≤ N.
    DualWords,
    /// Dual letters `e_{−n}`, n ≤ N.
    DualLetters,
}

/// Two paths between the same algebras that should agree.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: &'static str,
    pub probe: Probe,
    pub left: Vec<&'static str>,
    pub right: Vec<&'static str>,
    /// Failures are reported but do not fail the check.
    pub report_only: bool,
}

/// One probe evaluation.
#[derive(Clone, Debug)]
pub struct ProbeResult {
    pub diagram: &'static str,
    pub probe: String,
    pub pass: bool,
    pub left: String,
    pub right: String,
    pub report_only: bool,
}

fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = compositions(n as usize)
        .into_iter()
        .map(|c| Partition::new(c.into_iter().map(|p| p as u32).collect()))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn probes(kind: Probe, max_weight: u32) -> Vec<Element> {
    match kind {
        Probe::NsymWords => (1..=max_weight)
            .flat_map(words_of_weight)
            .map(|w| Element::Nsym(LinComb::basis(NsymWord(w))))
            .collect(),
        Probe::SymElementary => (1..=max_weight)
            .flat_map(partitions_of)
            .map(|mu| Element::Qsym(elementary_monomial(&mu)))
            .collect(),
        Probe::GlTrees => (1..=max_weight as usize + 1)
            .flat_map(unlabeled_trees)
            .map(|t| Element::Gl(LinComb::basis(t)))
            .collect(),
        Probe::DualWords => (1..=max_weight)
            .flat_map(words_of_weight)
            .map(|w| Element::Dual(LinComb::basis(DualWord(w))))
            .collect(),
        Probe::DualLetters => (1..=max_weight)
            .map(|k| Element::Dual(LinComb::basis(DualWord(Word::letter(k)))))
            .collect(),
    }
}

pub fn diagram_check(d: &Diagram, max_weight: u32) -> Result<Vec<ProbeResult>> {
    probes(d.probe, max_weight)
        .into_iter()
        .map(|x| {
            let l = apply_path(&d.left, &x, Some(max_weight))?;
            let r = apply_path(&d.right, &x, Some(max_weight))?;
            Ok(ProbeResult {
                diagram: d.name,
                probe: x.to_string(),
                pass: l == r,
                left: l.to_string(),
                right: r.to_string(),
                report_only: d.report_only,
            })
        })
        .collect()
}

/// The built-in diagrams.
pub fn standard_diagrams() -> Vec<Diagram> {
    let d = |name, probe, left: &[&'static str], right: &[&'static str], report_only| Diagram {
        name,
        probe,
        left: left.to_vec(),
        right: right.to_vec(),
        report_only,
    };
    vec![
        d(
            "ladder-square",
            Probe::NsymWords,
            &["alpha1", "alpha2"],
            &["alpha3", "alpha4"],
            false,
        ),
        d(
            "ladder-square-dual",
            Probe::GlTrees,
            &["alpha4*", "alpha3*"],
            &["alpha2*", "alpha1*"],
            false,
        ),
        d(
            "beta-square",
            Probe::NsymWords,
            &["beta1", "beta2"],
            &["beta3", "beta4"],
            false,
        ),
        d("theta1", Probe::NsymWords, &["theta1"], &["beta3", "beta4"], false),
        d(
            "beta-square-dual-generators",
            Probe::DualLetters,
            &["beta4*", "beta3*"],
            &["beta2*", "beta1*"],
            false,
        ),
        d(
            "beta-square-dual-products",
            Probe::DualWords,
            &["beta4*", "beta3*"],
            &["beta2*", "beta1*"],
            true,
        ),
        d(
            "hexagon-rho",
            Probe::SymElementary,
            &["alpha4", "rho"],
            &["beta4"],
            true,
        ),
        d(
            "hexagon-theta2",
            Probe::GlTrees,
            &["alpha4*", "beta4"],
            &["alpha2*", "beta2"],
            true,
        ),
        d(
            "hexagon-theta1",
            Probe::NsymWords,
            &["alpha3", "beta4"],
            &["theta1"],
            true,
        ),
        d(
            "dual-hexagon-rho",
            Probe::DualWords,
            &["rho*", "alpha4*"],
            &["beta4*"],
            true,
        ),
        d(
            "dual-hexagon-theta1",
            Probe::DualWords,
            &["beta4*", "alpha3*"],
            &["theta1*"],
            true,
        ),
    ]
}
