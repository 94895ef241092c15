//! Hopf algebras of rooted trees: Connes-Kreimer (by admissible cuts and by
//! the vertex-poset formula), Grossman-Larson, the planar `⋄` algebra and
//! Foissy's noncommutative algebra, plus characters and the universal
//! property of `(H_CK, B+)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{pair_eval, Bialgebra, ConvolutionPowers, HopfAlgebra, LinComb, Rational, Tensor};
use crate::error::{Error, Result};
use crate::trees::{
    admissible_cuts, bplus, forest_sym_order, planar_admissible_cuts, FlatForest, Forest, OrderedForest, PlanarTree,
    Tree,
};
use crate::words::{shuffle, Word};

pub type CkElement = LinComb<Forest>;
pub type GlElement = LinComb<Tree>;

/// How the Connes-Kreimer coproduct is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkCoproduct {
    /// Enumerate admissible cuts of each tree.
    Cuts,
    /// Sum over splittings of the vertex set into a root-containing,
    /// ancestor-closed part (right) and its complement (left).
    Poset,
}

/// The Connes-Kreimer Hopf algebra on forests, labeled or unlabeled.
#[derive(Clone, Copy, Debug)]
pub struct CkHopf {
    pub mode: CkCoproduct,
}

impl CkHopf {
    pub fn cuts() -> Self {
        CkHopf {
            mode: CkCoproduct::Cuts,
        }
    }

    pub fn poset() -> Self {
        CkHopf {
            mode: CkCoproduct::Poset,
        }
    }
}

impl Default for CkHopf {
    fn default() -> Self {
        CkHopf::cuts()
    }
}

/// `Δ(t) = t ⊗ I + I ⊗ t + Σ_c P_c(t) ⊗ R_c(t)` for a single tree.
pub fn ck_tree_coproduct(t: &Tree) -> LinComb<Tensor<Forest>> {
    let mut out = LinComb::zero();
    out.add_term(Tensor(Forest::single(t.clone()), Forest::empty()), Rational::one());
    out.add_term(Tensor(Forest::empty(), Forest::single(t.clone())), Rational::one());
    for c in admissible_cuts(t) {
        out.add_term(Tensor(c.pruned, Forest::single(c.trunk)), Rational::one());
    }
    out
}

fn forest_tensor_mul(x: &LinComb<Tensor<Forest>>, y: &LinComb<Tensor<Forest>>) -> LinComb<Tensor<Forest>> {
    x.bilinear(y, |Tensor(a, b), Tensor(c, d)| {
        LinComb::basis(Tensor(a.mul(c), b.mul(d)))
    })
}

/// The coproduct on forests through the vertex poset: the right factor runs
/// over ancestor-closed vertex sets `w`, the left factor is the rest.
pub fn poset_coproduct(u: &Forest) -> LinComb<Tensor<Forest>> {
    let flat = FlatForest::new(u);
    let n = flat.len();
    assert!(n < 64, "forest too large for the poset coproduct");
    let mut out = LinComb::zero();
    // Vertices come in preorder, so parents precede children.
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((v, mask)) = stack.pop() {
        if v == n {
            let rest = flat.full_mask() & !mask;
            out.add_term(Tensor(flat.induced(rest), flat.induced(mask)), Rational::one());
            continue;
        }
        stack.push((v + 1, mask));
        if flat.parent[v].is_none_or(|p| mask & (1 << p) != 0) {
            stack.push((v + 1, mask | (1 << v)));
        }
    }
    out
}

/// `S(t) = -t - Σ_c S(P_c(t)) R_c(t)`, extended multiplicatively.
pub fn ck_antipode_tree(t: &Tree) -> CkElement {
    let mut out = LinComb::term(Forest::single(t.clone()), -Rational::one());
    for c in admissible_cuts(t) {
        let s = ck_antipode_forest(&c.pruned);
        let trunk = Forest::single(c.trunk);
        for (f, coeff) in s.iter() {
            out.add_term(f.mul(&trunk), -coeff.clone());
        }
    }
    out
}

pub fn ck_antipode_forest(u: &Forest) -> CkElement {
    let mut out = LinComb::basis(Forest::empty());
    for t in u.trees() {
        let s = ck_antipode_tree(t);
        out = out.bilinear(&s, |a, b| LinComb::basis(a.mul(b)));
    }
    out
}

impl Bialgebra for CkHopf {
    type Basis = Forest;

    fn unit(&self) -> Forest {
        Forest::empty()
    }

    fn mul_basis(&self, a: &Forest, b: &Forest) -> CkElement {
        LinComb::basis(a.mul(b))
    }

    fn coproduct_basis(&self, b: &Forest) -> LinComb<Tensor<Forest>> {
        match self.mode {
            CkCoproduct::Poset => poset_coproduct(b),
            CkCoproduct::Cuts => b
                .trees()
                .iter()
                .fold(LinComb::basis(Tensor(Forest::empty(), Forest::empty())), |acc, t| {
                    forest_tensor_mul(&acc, &ck_tree_coproduct(t))
                }),
        }
    }
}

impl HopfAlgebra for CkHopf {
    fn antipode_basis(&self, b: &Forest) -> CkElement {
        ck_antipode_forest(b)
    }
}

/// Linear extension of `B+` (or `B+_a`).
pub fn bplus_lin(x: &CkElement, label: Option<u32>) -> CkElement {
    x.map_basis(|u| Forest::single(bplus(u, label)))
}

/// Both sides of the cocycle identity `Δ B+ = B+ ⊗ I + (id ⊗ B+) Δ`.
pub fn bplus_cocycle_sides(u: &Forest, label: Option<u32>) -> (LinComb<Tensor<Forest>>, LinComb<Tensor<Forest>>) {
    let h = CkHopf::cuts();
    let t = bplus(u, label);
    let lhs = h.coproduct_basis(&Forest::single(t.clone()));
    let mut rhs = LinComb::basis(Tensor(Forest::single(t), Forest::empty()));
    for (Tensor(a, b), c) in h.coproduct_basis(u).iter() {
        rhs.add_term(Tensor(a.clone(), Forest::single(bplus(b, label))), c.clone());
    }
    (lhs, rhs)
}

/// The Grossman-Larson Hopf algebra on trees `B+(u)`; unit `•`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GlHopf;

/// `t ○ s`: attach every root branch of `t` to some vertex of `s`, summed
/// over all attachment maps.
pub fn gl_product(t: &Tree, s: &Tree) -> GlElement {
    let flat = FlatForest::of_tree(s);
    let n = flat.len();
    let branches = t.children();
    let mut out = LinComb::zero();
    let mut choice = vec![0usize; branches.len()];
    loop {
        let mut extra: Vec<Vec<Tree>> = vec![Vec::new(); n];
        for (b, &v) in branches.iter().zip(&choice) {
            extra[v].push(b.clone());
        }
        out.add_term(flat.build(0, flat.full_mask(), &extra), Rational::one());
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `Δ_GL(B+(t_1 … t_k)) = Σ_{I ⊔ J} B+(t(I)) ⊗ B+(t(J))`.
pub fn gl_coproduct(t: &Tree) -> LinComb<Tensor<Tree>> {
    let branches = t.children();
    let k = branches.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1 << k) {
        let (left, right): (Vec<_>, Vec<_>) = (0..k).partition(|&i| mask & (1 << i) != 0);
        let l = Tree::node(t.label(), left.iter().map(|&i| branches[i].clone()).collect());
        let r = Tree::node(t.label(), right.iter().map(|&i| branches[i].clone()).collect());
        out.add_term(Tensor(l, r), Rational::one());
    }
    out
}

impl Bialgebra for GlHopf {
    type Basis = Tree;

    fn unit(&self) -> Tree {
        Tree::dot()
    }

    fn mul_basis(&self, a: &Tree, b: &Tree) -> GlElement {
        gl_product(a, b)
    }

    fn coproduct_basis(&self, b: &Tree) -> LinComb<Tensor<Tree>> {
        gl_coproduct(b)
    }
}

/// Basis pairing `⟨B+(u), v⟩ = |sym(u)| δ_{u,v}`.
pub fn gl_ck_basis_pairing(t: &Tree, v: &Forest) -> Rational {
    let u = t.strip_root();
    if &u == v {
        Rational::from_integer(forest_sym_order(&u).into())
    } else {
        Rational::zero()
    }
}

pub fn ck_gl_pairing(x: &GlElement, y: &CkElement) -> Rational {
    pair_eval(x, y, |t, v| Some(gl_ck_basis_pairing(t, v))).expect("pairing is total")
}

/// `⟨x ⊗ y, Σ a ⊗ b⟩ = Σ ⟨x, a⟩⟨y, b⟩`.
pub fn ck_gl_tensor_pairing(x: &Tree, y: &Tree, d: &LinComb<Tensor<Forest>>) -> Rational {
    d.eval(|Tensor(a, b)| gl_ck_basis_pairing(x, a) * gl_ck_basis_pairing(y, b))
}

/// `⟨x ○ y, f⟩` and `⟨x ⊗ y, Δ_CK(f)⟩`.
pub fn gl_product_duality_sides(x: &Tree, y: &Tree, f: &Forest) -> (Rational, Rational) {
    let lhs = ck_gl_pairing(&gl_product(x, y), &LinComb::basis(f.clone()));
    let rhs = ck_gl_tensor_pairing(x, y, &CkHopf::cuts().coproduct_basis(f));
    (lhs, rhs)
}

/// `⟨Δ_GL(x), f ⊗ g⟩` and `⟨x, f g⟩`.
pub fn gl_coproduct_duality_sides(x: &Tree, f: &Forest, g: &Forest) -> (Rational, Rational) {
    let lhs = gl_coproduct(x).eval(|Tensor(a, b)| gl_ck_basis_pairing(a, f) * gl_ck_basis_pairing(b, g));
    let rhs = gl_ck_basis_pairing(x, &f.mul(g));
    (lhs, rhs)
}

fn shuffle_sequences<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let n = a.len() + b.len();
    let wa = Word::new(vec![1; a.len()]);
    let wb = Word::new(vec![2; b.len()]);
    let mut out = Vec::new();
    for (pattern, mult) in shuffle(&wa, &wb).iter() {
        let (mut i, mut j) = (0, 0);
        let mut seq = Vec::with_capacity(n);
        for &l in pattern.letters() {
            if l == 1 {
                seq.push(a[i].clone());
                i += 1;
            } else {
                seq.push(b[j].clone());
                j += 1;
            }
        }
        let m: usize = mult.to_integer().try_into().expect("small multiplicity");
        for _ in 0..m {
            out.push(seq.clone());
        }
    }
    out
}

/// `t ⋄ s`: shuffle the root branches of `t` into those of `s`.
pub fn planar_diamond(t: &PlanarTree, s: &PlanarTree) -> LinComb<PlanarTree> {
    shuffle_sequences(t.children(), s.children())
        .into_iter()
        .map(|seq| (PlanarTree::node(s.label(), seq), Rational::one()))
        .collect()
}

/// Deconcatenation of the root branch sequence.
pub fn planar_diamond_coproduct(t: &PlanarTree) -> LinComb<Tensor<PlanarTree>> {
    let b = t.children();
    (0..=b.len())
        .map(|i| {
            (
                Tensor(
                    PlanarTree::node(t.label(), b[..i].to_vec()),
                    PlanarTree::node(t.label(), b[i..].to_vec()),
                ),
                Rational::one(),
            )
        })
        .collect()
}

/// Planar trees under `⋄` with the deconcatenation coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct PlanarDiamond;

impl Bialgebra for PlanarDiamond {
    type Basis = PlanarTree;

    fn unit(&self) -> PlanarTree {
        PlanarTree::dot()
    }

    fn mul_basis(&self, a: &PlanarTree, b: &PlanarTree) -> LinComb<PlanarTree> {
        planar_diamond(a, b)
    }

    fn coproduct_basis(&self, b: &PlanarTree) -> LinComb<Tensor<PlanarTree>> {
        planar_diamond_coproduct(b)
    }
}

/// Foissy's Hopf algebra: ordered forests, concatenation, planar cuts.
#[derive(Clone, Copy, Debug, Default)]
pub struct FoissyHopf;

fn foissy_tree_coproduct(t: &PlanarTree) -> LinComb<Tensor<OrderedForest>> {
    let mut out = LinComb::zero();
    out.add_term(
        Tensor(OrderedForest::single(t.clone()), OrderedForest::empty()),
        Rational::one(),
    );
    out.add_term(
        Tensor(OrderedForest::empty(), OrderedForest::single(t.clone())),
        Rational::one(),
    );
    for (p, r) in planar_admissible_cuts(t) {
        out.add_term(Tensor(p, OrderedForest::single(r)), Rational::one());
    }
    out
}

pub fn foissy_coproduct(u: &OrderedForest) -> LinComb<Tensor<OrderedForest>> {
    u.0.iter().fold(
        LinComb::basis(Tensor(OrderedForest::empty(), OrderedForest::empty())),
        |acc, t| {
            acc.bilinear(&foissy_tree_coproduct(t), |Tensor(a, b), Tensor(c, d)| {
                LinComb::basis(Tensor(a.concat(c), b.concat(d)))
            })
        },
    )
}

/// `S(t) = -t - Σ_c S(P_c) R_c`, extended as an antihomomorphism.
pub fn foissy_antipode(u: &OrderedForest) -> LinComb<OrderedForest> {
    let mut out = LinComb::basis(OrderedForest::empty());
    for t in &u.0 {
        let mut s = LinComb::term(OrderedForest::single(t.clone()), -Rational::one());
        for (p, r) in planar_admissible_cuts(t) {
            let trunk = OrderedForest::single(r);
            for (f, c) in foissy_antipode(&p).iter() {
                s.add_term(f.concat(&trunk), -c.clone());
            }
        }
        out = s.bilinear(&out, |a, b| LinComb::basis(a.concat(b)));
    }
    out
}

impl Bialgebra for FoissyHopf {
    type Basis = OrderedForest;

    fn unit(&self) -> OrderedForest {
        OrderedForest::empty()
    }

    fn mul_basis(&self, a: &OrderedForest, b: &OrderedForest) -> LinComb<OrderedForest> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct_basis(&self, b: &OrderedForest) -> LinComb<Tensor<OrderedForest>> {
        foissy_coproduct(b)
    }
}

impl HopfAlgebra for FoissyHopf {
    fn antipode_basis(&self, b: &OrderedForest) -> LinComb<OrderedForest> {
        foissy_antipode(b)
    }
}

/// A functional on forests given by its values on trees.
pub trait TreeValues {
    fn value(&self, t: &Tree) -> Rational;
}

impl<F: Fn(&Tree) -> Rational> TreeValues for F {
    fn value(&self, t: &Tree) -> Rational {
        self(t)
    }
}

impl TreeValues for BTreeMap<Tree, Rational> {
    fn value(&self, t: &Tree) -> Rational {
        self.get(t).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Multiplicative extension: `f(I) = 1`, `f(t_1 … t_n) = Π f(t_i)`.
pub fn character_value(f: &impl TreeValues, u: &Forest) -> Rational {
    u.trees().iter().fold(Rational::one(), |acc, t| acc * f.value(t))
}

/// Leibniz extension: `g(I) = 0`, `g(t) = g(t)`, zero on proper forests.
pub fn infinitesimal_value(g: &impl TreeValues, u: &Forest) -> Rational {
    match u.trees() {
        [t] => g.value(t),
        _ => Rational::zero(),
    }
}

/// `exp*(g)(u) = Σ_{k ≤ |u|} g^{*k}(u) / k!` for a functional with `g(I) = 0`.
pub fn char_exp<F>(g: F, u: &Forest) -> Result<Rational>
where
    F: Fn(&Forest) -> Rational,
{
    let at_unit = g(&Forest::empty());
    if !at_unit.is_zero() {
        return Err(Error::UnitValue {
            expected: "0".into(),
            found: at_unit.to_string(),
        });
    }
    let h = CkHopf::cuts();
    let powers = ConvolutionPowers::new(&h, g);
    Ok(powers.exp_at(u, u.size()))
}

/// `g^{*k}(u) / k!` summed is [`char_exp`]; this exposes a single power.
pub fn char_convolution<F, G>(f: F, g: G, u: &Forest) -> Rational
where
    F: Fn(&Forest) -> Rational,
    G: Fn(&Forest) -> Rational,
{
    CkHopf::cuts().coproduct_basis(u).eval(|Tensor(a, b)| f(a) * g(b))
}

/// The unique algebra morphism `ψ` with `ψ(I) = 1` and
/// `ψ(B+_a(u)) = L_a(ψ(u))`, for a target bialgebra `h` and a family of
/// linear maps `L_a`. The cocycle law is verified first on `probes`.
pub fn universal_cocycle_map<H, L>(
    h: &H,
    cocycle: L,
    probes: &[(Option<u32>, LinComb<H::Basis>)],
    x: &CkElement,
) -> Result<LinComb<H::Basis>>
where
    H: Bialgebra,
    L: Fn(Option<u32>, &LinComb<H::Basis>) -> LinComb<H::Basis>,
{
    for (a, p) in probes {
        let lp = cocycle(*a, p);
        let lhs = h.coproduct(&lp);
        let mut rhs: LinComb<Tensor<H::Basis>> = lp
            .iter()
            .map(|(b, c)| (Tensor(b.clone(), h.unit()), c.clone()))
            .collect();
        for (Tensor(l, r), c) in h.coproduct(p).iter() {
            for (r2, c2) in cocycle(*a, &LinComb::basis(r.clone())).iter() {
                rhs.add_term(Tensor(l.clone(), r2.clone()), c * c2);
            }
        }
        if lhs != rhs {
            let label = a.map_or_else(|| "B+".to_string(), |k| format!("L_{k}"));
            return Err(Error::CocycleViolation(format!("{label} on {p}")));
        }
    }
    fn on_tree<H: Bialgebra, L: Fn(Option<u32>, &LinComb<H::Basis>) -> LinComb<H::Basis>>(
        h: &H,
        cocycle: &L,
        t: &Tree,
    ) -> LinComb<H::Basis> {
        let inner = on_forest(h, cocycle, &t.strip_root());
        cocycle(t.label(), &inner)
    }
    fn on_forest<H: Bialgebra, L: Fn(Option<u32>, &LinComb<H::Basis>) -> LinComb<H::Basis>>(
        h: &H,
        cocycle: &L,
        u: &Forest,
    ) -> LinComb<H::Basis> {
        u.trees()
            .iter()
            .fold(h.one(), |acc, t| h.mul(&acc, &on_tree(h, cocycle, t)))
    }
    Ok(x.flat_map(|u| on_forest(h, &cocycle, u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::parse::{parse_forest, parse_planar, parse_tree};
    use crate::trees::{labeled_forests, ordered_forests, unlabeled_forests, unlabeled_trees};
    use crate::words::WordHopf;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn tensor(a: &str, b: &str) -> Tensor<Forest> {
        Tensor(f(a), f(b))
    }

    #[test]
    fn ck_coproduct_examples() {
        let h = CkHopf::cuts();
        let d = h.coproduct_basis(&f("[]"));
        assert_eq!(
            d,
            [(tensor("[]", "I"), qi(1)), (tensor("I", "[]"), qi(1))]
                .into_iter()
                .collect()
        );
        let d = h.coproduct_basis(&f("[[]]"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&tensor("[]", "[]")), qi(1));
        let d = h.coproduct_basis(&f("[[],[]]"));
        assert_eq!(d.coeff(&tensor("[]", "[[]]")), qi(2));
        assert_eq!(d.coeff(&tensor("[] []", "[]")), qi(1));
        assert_eq!(d.coeff(&tensor("[[],[]]", "I")), qi(1));
        assert_eq!(d.coeff(&tensor("I", "[[],[]]")), qi(1));
        assert_eq!(d.len(), 4);
        assert_eq!(
            d.to_string(),
            "1*I (x) [[],[]] + 2*[] (x) [[]] + 1*[] [] (x) [] + 1*[[],[]] (x) I"
        );
    }

    #[test]
    fn poset_matches_cuts() {
        let cuts = CkHopf::cuts();
        let poset = CkHopf::poset();
        for n in 0..=6 {
            for u in unlabeled_forests(n) {
                assert_eq!(cuts.coproduct_basis(&u), poset.coproduct_basis(&u), "{u}");
            }
        }
        for w in 0..=5 {
            for u in labeled_forests(w) {
                assert_eq!(cuts.coproduct_basis(&u), poset.coproduct_basis(&u), "{u}");
                let forgot = poset
                    .coproduct_basis(&u)
                    .map_basis(|Tensor(a, b)| Tensor(a.unlabeled(), b.unlabeled()));
                assert_eq!(forgot, cuts.coproduct_basis(&u.unlabeled()));
            }
        }
    }

    #[test]
    fn cut_count_matches_coproduct_terms() {
        for n in 1..=5 {
            for tree in unlabeled_trees(n) {
                let total: Rational = ck_tree_coproduct(&tree).iter().map(|(_, c)| c.clone()).sum();
                assert_eq!(total, qi(admissible_cuts(&tree).len() as i64 + 2));
            }
        }
    }

    #[test]
    fn antipode_examples() {
        let h = CkHopf::cuts();
        assert_eq!(h.antipode_basis(&f("[]")), LinComb::term(f("[]"), qi(-1)));
        let s = h.antipode_basis(&f("[[]]"));
        assert_eq!(s, [(f("[[]]"), qi(-1)), (f("[] []"), qi(1))].into_iter().collect());
        assert!(h.antipode_law_holds_on(&f("[[],[]]")));
        assert_eq!(h.antipode_basis(&Forest::empty()), h.one());
    }

    #[test]
    fn counit_examples() {
        let h = CkHopf::cuts();
        assert_eq!(h.counit(&h.one()), qi(1));
        assert_eq!(h.counit(&LinComb::basis(f("[] []"))), qi(0));
        let x: CkElement = [(Forest::empty(), qi(3)), (f("[[],[]]"), qi(1))].into_iter().collect();
        assert_eq!(h.counit(&x), qi(3));
    }

    #[test]
    fn s_star_id_on_ladder() {
        let h = CkHopf::cuts();
        assert!(h.s_star_id(&f("[[]]")).is_zero());
    }

    #[test]
    fn bplus_cocycle_identity() {
        for n in 0..=5 {
            for u in unlabeled_forests(n) {
                let (l, r) = bplus_cocycle_sides(&u, None);
                assert_eq!(l, r, "{u}");
            }
        }
    }

    #[test]
    fn gl_product_examples() {
        let l2 = t("[[]]");
        assert_eq!(
            gl_product(&l2, &l2),
            [(t("[[],[]]"), qi(1)), (t("[[[]]]"), qi(1))].into_iter().collect()
        );
        let s = t("[[],[[]]]");
        assert_eq!(gl_product(&Tree::dot(), &s), LinComb::basis(s.clone()));
        let p = gl_product(&t("[[],[]]"), &l2);
        let total: Rational = p.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, qi(4));
        assert_eq!(p.coeff(&t("[[],[],[]]")), qi(1));
        assert_eq!(p.coeff(&t("[[],[[]]]")), qi(2));
        assert_eq!(p.coeff(&t("[[[],[]]]")), qi(1));
    }

    #[test]
    fn gl_coproduct_examples() {
        assert_eq!(
            gl_coproduct(&Tree::dot()),
            LinComb::basis(Tensor(Tree::dot(), Tree::dot()))
        );
        let l2 = t("[[]]");
        let d = gl_coproduct(&l2);
        assert_eq!(
            d,
            [
                (Tensor(l2.clone(), Tree::dot()), qi(1)),
                (Tensor(Tree::dot(), l2.clone()), qi(1))
            ]
            .into_iter()
            .collect()
        );
        let d = gl_coproduct(&t("[[],[]]"));
        assert_eq!(d.coeff(&Tensor(l2.clone(), l2)), qi(2));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(gl_ck_basis_pairing(&t("[[],[]]"), &f("[] []")), qi(2));
        assert_eq!(gl_ck_basis_pairing(&t("[[]]"), &f("[] []")), qi(0));
        let (l, r) = gl_product_duality_sides(&t("[[]]"), &t("[[]]"), &f("[] []"));
        assert_eq!((l.clone(), r), (qi(2), qi(2)));
    }

    #[test]
    fn gl_ck_duality_degree_4() {
        for n in 0..=4 {
            for fo in unlabeled_forests(n) {
                for a in 0..=n {
                    for x in unlabeled_trees(a + 1) {
                        for y in unlabeled_trees(n - a + 1) {
                            let (l, r) = gl_product_duality_sides(&x, &y, &fo);
                            assert_eq!(l, r, "<{x} o {y}, {fo}>");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn diamond_examples() {
        let a = parse_planar("[[]]").unwrap();
        let b = parse_planar("[[[]]]").unwrap();
        let p = planar_diamond(&a, &b);
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&parse_planar("[[],[[]]]").unwrap()), qi(1));
        assert_eq!(p.coeff(&parse_planar("[[[]],[]]").unwrap()), qi(1));
        assert_eq!(planar_diamond(&b, &PlanarTree::dot()), LinComb::basis(b.clone()));
        let ch = parse_planar("[[],[]]").unwrap();
        let d = planar_diamond_coproduct(&ch);
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&Tensor(a.clone(), a)), qi(1));
    }

    #[test]
    fn foissy_examples() {
        let d = foissy_coproduct(&OrderedForest::single(parse_planar("[[],[]]").unwrap()));
        let dot = OrderedForest::single(PlanarTree::dot());
        let l2 = OrderedForest::single(PlanarTree::ladder(2));
        assert_eq!(d.coeff(&Tensor(dot.clone(), l2)), qi(2));
        assert_eq!(d.coeff(&Tensor(dot.concat(&dot), dot)), qi(1));
        assert_eq!(d.len(), 4);
        for n in 0..=5 {
            for u in ordered_forests(n) {
                assert!(FoissyHopf.is_coassociative_on(&u), "{u}");
                assert!(FoissyHopf.antipode_law_holds_on(&u), "{u}");
            }
        }
    }

    #[test]
    fn characters() {
        let g = |u: &Forest| infinitesimal_value(&|_: &Tree| q(1, 2), u);
        assert_eq!(char_exp(g, &Forest::empty()).unwrap(), qi(1));
        assert_eq!(char_exp(g, &f("[]")).unwrap(), q(1, 2));
        assert_eq!(char_exp(g, &f("[] []")).unwrap(), q(1, 4));
        let zero = |_: &Forest| Rational::zero();
        assert_eq!(char_exp(zero, &f("[[]]")).unwrap(), qi(0));
        let bad = |u: &Forest| if u.is_empty() { qi(1) } else { qi(0) };
        assert!(matches!(char_exp(bad, &f("[]")), Err(Error::UnitValue { .. })));
        // exp* of an infinitesimal character is a character
        let g = |u: &Forest| infinitesimal_value(&|t: &Tree| qi(t.size() as i64), u);
        for n in 1..=3 {
            for a in unlabeled_forests(n) {
                for b in unlabeled_forests(6 - n) {
                    let ab = char_exp(g, &a.mul(&b)).unwrap();
                    assert_eq!(ab, char_exp(g, &a).unwrap() * char_exp(g, &b).unwrap());
                }
            }
        }
        // (g * g)(•) = 0
        assert_eq!(char_convolution(g, g, &f("[]")), qi(0));
    }

    #[test]
    fn universal_map_identity_and_pi() {
        let h = CkHopf::cuts();
        let x: CkElement = LinComb::basis(f("[[],[]] [[]]"));
        let probes = vec![(None, LinComb::basis(f("[] [[]]")))];
        let y = universal_cocycle_map(&h, |a, v: &CkElement| bplus_lin(v, a), &probes, &x).unwrap();
        assert_eq!(y, x);
        assert_eq!(
            universal_cocycle_map(&h, |a, v: &CkElement| bplus_lin(v, a), &[], &h.one()).unwrap(),
            h.one()
        );

        let sh = WordHopf::shuffle();
        let append = |a: Option<u32>, v: &LinComb<Word>| v.map_basis(|w| w.push(a.unwrap_or(1)));
        let probes = vec![(Some(2), LinComb::basis(Word::new(vec![1, 3])))];
        let tree: CkElement = LinComb::basis(f("f1[f2,f3]"));
        let p = universal_cocycle_map(&sh, append, &probes, &tree).unwrap();
        let expected: LinComb<Word> = [(Word::new(vec![2, 3, 1]), qi(1)), (Word::new(vec![3, 2, 1]), qi(1))]
            .into_iter()
            .collect();
        assert_eq!(p, expected);

        let prepend = |a: Option<u32>, v: &LinComb<Word>| v.map_basis(|w| Word::letter(a.unwrap_or(1)).concat(w));
        let err = universal_cocycle_map(&sh, prepend, &probes, &tree).unwrap_err();
        assert!(matches!(err, Error::CocycleViolation(_)));
    }
}
