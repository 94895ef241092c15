//! Rooted trees, planar rooted trees and forests, labeled and unlabeled.
//!
//! Non-planar trees are stored canonically: children are kept sorted in the
//! canonical tree order (vertex count, then label weight, then root label,
//! then children lexicographically), so structural equality is isomorphism.
//! A label `k` stands for the letter `f_k`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::words::Word;

/// Canonical non-planar rooted tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    label: Option<u32>,
    children: Vec<Tree>,
    size: usize,
    weight: u32,
}

impl Tree {
    /// Builds a tree and puts it in canonical form.
    pub fn node(label: Option<u32>, mut children: Vec<Tree>) -> Tree {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let weight = label.unwrap_or(0) + children.iter().map(|c| c.weight).sum::<u32>();
        Tree {
            label,
            children,
            size,
            weight,
        }
    }

    /// The unlabeled single vertex `•`.
    pub fn dot() -> Tree {
        Tree::node(None, Vec::new())
    }

    /// The single vertex labeled `f_k`.
    pub fn leaf(k: u32) -> Tree {
        Tree::node(Some(k), Vec::new())
    }

    /// Unlabeled ladder with `n ≥ 1` vertices.
    pub fn ladder(n: usize) -> Tree {
        assert!(n >= 1, "a ladder has at least one vertex");
        (1..n).fold(Tree::dot(), |t, _| Tree::node(None, vec![t]))
    }

    /// Labeled ladder `B+_{a_m}(… B+_{a_2}(•_{a_1}))` for the word `a_1 … a_m`:
    /// the first letter is the deepest vertex and the last letter the root.
    pub fn labeled_ladder(w: &Word) -> Result<Tree> {
        let mut letters = w.letters().iter();
        let first = *letters
            .next()
            .ok_or_else(|| Error::Invalid("labeled ladder of the empty word".into()))?;
        Ok(letters.fold(Tree::leaf(first), |t, &k| Tree::node(Some(k), vec![t])))
    }

    pub fn label(&self) -> Option<u32> {
        self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Vertex count `|t|`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Sum of labels over all vertices.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.label.is_some() && self.children.iter().all(Tree::is_fully_labeled)
    }

    pub fn is_unlabeled(&self) -> bool {
        self.label.is_none() && self.children.iter().all(Tree::is_unlabeled)
    }

    /// Inverse of [`bplus`]: the forest of root branches.
    pub fn strip_root(&self) -> Forest {
        Forest::new(self.children.clone())
    }

    /// Drops every label.
    pub fn unlabeled(&self) -> Tree {
        Tree::node(None, self.children.iter().map(Tree::unlabeled).collect())
    }

    /// Replaces labels vertex by vertex in preorder of the canonical form.
    fn relabel_preorder(&self, labels: &mut impl Iterator<Item = u32>) -> Tree {
        let label = labels.next();
        let children = self.children.iter().map(|c| c.relabel_preorder(labels)).collect();
        Tree::node(label, children)
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.weight.cmp(&other.weight))
            .then_with(|| self.label.cmp(&other.label))
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_vertex(f: &mut fmt::Formatter<'_>, label: Option<u32>, children: &[impl fmt::Display]) -> fmt::Result {
    if let Some(k) = label {
        write!(f, "f{k}")?;
        if children.is_empty() {
            return Ok(());
        }
    }
    f.write_str("[")?;
    for (i, c) in children.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("]")
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vertex(f, self.label, &self.children)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A commutative monomial of trees. The empty forest `I` is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(mut trees: Vec<Tree>) -> Forest {
        trees.sort();
        Forest { trees }
    }

    pub fn empty() -> Forest {
        Forest::default()
    }

    pub fn single(t: Tree) -> Forest {
        Forest { trees: vec![t] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn size(&self) -> usize {
        self.trees.iter().map(Tree::size).sum()
    }

    pub fn weight(&self) -> u32 {
        self.trees.iter().map(Tree::weight).sum()
    }

    pub fn mul(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::new(trees)
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.trees.iter().all(Tree::is_fully_labeled)
    }

    pub fn unlabeled(&self) -> Forest {
        Forest::new(self.trees.iter().map(Tree::unlabeled).collect())
    }

    /// Distinct trees with multiplicities, in canonical order.
    pub fn grouped(&self) -> Vec<(&Tree, usize)> {
        let mut out: Vec<(&Tree, usize)> = Vec::new();
        for t in &self.trees {
            match out.last_mut() {
                Some((last, m)) if *last == t => *m += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest::single(t)
    }
}

impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| self.trees.cmp(&other.trees))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("I");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `B+` (or `B+_a` with a label): grafts the roots of `u` onto a new root.
pub fn bplus(u: &Forest, label: Option<u32>) -> Tree {
    Tree::node(label, u.trees.clone())
}

/// `t ∘ u`: grafts the roots of the trees of `u` onto the root of `t`.
pub fn graft(t: &Tree, u: &Forest) -> Tree {
    let mut children = t.children.clone();
    children.extend(u.trees.iter().cloned());
    Tree::node(t.label, children)
}

/// Order of the automorphism group of a tree.
pub fn sym_order(t: &Tree) -> u64 {
    forest_sym_order(&t.strip_root())
}

/// `Π m_j! · |sym(t_j)|^{m_j}` over the distinct trees of a forest.
pub fn forest_sym_order(u: &Forest) -> u64 {
    u.grouped()
        .into_iter()
        .map(|(t, m)| {
            let fact: u64 = (1..=m as u64).product();
            fact * sym_order(t).pow(m as u32)
        })
        .product()
}

/// Number of vertex permutations preserving a labeled forest; satisfies
/// `per(I) = 1`, `per(B+_a(u)) = per(u)` and `per(Π t_j^{i_j}) = Π i_j! per(t_j)^{i_j}`.
pub fn per_count(u: &Forest) -> u64 {
    forest_sym_order(u)
}

/// A non-trivial admissible cut together with its pruned forest `P_c` and
/// trunk `R_c`. Edges are named by their lower vertex in preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleCut {
    pub edges: Vec<usize>,
    pub pruned: Forest,
    pub trunk: Tree,
}

struct CutOption {
    edges: Vec<usize>,
    pruned: Vec<Tree>,
    trunk: Tree,
}

fn all_cuts(t: &Tree, index: usize) -> Vec<CutOption> {
    // Each child is either cut off whole, or kept with any cut of its subtree.
    let mut partial = vec![CutOption {
        edges: Vec::new(),
        pruned: Vec::new(),
        trunk: Tree::dot(),
    }];
    let mut kept: Vec<Vec<Tree>> = vec![Vec::new()];
    let mut child_index = index + 1;
    for child in &t.children {
        let mut options: Vec<(Vec<usize>, Vec<Tree>, Option<Tree>)> =
            vec![(vec![child_index], vec![child.clone()], None)];
        for c in all_cuts(child, child_index) {
            options.push((c.edges, c.pruned, Some(c.trunk)));
        }
        let mut next_partial = Vec::new();
        let mut next_kept = Vec::new();
        for (p, k) in partial.iter().zip(&kept) {
            for (edges, pruned, trunk) in &options {
                let mut e = p.edges.clone();
                e.extend(edges);
                let mut pr = p.pruned.clone();
                pr.extend(pruned.iter().cloned());
                let mut kk = k.clone();
                if let Some(tr) = trunk {
                    kk.push(tr.clone());
                }
                next_partial.push(CutOption {
                    edges: e,
                    pruned: pr,
                    trunk: Tree::dot(),
                });
                next_kept.push(kk);
            }
        }
        partial = next_partial;
        kept = next_kept;
        child_index += child.size;
    }
    partial
        .into_iter()
        .zip(kept)
        .map(|(p, k)| CutOption {
            edges: p.edges,
            pruned: p.pruned,
            trunk: Tree::node(t.label, k),
        })
        .collect()
}

/// All non-trivial admissible cuts of `t`.
pub fn admissible_cuts(t: &Tree) -> Vec<AdmissibleCut> {
    all_cuts(t, 0)
        .into_iter()
        .filter(|c| !c.edges.is_empty())
        .map(|c| AdmissibleCut {
            edges: c.edges,
            pruned: Forest::new(c.pruned),
            trunk: c.trunk,
        })
        .collect()
}

/// A forest flattened to vertex arrays (preorder, tree by tree).
#[derive(Clone, Debug)]
pub(crate) struct FlatForest {
    pub labels: Vec<Option<u32>>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl FlatForest {
    pub fn new(u: &Forest) -> FlatForest {
        let mut flat = FlatForest {
            labels: Vec::new(),
            parent: Vec::new(),
            children: Vec::new(),
        };
        for t in &u.trees {
            flat.push(t, None);
        }
        flat
    }

    pub fn of_tree(t: &Tree) -> FlatForest {
        FlatForest::new(&Forest::single(t.clone()))
    }

    fn push(&mut self, t: &Tree, parent: Option<usize>) -> usize {
        let v = self.labels.len();
        self.labels.push(t.label);
        self.parent.push(parent);
        self.children.push(Vec::new());
        if let Some(p) = parent {
            self.children[p].push(v);
        }
        for c in &t.children {
            self.push(c, Some(v));
        }
        v
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Subtree at `v` restricted to the vertex set `mask`, with extra
    /// branches grafted at chosen vertices.
    pub fn build(&self, v: usize, mask: u64, extra: &[Vec<Tree>]) -> Tree {
        let mut children: Vec<Tree> = self.children[v]
            .iter()
            .filter(|&&c| mask & (1 << c) != 0)
            .map(|&c| self.build(c, mask, extra))
            .collect();
        if let Some(e) = extra.get(v) {
            children.extend(e.iter().cloned());
        }
        Tree::node(self.labels[v], children)
    }

    /// The forest induced on `mask`; its components are rooted at the
    /// vertices of `mask` whose parent lies outside it.
    pub fn induced(&self, mask: u64) -> Forest {
        let roots = (0..self.len())
            .filter(|&v| mask & (1 << v) != 0)
            .filter(|&v| self.parent[v].is_none_or(|p| mask & (1 << p) == 0));
        Forest::new(roots.map(|v| self.build(v, mask, &[])).collect())
    }

    pub fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

/// The words `w(>)` of all total orders extending the tree order of a
/// labeled forest. Every vertex is read after all of its descendants, so a
/// ladder `B+_{a_m}(… B+_{a_2}(•_{a_1}))` yields `a_1 … a_m`. One entry per
/// linear extension, so repeated words are kept.
pub fn linear_extensions(u: &Forest) -> Result<Vec<Word>> {
    if !u.is_fully_labeled() {
        return Err(Error::UnlabeledVertex(u.to_string()));
    }
    let flat = FlatForest::new(u);
    assert!(flat.len() < 64, "forest too large for linear extension enumeration");
    let mut memo: HashMap<u64, Vec<Vec<u32>>> = HashMap::new();
    let words = extensions(&flat, flat.full_mask(), &mut memo);
    Ok(words
        .into_iter()
        .map(|mut w| {
            w.reverse();
            Word::new(w)
        })
        .collect())
}

// Builds the words back to front: the last letter is a vertex with no
// remaining ancestor. Returned words are reversed.
fn extensions(flat: &FlatForest, mask: u64, memo: &mut HashMap<u64, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
    if mask == 0 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut out = Vec::new();
    for v in 0..flat.len() {
        if mask & (1 << v) == 0 {
            continue;
        }
        if flat.parent[v].is_some_and(|p| mask & (1 << p) != 0) {
            continue;
        }
        let label = flat.labels[v].expect("checked fully labeled");
        for mut rest in extensions(flat, mask & !(1 << v), memo) {
            rest.insert(0, label);
            out.push(rest);
        }
    }
    memo.insert(mask, out.clone());
    out
}

fn multisets(pool: &[Tree], grade: impl Fn(&Tree) -> usize + Copy, n: usize, start: usize) -> Vec<Vec<Tree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in start..pool.len() {
        let g = grade(&pool[i]);
        if g == 0 || g > n {
            continue;
        }
        for mut rest in multisets(pool, grade, n - g, i) {
            rest.insert(0, pool[i].clone());
            out.push(rest);
        }
    }
    out
}

/// All unlabeled trees with `n` vertices, canonical order.
pub fn unlabeled_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<Tree> = unlabeled_forests(n - 1).into_iter().map(|f| bplus(&f, None)).collect();
    out.sort();
    out
}

/// All unlabeled forests with `n` vertices, canonical order.
pub fn unlabeled_forests(n: usize) -> Vec<Forest> {
    let pool: Vec<Tree> = (1..=n).flat_map(unlabeled_trees).collect();
    let mut out: Vec<Forest> = multisets(&pool, Tree::size, n, 0)
        .into_iter()
        .map(Forest::new)
        .collect();
    out.sort();
    out
}

/// All labeled trees of label weight exactly `w`.
pub fn labeled_trees(w: u32) -> Vec<Tree> {
    let mut out = Vec::new();
    for k in 1..=w {
        for f in labeled_forests(w - k) {
            out.push(bplus(&f, Some(k)));
        }
    }
    out.sort();
    out
}

/// All labeled forests of label weight exactly `w`.
pub fn labeled_forests(w: u32) -> Vec<Forest> {
    let pool: Vec<Tree> = (1..=w).flat_map(labeled_trees).collect();
    let mut out: Vec<Forest> = multisets(&pool, |t| t.weight() as usize, w as usize, 0)
        .into_iter()
        .map(Forest::new)
        .collect();
    out.sort();
    out
}

/// All trees with `n` vertices. Labeled mode returns every label assignment
/// of total weight at most `max_weight`.
pub fn enumerate_trees(n: usize, labeled: bool, max_weight: Option<u32>) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::Invalid("trees have at least one vertex".into()));
    }
    if !labeled {
        return Ok(unlabeled_trees(n));
    }
    let max = max_weight.ok_or(Error::MissingBound("labeled tree enumeration"))?;
    let mut out: Vec<Tree> = (1..=max).flat_map(labeled_trees).filter(|t| t.size() == n).collect();
    out.sort();
    Ok(out)
}

/// Every assignment of labels to the vertices of an unlabeled forest with
/// total weight at most `max_weight`, one entry per assignment (so
/// assignments related by a symmetry appear separately).
pub fn label_assignments(u: &Forest, max_weight: u32) -> Vec<Forest> {
    let n: usize = u.size();
    let mut out = Vec::new();
    let mut labels = vec![1u32; n];
    if (n as u32) > max_weight {
        return out;
    }
    loop {
        let mut it = labels.iter().copied();
        out.push(Forest::new(
            u.trees.iter().map(|t| t.relabel_preorder(&mut it)).collect(),
        ));
        // Next assignment in lexicographic order with sum ≤ max_weight.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            labels[i] += 1;
            if labels.iter().sum::<u32>() <= max_weight {
                break;
            }
            labels[i] = 1;
        }
    }
}

/// Planar rooted tree: children are an ordered sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarTree {
    label: Option<u32>,
    children: Vec<PlanarTree>,
    size: usize,
}

impl PlanarTree {
    pub fn node(label: Option<u32>, children: Vec<PlanarTree>) -> PlanarTree {
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        PlanarTree { label, children, size }
    }

    pub fn dot() -> PlanarTree {
        PlanarTree::node(None, Vec::new())
    }

    pub fn ladder(n: usize) -> PlanarTree {
        assert!(n >= 1, "a ladder has at least one vertex");
        (1..n).fold(PlanarTree::dot(), |t, _| PlanarTree::node(None, vec![t]))
    }

    pub fn label(&self) -> Option<u32> {
        self.label
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Forgets the planar embedding.
    pub fn to_tree(&self) -> Tree {
        Tree::node(self.label, self.children.iter().map(PlanarTree::to_tree).collect())
    }

    /// The planar tree with children in canonical order.
    pub fn from_tree(t: &Tree) -> PlanarTree {
        PlanarTree::node(t.label, t.children.iter().map(PlanarTree::from_tree).collect())
    }

    /// Balanced bracket representation: each root branch `b` contributes
    /// `<BBR(b)>`; the single vertex is the empty string.
    pub fn to_bbr(&self) -> String {
        let mut s = String::new();
        self.write_bbr(&mut s);
        s
    }

    fn write_bbr(&self, s: &mut String) {
        for c in &self.children {
            s.push('<');
            c.write_bbr(s);
            s.push('>');
        }
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.label.cmp(&other.label))
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vertex(f, self.label, &self.children)
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered (noncommutative) forest of planar trees.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedForest(pub Vec<PlanarTree>);

impl OrderedForest {
    pub fn empty() -> Self {
        OrderedForest(Vec::new())
    }

    pub fn single(t: PlanarTree) -> Self {
        OrderedForest(vec![t])
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(PlanarTree::size).sum()
    }

    pub fn concat(&self, other: &OrderedForest) -> OrderedForest {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        OrderedForest(v)
    }

    pub fn to_forest(&self) -> Forest {
        Forest::new(self.0.iter().map(PlanarTree::to_tree).collect())
    }
}

impl Ord for OrderedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for OrderedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All planar trees with `n` vertices.
pub fn planar_trees(n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<PlanarTree> = ordered_forests(n - 1)
        .into_iter()
        .map(|f| PlanarTree::node(None, f.0))
        .collect();
    out.sort();
    out
}

/// All ordered forests of planar trees with `n` vertices.
pub fn ordered_forests(n: usize) -> Vec<OrderedForest> {
    if n == 0 {
        return vec![OrderedForest::empty()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for t in planar_trees(first) {
            for rest in ordered_forests(n - first) {
                let mut v = vec![t.clone()];
                v.extend(rest.0);
                out.push(OrderedForest(v));
            }
        }
    }
    out.sort();
    out
}

/// The distinct planar embeddings of a tree (its preimages under
/// forgetting the planar structure).
pub fn planar_embeddings(t: &Tree) -> Vec<PlanarTree> {
    let child_options: Vec<Vec<PlanarTree>> = t.children.iter().map(planar_embeddings).collect();
    let mut out = BTreeSet::new();
    let k = t.children.len();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut seqs: Vec<Vec<PlanarTree>> = vec![Vec::new()];
        for &i in &perm {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    child_options[i].iter().map(move |c| {
                        let mut s2 = s.clone();
                        s2.push(c.clone());
                        s2
                    })
                })
                .collect();
        }
        for s in seqs {
            out.insert(PlanarTree::node(t.label, s));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.into_iter().collect()
}

fn next_permutation(v: &mut [usize]) -> bool {
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

/// Non-trivial admissible cuts of a planar tree, with the pruned subtrees
/// listed in left-to-right preorder.
pub fn planar_admissible_cuts(t: &PlanarTree) -> Vec<(OrderedForest, PlanarTree)> {
    planar_cuts(t)
        .into_iter()
        .filter(|(cut, _, _)| *cut)
        .map(|(_, p, r)| (OrderedForest(p), r))
        .collect()
}

fn planar_cuts(t: &PlanarTree) -> Vec<(bool, Vec<PlanarTree>, PlanarTree)> {
    let mut partial: Vec<(bool, Vec<PlanarTree>, Vec<PlanarTree>)> = vec![(false, Vec::new(), Vec::new())];
    for child in &t.children {
        let mut options: Vec<(bool, Vec<PlanarTree>, Option<PlanarTree>)> = vec![(true, vec![child.clone()], None)];
        for (cut, p, r) in planar_cuts(child) {
            options.push((cut, p, Some(r)));
        }
        let mut next = Vec::new();
        for (cut, pruned, kept) in &partial {
            for (c2, p2, r2) in &options {
                let mut pr = pruned.clone();
                pr.extend(p2.iter().cloned());
                let mut kk = kept.clone();
                if let Some(r) = r2 {
                    kk.push(r.clone());
                }
                next.push((*cut || *c2, pr, kk));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(cut, p, k)| (cut, p, PlanarTree::node(t.label, k)))
        .collect()
}

/// Parses a balanced bracket string over `<` and `>`.
pub fn bbr_parse(s: &str) -> Result<PlanarTree> {
    let bytes = s.as_bytes();
    let mut stack: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'<' => stack.push(Vec::new()),
            b'>' => {
                if stack.len() < 2 {
                    return Err(Error::Parse {
                        offset: i,
                        message: "unmatched '>'".into(),
                    });
                }
                let children = stack.pop().expect("non-empty stack");
                stack
                    .last_mut()
                    .expect("outer level")
                    .push(PlanarTree::node(None, children));
            }
            _ => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {:?}", b as char),
                })
            }
        }
    }
    if stack.len() != 1 {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: "unbalanced '<'".into(),
        });
    }
    Ok(PlanarTree::node(None, stack.pop().expect("root level")))
}

pub fn bbr_print(t: &PlanarTree) -> String {
    t.to_bbr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cherry() -> Tree {
        bplus(&Forest::new(vec![Tree::dot(), Tree::dot()]), None)
    }

    #[test]
    fn canonical_children_order() {
        let a = Tree::node(None, vec![cherry(), Tree::dot()]);
        let b = Tree::node(None, vec![Tree::dot(), cherry()]);
        assert_eq!(a, b);
        assert_eq!(Tree::node(None, vec![]), Tree::dot());
    }

    #[test]
    fn display_grammar() {
        assert_eq!(cherry().to_string(), "[[],[]]");
        assert_eq!(Tree::ladder(3).to_string(), "[[[]]]");
        assert_eq!(Tree::node(Some(2), vec![Tree::leaf(1)]).to_string(), "f2[f1]");
        assert_eq!(Forest::empty().to_string(), "I");
        assert_eq!(Forest::new(vec![Tree::dot(), Tree::ladder(2)]).to_string(), "[] [[]]");
    }

    #[test]
    fn bplus_examples() {
        assert_eq!(bplus(&Forest::empty(), None), Tree::dot());
        assert_eq!(bplus(&Forest::new(vec![Tree::dot(), Tree::dot()]), None), cherry());
        let t = bplus(&Forest::single(Tree::leaf(1)), Some(2));
        assert_eq!(t.weight(), 3);
        assert_eq!(t.label(), Some(2));
        assert_eq!(t.children(), &[Tree::leaf(1)]);
    }

    #[test]
    fn graft_examples() {
        let a = Tree::leaf(1);
        let b = Tree::leaf(2);
        assert_eq!(
            graft(&a, &Forest::single(b.clone())),
            bplus(&Forest::single(b), Some(1))
        );
        assert_eq!(graft(&cherry(), &Forest::empty()), cherry());
        assert!(matches!(Tree::labeled_ladder(&Word::empty()), Err(Error::Invalid(_))));
    }

    #[test]
    fn sym_and_per() {
        assert_eq!(sym_order(&Tree::dot()), 1);
        assert_eq!(sym_order(&cherry()), 2);
        let corolla = bplus(&Forest::new(vec![Tree::dot(); 3]), None);
        assert_eq!(sym_order(&corolla), 6);
        assert_eq!(per_count(&Forest::empty()), 1);
        assert_eq!(per_count(&Forest::new(vec![Tree::leaf(1), Tree::leaf(1)])), 2);
        assert_eq!(per_count(&Forest::new(vec![Tree::leaf(1), Tree::leaf(2)])), 1);
    }

    #[test]
    fn cuts_examples() {
        let l2 = Tree::ladder(2);
        let cuts = admissible_cuts(&l2);
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].pruned, Forest::single(Tree::dot()));
        assert_eq!(cuts[0].trunk, Tree::dot());

        let cuts = admissible_cuts(&cherry());
        assert_eq!(cuts.len(), 3);
        let l2_trunks = cuts
            .iter()
            .filter(|c| c.trunk == l2 && c.pruned == Forest::single(Tree::dot()))
            .count();
        assert_eq!(l2_trunks, 2);
        assert!(cuts
            .iter()
            .any(|c| c.trunk == Tree::dot() && c.pruned == Forest::new(vec![Tree::dot(), Tree::dot()])));

        assert!(admissible_cuts(&Tree::dot()).is_empty());
    }

    #[test]
    fn cut_edges_are_admissible() {
        for t in unlabeled_trees(6) {
            let flat = FlatForest::of_tree(&t);
            for c in admissible_cuts(&t) {
                // no cut edge lies below another cut edge
                for &e in &c.edges {
                    let mut v = flat.parent[e];
                    while let Some(p) = v {
                        assert!(!c.edges.contains(&p), "{t}: nested cut edges");
                        v = flat.parent[p];
                    }
                }
                assert_eq!(c.pruned.size() + c.trunk.size(), t.size());
            }
        }
    }

    #[test]
    fn linear_extension_examples() {
        let ladder = Tree::labeled_ladder(&Word::new(vec![1, 2])).unwrap();
        assert_eq!(linear_extensions(&ladder.into()).unwrap(), vec![Word::new(vec![1, 2])]);

        let ch = Tree::node(Some(1), vec![Tree::leaf(2), Tree::leaf(3)]);
        let mut words = linear_extensions(&ch.into()).unwrap();
        words.sort();
        assert_eq!(words, vec![Word::new(vec![2, 3, 1]), Word::new(vec![3, 2, 1])]);

        assert_eq!(linear_extensions(&Tree::leaf(4).into()).unwrap(), vec![Word::letter(4)]);
        assert!(matches!(
            linear_extensions(&Tree::dot().into()),
            Err(Error::UnlabeledVertex(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(unlabeled_trees(1), vec![Tree::dot()]);
        let three = unlabeled_trees(3);
        assert_eq!(
            three,
            vec![Tree::ladder(3), cherry()]
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        assert_eq!(three.len(), 2);
        let counts: Vec<usize> = (1..=7).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48]);
        assert!(matches!(enumerate_trees(3, true, None), Err(Error::MissingBound(_))));
        // two vertices, weight ≤ 3: labels (1,1), (1,2), (2,1)
        assert_eq!(enumerate_trees(2, true, Some(3)).unwrap().len(), 3);
    }

    #[test]
    fn label_assignment_counts() {
        let l2 = Forest::single(Tree::ladder(2));
        assert_eq!(label_assignments(&l2, 3).len(), 3);
        let ch = Forest::single(cherry());
        // 3 vertices, sum ≤ 4: (1,1,1) plus three ways to place a 2
        assert_eq!(label_assignments(&ch, 4).len(), 4);
        assert!(label_assignments(&ch, 2).is_empty());
    }

    #[test]
    fn bbr_examples() {
        assert_eq!(bbr_parse("").unwrap(), PlanarTree::dot());
        assert_eq!(bbr_parse("<>").unwrap(), PlanarTree::ladder(2));
        let ch = bbr_parse("<><>").unwrap();
        assert_eq!(ch.children().len(), 2);
        assert_eq!(bbr_print(&ch), "<><>");
        let err = bbr_parse("<<>").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                offset: 3,
                message: "unbalanced '<'".into()
            }
        );
        assert!(matches!(bbr_parse("<>>"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn planar_counts_and_embeddings() {
        // Catalan numbers
        let counts: Vec<usize> = (1..=6).map(|n| planar_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(planar_embeddings(&cherry()).len(), 1);
        let t = bplus(&Forest::new(vec![Tree::dot(), Tree::ladder(2)]), None);
        assert_eq!(planar_embeddings(&t).len(), 2);
    }
}
