use proptest::prelude::*;
use proptest::sample::Index;

use hopf_core::algebra::{qi, Bialgebra, HopfAlgebra, LinComb, Rational, Tensor};
use hopf_core::frame::{alpha_u, alpha_u_integral, forest_exp, forest_log, ForestFunctional};
use hopf_core::morphisms::pi;
use hopf_core::parse::{parse_forest, parse_tree, parse_word};
use hopf_core::tree_hopf::{poset_coproduct, CkHopf};
use hopf_core::trees::{bplus, Forest, Tree};
use hopf_core::words::{
    hoffman_psi, hoffman_tau, quasi_shuffle, quasi_shuffle_elements, shuffle, word_pairing, HoffmanPairing, Word,
    WordElement, WordHopf,
};

fn build(i: usize, labels: &[u32], children: &[Vec<usize>]) -> Tree {
    Tree::node(
        Some(labels[i]),
        children[i].iter().map(|&c| build(c, labels, children)).collect(),
    )
}

/// Labeled trees with up to `max` vertices and labels in 1..=3.
fn tree(max: usize) -> impl Strategy<Value = Tree> {
    prop::collection::vec((any::<Index>(), 1u32..=3), 1..=max).prop_map(|spec| {
        let labels: Vec<u32> = spec.iter().map(|(_, l)| *l).collect();
        let mut children = vec![Vec::new(); spec.len()];
        for (i, (p, _)) in spec.iter().enumerate().skip(1) {
            children[p.index(i)].push(i);
        }
        build(0, &labels, &children)
    })
}

fn forest(max_trees: usize, max_vertices: usize) -> impl Strategy<Value = Forest> {
    prop::collection::vec(tree(max_vertices), 0..=max_trees).prop_map(Forest::new)
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=3, 0..=max_len).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ck_axioms_on_random_forests(u in forest(2, 3)) {
        let h = CkHopf::cuts();
        prop_assert!(h.is_coassociative_on(&u));
        prop_assert!(h.satisfies_counit_on(&u));
        prop_assert!(h.antipode_law_holds_on(&u));
        prop_assert_eq!(poset_coproduct(&u), h.coproduct_basis(&u));
    }

    #[test]
    fn ck_coproduct_is_multiplicative(u in forest(1, 3), v in forest(1, 3)) {
        prop_assert!(CkHopf::cuts().coproduct_is_multiplicative_on(&u, &v));
    }

    #[test]
    fn pi_is_multiplicative_and_grafts(u in forest(2, 3), v in forest(1, 3), a in 1u32..=3) {
        let lhs = pi(&u.mul(&v)).unwrap();
        prop_assert_eq!(lhs, pi(&u).unwrap().bilinear(&pi(&v).unwrap(), shuffle));
        let grafted = pi(&Forest::single(bplus(&u, Some(a)))).unwrap();
        prop_assert_eq!(grafted, pi(&u).unwrap().map_basis(|w| w.push(a)));
    }

    #[test]
    fn alpha_u_routes_agree_and_multiply(u in forest(3, 3)) {
        let a = alpha_u(&u).unwrap();
        prop_assert_eq!(a.clone(), alpha_u_integral(&u).unwrap());
        let prod: Rational = u.trees().iter().map(|t| alpha_u(&Forest::single(t.clone())).unwrap()).product();
        prop_assert_eq!(a, prod);
    }

    #[test]
    fn print_parse_round_trip(t in tree(6), u in forest(3, 3), w in word(5)) {
        prop_assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
        prop_assert_eq!(parse_forest(&u.to_string()).unwrap(), u);
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn shuffle_products_commute(x in word(3), y in word(3)) {
        prop_assert_eq!(shuffle(&x, &y), shuffle(&y, &x));
        let a = HoffmanPairing::Additive;
        prop_assert_eq!(quasi_shuffle(&x, &y, a), quasi_shuffle(&y, &x, a));
    }

    #[test]
    fn quasi_shuffle_is_associative(x in word(2), y in word(2), z in word(2)) {
        let a = HoffmanPairing::Additive;
        let b = |w: &Word| LinComb::basis(w.clone());
        let left = quasi_shuffle_elements(&quasi_shuffle(&x, &y, a), &b(&z), a);
        let right = quasi_shuffle_elements(&b(&x), &quasi_shuffle(&y, &z, a), a);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn word_hopf_axioms(w in word(5)) {
        for h in [WordHopf::shuffle(), WordHopf::quasi_shuffle()] {
            prop_assert!(h.is_coassociative_on(&w));
            prop_assert!(h.antipode_law_holds_on(&w));
        }
    }

    #[test]
    fn hoffman_maps_are_inverse_and_multiplicative(x in word(3), y in word(2)) {
        let a = HoffmanPairing::Additive;
        let tau = |e: &WordElement| e.flat_map(|v| hoffman_tau(v, a));
        let psi = |e: &WordElement| e.flat_map(|v| hoffman_psi(v, a));
        let bx: WordElement = LinComb::basis(x.clone());
        prop_assert_eq!(psi(&tau(&bx)), bx.clone());
        prop_assert_eq!(tau(&psi(&bx)), bx.clone());
        let by: WordElement = LinComb::basis(y.clone());
        prop_assert_eq!(tau(&shuffle(&x, &y)), quasi_shuffle_elements(&tau(&bx), &tau(&by), a));
    }

    #[test]
    fn deconcatenation_is_dual_to_concatenation(x in word(3), y in word(3)) {
        let d = WordHopf::shuffle().coproduct_basis(&x.concat(&y));
        prop_assert_eq!(d.coeff(&Tensor(x.clone(), y.clone())), qi(1));
        let dual = LinComb::basis(x.concat(&y).dual());
        prop_assert_eq!(word_pairing(&LinComb::basis(x.concat(&y)), &dual), qi(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn exp_and_log_are_inverse(values in prop::collection::vec(-5i64..=5, 200)) {
        let mut i = 0;
        let g = ForestFunctional::from_fn(4, |u| {
            i += 1;
            Ok(if u.is_empty() { qi(0) } else { qi(values[i % values.len()]) })
        })
        .unwrap();
        let e = forest_exp(&g).unwrap();
        prop_assert_eq!(forest_log(&e).unwrap(), g);
    }
}

#[test]
fn exp_log_round_trip_on_alpha_u() {
    let a = hopf_core::frame::alpha_u_functional(5);
    assert_eq!(forest_exp(&forest_log(&a).unwrap()).unwrap(), a);
}
