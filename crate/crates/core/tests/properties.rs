use std::collections::BTreeSet;

use proptest::prelude::*;

use msgraph::chains::kappa_embed;
use msgraph::coloring::{sigma_total_coloring, verify_coloring, Mode, TotalColoring};
use msgraph::domination::{oracle_is_efficient, se_set, sigma_set, verify_efficient_domination};
use msgraph::structure::{classify_cycle, CycleKind};
use msgraph::{pancake_graph, star_graph, MString, Params, PermGraph};

fn small_params() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((2, 2)), Just((2, 3)), Just((3, 1)), Just((3, 2)), Just((4, 1)), Just((2, 4))]
}

fn vertex_in(k: usize, ell: usize) -> impl Strategy<Value = MString> {
    let p = Params::new(k, ell).unwrap();
    let n = p.vertex_count().unwrap() as usize;
    (0..n).prop_map(move |i| MString::unrank(p, i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_inverts_unrank((k, ell) in small_params(), seed in any::<u64>()) {
        let p = Params::new(k, ell).unwrap();
        let n = p.vertex_count().unwrap() as u64;
        let i = (seed % n) as usize;
        prop_assert_eq!(MString::unrank(p, i).unwrap().rank(), i);
    }

    #[test]
    fn star_moves_are_involutions(v in vertex_in(3, 2)) {
        for (j, w) in v.star_neighbors() {
            prop_assert_ne!(&w, &v);
            prop_assert_eq!(w.transpose(j).unwrap(), v.clone());
        }
    }

    #[test]
    fn prefix_reversal_is_an_involution(v in vertex_in(3, 2), j in 1usize..6) {
        let w = v.prefix_reversal(j).unwrap();
        prop_assert_eq!(w.prefix_reversal(j).unwrap(), v);
    }

    #[test]
    fn kappa_lands_in_the_next_graph(v in vertex_in(3, 2), j in 0usize..4) {
        let w = kappa_embed(&v, j).unwrap();
        prop_assert_eq!(w.params(), Params::new(4, 2).unwrap());
        prop_assert_eq!(&w.entries()[6..], &[j as u8, j as u8][..]);
        let back: Vec<u8> = w.entries()[..6].iter().map(|&x| ((x as usize + 4 - (j + 1) % 4) % 4) as u8).collect();
        prop_assert_eq!(back, v.entries().to_vec());
    }

    #[test]
    fn cycle_type_ignores_rotation_and_reflection(colors in prop::array::uniform6(1u32..6), r in 0usize..6) {
        let mut turned = colors;
        turned.rotate_left(r);
        let mut mirrored = turned;
        mirrored.reverse();
        let kind = classify_cycle(colors);
        prop_assert_eq!(classify_cycle(turned), kind);
        prop_assert_eq!(classify_cycle(mirrored), kind);
    }

    #[test]
    fn verifier_agrees_with_oracle(mask in any::<u32>(), ell in 1usize..3) {
        let g = star_graph(3, 1).unwrap();
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let cert = verify_efficient_domination(&g.graph, &set, ell).unwrap();
        prop_assert_eq!(cert.pass, oracle_is_efficient(&g.graph, &set, ell));
    }

    #[test]
    fn verifier_agrees_with_oracle_on_desargues(mask in any::<u32>(), ell in 1usize..4) {
        let g = star_graph(2, 3).unwrap();
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let cert = verify_efficient_domination(&g.graph, &set, ell).unwrap();
        prop_assert_eq!(cert.pass, oracle_is_efficient(&g.graph, &set, ell));
    }
}

fn round_trip(g: &PermGraph) -> PermGraph {
    PermGraph::from_edge_list(&g.to_edge_list()).unwrap()
}

#[test]
fn graphs_are_regular_of_degree_k_minus_one_times_l() {
    for (k, ell) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (2, 4), (3, 3), (4, 2)] {
        let g = star_graph(k, ell).unwrap();
        let degrees: BTreeSet<usize> = (0..g.n()).map(|v| g.graph.degree(v)).collect();
        assert_eq!(degrees, BTreeSet::from([(k - 1) * ell]), "ST({k},{ell})");
    }
}

#[test]
fn first_symbol_sets_are_efficient_everywhere() {
    for (k, ell) in [(2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (2, 4), (3, 3)] {
        let g = star_graph(k, ell).unwrap();
        for i in 0..k {
            let cert = verify_efficient_domination(&g.graph, &se_set(&g, i).unwrap(), ell).unwrap();
            assert!(cert.pass, "S_{i} of ST({k},{ell})");
        }
    }
}

#[test]
fn edge_lists_round_trip() {
    for g in [star_graph(2, 3).unwrap(), star_graph(3, 2).unwrap(), pancake_graph(3, 2).unwrap()] {
        let h = round_trip(&g);
        assert_eq!(h.graph.edges(), g.graph.edges());
        assert_eq!(h.vertices, g.vertices);
        assert_eq!(h.to_edge_list(), g.to_edge_list());
    }
}

#[test]
fn coloring_text_round_trips() {
    let g = star_graph(3, 2).unwrap();
    let tc = sigma_total_coloring(&g).unwrap();
    let back = TotalColoring::from_text(&g.graph, &tc.to_text(&g.graph)).unwrap();
    assert_eq!(back.vertex_colors, tc.vertex_colors);
    assert_eq!(back.edge_colors, tc.edge_colors);
    assert!(verify_coloring(&g.graph, &back, Mode::Efficient).unwrap().pass);
}

#[test]
fn sigma_classes_match_the_coloring() {
    for k in 2..=4 {
        let g = star_graph(k, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        for i in 1..2 * k {
            assert_eq!(tc.class(i as u32), sigma_set(&g, i).unwrap());
        }
    }
}

#[test]
fn type_one_needs_three_alternating_colors() {
    assert_eq!(classify_cycle([2, 3, 4, 2, 3, 4]), CycleKind::Type1([2, 3, 4]));
    assert_eq!(classify_cycle([1, 5, 1, 5, 1, 5]), CycleKind::Type2([1, 5]));
    assert_eq!(classify_cycle([1, 2, 1, 3, 1, 2]), CycleKind::Other);
}
