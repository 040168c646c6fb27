use std::collections::BTreeSet;

use proptest::prelude::*;

use flatspec::crystal::{canonical_key, expand_holonomy, is_orientable, BieberbachGroup, GroupSpec};
use flatspec::families::{catalog, hantzsche_wendt_examples, kn_arrays, kn_family, CATALOG_NAMES};
use flatspec::graph::{canonical_form, graph_of, graphs_isomorphic, GhwGraph};
use flatspec::spectra::{SpectralEngine, SpectrumMode};

fn catalog_groups() -> Vec<BieberbachGroup> {
    CATALOG_NAMES.iter().map(|n| catalog(n).unwrap()).collect()
}

#[test]
fn no_representative_is_fixed_point_free() {
    let mut groups = catalog_groups();
    for n in 2..=6 {
        groups.extend(kn_family(n).unwrap());
    }
    for g in &groups {
        for e in g.elements() {
            assert!(e.linear().fixed_space_dim() >= 1, "{}: {e}", g.label());
        }
    }
}

#[test]
fn kn_members_have_first_betti_number_one() {
    for n in 2..=6 {
        for g in kn_family(n).unwrap() {
            let b = SpectralEngine::new(&g).betti_numbers();
            assert_eq!(b[0], 1u32.into());
            assert_eq!(b[1], 1u32.into(), "{}", g.label());
        }
    }
}

#[test]
fn arrays_are_recovered_from_graphs() {
    for n in 2..=6 {
        let arrays = kn_arrays(n).unwrap();
        let mut forms = BTreeSet::new();
        for a in &arrays {
            let g = graph_of(a);
            assert_eq!(&g.to_array().unwrap(), a);
            assert_eq!(canonical_form(&g).unwrap(), g);
            forms.insert(format!("{:?}", g.edges()));
        }
        assert_eq!(forms.len(), arrays.len());
    }
}

#[test]
fn group_json_round_trips() {
    let mut groups = catalog_groups();
    groups.extend(kn_family(4).unwrap());
    groups.extend(hantzsche_wendt_examples(5).unwrap());
    for g in &groups {
        let spec = GroupSpec::from_group(g);
        let again = GroupSpec::from_json(&spec.to_json()).unwrap().build().unwrap();
        assert_eq!(canonical_key(&again), canonical_key(g), "{}", g.label());
    }
}

#[test]
fn forms_multiplicities_add_up() {
    for g in catalog_groups() {
        let engine = SpectralEngine::new(&g);
        for norm_sq in 0..=6 {
            let r = engine.row(norm_sq).unwrap();
            let total: num_bigint::BigUint = r.degrees.iter().sum();
            assert_eq!(total, r.forms);
            assert_eq!(&r.even + &r.odd, r.forms);
        }
    }
}

#[test]
fn mode_functions_is_degree_zero() {
    let (a, b) = (catalog("hw3/M1").unwrap(), catalog("hw3/M3").unwrap());
    let f = flatspec::spectra::compare_spectra(&a, &b, "functions".parse().unwrap(), 10).unwrap();
    let p0 = flatspec::spectra::compare_spectra(&a, &b, SpectrumMode::Degree(0), 10).unwrap();
    assert_eq!(f.first_difference, p0.first_difference);
}

fn brute_force_isomorphic(a: &GhwGraph, b: &GhwGraph) -> bool {
    let n = a.n();
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        if a.edges().len() == b.edges().len()
            && a.edges().iter().all(|&(i, j)| b.has_edge(perm[i - 1], perm[j - 1]))
        {
            return true;
        }
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| perm[k] < perm[k + 1]) else {
            return false;
        };
        let l = (k + 1..n).rev().find(|&l| perm[k] < perm[l]).unwrap();
        perm.swap(k, l);
        perm[k + 1..].reverse();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expansion_ignores_generator_order(index in 0usize..64, seed in any::<u64>()) {
        let g = &kn_family(5).unwrap()[index];
        let mut gens = g.generators().to_vec();
        let k = gens.len();
        gens.rotate_left((seed as usize) % k);
        if seed & 1 == 1 {
            gens.reverse();
        }
        let again = expand_holonomy(&gens, g.dim()).unwrap();
        prop_assert_eq!(canonical_key(&again), canonical_key(g));
    }

    #[test]
    fn hodge_duality_on_orientable_groups(which in 0usize..6, norm_sq in 0u64..15) {
        let mut groups: Vec<BieberbachGroup> = catalog_groups().into_iter().filter(|g| is_orientable(g.cosets())).collect();
        groups.extend(hantzsche_wendt_examples(5).unwrap());
        let g = &groups[which % groups.len()];
        let r = SpectralEngine::new(g).row(norm_sq).unwrap();
        let n = g.dim();
        for p in 0..=n {
            prop_assert_eq!(&r.degrees[p], &r.degrees[n - p]);
        }
    }

    #[test]
    fn graph_isomorphism_matches_brute_force(
        n in 3usize..=6,
        a in any::<u64>(),
        b in any::<u64>(),
        order in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let arrays = kn_arrays(n).unwrap();
        let (ga, gb) = (graph_of(&arrays[a as usize % arrays.len()]), graph_of(&arrays[b as usize % arrays.len()]));
        prop_assert_eq!(graphs_isomorphic(&ga, &gb).unwrap(), brute_force_isomorphic(&ga, &gb));
        let relabel: Vec<usize> = order.into_iter().filter(|&v| v <= n).collect();
        let shuffled = gb.relabel(&relabel).unwrap();
        prop_assert!(graphs_isomorphic(&ga, &shuffled).unwrap() == brute_force_isomorphic(&ga, &shuffled));
        prop_assert!(graphs_isomorphic(&gb, &shuffled).unwrap());
    }
}
