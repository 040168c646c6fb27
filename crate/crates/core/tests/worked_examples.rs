use num_bigint::{BigInt, BigUint};

use flatspec::crystal::{
    canonical_key, classify_holonomy, expand_holonomy, is_diagonal_type, is_orientable, is_torsion_free,
    BieberbachGroup, HolonomyClass, IsometryElement, SignedPermutation,
};
use flatspec::families::{catalog, diagonal_group, kn_family, kn_group_from_array, GhwArray};
use flatspec::graph::{canonical_vertex_order, graph_of, graphs_isomorphic};
use flatspec::lattice::{fixed_vectors, shell_vectors};
use flatspec::numeric::{quarter_root_power, GaussianInt, Rational4};
use flatspec::spectra::{
    betti, character_sum, compare_spectra, d_e, d_f, d_o, d_p, theorem_check, trace_p, SpectrumMode,
};

fn u(x: u32) -> BigUint {
    BigUint::from(x)
}

#[test]
fn quarter_turn_block_trace_and_betti() {
    let b = SignedPermutation::from_one_based(&[2, 1, 3, 4, 5, 6], &[-1, 1, 1, -1, -1, 1]).unwrap();
    // three invariant 2-vectors, but the trace itself is −1
    assert_eq!(trace_p(&b, 2), BigInt::from(-1));
    assert_eq!(betti(&catalog("dim6/z4_Mp").unwrap(), 2), u(3));
    assert_eq!(betti(&catalog("dim6/z4_M").unwrap(), 2), u(5));
}

#[test]
fn multiplicity_examples() {
    assert_eq!(d_p(&catalog("dim3/m10").unwrap(), 2, 1).unwrap(), u(10));
    assert_eq!(d_p(&BieberbachGroup::torus(3), 1, 1).unwrap(), u(18));
    let m1 = catalog("hw3/M1").unwrap();
    assert_eq!(d_p(&m1, 1, 5).unwrap(), u(18));
    assert_eq!(d_e(&m1, 1).unwrap(), u(6));
    assert_eq!(d_o(&m1, 1).unwrap(), u(6));
    for name in ["dim3/m10", "dim3/m02", "dim3/m01"] {
        assert_eq!(d_f(&catalog(name).unwrap(), 1).unwrap(), u(24));
    }
    for name in ["dim4/m11", "dim4/m10", "dim4/m03", "dim4/m02", "dim4/m01"] {
        assert_eq!(d_f(&catalog(name).unwrap(), 2).unwrap(), u(192));
    }
}

#[test]
fn z2_character_sum_at_unit_norm() {
    // e_{1,γ} = 2(l − 2) for the generator of the Z2 family
    for (name, l) in [("dim3/m10", 1i64), ("dim3/m02", 1), ("dim3/m01", 2), ("dim4/m03", 1), ("dim4/m01", 3)] {
        let g = catalog(name).unwrap();
        let gamma = g.generators()[0].clone();
        assert_eq!(character_sum(&g, &gamma, 1).unwrap(), GaussianInt::new(2 * (l - 2), 0), "{name}");
    }
}

#[test]
fn comparison_examples() {
    let (m1, m2) = (catalog("hw3/M1").unwrap(), catalog("hw3/M2").unwrap());
    let c = compare_spectra(&m1, &m2, SpectrumMode::FUNCTIONS, 1).unwrap();
    let d = c.first_difference.unwrap();
    assert_eq!((d.norm_sq, d.left, d.right), (1, u(0), u(1)));
    let (m, mp) = (catalog("dim6/z4z2_M").unwrap(), catalog("dim6/z4z2_Mp").unwrap());
    let c = compare_spectra(&m, &mp, SpectrumMode::Forms, 0).unwrap();
    let d = c.first_difference.unwrap();
    assert_eq!((d.norm_sq, d.left, d.right), (0, u(16), u(8)));
    // the first degree-2 difference between the didicosm and the second amphidicosm
    let m3 = catalog("hw3/M3").unwrap();
    let c = compare_spectra(&m1, &m3, SpectrumMode::Degree(2), 25).unwrap();
    let d = c.first_difference.unwrap();
    assert_eq!((d.norm_sq, d.left, d.right), (4, u(3), u(2)));
}

#[test]
fn theorem_examples() {
    let r = theorem_check(&catalog("hw3/M1").unwrap(), 1).unwrap();
    assert_eq!(r.rows[1].forms, u(12));
    let k4 = &kn_family(4).unwrap()[0];
    let r = theorem_check(k4, 1).unwrap();
    assert_eq!((r.rank, r.rows[1].forms.clone()), (3, u(16)));
    let t = theorem_check(&BieberbachGroup::torus(4), 2).unwrap();
    assert_eq!(t.rows[2].forms, u(16 * 24));
}

#[test]
fn structural_examples() {
    let m1 = catalog("hw3/M1").unwrap();
    assert!(is_diagonal_type(m1.cosets()) && is_orientable(m1.cosets()));
    assert_eq!(classify_holonomy(m1.cosets()), HolonomyClass::ElementaryAbelian2 { rank: 2 });
    let m10 = catalog("dim3/m10").unwrap();
    assert!(!is_diagonal_type(m10.cosets()) && !is_orientable(m10.cosets()));
    let torus = BieberbachGroup::torus(3);
    assert!(is_diagonal_type(torus.cosets()) && is_orientable(torus.cosets()));
    assert_eq!(classify_holonomy(torus.cosets()), HolonomyClass::ElementaryAbelian2 { rank: 0 });
    assert_ne!(canonical_key(&catalog("hw3/M2").unwrap()), canonical_key(&catalog("hw3/M3").unwrap()));
    assert_eq!(expand_holonomy(&[], 3).unwrap().holonomy_order(), 1);
    let z4 = catalog("dim6/z4_M").unwrap();
    assert_eq!(classify_holonomy(z4.cosets()), HolonomyClass::Cyclic { order: 4 });
}

#[test]
fn product_of_first_two_generators() {
    let m1 = catalog("hw3/M1").unwrap();
    let g3 = m1.generators()[0].compose(&m1.generators()[1]).unwrap();
    let half = Rational4::HALF;
    assert_eq!(g3.translation(), &[half, half, half]);
    let g = IsometryElement::new(
        SignedPermutation::diagonal(&[-1, -1, 1]).unwrap(),
        vec![half, Rational4::ZERO, half],
    )
    .unwrap();
    assert!(g.compose(&g).unwrap().is_identity());
}

#[test]
fn lattice_examples() {
    let s5 = shell_vectors(3, 5).unwrap();
    assert_eq!(s5.len(), 24);
    let b2 = SignedPermutation::diagonal(&[1, -1, 1]).unwrap();
    // {±(2e1 ± e3), ±(e1 ± 2e3)}
    assert_eq!(fixed_vectors(&s5, &b2).unwrap().len(), 8);
    assert_eq!(quarter_root_power(1), GaussianInt::new(0, -1));
}

#[test]
fn diagonal_group_examples() {
    let half = |s: &str| -> Vec<Rational4> { s.split_whitespace().map(|x| x.parse().unwrap()).collect() };
    let m2 = diagonal_group(&[vec![-1, -1, 1], vec![1, -1, 1]], &[half("0 1/2 1/2"), half("0 0 1/2")]).unwrap();
    assert_eq!(canonical_key(&m2), canonical_key(&catalog("hw3/M2").unwrap()));
    assert!(diagonal_group(&[vec![-1, 1, 1]], &[half("0 0 0")]).is_err());
}

#[test]
fn kn_examples() {
    let klein = GhwArray::from_free_bits(2, 0).unwrap();
    assert!(is_torsion_free(kn_group_from_array(&klein).unwrap().cosets()));
    let plus = graph_of(&GhwArray::from_free_bits(3, 0).unwrap());
    let minus = graph_of(&GhwArray::from_free_bits(3, 1).unwrap());
    assert!(!graphs_isomorphic(&plus, &minus).unwrap());
    assert_eq!(plus.edges().len(), 4);
    let swapped = graph_of(&klein).relabel(&[2, 1]).unwrap();
    assert_eq!(canonical_vertex_order(&swapped).unwrap(), vec![2, 1]);
}
