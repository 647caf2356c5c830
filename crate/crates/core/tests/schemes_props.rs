mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use qnn_spectra::golomb::{self, is_golomb, Ruler};
use qnn_spectra::rational::{int, ratio};
use qnn_spectra::schemes::{
    self, build_scheme, certify, default_base, equal_layer_solutions, golomb_size, k_bound,
    size_bound, uniqueness_check, SchemeKind, Shape,
};
use qnn_spectra::spectrum::{contiguous_k, degeneracy_table, spectrum_of_grid};
use qnn_spectra::{EigenvalueList, Error, Rational, SpectrumSet};

fn two_level() -> EigenvalueList {
    common::cell_ints(&[0, 1])
}

#[test]
fn closed_forms_for_two_level_schemes() {
    let cases: &[(SchemeKind, usize, usize, u64)] = &[
        (SchemeKind::Hamming, 2, 2, 4),
        (SchemeKind::Hamming, 3, 1, 3),
        (SchemeKind::Binary, 3, 1, 7),
        (SchemeKind::Ternary, 1, 3, 13),
        (SchemeKind::Ternary, 2, 2, 40),
        (SchemeKind::EqualLayers, 2, 2, 12),
        (SchemeKind::EqualLayers, 3, 1, 13),
        (SchemeKind::SequentialExponential, 1, 3, 8),
        (SchemeKind::ParallelExponential, 3, 1, 8),
        (SchemeKind::ParallelExponential, 1, 1, 1),
    ];
    for &(kind, r, l, n) in cases {
        let rep = certify(kind, Shape::new(r, l, 1), &two_level()).unwrap();
        assert_eq!(rep.computed, SpectrumSet::integer_range(n), "{kind} R={r} L={l}");
        assert_eq!(rep.k_contig, n);
    }
}

#[test]
fn scaled_two_level_base() {
    let base = EigenvalueList::new(vec![ratio(-1, 2), ratio(1, 2)]).unwrap();
    let rep = certify(SchemeKind::Hamming, Shape::new(1, 2, 1), &base).unwrap();
    assert_eq!(rep.computed, SpectrumSet::integer_range(2));
    let base = EigenvalueList::new(vec![int(0), int(2)]).unwrap();
    assert!(matches!(
        certify(SchemeKind::Ternary, Shape::new(1, 1, 1), &base),
        Err(Error::SchemeConstraint(_))
    ));
}

#[test]
fn ternary_is_nondegenerate_off_zero() {
    for (r, l) in [(1, 1), (1, 3), (2, 2), (3, 1)] {
        let g = build_scheme(SchemeKind::Ternary, Shape::new(r, l, 1), &two_level()).unwrap();
        let table = degeneracy_table(&g);
        let a = r * l;
        for (w, n) in &table {
            // Each Λ difference is a balanced-ternary digit string; only digit 0
            // has more than one representation (0−0 and 1−1).
            let digits = balanced_ternary(w.to_integer().try_into().unwrap(), a);
            let zero_digits = digits.iter().filter(|&&d| d == 0).count() as u32;
            assert_eq!(*n, BigUint::from(2u32).pow(zero_digits), "ω={w}");
        }
    }
}

fn balanced_ternary(mut n: i64, len: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let mut d = n.rem_euclid(3);
        if d == 2 {
            d = -1;
        }
        out.push(d);
        n = (n - d) / 3;
    }
    assert_eq!(n, 0);
    out
}

#[test]
fn equal_layer_uniqueness() {
    for l in 1..=3usize {
        let max_z = ((2 * l + 1) * (2 * l + 1)) as u64;
        assert_eq!(equal_layer_solutions(2, l, max_z), vec![vec![1, 2 * l as u64 + 1]]);
    }
    assert!(uniqueness_check(2, 1, &[int(1), int(3)]));
    assert!(!uniqueness_check(2, 1, &[int(1), int(2)]));
    assert!(!uniqueness_check(2, 1, &[int(1)]));
}

#[test]
fn golomb_scheme_sizes() {
    let base = common::cell_ints(&[0, 1, 4, 6]);
    for (r, l, size) in [(2, 1, 13usize), (2, 2, 169), (4, 1, 169)] {
        let shape = Shape::new(r, l, 2);
        let rep = certify(SchemeKind::Golomb, shape, &base).unwrap();
        assert_eq!(rep.size, size);
        assert_eq!(golomb_size(shape), BigUint::from(size));
        assert!(rep.maximal_in_size);
    }
    let not_ruler = common::cell_ints(&[0, 1, 2, 3]);
    assert!(certify(SchemeKind::Golomb, Shape::new(2, 1, 2), &not_ruler).is_err());
}

#[test]
fn golomb_q3_default_is_optimal_ruler() {
    let base = default_base(SchemeKind::Golomb, 3).unwrap();
    assert!(is_golomb(base.values()));
    let rep = certify(SchemeKind::Golomb, Shape::new(3, 1, 3), &base).unwrap();
    assert_eq!(rep.size, 57);
}

#[test]
fn turnpike_scheme_contains_range() {
    let base = common::cell_ints(&[0, 1, 4, 6]);
    for (r, l, radius) in [(2, 1, 6u64), (4, 1, 48), (2, 2, 48), (4, 2, 2400)] {
        let rep = certify(SchemeKind::Turnpike, Shape::new(r, l, 2), &base).unwrap();
        assert!(rep.k_contig >= radius, "R={r} L={l}");
        assert!(SpectrumSet::integer_range(radius).is_subset_of(&rep.computed));
    }
    let d8 = default_base(SchemeKind::Turnpike, 3).unwrap();
    let rep = certify(SchemeKind::Turnpike, Shape::new(3, 1, 3), &d8).unwrap();
    assert!(rep.k_contig >= 24);
}

#[test]
fn bounds_hold_for_every_table_row() {
    for rep in schemes::table_one(3, 2).unwrap() {
        let size = BigUint::from(rep.size);
        assert!(size <= rep.size_bound, "{} R={} L={} q={}", rep.kind, rep.r, rep.l, rep.q);
        // The arbitrary-layer bound applies to every q = 1 scheme.
        if rep.q == 1 {
            let area = rep.r * rep.l;
            let k_max = (3u64.pow(area as u32) - 1) / 2;
            assert!(rep.k_contig <= k_max);
            assert!(rep.size as u64 <= 3u64.pow(area as u32));
        }
        if let Some(kb) = &rep.k_bound {
            assert!(BigUint::from(rep.k_contig) <= *kb);
        }
    }
}

#[test]
fn maximality_flags() {
    let t = certify(SchemeKind::Ternary, Shape::new(2, 2, 1), &two_level()).unwrap();
    assert!(t.maximal_in_size && t.maximal_in_k);
    let e = certify(SchemeKind::EqualLayers, Shape::new(2, 2, 1), &two_level()).unwrap();
    assert!(e.maximal_in_size && e.maximal_in_k);
    assert_eq!(size_bound(SchemeKind::EqualLayers, Shape::new(2, 2, 1)), BigUint::from(25u32));
    let h = certify(SchemeKind::Hamming, Shape::new(2, 2, 1), &two_level()).unwrap();
    assert!(!h.maximal_in_size && !h.maximal_in_k);
    assert_eq!(k_bound(SchemeKind::Hamming, Shape::new(2, 2, 1)), Some(BigUint::from(40u32)));
}

fn arbitrary_marks() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(0i64..40, 2..6).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn golomb_property_is_scale_invariant(marks in arbitrary_marks(), n in 1i64..7, d in 1i64..5, neg in any::<bool>()) {
        let base: Vec<Rational> = marks.iter().map(|&m| int(m)).collect();
        let c = if neg { ratio(-n, d) } else { ratio(n, d) };
        let scaled: Vec<Rational> = base.iter().map(|m| m * &c).collect();
        prop_assert_eq!(is_golomb(&base), is_golomb(&scaled));
    }

    #[test]
    fn golomb_check_matches_pairwise_differences(marks in arbitrary_marks()) {
        let mut diffs = std::collections::HashSet::new();
        let mut distinct = true;
        for (i, a) in marks.iter().enumerate() {
            for b in &marks[i + 1..] {
                distinct &= diffs.insert(b - a);
            }
        }
        prop_assert_eq!(is_golomb(&golomb::marks_from_u64(&marks.iter().map(|&m| m as u64).collect::<Vec<_>>())), distinct);
    }

    #[test]
    fn ternary_spectrum_size_is_maximal(r in 1usize..=3, l in 1usize..=2) {
        let rep = certify(SchemeKind::Ternary, Shape::new(r, l, 1), &two_level()).unwrap();
        prop_assert_eq!(rep.size as u64, 3u64.pow((r * l) as u32));
    }

    #[test]
    fn equal_layers_beat_any_integer_scaling(z1 in 1u64..6, z2 in 1u64..12) {
        // With equal layers and R = 2 no row scaling reaches a longer
        // contiguous range than the (1, 2L + 1) choice.
        let l = 2usize;
        let rows = [EigenvalueList::new(vec![int(0), int(z1 as i64)]).unwrap(),
            EigenvalueList::new(vec![int(0), int(z2 as i64)]).unwrap()];
        let g = qnn_spectra::GeneratorGrid::from_fn(1, 2, l, |r, _| rows[r].clone()).unwrap();
        let omega = spectrum_of_grid(&g);
        let k = if omega.contains(&int(1)) { contiguous_k(&omega).unwrap() } else { 0 };
        prop_assert!(k <= 12);
    }
}

#[test]
fn optimal_ruler_search_small_orders() {
    let expected: &[(usize, &[u64])] = &[
        (3, &[0, 1, 3]),
        (4, &[0, 1, 4, 6]),
        (5, &[0, 1, 4, 9, 11]),
    ];
    for &(order, marks) in expected {
        let found = golomb::search_optimal(order, 50).unwrap();
        assert!(found.iter().any(|f| f.ruler == Ruler::from_u64(marks).unwrap()));
        for f in &found {
            assert_eq!(f.ruler.length(), &BigUint::from(*marks.last().unwrap()));
        }
    }
    let six = golomb::search_optimal(6, 50).unwrap();
    assert!(six.iter().all(|f| *f.ruler.length() == BigUint::from(17u32)));
}
