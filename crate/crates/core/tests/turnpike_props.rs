mod common;

use proptest::prelude::*;
use qnn_spectra::spectrum::spectrum_of_grid;
use qnn_spectra::turnpike::{
    self, k_of, solve, solve_with, CheckpointConfig, SearchState, SolveOptions, TABLE_TWO,
};
use qnn_spectra::SpectrumSet;

#[test]
fn pruned_search_matches_naive_enumeration() {
    for d in 1..=5 {
        let (best, sols) = common::naive_turnpike(d);
        let got = solve(d, true).unwrap();
        assert_eq!(got.best_k, best, "d={d}");
        assert_eq!(got.solutions, sols, "d={d}");
        assert_eq!(solve(d, false).unwrap().solutions, vec![sols[0].clone()]);
    }
}

#[test]
fn solutions_live_in_candidate_space() {
    for d in 2..=6 {
        let sol = solve(d, true).unwrap();
        let max_gap = (d * (d - 1) / 2) as u64;
        assert!(sol.best_k <= max_gap);
        for s in &sol.solutions {
            assert_eq!(s[0], 0);
            assert!(s.windows(2).all(|w| w[1] > w[0] && w[1] - w[0] <= max_gap));
            let ints: Vec<i64> = s.iter().map(|&m| m as i64).collect();
            assert_eq!(k_of(&ints).unwrap(), sol.best_k);
        }
        let mut sorted = sol.solutions.clone();
        sorted.sort();
        assert_eq!(sorted, sol.solutions);
    }
}

#[test]
fn perfect_rulers_for_small_d() {
    for d in 1..=4 {
        assert_eq!(solve(d, false).unwrap().best_k as usize, d * (d - 1) / 2);
    }
}

#[test]
fn table_rows_through_seven() {
    let rows = turnpike::verify_table_two(7).unwrap();
    let row7 = &rows[6];
    assert_eq!((row7.d, row7.best_k, row7.solution_count), (7, 18, 8));
    assert_eq!(row7.example, vec![0, 2, 7, 13, 16, 17, 25]);
}

#[test]
#[ignore = "d = 8 exhaustive search; run with --ignored"]
fn table_row_eight() {
    let sol = solve(8, true).unwrap();
    let (_, k, count, example) = TABLE_TWO[7];
    assert_eq!(sol.best_k, k);
    assert_eq!(sol.solutions.len(), count);
    assert_eq!(sol.example(), example);
}

fn naive_partial(d: usize, first_gap_below: i64) -> (u64, Vec<Vec<u64>>) {
    let max_gap = (d * (d - 1) / 2) as i64;
    let mut best = 0;
    let mut sols = Vec::new();
    let mut gaps = vec![1i64; d - 1];
    loop {
        if gaps[0] < first_gap_below {
            let mut marks = vec![0i64];
            for g in &gaps {
                marks.push(marks.last().unwrap() + g);
            }
            let k = k_of(&marks).unwrap();
            if k > best {
                best = k;
                sols.clear();
            }
            if k == best {
                sols.push(marks.iter().map(|&m| m as u64).collect::<Vec<u64>>());
            }
        }
        let mut i = gaps.len();
        loop {
            if i == 0 {
                return (best, sols);
            }
            i -= 1;
            if gaps[i] < max_gap {
                gaps[i] += 1;
                break;
            }
            gaps[i] = 1;
        }
    }
}

#[test]
fn checkpoint_is_written_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    let opts = SolveOptions {
        checkpoint: Some(CheckpointConfig { path: path.clone(), interval: 1 }),
        ..SolveOptions::default()
    };
    let sol = solve_with(5, &opts).unwrap();
    let state = SearchState::load(&path).unwrap();
    assert_eq!(state.d, 5);
    assert_eq!(state.next_prefix, None);
    assert_eq!(state.best_k, sol.best_k);
    let mut saved = state.solutions_so_far.clone();
    saved.sort();
    assert_eq!(saved, sol.solutions);
    assert!(state.nodes_visited > 0);
}

#[test]
fn resume_from_partial_state() {
    let d = 5;
    let (full_k, full) = common::naive_turnpike(d);
    for split in [2i64, 4, 7] {
        let (best_k, solutions_so_far) = naive_partial(d, split);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        SearchState {
            version: 1,
            d,
            next_prefix: Some(vec![split as u32, 1]),
            best_k,
            solutions_so_far,
            nodes_visited: 0,
        }
        .save(&path)
        .unwrap();
        let opts = SolveOptions {
            checkpoint: Some(CheckpointConfig { path: path.clone(), interval: 1 }),
            ..SolveOptions::default()
        };
        let sol = solve_with(d, &opts).unwrap();
        assert_eq!(sol.best_k, full_k, "split {split}");
        assert_eq!(sol.solutions, full, "split {split}");
    }
}

#[test]
fn resume_rejects_mismatched_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    let state = SearchState {
        version: 1,
        d: 4,
        next_prefix: None,
        best_k: 6,
        solutions_so_far: vec![vec![0, 1, 4, 6]],
        nodes_visited: 0,
    };
    state.save(&path).unwrap();
    let opts = SolveOptions {
        checkpoint: Some(CheckpointConfig { path: path.clone(), interval: 1 }),
        ..SolveOptions::default()
    };
    assert!(solve_with(5, &opts).is_err());
    std::fs::write(&path, r#"{"version":99,"d":5,"next_prefix":null,"best_k":0,"solutions_so_far":[],"nodes_visited":0}"#).unwrap();
    assert!(solve_with(5, &opts).is_err());
}

#[test]
fn guards() {
    assert!(solve(9, true).is_err());
    assert!(solve(99, false).is_err());
    assert!(solve(0, false).is_err());
    let opts = SolveOptions { max_exhaustive_d: 4, ..SolveOptions::default() };
    assert!(solve_with(5, &opts).is_err());
    assert!(turnpike::verify_table_two(9).is_err());
}

#[test]
fn extended_construction_containment() {
    for (q, r, l, s, radius) in [
        (1u32, 1usize, 1usize, vec![0i64, 1], 1u64),
        (2, 2, 1, vec![0, 1, 4, 6], 6),
        (2, 4, 1, vec![0, 1, 4, 6], 48),
        (2, 2, 2, vec![0, 1, 4, 6], 48),
        (2, 4, 2, vec![0, 1, 4, 6], 2400),
        (2, 2, 3, vec![0, 1, 2, 6], 26),
    ] {
        let (grid, got) = turnpike::extended_construction(q, r, l, &s).unwrap();
        assert_eq!(got, radius);
        let omega = spectrum_of_grid(&grid);
        assert!(SpectrumSet::integer_range(radius).is_subset_of(&omega), "{s:?} R={r} L={l}");
    }
    assert!(turnpike::extended_construction(1, 1, 1, &[0, 5]).is_err());
}

proptest! {
    #[test]
    fn k_is_shift_and_mirror_invariant(
        marks in prop::collection::btree_set(-30i64..30, 1..7),
        shift in -50i64..50,
    ) {
        let s: Vec<i64> = marks.into_iter().collect();
        let k = k_of(&s).unwrap();
        let shifted: Vec<i64> = s.iter().map(|m| m + shift).collect();
        let mirrored: Vec<i64> = s.iter().map(|m| -m).collect();
        prop_assert_eq!(k_of(&shifted).unwrap(), k);
        prop_assert_eq!(k_of(&mirrored).unwrap(), k);
        let d = s.len();
        prop_assert!(k as usize <= d * (d - 1) / 2);
    }

    #[test]
    fn no_set_beats_the_solver(marks in prop::collection::btree_set(0i64..25, 2..6)) {
        let s: Vec<i64> = marks.into_iter().collect();
        let best = solve(s.len(), false).unwrap().best_k;
        prop_assert!(k_of(&s).unwrap() <= best);
    }
}
