//! Relaxed turnpike problem: find a size-`d` integer set `S` maximising
//! `K(S)`, the largest `K` with `{−K, …, K} ⊆ ΔS`.
//!
//! Candidates are sets `{0 = s_1 < … < s_d}` with every gap in
//! `1..=C(d,2)`; an optimal set always exists among them. The search walks
//! gap vectors lexicographically and prunes a prefix when the integers
//! still missing from its difference set outnumber the differences the
//! remaining marks can add.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::int;
use crate::schemes::{self, SchemeKind, Shape};
use crate::spectrum::{contiguous_k, delta, EigenvalueList, GeneratorGrid, SpectrumSet};

/// Default upper bound on `d` for exhaustive runs.
pub const MAX_EXHAUSTIVE_D: usize = 8;
/// Difference bitmaps are 64 bits wide, so `C(d,2) < 64`.
pub const MAX_D: usize = 11;
/// Default number of DFS nodes between checkpoint writes.
pub const DEFAULT_CHECKPOINT_INTERVAL: u64 = 100_000_000;

const STATE_VERSION: u32 = 1;

/// Published optimum for each `d = 1..=8`: `(d, K, number of solutions, smallest example)`.
pub const TABLE_TWO: [(usize, u64, usize, &[u64]); 8] = [
    (1, 0, 1, &[0]),
    (2, 1, 1, &[0, 1]),
    (3, 3, 2, &[0, 1, 3]),
    (4, 6, 2, &[0, 1, 4, 6]),
    (5, 9, 8, &[0, 1, 2, 6, 9]),
    (6, 13, 14, &[0, 1, 2, 6, 10, 13]),
    (7, 18, 8, &[0, 2, 7, 13, 16, 17, 25]),
    (8, 24, 2, &[0, 8, 15, 17, 20, 21, 31, 39]),
];

/// Optimal `K` for size `d`, when known.
pub fn known_optimum(d: usize) -> Option<u64> {
    TABLE_TWO.iter().find(|row| row.0 == d).map(|row| row.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurnpikeSolution {
    pub d: usize,
    pub best_k: u64,
    /// Sorted lexicographically; mirrors are listed separately.
    pub solutions: Vec<Vec<u64>>,
    pub candidate_space_size: BigUint,
    pub exhaustive: bool,
}

impl TurnpikeSolution {
    /// Lexicographically smallest optimal set.
    pub fn example(&self) -> &[u64] {
        &self.solutions[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableTwoRow {
    pub d: usize,
    pub best_k: u64,
    pub solution_count: usize,
    pub example: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct CheckpointConfig {
    pub path: PathBuf,
    /// DFS nodes between writes.
    pub interval: u64,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub exhaustive: bool,
    pub max_exhaustive_d: usize,
    pub checkpoint: Option<CheckpointConfig>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            exhaustive: true,
            max_exhaustive_d: MAX_EXHAUSTIVE_D,
            checkpoint: None,
        }
    }
}

/// Resumable progress of an exhaustive run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchState {
    pub version: u32,
    pub d: usize,
    /// First gap prefix not yet searched; `None` once the run is complete.
    pub next_prefix: Option<Vec<u32>>,
    pub best_k: u64,
    pub solutions_so_far: Vec<Vec<u64>>,
    pub nodes_visited: u64,
}

impl SearchState {
    pub fn load(path: &Path) -> Result<Self> {
        let state: SearchState = serde_json::from_str(&fs::read_to_string(path)?)?;
        if state.version != STATE_VERSION {
            return Err(Error::Checkpoint(format!(
                "unsupported state version {} (expected {STATE_VERSION})",
                state.version
            )));
        }
        Ok(state)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn pairs(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// `|C| = C(d,2)^(d−1)`.
pub fn candidate_space_size(d: usize) -> BigUint {
    if d <= 1 {
        return BigUint::from(1u32);
    }
    num_traits::pow(BigUint::from(pairs(d)), d - 1)
}

/// `K(S) = contiguous_k(ΔS)`.
pub fn k_of(s: &[i64]) -> Result<u64> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("mark set is empty".into()));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Duplicates(w[0]));
    }
    let d = delta(&SpectrumSet::from_integers(sorted))?;
    contiguous_k(&d)
}

pub fn solve(d: usize, exhaustive: bool) -> Result<TurnpikeSolution> {
    solve_with(
        d,
        &SolveOptions {
            exhaustive,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_with(d: usize, opts: &SolveOptions) -> Result<TurnpikeSolution> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if d > MAX_D {
        return Err(Error::DeskScaleLimit(format!(
            "turnpike search supports d <= {MAX_D}, got {d}"
        )));
    }
    if opts.exhaustive && d > opts.max_exhaustive_d {
        return Err(Error::DeskScaleLimit(format!(
            "exhaustive search is limited to d <= {}, got {d}; rerun without --exhaustive \
             for a single optimal set",
            opts.max_exhaustive_d
        )));
    }
    if d == 1 {
        return Ok(TurnpikeSolution {
            d,
            best_k: 0,
            solutions: vec![vec![0]],
            candidate_space_size: candidate_space_size(1),
            exhaustive: opts.exhaustive,
        });
    }
    let (best_k, solutions) = if opts.exhaustive {
        exhaustive_search(d, opts.checkpoint.as_ref())?
    } else {
        let best = best_k_search(d);
        let first = first_solution(d, best).expect("optimum is attained");
        (best, vec![first])
    };
    Ok(TurnpikeSolution {
        d,
        best_k,
        solutions,
        candidate_space_size: candidate_space_size(d),
        exhaustive: opts.exhaustive,
    })
}

/// Reproduces the published table for `d = 1..=max_d` and fails on the
/// first row that disagrees.
pub fn verify_table_two(max_d: usize) -> Result<Vec<TableTwoRow>> {
    if max_d > MAX_EXHAUSTIVE_D {
        return Err(Error::DeskScaleLimit(format!(
            "table verification supports max_d <= {MAX_EXHAUSTIVE_D}"
        )));
    }
    let mut rows = Vec::with_capacity(max_d);
    for &(d, k, count, example) in TABLE_TWO.iter().take(max_d) {
        let sol = solve(d, true)?;
        let row = TableTwoRow {
            d,
            best_k: sol.best_k,
            solution_count: sol.solutions.len(),
            example: sol.example().to_vec(),
        };
        if row.best_k != k || row.solution_count != count || row.example != example {
            return Err(Error::Verification(format!(
                "row d={d}: got K={}, {} solutions, example {:?}; expected K={k}, {count} \
                 solutions, example {example:?}",
                row.best_k, row.solution_count, row.example
            )));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Scales `s` by `(K+1)^(l−1+L(r−1))` over an `(R/q) × L` grid. Returns the
/// grid and the radius `(K+1)^(RL/q) − 1` of the integer range it is
/// guaranteed to contain.
pub fn extended_construction(
    q: u32,
    r: usize,
    l: usize,
    s: &[i64],
) -> Result<(GeneratorGrid, u64)> {
    let base = EigenvalueList::new(s.iter().map(|&v| int(v)).collect())?;
    let grid = schemes::build_scheme(SchemeKind::Turnpike, Shape { r, l, q }, &base)?;
    let k = k_of(s)?;
    let radius = schemes::turnpike_radius(k, Shape { r, l, q })?;
    Ok((grid, radius))
}

/// Incremental difference bookkeeping for one DFS.
struct Dfs {
    d: usize,
    max_gap: u32,
    full_mask: u64,
    marks: Vec<u32>,
    counts: Vec<u8>,
    present: u64,
    nodes: u64,
}

impl Dfs {
    fn new(d: usize) -> Self {
        let max_gap = pairs(d) as u32;
        Dfs {
            d,
            max_gap,
            full_mask: ((1u128 << (max_gap + 1)) - 2) as u64,
            marks: vec![0],
            counts: vec![0; max_gap as usize + 1],
            present: 0,
            nodes: 0,
        }
    }

    fn push(&mut self, x: u32) {
        for &m in &self.marks {
            let diff = (x - m) as usize;
            if diff <= self.max_gap as usize {
                self.counts[diff] += 1;
                self.present |= 1 << diff;
            }
        }
        self.marks.push(x);
    }

    fn pop(&mut self) {
        let x = self.marks.pop().expect("mark to pop");
        for &m in &self.marks {
            let diff = (x - m) as usize;
            if diff <= self.max_gap as usize {
                self.counts[diff] -= 1;
                if self.counts[diff] == 0 {
                    self.present &= !(1 << diff);
                }
            }
        }
    }

    fn push_gaps(&mut self, gaps: &[u32]) {
        for &g in gaps {
            let last = *self.marks.last().expect("nonempty");
            self.push(last + g);
        }
    }

    /// `K` of the marks placed so far.
    fn current_k(&self) -> u64 {
        ((!self.present) >> 1).trailing_zeros() as u64
    }

    /// Largest `K` any completion could reach: the remaining marks add at
    /// most `C(d,2) − C(p,2)` new differences.
    fn upper_bound(&self) -> u64 {
        let new = pairs(self.d) - pairs(self.marks.len());
        let mut missing = !self.present & self.full_mask;
        for _ in 0..new {
            if missing == 0 {
                break;
            }
            missing &= missing - 1;
        }
        if missing == 0 {
            self.max_gap as u64
        } else {
            missing.trailing_zeros() as u64 - 1
        }
    }
}

/// Gap prefixes that partition the search into independent tasks.
fn task_prefixes(d: usize) -> Vec<Vec<u32>> {
    let depth = (d - 1).min(2);
    let max_gap = pairs(d) as u32;
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=max_gap).map(move |g| {
                    let mut q = p.clone();
                    q.push(g);
                    q
                })
            })
            .collect();
    }
    out
}

struct TaskResult {
    best: u64,
    solutions: Vec<Vec<u64>>,
    nodes: u64,
}

/// Collects every completion of `prefix` whose `K` is at least the shared
/// best.
fn exhaustive_task(d: usize, prefix: &[u32], shared: &AtomicU64) -> TaskResult {
    struct Found {
        k: u64,
        sets: Vec<Vec<u64>>,
    }

    fn rec(dfs: &mut Dfs, shared: &AtomicU64, best: &mut u64, found: &mut Found) {
        dfs.nodes += 1;
        if dfs.marks.len() == dfs.d {
            let k = dfs.current_k();
            if k < *best {
                return;
            }
            if k > found.k || found.sets.is_empty() {
                found.k = k;
                found.sets.clear();
            }
            if k == found.k {
                found.sets.push(dfs.marks.iter().map(|&m| m as u64).collect());
            }
            *best = k;
            shared.fetch_max(k, Ordering::Relaxed);
            return;
        }
        *best = (*best).max(shared.load(Ordering::Relaxed));
        if dfs.upper_bound() < *best {
            return;
        }
        let last = *dfs.marks.last().expect("nonempty");
        for g in 1..=dfs.max_gap {
            dfs.push(last + g);
            rec(dfs, shared, best, found);
            dfs.pop();
        }
    }

    let mut dfs = Dfs::new(d);
    dfs.push_gaps(prefix);
    let mut best = shared.load(Ordering::Relaxed);
    let mut found = Found {
        k: 0,
        sets: Vec::new(),
    };
    rec(&mut dfs, shared, &mut best, &mut found);
    TaskResult {
        best: found.k,
        solutions: found.sets,
        nodes: dfs.nodes,
    }
}

fn exhaustive_search(d: usize, checkpoint: Option<&CheckpointConfig>) -> Result<(u64, Vec<Vec<u64>>)> {
    let tasks = task_prefixes(d);
    let mut best = 0u64;
    let mut solutions: Vec<Vec<u64>> = Vec::new();
    let mut nodes = 0u64;
    let mut start = 0usize;

    if let Some(cp) = checkpoint {
        if cp.path.exists() {
            let state = SearchState::load(&cp.path)?;
            if state.d != d {
                return Err(Error::Checkpoint(format!(
                    "state file is for d={}, requested d={d}",
                    state.d
                )));
            }
            best = state.best_k;
            solutions = state.solutions_so_far;
            nodes = state.nodes_visited;
            start = match state.next_prefix {
                None => tasks.len(),
                Some(p) => tasks.iter().position(|t| *t == p).ok_or_else(|| {
                    Error::Checkpoint(format!("prefix {p:?} is not a task boundary"))
                })?,
            };
        }
    }

    let shared = AtomicU64::new(best);
    let batch = (rayon::current_num_threads() * 8).max(32);
    let mut since_save = 0u64;
    let mut i = start;
    while i < tasks.len() {
        let end = (i + batch).min(tasks.len());
        let results: Vec<TaskResult> = tasks[i..end]
            .par_iter()
            .map(|p| exhaustive_task(d, p, &shared))
            .collect();
        for r in results {
            nodes += r.nodes;
            since_save += r.nodes;
            if r.solutions.is_empty() {
                continue;
            }
            if r.best > best || solutions.is_empty() {
                best = r.best;
                solutions.clear();
            }
            if r.best == best {
                solutions.extend(r.solutions);
            }
        }
        i = end;
        if let Some(cp) = checkpoint {
            if since_save >= cp.interval || i == tasks.len() {
                since_save = 0;
                SearchState {
                    version: STATE_VERSION,
                    d,
                    next_prefix: tasks.get(i).cloned(),
                    best_k: best,
                    solutions_so_far: solutions.clone(),
                    nodes_visited: nodes,
                }
                .save(&cp.path)?;
            }
        }
    }
    solutions.sort();
    Ok((best, solutions))
}

/// Optimal `K` via branch and bound that drops ties.
fn best_k_search(d: usize) -> u64 {
    fn rec(dfs: &mut Dfs, shared: &AtomicU64, best: &mut u64) {
        if dfs.marks.len() == dfs.d {
            let k = dfs.current_k();
            if k > *best {
                *best = k;
                shared.fetch_max(k, Ordering::Relaxed);
            }
            return;
        }
        *best = (*best).max(shared.load(Ordering::Relaxed));
        if dfs.upper_bound() <= *best {
            return;
        }
        let last = *dfs.marks.last().expect("nonempty");
        for g in 1..=dfs.max_gap {
            dfs.push(last + g);
            rec(dfs, shared, best);
            dfs.pop();
        }
    }

    let shared = AtomicU64::new(0);
    task_prefixes(d).par_iter().for_each(|p| {
        let mut dfs = Dfs::new(d);
        dfs.push_gaps(p);
        let mut best = shared.load(Ordering::Relaxed);
        rec(&mut dfs, &shared, &mut best);
    });
    shared.load(Ordering::Relaxed)
}

/// Lexicographically first set reaching `target`.
fn first_solution(d: usize, target: u64) -> Option<Vec<u64>> {
    fn rec(dfs: &mut Dfs, target: u64) -> bool {
        if dfs.marks.len() == dfs.d {
            return dfs.current_k() == target;
        }
        if dfs.upper_bound() < target {
            return false;
        }
        let last = *dfs.marks.last().expect("nonempty");
        for g in 1..=dfs.max_gap {
            dfs.push(last + g);
            if rec(dfs, target) {
                return true;
            }
            dfs.pop();
        }
        false
    }

    let mut dfs = Dfs::new(d);
    rec(&mut dfs, target).then(|| dfs.marks.iter().map(|&m| m as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_of_examples() {
        assert_eq!(k_of(&[0, 1, 4, 6]).unwrap(), 6);
        assert_eq!(k_of(&[0, 1, 2, 6, 10, 13]).unwrap(), 13);
        assert_eq!(k_of(&[0, 5]).unwrap(), 0);
        assert!(matches!(k_of(&[0, 1, 1]), Err(Error::Duplicates(1))));
        assert!(k_of(&[]).is_err());
    }

    #[test]
    fn k_of_is_shift_and_mirror_invariant() {
        let s = [0, 2, 7, 13, 16, 17, 25];
        let k = k_of(&s).unwrap();
        assert_eq!(k, 18);
        let shifted: Vec<i64> = s.iter().map(|x| x - 40).collect();
        let mirrored: Vec<i64> = s.iter().map(|x| -x).collect();
        assert_eq!(k_of(&shifted).unwrap(), k);
        assert_eq!(k_of(&mirrored).unwrap(), k);
    }

    #[test]
    fn small_solves() {
        let s = solve(1, true).unwrap();
        assert_eq!((s.best_k, s.solutions.clone()), (0, vec![vec![0]]));
        let s = solve(3, true).unwrap();
        assert_eq!(s.best_k, 3);
        assert_eq!(s.solutions, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        assert_eq!(s.candidate_space_size, BigUint::from(9u32));
        let s = solve(5, true).unwrap();
        assert_eq!((s.best_k, s.solutions.len()), (9, 8));
        assert_eq!(s.example(), &[0, 1, 2, 6, 9]);
    }

    #[test]
    fn non_exhaustive_returns_smallest_optimum() {
        for d in 2..=6 {
            let s = solve(d, false).unwrap();
            let (_, k, _, example) = TABLE_TWO[d - 1];
            assert_eq!(s.best_k, k);
            assert_eq!(s.solutions, vec![example.to_vec()]);
            assert!(!s.exhaustive);
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(solve(9, true), Err(Error::DeskScaleLimit(_))));
        assert!(matches!(solve(99, false), Err(Error::DeskScaleLimit(_))));
        assert!(solve(0, false).is_err());
    }

    #[test]
    fn candidate_sizes() {
        assert_eq!(candidate_space_size(6), BigUint::from(759_375u32));
        assert_eq!(candidate_space_size(8), BigUint::from(13_492_928_512u64));
    }

    #[test]
    fn upper_bound_is_sound_at_root() {
        for d in 2..=8 {
            let dfs = Dfs::new(d);
            assert_eq!(dfs.upper_bound(), pairs(d) as u64);
        }
    }

    #[test]
    fn extended_examples() {
        let (grid, radius) = extended_construction(1, 1, 1, &[0, 1]).unwrap();
        assert_eq!(radius, 1);
        assert_eq!(crate::spectrum::spectrum_of_grid(&grid), SpectrumSet::integer_range(1));
        assert!(matches!(
            extended_construction(1, 1, 1, &[0, 2]),
            Err(Error::NoUnitStep)
        ));
    }
}
