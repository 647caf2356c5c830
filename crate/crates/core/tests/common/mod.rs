#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;
use qnn_spectra::rational::{int, ratio};
use qnn_spectra::sim::SimModel;
use qnn_spectra::{EigenvalueList, GeneratorGrid, Rational, SpectrumSet};
use rand::Rng;

/// Every total eigenvalue `Λ_j`, one per multi-index over all cells.
pub fn all_lambdas(grid: &GeneratorGrid) -> Vec<Rational> {
    let mut lambdas = vec![int(0)];
    for cell in grid.iter_cells() {
        lambdas = lambdas
            .iter()
            .flat_map(|acc| cell.values().iter().map(move |v| acc + v))
            .collect();
    }
    lambdas
}

/// `{Λ_k − Λ_j}` by direct enumeration of index pairs.
pub fn brute_spectrum(grid: &GeneratorGrid) -> SpectrumSet {
    let lambdas = all_lambdas(grid);
    let mut set = BTreeSet::new();
    for a in &lambdas {
        for b in &lambdas {
            set.insert(a - b);
        }
    }
    SpectrumSet::new(set.into_iter().collect())
}

/// Number of ordered index pairs producing each frequency.
pub fn brute_degeneracy(grid: &GeneratorGrid) -> BTreeMap<Rational, BigUint> {
    let lambdas = all_lambdas(grid);
    let mut out: BTreeMap<Rational, BigUint> = BTreeMap::new();
    for a in &lambdas {
        for b in &lambdas {
            *out.entry(a - b).or_default() += 1u32;
        }
    }
    out
}

fn k_of_marks(marks: &[i64]) -> u64 {
    let mut diffs = HashSet::new();
    for &a in marks {
        for &b in marks {
            diffs.insert(a - b);
        }
    }
    let mut k = 0;
    while diffs.contains(&(k as i64 + 1)) {
        k += 1;
    }
    k
}

/// Best `K` and every optimal set over the full candidate space:
/// `s_1 = 0` and every gap in `[1, C(d,2)]`.
pub fn naive_turnpike(d: usize) -> (u64, Vec<Vec<u64>>) {
    let max_gap = (d * (d - 1) / 2).max(1) as i64;
    let mut best = 0;
    let mut sols: Vec<Vec<u64>> = Vec::new();
    let mut gaps = vec![1i64; d - 1];
    loop {
        let mut marks = vec![0i64];
        for g in &gaps {
            marks.push(marks.last().unwrap() + g);
        }
        let k = k_of_marks(&marks);
        if k > best {
            best = k;
            sols.clear();
        }
        if k == best {
            sols.push(marks.iter().map(|&m| m as u64).collect());
        }
        // Odometer increment over the gap vector.
        let mut i = gaps.len();
        loop {
            if i == 0 {
                sols.sort();
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

pub fn cell_ints(values: &[i64]) -> EigenvalueList {
    EigenvalueList::from_integers(values.iter().copied()).unwrap()
}

/// Random grid with `q ∈ {1, 2}` and integer or half-integer eigenvalues.
pub fn random_grid(rng: &mut impl Rng, max_cells: usize, integer: bool) -> GeneratorGrid {
    let q = rng.random_range(1..=2u32);
    let k = 1usize << q;
    let cells_total = rng.random_range(1..=max_cells);
    let rows = rng.random_range(1..=cells_total);
    let cols = (cells_total / rows).max(1);
    GeneratorGrid::from_fn(q, rows, cols, |_, _| {
        let values = (0..k)
            .map(|_| {
                let n = rng.random_range(-4i64..=4);
                if integer || rng.random_bool(0.5) {
                    int(n)
                } else {
                    ratio(2 * n + 1, 2)
                }
            })
            .collect();
        EigenvalueList::new(values).unwrap()
    })
    .unwrap()
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

/// `⟨0|U(x)† M U(x)|0⟩` from explicitly multiplied dense matrices, with each
/// encoding layer built as a Kronecker product of per-cell `e^{−ixH}`.
pub fn dense_evaluate(model: &SimModel, x: f64) -> Complex64 {
    let grid = model.grid();
    let dim = model.dim();
    let mut u = DMatrix::<Complex64>::identity(dim, dim);
    u = &model.unitaries()[0] * u;
    for l in 0..grid.cols() {
        let mut layer = DMatrix::<Complex64>::identity(1, 1);
        for r in 0..grid.rows() {
            let cell = grid.cell(r, l);
            let phases: Vec<Complex64> = cell
                .values()
                .iter()
                .map(|v| {
                    let lam = qnn_spectra::rational::to_i64(v).unwrap() as f64;
                    Complex64::from_polar(1.0, -x * lam)
                })
                .collect();
            let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(phases));
            layer = kron(&layer, &diag);
        }
        u = &layer * u;
        u = &model.unitaries()[l + 1] * u;
    }
    let psi = u.column(0).into_owned();
    psi.dotc(&(model.observable() * &psi))
}
