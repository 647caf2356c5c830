//! Dense statevector simulation of QNNs built from a [`GeneratorGrid`].
//!
//! A model is `f(x) = ⟨0| U(x)† M U(x) |0⟩` with
//! `U(x) = W_{L+1} S_L(x) W_L ⋯ S_1(x) W_1`. Every data-encoding layer is
//! diagonal: basis state `|j⟩` picks up `e^{−i x λ_j}` where `λ_j` sums the
//! eigenvalues selected by `j` from each qubit block of that layer. Qubit
//! block 0 is the most significant digit of `j`.
//!
//! The trainable unitaries are Haar-random: a complex Gaussian matrix is
//! QR-factorised and each column of `Q` is rotated by the phase of the
//! matching diagonal entry of `R`. The observable is a random Hermitian
//! matrix with entries of modulus at most 1. Both are drawn in that order
//! from a ChaCha8 stream seeded with the model seed, so a seed fully
//! determines the model.
//!
//! Only integer spectra are simulated, which makes `f` 2π-periodic and its
//! Fourier coefficients exactly recoverable from `2K+1` equispaced samples.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use clap::ValueEnum;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::schemes::{self, SchemeKind, Shape};
use crate::spectrum::{multivariate_spectrum, spectrum_of_grid, EigenvalueList, GeneratorGrid, MultiSpectrum, SpectrumSet};

/// Largest register the simulator accepts.
pub const MAX_QUBITS: usize = 10;
/// Largest per-variable frequency radius for two-variable checks.
pub const MAX_MULTI_RADIUS: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Allowed imaginary part of `⟨ψ|M|ψ⟩`.
    pub eval_imag: f64,
    /// Coefficient-level tolerance (leak, conjugate symmetry).
    pub coeff: f64,
    /// Allowed `‖U†U − I‖_max`.
    pub unitarity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eval_imag: 1e-10,
            coeff: 1e-9,
            unitarity: 1e-12,
        }
    }
}

type CMatrix = DMatrix<Complex64>;
type CVector = DVector<Complex64>;

#[derive(Clone, Debug)]
pub struct SimModel {
    grid: GeneratorGrid,
    /// Per layer, the eigenvalue of each computational basis state.
    layer_eigenvalues: Vec<Vec<i64>>,
    unitaries: Vec<CMatrix>,
    observable: CMatrix,
    seed: u64,
    tol: Tolerances,
}

fn integer_cells(cell: &EigenvalueList) -> Result<Vec<i64>> {
    cell.values()
        .iter()
        .map(|v| rational::to_i64(v).ok_or(Error::NonIntegerSpectrum))
        .collect()
}

/// Kronecker-sum eigenvalues of each layer, indexed by basis state.
pub fn layer_eigenvalues(grid: &GeneratorGrid) -> Result<Vec<Vec<i64>>> {
    let k = grid.cell_dim();
    let rows = grid.rows();
    let dim = k.pow(rows as u32);
    (0..grid.cols())
        .map(|l| {
            let cells: Vec<Vec<i64>> = (0..rows)
                .map(|r| integer_cells(grid.cell(r, l)))
                .collect::<Result<_>>()?;
            Ok((0..dim)
                .map(|j| {
                    let mut rest = j;
                    let mut total = 0;
                    for r in (0..rows).rev() {
                        total += cells[r][rest % k];
                        rest /= k;
                    }
                    total
                })
                .collect())
        })
        .collect()
}

/// Largest frequency the grid can produce: `Σ_cells (λ_max − λ_min)`.
pub fn frequency_bound(grid: &GeneratorGrid) -> Result<i64> {
    grid.iter_cells()
        .map(|c| rational::to_i64(&c.span()).ok_or(Error::NonIntegerSpectrum))
        .sum()
}

fn check_register(qubits: usize) -> Result<()> {
    if qubits > MAX_QUBITS {
        return Err(Error::DeskScaleLimit(format!(
            "simulator supports at most {MAX_QUBITS} qubits, got {qubits}"
        )));
    }
    Ok(())
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / 2f64.sqrt()
}

/// Haar-distributed unitary of dimension `dim`.
pub fn haar_unitary(dim: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let z = CMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    let qr = z.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Random Hermitian matrix whose entries have modulus at most 1.
pub fn random_hermitian(dim: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let mut m = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = Complex64::new(rng.random_range(-1.0..=1.0), 0.0);
        for j in i + 1..dim {
            let z = Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
                / 2f64.sqrt();
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn unitarity_residual(u: &CMatrix) -> f64 {
    let prod = u.adjoint() * u;
    let id = CMatrix::identity(u.nrows(), u.ncols());
    (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermiticity_residual(m: &CMatrix) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_unitaries(us: &[CMatrix], tol: f64) -> Result<()> {
    for (i, u) in us.iter().enumerate() {
        let res = unitarity_residual(u);
        if res > tol {
            return Err(Error::Numerical(format!(
                "unitary {i} has residual {res:e} > {tol:e}"
            )));
        }
    }
    Ok(())
}

/// Builds a random model for `grid`, deterministic in `seed`.
pub fn random_model(grid: &GeneratorGrid, seed: u64) -> Result<SimModel> {
    random_model_with(grid, seed, Tolerances::default())
}

pub fn random_model_with(grid: &GeneratorGrid, seed: u64, tol: Tolerances) -> Result<SimModel> {
    let layer_eigenvalues = layer_eigenvalues(grid)?;
    check_register(grid.qubits())?;
    let dim = 1usize << grid.qubits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unitaries: Vec<CMatrix> = (0..=grid.layers())
        .map(|_| haar_unitary(dim, &mut rng))
        .collect();
    check_unitaries(&unitaries, tol.unitarity)?;
    let observable = random_hermitian(dim, &mut rng);
    Ok(SimModel {
        grid: grid.clone(),
        layer_eigenvalues,
        unitaries,
        observable,
        seed,
        tol,
    })
}

fn diag_phase(psi: &mut CVector, eigenvalues: &[i64], x: f64) {
    for (amp, &lam) in psi.iter_mut().zip(eigenvalues) {
        *amp *= Complex64::from_polar(1.0, -x * lam as f64);
    }
}

fn expectation(psi: &CVector, m: &CMatrix, tol: f64) -> Result<f64> {
    let val = psi.dotc(&(m * psi));
    if val.im.abs() > tol {
        return Err(Error::Numerical(format!(
            "expectation value has imaginary part {:e}",
            val.im
        )));
    }
    Ok(val.re)
}

impl SimModel {
    pub fn grid(&self) -> &GeneratorGrid {
        &self.grid
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn unitaries(&self) -> &[CMatrix] {
        &self.unitaries
    }

    pub fn observable(&self) -> &CMatrix {
        &self.observable
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn dim(&self) -> usize {
        self.observable.nrows()
    }

    /// Replaces the observable, which must be Hermitian.
    pub fn with_observable(mut self, m: CMatrix) -> Result<Self> {
        if m.nrows() != self.dim() || m.ncols() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "observable must be {0}x{0}",
                self.dim()
            )));
        }
        let res = hermiticity_residual(&m);
        if res > self.tol.eval_imag {
            return Err(Error::Numerical(format!("observable is not Hermitian ({res:e})")));
        }
        self.observable = m;
        Ok(self)
    }

    pub fn with_identity_observable(self) -> Self {
        let dim = self.dim();
        self.with_observable(CMatrix::identity(dim, dim))
            .expect("identity is Hermitian")
    }

    pub fn state(&self, x: f64) -> CVector {
        let mut psi = self.unitaries[0].column(0).into_owned();
        for (eig, w) in self.layer_eigenvalues.iter().zip(&self.unitaries[1..]) {
            diag_phase(&mut psi, eig, x);
            psi = w * psi;
        }
        psi
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        expectation(&self.state(x), &self.observable, self.tol.eval_imag)
    }

    /// `Σ_cells (λ_max − λ_min)`.
    pub fn frequency_bound(&self) -> i64 {
        frequency_bound(&self.grid).expect("validated at construction")
    }
}

/// Fourier coefficients `c_ω` of `f(x) = Σ c_ω e^{iωx}` for `|ω| ≤ k_max`.
#[derive(Clone, Debug)]
pub struct FourierExtract {
    pub coefficients: BTreeMap<i64, Complex64>,
    pub grid_points: usize,
    pub samples: Vec<f64>,
}

impl FourierExtract {
    pub fn k_max(&self) -> i64 {
        *self.coefficients.keys().next_back().expect("nonempty")
    }

    pub fn get(&self, omega: i64) -> Complex64 {
        self.coefficients.get(&omega).copied().unwrap_or_default()
    }

    /// `max_ω |c_{−ω} − conj(c_ω)|`.
    pub fn conjugate_residual(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|(&w, c)| (self.get(-w) - c.conj()).norm())
            .fold(0.0, f64::max)
    }

    /// `|Σ|c_ω|² − mean f(x)²|` over the sample grid.
    pub fn parseval_residual(&self) -> f64 {
        let energy: f64 = self.coefficients.values().map(|c| c.norm_sqr()).sum();
        let mean_sq =
            self.samples.iter().map(|f| f * f).sum::<f64>() / self.samples.len() as f64;
        (energy - mean_sq).abs()
    }

    /// Frequencies with `|c_ω| > threshold`.
    pub fn support(&self, threshold: f64) -> BTreeSet<i64> {
        self.coefficients
            .iter()
            .filter(|(_, c)| c.norm() > threshold)
            .map(|(&w, _)| w)
            .collect()
    }
}

fn forward_fft(data: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(data.len()).process(data);
}

fn bin(omega: i64, n: usize) -> usize {
    omega.rem_euclid(n as i64) as usize
}

/// Coefficients from `2·k_max + 1` equispaced samples on `[0, 2π)`.
pub fn extract_fourier(model: &SimModel, k_max: i64) -> Result<FourierExtract> {
    extract_fourier_with_points(model, k_max, 2 * k_max.max(0) as usize + 1)
}

pub fn extract_fourier_with_points(
    model: &SimModel,
    k_max: i64,
    points: usize,
) -> Result<FourierExtract> {
    let k_max = k_max.max(0);
    if points < 2 * k_max as usize + 1 {
        return Err(Error::InvalidArgument(format!(
            "{points} sample points cannot resolve frequencies up to {k_max}"
        )));
    }
    let samples: Vec<f64> = (0..points)
        .into_par_iter()
        .map(|m| model.evaluate(2.0 * PI * m as f64 / points as f64))
        .collect::<Result<_>>()?;
    let mut buf: Vec<Complex64> = samples.iter().map(|&f| Complex64::new(f, 0.0)).collect();
    forward_fft(&mut buf);
    let coefficients = (-k_max..=k_max)
        .map(|w| (w, buf[bin(w, points)] / points as f64))
        .collect();
    Ok(FourierExtract {
        coefficients,
        grid_points: points,
        samples,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportReport {
    pub k_max: i64,
    /// Largest `|c_ω|` with `ω` outside the exact spectrum.
    pub max_leak: f64,
    /// Exact frequencies with `|c_ω| > tol`.
    pub attained: BTreeSet<i64>,
    pub conjugate_residual: f64,
    pub parseval_residual: f64,
    pub pass: bool,
}

/// Checks that every coefficient outside `exact` vanishes to `tol`.
///
/// Frequencies are resolved up to twice the larger of the model's own bound
/// and `exact`'s radius, so the band beyond any predicted frequency is
/// checked too.
pub fn verify_support(model: &SimModel, exact: &SpectrumSet, tol: f64) -> Result<SupportReport> {
    let exact_ints: BTreeSet<i64> = exact
        .to_integers()
        .ok_or(Error::NonIntegerSpectrum)?
        .into_iter()
        .collect();
    let exact_radius = exact_ints.iter().map(|w| w.abs()).max().unwrap_or(0);
    let k_max = 2 * model.frequency_bound().max(exact_radius).max(1);
    let fx = extract_fourier(model, k_max)?;
    let max_leak = fx
        .coefficients
        .iter()
        .filter(|(w, _)| !exact_ints.contains(w))
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max);
    let attained = fx
        .support(tol)
        .into_iter()
        .filter(|w| exact_ints.contains(w))
        .collect();
    Ok(SupportReport {
        k_max,
        max_leak,
        attained,
        conjugate_residual: fx.conjugate_residual(),
        parseval_residual: fx.parseval_residual(),
        pass: max_leak <= tol,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Ansatz {
    Parallel,
    Sequential,
}

/// Two-variable model in the parallel or sequential ansatz.
#[derive(Clone, Debug)]
pub struct MultiModel {
    ansatz: Ansatz,
    /// Per variable, per layer: eigenvalue of each basis state of that
    /// variable's register.
    layer_eigenvalues: Vec<Vec<Vec<i64>>>,
    qubits: Vec<usize>,
    /// Parallel: `L + 1` unitaries on the joint register. Sequential: per
    /// variable, `L_n + 1` unitaries on the shared register.
    unitaries: Vec<Vec<CMatrix>>,
    observable: CMatrix,
    tol: Tolerances,
}

impl MultiModel {
    pub fn new(grids: &[GeneratorGrid], ansatz: Ansatz, seed: u64) -> Result<Self> {
        let tol = Tolerances::default();
        let layer_eigenvalues: Vec<_> = grids.iter().map(layer_eigenvalues).collect::<Result<_>>()?;
        let qubits: Vec<usize> = grids.iter().map(|g| g.qubits()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (dim, unitaries): (usize, Vec<Vec<CMatrix>>) = match ansatz {
            Ansatz::Parallel => {
                let layers = grids[0].layers();
                if grids.iter().any(|g| g.layers() != layers) {
                    return Err(Error::ShapeMismatch(
                        "parallel ansatz needs the same layer count for every variable".into(),
                    ));
                }
                let total: usize = qubits.iter().sum();
                check_register(total)?;
                let dim = 1usize << total;
                let us: Vec<CMatrix> = (0..=layers).map(|_| haar_unitary(dim, &mut rng)).collect();
                (dim, vec![us])
            }
            Ansatz::Sequential => {
                let r = qubits[0];
                if qubits.iter().any(|&q| q != r) {
                    return Err(Error::ShapeMismatch(
                        "sequential ansatz needs the same qubit count for every variable".into(),
                    ));
                }
                check_register(r)?;
                let dim = 1usize << r;
                let us = grids
                    .iter()
                    .map(|g| (0..=g.layers()).map(|_| haar_unitary(dim, &mut rng)).collect())
                    .collect();
                (dim, us)
            }
        };
        for us in &unitaries {
            check_unitaries(us, tol.unitarity)?;
        }
        let observable = random_hermitian(dim, &mut rng);
        Ok(MultiModel {
            ansatz,
            layer_eigenvalues,
            qubits,
            unitaries,
            observable,
            tol,
        })
    }

    pub fn state(&self, x: &[f64]) -> CVector {
        match self.ansatz {
            Ansatz::Parallel => {
                let us = &self.unitaries[0];
                let mut psi = us[0].column(0).into_owned();
                for (l, w) in us[1..].iter().enumerate() {
                    for (j, amp) in psi.iter_mut().enumerate() {
                        let mut rest = j;
                        let mut phase = 0.0;
                        for n in (0..self.qubits.len()).rev() {
                            let sub = 1usize << self.qubits[n];
                            phase += x[n] * self.layer_eigenvalues[n][l][rest % sub] as f64;
                            rest /= sub;
                        }
                        *amp *= Complex64::from_polar(1.0, -phase);
                    }
                    psi = w * psi;
                }
                psi
            }
            Ansatz::Sequential => {
                // U = U_1(x_1) ⋯ U_N(x_N): the last factor acts first.
                let dim = self.observable.nrows();
                let mut psi = CVector::zeros(dim);
                psi[0] = Complex64::new(1.0, 0.0);
                for n in (0..self.unitaries.len()).rev() {
                    let us = &self.unitaries[n];
                    psi = &us[0] * psi;
                    for (eig, w) in self.layer_eigenvalues[n].iter().zip(&us[1..]) {
                        diag_phase(&mut psi, eig, x[n]);
                        psi = w * psi;
                    }
                }
                psi
            }
        }
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        expectation(&self.state(x), &self.observable, self.tol.eval_imag)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiReport {
    pub ansatz: Ansatz,
    pub exact: MultiSpectrum,
    pub k_max: Vec<i64>,
    pub max_leak: f64,
    pub pass: bool,
}

/// Two-dimensional DFT of the model on a `(4K_1+1) × (4K_2+1)` grid, where
/// `K_n` bounds variable `n`'s frequencies; coefficients outside
/// `Ω_1 × Ω_2` must vanish.
pub fn verify_multivariate(
    grids: &[GeneratorGrid],
    ansatz: Ansatz,
    seed: u64,
    tol: f64,
) -> Result<MultiReport> {
    if grids.is_empty() || grids.len() > 2 {
        return Err(Error::DeskScaleLimit(format!(
            "multivariate verification supports 1 or 2 variables, got {}",
            grids.len()
        )));
    }
    let exact = multivariate_spectrum(grids)?;
    let bounds: Vec<i64> = grids.iter().map(frequency_bound).collect::<Result<_>>()?;
    if grids.len() == 1 {
        let model = random_model(&grids[0], seed)?;
        let rep = verify_support(&model, &exact.factors[0], tol)?;
        return Ok(MultiReport {
            ansatz,
            exact,
            k_max: vec![rep.k_max],
            max_leak: rep.max_leak,
            pass: rep.pass,
        });
    }
    if let Some(b) = bounds.iter().find(|&&b| b > MAX_MULTI_RADIUS) {
        return Err(Error::DeskScaleLimit(format!(
            "per-variable frequency radius {b} exceeds {MAX_MULTI_RADIUS}"
        )));
    }
    let factors: Vec<BTreeSet<i64>> = exact
        .factors
        .iter()
        .map(|f| f.to_integers().map(|v| v.into_iter().collect()))
        .collect::<Option<_>>()
        .ok_or(Error::NonIntegerSpectrum)?;
    let model = MultiModel::new(grids, ansatz, seed)?;
    let k_max: Vec<i64> = bounds.iter().map(|b| 2 * b.max(&1)).collect();
    let n1 = 2 * k_max[0] as usize + 1;
    let n2 = 2 * k_max[1] as usize + 1;
    let samples: Vec<f64> = (0..n1 * n2)
        .into_par_iter()
        .map(|idx| {
            let x1 = 2.0 * PI * (idx / n2) as f64 / n1 as f64;
            let x2 = 2.0 * PI * (idx % n2) as f64 / n2 as f64;
            model.evaluate(&[x1, x2])
        })
        .collect::<Result<_>>()?;
    let mut buf: Vec<Complex64> = samples.iter().map(|&f| Complex64::new(f, 0.0)).collect();
    for row in buf.chunks_mut(n2) {
        forward_fft(row);
    }
    for c in 0..n2 {
        let mut col: Vec<Complex64> = (0..n1).map(|r| buf[r * n2 + c]).collect();
        forward_fft(&mut col);
        for (r, v) in col.into_iter().enumerate() {
            buf[r * n2 + c] = v;
        }
    }
    let norm = (n1 * n2) as f64;
    let mut max_leak: f64 = 0.0;
    for w1 in -k_max[0]..=k_max[0] {
        for w2 in -k_max[1]..=k_max[1] {
            if factors[0].contains(&w1) && factors[1].contains(&w2) {
                continue;
            }
            let c = buf[bin(w1, n1) * n2 + bin(w2, n2)] / norm;
            max_leak = max_leak.max(c.norm());
        }
    }
    Ok(MultiReport {
        ansatz,
        exact,
        k_max,
        max_leak,
        pass: max_leak <= tol,
    })
}

/// Aggregate of [`verify_support`] over several seeds for one scheme.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeVerifyReport {
    pub scheme: SchemeKind,
    pub shape: Shape,
    pub exact_radius: i64,
    pub seeds: Vec<u64>,
    pub max_leak: f64,
    pub max_conjugate_residual: f64,
    pub max_parseval_residual: f64,
    /// Fraction of exact frequencies attained by at least one seed.
    pub attained_fraction: f64,
    pub pass: bool,
}

pub fn verify_scheme(
    kind: SchemeKind,
    shape: Shape,
    base: &EigenvalueList,
    seeds: &[u64],
    tol: f64,
) -> Result<SchemeVerifyReport> {
    let grid = schemes::build_scheme(kind, shape, base)?;
    let exact = spectrum_of_grid(&grid);
    let reports: Vec<SupportReport> = seeds
        .iter()
        .map(|&s| verify_support(&random_model(&grid, s)?, &exact, tol))
        .collect::<Result<_>>()?;
    let attained: BTreeSet<i64> = reports.iter().flat_map(|r| r.attained.iter().copied()).collect();
    let max = |f: fn(&SupportReport) -> f64| reports.iter().map(f).fold(0.0, f64::max);
    let max_leak = max(|r| r.max_leak);
    let max_conjugate_residual = max(|r| r.conjugate_residual);
    let max_parseval_residual = max(|r| r.parseval_residual);
    let radius = rational::to_i64(&exact.radius()).ok_or(Error::NonIntegerSpectrum)?;
    Ok(SchemeVerifyReport {
        scheme: kind,
        shape,
        exact_radius: radius,
        seeds: seeds.to_vec(),
        max_leak,
        max_conjugate_residual,
        max_parseval_residual,
        attained_fraction: attained.len() as f64 / exact.len() as f64,
        pass: max_leak <= tol && max_conjugate_residual <= tol && max_parseval_residual <= 10.0 * tol,
    })
}

/// `Rational` frequencies of an extract's support, for comparisons with
/// exact spectra.
pub fn support_as_spectrum(fx: &FourierExtract, threshold: f64) -> SpectrumSet {
    SpectrumSet::new(
        fx.support(threshold)
            .into_iter()
            .map(|w| Rational::from_integer(w.into()))
            .collect(),
    )
}
