//! Exact set algebra for frequency spectra.
//!
//! A spectrum is a finite, sorted, duplicate-free set of rationals. The
//! spectrum of an encoding is the Minkowski sum of the difference sets of
//! all sub-generator eigenvalue lists in its [`GeneratorGrid`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// Sorted, duplicate-free set of exact rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpectrum", into = "RawSpectrum")]
pub struct SpectrumSet {
    elements: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawSpectrum {
    #[serde(with = "rational::serde_rational_vec")]
    elements: Vec<Rational>,
}

impl TryFrom<RawSpectrum> for SpectrumSet {
    type Error = Error;

    fn try_from(raw: RawSpectrum) -> Result<Self> {
        if raw.elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(
                "spectrum elements must be strictly increasing".into(),
            ));
        }
        Ok(SpectrumSet {
            elements: raw.elements,
        })
    }
}

impl From<SpectrumSet> for RawSpectrum {
    fn from(s: SpectrumSet) -> Self {
        RawSpectrum {
            elements: s.elements,
        }
    }
}

impl SpectrumSet {
    pub fn new(mut elements: Vec<Rational>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        SpectrumSet { elements }
    }

    pub fn from_integers(values: impl IntoIterator<Item = i64>) -> Self {
        Self::new(values.into_iter().map(int).collect())
    }

    /// `Z_n = {-n, ..., n}`.
    pub fn integer_range(n: u64) -> Self {
        let n = i64::try_from(n).expect("range radius fits in i64");
        SpectrumSet {
            elements: (-n..=n).map(int).collect(),
        }
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Rational> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SpectrumSet) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    /// `x ∈ S ⇔ -x ∈ S`.
    pub fn is_symmetric(&self) -> bool {
        self.elements
            .iter()
            .zip(self.elements.iter().rev())
            .all(|(a, b)| *a == -b)
    }

    /// Largest absolute value, zero for the empty set.
    pub fn radius(&self) -> Rational {
        match (self.elements.first(), self.elements.last()) {
            (Some(lo), Some(hi)) => lo.abs().max(hi.abs()),
            _ => Rational::zero(),
        }
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &SpectrumSet) -> Vec<Rational> {
        self.elements
            .iter()
            .filter(|x| !other.contains(x))
            .cloned()
            .collect()
    }

    /// Elements as `i64` when every element is an integer.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.elements.iter().map(rational::to_i64).collect()
    }

    /// Short human-readable rendering, e.g. `Z_4` or `{-3/2, 0, 3/2}`.
    pub fn describe(&self) -> String {
        if let Some(k) = integer_range_radius(self) {
            return format!("Z_{k}");
        }
        let shown: Vec<String> = self
            .elements
            .iter()
            .take(12)
            .map(rational::format_rational)
            .collect();
        if self.len() > 12 {
            format!("{{{}, ... ({} elements)}}", shown.join(", "), self.len())
        } else {
            format!("{{{}}}", shown.join(", "))
        }
    }
}

/// Returns `n` if the set is exactly `Z_n`.
fn integer_range_radius(s: &SpectrumSet) -> Option<u64> {
    let n = s.len().checked_sub(1)? / 2;
    if s.len().is_multiple_of(2) {
        return None;
    }
    let ok = s
        .elements
        .iter()
        .zip(-(n as i64)..)
        .all(|(x, i)| *x == int(i));
    ok.then_some(n as u64)
}

/// Eigenvalues of one sub-generator, multiplicity allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EigenvalueList {
    #[serde(with = "rational::serde_rational_vec")]
    values: Vec<Rational>,
}

impl EigenvalueList {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidGrid("eigenvalue list is empty".into()));
        }
        Ok(EigenvalueList { values })
    }

    pub fn from_integers(values: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::new(values.into_iter().map(int).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_set(&self) -> SpectrumSet {
        SpectrumSet::new(self.values.clone())
    }

    /// `λ_max − λ_min`.
    pub fn span(&self) -> Rational {
        let max = self.values.iter().max().expect("nonempty");
        let min = self.values.iter().min().expect("nonempty");
        max - min
    }

    pub fn scaled(&self, factor: &Rational) -> EigenvalueList {
        EigenvalueList {
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Rectangle of sub-generators: `rows = R/q` qubit blocks by `cols = L`
/// layers. Every cell has dimension `2^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct GeneratorGrid {
    q: u32,
    cells: Vec<Vec<EigenvalueList>>,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    q: u32,
    cells: Vec<Vec<EigenvalueList>>,
}

impl TryFrom<RawGrid> for GeneratorGrid {
    type Error = Error;

    fn try_from(raw: RawGrid) -> Result<Self> {
        GeneratorGrid::new(raw.q, raw.cells)
    }
}

impl From<GeneratorGrid> for RawGrid {
    fn from(g: GeneratorGrid) -> Self {
        RawGrid {
            q: g.q,
            cells: g.cells,
        }
    }
}

impl GeneratorGrid {
    /// `cells` is row-major: `cells[r][l]` is the sub-generator of qubit
    /// block `r` in layer `l`.
    pub fn new(q: u32, cells: Vec<Vec<EigenvalueList>>) -> Result<Self> {
        if q == 0 || q > 16 {
            return Err(Error::InvalidGrid(format!("q = {q} must be in 1..=16")));
        }
        let Some(first_row) = cells.first() else {
            return Err(Error::InvalidGrid("grid has no rows".into()));
        };
        let cols = first_row.len();
        if cols == 0 {
            return Err(Error::InvalidGrid("grid has no columns".into()));
        }
        let k = 1usize << q;
        for (r, row) in cells.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidGrid(format!(
                    "row {r} has {} cells, expected {cols}",
                    row.len()
                )));
            }
            for (l, cell) in row.iter().enumerate() {
                if cell.len() != k {
                    return Err(Error::InvalidGrid(format!(
                        "cell ({r}, {l}) has dimension {}, expected 2^{q} = {k}",
                        cell.len()
                    )));
                }
            }
        }
        Ok(GeneratorGrid { q, cells })
    }

    /// Builds a grid from a per-cell function of `(row, col)`.
    pub fn from_fn(
        q: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> EigenvalueList,
    ) -> Result<Self> {
        let cells = (0..rows)
            .map(|r| (0..cols).map(|l| f(r, l)).collect())
            .collect();
        Self::new(q, cells)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells[0].len()
    }

    /// Dimension `k = 2^q` of every cell.
    pub fn cell_dim(&self) -> usize {
        1 << self.q
    }

    /// Total qubit count `R = rows · q`.
    pub fn qubits(&self) -> usize {
        self.rows() * self.q as usize
    }

    pub fn layers(&self) -> usize {
        self.cols()
    }

    /// `A = R · L`.
    pub fn area(&self) -> usize {
        self.qubits() * self.cols()
    }

    pub fn cell(&self, row: usize, col: usize) -> &EigenvalueList {
        &self.cells[row][col]
    }

    pub fn cells(&self) -> &[Vec<EigenvalueList>] {
        &self.cells
    }

    /// Cells in row-major order.
    pub fn iter_cells(&self) -> impl Iterator<Item = &EigenvalueList> {
        self.cells.iter().flatten()
    }

    pub fn num_cells(&self) -> usize {
        self.rows() * self.cols()
    }

    /// `Π_cells k²`, the number of ordered index-pair tuples.
    pub fn representation_count(&self) -> BigUint {
        let k2 = BigUint::from(self.cell_dim() * self.cell_dim());
        num_traits::pow(k2, self.num_cells())
    }
}

/// Cartesian product `Ω_1 × … × Ω_N`, kept factored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSpectrum {
    pub factors: Vec<SpectrumSet>,
}

impl MultiSpectrum {
    pub fn total_size(&self) -> BigUint {
        self.factors
            .iter()
            .map(|f| BigUint::from(f.len()))
            .product()
    }

    pub fn contains(&self, point: &[Rational]) -> bool {
        point.len() == self.factors.len()
            && self.factors.iter().zip(point).all(|(f, x)| f.contains(x))
    }
}

pub fn minkowski_sum(a: &SpectrumSet, b: &SpectrumSet) -> SpectrumSet {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a.elements {
        for y in &b.elements {
            out.push(x + y);
        }
    }
    SpectrumSet::new(out)
}

/// Minkowski sum of any number of sets; the empty sum is `{0}`.
pub fn minkowski_sum_all<'a>(sets: impl IntoIterator<Item = &'a SpectrumSet>) -> SpectrumSet {
    sets.into_iter()
        .fold(SpectrumSet::from_integers([0]), |acc, s| minkowski_sum(&acc, s))
}

/// `ΔA = {a − b | a, b ∈ A}`.
pub fn delta(a: &SpectrumSet) -> Result<SpectrumSet> {
    if a.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let neg = scale(a, &int(-1));
    Ok(minkowski_sum(a, &neg))
}

pub fn scale(a: &SpectrumSet, r: &Rational) -> SpectrumSet {
    SpectrumSet::new(a.elements.iter().map(|x| x * r).collect())
}

/// `Σ_cells Δσ(H_{r,l})`.
pub fn spectrum_of_grid(grid: &GeneratorGrid) -> SpectrumSet {
    spectrum_of_grid_capped(grid, usize::MAX).expect("uncapped")
}

/// As [`spectrum_of_grid`], failing once an intermediate sum exceeds `limit`
/// elements.
pub fn spectrum_of_grid_capped(grid: &GeneratorGrid, limit: usize) -> Result<SpectrumSet> {
    let mut acc = SpectrumSet::from_integers([0]);
    for cell in grid.iter_cells() {
        let d = delta(&cell.as_set())?;
        acc = minkowski_sum(&acc, &d);
        if acc.len() > limit {
            return Err(Error::LimitExceeded {
                size: acc.len(),
                limit,
            });
        }
    }
    Ok(acc)
}

/// Number of ordered representations of every frequency. Counts index
/// pairs, so repeated eigenvalues contribute separately.
pub fn degeneracy_table(grid: &GeneratorGrid) -> BTreeMap<Rational, BigUint> {
    let mut acc: BTreeMap<Rational, BigUint> = BTreeMap::new();
    acc.insert(Rational::zero(), BigUint::one());
    for cell in grid.iter_cells() {
        let mut diffs: BTreeMap<Rational, BigUint> = BTreeMap::new();
        for a in cell.values() {
            for b in cell.values() {
                *diffs.entry(a - b).or_default() += 1u32;
            }
        }
        let mut next: BTreeMap<Rational, BigUint> = BTreeMap::new();
        for (x, cx) in &acc {
            for (y, cy) in &diffs {
                *next.entry(x + y).or_default() += cx * cy;
            }
        }
        acc = next;
    }
    acc
}

pub fn degeneracy(grid: &GeneratorGrid, omega: &Rational) -> BigUint {
    degeneracy_table(grid)
        .remove(omega)
        .unwrap_or_else(BigUint::zero)
}

/// Largest `K` with `{−K, …, K} ⊆ a`.
pub fn contiguous_k(a: &SpectrumSet) -> Result<u64> {
    if !a.contains(&Rational::zero()) {
        return Err(Error::ZeroMissing);
    }
    let mut k = 0u64;
    loop {
        let next = int(k as i64 + 1);
        if a.contains(&next) && a.contains(&-&next) {
            k += 1;
        } else {
            return Ok(k);
        }
    }
}

pub fn multivariate_spectrum(grids: &[GeneratorGrid]) -> Result<MultiSpectrum> {
    if grids.is_empty() {
        return Err(Error::InvalidArgument(
            "multivariate spectrum needs at least one grid".into(),
        ));
    }
    Ok(MultiSpectrum {
        factors: grids.iter().map(spectrum_of_grid).collect(),
    })
}
