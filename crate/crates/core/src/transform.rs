//! Area-preserving rearrangements of sub-generator grids.
//!
//! Moving sub-generators between qubit blocks and layers only permutes the
//! summands of `Σ Δσ(H_{r,l})`, so the frequency spectrum is unchanged as
//! long as the number of cells is. Fourier coefficients are not preserved.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::{spectrum_of_grid, GeneratorGrid, SpectrumSet};

/// A source cell paired with its target cell, both as `(row, col)`.
pub type CellPair = ((usize, usize), (usize, usize));

/// Pairs every target cell with a distinct source cell. Shapes are in
/// cells: `(rows, cols) = (R/q, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridBijection {
    source_shape: (usize, usize),
    target_shape: (usize, usize),
    /// `source_of[t]` is the row-major source index for row-major target `t`.
    source_of: Vec<usize>,
}

/// JSON form: `{"pairs": [[[r, l], [r', l']], …]}` pairing source `(r, l)`
/// with target `(r', l')`. Shapes are inferred from the pairs when absent.
#[derive(Serialize, Deserialize)]
struct RawBijection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source_shape: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target_shape: Option<(usize, usize)>,
    pairs: Vec<CellPair>,
}

impl Serialize for GridBijection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawBijection {
            source_shape: Some(self.source_shape),
            target_shape: Some(self.target_shape),
            pairs: self.pairs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridBijection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBijection::deserialize(d)?;
        let infer = |f: fn(&CellPair) -> (usize, usize)| {
            raw.pairs.iter().map(f).fold((0, 0), |(mr, mc), (r, c)| {
                (mr.max(r + 1), mc.max(c + 1))
            })
        };
        let src = raw.source_shape.unwrap_or_else(|| infer(|p| p.0));
        let dst = raw.target_shape.unwrap_or_else(|| infer(|p| p.1));
        GridBijection::from_pairs(src, dst, &raw.pairs).map_err(serde::de::Error::custom)
    }
}

impl GridBijection {
    pub fn from_pairs(
        source_shape: (usize, usize),
        target_shape: (usize, usize),
        pairs: &[CellPair],
    ) -> Result<Self> {
        check_area(source_shape, target_shape)?;
        let area = source_shape.0 * source_shape.1;
        if pairs.len() != area {
            return Err(Error::InvalidBijection(format!(
                "{} pairs for {area} cells",
                pairs.len()
            )));
        }
        let mut source_of = vec![usize::MAX; area];
        let mut used = vec![false; area];
        for &((r, l), (rt, lt)) in pairs {
            if r >= source_shape.0 || l >= source_shape.1 {
                return Err(Error::InvalidBijection(format!(
                    "source cell ({r}, {l}) outside {source_shape:?}"
                )));
            }
            if rt >= target_shape.0 || lt >= target_shape.1 {
                return Err(Error::InvalidBijection(format!(
                    "target cell ({rt}, {lt}) outside {target_shape:?}"
                )));
            }
            let s = r * source_shape.1 + l;
            let t = rt * target_shape.1 + lt;
            if used[s] || source_of[t] != usize::MAX {
                return Err(Error::InvalidBijection(format!(
                    "cell ({r}, {l}) -> ({rt}, {lt}) reuses a cell"
                )));
            }
            used[s] = true;
            source_of[t] = s;
        }
        Ok(GridBijection {
            source_shape,
            target_shape,
            source_of,
        })
    }

    /// Bijection from a permutation: target cell `t` (row-major) takes
    /// source cell `perm[t]`.
    pub fn from_permutation(
        source_shape: (usize, usize),
        target_shape: (usize, usize),
        perm: &[usize],
    ) -> Result<Self> {
        let pairs: Vec<_> = perm
            .iter()
            .enumerate()
            .map(|(t, &s)| {
                (
                    (s / source_shape.1.max(1), s % source_shape.1.max(1)),
                    (t / target_shape.1.max(1), t % target_shape.1.max(1)),
                )
            })
            .collect();
        Self::from_pairs(source_shape, target_shape, &pairs)
    }

    pub fn source_shape(&self) -> (usize, usize) {
        self.source_shape
    }

    pub fn target_shape(&self) -> (usize, usize) {
        self.target_shape
    }

    pub fn pairs(&self) -> Vec<CellPair> {
        let (_, sc) = self.source_shape;
        let (_, tc) = self.target_shape;
        self.source_of
            .iter()
            .enumerate()
            .map(|(t, &s)| ((s / sc, s % sc), (t / tc, t % tc)))
            .collect()
    }

    /// `other ∘ self`: apply `self`, then `other`.
    pub fn then(&self, other: &GridBijection) -> Result<GridBijection> {
        if other.source_shape != self.target_shape {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {:?} -> {:?} with {:?} -> {:?}",
                self.source_shape, self.target_shape, other.source_shape, other.target_shape
            )));
        }
        Ok(GridBijection {
            source_shape: self.source_shape,
            target_shape: other.target_shape,
            source_of: other
                .source_of
                .iter()
                .map(|&mid| self.source_of[mid])
                .collect(),
        })
    }
}

fn check_area(src: (usize, usize), dst: (usize, usize)) -> Result<()> {
    if src.0 * src.1 != dst.0 * dst.1 || src.0 * src.1 == 0 {
        return Err(Error::AreaMismatch {
            src_rows: src.0,
            src_cols: src.1,
            dst_rows: dst.0,
            dst_cols: dst.1,
        });
    }
    Ok(())
}

/// Row-major flattening of the source paired with row-major flattening of
/// the target.
pub fn canonical_bijection(src: (usize, usize), dst: (usize, usize)) -> Result<GridBijection> {
    check_area(src, dst)?;
    Ok(GridBijection {
        source_shape: src,
        target_shape: dst,
        source_of: (0..src.0 * src.1).collect(),
    })
}

pub fn apply(grid: &GeneratorGrid, b: &GridBijection) -> Result<GeneratorGrid> {
    if (grid.rows(), grid.cols()) != b.source_shape {
        return Err(Error::ShapeMismatch(format!(
            "grid is {}x{}, bijection expects {:?}",
            grid.rows(),
            grid.cols(),
            b.source_shape
        )));
    }
    let flat: Vec<_> = grid.iter_cells().collect();
    let (rows, cols) = b.target_shape;
    GeneratorGrid::from_fn(grid.q(), rows, cols, |r, l| {
        flat[b.source_of[r * cols + l]].clone()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    /// `(R, L)` of the input grid.
    pub source: (usize, usize),
    /// `(R', L')` of the rearranged grid.
    pub target: (usize, usize),
    pub spectra_equal: bool,
    pub spectrum: SpectrumSet,
    pub target_spectrum: SpectrumSet,
}

/// Rearranges `grid` into `target = (R', L')` (qubits × layers) with the
/// canonical bijection and compares both exact spectra.
pub fn invariance_report(grid: &GeneratorGrid, target: (usize, usize)) -> Result<InvarianceReport> {
    let q = grid.q() as usize;
    if !target.0.is_multiple_of(q) {
        return Err(Error::ShapeMismatch(format!(
            "q = {q} does not divide target qubit count {}",
            target.0
        )));
    }
    let b = canonical_bijection((grid.rows(), grid.cols()), (target.0 / q, target.1))?;
    let moved = apply(grid, &b)?;
    let spectrum = spectrum_of_grid(grid);
    let target_spectrum = spectrum_of_grid(&moved);
    Ok(InvarianceReport {
        source: (grid.qubits(), grid.layers()),
        target,
        spectra_equal: spectrum == target_spectrum,
        spectrum,
        target_spectrum,
    })
}
