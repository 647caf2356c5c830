//! Encoding strategies: scaled sub-generator layouts, their closed-form
//! spectra, and certification that the two agree.
//!
//! Every scheme places `β_{r,l} · H` in cell `(r, l)` for one base
//! generator `H` given by its eigenvalues. Exponent layouts use the
//! row-major index `e = l + L·r` (zero-based).

use std::fmt;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golomb;
use crate::rational::{int, Rational};
use crate::spectrum::{
    contiguous_k, minkowski_sum_all, scale, spectrum_of_grid_capped, EigenvalueList,
    GeneratorGrid, SpectrumSet,
};
use crate::turnpike;

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeKind {
    Hamming,
    SequentialExponential,
    ParallelExponential,
    Binary,
    Ternary,
    EqualLayers,
    Golomb,
    Turnpike,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 8] = [
        SchemeKind::Hamming,
        SchemeKind::SequentialExponential,
        SchemeKind::ParallelExponential,
        SchemeKind::Binary,
        SchemeKind::Ternary,
        SchemeKind::EqualLayers,
        SchemeKind::Golomb,
        SchemeKind::Turnpike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::Hamming => "hamming",
            SchemeKind::SequentialExponential => "sequential-exponential",
            SchemeKind::ParallelExponential => "parallel-exponential",
            SchemeKind::Binary => "binary",
            SchemeKind::Ternary => "ternary",
            SchemeKind::EqualLayers => "equal-layers",
            SchemeKind::Golomb => "golomb",
            SchemeKind::Turnpike => "turnpike",
        }
    }

    /// Kinds built from a two-level generator with unit eigenvalue gap.
    pub fn is_two_level(self) -> bool {
        !matches!(self, SchemeKind::Golomb | SchemeKind::Turnpike)
    }

    /// Whether every layer carries the same generator.
    pub fn equal_layers(self) -> Option<bool> {
        match self {
            SchemeKind::Hamming | SchemeKind::EqualLayers => Some(true),
            SchemeKind::ParallelExponential | SchemeKind::Binary => None,
            _ => Some(false),
        }
    }

    pub fn beta_formula(self) -> &'static str {
        match self {
            SchemeKind::Hamming => "1",
            SchemeKind::SequentialExponential | SchemeKind::ParallelExponential => {
                "1,2,...,2^(A-2),2^(A-1)+1"
            }
            SchemeKind::Binary => "2^(r-1)",
            SchemeKind::Ternary => "3^(l-1+L(r-1))",
            SchemeKind::EqualLayers => "(2L+1)^(r-1)",
            SchemeKind::Golomb => "(2*len+1)^(l-1+L(r-1))",
            SchemeKind::Turnpike => "(K+1)^(l-1+L(r-1))",
        }
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `r` qubits, `l` layers, `q` qubits per sub-generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub r: usize,
    pub l: usize,
    pub q: u32,
}

impl Shape {
    pub fn new(r: usize, l: usize, q: u32) -> Self {
        Shape { r, l, q }
    }

    pub fn rows(&self) -> usize {
        self.r / self.q as usize
    }

    pub fn area(&self) -> usize {
        self.r * self.l
    }

    /// Number of sub-generator cells, `RL/q`.
    pub fn cells(&self) -> usize {
        self.rows() * self.l
    }
}

/// One certified row of the scheme summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeReport {
    pub kind: SchemeKind,
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub q: u32,
    pub base: EigenvalueList,
    pub grid: GeneratorGrid,
    pub predicted: String,
    pub computed: SpectrumSet,
    pub size: usize,
    pub k_contig: u64,
    pub size_bound: BigUint,
    pub k_bound: Option<BigUint>,
    pub maximal_in_size: bool,
    pub maximal_in_k: bool,
}

fn shape_error(msg: impl Into<String>) -> Error {
    Error::SchemeConstraint(msg.into())
}

fn checked_pow(base: u64, exp: usize) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::InvalidArgument(format!("{base}^{exp} overflows u64")))
}

fn validate(kind: SchemeKind, shape: Shape, base: &EigenvalueList) -> Result<()> {
    let Shape { r, l, q } = shape;
    if r == 0 || l == 0 || q == 0 {
        return Err(shape_error("R, L and q must all be positive"));
    }
    if kind.is_two_level() {
        if q != 1 {
            return Err(shape_error(format!(
                "{kind} uses single-qubit sub-generators (q = 1), got q = {q}"
            )));
        }
        if base.len() != 2 || base.span() != Rational::one() {
            return Err(shape_error(format!(
                "{kind} needs a two-level base generator with eigenvalue gap 1"
            )));
        }
    }
    match kind {
        SchemeKind::SequentialExponential if r != 1 => {
            return Err(shape_error("sequential exponential encoding requires R = 1"))
        }
        SchemeKind::ParallelExponential if l != 1 => {
            return Err(shape_error("parallel exponential encoding requires L = 1"))
        }
        SchemeKind::Binary if l != 1 => {
            return Err(shape_error("binary encoding requires L = 1"))
        }
        SchemeKind::Golomb | SchemeKind::Turnpike => {
            if r % q as usize != 0 {
                return Err(shape_error(format!("q = {q} must divide R = {r}")));
            }
            if base.len() != 1 << q {
                return Err(shape_error(format!(
                    "{kind} base must have 2^q = {} eigenvalues, got {}",
                    1u64 << q,
                    base.len()
                )));
            }
            if base.values().iter().any(|v| !v.is_integer()) {
                return Err(shape_error(format!("{kind} base must be integer-valued")));
            }
            if kind == SchemeKind::Golomb && !golomb::is_golomb(base.values()) {
                return Err(shape_error("golomb base eigenvalues must form a Golomb ruler"));
            }
        }
        _ => {}
    }
    Ok(())
}

fn base_integers(base: &EigenvalueList) -> Vec<i64> {
    base.values()
        .iter()
        .map(|v| v.to_integer().to_i64().expect("base eigenvalue fits in i64"))
        .collect()
}

/// Scale factors `β_{r,l}` for each cell.
pub fn betas(kind: SchemeKind, shape: Shape, base: &EigenvalueList) -> Result<Vec<Vec<BigInt>>> {
    validate(kind, shape, base)?;
    let rows = shape.rows();
    let cols = shape.l;
    let pow = |b: BigInt, e: usize| num_traits::pow(b, e);
    // Powers of two along one axis, with +1 on the last factor once A >= 2.
    let exponential = |i: usize, a: usize| {
        let p = pow(BigInt::from(2), i);
        if a >= 2 && i == a - 1 {
            p + 1
        } else {
            p
        }
    };
    let layout_base = match kind {
        SchemeKind::Golomb => {
            let len = base.span().to_integer();
            Some(len * 2 + 1)
        }
        SchemeKind::Turnpike => {
            let k = turnpike::k_of(&base_integers(base))?;
            if k == 0 {
                return Err(Error::NoUnitStep);
            }
            Some(BigInt::from(k + 1))
        }
        SchemeKind::Ternary => Some(BigInt::from(3)),
        _ => None,
    };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for (r, row) in out.iter_mut().enumerate() {
        for (l, beta) in row.iter_mut().enumerate() {
            *beta = match kind {
                SchemeKind::Hamming => BigInt::one(),
                SchemeKind::SequentialExponential => exponential(l, cols),
                SchemeKind::ParallelExponential => exponential(r, rows),
                SchemeKind::Binary => pow(BigInt::from(2), r),
                SchemeKind::EqualLayers => pow(BigInt::from(2 * cols + 1), r),
                SchemeKind::Ternary | SchemeKind::Golomb | SchemeKind::Turnpike => pow(
                    layout_base.clone().expect("layout base set"),
                    l + cols * r,
                ),
            };
        }
    }
    Ok(out)
}

pub fn build_scheme(kind: SchemeKind, shape: Shape, base: &EigenvalueList) -> Result<GeneratorGrid> {
    let betas = betas(kind, shape, base)?;
    GeneratorGrid::from_fn(shape.q, shape.rows(), shape.l, |r, l| {
        base.scaled(&Rational::from_integer(betas[r][l].clone()))
    })
}

/// Radius `n` of the closed form `Z_n` for a unit-gap base.
pub fn closed_form_radius(kind: SchemeKind, shape: Shape) -> Result<u64> {
    let Shape { r, l, .. } = shape;
    let a = r * l;
    match kind {
        SchemeKind::Hamming => Ok(a as u64),
        SchemeKind::SequentialExponential | SchemeKind::ParallelExponential => {
            if a == 1 {
                Ok(1)
            } else {
                checked_pow(2, a)
            }
        }
        SchemeKind::Binary => Ok(checked_pow(2, r)? - 1),
        SchemeKind::Ternary => Ok((checked_pow(3, a)? - 1) / 2),
        SchemeKind::EqualLayers => Ok((checked_pow(2 * l as u64 + 1, r)? - 1) / 2),
        SchemeKind::Golomb | SchemeKind::Turnpike => Err(Error::NoClosedForm),
    }
}

/// Closed-form spectrum `span · Z_n`.
pub fn predicted_spectrum(kind: SchemeKind, shape: Shape, base_span: &Rational) -> Result<SpectrumSet> {
    let n = closed_form_radius(kind, shape)?;
    Ok(scale(&SpectrumSet::integer_range(n), base_span))
}

/// `(4^q − 2^q + 1)^(RL/q)`, the size of a maximal spectrum with
/// `2^q`-dimensional sub-generators.
pub fn golomb_size(shape: Shape) -> BigUint {
    let k = BigUint::from(1u64 << shape.q);
    let per_cell = &k * &k - &k + 1u32;
    num_traits::pow(per_cell, shape.cells())
}

/// `(K+1)^(RL/q) − 1`.
pub fn turnpike_radius(k: u64, shape: Shape) -> Result<u64> {
    if k == 0 {
        return Err(Error::NoUnitStep);
    }
    Ok(checked_pow(k + 1, shape.cells())? - 1)
}

/// Largest possible `|Ω|` for the scheme's setting.
pub fn size_bound(kind: SchemeKind, shape: Shape) -> BigUint {
    if kind == SchemeKind::EqualLayers {
        num_traits::pow(BigUint::from(2 * shape.l + 1), shape.r)
    } else {
        golomb_size(shape)
    }
}

/// Largest possible contiguous radius for the scheme's setting, when known.
pub fn k_bound(kind: SchemeKind, shape: Shape) -> Option<BigUint> {
    if kind == SchemeKind::EqualLayers {
        let full = num_traits::pow(BigUint::from(2 * shape.l + 1), shape.r);
        return Some((full - 1u32) / 2u32);
    }
    if shape.q == 1 {
        let full = num_traits::pow(BigUint::from(3u32), shape.area());
        return Some((full - 1u32) / 2u32);
    }
    if shape.cells() == 1 {
        return turnpike::known_optimum(1 << shape.q).map(BigUint::from);
    }
    None
}

pub fn certify(kind: SchemeKind, shape: Shape, base: &EigenvalueList) -> Result<SchemeReport> {
    certify_with_limit(kind, shape, base, usize::MAX)
}

pub fn certify_with_limit(
    kind: SchemeKind,
    shape: Shape,
    base: &EigenvalueList,
    limit: usize,
) -> Result<SchemeReport> {
    let grid = build_scheme(kind, shape, base)?;
    let computed = spectrum_of_grid_capped(&grid, limit)?;
    let predicted = check_prediction(kind, shape, base, &computed)?;
    let k_contig = contiguous_k(&computed)?;
    let size_bound = size_bound(kind, shape);
    let k_bound = k_bound(kind, shape);
    Ok(SchemeReport {
        kind,
        r: shape.r,
        l: shape.l,
        q: shape.q,
        base: base.clone(),
        grid,
        predicted,
        size: computed.len(),
        maximal_in_size: BigUint::from(computed.len()) == size_bound,
        maximal_in_k: k_bound.as_ref() == Some(&BigUint::from(k_contig)),
        computed,
        k_contig,
        size_bound,
        k_bound,
    })
}

/// Compares a computed spectrum with the scheme's prediction and returns
/// the prediction's description.
pub fn check_prediction(
    kind: SchemeKind,
    shape: Shape,
    base: &EigenvalueList,
    computed: &SpectrumSet,
) -> Result<String> {
    match kind {
        SchemeKind::Golomb => {
            let want = golomb_size(shape);
            if BigUint::from(computed.len()) != want {
                return Err(Error::Verification(format!(
                    "golomb spectrum has {} elements, predicted {want}",
                    computed.len()
                )));
            }
            Ok(format!("|Omega| = {want}"))
        }
        SchemeKind::Turnpike => {
            let k = turnpike::k_of(&base_integers(base))?;
            let radius = turnpike_radius(k, shape)?;
            let range = SpectrumSet::integer_range(radius);
            let missing = range.difference(computed);
            if !missing.is_empty() {
                return Err(Error::Certification {
                    kind: kind.to_string(),
                    missing,
                    extra: Vec::new(),
                });
            }
            Ok(format!("Z_{radius} subset of Omega"))
        }
        _ => {
            let predicted = predicted_spectrum(kind, shape, &base.span())?;
            if predicted != *computed {
                return Err(Error::Certification {
                    kind: kind.to_string(),
                    missing: predicted.difference(computed),
                    extra: computed.difference(&predicted),
                });
            }
            Ok(predicted.describe())
        }
    }
}

/// Whether `Σ_r z_r · Z_L = Z_{((2L+1)^R − 1)/2}`.
pub fn uniqueness_check(r: usize, l: usize, z: &[Rational]) -> bool {
    if z.len() != r {
        return false;
    }
    let Ok(target) = closed_form_radius(SchemeKind::EqualLayers, Shape::new(r, l, 1)) else {
        return false;
    };
    let row = SpectrumSet::integer_range(l as u64);
    let scaled: Vec<SpectrumSet> = z.iter().map(|zr| scale(&row, zr)).collect();
    minkowski_sum_all(&scaled) == SpectrumSet::integer_range(target)
}

/// Every nondecreasing tuple `0 ≤ z_1 ≤ … ≤ z_R ≤ max_z` passing
/// [`uniqueness_check`].
pub fn equal_layer_solutions(r: usize, l: usize, max_z: u64) -> Vec<Vec<u64>> {
    fn rec(r: usize, l: usize, max_z: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == r {
            let z: Vec<Rational> = prefix.iter().map(|&v| int(v as i64)).collect();
            if uniqueness_check(r, l, &z) {
                out.push(prefix.clone());
            }
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for v in lo..=max_z {
            prefix.push(v);
            rec(r, l, max_z, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, l, max_z, &mut Vec::new(), &mut out);
    out
}

/// Base generator used when none is supplied: `{0, 1}` for single-qubit
/// cells, otherwise the smallest optimal relaxed-turnpike set of size
/// `2^q` (a Golomb ruler for `q ≤ 2`).
pub fn default_base(kind: SchemeKind, q: u32) -> Result<EigenvalueList> {
    let k = 1usize << q;
    let marks: &[u64] = match (kind, q) {
        (_, 1) => &[0, 1],
        (SchemeKind::Golomb, 2) | (SchemeKind::Turnpike, 2) => &[0, 1, 4, 6],
        (SchemeKind::Golomb, 3) => &[0, 1, 4, 9, 15, 22, 32, 34],
        (SchemeKind::Turnpike, 3) => turnpike::TABLE_TWO[k - 1].3,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no default base for {kind} with q = {q}; pass one explicitly"
            )))
        }
    };
    EigenvalueList::from_integers(marks.iter().map(|&m| m as i64))
}

/// Scheme/shape/base combinations instantiated by [`table_one`].
pub fn table_one_rows(max_r: usize, max_l: usize) -> Vec<(SchemeKind, Shape)> {
    let mut rows = Vec::new();
    for kind in SchemeKind::ALL {
        for r in 1..=max_r {
            for l in 1..=max_l {
                let applicable = match kind {
                    SchemeKind::SequentialExponential => r == 1,
                    SchemeKind::ParallelExponential | SchemeKind::Binary => l == 1,
                    _ => true,
                };
                if !applicable {
                    continue;
                }
                if kind.is_two_level() {
                    rows.push((kind, Shape::new(r, l, 1)));
                } else {
                    for q in 1..=3u32 {
                        if r % q as usize == 0 {
                            rows.push((kind, Shape::new(r, l, q)));
                        }
                    }
                }
            }
        }
    }
    rows
}

/// Certifies every applicable scheme for `R ≤ max_r`, `L ≤ max_l`.
pub fn table_one(max_r: usize, max_l: usize) -> Result<Vec<SchemeReport>> {
    table_one_with_limit(max_r, max_l, usize::MAX)
}

pub fn table_one_with_limit(max_r: usize, max_l: usize, limit: usize) -> Result<Vec<SchemeReport>> {
    table_one_rows(max_r, max_l)
        .into_par_iter()
        .map(|(kind, shape)| {
            let base = default_base(kind, shape.q)?;
            certify_with_limit(kind, shape, &base, limit)
        })
        .collect()
}

fn maximal_label(report: &SchemeReport) -> &'static str {
    match (report.maximal_in_size, report.maximal_in_k) {
        (true, true) => "|Omega|, K",
        (true, false) => "|Omega|",
        (false, true) => "K",
        (false, false) => "no",
    }
}

/// CSV in summary-table column order.
pub fn table_one_csv(reports: &[SchemeReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "encoding", "R", "L", "H", "beta", "equal", "omega", "size", "k_contig", "maximal",
    ])
    .map_err(|e| Error::Parse(e.to_string()))?;
    for rep in reports {
        let h = if rep.kind.is_two_level() {
            "P/2".to_string()
        } else {
            (1u64 << rep.q).to_string()
        };
        let equal = match rep.kind.equal_layers() {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        w.write_record([
            rep.kind.name(),
            &rep.r.to_string(),
            &rep.l.to_string(),
            &h,
            rep.kind.beta_formula(),
            equal,
            &rep.predicted,
            &rep.size.to_string(),
            &rep.k_contig.to_string(),
            maximal_label(rep),
        ])
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
