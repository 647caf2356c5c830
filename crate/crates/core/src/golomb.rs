//! Golomb rulers: verification, statistics and exact optimal-ruler search.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::spectrum::{contiguous_k, delta, SpectrumSet};

/// Largest order accepted by [`search_optimal`].
pub const MAX_SEARCH_ORDER: usize = 9;

/// Strictly increasing marks starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ruler {
    marks: Vec<BigUint>,
}

impl Ruler {
    pub fn new(marks: Vec<BigUint>) -> Result<Self> {
        match marks.first() {
            None => return Err(Error::InvalidArgument("ruler has no marks".into())),
            Some(m) if *m != BigUint::ZERO => {
                return Err(Error::InvalidArgument("ruler must start at 0".into()))
            }
            _ => {}
        }
        if marks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "ruler marks must be strictly increasing".into(),
            ));
        }
        Ok(Ruler { marks })
    }

    pub fn from_u64(marks: &[u64]) -> Result<Self> {
        Self::new(marks.iter().map(|&m| BigUint::from(m)).collect())
    }

    /// Shifts sorted integer marks so the first one is 0.
    pub fn canonical(marks: &[Rational]) -> Result<Self> {
        let mut sorted = marks.to_vec();
        sorted.sort();
        let Some(first) = sorted.first().cloned() else {
            return Err(Error::InvalidArgument("ruler has no marks".into()));
        };
        let shifted = sorted
            .into_iter()
            .map(|m| {
                let m = m - &first;
                if !m.is_integer() {
                    return Err(Error::InvalidArgument(
                        "ruler marks must be integers".into(),
                    ));
                }
                Ok(m.to_integer().to_biguint().expect("nonnegative after shift"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shifted)
    }

    pub fn marks(&self) -> &[BigUint] {
        &self.marks
    }

    pub fn order(&self) -> usize {
        self.marks.len()
    }

    pub fn length(&self) -> &BigUint {
        self.marks.last().expect("nonempty")
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.marks
            .iter()
            .map(|m| Rational::from_integer(m.clone().into()))
            .collect()
    }

    /// The ruler `{ℓ − m}`.
    pub fn mirror(&self) -> Ruler {
        let len = self.length().clone();
        let mut marks: Vec<BigUint> = self.marks.iter().map(|m| &len - m).collect();
        marks.reverse();
        Ruler { marks }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RulerStats {
    pub order: usize,
    pub length: BigUint,
    pub perfect: bool,
}

/// A search result, reported once per mirror pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundRuler {
    pub ruler: Ruler,
    pub has_mirror: bool,
}

fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `|Δ marks| = 2·C(k,2) + 1`.
pub fn is_golomb(marks: &[Rational]) -> bool {
    let set = SpectrumSet::new(marks.to_vec());
    if set.len() != marks.len() || marks.is_empty() {
        return false;
    }
    let d = delta(&set).expect("nonempty");
    d.len() == 2 * pairs(marks.len()) + 1
}

pub fn ruler_stats(r: &Ruler) -> Result<RulerStats> {
    let marks = r.to_rationals();
    if !is_golomb(&marks) {
        return Err(Error::NotGolomb(format!("{:?}", r.marks)));
    }
    let d = delta(&SpectrumSet::new(marks))?;
    let k = contiguous_k(&d)?;
    Ok(RulerStats {
        order: r.order(),
        length: r.length().clone(),
        perfect: BigUint::from(k) == *r.length(),
    })
}

/// All shortest Golomb rulers of `order` with length at most `length_cap`.
///
/// Lengths are tried in increasing order; at each length every ruler is
/// found by depth-first mark placement, rejecting a mark as soon as it
/// repeats a difference. Mirror pairs collapse to their lexicographically
/// smaller member. Returns an empty list when no ruler fits under the cap.
pub fn search_optimal(order: usize, length_cap: u64) -> Result<Vec<FoundRuler>> {
    if order > MAX_SEARCH_ORDER {
        return Err(Error::DeskScaleLimit(format!(
            "Golomb search supports order <= {MAX_SEARCH_ORDER}, got {order}"
        )));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if order == 1 {
        return Ok(vec![FoundRuler {
            ruler: Ruler::from_u64(&[0])?,
            has_mirror: false,
        }]);
    }
    // Every one of the C(k,2) differences is a distinct positive integer.
    let lower = pairs(order) as u64;
    let start = lower.max(order as u64 - 1);
    for length in start..=length_cap {
        let found = rulers_of_length(order, length as usize);
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

fn rulers_of_length(order: usize, length: usize) -> Vec<FoundRuler> {
    let raw: Vec<Vec<usize>> = if order == 2 {
        vec![vec![0, length]]
    } else {
        let mut used = vec![false; length + 1];
        used[length] = true;
        // Branch on the second mark in parallel; the rest is sequential DFS.
        (1..length)
            .into_par_iter()
            .flat_map_iter(|second| {
                let mut out = Vec::new();
                let mut used = used.clone();
                let mut marks = vec![0, length];
                if try_place(&mut marks, &mut used, second).is_some() {
                    extend(order, &mut marks, &mut used, &mut out);
                }
                out.into_iter()
            })
            .collect()
    };
    let mut canon: Vec<(Vec<usize>, bool)> = raw
        .into_iter()
        .map(|mut m| {
            m.sort_unstable();
            let mirror: Vec<usize> = m.iter().rev().map(|x| length - x).collect();
            let has_mirror = mirror != m;
            (m.min(mirror), has_mirror)
        })
        .collect();
    canon.sort();
    canon.dedup();
    canon
        .into_iter()
        .map(|(m, has_mirror)| FoundRuler {
            ruler: Ruler::from_u64(&m.iter().map(|&x| x as u64).collect::<Vec<_>>())
                .expect("valid ruler"),
            has_mirror,
        })
        .collect()
}

/// Adds mark `p`, returning `None` (and leaving state unchanged) if it
/// repeats a difference.
fn try_place(marks: &mut Vec<usize>, used: &mut [bool], p: usize) -> Option<()> {
    let mut added = Vec::with_capacity(marks.len());
    for &m in marks.iter() {
        let d = m.abs_diff(p);
        if d == 0 || used[d] || added.contains(&d) {
            for &a in &added {
                used[a] = false;
            }
            return None;
        }
        used[d] = true;
        added.push(d);
    }
    marks.push(p);
    Some(())
}

fn remove_last(marks: &mut Vec<usize>, used: &mut [bool]) {
    let p = marks.pop().expect("mark to remove");
    for &m in marks.iter() {
        used[m.abs_diff(p)] = false;
    }
}

/// Interior marks are placed in increasing order after `marks[2]`.
fn extend(order: usize, marks: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if marks.len() == order {
        out.push(marks.clone());
        return;
    }
    let length = marks[1];
    let last = *marks.last().expect("nonempty");
    for p in last + 1..length {
        if try_place(marks, used, p).is_some() {
            extend(order, marks, used, out);
            remove_last(marks, used);
        }
    }
}

/// Integer marks as rationals; convenience for callers holding `u64`s.
pub fn marks_from_u64(marks: &[u64]) -> Vec<Rational> {
    marks.iter().map(|&m| int(m as i64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn golomb_checks() {
        assert!(is_golomb(&marks_from_u64(&[0, 1, 3])));
        assert!(!is_golomb(&marks_from_u64(&[0, 1, 2])));
        assert!(is_golomb(&marks_from_u64(&[0, 1, 4, 6])));
        assert!(is_golomb(&marks_from_u64(&[5])));
        assert!(!is_golomb(&[]));
        assert!(!is_golomb(&marks_from_u64(&[0, 0, 1])));
    }

    #[test]
    fn scaling_preserves_golomb() {
        let base = marks_from_u64(&[0, 1, 4, 9, 11]);
        for c in [ratio(1, 3), int(-2), int(7)] {
            let scaled: Vec<Rational> = base.iter().map(|m| m * &c).collect();
            assert!(is_golomb(&scaled));
        }
    }

    #[test]
    fn stats() {
        let s = ruler_stats(&Ruler::from_u64(&[0, 1, 3]).unwrap()).unwrap();
        assert_eq!((s.order, s.length.clone(), s.perfect), (3, BigUint::from(3u32), true));
        let s = ruler_stats(&Ruler::from_u64(&[0, 1, 4, 6]).unwrap()).unwrap();
        assert_eq!((s.order, s.length.clone(), s.perfect), (4, BigUint::from(6u32), true));
        let s = ruler_stats(&Ruler::from_u64(&[0, 1, 4, 9, 11]).unwrap()).unwrap();
        assert_eq!((s.order, s.length.clone(), s.perfect), (5, BigUint::from(11u32), false));
        assert!(matches!(
            ruler_stats(&Ruler::from_u64(&[0, 1, 2]).unwrap()),
            Err(Error::NotGolomb(_))
        ));
    }

    #[test]
    fn ruler_validation() {
        assert!(Ruler::from_u64(&[1, 2]).is_err());
        assert!(Ruler::from_u64(&[0, 2, 2]).is_err());
        assert!(Ruler::from_u64(&[]).is_err());
        let r = Ruler::canonical(&marks_from_u64(&[9, 3, 4])).unwrap();
        assert_eq!(r, Ruler::from_u64(&[0, 1, 6]).unwrap());
        assert_eq!(r.mirror(), Ruler::from_u64(&[0, 5, 6]).unwrap());
    }

    #[test]
    fn search_examples() {
        let found = search_optimal(4, 10).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].ruler, Ruler::from_u64(&[0, 1, 4, 6]).unwrap());
        assert!(found[0].has_mirror);

        let found = search_optimal(2, 1).unwrap();
        assert_eq!(found[0].ruler, Ruler::from_u64(&[0, 1]).unwrap());
        assert!(!found[0].has_mirror);

        assert!(search_optimal(5, 6).unwrap().is_empty());
        assert!(matches!(search_optimal(10, 100), Err(Error::DeskScaleLimit(_))));
    }

    #[test]
    fn search_order_one_and_three() {
        assert_eq!(search_optimal(1, 0).unwrap()[0].ruler.order(), 1);
        let found = search_optimal(3, 10).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].ruler, Ruler::from_u64(&[0, 1, 3]).unwrap());
    }
}
