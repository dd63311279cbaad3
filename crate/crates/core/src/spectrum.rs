//! Admissible spectra of rank-2 semistable sheaves with `c1 = 0`, used to
//! force `h^0(E(t)) > 0` through the vanishing of `h^2(E(t))`.

use alloc::vec::Vec;

use crate::cohom::{h, StdSheaf};
use crate::error::{Error, Result};
use crate::numclass::{chern_from_ch, NumClass};
use crate::ratpoly::to_i64;

/// A nondecreasing sequence `ks` together with `s = h^0(Ext^2(E, O))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumCandidate {
    pub ks: Vec<i64>,
    pub s: i64,
}

pub fn s_max(c2: i64) -> i64 {
    (c2 * c2 + c2) / 2
}

/// Every spectrum of length `c2` with `c3 = -2*sum(ks) - 2s`,
/// `0 <= s <= (c2^2+c2)/2`, and the connectivity property: a value
/// `k <= -2` forces `k..=-1` into the spectrum, a value `k >= 1` forces `1..=k`.
/// Sorted lexicographically.
pub fn enumerate_spectra(c2: i64, c3: i64) -> Vec<SpectrumCandidate> {
    if c2 < 1 || c3 % 2 != 0 {
        return Vec::new();
    }
    let smax = s_max(c2);
    // sum(ks) = -c3/2 - s
    let max_sum = -c3 / 2;
    let min_sum = max_sum - smax;
    let lo = -(c2 + smax + 2);
    let hi = c2 + 2;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(c2 as usize);
    search(c2, lo, hi, min_sum, max_sum, 0, &mut current, &mut out);
    out.retain(|c| connected(&c.ks));
    for c in &mut out {
        c.s = max_sum - c.ks.iter().sum::<i64>();
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: i64,
    lo: i64,
    hi: i64,
    min_sum: i64,
    max_sum: i64,
    partial: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<SpectrumCandidate>,
) {
    let remaining = m - current.len() as i64;
    if remaining == 0 {
        if (min_sum..=max_sum).contains(&partial) {
            out.push(SpectrumCandidate {
                ks: current.clone(),
                s: 0,
            });
        }
        return;
    }
    let start = current.last().copied().unwrap_or(lo);
    for k in start..=hi {
        // the remaining entries are all >= k
        if partial + remaining * k > max_sum {
            break;
        }
        if partial + k + (remaining - 1) * hi < min_sum {
            continue;
        }
        current.push(k);
        search(m, lo, hi, min_sum, max_sum, partial + k, current, out);
        current.pop();
    }
}

fn connected(ks: &[i64]) -> bool {
    ks.iter().all(|&k| {
        if k <= -2 {
            (k..=-1).all(|j| ks.contains(&j))
        } else if k >= 1 {
            (1..=k).all(|j| ks.contains(&j))
        } else {
            true
        }
    })
}

/// `h^2(E(t)) = sum_i h^1(O_{P^1}(k_i + t + 1))`.
pub fn h2_twist(spec: &SpectrumCandidate, t: i64) -> i64 {
    spec.ks
        .iter()
        .map(|&k| h(&StdSheaf::Line(k + t + 1)).map_or(0, |v| v[1]))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Bound {
    /// `chi(E(t))`, set only when every admissible spectrum kills `h^2(E(t))`.
    pub bound: Option<i64>,
    pub proven_positive: bool,
    pub spectra: Vec<SpectrumCandidate>,
}

pub fn h0_lower_bound(v: &NumClass, t: i64) -> Result<H0Bound> {
    if v.rank() != 2 {
        return Err(Error::UnsupportedRank(v.rank()));
    }
    let c = chern_from_ch(v)?;
    if c.c1 != 0 {
        return Err(Error::C1Nonzero);
    }
    let c2 = to_i64(&c.c2).ok_or(Error::NotInLattice)?;
    let c3 = to_i64(&c.c3).ok_or(Error::NotInLattice)?;
    let spectra = enumerate_spectra(c2, c3);
    let vanishing = spectra.iter().all(|sp| h2_twist(sp, t) == 0);
    let bound = if vanishing { to_i64(&v.euler(t)) } else { None };
    Ok(H0Bound {
        proven_positive: bound.is_some_and(|b| b >= 1),
        bound,
        spectra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;

    fn ks(spectra: &[SpectrumCandidate]) -> Vec<Vec<i64>> {
        spectra.iter().map(|c| c.ks.clone()).collect()
    }

    #[test]
    fn c2_two_c3_two() {
        assert_eq!(ks(&enumerate_spectra(2, 2)), [vec![-2, -1], vec![-1, -1], vec![-1, 0]]);
    }

    #[test]
    fn infeasible() {
        assert!(enumerate_spectra(1, 100).is_empty());
        assert!(enumerate_spectra(1, -100).is_empty());
    }

    #[test]
    fn h2_examples() {
        let sp = |ks: &[i64]| SpectrumCandidate { ks: ks.to_vec(), s: 0 };
        assert_eq!(h2_twist(&sp(&[-2, -1]), 1), 0);
        assert_eq!(h2_twist(&sp(&[-1, 1]), 1), 0);
        assert_eq!(h2_twist(&sp(&[-3, -1]), 1), 0);
        assert_eq!(h2_twist(&sp(&[-4, -1]), 1), 1);
    }

    #[test]
    fn h0_examples() {
        let v = NumClass::new(2, 0, int(-2), int(0)).unwrap();
        let b = h0_lower_bound(&v, 1).unwrap();
        assert_eq!((b.bound, b.proven_positive), (Some(2), true));
        let v = NumClass::new(2, 0, int(-2), int(1)).unwrap();
        let b = h0_lower_bound(&v, 1).unwrap();
        assert_eq!((b.bound, b.proven_positive), (Some(3), true));
        let v = NumClass::new(2, 0, int(-1), int(0)).unwrap();
        let b = h0_lower_bound(&v, 0).unwrap();
        assert_eq!((b.bound, b.proven_positive), (Some(0), false));
        let v = NumClass::new(2, -1, crate::ratpoly::rat(-1, 2), crate::ratpoly::rat(5, 6)).unwrap();
        assert_eq!(h0_lower_bound(&v, 1), Err(Error::C1Nonzero));
    }
}
