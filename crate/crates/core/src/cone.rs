//! Representation labels `(l, l̇) = (k/2, r/2)`, their degrees and spin lines.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::CliffordError;
use crate::linalg::{SparseVector, SpanBasis};
use crate::scalar::Scalar;
use crate::states::{StateRingTag, StateVector, Statistics};

/// Largest `k + r` accepted by [`sym_dimension_oracle`].
pub const ORACLE_CAP: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReprLabel {
    pub k: u32,
    pub r: u32,
}

impl ReprLabel {
    pub fn new(k: u32, r: u32) -> Self {
        ReprLabel { k, r }
    }

    /// `(k+1)(r+1)`.
    pub fn degree(&self) -> usize {
        (self.k as usize + 1) * (self.r as usize + 1)
    }

    /// Spin line `|k - r| / 2`.
    pub fn spin(&self) -> BigRational {
        self.as_state().spin()
    }

    pub fn statistics(&self) -> Statistics {
        self.as_state().statistics()
    }

    pub fn mass(&self, m_e: &BigRational) -> BigRational {
        self.as_state().mass(m_e)
    }

    fn as_state(&self) -> StateVector {
        StateVector::new(StateRingTag::R, 0, 0, self.k, self.r)
    }
}

/// Dimension of the symmetric part of `(C^2)^{⊗k} ⊗ (C^2)^{⊗r}`, symmetric
/// separately in the first `k` and the last `r` slots.
///
/// Computed as `2^(k+r)` minus the rank of `{ e_I - e_{τ I} }` over all basis
/// tuples `I` and all transpositions `τ` of two slots in the same block; the
/// symmetric tensors are exactly the common fixed vectors of these swaps.
pub fn sym_dimension_oracle(k: usize, r: usize) -> Result<usize, CliffordError> {
    if k + r > ORACLE_CAP {
        return Err(CliffordError::OracleCap { k, r, cap: ORACLE_CAP });
    }
    let slots = k + r;
    let mut swaps = Vec::new();
    for (lo, hi) in [(0, k), (k, slots)] {
        for a in lo..hi {
            for b in a + 1..hi {
                swaps.push((a, b));
            }
        }
    }
    let mut span: SpanBasis<usize> = SpanBasis::new();
    for idx in 0..(1usize << slots) {
        for &(a, b) in &swaps {
            let (ba, bb) = ((idx >> a) & 1, (idx >> b) & 1);
            if ba == bb {
                continue;
            }
            let swapped = idx ^ (1 << a) ^ (1 << b);
            let v: SparseVector<usize> = [(idx, Scalar::one()), (swapped, -Scalar::one())].into_iter().collect();
            span.insert(v);
        }
    }
    Ok((1usize << slots) - span.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeEntry {
    pub label: ReprLabel,
    pub degree: usize,
    pub spin: BigRational,
    pub statistics: Statistics,
    pub mass: BigRational,
}

/// All labels with `k + r <= max_m`, ordered by `m` and then by decreasing `k`.
pub fn enumerate_cone(max_m: u32, m_e: &BigRational) -> Vec<ConeEntry> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for k in (0..=m).rev() {
            let label = ReprLabel::new(k, m - k);
            out.push(ConeEntry {
                label,
                degree: label.degree(),
                spin: label.spin(),
                statistics: label.statistics(),
                mass: label.mass(m_e),
            });
        }
    }
    out
}

/// Entries grouped by spin line, lines in increasing spin.
pub fn spin_lines(entries: &[ConeEntry]) -> Vec<(BigRational, Vec<ConeEntry>)> {
    let mut lines: Vec<(BigRational, Vec<ConeEntry>)> = Vec::new();
    for e in entries {
        match lines.iter_mut().find(|(s, _)| *s == e.spin) {
            Some((_, v)) => v.push(e.clone()),
            None => lines.push((e.spin.clone(), vec![e.clone()])),
        }
    }
    lines.sort_by(|a, b| a.0.cmp(&b.0));
    for (_, v) in lines.iter_mut() {
        v.sort_by_key(|e| (e.label.k.min(e.label.r), e.label.k));
    }
    lines
}

pub fn half_integer(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn degrees() {
        assert_eq!(ReprLabel::new(1, 0).degree(), 2);
        assert_eq!(ReprLabel::new(2, 2).degree(), 9);
        assert_eq!(ReprLabel::new(0, 0).degree(), 1);
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(sym_dimension_oracle(1, 1).unwrap(), 4);
        assert_eq!(sym_dimension_oracle(3, 0).unwrap(), 4);
        assert_eq!(sym_dimension_oracle(2, 2).unwrap(), 9);
        assert!(sym_dimension_oracle(5, 4).is_err());
    }

    #[test]
    fn cone_base() {
        let one = BigRational::one();
        let labels: Vec<_> = enumerate_cone(1, &one).iter().map(|e| (e.label.k, e.label.r)).collect();
        assert_eq!(labels, vec![(0, 0), (1, 0), (0, 1)]);
        let two = enumerate_cone(2, &one);
        assert_eq!(two.len(), 6);
        let lines = spin_lines(&two);
        assert_eq!(lines[0].0, half_integer(0));
        assert!(lines[0].1.iter().any(|e| e.label == ReprLabel::new(1, 1)));
    }

    #[test]
    fn cone_symmetry_and_fermions() {
        let cone = enumerate_cone(6, &BigRational::one());
        for e in &cone {
            let mirror = cone.iter().find(|x| x.label == ReprLabel::new(e.label.r, e.label.k)).unwrap();
            assert_eq!(mirror.degree, e.degree);
            let odd = (e.label.k + e.label.r) % 2 == 1;
            assert_eq!(e.statistics == Statistics::Fermion, odd);
        }
    }

    #[test]
    fn mass_increases_along_spin_lines() {
        let cone = enumerate_cone(8, &BigRational::one());
        for (_, line) in spin_lines(&cone) {
            for w in line.windows(2) {
                if w[0].label.k.min(w[0].label.r) < w[1].label.k.min(w[1].label.r) {
                    assert!(w[0].mass < w[1].mass);
                }
            }
        }
    }
}
