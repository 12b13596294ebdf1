//! Signatures `(p, q)` and basis blades.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CliffordError;

/// Upper bound on `p + q`; keeps `2^(p+q)` at or below 4096 basis blades.
pub const MAX_GENERATORS: usize = 12;

/// A real quadratic signature: `p` generators square to `+1`, then `q` square to `-1`.
///
/// Generators are numbered `e1..e(p+q)`; the first `p` are the positive ones.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self, CliffordError> {
        if p + q > MAX_GENERATORS {
            return Err(CliffordError::DimensionCap { p, q, cap: MAX_GENERATORS });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn dimension(&self) -> usize {
        1 << self.n()
    }

    /// `(p - q) mod 8` in `0..8`.
    pub fn mod8(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }

    /// Bit mask of the generators squaring to `-1`.
    pub fn negative_mask(&self) -> u32 {
        (((1u64 << self.n()) - 1) as u32) & !(((1u64 << self.p) - 1) as u32)
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    /// Square of generator `i` (0-based).
    pub fn generator_square(&self, i: usize) -> i8 {
        if i < self.p {
            1
        } else {
            -1
        }
    }

    /// Every signature with `p + q <= max_n`, ordered by `(p + q, p)`.
    pub fn all_up_to(max_n: usize) -> Vec<Signature> {
        let mut out = Vec::new();
        for n in 0..=max_n.min(MAX_GENERATORS) {
            for p in 0..=n {
                out.push(Signature { p, q: n - p });
            }
        }
        out
    }
}

impl TryFrom<(usize, usize)> for Signature {
    type Error = CliffordError;
    fn try_from((p, q): (usize, usize)) -> Result<Self, Self::Error> {
        Signature::new(p, q)
    }
}

impl From<Signature> for (usize, usize) {
    fn from(s: Signature) -> Self {
        (s.p, s.q)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// A basis blade, stored as the bit set of its generators (bit `i` is `e(i+1)`).
///
/// The empty mask is the scalar unit.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade from 1-based generator indices; order does not matter.
    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0u32, |m, &i| m ^ (1 << (i - 1))))
    }

    pub fn generator(i: usize) -> Blade {
        Blade(1 << i)
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).map(|i| i + 1).collect()
    }
}

/// Parity of the number of transpositions needed to bring `e_a e_b` into ascending order.
pub(crate) fn reorder_is_odd(a: u32, b: u32) -> bool {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1 == 1
}

/// Product of two blades in a Clifford algebra with the given negative-generator mask.
/// Returns `(negated, result)`.
pub(crate) fn clifford_blade_product(a: u32, b: u32, negative_mask: u32) -> (bool, u32) {
    let neg = reorder_is_odd(a, b) ^ ((a & b & negative_mask).count_ones() & 1 == 1);
    (neg, a ^ b)
}

/// Display name for a blade within a space of `n` generators, e.g. `e12`, or `e1.10` when n >= 10.
pub(crate) fn blade_name(b: Blade, n: usize) -> String {
    if b.is_scalar() {
        return "1".to_string();
    }
    let idx = b.indices();
    let sep = if n >= 10 { "." } else { "" };
    format!("e{}", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(sep))
}
