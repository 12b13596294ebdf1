//! Primitive idempotents, minimal left ideals and the Radon–Hurwitz count.
//!
//! A primitive idempotent of `Cl(p,q)` can always be written as
//! `f = prod_i 1/2 (1 + T_i)` for `k = q - r_{q-p}` pairwise commuting blades
//! `T_i` squaring to `+1` whose masks are XOR-independent. The search below
//! finds such blades directly on bit masks and only then builds `f`.

use std::fmt;

use crate::algebra::{BasisAlgebra, Complexified};
use crate::error::CliffordError;
use crate::linalg::{span_basis, span_rank, SpanField};
use crate::multivector::{center_basis, volume_element, Multivector};
use crate::scalar::Scalar;
use crate::signature::{Blade, Signature};

/// Radon–Hurwitz numbers `r_0 .. r_7`.
///
/// Obtained by exhaustive search for the largest family of commuting,
/// independent, `+1`-square blades over every signature with `p + q <= 8`;
/// the ideals test suite recomputes them from scratch.
pub const RADON_HURWITZ_BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];

/// `r_i` for any integer `i`, extended by `r_{i+8} = r_i + 4`.
pub fn radon_hurwitz(i: i64) -> i64 {
    RADON_HURWITZ_BASE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// `k = q - r_{q-p}`: number of commuting blade factors in a primitive idempotent.
pub fn primitive_factor_count(sig: Signature) -> usize {
    let k = sig.q() as i64 - radon_hurwitz(sig.q() as i64 - sig.p() as i64);
    debug_assert!(k >= 0);
    k as usize
}

/// A blade, possibly multiplied by `i`, used as an idempotent factor.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitBlade {
    pub blade: Blade,
    pub imaginary: bool,
}

impl UnitBlade {
    pub fn to_multivector<A: BasisAlgebra>(&self, algebra: &A) -> Multivector<A> {
        let c = if self.imaginary { Scalar::i() } else { Scalar::one() };
        Multivector::from_terms_unchecked(algebra, [(self.blade, c)])
    }
}

/// Candidate factor for blade `b`: the blade itself when it squares to `+1`,
/// `i b` when it squares to `-1` in a complexified algebra.
fn unit_candidate<A: BasisAlgebra>(algebra: &A, b: Blade) -> Option<UnitBlade> {
    if b.is_scalar() {
        return None;
    }
    match (algebra.square_is_negative(b), algebra.is_complex()) {
        (false, _) => Some(UnitBlade { blade: b, imaginary: false }),
        (true, true) => Some(UnitBlade { blade: b, imaginary: true }),
        (true, false) => None,
    }
}

/// Search order: even grades first, then by grade, then by mask.
fn candidate_order<A: BasisAlgebra>(algebra: &A) -> Vec<UnitBlade> {
    let mut blades: Vec<Blade> = (1..algebra.dimension() as u32).map(Blade).collect();
    blades.sort_by_key(|b| {
        let g = algebra.blade_grade(*b);
        (g % 2, g, b.0)
    });
    blades.into_iter().filter_map(|b| unit_candidate(algebra, b)).collect()
}

/// XOR closure of a set of masks.
fn extend_span(span: &[u32], m: u32) -> Vec<u32> {
    let mut out = span.to_vec();
    out.extend(span.iter().map(|s| s ^ m));
    out
}

struct Search<'a, A: BasisAlgebra> {
    algebra: &'a A,
    candidates: Vec<UnitBlade>,
}

impl<'a, A: BasisAlgebra> Search<'a, A> {
    fn new(algebra: &'a A, seeds: &[UnitBlade]) -> Self {
        let candidates = candidate_order(algebra)
            .into_iter()
            .filter(|c| seeds.iter().all(|s| algebra.blades_commute(s.blade, c.blade)))
            .collect();
        Search { algebra, candidates }
    }

    /// First (in candidate order) extension of `chosen` to `target` factors.
    fn extend(&self, chosen: &mut Vec<UnitBlade>, span: &[u32], start: usize, target: usize) -> bool {
        if chosen.len() == target {
            return true;
        }
        let needed = target - chosen.len();
        for idx in start..self.candidates.len() {
            if self.candidates.len() - idx < needed {
                break;
            }
            let c = self.candidates[idx];
            if span.contains(&c.blade.0) {
                continue;
            }
            if !chosen.iter().all(|t| self.algebra.blades_commute(t.blade, c.blade)) {
                continue;
            }
            chosen.push(c);
            let next_span = extend_span(span, c.blade.0);
            if self.extend(chosen, &next_span, idx + 1, target) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Central unit blades usable as factors, chosen greedily to be independent.
/// These realize the split by the central idempotents `(1 +- w)/2`.
pub fn central_seeds<A: BasisAlgebra>(algebra: &A) -> Vec<UnitBlade> {
    let mut seeds = Vec::new();
    let mut span = vec![0u32];
    for z in center_basis(algebra) {
        let (b, _) = z.as_monomial().expect("center basis is monomial");
        if let Some(u) = unit_candidate(algebra, b) {
            if !span.contains(&b.0) {
                span = extend_span(&span, b.0);
                seeds.push(u);
            }
        }
    }
    seeds
}

/// Lexicographically first set of `k` factors extending `seeds`, if any.
pub fn find_commuting_factors<A: BasisAlgebra>(algebra: &A, seeds: &[UnitBlade], k: usize) -> Option<Vec<UnitBlade>> {
    if seeds.len() > k {
        return None;
    }
    let search = Search::new(algebra, seeds);
    let mut chosen = seeds.to_vec();
    let span = seeds.iter().fold(vec![0u32], |s, u| extend_span(&s, u.blade.0));
    if search.extend(&mut chosen, &span, 0, k) {
        Some(chosen)
    } else {
        None
    }
}

/// Largest set of commuting factors extending `seeds`.
pub fn max_commuting_factors<A: BasisAlgebra>(algebra: &A, seeds: &[UnitBlade]) -> Vec<UnitBlade> {
    let mut best = seeds.to_vec();
    let mut k = seeds.len() + 1;
    while let Some(found) = find_commuting_factors(algebra, seeds, k) {
        best = found;
        k += 1;
    }
    best
}

/// An idempotent `f = prod 1/2 (1 + T_i)` together with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent<A: BasisAlgebra = Signature> {
    element: Multivector<A>,
    factors: Vec<Multivector<A>>,
}

impl<A: BasisAlgebra> Idempotent<A> {
    /// Validate the factors (each squares to `1`, pairwise commuting) and
    /// build their product, which must be a nonzero idempotent.
    pub fn from_factors(algebra: &A, factors: Vec<Multivector<A>>) -> Result<Self, CliffordError> {
        let one = Multivector::one(algebra);
        for (i, t) in factors.iter().enumerate() {
            if t.algebra() != algebra {
                return Err(CliffordError::AlgebraMismatch);
            }
            if (t * t) != one {
                return Err(CliffordError::InvalidFactors(format!("factor {} does not square to 1", i + 1)));
            }
            for (j, u) in factors.iter().enumerate().skip(i + 1) {
                if !t.commutes_with(u) {
                    return Err(CliffordError::InvalidFactors(format!("factors {} and {} do not commute", i + 1, j + 1)));
                }
            }
        }
        let half = Scalar::from_ratio(1, 2);
        let element = factors.iter().fold(one.clone(), |acc, t| &acc * &(&one + t).scale(&half));
        if element.is_zero() {
            return Err(CliffordError::InvalidFactors("product of factors vanishes".into()));
        }
        if &element * &element != element {
            return Err(CliffordError::NotIdempotent);
        }
        Ok(Idempotent { element, factors })
    }

    pub fn from_units(algebra: &A, units: &[UnitBlade]) -> Result<Self, CliffordError> {
        Self::from_factors(algebra, units.iter().map(|u| u.to_multivector(algebra)).collect())
    }

    pub fn element(&self) -> &Multivector<A> {
        &self.element
    }

    pub fn factors(&self) -> &[Multivector<A>] {
        &self.factors
    }

    pub fn algebra(&self) -> &A {
        self.element.algebra()
    }

    /// Number of factors.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// Factored form such as `½(1+e15)½(1+e26)`.
    pub fn factored(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors.iter().map(|t| format!("½(1+{})", t)).collect::<Vec<_>>().join("")
    }

    /// `f A f`, spanned by `f e_B f` over all blades.
    pub fn ring_basis(&self) -> Vec<Multivector<A>> {
        let alg = self.algebra();
        let sandwiches: Vec<Multivector<A>> = (0..alg.dimension() as u32)
            .map(|b| &(&self.element * &Multivector::blade(alg, Blade(b))) * &self.element)
            .filter(|x| !x.is_zero())
            .collect();
        span_basis(alg, sandwiches.iter())
    }
}

impl<A: BasisAlgebra> fmt::Display for Idempotent<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored())
    }
}

/// Deterministic primitive idempotent of any monomial algebra.
///
/// Non-scalar central units (the volume element when `w^2 = +1` in odd
/// dimension) are placed first, which realizes the split by `(1 +- w)/2`;
/// the search then fills up to the closed-form factor count when the algebra
/// provides one, otherwise to the largest commuting family.
pub fn primitive_idempotent<A: BasisAlgebra>(algebra: &A) -> Result<Idempotent<A>, CliffordError> {
    let seeds = central_seeds(algebra);
    let units = match algebra.primitive_factor_count() {
        Some(k) => find_commuting_factors(algebra, &seeds, k)
            .ok_or_else(|| CliffordError::IdempotentSearch { algebra: algebra.name(), k })?,
        None => max_commuting_factors(algebra, &seeds),
    };
    Idempotent::from_units(algebra, &units)
}

/// Basis of the left ideal `A f`.
#[derive(Clone, Debug)]
pub struct LeftIdealBasis<A: BasisAlgebra = Signature> {
    pub idempotent: Idempotent<A>,
    pub basis: Vec<Multivector<A>>,
}

impl<A: BasisAlgebra> LeftIdealBasis<A> {
    /// Dimension over the coefficient field (complex dimension for complexified algebras).
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn real_dimension(&self) -> usize {
        span_rank(self.basis.iter(), SpanField::Real)
    }
}

/// Row-reduce `{ e_B f }` over all blades.
pub fn left_ideal_basis<A: BasisAlgebra>(f: &Idempotent<A>) -> LeftIdealBasis<A> {
    let alg = f.algebra();
    let products: Vec<Multivector<A>> =
        (0..alg.dimension() as u32).map(|b| &Multivector::blade(alg, Blade(b)) * f.element()).collect();
    LeftIdealBasis { idempotent: f.clone(), basis: span_basis(alg, products.iter()) }
}

/// Minimality certificate.
///
/// With a closed-form factor count `k`, `f` is primitive when `dim(A f) =
/// 2^(n-k)` and `f A f` has the dimension of a division ring over the
/// coefficient field. Without one, `f A f` must be structurally a division
/// ring (see [`crate::classification::identify_division_ring`]).
pub fn is_primitive<A: BasisAlgebra>(f: &Idempotent<A>) -> bool {
    let alg = f.algebra();
    let ring_dim = f.ring_basis().len();
    match alg.primitive_factor_count() {
        Some(k) => {
            let ideal_ok = left_ideal_basis(f).dimension() == 1usize << (alg.generator_count() - k);
            let ring_ok = if alg.is_complex() { ring_dim == 1 } else { matches!(ring_dim, 1 | 2 | 4) };
            ideal_ok && ring_ok
        }
        None => crate::classification::identify_division_ring(f).is_ok(),
    }
}

/// The central idempotents `(1 +- w)/2`, or `(1 +- i w)/2` in a complexified
/// algebra whose volume element squares to `-1`. `None` when `w` is not central
/// or no such square root of unity exists.
pub fn central_idempotents<A: BasisAlgebra>(algebra: &A) -> Option<(Multivector<A>, Multivector<A>)> {
    let w = volume_element(algebra);
    let n = algebra.generator_count();
    if n == 0 || !(0..n).all(|i| w.commutes_with(&Multivector::generator(algebra, i))) {
        return None;
    }
    let u = UnitBlade { blade: algebra.top_blade(), imaginary: algebra.square_is_negative(algebra.top_blade()) };
    if u.imaginary && !algebra.is_complex() {
        return None;
    }
    let one = Multivector::one(algebra);
    let t = u.to_multivector(algebra);
    let half = Scalar::from_ratio(1, 2);
    Some(((&one + &t).scale(&half), (&one - &t).scale(&half)))
}

/// Idempotents printed in the literature, under 1-based generator labels.
///
/// `Cl(4,1)` uses the real reading of `1/2(1+e0) 1/2(1+i e12)`: generators are
/// shifted by one (`e0 -> e1`) and `i` is the central volume element.
pub fn reference_idempotent(sig: Signature) -> Option<Idempotent> {
    let blade = |idx: &[usize]| Multivector::blade(&sig, Blade::from_indices(idx));
    let factors = match (sig.p(), sig.q()) {
        (2, 0) => vec![blade(&[1])],
        (1, 1) => vec![blade(&[1, 2])],
        (0, 2) => vec![],
        (2, 4) => vec![blade(&[1, 5]), blade(&[2, 6])],
        (4, 1) => vec![blade(&[1]), &volume_element(&sig) * &blade(&[2, 3])],
        _ => return None,
    };
    Idempotent::from_factors(&sig, factors).ok()
}

/// `1/2(1+e1) 1/2(1+i e23)` in the complexification of `Cl(4,1)`.
pub fn reference_idempotent_complexified_41() -> Idempotent<Complexified<Signature>> {
    let alg = Complexified(Signature::new(4, 1).expect("valid"));
    let factors = vec![
        Multivector::blade(&alg, Blade::from_indices(&[1])),
        Multivector::from_terms_unchecked(&alg, [(Blade::from_indices(&[2, 3]), Scalar::i())]),
    ];
    Idempotent::from_factors(&alg, factors).expect("commuting +1-square factors")
}
