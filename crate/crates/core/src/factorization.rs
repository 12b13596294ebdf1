//! Tensor factorizations and isomorphisms, each certified by explicit
//! generator images.
//!
//! A witness for `Cl(p,q) ≅ B` is a list of `p+q` elements of `B` that square
//! to the right signs, pairwise anticommute, and whose `2^(p+q)` ordered
//! products span `B`. Any such list extends to an algebra isomorphism, so
//! checking it exactly is a complete proof.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::{BasisAlgebra, Complexified, TensorSignature};
use crate::classification::{classify, division_ring_report, DivisionRing, RingTag};
use crate::error::{CliffordError, IsoFailure};
use crate::linalg::{span_rank, SpanField};
use crate::multivector::{volume_element, Multivector};
use crate::scalar::Scalar;
use crate::signature::{Blade, Signature};

/// Check that `images` realize the relations of `target` with identity
/// `unit`, and that their products span `expected` dimensions over `field`.
pub fn check_generator_images<A: BasisAlgebra>(
    target: Signature,
    images: &[Multivector<A>],
    unit: &Multivector<A>,
    expected: usize,
    field: SpanField,
) -> Result<(), IsoFailure> {
    if images.len() != target.n() {
        return Err(IsoFailure::DimensionMismatch { target: target.dimension(), candidate: 1 << images.len() });
    }
    for (i, x) in images.iter().enumerate() {
        let sq = x * x;
        let expected_sq = target.generator_square(i);
        let want = if expected_sq > 0 { unit.clone() } else { -unit };
        if sq != want {
            return Err(IsoFailure::WrongSquare { generator: i + 1, expected: expected_sq, found: sq.to_string() });
        }
    }
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if !images[i].anticommutes_with(&images[j]) {
                return Err(IsoFailure::NotAnticommuting { i: i + 1, j: j + 1 });
            }
        }
    }
    let products = subset_products(images, unit);
    let rank = span_rank(products.iter(), field);
    if rank != expected {
        return Err(IsoFailure::SpanDeficient { rank, expected });
    }
    Ok(())
}

/// All ordered products `x_{i1} x_{i2} ...` indexed by subsets, starting from `unit`.
fn subset_products<A: BasisAlgebra>(images: &[Multivector<A>], unit: &Multivector<A>) -> Vec<Multivector<A>> {
    let mut out: Vec<Multivector<A>> = vec![unit.clone()];
    for (i, x) in images.iter().enumerate() {
        for s in 0..(1usize << i) {
            let next = &out[s] * x;
            out.push(next);
        }
    }
    out
}

fn square_is_one<A: BasisAlgebra>(x: &Multivector<A>) -> bool {
    (x * x).is_scalar_value(&Scalar::one())
}

/// Signature-changing substitutions on anticommuting generator lists.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorMove {
    /// `x, y_j -> x, x y_j` with `x^2 = 1`: `(P,Q) -> (Q+1, P-1)`.
    Flip,
    /// `x_i -> x_i w`, `w` the product of four `+1` generators: `(P,Q) -> (P-4, Q+4)`.
    PositiveToNegative,
    /// Same with four `-1` generators: `(P,Q) -> (P+4, Q-4)`.
    NegativeToPositive,
}

impl GeneratorMove {
    fn target(self, p: usize, n: usize) -> Option<usize> {
        match self {
            GeneratorMove::Flip if p >= 1 => Some(n - p + 1),
            GeneratorMove::PositiveToNegative if p >= 4 => Some(p - 4),
            GeneratorMove::NegativeToPositive if n - p >= 4 => Some(p + 4),
            _ => None,
        }
    }

    fn apply<A: BasisAlgebra>(self, images: &[Multivector<A>]) -> Vec<Multivector<A>> {
        let positive: Vec<usize> = (0..images.len()).filter(|&i| square_is_one(&images[i])).collect();
        let negative: Vec<usize> = (0..images.len()).filter(|i| !positive.contains(i)).collect();
        match self {
            GeneratorMove::Flip => {
                let x = &images[positive[0]];
                let mut out = vec![x.clone()];
                out.extend(images.iter().enumerate().filter(|(i, _)| *i != positive[0]).map(|(_, y)| x * y));
                out
            }
            GeneratorMove::PositiveToNegative | GeneratorMove::NegativeToPositive => {
                let pick: Vec<usize> =
                    if self == GeneratorMove::PositiveToNegative { positive[..4].to_vec() } else { negative[..4].to_vec() };
                let w = pick.iter().fold(Multivector::one(images[0].algebra()), |acc, &i| &acc * &images[i]);
                images
                    .iter()
                    .enumerate()
                    .map(|(i, x)| if pick.contains(&i) { x * &w } else { x.clone() })
                    .collect()
            }
        }
    }
}

/// Shortest sequence of moves taking `p_from` positive generators to `p_to`.
fn move_path(p_from: usize, p_to: usize, n: usize) -> Option<Vec<GeneratorMove>> {
    let moves = [GeneratorMove::Flip, GeneratorMove::PositiveToNegative, GeneratorMove::NegativeToPositive];
    let mut prev: HashMap<usize, (usize, GeneratorMove)> = HashMap::new();
    let mut queue = VecDeque::from([p_from]);
    let mut seen = vec![false; n + 1];
    seen[p_from] = true;
    while let Some(p) = queue.pop_front() {
        if p == p_to {
            let mut path = Vec::new();
            let mut cur = p;
            while cur != p_from {
                let (from, mv) = prev[&cur];
                path.push(mv);
                cur = from;
            }
            path.reverse();
            return Some(path);
        }
        for mv in moves {
            if let Some(next) = mv.target(p, n) {
                if !seen[next] {
                    seen[next] = true;
                    prev.insert(next, (p, mv));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// Positive-square images first, each group in order.
fn sort_by_square<A: BasisAlgebra>(images: Vec<Multivector<A>>) -> Vec<Multivector<A>> {
    let (pos, neg): (Vec<_>, Vec<_>) = images.into_iter().partition(square_is_one);
    pos.into_iter().chain(neg).collect()
}

/// Generator images in `T = F_1 (x) ... (x) F_m`: generators of each factor
/// twisted by the volume elements of the factors processed before it.
///
/// Even factors are processed first in the given order; at most one odd
/// factor is allowed and it goes last.
pub fn karoubi_images(algebra: &TensorSignature) -> Result<Vec<Multivector<TensorSignature>>, IsoFailure> {
    let factors = algebra.factors();
    let (even, odd): (Vec<usize>, Vec<usize>) = (0..factors.len()).partition(|&i| factors[i].n() % 2 == 0);
    if odd.len() > 1 {
        let names = factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" (x) ");
        return Err(IsoFailure::NoConstruction(format!("{names} has more than one odd-dimensional factor")));
    }
    let mut twist = Blade::SCALAR;
    let mut images = Vec::new();
    for i in even.into_iter().chain(odd) {
        let f = factors[i];
        for g in 0..f.n() {
            let own = algebra.embed(i, Blade::generator(g));
            images.push(Multivector::blade(algebra, Blade(twist.0 | own.0)));
        }
        twist = Blade(twist.0 | algebra.embed(i, f.top_blade()).0);
    }
    Ok(images)
}

/// A verified isomorphism `Cl(target) ≅ F_1 (x) ... (x) F_m`.
#[derive(Clone, Debug)]
pub struct TensorWitness {
    pub target: Signature,
    pub algebra: TensorSignature,
    pub moves: Vec<GeneratorMove>,
    /// Image of each target generator `e_1 .. e_n`.
    pub images: Vec<Multivector<TensorSignature>>,
}

/// Construct and check generator images for `Cl(target) ≅ (x) factors`.
///
/// Starts from the twisted Karoubi images, whose signature is fixed by the
/// factor list, and applies [`GeneratorMove`]s when the target signature is a
/// different presentation of the same algebra.
pub fn verify_tensor_iso(target: Signature, factors: &[Signature]) -> Result<TensorWitness, IsoFailure> {
    let candidate: usize = factors.iter().map(Signature::dimension).product();
    if candidate != target.dimension() {
        return Err(IsoFailure::DimensionMismatch { target: target.dimension(), candidate });
    }
    let algebra = TensorSignature::new(factors.to_vec())
        .map_err(|e| IsoFailure::NoConstruction(e.to_string()))?;
    let natural = sort_by_square(karoubi_images(&algebra)?);
    let p_natural = natural.iter().filter(|x| square_is_one(*x)).count();
    let n = target.n();
    let moves = match move_path(p_natural, target.p(), n) {
        Some(m) => m,
        None => {
            // report the first generator the natural images get wrong
            check_generator_images(target, &natural, &Multivector::one(&algebra), target.dimension(), SpanField::Native)?;
            unreachable!("signature counts differ, so some square must mismatch");
        }
    };
    let mut images = natural;
    for mv in &moves {
        images = mv.apply(&images);
    }
    let images = sort_by_square(images);
    check_generator_images(target, &images, &Multivector::one(&algebra), target.dimension(), SpanField::Native)?;
    Ok(TensorWitness { target, algebra, moves, images })
}

/// Ring labels used in the `K (x) K` transition table, including conjugates.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TransitionRing {
    R,
    C,
    #[serde(rename = "C~")]
    CBar,
    H,
    #[serde(rename = "H~")]
    HBar,
}

impl TransitionRing {
    pub const ALL: [TransitionRing; 5] =
        [TransitionRing::R, TransitionRing::C, TransitionRing::CBar, TransitionRing::H, TransitionRing::HBar];

    pub fn conjugate(self) -> Self {
        match self {
            TransitionRing::C => TransitionRing::CBar,
            TransitionRing::CBar => TransitionRing::C,
            TransitionRing::H => TransitionRing::HBar,
            TransitionRing::HBar => TransitionRing::H,
            TransitionRing::R => TransitionRing::R,
        }
    }

    pub fn base(self) -> DivisionRing {
        match self {
            TransitionRing::R => DivisionRing::Real,
            TransitionRing::C | TransitionRing::CBar => DivisionRing::Complex,
            TransitionRing::H | TransitionRing::HBar => DivisionRing::Quaternion,
        }
    }

    pub fn is_conjugated(self) -> bool {
        matches!(self, TransitionRing::CBar | TransitionRing::HBar)
    }

    pub fn from_base(base: DivisionRing, conjugated: bool) -> Self {
        let t = match base {
            DivisionRing::Real => TransitionRing::R,
            DivisionRing::Complex => TransitionRing::C,
            DivisionRing::Quaternion => TransitionRing::H,
        };
        if conjugated {
            t.conjugate()
        } else {
            t
        }
    }

    /// ASCII spelling: `R`, `C`, `C~`, `H`, `H~`.
    pub fn symbol(self) -> &'static str {
        match self {
            TransitionRing::R => "R",
            TransitionRing::C => "C",
            TransitionRing::CBar => "C~",
            TransitionRing::H => "H",
            TransitionRing::HBar => "H~",
        }
    }
}

impl fmt::Display for TransitionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionRing::CBar => f.write_str("C̄"),
            TransitionRing::HBar => f.write_str("H̄"),
            other => f.write_str(other.symbol()),
        }
    }
}

/// The eleven listed transitions.
pub const PRINTED_TRANSITIONS: [(TransitionRing, TransitionRing, TransitionRing); 11] = {
    use TransitionRing::*;
    [
        (R, R, R),
        (R, H, H),
        (H, R, H),
        (H, H, R),
        (C, R, C),
        (R, C, C),
        (C, H, C),
        (H, C, C),
        (C, C, C),
        (C, CBar, R),
        (H, HBar, R),
    ]
};

/// `K1 (x) K2`.
///
/// Listed rows are used as is. Other pairs follow by conjugating both sides of
/// a listed row; the four pairs of a `C`-type label with an `H`-type label of
/// the other orientation read `H~` as `H`, which it is as a real algebra.
pub fn ring_transition(a: TransitionRing, b: TransitionRing) -> TransitionRing {
    let lookup = |x: TransitionRing, y: TransitionRing| {
        PRINTED_TRANSITIONS.iter().find(|(p, q, _)| *p == x && *q == y).map(|(_, _, r)| *r)
    };
    let real_h = |x: TransitionRing| if x == TransitionRing::HBar { TransitionRing::H } else { x };
    lookup(a, b)
        .or_else(|| lookup(a.conjugate(), b.conjugate()).map(TransitionRing::conjugate))
        .or_else(|| lookup(real_h(a), real_h(b)))
        .or_else(|| lookup(real_h(a.conjugate()), real_h(b.conjugate())).map(TransitionRing::conjugate))
        .expect("every pair reaches a listed row")
}

/// Smallest algebra carrying each ring label, with the sign of its complex
/// unit for `C`-type labels: `R` is `Cl(2,0)`, `H` and `H~` are `Cl(0,2)`, and
/// `C`, `C~` are the doubled quaternions `H + iH`, `H - iH`.
pub fn ring_realization(k: TransitionRing) -> (Signature, Option<i8>) {
    let s = |p, q| Signature::new(p, q).expect("small");
    match k {
        TransitionRing::R => (s(2, 0), None),
        TransitionRing::H | TransitionRing::HBar => (s(0, 2), None),
        TransitionRing::C => (s(0, 2), Some(1)),
        TransitionRing::CBar => (s(0, 2), Some(-1)),
    }
}

/// Result of computing a transition on realized algebras.
#[derive(Clone, Debug)]
pub struct TransitionCheck {
    pub left: TransitionRing,
    pub right: TransitionRing,
    pub algebra: TensorSignature,
    /// Product of the doubling units `(1 + s1 i)(1 + s2 i)` when both sides are complex.
    pub doubling_product: Option<Scalar>,
    pub computed: TransitionRing,
}

/// Compute `K1 (x) K2` from the division ring of the realized tensor algebra.
///
/// Real labels multiply as real algebras. A complex label complexifies the
/// product. When both labels are complex the doubling units are multiplied:
/// `(1+i)(1-i) = 2` is real, so the pair lands in the real form and the real
/// ring is reported; `(1+i)(1+i) = 2i` stays complex with the sign of its
/// imaginary part.
pub fn transition_oracle(a: TransitionRing, b: TransitionRing) -> Result<TransitionCheck, CliffordError> {
    let (sa, ua) = ring_realization(a);
    let (sb, ub) = ring_realization(b);
    let algebra = TensorSignature::new(vec![sa, sb])?;
    let real_ring = || -> Result<TransitionRing, CliffordError> {
        let report = division_ring_report(&algebra)?;
        match report.tag() {
            Some(RingTag::Real) => Ok(TransitionRing::R),
            Some(RingTag::Quaternion) => Ok(TransitionRing::H),
            Some(RingTag::Complex) => Ok(TransitionRing::C),
            _ => Err(CliffordError::NotDivisionRing { dimension: report.identification.basis.len() }),
        }
    };
    let complex_ring = |sign: i8| -> Result<TransitionRing, CliffordError> {
        let report = division_ring_report(&Complexified(algebra.clone()))?;
        if report.ring() != DivisionRing::Complex || report.doubled() {
            return Err(CliffordError::NotDivisionRing { dimension: report.identification.basis.len() });
        }
        Ok(if sign > 0 { TransitionRing::C } else { TransitionRing::CBar })
    };
    let unit = |s: i8| &Scalar::one() + &Scalar::from_int(s as i64).mul_i();
    let (computed, doubling_product) = match (ua, ub) {
        (None, None) => {
            let r = real_ring()?;
            let conj = r == TransitionRing::H && (a == TransitionRing::HBar || b == TransitionRing::HBar);
            (if conj { r.conjugate() } else { r }, None)
        }
        (Some(s), None) | (None, Some(s)) => (complex_ring(s)?, None),
        (Some(s1), Some(s2)) => {
            let d = &unit(s1) * &unit(s2);
            let r = if d.is_real() {
                real_ring()?
            } else if d.im.is_positive() {
                complex_ring(1)?
            } else {
                complex_ring(-1)?
            };
            (r, Some(d))
        }
    };
    Ok(TransitionCheck { left: a, right: b, algebra, doubling_product, computed })
}

/// Chain printed in the literature, with the ring its arrow points to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrintedChain {
    pub target: (usize, usize),
    pub factors: &'static [(usize, usize)],
    pub arrow: DivisionRing,
}

macro_rules! chain {
    ($p:expr, $q:expr; $($f:expr),+ => $ring:ident) => {
        PrintedChain { target: ($p, $q), factors: &[$($f),+], arrow: DivisionRing::$ring }
    };
}

const RR: (usize, usize) = (2, 0);
const PQ: (usize, usize) = (1, 1);
const HH: (usize, usize) = (0, 2);

/// Factorizations into two-dimensional algebras listed for `m = 2, 3, 4`, and
/// the `m = 5` chain of `Cl(10,0)`. Alternatives for one target are in printed order.
pub static PRINTED_CHAINS: &[PrintedChain] = &[
    chain!(4, 0; RR, HH => Quaternion),
    chain!(3, 1; RR, PQ => Real),
    chain!(2, 2; RR, RR => Real),
    chain!(1, 3; PQ, HH => Quaternion),
    chain!(0, 4; HH, RR => Quaternion),
    chain!(6, 0; RR, HH, RR => Quaternion),
    chain!(5, 1; RR, PQ, HH => Quaternion),
    chain!(4, 2; RR, RR, RR => Real),
    chain!(4, 2; PQ, RR, PQ => Real),
    chain!(4, 2; HH, HH, RR => Real),
    chain!(3, 3; RR, RR, PQ => Real),
    chain!(3, 3; HH, PQ, HH => Real),
    chain!(2, 4; RR, RR, HH => Quaternion),
    chain!(2, 4; PQ, PQ, HH => Quaternion),
    chain!(1, 5; PQ, HH, RR => Quaternion),
    chain!(0, 6; HH, RR, HH => Real),
    chain!(8, 0; RR, HH, RR, HH => Real),
    chain!(7, 1; RR, PQ, HH, RR => Quaternion),
    chain!(6, 2; RR, RR, RR, HH => Quaternion),
    chain!(6, 2; PQ, RR, PQ, HH => Quaternion),
    chain!(6, 2; HH, HH, RR, HH => Quaternion),
    chain!(5, 3; RR, RR, RR, PQ => Real),
    chain!(4, 4; RR, RR, RR, RR => Real),
    chain!(4, 4; PQ, RR, RR, PQ => Real),
    chain!(4, 4; HH, RR, RR, HH => Real),
    chain!(3, 5; RR, RR, PQ, HH => Quaternion),
    chain!(2, 6; RR, RR, HH, RR => Quaternion),
    chain!(2, 6; PQ, PQ, HH, RR => Quaternion),
    chain!(1, 7; PQ, HH, RR, HH => Real),
    chain!(0, 8; HH, RR, HH, RR => Real),
    chain!(10, 0; RR, HH, RR, HH, RR => Real),
];

pub fn printed_chains(sig: Signature) -> Vec<&'static PrintedChain> {
    PRINTED_CHAINS.iter().filter(|c| c.target == (sig.p(), sig.q())).collect()
}

impl PrintedChain {
    pub fn signatures(&self) -> Vec<Signature> {
        self.factors.iter().map(|&(p, q)| Signature::new(p, q).expect("small")).collect()
    }

    pub fn target_signature(&self) -> Signature {
        Signature::new(self.target.0, self.target.1).expect("small")
    }
}

/// A verified factorization of `Cl(p,q)` into two-dimensional factors.
#[derive(Clone, Debug)]
pub struct FactorChain {
    pub target: Signature,
    pub factors: Vec<Signature>,
    pub witness: TensorWitness,
}

impl FactorChain {
    pub fn rings(&self) -> Vec<TransitionRing> {
        self.factors.iter().map(|f| factor_ring(*f)).collect()
    }

    /// Running result of the ring transitions from left to right.
    pub fn ring_trace(&self) -> Vec<TransitionRing> {
        fold_rings(&self.rings())
    }

    pub fn final_ring(&self) -> TransitionRing {
        *self.ring_trace().last().unwrap_or(&TransitionRing::R)
    }

    /// Text form `Cl(1,1)⊗Cl(0,2)`.
    pub fn display_factors(&self) -> String {
        self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("⊗")
    }
}

/// Division ring of a factor algebra as a transition label.
pub fn factor_ring(f: Signature) -> TransitionRing {
    TransitionRing::from_base(classify(f).ring.division_ring(), false)
}

pub fn fold_rings(rings: &[TransitionRing]) -> Vec<TransitionRing> {
    let mut trace = Vec::new();
    let mut acc: Option<TransitionRing> = None;
    for &r in rings {
        let next = match acc {
            None => r,
            Some(a) => ring_transition(a, r),
        };
        trace.push(next);
        acc = Some(next);
    }
    trace
}

/// Peel two generators at a time: `(2,0)` while `p >= 2`, then `(1,1)`, then
/// `(0,2)`. A factor with `w^2 = -1` swaps the signature of what remains.
pub fn greedy_chain(sig: Signature) -> Vec<Signature> {
    let (mut p, mut q) = (sig.p(), sig.q());
    let mut out = Vec::new();
    while p + q > 0 {
        let (fp, fq) = if p >= 2 {
            (2, 0)
        } else if p >= 1 && q >= 1 {
            (1, 1)
        } else {
            (0, 2)
        };
        out.push(Signature::new(fp, fq).expect("small"));
        let (rp, rq) = (p - fp, q - fq);
        (p, q) = if (fp, fq) == (1, 1) { (rp, rq) } else { (rq, rp) };
    }
    out
}

/// Factorization of an even-dimensional `Cl(p,q)` into `(p+q)/2` two-dimensional
/// factors. A chain listed in [`PRINTED_CHAINS`] is preferred; otherwise [`greedy_chain`].
pub fn karoubi_factorize(sig: Signature) -> Result<FactorChain, CliffordError> {
    if sig.n() % 2 == 1 {
        return Err(CliffordError::Parity { expected: "even", n: sig.n() });
    }
    let printed = printed_chains(sig);
    let factors = match printed.first() {
        Some(c) => c.signatures(),
        None => greedy_chain(sig),
    };
    let witness = verify_tensor_iso(sig, &factors)?;
    Ok(FactorChain { target: sig, factors, witness })
}

/// `Cl(p+8,q) ≅ Cl(p,q) (x) Cl(8,0)`.
pub fn periodicity_witness(sig: Signature) -> Result<TensorWitness, CliffordError> {
    let shifted = Signature::new(sig.p() + 8, sig.q())?;
    Ok(verify_tensor_iso(shifted, &[sig, Signature::new(8, 0)?])?)
}

/// Generator images for `Cl^+(p,q) ≅ Cl(a,b)`, all of the form `e_pivot e_k`.
#[derive(Clone, Debug)]
pub struct EvenIso {
    pub source: Signature,
    pub target: Signature,
    pub images: Vec<Multivector>,
}

/// Images with the pivot on the first positive generator, giving `Cl(q,p-1)`,
/// or on the last (negative) generator when `p = 0`, giving `Cl(p,q-1)`.
fn even_images(sig: Signature, positive_pivot: bool) -> (Signature, Vec<Multivector>) {
    let n = sig.n();
    let g = |i| Multivector::generator(&sig, i);
    if positive_pivot {
        let e1 = g(0);
        let pos = (sig.p()..n).map(|k| &e1 * &g(k));
        let neg = (1..sig.p()).map(|k| &e1 * &g(k));
        (Signature::new(sig.q(), sig.p() - 1).expect("smaller"), pos.chain(neg).collect())
    } else {
        let en = g(n - 1);
        let images = (0..n - 1).map(|k| &en * &g(k)).collect();
        (Signature::new(sig.p(), sig.q() - 1).expect("smaller"), images)
    }
}

/// `Cl^+(p,q) ≅ Cl(q,p-1)`, verified inside the even subalgebra.
pub fn even_subalgebra_iso(sig: Signature) -> Result<EvenIso, CliffordError> {
    if sig.p() == 0 {
        return Err(CliffordError::NeedsPositiveGenerator);
    }
    let (target, images) = even_images(sig, true);
    check_even_images(sig, target, &images)?;
    Ok(EvenIso { source: sig, target, images })
}

fn check_even_images(sig: Signature, target: Signature, images: &[Multivector]) -> Result<(), IsoFailure> {
    if let Some(i) = images.iter().position(|x| !x.is_even()) {
        return Err(IsoFailure::OutsideSubalgebra { generator: i + 1 });
    }
    check_generator_images(target, images, &Multivector::one(&sig), sig.dimension() / 2, SpanField::Native)
}

/// Splitting of an odd-dimensional algebra by `λ± = (1 ± u)/2`, `u` central.
#[derive(Clone, Debug)]
pub struct SemisimpleSplit {
    pub signature: Signature,
    /// `u = w` when `w^2 = +1`; `u = i w` in the complexification when `w^2 = -1`.
    pub complexified: bool,
    pub lambda_plus: Multivector<Complexified<Signature>>,
    pub lambda_minus: Multivector<Complexified<Signature>>,
    /// Each summand `λ± A` is isomorphic to this algebra (or its complexification).
    pub factor: Signature,
    /// Images `λ+ x_j` of the factor's generators inside the `λ+` summand.
    pub summand_images: Vec<Multivector<Complexified<Signature>>>,
}

impl SemisimpleSplit {
    /// `λ±` as real multivectors, when they are real.
    pub fn real_projectors(&self) -> Option<(Multivector, Multivector)> {
        if self.complexified {
            return None;
        }
        let (a, _) = self.lambda_plus.real_imag_parts();
        let (b, _) = self.lambda_minus.real_imag_parts();
        Some((a, b))
    }
}

/// `Cl(p,q) = λ+ Cl ⊕ λ- Cl` for odd `p+q`, each summand isomorphic to
/// `Cl(q,p-1)` (or `Cl(0,q-1)` when `p = 0`). For `w^2 = -1` the split only
/// exists after complexification and uses `λ± = (1 ± i w)/2`.
pub fn split_semisimple(sig: Signature) -> Result<SemisimpleSplit, CliffordError> {
    if sig.n() % 2 == 0 {
        return Err(CliffordError::Parity { expected: "odd", n: sig.n() });
    }
    let alg = Complexified(sig);
    let w = volume_element(&sig).complexify();
    let ww = &w * &w;
    let complexified = !ww.is_scalar_value(&Scalar::one());
    let u = if complexified { w.scale(&Scalar::i()) } else { w };
    let one = Multivector::one(&alg);
    let half = Scalar::from_ratio(1, 2);
    let lambda_plus = (&one + &u).scale(&half);
    let lambda_minus = (&one - &u).scale(&half);
    debug_assert!((&lambda_plus * &lambda_minus).is_zero());
    let (factor, images) = even_images(sig, sig.p() > 0);
    let summand_images: Vec<_> = images.iter().map(|x| &lambda_plus * &x.complexify()).collect();
    let field = if complexified { SpanField::Native } else { SpanField::Real };
    check_generator_images(factor, &summand_images, &lambda_plus, sig.dimension() / 2, field)?;
    Ok(SemisimpleSplit { signature: sig, complexified, lambda_plus, lambda_minus, factor, summand_images })
}

/// `Cl(p,q) ≅ C (x) Cl(a,b)` for odd `p+q` with `w^2 = -1`: `w` plays `i`.
#[derive(Clone, Debug)]
pub struct ComplexIdentification {
    pub source: Signature,
    pub real_form: Signature,
    pub imaginary_unit: Multivector,
    pub images: Vec<Multivector>,
}

pub fn complex_identification(sig: Signature) -> Result<ComplexIdentification, CliffordError> {
    if sig.n() % 2 == 0 {
        return Err(CliffordError::Parity { expected: "odd", n: sig.n() });
    }
    let w = volume_element(&sig);
    let (real_form, images) = even_images(sig, sig.p() > 0);
    let minus_one = -&Multivector::one(&sig);
    if &w * &w != minus_one {
        return Err(IsoFailure::WrongSquare { generator: 0, expected: -1, found: (&w * &w).to_string() }.into());
    }
    for (j, x) in images.iter().enumerate() {
        if !w.commutes_with(x) {
            return Err(IsoFailure::NotAnticommuting { i: 0, j: j + 1 }.into());
        }
    }
    // the generators are fine as a copy of Cl(a,b); together with w they must span everything
    let one = Multivector::one(&sig);
    check_generator_images(real_form, &images, &one, sig.dimension() / 2, SpanField::Native)?;
    let products = subset_products(&images, &one);
    let with_w: Vec<Multivector> = products.iter().flat_map(|x| [x.clone(), &w * x]).collect();
    let rank = span_rank(with_w.iter(), SpanField::Native);
    if rank != sig.dimension() {
        return Err(IsoFailure::SpanDeficient { rank, expected: sig.dimension() }.into());
    }
    Ok(ComplexIdentification { source: sig, real_form, imaginary_unit: w, images })
}

/// `C (x) Cl(a) ≅ C (x) Cl(b)` for `a`, `b` with the same `n`: generator `j`
/// of `a` goes to `e_j` or `i e_j` in the complexification of `b`.
pub fn complex_clifford_iso(a: Signature, b: Signature) -> Result<Vec<Multivector<Complexified<Signature>>>, IsoFailure> {
    if a.n() != b.n() {
        return Err(IsoFailure::DimensionMismatch { target: a.dimension(), candidate: b.dimension() });
    }
    let alg = Complexified(b);
    let images: Vec<_> = (0..a.n())
        .map(|j| {
            let c = if a.generator_square(j) == b.generator_square(j) { Scalar::one() } else { Scalar::i() };
            Multivector::from_terms_unchecked(&alg, [(Blade::generator(j), c)])
        })
        .collect();
    check_generator_images(a, &images, &Multivector::one(&alg), a.dimension(), SpanField::Native)?;
    Ok(images)
}

pub fn complexify(sig: Signature) -> Complexified<Signature> {
    Complexified(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn spacetime_factorization() {
        let chain = karoubi_factorize(sig(1, 3)).unwrap();
        assert_eq!(chain.factors, vec![sig(1, 1), sig(0, 2)]);
        assert_eq!(chain.final_ring(), TransitionRing::H);
        assert!(chain.witness.moves.is_empty());
    }

    #[test]
    fn euclidean_four_space() {
        let chain = karoubi_factorize(sig(4, 0)).unwrap();
        assert_eq!(chain.factors, vec![sig(2, 0), sig(0, 2)]);
        assert_eq!(chain.ring_trace(), vec![TransitionRing::R, TransitionRing::H]);
    }

    #[test]
    fn ten_dimensional_chain_and_periodicity() {
        let chain = karoubi_factorize(sig(10, 0)).unwrap();
        assert_eq!(chain.factors.len(), 5);
        assert_eq!(chain.final_ring(), TransitionRing::R);
        let w = verify_tensor_iso(sig(10, 0), &[sig(2, 0), sig(8, 0)]).unwrap();
        assert!(!w.moves.is_empty());
    }

    #[test]
    fn mismatched_rings_fail_with_named_relation() {
        let err = verify_tensor_iso(sig(2, 0), &[sig(0, 2)]).unwrap_err();
        assert_eq!(err, IsoFailure::WrongSquare { generator: 1, expected: 1, found: "-1".into() });
        let err = verify_tensor_iso(sig(2, 0), &[sig(2, 2)]).unwrap_err();
        assert!(matches!(err, IsoFailure::DimensionMismatch { .. }));
    }

    #[test]
    fn two_odd_factors_have_no_construction() {
        let err = verify_tensor_iso(sig(2, 0), &[sig(1, 0), sig(1, 0)]).unwrap_err();
        assert!(matches!(err, IsoFailure::NoConstruction(_)));
    }

    #[test]
    fn greedy_chain_realizes_target_without_moves() {
        for s in Signature::all_up_to(10).into_iter().filter(|s| s.n() % 2 == 0 && s.n() > 0) {
            let f = greedy_chain(s);
            let w = verify_tensor_iso(s, &f).unwrap();
            assert!(w.moves.is_empty(), "{}", s);
        }
    }

    #[test]
    fn even_subalgebra_examples() {
        assert_eq!(even_subalgebra_iso(sig(2, 4)).unwrap().target, sig(4, 1));
        assert_eq!(even_subalgebra_iso(sig(1, 3)).unwrap().target, sig(3, 0));
        assert_eq!(even_subalgebra_iso(sig(1, 1)).unwrap().target, sig(1, 0));
        assert_eq!(even_subalgebra_iso(sig(0, 2)).unwrap_err(), CliffordError::NeedsPositiveGenerator);
    }

    #[test]
    fn splits() {
        let s = split_semisimple(sig(3, 0)).unwrap();
        assert!(s.complexified);
        assert_eq!(s.factor, sig(0, 2));
        let s = split_semisimple(sig(1, 0)).unwrap();
        assert!(!s.complexified);
        assert_eq!(s.factor, sig(0, 0));
        let (lp, lm) = s.real_projectors().unwrap();
        assert!((&lp * &lm).is_zero());
        assert_eq!(&lp * &lp, lp);
        let s = split_semisimple(sig(0, 3)).unwrap();
        assert_eq!(s.factor, sig(0, 2));
        assert!(split_semisimple(sig(2, 0)).is_err());
    }

    #[test]
    fn negative_definite_direct_sums() {
        // Cl(0,q) = Cl(0,q-1) + Cl(0,q-1) holds over R only for q = 3 mod 4
        for q in (1..=11).step_by(2) {
            let s = split_semisimple(sig(0, q)).unwrap();
            assert_eq!(s.factor, sig(0, q - 1));
            assert_eq!(!s.complexified, q % 4 == 3, "q = {q}");
            assert_eq!(classify(sig(0, q)).simple, q % 4 == 1);
        }
    }

    #[test]
    fn complex_identifications() {
        let c = complex_identification(sig(4, 1)).unwrap();
        assert_eq!(c.real_form, sig(1, 3));
        let c = complex_identification(sig(3, 0)).unwrap();
        assert_eq!(c.real_form, sig(0, 2));
        assert!(complex_identification(sig(1, 0)).is_err());
        assert!(complex_clifford_iso(sig(0, 2), sig(1, 1)).is_ok());
        assert!(complex_clifford_iso(sig(1, 3), sig(4, 0)).is_ok());
    }

    #[test]
    fn listed_transitions_are_reproduced_by_the_table() {
        for (a, b, r) in PRINTED_TRANSITIONS {
            assert_eq!(ring_transition(a, b), r);
        }
        use TransitionRing::*;
        assert_eq!(ring_transition(HBar, H), R);
        assert_eq!(ring_transition(CBar, CBar), CBar);
        assert_eq!(ring_transition(C, HBar), C);
        assert_eq!(ring_transition(HBar, CBar), CBar);
    }

    #[test]
    fn transition_conjugate_symmetry() {
        for a in TransitionRing::ALL {
            for b in TransitionRing::ALL {
                assert_eq!(ring_transition(a.conjugate(), b.conjugate()), ring_transition(a, b).conjugate());
            }
        }
    }

    #[test]
    fn spacetime_times_plane_is_real() {
        let w = verify_tensor_iso(sig(3, 1), &[sig(1, 1), sig(2, 0)]).unwrap();
        let report = division_ring_report(&w.algebra).unwrap();
        assert_eq!(report.tag(), Some(RingTag::Real));
    }
}
