//! Mod-8 classification of real Clifford algebras and the `f A f` oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{BasisAlgebra, Complexified};
use crate::error::CliffordError;
use crate::ideals::{central_seeds, primitive_idempotent, Idempotent};
use crate::linalg::{coefficient_vector, SpanBasis};
use crate::multivector::{volume_element, Multivector};
use crate::scalar::Scalar;
use crate::signature::{Blade, Signature};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisionRing {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
}

impl DivisionRing {
    pub fn real_dimension(self) -> usize {
        match self {
            DivisionRing::Real => 1,
            DivisionRing::Complex => 2,
            DivisionRing::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            DivisionRing::Real => "R",
            DivisionRing::Complex => "C",
            DivisionRing::Quaternion => "H",
        }
    }

    pub fn from_real_dimension(d: usize) -> Option<Self> {
        match d {
            1 => Some(DivisionRing::Real),
            2 => Some(DivisionRing::Complex),
            4 => Some(DivisionRing::Quaternion),
            _ => None,
        }
    }
}

impl fmt::Display for DivisionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Ring label of a real Clifford algebra: a division ring or a double of one.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "R+R")]
    DoubleReal,
    #[serde(rename = "H+H")]
    DoubleQuaternion,
}

impl RingTag {
    pub fn from_parts(ring: DivisionRing, doubled: bool) -> Option<Self> {
        match (ring, doubled) {
            (DivisionRing::Real, false) => Some(RingTag::Real),
            (DivisionRing::Complex, false) => Some(RingTag::Complex),
            (DivisionRing::Quaternion, false) => Some(RingTag::Quaternion),
            (DivisionRing::Real, true) => Some(RingTag::DoubleReal),
            (DivisionRing::Quaternion, true) => Some(RingTag::DoubleQuaternion),
            (DivisionRing::Complex, true) => None,
        }
    }

    pub fn division_ring(self) -> DivisionRing {
        match self {
            RingTag::Real | RingTag::DoubleReal => DivisionRing::Real,
            RingTag::Complex => DivisionRing::Complex,
            RingTag::Quaternion | RingTag::DoubleQuaternion => DivisionRing::Quaternion,
        }
    }

    pub fn is_doubled(self) -> bool {
        matches!(self, RingTag::DoubleReal | RingTag::DoubleQuaternion)
    }

    pub fn real_dimension(self) -> usize {
        let d = self.division_ring().real_dimension();
        if self.is_doubled() {
            2 * d
        } else {
            d
        }
    }

    /// ASCII form used in JSON and on the command line.
    pub fn symbol(self) -> &'static str {
        match self {
            RingTag::Real => "R",
            RingTag::Complex => "C",
            RingTag::Quaternion => "H",
            RingTag::DoubleReal => "R+R",
            RingTag::DoubleQuaternion => "H+H",
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::DoubleReal => f.write_str("R⊕R"),
            RingTag::DoubleQuaternion => f.write_str("H⊕H"),
            other => f.write_str(other.symbol()),
        }
    }
}

/// Classification record of `Cl(p,q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraType {
    pub signature: Signature,
    pub mod8_class: u8,
    pub ring: RingTag,
    /// Size of the matrix blocks, `Cl(p,q) = Mat_rank(K)` or two copies of it.
    pub matrix_rank: usize,
    pub simple: bool,
}

impl AlgebraType {
    /// Matrix-algebra notation such as `R(2)`, `H`, `H(2)+H(2)`.
    pub fn matrix_form(&self) -> String {
        let k = self.ring.division_ring().symbol();
        let block = if self.matrix_rank == 1 { k.to_string() } else { format!("{}({})", k, self.matrix_rank) };
        if self.simple {
            block
        } else {
            format!("{block}+{block}")
        }
    }

    /// Traditional names for a few small algebras.
    pub fn alias(&self) -> Option<&'static str> {
        match (self.signature.p(), self.signature.q()) {
            (1, 0) => Some("double numbers"),
            (0, 1) => Some("complex numbers"),
            (2, 0) => Some("anti-quaternions"),
            (1, 1) => Some("pseudo-quaternions"),
            (0, 2) => Some("quaternions"),
            (3, 0) => Some("biquaternions"),
            (1, 3) => Some("space-time algebra"),
            (4, 1) => Some("Dirac algebra"),
            (2, 4) => Some("conformal algebra"),
            _ => None,
        }
    }
}

pub fn ring_for_class(class: u8) -> RingTag {
    match class {
        0 | 2 => RingTag::Real,
        3 | 7 => RingTag::Complex,
        4 | 6 => RingTag::Quaternion,
        1 => RingTag::DoubleReal,
        _ => RingTag::DoubleQuaternion,
    }
}

fn integer_sqrt(x: usize) -> usize {
    let r = (x as f64).sqrt().round() as usize;
    debug_assert_eq!(r * r, x);
    r
}

pub fn classify(sig: Signature) -> AlgebraType {
    let class = sig.mod8() as u8;
    let ring = ring_for_class(class);
    let simple = !ring.is_doubled();
    let block = if simple { sig.dimension() } else { sig.dimension() / 2 };
    let matrix_rank = integer_sqrt(block / ring.division_ring().real_dimension());
    AlgebraType { signature: sig, mod8_class: class, ring, matrix_rank, simple }
}

/// `w^2` as `+1` or `-1`, by direct multiplication.
pub fn omega_square(sig: Signature) -> i8 {
    let w = volume_element(&sig);
    if (&w * &w).is_scalar_value(&Scalar::one()) {
        1
    } else {
        -1
    }
}

/// Sign of `w^2` for even `p+q` (positive or negative algebra).
pub fn omega_square_sign(sig: Signature) -> Result<i8, CliffordError> {
    if sig.n() % 2 == 1 {
        return Err(CliffordError::Parity { expected: "even", n: sig.n() });
    }
    Ok(omega_square(sig))
}

/// Classification of the complexification, which depends only on `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexType {
    pub n: usize,
    pub matrix_rank: usize,
    pub simple: bool,
}

pub fn classify_complex(n: usize) -> ComplexType {
    ComplexType { n, matrix_rank: 1 << (n / 2), simple: n % 2 == 0 }
}

/// Structural certificate that `f A f` is a division ring.
#[derive(Clone, Debug)]
pub struct RingIdentification<A: BasisAlgebra = Signature> {
    pub ring: DivisionRing,
    /// Independent elements `f e_B f`; the first is `f` itself.
    pub basis: Vec<Multivector<A>>,
    /// Imaginary units among `basis`: none for R, one for C, three anticommuting for H.
    pub units: Vec<Multivector<A>>,
}

/// `x = c f` for a rational `c`?
fn multiple_of<A: BasisAlgebra>(x: &Multivector<A>, f: &Multivector<A>) -> Option<Scalar> {
    let (b, c0) = f.terms().next()?;
    let c = &x.coeff(*b) / c0;
    if &f.scale(&c) == x {
        Some(c)
    } else {
        None
    }
}

/// Identify `f A f` from its structure.
///
/// Real algebras: real dimension 1 is `R`; dimension 2 needs an element
/// squaring to a negative multiple of `f`; dimension 4 needs three pairwise
/// anticommuting such elements. Complexified algebras: complex dimension 1 is `C`.
pub fn identify_division_ring<A: BasisAlgebra>(f: &Idempotent<A>) -> Result<RingIdentification<A>, CliffordError> {
    let alg = f.algebra();
    let e = f.element();
    let mut span = SpanBasis::new();
    let mut basis = Vec::new();
    span.insert(coefficient_vector(e));
    basis.push(e.clone());
    for b in 0..alg.dimension() as u32 {
        let x = &(e * &Multivector::blade(alg, Blade(b))) * e;
        if !x.is_zero() && span.insert(coefficient_vector(&x)) {
            basis.push(x);
        }
        if basis.len() > 4 {
            break;
        }
    }
    let d = basis.len();
    let fail = Err(CliffordError::NotDivisionRing { dimension: d });
    if alg.is_complex() {
        return if d == 1 {
            Ok(RingIdentification { ring: DivisionRing::Complex, basis, units: vec![] })
        } else {
            fail
        };
    }
    let negative_square = |y: &Multivector<A>| {
        multiple_of(&(y * y), e).map(|c| c.is_negative_real()).unwrap_or(false)
    };
    match d {
        1 => Ok(RingIdentification { ring: DivisionRing::Real, basis, units: vec![] }),
        2 => match basis[1..].iter().find(|y| negative_square(y)) {
            Some(u) => {
                let units = vec![u.clone()];
                Ok(RingIdentification { ring: DivisionRing::Complex, basis, units })
            }
            None => fail,
        },
        4 => {
            let cand: Vec<&Multivector<A>> = basis[1..].iter().filter(|y| negative_square(y)).collect();
            if cand.len() == 3
                && cand[0].anticommutes_with(cand[1])
                && cand[0].anticommutes_with(cand[2])
                && cand[1].anticommutes_with(cand[2])
            {
                let units = cand.into_iter().cloned().collect();
                Ok(RingIdentification { ring: DivisionRing::Quaternion, basis, units })
            } else {
                fail
            }
        }
        _ => fail,
    }
}

/// Result of running the `f A f` oracle on one algebra.
#[derive(Clone, Debug)]
pub struct OracleReport<A: BasisAlgebra = Signature> {
    pub idempotent: Idempotent<A>,
    pub identification: RingIdentification<A>,
    /// Number of simple summands split off by central idempotents.
    pub summands: usize,
}

impl<A: BasisAlgebra> OracleReport<A> {
    pub fn ring(&self) -> DivisionRing {
        self.identification.ring
    }

    pub fn doubled(&self) -> bool {
        self.summands > 1
    }

    pub fn tag(&self) -> Option<RingTag> {
        match self.summands {
            1 => RingTag::from_parts(self.ring(), false),
            2 => RingTag::from_parts(self.ring(), true),
            _ => None,
        }
    }
}

/// Split off central summands, find a primitive idempotent in one of them and
/// identify `f A f` structurally.
pub fn division_ring_report<A: BasisAlgebra>(algebra: &A) -> Result<OracleReport<A>, CliffordError> {
    let summands = 1usize << central_seeds(algebra).len();
    let idempotent = primitive_idempotent(algebra)?;
    let identification = identify_division_ring(&idempotent)?;
    Ok(OracleReport { idempotent, identification, summands })
}

/// Ring tag of `Cl(p,q)` computed from `f Cl f`, independent of the mod-8 table.
pub fn division_ring_oracle(sig: Signature) -> Result<RingTag, CliffordError> {
    let report = division_ring_report(&sig)?;
    report.tag().ok_or(CliffordError::NotDivisionRing { dimension: report.identification.basis.len() })
}

/// Oracle on the complexification: the ring is always `C`, doubled for odd `n`.
pub fn complex_oracle(sig: Signature) -> Result<ComplexType, CliffordError> {
    let alg = Complexified(sig);
    let report = division_ring_report(&alg)?;
    let ideal = crate::ideals::left_ideal_basis(&report.idempotent).dimension();
    Ok(ComplexType { n: sig.n(), matrix_rank: ideal, simple: !report.doubled() })
}
