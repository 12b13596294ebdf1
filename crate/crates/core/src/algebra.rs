//! Algebras with a signed monomial basis.
//!
//! Every algebra handled here has a basis indexed by bit masks in which the
//! product of two basis elements is plus or minus a third. Clifford algebras
//! `Cl(p,q)`, plain tensor products of them, and their complexifications all
//! fit this shape, so one multivector type and one set of span routines serve
//! all of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CliffordError;
use crate::signature::{blade_name, clifford_blade_product, Blade, Signature};

pub trait BasisAlgebra: Clone + PartialEq + fmt::Debug + Send + Sync {
    /// Number of bits used by basis masks.
    fn generator_count(&self) -> usize;

    /// `e_a * e_b = (-1)^neg * e_result`.
    fn blade_product(&self, a: Blade, b: Blade) -> (bool, Blade);

    /// Whether coefficients range over `Q(i)` rather than `Q`.
    fn is_complex(&self) -> bool {
        false
    }

    /// Number `k` of commuting blade factors in a primitive idempotent, when
    /// known in closed form.
    fn primitive_factor_count(&self) -> Option<usize> {
        None
    }

    /// Same count for the complexification of this algebra.
    fn complex_primitive_factor_count(&self) -> Option<usize> {
        None
    }

    fn blade_label(&self, b: Blade) -> String;

    fn name(&self) -> String;

    fn dimension(&self) -> usize {
        1 << self.generator_count()
    }

    /// Real dimension of the algebra.
    fn real_dimension(&self) -> usize {
        if self.is_complex() {
            2 * self.dimension()
        } else {
            self.dimension()
        }
    }

    /// Grade used by the grade involution and reversion.
    fn blade_grade(&self, b: Blade) -> usize {
        b.grade()
    }

    fn square_is_negative(&self, b: Blade) -> bool {
        self.blade_product(b, b).0
    }

    fn blades_commute(&self, a: Blade, b: Blade) -> bool {
        self.blade_product(a, b).0 == self.blade_product(b, a).0
    }

    /// The basis element with every generator set.
    fn top_blade(&self) -> Blade {
        Blade(((1u64 << self.generator_count()) - 1) as u32)
    }
}

impl BasisAlgebra for Signature {
    fn generator_count(&self) -> usize {
        self.n()
    }

    fn blade_product(&self, a: Blade, b: Blade) -> (bool, Blade) {
        let (neg, m) = clifford_blade_product(a.0, b.0, self.negative_mask());
        (neg, Blade(m))
    }

    fn primitive_factor_count(&self) -> Option<usize> {
        Some(crate::ideals::primitive_factor_count(*self))
    }

    fn complex_primitive_factor_count(&self) -> Option<usize> {
        Some(self.n().div_ceil(2))
    }

    fn blade_label(&self, b: Blade) -> String {
        blade_name(b, self.n())
    }

    fn name(&self) -> String {
        self.to_string()
    }
}

/// The complexification `C (x) A` of a real monomial algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complexified<A>(pub A);

impl<A: BasisAlgebra> BasisAlgebra for Complexified<A> {
    fn generator_count(&self) -> usize {
        self.0.generator_count()
    }

    fn blade_product(&self, a: Blade, b: Blade) -> (bool, Blade) {
        self.0.blade_product(a, b)
    }

    fn is_complex(&self) -> bool {
        true
    }

    fn primitive_factor_count(&self) -> Option<usize> {
        self.0.complex_primitive_factor_count()
    }

    fn blade_label(&self, b: Blade) -> String {
        self.0.blade_label(b)
    }

    fn name(&self) -> String {
        format!("C(x){}", self.0.name())
    }

    fn blade_grade(&self, b: Blade) -> usize {
        self.0.blade_grade(b)
    }
}

/// Plain (ungraded) tensor product `Cl(a1,b1) (x) Cl(a2,b2) (x) ...`.
///
/// Factor `i` owns a contiguous run of mask bits. Basis elements from
/// different factors commute; within a factor the Clifford rules apply.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSignature {
    factors: Vec<Signature>,
}

impl TensorSignature {
    pub fn new(factors: Vec<Signature>) -> Result<Self, CliffordError> {
        let n: usize = factors.iter().map(Signature::n).sum();
        if n > crate::signature::MAX_GENERATORS {
            let p = factors.iter().map(Signature::p).sum();
            let q = factors.iter().map(Signature::q).sum();
            return Err(CliffordError::DimensionCap { p, q, cap: crate::signature::MAX_GENERATORS });
        }
        Ok(TensorSignature { factors })
    }

    pub fn factors(&self) -> &[Signature] {
        &self.factors
    }

    /// Bit offset of factor `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.factors[..i].iter().map(Signature::n).sum()
    }

    /// Embed a blade of factor `i` into the tensor basis.
    pub fn embed(&self, i: usize, b: Blade) -> Blade {
        Blade(b.0 << self.offset(i))
    }

    fn segment(&self, i: usize, b: Blade) -> u32 {
        let n = self.factors[i].n();
        (b.0 >> self.offset(i)) & (((1u64 << n) - 1) as u32)
    }
}

impl BasisAlgebra for TensorSignature {
    fn generator_count(&self) -> usize {
        self.factors.iter().map(Signature::n).sum()
    }

    fn blade_product(&self, a: Blade, b: Blade) -> (bool, Blade) {
        let mut neg = false;
        for (i, f) in self.factors.iter().enumerate() {
            let (s, _) = clifford_blade_product(self.segment(i, a), self.segment(i, b), f.negative_mask());
            neg ^= s;
        }
        (neg, Blade(a.0 ^ b.0))
    }

    fn blade_label(&self, b: Blade) -> String {
        self.factors
            .iter()
            .enumerate()
            .map(|(i, f)| blade_name(Blade(self.segment(i, b)), f.n()))
            .collect::<Vec<_>>()
            .join("(x)")
    }

    fn name(&self) -> String {
        self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("(x)")
    }
}
