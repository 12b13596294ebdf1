//! Exact multivectors and the fundamental (anti-)automorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::algebra::{BasisAlgebra, Complexified};
use crate::error::CliffordError;
use crate::scalar::Scalar;
use crate::signature::{Blade, Signature};

/// An element of a monomial algebra, stored sparsely with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector<A: BasisAlgebra = Signature> {
    algebra: A,
    coeffs: BTreeMap<Blade, Scalar>,
}

impl<A: BasisAlgebra> Multivector<A> {
    pub fn zero(algebra: &A) -> Self {
        Multivector { algebra: algebra.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(algebra: &A) -> Self {
        Self::scalar(algebra, Scalar::one())
    }

    pub fn scalar(algebra: &A, s: Scalar) -> Self {
        Self::from_terms_unchecked(algebra, [(Blade::SCALAR, s)])
    }

    /// Basis element `e_b`. Panics if `b` lies outside the algebra.
    pub fn blade(algebra: &A, b: Blade) -> Self {
        assert!(b.0 >> algebra.generator_count() == 0, "blade outside algebra");
        Self::from_terms_unchecked(algebra, [(b, Scalar::one())])
    }

    /// Generator `e(i+1)` (0-based index).
    pub fn generator(algebra: &A, i: usize) -> Self {
        Self::blade(algebra, Blade::generator(i))
    }

    /// Build from `(blade, coefficient)` pairs, summing duplicates and
    /// validating blades and the coefficient field.
    pub fn from_terms<I>(algebra: &A, terms: I) -> Result<Self, CliffordError>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let mut out = Self::zero(algebra);
        for (b, s) in terms {
            if b.0 >> algebra.generator_count() != 0 {
                return Err(CliffordError::BladeOutOfRange { mask: b.0 });
            }
            if !algebra.is_complex() && !s.is_real() {
                return Err(CliffordError::ComplexCoefficientInRealAlgebra);
            }
            out.add_term(b, &s);
        }
        Ok(out)
    }

    pub(crate) fn from_terms_unchecked<I>(algebra: &A, terms: I) -> Self
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let mut out = Self::zero(algebra);
        for (b, s) in terms {
            out.add_term(b, &s);
        }
        out
    }

    fn add_term(&mut self, b: Blade, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_insert_with(Scalar::zero);
        *entry += s;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.coeffs.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Scalar part equals `s` and nothing else is present.
    pub fn is_scalar_value(&self, s: &Scalar) -> bool {
        if s.is_zero() {
            return self.is_zero();
        }
        self.coeffs.len() == 1 && self.coeffs.get(&Blade::SCALAR) == Some(s)
    }

    /// Single-term element `c * e_b`, if it is one.
    pub fn as_monomial(&self) -> Option<(Blade, &Scalar)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(b, s)| (*b, s))
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.algebra);
        }
        Multivector {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    /// Geometric (algebra) product. Errors when the operands live in different algebras.
    pub fn product(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.algebra != rhs.algebra {
            return Err(CliffordError::AlgebraMismatch);
        }
        let mut out = Self::zero(&self.algebra);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                let (neg, m) = self.algebra.blade_product(*a, *b);
                let c = ca * cb;
                if neg {
                    out.add_term(m, &-c);
                } else {
                    out.add_term(m, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.algebra != rhs.algebra {
            return Err(CliffordError::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (b, c) in &rhs.coeffs {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    /// `a b - b a`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    pub fn commutes_with(&self, rhs: &Self) -> bool {
        self.commutator(rhs).is_zero()
    }

    pub fn anticommutes_with(&self, rhs: &Self) -> bool {
        (&(self * rhs) + &(rhs * self)).is_zero()
    }

    fn map_signs(&self, negate: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| (*b, if negate(*b) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `A -> A*`: negates odd grades.
    pub fn grade_involution(&self) -> Self {
        let alg = self.algebra.clone();
        self.map_signs(move |b| alg.blade_grade(b) % 2 == 1)
    }

    /// `A -> ~A`: grade `g` picks up `(-1)^(g(g-1)/2)`.
    pub fn reversion(&self) -> Self {
        let alg = self.algebra.clone();
        self.map_signs(move |b| {
            let g = alg.blade_grade(b);
            (g * g.saturating_sub(1) / 2) % 2 == 1
        })
    }

    /// Composition of grade involution and reversion.
    pub fn conjugation(&self) -> Self {
        self.reversion().grade_involution()
    }

    /// `A1 + i A2 -> A1 - i A2`; the identity on real elements.
    pub fn pseudo_automorphism(&self) -> Self {
        Multivector {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c.conj())).collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|b| self.algebra.blade_grade(*b) % 2 == 0)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.values().all(Scalar::is_real)
    }

    /// Lift into the complexified algebra.
    pub fn complexify(&self) -> Multivector<Complexified<A>> {
        Multivector {
            algebra: Complexified(self.algebra.clone()),
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<A: BasisAlgebra> Multivector<Complexified<A>> {
    /// Split `A1 + i A2` into `(A1, A2)` in the underlying real algebra.
    pub fn real_imag_parts(&self) -> (Multivector<A>, Multivector<A>) {
        let real = &self.algebra.0;
        let re = Multivector::from_terms_unchecked(real, self.coeffs.iter().map(|(b, c)| (*b, Scalar::real(c.re.clone()))));
        let im = Multivector::from_terms_unchecked(real, self.coeffs.iter().map(|(b, c)| (*b, Scalar::real(c.im.clone()))));
        (re, im)
    }
}

impl<'a, A: BasisAlgebra> Mul for &'a Multivector<A> {
    type Output = Multivector<A>;
    /// Panics on an algebra mismatch; use [`Multivector::product`] to handle it.
    fn mul(self, rhs: &'a Multivector<A>) -> Multivector<A> {
        self.product(rhs).expect("multivectors from different algebras")
    }
}

impl<'a, A: BasisAlgebra> Add for &'a Multivector<A> {
    type Output = Multivector<A>;
    fn add(self, rhs: &'a Multivector<A>) -> Multivector<A> {
        self.try_add(rhs).expect("multivectors from different algebras")
    }
}

impl<'a, A: BasisAlgebra> Sub for &'a Multivector<A> {
    type Output = Multivector<A>;
    fn sub(self, rhs: &'a Multivector<A>) -> Multivector<A> {
        self + &(-rhs)
    }
}

impl<A: BasisAlgebra> Neg for &Multivector<A> {
    type Output = Multivector<A>;
    fn neg(self) -> Multivector<A> {
        self.map_signs(|_| true)
    }
}

impl<A: BasisAlgebra> fmt::Display for Multivector<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (b, c)) in self.coeffs.iter().enumerate() {
            let label = self.algebra.blade_label(*b);
            let neg_imag = c.re.is_zero() && c.im.is_negative();
            let (neg, mag) = if c.is_negative_real() || neg_imag { (true, -c) } else { (false, c.clone()) };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if b.is_scalar() {
                write!(f, "{}", mag)?;
            } else if mag == Scalar::one() {
                write!(f, "{}", label)?;
            } else {
                write!(f, "{} {}", mag, label)?;
            }
        }
        Ok(())
    }
}

/// `e1 e2 ... en`.
pub fn volume_element<A: BasisAlgebra>(algebra: &A) -> Multivector<A> {
    Multivector::blade(algebra, algebra.top_blade())
}

/// Blades commuting with every generator, i.e. a basis of the center.
///
/// In a monomial algebra a combination is central exactly when each of its
/// basis terms is, so the commutant is found blade by blade.
pub fn center_basis<A: BasisAlgebra>(algebra: &A) -> Vec<Multivector<A>> {
    let n = algebra.generator_count();
    (0..algebra.dimension() as u32)
        .map(Blade)
        .filter(|b| (0..n).all(|i| algebra.blades_commute(*b, Blade::generator(i))))
        .map(|b| Multivector::blade(algebra, b))
        .collect()
}

/// All even-grade blades of `Cl(p,q)`.
pub fn even_subalgebra_basis(sig: Signature) -> Vec<Blade> {
    (0..sig.dimension() as u32).map(Blade).filter(|b| b.grade() % 2 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, idx: &[usize]) -> Multivector {
        Multivector::blade(&s, Blade::from_indices(idx))
    }

    #[test]
    fn generator_squares_to_plus_one_in_cl20() {
        let s = sig(2, 0);
        assert_eq!(&e(s, &[1]) * &e(s, &[1]), Multivector::one(&s));
    }

    #[test]
    fn bivector_squares_to_minus_one_in_cl02() {
        let s = sig(0, 2);
        let e12 = e(s, &[1, 2]);
        assert!((&e12 * &e12).is_scalar_value(&Scalar::from_int(-1)));
    }

    #[test]
    fn spacetime_quaternion_units() {
        let s = sig(1, 3);
        let phi = e(s, &[1, 2, 3]);
        let psi = e(s, &[1, 2, 4]);
        let minus_one = Scalar::from_int(-1);
        assert!((&phi * &phi).is_scalar_value(&minus_one));
        assert!((&psi * &psi).is_scalar_value(&minus_one));
        assert!(phi.anticommutes_with(&psi));
    }

    #[test]
    fn involutions_on_small_elements() {
        let s = sig(2, 0);
        assert_eq!(e(s, &[1]).grade_involution(), -&e(s, &[1]));
        assert_eq!(e(s, &[1, 2]).reversion(), &e(s, &[2]) * &e(s, &[1]));
        assert_eq!(e(s, &[1, 2]).reversion(), -&e(s, &[1, 2]));
        let x = &(&Multivector::one(&s) + &e(s, &[1])) + &e(s, &[1, 2]);
        let expected = &(&Multivector::one(&s) - &e(s, &[1])) - &e(s, &[1, 2]);
        assert_eq!(x.conjugation(), expected);
    }

    #[test]
    fn pseudo_automorphism_conjugates_coefficients() {
        let s = Complexified(sig(1, 0));
        let ie1 = Multivector::from_terms(&s, [(Blade(1), Scalar::i())]).unwrap();
        let expected = Multivector::from_terms(&s, [(Blade(1), -Scalar::i())]).unwrap();
        assert_eq!(ie1.pseudo_automorphism(), expected);
        let real = e(sig(2, 1), &[1, 3]);
        assert_eq!(real.pseudo_automorphism(), real);
    }

    #[test]
    fn real_algebra_rejects_complex_coefficients() {
        let s = sig(1, 0);
        assert_eq!(
            Multivector::from_terms(&s, [(Blade(1), Scalar::i())]),
            Err(CliffordError::ComplexCoefficientInRealAlgebra)
        );
        assert!(Multivector::from_terms(&s, [(Blade(2), Scalar::one())]).is_err());
    }

    #[test]
    fn mismatched_algebras_error() {
        let a = Multivector::one(&sig(1, 0));
        let b = Multivector::one(&sig(0, 1));
        assert_eq!(a.product(&b), Err(CliffordError::AlgebraMismatch));
    }

    #[test]
    fn volume_element_squares() {
        let w30 = volume_element(&sig(3, 0));
        assert!((&w30 * &w30).is_scalar_value(&Scalar::from_int(-1)));
        let w10 = volume_element(&sig(1, 0));
        assert!((&w10 * &w10).is_scalar_value(&Scalar::one()));
    }

    #[test]
    fn center_bases() {
        assert_eq!(center_basis(&sig(2, 0)), vec![Multivector::one(&sig(2, 0))]);
        let s = sig(1, 0);
        assert_eq!(center_basis(&s), vec![Multivector::one(&s), e(s, &[1])]);
        let s = sig(3, 0);
        assert_eq!(center_basis(&s), vec![Multivector::one(&s), volume_element(&s)]);
    }

    #[test]
    fn even_subalgebra_counts() {
        assert_eq!(even_subalgebra_basis(sig(1, 1)), vec![Blade(0), Blade(0b11)]);
        assert_eq!(even_subalgebra_basis(sig(2, 4)).len(), 32);
    }

    #[test]
    fn display() {
        let s = sig(2, 0);
        let x = &(&Multivector::one(&s) - &e(s, &[1])) + &e(s, &[1, 2]).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(x.to_string(), "1 - e1 + 1/2 e12");
    }
}
