//! Exact sparse row reduction.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::Zero;

use crate::algebra::BasisAlgebra;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Blade;

pub type SparseVector<K> = BTreeMap<K, Scalar>;

/// Incrementally built echelon basis of a subspace of `Q(i)^K`.
///
/// Every stored row has leading coefficient 1 at its smallest key and no two
/// rows share a leading key.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis<K: Ord + Clone> {
    rows: Vec<SparseVector<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        SpanBasis { rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector<K>] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot key.
    pub fn reduce(&self, mut v: SparseVector<K>) -> SparseVector<K> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v.range((Bound::Excluded(c.clone()), Bound::Unbounded)).next().map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(&row_idx) = self.pivots.get(&key) {
                let factor = v[&key].clone();
                for (k, c) in &self.rows[row_idx] {
                    let entry = v.entry(k.clone()).or_insert_with(Scalar::zero);
                    *entry -= &(&factor * c);
                    if entry.is_zero() {
                        v.remove(k);
                    }
                }
            }
            cursor = Some(key);
        }
        v
    }

    /// Add `v` to the span; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVector<K>) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.iter().next() else { return false };
        let lead = lead.clone();
        let inv = c.inv().expect("nonzero leading coefficient");
        let row: SparseVector<K> = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: SparseVector<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Coefficient vector of a multivector over its own scalar field.
pub fn coefficient_vector<A: BasisAlgebra>(x: &Multivector<A>) -> SparseVector<Blade> {
    x.terms().map(|(b, c)| (*b, c.clone())).collect()
}

/// Coefficient vector over `Q`, splitting each complex coefficient into real
/// and imaginary slots. Ranks of these vectors are real dimensions.
pub fn real_coefficient_vector<A: BasisAlgebra>(x: &Multivector<A>) -> SparseVector<(Blade, bool)> {
    let mut out = BTreeMap::new();
    for (b, c) in x.terms() {
        if !c.re.is_zero() {
            out.insert((*b, false), Scalar::real(c.re.clone()));
        }
        if !c.im.is_zero() {
            out.insert((*b, true), Scalar::real(c.im.clone()));
        }
    }
    out
}

/// Field used when measuring the span of a family of multivectors.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SpanField {
    /// Coefficients' own field: `Q` for real algebras, `Q(i)` for complexified ones.
    Native,
    /// Always `Q`, so complex algebras report real dimensions.
    Real,
}

/// Dimension of the span of `items`.
pub fn span_rank<'a, A, I>(items: I, field: SpanField) -> usize
where
    A: BasisAlgebra + 'a,
    I: IntoIterator<Item = &'a Multivector<A>>,
{
    match field {
        SpanField::Native => {
            let mut basis = SpanBasis::new();
            for x in items {
                basis.insert(coefficient_vector(x));
            }
            basis.rank()
        }
        SpanField::Real => {
            let mut basis = SpanBasis::new();
            for x in items {
                basis.insert(real_coefficient_vector(x));
            }
            basis.rank()
        }
    }
}

/// A basis (as multivectors) for the span of `items` over the native field.
pub fn span_basis<'a, A, I>(algebra: &A, items: I) -> Vec<Multivector<A>>
where
    A: BasisAlgebra + 'a,
    I: IntoIterator<Item = &'a Multivector<A>>,
{
    let mut basis = SpanBasis::new();
    for x in items {
        basis.insert(coefficient_vector(x));
    }
    basis
        .rows()
        .iter()
        .map(|row| Multivector::from_terms_unchecked(algebra, row.iter().map(|(b, c)| (*b, c.clone()))))
        .collect()
}
