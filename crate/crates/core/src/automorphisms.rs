//! The eight maps generated by grade involution, reversion and coefficient
//! conjugation, labelled by discrete symmetries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::BasisAlgebra;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Blade;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiscreteSymmetry {
    Id,
    P,
    T,
    PT,
    C,
    CP,
    CT,
    CPT,
}

impl DiscreteSymmetry {
    pub const ALL: [DiscreteSymmetry; 8] = [
        DiscreteSymmetry::Id,
        DiscreteSymmetry::P,
        DiscreteSymmetry::T,
        DiscreteSymmetry::PT,
        DiscreteSymmetry::C,
        DiscreteSymmetry::CP,
        DiscreteSymmetry::CT,
        DiscreteSymmetry::CPT,
    ];

    /// `(bar, reversion, grade involution)` making up the map.
    pub fn components(self) -> (bool, bool, bool) {
        use DiscreteSymmetry::*;
        match self {
            Id => (false, false, false),
            P => (false, false, true),
            T => (false, true, false),
            PT => (false, true, true),
            C => (true, false, false),
            CP => (true, false, true),
            CT => (true, true, false),
            CPT => (true, true, true),
        }
    }

    pub fn from_components(bar: bool, tilde: bool, star: bool) -> Self {
        *Self::ALL.iter().find(|s| s.components() == (bar, tilde, star)).expect("all eight combinations exist")
    }

    pub fn label(self) -> &'static str {
        use DiscreteSymmetry::*;
        match self {
            Id => "Id",
            P => "P",
            T => "T",
            PT => "PT",
            C => "C",
            CP => "CP",
            CT => "CT",
            CPT => "CPT",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|x| x.label().eq_ignore_ascii_case(s))
    }

    /// The map on a general element `A`.
    pub fn map_symbol(self) -> &'static str {
        use DiscreteSymmetry::*;
        match self {
            Id => "A",
            P => "A*",
            T => "~A",
            PT => "~A*",
            C => "bar A",
            CP => "bar A*",
            CT => "bar ~A",
            CPT => "bar ~A*",
        }
    }

    /// Reverses the order of products.
    pub fn is_anti(self) -> bool {
        self.components().1
    }

    /// Conjugates coefficients.
    pub fn is_pseudo(self) -> bool {
        self.components().0
    }

    /// Kind of map: automorphism, anti-automorphism, pseudo-automorphism or pseudo-anti-automorphism.
    pub fn kind(self) -> &'static str {
        match (self.is_pseudo(), self.is_anti()) {
            (false, false) => "automorphism",
            (false, true) => "anti-automorphism",
            (true, false) => "pseudo-automorphism",
            (true, true) => "pseudo-anti-automorphism",
        }
    }

    /// Conjugation of coefficients is the identity on real algebras.
    pub fn apply<A: BasisAlgebra>(self, a: &Multivector<A>) -> Multivector<A> {
        let (bar, tilde, star) = self.components();
        let mut x = a.clone();
        if star {
            x = x.grade_involution();
        }
        if tilde {
            x = x.reversion();
        }
        if bar {
            x = x.pseudo_automorphism();
        }
        x
    }
}

impl fmt::Display for DiscreteSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Real basis `{e_B}` plus `{i e_B}` for complexified algebras.
fn probes<A: BasisAlgebra>(algebra: &A) -> Vec<Multivector<A>> {
    let mut out: Vec<Multivector<A>> =
        (0..algebra.dimension() as u32).map(|b| Multivector::blade(algebra, Blade(b))).collect();
    if algebra.is_complex() {
        let more: Vec<_> = out.iter().map(|x| x.scale(&Scalar::i())).collect();
        out.extend(more);
    }
    out
}

/// Composition table computed by evaluating maps on a spanning set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionTable {
    pub algebra: String,
    /// `entries[i][j]` is the label of `ALL[i] ∘ ALL[j]`.
    pub entries: Vec<Vec<DiscreteSymmetry>>,
}

impl CompositionTable {
    pub fn get(&self, a: DiscreteSymmetry, b: DiscreteSymmetry) -> DiscreteSymmetry {
        self.entries[a as usize][b as usize]
    }

    pub fn is_abelian(&self) -> bool {
        DiscreteSymmetry::ALL.iter().all(|&a| DiscreteSymmetry::ALL.iter().all(|&b| self.get(a, b) == self.get(b, a)))
    }

    pub fn has_exponent_two(&self) -> bool {
        DiscreteSymmetry::ALL.iter().all(|&a| self.get(a, a) == DiscreteSymmetry::Id)
    }

    pub fn is_associative(&self) -> bool {
        let all = DiscreteSymmetry::ALL;
        all.iter().all(|&a| {
            all.iter().all(|&b| all.iter().all(|&c| self.get(self.get(a, b), c) == self.get(a, self.get(b, c))))
        })
    }

    /// Number of distinct labels reachable by composition.
    pub fn order(&self) -> usize {
        let mut seen: Vec<DiscreteSymmetry> = self.entries.iter().flatten().copied().collect();
        seen.sort();
        seen.dedup();
        seen.len()
    }

    /// Elementary abelian 2-group of order 8.
    pub fn is_z2_cubed(&self) -> bool {
        self.order() == 8
            && self.is_abelian()
            && self.has_exponent_two()
            && self.is_associative()
            && DiscreteSymmetry::ALL.iter().all(|&a| self.get(DiscreteSymmetry::Id, a) == a)
    }
}

/// Why a table could not be computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    /// Two labels act identically on the algebra.
    Indistinct(DiscreteSymmetry, DiscreteSymmetry),
    /// A composite matches none of the eight maps.
    NotClosed(DiscreteSymmetry, DiscreteSymmetry),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Indistinct(a, b) => write!(f, "{a} and {b} act identically"),
            TableError::NotClosed(a, b) => write!(f, "{a}∘{b} is not among the eight maps"),
        }
    }
}

impl std::error::Error for TableError {}

/// An element on which `a` and `b` differ, if any.
pub fn distinguishing_element<A: BasisAlgebra>(
    algebra: &A,
    a: DiscreteSymmetry,
    b: DiscreteSymmetry,
) -> Option<Multivector<A>> {
    probes(algebra).into_iter().find(|x| a.apply(x) != b.apply(x))
}

/// Compose every pair of maps and identify the composite by its action on a
/// spanning set over `R`. Requires the eight maps to be pairwise distinct.
pub fn composition_table<A: BasisAlgebra>(algebra: &A) -> Result<CompositionTable, TableError> {
    let xs = probes(algebra);
    let images: Vec<Vec<Multivector<A>>> =
        DiscreteSymmetry::ALL.iter().map(|s| xs.iter().map(|x| s.apply(x)).collect()).collect();
    for i in 0..8 {
        for j in i + 1..8 {
            if images[i] == images[j] {
                return Err(TableError::Indistinct(DiscreteSymmetry::ALL[i], DiscreteSymmetry::ALL[j]));
            }
        }
    }
    let mut entries = Vec::new();
    for &a in &DiscreteSymmetry::ALL {
        let mut row = Vec::new();
        for &b in &DiscreteSymmetry::ALL {
            let composite: Vec<Multivector<A>> = xs.iter().map(|x| a.apply(&b.apply(x))).collect();
            let k = images.iter().position(|im| *im == composite).ok_or(TableError::NotClosed(a, b))?;
            row.push(DiscreteSymmetry::ALL[k]);
        }
        entries.push(row);
    }
    Ok(CompositionTable { algebra: algebra.name(), entries })
}
