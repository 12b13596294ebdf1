//! Symbolic state labels `|K,b,l,s⟩`: fusion, doubling, annihilation.
//!
//! A state records its ring `K`, baryon number `b`, lepton number `l`, and the
//! numbers `k`, `r` of undotted and dotted two-component factors in its tensor
//! structure. Spin is derived from `(k, r)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classification::DivisionRing;
use crate::factorization::{ring_transition, TransitionRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("cannot parse state {0:?}: expected |K,b,l,s⟩ or a known name")]
    Parse(String),
    #[error("unknown ring {0:?}: expected one of R, C, C~, H, H~, R+R, H+H")]
    Ring(String),
    #[error("doubling needs a real or quaternionic ring, got {0}")]
    AlreadyComplex(String),
    #[error("{0} and {1} are not a state and its conjugate")]
    NotConjugate(String, String),
}

/// Ring label of a state: `R`, `C`, `H`, their conjugates, or a doubled ring.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateRingTag {
    base: DivisionRing,
    conjugated: bool,
    doubled: bool,
}

impl StateRingTag {
    pub const R: StateRingTag = StateRingTag { base: DivisionRing::Real, conjugated: false, doubled: false };
    pub const C: StateRingTag = StateRingTag { base: DivisionRing::Complex, conjugated: false, doubled: false };
    pub const C_BAR: StateRingTag = StateRingTag { base: DivisionRing::Complex, conjugated: true, doubled: false };
    pub const H: StateRingTag = StateRingTag { base: DivisionRing::Quaternion, conjugated: false, doubled: false };
    pub const H_BAR: StateRingTag = StateRingTag { base: DivisionRing::Quaternion, conjugated: true, doubled: false };

    /// `R` is self-conjugate, so a conjugated `R` is stored unconjugated.
    pub fn new(base: DivisionRing, conjugated: bool, doubled: bool) -> Self {
        let conjugated = conjugated && base != DivisionRing::Real;
        StateRingTag { base, conjugated, doubled }
    }

    pub fn base(self) -> DivisionRing {
        self.base
    }

    pub fn conjugated(self) -> bool {
        self.conjugated
    }

    pub fn doubled(self) -> bool {
        self.doubled
    }

    pub fn conjugate(self) -> Self {
        Self::new(self.base, !self.conjugated, self.doubled)
    }

    pub fn transition_ring(self) -> TransitionRing {
        TransitionRing::from_base(self.base, self.conjugated)
    }

    /// ASCII spelling used in the text syntax.
    pub fn symbol(self) -> String {
        let mut s = self.base.symbol().to_string();
        if self.conjugated {
            s.push('~');
        }
        if self.doubled {
            s = format!("{s}+{s}");
        }
        s
    }

    /// Base symbol with doubling, without conjugation: the JSON `ring` field.
    fn json_ring(self) -> String {
        let b = self.base.symbol();
        if self.doubled {
            format!("{b}+{b}")
        } else {
            b.to_string()
        }
    }
}

impl fmt::Display for StateRingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.base.symbol();
        let one = if self.conjugated { format!("{b}\u{304}") } else { b.to_string() };
        if self.doubled {
            write!(f, "{one}⊕{one}")
        } else {
            f.write_str(&one)
        }
    }
}

impl FromStr for StateRingTag {
    type Err = StateError;

    fn from_str(s: &str) -> Result<Self, StateError> {
        let t = s.trim();
        let (one, doubled) = match t.split_once(['+', '⊕']) {
            Some((a, b)) if a == b => (a, true),
            Some(_) => return Err(StateError::Ring(s.to_string())),
            None => (t, false),
        };
        let (base, conj) = match one {
            "R" => (DivisionRing::Real, false),
            "C" => (DivisionRing::Complex, false),
            "H" => (DivisionRing::Quaternion, false),
            "C~" | "C\u{304}" | "Cbar" => (DivisionRing::Complex, true),
            "H~" | "H\u{304}" | "Hbar" => (DivisionRing::Quaternion, true),
            _ => return Err(StateError::Ring(s.to_string())),
        };
        Ok(StateRingTag::new(base, conj, doubled))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Fermion,
    Boson,
}

/// Superselection sector `(b, l)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sector {
    pub b: i64,
    pub lepton: i64,
}

impl std::ops::Add for Sector {
    type Output = Sector;
    fn add(self, o: Sector) -> Sector {
        Sector { b: self.b + o.b, lepton: self.lepton + o.lepton }
    }
}

/// `|K, b, l, s⟩` with tensor structure `(k, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "StateJson", try_from = "StateJson")]
pub struct StateVector {
    pub ring: StateRingTag,
    pub b: i64,
    pub lepton: i64,
    pub k: u32,
    pub r: u32,
}

fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl StateVector {
    pub fn new(ring: StateRingTag, b: i64, lepton: i64, k: u32, r: u32) -> Self {
        StateVector { ring, b, lepton, k, r }
    }

    /// Unit label: ring `R`, no charges, no factors.
    pub fn vacuum() -> Self {
        StateVector::new(StateRingTag::R, 0, 0, 0, 0)
    }

    /// Number of two-component factors `m = k + r`.
    pub fn factor_count(&self) -> u32 {
        self.k + self.r
    }

    /// `s = |l - l̇|` with `l = k/2`, `l̇ = r/2`.
    pub fn spin(&self) -> BigRational {
        half(self.k as i64 - self.r as i64).abs()
    }

    /// `s = l - l̇`.
    pub fn signed_spin(&self) -> BigRational {
        half(self.k as i64 - self.r as i64)
    }

    /// `(k + r)/2`, which adds under fusion.
    pub fn fusion_spin(&self) -> BigRational {
        half(self.factor_count() as i64)
    }

    pub fn statistics(&self) -> Statistics {
        if self.factor_count() % 2 == 1 {
            Statistics::Fermion
        } else {
            Statistics::Boson
        }
    }

    pub fn sector(&self) -> Sector {
        Sector { b: self.b, lepton: self.lepton }
    }

    /// Conjugate ring, opposite charges, dotted and undotted factors exchanged.
    pub fn conjugate(&self) -> Self {
        StateVector::new(self.ring.conjugate(), -self.b, -self.lepton, self.r, self.k)
    }

    /// `m_e (l + 1/2)(l̇ + 1/2)`.
    pub fn mass(&self, m_e: &BigRational) -> BigRational {
        m_e * BigRational::new(BigInt::from((self.k + 1) * (self.r + 1)), BigInt::from(4))
    }

    /// Text form `|K,b,l,s⟩` with `s = (k+r)/2`.
    pub fn text(&self) -> String {
        format!("|{},{},{},{}⟩", self.ring.symbol(), self.b, self.lepton, format_rational(&self.fusion_spin()))
    }

    /// Parse `|K,b,l,s⟩` (or with `>`). The spin gives `m = 2s` factors, put
    /// on the dotted side for conjugated rings and on the undotted side otherwise.
    pub fn parse_text(s: &str) -> Result<Self, StateError> {
        let err = || StateError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('|')
            .and_then(|x| x.strip_suffix('⟩').or_else(|| x.strip_suffix('>')))
            .ok_or_else(err)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(err());
        }
        let ring: StateRingTag = parts[0].parse()?;
        let b: i64 = parts[1].parse().map_err(|_| err())?;
        let lepton: i64 = parts[2].parse().map_err(|_| err())?;
        let spin: BigRational = match parts[3].split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                BigRational::new(n.into(), d.into())
            }
            None => BigRational::from_integer(parts[3].parse::<i64>().map_err(|_| err())?.into()),
        };
        let m = &spin * BigRational::from_integer(2.into());
        if !m.is_integer() || m.is_negative() {
            return Err(err());
        }
        let m: u32 = m.to_integer().try_into().map_err(|_| err())?;
        let (k, r) = if ring.conjugated() { (0, m) } else { (m, 0) };
        Ok(StateVector::new(ring, b, lepton, k, r))
    }

    /// Named state, JSON object, or text form.
    pub fn parse_any(s: &str) -> Result<Self, StateError> {
        if let Some(v) = named_state(s) {
            return Ok(v);
        }
        let t = s.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|_| StateError::Parse(s.to_string()));
        }
        Self::parse_text(t)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    ring: String,
    conjugated: bool,
    b: i64,
    lepton: i64,
    k: u32,
    r: u32,
}

impl From<StateVector> for StateJson {
    fn from(s: StateVector) -> Self {
        StateJson { ring: s.ring.json_ring(), conjugated: s.ring.conjugated(), b: s.b, lepton: s.lepton, k: s.k, r: s.r }
    }
}

impl TryFrom<StateJson> for StateVector {
    type Error = StateError;
    fn try_from(j: StateJson) -> Result<Self, StateError> {
        let ring: StateRingTag = j.ring.parse()?;
        if ring.conjugated() {
            return Err(StateError::Ring(j.ring));
        }
        let ring = StateRingTag::new(ring.base(), j.conjugated, ring.doubled());
        Ok(StateVector::new(ring, j.b, j.lepton, j.k, j.r))
    }
}

/// `|K1,b1,l1⟩ ⊗ |K2,b2,l2⟩ = |K1⊗K2, b1+b2, l1+l2⟩` with `(k, r)` added.
///
/// A doubled ring stays doubled in the product.
pub fn fuse(a: &StateVector, b: &StateVector) -> StateVector {
    let t = ring_transition(a.ring.transition_ring(), b.ring.transition_ring());
    let ring = StateRingTag::new(t.base(), t.is_conjugated(), a.ring.doubled() || b.ring.doubled());
    StateVector::new(ring, a.b + b.b, a.lepton + b.lepton, a.k + b.k, a.r + b.r)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DoubleSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl FromStr for DoubleSign {
    type Err = StateError;
    fn from_str(s: &str) -> Result<Self, StateError> {
        match s.trim() {
            "+" | "⊕" | "plus" => Ok(DoubleSign::Plus),
            "-" | "⊖" | "minus" => Ok(DoubleSign::Minus),
            other => Err(StateError::Parse(other.to_string())),
        }
    }
}

/// Complexify the ring: `H` or `R` becomes `C`, or `C~` for `⊖`. The `⊖`
/// branch is the antiparticle: `b` and `l` are negated and the undotted and
/// dotted factor counts trade places, as under [`StateVector::conjugate`].
pub fn double(s: &StateVector, sign: DoubleSign) -> Result<StateVector, StateError> {
    if s.ring.base() == DivisionRing::Complex || s.ring.doubled() {
        return Err(StateError::AlreadyComplex(s.ring.symbol()));
    }
    Ok(match sign {
        DoubleSign::Plus => StateVector::new(StateRingTag::C, s.b, s.lepton, s.k, s.r),
        DoubleSign::Minus => StateVector::new(StateRingTag::C_BAR, -s.b, -s.lepton, s.r, s.k),
    })
}

/// Formal integer combination of states.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StateSum {
    terms: BTreeMap<StateVector, i64>,
}

impl StateSum {
    pub fn new() -> Self {
        StateSum::default()
    }

    pub fn add(&mut self, s: StateVector, n: i64) {
        let e = self.terms.entry(s.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StateVector, i64)> {
        self.terms.iter().map(|(s, n)| (s, *n))
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for StateSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, n)| if *n == 1 { s.text() } else { format!("{n}{}", s.text()) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `s ⊗ s̄` expanded over the doubled rings.
///
/// For `C`-type rings each side is `K ⊕ iK` or `K ⊖ iK`; the four cross terms
/// carry coefficients `1, -i, i, 1`, the imaginary ones cancel and the fused
/// state appears twice. Undoubled rings give the plain fusion once.
pub fn annihilate(s: &StateVector, sbar: &StateVector) -> Result<StateSum, StateError> {
    let conj_ok = sbar.ring == s.ring.conjugate() && sbar.b == -s.b && sbar.lepton == -s.lepton;
    if !conj_ok {
        return Err(StateError::NotConjugate(s.text(), sbar.text()));
    }
    let fused = fuse(s, sbar);
    let multiplicity = if s.ring.base() == DivisionRing::Complex {
        annihilation_coefficients().iter().map(|(re, _)| re).sum()
    } else {
        1
    };
    let mut out = StateSum::new();
    out.add(fused, multiplicity);
    Ok(out)
}

/// `(1 + i)(1 - i)` term by term, as `(re, im)` pairs.
pub fn annihilation_coefficients() -> [(i64, i64); 4] {
    [(1, 0), (0, -1), (0, 1), (1, 0)]
}

/// Same sector and same statistics.
pub fn superposable(a: &StateVector, b: &StateVector) -> bool {
    a.sector() == b.sector() && a.statistics() == b.statistics()
}

/// Active `q_a`, `q̄_a` and inert `q_s = q̄_s`.
pub fn fundamental_states() -> Vec<(&'static str, StateVector)> {
    vec![
        ("qa", StateVector::new(StateRingTag::H, 0, 1, 1, 0)),
        ("qabar", StateVector::new(StateRingTag::H_BAR, 0, -1, 0, 1)),
        ("qs", StateVector::new(StateRingTag::R, 0, 0, 1, 0)),
        ("qsbar", StateVector::new(StateRingTag::R, 0, 0, 1, 0)),
    ]
}

/// Names accepted on the command line.
pub const STATE_NAMES: [&str; 10] = ["nu", "nubar", "qa", "qabar", "qs", "qsbar", "e-", "e+", "gamma", "vacuum"];

pub fn named_state(name: &str) -> Option<StateVector> {
    let nu = StateVector::new(StateRingTag::H, 0, 1, 1, 0);
    let nubar = StateVector::new(StateRingTag::H_BAR, 0, -1, 0, 1);
    let qs = StateVector::new(StateRingTag::R, 0, 0, 1, 0);
    Some(match name.trim() {
        "nu" | "qa" => nu,
        "nubar" | "qabar" => nubar,
        "qs" | "qsbar" => qs,
        "e-" => double(&nu, DoubleSign::Plus).expect("H doubles"),
        "e+" => double(&nu, DoubleSign::Minus).expect("H doubles"),
        "gamma" => fuse(&nu, &nubar),
        "vacuum" => StateVector::vacuum(),
        _ => return None,
    })
}

/// Default electron mass unit.
pub fn unit_mass() -> BigRational {
    BigRational::one()
}

/// `true` when the printed spin `(k+r)/2` differs from `|l - l̇|`.
pub fn spin_readings_differ(s: &StateVector) -> bool {
    s.fusion_spin() != s.spin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn st(s: &str) -> StateVector {
        StateVector::parse_any(s).unwrap()
    }

    #[test]
    fn photon_from_neutrinos() {
        let g = fuse(&st("|H,0,1,1/2⟩"), &st("|H~,0,-1,1/2⟩"));
        assert_eq!(g.text(), "|R,0,0,1⟩");
        assert_eq!(g.spin(), BigRational::zero());
        assert!(spin_readings_differ(&g));
    }

    #[test]
    fn doubling() {
        let nu = st("nu");
        assert_eq!(double(&nu, DoubleSign::Plus).unwrap().text(), "|C,0,1,1/2⟩");
        assert_eq!(double(&nu, DoubleSign::Minus).unwrap().text(), "|C~,0,-1,1/2⟩");
        assert_eq!(double(&st("qs"), DoubleSign::Plus).unwrap().text(), "|C,0,0,1/2⟩");
        assert!(double(&st("e-"), DoubleSign::Plus).is_err());
    }

    #[test]
    fn annihilation() {
        assert_eq!(annihilate(&st("e-"), &st("e+")).unwrap().to_string(), "2|R,0,0,1⟩");
        assert_eq!(annihilate(&st("nu"), &st("nubar")).unwrap().to_string(), "|R,0,0,1⟩");
        assert!(annihilate(&st("e-"), &st("nubar")).is_err());
    }

    #[test]
    fn statistics_and_mass() {
        let one = unit_mass();
        let s = |k, r| StateVector::new(StateRingTag::R, 0, 0, k, r);
        assert_eq!(s(1, 0).statistics(), Statistics::Fermion);
        assert_eq!(s(1, 1).statistics(), Statistics::Boson);
        assert_eq!(s(0, 0).mass(&one), BigRational::new(1.into(), 4.into()));
        assert_eq!(s(1, 0).mass(&one), BigRational::new(1.into(), 2.into()));
        assert_eq!(s(1, 1).mass(&one), BigRational::one());
    }

    #[test]
    fn sectors() {
        assert!(superposable(&st("e-"), &st("nu")));
        assert!(!superposable(&st("gamma"), &st("e-")));
        assert!(superposable(&st("gamma"), &st("gamma")));
    }

    #[test]
    fn fundamental_state_properties() {
        let f = fundamental_states();
        assert_eq!(f[2].1, f[3].1);
        assert_eq!((f[0].1.lepton, f[1].1.lepton), (1, -1));
        assert!(f.iter().all(|(_, s)| s.spin() == half(1)));
    }

    #[test]
    fn doubled_states_roundtrip_and_annihilate_to_photons() {
        for sign in [DoubleSign::Plus, DoubleSign::Minus] {
            let d = double(&st("nu"), sign).unwrap();
            assert_eq!(StateVector::parse_text(&d.text()).unwrap(), d);
        }
        let sum = annihilate(&st("e-"), &st("e+")).unwrap();
        assert_eq!(sum.terms().collect::<Vec<_>>(), vec![(&st("gamma"), 2)]);
    }

    #[test]
    fn json_roundtrip() {
        let e = st("e+");
        let j = serde_json::to_string(&e).unwrap();
        assert_eq!(j, r#"{"ring":"C","conjugated":true,"b":0,"lepton":-1,"k":0,"r":1}"#);
        assert_eq!(StateVector::parse_any(&j).unwrap(), e);
    }

    #[test]
    fn ring_parsing() {
        assert_eq!("R~".parse::<StateRingTag>().ok(), None);
        assert_eq!("H+H".parse::<StateRingTag>().unwrap().to_string(), "H⊕H");
        assert_eq!(StateRingTag::new(DivisionRing::Real, true, false), StateRingTag::R);
        assert!(StateVector::parse_text("|H,0,1⟩").is_err());
        assert!(StateVector::parse_text("|H,0,1,1/3⟩").is_err());
    }
}
