//! Serializable results and text tables for the command line and browser frontends.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::Complexified;
use crate::automorphisms::{composition_table, DiscreteSymmetry};
use crate::classification::{classify, division_ring_oracle, identify_division_ring, omega_square, RingTag};
use crate::cone::{enumerate_cone, spin_lines};
use crate::error::CliffordError;
use crate::factorization::{
    complex_identification, factor_ring, fold_rings, greedy_chain, printed_chains, split_semisimple,
    verify_tensor_iso, GeneratorMove, TransitionRing,
};
use crate::ideals::{is_primitive, left_ideal_basis, primitive_factor_count, primitive_idempotent, reference_idempotent, Idempotent};
use crate::signature::Signature;
use crate::states::{format_rational, spin_readings_differ, StateSum, StateVector, Statistics};

/// Parse `p,q`, `(p,q)`, `Cl(p,q)` or `p q`.
pub fn parse_signature(s: &str) -> Result<Signature, CliffordError> {
    let bad = || CliffordError::InvalidFactors(format!("cannot read signature {s:?}"));
    let t = s.trim();
    let t = t.strip_prefix("Cl").or_else(|| t.strip_prefix("cl")).unwrap_or(t);
    let t = t.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).collect();
    if parts.len() != 2 {
        return Err(bad());
    }
    let p = parts[0].parse().map_err(|_| bad())?;
    let q = parts[1].parse().map_err(|_| bad())?;
    Signature::new(p, q)
}

fn pq(s: Signature) -> [usize; 2] {
    [s.p(), s.q()]
}

fn rat(x: &BigRational) -> String {
    format_rational(x)
}

fn rings_text(rings: &[TransitionRing]) -> Vec<String> {
    rings.iter().map(|r| r.symbol().to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub ring: RingTag,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub signature: [usize; 2],
    pub mod8_class: u8,
    pub ring: RingTag,
    pub matrix_form: String,
    pub matrix_rank: usize,
    pub simple: bool,
    pub omega_square: i8,
    pub radon_hurwitz_k: usize,
    pub alias: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

pub fn classify_report(sig: Signature, oracle: bool) -> Result<ClassifyReport, CliffordError> {
    let t = classify(sig);
    let oracle = if oracle {
        let ring = division_ring_oracle(sig)?;
        Some(OracleCheck { ring, agrees: ring == t.ring })
    } else {
        None
    };
    Ok(ClassifyReport {
        signature: pq(sig),
        mod8_class: t.mod8_class,
        ring: t.ring,
        matrix_form: t.matrix_form(),
        matrix_rank: t.matrix_rank,
        simple: t.simple,
        omega_square: omega_square(sig),
        radon_hurwitz_k: primitive_factor_count(sig),
        alias: t.alias().map(str::to_string),
        oracle,
    })
}

impl ClassifyReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let [p, q] = self.signature;
        let _ = writeln!(out, "algebra       Cl({p},{q})");
        if let Some(a) = &self.alias {
            let _ = writeln!(out, "name          {a}");
        }
        let _ = writeln!(out, "p-q mod 8     {}", self.mod8_class);
        let _ = writeln!(out, "ring          {}", self.ring);
        let _ = writeln!(out, "matrix form   {}", self.matrix_form);
        let _ = writeln!(out, "simple        {}", self.simple);
        let _ = writeln!(out, "w^2           {}", self.omega_square);
        let _ = writeln!(out, "k             {}", self.radon_hurwitz_k);
        if let Some(o) = &self.oracle {
            let verdict = if o.agrees { "agrees" } else { "DISAGREES" };
            let _ = writeln!(out, "oracle        {} ({verdict})", o.ring);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentEntry {
    pub factored: String,
    pub element: String,
    pub k: usize,
    pub primitive: bool,
    pub ideal_dimension: usize,
    pub ring: String,
}

fn idempotent_entry(f: &Idempotent) -> Result<IdempotentEntry, CliffordError> {
    let ideal = left_ideal_basis(f);
    let ring = identify_division_ring(f).map(|r| r.ring.symbol().to_string()).unwrap_or_else(|_| "-".into());
    Ok(IdempotentEntry {
        factored: f.factored(),
        element: f.element().to_string(),
        k: f.k(),
        primitive: is_primitive(f),
        ideal_dimension: ideal.dimension(),
        ring,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub signature: [usize; 2],
    /// The printed idempotent when one is known, otherwise the searched one.
    pub idempotent: IdempotentEntry,
    pub source: &'static str,
    pub searched: IdempotentEntry,
}

pub fn idempotent_report(sig: Signature) -> Result<IdempotentReport, CliffordError> {
    let searched = idempotent_entry(&primitive_idempotent(&sig)?)?;
    let (idempotent, source) = match reference_idempotent(sig) {
        Some(f) => (idempotent_entry(&f)?, "reference"),
        None => (searched.clone(), "search"),
    };
    Ok(IdempotentReport { signature: pq(sig), idempotent, source, searched })
}

impl IdempotentReport {
    pub fn table(&self) -> String {
        let [p, q] = self.signature;
        let mut out = String::new();
        let e = &self.idempotent;
        let _ = writeln!(out, "algebra          Cl({p},{q})");
        let _ = writeln!(out, "idempotent       {}", e.factored);
        let _ = writeln!(out, "expanded         {}", e.element);
        let _ = writeln!(out, "k                {}", e.k);
        let _ = writeln!(out, "primitive        {}", e.primitive);
        let _ = writeln!(out, "ideal dimension  {}", e.ideal_dimension);
        let _ = writeln!(out, "f A f            {}", e.ring);
        if self.source == "reference" && self.searched.factored != e.factored {
            let _ = writeln!(out, "searched         {}", self.searched.factored);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub factors: Vec<[usize; 2]>,
    pub display: String,
    pub printed: bool,
    pub verified: bool,
    pub failure: Option<String>,
    pub moves: Vec<GeneratorMove>,
    pub rings: Vec<String>,
    pub ring_trace: Vec<String>,
    pub final_ring: String,
    /// Ring the printed arrow points to, for printed chains.
    pub arrow: Option<String>,
    pub arrow_matches: Option<bool>,
    pub transition: String,
}

fn chain_report(target: Signature, factors: &[Signature], arrow: Option<String>) -> ChainReport {
    let rings: Vec<TransitionRing> = factors.iter().map(|f| factor_ring(*f)).collect();
    let trace = fold_rings(&rings);
    let final_ring = trace.last().copied().unwrap_or(TransitionRing::R);
    let (verified, failure, moves) = match verify_tensor_iso(target, factors) {
        Ok(w) => (true, None, w.moves),
        Err(e) => (false, Some(e.to_string()), Vec::new()),
    };
    let arrow_matches = arrow.as_ref().map(|a| a == final_ring.base().symbol());
    let lhs = if rings.is_empty() { "R".to_string() } else { rings_text(&rings).join("⊗") };
    ChainReport {
        factors: factors.iter().map(|f| pq(*f)).collect(),
        display: factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("⊗"),
        printed: arrow.is_some(),
        verified,
        failure,
        moves,
        rings: rings_text(&rings),
        ring_trace: rings_text(&trace),
        final_ring: final_ring.symbol().to_string(),
        transition: format!("{lhs} → {}", final_ring.symbol()),
        arrow,
        arrow_matches,
    }
}

/// Chains for an even signature: every printed alternative, or the greedy chain.
pub fn chain_reports(sig: Signature) -> Vec<ChainReport> {
    let printed = printed_chains(sig);
    if printed.is_empty() {
        vec![chain_report(sig, &greedy_chain(sig), None)]
    } else {
        printed.iter().map(|c| chain_report(sig, &c.signatures(), Some(c.arrow.symbol().to_string()))).collect()
    }
}

/// Decomposition of an odd-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddReport {
    /// `"direct_sum"` for `w^2 = +1`, `"complex"` for `w^2 = -1`.
    pub kind: &'static str,
    pub factor: [usize; 2],
    pub display: String,
    pub lambda_plus: String,
    pub lambda_minus: String,
    pub verified: bool,
    pub failure: Option<String>,
}

pub fn odd_report(sig: Signature) -> OddReport {
    let split = split_semisimple(sig);
    let (lp, lm, factor) = match &split {
        Ok(s) => (s.lambda_plus.to_string(), s.lambda_minus.to_string(), s.factor),
        Err(_) => ("-".into(), "-".into(), sig),
    };
    if omega_square(sig) > 0 {
        let (verified, failure) = match &split {
            Ok(_) => (true, None),
            Err(e) => (false, Some(e.to_string())),
        };
        OddReport {
            kind: "direct_sum",
            factor: pq(factor),
            display: format!("{sig} ≅ {factor}⊕{factor}"),
            lambda_plus: lp,
            lambda_minus: lm,
            verified,
            failure,
        }
    } else {
        let ci = complex_identification(sig);
        let (verified, failure) = match (&split, &ci) {
            (Ok(_), Ok(_)) => (true, None),
            (Err(e), _) | (_, Err(e)) => (false, Some(e.to_string())),
        };
        let real_form = ci.as_ref().map(|c| c.real_form).unwrap_or(factor);
        OddReport {
            kind: "complex",
            factor: pq(real_form),
            display: format!("{sig} ≅ C⊗{real_form}"),
            lambda_plus: lp,
            lambda_minus: lm,
            verified,
            failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizeReport {
    pub signature: [usize; 2],
    pub ring: RingTag,
    pub matrix_form: String,
    pub chains: Vec<ChainReport>,
    pub odd: Option<OddReport>,
    pub verified: bool,
}

pub fn factorize_report(sig: Signature) -> FactorizeReport {
    let t = classify(sig);
    let (chains, odd) = if sig.n() % 2 == 0 { (chain_reports(sig), None) } else { (Vec::new(), Some(odd_report(sig))) };
    let verified = chains.iter().all(|c| c.verified && c.arrow_matches != Some(false))
        && odd.as_ref().map_or(true, |o| o.verified);
    FactorizeReport { signature: pq(sig), ring: t.ring, matrix_form: t.matrix_form(), chains, odd, verified }
}

impl FactorizeReport {
    pub fn table(&self) -> String {
        let [p, q] = self.signature;
        let mut out = String::new();
        let _ = writeln!(out, "Cl({p},{q}) = {}", self.matrix_form);
        for c in &self.chains {
            let status = if c.verified { "verified" } else { "FAILED" };
            let _ = writeln!(out, "  {:<32} {:<16} {status}", c.display, c.transition);
            if let Some(f) = &c.failure {
                let _ = writeln!(out, "    {f}");
            }
        }
        if let Some(o) = &self.odd {
            let status = if o.verified { "verified" } else { "FAILED" };
            let _ = writeln!(out, "  {:<32} {status}", o.display);
            let _ = writeln!(out, "    λ+ = {}", o.lambda_plus);
            let _ = writeln!(out, "    λ- = {}", o.lambda_minus);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub target: [usize; 2],
    pub factors: Vec<[usize; 2]>,
    pub verified: bool,
    pub failure: Option<String>,
    pub moves: Vec<GeneratorMove>,
    /// `e_i -> image` for each target generator.
    pub witness: Vec<String>,
}

pub fn iso_report(target: Signature, factors: &[Signature]) -> IsoReport {
    let (verified, failure, moves, witness) = match verify_tensor_iso(target, factors) {
        Ok(w) => {
            let images = w.images.iter().enumerate().map(|(i, x)| format!("e{} -> {}", i + 1, x)).collect();
            (true, None, w.moves, images)
        }
        Err(e) => (false, Some(e.to_string()), Vec::new(), Vec::new()),
    };
    IsoReport { target: pq(target), factors: factors.iter().map(|f| pq(*f)).collect(), verified, failure, moves, witness }
}

impl IsoReport {
    pub fn table(&self) -> String {
        let [p, q] = self.target;
        let fs: Vec<String> = self.factors.iter().map(|[a, b]| format!("Cl({a},{b})")).collect();
        let mut out = String::new();
        let verdict = if self.verified { "isomorphic" } else { "not verified" };
        let _ = writeln!(out, "Cl({p},{q}) vs {}: {verdict}", fs.join("⊗"));
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "  {f}");
        }
        for w in &self.witness {
            let _ = writeln!(out, "  {w}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryEntry {
    pub label: &'static str,
    pub map: &'static str,
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CptReport {
    pub algebra: String,
    pub maps: Vec<SymmetryEntry>,
    pub labels: Vec<&'static str>,
    /// `table[i][j]` is `labels[i] ∘ labels[j]`.
    pub table: Vec<Vec<&'static str>>,
    pub order: usize,
    pub abelian: bool,
    pub exponent_two: bool,
    pub associative: bool,
}

/// Composition table of the eight maps on `C (x) Cl(p,q)`.
pub fn cpt_report(sig: Signature) -> Result<CptReport, CliffordError> {
    let alg = Complexified(sig);
    let t = composition_table(&alg).map_err(|e| CliffordError::InvalidFactors(e.to_string()))?;
    Ok(CptReport {
        algebra: alg_name(sig),
        maps: DiscreteSymmetry::ALL
            .iter()
            .map(|s| SymmetryEntry { label: s.label(), map: s.map_symbol(), kind: s.kind() })
            .collect(),
        labels: DiscreteSymmetry::ALL.iter().map(|s| s.label()).collect(),
        table: t.entries.iter().map(|row| row.iter().map(|s| s.label()).collect()).collect(),
        order: t.order(),
        abelian: t.is_abelian(),
        exponent_two: t.has_exponent_two(),
        associative: t.is_associative(),
    })
}

fn alg_name(sig: Signature) -> String {
    format!("C⊗{sig}")
}

impl CptReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.algebra);
        for m in &self.maps {
            let _ = writeln!(out, "  {:<4} {:<9} {}", m.label, m.map, m.kind);
        }
        let _ = write!(out, "\n{:>4} |", "∘");
        for l in &self.labels {
            let _ = write!(out, "{l:>4}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "{}", "-".repeat(6 + 4 * self.labels.len()));
        for (l, row) in self.labels.iter().zip(&self.table) {
            let _ = write!(out, "{l:>4} |");
            for x in row {
                let _ = write!(out, "{x:>4}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(
            out,
            "\norder {}, abelian {}, exponent 2 {}, associative {}",
            self.order, self.abelian, self.exponent_two, self.associative
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateReport {
    pub text: String,
    pub state: StateVector,
    /// `(k + r)/2`, the spin in the text form.
    pub spin: String,
    /// `|k - r|/2`.
    pub spin_line: String,
    pub statistics: Statistics,
}

pub fn state_report(s: &StateVector) -> StateReport {
    StateReport {
        text: s.text(),
        state: s.clone(),
        spin: rat(&s.fusion_spin()),
        spin_line: rat(&s.spin()),
        statistics: s.statistics(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumTerm {
    pub multiplicity: i64,
    #[serde(flatten)]
    pub state: StateReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateOpReport {
    pub operation: &'static str,
    pub inputs: Vec<String>,
    pub result: String,
    pub terms: Vec<SumTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn spin_note(s: &StateVector) -> Option<String> {
    spin_readings_differ(s).then(|| {
        format!(
            "spin {} adds the input spins; the label (l,l̇) = ({},{}) gives |l-l̇| = {}",
            rat(&s.fusion_spin()),
            rat(&BigRational::new((s.k as i64).into(), 2.into())),
            rat(&BigRational::new((s.r as i64).into(), 2.into())),
            rat(&s.spin())
        )
    })
}

pub fn sum_report(operation: &'static str, inputs: &[&StateVector], sum: &StateSum) -> StateOpReport {
    let terms: Vec<SumTerm> =
        sum.terms().map(|(s, n)| SumTerm { multiplicity: n, state: state_report(s) }).collect();
    let note = sum.terms().find_map(|(s, _)| if operation == "double" { None } else { spin_note(s) });
    StateOpReport {
        operation,
        inputs: inputs.iter().map(|s| s.text()).collect(),
        result: sum.to_string(),
        terms,
        note,
    }
}

pub fn single_report(operation: &'static str, inputs: &[&StateVector], out: &StateVector) -> StateOpReport {
    let mut sum = StateSum::new();
    sum.add(out.clone(), 1);
    sum_report(operation, inputs, &sum)
}

impl StateOpReport {
    pub fn table(&self) -> String {
        let mut out = format!("{} {} = {}\n", self.operation, self.inputs.join(" "), self.result);
        for t in &self.terms {
            let _ = writeln!(
                out,
                "  {} x {}  (k,r)=({},{})  {:?}",
                t.multiplicity, t.state.text, t.state.state.k, t.state.state.r, t.state.statistics
            );
        }
        if let Some(n) = &self.note {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub k: u32,
    pub r: u32,
    pub l: String,
    pub l_dot: String,
    pub degree: usize,
    pub spin: String,
    pub statistics: Statistics,
    /// In units of `m_e`.
    pub mass: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinLine {
    pub spin: String,
    pub labels: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub max_m: u32,
    pub rows: Vec<SpectrumRow>,
    pub spin_lines: Vec<SpinLine>,
}

pub fn spectrum_report(max_m: u32) -> SpectrumReport {
    let one = BigRational::from_integer(1.into());
    let half = |n: u32| rat(&BigRational::new((n as i64).into(), 2.into()));
    let cone = enumerate_cone(max_m, &one);
    let rows = cone
        .iter()
        .map(|e| SpectrumRow {
            k: e.label.k,
            r: e.label.r,
            l: half(e.label.k),
            l_dot: half(e.label.r),
            degree: e.degree,
            spin: rat(&e.spin),
            statistics: e.statistics,
            mass: rat(&e.mass),
        })
        .collect();
    let lines = spin_lines(&cone)
        .into_iter()
        .map(|(s, v)| SpinLine { spin: rat(&s), labels: v.iter().map(|e| [e.label.k, e.label.r]).collect() })
        .collect();
    SpectrumReport { max_m, rows, spin_lines: lines }
}

impl SpectrumReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>3} {:>3} {:>5} {:>5} {:>6} {:>5} {:<8} {:>6}", "k", "r", "l", "l'", "degree", "spin", "stats", "mass");
        for r in &self.rows {
            let stats = match r.statistics {
                Statistics::Fermion => "fermion",
                Statistics::Boson => "boson",
            };
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>5} {:>5} {:>6} {:>5} {:<8} {:>6}",
                r.k, r.r, r.l, r.l_dot, r.degree, r.spin, stats, r.mass
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasEntry {
    pub signature: [usize; 2],
    pub classification: ClassifyReport,
    pub chains: Vec<ChainReport>,
    pub odd: Option<OddReport>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub max_n: usize,
    pub count: usize,
    pub all_verified: bool,
    pub entries: Vec<AtlasEntry>,
}

/// Largest `p + q` accepted by the atlas.
pub const ATLAS_MAX_N: usize = 10;

/// All signatures with `p + q <= max_n`, ordered by `(p+q, p)`.
pub fn atlas_signatures(max_n: usize) -> Result<Vec<Signature>, CliffordError> {
    if max_n > ATLAS_MAX_N {
        return Err(CliffordError::DimensionCap { p: max_n, q: 0, cap: ATLAS_MAX_N });
    }
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in 0..=n {
            out.push(Signature::new(p, n - p)?);
        }
    }
    Ok(out)
}

pub fn atlas_entry(sig: Signature) -> AtlasEntry {
    let f = factorize_report(sig);
    let classification = classify_report(sig, false).expect("no oracle requested");
    AtlasEntry { signature: pq(sig), classification, chains: f.chains, odd: f.odd, verified: f.verified }
}

/// Collect entries, restoring canonical order.
pub fn assemble_atlas(max_n: usize, mut entries: Vec<AtlasEntry>) -> Atlas {
    entries.sort_by_key(|e| (e.signature[0] + e.signature[1], e.signature[0]));
    Atlas { max_n, count: entries.len(), all_verified: entries.iter().all(|e| e.verified), entries }
}

pub fn atlas(max_n: usize) -> Result<Atlas, CliffordError> {
    let entries = atlas_signatures(max_n)?.into_iter().map(atlas_entry).collect();
    Ok(assemble_atlas(max_n, entries))
}
