//! Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use clifford_kernel::automorphisms::{composition_table, DiscreteSymmetry};
use clifford_kernel::classification::{classify, division_ring_oracle};
use clifford_kernel::cone::{sym_dimension_oracle, ReprLabel};
use clifford_kernel::factorization::{
    complex_clifford_iso, complex_identification, even_subalgebra_iso, greedy_chain, printed_chains, transition_oracle,
    verify_tensor_iso, PRINTED_CHAINS, PRINTED_TRANSITIONS,
};
use clifford_kernel::ideals::{
    is_primitive, left_ideal_basis, primitive_factor_count, primitive_idempotent, radon_hurwitz, reference_idempotent,
};
use clifford_kernel::multivector::{center_basis, volume_element};
use clifford_kernel::states::{fuse, named_state, superposable, StateRingTag, StateVector, Statistics, STATE_NAMES};
use clifford_kernel::{Blade, BasisAlgebra, Complexified, Multivector, Scalar, Signature};

type Outcome = Result<String, String>;

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn signatures_up_to(n: usize) -> Vec<Signature> {
    (0..=n).flat_map(|m| (0..=m).map(move |p| sig(p, m - p))).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn classification_sweep() -> Outcome {
    let all = signatures_up_to(8);
    let mut doubles = 0;
    for s in &all {
        let t = classify(*s);
        let oracle = division_ring_oracle(*s).map_err(|e| format!("{s}: {e}"))?;
        ensure(oracle == t.ring, || format!("{s}: table {} oracle {}", t.ring, oracle))?;
        if !t.simple {
            doubles += 1;
        }
    }
    ensure(all.len() == 45, || format!("{} algebras", all.len()))?;
    Ok(format!("45 algebras agree with the idempotent oracle, {doubles} of them doubled"))
}

fn printed_idempotents() -> Outcome {
    let expected = [((2, 0), "½(1+e1)"), ((1, 1), "½(1+e12)"), ((0, 2), "1"), ((2, 4), "½(1+e15)½(1+e26)")];
    for ((p, q), text) in expected {
        let s = sig(p, q);
        let f = reference_idempotent(s).ok_or_else(|| format!("{s}: no idempotent"))?;
        ensure(f.factored() == text, || format!("{s}: {}", f.factored()))?;
        let e = f.element();
        ensure(&(e * e) == e, || format!("{s}: not idempotent"))?;
        ensure(is_primitive(&f), || format!("{s}: not primitive"))?;
        let k = primitive_factor_count(s);
        let dim = left_ideal_basis(&f).dimension();
        ensure(dim == 1 << (s.n() - k), || format!("{s}: ideal dimension {dim}, k = {k}"))?;
    }
    Ok("f(2,0), f(1,1), f(0,2), f(2,4) idempotent, primitive, ideal dimension 2^(n-k)".into())
}

fn karoubi_verification() -> Outcome {
    let mut greedy = 0;
    for s in signatures_up_to(8).into_iter().filter(|s| s.n() % 2 == 0 && s.n() > 0) {
        let factors = greedy_chain(s);
        ensure(factors.iter().all(|f| f.n() == 2), || format!("{s}: bad factors"))?;
        verify_tensor_iso(s, &factors).map_err(|e| format!("{s} greedy: {e}"))?;
        greedy += 1;
    }
    let mut printed = 0;
    for c in PRINTED_CHAINS.iter().filter(|c| c.factors.len() <= 4) {
        let target = c.target_signature();
        verify_tensor_iso(target, &c.signatures()).map_err(|e| format!("{target} printed: {e}"))?;
        let chain = clifford_kernel::factorization::fold_rings(
            &c.signatures().iter().map(|f| clifford_kernel::factorization::factor_ring(*f)).collect::<Vec<_>>(),
        );
        let last = *chain.last().unwrap();
        ensure(last.base() == c.arrow, || format!("{target}: trace ends in {last}, printed {}", c.arrow))?;
        printed += 1;
    }
    ensure(printed_chains(sig(4, 2)).len() == 3 && printed_chains(sig(3, 3)).len() == 2, || "alternatives".into())?;
    Ok(format!("{greedy} even signatures factor by witness, {printed} printed chains verify with matching arrows"))
}

fn ring_transitions() -> Outcome {
    for (a, b, r) in PRINTED_TRANSITIONS {
        let c = transition_oracle(a, b).map_err(|e| format!("{a}⊗{b}: {e}"))?;
        ensure(c.computed == r, || format!("{a}⊗{b}: printed {r}, computed {}", c.computed))?;
    }
    Ok("11 printed K⊗K rows reproduced on realized tensor algebras".into())
}

fn isomorphism_chain() -> Outcome {
    let even = even_subalgebra_iso(sig(2, 4)).map_err(|e| e.to_string())?;
    ensure(even.target == sig(4, 1), || format!("Cl+(2,4) -> {}", even.target))?;
    let ci = complex_identification(sig(4, 1)).map_err(|e| e.to_string())?;
    ensure(ci.real_form == sig(1, 3), || format!("Cl(4,1) real form {}", ci.real_form))?;
    complex_clifford_iso(sig(1, 3), sig(4, 0)).map_err(|e| format!("C⊗Cl(1,3) vs C4: {e}"))?;

    let s30 = sig(3, 0);
    let center = center_basis(&s30);
    let w = volume_element(&s30);
    ensure(center.len() == 2 && center.contains(&w), || "center of Cl(3,0) is not {1, w}".into())?;
    ensure((&w * &w).is_scalar_value(&-&Scalar::one()), || "w^2 != -1".into())?;
    let c3 = complex_identification(s30).map_err(|e| e.to_string())?;
    ensure(c3.imaginary_unit == w, || "imaginary unit is not w".into())?;
    complex_clifford_iso(c3.real_form, sig(2, 0)).map_err(|e| format!("C⊗{} vs C2: {e}", c3.real_form))?;
    Ok("Cl+(2,4) ≅ Cl(4,1) ≅ C⊗Cl(1,3) ≅ C4 and Cl(3,0) ≅ C⊗Cl(0,2) ≅ C2 by witnesses".into())
}

fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden"))
}

fn state_goldens() -> Outcome {
    let cases: [(&[&str], &str, &str); 4] = [
        (&["fuse", "nu", "nubar"], "fuse_nu_nubar.json", "|R,0,0,1⟩"),
        (&["double", "nu", "+"], "double_nu_plus.json", "|C,0,1,1/2⟩"),
        (&["double", "nu", "-"], "double_nu_minus.json", "|C~,0,-1,1/2⟩"),
        (&["annihilate", "e-", "e+"], "annihilate_e_pair.json", "2|R,0,0,1⟩"),
    ];
    for (args, file, result) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_cliffk"))
            .arg("--format")
            .arg("json")
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited {:?}", out.status.code()))?;
        let golden = std::fs::read(golden_dir().join(file)).map_err(|e| format!("{file}: {e}"))?;
        ensure(out.stdout == golden, || format!("{args:?} differs from {file}"))?;
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure(v["result"] == result, || format!("{args:?} gave {}", v["result"]))?;
    }
    let gamma = named_state("gamma").unwrap();
    let annihilated = clifford_kernel::states::annihilate(&named_state("e-").unwrap(), &named_state("e+").unwrap())
        .map_err(|e| e.to_string())?;
    ensure(annihilated.terms().collect::<Vec<_>>() == vec![(&gamma, 2)], || "e-e+ is not 2γ".into())?;
    Ok("fuse, double ⊕/⊖ and annihilate match golden JSON byte for byte".into())
}

fn random_state() -> impl Strategy<Value = StateVector> {
    let ring = proptest::prop_oneof![
        proptest::strategy::Just(StateRingTag::R),
        proptest::strategy::Just(StateRingTag::C),
        proptest::strategy::Just(StateRingTag::C_BAR),
        proptest::strategy::Just(StateRingTag::H),
        proptest::strategy::Just(StateRingTag::H_BAR),
    ];
    let named = proptest::sample::select(STATE_NAMES.to_vec()).prop_map(|n| named_state(n).unwrap());
    let generated = (ring, -2i64..=2, -2i64..=2, 0u32..3, 0u32..3).prop_map(|(r, b, l, k, rr)| StateVector::new(r, b, l, k, rr));
    proptest::prop_oneof![named, generated]
}

fn conservation() -> Outcome {
    let mut runner = TestRunner::new_with_rng(Config::with_cases(1000), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let chains = proptest::collection::vec(random_state(), 2..8);
    for i in 0..1000 {
        let chain = chains.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let fused = chain.iter().skip(1).fold(chain[0].clone(), |acc, s| fuse(&acc, s));
        let b: i64 = chain.iter().map(|s| s.b).sum();
        let l: i64 = chain.iter().map(|s| s.lepton).sum();
        let fermions = chain.iter().filter(|s| s.statistics() == Statistics::Fermion).count();
        let parity = if fermions % 2 == 1 { Statistics::Fermion } else { Statistics::Boson };
        ensure(fused.b == b && fused.lepton == l, || format!("chain {i}: sector not additive"))?;
        ensure(fused.statistics() == parity, || format!("chain {i}: statistics parity"))?;
    }
    let pool: Vec<StateVector> = {
        let mut v: Vec<_> = STATE_NAMES.iter().map(|n| named_state(n).unwrap()).collect();
        for _ in 0..200 {
            v.push(random_state().new_tree(&mut runner).map_err(|e| e.to_string())?.current());
        }
        v
    };
    let mut mixed = 0;
    for a in &pool {
        for b in &pool {
            if a.statistics() != b.statistics() {
                ensure(!superposable(a, b), || format!("{a} and {b} superpose"))?;
                mixed += 1;
            }
        }
    }
    Ok(format!("1000 random fuse chains conserve (b, l) and parity; {mixed} fermion-boson pairs refused"))
}

fn degree_oracle() -> Outcome {
    let mut count = 0;
    for k in 0..=8usize {
        for r in 0..=(8 - k) {
            let d = ReprLabel::new(k as u32, r as u32).degree();
            let o = sym_dimension_oracle(k, r).map_err(|e| e.to_string())?;
            ensure(d == o, || format!("({k},{r}): degree {d}, oracle {o}"))?;
            count += 1;
        }
    }
    Ok(format!("(k+1)(r+1) equals the symmetrizer rank on all {count} labels with k+r <= 8"))
}

/// Multiplicative or anti-multiplicative on basis pairs, linear or conjugate-linear in `i`.
fn observed_kind<A: BasisAlgebra>(alg: &A, s: DiscreteSymmetry) -> (bool, bool) {
    let blades: Vec<Multivector<A>> = (0..alg.dimension() as u32).map(|b| Multivector::blade(alg, Blade(b))).collect();
    let anti = blades.iter().any(|x| blades.iter().any(|y| s.apply(&(x * y)) != &s.apply(x) * &s.apply(y)));
    if anti {
        assert!(blades.iter().all(|x| blades.iter().all(|y| s.apply(&(x * y)) == &s.apply(y) * &s.apply(x))));
    }
    let one = Multivector::one(alg);
    let pseudo = s.apply(&one.scale(&Scalar::i())) != one.scale(&Scalar::i());
    (anti, pseudo)
}

fn automorphism_group() -> Outcome {
    let expected = [
        (DiscreteSymmetry::Id, false, false),
        (DiscreteSymmetry::P, false, false),
        (DiscreteSymmetry::T, true, false),
        (DiscreteSymmetry::PT, true, false),
        (DiscreteSymmetry::C, false, true),
        (DiscreteSymmetry::CP, false, true),
        (DiscreteSymmetry::CT, true, true),
        (DiscreteSymmetry::CPT, true, true),
    ];
    for n in [2, 4] {
        let alg = Complexified(sig(n, 0));
        let t = composition_table(&alg).map_err(|e| e.to_string())?;
        ensure(t.order() == 8, || format!("C{n}: order {}", t.order()))?;
        ensure(t.is_abelian(), || format!("C{n}: not abelian"))?;
        ensure(t.has_exponent_two(), || format!("C{n}: exponent"))?;
        ensure(t.is_associative() && t.is_z2_cubed(), || format!("C{n}: not Z2^3"))?;
        for (s, anti, pseudo) in expected {
            let got = observed_kind(&alg, s);
            ensure(got == (anti, pseudo), || format!("C{n}: {s} acts as {got:?}"))?;
        }
    }
    Ok("eight maps on C2 and C4 form Z2^3 with the expected (anti-/pseudo-) character".into())
}

fn radon_hurwitz_regression() -> Outcome {
    for i in -24..24 {
        ensure(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4, || format!("r_{} != r_{i} + 4", i + 8))?;
    }
    for s in signatures_up_to(8) {
        let k = primitive_factor_count(s);
        let t = classify(s);
        let spinor = t.matrix_rank * t.ring.division_ring().real_dimension();
        ensure(1 << (s.n() - k) == spinor, || format!("{s}: 2^(n-k) = {}, spinor dimension {spinor}", 1 << (s.n() - k)))?;
        let f = primitive_idempotent(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure(f.k() == k && is_primitive(&f), || format!("{s}: searched idempotent has {} factors", f.k()))?;
    }
    Ok("r_(i+8) = r_i + 4 and k = q - r_(q-p) fits all 45 signatures".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("classification sweep", classification_sweep),
        ("printed idempotents", printed_idempotents),
        ("Karoubi verification", karoubi_verification),
        ("ring transitions", ring_transitions),
        ("isomorphism chain", isomorphism_chain),
        ("state calculus goldens", state_goldens),
        ("conservation properties", conservation),
        ("degree oracle", degree_oracle),
        ("automorphism group", automorphism_group),
        ("Radon-Hurwitz regression", radon_hurwitz_regression),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2} s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
