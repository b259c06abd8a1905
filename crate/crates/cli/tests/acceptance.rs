//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! All arithmetic is exact, so every comparison is literal equality of
//! rationals. Run with `cargo test -p lichcert-cli --test acceptance --
//! --show-output` to see the per-criterion lines.

use std::collections::BTreeMap;
use std::process::Command;

use lichcert::g2::{
    build_g2_structure, cas_so7_form, cas_so7_tensor2, g2_identity_suite, scalar_action_on_forms,
    scalar_action_on_tensors, standard_structure,
};
use lichcert::multilinear::{AltForm, Mat, SymTensor2};
use lichcert::rep::{
    self, alt_power, c2_casimir, c2_char, c2_dim, hom_multiplicity, principal_branch, su2_char,
    su2_decompose, sym_power, C2Weight, LaurentCharacter,
};
use lichcert::sampling;
use lichcert::sasaki;
use lichcert::scalar::{int, rat};
use lichcert::stability::{self, CoindexKind, NormalizationContext, Verdict};

struct Criterion {
    number: u32,
    description: &'static str,
}

impl Criterion {
    fn new(number: u32, description: &'static str) -> Self {
        Criterion {
            number,
            description,
        }
    }

    fn finish(self, pass: bool) {
        println!(
            "criterion {}: {} — {}",
            self.number,
            if pass { "PASS" } else { "FAIL" },
            self.description
        );
        assert!(pass, "criterion {} failed: {}", self.number, self.description);
    }
}

#[test]
fn criterion_1_g2_identity_suite() {
    let c = Criterion::new(
        1,
        "G2 identity suite exact for the default spinor and 10 seeded random unit spinors",
    );
    let mut pass = g2_identity_suite(standard_structure()).pass;
    let mut rng = sampling::rng(7);
    for _ in 0..10 {
        let sigma = sampling::random_unit_spinor(&mut rng);
        let g = build_g2_structure(&sigma).expect("unit spinor");
        let report = g2_identity_suite(&g);
        pass &= report.pass;
        // the suite must contain exactly the seven contracted identities
        pass &= report.checks.len() == 7;
    }
    c.finish(pass);
}

#[test]
fn criterion_2_decomposition_ranks_and_kernels() {
    let c = Criterion::new(
        2,
        "Λ² splits 7+14, Λ³ splits 1+7+27, Clifford kernels coincide with the summands, \
         stabiliser of φ has dimension 14",
    );
    let g = standard_structure();
    let ((r7, r14), (r1, r3_7, r27)) = g.projector_ranks();
    let kernels = g.clifford_kernel_dims(); // errors unless subspaces coincide
    let pass = (r7, r14) == (7, 14)
        && (r1, r3_7, r27) == (1, 7, 27)
        && kernels == Ok((14, 27))
        && g.stabilizer_dim() == 14;
    c.finish(pass);
}

#[test]
fn criterion_3_endomorphism_values() {
    let c = Criterion::new(
        3,
        "S = -6 on T and -14 on Sym²₀; Cas^so(7) = -6/-10/-12 on Λ¹/Λ²/Λ³ and -14 on Sym²₀, \
         on full bases",
    );
    let g = standard_structure();
    let sym0: Vec<Mat> = SymTensor2::tracefree_basis(7)
        .into_iter()
        .map(SymTensor2::into_mat)
        .collect();
    let forms = |k: usize| -> Vec<AltForm> {
        AltForm::basis_tuples(7, k)
            .iter()
            .map(|key| AltForm::monomial(7, key, int(1)))
            .collect()
    };
    let pass = g.s_on_vectors() == Mat::identity(7).scale(&int(-6))
        && scalar_action_on_tensors(&sym0, |h| g.s_on_tensor2(h)) == Some(int(-14))
        && scalar_action_on_forms(&forms(1), cas_so7_form) == Some(int(-6))
        && scalar_action_on_forms(&forms(2), cas_so7_form) == Some(int(-10))
        && scalar_action_on_forms(&forms(3), cas_so7_form) == Some(int(-12))
        && scalar_action_on_tensors(&sym0, cas_so7_tensor2) == Some(int(-14));
    c.finish(pass);
}

#[test]
fn criterion_4_sasaki_fibre_checks() {
    let c = Criterion::new(
        4,
        "Sasaki fibre checks for n = 2, 3, 4 (curvature differences, rough-Laplacian summand, \
         mod-ξ identities, h_α) and margins 4 − 4n",
    );
    let mut pass = true;
    for n in 2..=4usize {
        let report = sasaki::verify_fibre(n);
        pass &= report.pass;
        pass &= report.trace_pairing_constant == "-1";
        let margin = stability::sasaki_margin(n as u32).expect("n >= 1");
        pass &= margin.margin == format!("{}", 4 - 4 * (n as i64));
        pass &= margin.verdict == Verdict::Unstable;
    }
    c.finish(pass);
}

/// Independent brute-force plethysm oracle: symmetric powers enumerate
/// multisets of the weight list, exterior powers enumerate subsets.
fn oracle_power(c: &LaurentCharacter, m: u32, alternating: bool) -> LaurentCharacter {
    let mut weights = Vec::new();
    for (e, coeff) in c.terms() {
        for _ in 0..coeff {
            weights.push(e[0]);
        }
    }
    fn rec(
        weights: &[i64],
        remaining: usize,
        start: usize,
        alternating: bool,
        sum: i64,
        out: &mut Vec<i64>,
    ) {
        if remaining == 0 {
            out.push(sum);
            return;
        }
        for i in start..weights.len() {
            let next = if alternating { i + 1 } else { i };
            rec(weights, remaining - 1, next, alternating, sum + weights[i], out);
        }
    }
    let mut sums = Vec::new();
    rec(&weights, m as usize, 0, alternating, 0, &mut sums);
    let mut out = LaurentCharacter::zero(1);
    for s in sums {
        out = out
            .add(&LaurentCharacter::monomial(1, [s, 0], 1))
            .expect("rank 1");
    }
    out
}

#[test]
fn criterion_5_representation_theory() {
    let c = Criterion::new(
        5,
        "dims 10/5/35, Casimirs -1 and -2/3, branching rules, Sym²₀(Sym⁶E) summands, \
         hom multiplicities (1,0,0), plethysms match the brute-force oracle (a ≤ 6, m ≤ 4)",
    );
    let w = |k, l| C2Weight::new(k, l).unwrap();
    let mut pass = c2_dim(w(2, 0)) == 10 && c2_dim(w(1, 1)) == 5 && c2_dim(w(4, 0)) == 35;
    pass &= c2_casimir(w(2, 0)) == int(-1) && c2_casimir(w(1, 1)) == rat(-2, 3);

    let branch = |k, l| -> Vec<(u32, u32)> {
        principal_branch(&c2_char(w(k, l)).unwrap())
            .unwrap()
            .multiplicities()
            .iter()
            .map(|(a, b)| (*a, *b))
            .collect()
    };
    pass &= branch(2, 0) == vec![(2, 1), (6, 1)];
    pass &= branch(1, 1) == vec![(4, 1)];

    let sym2_traceless = su2_decompose(&sym_power(&su2_char(6), 2).unwrap())
        .unwrap()
        .remove_trivial()
        .unwrap();
    pass &= sym2_traceless
        .multiplicities()
        .iter()
        .map(|(a, b)| (*a, *b))
        .collect::<Vec<_>>()
        == vec![(4, 1), (8, 1), (12, 1)];

    let tangent = su2_decompose(&su2_char(6)).unwrap();
    let sym3 = su2_decompose(&sym_power(&su2_char(6), 3).unwrap()).unwrap();
    pass &= hom_multiplicity(w(1, 1), &sym2_traceless).unwrap() == 1;
    pass &= hom_multiplicity(w(1, 1), &tangent).unwrap() == 0;
    pass &= hom_multiplicity(w(1, 1), &sym3).unwrap() == 0;

    for a in 0..=6u32 {
        let base = su2_char(a);
        for m in 0..=4u32 {
            pass &= sym_power(&base, m).unwrap() == oracle_power(&base, m, false);
            pass &= alt_power(&base, m).unwrap() == oracle_power(&base, m, true);
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_6_berger_pipeline() {
    let c = Criterion::new(
        6,
        "calibration 1/120, q(R̄) = 1/5 on Sym⁴E, q(R) = 19/60 both ways, eigenvalue 19/30, \
         2E = 9/10, margin -4/15, unstable, 5-dimensional Killing space",
    );
    let calibration = stability::berger_calibration().unwrap();
    let mut pass = calibration.constant == "1/120" && calibration.q_rbar_on_sym4 == "1/5";

    let ctx = NormalizationContext::berger_normal_metric();
    let via_comparison =
        stability::qr_comparison(stability::Bundle::Sym2Traceless, &rat(1, 5), &ctx).unwrap();
    let via_literal = rat(1, 5) + rat(7, 60);
    pass &= via_comparison == rat(19, 60) && via_literal == rat(19, 60);
    pass &= via_comparison == via_literal;

    let verdict = stability::berger_verdict().unwrap();
    pass &= verdict.eigenvalue == "19/30"
        && verdict.two_e == "9/10"
        && verdict.margin == "-4/15"
        && verdict.verdict == Verdict::Unstable;

    let certificate = rep::killing_certificate().unwrap();
    pass &= certificate.valid && certificate.killing_space_dim == 5;
    c.finish(pass);
}

#[test]
fn criterion_7_function_spectrum() {
    let c = Criterion::new(
        7,
        "spectrum scan at bound 8/3: the nine weights (1,0)…(4,0) plus (0,0); invariants only \
         at (0,0) and (4,0); smallest nonzero eigenvalue 8/3 on the 35-dimensional V(4,0) > 9/10",
    );
    let entries = stability::function_spectrum_scan(&rat(8, 3)).unwrap();
    let weights: Vec<[u32; 2]> = entries.iter().map(|e| e.weight).collect();
    let expected: Vec<[u32; 2]> = vec![
        [0, 0],
        [1, 0],
        [1, 1],
        [2, 0],
        [2, 1],
        [2, 2],
        [3, 0],
        [3, 1],
        [3, 2],
        [4, 0],
    ];
    let mut sorted = weights.clone();
    sorted.sort();
    let mut pass = sorted == expected;
    for e in &entries {
        let should_have_invariants = matches!(e.weight, [0, 0] | [4, 0]);
        pass &= (e.invariant_multiplicity > 0) == should_have_invariants;
    }
    let nonzero_with_invariants: Vec<&stability::SpectrumEntry> = entries
        .iter()
        .filter(|e| e.invariant_multiplicity > 0 && e.eigenvalue != "0")
        .collect();
    pass &= nonzero_with_invariants.len() == 1;
    let v40 = nonzero_with_invariants[0];
    pass &= v40.weight == [4, 0] && v40.eigenvalue == "8/3" && v40.dim == 35;
    pass &= rat(8, 3) > rat(9, 10);
    c.finish(pass);
}

#[test]
fn criterion_8_theorem_level_margins() {
    let c = Criterion::new(
        8,
        "harmonic-3-form margin (4, 12, -8) under scal = 42; coindex bounds b2 / b3 / b2+b3",
    );
    let report = stability::g2_b3_margin(&NormalizationContext::scal42()).unwrap();
    let mut pass = report.eigenvalue == "4"
        && report.two_e == "12"
        && report.margin == "-8"
        && report.verdict == Verdict::Unstable;

    let s = stability::betti_coindex_summary(2, 5, CoindexKind::Sasaki);
    let g = stability::betti_coindex_summary(2, 5, CoindexKind::G2);
    let both = stability::betti_coindex_summary(2, 5, CoindexKind::SasakiG2);
    pass &= s.coindex_lower_bound == 2 && g.coindex_lower_bound == 5 && both.coindex_lower_bound == 7;
    pass &= stability::betti_coindex_summary(0, 0, CoindexKind::Sasaki).verdict
        == Verdict::Inconclusive;
    c.finish(pass);
}

fn cli_json(args: &[&str]) -> (Vec<u8>, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_lichcert"))
        .arg("--format")
        .arg("json")
        .args(args)
        .env_remove("LICHCERT_OUTPUT_DIR")
        .output()
        .expect("binary runs");
    (out.stdout, out.status.success())
}

#[test]
fn criterion_9_cli_determinism() {
    let c = Criterion::new(
        9,
        "two consecutive full CLI runs produce byte-identical JSON reports",
    );
    let commands: Vec<Vec<&str>> = vec![
        vec!["g2", "verify", "--spinors", "3"],
        vec!["g2", "margin"],
        vec!["sasaki", "verify", "--n", "2"],
        vec!["rep", "branch", "--hw", "2,0"],
        vec!["rep", "decompose", "--alt", "3", "--of", "6"],
        vec!["berger", "certificate"],
        vec!["berger", "report"],
        vec!["spectrum", "--bound", "8/3"],
        vec!["coindex", "--b2", "1", "--b3", "2", "--kind", "sasaki-g2"],
    ];
    let mut pass = true;
    let mut outputs: BTreeMap<String, Vec<u8>> = BTreeMap::new();
    for args in &commands {
        let (first, ok1) = cli_json(args);
        let (second, ok2) = cli_json(args);
        pass &= ok1 && ok2;
        pass &= first == second;
        pass &= !first.is_empty();
        outputs.insert(args.join(" "), first);
    }
    // spot-check the advertised report fields
    let berger: serde_json::Value =
        serde_json::from_slice(&outputs["berger report"]).expect("valid JSON");
    pass &= berger["report"]["eigenvalue"] == "19/30"
        && berger["report"]["two_E"] == "9/10"
        && berger["report"]["verdict"] == "unstable";
    let branch: serde_json::Value =
        serde_json::from_slice(&outputs["rep branch --hw 2,0"]).expect("valid JSON");
    pass &= branch["dim"] == 10 && branch["branch"]["6"] == 1 && branch["branch"]["2"] == 1;
    c.finish(pass);
}
