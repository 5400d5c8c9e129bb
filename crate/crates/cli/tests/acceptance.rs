//! Acceptance suite: one test per acceptance criterion, each asserting exact
//! (zero-tolerance) equality and printing a pass line with its timing.
//!
//! Run with `cargo test -p schurpf-cli --test acceptance -- --nocapture`.

use schurpf::combinat::Partition;
use schurpf::linalg::SkewMatrix;
use schurpf::ring::Var;
use schurpf::symfun::{p_basis_decompose, schur, WeightKind};
use schurpf::verify::pipeline::log_sum_expansion;
use schurpf::verify::{run_check, CheckParams, Status, Witness};
use schurpf::{qint, qrat, QPoly};
use std::process::Command;
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schurpf"))
}

fn announce(number: u32, name: &str, started: Instant) {
    println!(
        "criterion {number:02} {name}: pass ({:.2?})",
        started.elapsed()
    );
}

fn assert_pass(id: &str, params: CheckParams) {
    let report = run_check(id, &params).expect("check runs");
    assert_eq!(
        report.status,
        Status::Pass,
        "{} failed: {:?}",
        id,
        report.witness
    );
}

fn p() -> CheckParams {
    CheckParams::default()
}

#[test]
fn criterion_01_omega_golden_value() {
    let t = Instant::now();
    let out = bin().args(["omega", "5,4,4,1"]).output().expect("spawn");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "a^5 b^4 c^3 d^2\n");
    // The computation itself is sub-millisecond.
    let t_lib = Instant::now();
    let w = Partition::parse("5,4,4,1").unwrap().omega_weight();
    assert_eq!(w.to_string(), "a^5 b^4 c^3 d^2");
    assert!(t_lib.elapsed().as_millis() < 10, "weight should be instant");
    announce(1, "four-parameter weight golden value", t);
}

#[test]
fn criterion_02_pfaffian_kernel() {
    let t = Instant::now();
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for dim in [2usize, 4, 6, 8] {
        for _ in 0..200 {
            let sk = SkewMatrix::from_upper_fn(dim, |_, _| qint(rng.gen_range(-9..=9)));
            let by_matchings = sk.pfaffian_matchings().unwrap();
            let by_expansion = sk.pfaffian_expansion().unwrap();
            assert_eq!(by_matchings, by_expansion);
            let det = sk.to_matrix().determinant().unwrap();
            assert_eq!(&by_expansion * &by_expansion, det);
        }
    }
    announce(2, "Pfaffian^2 = det and algorithm agreement (200 x dims 2,4,6,8)", t);
}

#[test]
fn criterion_03_minor_summation() {
    let t = Instant::now();
    for (n, big_n) in [(1u32, 4u32), (2, 6), (2, 8)] {
        assert_pass(
            "msf",
            p().with_n(n).with_big_n(big_n).with_trials(20).with_seed(3),
        );
    }
    announce(3, "minor summation formula, 20 instances each of (2,4),(4,6),(4,8)", t);
}

#[test]
fn criterion_04_product_and_weight_pfaffians() {
    let t = Instant::now();
    for n in 1..=4u32 {
        assert_pass("product-pfaffian", p().with_n(n));
    }
    for n in 1..=3u32 {
        assert_pass("omega-pfaffian", p().with_n(n).with_max_size(6));
    }
    announce(4, "product Pfaffian (n <= 4) and staircase weight Pfaffian (|shape| <= 6, n <= 3)", t);
}

#[test]
fn criterion_05_four_case_sums() {
    let t = Instant::now();
    assert_pass("case-sums", p().with_degree(6));
    announce(5, "four geometric case sums at cap 6, symbolic in a,b,c,d", t);
}

#[test]
fn criterion_06_fundamental_identity() {
    let t = Instant::now();
    assert_pass("fundamental", p().with_n(1).with_trials(5).with_seed(6));
    assert_pass("fundamental", p().with_n(2).with_trials(5).with_seed(6));
    assert_pass("fundamental", p().with_n(3).with_trials(25).with_seed(6));
    announce(6, "fundamental Pfaffian identity (symbolic n <= 2, randomized n = 3)", t);
}

#[test]
fn criterion_07_substitution_evaluation() {
    let t = Instant::now();
    for n in 1..=3u32 {
        assert_pass("subs", p().with_n(n));
    }
    announce(7, "staircase substitution determinant, symbolic n = 1, 2, 3", t);
}

#[test]
fn criterion_08_sundquist_detexp_laplace() {
    let t = Instant::now();
    for n in 1..=3u32 {
        assert_pass("sundquist-1", p().with_n(n).with_trials(25).with_seed(8));
        assert_pass("sundquist-2", p().with_n(n).with_trials(25).with_seed(8));
        assert_pass("det-exp", p().with_n(n));
        assert_pass("laplace", p().with_n(n));
    }
    announce(8, "Sundquist identities (randomized), determinant expansion and Laplace route (symbolic), n <= 3", t);
}

#[test]
fn criterion_09_weighted_sum_series() {
    let t = Instant::now();
    assert_pass("zn-pfaffian", p().with_n(1).with_degree(8));
    assert_pass("zn-pfaffian", p().with_n(2).with_degree(4));
    announce(9, "weighted-sum Pfaffian series, n = 1 at D = 8 and n = 2 at D = 4", t);
}

#[test]
fn criterion_10_numerator_recursion_and_specializations() {
    let t = Instant::now();
    assert_pass("fn-recursion", p().with_n(1));
    assert_pass("fn-recursion", p().with_n(2));
    assert_pass("zn-specialization", p().with_n(1).with_degree(6));
    assert_pass("logz-step", p().with_n(1).with_degree(6));
    announce(10, "numerator recursion (symbolic n = 1, 2) and the two-variable series steps at cap 6", t);
}

#[test]
fn criterion_11_main_membership_theorem() {
    let t = Instant::now();
    assert_pass("main-theorem", p().with_n(2).with_degree(4));
    assert_pass("main-theorem", p().with_n(3).with_degree(6));

    // The first correction coefficients, read off the uncorrected expansion.
    let e = log_sum_expansion(WeightKind::StanleyOmega, 4, 4, 0).unwrap();
    let (a, b, c, d) = (
        QPoly::var(Var::A),
        QPoly::var(Var::B),
        QPoly::var(Var::C),
        QPoly::var(Var::D),
    );
    let p2 = e.coefficient(&Partition::new(vec![2]).unwrap());
    assert_eq!(p2, a.mul_ref(&(b.sub_ref(&c))).scale(&qrat(1, 2)));
    let p22 = e.coefficient(&Partition::new(vec![2, 2]).unwrap());
    assert_eq!(
        p22,
        a.mul_ref(&b).mul_ref(&c).mul_ref(&d).scale(&qrat(1, 4))
    );
    announce(11, "even-part cancellation of the corrected log sum (D=4 n=2, D=6 n=3) with exact correction coefficients", t);
}

#[test]
fn criterion_12_even_conjugate_even_corollary() {
    let t = Instant::now();
    assert_pass("simple-corollary", p().with_degree(4));

    // log y at degree 4 is the single shape (2,2); its square-term
    // coefficient is exactly 1/4, and the oracle expansion is
    // s_(2,2) = p_1^4/12 + p_2^2/4 - p_1 p_3/3 (independent linear solve).
    let e = log_sum_expansion(WeightKind::EvenEven, 4, 4, 0).unwrap();
    assert_eq!(
        e.coefficient(&Partition::new(vec![2, 2]).unwrap()),
        QPoly::constant(qrat(1, 4))
    );
    let s22 = schur(&Partition::new(vec![2, 2]).unwrap(), 4).unwrap();
    let oracle = p_basis_decompose(&s22, 4, 4).unwrap();
    assert_eq!(
        oracle.coefficient(&Partition::new(vec![1, 1, 1, 1]).unwrap()),
        QPoly::constant(qrat(1, 12))
    );
    assert_eq!(
        oracle.coefficient(&Partition::new(vec![2, 2]).unwrap()),
        QPoly::constant(qrat(1, 4))
    );
    assert_eq!(
        oracle.coefficient(&Partition::new(vec![3, 1]).unwrap()),
        QPoly::constant(qrat(-1, 3))
    );
    announce(12, "even-conjugate-even corollary at D = 4 with the frozen square coefficient 1/4", t);
}

#[test]
fn criterion_13_oddness_route_agreement() {
    let t = Instant::now();
    assert_pass("oddness-route", p().with_n(1).with_degree(4));
    assert_pass("oddness-route", p().with_n(2).with_degree(4));
    // Agreement with criterion 11's verdict at the shared configuration.
    let direct = run_check("main-theorem", &p().with_n(2).with_degree(4)).unwrap();
    assert_eq!(direct.status, Status::Pass);

    // Negative control: with the corrections omitted the substitution route
    // fails, and the witness is the surviving t^2 term.
    let broken = schurpf::verify::pipeline::verify_oddness_route(1, 4, false).unwrap();
    assert_eq!(broken.status, Status::Fail);
    match broken.witness {
        Some(Witness::Term { monomial, .. }) => {
            assert!(monomial.contains("t^2"), "witness was {monomial}")
        }
        other => panic!("expected a term witness, got {other:?}"),
    }
    announce(13, "two-variable cancellation route at D = 4, agreeing with the direct route, with t^2 negative control", t);
}

#[test]
fn criterion_14_rescaled_corollaries() {
    let t = Instant::now();
    assert_pass("corollary-bigschur", p().with_degree(4));
    assert_pass("corollary-macdonald", p().with_degree(2).with_q_order(3));

    // Route-A coefficients symbolically: p_2 picks up (1 - t^2), and
    // (1 - t^2)/(1 - q^2) in the two-parameter case.
    let base = log_sum_expansion(WeightKind::StanleyOmega, 2, 2, 0).unwrap();
    let mu2 = Partition::new(vec![2]).unwrap();
    let (a, b, c) = (QPoly::var(Var::A), QPoly::var(Var::B), QPoly::var(Var::C));
    let expected_base = a.mul_ref(&(b.sub_ref(&c))).scale(&qrat(1, 2));

    let big = base.theta_big_schur();
    let one_minus_t2 = QPoly::one() - QPoly::var(Var::T).pow(2);
    assert_eq!(big.coefficient(&mu2), expected_base.mul_ref(&one_minus_t2));

    let mac = base.theta_macdonald();
    let expected = schurpf::QRatFun::new(
        expected_base.mul_ref(&one_minus_t2),
        QPoly::one() - QPoly::var(Var::Q).pow(2),
    )
    .unwrap();
    assert!(mac.coefficient_ratfun(&mu2).equals(&expected));
    announce(14, "rescaled corollaries: exact transform coefficients plus independent reconstructions (D = 4 and D = 2 mod q^3)", t);
}

#[test]
fn criterion_15_suite_determinism() {
    let t = Instant::now();
    let dir = std::env::temp_dir().join("schurpf-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let f1 = dir.join("full-a.json");
    let f2 = dir.join("full-b.json");
    for f in [&f1, &f2] {
        let out = bin()
            .args([
                "suite",
                "--level",
                "full",
                "--seed",
                "11",
                "--json",
                "--out",
                f.to_str().unwrap(),
            ])
            .output()
            .expect("spawn");
        assert!(
            out.status.success(),
            "suite failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let a = std::fs::read(&f1).unwrap();
    let b = std::fs::read(&f2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "full-suite reports must be byte-identical");
    // And the file parses as a JSON array matching the report schema.
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let arr = parsed.as_array().expect("array of reports");
    assert!(arr.len() >= 18);
    for r in arr {
        for key in ["id", "engine", "params", "status", "witness", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["status"], "pass");
    }
    announce(15, "byte-identical full-suite JSON reports across runs", t);
}
