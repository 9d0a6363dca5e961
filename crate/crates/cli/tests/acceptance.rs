//! Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
//! time limit. Exact arithmetic throughout, so every comparison has zero
//! tolerance.
//!
//! A few criteria are known to fail: their reference data is wrong or a
//! conjecture has a counterexample (see `BLOCKED`). They are still evaluated
//! in full and reported as FAIL; the run only fails if the set of failing
//! criteria changes.
//! Runs without the libtest harness so the report is never captured.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use ptmpow::bm::{self, h_poly, v_operator, HPolyTable, B2_VALUATION_TABLE};
use ptmpow::fpoly::{self, w_poly, CoeffTable, FSeries};
use ptmpow::harness::{run_campaign, Bounds, CampaignReport, Status};
use ptmpow::poly::IntPoly;
use ptmpow::tm;

/// Criteria that fail on faithful evaluation, with the reason.
const BLOCKED: &[(u32, &str)] = &[
    (
        6,
        "listed zero set has 72 where t_3(72) != 0; the 7th zero is 62",
    ),
    (8, "closed-form argmax for m = 3 does not hold at k = 1"),
    (
        15,
        "b_(2^m-1) congruence fails at m = 1, 3 and the b_3 crossover fails at n = 1",
    ),
];

/// Id, title, time limit in seconds, body.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn bounds(pairs: &[(&str, u64)]) -> Bounds {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn campaign(name: &str, pairs: &[(&str, u64)]) -> CampaignReport {
    run_campaign(name, &bounds(pairs)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Passes when every report verified to its bound; detail names the first failure.
fn campaigns_pass(reports: &[CampaignReport]) -> Outcome {
    for r in reports {
        if r.status != Status::VerifiedToBound {
            let why = r
                .first_failure()
                .map(ToString::to_string)
                .unwrap_or_else(|| r.status.to_string());
            return verdict(false, format!("{}: {why}", r.name));
        }
    }
    let cases: u64 = reports.iter().map(CampaignReport::cases).sum();
    verdict(true, format!("{cases} cases"))
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `c * t * inner(t)` as rational coefficients.
fn scaled_t_times(c: BigRational, inner: &[i64]) -> Vec<BigRational> {
    let mut out = vec![rat(0, 1)];
    out.extend(
        inner
            .iter()
            .map(|&a| &c * BigRational::from_integer(a.into())),
    );
    out
}

fn c1_f_table() -> Outcome {
    let expected: Vec<Vec<BigRational>> = vec![
        vec![rat(1, 1)],
        scaled_t_times(rat(-1, 1), &[1]),
        scaled_t_times(rat(1, 2), &[-3, 1]),
        scaled_t_times(rat(-1, 6), &[2, -9, 1]),
        scaled_t_times(rat(1, 24), &[-42, 35, -18, 1]),
        scaled_t_times(rat(-1, 120), &[24, -270, 155, -30, 1]),
    ];
    for (n, want) in expected.iter().enumerate() {
        let got = fpoly::f_poly(n as u64).rational_coeffs();
        if &got != want {
            return verdict(
                false,
                format!("f_{n} = {}", fpoly::f_poly(n as u64).display_with("t")),
            );
        }
    }
    verdict(true, "f_0..f_5 exact")
}

fn scaled(c: i64, coeffs_low_to_high: &[i64]) -> IntPoly {
    IntPoly::from_i64s(coeffs_low_to_high).scale(&BigInt::from(c))
}

fn c2_closed_forms() -> Outcome {
    let table = CoeffTable::up_to(100);
    let r = fpoly::check_coeff_closed_forms(&table, 100).unwrap();
    if !r.ok() {
        return verdict(false, r.to_string());
    }
    let reference = [
        (3, scaled(45, &[176, -73, 9])),
        (4, scaled(7, &[-266398, 121685, -19710, 1215])),
        (5, scaled(945, &[805440, -394878, 74165, -6570, 243])),
        (
            6,
            scaled(
                165,
                &[
                    -2916611728,
                    1497391014,
                    -310359581,
                    33070275,
                    -1862595,
                    45927,
                ],
            ),
        ),
    ];
    for (k, want) in reference {
        let got = w_poly(k).unwrap();
        if got != want {
            return verdict(false, format!("W_{k} = {}", got.display_with("n")));
        }
    }
    verdict(
        true,
        format!("{} closed-form cases, W_3..W_6 exact", r.cases),
    )
}

fn c3_factorization() -> Outcome {
    campaigns_pass(&[campaign("f-factorization", &[("n", 60)])])
}

fn c4_oracles() -> Outcome {
    campaigns_pass(&[
        campaign("t-oracle", &[("n", 60), ("m", 6)]),
        campaign("b-oracle", &[("n", 60), ("m", 5)]),
    ])
}

fn c5_valuations() -> Outcome {
    campaigns_pass(&[
        campaign("t-v2-pow2", &[("n", 1 << 14), ("k", 4)]),
        campaign("t3-v2", &[("n", 1 << 14)]),
    ])
}

fn c6_t3_zero_prefix() -> Outcome {
    let listed: [u64; 10] = [2, 11, 14, 47, 50, 59, 72, 191, 194, 203];
    let computed = tm::t3_zero_seq(10);
    let series = FSeries::up_to(*listed.iter().max().unwrap());
    let mut problems = Vec::new();
    for (k, (&want, &got)) in listed.iter().zip(&computed).enumerate() {
        if want != got {
            problems.push(format!("a_{} listed {want}, computed {got}", k + 1));
        }
        let at3 = series.f(want).eval_int(3);
        if at3 != rat(0, 1) {
            problems.push(format!("f_{want}(3) = {at3}"));
        }
    }
    if problems.is_empty() {
        verdict(true, "prefix and f_(a_k)(3) = 0 reproduced")
    } else {
        verdict(false, problems.join("; "))
    }
}

fn c7_t2() -> Outcome {
    campaigns_pass(&[
        campaign("t2-coverage", &[("target", 50)]),
        campaign("t2-identities", &[("n", 1 << 16), ("symmetry", 100_000)]),
    ])
}

fn c8_extrema() -> Outcome {
    campaigns_pass(&[campaign("t-extrema", &[("k", 20)])])
}

fn c9_inequalities() -> Outcome {
    let r = campaign("t-inequalities", &[("n", 1 << 16)]);
    let outcome = campaigns_pass(std::slice::from_ref(&r));
    // The +1 equality must have been checked for 3 <= k <= 16.
    let eq_cases = r
        .checks
        .iter()
        .find(|c| c.check == "t2-log-concave")
        .map(|c| c.cases);
    if outcome.pass && eq_cases != Some((1 << 16) + 14) {
        return verdict(false, format!("log-concavity case count {eq_cases:?}"));
    }
    outcome
}

fn c10_b_valuations() -> Outcome {
    campaigns_pass(&[campaign(
        "b-v2",
        &[("n", 1 << 14), ("k", 3), ("churchhouse", 1 << 16)],
    )])
}

fn c11_h_anchors() -> Outcome {
    let mut t = HPolyTable::new();
    let h124 = &(&IntPoly::from_i64s(&[1, 3]) * &IntPoly::from_i64s(&[1, 33, 27, 3]))
        * &IntPoly::constant(4);
    let anchors = [
        ((0, 2, 2), IntPoly::from_i64s(&[1, 10, 5])),
        ((2, 2, 2), IntPoly::from_i64s(&[5, 10, 1])),
        ((1, 2, 4), h124),
    ];
    for ((i, k, m), want) in anchors {
        if h_poly(i, k, m).unwrap() != want {
            return verdict(false, format!("h_{{{i},{k},{m}}} differs"));
        }
    }
    let reports = [
        bm::check_h_anchors(&mut t).unwrap(),
        bm::check_short_sum_congruences(1 << 12).unwrap(),
        bm::check_8x1_divisibility(&mut t, 6).unwrap(),
    ];
    match reports.iter().find(|r| !r.ok()) {
        Some(r) => verdict(false, r.to_string()),
        None => verdict(
            true,
            format!("{} cases", reports.iter().map(|r| r.cases).sum::<u64>()),
        ),
    }
}

fn c12_operators() -> Outcome {
    let v1 = v_operator(1).unwrap();
    let expected = [
        IntPoly::from_i64s(&[-1]),
        IntPoly::from_i64s(&[2]),
        IntPoly::from_i64s(&[-1, 1]),
    ];
    if v1.coeffs != expected {
        return verdict(false, "V_1 differs from (x-1) theta^2 + 2 theta - 1");
    }
    let order = v_operator(2).unwrap().order();
    if order > 4 {
        return verdict(false, format!("V_2 has order {order}"));
    }
    campaigns_pass(&[campaign(
        "v-operators",
        &[("m1", 40), ("m2", 12), ("order", 12)],
    )])
}

fn c13_b2_table() -> Outcome {
    let mut out = campaigns_pass(&[campaign("b2-valuation-table", &[("n", 1 << 14)])]);
    let rows: BTreeSet<(u32, u64)> = B2_VALUATION_TABLE.iter().map(|&(k, _, a)| (k, a)).collect();
    out.detail += &format!(
        ", {} residue classes in {} rows",
        B2_VALUATION_TABLE.len(),
        rows.len()
    );
    out
}

fn c14_appendix() -> Outcome {
    campaigns_pass(&[campaign("t-appendix", &[("n", 8)])])
}

fn c15_conjectures() -> Outcome {
    let names = [
        "t5-valuation",
        "t9-valuation",
        "b-pow2-congruence",
        "b-pow2m1-congruence",
        "t-zero-m4plus",
        "b-turan-m4plus",
        "b3-turan-crossover",
    ];
    let out = Command::new(env!("CARGO_BIN_EXE_ptmpow"))
        .arg("verify")
        .args(names)
        .args(["--bound", "4096", "--format", "json"])
        .output()
        .expect("run ptmpow");
    let code = out.status.code();
    let reports: Vec<CampaignReport> = serde_json::from_slice(&out.stdout).expect("json reports");
    let mut problems = Vec::new();
    if code != Some(3) {
        problems.push(format!("exit code {code:?}"));
    }
    for r in &reports {
        if r.bounds.get("n") != Some(&4096) {
            problems.push(format!("{} ran with n = {:?}", r.name, r.bounds.get("n")));
        }
        if r.status != Status::VerifiedToBound {
            let why = r
                .first_failure()
                .map(ToString::to_string)
                .unwrap_or_default();
            problems.push(format!("{} {}: {why}", r.name, r.status));
        }
    }
    if problems.is_empty() {
        verdict(
            true,
            format!("{} campaigns verified to 4096, exit 3", reports.len()),
        )
    } else {
        verdict(false, problems.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 15] = [
        (1, "f_0..f_5 table", 1, c1_f_table),
        (
            2,
            "coefficient closed forms and W_3..W_6",
            5,
            c2_closed_forms,
        ),
        (3, "g_n mod p factorization", 30, c3_factorization),
        (4, "recurrences equal convolution oracles", 10, c4_oracles),
        (5, "nu2 closed forms for t_(2^k) and t_3", 60, c5_valuations),
        (6, "zero set of t_3 prefix", 10, c6_t3_zero_prefix),
        (7, "t_2 coverage, symmetry, mod 4", 60, c7_t2),
        (8, "extrema of t_2 and t_3", 120, c8_extrema),
        (9, "inequality suite", 60, c9_inequalities),
        (10, "nu2 of b_(2^k-1) and Churchhouse", 60, c10_b_valuations),
        (
            11,
            "h anchors, short-sum congruences, 8(x+1)",
            60,
            c11_h_anchors,
        ),
        (12, "annihilating operators", 60, c12_operators),
        (13, "nu2(b_2) residue-class list", 120, c13_b2_table),
        (
            14,
            "multinomial identity and non-vanishing",
            10,
            c14_appendix,
        ),
        (15, "conjecture campaigns at 2^12", 600, c15_conjectures),
    ];
    let mut failing = BTreeSet::new();
    for (id, title, limit_s, run) in criteria {
        let start = Instant::now();
        let Outcome { pass, detail } = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit_s);
        let ok = pass && in_time;
        if !ok {
            failing.insert(id);
        }
        let timing = format!("{:.2}s / {limit_s}s", elapsed.as_secs_f64());
        let note = if in_time {
            detail
        } else {
            format!("over time limit; {detail}")
        };
        println!(
            "criterion {id:>2} {}: {title} [{timing}] {note}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
    let blocked: BTreeSet<u32> = BLOCKED.iter().map(|b| b.0).collect();
    for (id, why) in BLOCKED {
        println!("criterion {id:>2} blocked: {why}");
    }
    if failing != blocked {
        eprintln!(
            "failing criteria {failing:?} differ from the documented blocked set {blocked:?}"
        );
        std::process::exit(1);
    }
    println!("acceptance: failing set matches the documented blocked set {blocked:?}");
}
