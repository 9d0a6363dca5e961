//! The table of named campaigns.

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;

use super::campaign::{Bounds, CampaignReport, Outcome, Severity};
use super::conjectures as cj;
use crate::bm::{self, BmSeq, HPolyTable};
use crate::error::{invalid, Result};
use crate::fpoly::{self, CoeffTable, FSeries};
use crate::report::CheckReport;
use crate::tm::{self, SolveOptions, TmSeq};

/// A named, bounded verification run.
pub struct Campaign {
    pub name: &'static str,
    pub severity: Severity,
    pub statement: &'static str,
    /// Every accepted bound key with its default value.
    pub defaults: &'static [(&'static str, u64)],
    /// Smallest accepted `n`, if the campaign has an `n` bound.
    pub min_n: u64,
    body: fn(&Params) -> Result<Outcome>,
}

/// Resolved bounds handed to a campaign body.
pub struct Params<'a>(&'a Bounds);

impl Params<'_> {
    fn get(&self, key: &str) -> u64 {
        self.0[key]
    }

    fn get_u32(&self, key: &str) -> Result<u32> {
        u32::try_from(self.get(key)).map_err(|_| invalid(format!("{key} is too large")))
    }
}

impl Campaign {
    /// Defaults with `overrides` applied; unknown keys are rejected.
    pub fn resolve(&self, overrides: &Bounds) -> Result<Bounds> {
        let mut bounds: Bounds = self
            .defaults
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect();
        for (key, &value) in overrides {
            match bounds.get_mut(key) {
                Some(slot) => *slot = value,
                None => {
                    let known: Vec<&str> = self.defaults.iter().map(|d| d.0).collect();
                    return Err(invalid(format!(
                        "campaign {} has no bound {key:?} (known: {})",
                        self.name,
                        known.join(", ")
                    )));
                }
            }
        }
        if let Some(&n) = bounds.get("n") {
            if n < self.min_n {
                return Err(invalid(format!(
                    "campaign {} needs n >= {}",
                    self.name, self.min_n
                )));
            }
        }
        Ok(bounds)
    }

    pub fn run(&self, overrides: &Bounds) -> Result<CampaignReport> {
        let bounds = self.resolve(overrides)?;
        let start = Instant::now();
        let outcome = (self.body)(&Params(&bounds))?;
        let wall_ms = start.elapsed().as_millis() as u64;
        Ok(CampaignReport {
            name: self.name.to_string(),
            severity: self.severity,
            statement: self.statement.to_string(),
            status: outcome.status(),
            bounds,
            checks: outcome.checks,
            observations: outcome.observations,
            wall_ms: Some(wall_ms),
        })
    }
}

/// Looks a campaign up by name.
pub fn find(name: &str) -> Result<&'static Campaign> {
    CAMPAIGNS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| invalid(format!("unknown campaign {name:?}")))
}

pub fn campaigns() -> &'static [Campaign] {
    CAMPAIGNS
}

pub fn run_campaign(name: &str, overrides: &Bounds) -> Result<CampaignReport> {
    find(name)?.run(overrides)
}

/// Reruns the campaign of a counterexample report with its bounds cut
/// down to the witness: `n` becomes the failing sequence index (witness
/// `index`, else witness `n`, clamped to the campaign minimum) and every
/// other bound named in the witness is lowered to the witness value.
pub fn replay(report: &CampaignReport) -> Result<CampaignReport> {
    let campaign = find(&report.name)?;
    let mut bounds = report.bounds.clone();
    if let Some(cx) = report
        .first_failure()
        .and_then(|c| c.counterexample.as_ref())
    {
        let index = cx.witness.get("index").or_else(|| cx.witness.get("n"));
        if let (Some(slot), Some(&n)) = (bounds.get_mut("n"), index) {
            *slot = n.unsigned_abs().max(campaign.min_n).min(*slot);
        }
        for (key, value) in &cx.witness {
            if key == "n" || key == "index" {
                continue;
            }
            if let Some(slot) = bounds.get_mut(key) {
                *slot = value.unsigned_abs().min(*slot);
            }
        }
    }
    campaign.run(&bounds)
}

fn checks(reports: impl IntoIterator<Item = CheckReport>) -> Outcome {
    reports.into_iter().fold(Outcome::new(), Outcome::check)
}

fn seq_mismatch(
    name: String,
    w: Vec<(&str, i64)>,
    left: &[BigInt],
    right: &[BigInt],
) -> CheckReport {
    let cases = left.len().min(right.len()) as u64;
    match left.iter().zip(right).position(|(a, b)| a != b) {
        None if left.len() == right.len() => CheckReport::passed(name, cases),
        None => CheckReport::failed(name, cases, &w, "lengths differ"),
        Some(n) => {
            let mut w = w;
            w.push(("n", n as i64));
            CheckReport::failed(name, cases, &w, format!("{} vs {}", left[n], right[n]))
        }
    }
}

fn f_closed_forms(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let table = CoeffTable::up_to(n);
    let mut out = Outcome::new().check(fpoly::check_coeff_closed_forms(&table, n)?);
    for k in 1..=p.get("w") {
        let w = fpoly::w_poly(k)?;
        out = out.observe(format!("W{k}"), w.display_with("n"));
    }
    Ok(out)
}

fn f_recurrences(p: &Params) -> Result<Outcome> {
    let n_max = p.get("n");
    let series = FSeries::up_to(n_max);
    let mut parts = Vec::new();
    for n in 0..=n_max {
        let main = series.f(n);
        for (label, alt) in [
            ("first", fpoly::f_poly_alt1(n)?),
            ("second", fpoly::f_poly_alt2(n)?),
        ] {
            if alt.rational_coeffs() != main.rational_coeffs() {
                parts.push(CheckReport::failed(
                    format!("f-{label}-alternative"),
                    1,
                    &[("n", n as i64)],
                    format!("{} vs {}", alt.display_with("t"), main.display_with("t")),
                ));
            }
        }
        for (t1, t2) in [(1, 1), (2, -3), (-1, 4), (5, 7)] {
            parts.push(fpoly::check_addition_formula(&series, n, t1, t2));
        }
    }
    parts.push(CheckReport::passed("f-alternatives", 2 * (n_max + 1)));
    Ok(Outcome::new().check(CheckReport::combine("f-recurrences", parts)))
}

fn f_factorization(p: &Params) -> Result<Outcome> {
    let n_max = p.get("n");
    let series = FSeries::up_to(n_max);
    let mut parts = Vec::new();
    for prime in [2, 3, 5, 7] {
        for n in 0..=n_max {
            parts.push(fpoly::check_g_factorization(&series, n, prime)?);
        }
    }
    Ok(Outcome::new().check(CheckReport::combine("g-factorization", parts)))
}

fn log_series(p: &Params) -> Result<Outcome> {
    let n_max = p.get("n");
    let mut parts = Vec::new();
    for k in 2..=p.get("k") {
        let formal = fpoly::formal_log_coeffs(k, n_max);
        let mut failure = None;
        for n in 1..=n_max {
            let closed = fpoly::log_coeff_base(k, n)?;
            if closed != formal[n as usize] {
                failure = Some((
                    vec![("k", k as i64), ("n", n as i64)],
                    format!("{closed} vs {}", formal[n as usize]),
                ));
                break;
            }
        }
        parts.push(CheckReport::from_outcome(
            format!("base-{k}"),
            n_max,
            failure,
        ));
    }
    // The base-2 series is the logarithm of F itself: compare against
    // n f_n'(0) = n a(1, n).
    let table = CoeffTable::up_to(n_max);
    let mut failure = None;
    for n in 1..=n_max {
        if table.a(1, n)? != fpoly::log_coeff(n)? {
            failure = Some((
                vec![("n", n as i64)],
                "a(1, n) differs from the log coefficient".to_string(),
            ));
            break;
        }
    }
    parts.push(CheckReport::from_outcome("log-of-f", n_max, failure));
    Ok(Outcome::new().check(CheckReport::combine("log-series", parts)))
}

fn t_oracle(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut parts = Vec::new();
    for m in 1..=p.get("m") {
        let rec = TmSeq::with_max(m, n)?;
        let oracle = tm::tm_oracle(m, n)?;
        parts.push(seq_mismatch(
            format!("t{m}"),
            vec![("m", m as i64)],
            rec.values(),
            &oracle,
        ));
    }
    Ok(Outcome::new().check(CheckReport::combine("t-oracle", parts)))
}

fn t_parity(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut parts = Vec::new();
    for m in 1..=p.get("m") {
        parts.push(tm::check_parity_t(&TmSeq::with_max(m, n)?, n));
    }
    Ok(Outcome::new().check(CheckReport::combine("t-parity", parts)))
}

fn t_v2_pow2(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut out = Outcome::new();
    for k in 1..=p.get_u32("k")? {
        out = out.check(tm::check_v2_t2k(k, n)?);
    }
    Ok(out)
}

fn t3_v2(p: &Params) -> Result<Outcome> {
    Ok(Outcome::new().check(tm::check_v2_t3(p.get("n"))?))
}

fn t3_zeros(p: &Params) -> Result<Outcome> {
    let count = p.get("count") as usize;
    let zeros = tm::t3_zero_seq(count);
    let seq = TmSeq::with_max(3, zeros.last().copied().unwrap_or(0))?;
    let bad = zeros
        .iter()
        .position(|&n| !num_traits::Zero::is_zero(seq.at(n)));
    let direct = CheckReport::from_outcome(
        "t3-vanishes",
        count as u64,
        bad.map(|k| {
            (
                vec![("k", k as i64 + 1), ("n", zeros[k] as i64)],
                "t_3 is not 0".to_string(),
            )
        }),
    );
    Ok(Outcome::new()
        .check(direct)
        .check(tm::check_t3_reducibility_witness(count)?)
        .observe("zeros", zeros))
}

fn t2_coverage(p: &Params) -> Result<Outcome> {
    let bound = p.get("target") as i64;
    let mut sols = Vec::new();
    for target in (-bound..=bound).filter(|&t| t != 0) {
        sols.push(tm::t2_solve(target, SolveOptions::default())?);
    }
    let top = sols.iter().map(|s| s.n).max().unwrap_or(0);
    let t2 = tm::t2_prefix(top);
    let bad = sols
        .iter()
        .find(|s| t2[s.n as usize] != s.target || t2[..s.n as usize].contains(&s.target));
    let report = CheckReport::from_outcome(
        "t2-least-solution",
        sols.len() as u64,
        bad.map(|s| {
            (
                vec![("target", s.target), ("n", s.n as i64)],
                "not the least solution".to_string(),
            )
        }),
    );
    let hardest = sols
        .iter()
        .max_by_key(|s| (s.n, std::cmp::Reverse(s.target)))
        .map(|s| json!([s.target, s.n]));
    Ok(Outcome::new()
        .check(report)
        .observe("largest-least-n", hardest.unwrap_or_default()))
}

fn t2_identities(p: &Params) -> Result<Outcome> {
    Ok(checks([
        tm::check_symmetry(p.get("symmetry")),
        tm::check_t2_mod4(p.get("n")),
        tm::check_kinf(p.get("shift")),
    ]))
}

fn t_extrema(p: &Params) -> Result<Outcome> {
    let k_max = p.get_u32("k")?;
    let mut parts = Vec::new();
    let s2 = TmSeq::with_max(2, 1 << k_max)?;
    for k in 3..=k_max {
        parts.push(tm::check_maxmin(&s2, k)?);
    }
    let s3 = TmSeq::with_max(3, 1 << k_max)?;
    for k in 1..=k_max {
        parts.push(tm::check_maxmin(&s3, k)?);
    }
    Ok(Outcome::new().check(CheckReport::combine("t-extrema", parts)))
}

fn t2_inequalities(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let t2 = tm::t2_prefix(n + 1);
    let s2 = TmSeq::with_max(2, n + 1)?;
    let s3 = TmSeq::with_max(3, n)?;
    Ok(checks([
        tm::check_growth(&s2, n),
        tm::check_growth(&s3, n),
        tm::check_mean(&t2, n),
        tm::check_logconcave(&t2, n),
        tm::check_signs(&s2, n),
    ]))
}

fn t_appendix(p: &Params) -> Result<Outcome> {
    Ok(Outcome::new().check(tm::check_nonvanishing(p.get("n"))?))
}

fn b_oracle(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut parts = Vec::new();
    for m in 1..=p.get("m") {
        let rec = BmSeq::with_max(m, n)?;
        let w = vec![("m", m as i64)];
        parts.push(seq_mismatch(
            format!("b{m}-alt"),
            w.clone(),
            rec.values(),
            &bm::bm_alt(m, n)?,
        ));
        parts.push(seq_mismatch(
            format!("b{m}-oracle"),
            w,
            rec.values(),
            &bm::bm_oracle(m, n)?,
        ));
    }
    Ok(Outcome::new().check(CheckReport::combine("b-oracle", parts)))
}

fn b_turan(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    Ok(checks([bm::check_turan_b(1, n)?, bm::check_turan_b(2, n)?]))
}

fn b_parity(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut parts = Vec::new();
    for m in 1..=p.get("m") {
        parts.push(bm::check_parity_b(m, n)?);
    }
    Ok(Outcome::new().check(CheckReport::combine("b-parity", parts)))
}

fn b_v2(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut out = Outcome::new().check(bm::check_churchhouse(p.get("churchhouse")));
    for k in 1..=p.get_u32("k")? {
        out = out.check(bm::check_v2_b2k1(k, n)?);
    }
    Ok(out)
}

fn b_prime_powers(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut out = Outcome::new();
    for (prime, s) in [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2)] {
        out = out.check(bm::check_prime_power_congruences(prime, s, n)?);
    }
    for (r, prime, s) in [
        (1, 3, 1),
        (1, 5, 1),
        (2, 3, 1),
        (3, 5, 1),
        (1, 2, 3),
        (1, 3, 2),
    ] {
        out = out.check(bm::check_prime_power_colors(r, prime, s, n)?);
    }
    Ok(out)
}

fn b_convolution(p: &Params) -> Result<Outcome> {
    let n = p.get("n");
    let mut out = Outcome::new().check(bm::check_short_sum_congruences(p.get("short"))?);
    for m in 2..=p.get("m") {
        out = out.check(bm::check_derivative_convolution(m, n)?);
    }
    for k in 0..=p.get_u32("k")? {
        out = out.check(bm::check_ptm_bridge(k, n)?);
    }
    Ok(out)
}

fn h_polys(p: &Params) -> Result<Outcome> {
    let mut table = HPolyTable::new();
    let mut parts = Vec::new();
    for k in 1..=p.get_u32("k")? {
        for m in 1..=p.get("m") {
            for i in 0..1u64 << k {
                parts.push(bm::check_h_identity(&mut table, i, k, m)?);
            }
        }
    }
    let mut out = Outcome::new()
        .check(CheckReport::combine("h-identity", parts))
        .check(bm::check_h_anchors(&mut table)?);
    for (prime, s) in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2)] {
        for k in 1..=2 {
            out = out.check(bm::check_h_mod_p(&mut table, prime, s, k)?);
        }
    }
    Ok(out)
}

fn h_divisibility(p: &Params) -> Result<Outcome> {
    let mut table = HPolyTable::new();
    let k = p.get_u32("k")?;
    Ok(checks([
        bm::check_8x1_divisibility(&mut table, k)?,
        bm::check_palindromic_basis(&mut table, k)?,
        bm::check_binomial_4div(p.get("binomial")),
    ]))
}

fn v_operators(p: &Params) -> Result<Outcome> {
    let mut table = HPolyTable::new();
    Ok(checks([
        bm::check_annihilation(&mut table, 1, p.get("m1"))?,
        bm::check_annihilation(&mut table, 2, p.get("m2"))?,
        bm::check_factor_commutation(&mut table, p.get("m2"))?,
        bm::check_g_closed_forms(&mut table, p.get("order"))?,
    ]))
}

fn b2_valuations(p: &Params) -> Result<Outcome> {
    let mut table = HPolyTable::new();
    Ok(Outcome::new().check(bm::check_b2_valuation_table(&mut table, p.get("n"))?))
}

fn t5_valuation(p: &Params) -> Result<Outcome> {
    cj::t_valuation_formula(5, 2, 4, 1, p.get("n"))
}

fn t9_valuation(p: &Params) -> Result<Outcome> {
    cj::t_valuation_formula(9, 3, 5, 2, p.get("n"))
}

fn pow2plus1_table(p: &Params) -> Result<Outcome> {
    cj::t_pow2plus1_table(p.get_u32("k")?, p.get("n"))
}

fn t_v2_regular(p: &Params) -> Result<Outcome> {
    cj::t_v2_regular(p.get("m"), p.get_u32("levels")?, p.get("n"))
}

fn b_v2_unbounded(p: &Params) -> Result<Outcome> {
    cj::b_v2_unbounded(p.get("m"), p.get("n"))
}

fn b_pow2(p: &Params) -> Result<Outcome> {
    cj::b_pow2_congruence(
        |m| 1 << m,
        |k| k,
        p.get_u32("m")?,
        p.get_u32("k")?,
        p.get("n"),
    )
}

fn b_pow2m1(p: &Params) -> Result<Outcome> {
    cj::b_pow2_congruence(
        |m| (1 << m) - 1,
        |k| 4 * k.div_ceil(2) - 2,
        p.get_u32("m")?,
        p.get_u32("k")?,
        p.get("n"),
    )
}

fn b_fk(p: &Params) -> Result<Outcome> {
    cj::b_congruence_fk(p.get("m"), p.get("n"))
}

fn t_sign_density(p: &Params) -> Result<Outcome> {
    cj::t_sign_density(p.get("m"), p.get("n"))
}

fn t_three_signs(p: &Params) -> Result<Outcome> {
    cj::t_three_signs(p.get("m"), p.get("n"))
}

fn b_turan_m4(p: &Params) -> Result<Outcome> {
    cj::b_turan_m4plus(p.get("m"), p.get("n"))
}

fn b3_crossover(p: &Params) -> Result<Outcome> {
    cj::b3_turan_crossover(p.get("n"))
}

fn t_zero_m4(p: &Params) -> Result<Outcome> {
    cj::t_zero_m4plus(p.get("m"), p.get("n"))
}

fn t_values_missing(p: &Params) -> Result<Outcome> {
    cj::t_values_missing(p.get("m"), p.get("window"), p.get("n"))
}

fn t_unbounded(p: &Params) -> Result<Outcome> {
    cj::t_unbounded(p.get("m"), p.get("n"))
}

use Severity::{Conjecture, Question, Theorem};

const fn campaign(
    name: &'static str,
    severity: Severity,
    statement: &'static str,
    defaults: &'static [(&'static str, u64)],
    body: fn(&Params) -> Result<Outcome>,
) -> Campaign {
    Campaign {
        name,
        severity,
        statement,
        defaults,
        min_n: 0,
        body,
    }
}

const fn with_min_n(mut c: Campaign, min_n: u64) -> Campaign {
    c.min_n = min_n;
    c
}

static CAMPAIGNS: &[Campaign] = &[
    campaign(
        "f-closed-forms",
        Theorem,
        "outer coefficients a(0,n), a(1,n), a(n,n), a(n-1,n), a(n-2,n) of f_n; W_k interpolation",
        &[("n", 100), ("w", 6)],
        f_closed_forms,
    ),
    campaign(
        "f-recurrences",
        Theorem,
        "both alternative recurrences for f_n and the addition formula f_n(t1+t2) = sum f_k(t1) f_(n-k)(t2)",
        &[("n", 30)],
        f_recurrences,
    ),
    campaign(
        "f-factorization",
        Theorem,
        "g_n(t) = g_(n mod p)(t) (t - t^p)^floor(n/p) mod p for p in {2,3,5,7}",
        &[("n", 60)],
        f_factorization,
    ),
    campaign(
        "log-series",
        Theorem,
        "closed form of the coefficients of log prod (1 - x^(k^j)) for bases 2..=k",
        &[("n", 200), ("k", 5)],
        log_series,
    ),
    campaign(
        "t-oracle",
        Theorem,
        "the t_m recurrences agree with the m-fold Thue-Morse convolution",
        &[("n", 60), ("m", 6)],
        t_oracle,
    ),
    campaign(
        "t-parity",
        Theorem,
        "t_m(n) = C(n+m-1, m-1) mod 2",
        &[("n", 4096), ("m", 8)],
        t_parity,
    ),
    campaign(
        "t-v2-pow2",
        Theorem,
        "closed form of nu2(t_(2^k)(n))",
        &[("n", 1 << 14), ("k", 4)],
        t_v2_pow2,
    ),
    campaign(
        "t3-v2",
        Theorem,
        "base-4 digit formula for nu2(t_3(n)), infinite exactly on the zero set",
        &[("n", 1 << 14)],
        t3_v2,
    ),
    campaign(
        "t3-zeros",
        Theorem,
        "t_3 vanishes on the zero sequence a_k and f_(a_k)(3) = 0",
        &[("count", 10)],
        t3_zeros,
    ),
    campaign(
        "t2-coverage",
        Theorem,
        "every nonzero integer in [-target, target] is a value of t_2",
        &[("target", 50)],
        t2_coverage,
    ),
    campaign(
        "t2-identities",
        Theorem,
        "symmetry t_2(n') = -t_2(n), t_2(2n) = 1 + 2n mod 4, and the shift family of t_2",
        &[("n", 1 << 16), ("symmetry", 100_000), ("shift", 1 << 12)],
        t2_identities,
    ),
    campaign(
        "t-extrema",
        Theorem,
        "closed forms for max and min of t_2, t_3 on [0, 2^k] and their indices",
        &[("k", 16)],
        t_extrema,
    ),
    campaign(
        "t-inequalities",
        Theorem,
        "growth bound, mean inequality, strict log-concavity of t_2 and no three equal signs",
        &[("n", 1 << 16)],
        t2_inequalities,
    ),
    campaign(
        "t-appendix",
        Theorem,
        "multinomial identities for t_m(n) and non-vanishing above n^2/log 2",
        &[("n", 8)],
        t_appendix,
    ),
    campaign(
        "b-oracle",
        Theorem,
        "both recurrence pairs for b_m agree with the m-fold convolution of b",
        &[("n", 60), ("m", 5)],
        b_oracle,
    ),
    campaign(
        "b-turan",
        Theorem,
        "Turan-type identities and sign alternation for b_1 and b_2",
        &[("n", 512)],
        b_turan,
    ),
    campaign(
        "b-parity",
        Theorem,
        "b_m(n) modulo 2^(nu2(m)+2)",
        &[("n", 4096), ("m", 8)],
        b_parity,
    ),
    campaign(
        "b-v2",
        Theorem,
        "Churchhouse formula for nu2(b(n)) and the piecewise table of nu2(b_(2^k-1)(n))",
        &[("n", 1 << 14), ("k", 3), ("churchhouse", 1 << 16)],
        b_v2,
    ),
    campaign(
        "b-prime-powers",
        Theorem,
        "congruences of b_(p^s) and b_(r p^s) modulo p",
        &[("n", 512)],
        b_prime_powers,
    ),
    with_min_n(
        campaign(
            "b-convolution",
            Theorem,
            "n b_m(n) convolution identity, short-sum congruences and the Thue-Morse bridge",
            &[("n", 256), ("m", 6), ("k", 3), ("short", 1 << 12)],
            b_convolution,
        ),
        1,
    ),
    campaign(
        "h-polys",
        Theorem,
        "defining identity of h_{i,k,m}, anchor values and reductions mod p",
        &[("k", 3), ("m", 6)],
        h_polys,
    ),
    campaign(
        "h-divisibility",
        Theorem,
        "8(x+1) divides the level-k numerators, palindromic basis coefficients, C(2^m, j) mod 8",
        &[("k", 6), ("binomial", 10)],
        h_divisibility,
    ),
    campaign(
        "v-operators",
        Theorem,
        "V_1 and V_2 annihilate (h_{i,k,m})_m, V_2 factors, G_{0,1} and G_{1,1} closed forms",
        &[("m1", 40), ("m2", 12), ("order", 12)],
        v_operators,
    ),
    with_min_n(
        campaign(
            "b2-valuation-table",
            Theorem,
            "listed residue classes with constant nu2(b_2), with polynomial certificates",
            &[("n", 1 << 14)],
            b2_valuations,
        ),
        256,
    ),
    campaign(
        "t-v2-regular",
        Question,
        "is nu2(t_m(n)) 2-regular? distinct kernel subsequences per level",
        &[("n", 1 << 12), ("m", 7), ("levels", 4)],
        t_v2_regular,
    ),
    campaign(
        "t5-valuation",
        Conjecture,
        "nu2(t_5(4n+j)) = 4 ceil(v/2) - (v mod 2), v = nu2(n+1)",
        &[("n", 1 << 12)],
        t5_valuation,
    ),
    campaign(
        "t9-valuation",
        Conjecture,
        "nu2(t_9(8n+j)) = 5 ceil(v/2) - 2 (v mod 2), v = nu2(n+1)",
        &[("n", 1 << 12)],
        t9_valuation,
    ),
    campaign(
        "t-pow2plus1-table",
        Conjecture,
        "nu2(t_(2^k+1)(2^k n + j)) = A_{k, nu2(n+1)} with A_{k,0} = 0 strictly increasing",
        &[("n", 1 << 12), ("k", 4)],
        pow2plus1_table,
    ),
    campaign(
        "b-v2-unbounded",
        Conjecture,
        "nu2(b_m(n)) is unbounded when m is not 2^k - 1: largest valuation found",
        &[("n", 1 << 12), ("m", 10)],
        b_v2_unbounded,
    ),
    campaign(
        "b-pow2-congruence",
        Conjecture,
        "b_(2^m)(2^(k+1) n) = b_(2^m)(2^(k-1) n) mod 2^k for k >= m + 2",
        &[("n", 1 << 12), ("m", 3), ("k", 60)],
        b_pow2,
    ),
    campaign(
        "b-pow2m1-congruence",
        Conjecture,
        "b_(2^m-1)(2^(k+1) n) = b_(2^m-1)(2^(k-1) n) mod 2^(4 floor((k+1)/2) - 2) for k >= m + 2",
        &[("n", 1 << 12), ("m", 3), ("k", 60)],
        b_pow2m1,
    ),
    campaign(
        "b-congruence-fk",
        Conjecture,
        "b_m(2^(k+1) n) = b_m(2^(k-1) n) mod 2^f(k) with f(k) = O(k): empirical f",
        &[("n", 1 << 12), ("m", 8)],
        b_fk,
    ),
    campaign(
        "t-sign-density",
        Conjecture,
        "sgn t_m(3n+j) != (-1)^j on a set of density 0: counts at dyadic checkpoints",
        &[("n", 1 << 14), ("m", 6)],
        t_sign_density,
    ),
    campaign(
        "t-three-signs",
        Conjecture,
        "t_m(n-1), t_m(n), t_m(n+1) never share a sign and t_m(n)^2 > t_m(n-1) t_m(n+1)",
        &[("n", 1 << 12), ("m", 6)],
        t_three_signs,
    ),
    campaign(
        "b-turan-m4plus",
        Conjecture,
        "b_m(n)^2 - b_m(n-1) b_m(n+1) > 0 for m >= 4",
        &[("n", 1 << 12), ("m", 8)],
        b_turan_m4,
    ),
    with_min_n(
        campaign(
            "b3-turan-crossover",
            Conjecture,
            "(-1)^n D_3(n) > 0 up to some n0 and D_3(n) > 0 beyond, D_3(n) = b_3(n)^2 - b_3(n-1) b_3(n+1)",
            &[("n", 1 << 12)],
            b3_crossover,
        ),
        1,
    ),
    campaign(
        "t-zero-m4plus",
        Conjecture,
        "t_m(n) != 0 for m >= 4 and n >= 1",
        &[("n", 1 << 14), ("m", 8)],
        t_zero_m4,
    ),
    campaign(
        "t-values-missing",
        Conjecture,
        "for m >= 3 infinitely many integers are not values of t_m: values missing from a window",
        &[("n", 1 << 14), ("m", 6), ("window", 100)],
        t_values_missing,
    ),
    campaign(
        "t-unbounded",
        Question,
        "t_m unbounded above implies unbounded below: running extremes",
        &[("n", 1 << 14), ("m", 6)],
        t_unbounded,
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::campaign::Status;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = campaigns().iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), campaigns().len());
    }

    #[test]
    fn unknown_inputs_rejected() {
        assert!(find("nope").is_err());
        let mut b = Bounds::new();
        b.insert("zzz".into(), 1);
        assert!(find("t5-valuation").unwrap().resolve(&b).is_err());
        b.clear();
        b.insert("n".into(), 10);
        assert!(find("b2-valuation-table").unwrap().resolve(&b).is_err());
    }

    #[test]
    fn small_theorem_runs_pass() {
        let mut b = Bounds::new();
        b.insert("n".into(), 40);
        let r = run_campaign("t-oracle", &b).unwrap();
        assert_eq!(r.status, Status::VerifiedToBound);
        assert_eq!(r.bounds["m"], 6);
    }

    #[test]
    fn replay_reproduces_counterexample() {
        let mut b = Bounds::new();
        b.insert("n".into(), 1 << 9);
        let r = run_campaign("b-pow2m1-congruence", &b).unwrap();
        assert_eq!(r.status, Status::Counterexample);
        let again = replay(&r).unwrap();
        assert_eq!(again.status, Status::Counterexample);
        assert_eq!(
            again.first_failure().unwrap().counterexample,
            r.first_failure().unwrap().counterexample
        );
    }
}
