//! `ptmpow`: compute and verify the coefficient families of powers of the
//! Thue-Morse generating function.

mod args;
mod output;

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use ptmpow::arith::nu2_int;
use ptmpow::bm::{h_poly, BmSeq};
use ptmpow::fpoly::{w_poly, FSeries};
use ptmpow::harness::{self, Bounds, CachedPrefix, CampaignReport, Family, Severity};
use ptmpow::tm::{self, SolveOptions, TmSeq};
use ptmpow::{Error, Result};

use args::{CacheCmd, Cli, Command, Format, PolyKind, SearchCmd, SeqFamily};
use output::Table;

/// Exit code for bad arguments and unusable input.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    #[cfg(feature = "parallel")]
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    if cli.jobs.is_some_and(|j| j != 1) {
        eprintln!("warning: built without the parallel feature; --jobs ignored");
    }

    let (text, code) = match cli.command {
        Command::Seq { family, m, range } => (
            seq(family, m, range, cli.format, cli.cache_dir.as_deref())?,
            0,
        ),
        Command::Val { family, m, range } => (val(family, m, range, cli.format)?, 0),
        Command::Poly { kind } => (poly(kind, cli.format)?, 0),
        Command::Verify {
            campaigns,
            list,
            bound,
            set,
            out,
            replay,
        } => {
            if list {
                (list_campaigns(cli.format), 0)
            } else {
                verify(&campaigns, bound, &set, out.as_deref(), replay, cli.format)?
            }
        }
        Command::Search { what } => (search(what, cli.format)?, 0),
        Command::Cache { action } => (cache(action, cli.format)?, 0),
    };
    let mut stdout = io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    stdout.flush()?;
    Ok(code)
}

fn seq(
    family: SeqFamily,
    m: u64,
    range: args::IndexRange,
    format: Format,
    cache_dir: Option<&std::path::Path>,
) -> Result<String> {
    let mut table = Table::new(&["n", "value"]);
    match family {
        SeqFamily::T | SeqFamily::B => {
            let fam = if family == SeqFamily::T {
                Family::T
            } else {
                Family::B
            };
            let values = match cache_dir {
                Some(dir) => harness::load_or_compute(dir, fam, m, range.end + 1)?.values,
                None => CachedPrefix::compute(fam, m, range.end + 1)?.values,
            };
            for n in range.start..=range.end {
                table.row(vec![n.to_string(), values[n as usize].to_string()]);
            }
        }
        SeqFamily::FEval => {
            let series = FSeries::up_to(range.end);
            let at =
                i64::try_from(m).map_err(|_| Error::InvalidArgument("t is too large".into()))?;
            for n in range.start..=range.end {
                table.row(vec![n.to_string(), series.f(n).eval_int(at).to_string()]);
            }
        }
    }
    Ok(table.render(format))
}

fn val(family: SeqFamily, m: u64, range: args::IndexRange, format: Format) -> Result<String> {
    let values = match family {
        SeqFamily::T => TmSeq::with_max(m, range.end)?.values().to_vec(),
        SeqFamily::B => BmSeq::with_max(m, range.end)?.values().to_vec(),
        SeqFamily::FEval => return Err(Error::InvalidArgument("val takes t or b".into())),
    };
    let mut table = Table::new(&["n", "nu2"]);
    for n in range.start..=range.end {
        table.row(vec![
            n.to_string(),
            nu2_int(&values[n as usize]).to_string(),
        ]);
    }
    Ok(table.render(format))
}

fn poly(kind: PolyKind, format: Format) -> Result<String> {
    let (label, var, coeffs, text) = match kind {
        PolyKind::F { n } => {
            let f = FSeries::up_to(n).f(n);
            let coeffs = f
                .rational_coeffs()
                .iter()
                .map(ToString::to_string)
                .collect();
            (format!("f_{n}"), "t", coeffs, f.display_with("t"))
        }
        PolyKind::G { n } => {
            let g = FSeries::up_to(n).g(n).clone();
            let text = g.display_with("t");
            (format!("g_{n}"), "t", decimal(g.coeffs()), text)
        }
        PolyKind::H { i, k, m } => {
            let h = h_poly(i, k, m)?;
            let text = h.display_with("x");
            (format!("h_{{{i},{k},{m}}}"), "x", decimal(h.coeffs()), text)
        }
        PolyKind::W { k } => {
            let w = w_poly(k)?;
            let text = w.display_with("n");
            (format!("W_{k}"), "n", decimal(w.coeffs()), text)
        }
    };
    Ok(match format {
        Format::Text => format!("{label} = {text}\n"),
        Format::Csv => {
            let mut table = Table::new(&["power", "coefficient"]);
            for (i, c) in coeffs.iter().enumerate() {
                table.row(vec![i.to_string(), c.clone()]);
            }
            table.render(Format::Csv)
        }
        Format::Json => output::json_line(&serde_json::json!({
            "name": label,
            "variable": var,
            "coefficients": coeffs,
            "text": text,
        })),
    })
}

fn decimal(cs: &[num_bigint::BigInt]) -> Vec<String> {
    cs.iter().map(ToString::to_string).collect()
}

fn list_campaigns(format: Format) -> String {
    let mut table = Table::new(&["campaign", "severity", "bounds", "statement"]);
    for c in harness::campaigns() {
        let bounds: Vec<String> = c.defaults.iter().map(|(k, v)| format!("{k}={v}")).collect();
        table.row(vec![
            c.name.into(),
            c.severity.to_string(),
            bounds.join(" "),
            c.statement.into(),
        ]);
    }
    table.render(format)
}

/// Expands `all`, `theorems` and `conjectures` (conjectures and
/// questions) and removes duplicates while keeping the order.
fn select(names: &[String]) -> Result<Vec<&'static harness::Campaign>> {
    if names.is_empty() {
        return Err(Error::InvalidArgument(
            "name at least one campaign (or all, theorems, conjectures)".into(),
        ));
    }
    let mut out: Vec<&'static harness::Campaign> = Vec::new();
    let mut seen = BTreeSet::new();
    for name in names {
        let group: Vec<&'static harness::Campaign> = match name.as_str() {
            "all" => harness::campaigns().iter().collect(),
            "theorems" => harness::campaigns()
                .iter()
                .filter(|c| c.severity == Severity::Theorem)
                .collect(),
            "conjectures" => harness::campaigns()
                .iter()
                .filter(|c| c.severity != Severity::Theorem)
                .collect(),
            other => vec![harness::find(other)?],
        };
        for c in group {
            if seen.insert(c.name) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

fn verify(
    names: &[String],
    bound: Option<u64>,
    set: &[(String, u64)],
    out: Option<&std::path::Path>,
    replay: bool,
    format: Format,
) -> Result<(String, u8)> {
    let selected = select(names)?;
    let accepts = |c: &harness::Campaign, key: &str| c.defaults.iter().any(|d| d.0 == key);
    if bound.is_some() && !selected.iter().any(|c| accepts(c, "n")) {
        return Err(Error::InvalidArgument(
            "--bound: no selected campaign has an n bound".into(),
        ));
    }
    for (key, _) in set {
        if !selected.iter().any(|c| accepts(c, key)) {
            return Err(Error::InvalidArgument(format!(
                "--set {key}: no selected campaign has that bound"
            )));
        }
    }
    let mut reports = Vec::new();
    for c in &selected {
        let mut overrides = Bounds::new();
        if let Some(n) = bound.filter(|_| accepts(c, "n")) {
            overrides.insert("n".into(), n);
        }
        for (key, value) in set.iter().filter(|(k, _)| accepts(c, k)) {
            overrides.insert(key.clone(), *value);
        }
        let report = c.run(&overrides)?;
        eprintln!(
            "{}: {} ({} ms)",
            report.name,
            report.status,
            report.wall_ms.unwrap_or(0)
        );
        reports.push(report);
    }
    let replays = if replay {
        reports
            .iter()
            .filter(|r| r.first_failure().is_some())
            .map(|r| Ok((r.name.clone(), harness::replay(r)?)))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&reports)? + "\n")?;
    }
    let code = harness::exit_code(&reports) as u8;
    let deterministic: Vec<CampaignReport> = reports
        .into_iter()
        .map(|r| CampaignReport { wall_ms: None, ..r })
        .collect();
    let mut text = output::render_reports(&deterministic, format);
    for (name, again) in replays {
        let original = deterministic
            .iter()
            .find(|r| r.name == name)
            .expect("replayed report exists");
        let witness = |r: &CampaignReport| {
            r.first_failure()
                .and_then(|c| c.counterexample.as_ref())
                .map(|cx| cx.witness.clone())
        };
        let same = witness(&again) == witness(original);
        let line = format!(
            "replay {name}: {} at {} -> {}\n",
            again.status,
            output::bounds_text(&again.bounds),
            if same {
                "same witness"
            } else {
                "DIFFERENT witness"
            }
        );
        if format == Format::Json {
            eprint!("{line}");
        } else {
            text.push_str(&line);
        }
    }
    Ok((text, code))
}

fn search(what: SearchCmd, format: Format) -> Result<String> {
    match what {
        SearchCmd::T2 { targets } => {
            let mut table = Table::new(&["target", "n", "found_by", "shifted"]);
            for target in targets {
                let s = tm::t2_solve(target, SolveOptions::default())?;
                let shifted = s.shifted.map(|v| v.to_string()).unwrap_or_default();
                table.row(vec![
                    s.target.to_string(),
                    s.n.to_string(),
                    s.found_by,
                    shifted,
                ]);
            }
            Ok(table.render(format))
        }
        SearchCmd::T3Zeros { count } => {
            let mut table = Table::new(&["k", "n"]);
            for (k, n) in tm::t3_zero_seq(count).into_iter().enumerate() {
                table.row(vec![(k + 1).to_string(), n.to_string()]);
            }
            Ok(table.render(format))
        }
    }
}

fn cache(action: CacheCmd, format: Format) -> Result<String> {
    let (prefix, path) = match action {
        CacheCmd::Store {
            family,
            m,
            count,
            path,
        } => {
            let prefix = CachedPrefix::compute(family, m, count)?;
            harness::cache_store(&prefix, &path)?;
            (prefix, path)
        }
        CacheCmd::Load { path } => (harness::cache_load(&path)?, path),
    };
    let last = prefix
        .values
        .last()
        .map(ToString::to_string)
        .unwrap_or_default();
    let mut table = Table::new(&["path", "family", "m", "count", "last"]);
    table.row(vec![
        path.display().to_string(),
        prefix.family.to_string(),
        prefix.m.to_string(),
        prefix.values.len().to_string(),
        last,
    ]);
    Ok(table.render(format))
}
