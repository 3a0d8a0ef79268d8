mod args;

use anyhow::{Context, Result};
use args::{Cli, Command, DistanceArgs, DistanceMode, Emit, EngineArg, Format, SuiteArg};
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use seqcodes_core::bounds::Verdict;
use seqcodes_core::cosets::max_h;
use seqcodes_core::report::{table_rows, CodeReport, TableRow};
use seqcodes_core::sequences::{berlekamp_massey, dft_support, trinomial_sequence, inverse_sequence};
use seqcodes_core::verify::{run_suite, Check, Suite};
use seqcodes_core::{CodeId, CosetTable, DistanceOptions, Engine, Error, Family, FieldSpec};
use std::io::Write;
use std::process::ExitCode;

const THREADS_ENV: &str = "SEQCODES_THREADS";

/// Failure classes mapped to exit codes.
enum Failure {
    Verification,
    Usage(String),
    Runtime(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn classify(e: anyhow::Error) -> Failure {
    let single = format!("{e:#}").replace('\n', " ");
    match e.downcast_ref::<Error>() {
        Some(Error::DimensionTooLarge { .. } | Error::CorruptTable { .. }) | None => Failure::Runtime(single),
        Some(_) => Failure::Usage(single),
    }
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize =
            v.parse().map_err(|_| Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    let mut out = Vec::new();
    let ok = execute(&cli, &mut out).map_err(classify)?;
    write_output(&cli, &out).map_err(classify)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_output(cli: &Cli, bytes: &[u8]) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Runs the command into `out`; returns `false` when a verification failed.
fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<bool> {
    match &cli.command {
        Command::Code { family, m, h, parity, distance } => {
            let ids = code_ids(*family, *m, *h, *parity)?;
            let opts = distance_options(distance);
            let mut reports = Vec::with_capacity(ids.len());
            for id in ids {
                reports.push(CodeReport::build(id, opts.as_ref())?);
            }
            emit_reports(cli.format, &reports, out)?;
            Ok(true)
        }
        Command::Table { which, max_m, distance } => {
            let rows = table_rows(*which, *max_m, distance_options(distance).as_ref())?;
            emit_table(cli.format, *which, &rows, out)?;
            Ok(true)
        }
        Command::Verify { suite, max_m } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Counts => vec![Suite::Counts],
                SuiteArg::Lemmas => vec![Suite::Lemmas],
                SuiteArg::Duality => vec![Suite::Duality],
                SuiteArg::Sequences => vec![Suite::Sequences],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut checks = Vec::new();
            for s in suites {
                checks.extend(run_suite(s, *max_m)?);
            }
            emit_checks(cli.format, &checks, out)?;
            Ok(checks.iter().all(|c| !c.failed()))
        }
        Command::Seq { m, h, emit } => {
            emit_sequence(cli.format, *m, *h, *emit, out)?;
            Ok(true)
        }
    }
}

fn code_ids(family: Family, m: (u32, u32), h: Option<(u32, u32)>, parity: Option<u8>) -> Result<Vec<CodeId>> {
    let parities: Vec<u8> = parity.map_or(vec![1, 0], |p| vec![p]);
    let mut ids = Vec::new();
    for m in m.0..=m.1 {
        if !(2..=26).contains(&m) {
            return Err(Error::DegreeOutOfRange(m).into());
        }
        for &p in &parities {
            match family {
                Family::D => {
                    let (lo, hi) = h.unwrap_or((1, max_h(m)));
                    for h in lo..=hi {
                        ids.push(CodeId::d(m, h, p));
                    }
                }
                Family::S => ids.push(CodeId::s(m, p)),
                Family::TangDing => ids.push(CodeId::tang_ding(m, p)),
            }
        }
    }
    for id in &ids {
        id.validate()?;
    }
    Ok(ids)
}

fn distance_options(a: &DistanceArgs) -> Option<DistanceOptions> {
    if a.distance == DistanceMode::None {
        return None;
    }
    let engine = match a.engine {
        EngineArg::Auto => Engine::Auto,
        EngineArg::Exhaustive => Engine::Exhaustive,
        EngineArg::Cyclic => Engine::Cyclic,
        EngineArg::Disjoint => Engine::Disjoint,
    };
    Some(DistanceOptions { engine, budget: a.budget, probe_iterations: a.probe_iterations, ..Default::default() })
}

fn csv_rows<T: Serialize>(rows: &[T], out: &mut Vec<u8>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn emit_reports(format: Format, reports: &[CodeReport], out: &mut Vec<u8>) -> Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                out.push(b'\n');
            }
        }
        Format::Csv => csv_rows(reports, out)?,
        Format::Text => {
            for r in reports {
                let id = CodeId { family: r.family, m: r.m, h: r.h, parity: r.parity };
                let d = match (r.d_exact, r.d_upper) {
                    (Some(d), _) => d.to_string(),
                    (None, Some(u)) => format!("{}..{} (unproven)", r.d_lower_bch, u),
                    (None, None) => format!("≥{}", r.d_lower_bch),
                };
                writeln!(out, "{id}: [{}, {}, {}]", r.n, r.k, d)?;
                writeln!(
                    out,
                    "  bch bound {} (multiplier {}, run from {}), closed-form bound {}",
                    r.d_lower_bch,
                    r.bch_witness_multiplier,
                    r.bch_run_start,
                    opt(&r.d_theorem)
                )?;
                if let Some(g) = &r.generator {
                    writeln!(out, "  generator {g}")?;
                    writeln!(out, "  generator hex {}", opt(&r.generator_hex))?;
                }
            }
        }
    }
    Ok(())
}

fn emit_table(format: Format, which: u8, rows: &[TableRow], out: &mut Vec<u8>) -> Result<()> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct JsonRow<'a> {
                #[serde(flatten)]
                row: &'a TableRow,
                reports: &'a [CodeReport; 2],
            }
            let v: Vec<JsonRow> = rows.iter().map(|r| JsonRow { row: r, reports: &r.reports }).collect();
            serde_json::to_writer_pretty(&mut *out, &v)?;
            out.push(b'\n');
        }
        Format::Csv => csv_rows(rows, out)?,
        Format::Text => {
            let (a, b) = if which == 1 { ("S1", "S0") } else { ("D1", "D0") };
            writeln!(out, "{:>3} {:>3} | {:>10} {:>7} | {:>10} {:>7}", "m", "h", format!("dim {a}"), "d", format!("dim {b}"), "d")?;
            for r in rows {
                writeln!(out, "{:>3} {:>3} | {:>10} {:>7} | {:>10} {:>7}", r.m, opt(&r.h), r.dim1, r.d1, r.dim0, r.d0)?;
            }
        }
    }
    Ok(())
}

fn emit_checks(format: Format, checks: &[Check], out: &mut Vec<u8>) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, checks)?;
            out.push(b'\n');
        }
        Format::Csv => csv_rows(checks, out)?,
        Format::Text => {
            for c in checks {
                let v = match c.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                    Verdict::Skip => "SKIP",
                };
                let h = c.h.map_or(String::new(), |h| format!(" h={h}"));
                let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
                writeln!(out, "{v} {} {} m={}{h}{detail}", c.suite, c.name, c.m)?;
            }
            let failed = checks.iter().filter(|c| c.failed()).count();
            writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SequenceOutput {
    m: u32,
    h: Option<u32>,
    period: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    bits_hex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    support_leaders: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    linear_complexity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minpoly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minpoly_hex: Option<String>,
}

fn emit_sequence(format: Format, m: u32, h: Option<u32>, emit: Emit, out: &mut Vec<u8>) -> Result<()> {
    let field = FieldSpec::new(m)?;
    let seq = match h {
        Some(h) => trinomial_sequence(&field, h)?,
        None => inverse_sequence(&field),
    };
    let mut o = SequenceOutput {
        m,
        h,
        period: seq.period(),
        bits_hex: None,
        support_leaders: None,
        linear_complexity: None,
        minpoly: None,
        minpoly_hex: None,
    };
    match emit {
        Emit::Bits => o.bits_hex = Some(seq.to_hex()),
        Emit::Support => {
            let table = CosetTable::new(m)?;
            let mut leaders: Vec<u64> = dft_support(&seq, &field)?.into_iter().map(|i| table.leader_of(i)).collect();
            leaders.sort_unstable();
            leaders.dedup();
            o.support_leaders = Some(leaders);
        }
        Emit::Minpoly => {
            let (l, p) = berlekamp_massey(&seq);
            o.linear_complexity = Some(l);
            o.minpoly = Some(p.to_monomials());
            o.minpoly_hex = Some(p.to_hex());
        }
    }
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &o)?;
            out.push(b'\n');
        }
        Format::Csv => csv_rows(&[o], out)?,
        Format::Text => {
            if let Some(b) = &o.bits_hex {
                let bits: String = seq.bits().iter().map(|b| char::from(b'0' + b)).collect();
                writeln!(out, "{bits}")?;
                writeln!(out, "hex {b}")?;
            }
            if let Some(s) = &o.support_leaders {
                let s: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{}", s.join(" "))?;
            }
            if let (Some(l), Some(p)) = (o.linear_complexity, &o.minpoly) {
                writeln!(out, "linear complexity {l}")?;
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(())
}
