//! Command-line front end: searches, verification suites, factorization,
//! and the self-dual dihedral table over Z/4Z.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use group_codes::jsonio::{
    certificate_to_json, group_of_report, ring_code_from_json, ring_code_to_json, CertificateJson,
    RingCodeJson,
};
use group_codes::poly::factor_xn_minus_1;
use group_codes::search::{verify_selfdual_witness, SearchOptions};
use group_codes::textio::{format_element_r, parse_element_f};
use group_codes::{
    lift_idempotent, run_suite, search_selfdual_dihedral_z4, ChainRingSpec, DistanceMode, Error,
    FAlgebraElement, FiniteGroup, RingFlavor, Suite,
};

const BUDGET_ENV: &str = "GROUP_CODES_BUDGET";

#[derive(Parser)]
#[command(name = "group-codes", version, about = "Group codes over finite chain rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Candidate budget for exhaustive scans (default: $GROUP_CODES_BUDGET
    /// or 2^30).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for partitioned scans (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive search for the best self-dual relative projective group
    /// code in (Z/4Z) D_n.
    SearchSelfdual {
        /// Group spec, e.g. dihedral:10 (the order).
        #[arg(long)]
        group: String,
        /// Ring spec; must be Z:2^2.
        #[arg(long, default_value = "Z:2^2")]
        ring: String,
        /// Write a re-verifiable certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Re-verify an existing certificate instead of searching.
        #[arg(long, requires = "certificate")]
        recheck: bool,
        /// Checkpoint file for resumable scans.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Lift an idempotent of F_p G to the chain ring.
    Lift {
        #[arg(long)]
        group: String,
        #[arg(long)]
        ring: String,
        /// Element literal, e.g. "x+x^2" or "1+r^2s" or "0,1,1".
        #[arg(long)]
        idempotent: String,
    },
    /// Minimum Hamming distance of a serialized ring code.
    MinDistance {
        /// Path to a ring-code JSON file.
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Theorem)]
        mode: Mode,
    },
    /// Run a verification suite over one group and ring.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        ring: String,
    },
    /// Factor x^n - 1 over F_p.
    Factor {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// Self-dual dihedral table over Z/4Z: one CSV row per even group
    /// order in [from, to].
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "Z:2^2")]
        ring: String,
        /// Directory for per-row certificates.
        #[arg(long)]
        certificates: Option<PathBuf>,
        /// Directory for per-row scan checkpoints.
        #[arg(long)]
        checkpoints: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Theorem,
    Exhaustive,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::InvalidParameter(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::InternalConsistency(_) | Error::InvalidGenerator(_) | Error::InvalidChain(_) => 4,
        _ => 1,
    }
}

fn fail(err: Error) -> ExitCode {
    let payload = serde_json::json!({
        "error": err.to_string(),
        "exit_code": exit_code_for(&err),
    });
    eprintln!("{payload}");
    ExitCode::from(exit_code_for(&err))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn budget_of(cli: &Cli) -> Result<u64, Error> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("bad {BUDGET_ENV} value `{v}`"))),
        Err(_) => Ok(group_codes::search::DEFAULT_BUDGET),
    }
}

fn require_z4(ring: &str) -> Result<ChainRingSpec, Error> {
    let spec = ChainRingSpec::parse_spec(ring)?;
    if spec.p != 2 || spec.ell != 2 || spec.flavor != RingFlavor::IntegerResidue {
        return Err(Error::UnsupportedRing(format!(
            "self-dual dihedral search runs over Z:2^2, got {ring}"
        )));
    }
    Ok(spec)
}

fn dihedral_order(group: &str) -> Result<usize, Error> {
    let g = FiniteGroup::parse_spec(group)?;
    if !g.label().starts_with("dihedral:") {
        return Err(Error::InvalidParameter(format!(
            "self-dual search needs a dihedral group, got {group}"
        )));
    }
    Ok(g.order())
}

fn run_search(
    cli: &Cli,
    group: &str,
    ring: &str,
    certificate: &Option<PathBuf>,
    recheck: bool,
    checkpoint: &Option<PathBuf>,
) -> Result<String, Error> {
    let spec = require_z4(ring)?;
    if recheck {
        let path = certificate.as_ref().expect("clap enforces --certificate");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let cert: CertificateJson = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("bad certificate: {e}")))?;
        let group = group_of_report(&cert.report)?;
        let e = FAlgebraElement::from_coeffs(group, 2, cert.report.witness_idempotent.clone())?;
        let (d, _chain, code) = verify_selfdual_witness(&e, spec)?;
        if d != cert.report.best_distance {
            return Err(Error::InternalConsistency(format!(
                "certificate claims d_H = {}, re-verification found {d}",
                cert.report.best_distance
            )));
        }
        if ring_code_to_json(&code) != cert.code {
            return Err(Error::InternalConsistency(
                "certificate code does not match the rebuild".into(),
            ));
        }
        return Ok(format!(
            "certificate ok: {} over {} has d_H = {d}",
            cert.report.group, cert.report.ring
        ));
    }
    let two_n = dihedral_order(group)?;
    let options = SearchOptions {
        budget: budget_of(cli)?,
        workers: cli.workers,
        checkpoint: checkpoint.clone(),
    };
    let report = search_selfdual_dihedral_z4(two_n, &options)?;
    let e = FAlgebraElement::from_coeffs(
        FiniteGroup::parse_spec(&report.group)?,
        2,
        report.witness_idempotent.clone(),
    )?;
    let (_, chain, code) = verify_selfdual_witness(&e, spec)?;
    if let Some(path) = certificate {
        let cert = certificate_to_json(&report, &chain, &code);
        std::fs::write(path, serde_json::to_string_pretty(&cert).map_err(io_err)?)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).map_err(io_err)?,
        Format::Csv => format!("2n,d_H\n{},{}", two_n, report.best_distance),
        Format::Text => format!(
            "group {} ring {}: best d_H = {} over {} distinct codes \
             ({} candidates, {} ms)",
            report.group,
            report.ring,
            report.best_distance,
            report.codes.len(),
            report.candidates_scanned,
            report.wall_time_ms
        ),
    })
}

fn io_err(e: serde_json::Error) -> Error {
    Error::InvalidParameter(format!("serialization: {e}"))
}

fn run_lift(cli: &Cli, group: &str, ring: &str, idempotent: &str) -> Result<String, Error> {
    let g = FiniteGroup::parse_spec(group)?;
    let spec = ChainRingSpec::parse_spec(ring)?;
    let e = parse_element_f(&g, spec.p, idempotent)?;
    let eps = lift_idempotent(&e, spec)?;
    let verified = eps.is_idempotent() && eps.reduce_mod_m() == e;
    let text = format_element_r(&eps);
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "group": g.label(),
            "ring": spec.spec_string(),
            "input": idempotent,
            "lifted": text,
            "verified": verified,
        }))
        .map_err(io_err)?,
        _ => format!("{text}\nverified: {verified}"),
    })
}

fn run_min_distance(cli: &Cli, code_path: &PathBuf, mode: Mode) -> Result<String, Error> {
    let text = std::fs::read_to_string(code_path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", code_path.display())))?;
    let json: RingCodeJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad code file: {e}")))?;
    let code = ring_code_from_json(&json)?;
    let mode = match mode {
        Mode::Theorem => DistanceMode::Theorem,
        Mode::Exhaustive => DistanceMode::Exhaustive,
    };
    let d = group_codes::min_hamming_r(&code, mode, budget_of(cli)?)?;
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "group": json.group,
            "ring": json.ring,
            "d_h": d,
        }))
        .map_err(io_err)?,
        _ => match d {
            Some(d) => format!("d_H = {d}"),
            None => "zero code: no minimum distance".into(),
        },
    })
}

fn run_verify(cli: &Cli, suite: &str, group: &str, ring: &str) -> Result<String, Error> {
    let suite: Suite = suite.parse()?;
    let g = FiniteGroup::parse_spec(group)?;
    let spec = ChainRingSpec::parse_spec(ring)?;
    let outcome = run_suite(suite, &g, spec, budget_of(cli)?)?;
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome).map_err(io_err)?,
        _ => {
            let mut lines = vec![format!(
                "suite {} on {} over {}: {} ({} checks)",
                outcome.suite,
                outcome.group,
                outcome.ring,
                if outcome.passed() { "pass" } else { "FAIL" },
                outcome.checks
            )];
            lines.extend(outcome.notes.iter().cloned());
            lines.extend(outcome.failures.iter().map(|f| format!("failure: {f}")));
            lines.join("\n")
        }
    };
    if !outcome.passed() {
        emit(&cli.out, &rendered)?;
        return Err(Error::InternalConsistency(format!(
            "suite {} failed {} checks",
            outcome.suite,
            outcome.failures.len()
        )));
    }
    Ok(rendered)
}

fn run_factor(cli: &Cli, p: u32, n: usize) -> Result<String, Error> {
    let factors = factor_xn_minus_1(n, p)?;
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "p": p,
            "n": n,
            "factors": factors.iter().map(|f| f.format("x")).collect::<Vec<_>>(),
        }))
        .map_err(io_err)?,
        _ => factors
            .iter()
            .map(|f| format!("({})", f.format("x")))
            .collect::<Vec<_>>()
            .join(""),
    })
}

fn run_table(
    cli: &Cli,
    from: usize,
    to: usize,
    ring: &str,
    certificates: &Option<PathBuf>,
    checkpoints: &Option<PathBuf>,
) -> Result<String, Error> {
    let spec = require_z4(ring)?;
    if from > to {
        return Err(Error::InvalidParameter(format!("empty range {from}..{to}")));
    }
    let budget = budget_of(cli)?;
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for two_n in (from..=to).filter(|n| n % 2 == 0) {
        let options = SearchOptions {
            budget,
            workers: cli.workers,
            checkpoint: checkpoints
                .as_ref()
                .map(|dir| dir.join(format!("dihedral-{two_n}.json"))),
        };
        let report = search_selfdual_dihedral_z4(two_n, &options)?;
        if let Some(dir) = certificates {
            std::fs::create_dir_all(dir)
                .map_err(|e| Error::InvalidParameter(format!("cannot create {}: {e}", dir.display())))?;
            let e = FAlgebraElement::from_coeffs(
                FiniteGroup::parse_spec(&report.group)?,
                2,
                report.witness_idempotent.clone(),
            )?;
            let (_, chain, code) = verify_selfdual_witness(&e, spec)?;
            let cert = certificate_to_json(&report, &chain, &code);
            let path = dir.join(format!("dihedral-{two_n}.cert.json"));
            std::fs::write(&path, serde_json::to_string_pretty(&cert).map_err(io_err)?)
                .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
        }
        rows.push(format!("{two_n},{}", report.best_distance));
        reports.push(report);
    }
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&reports).map_err(io_err)?,
        _ => {
            let mut lines = vec!["2n,d_H".to_string()];
            lines.extend(rows);
            lines.join("\n")
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::SearchSelfdual { group, ring, certificate, recheck, checkpoint } => {
            run_search(&cli, group, ring, certificate, *recheck, checkpoint)
        }
        Command::Lift { group, ring, idempotent } => run_lift(&cli, group, ring, idempotent),
        Command::MinDistance { code, mode } => run_min_distance(&cli, code, *mode),
        Command::Verify { suite, group, ring } => run_verify(&cli, suite, group, ring),
        Command::Factor { p, n } => run_factor(&cli, *p, *n),
        Command::Table { from, to, ring, certificates, checkpoints } => {
            run_table(&cli, *from, *to, ring, certificates, checkpoints)
        }
    };
    match result {
        Ok(text) => match emit(&cli.out, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
        Err(e) => fail(e),
    }
}
