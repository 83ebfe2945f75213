//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{self, Algebra};
use crate::census::{self, CensusParams};
use crate::delta::DeltaSystem;
use crate::error::{Error, Result};
use crate::modcat::{self, TrailOutcome};
use crate::phi::{PhiEngine, Rho};
use crate::theorems::{Analysis, Status};

pub const WORKERS_ENV: &str = "NAKPHI_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "nakphi",
    version,
    about = "Syzygies and the φ-dimension of cyclic Nakayama algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Presentation, projective classes and the Δ system.
    Info(Source),
    /// Minimal projective resolution of one module.
    Resolve {
        #[command(flatten)]
        source: Source,
        /// Module as top:length.
        #[arg(long)]
        module: String,
        /// Maximum number of syzygy steps to print.
        #[arg(long, default_value_t = 32)]
        steps: usize,
    },
    /// φ of a module list, or the φ-dimension with --all.
    Phi {
        #[command(flatten)]
        source: Source,
        /// Comma-separated modules, e.g. 1:2,3:1.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        module: Option<String>,
        /// Use the sum of all indecomposables.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every theorem and invariant check.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive run over all series within bounds.
    Census {
        /// Vertex count `N` or range `A..B`.
        #[arg(long)]
        vertices: String,
        #[arg(long)]
        max_proj_len: usize,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Kupisch series, e.g. 3,5,4,5,4.
    #[arg(
        long,
        conflicts_with = "relations",
        required_unless_present = "relations"
    )]
    pub kupisch: Option<String>,
    /// Relations as start:arrows;..., e.g. "1:3;3:4".
    #[arg(long, requires = "vertices")]
    pub relations: Option<String>,
    #[arg(long)]
    pub vertices: Option<usize>,
}

impl Source {
    pub fn algebra(&self) -> Result<Algebra> {
        match (&self.kupisch, &self.relations, self.vertices) {
            (Some(k), None, _) => Algebra::from_kupisch(&algebra::parse_kupisch(k)?),
            (None, Some(r), Some(n)) => Algebra::from_relations(n, &algebra::parse_relations(r)?),
            _ => Err(Error::Parse(
                "give --kupisch, or --relations with --vertices".into(),
            )),
        }
    }
}

pub fn parse_vertex_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad vertex count {t:?}")))
    };
    match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Info(src) => cmd_info(&src.algebra()?, out),
        Command::Resolve {
            source,
            module,
            steps,
        } => {
            let a = source.algebra()?;
            let m = modcat::parse_module(&a, module)?;
            cmd_resolve(&a, m, *steps, out)
        }
        Command::Phi {
            source,
            module,
            all,
            json,
        } => {
            let a = source.algebra()?;
            let ms = match (module, all) {
                (Some(s), false) => modcat::parse_module_list(&a, s)?,
                _ => modcat::all_indecomposables(&a),
            };
            cmd_phi(&a, &ms, *all, *json, out)
        }
        Command::Verify { source, json } => cmd_verify(&source.algebra()?, *json, out),
        Command::Census {
            vertices,
            max_proj_len,
            out: path,
            workers,
        } => {
            let mut params = CensusParams::new(parse_vertex_range(vertices)?, *max_proj_len);
            params.workers = workers_override()?.unwrap_or(*workers);
            params.output = path.clone();
            cmd_census(&params, out, err)
        }
    }
}

fn workers_override() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{WORKERS_ENV}={v:?} is not a count"))),
        _ => Ok(None),
    }
}

pub fn cmd_info(a: &Algebra, out: &mut dyn Write) -> Result<i32> {
    let ds = DeltaSystem::new(a);
    let (s, s_prime) = a.socle_marks();
    writeln!(out, "N: {}", a.n())?;
    writeln!(out, "kupisch: {}", a.kupisch_string())?;
    writeln!(out, "relations: {}", a.relations_string())?;
    writeln!(out, "r: {}", a.r())?;
    writeln!(out, "self_injective: {}", a.is_self_injective())?;
    writeln!(out, "projective classes:")?;
    for c in a.projective_classes() {
        let members: Vec<String> = c.members.iter().map(|v| format!("P{v}")).collect();
        writeln!(
            out,
            "  {}: {{{}}} socle S{}",
            c.class_index,
            members.join(", "),
            c.socle_vertex
        )?;
    }
    writeln!(out, "S: {}", algebra::join(&s, ","))?;
    writeln!(out, "S': {}", algebra::join(&s_prime, ","))?;
    writeln!(out, "delta system:")?;
    for (j, d) in ds.deltas().iter().enumerate() {
        writeln!(out, "  Δ{} = {} ({d})", j + 1, d.display(a))?;
    }
    writeln!(
        out,
        "delta kupisch: {}",
        algebra::join(ds.delta_kupisch(), ",")
    )?;
    Ok(0)
}

pub fn cmd_resolve(
    a: &Algebra,
    m: modcat::UniserialModule,
    steps: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    let ds = DeltaSystem::new(a);
    let trail = modcat::resolution_trail(a, m);
    let describe = |x: modcat::UniserialModule| match ds.decompose(x) {
        Some(seq) => {
            let names: Vec<String> = seq.iter().map(|j| format!("Δ{j}")).collect();
            format!("{x} {} = {}", x.display(a), names.join("|"))
        }
        None => format!("{x} {}", x.display(a)),
    };
    writeln!(out, "module {}", describe(m))?;
    for (i, step) in trail.steps.iter().take(steps).enumerate() {
        let syz = step.syzygy.map(describe).unwrap_or_else(|| "0".to_string());
        writeln!(out, "Ω^{}: cover {} -> syzygy {syz}", i + 1, step.cover)?;
    }
    if trail.steps.len() > steps {
        writeln!(out, "... truncated after {steps} steps")?;
    }
    match trail.outcome {
        TrailOutcome::FiniteAt(k) => writeln!(out, "pdim {k}")?,
        TrailOutcome::PeriodicEntryAt(t) => {
            writeln!(out, "pdim inf")?;
            writeln!(out, "periodic entry at step {t}, rho {t}")?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct PhiJson {
    phi: usize,
    alpha_trace: Vec<usize>,
    omega_per: Vec<String>,
    rho: BTreeMap<String, Option<usize>>,
}

pub fn cmd_phi(
    a: &Algebra,
    ms: &[modcat::UniserialModule],
    all: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let engine = PhiEngine::new(a);
    let trace = engine.trace(ms);
    let per = engine.omega_periodic();
    let rho: BTreeMap<String, Option<usize>> = ms
        .iter()
        .map(|&m| {
            let v = match engine.rho(m) {
                Rho::Defined(t) => Some(t),
                Rho::UndefinedFinitePdim => None,
            };
            (m.to_string(), v)
        })
        .collect();
    if json {
        let doc = PhiJson {
            phi: trace.phi,
            alpha_trace: trace.alpha_trace,
            omega_per: per.set.iter().map(|m| m.to_string()).collect(),
            rho,
        };
        serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(out)?;
        return Ok(0);
    }
    let label = if all { "phi_dim" } else { "phi" };
    writeln!(out, "{label}: {}", trace.phi)?;
    writeln!(
        out,
        "alpha_trace: {}",
        algebra::join(&trace.alpha_trace, ",")
    )?;
    let pieces: Vec<String> = per
        .perm
        .iter()
        .map(|(m, n)| format!("{m} -> {n}"))
        .collect();
    writeln!(out, "omega_per: {}", pieces.join(", "))?;
    writeln!(out, "{:<8} {:>5}", "module", "rho")?;
    for (m, r) in &rho {
        let shown = r.map_or("-".to_string(), |t| t.to_string());
        writeln!(out, "{m:<8} {shown:>5}")?;
    }
    Ok(0)
}

pub fn cmd_verify(a: &Algebra, json: bool, out: &mut dyn Write) -> Result<i32> {
    let an = Analysis::new(a);
    let checks = an.verify_all();
    let failed = checks.iter().any(|c| c.is_fail());
    if json {
        serde_json::to_writer_pretty(&mut *out, &checks)
            .map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(out)?;
    } else {
        writeln!(
            out,
            "algebra {}: gldim {}, findim {}, phi_dim {}, r {}",
            a,
            an.gldim,
            an.findim,
            an.phi_dim,
            an.r()
        )?;
        let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &checks {
            writeln!(out, "{:<width$}  {:<4}  {}", c.name, c.status, c.evidence)?;
        }
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let na = checks
            .iter()
            .filter(|c| c.status == Status::NotApplicable)
            .count();
        let fail = checks.iter().filter(|c| c.is_fail()).count();
        writeln!(out, "{passed} pass, {na} n/a, {fail} fail")?;
    }
    Ok(if failed { 1 } else { 0 })
}

/// CSV goes to `--out` when given, else to `out`; the summary goes to
/// whichever of `out` and `err` does not carry the CSV.
pub fn cmd_census(params: &CensusParams, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let outcome = census::run_census(params)?;
    if params.output.is_none() {
        census::write_records(&mut *out, &outcome.records)?;
    }
    let s = &outcome.summary;
    let hist: Vec<String> = s
        .phi_histogram
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    let sink: &mut dyn Write = if params.output.is_some() { out } else { err };
    let mut report = |line: String| -> Result<()> {
        writeln!(sink, "{line}")?;
        Ok(())
    };
    report(format!(
        "algebras {}, finite gldim {}, infinite gldim {}",
        s.algebras, s.finite_gldim, s.infinite_gldim
    ))?;
    report(format!(
        "phi_dim histogram (infinite gldim): {}",
        hist.join(" ")
    ))?;
    report(format!("max phi_dim/2r: {:.4}", s.max_phi_ratio))?;
    report(format!("all checks passed: {}", s.all_checks_passed))?;
    for (k, f) in &outcome.failures {
        report(format!("FAIL {k}: {f}"))?;
    }
    Ok(if s.all_checks_passed { 0 } else { 1 })
}
