//! Command-line interface for the ambidexterity / modified-trace engine.

mod refs;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ambitrace::ambi::{ambi_direct, ambi_structural, ambi_verdict, AmbiError, TraceFunctional};
use ambitrace::decomp::{decompose, projective_cover_unit, DecompError, IndecompFlag};
use ambitrace::hopf::{validate_hopf, validate_pivot, HopfError};
use ambitrace::io::{hopf_from_file, sha256_hex, HopfFile, IoError};
use ambitrace::modcat::{hom_basis, iso_test_indecomposable, regular_module, ModRef};

use refs::{resolve_algebra, resolve_module, AlgebraContext};
use report::{Format, Report};

/// Algebras above this dimension skip regular-module decomposition (the
/// socle route and projective scans), which would be too costly exactly.
const DECOMP_DIM_LIMIT: usize = 64;

#[derive(Debug, Error)]
enum CliError {
    /// Input or usage problem: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Domain-level failure (axiom breach, NotAmbi, ...): exit code 1.
    #[error("{0}")]
    Domain(String),
}

#[derive(Parser)]
#[command(
    name = "ambitrace",
    version,
    about = "Exact ambidexterity tests and modified traces for pivotal Hopf algebra modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for all randomized (Las Vegas) procedures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format: human text or stable JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout (scan: a directory).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Structural,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf and pivot axioms of an algebra (and optionally a module).
    Validate {
        /// builder:... reference or path to a Hopf JSON file.
        algebra: String,
        /// Module reference or path to validate against the algebra.
        #[arg(long)]
        module: Option<String>,
    },
    /// Unimodularity by the integral route and, when feasible, the socle route.
    Unimodular { algebra: String },
    /// Decompose a module into indecomposable summands.
    Decompose {
        algebra: String,
        #[arg(long)]
        module: String,
    },
    /// Decide right ambidexterity of an absolutely simple module.
    Ambi {
        algebra: String,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Modified dimension of a target module w.r.t. an ambidextrous module.
    Mdim {
        algebra: String,
        /// The ambidextrous module defining the trace (normalized to 1 on itself).
        #[arg(long)]
        ambi: String,
        /// The module whose modified dimension is computed.
        #[arg(long)]
        target: String,
    },
    /// Run the full battery over a builder family.
    Scan {
        /// Builder family, e.g. usl2, group:s3, sweedler.
        #[arg(long)]
        builder: String,
        /// Comma-separated parameters, e.g. "3,5" or "f2,f3".
        #[arg(long)]
        params: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed;
    let result = match &cli.command {
        Command::Validate { algebra, module } => cmd_validate(algebra, module.as_deref(), seed),
        Command::Unimodular { algebra } => cmd_unimodular(algebra, seed),
        Command::Decompose { algebra, module } => cmd_decompose(algebra, module, seed),
        Command::Ambi {
            algebra,
            module,
            method,
        } => cmd_ambi(algebra, module, *method, seed),
        Command::Mdim {
            algebra,
            ambi,
            target,
        } => cmd_mdim(algebra, ambi, target, seed),
        Command::Scan { builder, params } => {
            return cmd_scan(builder, params, seed, cli.format, cli.out.as_deref());
        }
    };
    match result {
        Ok(report) => {
            let rendered = report.render(cli.format);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn hopf_usage_err(e: IoError) -> CliError {
    CliError::Usage(e.to_string())
}

fn cmd_validate(spec: &str, module: Option<&str>, seed: u64) -> Result<Report, CliError> {
    let mut rep = Report::new("validate", seed);
    rep.set("input", spec);
    let record = |rep: &mut Report, v: &ambitrace::hopf::ValidationReport| {
        for c in &v.checks {
            let name = match c.witness {
                Some(w) => format!("{} (witness {:?})", c.name, w),
                None => c.name.clone(),
            };
            rep.check(&name, c.passed);
        }
    };
    let ctx: Option<AlgebraContext> = if spec.starts_with("builder:") {
        let ctx = resolve_algebra(spec)?;
        rep.set("input_hash", &ctx.input_hash);
        rep.set("algebra", ctx.algebra.name());
        rep.set("dim", ctx.algebra.dim());
        let pres = ctx.algebra.presentation();
        let v = validate_hopf(pres).map_err(|e| CliError::Usage(e.to_string()))?;
        record(&mut rep, &v);
        let pv = validate_pivot(pres).map_err(|e| CliError::Usage(e.to_string()))?;
        record(&mut rep, &pv);
        Some(ctx)
    } else {
        // File path: parse, then report each axiom check individually.
        let bytes = std::fs::read(spec)
            .map_err(|e| CliError::Usage(format!("cannot read {spec:?}: {e}")))?;
        rep.set("input_hash", sha256_hex(&bytes));
        let file: HopfFile = serde_json::from_str(
            std::str::from_utf8(&bytes)
                .map_err(|e| CliError::Usage(format!("not utf-8: {e}")))?,
        )
        .map_err(|e| CliError::Usage(format!("cannot parse {spec:?}: {e}")))?;
        let pres = hopf_from_file(&file).map_err(hopf_usage_err)?;
        rep.set("algebra", &pres.name);
        rep.set("dim", pres.dim);
        let to_usage = |e: HopfError| CliError::Usage(e.to_string());
        let v = validate_hopf(&pres).map_err(to_usage)?;
        record(&mut rep, &v);
        let pv = validate_pivot(&pres).map_err(to_usage)?;
        record(&mut rep, &pv);
        if rep.all_passed() {
            let algebra = ambitrace::hopf::HopfAlgebra::new(pres)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Some(AlgebraContext {
                input_hash: rep.fields["input_hash"].clone(),
                algebra,
                group: None,
                simples: Vec::new(),
            })
        } else {
            None
        }
    };
    if let Some(mspec) = module {
        let Some(ctx) = &ctx else {
            rep.check("module validation (skipped: algebra invalid)", false);
            return Ok(rep);
        };
        match resolve_module(ctx, mspec) {
            Ok(m) => {
                rep.set("module", m.label());
                rep.set("module_dim", m.dim());
                rep.check("module axioms", true);
            }
            Err(CliError::Domain(msg)) => {
                rep.set("module_error", &msg);
                rep.check("module axioms", false);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

fn cmd_unimodular(spec: &str, seed: u64) -> Result<Report, CliError> {
    let ctx = resolve_algebra(spec)?;
    let mut rep = Report::new("unimodular", seed);
    rep.set("input", spec);
    rep.set("input_hash", &ctx.input_hash);
    rep.set("algebra", ctx.algebra.name());
    let integral = ctx
        .algebra
        .is_unimodular()
        .map_err(|e| CliError::Domain(e.to_string()))?;
    rep.set("unimodular", integral);
    rep.set("route", "integral");
    let prime_field = ctx.algebra.field().characteristic() != 0;
    if prime_field && ctx.algebra.dim() <= DECOMP_DIM_LIMIT {
        let (p1, socle_trivial) =
            projective_cover_unit(&ctx.algebra, seed).map_err(|e| CliError::Domain(e.to_string()))?;
        rep.set("socle_route_unimodular", socle_trivial);
        rep.set("projective_cover_unit_dim", p1.dim());
        rep.check("integral and socle routes agree", integral == socle_trivial);
    } else {
        rep.set("socle_route_unimodular", "skipped (field or dimension)");
    }
    Ok(rep)
}

fn flag_str(f: IndecompFlag) -> &'static str {
    match f {
        IndecompFlag::Certified => "indecomposable-certified",
        IndecompFlag::Probabilistic => "indecomposable-probabilistic",
        IndecompFlag::NotAbsolutelyIndecomposable => "not-absolutely-indecomposable",
    }
}

fn decomp_err(e: DecompError) -> CliError {
    match e {
        DecompError::NotPrimeField(_) => CliError::Usage(e.to_string()),
        other => CliError::Domain(other.to_string()),
    }
}

fn cmd_decompose(spec: &str, mspec: &str, seed: u64) -> Result<Report, CliError> {
    let ctx = resolve_algebra(spec)?;
    let m = resolve_module(&ctx, mspec)?;
    let mut rep = Report::new("decompose", seed);
    rep.set("input", spec);
    rep.set("input_hash", &ctx.input_hash);
    rep.set("module", m.label());
    rep.set("module_dim", m.dim());
    let d = decompose(&m, seed).map_err(decomp_err)?;
    rep.set("summands", d.summands.len());
    for (k, s) in d.summands.iter().enumerate() {
        rep.set(
            &format!("summand.{k}"),
            format!("dim {} ({})", s.module.dim(), flag_str(s.flag)),
        );
    }
    rep.check("idempotent identities verified", true);
    Ok(rep)
}

fn ambi_err(e: AmbiError) -> CliError {
    match e {
        AmbiError::NotAbsolutelySimple(_) | AmbiError::NotAmbi | AmbiError::NoSplitting(_) => {
            CliError::Domain(e.to_string())
        }
        AmbiError::Modcat(_) | AmbiError::Decomp(DecompError::NotPrimeField(_)) => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Domain(other.to_string()),
    }
}

fn cmd_ambi(spec: &str, mspec: &str, method: Method, seed: u64) -> Result<Report, CliError> {
    let ctx = resolve_algebra(spec)?;
    let v = resolve_module(&ctx, mspec)?;
    let mut rep = Report::new("ambi", seed);
    rep.set("input", spec);
    rep.set("input_hash", &ctx.input_hash);
    rep.set("module", v.label());
    rep.set("method", format!("{method:?}").to_lowercase());
    match method {
        Method::Direct => {
            let d = ambi_direct(&v).map_err(ambi_err)?;
            rep.set("direct", d.ambi);
            if let Some(w) = d.witness {
                rep.set(
                    "witness",
                    format!(
                        "basis endomorphism {} has lambda {} != mu {}",
                        w.basis_index,
                        v.field().format(&w.lambda),
                        v.field().format(&w.mu)
                    ),
                );
            }
        }
        Method::Structural => {
            let s = ambi_structural(&v, seed).map_err(ambi_err)?;
            rep.set("structural", s.ambi);
            rep.set("j", s.j);
            rep.set("jprime", s.jprime);
            if let Some(iso) = s.dual_summand_self_iso {
                rep.set("summand_self_dual", iso);
            }
        }
        Method::Both => {
            let verdict = ambi_verdict(&v, seed, true).map_err(ambi_err)?;
            rep.set("direct", verdict.direct);
            if let Some(w) = verdict.direct_witness {
                rep.set(
                    "witness",
                    format!(
                        "basis endomorphism {} has lambda {} != mu {}",
                        w.basis_index,
                        v.field().format(&w.lambda),
                        v.field().format(&w.mu)
                    ),
                );
            }
            match verdict.structural {
                Some(s) => {
                    rep.set("structural", s.ambi);
                    rep.set("j", s.j);
                    rep.set("jprime", s.jprime);
                    if let Some(iso) = s.dual_summand_self_iso {
                        rep.set("summand_self_dual", iso);
                    }
                    rep.check("direct and structural verdicts agree", s.ambi == verdict.direct);
                }
                None => {
                    rep.set(
                        "structural",
                        format!(
                            "absent ({})",
                            verdict.structural_skipped.unwrap_or_default()
                        ),
                    );
                }
            }
        }
    }
    Ok(rep)
}

fn cmd_mdim(spec: &str, ambi_spec: &str, target_spec: &str, seed: u64) -> Result<Report, CliError> {
    let ctx = resolve_algebra(spec)?;
    let v = resolve_module(&ctx, ambi_spec)?;
    let u = resolve_module(&ctx, target_spec)?;
    let mut rep = Report::new("mdim", seed);
    rep.set("input", spec);
    rep.set("input_hash", &ctx.input_hash);
    rep.set("ambi_module", v.label());
    rep.set("target", u.label());
    let t = TraceFunctional::new(&v).map_err(ambi_err)?;
    let d = t.dimension(&u).map_err(ambi_err)?;
    rep.set("mdim", v.field().format(&d));
    Ok(rep)
}

/// Battery for one scan instance; hard assertion failures end up in the
/// report, never as early exits.
fn scan_instance(spec: &str, seed: u64) -> Result<Report, CliError> {
    let ctx = resolve_algebra(spec)?;
    let mut rep = Report::new("scan", seed);
    rep.set("input", spec);
    rep.set("input_hash", &ctx.input_hash);
    rep.set("algebra", ctx.algebra.name());
    rep.set("dim", ctx.algebra.dim());
    rep.check("hopf and pivot axioms", true); // builders validate on construction
    let prime_field = ctx.algebra.field().characteristic() != 0
        && matches!(
            ctx.algebra.field().kind(),
            ambitrace::FieldKind::Prime(_)
        );
    let small = ctx.algebra.dim() <= DECOMP_DIM_LIMIT;
    // Unimodularity, both routes when feasible.
    let integral = ctx
        .algebra
        .is_unimodular()
        .map_err(|e| CliError::Domain(e.to_string()))?;
    rep.set("unimodular", integral);
    if prime_field && small {
        match projective_cover_unit(&ctx.algebra, seed) {
            Ok((_, socle_trivial)) => {
                rep.set("socle_route_unimodular", socle_trivial);
                rep.check("integral and socle routes agree", integral == socle_trivial);
            }
            Err(e) => rep.set("socle_route_unimodular", format!("error: {e}")),
        }
    }
    // Ambidexterity of each named simple.
    let mut ambi_modules: Vec<ModRef> = Vec::new();
    for s in &ctx.simples {
        let key = format!("ambi.{}", s.label());
        if hom_basis(s, s).map(|h| h.dim()).unwrap_or(0) != 1 {
            rep.set(&key, "skipped (not absolutely simple)");
            continue;
        }
        match ambi_verdict(s, seed, prime_field) {
            Ok(v) => {
                rep.set(&format!("{key}.direct"), v.direct);
                match &v.structural {
                    Some(st) => {
                        rep.set(&format!("{key}.structural"), st.ambi);
                        rep.check(
                            &format!("theorem agreement on {}", s.label()),
                            st.ambi == v.direct,
                        );
                    }
                    None => {
                        rep.set(
                            &format!("{key}.structural"),
                            format!("absent ({})", v.structural_skipped.clone().unwrap_or_default()),
                        );
                    }
                }
                if v.direct {
                    ambi_modules.push(Arc::clone(s));
                }
            }
            Err(e) => rep.set(&key, format!("error: {e}")),
        }
    }
    // Modified dimensions of the indecomposable projectives.
    if prime_field && small {
        match distinct_projectives(&ctx, seed) {
            Ok(projectives) => {
                let mut traced = false;
                for v in &ambi_modules {
                    let Ok(t) = TraceFunctional::new(v) else {
                        continue;
                    };
                    let mut all_ok = true;
                    let mut lines = Vec::new();
                    for p in &projectives {
                        match t.dimension(p) {
                            Ok(d) => lines.push((
                                format!("mdim.{}", p.label()),
                                v.field().format(&d),
                            )),
                            Err(e) => {
                                lines.push((format!("mdim.{}", p.label()), format!("error: {e}")));
                                all_ok = false;
                            }
                        }
                    }
                    if all_ok || Arc::ptr_eq(v, ambi_modules.last().unwrap()) {
                        rep.set("mdim.reference_module", v.label());
                        for (k, val) in lines {
                            rep.set(&k, val);
                        }
                        traced = true;
                        break;
                    }
                }
                if !traced && !projectives.is_empty() {
                    rep.set("mdim.reference_module", "none (no ambidextrous simple)");
                }
            }
            Err(e) => rep.set("mdim.reference_module", format!("error: {e}")),
        }
    }
    Ok(rep)
}

/// Indecomposable projectives: distinct (up to iso) summands of the regular
/// module.
fn distinct_projectives(ctx: &AlgebraContext, seed: u64) -> Result<Vec<ModRef>, CliError> {
    let reg = regular_module(&ctx.algebra);
    let d = decompose(&reg, seed).map_err(decomp_err)?;
    let mut reps: Vec<ModRef> = Vec::new();
    for s in &d.summands {
        let mut known = false;
        for r in &reps {
            if iso_test_indecomposable(&s.module, r, seed)
                .map_err(|e| CliError::Domain(e.to_string()))?
                .is_iso()
            {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(Arc::clone(&s.module));
        }
    }
    Ok(reps)
}

fn cmd_scan(
    builder: &str,
    params: &str,
    seed: u64,
    format: Format,
    out: Option<&std::path::Path>,
) -> ExitCode {
    let mut any_hard_failure = false;
    let mut any_usage_error = false;
    if let Some(dir) = out {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return ExitCode::from(2);
        }
    }
    for param in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let spec = format!("builder:{builder}:{param}");
        match scan_instance(&spec, seed) {
            Ok(rep) => {
                if !rep.all_passed() {
                    any_hard_failure = true;
                }
                let rendered = rep.render(if out.is_some() { Format::Machine } else { format });
                if let Some(dir) = out {
                    let fname = format!("{}-{}.json", builder.replace(':', "-"), param);
                    let path = dir.join(fname);
                    if let Err(e) = std::fs::write(&path, &rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    println!("wrote {}", path.display());
                } else {
                    print!("{rendered}");
                }
            }
            Err(CliError::Domain(msg)) => {
                eprintln!("instance {spec}: {msg}");
                any_hard_failure = true;
            }
            Err(CliError::Usage(msg)) => {
                eprintln!("instance {spec}: {msg}");
                any_usage_error = true;
            }
        }
    }
    if any_hard_failure {
        ExitCode::from(1)
    } else if any_usage_error {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
