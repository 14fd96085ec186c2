//! Resolution of algebra and module references.
//!
//! An algebra reference is either a `builder:` string or a path to a Hopf
//! JSON file. Builder grammar:
//!   builder:group:s3:<field>      group algebra of S3
//!   builder:group:z<n>:<field>    group algebra of Z/n
//!   builder:double:s3:<field>     Drinfeld double of the group algebra
//!   builder:double:z<n>:<field>
//!   builder:sweedler:<field>      4-dimensional Taft algebra
//!   builder:usl2:<p>              restricted enveloping algebra of sl2, F_p
//!   builder:uqsl2:<l>             small quantum sl2 at an odd l-th root of 1
//! Field tokens: f<p>, q, qz<l> (case-insensitive).
//!
//! A module reference is resolved against the algebra it came with: the
//! names `trivial`, `regular`, `natural` (S3 group algebra), the labels of
//! builder-provided simples (`L0`, ..., `St`), or a path to a module file.

use std::path::Path;
use std::sync::Arc;

use ambitrace::builders::{
    build_drinfeld_double_group, build_group_algebra, build_restricted_usl2,
    build_small_quantum_sl2, build_sweedler, s3_natural_module, GroupTable,
};
use ambitrace::hopf::HopfAlgebra;
use ambitrace::io::{algebra_hash, parse_field, read_hopf_file, read_module_file, sha256_hex};
use ambitrace::modcat::{regular_module, unit_module, ModRef};
use ambitrace::Field;

use crate::CliError;

pub struct AlgebraContext {
    pub algebra: Arc<HopfAlgebra>,
    /// SHA-256 of the canonical serialization (or of the input file bytes).
    pub input_hash: String,
    pub group: Option<GroupTable>,
    /// Simples the builder knows by name.
    pub simples: Vec<ModRef>,
}

fn parse_field_token(tok: &str) -> Result<Field, CliError> {
    let t = tok.to_lowercase();
    let spec = if t == "q" {
        "Q".to_string()
    } else if let Some(l) = t.strip_prefix("qz") {
        format!("Q(z{l})")
    } else if let Some(p) = t.strip_prefix('f') {
        format!("F{p}")
    } else {
        return Err(CliError::Usage(format!("unrecognized field token {tok:?}")));
    };
    parse_field(&spec).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_group_token(tok: &str) -> Result<GroupTable, CliError> {
    let t = tok.to_lowercase();
    if t == "s3" {
        return Ok(GroupTable::symmetric3());
    }
    if let Some(n) = t.strip_prefix('z') {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad cyclic order {tok:?}")))?;
        if n == 0 {
            return Err(CliError::Usage("cyclic group order must be positive".into()));
        }
        return Ok(GroupTable::cyclic(n));
    }
    Err(CliError::Usage(format!(
        "unknown group {tok:?} (expected s3 or z<n>)"
    )))
}

pub fn resolve_algebra(spec: &str) -> Result<AlgebraContext, CliError> {
    if let Some(rest) = spec.strip_prefix("builder:") {
        return resolve_builder(rest);
    }
    // Treat as a file path.
    let path = Path::new(spec);
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Usage(format!("cannot read {spec:?}: {e}")))?;
    let pres = read_hopf_file(path).map_err(|e| match e {
        ambitrace::io::IoError::Hopf(h) => CliError::Domain(format!("validation failed: {h}")),
        other => CliError::Usage(format!("cannot parse {spec:?}: {other}")),
    })?;
    let algebra =
        HopfAlgebra::new(pres).map_err(|e| CliError::Domain(format!("validation failed: {e}")))?;
    Ok(AlgebraContext {
        algebra,
        input_hash: sha256_hex(&bytes),
        group: None,
        simples: Vec::new(),
    })
}

pub fn resolve_builder(rest: &str) -> Result<AlgebraContext, CliError> {
    let parts: Vec<&str> = rest.split(':').collect();
    let build_err = |e: ambitrace::builders::BuildError| CliError::Domain(e.to_string());
    match parts.as_slice() {
        ["group", group, field] => {
            let f = parse_field_token(field)?;
            let g = parse_group_token(group)?;
            let algebra = build_group_algebra(&f, &g).map_err(build_err)?;
            let mut simples = vec![unit_module(&algebra)];
            if g.order == 6 {
                simples.push(s3_natural_module(&algebra, &g).map_err(build_err)?);
            }
            Ok(AlgebraContext {
                input_hash: algebra_hash(&algebra),
                algebra,
                group: Some(g),
                simples,
            })
        }
        ["double", group, field] => {
            let f = parse_field_token(field)?;
            let g = parse_group_token(group)?;
            let algebra = build_drinfeld_double_group(&f, &g).map_err(build_err)?;
            Ok(AlgebraContext {
                input_hash: algebra_hash(&algebra),
                simples: vec![unit_module(&algebra)],
                algebra,
                group: Some(g),
            })
        }
        ["sweedler", field] => {
            let f = parse_field_token(field)?;
            let algebra = build_sweedler(&f).map_err(build_err)?;
            Ok(AlgebraContext {
                input_hash: algebra_hash(&algebra),
                simples: vec![unit_module(&algebra)],
                algebra,
                group: None,
            })
        }
        ["usl2", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| CliError::Usage(format!("bad prime {p:?}")))?;
            let data = build_restricted_usl2(p).map_err(build_err)?;
            Ok(AlgebraContext {
                input_hash: algebra_hash(&data.algebra),
                algebra: data.algebra,
                group: None,
                simples: data.simples,
            })
        }
        ["uqsl2", l] => {
            let l: u64 = l
                .parse()
                .map_err(|_| CliError::Usage(format!("bad root order {l:?}")))?;
            let data = build_small_quantum_sl2(l).map_err(build_err)?;
            Ok(AlgebraContext {
                input_hash: algebra_hash(&data.algebra),
                algebra: data.algebra,
                group: None,
                simples: vec![data.steinberg],
            })
        }
        _ => Err(CliError::Usage(format!(
            "unrecognized builder reference {rest:?}"
        ))),
    }
}

pub fn resolve_module(ctx: &AlgebraContext, spec: &str) -> Result<ModRef, CliError> {
    match spec.to_lowercase().as_str() {
        "trivial" | "unit" | "1" => return Ok(unit_module(&ctx.algebra)),
        "regular" => return Ok(regular_module(&ctx.algebra)),
        "natural" | "n" => {
            let g = ctx.group.as_ref().ok_or_else(|| {
                CliError::Usage("'natural' needs a group-algebra builder".into())
            })?;
            return s3_natural_module(&ctx.algebra, g)
                .map_err(|e| CliError::Usage(e.to_string()));
        }
        _ => {}
    }
    for s in &ctx.simples {
        if s.label().eq_ignore_ascii_case(spec) {
            return Ok(Arc::clone(s));
        }
    }
    let path = Path::new(spec);
    if path.exists() {
        return read_module_file(path, &ctx.algebra).map_err(|e| match e {
            ambitrace::io::IoError::Modcat(m) => {
                CliError::Domain(format!("module validation failed: {m}"))
            }
            other => CliError::Usage(format!("cannot parse module {spec:?}: {other}")),
        });
    }
    Err(CliError::Usage(format!("unknown module reference {spec:?}")))
}
