//! JSON file formats for Hopf algebra presentations and modules.
//!
//! Scalars are stored as strings in the field's canonical form: decimal
//! residues over F_p, "a/b" over Q, polynomial-in-z strings over cyclotomic
//! fields. Multiplication and comultiplication are stored sparsely as
//! (i, j, k, scalar) quadruples.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::field::{Field, FieldError, FieldKind, Scalar};
use crate::hopf::{HopfAlgebra, HopfError, HopfPresentation};
use crate::matrix::Matrix;
use crate::modcat::{derive_action_from_generators, ModRef, ModcatError, ModuleRep};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Modcat(#[from] ModcatError),
}

/// Canonical string form of a field: "F<p>", "Q", or "Q(z<l>)".
pub fn format_field(f: &Field) -> String {
    match f.kind() {
        FieldKind::Prime(p) => format!("F{p}"),
        FieldKind::Rational => "Q".to_string(),
        FieldKind::Cyclotomic(l) => format!("Q(z{l})"),
    }
}

pub fn parse_field(s: &str) -> Result<Field, IoError> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::rational());
    }
    if let Some(rest) = s.strip_prefix("Q(z").and_then(|r| r.strip_suffix(')')) {
        let l: u64 = rest
            .parse()
            .map_err(|_| IoError::Malformed(format!("bad cyclotomic order in {s:?}")))?;
        return Ok(Field::cyclotomic(l)?);
    }
    if let Some(rest) = s.strip_prefix('F') {
        let p: u64 = rest
            .parse()
            .map_err(|_| IoError::Malformed(format!("bad prime in field spec {s:?}")))?;
        return Ok(Field::prime(p)?);
    }
    Err(IoError::Malformed(format!("unrecognized field spec {s:?}")))
}

/// Serializable Hopf algebra presentation.
#[derive(Debug, Serialize, Deserialize)]
pub struct HopfFile {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// b_i b_j = sum over entries (i, j, k, c) of c * b_k.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    /// comult(b_i) = sum over entries (i, j, k, c) of c * b_j (x) b_k.
    pub comult: Vec<(usize, usize, usize, String)>,
    /// Dense matrix, rows of scalar strings; column i is antipode(b_i).
    pub antipode: Vec<Vec<String>>,
    pub pivot: Vec<String>,
    pub generators: Vec<usize>,
}

pub fn hopf_to_file(pres: &HopfPresentation) -> HopfFile {
    let f = &pres.field;
    let fmt_vec = |v: &[Scalar]| v.iter().map(|s| f.format(s)).collect::<Vec<_>>();
    let mut mult = Vec::new();
    for (i, row) in pres.mult.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            for (k, c) in cell {
                mult.push((i, j, *k, f.format(c)));
            }
        }
    }
    let mut comult = Vec::new();
    for (i, terms) in pres.comult.iter().enumerate() {
        for (j, k, c) in terms {
            comult.push((i, *j, *k, f.format(c)));
        }
    }
    let antipode = (0..pres.dim)
        .map(|r| {
            (0..pres.dim)
                .map(|c| f.format(pres.antipode.at(r, c)))
                .collect()
        })
        .collect();
    HopfFile {
        name: pres.name.clone(),
        field: format_field(f),
        dim: pres.dim,
        basis_labels: pres.basis_labels.clone(),
        mult,
        unit: fmt_vec(&pres.unit),
        counit: fmt_vec(&pres.counit),
        comult,
        antipode,
        pivot: fmt_vec(&pres.pivot),
        generators: pres.generators.clone(),
    }
}

pub fn hopf_from_file(file: &HopfFile) -> Result<HopfPresentation, IoError> {
    let f = parse_field(&file.field)?;
    let n = file.dim;
    let parse_vec = |v: &[String]| -> Result<Vec<Scalar>, IoError> {
        if v.len() != n {
            return Err(IoError::Malformed(format!(
                "vector length {} != dim {n}",
                v.len()
            )));
        }
        v.iter().map(|s| Ok(f.parse(s)?)).collect()
    };
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, j, k, c) in &file.mult {
        if *i >= n || *j >= n || *k >= n {
            return Err(IoError::Malformed(format!("mult index out of range: ({i},{j},{k})")));
        }
        mult[*i][*j].push((*k, f.parse(c)?));
    }
    let mut comult = vec![Vec::new(); n];
    for (i, j, k, c) in &file.comult {
        if *i >= n || *j >= n || *k >= n {
            return Err(IoError::Malformed(format!("comult index out of range: ({i},{j},{k})")));
        }
        comult[*i].push((*j, *k, f.parse(c)?));
    }
    if file.antipode.len() != n || file.antipode.iter().any(|r| r.len() != n) {
        return Err(IoError::Malformed("antipode matrix has wrong shape".into()));
    }
    let mut antipode = Matrix::zero(n, n, &f);
    for (r, row) in file.antipode.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            *antipode.at_mut(r, c) = f.parse(s)?;
        }
    }
    if file.basis_labels.len() != n {
        return Err(IoError::Malformed("basis label count != dim".into()));
    }
    for &g in &file.generators {
        if g >= n {
            return Err(IoError::Malformed(format!("generator index {g} out of range")));
        }
    }
    Ok(HopfPresentation {
        name: file.name.clone(),
        field: f.clone(),
        dim: n,
        basis_labels: file.basis_labels.clone(),
        mult,
        unit: parse_vec(&file.unit)?,
        counit: parse_vec(&file.counit)?,
        comult,
        antipode,
        pivot: parse_vec(&file.pivot)?,
        generators: file.generators.clone(),
    })
}

/// Serializable module over a named algebra. Either `action` (one matrix per
/// algebra basis element) or `generator_actions` must be present.
#[derive(Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub algebra: String,
    /// Hash of the canonical serialization of the algebra file.
    pub algebra_hash: String,
    pub label: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_actions: Option<Vec<(usize, Vec<Vec<String>>)>>,
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, f: &Field) -> Result<Matrix, IoError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(IoError::Malformed("action matrix has wrong shape".into()));
    }
    let mut m = Matrix::zero(dim, dim, f);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            *m.at_mut(r, c) = f.parse(s)?;
        }
    }
    Ok(m)
}

fn format_matrix(m: &Matrix, f: &Field) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| f.format(m.at(r, c))).collect())
        .collect()
}

pub fn module_to_file(v: &ModRef) -> ModuleFile {
    let alg = v.algebra();
    let f = v.field();
    let action = (0..alg.dim()).map(|i| format_matrix(v.action(i), f)).collect();
    ModuleFile {
        algebra: alg.name().to_string(),
        algebra_hash: algebra_hash(alg),
        label: v.label().to_string(),
        dim: v.dim(),
        action: Some(action),
        generator_actions: None,
    }
}

pub fn module_from_file(file: &ModuleFile, algebra: &Arc<HopfAlgebra>) -> Result<ModRef, IoError> {
    let expected = algebra_hash(algebra);
    if file.algebra_hash != expected {
        return Err(IoError::Malformed(format!(
            "module was written for algebra {} (hash {}), got {} (hash {})",
            file.algebra, file.algebra_hash, algebra.name(), expected
        )));
    }
    let f = algebra.field();
    if let Some(action) = &file.action {
        if action.len() != algebra.dim() {
            return Err(IoError::Malformed(format!(
                "expected {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        let mats = action
            .iter()
            .map(|rows| parse_matrix(rows, file.dim, f))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ModuleRep::new(Arc::clone(algebra), mats, file.label.clone())?);
    }
    if let Some(gen_actions) = &file.generator_actions {
        let mut map = HashMap::new();
        for (idx, rows) in gen_actions {
            map.insert(*idx, parse_matrix(rows, file.dim, f)?);
        }
        return Ok(derive_action_from_generators(
            algebra,
            &map,
            file.dim,
            file.label.clone(),
        )?);
    }
    Err(IoError::Malformed(
        "module file has neither action nor generator_actions".into(),
    ))
}

/// Stable content hash of an algebra: SHA-256 of its canonical JSON file.
pub fn algebra_hash(algebra: &Arc<HopfAlgebra>) -> String {
    let file = hopf_to_file(algebra.presentation());
    let json = serde_json::to_string(&file).expect("presentation serializes");
    sha256_hex(json.as_bytes())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn write_hopf_file(path: &std::path::Path, pres: &HopfPresentation) -> Result<(), IoError> {
    let file = hopf_to_file(pres);
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

pub fn read_hopf_file(path: &std::path::Path) -> Result<HopfPresentation, IoError> {
    let text = std::fs::read_to_string(path)?;
    let file: HopfFile = serde_json::from_str(&text)?;
    hopf_from_file(&file)
}

pub fn write_module_file(path: &std::path::Path, v: &ModRef) -> Result<(), IoError> {
    let file = module_to_file(v);
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

pub fn read_module_file(
    path: &std::path::Path,
    algebra: &Arc<HopfAlgebra>,
) -> Result<ModRef, IoError> {
    let text = std::fs::read_to_string(path)?;
    let file: ModuleFile = serde_json::from_str(&text)?;
    module_from_file(&file, algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_group_algebra, build_sweedler, s3_natural_module, GroupTable};

    #[test]
    fn hopf_round_trip_ks3() {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        let alg = build_group_algebra(&f, &g).unwrap();
        let file = hopf_to_file(alg.presentation());
        let back = hopf_from_file(&file).unwrap();
        let rebuilt = HopfAlgebra::new(back).unwrap();
        assert_eq!(algebra_hash(&alg), algebra_hash(&rebuilt));
    }

    #[test]
    fn hopf_round_trip_sweedler_rational() {
        let f = Field::rational();
        let alg = build_sweedler(&f).unwrap();
        let file = hopf_to_file(alg.presentation());
        let json = serde_json::to_string(&file).unwrap();
        let parsed: HopfFile = serde_json::from_str(&json).unwrap();
        let back = hopf_from_file(&parsed).unwrap();
        HopfAlgebra::new(back).unwrap();
    }

    #[test]
    fn module_round_trip_natural() {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        let alg = build_group_algebra(&f, &g).unwrap();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let file = module_to_file(&nat);
        let back = module_from_file(&file, &alg).unwrap();
        assert_eq!(back.dim(), nat.dim());
        for i in 0..alg.dim() {
            assert_eq!(back.action(i), nat.action(i));
        }
    }

    #[test]
    fn module_generator_form_derives_full_action() {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        let alg = build_group_algebra(&f, &g).unwrap();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let gen_actions: Vec<(usize, Vec<Vec<String>>)> = alg
            .generators()
            .iter()
            .map(|&i| (i, format_matrix(nat.action(i), &f)))
            .collect();
        let file = ModuleFile {
            algebra: alg.name().to_string(),
            algebra_hash: algebra_hash(&alg),
            label: "derived".into(),
            dim: nat.dim(),
            action: None,
            generator_actions: Some(gen_actions),
        };
        let back = module_from_file(&file, &alg).unwrap();
        for i in 0..alg.dim() {
            assert_eq!(back.action(i), nat.action(i));
        }
    }

    #[test]
    fn corrupted_mult_triple_fails_validation() {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        let alg = build_group_algebra(&f, &g).unwrap();
        let mut file = hopf_to_file(alg.presentation());
        // Redirect one product to a wrong basis element.
        let (i, j, k, c) = file.mult[7].clone();
        file.mult[7] = (i, j, (k + 1) % file.dim, c);
        let pres = hopf_from_file(&file).unwrap();
        assert!(HopfAlgebra::new(pres).is_err());
    }

    #[test]
    fn wrong_algebra_hash_is_rejected() {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        let alg = build_group_algebra(&f, &g).unwrap();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let mut file = module_to_file(&nat);
        file.algebra_hash = "0".repeat(64);
        assert!(matches!(
            module_from_file(&file, &alg),
            Err(IoError::Malformed(_))
        ));
    }

    #[test]
    fn field_spec_round_trip() {
        for spec in ["F2", "F7", "Q", "Q(z3)", "Q(z5)"] {
            let f = parse_field(spec).unwrap();
            assert_eq!(format_field(&f), spec);
        }
        assert!(parse_field("F4").is_err()); // not prime
        assert!(parse_field("GF(2)").is_err());
    }
}
