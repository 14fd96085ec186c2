//! Finite-dimensional Hopf algebra presentations over an exact field:
//! structure tensors, axiom validation with failure witnesses, pivot
//! (group-like element implementing S^2 as conjugation), integrals, and
//! unimodularity.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::linalg;
use crate::matrix::Matrix;

/// mult[i][j] = list of (k, c) with b_i * b_j = sum c * b_k
pub type MultTensor = Vec<Vec<Vec<(usize, Scalar)>>>;
/// comult[i] = list of (j, k, d) with Delta(b_i) = sum d * b_j (x) b_k
pub type ComultTensor = Vec<Vec<(usize, usize, Scalar)>>;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("Hopf axiom `{0}` failed{1}")]
    AxiomFailure(String, String),
    #[error("integral space has dimension {0}, expected 1: invalid Hopf data")]
    IntegralDimension(usize),
    #[error("pivot check `{0}` failed{1}")]
    PivotFailure(String, String),
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// Basis-index witness of the first failure, when one exists.
    pub witness: Option<(usize, usize, usize)>,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: &str, witness: Option<(usize, usize, usize)>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: MultTensor,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    pub comult: ComultTensor,
    /// Column i = coordinates of S(b_i).
    pub antipode: Matrix,
    pub pivot: Vec<Scalar>,
    pub generators: Vec<usize>,
}

/// Above this dimension, associativity and the bialgebra law are checked with
/// the left factor restricted to generators (equivalent once generator
/// spanning holds, by induction on monomial length); below it, all triples.
const FULL_CHECK_DIM: usize = 48;

impl HopfPresentation {
    pub fn structural_check(&self) -> Result<(), HopfError> {
        let n = self.dim;
        let bad = |what: &str| Err(HopfError::Malformed(what.to_string()));
        if n == 0 {
            return bad("dimension must be positive");
        }
        if self.basis_labels.len() != n {
            return bad("basis_labels length does not match dim");
        }
        if self.mult.len() != n || self.mult.iter().any(|row| row.len() != n) {
            return bad("mult tensor shape mismatch");
        }
        for row in &self.mult {
            for cell in row {
                for (k, c) in cell {
                    if *k >= n {
                        return bad("mult tensor index out of bounds");
                    }
                    if !self.field.contains(c) {
                        return bad("mult tensor scalar from wrong field");
                    }
                }
            }
        }
        if self.comult.len() != n {
            return bad("comult tensor shape mismatch");
        }
        for cell in &self.comult {
            for (j, k, c) in cell {
                if *j >= n || *k >= n {
                    return bad("comult tensor index out of bounds");
                }
                if !self.field.contains(c) {
                    return bad("comult tensor scalar from wrong field");
                }
            }
        }
        for (label, v) in [
            ("unit", &self.unit),
            ("counit", &self.counit),
            ("pivot", &self.pivot),
        ] {
            if v.len() != n {
                return bad(&format!("{label} vector length mismatch"));
            }
            if v.iter().any(|c| !self.field.contains(c)) {
                return bad(&format!("{label} scalar from wrong field"));
            }
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return bad("antipode matrix shape mismatch");
        }
        if self.antipode.field() != &self.field {
            return bad("antipode matrix over wrong field");
        }
        if self.generators.is_empty() || self.generators.iter().any(|&g| g >= n) {
            return bad("generator subset empty or out of bounds");
        }
        Ok(())
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    /// b_i * y for a dense coordinate vector y.
    pub fn mul_basis_vec(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (j, yj) in y.iter().enumerate() {
            if f.is_zero(yj) {
                continue;
            }
            for (k, c) in self.mul_basis(i, j) {
                out[*k] = f.add(&out[*k], &f.mul(c, yj));
            }
        }
        out
    }

    /// x * b_j for a dense coordinate vector x.
    pub fn mul_vec_basis(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (k, c) in self.mul_basis(i, j) {
                out[*k] = f.add(&out[*k], &f.mul(c, xi));
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let xy = f.mul(xi, yj);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(c, &xy));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x: column j = x * b_j.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(n, n, &self.field);
        for j in 0..n {
            let col = self.mul_vec_basis(x, j);
            for (k, v) in col.into_iter().enumerate() {
                *m.at_mut(k, j) = v;
            }
        }
        m
    }

    /// Matrix of right multiplication by x: column j = b_j * x.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(n, n, &self.field);
        for j in 0..n {
            let col = self.mul_basis_vec(j, x);
            for (k, v) in col.into_iter().enumerate() {
                *m.at_mut(k, j) = v;
            }
        }
        m
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for (i, xi) in x.iter().enumerate() {
            acc = f.add(&acc, &f.mul(xi, &self.counit[i]));
        }
        acc
    }

    pub fn antipode_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let col = Matrix::column(x.to_vec(), &self.field);
        self.antipode.mul(&col).unwrap().col_vec(0)
    }

    /// Delta(x) as a sparse map (j, k) -> coefficient.
    pub fn comult_vec(&self, x: &[Scalar]) -> HashMap<(usize, usize), Scalar> {
        let f = &self.field;
        let mut out: HashMap<(usize, usize), Scalar> = HashMap::new();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, k, d) in &self.comult[i] {
                let e = out.entry((*j, *k)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(d, xi));
            }
        }
        out.retain(|_, v| !f.is_zero(v));
        out
    }
}

fn sparse_is_zero(m: &HashMap<(usize, usize), Scalar>, f: &Field) -> bool {
    m.values().all(|v| f.is_zero(v))
}

/// Validate every Hopf axiom; malformed input is an `Err`, axiom failures are
/// recorded in the report with a basis-index witness.
pub fn validate_hopf(h: &HopfPresentation) -> Result<ValidationReport, HopfError> {
    h.structural_check()?;
    let f = &h.field;
    let n = h.dim;
    let mut report = ValidationReport::default();

    // Unit laws: 1 * b_j = b_j = b_j * 1.
    let mut witness = None;
    'unit: for j in 0..n {
        for (vec, _side) in [(h.mul_vec_basis(&h.unit, j), 0), (h.mul_basis_vec(j, &h.unit), 1)] {
            for (k, v) in vec.iter().enumerate() {
                let expected = if k == j { f.one() } else { f.zero() };
                if !f.is_zero(&f.sub(v, &expected)) {
                    witness = Some((j, j, k));
                    break 'unit;
                }
            }
        }
    }
    report.push("unit laws", witness);

    // Generator spanning closure (products of generators starting from 1).
    let spanning = generator_span_dim(h);
    report.push(
        "generator spanning",
        if spanning == n { None } else { Some((spanning, n, 0)) },
    );

    // Associativity: (b_i b_j) b_k = b_i (b_j b_k). For large algebras the
    // left index ranges over generators only (sufficient given spanning).
    let left_indices: Vec<usize> = if n <= FULL_CHECK_DIM {
        (0..n).collect()
    } else {
        h.generators.clone()
    };
    let mut witness = None;
    'assoc: for &i in &left_indices {
        for j in 0..n {
            // b_i * b_j as a dense vector, reused across k.
            let mut ij = vec![f.zero(); n];
            for (m, c) in h.mul_basis(i, j) {
                ij[*m] = f.add(&ij[*m], c);
            }
            for k in 0..n {
                let lhs = h.mul_vec_basis(&ij, k);
                let mut jk = vec![f.zero(); n];
                for (m, c) in h.mul_basis(j, k) {
                    jk[*m] = f.add(&jk[*m], c);
                }
                let rhs = h.mul_basis_vec(i, &jk);
                if lhs != rhs {
                    witness = Some((i, j, k));
                    break 'assoc;
                }
            }
        }
    }
    report.push("associativity", witness);

    // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta on basis.
    let mut witness = None;
    for i in 0..n {
        let mut acc: HashMap<(usize, usize, usize), Scalar> = HashMap::new();
        for (j, k, d) in &h.comult[i] {
            for (a, b, e) in &h.comult[*j] {
                let key = (*a, *b, *k);
                let v = acc.entry(key).or_insert_with(|| f.zero());
                *v = f.add(v, &f.mul(d, e));
            }
            for (a, b, e) in &h.comult[*k] {
                let key = (*j, *a, *b);
                let v = acc.entry(key).or_insert_with(|| f.zero());
                *v = f.sub(v, &f.mul(d, e));
            }
        }
        if acc.values().any(|v| !f.is_zero(v)) {
            witness = Some((i, 0, 0));
            break;
        }
    }
    report.push("coassociativity", witness);

    // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
    let mut witness = None;
    'counit: for i in 0..n {
        let mut left = vec![f.zero(); n];
        let mut right = vec![f.zero(); n];
        for (j, k, d) in &h.comult[i] {
            left[*k] = f.add(&left[*k], &f.mul(d, &h.counit[*j]));
            right[*j] = f.add(&right[*j], &f.mul(d, &h.counit[*k]));
        }
        for (k, (l, r)) in left.iter().zip(right.iter()).enumerate() {
            let expected = if k == i { f.one() } else { f.zero() };
            if !f.is_zero(&f.sub(l, &expected)) || !f.is_zero(&f.sub(r, &expected)) {
                witness = Some((i, i, k));
                break 'counit;
            }
        }
    }
    report.push("counit laws", witness);

    // Bialgebra: eps and Delta are algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1.
    let mut witness = None;
    'epsmap: for i in 0..n {
        for j in 0..n {
            let mut lhs = f.zero();
            for (k, c) in h.mul_basis(i, j) {
                lhs = f.add(&lhs, &f.mul(c, &h.counit[*k]));
            }
            let rhs = f.mul(&h.counit[i], &h.counit[j]);
            if !f.is_zero(&f.sub(&lhs, &rhs)) {
                witness = Some((i, j, 0));
                break 'epsmap;
            }
        }
    }
    if witness.is_none() && !f.is_one(&h.counit_of(&h.unit)) {
        witness = Some((0, 0, 0));
    }
    report.push("counit is an algebra map", witness);

    let mut witness = None;
    {
        // Delta(1) = 1 (x) 1.
        let mut d1 = h.comult_vec(&h.unit);
        for (a, ua) in h.unit.iter().enumerate() {
            if f.is_zero(ua) {
                continue;
            }
            for (b, ub) in h.unit.iter().enumerate() {
                if f.is_zero(ub) {
                    continue;
                }
                let e = d1.entry((a, b)).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(ua, ub));
            }
        }
        if !sparse_is_zero(&d1, f) {
            witness = Some((0, 0, 0));
        }
    }
    if witness.is_none() {
        'bialg: for &i in &left_indices {
            for j in 0..n {
                // Delta(b_i b_j) - Delta(b_i) Delta(b_j) as a sparse tensor.
                let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
                for (k, c) in h.mul_basis(i, j) {
                    for (a, b, d) in &h.comult[*k] {
                        let e = acc.entry((*a, *b)).or_insert_with(|| f.zero());
                        *e = f.add(e, &f.mul(c, d));
                    }
                }
                for (a1, b1, d1) in &h.comult[i] {
                    for (a2, b2, d2) in &h.comult[j] {
                        let coeff = f.mul(d1, d2);
                        for (a, ca) in h.mul_basis(*a1, *a2) {
                            for (b, cb) in h.mul_basis(*b1, *b2) {
                                let e = acc.entry((*a, *b)).or_insert_with(|| f.zero());
                                *e = f.sub(e, &f.mul(&coeff, &f.mul(ca, cb)));
                            }
                        }
                    }
                }
                if !sparse_is_zero(&acc, f) {
                    witness = Some((i, j, 0));
                    break 'bialg;
                }
            }
        }
    }
    report.push("comultiplication is an algebra map", witness);

    // Antipode axiom: m(S (x) id)Delta = unit . eps = m(id (x) S)Delta.
    let mut witness = None;
    'antipode: for i in 0..n {
        let mut lhs = vec![f.zero(); n];
        let mut rhs = vec![f.zero(); n];
        for (j, k, d) in &h.comult[i] {
            let sj = h.antipode.col_vec(*j);
            let t = h.mul_vec_basis(&sj, *k);
            for (m, v) in t.iter().enumerate() {
                lhs[m] = f.add(&lhs[m], &f.mul(d, v));
            }
            let sk = h.antipode.col_vec(*k);
            let t = h.mul_basis_vec(*j, &sk);
            for (m, v) in t.iter().enumerate() {
                rhs[m] = f.add(&rhs[m], &f.mul(d, v));
            }
        }
        let eps = &h.counit[i];
        for m in 0..n {
            let expected = f.mul(eps, &h.unit[m]);
            if !f.is_zero(&f.sub(&lhs[m], &expected)) {
                witness = Some((i, m, 0));
                break 'antipode;
            }
            if !f.is_zero(&f.sub(&rhs[m], &expected)) {
                witness = Some((i, m, 1));
                break 'antipode;
            }
        }
    }
    report.push("antipode axiom", witness);

    Ok(report)
}

/// Dimension of the span of monomials in the generators (with the unit),
/// built by left-multiplication closure.
fn generator_span_dim(h: &HopfPresentation) -> usize {
    let f = &h.field;
    let n = h.dim;
    let mut span = SpanBuilder::new(n, f.clone());
    let mut worklist: Vec<Vec<Scalar>> = Vec::new();
    if span.add(h.unit.clone()) {
        worklist.push(h.unit.clone());
    }
    while let Some(v) = worklist.pop() {
        if span.dim() == n {
            break;
        }
        for &g in &h.generators {
            let w = h.mul_basis_vec(g, &v);
            if span.add(w.clone()) {
                worklist.push(w);
            }
        }
    }
    span.dim()
}

/// Incremental row-echelon span of coordinate vectors.
pub struct SpanBuilder {
    n: usize,
    field: Field,
    /// Rows in echelon form, paired with their pivot column.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBuilder {
    pub fn new(n: usize, field: Field) -> Self {
        SpanBuilder {
            n,
            field,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce v against the current span; true if it enlarged the span.
    pub fn add(&mut self, mut v: Vec<Scalar>) -> bool {
        let f = &self.field;
        assert_eq!(v.len(), self.n);
        for (pivot, row) in &self.rows {
            if !f.is_zero(&v[*pivot]) {
                let c = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.push((pivot, v));
        true
    }

    /// Does v lie in the current span?
    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if !f.is_zero(&v[*pivot]) {
                let c = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v.iter().all(|x| f.is_zero(x))
    }
}

/// Validate the pivotal structure: pivot invertible, group-like, and
/// S^2(x) = g x g^{-1} on every basis element.
pub fn validate_pivot(h: &HopfPresentation) -> Result<ValidationReport, HopfError> {
    h.structural_check()?;
    let f = &h.field;
    let n = h.dim;
    let mut report = ValidationReport::default();

    let lg = h.left_mult_matrix(&h.pivot);
    let pivot_inv = match linalg::invert(&lg) {
        Ok(inv) => {
            report.push("pivot invertible", None);
            Some(inv.mul(&Matrix::column(h.unit.clone(), f)).unwrap().col_vec(0))
        }
        Err(_) => {
            report.push("pivot invertible", Some((0, 0, 0)));
            None
        }
    };

    // Group-like: Delta(g) = g (x) g and eps(g) = 1.
    let mut dg = h.comult_vec(&h.pivot);
    for (a, ga) in h.pivot.iter().enumerate() {
        if f.is_zero(ga) {
            continue;
        }
        for (b, gb) in h.pivot.iter().enumerate() {
            if f.is_zero(gb) {
                continue;
            }
            let e = dg.entry((a, b)).or_insert_with(|| f.zero());
            *e = f.sub(e, &f.mul(ga, gb));
        }
    }
    let group_like = sparse_is_zero(&dg, f) && f.is_one(&h.counit_of(&h.pivot));
    report.push("pivot group-like", if group_like { None } else { Some((0, 0, 0)) });

    // Conjugation identity.
    let mut witness = None;
    if let Some(ginv) = &pivot_inv {
        for i in 0..n {
            let s1 = h.antipode.col_vec(i);
            let s2 = h.antipode_vec(&s1);
            let mut basis = vec![f.zero(); n];
            basis[i] = f.one();
            let conj = h.mul_vec(&h.mul_vec(&h.pivot, &basis), ginv);
            if s2 != conj {
                witness = Some((i, 0, 0));
                break;
            }
        }
    } else {
        witness = Some((0, 0, 1));
    }
    report.push("antipode squared is pivot conjugation", witness);

    Ok(report)
}

/// A presentation that passed both validators, with cached derived data.
pub struct HopfAlgebra {
    pres: HopfPresentation,
    pivot_inv: Vec<Scalar>,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "HopfAlgebra({}, dim {})", self.pres.name, self.pres.dim)
    }
}

impl HopfAlgebra {
    pub fn new(pres: HopfPresentation) -> Result<Arc<Self>, HopfError> {
        let report = validate_hopf(&pres)?;
        if let Some(fail) = report.first_failure() {
            return Err(HopfError::AxiomFailure(
                fail.name.clone(),
                fail.witness
                    .map_or(String::new(), |w| format!(" (witness {:?})", w)),
            ));
        }
        let report = validate_pivot(&pres)?;
        if let Some(fail) = report.first_failure() {
            return Err(HopfError::PivotFailure(
                fail.name.clone(),
                fail.witness
                    .map_or(String::new(), |w| format!(" (witness {:?})", w)),
            ));
        }
        let lg = pres.left_mult_matrix(&pres.pivot);
        let pivot_inv = linalg::invert(&lg)
            .expect("validated pivot is invertible")
            .mul(&Matrix::column(pres.unit.clone(), &pres.field))
            .unwrap()
            .col_vec(0);
        Ok(Arc::new(HopfAlgebra { pres, pivot_inv }))
    }

    pub fn presentation(&self) -> &HopfPresentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn field(&self) -> &Field {
        &self.pres.field
    }

    pub fn dim(&self) -> usize {
        self.pres.dim
    }

    pub fn generators(&self) -> &[usize] {
        &self.pres.generators
    }

    pub fn pivot(&self) -> &[Scalar] {
        &self.pres.pivot
    }

    pub fn pivot_inv(&self) -> &[Scalar] {
        &self.pivot_inv
    }

    /// Solution space of h*x = eps(h)*x (left) or x*h = eps(h)*x (right),
    /// solved over the generator subset and re-verified on the full basis.
    pub fn integral_space(&self, side: Side) -> Result<IntegralSpace, HopfError> {
        let h = &self.pres;
        let f = &h.field;
        let n = h.dim;
        let mut stacked: Option<Matrix> = None;
        for &g in &h.generators {
            let mut basis = vec![f.zero(); n];
            basis[g] = f.one();
            let m = match side {
                Side::Left => h.left_mult_matrix(&basis),
                Side::Right => h.right_mult_matrix(&basis),
            };
            let shifted = m
                .sub(&Matrix::identity(n, f).scale(&h.counit[g]))
                .unwrap();
            stacked = Some(match stacked {
                None => shifted,
                Some(s) => s.vstack(&shifted).unwrap(),
            });
        }
        let system = stacked.expect("generator set is non-empty");
        let basis = linalg::kernel_basis(&system);
        // Verify candidates against every basis element, not just generators.
        for lam in &basis {
            for i in 0..n {
                let prod = match side {
                    Side::Left => h.mul_basis_vec(i, lam),
                    Side::Right => h.mul_vec_basis(lam, i),
                };
                let scaled: Vec<Scalar> = lam.iter().map(|x| f.mul(x, &h.counit[i])).collect();
                assert_eq!(prod, scaled, "integral candidate fails on full basis");
            }
        }
        if basis.len() != 1 {
            return Err(HopfError::IntegralDimension(basis.len()));
        }
        Ok(IntegralSpace { side, basis })
    }

    /// Left and right integral spaces coincide as subspaces.
    pub fn is_unimodular(&self) -> Result<bool, HopfError> {
        let left = self.integral_space(Side::Left)?;
        let right = self.integral_space(Side::Right)?;
        let f = self.field();
        let mut span = SpanBuilder::new(self.dim(), f.clone());
        span.add(left.basis[0].clone());
        Ok(span.contains(&right.basis[0]))
    }
}

/// Group algebra of Z/2 = {1, g} with pivot 1, written out by hand.
/// Test fixture shared across modules.
#[cfg(test)]
pub(crate) fn sample_kz2(field: Field) -> HopfPresentation {
    let f = &field;
    let one = f.one();
    let mult = vec![
        vec![vec![(0, one.clone())], vec![(1, one.clone())]],
        vec![vec![(1, one.clone())], vec![(0, one.clone())]],
    ];
    let comult = vec![vec![(0, 0, one.clone())], vec![(1, 1, one.clone())]];
    HopfPresentation {
        name: "kZ2".into(),
        field: field.clone(),
        dim: 2,
        basis_labels: vec!["1".into(), "g".into()],
        mult,
        unit: vec![f.one(), f.zero()],
        counit: vec![f.one(), f.one()],
        comult,
        antipode: Matrix::identity(2, f),
        pivot: vec![f.one(), f.zero()],
        generators: vec![1],
    }
}
