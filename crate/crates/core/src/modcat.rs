//! The pivotal module category over a validated Hopf algebra: module
//! representations, intertwiners, tensor products, duals, the four
//! (co)evaluation maps, the pivotal isomorphism, dual morphisms, the
//! leg-swap isomorphism gamma, Hom-spaces, partial traces, and module
//! isomorphism testing.
//!
//! Concrete-model shortcuts (transpose-of-antipode duals, pivot-twisted
//! evaluations) are always cross-checked against the categorical composites
//! they stand for, so a convention slip fails loudly.

use std::collections::HashMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, SpanBuilder};
use crate::linalg;
use crate::matrix::Matrix;

#[derive(Debug, Error)]
pub enum ModcatError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("action is not a module: {0}")]
    NotModule(String),
    #[error("matrix does not intertwine generator {0}")]
    NotIntertwiner(usize),
    #[error("generator actions do not span the algebra (span {0} of {1})")]
    NotSpanning(usize, usize),
}

/// Above this algebra dimension, module-axiom validation restricts the left
/// factor to generators (equivalent given generator spanning).
const FULL_CHECK_DIM: usize = 48;

pub type ModRef = Arc<ModuleRep>;

pub struct ModuleRep {
    algebra: Arc<HopfAlgebra>,
    dim: usize,
    /// action[i] = rho(b_i), one dim x dim matrix per algebra basis element.
    action: Vec<Matrix>,
    label: String,
}

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "ModuleRep({}, dim {})", self.label, self.dim)
    }
}

impl ModuleRep {
    pub fn new(
        algebra: Arc<HopfAlgebra>,
        action: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<ModRef, ModcatError> {
        let n = algebra.dim();
        let f = algebra.field().clone();
        if action.len() != n {
            return Err(ModcatError::Shape(format!(
                "expected {} action matrices, got {}",
                n,
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(ModcatError::Shape("non-square or ragged action".into()));
            }
            if m.field() != &f {
                return Err(ModcatError::Shape("action over wrong field".into()));
            }
        }
        let rep = ModuleRep {
            algebra,
            dim,
            action,
            label: label.into(),
        };
        rep.validate()?;
        Ok(Arc::new(rep))
    }

    fn validate(&self) -> Result<(), ModcatError> {
        let pres = self.algebra.presentation();
        let f = self.field().clone();
        let n = self.algebra.dim();
        // rho(1) = Id.
        if !self.rho(&pres.unit).is_identity() {
            return Err(ModcatError::NotModule("rho(unit) != identity".into()));
        }
        let left: Vec<usize> = if n <= FULL_CHECK_DIM {
            (0..n).collect()
        } else {
            self.algebra.generators().to_vec()
        };
        for &i in &left {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]).unwrap();
                let mut rhs = Matrix::zero(self.dim, self.dim, &f);
                for (k, c) in pres.mul_basis(i, j) {
                    rhs = rhs.add(&self.action[*k].scale(c)).unwrap();
                }
                if lhs != rhs {
                    return Err(ModcatError::NotModule(format!(
                        "rho(b_{i})rho(b_{j}) != rho(b_{i} b_{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// rho(x) for a coordinate vector x of the algebra.
    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zero(self.dim, self.dim, f);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            m = m.add(&self.action[i].scale(xi)).unwrap();
        }
        m
    }

    /// Action of the pivot g on this module.
    pub fn pivot_action(&self) -> Matrix {
        self.rho(self.algebra.pivot())
    }

    pub fn pivot_inv_action(&self) -> Matrix {
        self.rho(self.algebra.pivot_inv())
    }
}

/// The unit object: the counit representation.
pub fn unit_module(algebra: &Arc<HopfAlgebra>) -> ModRef {
    let f = algebra.field().clone();
    let action: Vec<Matrix> = algebra
        .presentation()
        .counit
        .iter()
        .map(|e| Matrix::new(1, 1, vec![e.clone()], f.clone()))
        .collect();
    ModuleRep::new(algebra.clone(), action, "1").expect("counit representation is a module")
}

/// Left regular representation: b_i acts by its left multiplication matrix.
pub fn regular_module(algebra: &Arc<HopfAlgebra>) -> ModRef {
    let pres = algebra.presentation();
    let f = algebra.field();
    let n = algebra.dim();
    let mut action = Vec::with_capacity(n);
    for i in 0..n {
        let mut basis = vec![f.zero(); n];
        basis[i] = f.one();
        action.push(pres.left_mult_matrix(&basis));
    }
    ModuleRep::new(algebra.clone(), action, "regular").expect("regular representation is a module")
}

/// V (x) W with index pairing (a, b) -> a*dim(W) + b; actions through the
/// comultiplication.
pub fn tensor_modules(v: &ModRef, w: &ModRef) -> Result<ModRef, ModcatError> {
    if !Arc::ptr_eq(v.algebra(), w.algebra()) {
        return Err(ModcatError::AlgebraMismatch);
    }
    let alg = v.algebra();
    let pres = alg.presentation();
    let f = alg.field();
    let d = v.dim() * w.dim();
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let mut m = Matrix::zero(d, d, f);
        for (j, k, c) in &pres.comult[i] {
            let kron = v.action(*j).kronecker(w.action(*k));
            m = m.add(&kron.scale(c)).unwrap();
        }
        action.push(m);
    }
    ModuleRep::new(
        alg.clone(),
        action,
        format!("({})(x)({})", v.label(), w.label()),
    )
}

/// V*: b_i acts by transpose of rho(S(b_i)).
pub fn dual_module(v: &ModRef) -> ModRef {
    let alg = v.algebra();
    let pres = alg.presentation();
    let n = alg.dim();
    let mut action = Vec::with_capacity(n);
    for i in 0..n {
        let s_i = pres.antipode.col_vec(i);
        action.push(v.rho(&s_i).transpose());
    }
    ModuleRep::new(alg.clone(), action, format!("({})*", v.label()))
        .expect("dual of a module is a module")
}

#[derive(Clone)]
pub struct Morphism {
    source: ModRef,
    target: ModRef,
    matrix: Matrix,
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fm,
            "Morphism({} -> {}, {}x{})",
            self.source.label(),
            self.target.label(),
            self.matrix.rows(),
            self.matrix.cols()
        )
    }
}

impl Morphism {
    pub fn new(source: ModRef, target: ModRef, matrix: Matrix) -> Result<Morphism, ModcatError> {
        if !Arc::ptr_eq(source.algebra(), target.algebra()) {
            return Err(ModcatError::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(ModcatError::Shape(format!(
                "morphism matrix {}x{} for {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if matrix.field() != source.field() {
            return Err(ModcatError::Shape("morphism over wrong field".into()));
        }
        for &g in source.algebra().generators() {
            let lhs = target.action(g).mul(&matrix).unwrap();
            let rhs = matrix.mul(source.action(g)).unwrap();
            if lhs != rhs {
                return Err(ModcatError::NotIntertwiner(g));
            }
        }
        Ok(Morphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(v: &ModRef) -> Morphism {
        Morphism {
            source: v.clone(),
            target: v.clone(),
            matrix: Matrix::identity(v.dim(), v.field()),
        }
    }

    pub fn source(&self) -> &ModRef {
        &self.source
    }

    pub fn target(&self) -> &ModRef {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// self o other (other first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism, ModcatError> {
        if self.source.dim() != other.target.dim() {
            return Err(ModcatError::Shape("composition dimension mismatch".into()));
        }
        Ok(Morphism {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix).unwrap(),
        })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, ModcatError> {
        let matrix = self
            .matrix
            .add(&other.matrix)
            .map_err(|e| ModcatError::Shape(e.to_string()))?;
        Ok(Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(c),
        }
    }

    pub fn is_invertible(&self) -> bool {
        linalg::is_invertible(&self.matrix)
    }
}

/// The four duality maps of a module, as validated intertwiners.
pub struct DualityData {
    pub dual: ModRef,
    /// 1 -> V (x) V*
    pub coev: Morphism,
    /// V* (x) V -> 1
    pub ev: Morphism,
    /// 1 -> V* (x) V
    pub coev_tilde: Morphism,
    /// V (x) V* -> 1
    pub ev_tilde: Morphism,
}

/// Raw matrices of the four duality maps, in the concrete model:
/// coev = sum x_a (x) x_a*, ev(f (x) x) = f(x), ev~(x (x) f) = f(gx),
/// coev~ = sum x_a* (x) g^{-1} x_a.
fn duality_matrices(v: &ModRef) -> (Matrix, Matrix, Matrix, Matrix) {
    let f = v.field().clone();
    let d = v.dim();
    let p = v.pivot_action();
    let p_inv = v.pivot_inv_action();
    let mut coev = Matrix::zero(d * d, 1, &f);
    let mut ev = Matrix::zero(1, d * d, &f);
    let mut coev_t = Matrix::zero(d * d, 1, &f);
    let mut ev_t = Matrix::zero(1, d * d, &f);
    for a in 0..d {
        *coev.at_mut(a * d + a, 0) = f.one();
        *ev.at_mut(0, a * d + a) = f.one();
        for b in 0..d {
            *ev_t.at_mut(0, a * d + b) = p.at(b, a).clone();
            *coev_t.at_mut(a * d + b, 0) = p_inv.at(b, a).clone();
        }
    }
    (coev, ev, coev_t, ev_t)
}

pub fn duality_morphisms(v: &ModRef) -> Result<DualityData, ModcatError> {
    let alg = v.algebra();
    let f = v.field().clone();
    let d = v.dim();
    let dual = dual_module(v);
    let unit = unit_module(alg);
    let v_vstar = tensor_modules(v, &dual)?;
    let vstar_v = tensor_modules(&dual, v)?;
    let (coev_m, ev_m, coev_t_m, ev_t_m) = duality_matrices(v);

    // Zig-zag identities, checked on raw matrices before wrapping.
    let id = Matrix::identity(d, &f);
    let z1 = id.kronecker(&ev_m).mul(&coev_m.kronecker(&id)).unwrap();
    let z2 = ev_m.kronecker(&id).mul(&id.kronecker(&coev_m)).unwrap();
    let z3 = ev_t_m.kronecker(&id).mul(&id.kronecker(&coev_t_m)).unwrap();
    let z4 = id.kronecker(&ev_t_m).mul(&coev_t_m.kronecker(&id)).unwrap();
    for (name, z) in [("left-1", z1), ("left-2", z2), ("right-1", z3), ("right-2", z4)] {
        if !z.is_identity() {
            return Err(ModcatError::NotModule(format!(
                "zig-zag identity {name} fails on {}: invalid pivot data",
                v.label()
            )));
        }
    }

    Ok(DualityData {
        coev: Morphism::new(unit.clone(), v_vstar.clone(), coev_m)?,
        ev: Morphism::new(vstar_v.clone(), unit.clone(), ev_m)?,
        coev_tilde: Morphism::new(unit.clone(), vstar_v, coev_t_m)?,
        ev_tilde: Morphism::new(v_vstar, unit, ev_t_m)?,
        dual,
    })
}

/// The pivotal isomorphism V -> V**, computed as the categorical composite
/// (ev~_V (x) Id)(Id (x) coev_{V*}) and asserted equal to the pivot action
/// under the canonical identification V** = V.
pub fn pivotal_phi(v: &ModRef) -> Result<Morphism, ModcatError> {
    let f = v.field().clone();
    let d = v.dim();
    let dual = dual_module(v);
    let ddual = dual_module(&dual);
    let (coev_star, _, _, _) = duality_matrices(&dual);
    let (_, _, _, ev_t) = duality_matrices(v);
    let id = Matrix::identity(d, &f);
    let composite = ev_t
        .kronecker(&id)
        .mul(&id.kronecker(&coev_star))
        .unwrap();
    let shortcut = v.pivot_action();
    assert_eq!(
        composite, shortcut,
        "pivotal map composite disagrees with pivot action on {}",
        v.label()
    );
    Morphism::new(v.clone(), ddual, composite)
}

/// f*: W* -> V*, transpose in the concrete model; asserted equal to the
/// categorical composite (ev_W (x) Id)(Id (x) f (x) Id)(Id (x) coev_V).
pub fn dual_morphism(f: &Morphism) -> Result<Morphism, ModcatError> {
    let field = f.source().field().clone();
    let dv = f.source().dim();
    let dw = f.target().dim();
    let dual_v = dual_module(f.source());
    let dual_w = dual_module(f.target());
    let (coev_v, _, _, _) = duality_matrices(f.source());
    let (_, ev_w, _, _) = duality_matrices(f.target());
    // Categorical composite (ev_W (x) Id)(Id (x) f (x) Id)(Id (x) coev_V),
    // contracted index-by-index to avoid materializing the Kronecker
    // intermediates (which grow as (dw*dv^2)^2):
    //   composite[d, b] = sum_{c,m} coev_V[(c,d)] f[m,c] ev_W[(b,m)].
    let mut composite = Matrix::zero(dv, dw, &field);
    for d in 0..dv {
        for b in 0..dw {
            let mut acc = field.zero();
            for c in 0..dv {
                let cv = coev_v.at(c * dv + d, 0);
                if field.is_zero(cv) {
                    continue;
                }
                for m in 0..dw {
                    let fv = f.matrix().at(m, c);
                    if field.is_zero(fv) {
                        continue;
                    }
                    let ev = ev_w.at(0, b * dw + m);
                    acc = field.add(&acc, &field.mul(cv, &field.mul(fv, ev)));
                }
            }
            *composite.at_mut(d, b) = acc;
        }
    }
    let shortcut = f.matrix().transpose();
    assert_eq!(
        composite, shortcut,
        "dual morphism composite disagrees with transpose"
    );
    Morphism::new(dual_w, dual_v, shortcut)
}

/// gamma_{V,W}: W* (x) V* -> (V (x) W)*, computed from the categorical
/// composite and asserted to be the leg-swap permutation.
pub fn gamma(v: &ModRef, w: &ModRef) -> Result<Morphism, ModcatError> {
    if !Arc::ptr_eq(v.algebra(), w.algebra()) {
        return Err(ModcatError::AlgebraMismatch);
    }
    let f = v.field().clone();
    let (dv, dw) = (v.dim(), w.dim());
    let (_, ev_v, _, _) = duality_matrices(v);
    let (_, ev_w, _, _) = duality_matrices(w);
    let idw = Matrix::identity(dw, &f);
    // E: W* (x) V* (x) V (x) W -> 1, E = ev_W (Id (x) ev_V (x) Id).
    let e = ev_w
        .mul(&idw.kronecker(&ev_v).kronecker(&idw))
        .unwrap();
    // gamma[row (c,d), col (b,a)] = E[(b,a,c,d)].
    let mut m = Matrix::zero(dv * dw, dw * dv, &f);
    for b in 0..dw {
        for a in 0..dv {
            for c in 0..dv {
                for dd in 0..dw {
                    let idx = ((b * dv + a) * dv + c) * dw + dd;
                    *m.at_mut(c * dw + dd, b * dv + a) = e.at(0, idx).clone();
                }
            }
        }
    }
    // Shortcut: permutation sending (b, a) to (a, b).
    for b in 0..dw {
        for a in 0..dv {
            for c in 0..dv {
                for dd in 0..dw {
                    let expected = if a == c && b == dd { f.one() } else { f.zero() };
                    assert_eq!(
                        m.at(c * dw + dd, b * dv + a),
                        &expected,
                        "gamma is not the leg-swap permutation"
                    );
                }
            }
        }
    }
    let source = tensor_modules(&dual_module(w), &dual_module(v))?;
    let target = dual_module(&tensor_modules(v, w)?);
    Morphism::new(source, target, m)
}

/// The right-duality variant gamma' computed through coev~ and ev~;
/// the paper's identity gamma = gamma' is verified in tests.
pub fn gamma_right(v: &ModRef, w: &ModRef) -> Result<Morphism, ModcatError> {
    if !Arc::ptr_eq(v.algebra(), w.algebra()) {
        return Err(ModcatError::AlgebraMismatch);
    }
    let f = v.field().clone();
    let (dv, dw) = (v.dim(), w.dim());
    let pv = v.pivot_action();
    let pw = w.pivot_action();
    let vw = tensor_modules(v, w)?;
    let pvw_inv = vw.pivot_inv_action();
    // gamma'[row m, col (b,a)] = sum_{c,d} coev~_{VW}[(c,d), m] P_W[b,d] P_V[a,c].
    let mut m = Matrix::zero(dv * dw, dw * dv, &f);
    for b in 0..dw {
        for a in 0..dv {
            for mm in 0..dv * dw {
                let mut acc = f.zero();
                for c in 0..dv {
                    for dd in 0..dw {
                        let coef = pvw_inv.at(c * dw + dd, mm);
                        if f.is_zero(coef) {
                            continue;
                        }
                        let t = f.mul(pw.at(b, dd), pv.at(a, c));
                        acc = f.add(&acc, &f.mul(coef, &t));
                    }
                }
                *m.at_mut(mm, b * dv + a) = acc;
            }
        }
    }
    let source = tensor_modules(&dual_module(w), &dual_module(v))?;
    let target = dual_module(&vw);
    Morphism::new(source, target, m)
}

pub struct HomSpace {
    pub source: ModRef,
    pub target: ModRef,
    pub basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of Hom(v, w): kernel of the generator intertwiner system.
pub fn hom_basis(v: &ModRef, w: &ModRef) -> Result<HomSpace, ModcatError> {
    if !Arc::ptr_eq(v.algebra(), w.algebra()) {
        return Err(ModcatError::AlgebraMismatch);
    }
    let f = v.field().clone();
    let (ds, dt) = (v.dim(), w.dim());
    let gens = v.algebra().generators();
    // Unknown F is dt x ds, flattened (r, c) -> r*ds + c.
    let rows = gens.len() * dt * ds;
    let mut system = Matrix::zero(rows, dt * ds, &f);
    for (gi, &g) in gens.iter().enumerate() {
        let rho_t = w.action(g);
        let rho_s = v.action(g);
        for i in 0..dt {
            for j in 0..ds {
                let row = gi * dt * ds + i * ds + j;
                // coefficient of F[r, c] in (rho_t F - F rho_s)[i, j]
                for r in 0..dt {
                    let c = rho_t.at(i, r);
                    if !f.is_zero(c) {
                        let col = r * ds + j;
                        *system.at_mut(row, col) = f.add(system.at(row, col), c);
                    }
                }
                for c in 0..ds {
                    let s = rho_s.at(c, j);
                    if !f.is_zero(s) {
                        let col = i * ds + c;
                        *system.at_mut(row, col) = f.sub(system.at(row, col), s);
                    }
                }
            }
        }
    }
    let kernel = linalg::kernel_basis(&system);
    let mut basis = Vec::with_capacity(kernel.len());
    for vecf in kernel {
        let mut m = Matrix::zero(dt, ds, &f);
        for r in 0..dt {
            for c in 0..ds {
                *m.at_mut(r, c) = vecf[r * ds + c].clone();
            }
        }
        basis.push(Morphism::new(v.clone(), w.clone(), m)?);
    }
    Ok(HomSpace {
        source: v.clone(),
        target: w.clone(),
        basis,
    })
}

/// (Id_V (x) ev~_W)(f (x) Id_{W*})(Id_V (x) coev_W) for f: V (x) W -> V (x) W.
pub fn partial_trace_right(f: &Morphism, v: &ModRef, w: &ModRef) -> Result<Morphism, ModcatError> {
    let field = v.field().clone();
    let (dv, dw) = (v.dim(), w.dim());
    let fm = f.matrix();
    if fm.rows() != dv * dw || fm.cols() != dv * dw {
        return Err(ModcatError::Shape(format!(
            "partial trace expects a {}x{} endomorphism",
            dv * dw,
            dv * dw
        )));
    }
    let p = w.pivot_action();
    let mut out = Matrix::zero(dv, dv, &field);
    for i in 0..dv {
        for j in 0..dv {
            let mut acc = field.zero();
            for a in 0..dw {
                for b in 0..dw {
                    let t = fm.at(i * dw + b, j * dw + a);
                    if field.is_zero(t) {
                        continue;
                    }
                    acc = field.add(&acc, &field.mul(t, p.at(a, b)));
                }
            }
            *out.at_mut(i, j) = acc;
        }
    }
    Morphism::new(v.clone(), v.clone(), out)
}

/// Same composite built from actual kronecker products; used to pin the
/// index conventions of the direct formula.
pub fn partial_trace_right_composite(f: &Morphism, v: &ModRef, w: &ModRef) -> Matrix {
    let field = v.field().clone();
    let dv = v.dim();
    let (_, _, _, ev_t) = duality_matrices(w);
    let (coev, _, _, _) = duality_matrices(w);
    let idv = Matrix::identity(dv, &field);
    let idws = Matrix::identity(w.dim(), &field);
    idv.kronecker(&ev_t)
        .mul(&f.matrix().kronecker(&idws))
        .unwrap()
        .mul(&idv.kronecker(&coev))
        .unwrap()
}

#[derive(Debug)]
pub enum IsoVerdict {
    /// A certified invertible intertwiner.
    Iso(Morphism),
    /// Definitely not isomorphic.
    No,
    /// Search exhausted without certificate (probabilistic "no").
    Unknown,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso(_))
    }
}

const ISO_RANDOM_TRIALS: usize = 64;

/// Search Hom(v, w) for an invertible intertwiner: each basis element, then
/// 64 seeded random combinations. "Iso" is a certificate; "No" is definite
/// only in the trivially-decidable cases (dimension mismatch, zero Hom).
pub fn iso_test(v: &ModRef, w: &ModRef, seed: u64) -> Result<IsoVerdict, ModcatError> {
    if v.dim() != w.dim() {
        return Ok(IsoVerdict::No);
    }
    let hom = hom_basis(v, w)?;
    if hom.basis.is_empty() {
        return Ok(IsoVerdict::No);
    }
    if let Some(iso) = search_invertible(&hom, seed) {
        return Ok(IsoVerdict::Iso(iso));
    }
    Ok(IsoVerdict::Unknown)
}

/// Exact isomorphism decision for indecomposable modules with local
/// endomorphism rings (e.g. certified summands from a decomposition): v and w
/// are isomorphic iff some composite Hom(w,v) o Hom(v,w) basis pair is
/// non-nilpotent, in which case that pair yields the isomorphism.
pub fn iso_test_indecomposable(
    v: &ModRef,
    w: &ModRef,
    seed: u64,
) -> Result<IsoVerdict, ModcatError> {
    if v.dim() != w.dim() {
        return Ok(IsoVerdict::No);
    }
    let hom_vw = hom_basis(v, w)?;
    let hom_wv = hom_basis(w, v)?;
    if hom_vw.basis.is_empty() || hom_wv.basis.is_empty() {
        return Ok(IsoVerdict::No);
    }
    if let Some(iso) = search_invertible(&hom_vw, seed) {
        return Ok(IsoVerdict::Iso(iso));
    }
    // All basis composites nilpotent => Hom(w,v) o Hom(v,w) lies in the
    // radical of the local ring End(v), so no unit, so no isomorphism.
    let d = v.dim() as u64;
    for h in &hom_vw.basis {
        for hp in &hom_wv.basis {
            let comp = hp.matrix().mul(h.matrix()).unwrap();
            if comp.pow(d).is_zero() {
                continue;
            }
            // Non-nilpotent composite: a unit in a local End(v), so h is an
            // isomorphism. If inversion fails the locality assumption was
            // violated; fall back to Unknown.
            if linalg::is_invertible(h.matrix()) {
                return Ok(IsoVerdict::Iso(h.clone()));
            }
            if let Ok(inv) = linalg::invert(&comp) {
                // (h'h)^{-1} h' is a left inverse of h of equal dimension.
                let left_inv = inv.mul(hp.matrix()).unwrap();
                if left_inv.mul(h.matrix()).unwrap().is_identity() {
                    return Ok(IsoVerdict::Iso(h.clone()));
                }
            }
            return Ok(IsoVerdict::Unknown);
        }
    }
    Ok(IsoVerdict::No)
}

fn search_invertible(hom: &HomSpace, seed: u64) -> Option<Morphism> {
    for m in &hom.basis {
        if m.is_invertible() {
            return Some(m.clone());
        }
    }
    if hom.basis.len() < 2 {
        return None;
    }
    let f = hom.source.field().clone();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_TRIALS {
        let mut acc = hom.basis[0].scale(&f.random(&mut rng));
        for m in &hom.basis[1..] {
            acc = acc.add(&m.scale(&f.random(&mut rng))).unwrap();
        }
        if acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}

/// Derive the full action list from generator actions alone, through the
/// multiplication tensor and monomial closure.
pub fn derive_action_from_generators(
    algebra: &Arc<HopfAlgebra>,
    gen_actions: &HashMap<usize, Matrix>,
    dim: usize,
    label: impl Into<String>,
) -> Result<ModRef, ModcatError> {
    let pres = algebra.presentation();
    let f = algebra.field().clone();
    let n = algebra.dim();
    for &g in algebra.generators() {
        let m = gen_actions
            .get(&g)
            .ok_or_else(|| ModcatError::Shape(format!("missing action for generator {g}")))?;
        if m.rows() != dim || m.cols() != dim {
            return Err(ModcatError::Shape("generator action shape mismatch".into()));
        }
    }
    // Monomial closure: track each monomial's algebra coordinates and its
    // candidate representation matrix in parallel.
    let mut span = SpanBuilder::new(n, f.clone());
    let mut vecs: Vec<Vec<Scalar>> = Vec::new();
    let mut mats: Vec<Matrix> = Vec::new();
    let mut worklist: Vec<(Vec<Scalar>, Matrix)> = Vec::new();
    let unit_mat = Matrix::identity(dim, &f);
    if span.add(pres.unit.clone()) {
        vecs.push(pres.unit.clone());
        mats.push(unit_mat.clone());
        worklist.push((pres.unit.clone(), unit_mat));
    }
    while let Some((hv, hm)) = worklist.pop() {
        if span.dim() == n {
            break;
        }
        for &g in algebra.generators() {
            let new_v = pres.mul_basis_vec(g, &hv);
            if span.add(new_v.clone()) {
                let new_m = gen_actions[&g].mul(&hm).unwrap();
                vecs.push(new_v.clone());
                mats.push(new_m.clone());
                worklist.push((new_v, new_m));
            }
        }
    }
    if span.dim() != n {
        return Err(ModcatError::NotSpanning(span.dim(), n));
    }
    // Express each basis element in the monomial basis: solve B X = I.
    let b = Matrix::from_columns(&vecs, &f);
    let sol = linalg::solve_linear(&b, &Matrix::identity(n, &f)).unwrap();
    let x = sol.solution.expect("monomial basis spans");
    let mut action = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = Matrix::zero(dim, dim, &f);
        for (mi, mat) in mats.iter().enumerate() {
            let c = x.at(mi, i);
            if f.is_zero(c) {
                continue;
            }
            m = m.add(&mat.scale(c)).unwrap();
        }
        action.push(m);
    }
    ModuleRep::new(algebra.clone(), action, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::{sample_kz2, HopfAlgebra};

    fn alg_f3() -> Arc<HopfAlgebra> {
        HopfAlgebra::new(sample_kz2(Field::prime(3).unwrap())).unwrap()
    }

    fn sign_module(alg: &Arc<HopfAlgebra>) -> ModRef {
        let f = alg.field().clone();
        let action = vec![
            Matrix::identity(1, &f),
            Matrix::new(1, 1, vec![f.from_i64(-1)], f.clone()),
        ];
        ModuleRep::new(alg.clone(), action, "sign").unwrap()
    }

    #[test]
    fn unit_and_regular_validate() {
        let alg = alg_f3();
        let one = unit_module(&alg);
        assert_eq!(one.dim(), 1);
        let reg = regular_module(&alg);
        assert_eq!(reg.dim(), 2);
        assert!(reg.rho(&alg.presentation().unit).is_identity());
    }

    #[test]
    fn bad_action_rejected() {
        let alg = alg_f3();
        let f = alg.field().clone();
        // g must act with square = identity; 2x2 nilpotent breaks it.
        let action = vec![
            Matrix::identity(2, &f),
            Matrix::from_i64_rows(&[vec![0, 1], vec![0, 0]], &f),
        ];
        assert!(matches!(
            ModuleRep::new(alg, action, "bad"),
            Err(ModcatError::NotModule(_))
        ));
    }

    #[test]
    fn tensor_with_unit_is_identity_on_actions() {
        let alg = alg_f3();
        let one = unit_module(&alg);
        let reg = regular_module(&alg);
        let t = tensor_modules(&one, &reg).unwrap();
        assert_eq!(t.dim(), reg.dim());
        for i in 0..alg.dim() {
            assert_eq!(t.action(i), reg.action(i));
        }
    }

    #[test]
    fn dual_dimensions_and_double_dual() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let d = dual_module(&reg);
        assert_eq!(d.dim(), reg.dim());
        assert_eq!(dual_module(&d).dim(), reg.dim());
    }

    #[test]
    fn duality_zigzags_hold() {
        let alg = alg_f3();
        for v in [unit_module(&alg), regular_module(&alg), sign_module(&alg)] {
            duality_morphisms(&v).unwrap();
        }
    }

    #[test]
    fn phi_equals_pivot_action() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let phi = pivotal_phi(&reg).unwrap();
        // Pivot is 1 here, so phi is the identity matrix.
        assert!(phi.matrix().is_identity());
        assert!(phi.is_invertible());
    }

    #[test]
    fn gamma_is_leg_swap_and_matches_right_variant() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let sgn = sign_module(&alg);
        for (v, w) in [(&reg, &reg), (&reg, &sgn), (&sgn, &reg)] {
            let g = gamma(v, w).unwrap();
            assert!(g.is_invertible());
            let gp = gamma_right(v, w).unwrap();
            assert_eq!(g.matrix(), gp.matrix());
        }
    }

    #[test]
    fn hom_and_end_dimensions() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let one = unit_module(&alg);
        let sgn = sign_module(&alg);
        // kZ2 over F_3 is semisimple: regular = 1 + sign.
        assert_eq!(hom_basis(&reg, &reg).unwrap().dim(), 2);
        assert_eq!(hom_basis(&one, &reg).unwrap().dim(), 1);
        assert_eq!(hom_basis(&one, &sgn).unwrap().dim(), 0);
        // Adjunction sanity: dim Hom(1, V (x) V*) = dim End(V).
        let dualr = dual_module(&reg);
        let vvs = tensor_modules(&reg, &dualr).unwrap();
        assert_eq!(hom_basis(&one, &vvs).unwrap().dim(), 2);
    }

    #[test]
    fn partial_trace_of_identity_and_composite_agreement() {
        let alg = alg_f3();
        let f = alg.field().clone();
        let reg = regular_module(&alg);
        let sgn = sign_module(&alg);
        let t = tensor_modules(&reg, &sgn).unwrap();
        let idt = Morphism::identity(&t);
        let ptr = partial_trace_right(&idt, &reg, &sgn).unwrap();
        // Pivot is 1: trace of pivot action on sign = 1.
        let expected = Matrix::identity(reg.dim(), &f).scale(&sgn.pivot_action().trace());
        assert_eq!(ptr.matrix(), &expected);
        assert_eq!(
            ptr.matrix(),
            &partial_trace_right_composite(&idt, &reg, &sgn)
        );
        // W = 1 returns f unchanged.
        let one = unit_module(&alg);
        let tv1 = tensor_modules(&reg, &one).unwrap();
        let idv = Morphism::identity(&tv1);
        let ptr = partial_trace_right(&idv, &reg, &one).unwrap();
        assert!(ptr.matrix().is_identity());
    }

    #[test]
    fn iso_tests() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let one = unit_module(&alg);
        let sgn = sign_module(&alg);
        assert!(iso_test(&reg, &reg, 0).unwrap().is_iso());
        assert!(matches!(iso_test(&one, &sgn, 0).unwrap(), IsoVerdict::No));
        assert!(matches!(iso_test(&one, &reg, 0).unwrap(), IsoVerdict::No));
        assert!(iso_test_indecomposable(&one, &one, 0).unwrap().is_iso());
        assert!(matches!(
            iso_test_indecomposable(&one, &sgn, 0).unwrap(),
            IsoVerdict::No
        ));
        // Dual of sign is sign (S = id here).
        let dsgn = dual_module(&sgn);
        assert!(iso_test(&sgn, &dsgn, 0).unwrap().is_iso());
    }

    #[test]
    fn dual_morphism_functoriality() {
        let alg = alg_f3();
        let reg = regular_module(&alg);
        let homs = hom_basis(&reg, &reg).unwrap();
        for a in &homs.basis {
            for b in &homs.basis {
                let ab = a.compose(b).unwrap();
                let dab = dual_morphism(&ab).unwrap();
                let da = dual_morphism(a).unwrap();
                let db = dual_morphism(b).unwrap();
                assert_eq!(dab.matrix(), db.compose(&da).unwrap().matrix());
            }
        }
        let id = Morphism::identity(&reg);
        assert!(dual_morphism(&id).unwrap().matrix().is_identity());
    }

    #[test]
    fn derive_action_from_generator_matrices() {
        let alg = alg_f3();
        let f = alg.field().clone();
        // Rebuild the sign module from the action of g alone.
        let mut gens = HashMap::new();
        gens.insert(1usize, Matrix::new(1, 1, vec![f.from_i64(-1)], f.clone()));
        let m = derive_action_from_generators(&alg, &gens, 1, "sign-derived").unwrap();
        let sgn = sign_module(&alg);
        for i in 0..alg.dim() {
            assert_eq!(m.action(i), sgn.action(i));
        }
    }
}
