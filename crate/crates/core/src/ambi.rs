//! Ambidexterity tests and the modified trace.
//!
//! An absolutely simple module V is right ambidextrous when every
//! endomorphism f of V⊗V* acts by the same scalar on coev_V (from the left)
//! and on ev~_V (from the right). For ambidextrous V, a trace functional is
//! defined on modules U that split through V: pick W = V*⊗U with
//! β = ev~_V⊗Id and a retraction α, then t_U(f) is the scalar by which the
//! right partial trace of α∘f∘β acts on V, normalized so that t_V(Id) = 1.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::decomp::{decompose, locate_j, locate_jprime, DecompError};
use crate::field::Scalar;
use crate::linalg::{invert, solve_linear};
use crate::matrix::{Matrix, MatrixError};
use crate::modcat::{
    dual_module, dual_morphism, duality_morphisms, gamma, hom_basis, iso_test_indecomposable,
    partial_trace_right, pivotal_phi, tensor_modules, IsoVerdict, ModRef, ModcatError, Morphism,
};

#[derive(Debug, Error)]
pub enum AmbiError {
    #[error("module is not absolutely simple: End has dimension {0}")]
    NotAbsolutelySimple(usize),
    #[error("structural test unavailable: {0}")]
    UncertifiedDecomposition(String),
    #[error("module is not right ambidextrous")]
    NotAmbi,
    #[error("no splitting of the module through the ambidextrous module: {0}")]
    NoSplitting(String),
    #[error("the right evaluation map is zero")]
    DegenerateEv,
    #[error("partial trace is not scalar on an absolutely simple module")]
    NonScalarEndomorphism,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Modcat(#[from] ModcatError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A basis endomorphism of V⊗V* whose two scalars disagree.
#[derive(Debug, Clone)]
pub struct DirectWitness {
    pub basis_index: usize,
    pub lambda: Scalar,
    pub mu: Scalar,
}

#[derive(Debug)]
pub struct DirectOutcome {
    pub ambi: bool,
    pub witness: Option<DirectWitness>,
}

#[derive(Debug)]
pub struct StructuralOutcome {
    pub ambi: bool,
    /// Index of the summand of V⊗V* receiving coev.
    pub j: usize,
    /// Index of the summand pairing with ev~.
    pub jprime: usize,
    /// Whether W_j* ≅ W_j, when the isomorphism test is definite.
    pub dual_summand_self_iso: Option<bool>,
}

#[derive(Debug)]
pub struct AmbiVerdict {
    pub module: ModRef,
    pub direct: bool,
    pub direct_witness: Option<DirectWitness>,
    pub structural: Option<StructuralOutcome>,
    /// Reason the structural verdict is absent, when it is.
    pub structural_skipped: Option<String>,
}

/// Scalar by which a column vector is a multiple of a reference column;
/// None if it is not a multiple. Uses the first nonzero coordinate of the
/// reference, under the deterministic basis order.
fn scalar_multiple(of: &Matrix, reference: &Matrix) -> Option<Scalar> {
    let f = reference.field().clone();
    let pivot = reference.entries().iter().position(|e| !f.is_zero(e))?;
    let c = f.div(&of.entries()[pivot], &reference.entries()[pivot])?;
    let scaled = reference.scale(&c);
    if scaled == *of {
        Some(c)
    } else {
        None
    }
}

/// Direct ambidexterity test over the full basis of End(V⊗V*).
pub fn ambi_direct(v: &ModRef) -> Result<DirectOutcome, AmbiError> {
    let end_v = hom_basis(v, v)?;
    if end_v.dim() != 1 {
        return Err(AmbiError::NotAbsolutelySimple(end_v.dim()));
    }
    let dual = duality_morphisms(v)?;
    let vv = tensor_modules(v, &dual.dual)?;
    let end_vv = hom_basis(&vv, &vv)?;
    let coev = dual.coev.matrix();
    let ev_t = dual.ev_tilde.matrix();
    if ev_t.is_zero() {
        return Err(AmbiError::DegenerateEv);
    }
    let mut witness = None;
    for (k, b) in end_vv.basis.iter().enumerate() {
        let f_coev = b.matrix().mul(coev)?;
        let ev_f = ev_t.mul(b.matrix())?;
        // Hom(1, V⊗V*) and Hom(V⊗V*, 1) are 1-dimensional for absolutely
        // simple V, so both composites must be multiples.
        let lambda = scalar_multiple(&f_coev, coev)
            .ok_or_else(|| AmbiError::Internal("f∘coev is not a multiple of coev".into()))?;
        let mu = scalar_multiple(&ev_f, ev_t)
            .ok_or_else(|| AmbiError::Internal("ev~∘f is not a multiple of ev~".into()))?;
        if lambda != mu {
            witness = Some(DirectWitness {
                basis_index: k,
                lambda,
                mu,
            });
            break;
        }
    }
    // Convention audit: evaluate the defining equation with its duality
    // identifications spelled out, on the first basis element:
    //   f ∘ coev_V = (φ_V⁻¹ ⊗ Id) ∘ γ⁻¹ ∘ f* ∘ γ ∘ coev~_{V*}
    // and confirm it agrees with the scalar comparison.
    if let Some(b) = end_vv.basis.first() {
        let f = v.field().clone();
        let lhs = b.matrix().mul(coev)?;
        let ddual = duality_morphisms(&dual.dual)?;
        let g = gamma(v, &dual.dual)?;
        let g_inv = invert(g.matrix())?;
        let fstar = dual_morphism(b)?;
        let phi = pivotal_phi(v)?;
        let phi_inv = invert(phi.matrix())?;
        let id_dual = Matrix::identity(dual.dual.dim(), &f);
        let rhs = phi_inv
            .kronecker(&id_dual)
            .mul(&g_inv)?
            .mul(fstar.matrix())?
            .mul(g.matrix())?
            .mul(ddual.coev_tilde.matrix())?;
        let agrees = lhs == rhs;
        let scalars_agree = {
            let f_coev = b.matrix().mul(coev)?;
            let ev_f = ev_t.mul(b.matrix())?;
            scalar_multiple(&f_coev, coev) == scalar_multiple(&ev_f, ev_t)
        };
        if agrees != scalars_agree {
            return Err(AmbiError::Internal(
                "scalar comparison disagrees with the defining equation".into(),
            ));
        }
    }
    Ok(DirectOutcome {
        ambi: witness.is_none(),
        witness,
    })
}

/// Structural ambidexterity test: decompose V⊗V* and compare the summands
/// distinguished by coev and ev~.
pub fn ambi_structural(v: &ModRef, seed: u64) -> Result<StructuralOutcome, AmbiError> {
    let end_v = hom_basis(v, v)?;
    if end_v.dim() != 1 {
        return Err(AmbiError::NotAbsolutelySimple(end_v.dim()));
    }
    let dual = dual_module(v);
    let vv = tensor_modules(v, &dual)?;
    let d = decompose(&vv, seed).map_err(|e| match e {
        DecompError::NotPrimeField(k) => {
            AmbiError::UncertifiedDecomposition(format!("decomposition needs a prime field, got {k:?}"))
        }
        other => AmbiError::Decomp(other),
    })?;
    if !d.all_certified() {
        return Err(AmbiError::UncertifiedDecomposition(
            "decomposition of V⊗V* has uncertified summands".into(),
        ));
    }
    let j = locate_j(v, &d)?;
    let jprime = locate_jprime(v, &d)?;
    let ambi = j == jprime;
    let wj = &d.summands[j].module;
    let self_iso = match iso_test_indecomposable(&dual_module(wj), wj, seed)? {
        IsoVerdict::Iso(_) => Some(true),
        IsoVerdict::No => Some(false),
        IsoVerdict::Unknown => None,
    };
    // The two characterizations must agree whenever the iso test is definite.
    if let Some(iso) = self_iso {
        if iso != ambi {
            return Err(AmbiError::Internal(
                "summand comparison and self-duality test disagree".into(),
            ));
        }
    }
    Ok(StructuralOutcome {
        ambi,
        j,
        jprime,
        dual_summand_self_iso: self_iso,
    })
}

/// Run the direct test and, when feasible, the structural test; their
/// verdicts must agree.
pub fn ambi_verdict(v: &ModRef, seed: u64, try_structural: bool) -> Result<AmbiVerdict, AmbiError> {
    let direct = ambi_direct(v)?;
    let (structural, skipped) = if try_structural {
        match ambi_structural(v, seed) {
            Ok(s) => (Some(s), None),
            Err(AmbiError::UncertifiedDecomposition(reason)) => (None, Some(reason)),
            Err(e) => return Err(e),
        }
    } else {
        (None, Some("structural test not requested".into()))
    };
    if let Some(s) = &structural {
        if s.ambi != direct.ambi {
            return Err(AmbiError::Internal(
                "direct and structural verdicts disagree".into(),
            ));
        }
    }
    Ok(AmbiVerdict {
        module: Arc::clone(v),
        direct: direct.ambi,
        direct_witness: direct.witness,
        structural,
        structural_skipped: skipped,
    })
}

/// A splitting of U through V: W = V*⊗U, β = ev~_V⊗Id_U, and a retraction α
/// with β∘α = Id_U. `alpha_alternatives` spans the affine freedom in α
/// (intertwiners U → V⊗W killed by β).
pub struct Splitting {
    pub w: ModRef,
    pub vw: ModRef,
    pub alpha: Morphism,
    pub beta: Morphism,
    pub alpha_alternatives: Vec<Morphism>,
}

/// Split u through v along the witness W = V*⊗U.
pub fn split_through(v: &ModRef, u: &ModRef) -> Result<Splitting, AmbiError> {
    let f = v.field().clone();
    let dual = duality_morphisms(v)?;
    let w = tensor_modules(&dual.dual, u)?;
    let vw = tensor_modules(v, &w)?;
    let ev_t = dual.ev_tilde.matrix();
    if ev_t.is_zero() {
        return Err(AmbiError::DegenerateEv);
    }
    let beta_mat = ev_t.kronecker(&Matrix::identity(u.dim(), &f));
    let beta = Morphism::new(Arc::clone(&vw), Arc::clone(u), beta_mat.clone())?;
    // α = Σ c_i h_i over a basis of Hom(U, V⊗W), subject to β ∘ α = Id_U.
    let hom = hom_basis(u, &vw)?;
    if hom.dim() == 0 {
        return Err(AmbiError::NoSplitting("Hom(U, V⊗W) is zero".into()));
    }
    let cols: Vec<Vec<Scalar>> = hom
        .basis
        .iter()
        .map(|h| beta_mat.mul(h.matrix()).unwrap().entries().to_vec())
        .collect();
    let system = Matrix::from_columns(&cols, &f);
    let id_u = Matrix::identity(u.dim(), &f);
    let rhs = Matrix::column(id_u.entries().to_vec(), &f);
    let sol = solve_linear(&system, &rhs)?;
    let coeffs = sol.solution.ok_or_else(|| {
        AmbiError::NoSplitting("no retraction: the splitting system is inconsistent".into())
    })?;
    let mut alpha_mat = Matrix::zero(vw.dim(), u.dim(), &f);
    for (i, h) in hom.basis.iter().enumerate() {
        alpha_mat = alpha_mat.add(&h.matrix().scale(coeffs.at(i, 0)))?;
    }
    let alpha = Morphism::new(Arc::clone(u), Arc::clone(&vw), alpha_mat)?;
    debug_assert!(beta.compose(&alpha)?.matrix().is_identity());
    let alpha_alternatives = sol
        .kernel
        .iter()
        .map(|k| {
            let mut m = Matrix::zero(vw.dim(), u.dim(), &f);
            for (i, h) in hom.basis.iter().enumerate() {
                m = m.add(&h.matrix().scale(&k[i])).unwrap();
            }
            Morphism::new(Arc::clone(u), Arc::clone(&vw), m).unwrap()
        })
        .collect();
    Ok(Splitting {
        w,
        vw,
        alpha,
        beta,
        alpha_alternatives,
    })
}

/// The right pivotal trace ev~ ∘ (f⊗Id) ∘ coev = tr(pivot∘f).
pub fn categorical_trace(f: &Morphism) -> Result<Scalar, AmbiError> {
    let p = f.target().pivot_action();
    Ok(p.mul(f.matrix())?.trace())
}

/// The modified trace determined by an ambidextrous module, normalized so
/// that the trace of the identity on the module itself is 1.
pub struct TraceFunctional {
    v: ModRef,
    normalization: Scalar,
    cache: Mutex<HashMap<usize, Arc<Splitting>>>,
}

impl TraceFunctional {
    /// Construct the trace for an ambidextrous absolutely simple module.
    pub fn new(v: &ModRef) -> Result<TraceFunctional, AmbiError> {
        let direct = ambi_direct(v)?;
        if !direct.ambi {
            return Err(AmbiError::NotAmbi);
        }
        let f = v.field().clone();
        let mut t = TraceFunctional {
            v: Arc::clone(v),
            normalization: f.one(),
            cache: Mutex::new(HashMap::new()),
        };
        let raw = t.raw_trace(v, &Morphism::identity(v))?;
        let inv = f
            .inv(&raw)
            .ok_or_else(|| AmbiError::Internal("trace of Id_V is zero".into()))?;
        t.normalization = inv;
        Ok(t)
    }

    pub fn module(&self) -> &ModRef {
        &self.v
    }

    fn splitting_for(&self, u: &ModRef) -> Result<Arc<Splitting>, AmbiError> {
        let key = Arc::as_ptr(u) as usize;
        {
            let cache = self.cache.lock().unwrap();
            if let Some(s) = cache.get(&key) {
                return Ok(Arc::clone(s));
            }
        }
        let s = Arc::new(split_through(&self.v, u)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(Arc::clone(cache.entry(key).or_insert(s)))
    }

    /// Unnormalized trace: the scalar by which the partial trace of α∘f∘β
    /// acts on V.
    fn raw_trace(&self, u: &ModRef, f: &Morphism) -> Result<Scalar, AmbiError> {
        let s = self.splitting_for(u)?;
        self.raw_trace_with(&s, &s.alpha, f)
    }

    fn raw_trace_with(
        &self,
        s: &Splitting,
        alpha: &Morphism,
        f: &Morphism,
    ) -> Result<Scalar, AmbiError> {
        let g = alpha.compose(f)?.compose(&s.beta)?;
        let p = partial_trace_right(&g, &self.v, &s.w)?;
        let field = self.v.field().clone();
        let scalar = p.matrix().at(0, 0).clone();
        if *p.matrix() != Matrix::identity(self.v.dim(), &field).scale(&scalar) {
            return Err(AmbiError::NonScalarEndomorphism);
        }
        Ok(scalar)
    }

    /// t_U(f) for an endomorphism f of u.
    pub fn trace(&self, u: &ModRef, f: &Morphism) -> Result<Scalar, AmbiError> {
        let raw = self.raw_trace(u, f)?;
        Ok(self.v.field().mul(&self.normalization, &raw))
    }

    /// Modified dimension t_U(Id_U).
    pub fn dimension(&self, u: &ModRef) -> Result<Scalar, AmbiError> {
        self.trace(u, &Morphism::identity(u))
    }

    /// Recompute a trace with a different retraction α; uniqueness of the
    /// right trace makes the value independent of the choice.
    pub fn trace_with_alternative_alpha(
        &self,
        u: &ModRef,
        f: &Morphism,
        which: usize,
    ) -> Result<Option<Scalar>, AmbiError> {
        let s = self.splitting_for(u)?;
        let Some(delta) = s.alpha_alternatives.get(which) else {
            return Ok(None);
        };
        let alpha2 = s.alpha.add(delta)?;
        debug_assert!(s.beta.compose(&alpha2)?.matrix().is_identity());
        let raw = self.raw_trace_with(&s, &alpha2, f)?;
        Ok(Some(self.v.field().mul(&self.normalization, &raw)))
    }
}

/// One line of a trace-axiom verification report.
#[derive(Debug)]
pub struct AxiomSample {
    pub description: String,
    pub passed: bool,
}

/// Sample the two defining trace conditions on random intertwiners built
/// from the given modules. All comparisons are exact.
pub fn verify_trace_axioms(
    t: &TraceFunctional,
    modules: &[ModRef],
    seed: u64,
    samples: usize,
) -> Result<Vec<AxiomSample>, AmbiError> {
    let f = t.module().field().clone();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut report = Vec::new();
    let mut random_hom = |basis: &[Morphism]| -> Option<Morphism> {
        if basis.is_empty() {
            return None;
        }
        let mut m = basis[0].scale(&f.random(&mut rng));
        for b in &basis[1..] {
            m = m.add(&b.scale(&f.random(&mut rng))).unwrap();
        }
        Some(m)
    };
    // Hom spaces and tensor products are fixed across rounds; compute once.
    let mut cond1 = Vec::new();
    let mut cond2 = Vec::new();
    for u in modules {
        for w in modules {
            let uw = tensor_modules(u, w)?;
            let end_uw = hom_basis(&uw, &uw)?;
            cond1.push((u, w, uw, end_uw));
            let hom_ux = hom_basis(u, w)?;
            let hom_xu = hom_basis(w, u)?;
            cond2.push((u, w, hom_ux, hom_xu));
        }
    }
    for round in 0..samples {
        // Condition (1): t_{U⊗W}(g) = t_U((Id⊗ev~_W)(g⊗Id)(Id⊗coev_W)).
        for (u, w, uw, end_uw) in &cond1 {
            let Some(g) = random_hom(&end_uw.basis) else {
                continue;
            };
            let lhs = t.trace(uw, &g)?;
            let wrapped = partial_trace_right(&g, u, w)?;
            let rhs = t.trace(u, &wrapped)?;
            report.push(AxiomSample {
                description: format!(
                    "partial-trace condition on {}⊗{} (round {round})",
                    u.label(),
                    w.label()
                ),
                passed: lhs == rhs,
            });
        }
        // Condition (2): t(g∘f) = t(f∘g) for f: U → X, g: X → U.
        for (u, x, hom_ux, hom_xu) in &cond2 {
            let (Some(fm), Some(gm)) = (random_hom(&hom_ux.basis), random_hom(&hom_xu.basis))
            else {
                continue;
            };
            let lhs = t.trace(x, &fm.compose(&gm)?)?;
            let rhs = t.trace(u, &gm.compose(&fm)?)?;
            report.push(AxiomSample {
                description: format!(
                    "cyclicity between {} and {} (round {round})",
                    u.label(),
                    x.label()
                ),
                passed: lhs == rhs,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        build_group_algebra, build_restricted_usl2, build_sweedler, s3_natural_module, GroupTable,
    };
    use crate::decomp::projective_cover_unit;
    use crate::field::Field;
    use crate::hopf::HopfAlgebra;
    use crate::modcat::unit_module;

    fn ks3_f2() -> (Arc<HopfAlgebra>, GroupTable) {
        let f = Field::prime(2).unwrap();
        let g = GroupTable::symmetric3();
        (build_group_algebra(&f, &g).unwrap(), g)
    }

    #[test]
    fn trivial_module_is_ambidextrous() {
        let (alg, _) = ks3_f2();
        let unit = unit_module(&alg);
        let v = ambi_verdict(&unit, 0, true).unwrap();
        assert!(v.direct);
        assert!(v.structural.unwrap().ambi);
    }

    #[test]
    fn natural_module_is_ambidextrous_both_ways() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let v = ambi_verdict(&nat, 0, true).unwrap();
        assert!(v.direct);
        let s = v.structural.unwrap();
        assert!(s.ambi);
        assert_eq!(s.j, s.jprime);
        assert_eq!(s.dual_summand_self_iso, Some(true));
    }

    #[test]
    fn steinberg_usl2_p3_is_ambidextrous() {
        let data = build_restricted_usl2(3).unwrap();
        let st = data.steinberg();
        let v = ambi_verdict(st, 0, true).unwrap();
        assert!(v.direct);
        assert!(v.structural.unwrap().ambi);
        // Corollary: simple projective + unimodular algebra.
        assert!(data.algebra.is_unimodular().unwrap());
    }

    #[test]
    fn theorem_equivalence_on_all_usl2_p3_simples() {
        let data = build_restricted_usl2(3).unwrap();
        for simple in &data.simples {
            if hom_basis(simple, simple).unwrap().dim() != 1 {
                continue;
            }
            let v = ambi_verdict(simple, 0, true).unwrap();
            // ambi_verdict hard-asserts direct == structural internally;
            // reaching here means the theorem held.
            assert!(v.structural.is_some(), "structural verdict missing");
        }
    }

    #[test]
    fn non_absolutely_simple_is_rejected() {
        let (alg, _) = ks3_f2();
        let reg = crate::modcat::regular_module(&alg);
        assert!(matches!(
            ambi_direct(&reg),
            Err(AmbiError::NotAbsolutelySimple(_))
        ));
    }

    #[test]
    fn split_through_self_exists() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let s = split_through(&nat, &nat).unwrap();
        assert!(s.beta.compose(&s.alpha).unwrap().matrix().is_identity());
    }

    #[test]
    fn split_through_projective_cover() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let (p1, _) = projective_cover_unit(&alg, 0).unwrap();
        let s = split_through(&nat, &p1).unwrap();
        assert!(s.beta.compose(&s.alpha).unwrap().matrix().is_identity());
    }

    #[test]
    fn split_through_fails_for_non_projective() {
        // The trivial module of restricted sl2 is not projective, so it does
        // not split through the Steinberg module.
        let data = build_restricted_usl2(3).unwrap();
        let st = data.steinberg();
        let unit = unit_module(&data.algebra);
        assert!(matches!(
            split_through(st, &unit),
            Err(AmbiError::NoSplitting(_))
        ));
    }

    #[test]
    fn trace_normalization_and_tensor_value() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let t = TraceFunctional::new(&nat).unwrap();
        let f = nat.field().clone();
        assert!(f.is_one(&t.dimension(&nat).unwrap()));
        // t_{V⊗W}(Id) = tr(pivot on W), forced by the partial-trace axiom.
        let dual = dual_module(&nat);
        let vw = tensor_modules(&nat, &dual).unwrap();
        let expected = dual.pivot_action().trace();
        assert_eq!(t.dimension(&vw).unwrap(), expected);
    }

    #[test]
    fn trace_value_is_independent_of_retraction() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let (p1, _) = projective_cover_unit(&alg, 0).unwrap();
        let t = TraceFunctional::new(&nat).unwrap();
        let id = Morphism::identity(&p1);
        let base = t.trace(&p1, &id).unwrap();
        let mut alternatives_seen = 0;
        for which in 0..8 {
            match t.trace_with_alternative_alpha(&p1, &id, which).unwrap() {
                Some(v) => {
                    assert_eq!(v, base);
                    alternatives_seen += 1;
                }
                None => break,
            }
        }
        assert!(alternatives_seen > 0, "no alternative retraction available");
    }

    #[test]
    fn trace_axioms_hold_on_projectives() {
        let (alg, g) = ks3_f2();
        let nat = s3_natural_module(&alg, &g).unwrap();
        let (p1, _) = projective_cover_unit(&alg, 0).unwrap();
        let t = TraceFunctional::new(&nat).unwrap();
        let report = verify_trace_axioms(&t, &[nat.clone(), p1], 0, 5).unwrap();
        assert!(!report.is_empty());
        for line in &report {
            assert!(line.passed, "axiom failed: {}", line.description);
        }
    }

    #[test]
    fn categorical_trace_vanishes_on_projective_cover() {
        // Non-semisimple case: the pivotal trace of Id on P_1 is zero, while
        // the modified dimension is still defined.
        let (alg, g) = ks3_f2();
        let (p1, _) = projective_cover_unit(&alg, 0).unwrap();
        let f = alg.field().clone();
        let cat = categorical_trace(&Morphism::identity(&p1)).unwrap();
        assert!(f.is_zero(&cat));
        let nat = s3_natural_module(&alg, &g).unwrap();
        let t = TraceFunctional::new(&nat).unwrap();
        // Value exists; record-keeping happens in the acceptance suite.
        t.dimension(&p1).unwrap();
    }

    #[test]
    fn sweedler_corollary_direction() {
        // Sweedler's algebra is not unimodular; its simple projective module
        // must fail the ambidexterity test (Corollary: simple projective
        // ambi <=> unimodular). Sweedler has no projective simples, so here
        // we only check the non-unimodular verdict is consistent with the
        // socle route.
        let f = Field::prime(3).unwrap();
        let alg = build_sweedler(&f).unwrap();
        assert!(!alg.is_unimodular().unwrap());
        let (_, socle_trivial) = projective_cover_unit(&alg, 0).unwrap();
        assert!(!socle_trivial);
    }
}
