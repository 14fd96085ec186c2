//! Restricted enveloping algebra u(sl2) over F_p (p odd prime): PBW basis
//! e^a f^b h^c with 0 <= a,b,c < p, relations [h,e] = 2e, [h,f] = -2f,
//! [e,f] = h and restriction e^p = f^p = 0, h^p = h. Cocommutative Hopf
//! structure with primitive generators, S = -1 on generators, pivot = 1.

use std::collections::HashMap;
use std::sync::Arc;

use super::BuildError;
use crate::field::{is_prime_u64, Field, Scalar};
use crate::hopf::{HopfAlgebra, HopfPresentation};
use crate::matrix::Matrix;
use crate::modcat::{derive_action_from_generators, ModRef};

pub struct RestrictedSl2 {
    pub p: u64,
    pub algebra: Arc<HopfAlgebra>,
    /// L(0), ..., L(p-1); the last one is the Steinberg module.
    pub simples: Vec<ModRef>,
}

impl RestrictedSl2 {
    pub fn steinberg(&self) -> &ModRef {
        self.simples.last().unwrap()
    }
}

type Mono = (usize, usize, usize); // exponents of (e, f, h)
type Elem = HashMap<Mono, Scalar>;

struct Pbw {
    p: usize,
    field: Field,
    /// Pascal triangle in the field, binom[n][k] for n < p.
    binom: Vec<Vec<Scalar>>,
}

impl Pbw {
    fn new(p: usize, field: Field) -> Pbw {
        let mut binom = vec![vec![field.one()]];
        for n in 1..p + 1 {
            let prev = &binom[n - 1];
            let mut row = vec![field.one()];
            for k in 1..n {
                row.push(field.add(&prev[k - 1], &prev[k]));
            }
            row.push(field.one());
            binom.push(row);
        }
        Pbw { p, field, binom }
    }

    fn add_term(&self, acc: &mut Elem, m: Mono, c: Scalar) {
        let f = &self.field;
        if f.is_zero(&c) {
            return;
        }
        let e = acc.entry(m).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
        if f.is_zero(e) {
            acc.remove(&m);
        }
    }

    /// (h + shift)^c as coefficients of h^k, with h^p = h folded in.
    fn h_shift_pow(&self, shift: i64, c: usize) -> Vec<Scalar> {
        let f = &self.field;
        let s = f.from_i64(shift);
        // (h + s)^c = sum binom(c, k) s^(c-k) h^k; c < p so no folding yet.
        let mut out = vec![f.zero(); c + 1];
        let mut spow = f.one();
        for k in (0..=c).rev() {
            out[k] = f.mul(&self.binom[c][k], &spow);
            spow = f.mul(&spow, &s);
        }
        out
    }

    /// Fold h^p = h on a coefficient vector in h.
    fn fold_h(&self, mut coeffs: Vec<Scalar>) -> Vec<Scalar> {
        let f = &self.field;
        while coeffs.len() > self.p {
            let top = coeffs.pop().unwrap();
            let k = coeffs.len(); // had degree k, fold h^k -> h^(k-p+1)
            let dst = k - self.p + 1;
            coeffs[dst] = f.add(&coeffs[dst], &top);
        }
        coeffs
    }

    /// Multiply coefficient-in-h polynomials, then fold.
    fn h_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(ai, bj));
            }
        }
        self.fold_h(out)
    }

    /// elem * h
    fn mul_h(&self, elem: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&(a, b, c), coef) in elem {
            if c + 1 < self.p {
                self.add_term(&mut out, (a, b, c + 1), coef.clone());
            } else {
                // h^p = h
                self.add_term(&mut out, (a, b, 1), coef.clone());
            }
        }
        out
    }

    /// elem * f, using h^c f = f (h-2)^c.
    fn mul_f(&self, elem: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&(a, b, c), coef) in elem {
            if b + 1 == self.p {
                continue; // f^p = 0
            }
            for (k, hk) in self.h_shift_pow(-2, c).into_iter().enumerate() {
                self.add_term(&mut out, (a, b + 1, k), self.field.mul(coef, &hk));
            }
        }
        out
    }

    /// elem * e, using h^c e = e (h+2)^c and
    /// f^b e = e f^b - b f^(b-1) (h - b + 1).
    fn mul_e(&self, elem: &Elem) -> Elem {
        let f = &self.field;
        let mut out = Elem::new();
        for (&(a, b, c), coef) in elem {
            let hpow = self.h_shift_pow(2, c); // (h+2)^c
            // Leading term e^(a+1) f^b (h+2)^c.
            if a + 1 < self.p {
                for (k, hk) in hpow.iter().enumerate() {
                    self.add_term(&mut out, (a + 1, b, k), f.mul(coef, hk));
                }
            }
            // Correction -b e^a f^(b-1) (h - b + 1)(h+2)^c.
            if b > 0 {
                let lin = vec![f.from_i64(-(b as i64) + 1), f.one()]; // h - b + 1
                let prod = self.h_mul(&lin, &hpow);
                let scale = f.from_i64(-(b as i64));
                for (k, hk) in prod.into_iter().enumerate() {
                    self.add_term(&mut out, (a, b - 1, k), f.mul(coef, &f.mul(&scale, &hk)));
                }
            }
        }
        out
    }

    /// Normalized product of two PBW monomials.
    fn mono_product(&self, m1: Mono, m2: Mono) -> Elem {
        let mut acc = Elem::new();
        acc.insert(m1, self.field.one());
        for _ in 0..m2.0 {
            acc = self.mul_e(&acc);
        }
        for _ in 0..m2.1 {
            acc = self.mul_f(&acc);
        }
        for _ in 0..m2.2 {
            acc = self.mul_h(&acc);
        }
        acc
    }
}

pub fn build_restricted_usl2(p: u64) -> Result<RestrictedSl2, BuildError> {
    if p == 2 || !is_prime_u64(p) {
        return Err(BuildError::UnsupportedParameter(format!(
            "restricted u(sl2) needs an odd prime, got {p}"
        )));
    }
    let pu = p as usize;
    let field = Field::prime(p)?;
    let f = &field;
    let n = pu * pu * pu;
    let idx = |(a, b, c): Mono| (a * pu + b) * pu + c;
    let pbw = Pbw::new(pu, field.clone());
    let monos: Vec<Mono> = (0..pu)
        .flat_map(|a| (0..pu).flat_map(move |b| (0..pu).map(move |c| (a, b, c))))
        .collect();

    let elem_to_sparse = |e: &Elem| -> Vec<(usize, Scalar)> {
        let mut v: Vec<(usize, Scalar)> = e.iter().map(|(m, c)| (idx(*m), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };

    let mut mult = vec![vec![Vec::new(); n]; n];
    for &m1 in &monos {
        for &m2 in &monos {
            mult[idx(m1)][idx(m2)] = elem_to_sparse(&pbw.mono_product(m1, m2));
        }
    }

    // Delta(e^a f^b h^c) via primitivity: binomial expansion in each factor,
    // already in normal order on both sides.
    let mut comult = vec![Vec::new(); n];
    for &(a, b, c) in &monos {
        let cell = &mut comult[idx((a, b, c))];
        for i in 0..=a {
            for j in 0..=b {
                for k in 0..=c {
                    let coef = f.mul(
                        &pbw.binom[a][i],
                        &f.mul(&pbw.binom[b][j], &pbw.binom[c][k]),
                    );
                    cell.push((idx((i, j, k)), idx((a - i, b - j, c - k)), coef));
                }
            }
        }
    }

    let mut counit = vec![f.zero(); n];
    counit[idx((0, 0, 0))] = f.one();
    let mut unit = vec![f.zero(); n];
    unit[idx((0, 0, 0))] = f.one();

    // S(e^a f^b h^c) = (-1)^(a+b+c) h^c f^b e^a, renormalized through the
    // rewriting engine.
    let mut antipode = Matrix::zero(n, n, f);
    for &(a, b, c) in &monos {
        let mut acc = Elem::new();
        acc.insert((0, 0, c), f.one());
        for _ in 0..b {
            acc = pbw.mul_f(&acc);
        }
        for _ in 0..a {
            acc = pbw.mul_e(&acc);
        }
        let sign = f.from_i64(if (a + b + c) % 2 == 0 { 1 } else { -1 });
        for (m, coef) in &acc {
            *antipode.at_mut(idx(*m), idx((a, b, c))) = f.mul(&sign, coef);
        }
    }

    let labels = monos
        .iter()
        .map(|&(a, b, c)| format!("e{a}f{b}h{c}"))
        .collect();
    let generators = vec![idx((1, 0, 0)), idx((0, 1, 0)), idx((0, 0, 1))];

    let pres = HopfPresentation {
        name: format!("u(sl2,p={p})"),
        field: field.clone(),
        dim: n,
        basis_labels: labels,
        mult,
        unit: unit.clone(),
        counit,
        comult,
        antipode,
        pivot: unit,
        generators: generators.clone(),
    };
    let algebra = HopfAlgebra::new(pres)?;

    // tr(ad x) = 0 for x in {e, f, h} (unimodularity witness at Lie level).
    for &g in &generators {
        let mut basis = vec![f.zero(); n];
        basis[g] = f.one();
        let ad = algebra
            .presentation()
            .left_mult_matrix(&basis)
            .sub(&algebra.presentation().right_mult_matrix(&basis))
            .unwrap();
        assert!(f.is_zero(&ad.trace()), "tr(ad x) != 0");
    }

    // Simple modules L(d), d = 0..p-1: weight basis v_0..v_d with
    // h v_k = (d-2k) v_k, f v_k = v_{k+1}, e v_k = k(d-k+1) v_{k-1}.
    let mut simples = Vec::with_capacity(pu);
    for d in 0..pu {
        let dim = d + 1;
        let mut me = Matrix::zero(dim, dim, f);
        let mut mf = Matrix::zero(dim, dim, f);
        let mut mh = Matrix::zero(dim, dim, f);
        for k in 0..dim {
            *mh.at_mut(k, k) = f.from_i64(d as i64 - 2 * k as i64);
            if k + 1 < dim {
                *mf.at_mut(k + 1, k) = f.one();
            }
            if k > 0 {
                *me.at_mut(k - 1, k) = f.from_i64((k as i64) * (d as i64 - k as i64 + 1));
            }
        }
        let mut gen_actions = HashMap::new();
        gen_actions.insert(generators[0], me);
        gen_actions.insert(generators[1], mf);
        gen_actions.insert(generators[2], mh);
        let label = if d + 1 == pu {
            "St".to_string()
        } else {
            format!("L{d}")
        };
        simples.push(derive_action_from_generators(
            &algebra,
            &gen_actions,
            dim,
            label,
        )?);
    }

    Ok(RestrictedSl2 {
        p,
        algebra,
        simples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Side;
    use crate::modcat;

    #[test]
    fn p2_rejected() {
        assert!(build_restricted_usl2(2).is_err());
        assert!(build_restricted_usl2(4).is_err());
    }

    #[test]
    fn p3_builds_and_is_unimodular() {
        let u = build_restricted_usl2(3).unwrap();
        assert_eq!(u.algebra.dim(), 27);
        assert_eq!(u.simples.len(), 3);
        assert_eq!(u.steinberg().dim(), 3);
        assert_eq!(u.steinberg().label(), "St");
        assert!(u.algebra.is_unimodular().unwrap());
        let left = u.algebra.integral_space(Side::Left).unwrap();
        assert_eq!(left.basis.len(), 1);
    }

    #[test]
    fn p3_simples_are_absolutely_simple() {
        let u = build_restricted_usl2(3).unwrap();
        for (d, l) in u.simples.iter().enumerate() {
            assert_eq!(l.dim(), d + 1);
            assert_eq!(modcat::hom_basis(l, l).unwrap().dim(), 1);
        }
    }

    #[test]
    fn restriction_relations_act_as_zero_on_simples() {
        // x^p - x^[p] is central and annihilates every L(d): rho(e)^p = 0,
        // rho(f)^p = 0, rho(h)^p = rho(h).
        let u = build_restricted_usl2(3).unwrap();
        let p = 3u64;
        let gens = u.algebra.generators().to_vec();
        for l in &u.simples {
            assert!(l.action(gens[0]).pow(p).is_zero());
            assert!(l.action(gens[1]).pow(p).is_zero());
            assert_eq!(&l.action(gens[2]).pow(p), l.action(gens[2]));
        }
    }

    #[test]
    fn p5_builds() {
        let u = build_restricted_usl2(5).unwrap();
        assert_eq!(u.algebra.dim(), 125);
        assert_eq!(u.steinberg().dim(), 5);
        assert!(u.algebra.is_unimodular().unwrap());
    }
}
