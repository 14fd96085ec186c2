//! Small quantum group u_zeta(sl2) over Q(zeta_l), l odd >= 3: basis
//! E^a F^b K^c with KE = z^2 EK, KF = z^-2 FK,
//! [E,F] = (K - K^-1)/(z - z^-1), E^l = F^l = 0, K^l = 1. Pivot K.

use std::collections::HashMap;
use std::sync::Arc;

use super::BuildError;
use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, HopfPresentation};
use crate::matrix::Matrix;
use crate::modcat::{derive_action_from_generators, ModRef};

pub struct SmallQuantumSl2 {
    pub l: u64,
    pub algebra: Arc<HopfAlgebra>,
    /// The simple highest-weight module of dimension l.
    pub steinberg: ModRef,
}

type Mono = (usize, usize, usize); // exponents of (E, F, K)
type Elem = HashMap<Mono, Scalar>;

struct Engine {
    l: usize,
    field: Field,
    /// 1/(z - z^-1)
    comm_inv: Scalar,
}

impl Engine {
    fn new(l: usize, field: Field) -> Engine {
        let z = field.zeta();
        let zinv = field.zeta_pow(-1);
        let denom = field.sub(&z, &zinv);
        let comm_inv = field.inv(&denom).expect("z - z^-1 invertible for odd l >= 3");
        Engine {
            l,
            field,
            comm_inv,
        }
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

    fn scaled(&self, elem: &Elem, c: &Scalar) -> Elem {
        elem.iter()
            .map(|(m, v)| (*m, self.field.mul(v, c)))
            .collect()
    }

    /// elem * K^e (e may be negative).
    fn mul_k(&self, elem: &Elem, e: i64) -> Elem {
        let shift = e.rem_euclid(self.l as i64) as usize;
        elem.iter()
            .map(|(&(a, b, c), v)| ((a, b, (c + shift) % self.l), v.clone()))
            .collect()
    }

    /// elem * F, using K^c F = z^(-2c) F K^c.
    fn mul_f(&self, elem: &Elem) -> Elem {
        let f = &self.field;
        let mut out = Elem::new();
        for (&(a, b, c), v) in elem {
            if b + 1 == self.l {
                continue; // F^l = 0
            }
            let coef = f.mul(v, &f.zeta_pow(-2 * c as i64));
            self.add_term(&mut out, (a, b + 1, c), coef);
        }
        out
    }

    /// E^a F^b * E with K-part zero, recursive in b:
    /// F^b E = F^(b-1) E F - F^(b-1) (K - K^-1)/(z - z^-1).
    fn mono_ef_mul_e(&self, a: usize, b: usize) -> Elem {
        let f = &self.field;
        let mut out = Elem::new();
        if b == 0 {
            if a + 1 < self.l {
                out.insert((a + 1, 0, 0), f.one());
            }
            return out;
        }
        // (E^a F^(b-1)) E, then * F.
        let head = self.mono_ef_mul_e(a, b - 1);
        out = self.mul_f(&head);
        // minus (E^a F^(b-1)) (K - K^-1) / (z - z^-1)
        let mut base = Elem::new();
        base.insert((a, b - 1, 0), f.one());
        let plus = self.mul_k(&base, 1);
        let minus = self.mul_k(&base, -1);
        for (m, v) in plus {
            self.add_term(&mut out, m, f.mul(&f.neg(&v), &self.comm_inv));
        }
        for (m, v) in minus {
            self.add_term(&mut out, m, f.mul(&v, &self.comm_inv));
        }
        out
    }

    /// elem * E, using K^c E = z^(2c) E K^c.
    fn mul_e(&self, elem: &Elem) -> Elem {
        let f = &self.field;
        let mut out = Elem::new();
        for (&(a, b, c), v) in elem {
            let coef = f.mul(v, &f.zeta_pow(2 * c as i64));
            let part = self.mul_k(&self.mono_ef_mul_e(a, b), c as i64);
            for (m, w) in part {
                self.add_term(&mut out, m, f.mul(&coef, &w));
            }
        }
        out
    }

    fn mono_product(&self, m1: Mono, m2: Mono) -> Elem {
        let mut acc = Elem::new();
        acc.insert(m1, self.field.one());
        for _ in 0..m2.0 {
            acc = self.mul_e(&acc);
        }
        for _ in 0..m2.1 {
            acc = self.mul_f(&acc);
        }
        if m2.2 > 0 {
            acc = self.mul_k(&acc, m2.2 as i64);
        }
        acc
    }
}

/// Tensor-square elements, for computing Delta on monomials.
type TElem = HashMap<(Mono, Mono), Scalar>;

fn tensor_mul(
    eng: &Engine,
    t: &TElem,
    summands: &[(Box<dyn Fn(&Engine, &Elem) -> Elem>, Box<dyn Fn(&Engine, &Elem) -> Elem>)],
) -> TElem {
    let f = &eng.field;
    let mut out = TElem::new();
    for (&(m1, m2), v) in t {
        for (left, right) in summands {
            let mut e1 = Elem::new();
            e1.insert(m1, f.one());
            let mut e2 = Elem::new();
            e2.insert(m2, f.one());
            let r1 = left(eng, &e1);
            let r2 = right(eng, &e2);
            for (n1, c1) in &r1 {
                for (n2, c2) in &r2 {
                    let c = f.mul(v, &f.mul(c1, c2));
                    if f.is_zero(&c) {
                        continue;
                    }
                    let e = out.entry((*n1, *n2)).or_insert_with(|| f.zero());
                    *e = f.add(e, &c);
                }
            }
        }
    }
    out.retain(|_, v| !f.is_zero(v));
    out
}

pub fn build_small_quantum_sl2(l: u64) -> Result<SmallQuantumSl2, BuildError> {
    if l < 3 || l % 2 == 0 {
        return Err(BuildError::UnsupportedParameter(format!(
            "small quantum sl2 needs odd l >= 3, got {l}"
        )));
    }
    let lu = l as usize;
    let field = Field::cyclotomic(l)?;
    let f = &field;
    let n = lu * lu * lu;
    let idx = |(a, b, c): Mono| (a * lu + b) * lu + c;
    let eng = Engine::new(lu, field.clone());
    let monos: Vec<Mono> = (0..lu)
        .flat_map(|a| (0..lu).flat_map(move |b| (0..lu).map(move |c| (a, b, c))))
        .collect();

    let elem_to_sparse = |e: &Elem| -> Vec<(usize, Scalar)> {
        let mut v: Vec<(usize, Scalar)> = e.iter().map(|(m, c)| (idx(*m), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };

    let mut mult = vec![vec![Vec::new(); n]; n];
    for &m1 in &monos {
        for &m2 in &monos {
            mult[idx(m1)][idx(m2)] = elem_to_sparse(&eng.mono_product(m1, m2));
        }
    }

    // Delta(E) = E (x) K + 1 (x) E; Delta(F) = F (x) 1 + K^-1 (x) F;
    // Delta(K) = K (x) K. Delta on a monomial is built by repeated
    // tensor-square multiplication (factors multiply componentwise).
    let id_fn = |_: &Engine, e: &Elem| e.clone();
    let delta_e: Vec<(Box<dyn Fn(&Engine, &Elem) -> Elem>, Box<dyn Fn(&Engine, &Elem) -> Elem>)> = vec![
        (
            Box::new(|g: &Engine, e: &Elem| g.mul_e(e)),
            Box::new(|g: &Engine, e: &Elem| g.mul_k(e, 1)),
        ),
        (Box::new(id_fn), Box::new(|g: &Engine, e: &Elem| g.mul_e(e))),
    ];
    let delta_f: Vec<(Box<dyn Fn(&Engine, &Elem) -> Elem>, Box<dyn Fn(&Engine, &Elem) -> Elem>)> = vec![
        (Box::new(|g: &Engine, e: &Elem| g.mul_f(e)), Box::new(id_fn)),
        (
            Box::new(|g: &Engine, e: &Elem| g.mul_k(e, -1)),
            Box::new(|g: &Engine, e: &Elem| g.mul_f(e)),
        ),
    ];
    let delta_k: Vec<(Box<dyn Fn(&Engine, &Elem) -> Elem>, Box<dyn Fn(&Engine, &Elem) -> Elem>)> = vec![(
        Box::new(|g: &Engine, e: &Elem| g.mul_k(e, 1)),
        Box::new(|g: &Engine, e: &Elem| g.mul_k(e, 1)),
    )];

    let mut comult = vec![Vec::new(); n];
    for &(a, b, c) in &monos {
        let mut t = TElem::new();
        t.insert(((0, 0, 0), (0, 0, 0)), f.one());
        for _ in 0..a {
            t = tensor_mul(&eng, &t, &delta_e);
        }
        for _ in 0..b {
            t = tensor_mul(&eng, &t, &delta_f);
        }
        for _ in 0..c {
            t = tensor_mul(&eng, &t, &delta_k);
        }
        let cell = &mut comult[idx((a, b, c))];
        let mut entries: Vec<_> = t
            .into_iter()
            .map(|((m1, m2), v)| (idx(m1), idx(m2), v))
            .collect();
        entries.sort_by_key(|(i, j, _)| (*i, *j));
        *cell = entries;
    }

    // eps(E) = eps(F) = 0, eps(K) = 1.
    let mut counit = vec![f.zero(); n];
    for &(a, b, c) in &monos {
        if a == 0 && b == 0 {
            counit[idx((a, b, c))] = f.one();
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[idx((0, 0, 0))] = f.one();

    // S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1 (antihomomorphism).
    let mut antipode = Matrix::zero(n, n, f);
    for &(a, b, c) in &monos {
        // S(monomial) = S(K)^c S(F)^b S(E)^a.
        let mut acc = Elem::new();
        acc.insert((0, 0, (lu - c % lu) % lu), f.one());
        for _ in 0..b {
            // * (-K F)
            acc = eng.mul_f(&eng.mul_k(&acc, 1));
            acc = eng.scaled(&acc, &f.from_i64(-1));
        }
        for _ in 0..a {
            // * (-E K^-1)
            acc = eng.mul_k(&eng.mul_e(&acc), -1);
            acc = eng.scaled(&acc, &f.from_i64(-1));
        }
        for (m, coef) in &acc {
            *antipode.at_mut(idx(*m), idx((a, b, c))) = coef.clone();
        }
    }

    let labels = monos
        .iter()
        .map(|&(a, b, c)| format!("E{a}F{b}K{c}"))
        .collect();
    let generators = vec![idx((1, 0, 0)), idx((0, 1, 0)), idx((0, 0, 1))];
    let mut pivot = vec![f.zero(); n];
    pivot[idx((0, 0, 1))] = f.one(); // K

    let pres = HopfPresentation {
        name: format!("u_zeta(sl2,l={l})"),
        field: field.clone(),
        dim: n,
        basis_labels: labels,
        mult,
        unit,
        counit,
        comult,
        antipode,
        pivot,
        generators: generators.clone(),
    };
    let algebra = HopfAlgebra::new(pres)?;

    // Pivot audit in the regular representation: S^2(E) = K E K^-1.
    {
        let pres = algebra.presentation();
        let e_col = pres.antipode.col_vec(generators[0]);
        let s2e = pres.antipode_vec(&e_col);
        let mut e_vec = vec![f.zero(); n];
        e_vec[generators[0]] = f.one();
        let conj = pres.mul_vec(&pres.mul_vec(&pres.pivot, &e_vec), algebra.pivot_inv());
        assert_eq!(s2e, conj, "S^2(E) != K E K^-1");
        // and S^2(E) = z^2 E
        let expected: Vec<Scalar> = e_vec.iter().map(|x| f.mul(x, &f.zeta_pow(2))).collect();
        assert_eq!(s2e, expected, "S^2(E) != z^2 E");
    }

    // Steinberg: highest weight z^(l-1), weight basis v_0..v_(l-1):
    // K v_k = z^(l-1-2k) v_k, F v_k = v_{k+1}, E v_k = [k][l-k] v_{k-1}
    // with [j] = (z^j - z^-j)/(z - z^-1).
    let qint = |j: i64| -> Scalar {
        let num = f.sub(&f.zeta_pow(j), &f.zeta_pow(-j));
        f.mul(&num, &eng.comm_inv)
    };
    let dim = lu;
    let mut me = Matrix::zero(dim, dim, f);
    let mut mf = Matrix::zero(dim, dim, f);
    let mut mk = Matrix::zero(dim, dim, f);
    for k in 0..dim {
        *mk.at_mut(k, k) = f.zeta_pow(l as i64 - 1 - 2 * k as i64);
        if k + 1 < dim {
            *mf.at_mut(k + 1, k) = f.one();
        }
        if k > 0 {
            *me.at_mut(k - 1, k) = f.mul(&qint(k as i64), &qint(l as i64 - k as i64));
        }
    }
    let mut gen_actions = HashMap::new();
    gen_actions.insert(generators[0], me);
    gen_actions.insert(generators[1], mf);
    gen_actions.insert(generators[2], mk);
    let steinberg = derive_action_from_generators(&algebra, &gen_actions, dim, "St")?;

    Ok(SmallQuantumSl2 {
        l,
        algebra,
        steinberg,
    })
}
