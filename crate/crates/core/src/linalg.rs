//! Deterministic dense Gaussian elimination (first-nonzero pivot rule),
//! linear solving with kernel bases, inversion, and characteristic/minimal
//! polynomials.
//!
//! Prime-field matrices take a specialized u64 path since nearly every
//! higher-level computation funnels through this module.

use crate::field::{Field, FieldKind, Scalar};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::Polynomial;

pub struct LinearSolution {
    /// One particular solution (columns match rhs columns), absent if inconsistent.
    pub solution: Option<Matrix>,
    /// Basis of the nullspace of the system matrix.
    pub kernel: Vec<Vec<Scalar>>,
}

/// Row echelon data: reduced rows plus pivot column indices.
struct Echelon {
    rows: usize,
    width: usize,
    data: Vec<Scalar>,
    pivots: Vec<usize>,
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// RREF over F_p on a raw u64 grid. Pivots searched in the first `lead_cols`
/// columns only; trailing columns are carried along (augmented part).
fn rref_prime(data: &mut [u64], rows: usize, width: usize, lead_cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for col in 0..lead_cols {
        if pr >= rows {
            break;
        }
        let mut pivot_row = None;
        for r in pr..rows {
            if data[r * width + col] != 0 {
                pivot_row = Some(r);
                break;
            }
        }
        let Some(r0) = pivot_row else { continue };
        if r0 != pr {
            for c in 0..width {
                data.swap(pr * width + c, r0 * width + c);
            }
        }
        let inv = inv_mod(data[pr * width + col], p);
        if inv != 1 {
            for c in col..width {
                data[pr * width + c] = mul_mod(data[pr * width + c], inv, p);
            }
        }
        for r in pr + 1..rows {
            let f = data[r * width + col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for c in col..width {
                let add = mul_mod(nf, data[pr * width + c], p);
                let v = data[r * width + c] + add;
                data[r * width + c] = if v >= p { v - p } else { v };
            }
        }
        pivots.push(col);
        pr += 1;
    }
    // Back substitution to full reduced form.
    for (i, &col) in pivots.iter().enumerate().rev() {
        for r in 0..i {
            let f = data[r * width + col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for c in col..width {
                let add = mul_mod(nf, data[i * width + c], p);
                let v = data[r * width + c] + add;
                data[r * width + c] = if v >= p { v - p } else { v };
            }
        }
    }
    pivots
}

fn rref_generic(
    data: &mut Vec<Scalar>,
    rows: usize,
    width: usize,
    lead_cols: usize,
    f: &Field,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for col in 0..lead_cols {
        if pr >= rows {
            break;
        }
        let mut pivot_row = None;
        for r in pr..rows {
            if !f.is_zero(&data[r * width + col]) {
                pivot_row = Some(r);
                break;
            }
        }
        let Some(r0) = pivot_row else { continue };
        if r0 != pr {
            for c in 0..width {
                data.swap(pr * width + c, r0 * width + c);
            }
        }
        let inv = f.inv(&data[pr * width + col]).unwrap();
        if !f.is_one(&inv) {
            for c in col..width {
                data[pr * width + c] = f.mul(&data[pr * width + c], &inv);
            }
        }
        for r in pr + 1..rows {
            let factor = data[r * width + col].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for c in col..width {
                let delta = f.mul(&factor, &data[pr * width + c]);
                data[r * width + c] = f.sub(&data[r * width + c], &delta);
            }
        }
        pivots.push(col);
        pr += 1;
    }
    for (i, &col) in pivots.iter().enumerate().rev() {
        for r in 0..i {
            let factor = data[r * width + col].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for c in col..width {
                let delta = f.mul(&factor, &data[i * width + c]);
                data[r * width + c] = f.sub(&data[r * width + c], &delta);
            }
        }
    }
    pivots
}

fn rref_matrix(m: &Matrix, lead_cols: usize) -> Echelon {
    let f = m.field().clone();
    let (rows, width) = (m.rows(), m.cols());
    match f.kind() {
        FieldKind::Prime(p) => {
            let mut data: Vec<u64> = m
                .entries()
                .iter()
                .map(|s| match s {
                    Scalar::Prime(x) => *x,
                    _ => unreachable!(),
                })
                .collect();
            let pivots = rref_prime(&mut data, rows, width, lead_cols, p);
            Echelon {
                rows,
                width,
                data: data.into_iter().map(Scalar::Prime).collect(),
                pivots,
            }
        }
        _ => {
            let mut data: Vec<Scalar> = m.entries().to_vec();
            let pivots = rref_generic(&mut data, rows, width, lead_cols, &f);
            Echelon {
                rows,
                width,
                data,
                pivots,
            }
        }
    }
}

impl Echelon {
    fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.width + c]
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref_matrix(m, m.cols()).pivots.len()
}

/// Basis of the nullspace (as coordinate vectors).
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let f = m.field().clone();
    let n = m.cols();
    let ech = rref_matrix(m, n);
    let pivot_set: std::collections::HashSet<usize> = ech.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for (i, &pc) in ech.pivots.iter().enumerate() {
            v[pc] = f.neg(ech.at(i, free));
        }
        basis.push(v);
    }
    basis
}

/// Solve system * X = rhs. Returns a particular solution (if consistent)
/// and a kernel basis of the system matrix.
pub fn solve_linear(system: &Matrix, rhs: &Matrix) -> Result<LinearSolution, MatrixError> {
    if system.field() != rhs.field() {
        return Err(MatrixError::FieldMismatch);
    }
    if system.rows() != rhs.rows() {
        return Err(MatrixError::Shape(format!(
            "system has {} rows, rhs has {}",
            system.rows(),
            rhs.rows()
        )));
    }
    let f = system.field().clone();
    let n = system.cols();
    let aug = system.hstack(rhs)?;
    let ech = rref_matrix(&aug, n);
    // Consistency: no nonzero entry in the augmented part of a zero row.
    let rank = ech.pivots.len();
    let mut consistent = true;
    'outer: for r in rank..ech.rows {
        for c in n..ech.width {
            if !f.is_zero(ech.at(r, c)) {
                consistent = false;
                break 'outer;
            }
        }
    }
    let solution = if consistent {
        let mut sol = Matrix::zero(n, rhs.cols(), &f);
        for (i, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols() {
                *sol.at_mut(pc, j) = ech.at(i, n + j).clone();
            }
        }
        Some(sol)
    } else {
        None
    };
    // Kernel from the same echelon form.
    let pivot_set: std::collections::HashSet<usize> = ech.pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for (i, &pc) in ech.pivots.iter().enumerate() {
            v[pc] = f.neg(ech.at(i, free));
        }
        kernel.push(v);
    }
    Ok(LinearSolution { solution, kernel })
}

pub fn invert(m: &Matrix) -> Result<Matrix, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let f = m.field().clone();
    let aug = m.hstack(&Matrix::identity(n, &f))?;
    let ech = rref_matrix(&aug, n);
    if ech.pivots.len() < n {
        return Err(MatrixError::Singular);
    }
    let mut inv = Matrix::zero(n, n, &f);
    for r in 0..n {
        for c in 0..n {
            *inv.at_mut(r, c) = ech.at(r, n + c).clone();
        }
    }
    Ok(inv)
}

pub fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

/// Characteristic polynomial (degree n, monic) via exact Hessenberg reduction,
/// and minimal polynomial via iterated Krylov spans.
pub fn char_min_poly(m: &Matrix) -> Result<(Polynomial, Polynomial), MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok((char_poly(m), min_poly(m)))
}

fn char_poly(m: &Matrix) -> Polynomial {
    let f = m.field().clone();
    let n = m.rows();
    if n == 0 {
        return Polynomial::one(&f);
    }
    // Similarity reduction to upper Hessenberg form.
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let mut pivot = None;
        for i in j + 1..n {
            if !f.is_zero(h.at(i, j)) {
                pivot = Some(i);
                break;
            }
        }
        let Some(pi) = pivot else { continue };
        if pi != j + 1 {
            // Swap rows and the matching columns to preserve similarity.
            for c in 0..n {
                let a = h.at(pi, c).clone();
                let b = h.at(j + 1, c).clone();
                *h.at_mut(pi, c) = b;
                *h.at_mut(j + 1, c) = a;
            }
            for r in 0..n {
                let a = h.at(r, pi).clone();
                let b = h.at(r, j + 1).clone();
                *h.at_mut(r, pi) = b;
                *h.at_mut(r, j + 1) = a;
            }
        }
        let inv = f.inv(h.at(j + 1, j)).unwrap();
        for i in j + 2..n {
            let factor = f.mul(h.at(i, j), &inv);
            if f.is_zero(&factor) {
                continue;
            }
            // row_i -= factor * row_{j+1}
            for c in 0..n {
                let delta = f.mul(&factor, h.at(j + 1, c));
                *h.at_mut(i, c) = f.sub(h.at(i, c), &delta);
            }
            // col_{j+1} += factor * col_i  (inverse column operation)
            for r in 0..n {
                let delta = f.mul(&factor, h.at(r, i));
                *h.at_mut(r, j + 1) = f.add(h.at(r, j + 1), &delta);
            }
        }
    }
    // Recurrence on leading principal minors of the Hessenberg matrix.
    let x = Polynomial::x(&f);
    let mut p: Vec<Polynomial> = vec![Polynomial::one(&f)];
    for mm in 1..=n {
        let head = x
            .sub(&Polynomial::constant(h.at(mm - 1, mm - 1).clone(), &f))
            .mul(&p[mm - 1]);
        let mut acc = head;
        let mut sub_prod = f.one();
        for k in (1..mm).rev() {
            // product of subdiagonal entries h[j][j-1] for j = k..mm-1
            sub_prod = f.mul(&sub_prod, h.at(k, k - 1));
            let coeff = f.mul(h.at(k - 1, mm - 1), &sub_prod);
            if f.is_zero(&coeff) {
                continue;
            }
            acc = acc.sub(&p[k - 1].scale(&coeff));
        }
        p.push(acc);
    }
    p.pop().unwrap()
}

fn min_poly(m: &Matrix) -> Polynomial {
    let f = m.field().clone();
    let n = m.rows();
    if n == 0 {
        return Polynomial::one(&f);
    }
    let mut result = Polynomial::one(&f);
    for start in 0..n {
        if result.degree() == Some(n) {
            break;
        }
        // Krylov sequence from e_start.
        let mut v = Matrix::zero(n, 1, &f);
        *v.at_mut(start, 0) = f.one();
        let mut krylov: Vec<Vec<Scalar>> = vec![v.col_vec(0)];
        loop {
            v = m.mul(&v).unwrap();
            let cols = Matrix::from_columns(&krylov, &f);
            let sol = solve_linear(&cols, &v).unwrap();
            if let Some(x) = sol.solution {
                // A^k e = sum x_i A^i e  =>  local minimal polynomial.
                let k = krylov.len();
                let mut coeffs = vec![f.zero(); k + 1];
                for (i, c) in coeffs.iter_mut().enumerate().take(k) {
                    *c = f.neg(x.at(i, 0));
                }
                coeffs[k] = f.one();
                let local = Polynomial::new(coeffs, &f);
                result = result.lcm(&local);
                break;
            }
            krylov.push(v.col_vec(0));
        }
    }
    result.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn random_matrix(rows: usize, cols: usize, f: &Field, rng: &mut impl Rng) -> Matrix {
        Matrix::from_fn(rows, cols, f, |_, _| f.random(rng))
    }

    #[test]
    fn solve_identity_f3() {
        let f = Field::prime(3).unwrap();
        let id = Matrix::identity(2, &f);
        let rhs = Matrix::from_i64_rows(&[vec![1], vec![2]], &f);
        let sol = solve_linear(&id, &rhs).unwrap();
        assert_eq!(sol.solution.unwrap(), rhs);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn kernel_rank_one_f2() {
        let f = Field::prime(2).unwrap();
        let m = Matrix::from_i64_rows(&[vec![1, 1], vec![1, 1]], &f);
        let rhs = Matrix::zero(2, 1, &f);
        let sol = solve_linear(&m, &rhs).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(sol.kernel[0], vec![f.one(), f.one()]);
    }

    #[test]
    fn solve_random_consistent_f5() {
        // rank-4 6x4 system with rhs in the column span; verified by multiplying back
        let f = Field::prime(5).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        loop {
            let m = random_matrix(6, 4, &f, &mut rng);
            if rank(&m) < 4 {
                continue;
            }
            let x = random_matrix(4, 1, &f, &mut rng);
            let rhs = m.mul(&x).unwrap();
            let sol = solve_linear(&m, &rhs).unwrap();
            let got = sol.solution.expect("consistent by construction");
            assert_eq!(m.mul(&got).unwrap(), rhs);
            assert!(sol.kernel.is_empty());
            // Inconsistent variation: perturb rhs outside the span.
            break;
        }
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..10 {
            let m = random_matrix(4, 6, &f, &mut rng);
            for v in kernel_basis(&m) {
                let col = Matrix::column(v, &f);
                assert!(m.mul(&col).unwrap().is_zero());
            }
            // rank-nullity
            assert_eq!(rank(&m) + kernel_basis(&m).len(), 6);
        }
    }

    #[test]
    fn invert_examples() {
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64_rows(&[vec![1, 1], vec![0, 1]], &f2);
        assert_eq!(invert(&m).unwrap(), m); // self-inverse
        let q = Field::rational();
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        loop {
            let m = random_matrix(4, 4, &q, &mut rng);
            match invert(&m) {
                Ok(inv) => {
                    assert!(m.mul(&inv).unwrap().is_identity());
                    break;
                }
                Err(MatrixError::Singular) => continue,
                Err(e) => panic!("{e}"),
            }
        }
        let sing = Matrix::zero(3, 3, &q);
        assert!(matches!(invert(&sing), Err(MatrixError::Singular)));
    }

    #[test]
    fn char_min_identity_f3() {
        let f = Field::prime(3).unwrap();
        let id = Matrix::identity(2, &f);
        let (c, m) = char_min_poly(&id).unwrap();
        // char = (t-1)^2, min = t-1
        assert_eq!(c, Polynomial::from_i64(&[1, -2, 1], &f));
        assert_eq!(m, Polynomial::from_i64(&[-1, 1], &f));
    }

    #[test]
    fn char_min_nilpotent_q() {
        let q = Field::rational();
        let m = Matrix::from_i64_rows(&[vec![0, 1], vec![0, 0]], &q);
        let (c, mp) = char_min_poly(&m).unwrap();
        assert_eq!(c, Polynomial::from_i64(&[0, 0, 1], &q));
        assert_eq!(mp, Polynomial::from_i64(&[0, 0, 1], &q));
    }

    #[test]
    fn cayley_hamilton_random_f7() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..5 {
            let m = random_matrix(5, 5, &f, &mut rng);
            let (c, mp) = char_min_poly(&m).unwrap();
            assert_eq!(c.degree(), Some(5));
            assert!(c.eval_matrix(&m).is_zero(), "char(m)(m) != 0");
            assert!(mp.eval_matrix(&m).is_zero(), "min(m)(m) != 0");
            assert!(c.rem(&mp).is_zero(), "min does not divide char");
        }
    }
}
