//! Univariate polynomial factorization over prime fields F_p:
//! squarefree decomposition, distinct-degree splitting, then equal-degree
//! splitting (Cantor–Zassenhaus for odd p, the trace-map variant for p = 2).
//!
//! Randomness is drawn from an explicitly seeded ChaCha stream so every run
//! with the same seed factors identically.

use num::BigUint;
use num::One;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::field::{Field, FieldKind, Scalar};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct Factorization {
    /// Leading coefficient of the input.
    pub unit: Scalar,
    /// Monic irreducible factors with multiplicities, sorted for determinism.
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    /// Re-expand the factorization; used by tests as an independent oracle.
    pub fn expand(&self, f: &Field) -> Polynomial {
        let mut acc = Polynomial::constant(self.unit.clone(), f);
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

/// Factor a nonzero polynomial over F_p into monic irreducibles.
///
/// Panics if the field is not a prime field or the polynomial is zero.
pub fn factor(poly: &Polynomial, seed: u64) -> Factorization {
    let f = poly.field().clone();
    let FieldKind::Prime(p) = f.kind() else {
        panic!("factorization is only supported over prime fields");
    };
    assert!(!poly.is_zero(), "cannot factor the zero polynomial");
    let unit = poly.leading().unwrap().clone();
    let monic = poly.monic();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut factors: Vec<(Polynomial, usize)> = Vec::new();
    for (sf, mult) in squarefree_parts(&monic, p) {
        for (degree, product) in distinct_degree(&sf, p) {
            for irr in equal_degree(&product, degree, p, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
    Factorization { unit, factors }
}

/// Deterministic ordering key: (degree, coefficient residues low-to-high).
fn poly_key(p: &Polynomial) -> (usize, Vec<u64>) {
    let d = p.degree().map_or(0, |d| d);
    let coeffs = (0..=d)
        .map(|i| match p.coeff(i) {
            Scalar::Prime(x) => x,
            _ => unreachable!(),
        })
        .collect();
    (d, coeffs)
}

/// Squarefree decomposition in characteristic p: returns pairs
/// (squarefree part, multiplicity) whose weighted product is the input.
fn squarefree_parts(poly: &Polynomial, p: u64) -> Vec<(Polynomial, usize)> {
    let mut out: Vec<(Polynomial, usize)> = Vec::new();
    // Peel g = gcd(f, f') repeatedly; whatever survives with zero derivative
    // is a perfect p-th power and recurses with multiplicities scaled by p.
    let mut stack = vec![(poly.monic(), 1usize)];
    while let Some((cur, scale)) = stack.pop() {
        if cur.degree() == Some(0) || cur.degree().is_none() {
            continue;
        }
        let deriv = cur.derivative();
        if deriv.is_zero() {
            // cur(t) = h(t^p); take the p-th root.
            stack.push((pth_root(&cur, p), scale * p as usize));
            continue;
        }
        let mut w = cur.gcd(&deriv); // product of repeated parts (with lower mult)
        let mut rest = cur.div_rem(&w).0; // squarefree * (p-th power residue)
        let mut mult = 1usize;
        while rest.degree().map_or(0, |d| d) > 0 {
            let y = rest.gcd(&w);
            let part = rest.div_rem(&y).0;
            if part.degree().map_or(0, |d| d) > 0 {
                out.push((part.monic(), mult * scale));
            }
            rest = y.clone();
            w = w.div_rem(&y).0;
            mult += 1;
        }
        if w.degree().map_or(0, |d| d) > 0 {
            // Remaining factor has derivative zero: a p-th power.
            stack.push((w.monic(), scale));
        }
    }
    out
}

/// p-th root of h(t^p) over F_p: Frobenius fixes coefficients, so just
/// decimate exponents.
fn pth_root(poly: &Polynomial, p: u64) -> Polynomial {
    let f = poly.field().clone();
    let d = poly.degree().unwrap();
    debug_assert_eq!(d % p as usize, 0);
    let coeffs: Vec<Scalar> = (0..=d / p as usize)
        .map(|i| poly.coeff(i * p as usize))
        .collect();
    Polynomial::new(coeffs, &f)
}

/// Split a monic squarefree polynomial into products of irreducibles of a
/// common degree: returns (d, product of all irreducible factors of degree d).
fn distinct_degree(poly: &Polynomial, p: u64) -> Vec<(usize, Polynomial)> {
    let f = poly.field().clone();
    let mut out = Vec::new();
    let mut rest = poly.monic();
    let x = Polynomial::x(&f);
    let mut xq = x.rem(&rest); // x^(p^d) mod rest, updated per round
    let mut d = 0usize;
    while rest.degree().map_or(0, |e| e) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            // What remains is itself irreducible.
            out.push((rest.degree().unwrap(), rest.clone()));
            break;
        }
        xq = xq.pow_mod(p, &rest);
        let g = rest.gcd(&xq.sub(&x));
        if g.degree().map_or(0, |e| e) > 0 {
            out.push((d, g.monic()));
            rest = rest.div_rem(&g).0.monic();
            xq = xq.rem(&rest);
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting of a monic squarefree product of
/// irreducibles all of degree `d`.
fn equal_degree(poly: &Polynomial, d: usize, p: u64, rng: &mut ChaCha12Rng) -> Vec<Polynomial> {
    let n = poly.degree().unwrap();
    if n == d {
        return vec![poly.monic()];
    }
    let f = poly.field().clone();
    let split = loop {
        let a = random_poly(n, &f, rng);
        if a.degree().map_or(0, |e| e) == 0 {
            continue;
        }
        let g = poly.gcd(&a);
        if g.degree().map_or(0, |e| e) > 0 && g.degree().unwrap() < n {
            break g;
        }
        let candidate = if p == 2 {
            // Trace map: a + a^2 + a^4 + ... + a^(2^(d-1)) mod poly.
            let mut acc = a.rem(poly);
            let mut term = acc.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(poly);
                acc = acc.add(&term);
            }
            acc
        } else {
            // a^((p^d - 1)/2) - 1 mod poly.
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let bits: Vec<bool> = e.to_radix_be(2).into_iter().map(|b| b == 1).collect();
            let pw = a.pow_mod_bits(&bits, poly);
            pw.sub(&Polynomial::one(&f))
        };
        let g = poly.gcd(&candidate);
        if g.degree().map_or(0, |e| e) > 0 && g.degree().unwrap() < n {
            break g;
        }
    };
    let other = poly.div_rem(&split).0;
    let mut out = equal_degree(&split.monic(), d, p, rng);
    out.extend(equal_degree(&other.monic(), d, p, rng));
    out
}

fn random_poly(below_degree: usize, f: &Field, rng: &mut ChaCha12Rng) -> Polynomial {
    let coeffs: Vec<Scalar> = (0..below_degree).map(|_| f.random(rng)).collect();
    Polynomial::new(coeffs, f)
}

/// Irreducibility test: the polynomial equals its unique factor.
pub fn is_irreducible(poly: &Polynomial, seed: u64) -> bool {
    match poly.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fac = factor(poly, seed);
            fac.factors.len() == 1 && fac.factors[0].1 == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64], f: &Field) -> Polynomial {
        Polynomial::from_i64(coeffs, f)
    }

    #[test]
    fn quadratic_splits_over_f5() {
        // t^2 + 1 = (t + 2)(t + 3) over F_5
        let f = Field::prime(5).unwrap();
        let fac = factor(&p(&[1, 0, 1], &f), 0);
        let factors: Vec<_> = fac.factors.iter().map(|(g, e)| (g.clone(), *e)).collect();
        assert_eq!(
            factors,
            vec![(p(&[2, 1], &f), 1), (p(&[3, 1], &f), 1)]
        );
    }

    #[test]
    fn irreducible_quadratic_over_f2() {
        let f = Field::prime(2).unwrap();
        let q = p(&[1, 1, 1], &f); // t^2 + t + 1
        let fac = factor(&q, 0);
        assert_eq!(fac.factors, vec![(q.clone(), 1)]);
        assert!(is_irreducible(&q, 0));
    }

    #[test]
    fn repeated_root_over_f3() {
        // (t - 1)^3 = t^3 - 3t^2 + 3t - 1 = t^3 + 2 over F_3
        let f = Field::prime(3).unwrap();
        let fac = factor(&p(&[2, 0, 0, 1], &f), 0);
        assert_eq!(fac.factors, vec![(p(&[-1, 1], &f), 3)]);
    }

    #[test]
    fn pth_power_over_f2() {
        // (t^2 + t + 1)^2 = t^4 + t^2 + 1 over F_2 (derivative vanishes)
        let f = Field::prime(2).unwrap();
        let fac = factor(&p(&[1, 0, 1, 0, 1], &f), 0);
        assert_eq!(fac.factors, vec![(p(&[1, 1, 1], &f), 2)]);
    }

    #[test]
    fn expand_matches_input() {
        let f = Field::prime(7).unwrap();
        for seed in 0..3u64 {
            // mixed product: 3 * (t+1)^2 * (t^2+1) * (t^3 + t + 1)
            let input = p(&[3], &f)
                .mul(&p(&[1, 1], &f))
                .mul(&p(&[1, 1], &f))
                .mul(&p(&[1, 0, 1], &f))
                .mul(&p(&[1, 1, 0, 1], &f));
            let fac = factor(&input, seed);
            assert_eq!(fac.expand(&f), input);
            let total: usize = fac
                .factors
                .iter()
                .map(|(g, e)| g.degree().unwrap() * e)
                .sum();
            assert_eq!(total, input.degree().unwrap());
            for (g, _) in &fac.factors {
                assert!(is_irreducible(g, seed));
            }
        }
    }

    #[test]
    fn determinism_across_runs() {
        let f = Field::prime(11).unwrap();
        let input = p(&[5, 3, 0, 2, 1, 1], &f);
        let a = factor(&input, 42);
        let b = factor(&input, 42);
        assert_eq!(a.factors, b.factors);
        assert_eq!(a.expand(&f), input);
    }

    #[test]
    fn large_split_over_f2() {
        // t^4 + t = t (t+1) (t^2 + t + 1) over F_2: forces the trace-map path
        let f = Field::prime(2).unwrap();
        let fac = factor(&p(&[0, 1, 0, 0, 1], &f), 0);
        assert_eq!(
            fac.factors,
            vec![
                (p(&[0, 1], &f), 1),
                (p(&[1, 1], &f), 1),
                (p(&[1, 1, 1], &f), 1)
            ]
        );
    }
}
