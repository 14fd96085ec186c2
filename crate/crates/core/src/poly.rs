//! Univariate polynomials with exact field coefficients, kept canonical
//! (no trailing zero coefficients).

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    /// coeffs[i] is the coefficient of t^i; empty means the zero polynomial.
    coeffs: Vec<Scalar>,
    field: Field,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>, field: &Field) -> Self {
        while let Some(last) = coeffs.last() {
            if field.is_zero(last) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Polynomial {
            coeffs,
            field: field.clone(),
        }
    }

    pub fn zero(field: &Field) -> Self {
        Polynomial {
            coeffs: Vec::new(),
            field: field.clone(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Polynomial::new(vec![field.one()], field)
    }

    pub fn constant(c: Scalar, field: &Field) -> Self {
        Polynomial::new(vec![c], field)
    }

    /// The monomial t.
    pub fn x(field: &Field) -> Self {
        Polynomial::new(vec![field.zero(), field.one()], field)
    }

    pub fn from_i64(coeffs: &[i64], field: &Field) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| field.from_i64(c)).collect(), field)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| self.field.is_one(c)).unwrap_or(false)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial::new(coeffs, f)
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.field;
        Polynomial::new(self.coeffs.iter().map(|c| f.neg(c)).collect(), f)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        let f = &self.field;
        Polynomial::new(self.coeffs.iter().map(|c| f.mul(c, s)).collect(), f)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(f);
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Polynomial::new(coeffs, f)
    }

    /// Euclidean division; panics if `den` is zero.
    pub fn div_rem(&self, den: &Polynomial) -> (Polynomial, Polynomial) {
        let f = &self.field;
        let dd = den.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(den.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let dn = rem.len() - 1;
            if f.is_zero(&rem[dn]) {
                rem.pop();
                continue;
            }
            if dn < dd {
                break;
            }
            let c = f.mul(&rem[dn], &lead_inv);
            quot[dn - dd] = c.clone();
            for j in 0..=dd {
                let delta = f.mul(&c, &den.coeffs[j]);
                rem[dn - dd + j] = f.sub(&rem[dn - dd + j], &delta);
            }
            rem.pop();
        }
        (Polynomial::new(quot, f), Polynomial::new(rem, f))
    }

    pub fn rem(&self, den: &Polynomial) -> Polynomial {
        self.div_rem(den).1
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    pub fn derivative(&self) -> Polynomial {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(f);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| f.mul(&f.from_i64((i + 1) as i64), c))
            .collect();
        Polynomial::new(coeffs, f)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let f = &self.field;
        let n = m.rows();
        let mut acc = Matrix::zero(n, n, f);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).unwrap();
            for i in 0..n {
                *acc.at_mut(i, i) = f.add(acc.at(i, i), c);
            }
        }
        acc
    }

    /// self^e mod m, with a big-integer exponent given as big-endian bits.
    pub fn pow_mod_bits(&self, bits: &[bool], m: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::one(&self.field);
        let base = self.rem(m);
        for &bit in bits {
            acc = acc.mul(&acc).rem(m);
            if bit {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Polynomial) -> Polynomial {
        let bits: Vec<bool> = (0..64)
            .rev()
            .map(|i| (e >> i) & 1 == 1)
            .skip_while(|b| !b)
            .collect();
        if bits.is_empty() {
            return Polynomial::one(&self.field).rem(m);
        }
        self.pow_mod_bits(&bits, m)
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| match i {
                0 => self.field.format(c),
                1 => format!("({})t", self.field.format(c)),
                _ => format!("({})t^{}", self.field.format(c), i),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_roundtrip() {
        let f = Field::prime(7).unwrap();
        let a = Polynomial::from_i64(&[3, 0, 1, 2, 5], &f);
        let b = Polynomial::from_i64(&[1, 4, 1], &f);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_multiples() {
        let f = Field::prime(5).unwrap();
        let g = Polynomial::from_i64(&[1, 1], &f); // t + 1
        let a = g.mul(&Polynomial::from_i64(&[2, 0, 1], &f));
        let b = g.mul(&Polynomial::from_i64(&[3, 1], &f));
        let d = a.gcd(&b);
        assert!(a.rem(&d).is_zero());
        assert!(b.rem(&d).is_zero());
        assert!(d.rem(&g).is_zero());
    }

    #[test]
    fn canonical_trailing_zeros() {
        let f = Field::rational();
        let p = Polynomial::new(vec![f.one(), f.zero(), f.zero()], &f);
        assert_eq!(p.degree(), Some(0));
        let z = Polynomial::new(vec![f.zero()], &f);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }
}
