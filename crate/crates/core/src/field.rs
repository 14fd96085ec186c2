//! Exact scalar arithmetic over prime fields, the rationals, and cyclotomic
//! fields Q(zeta_l).
//!
//! Scalars are kept in a unique canonical form so equality is representation
//! equality: residues in [0, p), fractions fully reduced, cyclotomic elements
//! reduced modulo the l-th cyclotomic polynomial.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::Rng;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic order must be >= 2, got {0}")]
    BadCyclotomicOrder(u64),
    #[error("scalars belong to different fields")]
    Mismatch,
    #[error("cannot parse {0:?} as an element of {1}")]
    Parse(String, String),
}

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u64),
    Rational,
    Cyclotomic(u64),
}

#[derive(Debug)]
struct CycloData {
    degree: usize,
    /// Monic l-th cyclotomic polynomial, length degree + 1, integer coefficients.
    modulus: Vec<BigInt>,
}

#[derive(Debug)]
struct FieldRepr {
    kind: FieldKind,
    cyclo: Option<CycloData>,
}

/// An exact field: F_p, Q, or Q(zeta_l). Cheap to clone.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldRepr>);

/// A canonical field element. Equality is representation equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime(u64),
    Rational(BigRational),
    /// Coefficients of 1, zeta, ..., zeta^(degree-1); always exactly `degree` long.
    Cyclotomic(Vec<BigRational>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.kind == other.0.kind
    }
}
impl Eq for Field {}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let r = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn euler_totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer polynomial arithmetic used to build cyclotomic moduli.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic; division is exact by construction.
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Monic l-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_polynomial(l: u64) -> Vec<BigInt> {
    // x^l - 1 divided by the cyclotomic polynomials of all proper divisors.
    let mut f = vec![BigInt::zero(); l as usize + 1];
    f[0] = -BigInt::one();
    f[l as usize] = BigInt::one();
    for d in 1..l {
        if l % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            f = int_poly_div_exact(&f, &phi_d);
        }
    }
    f
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Prime(p),
            cyclo: None,
        })))
    }

    pub fn rational() -> Self {
        Field(Arc::new(FieldRepr {
            kind: FieldKind::Rational,
            cyclo: None,
        }))
    }

    pub fn cyclotomic(l: u64) -> Result<Self, FieldError> {
        if l < 2 {
            return Err(FieldError::BadCyclotomicOrder(l));
        }
        let modulus = cyclotomic_polynomial(l);
        let degree = euler_totient(l) as usize;
        debug_assert_eq!(modulus.len(), degree + 1);
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Cyclotomic(l),
            cyclo: Some(CycloData { degree, modulus }),
        })))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn characteristic(&self) -> u64 {
        match self.0.kind {
            FieldKind::Prime(p) => p,
            _ => 0,
        }
    }

    /// Extension degree over the prime field / Q.
    pub fn degree(&self) -> usize {
        match &self.0.cyclo {
            Some(c) => c.degree,
            None => 1,
        }
    }

    /// Does this scalar belong to this field's representation?
    pub fn contains(&self, a: &Scalar) -> bool {
        match (self.0.kind, a) {
            (FieldKind::Prime(p), Scalar::Prime(x)) => *x < p,
            (FieldKind::Rational, Scalar::Rational(_)) => true,
            (FieldKind::Cyclotomic(_), Scalar::Cyclotomic(v)) => v.len() == self.degree(),
            _ => false,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.0.kind {
            FieldKind::Prime(_) => Scalar::Prime(0),
            FieldKind::Rational => Scalar::Rational(BigRational::zero()),
            FieldKind::Cyclotomic(_) => {
                Scalar::Cyclotomic(vec![BigRational::zero(); self.degree()])
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0.kind {
            FieldKind::Prime(p) => {
                let r = v.rem_euclid(p as i64);
                Scalar::Prime(r as u64)
            }
            FieldKind::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldKind::Cyclotomic(_) => {
                let mut c = vec![BigRational::zero(); self.degree()];
                c[0] = BigRational::from(BigInt::from(v));
                Scalar::Cyclotomic(c)
            }
        }
    }

    /// The residue class of the indeterminate, i.e. zeta_l. Panics on non-cyclotomic fields.
    pub fn zeta(&self) -> Scalar {
        match self.0.kind {
            FieldKind::Cyclotomic(_) => {
                let deg = self.degree();
                let mut c = vec![BigRational::zero(); deg];
                if deg > 1 {
                    c[1] = BigRational::one();
                    Scalar::Cyclotomic(c)
                } else {
                    // l = 2: zeta = -1.
                    c[0] = -BigRational::one();
                    Scalar::Cyclotomic(c)
                }
            }
            _ => panic!("zeta only exists in cyclotomic fields"),
        }
    }

    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let l = match self.0.kind {
            FieldKind::Cyclotomic(l) => l as i64,
            _ => panic!("zeta only exists in cyclotomic fields"),
        };
        let k = k.rem_euclid(l) as u64;
        self.pow(&self.zeta(), k)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Prime(x) => *x == 0,
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Cyclotomic(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Prime(x), Scalar::Prime(y)) => {
                let p = self.characteristic();
                Scalar::Prime((x + y) % p)
            }
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => Scalar::Cyclotomic(
                x.iter().zip(y.iter()).map(|(u, v)| u + v).collect(),
            ),
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Prime(x) => {
                let p = self.characteristic();
                Scalar::Prime(if *x == 0 { 0 } else { p - x })
            }
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.iter().map(|x| -x).collect()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(mul_mod_u64(*x, *y, self.characteristic()))
            }
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                Scalar::Cyclotomic(self.cyclo_mul(x, y))
            }
            _ => panic!("scalar kind mismatch"),
        }
    }

    fn cyclo_mul(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let deg = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                prod[i + j] += xi * yj;
            }
        }
        self.cyclo_reduce(prod)
    }

    fn cyclo_reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let data = self.0.cyclo.as_ref().expect("cyclotomic field");
        let deg = data.degree;
        // Modulus is monic: subtract c * x^(i-deg) * Phi for each high coefficient.
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[i], BigRational::zero());
            for (j, mj) in data.modulus.iter().enumerate().take(deg) {
                if !mj.is_zero() {
                    v[i - deg + j] -= &c * BigRational::from(mj.clone());
                }
            }
        }
        v.truncate(deg);
        v.resize(deg, BigRational::zero());
        v
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match a {
            Scalar::Prime(x) => {
                let p = self.characteristic();
                Some(Scalar::Prime(pow_mod_u64(*x, p - 2, p)))
            }
            Scalar::Rational(x) => Some(Scalar::Rational(x.recip())),
            Scalar::Cyclotomic(c) => {
                // Extended Euclid in Q[x] against the cyclotomic modulus.
                let data = self.0.cyclo.as_ref().unwrap();
                let modulus: Vec<BigRational> = data
                    .modulus
                    .iter()
                    .map(|m| BigRational::from(m.clone()))
                    .collect();
                let inv = rat_poly_inverse_mod(c, &modulus)?;
                let mut out = inv;
                out.resize(data.degree, BigRational::zero());
                Some(Scalar::Cyclotomic(out))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        Some(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Uniform for prime fields; small bounded numerators/denominators otherwise.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.0.kind {
            FieldKind::Prime(p) => Scalar::Prime(rng.gen_range(0..p)),
            FieldKind::Rational => {
                let n = rng.gen_range(-9i64..=9);
                let d = rng.gen_range(1i64..=9);
                Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            FieldKind::Cyclotomic(_) => {
                let deg = self.degree();
                Scalar::Cyclotomic(
                    (0..deg)
                        .map(|_| {
                            let n = rng.gen_range(-4i64..=4);
                            BigRational::from(BigInt::from(n))
                        })
                        .collect(),
                )
            }
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Prime(x) => x.to_string(),
            Scalar::Rational(x) => format_rational(x),
            Scalar::Cyclotomic(c) => {
                let mut parts: Vec<String> = Vec::new();
                for (i, coeff) in c.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{i}"),
                    };
                    let lead = format_rational(&coeff.abs());
                    let body = if mono.is_empty() {
                        lead
                    } else if coeff.abs().is_one() {
                        mono
                    } else {
                        format!("{lead}*{mono}")
                    };
                    if parts.is_empty() {
                        parts.push(if coeff.is_negative() {
                            format!("-{body}")
                        } else {
                            body
                        });
                    } else if coeff.is_negative() {
                        parts.push(format!("- {body}"));
                    } else {
                        parts.push(format!("+ {body}"));
                    }
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" ")
                }
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let err = || FieldError::Parse(s.to_string(), format!("{:?}", self.kind()));
        let s = s.trim();
        match self.0.kind {
            FieldKind::Prime(p) => {
                let v: i128 = s.parse().map_err(|_| err())?;
                Ok(Scalar::Prime(v.rem_euclid(p as i128) as u64))
            }
            FieldKind::Rational => parse_rational(s).map(Scalar::Rational).ok_or_else(err),
            FieldKind::Cyclotomic(_) => {
                let deg = self.degree();
                let mut coeffs = vec![BigRational::zero(); deg + 8];
                for (sign, term) in split_signed_terms(s).ok_or_else(err)? {
                    let (coeff, power) = parse_cyclo_term(&term).ok_or_else(err)?;
                    if power >= coeffs.len() {
                        coeffs.resize(power + 1, BigRational::zero());
                    }
                    if sign {
                        coeffs[power] -= coeff;
                    } else {
                        coeffs[power] += coeff;
                    }
                }
                Ok(Scalar::Cyclotomic(self.cyclo_reduce(coeffs)))
            }
        }
    }
}

fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

/// Split "a + b - c" into (negated?, term) pairs, respecting a leading sign.
fn split_signed_terms(s: &str) -> Option<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut neg = false;
    let mut seen_any = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if seen_any && !current.trim().is_empty() => {
                out.push((neg, current.trim().to_string()));
                current = String::new();
                neg = ch == '-';
            }
            '-' if current.trim().is_empty() && !seen_any => {
                neg = true;
                seen_any = true;
            }
            _ => {
                if !ch.is_whitespace() {
                    seen_any = true;
                }
                current.push(ch);
            }
        }
    }
    if current.trim().is_empty() {
        return None;
    }
    out.push((neg, current.trim().to_string()));
    Some(out)
}

/// Parse a single cyclotomic term: "2/3", "z", "z^4", "2*z", "2/3*z^2".
fn parse_cyclo_term(t: &str) -> Option<(BigRational, usize)> {
    let t = t.trim();
    if let Some(idx) = t.find('z') {
        let coeff_part = t[..idx].trim().trim_end_matches('*').trim();
        let coeff = if coeff_part.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coeff_part)?
        };
        let rest = t[idx + 1..].trim();
        let power = if rest.is_empty() {
            1usize
        } else {
            rest.strip_prefix('^')?.trim().parse().ok()?
        };
        Some((coeff, power))
    } else {
        Some((parse_rational(t)?, 0))
    }
}

/// Inverse of `a` modulo the monic polynomial `m` over Q, both as coefficient vectors.
fn rat_poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem(mut num: Vec<BigRational>, den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let dd = deg(den).unwrap();
        let lead = den[dd].clone();
        let mut quot = vec![BigRational::zero(); num.len().saturating_sub(dd)];
        while let Some(dn) = deg(&num) {
            if dn < dd {
                break;
            }
            let c = &num[dn] / &lead;
            quot[dn - dd] = c.clone();
            for (j, dj) in den.iter().enumerate().take(dd + 1) {
                let delta = &c * dj;
                num[dn - dd + j] -= delta;
            }
        }
        (quot, num)
    }
    // Extended Euclid: maintain r and the Bezout coefficient of `a`.
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while deg(&r1).is_some() {
        let (q, r) = rem(r0.clone(), &r1);
        // s_next = s0 - q * s1
        let mut s_next = s0.clone();
        s_next.resize(s_next.len().max(q.len() + s1.len()), BigRational::zero());
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, sj) in s1.iter().enumerate() {
                s_next[i + j] -= qi * sj;
            }
        }
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
    }
    // r0 is now the gcd; it must be a nonzero constant for invertibility.
    let d = deg(&r0)?;
    if d != 0 {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.iter().map(|x| x * &c).collect())
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime(x) => write!(f, "{x}"),
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Cyclotomic(c) => write!(f, "cyc{c:?}"),
        }
    }
}
