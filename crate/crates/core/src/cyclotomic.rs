//! Exact arithmetic in the m-th cyclotomic field `Q(ζ_m) = Q[x] / Φ_m(x)`.
//!
//! Elements are coefficient vectors of length `φ(m)` over the rationals,
//! always reduced modulo `Φ_m`, so equality and zero tests are exact.
//! Floating point only appears in [`CyclotomicField::to_complex`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An integer polynomial, coefficients stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<BigInt>,
}

impl CycPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        CycPoly { coeffs }
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return CycPoly { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CycPoly::from_coeffs(out)
    }

    /// Exact quotient by a monic divisor. Panics if `divisor` is not monic
    /// or does not divide `self`.
    fn div_exact_monic(&self, divisor: &CycPoly) -> CycPoly {
        let d = divisor.degree();
        assert!(
            divisor.coeffs.last().is_some_and(One::is_one),
            "divisor must be monic"
        );
        if self.coeffs.len() <= d {
            assert!(self.coeffs.is_empty(), "inexact division");
            return CycPoly { coeffs: Vec::new() };
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + j] -= &c * dj;
            }
            quot[i - d] = c;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact division");
        CycPoly::from_coeffs(quot)
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (sign, body)) in terms.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

pub fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
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

/// `Φ_m`, by dividing `x^m - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(m: u32) -> CycPoly {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    let mut cache: BTreeMap<u32, CycPoly> = BTreeMap::new();
    for d in divisors(m) {
        let mut p = CycPoly::x_pow_minus_one(d as usize);
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            p = p.div_exact_monic(&cache[&e]);
        }
        cache.insert(d, p);
    }
    cache.remove(&m).expect("m divides itself")
}

/// An element of `Q(ζ_m)`; see [`CyclotomicField`] for the operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    coeffs: Vec<BigRational>,
}

impl CycElem {
    /// Coefficients in the power basis `1, ζ, .., ζ^(φ(m)-1)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients rendered as `p` or `p/q`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

#[derive(Debug)]
struct FieldData {
    modulus: u32,
    /// `Φ_m` coefficients below the leading one.
    phi: Vec<BigRational>,
    poly: CycPoly,
    roots: Vec<CycElem>,
}

/// The field `Q(ζ_m)`. Cheap to clone.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.data.modulus == other.data.modulus
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(modulus: u32) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::InvalidModulus(modulus));
        }
        let poly = cyclotomic_poly(modulus);
        let degree = poly.degree();
        let phi = poly.coeffs()[..degree]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut data = FieldData {
            modulus,
            phi,
            poly,
            roots: Vec::new(),
        };
        let roots = (0..modulus as usize)
            .map(|k| {
                let mut raw = vec![BigRational::zero(); k + 1];
                raw[k] = BigRational::one();
                reduce(&data, raw)
            })
            .collect();
        data.roots = roots;
        Ok(CyclotomicField {
            data: Arc::new(data),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.data.modulus
    }

    pub fn degree(&self) -> usize {
        self.data.phi.len()
    }

    pub fn poly(&self) -> &CycPoly {
        &self.data.poly
    }

    pub fn zero(&self) -> CycElem {
        CycElem {
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycElem {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: impl Into<BigInt>) -> CycElem {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, q: BigRational) -> CycElem {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    /// Builds an element from power-basis coefficients of any length,
    /// reducing modulo `Φ_m`.
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> CycElem {
        reduce(&self.data, coeffs)
    }

    /// `ζ_m^k`, with `k` taken mod m.
    pub fn root_of_unity(&self, k: u32) -> CycElem {
        self.data.roots[(k % self.modulus()) as usize].clone()
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        CycElem {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn add_assign(&self, a: &mut CycElem, b: &CycElem) {
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let d = self.degree();
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        reduce(&self.data, raw)
    }

    /// Multiplication by `ζ^k`: a cyclic shift followed by reduction.
    pub fn mul_root(&self, a: &CycElem, k: u32) -> CycElem {
        let k = (k % self.modulus()) as usize;
        if k == 0 || a.is_zero() {
            return a.clone();
        }
        let mut raw = vec![BigRational::zero(); self.degree() + k];
        for (i, x) in a.coeffs.iter().enumerate() {
            raw[i + k] = x.clone();
        }
        reduce(&self.data, raw)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with `Φ_m`.
    pub fn inv(&self, a: &CycElem) -> Result<CycElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut phi: Vec<BigRational> = self.data.phi.clone();
        phi.push(BigRational::one());
        // Invariant: r0 ≡ s0·a and r1 ≡ s1·a (mod Φ_m).
        let (mut r0, mut s0) = (trim(phi), Vec::new());
        let (mut r1, mut s1) = (trim(a.coeffs.clone()), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Φ_m is irreducible, so the last nonzero remainder is a constant.
        let c = r1[0].clone();
        debug_assert!(!c.is_zero());
        let scaled = s1.into_iter().map(|x| x / &c).collect();
        Ok(reduce(&self.data, scaled))
    }

    pub fn div(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &CycElem, mut e: u64) -> CycElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Numerical value at `ζ = exp(2πi/m)`, as `(re, im)`. Reporting only.
    pub fn to_complex(&self, a: &CycElem) -> (f64, f64) {
        let m = f64::from(self.modulus());
        a.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let angle = std::f64::consts::TAU * k as f64 / m;
                (re + c * angle.cos(), im + c * angle.sin())
            })
    }
}

fn reduce(data: &FieldData, mut raw: Vec<BigRational>) -> CycElem {
    let d = data.phi.len();
    if raw.len() > d {
        for i in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in data.phi.iter().enumerate() {
                if !pj.is_zero() {
                    raw[i - d + j] -= &c * pj;
                }
            }
        }
        raw.truncate(d);
    } else {
        raw.resize(d, BigRational::zero());
    }
    CycElem { coeffs: raw }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = &rem[i] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(3).coeffs(), ints(&[1, 1, 1]).as_slice());
        assert_eq!(cyclotomic_poly(2).coeffs(), ints(&[1, 1]).as_slice());
        assert_eq!(
            cyclotomic_poly(12).coeffs(),
            ints(&[1, 0, -1, 0, 1]).as_slice()
        );
        assert_eq!(cyclotomic_poly(1).coeffs(), ints(&[-1, 1]).as_slice());
        assert_eq!(cyclotomic_poly(12).to_string(), "x^4 - x^2 + 1");
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        // Smallest index with a coefficient outside {-1, 0, 1}.
        let p = cyclotomic_poly(105);
        assert_eq!(p.degree(), 48);
        assert!(p.coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn totient() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (m, e) in (1..=12).zip(expected) {
            assert_eq!(euler_phi(m), e, "phi({m})");
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = CyclotomicField::new(3).unwrap();
        assert_eq!(f.root_of_unity(0), f.one());
        assert_eq!(f.root_of_unity(2).coeffs(), &[q(-1), q(-1)]);
        let total = (0..3).fold(f.zero(), |acc, k| f.add(&acc, &f.root_of_unity(k)));
        assert!(total.is_zero());
    }

    #[test]
    fn conjugate_product_is_one() {
        for m in 2..=12 {
            let f = CyclotomicField::new(m).unwrap();
            for k in 0..m {
                let p = f.mul(&f.root_of_unity(k), &f.root_of_unity(m - k));
                assert_eq!(p, f.one(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn additive_inverse() {
        let f = CyclotomicField::new(5).unwrap();
        let a = f.from_coeffs(vec![q(3), q(-2), q(7)]);
        assert!(f.add(&a, &f.neg(&a)).is_zero());
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let f = CyclotomicField::new(3).unwrap();
        let a = f.add(&f.one(), &f.root_of_unity(1));
        let inv = f.inv(&a).unwrap();
        // 1 + ζ = -ζ², so the inverse is -ζ.
        assert_eq!(inv.coeffs(), &[q(0), q(-1)]);
        assert_eq!(f.mul(&a, &inv), f.one());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mul_root_matches_mul() {
        let f = CyclotomicField::new(12).unwrap();
        let a = f.from_coeffs(vec![q(1), q(2), q(-3), q(4)]);
        for k in 0..12 {
            assert_eq!(f.mul_root(&a, k), f.mul(&a, &f.root_of_unity(k)));
        }
    }

    #[test]
    fn to_complex_values() {
        let f = CyclotomicField::new(4).unwrap();
        let (re, im) = f.to_complex(&f.root_of_unity(1));
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = f.to_complex(&f.root_of_unity(2));
        assert!((re + 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        assert_eq!(f.to_complex(&f.zero()), (0.0, 0.0));
    }

    #[test]
    fn pow_cycles() {
        let f = CyclotomicField::new(7).unwrap();
        let z = f.root_of_unity(1);
        assert_eq!(f.pow(&z, 7), f.one());
        assert_eq!(f.pow(&z, 10), f.root_of_unity(3));
    }
}
