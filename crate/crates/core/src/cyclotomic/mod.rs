//! Exact arithmetic in Q(ζ₂ᵣ).
//!
//! Elements are polynomials in a primitive 2r-th root `x` reduced modulo the
//! cyclotomic polynomial Φ₂ᵣ, stored as integer numerators over one common
//! positive denominator. The parameter ζ = e^{iπq/r} is realised as `x^q`.

mod poly;

pub use poly::cyclotomic_polynomial;

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElement {
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycElement {
    fn normalised(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if num.iter().all(Zero::is_zero) {
            return CycElement { num, den: BigInt::one() };
        }
        if !g.is_one() {
            for c in &mut num {
                *c /= &g;
            }
            den /= &g;
        }
        CycElement { num, den }
    }

    pub fn zero(degree: usize) -> Self {
        CycElement { num: vec![BigInt::zero(); degree], den: BigInt::one() }
    }

    pub fn one(degree: usize) -> Self {
        Self::from_rational(degree, &BigRational::one())
    }

    pub fn from_rational(degree: usize, value: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); degree];
        num[0] = value.numer().clone();
        Self::normalised(num, value.denom().clone())
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        CycElement { num: coeffs.iter().map(|&c| BigInt::from(c)).collect(), den: BigInt::one() }
    }

    pub fn degree(&self) -> usize {
        self.num.len()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The coefficient of xᵏ.
    pub fn coefficient(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        (0..self.degree()).map(|k| self.coefficient(k)).collect()
    }

    /// The value as a rational number when only the constant term is nonzero.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..].iter().all(Zero::is_zero).then(|| self.coefficient(0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::normalised(num, &self.den * c.denom())
    }

    /// Coefficients as reduced `"n/d"` strings, lowest power first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }

    pub fn from_strings(parts: &[impl AsRef<str>]) -> Option<Self> {
        let coeffs: Option<Vec<BigRational>> = parts
            .iter()
            .map(|s| {
                let s = s.as_ref();
                let (n, d) = s.split_once('/').unwrap_or((s, "1"));
                let d: BigInt = d.parse().ok()?;
                (!d.is_zero()).then_some(())?;
                Some(BigRational::new(n.parse().ok()?, d))
            })
            .collect();
        let coeffs = coeffs?;
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Some(Self::normalised(num, den))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.degree(), other.degree(), "elements of different fields");
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            return Self::normalised(num, self.den.clone());
        }
        let den = self.den.lcm(&other.den);
        let (fa, fb) = (&den / &self.den, &den / &other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| if negate { a * &fa - b * &fb } else { a * &fa + b * &fb })
            .collect();
        Self::normalised(num, den)
    }
}

impl fmt::Debug for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElement{:?}", self.to_strings())
    }
}

impl fmt::Display for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coefficients().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{k}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Serialize for CycElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts = self.to_strings();
        let mut seq = serializer.serialize_seq(Some(parts.len()))?;
        for p in &parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl Add for &CycElement {
    type Output = CycElement;
    fn add(self, rhs: &CycElement) -> CycElement {
        self.combine(rhs, false)
    }
}

impl Sub for &CycElement {
    type Output = CycElement;
    fn sub(self, rhs: &CycElement) -> CycElement {
        self.combine(rhs, true)
    }
}

impl AddAssign<&CycElement> for CycElement {
    fn add_assign(&mut self, rhs: &CycElement) {
        *self = &*self + rhs;
    }
}

impl Neg for &CycElement {
    type Output = CycElement;
    fn neg(self) -> CycElement {
        CycElement { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycElement {
    type Output = CycElement;
    fn neg(self) -> CycElement {
        -&self
    }
}

/// Complex approximation of a field element.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Approx {
    pub re: f64,
    pub im: f64,
}

impl Approx {
    /// Decimal rendering with `digits` digits after the point; the imaginary
    /// part is dropped when it rounds to zero.
    pub fn format(&self, digits: usize) -> String {
        let digits = digits.clamp(1, 15);
        let clean = |x: f64| if x.abs() < 0.5 * 10f64.powi(-(digits as i32)) { 0.0 } else { x };
        let (re, im) = (clean(self.re), clean(self.im));
        if im == 0.0 {
            format!("{re:.digits$}")
        } else {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!("{re:.digits$} {sign} {:.digits$}i", im.abs())
        }
    }
}

/// Parameters (r, q) together with the precomputed data of Q(ζ₂ᵣ).
#[derive(Clone, Debug)]
pub struct FieldContext {
    r: u32,
    q: u32,
    phi: Vec<i64>,
    /// xᵐ mod Φ for m in 0..2r.
    powers: Vec<Vec<i64>>,
    factorials: Vec<CycElement>,
    inv_factorials: Vec<CycElement>,
}

impl FieldContext {
    pub fn new(r: u32, q: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidField { r, q, reason: "r must be at least 3" });
        }
        if q == 0 || q >= 2 * r {
            return Err(Error::InvalidField { r, q, reason: "q must satisfy 0 < q < 2r" });
        }
        if r.gcd(&q) != 1 {
            return Err(Error::InvalidField { r, q, reason: "gcd(r, q) must be 1" });
        }
        let n = 2 * r as usize;
        let phi = cyclotomic_polynomial(n);
        let d = phi.len() - 1;

        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; d];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // Multiply by x and reduce the overflow term.
            let top = cur[d - 1];
            for k in (1..d).rev() {
                cur[k] = cur[k - 1] - top * phi[k];
            }
            cur[0] = -top * phi[0];
        }

        let mut ctx = FieldContext { r, q, phi, powers, factorials: Vec::new(), inv_factorials: Vec::new() };
        let mut fact = ctx.one();
        for i in 0..r {
            fact = ctx.mul(&fact, &ctx.quantum_integer(i));
            ctx.factorials.push(fact.clone());
        }
        ctx.inv_factorials = ctx
            .factorials
            .iter()
            .map(|f| ctx.inv(f).expect("[i]! is nonzero below r"))
            .collect();
        Ok(ctx)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of Φ₂ᵣ, lowest degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&self) -> CycElement {
        CycElement::zero(self.degree())
    }

    pub fn one(&self) -> CycElement {
        CycElement::one(self.degree())
    }

    pub fn rational(&self, value: &BigRational) -> CycElement {
        CycElement::from_rational(self.degree(), value)
    }

    pub fn integer(&self, value: i64) -> CycElement {
        self.rational(&BigRational::from_integer(value.into()))
    }

    /// xᵐ for any integer m.
    pub fn x_power(&self, m: i64) -> CycElement {
        let n = 2 * self.r as i64;
        CycElement::from_integers(&self.powers[m.rem_euclid(n) as usize])
    }

    /// ζᵐ = x^{qm}.
    pub fn zeta_power(&self, m: i64) -> CycElement {
        self.x_power(self.q as i64 * m)
    }

    pub fn zeta(&self) -> CycElement {
        self.zeta_power(1)
    }

    /// Integer coefficient vector of ζᵐ.
    fn zeta_power_coeffs(&self, m: i64) -> &[i64] {
        let n = 2 * self.r as i64;
        &self.powers[(self.q as i64 * m).rem_euclid(n) as usize]
    }

    pub fn mul(&self, a: &CycElement, b: &CycElement) -> CycElement {
        let d = self.degree();
        debug_assert!(a.degree() == d && b.degree() == d);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, &p) in self.phi[..d].iter().enumerate() {
                if p != 0 {
                    prod[k - d + j] -= &c * p;
                }
            }
        }
        prod.truncate(d);
        CycElement::normalised(prod, &a.den * &b.den)
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a CycElement>) -> CycElement {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, a: &CycElement, mut e: u32) -> CycElement {
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

    pub fn inv(&self, a: &CycElement) -> Result<CycElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m: Vec<BigRational> = self.phi.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        let s = poly::inverse_mod(&poly::to_qpoly(&a.num, &a.den), &m).ok_or(Error::DivisionByZero)?;
        let mut coeffs = s;
        coeffs.resize(self.degree(), BigRational::zero());
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(CycElement::normalised(num, den))
    }

    pub fn div(&self, a: &CycElement, b: &CycElement) -> Result<CycElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Complex conjugation, induced by x ↦ x^{2r−1}.
    pub fn conj(&self, a: &CycElement) -> CycElement {
        let d = self.degree();
        let mut num = vec![BigInt::zero(); d];
        for (k, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in num.iter_mut().zip(&self.powers[(2 * self.r as usize - k) % (2 * self.r as usize)]) {
                if p != 0 {
                    *slot += c * p;
                }
            }
        }
        CycElement::normalised(num, a.den.clone())
    }

    /// [i] = (ζⁱ − ζ⁻ⁱ)/(ζ − ζ⁻¹) = ζ^{i−1} + ζ^{i−3} + … + ζ^{1−i}, with [0] = 1.
    pub fn quantum_integer(&self, i: u32) -> CycElement {
        if i == 0 {
            return self.one();
        }
        let mut acc = vec![0i64; self.degree()];
        for k in 0..i as i64 {
            for (a, &c) in acc.iter_mut().zip(self.zeta_power_coeffs(i as i64 - 1 - 2 * k)) {
                *a += c;
            }
        }
        CycElement::from_integers(&acc)
    }

    /// [i]! = [i][i−1]…[0]; zero for i ≥ r.
    pub fn bracket_factorial(&self, i: u32) -> CycElement {
        match self.factorials.get(i as usize) {
            Some(f) => f.clone(),
            None => self.zero(),
        }
    }

    pub(crate) fn factorial_ref(&self, i: u32) -> Option<&CycElement> {
        self.factorials.get(i as usize)
    }

    /// 1/[i]! for i < r.
    pub(crate) fn inv_factorial_ref(&self, i: u32) -> Option<&CycElement> {
        self.inv_factorials.get(i as usize)
    }

    /// |ζ − ζ⁻¹|²/(2r) = (2 − ζ² − ζ⁻²)/(2r).
    pub fn vertex_weight(&self) -> CycElement {
        let numer = &(&self.integer(2) - &self.zeta_power(2)) - &self.zeta_power(-2);
        numer.scale(&BigRational::new(1.into(), (2 * self.r as i64).into()))
    }

    /// Evaluates at x = e^{iπ/r}.
    pub fn numeric_eval(&self, a: &CycElement) -> Approx {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = BigRational::new(c.clone(), a.den.clone()).to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::PI * k as f64 / self.r as f64;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        Approx { re, im }
    }
}
