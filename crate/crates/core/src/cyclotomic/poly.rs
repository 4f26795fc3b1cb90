//! Small dense polynomial helpers: integer cyclotomic polynomials and the
//! extended Euclidean algorithm over Q[x].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact quotient of `num` by the monic polynomial `den` (coefficients low
/// to high). Panics if the division is not exact.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = div_exact_monic(&p, &cyclotomic_polynomial(d));
    }
    p
}

pub type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shift(a: &mut QPoly, b: &[BigRational], c: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (j, bj) in b.iter().enumerate() {
        a[j + shift] -= c * bj;
    }
}

fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn divmod(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let lead = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        sub_scaled_shift(&mut rem, b, &c, k);
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// `s` with `s·a ≡ 1 (mod m)`, or `None` if `a` is not invertible mod `m`.
pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<QPoly> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (x, y) in s2.iter_mut().zip(&qs) {
            *x -= y;
        }
        trim(&mut s2);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

pub fn to_qpoly(coeffs: &[BigInt], den: &BigInt) -> QPoly {
    let mut p: QPoly = coeffs.iter().map(|c| BigRational::new(c.clone(), den.clone())).collect();
    trim(&mut p);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degrees_are_totients() {
        let phi = |n: usize| (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count();
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, phi(n), "n = {n}");
        }
    }

    #[test]
    fn inverse_of_x_plus_one_mod_x2_plus_1() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let inv = inverse_mod(&[q(1), q(1)], &[q(1), q(0), q(1)]).unwrap();
        // (1+x)(1−x)/2 = (1−x²)/2 ≡ 1.
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(inv, vec![half.clone(), -half]);
    }
}
