//! Exact integer arithmetic: gcd, modular inverses, Legendre/Jacobi symbols,
//! parity classifiers, and the Bezout-type identity tying a coprime pair to
//! its pair of modular inverses.
//!
//! Everything here is pure and operates on machine integers with `i128`
//! intermediates. Operands are desk-scale (p, q up to 10^6); intermediate
//! products stay below 2 p^2 q^2 and fit `i128` comfortably.

use crate::error::{Error, Result};

/// Greatest common divisor by Euclid's algorithm; `gcd(a, 0) = a`.
///
/// Panics if both arguments are zero.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    assert!(a != 0 || b != 0, "gcd(0, 0) is undefined");
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A modular inverse together with the modulus it was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ModInverse {
    pub value: u64,
    pub modulus: u64,
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    (old_r, old_s, old_t)
}

/// The unique value in `[1, m)` with `a * value = 1 (mod m)`, for `m >= 2`.
pub fn mod_inverse(a: i64, m: u64) -> Result<ModInverse> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("modulus must be >= 2, got {m}")));
    }
    let a_red = a.rem_euclid(m as i64) as u64;
    if a_red == 0 || gcd(a_red, m) != 1 {
        return Err(Error::NoInverse { a, m });
    }
    let (_, x, _) = extended_gcd(a_red as i128, m as i128);
    let value = x.rem_euclid(m as i128) as u64;
    Ok(ModInverse { value, modulus: m })
}

/// Inverse of 2 modulo an odd `b`, via the closed expression `(1 + b) / 2`.
pub fn half_inverse(b: u64) -> Result<ModInverse> {
    if b.is_multiple_of(2) {
        return Err(Error::EvenModulus(b));
    }
    Ok(ModInverse { value: b.div_ceil(2), modulus: b })
}

/// Inverse of `a` modulo `m` with the degenerate convention `[1/a]_1 = 1`.
///
/// The convention is what keeps the Bezout identity
/// `[1/q]_p q + [1/p]_q p = 1 + pq` true when either modulus is 1.
pub(crate) fn inverse_or_one(a: i64, m: u64) -> Result<u64> {
    if m == 1 {
        Ok(1)
    } else {
        Ok(mod_inverse(a, m)?.value)
    }
}

fn is_odd_prime(s: u64) -> bool {
    if s < 3 || s.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= s {
        if s.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u128, mut exp: u64, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/s)` for an odd prime `s`, by Euler's criterion.
///
/// Returns 0 when `s` divides `a`; the caller never needs that case for the
/// revival formulas, but parameter sweeps may hit it.
pub fn legendre_symbol(a: i64, s: u64) -> Result<i32> {
    if !is_odd_prime(s) {
        return Err(Error::NotOddPrime(s));
    }
    let a_red = a.rem_euclid(s as i64) as u64;
    if a_red == 0 {
        return Ok(0);
    }
    let e = mod_pow(a_red as u128, (s - 1) / 2, s as u128);
    Ok(if e == 1 { 1 } else { -1 })
}

/// Jacobi symbol `(a/b)` for positive odd `b`, by the reciprocity iteration.
///
/// `jacobi_symbol(a, 1) = 1` (empty product). No factorization is performed;
/// the factorization route exists only as a test oracle.
pub fn jacobi_symbol(a: i64, b: u64) -> Result<i32> {
    if b == 0 || b.is_multiple_of(2) {
        return Err(Error::EvenModulus(b));
    }
    let mut a = a.rem_euclid(b as i64) as u64;
    let mut b = b;
    let mut sign = 1i32;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(b % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        a %= b;
    }
    Ok(if b == 1 { sign } else { 0 })
}

/// `((2/b), (-1/b))` for odd `b`, by the closed exponent formulas
/// `(-1)^((b^2-1)/8)` and `(-1)^((b-1)/2)`.
pub fn special_symbols(b: u64) -> Result<(i32, i32)> {
    if b.is_multiple_of(2) {
        return Err(Error::EvenModulus(b));
    }
    let b = b as u128;
    let two = if ((b * b - 1) / 8).is_multiple_of(2) { 1 } else { -1 };
    let minus_one = if ((b - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    Ok((two, minus_one))
}

/// The inverse pair `([1/q]_p, [1/p]_q)` for coprime `p, q >= 1`.
///
/// Satisfies `[1/q]_p q + [1/p]_q p = 1 + pq` exactly, including the
/// degenerate modulus-1 cases.
pub fn bezout_pair(p: u64, q: u64) -> Result<(ModInverse, ModInverse)> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParams("bezout_pair requires p, q >= 1".into()));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let x = inverse_or_one(q as i64, p)?;
    let y = inverse_or_one(p as i64, q)?;
    debug_assert_eq!(
        x as u128 * q as u128 + y as u128 * p as u128,
        1 + p as u128 * q as u128
    );
    Ok((ModInverse { value: x, modulus: p }, ModInverse { value: y, modulus: q }))
}

/// A reduced rational propagation distance `zeta = p / q` in units of the
/// revival length, with its parity flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FractionalDistance {
    p: u64,
    q: u64,
}

impl FractionalDistance {
    /// Builds `p/q` reduced to lowest terms. Zero numerator or denominator is
    /// rejected: the grating plane itself is not a valid revival distance.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidDistance { p, q });
        }
        let g = gcd(p, q);
        Ok(Self { p: p / g, q: q / g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Half-period shift flag: 1 when `p*q` is odd, 0 when even.
    pub fn parity_shift(&self) -> u64 {
        self.p & self.q & 1
    }

    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl std::fmt::Display for FractionalDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl std::str::FromStr for FractionalDistance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("cannot parse '{s}' as p/q"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse::<u64>().map_err(|_| bad())?;
                let q = q.trim().parse::<u64>().map_err(|_| bad())?;
                FractionalDistance::new(p, q)
            }
            None => {
                let p = s.trim().parse::<u64>().map_err(|_| bad())?;
                FractionalDistance::new(p, 1)
            }
        }
    }
}
