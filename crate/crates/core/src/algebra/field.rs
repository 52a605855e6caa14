//! Exact coefficient fields: the prime fields F_p (p < 2^31) and the
//! rationals Q with arbitrary-precision arithmetic.

use crate::error::{AlgebraError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which coefficient field a ring is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    /// F_p for a verified prime p.
    Prime(u64),
    /// The field of rational numbers.
    Rationals,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "F_{p}"),
            FieldKind::Rationals => write!(f, "QQ"),
        }
    }
}

impl FieldKind {
    /// Builds a prime-field descriptor, verifying primality (deterministic
    /// Miller-Rabin, exact for the supported range).
    pub fn prime(p: u64) -> Result<FieldKind> {
        if p >= (1u64 << 31) {
            return Err(AlgebraError::CharacteristicTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(FieldKind::Prime(p))
    }

    /// The default prime field used by the verification suite.
    pub fn default_prime() -> FieldKind {
        FieldKind::Prime(32003)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Prime(p) => *p,
            FieldKind::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldKind::Prime(_) => Coeff::Fp(0),
            FieldKind::Rationals => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldKind::Prime(_) => Coeff::Fp(1),
            FieldKind::Rationals => Coeff::Rat(BigRational::one()),
        }
    }

    /// Embeds an integer (as i128 to cover literal parses) into the field.
    pub fn from_i128(&self, n: i128) -> Coeff {
        match self {
            FieldKind::Prime(p) => {
                let p = *p as i128;
                let mut r = n % p;
                if r < 0 {
                    r += p;
                }
                Coeff::Fp(r as u64)
            }
            FieldKind::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            FieldKind::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let digits = r.to_u64_digits().1;
                Coeff::Fp(digits.first().copied().unwrap_or(0))
            }
            FieldKind::Rationals => Coeff::Rat(BigRational::from(n.clone())),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldKind::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let s = x + y;
                Coeff::Fp(if s >= *p { s - p } else { s })
            }
            (FieldKind::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => unreachable!("coefficient/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldKind::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(if x >= y { x - y } else { x + p - y })
            }
            (FieldKind::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x - y),
            _ => unreachable!("coefficient/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldKind::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldKind::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => unreachable!("coefficient/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldKind::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x * y) % p),
            (FieldKind::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => unreachable!("coefficient/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match (self, a) {
            (FieldKind::Prime(p), Coeff::Fp(x)) => Coeff::Fp(mod_inverse(*x, *p)),
            (FieldKind::Rationals, Coeff::Rat(x)) => Coeff::Rat(x.recip()),
            _ => unreachable!("coefficient/field mismatch"),
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }
}

/// A coefficient value. The variant must agree with the ring's `FieldKind`;
/// all arithmetic goes through `FieldKind` methods which enforce this.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    /// Canonical residue in 0..p-1.
    Fp(u64),
    /// Exact rational in lowest terms (maintained by `num`).
    Rat(BigRational),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Fp(x) => *x == 1,
            Coeff::Rat(x) => x.is_one(),
        }
    }

    /// Renders the coefficient in the polynomial grammar (integers for F_p,
    /// `a/b` never appears because printing multiplies through; rationals
    /// print as `n` or `n/d`).
    pub fn render(&self) -> String {
        match self {
            Coeff::Fp(x) => x.to_string(),
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Extended-Euclid modular inverse; `a` must be nonzero mod prime `p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit");
    let mut inv = old_s % p as i128;
    if inv < 0 {
        inv += p as i128;
    }
    inv as u64
}

/// Deterministic Miller-Rabin. The base set {2, 3, 5, 7, 11, 13, 17, 19, 23,
/// 29, 31, 37} is exact for all n < 3.3 * 10^24, far beyond our 2^31 bound.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
