//! Coefficient fields.
//!
//! Two fields are supported: exact rationals and prime fields `F_p` with
//! `2^30 < p < 2^31`. A polynomial never mixes fields; the field value lives
//! in the [`PolyRing`](crate::poly::PolyRing) that owns it.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::genericity::SplitMix64;

/// A commutative field with an explicit runtime value (e.g. the modulus).
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Map an exact rational into this field.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// Uniform nonzero element drawn from the stream (rejection on zero).
    fn random_nonzero(&self, rng: &mut SplitMix64) -> Self::Elem;
    /// Is the printed form of `a` negative (used for `-` signs when printing)?
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
    /// Field characteristic, `None` for characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
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
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn random_nonzero(&self, rng: &mut SplitMix64) -> BigRational {
        // small integers in [-1000, 1000] \ {0}
        loop {
            let v = (rng.next_u64() % 2001) as i64 - 1000;
            if v != 0 {
                return self.from_i64(v);
            }
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn characteristic(&self) -> Option<u64> {
        None
    }
}

/// Default moduli; both lie in `(2^30, 2^31)`.
pub const DEFAULT_PRIMES: [u32; 2] = [2_147_483_647, 2_147_483_629];

/// The prime field `Z/pZ`; residues are stored as `u32` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Accepts odd primes with `2^30 < p < 2^31`.
    pub fn new(p: u32) -> Result<Self> {
        if p <= 1 << 30 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidArgument(alloc::format!(
                "modulus {p} is not a prime in (2^30, 2^31)"
            )));
        }
        Ok(PrimeField { p })
    }

    /// Any prime modulus below 2^31; used by tests exercising small characteristics.
    pub fn new_unchecked(p: u32) -> Self {
        debug_assert!(p >= 2 && p < 1 << 31);
        PrimeField { p }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_u64(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn mul_add(&self, acc: u32, a: u32, b: u32) -> u32 {
        ((acc as u64 + a as u64 * b as u64) % self.p as u64) as u32
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut f = 3u32;
    while (f as u64) * (f as u64) <= p as u64 {
        if p % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i64) as u32
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_rational(&self, q: &BigRational) -> Result<u32> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u32().expect("residue fits");
        let den = q.denom().mod_floor(&p).to_u32().expect("residue fits");
        if den == 0 {
            return Err(Error::DenominatorVanishes { prime: self.p });
        }
        Ok(self.mul(&num, &self.inv(&den)))
    }
    fn random_nonzero(&self, rng: &mut SplitMix64) -> u32 {
        loop {
            let v = rng.next_below(self.p as u64) as u32;
            if v != 0 {
                return v;
            }
        }
    }
    fn characteristic(&self) -> Option<u64> {
        Some(self.p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_valid() {
        for p in DEFAULT_PRIMES {
            assert!(PrimeField::new(p).is_ok());
        }
        assert!(PrimeField::new(2_147_483_646).is_err());
        assert!(PrimeField::new(101).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        for a in [1u32, 2, 3, 12345, f.modulus() - 1] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn rational_reduction() {
        let f = PrimeField::new(DEFAULT_PRIMES[1]).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let h = f.from_rational(&half).unwrap();
        assert_eq!(f.mul(&h, &2), 1);
        let neg = BigRational::from_integer(BigInt::from(-3));
        assert_eq!(f.from_rational(&neg).unwrap(), f.modulus() - 3);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(DEFAULT_PRIMES[1]));
        assert!(matches!(
            f.from_rational(&bad),
            Err(Error::DenominatorVanishes { .. })
        ));
    }
}
