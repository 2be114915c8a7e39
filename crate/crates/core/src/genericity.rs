//! Seeded randomness and the cross-seed / cross-prime agreement protocol.
//!
//! Every "generic" choice in the crate (hyperplanes, covectors, linear forms
//! separating points) is drawn from a [`SplitMix64`] stream. The generator is
//! fixed so ports in other languages reproduce the same streams:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! A value below `bound` is drawn by rejecting outputs `>= 2^64 - (2^64 mod bound)`
//! and reducing the survivor modulo `bound`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, DEFAULT_PRIMES};
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix(self.state)
    }

    /// Uniform in `[0, bound)`.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A 64-bit seed. Identical seed, prime and input give identical output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    /// Independent sub-seed for a labelled purpose.
    pub fn derive(self, label: u64) -> Seed {
        Seed(mix(self.0 ^ mix(label.wrapping_add(0x9E37_79B9_7F4A_7C15))))
    }

    pub fn rng(self) -> SplitMix64 {
        SplitMix64::new(self.0)
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `c_1 x_1 + ... + c_n x_n + c_0` with every coefficient nonzero.
pub fn random_affine_form<F: Field>(ring: &PolyRing<F>, rng: &mut SplitMix64) -> Polynomial<F::Elem> {
    assert!(ring.nvars() > 0, "random_affine_form needs variables");
    let coeffs: Vec<F::Elem> = (0..ring.nvars()).map(|_| ring.field().random_nonzero(rng)).collect();
    let c0 = ring.field().random_nonzero(rng);
    ring.affine_form(&c0, &coeffs, 0)
}

/// `n` nonzero field elements.
pub fn random_covector<F: Field>(field: &F, n: usize, rng: &mut SplitMix64) -> Vec<F::Elem> {
    assert!(n >= 1);
    (0..n).map(|_| field.random_nonzero(rng)).collect()
}

/// How many (seed, prime) trials must agree before a value is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementPolicy {
    pub seeds_per_trial: usize,
    pub primes: Vec<u32>,
    pub max_retries: usize,
}

impl Default for AgreementPolicy {
    fn default() -> Self {
        AgreementPolicy {
            seeds_per_trial: 2,
            primes: DEFAULT_PRIMES.to_vec(),
            max_retries: 3,
        }
    }
}

/// A value every trial agreed on, plus what was used to get it.
#[derive(Clone, Debug, PartialEq)]
pub struct Agreed<T> {
    pub value: T,
    pub seeds: Vec<Seed>,
    pub primes: Vec<u32>,
    pub attempts: usize,
}

impl AgreementPolicy {
    /// The seeds used on attempt `attempt` (0 is the first) from `base`.
    pub fn trial_seeds(&self, base: Seed, attempt: usize) -> Vec<Seed> {
        (0..self.seeds_per_trial)
            .map(|k| {
                if attempt == 0 && k == 0 {
                    base
                } else {
                    base.derive(((attempt as u64) << 32) | k as u64)
                }
            })
            .collect()
    }

    /// Run `compute` on every (seed, prime) pair and report the common value.
    ///
    /// Disagreement, or a retryable error, triggers a fresh batch of seeds up
    /// to `max_retries` times. Any other error is returned at once.
    pub fn agreed<T, C>(&self, base: Seed, mut compute: C) -> Result<Agreed<T>>
    where
        T: PartialEq + Clone + fmt::Debug,
        C: FnMut(Seed, &PrimeField) -> Result<T>,
    {
        if self.primes.is_empty() || self.seeds_per_trial == 0 {
            return Err(Error::InvalidArgument("agreement policy has no trials".into()));
        }
        let fields = self
            .primes
            .iter()
            .map(|&p| PrimeField::new(p))
            .collect::<Result<Vec<_>>>()?;
        let mut observed: Vec<String> = Vec::new();
        for attempt in 0..=self.max_retries {
            let seeds = self.trial_seeds(base, attempt);
            let mut first: Option<T> = None;
            let mut consistent = true;
            'trials: for field in &fields {
                for &seed in &seeds {
                    match compute(seed, field) {
                        Ok(v) => {
                            observed.push(format!("{v:?}@(seed {seed}, p {})", field.modulus()));
                            match &first {
                                None => first = Some(v),
                                Some(f) if *f == v => {}
                                Some(_) => {
                                    consistent = false;
                                    break 'trials;
                                }
                            }
                        }
                        Err(e) if e.is_retryable() => {
                            observed.push(format!("{e}@(seed {seed}, p {})", field.modulus()));
                            consistent = false;
                            break 'trials;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            if consistent {
                if let Some(value) = first {
                    return Ok(Agreed {
                        value,
                        seeds,
                        primes: self.primes.clone(),
                        attempts: attempt + 1,
                    });
                }
            }
        }
        Err(Error::Instability { observed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    #[test]
    fn splitmix_reference_values() {
        // reference outputs of splitmix64 seeded with 0
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn affine_form_is_dense_and_deterministic() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let ring = PolyRing::new(f, ["x", "y", "z"], MonomialOrder::Grevlex);
        let a = random_affine_form(&ring, &mut Seed(7).rng());
        let b = random_affine_form(&ring, &mut Seed(7).rng());
        let c = random_affine_form(&ring, &mut Seed(8).rng());
        assert_eq!(a.len(), 4);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn covector_nonzero() {
        let f = PrimeField::new(DEFAULT_PRIMES[1]).unwrap();
        let u = random_covector(&f, 3, &mut Seed(1).rng());
        assert_eq!(u.len(), 3);
        assert!(u.iter().all(|&c| c != 0));
        assert_eq!(u, random_covector(&f, 3, &mut Seed(1).rng()));
    }

    #[test]
    fn constant_computation_agrees() {
        let policy = AgreementPolicy::default();
        let out = policy.agreed(Seed(3), |_, _| Ok(7u64)).unwrap();
        assert_eq!(out.value, 7);
        assert_eq!(out.attempts, 1);
        assert_eq!(out.seeds.len(), 2);
    }

    #[test]
    fn seed_dependent_computation_is_unstable() {
        let policy = AgreementPolicy::default();
        let mut calls = 0;
        let err = policy
            .agreed(Seed(3), |s, _| {
                calls += 1;
                Ok(s.0 % 1000)
            })
            .unwrap_err();
        assert!(matches!(err, Error::Instability { .. }));
        // two calls per attempt before the disagreement is seen
        assert_eq!(calls, 2 * (policy.max_retries + 1));
    }

    #[test]
    fn prime_dependent_computation_is_unstable() {
        let policy = AgreementPolicy::default();
        let err = policy.agreed(Seed(3), |_, f| Ok(f.modulus())).unwrap_err();
        assert!(matches!(err, Error::Instability { .. }));
    }

    #[test]
    fn retry_recovers_from_one_bad_seed() {
        let policy = AgreementPolicy::default();
        let bad = policy.trial_seeds(Seed(11), 0)[1];
        let out = policy
            .agreed(Seed(11), |s, _| Ok(if s == bad { 1 } else { 2 }))
            .unwrap();
        assert_eq!(out.value, 2);
        assert_eq!(out.attempts, 2);
    }
}
