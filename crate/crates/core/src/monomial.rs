//! Exponent vectors and monomial orders.

use core::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponent = u16;

/// An exponent vector with its cached total degree.
///
/// The derived `Ord` is structural (degree, then exponents) and only serves
/// as a map key; ring orders go through [`MonomialOrder::compare`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[Exponent; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exponent; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiply by a single variable.
    pub fn times_variable(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[index] = m.exps[index].checked_add(1).expect("exponent overflow");
        m.degree += 1;
        m
    }

    /// Derivative bookkeeping: returns `(e, m / x_i)` with `e` the exponent of `x_i`.
    pub fn lower_variable(&self, index: usize) -> Option<(Exponent, Monomial)> {
        let e = self.exps[index];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[index] -= 1;
        m.degree -= 1;
        Some((e, m))
    }

    /// Exponents with `extra` leading slots (value `lead`) inserted before the others.
    pub fn with_prefix(&self, lead: &[Exponent]) -> Monomial {
        let mut exps: SmallVec<[Exponent; 16]> = SmallVec::from_slice(lead);
        exps.extend_from_slice(&self.exps);
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    /// Drop the first `k` variables (which must have zero exponent).
    pub fn without_prefix(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        Monomial::from_exponents(&self.exps[k..])
    }

    pub fn support_within(&self, vars: &[bool]) -> bool {
        self.exps.iter().zip(vars).all(|(e, keep)| *e == 0 || *keep)
    }
}

/// Term orders on monomials of a fixed variable count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    Grevlex,
    /// Pure lexicographic, `x_0 > x_1 > ...`.
    Lex,
    /// Elimination order for the first `k` variables: the two blocks are
    /// compared lexicographically, each block by grevlex.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.degree, b.degree, &a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(a.exps.len());
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                grevlex(da, db, &a.exps[..k], &b.exps[..k]).then_with(|| {
                    grevlex(a.degree - da, b.degree - db, &a.exps[k..], &b.exps[k..])
                })
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

fn grevlex(da: u32, db: u32, a: &[Exponent], b: &[Exponent]) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
