//! Geometric point counts of zero-dimensional ideals.
//!
//! The quotient ring `k[x]/I` is a finite-dimensional vector space with a
//! basis of standard monomials. A generic linear form `l` takes distinct values
//! at distinct points, so the number of points over the algebraic closure is
//! the number of distinct roots of the minimal polynomial of multiplication
//! by `l`, i.e. the degree of its squarefree part.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{buchberger, quotient_basis, GroebnerBasis, Ideal};
use crate::budget::Limits;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::genericity::{Seed, SplitMix64};
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointCount {
    /// Distinct points over the algebraic closure.
    pub points: usize,
    /// Vector-space dimension of the quotient ring (points with multiplicity).
    pub quotient_dimension: usize,
}

pub fn count_points(ideal: &Ideal<PrimeField>, seed: Seed, limits: &Limits<'_>) -> Result<PointCount> {
    let gb = buchberger(ideal, MonomialOrder::Grevlex, limits)?;
    count_points_of_basis(&gb, seed)
}

pub fn count_points_of_basis(gb: &GroebnerBasis<PrimeField>, seed: Seed) -> Result<PointCount> {
    let basis = quotient_basis(gb)?;
    let dim = basis.len();
    if dim == 0 {
        return Ok(PointCount {
            points: 0,
            quotient_dimension: 0,
        });
    }
    let field = *gb.ring().field();
    if dim as u64 >= field.modulus() as u64 {
        return Err(Error::CharacteristicHazard {
            dimension: dim,
            prime: field.modulus(),
        });
    }
    let mults = multiplication_matrices(gb, &basis);
    let mut counts = Vec::with_capacity(2);
    for trial in 0..2u64 {
        let mut rng = seed.derive(0xC0DE + trial).rng();
        let coeffs: Vec<u32> = (0..mults.len()).map(|_| field.random_nonzero(&mut rng)).collect();
        let m = combine(&field, &mults, &coeffs, dim);
        let f1 = krylov_minpoly(&field, &m, dim, &random_vector(&field, dim, &mut rng));
        let f2 = krylov_minpoly(&field, &m, dim, &random_vector(&field, dim, &mut rng));
        let l = upoly::lcm(&field, &f1, &f2);
        counts.push(upoly::squarefree_degree(&field, &l));
    }
    if counts[0] != counts[1] {
        return Err(Error::Instability {
            observed: counts.iter().map(|c| format!("{c} points")).collect(),
        });
    }
    Ok(PointCount {
        points: counts[0],
        quotient_dimension: dim,
    })
}

/// Dense matrices (row-major, `dim x dim`) of multiplication by each variable;
/// column `k` holds the normal form of `x_v * basis[k]`.
fn multiplication_matrices(gb: &GroebnerBasis<PrimeField>, basis: &[Monomial]) -> Vec<Vec<u32>> {
    let dim = basis.len();
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let ring = gb.ring();
    let one = ring.field().one();
    (0..ring.nvars())
        .map(|v| {
            let mut mat = vec![0u32; dim * dim];
            for (k, b) in basis.iter().enumerate() {
                let prod = b.times_variable(v);
                if let Some(&row) = index.get(&prod) {
                    mat[row * dim + k] = 1;
                    continue;
                }
                let nf = gb.normal_form(&ring.monomial(one, prod));
                for (c, m) in nf.terms() {
                    let row = index[m];
                    mat[row * dim + k] = *c;
                }
            }
            mat
        })
        .collect()
}

fn combine(field: &PrimeField, mats: &[Vec<u32>], coeffs: &[u32], dim: usize) -> Vec<u32> {
    let mut out = vec![0u32; dim * dim];
    for (m, c) in mats.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(m) {
            if *x != 0 {
                *o = field.mul_add(*o, *x, *c);
            }
        }
    }
    out
}

fn random_vector(field: &PrimeField, dim: usize, rng: &mut SplitMix64) -> Vec<u32> {
    (0..dim).map(|_| field.random_nonzero(rng)).collect()
}

fn mat_vec(field: &PrimeField, m: &[u32], v: &[u32], dim: usize) -> Vec<u32> {
    let p = field.modulus() as u64;
    (0..dim)
        .map(|r| {
            let row = &m[r * dim..(r + 1) * dim];
            let mut acc = 0u64;
            for (a, b) in row.iter().zip(v) {
                acc = (acc + *a as u64 * *b as u64) % p;
            }
            acc as u32
        })
        .collect()
}

/// Minimal polynomial of `m` relative to `w`, coefficients low to high, monic.
fn krylov_minpoly(field: &PrimeField, m: &[u32], dim: usize, w: &[u32]) -> Vec<u32> {
    // rows: (reduced vector, pivot, combination of Krylov vectors)
    let mut rows: Vec<(Vec<u32>, usize, Vec<u32>)> = Vec::new();
    let mut k = w.to_vec();
    for j in 0..=dim {
        let mut r = k.clone();
        let mut comb = vec![0u32; j + 1];
        comb[j] = 1;
        for (row, pivot, rc) in &rows {
            if r[*pivot] == 0 {
                continue;
            }
            let factor = field.div(&r[*pivot], &row[*pivot]);
            for (x, y) in r.iter_mut().zip(row) {
                if *y != 0 {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                if *y != 0 {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => return comb,
            Some(pivot) => rows.push((r, pivot, comb)),
        }
        k = mat_vec(field, m, &k, dim);
    }
    unreachable!("Krylov sequence must become dependent within dim+1 steps")
}

/// Dense univariate polynomials over `F_p`, coefficients low to high.
pub(crate) mod upoly {
    use super::*;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u32]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn mul(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], *x, *y);
            }
        }
        trim(out)
    }

    /// Quotient and remainder.
    pub fn divrem(f: &PrimeField, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let db = degree(b).expect("division by zero polynomial");
        let mut r = trim(a.to_vec());
        let inv = f.inv(&b[db]);
        let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = f.mul(&r[dr], &inv);
            q[dr - db] = c;
            for (i, y) in b[..=db].iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = f.sub(&r[idx], &f.mul(&c, y));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn gcd(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = divrem(f, &x, &y);
            x = y;
            y = r;
        }
        if let Some(d) = degree(&x) {
            let inv = f.inv(&x[d]);
            for c in &mut x {
                *c = f.mul(c, &inv);
            }
        }
        x
    }

    pub fn derivative(f: &PrimeField, a: &[u32]) -> Vec<u32> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn lcm(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let g = gcd(f, a, b);
        let (q, _) = divrem(f, a, &g);
        mul(f, &q, b)
    }

    /// Number of distinct roots over the algebraic closure (degree below p).
    pub fn squarefree_degree(f: &PrimeField, a: &[u32]) -> usize {
        let Some(d) = degree(a) else { return 0 };
        let g = gcd(f, a, &derivative(f, a));
        d - degree(&g).unwrap_or(0)
    }
}
