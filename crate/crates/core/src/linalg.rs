//! Affine subspaces given by linear equations, and determinants of small
//! polynomial matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// The affine form `coeffs . v + constant`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineForm<E> {
    pub coeffs: Vec<E>,
    pub constant: E,
}

impl<E: Clone> AffineForm<E> {
    pub fn new(coeffs: Vec<E>, constant: E) -> Self {
        AffineForm { coeffs, constant }
    }

    /// Read a polynomial of degree at most one.
    pub fn from_polynomial<F: Field<Elem = E>>(ring: &PolyRing<F>, p: &Polynomial<E>) -> Result<Self> {
        let f = ring.field();
        let mut coeffs = vec![f.zero(); ring.nvars()];
        let mut constant = f.zero();
        for (c, m) in p.terms() {
            match m.degree() {
                0 => constant = c.clone(),
                1 => {
                    let i = m.exponents().iter().position(|&e| e == 1).expect("degree one");
                    coeffs[i] = c.clone();
                }
                _ => {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "'{}' is not an affine-linear form",
                        ring.display(p)
                    )))
                }
            }
        }
        Ok(AffineForm { coeffs, constant })
    }
}

/// A parametrization `v = origin + sum_l s_l * direction_l` of the solution
/// set of affine equations. The parameters are the free (non-pivot)
/// coordinates themselves, listed in `free`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<E> {
    pub dim: usize,
    pub free: Vec<usize>,
    /// `rows[i]` = (constant, coefficients on the free parameters) for coordinate `i`.
    rows: Vec<(E, Vec<E>)>,
}

impl<E: Clone + PartialEq> AffineMap<E> {
    pub fn identity<F: Field<Elem = E>>(field: &F, dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut c = vec![field.zero(); dim];
                c[i] = field.one();
                (field.zero(), c)
            })
            .collect();
        AffineMap {
            dim,
            free: (0..dim).collect(),
            rows,
        }
    }

    pub fn nparams(&self) -> usize {
        self.free.len()
    }

    /// Direction vector of parameter `l` (a column of the linear part).
    pub fn direction(&self, l: usize) -> Vec<E> {
        self.rows.iter().map(|(_, c)| c[l].clone()).collect()
    }

    /// Coordinates as polynomials in `target`, parameters at `offset..`.
    pub fn images<F: Field<Elem = E>>(&self, target: &PolyRing<F>, offset: usize) -> Vec<Polynomial<E>> {
        self.rows
            .iter()
            .map(|(c0, cs)| target.affine_form(c0, cs, offset))
            .collect()
    }

    /// Solve `forms[k](v) = 0`. Each equation is solved for the largest-index
    /// variable with a nonzero coefficient after eliminating earlier pivots.
    pub fn solve<F: Field<Elem = E>>(field: &F, dim: usize, forms: &[AffineForm<E>]) -> Result<Self> {
        // reduced rows: (pivot, coefficients, constant), pivot coefficient 1
        let mut rows: Vec<(usize, Vec<E>, E)> = Vec::new();
        for (k, form) in forms.iter().enumerate() {
            assert_eq!(form.coeffs.len(), dim);
            let mut c = form.coeffs.clone();
            let mut c0 = form.constant.clone();
            for (pv, rc, r0) in &rows {
                if field.is_zero(&c[*pv]) {
                    continue;
                }
                let factor = c[*pv].clone();
                for (x, y) in c.iter_mut().zip(rc) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
                c0 = field.sub(&c0, &field.mul(&factor, r0));
            }
            let Some(pivot) = c.iter().rposition(|x| !field.is_zero(x)) else {
                return Err(Error::DegenerateSlice {
                    expected: (dim - forms.len()) as i64,
                    found: (dim - k) as i64,
                });
            };
            let inv = field.inv(&c[pivot]);
            for x in c.iter_mut() {
                *x = field.mul(x, &inv);
            }
            c0 = field.mul(&c0, &inv);
            for (_, rc, r0) in rows.iter_mut() {
                if field.is_zero(&rc[pivot]) {
                    continue;
                }
                let factor = rc[pivot].clone();
                for (x, y) in rc.iter_mut().zip(&c) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
                *r0 = field.sub(r0, &field.mul(&factor, &c0));
            }
            rows.push((pivot, c, c0));
        }
        let pivots: Vec<usize> = rows.iter().map(|r| r.0).collect();
        let free: Vec<usize> = (0..dim).filter(|i| !pivots.contains(i)).collect();
        let mut out: Vec<(E, Vec<E>)> = (0..dim)
            .map(|i| {
                let mut cs = vec![field.zero(); free.len()];
                if let Some(l) = free.iter().position(|&j| j == i) {
                    cs[l] = field.one();
                }
                (field.zero(), cs)
            })
            .collect();
        for (pv, c, c0) in rows {
            // v_pv = -c0 - sum_{free} c_j v_j
            let cs = free.iter().map(|&j| field.neg(&c[j])).collect();
            out[pv] = (field.neg(&c0), cs);
        }
        Ok(AffineMap { dim, free, rows: out })
    }
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn determinant<F: Field>(ring: &PolyRing<F>, m: &[Vec<Polynomial<F::Elem>>]) -> Polynomial<F::Elem> {
    let n = m.len();
    match n {
        0 => ring.one(),
        1 => m[0][0].clone(),
        2 => ring.sub(&ring.mul(&m[0][0], &m[1][1]), &ring.mul(&m[0][1], &m[1][0])),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial<F::Elem>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = ring.mul(&m[0][j], &determinant(ring, &minor));
                acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
            }
            acc
        }
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Nonzero `k x k` minors of a polynomial matrix (rows of equal length).
pub fn minors<F: Field>(ring: &PolyRing<F>, m: &[Vec<Polynomial<F::Elem>>], k: usize) -> Vec<Polynomial<F::Elem>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<Polynomial<F::Elem>>> =
                rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            let d = determinant(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, DEFAULT_PRIMES};
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(DEFAULT_PRIMES[0]).unwrap(), names.iter().copied(), MonomialOrder::Grevlex)
    }

    #[test]
    fn solve_picks_largest_index_pivot() {
        let r = ring(&["x1", "x2", "x3"]);
        let f = *r.field();
        let form = AffineForm::from_polynomial(&r, &parse_polynomial(&r, "x3 - 6").unwrap()).unwrap();
        let map = AffineMap::solve(&f, 3, &[form]).unwrap();
        assert_eq!(map.free, vec![0, 1]);
        let target = ring(&["x1", "x2"]);
        let imgs = map.images(&target, 0);
        assert_eq!(imgs[0], target.var(0));
        assert_eq!(imgs[1], target.var(1));
        assert_eq!(imgs[2], target.constant(6));
    }

    #[test]
    fn solved_points_satisfy_forms() {
        let r = ring(&["a", "b", "c", "d"]);
        let f = *r.field();
        let forms = [
            AffineForm::from_polynomial(&r, &parse_polynomial(&r, "a + 2*b - c + 3*d - 1").unwrap()).unwrap(),
            AffineForm::from_polynomial(&r, &parse_polynomial(&r, "5*a - b + 7*c + d + 4").unwrap()).unwrap(),
        ];
        let map = AffineMap::solve(&f, 4, &forms).unwrap();
        assert_eq!(map.nparams(), 2);
        let target = ring(&["s", "t"]);
        let imgs = map.images(&target, 0);
        for form in &forms {
            let mut acc = target.constant(form.constant);
            for (c, img) in form.coeffs.iter().zip(&imgs) {
                acc = target.add(&acc, &target.scale(img, c));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn dependent_forms_are_degenerate() {
        let r = ring(&["x", "y"]);
        let f = *r.field();
        let a = AffineForm::from_polynomial(&r, &parse_polynomial(&r, "x + y - 1").unwrap()).unwrap();
        let b = AffineForm::from_polynomial(&r, &parse_polynomial(&r, "2*x + 2*y - 2").unwrap()).unwrap();
        assert!(matches!(AffineMap::solve(&f, 2, &[a, b]), Err(Error::DegenerateSlice { .. })));
        let q = parse_polynomial(&r, "x^2").unwrap();
        assert!(AffineForm::from_polynomial(&r, &q).is_err());
    }

    #[test]
    fn determinant_of_generic_3x3() {
        let r = ring(&["a", "b", "c", "d", "e", "f", "g", "h", "i"]);
        let m: Vec<Vec<_>> = (0..3).map(|i| (0..3).map(|j| r.var(3 * i + j)).collect()).collect();
        let det = determinant(&r, &m);
        let expected = parse_polynomial(&r, "a*e*i - a*f*h - b*d*i + b*f*g + c*d*h - c*e*g").unwrap();
        assert_eq!(det, expected);
        assert_eq!(minors(&r, &m, 2).len(), 9);
        assert_eq!(subsets(5, 2).len(), 10);
    }
}
