//! Sparse multivariate polynomials.
//!
//! A [`Polynomial`] is a bare list of terms; every operation goes through the
//! [`PolyRing`] that owns the variable names, the monomial order and the
//! coefficient field. Terms are kept strictly decreasing in the ring order
//! with no zero coefficients.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::Field;
use crate::monomial::{Exponent, Monomial, MonomialOrder};

pub type Term<E> = (E, Monomial);

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<E> {
    terms: Vec<Term<E>>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    /// Does the polynomial involve variable `i`?
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.1.exponent(i) > 0)
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term<E>>) -> Self {
        Polynomial { terms }
    }
}

/// Variable context, monomial order and coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F> {
    field: F,
    names: Arc<[String]>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new<I, S>(field: F, names: I, order: MonomialOrder) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        PolyRing {
            field,
            names: names.into(),
            order,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing {
            field: self.field.clone(),
            names: self.names.clone(),
            order,
        }
    }

    /// Same variables and order over another field.
    pub fn with_field<G: Field>(&self, field: G) -> PolyRing<G> {
        PolyRing {
            field,
            names: self.names.clone(),
            order: self.order,
        }
    }

    /// Ring with `name` inserted as variable 0.
    pub fn with_prepended(&self, name: &str, order: MonomialOrder) -> Self {
        let mut names: Vec<String> = Vec::with_capacity(self.nvars() + 1);
        names.push(name.into());
        names.extend(self.names.iter().cloned());
        PolyRing::new(self.field.clone(), names, order)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    // ---- construction -------------------------------------------------

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.monomial(c, Monomial::one(self.nvars()))
    }

    pub fn monomial(&self, c: F::Elem, m: Monomial) -> Polynomial<F::Elem> {
        debug_assert_eq!(m.nvars(), self.nvars());
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: alloc::vec![(c, m)] }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.monomial(self.field.one(), Monomial::variable(self.nvars(), i))
    }

    /// `c_0 + sum_j c_{j+1} x_{offset+j}` for the given coefficient list.
    pub fn affine_form(&self, constant: &F::Elem, coeffs: &[F::Elem], offset: usize) -> Polynomial<F::Elem> {
        let n = self.nvars();
        let mut terms: Vec<Term<F::Elem>> = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (c.clone(), Monomial::variable(n, offset + j)))
            .collect();
        terms.push((constant.clone(), Monomial::one(n)));
        self.from_terms(terms)
    }

    /// Normalize an arbitrary term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(&self, mut terms: Vec<Term<F::Elem>>) -> Polynomial<F::Elem> {
        terms.sort_by(|a, b| self.order.compare(&b.1, &a.1));
        let mut out: Vec<Term<F::Elem>> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => {
                    last.0 = self.field.add(&last.0, &c);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.0) {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if let Some(last) = out.last() {
            if self.field.is_zero(&last.0) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Checks the normal-form invariants: strictly decreasing, no zeros.
    pub fn is_normalized(&self, p: &Polynomial<F::Elem>) -> bool {
        p.terms.iter().all(|t| !self.field.is_zero(&t.0) && t.1.nvars() == self.nvars())
            && p
                .terms
                .windows(2)
                .all(|w| self.order.compare(&w[0].1, &w[1].1) == Ordering::Greater)
    }

    // ---- arithmetic ---------------------------------------------------

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: self.merge(&a.terms, &b.terms, |_, x| x.clone(), |_, y| y.clone(), |f, x, y| f.add(x, y)),
        }
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: self.merge(&a.terms, &b.terms, |_, x| x.clone(), |f, y| f.neg(y), |f, x, y| f.sub(x, y)),
        }
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: a.terms.iter().map(|(c, m)| (self.field.neg(c), m.clone())).collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(x, m)| (self.field.mul(x, c), m.clone())).collect(),
        }
    }

    /// `c * m * a`; order is preserved by multiplicativity.
    pub fn mul_term(&self, a: &Polynomial<F::Elem>, c: &F::Elem, m: &Monomial) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(x, n)| (self.field.mul(x, c), n.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc: Vec<Term<F::Elem>> = Vec::with_capacity(small.len() * large.len());
        for (c, m) in &small.terms {
            for (d, n) in &large.terms {
                acc.push((self.field.mul(c, d), m.mul(n)));
            }
        }
        self.from_terms(acc)
    }

    pub fn pow(&self, a: &Polynomial<F::Elem>, e: u32) -> Polynomial<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Scale so the leading coefficient is 1.
    pub fn make_monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_coefficient() {
            None => Polynomial::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => self.scale(a, &self.field.inv(c)),
        }
    }

    /// `a - c * m * b` in one merge pass.
    pub(crate) fn sub_mul_term(
        &self,
        a: &[Term<F::Elem>],
        c: &F::Elem,
        m: &Monomial,
        b: &[Term<F::Elem>],
    ) -> Vec<Term<F::Elem>> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<Term<F::Elem>> = b.first().map(|(x, n)| (f.mul(x, c), n.mul(m)));
        while i < a.len() || shifted.is_some() {
            let ord = match (a.get(i), &shifted) {
                (Some(x), Some(y)) => self.order.compare(&x.1, &y.1),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (y, n) = shifted.take().unwrap();
                    out.push((f.neg(&y), n));
                    j += 1;
                    shifted = b.get(j).map(|(x, n)| (f.mul(x, c), n.mul(m)));
                }
                Ordering::Equal => {
                    let (y, n) = shifted.take().unwrap();
                    let v = f.sub(&a[i].0, &y);
                    if !f.is_zero(&v) {
                        out.push((v, n));
                    }
                    i += 1;
                    j += 1;
                    shifted = b.get(j).map(|(x, n)| (f.mul(x, c), n.mul(m)));
                }
            }
        }
        out
    }

    fn merge(
        &self,
        a: &[Term<F::Elem>],
        b: &[Term<F::Elem>],
        left: impl Fn(&F, &F::Elem) -> F::Elem,
        right: impl Fn(&F, &F::Elem) -> F::Elem,
        both: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem,
    ) -> Vec<Term<F::Elem>> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.order.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push((left(f, &a[i].0), a[i].1.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((right(f, &b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = both(f, &a[i].0, &b[j].0);
                    if !f.is_zero(&v) {
                        out.push((v, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().map(|(c, m)| (left(f, c), m.clone())));
        out.extend(b[j..].iter().map(|(c, m)| (right(f, c), m.clone())));
        out
    }

    // ---- calculus and evaluation ---------------------------------------

    /// Formal partial derivative with respect to variable `i`.
    pub fn differentiate(&self, p: &Polynomial<F::Elem>, i: usize) -> Polynomial<F::Elem> {
        assert!(i < self.nvars(), "variable index out of range");
        let terms = p
            .terms
            .iter()
            .filter_map(|(c, m)| {
                m.lower_variable(i)
                    .map(|(e, q)| (self.field.mul(c, &self.field.from_i64(e as i64)), q))
            })
            .collect();
        // lowering one variable can break the order only for block orders with
        // ties across blocks, so renormalize
        self.from_terms(terms)
    }

    pub fn gradient(&self, p: &Polynomial<F::Elem>) -> Vec<Polynomial<F::Elem>> {
        (0..self.nvars()).map(|i| self.differentiate(p, i)).collect()
    }

    pub fn evaluate(&self, p: &Polynomial<F::Elem>, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars(), "point has wrong length");
        let f = &self.field;
        let mut acc = f.zero();
        for (c, m) in &p.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Homogenize `p` into `target`, whose variable 0 is the new variable and
    /// whose variables `1..` are this ring's variables.
    pub fn homogenize(&self, p: &Polynomial<F::Elem>, target: &PolyRing<F>) -> Polynomial<F::Elem> {
        assert_eq!(target.nvars(), self.nvars() + 1);
        let Some(deg) = p.degree() else {
            return Polynomial::zero();
        };
        let terms = p
            .terms
            .iter()
            .map(|(c, m)| {
                let lead = (deg - m.degree()) as Exponent;
                (c.clone(), m.with_prefix(&[lead]))
            })
            .collect();
        target.from_terms(terms)
    }

    /// Re-express `p` in `target`, sending variable `i` to `var_map[i]`.
    pub fn map_variables(
        &self,
        p: &Polynomial<F::Elem>,
        target: &PolyRing<F>,
        var_map: &[usize],
    ) -> Polynomial<F::Elem> {
        assert_eq!(var_map.len(), self.nvars());
        let n = target.nvars();
        let terms = p
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = alloc::vec![0 as Exponent; n];
                for (i, &k) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += k;
                }
                (c.clone(), Monomial::from_exponents(&e))
            })
            .collect();
        target.from_terms(terms)
    }

    /// Same variables, possibly another order.
    pub fn convert(&self, p: &Polynomial<F::Elem>, target: &PolyRing<F>) -> Polynomial<F::Elem> {
        assert_eq!(target.nvars(), self.nvars());
        if target.order == self.order {
            return p.clone();
        }
        target.from_terms(p.terms.clone())
    }

    /// Composition: substitute `images[i]` (polynomials of `target`) for variable `i`.
    pub fn substitute(
        &self,
        p: &Polynomial<F::Elem>,
        target: &PolyRing<F>,
        images: &[Polynomial<F::Elem>],
    ) -> Polynomial<F::Elem> {
        assert_eq!(images.len(), self.nvars());
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial<F::Elem>>> = (0..self.nvars()).map(|_| Vec::new()).collect();
        let mut acc: Vec<Term<F::Elem>> = Vec::new();
        for (c, m) in &p.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = target.mul(cache.last().unwrap(), &images[i]);
                    cache.push(next);
                }
                t = target.mul(&t, &cache[e as usize]);
            }
            acc.extend(t.terms);
        }
        target.from_terms(acc)
    }

    /// Import a polynomial over another field, mapping coefficients.
    pub fn import<G: Field, Err>(
        &self,
        p: &Polynomial<G::Elem>,
        mut map: impl FnMut(&G::Elem) -> Result<F::Elem, Err>,
    ) -> Result<Polynomial<F::Elem>, Err> {
        let mut terms = Vec::with_capacity(p.len());
        for (c, m) in &p.terms {
            terms.push((map(c)?, m.clone()));
        }
        Ok(self.from_terms(terms))
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial<F::Elem>) -> DisplayPoly<'a, F> {
        DisplayPoly { ring: self, poly: p }
    }
}

/// Printing adapter: terms in decreasing order, explicit `*` and `^`.
pub struct DisplayPoly<'a, F: Field> {
    ring: &'a PolyRing<F>,
    poly: &'a Polynomial<F::Elem>,
}

impl<F: Field> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.ring.field();
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.poly.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut wrote = false;
            if !field.is_one(&abs) || m.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                f.write_str(&self.ring.names()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, DEFAULT_PRIMES};
    use crate::parse::parse_polynomial;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn fp_ring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(
            PrimeField::new(DEFAULT_PRIMES[0]).unwrap(),
            names.iter().copied(),
            MonomialOrder::Grevlex,
        )
    }

    #[test]
    fn derivative_examples() {
        let r = fp_ring(&["x1", "x2", "x3", "x4"]);
        let p = parse_polynomial(&r, "x1^2*x2 - x3*x4").unwrap();
        let d = r.differentiate(&p, 0);
        assert_eq!(d, parse_polynomial(&r, "2*x1*x2").unwrap());
        let s = fp_ring(&["x1", "x2", "x3"]);
        let sphere = parse_polynomial(&s, "x1^2+x2^2+x3^2-100").unwrap();
        assert_eq!(s.differentiate(&sphere, 2), parse_polynomial(&s, "2*x3").unwrap());
        assert!(s.differentiate(&s.constant(7), 1).is_zero());
    }

    #[test]
    fn homogenize_examples() {
        let r = fp_ring(&["x1", "x2", "x3", "x4"]);
        let h = r.with_prepended("x0", MonomialOrder::Grevlex);
        let p = parse_polynomial(&r, "x1^2*x2 - x3*x4").unwrap();
        assert_eq!(
            r.homogenize(&p, &h),
            parse_polynomial(&h, "x1^2*x2 - x0*x3*x4").unwrap()
        );
        let s = fp_ring(&["x", "y", "z"]);
        let hs = s.with_prepended("u", MonomialOrder::Grevlex);
        let q = parse_polynomial(&s, "x^2+y^2+z^2-1").unwrap();
        assert_eq!(
            s.homogenize(&q, &hs),
            parse_polynomial(&hs, "x^2+y^2+z^2-u^2").unwrap()
        );
        // already homogeneous: unchanged apart from the extra variable
        let c = parse_polynomial(&s, "x*y - z^2").unwrap();
        assert_eq!(s.homogenize(&c, &hs), s.map_variables(&c, &hs, &[1, 2, 3]));
    }

    #[test]
    fn evaluate_examples() {
        let r = fp_ring(&["y0", "y1", "y2", "y3", "y4"]);
        let dual = parse_polynomial(&r, "y1^2*y2+4*y0*y3*y4").unwrap();
        assert_eq!(r.evaluate(&dual, &[1, 0, 0, 0, 0]), 0);

        // (2a, a, 6) with 5a^2 = 64 lies on the sphere of radius 10; 5 is a
        // square modulo 2147483579 (which is 3 mod 4), so a lives in F_p
        let f = PrimeField::new(2_147_483_579).unwrap();
        let s = PolyRing::new(f, ["x", "y", "z"], MonomialOrder::Grevlex);
        let sphere = parse_polynomial(&s, "x^2+y^2+z^2-100").unwrap();
        let target = f.div(&64, &5);
        let alpha = sqrt_mod(&f, target).expect("64/5 is a square mod p");
        let pt = [f.mul(&2, &alpha), alpha, 6];
        assert_eq!(s.evaluate(&sphere, &pt), 0);

        let p = parse_polynomial(&s, "3*x^2 + y - 17").unwrap();
        assert_eq!(s.evaluate(&p, &[0, 0, 0]), f.from_i64(-17));
    }

    // p = 3 mod 4, so a^((p+1)/4) is a square root of a square a
    fn sqrt_mod(f: &PrimeField, a: u32) -> Option<u32> {
        let p = f.modulus() as u64;
        assert_eq!(p % 4, 3);
        let r = f.pow(&a, (p + 1) / 4);
        (f.mul(&r, &r) == a).then_some(r)
    }

    #[test]
    fn printing_is_canonical() {
        let r = PolyRing::new(crate::field::Rationals, ["x", "y"], MonomialOrder::Grevlex);
        let p = parse_polynomial(&r, "-(x+1)^2 + 1/2*y").unwrap();
        assert_eq!(r.display(&p).to_string(), "-x^2 - 2*x + 1/2*y - 1");
        assert_eq!(r.display(&r.zero()).to_string(), "0");
    }

    fn arb_poly(r: PolyRing<PrimeField>) -> impl Strategy<Value = Polynomial<u32>> {
        let n = r.nvars();
        proptest::collection::vec(
            (1u32..1000, proptest::collection::vec(0u16..3, n)),
            0..6,
        )
        .prop_map(move |ts| {
            r.from_terms(ts.into_iter().map(|(c, e)| (c, Monomial::from_exponents(&e))).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(
            a in arb_poly(fp_ring(&["x", "y", "z"])),
            b in arb_poly(fp_ring(&["x", "y", "z"])),
            c in arb_poly(fp_ring(&["x", "y", "z"])),
        ) {
            let r = fp_ring(&["x", "y", "z"]);
            prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
            prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            prop_assert!(r.is_normalized(&r.mul(&a, &b)));
            prop_assert!(r.sub(&a, &a).is_zero());
        }

        #[test]
        fn product_rule(
            a in arb_poly(fp_ring(&["x", "y", "z"])),
            b in arb_poly(fp_ring(&["x", "y", "z"])),
            i in 0usize..3,
        ) {
            let r = fp_ring(&["x", "y", "z"]);
            let lhs = r.differentiate(&r.mul(&a, &b), i);
            let rhs = r.add(
                &r.mul(&a, &r.differentiate(&b, i)),
                &r.mul(&b, &r.differentiate(&a, i)),
            );
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn homogenize_dehomogenizes(a in arb_poly(fp_ring(&["x", "y", "z"]))) {
            let r = fp_ring(&["x", "y", "z"]);
            let h = r.with_prepended("w", MonomialOrder::Grevlex);
            let ph = r.homogenize(&a, &h);
            prop_assert!(ph.is_homogeneous());
            let images = [r.one(), r.var(0), r.var(1), r.var(2)];
            prop_assert_eq!(h.substitute(&ph, &r, &images), a);
        }

        #[test]
        fn evaluation_is_multiplicative(
            a in arb_poly(fp_ring(&["x", "y", "z"])),
            b in arb_poly(fp_ring(&["x", "y", "z"])),
            pt in proptest::collection::vec(0u32..1_000_000, 3),
        ) {
            let r = fp_ring(&["x", "y", "z"]);
            let f = r.field();
            prop_assert_eq!(
                r.evaluate(&r.mul(&a, &b), &pt),
                f.mul(&r.evaluate(&a, &pt), &r.evaluate(&b, &pt))
            );
        }
    }
}
