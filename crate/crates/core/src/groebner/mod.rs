//! Groebner bases and the ideal operations built on them.
//!
//! Buchberger's algorithm with the Gebauer-Moeller installation of pairs and
//! the normal selection strategy (smallest lcm first).

mod count;
pub(crate) mod ops;

pub use count::{count_points, count_points_of_basis, PointCount};
pub use ops::{eliminate, intersect, is_unit_ideal, krull_dimension, saturate, saturate_by_ideal};

use alloc::vec::Vec;

use crate::budget::{Deadline, Limits};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial, Term};

/// A list of generators over a shared ring. Zero generators are dropped, so
/// an empty list is the zero ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    generators: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: PolyRing<F>, generators: impl IntoIterator<Item = Polynomial<F::Elem>>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, generators }
    }

    pub fn unit(ring: PolyRing<F>) -> Self {
        let one = ring.one();
        Ideal::new(ring, [one])
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal extended by more generators (same ring).
    pub fn extended(&self, more: impl IntoIterator<Item = Polynomial<F::Elem>>) -> Self {
        let mut gens = self.generators.clone();
        gens.extend(more.into_iter().filter(|g| !g.is_zero()));
        Ideal {
            ring: self.ring.clone(),
            generators: gens,
        }
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by decreasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    basis: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<F::Elem>] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let refs: Vec<&Polynomial<F::Elem>> = self.basis.iter().collect();
        reduce(&self.ring, p.terms().to_vec(), &refs)
    }

    pub fn contains(&self, p: &Polynomial<F::Elem>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Is `m` a standard monomial (not divisible by any leading monomial)?
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading_monomials().any(|l| l.divides(m))
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new(self.ring.clone(), self.basis.iter().cloned())
    }
}

/// Full normal form of `p` (given as terms in `ring`'s order) modulo `reducers`.
pub(crate) fn reduce<F: Field>(
    ring: &PolyRing<F>,
    p: Vec<Term<F::Elem>>,
    reducers: &[&Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let field = ring.field();
    let mut rem: Vec<Term<F::Elem>> = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (c, m) = &cur[start];
        let hit = reducers.iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(m)));
        match hit {
            Some(g) => {
                let (gc, gm) = g.leading_term().unwrap();
                let q = gm.quotient_of(m);
                let factor = if field.is_one(gc) { c.clone() } else { field.div(c, gc) };
                cur = ring.sub_mul_term(&cur[start + 1..], &factor, &q, &g.terms()[1..]);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted_terms(rem)
}

fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
    lcm: &Monomial,
) -> Vec<Term<F::Elem>> {
    // both monic
    let (_, fm) = f.leading_term().unwrap();
    let (_, gm) = g.leading_term().unwrap();
    let a = fm.quotient_of(lcm);
    let b = gm.quotient_of(lcm);
    let fa: Vec<Term<F::Elem>> = f.terms()[1..].iter().map(|(c, m)| (c.clone(), m.mul(&a))).collect();
    ring.sub_mul_term(&fa, &ring.field().one(), &b, &g.terms()[1..])
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Buchberger<'r, F: Field> {
    ring: &'r PolyRing<F>,
    polys: Vec<Polynomial<F::Elem>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<F: Field> Buchberger<'_, F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn reduce_active(&self, p: Vec<Term<F::Elem>>) -> Polynomial<F::Elem> {
        let refs: Vec<&Polynomial<F::Elem>> = self.active.iter().map(|&i| &self.polys[i]).collect();
        reduce(self.ring, p, &refs)
    }

    /// Gebauer-Moeller update with the new element `h`.
    fn install(&mut self, h: Polynomial<F::Elem>) {
        let hi = self.polys.len();
        self.polys.push(h);
        let lh = self.lm(hi).clone();

        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: lh.lcm(self.lm(g)),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = lh.is_coprime(self.lm(p.i));
            let dominated = candidates.iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !lh.is_coprime(self.lm(p.i)));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i].leading_monomial().unwrap();
            let lj = polys[p.j].leading_monomial().unwrap();
            !(lh.divides(&p.lcm) && li.lcm(&lh) != p.lcm && lj.lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        self.active.retain(|&g| !lh.divides(polys[g].leading_monomial().unwrap()));
        self.active.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .compare(&pa.lcm, &pb.lcm)
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(mut self, gens: &[Polynomial<F::Elem>], deadline: &Deadline<'_>) -> Result<Vec<Polynomial<F::Elem>>> {
        let ring = self.ring;
        for g in gens {
            deadline.check()?;
            let h = self.reduce_active(g.terms().to_vec());
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(alloc::vec![ring.one()]);
            }
            self.install(ring.make_monic(&h));
        }
        while let Some(pair) = self.select() {
            deadline.check()?;
            let s = s_polynomial(ring, &self.polys[pair.i], &self.polys[pair.j], &pair.lcm);
            let h = self.reduce_active(s);
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(alloc::vec![ring.one()]);
            }
            self.install(ring.make_monic(&h));
        }
        let basis: Vec<Polynomial<F::Elem>> = self.active.iter().map(|&i| self.polys[i].clone()).collect();
        Ok(interreduce(ring, basis))
    }
}

/// Minimalize and tail-reduce a Groebner basis; sort by decreasing leading monomial.
fn interreduce<F: Field>(ring: &PolyRing<F>, mut basis: Vec<Polynomial<F::Elem>>) -> Vec<Polynomial<F::Elem>> {
    basis.sort_by(|a, b| ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != k && h.leading_monomial().unwrap().divides(lg) && (h.leading_monomial().unwrap() != lg || j < k));
        if !redundant {
            minimal.push(ring.make_monic(g));
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial<F::Elem>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g)
            .collect();
        let g = &minimal[k];
        let tail = reduce(ring, g.terms()[1..].to_vec(), &others);
        let mut terms = alloc::vec![g.terms()[0].clone()];
        terms.extend(tail.into_terms());
        out.push(Polynomial::from_sorted_terms(terms));
    }
    out.sort_by(|a, b| ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

/// Reduced Groebner basis of `ideal` with respect to `order`.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder, limits: &Limits<'_>) -> Result<GroebnerBasis<F>> {
    let ring = ideal.ring().with_order(order);
    let gens: Vec<Polynomial<F::Elem>> = ideal
        .generators()
        .iter()
        .map(|g| ideal.ring().convert(g, &ring))
        .collect();
    let deadline = limits.start();
    let engine = Buchberger {
        ring: &ring,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let basis = engine.run(&gens, &deadline)?;
    Ok(GroebnerBasis { ring, basis })
}

/// Standard monomials of a zero-dimensional basis, in increasing order.
pub fn quotient_basis<F: Field>(gb: &GroebnerBasis<F>) -> Result<Vec<Monomial>> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let dim = ops::dimension_of_basis(gb);
    if dim != 0 {
        return Err(Error::NotZeroDimensional { dimension: dim });
    }
    let n = gb.ring().nvars();
    let mut seen: alloc::collections::BTreeSet<Monomial> = alloc::collections::BTreeSet::new();
    let mut stack = alloc::vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = stack.pop() {
        for v in 0..n {
            let next = m.times_variable(v);
            if gb.is_standard(&next) && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| gb.ring().cmp_monomials(a, b));
    Ok(out)
}
