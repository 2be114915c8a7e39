use alloc::string::String;
use alloc::vec::Vec;

use super::{buchberger, GroebnerBasis, Ideal};
use crate::budget::Limits;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::genericity::Seed;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// Krull dimension via the leading-term ideal of a grevlex basis; -1 for the unit ideal.
pub fn krull_dimension<F: Field>(ideal: &Ideal<F>, limits: &Limits<'_>) -> Result<i64> {
    let gb = buchberger(ideal, MonomialOrder::Grevlex, limits)?;
    Ok(dimension_of_basis(&gb))
}

/// Size of the largest variable set containing the support of no leading monomial.
pub(crate) fn dimension_of_basis<F: Field>(gb: &GroebnerBasis<F>) -> i64 {
    if gb.is_unit() {
        return -1;
    }
    let n = gb.ring().nvars();
    assert!(n <= 64, "dimension search supports at most 64 variables");
    let supports: Vec<u64> = gb
        .leading_monomials()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut best = 0usize;
    search(n, 0, 0, 0, &supports, &mut best);
    best as i64
}

fn search(n: usize, i: usize, set: u64, size: usize, supports: &[u64], best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    let with = set | 1 << i;
    if !supports.iter().any(|&s| s & (1 << i) != 0 && s & !with == 0) {
        search(n, i + 1, with, size + 1, supports, best);
    }
    search(n, i + 1, set, size, supports, best);
}

pub fn is_unit_ideal<F: Field>(ideal: &Ideal<F>, limits: &Limits<'_>) -> Result<bool> {
    Ok(buchberger(ideal, MonomialOrder::Grevlex, limits)?.is_unit())
}

/// Intersection with the subring of the last `nvars - first_k` variables.
///
/// The result lives in a ring over those variables (grevlex).
pub fn eliminate<F: Field>(ideal: &Ideal<F>, first_k: usize, limits: &Limits<'_>) -> Result<Ideal<F>> {
    let n = ideal.ring().nvars();
    if first_k == 0 || first_k >= n {
        return Err(Error::InvalidArgument(alloc::format!(
            "cannot eliminate {first_k} of {n} variables"
        )));
    }
    let gb = buchberger(ideal, MonomialOrder::Block(first_k), limits)?;
    let sub = PolyRing::new(
        ideal.ring().field().clone(),
        ideal.ring().names()[first_k..].iter().cloned(),
        MonomialOrder::Grevlex,
    );
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(_, m)| m.exponents()[..first_k].iter().all(|&e| e == 0)))
        .map(|g| sub.from_terms(g.terms().iter().map(|(c, m)| (c.clone(), m.without_prefix(first_k))).collect()))
        .collect::<Vec<_>>();
    Ok(Ideal::new(sub, gens))
}

pub(crate) fn fresh_name(existing: &[String], base: &str) -> String {
    let mut name = String::from(base);
    while existing.iter().any(|n| *n == name) {
        name.insert(0, '_');
    }
    name
}

/// `(I : g^inf)` by adjoining `t`, adding `t*g - 1` and eliminating `t`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, g: &Polynomial<F::Elem>, limits: &Limits<'_>) -> Result<Ideal<F>> {
    if g.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    if g.is_constant() {
        return Ok(buchberger(ideal, MonomialOrder::Grevlex, limits)?.to_ideal().in_ring(ring));
    }
    let t = fresh_name(ring.names(), "t");
    let big = ring.with_prepended(&t, MonomialOrder::Block(1));
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let mut gens: Vec<Polynomial<F::Elem>> =
        ideal.generators().iter().map(|f| ring.map_variables(f, &big, &shift)).collect();
    let tg = big.mul(&big.var(0), &ring.map_variables(g, &big, &shift));
    gens.push(big.sub(&tg, &big.one()));
    let elim = eliminate(&Ideal::new(big, gens), 1, limits)?;
    Ok(elim.in_ring(ring))
}

/// `(I : J^inf)`.
///
/// Saturates by one random combination of `J`'s generators for two seeds and
/// accepts the result when both agree; otherwise falls back to the exact
/// formula `(I : J^inf) = intersection over k of (I : g_k^inf)`.
pub fn saturate_by_ideal<F: Field>(
    ideal: &Ideal<F>,
    j: &Ideal<F>,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<Ideal<F>> {
    if j.is_zero_ideal() {
        return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
    }
    let ring = ideal.ring();
    let gens = j.generators();
    if gens.len() == 1 {
        return saturate(ideal, &gens[0], limits);
    }
    let mut results: Vec<GroebnerBasis<F>> = Vec::new();
    for k in 0..2u64 {
        let mut rng = seed.derive(k).rng();
        let combo = gens.iter().fold(ring.zero(), |acc, g| {
            let c = ring.field().random_nonzero(&mut rng);
            ring.add(&acc, &ring.scale(g, &c))
        });
        if combo.is_zero() {
            continue;
        }
        let sat = saturate(ideal, &combo, limits)?;
        results.push(buchberger(&sat, MonomialOrder::Grevlex, limits)?);
    }
    if results.len() == 2 && results[0] == results[1] {
        return Ok(results.swap_remove(0).to_ideal().in_ring(ring));
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in gens {
        let s = saturate(ideal, g, limits)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s, limits)?,
        });
    }
    let out = acc.expect("nonempty generator list");
    Ok(buchberger(&out, MonomialOrder::Grevlex, limits)?.to_ideal().in_ring(ring))
}

/// `I ∩ J` via `t*I + (1-t)*J` and elimination of `t`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>, limits: &Limits<'_>) -> Result<Ideal<F>> {
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::new(ring.clone(), []));
    }
    let t = fresh_name(ring.names(), "t");
    let big = ring.with_prepended(&t, MonomialOrder::Block(1));
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let tv = big.var(0);
    let one_minus_t = big.sub(&big.one(), &tv);
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(big.mul(&tv, &ring.map_variables(f, &big, &shift)));
    }
    for f in b.generators() {
        gens.push(big.mul(&one_minus_t, &b.ring().map_variables(f, &big, &shift)));
    }
    Ok(eliminate(&Ideal::new(big, gens), 1, limits)?.in_ring(ring))
}

impl<F: Field> Ideal<F> {
    /// Re-home generators into a ring with the same variable names.
    pub(crate) fn in_ring(&self, target: &PolyRing<F>) -> Ideal<F> {
        assert_eq!(self.ring().names(), target.names());
        Ideal::new(
            target.clone(),
            self.generators().iter().map(|g| target.from_terms(g.terms().to_vec())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, DEFAULT_PRIMES};
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(
            PrimeField::new(DEFAULT_PRIMES[0]).unwrap(),
            names.iter().copied(),
            MonomialOrder::Grevlex,
        )
    }

    fn ideal(r: &PolyRing<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::new(r.clone(), gens.iter().map(|g| parse_polynomial(r, g).unwrap()))
    }

    fn same(a: &Ideal<PrimeField>, b: &Ideal<PrimeField>) -> bool {
        let l = Limits::unlimited();
        let ga = buchberger(a, MonomialOrder::Grevlex, &l).unwrap();
        let gb = buchberger(&b.in_ring(a.ring()), MonomialOrder::Grevlex, &l).unwrap();
        ga.basis() == gb.basis()
    }

    const L: Limits<'static> = Limits::unlimited();

    #[test]
    fn krull_dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(krull_dimension(&ideal(&r, &["x^2+y^2+z^2-100"]), &L).unwrap(), 2);
        assert_eq!(krull_dimension(&ideal(&r, &["x^2+y^2+z^2-1", "y-x^2"]), &L).unwrap(), 1);
        let r2 = ring(&["x", "y"]);
        assert_eq!(krull_dimension(&ideal(&r2, &["x", "y"]), &L).unwrap(), 0);
        assert_eq!(krull_dimension(&ideal(&r2, &["1"]), &L).unwrap(), -1);
        assert_eq!(krull_dimension(&Ideal::new(r2.clone(), []), &L).unwrap(), 2);
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(&["x", "y", "z"]);
        let e = eliminate(&ideal(&r, &["y - x^2", "z - x^3"]), 1, &L).unwrap();
        let sub = ring(&["y", "z"]);
        assert!(same(&e, &ideal(&sub, &["y^3 - z^2"])));

        let r2 = ring(&["x", "y"]);
        let e = eliminate(&ideal(&r2, &["x - 1", "y - 2"]), 1, &L).unwrap();
        assert!(same(&e, &ideal(&ring(&["y"]), &["y - 2"])));

        let e = eliminate(&ideal(&r2, &["x*y - 1"]), 1, &L).unwrap();
        assert!(e.is_zero_ideal());

        assert!(eliminate(&ideal(&r2, &["x"]), 0, &L).is_err());
        assert!(eliminate(&ideal(&r2, &["x"]), 2, &L).is_err());
    }

    #[test]
    fn saturate_examples() {
        let r = ring(&["x", "y", "z"]);
        let x = r.var(0);
        let s = saturate(&ideal(&r, &["x*y", "x*z"]), &x, &L).unwrap();
        assert!(same(&s, &ideal(&r, &["y", "z"])));

        let s = saturate(&ideal(&r, &["x^2"]), &x, &L).unwrap();
        assert!(is_unit_ideal(&s, &L).unwrap());

        let i = ideal(&r, &["x^2 - y", "y*z"]);
        let s = saturate(&i, &r.one(), &L).unwrap();
        assert!(same(&s, &i));
    }

    #[test]
    fn saturation_is_idempotent() {
        let r = ring(&["x", "y", "z"]);
        let g = parse_polynomial(&r, "x + y").unwrap();
        let i = ideal(&r, &["(x+y)^2*z", "(x+y)*(y - z^2)", "x*y*z - 1 + x"]);
        let once = saturate(&i, &g, &L).unwrap();
        let twice = saturate(&once, &g, &L).unwrap();
        assert!(same(&once, &twice));
    }

    #[test]
    fn saturate_by_ideal_examples() {
        let r = ring(&["x", "y", "z"]);
        let s = saturate_by_ideal(&ideal(&r, &["x*y", "x*z"]), &ideal(&r, &["y", "z"]), Seed(1), &L).unwrap();
        assert!(same(&s, &ideal(&r, &["x"])));

        let i = ideal(&r, &["x^2 - y", "y*z"]);
        let s = saturate_by_ideal(&i, &ideal(&r, &["1"]), Seed(2), &L).unwrap();
        assert!(same(&s, &i));

        let r2 = ring(&["x", "y"]);
        let s = saturate_by_ideal(&ideal(&r2, &["x^2", "x*y"]), &ideal(&r2, &["x"]), Seed(3), &L).unwrap();
        assert!(is_unit_ideal(&s, &L).unwrap());
    }

    #[test]
    fn saturation_by_origin_keeps_lines() {
        // V(xy) is two lines through the origin; no component lies inside V(x, y)
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y"]);
        let s = saturate_by_ideal(&i, &ideal(&r, &["x", "y"]), Seed(5), &L).unwrap();
        assert!(same(&s, &i));
    }

    #[test]
    fn intersection_of_coordinate_axes() {
        let r = ring(&["x", "y"]);
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &L).unwrap();
        assert!(same(&i, &ideal(&r, &["x*y"])));
    }

    #[test]
    fn unit_ideal_examples() {
        let r = ring(&["x", "y", "z"]);
        assert!(is_unit_ideal(&ideal(&r, &["x", "x - 1"]), &L).unwrap());
        assert!(!is_unit_ideal(&ideal(&r, &["x^2+y^2+z^2-100"]), &L).unwrap());
        assert!(is_unit_ideal(&ideal(&r, &["1"]), &L).unwrap());
    }
}
