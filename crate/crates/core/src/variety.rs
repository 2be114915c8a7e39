//! Varieties, their conormal ideals, and generic slices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Limits;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::genericity::{Seed, SplitMix64};
use crate::groebner::ops::fresh_name;
use crate::groebner::{buchberger, eliminate, krull_dimension, saturate_by_ideal, Ideal};
use crate::linalg::{minors, AffineForm, AffineMap};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// How many fresh seeds a random slice gets before giving up.
pub const SLICE_ATTEMPTS: u64 = 4;

/// An affine variety `X ⊂ C^n` given by generators of its ideal.
#[derive(Clone, Debug)]
pub struct VarietySpec<F: Field> {
    ring: PolyRing<F>,
    generators: Vec<Polynomial<F::Elem>>,
    assumed_irreducible: bool,
}

impl<F: Field> VarietySpec<F> {
    /// Zero generators are dropped; at least one must remain.
    pub fn new(ring: PolyRing<F>, generators: impl IntoIterator<Item = Polynomial<F::Elem>>) -> Result<Self> {
        let ring = ring.with_order(MonomialOrder::Grevlex);
        let generators: Vec<_> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| ring.from_terms(g.into_terms()))
            .collect();
        if generators.is_empty() {
            return Err(Error::InvalidSpec("no nonzero generators".into()));
        }
        if ring.nvars() == 0 {
            return Err(Error::InvalidSpec("no variables".into()));
        }
        Ok(VarietySpec {
            ring,
            generators,
            assumed_irreducible: true,
        })
    }

    pub fn with_assumed_irreducible(mut self, flag: bool) -> Self {
        self.assumed_irreducible = flag;
        self
    }

    pub fn assumed_irreducible(&self) -> bool {
        self.assumed_irreducible
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.generators
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(self.ring.clone(), self.generators.iter().cloned())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Index of the first inhomogeneous generator.
    pub fn first_inhomogeneous(&self) -> Option<usize> {
        self.generators.iter().position(|g| !g.is_homogeneous())
    }

    /// Krull dimension `d`, checked to satisfy `0 <= d < n`.
    pub fn dimension(&self, limits: &Limits<'_>) -> Result<usize> {
        let d = krull_dimension(&self.ideal(), limits)?;
        if d < 0 {
            return Err(Error::InvalidSpec("the generators define the empty set (unit ideal)".into()));
        }
        if d as usize >= self.n() {
            return Err(Error::InvalidSpec("the variety is the whole ambient space".into()));
        }
        Ok(d as usize)
    }

    /// `n - d`.
    pub fn codimension(&self, limits: &Limits<'_>) -> Result<usize> {
        Ok(self.n() - self.dimension(limits)?)
    }

    /// Jacobian matrix, one row per generator.
    pub fn jacobian(&self) -> Vec<Vec<Polynomial<F::Elem>>> {
        jacobian(&self.ring, &self.generators)
    }

    /// Generators of the projective closure in `p_0, x_1, .., x_n`: the
    /// homogenized reduced grevlex basis. The new variable is `x0` unless that
    /// name is taken.
    pub fn projective_closure(&self, limits: &Limits<'_>) -> Result<VarietySpec<F>> {
        let gb = buchberger(&self.ideal(), MonomialOrder::Grevlex, limits)?;
        let h = fresh_name(self.ring.names(), "x0");
        let target = self.ring.with_prepended(&h, MonomialOrder::Grevlex);
        let gens: Vec<_> = gb.basis().iter().map(|g| self.ring.homogenize(g, &target)).collect();
        VarietySpec::new(target, gens).map(|s| s.with_assumed_irreducible(self.assumed_irreducible))
    }

    /// Substitute the affine parametrization of `V(forms)` into the
    /// generators. The new variables are the non-pivot original variables.
    pub fn restrict_to(&self, forms: &[AffineForm<F::Elem>]) -> Result<(VarietySpec<F>, AffineMap<F::Elem>)> {
        let map = AffineMap::solve(self.ring.field(), self.n(), forms)?;
        let names: Vec<String> = map.free.iter().map(|&i| self.ring.names()[i].clone()).collect();
        if names.is_empty() {
            return Err(Error::DegenerateSlice {
                expected: 0,
                found: -1,
            });
        }
        let target = PolyRing::new(self.ring.field().clone(), names, MonomialOrder::Grevlex);
        let images = map.images(&target, 0);
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|g| self.ring.substitute(g, &target, &images))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            // X contains the whole slice
            return Err(Error::DegenerateSlice {
                expected: (self.n() - forms.len()) as i64,
                found: (self.n() - forms.len()) as i64,
            });
        }
        let spec = VarietySpec {
            ring: target,
            generators: gens,
            assumed_irreducible: self.assumed_irreducible,
        };
        Ok((spec, map))
    }

    /// `X ∩ V(forms)`, requiring the dimension to drop by the number of forms.
    pub fn slice_with_forms(&self, forms: &[AffineForm<F::Elem>], limits: &Limits<'_>) -> Result<VarietySpec<F>> {
        if forms.is_empty() {
            return Ok(self.clone());
        }
        let d = self.dimension(limits)?;
        let expected = d as i64 - forms.len() as i64;
        if expected < 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot cut a {d}-dimensional variety by {} hyperplanes",
                forms.len()
            )));
        }
        let (spec, _) = self.restrict_to(forms)?;
        let found = krull_dimension(&spec.ideal(), limits)?;
        if found != expected {
            return Err(Error::DegenerateSlice { expected, found });
        }
        Ok(spec)
    }

    /// `X` cut by `i` random affine hyperplanes.
    pub fn slice_variety(&self, i: usize, seed: Seed, limits: &Limits<'_>) -> Result<VarietySpec<F>> {
        if i == 0 {
            return Ok(self.clone());
        }
        let mut last = None;
        for attempt in 0..SLICE_ATTEMPTS {
            let mut rng = seed.derive(attempt).rng();
            let forms = random_forms(self.ring.field(), self.n(), i, true, &mut rng);
            match self.slice_with_forms(&forms, limits) {
                Err(e @ Error::DegenerateSlice { .. }) => last = Some(e),
                other => return other,
            }
        }
        Err(last.expect("at least one attempt"))
    }
}

impl VarietySpec<Rationals> {
    /// Reduce coefficients modulo a prime.
    pub fn reduce(&self, field: PrimeField) -> Result<VarietySpec<PrimeField>> {
        let target = self.ring.with_field(field);
        let gens = self
            .generators
            .iter()
            .map(|g| target.import::<Rationals, Error>(g, |c| field.from_rational(c)))
            .collect::<Result<Vec<_>>>()?;
        let out = VarietySpec::new(target, gens).map_err(|_| {
            Error::InvalidSpec(format!("every generator vanishes modulo {}", field.modulus()))
        })?;
        Ok(out.with_assumed_irreducible(self.assumed_irreducible))
    }
}

/// `k` random affine forms on `n` coordinates with nonzero coefficients.
/// With `affine == false` the constants are zero.
pub fn random_forms<F: Field>(field: &F, n: usize, k: usize, affine: bool, rng: &mut SplitMix64) -> Vec<AffineForm<F::Elem>> {
    (0..k)
        .map(|_| {
            let coeffs = (0..n).map(|_| field.random_nonzero(rng)).collect();
            let constant = if affine { field.random_nonzero(rng) } else { field.zero() };
            AffineForm::new(coeffs, constant)
        })
        .collect()
}

/// `v_j - target_j` for every coordinate.
pub fn point_forms<F: Field>(field: &F, target: &[F::Elem]) -> Vec<AffineForm<F::Elem>> {
    let n = target.len();
    (0..n)
        .map(|j| {
            let mut c = vec![field.zero(); n];
            c[j] = field.one();
            AffineForm::new(c, field.neg(&target[j]))
        })
        .collect()
}

pub fn jacobian<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Vec<Vec<Polynomial<F::Elem>>> {
    gens.iter().map(|g| ring.gradient(g)).collect()
}

/// Which polynomial system expresses "u annihilates the tangent space".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Multipliers when the generator count equals the codimension, minors otherwise.
    #[default]
    Auto,
    /// `u = sum_k λ_k ∇g_k`. Needs as many generators as the codimension.
    Lagrange,
    /// Rank condition on `[u; Jac]`, singular locus removed by saturation.
    Minors,
}

impl Method {
    fn resolve(self, ngens: usize, codim: usize) -> Result<Method> {
        match self {
            Method::Auto if ngens == codim => Ok(Method::Lagrange),
            Method::Auto => Ok(Method::Minors),
            Method::Lagrange if ngens != codim => Err(Error::InvalidArgument(format!(
                "the multiplier system needs {codim} generators, got {ngens}"
            ))),
            m => Ok(m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Affine,
    Projective,
}

/// Ideal of a conormal variety in doubled variables (base first, covector second).
#[derive(Clone, Debug)]
pub struct ConormalIdeal<F: Field> {
    pub flavor: Flavor,
    /// Number of base variables (`n` or `n + 1`).
    pub base_vars: usize,
    pub ideal: Ideal<F>,
}

fn names_with_fresh(existing: &mut Vec<String>, base: &str, count: usize, from: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let name = fresh_name(existing, &format!("{base}{}", from + k));
        existing.push(name.clone());
        out.push(name);
    }
    out
}

/// `base` followed by `count` fresh variables named after `prefix`.
pub fn ring_with_params<F: Field>(base: &PolyRing<F>, prefix: &str, count: usize) -> PolyRing<F> {
    let mut names: Vec<String> = base.names().to_vec();
    names_with_fresh(&mut names, prefix, count, 1);
    PolyRing::new(base.field().clone(), names, MonomialOrder::Grevlex)
}

fn doubled_ring<F: Field>(base: &PolyRing<F>, dual: &str, from: usize) -> PolyRing<F> {
    let mut names: Vec<String> = base.names().to_vec();
    names_with_fresh(&mut names, dual, base.nvars(), from);
    PolyRing::new(base.field().clone(), names, MonomialOrder::Grevlex)
}

/// Rank condition `(c+1)`-minors of `[u; Jac]` and the `c`-minors of `Jac`,
/// all in `big`, with the base variables at `0..N` and covector at `N..2N`.
fn rank_conditions<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    codim: usize,
    big: &PolyRing<F>,
) -> (Vec<Polynomial<F::Elem>>, Vec<Polynomial<F::Elem>>) {
    let n = ring.nvars();
    let into_big: Vec<usize> = (0..n).collect();
    let jac: Vec<Vec<_>> = jacobian(ring, gens)
        .into_iter()
        .map(|row| row.iter().map(|p| ring.map_variables(p, big, &into_big)).collect())
        .collect();
    let mut mat = vec![(0..n).map(|j| big.var(n + j)).collect::<Vec<_>>()];
    mat.extend(jac.iter().cloned());
    (minors(big, &mat, codim + 1), minors(big, &jac, codim))
}

fn check_dimension<F: Field>(ideal: &Ideal<F>, expected: usize, limits: &Limits<'_>) -> Result<()> {
    let found = krull_dimension(ideal, limits)?;
    if found != expected as i64 {
        return Err(Error::DimensionMismatch {
            expected: expected as i64,
            found,
        });
    }
    Ok(())
}

/// Closure of `{(x, u) : x ∈ X_reg, u ⟂ T_x X}` in `C^n x C^n`.
pub fn affine_conormal_ideal<F: Field>(
    spec: &VarietySpec<F>,
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<ConormalIdeal<F>> {
    let c = spec.codimension(limits)?;
    let n = spec.n();
    let ring = spec.ring();
    let gens = spec.generators();
    let big = doubled_ring(ring, "u", 1);
    let into_big: Vec<usize> = (0..n).collect();
    let (rank, sing) = rank_conditions(ring, gens, c, &big);
    let lifted: Vec<_> = gens.iter().map(|g| ring.map_variables(g, &big, &into_big)).collect();
    let unsaturated = match method.resolve(gens.len(), c)? {
        Method::Lagrange => {
            // (λ, x, u): g_k and u_j - sum_k λ_k ∂_j g_k, then forget λ
            let mut names: Vec<String> = big.names().to_vec();
            let lambdas = names_with_fresh(&mut names, "l", gens.len(), 1);
            let mut all = lambdas;
            all.extend(big.names().iter().cloned());
            let m = gens.len();
            let lam = PolyRing::new(ring.field().clone(), all, MonomialOrder::Grevlex);
            let shift: Vec<usize> = (m..m + n).collect();
            let mut eqs: Vec<_> = gens.iter().map(|g| ring.map_variables(g, &lam, &shift)).collect();
            let jac = spec.jacobian();
            for j in 0..n {
                let mut e = lam.var(m + n + j);
                for (k, row) in jac.iter().enumerate() {
                    let d = ring.map_variables(&row[j], &lam, &shift);
                    e = lam.sub(&e, &lam.mul(&lam.var(k), &d));
                }
                eqs.push(e);
            }
            let elim = eliminate(&Ideal::new(lam, eqs), m, limits)?;
            Ideal::new(big.clone(), elim.generators().iter().map(|g| big.from_terms(g.terms().to_vec())))
        }
        _ => Ideal::new(big.clone(), lifted.into_iter().chain(rank)),
    };
    let ideal = if sing.is_empty() {
        unsaturated
    } else {
        saturate_by_ideal(&unsaturated, &Ideal::new(big.clone(), sing), seed, limits)?
    };
    check_dimension(&ideal, n, limits)?;
    Ok(ConormalIdeal {
        flavor: Flavor::Affine,
        base_vars: n,
        ideal,
    })
}

/// Conormal variety of the projective closure in `P^n x (P^n)^∨`, as a
/// bihomogeneous ideal in `(p_0..p_n, y_0..y_n)`.
pub fn projective_conormal_ideal<F: Field>(
    spec: &VarietySpec<F>,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<ConormalIdeal<F>> {
    let c = spec.codimension(limits)?;
    let closure = spec.projective_closure(limits)?;
    let ring = closure.ring();
    let n1 = ring.nvars();
    let big = doubled_ring(ring, "y", 0);
    let into_big: Vec<usize> = (0..n1).collect();
    let (rank, sing) = rank_conditions(ring, closure.generators(), c, &big);
    let lifted = closure.generators().iter().map(|g| ring.map_variables(g, &big, &into_big));
    let mut ideal = Ideal::new(big.clone(), lifted.chain(rank));
    if !sing.is_empty() {
        ideal = saturate_by_ideal(&ideal, &Ideal::new(big.clone(), sing), seed, limits)?;
    }
    let irrelevant = Ideal::new(big.clone(), (0..n1).map(|i| big.var(i)));
    ideal = saturate_by_ideal(&ideal, &irrelevant, seed.derive(1), limits)?;
    check_dimension(&ideal, n1, limits)?;
    Ok(ConormalIdeal {
        flavor: Flavor::Projective,
        base_vars: n1,
        ideal,
    })
}

/// The zero-dimensional system whose solutions are the conormal points
/// `(x, u)` with `x = base(s)` and `u` satisfying the `covector` equations.
///
/// `ring`/`gens` describe the variety (affine, or a cone in projective
/// coordinates), `codim` its codimension. Only the parameters of the base map
/// appear as base variables; the covector enters through multipliers or
/// through the parametrization of the covector equations.
pub fn critical_system<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    codim: usize,
    base: &AffineMap<F::Elem>,
    covector: &[AffineForm<F::Elem>],
    method: Method,
    seed: Seed,
) -> Result<Ideal<F>> {
    let n = ring.nvars();
    let field = ring.field();
    let k = base.nparams();
    let mut names: Vec<String> = base.free.iter().map(|&i| ring.names()[i].clone()).collect();
    let jac = jacobian(ring, gens);
    match method.resolve(gens.len(), codim)? {
        Method::Lagrange => {
            let m = gens.len();
            names_with_fresh(&mut names, "l", m, 1);
            let target = PolyRing::new(field.clone(), names, MonomialOrder::Grevlex);
            let x = base.images(&target, 0);
            let mut eqs: Vec<_> = gens.iter().map(|g| ring.substitute(g, &target, &x)).collect();
            let jx: Vec<Vec<_>> = jac
                .iter()
                .map(|row| row.iter().map(|p| ring.substitute(p, &target, &x)).collect())
                .collect();
            // u_j = sum_k λ_k J_kj, plugged into each covector equation
            for form in covector {
                let mut e = target.constant(form.constant.clone());
                for j in 0..n {
                    if field.is_zero(&form.coeffs[j]) {
                        continue;
                    }
                    for (kk, row) in jx.iter().enumerate() {
                        let t = target.mul(&target.var(k + kk), &row[j]);
                        e = target.add(&e, &target.scale(&t, &form.coeffs[j]));
                    }
                }
                eqs.push(e);
            }
            Ok(Ideal::new(target, eqs))
        }
        _ => {
            let umap = AffineMap::solve(field, n, covector)?;
            let q = umap.nparams();
            names_with_fresh(&mut names, "u", q, 1);
            let z = fresh_name(&names, "z");
            names.push(z);
            let target = PolyRing::new(field.clone(), names, MonomialOrder::Grevlex);
            let x = base.images(&target, 0);
            let u = umap.images(&target, k);
            let mut eqs: Vec<_> = gens.iter().map(|g| ring.substitute(g, &target, &x)).collect();
            let jx: Vec<Vec<_>> = jac
                .iter()
                .map(|row| row.iter().map(|p| ring.substitute(p, &target, &x)).collect())
                .collect();
            let mut mat = vec![u];
            mat.extend(jx.iter().cloned());
            eqs.extend(minors(&target, &mat, codim + 1));
            let sing = minors(&target, &jx, codim);
            let mut rng = seed.derive(0x5a7).rng();
            let h = sing.iter().fold(target.zero(), |acc, g| {
                let c = field.random_nonzero(&mut rng);
                target.add(&acc, &target.scale(g, &c))
            });
            let zh = target.mul(&target.var(k + q), &h);
            eqs.push(target.sub(&zh, &target.one()));
            Ok(Ideal::new(target, eqs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIMES;
    use crate::groebner::count_points;
    use crate::parse::parse_polynomial;

    fn spec(names: &[&str], gens: &[&str]) -> VarietySpec<PrimeField> {
        let ring = PolyRing::new(PrimeField::new(DEFAULT_PRIMES[0]).unwrap(), names.iter().copied(), MonomialOrder::Grevlex);
        let g: Vec<_> = gens.iter().map(|t| parse_polynomial(&ring, t).unwrap()).collect();
        VarietySpec::new(ring, g).unwrap()
    }

    fn sphere() -> VarietySpec<PrimeField> {
        spec(&["x", "y", "z"], &["x^2 + y^2 + z^2 - 100"])
    }

    fn curve() -> VarietySpec<PrimeField> {
        spec(&["x", "y", "z"], &["x^2 + y^2 + z^2 - 1", "y - x^2"])
    }

    const L: Limits<'static> = Limits::unlimited();

    #[test]
    fn codimension_examples() {
        assert_eq!(sphere().codimension(&L).unwrap(), 1);
        assert_eq!(curve().codimension(&L).unwrap(), 2);
        assert_eq!(spec(&["x1", "x2", "x3"], &["x1", "x2"]).codimension(&L).unwrap(), 2);
    }

    #[test]
    fn invalid_specs() {
        let ring = PolyRing::new(PrimeField::new(DEFAULT_PRIMES[0]).unwrap(), ["x"], MonomialOrder::Grevlex);
        assert!(VarietySpec::new(ring.clone(), [ring.zero()]).is_err());
        let unit = VarietySpec::new(ring.clone(), [ring.one()]).unwrap();
        assert!(matches!(unit.dimension(&L), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn conormal_of_plane() {
        let s = spec(&["x1", "x2", "x3"], &["x3"]);
        let con = affine_conormal_ideal(&s, Method::Minors, Seed(1), &L).unwrap();
        let gb = buchberger(&con.ideal, MonomialOrder::Grevlex, &L).unwrap();
        let r = con.ideal.ring();
        let expected: Vec<_> = ["x3", "u1", "u2"].iter().map(|t| parse_polynomial(r, t).unwrap()).collect();
        let want = buchberger(&Ideal::new(r.clone(), expected), MonomialOrder::Grevlex, &L).unwrap();
        assert_eq!(gb, want);
    }

    #[test]
    fn conormal_of_origin() {
        let s = spec(&["x1", "x2", "x3"], &["x1", "x2", "x3"]);
        let con = affine_conormal_ideal(&s, Method::Auto, Seed(1), &L).unwrap();
        let gb = buchberger(&con.ideal, MonomialOrder::Grevlex, &L).unwrap();
        assert_eq!(gb.basis().len(), 3);
        assert!(gb.basis().iter().all(|g| g.degree() == Some(1) && g.len() == 1));
    }

    #[test]
    fn sphere_conormal_paths_agree() {
        let s = sphere();
        let a = affine_conormal_ideal(&s, Method::Minors, Seed(3), &L).unwrap();
        let b = affine_conormal_ideal(&s, Method::Lagrange, Seed(3), &L).unwrap();
        let ga = buchberger(&a.ideal, MonomialOrder::Grevlex, &L).unwrap();
        let gb = buchberger(&b.ideal, MonomialOrder::Grevlex, &L).unwrap();
        assert_eq!(ga, gb);
        let r = a.ideal.ring();
        assert!(ga.contains(&parse_polynomial(r, "x^2 + y^2 + z^2 - 100").unwrap()));
        assert!(ga.contains(&parse_polynomial(r, "u1*y - u2*x").unwrap()));
    }

    #[test]
    fn cone_conormal_is_bihomogeneous() {
        let s = spec(&["x1", "x2", "x3", "x4"], &["x1*x4 - x2*x3"]);
        let con = affine_conormal_ideal(&s, Method::Auto, Seed(5), &L).unwrap();
        let gb = buchberger(&con.ideal, MonomialOrder::Grevlex, &L).unwrap();
        for g in gb.basis() {
            let bideg = |m: &crate::monomial::Monomial| {
                let e = m.exponents();
                (e[..4].iter().map(|&v| v as u32).sum::<u32>(), e[4..].iter().map(|&v| v as u32).sum::<u32>())
            };
            let first = bideg(&g.terms()[0].1);
            assert!(g.terms().iter().all(|(_, m)| bideg(m) == first), "{}", con.ideal.ring().display(g));
        }
    }

    #[test]
    fn projective_conormal_of_hyperplane() {
        // X = V(x1) in C^2; its closure is V(x1) in P^2 with dual point [0:1:0]
        let s = spec(&["x1", "x2"], &["x1"]);
        let con = projective_conormal_ideal(&s, Seed(2), &L).unwrap();
        let gb = buchberger(&con.ideal, MonomialOrder::Grevlex, &L).unwrap();
        let r = con.ideal.ring();
        for t in ["x1", "y0", "y2"] {
            assert!(gb.contains(&parse_polynomial(r, t).unwrap()), "{t}");
        }
    }

    #[test]
    fn projective_conormal_of_curve_has_right_dimension() {
        let con = projective_conormal_ideal(&curve(), Seed(2), &L).unwrap();
        assert_eq!(con.base_vars, 4);
        assert_eq!(krull_dimension(&con.ideal, &L).unwrap(), 4);
        let gb = buchberger(&con.ideal, MonomialOrder::Grevlex, &L).unwrap();
        let r = con.ideal.ring();
        assert!(gb.contains(&parse_polynomial(r, "x^2 + y^2 + z^2 - x0^2").unwrap()));
        assert!(gb.contains(&parse_polynomial(r, "y*x0 - x^2").unwrap()));
    }

    #[test]
    fn explicit_slice_of_sphere_is_a_circle() {
        let s = sphere();
        let form = AffineForm::from_polynomial(s.ring(), &parse_polynomial(s.ring(), "z - 6").unwrap()).unwrap();
        let circle = s.slice_with_forms(&[form], &L).unwrap();
        assert_eq!(circle.n(), 2);
        assert_eq!(circle.ring().names(), &[String::from("x"), String::from("y")]);
        let expected = parse_polynomial(circle.ring(), "x^2 + y^2 - 64").unwrap();
        assert_eq!(circle.generators(), &[expected]);
        assert_eq!(circle.dimension(&L).unwrap(), 1);
    }

    #[test]
    fn random_slices_drop_dimension() {
        let s = sphere();
        assert_eq!(s.slice_variety(0, Seed(9), &L).unwrap().generators(), s.generators());
        for i in 1..=2 {
            let cut = s.slice_variety(i, Seed(9), &L).unwrap();
            assert_eq!(cut.n(), 3 - i);
            assert_eq!(krull_dimension(&cut.ideal(), &L).unwrap(), 2 - i as i64);
        }
        let pts = curve().slice_variety(1, Seed(4), &L).unwrap();
        assert_eq!(count_points(&pts.ideal(), Seed(4), &L).unwrap().points, 4);
    }

    #[test]
    fn both_critical_systems_count_the_same() {
        let s = sphere();
        let f = *s.ring().field();
        let mut rng = Seed(11).rng();
        let base = AffineMap::identity(&f, 3);
        let u = random_forms(&f, 3, 3, true, &mut rng);
        let a = critical_system(s.ring(), s.generators(), 1, &base, &u, Method::Lagrange, Seed(1)).unwrap();
        let b = critical_system(s.ring(), s.generators(), 1, &base, &u, Method::Minors, Seed(1)).unwrap();
        let ca = count_points(&a, Seed(1), &L).unwrap().points;
        let cb = count_points(&b, Seed(1), &L).unwrap().points;
        assert_eq!((ca, cb), (2, 2));
    }

    #[test]
    fn rationals_reduce_modulo_p() {
        let ring = PolyRing::new(Rationals, ["x", "y"], MonomialOrder::Grevlex);
        let g = parse_polynomial(&ring, "1/3*x - y").unwrap();
        let s = VarietySpec::new(ring, [g]).unwrap();
        let p = PrimeField::new(DEFAULT_PRIMES[1]).unwrap();
        let red = s.reduce(p).unwrap();
        assert_eq!(red.generators()[0].len(), 2);
    }
}
