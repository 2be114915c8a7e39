//! LO degrees, bidegrees, sectional and polar degrees, and the identities
//! relating them.
//!
//! Single-trial functions (`*_trial`) work over one prime field with one seed.
//! [`Analyzer`] runs them under an [`AgreementPolicy`] and reports only values
//! on which every (seed, prime) pair agrees.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::budget::Limits;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::genericity::{random_covector, Agreed, AgreementPolicy, Seed};
use crate::groebner::{count_points, krull_dimension, saturate_by_ideal, Ideal};
use crate::linalg::{minors, AffineForm, AffineMap};
use crate::poly::Polynomial;
use crate::variety::{critical_system, jacobian, point_forms, random_forms, ring_with_params, Method, VarietySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeKind {
    Bidegree,
    Sectional,
    /// `values[i]` is `δ_{i+1}`.
    Polar,
    ChernMather,
}

impl DegreeKind {
    pub fn name(self) -> &'static str {
        match self {
            DegreeKind::Bidegree => "bidegree",
            DegreeKind::Sectional => "sectional",
            DegreeKind::Polar => "polar",
            DegreeKind::ChernMather => "chern_mather",
        }
    }
}

/// An integer sequence indexed `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector {
    pub kind: DegreeKind,
    pub values: Vec<i64>,
    pub d: usize,
    pub n: usize,
}

impl DegreeVector {
    pub fn new(kind: DegreeKind, values: Vec<i64>, n: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty degree vector".into()));
        }
        let d = values.len() - 1;
        if d > n {
            return Err(Error::InvalidArgument(alloc::format!("dimension {d} exceeds ambient dimension {n}")));
        }
        Ok(DegreeVector { kind, values, d, n })
    }
}

/// Both sides of the critical-point correspondence for one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub i: usize,
    pub seed: Seed,
    /// Critical points of `h_u` on `(X ∩ L)_reg`.
    pub count_critical: u64,
    /// Points of the conormal variety over `L x L⊥_u`.
    pub count_conormal: u64,
    /// The bidegree `b_i` the counts are compared with.
    pub expected: u64,
    pub generic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub passed: bool,
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    /// Extra facts the verdict depends on, as (name, value) pairs.
    pub notes: Vec<(String, String)>,
    pub seeds: Vec<Seed>,
    pub primes: Vec<u32>,
}

fn binomial(n: usize, k: usize) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc
            .checked_mul((n - j) as i64)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (j as i64 + 1);
    }
    Ok(acc)
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `b_i = sum_{j>=i} (-1)^{d-j} C(j,i) a_j`.
pub fn bidegrees_from_chern_mather(a: &DegreeVector) -> Result<DegreeVector> {
    if a.kind != DegreeKind::ChernMather {
        return Err(Error::InvalidArgument("expected Chern-Mather coefficients".into()));
    }
    let d = a.d;
    let mut b = vec![0i64; d + 1];
    for (i, bi) in b.iter_mut().enumerate() {
        for j in i..=d {
            let t = (sign(d - j) * binomial(j, i)?)
                .checked_mul(a.values[j])
                .ok_or(Error::Overflow("Chern-Mather transform"))?;
            *bi = bi.checked_add(t).ok_or(Error::Overflow("Chern-Mather transform"))?;
        }
    }
    DegreeVector::new(DegreeKind::Bidegree, b, a.n)
}

/// Inverse of [`bidegrees_from_chern_mather`] by back-substitution.
pub fn chern_mather_from_bidegrees(b: &DegreeVector) -> Result<DegreeVector> {
    if b.kind != DegreeKind::Bidegree && b.kind != DegreeKind::Sectional {
        return Err(Error::InvalidArgument("expected bidegrees".into()));
    }
    let d = b.d;
    let mut a = vec![0i64; d + 1];
    for j in (0..=d).rev() {
        let mut rest = b.values[j];
        for k in j + 1..=d {
            let t = (sign(d - k) * binomial(k, j)?)
                .checked_mul(a[k])
                .ok_or(Error::Overflow("Chern-Mather transform"))?;
            rest = rest.checked_sub(t).ok_or(Error::Overflow("Chern-Mather transform"))?;
        }
        a[j] = sign(d - j) * rest;
    }
    DegreeVector::new(DegreeKind::ChernMather, a, b.n)
}

/// `sum_i (-1)^{d-i} b_i`.
pub fn alternating_sum(b: &DegreeVector) -> Result<i64> {
    b.values.iter().enumerate().try_fold(0i64, |acc, (i, &v)| {
        acc.checked_add(sign(b.d - i) * v).ok_or(Error::Overflow("alternating sum"))
    })
}

// Labels for derived seeds, one range per quantity.
const LABEL_LO: u64 = 0x1000;
const LABEL_BIDEGREE: u64 = 0x2000;
const LABEL_SECTIONAL: u64 = 0x3000;
const LABEL_POLAR: u64 = 0x4000;
const LABEL_DEGREE: u64 = 0x5000;
const LABEL_DUAL: u64 = 0x6000;
const LABEL_CORRESPONDENCE: u64 = 0x7000;

fn count(ideal: &Ideal<PrimeField>, seed: Seed, limits: &Limits<'_>) -> Result<u64> {
    Ok(count_points(ideal, seed, limits)?.points as u64)
}

/// Conormal points over `base` whose covector satisfies `covector`.
fn conormal_count(
    spec: &VarietySpec<PrimeField>,
    codim: usize,
    base: &AffineMap<u32>,
    covector: &[AffineForm<u32>],
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<u64> {
    let sys = critical_system(spec.ring(), spec.generators(), codim, base, covector, method, seed.derive(2))?;
    count(&sys, seed.derive(1), limits)
}

/// Number of critical points of `u . x` on `X_reg`; `u` is random unless given.
pub fn lo_degree_trial(
    spec: &VarietySpec<PrimeField>,
    covector: Option<&[u32]>,
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<u64> {
    let field = *spec.ring().field();
    let n = spec.n();
    let codim = spec.codimension(limits)?;
    let seed = seed.derive(LABEL_LO);
    let u = match covector {
        Some(u) if u.len() != n => {
            return Err(Error::InvalidArgument(alloc::format!("covector has {} entries, expected {n}", u.len())))
        }
        Some(u) => u.to_vec(),
        None => random_covector(&field, n, &mut seed.derive(0).rng()),
    };
    let base = AffineMap::identity(&field, n);
    conormal_count(spec, codim, &base, &point_forms(&field, &u), method, seed, limits)
}

/// `b_i`: conormal points with `x` on `i` random hyperplanes and `u` on `n - i`.
pub fn bidegree_trial(
    spec: &VarietySpec<PrimeField>,
    codim: usize,
    i: usize,
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<u64> {
    let field = *spec.ring().field();
    let n = spec.n();
    let seed = seed.derive(LABEL_BIDEGREE + i as u64);
    let mut rng = seed.derive(0).rng();
    let xs = random_forms(&field, n, i, true, &mut rng);
    let us = random_forms(&field, n, n - i, true, &mut rng);
    let base = AffineMap::solve(&field, n, &xs)?;
    conormal_count(spec, codim, &base, &us, method, seed, limits)
}

/// `s_i`: the LO degree of `X` cut by `i` random hyperplanes.
pub fn sectional_trial(
    spec: &VarietySpec<PrimeField>,
    i: usize,
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<u64> {
    let seed = seed.derive(LABEL_SECTIONAL + i as u64);
    let cut = spec.slice_variety(i, seed.derive(0), limits)?;
    lo_degree_trial(&cut, None, method, seed.derive(1), limits)
}

/// `deg X`: points of `X` cut down to dimension zero.
pub fn degree_trial(spec: &VarietySpec<PrimeField>, d: usize, seed: Seed, limits: &Limits<'_>) -> Result<u64> {
    let seed = seed.derive(LABEL_DEGREE);
    let cut = spec.slice_variety(d, seed.derive(0), limits)?;
    count(&cut.ideal(), seed.derive(1), limits)
}

/// `δ_{i+1}` of the projective closure, given by its generators in
/// `p_0..p_n` (see [`VarietySpec::projective_closure`]).
pub fn polar_trial(
    closure: &VarietySpec<PrimeField>,
    codim: usize,
    i: usize,
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<u64> {
    let field = *closure.ring().field();
    let n1 = closure.n();
    let n = n1 - 1;
    let seed = seed.derive(LABEL_POLAR + i as u64);
    let mut rng = seed.derive(0).rng();
    let minus_one = field.neg(&field.one());
    // i hyperplanes through the cone vertex plus a chart l(p) = 1
    let mut ps = random_forms(&field, n1, i, false, &mut rng);
    let mut chart = random_forms(&field, n1, 1, false, &mut rng);
    chart[0].constant = minus_one;
    ps.append(&mut chart);
    let mut ys = random_forms(&field, n1, n - 1 - i, false, &mut rng);
    let mut chart = random_forms(&field, n1, 1, false, &mut rng);
    chart[0].constant = minus_one;
    ys.append(&mut chart);
    let base = AffineMap::solve(&field, n1, &ps)?;
    conormal_count(closure, codim, &base, &ys, method, seed, limits)
}

/// Does the dual of the projective closure contain `H_∞ = {p_0 = 0}`?
///
/// The covector is restricted to a random affine `planes`-dimensional family
/// `y = e_0 + W t` through `e_0`. The family must have dimension at least
/// `dual codimension + 1` so that it meets the dual in a curve through `e_0`
/// when the dual contains it. Saturating by the rank-`c` locus takes the
/// closure of the smooth conormal over the family; its fibre at `t = 0` is
/// nonempty exactly when `H_∞` is a limit of tangent hyperplanes.
pub fn dual_contains_trial(
    closure: &VarietySpec<PrimeField>,
    codim: usize,
    planes: usize,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<bool> {
    let ring = closure.ring();
    let field = *ring.field();
    let n1 = closure.n();
    let jac0 = jacobian(ring, closure.generators());
    if jac0.iter().all(|row| row[0].is_zero()) {
        // a cone with vertex e_0: every tangent hyperplane passes through
        // e_0, so y_0 vanishes on the whole dual
        return Ok(false);
    }
    let seed = seed.derive(LABEL_DUAL);
    let mut rng = seed.derive(0).rng();
    let big = ring_with_params(ring, "t", planes);
    let into_big: Vec<usize> = (0..n1).collect();
    let lift = |p: &Polynomial<u32>| ring.map_variables(p, &big, &into_big);
    let w = random_forms(&field, n1, planes, false, &mut rng);
    let y: Vec<Polynomial<u32>> = (0..n1)
        .map(|j| {
            let mut e = if j == 0 { big.one() } else { big.zero() };
            for (k, wk) in w.iter().enumerate() {
                e = big.add(&e, &big.scale(&big.var(n1 + k), &wk.coeffs[j]));
            }
            e
        })
        .collect();
    let jac: Vec<Vec<Polynomial<u32>>> = jac0
        .iter()
        .map(|row| row.iter().map(&lift).collect())
        .collect();
    let mut mat = vec![y];
    mat.extend(jac.iter().cloned());
    let gens: Vec<Polynomial<u32>> = closure
        .generators()
        .iter()
        .map(&lift)
        .chain(minors(&big, &mat, codim + 1))
        .collect();
    let mut ideal = Ideal::new(big.clone(), gens);
    let sing = minors(&big, &jac, codim);
    if !sing.is_empty() {
        ideal = saturate_by_ideal(&ideal, &Ideal::new(big.clone(), sing), seed.derive(1), limits)?;
    }
    let fibre = ideal
        .generators()
        .iter()
        .cloned()
        .chain((0..planes).map(|k| big.var(n1 + k)))
        .collect::<Vec<_>>();
    Ok(krull_dimension(&Ideal::new(big.clone(), fibre), limits)? >= 1)
}

/// Both counts of the critical-point correspondence for `L = V(slice)`.
pub fn correspondence_trial(
    spec: &VarietySpec<PrimeField>,
    codim: usize,
    slice: &[AffineForm<u32>],
    u: &[u32],
    method: Method,
    seed: Seed,
    limits: &Limits<'_>,
) -> Result<(u64, u64)> {
    let field = *spec.ring().field();
    let n = spec.n();
    let seed = seed.derive(LABEL_CORRESPONDENCE + slice.len() as u64);
    let (cut, map) = spec.restrict_to(slice)?;
    let k = map.nparams();
    let dirs: Vec<Vec<u32>> = (0..k).map(|l| map.direction(l)).collect();
    let dot = |a: &[u32], b: &[u32]| a.iter().zip(b).fold(0u32, |acc, (x, y)| field.mul_add(acc, *x, *y));
    // h_u restricted to L has linear part D^T u
    let restricted: Vec<u32> = dirs.iter().map(|dl| dot(dl, u)).collect();
    let critical = if slice.is_empty() {
        lo_degree_trial(spec, Some(u), method, seed.derive(0), limits)?
    } else {
        let c_cut = cut.codimension(limits)?;
        if c_cut != codim {
            return Err(Error::DegenerateSlice {
                expected: (n - slice.len()) as i64 - codim as i64,
                found: (cut.n() - c_cut) as i64,
            });
        }
        lo_degree_trial(&cut, Some(&restricted), method, seed.derive(0), limits)?
    };
    // y - u orthogonal to every direction of L
    let forms: Vec<AffineForm<u32>> = dirs
        .iter()
        .zip(&restricted)
        .map(|(dl, r)| AffineForm::new(dl.clone(), field.neg(r)))
        .collect();
    let conormal = conormal_count(spec, codim, &map, &forms, method, seed.derive(1), limits)?;
    Ok((critical, conormal))
}

/// Runs every invariant under the agreement policy for a rational variety.
#[derive(Clone, Debug)]
pub struct Analyzer<'a> {
    spec: VarietySpec<Rationals>,
    pub policy: AgreementPolicy,
    pub seed: Seed,
    pub limits: Limits<'a>,
    pub method: Method,
}

struct Trial {
    spec: VarietySpec<PrimeField>,
    d: usize,
    codim: usize,
}

impl<'a> Analyzer<'a> {
    pub fn new(spec: VarietySpec<Rationals>, seed: Seed, limits: Limits<'a>) -> Self {
        Analyzer {
            spec,
            policy: AgreementPolicy::default(),
            seed,
            limits,
            method: Method::Auto,
        }
    }

    pub fn with_policy(mut self, policy: AgreementPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn spec(&self) -> &VarietySpec<Rationals> {
        &self.spec
    }

    fn trial(&self, field: &PrimeField) -> Result<Trial> {
        let spec = self.spec.reduce(*field)?;
        let d = spec.dimension(&self.limits)?;
        Ok(Trial {
            codim: spec.n() - d,
            spec,
            d,
        })
    }

    fn run<T, C>(&self, mut compute: C) -> Result<Agreed<T>>
    where
        T: PartialEq + Clone + core::fmt::Debug,
        C: FnMut(&Trial, Seed) -> Result<T>,
    {
        self.policy.agreed(self.seed, |seed, field| {
            let t = self.trial(field)?;
            compute(&t, seed)
        })
    }

    fn reduce_vec(field: &PrimeField, v: &[BigRational]) -> Result<Vec<u32>> {
        v.iter().map(|q| field.from_rational(q)).collect()
    }

    /// Krull dimension `d` of `X`.
    pub fn dimension(&self) -> Result<Agreed<usize>> {
        self.run(|t, _| Ok(t.d))
    }

    pub fn lo_degree(&self, covector: Option<&[BigRational]>) -> Result<Agreed<u64>> {
        self.policy.agreed(self.seed, |seed, field| {
            let t = self.trial(field)?;
            let u = covector.map(|c| Self::reduce_vec(field, c)).transpose()?;
            lo_degree_trial(&t.spec, u.as_deref(), self.method, seed, &self.limits)
        })
    }

    pub fn bidegrees(&self) -> Result<Agreed<DegreeVector>> {
        self.run(|t, seed| {
            let values = (0..=t.d)
                .map(|i| bidegree_trial(&t.spec, t.codim, i, self.method, seed, &self.limits).map(|v| v as i64))
                .collect::<Result<Vec<_>>>()?;
            DegreeVector::new(DegreeKind::Bidegree, values, t.spec.n())
        })
    }

    /// `b_i` for a single `i`.
    pub fn bidegree(&self, i: usize) -> Result<Agreed<u64>> {
        self.run(|t, seed| {
            if i > t.d {
                return Err(Error::InvalidArgument(alloc::format!("index {i} exceeds dimension {}", t.d)));
            }
            bidegree_trial(&t.spec, t.codim, i, self.method, seed, &self.limits)
        })
    }

    pub fn sectional_lo_degrees(&self) -> Result<Agreed<DegreeVector>> {
        self.run(|t, seed| {
            let values = (0..=t.d)
                .map(|i| sectional_trial(&t.spec, i, self.method, seed, &self.limits).map(|v| v as i64))
                .collect::<Result<Vec<_>>>()?;
            DegreeVector::new(DegreeKind::Sectional, values, t.spec.n())
        })
    }

    /// `s_i` for a single `i`.
    pub fn sectional_lo_degree(&self, i: usize) -> Result<Agreed<u64>> {
        self.run(|t, seed| {
            if i > t.d {
                return Err(Error::InvalidArgument(alloc::format!("index {i} exceeds dimension {}", t.d)));
            }
            sectional_trial(&t.spec, i, self.method, seed, &self.limits)
        })
    }

    pub fn degree(&self) -> Result<Agreed<u64>> {
        self.run(|t, seed| degree_trial(&t.spec, t.d, seed, &self.limits))
    }

    pub fn polar_degrees(&self) -> Result<Agreed<DegreeVector>> {
        self.run(|t, seed| {
            let closure = t.spec.projective_closure(&self.limits)?;
            let values = (0..=t.d)
                .map(|i| polar_trial(&closure, t.codim, i, self.method, seed, &self.limits).map(|v| v as i64))
                .collect::<Result<Vec<_>>>()?;
            DegreeVector::new(DegreeKind::Polar, values, t.spec.n())
        })
    }

    pub fn dual_contains_hyperplane_at_infinity(&self) -> Result<Agreed<bool>> {
        self.run(|t, seed| {
            let closure = t.spec.projective_closure(&self.limits)?;
            // dual codimension is one more than the number of leading zero polar degrees
            let mut planes = 1;
            for i in 0..=t.d {
                planes = i + 2;
                if polar_trial(&closure, t.codim, i, self.method, seed, &self.limits)? != 0 {
                    break;
                }
            }
            dual_contains_trial(&closure, t.codim, planes.min(closure.n()), seed, &self.limits)
        })
    }

    /// Bidegrees and their Chern-Mather transform.
    pub fn chern_mather(&self) -> Result<(Agreed<DegreeVector>, DegreeVector)> {
        let b = self.bidegrees()?;
        let a = chern_mather_from_bidegrees(&b.value)?;
        Ok((b, a))
    }

    /// Local Euler obstruction at the vertex of a cone.
    pub fn euler_obstruction_at_cone_point(&self) -> Result<(Agreed<DegreeVector>, i64)> {
        if let Some(index) = self.spec.first_inhomogeneous() {
            return Err(Error::NotACone { index });
        }
        let b = self.bidegrees()?;
        let eu = alternating_sum(&b.value)?;
        let a = chern_mather_from_bidegrees(&b.value)?;
        if a.values[0] != eu {
            return Err(Error::InvalidArgument(alloc::format!(
                "alternating sum {eu} disagrees with a_0 = {}",
                a.values[0]
            )));
        }
        Ok((b, eu))
    }

    /// Counts on both sides of the correspondence for `L` of codimension `i`.
    ///
    /// `covector` and `slice` override the random `u` and `L`; the slice must
    /// consist of exactly `i` affine-linear polynomials.
    pub fn critical_correspondence(
        &self,
        i: usize,
        covector: Option<&[BigRational]>,
        slice: Option<&[Polynomial<BigRational>]>,
    ) -> Result<CorrespondenceReport> {
        let n = self.spec.n();
        if let Some(c) = covector {
            if c.len() != n {
                return Err(Error::InvalidArgument(alloc::format!("covector has {} entries, expected {n}", c.len())));
            }
        }
        let slice_forms = match slice {
            Some(polys) => {
                if polys.len() != i {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "{} slice equations given for codimension {i}",
                        polys.len()
                    )));
                }
                let forms = polys
                    .iter()
                    .map(|p| AffineForm::from_polynomial(self.spec.ring(), p))
                    .collect::<Result<Vec<_>>>()?;
                Some(forms)
            }
            None => None,
        };
        let expected = self.bidegree(i)?.value;
        let counts = self.run(|t, seed| {
            let field = *t.spec.ring().field();
            let mut rng = seed.derive(LABEL_CORRESPONDENCE).rng();
            let forms = match &slice_forms {
                Some(fs) => fs
                    .iter()
                    .map(|f| {
                        Ok(AffineForm::new(
                            Self::reduce_vec(&field, &f.coeffs)?,
                            field.from_rational(&f.constant)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => random_forms(&field, n, i, true, &mut rng),
            };
            let u = match covector {
                Some(c) => Self::reduce_vec(&field, c)?,
                None => random_covector(&field, n, &mut rng),
            };
            correspondence_trial(&t.spec, t.codim, &forms, &u, self.method, seed, &self.limits)
        })?;
        let (count_critical, count_conormal) = counts.value;
        Ok(CorrespondenceReport {
            i,
            seed: self.seed,
            count_critical,
            count_conormal,
            expected,
            generic: count_critical == expected && count_conormal == expected,
        })
    }

    /// `s_i = b_i` for every `i`.
    pub fn verify_theorem_bs(&self) -> Result<VerificationReport> {
        let b = self.bidegrees()?;
        let s = self.sectional_lo_degrees()?;
        Ok(VerificationReport {
            identity: "sectional = bidegrees".into(),
            passed: s.value.values == b.value.values,
            left: s.value.values,
            right: b.value.values,
            notes: Vec::new(),
            seeds: b.seeds,
            primes: b.primes,
        })
    }

    /// `b_i = δ_{i+1}` for all `i` exactly when `H_∞` is not in the dual,
    /// and `b_{e-1} < δ_e` (`e` the dual codimension) when it is.
    pub fn verify_polar_relation(&self) -> Result<VerificationReport> {
        let b = self.bidegrees()?;
        let delta = self.polar_degrees()?;
        let contains = self.dual_contains_hyperplane_at_infinity()?.value;
        let bv = &b.value.values;
        let dv = &delta.value.values;
        let equal = bv == dv;
        let mut notes = vec![
            ("equal".into(), alloc::format!("{equal}")),
            ("dual_contains_hyperplane_at_infinity".into(), alloc::format!("{contains}")),
        ];
        let mut passed = equal != contains;
        if contains {
            match dv.iter().position(|&v| v != 0) {
                Some(k) => {
                    let strict = bv[k] < dv[k];
                    notes.push(("dual_codimension".into(), alloc::format!("{}", k + 1)));
                    notes.push(("strict".into(), alloc::format!("{strict}")));
                    passed &= strict;
                }
                None => passed = false,
            }
        }
        Ok(VerificationReport {
            identity: "polar relation".into(),
            passed,
            left: bv.clone(),
            right: dv.clone(),
            notes,
            seeds: b.seeds,
            primes: b.primes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;
    use proptest::prelude::*;

    fn analyzer(names: &[&str], gens: &[&str]) -> Analyzer<'static> {
        let ring = PolyRing::new(Rationals, names.iter().copied(), MonomialOrder::Grevlex);
        let g: Vec<_> = gens.iter().map(|t| parse_polynomial(&ring, t).unwrap()).collect();
        Analyzer::new(VarietySpec::new(ring, g).unwrap(), Seed(2024), Limits::unlimited())
    }

    fn sphere() -> Analyzer<'static> {
        analyzer(&["x", "y", "z"], &["x^2 + y^2 + z^2 - 100"])
    }

    fn dv(kind: DegreeKind, v: &[i64], n: usize) -> DegreeVector {
        DegreeVector::new(kind, v.to_vec(), n).unwrap()
    }

    #[test]
    fn transform_examples() {
        let a = chern_mather_from_bidegrees(&dv(DegreeKind::Bidegree, &[2, 2, 2], 3)).unwrap();
        assert_eq!(a.values, vec![2, 2, 2]);
        let a = chern_mather_from_bidegrees(&dv(DegreeKind::Bidegree, &[1, 4, 5, 3], 4)).unwrap();
        assert_eq!(a.values, vec![1, 3, 4, 3]);
        let a = chern_mather_from_bidegrees(&dv(DegreeKind::Bidegree, &[1], 3)).unwrap();
        assert_eq!(a.values, vec![1]);
        let b = bidegrees_from_chern_mather(&dv(DegreeKind::ChernMather, &[-2, 4], 3)).unwrap();
        assert_eq!(b.values, vec![6, 4]);
        let b = bidegrees_from_chern_mather(&dv(DegreeKind::ChernMather, &[2, 2, 2], 3)).unwrap();
        assert_eq!(b.values, vec![2, 2, 2]);
        assert!(chern_mather_from_bidegrees(&dv(DegreeKind::Polar, &[1], 3)).is_err());
    }

    #[test]
    fn euler_obstruction_is_a0() {
        let b = dv(DegreeKind::Bidegree, &[0, 0, 0, 0, 6, 12, 12, 6, 3], 9);
        assert_eq!(alternating_sum(&b).unwrap(), 3);
        assert_eq!(chern_mather_from_bidegrees(&b).unwrap().values[0], 3);
    }

    proptest! {
        #[test]
        fn transform_roundtrip(n in 0usize..=8, seed in any::<u64>()) {
            let mut rng = Seed(seed).rng();
            let d = (rng.next_below(n as u64 + 1)) as usize;
            let values: Vec<i64> = (0..=d).map(|_| rng.next_below(2001) as i64 - 1000).collect();
            let a = dv(DegreeKind::ChernMather, &values, n.max(d));
            let b = bidegrees_from_chern_mather(&a).unwrap();
            prop_assert_eq!(chern_mather_from_bidegrees(&b).unwrap(), a);
        }
    }

    #[test]
    fn sphere_invariants() {
        let s = sphere();
        assert_eq!(s.lo_degree(None).unwrap().value, 2);
        assert_eq!(s.bidegrees().unwrap().value.values, vec![2, 2, 2]);
        assert_eq!(s.sectional_lo_degrees().unwrap().value.values, vec![2, 2, 2]);
        assert_eq!(s.polar_degrees().unwrap().value.values, vec![2, 2, 2]);
        assert!(!s.dual_contains_hyperplane_at_infinity().unwrap().value);
        assert_eq!(s.degree().unwrap().value, 2);
    }

    #[test]
    fn curve_invariants() {
        let c = analyzer(&["x", "y", "z"], &["x^2 + y^2 + z^2 - 1", "y - x^2"]);
        assert_eq!(c.bidegrees().unwrap().value.values, vec![6, 4]);
        assert_eq!(c.polar_degrees().unwrap().value.values, vec![8, 4]);
        assert!(c.dual_contains_hyperplane_at_infinity().unwrap().value);
        let r = c.verify_polar_relation().unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn linear_space_and_point() {
        let plane = analyzer(&["x1", "x2", "x3"], &["x3"]);
        assert_eq!(plane.bidegrees().unwrap().value.values, vec![0, 0, 1]);
        assert_eq!(plane.sectional_lo_degrees().unwrap().value.values, vec![0, 0, 1]);
        assert_eq!(plane.euler_obstruction_at_cone_point().unwrap().1, 1);
        let origin = analyzer(&["x1", "x2", "x3"], &["x1", "x2", "x3"]);
        assert_eq!(origin.lo_degree(None).unwrap().value, 1);
        assert_eq!(origin.euler_obstruction_at_cone_point().unwrap().1, 1);
        let r = origin.critical_correspondence(0, None, None).unwrap();
        assert_eq!((r.count_critical, r.count_conormal, r.generic), (1, 1, true));
    }

    #[test]
    fn not_a_cone() {
        assert!(matches!(sphere().euler_obstruction_at_cone_point(), Err(Error::NotACone { index: 0 })));
    }

    #[test]
    fn sphere_correspondence_with_explicit_data() {
        let s = sphere();
        let q = |v: i64| BigRational::from_integer(v.into());
        let u = [q(10), q(5), q(17)];
        let l = parse_polynomial(s.spec().ring(), "z - 6").unwrap();
        let r = s.critical_correspondence(1, Some(&u), Some(&[l])).unwrap();
        assert_eq!((r.count_critical, r.count_conormal, r.expected, r.generic), (2, 2, 2, true));
    }

    #[test]
    fn cubic_correspondence_is_not_generic() {
        let c = analyzer(&["x1", "x2", "x3"], &["1 + x1 + x2^2 + x3^3"]);
        let q = |v: i64| BigRational::from_integer(v.into());
        let u = [q(10), q(5), q(17)];
        let l = parse_polynomial(c.spec().ring(), "x3 - 6").unwrap();
        let r = c.critical_correspondence(1, Some(&u), Some(&[l])).unwrap();
        assert_eq!((r.count_critical, r.count_conormal, r.expected, r.generic), (1, 1, 4, false));
        let g = c.critical_correspondence(1, None, None).unwrap();
        assert_eq!((g.count_critical, g.count_conormal, g.generic), (4, 4, true));
    }

    #[test]
    fn minors_and_multipliers_agree_on_bidegrees() {
        for gens in [&["1 + x1 + x2^2 + x3^3"][..], &["x^2 + y^2 + z^2 - 1", "y - x^2"][..]] {
            let names = if gens.len() == 1 { ["x1", "x2", "x3"] } else { ["x", "y", "z"] };
            let a = analyzer(&names, gens).with_method(Method::Lagrange);
            let b = analyzer(&names, gens).with_method(Method::Minors);
            assert_eq!(a.bidegrees().unwrap().value, b.bidegrees().unwrap().value);
        }
    }
}
