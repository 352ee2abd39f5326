//! Jumping numbers of divisors `div(f)` for polynomials that are
//! nondegenerate with respect to their Newton polyhedron.
//!
//! Below coefficient 1 the multiplier ideals of `f` agree with those of its
//! term ideal; at and above 1 they are `(f) * J((c - 1) * f)`. The boundary
//! `c = 1` is always handled by the second rule.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{has_common_torus_zero, DEFAULT_STEP_CAP};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::jumping::{jumps_upto, multiplier_ideal, JumpSpectrum};
use crate::newton::{FaceKind, NewtonPolyhedron};
use crate::poly::{SparsePolynomial, UnivariatePolynomial};
use crate::rational::{self, Rational};

/// Seed used by [`nondegeneracy_check`] for torus sampling in dimension 3+.
pub const DEFAULT_SAMPLING_SEED: u64 = 0x6a75_6d70;
pub const SAMPLES_PER_FACE: usize = 64;

pub fn term_ideal(f: &SparsePolynomial) -> Result<MonomialIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    MonomialIdeal::minimalize(f.support(), f.dimension())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NondegeneracyStatus {
    Proven,
    Refuted,
    Assumed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceVerdict {
    /// Exact certificate that `df_sigma` has no zero on the torus.
    Pass,
    /// Explicit common torus zero of the partials of `f_sigma`.
    Fail,
    /// Only sampled, or the exact computation hit its resource cap.
    Unrefuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    pub face: String,
    pub verdict: FaceVerdict,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NondegeneracyReport {
    pub status: NondegeneracyStatus,
    pub faces: Vec<FaceRecord>,
    /// Present when random torus sampling was used.
    pub seed: Option<u64>,
}

impl NondegeneracyReport {
    fn from_faces(faces: Vec<FaceRecord>, seed: Option<u64>) -> Self {
        let status = if faces.iter().any(|r| r.verdict == FaceVerdict::Fail) {
            NondegeneracyStatus::Refuted
        } else if faces.iter().all(|r| r.verdict == FaceVerdict::Pass) {
            NondegeneracyStatus::Proven
        } else {
            NondegeneracyStatus::Assumed
        };
        NondegeneracyReport { status, faces, seed }
    }

    pub fn first_failure(&self) -> Option<&FaceRecord> {
        self.faces.iter().find(|r| r.verdict == FaceVerdict::Fail)
    }
}

pub fn nondegeneracy_check(f: &SparsePolynomial) -> Result<NondegeneracyReport> {
    nondegeneracy_check_seeded(f, DEFAULT_SAMPLING_SEED)
}

/// Face-by-face test that `df_sigma` never vanishes on the torus.
///
/// In one and two variables every face gets an exact verdict. From three
/// variables on, vertices are decided exactly and the facets and the whole
/// polyhedron are probed at [`SAMPLES_PER_FACE`] random torus points, which
/// can refute but never prove.
pub fn nondegeneracy_check_seeded(f: &SparsePolynomial, seed: u64) -> Result<NondegeneracyReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::UnitPolynomial);
    }
    match f.dimension() {
        1 => Ok(check_univariate(f)),
        2 => check_plane(f),
        _ => check_by_sampling(f, seed),
    }
}

fn univariate_of(g: &SparsePolynomial) -> UnivariatePolynomial {
    let deg = g.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (e, c) in g.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    UnivariatePolynomial::new(coeffs)
}

fn check_univariate(f: &SparsePolynomial) -> NondegeneracyReport {
    let lowest = f.support()[0][0];
    let mut faces = vec![vertex_record(&[lowest])];
    let crit = univariate_of(f).derivative().strip_zero_roots();
    let record = if crit.degree().unwrap_or(0) == 0 {
        FaceRecord {
            face: "full polyhedron".into(),
            verdict: FaceVerdict::Pass,
            evidence: "f' has no nonzero root".into(),
        }
    } else {
        FaceRecord {
            face: "full polyhedron".into(),
            verdict: FaceVerdict::Fail,
            evidence: format!("f' vanishes at the nonzero roots of {crit}"),
        }
    };
    // the unbounded edge and the full polyhedron carry the same f_sigma
    faces.push(FaceRecord {
        face: format!("ray [{lowest}]+k[1]"),
        ..record.clone()
    });
    faces.push(record);
    NondegeneracyReport::from_faces(faces, None)
}

fn vertex_record(v: &[u32]) -> FaceRecord {
    if v.iter().all(|&x| x == 0) {
        FaceRecord {
            face: "vertex origin".into(),
            verdict: FaceVerdict::Pass,
            evidence: "origin exempt: constant term".into(),
        }
    } else {
        FaceRecord {
            face: format!("vertex {v:?}"),
            verdict: FaceVerdict::Pass,
            evidence: "single monomial with nonzero exponent".into(),
        }
    }
}

/// A planar edge face as the Laurent form `t^base * g(u)`, `u = t^delta`.
struct EdgeForm {
    base: Exponent,
    delta: [i64; 2],
    g: UnivariatePolynomial,
}

impl EdgeForm {
    fn new(f: &SparsePolynomial, base: &[u32], delta: [i64; 2], points: &[Exponent]) -> Self {
        let step = |p: &Exponent| -> usize {
            let axis = if delta[0] != 0 { 0 } else { 1 };
            ((p[axis] as i64 - base[axis] as i64) / delta[axis]) as usize
        };
        let top = points.iter().map(step).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); top + 1];
        for p in points {
            coeffs[step(p)] = f.coefficient(p);
        }
        EdgeForm {
            base: base.to_vec(),
            delta,
            g: UnivariatePolynomial::new(coeffs),
        }
    }

    /// `h_i` with `d f_sigma / d t_i = t^(base - e_i) * h_i(u)`.
    fn partial(&self, i: usize) -> UnivariatePolynomial {
        let scaled = self.g.scale(&Rational::from_integer(self.base[i].into()));
        let slope = self
            .g
            .derivative()
            .shift()
            .scale(&Rational::from_integer(self.delta[i].into()));
        scaled.add(&slope)
    }

    fn record(&self, label: String) -> FaceRecord {
        let (h0, h1) = (self.partial(0), self.partial(1));
        let common = h0.gcd(&h1).strip_zero_roots();
        let u = format!("s^{} t^{}", self.delta[0], self.delta[1]);
        if common.is_zero() {
            return FaceRecord {
                face: label,
                verdict: FaceVerdict::Fail,
                evidence: "both partials of f_sigma vanish identically".into(),
            };
        }
        match common.degree() {
            Some(0) => FaceRecord {
                face: label,
                verdict: FaceVerdict::Pass,
                evidence: format!("gcd({h0}, {h1}) has no nonzero root, u = {u}"),
            },
            _ => FaceRecord {
                face: label,
                verdict: FaceVerdict::Fail,
                evidence: format!(
                    "partials of f_sigma share the factor {common} (u = {u}); any nonzero root u0 gives torus zeros with {u} = u0"
                ),
            },
        }
    }
}

fn primitive(from: &[u32], to: &[u32]) -> [i64; 2] {
    let dx = to[0] as i64 - from[0] as i64;
    let dy = to[1] as i64 - from[1] as i64;
    let g = dx.gcd(&dy).max(1);
    [dx / g, dy / g]
}

fn full_face_record(f: &SparsePolynomial) -> FaceRecord {
    let label = "full polyhedron".to_string();
    match has_common_torus_zero(&f.gradient(), DEFAULT_STEP_CAP) {
        Ok(false) => FaceRecord {
            face: label,
            verdict: FaceVerdict::Pass,
            evidence: "partials plus 1 - z*prod(t_i) generate the unit ideal".into(),
        },
        Ok(true) => FaceRecord {
            face: label,
            verdict: FaceVerdict::Fail,
            evidence:
                "Groebner basis of partials plus 1 - z*prod(t_i) is not {1}: the partials share a torus zero"
                    .into(),
        },
        Err(e) => FaceRecord {
            face: label,
            verdict: FaceVerdict::Unrefuted,
            evidence: format!("exact elimination unavailable: {e}"),
        },
    }
}

fn check_plane(f: &SparsePolynomial) -> Result<NondegeneracyReport> {
    let support = f.support();
    let origin = vec![0u32; 2];
    let mut faces = Vec::new();
    if support.contains(&origin) {
        // P(f) is the whole quadrant: origin, the two axes, everything
        faces.push(vertex_record(&origin));
        let up: Vec<_> = support.iter().filter(|p| p[0] == 0).cloned().collect();
        let right: Vec<_> = support.iter().filter(|p| p[1] == 0).cloned().collect();
        faces.push(EdgeForm::new(f, &origin, [0, 1], &up).record("ray [0, 0]+k[0, 1]".into()));
        faces.push(EdgeForm::new(f, &origin, [1, 0], &right).record("ray [0, 0]+k[1, 0]".into()));
        faces.push(full_face_record(f));
        return Ok(NondegeneracyReport::from_faces(faces, None));
    }
    let polyhedron = NewtonPolyhedron::from_points(&support, 2)?;
    for face in polyhedron.faces_2d(&support)? {
        let label = face.label();
        let record = match &face.kind {
            FaceKind::Vertex(v) => vertex_record(v),
            FaceKind::BoundedEdge { from, to, .. } => {
                EdgeForm::new(f, from, primitive(from, to), &face.points).record(label)
            }
            FaceKind::UnboundedEdge { base, direction } => {
                let delta = [direction[0] as i64, direction[1] as i64];
                EdgeForm::new(f, base, delta, &face.points).record(label)
            }
            FaceKind::Full => full_face_record(f),
        };
        faces.push(record);
    }
    Ok(NondegeneracyReport::from_faces(faces, None))
}

fn random_torus_point(rng: &mut ChaCha8Rng, d: usize) -> Vec<Rational> {
    (0..d)
        .map(|_| {
            let mut n: i64 = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) {
                n = -n;
            }
            rational::rat(n, rng.gen_range(1..=9))
        })
        .collect()
}

fn sample_face(
    f: &SparsePolynomial,
    label: String,
    keep: impl Fn(&[u32]) -> bool,
    rng: &mut ChaCha8Rng,
) -> Result<FaceRecord> {
    let f_sigma = f.restrict(keep);
    let partials = f_sigma.gradient();
    for _ in 0..SAMPLES_PER_FACE {
        let point = random_torus_point(rng, f.dimension());
        let mut all_zero = true;
        for p in &partials {
            if !p.evaluate(&point)?.is_zero() {
                all_zero = false;
                break;
            }
        }
        if all_zero {
            let coords: Vec<String> = point.iter().map(rational::format_rational).collect();
            return Ok(FaceRecord {
                face: label,
                verdict: FaceVerdict::Fail,
                evidence: format!("all partials of f_sigma vanish at ({})", coords.join(", ")),
            });
        }
    }
    Ok(FaceRecord {
        face: label,
        verdict: FaceVerdict::Unrefuted,
        evidence: format!("no common zero among {SAMPLES_PER_FACE} random torus points"),
    })
}

fn check_by_sampling(f: &SparsePolynomial, seed: u64) -> Result<NondegeneracyReport> {
    let d = f.dimension();
    let support = f.support();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces = Vec::new();
    if support.iter().any(|p| p.iter().all(|&x| x == 0)) {
        faces.push(vertex_record(&vec![0; d]));
    } else {
        let polyhedron = NewtonPolyhedron::from_points(&support, d)?;
        for v in polyhedron.vertices() {
            faces.push(vertex_record(v));
        }
        for facet in polyhedron.facets() {
            let label = format!("facet {facet}");
            faces.push(sample_face(f, label, |p| facet.is_tight(p), &mut rng)?);
        }
        for &i in polyhedron.coordinate_facets() {
            let label = format!("facet x{} = 0", i + 1);
            faces.push(sample_face(f, label, |p| p[i] == 0, &mut rng)?);
        }
    }
    faces.push(sample_face(f, "full polyhedron".into(), |_| true, &mut rng)?);
    Ok(NondegeneracyReport::from_faces(faces, Some(seed)))
}

/// Refuses degenerate input, and assumed nondegeneracy unless overridden.
pub fn require_nondegenerate(f: &SparsePolynomial, allow_assumed: bool) -> Result<NondegeneracyReport> {
    let report = nondegeneracy_check(f)?;
    match report.status {
        NondegeneracyStatus::Proven => Ok(report),
        NondegeneracyStatus::Assumed if allow_assumed => Ok(report),
        NondegeneracyStatus::Assumed => Err(Error::NondegeneracyAssumed),
        NondegeneracyStatus::Refuted => Err(Error::Degenerate {
            face: report.first_failure().map(|r| r.face.clone()).unwrap_or_default(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorJumpSpectrum {
    /// Jumps in `(0, 1)`, from the term ideal.
    #[serde(with = "rational::serde_vec")]
    pub fractional_jumps: Vec<Rational>,
    pub includes_integers: bool,
    #[serde(with = "rational::serde_str")]
    pub cutoff: Rational,
    /// All jumps `<= cutoff`.
    #[serde(with = "rational::serde_vec")]
    pub jumps: Vec<Rational>,
    pub jumping_length: usize,
}

fn fractional_part_jumps(term: &MonomialIdeal) -> Result<Vec<Rational>> {
    if term.is_unit() {
        return Ok(Vec::new());
    }
    let below_one = jumps_upto(term, &Rational::one())?;
    Ok(below_one
        .jumps
        .into_iter()
        .filter(|x| *x < Rational::one())
        .collect())
}

/// Jumping numbers of `div(f)` up to `c_max`.
pub fn divisor_jumps(
    f: &SparsePolynomial,
    c_max: &Rational,
    allow_assumed: bool,
) -> Result<DivisorJumpSpectrum> {
    if !c_max.is_positive() {
        return Err(Error::NonPositiveCoefficient(c_max.clone()));
    }
    require_nondegenerate(f, allow_assumed)?;
    let fractional = fractional_part_jumps(&term_ideal(f)?)?;
    let top = rational::floor_int(c_max)
        .to_u64()
        .ok_or(Error::Overflow("counting integer shifts"))?;
    let mut jumps = Vec::new();
    for k in 0..=top {
        let shift = Rational::from_integer(k.into());
        jumps.extend(fractional.iter().map(|x| x + &shift).filter(|x| x <= c_max));
        if k >= 1 {
            jumps.push(shift);
        }
    }
    jumps.sort();
    Ok(DivisorJumpSpectrum {
        jumping_length: fractional.len() + 1,
        fractional_jumps: fractional,
        includes_integers: true,
        cutoff: c_max.clone(),
        jumps,
    })
}

/// `J(c * f) = (f)^k * J(r * a_f)` with `c = k + r`, `0 <= r < 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorMultiplierIdeal {
    pub f_power: u64,
    pub monomial_part: MonomialIdeal,
}

impl DivisorMultiplierIdeal {
    pub fn is_unit(&self) -> bool {
        self.f_power == 0 && self.monomial_part.is_unit()
    }
}

impl fmt::Display for DivisorMultiplierIdeal {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let principal = match self.f_power {
            0 => None,
            1 => Some("(f)".to_string()),
            k => Some(format!("(f)^{k}")),
        };
        match (principal, self.monomial_part.is_unit()) {
            (None, _) => write!(out, "{}", self.monomial_part),
            (Some(p), true) => write!(out, "{p}"),
            (Some(p), false) => write!(out, "{p} * {}", self.monomial_part),
        }
    }
}

pub fn divisor_multiplier_ideal(
    f: &SparsePolynomial,
    c: &Rational,
    allow_assumed: bool,
) -> Result<DivisorMultiplierIdeal> {
    if c.is_negative() {
        return Err(Error::NegativeCoefficient(c.clone()));
    }
    require_nondegenerate(f, allow_assumed)?;
    let k = rational::floor_int(c);
    let r = c - Rational::from_integer(k.clone());
    let term = term_ideal(f)?;
    let monomial_part = if r.is_zero() || term.is_unit() {
        MonomialIdeal::unit(f.dimension())
    } else {
        multiplier_ideal(&term, &r)?
    };
    Ok(DivisorMultiplierIdeal {
        f_power: k.to_u64().ok_or(Error::Overflow("taking the power of f"))?,
        monomial_part,
    })
}

/// Jumps of `div(f)` below `min(c_max, 1)` with their multiplicities, read off
/// the term ideal. `c_max = 1` stands for the limit from below.
pub fn divisor_multiplicities(
    f: &SparsePolynomial,
    c_max: &Rational,
    allow_assumed: bool,
) -> Result<JumpSpectrum> {
    if *c_max > Rational::one() {
        return Err(Error::Precondition(format!(
            "multiplicities are read off the term ideal only below 1, got cutoff {c_max}"
        )));
    }
    let term = term_ideal(f)?;
    if term.is_unit() || !term.is_finite_colength()? {
        return Err(Error::InfiniteColength);
    }
    require_nondegenerate(f, allow_assumed)?;
    let mut spectrum = jumps_upto(&term, c_max)?;
    if let Some(last) = spectrum.jumps.last() {
        if last.is_one() {
            spectrum.jumps.pop();
            if let Some(m) = spectrum.multiplicities.as_mut() {
                m.pop();
            }
        }
    }
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(d: usize, terms: &[(i64, &[u32])]) -> SparsePolynomial {
        SparsePolynomial::from_terms(d, terms.iter().map(|(c, e)| (e.to_vec(), int(*c)))).unwrap()
    }

    fn cusp() -> SparsePolynomial {
        poly(2, &[(1, &[3, 0]), (1, &[0, 4])])
    }

    #[test]
    fn term_ideals() {
        assert_eq!(
            term_ideal(&cusp()).unwrap(),
            MonomialIdeal::diagonal(&[3, 4]).unwrap()
        );
        let f = poly(2, &[(1, &[3, 0]), (1, &[0, 4]), (1, &[2, 2])]);
        assert_eq!(term_ideal(&f).unwrap().generators().len(), 3);
        assert_eq!(term_ideal(&SparsePolynomial::zero(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn nondegeneracy_verdicts() {
        let r = nondegeneracy_check(&cusp()).unwrap();
        assert_eq!(r.status, NondegeneracyStatus::Proven);
        assert_eq!(r.seed, None);
        // two vertices, one edge, two rays, the full face
        assert_eq!(r.faces.len(), 6);
        let st = poly(2, &[(1, &[1, 1])]);
        assert_eq!(
            nondegeneracy_check(&st).unwrap().status,
            NondegeneracyStatus::Proven
        );
        let square = poly(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        let r = nondegeneracy_check(&square).unwrap();
        assert_eq!(r.status, NondegeneracyStatus::Refuted);
        assert!(r.first_failure().unwrap().face.starts_with("edge"));
    }

    #[test]
    fn literal_convention_on_unbounded_edges() {
        // s^3 + t^4 + t^5: the t-axis face carries t^4 + t^5, critical at t = -4/5
        let f = poly(2, &[(1, &[3, 0]), (1, &[0, 4]), (1, &[0, 5])]);
        let r = nondegeneracy_check(&f).unwrap();
        assert_eq!(r.status, NondegeneracyStatus::Refuted);
        assert!(r.first_failure().unwrap().face.starts_with("ray"));
    }

    #[test]
    fn constant_term_origin_is_exempt() {
        let f = poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]);
        let r = nondegeneracy_check(&f).unwrap();
        assert_eq!(r.status, NondegeneracyStatus::Proven);
        let spec = divisor_jumps(&f, &int(2), false).unwrap();
        assert_eq!(spec.jumps, vec![int(1), int(2)]);
        assert!(nondegeneracy_check(&poly(2, &[(3, &[0, 0])])).is_err());
    }

    #[test]
    fn one_variable() {
        let pure = poly(1, &[(1, &[4])]);
        assert_eq!(
            nondegeneracy_check(&pure).unwrap().status,
            NondegeneracyStatus::Proven
        );
        let bumpy = poly(1, &[(1, &[2]), (1, &[3])]);
        assert_eq!(
            nondegeneracy_check(&bumpy).unwrap().status,
            NondegeneracyStatus::Refuted
        );
    }

    #[test]
    fn three_variables_are_only_assumed() {
        let f = poly(3, &[(1, &[2, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 5])]);
        let r = nondegeneracy_check(&f).unwrap();
        assert_eq!(r.status, NondegeneracyStatus::Assumed);
        assert_eq!(r.seed, Some(DEFAULT_SAMPLING_SEED));
        assert_eq!(
            divisor_jumps(&f, &int(1), false),
            Err(Error::NondegeneracyAssumed)
        );
        let spec = divisor_jumps(&f, &int(1), true).unwrap();
        // lct of the term ideal is 1/2 + 1/3 + 1/5 = 31/30 > 1
        assert_eq!(spec.jumps, vec![int(1)]);
        assert_eq!(spec.jumping_length, 1);
    }

    #[test]
    fn sampling_refutes_with_a_witness() {
        // (s - t)^2 * u is critical along s = t on the torus
        let f = poly(3, &[(1, &[2, 0, 1]), (-2, &[1, 1, 1]), (1, &[0, 2, 1])]);
        let refuted: Vec<_> = (0..8)
            .map(|seed| nondegeneracy_check_seeded(&f, seed).unwrap())
            .filter(|r| r.status == NondegeneracyStatus::Refuted)
            .collect();
        assert!(!refuted.is_empty());
        for r in refuted {
            assert!(r.first_failure().unwrap().evidence.contains("vanish at"));
        }
    }

    #[test]
    fn cusp_spectrum() {
        let spec = divisor_jumps(&cusp(), &int(1), false).unwrap();
        assert_eq!(spec.jumps, vec![rat(7, 12), rat(5, 6), rat(11, 12), int(1)]);
        assert_eq!(spec.jumping_length, 4);
        let wide = divisor_jumps(&cusp(), &int(2), false).unwrap();
        assert_eq!(wide.jumps.len(), 8);
        assert!(wide.jumps.contains(&rat(19, 12)));
    }

    #[test]
    fn other_spectra() {
        let st = divisor_jumps(&poly(2, &[(1, &[1, 1])]), &int(3), false).unwrap();
        assert_eq!(st.jumps, vec![int(1), int(2), int(3)]);
        assert_eq!(st.jumping_length, 1);
        let a2 = poly(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        let s = divisor_jumps(&a2, &int(1), false).unwrap();
        assert_eq!(s.jumps, vec![rat(5, 6), int(1)]);
        assert_eq!(s.jumping_length, 2);
    }

    #[test]
    fn divisor_ideals() {
        let f = cusp();
        assert!(divisor_multiplier_ideal(&f, &rat(1, 2), false).unwrap().is_unit());
        let at_one = divisor_multiplier_ideal(&f, &int(1), false).unwrap();
        assert_eq!(at_one.f_power, 1);
        assert!(at_one.monomial_part.is_unit());
        assert_eq!(at_one.to_string(), "(f)");
        let later = divisor_multiplier_ideal(&f, &rat(19, 12), false).unwrap();
        assert_eq!(later.f_power, 1);
        assert_eq!(later.monomial_part, MonomialIdeal::maximal(2));
    }

    #[test]
    fn multiplicities_below_one() {
        let k = divisor_multiplicities(&cusp(), &int(1), false).unwrap();
        assert_eq!(k.jumps, vec![rat(7, 12), rat(5, 6), rat(11, 12)]);
        assert_eq!(k.multiplicities, Some(vec![1, 1, 1]));
        let a2 = poly(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        assert_eq!(
            divisor_multiplicities(&a2, &int(1), false)
                .unwrap()
                .kappa_sequence(),
            Some(vec![rat(5, 6)])
        );
        let st = poly(2, &[(1, &[1, 1])]);
        assert_eq!(
            divisor_multiplicities(&st, &int(1), false),
            Err(Error::InfiniteColength)
        );
        assert!(divisor_multiplicities(&cusp(), &int(2), false).is_err());
    }
}
