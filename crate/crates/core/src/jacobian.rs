//! Fitting ideals of differentials, Tyurina and Milnor numbers, and the
//! inclusions between Jacobian ideals and multiplier ideals.

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{colength_zero_dim, groebner, GroebnerBasis};
use crate::hypersurface::{divisor_jumps, term_ideal};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::jumping::Howald;
use crate::poly::SparsePolynomial;
use crate::rational::{int, Rational};

/// The `d x 2t` matrix whose row `i` is `(f_1, ..., f_t, df_1/dx_i, ..., df_t/dx_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatrix {
    rows: Vec<Vec<SparsePolynomial>>,
}

impl PresentationMatrix {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparsePolynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<SparsePolynomial>] {
        &self.rows
    }

    /// All `m x m` minors, rows and columns taken in lexicographic order.
    pub fn minors(&self, m: usize) -> Vec<SparsePolynomial> {
        let mut out = Vec::new();
        for rows in combinations(self.num_rows(), m) {
            for cols in combinations(self.num_cols(), m) {
                let block: Vec<Vec<&SparsePolynomial>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| &self.rows[i][j]).collect())
                    .collect();
                out.push(determinant(&block));
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first row.
fn determinant(block: &[Vec<&SparsePolynomial>]) -> SparsePolynomial {
    let n = block.len();
    let dim = block[0][0].dimension();
    if n == 1 {
        return block[0][0].clone();
    }
    let mut acc = SparsePolynomial::zero(dim);
    for j in 0..n {
        if block[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<&SparsePolynomial>> = block[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| *p)
                    .collect()
            })
            .collect();
        let term = block[0][j] * &determinant(&sub);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

pub fn jacobian_matrix(generators: &[SparsePolynomial]) -> Result<PresentationMatrix> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Precondition("empty generator list".into()))?;
    let d = first.dimension();
    for g in generators {
        if g.dimension() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: g.dimension(),
            });
        }
    }
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row: Vec<SparsePolynomial> = generators.to_vec();
        for g in generators {
            row.push(g.partial_derivative(i)?);
        }
        rows.push(row);
    }
    Ok(PresentationMatrix { rows })
}

/// Generators of `Jac_m`: the distinct nonzero `m x m` minors. When `m`
/// exceeds both matrix dimensions there are no minors and `Jac_m = (0)`.
pub fn jac_m(generators: &[SparsePolynomial], m: usize) -> Result<Vec<SparsePolynomial>> {
    let a = jacobian_matrix(generators)?;
    if m == 0 {
        return Err(Error::Precondition("minor size must be positive".into()));
    }
    if m > a.num_rows().min(a.num_cols()) {
        return Ok(Vec::new());
    }
    let mut out: Vec<SparsePolynomial> = Vec::new();
    for p in a.minors(m) {
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Largest `N` tried when truncating by `m^N` in [`local_colength`].
pub const LOCAL_DEGREE_CAP: u32 = 64;

/// Global colength, provided every zero sits at the origin: `x_i^n` must lie
/// in the ideal for `n` the colength.
fn colength_if_supported_at_origin(basis: &GroebnerBasis) -> Result<Option<u64>> {
    let lt = basis.leading_term_ideal();
    if !basis.is_unit() && !lt.is_finite_colength()? {
        return Ok(None);
    }
    let n = colength_zero_dim(basis)?;
    if n == 0 {
        return Ok(Some(0));
    }
    let d = basis.dimension();
    for i in 0..d {
        let mut e = vec![0u32; d];
        e[i] = u32::try_from(n).map_err(|_| Error::Overflow("forming a pure power"))?;
        if !basis.contains(&SparsePolynomial::monomial(Rational::one(), e))? {
            return Ok(None);
        }
    }
    Ok(Some(n))
}

fn monomials_of_degree(d: usize, n: u32) -> Vec<SparsePolynomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; d];
    fn go(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<SparsePolynomial>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(SparsePolynomial::monomial(Rational::one(), e.clone()));
            return;
        }
        for x in 0..=left {
            e[i] = x;
            go(i + 1, left - x, e, out);
        }
    }
    go(0, n, &mut e, &mut out);
    out
}

/// Length of `O_0 / I O_0`, the local colength at the origin.
///
/// The colengths of `I + m^N` are the lengths of `A / m^N A` for the local
/// ring `A = O_0 / I O_0`; they increase strictly until `m^N A = 0`
/// (Nakayama), so the first repeated value is the length of `A`. An ideal
/// that is not zero-dimensional at the origin never repeats and is reported
/// once `N` passes [`LOCAL_DEGREE_CAP`].
pub fn local_colength(gens: &[SparsePolynomial]) -> Result<u64> {
    if let Some(n) = colength_if_supported_at_origin(&groebner(gens)?)? {
        return Ok(n);
    }
    let d = gens.first().ok_or(Error::ZeroPolynomial)?.dimension();
    let mut previous = None;
    for n in 1..=LOCAL_DEGREE_CAP {
        let mut truncated = gens.to_vec();
        truncated.extend(monomials_of_degree(d, n));
        let c = colength_zero_dim(&groebner(&truncated)?)?;
        if previous == Some(c) {
            return Ok(c);
        }
        previous = Some(c);
    }
    Err(Error::NotZeroDimensional)
}

/// `(f, df/dx_1, ..., df/dx_d)`.
pub fn jacobian_ideal(f: &SparsePolynomial) -> Vec<SparsePolynomial> {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient().into_iter().filter(|p| !p.is_zero()));
    gens
}

/// Tyurina number at the origin: local colength of `(f, partials)`.
pub fn tyurina(f: &SparsePolynomial) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    local_colength(&jacobian_ideal(f))
}

/// Milnor number at the origin: local colength of the partials.
pub fn milnor(f: &SparsePolynomial) -> Result<u64> {
    let partials: Vec<_> = f.gradient().into_iter().filter(|p| !p.is_zero()).collect();
    if partials.is_empty() {
        return Err(Error::UnitPolynomial);
    }
    local_colength(&partials)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Thm42Case {
    /// `J(a^m)` is the unit ideal: the codimension hypothesis holds vacuously.
    UnitMultiplierIdeal,
    /// Codimension at least `m + 1`: `Jac_m(a) ⊆ J(a^m)`.
    Strict,
    /// Codimension exactly `m`: `Jac_m(a) ⊆ J(a^((1 - e) m))` for all `e > 0`.
    Limit,
    HypothesisNotMet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm42Report {
    pub m: usize,
    pub multiplier_ideal: MonomialIdeal,
    pub height: Option<usize>,
    pub case: Thm42Case,
    #[serde(skip)]
    pub minors: Vec<SparsePolynomial>,
    /// Minor terms violating the inclusion.
    pub offending_terms: Vec<Exponent>,
}

impl Thm42Report {
    pub fn passed(&self) -> bool {
        self.offending_terms.is_empty()
    }
}

fn monomial_generators(ideal: &MonomialIdeal) -> Vec<SparsePolynomial> {
    ideal
        .generators()
        .iter()
        .map(|g| SparsePolynomial::monomial(Rational::one(), g.clone()))
        .collect()
}

pub fn thm_4_2_check(ideal: &MonomialIdeal, m: usize) -> Result<Thm42Report> {
    ideal.ensure_proper_nonzero()?;
    let d = ideal.dimension();
    if m == 0 || m > d {
        return Err(Error::Precondition(format!("m = {m} outside 1..={d}")));
    }
    let howald = Howald::new(ideal)?;
    let j = howald.multiplier_ideal(&int(m as i64))?;
    let minors = jac_m(&monomial_generators(ideal), m)?;
    let (height, case) = if j.is_unit() {
        (None, Thm42Case::UnitMultiplierIdeal)
    } else {
        let h = j.height()?;
        let case = if h > m {
            Thm42Case::Strict
        } else if h == m {
            Thm42Case::Limit
        } else {
            Thm42Case::HypothesisNotMet
        };
        (Some(h), case)
    };
    let bound = int(m as i64);
    let mut offending = Vec::new();
    for p in &minors {
        for (u, _) in p.terms() {
            let ok = match case {
                Thm42Case::UnitMultiplierIdeal | Thm42Case::Strict => j.contains_monomial(u),
                Thm42Case::Limit => howald.xi_of(u)? >= bound,
                Thm42Case::HypothesisNotMet => true,
            };
            if !ok && !offending.contains(u) {
                offending.push(u.clone());
            }
        }
    }
    Ok(Thm42Report {
        m,
        multiplier_ideal: j,
        height,
        case,
        minors,
        offending_terms: offending,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop38Report {
    pub tyurina: u64,
    pub jumping_length: usize,
    /// Terms `u` of `f` or its partials with `xi_u < 1`.
    pub offending_terms: Vec<Exponent>,
    pub length_bound_holds: bool,
}

impl Prop38Report {
    pub fn passed(&self) -> bool {
        self.offending_terms.is_empty() && self.length_bound_holds
    }
}

/// `Jac(f) ⊆ J(f^(1 - e))` for every `e > 0`, and `l(f) <= tau(f) + 1`.
pub fn prop_3_8_check(f: &SparsePolynomial, allow_assumed: bool) -> Result<Prop38Report> {
    let term = term_ideal(f)?;
    if term.is_unit() || !term.is_finite_colength()? {
        return Err(Error::InfiniteColength);
    }
    let spectrum = divisor_jumps(f, &Rational::one(), allow_assumed)?;
    let tau = tyurina(f)?;
    let howald = Howald::new(&term)?;
    let one = Rational::one();
    let mut offending = Vec::new();
    for p in jacobian_ideal(f) {
        for (u, _) in p.terms() {
            if howald.xi_of(u)? < one && !offending.contains(u) {
                offending.push(u.clone());
            }
        }
    }
    Ok(Prop38Report {
        tyurina: tau,
        jumping_length: spectrum.jumping_length,
        offending_terms: offending,
        length_bound_holds: spectrum.jumping_length as u64 <= tau + 1,
    })
}

/// Candidate uniform Artin-Rees numbers for the principal ideal `(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArBounds {
    pub dimension: usize,
    pub jumping_length: usize,
    pub tyurina: u64,
    pub milnor: u64,
    pub dl: u64,
    pub tau_plus_d: u64,
    /// `ceil(mu / 2) + d`; absent in dimension 1.
    pub half_mu_plus_d: Option<u64>,
    /// `mu` is odd, so `mu / 2` was rounded up.
    pub rounded: bool,
}

pub fn ar_bounds(f: &SparsePolynomial, allow_assumed: bool) -> Result<ArBounds> {
    let d = f.dimension() as u64;
    let spectrum = divisor_jumps(f, &Rational::one(), allow_assumed)?;
    let tau = tyurina(f)?;
    let mu = milnor(f)?;
    let l = spectrum.jumping_length as u64;
    Ok(ArBounds {
        dimension: f.dimension(),
        jumping_length: spectrum.jumping_length,
        tyurina: tau,
        milnor: mu,
        dl: d * l,
        tau_plus_d: tau + d,
        half_mu_plus_d: (d >= 2).then_some(mu.div_ceil(2) + d),
        rounded: mu % 2 == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn poly(d: usize, terms: &[(i64, &[u32])]) -> SparsePolynomial {
        SparsePolynomial::from_terms(d, terms.iter().map(|(c, e)| (e.to_vec(), int(*c)))).unwrap()
    }

    fn mono(e: &[u32]) -> SparsePolynomial {
        SparsePolynomial::monomial(Rational::one(), e.to_vec())
    }

    fn cusp() -> SparsePolynomial {
        poly(2, &[(1, &[3, 0]), (1, &[0, 4])])
    }

    #[test]
    fn matrix_shapes() {
        let a = jacobian_matrix(&[mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert_eq!((a.num_rows(), a.num_cols()), (2, 4));
        let one = SparsePolynomial::one(2);
        let zero = SparsePolynomial::zero(2);
        assert_eq!(
            a.rows()[0],
            vec![mono(&[1, 0]), mono(&[0, 1]), one.clone(), zero.clone()]
        );
        assert_eq!(a.rows()[1], vec![mono(&[1, 0]), mono(&[0, 1]), zero, one]);
        let b = jacobian_matrix(&[mono(&[3, 0]), mono(&[0, 4])]).unwrap();
        assert_eq!(*b.entry(0, 2), poly(2, &[(3, &[2, 0])]));
        assert_eq!(*b.entry(1, 3), poly(2, &[(4, &[0, 3])]));
        assert!(b.entry(0, 3).is_zero());
        assert!(jacobian_matrix(&[]).is_err());
    }

    #[test]
    fn two_by_two_minors_match_ad_minus_bc() {
        let f = poly(2, &[(1, &[2, 1]), (3, &[0, 2])]);
        let g = poly(2, &[(2, &[1, 1]), (-1, &[3, 0])]);
        let a = jacobian_matrix(&[f, g]).unwrap();
        let minors = a.minors(2);
        let mut k = 0;
        for c1 in 0..4 {
            for c2 in c1 + 1..4 {
                let ad = a.entry(0, c1) * a.entry(1, c2);
                let bc = a.entry(0, c2) * a.entry(1, c1);
                assert_eq!(minors[k], &ad - &bc);
                k += 1;
            }
        }
    }

    #[test]
    fn first_fitting_ideal_of_a_hypersurface() {
        let f = cusp();
        let jac = jac_m(std::slice::from_ref(&f), 1).unwrap();
        assert_eq!(jac, jacobian_ideal(&f));
        let unit = jac_m(&[mono(&[1, 0]), mono(&[0, 1])], 2).unwrap();
        assert!(unit.iter().any(SparsePolynomial::is_unit));
        assert!(jac_m(&[SparsePolynomial::one(2)], 1).unwrap()[0].is_unit());
        assert!(jac_m(std::slice::from_ref(&f), 3).unwrap().is_empty());
        assert!(jac_m(&[f], 0).is_err());
    }

    #[test]
    fn tyurina_and_milnor() {
        assert_eq!(tyurina(&cusp()).unwrap(), 6);
        assert_eq!(milnor(&cusp()).unwrap(), 6);
        let a2 = poly(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        assert_eq!((tyurina(&a2).unwrap(), milnor(&a2).unwrap()), (2, 2));
        let e = poly(2, &[(1, &[5, 0]), (1, &[0, 4])]);
        assert_eq!((tyurina(&e).unwrap(), milnor(&e).unwrap()), (12, 12));
        assert_eq!(milnor(&mono(&[1, 1])).unwrap(), 1);
        assert_eq!(tyurina(&mono(&[1, 0])).unwrap(), 0);
        assert_eq!(milnor(&poly(2, &[(1, &[1, 0]), (2, &[0, 1])])).unwrap(), 0);
    }

    #[test]
    fn tyurina_differs_from_milnor_off_quasi_homogeneous() {
        // x^5 + y^4 + x^3 y^2 has further critical points off the origin;
        // only the local numbers at 0 are reported
        let f = poly(2, &[(1, &[5, 0]), (1, &[0, 4]), (1, &[3, 2])]);
        let (t, m) = (tyurina(&f).unwrap(), milnor(&f).unwrap());
        assert_eq!((t, m), (11, 12));
    }

    #[test]
    fn only_the_origin_counts() {
        // (s - 1)^2 + t^2 is singular at (1, 0) only
        let f = poly(2, &[(1, &[2, 0]), (-2, &[1, 0]), (1, &[0, 0]), (1, &[0, 2])]);
        assert_eq!(tyurina(&f).unwrap(), 0);
        // s^2 + t^3 - t^2: a node at the origin, partials also vanish at (0, 2/3)
        let g = poly(2, &[(1, &[2, 0]), (1, &[0, 3]), (-1, &[0, 2])]);
        assert_eq!((tyurina(&g).unwrap(), milnor(&g).unwrap()), (1, 1));
        // a curve of singular points through the origin
        let h = poly(2, &[(1, &[2, 0])]);
        assert_eq!(milnor(&h), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn local_and_global_agree_when_supported_at_origin() {
        let f = poly(2, &[(1, &[4, 0]), (1, &[0, 4]), (1, &[2, 2])]);
        let global = colength_zero_dim(&groebner(&f.gradient()).unwrap()).unwrap();
        assert_eq!(milnor(&f).unwrap(), global);
    }

    #[test]
    fn theorem_4_2_examples() {
        let m = MonomialIdeal::maximal(2);
        let r = thm_4_2_check(&m, 2).unwrap();
        assert_eq!(r.case, Thm42Case::Limit);
        assert_eq!(r.multiplier_ideal, m);
        assert!(r.passed());
        assert!(r.minors.iter().any(SparsePolynomial::is_unit));

        let cusp = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        let r = thm_4_2_check(&cusp, 1).unwrap();
        assert_eq!((r.case.clone(), r.height), (Thm42Case::Strict, Some(2)));
        // xi = (v1 + 1)/3 + (v2 + 1)/4 > 1 exactly off {1, s, t}
        assert_eq!(r.multiplier_ideal, MonomialIdeal::maximal(2).power(2).unwrap());
        assert!(r.passed());

        let st = MonomialIdeal::minimalize(vec![vec![1, 1]], 2).unwrap();
        let r = thm_4_2_check(&st, 1).unwrap();
        assert_eq!((r.case.clone(), r.height), (Thm42Case::Limit, Some(1)));
        assert!(r.passed());
        assert!(thm_4_2_check(&st, 3).is_err());
    }

    #[test]
    fn proposition_3_8() {
        let r = prop_3_8_check(&cusp(), false).unwrap();
        assert!(r.passed());
        assert_eq!((r.jumping_length, r.tyurina), (4, 6));
        let a2 = poly(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        let r = prop_3_8_check(&a2, false).unwrap();
        assert_eq!((r.jumping_length, r.tyurina), (2, 2));
        assert!(r.passed());
        assert_eq!(
            prop_3_8_check(&mono(&[1, 1]), false),
            Err(Error::InfiniteColength)
        );
    }

    #[test]
    fn artin_rees_bounds() {
        let b = ar_bounds(&cusp(), false).unwrap();
        assert_eq!((b.dl, b.tau_plus_d, b.half_mu_plus_d), (8, 8, Some(5)));
        assert!(!b.rounded);
        let a2 = ar_bounds(&poly(2, &[(1, &[2, 0]), (1, &[0, 3])]), false).unwrap();
        assert_eq!((a2.dl, a2.tau_plus_d, a2.half_mu_plus_d), (4, 4, Some(3)));
        let smooth = ar_bounds(&mono(&[1, 0]), false).unwrap();
        assert_eq!(
            (smooth.dl, smooth.tau_plus_d, smooth.half_mu_plus_d),
            (2, 2, Some(2))
        );
        let a1 = ar_bounds(&poly(2, &[(1, &[2, 0]), (1, &[0, 2])]), false).unwrap();
        assert_eq!(a1.milnor, 1);
        assert!(a1.rounded);
        assert_eq!(a1.half_mu_plus_d, Some(3));
        let _ = rat(1, 2);
    }
}
