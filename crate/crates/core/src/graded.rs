//! Asymptotic jumping numbers of two polyhedral graded families: the
//! diagonal family with weights `mu_i` and the hyperbola family bounded by
//! `(a - 1)(b - 1) >= 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A positive weight, exact or known only up to a certified radius.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuEntry {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    /// The true weight lies in `[value - radius, value + radius]`.
    #[serde(with = "rational::serde_str")]
    pub radius: Rational,
    /// Name of the approximated number, `None` when exact.
    pub name: Option<String>,
}

impl MuEntry {
    pub fn exact(value: Rational) -> Self {
        MuEntry {
            value,
            radius: Rational::zero(),
            name: None,
        }
    }

    pub fn approximation(name: impl Into<String>, value: Rational, radius: Rational) -> Self {
        MuEntry {
            value,
            radius,
            name: Some(name.into()),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.radius.is_zero()
    }

    fn lower(&self) -> Rational {
        &self.value - &self.radius
    }

    fn upper(&self) -> Rational {
        &self.value + &self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Member,
    NotMember,
    Undecided,
}

/// `a_k` spanned by the monomials with `sum e_i / mu_i >= k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalFamily {
    mu: Vec<MuEntry>,
}

impl DiagonalFamily {
    pub fn new(mu: Vec<MuEntry>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for m in &mu {
            if m.radius.is_negative() || !m.lower().is_positive() {
                return Err(Error::NonPositiveCoefficient(m.lower()));
            }
        }
        Ok(DiagonalFamily { mu })
    }

    pub fn exact(mu: &[Rational]) -> Result<Self> {
        Self::new(mu.iter().cloned().map(MuEntry::exact).collect())
    }

    pub fn dimension(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[MuEntry] {
        &self.mu
    }

    pub fn is_exact(&self) -> bool {
        self.mu.iter().all(MuEntry::is_exact)
    }

    fn exact_values(&self) -> Result<Vec<Rational>> {
        if !self.is_exact() {
            return Err(Error::Precondition("this operation needs exact weights".into()));
        }
        Ok(self.mu.iter().map(|m| m.value.clone()).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.is_exact() && self.mu.iter().all(|m| m.value.is_integer())
    }

    /// `sum 1 / mu_i`, the value at `v = 0`.
    pub fn lct(&self) -> Result<Rational> {
        Ok(self.exact_values()?.iter().map(|m| m.recip()).sum())
    }

    /// Bounds on `sum (v_i + 1) / mu_i`.
    fn weight_interval(&self, v: &[u32]) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (m, &x) in self.mu.iter().zip(v) {
            let k = Rational::from_integer(BigInt::from(x) + 1);
            lo += &k / m.upper();
            hi += &k / m.lower();
        }
        (lo, hi)
    }
}

/// `t^v` lies in the asymptotic multiplier ideal at `c` iff
/// `sum (v_i + 1) / mu_i > c`.
pub fn diagonal_member(family: &DiagonalFamily, v: &[u32], c: &Rational) -> Result<Membership> {
    if v.len() != family.dimension() {
        return Err(Error::DimensionMismatch {
            expected: family.dimension(),
            found: v.len(),
        });
    }
    let (lo, hi) = family.weight_interval(v);
    Ok(if lo > *c {
        Membership::Member
    } else if hi <= *c {
        Membership::NotMember
    } else {
        Membership::Undecided
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedJump {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    /// Zero for exact families; otherwise the true value is within this of
    /// `value`.
    #[serde(with = "rational::serde_str")]
    pub radius: Rational,
    /// Every parameter tuple in the window producing this value.
    pub params: Vec<Vec<u32>>,
}

impl GradedJump {
    pub fn multiplicity(&self) -> u64 {
        self.params.len() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedJumpStream {
    pub family: String,
    /// Inclusive upper bounds on the parameters.
    pub window: Vec<u32>,
    #[serde(with = "rational::serde_str")]
    pub cutoff: Rational,
    pub jumps: Vec<GradedJump>,
}

impl GradedJumpStream {
    pub fn values(&self) -> Vec<Rational> {
        self.jumps.iter().map(|j| j.value.clone()).collect()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.jumps.binary_search_by(|j| j.value.cmp(x)).is_ok()
    }

    pub fn count_in_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.jumps
            .iter()
            .filter(|j| j.value > *lo && j.value < *hi)
            .count()
    }

    /// Values repeated by the number of generating tuples.
    pub fn kappa_sequence(&self) -> Vec<Rational> {
        self.jumps
            .iter()
            .flat_map(|j| std::iter::repeat_n(j.value.clone(), j.params.len()))
            .collect()
    }
}

fn collect_stream(
    family: String,
    window: Vec<u32>,
    cutoff: &Rational,
    found: BTreeMap<Rational, (Rational, Vec<Vec<u32>>)>,
) -> GradedJumpStream {
    GradedJumpStream {
        family,
        window,
        cutoff: cutoff.clone(),
        jumps: found
            .into_iter()
            .map(|(value, (radius, params))| GradedJump {
                value,
                radius,
                params,
            })
            .collect(),
    }
}

/// All values `sum (e_i + 1) / mu_i <= c_max` with `e_i <= ceil(c_max * mu_i)`.
pub fn diagonal_jumps(family: &DiagonalFamily, c_max: &Rational) -> Result<GradedJumpStream> {
    if !c_max.is_positive() {
        return Err(Error::NonPositiveCoefficient(c_max.clone()));
    }
    let window: Vec<u32> = family
        .mu
        .iter()
        .map(|m| {
            rational::ceil_int(&(c_max * m.upper()))
                .to_u32()
                .ok_or(Error::Overflow("sizing the parameter window"))
        })
        .collect::<Result<_>>()?;
    let centers: Vec<Rational> = family.mu.iter().map(|m| m.value.recip()).collect();
    let slack: Vec<Rational> = family
        .mu
        .iter()
        .map(|m| m.lower().recip() - m.value.recip())
        .collect();
    let mut found: BTreeMap<Rational, (Rational, Vec<Vec<u32>>)> = BTreeMap::new();
    let mut e = vec![0u32; family.dimension()];
    enumerate(
        0,
        &mut e,
        &window,
        &Rational::zero(),
        &centers,
        c_max,
        &mut |e, value| {
            let radius: Rational = e
                .iter()
                .zip(&slack)
                .map(|(&x, s)| Rational::from_integer(BigInt::from(x) + 1) * s)
                .sum();
            found
                .entry(value)
                .or_insert_with(|| (radius, Vec::new()))
                .1
                .push(e.to_vec());
        },
    );
    let name = format!(
        "diagonal mu = ({})",
        family
            .mu
            .iter()
            .map(|m| rational::format_rational(&m.value))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(collect_stream(name, window, c_max, found))
}

fn enumerate(
    i: usize,
    e: &mut Vec<u32>,
    window: &[u32],
    partial: &Rational,
    inv: &[Rational],
    c_max: &Rational,
    visit: &mut impl FnMut(&[u32], Rational),
) {
    for x in 0..=window[i] {
        e[i] = x;
        let here = partial + Rational::from_integer(BigInt::from(x) + 1) * &inv[i];
        // the remaining coordinates contribute at least 1 / mu_j each
        let rest: Rational = inv[i + 1..].iter().sum();
        if &here + &rest > *c_max {
            break;
        }
        if i + 1 == e.len() {
            visit(e, here);
        } else {
            enumerate(i + 1, e, window, &here, inv, c_max, visit);
        }
    }
    e[i] = 0;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `xi` is a jump but `xi + 1` is not.
    Forward,
    /// `xi >= d - 1` is not a jump but `xi + 1` is.
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum NonperiodicityVerdict {
    Witness {
        #[serde(with = "rational::serde_str")]
        xi: Rational,
        direction: Direction,
        #[serde(with = "rational::serde_str")]
        window: Rational,
    },
    NoWitnessInWindow {
        #[serde(with = "rational::serde_str")]
        window: Rational,
    },
    /// All weights integral: the family is the diagonal ideal family and is
    /// periodic from `d - 1` on.
    NotApplicable,
}

/// Searches `[0, 3L + d]`, `L` the lcm of the numerators of the weights, for
/// a failure of period-1 behaviour; forward failures first.
pub fn nonperiodicity_demo(family: &DiagonalFamily) -> Result<NonperiodicityVerdict> {
    let mu = family.exact_values()?;
    if family.is_integral() {
        return Ok(NonperiodicityVerdict::NotApplicable);
    }
    let l = mu.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.numer()));
    let d = family.dimension() as i64;
    let window = Rational::from_integer(l * 3 + d);
    let stream = diagonal_jumps(family, &window)?;
    let one = Rational::one();
    let values = stream.values();
    for xi in &values {
        let next = xi + &one;
        if next <= window && !stream.contains(&next) {
            return Ok(NonperiodicityVerdict::Witness {
                xi: xi.clone(),
                direction: Direction::Forward,
                window,
            });
        }
    }
    let floor = Rational::from_integer(BigInt::from(d - 1));
    for eta in &values {
        let xi = eta - &one;
        if xi >= floor && !stream.contains(&xi) {
            return Ok(NonperiodicityVerdict::Witness {
                xi,
                direction: Direction::Backward,
                window,
            });
        }
    }
    Ok(NonperiodicityVerdict::NoWitnessInWindow { window })
}

/// Upper bound `prod (ceil(L * mu_i) + 1)` on the number of jumps `<= L`.
pub fn diagonal_jump_count_bound(family: &DiagonalFamily, l: &Rational) -> Result<BigInt> {
    Ok(family
        .mu
        .iter()
        .map(|m| rational::ceil_int(&(l * m.upper())) + BigInt::one())
        .product())
}

/// `(e + 1)(f + 1) / (e + f + 2)`.
pub fn hyperbola_value(e: u32, f: u32) -> Rational {
    let (a, b) = (BigInt::from(e) + 1, BigInt::from(f) + 1);
    Rational::new(&a * &b, a + b)
}

pub fn hyperbola_lct() -> Rational {
    hyperbola_value(0, 0)
}

/// `(v + 1) / c` lies in the interior of the region `(a - 1)(b - 1) >= 1`,
/// `a, b > 1`.
pub fn hyperbola_member(v: &[u32], c: &Rational) -> Result<bool> {
    if v.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: v.len(),
        });
    }
    if !c.is_positive() {
        return Err(Error::NonPositiveCoefficient(c.clone()));
    }
    let one = Rational::one();
    let a = Rational::from_integer(BigInt::from(v[0]) + 1) / c;
    let b = Rational::from_integer(BigInt::from(v[1]) + 1) / c;
    Ok(a > one && b > one && (&a - &one) * (&b - &one) > one)
}

/// Distinct values `(e + 1)(f + 1) / (e + f + 2) <= c_max`, `0 <= e, f <= window`.
pub fn hyperbola_jumps(window: u32, c_max: &Rational) -> Result<GradedJumpStream> {
    if !c_max.is_positive() {
        return Err(Error::NonPositiveCoefficient(c_max.clone()));
    }
    let mut found: BTreeMap<Rational, (Rational, Vec<Vec<u32>>)> = BTreeMap::new();
    for e in 0..=window {
        for f in 0..=window {
            let value = hyperbola_value(e, f);
            if value <= *c_max {
                found
                    .entry(value)
                    .or_insert_with(|| (Rational::zero(), Vec::new()))
                    .1
                    .push(vec![e, f]);
            }
        }
    }
    Ok(collect_stream(
        "hyperbola".into(),
        vec![window, window],
        c_max,
        found,
    ))
}

/// A parameter pair with `hyperbola_value = n`, searching `e <= f <= bound`.
pub fn integer_occurrence(n: u32, bound: u32) -> Option<(u32, u32)> {
    let target = Rational::from_integer(n.into());
    (0..=bound)
        .flat_map(|e| (e..=bound).map(move |f| (e, f)))
        .find(|&(e, f)| hyperbola_value(e, f) == target)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub n: u32,
    #[serde(with = "rational::serde_str")]
    pub epsilon: Rational,
    pub window: u32,
    pub doubled_window: u32,
    /// Distinct jumps in `(n - epsilon, n)` at the two windows.
    pub left: (usize, usize),
    /// Distinct jumps in `(n, n + epsilon)` at the two windows.
    pub right: (usize, usize),
    /// Every jump in `(n, n + epsilon)` has both parameters at most this.
    pub right_threshold: u32,
}

impl ClusterReport {
    pub fn left_grows(&self) -> bool {
        self.left.1 > self.left.0
    }

    /// `None` while the window is below the threshold.
    pub fn right_stable(&self) -> Option<bool> {
        (self.window >= self.right_threshold).then_some(self.right.0 == self.right.1)
    }

    pub fn passed(&self) -> bool {
        self.left_grows() && self.right_stable().unwrap_or(true)
    }
}

/// With `a = e + 1`, `b = f + 1`, a value in `(n, n + eps)` needs
/// `a, b >= n + 1` and `b < (n + eps) a / (a - n - eps)`; the latter exceeds
/// `n` only while `a < (n + 1)(n + eps) / (1 - eps)`.
fn right_threshold(n: u32, epsilon: &Rational) -> Result<u32> {
    let n1 = Rational::from_integer(BigInt::from(n) + 1);
    let bound = &n1 * (Rational::from_integer(n.into()) + epsilon) / (Rational::one() - epsilon);
    // largest integer a strictly below the bound, then e = a - 1
    let a_max = rational::ceil_int(&bound) - BigInt::one();
    (a_max - BigInt::one())
        .to_u32()
        .ok_or(Error::Overflow("computing the stability threshold"))
}

pub fn cluster_diagnostics(window: u32, n: u32, epsilon: &Rational) -> Result<ClusterReport> {
    let half = Rational::new(1.into(), 2.into());
    if n == 0 || !epsilon.is_positive() || *epsilon >= half {
        return Err(Error::Precondition(
            "cluster diagnostics need n >= 1 and 0 < epsilon < 1/2".into(),
        ));
    }
    let doubled = window
        .checked_mul(2)
        .ok_or(Error::Overflow("doubling the window"))?;
    let nr = Rational::from_integer(n.into());
    let top = &nr + epsilon;
    let small = hyperbola_jumps(window, &top)?;
    let large = hyperbola_jumps(doubled, &top)?;
    let lo = &nr - epsilon;
    Ok(ClusterReport {
        n,
        epsilon: epsilon.clone(),
        window,
        doubled_window: doubled,
        left: (small.count_in_open(&lo, &nr), large.count_in_open(&lo, &nr)),
        right: (small.count_in_open(&nr, &top), large.count_in_open(&nr, &top)),
        right_threshold: right_threshold(n, epsilon)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop58Report {
    pub eligible: usize,
    /// Jumps `xi` with no jump in `(xi, xi + lct]`.
    #[serde(with = "rational::serde_vec")]
    pub violations: Vec<Rational>,
}

impl Prop58Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Gap check on the jumps `xi` with `xi + lct <= cutoff - margin`.
pub fn prop_5_8_check(stream: &GradedJumpStream, lct: &Rational, margin: &Rational) -> Prop58Report {
    let limit = &stream.cutoff - margin;
    let values = stream.values();
    let mut eligible = 0;
    let mut violations = Vec::new();
    for (k, xi) in values.iter().enumerate() {
        let reach = xi + lct;
        if reach > limit {
            continue;
        }
        eligible += 1;
        if !values.get(k + 1).is_some_and(|next| *next <= reach) {
            violations.push(xi.clone());
        }
    }
    Prop58Report { eligible, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn family(mu: &[Rational]) -> DiagonalFamily {
        DiagonalFamily::exact(mu).unwrap()
    }

    #[test]
    fn diagonal_membership() {
        let f = family(&[int(2), int(3)]);
        assert_eq!(
            diagonal_member(&f, &[0, 0], &rat(5, 6)).unwrap(),
            Membership::NotMember
        );
        assert_eq!(
            diagonal_member(&f, &[0, 0], &rat(1, 2)).unwrap(),
            Membership::Member
        );
        let ones = family(&[int(1), int(1), int(1)]);
        assert_eq!(
            diagonal_member(&ones, &[0, 0, 0], &rat(5, 2)).unwrap(),
            Membership::Member
        );
        assert_eq!(
            diagonal_member(&ones, &[0, 0, 0], &int(3)).unwrap(),
            Membership::NotMember
        );
        assert!(diagonal_member(&f, &[0], &int(1)).is_err());
    }

    #[test]
    fn approximate_weights_are_three_valued() {
        // sqrt 2 within 1/1000 of 1414/1000
        let sqrt2 = MuEntry::approximation("sqrt2", rat(1414, 1000), rat(1, 1000));
        let f = DiagonalFamily::new(vec![sqrt2]).unwrap();
        // 1 / sqrt 2 ~ 0.7071
        assert_eq!(
            diagonal_member(&f, &[0], &rat(7, 10)).unwrap(),
            Membership::Member
        );
        assert_eq!(
            diagonal_member(&f, &[0], &rat(71, 100)).unwrap(),
            Membership::NotMember
        );
        assert_eq!(
            diagonal_member(&f, &[0], &rat(7071, 10000)).unwrap(),
            Membership::Undecided
        );
        let s = diagonal_jumps(&f, &int(2)).unwrap();
        assert_eq!(s.jumps.len(), 2);
        assert!(s.jumps.iter().all(|j| j.radius.is_positive()));
        assert!(f.lct().is_err());
    }

    #[test]
    fn diagonal_spectra() {
        let s = diagonal_jumps(&family(&[int(2), int(3)]), &rat(3, 2)).unwrap();
        assert_eq!(s.values(), vec![rat(5, 6), rat(7, 6), rat(4, 3), rat(3, 2)]);
        assert_eq!(s.jumps[2].params, vec![vec![1, 0]]);
        let one = diagonal_jumps(&family(&[rat(3, 2)]), &int(3)).unwrap();
        assert_eq!(one.values(), vec![rat(2, 3), rat(4, 3), int(2), rat(8, 3)]);
    }

    #[test]
    fn nonperiodicity() {
        let v = nonperiodicity_demo(&family(&[rat(3, 2)])).unwrap();
        match v {
            NonperiodicityVerdict::Witness { xi, direction, .. } => {
                assert_eq!((xi, direction), (rat(2, 3), Direction::Forward));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            nonperiodicity_demo(&family(&[int(2), int(3)])).unwrap(),
            NonperiodicityVerdict::NotApplicable
        );
        // with mu_2 = 1 every jump xi has xi + 1 a jump; the failure is backward
        match nonperiodicity_demo(&family(&[rat(5, 2), int(1)])).unwrap() {
            NonperiodicityVerdict::Witness { xi, direction, .. } => {
                assert_eq!((xi, direction), (rat(6, 5), Direction::Backward));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hyperbola_membership() {
        assert!(hyperbola_member(&[0, 0], &rat(1, 4)).unwrap());
        assert!(!hyperbola_member(&[0, 0], &rat(1, 2)).unwrap());
        assert!(!hyperbola_member(&[5, 2], &int(2)).unwrap());
        assert!(hyperbola_member(&[5, 2], &rat(199, 100)).unwrap());
        assert!(hyperbola_member(&[0], &int(1)).is_err());
    }

    #[test]
    fn hyperbola_values() {
        let s = hyperbola_jumps(1, &int(1)).unwrap();
        assert_eq!(s.values(), vec![rat(1, 2), rat(2, 3), int(1)]);
        assert_eq!(hyperbola_value(5, 2), int(2));
        assert_eq!(hyperbola_lct(), rat(1, 2));
        for n in 1..=5 {
            let (e, f) = integer_occurrence(n, n * n + n).unwrap();
            assert_eq!(hyperbola_value(e, f), int(n as i64));
        }
    }

    #[test]
    fn clusters() {
        let eps = rat(1, 10);
        let r = cluster_diagnostics(20, 1, &eps).unwrap();
        assert_eq!(r.left, (12, 32));
        assert_eq!(r.right, (0, 0));
        assert!(r.passed());
        let r2 = cluster_diagnostics(20, 2, &eps).unwrap();
        assert_eq!(r2.left, (0, 3));
        assert!(r2.left_grows());
        assert_eq!(r2.right_stable(), Some(true));
        // near 3 the left cluster starts at b = e + 1 > 87, beyond E = 40
        let r3 = cluster_diagnostics(20, 3, &eps).unwrap();
        assert_eq!((r3.left, r3.right), ((2, 2), (2, 2)));
        let r3 = cluster_diagnostics(50, 3, &eps).unwrap();
        assert!(r3.passed());
        assert!(cluster_diagnostics(20, 1, &rat(1, 2)).is_err());
    }

    #[test]
    fn right_threshold_matches_enumeration() {
        for n in 1..=4u32 {
            let eps = rat(1, 10);
            let t = right_threshold(n, &eps).unwrap();
            let wide = hyperbola_jumps(4 * t + 10, &(int(n as i64) + &eps)).unwrap();
            let nr = int(n as i64);
            for j in &wide.jumps {
                if j.value > nr && j.value < &nr + &eps {
                    assert!(j.params.iter().all(|p| p[0] <= t && p[1] <= t));
                }
            }
        }
    }

    #[test]
    fn gaps_are_bounded_by_the_lct() {
        let s = hyperbola_jumps(50, &int(4)).unwrap();
        let r = prop_5_8_check(&s, &hyperbola_lct(), &rat(1, 2));
        assert!(r.eligible > 0 && r.passed());
        let f = family(&[int(2), int(3)]);
        let d = diagonal_jumps(&f, &int(4)).unwrap();
        assert!(prop_5_8_check(&d, &f.lct().unwrap(), &rat(1, 2)).passed());
        let single = diagonal_jumps(&family(&[int(1)]), &int(1)).unwrap();
        let r = prop_5_8_check(&single, &int(1), &Rational::zero());
        assert_eq!((r.eligible, r.passed()), (0, true));
    }

    #[test]
    fn membership_and_jumps_are_dual() {
        let s = hyperbola_jumps(6, &int(3)).unwrap();
        for j in &s.jumps {
            for p in &j.params {
                let below = &j.value - rat(1, 1000);
                assert!(hyperbola_member(p, &below).unwrap());
                assert!(!hyperbola_member(p, &j.value).unwrap());
            }
        }
    }

    #[test]
    fn discreteness_bound() {
        let f = family(&[rat(3, 2), int(2), rat(5, 3)]);
        for l in [int(1), int(2), rat(7, 2)] {
            let n = diagonal_jumps(&f, &l).unwrap().jumps.len();
            assert!(BigInt::from(n) <= diagonal_jump_count_bound(&f, &l).unwrap());
        }
    }

    #[test]
    fn integral_weights_match_the_diagonal_ideal() {
        use crate::ideal::MonomialIdeal;
        use crate::jumping::jumps_upto;
        let f = family(&[int(2), int(3)]);
        let stream = diagonal_jumps(&f, &int(3)).unwrap();
        let direct = jumps_upto(&MonomialIdeal::diagonal(&[2, 3]).unwrap(), &int(3)).unwrap();
        assert_eq!(stream.values(), direct.jumps);
        let kappa: Vec<u64> = stream.jumps.iter().map(GradedJump::multiplicity).collect();
        assert_eq!(Some(kappa), direct.multiplicities);
    }
}
