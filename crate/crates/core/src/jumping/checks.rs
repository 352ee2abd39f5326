//! Structural properties of jump spectra: periodicity, subadditivity,
//! Skoda's theorem, denominators, smooth subvarieties and semicontinuity.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Howald, JumpSpectrum};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::newton::NewtonPolyhedron;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub dimension: usize,
    /// Number of minimal generators.
    pub generators: usize,
    #[serde(with = "rational::serde_str")]
    pub window: Rational,
    #[serde(with = "rational::serde_vec")]
    pub jumps: Vec<Rational>,
    /// Jumps `xi` with `xi + 1 <= window` but `xi + 1` not a jump.
    #[serde(with = "rational::serde_vec")]
    pub forward_violations: Vec<Rational>,
    /// `xi > d - 1` with `xi + 1` a jump but `xi` not.
    #[serde(with = "rational::serde_vec")]
    pub backward_violations: Vec<Rational>,
    /// Same, in the range `xi > p - 1` for `p` generators.
    #[serde(with = "rational::serde_vec")]
    pub backward_violations_generators: Vec<Rational>,
    /// Positive `xi <= d - 1` that are not jumps although `xi + 1` is; these
    /// show the range restriction cannot be dropped.
    #[serde(with = "rational::serde_vec")]
    pub boundary_examples: Vec<Rational>,
}

impl PeriodicityReport {
    pub fn passed(&self) -> bool {
        self.forward_violations.is_empty()
            && self.backward_violations.is_empty()
            && self.backward_violations_generators.is_empty()
    }
}

pub fn periodicity_check(ideal: &MonomialIdeal, window: &Rational) -> Result<PeriodicityReport> {
    let h = Howald::new(ideal)?;
    let spec = h.jumps_upto(window)?;
    let d = ideal.dimension();
    let p = ideal.generators().len();
    let one = Rational::one();
    let d_minus_1 = Rational::from_integer(BigInt::from(d as i64 - 1));
    let p_minus_1 = Rational::from_integer(BigInt::from(p as i64 - 1));

    let mut forward = Vec::new();
    let mut backward = Vec::new();
    let mut backward_p = Vec::new();
    let mut boundary = Vec::new();
    for xi in &spec.jumps {
        let next = xi + &one;
        if &next <= window && !spec.contains(&next) {
            forward.push(xi.clone());
        }
        let prev = xi - &one;
        if prev.is_positive() && !spec.contains(&prev) {
            if prev > d_minus_1 {
                backward.push(prev.clone());
            } else {
                boundary.push(prev.clone());
            }
            if prev > p_minus_1 {
                backward_p.push(prev);
            }
        }
    }
    Ok(PeriodicityReport {
        dimension: d,
        generators: p,
        window: window.clone(),
        jumps: spec.jumps,
        forward_violations: forward,
        backward_violations: backward,
        backward_violations_generators: backward_p,
        boundary_examples: boundary,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityReport {
    #[serde(with = "rational::serde_str")]
    pub lct: Rational,
    #[serde(with = "rational::serde_vec")]
    pub jumps: Vec<Rational>,
    /// Indices `i` (1-based) with `xi_{i+1} > xi_1 + xi_i`.
    pub violations: Vec<usize>,
}

impl SubadditivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `xi_{i+1} <= xi_1 + xi_i` for consecutive jumps inside the window.
pub fn subadditivity_check(ideal: &MonomialIdeal, window: &Rational) -> Result<SubadditivityReport> {
    let h = Howald::new(ideal)?;
    let lct = h.lct();
    if window < &lct {
        return Err(Error::Precondition(format!(
            "window {window} is below the log canonical threshold {lct}"
        )));
    }
    let spec = h.jumps_upto(window)?;
    let violations = spec
        .jumps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > &lct + &w[0])
        .map(|(i, _)| i + 1)
        .collect();
    Ok(SubadditivityReport {
        lct,
        jumps: spec.jumps,
        violations,
    })
}

/// `J(a^{m+c+1}) = a * J(a^{m+c})`, without checking any hypothesis.
pub fn skoda_probe(ideal: &MonomialIdeal, c: &Rational, m: u32) -> Result<bool> {
    if !c.is_positive() {
        return Err(Error::NonPositiveCoefficient(c.clone()));
    }
    let h = Howald::new(ideal)?;
    let base = c + Rational::from_integer(BigInt::from(m));
    let lhs = h.multiplier_ideal(&(&base + Rational::one()))?;
    let rhs = ideal.product(&h.multiplier_ideal(&base)?)?;
    Ok(lhs == rhs)
}

/// Skoda's theorem in the range `m >= d - 1`.
pub fn skoda_check(ideal: &MonomialIdeal, c: &Rational, m: u32) -> Result<bool> {
    let d = ideal.dimension() as u32;
    if m + 1 < d {
        return Err(Error::Precondition(format!(
            "Skoda needs m >= d - 1 = {}, got m = {m}; use the probe for smaller m",
            d - 1
        )));
    }
    skoda_probe(ideal, c, m)
}

/// The variant for an ideal generated by `p` elements, valid for `m >= p - 1`.
pub fn skoda_check_generators(ideal: &MonomialIdeal, c: &Rational, m: u32) -> Result<bool> {
    let p = ideal.generators().len() as u32;
    if m + 1 < p {
        return Err(Error::Precondition(format!(
            "the {p}-generator variant needs m >= {}, got m = {m}",
            p - 1
        )));
    }
    skoda_probe(ideal, c, m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorReport {
    pub level_lcm: i64,
    /// Jumps whose denominator does not divide `level_lcm`.
    #[serde(with = "rational::serde_vec")]
    pub offending: Vec<Rational>,
    /// Smallest gap between consecutive jumps, if there are two.
    pub min_gap: Option<String>,
}

impl DenominatorReport {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Every jump has denominator dividing the lcm of the facet levels, so
/// consecutive jumps differ by at least `1 / lcm`.
pub fn denominator_bound(spec: &JumpSpectrum, polyhedron: &NewtonPolyhedron) -> DenominatorReport {
    let lcm = polyhedron.level_lcm();
    let big = BigInt::from(lcm);
    let offending: Vec<Rational> = spec
        .jumps
        .iter()
        .filter(|j| !(&big % j.denom()).is_zero())
        .cloned()
        .collect();
    let min_gap = spec
        .jumps
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .map(|g| rational::format_rational(&g));
    DenominatorReport {
        level_lcm: lcm,
        offending,
        min_gap,
    }
}

/// For `p = (x_1, ..., x_e)` in `d` variables, checks
/// `J(p^c) = p^{max(0, floor(c) + 1 - e)}`.
pub fn smooth_subvariety_check(e: usize, d: usize, c: &Rational) -> Result<bool> {
    if e == 0 || e > d {
        return Err(Error::Precondition(format!(
            "codimension {e} must lie in 1..={d}"
        )));
    }
    if !c.is_positive() {
        return Err(Error::NonPositiveCoefficient(c.clone()));
    }
    let p = MonomialIdeal::coordinate(e, d)?;
    let power = rational::floor_int(c) + BigInt::from(1) - BigInt::from(e);
    let power = power.to_i64().ok_or(Error::Overflow("computing a power"))?.max(0);
    Ok(Howald::new(&p)?.multiplier_ideal(c)? == p.power(power)?)
}

/// `special[i] <= general[i]` on every shared index; both sequences must be
/// nondecreasing. Sequences start at `kappa_1`.
pub fn semicontinuity_compare(general: &[Rational], special: &[Rational]) -> Result<bool> {
    for seq in [general, special] {
        if let Some(i) = seq.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::NonMonotone(i + 1));
        }
    }
    Ok(general.iter().zip(special).all(|(g, s)| s <= g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let d = gens[0].len();
        MonomialIdeal::minimalize(gens.iter().map(|g| g.to_vec()).collect(), d).unwrap()
    }

    #[test]
    fn periodicity_of_maximal_ideal() {
        let r = periodicity_check(&MonomialIdeal::maximal(2), &int(6)).unwrap();
        assert_eq!(r.jumps, (2..=6).map(int).collect::<Vec<_>>());
        assert!(r.passed());
        // 2 is a jump but 1 is not: the restriction xi > d - 1 is sharp
        assert_eq!(r.boundary_examples, vec![int(1)]);
    }

    #[test]
    fn periodicity_of_diagonal_and_principal() {
        let r = periodicity_check(&MonomialIdeal::diagonal(&[3, 4]).unwrap(), &int(3)).unwrap();
        assert!(r.passed());
        let r = periodicity_check(&ideal(&[&[1, 1]]), &int(5)).unwrap();
        assert!(r.passed());
        assert!(r.boundary_examples.is_empty());
    }

    #[test]
    fn subadditivity_examples() {
        for (i, w) in [
            (MonomialIdeal::diagonal(&[3, 4]).unwrap(), int(2)),
            (MonomialIdeal::maximal(2), int(6)),
            (MonomialIdeal::diagonal(&[9, 10]).unwrap(), int(2)),
        ] {
            assert!(subadditivity_check(&i, &w).unwrap().passed());
        }
        assert!(subadditivity_check(&MonomialIdeal::maximal(2), &int(1)).is_err());
    }

    #[test]
    fn skoda_examples() {
        let m = MonomialIdeal::maximal(2);
        assert!(skoda_check(&m, &rat(1, 2), 1).unwrap());
        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        assert!(skoda_check(&a, &rat(7, 12), 1).unwrap());
        let spec = Howald::new(&a).unwrap().jumps_upto(&int(1)).unwrap();
        for c in spec.interval_representatives() {
            assert!(skoda_check(&a, &c, 1).unwrap(), "c = {c}");
        }
        assert!(skoda_check(&m, &rat(1, 2), 0).is_err());
        assert!(skoda_check_generators(&ideal(&[&[1, 1]]), &rat(1, 2), 0).unwrap());
    }

    #[test]
    fn skoda_probe_below_range_can_fail() {
        // m = 0 < d - 1 for the maximal ideal in three variables
        let m = MonomialIdeal::maximal(3);
        assert!(!skoda_probe(&m, &rat(1, 2), 0).unwrap());
    }

    #[test]
    fn denominators() {
        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        let h = Howald::new(&a).unwrap();
        let r = denominator_bound(&h.jumps_upto(&int(3)).unwrap(), h.polyhedron());
        assert_eq!(r.level_lcm, 12);
        assert!(r.passed());
        assert_eq!(r.min_gap.as_deref(), Some("1/12"));
        let h = Howald::new(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(
            denominator_bound(&h.jumps_upto(&int(4)).unwrap(), h.polyhedron()).level_lcm,
            1
        );
        let h = Howald::new(&MonomialIdeal::diagonal(&[9, 10]).unwrap()).unwrap();
        let r = denominator_bound(&h.jumps_upto(&int(2)).unwrap(), h.polyhedron());
        assert_eq!(r.level_lcm, 90);
        assert!(r.passed());
    }

    #[test]
    fn smooth_subvarieties() {
        assert!(smooth_subvariety_check(2, 2, &rat(5, 2)).unwrap());
        assert!(smooth_subvariety_check(1, 2, &int(1)).unwrap());
        assert!(smooth_subvariety_check(2, 2, &int(1)).unwrap());
        assert!(smooth_subvariety_check(2, 3, &rat(7, 3)).unwrap());
        assert!(smooth_subvariety_check(0, 2, &int(1)).is_err());
        assert!(smooth_subvariety_check(3, 2, &int(1)).is_err());
    }

    #[test]
    fn semicontinuity() {
        let general = Howald::new(&ideal(&[&[3, 0], &[1, 1], &[0, 3]]))
            .unwrap()
            .jumps_upto(&int(2))
            .unwrap()
            .kappa_sequence()
            .unwrap();
        let special = Howald::new(&MonomialIdeal::diagonal(&[3, 3]).unwrap())
            .unwrap()
            .jumps_upto(&int(2))
            .unwrap()
            .kappa_sequence()
            .unwrap();
        assert_eq!(general[0], int(1));
        assert_eq!(special[0], rat(2, 3));
        assert!(semicontinuity_compare(&general, &special).unwrap());
        assert!(semicontinuity_compare(&general, &general).unwrap());
        assert!(!semicontinuity_compare(&special, &general).unwrap());
        assert_eq!(
            semicontinuity_compare(&[int(2), int(1)], &[int(1)]),
            Err(Error::NonMonotone(1))
        );
    }
}
