//! Multiplier ideals and jumping numbers of monomial ideals.
//!
//! For a monomial ideal `a` with Newton polyhedron `P`, the monomial `t^v`
//! lies in `J(a^c)` exactly when `v + 1` is in the interior of `c * P`, i.e.
//! when `xi_v = min_facets l(v + 1) > c`. Every jump is some `xi_v`.
//!
//! # Witness box
//!
//! Write `gamma_i` for the smallest positive coefficient of coordinate `i`
//! among the facet forms. If `xi_v <= c` and `v_i > floor(c / gamma_i)`, the
//! minimizing facet has zero coefficient on `i` (any facet using `i` is
//! already above `c`), so lowering `v_i` to `floor(c / gamma_i)` leaves the
//! minimizing value untouched while every facet using `i` stays above `c`.
//! Hence every value `xi_v <= c` is attained inside the box
//! `v_i <= floor(c / gamma_i)`. The same argument bounds every minimal
//! generator of `J(a^c)`. Coordinates no facet uses never change `xi_v` and
//! get bound `0`.
//!
//! Since facet normals are nonnegative, `xi_v` is nondecreasing in `v`, so
//! `{v : xi_v <= c}` is a down-set and is enumerated with pruning.

pub mod artin_rees;
pub mod checks;
pub mod product;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::newton::{cmp_fraction, NewtonPolyhedron};
use crate::rational::{self, Rational};

pub use artin_rees::{
    artin_rees_intersection, artin_rees_pair, corollary_3_2_check, corollary_k, theorem_3_1_check,
    ArtinReesForm, ArtinReesReport, ArtinReesVerdict,
};
pub use checks::{
    denominator_bound, periodicity_check, semicontinuity_compare, skoda_check, skoda_check_generators,
    skoda_probe, smooth_subvariety_check, subadditivity_check, DenominatorReport, PeriodicityReport,
    SubadditivityReport,
};
pub use product::{mustata_sum, thom_sebastiani_jumps};

/// Sorted jumping numbers up to a cutoff, with multiplicities when the
/// source ideal has finite colength.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpSpectrum {
    #[serde(with = "rational::serde_str")]
    pub cutoff: Rational,
    #[serde(with = "rational::serde_vec")]
    pub jumps: Vec<Rational>,
    pub multiplicities: Option<Vec<u64>>,
    /// Per-coordinate bound of the enumeration box.
    pub witness_box: Vec<u32>,
}

impl JumpSpectrum {
    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.jumps.binary_search(x).is_ok()
    }

    pub fn first(&self) -> Option<&Rational> {
        self.jumps.first()
    }

    /// Jumps repeated by multiplicity (`kappa_1 <= kappa_2 <= ...`).
    pub fn kappa_sequence(&self) -> Option<Vec<Rational>> {
        let mult = self.multiplicities.as_ref()?;
        Some(
            self.jumps
                .iter()
                .zip(mult)
                .flat_map(|(j, &m)| std::iter::repeat_n(j.clone(), m as usize))
                .collect(),
        )
    }

    /// One point inside each open interval below the cutoff that is cut out
    /// by the jumps: half the first jump, then the midpoints between jumps.
    pub fn interval_representatives(&self) -> Vec<Rational> {
        let two = BigInt::from(2);
        let mut out = Vec::with_capacity(self.jumps.len());
        if let Some(first) = self.jumps.first() {
            out.push(first / &two);
        }
        out.extend(self.jumps.windows(2).map(|w| (&w[0] + &w[1]) / &two));
        out
    }

    /// Uniform box bound `max_i witness_box[i]`.
    pub fn box_bound(&self) -> u32 {
        self.witness_box.iter().copied().max().unwrap_or(0)
    }
}

/// Reduced fraction with positive denominator, ordered by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac(i64, i64);

impl Frac {
    fn new(n: i64, d: i64) -> Self {
        let g = rational::gcd_i64(n, d).max(1);
        Frac(n / g, d / g)
    }

    fn to_rational(self) -> Rational {
        BigRational::new(BigInt::from(self.0), BigInt::from(self.1))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_fraction((self.0, self.1), (other.0, other.1))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal together with its Newton polyhedron.
#[derive(Debug, Clone)]
pub struct Howald {
    ideal: MonomialIdeal,
    polyhedron: NewtonPolyhedron,
}

impl Howald {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let polyhedron = NewtonPolyhedron::of_ideal(ideal)?;
        Ok(Howald {
            ideal: ideal.clone(),
            polyhedron,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn polyhedron(&self) -> &NewtonPolyhedron {
        &self.polyhedron
    }

    pub fn dimension(&self) -> usize {
        self.ideal.dimension()
    }

    fn xi(&self, v: &[u32]) -> Frac {
        let (n, d) = self
            .polyhedron
            .xi_fraction(v)
            .expect("proper nonzero ideals have a positive-level facet");
        Frac::new(n, d)
    }

    pub fn xi_of(&self, v: &[u32]) -> Result<Rational> {
        self.polyhedron.xi_of(v)
    }

    pub fn lct(&self) -> Rational {
        self.xi(&vec![0; self.dimension()]).to_rational()
    }

    /// Per-coordinate bounds `floor(c / gamma_i)` (see the module docs).
    pub fn witness_box(&self, c: &Rational) -> Result<Vec<u32>> {
        (0..self.dimension())
            .map(|i| match self.polyhedron.min_coefficient(i) {
                Some(gamma) => rational::floor_int(&(c / gamma))
                    .to_u32()
                    .ok_or(Error::Overflow("sizing the witness box")),
                None => Ok(0),
            })
            .collect()
    }

    /// The uniform box bound `ceil(c / gamma_min) + 1`.
    pub fn uniform_box_bound(&self, c: &Rational) -> Result<u32> {
        let gamma = self.polyhedron.gamma_min().ok_or(Error::NoFacets)?;
        (rational::ceil_int(&(c / gamma)) + BigInt::from(1))
            .to_u32()
            .ok_or(Error::Overflow("sizing the witness box"))
    }

    /// Visits every `v <= bounds` with `xi_v <= c`.
    fn for_each_below(&self, c: Frac, bounds: &[u32], mut visit: impl FnMut(&[u32], Frac)) {
        let d = self.dimension();
        let mut v = vec![0u32; d];
        self.descend(0, &mut v, c, bounds, &mut visit);
    }

    fn descend(
        &self,
        i: usize,
        v: &mut Vec<u32>,
        c: Frac,
        bounds: &[u32],
        visit: &mut impl FnMut(&[u32], Frac),
    ) {
        for x in 0..=bounds[i] {
            v[i] = x;
            let xi = self.xi(v);
            if xi > c {
                break;
            }
            if i + 1 == v.len() {
                visit(v, xi);
            } else {
                self.descend(i + 1, v, c, bounds, visit);
            }
        }
        v[i] = 0;
    }

    /// `J(a^c)` as a monomial ideal.
    pub fn multiplier_ideal(&self, c: &Rational) -> Result<MonomialIdeal> {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(c.clone()));
        }
        let d = self.dimension();
        if c.is_zero() {
            return Ok(MonomialIdeal::unit(d));
        }
        let cf = to_frac(c)?;
        let bounds = self.witness_box(c)?;
        let mut candidates = Vec::new();
        let zero = vec![0u32; d];
        if self.xi(&zero) > cf {
            return Ok(MonomialIdeal::unit(d));
        }
        self.for_each_below(cf, &bounds, |v, _| {
            for i in 0..d {
                if v[i] < bounds[i] {
                    let mut w = v.to_vec();
                    w[i] += 1;
                    if self.xi(&w) > cf {
                        candidates.push(w);
                    }
                }
            }
        });
        MonomialIdeal::minimalize(candidates, d)
    }

    /// Jumps `<= c_max` found inside the given box, with witness counts.
    pub fn jumps_in_box(&self, c_max: &Rational, bounds: &[u32]) -> Result<Vec<(Rational, u64)>> {
        if !c_max.is_positive() {
            return Err(Error::NonPositiveCoefficient(c_max.clone()));
        }
        if bounds.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: bounds.len(),
            });
        }
        let cf = to_frac(c_max)?;
        let mut counts: BTreeMap<Frac, u64> = BTreeMap::new();
        self.for_each_below(cf, bounds, |_, xi| {
            *counts.entry(xi).or_insert(0) += 1;
        });
        Ok(counts.into_iter().map(|(f, n)| (f.to_rational(), n)).collect())
    }

    pub fn jumps_upto(&self, c_max: &Rational) -> Result<JumpSpectrum> {
        let bounds = self.witness_box(c_max)?;
        let found = self.jumps_in_box(c_max, &bounds)?;
        let finite = self.ideal.is_finite_colength()?;
        let (jumps, counts): (Vec<_>, Vec<_>) = found.into_iter().unzip();
        Ok(JumpSpectrum {
            cutoff: c_max.clone(),
            jumps,
            multiplicities: finite.then_some(counts),
            witness_box: bounds,
        })
    }

    /// Number of jumps `<= c`.
    pub fn jumping_length(&self, c: &Rational) -> Result<usize> {
        if !c.is_positive() {
            return Ok(0);
        }
        Ok(self.jumps_upto(c)?.len())
    }
}

fn to_frac(c: &Rational) -> Result<Frac> {
    let n = c
        .numer()
        .to_i64()
        .ok_or(Error::Overflow("converting a coefficient"))?;
    let d = c
        .denom()
        .to_i64()
        .ok_or(Error::Overflow("converting a coefficient"))?;
    Ok(Frac(n, d))
}

pub fn multiplier_ideal(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    Howald::new(ideal)?.multiplier_ideal(c)
}

pub fn jumps_upto(ideal: &MonomialIdeal, c_max: &Rational) -> Result<JumpSpectrum> {
    Howald::new(ideal)?.jumps_upto(c_max)
}

pub fn lct(ideal: &MonomialIdeal) -> Result<Rational> {
    Ok(Howald::new(ideal)?.lct())
}

pub fn jumping_length(ideal: &MonomialIdeal, c: &Rational) -> Result<usize> {
    Howald::new(ideal)?.jumping_length(c)
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
    fn multiplier_ideals_of_examples() {
        let m = MonomialIdeal::maximal(2);
        // xi_v = v_1 + v_2 + 2 > 5/2 exactly when v != 0
        assert_eq!(multiplier_ideal(&m, &rat(5, 2)).unwrap(), m);
        assert_eq!(multiplier_ideal(&m, &int(3)).unwrap(), m.power(2).unwrap());
        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        assert!(multiplier_ideal(&a, &rat(1, 2)).unwrap().is_unit());
        assert_eq!(multiplier_ideal(&a, &rat(7, 12)).unwrap(), m);
        assert!(multiplier_ideal(&a, &int(0)).unwrap().is_unit());
        assert!(multiplier_ideal(&a, &int(-1)).is_err());
        assert_eq!(
            multiplier_ideal(&MonomialIdeal::unit(2), &int(1)),
            Err(Error::UnitIdeal)
        );
        assert_eq!(
            multiplier_ideal(&MonomialIdeal::zero(2), &int(1)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn principal_monomial_multiplier_ideal() {
        // J((st)^c) = (s^{floor c} t^{floor c})
        let st = ideal(&[&[1, 1]]);
        assert_eq!(multiplier_ideal(&st, &rat(3, 2)).unwrap(), st);
        assert_eq!(multiplier_ideal(&st, &int(2)).unwrap(), ideal(&[&[2, 2]]));
        assert!(multiplier_ideal(&st, &rat(9, 10)).unwrap().is_unit());
    }

    #[test]
    fn spectra_of_examples() {
        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        let s = jumps_upto(&a, &int(1)).unwrap();
        assert_eq!(s.jumps, vec![rat(7, 12), rat(5, 6), rat(11, 12)]);
        let m = jumps_upto(&MonomialIdeal::maximal(2), &int(4)).unwrap();
        assert_eq!(m.jumps, vec![int(2), int(3), int(4)]);
        assert_eq!(m.multiplicities, Some(vec![1, 2, 3]));
        assert_eq!(
            m.kappa_sequence().unwrap(),
            vec![int(2), int(3), int(3), int(4), int(4), int(4)]
        );
        let b = MonomialIdeal::diagonal(&[2, 3]).unwrap();
        assert_eq!(jumps_upto(&b, &int(1)).unwrap().jumps, vec![rat(5, 6)]);
        assert!(jumps_upto(&b, &int(0)).is_err());
    }

    #[test]
    fn non_primary_spectrum_has_no_multiplicities() {
        let s = jumps_upto(&ideal(&[&[1, 1]]), &int(3)).unwrap();
        assert_eq!(s.jumps, vec![int(1), int(2), int(3)]);
        assert!(s.multiplicities.is_none());
    }

    #[test]
    fn lct_examples() {
        assert_eq!(
            lct(&MonomialIdeal::diagonal(&[9, 10]).unwrap()).unwrap(),
            rat(19, 90)
        );
        assert_eq!(
            lct(&MonomialIdeal::diagonal(&[3, 30]).unwrap()).unwrap(),
            rat(11, 30)
        );
        assert_eq!(lct(&MonomialIdeal::maximal(2)).unwrap(), int(2));
    }

    #[test]
    fn jumping_lengths() {
        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        assert_eq!(jumping_length(&a, &int(1)).unwrap(), 3);
        assert_eq!(jumping_length(&MonomialIdeal::maximal(2), &int(2)).unwrap(), 1);
        assert_eq!(jumping_length(&a, &rat(1, 2)).unwrap(), 0);
    }

    #[test]
    fn witness_box_is_within_uniform_bound() {
        let h = Howald::new(&ideal(&[&[1, 6], &[6, 5]])).unwrap();
        let c = int(2);
        let per = h.witness_box(&c).unwrap();
        let uniform = h.uniform_box_bound(&c).unwrap();
        assert!(per.iter().all(|&b| b <= uniform));
    }
}
