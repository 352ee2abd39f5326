//! Brute-force checks of uniform Artin-Rees containments between monomial
//! ideals.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Howald;
use crate::error::{Error, Result};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArtinReesForm {
    /// `b^m * outer ∩ inner ⊆ b^{m-k} * inner`, for consecutive multiplier
    /// ideals `inner ⊆ outer`.
    Pair { outer: String, inner: String },
    /// `b^m ∩ ideal ⊆ b^{m-k} * ideal`.
    Intersection { ideal: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArtinReesVerdict {
    Holds,
    /// A generator of the left-hand side outside the right-hand side.
    Fails {
        witness: Exponent,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinReesReport {
    pub form: ArtinReesForm,
    pub b: String,
    pub m: u32,
    pub k: u32,
    pub verdict: ArtinReesVerdict,
}

impl ArtinReesReport {
    pub fn holds(&self) -> bool {
        self.verdict == ArtinReesVerdict::Holds
    }
}

impl fmt::Display for ArtinReesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = match &self.form {
            ArtinReesForm::Pair { outer, inner } => {
                format!(
                    "b^{} * {outer} ∩ {inner} ⊆ b^{} * {inner}",
                    self.m,
                    self.m - self.k
                )
            }
            ArtinReesForm::Intersection { ideal } => {
                format!("b^{} ∩ {ideal} ⊆ b^{} * {ideal}", self.m, self.m - self.k)
            }
        };
        match &self.verdict {
            ArtinReesVerdict::Holds => write!(f, "{lhs} with b = {}: holds", self.b),
            ArtinReesVerdict::Fails { witness } => {
                write!(f, "{lhs} with b = {}: fails at {witness:?}", self.b)
            }
        }
    }
}

fn check_exponents(m: u32, k: u32) -> Result<()> {
    if m < k {
        return Err(Error::Precondition(format!(
            "Artin-Rees exponent m = {m} is below k = {k}"
        )));
    }
    Ok(())
}

fn containment_witness(lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> ArtinReesVerdict {
    match lhs.generators().iter().find(|g| !rhs.contains_monomial(g)) {
        Some(w) => ArtinReesVerdict::Fails { witness: w.clone() },
        None => ArtinReesVerdict::Holds,
    }
}

pub fn artin_rees_pair(
    outer: &MonomialIdeal,
    inner: &MonomialIdeal,
    b: &MonomialIdeal,
    m: u32,
    k: u32,
) -> Result<ArtinReesReport> {
    check_exponents(m, k)?;
    let lhs = b.power(m as i64)?.product(outer)?.intersection(inner)?;
    let rhs = b.power((m - k) as i64)?.product(inner)?;
    Ok(ArtinReesReport {
        form: ArtinReesForm::Pair {
            outer: outer.to_string(),
            inner: inner.to_string(),
        },
        b: b.to_string(),
        m,
        k,
        verdict: containment_witness(&lhs, &rhs),
    })
}

pub fn artin_rees_intersection(
    ideal: &MonomialIdeal,
    b: &MonomialIdeal,
    m: u32,
    k: u32,
) -> Result<ArtinReesReport> {
    check_exponents(m, k)?;
    let lhs = b.power(m as i64)?.intersection(ideal)?;
    let rhs = b.power((m - k) as i64)?.product(ideal)?;
    Ok(ArtinReesReport {
        form: ArtinReesForm::Intersection {
            ideal: ideal.to_string(),
        },
        b: b.to_string(),
        m,
        k,
        verdict: containment_witness(&lhs, &rhs),
    })
}

/// Checks the pair containment with `k = d` for every consecutive pair of
/// multiplier ideals `J(a^{xi_i}) ⊇ J(a^{xi_{i+1}})` with `xi_{i+1} <= c_max`,
/// starting from `xi_0 = 0`.
pub fn theorem_3_1_check(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    m: u32,
    c_max: &Rational,
) -> Result<Vec<ArtinReesReport>> {
    let h = Howald::new(a)?;
    let d = a.dimension() as u32;
    let spec = h.jumps_upto(c_max)?;
    let mut prev = MonomialIdeal::unit(a.dimension());
    let mut out = Vec::new();
    for xi in &spec.jumps {
        let next = h.multiplier_ideal(xi)?;
        out.push(artin_rees_pair(&prev, &next, b, m, d)?);
        prev = next;
    }
    Ok(out)
}

/// Checks `b^m ∩ J(a^c) ⊆ b^{m - l d} J(a^c)` where `l` counts jumps `<= c`.
pub fn corollary_3_2_check(
    a: &MonomialIdeal,
    c: &Rational,
    b: &MonomialIdeal,
    m: u32,
) -> Result<ArtinReesReport> {
    let h = Howald::new(a)?;
    let l = if c > &Rational::zero() {
        h.jumps_upto(c)?.len()
    } else {
        0
    };
    let k = l as u32 * a.dimension() as u32;
    let j = h.multiplier_ideal(c)?;
    artin_rees_intersection(&j, b, m, k)
}

/// `k = d * l` for the Corollary form.
pub fn corollary_k(a: &MonomialIdeal, c: &Rational) -> Result<u32> {
    let l = Howald::new(a)?.jumps_upto(c)?.len();
    Ok(l as u32 * a.dimension() as u32)
}
