//! Consistency checks between jumping numbers and user-supplied roots of a
//! Bernstein-Sato polynomial. Roots are inputs; nothing here computes them.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Distinct roots in `[-1, 0)`, strictly decreasing, ending at `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootList {
    #[serde(with = "rational::serde_vec")]
    roots: Vec<Rational>,
}

impl RootList {
    pub fn new(roots: Vec<Rational>) -> Result<Self> {
        let minus_one = -Rational::one();
        if let Some(r) = roots.iter().find(|r| !r.is_negative() || **r < minus_one) {
            return Err(Error::MalformedRoots(format!("root {r} outside [-1, 0)")));
        }
        if roots.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::MalformedRoots("roots must be strictly decreasing".into()));
        }
        if roots.last() != Some(&minus_one) {
            return Err(Error::MalformedRoots("-1 must be a root".into()));
        }
        Ok(RootList { roots })
    }

    /// Sorts and deduplicates raw input, setting aside roots outside
    /// `[-1, 0)`, which are returned separately.
    pub fn from_input(raw: Vec<Rational>) -> Result<(Self, Vec<Rational>)> {
        let minus_one = -Rational::one();
        let (mut keep, dropped): (Vec<_>, Vec<_>) =
            raw.into_iter().partition(|r| r.is_negative() && *r >= minus_one);
        keep.sort_by(|a, b| b.cmp(a));
        keep.dedup();
        Ok((Self::new(keep)?, dropped))
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.roots.contains(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCheck {
    /// Roots `-xi` that should be present but are not.
    #[serde(with = "rational::serde_vec")]
    pub missing: Vec<Rational>,
}

impl RootCheck {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Every jump `xi` in `(0, 1]` has `-xi` among the roots.
pub fn thm_2_1_check(jumps: &[Rational], roots: &RootList) -> Result<RootCheck> {
    let one = Rational::one();
    let mut missing = Vec::new();
    for xi in jumps {
        if !xi.is_positive() || *xi > one {
            return Err(Error::JumpOutOfRange(xi.clone()));
        }
        let r = -xi;
        if !roots.contains(&r) {
            missing.push(r);
        }
    }
    Ok(RootCheck { missing })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpacingCheck {
    /// Indices `i` (1-based) with `r_{i+1} < r_i + r_1`.
    pub step_violations: Vec<usize>,
    /// Indices `i` with `r_{i+1} < (i + 1) r_1`.
    pub chain_violations: Vec<usize>,
}

impl SpacingCheck {
    pub fn passed(&self) -> bool {
        self.step_violations.is_empty() && self.chain_violations.is_empty()
    }
}

/// `r_{i+1} >= r_i + r_1` for consecutive roots, and its consequence
/// `r_{i+1} >= (i + 1) r_1`.
pub fn cor_2_4_check(roots: &RootList) -> SpacingCheck {
    let r = roots.roots();
    let mut step_violations = Vec::new();
    let mut chain_violations = Vec::new();
    for i in 1..r.len() {
        let (ri, next) = (&r[i - 1], &r[i]);
        if *next < ri + &r[0] {
            step_violations.push(i);
        }
        let chain = &r[0] * Rational::from_integer((i as i64 + 1).into());
        if *next < chain {
            chain_violations.push(i);
        }
    }
    SpacingCheck {
        step_violations,
        chain_violations,
    }
}

/// The largest root is `-lct`.
pub fn largest_root_check(lct: &Rational, roots: &RootList) -> Result<bool> {
    if !lct.is_positive() || *lct > Rational::one() {
        return Err(Error::Precondition(format!("lct {lct} outside (0, 1]")));
    }
    Ok(roots.roots().first().is_some_and(|r| (r + lct).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    /// Roots in [-1, 0) of b_f for f = x^a + y^b: -(i/a + j/b) with
    /// 0 < i < a, 0 < j < b, together with -1.
    fn quasi_homogeneous_roots(a: i64, b: i64) -> RootList {
        let mut raw = vec![int(-1)];
        for i in 1..a {
            for j in 1..b {
                raw.push(-(rat(i, a) + rat(j, b)));
            }
        }
        RootList::from_input(raw).unwrap().0
    }

    fn cusp_jumps() -> Vec<Rational> {
        vec![rat(7, 12), rat(5, 6), rat(11, 12), int(1)]
    }

    #[test]
    fn oracle_roots_of_the_cusp() {
        let roots = quasi_homogeneous_roots(3, 4);
        assert_eq!(roots.roots(), &[rat(-7, 12), rat(-5, 6), rat(-11, 12), int(-1)]);
    }

    #[test]
    fn validation() {
        assert!(RootList::new(vec![rat(-1, 2)]).is_err());
        assert!(RootList::new(vec![int(-1), rat(-1, 2)]).is_err());
        assert!(RootList::new(vec![rat(1, 2), int(-1)]).is_err());
        let (list, dropped) =
            RootList::from_input(vec![int(-1), rat(-13, 12), rat(-7, 12), rat(-7, 12)]).unwrap();
        assert_eq!(list.roots(), &[rat(-7, 12), int(-1)]);
        assert_eq!(dropped, vec![rat(-13, 12)]);
    }

    #[test]
    fn theorem_2_1() {
        let roots = quasi_homogeneous_roots(3, 4);
        assert!(thm_2_1_check(&cusp_jumps(), &roots).unwrap().passed());
        let smooth = RootList::new(vec![int(-1)]).unwrap();
        assert!(thm_2_1_check(&[int(1)], &smooth).unwrap().passed());
        let short = RootList::new(vec![rat(-7, 12), rat(-11, 12), int(-1)]).unwrap();
        assert_eq!(
            thm_2_1_check(&cusp_jumps(), &short).unwrap().missing,
            vec![rat(-5, 6)]
        );
        assert!(thm_2_1_check(&[rat(3, 2)], &smooth).is_err());
    }

    #[test]
    fn corollary_2_4() {
        assert!(cor_2_4_check(&quasi_homogeneous_roots(3, 4)).passed());
        assert!(cor_2_4_check(&RootList::new(vec![int(-1)]).unwrap()).passed());
        let bad = cor_2_4_check(&RootList::new(vec![rat(-1, 4), int(-1)]).unwrap());
        assert_eq!(bad.step_violations, vec![1]);
        assert_eq!(bad.chain_violations, vec![1]);
    }

    #[test]
    fn chain_uses_i_plus_one() {
        // r_2 = -5/6 is below 1 * r_1 = -7/12 but above 2 * r_1 = -7/6
        let roots = quasi_homogeneous_roots(3, 4);
        assert!(roots.roots()[1] < roots.roots()[0]);
        assert!(cor_2_4_check(&roots).chain_violations.is_empty());
    }

    #[test]
    fn largest_root() {
        let roots = quasi_homogeneous_roots(3, 4);
        assert!(largest_root_check(&rat(7, 12), &roots).unwrap());
        assert!(largest_root_check(&int(1), &RootList::new(vec![int(-1)]).unwrap()).unwrap());
        assert!(!largest_root_check(&rat(5, 6), &roots).unwrap());
    }

    #[test]
    fn extra_roots_are_tolerated() {
        // more roots than jumps: only jumps => roots is asserted
        let roots = RootList::new(vec![rat(-7, 12), rat(-2, 3), rat(-5, 6), rat(-11, 12), int(-1)]).unwrap();
        assert!(thm_2_1_check(&cusp_jumps(), &roots).unwrap().passed());
        assert!(largest_root_check(&rat(7, 12), &roots).unwrap());
    }

    #[test]
    fn passing_checks_pin_the_jumps() {
        let roots = quasi_homogeneous_roots(3, 4);
        let jumps = cusp_jumps();
        assert!(thm_2_1_check(&jumps, &roots).unwrap().passed());
        assert!(largest_root_check(&jumps[0], &roots).unwrap());
        assert!(jumps.iter().all(|x| roots.contains(&-x)));
        assert_eq!(-&roots.roots()[0], jumps[0]);
    }
}
