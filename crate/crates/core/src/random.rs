//! Seeded instance generators for the verification suites.
//!
//! Every generator takes a [`ChaCha8Rng`] so a `(seed, trial)` pair
//! reproduces the same instance on any platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{Exponent, MonomialIdeal};
use crate::rational::{rat, Rational};

/// Generator for the `trial`-th instance of a run started with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealShape {
    pub dimension: usize,
    pub max_generators: usize,
    pub max_exponent: u32,
    pub finite_colength: bool,
}

impl Default for IdealShape {
    fn default() -> Self {
        IdealShape {
            dimension: 2,
            max_generators: 4,
            max_exponent: 6,
            finite_colength: false,
        }
    }
}

/// A random proper nonzero monomial ideal. With `finite_colength` a pure
/// power of every variable is included.
pub fn random_ideal(rng: &mut ChaCha8Rng, shape: IdealShape) -> MonomialIdeal {
    let d = shape.dimension.max(1);
    let top = shape.max_exponent.max(1);
    loop {
        let mut gens: Vec<Exponent> = Vec::new();
        if shape.finite_colength {
            for i in 0..d {
                let mut e = vec![0; d];
                e[i] = rng.gen_range(1..=top);
                gens.push(e);
            }
        }
        let extra = rng.gen_range(1..=shape.max_generators.max(1));
        for _ in 0..extra {
            gens.push((0..d).map(|_| rng.gen_range(0..=top)).collect());
        }
        let ideal = MonomialIdeal::minimalize(gens, d).expect("exponents have the right length");
        if !ideal.is_unit() && !ideal.is_zero() {
            return ideal;
        }
    }
}

/// `p/q` with `1 <= q <= max_denominator` and `0 < p/q <= max_value`.
pub fn random_positive_rational(rng: &mut ChaCha8Rng, max_value: i64, max_denominator: i64) -> Rational {
    let q = rng.gen_range(1..=max_denominator.max(1));
    let p = rng.gen_range(1..=(max_value.max(1) * q));
    rat(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let shape = IdealShape {
            dimension: 3,
            finite_colength: true,
            ..IdealShape::default()
        };
        let a = random_ideal(&mut trial_rng(7, 3), shape);
        let b = random_ideal(&mut trial_rng(7, 3), shape);
        assert_eq!(a, b);
        assert!(a.is_finite_colength().unwrap());
        let x = random_positive_rational(&mut trial_rng(1, 0), 3, 12);
        assert_eq!(x, random_positive_rational(&mut trial_rng(1, 0), 3, 12));
    }

    #[test]
    fn trials_differ() {
        let shape = IdealShape::default();
        let distinct: std::collections::BTreeSet<String> = (0..20)
            .map(|t| random_ideal(&mut trial_rng(5, t), shape).to_string())
            .collect();
        assert!(distinct.len() > 5);
    }

    #[test]
    fn rationals_in_range() {
        let mut rng = trial_rng(11, 0);
        for _ in 0..200 {
            let x = random_positive_rational(&mut rng, 2, 7);
            assert!(x > rat(0, 1) && x <= rat(2, 1) && *x.denom() <= 7.into());
        }
    }
}
