use jumpcoef::groebner::{colength_zero_dim, groebner};
use jumpcoef::hypersurface::divisor_jumps;
use jumpcoef::jacobian::{jacobian_ideal, milnor, tyurina};
use jumpcoef::rational::{int, rat, Rational};
use jumpcoef::SparsePolynomial;
use proptest::prelude::*;

fn poly(terms: &[(i64, &[u32])]) -> SparsePolynomial {
    let d = terms[0].1.len();
    SparsePolynomial::from_terms(d, terms.iter().map(|(c, e)| (e.to_vec(), int(*c)))).unwrap()
}

fn brieskorn(a: u32, b: u32) -> SparsePolynomial {
    poly(&[(1, &[a, 0]), (1, &[0, b])])
}

/// Fractional jumps of `x^a + y^b`: values `i/a + j/b < 1` with `i, j >= 1`.
fn brieskorn_fractional(a: u32, b: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..a as i64)
        .flat_map(|i| (1..b as i64).map(move |j| rat(i, a as i64) + rat(j, b as i64)))
        .filter(|x| *x < int(1))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn small_poly() -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec(((0..=3u32, 0..=3u32), -3i64..=3), 1..=4).prop_map(|terms| {
        SparsePolynomial::from_terms(2, terms.into_iter().map(|((x, y), c)| (vec![x, y], int(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn milnor_number_of_a_brieskorn_curve(a in 2..=6u32, b in 2..=6u32) {
        let f = brieskorn(a, b);
        let mu = (a as u64 - 1) * (b as u64 - 1);
        prop_assert_eq!(milnor(&f).unwrap(), mu);
        prop_assert_eq!(tyurina(&f).unwrap(), mu);
    }

    #[test]
    fn brieskorn_jumps_below_one(a in 2..=7u32, b in 2..=7u32) {
        let spec = divisor_jumps(&brieskorn(a, b), &int(2), false).unwrap();
        let expected = brieskorn_fractional(a, b);
        prop_assert_eq!(spec.jumping_length, expected.len() + 1);
        prop_assert_eq!(&spec.fractional_jumps, &expected);
        for x in &expected {
            prop_assert!(spec.jumps.contains(&(x + int(1))));
        }
        prop_assert!(spec.jumps.contains(&int(1)) && spec.jumps.contains(&int(2)));
    }

    #[test]
    fn basis_contains_its_generators(f in small_poly(), g in small_poly()) {
        let basis = groebner(&[f.clone(), g.clone()]).unwrap();
        prop_assert!(basis.is_groebner());
        prop_assert!(basis.contains(&f).unwrap());
        prop_assert!(basis.contains(&g).unwrap());
        let combo = &(&f * &g) + &(&g * &g);
        prop_assert!(basis.contains(&combo).unwrap());
    }

    #[test]
    fn normal_forms_are_idempotent(f in small_poly(), g in small_poly(), h in small_poly()) {
        let basis = groebner(&[f, g]).unwrap();
        let r = basis.normal_form(&h).unwrap();
        prop_assert_eq!(basis.normal_form(&r).unwrap(), r.clone());
        prop_assert!(basis.contains(&(&h - &r)).unwrap());
    }
}

#[test]
fn colength_of_a_monomial_complete_intersection() {
    let basis = groebner(&[poly(&[(1, &[3, 0])]), poly(&[(1, &[0, 4])])]).unwrap();
    assert_eq!(colength_zero_dim(&basis).unwrap(), 12);
}

#[test]
fn jacobian_of_a_cusp() {
    let f = poly(&[(1, &[2, 0]), (1, &[0, 3])]);
    // f together with its two partials
    assert_eq!(jacobian_ideal(&f).len(), 3);
    assert_eq!(milnor(&f).unwrap(), 2);
}

#[test]
fn non_quasihomogeneous_curve() {
    let f = poly(&[(1, &[5, 0]), (1, &[0, 4]), (1, &[3, 2])]);
    assert_eq!(milnor(&f).unwrap(), 12);
    assert_eq!(tyurina(&f).unwrap(), 11);
}

#[test]
fn milnor_number_from_newton_area() {
    // convenient and nondegenerate: mu = 2 * area - a - b + 1
    let f = poly(&[(1, &[5, 0]), (1, &[0, 5]), (1, &[2, 2])]);
    let area = 10;
    assert_eq!(milnor(&f).unwrap(), 2 * area - 5 - 5 + 1);
}
