//! Multiplier ideals and jumps of ideals in disjoint sets of variables.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::{Howald, JumpSpectrum};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::rational::Rational;

/// `sum_{lambda + mu = c} J(A^lambda) * J(B^mu)` in the combined variables.
///
/// Both factors are right-continuous step functions of `lambda`, so on each
/// open cell between consecutive breakpoints (jumps of `A`, `c` minus jumps
/// of `B`, and the ends `0`, `c`) the product is constant and equals
/// `J(A^{b_k}) * J(B^{c - b_{k+1}})`. That term contains the products at
/// both cell ends, which are included anyway.
pub fn mustata_sum(a: &MonomialIdeal, b: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    if !c.is_positive() {
        return Err(Error::NonPositiveCoefficient(c.clone()));
    }
    let ha = Howald::new(a)?;
    let hb = Howald::new(b)?;
    let (da, db) = (a.dimension(), b.dimension());
    let total = da + db;

    let mut breaks = vec![Rational::zero(), c.clone()];
    breaks.extend(ha.jumps_upto(c)?.jumps);
    breaks.extend(hb.jumps_upto(c)?.jumps.into_iter().map(|eta| c - eta));
    breaks.sort();
    breaks.dedup();

    let mut cache_a: BTreeMap<Rational, MonomialIdeal> = BTreeMap::new();
    let mut cache_b: BTreeMap<Rational, MonomialIdeal> = BTreeMap::new();
    let mut term = |lambda: &Rational, mu: &Rational| -> Result<MonomialIdeal> {
        if !cache_a.contains_key(lambda) {
            cache_a.insert(lambda.clone(), ha.multiplier_ideal(lambda)?.embed(0, total));
        }
        if !cache_b.contains_key(mu) {
            cache_b.insert(mu.clone(), hb.multiplier_ideal(mu)?.embed(da, total));
        }
        cache_a[lambda].product(&cache_b[mu])
    };

    let mut acc = MonomialIdeal::zero(total);
    for w in breaks.windows(2) {
        acc = acc.sum(&term(&w[0], &(c - &w[1]))?)?;
    }
    for lambda in &breaks {
        acc = acc.sum(&term(lambda, &(c - lambda))?)?;
    }
    Ok(acc)
}

/// Sorted sums `xi_i(A) + xi_j(B) <= c_max`. Multiplicities are the
/// convolution of the factors' multiplicities when both are available.
pub fn thom_sebastiani_jumps(a: &MonomialIdeal, b: &MonomialIdeal, c_max: &Rational) -> Result<JumpSpectrum> {
    let ha = Howald::new(a)?;
    let hb = Howald::new(b)?;
    let (la, lb) = (ha.lct(), hb.lct());
    if c_max < &(&la + &lb) {
        return Err(Error::Precondition(format!(
            "window {c_max} is below lct(A) + lct(B) = {}",
            &la + &lb
        )));
    }
    let sa = ha.jumps_upto(&(c_max - &lb))?;
    let sb = hb.jumps_upto(&(c_max - &la))?;
    let with_mult = sa.multiplicities.is_some() && sb.multiplicities.is_some();
    let ma = sa.multiplicities.clone().unwrap_or_else(|| vec![1; sa.len()]);
    let mb = sb.multiplicities.clone().unwrap_or_else(|| vec![1; sb.len()]);

    let mut sums: BTreeMap<Rational, u64> = BTreeMap::new();
    for (x, mx) in sa.jumps.iter().zip(&ma) {
        for (y, my) in sb.jumps.iter().zip(&mb) {
            let s = x + y;
            if &s <= c_max {
                *sums.entry(s).or_insert(0) += mx * my;
            }
        }
    }
    let (jumps, counts): (Vec<_>, Vec<_>) = sums.into_iter().unzip();
    let mut witness_box = sa.witness_box;
    witness_box.extend(sb.witness_box);
    Ok(JumpSpectrum {
        cutoff: c_max.clone(),
        jumps,
        multiplicities: with_mult.then_some(counts),
        witness_box,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jumping::{jumps_upto, multiplier_ideal};
    use crate::rational::{int, rat};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let d = gens[0].len();
        MonomialIdeal::minimalize(gens.iter().map(|g| g.to_vec()).collect(), d).unwrap()
    }

    #[test]
    fn diagonal_from_one_variable_pieces() {
        let a = ideal(&[&[2]]);
        let b = ideal(&[&[3]]);
        let sum = mustata_sum(&a, &b, &rat(5, 6)).unwrap();
        assert_eq!(sum, MonomialIdeal::maximal(2));
        assert_eq!(sum, multiplier_ideal(&a.direct_sum(&b), &rat(5, 6)).unwrap());
    }

    #[test]
    fn below_lct_gives_unit() {
        let a = ideal(&[&[1]]);
        let sum = mustata_sum(&a, &a, &rat(3, 2)).unwrap();
        assert!(sum.is_unit());
        assert!(multiplier_ideal(&MonomialIdeal::maximal(2), &rat(3, 2))
            .unwrap()
            .is_unit());
    }

    #[test]
    fn open_cells_matter() {
        // at c = 1 only the open cell (0, 1) contributes the unit ideal
        let a = ideal(&[&[1]]);
        assert!(mustata_sum(&a, &a, &int(1)).unwrap().is_unit());
    }

    #[test]
    fn thom_sebastiani_examples() {
        let a = ideal(&[&[2]]);
        let b = ideal(&[&[3]]);
        let ts = thom_sebastiani_jumps(&a, &b, &int(2)).unwrap();
        let direct = jumps_upto(&a.direct_sum(&b), &int(2)).unwrap();
        assert_eq!(ts.jumps, direct.jumps);
        assert_eq!(ts.multiplicities, direct.multiplicities);
        assert_eq!(&ts.jumps[..4], &[rat(5, 6), rat(7, 6), rat(4, 3), rat(3, 2)]);

        let s = ideal(&[&[1]]);
        let ts = thom_sebastiani_jumps(&s, &s, &int(5)).unwrap();
        assert_eq!(ts.jumps, (2..=5).map(int).collect::<Vec<_>>());

        let a = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        let u = ideal(&[&[2]]);
        let ts = thom_sebastiani_jumps(&a, &u, &int(2)).unwrap();
        assert_eq!(ts.jumps, jumps_upto(&a.direct_sum(&u), &int(2)).unwrap().jumps);
        assert!(thom_sebastiani_jumps(&a, &u, &rat(1, 2)).is_err());
    }
}
