//! Buchberger's algorithm over the rationals under graded reverse
//! lexicographic order, with reduced bases and standard-monomial counting.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{divides, lcm, Exponent, MonomialIdeal};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;

pub const DEFAULT_STEP_CAP: usize = 100_000;

/// Graded reverse lexicographic comparison with `x_1 > x_2 > ... > x_d`.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Key(Exponent);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms sorted by decreasing monomial; the first term leads.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    terms: Vec<(Exponent, Rational)>,
}

impl Poly {
    fn from_sparse(p: &SparsePolynomial) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        Poly { terms }
    }

    fn to_sparse(&self, dimension: usize) -> SparsePolynomial {
        SparsePolynomial::from_terms(dimension, self.terms.iter().cloned())
            .expect("terms carry the ambient dimension")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Exponent {
        &self.terms[0].0
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
        self
    }
}

struct Reducer {
    cap: usize,
    steps: usize,
}

impl Reducer {
    /// Full reduction of `p` by the monic polynomials in `by`.
    fn reduce(&mut self, p: &Poly, by: &[Poly]) -> Result<Poly> {
        let mut work: BTreeMap<Key, Rational> =
            p.terms.iter().map(|(e, c)| (Key(e.clone()), c.clone())).collect();
        let mut rem = Vec::new();
        while let Some((Key(lt), lc)) = work.pop_last() {
            let Some(g) = by.iter().find(|g| divides(g.lm(), &lt)) else {
                rem.push((lt, lc));
                continue;
            };
            self.steps += 1;
            if self.steps > self.cap {
                return Err(Error::StepCapExceeded(self.cap));
            }
            let shift: Exponent = lt.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
            for (e, c) in &g.terms[1..] {
                let key = Key(e.iter().zip(&shift).map(|(a, b)| a + b).collect());
                let delta = -(&lc * c);
                match work.get_mut(&key) {
                    Some(existing) => {
                        *existing += delta;
                        if existing.is_zero() {
                            work.remove(&key);
                        }
                    }
                    None => {
                        work.insert(key, delta);
                    }
                }
            }
        }
        Ok(Poly { terms: rem })
    }

    fn s_polynomial(&self, f: &Poly, g: &Poly) -> Poly {
        let l = lcm(f.lm(), g.lm());
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (p, sign) in [(f, Rational::one()), (g, -Rational::one())] {
            let shift: Exponent = l.iter().zip(p.lm()).map(|(a, b)| a - b).collect();
            for (e, c) in &p.terms {
                let key = Key(e.iter().zip(&shift).map(|(a, b)| a + b).collect());
                let entry = acc.entry(key).or_insert_with(Rational::zero);
                *entry += &sign * c;
            }
        }
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.0, c))
            .collect();
        terms.reverse();
        Poly { terms }
    }
}

/// A reduced Groebner basis: monic, no leading monomial divides a term of
/// another element, sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    dimension: usize,
    polys: Vec<Poly>,
}

pub fn groebner(gens: &[SparsePolynomial]) -> Result<GroebnerBasis> {
    groebner_with_cap(gens, DEFAULT_STEP_CAP)
}

/// Buchberger completion with the normal selection strategy; `cap` bounds
/// the total number of reduction steps.
pub fn groebner_with_cap(gens: &[SparsePolynomial], cap: usize) -> Result<GroebnerBasis> {
    let dimension = gens.first().ok_or(Error::ZeroPolynomial)?.dimension();
    for g in gens {
        if g.dimension() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: g.dimension(),
            });
        }
    }
    let mut reducer = Reducer { cap, steps: 0 };
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        let r = reducer.reduce(&Poly::from_sparse(g), &basis)?;
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }

    // Pairs keyed by (lcm, i, j) so that the smallest lcm is taken first.
    let mut pairs: BTreeSet<(Key, usize, usize)> = BTreeSet::new();
    let push_pairs = |pairs: &mut BTreeSet<(Key, usize, usize)>, basis: &[Poly], j: usize| {
        for i in 0..j {
            let (a, b) = (basis[i].lm(), basis[j].lm());
            let coprime = a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0);
            if !coprime {
                pairs.insert((Key(lcm(a, b)), i, j));
            }
        }
    };
    for j in 1..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        let s = reducer.s_polynomial(&basis[i], &basis[j]);
        let r = reducer.reduce(&s, &basis)?;
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let last = basis.len() - 1;
        if basis[last].lm().iter().all(|&x| x == 0) {
            pairs.clear();
            basis = vec![basis[last].clone()];
            break;
        }
        push_pairs(&mut pairs, &basis, last);
    }

    let polys = interreduce(basis, &mut reducer)?;
    Ok(GroebnerBasis { dimension, polys })
}

fn interreduce(basis: Vec<Poly>, reducer: &mut Reducer) -> Result<Vec<Poly>> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, q)| l != k && divides(q.lm(), p.lm()) && (q.lm() != p.lm() || l < k));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, q)| q.clone())
            .collect();
        let head = Poly {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = Poly {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let mut r = reducer.reduce(&tail, &others)?;
        r.terms.insert(0, head.terms[0].clone());
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| grevlex_cmp(a.lm(), b.lm()));
    Ok(reduced)
}

impl GroebnerBasis {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> Vec<SparsePolynomial> {
        self.polys.iter().map(|p| p.to_sparse(self.dimension)).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Exponent> {
        self.polys.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().iter().all(|&x| x == 0)
    }

    pub fn leading_term_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.leading_monomials(), self.dimension)
            .expect("leading monomials share the ambient dimension")
    }

    /// Normal form of `p` modulo the basis.
    pub fn normal_form(&self, p: &SparsePolynomial) -> Result<SparsePolynomial> {
        if p.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: p.dimension(),
            });
        }
        let mut reducer = Reducer {
            cap: usize::MAX,
            steps: 0,
        };
        Ok(reducer
            .reduce(&Poly::from_sparse(p), &self.polys)?
            .to_sparse(self.dimension))
    }

    pub fn contains(&self, p: &SparsePolynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let mut reducer = Reducer {
            cap: usize::MAX,
            steps: 0,
        };
        for j in 0..self.polys.len() {
            for i in 0..j {
                let s = reducer.s_polynomial(&self.polys[i], &self.polys[j]);
                match reducer.reduce(&s, &self.polys) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Number of standard monomials of a zero-dimensional ideal; `0` for the
/// unit ideal.
pub fn colength_zero_dim(basis: &GroebnerBasis) -> Result<u64> {
    if basis.is_unit() {
        return Ok(0);
    }
    let lt = basis.leading_term_ideal();
    if !lt.is_finite_colength()? {
        return Err(Error::NotZeroDimensional);
    }
    lt.colength()
}

/// Whether the polynomials have a common zero with all coordinates
/// nonzero, decided by the Rabinowitsch trick: the ideal generated by the
/// polynomials and `1 - z * x_1 * ... * x_d` is the unit ideal exactly when
/// no such zero exists over the algebraic closure.
pub fn has_common_torus_zero(polys: &[SparsePolynomial], cap: usize) -> Result<bool> {
    let d = polys.first().ok_or(Error::ZeroPolynomial)?.dimension();
    let mut gens: Vec<SparsePolynomial> = polys.iter().map(|p| p.embed(0, d + 1)).collect();
    let product = SparsePolynomial::monomial(Rational::one(), vec![1; d + 1]);
    gens.push(&SparsePolynomial::one(d + 1) - &product);
    let gb = groebner_with_cap(&gens, cap)?;
    Ok(!gb.is_unit())
}
