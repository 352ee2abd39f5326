//! Monomial ideals in `k[x_1, ..., x_d]`, stored as the antichain of their
//! minimal exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial; its length is the ambient dimension.
pub type Exponent = Vec<u32>;

/// Componentwise `a <= b`, i.e. `x^a` divides `x^b`.
pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mul(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Variable names used when printing: `s, t, u, v` up to four variables,
/// `x1, x2, ...` beyond.
pub fn var_name(i: usize, dimension: usize) -> String {
    const SHORT: [&str; 4] = ["s", "t", "u", "v"];
    if dimension <= SHORT.len() {
        SHORT[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub fn format_monomial(e: &[u32]) -> String {
    let d = e.len();
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                var_name(i, d)
            } else {
                format!("{}^{}", var_name(i, d), k)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    dimension: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, keeping only minimal elements.
    /// Generators are stored in lexicographic order.
    pub fn minimalize(raw: Vec<Exponent>, dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        for g in &raw {
            if g.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: g.len(),
                });
            }
        }
        Ok(Self::minimalize_unchecked(raw, dimension))
    }

    fn minimalize_unchecked(mut raw: Vec<Exponent>, dimension: usize) -> Self {
        // Sorting by total degree first means a divisor always precedes its multiples.
        raw.sort_by(|a, b| {
            let sa: u64 = a.iter().map(|&x| x as u64).sum();
            let sb: u64 = b.iter().map(|&x| x as u64).sum();
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        raw.dedup();
        let mut kept: Vec<Exponent> = Vec::new();
        for g in raw {
            if !kept.iter().any(|k| divides(k, &g)) {
                kept.push(g);
            }
        }
        kept.sort();
        MonomialIdeal {
            dimension,
            generators: kept,
        }
    }

    pub fn zero(dimension: usize) -> Self {
        MonomialIdeal {
            dimension,
            generators: Vec::new(),
        }
    }

    pub fn unit(dimension: usize) -> Self {
        MonomialIdeal {
            dimension,
            generators: vec![vec![0; dimension]],
        }
    }

    /// `(x_1, ..., x_e)` inside `d` variables.
    pub fn coordinate(e: usize, dimension: usize) -> Result<Self> {
        if e > dimension {
            return Err(Error::VariableOutOfRange { index: e, dimension });
        }
        let gens = (0..e)
            .map(|i| {
                let mut v = vec![0; dimension];
                v[i] = 1;
                v
            })
            .collect();
        Self::minimalize(gens, dimension)
    }

    pub fn maximal(dimension: usize) -> Self {
        Self::coordinate(dimension, dimension).expect("e == d is in range")
    }

    /// `(x_1^{m_1}, ..., x_d^{m_d})`.
    pub fn diagonal(powers: &[u32]) -> Result<Self> {
        let d = powers.len();
        let gens = powers
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let mut v = vec![0; d];
                v[i] = m;
                v
            })
            .collect();
        Self::minimalize(gens, d)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].iter().all(|&x| x == 0)
    }

    /// Rejects the zero and unit ideals.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dimension {
            Err(Error::DimensionMismatch {
                expected: self.dimension,
                found,
            })
        } else {
            Ok(())
        }
    }

    pub fn member(&self, v: &[u32]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.contains_monomial(v))
    }

    /// Membership without the dimension check.
    pub fn contains_monomial(&self, v: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dimension)?;
        let raw = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(Self::minimalize_unchecked(raw, self.dimension))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dimension)?;
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                raw.push(mul(a, b));
            }
        }
        Ok(Self::minimalize_unchecked(raw, self.dimension))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dimension)?;
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                raw.push(lcm(a, b));
            }
        }
        Ok(Self::minimalize_unchecked(raw, self.dimension))
    }

    pub fn power(&self, m: i64) -> Result<Self> {
        if m < 0 {
            return Err(Error::NegativePower(m));
        }
        let mut acc = Self::unit(self.dimension);
        let mut base = self.clone();
        let mut m = m as u64;
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.product(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_dim(other.dimension)?;
        Ok(other.generators.iter().all(|g| self.contains_monomial(g)))
    }

    /// Pure-power exponent of each variable, if present among the generators.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.dimension)
            .map(|i| {
                self.generators
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                    .map(|g| g[i])
                    .min()
            })
            .collect()
    }

    pub fn is_finite_colength(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.pure_powers().iter().all(Option::is_some))
    }

    /// Number of monomials outside the ideal.
    pub fn colength(&self) -> Result<u64> {
        if !self.is_finite_colength()? {
            return Err(Error::InfiniteColength);
        }
        let bounds: Vec<u32> = self.pure_powers().into_iter().map(|p| p.unwrap()).collect();
        let mut count = 0u64;
        for_each_in_box(&bounds, |v| {
            if !self.contains_monomial(v) {
                count += 1;
            }
        });
        Ok(count)
    }

    /// Codimension of the zero set: the smallest set of variables meeting the
    /// support of every generator.
    pub fn height(&self) -> Result<usize> {
        self.ensure_proper_nonzero()?;
        let d = self.dimension;
        let supports: Vec<u64> = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .fold(0u64, |m, (i, _)| m | (1 << i))
            })
            .collect();
        for size in 1..=d {
            let mut found = false;
            for_each_subset(d, size, |mask| {
                if !found && supports.iter().all(|s| s & mask != 0) {
                    found = true;
                }
            });
            if found {
                return Ok(size);
            }
        }
        unreachable!("the full variable set covers every non-constant generator")
    }

    /// Ideal in `d + e` variables generated by `self` (first `d` variables) and
    /// `other` (last `e` variables).
    pub fn direct_sum(&self, other: &Self) -> Self {
        let d = self.dimension + other.dimension;
        let mut raw = Vec::new();
        for g in &self.generators {
            let mut v = g.clone();
            v.resize(d, 0);
            raw.push(v);
        }
        for g in &other.generators {
            let mut v = vec![0; self.dimension];
            v.extend_from_slice(g);
            raw.push(v);
        }
        Self::minimalize_unchecked(raw, d)
    }

    /// Extension of `self` to `offset + dimension + trailing` variables, with
    /// its variables placed starting at `offset`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        let raw = self
            .generators
            .iter()
            .map(|g| {
                let mut v = vec![0; total];
                v[offset..offset + self.dimension].copy_from_slice(g);
                v
            })
            .collect();
        Self::minimalize_unchecked(raw, total)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| format_monomial(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Calls `visit` for every `v` with `0 <= v_i < bounds_i`.
pub fn for_each_in_box(bounds: &[u32], mut visit: impl FnMut(&[u32])) {
    if bounds.contains(&0) {
        return;
    }
    let mut v = vec![0u32; bounds.len()];
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == v.len() {
                return;
            }
            v[i] += 1;
            if v[i] < bounds[i] {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(u64)) {
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            visit(mask);
        }
    }
}
