//! Newton polyhedra `P(a) = conv(exponents) + R^d_{>=0}` of monomial ideals.
//!
//! The facet description comes from a double-description pass over the
//! homogenization cone spanned by `(1, g)` for each generator `g` and
//! `(0, e_i)` for each coordinate direction. Extreme rays `(a_0, a)` of the
//! dual cone are exactly the facets `a . x >= -a_0` of `P`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::rational::Rational;

/// Facet inequality `(normal . x) / level >= 1`, with `(normal, level)`
/// primitive, `normal >= 0` and `level > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetForm {
    pub normal: Vec<i64>,
    pub level: i64,
}

impl FacetForm {
    /// `l(x)` at a rational point.
    pub fn value(&self, x: &[Rational]) -> Rational {
        let num = self
            .normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (n, xi)| acc + xi * BigInt::from(*n));
        num / BigInt::from(self.level)
    }

    /// Numerator of `l(v + 1)` over `level`, in integers.
    pub fn shifted_numerator(&self, v: &[u32]) -> i64 {
        self.normal.iter().zip(v).map(|(n, &x)| n * (x as i64 + 1)).sum()
    }

    /// `l(v + 1)` exactly.
    pub fn shifted_value(&self, v: &[u32]) -> Rational {
        BigRational::new(BigInt::from(self.shifted_numerator(v)), BigInt::from(self.level))
    }

    pub fn is_tight(&self, p: &[u32]) -> bool {
        let s: i64 = self.normal.iter().zip(p).map(|(n, &x)| n * x as i64).sum();
        s == self.level
    }
}

impl fmt::Display for FacetForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.normal.iter().map(|n| n.to_string()).collect();
        write!(f, "({}) . x >= {}", terms.join(", "), self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    dimension: usize,
    facets: Vec<FacetForm>,
    vertices: Vec<Exponent>,
    /// Coordinates `i` for which `x_i >= 0` is a facet.
    coordinate_facets: Vec<usize>,
}

/// A face of a two-dimensional Newton polyhedron together with the input
/// exponents lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face2d {
    pub kind: FaceKind,
    pub points: Vec<Exponent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceKind {
    Vertex(Exponent),
    /// Segment between two vertices, listed with increasing first coordinate.
    BoundedEdge {
        from: Exponent,
        to: Exponent,
        facet: FacetForm,
    },
    /// Ray `base + k * direction`, `k >= 0`, with `direction` a unit vector.
    UnboundedEdge {
        base: Exponent,
        direction: [u32; 2],
    },
    Full,
}

impl Face2d {
    pub fn label(&self) -> String {
        match &self.kind {
            FaceKind::Vertex(v) => format!("vertex {v:?}"),
            FaceKind::BoundedEdge { from, to, .. } => format!("edge {from:?}-{to:?}"),
            FaceKind::UnboundedEdge { base, direction } => {
                format!("ray {base:?}+k{direction:?}")
            }
            FaceKind::Full => "full polyhedron".to_string(),
        }
    }
}

impl NewtonPolyhedron {
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.ensure_proper_nonzero()?;
        Self::from_points(ideal.generators(), ideal.dimension())
    }

    /// Newton polyhedron of an arbitrary finite point set (need not be an
    /// antichain). The set must not contain the origin.
    pub fn from_points(points: &[Exponent], dimension: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if points.iter().any(|p| p.iter().all(|&x| x == 0)) {
            return Err(Error::UnitIdeal);
        }
        let n = dimension + 1;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..dimension {
            let mut r = vec![BigInt::zero(); n];
            r[i + 1] = BigInt::one();
            rows.push(r);
        }
        for p in points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: p.len(),
                });
            }
            let mut r = vec![BigInt::one()];
            r.extend(p.iter().map(|&x| BigInt::from(x)));
            rows.push(r);
        }
        let rays = dual_extreme_rays(&rows, n);

        let mut facets = Vec::new();
        let mut coordinate_facets = Vec::new();
        for ray in rays {
            let level = -ray[0].clone();
            match level.sign() {
                num_bigint::Sign::Plus => {
                    let normal = ray[1..]
                        .iter()
                        .map(|x| x.to_i64().ok_or(Error::Overflow("canonicalizing facets")))
                        .collect::<Result<Vec<_>>>()?;
                    let level = level.to_i64().ok_or(Error::Overflow("canonicalizing facets"))?;
                    facets.push(FacetForm { normal, level });
                }
                num_bigint::Sign::NoSign => {
                    let nz: Vec<usize> = (1..n).filter(|&i| !ray[i].is_zero()).collect();
                    if nz.len() == 1 {
                        coordinate_facets.push(nz[0] - 1);
                    }
                }
                // the facet at infinity, x_0 >= 0
                num_bigint::Sign::Minus => {}
            }
        }
        facets.sort();
        coordinate_facets.sort();

        let mut vertices = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for p in points {
            if !seen.insert(p.clone()) {
                continue;
            }
            let mut tight: Vec<Vec<BigRational>> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| {
                    f.normal
                        .iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect();
            for &i in &coordinate_facets {
                if p[i] == 0 {
                    let mut r = vec![BigRational::zero(); dimension];
                    r[i] = BigRational::one();
                    tight.push(r);
                }
            }
            if rank(tight) == dimension {
                vertices.push(p.clone());
            }
        }
        vertices.sort();

        Ok(NewtonPolyhedron {
            dimension,
            facets,
            vertices,
            coordinate_facets,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facets(&self) -> &[FacetForm] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    pub fn coordinate_facets(&self) -> &[usize] {
        &self.coordinate_facets
    }

    /// Membership of a nonnegative rational point.
    pub fn contains_point(&self, x: &[Rational]) -> bool {
        x.iter().all(|xi| !xi.is_negative()) && self.facets.iter().all(|f| f.value(x) >= Rational::one())
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

    /// `xi_v = min_facets l(v + 1)`.
    pub fn xi_of(&self, v: &[u32]) -> Result<Rational> {
        self.check_dim(v.len())?;
        let (num, den) = self.xi_fraction(v).ok_or(Error::NoFacets)?;
        Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `xi_v` as an unreduced `(numerator, level)` pair, `None` without facets.
    pub fn xi_fraction(&self, v: &[u32]) -> Option<(i64, i64)> {
        let mut best: Option<(i64, i64)> = None;
        for f in &self.facets {
            let cand = (f.shifted_numerator(v), f.level);
            best = match best {
                Some(b) if cmp_fraction(b, cand) != Ordering::Greater => Some(b),
                _ => Some(cand),
            };
        }
        best
    }

    /// Whether `u` lies in the interior of `c * P`, for `u > 0`.
    pub fn in_interior_scaled(&self, u: &[Rational], c: &Rational) -> Result<bool> {
        self.check_dim(u.len())?;
        if u.iter().any(|x| !x.is_positive()) {
            return Err(Error::Precondition(
                "interior test needs a strictly positive point".into(),
            ));
        }
        if self.facets.is_empty() {
            return Err(Error::NoFacets);
        }
        Ok(self.facets.iter().all(|f| &f.value(u) > c))
    }

    /// Smallest positive coefficient `normal_i / level` on coordinate `i`,
    /// or `None` when every facet is parallel to `e_i`.
    pub fn min_coefficient(&self, i: usize) -> Option<Rational> {
        self.facets
            .iter()
            .filter(|f| f.normal[i] > 0)
            .map(|f| BigRational::new(BigInt::from(f.normal[i]), BigInt::from(f.level)))
            .min()
    }

    /// Smallest positive coefficient over all facets and coordinates.
    pub fn gamma_min(&self) -> Option<Rational> {
        (0..self.dimension).filter_map(|i| self.min_coefficient(i)).min()
    }

    pub fn level_lcm(&self) -> i64 {
        self.facets.iter().fold(1, |acc, f| acc.lcm(&f.level))
    }

    /// Boundary faces of a planar Newton polyhedron: vertices, bounded edges,
    /// the two unbounded edges, then the whole polyhedron. Each face lists
    /// the members of `points` lying on it.
    pub fn faces_2d(&self, points: &[Exponent]) -> Result<Vec<Face2d>> {
        if self.dimension != 2 {
            return Err(Error::Precondition(format!(
                "face enumeration is only available in dimension 2, not {}",
                self.dimension
            )));
        }
        let mut verts = self.vertices.clone();
        verts.sort_by_key(|v| (v[0], std::cmp::Reverse(v[1])));
        let mut faces = Vec::new();
        for v in &verts {
            faces.push(Face2d {
                kind: FaceKind::Vertex(v.clone()),
                points: points.iter().filter(|p| *p == v).cloned().collect(),
            });
        }
        for w in verts.windows(2) {
            let facet = self
                .facets
                .iter()
                .find(|f| f.is_tight(&w[0]) && f.is_tight(&w[1]))
                .cloned()
                .ok_or(Error::Precondition("consecutive vertices share no facet".into()))?;
            faces.push(Face2d {
                points: points.iter().filter(|p| facet.is_tight(p)).cloned().collect(),
                kind: FaceKind::BoundedEdge {
                    from: w[0].clone(),
                    to: w[1].clone(),
                    facet,
                },
            });
        }
        let left = verts.first().ok_or(Error::ZeroIdeal)?.clone();
        let right = verts.last().expect("nonempty").clone();
        faces.push(Face2d {
            points: points.iter().filter(|p| p[0] == left[0]).cloned().collect(),
            kind: FaceKind::UnboundedEdge {
                base: left,
                direction: [0, 1],
            },
        });
        faces.push(Face2d {
            points: points.iter().filter(|p| p[1] == right[1]).cloned().collect(),
            kind: FaceKind::UnboundedEdge {
                base: right,
                direction: [1, 0],
            },
        });
        faces.push(Face2d {
            kind: FaceKind::Full,
            points: points.to_vec(),
        });
        Ok(faces)
    }
}

/// Compares `a.0 / a.1` with `b.0 / b.1` for positive denominators.
pub fn cmp_fraction(a: (i64, i64), b: (i64, i64)) -> Ordering {
    (a.0 as i128 * b.1 as i128).cmp(&(b.0 as i128 * a.1 as i128))
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Rank of a list of rational row vectors.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &rows[r][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &factor * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Inverse of a square rational matrix, `None` if singular.
fn inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// Indices of processed rows on which the ray is tight.
    zero_set: Vec<u64>,
}

fn bit_set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

/// Extreme rays of `{a : r . a >= 0 for every row r}`, assuming the rows span
/// `Q^n` (so the cone is pointed). Rays are primitive integer vectors.
fn dual_extreme_rays(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // Greedy choice of n independent rows for the initial simplicial cone.
    let mut basis: Vec<usize> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|&j| {
                rows[j]
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        trial.push(r.iter().map(|x| BigRational::from_integer(x.clone())).collect());
        if rank(trial) == basis.len() + 1 {
            basis.push(i);
        }
        if basis.len() == n {
            break;
        }
    }
    assert_eq!(basis.len(), n, "homogenization rows must span the space");

    let words = rows.len().div_ceil(64);
    let m: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = inverse(&m).expect("basis rows are independent");
    let mut rays: Vec<Ray> = (0..n)
        .map(|col| {
            let lcm = (0..n).fold(BigInt::one(), |acc, r| acc.lcm(inv[r][col].denom()));
            let coords = primitive(
                (0..n)
                    .map(|r| (&inv[r][col] * BigRational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            );
            let mut zero_set = vec![0u64; words];
            for &i in &basis {
                if dot(&rows[i], &coords).is_zero() {
                    bit_set(&mut zero_set, i);
                }
            }
            Ray { coords, zero_set }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, ray) in rays.iter().enumerate() {
            if !values[i].is_negative() {
                let mut r = ray.clone();
                if values[i].is_zero() {
                    bit_set(&mut r.zero_set, idx);
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = intersect(&rays[p].zero_set, &rays[q].zero_set);
                if popcount(&common) + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !is_subset(&common, &r.zero_set));
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(a, b)| &values[p] * b - &values[q] * a)
                    .collect();
                let coords = primitive(coords);
                let mut zero_set = common;
                bit_set(&mut zero_set, idx);
                next.push(Ray { coords, zero_set });
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    out
}
