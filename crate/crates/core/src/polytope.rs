//! Lattice polytopes in `M_Q`: vertex enumeration, lattice points, Minkowski
//! covering, polar duality and face fans.
//!
//! Instances are small (rank at most four, a few dozen halfspaces), so vertex
//! enumeration intersects every rank-sized subset of halfspaces.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::combinations;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{
    int_dot, normal_vector, pivot_columns, rank, solve_dual_rational, DualVector, LatticeVector,
};

/// `<m, normal> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: LatticeVector,
    pub offset: BigInt,
}

impl Halfspace {
    pub fn new(normal: LatticeVector, offset: BigInt) -> Self {
        Self { normal, offset }
    }

    /// Value of `<m, normal> + offset`; non-negative on the halfspace.
    pub fn slack(&self, m: &[BigRational]) -> BigRational {
        m.iter().zip(self.normal.coords()).fold(
            BigRational::from_integer(self.offset.clone()),
            |acc, (x, n)| acc + x * n,
        )
    }

    pub fn slack_int(&self, m: &[BigInt]) -> BigInt {
        int_dot(self.normal.coords(), m) + &self.offset
    }
}

/// A polytope given by halfspaces, with vertices and lattice points computed
/// once on demand.
#[derive(Debug)]
pub struct LatticePolytope {
    rank: usize,
    halfspaces: Vec<Halfspace>,
    vertices: OnceLock<Result<Vec<DualVector>>>,
    points: OnceLock<Vec<Vec<BigInt>>>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        Self {
            rank: self.rank,
            halfspaces: self.halfspaces.clone(),
            vertices: self.vertices.clone(),
            points: self.points.clone(),
        }
    }
}

/// Outcome of a Minkowski covering test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub covered: bool,
    /// First lattice point of the big polytope that is not a sum.
    pub witness: Option<Vec<BigInt>>,
}

impl LatticePolytope {
    pub fn from_halfspaces(rank: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        for h in &halfspaces {
            if h.normal.ambient_rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: h.normal.ambient_rank(),
                });
            }
        }
        Ok(Self {
            rank,
            halfspaces,
            vertices: OnceLock::new(),
            points: OnceLock::new(),
        })
    }

    /// Convex hull of integer points; the stored halfspaces are the facets.
    pub fn from_points(points: &[Vec<BigInt>]) -> Result<Self> {
        let rational: Vec<Vec<BigRational>> = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        Self::from_rational_points(&rational)
    }

    /// Convex hull of rational points of a full-dimensional polytope.
    /// Meant for small point sets (every rank-sized subset is tried).
    pub fn from_rational_points(points: &[Vec<BigRational>]) -> Result<Self> {
        let Some(n) = points.first().map(Vec::len) else {
            return Err(Error::NotFullDimensional);
        };
        let denom = points
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scaled: BTreeSet<Vec<BigInt>> = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
                    .collect()
            })
            .collect();
        let scaled: Vec<Vec<BigInt>> = scaled.into_iter().collect();
        let base = &scaled[0];
        let diffs: Vec<Vec<BigInt>> = scaled[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        if diffs.is_empty() || rank(&diffs) != n {
            return Err(Error::NotFullDimensional);
        }
        let mut facets: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
        for subset in combinations(scaled.len(), n) {
            let p0 = &scaled[subset[0]];
            let rows: Vec<Vec<BigInt>> = subset[1..]
                .iter()
                .map(|&i| scaled[i].iter().zip(p0).map(|(a, b)| a - b).collect())
                .collect();
            if n > 1 && rank(&rows) != n - 1 {
                continue;
            }
            let mut normal = normal_vector(&rows, n);
            let h = int_dot(&normal, p0);
            let values: Vec<BigInt> = scaled.iter().map(|q| int_dot(&normal, q) - &h).collect();
            let pos = values.iter().any(Signed::is_positive);
            let neg = values.iter().any(Signed::is_negative);
            if pos && neg {
                continue;
            }
            let mut level = h;
            if neg {
                normal = normal.iter().map(|x| -x).collect();
                level = -level;
            }
            // <q, normal> >= level on scaled points, i.e. <p, denom*normal> >= level
            let mut full: Vec<BigInt> = normal.iter().map(|x| x * &denom).collect();
            let mut offset = -level;
            let g = full.iter().fold(offset.clone(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                full = full.iter().map(|x| x / &g).collect();
                offset /= &g;
            }
            facets.insert((full, offset));
        }
        let halfspaces = facets
            .into_iter()
            .map(|(n, c)| Halfspace::new(LatticeVector::new(n).expect("nonempty"), c))
            .collect();
        Self::from_halfspaces(n, halfspaces)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Exact vertex set, sorted lexicographically.
    pub fn vertices(&self) -> Result<&[DualVector]> {
        self.vertices
            .get_or_init(|| self.compute_vertices())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.vertices()?.is_empty())
    }

    pub fn contains(&self, m: &[BigInt]) -> bool {
        self.halfspaces
            .iter()
            .all(|h| !h.slack_int(m).is_negative())
    }

    fn normal_rows(&self) -> Vec<Vec<BigInt>> {
        self.halfspaces
            .iter()
            .map(|h| h.normal.coords().to_vec())
            .collect()
    }

    fn compute_vertices(&self) -> Result<Vec<DualVector>> {
        let n = self.rank;
        let normals = self.normal_rows();
        let r = if normals.is_empty() {
            0
        } else {
            rank(&normals)
        };
        if r < n {
            // non-pointed: the polyhedron is empty or contains a line
            if self.is_feasible_reduced(&normals) {
                return Err(Error::Unbounded);
            }
            return Ok(Vec::new());
        }
        let verts = self.intersect_all(&self.halfspaces, n);
        if verts.is_empty() {
            return Ok(Vec::new());
        }
        // bounded iff no extreme ray of the recession cone
        for subset in combinations(self.halfspaces.len(), n - 1) {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| normals[i].clone()).collect();
            if n > 1 && rank(&rows) != n - 1 {
                continue;
            }
            let d = normal_vector(&rows, n);
            for dir in [d.clone(), d.iter().map(|x| -x).collect::<Vec<_>>()] {
                if normals.iter().all(|row| !int_dot(row, &dir).is_negative()) {
                    return Err(Error::Unbounded);
                }
            }
        }
        Ok(verts.into_iter().map(DualVector::new).collect())
    }

    /// Feasibility of a rank-deficient system, decided on the pivot
    /// coordinates where it becomes pointed.
    fn is_feasible_reduced(&self, normals: &[Vec<BigInt>]) -> bool {
        if normals.is_empty() {
            return true;
        }
        let pivots = pivot_columns(normals);
        if pivots.is_empty() {
            return self.halfspaces.iter().all(|h| !h.offset.is_negative());
        }
        let reduced: Vec<Halfspace> = self
            .halfspaces
            .iter()
            .map(|h| {
                Halfspace::new(
                    LatticeVector::new(
                        pivots
                            .iter()
                            .map(|&c| h.normal.coords()[c].clone())
                            .collect(),
                    )
                    .expect("nonempty"),
                    h.offset.clone(),
                )
            })
            .collect();
        !self.intersect_all(&reduced, pivots.len()).is_empty()
    }

    fn intersect_all(&self, hs: &[Halfspace], n: usize) -> Vec<Vec<BigRational>> {
        let mut found: BTreeSet<Vec<BigRational>> = BTreeSet::new();
        for subset in combinations(hs.len(), n) {
            let rays: Vec<LatticeVector> = subset.iter().map(|&i| hs[i].normal.clone()).collect();
            let rows: Vec<Vec<BigInt>> = rays.iter().map(|r| r.coords().to_vec()).collect();
            if rank(&rows) != n {
                continue;
            }
            let values: Vec<BigRational> = subset
                .iter()
                .map(|&i| BigRational::from_integer(-hs[i].offset.clone()))
                .collect();
            let Ok(sol) = solve_dual_rational(&rays, &values, n) else {
                continue;
            };
            let m = sol.m.coords().to_vec();
            if found.contains(&m) {
                continue;
            }
            if hs.iter().all(|h| !h.slack(&m).is_negative()) {
                found.insert(m);
            }
        }
        found.into_iter().collect()
    }

    fn bounding_box(&self) -> Result<Option<Vec<(BigInt, BigInt)>>> {
        let verts = self.vertices()?;
        if verts.is_empty() {
            return Ok(None);
        }
        let bounds = (0..self.rank)
            .map(|j| {
                let lo = verts
                    .iter()
                    .map(|v| v.coords()[j].ceil().to_integer())
                    .min()
                    .unwrap();
                let hi = verts
                    .iter()
                    .map(|v| v.coords()[j].floor().to_integer())
                    .max()
                    .unwrap();
                (lo, hi)
            })
            .collect();
        Ok(Some(bounds))
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Result<&[Vec<BigInt>]> {
        if let Some(p) = self.points.get() {
            return Ok(p);
        }
        let pts = self.enumerate()?;
        Ok(self.points.get_or_init(|| pts))
    }

    pub fn count_lattice_points(&self) -> Result<usize> {
        Ok(self.lattice_points()?.len())
    }

    /// Lattice points satisfying every halfspace strictly.
    pub fn interior_lattice_points(&self) -> Result<Vec<Vec<BigInt>>> {
        Ok(self
            .lattice_points()?
            .iter()
            .filter(|p| self.halfspaces.iter().all(|h| h.slack_int(p).is_positive()))
            .cloned()
            .collect())
    }

    fn enumerate(&self) -> Result<Vec<Vec<BigInt>>> {
        let Some(bounds) = self.bounding_box()? else {
            return Ok(Vec::new());
        };
        if let Some(fast) = self.enumerate_i64(&bounds) {
            return Ok(fast);
        }
        let n = self.rank;
        let mut out = Vec::new();
        let mut cur: Vec<BigInt> = bounds.iter().map(|b| b.0.clone()).collect();
        loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            let mut j = n;
            loop {
                if j == 0 {
                    return Ok(out);
                }
                j -= 1;
                if cur[j] < bounds[j].1 {
                    cur[j] += 1;
                    for (k, c) in cur.iter_mut().enumerate().skip(j + 1) {
                        *c = bounds[k].0.clone();
                    }
                    break;
                }
            }
        }
    }

    /// Machine-integer odometer, used when every quantity fits comfortably.
    fn enumerate_i64(&self, bounds: &[(BigInt, BigInt)]) -> Option<Vec<Vec<BigInt>>> {
        const LIMIT: i64 = 1 << 40;
        let b: Vec<(i64, i64)> = bounds
            .iter()
            .map(|(lo, hi)| Some((lo.to_i64()?, hi.to_i64()?)))
            .collect::<Option<_>>()?;
        if b.iter()
            .any(|&(lo, hi)| lo.abs() > LIMIT || hi.abs() > LIMIT)
        {
            return None;
        }
        let hs: Vec<(Vec<i128>, i128)> = self
            .halfspaces
            .iter()
            .map(|h| {
                let n: Option<Vec<i128>> = h
                    .normal
                    .coords()
                    .iter()
                    .map(|x| x.to_i64().map(i128::from))
                    .collect();
                Some((n?, i128::from(h.offset.to_i64()?)))
            })
            .collect::<Option<_>>()?;
        if hs.iter().any(|(n, c)| {
            c.abs() > i128::from(LIMIT) || n.iter().any(|x| x.abs() > i128::from(LIMIT))
        }) {
            return None;
        }
        let n = self.rank;
        let mut out = Vec::new();
        let mut cur: Vec<i64> = b.iter().map(|x| x.0).collect();
        loop {
            let inside = hs.iter().all(|(nv, c)| {
                nv.iter()
                    .zip(&cur)
                    .map(|(a, x)| a * i128::from(*x))
                    .sum::<i128>()
                    + c
                    >= 0
            });
            if inside {
                out.push(cur.iter().map(|&x| BigInt::from(x)).collect());
            }
            let mut j = n;
            loop {
                if j == 0 {
                    return Some(out);
                }
                j -= 1;
                if cur[j] < b[j].1 {
                    cur[j] += 1;
                    for k in j + 1..n {
                        cur[k] = b[k].0;
                    }
                    break;
                }
            }
        }
    }

    /// Facet halfspaces: those tight on an affinely spanning set of vertices,
    /// with the indices of those vertices.
    pub fn facets(&self) -> Result<Vec<(Halfspace, Vec<usize>)>> {
        let verts = self.vertices()?;
        let mut seen: BTreeMap<Vec<usize>, Halfspace> = BTreeMap::new();
        for h in &self.halfspaces {
            let tight: Vec<usize> = (0..verts.len())
                .filter(|&i| h.slack(verts[i].coords()).is_zero())
                .collect();
            if tight.is_empty() || seen.contains_key(&tight) {
                continue;
            }
            if affine_rank(verts, &tight) + 1 == self.rank {
                seen.insert(tight, h.clone());
            }
        }
        let mut out: Vec<(Halfspace, Vec<usize>)> = seen.into_iter().map(|(t, h)| (h, t)).collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(out)
    }

    pub fn is_full_dimensional(&self) -> Result<bool> {
        let verts = self.vertices()?;
        if verts.is_empty() {
            return Ok(false);
        }
        let all: Vec<usize> = (0..verts.len()).collect();
        Ok(affine_rank(verts, &all) == self.rank)
    }

    fn origin_is_interior(&self) -> Result<bool> {
        Ok(self.is_full_dimensional()? && self.halfspaces.iter().all(|h| h.offset.is_positive()))
    }

    /// `{y : <y, x> >= -1 for all x in P}`, built from the vertices of `P`.
    pub fn polar(&self) -> Result<LatticePolytope> {
        if !self.origin_is_interior()? {
            return Err(Error::OriginNotInterior);
        }
        let hs = self
            .vertices()?
            .iter()
            .map(|v| {
                let d = v.denominator_lcm();
                let normal: Vec<BigInt> = v
                    .coords()
                    .iter()
                    .map(|x| (x * BigRational::from_integer(d.clone())).to_integer())
                    .collect();
                Halfspace::new(LatticeVector::new(normal).expect("nonempty"), d)
            })
            .collect();
        LatticePolytope::from_halfspaces(self.rank, hs)
    }

    pub fn has_integral_vertices(&self) -> Result<bool> {
        Ok(self.vertices()?.iter().all(DualVector::is_integral))
    }

    /// Integral vertices, origin interior, and integral polar.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.origin_is_interior()? || !self.has_integral_vertices()? {
            return Ok(false);
        }
        self.polar()?.has_integral_vertices()
    }

    /// Fan over the faces of a reflexive polytope: rays are the vertices,
    /// maximal cones the cones over facets.
    pub fn face_fan(&self) -> Result<Fan> {
        if !self.is_reflexive()? {
            return Err(Error::NotReflexive);
        }
        let rays: Vec<LatticeVector> = self
            .vertices()?
            .iter()
            .map(|v| LatticeVector::new(v.to_integral().expect("integral vertex")))
            .collect::<Result<_>>()?;
        let cones = self.facets()?.into_iter().map(|(_, t)| t).collect();
        Fan::new(self.rank, rays, cones)
    }

    /// Minkowski sum, via the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        let a = self.vertices()?;
        let b = other.vertices()?;
        let mut sums = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                sums.push(x.add(y).coords().to_vec());
            }
        }
        LatticePolytope::from_rational_points(&sums)
    }

    /// Integral dilation `k P`.
    pub fn dilate(&self, k: &BigInt) -> Result<LatticePolytope> {
        if !k.is_positive() {
            return Err(Error::Precondition(
                "dilation factor must be positive".into(),
            ));
        }
        LatticePolytope::from_halfspaces(
            self.rank,
            self.halfspaces
                .iter()
                .map(|h| Halfspace::new(h.normal.clone(), &h.offset * k))
                .collect(),
        )
    }
}

fn affine_rank(verts: &[DualVector], idx: &[usize]) -> usize {
    if idx.len() < 2 {
        return 0;
    }
    let base = verts[idx[0]].coords();
    let rows: Vec<Vec<BigRational>> = idx[1..]
        .iter()
        .map(|&i| {
            verts[i]
                .coords()
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let denom = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
                .collect()
        })
        .collect();
    rank(&int_rows)
}

/// Checks that every lattice point of `big` is a sum of a lattice point of
/// `p1` and one of `p2`. The larger summand is hashed and the smaller scanned.
pub fn minkowski_cover(
    big: &LatticePolytope,
    p1: &LatticePolytope,
    p2: &LatticePolytope,
) -> Result<CoverResult> {
    let a = p1.lattice_points()?;
    let b = p2.lattice_points()?;
    let (scan, hashed) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let set: HashSet<&Vec<BigInt>> = hashed.iter().collect();
    for t in big.lattice_points()? {
        let hit = scan.iter().any(|q| {
            let diff: Vec<BigInt> = t.iter().zip(q).map(|(x, y)| x - y).collect();
            set.contains(&diff)
        });
        if !hit {
            return Ok(CoverResult {
                covered: false,
                witness: Some(t.clone()),
            });
        }
    }
    Ok(CoverResult {
        covered: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hs(rows: &[(&[i64], i64)]) -> LatticePolytope {
        let rank = rows[0].0.len();
        LatticePolytope::from_halfspaces(
            rank,
            rows.iter()
                .map(|(n, c)| Halfspace::new(LatticeVector::from_i64(n), BigInt::from(*c)))
                .collect(),
        )
        .unwrap()
    }

    fn simplex(d: i64) -> LatticePolytope {
        hs(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], d)])
    }

    fn pts(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn vertex_set(p: &LatticePolytope) -> Vec<DualVector> {
        p.vertices().unwrap().to_vec()
    }

    #[test]
    fn triangle_and_cube_vertices() {
        let t = simplex(1);
        assert_eq!(
            vertex_set(&t),
            vec![
                DualVector::from_i64(&[0, 0]),
                DualVector::from_i64(&[0, 1]),
                DualVector::from_i64(&[1, 0])
            ]
        );
        let cube = hs(&[
            (&[1, 0, 0], 0),
            (&[0, 1, 0], 0),
            (&[0, 0, 1], 0),
            (&[-1, 0, 0], 1),
            (&[0, -1, 0], 1),
            (&[0, 0, -1], 1),
        ]);
        assert_eq!(cube.vertices().unwrap().len(), 8);
    }

    #[test]
    fn unbounded_and_empty() {
        let quadrant = hs(&[(&[1, 0], 0), (&[0, 1], 0)]);
        assert_eq!(quadrant.vertices().unwrap_err(), Error::Unbounded);
        let strip = hs(&[(&[1, 0], 0), (&[-1, 0], 1)]);
        assert_eq!(strip.vertices().unwrap_err(), Error::Unbounded);
        let empty = simplex(-1);
        assert!(empty.is_empty().unwrap());
        assert_eq!(empty.count_lattice_points().unwrap(), 0);
        let empty_strip = hs(&[(&[1, 0], -1), (&[-1, 0], 0)]);
        assert!(empty_strip.is_empty().unwrap());
    }

    #[test]
    fn dilated_triangle_counts() {
        let four = simplex(4);
        assert_eq!(four.count_lattice_points().unwrap(), 15);
        assert_eq!(
            four.interior_lattice_points().unwrap(),
            pts(&[&[1, 1], &[1, 2], &[2, 1]])
        );
        assert_eq!(simplex(3).interior_lattice_points().unwrap().len(), 1);
        assert_eq!(simplex(8).interior_lattice_points().unwrap().len(), 21);
    }

    #[test]
    fn minkowski_cover_examples() {
        let r = minkowski_cover(&simplex(4), &simplex(3), &simplex(1)).unwrap();
        assert!(r.covered);
        let origin = hs(&[(&[1], 0), (&[-1], 0)]);
        assert!(minkowski_cover(&origin, &origin, &origin).unwrap().covered);
        let seg2 = hs(&[(&[1], 0), (&[-1], 2)]);
        let seg1 = hs(&[(&[1], 0), (&[-1], 1)]);
        let r = minkowski_cover(&seg2, &origin, &seg1).unwrap();
        assert!(!r.covered);
        assert_eq!(r.witness, Some(vec![BigInt::from(2)]));
    }

    #[test]
    fn polar_of_triangle() {
        let p = LatticePolytope::from_points(&pts(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert!(p.is_reflexive().unwrap());
        let q = p.polar().unwrap();
        let mut expected = vec![
            DualVector::from_i64(&[2, -1]),
            DualVector::from_i64(&[-1, 2]),
            DualVector::from_i64(&[-1, -1]),
        ];
        expected.sort();
        assert_eq!(vertex_set(&q), expected);
    }

    #[test]
    fn square_and_cross_polytope_are_dual() {
        let sq =
            LatticePolytope::from_points(&pts(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])).unwrap();
        assert!(sq.is_reflexive().unwrap());
        let mut expected = vec![
            DualVector::from_i64(&[1, 0]),
            DualVector::from_i64(&[-1, 0]),
            DualVector::from_i64(&[0, 1]),
            DualVector::from_i64(&[0, -1]),
        ];
        expected.sort();
        assert_eq!(vertex_set(&sq.polar().unwrap()), expected);
        assert!(sq.polar().unwrap().is_reflexive().unwrap());
    }

    #[test]
    fn dilated_reflexive_simplex_is_not_reflexive() {
        let p = LatticePolytope::from_points(&pts(&[&[2, 0], &[0, 2], &[-2, -2]])).unwrap();
        assert!(!p.is_reflexive().unwrap());
        let off = LatticePolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(off.polar().unwrap_err(), Error::OriginNotInterior);
    }

    #[test]
    fn face_fans() {
        let tri = LatticePolytope::from_points(&pts(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert!(tri.face_fan().unwrap().is_projective_space());
        let cross =
            LatticePolytope::from_points(&pts(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])).unwrap();
        let f = cross.face_fan().unwrap();
        assert_eq!(f.cones().len(), 4);
        assert!(f.is_smooth() && f.is_complete());
        let s3 = LatticePolytope::from_points(&pts(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[-1, -1, -1],
        ]))
        .unwrap();
        assert!(s3.face_fan().unwrap().is_projective_space());
    }

    #[test]
    fn rational_hull_clears_denominators() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let z = BigRational::zero();
        let p = LatticePolytope::from_rational_points(&[
            vec![z.clone(), z.clone()],
            vec![half.clone(), z.clone()],
            vec![z.clone(), half.clone()],
        ])
        .unwrap();
        assert_eq!(p.vertices().unwrap().len(), 3);
        assert_eq!(p.count_lattice_points().unwrap(), 1);
    }

    #[test]
    fn big_coordinates_take_the_bigint_path() {
        let huge = BigInt::from(1u64 << 62) * BigInt::from(4);
        let p = LatticePolytope::from_halfspaces(
            1,
            vec![
                Halfspace::new(LatticeVector::from_i64(&[1]), -huge.clone()),
                Halfspace::new(LatticeVector::from_i64(&[-1]), huge.clone() + 2),
            ],
        )
        .unwrap();
        assert_eq!(p.count_lattice_points().unwrap(), 3);
    }

    proptest! {
        #[test]
        fn polar_is_an_involution_on_reflexive_polygons(
            mask in 1u32..(1 << 8)
        ) {
            let ring: [[i64; 2]; 8] = [[1,0],[1,1],[0,1],[-1,1],[-1,0],[-1,-1],[0,-1],[1,-1]];
            let chosen: Vec<Vec<BigInt>> = ring.iter().enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, r)| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let Ok(p) = LatticePolytope::from_points(&chosen) else { return Ok(()); };
            if !p.is_reflexive().unwrap() { return Ok(()); }
            let pp = p.polar().unwrap().polar().unwrap();
            prop_assert_eq!(vertex_set(&pp), vertex_set(&p));
        }

        #[test]
        fn hull_of_lattice_points_has_the_same_vertices(
            a in 0i64..4, b in 0i64..4, c in 1i64..5, d in 1i64..5
        ) {
            let p = hs(&[(&[1, 0], a), (&[0, 1], b), (&[-1, -1], c + d), (&[-1, 1], c)]);
            if p.is_empty().unwrap() || !p.is_full_dimensional().unwrap() { return Ok(()); }
            if !p.has_integral_vertices().unwrap() { return Ok(()); }
            let hull = LatticePolytope::from_points(p.lattice_points().unwrap()).unwrap();
            prop_assert_eq!(vertex_set(&hull), vertex_set(&p));
        }
    }
}
