//! Fans, their combinatorial predicates, star fans and small
//! Q-factorializations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cone::{
    combinations, contains_point, extremal_generators, facets_full_dim, facets_in_span, is_pointed,
    ConeFacet,
};
use crate::error::{Error, Result};
use crate::lattice::{det_rows, rank, LatticeVector, UnimodularFrame};

/// A fan given by its rays and maximal cones.
///
/// Maximal cones are sorted lists of ray indices. Faces are derived on demand.
#[derive(Clone)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
    facets: OnceLock<Vec<Vec<Vec<usize>>>>,
    complete: OnceLock<bool>,
    smooth: OnceLock<bool>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.rays == other.rays && self.cones == other.cones
    }
}

impl Eq for Fan {}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fan")
            .field("rank", &self.rank)
            .field(
                "rays",
                &self.rays.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            )
            .field("cones", &self.cones)
            .finish()
    }
}

/// A codimension-one cone together with the two maximal cones containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCurveWall {
    pub rays: Vec<usize>,
    pub adjacent: (usize, usize),
}

/// The fan of the invariant divisor of a ray, in the quotient lattice.
#[derive(Clone, Debug)]
pub struct StarFan {
    pub fan: Arc<Fan>,
    pub ray: usize,
    pub frame: UnimodularFrame,
    /// Parent ray index to star ray index.
    pub ray_map: BTreeMap<usize, usize>,
    /// Parent maximal cone index for each star maximal cone.
    pub cone_map: Vec<usize>,
}

impl Fan {
    pub fn new(rank: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidFan("rank must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.ambient_rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: r.ambient_rank(),
                });
            }
            if !r.is_primitive() {
                return Err(Error::InvalidFan(format!("ray {i} = {r} is not primitive")));
            }
        }
        let distinct: BTreeSet<&LatticeVector> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::InvalidFan("duplicate rays".into()));
        }
        let mut normalized = Vec::with_capacity(cones.len());
        let mut used = vec![false; rays.len()];
        for (ci, cone) in cones.into_iter().enumerate() {
            let set: BTreeSet<usize> = cone.into_iter().collect();
            if set.is_empty() {
                return Err(Error::InvalidFan(format!("cone {ci} is empty")));
            }
            for &i in &set {
                if i >= rays.len() {
                    return Err(Error::RayOutOfRange(i));
                }
                used[i] = true;
            }
            let cone: Vec<usize> = set.into_iter().collect();
            let gens: Vec<Vec<BigInt>> = cone.iter().map(|&i| rays[i].coords().to_vec()).collect();
            if !is_pointed(&gens) {
                return Err(Error::InvalidFan(format!(
                    "cone {ci} is not strongly convex"
                )));
            }
            if extremal_generators(&gens).len() != cone.len() {
                return Err(Error::InvalidFan(format!(
                    "cone {ci} lists a ray that is not extremal"
                )));
            }
            normalized.push(cone);
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidFan(format!(
                "ray {i} lies in no maximal cone"
            )));
        }
        Ok(Self {
            rank,
            rays,
            cones: normalized,
            facets: OnceLock::new(),
            complete: OnceLock::new(),
            smooth: OnceLock::new(),
        })
    }

    /// Builds a fan from small integer literals. Panics on invalid input.
    pub fn from_i64(rank: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Self {
        Self::new(
            rank,
            rays.iter().map(|r| LatticeVector::from_i64(r)).collect(),
            cones.iter().map(|c| c.to_vec()).collect(),
        )
        .expect("fan literal must be valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone_generators(&self, cone: usize) -> Vec<Vec<BigInt>> {
        self.cones[cone]
            .iter()
            .map(|&i| self.rays[i].coords().to_vec())
            .collect()
    }

    fn cone_dimension(&self, cone: usize) -> usize {
        rank(&self.cone_generators(cone))
    }

    /// Maximal cones containing the given ray, in index order.
    pub fn cones_containing(&self, ray: usize) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&c| self.cones[c].contains(&ray))
            .collect()
    }

    /// Facets of every maximal cone as sorted global ray sets.
    /// Cones that are not full-dimensional get an empty list.
    fn facet_table(&self) -> &Vec<Vec<Vec<usize>>> {
        self.facets.get_or_init(|| {
            (0..self.cones.len())
                .map(|c| {
                    if self.cone_dimension(c) != self.rank {
                        return Vec::new();
                    }
                    facets_full_dim(&self.cone_generators(c), self.rank)
                        .into_iter()
                        .map(|f| f.members.iter().map(|&m| self.cones[c][m]).collect())
                        .collect()
                })
                .collect()
        })
    }

    pub(crate) fn full_dim_facets(&self, cone: usize) -> Vec<ConeFacet> {
        facets_full_dim(&self.cone_generators(cone), self.rank)
    }

    fn wall_incidence(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut inc: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (c, facets) in self.facet_table().iter().enumerate() {
            for f in facets {
                inc.entry(f.clone()).or_default().push(c);
            }
        }
        inc
    }

    /// Every maximal cone is full-dimensional and every wall lies in
    /// exactly two maximal cones.
    pub fn is_complete(&self) -> bool {
        *self.complete.get_or_init(|| self.compute_complete())
    }

    fn compute_complete(&self) -> bool {
        if (0..self.cones.len()).any(|c| self.cone_dimension(c) != self.rank) {
            return false;
        }
        self.wall_incidence().values().all(|v| v.len() == 2)
    }

    pub fn is_simplicial(&self) -> bool {
        (0..self.cones.len()).all(|c| self.cone_dimension(c) == self.cones[c].len())
    }

    /// Every maximal cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        *self
            .smooth
            .get_or_init(|| (0..self.cones.len()).all(|c| self.cone_is_smooth(c)))
    }

    fn cone_is_smooth(&self, c: usize) -> bool {
        let gens = self.cone_generators(c);
        let k = gens.len();
        if rank(&gens) != k {
            return false;
        }
        // gcd of maximal minors is one iff the rays extend to a basis
        let mut g = BigInt::zero();
        for cols in combinations(self.rank, k) {
            let minor: Vec<Vec<BigInt>> = gens
                .iter()
                .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
                .collect();
            g = g.gcd(&det_rows(minor));
            if g.is_one() {
                return true;
            }
        }
        g.is_one()
    }

    /// `n + 1` rays, `n + 1` maximal cones, smooth and complete.
    pub fn is_projective_space(&self) -> bool {
        self.rays.len() == self.rank + 1
            && self.cones.len() == self.rank + 1
            && self.is_smooth()
            && self.is_complete()
    }

    /// Codimension-one cones shared by exactly two maximal cones.
    pub fn walls(&self) -> Vec<InvariantCurveWall> {
        self.wall_incidence()
            .into_iter()
            .filter(|(_, v)| v.len() == 2)
            .map(|(rays, v)| InvariantCurveWall {
                rays,
                adjacent: (v[0], v[1]),
            })
            .collect()
    }

    /// Whether an integer point lies in the support of the fan.
    pub fn support_contains(&self, p: &[BigInt]) -> bool {
        (0..self.cones.len()).any(|c| self.cone_contains(c, p))
    }

    pub fn cone_contains(&self, c: usize, p: &[BigInt]) -> bool {
        if self.cone_dimension(c) == self.rank {
            contains_point(&self.full_dim_facets(c), p)
        } else {
            // lower-dimensional cones only occur for incomplete fans; test via
            // the augmented generator set
            let gens = self.cone_generators(c);
            let mut with_p = gens.clone();
            with_p.push(p.to_vec());
            if rank(&with_p) != rank(&gens) {
                return false;
            }
            let ext = extremal_generators(&with_p);
            p.iter().all(Zero::is_zero) || !ext.contains(&gens.len())
        }
    }

    /// Star fan of a ray in `N / Z u_ray`.
    pub fn star_fan(&self, ray: usize) -> Result<StarFan> {
        if ray >= self.rays.len() {
            return Err(Error::RayOutOfRange(ray));
        }
        if self.rank < 2 {
            return Err(Error::Precondition("star fan needs rank at least 2".into()));
        }
        let frame = UnimodularFrame::for_primitive(&self.rays[ray])?;
        let containing = self.cones_containing(ray);
        let mut projected: BTreeMap<usize, LatticeVector> = BTreeMap::new();
        let mut cone_members: Vec<Vec<usize>> = Vec::new();
        for &c in &containing {
            let others: Vec<usize> = self.cones[c]
                .iter()
                .copied()
                .filter(|&i| i != ray)
                .collect();
            let gens: Vec<Vec<BigInt>> = others
                .iter()
                .map(|&i| frame.project(self.rays[i].coords()))
                .collect();
            let ext = extremal_generators(&gens);
            let mut members = Vec::new();
            for e in ext {
                let parent = others[e];
                let img = LatticeVector::new(gens[e].clone())?.make_primitive()?;
                projected.insert(parent, img);
                members.push(parent);
            }
            cone_members.push(members);
        }
        let ray_map: BTreeMap<usize, usize> = projected
            .keys()
            .enumerate()
            .map(|(star, &parent)| (parent, star))
            .collect();
        let rays: Vec<LatticeVector> = projected.into_values().collect();
        let cones = cone_members
            .iter()
            .map(|m| m.iter().map(|p| ray_map[p]).collect())
            .collect();
        let fan = Fan::new(self.rank - 1, rays, cones)?;
        Ok(StarFan {
            fan: Arc::new(fan),
            ray,
            frame,
            ray_map,
            cone_map: containing,
        })
    }

    /// Ray-preserving simplicial refinement: each non-simplicial cone is
    /// pulled at its lexicographically smallest ray, recursively on faces.
    pub fn small_qfactorialization(&self) -> Fan {
        if self.is_simplicial() {
            return self.clone();
        }
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for c in &self.cones {
            for mut t in self.pull(c) {
                t.sort_unstable();
                if !cones.contains(&t) {
                    cones.push(t);
                }
            }
        }
        Fan::new(self.rank, self.rays.clone(), cones)
            .expect("pulling triangulation of a fan is a fan")
    }

    fn pull(&self, cone: &[usize]) -> Vec<Vec<usize>> {
        let gens: Vec<Vec<BigInt>> = cone
            .iter()
            .map(|&i| self.rays[i].coords().to_vec())
            .collect();
        if rank(&gens) == cone.len() {
            return vec![cone.to_vec()];
        }
        let apex_local = (0..cone.len())
            .min_by(|&a, &b| self.rays[cone[a]].cmp(&self.rays[cone[b]]))
            .expect("cone is nonempty");
        let apex = cone[apex_local];
        let mut out = Vec::new();
        for facet in facets_in_span(&gens) {
            if facet.members.contains(&apex_local) {
                continue;
            }
            let face: Vec<usize> = facet.members.iter().map(|&m| cone[m]).collect();
            for mut t in self.pull(&face) {
                t.push(apex);
                out.push(t);
            }
        }
        out
    }

    /// Star subdivision of a simplicial fan along one of its cones.
    /// Returns the new fan and the index of the added ray.
    pub fn star_subdivide(&self, cone: &[usize]) -> Result<(Fan, usize)> {
        if !self.is_simplicial() {
            return Err(Error::Precondition(
                "star subdivision needs a simplicial fan".into(),
            ));
        }
        let tau: BTreeSet<usize> = cone.iter().copied().collect();
        let mut sum = vec![BigInt::zero(); self.rank];
        for &i in &tau {
            for (s, x) in sum.iter_mut().zip(self.rays[i].coords()) {
                *s += x;
            }
        }
        let new_ray = LatticeVector::new(sum)?.make_primitive()?;
        let new_index = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(new_ray);
        let mut cones = Vec::new();
        for c in &self.cones {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            if tau.is_subset(&set) {
                for &t in &tau {
                    let mut next: Vec<usize> = set.iter().copied().filter(|&i| i != t).collect();
                    next.push(new_index);
                    cones.push(next);
                }
            } else {
                cones.push(c.clone());
            }
        }
        Ok((Fan::new(self.rank, rays, cones)?, new_index))
    }

    /// Product fan; rays of `self` come first.
    pub fn product(&self, other: &Fan) -> Fan {
        let n = self.rank + other.rank;
        let mut rays = Vec::new();
        for r in &self.rays {
            let mut c = r.coords().to_vec();
            c.extend(std::iter::repeat_n(BigInt::zero(), other.rank));
            rays.push(LatticeVector::new(c).expect("nonempty"));
        }
        for r in &other.rays {
            let mut c = vec![BigInt::zero(); self.rank];
            c.extend(r.coords().iter().cloned());
            rays.push(LatticeVector::new(c).expect("nonempty"));
        }
        let off = self.rays.len();
        let mut cones = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|i| i + off));
                cones.push(c);
            }
        }
        Fan::new(n, rays, cones).expect("product of fans is a fan")
    }

    /// Index of a ray given by coordinates.
    pub fn ray_index(&self, coords: &[i64]) -> Option<usize> {
        let v = LatticeVector::from_i64(coords);
        self.rays.iter().position(|r| *r == v)
    }
}

impl StarFan {
    /// Image of a parent ray in the quotient lattice (not made primitive).
    pub fn project(&self, parent_ray: &LatticeVector) -> Vec<BigInt> {
        self.frame.project(parent_ray.coords())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn completeness_examples() {
        assert!(fixtures::projective_plane().is_complete());
        assert!(fixtures::projective_space(3).is_complete());
        let single = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
        assert!(!single.is_complete());
        assert!(fixtures::quadric_cone().is_complete());
        assert!(fixtures::x1().fan.is_complete());
    }

    #[test]
    fn smoothness_examples() {
        assert!(fixtures::projective_plane().is_smooth());
        assert!(!fixtures::weighted_projective_plane(2).is_smooth());
        assert!(fixtures::x1().fan.is_smooth());
        assert!(!fixtures::quadric_cone().is_smooth());
        // only the cone spanned by (1,0) and (-1,-2) is singular
        let p112 = fixtures::weighted_projective_plane(2);
        let singular: Vec<_> = (0..3).filter(|&c| !p112.cone_is_smooth(c)).collect();
        assert_eq!(singular.len(), 1);
        let gens = p112.cone_generators(singular[0]);
        assert_eq!(num_traits::Signed::abs(&det_rows(gens)), BigInt::from(2));
    }

    #[test]
    fn simplicial_and_qfactorialization() {
        assert!(fixtures::projective_plane().is_simplicial());
        let qc = fixtures::quadric_cone();
        assert!(!qc.is_simplicial());
        let q = qc.small_qfactorialization();
        assert!(q.is_simplicial());
        assert!(q.is_complete());
        assert_eq!(q.rays(), qc.rays());
        assert_eq!(q.cones().len(), qc.cones().len() + 1);
        let p2 = fixtures::projective_plane();
        assert_eq!(p2.small_qfactorialization(), *p2);
    }

    #[test]
    fn quadric_cone_is_pulled_at_lexicographic_minimum() {
        let qc = fixtures::quadric_cone();
        let apex = qc.ray_index(&[-1, 0, 1]).unwrap();
        let q = qc.small_qfactorialization();
        let square = qc.cones().iter().find(|c| c.len() == 4).unwrap();
        let new: Vec<&Vec<usize>> = q
            .cones()
            .iter()
            .filter(|c| c.iter().all(|i| square.contains(i)))
            .collect();
        assert_eq!(new.len(), 2);
        assert!(new.iter().all(|c| c.contains(&apex)));
    }

    #[test]
    fn wall_counts() {
        assert_eq!(fixtures::projective_plane().walls().len(), 3);
        assert_eq!(fixtures::projective_space(3).walls().len(), 6);
        assert_eq!(fixtures::x1().fan.walls().len(), 9);
        for w in fixtures::projective_plane().walls() {
            assert_eq!(w.rays.len(), 1);
        }
    }

    #[test]
    fn star_fans_of_examples() {
        let p3 = fixtures::projective_space(3);
        let s = p3.star_fan(2).unwrap();
        assert!(s.fan.is_projective_space());
        assert_eq!(s.fan.rank(), 2);

        let x1 = fixtures::x1();
        let down = x1.fan.ray_index(&[0, 0, -1]).unwrap();
        assert!(x1.fan.star_fan(down).unwrap().fan.is_projective_space());

        let f1 = fixtures::hirzebruch(1);
        let r = f1.ray_index(&[0, 1]).unwrap();
        let s = f1.star_fan(r).unwrap();
        assert_eq!(s.fan.rank(), 1);
        assert_eq!(s.fan.num_rays(), 2);
        assert!(s.fan.is_complete());
    }

    #[test]
    fn star_of_smooth_complete_is_smooth_complete() {
        for fan in fixtures::smooth_fixtures() {
            for r in 0..fan.num_rays() {
                let s = fan.star_fan(r).unwrap();
                assert!(s.fan.is_smooth(), "star of ray {r}");
                assert!(s.fan.is_complete(), "star of ray {r}");
            }
        }
    }

    #[test]
    fn star_of_nonsimplicial_cone_drops_interior_projection() {
        let qc = fixtures::quadric_cone();
        let r = qc.ray_index(&[1, 0, 1]).unwrap();
        let s = qc.star_fan(r).unwrap();
        assert!(s.fan.is_complete());
        // the opposite ray (-1,0,1) is not adjacent to (1,0,1)
        assert!(!s.ray_map.contains_key(&qc.ray_index(&[-1, 0, 1]).unwrap()));
    }

    #[test]
    fn invalid_fans_are_rejected() {
        assert!(matches!(
            Fan::new(2, vec![LatticeVector::from_i64(&[2, 0])], vec![vec![0]]),
            Err(Error::InvalidFan(_))
        ));
        assert!(matches!(
            Fan::new(
                2,
                vec![
                    LatticeVector::from_i64(&[1, 0]),
                    LatticeVector::from_i64(&[-1, 0])
                ],
                vec![vec![0, 1]]
            ),
            Err(Error::InvalidFan(_))
        ));
        assert!(matches!(
            Fan::new(2, vec![LatticeVector::from_i64(&[1, 0])], vec![vec![3]]),
            Err(Error::RayOutOfRange(3))
        ));
    }

    #[test]
    fn product_of_lines_is_p1xp1() {
        let p1 = fixtures::projective_space(1);
        let prod = p1.product(&p1);
        assert!(prod.is_smooth() && prod.is_complete());
        assert_eq!(prod.cones().len(), 4);
    }
}
