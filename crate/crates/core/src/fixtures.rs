//! Named test varieties.
//!
//! `X1` is the projective bundle `P(O + O(2))` over the plane; `X2` is the
//! blow-up of `P^3` at a torus-fixed point followed by the blow-up of an
//! invariant line in the exceptional plane.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::divisor::Divisor;
use crate::fan::{Fan, InvariantCurveWall};

pub fn projective_plane() -> Arc<Fan> {
    projective_space(2)
}

/// Rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
pub fn projective_space(n: usize) -> Arc<Fan> {
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; n]);
    let cones: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    build(n, &rays, &cones)
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Arc<Fan> {
    build(
        2,
        &[vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
}

pub fn p1xp1() -> Arc<Fan> {
    hirzebruch(0)
}

/// `P(1,1,k)`: rays `(1,0), (0,1), (-1,-k)`.
pub fn weighted_projective_plane(k: i64) -> Arc<Fan> {
    build(
        2,
        &[vec![1, 0], vec![0, 1], vec![-1, -k]],
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
    )
}

/// Projective cone over a quadric surface: the square cone at height one
/// plus four simplicial cones through `(0,0,-1)`.
pub fn quadric_cone() -> Arc<Fan> {
    build(
        3,
        &[
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![-1, 0, 1],
            vec![0, -1, 1],
            vec![0, 0, -1],
        ],
        &[
            vec![0, 1, 2, 3],
            vec![0, 1, 4],
            vec![1, 2, 4],
            vec![2, 3, 4],
            vec![3, 0, 4],
        ],
    )
}

fn build(rank: usize, rays: &[Vec<i64>], cones: &[Vec<usize>]) -> Arc<Fan> {
    let r: Vec<&[i64]> = rays.iter().map(Vec::as_slice).collect();
    let c: Vec<&[usize]> = cones.iter().map(Vec::as_slice).collect();
    Arc::new(Fan::from_i64(rank, &r, &c))
}

/// `P(O + O(2))` over `P^2` with its negative section.
#[derive(Clone, Debug)]
pub struct X1 {
    pub fan: Arc<Fan>,
    /// Section with normal bundle of degree `-2`, found by calibration.
    pub d: usize,
    /// The other section.
    pub other_section: usize,
    /// A ray whose divisor is the pullback of a line.
    pub pullback_line: usize,
}

impl X1 {
    /// `alpha D + (2 alpha + 1) pi^* l`.
    pub fn polarization(&self, alpha: i64) -> Divisor {
        self.divisor(alpha, 2 * alpha + 1)
    }

    /// `alpha D + b pi^* l`.
    pub fn divisor(&self, alpha: i64, b: i64) -> Divisor {
        let mut c = vec![0; self.fan.num_rays()];
        c[self.d] = alpha;
        c[self.pullback_line] = b;
        Divisor::from_i64(&self.fan, &c).expect("length matches")
    }

    /// A wall whose invariant curve is a line in `D`.
    pub fn line_in_d_wall(&self) -> InvariantCurveWall {
        self.fan
            .walls()
            .into_iter()
            .find(|w| w.rays.contains(&self.d))
            .expect("D contains invariant curves")
    }
}

pub fn x1() -> X1 {
    let fan = build(
        3,
        &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![-1, -1, 2],
            vec![0, 0, 1],
            vec![0, 0, -1],
        ],
        &[
            vec![0, 1, 3],
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 4],
            vec![1, 2, 4],
            vec![0, 2, 4],
        ],
    );
    let sections = [3usize, 4];
    let degrees: Vec<BigInt> = sections
        .iter()
        .map(|&s| self_restriction_degree(&fan, s))
        .collect();
    let pick = degrees
        .iter()
        .position(|d| *d == BigInt::from(-2))
        .expect("one section has normal degree -2");
    X1 {
        d: sections[pick],
        other_section: sections[1 - pick],
        pullback_line: 0,
        fan,
    }
}

/// Degree of `D_rho|_{D_rho}` when the divisor is a projective space.
pub fn self_restriction_degree(fan: &Arc<Fan>, rho: usize) -> BigInt {
    Divisor::prime(fan, rho)
        .and_then(|d| d.restrict_to(rho))
        .and_then(|r| r.divisor.degree_on_projective_space())
        .expect("smooth complete fixture")
}

/// `Bl_C Bl_p P^3` with the strict transform `D` of the first exceptional
/// plane, the second exceptional divisor `E`, and `Gamma` the pullback of a
/// line under the projection from the blown-up point.
#[derive(Clone, Debug)]
pub struct X2 {
    pub fan: Arc<Fan>,
    pub d: usize,
    pub gamma: usize,
    pub e: usize,
}

impl X2 {
    /// `alpha D + beta Gamma + gamma E`.
    pub fn divisor(&self, alpha: i64, beta: i64, gamma: i64) -> Divisor {
        let mut c = vec![0; self.fan.num_rays()];
        c[self.d] = alpha;
        c[self.gamma] = beta;
        c[self.e] = gamma;
        Divisor::from_i64(&self.fan, &c).expect("length matches")
    }

    /// `alpha D + beta Gamma + (2 alpha - beta + 1) E`.
    pub fn polarization(&self, alpha: i64, beta: i64) -> Divisor {
        self.divisor(alpha, beta, 2 * alpha - beta + 1)
    }
}

pub fn x2() -> X2 {
    let p3 = projective_space(3);
    let (blp, f) = p3.star_subdivide(&[0, 1, 2]).expect("simplicial");
    let (x, g) = blp.star_subdivide(&[0, f]).expect("simplicial");
    X2 {
        fan: Arc::new(x),
        d: f,
        gamma: 1,
        e: g,
    }
}

/// Smooth complete fixtures used by property sweeps.
pub fn smooth_fixtures() -> Vec<Arc<Fan>> {
    let mut v = vec![projective_plane(), projective_space(3)];
    v.extend((0..=5).map(hirzebruch));
    v.push(x1().fan);
    v.push(x2().fan);
    v
}

/// Names accepted by [`by_name`].
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = vec!["P2".into(), "P3".into()];
    v.extend((0..=5).map(|a| format!("F{a}")));
    v.extend(["P112", "P113", "quadric-cone", "X1", "X2"].map(String::from));
    v
}

/// Looks up a fixture fan by name (`P2`, `P3`, `P<n>`, `F<a>`, `P112`,
/// `P113`, `quadric-cone`, `X1`, `X2`; case-insensitive).
pub fn by_name(name: &str) -> Option<Arc<Fan>> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "p112" => return Some(weighted_projective_plane(2)),
        "p113" => return Some(weighted_projective_plane(3)),
        "quadric-cone" | "quadric_cone" => return Some(quadric_cone()),
        "x1" => return Some(x1().fan),
        "x2" => return Some(x2().fan),
        "p1xp1" => return Some(p1xp1()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix('p') {
        let n: usize = rest.parse().ok()?;
        return (1..=4).contains(&n).then(|| projective_space(n));
    }
    if let Some(rest) = lower.strip_prefix('f') {
        let a: i64 = rest.parse().ok()?;
        return (0..=20).contains(&a).then(|| hirzebruch(a));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_named_fixture_is_complete() {
        for n in names() {
            let fan = by_name(&n).unwrap_or_else(|| panic!("{n}"));
            assert!(fan.is_complete(), "{n}");
        }
        assert!(by_name("nonsense").is_none());
    }

    #[test]
    fn x1_calibration_picks_the_upper_section() {
        let x1 = x1();
        assert_eq!(
            x1.fan.ray(x1.d),
            &crate::lattice::LatticeVector::from_i64(&[0, 0, 1])
        );
        assert_eq!(
            self_restriction_degree(&x1.fan, x1.other_section),
            BigInt::from(2)
        );
    }

    #[test]
    fn x2_shape() {
        let x2 = x2();
        assert_eq!(x2.fan.num_rays(), 6);
        assert!(x2.fan.is_smooth() && x2.fan.is_complete());
        assert!(x2.fan.star_fan(x2.d).unwrap().fan.is_projective_space());
        assert_eq!(
            x2.fan.ray(x2.e),
            &crate::lattice::LatticeVector::from_i64(&[2, 1, 1])
        );
    }
}
