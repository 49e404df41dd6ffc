//! Torus-invariant divisors: Cartier data, nef and ample tests, section
//! polytopes, restriction to invariant divisors, curve degrees.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{Fan, InvariantCurveWall, StarFan};
use crate::lattice::{solve_dual, solve_dual_rational, DualVector, LatticeVector};
use crate::polytope::{Halfspace, LatticePolytope};

/// `D = sum a_rho D_rho` on a fixed fan.
#[derive(Clone)]
pub struct Divisor {
    fan: Arc<Fan>,
    coeffs: Vec<BigInt>,
    cartier: OnceLock<Result<CartierData>>,
}

/// Integral local data: `<m_sigma, u_rho> = -a_rho` for every ray of sigma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    pub m: Vec<DualVector>,
}

/// `D1 - D2 = div(chi^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClassWitness {
    pub m: Vec<BigInt>,
}

/// A divisor restricted to the invariant divisor of a ray.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub star: StarFan,
    pub divisor: Divisor,
}

impl PartialEq for Divisor {
    fn eq(&self, other: &Self) -> bool {
        self.same_fan(other) && self.coeffs == other.coeffs
    }
}

impl Eq for Divisor {}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Divisor{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Divisor {
    pub fn new(fan: Arc<Fan>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch {
                expected: fan.num_rays(),
                found: coeffs.len(),
            });
        }
        Ok(Self {
            fan,
            coeffs,
            cartier: OnceLock::new(),
        })
    }

    pub fn from_i64(fan: &Arc<Fan>, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            fan.clone(),
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn zero(fan: &Arc<Fan>) -> Self {
        Self::new(fan.clone(), vec![BigInt::zero(); fan.num_rays()]).expect("length matches")
    }

    /// `K = -sum D_rho`.
    pub fn canonical(fan: &Arc<Fan>) -> Self {
        Self::new(fan.clone(), vec![BigInt::from(-1); fan.num_rays()]).expect("length matches")
    }

    /// The prime divisor of a ray.
    pub fn prime(fan: &Arc<Fan>, ray: usize) -> Result<Self> {
        if ray >= fan.num_rays() {
            return Err(Error::RayOutOfRange(ray));
        }
        let mut c = vec![BigInt::zero(); fan.num_rays()];
        c[ray] = BigInt::from(1);
        Self::new(fan.clone(), c)
    }

    pub fn fan(&self) -> &Arc<Fan> {
        &self.fan
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn same_fan(&self, other: &Divisor) -> bool {
        Arc::ptr_eq(&self.fan, &other.fan) || *self.fan == *other.fan
    }

    fn zip_with(&self, other: &Divisor, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Divisor> {
        if !self.same_fan(other) {
            return Err(Error::FanMismatch);
        }
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Divisor::new(self.fan.clone(), c)
    }

    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Divisor) -> Result<Divisor> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: i64) -> Divisor {
        let k = BigInt::from(k);
        Divisor::new(
            self.fan.clone(),
            self.coeffs.iter().map(|a| a * &k).collect(),
        )
        .expect("length matches")
    }

    /// `D + div(chi^m)`.
    pub fn translate(&self, m: &[BigInt]) -> Divisor {
        let c = self
            .coeffs
            .iter()
            .zip(self.fan.rays())
            .map(|(a, u)| a + crate::lattice::int_dot(m, u.coords()))
            .collect();
        Divisor::new(self.fan.clone(), c).expect("length matches")
    }

    fn local_system(&self, cone: usize) -> (Vec<LatticeVector>, Vec<BigRational>) {
        let rays = self.fan.cones()[cone]
            .iter()
            .map(|&i| self.fan.ray(i).clone())
            .collect();
        let values = self.fan.cones()[cone]
            .iter()
            .map(|&i| BigRational::from_integer(-self.coeffs[i].clone()))
            .collect();
        (rays, values)
    }

    /// Integral Cartier data, or `NotCartier` at the first failing cone.
    pub fn cartier_data(&self) -> Result<&CartierData> {
        self.cartier
            .get_or_init(|| {
                let n = self.fan.rank();
                let mut m = Vec::with_capacity(self.fan.cones().len());
                for c in 0..self.fan.cones().len() {
                    let (rays, values) = self.local_system(c);
                    match solve_dual_rational(&rays, &values, n) {
                        Ok(sol) if sol.integral => m.push(sol.m),
                        _ => return Err(Error::NotCartier { cone: c }),
                    }
                }
                Ok(CartierData { m })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Rational local data, or `NotQCartier` at the first failing cone.
    pub fn rational_cartier_data(&self) -> Result<Vec<DualVector>> {
        let n = self.fan.rank();
        (0..self.fan.cones().len())
            .map(|c| {
                let (rays, values) = self.local_system(c);
                solve_dual_rational(&rays, &values, n)
                    .map(|s| s.m)
                    .map_err(|_| Error::NotQCartier { cone: c })
            })
            .collect()
    }

    pub fn is_cartier(&self) -> bool {
        self.cartier_data().is_ok()
    }

    pub fn is_q_cartier(&self) -> bool {
        self.rational_cartier_data().is_ok()
    }

    /// Local convexity slack `<m_sigma, u_rho> + a_rho` for rays outside sigma.
    fn slacks(&self, data: &[DualVector]) -> impl Iterator<Item = BigRational> + '_ {
        let data = data.to_vec();
        (0..self.fan.cones().len()).flat_map(move |c| {
            let m = data[c].clone();
            let cone = self.fan.cones()[c].clone();
            (0..self.fan.num_rays())
                .filter(move |r| !cone.contains(r))
                .map(move |r| {
                    m.pair(self.fan.ray(r)) + BigRational::from_integer(self.coeffs[r].clone())
                })
        })
    }

    /// Nef test on Cartier data; errors carry the failing cone.
    pub fn check_nef(&self) -> Result<bool> {
        let data = self.cartier_data()?;
        Ok(self.slacks(&data.m).all(|s| !s.is_negative()))
    }

    pub fn check_ample(&self) -> Result<bool> {
        let data = self.cartier_data()?;
        Ok(self.slacks(&data.m).all(|s| s.is_positive()))
    }

    /// False for non-Cartier divisors.
    pub fn is_nef(&self) -> bool {
        self.check_nef().unwrap_or(false)
    }

    pub fn is_ample(&self) -> bool {
        self.check_ample().unwrap_or(false)
    }

    /// Nef test for Q-Cartier divisors.
    pub fn is_nef_rational(&self) -> Result<bool> {
        let data = self.rational_cartier_data()?;
        Ok(self.slacks(&data).all(|s| !s.is_negative()))
    }

    /// `P_D = { m : <m, u_rho> >= -a_rho }`.
    pub fn polytope(&self) -> LatticePolytope {
        let hs = self
            .fan
            .rays()
            .iter()
            .zip(&self.coeffs)
            .map(|(u, a)| Halfspace::new(u.clone(), a.clone()))
            .collect();
        LatticePolytope::from_halfspaces(self.fan.rank(), hs).expect("ranks agree")
    }

    /// Number of lattice points of the section polytope.
    pub fn h0(&self) -> Result<usize> {
        if !self.fan.is_complete() {
            return Err(Error::NotComplete);
        }
        self.polytope().count_lattice_points()
    }

    /// Restriction to the invariant divisor of `ray`.
    pub fn restrict_to(&self, ray: usize) -> Result<Restriction> {
        let star = self.fan.star_fan(ray)?;
        self.restrict_to_star(&star)
    }

    /// Restriction using a precomputed star fan of this divisor's fan.
    ///
    /// The divisor is first moved by `div(chi^{m0})`, `m0 = -a_rho w` with `w`
    /// the frame's section covector, so that its `rho` coefficient vanishes;
    /// the Cartier data on cones through `rho` then descends.
    pub fn restrict_to_star(&self, star: &StarFan) -> Result<Restriction> {
        let data = self.cartier_data()?;
        let rho = star.ray;
        let w = star.frame.section();
        let m0 = DualVector::from_integers(
            &w.iter()
                .map(|x| -(x * &self.coeffs[rho]))
                .collect::<Vec<_>>(),
        );
        let sub = &star.fan;
        let mut coeffs: Vec<Option<BigInt>> = vec![None; sub.num_rays()];
        for (sc, &pc) in star.cone_map.iter().enumerate() {
            let shifted = data.m[pc].sub(&m0);
            let down = star.frame.descend_dual(&shifted)?;
            for &r in &sub.cones()[sc] {
                if coeffs[r].is_none() {
                    let v = down.pair(sub.ray(r));
                    debug_assert!(v.is_integer());
                    coeffs[r] = Some(-v.to_integer());
                }
            }
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::Precondition("star ray in no cone".into())))
            .collect::<Result<_>>()?;
        Ok(Restriction {
            star: star.clone(),
            divisor: Divisor::new(sub.clone(), coeffs)?,
        })
    }

    /// Degree on the invariant curve of a wall, `<m_sigma - m_sigma', u'>`
    /// with `u'` the ray of `sigma'` off the wall; `H . line = 1` on the plane.
    pub fn curve_degree(&self, wall: &InvariantCurveWall) -> Result<BigInt> {
        if !self.fan.is_smooth() || !self.fan.is_complete() {
            return Err(Error::RequiresSmoothComplete);
        }
        let data = self.cartier_data()?;
        let (s, t) = wall.adjacent;
        let u = self.fan.cones()[t]
            .iter()
            .copied()
            .find(|r| !wall.rays.contains(r))
            .ok_or_else(|| Error::Precondition("wall equals its cone".into()))?;
        let diff = data.m[s].sub(&data.m[t]);
        Ok(diff.pair(self.fan.ray(u)).to_integer())
    }

    /// Intersection number `D . E` on a smooth complete surface.
    pub fn intersect_on_surface(&self, other: &Divisor) -> Result<BigInt> {
        if !self.same_fan(other) {
            return Err(Error::FanMismatch);
        }
        if self.fan.rank() != 2 {
            return Err(Error::Precondition("intersection needs a surface".into()));
        }
        let mut total = BigInt::zero();
        for w in self.fan.walls() {
            let r = w.rays[0];
            if !other.coeffs[r].is_zero() {
                total += &other.coeffs[r] * self.curve_degree(&w)?;
            }
        }
        Ok(total)
    }

    /// Degree of a divisor on a projective space fan (its class is `d H`).
    pub fn degree_on_projective_space(&self) -> Result<BigInt> {
        if !self.fan.is_projective_space() {
            return Err(Error::Precondition("fan is not a projective space".into()));
        }
        let w = self
            .fan
            .walls()
            .into_iter()
            .next()
            .ok_or(Error::NotComplete)?;
        self.curve_degree(&w)
    }
}

/// Solves `D1 - D2 = div(chi^m)` over all rays.
pub fn linear_equivalence(d1: &Divisor, d2: &Divisor) -> Result<Option<DivisorClassWitness>> {
    let diff = d1.sub(d2)?;
    match solve_dual(d1.fan.rays(), diff.coeffs()) {
        Ok(sol) => Ok(sol.m.to_integral().map(|m| DivisorClassWitness { m })),
        Err(Error::NoSolution) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Canonical divisor is Cartier.
pub fn is_gorenstein(fan: &Arc<Fan>) -> bool {
    Divisor::canonical(fan).is_cartier()
}

/// Gorenstein with `-K` ample.
pub fn is_gorenstein_fano(fan: &Arc<Fan>) -> bool {
    let anti = Divisor::canonical(fan).scale(-1);
    anti.is_cartier() && anti.is_ample()
}
