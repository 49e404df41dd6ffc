//! Exact linear algebra over the lattice `N = Z^n` and its dual `M`.
//!
//! Everything here is arbitrary precision. Integer vectors live in `N`,
//! rational covectors in `M_Q`; the pairing is the plain dot product.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A vector of the lattice `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { coords })
    }

    /// Convenience constructor for small literals. Panics on an empty slice.
    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
            .expect("lattice vector literal must be nonempty")
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn ambient_rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides by the gcd of the coordinates. The direction is preserved.
    pub fn make_primitive(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.content();
        Ok(Self {
            coords: self.coords.iter().map(|c| c / &g).collect(),
        })
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        int_dot(&self.coords, &other.coords)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> LatticeVector {
        Self {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(|c| c.to_i64()).collect()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A rational covector in `M_Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualVector {
    coords: Vec<BigRational>,
}

impl DualVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![BigRational::zero(); rank],
        }
    }

    pub fn from_integers(coords: &[BigInt]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn ambient_rank(&self) -> usize {
        self.coords.len()
    }

    /// The pairing `<m, u>`.
    pub fn pair(&self, u: &LatticeVector) -> BigRational {
        self.coords
            .iter()
            .zip(u.coords())
            .fold(BigRational::zero(), |acc, (m, x)| acc + m * x)
    }

    pub fn pair_int(&self, u: &[BigInt]) -> BigRational {
        self.coords
            .iter()
            .zip(u)
            .fold(BigRational::zero(), |acc, (m, x)| acc + m * x)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn to_integral(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    pub fn add(&self, other: &DualVector) -> DualVector {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &DualVector) -> DualVector {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> DualVector {
        Self {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Exact determinant of the matrix whose rows are `vectors`.
pub fn det(vectors: &[LatticeVector]) -> Result<BigInt> {
    let n = vectors.len();
    for v in vectors {
        if v.ambient_rank() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.ambient_rank(),
            });
        }
    }
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.coords.clone()).collect();
    Ok(det_rows(rows))
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn det_rows(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Reduced row echelon form over `Q`. Returns the reduced rows and pivot columns.
pub(crate) fn rref(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    rref(&to_rational_rows(rows), ncols).1.len()
}

/// Pivot columns of the row space of `rows`; projecting onto them is
/// injective on the span.
pub(crate) fn pivot_columns(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    rref(&to_rational_rows(rows), ncols).1
}

/// Result of [`solve_dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSolution {
    pub m: DualVector,
    pub integral: bool,
}

/// Solves `<m, rays[i]> = values[i]` for a rational covector `m`.
///
/// Free variables are set to zero, so for a non-spanning ray set the returned
/// solution is supported on the pivot coordinates only.
pub fn solve_dual(rays: &[LatticeVector], values: &[BigInt]) -> Result<DualSolution> {
    if rays.len() != values.len() {
        return Err(Error::DimensionMismatch {
            expected: rays.len(),
            found: values.len(),
        });
    }
    let Some(n) = rays.first().map(LatticeVector::ambient_rank) else {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    };
    let values: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    solve_dual_rational(rays, &values, n)
}

pub(crate) fn solve_dual_rational(
    rays: &[LatticeVector],
    values: &[BigRational],
    n: usize,
) -> Result<DualSolution> {
    let mut aug: Vec<Vec<BigRational>> = Vec::with_capacity(rays.len());
    for (u, v) in rays.iter().zip(values) {
        if u.ambient_rank() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.ambient_rank(),
            });
        }
        let mut row: Vec<BigRational> = u
            .coords()
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        row.push(v.clone());
        aug.push(row);
    }
    let (red, pivots) = rref(&aug, n + 1);
    if pivots.last() == Some(&n) {
        return Err(Error::NoSolution);
    }
    let mut m = vec![BigRational::zero(); n];
    for (row, &c) in red.iter().zip(&pivots) {
        m[c] = row[n].clone();
    }
    let m = DualVector::new(m);
    let integral = m.is_integral();
    Ok(DualSolution { m, integral })
}

/// Integer normal vector to the hyperplane spanned by `rows`
/// (`d - 1` vectors in `Z^d`), via signed maximal minors.
pub(crate) fn normal_vector(rows: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, d);
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let m = det_rows(minor);
            if j % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// Divides an integer vector by the gcd of its entries; zero stays zero.
pub(crate) fn primitive_coords(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// A unimodular matrix `U` with `U u = e_1`, together with its inverse.
///
/// Rows of `U` after the first give coordinates on `N / Z u`; the first row
/// is an integral covector `w` with `<w, u> = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularFrame {
    pub u: Vec<Vec<BigInt>>,
    pub u_inv: Vec<Vec<BigInt>>,
}

impl UnimodularFrame {
    pub fn for_primitive(vector: &LatticeVector) -> Result<Self> {
        if !vector.is_primitive() {
            return Err(Error::Precondition(format!("{vector} is not primitive")));
        }
        let n = vector.ambient_rank();
        let mut x: Vec<BigInt> = vector.coords().to_vec();
        let mut u = identity(n);
        let mut u_inv = identity(n);
        loop {
            let nonzero: Vec<usize> = (0..n).filter(|&i| !x[i].is_zero()).collect();
            let p = *nonzero
                .iter()
                .min_by(|&&a, &&b| x[a].abs().cmp(&x[b].abs()).then(a.cmp(&b)))
                .expect("primitive vector is nonzero");
            if p != 0 {
                x.swap(0, p);
                u.swap(0, p);
                for row in u_inv.iter_mut() {
                    row.swap(0, p);
                }
            }
            if nonzero.len() == 1 {
                break;
            }
            for i in 1..n {
                if x[i].is_zero() {
                    continue;
                }
                let q = x[i].div_floor(&x[0]);
                if q.is_zero() {
                    continue;
                }
                // row_i -= q row_0 ; inverse: col_0 += q col_i
                let t = &q * &x[0];
                x[i] -= t;
                let row0 = u[0].clone();
                for (a, b) in u[i].iter_mut().zip(&row0) {
                    *a -= &q * b;
                }
                for row in u_inv.iter_mut() {
                    let t = &q * &row[i];
                    row[0] += t;
                }
            }
        }
        if x[0].is_negative() {
            for a in u[0].iter_mut() {
                *a = -a.clone();
            }
            for row in u_inv.iter_mut() {
                row[0] = -row[0].clone();
            }
        }
        Ok(Self { u, u_inv })
    }

    /// Coordinates of `v` in the quotient lattice `N / Z u`.
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.u[1..].iter().map(|row| int_dot(row, v)).collect()
    }

    /// The section covector `w` with `<w, u> = 1`.
    pub fn section(&self) -> Vec<BigInt> {
        self.u[0].clone()
    }

    /// Transports a covector `m` of `M` into the frame: `m U^{-1}`.
    pub fn transport_dual(&self, m: &DualVector) -> Vec<BigRational> {
        let n = self.u.len();
        (0..n)
            .map(|j| {
                m.coords()
                    .iter()
                    .zip(&self.u_inv)
                    .fold(BigRational::zero(), |acc, (mi, row)| acc + mi * &row[j])
            })
            .collect()
    }

    /// Restricts a covector vanishing on `u` to the dual of the quotient.
    pub fn descend_dual(&self, m: &DualVector) -> Result<DualVector> {
        let t = self.transport_dual(m);
        if !t[0].is_zero() {
            return Err(Error::Precondition(
                "covector does not vanish on the quotient direction".into(),
            ));
        }
        Ok(DualVector::new(t[1..].to_vec()))
    }

    /// Inverse of [`descend_dual`](Self::descend_dual).
    pub fn lift_dual(&self, m: &DualVector) -> DualVector {
        let n = self.u.len();
        let mut framed = vec![BigRational::zero()];
        framed.extend(m.coords().iter().cloned());
        DualVector::new(
            (0..n)
                .map(|j| {
                    framed
                        .iter()
                        .zip(&self.u)
                        .fold(BigRational::zero(), |acc, (a, row)| acc + a * &row[j])
                })
                .collect(),
        )
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    #[test]
    fn make_primitive_examples() {
        assert_eq!(lv(&[2, 4]).make_primitive().unwrap(), lv(&[1, 2]));
        assert_eq!(lv(&[1, 0, 0]).make_primitive().unwrap(), lv(&[1, 0, 0]));
        assert_eq!(lv(&[-3, 6, 9]).make_primitive().unwrap(), lv(&[-1, 2, 3]));
        assert_eq!(lv(&[0, 0]).make_primitive(), Err(Error::ZeroVector));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&[lv(&[1, 0]), lv(&[0, 1])]).unwrap(), BigInt::from(1));
        assert_eq!(det(&[lv(&[1, 0]), lv(&[1, 2])]).unwrap(), BigInt::from(2));
        assert_eq!(
            det(&[lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[-1, -1, 2])]).unwrap(),
            BigInt::from(2)
        );
        assert!(matches!(
            det(&[lv(&[1, 0, 0]), lv(&[0, 1, 0])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_dual_examples() {
        let e = [lv(&[1, 0]), lv(&[0, 1])];
        let s = solve_dual(&e, &[0.into(), 0.into()]).unwrap();
        assert_eq!(s.m, DualVector::from_i64(&[0, 0]));
        assert!(s.integral);

        let s = solve_dual(&e, &[0.into(), (-1).into()]).unwrap();
        assert_eq!(s.m, DualVector::from_i64(&[0, -1]));
        assert!(s.integral);

        let s = solve_dual(&[lv(&[1, 1]), lv(&[1, -1])], &[1.into(), 0.into()]).unwrap();
        assert_eq!(s.m, DualVector::new(vec![q(1, 2), q(1, 2)]));
        assert!(!s.integral);
    }

    #[test]
    fn solve_dual_inconsistent_and_underdetermined() {
        let rays = [lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])];
        assert_eq!(
            solve_dual(&rays, &[1.into(), 1.into(), 3.into()]),
            Err(Error::NoSolution)
        );
        let s = solve_dual(&[lv(&[0, 2, 1])], &[3.into()]).unwrap();
        assert_eq!(s.m.pair(&lv(&[0, 2, 1])), q(3, 1));
        assert_eq!(s.m.coords()[0], q(0, 1));
    }

    #[test]
    fn unimodular_frame_sends_vector_to_e1() {
        for v in [[0, 0, -1], [-1, -1, 2], [3, 5, 7], [1, 0, 0], [2, -3, 0]] {
            let u = lv(&v);
            let f = UnimodularFrame::for_primitive(&u).unwrap();
            let image: Vec<BigInt> = f.u.iter().map(|r| int_dot(r, u.coords())).collect();
            let mut e1 = vec![BigInt::zero(); 3];
            e1[0] = BigInt::one();
            assert_eq!(image, e1);
            let rows: Vec<LatticeVector> =
                f.u.iter()
                    .map(|r| LatticeVector::new(r.clone()).unwrap())
                    .collect();
            assert_eq!(det(&rows).unwrap().abs(), BigInt::one());
            // U * U^{-1} = I
            for i in 0..3 {
                for j in 0..3 {
                    let s: BigInt = (0..3).map(|k| &f.u[i][k] * &f.u_inv[k][j]).sum();
                    assert_eq!(
                        s,
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn descend_then_lift_is_identity() {
        let u = lv(&[-1, -1, 2]);
        let f = UnimodularFrame::for_primitive(&u).unwrap();
        let m = DualVector::from_i64(&[2, 0, 1]);
        assert!(m.pair(&u).is_zero());
        let down = f.descend_dual(&m).unwrap();
        assert_eq!(f.lift_dual(&down), m);
        let v = [BigInt::from(4), BigInt::from(-2), BigInt::from(5)];
        assert_eq!(down.pair_int(&f.project(&v)), m.pair_int(&v));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-6i64..=6, n), n)
    }

    proptest! {
        #[test]
        fn make_primitive_is_idempotent(v in prop::collection::vec(-40i64..=40, 1..5)) {
            let v = lv(&v);
            prop_assume!(!v.is_zero());
            let p = v.make_primitive().unwrap();
            prop_assert!(p.is_primitive());
            prop_assert_eq!(p.make_primitive().unwrap(), p);
        }

        #[test]
        fn det_swap_negates_and_is_linear(m in small_matrix(3), extra in prop::collection::vec(-6i64..=6, 3)) {
            let rows: Vec<LatticeVector> = m.iter().map(|r| lv(r)).collect();
            let d = det(&rows).unwrap();
            let mut swapped = rows.clone();
            swapped.swap(0, 2);
            prop_assert_eq!(det(&swapped).unwrap(), -d.clone());
            let mut sum = rows.clone();
            sum[1] = rows[1].add(&lv(&extra));
            let mut other = rows.clone();
            other[1] = lv(&extra);
            prop_assert_eq!(det(&sum).unwrap(), d + det(&other).unwrap());
            let mut dup = rows.clone();
            dup[2] = dup[0].clone();
            prop_assert!(det(&dup).unwrap().is_zero());
        }

        #[test]
        fn solve_dual_repairs_values(m in small_matrix(3), vals in prop::collection::vec(-9i64..=9, 3)) {
            let rows: Vec<LatticeVector> = m.iter().map(|r| lv(r)).collect();
            prop_assume!(!det(&rows).unwrap().is_zero());
            let values: Vec<BigInt> = vals.iter().map(|&v| BigInt::from(v)).collect();
            let s = solve_dual(&rows, &values).unwrap();
            for (u, v) in rows.iter().zip(&values) {
                prop_assert_eq!(s.m.pair(u), BigRational::from_integer(v.clone()));
            }
            prop_assert_eq!(s.integral, s.m.is_integral());
        }
    }
}
