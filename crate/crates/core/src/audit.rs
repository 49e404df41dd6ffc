//! Audits of adjoint linear systems `|N + 2nL|`, `|K + (3n+1)L|` and
//! `|K + 9L|` on toric varieties, producing hyperbolicity certificates.
//!
//! Certificates are built from exact combinatorial checks only: nefness of
//! the relevant divisors, the exceptional rays, the `h^0` identity that is
//! equivalent to surjectivity of restriction, and interior point counts for
//! the genus of general members on surfaces.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::divisor::{is_gorenstein, Divisor, Restriction};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::fixtures;
use crate::lattice::{solve_dual_rational, DualVector};
use crate::polytope::minkowski_cover;

/// Outcome of an audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Hyperbolic,
    /// Hyperbolic away from the invariant divisors of these rays.
    PseudoHyperbolicModulo(Vec<usize>),
    NotCertified(String),
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Verdict::NotCertified(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Hyperbolic => write!(f, "Hyperbolic"),
            Verdict::PseudoHyperbolicModulo(rays) => {
                let r: Vec<String> = rays.iter().map(usize::to_string).collect();
                write!(f, "PseudoHyperbolicModulo([{}])", r.join(","))
            }
            Verdict::NotCertified(reason) => write!(f, "NotCertified({reason})"),
        }
    }
}

/// `h^0(E) - h^0(E - D) = h^0(E|_D)` for one invariant divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityEntry {
    /// Rays followed from the root variety; the last one is restricted to.
    pub path: Vec<usize>,
    pub h0_total: usize,
    pub h0_twisted: usize,
    pub h0_restricted: usize,
    /// Computed on the small Q-factorialization.
    pub via_qfactorialization: bool,
}

impl SurjectivityEntry {
    pub fn balanced(&self) -> bool {
        self.h0_total >= self.h0_twisted && self.h0_total - self.h0_twisted == self.h0_restricted
    }
}

/// Genus of a general member of a nef linear system on a toric surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusResult {
    pub genus: usize,
    pub basepoint_free: bool,
}

impl GenusResult {
    pub fn at_least_two(&self) -> bool {
        self.genus >= 2
    }
}

/// Genus of one surface node of an audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusEntry {
    pub path: Vec<usize>,
    pub genus: usize,
}

/// Certificate for the bound `2g(C) - 2 >= epsilon * (L . C)` on the curves
/// covered by the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityCertificate {
    pub variety: String,
    pub polarization: Vec<BigInt>,
    pub nef_part: Vec<BigInt>,
    pub verdict: Verdict,
    pub epsilon: BigRational,
    /// Divisor the degree in the bound is measured against.
    pub epsilon_reference: String,
    pub exceptional_rays: Vec<usize>,
    pub genus_table: Vec<GenusEntry>,
    pub surjectivity_log: Vec<SurjectivityEntry>,
}

impl HyperbolicityCertificate {
    fn new(variety: &str, n: &Divisor, l: &Divisor) -> Self {
        Self {
            variety: variety.to_string(),
            polarization: l.coeffs().to_vec(),
            nef_part: n.coeffs().to_vec(),
            verdict: Verdict::NotCertified("not audited".into()),
            epsilon: BigRational::one(),
            epsilon_reference: "L".into(),
            exceptional_rays: Vec::new(),
            genus_table: Vec::new(),
            surjectivity_log: Vec::new(),
        }
    }

    fn refuse(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::NotCertified(reason.into());
        self
    }

    /// Hyperbolic verdicts carry only genera at least two and balanced logs.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::Hyperbolic => {
                self.genus_table.iter().all(|g| g.genus >= 2)
                    && self
                        .surjectivity_log
                        .iter()
                        .all(SurjectivityEntry::balanced)
                    && self.epsilon <= BigRational::one()
                    && self.epsilon.is_positive()
            }
            _ => true,
        }
    }
}

fn describe(fan: &Fan) -> String {
    format!("rank {} fan with {} rays", fan.rank(), fan.num_rays())
}

/// `K + cL` is nef.
pub fn fujita_nef_check(l: &Divisor, c: i64) -> bool {
    Divisor::canonical(l.fan())
        .add(&l.scale(c))
        .map(|d| d.is_nef())
        .unwrap_or(false)
}

/// Rays `rho` with `L + D_rho` not nef.
pub fn exceptional_set(l: &Divisor) -> Vec<usize> {
    let fan = l.fan();
    (0..fan.num_rays())
        .filter(|&r| {
            let d = Divisor::prime(fan, r).expect("ray in range");
            !l.add(&d).expect("same fan").is_nef()
        })
        .collect()
}

fn check_polarization(n: &Divisor, l: &Divisor) -> std::result::Result<(), String> {
    if !l.fan().is_complete() {
        return Err("fan is not complete".into());
    }
    if n.fan() != l.fan() && **n.fan() != **l.fan() {
        return Err("N and L live on different fans".into());
    }
    match l.check_ample() {
        Err(e) => return Err(format!("L: {e}")),
        Ok(false) => return Err("L is not ample".into()),
        Ok(true) => {}
    }
    match n.check_nef() {
        Err(e) => return Err(format!("N: {e}")),
        Ok(false) => return Err("N is not nef".into()),
        Ok(true) => {}
    }
    Ok(())
}

/// Certifies `N + 2nL` off the exceptional set (smooth case) or off the
/// toric boundary (Gorenstein case). An empty exceptional set on a smooth
/// fan upgrades to `Hyperbolic`.
pub fn pseudo_hyperbolicity_certificate(n: &Divisor, l: &Divisor) -> HyperbolicityCertificate {
    let fan = l.fan();
    let cert = HyperbolicityCertificate::new(&describe(fan), n, l);
    if let Err(reason) = check_polarization(n, l) {
        return cert.refuse(reason);
    }
    if !is_gorenstein(fan) {
        return cert.refuse("not Gorenstein: K is not Cartier");
    }
    let mut cert = cert;
    if fan.is_smooth() {
        let exc = exceptional_set(l);
        cert.verdict = if exc.is_empty() {
            Verdict::Hyperbolic
        } else {
            Verdict::PseudoHyperbolicModulo(exc.clone())
        };
        cert.exceptional_rays = exc;
    } else {
        // the bound holds relative to the pullback of L on a resolution,
        // which has the same degree on curves meeting the torus
        cert.epsilon_reference = "L (pulled back to a resolution)".into();
        let all: Vec<usize> = (0..fan.num_rays()).collect();
        cert.verdict = Verdict::PseudoHyperbolicModulo(all.clone());
        cert.exceptional_rays = all;
    }
    cert
}

/// Checks `h^0(E) - h^0(E - D_rho) = h^0(D_rho, E|_{D_rho})`. When `D_rho`
/// is not Q-Cartier the restriction is taken on the small
/// Q-factorialization, where the strict transform is.
pub fn restriction_surjectivity(e: &Divisor, ray: usize) -> Result<SurjectivityEntry> {
    restriction_with_divisor(e, ray).map(|(entry, _)| entry)
}

fn restriction_with_divisor(e: &Divisor, ray: usize) -> Result<(SurjectivityEntry, Restriction)> {
    let fan = e.fan();
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    e.cartier_data()?;
    let prime = Divisor::prime(fan, ray)?;
    let h0_total = e.h0()?;
    let h0_twisted = e.sub(&prime)?.h0()?;
    let via = !prime.is_q_cartier();
    let restriction = if via {
        let refined = Arc::new(fan.small_qfactorialization());
        let lifted = Divisor::new(refined, e.coeffs().to_vec())?;
        lifted.restrict_to(ray)?
    } else {
        e.restrict_to(ray)?
    };
    let h0_restricted = restriction.divisor.h0()?;
    Ok((
        SurjectivityEntry {
            path: vec![ray],
            h0_total,
            h0_twisted,
            h0_restricted,
            via_qfactorialization: via,
        },
        restriction,
    ))
}

/// Genus of a general member of `|D|` for nef `D` on a complete surface:
/// the number of interior lattice points of `P_D`.
pub fn surface_general_member_genus(d: &Divisor) -> Result<GenusResult> {
    let fan = d.fan();
    if fan.rank() != 2 {
        return Err(Error::Precondition("genus needs a surface fan".into()));
    }
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    if !d.check_nef()? {
        return Err(Error::RequiresNef);
    }
    let genus = d.polytope().interior_lattice_points()?.len();
    Ok(GenusResult {
        genus,
        basepoint_free: true,
    })
}

/// An effective invariant divisor `Q`-linearly equivalent to `N + L_1 + ...
/// + L_k` with every coefficient at least one, with its summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveWitness {
    pub coefficients: Vec<BigRational>,
    /// Effective summands in construction order.
    pub parts: Vec<Vec<BigRational>>,
    /// The two rays forced up by the nef combinations.
    pub pinned_rays: (usize, usize),
    /// Least common denominator used by the rational representatives.
    pub scaling: BigInt,
}

/// Effective representative `D + div(chi^m)` at a vertex of `P_D`; the
/// vertex may be rational for Q-Cartier `D`.
fn vertex_representative(d: &Divisor, cone: usize) -> Result<Vec<BigRational>> {
    let data = d.rational_cartier_data()?;
    let m: &DualVector = &data[cone];
    Ok(d.fan()
        .rays()
        .iter()
        .zip(d.coeffs())
        .map(|(u, a)| BigRational::from_integer(a.clone()) + m.pair(u))
        .collect())
}

fn lattice_representative(d: &Divisor) -> Result<Option<Vec<BigRational>>> {
    let p = d.polytope();
    let Some(m) = p.lattice_points()?.first().cloned() else {
        return Ok(None);
    };
    Ok(Some(
        d.translate(&m)
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    ))
}

/// Builds an effective invariant divisor with all coefficients at least one
/// in the class of `N + L_1 + ... + L_k` on a surface other than the plane,
/// from an effective representative of `N`, one of `L_1`
/// vanishing exactly on a cone `{T_1, T_2}`, and representatives of the nef
/// combinations `L_2 + L_3 - T_1`, `L_4 + L_5 - T_2` with `T_1`, `T_2` added
/// back. Returns `None` if some step has no representative.
pub fn effective_decomposition_witness(
    n: &Divisor,
    ls: &[Divisor],
) -> Result<Option<EffectiveWitness>> {
    let fan = n.fan();
    if fan.rank() != 2 || !fan.is_complete() {
        return Err(Error::Precondition("needs a complete surface fan".into()));
    }
    if fan.is_projective_space() {
        return Err(Error::Precondition("the plane is excluded".into()));
    }
    if ls.len() < 5 {
        return Err(Error::Precondition(
            "needs at least five ample divisors".into(),
        ));
    }
    if !n.is_nef_rational()? {
        return Err(Error::RequiresNef);
    }
    for l in ls {
        if l.fan() != fan && **l.fan() != **fan {
            return Err(Error::FanMismatch);
        }
    }
    let cone = 0;
    let (t1, t2) = (fan.cones()[cone][0], fan.cones()[cone][1]);
    let mut parts = Vec::new();
    let Some(base) = lattice_representative(n)? else {
        return Ok(None);
    };
    parts.push(base);
    parts.push(vertex_representative(&ls[0], cone)?);
    for (pair, t) in [((1, 2), t1), ((3, 4), t2)] {
        let tp = Divisor::prime(fan, t)?;
        let combo = ls[pair.0].add(&ls[pair.1])?.sub(&tp)?;
        if !combo.is_nef_rational()? {
            return Ok(None);
        }
        let mut rep = vertex_representative(&combo, cone)?;
        rep[t] += BigRational::one();
        parts.push(rep);
    }
    for l in &ls[5..] {
        parts.push(vertex_representative(l, cone)?);
    }
    let mut coefficients = vec![BigRational::zero(); fan.num_rays()];
    for p in &parts {
        for (c, x) in coefficients.iter_mut().zip(p) {
            *c += x;
        }
    }
    if coefficients.iter().any(|c| *c < BigRational::one()) {
        return Ok(None);
    }
    let scaling = coefficients
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    Ok(Some(EffectiveWitness {
        coefficients,
        parts,
        pinned_rays: (t1, t2),
        scaling,
    }))
}

/// Whether `sum coeffs D_rho - D` is the divisor of a rational character.
pub fn q_linearly_equivalent(coeffs: &[BigRational], d: &Divisor) -> bool {
    let values: Vec<BigRational> = coeffs
        .iter()
        .zip(d.coeffs())
        .map(|(c, a)| c - BigRational::from_integer(a.clone()))
        .collect();
    solve_dual_rational(d.fan().rays(), &values, d.fan().rank()).is_ok()
}

/// Covering checks for `P_{N+(2n-1)L} + P_L ⊇ P_{N+2nL}` and
/// `P_{N+2nL} + P_L ⊇ P_{N+(2n+1)L}` on lattice points.
pub fn multiplication_surjectivity(n: &Divisor, l: &Divisor) -> Result<(bool, bool)> {
    let fan = l.fan();
    if !fan.is_smooth() || !fan.is_complete() {
        return Err(Error::RequiresSmoothComplete);
    }
    let dim = fan.rank() as i64;
    let at = |k: i64| n.add(&l.scale(k));
    let pl = l.polytope();
    let lower = at(2 * dim - 1)?.polytope();
    let mid = at(2 * dim)?.polytope();
    let upper = at(2 * dim + 1)?.polytope();
    let first = minkowski_cover(&mid, &lower, &pl)?.covered;
    let second = minkowski_cover(&upper, &mid, &pl)?.covered;
    Ok((first, second))
}

/// Outcome of one recursion node.
struct NodeReport {
    genus: Vec<GenusEntry>,
    log: Vec<SurjectivityEntry>,
    epsilon: BigRational,
}

fn prefix(path: &[usize], mut entries: NodeReport) -> NodeReport {
    for g in &mut entries.genus {
        let mut p = path.to_vec();
        p.append(&mut g.path);
        g.path = p;
    }
    for s in &mut entries.log {
        let mut p = path.to_vec();
        p.append(&mut s.path);
        s.path = p;
    }
    entries
}

fn audit_node(n: &Divisor, l: &Divisor) -> std::result::Result<NodeReport, String> {
    let fan = l.fan();
    let dim = fan.rank();
    check_polarization(n, l)?;
    let system = n.add(&l.scale(2 * dim as i64)).map_err(|e| e.to_string())?;
    if dim == 2 {
        let g = surface_general_member_genus(&system).map_err(|e| e.to_string())?;
        if !g.at_least_two() {
            return Err(format!("surface leaf has genus {}", g.genus));
        }
        return Ok(NodeReport {
            genus: vec![GenusEntry {
                path: Vec::new(),
                genus: g.genus,
            }],
            log: Vec::new(),
            epsilon: BigRational::one(),
        });
    }
    let pseudo = pseudo_hyperbolicity_certificate(n, l);
    if let Verdict::NotCertified(reason) = pseudo.verdict {
        return Err(reason);
    }
    let shifted = n.add(&l.scale(2)).map_err(|e| e.to_string())?;
    let children: Vec<std::result::Result<NodeReport, String>> = (0..fan.num_rays())
        .into_par_iter()
        .map(|rho| {
            let (entry, _) =
                restriction_with_divisor(&system, rho).map_err(|e| format!("ray {rho}: {e}"))?;
            if !entry.balanced() {
                return Err(format!(
                    "restriction to ray {rho} not surjective: {} - {} != {}",
                    entry.h0_total, entry.h0_twisted, entry.h0_restricted
                ));
            }
            let star = fan.star_fan(rho).map_err(|e| e.to_string())?;
            let n_sub = shifted
                .restrict_to_star(&star)
                .map_err(|e| e.to_string())?
                .divisor;
            let l_sub = l
                .restrict_to_star(&star)
                .map_err(|e| e.to_string())?
                .divisor;
            let mut child = audit_node(&n_sub, &l_sub).map_err(|e| format!("ray {rho}: {e}"))?;
            child.log.insert(
                0,
                SurjectivityEntry {
                    path: Vec::new(),
                    ..entry
                },
            );
            Ok(prefix(&[rho], child))
        })
        .collect();
    let mut report = NodeReport {
        genus: Vec::new(),
        log: Vec::new(),
        epsilon: BigRational::one(),
    };
    for child in children {
        let child = child?;
        report.genus.extend(child.genus);
        report.log.extend(child.log);
        if child.epsilon < report.epsilon {
            report.epsilon = child.epsilon;
        }
    }
    Ok(report)
}

/// Inductive audit of `|N + 2nL|` on a smooth complete fan: every
/// restriction to an invariant divisor must be surjective on sections and
/// the restricted system `N' + 2(n-1)L'` with `N' = (N + 2L)|_D`,
/// `L' = L|_D` must pass recursively, down to surfaces whose general member
/// has genus at least two.
pub fn hyperbolicity_audit(n: &Divisor, l: &Divisor) -> HyperbolicityCertificate {
    let fan = l.fan();
    let mut cert = HyperbolicityCertificate::new(&describe(fan), n, l);
    if fan.rank() < 2 {
        return cert.refuse("dimension must be at least 2");
    }
    if !fan.is_smooth() || !fan.is_complete() {
        return cert.refuse("fan is not smooth and complete");
    }
    if let Err(reason) = check_polarization(n, l) {
        return cert.refuse(reason);
    }
    cert.exceptional_rays = exceptional_set(l);
    match audit_node(n, l) {
        Ok(report) => {
            cert.verdict = Verdict::Hyperbolic;
            cert.genus_table = report.genus;
            cert.surjectivity_log = report.log;
            cert.epsilon = report.epsilon;
        }
        Err(reason) => cert.verdict = Verdict::NotCertified(reason),
    }
    cert
}

/// Which adjoint system to audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureVariant {
    /// `|K + (3n+1)L|`, i.e. `N = K + (n+1)L`.
    Full,
    /// `|K + 3nL|`, i.e. `N = K + nL`; fails the nef check on projective space.
    Reduced,
}

/// Audits `|K + (3n+1)L|` (or `|K + 3nL|`) by delegating to
/// [`hyperbolicity_audit`] with `N = K + (n+1)L` (or `K + nL`).
pub fn conjecture_audit(l: &Divisor, variant: ConjectureVariant) -> HyperbolicityCertificate {
    let fan = l.fan();
    let dim = fan.rank() as i64;
    let c = match variant {
        ConjectureVariant::Full => dim + 1,
        ConjectureVariant::Reduced => dim,
    };
    let n = Divisor::canonical(fan).add(&l.scale(c)).expect("same fan");
    if !fujita_nef_check(l, c) {
        let cert = HyperbolicityCertificate::new(&describe(fan), &n, l);
        let mut reason = format!("K+{c}L is not nef");
        if fan.is_projective_space() {
            reason.push_str(" (projective space)");
        }
        return cert.refuse(reason);
    }
    hyperbolicity_audit(&n, l)
}

/// Audit of `|K + 9L|` on a Gorenstein toric threefold other than `P^3`:
/// (a) the certificate for `N = K + 3L`, (b) surjectivity of restriction of
/// `K + 9L` to every invariant divisor, (c) genus at least two for the
/// restricted system on every invariant surface.
pub fn gorenstein_3fold_audit(l: &Divisor) -> HyperbolicityCertificate {
    let fan = l.fan();
    let k = Divisor::canonical(fan);
    let n = k.add(&l.scale(3)).expect("same fan");
    let mut cert = HyperbolicityCertificate::new(&describe(fan), &n, l);
    if fan.rank() != 3 {
        return cert.refuse("not a threefold");
    }
    if !fan.is_complete() {
        return cert.refuse("fan is not complete");
    }
    if !is_gorenstein(fan) {
        return cert.refuse("not Gorenstein: K is not Cartier");
    }
    if fan.is_projective_space() {
        return cert.refuse("P3 excluded");
    }
    match l.check_ample() {
        Ok(true) => {}
        Ok(false) => return cert.refuse("L is not ample"),
        Err(e) => return cert.refuse(format!("L: {e}")),
    }
    let pseudo = pseudo_hyperbolicity_certificate(&n, l);
    if let Verdict::NotCertified(reason) = &pseudo.verdict {
        return cert.refuse(format!("K+3L: {reason}"));
    }
    cert.exceptional_rays = pseudo.exceptional_rays.clone();
    cert.epsilon_reference = pseudo.epsilon_reference.clone();
    let system = k.add(&l.scale(9)).expect("same fan");
    let results: Vec<std::result::Result<(SurjectivityEntry, GenusEntry), String>> = (0..fan
        .num_rays())
        .into_par_iter()
        .map(|rho| {
            let (entry, restriction) =
                restriction_with_divisor(&system, rho).map_err(|e| format!("ray {rho}: {e}"))?;
            if !entry.balanced() {
                return Err(format!(
                    "restriction to ray {rho} not surjective: {} - {} != {}",
                    entry.h0_total, entry.h0_twisted, entry.h0_restricted
                ));
            }
            let g = surface_general_member_genus(&restriction.divisor)
                .map_err(|e| format!("ray {rho}: {e}"))?;
            if !g.at_least_two() {
                return Err(format!(
                    "ray {rho}: restricted system has genus {}",
                    g.genus
                ));
            }
            Ok((
                entry,
                GenusEntry {
                    path: vec![rho],
                    genus: g.genus,
                },
            ))
        })
        .collect();
    for r in results {
        match r {
            Ok((entry, genus)) => {
                cert.surjectivity_log.push(entry);
                cert.genus_table.push(genus);
            }
            Err(reason) => return cert.refuse(reason),
        }
    }
    cert.verdict = Verdict::Hyperbolic;
    cert
}

/// Degrees of `K + (3n+1)(H_1 + H_2)` on `P^{n1} x P^{n2}` against the
/// hyperbolicity thresholds for very general hypersurfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBound {
    pub degrees: (i64, i64),
    /// `d_1 >= n + n_1 - 1` and `d_2 >= n + n_2 - 1`.
    pub projective: bool,
    /// Grassmannian variant: degrees one higher, thresholds `n + n_i - 2`.
    pub grassmannian: bool,
}

pub fn product_bound(n1: i64, n2: i64) -> Result<ProductBound> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::Precondition("dimensions must be positive".into()));
    }
    let n = n1 + n2;
    let d1 = -(n1 + 1) + 3 * n + 1;
    let d2 = -(n2 + 1) + 3 * n + 1;
    debug_assert_eq!((d1, d2), (2 * n + n2, 2 * n + n1));
    Ok(ProductBound {
        degrees: (d1, d2),
        projective: d1 >= n + n1 - 1 && d2 >= n + n2 - 1,
        grassmannian: d1 + 1 >= n + n1 - 2 && d2 + 1 >= n + n2 - 2,
    })
}

pub fn product_bound_check(n1: i64, n2: i64) -> bool {
    product_bound(n1, n2)
        .map(|b| b.projective && b.grassmannian)
        .unwrap_or(false)
}

/// Which example fixture to classify polarizations on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleFixture {
    X1,
    X2,
}

/// One scanned parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    /// `(alpha, b)` on X1, `(alpha, beta, gamma)` on X2.
    pub params: Vec<i64>,
    pub ample: bool,
    /// Degree of `L|_D` on `D = P^2`.
    pub restricted_degree: BigInt,
    pub l_plus_d_nef: bool,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationTable {
    pub fixture: ExampleFixture,
    pub rows: Vec<ClassificationRow>,
}

impl ClassificationTable {
    pub fn admissible(&self) -> Vec<&ClassificationRow> {
        self.rows.iter().filter(|r| r.admissible).collect()
    }
}

/// Enumerates polarizations `L` with `L` ample and `L|_D` a line class.
///
/// `boxes` bounds `alpha` (X1) or `(alpha, beta)` (X2); the remaining
/// coefficient is scanned over a window wide enough to contain every
/// solution of the degree condition.
pub fn example_xld_classify(
    fixture: ExampleFixture,
    boxes: &[(i64, i64)],
) -> Result<ClassificationTable> {
    let rows = match fixture {
        ExampleFixture::X1 => {
            let &[(lo, hi)] = boxes else {
                return Err(Error::Precondition("X1 takes one range".into()));
            };
            let x1 = fixtures::x1();
            let w = 2 * lo.abs().max(hi.abs()) + 3;
            let mut rows = Vec::new();
            for alpha in lo..=hi {
                for b in -w..=w {
                    let l = x1.divisor(alpha, b);
                    rows.push(classify_row(&l, x1.d, vec![alpha, b])?);
                }
            }
            rows
        }
        ExampleFixture::X2 => {
            let &[(alo, ahi), (blo, bhi)] = boxes else {
                return Err(Error::Precondition("X2 takes two ranges".into()));
            };
            let x2 = fixtures::x2();
            let w = 2 * [alo, ahi, blo, bhi]
                .iter()
                .map(|x| x.abs())
                .max()
                .unwrap_or(0)
                + 3;
            let mut rows = Vec::new();
            for alpha in alo..=ahi {
                for beta in blo..=bhi {
                    for gamma in -w..=w {
                        let l = x2.divisor(alpha, beta, gamma);
                        rows.push(classify_row(&l, x2.d, vec![alpha, beta, gamma])?);
                    }
                }
            }
            rows
        }
    };
    Ok(ClassificationTable { fixture, rows })
}

fn classify_row(l: &Divisor, d: usize, params: Vec<i64>) -> Result<ClassificationRow> {
    let ample = l.is_ample();
    let restricted_degree = l.restrict_to(d)?.divisor.degree_on_projective_space()?;
    let l_plus_d_nef = l.add(&Divisor::prime(l.fan(), d)?)?.is_nef();
    Ok(ClassificationRow {
        params,
        ample,
        admissible: ample && restricted_degree.is_one(),
        restricted_degree,
        l_plus_d_nef,
    })
}
