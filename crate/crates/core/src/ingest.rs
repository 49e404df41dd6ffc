//! Reflexive polytope census ingestion and batch auditing.
//!
//! Census files alternate a header line `r c` with an integer matrix of `r`
//! rows and `c` columns. The dimension is the smaller of the two; when the
//! columns outnumber the rows, vertices are the columns. Anything after the
//! two header integers is ignored.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::audit::{
    conjecture_audit, gorenstein_3fold_audit, pseudo_hyperbolicity_certificate, ConjectureVariant,
    HyperbolicityCertificate, Verdict,
};
use crate::divisor::{is_gorenstein, Divisor};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::polytope::LatticePolytope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRecord {
    pub index: usize,
    /// First and last line (1-based, inclusive) of the record.
    pub lines: (usize, usize),
    pub rank: usize,
    pub vertices: Vec<Vec<BigInt>>,
}

impl PolytopeRecord {
    pub fn polytope(&self) -> Result<LatticePolytope> {
        LatticePolytope::from_points(&self.vertices)
    }
}

fn parse_row(line: &str, lineno: usize) -> Result<Vec<BigInt>> {
    line.split_whitespace()
        .map(|t| {
            BigInt::from_str(t).map_err(|_| Error::Parse {
                line: lineno,
                message: format!("expected an integer, found {t:?}"),
            })
        })
        .collect()
}

pub fn parse_palp_stream(text: &str) -> Result<Vec<PolytopeRecord>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut records = Vec::new();
    while let Some((start, header)) = lines.next() {
        let dims: Vec<usize> = header
            .split_whitespace()
            .take(2)
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: start,
                message: format!("malformed header {header:?}"),
            })?;
        let &[r, c] = dims.as_slice() else {
            return Err(Error::Parse {
                line: start,
                message: format!("malformed header {header:?}"),
            });
        };
        let rank = r.min(c);
        if !(2..=4).contains(&rank) {
            return Err(Error::Parse {
                line: start,
                message: format!("unsupported dimension {rank}"),
            });
        }
        let mut rows = Vec::with_capacity(r);
        let mut end = start;
        for _ in 0..r {
            let (lineno, line) = lines.next().ok_or(Error::Parse {
                line: end + 1,
                message: "matrix truncated".into(),
            })?;
            let row = parse_row(line, lineno)?;
            if row.len() != c {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {c} entries, found {}", row.len()),
                });
            }
            rows.push(row);
            end = lineno;
        }
        let vertices = if r == rank {
            (0..c)
                .map(|j| rows.iter().map(|row| row[j].clone()).collect())
                .collect()
        } else {
            rows
        };
        records.push(PolytopeRecord {
            index: records.len(),
            lines: (start, end),
            rank,
            vertices,
        });
    }
    Ok(records)
}

/// Emits records in the column layout `parse_palp_stream` reads.
pub fn emit_palp(records: &[PolytopeRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        let _ = writeln!(out, "{} {}", rec.rank, rec.vertices.len());
        for i in 0..rec.rank {
            let row: Vec<String> = rec.vertices.iter().map(|v| v[i].to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

/// Translates a polytope with exactly one interior lattice point so that
/// the point sits at the origin.
pub fn center(record: &PolytopeRecord) -> Result<PolytopeRecord> {
    let interior = record.polytope()?.interior_lattice_points()?;
    let [p] = interior.as_slice() else {
        return Err(Error::Precondition(format!(
            "{} interior lattice points",
            interior.len()
        )));
    };
    let mut out = record.clone();
    for v in &mut out.vertices {
        for (x, c) in v.iter_mut().zip(p) {
            *x -= c;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BatchMode {
    /// The adjoint system `K + (3n+1)L`: a full audit on smooth fans, the
    /// pseudo certificate on singular Gorenstein ones.
    Census,
    Gorenstein3fold,
    Conjecture,
}

impl FromStr for BatchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "census" => Ok(BatchMode::Census),
            "gorenstein3" | "gorenstein3fold" => Ok(BatchMode::Gorenstein3fold),
            "conjecture" => Ok(BatchMode::Conjecture),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polarization {
    AntiCanonical,
    /// Coefficients indexed by the face fan's rays, i.e. the polytope's
    /// vertices in the order of [`LatticePolytope::vertices`].
    Coefficients(Vec<BigInt>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub gorenstein: bool,
    pub fano: bool,
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub record_id: usize,
    pub flags: Flags,
    pub verdict: Verdict,
    pub certificate: Option<HyperbolicityCertificate>,
    pub timing_ms: u64,
}

impl AuditReport {
    pub fn strip_timing(&mut self) {
        self.timing_ms = 0;
    }
}

pub fn strip_timing(reports: &mut [AuditReport]) {
    reports.iter_mut().for_each(AuditReport::strip_timing);
}

pub fn fan_flags(fan: &Arc<Fan>) -> Flags {
    let gorenstein = is_gorenstein(fan);
    Flags {
        gorenstein,
        fano: gorenstein && Divisor::canonical(fan).scale(-1).is_ample(),
        smooth: fan.is_smooth(),
    }
}

/// Runs one audit on a fan; failures become `NotCertified`.
pub fn audit_fan(fan: &Arc<Fan>, mode: BatchMode, polarization: &Polarization) -> AuditReport {
    let flags = fan_flags(fan);
    let l = match polarization {
        Polarization::AntiCanonical => Ok(Divisor::canonical(fan).scale(-1)),
        Polarization::Coefficients(c) => Divisor::new(fan.clone(), c.clone()),
    };
    let certificate = l.map(|l| run_mode(&l, mode));
    let (verdict, certificate) = match certificate {
        Ok(c) => (c.verdict.clone(), Some(c)),
        Err(e) => (Verdict::NotCertified(format!("polarization: {e}")), None),
    };
    AuditReport {
        record_id: 0,
        flags,
        verdict,
        certificate,
        timing_ms: 0,
    }
}

fn run_mode(l: &Divisor, mode: BatchMode) -> HyperbolicityCertificate {
    match mode {
        BatchMode::Conjecture => conjecture_audit(l, ConjectureVariant::Full),
        BatchMode::Gorenstein3fold => gorenstein_3fold_audit(l),
        BatchMode::Census => {
            let fan = l.fan();
            if fan.is_smooth() {
                conjecture_audit(l, ConjectureVariant::Full)
            } else {
                let dim = fan.rank() as i64;
                let n = Divisor::canonical(fan)
                    .add(&l.scale(dim + 1))
                    .expect("same fan");
                pseudo_hyperbolicity_certificate(&n, l)
            }
        }
    }
}

pub fn audit_record(
    record: &PolytopeRecord,
    mode: BatchMode,
    polarization: &Polarization,
) -> AuditReport {
    let start = Instant::now();
    let fan = record.polytope().and_then(|p| p.face_fan());
    let mut report = match fan {
        Ok(fan) => audit_fan(&Arc::new(fan), mode, polarization),
        Err(e) => AuditReport {
            record_id: 0,
            flags: Flags::default(),
            verdict: Verdict::NotCertified(format!("face fan: {e}")),
            certificate: None,
            timing_ms: 0,
        },
    };
    report.record_id = record.index;
    report.timing_ms = start.elapsed().as_millis() as u64;
    report
}

/// Audits every record on a pool of `jobs` workers (`0` for the default);
/// reports come back in record order.
pub fn batch_audit(
    records: &[PolytopeRecord],
    mode: BatchMode,
    polarization: &Polarization,
    jobs: usize,
) -> Result<Vec<AuditReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    Ok(pool.install(|| {
        records
            .par_iter()
            .map(|r| audit_record(r, mode, polarization))
            .collect()
    }))
}
