//! Report documents: a structured JSON document and a flat CSV table with
//! the same columns.

use serde::Serialize;

use crate::audit::{SurjectivityEntry, Verdict};
use crate::ingest::AuditReport;

pub const REPORT_FORMAT: &str = "toric-audit-report";
pub const REPORT_VERSION: u32 = 1;

pub const COLUMNS: [&str; 10] = [
    "record_id",
    "gorenstein",
    "fano",
    "smooth",
    "verdict",
    "exceptional_rays",
    "epsilon",
    "genus_table",
    "surjectivity_log",
    "timing_ms",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Structured,
    Tabular,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "structured" | "json" => Ok(ReportFormat::Structured),
            "tabular" | "csv" => Ok(ReportFormat::Tabular),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

#[derive(Serialize)]
struct FlagsOut {
    gorenstein: bool,
    fano: bool,
    smooth: bool,
}

#[derive(Serialize)]
struct SurjectivityOut<'a> {
    path: &'a [usize],
    h0_total: usize,
    h0_twisted: usize,
    h0_restricted: usize,
    balanced: bool,
    via_qfactorialization: bool,
}

impl<'a> From<&'a SurjectivityEntry> for SurjectivityOut<'a> {
    fn from(s: &'a SurjectivityEntry) -> Self {
        Self {
            path: &s.path,
            h0_total: s.h0_total,
            h0_twisted: s.h0_twisted,
            h0_restricted: s.h0_restricted,
            balanced: s.balanced(),
            via_qfactorialization: s.via_qfactorialization,
        }
    }
}

#[derive(Serialize)]
struct ReportOut<'a> {
    record_id: usize,
    flags: FlagsOut,
    verdict: String,
    exceptional_rays: &'a [usize],
    epsilon: String,
    genus_table: Vec<usize>,
    surjectivity_log: Vec<SurjectivityOut<'a>>,
    timing_ms: u64,
}

#[derive(Serialize)]
struct DocumentOut<'a> {
    format: &'static str,
    version: u32,
    count: usize,
    reports: Vec<ReportOut<'a>>,
}

fn verdict_string(v: &Verdict) -> String {
    v.to_string()
}

fn to_out(r: &AuditReport) -> ReportOut<'_> {
    let cert = r.certificate.as_ref();
    ReportOut {
        record_id: r.record_id,
        flags: FlagsOut {
            gorenstein: r.flags.gorenstein,
            fano: r.flags.fano,
            smooth: r.flags.smooth,
        },
        verdict: verdict_string(&r.verdict),
        exceptional_rays: cert.map_or(&[], |c| c.exceptional_rays.as_slice()),
        epsilon: cert.map_or_else(|| "1".to_string(), |c| c.epsilon.to_string()),
        genus_table: cert.map_or_else(Vec::new, |c| {
            c.genus_table.iter().map(|g| g.genus).collect()
        }),
        surjectivity_log: cert.map_or_else(Vec::new, |c| {
            c.surjectivity_log.iter().map(Into::into).collect()
        }),
        timing_ms: r.timing_ms,
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Renders reports in the given format; the output ends with a newline.
pub fn emit_report(reports: &[AuditReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Structured => {
            let doc = DocumentOut {
                format: REPORT_FORMAT,
                version: REPORT_VERSION,
                count: reports.len(),
                reports: reports.iter().map(to_out).collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        ReportFormat::Tabular => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(COLUMNS).expect("in-memory write");
            for r in reports {
                let o = to_out(r);
                let log = join(
                    o.surjectivity_log.iter().map(|s| {
                        format!(
                            "{}:{}-{}={}",
                            join(s.path, "/"),
                            s.h0_total,
                            s.h0_twisted,
                            s.h0_restricted
                        )
                    }),
                    ";",
                );
                w.write_record([
                    o.record_id.to_string(),
                    o.flags.gorenstein.to_string(),
                    o.flags.fano.to_string(),
                    o.flags.smooth.to_string(),
                    o.verdict,
                    join(o.exceptional_rays, ";"),
                    o.epsilon,
                    join(&o.genus_table, ";"),
                    log,
                    o.timing_ms.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flushed")).expect("utf-8")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::Divisor;
    use crate::fixtures;
    use crate::ingest::{audit_fan, BatchMode, Polarization};

    #[test]
    fn empty_documents() {
        let doc: serde_json::Value =
            serde_json::from_str(&emit_report(&[], ReportFormat::Structured)).unwrap();
        assert_eq!(doc["count"], 0);
        assert_eq!(doc["reports"].as_array().unwrap().len(), 0);
        assert_eq!(
            emit_report(&[], ReportFormat::Tabular),
            COLUMNS.join(",") + "\n"
        );
    }

    #[test]
    fn plane_report() {
        let p2 = fixtures::projective_plane();
        let h = Divisor::from_i64(&p2, &[0, 0, 1]).unwrap();
        let r = audit_fan(
            &p2,
            BatchMode::Conjecture,
            &Polarization::Coefficients(h.coeffs().to_vec()),
        );
        let doc: serde_json::Value = serde_json::from_str(&emit_report(
            std::slice::from_ref(&r),
            ReportFormat::Structured,
        ))
        .unwrap();
        let rep = &doc["reports"][0];
        assert_eq!(rep["verdict"], "Hyperbolic");
        assert_eq!(rep["genus_table"], serde_json::json!([3]));
        assert_eq!(rep["epsilon"], "1");
        let keys: Vec<&String> = rep.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            [
                "epsilon",
                "exceptional_rays",
                "flags",
                "genus_table",
                "record_id",
                "surjectivity_log",
                "timing_ms",
                "verdict"
            ]
        );
        let table = emit_report(&[r], ReportFormat::Tabular);
        let mut rd = csv::Reader::from_reader(table.as_bytes());
        let row = rd.records().next().unwrap().unwrap();
        assert_eq!(&row[4], "Hyperbolic");
        assert_eq!(&row[7], "3");
    }

    #[test]
    fn x1_report() {
        let x1 = fixtures::x1();
        let l = x1.polarization(1);
        let r = audit_fan(
            &x1.fan,
            BatchMode::Gorenstein3fold,
            &Polarization::Coefficients(l.coeffs().to_vec()),
        );
        let doc: serde_json::Value =
            serde_json::from_str(&emit_report(&[r], ReportFormat::Structured)).unwrap();
        let rep = &doc["reports"][0];
        assert_eq!(rep["exceptional_rays"].as_array().unwrap().len(), 1);
        assert!(rep["genus_table"]
            .as_array()
            .unwrap()
            .iter()
            .any(|g| g == 21));
        assert!(rep["surjectivity_log"]
            .as_array()
            .unwrap()
            .iter()
            .all(|s| s["balanced"] == true));
    }
}
