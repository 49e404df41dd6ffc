use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use toric_audit::audit::{example_xld_classify, ExampleFixture};
use toric_audit::fan_io::{fan_from_json, fan_to_json, parse_divisor_coefficients};
use toric_audit::fixtures;
use toric_audit::ingest::{audit_fan, batch_audit, parse_palp_stream, BatchMode, Polarization};
use toric_audit::report::{emit_report, ReportFormat};

#[derive(Parser)]
#[command(
    name = "toric-audit",
    version,
    about = "Exact audits of adjoint linear systems on toric varieties"
)]
struct Cli {
    /// TOML file with defaults for `jobs`, `format` and `out`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditMode {
    Conjecture,
    Gorenstein3,
}

#[derive(Clone, Copy, ValueEnum)]
enum BatchModeArg {
    Census,
    Gorenstein3,
    Conjecture,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Structured,
    Tabular,
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureArg {
    X1,
    X2,
}

#[derive(Subcommand)]
enum Command {
    /// Audit one fan file.
    Audit {
        fan: PathBuf,
        #[arg(long, value_enum)]
        mode: AuditMode,
        /// Divisor coefficient file for L; defaults to -K.
        #[arg(long = "L", visible_alias = "polarization")]
        l: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit every polytope of a census file through its face fan.
    Batch {
        census: PathBuf,
        #[arg(long, value_enum)]
        mode: BatchModeArg,
        #[arg(long, env = "TORIC_AUDIT_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Divisor coefficient file applied to every record instead of -K.
        #[arg(long)]
        polarization: Option<PathBuf>,
        /// Zero the timing fields.
        #[arg(long)]
        no_timing: bool,
    },
    /// List or emit the built-in fans.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Enumerate polarizations on an example fixture with L ample and
    /// L|_D a line.
    ClassifyExample {
        #[arg(long, value_enum, ignore_case = true)]
        fixture: FixtureArg,
        /// `a:b` for X1, `a:b,c:d` for X2.
        #[arg(long = "box")]
        bounds: String,
        /// Print every scanned tuple, not only admissible ones.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Emit {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    jobs: Option<usize>,
    format: Option<String>,
    out: Option<PathBuf>,
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else {
        return Ok(Config::default());
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn resolve_format(arg: Option<FormatArg>, config: &Config) -> Result<ReportFormat> {
    Ok(match arg {
        Some(FormatArg::Structured) => ReportFormat::Structured,
        Some(FormatArg::Tabular) => ReportFormat::Tabular,
        None => match &config.format {
            Some(f) => f.parse().map_err(anyhow::Error::msg)?,
            None => ReportFormat::Structured,
        },
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(':')
        .with_context(|| format!("range {s:?} is not of the form a:b"))?;
    let (a, b) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Audit {
            fan,
            mode,
            l,
            format,
            out,
        } => {
            let fan = Arc::new(
                fan_from_json(&read(&fan)?)
                    .with_context(|| format!("parsing {}", fan.display()))?,
            );
            let polarization = match l {
                Some(p) => Polarization::Coefficients(
                    parse_divisor_coefficients(&read(&p)?)
                        .with_context(|| format!("parsing {}", p.display()))?,
                ),
                None => Polarization::AntiCanonical,
            };
            let mode = match mode {
                AuditMode::Conjecture => BatchMode::Conjecture,
                AuditMode::Gorenstein3 => BatchMode::Gorenstein3fold,
            };
            let start = std::time::Instant::now();
            let mut report = audit_fan(&fan, mode, &polarization);
            report.timing_ms = start.elapsed().as_millis() as u64;
            let format = resolve_format(format, &config)?;
            write_output(out.as_deref(), &emit_report(&[report], format))
        }
        Command::Batch {
            census,
            mode,
            jobs,
            out,
            format,
            polarization,
            no_timing,
        } => {
            let records = parse_palp_stream(&read(&census)?)
                .with_context(|| format!("parsing {}", census.display()))?;
            let polarization = match polarization {
                Some(p) => Polarization::Coefficients(parse_divisor_coefficients(&read(&p)?)?),
                None => Polarization::AntiCanonical,
            };
            let mode = match mode {
                BatchModeArg::Census => BatchMode::Census,
                BatchModeArg::Gorenstein3 => BatchMode::Gorenstein3fold,
                BatchModeArg::Conjecture => BatchMode::Conjecture,
            };
            let jobs = jobs.or(config.jobs).unwrap_or(0);
            let mut reports = batch_audit(&records, mode, &polarization, jobs)?;
            if no_timing {
                toric_audit::ingest::strip_timing(&mut reports);
            }
            let format = resolve_format(format, &config)?;
            write_output(
                out.as_deref().or(config.out.as_deref()),
                &emit_report(&reports, format),
            )
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                for name in fixtures::names() {
                    println!("{name}");
                }
                Ok(())
            }
            FixtureAction::Emit { name, out } => {
                let fan = fixtures::by_name(&name)
                    .with_context(|| format!("unknown fixture {name:?}"))?;
                write_output(out.as_deref(), &(fan_to_json(&fan) + "\n"))
            }
        },
        Command::ClassifyExample {
            fixture,
            bounds,
            all,
        } => {
            let ranges = bounds
                .split(',')
                .map(parse_range)
                .collect::<Result<Vec<_>>>()?;
            let fixture = match fixture {
                FixtureArg::X1 => ExampleFixture::X1,
                FixtureArg::X2 => ExampleFixture::X2,
            };
            let table = example_xld_classify(fixture, &ranges)?;
            let header = match fixture {
                ExampleFixture::X1 => "alpha,b",
                ExampleFixture::X2 => "alpha,beta,gamma",
            };
            println!("{header},ample,degree_on_d,l_plus_d_nef,admissible");
            for r in table.rows.iter().filter(|r| all || r.admissible) {
                let params: Vec<String> = r.params.iter().map(i64::to_string).collect();
                println!(
                    "{},{},{},{},{}",
                    params.join(","),
                    r.ample,
                    r.restricted_degree,
                    r.l_plus_d_nef,
                    r.admissible
                );
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<()> {
        run(Cli::try_parse_from(
            std::iter::once("toric-audit").chain(args.iter().copied()),
        )?)
    }

    #[test]
    fn audit_and_batch_write_reports() {
        let dir = tempfile::tempdir().unwrap();
        let p = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
        run_args(&["fixtures", "emit", "x1", "--out", &p("x1.json")]).unwrap();
        let l = fixtures::x1().polarization(1);
        fs::write(
            p("l.txt"),
            toric_audit::fan_io::divisor_coefficients_to_string(l.coeffs()),
        )
        .unwrap();
        run_args(&[
            "audit",
            &p("x1.json"),
            "--mode",
            "gorenstein3",
            "--L",
            &p("l.txt"),
            "--out",
            &p("r.json"),
        ])
        .unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(p("r.json")).unwrap()).unwrap();
        assert_eq!(doc["reports"][0]["verdict"], "Hyperbolic");

        fs::write(p("c.txt"), "2 3\n1 0 -1\n0 1 -1\n").unwrap();
        fs::write(
            p("cfg.toml"),
            format!("format = \"tabular\"\njobs = 2\nout = {:?}\n", p("t.csv")),
        )
        .unwrap();
        run_args(&[
            "--config",
            &p("cfg.toml"),
            "batch",
            &p("c.txt"),
            "--mode",
            "census",
            "--no-timing",
        ])
        .unwrap();
        let table = fs::read_to_string(p("t.csv")).unwrap();
        assert!(table.starts_with("record_id,gorenstein,fano,smooth,verdict"));
        // L = -K = 3H leaves the plane curve system 18H, of genus 17*16/2
        assert!(
            table.contains("0,true,true,true,Hyperbolic,,1,136,,0"),
            "{table}"
        );
    }

    #[test]
    fn input_errors_fail() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad.txt");
        fs::write(&bad, "2 3\n1 0\n").unwrap();
        let err = run_args(&["batch", bad.to_str().unwrap(), "--mode", "census"]).unwrap_err();
        assert!(format!("{err:#}").contains("line 2"), "{err:#}");
        assert!(run_args(&["audit", "/nonexistent/fan.json", "--mode", "conjecture"]).is_err());
        assert!(run_args(&["fixtures", "emit", "nope"]).is_err());
        assert!(run_args(&["classify-example", "--fixture", "X1", "--box", "3:1"]).is_err());
        let cfg = dir.path().join("cfg.toml");
        fs::write(&cfg, "colour = 1\n").unwrap();
        assert!(run_args(&["--config", cfg.to_str().unwrap(), "fixtures", "list"]).is_err());
    }

    #[test]
    fn refused_records_still_succeed() {
        let dir = tempfile::tempdir().unwrap();
        let census = dir.path().join("p3.txt");
        fs::write(&census, "3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n").unwrap();
        let out = dir.path().join("out.json");
        run_args(&[
            "batch",
            census.to_str().unwrap(),
            "--mode",
            "gorenstein3",
            "--out",
            out.to_str().unwrap(),
        ])
        .unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
        assert_eq!(doc["reports"][0]["verdict"], "NotCertified(P3 excluded)");
    }
}
