//! Subcommands. Exit codes: 0 success, 1 computation failure or failed
//! verification, 2 usage.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use poncelet_core::derived::AnchorSpec;
use poncelet_core::orbit::{build_family, BilliardConfig, OrbitError, OrbitFamily};
use poncelet_core::sweep::{
    run_catalog, sweep_quantity, write_series_csv, ConfigSpec, Mode, RunReport, SweepError,
    SweepPlan, DEFAULT_TOL_ABS, DEFAULT_TOL_REL, DEFAULT_T_SAMPLES,
};

use crate::api::{default_anchors, default_port, serve};
use crate::layers::{parse_layers, Layer};
use crate::payload::{orbit_payload, FamilyPayload};
use crate::report::render;

#[derive(Debug, Parser)]
#[command(
    name = "poncelet",
    version,
    about = "Poncelet N-periodics in the elliptic billiard"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Billiard semi-major axis
    #[arg(long)]
    pub a: f64,
    /// Billiard semi-minor axis
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Period
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the caustic axes, J and L of a family
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Emit one orbit and derived polygons as JSON
    Orbit {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        /// e.g. outer,inner,pedal:f1,antipedal:O,evolute,inversive:f1,polar:f1,dual:f1
        #[arg(long, default_value = "")]
        layers: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample one catalog quantity over the family and write CSV
    Sweep {
        #[arg(long)]
        quantity: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_T_SAMPLES)]
        samples: usize,
        /// O, f1, f2 or x,y
        #[arg(long)]
        anchor: Option<AnchorSpec>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the catalog over a grid and write the JSON report
    Verify(Verify),
    /// Summarize a report JSON
    Report {
        input: PathBuf,
        #[arg(long)]
        failing_only: bool,
    },
    /// Serve the HTTP API
    Serve {
        /// Defaults to $PONCELET_PORT, then 8080
        #[arg(long)]
        port: Option<u16>,
    },
}

#[derive(Debug, Args)]
pub struct Verify {
    /// Semi-major axes, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub a: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Periods, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_T_SAMPLES)]
    pub samples: usize,
    /// Repeatable; defaults to O, f1 and f2
    #[arg(long)]
    pub anchor: Vec<AnchorSpec>,
    /// Restrict to these ids, comma separated
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_TOL_REL)]
    pub tol_rel: f64,
    #[arg(long, default_value_t = DEFAULT_TOL_ABS)]
    pub tol_abs: f64,
    /// Evaluate rows where they are not expected to hold
    #[arg(long)]
    pub diagnostics: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Verify {
    pub fn plan(&self) -> SweepPlan {
        let configs = self
            .n
            .iter()
            .flat_map(|&n| self.a.iter().map(move |&a| ConfigSpec::new(a, self.b, n)))
            .collect();
        let mut plan = SweepPlan::new(configs)
            .with_samples(self.samples)
            .with_anchors(if self.anchor.is_empty() {
                default_anchors()
            } else {
                self.anchor.clone()
            })
            .with_mode(if self.diagnostics {
                Mode::Diagnostics
            } else {
                Mode::Acceptance
            });
        plan.tol_rel = self.tol_rel;
        plan.tol_abs = self.tol_abs;
        if !self.ids.is_empty() {
            plan = plan.with_ids(self.ids.clone());
        }
        plan
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<OrbitError> for Failure {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::InvalidConfig(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Orbit(o) => o.into(),
            SweepError::InvalidPlan(_) | SweepError::NotApplicable { .. } | SweepError::Eval(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn family_of(f: &FamilyArgs) -> Result<OrbitFamily<f64>, Failure> {
    Ok(build_family(&BilliardConfig::new(f.a, f.b, f.n)?)?)
}

fn write_out(path: Option<&Path>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(bytes)
            .map_err(|e| Failure::Compute(format!("stdout: {e}"))),
    }
}

fn json<T: serde::Serialize>(v: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("payload serializes");
    s.push('\n');
    s.into_bytes()
}

/// Runs one command. `Ok(false)` means it ran but verification failed.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Family {
            family,
            json: as_json,
        } => {
            let f = family_of(&family)?;
            let p = FamilyPayload::from(&f);
            let text = if as_json {
                json(&p)
            } else {
                format!(
                    "a'' = {}\nb'' = {}\nJ = {}\nL = {}\n",
                    p.a_c, p.b_c, p.j, p.l
                )
                .into_bytes()
            };
            write_out(None, stdout, &text)?;
            Ok(true)
        }
        Command::Orbit {
            family,
            t,
            layers,
            out,
        } => {
            if !t.is_finite() {
                return Err(Failure::Usage("t must be finite".into()));
            }
            let layers: Vec<Layer> = parse_layers(&layers).map_err(Failure::Usage)?;
            let f = family_of(&family)?;
            let p = orbit_payload(&f, t, &layers).map_err(|e| Failure::Compute(e.to_string()))?;
            write_out(out.as_deref(), stdout, &json(&p))?;
            Ok(true)
        }
        Command::Sweep {
            quantity,
            family,
            samples,
            anchor,
            out,
        } => {
            let f = family_of(&family)?;
            let series = sweep_quantity(
                &f,
                &quantity,
                anchor.map(|a| a.resolve(&f.billiard)),
                samples,
            )?;
            let mut buf = Vec::new();
            write_series_csv(&series, &mut buf).map_err(|e| Failure::Compute(e.to_string()))?;
            write_out(out.as_deref(), stdout, &buf)?;
            Ok(true)
        }
        Command::Verify(v) => {
            let plan = v.plan();
            for c in &plan.configs {
                c.to_config()?;
            }
            let report = run_catalog(&plan)?;
            write_out(v.out.as_deref(), stdout, report.to_json().as_bytes())?;
            if v.out.is_some() {
                let failing: Vec<_> = report.failing().filter(|r| r.flags.is_empty()).collect();
                for r in &failing {
                    let m = r.anchor.as_deref().unwrap_or("-");
                    let _ = writeln!(
                        stderr,
                        "not invariant: {} N={} a={} M={m}",
                        r.id, r.config.n, r.config.a
                    );
                }
                for f in &report.failures {
                    let _ = writeln!(
                        stderr,
                        "failed: N={} a={}: {}",
                        f.config.n, f.config.a, f.message
                    );
                }
            }
            // diagnostics runs are expected to find varying rows
            Ok(plan.mode == Mode::Diagnostics || report.passed())
        }
        Command::Report {
            input,
            failing_only,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let report: RunReport = serde_json::from_str(&text).map_err(|e| {
                Failure::Usage(format!("{} is not a run report: {e}", input.display()))
            })?;
            write_out(None, stdout, render(&report, failing_only).as_bytes())?;
            Ok(true)
        }
        Command::Serve { port } => {
            let port = match port {
                Some(p) => p,
                None => default_port().map_err(Failure::Usage)?,
            };
            let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::Compute(e.to_string()))?;
            rt.block_on(serve(port))
                .map_err(|e| Failure::Compute(format!("serve: {e}")))?;
            Ok(true)
        }
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn run_cli<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    match run(cli, stdout, stderr) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
    }
}
