//! The `nccr` command line: `info`, `cohomology`, `certify` and `verify`.
//!
//! Exit codes: 0 success, 2 failed verification, 3 exhausted search,
//! 4 invalid input.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nccr_core::io::{
    certificate_from_json, certificate_to_json, digest_matches, fan_from_json, polytope_from_json, to_canonical_string, IoError,
};
use nccr_core::{certify, verify, BigInt, CertifyConfig, ForbiddenCones, LatticePolytope, PipelineError};
use serde_json::Value;

#[derive(Debug, Parser)]
#[command(name = "nccr", version, about = "Certify toric NCCRs of almost simplicial Gorenstein cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, vertex count, simplicity, reflexivity and Gorenstein witness of a polytope.
    Info { polytope: PathBuf },
    /// Cohomology dimensions of the line bundle with divisor vector r on a complete simplicial fan.
    Cohomology {
        fan: PathBuf,
        /// Comma-separated coefficients, one per ray.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        divisor: Vec<BigInt>,
    },
    /// Run the construction and write a certificate.
    Certify {
        polytope: PathBuf,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Recheck a stored certificate.
    Verify { certificate: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, env = "NCCR_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub k0_cap: u64,
    #[arg(long, default_value_t = 1_000)]
    pub rejection_cap: u64,
    #[arg(long, default_value_t = 1)]
    pub koszul_radius: u32,
    #[arg(long, default_value_t = nccr_core::geometry::DEFAULT_VERTEX_CAP)]
    pub vertex_cap: usize,
    /// Certificate path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Cross-check every acyclicity verdict against lattice-point counts.
    #[arg(long)]
    pub oracle: bool,
}

impl RunConfig {
    pub fn certify_config(&self) -> CertifyConfig {
        CertifyConfig {
            seed: self.seed,
            k0_cap: self.k0_cap,
            rejection_cap: self.rejection_cap,
            koszul_radius: self.koszul_radius,
            vertex_cap: self.vertex_cap,
            oracle: self.oracle,
            ..CertifyConfig::default()
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Failed(String),
    Exhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 2,
            CliError::Exhausted(_) => 3,
            CliError::Invalid(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "{m}"),
            CliError::Failed(m) => write!(f, "verification failed: {m}"),
            CliError::Exhausted(m) => write!(f, "search exhausted: {m}"),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e.exit_code() {
            3 => CliError::Exhausted(e.to_string()),
            4 => CliError::Invalid(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn cmd_info(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let p = polytope_from_json(&read_json(path)?)?;
    let geom = |e: nccr_core::GeometryError| CliError::Invalid(e.to_string());
    let gorenstein = p.cone_over().is_gorenstein();
    let lines = [
        format!("ambient_dim: {}", p.ambient_dim()),
        format!("dim: {}", p.dim()),
        format!("vertices: {}", p.vertex_count()),
        format!("simplicial: {}", p.is_simplicial().map_err(geom)?),
        format!("reflexive: {}", p.is_reflexive().map_err(geom)?),
        match gorenstein {
            Some(m) => format!("gorenstein: ({})", join(&m, ",")),
            None => "gorenstein: none".to_string(),
        },
    ];
    for l in lines {
        writeln!(out, "{l}").map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    Ok(())
}

pub fn cohomology_of(fan_json: &Value, divisor: &[BigInt]) -> Result<Vec<usize>, CliError> {
    let fan = fan_from_json(fan_json)?;
    if divisor.len() != fan.ray_count() {
        return Err(CliError::Invalid(format!(
            "divisor has {} coefficients but the fan has {} rays",
            divisor.len(),
            fan.ray_count()
        )));
    }
    let report = fan.verify();
    if !report.all() {
        return Err(CliError::Failed(format!("fan is not complete and simplicial: {report:?}")));
    }
    let cones = ForbiddenCones::new(&fan);
    let class = cones.group().divisor_class(divisor).map_err(|e| CliError::Invalid(e.to_string()))?;
    cones.cohomology_dims(&class).map_err(|e| CliError::Failed(e.to_string()))
}

pub fn cmd_cohomology(path: &Path, divisor: &[BigInt], out: &mut dyn Write) -> Result<(), CliError> {
    let dims = cohomology_of(&read_json(path)?, divisor)?;
    writeln!(out, "{}", join(&dims, " ")).map_err(|e| CliError::Invalid(e.to_string()))
}

/// Runs the construction and returns the canonical certificate text with
/// its certified flag.
pub fn certify_text(polytope: &LatticePolytope, config: &CertifyConfig) -> Result<(String, bool), CliError> {
    let cert = certify(polytope, config)?;
    Ok((to_canonical_string(&certificate_to_json(&cert)), cert.certified))
}

pub fn cmd_certify(path: &Path, run: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let p = polytope_from_json(&read_json(path)?)?;
    let (text, certified) = certify_text(&p, &run.certify_config())?;
    match &run.out {
        Some(target) => write_atomic(target, &text)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", target.display())))?,
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Invalid(e.to_string()))?,
    }
    if certified {
        let _ = writeln!(err, "certified");
        Ok(())
    } else {
        Err(CliError::Failed("at least one verdict is false; see the certificate's failures".into()))
    }
}

pub fn cmd_verify(path: &Path, err: &mut dyn Write) -> Result<(), CliError> {
    let doc = read_json(path)?;
    let cert = certificate_from_json(&doc)?;
    let report = verify(&cert);
    let mut failures = report.failures.clone();
    let intact = digest_matches(&doc)?;
    if !intact {
        failures.push("digest does not match the certificate contents".into());
    }
    if report.ok() && intact {
        let _ = writeln!(err, "verified");
        Ok(())
    } else {
        Err(CliError::Failed(failures.join("; ")))
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Info { polytope } => cmd_info(&polytope, out),
        Command::Cohomology { fan, divisor } => cmd_cohomology(&fan, &divisor, out),
        Command::Certify { polytope, config } => cmd_certify(&polytope, &config, out, err),
        Command::Verify { certificate } => cmd_verify(&certificate, err),
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 4 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("nccr: {e}");
            e.exit_code()
        }
    }
}
