//! The `orbideg` command line: argument parsing, dispatch, output formatting
//! and the exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | a verification suite failed, or an internal error |
//! | 2 | invalid input (bad weights, map, value or flags) |
//! | 3 | the value is not regular, or a circle value is critical |
//! | 4 | the map is not equivariant |
//! | 5 | the enumeration cap was exceeded |

mod config;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use config::{CliConfig, Format, ENUM_CAP_ENV};

use crate::error::{Error, Result};
use crate::exact::{degree, preimages, DegreeResult, PreimageRecord};
use crate::maps::{CircleMap, MonomialMap};
use crate::numeric::{circle_degree2, singular_arc, write_arc_csv, CircleDegree};
use crate::orbifold::{
    CircleQuotient, ExactCoordinate, StrataReport, Stratified, WpsOrbifold, WpsPoint,
};
use crate::verify::{run_suite, PropertyReport};

#[derive(Debug, Parser)]
#[command(name = "orbideg", version, about = "Mapping degrees of orbifold maps")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON file with a CliConfig.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Largest number of solution tuples to enumerate.
    #[arg(long, global = true)]
    pub enum_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singular strata of a weighted projective space or circle quotient.
    Strata(StrataArgs),
    /// Degree of a monomial map at a regular value.
    Degree(MapArgs),
    /// Preimages of a regular value with isotropy, weight and sign.
    Preimages(MapArgs),
    /// Mod-2 and weighted degree of a circle map at an angle.
    Circle(CircleArgs),
    /// CSV of preimage counts of f_(1,3) along an arc through [0:1].
    Arc(ArcArgs),
    /// Run a property suite: all, or one of the names listed by `verify --help`.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct StrataArgs {
    /// Weights, e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    pub wps: Option<Vec<u64>>,
    /// `reflection`, `circle` or `rotation:k`.
    #[arg(long)]
    pub circle: Option<String>,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Source weights.
    #[arg(long, value_delimiter = ',', required = true)]
    pub q: Vec<u64>,
    /// Target weights.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<u64>,
    /// Exponents.
    #[arg(long, value_delimiter = ',', required = true)]
    pub e: Vec<u64>,
    /// Value, one `0`, `1` or `a/m` per coordinate; defaults to `[1:…:1]`.
    #[arg(long, allow_hyphen_values = true)]
    pub value: Option<String>,
}

#[derive(Debug, Args)]
pub struct CircleArgs {
    /// `half_fold`, `essential_f`, `essential_g`, `power:m:k:b` or `covering:k`.
    #[arg(long)]
    pub map: String,
    /// Angle of the value in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub angle: f64,
}

#[derive(Debug, Args)]
pub struct ArcArgs {
    /// Number of sampled values.
    #[arg(long, default_value_t = 21)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: String,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotRegular(_) | Error::CriticalValue { .. } => 3,
        Error::NotEquivariant(_) => 4,
        Error::EnumerationCapExceeded { .. } => 5,
        Error::NotEffective(..)
        | Error::InvalidInput(_)
        | Error::WeightMismatch { .. }
        | Error::PreconditionViolated(_)
        | Error::NoHomomorphism { .. }
        | Error::Overflow(_) => 2,
        _ => 1,
    }
}

pub fn parse_weights_point(space: &WpsOrbifold, value: &str) -> Result<WpsPoint> {
    let coords = value
        .split(',')
        .map(ExactCoordinate::parse)
        .collect::<Result<Vec<_>>>()?;
    space.point(coords)
}

pub fn parse_circle_quotient(s: &str) -> Result<CircleQuotient> {
    match s {
        "reflection" => Ok(CircleQuotient::reflection()),
        "circle" => Ok(CircleQuotient::circle()),
        _ => {
            let k = s
                .strip_prefix("rotation:")
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("unknown circle quotient `{s}`")))?;
            CircleQuotient::rotation(k)
        }
    }
}

pub fn parse_circle_map(s: &str) -> Result<CircleMap> {
    let bad = || Error::InvalidInput(format!("unknown circle map `{s}`"));
    let parts: Vec<&str> = s.split(':').collect();
    let nums = |xs: &[&str]| -> Result<Vec<u64>> {
        xs.iter().map(|x| x.parse().map_err(|_| bad())).collect()
    };
    match parts.as_slice() {
        ["half_fold"] => Ok(CircleMap::half_fold()),
        ["essential_f"] => Ok(CircleMap::essential_f()),
        ["essential_g"] => Ok(CircleMap::essential_g()),
        ["power", rest @ ..] if rest.len() == 3 => {
            let v = nums(rest)?;
            CircleMap::power(v[0], v[1], v[2])
        }
        ["covering", k] => CircleMap::covering(nums(&[k])?[0]),
        _ => Err(bad()),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn strata_text(r: &StrataReport) -> String {
    let mut s = format!("{} (real dimension {})\n", r.orbifold, r.dimension);
    for st in &r.strata {
        for c in &st.components {
            let _ = writeln!(
                s,
                "  dim {:>2}  isotropy {:>3}  {}",
                st.dimension, c.isotropy, c.description
            );
        }
    }
    let _ = writeln!(
        s,
        "codim1_empty: {}\norientable: {}",
        r.codim1_empty, r.orientable
    );
    s
}

fn preimage_lines(s: &mut String, records: &[PreimageRecord]) {
    for p in records {
        let _ = writeln!(
            s,
            "  {}  isotropy {}  weight {}  sign {:+}",
            p.point, p.isotropy, p.weight, p.sign
        );
    }
}

fn degree_text(d: &DegreeResult) -> String {
    let mut s = format!(
        "degree {} at {} (weighted count {}, mod 2: {})\n",
        d.degree, d.value, d.weighted_count, d.mod2
    );
    preimage_lines(&mut s, &d.preimages);
    s
}

fn circle_text(d: &CircleDegree) -> String {
    let mut s = format!(
        "value angle {}: weighted count {}, mod 2: {}",
        d.value, d.weighted_count, d.mod2
    );
    if let Some(o) = d.oriented_degree {
        let _ = write!(s, ", degree {o}");
    }
    s.push('\n');
    for p in &d.preimages {
        let _ = writeln!(
            s,
            "  angle {}  isotropy {}  weight {}  sign {:+}",
            p.angle, p.isotropy, p.weight, p.sign
        );
    }
    s
}

fn verify_text(reports: &[PropertyReport]) -> String {
    let mut s = format!(
        "{:<20} {:>6} {:>8}  status\n",
        "property", "cases", "failures"
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{:<20} {:>6} {:>8}  {}",
            r.name,
            r.cases,
            r.failures.len(),
            if r.passed() { "ok" } else { "FAILED" }
        );
        for f in &r.failures {
            let _ = writeln!(s, "    {}  witness: {}", f.detail, f.witness);
        }
    }
    s
}

fn build_map(args: &MapArgs) -> Result<(MonomialMap, WpsPoint)> {
    let f = MonomialMap::new(args.q.clone(), args.r.clone(), args.e.clone())?;
    let y = match &args.value {
        Some(v) => parse_weights_point(f.target(), v)?,
        None => f.target().ones(),
    };
    Ok((f, y))
}

/// Runs one command and returns the text to print and the exit status.
pub fn execute(cli: &Cli, config: &CliConfig) -> Result<(String, i32)> {
    let text = config.format == Format::Text;
    let out = match &cli.command {
        Command::Strata(a) => {
            let report = match (&a.wps, &a.circle) {
                (Some(w), None) => WpsOrbifold::new(w.clone())?.strata()?,
                (None, Some(c)) => parse_circle_quotient(c)?.strata()?,
                _ => {
                    return Err(Error::InvalidInput(
                        "give exactly one of --wps, --circle".into(),
                    ))
                }
            };
            if text {
                strata_text(&report)
            } else {
                json(&report)
            }
        }
        Command::Degree(a) => {
            let (f, y) = build_map(a)?;
            let d = degree(&f, Some(&y), &config.exact())?;
            if text {
                degree_text(&d)
            } else {
                json(&d)
            }
        }
        Command::Preimages(a) => {
            let (f, y) = build_map(a)?;
            crate::exact::is_regular_value(&f, &y)?
                .then_some(())
                .ok_or_else(|| Error::NotRegular(y.to_string()))?;
            let records = preimages(&f, &y, &config.exact())?;
            if text {
                let mut s = format!("{} preimages of {}\n", records.len(), y);
                preimage_lines(&mut s, &records);
                s
            } else {
                json(&records)
            }
        }
        Command::Circle(a) => {
            let m = parse_circle_map(&a.map)?;
            let d = circle_degree2(&m, a.angle, &config.numeric())?;
            if text {
                circle_text(&d)
            } else {
                json(&d)
            }
        }
        Command::Arc(a) => {
            let samples = singular_arc(a.samples, &config.numeric())?;
            let mut buf = Vec::new();
            write_arc_csv(&samples, &mut buf).map_err(|e| Error::Internal(e.to_string()))?;
            String::from_utf8(buf).map_err(|e| Error::Internal(e.to_string()))?
        }
        Command::Verify(a) => {
            let mut cfg = config.verify();
            if let Some(seed) = a.seed {
                cfg.seed = seed;
            }
            let reports = run_suite(&a.suite, &cfg)?;
            let code = if reports.iter().all(PropertyReport::passed) {
                0
            } else {
                1
            };
            let s = if text {
                verify_text(&reports)
            } else {
                json(&reports)
            };
            return Ok((s, code));
        }
    };
    Ok((out, 0))
}

/// Resolves the configuration: defaults, then `--config`, then the
/// environment, then explicit flags.
pub fn resolve_config(cli: &Cli, env_cap: Option<String>) -> Result<CliConfig> {
    let mut config = match &cli.config {
        Some(path) => CliConfig::from_file(path)?,
        None => CliConfig::default(),
    };
    config = config.with_env(env_cap)?;
    if let Some(cap) = cli.enum_cap {
        config.enumeration_cap = cap;
    }
    if let Some(format) = cli.format {
        config.format = format;
    }
    Ok(config)
}

/// Entry point shared by the binary and the tests. Returns the exit status.
pub fn run<I, T>(
    args: I,
    env_cap: Option<String>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = resolve_config(&cli, env_cap).and_then(|config| execute(&cli, &config));
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
