//! `schemeforge`: reports, batch scans and axiom checks for association
//! schemes of small permutation groups.
//!
//! Exit codes: 0 success, 1 other failure, 2 bad input (parse errors and
//! axiom violations), 3 a size cap was exceeded, 4 structural and brute
//! verdicts disagree or an internal check failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use schemeforge_core::catalog::{load_catalog, scan, Preset, Source};
use schemeforge_core::classify::{classify_with, ClassifyOptions};
use schemeforge_core::permcore::Caps;
use schemeforge_core::schemes::{verify_color_matrix, SchemeSpec};
use schemeforge_core::Error;

#[derive(Parser)]
#[command(
    name = "schemeforge",
    version,
    about = "Terwilliger algebras of quasi-thin schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one instance.
    Report {
        #[command(flatten)]
        source: SourceArgs,
        /// Act on the cosets of the stabilizer of this point (its orbit).
        #[arg(long, conflicts_with = "scheme")]
        stabilizer_point: Option<usize>,
        /// Base point for the Terwilliger algebra.
        #[arg(long, default_value_t = 0)]
        base_point: usize,
        /// Skip the recomputation at a second base point.
        #[arg(long)]
        single_base_point: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Classify every instance of a catalog file.
    Scan {
        catalog: PathBuf,
        /// Number of worker threads; 1 runs serially.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(long)]
        single_base_point: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check the scheme axioms only.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, conflicts_with = "scheme")]
        stabilizer_point: Option<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// One of a5-cosets, frobenius56, cyclic-N, dihedral-N, s3-regular,
    /// affine-N-M, symmetric-N.
    #[arg(long)]
    preset: Option<String>,
    /// Group file (JSON).
    #[arg(long)]
    group: Option<PathBuf>,
    /// Scheme file (JSON).
    #[arg(long)]
    scheme: Option<PathBuf>,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long)]
    group_cap: Option<usize>,
    #[arg(long)]
    degree_cap: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Result<Caps, Error> {
        let mut caps = Caps::from_env()?;
        if let Some(g) = self.group_cap {
            caps.group = g;
        }
        if let Some(d) = self.degree_cap {
            caps.degree = d;
        }
        Ok(caps)
    }
}

impl SourceArgs {
    fn source(&self) -> Result<Source, Error> {
        match (&self.preset, &self.group, &self.scheme) {
            (Some(p), _, _) => Ok(Source::Preset(Preset::parse(p)?)),
            (_, Some(g), _) => Ok(Source::GroupFile(g.clone())),
            (_, _, Some(s)) => Ok(Source::SchemeFile(s.clone())),
            _ => Err(Error::Parse("no instance given".into())),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GroupTooLarge { .. } | Error::DegreeTooLarge { .. } | Error::ClosureCap { .. } => 3,
        Error::Inconsistent(_) => 4,
        Error::NotQuasiThin | Error::NoGroup => 1,
        _ => 2,
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Report {
            source,
            stabilizer_point,
            base_point,
            single_base_point,
            json,
            caps,
        } => {
            let caps = caps.caps()?;
            let instance = source.source()?.load(stabilizer_point, &caps)?;
            let opts = ClassifyOptions {
                base_point,
                second_base_point: !single_base_point,
            };
            let report = classify_with(&instance, opts)?;
            if json {
                print_json(&report)?;
            } else {
                println!("{report}");
            }
            Ok(if report.consistent { 0 } else { 4 })
        }
        Command::Scan {
            catalog,
            parallel,
            single_base_point,
            json,
            caps,
        } => {
            let caps = caps.caps()?;
            let sources = load_catalog(&catalog)?;
            let opts = ClassifyOptions {
                base_point: 0,
                second_base_point: !single_base_point,
            };
            let summary = scan(&sources, &caps, opts, parallel.max(1))?;
            if json {
                print_json(&summary)?;
            } else {
                println!(
                    "{:<20} {:>4} {:>5} {:>6} {:>6} {:>6} {:>6} {:>4}  verdict",
                    "instance", "n", "rank", "T0", "T1", "T", "T~", "dmd"
                );
                for row in &summary.rows {
                    match (&row.report, &row.error) {
                        (Some(r), _) => {
                            let d = &r.dims;
                            let tt = d.t_tilde.map_or("-".to_string(), |x| x.to_string());
                            let verdict = match (r.brute.all_equal, r.consistent) {
                                (_, false) => "INCONSISTENT",
                                (Some(true), _) => "triply transitive",
                                _ if r.brute.t0_equals_t => "triply regular",
                                _ => "neither",
                            };
                            println!(
                                "{:<20} {:>4} {:>5} {:>6} {:>6} {:>6} {:>6} {:>4}  {}",
                                r.name,
                                r.n,
                                r.rank,
                                d.t0,
                                d.t1,
                                d.t,
                                tt,
                                r.unordered_diamond_pairs.len(),
                                verdict
                            );
                        }
                        (None, Some(e)) => println!("{:<20} error: {e}", row.name),
                        (None, None) => unreachable!("row without report or error"),
                    }
                }
                println!(
                    "instances {}; triply transitive {}; triply regular {}; inconsistent {}; errors {}",
                    summary.rows.len(),
                    summary.triply_transitive,
                    summary.triply_regular,
                    summary.inconsistent,
                    summary.errors
                );
            }
            Ok(if summary.inconsistent > 0 { 4 } else { 0 })
        }
        Command::Verify {
            source,
            stabilizer_point,
            json,
            caps,
        } => {
            let caps = caps.caps()?;
            let (n, color, group) = match source.source()? {
                Source::SchemeFile(path) => {
                    let spec = SchemeSpec::from_json(&std::fs::read_to_string(&path)?)?;
                    let color: Vec<usize> = spec.color.iter().flatten().copied().collect();
                    if spec.color.len() != spec.n || color.len() != spec.n * spec.n {
                        return Err(Error::Parse(format!("color matrix is not {0}×{0}", spec.n)));
                    }
                    let group = spec
                        .group
                        .as_ref()
                        .map(|g| g.acting_group(&caps))
                        .transpose()?;
                    (spec.n, color, group)
                }
                other => {
                    let inst = other.load(stabilizer_point, &caps)?;
                    (
                        inst.scheme.n(),
                        inst.scheme.color_matrix().to_vec(),
                        inst.group,
                    )
                }
            };
            let report = verify_color_matrix(n, &color);
            if json {
                print_json(&report)?;
            } else {
                println!("{report}");
            }
            if !report.is_ok() {
                return Ok(2);
            }
            if let Some(g) = group {
                let scheme = SchemeSpec {
                    name: None,
                    n,
                    color: color.chunks(n).map(<[usize]>::to_vec).collect(),
                    group: None,
                }
                .to_scheme()?;
                scheme.check_automorphisms(&g)?;
                if !json {
                    println!("group of order {} preserves every class", g.order());
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
