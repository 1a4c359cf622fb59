//! Command-line surface: compute distances, run the randomized
//! verification suites, emit JSON reports.
//!
//! Results go to stdout as 17-significant-digit JSON, diagnostics to
//! stderr. Exit codes: 0 success, 1 input or validation error, 2
//! verification failure. The same seed and flags produce byte-identical
//! output.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;

use crate::assouad::{ball_covering_certificate, generate_witness, verify_witness};
use crate::covers::{line_sample, verify_cover, x1_cover, CoverFamily, CoverReport};
use crate::embeddings::{embed, verify_control_functions, BlockIndex, CubePoint};
use crate::gromov::{gh_bruteforce, gh_exact_with_guard, GhResult, DEFAULT_SIZE_GUARD};
use crate::hausdorff1d::eh_distance;
use crate::io::{load_cover, load_point_set, load_sample, load_space, to_json_17, write_json_17};
use crate::metric::{from_point_set, kuratowski_embed};
use crate::rng::{random_point_set, trial_rng};

#[derive(Debug, Parser)]
#[command(
    name = "ghkit",
    version,
    about = "Exact Gromov-Hausdorff and 1D alignment distances, with cover, embedding and witness constructions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GhMethod {
    Exact,
    Bruteforce,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact Gromov-Hausdorff distance between two finite metric spaces.
    Gh {
        /// Point-set or matrix JSON file.
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, value_enum, default_value_t = GhMethod::Exact)]
        method: GhMethod,
        /// Per-space size guard for the exact search.
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard: usize,
    },
    /// Optimal alignment of two 1D point sets over line isometries.
    Eh {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Image of a cube point under the 1D coarse embedding.
    Embed {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Comma-separated coordinates, e.g. "0.5,1.0".
        #[arg(long)]
        point: String,
    },
    /// Sup-metric cube embedding of a metric space.
    Kuratowski {
        #[arg(long)]
        x: PathBuf,
    },
    /// Assouad witness family for the given packing parameters.
    Assouad {
        #[arg(long)]
        alpha: f64,
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "R")]
        r: f64,
        /// Verify the family with the exact solver and report.
        #[arg(long)]
        verify: bool,
    },
    /// Cover constructions and certificate checks.
    Cover {
        #[command(subcommand)]
        cmd: CoverCmd,
    },
    /// Randomized verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Debug, Subcommand)]
enum CoverCmd {
    /// Build the two-class interval cover on a random sample and verify it.
    X1 {
        #[arg(long)]
        r: f64,
        /// Sample positions uniformly from [0, xmax].
        #[arg(long)]
        xmax: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the cover to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a serialized cover against a sample file.
    Check {
        #[arg(long)]
        sample: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Check the sandwich between alignment and Gromov-Hausdorff
    /// distance on random point-set pairs.
    Bilipschitz {
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 5)]
        max_points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard: usize,
    },
    /// Check the cube embedding's control functions on random pairs.
    Embedding {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate and verify an Assouad witness family.
    Witness {
        #[arg(long)]
        alpha: f64,
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "R")]
        r: f64,
    },
}

/// Exit status for verification commands: 0 when clean, 2 otherwise.
fn verdict(clean: bool) -> i32 {
    if clean {
        0
    } else {
        2
    }
}

#[derive(Serialize)]
struct AssouadParameters {
    alpha: f64,
    #[serde(rename = "C")]
    c: f64,
    #[serde(rename = "R")]
    r: f64,
    #[serde(rename = "M")]
    m: usize,
    l: f64,
    r_ball: f64,
    s: f64,
    beta: f64,
}

#[derive(Serialize)]
struct AssouadOutput {
    parameters: AssouadParameters,
    #[serde(rename = "A")]
    a: Vec<f64>,
    #[serde(rename = "A_list")]
    a_list: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<crate::assouad::WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<crate::assouad::PackingCertificate>,
}

#[derive(Serialize)]
struct BilipschitzViolation {
    trial: u64,
    gh: f64,
    eh: f64,
}

#[derive(Serialize)]
struct BilipschitzReport {
    trials: u64,
    max_points: usize,
    seed: u64,
    tolerance: f64,
    violations: Vec<BilipschitzViolation>,
    min_ratio: Option<f64>,
    max_ratio: Option<f64>,
}

#[derive(Serialize)]
struct CoverRunOutput {
    cover: CoverFamily,
    report: CoverReport,
}

fn run_command(command: Command) -> Result<(String, i32), Box<dyn std::error::Error>> {
    match command {
        Command::Gh {
            x,
            y,
            method,
            guard,
        } => {
            let sx = load_space(&x)?;
            let sy = load_space(&y)?;
            let result: GhResult = match method {
                GhMethod::Exact => gh_exact_with_guard(&sx, &sy, guard)?,
                GhMethod::Bruteforce => gh_bruteforce(&sx, &sy)?,
            };
            Ok((to_json_17(&result), 0))
        }
        Command::Eh { x, y } => {
            let px = load_point_set(&x)?;
            let py = load_point_set(&y)?;
            Ok((to_json_17(&eh_distance(&px, &py)), 0))
        }
        Command::Embed { m, n, point } => {
            let block = BlockIndex::new(m, n)?;
            let coords = point
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()?;
            let image = embed(&CubePoint::new(block, coords)?)?;
            let file = crate::io::PointSetFile {
                points: image.as_slice().to_vec(),
            };
            Ok((to_json_17(&file), 0))
        }
        Command::Kuratowski { x } => {
            let space = load_space(&x)?;
            Ok((to_json_17(&kuratowski_embed(&space)), 0))
        }
        Command::Assouad {
            alpha,
            c,
            r,
            verify,
        } => {
            let w = generate_witness(alpha, c, r)?;
            let (report, certificate) = if verify {
                let rep = verify_witness(&w)?;
                let cert = ball_covering_certificate(&w, &rep).ok();
                (Some(rep), cert)
            } else {
                (None, None)
            };
            let clean = report.as_ref().is_none_or(|r| r.is_clean());
            let out = AssouadOutput {
                parameters: AssouadParameters {
                    alpha: w.alpha,
                    c: w.c,
                    r: w.interval,
                    m: w.count,
                    l: w.lattice_step,
                    r_ball: w.ball_radius,
                    s: w.offset,
                    beta: w.beta,
                },
                a: w.base.as_slice().to_vec(),
                a_list: w.perturbed.iter().map(|p| p.as_slice().to_vec()).collect(),
                report,
                certificate,
            };
            Ok((to_json_17(&out), verdict(clean)))
        }
        Command::Cover { cmd } => match cmd {
            CoverCmd::X1 {
                r,
                xmax,
                samples,
                seed,
                out,
            } => {
                if !(xmax > 0.0) {
                    return Err(format!("xmax must be positive, got {xmax}").into());
                }
                let positions: Vec<f64> = (0..samples)
                    .map(|i| trial_rng(seed, i as u64).gen_range(0.0..xmax))
                    .collect();
                let space = line_sample(&positions)?;
                let cover = x1_cover(&space, r)?;
                let report = verify_cover(&space, &cover);
                if let Some(path) = out {
                    write_json_17(&path, &cover)?;
                }
                let clean = report.is_clean();
                Ok((
                    to_json_17(&CoverRunOutput { cover, report }),
                    verdict(clean),
                ))
            }
            CoverCmd::Check { sample, cover } => {
                let space = load_sample(&sample)?;
                let family = load_cover(&cover)?;
                let report = verify_cover(&space, &family);
                let clean = report.is_clean();
                Ok((to_json_17(&report), verdict(clean)))
            }
        },
        Command::Verify { cmd } => match cmd {
            VerifyCmd::Bilipschitz {
                trials,
                max_points,
                seed,
                tolerance,
                guard,
            } => {
                if max_points > guard {
                    return Err(
                        format!("max-points {max_points} exceeds the size guard {guard}").into(),
                    );
                }
                let mut violations = Vec::new();
                let mut min_ratio: Option<f64> = None;
                let mut max_ratio: Option<f64> = None;
                for trial in 0..trials {
                    let mut rng = trial_rng(seed, trial);
                    let xs = random_point_set(&mut rng, max_points, 0.0, 1.0);
                    let ys = random_point_set(&mut rng, max_points, 0.0, 1.0);
                    let gh =
                        gh_exact_with_guard(&from_point_set(&xs), &from_point_set(&ys), guard)?
                            .value;
                    let eh = eh_distance(&xs, &ys).value;
                    if gh < 0.8 * eh - tolerance || gh > eh + tolerance {
                        violations.push(BilipschitzViolation { trial, gh, eh });
                    }
                    if eh > tolerance {
                        let ratio = gh / eh;
                        min_ratio = Some(min_ratio.map_or(ratio, |v| v.min(ratio)));
                        max_ratio = Some(max_ratio.map_or(ratio, |v| v.max(ratio)));
                    }
                }
                let clean = violations.is_empty();
                let report = BilipschitzReport {
                    trials,
                    max_points,
                    seed,
                    tolerance,
                    violations,
                    min_ratio,
                    max_ratio,
                };
                Ok((to_json_17(&report), verdict(clean)))
            }
            VerifyCmd::Embedding { m, n, trials, seed } => {
                let block = BlockIndex::new(m, n)?;
                let report = verify_control_functions(block, trials, seed)?;
                let clean = report.is_clean();
                Ok((to_json_17(&report), verdict(clean)))
            }
            VerifyCmd::Witness { alpha, c, r } => {
                let w = generate_witness(alpha, c, r)?;
                let report = verify_witness(&w)?;
                let clean = report.is_clean();
                Ok((to_json_17(&report), verdict(clean)))
            }
        },
    }
}

/// Parses arguments from the environment, runs, and returns the exit
/// code. Input and validation errors exit 1; clean runs exit 0;
/// verification failures exit 2.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok((json, code)) => {
            println!("{json}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
