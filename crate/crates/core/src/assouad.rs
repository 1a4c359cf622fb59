//! Witness families for packing lower bounds: many near-identical point
//! sets inside a small ball (in the alignment distance) that still keep
//! pairwise distance above the covering radius, defeating a claimed
//! covering bound `C * beta^(-alpha)`.

use serde::Serialize;
use thiserror::Error;

use crate::hausdorff1d::{eh_distance, hausdorff};
use crate::metric::Point1DSet;
use crate::EPS;

/// Largest witness count the generator accepts.
pub const GENERATE_GUARD: usize = 64;

/// Largest witness count the full pairwise verifier accepts.
pub const VERIFY_GUARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssouadError {
    #[error("alpha, C and R must all be positive")]
    NonPositiveParameter,
    #[error("witness count {m} exceeds the guard {guard}")]
    GuardExceeded { m: usize, guard: usize },
    #[error("certificate unavailable: verification reported violations")]
    CertificateUnavailable,
}

/// The family: a lattice set `A` in `[0, R]` and `M` perturbations of it,
/// each obtained by nudging lattice points by `s` (one of them by `-s`).
///
/// With `beta = 1/2` fixed, `M = ceil(C * beta^(-alpha) + 1)`,
/// `l = R / (2 (M + 1))`, `r = l / 6` and `s = 2 r / 3`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessFamily {
    pub alpha: f64,
    pub c: f64,
    /// The interval length R.
    pub interval: f64,
    /// The witness count M.
    pub count: usize,
    /// Lattice step l.
    pub lattice_step: f64,
    /// Ball radius r: every perturbed set lies within r of the base set.
    pub ball_radius: f64,
    /// Perturbation offset s.
    pub offset: f64,
    pub beta: f64,
    /// The base set A.
    pub base: Point1DSet,
    /// The perturbed sets A_1 .. A_M.
    pub perturbed: Vec<Point1DSet>,
}

/// Builds the witness family for the given packing parameters.
pub fn generate_witness(alpha: f64, c: f64, interval: f64) -> Result<WitnessFamily, AssouadError> {
    if !(alpha > 0.0 && c > 0.0 && interval > 0.0) {
        return Err(AssouadError::NonPositiveParameter);
    }
    let beta = 0.5f64;
    let m = (c * beta.powf(-alpha) + 1.0).ceil() as usize;
    if m > GENERATE_GUARD {
        return Err(AssouadError::GuardExceeded {
            m,
            guard: GENERATE_GUARD,
        });
    }
    let l = interval / (2.0 * (m as f64 + 1.0));
    let r = l / 6.0;
    let s = 2.0 * r / 3.0;
    let half = 0.5 * interval; // equals (M + 1) l by construction

    let mut base: Vec<f64> = (0..=m).map(|j| j as f64 * l).collect();
    base.push(half);
    base.push(interval);
    let base = Point1DSet::new(base).expect("lattice points are distinct");

    let perturbed = (1..=m)
        .map(|i| {
            let mut pts = vec![0.0];
            for j in 1..=m {
                if j == i {
                    pts.push(i as f64 * l - s);
                } else {
                    pts.push(j as f64 * l + s);
                }
            }
            pts.push(half);
            pts.push(interval);
            Point1DSet::new(pts).expect("perturbed lattice points are distinct")
        })
        .collect();

    Ok(WitnessFamily {
        alpha,
        c,
        interval,
        count: m,
        lattice_step: l,
        ball_radius: r,
        offset: s,
        beta,
        base,
        perturbed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum WitnessViolation {
    /// A perturbed set escaped the ball of radius r around the base set.
    BaseTooFar { i: usize, eh: f64, limit: f64 },
    /// Alignment beat the offset bound eh <= s.
    BaseBelowOffsetBroken { i: usize, eh: f64, offset: f64 },
    /// A pair of perturbed sets aligned closer than 2s.
    PairTooClose {
        i: usize,
        j: usize,
        eh: f64,
        need: f64,
    },
    /// Plain Hausdorff distance to the base set is not s.
    BaseHausdorffMismatch { i: usize, got: f64, want: f64 },
    /// Plain Hausdorff distance between perturbed sets is not 2s.
    PairHausdorffMismatch {
        i: usize,
        j: usize,
        got: f64,
        want: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub pairs_checked: usize,
    pub violations: Vec<WitnessViolation>,
    /// Largest alignment distance from the base set to a perturbed set.
    pub max_eh_to_base: f64,
    /// Smallest pairwise alignment distance among perturbed sets.
    pub min_eh_pairwise: Option<f64>,
}

impl WitnessReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the family with the exact 1D solver (which always searches
/// reflections as well as translations): every perturbed set lies
/// strictly inside the r-ball around the base set yet no closer than its
/// Hausdorff distance s allows, and distinct perturbed sets stay at
/// least 2s apart. Plain Hausdorff distances are checked to equal s and
/// 2s respectively.
pub fn verify_witness(w: &WitnessFamily) -> Result<WitnessReport, AssouadError> {
    if w.count > VERIFY_GUARD {
        return Err(AssouadError::GuardExceeded {
            m: w.count,
            guard: VERIFY_GUARD,
        });
    }
    let mut violations = Vec::new();
    let mut max_eh_to_base = 0.0f64;
    let mut min_eh_pairwise: Option<f64> = None;
    let mut pairs_checked = 0;
    let s = w.offset;
    for (idx, a_i) in w.perturbed.iter().enumerate() {
        let i = idx + 1;
        let eh = eh_distance(&w.base, a_i).value;
        pairs_checked += 1;
        max_eh_to_base = max_eh_to_base.max(eh);
        if eh >= w.ball_radius {
            violations.push(WitnessViolation::BaseTooFar {
                i,
                eh,
                limit: w.ball_radius,
            });
        }
        if eh > s + EPS {
            violations.push(WitnessViolation::BaseBelowOffsetBroken { i, eh, offset: s });
        }
        let dh = hausdorff(&w.base, a_i);
        if (dh - s).abs() > EPS {
            violations.push(WitnessViolation::BaseHausdorffMismatch {
                i,
                got: dh,
                want: s,
            });
        }
    }
    for idx in 0..w.perturbed.len() {
        for jdx in (idx + 1)..w.perturbed.len() {
            let (i, j) = (idx + 1, jdx + 1);
            let eh = eh_distance(&w.perturbed[idx], &w.perturbed[jdx]).value;
            pairs_checked += 1;
            min_eh_pairwise = Some(min_eh_pairwise.map_or(eh, |v| v.min(eh)));
            if eh < 2.0 * s - EPS {
                violations.push(WitnessViolation::PairTooClose {
                    i,
                    j,
                    eh,
                    need: 2.0 * s,
                });
            }
            let dh = hausdorff(&w.perturbed[idx], &w.perturbed[jdx]);
            if (dh - 2.0 * s).abs() > EPS {
                violations.push(WitnessViolation::PairHausdorffMismatch {
                    i,
                    j,
                    got: dh,
                    want: 2.0 * s,
                });
            }
        }
    }
    Ok(WitnessReport {
        pairs_checked,
        violations,
        max_eh_to_base,
        min_eh_pairwise,
    })
}

/// The packing conclusion drawn from a verified family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PackingCertificate {
    /// Number of sets packed inside the r-ball.
    pub count: usize,
    /// The covering bound `C * beta^(-alpha)` the packing defeats.
    pub defeated_bound: f64,
    pub ball_radius: f64,
    pub covering_radius: f64,
    pub explanation: String,
}

/// Turns a clean verification into the covering-number statement: the
/// M perturbed sets all lie in the open r-ball around the base set, yet
/// any ball of radius `beta * r` contains at most one of them, so the
/// r-ball cannot be covered by fewer than `M > C * beta^(-alpha)` balls
/// of radius `beta * r`.
pub fn ball_covering_certificate(
    w: &WitnessFamily,
    report: &WitnessReport,
) -> Result<PackingCertificate, AssouadError> {
    if !report.is_clean() {
        return Err(AssouadError::CertificateUnavailable);
    }
    let defeated_bound = w.c * w.beta.powf(-w.alpha);
    debug_assert!(w.count as f64 > defeated_bound);
    let covering_radius = w.beta * w.ball_radius;
    Ok(PackingCertificate {
        count: w.count,
        defeated_bound,
        ball_radius: w.ball_radius,
        covering_radius,
        explanation: format!(
            "{} sets lie within {:.6e} of the base set, below the ball radius {:.6e}, \
             while any two of them are at least {:.6e} apart, above twice the covering \
             radius {:.6e}; no two share a covering ball, so at least {} > {:.6} balls \
             are needed",
            w.count,
            report.max_eh_to_base,
            w.ball_radius,
            2.0 * w.offset,
            covering_radius,
            w.count,
            defeated_bound
        ),
    })
}
