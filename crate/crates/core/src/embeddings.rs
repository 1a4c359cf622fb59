//! The coarse embedding of sup-metric cubes `([0, m]^n, max)` into
//! finite subsets of the line: block pairing, anchor positions, the
//! separation constants that keep distinct blocks far apart, the
//! embedding itself, and randomized verification of its control
//! functions.

use serde::Serialize;
use thiserror::Error;

use crate::hausdorff1d::{eh_distance, hausdorff};
use crate::metric::Point1DSet;
use crate::rng::trial_rng;
use crate::EPS;
use rand::Rng;

/// Ordinals above this overflow the 64-bit separation recursion.
pub const ORDINAL_GUARD: u64 = 40;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error("block sides must be positive, got ({m}, {n})")]
    InvalidBlock { m: u64, n: u64 },
    #[error("ordinal must be positive")]
    InvalidOrdinal,
    #[error("pairing ordinal {t} exceeds the overflow guard {guard}")]
    OverflowGuard { t: u64, guard: u64 },
    #[error("point has {len} coordinates, block dimension is {n}")]
    DimensionMismatch { len: usize, n: u64 },
    #[error("coordinate {value} outside [0, {m}]")]
    CoordinateOutOfRange { value: f64, m: u64 },
    #[error("blocks must be distinct")]
    IdenticalBlocks,
}

/// A cube `[0, m]^n`, identified by side `m` and dimension `n`, both
/// positive. Blocks are enumerated by a pairing bijection onto the
/// positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BlockIndex {
    pub m: u64,
    pub n: u64,
}

impl BlockIndex {
    pub fn new(m: u64, n: u64) -> Result<Self, EmbedError> {
        if m == 0 || n == 0 {
            return Err(EmbedError::InvalidBlock { m, n });
        }
        Ok(BlockIndex { m, n })
    }

    /// Position of this block in the diagonal enumeration:
    /// `m + (m + n - 2)(m + n - 1) / 2`, exactly in integer arithmetic.
    pub fn ordinal(&self) -> u64 {
        let s = self.m + self.n;
        self.m + (s - 2) * (s - 1) / 2
    }

    /// Inverse of [`BlockIndex::ordinal`]; round-trips exactly.
    pub fn from_ordinal(k: u64) -> Result<Self, EmbedError> {
        if k == 0 {
            return Err(EmbedError::InvalidOrdinal);
        }
        // Find the diagonal s = m + n whose ordinals cover k.
        let mut s = 2u64;
        while (s - 1) * s / 2 < k {
            s += 1;
        }
        let base = (s - 2) * (s - 1) / 2;
        let m = k - base;
        let n = s - m;
        Ok(BlockIndex { m, n })
    }
}

/// Anchor position of coordinate `i` (1-based) in a block of side `m`:
/// `4m(i - 1)`. Consecutive anchors are 4m apart, so perturbations by at
/// most m never collide.
pub fn anchor(m: u64, i: u64) -> u64 {
    assert!(m >= 1 && i >= 1, "anchor indices are 1-based");
    4 * m * (i - 1)
}

/// The separation constant `D` of a block: the rightmost point of every
/// embedded set, chosen by recursion over all blocks of smaller ordinal
/// so diameters of distinct blocks stay at least `2^ordinal` apart:
/// `D = max(4m(n + 2), max_prev D' + m + 2^ordinal)`.
///
/// Memoized in ordinal order (the enumeration is total), guarded at
/// ordinal 40 to stay within 64-bit integers.
pub fn separation_constant(block: BlockIndex) -> Result<u64, EmbedError> {
    let t = block.ordinal();
    if t > ORDINAL_GUARD {
        return Err(EmbedError::OverflowGuard {
            t,
            guard: ORDINAL_GUARD,
        });
    }
    let mut prev_max = 0u64;
    let mut d = 0u64;
    for k in 1..=t {
        let b = BlockIndex::from_ordinal(k).expect("positive ordinal");
        let floor = 4 * b.m * (b.n + 2);
        d = if k == 1 {
            floor
        } else {
            floor.max(prev_max + b.m + (1u64 << k))
        };
        prev_max = prev_max.max(d);
    }
    Ok(d)
}

/// A point of a block's cube, coordinates in `[0, m]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubePoint {
    pub block: BlockIndex,
    coords: Vec<f64>,
}

impl CubePoint {
    pub fn new(block: BlockIndex, coords: Vec<f64>) -> Result<Self, EmbedError> {
        if coords.len() as u64 != block.n {
            return Err(EmbedError::DimensionMismatch {
                len: coords.len(),
                n: block.n,
            });
        }
        for &c in &coords {
            if !c.is_finite() || c < 0.0 || c > block.m as f64 {
                return Err(EmbedError::CoordinateOutOfRange {
                    value: c,
                    m: block.m,
                });
            }
        }
        Ok(CubePoint { block, coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Sup-metric distance to another point of the same block.
    pub fn sup_distance(&self, other: &CubePoint) -> f64 {
        assert_eq!(self.block, other.block, "points must share a block");
        crate::metric::sup_distance(&self.coords, &other.coords)
    }
}

/// The embedding: coordinate `i` becomes the point `anchor(m, i) + x_i`,
/// and the separation constant is appended as a far marker point. The
/// image has n + 1 points and diameter within `[D - m, D]`.
pub fn embed(p: &CubePoint) -> Result<Point1DSet, EmbedError> {
    let m = p.block.m;
    let d = separation_constant(p.block)?;
    let mut pts: Vec<f64> = p
        .coords
        .iter()
        .enumerate()
        .map(|(idx, x)| anchor(m, idx as u64 + 1) as f64 + x)
        .collect();
    pts.push(d as f64);
    Ok(Point1DSet::from_sorted_unchecked(pts))
}

/// Lower bound on the Euclidean-Hausdorff distance between any point of
/// one block's image and any point of another's, via the diameter gap:
/// `(D - D' - m) / 2` with D the larger block's constant. Always at
/// least `2^(ordinal - 1)` of the larger block.
pub fn block_separation_lower_bound(b1: BlockIndex, b2: BlockIndex) -> Result<f64, EmbedError> {
    if b1 == b2 {
        return Err(EmbedError::IdenticalBlocks);
    }
    let (hi, lo) = if b1.ordinal() > b2.ordinal() {
        (b1, b2)
    } else {
        (b2, b1)
    };
    let d_hi = separation_constant(hi)?;
    let d_lo = separation_constant(lo)?;
    debug_assert!(d_hi >= d_lo + hi.m + (1u64 << hi.ordinal()));
    Ok((d_hi - d_lo - hi.m) as f64 / 2.0)
}

/// One failed check in a control-function report.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum ControlViolation {
    /// Euclidean-Hausdorff value dropped below half the cube distance.
    LowerBound { pair: usize, sup: f64, eh: f64 },
    /// Euclidean-Hausdorff value exceeded the cube distance.
    UpperBound { pair: usize, sup: f64, eh: f64 },
    /// Plain Hausdorff distance failed to reproduce the cube distance.
    HausdorffMismatch {
        pair: usize,
        sup: f64,
        hausdorff: f64,
    },
}

/// Result of sampling pairs in a block and checking the embedding's
/// control functions on each.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ControlReport {
    pub pairs_checked: usize,
    pub violations: Vec<ControlViolation>,
    /// Smallest and largest observed `eh / sup` over pairs with sup > 0.
    pub min_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
}

impl ControlReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Draws a cube point on the dyadic grid of step 2^-20, so that every
/// anchored coordinate and every pairwise difference is exactly
/// representable and the identity `hausdorff = sup distance` can be
/// checked as a float equality.
pub fn sample_cube_point(block: BlockIndex, rng: &mut rand_chacha::ChaCha8Rng) -> CubePoint {
    let hi = block.m << 20;
    let coords = (0..block.n)
        .map(|_| rng.gen_range(0..=hi) as f64 / (1u64 << 20) as f64)
        .collect();
    CubePoint::new(block, coords).expect("grid point is in range")
}

fn corners(block: BlockIndex) -> Vec<CubePoint> {
    let n = block.n as usize;
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let coords = (0..n)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    block.m as f64
                } else {
                    0.0
                }
            })
            .collect();
        out.push(CubePoint::new(block, coords).unwrap());
    }
    out
}

/// Samples `trials` random pairs in the block (plus all corner pairs
/// when the dimension is small) and checks, with the exact 1D solver,
/// that `sup / 2 <= eh <= sup` within [`EPS`] and that the plain
/// Hausdorff distance reproduces the sup distance exactly. Violations
/// are reported, not thrown.
pub fn verify_control_functions(
    block: BlockIndex,
    trials: u64,
    seed: u64,
) -> Result<ControlReport, EmbedError> {
    separation_constant(block)?; // surfaces the ordinal guard up front
    let mut pairs: Vec<(CubePoint, CubePoint)> = Vec::new();
    if block.n <= 4 {
        let cs = corners(block);
        for a in &cs {
            for b in &cs {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let a = sample_cube_point(block, &mut rng);
        let b = sample_cube_point(block, &mut rng);
        pairs.push((a, b));
    }

    let mut violations = Vec::new();
    let mut min_ratio: Option<f64> = None;
    let mut max_ratio: Option<f64> = None;
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let sup = a.sup_distance(b);
        let ia = embed(a)?;
        let ib = embed(b)?;
        let eh = eh_distance(&ia, &ib).value;
        let dh = hausdorff(&ia, &ib);
        if eh < sup / 2.0 - EPS {
            violations.push(ControlViolation::LowerBound { pair: idx, sup, eh });
        }
        if eh > sup + EPS {
            violations.push(ControlViolation::UpperBound { pair: idx, sup, eh });
        }
        if dh != sup {
            violations.push(ControlViolation::HausdorffMismatch {
                pair: idx,
                sup,
                hausdorff: dh,
            });
        }
        if sup > 0.0 {
            let ratio = eh / sup;
            min_ratio = Some(min_ratio.map_or(ratio, |r| r.min(ratio)));
            max_ratio = Some(max_ratio.map_or(ratio, |r| r.max(ratio)));
        }
    }
    Ok(ControlReport {
        pairs_checked: pairs.len(),
        violations,
        min_ratio,
        max_ratio,
    })
}
