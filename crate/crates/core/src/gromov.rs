//! Exact Gromov-Hausdorff / network distance for small finite spaces via
//! correspondence search, plus the stable lower bounds that prune it.
//!
//! No polynomial algorithm is known (the problem is NP-hard), so the
//! solver is a branch-and-bound over pairs of maps `f: X -> Y` and
//! `g: Y -> X`, whose union-of-graphs correspondences always contain an
//! optimal sub-correspondence: distortion is monotone under relation
//! inclusion, and every correspondence contains the graph pair obtained
//! by choosing one partner per point. Worst-case growth is m^n * n^m,
//! hence the size guard.

use serde::Serialize;
use thiserror::Error;

use crate::hausdorff1d::hausdorff_values;
use crate::metric::{distance_set, FiniteMetricSpace, Network};

/// Default per-space size guard for the exact solver.
pub const DEFAULT_SIZE_GUARD: usize = 8;

/// Size guard for the exhaustive relation enumeration oracle.
pub const BRUTEFORCE_GUARD: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GhError {
    #[error("correspondence is not total: {side} index {index} unmatched")]
    InvalidCorrespondence { side: &'static str, index: usize },
    #[error("correspondence pair ({i}, {j}) out of range for sizes {n} x {m}")]
    PairOutOfRange {
        i: usize,
        j: usize,
        n: usize,
        m: usize,
    },
    #[error("size guard exceeded: spaces have {n} and {m} points, guard is {guard}")]
    SizeGuardExceeded { n: usize, m: usize, guard: usize },
}

/// A relation between two index sets that is total in both directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Correspondence {
    pairs: Vec<(usize, usize)>,
}

impl Correspondence {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Correspondence { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Checks totality in both directions for spaces of sizes n and m.
    pub fn validate(&self, n: usize, m: usize) -> Result<(), GhError> {
        let mut left = vec![false; n];
        let mut right = vec![false; m];
        for &(i, j) in &self.pairs {
            if i >= n || j >= m {
                return Err(GhError::PairOutOfRange { i, j, n, m });
            }
            left[i] = true;
            right[j] = true;
        }
        if let Some(index) = left.iter().position(|c| !c) {
            return Err(GhError::InvalidCorrespondence {
                side: "left",
                index,
            });
        }
        if let Some(index) = right.iter().position(|c| !c) {
            return Err(GhError::InvalidCorrespondence {
                side: "right",
                index,
            });
        }
        Ok(())
    }

    /// The identity correspondence on n points.
    pub fn identity(n: usize) -> Self {
        Correspondence {
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }
}

/// Stable lower bounds on the distance value, reported alongside it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerBounds {
    pub distance_set: f64,
    pub diameter: f64,
}

/// The distance value, an optimal witness, and the lower bounds below it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GhResult {
    pub value: f64,
    pub witness: Correspondence,
    pub lower_bounds: LowerBounds,
}

/// The largest mismatch `|d_X(x1, x2) - d_Y(y1, y2)|` over pairs of
/// related pairs, including a pair against itself (diagonal entries of
/// arbitrary networks contribute).
pub fn distortion(r: &Correspondence, x: &Network, y: &Network) -> Result<f64, GhError> {
    r.validate(x.len(), y.len())?;
    let mut worst = 0.0f64;
    for &(i1, j1) in r.pairs() {
        for &(i2, j2) in r.pairs() {
            let gap = (x.entry(i1, i2) - y.entry(j1, j2)).abs();
            if gap > worst {
                worst = gap;
            }
        }
    }
    Ok(worst)
}

/// Half the Hausdorff distance between the distance sets. The distance
/// set map is 2-Lipschitz from network distance to Hausdorff distance,
/// so this never exceeds the network distance.
pub fn lower_bound_distance_set(x: &Network, y: &Network) -> f64 {
    let dx = distance_set(x);
    let dy = distance_set(y);
    hausdorff_values(dx.values(), dy.values()) / 2.0
}

/// Half the diameter gap. Any correspondence must match a diametral pair
/// somewhere, so the distortion is at least the diameter difference.
pub fn lower_bound_diameter(x: &Network, y: &Network) -> f64 {
    (x.diameter() - y.diameter()).abs() / 2.0
}

/// Branch-and-bound state for the map-pair search.
struct Search<'a> {
    x: &'a Network,
    y: &'a Network,
    /// X indices in assignment order (eccentricity-descending).
    x_order: Vec<usize>,
    /// Y indices in assignment order.
    y_order: Vec<usize>,
    /// Relation pairs along the current branch.
    assigned: Vec<(usize, usize)>,
    /// Incumbent distortion; the search minimizes this.
    best_distortion: f64,
    best_pairs: Vec<(usize, usize)>,
    /// Stop as soon as the incumbent meets this proven lower bound.
    target_distortion: f64,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(x: &'a Network, y: &'a Network, target_distortion: f64) -> Self {
        let order_of = |net: &Network| {
            let mut idx: Vec<usize> = (0..net.len()).collect();
            idx.sort_by(|a, b| {
                net.eccentricity(*b)
                    .partial_cmp(&net.eccentricity(*a))
                    .unwrap()
                    .then(a.cmp(b))
            });
            idx
        };
        Search {
            x,
            y,
            x_order: order_of(x),
            y_order: order_of(y),
            assigned: Vec::with_capacity(x.len() + y.len()),
            best_distortion: f64::INFINITY,
            best_pairs: Vec::new(),
            target_distortion,
            done: false,
        }
    }

    /// Largest mismatch the new pair adds against the current branch;
    /// both orientations matter for asymmetric networks.
    fn added_distortion(&self, i: usize, j: usize) -> f64 {
        let mut worst = (self.x.entry(i, i) - self.y.entry(j, j)).abs();
        for &(i2, j2) in &self.assigned {
            let forward = (self.x.entry(i, i2) - self.y.entry(j, j2)).abs();
            let backward = (self.x.entry(i2, i) - self.y.entry(j2, j)).abs();
            worst = worst.max(forward).max(backward);
        }
        worst
    }

    /// Assigns images for X points in order; `partial` is the distortion
    /// of the branch so far.
    fn assign_x(&mut self, slot: usize, partial: f64) {
        if self.done {
            return;
        }
        if slot == self.x_order.len() {
            let covered: Vec<bool> = {
                let mut c = vec![false; self.y.len()];
                for &(_, j) in &self.assigned {
                    c[j] = true;
                }
                c
            };
            self.assign_y(0, partial, &covered);
            return;
        }
        let i = self.x_order[slot];
        for j in 0..self.y.len() {
            let partial2 = partial.max(self.added_distortion(i, j));
            if partial2 >= self.best_distortion {
                continue;
            }
            self.assigned.push((i, j));
            self.assign_x(slot + 1, partial2);
            self.assigned.pop();
            if self.done {
                return;
            }
        }
    }

    /// Assigns preimages for Y points not already covered by the X maps.
    /// A covered point's optimal preimage is one of its existing partners
    /// (the pair is already in the relation and adds nothing), so covered
    /// slots are skipped.
    fn assign_y(&mut self, slot: usize, partial: f64, covered: &[bool]) {
        if self.done {
            return;
        }
        if slot == self.y_order.len() {
            // Strictly better than the incumbent by the pruning above.
            self.best_distortion = partial;
            self.best_pairs = self.assigned.clone();
            if self.best_distortion <= self.target_distortion {
                self.done = true;
            }
            return;
        }
        let j = self.y_order[slot];
        if covered[j] {
            self.assign_y(slot + 1, partial, covered);
            return;
        }
        for i in 0..self.x.len() {
            let partial2 = partial.max(self.added_distortion(i, j));
            if partial2 >= self.best_distortion {
                continue;
            }
            self.assigned.push((i, j));
            self.assign_y(slot + 1, partial2, covered);
            self.assigned.pop();
            if self.done {
                return;
            }
        }
    }
}

fn solve(x: &Network, y: &Network, guard: usize) -> Result<GhResult, GhError> {
    let (n, m) = (x.len(), y.len());
    if n > guard || m > guard {
        return Err(GhError::SizeGuardExceeded { n, m, guard });
    }
    let lower_bounds = LowerBounds {
        distance_set: lower_bound_distance_set(x, y),
        diameter: lower_bound_diameter(x, y),
    };
    let target = 2.0 * lower_bounds.distance_set.max(lower_bounds.diameter);
    let mut search = Search::new(x, y, target);
    search.assign_x(0, 0.0);
    debug_assert!(search.best_distortion.is_finite());
    Ok(GhResult {
        value: search.best_distortion / 2.0,
        witness: Correspondence::new(search.best_pairs),
        lower_bounds,
    })
}

/// Exact Gromov-Hausdorff distance between two finite metric spaces:
/// half the minimal correspondence distortion, with the witness that
/// attains it. Guarded at [`DEFAULT_SIZE_GUARD`] points per space.
pub fn gh_exact(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<GhResult, GhError> {
    gh_exact_with_guard(x, y, DEFAULT_SIZE_GUARD)
}

/// [`gh_exact`] with a caller-chosen size guard.
pub fn gh_exact_with_guard(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    guard: usize,
) -> Result<GhResult, GhError> {
    solve(x.network(), y.network(), guard)
}

/// Oracle for [`gh_exact`]: enumerates every subset of the pair grid
/// that is a correspondence. Only for spaces of up to
/// [`BRUTEFORCE_GUARD`] points.
pub fn gh_bruteforce(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Result<GhResult, GhError> {
    let (xn, yn) = (x.network(), y.network());
    let (n, m) = (xn.len(), yn.len());
    if n > BRUTEFORCE_GUARD || m > BRUTEFORCE_GUARD {
        return Err(GhError::SizeGuardExceeded {
            n,
            m,
            guard: BRUTEFORCE_GUARD,
        });
    }
    let lower_bounds = LowerBounds {
        distance_set: lower_bound_distance_set(xn, yn),
        diameter: lower_bound_diameter(xn, yn),
    };
    let mut best = f64::INFINITY;
    let mut best_pairs: Vec<(usize, usize)> = Vec::new();
    for mask in 1u32..(1 << (n * m)) {
        let mut pairs = Vec::new();
        let mut left = vec![false; n];
        let mut right = vec![false; m];
        for i in 0..n {
            for j in 0..m {
                if mask & (1 << (i * m + j)) != 0 {
                    pairs.push((i, j));
                    left[i] = true;
                    right[j] = true;
                }
            }
        }
        if !(left.iter().all(|c| *c) && right.iter().all(|c| *c)) {
            continue;
        }
        let mut dis = 0.0f64;
        for &(i1, j1) in &pairs {
            for &(i2, j2) in &pairs {
                dis = dis.max((xn.entry(i1, i2) - yn.entry(j1, j2)).abs());
            }
        }
        if dis < best {
            best = dis;
            best_pairs = pairs;
        }
    }
    Ok(GhResult {
        value: best / 2.0,
        witness: Correspondence::new(best_pairs),
        lower_bounds,
    })
}

/// Network distance: the same search without metric-axiom preconditions.
pub fn network_distance(x: &Network, y: &Network) -> Result<GhResult, GhError> {
    solve(x, y, DEFAULT_SIZE_GUARD)
}

/// [`network_distance`] with a caller-chosen size guard.
pub fn network_distance_with_guard(
    x: &Network,
    y: &Network,
    guard: usize,
) -> Result<GhResult, GhError> {
    solve(x, y, guard)
}
