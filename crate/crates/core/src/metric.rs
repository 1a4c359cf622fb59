//! Foundational types: finite metric spaces, networks, 1D point sets,
//! distance sets, the Kuratowski embedding, and distance-set quantization.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::EPS;

/// Metric axioms checked by [`validate_metric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    /// Nonnegativity and zero diagonal.
    M1,
    /// Distinct points are at positive distance.
    M2,
    /// Symmetry.
    M3,
    /// Triangle inequality.
    M4,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::M1 => write!(f, "M1"),
            Axiom::M2 => write!(f, "M2"),
            Axiom::M3 => write!(f, "M3"),
            Axiom::M4 => write!(f, "M4"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("matrix must be nonempty and square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix must be nonempty")]
    EmptyMatrix,
    #[error("non-finite matrix entry at ({i}, {j})")]
    NonFiniteEntry { i: usize, j: usize },
    #[error("axiom {axiom} violated at (i={i}, j={j}{})", k.map(|k| format!(", k={k}")).unwrap_or_default())]
    AxiomViolation {
        axiom: Axiom,
        i: usize,
        j: usize,
        k: Option<usize>,
    },
    #[error("point set must be nonempty")]
    EmptyPointSet,
    #[error("duplicate point {value} in point set")]
    DuplicatePoint { value: f64 },
    #[error("non-finite point in point set")]
    NonFinitePoint,
    #[error("quantization target must contain 0")]
    TargetMissingZero,
    #[error("quantization target has negative value {value}")]
    NegativeTargetValue { value: f64 },
    #[error("precondition failed: distance-set gap {gap} exceeds cap {cap}")]
    PreconditionFailed { gap: f64, cap: f64 },
}

/// A square real matrix over an index set, with no axioms beyond shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Network {
    d: Vec<Vec<f64>>,
}

impl Network {
    /// Builds a network from a nonempty square matrix of finite reals.
    pub fn new(d: Vec<Vec<f64>>) -> Result<Self, MetricError> {
        if d.is_empty() {
            return Err(MetricError::EmptyMatrix);
        }
        let n = d.len();
        for (row, r) in d.iter().enumerate() {
            if r.len() != n {
                return Err(MetricError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            for (j, v) in r.iter().enumerate() {
                if !v.is_finite() {
                    return Err(MetricError::NonFiniteEntry { i: row, j });
                }
            }
        }
        Ok(Network { d })
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty matrices
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.d[i][j]
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.d
    }

    /// Largest matrix entry. Coincides with the usual diameter on metric
    /// spaces and pseudo-semi-metric networks.
    pub fn diameter(&self) -> f64 {
        self.d
            .iter()
            .flatten()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Row maximum; used as a search-ordering heuristic.
    pub(crate) fn eccentricity(&self, i: usize) -> f64 {
        self.d[i].iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Scales every entry by `t`.
    pub fn scaled(&self, t: f64) -> Network {
        Network {
            d: self
                .d
                .iter()
                .map(|row| row.iter().map(|v| v * t).collect())
                .collect(),
        }
    }
}

/// A network with zero diagonal, nonnegative entries and symmetry
/// (axioms M1 and M3), but no triangle inequality and no separation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PseudoSemiMetricNetwork {
    network: Network,
}

impl PseudoSemiMetricNetwork {
    pub fn new(network: Network) -> Result<Self, MetricError> {
        check_m1(&network)?;
        check_m3(&network)?;
        Ok(PseudoSemiMetricNetwork { network })
    }

    pub fn network(&self) -> &Network {
        &self.network
    }

    pub fn len(&self) -> usize {
        self.network.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.network.entry(i, j)
    }
}

/// A finite metric space: a network certified to satisfy (M1)-(M4).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteMetricSpace {
    network: Network,
}

impl FiniteMetricSpace {
    pub fn network(&self) -> &Network {
        &self.network
    }

    pub fn len(&self) -> usize {
        self.network.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.network.entry(i, j)
    }

    pub fn diameter(&self) -> f64 {
        self.network.diameter()
    }

    pub fn scaled(&self, t: f64) -> FiniteMetricSpace {
        assert!(t > 0.0, "scale factor must be positive");
        FiniteMetricSpace {
            network: self.network.scaled(t),
        }
    }
}

fn check_m1(m: &Network) -> Result<(), MetricError> {
    let n = m.len();
    for i in 0..n {
        if m.entry(i, i).abs() > EPS {
            return Err(MetricError::AxiomViolation {
                axiom: Axiom::M1,
                i,
                j: i,
                k: None,
            });
        }
        for j in 0..n {
            if m.entry(i, j) < -EPS {
                return Err(MetricError::AxiomViolation {
                    axiom: Axiom::M1,
                    i,
                    j,
                    k: None,
                });
            }
        }
    }
    Ok(())
}

fn check_m3(m: &Network) -> Result<(), MetricError> {
    let n = m.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if (m.entry(i, j) - m.entry(j, i)).abs() > EPS {
                return Err(MetricError::AxiomViolation {
                    axiom: Axiom::M3,
                    i,
                    j,
                    k: None,
                });
            }
        }
    }
    Ok(())
}

/// Certifies a network as a finite metric space, or reports the first
/// violated axiom with witness indices. All checks use the absolute
/// tolerance [`EPS`].
pub fn validate_metric(m: &Network) -> Result<FiniteMetricSpace, MetricError> {
    let n = m.len();
    check_m1(m)?;
    // M2: distinct points must be at distance above tolerance.
    for i in 0..n {
        for j in 0..n {
            if i != j && m.entry(i, j) <= EPS {
                return Err(MetricError::AxiomViolation {
                    axiom: Axiom::M2,
                    i,
                    j,
                    k: None,
                });
            }
        }
    }
    check_m3(m)?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if m.entry(i, j) > m.entry(i, k) + m.entry(k, j) + EPS {
                    return Err(MetricError::AxiomViolation {
                        axiom: Axiom::M4,
                        i,
                        j,
                        k: Some(k),
                    });
                }
            }
        }
    }
    Ok(FiniteMetricSpace { network: m.clone() })
}

/// A finite subset of the real line, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Point1DSet {
    points: Vec<f64>,
}

impl Point1DSet {
    /// Sorts the input and rejects duplicates, non-finite values and
    /// empty input.
    pub fn new(mut points: Vec<f64>) -> Result<Self, MetricError> {
        if points.is_empty() {
            return Err(MetricError::EmptyPointSet);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(MetricError::NonFinitePoint);
        }
        for p in points.iter_mut() {
            if *p == 0.0 {
                *p = 0.0; // normalize -0.0
            }
        }
        points.sort_by(f64::total_cmp);
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(MetricError::DuplicatePoint { value: w[0] });
            }
        }
        Ok(Point1DSet { points })
    }

    /// Internal constructor for values already sorted strictly increasing.
    pub(crate) fn from_sorted_unchecked(points: Vec<f64>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!points.is_empty());
        Point1DSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.points
    }

    pub fn min(&self) -> f64 {
        self.points[0]
    }

    pub fn max(&self) -> f64 {
        *self.points.last().unwrap()
    }

    pub fn diameter(&self) -> f64 {
        self.max() - self.min()
    }

    pub fn contains(&self, v: f64) -> bool {
        self.points.contains(&v)
    }

    /// The mirror image under x -> -x.
    pub fn reflected(&self) -> Point1DSet {
        let mut pts: Vec<f64> = self
            .points
            .iter()
            .rev()
            .map(|p| if *p == 0.0 { 0.0 } else { -p })
            .collect();
        for p in pts.iter_mut() {
            if *p == 0.0 {
                *p = 0.0;
            }
        }
        Point1DSet::from_sorted_unchecked(pts)
    }

    /// The translate x -> x + shift.
    pub fn translated(&self, shift: f64) -> Point1DSet {
        Point1DSet::from_sorted_unchecked(self.points.iter().map(|p| p + shift).collect())
    }

    /// Applies an isometry of the line: optional reflection, then a shift.
    pub fn transformed(&self, reflect: bool, shift: f64) -> Point1DSet {
        if reflect {
            self.reflected().translated(shift)
        } else {
            self.translated(shift)
        }
    }
}

/// The sorted, deduplicated set of values attained by a network's matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DistanceSet {
    values: Vec<f64>,
}

impl DistanceSet {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        for v in values.iter_mut() {
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        values.sort_by(f64::total_cmp);
        values.dedup();
        DistanceSet { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains_zero(&self) -> bool {
        self.values.contains(&0.0)
    }

    /// Nearest value of the set, ties broken toward the smaller value.
    pub fn nearest(&self, x: f64) -> f64 {
        let mut best = self.values[0];
        let mut best_d = (best - x).abs();
        for &v in &self.values[1..] {
            let d = (v - x).abs();
            if d < best_d {
                best = v;
                best_d = d;
            }
        }
        best
    }

    pub fn is_subset_of(&self, other: &DistanceSet) -> bool {
        self.values.iter().all(|v| other.values.contains(v))
    }
}

/// Realizes a 1D point set as an abstract metric space with
/// `d[i][j] = |p_i - p_j|`.
pub fn from_point_set(p: &Point1DSet) -> FiniteMetricSpace {
    let pts = p.as_slice();
    let n = pts.len();
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            d[i][j] = (pts[i] - pts[j]).abs();
        }
    }
    FiniteMetricSpace {
        network: Network { d },
    }
}

/// All matrix entries of a network, sorted and deduplicated.
pub fn distance_set(m: &Network) -> DistanceSet {
    DistanceSet::from_values(m.matrix().iter().flatten().copied().collect())
}

/// The isometric embedding of a finite metric space into the sup-metric
/// cube: point `i` maps to the `i`-th row of the distance matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KuratowskiEmbedding {
    /// One vector in R^n per point.
    pub vectors: Vec<Vec<f64>>,
    /// Side of the cube [0, m]^n that provably contains the image.
    pub cube_side: u64,
}

/// Sup-metric distance between two coordinate vectors.
pub fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Embeds a metric space isometrically into `([0, m]^n, sup)` with
/// `m = ceil(diam)`; the sup-distance of the images reproduces the
/// original matrix exactly.
pub fn kuratowski_embed(m: &FiniteMetricSpace) -> KuratowskiEmbedding {
    let vectors = m.network().matrix().to_vec();
    let cube_side = m.diameter().ceil().max(0.0) as u64;
    KuratowskiEmbedding { vectors, cube_side }
}

/// Snaps every entry of a pseudo-semi-metric network to the nearest value
/// of `target` (ties toward the smaller value, 0 fixed), provided the
/// Hausdorff gap between the network's distance set and `target` is at
/// most `cap`.
///
/// The result's distance set is a subset of `target`, and the identity
/// correspondence certifies a network distance of at most `cap`.
pub fn quantize_network(
    y: &PseudoSemiMetricNetwork,
    target: &DistanceSet,
    cap: f64,
) -> Result<PseudoSemiMetricNetwork, MetricError> {
    if !target.contains_zero() {
        return Err(MetricError::TargetMissingZero);
    }
    if target.values()[0] < 0.0 {
        return Err(MetricError::NegativeTargetValue {
            value: target.values()[0],
        });
    }
    let own = distance_set(y.network());
    let gap = crate::hausdorff1d::hausdorff_values(own.values(), target.values());
    if gap > cap + EPS {
        return Err(MetricError::PreconditionFailed { gap, cap });
    }
    let n = y.len();
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = y.entry(i, j);
            d[i][j] = if v == 0.0 { 0.0 } else { target.nearest(v) };
        }
    }
    Ok(PseudoSemiMetricNetwork {
        network: Network { d },
    })
}

/// The coarse multiplicity bound `(n(n-1)/2 + 1)^(n(n-1)/2)` on distinct
/// quantization images of n-point networks, as an exact big integer.
pub fn quantization_image_bound(n: u64) -> BigUint {
    let e = n * (n - 1) / 2;
    BigUint::from(e + 1).pow(e.try_into().expect("exponent fits u32"))
}
