//! Cover calculus on finite samples of spaces of point sets: the
//! two-class interval cover of the space of pairs `{0, x}`, the
//! absorption combinator on cover classes, element decomposition at a
//! radius, classwise cover combination, and a certificate checker.
//!
//! All operations act on finite samples with an explicit Hausdorff
//! distance matrix; checks report "no violation found" on the sample,
//! never a proof about the ambient space.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hausdorff1d::hausdorff;
use crate::metric::{MetricError, Point1DSet};

/// A set of element indices into a [`SampledSpace`], kept sorted.
pub type Member = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Hypothesis {
    /// Dense class must be disjoint at the absorption radius.
    DenseDisjointness {
        member_a: usize,
        member_b: usize,
        distance: f64,
    },
    /// Dense members must respect the declared bound.
    DenseBound { member: usize, diameter: f64 },
    /// The dense bound must be at least the absorption radius.
    DenseBoundBelowRadius { bound: f64, r: f64 },
    /// Sparse class must be disjoint at five times the dense bound.
    SparseDisjointness {
        member_a: usize,
        member_b: usize,
        distance: f64,
        required: f64,
    },
    /// Sparse members must respect the declared bound.
    SparseBound { member: usize, diameter: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoverError {
    #[error("absorption hypothesis violated: {which:?}")]
    HypothesisViolated { which: Hypothesis },
    #[error("class counts differ: {left} vs {right}")]
    ClassCountMismatch { left: usize, right: usize },
    #[error("element {index} does not contain 0")]
    ElementMissingZero { index: usize },
    #[error("element {index} has a negative point")]
    NegativePoint { index: usize },
    #[error("element {index} has {len} points; this cover handles at most {max}")]
    ElementTooLarge {
        index: usize,
        len: usize,
        max: usize,
    },
    #[error("element index {index} out of range for sample of {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("radius must be positive, got {r}")]
    NonPositiveRadius { r: f64 },
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// A finite sample of point sets containing 0, with the pairwise
/// Hausdorff distances precomputed.
#[derive(Debug, Clone)]
pub struct SampledSpace {
    elements: Vec<Point1DSet>,
    metric: Vec<Vec<f64>>,
}

impl SampledSpace {
    /// Every element must contain the point 0 and lie in the nonnegative
    /// half-line.
    pub fn new(elements: Vec<Point1DSet>) -> Result<Self, CoverError> {
        for (index, e) in elements.iter().enumerate() {
            if !e.contains(0.0) {
                return Err(CoverError::ElementMissingZero { index });
            }
            if e.min() < 0.0 {
                return Err(CoverError::NegativePoint { index });
            }
        }
        let n = elements.len();
        let mut metric = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = hausdorff(&elements[i], &elements[j]);
                metric[i][j] = d;
                metric[j][i] = d;
            }
        }
        Ok(SampledSpace { elements, metric })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Point1DSet {
        &self.elements[i]
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.metric[i][j]
    }

    /// Infimum distance between two index sets; infinite when either is
    /// empty.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> f64 {
        let mut best = f64::INFINITY;
        for &i in a {
            for &j in b {
                best = best.min(self.metric[i][j]);
            }
        }
        best
    }

    /// Largest pairwise distance within an index set.
    pub fn member_diameter(&self, a: &[usize]) -> f64 {
        let mut worst = 0.0f64;
        for (pos, &i) in a.iter().enumerate() {
            for &j in &a[pos + 1..] {
                worst = worst.max(self.metric[i][j]);
            }
        }
        worst
    }
}

/// A classed family of members over a sampled space, with the radius its
/// classes are disjoint at and the bound its member diameters respect.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverFamily {
    pub r: f64,
    pub bound: f64,
    pub classes: Vec<Vec<Member>>,
}

/// Assigns a nonnegative position to the class-and-block of the
/// two-class interval cover: class `i` and block `k` such that
/// `x` lies in `[(4k + 2i) r, (4k + 2i + 2) r)`.
///
/// Intervals are taken half-open so the assignment is a function;
/// disjointness and bounds are unaffected.
pub fn x1_cover_assign(x: f64, r: f64) -> (usize, u64) {
    assert!(x >= 0.0, "position must be nonnegative");
    assert!(r > 0.0, "radius must be positive");
    let j = (x / (2.0 * r)).floor() as u64;
    ((j % 2) as usize, j / 2)
}

/// Builds the two-class cover of a sample of elements `{0}` or `{0, x}`:
/// members collect the elements whose nonzero point falls in the same
/// interval. Each class is r-disjoint and members are 2r-bounded.
pub fn x1_cover(space: &SampledSpace, r: f64) -> Result<CoverFamily, CoverError> {
    if r <= 0.0 {
        return Err(CoverError::NonPositiveRadius { r });
    }
    let mut blocks: [BTreeMap<u64, Member>; 2] = [BTreeMap::new(), BTreeMap::new()];
    for (index, e) in (0..space.len()).map(|i| (i, space.element(i))) {
        if e.len() > 2 {
            return Err(CoverError::ElementTooLarge {
                index,
                len: e.len(),
                max: 2,
            });
        }
        let position = e.max();
        let (class, block) = x1_cover_assign(position, r);
        blocks[class].entry(block).or_default().push(index);
    }
    let classes = blocks
        .into_iter()
        .map(|b| b.into_values().collect())
        .collect();
    Ok(CoverFamily {
        r,
        bound: 2.0 * r,
        classes,
    })
}

/// One class produced by [`absorb_union`], with the diameter bound its
/// members provably respect.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbsorbedClass {
    pub members: Vec<Member>,
    pub bound: f64,
}

/// The absorption combinator on two cover classes: each sparse member
/// swallows every dense member within distance `r` of it, and dense
/// members farther than `r` from all sparse members survive unchanged.
///
/// Hypotheses (verified on the sample): the dense class is r-disjoint
/// with member diameters at most `dense_bound >= r`; the sparse class is
/// `5 * dense_bound`-disjoint with member diameters at most
/// `sparse_bound`. Under them the output is again r-disjoint, and member
/// diameters stay below `sparse_bound + 2 (r + dense_bound)`.
pub fn absorb_union(
    space: &SampledSpace,
    sparse: &[Member],
    sparse_bound: f64,
    dense: &[Member],
    dense_bound: f64,
    r: f64,
) -> Result<AbsorbedClass, CoverError> {
    if dense_bound < r {
        return Err(CoverError::HypothesisViolated {
            which: Hypothesis::DenseBoundBelowRadius {
                bound: dense_bound,
                r,
            },
        });
    }
    for (idx, m) in dense.iter().enumerate() {
        let diameter = space.member_diameter(m);
        if diameter > dense_bound {
            return Err(CoverError::HypothesisViolated {
                which: Hypothesis::DenseBound {
                    member: idx,
                    diameter,
                },
            });
        }
    }
    for (a, ma) in dense.iter().enumerate() {
        for (boff, mb) in dense.iter().enumerate().skip(a + 1) {
            let distance = space.set_distance(ma, mb);
            if distance <= r {
                return Err(CoverError::HypothesisViolated {
                    which: Hypothesis::DenseDisjointness {
                        member_a: a,
                        member_b: boff,
                        distance,
                    },
                });
            }
        }
    }
    for (idx, m) in sparse.iter().enumerate() {
        let diameter = space.member_diameter(m);
        if diameter > sparse_bound {
            return Err(CoverError::HypothesisViolated {
                which: Hypothesis::SparseBound {
                    member: idx,
                    diameter,
                },
            });
        }
    }
    let required = 5.0 * dense_bound;
    for (a, ma) in sparse.iter().enumerate() {
        for (boff, mb) in sparse.iter().enumerate().skip(a + 1) {
            let distance = space.set_distance(ma, mb);
            if distance <= required {
                return Err(CoverError::HypothesisViolated {
                    which: Hypothesis::SparseDisjointness {
                        member_a: a,
                        member_b: boff,
                        distance,
                        required,
                    },
                });
            }
        }
    }

    let mut members: Vec<Member> = Vec::with_capacity(sparse.len());
    let mut absorbed = vec![false; dense.len()];
    for v in sparse {
        let mut grown = v.clone();
        for (idx, u) in dense.iter().enumerate() {
            if space.set_distance(v, u) <= r {
                grown.extend_from_slice(u);
                absorbed[idx] = true;
            }
        }
        grown.sort_unstable();
        grown.dedup();
        members.push(grown);
    }
    for (idx, u) in dense.iter().enumerate() {
        if !absorbed[idx] {
            members.push(u.clone());
        }
    }
    Ok(AbsorbedClass {
        members,
        bound: sparse_bound + 2.0 * (r + dense_bound),
    })
}

/// Where an element lands when split at radius `r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Decomposition {
    /// Every nonzero point exceeds `r`: the element belongs to the
    /// stratum whose covers get extended by adjoining 0.
    Tilde,
    /// Some nonzero point is within `r` of 0: the element projects onto
    /// its far points plus 0, at Hausdorff distance at most `r`.
    Near {
        projection: Point1DSet,
        hausdorff_gap: f64,
    },
}

/// Splits an element containing 0 at radius `r`.
pub fn decompose_element(c: &Point1DSet, r: f64) -> Result<Decomposition, CoverError> {
    if r <= 0.0 {
        return Err(CoverError::NonPositiveRadius { r });
    }
    if !c.contains(0.0) {
        return Err(CoverError::ElementMissingZero { index: 0 });
    }
    let near_nonzero = c.as_slice().iter().any(|p| *p != 0.0 && p.abs() <= r);
    if !near_nonzero {
        return Ok(Decomposition::Tilde);
    }
    let mut far: Vec<f64> = vec![0.0];
    far.extend(c.as_slice().iter().copied().filter(|p| p.abs() > r));
    let projection = Point1DSet::new(far)?;
    let hausdorff_gap = hausdorff(c, &projection);
    debug_assert!(hausdorff_gap <= r);
    Ok(Decomposition::Near {
        projection,
        hausdorff_gap,
    })
}

/// Classwise absorption of a dense cover into a sparse one: class `i` of
/// the result is class `i` of `v` absorbing class `i` of `w_tilde`.
///
/// `w_tilde` plays the dense role (r-disjoint, bounded by its declared
/// bound), `v` the sparse one (5R-disjoint for R the dense bound); this
/// is the only role assignment under which the output classes stay
/// r-disjoint.
pub fn combine_covers(
    space: &SampledSpace,
    w_tilde: &CoverFamily,
    v: &CoverFamily,
    r: f64,
) -> Result<CoverFamily, CoverError> {
    if w_tilde.classes.len() != v.classes.len() {
        return Err(CoverError::ClassCountMismatch {
            left: w_tilde.classes.len(),
            right: v.classes.len(),
        });
    }
    let mut classes = Vec::with_capacity(v.classes.len());
    let mut bound = 0.0f64;
    for (dense_class, sparse_class) in w_tilde.classes.iter().zip(&v.classes) {
        let combined = absorb_union(space, sparse_class, v.bound, dense_class, w_tilde.bound, r)?;
        bound = bound.max(combined.bound);
        classes.push(combined.members);
    }
    Ok(CoverFamily { r, bound, classes })
}

/// One failed certificate check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum CoverViolation {
    NotCovered {
        element: usize,
    },
    IndexOutOfRange {
        class: usize,
        member: usize,
        index: usize,
    },
    ClassNotDisjoint {
        class: usize,
        member_a: usize,
        member_b: usize,
        distance: f64,
    },
    DiameterExceeded {
        class: usize,
        member: usize,
        diameter: f64,
        bound: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverReport {
    pub violations: Vec<CoverViolation>,
}

impl CoverReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three cover invariants on the sample: every element is
/// covered, members of one class are more than `r` apart, and member
/// diameters respect the bound. All violations are reported with
/// witnesses.
pub fn verify_cover(space: &SampledSpace, cover: &CoverFamily) -> CoverReport {
    let mut violations = Vec::new();
    let mut covered = vec![false; space.len()];
    for (ci, class) in cover.classes.iter().enumerate() {
        for (mi, member) in class.iter().enumerate() {
            for &index in member {
                if index >= space.len() {
                    violations.push(CoverViolation::IndexOutOfRange {
                        class: ci,
                        member: mi,
                        index,
                    });
                } else {
                    covered[index] = true;
                }
            }
            let diameter = space.member_diameter(member);
            if diameter > cover.bound {
                violations.push(CoverViolation::DiameterExceeded {
                    class: ci,
                    member: mi,
                    diameter,
                    bound: cover.bound,
                });
            }
        }
        for (a, ma) in class.iter().enumerate() {
            for (b, mb) in class.iter().enumerate().skip(a + 1) {
                let distance = space.set_distance(ma, mb);
                if distance <= cover.r {
                    violations.push(CoverViolation::ClassNotDisjoint {
                        class: ci,
                        member_a: a,
                        member_b: b,
                        distance,
                    });
                }
            }
        }
    }
    for (element, c) in covered.iter().enumerate() {
        if !c {
            violations.push(CoverViolation::NotCovered { element });
        }
    }
    CoverReport { violations }
}

/// Builds the sample of elements `{0, x}` (or `{0}` for x = 0) at the
/// given positions.
pub fn line_sample(positions: &[f64]) -> Result<SampledSpace, CoverError> {
    let elements = positions
        .iter()
        .map(|&p| {
            if p == 0.0 {
                Point1DSet::new(vec![0.0])
            } else {
                Point1DSet::new(vec![0.0, p])
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    SampledSpace::new(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::trial_rng;
    use rand::Rng;

    #[test]
    fn assign_examples() {
        assert_eq!(x1_cover_assign(3.0, 1.0), (1, 0));
        assert_eq!(x1_cover_assign(0.0, 1.0), (0, 0));
        assert_eq!(x1_cover_assign(4.0, 1.0), (0, 1));
    }

    #[test]
    fn assign_respects_half_open_intervals_on_exact_inputs() {
        // Power-of-two radii and dyadic positions make the division
        // exact, so interval membership can be asserted as equalities.
        for &r in &[0.5f64, 1.0, 2.0] {
            for tick in 0..400u64 {
                let x = tick as f64 * r / 8.0;
                let (i, k) = x1_cover_assign(x, r);
                let lo = (4 * k + 2 * i as u64) as f64 * r;
                let hi = (4 * k + 2 * i as u64 + 2) as f64 * r;
                assert!(lo <= x && x < hi, "x={x} r={r} -> ({i}, {k})");
            }
        }
    }

    #[test]
    fn x1_cover_clean_on_random_samples() {
        for &r in &[0.5, 1.0, 3.0] {
            let mut rng = trial_rng(0xc0ffee, (r * 10.0) as u64);
            let positions: Vec<f64> = (0..200).map(|_| rng.gen_range(0.0..20.0 * r)).collect();
            let space = line_sample(&positions).unwrap();
            let cover = x1_cover(&space, r).unwrap();
            let report = verify_cover(&space, &cover);
            assert!(report.is_clean(), "r={r}: {:?}", report.violations);
        }
    }

    #[test]
    fn x1_cover_rejects_large_elements() {
        let space = SampledSpace::new(vec![Point1DSet::new(vec![0.0, 1.0, 2.0]).unwrap()]).unwrap();
        assert!(matches!(
            x1_cover(&space, 1.0),
            Err(CoverError::ElementTooLarge { .. })
        ));
    }

    #[test]
    fn absorb_single_absorption() {
        let space = line_sample(&[0.0, 1.0, 1.5, 2.0]).unwrap();
        let out = absorb_union(&space, &[vec![2, 3]], 0.5, &[vec![0, 1]], 1.0, 1.0).unwrap();
        assert_eq!(out.members, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn absorb_keeps_far_sparse_members() {
        let space = line_sample(&[0.0, 1.0, 1.5, 2.0, 10.0]).unwrap();
        let out =
            absorb_union(&space, &[vec![2, 3], vec![4]], 0.5, &[vec![0, 1]], 1.0, 1.0).unwrap();
        assert_eq!(out.members, vec![vec![0, 1, 2, 3], vec![4]]);
        assert!(space.set_distance(&out.members[0], &out.members[1]) > 1.0);
    }

    #[test]
    fn absorb_with_empty_dense_is_identity() {
        let space = line_sample(&[0.0, 1.0, 1.5, 2.0]).unwrap();
        let sparse = vec![vec![2usize, 3]];
        let out = absorb_union(&space, &sparse, 0.5, &[], 1.0, 1.0).unwrap();
        assert_eq!(out.members, sparse);
    }

    #[test]
    fn absorb_with_empty_sparse_is_identity() {
        let space = line_sample(&[0.0, 1.0]).unwrap();
        let dense = vec![vec![0usize, 1]];
        let out = absorb_union(&space, &[], 0.5, &dense, 1.0, 1.0).unwrap();
        assert_eq!(out.members, dense);
    }

    #[test]
    fn absorb_rejects_sparse_packed_too_tight() {
        // Two sparse members only 3 apart while 5 * dense_bound = 5.
        let space = line_sample(&[0.0, 3.0]).unwrap();
        let err = absorb_union(&space, &[vec![0], vec![1]], 1.0, &[], 1.0, 1.0).unwrap_err();
        assert!(matches!(
            err,
            CoverError::HypothesisViolated {
                which: Hypothesis::SparseDisjointness { .. }
            }
        ));
    }

    #[test]
    fn absorb_rejects_dense_overlap() {
        let space = line_sample(&[0.0, 0.5]).unwrap();
        let err = absorb_union(&space, &[], 1.0, &[vec![0], vec![1]], 1.0, 1.0).unwrap_err();
        assert!(matches!(
            err,
            CoverError::HypothesisViolated {
                which: Hypothesis::DenseDisjointness { .. }
            }
        ));
    }

    #[test]
    fn decompose_examples() {
        let tilde = decompose_element(&Point1DSet::new(vec![0.0, 5.0]).unwrap(), 1.0).unwrap();
        assert_eq!(tilde, Decomposition::Tilde);

        let near = decompose_element(&Point1DSet::new(vec![0.0, 0.5, 5.0]).unwrap(), 1.0).unwrap();
        match near {
            Decomposition::Near {
                projection,
                hausdorff_gap,
            } => {
                assert_eq!(projection.as_slice(), &[0.0, 5.0]);
                assert_eq!(hausdorff_gap, 0.5);
            }
            other => panic!("expected near stratum, got {other:?}"),
        }

        let singleton = decompose_element(&Point1DSet::new(vec![0.0]).unwrap(), 1.0).unwrap();
        assert_eq!(singleton, Decomposition::Tilde);
    }

    #[test]
    fn decompose_projection_drops_a_point() {
        // An element of n + 2 points in the near stratum projects to at
        // most n + 1 points.
        for trial in 0..40u64 {
            let mut rng = trial_rng(0xdec0, trial);
            let r = 1.0;
            let mut pts: Vec<f64> = vec![0.0, rng.gen_range(0.01..r)];
            for _ in 0..rng.gen_range(0..4) {
                let p: f64 = rng.gen_range(0.01..10.0);
                if pts.iter().all(|q| (q - p).abs() > 1e-6) {
                    pts.push(p);
                }
            }
            let n_plus_2 = pts.len();
            let c = Point1DSet::new(pts).unwrap();
            match decompose_element(&c, r).unwrap() {
                Decomposition::Near {
                    projection,
                    hausdorff_gap,
                } => {
                    assert!(projection.len() < n_plus_2);
                    assert!(hausdorff_gap <= r);
                }
                Decomposition::Tilde => panic!("element has a near point"),
            }
        }
    }

    /// Two-class line-sample fixture: positions grouped so that the
    /// dense (w-tilde) classes are 1-disjoint and 2-bounded, the sparse
    /// (v) classes are 10-disjoint, and absorption happens in each class.
    #[test]
    fn combine_two_class_fixture() {
        let positions = [
            0.0, 2.0, 10.0, 12.0, 5.0, 6.0, 20.0, 3.0, 4.0, 30.0, 7.0, 40.0,
        ];
        let space = line_sample(&positions).unwrap();
        let w_tilde = CoverFamily {
            r: 1.0,
            bound: 2.0,
            classes: vec![vec![vec![0, 1], vec![2, 3]], vec![vec![4, 5], vec![6]]],
        };
        let v = CoverFamily {
            r: 10.0,
            bound: 3.0,
            classes: vec![vec![vec![7, 8], vec![9]], vec![vec![10], vec![11]]],
        };
        let combined = combine_covers(&space, &w_tilde, &v, 1.0).unwrap();
        assert_eq!(
            combined.classes,
            vec![
                vec![vec![0, 1, 7, 8], vec![9], vec![2, 3]],
                vec![vec![4, 5, 10], vec![11], vec![6]],
            ]
        );
        assert_eq!(combined.bound, 3.0 + 2.0 * (1.0 + 2.0));
        let report = verify_cover(&space, &combined);
        assert!(report.is_clean(), "{:?}", report.violations);
    }

    #[test]
    fn combine_with_empty_side_is_identity_on_members() {
        let positions = [0.0, 2.0, 20.0, 22.0];
        let space = line_sample(&positions).unwrap();
        let w_tilde = CoverFamily {
            r: 1.0,
            bound: 2.0,
            classes: vec![vec![vec![0, 1]], vec![vec![2, 3]]],
        };
        let empty = CoverFamily {
            r: 10.0,
            bound: 3.0,
            classes: vec![vec![], vec![]],
        };
        let combined = combine_covers(&space, &w_tilde, &empty, 1.0).unwrap();
        assert_eq!(combined.classes, w_tilde.classes);

        let no_dense = CoverFamily {
            r: 1.0,
            bound: 2.0,
            classes: vec![vec![], vec![]],
        };
        let v = CoverFamily {
            r: 10.0,
            bound: 3.0,
            classes: vec![vec![vec![0], vec![2]], vec![vec![1], vec![3]]],
        };
        let combined = combine_covers(&space, &no_dense, &v, 1.0).unwrap();
        assert_eq!(combined.classes, v.classes);
    }

    #[test]
    fn combine_rejects_class_count_mismatch() {
        let space = line_sample(&[0.0, 1.0]).unwrap();
        let one = CoverFamily {
            r: 1.0,
            bound: 1.0,
            classes: vec![vec![vec![0]]],
        };
        let two = CoverFamily {
            r: 1.0,
            bound: 1.0,
            classes: vec![vec![vec![1]], vec![]],
        };
        assert!(matches!(
            combine_covers(&space, &one, &two, 1.0),
            Err(CoverError::ClassCountMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn verify_flags_constructed_failures() {
        let space = line_sample(&[0.0, 0.0, 5.0]).unwrap();
        // Two same-class members at distance 0.
        let overlapping = CoverFamily {
            r: 1.0,
            bound: 2.0,
            classes: vec![vec![vec![0], vec![1]], vec![vec![2]]],
        };
        let report = verify_cover(&space, &overlapping);
        assert!(report.violations.iter().any(
            |v| matches!(v, CoverViolation::ClassNotDisjoint { distance, .. } if *distance == 0.0)
        ));

        // Empty family on a nonempty sample.
        let empty = CoverFamily {
            r: 1.0,
            bound: 1.0,
            classes: vec![],
        };
        let report = verify_cover(&space, &empty);
        assert_eq!(report.violations.len(), 3);
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, CoverViolation::NotCovered { .. })));
    }

    #[test]
    fn absorb_random_fixtures_stay_disjoint() {
        for trial in 0..100u64 {
            let mut rng = trial_rng(0xab50, trial);
            let r = rng.gen_range(0.2..2.0);
            let dense_bound = r * rng.gen_range(1.0..3.0);
            let sparse_bound = dense_bound * rng.gen_range(1.0..3.0);

            // Dense clusters laid left to right with gaps above r.
            let mut positions: Vec<f64> = Vec::new();
            let mut dense: Vec<Member> = Vec::new();
            let mut cursor = rng.gen_range(0.0..r);
            for _ in 0..rng.gen_range(1..5usize) {
                let width = rng.gen_range(0.0..dense_bound);
                let count = rng.gen_range(1..4usize);
                let mut member = Vec::new();
                for c in 0..count {
                    member.push(positions.len());
                    positions.push(cursor + width * c as f64 / count.max(1) as f64);
                }
                dense.push(member);
                cursor += width + r + rng.gen_range(0.05 * r..2.0 * r);
            }
            // Sparse clusters on their own track, gaps above 5 * dense_bound.
            let mut sparse: Vec<Member> = Vec::new();
            let mut s_cursor = rng.gen_range(0.0..10.0 * dense_bound);
            for _ in 0..rng.gen_range(1..3usize) {
                let width = rng.gen_range(0.0..sparse_bound);
                let count = rng.gen_range(1..3usize);
                let mut member = Vec::new();
                for c in 0..count {
                    member.push(positions.len());
                    positions.push(s_cursor + width * c as f64 / count.max(1) as f64);
                }
                sparse.push(member);
                s_cursor += width + 5.0 * dense_bound + rng.gen_range(0.1..3.0) * dense_bound;
            }

            let space = line_sample(&positions).unwrap();
            let out = absorb_union(&space, &sparse, sparse_bound, &dense, dense_bound, r)
                .unwrap_or_else(|e| panic!("trial {trial}: hypotheses violated: {e}"));
            for (a, ma) in out.members.iter().enumerate() {
                assert!(space.member_diameter(ma) <= out.bound);
                for mb in &out.members[a + 1..] {
                    assert!(
                        space.set_distance(ma, mb) > r,
                        "trial {trial}: output not r-disjoint"
                    );
                }
            }
        }
    }
}
