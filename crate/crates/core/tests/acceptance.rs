//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured numbers (visible with `--nocapture`).
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ghkit::assouad::generate_witness;
use ghkit::covers::{
    absorb_union, line_sample, verify_cover, x1_cover, CoverError, Hypothesis, Member,
};
use ghkit::embeddings::{
    block_separation_lower_bound, embed, sample_cube_point, separation_constant,
    verify_control_functions, BlockIndex, CubePoint,
};
use ghkit::gromov::{gh_bruteforce, gh_exact, lower_bound_distance_set, network_distance};
use ghkit::hausdorff1d::{eh_distance, hausdorff};
use ghkit::metric::{
    distance_set, from_point_set, kuratowski_embed, quantization_image_bound, quantize_network,
    sup_distance, validate_metric, DistanceSet, FiniteMetricSpace, Network, Point1DSet,
    PseudoSemiMetricNetwork,
};
use ghkit::rng::{random_point_set, trial_rng};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

/// A small metric space realized by random points of the integer grid
/// Z^3 under the sup metric: distances are exact integers, so every
/// axiom holds exactly, not merely within tolerance.
fn random_chebyshev_space(rng: &mut ChaCha8Rng, max_points: usize) -> FiniteMetricSpace {
    let n = rng.gen_range(1..=max_points);
    let mut pts: Vec<[i64; 3]> = Vec::with_capacity(n);
    while pts.len() < n {
        let cand = [
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
        ];
        if !pts.contains(&cand) {
            pts.push(cand);
        }
    }
    let d: Vec<Vec<f64>> = pts
        .iter()
        .map(|a| {
            pts.iter()
                .map(|b| (0..3).map(|k| (a[k] - b[k]).abs()).max().unwrap() as f64)
                .collect()
        })
        .collect();
    validate_metric(&Network::new(d).unwrap()).unwrap()
}

/// A point set on the dyadic grid of step 1/1024 in [0, 4]; differences
/// are exactly representable.
fn random_dyadic_point_set(rng: &mut ChaCha8Rng, max_points: usize) -> Point1DSet {
    let n = rng.gen_range(1..=max_points);
    let mut ticks: BTreeSet<u64> = BTreeSet::new();
    while ticks.len() < n {
        ticks.insert(rng.gen_range(0..=4096u64));
    }
    Point1DSet::new(ticks.into_iter().map(|t| t as f64 / 1024.0).collect()).unwrap()
}

#[test]
fn acceptance_oracle_equivalence() {
    let started = Instant::now();
    let mut worst_gap = 0.0f64;
    for trial in 0..200u64 {
        let mut rng = trial_rng(101, trial);
        let (x, y) = if trial % 2 == 0 {
            (
                from_point_set(&random_point_set(&mut rng, 3, 0.0, 4.0)),
                from_point_set(&random_point_set(&mut rng, 3, 0.0, 4.0)),
            )
        } else {
            (
                random_chebyshev_space(&mut rng, 3),
                random_chebyshev_space(&mut rng, 3),
            )
        };
        let exact = gh_exact(&x, &y).unwrap().value;
        let brute = gh_bruteforce(&x, &y).unwrap().value;
        let gap = (exact - brute).abs();
        assert!(
            gap <= TOL,
            "trial {trial}: exact {exact} vs bruteforce {brute}"
        );
        worst_gap = worst_gap.max(gap);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "PASS oracle-equivalence: 200/200 pairs agree, worst |exact - bruteforce| = {worst_gap:.3e}, {elapsed:?}"
    );
}

fn sandwich_trial(trial: u64) -> (Point1DSet, Point1DSet) {
    let mut rng = trial_rng(202, trial);
    let x = random_point_set(&mut rng, 6, 0.0, 1.0);
    let y = random_point_set(&mut rng, 6, 0.0, 1.0);
    (x, y)
}

#[test]
fn acceptance_bilipschitz_sandwich() {
    let started = Instant::now();
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = 0.0f64;
    for trial in 0..200u64 {
        let (xs, ys) = sandwich_trial(trial);
        let gh = gh_exact(&from_point_set(&xs), &from_point_set(&ys))
            .unwrap()
            .value;
        let eh = eh_distance(&xs, &ys).value;
        assert!(
            0.8 * eh - TOL <= gh && gh <= eh + TOL,
            "trial {trial}: gh {gh}, eh {eh}"
        );
        if eh > TOL {
            let ratio = gh / eh;
            min_ratio = min_ratio.min(ratio);
            max_ratio = max_ratio.max(ratio);
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    assert!(min_ratio >= 0.8 - TOL && max_ratio <= 1.0 + TOL);
    println!(
        "PASS bilipschitz-sandwich: 200/200 trials, gh/eh ratio in [{min_ratio:.6}, {max_ratio:.6}], {elapsed:?}"
    );
}

#[test]
fn acceptance_distance_set_lower_bound() {
    let mut worst_slack = f64::INFINITY;
    for trial in 0..200u64 {
        let (xs, ys) = sandwich_trial(trial);
        let x = from_point_set(&xs);
        let y = from_point_set(&ys);
        let gh = gh_exact(&x, &y).unwrap().value;
        let lb = lower_bound_distance_set(x.network(), y.network());
        assert!(lb <= gh + TOL, "trial {trial}: bound {lb} above value {gh}");
        worst_slack = worst_slack.min(gh - lb);
    }
    println!(
        "PASS distance-set-lower-bound: 200/200 trials, smallest gh - bound = {worst_slack:.3e}"
    );
}

#[test]
fn acceptance_embedding_control_functions() {
    for (m, n) in [(1u64, 1u64), (1, 2), (2, 1), (2, 2)] {
        let block = BlockIndex::new(m, n).unwrap();
        let report = verify_control_functions(block, 100, 404).unwrap();
        assert!(
            report.is_clean(),
            "block ({m}, {n}): {:?}",
            report.violations
        );
        assert!(report.pairs_checked >= 100);
        let lo = report.min_ratio.unwrap();
        let hi = report.max_ratio.unwrap();
        assert!(lo >= 0.5 - TOL && hi <= 1.0 + TOL);
        println!(
            "PASS embedding-control ({m},{n}): {} pairs, eh/sup in [{lo:.6}, {hi:.6}], hausdorff = sup exactly",
            report.pairs_checked
        );
    }
}

#[test]
fn acceptance_block_separation() {
    // Exact integer inequality for every distinct pair of blocks with
    // ordinal at most 8.
    let blocks: Vec<BlockIndex> = (1..=8u64)
        .map(|k| BlockIndex::from_ordinal(k).unwrap())
        .collect();
    let mut pairs = 0;
    for a in &blocks {
        for b in &blocks {
            if a == b {
                continue;
            }
            let (hi, lo) = if a.ordinal() > b.ordinal() {
                (*a, *b)
            } else {
                (*b, *a)
            };
            let d_hi = separation_constant(hi).unwrap();
            let d_lo = separation_constant(lo).unwrap();
            let numerator = d_hi
                .checked_sub(d_lo + hi.m)
                .expect("separation numerator is positive");
            assert!(
                numerator >= 1u64 << hi.ordinal(),
                "blocks {a:?} vs {b:?}: {numerator} < 2^{}",
                hi.ordinal()
            );
            pairs += 1;
        }
    }
    assert_eq!(pairs, 8 * 7);

    // Sampled cross-block pairs confirmed by the exact solver.
    let samples = [
        ((1u64, 1u64), vec![0.0], (1u64, 2u64), vec![0.0, 0.0]),
        ((1, 2), vec![1.0, 0.5], (2, 1), vec![2.0]),
        ((2, 1), vec![0.25], (2, 2), vec![1.5, 0.75]),
    ];
    for (ba, ca, bb, cb) in samples {
        let block_a = BlockIndex::new(ba.0, ba.1).unwrap();
        let block_b = BlockIndex::new(bb.0, bb.1).unwrap();
        let img_a = embed(&CubePoint::new(block_a, ca).unwrap()).unwrap();
        let img_b = embed(&CubePoint::new(block_b, cb).unwrap()).unwrap();
        let bound = block_separation_lower_bound(block_a, block_b).unwrap();
        let eh = eh_distance(&img_a, &img_b).value;
        assert!(
            eh >= bound - TOL,
            "blocks {ba:?} vs {bb:?}: eh {eh} below bound {bound}"
        );
    }
    println!(
        "PASS block-separation: 56 ordered block pairs exact, 3 sampled pairs solver-confirmed"
    );
}

#[test]
fn acceptance_separation_anchor() {
    let d = separation_constant(BlockIndex::new(1, 1).unwrap()).unwrap();
    assert_eq!(d, 12);
    println!("PASS separation-anchor: D(1,1) = 12");
}

#[test]
fn acceptance_assouad_witness() {
    let started = Instant::now();
    for (alpha, c) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)] {
        let w = generate_witness(alpha, c, 1.0).unwrap();
        let s = w.offset;
        for (idx, a_i) in w.perturbed.iter().enumerate() {
            let dh = hausdorff(&w.base, a_i);
            assert!(
                (dh - s).abs() <= TOL,
                "alpha={alpha} C={c}: d_H(A, A_{}) = {dh}, want {s}",
                idx + 1
            );
        }
        for i in 0..w.perturbed.len() {
            for j in (i + 1)..w.perturbed.len() {
                let dh = hausdorff(&w.perturbed[i], &w.perturbed[j]);
                assert!((dh - 2.0 * s).abs() <= TOL);
                let eh = eh_distance(&w.perturbed[i], &w.perturbed[j]).value;
                assert!(
                    eh >= 2.0 * s - TOL,
                    "alpha={alpha} C={c}: eh(A_{}, A_{}) = {eh} below {}",
                    i + 1,
                    j + 1,
                    2.0 * s
                );
            }
        }
        assert!((w.count as f64) > c * 2f64.powf(alpha));
        println!(
            "PASS assouad-witness (alpha={alpha}, C={c}): M = {} > {}, offsets verified",
            w.count,
            c * 2f64.powf(alpha)
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

/// Random absorption fixture satisfying the hypotheses by construction:
/// dense clusters gapped above r, sparse clusters gapped above 5R.
fn absorption_fixture(trial: u64) -> (Vec<f64>, Vec<Member>, f64, Vec<Member>, f64, f64) {
    let mut rng = trial_rng(808, trial);
    let r = rng.gen_range(0.2..2.0);
    let dense_bound = r * rng.gen_range(1.0..3.0);
    let sparse_bound = dense_bound * rng.gen_range(1.0..3.0);
    let mut positions: Vec<f64> = Vec::new();
    let mut dense: Vec<Member> = Vec::new();
    let mut cursor = rng.gen_range(0.0..r);
    for _ in 0..rng.gen_range(1..5usize) {
        let width = rng.gen_range(0.0..dense_bound);
        let count = rng.gen_range(1..4usize);
        let mut member = Vec::new();
        for k in 0..count {
            member.push(positions.len());
            positions.push(cursor + width * k as f64 / count as f64);
        }
        dense.push(member);
        cursor += width + r + rng.gen_range(0.05 * r..2.0 * r);
    }
    let mut sparse: Vec<Member> = Vec::new();
    let mut s_cursor = rng.gen_range(0.0..10.0 * dense_bound);
    for _ in 0..rng.gen_range(1..3usize) {
        let width = rng.gen_range(0.0..sparse_bound);
        let count = rng.gen_range(1..3usize);
        let mut member = Vec::new();
        for k in 0..count {
            member.push(positions.len());
            positions.push(s_cursor + width * k as f64 / count as f64);
        }
        sparse.push(member);
        s_cursor += width + 5.0 * dense_bound + rng.gen_range(0.1..3.0) * dense_bound;
    }
    (positions, sparse, sparse_bound, dense, dense_bound, r)
}

#[test]
fn acceptance_cover_suite() {
    // Interval cover of 200 sampled pair elements at three radii.
    for &r in &[0.5f64, 1.0, 3.0] {
        let positions: Vec<f64> = (0..200)
            .map(|i| trial_rng(707, i as u64).gen_range(0.0..20.0 * r))
            .collect();
        let space = line_sample(&positions).unwrap();
        let cover = x1_cover(&space, r).unwrap();
        let report = verify_cover(&space, &cover);
        assert!(report.is_clean(), "r = {r}: {:?}", report.violations);
    }

    // Absorption on 100 hypothesis-satisfying random fixtures.
    for trial in 0..100u64 {
        let (positions, sparse, sparse_bound, dense, dense_bound, r) = absorption_fixture(trial);
        let space = line_sample(&positions).unwrap();
        let out = absorb_union(&space, &sparse, sparse_bound, &dense, dense_bound, r)
            .unwrap_or_else(|e| panic!("fixture {trial} rejected: {e}"));
        for (a, ma) in out.members.iter().enumerate() {
            assert!(space.member_diameter(ma) <= out.bound);
            for mb in &out.members[a + 1..] {
                assert!(space.set_distance(ma, mb) > r, "fixture {trial}");
            }
        }
    }

    // A fixture violating the sparse-disjointness hypothesis must be
    // rejected with that diagnostic.
    let space = line_sample(&[0.0, 1.0, 4.0]).unwrap();
    let err = absorb_union(&space, &[vec![1], vec![2]], 1.0, &[vec![0]], 1.0, 1.0).unwrap_err();
    match err {
        CoverError::HypothesisViolated {
            which:
                Hypothesis::SparseDisjointness {
                    member_a,
                    member_b,
                    distance,
                    required,
                },
        } => {
            assert_eq!((member_a, member_b), (0, 1));
            assert_eq!(distance, 3.0);
            assert_eq!(required, 5.0);
        }
        other => panic!("wrong diagnostic: {other:?}"),
    }

    println!("PASS cover-suite: x1 clean at r in {{0.5, 1, 3}}, 100 absorption fixtures clean, bad fixture rejected");
}

#[test]
fn acceptance_quantization_certificate() {
    let target = DistanceSet::from_values(vec![0.0, 1.0, 2.0, 3.5]);
    let cap = 0.6;
    let bound = quantization_image_bound(3);
    assert_eq!(bound.to_string(), "64");

    let nonzero = [1.0, 2.0, 3.5];
    let mut outputs: BTreeSet<Vec<u64>> = BTreeSet::new();
    for trial in 0..100u64 {
        let mut rng = trial_rng(909, trial);
        let mut targets = nonzero;
        targets.shuffle(&mut rng);
        let e: Vec<f64> = targets
            .iter()
            .map(|t| t + rng.gen_range(-0.55..0.55))
            .collect();
        let y = PseudoSemiMetricNetwork::new(
            Network::new(vec![
                vec![0.0, e[0], e[1]],
                vec![e[0], 0.0, e[2]],
                vec![e[1], e[2], 0.0],
            ])
            .unwrap(),
        )
        .unwrap();
        let q =
            quantize_network(&y, &target, cap).unwrap_or_else(|err| panic!("trial {trial}: {err}"));
        assert!(distance_set(q.network()).is_subset_of(&target));
        let d = network_distance(y.network(), q.network()).unwrap();
        assert!(d.value <= cap + TOL, "trial {trial}: {} > {cap}", d.value);
        outputs.insert(
            q.network()
                .matrix()
                .iter()
                .flatten()
                .map(|v| v.to_bits())
                .collect(),
        );
    }
    assert!(outputs.len() as u64 <= 64);
    println!(
        "PASS quantization-certificate: 100 networks, {} distinct images <= 64, network distance <= cap",
        outputs.len()
    );
}

#[test]
fn acceptance_kuratowski_isometry() {
    for trial in 0..100u64 {
        let mut rng = trial_rng(0xc1ab, trial);
        let space = if trial % 2 == 0 {
            random_chebyshev_space(&mut rng, 6)
        } else {
            from_point_set(&random_dyadic_point_set(&mut rng, 6))
        };
        let emb = kuratowski_embed(&space);
        let side = emb.cube_side as f64;
        for i in 0..space.len() {
            for j in 0..space.len() {
                assert_eq!(
                    sup_distance(&emb.vectors[i], &emb.vectors[j]),
                    space.distance(i, j),
                    "trial {trial}: sup distance differs at ({i}, {j})"
                );
            }
            assert!(emb.vectors[i].iter().all(|c| *c >= 0.0 && *c <= side));
        }
    }
    println!("PASS kuratowski-isometry: 100 spaces embedded exactly (equality, no tolerance)");
}

// The control-function sampler is exercised above through
// verify_control_functions; this spot check pins the documented
// trade-off example: a unit coordinate shift in block (1,1) aligns at
// exactly half its cube distance.
#[test]
fn acceptance_embedding_spot_values() {
    let block = BlockIndex::new(1, 1).unwrap();
    let a = embed(&CubePoint::new(block, vec![0.0]).unwrap()).unwrap();
    let b = embed(&CubePoint::new(block, vec![1.0]).unwrap()).unwrap();
    assert_eq!(a.as_slice(), &[0.0, 12.0]);
    assert_eq!(hausdorff(&a, &b), 1.0);
    let eh = eh_distance(&a, &b).value;
    assert!((eh - 0.5).abs() <= TOL);

    let mut rng = trial_rng(42, 0);
    let p = sample_cube_point(BlockIndex::new(2, 2).unwrap(), &mut rng);
    let img = embed(&p).unwrap();
    let d = separation_constant(BlockIndex::new(2, 2).unwrap()).unwrap() as f64;
    assert!(img.diameter() >= d - 2.0 && img.diameter() <= d);
    println!("PASS embedding-spot-values: trade-off pair and diameter window confirmed");
}
