//! Deterministic randomness for the verification suites.
//!
//! All randomized suites draw from ChaCha8, a named, portable generator,
//! with one stream per trial: `trial_rng(seed, i)` reproduces trial `i`
//! in isolation regardless of how many trials run or in which order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::metric::Point1DSet;

/// The generator for trial `trial` of a suite seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws a point set with 1..=max_points points uniform in [lo, hi],
/// rejecting points that land within 1e-6 of an already drawn one so the
/// strictly-increasing invariant holds with room to spare.
pub fn random_point_set(rng: &mut ChaCha8Rng, max_points: usize, lo: f64, hi: f64) -> Point1DSet {
    let n = rng.gen_range(1..=max_points);
    let mut pts: Vec<f64> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = rng.gen_range(lo..hi);
        if pts.iter().all(|q| (q - p).abs() > 1e-6) {
            pts.push(p);
        }
    }
    Point1DSet::new(pts).expect("separated points form a valid set")
}
