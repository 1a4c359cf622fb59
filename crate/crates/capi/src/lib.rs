//! C ABI for the metric-geometry toolkit: opaque handles over the core
//! types, status codes instead of Results, and a cbindgen-generated
//! header in `include/ghkit.h`.
//!
//! Ownership rules: every `*_new`/constructor output must be released
//! with the matching `*_free`; all other pointers are borrowed. No
//! function stores the pointers it receives.

use std::os::raw::c_char;

use ghkit::gromov::{gh_exact_with_guard, GhError, GhResult};
use ghkit::hausdorff1d::{eh_distance, hausdorff};
use ghkit::metric::{from_point_set, validate_metric, FiniteMetricSpace, Network, Point1DSet};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    AxiomViolation = 3,
    SizeGuardExceeded = 4,
    OverflowGuard = 5,
    IndexOutOfRange = 6,
}

/// A finite subset of the real line (opaque).
pub struct GhkPointSet(Point1DSet);

/// A validated finite metric space (opaque).
pub struct GhkMetricSpace(FiniteMetricSpace);

/// Result of an exact Gromov-Hausdorff computation (opaque).
pub struct GhkGhResult(GhResult);

/// An optimal line isometry: apply `x -> -x` first when `reflect` is
/// nonzero, then translate by `shift`; `value` is the Hausdorff distance
/// achieved.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct GhkAlignment {
    pub value: f64,
    pub shift: f64,
    pub reflect: i32,
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn ghk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds a point set from `len` values. The values need not be sorted;
/// duplicates and non-finite values are rejected with
/// `InvalidArgument`.
///
/// # Safety
/// `values` must point to `len` readable doubles and `out` must be a
/// valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn ghk_point_set_new(
    values: *const f64,
    len: usize,
    out: *mut *mut GhkPointSet,
) -> GhkStatus {
    if values.is_null() || out.is_null() {
        return GhkStatus::NullArgument;
    }
    let slice = std::slice::from_raw_parts(values, len);
    match Point1DSet::new(slice.to_vec()) {
        Ok(ps) => {
            *out = Box::into_raw(Box::new(GhkPointSet(ps)));
            GhkStatus::Ok
        }
        Err(_) => GhkStatus::InvalidArgument,
    }
}

/// # Safety
/// `ps` must be null or a pointer returned by `ghk_point_set_new`.
#[no_mangle]
pub unsafe extern "C" fn ghk_point_set_free(ps: *mut GhkPointSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

/// Number of points in the set; 0 for a null handle.
///
/// # Safety
/// `ps` must be null or a live point-set handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_point_set_len(ps: *const GhkPointSet) -> usize {
    ps.as_ref().map_or(0, |p| p.0.len())
}

/// Validates a row-major `n x n` matrix as a finite metric space.
/// Returns `AxiomViolation` when an axiom fails beyond tolerance.
///
/// # Safety
/// `entries` must point to `n * n` readable doubles and `out` must be a
/// valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn ghk_metric_space_from_matrix(
    entries: *const f64,
    n: usize,
    out: *mut *mut GhkMetricSpace,
) -> GhkStatus {
    if entries.is_null() || out.is_null() {
        return GhkStatus::NullArgument;
    }
    if n == 0 {
        return GhkStatus::InvalidArgument;
    }
    let flat = std::slice::from_raw_parts(entries, n * n);
    let rows: Vec<Vec<f64>> = flat.chunks(n).map(|c| c.to_vec()).collect();
    let net = match Network::new(rows) {
        Ok(net) => net,
        Err(_) => return GhkStatus::InvalidArgument,
    };
    match validate_metric(&net) {
        Ok(space) => {
            *out = Box::into_raw(Box::new(GhkMetricSpace(space)));
            GhkStatus::Ok
        }
        Err(_) => GhkStatus::AxiomViolation,
    }
}

/// Realizes a point set on the line as a metric space.
///
/// # Safety
/// `ps` must be a live point-set handle and `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn ghk_metric_space_from_points(
    ps: *const GhkPointSet,
    out: *mut *mut GhkMetricSpace,
) -> GhkStatus {
    let (Some(ps), false) = (ps.as_ref(), out.is_null()) else {
        return GhkStatus::NullArgument;
    };
    *out = Box::into_raw(Box::new(GhkMetricSpace(from_point_set(&ps.0))));
    GhkStatus::Ok
}

/// # Safety
/// `space` must be null or a live metric-space handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_metric_space_free(space: *mut GhkMetricSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points; 0 for a null handle.
///
/// # Safety
/// `space` must be null or a live metric-space handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_metric_space_size(space: *const GhkMetricSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.len())
}

/// Hausdorff distance between two point sets.
///
/// # Safety
/// `x` and `y` must be live point-set handles, `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn ghk_hausdorff(
    x: *const GhkPointSet,
    y: *const GhkPointSet,
    out: *mut f64,
) -> GhkStatus {
    let (Some(x), Some(y)) = (x.as_ref(), y.as_ref()) else {
        return GhkStatus::NullArgument;
    };
    if out.is_null() {
        return GhkStatus::NullArgument;
    }
    *out = hausdorff(&x.0, &y.0);
    GhkStatus::Ok
}

/// Exact Euclidean-Hausdorff distance: the optimal alignment of `y`
/// against `x` over all isometries of the line.
///
/// # Safety
/// `x` and `y` must be live point-set handles, `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn ghk_eh_distance(
    x: *const GhkPointSet,
    y: *const GhkPointSet,
    out: *mut GhkAlignment,
) -> GhkStatus {
    let (Some(x), Some(y)) = (x.as_ref(), y.as_ref()) else {
        return GhkStatus::NullArgument;
    };
    if out.is_null() {
        return GhkStatus::NullArgument;
    }
    let a = eh_distance(&x.0, &y.0);
    *out = GhkAlignment {
        value: a.value,
        shift: a.shift,
        reflect: a.reflect as i32,
    };
    GhkStatus::Ok
}

/// Exact Gromov-Hausdorff distance. `guard` caps the per-space size of
/// the branch-and-bound search (8 is the library default); larger
/// inputs return `SizeGuardExceeded`.
///
/// # Safety
/// `x` and `y` must be live metric-space handles, `out` a valid
/// destination pointer.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_exact(
    x: *const GhkMetricSpace,
    y: *const GhkMetricSpace,
    guard: usize,
    out: *mut *mut GhkGhResult,
) -> GhkStatus {
    let (Some(x), Some(y)) = (x.as_ref(), y.as_ref()) else {
        return GhkStatus::NullArgument;
    };
    if out.is_null() {
        return GhkStatus::NullArgument;
    }
    match gh_exact_with_guard(&x.0, &y.0, guard) {
        Ok(result) => {
            *out = Box::into_raw(Box::new(GhkGhResult(result)));
            GhkStatus::Ok
        }
        Err(GhError::SizeGuardExceeded { .. }) => GhkStatus::SizeGuardExceeded,
        Err(_) => GhkStatus::InvalidArgument,
    }
}

/// # Safety
/// `result` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_free(result: *mut GhkGhResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// The distance value; NaN for a null handle.
///
/// # Safety
/// `result` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_value(result: *const GhkGhResult) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.value)
}

/// Lower bound from the distance-set invariant.
///
/// # Safety
/// `result` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_lower_bound_distance_set(result: *const GhkGhResult) -> f64 {
    result
        .as_ref()
        .map_or(f64::NAN, |r| r.0.lower_bounds.distance_set)
}

/// Lower bound from the diameter gap.
///
/// # Safety
/// `result` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_lower_bound_diameter(result: *const GhkGhResult) -> f64 {
    result
        .as_ref()
        .map_or(f64::NAN, |r| r.0.lower_bounds.diameter)
}

/// Number of pairs in the witness correspondence.
///
/// # Safety
/// `result` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_witness_len(result: *const GhkGhResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.witness.pairs().len())
}

/// Fetches witness pair `index` into `(i_out, j_out)`.
///
/// # Safety
/// `result` must be a live result handle and the out parameters valid
/// destinations.
#[no_mangle]
pub unsafe extern "C" fn ghk_gh_result_witness_pair(
    result: *const GhkGhResult,
    index: usize,
    i_out: *mut usize,
    j_out: *mut usize,
) -> GhkStatus {
    let Some(r) = result.as_ref() else {
        return GhkStatus::NullArgument;
    };
    if i_out.is_null() || j_out.is_null() {
        return GhkStatus::NullArgument;
    }
    match r.0.witness.pairs().get(index) {
        Some(&(i, j)) => {
            *i_out = i;
            *j_out = j;
            GhkStatus::Ok
        }
        None => GhkStatus::IndexOutOfRange,
    }
}

/// Ordinal of the cube block `(m, n)` in the diagonal enumeration;
/// `InvalidArgument` when either side is zero.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn ghk_block_ordinal(m: u64, n: u64, out: *mut u64) -> GhkStatus {
    if out.is_null() {
        return GhkStatus::NullArgument;
    }
    match ghkit::embeddings::BlockIndex::new(m, n) {
        Ok(b) => {
            *out = b.ordinal();
            GhkStatus::Ok
        }
        Err(_) => GhkStatus::InvalidArgument,
    }
}

/// Inverse of `ghk_block_ordinal`.
///
/// # Safety
/// `m_out` and `n_out` must be valid destination pointers.
#[no_mangle]
pub unsafe extern "C" fn ghk_block_from_ordinal(
    k: u64,
    m_out: *mut u64,
    n_out: *mut u64,
) -> GhkStatus {
    if m_out.is_null() || n_out.is_null() {
        return GhkStatus::NullArgument;
    }
    match ghkit::embeddings::BlockIndex::from_ordinal(k) {
        Ok(b) => {
            *m_out = b.m;
            *n_out = b.n;
            GhkStatus::Ok
        }
        Err(_) => GhkStatus::InvalidArgument,
    }
}

/// The separation constant of block `(m, n)`; `OverflowGuard` when the
/// ordinal exceeds the 64-bit recursion guard.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn ghk_separation_constant(m: u64, n: u64, out: *mut u64) -> GhkStatus {
    if out.is_null() {
        return GhkStatus::NullArgument;
    }
    let block = match ghkit::embeddings::BlockIndex::new(m, n) {
        Ok(b) => b,
        Err(_) => return GhkStatus::InvalidArgument,
    };
    match ghkit::embeddings::separation_constant(block) {
        Ok(d) => {
            *out = d;
            GhkStatus::Ok
        }
        Err(ghkit::embeddings::EmbedError::OverflowGuard { .. }) => GhkStatus::OverflowGuard,
        Err(_) => GhkStatus::InvalidArgument,
    }
}
