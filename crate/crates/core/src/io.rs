//! Shared JSON file formats and the number-preserving JSON emitter.
//!
//! Point sets are `{"points": [...]}`; metric spaces are
//! `{"n": k, "matrix": [[...], ...]}`; samples of point sets are
//! `{"elements": [[...], ...]}`; covers serialize as
//! `{"r": ..., "bound": ..., "classes": [[[idx, ...], ...], ...]}`.
//! All numbers are IEEE-754 doubles in decimal text.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covers::{CoverError, CoverFamily, SampledSpace};
use crate::metric::{validate_metric, FiniteMetricSpace, MetricError, Network, Point1DSet};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: declared n = {n} but matrix has {rows} rows")]
    SizeMismatch { path: String, n: usize, rows: usize },
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSetFile {
    pub points: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricSpaceFile {
    pub n: usize,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleFile {
    pub elements: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum SpaceInput {
    Points(PointSetFile),
    Matrix(MetricSpaceFile),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// Loads a point-set file.
pub fn load_point_set(path: &Path) -> Result<Point1DSet, IoError> {
    let file: PointSetFile = read_json(path)?;
    Ok(Point1DSet::new(file.points)?)
}

/// Loads a metric space from either input format: a point set is
/// realized on the line, a matrix is validated against the axioms.
pub fn load_space(path: &Path) -> Result<FiniteMetricSpace, IoError> {
    let input: SpaceInput = read_json(path)?;
    match input {
        SpaceInput::Points(f) => {
            let p = Point1DSet::new(f.points)?;
            Ok(crate::metric::from_point_set(&p))
        }
        SpaceInput::Matrix(f) => {
            if f.n != f.matrix.len() {
                return Err(IoError::SizeMismatch {
                    path: path.display().to_string(),
                    n: f.n,
                    rows: f.matrix.len(),
                });
            }
            let net = Network::new(f.matrix)?;
            Ok(validate_metric(&net)?)
        }
    }
}

/// Loads a sample of point sets.
pub fn load_sample(path: &Path) -> Result<SampledSpace, IoError> {
    let file: SampleFile = read_json(path)?;
    let elements = file
        .elements
        .into_iter()
        .map(Point1DSet::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SampledSpace::new(elements)?)
}

/// Loads a serialized cover.
pub fn load_cover(path: &Path) -> Result<CoverFamily, IoError> {
    read_json(path)
}

/// Writes a value as 17-significant-digit JSON.
pub fn write_json_17<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    std::fs::write(path, to_json_17(value) + "\n").map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

/// JSON formatter that renders every double with 17 significant digits,
/// enough for exact round trips; output is byte-deterministic.
struct Digits17;

impl serde_json::ser::Formatter for Digits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes with the 17-significant-digit float format.
pub fn to_json_17<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}
