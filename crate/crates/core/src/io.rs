//! JSON and CSV forms of series.
//!
//! JSON: `{"order": N, "coeffs": [["re", "im"], ...]}` with each part written
//! as `"p/q"` (or `"p"` for integers). CSV: header `n,re,im`, one row per
//! coefficient.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::QError;
use crate::qcore::{format_rational, parse_rational, GaussRational};
use crate::series::PowerSeries;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Value(#[from] QError),
    #[error("{0}")]
    Invalid(String),
}

/// Wire form of a series.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub order: i64,
    pub coeffs: Vec<[String; 2]>,
}

fn gauss_to_pair(c: &GaussRational) -> [String; 2] {
    [format_rational(&c.re), format_rational(&c.im)]
}

fn pair_to_gauss(re: &str, im: &str) -> Result<GaussRational, QError> {
    Ok(GaussRational::new(parse_rational(re)?, parse_rational(im)?))
}

impl From<&PowerSeries> for SeriesDoc {
    fn from(s: &PowerSeries) -> Self {
        Self {
            order: s.order() as i64,
            coeffs: s.coeffs().iter().map(gauss_to_pair).collect(),
        }
    }
}

impl TryFrom<SeriesDoc> for PowerSeries {
    type Error = QError;

    fn try_from(doc: SeriesDoc) -> Result<Self, QError> {
        let coeffs = doc
            .coeffs
            .iter()
            .map(|[re, im]| pair_to_gauss(re, im))
            .collect::<Result<Vec<_>, _>>()?;
        PowerSeries::with_signed_order(coeffs, doc.order)
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = SeriesDoc::deserialize(deserializer)?;
        PowerSeries::try_from(doc).map_err(serde::de::Error::custom)
    }
}

pub fn series_to_json(s: &PowerSeries) -> String {
    serde_json::to_string_pretty(s).expect("series always serializes")
}

pub fn series_from_json(text: &str) -> Result<PowerSeries, FormatError> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    re: String,
    im: String,
}

pub fn write_series_csv<W: Write>(s: &PowerSeries, out: W) -> Result<(), FormatError> {
    let mut w = csv::Writer::from_writer(out);
    for (n, c) in s.coeffs().iter().enumerate() {
        let [re, im] = gauss_to_pair(c);
        w.serialize(CsvRow { n, re, im })?;
    }
    w.flush()?;
    Ok(())
}

/// Reads rows `n,re,im`; indices must run `0, 1, ..., N` in order.
pub fn read_series_csv<R: Read>(input: R) -> Result<PowerSeries, FormatError> {
    let mut r = csv::Reader::from_reader(input);
    let mut coeffs = Vec::new();
    for row in r.deserialize() {
        let row: CsvRow = row?;
        if row.n != coeffs.len() {
            return Err(FormatError::Invalid(format!(
                "expected coefficient index {}, found {}",
                coeffs.len(),
                row.n
            )));
        }
        coeffs.push(pair_to_gauss(&row.re, &row.im)?);
    }
    if coeffs.is_empty() {
        return Err(FormatError::Invalid("series CSV has no rows".into()));
    }
    let order = coeffs.len() - 1;
    Ok(PowerSeries::new(coeffs, order)?)
}
