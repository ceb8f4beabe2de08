//! Point-set and matrix CSV files.
//!
//! Point files carry a header `id,x1,...,xd` and one point per row, ids
//! `0..n` in order. Matrix files are `n` headerless rows of `n` non-negative
//! reals; the diagonal is ignored and symmetry is enforced on load.

use std::io::{Read, Write};
use std::path::Path;

use super::MetricInstance;
use crate::error::{Error, Result};

pub fn read_points<R: Read>(reader: R) -> Result<MetricInstance> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.get(0) != Some("id") || headers.len() < 2 {
        return Err(Error::Parse("point file header must be `id,x1,...,xd`".into()));
    }
    let dim = headers.len() - 1;
    let mut coords = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let record = record?;
        let id: usize = parse_field(&record, 0, row)?;
        if id != row {
            return Err(Error::Parse(format!(
                "row {row} has id {id}; ids must be 0..n in order"
            )));
        }
        for col in 1..=dim {
            coords.push(parse_field::<f64>(&record, col, row)?);
        }
    }
    MetricInstance::euclidean_flat(dim, coords)
}

pub fn read_points_file(path: impl AsRef<Path>) -> Result<MetricInstance> {
    read_points(std::fs::File::open(path)?)
}

pub fn write_points<W: Write>(writer: W, points: &[Vec<f64>]) -> Result<()> {
    let dim = points.first().map_or(0, Vec::len);
    let mut wtr = csv::Writer::from_writer(writer);
    let mut header = vec!["id".to_string()];
    header.extend((1..=dim).map(|i| format!("x{i}")));
    wtr.write_record(&header)?;
    for (id, p) in points.iter().enumerate() {
        let mut row = vec![id.to_string()];
        row.extend(p.iter().map(|x| x.to_string()));
        wtr.write_record(&row)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn read_matrix<R: Read>(reader: R, lambda: f64) -> Result<MetricInstance> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let record = record?;
        let values = (0..record.len())
            .map(|col| parse_field::<f64>(&record, col, row))
            .collect::<Result<Vec<_>>>()?;
        rows.push(values);
    }
    MetricInstance::from_matrix(&rows, lambda)
}

pub fn read_matrix_file(path: impl AsRef<Path>, lambda: f64) -> Result<MetricInstance> {
    read_matrix(std::fs::File::open(path)?, lambda)
}

fn parse_field<T: std::str::FromStr>(record: &csv::StringRecord, col: usize, row: usize) -> Result<T> {
    let raw = record
        .get(col)
        .ok_or_else(|| Error::Parse(format!("row {row} is missing column {col}")))?;
    raw.parse()
        .map_err(|_| Error::Parse(format!("row {row}, column {col}: cannot parse `{raw}`")))
}
