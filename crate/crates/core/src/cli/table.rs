//! CSV / JSON emission of comparison tables.
//!
//! CSV is UTF-8 with `\n` line endings, a header row and floats in shortest
//! round-trip form; absent values are empty cells. JSON is an array of
//! objects with the same field names and `null` for absent values.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{ComparisonRow, CriticalRow};
use crate::error::{Error, Result};
use crate::model::{Method, PotentialKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::domain(format!("unknown output format '{other}'"))),
        }
    }
}

/// One `(state, method)` line of an energy table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyRecord {
    pub potential: PotentialKind,
    pub xi: f64,
    pub n: u32,
    pub l: u32,
    pub method: Method,
    pub energy: Option<f64>,
    pub ref_energy: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
}

/// One `(l, method)` line of a critical-coupling table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalRecord {
    pub potential: PotentialKind,
    pub n: u32,
    pub l: u32,
    pub method: Method,
    pub xi_crit: Option<f64>,
    pub ref_xi_crit: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
}

fn errors(value: Option<f64>, reference: Option<f64>) -> (Option<f64>, Option<f64>) {
    match (value, reference) {
        (Some(v), Some(r)) => {
            let abs = (v - r).abs();
            (Some(abs), (r != 0.0).then(|| abs / r.abs()))
        }
        _ => (None, None),
    }
}

/// Expands comparison rows into per-method records, in the order Köksal,
/// variational, reference. Methods that do not apply are skipped.
pub fn energy_records(rows: &[ComparisonRow], methods: &[Method]) -> Vec<EnergyRecord> {
    let mut out = Vec::new();
    for row in rows {
        for &method in methods {
            let value = match method {
                Method::Koksal if row.kind == PotentialKind::Yukawa => continue,
                Method::Variational if row.n != 0 => continue,
                Method::Koksal => row.e_koksal,
                Method::Variational => row.e_variational,
                Method::Reference => row.e_reference,
                Method::HarmonicZeroth => continue,
            };
            let (abs_err, rel_err) = errors(value, row.e_reference);
            out.push(EnergyRecord {
                potential: row.kind,
                xi: row.xi,
                n: row.n,
                l: row.l,
                method,
                energy: value,
                ref_energy: row.e_reference,
                abs_err,
                rel_err,
            });
        }
    }
    out
}

pub fn critical_records(rows: &[CriticalRow], methods: &[Method]) -> Vec<CriticalRecord> {
    let mut out = Vec::new();
    for row in rows {
        for &method in methods {
            let value = match method {
                Method::Koksal => match row.xi_koksal {
                    Some(x) => Some(x),
                    None => continue,
                },
                Method::Variational => Some(row.xi_variational),
                Method::Reference => Some(row.xi_reference),
                Method::HarmonicZeroth => continue,
            };
            let (abs_err, rel_err) = errors(value, Some(row.xi_reference));
            out.push(CriticalRecord {
                potential: row.kind,
                n: 0,
                l: row.l,
                method,
                xi_crit: value,
                ref_xi_crit: Some(row.xi_reference),
                abs_err,
                rel_err,
            });
        }
    }
    out
}

/// Writes `rows` to `writer`. `preamble` lines are emitted first, each
/// prefixed with `# ` (CSV only; JSON has no comment syntax).
pub fn write_table<T: Serialize, W: Write>(
    rows: &[T],
    format: OutputFormat,
    preamble: &[String],
    mut writer: W,
) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::domain("refusing to write an empty table"));
    }
    match format {
        OutputFormat::Csv => {
            for line in preamble {
                writeln!(writer, "# {line}")?;
            }
            let mut csv = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut writer);
            for row in rows {
                csv.serialize(row)?;
            }
            csv.flush()?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut writer, rows)?;
            writeln!(writer)?;
        }
    }
    writer.flush()?;
    Ok(())
}

/// Writes `rows` to `path` without a preamble.
pub fn emit_table<T: Serialize>(rows: &[T], format: OutputFormat, path: &Path) -> Result<()> {
    emit_table_with_preamble(rows, format, &[], path)
}

pub fn emit_table_with_preamble<T: Serialize>(
    rows: &[T],
    format: OutputFormat,
    preamble: &[String],
    path: &Path,
) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::domain("refusing to write an empty table"));
    }
    let file = File::create(path)?;
    write_table(rows, format, preamble, BufWriter::new(file))
}

/// Reads a CSV table written by [`write_table`], skipping `#` lines.
pub fn read_csv<T: for<'de> Deserialize<'de>>(data: &str) -> Result<Vec<T>> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(data.as_bytes());
    rdr.deserialize().map(|r| r.map_err(Error::from)).collect()
}
