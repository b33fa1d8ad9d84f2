//! JSON and CSV readers and writers for the core data types.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use qesosc_core::oracle::{OracleResult, Tabulated};
use qesosc_core::{EnergyTable, EvenPolynomialPotential};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{}: {source}", path.display())]
    Invalid {
        path: PathBuf,
        #[source]
        source: qesosc_core::Error,
    },
    #[error("{}: line {line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    write_text(path, &to_json(value))
}

/// Reads `{"v_min": .., "coeffs": {"2": .., "4": ..}, "truncation_order": ..}`.
pub fn read_potential(path: &Path) -> Result<EvenPolynomialPotential> {
    let text = read(path)?;
    let pot: EvenPolynomialPotential =
        serde_json::from_str(&text).map_err(|source| FormatError::Json {
            path: path.to_owned(),
            source,
        })?;
    pot.validate().map_err(|source| FormatError::Invalid {
        path: path.to_owned(),
        source,
    })?;
    Ok(pot)
}

fn csv_string<R: Serialize>(rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

/// `index,parity,energy,provenance`.
pub fn energy_table_csv(table: &EnergyTable) -> String {
    csv_string(&table.rows)
}

#[derive(Serialize)]
struct OracleRow {
    index: usize,
    energy: f64,
    parity: qesosc_core::Parity,
    convergence_estimate: f64,
    converged: bool,
    tail_mass: f64,
}

pub fn oracle_csv(result: &OracleResult) -> String {
    csv_string((0..result.energies.len()).map(|i| OracleRow {
        index: i,
        energy: result.energies[i],
        parity: result.parities[i],
        convergence_estimate: result.convergence_estimate[i],
        converged: result.converged[i],
        tail_mass: result.tail_mass[i],
    }))
}

/// Two-column series with a header, for external plotting.
pub fn series_csv(columns: (&str, &str), points: impl IntoIterator<Item = (f64, f64)>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([columns.0, columns.1])
        .expect("in-memory csv");
    for (x, y) in points {
        w.write_record([x.to_string(), y.to_string()])
            .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

/// Reads `x,V` rows. Lines starting with `#` are skipped and a non-numeric
/// first row is taken as a header.
pub fn read_tabulated(path: &Path) -> Result<Tabulated> {
    let text = read(path)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let (mut xs, mut vs) = (Vec::new(), Vec::new());
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|source| FormatError::Csv {
            path: path.to_owned(),
            source,
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(FormatError::Parse {
                path: path.to_owned(),
                line,
                message: format!("expected 2 columns, found {}", record.len()),
            });
        }
        match (record[0].parse::<f64>(), record[1].parse::<f64>()) {
            (Ok(x), Ok(v)) => {
                xs.push(x);
                vs.push(v);
            }
            _ if i == 0 => continue,
            _ => {
                return Err(FormatError::Parse {
                    path: path.to_owned(),
                    line,
                    message: "non-numeric value".into(),
                })
            }
        }
    }
    Tabulated::new(xs, vs).map_err(|source| FormatError::Invalid {
        path: path.to_owned(),
        source,
    })
}
