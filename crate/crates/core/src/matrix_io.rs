//! Matrix file formats.
//!
//! Two interchangeable on-disk formats:
//!
//! * CSV: one row per line, no header, `.` decimal separator.
//! * Binary: magic bytes `SLRM`, two little-endian `u64` values
//!   (rows, cols), then row-major little-endian `f64` entries.
//!
//! Both readers reject dimension overflow and non-finite entries. Entries
//! are stored as `f64` regardless of the in-memory scalar type.

use crate::error::{Result, SlrError};
use crate::scalar::Scalar;
use ndarray::{Array1, Array2};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

const MAGIC: &[u8; 4] = b"SLRM";

/// Hard cap on the number of entries a reader will accept (1 GiB of f64).
const MAX_ENTRIES: u64 = 1 << 27;

fn malformed(path: &Path, reason: impl Into<String>) -> SlrError {
    SlrError::MalformedFile {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

fn checked_shape(path: &Path, rows: u64, cols: u64) -> Result<(usize, usize)> {
    let entries = rows
        .checked_mul(cols)
        .ok_or_else(|| malformed(path, "rows * cols overflows"))?;
    if entries > MAX_ENTRIES {
        return Err(malformed(
            path,
            format!("{entries} entries exceed the reader cap of {MAX_ENTRIES}"),
        ));
    }
    let r = usize::try_from(rows).map_err(|_| malformed(path, "row count overflows usize"))?;
    let c = usize::try_from(cols).map_err(|_| malformed(path, "col count overflows usize"))?;
    Ok((r, c))
}

/// Write a matrix in the binary format.
pub fn write_binary<S: Scalar>(path: &Path, matrix: &Array2<S>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = BufWriter::new(file);
    w.write_all(MAGIC)?;
    w.write_all(&(matrix.nrows() as u64).to_le_bytes())?;
    w.write_all(&(matrix.ncols() as u64).to_le_bytes())?;
    for &v in matrix.iter() {
        w.write_all(&v.as_f64().to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Read a matrix in the binary format.
pub fn read_binary<S: Scalar>(path: &Path) -> Result<Array2<S>> {
    let file = std::fs::File::open(path)?;
    let mut r = BufReader::new(file);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(malformed(path, "bad magic bytes"));
    }
    let mut buf8 = [0u8; 8];
    r.read_exact(&mut buf8)?;
    let rows = u64::from_le_bytes(buf8);
    r.read_exact(&mut buf8)?;
    let cols = u64::from_le_bytes(buf8);
    let (rows, cols) = checked_shape(path, rows, cols)?;

    let mut data = Vec::with_capacity(rows * cols);
    for idx in 0..rows * cols {
        r.read_exact(&mut buf8)
            .map_err(|_| malformed(path, format!("truncated at entry {idx}")))?;
        let v = f64::from_le_bytes(buf8);
        if !v.is_finite() {
            return Err(malformed(path, format!("non-finite entry at index {idx}")));
        }
        data.push(S::from_f64(v));
    }
    // Reject trailing garbage.
    let mut probe = [0u8; 1];
    if r.read(&mut probe)? != 0 {
        return Err(malformed(path, "trailing bytes after matrix data"));
    }
    Array2::from_shape_vec((rows, cols), data)
        .map_err(|e| malformed(path, format!("shape error: {e}")))
}

/// Write a matrix as CSV (no header, `.` decimal).
pub fn write_csv<S: Scalar>(path: &Path, matrix: &Array2<S>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = BufWriter::new(file);
    for row in matrix.rows() {
        let mut first = true;
        for &v in row.iter() {
            if !first {
                write!(w, ",")?;
            }
            first = false;
            // RFC-compliant shortest round-trip formatting.
            write!(w, "{}", v.as_f64())?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

/// Read a CSV matrix (no header, `.` decimal). All rows must have the same
/// number of fields.
pub fn read_csv<S: Scalar>(path: &Path) -> Result<Array2<S>> {
    let file = std::fs::File::open(path)?;
    let reader = BufReader::new(file);
    let mut data: Vec<S> = Vec::new();
    let mut cols: Option<usize> = None;
    let mut rows = 0usize;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        match cols {
            None => cols = Some(fields.len()),
            Some(c) if c != fields.len() => {
                return Err(malformed(
                    path,
                    format!("line {} has {} fields, expected {c}", lineno + 1, fields.len()),
                ));
            }
            _ => {}
        }
        if (rows as u64 + 1).checked_mul(cols.unwrap() as u64).is_none_or(|n| n > MAX_ENTRIES) {
            return Err(malformed(path, "matrix exceeds the reader cap"));
        }
        for f in &fields {
            let v: f64 = f.trim().parse().map_err(|e| {
                malformed(path, format!("line {}: bad number {f:?}: {e}", lineno + 1))
            })?;
            if !v.is_finite() {
                return Err(malformed(path, format!("line {}: non-finite entry", lineno + 1)));
            }
            data.push(S::from_f64(v));
        }
        rows += 1;
    }
    let cols = cols.unwrap_or(0);
    Array2::from_shape_vec((rows, cols), data)
        .map_err(|e| malformed(path, format!("shape error: {e}")))
}

/// Write a vector as a single-column binary matrix.
pub fn write_vector<S: Scalar>(path: &Path, v: &Array1<S>) -> Result<()> {
    let m = v.view().insert_axis(ndarray::Axis(1)).to_owned();
    write_binary(path, &m)
}

/// Read a vector stored as a single-column (or single-row) matrix.
pub fn read_vector<S: Scalar>(path: &Path) -> Result<Array1<S>> {
    let m = read_binary::<S>(path)?;
    if m.ncols() == 1 || m.nrows() == 1 || m.is_empty() {
        Ok(Array1::from_iter(m.iter().copied()))
    } else {
        Err(malformed(path, "expected a vector-shaped matrix"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn tmpdir() -> std::path::PathBuf {
        let d = std::env::temp_dir().join(format!("slrm-io-{}", std::process::id()));
        std::fs::create_dir_all(&d).unwrap();
        d
    }

    #[test]
    fn binary_roundtrip() {
        let p = tmpdir().join("rt.slrm");
        let m = array![[1.5_f64, -2.25, 0.0], [1e-300, 3.0, -0.5]];
        write_binary(&p, &m).unwrap();
        let back: Array2<f64> = read_binary(&p).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn csv_roundtrip() {
        let p = tmpdir().join("rt.csv");
        let m = array![[0.1_f64, 2.0], [-3.5, 4.125]];
        write_csv(&p, &m).unwrap();
        let back: Array2<f64> = read_csv(&p).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn rejects_non_finite() {
        let p = tmpdir().join("nan.csv");
        std::fs::write(&p, "1.0,NaN\n2.0,3.0\n").unwrap();
        assert!(read_csv::<f64>(&p).is_err());
    }

    #[test]
    fn rejects_bad_magic_and_overflow() {
        let p = tmpdir().join("bad.slrm");
        std::fs::write(&p, b"XXXX\x01\x00\x00\x00\x00\x00\x00\x00").unwrap();
        assert!(read_binary::<f64>(&p).is_err());

        let p2 = tmpdir().join("huge.slrm");
        let mut bytes = Vec::new();
        bytes.extend_from_slice(b"SLRM");
        bytes.extend_from_slice(&u64::MAX.to_le_bytes());
        bytes.extend_from_slice(&u64::MAX.to_le_bytes());
        std::fs::write(&p2, bytes).unwrap();
        assert!(read_binary::<f64>(&p2).is_err());
    }

    #[test]
    fn rejects_ragged_csv() {
        let p = tmpdir().join("ragged.csv");
        std::fs::write(&p, "1,2,3\n4,5\n").unwrap();
        assert!(read_csv::<f64>(&p).is_err());
    }

    #[test]
    fn vector_roundtrip() {
        let p = tmpdir().join("vec.slrm");
        let v = array![1.0_f64, -2.0, 3.5];
        write_vector(&p, &v).unwrap();
        let back: Array1<f64> = read_vector(&p).unwrap();
        assert_eq!(v, back);
    }
}
