//! Plain-text matrix format:
//!
//! ```text
//! GF3 <rows> <cols>
//! <cols space-separated digits>   (rows times)
//! ```
//!
//! Every line ends in a single `\n`; blank lines are rejected.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix};

pub fn serialize(m: &Gf3Matrix) -> String {
    let mut out = format!("GF3 {} {}\n", m.rows(), m.cols());
    for row in m.row_iter() {
        let digits: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&digits.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the format above; errors carry 1-based line numbers.
pub fn parse(text: &str) -> Result<Gf3Matrix> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let body = text.strip_suffix('\n').unwrap_or(text);
    let lines: Vec<&str> = body.split('\n').collect();

    let header = lines[0].trim_end_matches('\r');
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "GF3" {
        return Err(err(
            1,
            format!("expected header \"GF3 <rows> <cols>\", found {header:?}"),
        ));
    }
    let dim = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| err(1, format!("{what} {s:?} is not a non-negative integer")))
    };
    let rows = dim(fields[1], "row count")?;
    let cols = dim(fields[2], "column count")?;

    let found = lines.len() - 1;
    if found != rows {
        let line = if found < rows {
            lines.len() + 1
        } else {
            rows + 2
        };
        return Err(err(
            line,
            format!("expected {rows} matrix rows, found {found}"),
        ));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, raw) in lines[1..].iter().enumerate() {
        let line = i + 2;
        let raw = raw.trim_end_matches('\r');
        if raw.trim().is_empty() {
            return Err(err(line, "blank line".into()));
        }
        let entries: Vec<&str> = raw.split_whitespace().collect();
        if entries.len() != cols {
            return Err(err(
                line,
                format!("expected {cols} entries, found {}", entries.len()),
            ));
        }
        for e in entries {
            let v = match e {
                "0" => Gf3::ZERO,
                "1" => Gf3::ONE,
                "2" => Gf3::TWO,
                _ => return Err(err(line, format!("entry {e:?} is not 0, 1 or 2"))),
            };
            data.push(v);
        }
    }
    Gf3Matrix::new(rows, cols, data)
}

pub fn read(path: &Path) -> Result<Gf3Matrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

pub fn write(path: &Path, m: &Gf3Matrix) -> Result<()> {
    fs::write(path, serialize(m))
        .map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))
}
