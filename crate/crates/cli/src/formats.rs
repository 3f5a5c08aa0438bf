//! Plain-text input formats.
//!
//! Memories file: one memory per line, whitespace-separated `1`, `+1` or `-1`
//! tokens. Proximity file: one comma-separated row of distances per line.
//! In both, blank lines and lines starting with `#` are skipped.

use std::fs;
use std::path::Path;

use proxrecall_core::{validate_proximity, BipolarVector, MemorySet, ProximityMatrix};

use crate::error::{CliError, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_bipolar_token(token: &str) -> Option<i8> {
    match token {
        "1" | "+1" => Some(1),
        "-1" => Some(-1),
        _ => None,
    }
}

pub fn parse_memories(text: &str, origin: &str) -> Result<MemorySet> {
    let parse_err = |line, message| CliError::Parse { origin: origin.to_string(), line, message };
    let mut memories = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    for (line, content) in data_lines(text) {
        let mut bits = Vec::new();
        for token in content.split_whitespace() {
            let b = parse_bipolar_token(token)
                .ok_or_else(|| parse_err(line, format!("'{token}' is not a bipolar value (1, +1 or -1)")))?;
            bits.push(b);
        }
        match width {
            None => width = Some((bits.len(), line)),
            Some((w, first)) if w != bits.len() => {
                return Err(parse_err(line, format!("expected {w} values (as on line {first}), found {}", bits.len())))
            }
            Some(_) => {}
        }
        memories.push(BipolarVector::new(bits).expect("nonempty, checked tokens"));
    }
    if memories.is_empty() {
        return Err(parse_err(text.lines().count().max(1), "no memories found".into()));
    }
    Ok(MemorySet::new(memories)?)
}

/// Parses the comma-separated rows without checking proximity invariants.
pub fn parse_proximity_rows(text: &str, origin: &str) -> Result<Vec<Vec<f64>>> {
    let parse_err = |line, message| CliError::Parse { origin: origin.to_string(), line, message };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut first_line = 0;
    for (line, content) in data_lines(text) {
        let mut row = Vec::new();
        for cell in content.split(',') {
            let cell = cell.trim();
            let d: f64 = cell.parse().map_err(|_| parse_err(line, format!("'{cell}' is not a number")))?;
            row.push(d);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_err(
                    line,
                    format!("expected {} columns (as on line {first_line}), found {}", first.len(), row.len()),
                ));
            }
        } else {
            first_line = line;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(text.lines().count().max(1), "no matrix rows found".into()));
    }
    Ok(rows)
}

pub fn parse_proximity(text: &str, origin: &str) -> Result<ProximityMatrix> {
    Ok(validate_proximity(&parse_proximity_rows(text, origin)?)?)
}

/// Comma-separated bipolar seed, e.g. `-1` or `1,-1,+1`.
pub fn parse_seed(text: &str) -> Result<Vec<i8>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            parse_bipolar_token(t)
                .ok_or_else(|| CliError::Validation(format!("bad seed token '{t}': expected 1, +1 or -1")))
        })
        .collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_memories(path: &Path) -> Result<MemorySet> {
    parse_memories(&read(path)?, &path.display().to_string())
}

pub fn read_proximity(path: &Path) -> Result<ProximityMatrix> {
    parse_proximity(&read(path)?, &path.display().to_string())
}
