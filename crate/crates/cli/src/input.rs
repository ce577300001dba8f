//! CSV readers. Files are UTF-8 with a header row, comma separated, and use
//! `.` as the decimal point. Errors name the offending line (the header is
//! line 1).

use std::path::Path;

use csv::{ReaderBuilder, StringRecord};
use roc_metrics::imputed::{Grade, GradeTable};

use crate::error::CliError;

struct Table {
    headers: StringRecord,
    rows: Vec<(u64, StringRecord)>,
}

fn read_table(path: &Path) -> Result<Table, CliError> {
    let mut reader = ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let headers = reader
        .headers()
        .map_err(|e| CliError::input(format!("{}: bad header: {e}", path.display())))?
        .clone();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            CliError::input(format!("{}: line {line}: {e}", path.display()))
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        rows.push((line, record));
    }
    Ok(Table { headers, rows })
}

fn column(table: &Table, name: &str, path: &Path) -> Result<usize, CliError> {
    table.headers.iter().position(|h| h == name).ok_or_else(|| {
        CliError::input(format!(
            "{}: no column named '{name}' (found: {})",
            path.display(),
            table.headers.iter().collect::<Vec<_>>().join(", ")
        ))
    })
}

fn field<'a>(
    record: &'a StringRecord,
    idx: usize,
    name: &str,
    line: u64,
    path: &Path,
) -> Result<&'a str, CliError> {
    match record.get(idx) {
        Some(v) if !v.is_empty() => Ok(v),
        _ => Err(CliError::input(format!("{}: line {line}: missing value for '{name}'", path.display()))),
    }
}

fn number(text: &str, name: &str, line: u64, path: &Path) -> Result<f64, CliError> {
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(CliError::input(format!(
            "{}: line {line}: '{name}' must be a finite number, got '{text}'",
            path.display()
        ))),
    }
}

fn flag(text: &str, name: &str, line: u64, path: &Path) -> Result<bool, CliError> {
    match text.to_ascii_lowercase().as_str() {
        "1" | "true" => Ok(true),
        "0" | "false" => Ok(false),
        _ => Err(CliError::input(format!(
            "{}: line {line}: '{name}' must be one of 0, 1, true, false, got '{text}'",
            path.display()
        ))),
    }
}

/// Reads (non-default scores, default scores) from a binary outcome file.
pub fn read_binary(
    path: &Path,
    score_col: &str,
    default_col: &str,
) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let table = read_table(path)?;
    let si = column(&table, score_col, path)?;
    let di = column(&table, default_col, path)?;
    let (mut good, mut bad) = (Vec::new(), Vec::new());
    for (line, record) in &table.rows {
        let score = number(field(record, si, score_col, *line, path)?, score_col, *line, path)?;
        if flag(field(record, di, default_col, *line, path)?, default_col, *line, path)? {
            bad.push(score);
        } else {
            good.push(score);
        }
    }
    Ok((good, bad))
}

/// Reads a grade table with columns `grade,count,pd`, worst grade first.
pub fn read_grades(path: &Path) -> Result<GradeTable, CliError> {
    let table = read_table(path)?;
    let gi = column(&table, "grade", path)?;
    let ci = column(&table, "count", path)?;
    let pi = column(&table, "pd", path)?;
    let mut grades = Vec::with_capacity(table.rows.len());
    let mut previous: Option<f64> = None;
    for (line, record) in &table.rows {
        let label = field(record, gi, "grade", *line, path)?;
        let count = number(field(record, ci, "count", *line, path)?, "count", *line, path)?;
        let pd = number(field(record, pi, "pd", *line, path)?, "pd", *line, path)?;
        if count < 0.0 {
            return Err(CliError::input(format!(
                "{}: line {line}: count must be nonnegative, got {count}",
                path.display()
            )));
        }
        if !(pd > 0.0 && pd < 1.0) {
            return Err(CliError::input(format!(
                "{}: line {line}: pd must lie strictly between 0 and 1, got {pd}",
                path.display()
            )));
        }
        if let Some(prev) = previous {
            if pd > prev {
                return Err(CliError::input(format!(
                    "{}: line {line} (grade {label}): pd {pd} is above the preceding {prev}; \
                     grades must be sorted by descending pd",
                    path.display()
                )));
            }
        }
        previous = Some(pd);
        grades.push(Grade::new(label, count, pd));
    }
    Ok(GradeTable::new(grades)?)
}
