//! Comma-separated decision tables.
//!
//! No quoting: a cell containing a comma splits into two cells and the row
//! is rejected as ragged. Cells are trimmed and kept verbatim otherwise.

use std::io::Read;

use reduct_core::{Decision, Error, InformationSystem};

/// Column consumed as object labels when a header names it.
pub const ID_COLUMN: &str = "id";

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error(transparent)]
    Table(#[from] Error),
}

#[derive(Debug, Clone)]
pub struct LoadOptions {
    pub has_header: bool,
    pub decision: Decision,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            has_header: true,
            decision: Decision::Identity,
        }
    }
}

/// Parses a table. `MalformedTable` carries the 1-based line number.
pub fn load_csv<R: Read>(
    mut source: R,
    options: &LoadOptions,
) -> Result<InformationSystem, LoadError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| LoadError::Utf8)?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(&text);

    let mut lines: Vec<(usize, Vec<String>)> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l.split(',').map(|c| c.trim().to_owned()).collect()))
        .collect();
    while lines
        .last()
        .is_some_and(|(_, cells)| cells.len() == 1 && cells[0].is_empty())
    {
        lines.pop();
    }

    let (header, body) = if options.has_header {
        match lines.split_first() {
            Some(((_, names), body)) => (Some(names.clone()), body),
            None => return Err(Error::EmptyTable.into()),
        }
    } else {
        (None, &lines[..])
    };
    let width = match (&header, body.first()) {
        (Some(h), _) => h.len(),
        (None, Some((_, row))) => row.len(),
        (None, None) => return Err(Error::EmptyTable.into()),
    };
    if body.is_empty() {
        return Err(Error::EmptyTable.into());
    }
    if let Some((line, _)) = body.iter().find(|(_, row)| row.len() != width) {
        return Err(Error::MalformedTable(*line).into());
    }

    let mut names = header.unwrap_or_else(|| (1..=width).map(|i| format!("c{i}")).collect());
    let id_col = options
        .has_header
        .then(|| names.iter().position(|n| n == ID_COLUMN))
        .flatten();
    let mut rows: Vec<Vec<String>> = body.iter().map(|(_, r)| r.clone()).collect();
    let ids = match id_col {
        Some(c) => {
            names.remove(c);
            rows.iter_mut().map(|r| r.remove(c)).collect()
        }
        None => (0..rows.len()).map(|i| i.to_string()).collect(),
    };
    Ok(InformationSystem::new(
        ids,
        names,
        rows,
        options.decision.clone(),
    )?)
}
