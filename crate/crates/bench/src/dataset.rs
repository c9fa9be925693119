use std::fs;
use std::path::{Path, PathBuf};

use msm_core::{z_normalize, MsmError, Series};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: file contains no series")]
    Empty { path: PathBuf },
    #[error("{path}:{line}: cannot parse field {field:?}")]
    Parse { path: PathBuf, line: usize, field: String },
    #[error("{path}:{line}: non-finite value {field:?}")]
    NonFinite { path: PathBuf, line: usize, field: String },
    #[error("{path}:{line}: line has a label but no values")]
    NoValues { path: PathBuf, line: usize },
    #[error("{path}: no dataset files found")]
    NoDatasets { path: PathBuf },
}

/// A labelled collection of series read from one file.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: String,
    pub series: Vec<(String, Series)>,
    pub source_path: PathBuf,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.series.iter().map(|(_, s)| s.len()).max().unwrap_or(0)
    }
}

/// Reads a UCR archive file: one series per line, label first, fields
/// separated by tabs or commas. Blank lines are skipped.
pub fn load_ucr_tsv(path: impl AsRef<Path>, znorm: bool) -> Result<Dataset, DataError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut series = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let sep = if line.contains('\t') { '\t' } else { ',' };
        let mut fields = line.split(sep).map(str::trim);
        let label = fields.next().unwrap_or_default().to_string();
        let mut values = Vec::new();
        for field in fields.filter(|f| !f.is_empty()) {
            let v: f64 = field.parse().map_err(|_| DataError::Parse {
                path: path.to_path_buf(),
                line: line_no,
                field: field.to_string(),
            })?;
            if !v.is_finite() {
                return Err(DataError::NonFinite {
                    path: path.to_path_buf(),
                    line: line_no,
                    field: field.to_string(),
                });
            }
            values.push(v);
        }
        let ts = Series::new(values).map_err(|e| match e {
            MsmError::EmptySeries => DataError::NoValues {
                path: path.to_path_buf(),
                line: line_no,
            },
            other => unreachable!("values already validated: {other}"),
        })?;
        series.push((label, if znorm { z_normalize(&ts) } else { ts }));
    }
    if series.is_empty() {
        return Err(DataError::Empty {
            path: path.to_path_buf(),
        });
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(Dataset {
        name,
        series,
        source_path: path.to_path_buf(),
    })
}

/// Loads every `.tsv`, `.csv` or `.txt` file in `dir` and in its immediate
/// subdirectories (the UCR archive layout), sorted by path. A file path is
/// loaded on its own.
pub fn load_dir(dir: impl AsRef<Path>, znorm: bool) -> Result<Vec<Dataset>, DataError> {
    let dir = dir.as_ref();
    if dir.is_file() {
        return Ok(vec![load_ucr_tsv(dir, znorm)?]);
    }
    let io = |source| DataError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_dir() {
            for inner in fs::read_dir(&path).map_err(io)? {
                let inner = inner.map_err(io)?.path();
                if is_data_file(&inner) {
                    files.push(inner);
                }
            }
        } else if is_data_file(&path) {
            files.push(path);
        }
    }
    if files.is_empty() {
        return Err(DataError::NoDatasets {
            path: dir.to_path_buf(),
        });
    }
    files.sort();
    files.iter().map(|f| load_ucr_tsv(f, znorm)).collect()
}

fn is_data_file(path: &Path) -> bool {
    path.is_file()
        && matches!(
            path.extension().and_then(|e| e.to_str()),
            Some("tsv") | Some("csv") | Some("txt")
        )
}
