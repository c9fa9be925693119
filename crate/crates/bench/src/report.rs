use std::io::{Read, Write};

/// Column order of the benchmark CSV.
pub const CSV_HEADER: &str = "dataset,algorithm,params,mean_runtime_ns,mean_relative_error,mean_prune_ratio,pair_count";

/// Aggregate of one algorithm on one dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub dataset: String,
    pub algorithm: String,
    pub params: String,
    pub mean_runtime_ns: f64,
    pub mean_relative_error: f64,
    /// Mean fraction of skipped cells; only pruned algorithms report it.
    pub mean_prune_ratio: Option<f64>,
    pub pair_count: usize,
}

/// A pair that could not be evaluated or whose relative error is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct PairFailure {
    pub dataset: String,
    pub algorithm: String,
    pub pair: (usize, usize),
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub failures: Vec<PairFailure>,
}

impl BenchReport {
    /// Rows of one algorithm sorted by relative error, for error-versus-speed
    /// curves.
    pub fn sorted_curve(&self, algorithm: &str) -> Vec<&BenchRow> {
        let mut rows: Vec<&BenchRow> = self.rows.iter().filter(|r| r.algorithm == algorithm).collect();
        rows.sort_by(|a, b| a.mean_relative_error.total_cmp(&b.mean_relative_error));
        rows
    }
}

fn record(row: &BenchRow) -> [String; 7] {
    [
        row.dataset.clone(),
        row.algorithm.clone(),
        row.params.clone(),
        format!("{}", row.mean_runtime_ns),
        format!("{}", row.mean_relative_error),
        row.mean_prune_ratio.map(|p| p.to_string()).unwrap_or_default(),
        row.pair_count.to_string(),
    ]
}

fn parse_row(rec: &csv::StringRecord) -> Result<BenchRow, String> {
    if rec.len() != 7 {
        return Err(format!("expected 7 fields, found {}", rec.len()));
    }
    let num = |k: usize| rec[k].parse::<f64>().map_err(|e| format!("field {k}: {e}"));
    Ok(BenchRow {
        dataset: rec[0].to_string(),
        algorithm: rec[1].to_string(),
        params: rec[2].to_string(),
        mean_runtime_ns: num(3)?,
        mean_relative_error: num(4)?,
        mean_prune_ratio: if rec[5].is_empty() { None } else { Some(num(5)?) },
        pair_count: rec[6].parse().map_err(|e| format!("field 6: {e}"))?,
    })
}

/// Writes the header and one line per row, LF terminated.
pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for row in rows {
        w.write_record(record(row))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a CSV written by [`write_csv`], checking the header.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRow>, String> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = r.headers().map_err(|e| e.to_string())?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(format!("unexpected header {header:?}"));
    }
    r.records()
        .map(|rec| rec.map_err(|e| e.to_string()).and_then(|rec| parse_row(&rec)))
        .collect()
}
