//! Rendering records and diffing them against a b-file.

use std::fmt::Write as _;

use crate::request::{OutputRecord, SequenceRequest};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One value per line.
    Plain,
    /// `n value` per line, as in OEIS b-files.
    Bfile,
    /// `{"sequence", "method", "values": [{"n", "value"}]}`.
    Json,
}

#[derive(serde::Serialize)]
struct JsonDoc<'a> {
    sequence: &'a str,
    method: &'a str,
    values: &'a [OutputRecord],
}

pub fn render(req: &SequenceRequest, records: &[OutputRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for r in records {
                writeln!(out, "{}", r.value).unwrap();
            }
        }
        Format::Bfile => {
            for r in records {
                writeln!(out, "{} {}", r.n, r.value).unwrap();
            }
        }
        Format::Json => {
            let doc = JsonDoc { sequence: req.sequence.name(), method: &req.method, values: records };
            out = serde_json::to_string(&doc).expect("plain strings serialize");
            out.push('\n');
        }
    }
    out
}

/// Parses `n value` lines; blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, String)>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(n), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(CliError::Usage(format!("line {}: expected `n value`", i + 1)));
        };
        let n = n
            .parse()
            .map_err(|_| CliError::Usage(format!("line {}: bad index `{n}`", i + 1)))?;
        out.push((n, v.to_string()));
    }
    Ok(out)
}

/// Line-by-line differences between computed records and a reference
/// b-file, as human-readable messages. Empty means they agree.
pub fn compare(records: &[OutputRecord], reference: &[(usize, String)]) -> Vec<String> {
    let mut diffs = Vec::new();
    for (i, r) in records.iter().enumerate() {
        match reference.get(i) {
            None => diffs.push(format!("n = {}: missing from reference", r.n)),
            Some((n, v)) if *n != r.n => diffs.push(format!("line {}: reference has n = {n}, computed n = {}", i + 1, r.n)),
            Some((_, v)) if *v != r.value => diffs.push(format!("n = {}: reference {v}, computed {}", r.n, r.value)),
            _ => {}
        }
    }
    for (n, _) in reference.iter().skip(records.len()) {
        diffs.push(format!("n = {n}: not computed"));
    }
    diffs
}
