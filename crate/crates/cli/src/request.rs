//! Parsing a sequence request and computing its values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use seqkernel::partitions::{
    distinct_partition_number, distinct_partition_number_by_sum, partition_number, partition_table,
    ramanujan_slice, restricted_partition_number, restricted_partition_number_by_sum, SliceFamily,
    SliceKind,
};
use seqkernel::special::{
    bernoulli, euler_number, higher_bernoulli, stirling1_by, stirling2_by, Stirling1Method, Stirling2Method,
};
use seqkernel::{format_rat, BernoulliMethod, EulerMethod, ExactInt, PartitionMethod};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    Partition,
    PartitionDistinct,
    PartitionRestricted,
    Bernoulli,
    Euler,
    Stirling1,
    Stirling2,
    HigherBernoulli,
    Slice,
}

impl Sequence {
    pub const ALL: [Sequence; 9] = [
        Sequence::Partition,
        Sequence::PartitionDistinct,
        Sequence::PartitionRestricted,
        Sequence::Bernoulli,
        Sequence::Euler,
        Sequence::Stirling1,
        Sequence::Stirling2,
        Sequence::HigherBernoulli,
        Sequence::Slice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Partition => "partition",
            Sequence::PartitionDistinct => "partition_distinct",
            Sequence::PartitionRestricted => "partition_restricted",
            Sequence::Bernoulli => "bernoulli",
            Sequence::Euler => "euler",
            Sequence::Stirling1 => "stirling1",
            Sequence::Stirling2 => "stirling2",
            Sequence::HigherBernoulli => "higher_bernoulli",
            Sequence::Slice => "slice",
        }
    }

    /// Method tags accepted for this sequence, default first.
    pub fn methods(self) -> Vec<&'static str> {
        match self {
            Sequence::Partition => {
                let mut v = vec![PartitionMethod::Series.tag()];
                v.extend(PartitionMethod::ALL.iter().map(|m| m.tag()).filter(|&t| t != "series"));
                v
            }
            Sequence::PartitionDistinct | Sequence::PartitionRestricted => vec!["determinant", "alternating_sum"],
            Sequence::Bernoulli => {
                let mut v = vec![BernoulliMethod::Recurrence.tag()];
                v.extend(BernoulliMethod::ALL.iter().map(|m| m.tag()).filter(|&t| t != "recurrence"));
                v
            }
            Sequence::Euler => {
                let mut v = vec![EulerMethod::SecantRecurrence.tag()];
                v.extend(EulerMethod::ALL.iter().map(|m| m.tag()).filter(|&t| t != "secant_recurrence"));
                v
            }
            Sequence::Stirling1 => Stirling1Method::ALL.iter().map(|m| m.tag()).collect(),
            Sequence::Stirling2 => Stirling2Method::ALL.iter().map(|m| m.tag()).collect(),
            Sequence::HigherBernoulli => vec!["series"],
            Sequence::Slice => vec!["tower", "closed_form"],
        }
    }

    /// Parameters this sequence requires.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Sequence::PartitionRestricted => &["D"],
            Sequence::Stirling1 | Sequence::Stirling2 => &["k"],
            Sequence::HigherBernoulli => &["order"],
            Sequence::Slice => &["modulus", "residue"],
            _ => &[],
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Self::ALL.into_iter().find(|q| q.name() == s).ok_or_else(|| {
            let names: Vec<_> = Self::ALL.iter().map(|q| q.name()).collect();
            CliError::Usage(format!("unknown sequence `{s}` (expected one of: {})", names.join(", ")))
        })
    }
}

/// A validated request: sequence, inclusive index range, method and
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRequest {
    pub sequence: Sequence,
    pub from: usize,
    pub to: usize,
    pub method: String,
    pub params: BTreeMap<String, usize>,
}

impl SequenceRequest {
    pub fn new(
        sequence: Sequence,
        from: usize,
        to: usize,
        method: Option<&str>,
        params: &[(String, String)],
    ) -> Result<Self, CliError> {
        if from > to {
            return Err(CliError::Usage(format!("--from {from} is greater than --to {to}")));
        }
        let methods = sequence.methods();
        let method = match method {
            None => methods[0].to_string(),
            Some(m) if methods.contains(&m) => m.to_string(),
            Some(m) => {
                return Err(CliError::Usage(format!(
                    "method `{m}` is not available for {sequence} (expected one of: {})",
                    methods.join(", ")
                )))
            }
        };
        let mut map = BTreeMap::new();
        for (k, v) in params {
            if !sequence.params().contains(&k.as_str()) {
                return Err(CliError::Usage(format!("{sequence} does not take parameter `{k}`")));
            }
            let v: usize = v
                .parse()
                .map_err(|_| CliError::Usage(format!("parameter {k} must be a non-negative integer, got `{v}`")))?;
            map.insert(k.clone(), v);
        }
        for &k in sequence.params() {
            if !map.contains_key(k) {
                return Err(CliError::Usage(format!("{sequence} needs --param {k}=<value>")));
            }
        }
        Ok(Self { sequence, from, to, method, params: map })
    }

    fn param(&self, k: &str) -> usize {
        self.params[k]
    }
}

/// One computed term.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OutputRecord {
    pub n: usize,
    pub value: String,
}

fn records<F>(req: &SequenceRequest, f: F) -> Result<Vec<OutputRecord>, CliError>
where
    F: Fn(usize) -> Result<String, CliError> + Sync,
{
    (req.from..=req.to)
        .into_par_iter()
        .map(|n| f(n).map(|value| OutputRecord { n, value }))
        .collect()
}

fn core(e: seqkernel::Error) -> CliError {
    CliError::Compute(e.to_string())
}

/// Computes every term of the request; independent indices run in
/// parallel, results come back in ascending `n`.
pub fn compute(req: &SequenceRequest) -> Result<Vec<OutputRecord>, CliError> {
    let m = req.method.as_str();
    match req.sequence {
        Sequence::Partition => {
            let method: PartitionMethod = m.parse().map_err(core)?;
            match method {
                PartitionMethod::Recurrence => table_records(req, partition_table(req.to)),
                PartitionMethod::Series => {
                    let inv = seqkernel::series_inverse(&seqkernel::pentagonal_series(req.to)).map_err(core)?;
                    let values = inv.to_integers().expect("integer coefficients");
                    table_records(req, values)
                }
                _ => records(req, |n| Ok(partition_number(n, method).to_string())),
            }
        }
        Sequence::PartitionDistinct => records(req, |n| {
            Ok(match m {
                "determinant" => distinct_partition_number(n),
                _ => distinct_partition_number_by_sum(n),
            }
            .to_string())
        }),
        Sequence::PartitionRestricted => {
            let d = req.param("D");
            if d == 0 {
                return Err(CliError::Usage("D must be at least 1".into()));
            }
            let p = partition_table(req.to);
            records(req, |n| match m {
                "determinant" => restricted_partition_number(d, n).map(|v| v.to_string()).map_err(core),
                _ => Ok(restricted_partition_number_by_sum(d, n, &p).to_string()),
            })
        }
        Sequence::Bernoulli => {
            let method: BernoulliMethod = m.parse().map_err(core)?;
            records(req, |n| bernoulli(n, method).map(|v| format_rat(&v)).map_err(core))
        }
        Sequence::Euler => {
            let method: EulerMethod = m.parse().map_err(core)?;
            records(req, |n| euler_number(n, method).map(|v| v.to_string()).map_err(core))
        }
        Sequence::Stirling2 => {
            let method: Stirling2Method = m.parse().map_err(core)?;
            let k = req.param("k");
            records(req, |n| {
                if k > n {
                    return Ok("0".into());
                }
                stirling2_by(n, n - k, method).map(|v| v.to_string()).map_err(core)
            })
        }
        Sequence::Stirling1 => {
            let method: Stirling1Method = m.parse().map_err(core)?;
            let k = req.param("k");
            records(req, |n| {
                if k > n || (k == 0 && n > 0) {
                    return Ok("0".into());
                }
                if n == 0 {
                    return Ok("1".into());
                }
                stirling1_by(n, n - k, method).map(|v| v.to_string()).map_err(core)
            })
        }
        Sequence::HigherBernoulli => {
            let order = req.param("order");
            records(req, |n| Ok(format_rat(&higher_bernoulli(n, order))))
        }
        Sequence::Slice => {
            let (modulus, residue) = (req.param("modulus"), req.param("residue"));
            if m == "closed_form" {
                let kind = match (modulus, residue) {
                    (5, 4) => SliceKind::M5R4,
                    (7, 5) => SliceKind::M7R5,
                    (25, 24) => SliceKind::M25R24,
                    _ => {
                        return Err(CliError::Usage(
                            "closed_form slices exist for (5, 4), (7, 5) and (25, 24) only".into(),
                        ))
                    }
                };
                records(req, |k| ramanujan_slice(kind, k).map(|v| v.to_string()).map_err(core))
            } else {
                let fam = SliceFamily::new(modulus, residue, req.to).map_err(|e| CliError::Usage(e.to_string()))?;
                records(req, |k| fam.value(k).map(|v| v.to_string()).map_err(core))
            }
        }
    }
}

fn table_records(req: &SequenceRequest, table: Vec<ExactInt>) -> Result<Vec<OutputRecord>, CliError> {
    Ok((req.from..=req.to)
        .map(|n| OutputRecord { n, value: table[n].to_string() })
        .collect())
}
