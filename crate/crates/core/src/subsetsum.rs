//! Pseudopolynomial subset-sum oracle.
//!
//! Reachable-sums DP over `[0, b]`; the witness is reconstructed greedily so
//! the returned index set is the lexicographically smallest one, which keeps
//! downstream output deterministic.

use crate::rational::Rational;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumInstance {
    values: Vec<u64>,
    target: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubsetSumError {
    #[error("instance needs at least one value")]
    Empty,
    #[error("values and target must be positive")]
    NonPositive,
    #[error("sum of values overflows")]
    Overflow,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl SubsetSumInstance {
    pub fn new(values: Vec<u64>, target: u64) -> Result<Self, SubsetSumError> {
        if values.is_empty() {
            return Err(SubsetSumError::Empty);
        }
        if target == 0 || values.iter().any(|&a| a == 0) {
            return Err(SubsetSumError::NonPositive);
        }
        let mut total: u64 = 0;
        for &a in &values {
            total = total.checked_add(a).ok_or(SubsetSumError::Overflow)?;
        }
        Ok(SubsetSumInstance { values, target })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn sum_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.sum()))
    }

    /// Returns the lexicographically smallest `I` (0-based, sorted) with
    /// `sum(values[I]) == target`, if one exists.
    pub fn solve(&self) -> Option<Vec<usize>> {
        let n = self.values.len();
        let b = self.target as usize;
        // reach[i][s]: some subset of values[i..] sums to s.
        let mut reach = vec![vec![false; b + 1]; n + 1];
        reach[n][0] = true;
        for i in (0..n).rev() {
            let a = self.values[i] as usize;
            for s in 0..=b {
                reach[i][s] = reach[i + 1][s] || (s >= a && reach[i + 1][s - a]);
            }
        }
        if !reach[0][b] {
            return None;
        }
        let mut witness = Vec::new();
        let mut remaining = b;
        for i in 0..n {
            let a = self.values[i] as usize;
            if remaining >= a && reach[i + 1][remaining - a] {
                witness.push(i);
                remaining -= a;
                if remaining == 0 {
                    break;
                }
            }
        }
        debug_assert_eq!(remaining, 0);
        Some(witness)
    }
}

/// Parses the instance format:
///
/// ```text
/// subsetsum <n> <b>
/// a <a1> <a2> ... <an>
/// ```
pub fn parse_instance(text: &str) -> Result<SubsetSumInstance, SubsetSumError> {
    let perr = |line: usize, message: &str| SubsetSumError::Parse {
        line,
        message: message.to_string(),
    };
    let mut header: Option<(usize, u64)> = None;
    let mut values: Option<Vec<u64>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "subsetsum" => {
                if tokens.len() != 3 {
                    return Err(perr(line_no, "expected `subsetsum <n> <b>`"));
                }
                let n = tokens[1].parse().map_err(|_| perr(line_no, "bad count"))?;
                let b = tokens[2].parse().map_err(|_| perr(line_no, "bad target"))?;
                header = Some((n, b));
            }
            "a" => {
                let mut vs = Vec::new();
                for tok in &tokens[1..] {
                    vs.push(tok.parse().map_err(|_| perr(line_no, "bad value"))?);
                }
                values = Some(vs);
            }
            other => {
                return Err(SubsetSumError::Parse {
                    line: line_no,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let (n, b) = header.ok_or_else(|| perr(1, "missing `subsetsum` header"))?;
    let values = values.ok_or_else(|| perr(1, "missing `a` line"))?;
    if values.len() != n {
        return Err(perr(1, "header count does not match number of values"));
    }
    SubsetSumInstance::new(values, b)
}

pub fn format_instance(inst: &SubsetSumInstance) -> String {
    let mut out = format!("subsetsum {} {}\n", inst.len(), inst.target());
    out.push_str("a");
    for a in inst.values() {
        out.push_str(&format!(" {a}"));
    }
    out.push('\n');
    out
}
