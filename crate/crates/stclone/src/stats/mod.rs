//! Rating-study statistics: Likert encoding, rater aggregation, ICC(3,k)
//! reliability with F test and confidence interval, and per-group
//! descriptive summaries.

pub mod fdist;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use fdist::{f_quantile, f_sf};

/// The five response variables rated per clone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResponseVariable {
    Aspect,
    Logical,
    Structural,
    Syntactical,
    Relevance,
}

impl ResponseVariable {
    pub const ALL: [ResponseVariable; 5] = [
        ResponseVariable::Aspect,
        ResponseVariable::Logical,
        ResponseVariable::Structural,
        ResponseVariable::Syntactical,
        ResponseVariable::Relevance,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ResponseVariable::Aspect => "aspect",
            ResponseVariable::Logical => "logical",
            ResponseVariable::Structural => "structural",
            ResponseVariable::Syntactical => "syntactical",
            ResponseVariable::Relevance => "relevance",
        }
    }

    pub fn parse(s: &str) -> Option<ResponseVariable> {
        match s.trim().to_ascii_lowercase().as_str() {
            "aspect" => Some(ResponseVariable::Aspect),
            "logical" => Some(ResponseVariable::Logical),
            "structural" => Some(ResponseVariable::Structural),
            "syntactical" => Some(ResponseVariable::Syntactical),
            "relevance" => Some(ResponseVariable::Relevance),
            _ => None,
        }
    }
}

impl fmt::Display for ResponseVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One Likert response mapped evenly onto [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LikertValue {
    pub value: f64,
}

static LIKERT_SCALE: [(&str, f64); 5] = [
    ("strongly disagree", -1.0),
    ("disagree", -0.5),
    ("neither agree nor disagree", 0.0),
    ("agree", 0.5),
    ("strongly agree", 1.0),
];

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("unknown Likert label: {0:?}")]
    UnknownLabel(String),
    #[error("incomplete rating sheet for {variable}: missing {}", format_missing(.missing))]
    IncompleteSheet { variable: ResponseVariable, missing: Vec<(String, String)> },
    #[error("duplicate rating for clone {clone_id:?}, rater {rater_id:?}, variable {variable}")]
    DuplicateCell { clone_id: String, rater_id: String, variable: ResponseVariable },
    #[error("ICC needs at least 2 subjects and 2 raters (got {subjects} x {raters})")]
    InsufficientData { subjects: usize, raters: usize },
    #[error("degenerate data: all subject means are equal")]
    DegenerateData,
    #[error("empty group")]
    EmptyGroup,
}

fn format_missing(missing: &[(String, String)]) -> String {
    let shown: Vec<String> = missing
        .iter()
        .take(5)
        .map(|(c, r)| format!("({c}, {r})"))
        .collect();
    let suffix = if missing.len() > 5 { ", ..." } else { "" };
    format!("{} cell(s): {}{}", missing.len(), shown.join(", "), suffix)
}

/// Maps a canonical Likert label (case-insensitive, whitespace-folded) to
/// its value: Strongly disagree is -1 and Strongly agree is 1.
pub fn likert_value(label: &str) -> Result<LikertValue, StatsError> {
    let folded = label.trim().to_ascii_lowercase();
    let folded = folded.split_whitespace().collect::<Vec<_>>().join(" ");
    LIKERT_SCALE
        .iter()
        .find(|(name, _)| *name == folded)
        .map(|&(_, value)| LikertValue { value })
        .ok_or_else(|| StatsError::UnknownLabel(label.to_string()))
}

/// Likert responses of `n` clones by `k` raters, per response variable.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RatingSheet {
    /// Clone ids in first-seen order.
    pub subjects: Vec<String>,
    /// Rater ids in first-seen order.
    pub raters: Vec<String>,
    responses: HashMap<ResponseVariable, HashMap<(usize, usize), f64>>,
}

impl RatingSheet {
    pub fn new() -> RatingSheet {
        RatingSheet::default()
    }

    fn subject_index(&mut self, clone_id: &str) -> usize {
        match self.subjects.iter().position(|s| s == clone_id) {
            Some(i) => i,
            None => {
                self.subjects.push(clone_id.to_string());
                self.subjects.len() - 1
            }
        }
    }

    fn rater_index(&mut self, rater_id: &str) -> usize {
        match self.raters.iter().position(|r| r == rater_id) {
            Some(i) => i,
            None => {
                self.raters.push(rater_id.to_string());
                self.raters.len() - 1
            }
        }
    }

    /// Records one rating; the label is mapped through [`likert_value`].
    pub fn add_rating(
        &mut self,
        clone_id: &str,
        rater_id: &str,
        variable: ResponseVariable,
        label: &str,
    ) -> Result<(), StatsError> {
        let value = likert_value(label)?.value;
        let subject = self.subject_index(clone_id);
        let rater = self.rater_index(rater_id);
        let cells = self.responses.entry(variable).or_default();
        if cells.insert((subject, rater), value).is_some() {
            return Err(StatsError::DuplicateCell {
                clone_id: clone_id.to_string(),
                rater_id: rater_id.to_string(),
                variable,
            });
        }
        Ok(())
    }

    /// Parses the `clone_id,rater_id,variable,label` CSV format. Errors
    /// carry 1-based row numbers.
    pub fn from_csv(text: &str) -> Result<RatingSheet, SheetCsvError> {
        let mut sheet = RatingSheet::new();
        let mut rows = text.lines().enumerate();
        let header = loop {
            match rows.next() {
                Some((i, line)) if !line.trim().is_empty() => break (i, line),
                Some(_) => continue,
                None => return Err(SheetCsvError { row: 1, message: "empty file".into() }),
            }
        };
        let cols = split_csv_row(header.1);
        let expected = ["clone_id", "rater_id", "variable", "label"];
        if cols.len() != 4
            || !cols
                .iter()
                .zip(expected)
                .all(|(c, e)| c.trim().eq_ignore_ascii_case(e))
        {
            return Err(SheetCsvError {
                row: header.0 + 1,
                message: format!("expected header clone_id,rater_id,variable,label, got {:?}", header.1),
            });
        }
        for (i, line) in rows {
            if line.trim().is_empty() {
                continue;
            }
            let row = i + 1;
            let fields = split_csv_row(line);
            if fields.len() != 4 {
                return Err(SheetCsvError {
                    row,
                    message: format!("expected 4 fields, got {}", fields.len()),
                });
            }
            let variable = ResponseVariable::parse(&fields[2]).ok_or_else(|| SheetCsvError {
                row,
                message: format!("unknown variable {:?}", fields[2]),
            })?;
            sheet
                .add_rating(fields[0].trim(), fields[1].trim(), variable, &fields[3])
                .map_err(|e| SheetCsvError { row, message: e.to_string() })?;
        }
        Ok(sheet)
    }

    /// The variables present in the sheet, in canonical order.
    pub fn variables(&self) -> Vec<ResponseVariable> {
        ResponseVariable::ALL
            .iter()
            .copied()
            .filter(|v| self.responses.contains_key(v))
            .collect()
    }

    /// The complete n x k value matrix for one variable, subjects in rows.
    pub fn matrix(&self, variable: ResponseVariable) -> Result<Vec<Vec<f64>>, StatsError> {
        let cells = self.responses.get(&variable).ok_or_else(|| StatsError::IncompleteSheet {
            variable,
            missing: self
                .subjects
                .iter()
                .flat_map(|s| self.raters.iter().map(move |r| (s.clone(), r.clone())))
                .collect(),
        })?;
        let mut missing = Vec::new();
        let mut matrix = vec![vec![0.0; self.raters.len()]; self.subjects.len()];
        for (si, subject) in self.subjects.iter().enumerate() {
            for (ri, rater) in self.raters.iter().enumerate() {
                match cells.get(&(si, ri)) {
                    Some(&v) => matrix[si][ri] = v,
                    None => missing.push((subject.clone(), rater.clone())),
                }
            }
        }
        if !missing.is_empty() {
            return Err(StatsError::IncompleteSheet { variable, missing });
        }
        Ok(matrix)
    }
}

/// CSV ingestion error with its 1-based row number.
#[derive(Debug, Error, PartialEq)]
#[error("ratings CSV row {row}: {message}")]
pub struct SheetCsvError {
    pub row: usize,
    pub message: String,
}

/// Minimal CSV field splitting with double-quote support.
fn split_csv_row(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut field = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    field.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' if field.is_empty() => quoted = true,
            ',' if !quoted => fields.push(std::mem::take(&mut field)),
            _ => field.push(c),
        }
    }
    fields.push(field);
    fields
}

/// Per-clone mean of the mapped ratings, in sheet subject order.
pub fn aggregate_ratings(
    sheet: &RatingSheet,
    variable: ResponseVariable,
) -> Result<Vec<(String, f64)>, StatsError> {
    let matrix = sheet.matrix(variable)?;
    Ok(sheet
        .subjects
        .iter()
        .zip(&matrix)
        .map(|(subject, row)| {
            (subject.clone(), row.iter().sum::<f64>() / row.len() as f64)
        })
        .collect())
}

/// Two-way consistency averaged-measures intraclass correlation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IccResult {
    pub icc: f64,
    pub ci_lower: f64,
    pub ci_upper: f64,
    /// `MSR / MSE`; infinite when the residual vanishes.
    pub f_value: f64,
    pub df1: usize,
    pub df2: usize,
    pub p_value: f64,
}

/// ICC(3,k) over a complete n x k matrix (subjects in rows, raters in
/// columns) with a `1 - alpha` confidence interval.
///
/// Two-way ANOVA without replication: with MSR the between-subjects mean
/// square and MSE the residual, ICC(3,k) = (MSR - MSE) / MSR and
/// F = MSR / MSE on (n-1, (n-1)(k-1)) degrees of freedom. A zero residual
/// (raters differing only by constant shifts) yields icc = 1 with p = 0.
pub fn icc3k(matrix: &[Vec<f64>], alpha: f64) -> Result<IccResult, StatsError> {
    assert!(alpha > 0.0 && alpha < 1.0, "alpha must be in (0, 1)");
    let n = matrix.len();
    let k = matrix.first().map_or(0, Vec::len);
    if n < 2 || k < 2 {
        return Err(StatsError::InsufficientData { subjects: n, raters: k });
    }
    assert!(matrix.iter().all(|row| row.len() == k), "ragged rating matrix");

    let nf = n as f64;
    let kf = k as f64;
    let grand = matrix.iter().flatten().sum::<f64>() / (nf * kf);
    let row_means: Vec<f64> =
        matrix.iter().map(|row| row.iter().sum::<f64>() / kf).collect();
    let col_means: Vec<f64> = (0..k)
        .map(|j| matrix.iter().map(|row| row[j]).sum::<f64>() / nf)
        .collect();

    let ssr = kf * row_means.iter().map(|m| (m - grand).powi(2)).sum::<f64>();
    let sse: f64 = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| (x - row_means[i] - col_means[j] + grand).powi(2))
                .sum::<f64>()
        })
        .sum();

    let df1 = n - 1;
    let df2 = (n - 1) * (k - 1);
    let msr = ssr / df1 as f64;
    let mse = sse / df2 as f64;

    if msr <= 0.0 {
        return Err(StatsError::DegenerateData);
    }
    if mse <= 0.0 {
        return Ok(IccResult {
            icc: 1.0,
            ci_lower: 1.0,
            ci_upper: 1.0,
            f_value: f64::INFINITY,
            df1,
            df2,
            p_value: 0.0,
        });
    }

    let f_value = msr / mse;
    let fl = f_quantile(1.0 - alpha / 2.0, df1, df2);
    let fu = f_quantile(1.0 - alpha / 2.0, df2, df1);
    Ok(IccResult {
        icc: (msr - mse) / msr,
        ci_lower: 1.0 - fl / f_value,
        ci_upper: 1.0 - 1.0 / (f_value * fu),
        f_value,
        df1,
        df2,
        p_value: f_sf(f_value, df1 as f64, df2 as f64),
    })
}

/// Five-number summary plus mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
}

fn median_of(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Quartile summary of one response group.
///
/// Quartiles use the exclusive median-of-halves rule: the lower and upper
/// halves leave out the middle element when the count is odd.
pub fn group_summary(values: &[f64]) -> Result<GroupSummary, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyGroup);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let (lower, upper) = (&sorted[..n / 2], &sorted[n.div_ceil(2)..]);
    Ok(GroupSummary {
        min: sorted[0],
        q1: if lower.is_empty() { sorted[0] } else { median_of(lower) },
        median: median_of(&sorted),
        q3: if upper.is_empty() { sorted[n - 1] } else { median_of(upper) },
        max: sorted[n - 1],
        mean: sorted.iter().sum::<f64>() / n as f64,
    })
}
