//! On-disk artifact formats: versioned JSON files and CSV tables.

use serde::{Deserialize, Serialize};

use crate::detect::{CloneClass, CorpusFile};
use crate::lang::LanguageId;
use crate::metrics::{DetectionReport, ScatterRow, TreemapRow};
use crate::select::{ClassSummary, EmptyCell, StudyGroup, StudyPlan};
use crate::stats::{GroupSummary, IccResult, ResponseVariable};

pub const SCHEMA_VERSION: u32 = 1;

/// `clones.json`: the clone classes of one detection run, grouped per
/// language partition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClonesFile {
    pub schema_version: u32,
    /// Machine label of the normalization option.
    pub option: String,
    pub min_lines: usize,
    pub allow_overlap: bool,
    pub ignore_punct_lines: bool,
    pub runs: Vec<LanguageRun>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LanguageRun {
    pub language: LanguageId,
    pub total_files: usize,
    pub total_significant_lines: usize,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassRecord {
    pub class_id: usize,
    pub sig_count: usize,
    /// Hex digest of the class's line-fingerprint sequence.
    pub sequence_key: String,
    pub blocks: Vec<BlockRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockRecord {
    pub path: String,
    /// 1-based inclusive original line range.
    pub start_line: u32,
    pub end_line: u32,
    pub sig_count: usize,
}

impl ClassRecord {
    pub fn from_class(class: &CloneClass, corpus: &[CorpusFile]) -> ClassRecord {
        let path_of = |file_id: usize| {
            corpus
                .iter()
                .find(|f| f.file_id == file_id)
                .map(|f| f.path.clone())
                .unwrap_or_default()
        };
        ClassRecord {
            class_id: class.class_id,
            sig_count: class.sig_count,
            sequence_key: format!("{:016x}", class.sequence_key),
            blocks: class
                .blocks
                .iter()
                .map(|b| BlockRecord {
                    path: path_of(b.file_id),
                    start_line: b.start_line,
                    end_line: b.end_line,
                    sig_count: b.sig_count,
                })
                .collect(),
        }
    }

    /// The ranking view used by study sampling.
    pub fn to_summary(&self) -> ClassSummary {
        ClassSummary {
            class_id: self.class_id,
            sig_count: self.sig_count,
            block_count: self.blocks.len(),
            first_path: self.blocks.first().map(|b| b.path.clone()).unwrap_or_default(),
            first_start_line: self.blocks.first().map_or(0, |b| b.start_line),
        }
    }
}

/// `report.json`: one Table-style summary row per language partition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub reports: Vec<DetectionReport>,
}

/// `studyplan.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StudyPlanFile {
    pub schema_version: u32,
    pub k: usize,
    pub seed: u64,
    pub groups: Vec<StudyGroup>,
    pub warnings: Vec<EmptyCell>,
}

impl StudyPlanFile {
    pub fn from_plan(plan: &StudyPlan) -> StudyPlanFile {
        StudyPlanFile {
            schema_version: SCHEMA_VERSION,
            k: plan.k,
            seed: plan.seed,
            groups: plan.groups.clone(),
            warnings: plan.warnings.clone(),
        }
    }
}

/// `icc.json`: reliability per response variable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IccFile {
    pub schema_version: u32,
    pub alpha: f64,
    pub subjects: usize,
    pub raters: usize,
    pub variables: Vec<VariableIcc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariableIcc {
    pub variable: ResponseVariable,
    #[serde(flatten)]
    pub result: IccResult,
}

/// One `groups.csv` row: quartile summary of the rater-averaged responses
/// of one study group for one variable.
#[derive(Debug, Clone)]
pub struct GroupSummaryRow {
    pub language: String,
    pub option: String,
    pub strategy: String,
    pub variable: ResponseVariable,
    pub n: usize,
    pub summary: GroupSummary,
}

/// Quotes a CSV field when needed (comma, quote, or newline inside).
pub fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// `scatter.csv` with header `fileA,fileB,blocks`.
pub fn scatter_csv(rows: &[ScatterRow]) -> String {
    let mut out = String::from("fileA,fileB,blocks\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            csv_escape(&row.file_a),
            csv_escape(&row.file_b),
            row.blocks
        ));
    }
    out
}

/// `treemap.csv` with header `dir,total,dup,ratio`.
pub fn treemap_csv(rows: &[TreemapRow]) -> String {
    let mut out = String::from("dir,total,dup,ratio\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{:.6}\n",
            csv_escape(&row.dir),
            row.total_sig_lines,
            row.duplicated_lines,
            row.duplication_ratio
        ));
    }
    out
}

/// `icc.csv` mirroring the JSON reliability table.
pub fn icc_csv(variables: &[VariableIcc]) -> String {
    let mut out = String::from("variable,icc,ci_lower,ci_upper,f_value,df1,df2,p_value\n");
    for v in variables {
        out.push_str(&format!(
            "{},{:.6},{:.6},{:.6},{},{},{},{:.6e}\n",
            v.variable,
            v.result.icc,
            v.result.ci_lower,
            v.result.ci_upper,
            if v.result.f_value.is_finite() {
                format!("{:.6}", v.result.f_value)
            } else {
                "inf".to_string()
            },
            v.result.df1,
            v.result.df2,
            v.result.p_value
        ));
    }
    out
}

/// `groups.csv` keyed by (language, option, strategy, variable).
pub fn groups_csv(rows: &[GroupSummaryRow]) -> String {
    let mut out = String::from("language,option,strategy,variable,n,min,q1,median,q3,max,mean\n");
    for row in rows {
        let s = &row.summary;
        out.push_str(&format!(
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}\n",
            csv_escape(&row.language),
            csv_escape(&row.option),
            csv_escape(&row.strategy),
            row.variable,
            row.n,
            s.min,
            s.q1,
            s.median,
            s.q3,
            s.max,
            s.mean
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn clones_file_round_trips_through_json() {
        let file = ClonesFile {
            schema_version: SCHEMA_VERSION,
            option: "identifier".into(),
            min_lines: 5,
            allow_overlap: true,
            ignore_punct_lines: false,
            runs: vec![LanguageRun {
                language: LanguageId::St,
                total_files: 2,
                total_significant_lines: 40,
                classes: vec![ClassRecord {
                    class_id: 1,
                    sig_count: 6,
                    sequence_key: "00ff00ff00ff00ff".into(),
                    blocks: vec![BlockRecord {
                        path: "a.st".into(),
                        start_line: 3,
                        end_line: 9,
                        sig_count: 6,
                    }],
                }],
            }],
        };
        let json = serde_json::to_string_pretty(&file).unwrap();
        let back: ClonesFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.runs[0].classes[0].sequence_key, "00ff00ff00ff00ff");
        assert_eq!(back.runs[0].language, LanguageId::St);
        let summary = back.runs[0].classes[0].to_summary();
        assert_eq!(summary.first_path, "a.st");
        assert_eq!(summary.block_count, 1);
    }

    #[test]
    fn csv_headers_are_pinned() {
        assert!(scatter_csv(&[]).starts_with("fileA,fileB,blocks\n"));
        assert!(treemap_csv(&[]).starts_with("dir,total,dup,ratio\n"));
        assert!(icc_csv(&[]).starts_with("variable,icc,ci_lower,ci_upper,f_value,df1,df2,p_value\n"));
        assert!(groups_csv(&[]).starts_with("language,option,strategy,variable,n,min,q1,median,q3,max,mean\n"));
    }
}
