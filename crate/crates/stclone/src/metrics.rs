//! Duplication metrics and plot-ready scatter/treemap datasets.
//!
//! "Duplicated lines" counts distinct significant-line positions covered by
//! at least one block, so overlapping blocks are counted once and the count
//! never exceeds the corpus's significant-line total. Block counts are
//! post-subsumption (the sum of class block counts).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::detect::{CloneClass, CorpusFile};
use crate::lang::LanguageId;
use crate::normalize::NormalizationOptions;

/// One summary row of duplication metrics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectionReport {
    pub language: LanguageId,
    /// Machine label of the normalization option ("default", "identifier",
    /// "literal", "identifier+literal").
    pub option: String,
    pub files_with_clones: usize,
    pub duplicated_lines: usize,
    pub duplicated_blocks: usize,
    pub total_files: usize,
    pub total_significant_lines: usize,
}

/// Scatter-plot row: one unordered file pair with at least one inter-file
/// clone pair, and the number of same-class block pairs between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScatterRow {
    pub file_a: String,
    pub file_b: String,
    pub blocks: usize,
}

/// Treemap row: recursive duplication intensity of one directory subtree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreemapRow {
    pub dir: String,
    pub total_sig_lines: usize,
    pub duplicated_lines: usize,
    pub duplication_ratio: f64,
}

/// Per-file coverage of significant-line positions by clone blocks.
fn coverage(classes: &[CloneClass], corpus: &[CorpusFile]) -> HashMap<usize, Vec<bool>> {
    let mut covered: HashMap<usize, Vec<bool>> = corpus
        .iter()
        .map(|f| (f.file_id, vec![false; f.lines.len()]))
        .collect();
    for class in classes {
        for block in &class.blocks {
            let mask = covered
                .get_mut(&block.file_id)
                .expect("block refers to a corpus file");
            for flag in &mut mask[block.sig_range()] {
                *flag = true;
            }
        }
    }
    covered
}

/// Computes the summary metrics for one detection run.
///
/// The corpus is expected to be single-language (the CLI partitions mixed
/// corpora before detection); the report's language comes from the files.
pub fn compute_metrics(
    classes: &[CloneClass],
    corpus: &[CorpusFile],
    options: NormalizationOptions,
) -> DetectionReport {
    let language = corpus.first().map_or(LanguageId::St, |f| f.language);
    debug_assert!(corpus.iter().all(|f| f.language == language));

    let covered = coverage(classes, corpus);
    let duplicated_lines = covered.values().flatten().filter(|&&c| c).count();
    let duplicated_blocks = classes.iter().map(|c| c.blocks.len()).sum();
    let files_with_clones = classes
        .iter()
        .flat_map(|c| c.blocks.iter().map(|b| b.file_id))
        .collect::<BTreeSet<_>>()
        .len();

    DetectionReport {
        language,
        option: options.label().to_string(),
        files_with_clones,
        duplicated_lines,
        duplicated_blocks,
        total_files: corpus.len(),
        total_significant_lines: corpus.iter().map(CorpusFile::total_significant).sum(),
    }
}

/// Rows for a file-by-file scatter plot: one row per unordered pair of
/// distinct files connected by at least one clone pair, path-sorted.
pub fn scatter_data(classes: &[CloneClass], corpus: &[CorpusFile]) -> Vec<ScatterRow> {
    let paths: HashMap<usize, &str> =
        corpus.iter().map(|f| (f.file_id, f.path.as_str())).collect();
    let mut counts: BTreeMap<(String, String), usize> = BTreeMap::new();
    for class in classes {
        for pair in class.pairs() {
            if pair.a.file_id == pair.b.file_id {
                continue;
            }
            let pa = paths[&pair.a.file_id].to_string();
            let pb = paths[&pair.b.file_id].to_string();
            let key = if pa <= pb { (pa, pb) } else { (pb, pa) };
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .map(|((file_a, file_b), blocks)| ScatterRow { file_a, file_b, blocks })
        .collect()
}

/// Directory components of a path, from root (`"."`) down to the parent.
fn ancestor_dirs(path: &str) -> Vec<String> {
    let normalized = path.replace('\\', "/");
    let absolute = normalized.starts_with('/');
    let parts: Vec<&str> = normalized
        .split('/')
        .filter(|p| !p.is_empty() && *p != ".")
        .collect();
    let mut dirs = vec![".".to_string()];
    for depth in 1..parts.len() {
        let joined = parts[..depth].join("/");
        dirs.push(if absolute { format!("/{joined}") } else { joined });
    }
    dirs
}

/// Rows for a treemap: per directory, the subtree's significant-line total,
/// duplicated-line count, and duplication ratio in [0, 1].
pub fn treemap_data(classes: &[CloneClass], corpus: &[CorpusFile]) -> Vec<TreemapRow> {
    let covered = coverage(classes, corpus);
    let mut totals: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for file in corpus {
        let dup = covered[&file.file_id].iter().filter(|&&c| c).count();
        for dir in ancestor_dirs(&file.path) {
            let entry = totals.entry(dir).or_insert((0, 0));
            entry.0 += file.lines.len();
            entry.1 += dup;
        }
    }
    totals
        .into_iter()
        .map(|(dir, (total, dup))| TreemapRow {
            dir,
            total_sig_lines: total,
            duplicated_lines: dup,
            duplication_ratio: if total == 0 { 0.0 } else { dup as f64 / total as f64 },
        })
        .collect()
}
