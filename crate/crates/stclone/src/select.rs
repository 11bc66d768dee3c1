//! Ranking and sampling of clone classes into inspection study groups.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{CloneClass, CorpusFile};
use crate::lang::LanguageId;
use crate::normalize::NormalizationOptions;

/// Selection approaches for picking clones out of a result set.
///
/// `Random`, `Lines`, and `Blocks` are the standard three; `TopLinesDesc`
/// (largest clones first) is an optional extra and is not part of the
/// default strategy list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    /// Seeded uniform shuffle.
    Random,
    /// Ascending by the number of significant lines a class spans.
    Lines,
    /// Ascending by the number of blocks a class includes.
    Blocks,
    /// Descending by line count.
    TopLinesDesc,
}

impl StrategyKind {
    pub fn label(self) -> &'static str {
        match self {
            StrategyKind::Random => "random",
            StrategyKind::Lines => "lines",
            StrategyKind::Blocks => "blocks",
            StrategyKind::TopLinesDesc => "top-lines-desc",
        }
    }

    pub fn parse(s: &str) -> Option<StrategyKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "random" => Some(StrategyKind::Random),
            "lines" => Some(StrategyKind::Lines),
            "blocks" => Some(StrategyKind::Blocks),
            "top-lines-desc" | "top-lines" => Some(StrategyKind::TopLinesDesc),
            _ => None,
        }
    }

    /// The default strategy list.
    pub fn standard() -> Vec<StrategyKind> {
        vec![StrategyKind::Random, StrategyKind::Lines, StrategyKind::Blocks]
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A selection strategy with the seed used by [`StrategyKind::Random`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionStrategy {
    pub kind: StrategyKind,
    pub seed: u64,
}

/// The ranking view of one clone class: enough to order classes without
/// holding the full corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub class_id: usize,
    pub sig_count: usize,
    pub block_count: usize,
    /// Path and start line of the first block, the ranking tie-break.
    pub first_path: String,
    pub first_start_line: u32,
}

impl ClassSummary {
    pub fn from_class(class: &CloneClass, corpus: &[CorpusFile]) -> ClassSummary {
        let first = &class.blocks[0];
        let path = corpus
            .iter()
            .find(|f| f.file_id == first.file_id)
            .map(|f| f.path.clone())
            .unwrap_or_default();
        ClassSummary {
            class_id: class.class_id,
            sig_count: class.sig_count,
            block_count: class.blocks.len(),
            first_path: path,
            first_start_line: first.start_line,
        }
    }
}

/// Orders class ids by the given strategy.
///
/// `Lines` and `Blocks` sort ascending with a `(first_path,
/// first_start_line)` tie-break, so the order is independent of input
/// order. `Random` applies a ChaCha8 shuffle seeded from the strategy seed,
/// identical across runs and platforms for the same seed.
pub fn rank(classes: &[ClassSummary], strategy: SelectionStrategy) -> Vec<usize> {
    let mut order: Vec<&ClassSummary> = classes.iter().collect();
    order.sort_by(|a, b| {
        a.first_path
            .cmp(&b.first_path)
            .then_with(|| a.first_start_line.cmp(&b.first_start_line))
            .then_with(|| a.class_id.cmp(&b.class_id))
    });
    match strategy.kind {
        StrategyKind::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
            order.shuffle(&mut rng);
        }
        StrategyKind::Lines => order.sort_by_key(|c| c.sig_count),
        StrategyKind::Blocks => order.sort_by_key(|c| c.block_count),
        StrategyKind::TopLinesDesc => order.sort_by_key(|c| std::cmp::Reverse(c.sig_count)),
    }
    order.into_iter().map(|c| c.class_id).collect()
}

/// One study group: the clones selected for a `(language, option,
/// strategy)` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StudyGroup {
    pub language: LanguageId,
    /// Machine label of the normalization option.
    pub option: String,
    pub strategy: StrategyKind,
    pub clone_ids: Vec<usize>,
}

/// A cell of the study grid that yielded an empty group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmptyCell {
    pub language: LanguageId,
    pub option: String,
    pub strategy: StrategyKind,
}

/// The assembled study plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StudyPlan {
    pub k: usize,
    pub seed: u64,
    pub groups: Vec<StudyGroup>,
    /// Cells that produced no clones; recorded, not fatal.
    pub warnings: Vec<EmptyCell>,
}

impl StudyPlan {
    pub fn total_entries(&self) -> usize {
        self.groups.iter().map(|g| g.clone_ids.len()).sum()
    }
}

/// Assembles study groups over a `(language, option)` grid of detection
/// results.
///
/// For each cell and each strategy, the group takes the first `k` ranked
/// ids not yet used within that cell, so a clone is inspected at most once
/// per cell. Within a cell the deterministic strategies allocate before the
/// Random ones (groups are still emitted in the given strategy order), so
/// changing the seed changes only the Random groups. Groups may be shorter
/// than `k` when classes run out.
pub fn sample_study_set(
    results: &BTreeMap<(LanguageId, NormalizationOptions), Vec<ClassSummary>>,
    strategies: &[StrategyKind],
    k: usize,
    seed: u64,
) -> StudyPlan {
    assert!(k >= 1, "group size must be at least 1");
    assert!(
        (1..strategies.len()).all(|i| !strategies[..i].contains(&strategies[i])),
        "strategies must be unique, group keys would collide"
    );
    let mut groups = Vec::new();
    let mut warnings = Vec::new();
    let allocation_order: Vec<usize> = {
        let (fixed, random): (Vec<usize>, Vec<usize>) =
            (0..strategies.len()).partition(|&i| strategies[i] != StrategyKind::Random);
        fixed.into_iter().chain(random).collect()
    };
    for (&(language, options), classes) in results {
        let mut used: HashSet<usize> = HashSet::new();
        let mut cell_groups: Vec<Option<StudyGroup>> = vec![None; strategies.len()];
        for &slot in &allocation_order {
            let kind = strategies[slot];
            let ranked = rank(classes, SelectionStrategy { kind, seed });
            let clone_ids: Vec<usize> = ranked
                .into_iter()
                .filter(|id| !used.contains(id))
                .take(k)
                .collect();
            used.extend(&clone_ids);
            if clone_ids.is_empty() {
                warnings.push(EmptyCell {
                    language,
                    option: options.label().to_string(),
                    strategy: kind,
                });
            }
            cell_groups[slot] = Some(StudyGroup {
                language,
                option: options.label().to_string(),
                strategy: kind,
                clone_ids,
            });
        }
        groups.extend(cell_groups.into_iter().flatten());
    }
    StudyPlan { k, seed, groups, warnings }
}
