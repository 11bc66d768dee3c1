//! Ranks clone classes with the selection strategies and assembles study
//! groups over a (language, option) grid.
//!
//! ```bash
//! cargo run --example sample_study_groups
//! ```

use std::collections::BTreeMap;

use stclone::normalize::{NormalizationOptions, ALL_OPTIONS};
use stclone::select::{rank, sample_study_set, ClassSummary, SelectionStrategy, StrategyKind};
use stclone::LanguageId;

/// Fake detection results: class ids with line spans and block counts.
fn cell_classes(offset: usize) -> Vec<ClassSummary> {
    (0..12)
        .map(|i| ClassSummary {
            class_id: i + 1,
            sig_count: 5 + (i * 3 + offset) % 9,
            block_count: 2 + (i + offset) % 4,
            first_path: format!("src/unit{:02}.st", (i * 7 + offset) % 10),
            first_start_line: (10 * i + 1) as u32,
        })
        .collect()
}

fn main() {
    let classes = cell_classes(0);
    println!("Ranking the same twelve classes with each strategy:");
    for kind in [
        StrategyKind::Lines,
        StrategyKind::Blocks,
        StrategyKind::TopLinesDesc,
        StrategyKind::Random,
    ] {
        let order = rank(&classes, SelectionStrategy { kind, seed: 42 });
        println!("  {:<15} {:?}", kind.label(), order);
    }

    // One result set per (language, option) cell, as detect would produce.
    let mut results: BTreeMap<(LanguageId, NormalizationOptions), Vec<ClassSummary>> =
        BTreeMap::new();
    for (li, language) in [LanguageId::St, LanguageId::Cpp].into_iter().enumerate() {
        for (oi, options) in ALL_OPTIONS.into_iter().enumerate() {
            results.insert((language, options), cell_classes(li * 4 + oi));
        }
    }

    let strategies = StrategyKind::standard();
    let plan = sample_study_set(&results, &strategies, 3, 42);
    println!(
        "\nStudy plan: {} clones across {} groups (k = {}, seed = {}):",
        plan.total_entries(),
        plan.groups.len(),
        plan.k,
        plan.seed
    );
    for group in &plan.groups {
        println!(
            "  {:<4} {:<19} {:<8} -> {:?}",
            group.language.to_string(),
            group.option,
            group.strategy.to_string(),
            group.clone_ids
        );
    }
    if !plan.warnings.is_empty() {
        println!("  (<{} empty cells recorded>)", plan.warnings.len());
    }
}
