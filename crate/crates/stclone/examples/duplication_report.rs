//! Computes the duplication summary plus the scatter and treemap datasets
//! for a directory-shaped corpus.
//!
//! ```bash
//! cargo run --example duplication_report
//! ```

use stclone::detect::{detect, CorpusFile, DetectionConfig};
use stclone::metrics::{compute_metrics, scatter_data, treemap_data};
use stclone::normalize::NormalizationOptions;
use stclone::LanguageId;

fn main() {
    let fragment = "\
init := 0;
IF run THEN
    value := value + step;
    total := total + value;
    count := count + 1;
END_IF;";

    let sources = [
        ("plant/io/read.st", format!("{fragment}\nio_done := TRUE;")),
        ("plant/io/write.st", format!("{fragment}\nio_sync := TRUE;")),
        ("plant/logic/main.st", format!("boot := 1;\n{fragment}")),
        ("plant/logic/aux.st", "aux1 := 1;\naux2 := 2;\naux3 := 3;".to_string()),
    ];

    let config = DetectionConfig {
        options: NormalizationOptions::identifiers(),
        min_lines: 5,
        ..Default::default()
    };
    let corpus: Vec<CorpusFile> = sources
        .iter()
        .enumerate()
        .map(|(id, (path, text))| CorpusFile::from_source(id, *path, LanguageId::St, text, &config))
        .collect();
    let classes = detect(&corpus, &config).unwrap();

    let report = compute_metrics(&classes, &corpus, config.options);
    println!("language            : {}", report.language.display_name());
    println!("option              : {}", report.option);
    println!("files with clones   : {}", report.files_with_clones);
    println!("duplicated lines    : {}", report.duplicated_lines);
    println!("duplicated blocks   : {}", report.duplicated_blocks);
    println!("total files         : {}", report.total_files);
    println!("total sig. lines    : {}", report.total_significant_lines);

    println!("\nScatter rows (file pair -> shared block pairs):");
    for row in scatter_data(&classes, &corpus) {
        println!("  {} <-> {}: {}", row.file_a, row.file_b, row.blocks);
    }

    println!("\nTreemap rows (directory subtree duplication):");
    for row in treemap_data(&classes, &corpus) {
        println!(
            "  {:<14} {:>3} lines, {:>3} duplicated, ratio {:.2}",
            row.dir, row.total_sig_lines, row.duplicated_lines, row.duplication_ratio
        );
    }
}
