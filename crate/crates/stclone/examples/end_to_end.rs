//! Walks a real directory tree and runs the whole pipeline: load, detect,
//! report, and sample a study plan.
//!
//! Writes a small demo corpus into a temporary directory first, so the
//! example is self-contained.
//!
//! ```bash
//! cargo run --example end_to_end
//! ```

use std::collections::BTreeMap;
use std::fs;

use stclone::corpus::{load_corpus, CorpusSpec, LanguageMap};
use stclone::detect::{detect, CorpusFile, DetectionConfig};
use stclone::metrics::compute_metrics;
use stclone::normalize::ALL_OPTIONS;
use stclone::select::{sample_study_set, ClassSummary, StrategyKind};
use stclone::LanguageId;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("stclone-end-to-end");
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(dir.join("plc"))?;
    fs::create_dir_all(dir.join("native"))?;

    let st_block = "\
stage := 0;
WHILE stage < limit DO
    buffer[stage] := source[stage];
    checksum := checksum + buffer[stage];
    stage := stage + 1;
END_WHILE;";
    fs::write(dir.join("plc/copy_a.st"), format!("(* variant A *)\n{st_block}\nready := TRUE;"))?;
    fs::write(dir.join("plc/copy_b.st"), format!("(* variant B *)\ninit := 1;\n{st_block}"))?;
    let renamed = st_block.replace("stage", "idx").replace("buffer", "dst").replace("checksum", "crc");
    fs::write(dir.join("plc/copy_c.st"), format!("(* renamed variant *)\n{renamed}"))?;

    let cpp_block = "\
int acc = 0;
for (int i = 0; i < n; ++i) {
    acc += input[i];
    output[i] = acc;
}
return acc;";
    fs::write(dir.join("native/fold_a.cpp"), cpp_block)?;
    fs::write(dir.join("native/fold_b.cpp"), format!("// duplicated fold\n{cpp_block}"))?;

    let spec = CorpusSpec {
        roots: vec![dir.clone()],
        languages: LanguageMap::default(),
        ..Default::default()
    };
    let outcome = load_corpus(&spec)?;
    println!("loaded {} files from {}", outcome.files.len(), dir.display());

    // Detect per language and option, collecting the study grid.
    let mut results: BTreeMap<_, Vec<ClassSummary>> = BTreeMap::new();
    for options in ALL_OPTIONS {
        let config = DetectionConfig { options, min_lines: 5, ..Default::default() };
        for language in [LanguageId::Cpp, LanguageId::St] {
            let corpus: Vec<CorpusFile> = outcome
                .files
                .iter()
                .filter(|f| f.language == language)
                .enumerate()
                .map(|(id, f)| {
                    CorpusFile::from_source(id, f.path.clone(), f.language, &f.text, &config)
                })
                .collect();
            let classes = detect(&corpus, &config)?;
            let report = compute_metrics(&classes, &corpus, options);
            println!(
                "{:<6} {:<19} files_with_clones={} duplicated_lines={} blocks={}",
                language.display_name(),
                options.display_label(),
                report.files_with_clones,
                report.duplicated_lines,
                report.duplicated_blocks
            );
            results.insert(
                (language, options),
                classes.iter().map(|c| ClassSummary::from_class(c, &corpus)).collect(),
            );
        }
    }

    let plan = sample_study_set(&results, &StrategyKind::standard(), 2, 11);
    println!(
        "\nstudy plan: {} clones in {} groups ({} empty cells)",
        plan.total_entries(),
        plan.groups.len(),
        plan.warnings.len()
    );

    fs::remove_dir_all(&dir)?;
    Ok(())
}
