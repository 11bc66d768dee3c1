//! Detects clone classes over a small in-memory corpus: one exact copy and
//! one identifier-renamed copy of the same routine.
//!
//! ```bash
//! cargo run --example detect_clones
//! ```

use stclone::detect::{detect, CorpusFile, DetectionConfig};
use stclone::normalize::ALL_OPTIONS;
use stclone::LanguageId;

fn routine(prefix: &str) -> String {
    format!(
        "\
{prefix}_state := 0;
IF {prefix}_enable THEN
    {prefix}_state := {prefix}_state + 1;
    {prefix}_out := {prefix}_state * 2;
    {prefix}_log := TRUE;
END_IF;"
    )
}

fn main() {
    // pump.st and valve.st share the fragment verbatim; mixer.st renames
    // every identifier (a Type 2 clone).
    let sources = [
        ("pump.st", format!("start := TRUE;\n{}\nstop := FALSE;", routine("pump"))),
        ("valve.st", format!("v0 := 9;\n{}\nv1 := 10;", routine("pump"))),
        ("mixer.st", format!("m0 := 3;\n{}\nm1 := 4;", routine("mixer"))),
    ];

    for options in ALL_OPTIONS {
        let config = DetectionConfig { options, min_lines: 5, ..Default::default() };
        let corpus: Vec<CorpusFile> = sources
            .iter()
            .enumerate()
            .map(|(id, (path, text))| {
                CorpusFile::from_source(id, *path, LanguageId::St, text, &config)
            })
            .collect();

        let classes = detect(&corpus, &config).expect("corpus has significant lines");
        println!("{} -> {} clone class(es)", options.display_label(), classes.len());
        for class in &classes {
            println!("  class {} ({} lines per block):", class.class_id, class.sig_count);
            for block in &class.blocks {
                println!(
                    "    {} lines {}-{}",
                    corpus[block.file_id].path, block.start_line, block.end_line
                );
            }
        }
    }
}
