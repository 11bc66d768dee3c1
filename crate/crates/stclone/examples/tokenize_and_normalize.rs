//! Tokenizes Structured Text and C++ lines and shows how the four
//! normalization options rewrite them.
//!
//! ```bash
//! cargo run --example tokenize_and_normalize
//! ```

use stclone::lexer::tokenize;
use stclone::normalize::{normalize_line, ALL_OPTIONS};
use stclone::LanguageProfile;

fn main() {
    let st = LanguageProfile::st();
    let st_source = "\
Counter := counter + 1; (* bump the counter *)
IF Done THEN
    limit := 16#FF;
    delay := T#250ms;
END_IF;";

    println!("Structured Text tokens (comments stripped, case-insensitive):");
    for line in tokenize(st_source, &st) {
        if line.is_empty() {
            continue;
        }
        let rendered: Vec<String> = line.iter().map(ToString::to_string).collect();
        println!("  line {}: {}", line[0].line, rendered.join(" "));
    }

    println!("\nThe same lines under each normalization option:");
    for options in ALL_OPTIONS {
        println!("  {}:", options.display_label());
        for line in tokenize(st_source, &st) {
            if !line.is_empty() {
                println!("    {}", normalize_line(&line, options, &st));
            }
        }
    }

    // C/C++ keeps identifier case and folds preprocessor lines into one
    // verbatim token.
    let cpp = LanguageProfile::cpp();
    let cpp_source = "\
#include <limits.h> /* bounds */
int total = 0x1F; // hex start
total += counter;";

    println!("\nC++ under Literal normalization:");
    for line in tokenize(cpp_source, &cpp) {
        if !line.is_empty() {
            println!(
                "  {}",
                normalize_line(&line, stclone::NormalizationOptions::literals(), &cpp)
            );
        }
    }
}
