//! Line normalization and fingerprinting.
//!
//! A normalized line is the deterministic canonical text of its tokens,
//! joined by single spaces. The two placeholder symbols `$ID` and `$LIT`
//! are fixed points of normalization, which makes normalizing a re-lexed
//! normalized line a no-op under every option.

use serde::{Deserialize, Serialize};

use crate::lang::LanguageProfile;
use crate::lexer::tokenize;
use crate::token::{Token, TokenKind};

/// Symbol substituted for identifiers under identifier normalization.
pub const ID_PLACEHOLDER: &str = "$ID";
/// Symbol substituted for literals under literal normalization.
pub const LIT_PLACEHOLDER: &str = "$LIT";

/// Which token kinds are replaced by common symbols before fingerprinting.
///
/// `(false, false)` is the plain-text mode; the four combinations select
/// the detector's four capability levels.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizationOptions {
    pub normalize_identifiers: bool,
    pub normalize_literals: bool,
}

/// All four option combinations, coarsest last.
pub const ALL_OPTIONS: [NormalizationOptions; 4] = [
    NormalizationOptions { normalize_identifiers: false, normalize_literals: false },
    NormalizationOptions { normalize_identifiers: true, normalize_literals: false },
    NormalizationOptions { normalize_identifiers: false, normalize_literals: true },
    NormalizationOptions { normalize_identifiers: true, normalize_literals: true },
];

impl NormalizationOptions {
    pub const fn none() -> Self {
        NormalizationOptions { normalize_identifiers: false, normalize_literals: false }
    }

    pub const fn identifiers() -> Self {
        NormalizationOptions { normalize_identifiers: true, normalize_literals: false }
    }

    pub const fn literals() -> Self {
        NormalizationOptions { normalize_identifiers: false, normalize_literals: true }
    }

    pub const fn all() -> Self {
        NormalizationOptions { normalize_identifiers: true, normalize_literals: true }
    }

    /// True when every normalization enabled in `other` is enabled here.
    pub fn is_superset_of(self, other: NormalizationOptions) -> bool {
        (self.normalize_identifiers || !other.normalize_identifiers)
            && (self.normalize_literals || !other.normalize_literals)
    }

    /// Machine label used in artifacts and flags.
    pub fn label(self) -> &'static str {
        match (self.normalize_identifiers, self.normalize_literals) {
            (false, false) => "default",
            (true, false) => "identifier",
            (false, true) => "literal",
            (true, true) => "identifier+literal",
        }
    }

    /// Report-style display label.
    pub fn display_label(self) -> &'static str {
        match (self.normalize_identifiers, self.normalize_literals) {
            (false, false) => "Default",
            (true, false) => "Identifier",
            (false, true) => "Literal",
            (true, true) => "Identifier/Literal",
        }
    }

    pub fn parse(s: &str) -> Option<NormalizationOptions> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" | "default" | "text" => Some(Self::none()),
            "identifier" | "identifiers" | "id" => Some(Self::identifiers()),
            "literal" | "literals" | "lit" => Some(Self::literals()),
            "identifier+literal" | "identifier/literal" | "both" | "all" => Some(Self::all()),
            _ => None,
        }
    }
}

/// One normalized, fingerprinted source line.
///
/// Fingerprint equality only implies text equality after verification;
/// consumers compare `normalized_text` before declaring a match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignificantLine {
    /// 1-based physical line number in the original file.
    pub original_line: u32,
    pub normalized_text: String,
    pub fingerprint: u64,
}

/// FNV-1a over the normalized text. Stable across platforms and releases.
pub fn fingerprint64(text: &str) -> u64 {
    fingerprint_bytes(text.as_bytes())
}

/// FNV-1a over raw bytes.
pub fn fingerprint_bytes(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in bytes {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Canonical text of one line's tokens under the given options.
///
/// Keywords fold to the profile's canonical case; ST identifiers fold to
/// lower case even when identifiers are not normalized (the language is
/// case-insensitive); pragma and preprocessor tokens stay verbatim.
pub fn normalize_line(
    tokens: &[Token],
    options: NormalizationOptions,
    profile: &LanguageProfile,
) -> String {
    let mut out = String::new();
    for token in tokens {
        if !out.is_empty() {
            out.push(' ');
        }
        match token.kind {
            TokenKind::Keyword => {
                if profile.case_insensitive {
                    out.push_str(&profile.canonical_keyword(&token.text));
                } else {
                    out.push_str(&token.text);
                }
            }
            TokenKind::Identifier => {
                if token.text == ID_PLACEHOLDER || token.text == LIT_PLACEHOLDER {
                    out.push_str(&token.text);
                } else if options.normalize_identifiers {
                    out.push_str(ID_PLACEHOLDER);
                } else if profile.case_insensitive {
                    out.push_str(&token.text.to_ascii_lowercase());
                } else {
                    out.push_str(&token.text);
                }
            }
            TokenKind::NumberLiteral | TokenKind::StringLiteral | TokenKind::TimeLiteral => {
                if options.normalize_literals {
                    out.push_str(LIT_PLACEHOLDER);
                } else {
                    out.push_str(&token.text);
                }
            }
            TokenKind::Punct | TokenKind::Pragma | TokenKind::PreprocessorText => {
                out.push_str(&token.text);
            }
        }
    }
    out
}

/// Extracts the significant lines of a file: exactly the lines whose token
/// list is non-empty after comment stripping, in file order.
pub fn significant_lines(
    file_text: &str,
    profile: &LanguageProfile,
    options: NormalizationOptions,
) -> Vec<SignificantLine> {
    significant_lines_filtered(file_text, profile, options, false)
}

/// Like [`significant_lines`], optionally excluding punctuation-only lines
/// (for example a lone `}`), which are significant by default.
pub fn significant_lines_filtered(
    file_text: &str,
    profile: &LanguageProfile,
    options: NormalizationOptions,
    ignore_punct_lines: bool,
) -> Vec<SignificantLine> {
    tokenize(file_text, profile)
        .iter()
        .filter(|tokens| !tokens.is_empty())
        .filter(|tokens| {
            !ignore_punct_lines || tokens.iter().any(|t| t.kind != TokenKind::Punct)
        })
        .map(|tokens| {
            let normalized_text = normalize_line(tokens, options, profile);
            SignificantLine {
                original_line: tokens[0].line,
                fingerprint: fingerprint64(&normalized_text),
                normalized_text,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    fn normalize_str(
        line: &str,
        options: NormalizationOptions,
        profile: &LanguageProfile,
    ) -> String {
        let lines = tokenize(line, profile);
        normalize_line(&lines[0], options, profile)
    }

    #[test]
    fn st_full_normalization() {
        let st = LanguageProfile::st();
        assert_eq!(
            normalize_str("Counter := counter + 1;", NormalizationOptions::all(), &st),
            "$ID := $ID + $LIT ;"
        );
    }

    #[test]
    fn st_case_canonicalization_without_normalization() {
        let st = LanguageProfile::st();
        assert_eq!(
            normalize_str("if Done THEN", NormalizationOptions::none(), &st),
            "IF done THEN"
        );
        // Same text for any casing of keywords and identifiers.
        for variant in ["If A THEN", "IF a then", "iF A tHeN"] {
            for options in ALL_OPTIONS {
                assert_eq!(
                    normalize_str(variant, options, &st),
                    normalize_str("IF a THEN", options, &st),
                    "{variant} under {options:?}"
                );
            }
        }
    }

    #[test]
    fn cpp_literal_only_normalization_keeps_identifiers() {
        let cpp = LanguageProfile::cpp();
        assert_eq!(
            normalize_str("int total = 0;", NormalizationOptions::literals(), &cpp),
            "int total = $LIT ;"
        );
    }

    #[test]
    fn significance_skips_blank_and_comment_only_lines() {
        let st = LanguageProfile::st();
        let lines = significant_lines("x := 1;\n\n(* only a comment *)\n", &st, NormalizationOptions::none());
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].original_line, 1);
    }

    #[test]
    fn lone_closing_brace_is_significant() {
        let cpp = LanguageProfile::cpp();
        let text = "void f() {\n  g();\n}\n\n\n\nint h;\n";
        let lines = significant_lines(text, &cpp, NormalizationOptions::none());
        let brace = lines.iter().find(|l| l.normalized_text == "}").unwrap();
        assert_eq!(brace.original_line, 3);
        // ...unless punctuation-only lines are excluded.
        let filtered =
            significant_lines_filtered(text, &cpp, NormalizationOptions::none(), true);
        assert!(filtered.iter().all(|l| l.normalized_text != "}"));
        assert_eq!(filtered.len(), lines.len() - 1);
    }

    #[test]
    fn generated_file_significant_count_matches_classifier() {
        // 500 physical lines of which 120 are comment-only or blank, by
        // construction; the remaining 380 must come back as significant.
        let mut lines = Vec::new();
        let mut skipped = 0;
        for i in 0..500 {
            if skipped < 120 && i % 4 == 1 {
                lines.push(if i % 8 == 1 { String::new() } else { format!("(* note {i} *)") });
                skipped += 1;
            } else {
                lines.push(format!("v{i} := {i};"));
            }
        }
        assert_eq!(skipped, 120);
        let text = lines.join("\n");
        let st = LanguageProfile::st();
        let significant = significant_lines(&text, &st, NormalizationOptions::none());
        assert_eq!(significant.len(), 380);
        // Line numbers point back at the physical code lines.
        for line in &significant {
            assert!(lines[(line.original_line - 1) as usize].starts_with('v'));
        }
    }

    #[test]
    fn fingerprint_matches_text_equality_on_samples() {
        let st = LanguageProfile::st();
        let a = significant_lines("x := 1;\ny := 2;\nx := 1;", &st, NormalizationOptions::none());
        assert_eq!(a[0].fingerprint, a[2].fingerprint);
        assert_ne!(a[0].fingerprint, a[1].fingerprint);
    }

    #[test]
    fn placeholders_are_fixed_points() {
        let st = LanguageProfile::st();
        let cpp = LanguageProfile::cpp();
        for options in ALL_OPTIONS {
            assert_eq!(normalize_str("$ID := $LIT ;", options, &st), "$ID := $LIT ;");
            assert_eq!(normalize_str("$ID = $LIT ;", options, &cpp), "$ID = $LIT ;");
        }
    }

    #[test]
    fn normalization_is_idempotent_on_spec_examples() {
        let st = LanguageProfile::st();
        let cpp = LanguageProfile::cpp();
        let samples: [(&LanguageProfile, &str); 6] = [
            (&st, "Counter := counter + 1; (* bump *)"),
            (&st, "IF x >= T#5s THEN y := 16#FF; END_IF;"),
            (&st, "{warning disabled} s := 'it$'s';"),
            (&cpp, "for (int i = 0; i < n; ++i) total += v[i];"),
            (&cpp, "#define MAX 10 /* cap */"),
            (&cpp, "const char* s = \"a b\"; // text"),
        ];
        for (profile, raw) in samples {
            for options in ALL_OPTIONS {
                let once = normalize_str(raw, options, profile);
                let twice = normalize_str(&once, options, profile);
                assert_eq!(once, twice, "{raw} under {options:?}");
            }
        }
    }

    #[test]
    fn option_labels_round_trip() {
        for options in ALL_OPTIONS {
            assert_eq!(NormalizationOptions::parse(options.label()), Some(options));
        }
        assert_eq!(NormalizationOptions::parse("text"), Some(NormalizationOptions::none()));
        assert_eq!(NormalizationOptions::parse("bogus"), None);
    }

    #[test]
    fn superset_ordering() {
        let all = NormalizationOptions::all();
        for options in ALL_OPTIONS {
            assert!(all.is_superset_of(options));
            assert!(options.is_superset_of(NormalizationOptions::none()));
        }
        assert!(!NormalizationOptions::identifiers()
            .is_superset_of(NormalizationOptions::literals()));
    }
}
