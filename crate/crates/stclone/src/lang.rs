//! Language profiles: the lexical rules that drive tokenization and
//! normalization for each supported language.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Supported source languages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LanguageId {
    /// IEC 61131-3 Structured Text.
    St,
    /// C and C++ (treated as one profile).
    Cpp,
}

impl LanguageId {
    pub fn as_str(self) -> &'static str {
        match self {
            LanguageId::St => "st",
            LanguageId::Cpp => "cpp",
        }
    }

    /// Table-style display name.
    pub fn display_name(self) -> &'static str {
        match self {
            LanguageId::St => "ST",
            LanguageId::Cpp => "C/C++",
        }
    }

    pub fn parse(s: &str) -> Option<LanguageId> {
        match s.to_ascii_lowercase().as_str() {
            "st" | "iec" | "structured-text" => Some(LanguageId::St),
            "cpp" | "c" | "c++" | "cxx" => Some(LanguageId::Cpp),
            _ => None,
        }
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A pair of block-comment delimiters, plus whether the comment form nests.
#[derive(Debug, Clone)]
pub struct BlockComment {
    pub opener: &'static str,
    pub closer: &'static str,
    /// Depth-counted nesting (ST `(* (* *) *)`); C-style comments do not nest.
    pub nests: bool,
}

/// Lexical rules of one language.
///
/// Keywords are stored in one canonical case; for case-insensitive languages
/// (ST) lookup folds the probe to that case.
#[derive(Debug, Clone)]
pub struct LanguageProfile {
    pub language: LanguageId,
    pub case_insensitive: bool,
    keywords: HashSet<&'static str>,
    pub line_comment_openers: &'static [&'static str],
    pub block_comments: &'static [BlockComment],
    /// ST pragma braces; the whole `{...}` region becomes one Pragma token.
    pub pragma_delimiters: Option<(&'static str, &'static str)>,
    /// Lines whose first non-blank character is `#` become one verbatim token.
    pub preprocessor_lines: bool,
    /// Multi-character punctuation, longest first.
    pub operators: &'static [&'static str],
}

impl LanguageProfile {
    pub fn for_language(language: LanguageId) -> LanguageProfile {
        match language {
            LanguageId::St => LanguageProfile::st(),
            LanguageId::Cpp => LanguageProfile::cpp(),
        }
    }

    /// IEC 61131-3 Structured Text.
    pub fn st() -> LanguageProfile {
        LanguageProfile {
            language: LanguageId::St,
            case_insensitive: true,
            keywords: ST_KEYWORDS.iter().copied().collect(),
            line_comment_openers: &["//"],
            block_comments: &[
                BlockComment { opener: "(*", closer: "*)", nests: true },
                BlockComment { opener: "/*", closer: "*/", nests: false },
            ],
            pragma_delimiters: Some(("{", "}")),
            preprocessor_lines: false,
            operators: ST_OPERATORS,
        }
    }

    /// C/C++ with the C++17 keyword set.
    pub fn cpp() -> LanguageProfile {
        LanguageProfile {
            language: LanguageId::Cpp,
            case_insensitive: false,
            keywords: CPP_KEYWORDS.iter().copied().collect(),
            line_comment_openers: &["//"],
            block_comments: &[BlockComment { opener: "/*", closer: "*/", nests: false }],
            pragma_delimiters: None,
            preprocessor_lines: true,
            operators: CPP_OPERATORS,
        }
    }

    /// Keyword lookup with the profile's case rule.
    pub fn is_keyword(&self, text: &str) -> bool {
        if self.case_insensitive {
            self.keywords.contains(text.to_ascii_uppercase().as_str())
        } else {
            self.keywords.contains(text)
        }
    }

    /// Canonical spelling of a keyword (upper case for ST, verbatim otherwise).
    pub fn canonical_keyword(&self, text: &str) -> String {
        if self.case_insensitive {
            text.to_ascii_uppercase()
        } else {
            text.to_string()
        }
    }
}

/// IEC 61131-3 keywords and elementary type names, canonical upper case.
static ST_KEYWORDS: &[&str] = &[
    // control flow
    "IF", "THEN", "ELSE", "ELSIF", "END_IF", "CASE", "OF", "END_CASE", "FOR", "TO", "BY", "DO",
    "END_FOR", "WHILE", "END_WHILE", "REPEAT", "UNTIL", "END_REPEAT", "EXIT", "CONTINUE",
    "RETURN",
    // program organization units
    "FUNCTION", "END_FUNCTION", "FUNCTION_BLOCK", "END_FUNCTION_BLOCK", "PROGRAM", "END_PROGRAM",
    "METHOD", "END_METHOD", "ACTION", "END_ACTION", "CONFIGURATION", "END_CONFIGURATION",
    "RESOURCE", "END_RESOURCE", "TASK", "WITH", "STEP", "END_STEP", "TRANSITION",
    "END_TRANSITION", "INITIAL_STEP",
    // variable sections
    "VAR", "VAR_INPUT", "VAR_OUTPUT", "VAR_IN_OUT", "VAR_GLOBAL", "VAR_EXTERNAL", "VAR_TEMP",
    "VAR_ACCESS", "VAR_CONFIG", "END_VAR", "CONSTANT", "RETAIN", "NON_RETAIN", "PERSISTENT",
    "AT",
    // type declarations
    "TYPE", "END_TYPE", "STRUCT", "END_STRUCT", "ARRAY", "POINTER", "REF_TO",
    // operators and literals
    "AND", "OR", "XOR", "NOT", "MOD", "TRUE", "FALSE", "NULL",
    // elementary types
    "BOOL", "BYTE", "WORD", "DWORD", "LWORD", "SINT", "INT", "DINT", "LINT", "USINT", "UINT",
    "UDINT", "ULINT", "REAL", "LREAL", "TIME", "LTIME", "DATE", "LDATE", "TIME_OF_DAY", "TOD",
    "DATE_AND_TIME", "DT", "STRING", "WSTRING", "CHAR", "WCHAR", "ANY", "ANY_NUM", "ANY_INT",
];

/// C++17 keywords (elementary type names included).
static CPP_KEYWORDS: &[&str] = &[
    "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break",
    "case", "catch", "char", "char16_t", "char32_t", "class", "compl", "const", "constexpr",
    "const_cast", "continue", "decltype", "default", "delete", "do", "double", "dynamic_cast",
    "else", "enum", "explicit", "export", "extern", "false", "float", "for", "friend", "goto",
    "if", "inline", "int", "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq",
    "nullptr", "operator", "or", "or_eq", "private", "protected", "public", "register",
    "reinterpret_cast", "restrict", "return", "short", "signed", "sizeof", "static",
    "static_assert", "static_cast", "struct", "switch", "template", "this", "thread_local",
    "throw", "true", "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
    "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq",
];

/// ST multi-character punctuation, longest first.
static ST_OPERATORS: &[&str] = &[":=", "=>", "**", "..", "<>", "<=", ">="];

/// C/C++ multi-character punctuation, longest first.
static CPP_OPERATORS: &[&str] = &[
    "<<=", ">>=", "->*", "...", "<=>", "::", "->", ".*", "<<", ">>", "<=", ">=", "==", "!=",
    "&&", "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "++", "--",
];
