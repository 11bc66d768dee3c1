//! Tokens produced by the line lexer.

use std::fmt;

/// Token classification used by the normalizer.
///
/// Comment content never reaches a token; comments are stripped during
/// tokenization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Keyword,
    Identifier,
    NumberLiteral,
    StringLiteral,
    /// ST duration/date/time-of-day literals (`T#5s`, `DT#2024-01-01-00:00:00`).
    TimeLiteral,
    Punct,
    /// ST `{ ... }` pragma region, kept verbatim.
    Pragma,
    /// C/C++ `#...` line, kept verbatim with comments stripped.
    PreprocessorText,
}

impl TokenKind {
    /// Literal kinds are the ones replaced by `$LIT` under literal
    /// normalization.
    pub fn is_literal(self) -> bool {
        matches!(
            self,
            TokenKind::NumberLiteral | TokenKind::StringLiteral | TokenKind::TimeLiteral
        )
    }
}

/// One lexeme with its original 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: u32,
}

impl Token {
    pub fn new(kind: TokenKind, text: impl Into<String>, line: u32) -> Token {
        Token { kind, text: text.into(), line }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.text)
    }
}
