//! Line-by-line tokenizer with cross-line comment state.
//!
//! Lexing is total: every non-comment, non-whitespace character lands in
//! exactly one token, and characters with no other interpretation become
//! single-character punctuation tokens. An unterminated block comment
//! consumes to end of file.

use crate::lang::{BlockComment, LanguageId, LanguageProfile};
use crate::token::{Token, TokenKind};

/// Lexer state carried across physical lines.
#[derive(Debug, Clone, Default)]
pub struct LexState {
    /// Index into `profile.block_comments` plus remaining nesting depth.
    open_comment: Option<(usize, u32)>,
}

impl LexState {
    pub fn new() -> LexState {
        LexState::default()
    }

    pub fn in_comment(&self) -> bool {
        self.open_comment.is_some()
    }
}

/// Tokenizes a whole file, one token list per physical line.
///
/// Lines split on LF; a trailing CR is stripped. Token line numbers are
/// 1-based indices of the physical line they came from.
pub fn tokenize(file_text: &str, profile: &LanguageProfile) -> Vec<Vec<Token>> {
    let mut state = LexState::new();
    file_text
        .split('\n')
        .enumerate()
        .map(|(idx, raw)| {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            tokenize_line(line, (idx + 1) as u32, profile, &mut state)
        })
        .collect()
}

/// Tokenizes one physical line, updating the cross-line comment state.
pub fn tokenize_line(
    line: &str,
    line_no: u32,
    profile: &LanguageProfile,
    state: &mut LexState,
) -> Vec<Token> {
    let chars: Vec<char> = line.chars().collect();
    let mut cur = Cursor { chars: &chars, pos: 0 };
    let mut tokens = Vec::new();

    loop {
        if let Some((delim, depth)) = state.open_comment {
            let mut depth = depth;
            if scan_block_comment(&mut cur, &profile.block_comments[delim], &mut depth) {
                state.open_comment = None;
            } else {
                state.open_comment = Some((delim, depth));
                return tokens;
            }
        }

        cur.skip_whitespace();
        if cur.eof() {
            return tokens;
        }

        // A `#` line becomes one verbatim token (comments still stripped).
        if profile.preprocessor_lines && tokens.is_empty() && cur.peek() == Some('#') {
            if let Some(tok) = scan_preprocessor_line(&mut cur, line_no, profile, state) {
                tokens.push(tok);
            }
            return tokens;
        }

        if profile
            .line_comment_openers
            .iter()
            .any(|op| cur.starts_with(op))
        {
            return tokens;
        }

        if let Some(delim) = profile
            .block_comments
            .iter()
            .position(|bc| cur.starts_with(bc.opener))
        {
            cur.advance(profile.block_comments[delim].opener.chars().count());
            state.open_comment = Some((delim, 1));
            continue;
        }

        if let Some((opener, closer)) = profile.pragma_delimiters {
            if cur.starts_with(opener) {
                tokens.push(scan_pragma(&mut cur, opener, closer, line_no));
                continue;
            }
        }

        let c = cur.peek().unwrap();

        if is_string_opener(c, profile.language) {
            tokens.push(scan_string(&mut cur, profile.language, line_no));
            continue;
        }

        if c.is_ascii_digit()
            || (profile.language == LanguageId::Cpp
                && c == '.'
                && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit()))
        {
            tokens.push(scan_number(&mut cur, profile.language, line_no));
            continue;
        }

        if c.is_ascii_alphabetic() || c == '_' || (c == '$' && starts_dollar_identifier(&cur)) {
            tokens.push(scan_word(&mut cur, profile, line_no));
            continue;
        }

        if let Some(op) = profile.operators.iter().find(|op| cur.starts_with(op)) {
            cur.advance(op.chars().count());
            tokens.push(Token::new(TokenKind::Punct, *op, line_no));
            continue;
        }

        cur.advance(1);
        tokens.push(Token::new(TokenKind::Punct, c.to_string(), line_no));
    }
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Cursor<'_> {
    fn eof(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars()
            .enumerate()
            .all(|(i, c)| self.chars.get(self.pos + i) == Some(&c))
    }

    fn advance(&mut self, n: usize) {
        self.pos = (self.pos + n).min(self.chars.len());
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_whitespace(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn take_from(&self, start: usize) -> String {
        self.chars[start..self.pos].iter().collect()
    }
}

/// Returns true once the closer balancing the current opener was found.
fn scan_block_comment(cur: &mut Cursor, bc: &BlockComment, depth: &mut u32) -> bool {
    while !cur.eof() {
        if cur.starts_with(bc.closer) {
            cur.advance(bc.closer.chars().count());
            *depth -= 1;
            if *depth == 0 {
                return true;
            }
        } else if bc.nests && cur.starts_with(bc.opener) {
            cur.advance(bc.opener.chars().count());
            *depth += 1;
        } else {
            cur.advance(1);
        }
    }
    false
}

fn scan_pragma(cur: &mut Cursor, opener: &str, closer: &str, line_no: u32) -> Token {
    let start = cur.pos;
    cur.advance(opener.chars().count());
    while !cur.eof() {
        if cur.starts_with(closer) {
            cur.advance(closer.chars().count());
            break;
        }
        cur.advance(1);
    }
    let text = cur.take_from(start).trim().to_string();
    Token::new(TokenKind::Pragma, text, line_no)
}

fn is_string_opener(c: char, language: LanguageId) -> bool {
    match language {
        // Single quotes for STRING, double quotes for WSTRING.
        LanguageId::St => c == '\'' || c == '"',
        LanguageId::Cpp => c == '"' || c == '\'',
    }
}

/// String/char literal, kept verbatim with its quotes. ST escapes with `$`,
/// C/C++ with `\`. An unterminated literal consumes to end of line.
fn scan_string(cur: &mut Cursor, language: LanguageId, line_no: u32) -> Token {
    let start = cur.pos;
    let quote = cur.bump().unwrap();
    let escape = match language {
        LanguageId::St => '$',
        LanguageId::Cpp => '\\',
    };
    while let Some(c) = cur.bump() {
        if c == escape {
            cur.bump();
        } else if c == quote {
            break;
        }
    }
    Token::new(TokenKind::StringLiteral, cur.take_from(start), line_no)
}

fn scan_number(cur: &mut Cursor, language: LanguageId, line_no: u32) -> Token {
    match language {
        LanguageId::St => scan_st_number(cur, line_no),
        LanguageId::Cpp => scan_cpp_number(cur, line_no),
    }
}

/// C/C++ numbers use the preprocessing-number shape: digits, identifier
/// characters, `.`, digit separators, and signed exponents.
fn scan_cpp_number(cur: &mut Cursor, line_no: u32) -> Token {
    let start = cur.pos;
    let mut prev = cur.bump().unwrap();
    while let Some(c) = cur.peek() {
        let take = c.is_ascii_alphanumeric()
            || c == '_'
            || c == '.'
            || (c == '\'' && cur.peek_at(1).is_some_and(|d| d.is_ascii_alphanumeric()))
            || ((c == '+' || c == '-') && matches!(prev, 'e' | 'E' | 'p' | 'P'));
        if !take {
            break;
        }
        prev = c;
        cur.advance(1);
    }
    Token::new(TokenKind::NumberLiteral, cur.take_from(start), line_no)
}

fn scan_st_number(cur: &mut Cursor, line_no: u32) -> Token {
    let start = cur.pos;
    scan_st_digits(cur);
    if cur.peek() == Some('.') && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit()) {
        cur.advance(1);
        scan_st_digits(cur);
    }
    if matches!(cur.peek(), Some('e') | Some('E')) {
        let signed = matches!(cur.peek_at(1), Some('+') | Some('-'));
        let digit_at = if signed { 2 } else { 1 };
        if cur.peek_at(digit_at).is_some_and(|d| d.is_ascii_digit()) {
            cur.advance(digit_at + 1);
            scan_st_digits(cur);
        }
    }
    // Based literal: `16#FF`, `2#1010_0110`.
    if cur.peek() == Some('#') {
        cur.advance(1);
        scan_st_literal_body(cur);
    }
    Token::new(TokenKind::NumberLiteral, cur.take_from(start), line_no)
}

fn scan_st_digits(cur: &mut Cursor) {
    while cur
        .peek()
        .is_some_and(|c| c.is_ascii_digit() || c == '_')
    {
        cur.advance(1);
    }
}

/// Body of an ST `#` literal. Date and time-of-day parts may contain `-`,
/// `+`, and `:`, but only between digits (or right after `#`), so that
/// `T#5s-x` stops before the minus.
fn scan_st_literal_body(cur: &mut Cursor) {
    let mut prev = '#';
    while let Some(c) = cur.peek() {
        let take = c.is_ascii_alphanumeric()
            || c == '_'
            || c == '.'
            || c == '#'
            || ((c == '-' || c == '+' || c == ':')
                && (prev.is_ascii_digit() || matches!(prev, '#' | ':' | '-'))
                && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit()));
        if !take {
            break;
        }
        prev = c;
        cur.advance(1);
    }
}

/// Prefixes that make an ST `PREFIX#...` literal a time/date literal.
static TIME_LITERAL_PREFIXES: &[&str] = &[
    "T", "LT", "TIME", "LTIME", "D", "LD", "DATE", "LDATE", "TOD", "LTOD", "TIME_OF_DAY",
    "DT", "LDT", "DATE_AND_TIME",
];

fn starts_dollar_identifier(cur: &Cursor) -> bool {
    cur.peek_at(1)
        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '$')
}

/// Identifier, keyword, or (for ST) a typed literal such as `INT#5` where
/// the prefix is part of the literal token.
fn scan_word(cur: &mut Cursor, profile: &LanguageProfile, line_no: u32) -> Token {
    let start = cur.pos;
    cur.advance(1);
    while cur
        .peek()
        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '$')
    {
        cur.advance(1);
    }
    let word = cur.take_from(start);

    if profile.language == LanguageId::St && cur.peek() == Some('#') {
        cur.advance(1);
        scan_st_literal_body(cur);
        let upper = word.to_ascii_uppercase();
        let kind = if TIME_LITERAL_PREFIXES.contains(&upper.as_str()) {
            TokenKind::TimeLiteral
        } else {
            TokenKind::NumberLiteral
        };
        return Token::new(kind, cur.take_from(start), line_no);
    }

    if !word.starts_with('$') && profile.is_keyword(&word) {
        Token::new(TokenKind::Keyword, word, line_no)
    } else {
        Token::new(TokenKind::Identifier, word, line_no)
    }
}

/// Collects a `#...` line verbatim, stripping comments (an inline block
/// comment splices to one space) and honoring string escapes.
fn scan_preprocessor_line(
    cur: &mut Cursor,
    line_no: u32,
    profile: &LanguageProfile,
    state: &mut LexState,
) -> Option<Token> {
    let mut buf = String::new();
    'outer: while let Some(c) = cur.peek() {
        if profile
            .line_comment_openers
            .iter()
            .any(|op| cur.starts_with(op))
        {
            break;
        }
        if let Some(delim) = profile
            .block_comments
            .iter()
            .position(|bc| cur.starts_with(bc.opener))
        {
            let bc = &profile.block_comments[delim];
            cur.advance(bc.opener.chars().count());
            let mut depth = 1;
            if scan_block_comment(cur, bc, &mut depth) {
                buf.push(' ');
                continue;
            }
            state.open_comment = Some((delim, depth));
            break 'outer;
        }
        if c == '"' || c == '\'' {
            let quote = cur.bump().unwrap();
            buf.push(quote);
            while let Some(s) = cur.bump() {
                buf.push(s);
                if s == '\\' {
                    if let Some(esc) = cur.bump() {
                        buf.push(esc);
                    }
                } else if s == quote {
                    break;
                }
            }
            continue;
        }
        buf.push(c);
        cur.advance(1);
    }
    let text = buf.trim();
    if text.is_empty() {
        None
    } else {
        Some(Token::new(TokenKind::PreprocessorText, text, line_no))
    }
}
