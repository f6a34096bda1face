use super::{Diagnostic, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    /// Identifier or number: `[A-Za-z0-9_']+`, a leading `-` before a digit,
    /// and `/digits` after a number.
    Word(String),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Eq,
    Lt,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("'{w}'"),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Colon => "':'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Eq => "'='".into(),
            Tok::Lt => "'<'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_word(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits the text into tokens; `#` starts a comment running to end of line.
pub fn lex(text: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col);
            }
            continue;
        }
        let digit_at = |k: usize| chars.get(k).is_some_and(|c| c.is_ascii_digit());
        if is_word(c) || (c == '-' && digit_at(i + 1)) {
            let mut w = String::new();
            w.push(c);
            advance(&mut i, &mut line, &mut col);
            while i < chars.len() && is_word(chars[i]) {
                w.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            let numeric = w
                .trim_start_matches('-')
                .chars()
                .all(|c| c.is_ascii_digit());
            if numeric && i < chars.len() && chars[i] == '/' && digit_at(i + 1) {
                w.push('/');
                advance(&mut i, &mut line, &mut col);
                while digit_at(i) {
                    w.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
            }
            out.push((Tok::Word(w), span));
            continue;
        }
        if c == '"' {
            advance(&mut i, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None | Some('\n') => {
                        return Err(Diagnostic::syntax(span, "unterminated string"))
                    }
                    Some('"') => {
                        advance(&mut i, &mut line, &mut col);
                        break;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(&mut i, &mut line, &mut col);
                    }
                }
            }
            out.push((Tok::Str(s), span));
            continue;
        }
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '<' => Tok::Lt,
            '-' if chars.get(i + 1) == Some(&'>') => {
                advance(&mut i, &mut line, &mut col);
                Tok::Arrow
            }
            _ => {
                return Err(Diagnostic::syntax(
                    span,
                    format!("unexpected character '{c}'"),
                ))
            }
        };
        advance(&mut i, &mut line, &mut col);
        out.push((tok, span));
    }
    out.push((Tok::Eof, Span { line, col }));
    Ok(out)
}
