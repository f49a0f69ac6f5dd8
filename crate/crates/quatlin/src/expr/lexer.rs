use quatlin_core::Axis;

use super::error::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Number(f64),
    /// A number with an imaginary suffix, e.g. `2i` or `0.5k`.
    Imaginary(f64, Axis),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    Equals,
    Semi,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Number(v) => format!("number `{v}`"),
            Tok::Imaginary(v, a) => format!("imaginary literal `{v}{}`", axis_char(*a)),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn axis_char(a: Axis) -> char {
    match a {
        Axis::I => 'i',
        Axis::J => 'j',
        Axis::K => 'k',
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut idx, mut line, mut col) = (0usize, 1usize, 1usize);

    while idx < chars.len() {
        let c = chars[idx];
        let pos = Pos { line, col };
        if c == '\n' {
            idx += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            idx += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            ';' => Some(Tok::Semi),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, pos });
            idx += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = idx;
            let mut end = scan_number(&chars, idx);
            let text: String = chars[start..end].iter().collect();
            let value: f64 = text
                .parse()
                .map_err(|_| ParseError::new(pos, ParseErrorKind::BadNumber(text.clone())))?;
            let suffix = chars.get(end).copied().and_then(|s| match s {
                'i' => Some(Axis::I),
                'j' => Some(Axis::J),
                'k' => Some(Axis::K),
                _ => None,
            });
            let tok = match suffix {
                Some(axis) if !chars.get(end + 1).is_some_and(|n| is_ident_char(*n)) => {
                    end += 1;
                    Tok::Imaginary(value, axis)
                }
                _ => Tok::Number(value),
            };
            if chars.get(end).is_some_and(|n| is_ident_char(*n)) {
                return Err(ParseError::new(
                    Pos {
                        line,
                        col: col + (end - start),
                    },
                    ParseErrorKind::Unexpected(format!("`{}` after number", chars[end])),
                ));
            }
            out.push(Token { tok, pos });
            col += end - start;
            idx = end;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = idx;
            while idx < chars.len() && is_ident_char(chars[idx]) {
                idx += 1;
            }
            let name: String = chars[start..idx].iter().collect();
            col += idx - start;
            out.push(Token {
                tok: Tok::Ident(name),
                pos,
            });
            continue;
        }
        return Err(ParseError::new(
            pos,
            ParseErrorKind::Unexpected(format!("character `{c}`")),
        ));
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// End index of a decimal literal starting at `idx`: digits, optional
/// fraction, optional exponent.
fn scan_number(chars: &[char], mut idx: usize) -> usize {
    let digits = |chars: &[char], mut i: usize| {
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    idx = digits(chars, idx);
    if chars.get(idx) == Some(&'.') {
        idx = digits(chars, idx + 1);
    }
    if matches!(chars.get(idx), Some('e' | 'E')) {
        let mut exp = idx + 1;
        if matches!(chars.get(exp), Some('+' | '-')) {
            exp += 1;
        }
        if chars.get(exp).is_some_and(|c| c.is_ascii_digit()) {
            idx = digits(chars, exp);
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers_and_suffixes() {
        assert_eq!(
            toks("1.5e2 2i .5k 3 j"),
            vec![
                Tok::Number(150.0),
                Tok::Imaginary(2.0, Axis::I),
                Tok::Imaginary(0.5, Axis::K),
                Tok::Number(3.0),
                Tok::Ident("j".into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions_track_lines() {
        let t = tokenize("f = q;\n  g(q)").unwrap();
        let g = t.iter().find(|t| t.tok == Tok::Ident("g".into())).unwrap();
        assert_eq!(g.pos, Pos { line: 2, col: 3 });
    }

    #[test]
    fn rejects_stray_characters() {
        let err = tokenize("q # 2").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        assert!(tokenize("2x").is_err());
    }
}
