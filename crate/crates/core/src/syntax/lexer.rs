use crate::error::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Semi,
    Tilde,
    Caret,
    Bang,
    Quest,
    Star,
    OPlus,
    AndPos,
    AndNeg,
    And,
    OrPos,
    OrNeg,
    Or,
    ImpPos,
    ImpNeg,
    Imp,
    HashT,
    HashF,
    /// `-->`
    LongArrow,
    /// `-R->`
    RightFocus,
    /// `-{`
    FocusOpen,
    /// `}->`
    FocusClose,
    /// `==>`
    Entails,
    /// `=>>`
    FocusEntails,
    /// `=UP=>`
    Up,
    /// `=DN=>`
    Down,
}

// Longest symbols first so that prefixes never shadow them.
const SYMBOLS: &[(&str, Tok)] = &[
    ("=UP=>", Tok::Up),
    ("=DN=>", Tok::Down),
    ("-R->", Tok::RightFocus),
    ("(+)", Tok::OPlus),
    ("-->", Tok::LongArrow),
    ("}->", Tok::FocusClose),
    ("==>", Tok::Entails),
    ("=>>", Tok::FocusEntails),
    ("->+", Tok::ImpPos),
    ("->-", Tok::ImpNeg),
    ("->", Tok::Imp),
    ("-{", Tok::FocusOpen),
    ("&+", Tok::AndPos),
    ("&-", Tok::AndNeg),
    ("|+", Tok::OrPos),
    ("|-", Tok::OrNeg),
    ("#t", Tok::HashT),
    ("#f", Tok::HashF),
    ("&", Tok::And),
    ("|", Tok::Or),
    ("(", Tok::LParen),
    (")", Tok::RParen),
    ("[", Tok::LBracket),
    ("]", Tok::RBracket),
    (",", Tok::Comma),
    (".", Tok::Dot),
    (";", Tok::Semi),
    ("~", Tok::Tilde),
    ("^", Tok::Caret),
    ("!", Tok::Bang),
    ("?", Tok::Quest),
    ("*", Tok::Star),
];

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = text.as_bytes();
    'outer: while i < bytes.len() {
        let c = text[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        if is_ident_char(c) && c != '\'' {
            let start = i;
            while i < bytes.len() && is_ident_char(bytes[i] as char) {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
            continue;
        }
        for (sym, tok) in SYMBOLS {
            if text[i..].starts_with(sym) {
                out.push((i, tok.clone()));
                i += sym.len();
                continue 'outer;
            }
        }
        return Err(SyntaxError::new(i, format!("unexpected character {c:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_match_wins() {
        let toks: Vec<Tok> = tokenize("a ->- b -> c |- d (+) e")
            .unwrap()
            .into_iter()
            .map(|t| t.1)
            .collect();
        assert_eq!(
            toks,
            vec![
                Tok::Ident("a".into()),
                Tok::ImpNeg,
                Tok::Ident("b".into()),
                Tok::Imp,
                Tok::Ident("c".into()),
                Tok::OrNeg,
                Tok::Ident("d".into()),
                Tok::OPlus,
                Tok::Ident("e".into()),
            ]
        );
    }

    #[test]
    fn rejects_unicode() {
        let err = tokenize("a ∧ b").unwrap_err();
        assert_eq!(err.position, 2);
    }
}
