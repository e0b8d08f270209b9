use crate::error::SyntaxError;
use crate::syntax::{ParseOptions, Parser, Term, Tok};

pub(crate) fn parser(text: &str) -> Result<Parser, SyntaxError> {
    Parser::new(text, ParseOptions::internal())
}

/// Comma-separated items up to (not including) `close`; may be empty.
pub(crate) fn items<T>(
    p: &mut Parser,
    close: &Tok,
    mut item: impl FnMut(&mut Parser) -> Result<T, SyntaxError>,
) -> Result<Vec<T>, SyntaxError> {
    let mut out = Vec::new();
    if p.peek() == Some(close) {
        return Ok(out);
    }
    loop {
        out.push(item(p)?);
        if !p.eat(&Tok::Comma) {
            return Ok(out);
        }
    }
}

/// `[ item, ... ]`
pub(crate) fn bracketed<T>(
    p: &mut Parser,
    item: impl FnMut(&mut Parser) -> Result<T, SyntaxError>,
) -> Result<Vec<T>, SyntaxError> {
    p.expect(&Tok::LBracket, "'['")?;
    let out = items(p, &Tok::RBracket, item)?;
    p.expect(&Tok::RBracket, "']'")?;
    Ok(out)
}

pub(crate) fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut p = parser(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}
