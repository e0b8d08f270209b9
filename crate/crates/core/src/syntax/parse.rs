use super::cformula::CFormula;
use super::iformula::IFormula;
use super::lexer::{tokenize, Tok};
use super::lformula::LFormula;
use super::term::{Atom, Term};
use crate::error::SyntaxError;

/// Identifiers with a grammar role; never usable as atom names.
pub const KEYWORDS: &[&str] = &["true", "false", "forall", "exists", "par", "top", "bot"];

/// Reserved name of the distinguished positive atom used by the classical embedding.
pub const PHI: &str = "_phi";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ParseOptions {
    /// Accept identifiers starting with `_` (fresh constants, `_phi`).
    pub allow_reserved: bool,
    /// Read the unannotated `&` as `&+` instead of `&-`.
    pub plain_conj_pos: bool,
}

impl ParseOptions {
    pub(crate) fn internal() -> Self {
        ParseOptions {
            allow_reserved: true,
            plain_conj_pos: false,
        }
    }
}

/// Parses user input in the intuitionistic grammar.
pub fn parse_iformula(text: &str) -> Result<IFormula, SyntaxError> {
    parse_iformula_with(text, ParseOptions::default())
}

pub fn parse_iformula_with(text: &str, opts: ParseOptions) -> Result<IFormula, SyntaxError> {
    let mut p = Parser::new(text, opts)?;
    let f = p.iformula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a comma-separated list of intuitionistic formulas (possibly empty).
pub fn parse_ilist(text: &str, opts: ParseOptions) -> Result<Vec<IFormula>, SyntaxError> {
    let mut p = Parser::new(text, opts)?;
    let mut out = Vec::new();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        out.push(p.iformula()?);
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.finish()?;
    Ok(out)
}

/// Parses the classical grammar, normalizing `~` and both implications into NNF.
pub fn classical_nnf(text: &str) -> Result<CFormula, SyntaxError> {
    parse_cformula_with(text, ParseOptions::default())
}

pub fn parse_cformula_with(text: &str, opts: ParseOptions) -> Result<CFormula, SyntaxError> {
    let mut p = Parser::new(text, opts)?;
    let f = p.cformula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_lformula(text: &str) -> Result<LFormula, SyntaxError> {
    let mut p = Parser::new(text, ParseOptions::internal())?;
    let f = p.lformula()?;
    p.finish()?;
    Ok(f)
}

pub(crate) struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    bound: Vec<String>,
    opts: ParseOptions,
}

impl Parser {
    pub(crate) fn new(text: &str, opts: ParseOptions) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
            bound: Vec::new(),
            opts,
        })
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), SyntaxError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> SyntaxError {
        let found = match self.peek() {
            Some(t) => format!("{t:?}"),
            None => "end of input".to_string(),
        };
        SyntaxError::new(self.offset(), format!("{}, found {found}", message.into()))
    }

    pub(crate) fn finish(&self) -> Result<(), SyntaxError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                if s.starts_with('_') && !self.opts.allow_reserved {
                    return Err(self.error(format!("identifier {s:?} is reserved")));
                }
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected identifier")),
        }
    }

    fn binder(&mut self) -> Result<String, SyntaxError> {
        let at = self.offset();
        let x = self.ident()?;
        if KEYWORDS.contains(&x.as_str()) || x.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            return Err(SyntaxError::new(
                at,
                format!("{x:?} cannot be a bound variable"),
            ));
        }
        self.expect(&Tok::Dot, "'.' after bound variable")?;
        Ok(x)
    }

    pub(crate) fn term(&mut self) -> Result<Term, SyntaxError> {
        let at = self.offset();
        let name = self.ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(SyntaxError::new(
                at,
                format!("keyword {name:?} used as a term"),
            ));
        }
        if self.eat(&Tok::LParen) {
            let args = self.term_list()?;
            return Ok(Term::App(name, args));
        }
        if self.bound.iter().any(|b| b == &name) {
            return Ok(Term::Var(name));
        }
        if name.starts_with(|c: char| c.is_ascii_uppercase()) {
            return Err(SyntaxError::new(at, format!("unbound variable {name:?}")));
        }
        Ok(Term::App(name, Vec::new()))
    }

    fn term_list(&mut self) -> Result<Vec<Term>, SyntaxError> {
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(&Tok::RParen, "')' closing argument list")?;
        Ok(args)
    }

    fn atom(&mut self) -> Result<Atom, SyntaxError> {
        let at = self.offset();
        let name = self.ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(SyntaxError::new(
                at,
                format!("keyword {name:?} used as an atom"),
            ));
        }
        if !name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return Err(SyntaxError::new(
                at,
                format!("atom name {name:?} must start with a letter"),
            ));
        }
        let args = if self.eat(&Tok::LParen) {
            self.term_list()?
        } else {
            Vec::new()
        };
        Ok(Atom::new(name, args))
    }

    fn with_bound<T>(
        &mut self,
        x: String,
        body: impl FnOnce(&mut Self) -> Result<T, SyntaxError>,
    ) -> Result<T, SyntaxError> {
        self.bound.push(x);
        let r = body(self);
        self.bound.pop();
        r
    }

    // ---- intuitionistic ----

    pub(crate) fn iformula(&mut self) -> Result<IFormula, SyntaxError> {
        let lhs = self.i_or()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.iformula()?;
            return Ok(IFormula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn i_or(&mut self) -> Result<IFormula, SyntaxError> {
        let mut f = self.i_conj_neg()?;
        while self.eat(&Tok::Or) {
            f = IFormula::disj(f, self.i_conj_neg()?);
        }
        Ok(f)
    }

    fn i_conj_neg(&mut self) -> Result<IFormula, SyntaxError> {
        let mut f = self.i_conj_pos()?;
        loop {
            if self.eat(&Tok::AndNeg) || (!self.opts.plain_conj_pos && self.eat(&Tok::And)) {
                f = IFormula::conj_neg(f, self.i_conj_pos()?);
            } else {
                return Ok(f);
            }
        }
    }

    fn i_conj_pos(&mut self) -> Result<IFormula, SyntaxError> {
        let mut f = self.i_prefix()?;
        loop {
            if self.eat(&Tok::AndPos) || (self.opts.plain_conj_pos && self.eat(&Tok::And)) {
                f = IFormula::conj_pos(f, self.i_prefix()?);
            } else {
                return Ok(f);
            }
        }
    }

    fn i_prefix(&mut self) -> Result<IFormula, SyntaxError> {
        if self.eat(&Tok::Tilde) {
            return Ok(IFormula::not(self.i_prefix()?));
        }
        self.i_primary()
    }

    fn i_primary(&mut self) -> Result<IFormula, SyntaxError> {
        if self.eat(&Tok::LParen) {
            let f = self.iformula()?;
            self.expect(&Tok::RParen, "')'")?;
            return Ok(f);
        }
        for (kw, is_forall) in [("forall", true), ("exists", false)] {
            if self.peek_keyword(kw) {
                self.pos += 1;
                let x = self.binder()?;
                let body = self.with_bound(x.clone(), |p| p.iformula())?;
                return Ok(if is_forall {
                    IFormula::forall(x, body)
                } else {
                    IFormula::exists(x, body)
                });
            }
        }
        if self.peek_keyword("true") {
            self.pos += 1;
            return Ok(IFormula::True);
        }
        if self.peek_keyword("false") {
            self.pos += 1;
            return Ok(IFormula::False);
        }
        if matches!(self.peek(), Some(Tok::Ident(_))) {
            return Ok(IFormula::Atom(self.atom()?));
        }
        Err(self.error("expected a formula"))
    }

    // ---- classical ----

    pub(crate) fn cformula(&mut self) -> Result<CFormula, SyntaxError> {
        let lhs = self.c_or_neg()?;
        if self.eat(&Tok::ImpPos) {
            let rhs = self.cformula()?;
            return Ok(CFormula::imp_pos(lhs, rhs));
        }
        if self.eat(&Tok::ImpNeg) || self.eat(&Tok::Imp) {
            let rhs = self.cformula()?;
            return Ok(CFormula::imp_neg(lhs, rhs));
        }
        Ok(lhs)
    }

    fn c_or_neg(&mut self) -> Result<CFormula, SyntaxError> {
        let mut f = self.c_or_pos()?;
        while self.eat(&Tok::OrNeg) || self.eat(&Tok::Or) {
            f = CFormula::or_neg(f, self.c_or_pos()?);
        }
        Ok(f)
    }

    fn c_or_pos(&mut self) -> Result<CFormula, SyntaxError> {
        let mut f = self.c_and_neg()?;
        while self.eat(&Tok::OrPos) {
            f = CFormula::or_pos(f, self.c_and_neg()?);
        }
        Ok(f)
    }

    fn c_and_neg(&mut self) -> Result<CFormula, SyntaxError> {
        let mut f = self.c_and_pos()?;
        while self.eat(&Tok::AndNeg) || self.eat(&Tok::And) {
            f = CFormula::and_neg(f, self.c_and_pos()?);
        }
        Ok(f)
    }

    fn c_and_pos(&mut self) -> Result<CFormula, SyntaxError> {
        let mut f = self.c_prefix()?;
        while self.eat(&Tok::AndPos) {
            f = CFormula::and_pos(f, self.c_prefix()?);
        }
        Ok(f)
    }

    fn c_prefix(&mut self) -> Result<CFormula, SyntaxError> {
        if self.eat(&Tok::Tilde) {
            return Ok(self.c_prefix()?.negate());
        }
        self.c_primary()
    }

    fn c_primary(&mut self) -> Result<CFormula, SyntaxError> {
        if self.eat(&Tok::LParen) {
            let f = self.cformula()?;
            self.expect(&Tok::RParen, "')'")?;
            return Ok(f);
        }
        if self.eat(&Tok::HashT) {
            return Ok(CFormula::True);
        }
        if self.eat(&Tok::HashF) {
            return Ok(CFormula::False);
        }
        for (kw, is_forall) in [("forall", true), ("exists", false)] {
            if self.peek_keyword(kw) {
                self.pos += 1;
                let x = self.binder()?;
                let body = self.with_bound(x.clone(), |p| p.cformula())?;
                return Ok(if is_forall {
                    CFormula::forall(x, body)
                } else {
                    CFormula::exists(x, body)
                });
            }
        }
        if self.peek_keyword("true") {
            self.pos += 1;
            return Ok(CFormula::True);
        }
        if self.peek_keyword("false") {
            self.pos += 1;
            return Ok(CFormula::False);
        }
        if matches!(self.peek(), Some(Tok::Ident(_))) {
            return Ok(CFormula::PosLit(self.atom()?));
        }
        Err(self.error("expected a classical formula"))
    }

    // ---- linear ----

    pub(crate) fn lformula(&mut self) -> Result<LFormula, SyntaxError> {
        let mut f = self.l_with()?;
        while self.eat(&Tok::OPlus) {
            f = LFormula::plus(f, self.l_with()?);
        }
        Ok(f)
    }

    fn l_with(&mut self) -> Result<LFormula, SyntaxError> {
        let mut f = self.l_par()?;
        while self.eat(&Tok::And) {
            f = LFormula::with(f, self.l_par()?);
        }
        Ok(f)
    }

    fn l_par(&mut self) -> Result<LFormula, SyntaxError> {
        let mut f = self.l_tensor()?;
        while self.peek_keyword("par") {
            self.pos += 1;
            f = LFormula::par(f, self.l_tensor()?);
        }
        Ok(f)
    }

    fn l_tensor(&mut self) -> Result<LFormula, SyntaxError> {
        let mut f = self.l_prefix()?;
        while self.eat(&Tok::Star) {
            f = LFormula::tensor(f, self.l_prefix()?);
        }
        Ok(f)
    }

    fn l_prefix(&mut self) -> Result<LFormula, SyntaxError> {
        if self.eat(&Tok::Bang) {
            return Ok(LFormula::bang(self.l_prefix()?));
        }
        if self.eat(&Tok::Quest) {
            return Ok(LFormula::quest(self.l_prefix()?));
        }
        self.l_primary()
    }

    fn l_primary(&mut self) -> Result<LFormula, SyntaxError> {
        if self.eat(&Tok::LParen) {
            let f = self.lformula()?;
            self.expect(&Tok::RParen, "')'")?;
            return Ok(f);
        }
        for (kw, is_forall) in [("forall", true), ("exists", false)] {
            if self.peek_keyword(kw) {
                self.pos += 1;
                let x = self.binder()?;
                let body = self.with_bound(x.clone(), |p| p.lformula())?;
                return Ok(if is_forall {
                    LFormula::forall(x, body)
                } else {
                    LFormula::exists(x, body)
                });
            }
        }
        let constant = match self.peek() {
            Some(Tok::Ident(s)) => match s.as_str() {
                "1" => Some(LFormula::One),
                "0" => Some(LFormula::Zero),
                "top" => Some(LFormula::Top),
                "bot" => Some(LFormula::Bot),
                _ => None,
            },
            _ => None,
        };
        if let Some(c) = constant {
            self.pos += 1;
            return Ok(c);
        }
        if matches!(self.peek(), Some(Tok::Ident(_))) {
            let a = self.atom()?;
            if self.eat(&Tok::Caret) {
                return Ok(LFormula::NegAtom(a));
            }
            return Ok(LFormula::Atom(a));
        }
        Err(self.error("expected a linear formula"))
    }
}
