use std::fmt::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::seqparse::parse_term;
use super::{Calculus, Inst, ProofTree, Sequent};
use crate::error::SyntaxError;
use crate::syntax::{parse_iformula_with, tokenize, ParseOptions, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(format!(
                "unknown format {s:?} (expected text, latex or json)"
            )),
        }
    }
}

pub fn render(p: &ProofTree, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            text(p, 0, &mut out);
            out
        }
        Format::Latex => {
            let mut out = String::new();
            latex(p, 0, &mut out);
            out.push('\n');
            out
        }
        Format::Json => to_json(p),
    }
}

fn text(p: &ProofTree, depth: usize, out: &mut String) {
    let inst = p
        .inst
        .as_ref()
        .map(|i| format!(" ({i})"))
        .unwrap_or_default();
    let _ = writeln!(
        out,
        "{}{}{inst}: {}",
        "  ".repeat(depth),
        p.rule,
        p.conclusion
    );
    for q in &p.premises {
        text(q, depth + 1, out);
    }
}

/// Macros assumed by the LaTeX output (with the `proof` package).
pub const LATEX_PREAMBLE: &str = r"\usepackage{proof}
\newcommand{\leftfcs}[1]{\xrightarrow{#1}}
\newcommand{\rightfcs}[1]{\xrightarrow{}\,\underline{#1}}
\newcommand{\lpar}{\mathbin{\rotatebox[origin=c]{180}{\&}}}
";

fn latex(p: &ProofTree, depth: usize, out: &mut String) {
    let pad = " ".repeat(depth);
    let _ = write!(
        out,
        "{pad}\\infer[{}]{{{}}}{{",
        latex_rule(&p.rule),
        latex_sequent(&p.conclusion)
    );
    for (i, q) in p.premises.iter().enumerate() {
        out.push('\n');
        if i > 0 {
            let _ = writeln!(out, "{pad} &");
        }
        latex(q, depth + 1, out);
    }
    out.push('}');
}

fn latex_rule(rule: &str) -> String {
    let fixed = match rule {
        "Ir" => "I_r",
        "Il" => "I_l",
        "Rl" => "R_l",
        "Rr" => "R_r",
        "[]l" => "\\mbox{$[]_l$}",
        "[]r" => "\\mbox{$[]_r$}",
        "->L" => "\\supset\\!L",
        "->R" => "\\supset\\!R",
        "&-L" => "\\wedge^{\\!-}L",
        "&+L" => "\\wedge^{\\!+}L",
        "&-R" => "\\wedge^{\\!-}R",
        "&+R" => "\\wedge^{\\!+}R",
        "|L" => "\\vee L",
        "|R" => "\\vee R",
        "existsL" => "\\exists L",
        "existsR" => "\\exists R",
        "forallL" => "\\forall L",
        "forallR" => "\\forall R",
        "Store" => "[]",
        "ID+" => "ID^+",
        "ID-" => "ID^-",
        "&-" => "\\wedge^{\\!-}",
        "&+" => "\\wedge^{\\!+}",
        "|-" => "\\vee^{\\!-}",
        "|+" => "\\vee^{\\!+}",
        "exists" => "\\exists",
        "forall" => "\\forall",
        "bot" => "\\bot",
        "top" => "\\top",
        "par" => "\\lpar",
        "tensor" => "\\otimes",
        "one" => "{\\bf 1}",
        "&" => "\\&",
        "plus_l" => "\\oplus_l",
        "plus_r" => "\\oplus_r",
        "Rup" => "R\\Uparrow",
        "Rdown" => "R\\Downarrow",
        "I1" => "I_1",
        "I2" => "I_2",
        "D1" => "D_1",
        "D2" => "D_2",
        "Cut+" => "Cut^+",
        "Cut-" => "Cut^-",
        "Cut1<-" => "Cut_1^\\leftarrow",
        "Cut2<-" => "Cut_2^\\leftarrow",
        "Cut->" => "Cut^\\rightarrow",
        _ => "",
    };
    if fixed.is_empty() {
        format!("\\mathit{{{}}}", escape(rule))
    } else {
        fixed.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('_', "\\_")
        .replace('&', "\\&")
        .replace('#', "\\#")
}

/// Re-reads the ASCII form of a sequent token by token.
fn latex_sequent(s: &Sequent) -> String {
    let printed = s.to_string();
    let toks = tokenize(&printed).expect("printed sequents re-tokenize");
    let mut out: Vec<String> = Vec::new();
    let mut close_at_end = false;
    for (_, tok) in toks {
        let piece = match tok {
            Tok::Ident(name) => match name.as_str() {
                "true" | "false" => format!("\\hbox{{\\sl {name}}}"),
                "forall" => "\\forall".into(),
                "exists" => "\\exists".into(),
                "top" => "\\top".into(),
                "bot" => "\\bot".into(),
                "par" => "\\lpar".into(),
                "1" if s.calculus() == Calculus::Llf => "{\\bf 1}".into(),
                n if n.chars().count() > 1 => format!("\\mathit{{{}}}", escape(n)),
                n => n.to_string(),
            },
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::LBracket => "[".into(),
            Tok::RBracket => "]".into(),
            Tok::Comma => ",".into(),
            Tok::Dot => ".".into(),
            Tok::Semi => ":".into(),
            Tok::Tilde => "\\neg".into(),
            Tok::Caret => "^\\bot".into(),
            Tok::Bang => "\\mathop{!}".into(),
            Tok::Quest => "\\mathop{?}".into(),
            Tok::Star => "\\otimes".into(),
            Tok::OPlus => "\\oplus".into(),
            Tok::AndPos => "\\wedge^{\\!+}".into(),
            Tok::AndNeg => "\\wedge^{\\!-}".into(),
            Tok::And => "\\&".into(),
            Tok::OrPos => "\\vee^{\\!+}".into(),
            Tok::OrNeg => "\\vee^{\\!-}".into(),
            Tok::Or => "\\vee".into(),
            Tok::ImpPos => "\\supset^{\\!+}".into(),
            Tok::ImpNeg => "\\supset^{\\!-}".into(),
            Tok::Imp => "\\supset".into(),
            Tok::HashT => "{\\cal T}".into(),
            Tok::HashF => "{\\cal F}".into(),
            Tok::LongArrow => "\\longrightarrow".into(),
            Tok::FocusOpen => "\\leftfcs{".into(),
            Tok::FocusClose => "}".into(),
            Tok::RightFocus => {
                close_at_end = true;
                "\\rightfcs{".into()
            }
            Tok::Entails => {
                if s.calculus() == Calculus::Lj {
                    "\\vdash_{\\!I}".into()
                } else {
                    "\\vdash".into()
                }
            }
            Tok::FocusEntails => "\\mapsto".into(),
            Tok::Up => "\\Uparrow".into(),
            Tok::Down => "\\Downarrow".into(),
        };
        out.push(piece);
    }
    let mut joined = out.join(" ");
    if close_at_end {
        joined.push('}');
    }
    joined
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    calculus: String,
    rule: String,
    sequent: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inst: Option<String>,
    premises: Vec<JsonNode>,
}

fn to_node(p: &ProofTree) -> JsonNode {
    JsonNode {
        calculus: p.calculus().name().to_string(),
        rule: p.rule.clone(),
        sequent: p.conclusion.to_string(),
        inst: p.inst.as_ref().map(Inst::to_string),
        premises: p.premises.iter().map(to_node).collect(),
    }
}

pub fn to_json(p: &ProofTree) -> String {
    serde_json::to_string_pretty(&to_node(p)).expect("proof trees serialize")
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed proof JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown calculus {0:?}")]
    Calculus(String),
    #[error("bad sequent {sequent:?}: {error}")]
    Sequent { sequent: String, error: SyntaxError },
    #[error("bad instantiation {0:?}")]
    Inst(String),
}

pub fn from_json(text: &str) -> Result<ProofTree, JsonError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let node = JsonNode::deserialize(&mut de)?;
    de.end()?;
    from_node(node)
}

fn from_node(n: JsonNode) -> Result<ProofTree, JsonError> {
    let calculus =
        Calculus::from_name(&n.calculus).ok_or_else(|| JsonError::Calculus(n.calculus.clone()))?;
    let bad = |error| JsonError::Sequent {
        sequent: n.sequent.clone(),
        error,
    };
    let conclusion = match calculus {
        Calculus::Ljf => Sequent::Ljf(n.sequent.parse().map_err(bad)?),
        Calculus::Lkf => Sequent::Lkf(n.sequent.parse().map_err(bad)?),
        Calculus::Llf => Sequent::Llf(n.sequent.parse().map_err(bad)?),
        Calculus::Lj => Sequent::Lj(n.sequent.parse().map_err(bad)?),
    };
    let inst = match &n.inst {
        None => None,
        Some(s) => Some(parse_inst(s).ok_or_else(|| JsonError::Inst(s.clone()))?),
    };
    let premises = n
        .premises
        .into_iter()
        .map(from_node)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProofTree {
        rule: n.rule,
        conclusion,
        premises,
        inst,
    })
}

fn parse_inst(s: &str) -> Option<Inst> {
    if let Some(t) = s.strip_prefix("term:") {
        parse_term(t).ok().map(Inst::Term)
    } else if let Some(f) = s.strip_prefix("formula:") {
        parse_iformula_with(f, ParseOptions::internal())
            .ok()
            .map(Inst::Principal)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_text() {
        let p = ProofTree::new("Ir", Sequent::Ljf("[a, b] -R-> a".parse().unwrap()), vec![]);
        assert_eq!(render(&p, Format::Text), "Ir: [a, b] -R-> a\n");
    }

    #[test]
    fn json_round_trip_with_inst() {
        let p = ProofTree::new(
            "existsR",
            Sequent::Ljf("[] -R-> exists x. p(x)".parse().unwrap()),
            vec![ProofTree::new(
                "Ir",
                Sequent::Ljf("[p(c)] -R-> p(c)".parse().unwrap()),
                vec![],
            )],
        )
        .with_inst(Inst::Term(crate::syntax::Term::constant("c")));
        let back = from_json(&to_json(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn latex_uses_focus_macros() {
        let s = Sequent::Ljf("[a] -{a -> b}-> [c]".parse().unwrap());
        assert_eq!(latex_sequent(&s), "[ a ] \\leftfcs{ a \\supset b } [ c ]");
    }
}
