//! Reading and writing ideals.
//!
//! Text form: `n=3; x1^2, x1*x2^3`. Whitespace between tokens is ignored,
//! variables are 1-indexed and repeated variables in one monomial multiply.
//! `1` denotes the unit monomial and an empty list after `;` the zero ideal.
//! Lines starting with `#` are comments; `# name: <label>` names the ideal.
//!
//! Structured form: `{"n": 3, "gens": [[1,3,0],[2,0,0]], "name": "..."}`.

use monosat_core::{Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub n: usize,
    pub gens: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            n: ideal.dim(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
            name: None,
        }
    }

    pub fn named(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, ParseError> {
        MonomialIdeal::from_exponents(self.n, self.gens.clone()).map_err(|e| {
            ParseError::Dimension {
                line: 1,
                column: 1,
                message: e.to_string(),
            }
        })
    }

    /// Canonical text form; a name becomes a leading `# name:` line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str("# name: ");
            out.push_str(name);
            out.push('\n');
        }
        out.push_str(&format!("n={};", self.n));
        for (i, g) in self.gens.iter().enumerate() {
            out.push_str(if i == 0 { " " } else { ", " });
            out.push_str(&Monomial::new(g.clone()).to_string());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: exponent overflow")]
    Overflow { line: usize, column: usize },
    #[error("{line}:{column}: {message}")]
    Dimension {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid JSON document: {0}")]
    Json(String),
}

/// A parsed ideal in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub doc: IdealDocument,
    pub ideal: MonomialIdeal,
    /// Set when the listed generators were not minimal.
    pub warning: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    N,
    X,
    Eq,
    Semi,
    Comma,
    Star,
    Caret,
    Int(u64),
}

struct Lexer<'a> {
    src: &'a str,
    tokens: Vec<(Tok, usize)>,
    name: Option<String>,
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.chars().count(), |p| before[p + 1..].chars().count())
        + 1;
    (line, column)
}

impl<'a> Lexer<'a> {
    fn syntax(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = line_col(self.src, offset);
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn run(src: &'a str) -> Result<Self, ParseError> {
        let mut lx = Lexer {
            src,
            tokens: Vec::new(),
            name: None,
        };
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'#' => {
                    let end = src[i..].find('\n').map_or(src.len(), |p| i + p);
                    let comment = src[i + 1..end].trim();
                    if let Some(name) = comment.strip_prefix("name:") {
                        lx.name = Some(name.trim().to_string());
                    }
                    i = end;
                    continue;
                }
                c if c.is_ascii_whitespace() => {}
                b'n' => lx.tokens.push((Tok::N, i)),
                b'x' => lx.tokens.push((Tok::X, i)),
                b'=' => lx.tokens.push((Tok::Eq, i)),
                b';' => lx.tokens.push((Tok::Semi, i)),
                b',' => lx.tokens.push((Tok::Comma, i)),
                b'*' => lx.tokens.push((Tok::Star, i)),
                b'^' => lx.tokens.push((Tok::Caret, i)),
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let value = src[start..i].parse::<u64>().map_err(|_| {
                        let (line, column) = line_col(src, start);
                        ParseError::Overflow { line, column }
                    })?;
                    lx.tokens.push((Tok::Int(value), start));
                    continue;
                }
                _ => {
                    let ch = src[i..].chars().next().unwrap_or('?');
                    return Err(lx.syntax(i, format!("unexpected character '{}'", ch)));
                }
            }
            i += 1;
        }
        Ok(lx)
    }
}

struct Parser<'a> {
    lx: Lexer<'a>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok> {
        self.lx.tokens.get(self.pos).map(|t| t.0)
    }

    fn offset(&self) -> usize {
        self.lx
            .tokens
            .get(self.pos)
            .map_or(self.lx.src.len(), |t| t.1)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.lx.syntax(self.offset(), format!("expected {}", what)))
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, usize), ParseError> {
        match self.lx.tokens.get(self.pos) {
            Some(&(Tok::Int(v), off)) => {
                self.pos += 1;
                Ok((v, off))
            }
            _ => Err(self.lx.syntax(self.offset(), format!("expected {}", what))),
        }
    }

    fn monomial(&mut self, n: usize) -> Result<Vec<u64>, ParseError> {
        let mut exps = vec![0u64; n];
        if let Some(Tok::Int(1)) = self.peek() {
            self.pos += 1;
            return Ok(exps);
        }
        loop {
            self.expect(Tok::X, "a variable such as x1")?;
            let (var, off) = self.int("a variable index")?;
            if var == 0 || var as usize > n {
                let (line, column) = line_col(self.lx.src, off);
                return Err(ParseError::Dimension {
                    line,
                    column,
                    message: format!("variable x{} outside 1..={}", var, n),
                });
            }
            let mut e = 1;
            if self.peek() == Some(Tok::Caret) {
                self.pos += 1;
                e = self.int("an exponent")?.0;
            }
            let slot = &mut exps[var as usize - 1];
            *slot = slot.checked_add(e).ok_or_else(|| {
                let (line, column) = line_col(self.lx.src, off);
                ParseError::Overflow { line, column }
            })?;
            if self.peek() == Some(Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(exps);
            }
        }
    }

    fn document(&mut self) -> Result<IdealDocument, ParseError> {
        self.expect(Tok::N, "'n='")?;
        self.expect(Tok::Eq, "'='")?;
        let (n, off) = self.int("the number of variables")?;
        if n == 0 {
            let (line, column) = line_col(self.lx.src, off);
            return Err(ParseError::Dimension {
                line,
                column,
                message: "n must be positive".into(),
            });
        }
        let n = n as usize;
        self.expect(Tok::Semi, "';'")?;
        let mut gens = Vec::new();
        if self.peek().is_some() {
            gens.push(self.monomial(n)?);
            while self.peek() == Some(Tok::Comma) {
                self.pos += 1;
                gens.push(self.monomial(n)?);
            }
        }
        if self.peek().is_some() {
            return Err(self
                .lx
                .syntax(self.offset(), "expected ',' or end of input"));
        }
        Ok(IdealDocument {
            n,
            gens,
            name: self.lx.name.take(),
        })
    }
}

fn canonicalize(doc: IdealDocument) -> Result<Parsed, ParseError> {
    let listed = doc.gens.len();
    let ideal = doc.to_ideal()?;
    let canonical = IdealDocument::from_ideal(&ideal).named(doc.name);
    let warning = (ideal.num_gens() < listed).then(|| {
        format!(
            "{} listed generators reduced to {} minimal generators",
            listed,
            ideal.num_gens()
        )
    });
    Ok(Parsed {
        doc: canonical,
        ideal,
        warning,
    })
}

/// Parses the text grammar into a canonical document.
pub fn parse_ideal(text: &str) -> Result<Parsed, ParseError> {
    let lx = Lexer::run(text)?;
    let doc = Parser { lx, pos: 0 }.document()?;
    canonicalize(doc)
}

pub fn parse_json(text: &str) -> Result<Parsed, ParseError> {
    let doc: IdealDocument =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if doc.n == 0 {
        return Err(ParseError::Json("n must be positive".into()));
    }
    for (i, g) in doc.gens.iter().enumerate() {
        if g.len() != doc.n {
            return Err(ParseError::Json(format!(
                "generator {} has {} exponents, expected {}",
                i,
                g.len(),
                doc.n
            )));
        }
    }
    canonicalize(doc)
}

/// Accepts either format, choosing JSON when the input starts with `{`.
pub fn parse_any(text: &str) -> Result<Parsed, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_ideal(text)
    }
}
