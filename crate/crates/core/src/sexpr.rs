//! Text form of diagrams: `(v a b)`, `(h a b)`, `(id B F)` and bare
//! generator names. `Display` on [`Diagram`] is the printer.

use thiserror::Error;

use crate::diagram::Diagram;
use crate::linear::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected `{token}` at byte {offset}")]
    Unexpected { token: String, offset: usize },
    #[error("trailing input at byte {0}")]
    Trailing(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(Token<'_>, usize)> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                out.push((Token::Open, i));
                i += 1;
            }
            b')' => {
                out.push((Token::Close, i));
                i += 1;
            }
            b if b.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len() && !matches!(bytes[i], b'(' | b')') && !bytes[i].is_ascii_whitespace() {
                    i += 1;
                }
                out.push((Token::Atom(&text[start..i]), start));
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<(Token<'a>, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<(Token<'a>, usize), ParseError> {
        let t = self.tokens.get(self.pos).cloned().ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expr(&mut self) -> Result<Diagram, ParseError> {
        match self.next()? {
            (Token::Atom(name), _) => Ok(Diagram::generator(name)),
            (Token::Close, at) => Err(unexpected(")", at)),
            (Token::Open, _) => {
                let (head, at) = self.next()?;
                let d = match head {
                    Token::Atom("id") => {
                        let mut wires = Vec::new();
                        while let Some((Token::Atom(w), _)) = self.tokens.get(self.pos) {
                            wires.push(w.to_string());
                            self.pos += 1;
                        }
                        Diagram::Identity(Word(wires))
                    }
                    Token::Atom("v") => {
                        let a = self.expr()?;
                        a.then(self.expr()?)
                    }
                    Token::Atom("h") => {
                        let a = self.expr()?;
                        a.beside(self.expr()?)
                    }
                    Token::Atom(other) => return Err(unexpected(other, at)),
                    Token::Open => return Err(unexpected("(", at)),
                    Token::Close => return Err(unexpected(")", at)),
                };
                match self.next()? {
                    (Token::Close, _) => Ok(d),
                    (Token::Open, at) => Err(unexpected("(", at)),
                    (Token::Atom(a), at) => Err(unexpected(a, at)),
                }
            }
        }
    }
}

fn unexpected(token: &str, offset: usize) -> ParseError {
    ParseError::Unexpected {
        token: token.to_string(),
        offset,
    }
}

/// Parses the text form produced by `Diagram`'s `Display`.
pub fn parse(text: &str) -> Result<Diagram, ParseError> {
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
    };
    let d = p.expr()?;
    match p.tokens.get(p.pos) {
        None => Ok(d),
        Some((_, at)) => Err(ParseError::Trailing(*at)),
    }
}
