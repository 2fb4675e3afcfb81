//! Expression syntax: lexer, parser and printer.
//!
//! Precedence from loosest to tightest: `+ -`, tensor `&`, product `* /`,
//! wedge `^` and vee `.`, unary `-`, postfix star `'` and order projection
//! `:k`. All binary operators are left-associative.
//!
//! A `*` or `^` directly after a name belongs to the name when the space has
//! such a label and no operand follows, so `e1*^e2` is `(e1*)^e2` while
//! `e1*e2` is a product.

use std::fmt;

use clw_core::parity::Bracket;
use clw_core::{Error, Result, Scalar, SuperSpace};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Scalar),
    /// Even basis vector by index.
    Even(usize),
    /// Odd basis vector by index.
    Odd(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Vee(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>, Bracket),
    Inner(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    Order(Box<Expr>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dot,
    Amp,
    Quote,
    Colon,
    Comma,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Lt,
    Gt,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int(s) | Tok::Name(s) => s.as_str(),
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Dot => ".",
            Tok::Amp => "&",
            Tok::Quote => "'",
            Tok::Colon => ":",
            Tok::Comma => ",",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::Lt => "<",
            Tok::Gt => ">",
        };
        f.write_str(s)
    }
}

fn err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { col, msg: msg.into() }
}

/// Tokens with their 1-based columns.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '.' => Tok::Dot,
            '&' => Tok::Amp,
            '\'' => Tok::Quote,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '<' => Tok::Lt,
            '>' => Tok::Gt,
            _ => return Err(err(col, format!("unexpected character '{c}'"))),
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

fn starts_operand(t: Option<&Tok>) -> bool {
    matches!(t, Some(Tok::Int(_) | Tok::Name(_) | Tok::LParen | Tok::LBrack | Tok::Lt))
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    space: &'a SuperSpace,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{t}'")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => err(self.col(), format!("expected {wanted}, found '{t}'")),
            None => err(self.col(), format!("expected {wanted}, found end of input")),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.tensor()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        while self.eat(&Tok::Amp) {
            lhs = Expr::Tensor(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.exterior()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.exterior()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.exterior()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn exterior(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Caret) {
                lhs = Expr::Wedge(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Dot) {
                lhs = Expr::Vee(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            if self.eat(&Tok::Quote) {
                e = Expr::Star(Box::new(e));
            } else if self.eat(&Tok::Colon) {
                let col = self.col();
                match self.peek().cloned() {
                    Some(Tok::Int(s)) => {
                        self.pos += 1;
                        let k = s.parse().map_err(|_| err(col, "order too large"))?;
                        e = Expr::Order(Box::new(e), k);
                    }
                    _ => return Err(self.unexpected("an order after ':'")),
                }
            } else {
                return Ok(e);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let n: i64 = s.parse().map_err(|_| err(col, "integer literal too large"))?;
                Ok(Expr::Num(Scalar::from(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                self.symbol(name, col)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::LBrack) => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(Tok::Comma)?;
                let b = self.sum()?;
                self.expect(Tok::RBrack)?;
                let kind = match self.peek() {
                    Some(Tok::Name(s)) if s == "s" => {
                        self.pos += 1;
                        Bracket::Super
                    }
                    _ => Bracket::Lie,
                };
                Ok(Expr::Bracket(Box::new(a), Box::new(b), kind))
            }
            Some(Tok::Lt) => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(Tok::Comma)?;
                let b = self.sum()?;
                self.expect(Tok::Gt)?;
                Ok(Expr::Inner(Box::new(a), Box::new(b)))
            }
            _ => Err(self.unexpected("an operand")),
        }
    }

    /// Resolve a name, absorbing a `*` or `^` suffix when it completes a
    /// label and no operand follows it.
    fn symbol(&mut self, name: String, col: usize) -> Result<Expr> {
        for (tok, suffix) in [(Tok::Star, '*'), (Tok::Caret, '^')] {
            if self.peek() == Some(&tok) && !starts_operand(self.peek_at(1)) {
                let full = format!("{name}{suffix}");
                if let Some(e) = self.lookup(&full) {
                    self.pos += 1;
                    return Ok(e);
                }
            }
        }
        match name.as_str() {
            "i" => Ok(Expr::Num(Scalar::i())),
            "r2" => Ok(Expr::Num(Scalar::sqrt2())),
            _ => self.lookup(&name).ok_or_else(|| err(col, format!("unknown symbol '{name}'"))),
        }
    }

    fn lookup(&self, label: &str) -> Option<Expr> {
        if let Some(i) = self.space.even_labels().iter().position(|l| l == label) {
            return Some(Expr::Even(i));
        }
        self.space.odd_labels().iter().position(|l| l == label).map(Expr::Odd)
    }
}

/// Parse an expression, resolving basis names against `space`.
pub fn parse(text: &str, space: &SuperSpace) -> Result<Expr> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end, space };
    let e = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    fn sp() -> SuperSpace {
        SuperSpace::witt(2, false, 1)
    }

    #[test]
    fn tensor_of_wedge_and_vee() {
        // Witt labels: e1 e2 e1* e2*, x1 x1^.
        let e = parse("e1^e2 & x1.x1", &sp()).unwrap();
        assert_eq!(e, Expr::Tensor(b(Expr::Wedge(b(Expr::Even(0)), b(Expr::Even(1)))), b(Expr::Vee(b(Expr::Odd(0)), b(Expr::Odd(0))))));
    }

    #[test]
    fn super_bracket_node() {
        let e = parse("[e1, e2]s", &sp()).unwrap();
        assert_eq!(e, Expr::Bracket(b(Expr::Even(0)), b(Expr::Even(1)), Bracket::Super));
        assert!(matches!(parse("[e1, e2]", &sp()).unwrap(), Expr::Bracket(_, _, Bracket::Lie)));
    }

    #[test]
    fn doubled_operator_reports_its_column() {
        assert_eq!(parse("e1^^e2", &sp()).unwrap_err(), Error::Parse { col: 4, msg: "expected an operand, found '^'".into() });
    }

    #[test]
    fn suffixes_and_products() {
        let s = sp();
        assert_eq!(parse("e1*", &s).unwrap(), Expr::Even(2));
        assert_eq!(parse("e1*^e2", &s).unwrap(), Expr::Wedge(b(Expr::Even(2)), b(Expr::Even(1))));
        assert_eq!(parse("e1*e2", &s).unwrap(), Expr::Mul(b(Expr::Even(0)), b(Expr::Even(1))));
        assert_eq!(parse("x1^.x1", &s).unwrap(), Expr::Vee(b(Expr::Odd(1)), b(Expr::Odd(0))));
        assert_eq!(parse("2*e1* - e2", &s).unwrap(), Expr::Sub(b(Expr::Mul(b(Expr::Num(Scalar::from(2))), b(Expr::Even(2)))), b(Expr::Even(1))));
    }

    #[test]
    fn precedence() {
        let s = sp();
        // Unary minus binds tighter than the product.
        assert_eq!(parse("-3/2*e1", &s).unwrap(), Expr::Mul(b(Expr::Div(b(Expr::Neg(b(Expr::Num(Scalar::from(3))))), b(Expr::Num(Scalar::from(2))))), b(Expr::Even(0))));
        // Star binds tighter than wedge.
        assert_eq!(parse("e1^e2'", &s).unwrap(), Expr::Wedge(b(Expr::Even(0)), b(Expr::Star(b(Expr::Even(1))))));
        assert_eq!(parse("(e1^e2)':2", &s).unwrap(), Expr::Order(b(Expr::Star(b(Expr::Wedge(b(Expr::Even(0)), b(Expr::Even(1)))))), 2));
    }

    #[test]
    fn errors_carry_columns() {
        let s = sp();
        assert_eq!(parse("e1 + e9", &s).unwrap_err(), Error::Parse { col: 6, msg: "unknown symbol 'e9'".into() });
        assert!(matches!(parse("(e1", &s).unwrap_err(), Error::Parse { col: 4, .. }));
        assert!(matches!(parse("e1 $", &s).unwrap_err(), Error::Parse { col: 4, .. }));
        assert!(matches!(parse("", &s).unwrap_err(), Error::Parse { col: 1, .. }));
        assert!(matches!(parse("e1 e2", &s).unwrap_err(), Error::Parse { col: 4, .. }));
    }
}
