use std::fmt;

use crate::arith::Int;
use crate::error::{Error, Result};

/// Syntax tree of the element language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(Int),
    Alpha(usize),
    Beta(usize),
    T,
    U,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Tensor(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(Int),
    Ident(String),
    Sym(char),
    End,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    tok: Tok,
    tok_start: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut p = Self { src, pos: 0, tok: Tok::End, tok_start: 0 };
        p.advance()?;
        Ok(p)
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse { position: self.tok_start, expected: expected.to_string() }
    }

    fn advance(&mut self) -> Result<()> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_start = self.pos;
        let Some(&c) = bytes.get(self.pos) else {
            self.tok = Tok::End;
            return Ok(());
        };
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: Int = self.src[start..self.pos].parse().expect("digits");
            self.tok = Tok::Int(n);
        } else if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let word = &self.src[start..self.pos];
            if !matches!(word, "a" | "b" | "t" | "u" | "ox") {
                return Err(Error::Parse { position: start, expected: "one of a, b, t, u, ox".into() });
            }
            self.tok = Tok::Ident(word.to_string());
        } else if "+-*^()".contains(c as char) {
            self.pos += 1;
            self.tok = Tok::Sym(c as char);
        } else {
            return Err(Error::Parse { position: self.pos, expected: "an operator, atom or literal".into() });
        }
        Ok(())
    }

    fn eat_sym(&mut self, c: char) -> Result<bool> {
        if self.tok == Tok::Sym(c) {
            self.advance()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c)? {
            Ok(())
        } else {
            Err(self.err(&format!("'{c}'")))
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut lhs = self.sum()?;
        while self.tok == Tok::Ident("ox".into()) {
            self.advance()?;
            let rhs = self.sum()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat_sym('+')? {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat_sym('-')? {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_sym('*')? {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym('-')? {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if !self.eat_sym('^')? {
            return Ok(base);
        }
        let negative = self.eat_sym('-')?;
        let Tok::Int(n) = self.tok.clone() else {
            return Err(self.err("integer exponent"));
        };
        let e: i64 = i64::try_from(&n).map_err(|_| self.err("exponent within 64 bits"))?;
        self.advance()?;
        Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }))
    }

    fn index(&mut self) -> Result<usize> {
        self.expect_sym('(')?;
        let Tok::Int(n) = self.tok.clone() else {
            return Err(self.err("integer"));
        };
        let n = usize::try_from(&n).map_err(|_| self.err("index within range"))?;
        self.advance()?;
        self.expect_sym(')')?;
        Ok(n)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.tok.clone() {
            Tok::Int(n) => {
                self.advance()?;
                Ok(Expr::Int(n))
            }
            Tok::Ident(w) if w == "a" => {
                self.advance()?;
                Ok(Expr::Alpha(self.index()?))
            }
            Tok::Ident(w) if w == "b" => {
                self.advance()?;
                Ok(Expr::Beta(self.index()?))
            }
            Tok::Ident(w) if w == "t" => {
                self.advance()?;
                Ok(Expr::T)
            }
            Tok::Ident(w) if w == "u" => {
                self.advance()?;
                Ok(Expr::U)
            }
            Tok::Sym('(') => {
                self.advance()?;
                let e = self.tensor()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(self.err("an atom, integer or '('")),
        }
    }
}

/// Parses an element expression; error positions are byte offsets into `src`.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.tensor()?;
    if p.tok != Tok::End {
        return Err(p.err("end of input"));
    }
    Ok(e)
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Tensor(..) => 0,
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Alpha(n) => write!(f, "a({n})")?,
            Expr::Beta(n) => write!(f, "b({n})")?,
            Expr::T => write!(f, "t")?,
            Expr::U => write!(f, "u")?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write(f, 3)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Tensor(a, b) => {
                let p = self.prec();
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    Expr::Mul(..) => "*",
                    _ => " ox ",
                };
                a.write(f, p)?;
                write!(f, "{op}")?;
                b.write(f, p + 1)?;
            }
            Expr::Pow(b, e) => {
                b.write(f, 5)?;
                write!(f, "^{e}")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
