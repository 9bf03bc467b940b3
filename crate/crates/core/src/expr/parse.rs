//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ("^" "-"? int)?
//! atom   := int | ident | ident "(" args ")" | ("e" | "ep") "[" ints "]"
//!         | "[" "-"? int ("/" int)? "]" | "(" expr ")"
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: Pos,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let chars: Vec<char> = input.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            k += 1;
            continue;
        }
        let start = k;
        let tok = if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            Tok::Int(digits.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() {
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            Tok::Ident(chars[start..k].iter().collect())
        } else if "+-*/^()[],".contains(c) {
            k += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line,
                column,
                expected: format!("a number, name or operator symbol, found `{c}`"),
            });
        };
        column += k - start;
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::End,
        pos: Pos { line, column },
    });
    Ok(out)
}

/// Parse tree. `*` keeps the written order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    /// `i`, `q`, `s`, `Q`, `id`, `gamma`, named operators.
    Name(String),
    /// `x<k>`.
    Var(usize),
    /// `e[...]` or `ep[...]`.
    Generator { minus: bool, indices: Vec<usize> },
    /// `[m]`, or `[1/2]` when `half` is set.
    Bracket { m: i64, half: bool },
    /// `name(args)`.
    Call { name: String, args: Vec<i64> },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    /// Positions of currently open delimiters.
    open: Vec<Pos>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    /// Error at the current token; at the end of input an unclosed
    /// delimiter is reported at its own position.
    fn error(&self, expected: &str) -> Error {
        let pos = match (self.peek(), self.open.last()) {
            (Tok::End, Some(p)) => *p,
            _ => self.pos(),
        };
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            Tok::Int(v) => format!("`{v}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
        };
        Error::Syntax {
            line: pos.line,
            column: pos.column,
            expected: format!("{expected}, found {found}"),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Ast::Div(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.signed_int()?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let pos = self.pos();
                self.bump();
                i64::try_from(v).map_err(|_| Error::Syntax {
                    line: pos.line,
                    column: pos.column,
                    expected: "an integer that fits in 64 bits".into(),
                })
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let v = self.int()?;
        Ok(if neg { -v } else { v })
    }

    fn index(&mut self) -> Result<usize> {
        let pos = self.pos();
        let v = self.int()?;
        usize::try_from(v).ok().filter(|&v| v >= 1).ok_or(Error::Syntax {
            line: pos.line,
            column: pos.column,
            expected: "a positive index".into(),
        })
    }

    fn open(&mut self, c: char) -> Result<()> {
        let pos = self.pos();
        self.expect(c)?;
        self.open.push(pos);
        Ok(())
    }

    fn close(&mut self, c: char) -> Result<()> {
        self.expect(c)?;
        self.open.pop();
        Ok(())
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Ast::Int(v))
            }
            Tok::Sym('(') => {
                self.open('(')?;
                let e = self.expr()?;
                self.close(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.open('[')?;
                let m = self.signed_int()?;
                let half = if self.eat('/') {
                    let pos = self.pos();
                    if m != 1 || self.int()? != 2 {
                        return Err(Error::Syntax {
                            line: pos.line,
                            column: pos.column,
                            expected: "`[1/2]` as the only fractional bracket".into(),
                        });
                    }
                    true
                } else {
                    false
                };
                self.close(']')?;
                Ok(Ast::Bracket { m, half })
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(k) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    if !name[1..].starts_with('0') {
                        return Ok(Ast::Var(k));
                    }
                }
                if (name == "e" || name == "ep") && *self.peek() == Tok::Sym('[') {
                    self.open('[')?;
                    let mut indices = vec![self.index()?];
                    while self.eat(',') {
                        indices.push(self.index()?);
                    }
                    self.close(']')?;
                    return Ok(Ast::Generator {
                        minus: name == "ep",
                        indices,
                    });
                }
                if *self.peek() == Tok::Sym('(') {
                    self.open('(')?;
                    let mut args = vec![self.signed_int()?];
                    while self.eat(',') {
                        args.push(self.signed_int()?);
                    }
                    self.close(')')?;
                    return Ok(Ast::Call { name, args });
                }
                Ok(Ast::Name(name))
            }
            _ => Err(self.error("a number, name or `(`")),
        }
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Ast> {
    let mut p = Parser {
        toks: tokenize(input)?,
        at: 0,
        open: Vec::new(),
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_order() {
        let e = parse("x1*x2 - q*x2*x1").unwrap();
        assert!(matches!(e, Ast::Sub(..)));
        let e = parse("-x1^2").unwrap();
        assert!(matches!(e, Ast::Neg(ref b) if matches!(**b, Ast::Pow(_, 2))));
        assert_eq!(parse("q^-1").unwrap(), Ast::Pow(Box::new(Ast::Name("q".into())), -1));
        assert!(matches!(parse("e[1,3]").unwrap(), Ast::Generator { minus: false, .. }));
        assert!(matches!(parse("g(2,-1)").unwrap(), Ast::Call { ref args, .. } if args == &[2, -1]));
        assert_eq!(parse("[1/2]").unwrap(), Ast::Bracket { m: 1, half: true });
    }

    #[test]
    fn error_positions() {
        let Err(Error::Syntax { line, column, .. }) = parse("x1*(") else { panic!() };
        assert_eq!((line, column), (1, 4));
        let Err(Error::Syntax { line, column, .. }) = parse("x1 +\n  * x2") else { panic!() };
        assert_eq!((line, column), (2, 3));
        let Err(Error::Syntax { column, .. }) = parse("x1 $ x2") else { panic!() };
        assert_eq!(column, 4);
        assert!(parse("x1 x2").is_err());
    }
}
