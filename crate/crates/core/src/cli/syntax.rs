//! Expression syntax for functions of the Darboux coordinates.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)*
//! atom   := INTEGER | VARIABLE | '(' expr ')'
//! ```
//!
//! Variables are `x1..xn`, `y1..yn`, `z`; with `n = 1` the bare names `x`
//! and `y` are accepted too.

use num_bigint::BigInt;

use crate::algebra::{Poly, Rat, RatFn};
use crate::exterior::VectorField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("field literal has {found} components, expected {expected}")]
    FieldLength { expected: usize, found: usize },
}

impl ParseError {
    pub fn name(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownVariable { .. } => "UnknownVariable",
            ParseError::ZeroDenominator { .. } => "ZeroDenominator",
            ParseError::FieldLength { .. } => "FieldLength",
        }
    }
}

/// Parsed expression; offsets are 1-based character positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Const(Rat),
    Var {
        name: String,
        index: usize,
    },
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div {
        num: Box<ExprAst>,
        den: Box<ExprAst>,
        offset: usize,
    },
    Pow(Box<ExprAst>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str, base: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let offset = base + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("digits")), offset));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), offset));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), offset));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                offset,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    toks.push((Tok::End, base + chars.len() + 1));
    Ok(Lexer { toks })
}

/// Index of a variable name in `(x_1..x_n, y_1..y_n, z)`.
pub fn variable_index(name: &str, n: usize) -> Option<usize> {
    match name {
        "z" => return Some(2 * n),
        "x" if n == 1 => return Some(0),
        "y" if n == 1 => return Some(1),
        _ => {}
    }
    let (head, digits) = name.split_at(1);
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = digits.parse().ok()?;
    if i == 0 || i > n {
        return None;
    }
    match head {
        "x" => Some(i - 1),
        "y" => Some(n + i - 1),
        _ => None,
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Op('+') => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().0 {
                Tok::Op('*') => {
                    self.bump();
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Op('/') => {
                    let (_, offset) = self.bump();
                    lhs = ExprAst::Div {
                        num: Box::new(lhs),
                        den: Box::new(self.unary()?),
                        offset,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.peek().0 == Tok::Op('-') {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let mut base = self.atom()?;
        while self.peek().0 == Tok::Op('^') {
            self.bump();
            let (tok, offset) = self.bump();
            let Tok::Int(e) = tok else {
                return self.error(offset, "exponent must be a non-negative integer literal");
            };
            let Ok(e) = u32::try_from(e) else {
                return self.error(offset, "exponent too large");
            };
            base = ExprAst::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::Int(v) => Ok(ExprAst::Const(Rat::from(v))),
            Tok::Ident(name) => match variable_index(&name, self.n) {
                Some(index) => Ok(ExprAst::Var { name, index }),
                None => Err(ParseError::UnknownVariable { name, offset }),
            },
            Tok::Op('(') => {
                let inner = self.expr()?;
                let (close, at) = self.bump();
                if close != Tok::Op(')') {
                    return self.error(at, "expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.error(offset, "unexpected end of input"),
            Tok::Op(c) => self.error(offset, format!("unexpected `{c}`")),
        }
    }
}

fn parse_at(src: &str, n: usize, base: usize) -> Result<ExprAst, ParseError> {
    let lexer = lex(src, base)?;
    let mut p = Parser {
        toks: &lexer.toks,
        pos: 0,
        n,
    };
    let ast = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(ast),
        (_, offset) => p.error(*offset, "unexpected trailing input"),
    }
}

/// Parses an expression in dimension `n`.
pub fn parse_expr(src: &str, n: usize) -> Result<ExprAst, ParseError> {
    parse_at(src, n, 0)
}

impl ExprAst {
    /// Evaluates to a rational function in dimension `n`.
    pub fn lower(&self, n: usize) -> Result<RatFn, ParseError> {
        Ok(match self {
            ExprAst::Const(c) => RatFn::constant(n, c.clone()),
            ExprAst::Var { index, .. } => RatFn::from_poly(Poly::var(n, *index).expect("resolved")),
            ExprAst::Neg(a) => -a.lower(n)?,
            ExprAst::Add(a, b) => &a.lower(n)? + &b.lower(n)?,
            ExprAst::Sub(a, b) => &a.lower(n)? - &b.lower(n)?,
            ExprAst::Mul(a, b) => &a.lower(n)? * &b.lower(n)?,
            ExprAst::Div { num, den, offset } => {
                let d = den.lower(n)?;
                if d.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset: *offset });
                }
                &num.lower(n)? / &d
            }
            ExprAst::Pow(a, e) => a.lower(n)?.powi(*e as i32).expect("non-negative power"),
        })
    }
}

/// Parses and lowers in one step.
pub fn parse_ratfn(src: &str, n: usize) -> Result<RatFn, ParseError> {
    parse_expr(src, n)?.lower(n)
}

/// Splits `[a, b, c]` (brackets optional) at top-level commas, returning
/// each piece with its 0-based character offset.
fn split_list(src: &str) -> Result<Vec<(String, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut lo = 0;
    let mut hi = chars.len();
    while lo < hi && chars[lo].is_whitespace() {
        lo += 1;
    }
    while hi > lo && chars[hi - 1].is_whitespace() {
        hi -= 1;
    }
    if lo < hi && chars[lo] == '[' {
        if chars[hi - 1] != ']' {
            return Err(ParseError::Syntax {
                offset: hi,
                message: "expected `]`".into(),
            });
        }
        lo += 1;
        hi -= 1;
    }
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = lo;
    for i in lo..hi {
        match chars[i] {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((chars[start..i].iter().collect(), start));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((chars[start..hi].iter().collect(), start));
    Ok(parts)
}

/// A comma-separated list of expressions, optionally in brackets.
pub fn parse_list(src: &str, n: usize) -> Result<Vec<RatFn>, ParseError> {
    split_list(src)?
        .into_iter()
        .map(|(s, off)| parse_at(&s, n, off)?.lower(n))
        .collect()
}

/// A field literal `[c_1, …, c_{2n+1}]` in the coordinate frame.
pub fn parse_field(src: &str, n: usize) -> Result<VectorField, ParseError> {
    let coeffs = parse_list(src, n)?;
    if coeffs.len() != 2 * n + 1 {
        return Err(ParseError::FieldLength {
            expected: 2 * n + 1,
            found: coeffs.len(),
        });
    }
    Ok(VectorField::new(n, coeffs).expect("length checked"))
}
