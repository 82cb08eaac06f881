//! A small arithmetic expression language in one variable `t`.
//!
//! Grammar (lowest to highest precedence):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?          // right associative
//! primary := number | 't' | func '(' expr ')' | '(' expr ')'
//! func    := sqrt | cosh | sinh | exp | log | abs
//! ```
//!
//! Unary minus binds looser than `^`, so `-2^2` is `-4`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Cosh,
    Sinh,
    Exp,
    Log,
    Abs,
}

impl Func {
    pub const ALL: [Func; 6] = [Func::Sqrt, Func::Cosh, Func::Sinh, Func::Exp, Func::Log, Func::Abs];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Cosh => "cosh",
            Func::Sinh => "sinh",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownIdentifier { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{func} is undefined at {arg}")]
    Domain { func: &'static str, arg: f64 },
    #[error("negative base {base} raised to non-integer power {exponent}")]
    NegativeBase { base: f64, exponent: f64 },
    #[error("evaluation overflowed to a non-finite value")]
    NonFinite,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn syntax<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn expect(&mut self, ch: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == ch => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.syntax(self.pos, format!("expected `{}`, found `{}`", ch as char, c as char)),
            None => self.syntax(self.pos, format!("expected `{}`, found end of input", ch as char)),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinOp::Add,
                Some(b'-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinOp::Mul,
                Some(b'/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let start = match self.peek() {
            None => return self.syntax(self.pos, "unexpected end of input"),
            Some(_) => self.pos,
        };
        let c = self.bytes[start];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(inner);
        }
        if c.is_ascii_digit() || c == b'.' {
            return self.number(start);
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.bytes.len()
                && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = &self.src[start..self.pos];
            if name == "t" {
                return Ok(Expr::Var);
            }
            let Some(func) = Func::from_name(name) else {
                return Err(ParseError::UnknownIdentifier {
                    offset: start,
                    name: name.to_string(),
                });
            };
            self.expect(b'(')?;
            let arg = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr::Call(func, Box::new(arg)));
        }
        self.syntax(start, format!("unexpected character `{}`", c as char))
    }

    fn number(&mut self, start: usize) -> Result<Expr, ParseError> {
        let b = self.bytes;
        let mut i = start;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i < b.len() && b[i] == b'.' {
            i += 1;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
        }
        if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
            let mut j = i + 1;
            if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                j += 1;
            }
            if j < b.len() && b[j].is_ascii_digit() {
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                i = j;
            }
        }
        let text = &self.src[start..i];
        match text.parse::<f64>() {
            Ok(v) => {
                self.pos = i;
                Ok(Expr::Num(v))
            }
            Err(_) => self.syntax(start, format!("malformed number `{text}`")),
        }
    }
}

/// Parses an expression in the variable `t`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => p.syntax(p.pos, format!("unexpected trailing `{}`", c as char)),
    }
}

impl FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

fn check(v: f64) -> Result<f64, EvalError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

impl Expr {
    /// Evaluates the expression at `t` in double precision.
    pub fn eval(&self, t: f64) -> Result<f64, EvalError> {
        match self {
            Expr::Num(v) => Ok(*v),
            Expr::Var => Ok(t),
            Expr::Neg(e) => Ok(-e.eval(t)?),
            Expr::Binary(op, l, r) => {
                let a = l.eval(t)?;
                let b = r.eval(t)?;
                match op {
                    BinOp::Add => check(a + b),
                    BinOp::Sub => check(a - b),
                    BinOp::Mul => check(a * b),
                    BinOp::Div => {
                        if b == 0.0 {
                            Err(EvalError::DivisionByZero)
                        } else {
                            check(a / b)
                        }
                    }
                    BinOp::Pow => pow(a, b),
                }
            }
            Expr::Call(f, arg) => {
                let x = arg.eval(t)?;
                let v = match f {
                    Func::Sqrt if x < 0.0 => return Err(EvalError::Domain { func: "sqrt", arg: x }),
                    Func::Sqrt => x.sqrt(),
                    Func::Log if x <= 0.0 => return Err(EvalError::Domain { func: "log", arg: x }),
                    Func::Log => x.ln(),
                    Func::Cosh => x.cosh(),
                    Func::Sinh => x.sinh(),
                    Func::Exp => x.exp(),
                    Func::Abs => x.abs(),
                };
                check(v)
            }
        }
    }
}

fn pow(base: f64, exponent: f64) -> Result<f64, EvalError> {
    if base == 0.0 && exponent < 0.0 {
        return Err(EvalError::DivisionByZero);
    }
    if base < 0.0 && exponent.fract() != 0.0 {
        return Err(EvalError::NegativeBase { base, exponent });
    }
    check(base.powf(exponent))
}

/// Central difference `(f(t+h) - f(t-h)) / 2h`; `h` defaults to `1e-6 * max(1, |t|)`.
pub fn numeric_derivative(e: &Expr, t: f64, h: Option<f64>) -> Result<f64, EvalError> {
    let h = h.unwrap_or(1e-6 * t.abs().max(1.0));
    Ok((e.eval(t + h)? - e.eval(t - h)?) / (2.0 * h))
}

fn fmt_num(v: f64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // `{:?}` is the shortest representation that round-trips exactly.
    if v < 0.0 || (v == 0.0 && v.is_sign_negative()) {
        write!(f, "(-{:?})", -v)
    } else {
        write!(f, "{v:?}")
    }
}

/// Fully parenthesized printing; reparsing yields an equivalent tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => fmt_num(*v, f),
            Expr::Var => write!(f, "t"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, t: f64) -> f64 {
        parse(s).unwrap().eval(t).unwrap()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(ev("2 - t", 0.5), 1.5);
        assert!(ev("(40*t-4)/(375*t-75)", 0.1).abs() < 1e-15);
        assert_eq!(ev("cosh(0)", 17.0), 1.0);
    }

    #[test]
    fn precedence() {
        assert_eq!(ev("2+3*4", 0.0), 14.0);
        assert_eq!(ev("2^3^2", 0.0), 512.0);
        assert_eq!(ev("-2^2", 0.0), -4.0);
        assert_eq!(ev("2^-1", 0.0), 0.5);
        assert_eq!(ev("10 - 4 - 3", 0.0), 3.0);
        assert_eq!(ev("12 / 3 / 2", 0.0), 2.0);
        assert_eq!(ev(" ( t ) * ( t ) ", 3.0), 9.0);
        assert_eq!(ev("1.5e2 + 2E-1", 0.0), 150.2);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse("t +").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { offset: 3, .. }), "{e:?}");
        assert_eq!(parse("(t").unwrap_err().offset(), 2);
        assert_eq!(parse("t t").unwrap_err().offset(), 2);
        assert_eq!(parse("").unwrap_err().offset(), 0);
        assert!(matches!(parse("2 # 3"), Err(ParseError::Syntax { offset: 2, .. })));
    }

    #[test]
    fn unknown_identifiers_are_rejected() {
        assert_eq!(
            parse("1 + sin(t)").unwrap_err(),
            ParseError::UnknownIdentifier {
                offset: 4,
                name: "sin".into()
            }
        );
        assert!(matches!(
            parse("x"),
            Err(ParseError::UnknownIdentifier { offset: 0, .. })
        ));
    }

    #[test]
    fn domain_errors() {
        let sqrt = parse("sqrt(t)").unwrap();
        assert!(matches!(sqrt.eval(-1.0), Err(EvalError::Domain { func: "sqrt", .. })));
        let g = parse("(40*t-4)/(375*t-75)").unwrap();
        assert_eq!(g.eval(0.2), Err(EvalError::DivisionByZero));
        assert!(matches!(
            parse("log(t)").unwrap().eval(0.0),
            Err(EvalError::Domain { .. })
        ));
        assert!(matches!(
            parse("t^0.5").unwrap().eval(-4.0),
            Err(EvalError::NegativeBase { .. })
        ));
        assert_eq!(parse("t^2").unwrap().eval(-3.0), Ok(9.0));
        assert_eq!(parse("t^-1").unwrap().eval(0.0), Err(EvalError::DivisionByZero));
        assert_eq!(parse("exp(t)").unwrap().eval(1000.0), Err(EvalError::NonFinite));
    }

    #[test]
    fn derivatives() {
        let e = parse("2 - t").unwrap();
        for t in [-3.0, 0.0, 0.7, 1e3] {
            assert!((numeric_derivative(&e, t, None).unwrap() + 1.0).abs() < 1e-9);
        }
        let sq = parse("t^2").unwrap();
        assert!((numeric_derivative(&sq, 3.0, None).unwrap() - 6.0).abs() < 1e-6);
        let g = parse("(40*t-4)/(375*t-75)").unwrap();
        let exact = -1500.0 / (375.0f64 * 0.1 - 75.0).powi(2);
        assert!((numeric_derivative(&g, 0.1, None).unwrap() - exact).abs() < 1e-5);
    }

    #[test]
    fn display_reparses() {
        for s in ["-2^2", "2^3^2", "(40*t-4)/(375*t-75)", "sqrt(abs(t)) - -3", "1e-7*t"] {
            let e = parse(s).unwrap();
            let back = parse(&e.to_string()).unwrap();
            assert_eq!(e.eval(0.37), back.eval(0.37), "{s} -> {e}");
        }
    }
}
