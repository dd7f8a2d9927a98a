//! Expression syntax shared by every command.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' INT | "'")*
//! primary := INT ['/' INT] | 'v' INT | 'q' INT | 's' INT | '(' expr ')'
//!          | 'S(' expr ')' | 'A(' expr ')' | 'rev(' expr ')'
//!          | 'cross(' expr ',' expr ')'
//! ```
//!
//! `'` conjugates (on `qi` it gives the letter `qi'`), `S` and `A` take the
//! bracket and vector part, `rev` reverses words, and `cross(a, b)` is
//! `(ab - ba)/2`. Scalar symbols `si` only occur in vector expressions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{rat, Rational, SPoly, ScalarCoeff};
use crate::qvars::{QLetter, QPolynomial};

/// A parsed expression in vector letters (with optional scalar symbols) or
/// in quaternionic letters.
#[derive(Clone, Debug, PartialEq)]
pub enum Expression {
    Vector(SPoly),
    Quaternion(QPolynomial),
}

impl Expression {
    pub fn degree(&self) -> usize {
        match self {
            Expression::Vector(p) => p.degree(),
            Expression::Quaternion(p) => p.degree(),
        }
    }

    /// Largest variable index, counting scalar symbols.
    pub fn max_index(&self) -> u32 {
        match self {
            Expression::Vector(p) => p.max_vector_index().max(p.max_scalar_index()),
            Expression::Quaternion(p) => p.max_index(),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expression> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(t.error(format!("unexpected {}", t.kind.describe())));
    }
    let kind = letter_kind(&ast)?;
    match kind {
        Kind::Quaternion => Ok(Expression::Quaternion(eval_q(&ast)?)),
        Kind::Vector | Kind::Constant => Ok(Expression::Vector(eval_v(&ast))),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    V(u32),
    Q(u32),
    S(u32),
    Func(Func),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Prime,
    Comma,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::V(i) => format!("v{i}"),
            Tok::Q(i) => format!("q{i}"),
            Tok::S(i) => format!("s{i}"),
            Tok::Func(f) => format!("{}(", f.name()),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Prime => "\"'\"".into(),
            Tok::Comma => "','".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Func {
    Bracket,
    VectorPart,
    Rev,
    Cross,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Bracket => "S",
            Func::VectorPart => "A",
            Func::Rev => "rev",
            Func::Cross => "cross",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    pos: Pos,
    width: usize,
}

impl Token {
    fn error(&self, message: impl Into<String>) -> Error {
        self.pos.error(message)
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let start = i;
        let kind = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            let func = match ident.as_str() {
                "S" => Some(Func::Bracket),
                "A" => Some(Func::VectorPart),
                "rev" => Some(Func::Rev),
                "cross" => Some(Func::Cross),
                _ => None,
            };
            match func {
                Some(f) => {
                    if chars.get(i) != Some(&'(') {
                        return Err(pos.error(format!("expected '(' after {ident}")));
                    }
                    i += 1;
                    Tok::Func(f)
                }
                None => variable(&ident).ok_or_else(|| pos.error(format!("unknown name {ident:?}")))?,
            }
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '\'' => Tok::Prime,
                ',' => Tok::Comma,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(pos.error(format!("unexpected character {c:?}"))),
            }
        };
        column += i - start;
        out.push(Token {
            kind,
            pos,
            width: i - start,
        });
    }
    Ok(out)
}

fn variable(ident: &str) -> Option<Tok> {
    let (head, digits) = ident.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let index: u32 = digits.parse().ok()?;
    match head {
        "v" => Some(Tok::V(index)),
        "q" => Some(Tok::Q(index)),
        "s" => Some(Tok::S(index)),
        _ => None,
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Num(Rational),
    V(u32, Pos),
    Q(u32, Pos),
    S(u32, Pos),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Conj(Box<Ast>),
    Call(Func, Vec<Ast>, Pos),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token> {
        let t = self.tokens.get(self.pos).cloned().ok_or_else(|| self.eof())?;
        self.pos += 1;
        Ok(t)
    }

    fn eof(&self) -> Error {
        let pos = self.tokens.last().map_or(Pos { line: 1, column: 1 }, |t| Pos {
            line: t.pos.line,
            column: t.pos.column + t.width,
        });
        pos.error("unexpected end of input")
    }

    fn eat(&mut self, kind: &Tok) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: &Tok) -> Result<()> {
        let t = self.next()?;
        if &t.kind != kind {
            return Err(t.error(format!("expected {}, found {}", kind.describe(), t.kind.describe())));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = if self.eat(&Tok::Minus) {
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let mut acc = self.primary()?;
        loop {
            if self.eat(&Tok::Caret) {
                let t = self.next()?;
                let Tok::Int(n) = &t.kind else {
                    return Err(t.error("expected an exponent"));
                };
                let e = u32::try_from(n).map_err(|_| t.error("exponent too large"))?;
                acc = Ast::Pow(Box::new(acc), e);
            } else if self.eat(&Tok::Prime) {
                acc = Ast::Conj(Box::new(acc));
            } else {
                return Ok(acc);
            }
        }
    }

    fn primary(&mut self) -> Result<Ast> {
        let t = self.next()?;
        match t.kind {
            Tok::Int(n) => {
                if self.eat(&Tok::Slash) {
                    let d = self.next()?;
                    let Tok::Int(den) = &d.kind else {
                        return Err(d.error("expected a denominator"));
                    };
                    if den.is_zero() {
                        return Err(d.error("zero denominator"));
                    }
                    Ok(Ast::Num(Rational::new(n, den.clone())))
                } else {
                    Ok(Ast::Num(Rational::from_integer(n)))
                }
            }
            Tok::V(i) => Ok(Ast::V(i, t.pos)),
            Tok::Q(i) => Ok(Ast::Q(i, t.pos)),
            Tok::S(i) => Ok(Ast::S(i, t.pos)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Tok::Func(f) => {
                let mut args = vec![self.expr()?];
                if f == Func::Cross {
                    self.expect(&Tok::Comma)?;
                    args.push(self.expr()?);
                }
                self.expect(&Tok::RParen)?;
                Ok(Ast::Call(f, args, t.pos))
            }
            other => Err(t.pos.error(format!("unexpected {}", other.describe()))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Kind {
    Constant,
    Vector,
    Quaternion,
}

fn letter_kind(ast: &Ast) -> Result<Kind> {
    fn walk(ast: &Ast, seen: &mut Kind) -> Result<()> {
        let (k, pos) = match ast {
            Ast::Num(_) => return Ok(()),
            Ast::V(_, p) | Ast::S(_, p) => (Kind::Vector, *p),
            Ast::Q(_, p) => (Kind::Quaternion, *p),
            Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => {
                walk(a, seen)?;
                return walk(b, seen);
            }
            Ast::Neg(a) | Ast::Pow(a, _) | Ast::Conj(a) => return walk(a, seen),
            Ast::Call(_, args, _) => {
                for a in args {
                    walk(a, seen)?;
                }
                return Ok(());
            }
        };
        match (*seen, k) {
            (Kind::Constant, _) => *seen = k,
            (a, b) if a != b => {
                return Err(pos.error("v/s letters and q letters cannot be mixed in one expression"))
            }
            _ => {}
        }
        Ok(())
    }
    let mut seen = Kind::Constant;
    walk(ast, &mut seen)?;
    Ok(seen)
}

fn eval_v(ast: &Ast) -> SPoly {
    match ast {
        Ast::Num(r) => SPoly::constant(ScalarCoeff::constant(r.clone())),
        Ast::V(i, _) => SPoly::var(*i),
        Ast::S(i, _) => SPoly::constant(ScalarCoeff::symbol(*i)),
        Ast::Q(..) => unreachable!("kind checked"),
        Ast::Add(a, b) => &eval_v(a) + &eval_v(b),
        Ast::Sub(a, b) => &eval_v(a) - &eval_v(b),
        Ast::Neg(a) => -eval_v(a),
        Ast::Mul(a, b) => &eval_v(a) * &eval_v(b),
        Ast::Pow(a, e) => eval_v(a).pow(*e),
        Ast::Conj(a) => eval_v(a).conjugate(),
        Ast::Call(f, args, _) => {
            let x = eval_v(&args[0]);
            match f {
                Func::Bracket => x.bracket(),
                Func::VectorPart => x.vector_part(),
                Func::Rev => x.reversion(),
                Func::Cross => {
                    let y = eval_v(&args[1]);
                    (&(&x * &y) - &(&y * &x)).scale_rational(&rat(1, 2))
                }
            }
        }
    }
}

fn eval_q(ast: &Ast) -> Result<QPolynomial> {
    Ok(match ast {
        Ast::Num(r) => QPolynomial::one().scale(r),
        Ast::Q(i, _) => QPolynomial::letter(QLetter::plain(*i)),
        Ast::V(..) | Ast::S(..) => unreachable!("kind checked"),
        Ast::Add(a, b) => &eval_q(a)? + &eval_q(b)?,
        Ast::Sub(a, b) => &eval_q(a)? - &eval_q(b)?,
        Ast::Neg(a) => -&eval_q(a)?,
        Ast::Mul(a, b) => &eval_q(a)? * &eval_q(b)?,
        Ast::Pow(a, e) => {
            let base = eval_q(a)?;
            (0..*e).fold(QPolynomial::one(), |acc, _| &acc * &base)
        }
        Ast::Conj(a) => eval_q(a)?.qconjugate(),
        Ast::Call(f, args, pos) => {
            let x = eval_q(&args[0])?;
            match f {
                Func::Bracket => x.scalar_part(),
                Func::VectorPart => x.vector_part_q(),
                Func::Rev => return Err(pos.error("rev() applies to vector expressions only")),
                Func::Cross => {
                    let y = eval_q(&args[1])?;
                    (&(&x * &y) - &(&y * &x)).scale(&rat(1, 2))
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{int, Poly, ScalarCoeff, Word};
    use crate::qvars::{qword, split};
    use proptest::prelude::*;

    fn vector(text: &str) -> SPoly {
        match parse_expression(text).unwrap() {
            Expression::Vector(p) => p,
            other => panic!("expected a vector expression, got {other:?}"),
        }
    }

    fn lifted(p: &Poly) -> SPoly {
        p.lift::<ScalarCoeff>()
    }

    fn w(l: &[u32]) -> Poly {
        Poly::word(Word::from(l))
    }

    #[test]
    fn difference_of_words() {
        let p = vector("v3*v2*v1 - v1*v2*v3");
        assert_eq!(p, lifted(&(&w(&[3, 2, 1]) - &w(&[1, 2, 3]))));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn bracket_of_triple() {
        let half = rat(1, 2);
        let expected = (&w(&[1, 2, 3]) - &w(&[3, 2, 1])).scale_rational(&half);
        assert_eq!(vector("S(v1*v2*v3)"), lifted(&expected));
        assert_eq!(vector("A(v1*v2*v3)"), lifted(&(&w(&[1, 2, 3]) + &w(&[3, 2, 1])).scale_rational(&half)));
    }

    #[test]
    fn q0_instance() {
        let Expression::Quaternion(q) = parse_expression("q1*q1' - q1'*q1").unwrap() else {
            panic!("expected q expression");
        };
        let mut expected = QPolynomial::zero();
        expected.add_term(qword(&[(1, false), (1, true)]), int(1));
        expected.add_term(qword(&[(1, true), (1, false)]), int(-1));
        assert_eq!(q, expected);
    }

    #[test]
    fn functions_and_powers() {
        assert_eq!(vector("rev(v1*v2*v3)"), lifted(&w(&[3, 2, 1])));
        assert_eq!(vector("(v1*v2)'"), lifted(&w(&[2, 1])));
        assert_eq!(vector("v1^3"), lifted(&w(&[1, 1, 1])));
        let c = vector("cross(v1, v2)");
        assert_eq!(c, lifted(&(&w(&[1, 2]) - &w(&[2, 1])).scale_rational(&rat(1, 2))));
        assert_eq!(vector("-3/4*v2 + 3/4*v2"), SPoly::zero());
        assert_eq!(vector("2^3"), lifted(&Poly::constant(int(8))));
        let s = vector("(s1 + s2)*v1");
        assert_eq!(s.max_scalar_index(), 2);
    }

    fn error_at(text: &str) -> (usize, usize) {
        match parse_expression(text).unwrap_err() {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(error_at("v1 + * v2"), (1, 6));
        assert_eq!(error_at("v1*q2"), (1, 4));
        assert_eq!(error_at("v1 +\n  w2"), (2, 3));
        assert_eq!(error_at("(v1 + v2"), (1, 9));
        assert_eq!(error_at("v0"), (1, 1));
        assert_eq!(error_at("1/0*v1"), (1, 3));
        assert_eq!(error_at("S v1"), (1, 1));
        assert_eq!(error_at("rev(q1)"), (1, 1));
        assert_eq!(error_at("v1 v2"), (1, 4));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let term = (prop::collection::vec(1u32..=4, 0..5), -20i64..=20, 1i64..=6);
        prop::collection::vec(term, 0..6).prop_map(|ts| {
            Poly::from_terms(ts.into_iter().map(|(l, a, b)| (Word::new(l), rat(a, b))))
        })
    }

    fn arb_q() -> impl Strategy<Value = QPolynomial> {
        let term = (prop::collection::vec((1u32..=3, any::<bool>()), 0..4), -9i64..=9, 1i64..=4);
        prop::collection::vec(term, 0..5).prop_map(|ts| {
            let mut q = QPolynomial::zero();
            for (l, a, b) in ts {
                q.add_term(qword(&l), rat(a, b));
            }
            q
        })
    }

    proptest! {
        #[test]
        fn vector_round_trip(p in arb_poly()) {
            prop_assert_eq!(vector(&p.to_string()), lifted(&p));
        }

        #[test]
        fn scalar_coefficient_round_trip(q in arb_q()) {
            let s = split(&q);
            prop_assert_eq!(vector(&s.to_string()), s);
        }

        #[test]
        fn quaternion_round_trip(q in arb_q()) {
            let parsed = parse_expression(&q.to_string()).unwrap();
            let expected = if q.terms().all(|(w, _)| w.degree() == 0) {
                // constants carry no letters, so they come back as vector expressions
                Expression::Vector(SPoly::from_terms(q.terms().map(|(_, c)| (Word::empty(), ScalarCoeff::constant(c.clone())))))
            } else {
                Expression::Quaternion(q)
            };
            prop_assert_eq!(parsed, expected);
        }
    }
}
