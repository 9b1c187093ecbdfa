//! Recursive-descent parser for formulas.
//!
//! Precedence, loosest first: `iff` (left), `implies` (right), `or`, `and`,
//! `not`. A quantifier body extends as far right as possible, up to the
//! closing delimiter that encloses the quantifier.

use super::ast::{Formula, SetTerm, Term, TypeExpr};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Quoted(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Dot,
    Bar,
    At,
    Equals,
    Turnstile,
    Forall,
    Exists,
    And,
    Or,
    Not,
    Implies,
    Iff,
    In,
    Top,
    Bottom,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Quoted(s) => format!("string \"{s}\""),
            Tok::End => "end of input".into(),
            other => format!("{other:?}").to_lowercase(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "forall" => Tok::Forall,
        "exists" => Tok::Exists,
        "and" => Tok::And,
        "or" => Tok::Or,
        "not" => Tok::Not,
        "implies" => Tok::Implies,
        "iff" => Tok::Iff,
        "in" => Tok::In,
        "top" => Tok::Top,
        "bottom" => Tok::Bottom,
        _ => return None,
    })
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = if is_ident_char(c) && c != '\'' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                word.push(c);
                bump(&mut chars);
            }
            keyword(&word).unwrap_or(Tok::Ident(word))
        } else if c == '"' {
            bump(&mut chars);
            let mut s = String::new();
            loop {
                match bump(&mut chars) {
                    Some('"') => break,
                    Some('\n') | None => return Err(syntax(l, col, "unterminated string")),
                    Some(c) => s.push(c),
                }
            }
            Tok::Quoted(s)
        } else {
            bump(&mut chars);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '.' => Tok::Dot,
                '@' => Tok::At,
                '=' => Tok::Equals,
                '∀' => Tok::Forall,
                '∃' => Tok::Exists,
                '∧' => Tok::And,
                '∨' => Tok::Or,
                '¬' => Tok::Not,
                '→' => Tok::Implies,
                '↔' => Tok::Iff,
                '∈' => Tok::In,
                '⊤' => Tok::Top,
                '⊥' => Tok::Bottom,
                '⊢' => Tok::Turnstile,
                '|' if chars.peek() == Some(&'-') => {
                    bump(&mut chars);
                    Tok::Turnstile
                }
                '|' => Tok::Bar,
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars);
                    Tok::Implies
                }
                '<' if chars.peek() == Some(&'-') => {
                    bump(&mut chars);
                    if bump(&mut chars) != Some('>') {
                        return Err(syntax(l, col, "expected `<->`"));
                    }
                    Tok::Iff
                }
                other => return Err(syntax(l, col, format!("unexpected character `{other}`"))),
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let s = &self.toks[self.pos];
        syntax(s.line, s.column, message)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}, found {}", self.peek().describe())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            other => Err(self.error(format!("expected {what}, found {}", other.describe()))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(format!("unexpected {}", self.peek().describe())))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::Iff {
            self.next();
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.next();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.next();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.next();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.next();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Forall | Tok::Exists => {
                let universal = self.next() == Tok::Forall;
                let var = self.ident("a bound variable")?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.type_expr()?;
                self.expect(Tok::Dot, "`.`")?;
                let body = Box::new(self.formula()?);
                Ok(if universal {
                    Formula::Forall(var, ty, body)
                } else {
                    Formula::Exists(var, ty, body)
                })
            }
            _ => self.atomic(),
        }
    }

    fn atomic(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Top => {
                self.next();
                Ok(Formula::Top)
            }
            Tok::Bottom => {
                self.next();
                Ok(Formula::Bottom)
            }
            Tok::LParen => {
                self.next();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(name) => match self.peek_at(1) {
                Tok::LParen => {
                    self.next();
                    self.next();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::RParen {
                        args.push(self.term()?);
                        while *self.peek() == Tok::Comma {
                            self.next();
                            args.push(self.term()?);
                        }
                    }
                    self.expect(Tok::RParen, "`)` after arguments")?;
                    Ok(Formula::Atom(name, args))
                }
                Tok::Equals | Tok::In | Tok::At => self.relation(),
                _ => {
                    self.next();
                    Ok(Formula::Atom(name, vec![]))
                }
            },
            Tok::Quoted(_) => self.relation(),
            other => Err(self.error(format!("expected a formula, found {}", other.describe()))),
        }
    }

    fn relation(&mut self) -> Result<Formula> {
        let lhs = self.term()?;
        match self.next() {
            Tok::Equals => Ok(Formula::Eq(lhs, self.term()?)),
            Tok::In => Ok(Formula::Member(lhs, self.set_term()?)),
            _ => {
                self.pos -= 1;
                Err(self.error("expected `=` or `in` after a term"))
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let (label, quoted) = match self.peek().clone() {
            Tok::Ident(s) => (s, false),
            Tok::Quoted(s) => (s, true),
            other => return Err(self.error(format!("expected a term, found {}", other.describe()))),
        };
        self.next();
        if *self.peek() == Tok::At {
            self.next();
            let space = self.ident("a space name after `@`")?;
            return Ok(Term::Point { label, space });
        }
        if quoted {
            return Err(self.error("a quoted point label needs `@Space`"));
        }
        Ok(Term::Var(label))
    }

    fn set_term(&mut self) -> Result<SetTerm> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(SetTerm::Var(s))
            }
            Tok::LBrace => {
                self.next();
                let var = self.ident("a bound variable")?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.type_expr()?;
                self.expect(Tok::Bar, "`|`")?;
                let body = Box::new(self.formula()?);
                self.expect(Tok::RBrace, "`}`")?;
                Ok(SetTerm::Comprehension { var, ty, body })
            }
            other => Err(self.error(format!("expected a set term, found {}", other.describe()))),
        }
    }

    fn type_expr(&mut self) -> Result<TypeExpr> {
        let name = self.ident("a type")?;
        if name == "P" && *self.peek() == Tok::LParen {
            self.next();
            let inner = self.type_expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(TypeExpr::Power(Box::new(inner)));
        }
        Ok(TypeExpr::Named(name))
    }
}

/// Parses one formula.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses `φ |- ψ` (or `φ ⊢ ψ`).
pub fn parse_sequent(text: &str) -> Result<(Formula, Formula)> {
    let mut p = Parser::new(text)?;
    let lhs = p.formula()?;
    p.expect(Tok::Turnstile, "`|-`")?;
    let rhs = p.formula()?;
    p.finish()?;
    Ok((lhs, rhs))
}

/// Parses a context declaration `x : X, s : P(X)`; empty text is the empty context.
pub fn parse_context(text: &str) -> Result<Vec<(String, TypeExpr)>> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    if *p.peek() == Tok::End {
        return Ok(out);
    }
    loop {
        let var = p.ident("a variable")?;
        p.expect(Tok::Colon, "`:`")?;
        out.push((var, p.type_expr()?));
        if *p.peek() != Tok::Comma {
            break;
        }
        p.next();
    }
    p.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> TypeExpr {
        TypeExpr::Named("X".into())
    }

    fn v(s: &str) -> Term {
        Term::Var(s.into())
    }

    #[test]
    fn quantifier_with_equality() {
        assert_eq!(
            parse("forall x : X . x = x").unwrap(),
            Formula::forall("x", x(), Formula::Eq(v("x"), v("x")))
        );
    }

    #[test]
    fn and_binds_tighter_than_or() {
        assert_eq!(
            parse("p and q or r").unwrap(),
            Formula::or(
                Formula::and(Formula::atom("p", &[]), Formula::atom("q", &[])),
                Formula::atom("r", &[])
            )
        );
    }

    #[test]
    fn membership_over_power_space() {
        assert_eq!(
            parse("exists s : P(X) . a in s").unwrap(),
            Formula::exists(
                "s",
                TypeExpr::Power(Box::new(x())),
                Formula::Member(v("a"), SetTerm::Var("s".into()))
            )
        );
    }

    #[test]
    fn implies_is_right_associative() {
        let p = || Formula::atom("p", &[]);
        assert_eq!(
            parse("p -> p -> p").unwrap(),
            Formula::implies(p(), Formula::implies(p(), p()))
        );
        assert_eq!(
            parse("p iff p iff p").unwrap(),
            Formula::iff(Formula::iff(p(), p()), p())
        );
    }

    #[test]
    fn quantifier_body_extends_right() {
        let f = parse("p and forall x : X . q or r").unwrap();
        assert_eq!(
            f,
            Formula::and(
                Formula::atom("p", &[]),
                Formula::forall(
                    "x",
                    x(),
                    Formula::or(Formula::atom("q", &[]), Formula::atom("r", &[]))
                )
            )
        );
        let g = parse("(forall x : X . q) or r").unwrap();
        assert!(matches!(g, Formula::Or(..)));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse("∀ x : X . ¬ p(x) ∨ ⊤ ∧ ⊥").unwrap(),
            parse("forall x : X . not p(x) or top and bottom").unwrap()
        );
        assert_eq!(parse("a ∈ s → q ↔ r").unwrap(), parse("a in s implies q iff r").unwrap());
    }

    #[test]
    fn comprehension_and_literals() {
        let f = parse("b@X in { x : X | phi(x) }").unwrap();
        assert_eq!(
            f,
            Formula::Member(
                Term::Point { label: "b".into(), space: "X".into() },
                SetTerm::Comprehension {
                    var: "x".into(),
                    ty: x(),
                    body: Box::new(Formula::atom("phi", &["x"]))
                }
            )
        );
        assert!(parse("\"(a,b)\"@Y = y").is_ok());
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("forall x X . p").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (1, 10)),
            other => panic!("{other}"),
        }
        match parse("p and\n  (q or").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 8)),
            other => panic!("{other}"),
        }
        assert!(parse("p q").is_err());
        assert!(parse("x = ").is_err());
    }

    #[test]
    fn sequents_and_contexts() {
        let (l, r) = parse_sequent("p |- p or q").unwrap();
        assert_eq!(l, Formula::atom("p", &[]));
        assert!(matches!(r, Formula::Or(..)));
        assert!(parse_sequent("p ⊢ q").is_ok());
        let ctx = parse_context("x : X, s : P(P(X))").unwrap();
        assert_eq!(ctx.len(), 2);
        assert_eq!(ctx[1].1.to_string(), "P(P(X))");
        assert!(parse_context("").unwrap().is_empty());
    }
}
