use std::fmt;

/// Surface syntax of a type: a declared space or a power of a type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeExpr {
    Named(String),
    Power(Box<TypeExpr>),
}

/// Element terms: variables and point literals `label@Space`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Point { label: String, space: String },
}

/// Terms of power type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetTerm {
    Var(String),
    Comprehension {
        var: String,
        ty: TypeExpr,
        body: Box<Formula>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, TypeExpr, Box<Formula>),
    Exists(String, TypeExpr, Box<Formula>),
    Member(Term, SetTerm),
    Eq(Term, Term),
}

pub(crate) const KEYWORDS: &[&str] = &[
    "forall", "exists", "and", "or", "not", "implies", "iff", "in", "top", "bottom",
];

pub(crate) fn is_plain_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && !KEYWORDS.contains(&s)
}

impl Formula {
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn forall(var: &str, ty: TypeExpr, body: Formula) -> Formula {
        Formula::Forall(var.to_string(), ty, Box::new(body))
    }

    pub fn exists(var: &str, ty: TypeExpr, body: Formula) -> Formula {
        Formula::Exists(var.to_string(), ty, Box::new(body))
    }

    pub fn atom(name: &str, args: &[&str]) -> Formula {
        Formula::Atom(
            name.to_string(),
            args.iter().map(|a| Term::Var(a.to_string())).collect(),
        )
    }

    // Binding strength used by the printer; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => 0,
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(..) => 5,
            _ => 6,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Top => f.write_str("top")?,
            Formula::Bottom => f.write_str("bottom")?,
            Formula::Atom(name, args) => {
                f.write_str(name)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
            }
            Formula::Not(a) => {
                f.write_str("not ")?;
                a.write(f, 5)?;
            }
            Formula::And(a, b) => {
                a.write(f, 4)?;
                f.write_str(" and ")?;
                b.write(f, 5)?;
            }
            Formula::Or(a, b) => {
                a.write(f, 3)?;
                f.write_str(" or ")?;
                b.write(f, 4)?;
            }
            Formula::Implies(a, b) => {
                a.write(f, 3)?;
                f.write_str(" implies ")?;
                b.write(f, 2)?;
            }
            Formula::Iff(a, b) => {
                a.write(f, 1)?;
                f.write_str(" iff ")?;
                b.write(f, 2)?;
            }
            Formula::Forall(v, t, body) => {
                write!(f, "forall {v} : {t} . ")?;
                body.write(f, 0)?;
            }
            Formula::Exists(v, t, body) => {
                write!(f, "exists {v} : {t} . ")?;
                body.write(f, 0)?;
            }
            Formula::Member(t, s) => write!(f, "{t} in {s}")?,
            Formula::Eq(a, b) => write!(f, "{a} = {b}")?,
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeExpr::Named(n) => f.write_str(n),
            TypeExpr::Power(t) => write!(f, "P({t})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Point { label, space } if is_plain_ident(label) => write!(f, "{label}@{space}"),
            Term::Point { label, space } => write!(f, "\"{label}\"@{space}"),
        }
    }
}

impl fmt::Display for SetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetTerm::Var(v) => f.write_str(v),
            SetTerm::Comprehension { var, ty, body } => write!(f, "{{ {var} : {ty} | {body} }}"),
        }
    }
}
