use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::FormulaError;

/// Formulas over variables, the constant `0` and `→`. Negation is `φ → 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    Zero,
    Arrow(Box<Formula>, Box<Formula>),
}

/// A step into a subformula: the antecedent (`L`) or consequent (`R`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

/// Metavariable substitution.
pub type Subst = BTreeMap<String, Formula>;

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn arrow(a: Formula, b: Formula) -> Formula {
        Formula::Arrow(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Formula) -> Formula {
        Formula::arrow(a, Formula::Zero)
    }

    /// `0 → 0`.
    pub fn top() -> Formula {
        Formula::neg(Formula::Zero)
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Zero => 0,
            Formula::Arrow(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Variables in first-occurrence order.
    pub fn vars(&self) -> Vec<String> {
        fn walk(f: &Formula, seen: &mut BTreeSet<String>, out: &mut Vec<String>) {
            match f {
                Formula::Var(v) => {
                    if seen.insert(v.clone()) {
                        out.push(v.clone());
                    }
                }
                Formula::Zero => {}
                Formula::Arrow(a, b) => {
                    walk(a, seen, out);
                    walk(b, seen, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut BTreeSet::new(), &mut out);
        out
    }

    /// Replace variables by their images; unmapped variables stay.
    pub fn substitute(&self, subst: &Subst) -> Formula {
        match self {
            Formula::Var(v) => subst.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Zero => Formula::Zero,
            Formula::Arrow(a, b) => Formula::arrow(a.substitute(subst), b.substitute(subst)),
        }
    }

    /// Syntactic matching: treat variables of `self` as metavariables and
    /// extend `subst` so that `self` instantiates to `target`.
    pub fn match_into(&self, target: &Formula, subst: &mut Subst) -> bool {
        match (self, target) {
            (Formula::Var(v), _) => match subst.get(v) {
                Some(bound) => bound == target,
                None => {
                    subst.insert(v.clone(), target.clone());
                    true
                }
            },
            (Formula::Zero, Formula::Zero) => true,
            (Formula::Arrow(a, b), Formula::Arrow(c, d)) => {
                a.match_into(c, subst) && b.match_into(d, subst)
            }
            _ => false,
        }
    }

    pub fn at(&self, path: &[Side]) -> Option<&Formula> {
        match (path.split_first(), self) {
            (None, _) => Some(self),
            (Some((Side::L, rest)), Formula::Arrow(a, _)) => a.at(rest),
            (Some((Side::R, rest)), Formula::Arrow(_, b)) => b.at(rest),
            _ => None,
        }
    }

    /// A copy with the subformula at `path` replaced.
    pub fn replace_at(&self, path: &[Side], with: &Formula) -> Option<Formula> {
        match (path.split_first(), self) {
            (None, _) => Some(with.clone()),
            (Some((Side::L, rest)), Formula::Arrow(a, b)) => {
                Some(Formula::arrow(a.replace_at(rest, with)?, (**b).clone()))
            }
            (Some((Side::R, rest)), Formula::Arrow(a, b)) => {
                Some(Formula::arrow((**a).clone(), b.replace_at(rest, with)?))
            }
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<Formula, FormulaError> {
        let mut p = Parser { src: text, pos: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Zero => write!(f, "0"),
            Formula::Arrow(a, b) if **b == Formula::Zero => write!(f, "~{a}"),
            Formula::Arrow(a, b) => write!(f, "({a}->{b})"),
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

// expr  ::= unary ("->" expr)?
// unary ::= "~" unary | atom
// atom  ::= IDENT | "0" | "(" expr ")"
struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> FormulaError {
        FormulaError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Formula, FormulaError> {
        let lhs = self.unary()?;
        self.skip_ws();
        if self.eat("->") {
            let rhs = self.expr()?;
            Ok(Formula::arrow(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<Formula, FormulaError> {
        self.skip_ws();
        if self.eat("~") {
            Ok(Formula::neg(self.unary()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, FormulaError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("expected a formula, found end of input")),
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                self.skip_ws();
                if !self.eat(")") {
                    return Err(self.error("expected `)`"));
                }
                Ok(f)
            }
            Some('0') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(self.error("unexpected character after `0`"));
                }
                Ok(Formula::Zero)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        self.pos += c.len_utf8();
                    } else {
                        break;
                    }
                }
                Ok(Formula::Var(self.src[start..self.pos].to_string()))
            }
            Some(c) => Err(self.error(&format!("unexpected character `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Formula {
        Formula::var(s)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            Formula::parse("(p->(q->p))").unwrap(),
            Formula::arrow(v("p"), Formula::arrow(v("q"), v("p")))
        );
        assert_eq!(Formula::parse("~p").unwrap(), Formula::arrow(v("p"), Formula::Zero));
        let err = Formula::parse("p->").unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn negation_binds_tighter_and_arrow_is_right_associative() {
        assert_eq!(
            Formula::parse("~p -> q -> p").unwrap(),
            Formula::arrow(Formula::neg(v("p")), Formula::arrow(v("q"), v("p")))
        );
        assert_eq!(Formula::parse(" ( 0 -> 0 ) ").unwrap(), Formula::top());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Formula::parse("").unwrap_err().offset, 0);
        assert_eq!(Formula::parse("(p->q").unwrap_err().offset, 5);
        assert_eq!(Formula::parse("p q").unwrap_err().offset, 2);
        assert_eq!(Formula::parse("1").unwrap_err().offset, 0);
    }

    #[test]
    fn printing_is_canonical() {
        let f = Formula::parse("~~p -> (q -> 0) -> r").unwrap();
        assert_eq!(f.to_string(), "(~~p->(~q->r))");
    }

    #[test]
    fn matching_and_substitution() {
        let schema = Formula::parse("X -> (Y -> X)").unwrap();
        let target = Formula::parse("(0->0) -> (p -> (0->0))").unwrap();
        let mut s = Subst::new();
        assert!(schema.match_into(&target, &mut s));
        assert_eq!(s["X"], Formula::top());
        assert_eq!(schema.substitute(&s), target);
        let mut s = Subst::new();
        assert!(!schema.match_into(&Formula::parse("p -> (q -> q)").unwrap(), &mut s));
    }

    #[test]
    fn paths() {
        let f = Formula::parse("(p -> ~~q)").unwrap();
        assert_eq!(f.at(&[Side::R, Side::L]), Some(&Formula::neg(v("q"))));
        assert_eq!(f.at(&[Side::L, Side::L]), None);
        let g = f.replace_at(&[Side::R], &v("q")).unwrap();
        assert_eq!(g, Formula::arrow(v("p"), v("q")));
    }

    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::Zero),
            "[pqr]".prop_map(|s| Formula::Var(s)),
            "[a-z][a-z0-9_']{0,3}".prop_map(|s| Formula::Var(s)),
        ];
        leaf.prop_recursive(8, 64, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| Formula::arrow(a, b))
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            prop_assert!(f.depth() <= 8);
            let back = Formula::parse(&f.to_string()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
