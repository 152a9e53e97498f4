//! Proof kernel for L_OMP.
//!
//! A derivation is a numbered list of judgments, each justified by an axiom
//! schema, a rule applied to earlier lines, a hypothesis, or a rewrite with a
//! previously derived identity. Schema matching is purely syntactic.
//!
//! Text format, one line per step:
//!
//! ```text
//! 1. |- (0->0)                   ; B2 {X:=0}
//! 2. |- ((0->0)->(p->(0->0)))    ; B1
//! 3. |- (p->(0->0))              ; MP [1,2]
//! 4. ~~p ~= p                    ; B3
//! 5. |- p                        ; HYP [1]
//! 6. |- ~~p                      ; RW [5,4] @
//! ```
//!
//! `RW [m,k] @path` rewrites the subformula of line `m` at `path` (a word
//! over `L`/`R`, empty for the root) using the identity on line `k`, in
//! either direction.

use std::fmt;
use std::sync::OnceLock;

use crate::error::ParseError;
use crate::logic::formula::{Formula, Side, Subst};
use crate::report::{ItemReport, ModelReport, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Judgment {
    /// `⊢ φ`
    Assert(Formula),
    /// `φ ≈ ψ`
    Ident(Formula, Formula),
}

impl Judgment {
    pub fn parse(text: &str) -> Result<Judgment, String> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("|-") {
            return Formula::parse(rest)
                .map(Judgment::Assert)
                .map_err(|e| e.to_string());
        }
        if let Some((l, r)) = text.split_once("~=") {
            let a = Formula::parse(l).map_err(|e| format!("left side: {e}"))?;
            let b = Formula::parse(r).map_err(|e| format!("right side: {e}"))?;
            return Ok(Judgment::Ident(a, b));
        }
        // a bare formula is an assertion
        Formula::parse(text)
            .map(Judgment::Assert)
            .map_err(|e| e.to_string())
    }

    pub fn match_into(&self, target: &Judgment, subst: &mut Subst) -> bool {
        match (self, target) {
            (Judgment::Assert(p), Judgment::Assert(t)) => p.match_into(t, subst),
            (Judgment::Ident(p, q), Judgment::Ident(s, t)) => {
                p.match_into(s, subst) && q.match_into(t, subst)
            }
            _ => false,
        }
    }

    pub fn substitute(&self, subst: &Subst) -> Judgment {
        match self {
            Judgment::Assert(f) => Judgment::Assert(f.substitute(subst)),
            Judgment::Ident(a, b) => Judgment::Ident(a.substitute(subst), b.substitute(subst)),
        }
    }

    pub fn vars(&self) -> Vec<String> {
        match self {
            Judgment::Assert(f) => f.vars(),
            Judgment::Ident(a, b) => {
                let mut v = a.vars();
                for x in b.vars() {
                    if !v.contains(&x) {
                        v.push(x);
                    }
                }
                v
            }
        }
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Judgment::Assert(a) => write!(f, "|- {a}"),
            Judgment::Ident(a, b) => write!(f, "{a} ~= {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    B1,
    B2,
    B3,
    B4,
    B5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    MP,
    Sf,
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::B1, Axiom::B2, Axiom::B3, Axiom::B4, Axiom::B5];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::B1 => "B1",
            Axiom::B2 => "B2",
            Axiom::B3 => "B3",
            Axiom::B4 => "B4",
            Axiom::B5 => "B5",
        }
    }

    pub fn schema(self) -> &'static Schema {
        &schemas()[self as usize]
    }
}

impl Rule {
    pub const ALL: [Rule; 7] = [Rule::MP, Rule::Sf, Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5];

    pub fn name(self) -> &'static str {
        match self {
            Rule::MP => "MP",
            Rule::Sf => "Sf",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        }
    }

    pub fn schema(self) -> &'static Schema {
        &schemas()[5 + self as usize]
    }
}

/// An axiom or rule: premises and conclusion over metavariables `X, Y, Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub name: String,
    pub premises: Vec<Judgment>,
    pub conclusion: Judgment,
}

impl Schema {
    pub fn new(name: &str, premises: &[&str], conclusion: &str) -> Schema {
        let j = |s: &str| Judgment::parse(s).unwrap_or_else(|e| panic!("bad schema {name}: {e}"));
        Schema {
            name: name.to_string(),
            premises: premises.iter().map(|p| j(p)).collect(),
            conclusion: j(conclusion),
        }
    }

    /// Metavariables in order of first occurrence, premises first.
    pub fn metavars(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for j in self.premises.iter().chain(std::iter::once(&self.conclusion)) {
            for v in j.vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// B1..B5 then MP, Sf, R1..R5.
fn schemas() -> &'static [Schema] {
    static SCHEMAS: OnceLock<Vec<Schema>> = OnceLock::new();
    SCHEMAS.get_or_init(|| {
        vec![
            Schema::new("B1", &[], "|- X -> (Y -> X)"),
            Schema::new("B2", &[], "|- X -> X"),
            Schema::new("B3", &[], "~~X ~= X"),
            Schema::new("B4", &[], "|- 0 -> X"),
            Schema::new("B5", &[], "|- (~X -> X) -> X"),
            Schema::new("MP", &["|- X", "|- X -> Y"], "|- Y"),
            Schema::new("Sf", &["|- X -> Y"], "|- (Y -> Z) -> (X -> Z)"),
            Schema::new("R1", &["|- X -> Y", "|- Y -> X"], "X ~= Y"),
            Schema::new("R2", &["|- X -> Y"], "(~((~Y -> X) -> X) -> X) -> X ~= Y"),
            Schema::new("R3", &["|- X -> ~Y"], "|- X -> ((X -> Y) -> Y)"),
            Schema::new("R4", &["|- X -> ~Y"], "|- Y -> ((X -> Y) -> Y)"),
            Schema::new(
                "R5",
                &["|- X -> ~Y", "|- X -> Z", "|- Y -> Z"],
                "|- ((X -> Y) -> Y) -> Z",
            ),
        ]
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom { axiom: Axiom, subst: Subst },
    Rule { rule: Rule, premises: Vec<usize>, subst: Subst },
    /// 1-based index into the hypothesis list.
    Hypothesis(usize),
    IdentRewrite { line: usize, identity: usize, path: Vec<Side> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub number: usize,
    pub judgment: Judgment,
    pub justification: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    pub lines: Vec<ProofLine>,
}

fn parse_subst(body: &str, ln: usize) -> Result<Subst, ParseError> {
    let mut subst = Subst::new();
    for part in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (var, f) = part
            .split_once(":=")
            .ok_or_else(|| ParseError::new(ln, format!("expected `V:=formula`, got `{part}`")))?;
        let f = Formula::parse(f).map_err(|e| ParseError::new(ln, format!("substitution: {e}")))?;
        subst.insert(var.trim().to_string(), f);
    }
    Ok(subst)
}

fn parse_refs(body: &str, ln: usize) -> Result<Vec<usize>, ParseError> {
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| ParseError::new(ln, format!("bad line reference `{s}`")))
        })
        .collect()
}

fn parse_justification(text: &str, ln: usize) -> Result<Justification, ParseError> {
    let text = text.trim();
    let (name, mut rest) = text.split_at(text.find(|c: char| c.is_whitespace() || c == '[' || c == '{' || c == '@').unwrap_or(text.len()));
    let mut refs = Vec::new();
    let mut subst = Subst::new();
    let mut path = None;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if let Some(r) = rest.strip_prefix('[') {
            let end = r.find(']').ok_or_else(|| ParseError::new(ln, "unclosed `[`"))?;
            refs = parse_refs(&r[..end], ln)?;
            rest = &r[end + 1..];
        } else if let Some(r) = rest.strip_prefix('{') {
            let end = r.find('}').ok_or_else(|| ParseError::new(ln, "unclosed `{`"))?;
            subst = parse_subst(&r[..end], ln)?;
            rest = &r[end + 1..];
        } else if let Some(r) = rest.strip_prefix('@') {
            let end = r.find(char::is_whitespace).unwrap_or(r.len());
            let steps = r[..end]
                .chars()
                .map(|c| match c {
                    'L' | 'l' => Ok(Side::L),
                    'R' | 'r' => Ok(Side::R),
                    _ => Err(ParseError::new(ln, format!("bad path step `{c}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            path = Some(steps);
            rest = &r[end..];
        } else {
            return Err(ParseError::new(ln, format!("unexpected `{rest}`")));
        }
    }
    let want = |k: usize| -> Result<(), ParseError> {
        if refs.len() == k {
            Ok(())
        } else {
            Err(ParseError::new(ln, format!("{name} takes {k} line reference(s), got {}", refs.len())))
        }
    };
    let axiom = match name {
        "B1" => Some(Axiom::B1),
        "B2" => Some(Axiom::B2),
        "B3" => Some(Axiom::B3),
        "B4" => Some(Axiom::B4),
        "B5" => Some(Axiom::B5),
        _ => None,
    };
    if let Some(axiom) = axiom {
        want(0)?;
        return Ok(Justification::Axiom { axiom, subst });
    }
    let rule = match name {
        "MP" => Some(Rule::MP),
        "Sf" => Some(Rule::Sf),
        "R1" => Some(Rule::R1),
        "R2" => Some(Rule::R2),
        "R3" => Some(Rule::R3),
        "R4" => Some(Rule::R4),
        "R5" => Some(Rule::R5),
        _ => None,
    };
    if let Some(rule) = rule {
        return Ok(Justification::Rule {
            rule,
            premises: refs,
            subst,
        });
    }
    match name {
        "HYP" => {
            want(1)?;
            Ok(Justification::Hypothesis(refs[0]))
        }
        "RW" => {
            want(2)?;
            let path = path.ok_or_else(|| ParseError::new(ln, "RW needs a position `@path`"))?;
            Ok(Justification::IdentRewrite {
                line: refs[0],
                identity: refs[1],
                path,
            })
        }
        _ => Err(ParseError::new(ln, format!("unknown justification `{name}`"))),
    }
}

impl Derivation {
    /// Parse the line format described in the module docs. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Derivation, ParseError> {
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (head, just) = body
                .split_once(';')
                .ok_or_else(|| ParseError::new(ln, "missing `;` before the justification"))?;
            let (num, judgment) = head
                .split_once('.')
                .ok_or_else(|| ParseError::new(ln, "expected `<n>. <judgment>`"))?;
            let number: usize = num
                .trim()
                .parse()
                .map_err(|_| ParseError::new(ln, format!("bad line number `{}`", num.trim())))?;
            let judgment = Judgment::parse(judgment).map_err(|e| ParseError::new(ln, e))?;
            let justification = parse_justification(just, ln)?;
            lines.push(ProofLine {
                number,
                judgment,
                justification,
            });
        }
        Ok(Derivation { lines })
    }

    /// Hypotheses declared in `# hyp <judgment>` comment lines.
    pub fn declared_hypotheses(text: &str) -> Result<Vec<Judgment>, ParseError> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            if let Some(rest) = raw.trim().strip_prefix('#') {
                if let Some(h) = rest.trim().strip_prefix("hyp ") {
                    out.push(Judgment::parse(h).map_err(|e| ParseError::new(i + 1, e))?);
                }
            }
        }
        Ok(out)
    }

    /// The judgment on the last line.
    pub fn conclusion(&self) -> Option<&Judgment> {
        self.lines.last().map(|l| &l.judgment)
    }

    /// Check every line against its justification. The report names the
    /// first bad line.
    pub fn check(&self, hypotheses: &[Judgment]) -> ModelReport {
        let mut checked = 0u64;
        let mut result = Ok(());
        for (i, line) in self.lines.iter().enumerate() {
            checked += 1;
            if let Err(reason) = self.check_line(i, line, hypotheses) {
                result = Err(Witness::at_line(line.number, reason));
                break;
            }
        }
        ModelReport::single("derivation", ItemReport::from_result("lines", checked, result))
    }

    fn earlier(&self, i: usize, number: usize) -> Result<&Judgment, String> {
        self.lines[..i]
            .iter()
            .find(|l| l.number == number)
            .map(|l| &l.judgment)
            .ok_or_else(|| format!("line {number} is not an earlier line"))
    }

    fn check_line(&self, i: usize, line: &ProofLine, hypotheses: &[Judgment]) -> Result<(), String> {
        if i > 0 && line.number <= self.lines[i - 1].number {
            return Err(format!("line numbers must increase (after {})", self.lines[i - 1].number));
        }
        match &line.justification {
            Justification::Axiom { axiom, subst } => {
                apply_schema(axiom.schema(), &[], &line.judgment, subst)
            }
            Justification::Rule { rule, premises, subst } => {
                let schema = rule.schema();
                if premises.len() != schema.premises.len() {
                    return Err(format!(
                        "{} takes {} premise(s), got {}",
                        schema.name,
                        schema.premises.len(),
                        premises.len()
                    ));
                }
                let prem: Vec<&Judgment> = premises
                    .iter()
                    .map(|&n| self.earlier(i, n))
                    .collect::<Result<_, _>>()?;
                apply_schema(schema, &prem, &line.judgment, subst)
            }
            Justification::Hypothesis(k) => {
                let h = k
                    .checked_sub(1)
                    .and_then(|k| hypotheses.get(k))
                    .ok_or_else(|| format!("no hypothesis {k}"))?;
                if *h == line.judgment {
                    Ok(())
                } else {
                    Err(format!("hypothesis {k} is `{h}`"))
                }
            }
            Justification::IdentRewrite { line: src, identity, path } => {
                let Judgment::Assert(f) = self.earlier(i, *src)? else {
                    return Err(format!("line {src} is not an assertion"));
                };
                let Judgment::Ident(a, b) = self.earlier(i, *identity)? else {
                    return Err(format!("line {identity} is not an identity"));
                };
                let sub = f
                    .at(path)
                    .ok_or_else(|| format!("no subformula at the given position of line {src}"))?;
                let replacement = if sub == a {
                    b
                } else if sub == b {
                    a
                } else {
                    return Err(format!("subformula `{sub}` matches neither side of line {identity}"));
                };
                let rewritten = Judgment::Assert(f.replace_at(path, replacement).expect("path checked"));
                if rewritten == line.judgment {
                    Ok(())
                } else {
                    Err(format!("rewrite yields `{rewritten}`"))
                }
            }
        }
    }
}

fn apply_schema(
    schema: &Schema,
    premises: &[&Judgment],
    conclusion: &Judgment,
    given: &Subst,
) -> Result<(), String> {
    let metavars = schema.metavars();
    if let Some(extra) = given.keys().find(|k| !metavars.contains(k)) {
        return Err(format!("{} has no metavariable {extra}", schema.name));
    }
    let mut subst = given.clone();
    for (k, (pat, actual)) in schema.premises.iter().zip(premises).enumerate() {
        if !pat.match_into(actual, &mut subst) {
            return Err(format!(
                "premise {} `{actual}` is not an instance of `{}`",
                k + 1,
                pat.substitute(&subst)
            ));
        }
    }
    if schema.conclusion.match_into(conclusion, &mut subst) {
        Ok(())
    } else {
        Err(format!(
            "`{conclusion}` is not an instance of {} (`{}`)",
            schema.name,
            schema.conclusion.substitute(&subst)
        ))
    }
}
