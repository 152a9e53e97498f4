//! Line-oriented text formats.
//!
//! `.omp` describes an orthoposet by cover edges and involution pairs:
//!
//! ```text
//! elements 6
//! names 0 a a' b b' 1
//! zero 0 one 1
//! cover 0 a
//! invol a a'
//! ```
//!
//! `.iop` lists every arrow entry:
//!
//! ```text
//! elements 2
//! names 0 1
//! zero 0
//! arrow 0 0 : 1
//! ```
//!
//! `#` starts a comment. Names are whitespace-free tokens and default to
//! `e0 .. e{n-1}`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::elements::{ElementId, ElementSet};
use crate::error::{LoadError, ParseError};
use crate::iop::IopTable;
use crate::poset::{BoundedPoset, OrthoPoset};
use crate::report::Named;

struct Header {
    n: usize,
    names: Vec<String>,
    index: HashMap<String, ElementId>,
}

impl Header {
    fn resolve(&self, line: usize, name: &str) -> Result<ElementId, ParseError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ParseError::new(line, format!("unknown element {name}")))
    }
}

/// Non-comment lines as (1-based line number, tokens).
fn tokenized(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

/// Reads `elements` and `names`, which must precede any other directive.
fn read_header<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, Vec<&'a str>)>>,
) -> Result<Header, ParseError> {
    let (ln, toks) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty input"))?;
    if toks[0] != "elements" || toks.len() != 2 {
        return Err(ParseError::new(ln, "expected `elements <n>`"));
    }
    let n: usize = toks[1]
        .parse()
        .map_err(|_| ParseError::new(ln, format!("bad element count {}", toks[1])))?;
    if n == 0 || n > crate::elements::MAX_ELEMENTS {
        return Err(ParseError::new(ln, format!("element count {n} outside 1..=64")));
    }
    let mut names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    if let Some((ln, toks)) = lines.peek() {
        if toks[0] == "names" {
            if toks.len() - 1 != n {
                return Err(ParseError::new(
                    *ln,
                    format!("{} names given for {n} elements", toks.len() - 1),
                ));
            }
            names = toks[1..].iter().map(|s| s.to_string()).collect();
            lines.next();
        }
    }
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), ElementId::new(i)).is_some() {
            return Err(ParseError::new(ln, format!("duplicate element name {name}")));
        }
    }
    Ok(Header { n, names, index })
}

/// Parse an `.omp` document. Structural invariants are verified by the
/// constructors, whose errors carry element names.
pub fn parse_omp(text: &str) -> Result<OrthoPoset, LoadError> {
    let mut lines = tokenized(text).peekable();
    let h = read_header(&mut lines)?;
    let mut zero = None;
    let mut one = None;
    let mut covers = Vec::new();
    let mut invol: Vec<Option<ElementId>> = vec![None; h.n];
    for (ln, toks) in lines {
        match toks[0] {
            "zero" | "one" => {
                if toks.len() % 2 != 0 {
                    return Err(ParseError::new(ln, "expected `zero <name>` and/or `one <name>`").into());
                }
                for pair in toks.chunks(2) {
                    let e = h.resolve(ln, pair[1])?;
                    match pair[0] {
                        "zero" => zero = Some(e),
                        "one" => one = Some(e),
                        other => return Err(ParseError::new(ln, format!("unexpected token {other}")).into()),
                    }
                }
            }
            "cover" => {
                if toks.len() != 3 {
                    return Err(ParseError::new(ln, "expected `cover <a> <b>`").into());
                }
                covers.push((h.resolve(ln, toks[1])?, h.resolve(ln, toks[2])?));
            }
            "invol" => {
                if toks.len() != 3 {
                    return Err(ParseError::new(ln, "expected `invol <a> <b>`").into());
                }
                let (a, b) = (h.resolve(ln, toks[1])?, h.resolve(ln, toks[2])?);
                for (x, y) in [(a, b), (b, a)] {
                    match invol[x.index()] {
                        Some(prev) if prev != y => {
                            return Err(ParseError::new(
                                ln,
                                format!("involution of {} given twice", h.names[x.index()]),
                            )
                            .into())
                        }
                        _ => invol[x.index()] = Some(y),
                    }
                }
            }
            "names" | "elements" => {
                return Err(ParseError::new(ln, format!("`{}` must come first", toks[0])).into())
            }
            other => return Err(ParseError::new(ln, format!("unknown directive {other}")).into()),
        }
    }
    let zero = zero.ok_or_else(|| ParseError::new(0, "missing `zero`"))?;
    let one = one.ok_or_else(|| ParseError::new(0, "missing `one`"))?;
    let invol: Vec<ElementId> = invol
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| ParseError::new(0, format!("involution undefined for {}", h.names[i]))))
        .collect::<Result<_, _>>()?;
    let poset = BoundedPoset::from_covers(Some(h.names), h.n, &covers, zero, one)?;
    Ok(OrthoPoset::new(poset, invol)?)
}

/// Serialize as `.omp` with Hasse covers.
pub fn write_omp(p: &OrthoPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements {}", p.len());
    let _ = writeln!(out, "names {}", p.names().join(" "));
    let _ = writeln!(out, "zero {} one {}", p.name(p.zero()), p.name(p.one()));
    for (a, b) in p.poset().covers() {
        let _ = writeln!(out, "cover {} {}", p.name(a), p.name(b));
    }
    for x in p.elements() {
        let xc = p.invol(x);
        if x <= xc {
            let _ = writeln!(out, "invol {} {}", p.name(x), p.name(xc));
        }
    }
    out
}

/// Parse an `.iop` document; every one of the `n²` entries must be listed.
pub fn parse_iop(text: &str) -> Result<IopTable, LoadError> {
    let mut lines = tokenized(text).peekable();
    let h = read_header(&mut lines)?;
    let mut zero = None;
    let mut entries: Vec<Option<ElementSet>> = vec![None; h.n * h.n];
    for (ln, toks) in lines {
        match toks[0] {
            "zero" => {
                if toks.len() != 2 {
                    return Err(ParseError::new(ln, "expected `zero <name>`").into());
                }
                zero = Some(h.resolve(ln, toks[1])?);
            }
            "arrow" => {
                if toks.len() < 5 || toks[3] != ":" {
                    return Err(ParseError::new(ln, "expected `arrow <x> <y> : <name>+`").into());
                }
                let (x, y) = (h.resolve(ln, toks[1])?, h.resolve(ln, toks[2])?);
                let set = toks[4..]
                    .iter()
                    .map(|t| h.resolve(ln, t))
                    .collect::<Result<ElementSet, _>>()?;
                let slot = &mut entries[x.index() * h.n + y.index()];
                if slot.is_some() {
                    return Err(ParseError::new(
                        ln,
                        format!("entry ({}, {}) given twice", toks[1], toks[2]),
                    )
                    .into());
                }
                *slot = Some(set);
            }
            "names" | "elements" => {
                return Err(ParseError::new(ln, format!("`{}` must come first", toks[0])).into())
            }
            other => return Err(ParseError::new(ln, format!("unknown directive {other}")).into()),
        }
    }
    let zero = zero.ok_or_else(|| ParseError::new(0, "missing `zero`"))?;
    let entries = entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            e.ok_or_else(|| {
                ParseError::new(
                    0,
                    format!("missing entry ({}, {})", h.names[i / h.n], h.names[i % h.n]),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IopTable::new(Some(h.names), zero, entries)?)
}

/// Serialize as `.iop`, rows in index order.
pub fn write_iop(t: &IopTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements {}", t.len());
    let _ = writeln!(out, "names {}", t.names().join(" "));
    let _ = writeln!(out, "zero {}", t.name(t.zero()));
    for x in t.elements() {
        for y in t.elements() {
            let vals: Vec<&str> = t.arrow(x, y).iter().map(|v| t.name(v)).collect();
            let _ = writeln!(out, "arrow {} {} : {}", t.name(x), t.name(y), vals.join(" "));
        }
    }
    out
}

/// A model file of either kind.
#[derive(Clone, Debug)]
pub enum Model {
    Omp(OrthoPoset),
    Iop(IopTable),
}

impl Model {
    /// Parse by content: a document with `arrow` lines is an `.iop`.
    pub fn parse(text: &str) -> Result<Model, LoadError> {
        let is_iop = tokenized(text).any(|(_, t)| t[0] == "arrow");
        if is_iop {
            Ok(Model::Iop(parse_iop(text)?))
        } else {
            Ok(Model::Omp(parse_omp(text)?))
        }
    }

    pub fn load(path: &Path) -> Result<Model, LoadError> {
        let text = std::fs::read_to_string(path)?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("omp") => Ok(Model::Omp(parse_omp(&text)?)),
            Some("iop") => Ok(Model::Iop(parse_iop(&text)?)),
            _ => Model::parse(&text),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, make_mo};
    use crate::error::StructureError;
    use crate::implication::arrow_table;

    #[test]
    fn omp_round_trip_on_catalog() {
        for e in catalog() {
            let text = write_omp(&e.structure);
            let back = parse_omp(&text).unwrap();
            assert_eq!(back, e.structure, "{}", e.name);
        }
    }

    #[test]
    fn iop_round_trip() {
        let t = arrow_table(&make_mo(2).unwrap());
        let back = parse_iop(&write_iop(&t)).unwrap();
        assert_eq!(back, t);
        assert!(matches!(Model::parse(&write_iop(&t)).unwrap(), Model::Iop(_)));
    }

    #[test]
    fn hand_written_mo2() {
        let text = "\
# MO2
elements 6
names 0 a a' b b' 1
zero 0   one 1
cover 0 a
cover 0 a'
cover 0 b
cover 0 b'
cover a 1
cover a' 1
cover b 1
cover b' 1
invol 0 1
invol a a'
invol b b'
";
        let p = parse_omp(text).unwrap();
        assert_eq!(p, make_mo(2).unwrap());
    }

    #[test]
    fn loader_reports_named_violation() {
        // antitone fails: a < b but b' = b not below a' = a
        let text = "elements 4\nnames 0 a b 1\nzero 0 one 1\ncover 0 a\ncover a b\ncover b 1\ninvol 0 1\ninvol a a\ninvol b b\n";
        let err = parse_omp(text).unwrap_err();
        match err {
            LoadError::Structure(StructureError::NotAntitone(x, y)) => {
                assert_eq!((x.as_str(), y.as_str()), ("a", "b"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let err = parse_omp("elements 2\nzero e0 one e1\nfrobnicate\n").unwrap_err();
        let LoadError::Parse(p) = err else { panic!() };
        assert_eq!(p.line, 3);
        let err = parse_omp("elements 2\nzero e0 one e1\ncover e0 nope\n").unwrap_err();
        let LoadError::Parse(p) = err else { panic!() };
        assert!(p.message.contains("nope"));
        let err = parse_iop("elements 1\nzero e0\n").unwrap_err();
        assert!(err.to_string().contains("missing entry"));
    }
}
