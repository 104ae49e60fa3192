//! The line-oriented `.oblige` game format.
//!
//! ```text
//! oblige 1
//! nodes: 3
//! names: x y z          # optional, defaults to 0 1 2 ...
//! owners: EAA           # E = player ∃, A = player ∀
//! colors: a b c
//! edge x y {a}
//! edge y y {}
//! strong: Fin(a) | Inf(b)
//! weak: Inf(c)
//! ```
//!
//! `#` starts a comment. Formulas use `Inf(c)`, `Fin(c)`, `true`, `false`, `&`, `|` and
//! parentheses, with `&` binding tighter than `|`. Repeated edges between the same pair of
//! nodes are merged by color union.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::game::{Arena, Color, ColorSet, ElFormula, GameError, ObligingGame, Owner};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header `oblige {FORMAT_VERSION}`")]
    MissingHeader,
    #[error("unsupported format version `{0}`")]
    UnsupportedVersion(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("duplicate `{0}` directive")]
    Duplicate(&'static str),
    #[error("missing `{0}` directive")]
    Missing(&'static str),
    #[error("`{0}` must come after `{1}`")]
    OutOfOrder(&'static str, &'static str),
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("bad owner character `{0}` (expected E or A)")]
    BadOwner(char),
    #[error("expected {expected} entries, got {got}")]
    Count { expected: usize, got: usize },
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("undeclared color `{0}`")]
    UnknownColor(String),
    #[error("malformed edge: {0}")]
    MalformedEdge(String),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("{0}")]
    Invalid(GameError),
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\'')
}

/// A line with comments removed, remembering where its content starts.
struct Line<'a> {
    number: usize,
    text: &'a str,
    offset: usize,
}

impl<'a> Line<'a> {
    fn col_of(&self, sub: &str) -> usize {
        // `sub` must be a slice of `self.text`
        self.offset + (sub.as_ptr() as usize - self.text.as_ptr() as usize) + 1
    }
}

struct Edge<'a> {
    line: usize,
    col: usize,
    src: &'a str,
    dst: &'a str,
    colors: Vec<(&'a str, usize)>,
}

/// Parses and validates a game.
pub fn parse_game(text: &str) -> Result<ObligingGame, ParseError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        let offset = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some(Line { number: i + 1, text: trimmed, offset })
    });

    let header = lines.next().ok_or_else(|| err(1, 1, ParseErrorKind::MissingHeader))?;
    let mut words = header.text.split_whitespace();
    if words.next() != Some("oblige") {
        return Err(err(header.number, header.offset + 1, ParseErrorKind::MissingHeader));
    }
    match words.next() {
        Some(v) if v == FORMAT_VERSION.to_string() && words.next().is_none() => {}
        Some(v) => {
            return Err(err(
                header.number,
                header.col_of(v),
                ParseErrorKind::UnsupportedVersion(v.to_string()),
            ))
        }
        None => return Err(err(header.number, header.offset + 1, ParseErrorKind::MissingHeader)),
    }

    let mut nodes: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut owners: Option<Vec<Owner>> = None;
    let mut colors: Option<Vec<String>> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut strong: Option<(Line, &str)> = None;
    let mut weak: Option<(Line, &str)> = None;

    for line in lines {
        let (key, rest) = match line.text.split_once(|c: char| c == ':' || c.is_whitespace()) {
            Some((k, r)) => (k, r),
            None => (line.text, ""),
        };
        let here = |sub: &str| line.col_of(sub);
        match key {
            "nodes" => {
                if nodes.is_some() {
                    return Err(err(line.number, here(key), ParseErrorKind::Duplicate("nodes")));
                }
                let v = rest.trim();
                let n: usize = v
                    .parse()
                    .map_err(|_| err(line.number, here(key), ParseErrorKind::BadNumber(v.to_string())))?;
                nodes = Some((n, line.number));
            }
            "names" | "owners" | "edge" if nodes.is_none() => {
                let name = match key {
                    "names" => "names",
                    "owners" => "owners",
                    _ => "edge",
                };
                return Err(err(line.number, here(key), ParseErrorKind::OutOfOrder(name, "nodes")));
            }
            "names" => {
                if names.is_some() {
                    return Err(err(line.number, here(key), ParseErrorKind::Duplicate("names")));
                }
                let (n, _) = nodes.unwrap();
                let list: Vec<&str> = rest.split_whitespace().collect();
                if list.len() != n {
                    return Err(err(
                        line.number,
                        here(key),
                        ParseErrorKind::Count { expected: n, got: list.len() },
                    ));
                }
                if let Some(bad) = list.iter().find(|s| !s.chars().all(is_ident_char)) {
                    return Err(err(line.number, here(bad), ParseErrorKind::UnknownNode(bad.to_string())));
                }
                names = Some(list.into_iter().map(String::from).collect());
            }
            "owners" => {
                if owners.is_some() {
                    return Err(err(line.number, here(key), ParseErrorKind::Duplicate("owners")));
                }
                let (n, _) = nodes.unwrap();
                let s = rest.trim();
                let mut list = Vec::new();
                for (i, ch) in s.chars().enumerate() {
                    list.push(match ch {
                        'E' => Owner::Exists,
                        'A' => Owner::Forall,
                        other => {
                            return Err(err(line.number, here(s) + i, ParseErrorKind::BadOwner(other)))
                        }
                    });
                }
                if list.len() != n {
                    return Err(err(
                        line.number,
                        here(key),
                        ParseErrorKind::Count { expected: n, got: list.len() },
                    ));
                }
                owners = Some(list);
            }
            "colors" => {
                if colors.is_some() {
                    return Err(err(line.number, here(key), ParseErrorKind::Duplicate("colors")));
                }
                let list: Vec<&str> = rest.split_whitespace().collect();
                if let Some(bad) = list.iter().find(|s| !s.chars().all(is_ident_char)) {
                    return Err(err(line.number, here(bad), ParseErrorKind::UnknownColor(bad.to_string())));
                }
                colors = Some(list.into_iter().map(String::from).collect());
            }
            "edge" => edges.push(parse_edge(&line, key, rest)?),
            "strong" | "weak" => {
                let slot = if key == "strong" { &mut strong } else { &mut weak };
                if slot.is_some() {
                    let which = if key == "strong" { "strong" } else { "weak" };
                    return Err(err(line.number, here(key), ParseErrorKind::Duplicate(which)));
                }
                *slot = Some((line, rest));
            }
            other => {
                return Err(err(
                    line.number,
                    here(other),
                    ParseErrorKind::UnknownDirective(other.to_string()),
                ))
            }
        }
    }

    let end = text.lines().count().max(1);
    let (n, nodes_line) = nodes.ok_or_else(|| err(end, 1, ParseErrorKind::Missing("nodes")))?;
    let owners = owners.ok_or_else(|| err(end, 1, ParseErrorKind::Missing("owners")))?;
    let colors = colors.ok_or_else(|| err(end, 1, ParseErrorKind::Missing("colors")))?;
    let names = names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
    let node_ids: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let color_ids: HashMap<&str, Color> =
        colors.iter().enumerate().map(|(i, s)| (s.as_str(), Color(i))).collect();

    let mut resolved = Vec::with_capacity(edges.len());
    for e in &edges {
        let node = |name: &str, col: usize| {
            node_ids
                .get(name)
                .copied()
                .ok_or_else(|| err(e.line, col, ParseErrorKind::UnknownNode(name.to_string())))
        };
        let src = node(e.src, e.col)?;
        let dst = node(e.dst, e.col)?;
        let mut cs = ColorSet::EMPTY;
        for &(c, col) in &e.colors {
            let id = color_ids
                .get(c)
                .ok_or_else(|| err(e.line, col, ParseErrorKind::UnknownColor(c.to_string())))?;
            cs.insert(*id);
        }
        resolved.push((src, dst, cs));
    }

    let formula = |slot: Option<(Line, &str)>, which: &'static str| match slot {
        None => Err(err(end, 1, ParseErrorKind::Missing(which))),
        Some((line, src)) => {
            let base = line.col_of(src);
            parse_formula(src, &color_ids).map_err(|(col, kind)| err(line.number, base + col, kind))
        }
    };
    let strong_f = formula(strong, "strong")?;
    let weak_f = formula(weak, "weak")?;

    let arena = Arena::new(names, owners, resolved)
        .map_err(|e| err(nodes_line, 1, ParseErrorKind::Invalid(e)))?;
    ObligingGame::new(arena, colors, strong_f, weak_f)
        .map_err(|e| err(nodes_line, 1, ParseErrorKind::Invalid(e)))
}

fn parse_edge<'a>(line: &Line<'a>, key: &'a str, rest: &'a str) -> Result<Edge<'a>, ParseError> {
    let col = line.col_of(key);
    let bad = |msg: &str| err(line.number, col, ParseErrorKind::MalformedEdge(msg.to_string()));
    let open = rest.find('{').ok_or_else(|| bad("expected `{colors}`"))?;
    let close = rest.rfind('}').ok_or_else(|| bad("missing `}`"))?;
    if close < open || !rest[close + 1..].trim().is_empty() {
        return Err(bad("unexpected text after color set"));
    }
    let ends: Vec<&str> = rest[..open].split_whitespace().collect();
    if ends.len() != 2 {
        return Err(bad("expected `edge <src> <dst> {colors}`"));
    }
    let mut colors = Vec::new();
    for c in rest[open + 1..close].split(',') {
        let c = c.trim();
        if c.is_empty() {
            continue;
        }
        colors.push((c, line.col_of(c)));
    }
    Ok(Edge { line: line.number, col, src: ends[0], dst: ends[1], colors })
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok<'a> {
    Ident(&'a str),
    And,
    Or,
    Open,
    Close,
}

/// Parses a formula; errors carry a 0-based column into `src`.
pub(crate) fn parse_formula(
    src: &str,
    colors: &HashMap<&str, Color>,
) -> Result<ElFormula, (usize, ParseErrorKind)> {
    let mut toks = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '&' | '|' | '(' | ')' => {
                chars.next();
                toks.push((
                    i,
                    match ch {
                        '&' => Tok::And,
                        '|' => Tok::Or,
                        '(' => Tok::Open,
                        _ => Tok::Close,
                    },
                ));
            }
            c if is_ident_char(c) => {
                let start = i;
                let mut end = i;
                while let Some(&(j, c)) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    end = j + c.len_utf8();
                    chars.next();
                }
                toks.push((start, Tok::Ident(&src[start..end])));
            }
            other => {
                return Err((i, ParseErrorKind::MalformedFormula(format!("unexpected `{other}`"))));
            }
        }
    }
    let mut p = FormulaParser { toks, pos: 0, end: src.len(), colors };
    let f = p.or()?;
    if let Some(&(col, _)) = p.toks.get(p.pos) {
        return Err((col, ParseErrorKind::MalformedFormula("trailing input".into())));
    }
    Ok(f)
}

struct FormulaParser<'a, 'c> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
    colors: &'c HashMap<&'c str, Color>,
}

impl<'a> FormulaParser<'a, '_> {
    fn peek(&self) -> Option<Tok<'a>> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn fail<T>(&self, msg: &str) -> Result<T, (usize, ParseErrorKind)> {
        Err((self.col(), ParseErrorKind::MalformedFormula(msg.to_string())))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), (usize, ParseErrorKind)> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("expected {what}"))
        }
    }

    fn or(&mut self) -> Result<ElFormula, (usize, ParseErrorKind)> {
        let mut f = self.and()?;
        while self.peek() == Some(Tok::Or) {
            self.pos += 1;
            f = ElFormula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<ElFormula, (usize, ParseErrorKind)> {
        let mut f = self.atom()?;
        while self.peek() == Some(Tok::And) {
            self.pos += 1;
            f = ElFormula::and(f, self.atom()?);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<ElFormula, (usize, ParseErrorKind)> {
        match self.peek() {
            Some(Tok::Open) => {
                self.pos += 1;
                let f = self.or()?;
                self.expect(Tok::Close, "`)`")?;
                Ok(f)
            }
            Some(Tok::Ident("true")) => {
                self.pos += 1;
                Ok(ElFormula::True)
            }
            Some(Tok::Ident("false")) => {
                self.pos += 1;
                Ok(ElFormula::False)
            }
            Some(Tok::Ident(kw @ ("Inf" | "Fin"))) => {
                self.pos += 1;
                self.expect(Tok::Open, "`(`")?;
                let col = self.col();
                let name = match self.peek() {
                    Some(Tok::Ident(name)) => name,
                    _ => return self.fail("expected a color name"),
                };
                let c = *self
                    .colors
                    .get(name)
                    .ok_or((col, ParseErrorKind::UnknownColor(name.to_string())))?;
                self.pos += 1;
                self.expect(Tok::Close, "`)`")?;
                Ok(if kw == "Inf" { ElFormula::Inf(c) } else { ElFormula::Fin(c) })
            }
            Some(Tok::Ident(other)) => self.fail(&format!("unexpected `{other}`")),
            Some(_) => self.fail("unexpected operator"),
            None => self.fail("unexpected end of formula"),
        }
    }
}

/// Canonical text form: edges sorted, names omitted when they are the defaults.
pub fn serialize_game(game: &ObligingGame) -> String {
    let arena = game.arena();
    let n = arena.node_count();
    let mut out = String::new();
    writeln!(out, "oblige {FORMAT_VERSION}").unwrap();
    writeln!(out, "nodes: {n}").unwrap();
    if arena.names().iter().enumerate().any(|(i, s)| *s != i.to_string()) {
        writeln!(out, "names: {}", arena.names().join(" ")).unwrap();
    }
    let owners: String = arena
        .owners()
        .iter()
        .map(|o| if *o == Owner::Exists { 'E' } else { 'A' })
        .collect();
    writeln!(out, "owners: {owners}").unwrap();
    writeln!(out, "colors: {}", game.color_names().join(" ")).unwrap();
    for (v, w, cs) in arena.edges() {
        let names: Vec<&str> = cs.iter().map(|c| game.color_names()[c.0].as_str()).collect();
        writeln!(out, "edge {} {} {{{}}}", arena.name(v), arena.name(w), names.join(",")).unwrap();
    }
    writeln!(out, "strong: {}", game.strong().display(game.color_names())).unwrap();
    writeln!(out, "weak: {}", game.weak().display(game.color_names())).unwrap();
    out
}

/// Drops comments, blank lines and surrounding whitespace; used to compare texts.
pub fn normalize(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap().split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .map(|l| l + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "oblige 1
nodes: 2
owners: EA
colors: a b
edge 0 1 {a}
edge 1 0 {}
edge 1 1 {b}
edge 1 1 {a}   # merged with the previous edge
strong: Fin(a) | Inf(b)
weak: true
";

    #[test]
    fn parses_small_game() {
        let g = parse_game(SMALL).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.arena().edge_count(), 3);
        assert_eq!(g.arena().edge_colors(1, 1).unwrap().len(), 2);
        assert_eq!(g.arena().owner(1), Owner::Forall);
        assert_eq!(g.k(), 0);
    }

    #[test]
    fn round_trip() {
        let g = parse_game(SMALL).unwrap();
        let text = serialize_game(&g);
        assert_eq!(parse_game(&text).unwrap(), g);
        assert_eq!(serialize_game(&parse_game(&text).unwrap()), text);
    }

    #[test]
    fn precedence_and_nesting() {
        let ids: HashMap<&str, Color> = [("a", Color(0)), ("b", Color(1)), ("c", Color(2))].into();
        let f = parse_formula("Inf(a) | Fin(b) & Inf(c)", &ids).unwrap();
        assert_eq!(
            f,
            ElFormula::or(
                ElFormula::Inf(Color(0)),
                ElFormula::and(ElFormula::Fin(Color(1)), ElFormula::Inf(Color(2)))
            )
        );
        let g = parse_formula("Inf(a) & (Fin(b) & Inf(c))", &ids).unwrap();
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        assert_eq!(parse_formula(&g.display(&names).to_string(), &ids).unwrap(), g);
    }

    fn kind(text: &str) -> ParseError {
        parse_game(text).unwrap_err()
    }

    #[test]
    fn diagnostics() {
        let e = kind("oblige 1\nnodes: 2\nowners: EE\ncolors: a\nedge 0 1 {a}\nstrong: Inf(a)\nweak: true\n");
        assert_eq!(e.line, 2);
        assert!(e.to_string().contains("node `1` has no successor"), "{e}");

        let e = kind("oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 3 {a}\nstrong: Inf(a)\nweak: true\n");
        assert_eq!((e.line, e.kind), (5, ParseErrorKind::UnknownNode("3".into())));

        let e = kind("oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a, q}\nstrong: Inf(a)\nweak: true\n");
        assert_eq!((e.line, e.col, e.kind), (5, 14, ParseErrorKind::UnknownColor("q".into())));

        let e = kind("oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a}\nstrong: Inf(a) &\nweak: true\n");
        assert_eq!(e.line, 6);
        assert!(matches!(e.kind, ParseErrorKind::MalformedFormula(_)));

        let e = kind("oblige 2\n");
        assert_eq!(e.kind, ParseErrorKind::UnsupportedVersion("2".into()));
        assert_eq!(kind("nodes: 1\n").kind, ParseErrorKind::MissingHeader);
    }

    #[test]
    fn stray_edge_color_rejected() {
        let e = kind("oblige 1\nnodes: 1\nowners: E\ncolors: a b\nedge 0 0 {b}\nstrong: Inf(a)\nweak: true\n");
        assert!(matches!(e.kind, ParseErrorKind::Invalid(GameError::StrayEdgeColor(..))));
    }
}
