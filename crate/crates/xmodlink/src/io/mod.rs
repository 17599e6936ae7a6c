//! Text formats for groups (`.grp`), crossed modules (`.xmod`), racks
//! (`.rck`), rack cocycles (`.coc`), pairs (`.pair`) and diagrams (`.tng`).
//!
//! All formats are line based; `#` starts a comment and blank lines are
//! ignored. Paths inside a file are resolved relative to that file.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Elem, FiniteGroup, GroupHom, GroupRef};
use crate::diagram::SlicedDiagram;
use crate::pairs::ReidemeisterPair;
use crate::xmod::{CrossedModule, Rack, RackCocycle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    #[error("{path}: {source}")]
    Diagram { path: String, source: crate::diagram::DiagramError },
}

struct Lines<'a> {
    path: String,
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(path: &str, text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let toks: Vec<&str> = l.split('#').next().unwrap_or("").split_whitespace().collect();
                (!toks.is_empty()).then_some((i + 1, toks))
            })
            .collect();
        Lines { path: path.to_owned(), items, pos: 0 }
    }

    fn err(&self, line: usize, message: impl Into<String>) -> LoadError {
        LoadError::Parse { path: self.path.clone(), line, message: message.into() }
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |i| i.0)
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), LoadError> {
        match self.items.get(self.pos) {
            Some(item) => {
                self.pos += 1;
                Ok(item.clone())
            }
            None => Err(self.err(self.last_line(), format!("unexpected end of file, expected {what}"))),
        }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    /// A line `<keyword> <args...>` with exactly `nargs` arguments.
    fn keyword(&mut self, keyword: &str, nargs: usize) -> Result<(usize, Vec<&'a str>), LoadError> {
        let (line, toks) = self.next(&format!("`{keyword}`"))?;
        let head = toks[0].trim_end_matches(':');
        if head != keyword || toks.len() != nargs + 1 {
            return Err(self.err(line, format!("expected `{keyword}` with {nargs} argument(s), found `{}`", toks.join(" "))));
        }
        Ok((line, toks[1..].to_vec()))
    }

    fn done(&self) -> Result<(), LoadError> {
        match self.peek() {
            Some((line, toks)) => Err(self.err(*line, format!("unexpected trailing content `{}`", toks.join(" ")))),
            None => Ok(()),
        }
    }
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(rel)
}

fn lookup(lines: &Lines, line: usize, g: &FiniteGroup, name: &str) -> Result<Elem, LoadError> {
    g.lookup(name).map_err(|e| lines.err(line, e.to_string()))
}

// ---- groups ----------------------------------------------------------------

pub fn parse_group(text: &str, path: &str) -> Result<FiniteGroup, LoadError> {
    let mut lines = Lines::new(path, text);
    let (line, args) = lines.keyword("group", 2)?;
    let name = args[0].to_owned();
    let order: usize = args[1].parse().map_err(|_| lines.err(line, format!("bad order `{}`", args[1])))?;
    let (eline, toks) = lines.next("`elements` line")?;
    if toks[0] != "elements" {
        return Err(lines.err(eline, "expected `elements <name0> <name1> ...`"));
    }
    let names: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
    if names.len() != order {
        return Err(lines.err(eline, format!("{} element names for a group of order {order}", names.len())));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(lines.err(eline, format!("duplicate element name `{n}`")));
        }
    }
    let mut table = Vec::with_capacity(order);
    for i in 0..order {
        let (rline, row) = lines.next(&format!("table row {}", i + 1))?;
        if row.len() != order {
            return Err(lines.err(rline, format!("row has {} entries, expected {order}", row.len())));
        }
        let mut r = Vec::with_capacity(order);
        for name in row {
            match names.iter().position(|n| n == name) {
                Some(k) => r.push(k),
                None => return Err(lines.err(rline, format!("unknown element `{name}`"))),
            }
        }
        table.push(r);
    }
    lines.done()?;
    FiniteGroup::from_cayley(name, names, &table).map_err(|e| lines.err(line, e.to_string()))
}

pub fn load_group(path: &Path) -> Result<GroupRef, LoadError> {
    Ok(Arc::new(parse_group(&read(path)?, &path.display().to_string())?))
}

pub fn group_to_text(g: &FiniteGroup) -> String {
    let mut out = format!("group {} {}\nelements {}\n", g.name(), g.order(), g.names().join(" "));
    for a in g.elements() {
        let row: Vec<&str> = g.elements().map(|b| g.name_of(g.mul(a, b))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

// ---- crossed modules -------------------------------------------------------

/// `base <path>`, `fiber <path>`, a `boundary:` block of `e -> g` lines, an
/// `action:` block of `g e -> e'` lines and optionally `default: trivial`.
pub fn load_xmod(path: &Path) -> Result<Arc<CrossedModule>, LoadError> {
    let label = path.display().to_string();
    let text = read(path)?;
    let mut lines = Lines::new(&label, &text);
    let (bl, b) = lines.keyword("base", 1)?;
    let g = load_group(&resolve(path, b[0])).map_err(|e| nest(&lines, bl, e))?;
    let (fl, f) = lines.keyword("fiber", 1)?;
    let e = load_group(&resolve(path, f[0])).map_err(|e| nest(&lines, fl, e))?;

    let (hl, _) = lines.keyword("boundary", 0)?;
    let mut image: Vec<Option<Elem>> = vec![None; e.order()];
    while let Some((line, toks)) = lines.peek().cloned() {
        if toks[0].ends_with(':') {
            break;
        }
        lines.pos += 1;
        if toks.len() != 3 || toks[1] != "->" {
            return Err(lines.err(line, "expected `e -> g`"));
        }
        let x = lookup(&lines, line, &e, toks[0])?;
        image[x.index()] = Some(lookup(&lines, line, &g, toks[2])?);
    }
    let image: Vec<Elem> = match image.iter().position(Option::is_none) {
        Some(k) => return Err(lines.err(hl, format!("boundary of `{}` is not given", e.name_of(Elem::new(k))))),
        None => image.into_iter().map(Option::unwrap).collect(),
    };
    let boundary = GroupHom::new(e.clone(), g.clone(), image).map_err(|err| lines.err(hl, err.to_string()))?;

    let (al, _) = lines.keyword("action", 0)?;
    let ne = e.order();
    let mut action: Vec<Option<Elem>> = vec![None; g.order() * ne];
    let mut trivial_default = false;
    while let Some((line, toks)) = lines.peek().cloned() {
        lines.pos += 1;
        if toks[0] == "default:" {
            if toks.get(1) != Some(&"trivial") || toks.len() != 2 {
                return Err(lines.err(line, "only `default: trivial` is supported"));
            }
            trivial_default = true;
            continue;
        }
        if toks.len() != 4 || toks[2] != "->" {
            return Err(lines.err(line, "expected `g e -> e'`"));
        }
        let a = lookup(&lines, line, &g, toks[0])?;
        let x = lookup(&lines, line, &e, toks[1])?;
        action[a.index() * ne + x.index()] = Some(lookup(&lines, line, &e, toks[3])?);
    }
    let mut table = Vec::with_capacity(action.len());
    for (k, entry) in action.into_iter().enumerate() {
        match entry {
            Some(v) => table.push(v),
            None if trivial_default => table.push(Elem::new(k % ne)),
            None => {
                let (a, x) = (Elem::new(k / ne), Elem::new(k % ne));
                return Err(lines.err(
                    al,
                    format!("action {} ▷ {} is missing (add `default: trivial` to fill gaps)", g.name_of(a), e.name_of(x)),
                ));
            }
        }
    }
    CrossedModule::new(g, e, boundary, table).map(Arc::new).map_err(|err| lines.err(al, err.to_string()))
}

fn nest(lines: &Lines, line: usize, inner: LoadError) -> LoadError {
    lines.err(line, format!("while loading referenced file: {inner}"))
}

pub fn xmod_to_text(xm: &CrossedModule, base_path: &str, fiber_path: &str) -> String {
    let (g, e) = (xm.base(), xm.fiber());
    let mut out = format!("base {base_path}\nfiber {fiber_path}\nboundary:\n");
    for x in e.elements() {
        let _ = writeln!(out, "{} -> {}", e.name_of(x), g.name_of(xm.bd(x)));
    }
    out.push_str("action:\n");
    for a in g.elements() {
        for x in e.elements() {
            let y = xm.act(a, x);
            if y != x {
                let _ = writeln!(out, "{} {} -> {}", g.name_of(a), e.name_of(x), e.name_of(y));
            }
        }
    }
    out.push_str("default: trivial\n");
    out
}

// ---- racks and cocycles ----------------------------------------------------

/// `rack <name> <size>`, `elements ...`, then `size` rows of `x ◁ y`.
pub fn parse_rack(text: &str, path: &str) -> Result<Rack, LoadError> {
    let mut lines = Lines::new(path, text);
    let (line, args) = lines.keyword("rack", 2)?;
    let size: usize = args[1].parse().map_err(|_| lines.err(line, format!("bad size `{}`", args[1])))?;
    let (eline, names) = lines.next("`elements` line")?;
    if names[0] != "elements" || names.len() != size + 1 {
        return Err(lines.err(eline, format!("expected `elements` followed by {size} names")));
    }
    let names: Vec<String> = names[1..].iter().map(|s| s.to_string()).collect();
    let mut table = Vec::new();
    for i in 0..size {
        let (rline, row) = lines.next(&format!("rack row {}", i + 1))?;
        if row.len() != size {
            return Err(lines.err(rline, format!("row has {} entries, expected {size}", row.len())));
        }
        let mut r = Vec::new();
        for name in row {
            r.push(names.iter().position(|n| n == name).ok_or_else(|| lines.err(rline, format!("unknown element `{name}`")))?);
        }
        table.push(r);
    }
    lines.done()?;
    Rack::new(args[0], names, &table).map_err(|e| lines.err(line, e.to_string()))
}

pub fn load_rack(path: &Path) -> Result<Rack, LoadError> {
    parse_rack(&read(path)?, &path.display().to_string())
}

pub fn rack_to_text(r: &Rack) -> String {
    let mut out = format!("rack {} {}\nelements {}\n", r.name(), r.size(), r.names().join(" "));
    for x in 0..r.size() {
        let row: Vec<&str> = (0..r.size()).map(|y| r.names()[r.tri_left(x, y)].as_str()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// `rack <path>`, `group <path>` (the coefficients), then rows of `w(x, y)`.
pub fn load_cocycle(path: &Path) -> Result<RackCocycle, LoadError> {
    let label = path.display().to_string();
    let text = read(path)?;
    let mut lines = Lines::new(&label, &text);
    let (rl, r) = lines.keyword("rack", 1)?;
    let rack = Arc::new(load_rack(&resolve(path, r[0])).map_err(|e| nest(&lines, rl, e))?);
    let (gl, g) = lines.keyword("group", 1)?;
    let v = load_group(&resolve(path, g[0])).map_err(|e| nest(&lines, gl, e))?;
    let mut table = Vec::new();
    for i in 0..rack.size() {
        let (line, row) = lines.next(&format!("cocycle row {}", i + 1))?;
        if row.len() != rack.size() {
            return Err(lines.err(line, format!("row has {} entries, expected {}", row.len(), rack.size())));
        }
        table.push(row.iter().map(|n| lookup(&lines, line, &v, n)).collect::<Result<Vec<_>, _>>()?);
    }
    lines.done()?;
    RackCocycle::new(rack, v, &table).map_err(|e| lines.err(rl, e.to_string()))
}

// ---- pairs -----------------------------------------------------------------

/// `xmod <path>`, then `psi:` and `phi:` blocks of `X Y -> e` lines covering G×G.
pub fn load_pair(path: &Path) -> Result<ReidemeisterPair, LoadError> {
    let label = path.display().to_string();
    let text = read(path)?;
    let mut lines = Lines::new(&label, &text);
    let (xl, x) = lines.keyword("xmod", 1)?;
    let xm = load_xmod(&resolve(path, x[0])).map_err(|e| nest(&lines, xl, e))?;
    let (g, e) = (xm.base().clone(), xm.fiber().clone());
    let n = g.order();
    let mut tables = Vec::new();
    for name in ["psi", "phi"] {
        let (hl, _) = lines.keyword(name, 0)?;
        let mut t: Vec<Vec<Option<Elem>>> = vec![vec![None; n]; n];
        while let Some((line, toks)) = lines.peek().cloned() {
            if toks[0].ends_with(':') {
                break;
            }
            lines.pos += 1;
            if toks.len() != 4 || toks[2] != "->" {
                return Err(lines.err(line, "expected `X Y -> e`"));
            }
            let a = lookup(&lines, line, &g, toks[0])?;
            let b = lookup(&lines, line, &g, toks[1])?;
            t[a.index()][b.index()] = Some(lookup(&lines, line, &e, toks[3])?);
        }
        let missing = t.iter().flatten().filter(|v| v.is_none()).count();
        if missing > 0 {
            return Err(lines.err(hl, format!("{name} table is incomplete: {missing} of {} entries missing", n * n)));
        }
        tables.push(t.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
    lines.done()?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    ReidemeisterPair::new(stem, xm, &tables[0], &tables[1]).map_err(|err| lines.err(xl, err.to_string()))
}

pub fn pair_to_text(p: &ReidemeisterPair, xmod_path: &str) -> String {
    let (g, e) = (p.base(), p.fiber());
    let mut out = format!("xmod {xmod_path}\n");
    for (name, f) in [("psi", ReidemeisterPair::psi as fn(&ReidemeisterPair, Elem, Elem) -> Elem), ("phi", ReidemeisterPair::phi)] {
        let _ = writeln!(out, "{name}:");
        for a in g.elements() {
            for b in g.elements() {
                let _ = writeln!(out, "{} {} -> {}", g.name_of(a), g.name_of(b), e.name_of(f(p, a, b)));
            }
        }
    }
    out
}

// ---- diagrams --------------------------------------------------------------

pub fn load_diagram(path: &Path) -> Result<SlicedDiagram, LoadError> {
    SlicedDiagram::parse(&read(path)?).map_err(|source| LoadError::Diagram { path: path.display().to_string(), source })
}
