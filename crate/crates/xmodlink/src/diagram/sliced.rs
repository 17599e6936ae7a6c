use std::fmt::Write as _;

use super::{signature_string, DiagramError, Generator, Orientation};

/// One horizontal strip: pieces placed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub pieces: Vec<Generator>,
}

impl Slice {
    pub fn new(pieces: Vec<Generator>) -> Slice {
        Slice { pieces }
    }

    /// A slice of identity strands matching `sig`.
    pub fn identity(sig: &[Orientation]) -> Slice {
        Slice { pieces: sig.iter().map(|&o| Generator::identity_for(o)).collect() }
    }

    pub fn top(&self) -> Vec<Orientation> {
        self.pieces.iter().flat_map(|g| g.top().iter().copied()).collect()
    }

    pub fn bottom(&self) -> Vec<Orientation> {
        self.pieces.iter().flat_map(|g| g.bottom().iter().copied()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.iter().all(|g| g.is_identity())
    }

    fn tokens(&self) -> String {
        self.pieces.iter().map(|g| g.token()).collect::<Vec<_>>().join(" ")
    }
}

/// A validated sliced oriented tangle diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlicedDiagram {
    top: Vec<Orientation>,
    slices: Vec<Slice>,
    bottom: Vec<Orientation>,
}

impl SlicedDiagram {
    pub fn new(top: Vec<Orientation>, slices: Vec<Slice>) -> Result<SlicedDiagram, DiagramError> {
        Self::build(top, slices, None)
    }

    /// `lines[k]` is the source line of slice `k`, used in error messages.
    fn build(top: Vec<Orientation>, slices: Vec<Slice>, lines: Option<&[usize]>) -> Result<SlicedDiagram, DiagramError> {
        if slices.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut current = top.clone();
        for (k, s) in slices.iter().enumerate() {
            let line = lines.map(|l| l[k]);
            if s.pieces.is_empty() {
                return Err(DiagramError::EmptySlice { slice: k + 1, line });
            }
            let t = s.top();
            if t != current {
                return Err(DiagramError::SignatureMismatch {
                    slice: k + 1,
                    line,
                    expected: signature_string(&current),
                    found: signature_string(&t),
                });
            }
            current = s.bottom();
        }
        Ok(SlicedDiagram { top, slices, bottom: current })
    }

    /// Parse the text format: a `top:` header followed by one slice per line.
    pub fn parse(text: &str) -> Result<SlicedDiagram, DiagramError> {
        let mut top: Option<Vec<Orientation>> = None;
        let mut slices = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let toks = tokens_with_columns(content);
            if top.is_none() {
                let (first, _) = toks[0];
                let rest: Vec<(&str, usize)> = if first == "top:" {
                    toks[1..].to_vec()
                } else if let Some(tail) = first.strip_prefix("top:") {
                    let mut v = vec![(tail, toks[0].1 + 4)];
                    v.extend_from_slice(&toks[1..]);
                    v
                } else {
                    return Err(DiagramError::MissingHeader { line: lineno });
                };
                let mut sig = Vec::new();
                for (tok, col) in rest {
                    match Orientation::from_symbol(tok) {
                        Some(o) => sig.push(o),
                        None => {
                            return Err(DiagramError::UnknownToken { line: lineno, column: col, token: tok.to_owned() })
                        }
                    }
                }
                top = Some(sig);
                continue;
            }
            let mut pieces = Vec::new();
            for (tok, col) in toks {
                match Generator::from_token(tok) {
                    Some(g) => pieces.push(g),
                    None => {
                        return Err(DiagramError::UnknownToken { line: lineno, column: col, token: tok.to_owned() })
                    }
                }
            }
            slices.push(Slice::new(pieces));
            lines.push(lineno);
        }
        let top = top.ok_or(DiagramError::EmptyDiagram)?;
        Self::build(top, slices, Some(&lines))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("top:");
        for o in &self.top {
            out.push(' ');
            out.push(o.symbol());
        }
        out.push('\n');
        for s in &self.slices {
            let _ = writeln!(out, "{}", s.tokens());
        }
        out
    }

    pub fn top(&self) -> &[Orientation] {
        &self.top
    }

    pub fn bottom(&self) -> &[Orientation] {
        &self.bottom
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn height(&self) -> usize {
        self.slices.len()
    }

    /// Signature of every level, from the top boundary (level 0) to the bottom.
    pub fn levels(&self) -> Vec<Vec<Orientation>> {
        let mut out = vec![self.top.clone()];
        out.extend(self.slices.iter().map(|s| s.bottom()));
        out
    }

    pub fn pieces(&self) -> impl Iterator<Item = Generator> + '_ {
        self.slices.iter().flat_map(|s| s.pieces.iter().copied())
    }

    pub fn count(&self, g: Generator) -> usize {
        self.pieces().filter(|&p| p == g).count()
    }

    /// Total signed crossing count.
    pub fn writhe(&self) -> i32 {
        self.pieces().map(|g| g.crossing_sign()).sum()
    }

    pub fn is_closed(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    /// The vertical strand of signature `sig`, one slice high.
    pub fn identity(sig: &[Orientation]) -> Result<SlicedDiagram, DiagramError> {
        SlicedDiagram::new(sig.to_vec(), vec![Slice::identity(sig)])
    }

    /// Slices `[0, k)` and `[k, height)`; both parts must be nonempty.
    pub fn split_at(&self, k: usize) -> Result<(SlicedDiagram, SlicedDiagram), DiagramError> {
        if k == 0 || k >= self.slices.len() {
            return Err(DiagramError::EmptyDiagram);
        }
        let upper = SlicedDiagram::new(self.top.clone(), self.slices[..k].to_vec())?;
        let lower = SlicedDiagram::new(upper.bottom.clone(), self.slices[k..].to_vec())?;
        Ok((upper, lower))
    }

    /// Stack rearrangements that yield a one-generator-per-slice diagram:
    /// non-identity pieces are released left to right, identity-only slices dropped.
    pub fn normalized(&self) -> SlicedDiagram {
        let mut out = Vec::new();
        for s in &self.slices {
            for (i, &g) in s.pieces.iter().enumerate() {
                if g.is_identity() {
                    continue;
                }
                let mut pieces = Vec::new();
                for &left in &s.pieces[..i] {
                    pieces.extend(left.bottom().iter().map(|&o| Generator::identity_for(o)));
                }
                pieces.push(g);
                for &right in &s.pieces[i + 1..] {
                    pieces.extend(right.top().iter().map(|&o| Generator::identity_for(o)));
                }
                out.push(Slice::new(pieces));
            }
        }
        if out.is_empty() {
            out.push(Slice::identity(&self.top));
        }
        SlicedDiagram::new(self.top.clone(), out).expect("normalization preserves signatures")
    }

    pub fn mirror(&self) -> SlicedDiagram {
        let slices = self
            .slices
            .iter()
            .map(|s| Slice::new(s.pieces.iter().map(|g| g.mirrored()).collect()))
            .collect();
        SlicedDiagram { top: self.top.clone(), slices, bottom: self.bottom.clone() }
    }
}

fn tokens_with_columns(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let col_of = |byte: usize| line[..byte].chars().count() + 1;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((&line[s..i], col_of(s)));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], col_of(s)));
    }
    out
}

/// Vertical juxtaposition: `d1` on top of `d2`.
pub fn compose(d1: &SlicedDiagram, d2: &SlicedDiagram) -> Result<SlicedDiagram, DiagramError> {
    if d1.bottom != d2.top {
        return Err(DiagramError::SignatureMismatch {
            slice: d1.height() + 1,
            line: None,
            expected: signature_string(&d1.bottom),
            found: signature_string(&d2.top),
        });
    }
    let mut slices = d1.slices.clone();
    slices.extend(d2.slices.iter().cloned());
    SlicedDiagram::new(d1.top.clone(), slices)
}

/// Side-by-side juxtaposition: `d1` left of `d2`, the shorter one padded with
/// identity slices at the bottom.
pub fn tensor(d1: &SlicedDiagram, d2: &SlicedDiagram) -> Result<SlicedDiagram, DiagramError> {
    let h = d1.height().max(d2.height());
    let column = |d: &SlicedDiagram, k: usize| -> Vec<Generator> {
        match d.slices.get(k) {
            Some(s) => s.pieces.clone(),
            None => Slice::identity(&d.bottom).pieces,
        }
    };
    let slices = (0..h)
        .map(|k| {
            let mut p = column(d1, k);
            p.extend(column(d2, k));
            Slice::new(p)
        })
        .collect();
    let mut top = d1.top.clone();
    top.extend_from_slice(&d2.top);
    SlicedDiagram::new(top, slices)
}

/// Close a string-knot diagram: the bottom end is routed up the right side
/// back to the top with a cup, an upward identity strand and a cap.
pub fn closure(d: &SlicedDiagram) -> Result<SlicedDiagram, DiagramError> {
    if d.top != [Orientation::Down] || d.bottom != [Orientation::Down] {
        return Err(DiagramError::ClosureShapeMismatch {
            top: signature_string(&d.top),
            bottom: signature_string(&d.bottom),
        });
    }
    let mut slices = vec![Slice::new(vec![Generator::CupRL])];
    for s in &d.slices {
        let mut p = s.pieces.clone();
        p.push(Generator::IdUp);
        slices.push(Slice::new(p));
    }
    slices.push(Slice::new(vec![Generator::CapLR]));
    SlicedDiagram::new(Vec::new(), slices)
}
