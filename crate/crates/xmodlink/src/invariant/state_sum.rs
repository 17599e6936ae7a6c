use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::solver::{CrossingRules, Problem};
use super::InvariantError;
use crate::algebra::{Elem, EnhancedWord, FiniteGroup, GroupAlgebraElement, Sign};
use crate::catgroup::{evaluate_coloured, CGMorphism};
use crate::diagram::{arc_index, ArcIndex, Orientation, SlicedDiagram};
use crate::pairs::ReidemeisterPair;

/// A Reidemeister colouring of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    /// Colour of every arc, indexed by [`ArcIndex`] arc id.
    pub arc_colours: Vec<Elem>,
    /// `strand_colours[level][pos]`
    pub strand_colours: Vec<Vec<Elem>>,
    /// Label in E of every crossing, in [`ArcIndex::crossings`] order.
    pub crossing_labels: Vec<Elem>,
}

impl Colouring {
    fn new(arcs: &ArcIndex, pair: &ReidemeisterPair, raw: &[u32]) -> Colouring {
        let arc_colours: Vec<Elem> = raw.iter().map(|&c| Elem::new(c as usize)).collect();
        let strand_colours = arcs.points().iter().map(|row| row.iter().map(|&a| arc_colours[a]).collect()).collect();
        let crossing_labels = arcs
            .crossings()
            .iter()
            .map(|c| {
                let (x, y) = (arc_colours[c.over], arc_colours[c.under_out]);
                if c.sign > 0 {
                    pair.psi(x, y)
                } else {
                    pair.phi(x, y)
                }
            })
            .collect();
        Colouring { arc_colours, strand_colours, crossing_labels }
    }

    /// The boundary word read off level `level` of a diagram.
    pub fn word_at(&self, d: &SlicedDiagram, level: usize) -> EnhancedWord {
        let sig = &d.levels()[level];
        EnhancedWord::new(self.strand_colours[level].iter().zip(sig).map(|(&g, o)| (g, o.sign())).collect())
    }
}

/// One matrix entry `⟨source | I | target⟩` of the state sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub source_word: EnhancedWord,
    pub target_word: EnhancedWord,
    /// multiplicity of every label in E
    pub terms: BTreeMap<Elem, u64>,
}

impl InvariantResult {
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn to_group_algebra(&self, fiber: &crate::algebra::GroupRef) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(fiber.clone(), self.terms.iter().map(|(&e, &m)| (e, m)))
    }

    /// TSV rendering: two header lines and one `multiplicity<TAB>label` row
    /// per term in element order.
    pub fn to_tsv(&self, base: &FiniteGroup, fiber: &FiniteGroup) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}", self.source_word.display(base));
        let _ = writeln!(out, "target: {}", self.target_word.display(base));
        for (&e, &m) in &self.terms {
            let _ = writeln!(out, "{m}\t{}", fiber.name_of(e));
        }
        out
    }
}

/// TSV of a whole matrix row: blocks separated by blank lines, by bottom word.
pub fn matrix_to_tsv(m: &BTreeMap<EnhancedWord, InvariantResult>, base: &FiniteGroup, fiber: &FiniteGroup) -> String {
    m.values().map(|r| r.to_tsv(base, fiber)).collect::<Vec<_>>().join("\n")
}

/// Sum of all labels over every entry, as an element of ℤ[E].
pub fn summed_labels<'a>(
    fiber: &crate::algebra::GroupRef,
    results: impl IntoIterator<Item = &'a InvariantResult>,
) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(fiber.clone());
    for r in results {
        for (&e, &m) in &r.terms {
            out.add_term(e, m.into());
        }
    }
    out
}

fn check_word(
    side: &'static str,
    sig: &[Orientation],
    w: &EnhancedWord,
    order: usize,
) -> Result<Vec<usize>, InvariantError> {
    let expected: Vec<Sign> = sig.iter().map(|o| o.sign()).collect();
    if w.signs() != expected {
        let show = |s: &[Sign]| s.iter().map(|s| if *s == Sign::Plain { "g" } else { "g*" }).collect::<Vec<_>>().join(",");
        return Err(InvariantError::WordSignatureMismatch { side, expected: show(&expected), found: show(&w.signs()) });
    }
    w.entries
        .iter()
        .map(|&(g, _)| {
            if g.index() < order {
                Ok(g.index())
            } else {
                Err(InvariantError::ElementOutOfRange { index: g.index(), order })
            }
        })
        .collect()
}

/// Precompiled crossing tables for one pair, reusable across many diagrams.
pub struct StateSum<'p> {
    pair: &'p ReidemeisterPair,
    rules: CrossingRules,
    workers: usize,
}

impl<'p> StateSum<'p> {
    /// `workers = 0` uses all available cores.
    pub fn new(pair: &'p ReidemeisterPair, workers: usize) -> StateSum<'p> {
        StateSum { pair, rules: CrossingRules::from_pair(pair), workers }
    }

    pub fn pair(&self) -> &ReidemeisterPair {
        self.pair
    }

    fn problem<'s>(
        &'s self,
        d: &SlicedDiagram,
        arcs: &ArcIndex,
        top: &EnhancedWord,
        bottom: Option<&EnhancedWord>,
    ) -> Result<Problem<'s>, InvariantError> {
        let n = self.rules.size();
        let mut fixed: Vec<(usize, usize)> =
            check_word("top", d.top(), top, n)?.into_iter().enumerate().map(|(p, c)| (arcs.arc_at(0, p), c)).collect();
        if let Some(b) = bottom {
            let last = d.height();
            fixed.extend(check_word("bottom", d.bottom(), b, n)?.into_iter().enumerate().map(|(p, c)| (arcs.arc_at(last, p), c)));
        }
        Ok(Problem::new(arcs, &self.rules, &fixed))
    }

    pub fn colourings(
        &self,
        d: &SlicedDiagram,
        top: &EnhancedWord,
        bottom: Option<&EnhancedWord>,
    ) -> Result<Vec<Colouring>, InvariantError> {
        let arcs = arc_index(d);
        let problem = self.problem(d, &arcs, top, bottom)?;
        Ok(problem.solutions(self.workers).iter().map(|s| Colouring::new(&arcs, self.pair, s)).collect())
    }

    /// Evaluate every colouring and collect `(bottom colours, label)` counts.
    fn fold_terms(
        &self,
        d: &SlicedDiagram,
        top: &EnhancedWord,
        bottom: Option<&EnhancedWord>,
    ) -> Result<BTreeMap<(Vec<u32>, Elem), u64>, InvariantError> {
        let arcs = arc_index(d);
        let problem = self.problem(d, &arcs, top, bottom)?;
        let parts = problem.fold(
            self.workers,
            || Ok(BTreeMap::new()),
            |acc: &mut Result<BTreeMap<(Vec<u32>, Elem), u64>, InvariantError>, sol| {
                let Ok(map) = acc else { return };
                let colours: Vec<Elem> = sol.iter().map(|&c| Elem::new(c as usize)).collect();
                match evaluate_coloured(d, &arcs, &colours, self.pair) {
                    Ok(CGMorphism { label, .. }) => {
                        let bottom_colours = arcs.bottom_arcs().iter().map(|&a| sol[a]).collect();
                        *map.entry((bottom_colours, label)).or_insert(0) += 1;
                    }
                    Err(e) => *acc = Err(e.into()),
                }
            },
        );
        let mut out = BTreeMap::new();
        for part in parts {
            for (k, m) in part? {
                *out.entry(k).or_insert(0) += m;
            }
        }
        Ok(out)
    }

    pub fn state_sum(
        &self,
        d: &SlicedDiagram,
        top: &EnhancedWord,
        bottom: &EnhancedWord,
    ) -> Result<InvariantResult, InvariantError> {
        let mut terms = BTreeMap::new();
        for ((_, label), m) in self.fold_terms(d, top, Some(bottom))? {
            *terms.entry(label).or_insert(0) += m;
        }
        Ok(InvariantResult { source_word: top.clone(), target_word: bottom.clone(), terms })
    }

    /// All entries `⟨top | I(d) | ω⟩`, keyed by the realized bottom word `ω`.
    pub fn matrix(
        &self,
        d: &SlicedDiagram,
        top: &EnhancedWord,
    ) -> Result<BTreeMap<EnhancedWord, InvariantResult>, InvariantError> {
        let mut out: BTreeMap<EnhancedWord, InvariantResult> = BTreeMap::new();
        for ((colours, label), m) in self.fold_terms(d, top, None)? {
            let word = EnhancedWord::new(
                colours.iter().zip(d.bottom()).map(|(&c, o)| (Elem::new(c as usize), o.sign())).collect(),
            );
            let entry = out.entry(word.clone()).or_insert_with(|| InvariantResult {
                source_word: top.clone(),
                target_word: word,
                terms: BTreeMap::new(),
            });
            *entry.terms.entry(label).or_insert(0) += m;
        }
        Ok(out)
    }
}

/// All valid colourings extending `top` (and `bottom` when given).
pub fn enumerate_colourings(
    d: &SlicedDiagram,
    pair: &ReidemeisterPair,
    top: &EnhancedWord,
    bottom: Option<&EnhancedWord>,
) -> Result<Vec<Colouring>, InvariantError> {
    StateSum::new(pair, 1).colourings(d, top, bottom)
}

pub fn state_sum(
    d: &SlicedDiagram,
    pair: &ReidemeisterPair,
    top: &EnhancedWord,
    bottom: &EnhancedWord,
) -> Result<InvariantResult, InvariantError> {
    StateSum::new(pair, 1).state_sum(d, top, bottom)
}

pub fn invariant_matrix(
    d: &SlicedDiagram,
    pair: &ReidemeisterPair,
    top: &EnhancedWord,
) -> Result<BTreeMap<EnhancedWord, InvariantResult>, InvariantError> {
    StateSum::new(pair, 1).matrix(d, top)
}

/// Evaluate one colouring in the categorical group.
pub fn evaluate_diagram(d: &SlicedDiagram, c: &Colouring, pair: &ReidemeisterPair) -> Result<CGMorphism, InvariantError> {
    Ok(evaluate_coloured(d, &arc_index(d), &c.arc_colours, pair)?)
}
