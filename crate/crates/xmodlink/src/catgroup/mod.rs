//! The categorical group of a crossed module: morphisms `(U, e): U → ∂(e)U`,
//! their composition and tensor product, and evaluation of coloured diagrams.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Elem;
use crate::diagram::{ArcIndex, Generator, SlicedDiagram};
use crate::pairs::ReidemeisterPair;
use crate::xmod::CrossedModule;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatGroupError {
    #[error("morphisms are not composable: target {target} differs from source {source_name}")]
    NotComposable { target: String, source_name: String },
    #[error("colours inconsistent with {generator}: {detail}")]
    InconsistentColours { generator: Generator, detail: String },
    #[error("colouring has {found} arc colours but the diagram has {expected} arcs")]
    ColouringSize { expected: usize, found: usize },
}

/// A morphism `(U, e)` of the categorical group. Its target `∂(e)U` is
/// computed on demand, so source and target can never disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CGMorphism {
    pub source: Elem,
    pub label: Elem,
}

/// Handle bundling the crossed module all morphisms are interpreted in.
#[derive(Clone)]
pub struct CategoricalGroup {
    xmod: Arc<CrossedModule>,
}

impl CategoricalGroup {
    pub fn new(xmod: Arc<CrossedModule>) -> CategoricalGroup {
        CategoricalGroup { xmod }
    }

    pub fn xmod(&self) -> &Arc<CrossedModule> {
        &self.xmod
    }

    pub fn identity(&self, u: Elem) -> CGMorphism {
        CGMorphism { source: u, label: self.xmod.fiber().identity() }
    }

    pub fn target(&self, m: CGMorphism) -> Elem {
        self.xmod.base().mul(self.xmod.bd(m.label), m.source)
    }

    /// `m1` followed by `m2`: `(U, e)` then `(V, f)` gives `(U, f·e)`.
    pub fn compose(&self, m1: CGMorphism, m2: CGMorphism) -> Result<CGMorphism, CatGroupError> {
        let t = self.target(m1);
        if t != m2.source {
            let g = self.xmod.base();
            return Err(CatGroupError::NotComposable {
                target: g.name_of(t).to_owned(),
                source_name: g.name_of(m2.source).to_owned(),
            });
        }
        Ok(CGMorphism { source: m1.source, label: self.xmod.fiber().mul(m2.label, m1.label) })
    }

    /// `(U, e) ⊗ (W, f) = (UW, (V▷f)·e)` with `V = ∂(e)U`; the target is `V·∂(f)W`.
    pub fn tensor(&self, m1: CGMorphism, m2: CGMorphism) -> CGMorphism {
        let g = self.xmod.base();
        let v = self.target(m1);
        let out = CGMorphism {
            source: g.mul(m1.source, m2.source),
            label: self.xmod.fiber().mul(self.xmod.act(v, m2.label), m1.label),
        };
        debug_assert_eq!(self.target(out), g.mul(v, self.target(m2)));
        out
    }

    pub fn tensor_all(&self, ms: &[CGMorphism]) -> CGMorphism {
        ms.iter().fold(self.identity(self.xmod.base().identity()), |acc, &m| self.tensor(acc, m))
    }
}

/// The morphism of one coloured generator. `top` and `bottom` are the colours
/// of the generator's top and bottom strand ends, left to right.
pub fn generator_morphism(
    gen: Generator,
    top: &[Elem],
    bottom: &[Elem],
    pair: &ReidemeisterPair,
) -> Result<CGMorphism, CatGroupError> {
    let g = pair.base();
    let one_e = pair.fiber().identity();
    let bad = |detail: &str| CatGroupError::InconsistentColours { generator: gen, detail: detail.to_owned() };
    if top.len() != gen.top().len() || bottom.len() != gen.bottom().len() {
        return Err(bad("wrong number of colours"));
    }
    let plain = |source| Ok(CGMorphism { source, label: one_e });
    match gen {
        Generator::IdDown | Generator::IdUp => {
            if top[0] != bottom[0] {
                return Err(bad("identity strand changes colour"));
            }
            plain(if gen == Generator::IdDown { top[0] } else { g.inv(top[0]) })
        }
        Generator::CapLR | Generator::CapRL => {
            if top[0] != top[1] {
                return Err(bad("cap legs differ"));
            }
            plain(g.identity())
        }
        Generator::CupLR | Generator::CupRL => {
            if bottom[0] != bottom[1] {
                return Err(bad("cup legs differ"));
            }
            plain(g.identity())
        }
        Generator::XPlus => {
            let (z, x, x2, y) = (top[0], top[1], bottom[0], bottom[1]);
            if x != x2 || pair.zpsi(x, y) != z {
                return Err(bad("positive crossing rule violated"));
            }
            Ok(CGMorphism { source: g.mul(z, x), label: pair.psi(x, y) })
        }
        Generator::XMinus => {
            let (x, z, y, x2) = (top[0], top[1], bottom[0], bottom[1]);
            if x != x2 || pair.zphi(x, y) != z {
                return Err(bad("negative crossing rule violated"));
            }
            Ok(CGMorphism { source: g.mul(x, z), label: pair.phi(x, y) })
        }
    }
}

/// Evaluate a diagram whose arcs carry the colours `arc_colours` (indexed by
/// the arc ids of `arcs`): tensor horizontally, compose vertically.
pub fn evaluate_coloured(
    d: &SlicedDiagram,
    arcs: &ArcIndex,
    arc_colours: &[Elem],
    pair: &ReidemeisterPair,
) -> Result<CGMorphism, CatGroupError> {
    if arc_colours.len() != arcs.n_arcs() {
        return Err(CatGroupError::ColouringSize { expected: arcs.n_arcs(), found: arc_colours.len() });
    }
    let cg = CategoricalGroup::new(pair.xmod().clone());
    let mut total: Option<CGMorphism> = None;
    let mut pieces = Vec::new();
    for (k, s) in d.slices().iter().enumerate() {
        let (mut tp, mut bp) = (0, 0);
        pieces.clear();
        for &gen in &s.pieces {
            let (nt, nb) = (gen.top().len(), gen.bottom().len());
            let top: Vec<Elem> = (tp..tp + nt).map(|p| arc_colours[arcs.arc_at(k, p)]).collect();
            let bottom: Vec<Elem> = (bp..bp + nb).map(|p| arc_colours[arcs.arc_at(k + 1, p)]).collect();
            pieces.push(generator_morphism(gen, &top, &bottom, pair)?);
            tp += nt;
            bp += nb;
        }
        let m = cg.tensor_all(&pieces);
        total = Some(match total {
            None => m,
            Some(t) => cg.compose(t, m)?,
        });
    }
    Ok(total.expect("diagrams have at least one slice"))
}
