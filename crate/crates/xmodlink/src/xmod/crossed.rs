use std::sync::Arc;

use super::XmodError;
use crate::algebra::{direct_product, Elem, GroupHom, GroupRef};

/// A finite crossed module `∂: E → G` with a left action `▷` of `G` on `E`.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    g: GroupRef,
    e: GroupRef,
    boundary: GroupHom,
    /// `action[g·|E| + e] = g ▷ e`.
    action: Vec<Elem>,
}

impl CrossedModule {
    /// Validate the action and both Peiffer equations.
    ///
    /// The action laws and the automorphism property are checked on
    /// generators, which is enough: `g ↦ (g ▷ −)` is a homomorphism into
    /// `Aut(E)` once it is multiplicative against a generating set, and an
    /// endomorphism of a finite group is an automorphism iff it is injective.
    pub fn new(g: GroupRef, e: GroupRef, boundary: GroupHom, action: Vec<Elem>) -> Result<CrossedModule, XmodError> {
        if !Arc::ptr_eq(boundary.source(), &e) && **boundary.source() != *e {
            return Err(XmodError::BoundaryShape);
        }
        if !Arc::ptr_eq(boundary.target(), &g) && **boundary.target() != *g {
            return Err(XmodError::BoundaryShape);
        }
        let (ng, ne) = (g.order(), e.order());
        if action.len() != ng * ne || action.iter().any(|a| a.index() >= ne) {
            return Err(XmodError::ActionShape { expected: ng * ne, found: action.len() });
        }
        let xm = CrossedModule { g, e, boundary, action };
        xm.validate()?;
        Ok(xm)
    }

    fn validate(&self) -> Result<(), XmodError> {
        let (g, e) = (&self.g, &self.e);
        let name_g = |x: Elem| g.name_of(x).to_owned();
        let name_e = |x: Elem| e.name_of(x).to_owned();
        for f in e.elements() {
            if self.act(g.identity(), f) != f {
                return Err(XmodError::NotAnAction { g: name_g(g.identity()), h: name_g(g.identity()), e: name_e(f) });
            }
        }
        for &s in g.generators() {
            for a in g.elements() {
                for f in e.elements() {
                    if self.act(g.mul(a, s), f) != self.act(a, self.act(s, f)) {
                        return Err(XmodError::NotAnAction { g: name_g(a), h: name_g(s), e: name_e(f) });
                    }
                }
            }
            let mut hit = vec![false; e.order()];
            for f in e.elements() {
                hit[self.act(s, f).index()] = true;
                for &t in e.generators() {
                    if self.act(s, e.mul(f, t)) != e.mul(self.act(s, f), self.act(s, t)) {
                        return Err(XmodError::NotAutomorphisms { g: name_g(s), e: name_e(f), f: name_e(t) });
                    }
                }
            }
            if let Some(miss) = hit.iter().position(|h| !h) {
                return Err(XmodError::NotAutomorphisms { g: name_g(s), e: name_e(Elem::new(miss)), f: name_e(Elem::new(miss)) });
            }
        }
        for a in g.elements() {
            for f in e.elements() {
                if self.bd(self.act(a, f)) != g.conj(a, self.bd(f)) {
                    return Err(XmodError::Peiffer1Violation { g: name_g(a), e: name_e(f) });
                }
            }
        }
        for x in e.elements() {
            let bx = self.bd(x);
            for f in e.elements() {
                if self.act(bx, f) != e.conj(x, f) {
                    return Err(XmodError::Peiffer2Violation { e: name_e(x), f: name_e(f) });
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &GroupRef {
        &self.g
    }

    pub fn fiber(&self) -> &GroupRef {
        &self.e
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    /// `∂(e)`.
    #[inline]
    pub fn bd(&self, e: Elem) -> Elem {
        self.boundary.apply(e)
    }

    /// `g ▷ e`.
    #[inline]
    pub fn act(&self, g: Elem, e: Elem) -> Elem {
        self.action[g.index() * self.e.order() + e.index()]
    }
}

/// `(id: G → G, conjugation)`.
pub fn xmod_identity_conj(g: GroupRef) -> CrossedModule {
    let n = g.order();
    let mut action = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            action.push(g.conj(a, b));
        }
    }
    CrossedModule::new(g.clone(), g.clone(), GroupHom::identity(g), action).expect("identity-conjugation crossed module")
}

/// `E = G × V`, `∂(g,v) = g`, `g • (h,v) = (ghg⁻¹, v)` for abelian `V`.
pub fn xmod_product(g: GroupRef, v: GroupRef) -> Result<CrossedModule, XmodError> {
    if !v.is_abelian() {
        return Err(XmodError::NonAbelianV(v.name().to_owned()));
    }
    let nv = v.order();
    let e = Arc::new(direct_product(&g, &v));
    let image = e.elements().map(|x| Elem::new(x.index() / nv)).collect();
    let boundary = GroupHom::new(e.clone(), g.clone(), image)?;
    let mut action = Vec::with_capacity(g.order() * e.order());
    for a in g.elements() {
        for x in e.elements() {
            let h = Elem::new(x.index() / nv);
            action.push(Elem::new(g.conj(a, h).index() * nv + x.index() % nv));
        }
    }
    CrossedModule::new(g, e, boundary, action)
}
