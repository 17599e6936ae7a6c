use std::sync::Arc;

use super::PairError;
use crate::algebra::{Elem, GroupRef};
use crate::xmod::CrossedModule;

/// Two functions `ψ, φ: G × G → E` over a crossed module, with the derived
/// colour of the fourth arc at each crossing type:
///
/// * `zpsi(X,Y) = ∂ψ(X,Y)⁻¹ X Y X⁻¹` (positive crossing, under-in arc),
/// * `zphi(X,Y) = X⁻¹ ∂φ(X,Y)⁻¹ Y X` (negative crossing, under-in arc).
#[derive(Clone, Debug)]
pub struct ReidemeisterPair {
    name: String,
    xmod: Arc<CrossedModule>,
    psi: Vec<Elem>,
    phi: Vec<Elem>,
    zpsi: Vec<Elem>,
    zphi: Vec<Elem>,
}

impl ReidemeisterPair {
    /// Build from complete tables, `psi[X][Y] = ψ(X,Y)`.
    pub fn new(
        name: impl Into<String>,
        xmod: Arc<CrossedModule>,
        psi: &[Vec<Elem>],
        phi: &[Vec<Elem>],
    ) -> Result<ReidemeisterPair, PairError> {
        let n = xmod.base().order();
        let flat = |t: &[Vec<Elem>], which: &'static str| -> Result<Vec<Elem>, PairError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(PairError::IncompleteTable { table: which, expected: n });
            }
            let v: Vec<Elem> = t.iter().flatten().copied().collect();
            if let Some(bad) = v.iter().find(|e| e.index() >= xmod.fiber().order()) {
                return Err(PairError::EntryOutOfRange { table: which, index: bad.index() });
            }
            Ok(v)
        };
        let psi = flat(psi, "psi")?;
        let phi = flat(phi, "phi")?;
        Ok(ReidemeisterPair::from_flat(name.into(), xmod, psi, phi))
    }

    pub(crate) fn from_flat(name: String, xmod: Arc<CrossedModule>, psi: Vec<Elem>, phi: Vec<Elem>) -> ReidemeisterPair {
        let g = xmod.base().clone();
        let n = g.order();
        let mut zpsi = Vec::with_capacity(n * n);
        let mut zphi = Vec::with_capacity(n * n);
        for x in g.elements() {
            let xi = g.inv(x);
            for y in g.elements() {
                let k = x.index() * n + y.index();
                zpsi.push(g.product(&[g.inv(xmod.bd(psi[k])), x, y, xi]));
                zphi.push(g.product(&[xi, g.inv(xmod.bd(phi[k])), y, x]));
            }
        }
        ReidemeisterPair { name, xmod, psi, phi, zpsi, zphi }
    }

    /// Both tables constant at `1_E`.
    pub fn trivial(xmod: Arc<CrossedModule>) -> ReidemeisterPair {
        let n = xmod.base().order();
        let one = xmod.fiber().identity();
        ReidemeisterPair::from_flat("trivial".into(), xmod, vec![one; n * n], vec![one; n * n])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn xmod(&self) -> &Arc<CrossedModule> {
        &self.xmod
    }

    pub fn base(&self) -> &GroupRef {
        self.xmod.base()
    }

    pub fn fiber(&self) -> &GroupRef {
        self.xmod.fiber()
    }

    #[inline]
    fn at(&self, x: Elem, y: Elem) -> usize {
        x.index() * self.base().order() + y.index()
    }

    #[inline]
    pub fn psi(&self, x: Elem, y: Elem) -> Elem {
        self.psi[self.at(x, y)]
    }

    #[inline]
    pub fn phi(&self, x: Elem, y: Elem) -> Elem {
        self.phi[self.at(x, y)]
    }

    #[inline]
    pub fn zpsi(&self, x: Elem, y: Elem) -> Elem {
        self.zpsi[self.at(x, y)]
    }

    #[inline]
    pub fn zphi(&self, x: Elem, y: Elem) -> Elem {
        self.zphi[self.at(x, y)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric_group;
    use crate::xmod::xmod_identity_conj;

    #[test]
    fn constant_tables_accepted_and_z_tables_follow() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let xm = Arc::new(xmod_identity_conj(s3.clone()));
        let one = vec![vec![s3.identity(); 6]; 6];
        let p = ReidemeisterPair::new("t", xm, &one, &one).unwrap();
        for x in s3.elements() {
            for y in s3.elements() {
                assert_eq!(p.zpsi(x, y), s3.conj(x, y));
                assert_eq!(p.zphi(x, y), s3.product(&[s3.inv(x), y, x]));
            }
        }
    }

    #[test]
    fn wrong_size_rejected() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let xm = Arc::new(xmod_identity_conj(s3.clone()));
        let short = vec![vec![s3.identity(); 6]; 5];
        let full = vec![vec![s3.identity(); 6]; 6];
        assert!(matches!(ReidemeisterPair::new("t", xm, &short, &full), Err(PairError::IncompleteTable { .. })));
    }
}
