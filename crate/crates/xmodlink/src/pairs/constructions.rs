use std::sync::Arc;

use super::{PairError, ReidemeisterPair};
use crate::algebra::{commutator_subgroup, Elem, GroupRef};
use crate::xmod::{xmod_from_central_extension, xmod_identity_conj, xmod_product, CentralExtension, Rack, RackCocycle};

fn check_sizes(r: &Rack, g: &GroupRef) -> Result<(), PairError> {
    if r.size() != g.order() {
        return Err(PairError::SizeMismatch { rack: r.size(), group: g.order() });
    }
    Ok(())
}

/// Carrier element `i` of the rack is element index `i` of the group law.
fn rack_parts(r: &Rack, g: &GroupRef, b: Elem, a: Elem) -> (Elem, Elem) {
    let b_rt_a = Elem::new(r.tri_right(b.index(), a.index()));
    let a_lt_b = Elem::new(r.tri_left(a.index(), b.index()));
    // ψ(b,a) = b a b⁻¹ (b▷a)⁻¹,  φ(b,a) = a b (a◁b)⁻¹ b⁻¹
    let psi = g.product(&[b, a, g.inv(b), g.inv(b_rt_a)]);
    let phi = g.product(&[a, b, g.inv(a_lt_b), g.inv(b)]);
    (psi, phi)
}

/// The pair of a rack over `(id: G → G, conjugation)` for a group law on the carrier.
pub fn pair_from_rack(r: &Rack, group_law: GroupRef) -> Result<ReidemeisterPair, PairError> {
    check_sizes(r, &group_law)?;
    let g = &group_law;
    let mut psi = Vec::with_capacity(g.order() * g.order());
    let mut phi = Vec::with_capacity(g.order() * g.order());
    for b in g.elements() {
        for a in g.elements() {
            let (s, f) = rack_parts(r, g, b, a);
            psi.push(s);
            phi.push(f);
        }
    }
    let xm = Arc::new(xmod_identity_conj(group_law.clone()));
    Ok(ReidemeisterPair::from_flat(format!("rack({},{})", r.name(), g.name()), xm, psi, phi))
}

/// The rack pair with cocycle weights, over `G × V`:
/// `ψ(b,a) = (b a b⁻¹ (b▷a)⁻¹, w(b▷a, b))`, `φ(b,a) = (a b (a◁b)⁻¹ b⁻¹, w(a,b)⁻¹)`.
pub fn pair_from_rack_cocycle(c: &RackCocycle, group_law: GroupRef) -> Result<ReidemeisterPair, PairError> {
    let r = c.rack();
    check_sizes(r, &group_law)?;
    let v = c.coefficients();
    let nv = v.order();
    let g = &group_law;
    let xm = Arc::new(xmod_product(group_law.clone(), v.clone())?);
    let pack = |h: Elem, w: Elem| Elem::new(h.index() * nv + w.index());
    let mut psi = Vec::with_capacity(g.order() * g.order());
    let mut phi = Vec::with_capacity(g.order() * g.order());
    for b in g.elements() {
        for a in g.elements() {
            let (s, f) = rack_parts(r, g, b, a);
            let b_rt_a = r.tri_right(b.index(), a.index());
            psi.push(pack(s, c.w(b_rt_a, b.index())));
            phi.push(pack(f, v.inv(c.w(a.index(), b.index()))));
        }
    }
    Ok(ReidemeisterPair::from_flat(format!("rack-cocycle({},{})", r.name(), g.name()), xm, psi, phi))
}

/// `φˣ(g,h) = [hx⁻¹, gx⁻¹]`, `ψˣ(g,h) = [g,h][hg⁻¹, x]` over `(id, conjugation)`,
/// on all of `G` or on its derived subgroup. In the latter case the formulas are
/// still evaluated in `G` (where `x` lives) and land in `G′`.
pub fn eisermann_pair(g: &GroupRef, x: Elem, on_derived: bool) -> ReidemeisterPair {
    let (carrier, embed): (GroupRef, Vec<Elem>) = if on_derived {
        let (d, incl) = commutator_subgroup(g);
        (d, incl.image_table().to_vec())
    } else {
        (g.clone(), g.elements().collect())
    };
    let mut back = vec![None; g.order()];
    for (i, &e) in embed.iter().enumerate() {
        back[e.index()] = Some(Elem::new(i));
    }
    let xi = g.inv(x);
    let n = carrier.order();
    let mut psi = Vec::with_capacity(n * n);
    let mut phi = Vec::with_capacity(n * n);
    for &a in &embed {
        for &b in &embed {
            let f = g.commutator(g.mul(b, xi), g.mul(a, xi));
            let s = g.mul(g.commutator(a, b), g.commutator(g.mul(b, g.inv(a)), x));
            phi.push(back[f.index()].expect("commutators lie in the derived subgroup"));
            psi.push(back[s.index()].expect("commutators lie in the derived subgroup"));
        }
    }
    let xm = Arc::new(xmod_identity_conj(carrier));
    let tag = if on_derived { "'" } else { "" };
    ReidemeisterPair::from_flat(format!("eisermann({}{tag},x={})", g.name(), g.name_of(x)), xm, psi, phi)
}

/// `φˣ(g,h) = {hx⁻¹, gx⁻¹}`, `ψˣ(g,h) = {g,h}{hg⁻¹, x}` with `{g,h} = [s(g), s(h)]`.
pub fn lifted_eisermann_pair(ext: &CentralExtension, x: Elem) -> ReidemeisterPair {
    let g = ext.base();
    let e = ext.total();
    let xi = g.inv(x);
    let n = g.order();
    let mut psi = Vec::with_capacity(n * n);
    let mut phi = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            phi.push(ext.bracket(g.mul(b, xi), g.mul(a, xi)));
            psi.push(e.mul(ext.bracket(a, b), ext.bracket(g.mul(b, g.inv(a)), x)));
        }
    }
    let xm = Arc::new(xmod_from_central_extension(ext));
    ReidemeisterPair::from_flat(format!("lifted({}->{},x={})", e.name(), g.name(), g.name_of(x)), xm, psi, phi)
}
