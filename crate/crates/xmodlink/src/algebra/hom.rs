use std::sync::Arc;

use super::group::{restrict, subgroup_closure};
use super::{AlgebraError, Elem, FiniteGroup, GroupRef};

/// A validated group homomorphism, stored as its image table.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    image: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: GroupRef, target: GroupRef, image: Vec<Elem>) -> Result<GroupHom, AlgebraError> {
        if image.len() != source.order() {
            return Err(AlgebraError::DimensionMismatch { expected: source.order(), found: image.len() });
        }
        if let Some(bad) = image.iter().find(|e| e.index() >= target.order()) {
            return Err(AlgebraError::ElementOutOfRange { index: bad.index(), order: target.order() });
        }
        if image[source.identity().index()] != target.identity() {
            return Err(AlgebraError::NotHomomorphism {
                a: source.name_of(source.identity()).to_owned(),
                b: source.name_of(source.identity()).to_owned(),
            });
        }
        // Multiplicativity against generators suffices: every element is a
        // product of generators, and f(a·s) = f(a)f(s) propagates by induction.
        for &s in source.generators() {
            for a in source.elements() {
                if image[source.mul(a, s).index()] != target.mul(image[a.index()], image[s.index()]) {
                    return Err(AlgebraError::NotHomomorphism {
                        a: source.name_of(a).to_owned(),
                        b: source.name_of(s).to_owned(),
                    });
                }
            }
        }
        Ok(GroupHom { source, target, image })
    }

    pub fn identity(g: GroupRef) -> GroupHom {
        let image = g.elements().collect();
        GroupHom { source: g.clone(), target: g, image }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a.index()]
    }

    pub fn image_table(&self) -> &[Elem] {
        &self.image
    }

    pub fn kernel(&self) -> Vec<Elem> {
        self.source.elements().filter(|&a| self.apply(a) == self.target.identity()).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &e in &self.image {
            hit[e.index()] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// Standalone copy of the subgroup on `elems` (parent index order) with its inclusion.
pub fn subgroup(g: &GroupRef, elems: &[Elem], name: impl Into<String>) -> Result<(GroupRef, GroupHom), AlgebraError> {
    let h = Arc::new(restrict(g, elems, name.into())?);
    let incl = GroupHom { source: h.clone(), target: g.clone(), image: elems.to_vec() };
    Ok((h, incl))
}

/// The derived subgroup generated by all commutators.
pub fn commutator_subgroup(g: &GroupRef) -> (GroupRef, GroupHom) {
    let mut comms: Vec<Elem> = Vec::new();
    let mut seen = vec![false; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            let c = g.commutator(a, b);
            if !seen[c.index()] {
                seen[c.index()] = true;
                comms.push(c);
            }
        }
    }
    let elems = subgroup_closure(g, &comms);
    subgroup(g, &elems, format!("[{0},{0}]", g.name())).expect("derived subgroup is closed")
}

pub fn centralizer(g: &GroupRef, x: Elem) -> (GroupRef, GroupHom) {
    let elems: Vec<Elem> = g.elements().filter(|&h| g.mul(h, x) == g.mul(x, h)).collect();
    subgroup(g, &elems, format!("C({})", g.name_of(x))).expect("centralizer is closed")
}

/// `g / N` for a normal subgroup `N`, with the projection.
///
/// Cosets are ordered by their least element index and named after it.
pub fn quotient(g: &GroupRef, normal: &[Elem], name: impl Into<String>) -> Result<(GroupRef, GroupHom), AlgebraError> {
    let mut in_n = vec![false; g.order()];
    for &k in normal {
        in_n[k.index()] = true;
    }
    if !in_n[g.identity().index()] || normal.iter().any(|&a| normal.iter().any(|&b| !in_n[g.mul(a, b).index()])) {
        return Err(AlgebraError::NotNormal(g.name_of(normal.first().copied().unwrap_or(g.identity())).to_owned()));
    }
    for a in g.elements() {
        for &k in normal {
            if !in_n[g.conj(a, k).index()] {
                return Err(AlgebraError::NotNormal(g.name_of(k).to_owned()));
            }
        }
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for a in g.elements() {
        if coset[a.index()] != usize::MAX {
            continue;
        }
        for &k in normal {
            coset[g.mul(a, k).index()] = reps.len();
        }
        reps.push(a);
    }
    let mut mult = Vec::with_capacity(reps.len() * reps.len());
    for &a in &reps {
        for &b in &reps {
            mult.push(Elem::new(coset[g.mul(a, b).index()]));
        }
    }
    let names = reps.iter().map(|&r| g.name_of(r).to_owned()).collect();
    let q = Arc::new(FiniteGroup::from_trusted_table(name.into(), names, mult)?);
    let proj = GroupHom { source: g.clone(), target: q.clone(), image: coset.into_iter().map(Elem::new).collect() };
    Ok((q, proj))
}

/// Search for an index renaming that makes the two tables equal.
///
/// Backtracks on images of a generating set of `a`; suitable for small groups.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = a.generators().to_vec();
    let orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let mut choice = vec![b.identity(); gens.len()];
    fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[Elem], choice: &[Elem]) -> Option<Vec<Elem>> {
        // Build the map by BFS over right multiplication by generators.
        let mut map: Vec<Option<Elem>> = vec![None; a.order()];
        map[a.identity().index()] = Some(b.identity());
        let mut stack = vec![a.identity()];
        while let Some(x) = stack.pop() {
            let fx = map[x.index()].unwrap();
            for (k, &s) in gens.iter().enumerate() {
                let y = a.mul(x, s);
                let fy = b.mul(fx, choice[k]);
                match map[y.index()] {
                    Some(prev) if prev != fy => return None,
                    Some(_) => {}
                    None => {
                        map[y.index()] = Some(fy);
                        stack.push(y);
                    }
                }
            }
        }
        let map: Vec<Elem> = map.into_iter().collect::<Option<_>>()?;
        let mut hit = vec![false; b.order()];
        for e in &map {
            if std::mem::replace(&mut hit[e.index()], true) {
                return None;
            }
        }
        // Consistency on every edge x -> x·s already makes the map multiplicative.
        Some(map)
    }
    fn search(
        a: &FiniteGroup,
        b: &FiniteGroup,
        gens: &[Elem],
        orders: &[usize],
        choice: &mut Vec<Elem>,
        k: usize,
    ) -> Option<Vec<Elem>> {
        if k == gens.len() {
            return extend(a, b, gens, choice);
        }
        for cand in b.elements() {
            if b.element_order(cand) != orders[k] {
                continue;
            }
            choice[k] = cand;
            if let Some(m) = search(a, b, gens, orders, choice, k + 1) {
                return Some(m);
            }
        }
        None
    }
    search(a, b, &gens, &orders, &mut choice, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_group, general_linear, symmetric_group};

    #[test]
    fn derived_subgroups() {
        let s5 = Arc::new(symmetric_group(5).unwrap());
        assert_eq!(commutator_subgroup(&s5).0.order(), 60);
        let z6 = Arc::new(cyclic_group(6));
        assert_eq!(commutator_subgroup(&z6).0.order(), 1);
        let gl = Arc::new(general_linear(5).unwrap());
        assert_eq!(commutator_subgroup(&gl).0.order(), 120);
    }

    #[test]
    fn centralizers() {
        let s5 = Arc::new(symmetric_group(5).unwrap());
        let x = s5.lookup("(12345)").unwrap();
        assert_eq!(centralizer(&s5, x).0.order(), 5);
        assert_eq!(centralizer(&s5, s5.identity()).0.order(), 120);
        let z6 = Arc::new(cyclic_group(6));
        assert_eq!(centralizer(&z6, Elem::new(2)).0.order(), 6);
    }

    #[test]
    fn quotient_by_scalars() {
        let gl = Arc::new(general_linear(5).unwrap());
        let scalars: Vec<Elem> =
            gl.elements().filter(|&a| { let n = gl.name_of(a); n == "[[1,0],[0,1]]" || n == "[[2,0],[0,2]]" || n == "[[3,0],[0,3]]" || n == "[[4,0],[0,4]]" }).collect();
        let (q, proj) = quotient(&gl, &scalars, "PGL").unwrap();
        assert_eq!(q.order(), 120);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel().len(), 4);
        let s5 = symmetric_group(5).unwrap();
        assert!(find_isomorphism(&q, &s5).is_some());
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let h = vec![s3.identity(), s3.lookup("(12)").unwrap()];
        assert!(matches!(quotient(&s3, &h, "bad"), Err(AlgebraError::NotNormal(_))));
    }

    #[test]
    fn hom_validation() {
        let z4 = Arc::new(cyclic_group(4));
        let z2 = Arc::new(cyclic_group(2));
        let red = GroupHom::new(z4.clone(), z2.clone(), (0..4).map(|i| Elem::new(i % 2)).collect()).unwrap();
        assert!(red.is_surjective());
        let bad = GroupHom::new(z4, z2, vec![Elem::new(0), Elem::new(1), Elem::new(1), Elem::new(1)]);
        assert!(matches!(bad, Err(AlgebraError::NotHomomorphism { .. })));
    }
}
