use super::{CrossedModule, XmodError};
use crate::algebra::{Elem, GroupHom, GroupRef};

/// A surjection `∂: E → G` with central kernel, plus a section `s`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    boundary: GroupHom,
    section: Vec<Elem>,
}

impl CentralExtension {
    /// Validate and pick the section: the least `E`-index in each fiber.
    pub fn new(boundary: GroupHom) -> Result<CentralExtension, XmodError> {
        let (e, g) = (boundary.source(), boundary.target());
        if !boundary.is_surjective() {
            return Err(XmodError::NotSurjective);
        }
        let kernel = boundary.kernel();
        for &k in &kernel {
            for &t in e.generators() {
                if e.mul(k, t) != e.mul(t, k) {
                    return Err(XmodError::KernelNotCentral { kernel: e.name_of(k).to_owned(), other: e.name_of(t).to_owned() });
                }
            }
        }
        let mut section = vec![None; g.order()];
        for a in e.elements() {
            section[boundary.apply(a).index()].get_or_insert(a);
        }
        let section = section.into_iter().map(|s| s.expect("surjective")).collect();
        Ok(CentralExtension { boundary, section })
    }

    /// Same extension with a different section.
    pub fn with_section(&self, section: Vec<Elem>) -> Result<CentralExtension, XmodError> {
        let g = self.base();
        if section.len() != g.order() {
            return Err(XmodError::BadSection(format!("length {} for a base of order {}", section.len(), g.order())));
        }
        for a in g.elements() {
            let s = section[a.index()];
            if s.index() >= self.total().order() || self.boundary.apply(s) != a {
                return Err(XmodError::BadSection(format!("s({}) does not lie over it", g.name_of(a))));
            }
        }
        Ok(CentralExtension { boundary: self.boundary.clone(), section })
    }

    pub fn total(&self) -> &GroupRef {
        self.boundary.source()
    }

    pub fn base(&self) -> &GroupRef {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    pub fn section(&self, g: Elem) -> Elem {
        self.section[g.index()]
    }

    pub fn section_table(&self) -> &[Elem] {
        &self.section
    }

    /// `{g,h} = [s(g), s(h)]`, independent of the section because the kernel is central.
    pub fn bracket(&self, g: Elem, h: Elem) -> Elem {
        self.total().commutator(self.section(g), self.section(h))
    }

    /// `g ▷ e = s(g) e s(g)⁻¹`.
    pub fn lifted_action(&self, g: Elem, e: Elem) -> Elem {
        self.total().conj(self.section(g), e)
    }
}

pub fn xmod_from_central_extension(ext: &CentralExtension) -> CrossedModule {
    let (e, g) = (ext.total(), ext.base());
    let mut action = Vec::with_capacity(g.order() * e.order());
    for a in g.elements() {
        for x in e.elements() {
            action.push(ext.lifted_action(a, x));
        }
    }
    CrossedModule::new(g.clone(), e.clone(), ext.boundary().clone(), action)
        .expect("a central extension always yields a crossed module")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{cyclic_group, gl_to_pgl, quotient, symmetric_group};

    #[test]
    fn z4_over_z2() {
        let z4 = Arc::new(cyclic_group(4));
        let z2 = Arc::new(cyclic_group(2));
        let bd = GroupHom::new(z4.clone(), z2, (0..4).map(|i| Elem::new(i % 2)).collect()).unwrap();
        let ext = CentralExtension::new(bd).unwrap();
        let xm = xmod_from_central_extension(&ext);
        assert!(z4.elements().all(|a| xm.act(Elem::new(1), a) == a));
        assert!(ext.base().elements().all(|g| ext.bracket(g, g) == z4.identity()));
    }

    #[test]
    fn s3_over_z2_is_not_central() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let a3: Vec<Elem> = ["id", "(123)", "(132)"].iter().map(|n| s3.lookup(n).unwrap()).collect();
        let (_, proj) = quotient(&s3, &a3, "Z2").unwrap();
        assert!(matches!(CentralExtension::new(proj), Err(XmodError::KernelNotCentral { .. })));
    }

    #[test]
    fn gl_over_pgl() {
        let (gl, pgl, proj) = gl_to_pgl(5).unwrap();
        let ext = CentralExtension::new(proj).unwrap();
        assert_eq!(ext.boundary().kernel().len(), 4);
        xmod_from_central_extension(&ext);
        let a = ext.base().lookup("[[0,1],[1,0]]").unwrap();
        let b = ext.base().lookup("[[1,1],[0,1]]").unwrap();
        assert_ne!(pgl.mul(a, b), pgl.mul(b, a));
        let br = ext.bracket(a, b);
        assert_ne!(br, gl.identity());
        // Commutators of lifts have determinant 1.
        let m = crate::algebra::parse_mat(gl.name_of(br), 5).unwrap();
        assert_eq!(crate::algebra::mat_det(&m, 5), 1);
    }

    #[test]
    fn bad_sections_rejected() {
        let (_, _, proj) = gl_to_pgl(5).unwrap();
        let ext = CentralExtension::new(proj).unwrap();
        let mut s = ext.section_table().to_vec();
        s.swap(0, 1);
        assert!(matches!(ext.with_section(s), Err(XmodError::BadSection(_))));
    }
}
