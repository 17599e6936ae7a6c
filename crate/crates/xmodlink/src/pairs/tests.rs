use std::sync::Arc;

use super::*;
use crate::algebra::{cyclic_group, gl_to_pgl, mat_det, parse_mat, symmetric_group, Elem};
use crate::xmod::{cyclic_rack, dihedral_quandle, xmod_identity_conj, CentralExtension, RackCocycle};

fn z(n: usize) -> Arc<crate::algebra::FiniteGroup> {
    Arc::new(cyclic_group(n))
}

#[test]
fn eisermann_s3_passes_every_x() {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    for x in s3.elements() {
        let p = eisermann_pair(&s3, x, false);
        let rep = check_unframed(&p, true);
        assert!(rep.passed, "{}", rep.render(&s3));
        assert_eq!(rep.r3_forms_agree, Some(true));
        assert!(is_eisermann_lifting(&p, x));
        // φˣ(1,1) = 1 and ψˣ(g,g) = 1
        assert_eq!(p.phi(s3.identity(), s3.identity()), s3.identity());
        assert!(s3.elements().all(|g| p.psi(g, g) == s3.identity()));
    }
}

#[test]
fn eisermann_on_derived_subgroup() {
    let s4 = Arc::new(symmetric_group(4).unwrap());
    let x = s4.lookup("(12)").unwrap();
    let p = eisermann_pair(&s4, x, true);
    assert_eq!(p.base().order(), 12);
    assert!(check_unframed(&p, false).passed);
}

#[test]
fn cyclic_rack_fails_r1_everywhere_but_is_framed() {
    let p = pair_from_rack(&cyclic_rack(3), z(3)).unwrap();
    let g = p.base().clone();
    assert!(g.elements().all(|b| g.elements().all(|a| g.name_of(p.psi(b, a)) == "1")));
    let rep = check_unframed(&p, false);
    assert!(!rep.passed);
    assert_eq!(rep.count(AxiomId::R1), 3);
    assert_eq!(rep.count(AxiomId::R2) + rep.count(AxiomId::R3), 0);
    let (frep, fs) = check_framed(&p);
    assert!(frep.passed, "{}", frep.render(&g));
    let fs = fs.unwrap();
    for a in 0..3 {
        assert_eq!(fs.f[a], Elem::new((a + 1) % 3));
        assert_eq!(fs.g[a], Elem::new((a + 2) % 3));
    }
}

#[test]
fn dihedral_quandle_pair() {
    let p = pair_from_rack(&dihedral_quandle(3), z(3)).unwrap();
    for b in 0..3 {
        for a in 0..3 {
            let expect = Elem::new((2 * (a + 3 - b)) % 3);
            assert_eq!(p.psi(Elem::new(b), Elem::new(a)), expect);
            assert_eq!(p.phi(Elem::new(b), Elem::new(a)), expect);
        }
    }
    assert!(check_unframed(&p, true).passed);
    let (rep, fs) = check_framed(&p);
    assert!(rep.passed);
    let fs = fs.unwrap();
    assert!(fs.f.iter().enumerate().all(|(i, e)| e.index() == i));
    assert!(fs.g.iter().enumerate().all(|(i, e)| e.index() == i));
    assert!(!is_eisermann_lifting(&p, Elem::new(1)));
}

#[test]
fn rack_pairs_reproduce_rack_colouring_rules() {
    for r in [dihedral_quandle(5), cyclic_rack(4)] {
        let p = pair_from_rack(&r, z(r.size())).unwrap();
        for b in 0..r.size() {
            for a in 0..r.size() {
                let (eb, ea) = (Elem::new(b), Elem::new(a));
                assert_eq!(p.zphi(eb, ea).index(), r.tri_left(a, b));
                assert_eq!(p.zpsi(eb, ea).index(), r.tri_right(b, a));
                assert_eq!(p.zpsi(eb, p.zphi(eb, ea)), ea);
            }
        }
    }
}

#[test]
fn constant_cocycle_pair() {
    let r = Arc::new(dihedral_quandle(3));
    let v = z(3);
    let w: Vec<Vec<Elem>> = vec![vec![Elem::new(1); 3]; 3];
    let c = RackCocycle::new(r.clone(), v.clone(), &w).unwrap();
    let p = pair_from_rack_cocycle(&c, z(3)).unwrap();
    for b in 0..3 {
        for a in 0..3 {
            assert_eq!(p.psi(Elem::new(b), Elem::new(a)).index() % 3, 1);
            assert_eq!(p.phi(Elem::new(b), Elem::new(a)).index() % 3, 2);
        }
    }
    assert!(check_framed(&p).0.passed);
    assert!(!check_unframed(&p, false).passed);
    let zero = RackCocycle::new(r, v, &vec![vec![Elem::new(0); 3]; 3]).unwrap();
    let p0 = pair_from_rack_cocycle(&zero, z(3)).unwrap();
    assert!(check_unframed(&p0, false).passed);
}

#[test]
fn trivial_pair_on_s3_is_framed() {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let p = ReidemeisterPair::trivial(Arc::new(xmod_identity_conj(s3)));
    // ∂(φ(A,Z))·A = Z reduces to A = Z: exactly one solution for every Z.
    let (rep, fs) = check_framed(&p);
    assert!(rep.passed);
    assert_eq!(fs.unwrap().f, p.base().elements().collect::<Vec<_>>());
}

#[test]
fn non_unique_framing_solution_is_reported() {
    // φ(A,Z) = A⁻¹ on Z2 makes ∂(φ(A,Z))·A = 1 for every A.
    let g = z(2);
    let xm = Arc::new(xmod_identity_conj(g.clone()));
    let phi = vec![vec![Elem::new(0); 2], vec![Elem::new(1); 2]];
    let psi = vec![vec![Elem::new(0); 2]; 2];
    let p = ReidemeisterPair::new("bad", xm, &psi, &phi).unwrap();
    let (rep, fs) = check_framed(&p);
    assert!(!rep.passed && fs.is_none());
    assert!(rep.first(AxiomId::F1).is_some());
}

#[test]
fn lifted_pair_gl25() {
    let (_, pgl, proj) = gl_to_pgl(5).unwrap();
    let ext = CentralExtension::new(proj).unwrap();
    let x = pgl.lookup("[[1,0],[0,3]]").unwrap(); // class of diag(2,1)
    let p = lifted_eisermann_pair(&ext, x);
    let gl = p.fiber().clone();
    for a in pgl.elements() {
        assert_eq!(p.psi(a, a), gl.identity());
        for b in pgl.elements() {
            let m = parse_mat(gl.name_of(p.phi(a, b)), 5).unwrap();
            assert_eq!(mat_det(&m, 5), 1);
        }
    }
    // Pushing the tables down along ∂ gives the plain pair on PGL(2,5).
    let plain = eisermann_pair(&pgl, x, false);
    for a in pgl.elements() {
        for b in pgl.elements() {
            assert_eq!(p.xmod().bd(p.psi(a, b)), plain.psi(a, b));
            assert_eq!(p.xmod().bd(p.phi(a, b)), plain.phi(a, b));
        }
    }
}

#[test]
fn abelian_extension_gives_trivial_lifted_tables() {
    let z4 = z(4);
    let bd = crate::algebra::GroupHom::new(z4.clone(), z(2), (0..4).map(|i| Elem::new(i % 2)).collect()).unwrap();
    let ext = CentralExtension::new(bd).unwrap();
    let p = lifted_eisermann_pair(&ext, Elem::new(1));
    for a in p.base().elements() {
        for b in p.base().elements() {
            assert_eq!(p.psi(a, b), z4.identity());
            assert_eq!(p.phi(a, b), z4.identity());
        }
    }
}

#[test]
fn r3_violation_is_detected() {
    // Perturb one φ entry of a valid pair so that R3 breaks.
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let x = s3.lookup("(123)").unwrap();
    let good = eisermann_pair(&s3, x, false);
    let mut psi: Vec<Vec<Elem>> = s3.elements().map(|a| s3.elements().map(|b| good.psi(a, b)).collect()).collect();
    let phi: Vec<Vec<Elem>> = s3.elements().map(|a| s3.elements().map(|b| good.phi(a, b)).collect()).collect();
    psi[1][2] = s3.lookup("(12)").unwrap();
    let p = ReidemeisterPair::new("perturbed", good.xmod().clone(), &psi, &phi).unwrap();
    let rep = check_unframed(&p, true);
    assert!(!rep.passed);
    assert!(rep.violations.len() <= MAX_WITNESSES);
    assert!(rep.violations.windows(2).all(|w| w[0] <= w[1]));
}
