//! Small named groups used by the built-in registry and tests.

use std::sync::Arc;

use super::hom::quotient;
use super::matrix::{general_linear, mat_name, parse_mat, projective_normal_form};
use super::{AlgebraError, Elem, FiniteGroup, GroupHom, GroupRef};

/// ℤₙ written additively, elements named `0 … n-1`.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    assert!(n > 0, "cyclic group of order 0");
    let names = (0..n).map(|i| i.to_string()).collect();
    let mult = (0..n * n).map(|k| Elem::new((k / n + k % n) % n)).collect();
    FiniteGroup::from_trusted_table(format!("Z{n}"), names, mult).expect("cyclic table is a group")
}

/// Dihedral group of order `2n`: elements `r^i` and `s r^i`, with `s r s = r⁻¹`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    assert!(n > 0, "dihedral group of order 0");
    // (flip, i) encodes s^flip r^i.
    let decode = |k: usize| (k / n, k % n);
    let encode = |f: usize, i: usize| f * n + i % n;
    let mut mult = Vec::with_capacity(4 * n * n);
    for a in 0..2 * n {
        for b in 0..2 * n {
            let (fa, ia) = decode(a);
            let (fb, ib) = decode(b);
            // r^ia s^fb = s^fb r^(±ia)
            let ia2 = if fb == 1 { n - ia } else { ia };
            mult.push(Elem::new(encode(fa ^ fb, ia2 + ib)));
        }
    }
    let name = |k: usize| {
        let (f, i) = decode(k);
        let r = match i {
            0 => String::new(),
            1 => "r".to_owned(),
            _ => format!("r{i}"),
        };
        match (f, r.is_empty()) {
            (0, true) => "1".to_owned(),
            (0, false) => r,
            (_, _) => format!("s{r}"),
        }
    };
    let names = (0..2 * n).map(name).collect();
    FiniteGroup::from_trusted_table(format!("D{n}"), names, mult).expect("dihedral table is a group")
}

/// Quaternion group {±1, ±i, ±j, ±k}.
pub fn quaternion_group() -> FiniteGroup {
    const NAMES: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    // unit index 0..4 for 1,i,j,k; sign bit.
    let mul_units = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut mult = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (u, neg) = mul_units(a / 2, b / 2);
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            mult.push(Elem::new(2 * u + sign as usize));
        }
    }
    FiniteGroup::from_trusted_table("Q8".into(), NAMES.iter().map(|s| s.to_string()).collect(), mult)
        .expect("quaternion table is a group")
}

/// Direct product with elements named `(a,b)`, index `i·|B| + j`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let mut mult = Vec::with_capacity(na * nb * na * nb);
    for x in 0..na * nb {
        for y in 0..na * nb {
            let p = a.mul(Elem::new(x / nb), Elem::new(y / nb));
            let q = b.mul(Elem::new(x % nb), Elem::new(y % nb));
            mult.push(Elem::new(p.index() * nb + q.index()));
        }
    }
    let names = (0..na * nb)
        .map(|x| format!("({},{})", a.name_of(Elem::new(x / nb)), b.name_of(Elem::new(x % nb))))
        .collect();
    FiniteGroup::from_trusted_table(format!("{}x{}", a.name(), b.name()), names, mult)
        .expect("product of groups is a group")
}

/// GL(2,p) together with PGL(2,p) = GL/scalars and the projection.
///
/// Projective classes are named by their normal form (first nonzero entry 1).
pub fn gl_to_pgl(p: u32) -> Result<(GroupRef, GroupRef, GroupHom), AlgebraError> {
    let gl = Arc::new(general_linear(p)?);
    let scalars: Vec<Elem> = (1..p).map(|k| gl.lookup(&mat_name(&[[k, 0], [0, k]]))).collect::<Result<_, _>>()?;
    let (q, proj) = quotient(&gl, &scalars, format!("PGL(2,{p})"))?;
    let names = q
        .names()
        .iter()
        .map(|n| parse_mat(n, p).map(|m| mat_name(&projective_normal_form(&m, p))))
        .collect::<Result<Vec<_>, _>>()?;
    let pgl = Arc::new(q.renamed(q.name(), names)?);
    let proj = GroupHom::new(gl.clone(), pgl.clone(), proj.image_table().to_vec())?;
    Ok((gl, pgl, proj))
}

/// Look up the class of an arbitrary matrix literal in a PGL(2,p) built by [`gl_to_pgl`].
pub fn pgl_elem(pgl: &FiniteGroup, p: u32, literal: &str) -> Result<Elem, AlgebraError> {
    let m = parse_mat(literal, p)?;
    pgl.lookup(&mat_name(&projective_normal_form(&m, p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_group_orders_and_laws() {
        for g in [cyclic_group(5), dihedral_group(4), quaternion_group(), dihedral_group(3)] {
            let t = g.cayley_table();
            let names = g.names().to_vec();
            // Re-validate through the checked constructor.
            FiniteGroup::from_cayley(g.name(), names, &t).unwrap();
        }
        assert_eq!(dihedral_group(4).order(), 8);
        assert!(!dihedral_group(4).is_abelian());
        assert!(!quaternion_group().is_abelian());
        assert!(cyclic_group(7).is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion_group();
        let (i, j, k) = (q.lookup("i").unwrap(), q.lookup("j").unwrap(), q.lookup("k").unwrap());
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.name_of(q.mul(j, i)), "-k");
        assert_eq!(q.name_of(q.product(&[i, j, k])), "-1");
    }

    #[test]
    fn pgl_names_are_normal_forms() {
        let (gl, pgl, proj) = gl_to_pgl(5).unwrap();
        assert_eq!(pgl.order(), 120);
        let x = gl.lookup("[[3,0],[3,3]]").unwrap();
        assert_eq!(pgl.name_of(proj.apply(x)), "[[1,0],[1,1]]");
        assert_eq!(pgl_elem(&pgl, 5, "[[3,0],[3,3]]").unwrap(), proj.apply(x));
    }
}
