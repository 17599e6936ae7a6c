//! Named built-in groups, racks, pairs and diagrams, addressed by structured
//! keys such as `eisermann:S4:x=(12)` or `lifted:gl25:x=[[2,0],[0,1]]`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{
    cyclic_group, dihedral_group, gl_to_pgl, pgl_elem, quaternion_group, symmetric_group, Elem, GroupRef,
};
use crate::diagram::{
    closure, figure_eight_string, trefoil_minus_string, trefoil_plus_string, unknot_string, SlicedDiagram,
};
use crate::pairs::{eisermann_pair, lifted_eisermann_pair, pair_from_rack, pair_from_rack_cocycle, ReidemeisterPair};
use crate::xmod::{all_cocycles, cyclic_rack, dihedral_quandle, xmod_identity_conj, CentralExtension, Rack};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuiltinError {
    #[error("unknown built-in `{0}` (run `xmodlink builtins` for the list)")]
    Unknown(String),
    #[error("built-in `{key}`: {message}")]
    BadParameter { key: String, message: String },
}

/// Key patterns and what they resolve to, for `xmodlink builtins`.
pub const CATALOG: &[(&str, &str)] = &[
    ("group:S<n>", "symmetric group, n ≤ 6, permutations in cycle notation"),
    ("group:D<n>", "dihedral group of order 2n"),
    ("group:Q8", "quaternion group"),
    ("group:Z<n>", "cyclic group"),
    ("group:GL25 / group:PGL25", "GL(2,5) and PGL(2,5) ≅ S5"),
    ("rack:dihedral:<n>", "dihedral quandle (as a rack) or its pair over Z<n>"),
    ("rack:cyclic:<n>", "cyclic rack x◁y = x+1 (as a rack) or its pair over Z<n>"),
    ("eisermann:<group>:x=<elt>", "Eisermann pair over (id, conjugation) on the whole group"),
    ("eisermann-derived:<group>:x=<elt>", "Eisermann pair on the derived subgroup"),
    ("cocycle:dihedral:3:<k>", "pair of the k-th Z3-valued quandle 2-cocycle of the dihedral quandle R3"),
    ("trivial:<group>", "the pair with ψ = φ = 1 over (id, conjugation)"),
    ("lifted:gl25:x=<matrix>", "lifted Eisermann pair for GL(2,5) → PGL(2,5), x a matrix literal"),
    ("unlifted:pgl25:x=<matrix>", "Eisermann pair on PGL(2,5)"),
    ("diagram:trefoil+string / trefoil-string", "string trefoils"),
    ("diagram:figure8-string / unknot-string", "string figure-eight and unknot"),
    ("diagram:trefoil+closed / figure8-closed / ...", "closure of the corresponding string knot"),
];

fn bad(key: &str, message: impl Into<String>) -> BuiltinError {
    BuiltinError::BadParameter { key: key.to_owned(), message: message.into() }
}

fn number(key: &str, s: &str) -> Result<usize, BuiltinError> {
    s.parse().map_err(|_| bad(key, format!("`{s}` is not a number")))
}

pub fn group(name: &str) -> Result<GroupRef, BuiltinError> {
    let key = format!("group:{name}");
    let g = match name {
        "Q8" => quaternion_group(),
        "GL25" => return Ok(gl_to_pgl(5).map_err(|e| bad(&key, e.to_string()))?.0),
        "PGL25" => return Ok(gl_to_pgl(5).map_err(|e| bad(&key, e.to_string()))?.1),
        _ => {
            let (head, n) = name.split_at(1.min(name.len()));
            let n = number(&key, n)?;
            match head {
                "S" if (1..=6).contains(&n) => symmetric_group(n).map_err(|e| bad(&key, e.to_string()))?,
                "D" if n >= 2 => dihedral_group(n),
                "Z" if n >= 1 => cyclic_group(n),
                _ => return Err(BuiltinError::Unknown(key)),
            }
        }
    };
    Ok(Arc::new(g))
}

pub fn rack(key: &str) -> Result<Rack, BuiltinError> {
    let parts: Vec<&str> = key.split(':').collect();
    match parts.as_slice() {
        ["rack", "dihedral", n] => Ok(dihedral_quandle(number(key, n)?.max(1))),
        ["rack", "cyclic", n] => Ok(cyclic_rack(number(key, n)?.max(1))),
        _ => Err(BuiltinError::Unknown(key.to_owned())),
    }
}

fn element(key: &str, g: &GroupRef, spec: &str) -> Result<Elem, BuiltinError> {
    let name = spec.strip_prefix("x=").ok_or_else(|| bad(key, "expected `x=<element>`"))?;
    g.lookup(name).map_err(|e| bad(key, e.to_string()))
}

pub fn pair(key: &str) -> Result<ReidemeisterPair, BuiltinError> {
    let parts: Vec<&str> = key.splitn(3, ':').collect();
    if let Some(rest) = key.strip_prefix("cocycle:") {
        return pair_cocycle(key, rest);
    }
    match parts.as_slice() {
        ["eisermann", g, x] | ["eisermann-derived", g, x] => {
            let grp = group(g)?;
            let x = element(key, &grp, x)?;
            Ok(eisermann_pair(&grp, x, parts[0] == "eisermann-derived"))
        }
        ["rack", _, n] => {
            let r = rack(key)?;
            pair_from_rack(&r, group(&format!("Z{n}"))?).map_err(|e| bad(key, e.to_string()))
        }
        ["trivial", g] => Ok(ReidemeisterPair::trivial(Arc::new(xmod_identity_conj(group(g)?)))),
        ["lifted", "gl25", x] | ["unlifted", "pgl25", x] => {
            let (_, pgl, proj) = gl_to_pgl(5).map_err(|e| bad(key, e.to_string()))?;
            let lit = x.strip_prefix("x=").ok_or_else(|| bad(key, "expected `x=<matrix>`"))?;
            let x = pgl_elem(&pgl, 5, lit).map_err(|e| bad(key, e.to_string()))?;
            if parts[0] == "lifted" {
                let ext = CentralExtension::new(proj).map_err(|e| bad(key, e.to_string()))?;
                Ok(lifted_eisermann_pair(&ext, x))
            } else {
                Ok(eisermann_pair(&pgl, x, false))
            }
        }
        _ => Err(BuiltinError::Unknown(key.to_owned())),
    }
}

fn pair_cocycle(key: &str, rest: &str) -> Result<ReidemeisterPair, BuiltinError> {
    let k = rest.strip_prefix("dihedral:3:").ok_or_else(|| bad(key, "only `cocycle:dihedral:3:<k>` is built in"))?;
    let cocycles = dihedral3_cocycles();
    let k = number(key, k)?;
    let c = cocycles.get(k).ok_or_else(|| bad(key, format!("there are {} cocycles", cocycles.len())))?;
    pair_from_rack_cocycle(c, Arc::new(cyclic_group(3))).map_err(|e| bad(key, e.to_string()))
}

/// All Z3-valued quandle 2-cocycles of the dihedral quandle of order 3, in
/// the deterministic order of the brute-force search.
pub fn dihedral3_cocycles() -> Vec<crate::xmod::RackCocycle> {
    all_cocycles(&Arc::new(dihedral_quandle(3)), &Arc::new(cyclic_group(3)), true, 1 << 20)
        .expect("3^9 candidate tables are within the search limit")
}

pub fn diagram(key: &str) -> Result<SlicedDiagram, BuiltinError> {
    let name = key.strip_prefix("diagram:").ok_or_else(|| BuiltinError::Unknown(key.to_owned()))?;
    let (knot, closed) = match (name.strip_suffix("string"), name.strip_suffix("closed")) {
        (Some(k), _) => (k, false),
        (_, Some(k)) => (k, true),
        _ => return Err(BuiltinError::Unknown(key.to_owned())),
    };
    let d = match knot {
        "trefoil+" => trefoil_plus_string(),
        "trefoil-" => trefoil_minus_string(),
        "figure8-" => figure_eight_string(),
        "unknot-" => unknot_string(),
        _ => return Err(BuiltinError::Unknown(key.to_owned())),
    };
    Ok(if closed { closure(&d).expect("string knots close") } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_resolve() {
        assert_eq!(group("S4").unwrap().order(), 24);
        assert_eq!(group("D4").unwrap().order(), 8);
        assert_eq!(group("PGL25").unwrap().order(), 120);
        assert!(matches!(group("X3"), Err(BuiltinError::Unknown(_))));
        assert_eq!(pair("eisermann:S4:x=(12)").unwrap().base().order(), 24);
        assert_eq!(pair("eisermann-derived:S4:x=(12)").unwrap().base().order(), 12);
        assert_eq!(pair("rack:dihedral:5").unwrap().base().order(), 5);
        assert_eq!(pair("cocycle:dihedral:3:0").unwrap().fiber().order(), 9);
        assert_eq!(pair("lifted:gl25:x=[[2,0],[0,1]]").unwrap().fiber().order(), 480);
        assert_eq!(pair("unlifted:pgl25:x=[[2,0],[0,1]]").unwrap().base().order(), 120);
        assert!(matches!(pair("eisermann:S4:x=(1234567)"), Err(BuiltinError::BadParameter { .. })));
        assert_eq!(diagram("diagram:trefoil+string").unwrap(), trefoil_plus_string());
        assert!(diagram("diagram:figure8-closed").unwrap().is_closed());
        assert!(diagram("diagram:hopf-string").is_err());
        assert_eq!(rack("rack:cyclic:4").unwrap().size(), 4);
        assert_eq!(dihedral3_cocycles().len(), 9);
    }
}
