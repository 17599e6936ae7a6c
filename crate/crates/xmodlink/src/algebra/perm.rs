//! Symmetric groups in cycle notation.
//!
//! Composition is left to right: `(σ·τ)(i) = τ(σ(i))`, i.e. apply σ first.
//! With this convention `(12)·(23) = (132)`.

use std::collections::HashMap;

use super::{AlgebraError, Elem, FiniteGroup};

/// Largest `n` accepted by [`symmetric_group`].
pub const DEFAULT_SYMMETRIC_BOUND: usize = 7;

pub fn symmetric_group(n: usize) -> Result<FiniteGroup, AlgebraError> {
    symmetric_group_bounded(n, DEFAULT_SYMMETRIC_BOUND)
}

pub fn symmetric_group_bounded(n: usize, bound: usize) -> Result<FiniteGroup, AlgebraError> {
    if n == 0 || n > bound {
        return Err(AlgebraError::BoundExceeded { requested: n, bound });
    }
    let perms = all_permutations(n);
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let m = perms.len();
    let mut mult = Vec::with_capacity(m * m);
    let mut buf = vec![0u8; n];
    for s in &perms {
        for t in &perms {
            for i in 0..n {
                buf[i] = t[s[i] as usize];
            }
            mult.push(Elem::new(index[buf.as_slice()]));
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_trusted_table(format!("S{n}"), names, mult)
}

/// All permutations of `0..n` as image arrays, in lexicographic order
/// (so the identity comes first).
fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Cycle notation with 1-based points, each cycle starting at its least point,
/// fixed points omitted and `id` for the identity. Points are written without
/// separators for `n ≤ 9`.
pub fn cycle_notation(p: &[u8]) -> String {
    let n = p.len();
    let sep = if n > 9 { "," } else { "" };
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "id".to_owned()
    } else {
        out
    }
}

/// Parse cycle notation (any cycle order, 1-based points) into an image array.
pub fn parse_cycles(s: &str, n: usize) -> Result<Vec<u8>, AlgebraError> {
    let bad = || AlgebraError::BadPermutation(s.to_owned());
    let mut p: Vec<u8> = (0..n as u8).collect();
    let t = s.trim();
    if t == "id" || t == "()" || t.is_empty() {
        return Ok(p);
    }
    let mut rest = t;
    while !rest.is_empty() {
        let body_end = rest.find(')').ok_or_else(bad)?;
        if !rest.starts_with('(') {
            return Err(bad());
        }
        let body = &rest[1..body_end];
        let pts: Vec<usize> = if body.contains(',') {
            body.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            body.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        if pts.iter().any(|&x| x == 0 || x > n) {
            return Err(bad());
        }
        // Cycles compose left to right like everything else.
        let mut c: Vec<u8> = (0..n as u8).collect();
        for k in 0..pts.len() {
            c[pts[k] - 1] = (pts[(k + 1) % pts.len()] - 1) as u8;
        }
        p = p.iter().map(|&i| c[i as usize]).collect();
        rest = rest[body_end + 1..].trim_start();
    }
    Ok(p)
}

/// Look up an element of `symmetric_group(n)` by (possibly non-canonical) cycle notation.
pub fn perm_elem(g: &FiniteGroup, n: usize, s: &str) -> Result<Elem, AlgebraError> {
    let p = parse_cycles(s, n)?;
    g.lookup(&cycle_notation(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(3).unwrap().order(), 6);
        assert_eq!(symmetric_group(5).unwrap().order(), 120);
        assert!(matches!(symmetric_group(8), Err(AlgebraError::BoundExceeded { .. })));
    }

    #[test]
    fn composition_convention() {
        let s3 = symmetric_group(3).unwrap();
        let a = s3.lookup("(12)").unwrap();
        let b = s3.lookup("(23)").unwrap();
        assert_eq!(s3.name_of(s3.mul(a, b)), "(132)");
        assert_eq!(s3.name_of(s3.mul(b, a)), "(123)");
    }

    #[test]
    fn names_round_trip() {
        let s5 = symmetric_group(5).unwrap();
        assert_eq!(s5.name_of(s5.identity()), "id");
        let x = s5.lookup("(12345)").unwrap();
        assert_eq!(s5.name_of(s5.inv(x)), "(15432)");
        assert_eq!(perm_elem(&s5, 5, "(23451)").unwrap(), x);
        assert_eq!(perm_elem(&s5, 5, "(34)(12)").unwrap(), s5.lookup("(12)(34)").unwrap());
    }
}
