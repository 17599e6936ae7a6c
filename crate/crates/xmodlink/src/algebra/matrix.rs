//! 2×2 matrix groups over a prime field.

use std::collections::{HashMap, HashSet};

use super::{AlgebraError, Elem, FiniteGroup};

/// Default cap on the size of a group generated by matrices.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

pub type Mat2 = [[u32; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2, p: u32) -> Mat2 {
    let m = |i: usize, j: usize| (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
    [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]]
}

pub fn mat_det(a: &Mat2, p: u32) -> u32 {
    (a[0][0] * a[1][1] % p + p - a[0][1] * a[1][0] % p) % p
}

pub fn mat_name(a: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", a[0][0], a[0][1], a[1][0], a[1][1])
}

/// Parse `[[a,b],[c,d]]` (whitespace tolerated); entries are reduced mod `p`.
pub fn parse_mat(s: &str, p: u32) -> Result<Mat2, AlgebraError> {
    let digits: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = digits
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| AlgebraError::BadMatrix(s.to_owned()))?;
    let nums: Vec<i64> = inner
        .split([',', '[', ']'])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| AlgebraError::BadMatrix(s.to_owned())))
        .collect::<Result<_, _>>()?;
    if nums.len() != 4 {
        return Err(AlgebraError::BadMatrix(s.to_owned()));
    }
    let r = |v: i64| v.rem_euclid(p as i64) as u32;
    Ok([[r(nums[0]), r(nums[1])], [r(nums[2]), r(nums[3])]])
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Identity first, then lexicographic by entries.
fn sort_key(a: &Mat2) -> (bool, Mat2) {
    (*a != [[1, 0], [0, 1]], *a)
}

fn group_from_matrices(name: String, mut mats: Vec<Mat2>, p: u32) -> Result<FiniteGroup, AlgebraError> {
    mats.sort_by_key(sort_key);
    let index: HashMap<Mat2, usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut mult = Vec::with_capacity(mats.len() * mats.len());
    for a in &mats {
        for b in &mats {
            mult.push(Elem::new(index[&mat_mul(a, b, p)]));
        }
    }
    let names = mats.iter().map(mat_name).collect();
    FiniteGroup::from_trusted_table(name, names, mult)
}

pub fn group_from_matrix_generators(generators: &[Mat2], p: u32) -> Result<FiniteGroup, AlgebraError> {
    group_from_matrix_generators_capped(generators, p, DEFAULT_CLOSURE_CAP)
}

pub fn group_from_matrix_generators_capped(
    generators: &[Mat2],
    p: u32,
    cap: usize,
) -> Result<FiniteGroup, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let gens: Vec<Mat2> = generators
        .iter()
        .map(|g| [[g[0][0] % p, g[0][1] % p], [g[1][0] % p, g[1][1] % p]])
        .collect();
    if let Some(g) = gens.iter().find(|g| mat_det(g, p) == 0) {
        return Err(AlgebraError::SingularGenerator(mat_name(g)));
    }
    let id: Mat2 = [[1, 0], [0, 1]];
    let mut seen: HashSet<Mat2> = HashSet::from([id]);
    let mut stack = vec![id];
    while let Some(a) = stack.pop() {
        for g in &gens {
            let b = mat_mul(&a, g, p);
            if seen.insert(b) {
                if seen.len() > cap {
                    return Err(AlgebraError::BoundExceeded { requested: seen.len(), bound: cap });
                }
                stack.push(b);
            }
        }
    }
    group_from_matrices(format!("<{} matrices mod {p}>", gens.len()), seen.into_iter().collect(), p)
}

fn all_invertible(p: u32) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [[a, b], [c, d]];
                    if mat_det(&m, p) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// GL(2,p) with matrix-literal names.
pub fn general_linear(p: u32) -> Result<FiniteGroup, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    group_from_matrices(format!("GL(2,{p})"), all_invertible(p), p)
}

/// Representative of the projective class of `a`: scaled so the first nonzero
/// entry (row-major) equals 1.
pub fn projective_normal_form(a: &Mat2, p: u32) -> Mat2 {
    let first = [a[0][0], a[0][1], a[1][0], a[1][1]].into_iter().find(|&v| v != 0).unwrap_or(1);
    let inv = (1..p).find(|&k| k * first % p == 1).unwrap_or(1);
    [[a[0][0] * inv % p, a[0][1] * inv % p], [a[1][0] * inv % p, a[1][1] * inv % p]]
}
