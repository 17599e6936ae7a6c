use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::AlgebraError;

/// Shared handle to an immutable finite group.
pub type GroupRef = Arc<FiniteGroup>;

/// An element of some [`FiniteGroup`], stored as its index in the Cayley table.
///
/// Elements carry no back-reference to their group. Every table lookup is
/// bounds-checked, so using an element of a larger group panics instead of
/// reading garbage; [`FiniteGroup::elem`] gives the fallible conversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const fn new(index: usize) -> Elem {
        Elem(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite group given by a validated multiplication table with display names.
pub struct FiniteGroup {
    name: String,
    names: Vec<String>,
    lookup: HashMap<String, Elem>,
    mult: Vec<Elem>,
    inverse: Vec<Elem>,
    identity: Elem,
    generators: OnceLock<Vec<Elem>>,
}

impl FiniteGroup {
    /// Validate a Cayley table and build the group.
    ///
    /// `table[i][j]` is the index of `names[i] · names[j]`. Associativity is
    /// checked with Light's test over a generating set, which is exhaustive in
    /// effect while costing `O(|S|·n²)` instead of `O(n³)`.
    pub fn from_cayley(
        name: impl Into<String>,
        names: Vec<String>,
        table: &[Vec<usize>],
    ) -> Result<FiniteGroup, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if table.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: table.len() });
        }
        let mut mult = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AlgebraError::IndexOutOfRange { row: i, col: j, value: v, order: n });
                }
                mult.push(Elem::new(v));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e * n + a].index() == a && mult[a * n + e].index() == a))
            .map(Elem::new)
            .ok_or(AlgebraError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mult[a * n + b] == identity && mult[b * n + a] == identity)
                .ok_or_else(|| AlgebraError::NoInverse { element: names[a].clone() })?;
            inverse.push(Elem::new(inv));
        }
        let group = FiniteGroup::assemble(name.into(), names, mult, inverse, identity)?;
        group.check_associative()?;
        Ok(group)
    }

    /// Build from a table already known to be a group (closure of matrices or
    /// permutations, subgroup restriction, ...). Only the cheap checks run.
    pub(crate) fn from_trusted_table(
        name: String,
        names: Vec<String>,
        mult: Vec<Elem>,
    ) -> Result<FiniteGroup, AlgebraError> {
        let n = names.len();
        debug_assert_eq!(mult.len(), n * n);
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e * n + a].index() == a))
            .map(Elem::new)
            .ok_or(AlgebraError::NoIdentity)?;
        let mut inverse = vec![identity; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| mult[a * n + b] == identity)
                .ok_or_else(|| AlgebraError::NoInverse { element: names[a].clone() })?;
            inverse[a] = Elem::new(b);
        }
        FiniteGroup::assemble(name, names, mult, inverse, identity)
    }

    fn assemble(
        name: String,
        names: Vec<String>,
        mult: Vec<Elem>,
        inverse: Vec<Elem>,
        identity: Elem,
    ) -> Result<FiniteGroup, AlgebraError> {
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, s) in names.iter().enumerate() {
            if lookup.insert(s.clone(), Elem::new(i)).is_some() {
                return Err(AlgebraError::DuplicateName(s.clone()));
            }
        }
        Ok(FiniteGroup { name, names, lookup, mult, inverse, identity, generators: OnceLock::new() })
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let gens = self.generators().to_vec();
        for &s in &gens {
            for a in self.elements() {
                let as_ = self.mul(a, s);
                for b in self.elements() {
                    if self.mul(as_, b) != self.mul(a, self.mul(s, b)) {
                        return Err(AlgebraError::NonAssociative {
                            a: self.name_of(a).to_owned(),
                            b: self.name_of(s).to_owned(),
                            c: self.name_of(b).to_owned(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Copy of this group with new display names (same table).
    pub fn renamed(&self, name: impl Into<String>, names: Vec<String>) -> Result<FiniteGroup, AlgebraError> {
        if names.len() != self.order() {
            return Err(AlgebraError::DimensionMismatch { expected: self.order(), found: names.len() });
        }
        FiniteGroup::assemble(name.into(), names, self.mult.clone(), self.inverse.clone(), self.identity)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: usize) -> Result<Elem, AlgebraError> {
        if index < self.order() {
            Ok(Elem::new(index))
        } else {
            Err(AlgebraError::ElementOutOfRange { index, order: self.order() })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order()).map(Elem::new)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mult[a.index() * self.order() + b.index()]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a.index()]
    }

    /// Left-to-right product of a slice of elements.
    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// `a b a⁻¹`.
    pub fn conj(&self, a: Elem, b: Elem) -> Elem {
        self.product(&[a, b, self.inv(a)])
    }

    /// `[a,b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.product(&[a, b, self.inv(a), self.inv(b)])
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.generators()
            .iter()
            .all(|&s| self.generators().iter().all(|&t| self.mul(s, t) == self.mul(t, s)))
    }

    pub fn name_of(&self, a: Elem) -> &str {
        &self.names[a.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Result<Elem, AlgebraError> {
        self.lookup
            .get(name.trim())
            .copied()
            .ok_or_else(|| AlgebraError::UnknownElement { name: name.trim().to_owned(), group: self.name.clone() })
    }

    /// A small generating set, chosen greedily in index order.
    ///
    /// Every element is reachable from the identity by right multiplication
    /// with these generators, which is what Light's associativity test needs.
    pub fn generators(&self) -> &[Elem] {
        self.generators.get_or_init(|| {
            let n = self.order();
            let mut reached = vec![false; n];
            reached[self.identity.index()] = true;
            let mut gens: Vec<Elem> = Vec::new();
            while let Some(next) = reached.iter().position(|r| !r) {
                gens.push(Elem::new(next));
                let mut stack: Vec<Elem> = (0..n).filter(|&i| reached[i]).map(Elem::new).collect();
                while let Some(r) = stack.pop() {
                    for &s in &gens {
                        let t = self.mul(r, s);
                        if !reached[t.index()] {
                            reached[t.index()] = true;
                            stack.push(t);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Cayley table as nested index vectors (the inverse of [`FiniteGroup::from_cayley`]).
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.mult[i * n + j].index()).collect()).collect()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.mult == other.mult
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

/// Groups are the same if they are the same allocation or have identical tables.
pub fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    std::ptr::eq(a, b) || a == b
}

/// Sorted list of the elements of the subgroup generated by `gens`.
pub fn subgroup_closure(g: &FiniteGroup, gens: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    seen[g.identity().index()] = true;
    let mut stack = vec![g.identity()];
    while let Some(a) = stack.pop() {
        for &s in gens {
            let b = g.mul(a, s);
            if !seen[b.index()] {
                seen[b.index()] = true;
                stack.push(b);
            }
        }
    }
    g.elements().filter(|e| seen[e.index()]).collect()
}

/// Restrict `g` to a subset closed under multiplication, keeping names and index order.
pub(crate) fn restrict(g: &FiniteGroup, elems: &[Elem], name: String) -> Result<FiniteGroup, AlgebraError> {
    let mut pos = vec![usize::MAX; g.order()];
    for (i, e) in elems.iter().enumerate() {
        pos[e.index()] = i;
    }
    let mut mult = Vec::with_capacity(elems.len() * elems.len());
    for &a in elems {
        for &b in elems {
            let p = pos[g.mul(a, b).index()];
            if p == usize::MAX {
                return Err(AlgebraError::NotClosed {
                    a: g.name_of(a).to_owned(),
                    b: g.name_of(b).to_owned(),
                });
            }
            mult.push(Elem::new(p));
        }
    }
    let names = elems.iter().map(|&e| g.name_of(e).to_owned()).collect();
    FiniteGroup::from_trusted_table(name, names, mult)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteGroup {
        FiniteGroup::from_cayley("Z2", vec!["e".into(), "a".into()], &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn two_element_group() {
        let g = z2();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), Elem::new(0));
        assert_eq!(g.inv(Elem::new(1)), Elem::new(1));
    }

    #[test]
    fn left_zero_table_is_rejected() {
        let names = vec!["a".into(), "b".into(), "c".into()];
        let table = vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]];
        let err = FiniteGroup::from_cayley("bad", names, &table).unwrap_err();
        assert!(matches!(err, AlgebraError::NoIdentity | AlgebraError::NonAssociative { .. }));
    }

    #[test]
    fn non_associative_loop_gives_witness() {
        // A Latin square with identity 0 whose operation is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::from_cayley("loop", names, &t).unwrap_err();
        assert!(matches!(err, AlgebraError::NonAssociative { .. }), "{err}");
    }

    #[test]
    fn out_of_range_and_duplicates() {
        let err = FiniteGroup::from_cayley("x", vec!["e".into(), "a".into()], &[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, AlgebraError::IndexOutOfRange { .. }));
        let err = FiniteGroup::from_cayley("x", vec!["e".into(), "e".into()], &[vec![0, 1], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, AlgebraError::DuplicateName(_)));
    }

    #[test]
    fn checked_element_conversion() {
        let g = z2();
        assert!(g.elem(1).is_ok());
        assert!(matches!(g.elem(2), Err(AlgebraError::ElementOutOfRange { index: 2, order: 2 })));
    }
}
