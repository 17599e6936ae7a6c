use std::sync::Arc;

use super::{Rack, XmodError};
use crate::algebra::{Elem, GroupRef};

/// A rack 2-cocycle `w: R × R → V` with `V` abelian (written multiplicatively
/// in code, additively in prose).
#[derive(Clone, Debug)]
pub struct RackCocycle {
    rack: Arc<Rack>,
    v: GroupRef,
    w: Vec<Elem>,
}

impl RackCocycle {
    /// `w_table[x][y] = w(x, y)`; checks `w(x,y) + w(x◁y, z) = w(x,z) + w(x◁z, y◁z)`.
    pub fn new(rack: Arc<Rack>, v: GroupRef, w_table: &[Vec<Elem>]) -> Result<RackCocycle, XmodError> {
        if !v.is_abelian() {
            return Err(XmodError::NonAbelianV(v.name().to_owned()));
        }
        let n = rack.size();
        if w_table.len() != n || w_table.iter().any(|r| r.len() != n) {
            return Err(XmodError::RackShape(n));
        }
        if let Some(bad) = w_table.iter().flatten().find(|e| e.index() >= v.order()) {
            return Err(XmodError::RackEntryOutOfRange { value: bad.index(), size: v.order() });
        }
        let c = RackCocycle { rack, v, w: w_table.iter().flatten().copied().collect() };
        if let Some((x, y, z)) = c.first_violation() {
            let nm = |i: usize| c.rack.names()[i].clone();
            return Err(XmodError::CocycleViolation { x: nm(x), y: nm(y), z: nm(z) });
        }
        Ok(c)
    }

    fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let (r, v) = (&self.rack, &self.v);
        let n = r.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = v.mul(self.w(x, y), self.w(r.tri_left(x, y), z));
                    let rhs = v.mul(self.w(x, z), self.w(r.tri_left(x, z), r.tri_left(y, z)));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn rack(&self) -> &Arc<Rack> {
        &self.rack
    }

    pub fn coefficients(&self) -> &GroupRef {
        &self.v
    }

    #[inline]
    pub fn w(&self, x: usize, y: usize) -> Elem {
        self.w[x * self.rack.size() + y]
    }

    pub fn is_quandle_cocycle(&self) -> bool {
        (0..self.rack.size()).all(|x| self.w(x, x) == self.v.identity())
    }
}

/// Every `V`-valued 2-cocycle on `rack`, by brute force over all tables
/// (only tables vanishing on the diagonal when `quandle_only`).
///
/// The search space is `|V|^(n²)` (or `|V|^(n²−n)`), so this refuses inputs
/// with more than `limit` candidate tables.
pub fn all_cocycles(rack: &Arc<Rack>, v: &GroupRef, quandle_only: bool, limit: u64) -> Result<Vec<RackCocycle>, XmodError> {
    let n = rack.size();
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| !(quandle_only && x == y)).collect();
    let total = (v.order() as u64).checked_pow(cells.len() as u32).filter(|&t| t <= limit);
    if total.is_none() {
        return Err(XmodError::SearchTooLarge { limit });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; cells.len()];
    loop {
        let mut table = vec![vec![v.identity(); n]; n];
        for (k, &(x, y)) in cells.iter().enumerate() {
            table[x][y] = Elem::new(digits[k]);
        }
        if let Ok(c) = RackCocycle::new(rack.clone(), v.clone(), &table) {
            out.push(c);
        }
        let Some(k) = digits.iter().position(|&d| d + 1 < v.order()) else { break };
        digits[k] += 1;
        digits[..k].iter_mut().for_each(|d| *d = 0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclic_group;
    use crate::xmod::{cyclic_rack, dihedral_quandle};

    fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<Elem>> {
        (0..n).map(|x| (0..n).map(|y| Elem::new(f(x, y))).collect()).collect()
    }

    #[test]
    fn zero_and_constant_cocycles() {
        let r = Arc::new(dihedral_quandle(3));
        let z3 = Arc::new(cyclic_group(3));
        let zero = RackCocycle::new(r.clone(), z3.clone(), &table(3, |_, _| 0)).unwrap();
        assert!(zero.is_quandle_cocycle());
        let c = RackCocycle::new(r, z3, &table(3, |_, _| 1)).unwrap();
        assert!(!c.is_quandle_cocycle());
    }

    #[test]
    fn violation_on_cyclic_rack() {
        let r = Arc::new(cyclic_rack(3));
        let z3 = Arc::new(cyclic_group(3));
        let err = RackCocycle::new(r, z3, &table(3, |_, y| y)).unwrap_err();
        assert!(matches!(err, XmodError::CocycleViolation { .. }), "{err}");
    }

    #[test]
    fn brute_force_enumeration() {
        let r = Arc::new(dihedral_quandle(3));
        let z3 = Arc::new(cyclic_group(3));
        let qs = all_cocycles(&r, &z3, true, 1 << 20).unwrap();
        assert!(qs.iter().all(|c| c.is_quandle_cocycle()));
        // Independent brute force over all 3⁹ tables: 9 quandle cocycles, 27 rack cocycles.
        assert_eq!(qs.len(), 9);
        assert_eq!(all_cocycles(&r, &z3, false, 1 << 20).unwrap().len(), 27);
        assert!(matches!(all_cocycles(&r, &z3, false, 10), Err(XmodError::SearchTooLarge { .. })));
    }
}
