use super::XmodError;
use crate::algebra::{Elem, FiniteGroup};

/// A finite rack on `0..size` with `x ◁ y` stored in `left` and the inverse
/// operation `x ▷ y` (defined by `x ▷ (y ◁ x) = y`) precomputed in `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    name: String,
    names: Vec<String>,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Rack {
    /// `left_table[x][y] = x ◁ y`.
    pub fn new(name: impl Into<String>, names: Vec<String>, left_table: &[Vec<usize>]) -> Result<Rack, XmodError> {
        let n = names.len();
        if n == 0 || left_table.len() != n || left_table.iter().any(|r| r.len() != n) {
            return Err(XmodError::RackShape(n));
        }
        if let Some(v) = left_table.iter().flatten().find(|&&v| v >= n) {
            return Err(XmodError::RackEntryOutOfRange { value: *v, size: n });
        }
        let left: Vec<usize> = left_table.iter().flatten().copied().collect();
        let mut right = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let slot = &mut right[y * n + left[x * n + y]];
                if *slot != usize::MAX {
                    return Err(XmodError::NotBijective { y: names[y].clone() });
                }
                *slot = x;
            }
        }
        let rack = Rack { name: name.into(), names, left, right };
        rack.validate()?;
        Ok(rack)
    }

    fn validate(&self) -> Result<(), XmodError> {
        let n = self.size();
        let witness = |x: usize, y: usize, z: usize| XmodError::SelfDistributivityViolation {
            x: self.names[x].clone(),
            y: self.names[y].clone(),
            z: self.names[z].clone(),
        };
        for x in 0..n {
            for y in 0..n {
                let xy = self.tri_left(x, y);
                let x_rt_y = self.tri_right(x, y);
                for z in 0..n {
                    if self.tri_left(xy, z) != self.tri_left(self.tri_left(x, z), self.tri_left(y, z)) {
                        return Err(witness(x, y, z));
                    }
                    if self.tri_right(x, self.tri_right(y, z)) != self.tri_right(x_rt_y, self.tri_right(x, z)) {
                        return Err(witness(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name.trim())
    }

    /// `x ◁ y`.
    #[inline]
    pub fn tri_left(&self, x: usize, y: usize) -> usize {
        self.left[x * self.size() + y]
    }

    /// `x ▷ y`, the unique `z` with `z ◁ x = y`.
    #[inline]
    pub fn tri_right(&self, x: usize, y: usize) -> usize {
        self.right[x * self.size() + y]
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.size()).all(|x| self.tri_left(x, x) == x)
    }

    pub fn left_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.tri_left(x, y)).collect()).collect()
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `x ◁ y = 2y − x mod n`.
pub fn dihedral_quandle(n: usize) -> Rack {
    let t: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect();
    Rack::new(format!("dihedral({n})"), numbered(n), &t).expect("dihedral quandle axioms")
}

/// `x ◁ y = x + 1 mod n`: a rack that is not a quandle for `n > 1`.
pub fn cyclic_rack(n: usize) -> Rack {
    let t: Vec<Vec<usize>> = (0..n).map(|x| vec![(x + 1) % n; n]).collect();
    Rack::new(format!("cyclic({n})"), numbered(n), &t).expect("cyclic rack axioms")
}

/// Conjugation quandle `x ◁ y = y⁻¹ x y` on a conjugation-closed subset.
pub fn conjugation_quandle(g: &FiniteGroup, elements: &[Elem]) -> Result<Rack, XmodError> {
    let pos = |a: Elem| elements.iter().position(|&b| b == a);
    let mut t = Vec::with_capacity(elements.len());
    for &x in elements {
        let mut row = Vec::with_capacity(elements.len());
        for &y in elements {
            let z = g.product(&[g.inv(y), x, y]);
            row.push(pos(z).ok_or_else(|| XmodError::NotClosed(g.name_of(z).to_owned()))?);
        }
        t.push(row);
    }
    let names = elements.iter().map(|&e| g.name_of(e).to_owned()).collect();
    Rack::new(format!("conj({})", g.name()), names, &t)
}

/// The quandle `h ◁ g = x⁻¹ h g⁻¹ x g` on `G` (or on the derived subgroup).
pub fn eisermann_quandle(g: &FiniteGroup, x: Elem, carrier: &[Elem]) -> Result<Rack, XmodError> {
    let xi = g.inv(x);
    let pos = |a: Elem| carrier.iter().position(|&b| b == a);
    let mut t = Vec::with_capacity(carrier.len());
    for &h in carrier {
        let mut row = Vec::with_capacity(carrier.len());
        for &k in carrier {
            let z = g.product(&[xi, h, g.inv(k), x, k]);
            row.push(pos(z).ok_or_else(|| XmodError::NotClosed(g.name_of(z).to_owned()))?);
        }
        t.push(row);
    }
    let names = carrier.iter().map(|&e| g.name_of(e).to_owned()).collect();
    Rack::new(format!("eisermann({},{})", g.name(), g.name_of(x)), names, &t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric_group;

    #[test]
    fn dihedral_and_cyclic() {
        assert!(dihedral_quandle(3).is_quandle());
        let c = cyclic_rack(3);
        assert!(!c.is_quandle());
        assert_eq!(c.tri_right(0, 2), 1);
    }

    #[test]
    fn additive_table_violates_distributivity() {
        let t: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (x + y) % 3).collect()).collect();
        let err = Rack::new("sum", numbered(3), &t).unwrap_err();
        assert!(matches!(err, XmodError::SelfDistributivityViolation { .. }), "{err}");
    }

    #[test]
    fn non_bijective_column() {
        let t = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(Rack::new("bad", numbered(2), &t), Err(XmodError::NotBijective { .. })));
    }

    #[test]
    fn eisermann_quandles() {
        let s3 = symmetric_group(3).unwrap();
        let all: Vec<Elem> = s3.elements().collect();
        let x = s3.lookup("(12)").unwrap();
        assert!(eisermann_quandle(&s3, x, &all).unwrap().is_quandle());
        let triv = eisermann_quandle(&s3, s3.identity(), &all).unwrap();
        assert!((0..6).all(|h| (0..6).all(|k| triv.tri_left(h, k) == h)));
    }

    #[test]
    fn conjugation_quandle_on_transpositions() {
        let s3 = symmetric_group(3).unwrap();
        let ts: Vec<Elem> = ["(12)", "(13)", "(23)"].iter().map(|n| s3.lookup(n).unwrap()).collect();
        assert!(conjugation_quandle(&s3, &ts).unwrap().is_quandle());
        let not_closed = vec![s3.lookup("(12)").unwrap(), s3.lookup("(13)").unwrap()];
        assert!(matches!(conjugation_quandle(&s3, &not_closed), Err(XmodError::NotClosed(_))));
    }
}
