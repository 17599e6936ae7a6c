use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::same_group;
use super::{AlgebraError, Elem, GroupRef};

/// An element of the integral group ring ℤ[G], kept in canonical form
/// (index-sorted, no zero coefficients).
#[derive(Clone, Debug)]
pub struct GroupAlgebraElement {
    group: GroupRef,
    coeffs: BTreeMap<Elem, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(group: GroupRef) -> Self {
        GroupAlgebraElement { group, coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I, C>(group: GroupRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Elem, C)>,
        C: Into<BigInt>,
    {
        let mut out = GroupAlgebraElement::zero(group);
        for (g, c) in terms {
            out.add_term(g, c.into());
        }
        out
    }

    pub fn add_term(&mut self, g: Elem, c: BigInt) {
        assert!(g.index() < self.group.order(), "element index {} out of range", g.index());
        let slot = self.coeffs.entry(g).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn coeff(&self, g: Elem) -> BigInt {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &BigInt)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of all coefficients (the augmentation).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch {
                left: self.group.name().to_owned(),
                right: other.group.name().to_owned(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        if k.is_zero() {
            return GroupAlgebraElement::zero(self.group.clone());
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(g, c)| (*g, c * &k)).collect(),
        }
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool, AlgebraError> {
        self.check_same(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Push forward along a map of group elements (e.g. a homomorphism).
    pub fn map(&self, target: GroupRef, f: impl Fn(Elem) -> Elem) -> Self {
        GroupAlgebraElement::from_terms(target, self.coeffs.iter().map(|(g, c)| (f(*g), c.clone())))
    }
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl Eq for GroupAlgebraElement {}

/// Renders as `id + 5·(12345)`; the zero element renders as `0`.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let name = self.group.name_of(*g);
            let mag = if c < &BigInt::zero() { -c.clone() } else { c.clone() };
            match (k, c < &BigInt::zero()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}·{name}")?;
            }
        }
        Ok(())
    }
}
