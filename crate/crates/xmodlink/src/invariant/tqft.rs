use std::collections::BTreeMap;

use super::state_sum::StateSum;
use super::InvariantError;
use crate::algebra::{Elem, EnhancedWord};
use crate::diagram::{compose, SlicedDiagram};
use crate::pairs::ReidemeisterPair;

/// Gluing formula: the state sum of `d1` stacked on `d2` equals the sum over
/// all middle enhancements `ω′` of `⟨top|d1|ω′⟩` composed with `⟨ω′|d2|bottom⟩`.
pub fn tqft_check(
    d1: &SlicedDiagram,
    d2: &SlicedDiagram,
    pair: &ReidemeisterPair,
    top: &EnhancedWord,
    bottom: &EnhancedWord,
) -> Result<bool, InvariantError> {
    let glued = compose(d1, d2)?;
    let engine = StateSum::new(pair, 1);
    let whole = engine.state_sum(&glued, top, bottom)?;
    let e = pair.fiber();
    let mut sum: BTreeMap<Elem, u64> = BTreeMap::new();
    for (middle, upper) in engine.matrix(d1, top)? {
        let lower = engine.state_sum(d2, &middle, bottom)?;
        for (&a, &m) in &upper.terms {
            for (&b, &k) in &lower.terms {
                *sum.entry(e.mul(b, a)).or_insert(0) += m * k;
            }
        }
    }
    Ok(sum == whole.terms)
}
