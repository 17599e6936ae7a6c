use std::collections::BTreeMap;

use super::solver::{CrossingRules, Problem};
use super::InvariantError;
use crate::diagram::{arc_index, SlicedDiagram};
use crate::xmod::Rack;

fn check(side: &'static str, width: usize, word: &[usize], size: usize) -> Result<(), InvariantError> {
    if word.len() != width {
        return Err(InvariantError::WordSignatureMismatch {
            side,
            expected: format!("{width} colours"),
            found: format!("{} colours", word.len()),
        });
    }
    match word.iter().find(|&&c| c >= size) {
        Some(&c) => Err(InvariantError::ElementOutOfRange { index: c, order: size }),
        None => Ok(()),
    }
}

/// Number of rack colourings of `d` with the given boundary colours (rack
/// element indices). Positive crossings colour the incoming under-arc by
/// `over ▷ outgoing`, negative ones by `outgoing ◁ over`.
pub fn rack_colouring_count(
    d: &SlicedDiagram,
    rack: &Rack,
    top: &[usize],
    bottom: Option<&[usize]>,
) -> Result<u64, InvariantError> {
    check("top", d.top().len(), top, rack.size())?;
    let arcs = arc_index(d);
    let mut fixed: Vec<(usize, usize)> = top.iter().enumerate().map(|(p, &c)| (arcs.arc_at(0, p), c)).collect();
    if let Some(b) = bottom {
        check("bottom", d.bottom().len(), b, rack.size())?;
        fixed.extend(b.iter().enumerate().map(|(p, &c)| (arcs.arc_at(d.height(), p), c)));
    }
    let rules = CrossingRules::from_rack(rack);
    Ok(Problem::new(&arcs, &rules, &fixed).count(1))
}

/// Rack colouring counts grouped by bottom colours.
pub fn rack_colouring_counts(d: &SlicedDiagram, rack: &Rack, top: &[usize]) -> Result<BTreeMap<Vec<usize>, u64>, InvariantError> {
    check("top", d.top().len(), top, rack.size())?;
    let arcs = arc_index(d);
    let fixed: Vec<(usize, usize)> = top.iter().enumerate().map(|(p, &c)| (arcs.arc_at(0, p), c)).collect();
    let rules = CrossingRules::from_rack(rack);
    let mut out = BTreeMap::new();
    for sol in Problem::new(&arcs, &rules, &fixed).solutions(1) {
        let b: Vec<usize> = arcs.bottom_arcs().iter().map(|&a| sol[a] as usize).collect();
        *out.entry(b).or_insert(0) += 1;
    }
    Ok(out)
}
