//! Wirtinger data of string knots and the Eisermann count computed directly
//! from the knot group, independently of crossed modules and pairs.

use std::collections::BTreeMap;

use super::InvariantError;
use crate::algebra::{Elem, FiniteGroup};
use crate::diagram::{arc_index, Generator, Orientation, SlicedDiagram};

/// An undercrossing met while travelling along the knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WirtingerCrossing {
    /// +1 or −1
    pub sign: i32,
    /// travel index of the arc ending here
    pub under_in: usize,
    /// travel index of the arc starting here
    pub under_out: usize,
    /// travel index of the over arc
    pub over: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerData {
    /// Arc ids (as in [`crate::diagram::ArcIndex`]) in travel order; the
    /// first is the base arc carrying the meridian.
    pub arcs: Vec<usize>,
    pub crossings: Vec<WirtingerCrossing>,
    /// `∏ g_{aᵢ}^{−θᵢ} g_{jᵢ}^{θᵢ}` as `(travel index, exponent)` letters.
    pub longitude: Vec<(usize, i32)>,
}

impl WirtingerData {
    /// Evaluate the longitude word (or its first `letters` letters, a partial
    /// longitude) under arc colours given in travel order.
    pub fn evaluate_longitude(&self, g: &FiniteGroup, colours: &[Elem], letters: usize) -> Elem {
        self.longitude[..letters].iter().fold(g.identity(), |acc, &(a, e)| g.mul(acc, g.pow(colours[a], e as i64)))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

/// Where a strand entering a slice piece leaves it, and whether it passed
/// under a crossing on the way.
struct Exit {
    level: usize,
    pos: usize,
    dir: Dir,
    /// `(crossing index in ArcIndex order)` when passing under
    under: Option<usize>,
}

pub fn diagram_to_wirtinger(d: &SlicedDiagram) -> Result<WirtingerData, InvariantError> {
    if d.top() != [Orientation::Down] || d.bottom() != [Orientation::Down] {
        return Err(InvariantError::NotAStringKnot);
    }
    let ai = arc_index(d);
    let levels = d.levels();
    // enter[level][pos] for entering slice `level` from above, and
    // enter_up[level][pos] for entering slice `level-1` from below.
    let mut from_above: Vec<Vec<Option<Exit>>> = levels.iter().map(|l| (0..l.len()).map(|_| None).collect()).collect();
    let mut from_below: Vec<Vec<Option<Exit>>> = levels.iter().map(|l| (0..l.len()).map(|_| None).collect()).collect();
    let mut crossing_no = 0;
    for (k, s) in d.slices().iter().enumerate() {
        let (mut tp, mut bp) = (0, 0);
        for &gen in &s.pieces {
            let down = |level, pos| Exit { level, pos, dir: Dir::Down, under: None };
            let up = |level, pos| Exit { level, pos, dir: Dir::Up, under: None };
            match gen {
                Generator::IdDown => from_above[k][tp] = Some(down(k + 1, bp)),
                Generator::IdUp => from_below[k + 1][bp] = Some(up(k, tp)),
                Generator::CapLR => from_above[k][tp] = Some(up(k, tp + 1)),
                Generator::CapRL => from_above[k][tp + 1] = Some(up(k, tp)),
                Generator::CupLR => from_below[k + 1][bp] = Some(down(k + 1, bp + 1)),
                Generator::CupRL => from_below[k + 1][bp + 1] = Some(down(k + 1, bp)),
                Generator::XPlus => {
                    from_above[k][tp + 1] = Some(down(k + 1, bp));
                    from_above[k][tp] = Some(Exit { under: Some(crossing_no), ..down(k + 1, bp + 1) });
                }
                Generator::XMinus => {
                    from_above[k][tp] = Some(down(k + 1, bp + 1));
                    from_above[k][tp + 1] = Some(Exit { under: Some(crossing_no), ..down(k + 1, bp) });
                }
            }
            if gen.crossing_sign() != 0 {
                crossing_no += 1;
            }
            tp += gen.top().len();
            bp += gen.bottom().len();
        }
    }

    let last = d.height();
    let total_points: usize = levels.iter().map(Vec::len).sum();
    let mut visited = 1usize;
    let (mut level, mut pos, mut dir) = (0usize, 0usize, Dir::Down);
    let mut arcs = vec![ai.arc_at(0, 0)];
    let mut unders: Vec<usize> = Vec::new();
    while !(level == last && dir == Dir::Down) {
        let exit = match dir {
            Dir::Down => from_above[level][pos].as_ref(),
            Dir::Up => from_below[level][pos].as_ref(),
        }
        .expect("every strand end continues into a piece");
        if let Some(c) = exit.under {
            unders.push(c);
            arcs.push(ai.arc_at(exit.level, exit.pos));
        }
        (level, pos, dir) = (exit.level, exit.pos, exit.dir);
        visited += 1;
        if visited > total_points {
            return Err(InvariantError::MultipleComponents);
        }
    }
    if visited != total_points {
        return Err(InvariantError::MultipleComponents);
    }
    let travel_of = |arc: usize| arcs.iter().position(|&a| a == arc).expect("over arcs lie on the knot");
    let crossings: Vec<WirtingerCrossing> = unders
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let x = ai.crossings()[c];
            WirtingerCrossing { sign: x.sign, under_in: i, under_out: i + 1, over: travel_of(x.over) }
        })
        .collect();
    let longitude = crossings.iter().flat_map(|c| [(c.under_in, -c.sign), (c.over, c.sign)]).collect();
    Ok(WirtingerData { arcs, crossings, longitude })
}

/// Count homomorphisms from the knot group sending the base meridian to `x`,
/// bucketed by the image of the longitude. Arcs are coloured along the knot;
/// the under-out arc gets `over^{−θ}·under_in·over^{θ}`.
pub fn eisermann_oracle(g: &FiniteGroup, x: Elem, d: &SlicedDiagram) -> Result<BTreeMap<Elem, u64>, InvariantError> {
    let w = diagram_to_wirtinger(d)?;
    let mut colours: Vec<Option<Elem>> = vec![None; w.arcs.len()];
    colours[0] = Some(x);
    let mut out = BTreeMap::new();
    oracle_step(g, &w, 0, &mut colours, &mut out);
    Ok(out)
}

fn oracle_step(g: &FiniteGroup, w: &WirtingerData, i: usize, colours: &mut Vec<Option<Elem>>, out: &mut BTreeMap<Elem, u64>) {
    if i == w.crossings.len() {
        let all: Vec<Elem> = colours.iter().map(|c| c.expect("travel colours every arc")).collect();
        *out.entry(w.evaluate_longitude(g, &all, w.longitude.len())).or_insert(0) += 1;
        return;
    }
    let c = w.crossings[i];
    let over_choices: Vec<Elem> = match colours[c.over] {
        Some(o) => vec![o],
        None => g.elements().collect(),
    };
    let was_unset = colours[c.over].is_none();
    for o in over_choices {
        colours[c.over] = Some(o);
        let cur = colours[c.under_in].expect("arcs are coloured in travel order");
        let next = g.product(&[g.pow(o, -c.sign as i64), cur, g.pow(o, c.sign as i64)]);
        match colours[c.under_out] {
            Some(existing) if existing != next => continue,
            Some(_) => oracle_step(g, w, i + 1, colours, out),
            None => {
                colours[c.under_out] = Some(next);
                oracle_step(g, w, i + 1, colours, out);
                colours[c.under_out] = None;
            }
        }
    }
    if was_unset {
        colours[c.over] = None;
    }
}

/// Direct evaluation of the two trefoil counting formulas with `a = 1`:
/// for K₊ the count of `g` is the number of `h` with
/// `x³hg⁻¹x⁻¹gh⁻¹x⁻¹hg⁻¹x⁻¹g = 1` and `x²gh⁻¹x⁻¹hg⁻¹x⁻¹g = h`; for K₋ the
/// count of `h` is the number of `g` with
/// `x⁻³hg⁻¹xgh⁻¹xhg⁻¹xg = g` and `x⁻²gh⁻¹xhg⁻¹xg = 1`.
pub fn trefoil_closed_form(g: &FiniteGroup, x: Elem, positive: bool) -> BTreeMap<Elem, u64> {
    let xi = g.inv(x);
    let mut out = BTreeMap::new();
    for a in g.elements() {
        for b in g.elements() {
            let (ai, bi) = (g.inv(a), g.inv(b));
            if positive {
                let (gg, h, gi, hi) = (a, b, ai, bi);
                let top = g.product(&[x, x, x, h, gi, xi, gg, hi, xi, h, gi, xi, gg]);
                let c2 = g.product(&[x, x, gg, hi, xi, h, gi, xi, gg]);
                if top == g.identity() && c2 == h {
                    *out.entry(gg).or_insert(0) += 1;
                }
            } else {
                let (h, gg, hi, gi) = (a, b, ai, bi);
                let c1 = g.product(&[xi, xi, xi, h, gi, x, gg, hi, x, h, gi, x, gg]);
                let c2 = g.product(&[xi, xi, gg, hi, x, h, gi, x, gg]);
                if c1 == gg && c2 == g.identity() {
                    *out.entry(h).or_insert(0) += 1;
                }
            }
        }
    }
    out
}
