use super::{Generator, SlicedDiagram};

/// One crossing with the arcs playing each role.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingArcs {
    /// Slice index (0-based) and the position of the crossing's left top and
    /// left bottom strand within that slice.
    pub slice: usize,
    pub top_pos: usize,
    pub bottom_pos: usize,
    pub sign: i32,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

/// Partition of the strand segments of a diagram into arcs.
///
/// A point `(level, pos)` is the `pos`-th strand end on the boundary between
/// slice `level-1` and slice `level`. Arc ids are assigned in order of first
/// appearance scanning levels top to bottom, positions left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcIndex {
    point_arc: Vec<Vec<usize>>,
    crossings: Vec<CrossingArcs>,
    n_arcs: usize,
    crossing_count: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

impl ArcIndex {
    pub fn new(d: &SlicedDiagram) -> ArcIndex {
        let levels = d.levels();
        let mut offset = Vec::with_capacity(levels.len());
        let mut total = 0;
        for l in &levels {
            offset.push(total);
            total += l.len();
        }
        let pt = |level: usize, pos: usize| offset[level] + pos;
        let mut uf = UnionFind((0..total).collect());
        // (sign, slice, top_pos, bottom_pos, over, under_in, under_out) as points
        let mut raw = Vec::new();
        for (k, s) in d.slices().iter().enumerate() {
            let (mut tp, mut bp) = (0, 0);
            for &g in &s.pieces {
                match g {
                    Generator::IdDown | Generator::IdUp => uf.union(pt(k, tp), pt(k + 1, bp)),
                    Generator::CapLR | Generator::CapRL => uf.union(pt(k, tp), pt(k, tp + 1)),
                    Generator::CupLR | Generator::CupRL => uf.union(pt(k + 1, bp), pt(k + 1, bp + 1)),
                    Generator::XPlus => {
                        uf.union(pt(k, tp + 1), pt(k + 1, bp));
                        raw.push((1, k, tp, bp, pt(k, tp + 1), pt(k, tp), pt(k + 1, bp + 1)));
                    }
                    Generator::XMinus => {
                        uf.union(pt(k, tp), pt(k + 1, bp + 1));
                        raw.push((-1, k, tp, bp, pt(k, tp), pt(k, tp + 1), pt(k + 1, bp)));
                    }
                }
                tp += g.top().len();
                bp += g.bottom().len();
            }
        }
        let mut id_of_root = vec![usize::MAX; total];
        let mut n_arcs = 0;
        let mut point_arc = Vec::with_capacity(levels.len());
        for (level, l) in levels.iter().enumerate() {
            let mut row = Vec::with_capacity(l.len());
            for pos in 0..l.len() {
                let r = uf.find(pt(level, pos));
                if id_of_root[r] == usize::MAX {
                    id_of_root[r] = n_arcs;
                    n_arcs += 1;
                }
                row.push(id_of_root[r]);
            }
            point_arc.push(row);
        }
        let mut arc_at = |p: usize| id_of_root[uf.find(p)];
        let crossings: Vec<CrossingArcs> = raw
            .into_iter()
            .map(|(sign, slice, top_pos, bottom_pos, o, i, u)| CrossingArcs {
                slice,
                top_pos,
                bottom_pos,
                sign,
                over: arc_at(o),
                under_in: arc_at(i),
                under_out: arc_at(u),
            })
            .collect();
        let mut crossing_count = vec![0; n_arcs];
        for c in &crossings {
            for a in [c.over, c.under_in, c.under_out] {
                crossing_count[a] += 1;
            }
        }
        ArcIndex { point_arc, crossings, n_arcs, crossing_count }
    }

    pub fn n_arcs(&self) -> usize {
        self.n_arcs
    }

    pub fn arc_at(&self, level: usize, pos: usize) -> usize {
        self.point_arc[level][pos]
    }

    /// Arc ids of every point, per level.
    pub fn points(&self) -> &[Vec<usize>] {
        &self.point_arc
    }

    pub fn top_arcs(&self) -> &[usize] {
        &self.point_arc[0]
    }

    pub fn bottom_arcs(&self) -> &[usize] {
        self.point_arc.last().expect("a diagram has at least one level")
    }

    pub fn crossings(&self) -> &[CrossingArcs] {
        &self.crossings
    }

    /// Number of crossing roles the arc plays (an arc passing over and then
    /// under the same crossing is counted twice).
    pub fn crossing_degree(&self, arc: usize) -> usize {
        self.crossing_count[arc]
    }

    /// Arcs touching at least one crossing.
    pub fn crossing_arcs(&self) -> usize {
        self.crossing_count.iter().filter(|&&c| c > 0).count()
    }
}

pub fn arc_index(d: &SlicedDiagram) -> ArcIndex {
    ArcIndex::new(d)
}
