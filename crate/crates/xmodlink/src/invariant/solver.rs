//! Backtracking over arc variables with crossing constraints.

use crate::algebra::Elem;
use crate::diagram::ArcIndex;
use crate::pairs::ReidemeisterPair;
use crate::par::map_indexed;
use crate::xmod::Rack;

const UNSET: u32 = u32::MAX;

/// Crossing rules `under_in = Z_s(over, under_out)` for the two crossing signs,
/// with the inverse multimaps used for propagation in other directions.
pub(crate) struct CrossingRules {
    n: usize,
    /// `fwd[s][o*n + u]` = under-in colour (s = 0: positive, 1: negative).
    fwd: [Vec<u32>; 2],
    /// `(o, i) ↦ {u}`
    by_over_in: [Vec<Vec<u32>>; 2],
    /// `(u, i) ↦ {o}`
    by_out_in: [Vec<Vec<u32>>; 2],
}

impl CrossingRules {
    fn from_fn(n: usize, z: impl Fn(usize, usize, usize) -> usize) -> CrossingRules {
        let mut fwd = [vec![0u32; n * n], vec![0u32; n * n]];
        let mut by_over_in = [vec![Vec::new(); n * n], vec![Vec::new(); n * n]];
        let mut by_out_in = [vec![Vec::new(); n * n], vec![Vec::new(); n * n]];
        for s in 0..2 {
            for o in 0..n {
                for u in 0..n {
                    let i = z(s, o, u);
                    fwd[s][o * n + u] = i as u32;
                    by_over_in[s][o * n + i].push(u as u32);
                    by_out_in[s][u * n + i].push(o as u32);
                }
            }
        }
        CrossingRules { n, fwd, by_over_in, by_out_in }
    }

    pub(crate) fn from_pair(p: &ReidemeisterPair) -> CrossingRules {
        CrossingRules::from_fn(p.base().order(), |s, o, u| {
            let (o, u) = (Elem::new(o), Elem::new(u));
            if s == 0 { p.zpsi(o, u) } else { p.zphi(o, u) }.index()
        })
    }

    /// Rack rules: positive crossings `under_in = over ▷ under_out`,
    /// negative crossings `under_in = under_out ◁ over`.
    pub(crate) fn from_rack(r: &Rack) -> CrossingRules {
        CrossingRules::from_fn(r.size(), |s, o, u| if s == 0 { r.tri_right(o, u) } else { r.tri_left(u, o) })
    }

    pub(crate) fn size(&self) -> usize {
        self.n
    }
}

#[derive(Clone, Copy)]
struct Constraint {
    s: usize,
    o: usize,
    i: usize,
    u: usize,
}

/// A colouring problem: arcs with some colours fixed by the boundary.
pub(crate) struct Problem<'a> {
    rules: &'a CrossingRules,
    constraints: Vec<Constraint>,
    /// constraint ids touching each arc
    touching: Vec<Vec<usize>>,
    degree: Vec<usize>,
    start: Vec<u32>,
    feasible: bool,
}

impl<'a> Problem<'a> {
    /// `fixed` lists `(arc, colour)` pairs; contradictory pairs make the problem infeasible.
    pub(crate) fn new(arcs: &ArcIndex, rules: &'a CrossingRules, fixed: &[(usize, usize)]) -> Problem<'a> {
        let n_arcs = arcs.n_arcs();
        let constraints: Vec<Constraint> = arcs
            .crossings()
            .iter()
            .map(|c| Constraint { s: if c.sign > 0 { 0 } else { 1 }, o: c.over, i: c.under_in, u: c.under_out })
            .collect();
        let mut touching = vec![Vec::new(); n_arcs];
        for (k, c) in constraints.iter().enumerate() {
            for a in [c.o, c.i, c.u] {
                if !touching[a].contains(&k) {
                    touching[a].push(k);
                }
            }
        }
        let degree = (0..n_arcs).map(|a| arcs.crossing_degree(a)).collect();
        let mut start = vec![UNSET; n_arcs];
        let mut feasible = true;
        for &(a, c) in fixed {
            if start[a] != UNSET && start[a] != c as u32 {
                feasible = false;
            }
            start[a] = c as u32;
        }
        let mut p = Problem { rules, constraints, touching, degree, start, feasible };
        if p.feasible {
            p.feasible = (0..p.constraints.len()).all(|k| p.satisfied(&p.start, k));
        }
        p
    }

    /// True unless the constraint is fully assigned and violated.
    fn satisfied(&self, asg: &[u32], k: usize) -> bool {
        let c = self.constraints[k];
        let (o, i, u) = (asg[c.o], asg[c.i], asg[c.u]);
        if o == UNSET || i == UNSET || u == UNSET {
            return true;
        }
        self.rules.fwd[c.s][o as usize * self.rules.n + u as usize] == i
    }

    /// Candidate colours for `arc` implied by a single constraint whose other
    /// arcs are assigned, or `None` if no constraint pins it down.
    fn implied(&self, asg: &[u32], arc: usize) -> Option<Vec<u32>> {
        let n = self.rules.n;
        let mut best: Option<Vec<u32>> = None;
        for &k in &self.touching[arc] {
            let c = self.constraints[k];
            let roles = [c.o == arc, c.i == arc, c.u == arc];
            if roles.iter().filter(|&&r| r).count() != 1 {
                continue; // arc plays several roles here; checked after assignment
            }
            let cand: Vec<u32> = if roles[1] {
                let (o, u) = (asg[c.o], asg[c.u]);
                if o == UNSET || u == UNSET {
                    continue;
                }
                vec![self.rules.fwd[c.s][o as usize * n + u as usize]]
            } else if roles[2] {
                let (o, i) = (asg[c.o], asg[c.i]);
                if o == UNSET || i == UNSET {
                    continue;
                }
                self.rules.by_over_in[c.s][o as usize * n + i as usize].clone()
            } else {
                let (u, i) = (asg[c.u], asg[c.i]);
                if u == UNSET || i == UNSET {
                    continue;
                }
                self.rules.by_out_in[c.s][u as usize * n + i as usize].clone()
            };
            if best.as_ref().is_none_or(|b| cand.len() < b.len()) {
                best = Some(cand);
            }
        }
        best
    }

    /// Most constrained unassigned arc: fewest implied candidates, then most
    /// crossing roles, then lowest id. `None` when everything is assigned.
    fn choose(&self, asg: &[u32]) -> Option<(usize, Vec<u32>)> {
        let mut best: Option<(usize, usize, Option<Vec<u32>>)> = None;
        for a in 0..asg.len() {
            if asg[a] != UNSET {
                continue;
            }
            let imp = self.implied(asg, a);
            let size = imp.as_ref().map_or(self.rules.n, Vec::len);
            let better = match &best {
                None => true,
                Some((b, bsize, _)) => size < *bsize || (size == *bsize && self.degree[a] > self.degree[*b]),
            };
            if better {
                let done = size == 0;
                best = Some((a, size, imp));
                if done {
                    break;
                }
            }
        }
        best.map(|(a, _, imp)| (a, imp.unwrap_or_else(|| (0..self.rules.n as u32).collect())))
    }

    fn assign_ok(&self, asg: &[u32], arc: usize) -> bool {
        self.touching[arc].iter().all(|&k| self.satisfied(asg, k))
    }

    fn search(&self, asg: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        match self.choose(asg) {
            None => visit(asg),
            Some((arc, cands)) => {
                for c in cands {
                    asg[arc] = c;
                    if self.assign_ok(asg, arc) {
                        self.search(asg, visit);
                    }
                }
                asg[arc] = UNSET;
            }
        }
    }

    /// Fold every solution into per-branch accumulators. The domain of the
    /// first branching variable is split across `workers`; accumulators come
    /// back in branch order, so merging them in order is worker-independent.
    pub(crate) fn fold<A, I, F>(&self, workers: usize, init: I, step: F) -> Vec<A>
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(&mut A, &[u32]) + Sync,
    {
        if !self.feasible {
            return Vec::new();
        }
        let root = self.start.clone();
        let Some((arc, cands)) = self.choose(&root) else {
            let mut acc = init();
            step(&mut acc, &root);
            return vec![acc];
        };
        map_indexed(cands.len(), workers, |k| {
            let mut acc = init();
            let mut asg = root.clone();
            asg[arc] = cands[k];
            if self.assign_ok(&asg, arc) {
                self.search(&mut asg, &mut |sol| step(&mut acc, sol));
            }
            acc
        })
    }

    pub(crate) fn solutions(&self, workers: usize) -> Vec<Vec<u32>> {
        self.fold(workers, Vec::new, |acc: &mut Vec<Vec<u32>>, s| acc.push(s.to_vec())).into_iter().flatten().collect()
    }

    pub(crate) fn count(&self, workers: usize) -> u64 {
        self.fold(workers, || 0u64, |acc, _| *acc += 1).into_iter().sum()
    }
}
