//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the verdict lines are always shown.
//! The process fails if any criterion fails, except for a failure that
//! matches a documented deviation exactly (criterion 2, see `gl25_tables`).

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use xmodlink::algebra::{
    cyclic_group, dihedral_group, gl_to_pgl, mat_det, parse_mat, pgl_elem, quaternion_group, symmetric_group, Elem,
    EnhancedWord, GroupRef, Sign,
};
use xmodlink::builtins::dihedral3_cocycles;
use xmodlink::diagram::{closure, figure_eight_string, move_fixtures, trefoil_minus_string, trefoil_plus_string, SlicedDiagram};
use xmodlink::invariant::{
    check_move_invariance_with, diagram_to_wirtinger, eisermann_oracle, matrix_to_tsv, rack_colouring_count, tqft_check,
    trefoil_closed_form, MoveCheckConfig, StateSum,
};
use xmodlink::pairs::{
    check_framed, check_unframed, eisermann_pair, lifted_eisermann_pair, pair_from_rack, pair_from_rack_cocycle,
    ReidemeisterPair,
};
use xmodlink::tables::{compute_table, Table, TableId};
use xmodlink::xmod::{cyclic_rack, dihedral_quandle, CentralExtension, Rack};

const WORKERS: usize = 8;

struct Verdict {
    pass: bool,
    detail: String,
    /// A failure that reproduces a documented deviation exactly.
    documented: bool,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Verdict {
        Verdict { pass, detail: detail.into(), documented: false }
    }
}

fn down(g: Elem) -> EnhancedWord {
    EnhancedWord::new(vec![(g, Sign::Plain)])
}

fn trefoils() -> [(SlicedDiagram, bool); 2] {
    [(trefoil_plus_string(), true), (trefoil_minus_string(), false)]
}

fn s5_table(tables: &mut BTreeMap<&'static str, Table>) -> Verdict {
    let start = Instant::now();
    let t = compute_table(TableId::EisermannS5, WORKERS).expect("S5 table");
    let secs = start.elapsed().as_secs_f64();
    let bad = t.mismatches().len();
    let v = Verdict::new(bad == 0 && secs < 30.0, format!("{}/14 cells exact, {secs:.1}s", 14 - bad));
    tables.insert("t1", t);
    v
}

fn gl25_tables(tables: &mut BTreeMap<&'static str, Table>) -> Verdict {
    let start = Instant::now();
    let t2 = compute_table(TableId::LiftedGl25, WORKERS).expect("lifted table");
    let t3 = compute_table(TableId::UnliftedPgl25, WORKERS).expect("unlifted table");
    let secs = start.elapsed().as_secs_f64();

    // The discriminating column x = class of diag(2,1).
    let cell = |t: &Table, row: &str, col: &str| {
        t.cells().find(|c| c.row == row && c.column == col).map(|c| c.computed.to_string()).unwrap_or_default()
    };
    let col = "~[[2,0],[0,1]]";
    let discriminates = cell(&t2, "K+", col) == "[[1,0],[0,1]] + 4·[[3,0],[0,2]]"
        && cell(&t2, "K-", col) == "[[1,0],[0,1]] + 4·[[2,0],[0,3]]"
        && cell(&t3, "K+", col) == cell(&t3, "K-", col);

    let bad: Vec<String> = t2
        .mismatches()
        .iter()
        .chain(t3.mismatches().iter())
        .map(|c| format!("{} x={}: computed {}, published {}", c.row, c.column, c.computed, c.expected))
        .collect();
    let pass = bad.is_empty() && discriminates && secs < 300.0;
    let mut detail = format!(
        "lifted {}/14, unlifted {}/14 cells exact, diag(2,1) column separates the trefoils only when lifted: {discriminates}, {secs:.1}s",
        14 - t2.mismatches().len(),
        14 - t3.mismatches().len()
    );
    for b in &bad {
        detail.push_str(&format!("\n      mismatch {b}"));
    }

    // Documented deviation: the published K- entry at x = class of [[3,0],[3,3]]
    // contains [[4,4],[4,0]], whose determinant is 4. Every lifted label is a
    // product of commutators and so has determinant 1; the computed label
    // [[4,0],[4,4]] does.
    let documented = !pass
        && discriminates
        && t3.mismatches().is_empty()
        && t2.mismatches().len() == 1
        && {
            let c = t2.mismatches()[0];
            c.row == "K-"
                && c.column == "~[[3,0],[3,3]]"
                && c.computed.to_string() == "[[1,0],[0,1]] + 5·[[4,0],[4,4]]"
                && c.expected.to_string() == "[[1,0],[0,1]] + 5·[[4,4],[4,0]]"
                && mat_det(&parse_mat("[[4,4],[4,0]]", 5).unwrap(), 5) == 4
                && t2.cells().all(|c| c.computed.terms().all(|(e, _)| mat_det(&parse_mat(c.computed.group().name_of(e), 5).unwrap(), 5) == 1))
        };
    if documented {
        detail.push_str("\n      (documented misprint: the published matrix has determinant 4, outside SL(2,5))");
    }
    tables.insert("t2", t2);
    tables.insert("t3", t3);
    Verdict { pass, detail, documented }
}

fn by_target(p: &ReidemeisterPair, d: &SlicedDiagram, workers: usize) -> BTreeMap<Elem, u64> {
    let m = StateSum::new(p, workers).matrix(d, &down(p.base().identity())).expect("state sum");
    m.into_iter().map(|(w, r)| (w.entries[0].0, r.total())).collect()
}

fn oracles() -> Verdict {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in [3, 4, 5] {
        let g = Arc::new(symmetric_group(n).unwrap());
        for x in g.elements() {
            let p = eisermann_pair(&g, x, false);
            for (d, positive) in trefoils() {
                let cf = trefoil_closed_form(&g, x, positive);
                let or = eisermann_oracle(&g, x, &d).expect("oracle");
                let ss = by_target(&p, &d, WORKERS);
                cases += 1;
                if cf != or || or != ss {
                    bad.push(format!("S{n} x={} K{}", g.name_of(x), if positive { "+" } else { "-" }));
                }
            }
        }
    }
    Verdict::new(bad.is_empty(), format!("{}/{cases} (group, x, trefoil) cases agree {}", cases - bad.len(), bad.join(" ")))
}

/// Every pair of criterion 4, tagged with whether it must pass the unframed axioms.
fn suite_pairs() -> Vec<(ReidemeisterPair, bool)> {
    let mut out = Vec::new();
    let groups: Vec<GroupRef> = vec![
        Arc::new(symmetric_group(3).unwrap()),
        Arc::new(symmetric_group(4).unwrap()),
        Arc::new(dihedral_group(4)),
        Arc::new(quaternion_group()),
    ];
    for g in &groups {
        for x in g.elements() {
            out.push((eisermann_pair(g, x, false), true));
        }
    }
    for n in 1..=6 {
        out.push((pair_from_rack(&dihedral_quandle(n), Arc::new(cyclic_group(n))).unwrap(), true));
    }
    for c in dihedral3_cocycles() {
        out.push((pair_from_rack_cocycle(&c, Arc::new(cyclic_group(3))).unwrap(), true));
    }
    for n in 1..=6 {
        let r: Rack = cyclic_rack(n);
        let quandle = r.is_quandle();
        out.push((pair_from_rack(&r, Arc::new(cyclic_group(n))).unwrap(), quandle));
    }
    out
}

fn axioms(pairs: &[(ReidemeisterPair, bool)]) -> Verdict {
    let mut bad = Vec::new();
    let mut checked = (0, 0);
    for (p, unframed) in pairs {
        if *unframed {
            checked.0 += 1;
            if !check_unframed(p, true).passed {
                bad.push(format!("{} unframed", p.name()));
            }
        }
        if !p.name().starts_with("eisermann") {
            checked.1 += 1;
            if !check_framed(p).0.passed {
                bad.push(format!("{} framed", p.name()));
            }
        }
    }
    let n_cocycles = dihedral3_cocycles().len();
    Verdict::new(
        bad.is_empty(),
        format!(
            "{} unframed and {} framed checks, {n_cocycles} quandle cocycles on R3, violations in: [{}]",
            checked.0,
            checked.1,
            bad.join(", ")
        ),
    )
}

fn moves(pairs: &[(ReidemeisterPair, bool)]) -> Verdict {
    let cfg = MoveCheckConfig { workers: WORKERS, ..MoveCheckConfig::default() };
    let fixtures = move_fixtures();
    let mut bad = Vec::new();
    let mut runs = 0;
    let mut sampled = 0;
    for (p, unframed) in pairs {
        for f in &fixtures {
            let o = check_move_invariance_with(p, f, &cfg).expect("fixture");
            runs += 1;
            sampled += usize::from(!o.exhaustive);
            let r1 = f.id == xmodlink::diagram::MoveId::R1;
            let expected_hold = *unframed || !r1;
            if o.holds != expected_hold || (!o.holds && o.counterexample.is_none()) {
                bad.push(format!("{} {}", p.name(), o.label));
            }
        }
    }
    Verdict::new(
        bad.is_empty(),
        format!(
            "{runs} (pair, fixture) checks over {} pairs, {sampled} sampled; cyclic racks fail only R1, with witnesses; unexpected: [{}]",
            pairs.len(),
            bad.join(", ")
        ),
    )
}

/// Independent count: colour the arcs of the closed knot (travel order, the
/// last arc glued to the first) and test each crossing directly.
fn brute_force_rack_count(knot: &SlicedDiagram, n: usize) -> u64 {
    let w = diagram_to_wirtinger(knot).unwrap();
    let k = w.arcs.len() - 1;
    let mut count = 0;
    for code in 0..n.pow(k as u32) {
        let mut c: Vec<usize> = (0..k).map(|i| code / n.pow(i as u32) % n).collect();
        c.push(c[0]);
        let ok = w.crossings.iter().all(|x| (2 * c[x.over] + n - c[x.under_in]) % n == c[x.under_out]);
        count += u64::from(ok);
    }
    count
}

fn rack_correspondence() -> Verdict {
    let r3 = dihedral_quandle(3);
    let pair = pair_from_rack(&r3, Arc::new(cyclic_group(3))).unwrap();
    let empty = EnhancedWord::empty();
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, knot, expected) in [("trefoil", trefoil_plus_string(), 9u64), ("figure-eight", figure_eight_string(), 3)] {
        let closed = closure(&knot).unwrap();
        let sum = StateSum::new(&pair, WORKERS).state_sum(&closed, &empty, &empty).unwrap();
        let rc = rack_colouring_count(&closed, &r3, &[], Some(&[])).unwrap();
        let bf = brute_force_rack_count(&knot, 3);
        let ok = sum.terms == BTreeMap::from([(pair.fiber().identity(), expected)]) && rc == expected && bf == expected;
        pass &= ok;
        parts.push(format!("{name}: state sum {} (0 is the identity of Z3), rack count {rc}, brute force {bf}", sum.to_group_algebra(pair.fiber())));
    }
    Verdict::new(pass, parts.join("; "))
}

fn lifting_projection() -> Verdict {
    let (_, pgl, proj) = gl_to_pgl(5).unwrap();
    let ext = CentralExtension::new(proj.clone()).unwrap();
    let xs = ["[[1,0],[0,1]]", "[[1,3],[4,4]]", "[[0,1],[1,0]]", "[[4,1],[4,0]]", "[[3,1],[4,4]]", "[[2,0],[0,1]]", "[[3,0],[3,3]]"];
    let knots = [trefoil_plus_string(), trefoil_minus_string(), figure_eight_string()];
    let mut entries = 0;
    let mut bad = Vec::new();
    for lit in xs {
        let x = pgl_elem(&pgl, 5, lit).unwrap();
        let lifted = lifted_eisermann_pair(&ext, x);
        let plain = eisermann_pair(&pgl, x, false);
        let (up, dn) = (StateSum::new(&lifted, WORKERS), StateSum::new(&plain, WORKERS));
        for (k, d) in knots.iter().enumerate() {
            for s in pgl.elements() {
                let a = up.matrix(d, &down(s)).unwrap();
                let b = dn.matrix(d, &down(s)).unwrap();
                let pushed: BTreeMap<EnhancedWord, BTreeMap<Elem, u64>> = a
                    .into_iter()
                    .map(|(w, r)| {
                        let mut t = BTreeMap::new();
                        for (e, m) in r.terms {
                            *t.entry(proj.apply(e)).or_insert(0) += m;
                        }
                        (w, t)
                    })
                    .collect();
                let plain_terms: BTreeMap<EnhancedWord, BTreeMap<Elem, u64>> = b.into_iter().map(|(w, r)| (w, r.terms)).collect();
                entries += plain_terms.len();
                if pushed != plain_terms {
                    bad.push(format!("x={lit} knot {k} top {}", pgl.name_of(s)));
                }
            }
        }
    }
    Verdict::new(bad.is_empty(), format!("{entries} matrix entries over 7 x-classes and 3 knots, mismatches: [{}]", bad.join(", ")))
}

fn gluing() -> Verdict {
    let g = Arc::new(symmetric_group(3).unwrap());
    let mut checks = 0;
    let mut bad = 0;
    for x in g.elements() {
        let p = eisermann_pair(&g, x, false);
        for (d, _) in trefoils() {
            for k in [1, 2, 3] {
                let (a, b) = d.split_at(k).unwrap();
                for t in g.elements() {
                    for u in g.elements() {
                        checks += 1;
                        bad += usize::from(!tqft_check(&a, &b, &p, &down(t), &down(u)).unwrap());
                    }
                }
            }
        }
    }
    Verdict::new(bad == 0, format!("{checks} gluings (3 cuts x 2 trefoils x 6 x x 36 boundaries), {bad} failures"))
}

fn determinism(tables: &BTreeMap<&'static str, Table>) -> Verdict {
    let mut same = Vec::new();
    for (key, id) in [("t1", TableId::EisermannS5), ("t2", TableId::LiftedGl25), ("t3", TableId::UnliftedPgl25)] {
        let single = compute_table(id, 1).unwrap().to_tsv();
        same.push((key.to_owned(), single == tables[key].to_tsv()));
    }
    for n in [3, 4, 5] {
        let g = Arc::new(symmetric_group(n).unwrap());
        let mut ok = true;
        for x in g.elements() {
            let p = eisermann_pair(&g, x, false);
            for (d, _) in trefoils() {
                let one = matrix_to_tsv(&StateSum::new(&p, 1).matrix(&d, &down(g.identity())).unwrap(), &g, &g);
                let eight = matrix_to_tsv(&StateSum::new(&p, 8).matrix(&d, &down(g.identity())).unwrap(), &g, &g);
                ok &= one == eight;
            }
        }
        same.push((format!("S{n} state sums"), ok));
    }
    let pass = same.iter().all(|s| s.1);
    let detail = same.iter().map(|(k, ok)| format!("{k}: {}", if *ok { "identical" } else { "DIFFERENT" })).collect::<Vec<_>>().join(", ");
    Verdict::new(pass, format!("1 vs 8 workers: {detail}"))
}

fn main() {
    let mut tables = BTreeMap::new();
    let pairs = suite_pairs();
    type Run<'a> = Box<dyn FnOnce(&mut BTreeMap<&'static str, Table>) -> Verdict + 'a>;
    let criteria: Vec<(&str, Run)> = vec![
        ("1 Eisermann table over S5", Box::new(s5_table)),
        ("2 lifted GL(2,5) and unlifted PGL(2,5) tables", Box::new(gl25_tables)),
        ("3 closed form = Wirtinger oracle = state sum", Box::new(|_| oracles())),
        ("4 axiom suites", Box::new(|_| axioms(&pairs))),
        ("5 move invariance", Box::new(|_| moves(&pairs))),
        ("6 rack correspondence", Box::new(|_| rack_correspondence())),
        ("7 lifting projection", Box::new(|_| lifting_projection())),
        ("8 gluing (TQFT) property", Box::new(|_| gluing())),
        ("9 worker-count determinism", Box::new(|t: &mut BTreeMap<&'static str, Table>| determinism(t))),
    ];
    let mut unexpected = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let v = run(&mut tables);
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {name} [{:.1}s]: {}", start.elapsed().as_secs_f64(), v.detail);
        if !v.pass && !v.documented {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
