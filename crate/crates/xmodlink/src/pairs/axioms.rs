use std::fmt;

use super::ReidemeisterPair;
use crate::algebra::{Elem, FiniteGroup};
use crate::par::map_indexed;

/// At most this many witnesses are kept in a report.
pub const MAX_WITNESSES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    R1,
    R2,
    R3,
    R3Prime,
    F1,
    F2,
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomId::R1 => "R1",
            AxiomId::R2 => "R2",
            AxiomId::R3 => "R3",
            AxiomId::R3Prime => "R3'",
            AxiomId::F1 => "F1",
            AxiomId::F2 => "F2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: Vec<Elem>,
}

/// Outcome of an axiom check. Violations are sorted and truncated to
/// [`MAX_WITNESSES`]; `counts` keeps the untruncated totals per axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub counts: Vec<(AxiomId, usize)>,
    /// When both forms of R3 were checked and R2 holds: whether the two forms
    /// agree (they must, by the equivalence under R2).
    pub r3_forms_agree: Option<bool>,
}

impl AxiomReport {
    fn from_parts(parts: Vec<(AxiomId, usize, Vec<Violation>)>) -> AxiomReport {
        let mut violations: Vec<Violation> = parts.iter().flat_map(|p| p.2.iter().cloned()).collect();
        violations.sort();
        violations.truncate(MAX_WITNESSES);
        let counts: Vec<(AxiomId, usize)> = parts.iter().map(|p| (p.0, p.1)).collect();
        let passed = counts.iter().all(|c| c.1 == 0);
        AxiomReport { passed, violations, counts, r3_forms_agree: None }
    }

    pub fn count(&self, axiom: AxiomId) -> usize {
        self.counts.iter().filter(|c| c.0 == axiom).map(|c| c.1).sum()
    }

    pub fn first(&self, axiom: AxiomId) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Human-readable multi-line rendering with element names.
    pub fn render(&self, g: &FiniteGroup) -> String {
        let mut out = String::new();
        for (axiom, n) in &self.counts {
            let status = if *n == 0 { "ok".to_owned() } else { format!("FAILED ({n} violations)") };
            out.push_str(&format!("{axiom}: {status}\n"));
        }
        for v in &self.violations {
            let names: Vec<&str> = v.witness.iter().map(|&e| g.name_of(e)).collect();
            out.push_str(&format!("  {} witness ({})\n", v.axiom, names.join(", ")));
        }
        if let Some(agree) = self.r3_forms_agree {
            out.push_str(&format!("R3 and R3' agree: {agree}\n"));
        }
        out.push_str(if self.passed { "passed\n" } else { "FAILED\n" });
        out
    }
}

/// The two mutually inverse maps of a framed pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedStructure {
    pub f: Vec<Elem>,
    pub g: Vec<Elem>,
}

type Part = (AxiomId, usize, Vec<Violation>);

fn collect<F>(axiom: AxiomId, n: usize, workers: usize, f: F) -> Part
where
    F: Fn(usize, &mut dyn FnMut(Vec<Elem>)) + Sync,
{
    let per_x = map_indexed(n, workers, |i| {
        let mut count = 0usize;
        let mut kept = Vec::new();
        f(i, &mut |w| {
            count += 1;
            if kept.len() < MAX_WITNESSES {
                kept.push(Violation { axiom, witness: w });
            }
        });
        (count, kept)
    });
    let total = per_x.iter().map(|p| p.0).sum();
    (axiom, total, per_x.into_iter().flat_map(|p| p.1).collect())
}

fn check_r1(p: &ReidemeisterPair) -> Part {
    let one = p.fiber().identity();
    collect(AxiomId::R1, p.base().order(), 1, |x, push| {
        let x = Elem::new(x);
        if p.psi(x, x) != one {
            push(vec![x]);
        }
    })
}

fn check_r2(p: &ReidemeisterPair, workers: usize) -> Part {
    let e = p.fiber();
    let g = p.base();
    collect(AxiomId::R2, g.order(), workers, |x, push| {
        let x = Elem::new(x);
        for y in g.elements() {
            let z = p.zphi(x, y);
            if e.mul(p.phi(x, y), p.psi(x, z)) != e.identity() {
                push(vec![x, y]);
            }
        }
    })
}

/// `φ(Y,X)·(Y▷φ(T,Z))·φ(T,Y) = (X▷φ(T,Y))·φ(T,X)·(T▷φ(V,W))` with
/// `Z = zphi(Y,X)`, `V = zphi(T,Y)`, `W = zphi(T,X)`.
pub fn r3_holds(p: &ReidemeisterPair, x: Elem, y: Elem, t: Elem) -> bool {
    let (e, xm) = (p.fiber(), p.xmod());
    let z = p.zphi(y, x);
    let v = p.zphi(t, y);
    let w = p.zphi(t, x);
    let lhs = e.product(&[p.phi(y, x), xm.act(y, p.phi(t, z)), p.phi(t, y)]);
    let rhs = e.product(&[xm.act(x, p.phi(t, y)), p.phi(t, x), xm.act(t, p.phi(v, w))]);
    lhs == rhs
}

/// `ψ(X,Y)·(A▷ψ(X,Z))·ψ(A,B) = (X▷ψ(Y,Z))·ψ(X,C)·(D▷ψ(X,Y))` with
/// `A = zpsi(X,Y)`, `B = zpsi(X,Z)`, `C = zpsi(Y,Z)`, `D = zpsi(X,C)`.
pub fn r3_prime_holds(p: &ReidemeisterPair, x: Elem, y: Elem, z: Elem) -> bool {
    let (e, xm) = (p.fiber(), p.xmod());
    let a = p.zpsi(x, y);
    let b = p.zpsi(x, z);
    let c = p.zpsi(y, z);
    let d = p.zpsi(x, c);
    let lhs = e.product(&[p.psi(x, y), xm.act(a, p.psi(x, z)), p.psi(a, b)]);
    let rhs = e.product(&[xm.act(x, p.psi(y, z)), p.psi(x, c), xm.act(d, p.psi(x, y))]);
    lhs == rhs
}

fn check_triples(p: &ReidemeisterPair, axiom: AxiomId, workers: usize, holds: fn(&ReidemeisterPair, Elem, Elem, Elem) -> bool) -> Part {
    let g = p.base();
    collect(axiom, g.order(), workers, |x, push| {
        let x = Elem::new(x);
        for y in g.elements() {
            for t in g.elements() {
                if !holds(p, x, y, t) {
                    push(vec![x, y, t]);
                }
            }
        }
    })
}

/// Exhaustive check of R1, R2, R3 (and R3′ on request). Uses all cores.
pub fn check_unframed(p: &ReidemeisterPair, also_r3prime: bool) -> AxiomReport {
    check_unframed_with(p, also_r3prime, 0)
}

pub fn check_unframed_with(p: &ReidemeisterPair, also_r3prime: bool, workers: usize) -> AxiomReport {
    let mut parts = vec![check_r1(p), check_r2(p, workers), check_triples(p, AxiomId::R3, workers, r3_holds)];
    let mut agree = None;
    if also_r3prime {
        let r3p = check_triples(p, AxiomId::R3Prime, workers, r3_prime_holds);
        if parts[1].1 == 0 {
            agree = Some((parts[2].1 == 0) == (r3p.1 == 0));
        }
        parts.push(r3p);
    }
    let mut report = AxiomReport::from_parts(parts);
    report.r3_forms_agree = agree;
    if agree == Some(false) {
        report.passed = false;
    }
    report
}

/// R2, R3 and the two framing conditions: unique `A` with `∂(φ(A,Z))·A = Z`
/// defines `f(Z)`, and `f` must be inverse to `g(A) = ∂ψ(A,A)⁻¹ A`.
pub fn check_framed(p: &ReidemeisterPair) -> (AxiomReport, Option<FramedStructure>) {
    let g = p.base();
    let xm = p.xmod();
    let r2 = check_r2(p, 0);
    let r3 = check_triples(p, AxiomId::R3, 0, r3_holds);

    let mut f_map = vec![None; g.order()];
    let mut f1 = (AxiomId::F1, 0usize, Vec::new());
    for z in g.elements() {
        let sols: Vec<Elem> = g.elements().filter(|&a| g.mul(xm.bd(p.phi(a, z)), a) == z).collect();
        if sols.len() == 1 {
            f_map[z.index()] = Some(sols[0]);
        } else {
            f1.1 += 1;
            if f1.2.len() < MAX_WITNESSES {
                f1.2.push(Violation { axiom: AxiomId::F1, witness: std::iter::once(z).chain(sols).collect() });
            }
        }
    }
    let g_map: Vec<Elem> = g.elements().map(|a| g.mul(g.inv(xm.bd(p.psi(a, a))), a)).collect();
    let mut f2 = (AxiomId::F2, 0usize, Vec::new());
    if f1.1 == 0 {
        let f_map: Vec<Elem> = f_map.iter().map(|x| x.unwrap()).collect();
        for a in g.elements() {
            if f_map[g_map[a.index()].index()] != a || g_map[f_map[a.index()].index()] != a {
                f2.1 += 1;
                if f2.2.len() < MAX_WITNESSES {
                    f2.2.push(Violation { axiom: AxiomId::F2, witness: vec![a] });
                }
            }
        }
    }
    let report = AxiomReport::from_parts(vec![r2, r3, f1, f2]);
    let structure = report.passed.then(|| FramedStructure { f: f_map.into_iter().map(|x| x.unwrap()).collect(), g: g_map });
    (report, structure)
}

/// Unframed pair whose boundary reproduces the Eisermann crossing data:
/// `∂φ(L,M) = [Mx⁻¹, Lx⁻¹]` and `∂ψ(L,M) = [L,M][ML⁻¹,x]`.
pub fn is_eisermann_lifting(p: &ReidemeisterPair, x: Elem) -> bool {
    let g = p.base();
    let xi = g.inv(x);
    let xm = p.xmod();
    let boundary_ok = g.elements().all(|l| {
        g.elements().all(|m| {
            let phi_ok = xm.bd(p.phi(l, m)) == g.commutator(g.mul(m, xi), g.mul(l, xi));
            let psi_ok = xm.bd(p.psi(l, m)) == g.mul(g.commutator(l, m), g.commutator(g.mul(m, g.inv(l)), x));
            phi_ok && psi_ok
        })
    });
    boundary_ok && check_unframed(p, false).passed
}
