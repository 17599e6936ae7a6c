use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::state_sum::{InvariantResult, StateSum};
use super::InvariantError;
use crate::algebra::{Elem, EnhancedWord, FiniteGroup};
use crate::diagram::{MoveFixture, MoveId, Orientation};
use crate::pairs::ReidemeisterPair;
use crate::par::map_indexed;

/// Thresholds for boundary enumeration in invariance checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveCheckConfig {
    /// Enumerate every top word when `|G|^width` is at most this.
    pub exhaustive_limit: u64,
    /// Otherwise check this many uniformly random top words.
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
}

impl Default for MoveCheckConfig {
    fn default() -> Self {
        MoveCheckConfig { exhaustive_limit: 1_000_000, samples: 10_000, seed: 0x5eed, workers: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveCounterexample {
    pub top: EnhancedWord,
    /// First bottom word (in word order) where the two sides differ.
    pub bottom: EnhancedWord,
    pub lhs: Option<InvariantResult>,
    pub rhs: Option<InvariantResult>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOutcome {
    pub id: MoveId,
    pub label: String,
    pub holds: bool,
    pub boundaries_checked: usize,
    pub exhaustive: bool,
    pub counterexample: Option<MoveCounterexample>,
}

fn word_from_index(mut k: u64, n: u64, sig: &[Orientation]) -> EnhancedWord {
    let mut entries = vec![(Elem::new(0), crate::algebra::Sign::Plain); sig.len()];
    for p in (0..sig.len()).rev() {
        entries[p] = (Elem::new((k % n) as usize), sig[p].sign());
        k /= n;
    }
    EnhancedWord::new(entries)
}

fn first_difference(
    top: &EnhancedWord,
    l: &BTreeMap<EnhancedWord, InvariantResult>,
    r: &BTreeMap<EnhancedWord, InvariantResult>,
) -> Option<MoveCounterexample> {
    let keys: std::collections::BTreeSet<&EnhancedWord> = l.keys().chain(r.keys()).collect();
    keys.into_iter().find(|k| l.get(*k) != r.get(*k)).map(|k| MoveCounterexample {
        top: top.clone(),
        bottom: k.clone(),
        lhs: l.get(k).cloned(),
        rhs: r.get(k).cloned(),
    })
}

/// Compare the invariant matrices of both sides over all top boundary words,
/// or over a random sample of them when the space is too large.
pub fn check_move_invariance_with(
    pair: &ReidemeisterPair,
    fixture: &MoveFixture,
    cfg: &MoveCheckConfig,
) -> Result<MoveOutcome, InvariantError> {
    let engine = StateSum::new(pair, 1);
    let n = pair.base().order() as u64;
    let sig = fixture.lhs.top();
    let space = (n as f64).powi(sig.len() as i32);
    let exhaustive = space <= cfg.exhaustive_limit as f64;
    let tops: Vec<u64> = if exhaustive {
        (0..n.pow(sig.len() as u32)).collect()
    } else {
        let mut rng = StdRng::seed_from_u64(cfg.seed);
        let total = n.pow(sig.len() as u32);
        (0..cfg.samples).map(|_| rng.gen_range(0..total)).collect()
    };
    let results = map_indexed(tops.len(), cfg.workers, |k| -> Result<Option<MoveCounterexample>, InvariantError> {
        let top = word_from_index(tops[k], n, sig);
        let l = engine.matrix(&fixture.lhs, &top)?;
        let r = engine.matrix(&fixture.rhs, &top)?;
        Ok(first_difference(&top, &l, &r))
    });
    let mut counterexample = None;
    for r in results {
        if let Some(c) = r? {
            counterexample = Some(c);
            break;
        }
    }
    Ok(MoveOutcome {
        id: fixture.id,
        label: fixture.label.clone(),
        holds: counterexample.is_none(),
        boundaries_checked: tops.len(),
        exhaustive,
        counterexample,
    })
}

pub fn check_move_invariance(pair: &ReidemeisterPair, fixture: &MoveFixture) -> Result<MoveOutcome, InvariantError> {
    check_move_invariance_with(pair, fixture, &MoveCheckConfig::default())
}

/// One-paragraph verdict over a full set of outcomes, e.g.
/// `R1 FAILED (witness X=0), 13/15 hold; framed set 15/15`.
pub fn summarize_moves(outcomes: &[MoveOutcome], g: &FiniteGroup) -> String {
    let tally = |keep: fn(MoveId) -> bool| {
        let set: Vec<&MoveOutcome> = outcomes.iter().filter(|o| keep(o.id)).collect();
        (set.iter().filter(|o| o.holds).count(), set.len())
    };
    let (u_ok, u_all) = tally(MoveId::in_unframed_set);
    let (f_ok, f_all) = tally(MoveId::in_framed_set);
    let mut failed: Vec<String> = Vec::new();
    for o in outcomes.iter().filter(|o| !o.holds) {
        if failed.iter().any(|f| f.starts_with(&format!("{} ", o.id))) {
            continue;
        }
        let witness = o
            .counterexample
            .as_ref()
            .map(|c| c.top.entries.iter().map(|&(e, _)| g.name_of(e).to_owned()).collect::<Vec<_>>().join(","))
            .unwrap_or_default();
        let var = if o.counterexample.as_ref().map_or(0, |c| c.top.len()) == 1 { "X" } else { "top" };
        failed.push(format!("{} FAILED (witness {var}={witness})", o.id));
    }
    let extra: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.id.in_unframed_set() && !o.id.in_framed_set())
        .map(|o| format!("{} {}", o.label, if o.holds { "ok" } else { "FAILED" }))
        .collect();
    let mut head = if failed.is_empty() {
        format!("{u_ok}/{u_all} relations hold")
    } else {
        format!("{}, {u_ok}/{u_all} hold", failed.join(", "))
    };
    head.push_str(&format!("; framed set {f_ok}/{f_all}"));
    if !extra.is_empty() {
        head.push_str(&format!("; {}", extra.join(", ")));
    }
    head
}
