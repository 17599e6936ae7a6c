//! Check every move fixture against a quandle pair and a (non-quandle) rack
//! pair; the latter shows the framing sensitivity of R1.

use std::sync::Arc;

use xmodlink::algebra::cyclic_group;
use xmodlink::diagram::move_fixtures;
use xmodlink::invariant::{check_move_invariance, summarize_moves};
use xmodlink::pairs::pair_from_rack;
use xmodlink::xmod::{cyclic_rack, dihedral_quandle};

fn main() {
    for rack in [dihedral_quandle(3), cyclic_rack(3)] {
        let pair = pair_from_rack(&rack, Arc::new(cyclic_group(3))).expect("sizes agree");
        let outcomes: Vec<_> = move_fixtures()
            .iter()
            .map(|f| check_move_invariance(&pair, f).expect("fixture signatures match"))
            .collect();
        for o in outcomes.iter().filter(|o| !o.holds) {
            let c = o.counterexample.as_ref().expect("failures carry a counterexample");
            println!("  {} differs at top {}", o.label, c.top.display(pair.base()));
        }
        println!("{}: {}", pair.name(), summarize_moves(&outcomes, pair.base()));
    }
}
