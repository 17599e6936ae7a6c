//! Three independent computations of the Eisermann polynomial of the trefoils:
//! the closed-form count, the Wirtinger oracle and the state sum.

use std::collections::BTreeMap;
use std::sync::Arc;

use xmodlink::algebra::{symmetric_group, EnhancedWord, Sign};
use xmodlink::diagram::{trefoil_minus_string, trefoil_plus_string};
use xmodlink::invariant::{diagram_to_wirtinger, eisermann_oracle, invariant_matrix, trefoil_closed_form};
use xmodlink::pairs::eisermann_pair;

fn main() {
    let s4 = Arc::new(symmetric_group(4).expect("S4"));
    let w = diagram_to_wirtinger(&trefoil_plus_string()).expect("string knot");
    println!("trefoil: {} arcs, {} crossings, longitude {:?}", w.arcs.len(), w.crossings.len(), w.longitude);
    let mut agree = 0;
    for x in s4.elements() {
        let pair = eisermann_pair(&s4, x, false);
        for (d, positive) in [(trefoil_plus_string(), true), (trefoil_minus_string(), false)] {
            let closed = trefoil_closed_form(&s4, x, positive);
            let oracle = eisermann_oracle(&s4, x, &d).expect("string knot");
            let top = EnhancedWord::new(vec![(s4.identity(), Sign::Plain)]);
            let sum: BTreeMap<_, _> = invariant_matrix(&d, &pair, &top)
                .expect("state sum")
                .into_iter()
                .map(|(bottom, r)| (bottom.entries[0].0, r.total()))
                .collect();
            if closed == oracle && oracle == sum {
                agree += 1;
            } else {
                println!("disagreement at x = {}", s4.name_of(x));
            }
        }
    }
    println!("{agree} of {} (x, trefoil) cases agree", 2 * s4.order());
}
