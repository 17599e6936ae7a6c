//! Rack colourings of closed knots: the state sum of a rack pair counts them,
//! every term landing on the identity.

use std::sync::Arc;

use xmodlink::algebra::{cyclic_group, EnhancedWord};
use xmodlink::diagram::{closure, figure_eight_string, trefoil_plus_string};
use xmodlink::invariant::{rack_colouring_count, state_sum};
use xmodlink::pairs::pair_from_rack;
use xmodlink::xmod::dihedral_quandle;

fn main() {
    let r3 = dihedral_quandle(3);
    let pair = pair_from_rack(&r3, Arc::new(cyclic_group(3))).expect("sizes agree");
    let empty = EnhancedWord::empty();
    for (name, knot) in [("trefoil", trefoil_plus_string()), ("figure-eight", figure_eight_string())] {
        let closed = closure(&knot).expect("string knot");
        let count = rack_colouring_count(&closed, &r3, &[], Some(&[])).expect("closed diagram");
        let sum = state_sum(&closed, &pair, &empty, &empty).expect("closed diagram");
        println!("{name}: {count} colourings by R3, state sum {}", sum.to_group_algebra(pair.fiber()));
    }
}
