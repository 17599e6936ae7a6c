//! Build the standard Reidemeister pairs and run the axiom checkers on them:
//! Eisermann pairs, rack pairs, a cocycle pair and a lifted pair.

use std::sync::Arc;

use xmodlink::algebra::{cyclic_group, quaternion_group};
use xmodlink::builtins;
use xmodlink::pairs::{check_framed, check_unframed, eisermann_pair, pair_from_rack};
use xmodlink::xmod::{cyclic_rack, dihedral_quandle};

fn main() {
    let q8 = Arc::new(quaternion_group());
    for x in q8.elements() {
        let p = eisermann_pair(&q8, x, false);
        println!("{:<28} unframed: {}", p.name(), check_unframed(&p, true).passed);
    }

    for n in 3..=6 {
        let p = pair_from_rack(&dihedral_quandle(n), Arc::new(cyclic_group(n))).expect("sizes agree");
        println!("{:<28} unframed: {}", p.name(), check_unframed(&p, false).passed);
    }

    // The cyclic rack is not a quandle: R1 fails, but the pair is framed.
    let p = pair_from_rack(&cyclic_rack(4), Arc::new(cyclic_group(4))).expect("sizes agree");
    let report = check_unframed(&p, false);
    print!("{}\n{}", p.name(), report.render(p.base()));
    let (framed, structure) = check_framed(&p);
    println!("framed: {}, f = {:?}", framed.passed, structure.map(|s| s.f));

    for key in ["cocycle:dihedral:3:4", "lifted:gl25:x=[[2,0],[0,1]]"] {
        let p = builtins::pair(key).expect("built-in key");
        println!("{key}: unframed {}", check_unframed(&p, false).passed);
    }
}
