//! Evaluate ⟨1 | I(K) | g⟩ for both string trefoils with the Eisermann pair
//! on S5 at x = (12345): the invariant separates the trefoil from its mirror.

use std::sync::Arc;

use xmodlink::algebra::{symmetric_group, EnhancedWord};
use xmodlink::diagram::{trefoil_minus_string, trefoil_plus_string};
use xmodlink::invariant::{matrix_to_tsv, summed_labels, StateSum};
use xmodlink::pairs::eisermann_pair;

fn main() {
    let s5 = Arc::new(symmetric_group(5).expect("S5"));
    let x = s5.lookup("(12345)").expect("5-cycle");
    let pair = eisermann_pair(&s5, x, false);
    let engine = StateSum::new(&pair, 0);
    let top = EnhancedWord::parse(&s5, "id").expect("word");
    for (name, d) in [("K+", trefoil_plus_string()), ("K-", trefoil_minus_string())] {
        let row = engine.matrix(&d, &top).expect("state sum");
        println!("{name}: {}", summed_labels(&s5, row.values()));
        println!("{}", matrix_to_tsv(&row, &s5, &s5));
    }
}
