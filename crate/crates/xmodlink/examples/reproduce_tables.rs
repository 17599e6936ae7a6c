//! Recompute the three trefoil tables and compare every cell with the
//! published values.

use xmodlink::tables::{compute_table, TableId};

fn main() {
    let workers = std::env::args().nth(1).and_then(|w| w.parse().ok()).unwrap_or(0);
    for id in TableId::ALL {
        let t = compute_table(id, workers).expect("table computation");
        println!("{}", t.render());
    }
}
