//! The gluing (TQFT) property: cutting a diagram in two and summing over the
//! middle boundary enhancements reproduces the state sum of the whole.

use std::sync::Arc;

use xmodlink::algebra::{symmetric_group, EnhancedWord, Sign};
use xmodlink::diagram::trefoil_plus_string;
use xmodlink::invariant::tqft_check;
use xmodlink::pairs::eisermann_pair;

fn main() {
    let s3 = Arc::new(symmetric_group(3).expect("S3"));
    let pair = eisermann_pair(&s3, s3.lookup("(12)").expect("(12)"), false);
    let d = trefoil_plus_string();
    let word = |g| EnhancedWord::new(vec![(g, Sign::Plain)]);
    for k in 1..d.height() {
        let (upper, lower) = d.split_at(k).expect("valid cut");
        let ok = s3.elements().all(|a| {
            s3.elements().all(|b| tqft_check(&upper, &lower, &pair, &word(a), &word(b)).expect("matching signatures"))
        });
        println!("cut after slice {k}: middle width {}, gluing holds: {ok}", upper.bottom().len());
    }
}
