//! The lifted Eisermann invariant for GL(2,5) → PGL(2,5), and its projection
//! back onto the unlifted invariant.

use xmodlink::algebra::{gl_to_pgl, pgl_elem, EnhancedWord, Sign};
use xmodlink::diagram::{trefoil_minus_string, trefoil_plus_string};
use xmodlink::invariant::StateSum;
use xmodlink::pairs::{eisermann_pair, lifted_eisermann_pair};
use xmodlink::xmod::CentralExtension;

fn main() {
    let (_, pgl, proj) = gl_to_pgl(5).expect("GL(2,5)");
    let ext = CentralExtension::new(proj.clone()).expect("central extension");
    let x = pgl_elem(&pgl, 5, "[[2,0],[0,1]]").expect("matrix class");
    let lifted = lifted_eisermann_pair(&ext, x);
    let plain = eisermann_pair(&pgl, x, false);
    let s = pgl_elem(&pgl, 5, "[[3,0],[0,2]]").expect("matrix class");
    let word = |g| EnhancedWord::new(vec![(g, Sign::Plain)]);
    for (name, d) in [("K+", trefoil_plus_string()), ("K-", trefoil_minus_string())] {
        let up = StateSum::new(&lifted, 0).state_sum(&d, &word(s), &word(pgl.identity())).expect("state sum");
        let down = StateSum::new(&plain, 0).state_sum(&d, &word(s), &word(pgl.identity())).expect("state sum");
        let pushed = up.to_group_algebra(lifted.fiber()).map(pgl.clone(), |e| proj.apply(e));
        println!(
            "{name}: lifted {}   unlifted {}   projection agrees: {}",
            up.to_group_algebra(lifted.fiber()),
            down.to_group_algebra(plain.fiber()),
            pushed == down.to_group_algebra(plain.fiber())
        );
    }
}
