//! Morphisms of the categorical group of a crossed module, and the evaluation
//! of one coloured diagram as a composite of crossing morphisms.

use std::sync::Arc;

use xmodlink::algebra::{symmetric_group, EnhancedWord, Sign};
use xmodlink::catgroup::{CGMorphism, CategoricalGroup};
use xmodlink::diagram::trefoil_plus_string;
use xmodlink::invariant::{enumerate_colourings, evaluate_diagram};
use xmodlink::pairs::eisermann_pair;

fn main() {
    let s3 = Arc::new(symmetric_group(3).expect("S3"));
    let pair = eisermann_pair(&s3, s3.lookup("(123)").expect("(123)"), false);
    let cg = CategoricalGroup::new(pair.xmod().clone());
    let n = |s: &str| s3.lookup(s).expect("element");

    let f = CGMorphism { source: n("(12)"), label: n("(123)") };
    let g = CGMorphism { source: cg.target(f), label: n("(13)") };
    let fg = cg.compose(f, g).expect("composable");
    println!("target of f: {}", s3.name_of(cg.target(f)));
    println!("f then g: source {}, label {}", s3.name_of(fg.source), s3.name_of(fg.label));
    let t = cg.tensor(f, cg.identity(n("(23)")));
    println!("f ⊗ id: source {}, label {}", s3.name_of(t.source), s3.name_of(t.label));

    let d = trefoil_plus_string();
    let top = EnhancedWord::new(vec![(n("(12)"), Sign::Plain)]);
    for c in enumerate_colourings(&d, &pair, &top, None).expect("colourings") {
        let m = evaluate_diagram(&d, &c, &pair).expect("evaluation");
        let arcs: Vec<&str> = c.arc_colours.iter().map(|&e| s3.name_of(e)).collect();
        println!("arcs {:?} -> morphism ({}, {})", arcs, s3.name_of(m.source), s3.name_of(m.label));
    }
}
