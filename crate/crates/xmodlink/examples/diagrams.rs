//! Building sliced tangle diagrams: parsing the text format, composing,
//! tensoring, closing and mirroring.

use xmodlink::diagram::{arc_index, closure, compose, tensor, SlicedDiagram};

fn main() {
    let text = "\
# a positive crossing followed by its inverse
top: v v
x+
x-
";
    let d = SlicedDiagram::parse(text).expect("valid diagram");
    println!("height {}, writhe {}", d.height(), d.writhe());

    let twice = compose(&d, &d).expect("matching boundaries");
    println!("composed:\n{}", twice.serialize());
    let side = tensor(&d, &SlicedDiagram::parse("top: ^\nid-\n").expect("valid")).expect("tensor");
    println!("tensored:\n{}", side.serialize());

    let arcs = arc_index(&d);
    println!("{} arcs, {} crossings", arcs.n_arcs(), arcs.crossings().len());

    let knot = SlicedDiagram::parse("top: v\nid+ cup<\nx+ id-\nid+ cap>\n").expect("valid");
    println!("closure:\n{}", closure(&knot).expect("string knot").serialize());
    println!("mirror:\n{}", knot.mirror().serialize());

    match SlicedDiagram::parse("top: v\nx+\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
