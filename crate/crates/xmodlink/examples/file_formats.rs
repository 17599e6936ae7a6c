//! Write a small set of input files (groups, a crossed module, pairs, a rack,
//! a cocycle and diagrams), load them back and evaluate one invariant from
//! disk.
//!
//! ```bash
//! cargo run --example file_formats            # into a temporary directory
//! cargo run --example file_formats -- data    # refresh the shipped data/
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use xmodlink::algebra::{cyclic_group, symmetric_group, EnhancedWord};
use xmodlink::builtins::dihedral3_cocycles;
use xmodlink::diagram::{closure, figure_eight_string, trefoil_plus_string};
use xmodlink::invariant::{invariant_matrix, matrix_to_tsv};
use xmodlink::io::{group_to_text, load_cocycle, load_diagram, load_pair, load_rack, pair_to_text, rack_to_text, xmod_to_text};
use xmodlink::pairs::{eisermann_pair, pair_from_rack};
use xmodlink::xmod::{cyclic_rack, dihedral_quandle};

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap_or_else(|e| panic!("{}: {e}", dir.join(name).display()));
    println!("wrote {name}");
}

fn main() {
    let tmp;
    let dir: PathBuf = match std::env::args().nth(1) {
        Some(d) => PathBuf::from(d),
        None => {
            tmp = std::env::temp_dir().join(format!("xmodlink-formats-{}", std::process::id()));
            tmp.clone()
        }
    };
    fs::create_dir_all(&dir).expect("create output directory");

    let s3 = Arc::new(symmetric_group(3).expect("S3"));
    let z3 = Arc::new(cyclic_group(3));
    let eis = eisermann_pair(&s3, s3.lookup("(123)").expect("(123)"), false);
    write(&dir, "s3.grp", &group_to_text(&s3));
    write(&dir, "z3.grp", &group_to_text(&z3));
    write(&dir, "s3.xmod", &xmod_to_text(eis.xmod(), "s3.grp", "s3.grp"));
    write(&dir, "eisermann_s3_123.pair", &pair_to_text(&eis, "s3.xmod"));

    let cyc = pair_from_rack(&cyclic_rack(3), z3.clone()).expect("cyclic rack pair");
    write(&dir, "z3.xmod", &xmod_to_text(cyc.xmod(), "z3.grp", "z3.grp"));
    write(&dir, "cyclic3.pair", &pair_to_text(&cyc, "z3.xmod"));
    let dih = pair_from_rack(&dihedral_quandle(3), z3.clone()).expect("dihedral pair");
    write(&dir, "dihedral3.pair", &pair_to_text(&dih, "z3.xmod"));

    write(&dir, "d3.rck", &rack_to_text(&dihedral_quandle(3)));
    let c = &dihedral3_cocycles()[1];
    let mut coc = String::from("# a Z3-valued quandle 2-cocycle of the dihedral quandle R3\nrack d3.rck\ngroup z3.grp\n");
    for x in 0..3 {
        let row: Vec<&str> = (0..3).map(|y| z3.name_of(c.w(x, y))).collect();
        coc.push_str(&row.join(" "));
        coc.push('\n');
    }
    write(&dir, "d3_z3.coc", &coc);

    write(&dir, "trefoil_plus.tng", &trefoil_plus_string().serialize());
    write(&dir, "figure8.tng", &figure_eight_string().serialize());
    write(&dir, "trefoil_closed.tng", &closure(&trefoil_plus_string()).expect("closure").serialize());

    // Read everything back.
    let pair = load_pair(&dir.join("eisermann_s3_123.pair")).expect("pair file");
    let d = load_diagram(&dir.join("trefoil_plus.tng")).expect("diagram file");
    load_rack(&dir.join("d3.rck")).expect("rack file");
    load_cocycle(&dir.join("d3_z3.coc")).expect("cocycle file");
    let top = EnhancedWord::parse(pair.base(), "id").expect("word");
    let m = invariant_matrix(&d, &pair, &top).expect("state sum");
    println!("\n{}", matrix_to_tsv(&m, pair.base(), pair.fiber()));
}
