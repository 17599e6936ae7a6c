use std::fmt;

use super::{Generator, Orientation, Slice, SlicedDiagram};

/// Build a diagram from a signature string (`"v^"`) and slice token lines.
/// Panics on malformed input; meant for hard-coded fixtures.
pub(crate) fn build(top: &str, slices: &[&str]) -> SlicedDiagram {
    let top = top
        .chars()
        .map(|c| Orientation::from_symbol(&c.to_string()).expect("fixture orientation"))
        .collect();
    let slices = slices
        .iter()
        .map(|line| Slice::new(line.split_whitespace().map(|t| Generator::from_token(t).expect("fixture token")).collect()))
        .collect();
    SlicedDiagram::new(top, slices).expect("fixture diagrams are valid")
}

const TREFOIL_PLUS: [&str; 5] = ["id+ cup<", "x+ id-", "x+ id-", "x+ id-", "id+ cap>"];

/// String (long) positive trefoil: a cup spawns the return strand, three
/// stacked positive crossings braid it with the through strand, a cap closes it.
pub fn trefoil_plus_string() -> SlicedDiagram {
    build("v", &TREFOIL_PLUS)
}

pub fn trefoil_minus_string() -> SlicedDiagram {
    trefoil_plus_string().mirror()
}

/// String figure-eight knot as the plat-like closure of the 3-braid σ₁σ₂⁻¹σ₁σ₂⁻¹.
pub fn figure_eight_string() -> SlicedDiagram {
    build(
        "v",
        &[
            "id+ cup<",
            "id+ id+ cup< id-",
            "x+ id+ id- id-",
            "id+ x- id- id-",
            "x+ id+ id- id-",
            "id+ x- id- id-",
            "id+ id+ cap> id-",
            "id+ cap>",
        ],
    )
}

pub fn unknot_string() -> SlicedDiagram {
    build("v", &["id+"])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveId {
    R0A,
    R0B,
    R0C,
    R0D,
    R1,
    R1Prime,
    R2A,
    R2B,
    R2C,
    R3,
    Identity,
    Interchange,
}

impl MoveId {
    pub const ALL: [MoveId; 12] = [
        MoveId::R0A,
        MoveId::R0B,
        MoveId::R0C,
        MoveId::R0D,
        MoveId::R1,
        MoveId::R1Prime,
        MoveId::R2A,
        MoveId::R2B,
        MoveId::R2C,
        MoveId::R3,
        MoveId::Identity,
        MoveId::Interchange,
    ];

    /// Relations presenting the category of unframed tangles.
    pub fn in_unframed_set(self) -> bool {
        !matches!(self, MoveId::R1Prime | MoveId::Identity | MoveId::Interchange)
    }

    /// Relations presenting the category of framed tangles (R1 replaced by R1′).
    pub fn in_framed_set(self) -> bool {
        !matches!(self, MoveId::R1 | MoveId::Identity | MoveId::Interchange)
    }
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveId::R0A => "R0A",
            MoveId::R0B => "R0B",
            MoveId::R0C => "R0C",
            MoveId::R0D => "R0D",
            MoveId::R1 => "R1",
            MoveId::R1Prime => "R1'",
            MoveId::R2A => "R2A",
            MoveId::R2B => "R2B",
            MoveId::R2C => "R2C",
            MoveId::R3 => "R3",
            MoveId::Identity => "Identity",
            MoveId::Interchange => "Interchange",
        })
    }
}

/// Two diagrams of the same tangle related by one local move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveFixture {
    pub id: MoveId,
    /// Picture label within the relation, e.g. `R2A.1`.
    pub label: String,
    pub lhs: SlicedDiagram,
    pub rhs: SlicedDiagram,
}

fn swap_crossings(lines: &[&str]) -> Vec<String> {
    lines
        .iter()
        .map(|l| {
            l.split_whitespace()
                .map(|t| match t {
                    "x+" => "x-",
                    "x-" => "x+",
                    t => t,
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

/// All move pictures. Each unframed or framed relation set consists of 15
/// pictures; Identity and Interchange are sample instances of the two
/// structural moves of sliced diagrams.
pub fn move_fixtures() -> Vec<MoveFixture> {
    let mut out = Vec::new();
    let mut push = |id: MoveId, n: usize, top: &str, lhs: &[&str], rhs: &[&str]| {
        out.push(MoveFixture { id, label: format!("{id}.{n}"), lhs: build(top, lhs), rhs: build(top, rhs) });
    };

    // R0A/R0B: zig-zags straighten.
    push(MoveId::R0A, 1, "v", &["id+ cup>", "cap> id+"], &["id+"]);
    push(MoveId::R0A, 2, "v", &["cup< id+", "id+ cap<"], &["id+"]);
    push(MoveId::R0B, 1, "^", &["id- cup<", "cap< id-"], &["id-"]);
    push(MoveId::R0B, 2, "^", &["cup> id-", "id- cap>"], &["id-"]);

    // R0C/R0D: a crossing between two upward strands, built by rotating the
    // downward crossing clockwise versus anticlockwise.
    let r0c_lhs = ["cup> id- id-", "id- cup> id+ id- id-", "id- id- x+ id- id-", "id- id- id+ cap> id-", "id- id- cap>"];
    let r0c_rhs = ["id- id- cup<", "id- id- id+ cup< id-", "id- id- x+ id- id-", "id- cap< id+ id- id-", "cap< id- id-"];
    push(MoveId::R0C, 1, "^^", &r0c_lhs, &r0c_rhs);
    let (l, r) = (swap_crossings(&r0c_lhs), swap_crossings(&r0c_rhs));
    push(
        MoveId::R0D,
        1,
        "^^",
        &l.iter().map(String::as_str).collect::<Vec<_>>(),
        &r.iter().map(String::as_str).collect::<Vec<_>>(),
    );

    // R1: a single curl.
    push(MoveId::R1, 1, "v", &["id+ cup<", "x+ id-", "id+ cap>"], &["id+"]);
    push(MoveId::R1, 2, "v", &["id+ cup<", "x- id-", "id+ cap>"], &["id+"]);

    // R1′: two opposite curls cancel.
    push(
        MoveId::R1Prime,
        1,
        "v",
        &["id+ cup<", "x+ id-", "id+ cap>", "cup> id+", "id- x-", "cap< id+"],
        &["id+"],
    );
    push(
        MoveId::R1Prime,
        2,
        "v",
        &["id+ cup<", "x- id-", "id+ cap>", "cup> id+", "id- x+", "cap< id+"],
        &["id+"],
    );

    // R2A: two downward strands.
    push(MoveId::R2A, 1, "vv", &["x+", "x-"], &["id+ id+"]);
    push(MoveId::R2A, 2, "vv", &["x-", "x+"], &["id+ id+"]);

    // R2B/R2C: oppositely oriented strands.
    let r2b1 = ["cup> id+ id-", "id- x+ id-", "id- id+ cap>", "id- id+ cup<", "id- x- id-", "cap< id+ id-"];
    let r2b2 = ["id- id+ cup<", "id- x- id-", "cap< id+ id-", "cup> id+ id-", "id- x+ id-", "id- id+ cap>"];
    push(MoveId::R2B, 1, "v^", &r2b1, &["id+ id-"]);
    push(MoveId::R2B, 2, "^v", &r2b2, &["id- id+"]);
    let (c1, c2) = (swap_crossings(&r2b1), swap_crossings(&r2b2));
    push(MoveId::R2C, 1, "v^", &c1.iter().map(String::as_str).collect::<Vec<_>>(), &["id+ id-"]);
    push(MoveId::R2C, 2, "^v", &c2.iter().map(String::as_str).collect::<Vec<_>>(), &["id- id+"]);

    // R3 with three negative crossings.
    push(MoveId::R3, 1, "vvv", &["x- id+", "id+ x-", "x- id+"], &["id+ x-", "x- id+", "id+ x-"]);

    push(MoveId::Identity, 1, "vv", &["x+"], &["x+", "id+ id+"]);
    push(MoveId::Interchange, 1, "vv", &["x+", "id+ id+ cup>"], &["id+ id+ cup>", "x+ id- id+"]);
    out
}
