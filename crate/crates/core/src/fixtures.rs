//! Bundled presentations, homomorphisms and a small knot table.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::fpgroup::Presentation;
use crate::groups::{FiniteQuotient, PermGroup};

pub const TREFOIL_PRES: &str = "\
# trefoil: aba = bab
gens: a b
rel: abaBAB
";

pub const FIGURE8_PRES: &str = "\
# figure-eight knot, two-bridge form: w x = y w with w = x^-1 y x y^-1
gens: x y
rel: XyxYxyXYxY
";

pub const UNKNOT_PRES: &str = "\
gens: x
";

pub const FREE2_PRES: &str = "\
# free group of rank 2
gens: a b
";

pub const T3_PRES: &str = "\
# three-torus
gens: x y z
rel: xyXY
rel: yzYZ
rel: xzXZ
";

/// Wirtinger relators of the Conway knot, one per crossing, each written as
/// `lhs * rhs^-1` for a relation `lhs = rhs`.
const CONWAY_WIRTINGER: [&str; 11] = [
    "ajBJ", // a = j b j^-1
    "bfCF", // b = f c f^-1
    "cGDg", // c = g^-1 d g
    "dKEk", // d = k^-1 e k
    "eHFh", // e = h^-1 f h
    "fiGI", // f = i g i^-1
    "gEHe", // g = e^-1 h e
    "hCIc", // h = c^-1 i c
    "iaJA", // i = a j a^-1
    "jiKI", // j = i k i^-1
    "kEAe", // k = e^-1 a e
];

/// `a^-1 = j f g^-1 k^-1 h^-1 i e^-1 c^-1 a i e^-1`, as a relator.
pub const CONWAY_LONGITUDE_RELATOR: &str = "AeIAceIhkgFJ";

fn conway_text(with_longitude: bool) -> String {
    let mut s = String::from("# Conway knot 11n34, meridians of the diagram segments\ngens: a b c d e f g h i j k\n");
    for r in CONWAY_WIRTINGER {
        s.push_str(&format!("rel: {r}\n"));
    }
    if with_longitude {
        s.push_str(&format!("rel: {CONWAY_LONGITUDE_RELATOR}\n"));
    }
    s.push_str(&format!("peripheral meridian: a\nperipheral longitude: {CONWAY_LONGITUDE_RELATOR}\n"));
    s
}

/// Knot group of the Conway knot (11 Wirtinger relators).
pub fn conway_pres() -> String {
    conway_text(false)
}

/// Zero surgery on the Conway knot (the 11 relators plus the longitude).
pub fn conway_surgery_pres() -> String {
    conway_text(true)
}

pub fn conway_knot() -> Presentation {
    Presentation::parse(&conway_pres()).expect("bundled fixture parses")
}

pub fn conway_surgery() -> Presentation {
    Presentation::parse(&conway_surgery_pres()).expect("bundled fixture parses")
}

/// The printed A5 assignment, which is not a homomorphism: its images of
/// `c` and `d` break the relators for `b`, `c`, `d` and `h`.
pub const PRINTED_A5: [(&str, &str); 11] = [
    ("a", "(1 4 2)"),
    ("b", "(4 5 1)"),
    ("c", "(4 5 1)"),
    ("d", "(4 5 3)"),
    ("e", "(4 5 3)"),
    ("f", "(3 5 1)"),
    ("g", "(3 5 1)"),
    ("h", "(4 3 1)"),
    ("i", "(3 5 1)"),
    ("j", "(3 5 2)"),
    ("k", "(3 2 1)"),
];

/// The epimorphism onto A5 used for the Conway computations: the printed
/// table with the images of `c` and `d` corrected so every relator dies.
/// It is the unique epimorphism agreeing with the printed table on the
/// other nine generators.
pub const CONWAY_A5: [(&str, &str); 11] = [
    ("a", "(1 4 2)"),
    ("b", "(4 5 1)"),
    ("c", "(3 5 4)"),
    ("d", "(4 5 1)"),
    ("e", "(4 5 3)"),
    ("f", "(3 5 1)"),
    ("g", "(3 5 1)"),
    ("h", "(4 3 1)"),
    ("i", "(3 5 1)"),
    ("j", "(3 5 2)"),
    ("k", "(3 2 1)"),
];

pub fn cycle_map(table: &[(&str, &str)]) -> BTreeMap<String, String> {
    table.iter().map(|&(g, c)| (g.to_string(), c.to_string())).collect()
}

pub fn conway_a5_json() -> String {
    serde_json::to_string_pretty(&cycle_map(&CONWAY_A5)).expect("static JSON") + "\n"
}

/// The A5 quotient of a presentation on the Conway generators.
pub fn conway_a5(source: &Presentation) -> Result<FiniteQuotient> {
    let a5 = Arc::new(PermGroup::alternating(5)?);
    FiniteQuotient::from_cycle_map(source.clone(), Some(a5), &cycle_map(&CONWAY_A5))
}

/// A knot from the table, with its Alexander polynomial (ascending
/// coefficients) where recorded.
#[derive(Clone, Copy, Debug)]
pub struct KnotEntry {
    pub name: &'static str,
    /// `DT(...)` or `braid[...]`.
    pub code: &'static str,
    pub alexander: &'static [i64],
}

pub const KNOT_TABLE: &[KnotEntry] = &[
    KnotEntry { name: "3_1", code: "DT(4,6,2)", alexander: &[1, -1, 1] },
    KnotEntry { name: "4_1", code: "DT(4,6,8,2)", alexander: &[1, -3, 1] },
    KnotEntry { name: "5_1", code: "DT(6,8,10,2,4)", alexander: &[1, -1, 1, -1, 1] },
    KnotEntry { name: "5_2", code: "DT(4,8,10,2,6)", alexander: &[2, -3, 2] },
    KnotEntry { name: "6_1", code: "DT(4,8,12,10,2,6)", alexander: &[2, -5, 2] },
    KnotEntry { name: "6_2", code: "DT(4,8,10,12,2,6)", alexander: &[1, -3, 3, -3, 1] },
    KnotEntry { name: "6_3", code: "DT(4,8,10,2,12,6)", alexander: &[1, -3, 5, -3, 1] },
    KnotEntry { name: "7_1", code: "DT(8,10,12,14,2,4,6)", alexander: &[1, -1, 1, -1, 1, -1, 1] },
    KnotEntry { name: "7_2", code: "DT(4,10,14,12,2,8,6)", alexander: &[3, -5, 3] },
    KnotEntry { name: "7_3", code: "DT(6,10,12,14,2,4,8)", alexander: &[2, -3, 3, -3, 2] },
    KnotEntry { name: "7_4", code: "DT(6,10,12,14,4,2,8)", alexander: &[4, -7, 4] },
    KnotEntry { name: "7_5", code: "DT(4,10,12,14,2,8,6)", alexander: &[2, -4, 5, -4, 2] },
    KnotEntry { name: "7_6", code: "DT(4,8,12,2,14,6,10)", alexander: &[1, -5, 7, -5, 1] },
    KnotEntry { name: "7_7", code: "DT(4,8,10,12,2,14,6)", alexander: &[1, -5, 9, -5, 1] },
    KnotEntry { name: "8_1", code: "DT(4,10,16,14,12,2,8,6)", alexander: &[3, -7, 3] },
    KnotEntry { name: "8_19", code: "braid[1,2,1,2,1,2,1,2]", alexander: &[1, -1, 0, 1, 0, -1, 1] },
];

/// Files written by the `fixtures` command: `(file name, contents)`.
pub fn corpus() -> Vec<(&'static str, String)> {
    vec![
        ("trefoil.pres", TREFOIL_PRES.to_string()),
        ("figure8.pres", FIGURE8_PRES.to_string()),
        ("unknot.pres", UNKNOT_PRES.to_string()),
        ("free2.pres", FREE2_PRES.to_string()),
        ("t3.pres", T3_PRES.to_string()),
        ("conway.pres", conway_pres()),
        ("conway_surgery.pres", conway_surgery_pres()),
        ("a5.json", conway_a5_json()),
    ]
}
