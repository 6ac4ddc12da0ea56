//! Small diagrams used throughout the tests and examples.

use crate::diagram::{parse_diagram, Diagram};

pub const UNKNOT: &str = "O 1";
/// One-crossing unknot diagram.
pub const KINK: &str = "X(1,2,2,1)";
pub const UNLINK_2: &str = "O 2";
pub const HOPF: &str = "X(1,3,2,4);X(3,1,4,2)";
pub const TREFOIL: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
/// The trefoil with an extra kink on one edge.
pub const TREFOIL_KINKED: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,7,3);X(7,8,8,6)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
pub const TREFOIL_SUM: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,12,3);X(7,10,8,11);X(9,12,10,7);X(11,8,6,9)";
/// The `(2, 4)` torus link.
pub const TORUS_2_4: &str = "X(6,1,7,2);X(8,3,5,4);X(2,5,3,6);X(4,7,1,8)";

pub const ALL: [(&str, &str); 8] = [
    ("unknot", UNKNOT),
    ("kink", KINK),
    ("unlink2", UNLINK_2),
    ("hopf", HOPF),
    ("trefoil", TREFOIL),
    ("figure8", FIGURE_EIGHT),
    ("trefoil#trefoil", TREFOIL_SUM),
    ("T(2,4)", TORUS_2_4),
];

/// The named diagrams, parsed.
pub fn diagrams() -> Vec<(&'static str, Diagram)> {
    ALL.iter().map(|&(name, code)| (name, parse_diagram(code).expect("corpus diagrams parse"))).collect()
}

pub fn by_name(name: &str) -> Option<Diagram> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, code)| parse_diagram(code).expect("corpus diagrams parse"))
}
