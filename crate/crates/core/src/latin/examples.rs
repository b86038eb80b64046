//! Small bitrades used in examples and tests.

use super::Bitrade;

/// Two rows, three columns, size 6.
pub fn egg1() -> Bitrade {
    Bitrade::from_labels(
        &[["a", "c", "f"], ["a", "d", "g"], ["a", "e", "h"], ["b", "c", "g"], ["b", "d", "h"], ["b", "e", "f"]],
        &[["a", "c", "g"], ["a", "d", "h"], ["a", "e", "f"], ["b", "c", "f"], ["b", "d", "g"], ["b", "e", "h"]],
    )
    .unwrap()
}

/// The 2x2 bitrade of size 4.
pub fn intercalate() -> Bitrade {
    Bitrade::from_labels(
        &[["r1", "c1", "s1"], ["r1", "c2", "s2"], ["r2", "c1", "s2"], ["r2", "c2", "s1"]],
        &[["r1", "c1", "s2"], ["r1", "c2", "s1"], ["r2", "c1", "s1"], ["r2", "c2", "s2"]],
    )
    .unwrap()
}

/// Two intercalates on disjoint alphabets.
pub fn two_intercalates() -> Bitrade {
    let mut circ = Vec::new();
    let mut star = Vec::new();
    for tag in ["", "'"] {
        let t = |r: &str, c: &str, s: &str| [format!("{r}{tag}"), format!("{c}{tag}"), format!("{s}{tag}")];
        circ.extend([t("r1", "c1", "s1"), t("r1", "c2", "s2"), t("r2", "c1", "s2"), t("r2", "c2", "s1")]);
        star.extend([t("r1", "c1", "s2"), t("r1", "c2", "s1"), t("r2", "c1", "s1"), t("r2", "c2", "s2")]);
    }
    Bitrade::from_labels(&circ, &star).unwrap()
}

/// Three rows, four columns; not separated (row c).
pub fn non_separated() -> Bitrade {
    let rows = [
        ("a", ["h", "i", "j", "k"], ["i", "j", "k", "h"]),
        ("b", ["i", "l", "k", ""], ["k", "i", "l", ""]),
        ("c", ["k", "j", "l", "h"], ["h", "l", "j", "k"]),
    ];
    let cols = ["d", "e", "f", "g"];
    let mut circ = Vec::new();
    let mut star = Vec::new();
    for (r, cs, ss) in rows {
        for k in 0..4 {
            if !cs[k].is_empty() {
                circ.push([r, cols[k], cs[k]]);
                star.push([r, cols[k], ss[k]]);
            }
        }
    }
    Bitrade::from_labels(&circ, &star).unwrap()
}
