//! Printed tables used as oracles. Entries are written with `z` for a
//! primitive cube root of unity: `z`, `z2`, `-2z2`, and plain integers.
#![allow(dead_code)]

use gchar::chartab::matching::LabeledTable;
use gchar::Cyclotomic;

pub fn entry(s: &str) -> Cyclotomic {
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, s),
    };
    match rest.find('z') {
        None => Cyclotomic::from_int(sign * rest.parse::<i64>().expect("integer entry")),
        Some(i) => {
            let coeff = if i == 0 {
                1
            } else {
                rest[..i].parse::<i64>().unwrap()
            };
            let power = match &rest[i + 1..] {
                "" => 1,
                p => p.parse::<i64>().unwrap(),
            };
            Cyclotomic::root(3, power).scale_int(sign * coeff)
        }
    }
}

pub fn rows(text: &str) -> Vec<Vec<Cyclotomic>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(entry).collect())
        .collect()
}

fn labeled(names: &str, sizes: &[usize], body: &str) -> LabeledTable {
    LabeledTable {
        class_names: names.split_whitespace().map(String::from).collect(),
        sizes: sizes.to_vec(),
        rows: rows(body),
    }
}

/// D8 × A4, 20 classes.
pub fn d8xa4() -> LabeledTable {
    labeled(
        "1A 2A 2B 3A 2C 2D 4A 6A 2E 6B 2F 3B 6C 2G 12A 4B 6D 6E 6F 12B",
        &[1, 2, 2, 4, 1, 3, 2, 8, 6, 8, 6, 4, 4, 3, 8, 6, 8, 8, 4, 8],
        "
        1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
        1 -1 -1 1 1 1 1 -1 -1 -1 -1 1 1 1 1 1 -1 -1 1 1
        1 -1 1 1 1 1 -1 -1 -1 1 1 1 1 1 -1 -1 -1 1 1 -1
        1 1 -1 1 1 1 -1 1 1 -1 -1 1 1 1 -1 -1 1 -1 1 -1
        1 -1 -1 z2 1 1 1 -z2 -1 -z2 -1 z z2 1 z2 1 -z -z z z
        1 -1 -1 z 1 1 1 -z -1 -z -1 z2 z 1 z 1 -z2 -z2 z2 z2
        1 -1 1 z2 1 1 -1 -z2 -1 z2 1 z z2 1 -z2 -1 -z z z -z
        1 -1 1 z 1 1 -1 -z -1 z 1 z2 z 1 -z -1 -z2 z2 z2 -z2
        1 1 -1 z2 1 1 -1 z2 1 -z2 -1 z z2 1 -z2 -1 z -z z -z
        1 1 -1 z 1 1 -1 z 1 -z -1 z2 z 1 -z -1 z2 -z2 z2 -z2
        1 1 1 z2 1 1 1 z2 1 z2 1 z z2 1 z2 1 z z z z
        1 1 1 z 1 1 1 z 1 z 1 z2 z 1 z 1 z2 z2 z2 z2
        2 0 0 2 -2 2 0 0 0 0 0 2 -2 -2 0 0 0 0 -2 0
        2 0 0 2z2 -2 2 0 0 0 0 0 2z -2z2 -2 0 0 0 0 -2z 0
        2 0 0 2z -2 2 0 0 0 0 0 2z2 -2z -2 0 0 0 0 -2z2 0
        3 -3 -3 0 3 -1 3 0 1 0 1 0 0 -1 0 -1 0 0 0 0
        3 -3 3 0 3 -1 -3 0 1 0 -1 0 0 -1 0 1 0 0 0 0
        3 3 -3 0 3 -1 -3 0 -1 0 1 0 0 -1 0 1 0 0 0 0
        3 3 3 0 3 -1 3 0 -1 0 -1 0 0 -1 0 -1 0 0 0 0
        6 0 0 0 -6 -2 0 0 0 0 0 0 0 2 0 0 0 0 0 0
        ",
    )
}

/// Columns, D and rows (for χ1, χ5, χ6, χ13, χ14, χ15, χ16, χ20) of the
/// G-character table of the order-24 normal subgroup of D8 × A4.
pub const D8XA4_N_CLASSES: &[&str] = &["1A", "3A", "2C", "2D", "3B", "6C", "2G", "6F"];
pub const D8XA4_N_REPS: &[usize] = &[1, 5, 6, 13, 14, 15, 16, 20];
pub const D8XA4_N_D: &[usize] = &[1, 4, 1, 3, 4, 4, 3, 4];
pub const D8XA4_N_TABLE: &str = "
    1 1 1 1 1 1 1 1
    1 z2 1 1 z z2 1 z
    1 z 1 1 z2 z 1 z2
    2 2 -2 2 2 -2 -2 -2
    2 2z2 -2 2 2z -2z2 -2 -2z
    2 2z -2 2 2z2 -2z -2 -2z2
    3 0 3 -1 0 0 -1 0
    6 0 -6 -2 0 0 2 0
";

/// Aut(D16), 11 classes.
pub fn autd16() -> LabeledTable {
    labeled(
        "1A 2A 2B 2C 4A 2D 8A 4B 2E 4C 8B",
        &[1, 4, 4, 2, 2, 1, 4, 4, 4, 2, 4],
        "
        1 1 1 1 1 1 1 1 1 1 1
        1 -1 1 1 1 1 -1 -1 1 1 -1
        1 1 -1 1 1 1 -1 1 -1 1 -1
        1 -1 -1 1 1 1 1 -1 -1 1 1
        1 1 1 -1 1 1 1 -1 -1 -1 -1
        1 -1 1 -1 1 1 -1 1 -1 -1 1
        1 1 -1 -1 1 1 -1 -1 1 -1 1
        1 -1 -1 -1 1 1 1 1 1 -1 -1
        2 0 0 2 -2 2 0 0 0 -2 0
        2 0 0 -2 -2 2 0 0 0 2 0
        4 0 0 0 0 -4 0 0 0 0 0
        ",
    )
}

/// The non-abelian order-8 normal subgroup of Aut(D16) and its table, rows
/// for χ1, χ3, χ9, χ11.
pub const AUTD16_N_CLASSES: &[&str] = &["1A", "2B", "4A", "2D"];
pub const AUTD16_N_REPS: &[usize] = &[1, 3, 9, 11];
/// The abelian one: χ3 becomes χ2 and 2B becomes 8A.
pub const AUTD16_M_CLASSES: &[&str] = &["1A", "8A", "4A", "2D"];
pub const AUTD16_M_REPS: &[usize] = &[1, 2, 9, 11];
pub const AUTD16_D: &[usize] = &[1, 4, 2, 1];
pub const AUTD16_N_TABLE: &str = "
    1 1 1 1
    1 -1 1 1
    2 0 -2 2
    4 0 0 -4
";
