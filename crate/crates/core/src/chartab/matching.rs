//! Certified matching of a computed table against an externally given one.
//!
//! Columns may only be matched to classes with the same element order (read
//! from the leading digits of the label) and the same size. A match is
//! returned only if every entry agrees exactly under the row and column
//! bijections.

use super::CharacterTable;
use crate::cyclo::Cyclotomic;

/// A character table as printed, with ATLAS-style column labels.
#[derive(Clone, Debug)]
pub struct LabeledTable {
    pub class_names: Vec<String>,
    pub sizes: Vec<usize>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

/// `column[j]` is the computed class for labeled column j, `row[i]` the
/// computed row for labeled row i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatch {
    pub column: Vec<usize>,
    pub row: Vec<usize>,
}

impl TableMatch {
    /// Computed class index for a printed label.
    pub fn class(&self, labeled: &LabeledTable, name: &str) -> Option<usize> {
        labeled
            .class_names
            .iter()
            .position(|n| n == name)
            .map(|j| self.column[j])
    }
}

fn label_order(name: &str) -> Option<u64> {
    let digits: String = name.chars().take_while(char::is_ascii_digit).collect();
    digits.parse().ok()
}

/// Row tuples restricted to the first `m` assigned columns, as sorted multisets.
fn signature<'a>(rows: impl Iterator<Item = Vec<&'a Cyclotomic>>) -> Vec<Vec<&'a Cyclotomic>> {
    let mut v: Vec<Vec<&Cyclotomic>> = rows.collect();
    v.sort();
    v
}

pub fn match_table(t: &CharacterTable, labeled: &LabeledTable) -> Option<TableMatch> {
    let k = t.len();
    if labeled.rows.len() != k || labeled.sizes.len() != k || labeled.class_names.len() != k {
        return None;
    }
    let cd = t.classes();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            let o = label_order(&labeled.class_names[j]);
            (0..k)
                .filter(|&c| cd.sizes[c] == labeled.sizes[j] && o.is_none_or(|o| cd.orders[c] == o))
                .collect()
        })
        .collect();

    fn search(
        j: usize,
        t: &CharacterTable,
        labeled: &LabeledTable,
        candidates: &[Vec<usize>],
        column: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = t.len();
        if j == k {
            return true;
        }
        for &c in &candidates[j] {
            if used[c] {
                continue;
            }
            column.push(c);
            let ours = signature(
                t.values()
                    .iter()
                    .map(|r| column.iter().map(|&c| &r[c]).collect()),
            );
            let theirs = signature(labeled.rows.iter().map(|r| r[..=j].iter().collect()));
            if ours == theirs {
                used[c] = true;
                if search(j + 1, t, labeled, candidates, column, used) {
                    return true;
                }
                used[c] = false;
            }
            column.pop();
        }
        false
    }

    let mut column = Vec::with_capacity(k);
    let mut used = vec![false; k];
    if !search(0, t, labeled, &candidates, &mut column, &mut used) {
        return None;
    }
    let mut taken = vec![false; k];
    let mut row = Vec::with_capacity(k);
    for lr in &labeled.rows {
        let r = (0..k)
            .find(|&r| !taken[r] && column.iter().zip(lr).all(|(&c, v)| &t.values()[r][c] == v))?;
        taken[r] = true;
        row.push(r);
    }
    Some(TableMatch { column, row })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn s3_against_hand_table() {
        let t = CharacterTable::compute(catalog("symmetric:3").unwrap());
        let i = Cyclotomic::from_int;
        let labeled = LabeledTable {
            class_names: vec!["1A".into(), "3A".into(), "2A".into()],
            sizes: vec![1, 2, 3],
            rows: vec![
                vec![i(2), i(-1), i(0)],
                vec![i(1), i(1), i(1)],
                vec![i(1), i(1), i(-1)],
            ],
        };
        let m = match_table(&t, &labeled).unwrap();
        assert_eq!(m.class(&labeled, "3A"), t.classes().index_of_name("3A"));
        assert_eq!(m.row[1], 0);

        let mut wrong = labeled.clone();
        wrong.rows[0][1] = i(1);
        assert!(match_table(&t, &wrong).is_none());
    }
}
