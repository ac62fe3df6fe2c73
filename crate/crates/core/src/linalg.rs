//! Small dense matrices over cyclotomic fields.

use crate::cyclo::Cyclotomic;

pub type Matrix = Vec<Vec<Cyclotomic>>;

pub fn transpose(m: &[Vec<Cyclotomic>]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn conjugate_transpose(m: &[Vec<Cyclotomic>]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].conjugate()).collect())
        .collect()
}

pub fn matmul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            assert_eq!(r.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| (0..inner).map(|k| &r[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination over the field.
pub fn det(m: &[Vec<Cyclotomic>]) -> Cyclotomic {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Cyclotomic::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Cyclotomic::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d = &d * &a[col][col];
        let inv = a[col][col].inverse().expect("nonzero pivot");
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    d
}

/// Solves `A x = b` for square nonsingular `A`; `None` if `A` is singular.
pub fn solve(a: &[Vec<Cyclotomic>], b: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].inverse().expect("nonzero pivot");
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..=n {
                let t = &f * &m[col][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
