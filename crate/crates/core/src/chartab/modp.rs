//! Dense linear algebra over GF(p) for word-sized primes.

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub(crate) fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

/// Floor of the square root.
pub(crate) fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of GF(p)*.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(g, (p - 1) / q, p) != 1))
        .expect("GF(p)* is cyclic")
}

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let s = inv(rows[r][col], p);
        for v in rows[r].iter_mut() {
            *v = mul(*v, s, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in col..ncols {
                    let d = mul(f, rows[r][c], p);
                    rows[i][c] = sub(rows[i][c], d, p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right kernel {x : A x = 0} of a square or rectangular matrix.
pub(crate) fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    let pivots = rref(&mut m, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![0u64; ncols];
            x[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = (p - row[free]) % p;
            }
            x
        })
        .collect()
}

/// Characteristic polynomial det(xI - A), coefficients from the constant term up.
///
/// Reduces to upper Hessenberg form by similarity, then expands along the
/// subdiagonal recurrence.
pub(crate) fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 0..n.saturating_sub(2) {
        let Some(i) = (m + 1..n).find(|&i| h[i][m] != 0) else {
            continue;
        };
        if i != m + 1 {
            h.swap(i, m + 1);
            for row in h.iter_mut() {
                row.swap(i, m + 1);
            }
        }
        let piv_inv = inv(h[m + 1][m], p);
        for j in m + 2..n {
            if h[j][m] == 0 {
                continue;
            }
            let f = mul(h[j][m], piv_inv, p);
            for c in 0..n {
                let d = mul(f, h[m + 1][c], p);
                h[j][c] = sub(h[j][c], d, p);
            }
            for row in h.iter_mut() {
                let d = mul(f, row[j], p);
                row[m + 1] = (row[m + 1] + d) % p;
            }
        }
    }
    // polys[k] = char poly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h[m][m]) * polys[m]
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = sub(next[k], mul(h[m][m], c, p), p);
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = mul(t, h[i + 1][i], p);
            let f = mul(t, h[i][m], p);
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub(next[k], mul(f, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter()
        .rev()
        .fold(0, |acc, &c| (mul(acc, x, p) + c) % p)
}

/// Distinct roots in GF(p), ascending.
pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval(poly, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_brute(a: &[Vec<u64>], p: u64) -> u64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0u64;
        for c in 0..n {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = mul(a[0][c], det_brute(&minor, p), p);
            total = if c % 2 == 0 {
                (total + term) % p
            } else {
                sub(total, term, p)
            };
        }
        total
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let p = 13;
        let a = vec![
            vec![1, 2, 0, 5],
            vec![3, 0, 4, 1],
            vec![0, 7, 2, 2],
            vec![6, 1, 1, 0],
        ];
        let cp = charpoly(&a, p);
        assert_eq!(cp.len(), 5);
        for x in 0..p {
            let m: Vec<Vec<u64>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| sub(if i == j { x } else { 0 }, a[i][j], p))
                        .collect()
                })
                .collect();
            assert_eq!(eval(&cp, x, p), det_brute(&m, p), "x = {x}");
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let p = 7;
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&a, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let s = row
                    .iter()
                    .zip(&v)
                    .fold(0, |acc, (&x, &y)| (acc + mul(x, y, p)) % p);
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        assert!(is_prime(97) && !is_prime(91));
        assert_eq!(
            (0..50).map(isqrt).collect::<Vec<_>>(),
            (0..50u64)
                .map(|n| (0..=n).filter(|r| r * r <= n).next_back().unwrap())
                .collect::<Vec<_>>()
        );
    }
}
