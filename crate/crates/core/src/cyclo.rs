//! Exact arithmetic in cyclotomic fields.
//!
//! A value of Q(ζ_n) is stored as rational coordinates on the Zumbroich
//! basis of Q(ζ_n), with `n` always reduced to the smallest conductor of the
//! value. With both conventions fixed, equal values have identical stored
//! form, so `==` is structural.
//!
//! For a prime power q = p^ν dividing n exactly, the exponents kept are
//! `a + b·p^(ν-1)` with `0 ≤ a < p^(ν-1)` and `1 ≤ b < p` when p is odd, and
//! `a < 2^(ν-1)` when p = 2. The basis of Q(ζ_n) is the product over the prime
//! powers of n, read off via the Chinese remainder theorem.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

struct Basis {
    /// Basis exponents, ascending.
    exponents: Vec<u32>,
    /// Expansion of ζ_n^k on the basis, for every k in 0..n.
    reduce: Vec<Vec<(u32, i8)>>,
}

fn prime_powers(mut n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            let mut nu = 0;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
                nu += 1;
            }
            out.push((p, nu, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1, n));
    }
    out
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let e = num_integer::Integer::extended_gcd(&(a as i64), &(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u64
}

impl Basis {
    fn new(n: u32) -> Self {
        let parts = prime_powers(n);
        // Per prime power: expansion of ω^j (ω primitive q-th root) on its basis.
        let local: Vec<Vec<Vec<(u32, i8)>>> = parts
            .iter()
            .map(|&(p, _, q)| {
                let step = q / p;
                (0..q)
                    .map(|j| {
                        if p == 2 {
                            if j >= step {
                                vec![(j - step, -1)]
                            } else {
                                vec![(j, 1)]
                            }
                        } else if j / step == 0 {
                            (1..p).map(|b| (j + b * step, -1)).collect()
                        } else {
                            vec![(j, 1)]
                        }
                    })
                    .collect()
            })
            .collect();
        let cofactors: Vec<u64> = parts.iter().map(|&(_, _, q)| (n / q) as u64).collect();
        let inv_cof: Vec<u64> = parts
            .iter()
            .zip(&cofactors)
            .map(|(&(_, _, q), &c)| {
                if q == 1 {
                    0
                } else {
                    inverse_mod(c % q as u64, q as u64)
                }
            })
            .collect();
        let reduce: Vec<Vec<(u32, i8)>> = (0..n)
            .map(|k| {
                let mut acc: Vec<(u64, i8)> = vec![(0, 1)];
                for (i, &(_, _, q)) in parts.iter().enumerate() {
                    let local_exp = (k as u64 * inv_cof[i]) % q as u64;
                    let mut next = Vec::new();
                    for &(e, s) in &acc {
                        for &(j, t) in &local[i][local_exp as usize] {
                            next.push(((e + cofactors[i] * j as u64) % n as u64, s * t));
                        }
                    }
                    acc = next;
                }
                let mut out: Vec<(u32, i8)> = acc.into_iter().map(|(e, s)| (e as u32, s)).collect();
                out.sort_unstable();
                out
            })
            .collect();
        let mut exponents: Vec<u32> = (0..n).filter(|&k| reduce[k as usize] == [(k, 1)]).collect();
        exponents.sort_unstable();
        Basis { exponents, reduce }
    }

    fn position(&self, e: u32) -> usize {
        self.exponents.binary_search(&e).expect("basis exponent")
    }
}

static BASES: Lazy<RwLock<HashMap<u32, Arc<Basis>>>> = Lazy::new(Default::default);

fn basis(n: u32) -> Arc<Basis> {
    if let Some(b) = BASES.read().unwrap().get(&n) {
        return b.clone();
    }
    let b = Arc::new(Basis::new(n));
    BASES.write().unwrap().entry(n).or_insert(b).clone()
}

/// Data for testing membership of Q(ζ_n) values in the subfield Q(ζ_m).
struct Embedding {
    /// Images of the m-basis in n-basis coordinates (dense, φ(n) × φ(m)).
    image: Vec<Vec<BigRational>>,
    /// Rows (n-basis positions) forming an invertible square block.
    rows: Vec<usize>,
    /// Inverse of that block.
    inverse: Vec<Vec<BigRational>>,
}

impl Embedding {
    fn new(n: u32, m: u32) -> Self {
        let bn = basis(n);
        let bm = basis(m);
        let dn = bn.exponents.len();
        let dm = bm.exponents.len();
        let mut image = vec![vec![BigRational::zero(); dm]; dn];
        for (col, &e) in bm.exponents.iter().enumerate() {
            let k = (e as u64 * (n / m) as u64 % n as u64) as usize;
            for &(j, s) in &bn.reduce[k] {
                image[bn.position(j)][col] += BigRational::from_integer(BigInt::from(s));
            }
        }
        // Pick pivot rows by elimination on a copy.
        let mut work = image.clone();
        let mut rows = Vec::new();
        let mut used = vec![false; dn];
        for col in 0..dm {
            let r = (0..dn)
                .find(|&r| !used[r] && !work[r][col].is_zero())
                .expect("embedding has full column rank");
            used[r] = true;
            rows.push(r);
            let pivot = work[r][col].clone();
            for rr in 0..dn {
                if rr != r && !work[rr][col].is_zero() {
                    let f = &work[rr][col] / &pivot;
                    for c in 0..dm {
                        let d = &f * &work[r][c];
                        work[rr][c] -= d;
                    }
                }
            }
        }
        let block: Vec<Vec<BigRational>> = rows.iter().map(|&r| image[r].clone()).collect();
        let inverse = invert_rational(block);
        Embedding {
            image,
            rows,
            inverse,
        }
    }

    /// Coordinates over Q(ζ_m) when `coords` (dense over the n-basis) lies there.
    fn pull_back(&self, coords: &[BigRational]) -> Option<Vec<BigRational>> {
        let dm = self.rows.len();
        let b: Vec<BigRational> = (0..dm)
            .map(|i| {
                let mut s = BigRational::zero();
                for (j, &r) in self.rows.iter().enumerate() {
                    if !coords[r].is_zero() && !self.inverse[i][j].is_zero() {
                        s += &self.inverse[i][j] * &coords[r];
                    }
                }
                s
            })
            .collect();
        for (r, row) in self.image.iter().enumerate() {
            let mut s = BigRational::zero();
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() && !b[c].is_zero() {
                    s += v * &b[c];
                }
            }
            if s != coords[r] {
                return None;
            }
        }
        Some(b)
    }
}

fn invert_rational(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("invertible block");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &p;
            inv[col][c] = &inv[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                    let d = &f * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
    }
    inv
}

static EMBEDDINGS: Lazy<RwLock<HashMap<(u32, u32), Arc<Embedding>>>> = Lazy::new(Default::default);

fn embedding(n: u32, m: u32) -> Arc<Embedding> {
    if let Some(e) = EMBEDDINGS.read().unwrap().get(&(n, m)) {
        return e.clone();
    }
    let e = Arc::new(Embedding::new(n, m));
    EMBEDDINGS
        .write()
        .unwrap()
        .entry((n, m))
        .or_insert(e)
        .clone()
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    n: u32,
    /// (basis exponent, nonzero coefficient), ascending by exponent.
    terms: Vec<(u32, BigRational)>,
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

/// Dense accumulator over the basis of Q(ζ_n), indexed by exponent.
struct Dense {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl Dense {
    fn new(n: u32) -> Self {
        Self {
            n,
            coeffs: vec![BigRational::zero(); n as usize],
        }
    }

    /// Adds `c·ζ_n^k` for an arbitrary exponent `k`.
    fn add_power(&mut self, b: &Basis, k: u64, c: &BigRational) {
        for &(j, s) in &b.reduce[(k % self.n as u64) as usize] {
            if s > 0 {
                self.coeffs[j as usize] += c;
            } else {
                self.coeffs[j as usize] -= c;
            }
        }
    }

    fn finish(self) -> Cyclotomic {
        let terms = self
            .coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic::normalize(self.n, terms)
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self {
            n: 1,
            terms: vec![],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        if v.is_zero() {
            Self::zero()
        } else {
            Self {
                n: 1,
                terms: vec![(0, v)],
            }
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_n^k, where ζ_n = exp(2πi/n).
    pub fn root(n: u32, k: i64) -> Self {
        Self::from_powers(n, &[(k, BigRational::one())])
    }

    /// Σ c·ζ_n^k for arbitrary integer exponents.
    pub fn from_powers(n: u32, powers: &[(i64, BigRational)]) -> Self {
        assert!(n > 0, "conductor must be positive");
        let b = basis(n);
        let mut d = Dense::new(n);
        for (k, c) in powers {
            d.add_power(&b, k.rem_euclid(n as i64) as u64, c);
        }
        d.finish()
    }

    /// Σ m_k·ζ_n^k with integer multiplicities indexed by exponent.
    pub fn from_multiplicities(n: u32, mult: &[i64]) -> Self {
        let powers: Vec<(i64, BigRational)> = mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(k, &m)| (k as i64, BigRational::from_integer(BigInt::from(m))))
            .collect();
        Self::from_powers(n, &powers)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// The rational value, if there is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.n, self.terms.as_slice()) {
            (_, []) => Some(BigRational::zero()),
            (1, [(0, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    /// The integer value, if there is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Reduces a canonical-basis term list to the smallest conductor.
    fn normalize(mut n: u32, mut terms: Vec<(u32, BigRational)>) -> Self {
        'outer: loop {
            if terms.is_empty() {
                return Self::zero();
            }
            if n == 1 {
                return Self { n, terms };
            }
            for (p, _, _) in prime_powers(n) {
                let m = n / p;
                if let Some(t) = Self::pull_back(n, m, &terms) {
                    n = m;
                    terms = t;
                    continue 'outer;
                }
            }
            return Self { n, terms };
        }
    }

    fn pull_back(n: u32, m: u32, terms: &[(u32, BigRational)]) -> Option<Vec<(u32, BigRational)>> {
        let bn = basis(n);
        let mut dense = vec![BigRational::zero(); bn.exponents.len()];
        for (e, c) in terms {
            dense[bn.position(*e)] = c.clone();
        }
        let coords = embedding(n, m).pull_back(&dense)?;
        let bm = basis(m);
        Some(
            coords
                .into_iter()
                .zip(&bm.exponents)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, &e)| (e, c))
                .collect(),
        )
    }

    fn lift_into(&self, target: u32, b: &Basis, d: &mut Dense, sign: bool) {
        let f = (target / self.n) as u64;
        for (e, c) in &self.terms {
            if sign {
                d.add_power(b, *e as u64 * f, c);
            } else {
                d.add_power(b, *e as u64 * f, &-c);
            }
        }
    }

    fn combine(a: &Self, b: &Self, subtract: bool) -> Self {
        if b.is_zero() {
            return a.clone();
        }
        if a.is_zero() {
            return if subtract { -b } else { b.clone() };
        }
        let n = a.n.lcm(&b.n);
        let bs = basis(n);
        let mut d = Dense::new(n);
        a.lift_into(n, &bs, &mut d, true);
        b.lift_into(n, &bs, &mut d, !subtract);
        d.finish()
    }

    fn product(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        if a.n == 1 {
            return b.scale(&a.terms[0].1);
        }
        if b.n == 1 {
            return a.scale(&b.terms[0].1);
        }
        let n = a.n.lcm(&b.n);
        let bs = basis(n);
        let fa = (n / a.n) as u64;
        let fb = (n / b.n) as u64;
        let mut d = Dense::new(n);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let c = ca * cb;
                d.add_power(&bs, *ea as u64 * fa + *eb as u64 * fb, &c);
            }
        }
        d.finish()
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k; `k` must be a unit mod the conductor.
    pub fn galois(&self, k: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let k = k.rem_euclid(n);
        assert_eq!(k.gcd(&n), 1, "galois exponent must be a unit");
        let b = basis(self.n);
        let mut d = Dense::new(self.n);
        for (e, c) in &self.terms {
            d.add_power(&b, (*e as i64 * k % n) as u64, c);
        }
        d.finish()
    }

    /// Complex conjugate, ζ ↦ ζ^(n-1).
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Product of all Galois conjugates: a rational number.
    pub fn norm(&self) -> BigRational {
        let (_, n) = self.norm_and_cofactor();
        n
    }

    fn norm_and_cofactor(&self) -> (Self, BigRational) {
        let n = self.n as i64;
        let mut cof = Self::one();
        for k in 2..n.max(2) {
            if k.gcd(&n) == 1 {
                cof = &cof * &self.galois(k);
            }
        }
        let norm = (self * &cof).to_rational().expect("norm is rational");
        (cof, norm)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (cof, norm) = self.norm_and_cofactor();
        Some(cof.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self * &inv)
    }

    /// Complex approximation, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in &self.terms {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * *e as f64 / self.n as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Compact rendering with subscripted conductor: `1`, `-ζ₃²`, `2ζ₃`, `ζ₈+ζ₈³`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if self.n == 1 || *e == 0 {
                out.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push('ζ');
            out.push_str(&subscript(self.n));
            if *e != 1 {
                out.push_str(&superscript(*e));
            }
        }
        out
    }

    /// Parses the exact string form produced by `Display`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::CyclotomicParse(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut acc = Self::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let v = match term.split_once("*z(") {
                None => Self::from_rational(parse_rational(term).ok_or_else(err)?),
                Some((c, rest)) => {
                    let c = parse_rational(c).ok_or_else(err)?;
                    let (n, k) = rest.split_once(")^").ok_or_else(err)?;
                    let n: u32 = n.parse().map_err(|_| err())?;
                    let k: i64 = k.parse().map_err(|_| err())?;
                    if n == 0 {
                        return Err(err());
                    }
                    Self::from_powers(n, &[(k, c)])
                }
            };
            acc = &acc + &v;
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, den))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

fn subscript(n: u32) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

fn superscript(n: u32) -> String {
    n.to_string()
        .chars()
        .map(|c| match c {
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            d => char::from_u32(0x2070 + d.to_digit(10).unwrap()).unwrap(),
        })
        .collect()
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                if self.n == 1 {
                    c.to_string()
                } else {
                    format!("{c}*z({})^{e}", self.n)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Cyclotomic::combine(a, b, false));
binop!(Sub, sub, |a, b| Cyclotomic::combine(a, b, true));
binop!(Mul, mul, Cyclotomic::product);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl<'a> std::iter::Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    n: u32,
    terms: Vec<(u32, serde_json::Value, serde_json::Value)>,
}

fn int_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, int_to_json(c.numer()), int_to_json(c.denom())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CycloJson::deserialize(d)?;
        if j.n == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut powers = Vec::with_capacity(j.terms.len());
        for (e, num, den) in &j.terms {
            let num = int_from_json(num).ok_or_else(|| D::Error::custom("bad numerator"))?;
            let den = int_from_json(den).ok_or_else(|| D::Error::custom("bad denominator"))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            powers.push((*e as i64, BigRational::new(num, den)));
        }
        Ok(Cyclotomic::from_powers(j.n, &powers))
    }
}
