//! Finite fields GF(p^e) with table-driven arithmetic.
//!
//! Elements are indexed `0..q`; index `x` encodes the polynomial whose
//! coefficient of `t^i` is the `i`-th base-`p` digit of `x`. Index 0 is zero
//! and index 1 is one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest order for which the addition and multiplication tables are built.
pub const MAX_ORDER: u64 = 2048;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: usize,
    /// Monic modulus, low-to-high coefficients, length `e + 1`.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// `Some((p, e))` when `q = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo `b` over F_p (`b` non-zero, trimmed).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let coef = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - coef * bi % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut exp) = (1u64, a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Monic polynomial of degree `deg` whose non-leading coefficients, read from
/// `t^{deg-1}` down to `t^0`, spell `rank` in base `p`.
fn monic_from_rank(rank: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut poly = vec![0; deg as usize + 1];
    poly[deg as usize] = 1;
    let mut r = rank;
    for i in 0..deg as usize {
        poly[i] = r % p;
        r /= p;
    }
    poly
}

/// Irreducible iff no monic polynomial of degree `1..=deg/2` divides it.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for rank in 0..p.pow(d) {
            if poly_rem(f, &monic_from_rank(rank, d, p), p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(q) with the lexicographically smallest monic irreducible modulus.
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::GuardExceeded { what: "field order", value: q as usize, limit: MAX_ORDER as usize });
        }
        let modulus = (0..p.pow(e))
            .map(|rank| monic_from_rank(rank, e, p))
            .find(|f| e == 1 || is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");
        let q = q as usize;
        let digits = |x: usize| -> Vec<u64> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x as u64;
            for _ in 0..e {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let index = |c: &[u64]| -> usize { c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as usize };
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = index(&sum) as u32;
                let mut prod = vec![0u64; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut rem = poly_rem(&prod, &modulus, p);
                rem.resize(e as usize, 0);
                mul[a * q + b] = index(&rem) as u32;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u32).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u32 })
            .collect();
        Ok(FiniteField { p, e, q, modulus, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Modulus coefficients from `t^0` up to the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    pub fn element(&self, index: usize) -> FieldElement<'_> {
        assert!(index < self.q, "element index out of range");
        FieldElement { field: self, index }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> {
        (0..self.q).map(move |i| FieldElement { field: self, index: i })
    }

    /// Multiplicative order of a non-zero element.
    pub fn multiplicative_order(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }
}

#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    field: &'a FiniteField,
    index: usize,
}

impl<'a> FieldElement<'a> {
    pub fn index(&self) -> usize {
        self.index
    }

    /// Coefficients from `t^0` up to `t^{e-1}`.
    pub fn coefficients(&self) -> Vec<u64> {
        let mut x = self.index as u64;
        (0..self.field.e)
            .map(|_| {
                let d = x % self.field.p;
                x /= self.field.p;
                d
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        self.field.inv(self.index).map(|i| FieldElement { field: self.field, index: i })
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.index == other.index
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coefficients())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr for FieldElement<'a> {
            type Output = FieldElement<'a>;
            fn $method(self, rhs: Self) -> Self::Output {
                assert!(std::ptr::eq(self.field, rhs.field), "elements of different fields");
                FieldElement { field: self.field, index: self.field.$method(self.index, rhs.index) }
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<'a> Neg for FieldElement<'a> {
    type Output = FieldElement<'a>;
    fn neg(self) -> Self::Output {
        FieldElement { field: self.field, index: self.field.neg(self.index) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_square_of_t() {
        let f = FiniteField::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.element(2);
        assert_eq!((t * t).coefficients(), vec![1, 1]);
    }

    #[test]
    fn gf5_inverse() {
        let f = FiniteField::new(5).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn non_prime_powers_rejected() {
        for q in [0, 1, 6, 10, 12] {
            assert_eq!(FiniteField::new(q).unwrap_err(), Error::NotPrimePower(q));
        }
    }

    #[test]
    fn modulus_is_smallest_irreducible_by_brute_force() {
        // Oracle: reject every candidate that factors as a product of two
        // monic polynomials of positive degree.
        for q in [4u64, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            let (p, e) = (f.characteristic(), f.degree());
            let mul = |a: &[u64], b: &[u64]| {
                let mut c = vec![0; a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] = (c[i + j] + x * y) % p;
                    }
                }
                c
            };
            let mut reducible = std::collections::HashSet::new();
            for d in 1..e {
                for r1 in 0..p.pow(d) {
                    for r2 in 0..p.pow(e - d) {
                        reducible.insert(mul(&monic_from_rank(r1, d, p), &monic_from_rank(r2, e - d, p)));
                    }
                }
            }
            let first = (0..p.pow(e)).map(|r| monic_from_rank(r, e, p)).find(|c| !reducible.contains(c)).unwrap();
            assert_eq!(f.modulus(), first.as_slice(), "q = {q}");
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            let q = q as usize;
            assert!((1..q).any(|a| f.multiplicative_order(a) == Some(q - 1)), "q = {q}");
        }
    }

    #[test]
    fn field_axioms_gf9() {
        let f = FiniteField::new(9).unwrap();
        for a in 0..9 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if let Some(i) = f.inv(a) {
                assert_eq!(f.mul(a, i), 1);
            }
            for b in 0..9 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}
