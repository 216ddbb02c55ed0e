//! Galois fields GF(q) for q <= 16.
//!
//! An element is a polynomial over F_p of degree < k, indexed by its
//! coefficients read as base-p digits with the constant term least
//! significant. Extension fields reduce modulo the first monic irreducible of
//! degree k when candidates are ordered lexicographically by coefficient
//! vector, constant term first.

use crate::error::{input, Result};
use crate::semiring::FiniteSemiring;
use crate::table::OpTable;

pub const FIELD_MAX_ORDER: usize = 16;

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `q = p^k` with `p` prime, if so.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over F_p; coefficients low-degree first.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Digits of `v` in base `p`, `len` of them, least significant first.
fn digits(mut v: usize, p: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let k = m.len() - 1;
    // any factorization has a monic factor of degree between 1 and k/2
    (1..=k / 2).all(|d| {
        (0..p.pow(d as u32)).all(|low| {
            let mut f = digits(low, p, d);
            f.push(1);
            poly_rem(m, &f, p).iter().any(|&c| c != 0)
        })
    })
}

/// Coefficients (constant term first, leading 1 included) of the modulus
/// used for GF(p^k).
pub fn field_modulus(p: usize, k: u32) -> Vec<usize> {
    let k = k as usize;
    // Enumerate low-degree-first lexicographic order: constant term is the most
    // significant position, so iterate the reversed digit vector.
    (0..p.pow(k as u32))
        .map(|v| {
            let mut c = digits(v, p, k);
            c.reverse();
            c.push(1);
            c
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn element_label(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// The field with `q` elements; element 0 is the zero and 1 the unit.
pub fn finite_field(q: usize) -> Result<FiniteSemiring> {
    let Some((p, k)) = prime_power(q) else {
        return input(format!("{q} is not a prime power"));
    };
    if q > FIELD_MAX_ORDER {
        return input(format!("field order {q} exceeds {FIELD_MAX_ORDER}"));
    }
    let len = k as usize;
    let modulus = field_modulus(p, k);
    let coeffs: Vec<Vec<usize>> = (0..q).map(|v| digits(v, p, len)).collect();
    let add = OpTable::from_fn(q, |x, y| {
        let sum: Vec<usize> = coeffs[x]
            .iter()
            .zip(&coeffs[y])
            .map(|(a, b)| (a + b) % p)
            .collect();
        from_digits(&sum, p)
    })?;
    let mul = OpTable::from_fn(q, |x, y| {
        let prod = poly_mul(&coeffs[x], &coeffs[y], p);
        let mut r = poly_rem(&prod, &modulus, p);
        r.resize(len, 0);
        from_digits(&r, p)
    })?;
    let labels = coeffs.iter().map(|c| element_label(c)).collect();
    FiniteSemiring::new(add, mul)?.with_labels(labels)
}
