use crate::error::{input, Error, Result};
use crate::semiring::FiniteSemiring;
use crate::table::{OpTable, MAX_ORDER};

use super::groups::GroupTable;

/// `V(G)`: the group with an adjoined infinity (last index), idempotent
/// addition and `x + y = ∞` for `x != y`.
pub fn v_of_group(g: &GroupTable) -> Result<FiniteSemiring> {
    if !g.table().is_group() {
        return input("V(G) needs a group table");
    }
    let n = g.order() + 1;
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("V(G) would have order {n}")));
    }
    let inf = n - 1;
    let add = OpTable::from_fn(n, |x, y| if x == y { x } else { inf })?;
    let mul = OpTable::from_fn(n, |x, y| {
        if x == inf || y == inf {
            inf
        } else {
            g.table().get(x, y)
        }
    })?;
    let mut labels: Vec<String> = (0..g.order()).map(|i| format!("g{i}")).collect();
    labels.push("∞".into());
    FiniteSemiring::new(add, mul)?.with_labels(labels)
}

/// Decodes a matrix index into its entries, row-major, with entry (0,0) the
/// most significant base-`b` digit.
pub fn matrix_entries(index: usize, base_order: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n * n];
    let mut v = index;
    for slot in out.iter_mut().rev() {
        *slot = v % base_order;
        v /= base_order;
    }
    out
}

pub fn matrix_index(entries: &[usize], base_order: usize) -> usize {
    entries.iter().fold(0, |acc, &e| acc * base_order + e)
}

/// `Mat_n(B)` with entrywise addition and row-by-column multiplication.
pub fn matrix_semiring(base: &FiniteSemiring, n: usize) -> Result<FiniteSemiring> {
    if n == 0 {
        return input("matrix size must be at least 1");
    }
    let b = base.order();
    let order = (b as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    if order > MAX_ORDER as u128 {
        return Err(Error::Capacity(format!(
            "Mat_{n} over an order-{b} semiring has {order} elements (cap {MAX_ORDER})"
        )));
    }
    let order = order as usize;
    let mats: Vec<Vec<usize>> = (0..order).map(|i| matrix_entries(i, b, n)).collect();
    let add = OpTable::from_fn(order, |x, y| {
        let sum: Vec<usize> = mats[x]
            .iter()
            .zip(&mats[y])
            .map(|(&u, &v)| base.add(u, v))
            .collect();
        matrix_index(&sum, b)
    })?;
    let mul = OpTable::from_fn(order, |x, y| {
        let (l, r) = (&mats[x], &mats[y]);
        let prod: Vec<usize> = (0..n * n)
            .map(|cell| {
                let (i, j) = (cell / n, cell % n);
                (0..n)
                    .map(|k| base.mul(l[i * n + k], r[k * n + j]))
                    .reduce(|acc, t| base.add(acc, t))
                    .expect("n >= 1")
            })
            .collect();
        matrix_index(&prod, b)
    })?;
    let s = FiniteSemiring::new(add, mul)?;
    let base_labels = base.labels();
    if n == 1 {
        return s.with_labels(base_labels);
    }
    let labels = mats
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .chunks(n)
                .map(|r| {
                    r.iter()
                        .map(|&e| base_labels[e].as_str())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            format!("[{}]", rows.join("; "))
        })
        .collect();
    s.with_labels(labels)
}

/// `Z_m` with every product zero.
pub fn zero_ring(m: usize) -> Result<FiniteSemiring> {
    if m == 0 || m > MAX_ORDER {
        return input(format!(
            "zero ring order must be in 1..={MAX_ORDER}, got {m}"
        ));
    }
    let add = OpTable::from_fn(m, |x, y| (x + y) % m)?;
    let mul = OpTable::constant(m, 0)?;
    let labels = (0..m).map(|i| i.to_string()).collect();
    FiniteSemiring::new(add, mul)?.with_labels(labels)
}
