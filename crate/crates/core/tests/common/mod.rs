//! Brute-force reference implementations shared by the integration tests.
//! None of them call into the search code they are compared against.

#![allow(dead_code)]

use semiring_core::congruence::Partition;
use semiring_core::enumerate::{enumerate_semirings, EnumerationJob};
use semiring_core::{FiniteSemiring, OpTable};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically least `add ‖ mul` bytes over every relabeling.
pub fn brute_canonical(add: &OpTable, mul: &OpTable) -> Vec<u8> {
    let n = add.order();
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut inv = vec![0; n];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            let mut bytes = Vec::with_capacity(2 * n * n);
            for t in [add, mul] {
                for i in 0..n {
                    for j in 0..n {
                        bytes.push(perm[t.get(inv[i], inv[j])] as u8);
                    }
                }
            }
            bytes
        })
        .min()
        .unwrap()
}

/// Every set partition of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Partition> {
    fn go(labels: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
        if labels.len() == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        let next = labels.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            labels.push(l);
            go(labels, n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Direct check of the four compatibility conditions.
pub fn brute_is_congruence(s: &FiniteSemiring, p: &Partition) -> bool {
    let n = s.order();
    (0..n).all(|x1| {
        (0..n).all(|x2| {
            !p.same_block(x1, x2)
                || (0..n).all(|c| {
                    p.same_block(s.add(c, x1), s.add(c, x2))
                        && p.same_block(s.add(x1, c), s.add(x2, c))
                        && p.same_block(s.mul(c, x1), s.mul(c, x2))
                        && p.same_block(s.mul(x1, c), s.mul(x2, c))
                })
        })
    })
}

/// The finest congruence with `a ~ b`, found by scanning every set partition.
pub fn brute_min_congruence(s: &FiniteSemiring, a: usize, b: usize) -> Partition {
    let candidates: Vec<Partition> = set_partitions(s.order())
        .into_iter()
        .filter(|p| p.same_block(a, b) && brute_is_congruence(s, p))
        .collect();
    let minimal: Vec<&Partition> = candidates
        .iter()
        .filter(|p| {
            candidates
                .iter()
                .all(|q| p.refines(q) || !q.refines(p) || *p == q)
        })
        .collect();
    // congruences containing (a, b) are closed under intersection, so the minimum is unique
    assert_eq!(minimal.len(), 1);
    minimal[0].clone()
}

pub fn semigroup_brute_is_congruence(mul: &OpTable, p: &Partition) -> bool {
    let n = mul.order();
    (0..n).all(|x1| {
        (0..n).all(|x2| {
            !p.same_block(x1, x2)
                || (0..n).all(|c| {
                    p.same_block(mul.get(c, x1), mul.get(c, x2))
                        && p.same_block(mul.get(x1, c), mul.get(x2, c))
                })
        })
    })
}

/// Every additively commutative semiring of orders `1..=max` up to isomorphism.
pub fn corpus(max: usize) -> Vec<FiniteSemiring> {
    (1..=max)
        .flat_map(|n| enumerate_semirings(&EnumerationJob::new(n)).unwrap())
        .collect()
}

fn all_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |code| {
        let mut c = code;
        let entries = (0..cells)
            .map(|_| {
                let d = c % n;
                c /= n;
                d
            })
            .collect();
        OpTable::new(n, entries).unwrap()
    })
}

fn distributive(add: &OpTable, mul: &OpTable) -> bool {
    let n = add.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                mul.get(a, add.get(b, c)) == add.get(mul.get(a, b), mul.get(a, c))
                    && mul.get(add.get(a, b), c) == add.get(mul.get(a, c), mul.get(b, c))
            })
        })
    })
}

/// Canonical bytes of every additively commutative semiring of order `n`,
/// by filtering all labelled table pairs.
pub fn brute_semiring_classes(n: usize) -> std::collections::BTreeSet<Vec<u8>> {
    let semigroups: Vec<OpTable> = all_tables(n).filter(|t| t.is_associative()).collect();
    let additions: Vec<&OpTable> = semigroups.iter().filter(|t| t.is_commutative()).collect();
    let mut classes = std::collections::BTreeSet::new();
    for add in &additions {
        for mul in &semigroups {
            if distributive(add, mul) {
                classes.insert(brute_canonical(add, mul));
            }
        }
    }
    classes
}
