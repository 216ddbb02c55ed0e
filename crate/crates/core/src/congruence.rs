//! Congruences of finite semirings and semigroups.
//!
//! A congruence is an equivalence relation that is stable under every left
//! and right translation `x -> c op x`, `x -> x op c` of every operation.
//! Principal congruences are computed by union-find closure over a worklist
//! of merged pairs; every union that joins two classes enqueues its pair,
//! and each dequeued pair enqueues its translates. Since the pushed pairs
//! generate the equivalence, closing them under translations is enough.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::semiring::FiniteSemiring;
use crate::table::OpTable;

/// Largest order accepted by [`all_congruences`].
pub const ALL_CONGRUENCES_MAX_ORDER: usize = 16;

/// A partition of `{0, .., order-1}` with blocks numbered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_id: Vec<usize>,
    block_count: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let block_id = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Self {
            block_id,
            block_count: seen.len(),
        }
    }

    pub fn from_blocks(order: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; order];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= order {
                    return input(format!("element {x} is not below order {order}"));
                }
                if labels[x] != usize::MAX {
                    return input(format!("element {x} appears in two blocks"));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return input(format!("element {x} is in no block"));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn identity(order: usize) -> Self {
        Self {
            block_id: (0..order).collect(),
            block_count: order,
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            block_id: vec![0; order],
            block_count: 1,
        }
    }

    pub fn order(&self) -> usize {
        self.block_id.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_id[x]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block_id
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_id[x] == self.block_id[y]
    }

    pub fn is_identity(&self) -> bool {
        self.block_count == self.order()
    }

    pub fn is_full(&self) -> bool {
        self.block_count == 1
    }

    /// Blocks as sorted lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count];
        for (x, &b) in self.block_id.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        (0..self.order()).all(|x| {
            (x + 1..self.order()).all(|y| !self.same_block(x, y) || coarser.same_block(x, y))
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        let order = blocks.iter().map(Vec::len).sum();
        Partition::from_blocks(order, &blocks).map_err(serde::de::Error::custom)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            classes: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns true when two classes were merged.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        self.classes -= 1;
        true
    }

    fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// Smallest equivalence containing `seeds` that is stable under left and
/// right translations by every table in `ops`.
fn close(
    ops: &[&OpTable],
    order: usize,
    seeds: impl IntoIterator<Item = (usize, usize)>,
) -> Partition {
    let mut uf = UnionFind::new(order);
    let mut work = VecDeque::new();
    for (x, y) in seeds {
        if uf.union(x, y) {
            work.push_back((x, y));
        }
    }
    while let Some((x, y)) = work.pop_front() {
        if uf.classes == 1 {
            break;
        }
        for op in ops {
            for c in 0..order {
                for (u, v) in [(op.get(c, x), op.get(c, y)), (op.get(x, c), op.get(y, c))] {
                    if uf.union(u, v) {
                        work.push_back((u, v));
                    }
                }
            }
        }
    }
    uf.into_partition()
}

fn compatible(ops: &[&OpTable], p: &Partition) -> bool {
    let n = p.order();
    p.blocks().iter().all(|block| {
        block.iter().enumerate().all(|(i, &x1)| {
            block[i + 1..].iter().all(|&x2| {
                ops.iter().all(|op| {
                    (0..n).all(|c| {
                        p.same_block(op.get(c, x1), op.get(c, x2))
                            && p.same_block(op.get(x1, c), op.get(x2, c))
                    })
                })
            })
        })
    })
}

fn seeds_of(p: &Partition) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.blocks()
        .into_iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
}

/// A nontrivial congruence together with the pair that generates it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pair: (usize, usize),
    pub partition: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityReport {
    pub simple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn simplicity(ops: &[&OpTable], order: usize) -> SimplicityReport {
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|a| (a + 1..order).map(move |b| (a, b)))
        .collect();
    let witness = pairs.par_iter().find_map_first(|&(a, b)| {
        let p = close(ops, order, [(a, b)]);
        (!p.is_full()).then_some(Witness {
            pair: (a, b),
            partition: p,
        })
    });
    SimplicityReport {
        simple: witness.is_none(),
        witness,
    }
}

fn check_order(s: &FiniteSemiring, p: &Partition) -> Result<()> {
    if s.order() != p.order() {
        return Err(Error::OrderMismatch {
            left: s.order(),
            right: p.order(),
        });
    }
    Ok(())
}

/// Whether `p` is compatible with both operations of `s`.
pub fn is_congruence(s: &FiniteSemiring, p: &Partition) -> Result<bool> {
    check_order(s, p)?;
    Ok(compatible(&[s.add_table(), s.mul_table()], p))
}

/// The smallest congruence identifying `a` and `b`.
///
/// # Panics
///
/// If `a` or `b` is not an element of `s`.
pub fn principal_congruence(s: &FiniteSemiring, a: usize, b: usize) -> Partition {
    assert!(a < s.order() && b < s.order(), "element out of range");
    close(&[s.add_table(), s.mul_table()], s.order(), [(a, b)])
}

/// Smallest congruence coarser than both `p` and `q`.
pub fn join(s: &FiniteSemiring, p: &Partition, q: &Partition) -> Result<Partition> {
    check_order(s, p)?;
    check_order(s, q)?;
    Ok(close(
        &[s.add_table(), s.mul_table()],
        s.order(),
        seeds_of(p).chain(seeds_of(q)),
    ))
}

/// Decides congruence-simplicity. The witness, if any, is the principal
/// congruence of the lexicographically first pair that does not generate the
/// full relation.
pub fn is_congruence_simple(s: &FiniteSemiring) -> SimplicityReport {
    simplicity(&[s.add_table(), s.mul_table()], s.order())
}

/// Every congruence of `s`, sorted by block labelling.
pub fn all_congruences(s: &FiniteSemiring) -> Result<Vec<Partition>> {
    let n = s.order();
    if n > ALL_CONGRUENCES_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "all_congruences supports order <= {ALL_CONGRUENCES_MAX_ORDER}, got {n}"
        )));
    }
    let mut found: HashSet<Partition> = HashSet::new();
    found.insert(Partition::identity(n));
    for a in 0..n {
        for b in a + 1..n {
            found.insert(principal_congruence(s, a, b));
        }
    }
    let mut frontier: Vec<Partition> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<Partition> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for p in &frontier {
            for q in &current {
                let j = join(s, p, q)?;
                if !found.contains(&j) {
                    found.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Partition> = found.into_iter().collect();
    all.sort();
    Ok(all)
}

fn require_associative(mul: &OpTable) -> Result<()> {
    match mul.non_associative_triple() {
        Some(t) => input(format!("multiplication is not associative at {t:?}")),
        None => Ok(()),
    }
}

/// Whether `p` is a congruence of the semigroup `(S, mul)`.
pub fn is_semigroup_congruence(mul: &OpTable, p: &Partition) -> Result<bool> {
    if mul.order() != p.order() {
        return Err(Error::OrderMismatch {
            left: mul.order(),
            right: p.order(),
        });
    }
    Ok(compatible(&[mul], p))
}

/// Smallest semigroup congruence identifying `a` and `b`.
pub fn semigroup_principal_congruence(mul: &OpTable, a: usize, b: usize) -> Result<Partition> {
    require_associative(mul)?;
    if a >= mul.order() || b >= mul.order() {
        return input(format!("pair ({a}, {b}) out of range"));
    }
    Ok(close(&[mul], mul.order(), [(a, b)]))
}

pub fn is_congruence_free_semigroup(mul: &OpTable) -> Result<SimplicityReport> {
    require_associative(mul)?;
    Ok(simplicity(&[mul], mul.order()))
}

/// Smallest bi-ideal containing `x`: closed under `b+s`, `s+b`, `bs`, `sb`.
pub fn bi_ideal_closure(s: &FiniteSemiring, x: usize) -> BTreeSet<usize> {
    let n = s.order();
    let mut members = vec![false; n];
    members[x] = true;
    let mut work = vec![x];
    while let Some(b) = work.pop() {
        for c in 0..n {
            for y in [s.add(b, c), s.add(c, b), s.mul(b, c), s.mul(c, b)] {
                if !members[y] {
                    members[y] = true;
                    work.push(y);
                }
            }
        }
    }
    (0..n).filter(|&y| members[y]).collect()
}
