//! Exhaustive enumeration of small semirings with commutative addition.
//!
//! The search is layered. First every commutative semigroup `(S,+)` of the
//! given order is generated up to isomorphism. For each of them the product
//! table is then filled one row at a time: left distributivity says that
//! every row `x -> a*x` is an endomorphism of `(S,+)`, so rows are drawn from
//! the precomputed endomorphism list. After each row, right distributivity
//! and associativity are checked on every triple whose entries are all known.
//! Results are deduplicated by canonical form at the end and emitted sorted
//! by canonical bytes.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::congruence::is_congruence_simple;
use crate::error::{Error, Result};
use crate::iso::{canonical_form, canonical_tables, CanonicalForm};
use crate::semiring::FiniteSemiring;
use crate::table::OpTable;

/// Largest order accepted by the enumerators.
pub const ENUMERATION_MAX_ORDER: usize = 4;

#[derive(Clone, Debug)]
pub struct EnumerationJob {
    pub order: usize,
    pub csimple_only: bool,
    pub commutative_only: bool,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl EnumerationJob {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            csimple_only: false,
            commutative_only: false,
            node_budget: None,
            time_budget: None,
        }
    }

    pub fn csimple_only(mut self, yes: bool) -> Self {
        self.csimple_only = yes;
        self
    }

    pub fn commutative_only(mut self, yes: bool) -> Self {
        self.commutative_only = yes;
        self
    }
}

fn guard(n: usize) -> Result<()> {
    if n == 0 || n > ENUMERATION_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "enumeration supports orders 1..={ENUMERATION_MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// All commutative associative tables of order `n`, one per isomorphism
/// class, each in canonical labelling, sorted by its bytes.
pub fn enumerate_additions(n: usize) -> Result<Vec<OpTable>> {
    guard(n)?;
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut table = vec![usize::MAX; n * n];
    let mut classes: BTreeMap<Vec<u8>, OpTable> = BTreeMap::new();

    fn associative_so_far(t: &[usize], n: usize) -> bool {
        for a in 0..n {
            for b in 0..n {
                let ab = t[a * n + b];
                if ab == usize::MAX {
                    continue;
                }
                for c in 0..n {
                    let bc = t[b * n + c];
                    if bc == usize::MAX {
                        continue;
                    }
                    let (l, r) = (t[ab * n + c], t[a * n + bc]);
                    if l != usize::MAX && r != usize::MAX && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        table: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<u8>, OpTable>,
    ) {
        if k == cells.len() {
            let t = OpTable::new(n, table.clone()).expect("entries in range");
            let (_, bytes) = canonical_tables(&[&t]);
            out.entry(bytes.clone())
                .or_insert_with(|| OpTable::from_bytes(n, &bytes).expect("canonical bytes"));
            return;
        }
        let (i, j) = cells[k];
        for v in 0..n {
            table[i * n + j] = v;
            table[j * n + i] = v;
            if associative_so_far(table, n) {
                fill(k + 1, cells, n, table, out);
            }
        }
        table[i * n + j] = usize::MAX;
        table[j * n + i] = usize::MAX;
    }

    fill(0, &cells, n, &mut table, &mut classes);
    Ok(classes.into_values().collect())
}

/// Maps `f` with `f(x + y) = f(x) + f(y)`.
pub fn additive_endomorphisms(add: &OpTable) -> Vec<Vec<usize>> {
    let n = add.order();
    let total = n.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut f = vec![0; n];
            let mut c = code;
            for slot in f.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            f
        })
        .filter(|f| (0..n).all(|x| (0..n).all(|y| f[add.get(x, y)] == add.get(f[x], f[y]))))
        .collect()
}

struct Budget {
    nodes: AtomicU64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
}

impl Budget {
    fn tick(&self) -> bool {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = self.limit.is_some_and(|l| used > l)
            || (used.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d));
        if over {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }
}

struct RowSearch<'a> {
    n: usize,
    add: &'a OpTable,
    endos: Vec<Vec<usize>>,
    commutative_only: bool,
    budget: &'a Budget,
}

impl RowSearch<'_> {
    /// Checks every constraint whose entries lie in rows `0..=last`.
    fn consistent(&self, rows: &[&[usize]], last: usize) -> bool {
        let n = self.n;
        let known = |x: usize| x <= last;
        for a in 0..=last {
            for b in 0..=last {
                let ab = rows[a][b];
                if self.commutative_only && b <= last && rows[b][a] != ab {
                    return false;
                }
                // right distributivity: (a+b)c = ac + bc
                let s = self.add.get(a, b);
                if known(s) && (0..n).any(|c| rows[s][c] != self.add.get(rows[a][c], rows[b][c])) {
                    return false;
                }
                // associativity: (ab)c = a(bc)
                if known(ab) {
                    for c in 0..n {
                        if rows[ab][c] != rows[a][rows[b][c]] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&self, chosen: &mut Vec<usize>, found: &mut Vec<OpTable>) -> bool {
        if !self.budget.tick() {
            return false;
        }
        let depth = chosen.len();
        if depth == self.n {
            let entries = chosen
                .iter()
                .flat_map(|&e| self.endos[e].iter().copied())
                .collect();
            found.push(OpTable::new(self.n, entries).expect("entries in range"));
            return true;
        }
        for e in 0..self.endos.len() {
            chosen.push(e);
            let rows: Vec<&[usize]> = chosen.iter().map(|&i| self.endos[i].as_slice()).collect();
            if self.consistent(&rows, depth) && !self.run(chosen, found) {
                return false;
            }
            chosen.pop();
        }
        true
    }
}

/// All semirings with the given addition (not deduplicated).
fn products_for(add: &OpTable, commutative_only: bool, budget: &Budget) -> Option<Vec<OpTable>> {
    let search = RowSearch {
        n: add.order(),
        add,
        endos: additive_endomorphisms(add),
        commutative_only,
        budget,
    };
    let mut found = Vec::new();
    search
        .run(&mut Vec::with_capacity(add.order()), &mut found)
        .then_some(found)
}

/// Enumerates semirings of `job.order` up to isomorphism.
pub fn enumerate_semirings(job: &EnumerationJob) -> Result<Vec<FiniteSemiring>> {
    enumerate_semirings_with_progress(job, &|_, _| {})
}

/// As [`enumerate_semirings`], calling `progress(done, total)` after each
/// addition table finishes.
pub fn enumerate_semirings_with_progress(
    job: &EnumerationJob,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<Vec<FiniteSemiring>> {
    let additions = enumerate_additions(job.order)?;
    let total = additions.len();
    let budget = Budget {
        nodes: AtomicU64::new(0),
        limit: job.node_budget,
        deadline: job.time_budget.map(|d| Instant::now() + d),
        exhausted: AtomicBool::new(false),
    };
    let done = AtomicUsize::new(0);
    let per_addition: Vec<Option<Vec<(CanonicalForm, FiniteSemiring)>>> = additions
        .par_iter()
        .map(|add| {
            let products = products_for(add, job.commutative_only, &budget)?;
            let mut classes = BTreeMap::new();
            for mul in products {
                let s = FiniteSemiring::new(add.clone(), mul).expect("search only emits semirings");
                classes.entry(canonical_form(&s)).or_insert(s);
            }
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            progress(finished, total);
            Some(classes.into_iter().collect())
        })
        .collect();

    if budget.exhausted.load(Ordering::Relaxed) || per_addition.iter().any(Option::is_none) {
        return Err(Error::Budget {
            nodes: budget.nodes.load(Ordering::Relaxed),
            completed: per_addition.iter().filter(|r| r.is_some()).count(),
            total,
        });
    }

    let mut all: BTreeMap<CanonicalForm, FiniteSemiring> = BTreeMap::new();
    for (cf, s) in per_addition.into_iter().flatten().flatten() {
        all.entry(cf).or_insert(s);
    }
    let mut out = Vec::with_capacity(all.len());
    for (cf, _) in all {
        let s = cf.to_semiring()?;
        if job.csimple_only && !is_congruence_simple(&s).simple {
            continue;
        }
        out.push(s);
    }
    Ok(out)
}
