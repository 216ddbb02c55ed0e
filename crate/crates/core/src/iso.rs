//! Isomorphism testing and canonical forms for finite algebras given by
//! Cayley tables.
//!
//! Both searches restrict candidate images with a per-element invariant
//! vector. The vector lists, in this order: absorber flags, identity flags,
//! idempotency flags, then label-free statistics of each element's rows and
//! columns. Sorting by it puts absorbers first, idempotents next.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;
use crate::table::OpTable;

/// Largest order for which [`canonical_form`] minimizes over relabelings.
pub const CANONICAL_MAX_ORDER: usize = 8;

fn profile(values: impl Iterator<Item = usize>, order: usize) -> Vec<u32> {
    let mut counts = vec![0u32; order];
    for v in values {
        counts[v] += 1;
    }
    let mut nonzero: Vec<u32> = counts.into_iter().filter(|&c| c > 0).collect();
    nonzero.sort_unstable();
    nonzero
}

/// Invariant vector of every element with respect to `tables`.
pub fn invariant_vectors(tables: &[&OpTable]) -> Vec<Vec<u32>> {
    let n = tables[0].order();
    (0..n)
        .map(|x| {
            let mut key = Vec::new();
            let all = || 0..n;
            for t in tables {
                let absorbing = all().all(|y| t.get(x, y) == x && t.get(y, x) == x);
                key.push(u32::from(!absorbing));
            }
            for t in tables {
                let identity = all().all(|y| t.get(x, y) == y && t.get(y, x) == y);
                key.push(u32::from(!identity));
            }
            for t in tables {
                key.push(u32::from(t.get(x, x) != x));
            }
            for t in tables {
                key.push(all().filter(|&y| t.get(x, y) == x).count() as u32);
                key.push(all().filter(|&y| t.get(y, x) == x).count() as u32);
                key.push(t.as_bytes().iter().filter(|&&e| e as usize == x).count() as u32);
                let row = profile(t.row(x), n);
                key.push(row.len() as u32);
                key.extend(row);
                let col = profile(t.column(x), n);
                key.push(col.len() as u32);
                key.extend(col);
            }
            key
        })
        .collect()
}

fn maps_tables(a: &[&OpTable], b: &[&OpTable], phi: &[usize]) -> bool {
    let n = phi.len();
    a.iter()
        .zip(b)
        .all(|(ta, tb)| (0..n).all(|x| (0..n).all(|y| phi[ta.get(x, y)] == tb.get(phi[x], phi[y]))))
}

struct Search<'a> {
    a: &'a [&'a OpTable],
    b: &'a [&'a OpTable],
    key_a: Vec<Vec<u32>>,
    key_b: Vec<Vec<u32>>,
    order: Vec<usize>,
}

#[derive(Clone)]
struct State {
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x -> y` and everything it forces; false on contradiction.
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((u, v)) = queue.pop() {
            match st.map[u] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            if st.used[v] || self.key_a[u] != self.key_b[v] {
                return false;
            }
            st.map[u] = Some(v);
            st.used[v] = true;
            st.assigned.push(u);
            for i in 0..st.assigned.len() {
                let w = st.assigned[i];
                let w_img = st.map[w].unwrap();
                for (ta, tb) in self.a.iter().zip(self.b) {
                    for (src, img) in [
                        (ta.get(u, w), tb.get(v, w_img)),
                        (ta.get(w, u), tb.get(w_img, v)),
                    ] {
                        match st.map[src] {
                            Some(m) if m != img => return false,
                            Some(_) => {}
                            None => queue.push((src, img)),
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&self, st: State) -> Option<Vec<usize>> {
        let Some(&x) = self.order.iter().find(|&&x| st.map[x].is_none()) else {
            let phi: Vec<usize> = st.map.iter().map(|m| m.unwrap()).collect();
            return maps_tables(self.a, self.b, &phi).then_some(phi);
        };
        for y in 0..st.used.len() {
            if st.used[y] || self.key_a[x] != self.key_b[y] {
                continue;
            }
            let mut next = st.clone();
            if self.assign(&mut next, x, y) {
                if let Some(phi) = self.run(next) {
                    return Some(phi);
                }
            }
        }
        None
    }
}

/// A bijection `phi` with `phi(x op y) = phi(x) op' phi(y)` for each paired
/// table, or `None`.
pub fn table_isomorphism(a: &[&OpTable], b: &[&OpTable]) -> Option<Vec<usize>> {
    assert_eq!(a.len(), b.len(), "table lists differ in length");
    let n = a[0].order();
    if a.iter().chain(b).any(|t| t.order() != n) {
        return None;
    }
    let key_a = invariant_vectors(a);
    let key_b = invariant_vectors(b);
    let mut sa = key_a.clone();
    let mut sb = key_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let class_size = |k: &Vec<u32>| key_a.iter().filter(|o| *o == k).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (class_size(&key_a[x]), x));
    let search = Search {
        a,
        b,
        key_a,
        key_b,
        order,
    };
    search.run(State {
        map: vec![None; n],
        used: vec![false; n],
        assigned: Vec::new(),
    })
}

/// An isomorphism `s1 -> s2` as the list of images, or `None`.
pub fn are_isomorphic(s1: &FiniteSemiring, s2: &FiniteSemiring) -> Option<Vec<usize>> {
    table_isomorphism(
        &[s1.add_table(), s1.mul_table()],
        &[s2.add_table(), s2.mul_table()],
    )
}

/// Canonical representative bytes (`add ‖ mul` after relabeling), or a weaker
/// fingerprint above [`CANONICAL_MAX_ORDER`] with `exact` unset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    #[serde(with = "hex_bytes")]
    pub bytes: Vec<u8>,
    pub exact: bool,
}

mod hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(b: &[u8], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&hex::encode(b))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        hex::decode(s).map_err(serde::de::Error::custom)
    }
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        hex::encode(&self.bytes)
    }

    /// Rebuilds the canonical representative (exact forms only).
    pub fn to_semiring(&self) -> Result<FiniteSemiring> {
        let n = self.order;
        if !self.exact {
            return Err(Error::Input(
                "fingerprint does not determine a semiring".into(),
            ));
        }
        if self.bytes.len() != 2 * n * n {
            return Err(Error::Input(format!(
                "canonical form of order {n} needs {} bytes, got {}",
                2 * n * n,
                self.bytes.len()
            )));
        }
        let (add, mul) = self.bytes.split_at(n * n);
        FiniteSemiring::new(OpTable::from_bytes(n, add)?, OpTable::from_bytes(n, mul)?)
    }
}

/// Relabeling `perm` (old -> new) that yields the lexicographically least
/// concatenated tables over all `n!` relabelings, together with those bytes.
///
/// New labels are handed out in increasing order; a partial assignment is
/// abandoned as soon as the cells it already determines exceed the best
/// bytes found so far.
pub fn canonical_tables(tables: &[&OpTable]) -> (Vec<usize>, Vec<u8>) {
    let n = tables[0].order();
    let mut search = CanonicalSearch {
        tables,
        n,
        perm: vec![usize::MAX; n],
        inv: Vec::with_capacity(n),
        best: None,
        scratch: Vec::with_capacity(tables.len() * n * n),
    };
    search.recurse();
    search.best.expect("at least one relabeling")
}

struct CanonicalSearch<'a> {
    tables: &'a [&'a OpTable],
    n: usize,
    /// old -> new, `usize::MAX` while unassigned
    perm: Vec<usize>,
    /// new -> old for the labels handed out so far
    inv: Vec<usize>,
    best: Option<(Vec<usize>, Vec<u8>)>,
    scratch: Vec<u8>,
}

impl CanonicalSearch<'_> {
    /// False when the partial relabeling cannot beat the current best.
    fn promising(&self) -> bool {
        let Some((_, best)) = &self.best else {
            return true;
        };
        let (n, k) = (self.n, self.inv.len());
        let mut pos = 0;
        for t in self.tables {
            for i in 0..n {
                for j in 0..n {
                    if i >= k || j >= k {
                        return true;
                    }
                    let b = best[pos] as usize;
                    match self.perm[t.get(self.inv[i], self.inv[j])] {
                        usize::MAX => return k <= b,
                        v if v < b => return true,
                        v if v > b => return false,
                        _ => {}
                    }
                    pos += 1;
                }
            }
        }
        true
    }

    fn recurse(&mut self) {
        let n = self.n;
        let k = self.inv.len();
        if k == n {
            self.scratch.clear();
            for t in self.tables {
                for i in 0..n {
                    for j in 0..n {
                        self.scratch
                            .push(self.perm[t.get(self.inv[i], self.inv[j])] as u8);
                    }
                }
            }
            if self.best.as_ref().is_none_or(|(_, b)| self.scratch < *b) {
                self.best = Some((self.perm.clone(), self.scratch.clone()));
            }
            return;
        }
        for old in 0..n {
            if self.perm[old] != usize::MAX {
                continue;
            }
            self.perm[old] = k;
            self.inv.push(old);
            if self.promising() {
                self.recurse();
            }
            self.inv.pop();
            self.perm[old] = usize::MAX;
        }
    }
}

pub fn canonical_form(s: &FiniteSemiring) -> CanonicalForm {
    let n = s.order();
    let tables = [s.add_table(), s.mul_table()];
    if n <= CANONICAL_MAX_ORDER {
        let (_, bytes) = canonical_tables(&tables);
        return CanonicalForm {
            order: n,
            bytes,
            exact: true,
        };
    }
    let mut keys = invariant_vectors(&tables);
    keys.sort();
    let bytes = keys
        .iter()
        .flat_map(|k| k.iter().flat_map(|v| v.to_be_bytes()))
        .collect();
    CanonicalForm {
        order: n,
        bytes,
        exact: false,
    }
}
