//! Cayley tables of binary operations on `{0, .., n-1}`.

use crate::error::{input, Result};

/// Largest supported element count. Element indices fit in a byte.
pub const MAX_ORDER: usize = 256;

/// A binary operation on `{0, .., order-1}`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    order: usize,
    entries: Vec<u8>,
}

impl OpTable {
    /// Builds a table from row-major entries, checking the order cap and
    /// that every entry is an element index.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return input(format!("order must be in 1..={MAX_ORDER}, got {order}"));
        }
        if entries.len() != order * order {
            return input(format!(
                "table of order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            ));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= order) {
            return input(format!(
                "entry {} at row {}, column {} is not below order {order}",
                entries[pos],
                pos / order,
                pos % order
            ));
        }
        Ok(Self {
            order,
            entries: entries.into_iter().map(|e| e as u8).collect(),
        })
    }

    /// Builds a table from a list of rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return input(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                ));
            }
        }
        Self::new(order, rows.concat())
    }

    /// Tabulates `f` over all pairs.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                entries.push(f(x, y));
            }
        }
        Self::new(order, entries)
    }

    /// The table whose every entry is `c`.
    pub fn constant(order: usize, c: usize) -> Result<Self> {
        Self::from_fn(order, |_, _| c)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y] as usize
    }

    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.entries[x * self.order..(x + 1) * self.order]
            .iter()
            .map(|&e| e as usize)
    }

    pub fn column(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).map(move |x| self.get(x, y))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).collect()).collect()
    }

    /// Raw row-major entries.
    pub fn as_bytes(&self) -> &[u8] {
        &self.entries
    }

    pub(crate) fn from_bytes(order: usize, bytes: &[u8]) -> Result<Self> {
        Self::new(order, bytes.iter().map(|&b| b as usize).collect())
    }

    /// `x*y = y*x` for all pairs.
    pub fn is_commutative(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != self.get(y, x))
    }

    pub fn is_associative(&self) -> bool {
        self.non_associative_triple().is_none()
    }

    /// First triple `(a, b, c)` with `(ab)c != a(bc)`.
    pub fn non_associative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// The table with its arguments swapped: `x op' y = y op x`.
    pub fn transpose(&self) -> Self {
        Self {
            order: self.order,
            entries: (0..self.order)
                .flat_map(|x| (0..self.order).map(move |y| (x, y)))
                .map(|(x, y)| self.get(y, x) as u8)
                .collect(),
        }
    }

    /// The element `e` with `e*x = x*e = e` for all `x`, if any.
    pub fn absorbing(&self) -> Option<usize> {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.get(e, x) == e && self.get(x, e) == e))
    }

    /// The element `e` with `e*x = x*e = x` for all `x`, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// Whether the operation makes the carrier a group.
    pub fn is_group(&self) -> bool {
        let Some(e) = self.identity() else {
            return false;
        };
        self.is_associative()
            && (0..self.order)
                .all(|x| (0..self.order).any(|y| self.get(x, y) == e && self.get(y, x) == e))
    }

    /// Relabels elements by `perm`: the result maps `(perm[x], perm[y])` to `perm[x op y]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order;
        let mut entries = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.get(x, y)] as u8;
            }
        }
        Self { order: n, entries }
    }
}

/// Renders a Cayley table with a header row and a header column of labels.
pub fn render(symbol: &str, table: &OpTable, labels: &[String]) -> String {
    let width = labels
        .iter()
        .map(|l| l.chars().count())
        .chain(std::iter::once(symbol.chars().count()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{symbol:>width$} |"));
    for l in labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 1));
    out.push('+');
    out.push_str(&"-".repeat((width + 1) * labels.len()));
    out.push('\n');
    for x in 0..table.order() {
        out.push_str(&format!("{:>width$} |", labels[x]));
        for v in table.row(x) {
            out.push_str(&format!(" {:>width$}", labels[v]));
        }
        out.push('\n');
    }
    out
}
