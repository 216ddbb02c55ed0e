//! Congruence-free semigroups with zero built from 0/1 sandwich matrices, and
//! the semirings obtained by giving them the flat addition `x + y = ∞`.

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::semiring::FiniteSemiring;
use crate::table::{OpTable, MAX_ORDER};

/// A 0/1 matrix with no zero row or column and no repeated row or column.
///
/// Rows are indexed by Λ and columns by I, so the product rule reads
/// `entry(λ, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PMatrix {
    entries: Vec<Vec<bool>>,
}

/// JSON form: `{"rows": n, "cols": m, "entries": [[0/1, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PMatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u8>>,
}

impl PMatrix {
    pub fn new(entries: Vec<Vec<u8>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return input("P matrix must have at least one row and one column");
        }
        if let Some(r) = entries.iter().position(|r| r.len() != cols) {
            return input(format!(
                "P matrix row {r} has {} entries, expected {cols}",
                entries[r].len()
            ));
        }
        if entries.iter().flatten().any(|&e| e > 1) {
            return input("P matrix entries must be 0 or 1");
        }
        if rows * cols + 1 > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "a {rows}x{cols} P matrix gives order {} (cap {MAX_ORDER})",
                rows * cols + 1
            )));
        }
        let entries: Vec<Vec<bool>> = entries
            .into_iter()
            .map(|r| r.into_iter().map(|e| e == 1).collect())
            .collect();
        let columns: Vec<Vec<bool>> = (0..cols)
            .map(|j| entries.iter().map(|r| r[j]).collect())
            .collect();
        if let Some(r) = entries.iter().position(|r| r.iter().all(|&e| !e)) {
            return input(format!(
                "row {r} is identically zero (no row or column may be identically zero)"
            ));
        }
        if let Some(c) = columns.iter().position(|c| c.iter().all(|&e| !e)) {
            return input(format!(
                "column {c} is identically zero (no row or column may be identically zero)"
            ));
        }
        if let Some((a, b)) = first_duplicate(&entries) {
            return input(format!(
                "rows {a} and {b} are equal (no two rows are identical)"
            ));
        }
        if let Some((a, b)) = first_duplicate(&columns) {
            return input(format!(
                "columns {a} and {b} are equal (no two columns are identical)"
            ));
        }
        Ok(Self { entries })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PMatrixFile = serde_json::from_str(text)?;
        if file.entries.len() != file.rows {
            return input(format!(
                "entries: expected {} rows, got {}",
                file.rows,
                file.entries.len()
            ));
        }
        if let Some(r) = file.entries.iter().position(|r| r.len() != file.cols) {
            return input(format!(
                "entries: row {r} has {} entries, expected {}",
                file.entries[r].len(),
                file.cols
            ));
        }
        Self::new(file.entries)
    }

    pub fn to_file(&self) -> PMatrixFile {
        PMatrixFile {
            rows: self.rows(),
            cols: self.cols(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&e| e as u8).collect())
                .collect(),
        }
    }

    /// |Λ|
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    /// |I|
    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, lambda: usize, j: usize) -> bool {
        self.entries[lambda][j]
    }

    /// Order of the semigroup built from this matrix, `|I|·|Λ| + 1`.
    pub fn semigroup_order(&self) -> usize {
        self.rows() * self.cols() + 1
    }
}

fn first_duplicate(lines: &[Vec<bool>]) -> Option<(usize, usize)> {
    (0..lines.len())
        .flat_map(|a| (a + 1..lines.len()).map(move |b| (a, b)))
        .find(|&(a, b)| lines[a] == lines[b])
}

/// Every valid P matrix with `1..=max_rows` rows and `1..=max_cols` columns.
pub fn valid_pmatrices(max_rows: usize, max_cols: usize) -> Vec<PMatrix> {
    let mut out = Vec::new();
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            let cells = rows * cols;
            for bits in 0u64..(1 << cells) {
                let entries = (0..rows)
                    .map(|r| {
                        (0..cols)
                            .map(|c| ((bits >> (r * cols + c)) & 1) as u8)
                            .collect()
                    })
                    .collect();
                if let Ok(p) = PMatrix::new(entries) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// The semigroup on `(I x Λ) ∪ {∞}` with `(i,λ)(j,μ) = (i,μ)` when
/// `P[λ][j] = 1` and `∞` otherwise. `(i,λ)` is index `i·|Λ| + λ`; `∞` is the
/// last index, which is returned alongside the table.
pub fn howie_semigroup(p: &PMatrix) -> (OpTable, usize) {
    let n = p.rows();
    let inf = p.semigroup_order() - 1;
    let table = OpTable::from_fn(inf + 1, |x, y| {
        if x == inf || y == inf {
            return inf;
        }
        let (i, lambda) = (x / n, x % n);
        let (j, mu) = (y / n, y % n);
        if p.get(lambda, j) {
            i * n + mu
        } else {
            inf
        }
    })
    .expect("order checked by PMatrix");
    (table, inf)
}

pub fn howie_labels(p: &PMatrix) -> Vec<String> {
    let n = p.rows();
    let mut labels: Vec<String> = (0..p.rows() * p.cols())
        .map(|x| format!("({},{})", x / n + 1, x % n + 1))
        .collect();
    labels.push("∞".into());
    labels
}

/// Equips a semigroup with absorbing element `absorbing` with `x + y = absorbing`.
pub fn flat_semiring(mul: &OpTable, absorbing: usize) -> Result<FiniteSemiring> {
    if absorbing >= mul.order() {
        return input(format!("absorbing element {absorbing} out of range"));
    }
    if let Some(t) = mul.non_associative_triple() {
        return input(format!("multiplication is not associative at {t:?}"));
    }
    if let Some(x) = (0..mul.order())
        .find(|&x| mul.get(x, absorbing) != absorbing || mul.get(absorbing, x) != absorbing)
    {
        return input(format!("element {absorbing} does not absorb {x}"));
    }
    FiniteSemiring::new(OpTable::constant(mul.order(), absorbing)?, mul.clone())
}

/// `flat_semiring(howie_semigroup(p))` with labels.
pub fn flat_howie(p: &PMatrix) -> Result<FiniteSemiring> {
    let (mul, inf) = howie_semigroup(p);
    flat_semiring(&mul, inf)?.with_labels(howie_labels(p))
}
