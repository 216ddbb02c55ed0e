//! Finite semirings with commutative addition, their axioms and distinguished elements.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::table::{render, OpTable};

/// The axioms checked by [`validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
        };
        f.write_str(s)
    }
}

/// A failed axiom with the first witness found in lexicographic order.
///
/// For [`Axiom::AddCommutative`] only the first two components matter and the
/// third repeats the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks that `(add, mul)` forms a semiring with commutative addition.
pub fn validate(add: &OpTable, mul: &OpTable) -> Result<AxiomReport> {
    let n = add.order();
    if mul.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: mul.order(),
        });
    }
    let mut violations = Vec::new();
    if let Some((a, b)) = add.non_commuting_pair() {
        violations.push(Violation {
            axiom: Axiom::AddCommutative,
            witness: (a, b, b),
        });
    }
    if let Some(w) = add.non_associative_triple() {
        violations.push(Violation {
            axiom: Axiom::AddAssociative,
            witness: w,
        });
    }
    if let Some(w) = mul.non_associative_triple() {
        violations.push(Violation {
            axiom: Axiom::MulAssociative,
            witness: w,
        });
    }
    let triples =
        || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    if let Some(w) = triples()
        .find(|&(a, b, c)| mul.get(a, add.get(b, c)) != add.get(mul.get(a, b), mul.get(a, c)))
    {
        violations.push(Violation {
            axiom: Axiom::LeftDistributive,
            witness: w,
        });
    }
    if let Some(w) = triples()
        .find(|&(a, b, c)| mul.get(add.get(a, b), c) != add.get(mul.get(a, c), mul.get(b, c)))
    {
        violations.push(Violation {
            axiom: Axiom::RightDistributive,
            witness: w,
        });
    }
    Ok(AxiomReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// A finite semiring with commutative addition.
///
/// Elements are the indices `0..order`; labels only affect display.
/// Construction always validates, so every value of this type satisfies the
/// semiring axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemiring {
    add: OpTable,
    mul: OpTable,
    labels: Option<Vec<String>>,
}

impl FiniteSemiring {
    pub fn new(add: OpTable, mul: OpTable) -> Result<Self> {
        let report = validate(&add, &mul)?;
        if !report.valid {
            let listed: Vec<String> = report
                .violations
                .iter()
                .map(|v| format!("{} at {:?}", v.axiom, v.witness))
                .collect();
            return input(format!("not a semiring: {}", listed.join("; ")));
        }
        Ok(Self {
            add,
            mul,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return input(format!(
                "labels: expected {} labels, got {}",
                self.order(),
                labels.len()
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    /// Display labels, defaulting to `e0`, `e1`, ...
    pub fn labels(&self) -> Vec<String> {
        match &self.labels {
            Some(l) => l.clone(),
            None => (0..self.order()).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn has_custom_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn without_labels(&self) -> Self {
        Self {
            labels: None,
            ..self.clone()
        }
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); l.len()];
            for (x, label) in l.iter().enumerate() {
                out[perm[x]] = label.clone();
            }
            out
        });
        Self {
            add: self.add.permuted(perm),
            mul: self.mul.permuted(perm),
            labels,
        }
    }

    /// The reciprocal semiring: same addition, `x * y := y * x`.
    pub fn opposite(&self) -> Self {
        Self {
            add: self.add.clone(),
            mul: self.mul.transpose(),
            labels: self.labels.clone(),
        }
    }

    /// Sum of a nonempty set of elements.
    pub fn sigma(&self, elements: impl IntoIterator<Item = usize>) -> Result<usize> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= self.order()) {
            return input(format!("element {x} is not below order {}", self.order()));
        }
        set.into_iter()
            .reduce(|acc, x| self.add(acc, x))
            .ok_or_else(|| Error::Input("sigma of an empty set".into()))
    }

    pub fn special_elements(&self) -> SpecialElements {
        SpecialElements::of(self)
    }

    pub fn properties(&self) -> Properties {
        Properties::of(self)
    }

    /// Parses the JSON interchange format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SemiringFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_file(&self) -> SemiringFile {
        SemiringFile {
            order: self.order(),
            add: self.add.rows(),
            mul: self.mul.rows(),
            labels: self.labels.clone(),
        }
    }

    /// Serializes to the JSON interchange format (single line).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("semiring serializes")
    }

    /// Both Cayley tables in row-header style.
    pub fn render_tables(&self) -> String {
        let labels = self.labels();
        format!(
            "{}\n{}",
            render("+", &self.add, &labels),
            render("·", &self.mul, &labels)
        )
    }
}

/// On-disk representation: `{"order", "add", "mul", "labels"?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn table_from_key(key: &str, order: usize, rows: &[Vec<usize>]) -> Result<OpTable> {
    if rows.len() != order {
        return input(format!("{key}: expected {order} rows, got {}", rows.len()));
    }
    OpTable::from_rows(rows).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{key}: {msg}")),
        other => other,
    })
}

impl SemiringFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Checks the table shapes and returns `(add, mul)` without checking axioms.
    pub fn tables(&self) -> Result<(OpTable, OpTable)> {
        if self.order == 0 {
            return input("order: must be at least 1");
        }
        Ok((
            table_from_key("add", self.order, &self.add)?,
            table_from_key("mul", self.order, &self.mul)?,
        ))
    }
}

impl TryFrom<SemiringFile> for FiniteSemiring {
    type Error = Error;

    fn try_from(file: SemiringFile) -> Result<Self> {
        let (add, mul) = file.tables()?;
        let s = FiniteSemiring::new(add, mul)?;
        match file.labels {
            Some(labels) => s.with_labels(labels),
            None => Ok(s),
        }
    }
}

/// Distinguished elements; each is unique when present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialElements {
    pub additive_identity: Option<usize>,
    pub zero: Option<usize>,
    pub additively_absorbing: Option<usize>,
    pub multiplicatively_absorbing: Option<usize>,
    pub multiplicative_identity: Option<usize>,
    pub infinity: Option<usize>,
}

fn unique(candidates: impl Iterator<Item = usize>, what: &str) -> Option<usize> {
    let found: Vec<usize> = candidates.collect();
    assert!(found.len() <= 1, "two distinct {what}: {found:?}");
    found.first().copied()
}

impl SpecialElements {
    pub fn of(s: &FiniteSemiring) -> Self {
        let n = s.order();
        let all = || 0..n;
        let additive_identity = unique(
            all().filter(|&e| all().all(|x| s.add(e, x) == x && s.add(x, e) == x)),
            "additive identities",
        );
        let additively_absorbing = unique(
            all().filter(|&e| all().all(|x| s.add(e, x) == e && s.add(x, e) == e)),
            "additively absorbing elements",
        );
        let multiplicatively_absorbing = unique(
            all().filter(|&e| all().all(|x| s.mul(e, x) == e && s.mul(x, e) == e)),
            "multiplicatively absorbing elements",
        );
        let multiplicative_identity = unique(
            all().filter(|&e| all().all(|x| s.mul(e, x) == x && s.mul(x, e) == x)),
            "multiplicative identities",
        );
        let zero = additive_identity.filter(|&o| multiplicatively_absorbing == Some(o));
        let infinity = additively_absorbing.filter(|&a| multiplicatively_absorbing == Some(a));
        Self {
            additive_identity,
            zero,
            additively_absorbing,
            multiplicatively_absorbing,
            multiplicative_identity,
            infinity,
        }
    }
}

/// Three-valued answer for properties defined only under a precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    True,
    False,
    NotApplicable,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub additively_idempotent: bool,
    /// Defined only when an additive identity exists.
    pub zero_sum_free: Tri,
    /// A zero exists and every product is zero.
    pub zero_multiplication: bool,
    /// `(S,+)` is an abelian group.
    pub is_ring: bool,
    /// An infinity exists and every sum is infinity.
    pub trivial_addition: bool,
    pub multiplicatively_commutative: bool,
}

impl Properties {
    pub fn of(s: &FiniteSemiring) -> Self {
        let n = s.order();
        let sp = s.special_elements();
        let additively_idempotent = (0..n).all(|x| s.add(x, x) == x);
        let zero_sum_free = match sp.additive_identity {
            None => Tri::NotApplicable,
            Some(o) => (0..n)
                .all(|a| (0..n).all(|b| s.add(a, b) != o || (a == o && b == o)))
                .into(),
        };
        let zero_multiplication = sp
            .zero
            .is_some_and(|z| (0..n).all(|x| (0..n).all(|y| s.mul(x, y) == z)));
        let trivial_addition = sp
            .infinity
            .is_some_and(|inf| (0..n).all(|x| (0..n).all(|y| s.add(x, y) == inf)));
        Self {
            additively_idempotent,
            zero_sum_free,
            zero_multiplication,
            is_ring: s.add_table().is_group(),
            trivial_addition,
            multiplicatively_commutative: s.mul_table().is_commutative(),
        }
    }
}
