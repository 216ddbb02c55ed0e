//! Assigns congruence-simple semirings to one of five structural cases and
//! re-checks the structure lemmas that lead there.
//!
//! Guards are tried in a fixed order: order at most 2, zero-multiplication
//! ring of prime order, matrix ring over a finite field, additively
//! idempotent, flat addition with a congruence-free product. A simple
//! semiring that matches none of them is reported as a theorem violation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::congruence::{is_congruence_free_semigroup, is_congruence_simple};
use crate::constructions::{
    finite_field, howie_semigroup, is_prime, matrix_semiring, prime_power, PMatrix, PMatrixFile,
};
use crate::error::{input, Error, Result};
use crate::iso::table_isomorphism;
use crate::semiring::{FiniteSemiring, Properties};
use crate::table::MAX_ORDER;

/// Largest `|I|·|Λ|` for which P-matrix recovery is attempted.
pub const P_RECOVERY_MAX_CELLS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case {
    OrderLe2,
    MatrixRing { n: usize, q: usize },
    ZeroMultPrime { p: usize },
    AdditivelyIdempotent,
    FlatCongruenceFree,
}

impl Case {
    pub fn label(&self) -> &'static str {
        match self {
            Case::OrderLe2 => "ORDER_LE_2",
            Case::MatrixRing { .. } => "MATRIX_RING",
            Case::ZeroMultPrime { .. } => "ZERO_MULT_PRIME",
            Case::AdditivelyIdempotent => "ADDITIVELY_IDEMPOTENT",
            Case::FlatCongruenceFree => "FLAT_CONGRUENCE_FREE",
        }
    }

    pub fn parameters(&self) -> BTreeMap<&'static str, usize> {
        match *self {
            Case::MatrixRing { n, q } => BTreeMap::from([("n", n), ("q", q)]),
            Case::ZeroMultPrime { p } => BTreeMap::from([("p", p)]),
            _ => BTreeMap::new(),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::MatrixRing { n, q } => write!(f, "MATRIX_RING({n}, {q})"),
            Case::ZeroMultPrime { p } => write!(f, "ZERO_MULT_PRIME({p})"),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evidence {
    /// `permutation[x]` is the matrix index of element `x` in `Mat_n(F_q)`.
    MatrixIsomorphism { permutation: Vec<usize> },
    /// `permutation[x]` is the index of `x` in the semigroup built from `pmatrix`.
    RecoveredPMatrix {
        pmatrix: PMatrixFile,
        permutation: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub case: Case,
    pub evidence: Option<Evidence>,
    pub properties_tested: BTreeMap<&'static str, bool>,
}

impl Serialize for ClassificationResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            case: &'static str,
            parameters: BTreeMap<&'static str, usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            evidence: Option<&'a Evidence>,
            properties_tested: &'a BTreeMap<&'static str, bool>,
        }
        Out {
            case: self.case.label(),
            parameters: self.case.parameters(),
            evidence: self.evidence.as_ref(),
            properties_tested: &self.properties_tested,
        }
        .serialize(s)
    }
}

/// `(n, q)` pairs with `q` a prime power field order and `q^(n²) = order`.
fn matrix_shapes(order: usize) -> Vec<(usize, usize)> {
    let mut shapes = Vec::new();
    for q in 2..=order {
        if prime_power(q).is_none() {
            continue;
        }
        let mut n = 1;
        loop {
            let size = (q as u128).pow((n * n) as u32);
            if size > order as u128 {
                break;
            }
            if size == order as u128 {
                shapes.push((n, q));
            }
            n += 1;
        }
    }
    shapes
}

/// Finds `(n, q, phi)` with `phi: s -> Mat_n(F_q)` an isomorphism.
pub fn matrix_ring_witness(s: &FiniteSemiring) -> Option<(usize, usize, Vec<usize>)> {
    if s.order() > MAX_ORDER {
        return None;
    }
    matrix_shapes(s.order()).into_iter().find_map(|(n, q)| {
        let field = finite_field(q).ok()?;
        let reference = matrix_semiring(&field, n).ok()?;
        let phi = table_isomorphism(
            &[s.add_table(), s.mul_table()],
            &[reference.add_table(), reference.mul_table()],
        )?;
        Some((n, q, phi))
    })
}

/// Searches valid P matrices with `|I|·|Λ| + 1 = |S|` for one whose semigroup is
/// isomorphic to `(S, ·)`.
pub fn recover_pmatrix(s: &FiniteSemiring) -> Option<(PMatrix, Vec<usize>)> {
    let cells = s.order().checked_sub(1)?;
    if cells == 0 || cells > P_RECOVERY_MAX_CELLS {
        return None;
    }
    for rows in 1..=cells {
        if cells % rows != 0 {
            continue;
        }
        let cols = cells / rows;
        for bits in 0u64..(1 << cells) {
            let entries = (0..rows)
                .map(|r| {
                    (0..cols)
                        .map(|c| ((bits >> (r * cols + c)) & 1) as u8)
                        .collect()
                })
                .collect();
            let Ok(p) = PMatrix::new(entries) else {
                continue;
            };
            let (table, _) = howie_semigroup(&p);
            if let Some(phi) = table_isomorphism(&[s.mul_table()], &[&table]) {
                return Some((p, phi));
            }
        }
    }
    None
}

fn require_simple(s: &FiniteSemiring) -> Result<()> {
    let report = is_congruence_simple(s);
    if let Some(w) = report.witness {
        return input(format!(
            "semiring is not congruence-simple: the pair {:?} generates {:?}",
            w.pair,
            w.partition.blocks()
        ));
    }
    Ok(())
}

fn violation(s: &FiniteSemiring, reason: impl Into<String>) -> Error {
    Error::TheoremViolation {
        reason: reason.into(),
        dump: s.to_json(),
    }
}

/// Classifies a congruence-simple semiring.
pub fn classify(s: &FiniteSemiring) -> Result<ClassificationResult> {
    require_simple(s)?;
    let n = s.order();
    let props = s.properties();
    let mut tested = BTreeMap::new();

    tested.insert("order_le_2", n <= 2);
    if n <= 2 {
        return Ok(ClassificationResult {
            case: Case::OrderLe2,
            evidence: None,
            properties_tested: tested,
        });
    }

    tested.insert("is_ring", props.is_ring);
    tested.insert("zero_multiplication", props.zero_multiplication);
    tested.insert("prime_order", is_prime(n));
    if props.is_ring && props.zero_multiplication && is_prime(n) {
        return Ok(ClassificationResult {
            case: Case::ZeroMultPrime { p: n },
            evidence: None,
            properties_tested: tested,
        });
    }
    if props.is_ring {
        let witness = matrix_ring_witness(s);
        tested.insert("matrix_ring", witness.is_some());
        return match witness {
            Some((mn, q, permutation)) => Ok(ClassificationResult {
                case: Case::MatrixRing { n: mn, q },
                evidence: Some(Evidence::MatrixIsomorphism { permutation }),
                properties_tested: tested,
            }),
            None => Err(violation(
                s,
                "simple ring is not isomorphic to any Mat_n(F_q)",
            )),
        };
    }

    tested.insert("additively_idempotent", props.additively_idempotent);
    if props.additively_idempotent {
        return Ok(ClassificationResult {
            case: Case::AdditivelyIdempotent,
            evidence: None,
            properties_tested: tested,
        });
    }

    tested.insert("trivial_addition", props.trivial_addition);
    let free = is_congruence_free_semigroup(s.mul_table())?.simple;
    tested.insert("multiplication_congruence_free", free);
    if props.trivial_addition && free {
        let evidence = recover_pmatrix(s).map(|(p, permutation)| Evidence::RecoveredPMatrix {
            pmatrix: p.to_file(),
            permutation,
        });
        tested.insert("pmatrix_recovered", evidence.is_some());
        return Ok(ClassificationResult {
            case: Case::FlatCongruenceFree,
            evidence,
            properties_tested: tested,
        });
    }
    Err(violation(s, "no classification case applies"))
}

/// Outcome of one structure-lemma check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub claim: &'static str,
    /// False when the claim's hypothesis does not hold, making it vacuous.
    pub applicable: bool,
    pub passed: bool,
    /// Which alternative of the conclusion holds, or the counterexample.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub all_passed: bool,
    pub checks: Vec<LemmaCheck>,
}

fn identical_lines(s: &FiniteSemiring) -> Option<String> {
    let n = s.order();
    let mul = s.mul_table();
    for a in 0..n {
        for b in a + 1..n {
            if mul.row(a).eq(mul.row(b)) {
                return Some(format!("rows {a} and {b} coincide"));
            }
            if mul.column(a).eq(mul.column(b)) {
                return Some(format!("columns {a} and {b} coincide"));
            }
        }
    }
    None
}

fn first_of(options: &[(bool, &str)]) -> Option<String> {
    options
        .iter()
        .find(|(ok, _)| *ok)
        .map(|(_, name)| name.to_string())
}

fn check(
    claim: &'static str,
    applicable: bool,
    outcome: Option<String>,
    failure: String,
) -> LemmaCheck {
    match (applicable, outcome) {
        (false, _) => LemmaCheck {
            claim,
            applicable,
            passed: true,
            detail: "hypothesis not met".into(),
        },
        (true, Some(branch)) => LemmaCheck {
            claim,
            applicable,
            passed: true,
            detail: branch,
        },
        (true, None) => LemmaCheck {
            claim,
            applicable,
            passed: false,
            detail: failure,
        },
    }
}

/// Re-checks the structure lemmas on a congruence-simple semiring:
/// (a) repeated product rows or columns force a constant product or order <= 2;
/// (b) `(S,+)` is a group or has an absorbing element;
/// (c) ring, infinity, or additively idempotent;
/// (d) with a zero: matrix ring, prime zero-multiplication ring, or idempotent;
/// (e) with infinity and order > 2: idempotent, or flat addition with a
///     congruence-free product.
pub fn verify_structure_theorems(s: &FiniteSemiring) -> Result<StructureReport> {
    require_simple(s)?;
    let n = s.order();
    let p: Properties = s.properties();
    let sp = s.special_elements();
    let constant_mul = {
        let first = s.mul(0, 0);
        s.mul_table()
            .as_bytes()
            .iter()
            .all(|&e| e as usize == first)
    };

    let repeated = identical_lines(s);
    let a = check(
        "repeated-lines",
        repeated.is_some(),
        first_of(&[
            (constant_mul, "constant multiplication"),
            (n <= 2, "order <= 2"),
        ]),
        format!(
            "{}; multiplication not constant and order {n}",
            repeated.clone().unwrap_or_default()
        ),
    );

    let b = check(
        "group-or-absorbing",
        true,
        first_of(&[
            (p.is_ring, "(S,+) is a group"),
            (
                sp.additively_absorbing.is_some(),
                "additively absorbing element",
            ),
        ]),
        "(S,+) is not a group and has no absorbing element".into(),
    );

    let c = check(
        "ring-infinity-idempotent",
        true,
        first_of(&[
            (p.is_ring, "ring"),
            (sp.infinity.is_some(), "infinity"),
            (p.additively_idempotent, "additively idempotent"),
        ]),
        "neither a ring, nor has infinity, nor additively idempotent".into(),
    );

    let d = if sp.zero.is_some() {
        let matrix = p.is_ring && matrix_ring_witness(s).is_some();
        check(
            "zero-case",
            true,
            first_of(&[
                (matrix, "matrix ring over a finite field"),
                (
                    p.zero_multiplication && is_prime(n),
                    "zero-multiplication ring of prime order",
                ),
                (p.additively_idempotent, "additively idempotent"),
            ]),
            "has a zero but is no matrix ring, prime zero ring, or idempotent semiring".into(),
        )
    } else {
        check("zero-case", false, None, String::new())
    };

    let e = if sp.infinity.is_some() && n > 2 {
        let free = is_congruence_free_semigroup(s.mul_table())?.simple;
        check(
            "infinity-case",
            true,
            first_of(&[
                (p.additively_idempotent, "additively idempotent"),
                (p.trivial_addition && free, "trivial addition, congruence-free multiplication"),
            ]),
            format!(
                "has infinity, order {n}, not idempotent; trivial addition = {}, congruence-free = {free}",
                p.trivial_addition
            ),
        )
    } else {
        check("infinity-case", false, None, String::new())
    };

    let checks = vec![a, b, c, d, e];
    Ok(StructureReport {
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
