use crate::error::{input, Result};
use crate::semiring::FiniteSemiring;
use crate::table::OpTable;

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 9] = ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "W3"];

const ZERO2: [[usize; 2]; 2] = [[0, 0], [0, 0]];
const ONE2: [[usize; 2]; 2] = [[1, 1], [1, 1]];
const MIN2: [[usize; 2]; 2] = [[0, 0], [0, 1]];
const MAX2: [[usize; 2]; 2] = [[0, 1], [1, 1]];
const XOR2: [[usize; 2]; 2] = [[0, 1], [1, 0]];

fn rows<const N: usize>(t: &[[usize; N]; N]) -> Vec<Vec<usize>> {
    t.iter().map(|r| r.to_vec()).collect()
}

/// The commutative order-2 semirings `T1`..`T8`, and `W3`, an additively
/// idempotent congruence-simple semiring of order 3 with elements `a, 1, b`.
pub fn builtin(name: &str) -> Result<FiniteSemiring> {
    let (add, mul) = match name.to_ascii_uppercase().as_str() {
        "T1" => (ZERO2, ZERO2),
        "T2" => (ZERO2, MIN2),
        "T3" => (MIN2, ZERO2),
        "T4" => (MIN2, ONE2),
        "T5" => (MIN2, MAX2),
        "T6" => (MIN2, MIN2),
        "T7" => (XOR2, ZERO2),
        "T8" => (XOR2, MIN2),
        "W3" => {
            let add = [[0, 1, 2], [1, 1, 2], [2, 2, 2]];
            let mul = [[0, 0, 2], [0, 1, 2], [0, 2, 2]];
            let s = FiniteSemiring::new(
                OpTable::from_rows(&rows(&add))?,
                OpTable::from_rows(&rows(&mul))?,
            )?;
            return s.with_labels(vec!["a".into(), "1".into(), "b".into()]);
        }
        _ => {
            return input(format!(
                "unknown built-in semiring '{name}' (expected T1..T8 or W3)"
            ))
        }
    };
    FiniteSemiring::new(
        OpTable::from_rows(&rows(&add))?,
        OpTable::from_rows(&rows(&mul))?,
    )?
    .with_labels(vec!["0".into(), "1".into()])
}
