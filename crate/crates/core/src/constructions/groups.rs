//! Small finite groups given by multiplication tables.

use crate::error::{input, Error, Result};
use crate::table::OpTable;

/// Largest order covered by [`small_groups`].
pub const SMALL_GROUPS_MAX_ORDER: usize = 8;

/// A finite group with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    mul: OpTable,
}

impl GroupTable {
    /// Wraps a table after checking the group axioms.
    pub fn new(name: impl Into<String>, mul: OpTable) -> Result<Self> {
        if !mul.is_group() {
            return input("table is not a group (needs associativity, identity and inverses)");
        }
        Ok(Self {
            name: name.into(),
            mul,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    pub fn table(&self) -> &OpTable {
        &self.mul
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return input("cyclic group needs n >= 1");
        }
        Self::new(format!("z{n}"), OpTable::from_fn(n, |x, y| (x + y) % n)?)
    }

    /// `A x B` with `(a, b)` encoded as `a * |B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<Self> {
        let nb = b.order();
        let mul = OpTable::from_fn(a.order() * nb, |x, y| {
            a.mul.get(x / nb, y / nb) * nb + b.mul.get(x % nb, y % nb)
        })?;
        Self::new(format!("{}x{}", a.name, b.name), mul)
    }

    /// Symmetries of a regular `k`-gon, order `2k`; `r^i s^j` is encoded as `j*k + i`.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k == 0 {
            return input("dihedral group needs k >= 1");
        }
        let mul = OpTable::from_fn(2 * k, |x, y| {
            let (i, a) = (x % k, x / k);
            let (j, b) = (y % k, y / k);
            let rot = if a == 0 { (i + j) % k } else { (i + k - j) % k };
            ((a + b) % 2) * k + rot
        })?;
        let name = if k == 3 {
            "s3".to_string()
        } else {
            format!("d{k}")
        };
        Self::new(name, mul)
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`, encoded as `4*sign + unit`.
    pub fn quaternion() -> Result<Self> {
        // unit product: (sign, unit) for units 1, i, j, k
        fn unit(u: usize, v: usize) -> (usize, usize) {
            match (u, v) {
                (0, v) => (0, v),
                (u, 0) => (0, u),
                (u, v) if u == v => (1, 0),
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        }
        let mul = OpTable::from_fn(8, |x, y| {
            let (s, u) = unit(x % 4, y % 4);
            ((x / 4 + y / 4 + s) % 2) * 4 + u
        })?;
        Self::new("q8", mul)
    }

    /// Looks a group up by its short name (`z1`..`z8`, `klein4`, `s3`,
    /// `z2xz4`, `z2xz2xz2`, `d4`, `q8`).
    pub fn by_name(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        if let Some(n) = lower
            .strip_prefix('z')
            .and_then(|r| r.parse::<usize>().ok())
        {
            if (1..=SMALL_GROUPS_MAX_ORDER).contains(&n) {
                return Self::cyclic(n);
            }
        }
        let z2 = Self::cyclic(2)?;
        match lower.as_str() {
            "klein4" | "v4" | "z2xz2" => {
                let mut g = Self::direct_product(&z2, &z2)?;
                g.name = "klein4".into();
                Ok(g)
            }
            "s3" | "d3" => Self::dihedral(3),
            "z2xz4" => Self::direct_product(&z2, &Self::cyclic(4)?),
            "z2xz2xz2" => Self::direct_product(&z2, &Self::direct_product(&z2, &z2)?),
            "d4" => Self::dihedral(4),
            "q8" => Self::quaternion(),
            _ => input(format!("unknown group '{name}'")),
        }
    }
}

/// All groups of order `n` up to isomorphism.
pub fn small_groups(n: usize) -> Result<Vec<GroupTable>> {
    let names: &[&str] = match n {
        1 => &["z1"],
        2 => &["z2"],
        3 => &["z3"],
        4 => &["z4", "klein4"],
        5 => &["z5"],
        6 => &["z6", "s3"],
        7 => &["z7"],
        8 => &["z8", "z2xz4", "z2xz2xz2", "d4", "q8"],
        _ => {
            return Err(Error::Capacity(format!(
                "small_groups supports orders 1..={SMALL_GROUPS_MAX_ORDER}, got {n}"
            )))
        }
    };
    names.iter().map(|name| GroupTable::by_name(name)).collect()
}
