mod common;

use std::collections::BTreeSet;

use common::*;
use semiring_core::congruence::{
    all_congruences, bi_ideal_closure, is_congruence, is_congruence_free_semigroup,
    semigroup_principal_congruence,
};
use semiring_core::constructions::{
    builtin, finite_field, flat_howie, howie_semigroup, matrix_semiring, small_groups, v_of_group,
    valid_pmatrices, zero_ring, GroupTable, BUILTIN_NAMES,
};
use semiring_core::enumerate::{enumerate_semirings, EnumerationJob};
use semiring_core::{
    are_isomorphic, canonical_form, is_congruence_simple, principal_congruence, FiniteSemiring,
    OpTable,
};

/// Group tables on `0..n` with identity 0, by Latin-square backtracking.
fn brute_groups(n: usize) -> Vec<OpTable> {
    fn fill(cells: &mut Vec<usize>, n: usize, out: &mut Vec<OpTable>) {
        let pos = cells.iter().position(|&c| c == usize::MAX);
        let Some(pos) = pos else {
            let t = OpTable::new(n, cells.clone()).unwrap();
            if t.is_associative() {
                out.push(t);
            }
            return;
        };
        let (r, c) = (pos / n, pos % n);
        for v in 0..n {
            let clash = (0..n).any(|k| cells[r * n + k] == v || cells[k * n + c] == v);
            if !clash {
                cells[pos] = v;
                fill(cells, n, out);
                cells[pos] = usize::MAX;
            }
        }
    }
    let mut cells = vec![usize::MAX; n * n];
    for x in 0..n {
        cells[x] = x;
        cells[x * n] = x;
    }
    let mut out = Vec::new();
    fill(&mut cells, n, &mut out);
    out
}

fn brute_group_classes(n: usize) -> BTreeSet<Vec<u8>> {
    brute_groups(n)
        .iter()
        .map(|t| {
            permutations(n)
                .into_iter()
                .map(|perm| t.permuted(&perm).as_bytes().to_vec())
                .min()
                .unwrap()
        })
        .collect()
}

#[test]
fn group_census_matches_latin_square_search() {
    for n in 1..=6 {
        let classes = brute_group_classes(n);
        let groups = small_groups(n).unwrap();
        assert_eq!(groups.len(), classes.len(), "order {n}");
        let ours: BTreeSet<Vec<u8>> = groups
            .iter()
            .map(|g| {
                permutations(n)
                    .into_iter()
                    .map(|perm| g.table().permuted(&perm).as_bytes().to_vec())
                    .min()
                    .unwrap()
            })
            .collect();
        assert_eq!(ours, classes, "order {n}");
    }
}

#[test]
fn order_two_enumeration_matches_exhaustive_filter() {
    let brute = brute_semiring_classes(2);
    let ours: BTreeSet<Vec<u8>> = enumerate_semirings(&EnumerationJob::new(2))
        .unwrap()
        .iter()
        .map(|s| canonical_form(s).bytes)
        .collect();
    assert_eq!(brute.len(), 10);
    assert_eq!(ours, brute);
}

#[test]
fn order_three_enumeration_matches_exhaustive_filter() {
    let brute = brute_semiring_classes(3);
    let ours: Vec<Vec<u8>> = enumerate_semirings(&EnumerationJob::new(3))
        .unwrap()
        .iter()
        .map(|s| canonical_form(s).bytes)
        .collect();
    let ours_set: BTreeSet<Vec<u8>> = ours.iter().cloned().collect();
    assert_eq!(ours.len(), ours_set.len(), "duplicate classes emitted");
    assert_eq!(ours_set, brute);
}

#[test]
fn canonical_form_agrees_with_full_relabeling_search() {
    for s in corpus(4) {
        assert_eq!(
            canonical_form(&s).bytes,
            brute_canonical(s.add_table(), s.mul_table())
        );
    }
}

#[test]
fn simplicity_filter_matches_brute_force_congruences() {
    for n in 1..=3 {
        let all = enumerate_semirings(&EnumerationJob::new(n)).unwrap();
        let simple: BTreeSet<Vec<u8>> =
            enumerate_semirings(&EnumerationJob::new(n).csimple_only(true))
                .unwrap()
                .iter()
                .map(|s| canonical_form(s).bytes)
                .collect();
        let brute: BTreeSet<Vec<u8>> = all
            .iter()
            .filter(|s| {
                set_partitions(n)
                    .iter()
                    .filter(|p| brute_is_congruence(s, p))
                    .count()
                    <= 2
            })
            .map(|s| canonical_form(s).bytes)
            .collect();
        assert_eq!(simple, brute, "order {n}");
    }
}

#[test]
fn congruence_lattice_matches_partition_scan() {
    for s in corpus(4) {
        let brute: BTreeSet<_> = set_partitions(s.order())
            .into_iter()
            .filter(|p| brute_is_congruence(&s, p))
            .collect();
        let ours: BTreeSet<_> = all_congruences(&s).unwrap().into_iter().collect();
        assert_eq!(ours, brute);
        for p in set_partitions(s.order()) {
            assert_eq!(is_congruence(&s, &p).unwrap(), brute.contains(&p));
        }
    }
}

#[test]
fn principal_congruences_on_constructions() {
    let mut samples: Vec<FiniteSemiring> =
        BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect();
    samples.push(v_of_group(&GroupTable::cyclic(3).unwrap()).unwrap());
    samples.push(zero_ring(4).unwrap());
    samples.push(finite_field(4).unwrap());
    samples.push(flat_howie(&valid_pmatrices(2, 2)[0]).unwrap());
    for s in &samples {
        for a in 0..s.order() {
            for b in a + 1..s.order() {
                assert_eq!(principal_congruence(s, a, b), brute_min_congruence(s, a, b));
            }
        }
    }
}

#[test]
fn matrix_ring_over_f2_is_simple_on_every_pair() {
    let m = matrix_semiring(&finite_field(2).unwrap(), 2).unwrap();
    assert_eq!(m.order(), 16);
    for a in 0..16 {
        for b in a + 1..16 {
            assert!(principal_congruence(&m, a, b).is_full(), "pair ({a}, {b})");
        }
    }
}

#[test]
fn matrices_over_v_of_trivial_group_have_a_proper_congruence() {
    let base = v_of_group(&GroupTable::cyclic(1).unwrap()).unwrap();
    let m = matrix_semiring(&base, 2).unwrap();
    let report = is_congruence_simple(&m);
    assert!(!report.simple);
    let w = report.witness.unwrap();
    assert!(brute_is_congruence(&m, &w.partition));
    assert!(!w.partition.is_full() && !w.partition.is_identity());
    assert!(w.partition.same_block(w.pair.0, w.pair.1));
}

#[test]
fn zero_rings_are_simple_exactly_at_primes() {
    for m in 1..=8 {
        let z = zero_ring(m).unwrap();
        let brute = set_partitions(m)
            .iter()
            .filter(|p| brute_is_congruence(&z, p))
            .count()
            <= 2
            && m > 1;
        let prime = (2..m).all(|d| m % d != 0) && m > 1;
        assert_eq!(brute, prime, "m = {m}");
        assert_eq!(
            is_congruence_simple(&z).simple || m == 1,
            prime || m == 1,
            "m = {m}"
        );
    }
    for m in 9..=12 {
        let prime = (2..m).all(|d| m % d != 0);
        assert_eq!(
            is_congruence_simple(&zero_ring(m).unwrap()).simple,
            prime,
            "m = {m}"
        );
    }
}

#[test]
fn howie_semigroups_have_no_proper_congruence() {
    for p in valid_pmatrices(2, 3)
        .into_iter()
        .chain(valid_pmatrices(3, 2))
    {
        let (mul, _) = howie_semigroup(&p);
        let n = mul.order();
        if n > 7 {
            continue;
        }
        let proper = set_partitions(n)
            .iter()
            .filter(|q| semigroup_brute_is_congruence(&mul, q))
            .count();
        assert_eq!(proper, 2, "{p:?}");
        assert!(is_congruence_free_semigroup(&mul).unwrap().simple);
        for a in 0..n {
            for b in a + 1..n {
                assert!(semigroup_principal_congruence(&mul, a, b)
                    .unwrap()
                    .is_full());
            }
        }
    }
}

#[test]
fn field_tables_satisfy_field_axioms() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = finite_field(q).unwrap();
        assert!(f.add_table().is_group());
        let units: Vec<usize> = (1..q).collect();
        for &a in &units {
            assert!(
                units.iter().any(|&b| f.mul(a, b) == 1),
                "GF({q}): {a} has no inverse"
            );
        }
        assert!(f.mul_table().is_commutative());
        assert!(is_congruence_simple(&f).simple);
    }
}

#[test]
fn bi_ideal_closure_matches_direct_fixpoint() {
    for s in corpus(3) {
        let n = s.order();
        for x in 0..n {
            let mut set = BTreeSet::from([x]);
            loop {
                let mut next = set.clone();
                for &a in &set {
                    for y in 0..n {
                        next.extend([s.add(a, y), s.add(y, a), s.mul(a, y), s.mul(y, a)]);
                    }
                }
                if next == set {
                    break;
                }
                set = next;
            }
            assert_eq!(bi_ideal_closure(&s, x), set);
        }
    }
}

#[test]
fn flat_howie_semirings_are_simple() {
    for p in valid_pmatrices(2, 2) {
        let s = flat_howie(&p).unwrap();
        let count = set_partitions(s.order())
            .iter()
            .filter(|q| brute_is_congruence(&s, q))
            .count();
        assert_eq!(count, 2);
    }
}

#[test]
fn isomorphism_search_agrees_with_relabeling_search() {
    let c = corpus(3);
    for a in &c {
        for b in &c {
            let brute = brute_canonical(a.add_table(), a.mul_table())
                == brute_canonical(b.add_table(), b.mul_table());
            assert_eq!(are_isomorphic(a, b).is_some(), brute);
        }
    }
}
