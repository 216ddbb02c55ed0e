mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use semiring_core::catalog::{catalog_from_str, catalog_to_string, CatalogEntry, Provenance};
use semiring_core::classify::{classify, Case, Evidence};
use semiring_core::congruence::{
    all_congruences, bi_ideal_closure, is_congruence, join, Partition,
};
use semiring_core::constructions::{
    builtin, finite_field, flat_howie, howie_semigroup, matrix_semiring, small_groups, v_of_group,
    valid_pmatrices, zero_ring, PMatrix, BUILTIN_NAMES,
};
use semiring_core::iso::{invariant_vectors, table_isomorphism};
use semiring_core::semiring::Tri;
use semiring_core::{
    are_isomorphic, canonical_form, is_congruence_simple, principal_congruence, validate,
    FiniteSemiring,
};

fn corpus4() -> &'static [FiniteSemiring] {
    static CORPUS: OnceLock<Vec<FiniteSemiring>> = OnceLock::new();
    CORPUS.get_or_init(|| common::corpus(4))
}

fn constructed() -> Vec<FiniteSemiring> {
    let mut out: Vec<FiniteSemiring> = BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect();
    for n in 1..=6 {
        for g in small_groups(n).unwrap() {
            out.push(v_of_group(&g).unwrap());
        }
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        out.push(finite_field(q).unwrap());
    }
    for m in 1..=12 {
        out.push(zero_ring(m).unwrap());
    }
    for p in valid_pmatrices(3, 3) {
        out.push(flat_howie(&p).unwrap());
    }
    out.push(matrix_semiring(&finite_field(2).unwrap(), 2).unwrap());
    out
}

fn is_verified_iso(a: &FiniteSemiring, b: &FiniteSemiring, phi: &[usize]) -> bool {
    let n = a.order();
    let distinct: BTreeSet<_> = phi.iter().collect();
    distinct.len() == n
        && (0..n).all(|x| {
            (0..n).all(|y| {
                phi[a.add(x, y)] == b.add(phi[x], phi[y])
                    && phi[a.mul(x, y)] == b.mul(phi[x], phi[y])
            })
        })
}

#[test]
fn every_construction_validates() {
    for s in constructed().iter().chain(corpus4()) {
        assert!(validate(s.add_table(), s.mul_table()).unwrap().valid);
    }
}

#[test]
fn nontrivial_rings_are_not_zero_sum_free() {
    for s in constructed().iter().chain(corpus4()) {
        let p = s.properties();
        if p.is_ring && s.order() > 1 {
            assert_ne!(p.zero_sum_free, Tri::True);
        }
    }
}

#[test]
fn sigma_is_additive_over_disjoint_sets() {
    for s in corpus4() {
        let n = s.order();
        let members = |mask: u32| (0..n).filter(move |x| mask & (1 << x) != 0);
        for a in 1u32..(1 << n) {
            for b in 1u32..(1 << n) {
                if a & b != 0 {
                    continue;
                }
                let whole = s.sigma(members(a | b)).unwrap();
                let parts = s.add(s.sigma(members(a)).unwrap(), s.sigma(members(b)).unwrap());
                assert_eq!(whole, parts);
            }
        }
    }
}

#[test]
fn opposite_keeps_additive_structure_and_simplicity() {
    for s in corpus4() {
        let op = s.opposite();
        assert_eq!(op.order(), s.order());
        assert_eq!(op.opposite().mul_table(), s.mul_table());
        let (a, b) = (s.special_elements(), op.special_elements());
        assert_eq!(a.additive_identity, b.additive_identity);
        assert_eq!(a.additively_absorbing, b.additively_absorbing);
        assert_eq!(a.multiplicatively_absorbing, b.multiplicatively_absorbing);
        assert_eq!(a.zero, b.zero);
        assert_eq!(a.infinity, b.infinity);
        if s.order() <= 3 {
            assert_eq!(
                is_congruence_simple(s).simple,
                is_congruence_simple(&op).simple
            );
        }
    }
}

#[test]
fn simplicity_is_exactly_two_congruences() {
    for s in corpus4().iter().filter(|s| s.order() <= 3) {
        let count = all_congruences(s).unwrap().len();
        let expected = if s.order() == 1 { 1 } else { 2 };
        assert_eq!(is_congruence_simple(s).simple, count == expected);
    }
}

#[test]
fn witnesses_are_proper_congruences() {
    for s in corpus4().iter().chain(&constructed()) {
        if let Some(w) = is_congruence_simple(s).witness {
            assert!(is_congruence(s, &w.partition).unwrap());
            assert!(!w.partition.is_identity() && !w.partition.is_full());
            assert_eq!(w.partition, principal_congruence(s, w.pair.0, w.pair.1));
        }
    }
}

#[test]
fn bi_ideal_closures_of_simple_semirings_are_trivial() {
    let simple: Vec<FiniteSemiring> = corpus4()
        .iter()
        .filter(|s| s.order() <= 3)
        .cloned()
        .chain(constructed())
        .filter(|s| is_congruence_simple(s).simple)
        .collect();
    assert!(simple.len() > 50);
    for s in &simple {
        for x in 0..s.order() {
            let closure = bi_ideal_closure(s, x);
            assert!(closure.len() == 1 || closure.len() == s.order(), "x = {x}");
            assert!(closure.contains(&x));
        }
    }
}

fn relation_partition(n: usize, related: impl Fn(usize, usize) -> bool) -> Partition {
    for x in 0..n {
        for y in 0..n {
            assert_eq!(related(x, y), related(y, x), "not symmetric");
            for z in 0..n {
                if related(x, y) && related(y, z) {
                    assert!(related(x, z), "not transitive");
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| related(x, y)).unwrap())
        .collect();
    Partition::from_labels(&labels)
}

#[test]
fn equal_right_translates_form_a_congruence() {
    for s in corpus4() {
        let n = s.order();
        let p = relation_partition(n, |x, y| (0..n).all(|z| s.mul(x, z) == s.mul(y, z)));
        assert!(is_congruence(s, &p).unwrap());
        let q = relation_partition(n, |x, y| (0..n).all(|z| s.mul(z, x) == s.mul(z, y)));
        assert!(is_congruence(s, &q).unwrap());
    }
}

#[test]
fn eventually_equal_sums_form_a_congruence() {
    for s in corpus4() {
        let n = s.order();
        let p = relation_partition(n, |x, y| (0..n).any(|t| s.add(x, t) == s.add(y, t)));
        assert!(is_congruence(s, &p).unwrap());
    }
}

#[test]
fn canonical_forms_separate_exactly_the_isomorphism_classes() {
    let c = corpus4();
    let forms: Vec<_> = c.iter().map(canonical_form).collect();
    let distinct: BTreeSet<_> = forms.iter().collect();
    assert_eq!(distinct.len(), c.len());
    let keys: Vec<Vec<Vec<u32>>> = c
        .iter()
        .map(|s| {
            let mut k = invariant_vectors(&[s.add_table(), s.mul_table()]);
            k.sort();
            k
        })
        .collect();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[i].order() == c[j].order() && keys[i] == keys[j] {
                assert!(are_isomorphic(&c[i], &c[j]).is_none());
            }
        }
    }
}

#[test]
fn recovered_pmatrices_rebuild_the_product() {
    let pms: Vec<PMatrix> = valid_pmatrices(3, 3)
        .into_iter()
        .filter(|p| (3..=7).contains(&p.semigroup_order()))
        .collect();
    assert!(!pms.is_empty());
    for p in pms {
        let s = flat_howie(&p).unwrap();
        let result = classify(&s).unwrap();
        let Some(Evidence::RecoveredPMatrix {
            pmatrix,
            permutation,
        }) = result.evidence
        else {
            panic!("no P matrix recovered for {p:?}");
        };
        let rebuilt = PMatrix::new(pmatrix.entries).unwrap();
        let (table, _) = howie_semigroup(&rebuilt);
        let phi = table_isomorphism(&[s.mul_table()], &[&table]).unwrap();
        assert_eq!(phi.len(), s.order());
        for x in 0..s.order() {
            for y in 0..s.order() {
                assert_eq!(
                    permutation[s.mul(x, y)],
                    table.get(permutation[x], permutation[y])
                );
            }
        }
    }
}

#[test]
fn one_by_one_matrices_are_the_base() {
    for b in constructed().iter().filter(|s| s.order() <= 8) {
        let m = matrix_semiring(b, 1).unwrap();
        assert!(are_isomorphic(b, &m).is_some());
    }
    for (q, n) in [(2, 2), (3, 2), (2, 1), (4, 1)] {
        let m = matrix_semiring(&finite_field(q).unwrap(), n).unwrap();
        assert!(m.properties().is_ring);
        assert!(m.special_elements().zero.is_some());
    }
}

#[test]
fn order_eight_canonical_forms_ignore_labelling() {
    let perm = [3, 7, 0, 5, 1, 6, 2, 4];
    for s in [
        finite_field(8).unwrap(),
        zero_ring(8).unwrap(),
        v_of_group(&small_groups(7).unwrap()[0]).unwrap(),
    ] {
        let c = canonical_form(&s);
        assert!(c.exact);
        assert_eq!(c, canonical_form(&s.permuted(&perm)));
        assert_eq!(c.to_semiring().unwrap().order(), 8);
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn corpus_member() -> impl Strategy<Value = FiniteSemiring> {
    any::<Index>().prop_map(|i| i.get(corpus4()).clone())
}

fn member_with_perms() -> impl Strategy<Value = (FiniteSemiring, Vec<usize>, Vec<usize>)> {
    corpus_member().prop_flat_map(|s| {
        let n = s.order();
        (Just(s), permutation(n), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn relabeling_keeps_canonical_form((s, p, q) in member_with_perms()) {
        let t = s.permuted(&p);
        let u = t.permuted(&q);
        prop_assert_eq!(canonical_form(&s), canonical_form(&t));
        let st = are_isomorphic(&s, &t).unwrap();
        prop_assert!(is_verified_iso(&s, &t, &st));
        let ts = are_isomorphic(&t, &s).unwrap();
        prop_assert!(is_verified_iso(&t, &s, &ts));
        for x in 0..s.order() {
            prop_assert_eq!(ts[st[x]], x);
        }
        let su = are_isomorphic(&s, &u).unwrap();
        prop_assert!(is_verified_iso(&s, &u, &su));
        prop_assert!(is_verified_iso(&s, &s, &are_isomorphic(&s, &s).unwrap()));
    }

    #[test]
    fn relabeling_moves_congruences_along((s, p, _) in member_with_perms(), a in 0usize..4, b in 0usize..4) {
        let n = s.order();
        let (a, b) = (a % n, b % n);
        let t = s.permuted(&p);
        let before = principal_congruence(&s, a, b);
        let after = principal_congruence(&t, p[a], p[b]);
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(before.same_block(x, y), after.same_block(p[x], p[y]));
            }
        }
        prop_assert_eq!(is_congruence_simple(&s).simple, is_congruence_simple(&t).simple);
    }

    #[test]
    fn merging_more_only_coarsens(s in corpus_member(), pairs in prop::collection::vec((0usize..4, 0usize..4), 1..4)) {
        let n = s.order();
        let (a, b) = (pairs[0].0 % n, pairs[0].1 % n);
        let base = principal_congruence(&s, a, b);
        prop_assert!(is_congruence(&s, &base).unwrap());
        let mut acc = base.clone();
        for &(c, d) in &pairs[1..] {
            let next = join(&s, &acc, &principal_congruence(&s, c % n, d % n)).unwrap();
            prop_assert!(acc.refines(&next));
            prop_assert!(base.refines(&next));
            prop_assert!(is_congruence(&s, &next).unwrap());
            acc = next;
        }
    }

    #[test]
    fn semiring_json_round_trips((s, p, _) in member_with_perms()) {
        let t = s.permuted(&p);
        let back = FiniteSemiring::from_json(&t.to_json()).unwrap();
        prop_assert_eq!(back.add_table(), t.add_table());
        prop_assert_eq!(back.mul_table(), t.mul_table());
    }

    #[test]
    fn catalogs_round_trip(indices in prop::collection::btree_set(0usize..2484, 1..20)) {
        let c = corpus4();
        let entries: Vec<CatalogEntry> = indices
            .iter()
            .map(|&i| CatalogEntry::from_semiring(&c[i % c.len()], Provenance::Enumerated).unwrap())
            .collect();
        let mut unique = entries.clone();
        unique.sort_by(|a, b| (a.order, &a.canonical_form).cmp(&(b.order, &b.canonical_form)));
        unique.dedup_by(|a, b| a.canonical_form == b.canonical_form);
        let text = catalog_to_string(&unique).unwrap();
        let back = catalog_from_str(&text).unwrap();
        prop_assert_eq!(catalog_to_string(&back).unwrap(), text);
    }
}

#[test]
fn classification_is_total_on_simple_inputs() {
    let simple: Vec<FiniteSemiring> = corpus4()
        .iter()
        .cloned()
        .chain(constructed())
        .filter(|s| s.order() <= 16 && is_congruence_simple(s).simple)
        .collect();
    for s in &simple {
        let result = classify(s).unwrap_or_else(|e| panic!("{e}"));
        if let Some(Evidence::MatrixIsomorphism { permutation }) = &result.evidence {
            let Case::MatrixRing { n, q } = result.case else {
                panic!("evidence without case")
            };
            let reference = matrix_semiring(&finite_field(q).unwrap(), n).unwrap();
            assert!(is_verified_iso(s, &reference, permutation));
        }
    }
}
