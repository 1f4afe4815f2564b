mod common;

use std::collections::{BTreeMap, BTreeSet};

use bouquet_core::exact::rational::{int, ratio, Rational};
use bouquet_core::exact::{lattice_member, poly_contains};
use bouquet_core::hypertoric::*;
use bouquet_core::quiver::{slice_labels, slice_spec, slice_weight_matrix, SliceLabel};
use common::*;

const ELL2_FEASIBLE: [&str; 10] = [
    "---+", "----", "+--+", "++-+", "+---", "++--", "+++-", "-++-", "--+-", "-+--",
];
/// Numbering of the five chambers at `ℓ = 2` used in the tables.
const ELL2_P: [&str; 5] = ["+---", "-+--", "----", "---+", "--+-"];

#[test]
fn ell2_feasible_and_bounded() {
    let r = slice_int(2, -2);
    assert_eq!(feasible_vectors(&r), set(&ELL2_FEASIBLE));
    let p: BTreeSet<_> = pbf(&r).unwrap().into_iter().map(|c| c.alpha).collect();
    assert_eq!(p, set(&ELL2_P));
    let b = bounded_vectors(&r);
    assert!(!b.contains(&sv("++--")));
    assert!(feasible_vectors(&r).contains(&sv("++--")));
    assert!(b.contains(&sv("----")));
}

#[test]
fn ell2_subquotient_table() {
    let r = slice_int(2, -2);
    let ch = pbf(&r).unwrap();
    let num = |a: &SignVector| ELL2_P.iter().position(|s| sv(s) == *a).unwrap() + 1;
    let table: BTreeMap<usize, BTreeSet<usize>> = ELL2_P
        .iter()
        .map(|s| {
            let sq = subquotients(&r, &ch, &sv(s)).unwrap();
            (num(&sv(s)), sq.iter().map(num).collect())
        })
        .collect();
    let expect: BTreeMap<usize, BTreeSet<usize>> = [
        (1, vec![1, 3, 5]),
        (2, vec![2, 3, 4]),
        (3, vec![3, 4, 5]),
        (4, vec![4]),
        (5, vec![5]),
    ]
    .into_iter()
    .map(|(k, v)| (k, v.into_iter().collect()))
    .collect();
    assert_eq!(table, expect);
    assert_eq!(hom_dim(&r, &ch, &sv("--+-"), &sv("+---")).unwrap(), 1);
    assert_eq!(hom_dim(&r, &ch, &sv("+---"), &sv("--+-")).unwrap(), 0);
    assert!(matches!(subquotients(&r, &ch, &sv("++--")), Err(bouquet_core::Error::UnknownVector(_))));
}

#[test]
fn optimum_of_mid_chamber() {
    let r = slice_int(2, -2);
    let ch = pbf(&r).unwrap();
    let mid = ch.iter().find(|c| c.alpha == sv("----")).unwrap();
    assert_eq!(mid.vertex_w, vec![int(0), int(0), int(2), int(2)]);
}

#[test]
fn vertex_of_alpha1() {
    for ell in 2..6 {
        let lt = -(ell as i64) - 1;
        let r = slice_int(ell, lt);
        let ch = pbf(&r).unwrap();
        let a1 = slice_labels(ell).unwrap()[0].1.clone();
        let c = ch.iter().find(|c| c.alpha == a1).unwrap();
        let mut expect = vec![int(0); 2 * ell];
        expect[0] = int(lt);
        expect[2 * ell - 2] = int(-2 * lt);
        assert_eq!(c.vertex_w, expect, "ℓ = {ell}");
    }
}

#[test]
fn chambers_match_label_patterns() {
    for ell in 2..7 {
        let r = slice_int(ell, -(ell as i64) - 1);
        let got: BTreeSet<_> = pbf(&r).unwrap().into_iter().map(|c| c.alpha).collect();
        let want: BTreeSet<_> = slice_labels(ell).unwrap().into_iter().map(|(_, a)| a).collect();
        assert_eq!(got.len(), 4 * ell - 3);
        assert_eq!(got, want, "ℓ = {ell}");
    }
}

#[test]
fn vertex_search_agrees_with_sweep_and_fm() {
    for ell in [2, 3] {
        for lt in [int(-(ell as i64) - 1), int(-(ell as i64) - 2), ratio(-7, 2)] {
            let r = slice(ell, lt.clone());
            let (f, b) = fm_feasible_bounded(&r);
            assert_eq!(feasible_vectors(&r), f);
            assert_eq!(bounded_vectors(&r), b);
            let fast = pbf(&r).unwrap();
            let slow = pbf_sweep(&r).unwrap();
            assert_eq!(fast, slow);
            let p: BTreeSet<_> = f.intersection(&b).cloned().collect();
            assert_eq!(fast.into_iter().map(|c| c.alpha).collect::<BTreeSet<_>>(), p);
        }
    }
}

#[test]
fn parallel_enumeration_is_order_independent() {
    let r = slice_int(3, -4);
    assert_eq!(feasible_vectors_with(&r, 4), feasible_vectors(&r));
    assert_eq!(bounded_vectors_with(&r, 3), bounded_vectors(&r));
}

#[test]
fn blocks_at_half_integer() {
    let r = slice(2, ratio(-5, 2));
    assert_eq!(r.integrality_set, vec![0, 1]);
    let d = block_decomposition(&r).unwrap();
    let classes: BTreeSet<BTreeSet<SignVector>> = d
        .blocks
        .iter()
        .map(|b| b.members.iter().cloned().collect())
        .collect();
    let num = |i: usize| sv(ELL2_P[i - 1]);
    let expect: BTreeSet<BTreeSet<SignVector>> = [vec![1, 5], vec![2, 4], vec![3]]
        .into_iter()
        .map(|c| c.into_iter().map(num).collect())
        .collect();
    assert_eq!(classes, expect);
}

#[test]
fn one_block_at_integer() {
    let r = slice_int(2, -2);
    let ch = pbf(&r).unwrap();
    assert_eq!(blocks(&r, &ch).classes.len(), 1);
    let a = ch.iter().find(|c| c.alpha == sv("+---")).unwrap();
    let b = ch.iter().find(|c| c.alpha == sv("--+-")).unwrap();
    let diff: Vec<Rational> = a.vertex_w.iter().zip(&b.vertex_w).map(|(x, y)| x - y).collect();
    assert!(lattice_member(&r.lattice, &diff));
}

#[test]
fn generic_parameter_is_semisimple() {
    for ell in 2..5 {
        let r = slice(ell, ratio(-3 * ell as i64 - 1, 3));
        assert!(r.integrality_set.len() == 2 * ell - 2);
        let d = block_decomposition(&r).unwrap();
        assert_eq!(d.blocks.len(), 4 * ell - 3);
        for b in &d.blocks {
            assert_eq!(b.members.len(), 1);
            assert_eq!(b.subquotients[&b.members[0]], b.members);
        }
    }
}

#[test]
fn non_regular_at_zero() {
    let r = slice_int(2, 0);
    assert!(matches!(pbf(&r), Err(bouquet_core::Error::NonRegular(_))));
    assert!(!is_regular(&r));
    assert!(is_regular(&slice_int(2, -2)));
}

#[test]
fn linked_with_classical_side() {
    for ell in 2..4 {
        let s = slice_spec(ell, &int(-(ell as i64) - 1)).unwrap();
        let r = restrict(&s.quantized).unwrap();
        assert!(is_linked(&s.arrangement, &r), "ℓ = {ell}");
    }
}

#[test]
fn support_dimensions() {
    for ell in 2..7 {
        let r = slice_int(ell, -(ell as i64) - 1);
        let w = slice_weight_matrix(ell);
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for (label, a) in slice_labels(ell).unwrap() {
            let d = support_dim(&r, &a, &w);
            assert!(d <= r.dim);
            let expect = match label {
                SliceLabel::Alpha(1) | SliceLabel::Beta(1) => 0,
                SliceLabel::Alpha(i) | SliceLabel::Beta(i) if i < ell => 2 * ell - 3,
                SliceLabel::Mid => 2 * ell - 3,
                _ => 2 * ell - 2,
            };
            assert_eq!(d, expect, "ℓ = {ell}, {label}");
            *hist.entry(d).or_default() += 1;
        }
        let mut want = BTreeMap::new();
        want.insert(0, 2);
        *want.entry(2 * ell - 3).or_default() += 2 * (ell - 2) + 1;
        *want.entry(2 * ell - 2).or_default() += 2 * (ell - 1);
        assert_eq!(hist, want);
    }
}

#[test]
fn chamber_invariants() {
    for ell in 2..5 {
        let r = slice_int(ell, -(ell as i64) - 1);
        let ch = pbf(&r).unwrap();
        let part = blocks(&r, &ch);
        let block_of = |a: &SignVector| part.classes.iter().position(|c| c.contains(a)).unwrap();
        let mut vertices = BTreeSet::new();
        for c in &ch {
            assert!(c.p.satisfied_by(&c.vertex));
            assert!(poly_contains(&c.p, &c.cone));
            assert!(vertices.insert(c.vertex.clone()));
            let sq = subquotients(&r, &ch, &c.alpha).unwrap();
            assert!(sq.contains(&c.alpha));
            for g in &sq {
                let cg = ch.iter().find(|x| &x.alpha == g).unwrap();
                if g != &c.alpha {
                    assert!(cg.xi_value < c.xi_value);
                }
                assert_eq!(block_of(g), block_of(&c.alpha));
            }
        }
    }
}

#[test]
fn chamber_count_up_to_eight() {
    for ell in 2..=8 {
        let r = slice_int(ell, -(ell as i64) - 1);
        assert_eq!(pbf(&r).unwrap().len(), 4 * ell - 3);
    }
}
