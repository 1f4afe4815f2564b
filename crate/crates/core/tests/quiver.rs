mod common;

use std::collections::BTreeSet;

use bouquet_core::exact::rational::int;
use bouquet_core::hypertoric::pbf;
use bouquet_core::quiver::*;
use common::fixed_point_oracle::{oracle_fixed_points, Key};
use common::slice_int;

fn engine_keys(n: usize, ell: usize) -> BTreeSet<Key> {
    fixed_points(BouquetParams::new(n, ell).unwrap())
        .unwrap()
        .diagrams
        .iter()
        .map(|d| {
            let mut k: Key = d
                .edges
                .iter()
                .map(|&(a, b, l)| (d.vertices[a].clone(), d.vertices[b].clone(), l.to_string()))
                .collect();
            k.sort();
            k
        })
        .collect()
}

#[test]
fn engine_matches_oracle() {
    for (n, ell) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let oracle = oracle_fixed_points(n, ell);
        let engine = engine_keys(n, ell);
        assert_eq!(engine, oracle, "n = {n}, ℓ = {ell}");
    }
}

#[test]
fn n3_count_formula_from_oracle() {
    for ell in [2usize, 3, 4] {
        assert_eq!(oracle_fixed_points(3, ell).len(), 6 * ell * ell - 3 * ell, "ℓ = {ell}");
    }
}

#[test]
fn n3_unlisted_chain_is_present() {
    let s = fixed_points(BouquetParams::new(3, 2).unwrap()).unwrap();
    let unlisted = s.diagrams.iter().filter(|d| d.family.contains("unlisted")).count();
    // Y_s then X_k for s ≠ k
    assert_eq!(unlisted, 2);
    for d in &s.diagrams {
        d.verify(2).unwrap();
    }
}

#[test]
fn n2_count_up_to_ten() {
    for ell in 2..=10 {
        let s = fixed_points(BouquetParams::new(2, ell).unwrap()).unwrap();
        assert_eq!(s.diagrams.len(), 2 * ell);
    }
}

#[test]
fn slice_points_match_chambers() {
    for ell in 2..6 {
        let pts = slice_fixed_points(ell).unwrap();
        let ch = pbf(&slice_int(ell, -(ell as i64) - 1)).unwrap();
        assert_eq!(pts.len(), ch.len());
    }
}

#[test]
fn slice_normals_parallel_to_table() {
    let ell = 3;
    let s = slice_spec(ell, &int(-4)).unwrap();
    let k = 2 * ell - 2;
    let printed = |v: Vec<i64>| v.into_iter().map(int).collect::<Vec<_>>();
    let mut eta1 = vec![1; k];
    eta1[k - 1] = 0;
    let mut eta_2l2 = vec![0; k];
    eta_2l2[k - 2] = -1;
    eta_2l2[k - 1] = -1;
    let mut eta_2l = vec![0; k];
    eta_2l[k - 1] = -1;
    let parallel = |a: &[bouquet_core::exact::Rational], b: &[bouquet_core::exact::Rational]| {
        a == b || a.iter().zip(b).all(|(x, y)| x == &-y.clone())
    };
    assert_eq!(s.hyperplane_table[0].normal, printed(eta1));
    assert!(parallel(&s.hyperplane_table[2 * ell - 3].normal, &printed(eta_2l2)));
    assert_eq!(s.hyperplane_table[2 * ell - 1].normal, printed(eta_2l));
}
