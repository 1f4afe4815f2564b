//! Shared helpers and independent oracles for the integration tests.
#![allow(dead_code)]

pub mod fixed_point_oracle;

use std::collections::BTreeSet;

use bouquet_core::exact::fourier_motzkin::{fm_feasible, fm_optimize};
use bouquet_core::exact::rational::{int, Rational};
use bouquet_core::exact::{Direction, LpStatus};
use bouquet_core::hypertoric::{restrict, RestrictedArrangement, SignVector};
use bouquet_core::quiver::slice_spec;

pub fn slice(ell: usize, lambda_tilde: Rational) -> RestrictedArrangement {
    restrict(&slice_spec(ell, &lambda_tilde).unwrap().quantized).unwrap()
}

pub fn slice_int(ell: usize, lambda_tilde: i64) -> RestrictedArrangement {
    slice(ell, int(lambda_tilde))
}

pub fn sv(s: &str) -> SignVector {
    SignVector::parse_full(s).unwrap()
}

pub fn set(v: &[&str]) -> BTreeSet<SignVector> {
    v.iter().map(|s| sv(s)).collect()
}

/// Feasible and bounded sign vectors by Fourier–Motzkin elimination.
pub fn fm_feasible_bounded(r: &RestrictedArrangement) -> (BTreeSet<SignVector>, BTreeSet<SignVector>) {
    let obj = r.objective();
    let mut f = BTreeSet::new();
    let mut b = BTreeSet::new();
    for a in r.all_sign_vectors() {
        let p = r.chamber_system(&a);
        if fm_feasible(&p) {
            f.insert(a.clone());
        }
        if fm_optimize(&p, &obj, Direction::Max).0 != LpStatus::Unbounded {
            b.insert(a);
        }
    }
    (f, b)
}
