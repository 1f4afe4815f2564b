//! Containment of polyhedra and positive supports of cones, both by LP.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::lp::{lp_solve, Direction, LpStatus};
use super::matrix::RatMatrix;
use super::rational::Rational;
use super::system::{AffineFunctional, InequalitySystem, Sense};

/// True iff every point satisfying `a` satisfies `b`.
pub fn poly_contains(a: &InequalitySystem, b: &InequalitySystem) -> bool {
    assert_eq!(a.dim, b.dim, "dimension mismatch");
    for (f, s) in b.functionals.iter().zip(&b.senses) {
        let need_min = matches!(s, Sense::Ge | Sense::Eq);
        let need_max = matches!(s, Sense::Le | Sense::Eq);
        if need_min {
            let out = lp_solve(a, &f.linear_part, Direction::Min);
            match out.status {
                LpStatus::Infeasible => return true,
                LpStatus::Unbounded => return false,
                LpStatus::Optimal => {
                    if out.value.unwrap() + &f.constant < Rational::zero() {
                        return false;
                    }
                }
            }
        }
        if need_max {
            let out = lp_solve(a, &f.linear_part, Direction::Max);
            match out.status {
                LpStatus::Infeasible => return true,
                LpStatus::Unbounded => return false,
                LpStatus::Optimal => {
                    if out.value.unwrap() + &f.constant > Rational::zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Indices `i` for which some `m ≥ 0` with `W m = 0` has `m_i > 0`, each with
/// the LP witness (`m_i ≥ 1` after scaling the homogeneous cone).
pub fn cone_positive_support_certified(w: &RatMatrix) -> BTreeMap<usize, Vec<Rational>> {
    let n = w.cols();
    let mut out = BTreeMap::new();
    for i in 0..n {
        let mut sys = InequalitySystem::new(n);
        for r in 0..w.rows() {
            sys.push(AffineFunctional::new(w.row(r).to_vec(), Rational::zero()), Sense::Eq);
        }
        for k in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            let c = if k == i { -Rational::one() } else { Rational::zero() };
            sys.push(AffineFunctional::new(e, c), Sense::Ge);
        }
        let ones = vec![Rational::one(); n];
        let res = lp_solve(&sys, &ones, Direction::Min);
        if res.status == LpStatus::Optimal {
            out.insert(i, res.witness.unwrap());
        }
    }
    out
}

pub fn cone_positive_support(w: &RatMatrix) -> BTreeSet<usize> {
    cone_positive_support_certified(w).into_keys().collect()
}
