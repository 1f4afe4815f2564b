//! Feasible, bounded and bounded-feasible sign vectors.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{RestrictedArrangement, Sign, SignVector};
use crate::exact::lp::{lp_solve, Direction, LpStatus};
use crate::exact::rational::{serde_rational, Rational};
use crate::exact::{AffineFunctional, InequalitySystem, RatMatrix, Sense};
use crate::{par, Error};

/// A bounded feasible chamber with its `σξ`-maximizing vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub alpha: SignVector,
    #[serde(skip)]
    pub p: InequalitySystem,
    /// Vertex in `V_λ` coordinates.
    #[serde(with = "serde_rational::vec")]
    pub vertex: Vec<Rational>,
    /// Vertex in `W` coordinates.
    #[serde(with = "serde_rational::vec")]
    pub vertex_w: Vec<Rational>,
    #[serde(skip)]
    pub cone: InequalitySystem,
    pub active: Vec<usize>,
    #[serde(with = "serde_rational")]
    pub xi_value: Rational,
}

pub fn feasible_vectors(r: &RestrictedArrangement) -> BTreeSet<SignVector> {
    feasible_vectors_with(r, 1)
}

pub fn feasible_vectors_with(r: &RestrictedArrangement, threads: usize) -> BTreeSet<SignVector> {
    let all = r.all_sign_vectors();
    let zero = vec![Rational::zero(); r.dim];
    let keep = par::map(&all, threads, |a| {
        lp_solve(&r.chamber_system(a), &zero, Direction::Max).is_feasible()
    });
    all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(a, _)| a).collect()
}

/// Sign vectors on which the objective is not unbounded; infeasible ones
/// count as bounded.
pub fn bounded_vectors(r: &RestrictedArrangement) -> BTreeSet<SignVector> {
    bounded_vectors_with(r, 1)
}

pub fn bounded_vectors_with(r: &RestrictedArrangement, threads: usize) -> BTreeSet<SignVector> {
    let all = r.all_sign_vectors();
    let obj = r.objective();
    let keep = par::map(&all, threads, |a| {
        lp_solve(&r.chamber_system(a), &obj, Direction::Max).status != LpStatus::Unbounded
    });
    all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(a, _)| a).collect()
}

fn sort_chambers(ch: &mut [Chamber]) {
    ch.sort_by(|a, b| b.xi_value.cmp(&a.xi_value).then_with(|| a.alpha.cmp(&b.alpha)));
}

fn cone_of(r: &RestrictedArrangement, alpha: &SignVector, active: &[usize]) -> InequalitySystem {
    let mut s = InequalitySystem::new(r.dim);
    for &i in active {
        s.push(r.half_space(i, alpha.get(i).expect("active index in alpha")), Sense::Ge);
    }
    s
}

fn gradients(r: &RestrictedArrangement, idx: &[usize]) -> RatMatrix {
    let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| r.oriented(i).linear_part).collect();
    RatMatrix::from_rows(&rows, r.dim)
}

/// Active set at `x` for chamber `alpha`, and whether the optimum there is a
/// unique vertex with exactly `d` independent active functionals.
fn classify_optimum(r: &RestrictedArrangement, alpha: &SignVector, x: &[Rational]) -> (Vec<usize>, bool) {
    let active: Vec<usize> = alpha
        .indices
        .iter()
        .zip(&alpha.signs)
        .filter(|(&i, &s)| r.oriented(i).eval(x) == r.wall_value(s))
        .map(|(&i, _)| i)
        .collect();
    if active.len() != r.dim {
        return (active, false);
    }
    let g = gradients(r, &active);
    if g.rank() != r.dim {
        return (active, false);
    }
    // objective = Σ μ_i ∇g_i; uniqueness needs every multiplier strictly
    // on the side given by the sign
    let mu = g.transpose().solve(&r.objective()).expect("independent gradients");
    let ok = active.iter().zip(&mu).all(|(&i, m)| match alpha.get(i).unwrap() {
        Sign::Plus => m.is_negative(),
        Sign::Minus => m.is_positive(),
    });
    (active, ok)
}

fn make_chamber(r: &RestrictedArrangement, alpha: SignVector, vertex: Vec<Rational>, active: Vec<usize>) -> Chamber {
    Chamber {
        p: r.chamber_system(&alpha),
        cone: cone_of(r, &alpha, &active),
        vertex_w: r.w_coords(&vertex),
        xi_value: r.objective_value(&vertex),
        alpha,
        vertex,
        active,
    }
}

/// Bounded feasible chambers by one LP per sign vector.
pub fn pbf_sweep(r: &RestrictedArrangement) -> Result<Vec<Chamber>, Error> {
    let obj = r.objective();
    let mut out = Vec::new();
    for alpha in r.all_sign_vectors() {
        let res = lp_solve(&r.chamber_system(&alpha), &obj, Direction::Max);
        if res.status != LpStatus::Optimal {
            continue;
        }
        let x = res.witness.unwrap();
        let (active, ok) = classify_optimum(r, &alpha, &x);
        if !ok {
            return Err(Error::NonRegular(format!(
                "optimum of chamber {alpha} is not a unique vertex with {} active walls (active: {active:?})",
                r.dim
            )));
        }
        out.push(make_chamber(r, alpha, x, active));
    }
    sort_chambers(&mut out);
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// The set `𝒫` of bounded feasible sign vectors over the integrality set,
/// one [`Chamber`] each, sorted by decreasing objective value.
///
/// Chambers are found from arrangement vertices: at a vertex cut out by `d`
/// independent walls the multipliers of the objective fix the signs of the
/// active walls, and the values of the other functionals fix the rest.
/// Degenerate cases fall back to [`pbf_sweep`]. Each chamber is certified by
/// an LP solve.
pub fn pbf(r: &RestrictedArrangement) -> Result<Vec<Chamber>, Error> {
    let idx = r.integrality_set.clone();
    let d = r.dim;
    if idx.len() < d || gradients(r, &idx).rank() < d {
        return pbf_sweep(r);
    }
    let obj = r.objective();
    let mut out = Vec::new();
    for s in combinations(&idx, d) {
        let g = gradients(r, &s);
        if g.rank() < d {
            continue;
        }
        let mu = g.transpose().solve(&obj).expect("independent gradients");
        if mu.iter().any(Zero::is_zero) {
            // objective parallel to a face of some cone; decide by LP
            return pbf_sweep(r);
        }
        let signs: Vec<Sign> = mu
            .iter()
            .map(|m| if m.is_negative() { Sign::Plus } else { Sign::Minus })
            .collect();
        let rhs: Vec<Rational> = s
            .iter()
            .zip(&signs)
            .map(|(&i, &sg)| r.wall_value(sg) - &r.oriented(i).constant)
            .collect();
        let v = g.solve(&rhs).expect("independent gradients");
        let mut full = Vec::with_capacity(idx.len());
        let mut gap = false;
        for &j in &idx {
            if let Some(k) = s.iter().position(|&i| i == j) {
                full.push(signs[k]);
                continue;
            }
            let val = r.oriented(j).eval(&v);
            if val.is_positive() {
                full.push(Sign::Plus);
            } else if val < -r.shift.clone() {
                full.push(Sign::Minus);
            } else if val.is_zero() || val == -r.shift.clone() {
                return Err(Error::NonRegular(format!(
                    "vertex {:?} of walls {s:?} lies on wall {j} as well",
                    r.w_coords(&v).iter().map(ToString::to_string).collect::<Vec<_>>()
                )));
            } else {
                gap = true;
                break;
            }
        }
        if gap {
            continue;
        }
        let alpha = SignVector::new(idx.clone(), full);
        let p = r.chamber_system(&alpha);
        let cert = lp_solve(&p, &obj, Direction::Max);
        let expected = crate::exact::matrix::dot(&obj, &v);
        if cert.status != LpStatus::Optimal || cert.value.as_ref() != Some(&expected) {
            return Err(Error::NonRegular(format!(
                "LP does not certify the vertex of chamber {alpha}"
            )));
        }
        out.push(make_chamber(r, alpha, v, s));
    }
    sort_chambers(&mut out);
    Ok(out)
}

/// Regular: `pbf` succeeds and every feasible chamber is full-dimensional.
pub fn is_regular(r: &RestrictedArrangement) -> bool {
    if pbf(r).is_err() {
        return false;
    }
    let d = r.dim;
    // maximize t subject to f_i(x) − t ≥ 0 for every defining f_i, t ≤ 1
    let mut obj = vec![Rational::zero(); d + 1];
    obj[d] = Rational::from_integer(1.into());
    for alpha in r.all_sign_vectors() {
        let p = r.chamber_system(&alpha);
        let mut lifted = InequalitySystem::new(d + 1);
        for f in &p.functionals {
            let mut lin = f.linear_part.clone();
            lin.push(-Rational::from_integer(1.into()));
            lifted.push(AffineFunctional::new(lin, f.constant.clone()), Sense::Ge);
        }
        let mut cap = vec![Rational::zero(); d + 1];
        cap[d] = -Rational::from_integer(1.into());
        lifted.push(AffineFunctional::new(cap, Rational::from_integer(1.into())), Sense::Ge);
        let res = lp_solve(&lifted, &obj, Direction::Max);
        if res.status == LpStatus::Optimal {
            let t = res.value.unwrap();
            if t.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Linked: the feasible sign vectors of `q`, projected from the classical
/// side onto `I_Λ`, coincide.
pub fn is_linked(p: &super::PolarizedArrangement, q: &RestrictedArrangement) -> bool {
    let Ok(classical) = super::restrict(&p.as_quantized()) else {
        return false;
    };
    let f_eta = feasible_vectors(&classical);
    let f_lambda = feasible_vectors(q);
    let projected: BTreeSet<SignVector> = f_eta.iter().map(|a| a.restrict(&q.integrality_set)).collect();
    projected == f_lambda
}
