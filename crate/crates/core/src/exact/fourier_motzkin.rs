//! Fourier–Motzkin elimination. Slow, but independent of the simplex code,
//! so it serves as the reference for feasibility and optimal values.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::matrix::dot;
use super::rational::Rational;
use super::system::{AffineFunctional, InequalitySystem};
use super::lp::{Direction, LpStatus};

/// Rows `a·x + b ≥ 0` stored as `(a, b)`, scaled so the first nonzero
/// coefficient has absolute value one.
type Row = (Vec<Rational>, Rational);

fn normalize(mut r: Row) -> Row {
    let lead = r.0.iter().find(|q| !q.is_zero()).map(|q| q.abs());
    let scale = lead.unwrap_or_else(|| {
        if r.1.is_zero() {
            Rational::one()
        } else {
            r.1.abs()
        }
    });
    for x in r.0.iter_mut() {
        *x /= &scale;
    }
    r.1 /= &scale;
    r
}

/// Eliminates the last variable. Returns `None` when a constant row is violated.
fn eliminate_last(rows: BTreeSet<Row>) -> Option<BTreeSet<Row>> {
    let k = rows.iter().next().map_or(0, |r| r.0.len());
    assert!(k > 0, "nothing to eliminate");
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), BTreeSet::new());
    for (a, b) in rows {
        let c = a[k - 1].clone();
        let mut rest = a;
        rest.pop();
        if c.is_positive() {
            pos.push((rest, b, c));
        } else if c.is_negative() {
            neg.push((rest, b, -c));
        } else {
            out.insert((rest, b));
        }
    }
    for (ap, bp, cp) in &pos {
        for (an, bn, cn) in &neg {
            let a: Vec<Rational> = ap.iter().zip(an).map(|(x, y)| x / cp + y / cn).collect();
            let b = bp / cp + bn / cn;
            out.insert(normalize((a, b)));
        }
    }
    let mut kept = BTreeSet::new();
    for (a, b) in out {
        if a.iter().all(Zero::is_zero) {
            if b.is_negative() {
                return None;
            }
        } else {
            kept.insert((a, b));
        }
    }
    Some(kept)
}

fn rows_of(system: &InequalitySystem) -> BTreeSet<Row> {
    system
        .as_ge_rows()
        .into_iter()
        .map(|f: AffineFunctional| normalize((f.linear_part, f.constant)))
        .collect()
}

fn constants_ok(rows: &BTreeSet<Row>) -> bool {
    rows.iter()
        .all(|(a, b)| !a.iter().all(Zero::is_zero) || !b.is_negative())
}

pub fn fm_feasible(system: &InequalitySystem) -> bool {
    let mut rows = rows_of(system);
    if !constants_ok(&rows) {
        return false;
    }
    rows.retain(|(a, _)| !a.iter().all(Zero::is_zero));
    for _ in 0..system.dim {
        if rows.is_empty() {
            return true;
        }
        match eliminate_last(rows) {
            Some(r) => rows = r,
            None => return false,
        }
    }
    true
}

/// Status and optimal value of `max/min objective·x` by eliminating `x`
/// from the system extended with `t = objective·x`.
pub fn fm_optimize(
    system: &InequalitySystem,
    objective: &[Rational],
    dir: Direction,
) -> (LpStatus, Option<Rational>) {
    let d = system.dim;
    // variable order (t, x_1..x_d); x eliminated from the back
    let mut rows: BTreeSet<Row> = BTreeSet::new();
    for f in system.as_ge_rows() {
        let mut a = vec![Rational::zero()];
        a.extend(f.linear_part);
        rows.insert(normalize((a, f.constant)));
    }
    let mut a = vec![Rational::one()];
    a.extend(objective.iter().map(|q| -q));
    rows.insert(normalize((a.clone(), Rational::zero())));
    let neg: Vec<Rational> = a.iter().map(|q| -q).collect();
    rows.insert(normalize((neg, Rational::zero())));
    if !constants_ok(&rows) {
        return (LpStatus::Infeasible, None);
    }
    rows.retain(|(a, _)| !a.iter().all(Zero::is_zero));
    for _ in 0..d {
        if rows.is_empty() {
            break;
        }
        match eliminate_last(rows) {
            Some(r) => rows = r,
            None => return (LpStatus::Infeasible, None),
        }
    }
    let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
    for (a, b) in &rows {
        if a.len() > 1 && a[1..].iter().any(|q| !q.is_zero()) {
            unreachable!("all x variables were eliminated");
        }
        let c = &a[0];
        if c.is_positive() {
            let v = -b / c;
            if lo.as_ref().map_or(true, |l| v > *l) {
                lo = Some(v);
            }
        } else if c.is_negative() {
            let v = b / -c;
            if hi.as_ref().map_or(true, |h| v < *h) {
                hi = Some(v);
            }
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return (LpStatus::Infeasible, None);
        }
    }
    match dir {
        Direction::Max => match hi {
            Some(h) => (LpStatus::Optimal, Some(h)),
            None => (LpStatus::Unbounded, None),
        },
        Direction::Min => match lo {
            Some(l) => (LpStatus::Optimal, Some(l)),
            None => (LpStatus::Unbounded, None),
        },
    }
}

/// Independent check that `x` is feasible and attains `value`.
pub fn certifies(system: &InequalitySystem, objective: &[Rational], x: &[Rational], value: &Rational) -> bool {
    system.satisfied_by(x) && dot(objective, x) == *value
}
