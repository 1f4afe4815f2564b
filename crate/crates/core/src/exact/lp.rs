//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Free variables are split as `x = x⁺ − x⁻`. Optimal witnesses are moved
//! to a vertex of the feasible region whenever the region has one.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{dot, RatMatrix};
use super::rational::{serde_rational, Rational};
use super::system::{InequalitySystem, Sense};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LpStatus {
    Infeasible,
    Unbounded,
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Objective value at the witness (OPTIMAL only).
    #[serde(with = "serde_rational::option")]
    pub value: Option<Rational>,
    /// OPTIMAL: an optimizer. UNBOUNDED: a recession ray along which the
    /// objective improves without bound.
    #[serde(with = "serde_rational::option_vec")]
    pub witness: Option<Vec<Rational>>,
    /// A feasible point whenever the system is feasible.
    #[serde(with = "serde_rational::option_vec")]
    pub feasible_point: Option<Vec<Rational>>,
}

impl LpOutcome {
    fn infeasible() -> Self {
        LpOutcome {
            status: LpStatus::Infeasible,
            value: None,
            witness: None,
            feasible_point: None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status != LpStatus::Infeasible
    }
}

/// Scalars the simplex can run over. Arithmetic is checked so that a fast
/// fixed-width type can give up and hand the problem to [`Rational`].
trait Scalar: Clone + Sized {
    fn from_q(q: &Rational) -> Option<Self>;
    fn to_q(&self) -> Rational;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn lt(&self, o: &Self) -> bool;
    fn neg(&self) -> Option<Self> {
        Self::zero().sub(self)
    }
}

impl Scalar for Rational {
    fn from_q(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn to_q(&self) -> Rational {
        self.clone()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

/// `n/d` in lowest terms with `d > 0`, both fitting in `i64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Small {
    n: i64,
    d: i64,
}

impl Small {
    fn reduce(n: i128, d: i128) -> Option<Self> {
        if d == 0 {
            return None;
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Some(Small { n: i64::try_from(n).ok()?, d: i64::try_from(d).ok()? })
    }
}

impl Scalar for Small {
    fn from_q(q: &Rational) -> Option<Self> {
        Some(Small { n: q.numer().to_i64()?, d: q.denom().to_i64()? })
    }
    fn to_q(&self) -> Rational {
        Rational::new(self.n.into(), self.d.into())
    }
    fn zero() -> Self {
        Small { n: 0, d: 1 }
    }
    fn one() -> Self {
        Small { n: 1, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        if self.d == o.d {
            return Small::reduce(self.n as i128 + o.n as i128, self.d as i128);
        }
        Small::reduce(
            self.n as i128 * o.d as i128 + o.n as i128 * self.d as i128,
            self.d as i128 * o.d as i128,
        )
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.add(&Small { n: o.n.checked_neg()?, d: o.d })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Small::reduce(self.n as i128 * o.n as i128, self.d as i128 * o.d as i128)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Small::reduce(self.n as i128 * o.d as i128, self.d as i128 * o.n as i128)
    }
    fn lt(&self, o: &Self) -> bool {
        (self.n as i128 * o.d as i128) < (o.n as i128 * self.d as i128)
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) -> Option<()> {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.div(&p)?;
            }
        }
        self.rhs[r] = self.rhs[r].div(&p)?;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p)?)?;
                }
            }
            self.rhs[i] = self.rhs[i].sub(&f.mul(&prhs)?)?;
        }
        self.basis[r] = c;
        Some(())
    }

    /// Maximizes `cost · y` over columns allowed by `allowed`.
    fn optimize(&mut self, cost: &[T], allowed: &[bool]) -> Option<Phase> {
        // reduced costs, kept current through each pivot
        let mut red = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (r, x) in red.iter_mut().zip(&self.rows[i]) {
                if !x.is_zero() {
                    *r = r.sub(&cost[b].mul(x)?)?;
                }
            }
        }
        loop {
            let entering = (0..self.ncols).find(|&j| allowed[j] && red[j].is_positive() && !self.basis.contains(&j));
            let Some(j) = entering else {
                return Some(Phase::Optimal);
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].div(&self.rows[i][j])?;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio.lt(br) || (!br.lt(&ratio) && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Some(Phase::Unbounded(j));
            };
            self.pivot(r, j)?;
            let f = red[j].clone();
            for (x, p) in red.iter_mut().zip(&self.rows[r]) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p)?)?;
                }
            }
        }
    }

    fn value_of(&self, col: usize) -> T {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(T::zero, |i| self.rhs[i].clone())
    }
}

/// Standard form `coef · y (rel) rhs`, `y ≥ 0`, `rhs ≥ 0`, over `(x⁺, x⁻)`.
struct StandardForm {
    d: usize,
    coef: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    rel: Vec<Sense>,
    obj: Vec<Rational>,
}

enum Solved {
    Infeasible,
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
    Optimal { point: Vec<Rational> },
}

fn standard_form(system: &InequalitySystem, objective: &[Rational], dir: Direction) -> StandardForm {
    let obj: Vec<Rational> = match dir {
        Direction::Max => objective.to_vec(),
        Direction::Min => objective.iter().map(|q| -q).collect(),
    };
    let m = system.len();
    let mut rel = Vec::with_capacity(m);
    let mut coef = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (f, s) in system.functionals.iter().zip(&system.senses) {
        let mut row: Vec<Rational> = f.linear_part.clone();
        row.extend(f.linear_part.iter().map(|q| -q));
        // f(x) ≥ 0  ⇔  a·x ≥ −b
        let mut r = -f.constant.clone();
        let mut sense = *s;
        if r.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            r = -r;
            sense = match sense {
                Sense::Ge => Sense::Le,
                Sense::Le => Sense::Ge,
                Sense::Eq => Sense::Eq,
            };
        }
        coef.push(row);
        rhs.push(r);
        rel.push(sense);
    }
    StandardForm { d: system.dim, coef, rhs, rel, obj }
}

/// Two-phase simplex over `T`; `None` when `T` overflows.
fn simplex<T: Scalar>(sf: &StandardForm) -> Option<Solved> {
    let d = sf.d;
    let m = sf.coef.len();
    let n_slack = sf.rel.iter().filter(|s| **s != Sense::Eq).count();
    let n_art = sf.rel.iter().filter(|s| **s != Sense::Le).count();
    let ncols = 2 * d + n_slack + n_art;
    let art_start = 2 * d + n_slack;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (2 * d, art_start);
    for i in 0..m {
        let mut row = vec![T::zero(); ncols];
        for (x, q) in row.iter_mut().zip(&sf.coef[i]) {
            *x = T::from_q(q)?;
        }
        match sf.rel[i] {
            Sense::Le => {
                row[next_slack] = T::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Sense::Ge => {
                row[next_slack] = T::one().neg()?;
                next_slack += 1;
                row[next_art] = T::one();
                basis.push(next_art);
                next_art += 1;
            }
            Sense::Eq => {
                row[next_art] = T::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
        rhs.push(T::from_q(&sf.rhs[i])?);
    }
    let mut t = Tableau { rows, rhs, basis, ncols };

    if n_art > 0 {
        let mut cost = vec![T::zero(); ncols];
        for c in cost.iter_mut().skip(art_start) {
            *c = T::one().neg()?;
        }
        let allowed = vec![true; ncols];
        // phase one is bounded by zero
        t.optimize(&cost, &allowed)?;
        let mut infeas = T::zero();
        for c in art_start..ncols {
            infeas = infeas.add(&t.value_of(c))?;
        }
        if infeas.is_positive() {
            return Some(Solved::Infeasible);
        }
        // drive remaining artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j)?;
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut cost = vec![T::zero(); ncols];
    for k in 0..d {
        cost[k] = T::from_q(&sf.obj[k])?;
        cost[d + k] = cost[k].neg()?;
    }
    let allowed: Vec<bool> = (0..ncols).map(|c| c < art_start).collect();
    let phase = t.optimize(&cost, &allowed)?;
    let point: Vec<Rational> = (0..d).map(|k| t.value_of(k).to_q() - t.value_of(d + k).to_q()).collect();
    Some(match phase {
        Phase::Unbounded(j) => {
            let mut dy = vec![<Rational as Zero>::zero(); ncols];
            dy[j] = <Rational as One>::one();
            for (i, &b) in t.basis.iter().enumerate() {
                dy[b] = -t.rows[i][j].to_q();
            }
            let ray: Vec<Rational> = (0..d).map(|k| &dy[k] - &dy[d + k]).collect();
            Solved::Unbounded { point, ray }
        }
        Phase::Optimal => Solved::Optimal { point },
    })
}

/// Solves `max/min objective·x` subject to `system`, with `x` free.
///
/// The simplex runs in `i64` rationals and restarts in arbitrary precision
/// if an intermediate value does not fit.
pub fn lp_solve(system: &InequalitySystem, objective: &[Rational], dir: Direction) -> LpOutcome {
    assert_eq!(objective.len(), system.dim, "objective dimension mismatch");
    let sf = standard_form(system, objective, dir);
    let solved = simplex::<Small>(&sf)
        .or_else(|| simplex::<Rational>(&sf))
        .expect("arbitrary precision does not overflow");
    match solved {
        Solved::Infeasible => LpOutcome::infeasible(),
        Solved::Unbounded { point, ray } => LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            witness: Some(ray),
            feasible_point: Some(point),
        },
        Solved::Optimal { point } => {
            let vertex = move_to_vertex(system, objective, point);
            let value = dot(objective, &vertex);
            debug_assert!(system.satisfied_by(&vertex));
            LpOutcome {
                status: LpStatus::Optimal,
                value: Some(value),
                witness: Some(vertex.clone()),
                feasible_point: Some(vertex),
            }
        }
    }
}

/// Gradients of the constraints that are tight at `x`.
pub fn active_gradients(system: &InequalitySystem, x: &[Rational]) -> Vec<Vec<Rational>> {
    system
        .functionals
        .iter()
        .zip(&system.senses)
        .filter(|(f, s)| **s == Sense::Eq || Zero::is_zero(&f.eval(x)))
        .map(|(f, _)| f.linear_part.clone())
        .collect()
}

/// Slides an optimal point along its optimal face until the tight
/// constraints have full rank, or a line in the region is met.
fn move_to_vertex(system: &InequalitySystem, objective: &[Rational], mut x: Vec<Rational>) -> Vec<Rational> {
    let d = system.dim;
    loop {
        let act = active_gradients(system, &x);
        let a = RatMatrix::from_rows(&act, d);
        if a.rank() == d {
            return x;
        }
        let ker = a.kernel_basis();
        let v = ker.row(0).to_vec();
        if !Zero::is_zero(&dot(objective, &v)) {
            // cannot happen at an optimum; keep the simplex point
            return x;
        }
        let step = |dir: &[Rational]| -> Option<Rational> {
            let mut best: Option<Rational> = None;
            for (f, s) in system.functionals.iter().zip(&system.senses) {
                let val = f.eval(&x);
                let rate = dot(&f.linear_part, dir);
                let bound = match s {
                    Sense::Ge if rate.is_negative() => Some(&val / -&rate),
                    Sense::Le if Signed::is_positive(&rate) => Some(-&val / &rate),
                    _ => None,
                };
                if let Some(b) = bound {
                    if best.as_ref().map_or(true, |c| b < *c) {
                        best = Some(b);
                    }
                }
            }
            best
        };
        let neg: Vec<Rational> = v.iter().map(|q| -q).collect();
        let (dir, t) = match step(&v) {
            Some(t) => (v, t),
            None => match step(&neg) {
                Some(t) => (neg, t),
                None => return x,
            },
        };
        for (xi, di) in x.iter_mut().zip(&dir) {
            *xi += &t * di;
        }
    }
}

/// Convenience feasibility test.
pub fn is_feasible(system: &InequalitySystem) -> bool {
    let zero = vec![<Rational as Zero>::zero(); system.dim];
    lp_solve(system, &zero, Direction::Max).is_feasible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use crate::exact::system::AffineFunctional;

    fn f(lin: &[i64], c: i64) -> AffineFunctional {
        AffineFunctional::new(lin.iter().map(|&x| int(x)).collect(), int(c))
    }

    #[test]
    fn unit_interval() {
        let s = InequalitySystem::new(1)
            .with(f(&[1], 0), Sense::Ge)
            .with(f(&[1], -1), Sense::Le);
        let out = lp_solve(&s, &[int(1)], Direction::Max);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Some(int(1)));
        assert_eq!(out.witness, Some(vec![int(1)]));
    }

    #[test]
    fn half_line_unbounded() {
        let s = InequalitySystem::new(1).with(f(&[1], 0), Sense::Ge);
        let out = lp_solve(&s, &[int(1)], Direction::Max);
        assert_eq!(out.status, LpStatus::Unbounded);
        assert!(Signed::is_positive(&out.witness.unwrap()[0]));
    }

    #[test]
    fn infeasible_pair() {
        let s = InequalitySystem::new(1)
            .with(f(&[1], -2), Sense::Ge)
            .with(f(&[1], -1), Sense::Le);
        assert_eq!(lp_solve(&s, &[int(1)], Direction::Max).status, LpStatus::Infeasible);
    }

    #[test]
    fn equality_and_fraction() {
        // x + y = 1, x - 2y ≥ 0, maximize y → y = 1/3
        let s = InequalitySystem::new(2)
            .with(f(&[1, 1], -1), Sense::Eq)
            .with(f(&[1, -2], 0), Sense::Ge);
        let out = lp_solve(&s, &[int(0), int(1)], Direction::Max);
        assert_eq!(out.value, Some(ratio(1, 3)));
        assert_eq!(out.witness, Some(vec![ratio(2, 3), ratio(1, 3)]));
    }

    #[test]
    fn witness_is_vertex() {
        // square [0,1]^2 with objective x: optimal face is an edge
        let s = InequalitySystem::new(2)
            .with(f(&[1, 0], 0), Sense::Ge)
            .with(f(&[1, 0], -1), Sense::Le)
            .with(f(&[0, 1], 0), Sense::Ge)
            .with(f(&[0, 1], -1), Sense::Le);
        let out = lp_solve(&s, &[int(1), int(0)], Direction::Max);
        let w = out.witness.unwrap();
        assert_eq!(RatMatrix::from_rows(&active_gradients(&s, &w), 2).rank(), 2);
    }

    #[test]
    fn min_is_negated_max() {
        let s = InequalitySystem::new(2)
            .with(f(&[1, 0], 0), Sense::Ge)
            .with(f(&[0, 1], 0), Sense::Ge)
            .with(f(&[-1, -1], 3), Sense::Ge);
        let mx = lp_solve(&s, &[int(2), int(1)], Direction::Max);
        let mn = lp_solve(&s, &[int(-2), int(-1)], Direction::Min);
        assert_eq!(mx.value.unwrap(), -mn.value.unwrap());
    }

    #[test]
    fn small_overflow_falls_back() {
        let big = Small { n: i64::MAX, d: 1 };
        assert_eq!(big.add(&Small::one()), None);
        assert_eq!(Small::from_q(&ratio(1, 3)).unwrap().mul(&Small { n: 3, d: 1 }), Some(Small::one()));
        // coefficients beyond i64 take the arbitrary precision route
        let huge: Rational = Rational::from_integer(num_bigint::BigInt::from(i64::MAX) * 4);
        let s = InequalitySystem::new(1)
            .with(AffineFunctional::new(vec![int(1)], -huge.clone()), Sense::Le)
            .with(f(&[1], 0), Sense::Ge);
        let sf = standard_form(&s, &[int(1)], Direction::Max);
        assert!(simplex::<Small>(&sf).is_none());
        assert_eq!(lp_solve(&s, &[int(1)], Direction::Max).value, Some(huge));
    }
}
