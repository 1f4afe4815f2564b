//! The hypertoric slice at a point of the third leaf of `M̄(2, ℓ)`.
//!
//! `W = ℚ^{2ℓ}` with coordinates `(x_1..x_{ℓ−1}, x_ℓ..x_{2ℓ−2}, i_1, i_2)`,
//! acted on by `(ℂ*)²` with weights `t_1^{-1}t_2` on the first block,
//! `t_1 t_2^{-1}` on the second, and `t_1^{-1}`, `t_2^{-1}` on the framing.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::{check_ell, Matrices};
use crate::exact::rational::{int, serde_rational, Rational};
use crate::exact::{AffineFunctional, IntegerLattice, RatMatrix};
use crate::hypertoric::{Orientation, PolarizedArrangement, QuantizedPolarizedArrangement, Sign, SignVector};
use crate::Error;

/// Names of the `4ℓ − 3` bounded feasible chambers of the slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceLabel {
    Alpha(usize),
    Beta(usize),
    Mid,
}

impl SliceLabel {
    pub fn is_valid(self, ell: usize) -> bool {
        match self {
            SliceLabel::Mid => true,
            SliceLabel::Alpha(i) | SliceLabel::Beta(i) => (1..2 * ell).contains(&i) && i != ell,
        }
    }
}

impl fmt::Display for SliceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceLabel::Alpha(i) => write!(f, "α{i}"),
            SliceLabel::Beta(i) => write!(f, "β{i}"),
            SliceLabel::Mid => write!(f, "mid"),
        }
    }
}

impl Serialize for SliceLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for SliceLabel {
    type Err = Error;

    /// Accepts `α3`, `a3`, `alpha3`, `β2`, `b2`, `beta2`, `mid`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "mid" || s == "α_mid" {
            return Ok(SliceLabel::Mid);
        }
        let bad = || Error::Parse(format!("not a slice label: {s:?}"));
        for (prefix, alpha) in [("alpha", true), ("beta", false), ("α", true), ("β", false), ("a", true), ("b", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let i: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
                return Ok(if alpha { SliceLabel::Alpha(i) } else { SliceLabel::Beta(i) });
            }
        }
        Err(bad())
    }
}

/// Sign vector on all `2ℓ` walls for a slice label.
pub fn slice_label_vector(ell: usize, label: SliceLabel) -> Result<SignVector, Error> {
    check_ell(ell)?;
    if !label.is_valid(ell) {
        return Err(Error::UnknownVector(format!("{label} is not a slice label for ℓ = {ell}")));
    }
    let m = ell - 1;
    let mut s = vec![Sign::Minus; 2 * ell];
    let first = |s: &mut Vec<Sign>, k: usize| (m - k..m).for_each(|p| s[p] = Sign::Plus);
    let second = |s: &mut Vec<Sign>, k: usize| (m..m + k).for_each(|p| s[p] = Sign::Plus);
    match label {
        SliceLabel::Mid => {}
        SliceLabel::Alpha(i) if i < ell => first(&mut s, ell - i),
        SliceLabel::Alpha(i) => {
            second(&mut s, i - ell - 1);
            s[2 * ell - 1] = Sign::Plus;
        }
        SliceLabel::Beta(i) if i < ell => second(&mut s, ell - i),
        SliceLabel::Beta(i) => {
            first(&mut s, i - ell - 1);
            s[2 * ell - 2] = Sign::Plus;
        }
    }
    Ok(SignVector::new((0..2 * ell).collect(), s))
}

/// All `4ℓ − 3` labels with their sign vectors: `α_1..α_{ℓ−1}`, `mid`,
/// `α_{ℓ+1}..α_{2ℓ−1}`, then the `β` in the same order.
pub fn slice_labels(ell: usize) -> Result<Vec<(SliceLabel, SignVector)>, Error> {
    check_ell(ell)?;
    let idx: Vec<usize> = (1..ell).chain(ell + 1..2 * ell).collect();
    let mut labels: Vec<SliceLabel> = idx.iter().map(|&i| SliceLabel::Alpha(i)).collect();
    labels.insert(ell - 1, SliceLabel::Mid);
    labels.extend(idx.iter().map(|&i| SliceLabel::Beta(i)));
    labels
        .into_iter()
        .map(|l| Ok((l, slice_label_vector(ell, l)?)))
        .collect()
}

/// Rows are the `t_1` and `t_2` weights of the `2ℓ` coordinates.
pub fn slice_weight_matrix(ell: usize) -> RatMatrix {
    let m = ell - 1;
    let mut t1 = vec![-1; m];
    t1.extend(vec![1; m]);
    t1.extend([-1, 0]);
    let t2: Vec<i64> = (0..2 * ell).map(|k| if k < 2 * m { -t1[k] } else if k == 2 * m { 0 } else { -1 }).collect();
    RatMatrix::from_i64_rows(&[t1, t2])
}

/// Basis `u_1..u_{2ℓ−2}` of the annihilator of the weights.
fn lattice_rows(ell: usize) -> Vec<Vec<i64>> {
    let n = 2 * ell;
    let mut rows = Vec::new();
    for k in 1..=2 * ell - 3 {
        let mut u = vec![0; n];
        u[0] = 1;
        u[k] = if k <= ell - 2 { -1 } else { 1 };
        rows.push(u);
    }
    let mut last = vec![0; n];
    last[n - 3] = 1;
    last[n - 2] = 1;
    last[n - 1] = -1;
    rows.push(last);
    rows
}

fn slice_xi(ell: usize) -> Vec<Rational> {
    (1..=ell - 2)
        .chain(ell..=2 * ell - 2)
        .chain([ell - 1])
        .map(|k| int(k as i64))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneRow {
    /// 0-based coordinate index.
    pub index: usize,
    /// `h_i` in `V_λ` coordinates.
    pub functional: AffineFunctional,
    /// Gradient of `h_i` in `u` coordinates.
    #[serde(with = "serde_rational::vec")]
    pub normal: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct SliceSpec {
    pub ell: usize,
    pub lambda_tilde: Rational,
    pub arrangement: PolarizedArrangement,
    pub quantized: QuantizedPolarizedArrangement,
    pub weight_matrix: RatMatrix,
    pub hyperplane_table: Vec<HyperplaneRow>,
}

/// Slice arrangement at `λ̃`: base point `(0,…,0,−λ̃,−λ̃)`, classical side at
/// `η = (−1,−1)` (representative `(0,…,0,1,1)`), reversed orientation.
pub fn slice_spec(ell: usize, lambda_tilde: &Rational) -> Result<SliceSpec, Error> {
    check_ell(ell)?;
    let n = 2 * ell;
    let lattice = IntegerLattice::from_i64_rows(&lattice_rows(ell))?;
    let xi = slice_xi(ell);
    let mut base_point = vec![int(0); n];
    base_point[n - 2] = -lambda_tilde.clone();
    base_point[n - 1] = -lambda_tilde.clone();
    let mut eta = vec![BigInt::from(0); n];
    eta[n - 2] = BigInt::from(1);
    eta[n - 1] = BigInt::from(1);
    let hyperplane_table = (0..n)
        .map(|i| {
            let normal = lattice.basis.column(i);
            HyperplaneRow {
                index: i,
                functional: AffineFunctional::new(normal.clone(), base_point[i].clone()),
                normal,
            }
        })
        .collect();
    Ok(SliceSpec {
        ell,
        lambda_tilde: lambda_tilde.clone(),
        arrangement: PolarizedArrangement {
            ambient_dim: n,
            lattice: lattice.clone(),
            eta,
            xi: xi.clone(),
            orientation: Orientation::Reversed,
        },
        quantized: QuantizedPolarizedArrangement {
            ambient_dim: n,
            lattice,
            base_point,
            xi,
            orientation: Orientation::Reversed,
        },
        weight_matrix: slice_weight_matrix(ell),
        hyperplane_table,
    })
}

/// A fixed point of the ambient `M̄^θ(2, ℓ)`, on one of its `T′`-fixed components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientPoint {
    pub component: String,
    pub point: String,
    pub matrices: Matrices,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceFixedPoint {
    pub name: String,
    /// `x_1..x_{2ℓ−2}`
    pub x: Vec<i64>,
    /// `y_1..y_{2ℓ−2}`
    pub y: Vec<i64>,
    pub i: [i64; 2],
    pub j: [i64; 2],
    pub ambient: AmbientPoint,
}

impl SliceFixedPoint {
    /// The two slice moment equations,
    /// `Σ (x_k y_{ℓ−1+k} + x_{ℓ−1+k} y_k) + j_1 i_1` and `j_1 i_1 − j_2 i_2`.
    pub fn moment(&self) -> (i64, i64) {
        let m = self.x.len() / 2;
        let s: i64 = (0..m).map(|k| self.x[k] * self.y[m + k] + self.x[m + k] * self.y[k]).sum();
        (s + self.j[0] * self.i[0], self.j[0] * self.i[0] - self.j[1] * self.i[1])
    }
}

fn ambient(ell: usize, c: usize, upper: bool) -> AmbientPoint {
    let mut m = Matrices::zero(2, ell);
    let d = if upper { [1, -1] } else { [-1, 1] };
    m.x[ell - 1] = RatMatrix::from_i64_rows(&[vec![d[0], 0], vec![0, d[1]]]);
    let e10 = RatMatrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]);
    let component = if c < ell {
        m.x[c - 1] = e10;
        format!("C2[X{c}]")
    } else {
        let s = c - ell + 1;
        m.y[s - 1] = e10;
        format!("C2[Y{s}]")
    };
    m.j = RatMatrix::from_i64_rows(&[vec![1], vec![0]]);
    AmbientPoint {
        component,
        point: if upper { "(1,0)".into() } else { "(-1,0)".into() },
        matrices: m,
    }
}

/// The `4ℓ − 3` torus fixed points of the slice, with their ambient images:
/// `x_c` points, then `y_c` points, then the point where the two components
/// of the central fiber meet.
pub fn slice_fixed_points(ell: usize) -> Result<Vec<SliceFixedPoint>, Error> {
    check_ell(ell)?;
    let k = 2 * ell - 2;
    let mut out = Vec::new();
    for upper in [true, false] {
        for c in 1..=k {
            let mut x = vec![0; k];
            let mut y = vec![0; k];
            let j = if upper {
                x[c - 1] = 1;
                [1, 0]
            } else {
                y[c - 1] = 1;
                [0, 1]
            };
            out.push(SliceFixedPoint {
                name: format!("{}{c}", if upper { "x" } else { "y" }),
                x,
                y,
                i: [0, 0],
                j,
                ambient: ambient(ell, c, upper),
            });
        }
    }
    let mut m = Matrices::zero(2, ell);
    m.x[ell - 1] = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
    m.j = RatMatrix::from_i64_rows(&[vec![1], vec![1]]);
    out.push(SliceFixedPoint {
        name: "double".into(),
        x: vec![0; k],
        y: vec![0; k],
        i: [0, 0],
        j: [1, 1],
        ambient: AmbientPoint {
            component: "T*P1".into(),
            point: "j = (1,1)".into(),
            matrices: m,
        },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::moment_map;

    #[test]
    fn ell3_patterns() {
        let got: Vec<String> = slice_labels(3)
            .unwrap()
            .iter()
            .map(|(l, a)| format!("{l}:{a}"))
            .collect();
        assert_eq!(
            got,
            [
                "α1:++----", "α2:-+----", "mid:------", "α4:-----+", "α5:--+--+", "β1:--++--", "β2:--+---",
                "β4:----+-", "β5:-+--+-"
            ]
        );
    }

    #[test]
    fn lattice_annihilates_weights() {
        for ell in 2..9 {
            let s = slice_spec(ell, &int(-3)).unwrap();
            let prod = s.quantized.lattice.basis.mul(&s.weight_matrix.transpose());
            assert!(prod.is_zero());
            assert_eq!(s.quantized.lattice.rank(), 2 * ell - 2);
            assert_eq!(s.quantized.xi.len(), 2 * ell - 2);
        }
        let s = slice_spec(2, &int(-2)).unwrap();
        assert_eq!(s.quantized.lattice.basis, RatMatrix::from_i64_rows(&[vec![1, 1, 0, 0], vec![0, 1, 1, -1]]));
        assert_eq!(s.quantized.xi, vec![int(2), int(1)]);
    }

    #[test]
    fn label_parsing() {
        assert_eq!("α3".parse::<SliceLabel>().unwrap(), SliceLabel::Alpha(3));
        assert_eq!("beta_2".parse::<SliceLabel>().unwrap(), SliceLabel::Beta(2));
        assert_eq!("mid".parse::<SliceLabel>().unwrap(), SliceLabel::Mid);
        assert!("gamma1".parse::<SliceLabel>().is_err());
        assert!(slice_label_vector(3, SliceLabel::Alpha(3)).is_err());
    }

    #[test]
    fn fixed_points_are_stable_zeros() {
        for ell in 2..7 {
            let pts = slice_fixed_points(ell).unwrap();
            assert_eq!(pts.len(), 4 * ell - 3);
            for p in &pts {
                assert_eq!(p.moment(), (0, 0));
                assert!(moment_map(&p.ambient.matrices).is_zero());
                assert_eq!(p.ambient.matrices.cyclic_span_rank(), 2);
            }
        }
    }
}
