//! Hypertoric category O from a (quantized) polarized arrangement.
//!
//! A quantized arrangement fixes a lattice `Λ₀ ⊂ ℤⁿ` with basis `u_1..u_d`,
//! a base point `b`, and a covector `ξ` on `V₀` coordinates. Restricting to
//! `V_λ = b + span(u_j)` turns the coordinate functions into affine
//! functionals `h_i(c) = b_i + Σ c_j (u_j)_i` on `ℚ^d`.
//!
//! Chambers are cut out by oriented functionals `g_i = σ h_i` with
//! `σ = +1` ([`Orientation::Standard`]) or `σ = −1` ([`Orientation::Reversed`]);
//! `+` imposes `g_i ≥ 0`, `−` imposes `g_i ≤ −s` with the shift `s ∈ {0, 1}`,
//! and the objective maximized on chambers is `σ ξ`.

mod category;
mod chambers;

pub use category::{
    block_decomposition, blocks, hom_dim, socle, subquotients, support_dim, support_kept_weights,
    BlockDecomposition, BlockPartition, LocalBlock,
};
pub use chambers::{
    bounded_vectors, bounded_vectors_with, feasible_vectors, feasible_vectors_with, is_linked,
    is_regular, pbf, pbf_sweep, Chamber,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::matrix::dot;
use crate::exact::rational::{self, serde_rational, Rational};
use crate::exact::{AffineFunctional, InequalitySystem, IntegerLattice, Sense};
use crate::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

impl Orientation {
    pub fn sigma(self) -> Rational {
        match self {
            Orientation::Standard => Rational::one(),
            Orientation::Reversed => -Rational::one(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A `±` assignment on a set of hyperplane indices (0-based, ascending).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    pub indices: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl SignVector {
    pub fn new(indices: Vec<usize>, signs: Vec<Sign>) -> Self {
        assert_eq!(indices.len(), signs.len(), "one sign per index");
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must ascend");
        SignVector { indices, signs }
    }

    /// Parses a string of `+`/`-` over the indices `0..len`.
    pub fn parse_full(s: &str) -> Result<Self, Error> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(Error::Parse(format!("bad sign character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignVector::new((0..signs.len()).collect(), signs))
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Sign> {
        self.indices
            .iter()
            .position(|&i| i == index)
            .map(|k| self.signs[k])
    }

    pub fn restrict(&self, indices: &[usize]) -> SignVector {
        let signs = indices
            .iter()
            .map(|&i| self.get(i).expect("index present in sign vector"))
            .collect();
        SignVector::new(indices.to_vec(), signs)
    }

    pub fn hamming(&self, other: &SignVector) -> usize {
        assert_eq!(self.indices, other.indices, "sign vectors on different index sets");
        self.signs.iter().zip(&other.signs).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The triple `(Λ₀, η, ξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedArrangement {
    pub ambient_dim: usize,
    pub lattice: IntegerLattice,
    pub eta: Vec<BigInt>,
    pub xi: Vec<Rational>,
    pub orientation: Orientation,
}

impl PolarizedArrangement {
    /// The classical arrangement viewed as a quantized one with integral base
    /// point `η` and every wall present.
    pub fn as_quantized(&self) -> QuantizedPolarizedArrangement {
        QuantizedPolarizedArrangement {
            ambient_dim: self.ambient_dim,
            lattice: self.lattice.clone(),
            base_point: self.eta.iter().map(|e| Rational::from_integer(e.clone())).collect(),
            xi: self.xi.clone(),
            orientation: self.orientation,
        }
    }
}

/// The triple `(Λ₀, Λ, ξ)` with `Λ = base_point + Λ₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantizedPolarizedArrangement {
    pub ambient_dim: usize,
    pub lattice: IntegerLattice,
    pub base_point: Vec<Rational>,
    pub xi: Vec<Rational>,
    pub orientation: Orientation,
}

/// Functionals of a quantized arrangement pulled back to `V_λ` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedArrangement {
    pub dim: usize,
    pub functionals: Vec<AffineFunctional>,
    pub integrality_set: Vec<usize>,
    #[serde(with = "serde_rational::vec")]
    pub xi: Vec<Rational>,
    pub orientation: Orientation,
    #[serde(with = "serde_rational")]
    pub shift: Rational,
    #[serde(with = "serde_rational::vec")]
    pub base_point: Vec<Rational>,
    #[serde(skip)]
    pub lattice: IntegerLattice,
}

pub fn restrict(q: &QuantizedPolarizedArrangement) -> Result<RestrictedArrangement, Error> {
    restrict_with_shift(q, Rational::zero())
}

pub fn restrict_with_shift(
    q: &QuantizedPolarizedArrangement,
    shift: Rational,
) -> Result<RestrictedArrangement, Error> {
    let d = q.lattice.rank();
    let n = q.ambient_dim;
    if d == 0 {
        return Err(Error::Invalid("lattice rank must be at least 1".into()));
    }
    if q.lattice.ambient_dim != n || q.base_point.len() != n {
        return Err(Error::Invalid("lattice / base point dimension differs from ambient_dim".into()));
    }
    if q.lattice.basis.rank() != d {
        return Err(Error::Invalid("lattice basis rows are dependent".into()));
    }
    if q.xi.len() != d {
        return Err(Error::Invalid(format!("xi has length {}, lattice rank is {d}", q.xi.len())));
    }
    if !(shift.is_zero() || shift.is_one()) {
        return Err(Error::Invalid("shift must be 0 or 1".into()));
    }
    let functionals = (0..n)
        .map(|i| {
            let lin = (0..d).map(|j| q.lattice.basis.get(j, i).clone()).collect();
            AffineFunctional::new(lin, q.base_point[i].clone())
        })
        .collect();
    let integrality_set = (0..n).filter(|&i| rational::frac_is_zero(&q.base_point[i])).collect();
    Ok(RestrictedArrangement {
        dim: d,
        functionals,
        integrality_set,
        xi: q.xi.clone(),
        orientation: q.orientation,
        shift,
        base_point: q.base_point.clone(),
        lattice: q.lattice.clone(),
    })
}

impl RestrictedArrangement {
    pub fn n(&self) -> usize {
        self.functionals.len()
    }

    /// `g_i = σ h_i`.
    pub fn oriented(&self, i: usize) -> AffineFunctional {
        match self.orientation {
            Orientation::Standard => self.functionals[i].clone(),
            Orientation::Reversed => self.functionals[i].neg(),
        }
    }

    /// `σ ξ`, the objective maximized on chambers.
    pub fn objective(&self) -> Vec<Rational> {
        let s = self.orientation.sigma();
        self.xi.iter().map(|x| x * &s).collect()
    }

    pub fn objective_value(&self, c: &[Rational]) -> Rational {
        dot(&self.objective(), c)
    }

    /// The condition contributed by index `i` with sign `sign`, as `f ≥ 0`.
    pub fn half_space(&self, i: usize, sign: Sign) -> AffineFunctional {
        let g = self.oriented(i);
        match sign {
            Sign::Plus => g,
            Sign::Minus => g.neg().shifted(&-self.shift.clone()),
        }
    }

    /// Value that `g_i` takes on the wall of the half space for `sign`.
    pub fn wall_value(&self, sign: Sign) -> Rational {
        match sign {
            Sign::Plus => Rational::zero(),
            Sign::Minus => -self.shift.clone(),
        }
    }

    /// `P_α` as an inequality system on `ℚ^d`.
    pub fn chamber_system(&self, alpha: &SignVector) -> InequalitySystem {
        let mut s = InequalitySystem::new(self.dim);
        for (&i, &sg) in alpha.indices.iter().zip(&alpha.signs) {
            s.push(self.half_space(i, sg), Sense::Ge);
        }
        s
    }

    /// `W` coordinates of a point of `V_λ`.
    pub fn w_coords(&self, c: &[Rational]) -> Vec<Rational> {
        self.functionals.iter().map(|f| f.eval(c)).collect()
    }

    /// Same data with every index treated as a wall.
    pub fn all_walls(&self) -> RestrictedArrangement {
        let mut r = self.clone();
        r.integrality_set = (0..self.n()).collect();
        r
    }

    /// Every sign vector over the integrality set, `+` before `−`
    /// lexicographically.
    pub fn all_sign_vectors(&self) -> Vec<SignVector> {
        let idx = self.integrality_set.clone();
        let k = idx.len();
        assert!(k < 31, "too many walls to enumerate");
        (0..1u32 << k)
            .map(|mask| {
                let signs = (0..k)
                    .map(|b| {
                        if mask >> (k - 1 - b) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect();
                SignVector::new(idx.clone(), signs)
            })
            .collect()
    }
}
