//! Affine functionals and systems of sign conditions on them.

use serde::{Deserialize, Serialize};

use super::matrix::dot;
use super::rational::{self, serde_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineFunctional {
    #[serde(with = "serde_rational::vec")]
    pub linear_part: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub constant: Rational,
}

impl AffineFunctional {
    pub fn new(linear_part: Vec<Rational>, constant: Rational) -> Self {
        AffineFunctional {
            linear_part,
            constant,
        }
    }

    pub fn dim(&self) -> usize {
        self.linear_part.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.linear_part, x) + &self.constant
    }

    pub fn neg(&self) -> Self {
        AffineFunctional {
            linear_part: self.linear_part.iter().map(|q| -q).collect(),
            constant: -&self.constant,
        }
    }

    pub fn shifted(&self, by: &Rational) -> Self {
        AffineFunctional {
            linear_part: self.linear_part.clone(),
            constant: &self.constant + by,
        }
    }
}

/// Condition imposed on a functional's value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sense {
    /// value ≥ 0
    Ge,
    /// value ≤ 0
    Le,
    /// value = 0
    Eq,
}

impl Sense {
    pub fn holds(self, v: &Rational) -> bool {
        match self {
            Sense::Ge => rational::sign(v) >= 0,
            Sense::Le => rational::sign(v) <= 0,
            Sense::Eq => rational::sign(v) == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InequalitySystem {
    pub dim: usize,
    pub functionals: Vec<AffineFunctional>,
    pub senses: Vec<Sense>,
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        InequalitySystem {
            dim,
            functionals: Vec::new(),
            senses: Vec::new(),
        }
    }

    pub fn push(&mut self, f: AffineFunctional, s: Sense) {
        assert_eq!(f.dim(), self.dim, "functional dimension mismatch");
        self.functionals.push(f);
        self.senses.push(s);
    }

    pub fn with(mut self, f: AffineFunctional, s: Sense) -> Self {
        self.push(f, s);
        self
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.functionals
            .iter()
            .zip(&self.senses)
            .all(|(f, s)| s.holds(&f.eval(x)))
    }

    /// The same conditions rewritten as `g ≥ 0` rows (equalities become two rows).
    pub fn as_ge_rows(&self) -> Vec<AffineFunctional> {
        let mut out = Vec::new();
        for (f, s) in self.functionals.iter().zip(&self.senses) {
            match s {
                Sense::Ge => out.push(f.clone()),
                Sense::Le => out.push(f.neg()),
                Sense::Eq => {
                    out.push(f.clone());
                    out.push(f.neg());
                }
            }
        }
        out
    }

    pub fn concat(&self, other: &InequalitySystem) -> InequalitySystem {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        out.functionals.extend(other.functionals.iter().cloned());
        out.senses.extend(other.senses.iter().cloned());
        out
    }
}
