//! Category O of the rank-2 bouquet quantization: parameter classification,
//! closed-form Hom, multiplicity, socle and restriction tables, and an
//! auditor comparing those tables with the slice engine.
//!
//! The stability character is `θ = det⁻¹` and `ν` is the dominant chamber
//! `d_1 ≫ … ≫ d_ℓ > 0`. The other chamber of `θ` is reached by [`reflect`].

mod audit;
mod tables;

pub use audit::{
    audit, audit_at, representative_lambda, slice_res, support_dims_from_slice, AuditCheck, AuditReport,
    CheckStatus, Convention,
};
pub use tables::{
    hom_digraph, multiplicity_table, res_table, socle_table, support_dims_ambient, HomDigraph, MultiplicityTable,
    ResTable, SlicePart, SocleRow,
};

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::rational::{self, int, serde_rational, Rational};
use crate::quiver::check_ell;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    IntegralLarge,
    HalfIntegralLarge,
    GenericLarge,
    InWindowNonsingular,
    Singular,
}

impl Regime {
    pub fn is_large(self) -> bool {
        matches!(self, Regime::IntegralLarge | Regime::HalfIntegralLarge | Regime::GenericLarge)
    }

    pub(crate) fn require_large(self) -> Result<(), Error> {
        if self.is_large() {
            Ok(())
        } else {
            Err(Error::RegimeOutOfScope(format!(
                "{self}: tables are known only for the large regimes"
            )))
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::IntegralLarge => "INTEGRAL_LARGE",
            Regime::HalfIntegralLarge => "HALF_INTEGRAL_LARGE",
            Regime::GenericLarge => "GENERIC_LARGE",
            Regime::InWindowNonsingular => "IN_WINDOW_NONSINGULAR",
            Regime::Singular => "SINGULAR",
        })
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "INTEGRAL_LARGE" | "INTEGRAL" => Ok(Regime::IntegralLarge),
            "HALF_INTEGRAL_LARGE" | "HALF" => Ok(Regime::HalfIntegralLarge),
            "GENERIC_LARGE" | "GENERIC" => Ok(Regime::GenericLarge),
            "IN_WINDOW_NONSINGULAR" => Ok(Regime::InWindowNonsingular),
            "SINGULAR" => Ok(Regime::Singular),
            _ => Err(Error::Parse(format!("unknown regime {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaClass {
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    pub ell: usize,
    pub singular: bool,
    pub abelian_localization: bool,
    pub finite_hom_dim: bool,
    pub regime: Regime,
    pub notes: Vec<&'static str>,
}

const NOTES: [&str; 2] = [
    "abelian localization follows the final criterion λ ∉ (−ℓ, ℓ−1)∩ℤ, λ ≠ −1/2; the introductory window λ < 1−ℓ or λ > ℓ−2 is narrower",
    "finite homological dimension is taken as ¬singular: the large-|λ| statement, the in-window localization statement and the McGerty–Nevins criterion together cover every nonsingular λ",
];

pub fn reflect(lambda: &Rational) -> Rational {
    -int(1) - lambda
}

pub fn classify(ell: usize, lambda: &Rational) -> Result<LambdaClass, Error> {
    check_ell(ell)?;
    let l = ell as i64;
    let integral = rational::is_integer(lambda);
    let half = rational::is_strict_half_integer(lambda);
    let singular = (integral && *lambda > int(-l) && *lambda < int(l - 1)) || *lambda == -rational::half();
    let h = rational::half();
    let regime = if singular {
        Regime::Singular
    } else if integral && (*lambda <= int(-l) || *lambda >= int(l - 1)) {
        Regime::IntegralLarge
    } else if half && (*lambda <= int(-l) - &h || *lambda >= int(l) - &h) {
        Regime::HalfIntegralLarge
    } else if !integral && !half && (*lambda < int(1 - l) || *lambda > int(l - 2)) {
        Regime::GenericLarge
    } else {
        Regime::InWindowNonsingular
    };
    Ok(LambdaClass {
        lambda: lambda.clone(),
        ell,
        singular,
        abelian_localization: !singular,
        finite_hom_dim: !singular,
        regime,
        notes: NOTES.to_vec(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ThetaSign {
    /// `θ = det`
    Plus,
    /// `θ = det⁻¹`
    Minus,
}

impl FromStr for ThetaSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "+" | "det" | "plus" => Ok(ThetaSign::Plus),
            "-" | "det-1" | "det^-1" | "minus" => Ok(ThetaSign::Minus),
            _ => Err(Error::Parse(format!("theta sign must be + or -, got {s:?}"))),
        }
    }
}

/// `k λ − k c ∈ ℤ` with the given sign, i.e. `λ ∈ ℤ_{≥0}/k + c` (`nonneg`)
/// or `λ ∈ ℤ_{≤0}/k + c`.
fn in_family(lambda: &Rational, k: i64, c: &Rational, nonneg: bool) -> bool {
    let t = (lambda - c) * int(k);
    rational::is_integer(&t) && (t.is_zero() || t.is_positive() == nonneg)
}

/// McGerty–Nevins sufficient condition for exactness of global sections.
///
/// `θ = det⁻¹` excludes `ℤ_{≥0}/k + (ℓ−1)(n−k)`, `θ = det` excludes its
/// reflection `ℤ_{≤0}/k − (ℓ−1)(n−k) − 1`, for `k = 1..n`.
pub fn mn_exact(n: usize, ell: usize, lambda: &Rational, theta: ThetaSign) -> bool {
    let (n, l) = (n as i64, ell as i64);
    !(1..=n).any(|k| {
        let base = int((l - 1) * (n - k));
        match theta {
            ThetaSign::Minus => in_family(lambda, k, &base, true),
            ThetaSign::Plus => in_family(lambda, k, &(-base - int(1)), false),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn classify_examples() {
        assert!(classify(2, &int(0)).unwrap().singular);
        assert!(classify(5, &ratio(-1, 2)).unwrap().singular);
        let c = classify(2, &int(-3)).unwrap();
        assert!(c.abelian_localization && c.finite_hom_dim);
        assert_eq!(c.regime, Regime::IntegralLarge);
        assert_eq!(classify(3, &ratio(-7, 2)).unwrap().regime, Regime::HalfIntegralLarge);
        assert_eq!(classify(3, &ratio(-5, 2)).unwrap().regime, Regime::InWindowNonsingular);
        assert_eq!(classify(3, &ratio(-7, 3)).unwrap().regime, Regime::GenericLarge);
        assert_eq!(classify(3, &ratio(1, 3)).unwrap().regime, Regime::InWindowNonsingular);
    }

    #[test]
    fn mn_examples() {
        assert!(!mn_exact(2, 3, &ratio(3, 2), ThetaSign::Minus));
        assert!(mn_exact(2, 3, &ratio(-7, 4), ThetaSign::Minus));
        assert!(!mn_exact(2, 2, &int(-2), ThetaSign::Plus));
    }

    #[test]
    fn reflect_fixes_minus_half() {
        assert_eq!(reflect(&int(0)), int(-1));
        assert_eq!(reflect(&ratio(-1, 2)), ratio(-1, 2));
    }
}
