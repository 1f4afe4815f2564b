//! Geometry of the framed bouquet quiver: one vertex, `ℓ` loops, framing 1.

mod fixed_points;
mod leaves;
mod slice;

pub use fixed_points::{fixed_points, moment_map, FilteredInstance, FixedPointDiagram, FixedPointSearch, Label, Matrices};
pub use leaves::{fixed_components, leaves, ComponentInfo, FixedComponentDecomposition, LeafDescriptor, SubgroupKind};
pub use slice::{
    slice_fixed_points, slice_label_vector, slice_labels, slice_spec, slice_weight_matrix, AmbientPoint, HyperplaneRow, SliceFixedPoint,
    SliceLabel, SliceSpec,
};

use serde::Serialize;

use crate::exact::rational::{self, serde_rational, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BouquetParams {
    /// `dim V`
    pub n: usize,
    /// number of loops
    pub ell: usize,
}

impl BouquetParams {
    pub fn new(n: usize, ell: usize) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::Invalid("dim V must be at least 1".into()));
        }
        check_ell(ell)?;
        Ok(BouquetParams { n, ell })
    }
}

pub(crate) fn check_ell(ell: usize) -> Result<(), Error> {
    if ell < 2 {
        return Err(Error::Invalid(
            "ℓ must be at least 2 (one loop is the Jordan quiver, treated elsewhere)".into(),
        ));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FiberFlag {
    Exact,
    Bound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub resolution_dim: i64,
    pub half_dim: i64,
    pub central_fiber_dim: i64,
    pub central_fiber_flag: FiberFlag,
}

pub fn dims(p: BouquetParams) -> Dims {
    let (n, l) = (p.n as i64, p.ell as i64);
    let (central_fiber_dim, central_fiber_flag) = if n == 2 {
        (2 * l - 1, FiberFlag::Exact)
    } else {
        ((n * n - n) * l - n * n + 2 * n - 1, FiberFlag::Bound)
    };
    Dims {
        resolution_dim: 2 * l * (n * n - 1) + 2 * n - 2 * n * n,
        half_dim: (l - 1) * n * n - l + n,
        central_fiber_dim,
        central_fiber_flag,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Periods {
    #[serde(with = "serde_rational::vec")]
    pub slice_restriction: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub slice_period: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub ambient_period_shift: Rational,
}

/// Restriction of the ambient parameter to the slice, the slice period, and
/// the character shift `ζ = ½ tr`.
pub fn periods(ell: usize, lambda: &Rational) -> Result<Periods, Error> {
    check_ell(ell)?;
    let h = rational::half();
    Ok(Periods {
        slice_restriction: vec![lambda.clone(), lambda.clone()],
        slice_period: vec![lambda + &h, lambda + &h],
        ambient_period_shift: h,
    })
}
