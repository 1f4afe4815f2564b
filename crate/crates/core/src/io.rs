//! The arrangement file format and the text tables shared by the command line
//! and the tests.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exact::rational::{self, serde_rational, Rational};
use crate::exact::IntegerLattice;
use crate::hypertoric::{Chamber, Orientation, PolarizedArrangement, QuantizedPolarizedArrangement};
use crate::Error;

/// JSON form of a quantized polarized arrangement.
///
/// ```
/// use bouquet_core::io::ArrangementFile;
///
/// let text = r#"{
///   "ambient_dim": 2,
///   "lattice_basis": [[1, -1]],
///   "base_point": ["1/2", "0"],
///   "xi": ["1"]
/// }"#;
/// let a = ArrangementFile::from_json(text).unwrap();
/// let q = a.to_quantized().unwrap();
/// assert_eq!(q.base_point[0].to_string(), "1/2");
/// assert_eq!(ArrangementFile::from_json(&a.to_json()).unwrap(), a);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub ambient_dim: usize,
    pub lattice_basis: Vec<Vec<i64>>,
    #[serde(with = "serde_rational::vec")]
    pub base_point: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub xi: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<i64>>,
    /// Defaults to [`Orientation::Standard`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
}

impl ArrangementFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let a: ArrangementFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        a.validate()?;
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("arrangement serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.ambient_dim;
        if self.lattice_basis.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("lattice_basis rows must have length ambient_dim = {n}")));
        }
        if self.base_point.len() != n {
            return Err(Error::Invalid(format!("base_point must have length ambient_dim = {n}")));
        }
        if self.xi.len() != self.lattice_basis.len() {
            return Err(Error::Invalid(format!(
                "xi has length {}, lattice_basis has {} rows",
                self.xi.len(),
                self.lattice_basis.len()
            )));
        }
        if self.eta.as_ref().is_some_and(|e| e.len() != n) {
            return Err(Error::Invalid(format!("eta must have length ambient_dim = {n}")));
        }
        Ok(())
    }

    fn lattice(&self) -> Result<IntegerLattice, Error> {
        let l = IntegerLattice::from_i64_rows(&self.lattice_basis)?;
        if l.ambient_dim != self.ambient_dim {
            return Err(Error::Invalid("lattice_basis is empty".into()));
        }
        Ok(l)
    }

    pub fn to_quantized(&self) -> Result<QuantizedPolarizedArrangement, Error> {
        self.validate()?;
        Ok(QuantizedPolarizedArrangement {
            ambient_dim: self.ambient_dim,
            lattice: self.lattice()?,
            base_point: self.base_point.clone(),
            xi: self.xi.clone(),
            orientation: self.orientation.unwrap_or_default(),
        })
    }

    /// The classical side; requires `eta`.
    pub fn to_polarized(&self) -> Result<PolarizedArrangement, Error> {
        self.validate()?;
        let eta = self
            .eta
            .as_ref()
            .ok_or_else(|| Error::Invalid("eta is required for the classical arrangement".into()))?;
        Ok(PolarizedArrangement {
            ambient_dim: self.ambient_dim,
            lattice: self.lattice()?,
            eta: eta.iter().map(|&e| BigInt::from(e)).collect(),
            xi: self.xi.clone(),
            orientation: self.orientation.unwrap_or_default(),
        })
    }

    pub fn from_parts(q: &QuantizedPolarizedArrangement, eta: Option<&[BigInt]>) -> Result<Self, Error> {
        let small = |b: &BigInt| b.to_i64().ok_or_else(|| Error::Invalid(format!("{b} does not fit in i64")));
        let lattice_basis = (0..q.lattice.rank())
            .map(|i| {
                q.lattice
                    .basis
                    .row(i)
                    .iter()
                    .map(|x| small(&x.to_integer()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let eta = eta.map(|e| e.iter().map(small).collect::<Result<Vec<_>, _>>()).transpose()?;
        Ok(ArrangementFile {
            ambient_dim: q.ambient_dim,
            lattice_basis,
            base_point: q.base_point.clone(),
            xi: q.xi.clone(),
            eta,
            orientation: Some(q.orientation),
        })
    }
}

/// Header of the chamber dump.
pub const CHAMBER_TSV_HEADER: &str = "sign_vector\tvertex\txi_value\tsubquotients";

/// One chamber dump row: sign vector, vertex in `W` coordinates, `ξ`-value
/// and the comma-separated subquotient list.
pub fn chamber_tsv_row(c: &Chamber, subquotients: &[impl ToString]) -> String {
    let sq: Vec<String> = subquotients.iter().map(ToString::to_string).collect();
    format!(
        "{}\t{}\t{}\t{}",
        c.alpha,
        rational::fmt_vec(&c.vertex_w),
        rational::fmt(&c.xi_value),
        sq.join(",")
    )
}

/// Tab-separated table with a header row.
pub fn tsv<R: AsRef<str>>(header: &[R], rows: &[Vec<String>]) -> String {
    let mut s = header.iter().map(AsRef::as_ref).collect::<Vec<_>>().join("\t");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join("\t"));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::quiver::slice_spec;

    #[test]
    fn slice_round_trip() {
        let s = slice_spec(3, &int(-4)).unwrap();
        let a = ArrangementFile::from_parts(&s.quantized, Some(&s.arrangement.eta)).unwrap();
        let back = ArrangementFile::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_quantized().unwrap(), s.quantized);
        assert_eq!(back.to_polarized().unwrap(), s.arrangement);
    }

    #[test]
    fn malformed_files() {
        let bad_len = r#"{"ambient_dim":3,"lattice_basis":[[1,0]],"base_point":["0","0","0"],"xi":["1"]}"#;
        assert!(matches!(ArrangementFile::from_json(bad_len), Err(Error::Invalid(_))));
        let bad_q = r#"{"ambient_dim":1,"lattice_basis":[[1]],"base_point":["1/0"],"xi":["1"]}"#;
        assert!(matches!(ArrangementFile::from_json(bad_q), Err(Error::Parse(_))));
        let extra = r#"{"ambient_dim":1,"lattice_basis":[[1]],"base_point":["0"],"xi":["1"],"zeta":1}"#;
        assert!(matches!(ArrangementFile::from_json(extra), Err(Error::Parse(_))));
        let dep = r#"{"ambient_dim":2,"lattice_basis":[[1,1],[2,2]],"base_point":["0","0"],"xi":["1","0"]}"#;
        assert!(ArrangementFile::from_json(dep).unwrap().to_quantized().is_err());
    }
}
