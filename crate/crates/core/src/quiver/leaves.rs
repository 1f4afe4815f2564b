//! Symplectic leaves of `M̄(n, ℓ)` for `n ∈ {2, 3}` and the fixed loci of
//! special one-parameter subgroups on `M̄^θ(2, ℓ)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{check_ell, BouquetParams};
use crate::exact::rational::{self, int, serde_rational, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafDescriptor {
    pub leaf_type: usize,
    pub dim_vector_decomposition: String,
    pub leaf_dim: i64,
    pub stabilizer: String,
    pub namikawa_group: String,
}

/// Leaf table of `M̄(n, ℓ)`, in the usual order (open leaf first).
pub fn leaves(p: BouquetParams) -> Result<Vec<LeafDescriptor>, Error> {
    let l = p.ell as i64;
    let rows: Vec<(&str, i64, &str)> = match p.n {
        2 => vec![
            ("(2,1)", 6 * l - 4, "{id}"),
            ("(2,0)⊕(0,1)", 6 * l - 6, "C*·id"),
            ("(1,0)⊕(1,0)⊕(0,1)", 2 * l, "diag(λ,μ)"),
            ("(1,0)^⊕2⊕(0,1)", 0, "GL2"),
        ],
        3 => vec![
            ("(3,1)", 16 * l - 12, "{id}"),
            ("(3,0)⊕(0,1)", 16 * l - 16, "C*·id"),
            ("(2,1)⊕(1,0)", 6 * l - 4, "diag(1,1,ν)"),
            ("(2,0)⊕(1,0)⊕(0,1)", 6 * l - 6, "diag(λ,λ,μ)"),
            ("(1,0)⊕(1,0)⊕(1,0)⊕(0,1)", 4 * l, "diag(λ,ν,μ)"),
            ("(1,0)^⊕2⊕(1,0)⊕(0,1)", 2 * l, "[[*,*,0],[*,*,0],[0,0,μ]]"),
            ("(1,0)^⊕3⊕(0,1)", 0, "GL3"),
        ],
        n => return Err(Error::UnsupportedDim(format!("leaf tables exist for n ∈ {{2, 3}}, got n = {n}"))),
    };
    let namikawa = if p.n == 2 { "Z/2" } else { "trivial" };
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(k, (dv, dim, stab))| LeafDescriptor {
            leaf_type: k + 1,
            dim_vector_decomposition: dv.into(),
            leaf_dim: dim,
            stabilizer: stab.into(),
            namikawa_group: namikawa.into(),
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubgroupKind {
    /// `ν̃` built from the dominant weights `d_1 ≫ … ≫ d_ℓ > 0`.
    NuTilde,
    /// The variant `ν′` whose fixed locus is two cotangent bundles of `ℙ^{ℓ−1}`.
    NuPrime,
    TPrime,
}

impl FromStr for SubgroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let head = s.split('(').next().unwrap_or("").trim().to_ascii_uppercase().replace('-', "_");
        match head.as_str() {
            "NU_TILDE" => Ok(SubgroupKind::NuTilde),
            "NU_PRIME" => Ok(SubgroupKind::NuPrime),
            "T_PRIME" => Ok(SubgroupKind::TPrime),
            _ => Err(Error::UnknownKind(format!("{s:?}: expected NU_TILDE, NU_PRIME or T_PRIME"))),
        }
    }
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgroupKind::NuTilde => "NU_TILDE",
            SubgroupKind::NuPrime => "NU_PRIME",
            SubgroupKind::TPrime => "T_PRIME",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub label: String,
    pub dim: i64,
    pub quantization_label: Option<String>,
    #[serde(with = "serde_rational::option")]
    pub period: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedComponentDecomposition {
    pub subgroup_kind: SubgroupKind,
    pub ell: usize,
    pub components: Vec<ComponentInfo>,
}

fn comp(label: String, dim: i64, q: Option<String>, period: Option<Rational>) -> ComponentInfo {
    ComponentInfo {
        label,
        dim,
        quantization_label: q,
        period,
    }
}

/// Fixed components of `M̄^θ(2, ℓ)`; `lambda` enters only the `ν′` periods.
pub fn fixed_components(ell: usize, kind: SubgroupKind, lambda: &Rational) -> Result<FixedComponentDecomposition, Error> {
    check_ell(ell)?;
    let l = ell as i64;
    let components = match kind {
        SubgroupKind::NuTilde => {
            let c = format!("C^{}", 2 * l - 2);
            vec![
                comp(format!("M^θ(2,{})", l - 1), 6 * (l - 1) - 4, Some(format!("A_λ(2,{})", l - 1)), None),
                comp(c.clone(), 2 * l - 2, Some(format!("D({c})")), None),
                comp(c.clone(), 2 * l - 2, Some(format!("D({c})")), None),
            ]
        }
        SubgroupKind::NuPrime => {
            let p1 = lambda + int(1) - Rational::new(l.into(), 2.into());
            let p2 = lambda + Rational::new(l.into(), 2.into());
            let tw1 = lambda - int(l - 1);
            let cot = format!("T*P^{}", l - 1);
            vec![
                comp(
                    format!("Z1 = {cot}"),
                    2 * l - 2,
                    Some(format!("D^{{{}}}(P^{})", rational::fmt(&tw1), l - 1)),
                    Some(p1),
                ),
                comp(
                    format!("Z2 = {cot}"),
                    2 * l - 2,
                    Some(format!("D^{{{}}}(P^{})", rational::fmt(lambda), l - 1)),
                    Some(p2),
                ),
            ]
        }
        SubgroupKind::TPrime => {
            let mut v = vec![comp("T*P1".into(), 2, None, None)];
            v.extend((1..l).map(|s| comp(format!("C2[X{s}]"), 2, None, None)));
            v.extend((1..l).map(|s| comp(format!("C2[Y{s}]"), 2, None, None)));
            v
        }
    };
    Ok(FixedComponentDecomposition {
        subgroup_kind: kind,
        ell,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::dims;

    #[test]
    fn table_dims() {
        let l5 = leaves(BouquetParams::new(2, 5).unwrap()).unwrap();
        assert_eq!(l5[2].leaf_dim, 10);
        assert_eq!(l5[3].leaf_dim, 0);
        let t3 = leaves(BouquetParams::new(3, 2).unwrap()).unwrap();
        assert_eq!(t3.len(), 7);
        assert_eq!(t3[4].leaf_dim, 8);
        assert_eq!(t3[0].namikawa_group, "trivial");
        assert!(leaves(BouquetParams::new(4, 2).unwrap()).is_err());
        for n in 2..=3 {
            for l in 2..9 {
                let p = BouquetParams::new(n, l).unwrap();
                let t = leaves(p).unwrap();
                assert_eq!(t[0].leaf_dim, dims(p).resolution_dim);
                assert!(t.iter().all(|r| r.leaf_dim % 2 == 0));
                // at n = 3, ℓ = 2 the fourth leaf (6ℓ−6) is smaller than the fifth (4ℓ)
                if l >= 3 {
                    assert!(t.windows(2).all(|w| w[0].leaf_dim >= w[1].leaf_dim));
                }
            }
        }
    }

    #[test]
    fn components() {
        let d = fixed_components(3, SubgroupKind::NuTilde, &int(0)).unwrap();
        let labels: Vec<_> = d.components.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["M^θ(2,2)", "C^4", "C^4"]);
        let t = fixed_components(2, SubgroupKind::TPrime, &int(0)).unwrap();
        let labels: Vec<_> = t.components.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["T*P1", "C2[X1]", "C2[Y1]"]);
        let p = fixed_components(4, SubgroupKind::NuPrime, &int(1)).unwrap();
        let periods: Vec<_> = p.components.iter().map(|c| c.period.clone().unwrap()).collect();
        assert_eq!(periods, vec![int(0), int(3)]);
        assert!("NU_TILDE(5,3,1)".parse::<SubgroupKind>().is_ok());
        assert!(matches!("FOO".parse::<SubgroupKind>(), Err(Error::UnknownKind(_))));
        for l in 2..9 {
            for k in [SubgroupKind::NuTilde, SubgroupKind::NuPrime, SubgroupKind::TPrime] {
                for c in fixed_components(l, k, &int(0)).unwrap().components {
                    assert!(c.dim % 2 == 0 && c.dim <= 6 * l as i64 - 4);
                }
            }
        }
    }
}
