//! Closed-form tables for the standards `Δ_1..Δ_{2ℓ}` and simples `S_1..S_{2ℓ}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::audit::{slice_res, Convention};
use super::Regime;
use crate::quiver::{check_ell, SliceLabel};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomDigraph {
    pub ell: usize,
    pub regime: Regime,
    pub vertices: Vec<String>,
    /// `(s, t)`: a nonzero map `Δ_s → Δ_t`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl HomDigraph {
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph homs_l{} {{\n", self.ell);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"Δ{a}\" -> \"Δ{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn hom_digraph(ell: usize, regime: Regime) -> Result<HomDigraph, Error> {
    check_ell(ell)?;
    regime.require_large()?;
    let l = ell;
    let mut edges = BTreeSet::new();
    match regime {
        Regime::IntegralLarge => {
            for i in (2..=2 * l).filter(|&i| i != l + 1) {
                edges.insert((i, i - 1));
            }
            edges.insert((l + 2, l));
            edges.insert((l + 1, l - 1));
            for i in 0..=l - 2 {
                edges.insert((2 * l - i, i + 1));
            }
        }
        Regime::HalfIntegralLarge => {
            for i in 0..l {
                edges.insert((2 * l - i, i + 1));
            }
        }
        _ => {}
    }
    Ok(HomDigraph {
        ell,
        regime,
        vertices: (1..=2 * l).map(|i| format!("Δ{i}")).collect(),
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub ell: usize,
    pub regime: Regime,
    /// `rows[i − 1]`: indices of the simple subquotients of `Δ_i` in socle
    /// filtration order, starting with `i`.
    pub rows: Vec<Vec<usize>>,
}

impl MultiplicityTable {
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// `[S_k : Δ_i]` with rows `k` and columns `i`.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.rows.len();
        (1..=n)
            .map(|k| (1..=n).map(|i| u8::from(self.row(i).contains(&k))).collect())
            .collect()
    }

    /// Matrix form with a `Δ_i` header row and one `S_k` row per simple.
    pub fn to_tsv(&self) -> String {
        let n = self.rows.len();
        let mut s: String = (1..=n).map(|i| format!("\tΔ{i}")).collect();
        s.push('\n');
        for (k, row) in self.matrix().iter().enumerate() {
            s.push_str(&format!("S{}", k + 1));
            for m in row {
                s.push_str(&format!("\t{m}"));
            }
            s.push('\n');
        }
        s
    }
}

pub fn multiplicity_table(ell: usize, regime: Regime) -> Result<MultiplicityTable, Error> {
    check_ell(ell)?;
    regime.require_large()?;
    let l = ell;
    let rows = (1..=2 * l)
        .map(|i| match regime {
            Regime::IntegralLarge => {
                if i == 2 * l {
                    vec![i]
                } else if i > l + 1 {
                    vec![i, i + 1]
                } else if i == l || i == l + 1 {
                    vec![i, l + 2]
                } else if i == l - 1 {
                    vec![i, l, l + 1, l + 2]
                } else {
                    vec![i, i + 1, 2 * l + 1 - i]
                }
            }
            Regime::HalfIntegralLarge if i <= l => vec![i, 2 * l - i + 1],
            _ => vec![i],
        })
        .collect();
    Ok(MultiplicityTable { ell, regime, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleRow {
    pub k: usize,
    /// Simple indices in `Soc(Δ_k)`.
    pub socle: Vec<usize>,
    /// `Soc(Δ_k) = Δ_k`.
    pub standard_is_simple: bool,
}

pub fn socle_table(ell: usize, regime: Regime) -> Result<Vec<SocleRow>, Error> {
    check_ell(ell)?;
    regime.require_large()?;
    let l = ell;
    Ok((1..=2 * l)
        .map(|k| {
            let s = match regime {
                Regime::IntegralLarge if k == 2 * l => None,
                Regime::IntegralLarge if k > l + 1 => Some(k + 1),
                Regime::IntegralLarge if k == l || k == l + 1 => Some(l + 2),
                Regime::IntegralLarge => Some(2 * l - k + 1),
                Regime::HalfIntegralLarge if k <= l => Some(2 * l - k + 1),
                _ => None,
            };
            SocleRow {
                k,
                socle: vec![s.unwrap_or(k)],
                standard_is_simple: s.is_none(),
            }
        })
        .collect())
}

/// Image under restriction to the slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "labels", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SlicePart {
    Sum(Vec<SliceLabel>),
    Zero,
    /// The formula names a slice index that does not exist.
    Ambiguous(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResTable {
    pub ell: usize,
    pub regime: Regime,
    pub delta_images: BTreeMap<usize, SlicePart>,
    pub simple_images: BTreeMap<usize, SlicePart>,
}

/// Restriction images as printed, with `α_ℓ ≡ α_mid ≡ β_ℓ`.
pub fn res_table(ell: usize, regime: Regime) -> Result<ResTable, Error> {
    check_ell(ell)?;
    if !matches!(regime, Regime::IntegralLarge | Regime::HalfIntegralLarge) {
        return Err(Error::RegimeOutOfScope(format!(
            "{regime}: restriction images are tabulated for the integral and half-integral regimes"
        )));
    }
    let image = |i: usize| match slice_res(ell, Convention::Printed, i) {
        Some(v) => SlicePart::Sum(v),
        None => SlicePart::Ambiguous(format!("Δ{i} would map to α{i}, β{i}, which do not exist for ℓ = {ell}")),
    };
    let delta_images: BTreeMap<usize, SlicePart> = (1..=2 * ell).map(|i| (i, image(i))).collect();
    let mut simple_images = delta_images.clone();
    if regime == Regime::HalfIntegralLarge {
        simple_images.insert(ell, SlicePart::Zero);
    }
    Ok(ResTable {
        ell,
        regime,
        delta_images,
        simple_images,
    })
}

/// `dim Supp(S_i)` for `i = 1..2ℓ`, integral regime.
pub fn support_dims_ambient(ell: usize) -> Result<BTreeMap<usize, i64>, Error> {
    check_ell(ell)?;
    let l = ell as i64;
    Ok((1..=2 * ell)
        .map(|i| {
            let d = if i == 1 {
                2 * l
            } else if i <= ell + 1 {
                4 * l - 3
            } else {
                4 * l - 2
            };
            (i, d)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ell3_hom_figures() {
        let g = hom_digraph(3, Regime::IntegralLarge).unwrap();
        let want: BTreeSet<_> = [(2, 1), (3, 2), (5, 4), (6, 5), (5, 3), (4, 2), (6, 1), (5, 2)].into_iter().collect();
        assert_eq!(g.edges, want);
        let h = hom_digraph(3, Regime::HalfIntegralLarge).unwrap();
        assert_eq!(h.edges, [(6, 1), (5, 2), (4, 3)].into_iter().collect());
        assert!(hom_digraph(4, Regime::GenericLarge).unwrap().edges.is_empty());
        assert!(matches!(hom_digraph(3, Regime::Singular), Err(Error::RegimeOutOfScope(_))));
    }

    #[test]
    fn ell2_multiplicities() {
        let m = multiplicity_table(2, Regime::IntegralLarge).unwrap();
        assert_eq!(m.rows, vec![vec![1, 2, 3, 4], vec![2, 4], vec![3, 4], vec![4]]);
        assert_eq!(multiplicity_table(3, Regime::HalfIntegralLarge).unwrap().row(2), &[2, 5]);
    }

    #[test]
    fn socles() {
        let s = socle_table(3, Regime::IntegralLarge).unwrap();
        assert_eq!(s[1].socle, vec![5]);
        assert_eq!((s[2].socle.clone(), s[3].socle.clone()), (vec![5], vec![5]));
        let h = socle_table(4, Regime::HalfIntegralLarge).unwrap();
        assert!(h[5].standard_is_simple);
    }

    #[test]
    fn res_entries() {
        let r = res_table(3, Regime::HalfIntegralLarge).unwrap();
        assert_eq!(r.simple_images[&3], SlicePart::Zero);
        assert_eq!(r.delta_images[&3], SlicePart::Sum(vec![SliceLabel::Mid]));
        assert_eq!(r.delta_images[&4], SlicePart::Sum(vec![SliceLabel::Mid]));
        assert_eq!(r.simple_images[&1], SlicePart::Sum(vec![SliceLabel::Alpha(2), SliceLabel::Beta(2)]));
        assert!(matches!(r.delta_images[&6], SlicePart::Ambiguous(_)));
    }

    #[test]
    fn ambient_supports() {
        let d = support_dims_ambient(2).unwrap();
        assert_eq!(d.values().copied().collect::<Vec<_>>(), vec![4, 5, 5, 6]);
    }
}
