//! Standards, simples, blocks and supports.

use std::collections::BTreeMap;

use serde::Serialize;

use super::chambers::{pbf, Chamber};
use super::{restrict_with_shift, QuantizedPolarizedArrangement, RestrictedArrangement, Sign, SignVector};
use crate::exact::rational::Rational;
use crate::exact::{cone_positive_support, lattice_member, poly_contains, RatMatrix};
use crate::Error;

fn find<'a>(chambers: &'a [Chamber], alpha: &SignVector) -> Result<&'a Chamber, Error> {
    chambers
        .iter()
        .find(|c| &c.alpha == alpha)
        .ok_or_else(|| Error::UnknownVector(format!("{alpha} is not a bounded feasible sign vector")))
}

/// `{γ ∈ 𝒫 : P_γ ⊆ C_α}`, the simple constituents of the standard `Δ_α`,
/// in the order of `chambers`.
pub fn subquotients(
    _r: &RestrictedArrangement,
    chambers: &[Chamber],
    alpha: &SignVector,
) -> Result<Vec<SignVector>, Error> {
    let ca = find(chambers, alpha)?;
    Ok(chambers
        .iter()
        .filter(|g| poly_contains(&g.p, &ca.cone))
        .map(|g| g.alpha.clone())
        .collect())
}

/// `dim Hom(Δ_γ, Δ_α) ∈ {0, 1}`.
pub fn hom_dim(
    r: &RestrictedArrangement,
    chambers: &[Chamber],
    gamma: &SignVector,
    alpha: &SignVector,
) -> Result<u8, Error> {
    find(chambers, gamma)?;
    Ok(u8::from(subquotients(r, chambers, alpha)?.contains(gamma)))
}

/// Constituents of `Δ_α` at maximal Hamming distance from `α`.
pub fn socle(constituents: &[SignVector], alpha: &SignVector) -> Vec<SignVector> {
    let top = constituents.iter().map(|g| g.hamming(alpha)).max().unwrap_or(0);
    constituents
        .iter()
        .filter(|g| g.hamming(alpha) == top)
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    pub classes: Vec<Vec<SignVector>>,
}

/// Classes of `α ≡ γ ⇔ a_α − a_γ ∈ Λ₀`, ordered by their top objective value.
pub fn blocks(r: &RestrictedArrangement, chambers: &[Chamber]) -> BlockPartition {
    let mut classes: Vec<Vec<&Chamber>> = Vec::new();
    for c in chambers {
        let home = classes.iter().position(|cls| {
            let diff: Vec<Rational> = c.vertex_w.iter().zip(&cls[0].vertex_w).map(|(a, b)| a - b).collect();
            lattice_member(&r.lattice, &diff)
        });
        match home {
            Some(k) => classes[k].push(c),
            None => classes.push(vec![c]),
        }
    }
    for cls in classes.iter_mut() {
        cls.sort_by(|a, b| b.xi_value.cmp(&a.xi_value).then_with(|| a.alpha.cmp(&b.alpha)));
    }
    classes.sort_by(|a, b| b[0].xi_value.cmp(&a[0].xi_value).then_with(|| a[0].alpha.cmp(&b[0].alpha)));
    BlockPartition {
        classes: classes
            .into_iter()
            .map(|cls| cls.into_iter().map(|c| c.alpha.clone()).collect())
            .collect(),
    }
}

/// One block of `O_λ` realized by the arrangement recentred at a vertex.
#[derive(Clone, Debug, Serialize)]
pub struct LocalBlock {
    /// Global labels (sign vectors on every wall), by decreasing objective.
    pub members: Vec<SignVector>,
    /// Integral walls at the block's vertices.
    pub local_walls: Vec<usize>,
    /// Local label of each member.
    pub local_labels: BTreeMap<SignVector, SignVector>,
    /// Constituents of each standard, as global labels.
    pub subquotients: BTreeMap<SignVector, Vec<SignVector>>,
    /// Socle of each standard, as global labels.
    pub socles: BTreeMap<SignVector, Vec<SignVector>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    /// Every chamber of the arrangement with all walls present.
    pub chambers: Vec<Chamber>,
    pub blocks: Vec<LocalBlock>,
}

impl BlockDecomposition {
    pub fn block_of(&self, alpha: &SignVector) -> Option<&LocalBlock> {
        self.blocks.iter().find(|b| b.members.contains(alpha))
    }

    pub fn subquotients(&self, alpha: &SignVector) -> Option<&Vec<SignVector>> {
        self.block_of(alpha).and_then(|b| b.subquotients.get(alpha))
    }

    pub fn socle(&self, alpha: &SignVector) -> Option<&Vec<SignVector>> {
        self.block_of(alpha).and_then(|b| b.socles.get(alpha))
    }
}

/// Splits `O_λ` into blocks. Chambers are taken on the arrangement with every
/// wall, grouped by `Λ₀`-equivalence of vertices, and each block is computed
/// on the arrangement recentred at one of its vertices, whose integral walls
/// are exactly the walls seen by that block.
pub fn block_decomposition(r: &RestrictedArrangement) -> Result<BlockDecomposition, Error> {
    let full = r.all_walls();
    let chambers = pbf(&full)?;
    let partition = blocks(&full, &chambers);
    let by_label: BTreeMap<&SignVector, &Chamber> = chambers.iter().map(|c| (&c.alpha, c)).collect();
    let mut out = Vec::new();
    for class in &partition.classes {
        let rep = by_label[&class[0]];
        let q = QuantizedPolarizedArrangement {
            ambient_dim: r.n(),
            lattice: r.lattice.clone(),
            base_point: rep.vertex_w.clone(),
            xi: r.xi.clone(),
            orientation: r.orientation,
        };
        let local = restrict_with_shift(&q, r.shift.clone())?;
        let local_chambers = pbf(&local)?;
        let mut to_global: BTreeMap<SignVector, SignVector> = BTreeMap::new();
        for lc in &local_chambers {
            let g = class
                .iter()
                .find(|a| by_label[a].vertex_w == lc.vertex_w)
                .ok_or_else(|| {
                    Error::NonRegular(format!(
                        "local chamber {} at a vertex outside its block",
                        lc.alpha
                    ))
                })?;
            to_global.insert(lc.alpha.clone(), (*g).clone());
        }
        if to_global.len() != class.len() {
            return Err(Error::NonRegular(format!(
                "block of {} has {} members but {} local chambers",
                class[0],
                class.len(),
                to_global.len()
            )));
        }
        let mut subq = BTreeMap::new();
        let mut socles = BTreeMap::new();
        for lc in &local_chambers {
            let cons = subquotients(&local, &local_chambers, &lc.alpha)?;
            let soc = socle(&cons, &lc.alpha);
            let g = to_global[&lc.alpha].clone();
            subq.insert(g.clone(), cons.iter().map(|a| to_global[a].clone()).collect());
            socles.insert(g, soc.iter().map(|a| to_global[a].clone()).collect());
        }
        out.push(LocalBlock {
            members: class.clone(),
            local_walls: local.integrality_set.clone(),
            local_labels: to_global.iter().map(|(l, g)| (g.clone(), l.clone())).collect(),
            subquotients: subq,
            socles,
        });
    }
    Ok(BlockDecomposition {
        chambers,
        blocks: out,
    })
}

/// Weight columns kept for the support of `S_α`: coordinate `i` contributes
/// its weight when `α(i) = +` and the negated weight (its conjugate) when
/// `α(i) = −`; indices without a sign contribute both.
pub fn support_kept_weights(alpha: &SignVector, slice_weights: &RatMatrix) -> RatMatrix {
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for i in 0..slice_weights.cols() {
        let w = slice_weights.column(i);
        let neg: Vec<Rational> = w.iter().map(|q| -q).collect();
        match alpha.get(i) {
            Some(Sign::Plus) => cols.push(w),
            Some(Sign::Minus) => cols.push(neg),
            None => {
                cols.push(w);
                cols.push(neg);
            }
        }
    }
    RatMatrix::from_rows(&cols, slice_weights.rows()).transpose()
}

/// Dimension of the support of `S_α`: with `A` the positive support of the
/// kept weight cone, `|A| − rank(W_kept|_A)`.
pub fn support_dim(_r: &RestrictedArrangement, alpha: &SignVector, slice_weights: &RatMatrix) -> usize {
    let w = support_kept_weights(alpha, slice_weights);
    let a: Vec<usize> = cone_positive_support(&w).into_iter().collect();
    if a.is_empty() {
        return 0;
    }
    a.len() - w.select_columns(&a).rank()
}
