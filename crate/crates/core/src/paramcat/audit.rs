//! Confronts the closed-form ambient tables with the slice engine through
//! the restriction map on labels.
//!
//! Exactness of restriction gives, for every standard `Δ_i`,
//! `Σ_{S_k ∈ Δ_i} Res(S_k) = Σ_{x ∈ Res(Δ_i)} [constituents of Δ_x]`, and
//! socle preservation gives `Res(Soc Δ_i) ⊆ Soc Res(Δ_i)`. The right-hand
//! sides come from the polyhedral engine on the slice.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::tables::{multiplicity_table, socle_table};
use super::{classify, reflect, Regime};
use crate::exact::rational::{int, ratio, serde_rational, Rational};
use crate::hypertoric::{block_decomposition, restrict, support_dim, SignVector};
use crate::quiver::{check_ell, slice_labels, slice_spec, slice_weight_matrix, SliceLabel};
use crate::Error;

/// Index alignment between ambient labels `1..2ℓ` and slice labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Convention {
    /// `i ↦ i+1` for `i < ℓ`, `i ↦ i` for `i > ℓ+1`, as printed.
    Printed,
    /// `i ↦ i` for `i < ℓ`, `i ↦ i−1` for `i > ℓ+1`.
    Shifted,
}

/// Slice labels of `Res(Δ_i)` under `conv`; `None` when the index does not
/// exist. `α_ℓ ≡ α_mid ≡ β_ℓ`.
pub fn slice_res(ell: usize, conv: Convention, i: usize) -> Option<Vec<SliceLabel>> {
    let r = if i == ell || i == ell + 1 {
        return Some(vec![SliceLabel::Mid]);
    } else if i < ell {
        match conv {
            Convention::Printed => i + 1,
            Convention::Shifted => i,
        }
    } else {
        match conv {
            Convention::Printed => i,
            Convention::Shifted => i - 1,
        }
    };
    if r == ell {
        Some(vec![SliceLabel::Mid])
    } else if (1..2 * ell).contains(&r) {
        Some(vec![SliceLabel::Alpha(r), SliceLabel::Beta(r)])
    } else {
        None
    }
}

fn simple_res(ell: usize, regime: Regime, conv: Convention, k: usize) -> Option<Vec<SliceLabel>> {
    if regime == Regime::HalfIntegralLarge && k == ell {
        return Some(Vec::new());
    }
    slice_res(ell, conv, k)
}

/// Slice parameter used for each regime.
pub fn representative_lambda(ell: usize, regime: Regime) -> Result<Rational, Error> {
    let l = ell as i64;
    match regime {
        Regime::IntegralLarge => Ok(int(-l - 1)),
        Regime::HalfIntegralLarge => Ok(ratio(-2 * l - 1, 2)),
        Regime::GenericLarge => Ok(ratio(-3 * l - 1, 3)),
        _ => Err(Error::RegimeOutOfScope(format!("{regime}: no audit outside the large regimes"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditCheck {
    pub name: String,
    pub index: usize,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub ell: usize,
    pub regime: Regime,
    #[serde(with = "serde_rational")]
    pub lambda_tilde: Rational,
    /// Convention used for the unambiguous indices.
    pub convention: Convention,
    /// Passing unambiguous checks under each convention.
    pub convention_scores: BTreeMap<Convention, usize>,
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn ambiguous_indices(&self) -> BTreeSet<usize> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Ambiguous)
            .map(|c| c.index)
            .collect()
    }
}

struct Engine {
    label_of: BTreeMap<SignVector, SliceLabel>,
    subq: BTreeMap<SliceLabel, Vec<SliceLabel>>,
    socle: BTreeMap<SliceLabel, Vec<SliceLabel>>,
}

impl Engine {
    fn new(ell: usize, lambda_tilde: &Rational) -> Result<Self, Error> {
        let r = restrict(&slice_spec(ell, lambda_tilde)?.quantized)?;
        let d = block_decomposition(&r)?;
        let labels = slice_labels(ell)?;
        let label_of: BTreeMap<SignVector, SliceLabel> = labels.iter().map(|(l, a)| (a.clone(), *l)).collect();
        let name = |a: &SignVector| {
            label_of
                .get(a)
                .copied()
                .ok_or_else(|| Error::NonRegular(format!("engine chamber {a} has no slice label")))
        };
        let mut subq = BTreeMap::new();
        let mut socle = BTreeMap::new();
        for (l, a) in &labels {
            let sq = d
                .subquotients(a)
                .ok_or_else(|| Error::NonRegular(format!("slice label {l} ({a}) is not a chamber at λ̃ = {lambda_tilde}")))?;
            subq.insert(*l, sq.iter().map(name).collect::<Result<Vec<_>, _>>()?);
            socle.insert(*l, d.socle(a).unwrap().iter().map(name).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(Engine { label_of, subq, socle })
    }
}

fn show(v: &[SliceLabel]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
    s.sort();
    s.join("+")
}

struct Outcome {
    multiset_ok: bool,
    socle_ok: bool,
    multiset_detail: String,
    socle_detail: String,
}

fn evaluate(
    ell: usize,
    regime: Regime,
    conv: Convention,
    i: usize,
    engine: &Engine,
    mult: &[usize],
    soc: &[usize],
) -> Option<Outcome> {
    let mut lhs = Vec::new();
    for &k in mult {
        lhs.extend(simple_res(ell, regime, conv, k)?);
    }
    let image = slice_res(ell, conv, i)?;
    let mut rhs = Vec::new();
    let mut soc_rhs = BTreeSet::new();
    for x in &image {
        rhs.extend(engine.subq[x].iter().copied());
        soc_rhs.extend(engine.socle[x].iter().copied());
    }
    let mut soc_lhs = BTreeSet::new();
    for &k in soc {
        soc_lhs.extend(simple_res(ell, regime, conv, k)?);
    }
    let (mut a, mut b) = (lhs.clone(), rhs.clone());
    a.sort();
    b.sort();
    let soc_lhs: Vec<_> = soc_lhs.into_iter().collect();
    let soc_rhs: Vec<_> = soc_rhs.into_iter().collect();
    Some(Outcome {
        multiset_ok: a == b,
        socle_ok: soc_lhs.iter().all(|x| soc_rhs.contains(x)),
        multiset_detail: format!("Res(constituents) = {}, constituents(Res Δ{i} = {}) = {}", show(&a), show(&image), show(&b)),
        socle_detail: format!("Res(Soc) = {}, Soc(Res) = {}", show(&soc_lhs), show(&soc_rhs)),
    })
}

fn audit_with(ell: usize, regime: Regime, lambda_tilde: Rational) -> Result<AuditReport, Error> {
    check_ell(ell)?;
    regime.require_large()?;
    let engine = Engine::new(ell, &lambda_tilde)?;
    debug_assert_eq!(engine.label_of.len(), 4 * ell - 3);
    let mult = multiplicity_table(ell, regime)?;
    let soc = socle_table(ell, regime)?;
    let boundary = |i: usize| i == ell - 1 || i == 2 * ell;
    let convs = [Convention::Printed, Convention::Shifted];
    let results: BTreeMap<(Convention, usize), Option<Outcome>> = convs
        .iter()
        .flat_map(|&c| (1..=2 * ell).map(move |i| (c, i)))
        .map(|(c, i)| ((c, i), evaluate(ell, regime, c, i, &engine, mult.row(i), &soc[i - 1].socle)))
        .collect();
    let mut scores = BTreeMap::new();
    for &c in &convs {
        let n = (1..=2 * ell)
            .filter(|&i| !boundary(i))
            .map(|i| match &results[&(c, i)] {
                Some(o) => usize::from(o.multiset_ok) + usize::from(o.socle_ok),
                None => 0,
            })
            .sum::<usize>();
        scores.insert(c, n);
    }
    let chosen = if scores[&Convention::Shifted] > scores[&Convention::Printed] {
        Convention::Shifted
    } else {
        Convention::Printed
    };
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let describe = |c: Convention, i: usize, socle: bool| match &results[&(c, i)] {
        None => format!("{c:?}: undefined slice index"),
        Some(o) if socle => format!("{c:?}: {} ({})", verdict(o.socle_ok), o.socle_detail),
        Some(o) => format!("{c:?}: {} ({})", verdict(o.multiset_ok), o.multiset_detail),
    };
    let mut checks = Vec::new();
    for i in 1..=2 * ell {
        for (kind, socle) in [("res_multiset", false), ("res_socle", true)] {
            let name = format!("{kind}/Δ{i}");
            let check = if boundary(i) {
                AuditCheck {
                    name,
                    index: i,
                    status: CheckStatus::Ambiguous,
                    detail: format!(
                        "boundary index; {}; {}",
                        describe(Convention::Printed, i, socle),
                        describe(Convention::Shifted, i, socle)
                    ),
                }
            } else {
                let status = match &results[&(chosen, i)] {
                    Some(o) if (if socle { o.socle_ok } else { o.multiset_ok }) => CheckStatus::Pass,
                    _ => CheckStatus::Fail,
                };
                let other = if chosen == Convention::Printed { Convention::Shifted } else { Convention::Printed };
                AuditCheck {
                    name,
                    index: i,
                    status,
                    detail: format!("{}; other: {}", describe(chosen, i, socle), describe(other, i, socle)),
                }
            };
            checks.push(check);
        }
    }
    Ok(AuditReport {
        ell,
        regime,
        lambda_tilde,
        convention: chosen,
        convention_scores: scores,
        checks,
    })
}

/// Audit at the representative slice parameter of `regime`.
pub fn audit(ell: usize, regime: Regime) -> Result<AuditReport, Error> {
    audit_with(ell, regime, representative_lambda(ell, regime)?)
}

/// Audit at `λ` (reflected to the negative side when `λ ≥ 0`).
pub fn audit_at(ell: usize, lambda: &Rational) -> Result<AuditReport, Error> {
    let c = classify(ell, lambda)?;
    let lt = if *lambda < int(0) { lambda.clone() } else { reflect(lambda) };
    audit_with(ell, c.regime, lt)
}

/// `dim Supp(S_i)` recovered from the slice as
/// `(6ℓ−4) − ((4ℓ−4) − dim Supp Res(S_i))`; `None` where the index is undefined.
pub fn support_dims_from_slice(ell: usize, conv: Convention) -> Result<BTreeMap<usize, Option<i64>>, Error> {
    check_ell(ell)?;
    let lt = representative_lambda(ell, Regime::IntegralLarge)?;
    let r = restrict(&slice_spec(ell, &lt)?.quantized)?;
    let w = slice_weight_matrix(ell);
    let vec_of: BTreeMap<SliceLabel, SignVector> = slice_labels(ell)?.into_iter().collect();
    let l = ell as i64;
    Ok((1..=2 * ell)
        .map(|i| {
            let d = slice_res(ell, conv, i).map(|labels| {
                let dims: BTreeSet<usize> = labels.iter().map(|x| support_dim(&r, &vec_of[x], &w)).collect();
                let slice = *dims.iter().max().unwrap() as i64;
                (6 * l - 4) - ((4 * l - 4) - slice)
            });
            (i, d)
        })
        .collect())
}
