//! Torus fixed points of the framed bouquet quiver variety for `dim V ≤ 3`.
//!
//! A fixed point is a weight diagram: basis vectors with distinct torus
//! weights, arrows `X_s` (weight `−ε_s`) and `Y_s` (weight `+ε_s`), and the
//! cyclic vector `v0 = j(1)` of weight 0. With `i = 0`, unit coefficients
//! on a spanning tree can always be reached by rescaling the basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::BouquetParams;
use crate::exact::rational::Rational;
use crate::exact::RatMatrix;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    X(usize),
    Y(usize),
}

impl Label {
    /// Weight change of the arrow, as a vector of length `ell`.
    pub fn shift(self, ell: usize) -> Vec<i64> {
        let mut w = vec![0; ell];
        match self {
            Label::X(s) => w[s - 1] = -1,
            Label::Y(s) => w[s - 1] = 1,
        }
        w
    }

    pub fn all(ell: usize) -> Vec<Label> {
        (1..=ell).map(Label::X).chain((1..=ell).map(Label::Y)).collect()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::X(s) => write!(f, "X{s}"),
            Label::Y(s) => write!(f, "Y{s}"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `(X_1..X_ℓ, Y_1..Y_ℓ, i, j)` with `i: V → W` (1×n) and `j: W → V` (n×1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matrices {
    pub x: Vec<RatMatrix>,
    pub y: Vec<RatMatrix>,
    pub i: RatMatrix,
    pub j: RatMatrix,
}

impl Matrices {
    pub fn zero(n: usize, ell: usize) -> Self {
        Matrices {
            x: vec![RatMatrix::zeros(n, n); ell],
            y: vec![RatMatrix::zeros(n, n); ell],
            i: RatMatrix::zeros(1, n),
            j: RatMatrix::zeros(n, 1),
        }
    }

    pub fn n(&self) -> usize {
        self.j.rows()
    }

    pub fn op(&self, l: Label) -> &RatMatrix {
        match l {
            Label::X(s) => &self.x[s - 1],
            Label::Y(s) => &self.y[s - 1],
        }
    }

    fn op_mut(&mut self, l: Label) -> &mut RatMatrix {
        match l {
            Label::X(s) => &mut self.x[s - 1],
            Label::Y(s) => &mut self.y[s - 1],
        }
    }

    /// Rank of the span of all words in `X, Y` applied to `j`.
    pub fn cyclic_span_rank(&self) -> usize {
        let n = self.n();
        let mut span: Vec<Vec<Rational>> = vec![self.j.column(0)];
        let mut frontier = span.clone();
        for _ in 0..n {
            let mut next = Vec::new();
            for v in &frontier {
                for m in self.x.iter().chain(&self.y) {
                    let w = m.mul_vec(v);
                    let mut trial = span.clone();
                    trial.push(w.clone());
                    if RatMatrix::from_rows(&trial, n).rank() > RatMatrix::from_rows(&span, n).rank() {
                        span.push(w.clone());
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        RatMatrix::from_rows(&span, n).rank()
    }
}

/// `Σ_k [X_k, Y_k] − j i`.
pub fn moment_map(m: &Matrices) -> RatMatrix {
    let n = m.n();
    let mut acc = RatMatrix::zeros(n, n);
    for (x, y) in m.x.iter().zip(&m.y) {
        let xy = x.mul(y);
        let yx = y.mul(x);
        for r in 0..n {
            for c in 0..n {
                let v = acc.get(r, c) + xy.get(r, c) - yx.get(r, c);
                acc.set(r, c, v);
            }
        }
    }
    let ji = m.j.mul(&m.i);
    for r in 0..n {
        for c in 0..n {
            let v = acc.get(r, c) - ji.get(r, c);
            acc.set(r, c, v);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointDiagram {
    /// Torus weight of each basis vector; vertex 0 is the cyclic vector.
    pub vertices: Vec<Vec<i64>>,
    /// `(source, target, label)`.
    pub edges: Vec<(usize, usize, Label)>,
    pub cyclic_vertex: usize,
    /// Shape family the diagram was generated from.
    pub family: String,
    pub matrices: Matrices,
}

impl FixedPointDiagram {
    /// Exact checks: moment equation, `im j ≠ 0`, cyclicity, weights distinct,
    /// and every nonzero matrix entry is an arrow with the right weight change.
    pub fn verify(&self, ell: usize) -> Result<(), String> {
        let m = &self.matrices;
        if !moment_map(m).is_zero() {
            return Err("moment equation fails".into());
        }
        if m.j.is_zero() {
            return Err("im j = 0".into());
        }
        if m.cyclic_span_rank() != m.n() {
            return Err("not generated by im j".into());
        }
        for a in 0..self.vertices.len() {
            for b in a + 1..self.vertices.len() {
                if self.vertices[a] == self.vertices[b] {
                    return Err("repeated weight".into());
                }
            }
        }
        if self.vertices[self.cyclic_vertex].iter().any(|&w| w != 0) {
            return Err("cyclic vector has nonzero weight".into());
        }
        for l in Label::all(ell) {
            let op = m.op(l);
            for r in 0..m.n() {
                for c in 0..m.n() {
                    if op.get(r, c).is_zero() {
                        continue;
                    }
                    let expect: Vec<i64> = self.vertices[c].iter().zip(l.shift(ell)).map(|(a, b)| a + b).collect();
                    if self.vertices[r] != expect {
                        return Err(format!("{l} entry ({r},{c}) breaks weights"));
                    }
                    if !self.edges.contains(&(c, r, l)) {
                        return Err(format!("{l} entry ({r},{c}) has no arrow"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Arrow drawing, one arrow per line.
    pub fn ascii(&self) -> String {
        let w = |k: usize| {
            let parts: Vec<String> = self.vertices[k].iter().map(|x| x.to_string()).collect();
            format!("v{k}({})", parts.join(","))
        };
        if self.edges.is_empty() {
            return format!("{}  <- j\n", w(0));
        }
        let mut s = format!("{}  <- j\n", w(0));
        for &(a, b, l) in &self.edges {
            s.push_str(&format!("{} --{l}--> {}\n", w(a), w(b)));
        }
        s
    }

    fn key(&self) -> (Vec<Vec<i64>>, Vec<(Vec<i64>, Vec<i64>, Label)>) {
        let mut e: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b, l)| (self.vertices[a].clone(), self.vertices[b].clone(), l))
            .collect();
        e.sort();
        (self.vertices.clone(), e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredInstance {
    pub family: String,
    pub arrows: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointSearch {
    pub diagrams: Vec<FixedPointDiagram>,
    pub filtered: Vec<FilteredInstance>,
}

/// Builds the diagram for a tree of arrows out of `v0`; vertices are
/// numbered in the order they are reached.
fn build(ell: usize, n: usize, arrows: &[(usize, Label)], family: &str) -> Result<FixedPointDiagram, String> {
    let mut weights = vec![vec![0i64; ell]];
    let mut edges = Vec::new();
    for (k, &(src, l)) in arrows.iter().enumerate() {
        let w: Vec<i64> = weights[src].iter().zip(l.shift(ell)).map(|(a, b)| a + b).collect();
        weights.push(w);
        edges.push((src, k + 1, l));
    }
    for a in 0..weights.len() {
        for b in a + 1..weights.len() {
            if weights[a] == weights[b] {
                return Err(format!("v{a} and v{b} have the same weight"));
            }
        }
    }
    // canonical order: cyclic vector first, others by weight
    let mut order: Vec<usize> = (1..weights.len()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]));
    order.insert(0, 0);
    let mut pos = vec![0; weights.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let vertices: Vec<Vec<i64>> = order.iter().map(|&o| weights[o].clone()).collect();
    let mut edges: Vec<(usize, usize, Label)> = edges.into_iter().map(|(a, b, l)| (pos[a], pos[b], l)).collect();
    edges.sort();
    let mut m = Matrices::zero(n, ell);
    m.j.set(0, 0, Rational::from_integer(1.into()));
    for &(a, b, l) in &edges {
        m.op_mut(l).set(b, a, Rational::from_integer(1.into()));
    }
    if !moment_map(&m).is_zero() {
        return Err("moment equation fails".into());
    }
    Ok(FixedPointDiagram {
        vertices,
        edges,
        cyclic_vertex: 0,
        family: family.to_string(),
        matrices: m,
    })
}

fn family_of_fork(a: Label, b: Label) -> &'static str {
    match (a, b) {
        (Label::X(_), Label::Y(_)) | (Label::Y(_), Label::X(_)) => "fork X_s v0, Y_k v0",
        (Label::X(_), Label::X(_)) => "fork X_s v0, X_k v0",
        (Label::Y(_), Label::Y(_)) => "fork Y_s v0, Y_k v0",
    }
}

fn family_of_chain(a: Label, b: Label) -> &'static str {
    match (a, b) {
        (Label::X(_), Label::Y(_)) => "chain X_s v0, Y_k v1",
        (Label::X(_), Label::X(_)) => "chain X_s v0, X_k v1",
        (Label::Y(_), Label::Y(_)) => "chain Y_s v0, Y_k v1",
        (Label::Y(_), Label::X(_)) => "chain Y_s v0, X_k v1 (unlisted)",
    }
}

/// All torus fixed points for `dim V ≤ 3`, sorted canonically, together with
/// the shape instances rejected by the weight and moment conditions.
pub fn fixed_points(p: BouquetParams) -> Result<FixedPointSearch, Error> {
    let (n, ell) = (p.n, p.ell);
    let mut found: Vec<FixedPointDiagram> = Vec::new();
    let mut filtered = Vec::new();
    let mut attempt = |arrows: &[(usize, Label)], family: &str, found: &mut Vec<FixedPointDiagram>| {
        let desc: Vec<String> = arrows.iter().enumerate().map(|(k, (s, l))| format!("{l} v{s} = v{}", k + 1)).collect();
        match build(ell, n, arrows, family) {
            Ok(d) => found.push(d),
            Err(reason) => filtered.push(FilteredInstance {
                family: family.to_string(),
                arrows: desc.join(", "),
                reason,
            }),
        }
    };
    match n {
        1 => attempt(&[], "point", &mut found),
        2 => {
            for l in Label::all(ell) {
                attempt(&[(0, l)], "single arrow", &mut found);
            }
        }
        3 => {
            let labels = Label::all(ell);
            for (ia, &a) in labels.iter().enumerate() {
                for &b in &labels[ia + 1..] {
                    attempt(&[(0, a), (0, b)], family_of_fork(a, b), &mut found);
                }
            }
            for &a in &labels {
                for &b in &labels {
                    attempt(&[(0, a), (1, b)], family_of_chain(a, b), &mut found);
                }
            }
        }
        _ => {
            return Err(Error::UnsupportedDim(format!(
                "dim V = {n}: fixed points are not isolated in general (a projective line appears for n = 4, ℓ = 2)"
            )))
        }
    }
    let mut unique: BTreeMap<_, FixedPointDiagram> = BTreeMap::new();
    for d in found {
        unique.entry(d.key()).or_insert(d);
    }
    Ok(FixedPointSearch {
        diagrams: unique.into_values().collect(),
        filtered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(fixed_points(BouquetParams::new(1, 3).unwrap()).unwrap().diagrams.len(), 1);
        for l in 2..6 {
            let s = fixed_points(BouquetParams::new(2, l).unwrap()).unwrap();
            assert_eq!(s.diagrams.len(), 2 * l);
            assert!(s.diagrams.iter().all(|d| d.edges.len() == 1));
        }
        assert!(matches!(
            fixed_points(BouquetParams::new(4, 2).unwrap()),
            Err(Error::UnsupportedDim(_))
        ));
    }

    #[test]
    fn every_diagram_verifies() {
        for n in 1..=3 {
            for l in 2..5 {
                for d in fixed_points(BouquetParams::new(n, l).unwrap()).unwrap().diagrams {
                    d.verify(l).unwrap();
                }
            }
        }
    }

    #[test]
    fn same_index_chain_is_filtered() {
        let s = fixed_points(BouquetParams::new(3, 2).unwrap()).unwrap();
        assert!(s
            .filtered
            .iter()
            .any(|f| f.family.starts_with("chain X_s v0, Y_k v1") && f.arrows == "X1 v0 = v1, Y1 v1 = v2"));
    }

    #[test]
    fn n2_matrices_match_closed_form() {
        let s = fixed_points(BouquetParams::new(2, 3).unwrap()).unwrap();
        let d = s.diagrams.iter().find(|d| d.edges[0].2 == Label::X(2)).unwrap();
        let e10 = RatMatrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]);
        assert_eq!(d.matrices.x[1], e10);
        assert!(d.matrices.i.is_zero());
        assert_eq!(d.matrices.j, RatMatrix::from_i64_rows(&[vec![1], vec![0]]));
    }
}
