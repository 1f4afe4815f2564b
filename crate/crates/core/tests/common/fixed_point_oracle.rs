//! Brute-force torus fixed points of the framed bouquet quiver, `dim V ≤ 3`.
//!
//! Independent of the engine: every choice of `n − 1` nonzero weights
//! reachable from 0, every subset of weight-compatible arrows among them, and
//! every coefficient vector from a small set is tried against the moment
//! equation in `i64` arithmetic. `i = 0` since `i j = tr(j i) = tr Σ[X,Y] = 0`
//! and `i` can only be nonzero on the weight-0 vector.

use std::collections::BTreeSet;

/// `(source weight, target weight, label)` sorted; identifies a fixed point.
pub type Key = Vec<(Vec<i64>, Vec<i64>, String)>;

const COEFFS: [i64; 4] = [1, -1, 2, -2];

fn neighbours(w: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for s in 0..w.len() {
        for d in [-1, 1] {
            let mut v = w.to_vec();
            v[s] += d;
            out.push(v);
        }
    }
    out
}

/// Arrow from `a` to `b`, if the weights differ by `∓ε_s`.
fn label(a: &[i64], b: &[i64]) -> Option<String> {
    let diff: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    let nz: Vec<usize> = (0..diff.len()).filter(|&k| diff[k] != 0).collect();
    if nz.len() != 1 {
        return None;
    }
    match diff[nz[0]] {
        -1 => Some(format!("X{}", nz[0] + 1)),
        1 => Some(format!("Y{}", nz[0] + 1)),
        _ => None,
    }
}

fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, items[i].clone());
            out.push(rest);
        }
    }
    out
}

fn moment_vanishes(n: usize, ell: usize, edges: &[(usize, usize, String)], coeffs: &[i64]) -> bool {
    let mut x = vec![vec![vec![0i64; n]; n]; ell];
    let mut y = vec![vec![vec![0i64; n]; n]; ell];
    for ((a, b, l), c) in edges.iter().zip(coeffs) {
        let s: usize = l[1..].parse::<usize>().unwrap() - 1;
        let m = if l.starts_with('X') { &mut x[s] } else { &mut y[s] };
        m[*b][*a] = *c;
    }
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0;
            for k in 0..ell {
                for t in 0..n {
                    acc += x[k][r][t] * y[k][t][c] - y[k][r][t] * x[k][t][c];
                }
            }
            if acc != 0 {
                return false;
            }
        }
    }
    true
}

fn reachable(n: usize, edges: &[(usize, usize, String)]) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    for _ in 0..n {
        for (a, b, _) in edges {
            if seen[*a] {
                seen[*b] = true;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn oracle_fixed_points(n: usize, ell: usize) -> BTreeSet<Key> {
    assert!((1..=3).contains(&n));
    let zero = vec![0i64; ell];
    let mut layer = vec![zero.clone()];
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    for _ in 0..n - 1 {
        let mut next = Vec::new();
        for w in &layer {
            for v in neighbours(w) {
                if v != zero && all.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    let weights: Vec<Vec<i64>> = all.into_iter().collect();
    let mut found = BTreeSet::new();
    for others in subsets(&weights, n - 1) {
        let mut verts = vec![zero.clone()];
        verts.extend(others);
        let mut cand = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(l) = label(&verts[a], &verts[b]) {
                    cand.push((a, b, l));
                }
            }
        }
        for mask in 1u32..(1 << cand.len()) {
            let edges: Vec<_> = (0..cand.len()).filter(|k| mask >> k & 1 == 1).map(|k| cand[k].clone()).collect();
            if !reachable(n, &edges) {
                continue;
            }
            let m = edges.len();
            let ok = (0..COEFFS.len().pow(m as u32)).any(|code| {
                let coeffs: Vec<i64> = (0..m).map(|k| COEFFS[code / COEFFS.len().pow(k as u32) % COEFFS.len()]).collect();
                moment_vanishes(n, ell, &edges, &coeffs)
            });
            if ok {
                let mut key: Key = edges.iter().map(|(a, b, l)| (verts[*a].clone(), verts[*b].clone(), l.clone())).collect();
                key.sort();
                found.insert(key);
            }
        }
        if n == 1 {
            found.insert(Vec::new());
        }
    }
    found
}
