//! Level-by-level construction of `V_λ` as the quotient of the Verma module
//! by the radical of its Shapovalov form.
//!
//! Weight spaces are produced in order of depth. At depth `k` the spanning
//! candidates for weight `ν` are `f_j·b` for basis vectors `b` of `V_{ν+α_j}`;
//! their Gram matrix is computed from `S(f_j b, c) = S(b, e_j c)` together
//! with `e_i f_j b = f_j e_i b + δ_ij ⟨ν+α_j, α_i^∨⟩ b`, and the first
//! independent candidates become the basis. Only the Cartan matrix is
//! needed, so the same routine bootstraps the Chevalley structure constants.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{self, Scalar};
use crate::lie::roots::RootSystem;

/// `[j, rest…]` stands for `f_j · (rest · v_λ)`; indices are 0-based.
pub type Word = Vec<usize>;

pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter()
            .map(|j| format!("f{}", j + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn parse_word(label: &str) -> Result<Word> {
    let t = label.trim();
    if t == "1" {
        return Ok(Vec::new());
    }
    t.split_whitespace()
        .map(|tok| {
            tok.strip_prefix('f')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(|n| n - 1)
                .ok_or_else(|| Error::Parse(format!("bad monomial label `{label}`")))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Blocks {
    pub rank: usize,
    /// Simple roots in fundamental-weight coordinates.
    pub alpha: Vec<Vec<i64>>,
    /// Fundamental-weight coordinates, in construction order.
    pub weights: Vec<Vec<i64>>,
    pub depths: Vec<usize>,
    pub labels: Vec<Vec<Word>>,
    pub grams: Vec<Matrix>,
    pub index: BTreeMap<Vec<i64>, usize>,
    /// `(w, j) ↦ F_j : V_w → V_{w−α_j}`
    pub lower: BTreeMap<(usize, usize), Matrix>,
    /// `(w, i) ↦ E_i : V_w → V_{w+α_i}`
    pub raise: BTreeMap<(usize, usize), Matrix>,
}

fn shifted(weight: &[i64], alpha: &[i64], sign: i64) -> Vec<i64> {
    weight.iter().zip(alpha).map(|(x, a)| x + sign * a).collect()
}

/// Builds all weight blocks of `V_λ`; fails once the running dimension
/// exceeds `cap`.
pub fn build_blocks(rs: &RootSystem, weight: &[i64], cap: usize) -> Result<Blocks> {
    rs.check_dominant(weight)?;
    let r = rs.rank();
    let alpha: Vec<Vec<i64>> = rs.simple_roots().iter().map(|a| rs.root_to_weight(a)).collect();
    let mut blocks = Blocks {
        rank: r,
        alpha,
        weights: vec![weight.to_vec()],
        depths: vec![0],
        labels: vec![vec![Vec::new()]],
        grams: vec![Matrix::identity(1)],
        index: BTreeMap::from([(weight.to_vec(), 0)]),
        lower: BTreeMap::new(),
        raise: BTreeMap::new(),
    };
    let mut dim = 1;
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    let mut level: Vec<usize> = vec![0];
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let mut targets: BTreeSet<Reverse<Vec<i64>>> = BTreeSet::new();
        for &w in &level {
            for j in 0..r {
                targets.insert(Reverse(shifted(&blocks.weights[w], &blocks.alpha[j], -1)));
            }
        }
        let mut next = Vec::new();
        for Reverse(nu) in targets {
            if let Some(idx) = blocks.add_weight(&nu, depth)? {
                dim += blocks.labels[idx].len();
                if dim > cap {
                    return Err(Error::DimensionCap { dim, cap });
                }
                next.push(idx);
            }
        }
        level = next;
    }
    Ok(blocks)
}

impl Blocks {
    pub fn dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.labels
            .iter()
            .map(|l| {
                let o = acc;
                acc += l.len();
                o
            })
            .collect()
    }

    fn neighbor(&self, w: usize, k: usize, sign: i64) -> Option<usize> {
        self.index.get(&shifted(&self.weights[w], &self.alpha[k], sign)).copied()
    }

    /// `e_i` applied to the candidate `f_j · b`, `b` the `b`-th basis vector
    /// of block `src` (= `ν + α_j`). Returns a vector in block `ν + α_i`, or
    /// `None` when that weight is absent (the image is then zero).
    fn raise_candidate(&self, nu: &[i64], i: usize, j: usize, src: usize, b: usize) -> Option<Vec<Scalar>> {
        let target = self.index.get(&shifted(nu, &self.alpha[i], 1)).copied()?;
        let mut out = vec![Scalar::zero(); self.labels[target].len()];
        // f_j e_i b
        if let (Some(e), Some(tau)) = (self.raise.get(&(src, i)), self.neighbor(src, i, 1)) {
            if let Some(f) = self.lower.get(&(tau, j)) {
                let eb = e.column(b);
                let v = f.mul_vec(&eb);
                for (o, x) in out.iter_mut().zip(v) {
                    *o += x;
                }
            }
        }
        if i == j {
            debug_assert_eq!(target, src);
            out[b] += scalar::int(self.weights[src][i]);
        }
        Some(out)
    }

    fn add_weight(&mut self, nu: &[i64], depth: usize) -> Result<Option<usize>> {
        // candidates (j, source block, basis index)
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for j in 0..self.rank {
            if let Some(src) = self.index.get(&shifted(nu, &self.alpha[j], 1)).copied() {
                for b in 0..self.labels[src].len() {
                    cands.push((j, src, b));
                }
            }
        }
        if cands.is_empty() {
            return Ok(None);
        }
        // e_i on every candidate, for all i
        let raised: Vec<Vec<Option<Vec<Scalar>>>> = cands
            .iter()
            .map(|&(j, src, b)| (0..self.rank).map(|i| self.raise_candidate(nu, i, j, src, b)).collect())
            .collect();
        let m = cands.len();
        let mut gram = Matrix::zeros(m, m);
        for (x, &(j, src, b)) in cands.iter().enumerate() {
            let g = &self.grams[src];
            for y in 0..m {
                if let Some(v) = &raised[y][j] {
                    // S(f_j b, c_y) = (G_src · e_j c_y)[b]
                    let val = crate::exact::matrix::dot(g.row(b), v);
                    gram.set(x, y, val);
                }
            }
        }
        let pivots = gram.rref().pivots;
        if pivots.is_empty() {
            return Ok(None);
        }
        let basis_gram = gram.submatrix(&pivots, &pivots);
        let inv = basis_gram
            .inverse()
            .ok_or_else(|| Error::Internal("Shapovalov block on pivots is singular".into()))?;
        let all: Vec<usize> = (0..m).collect();
        let coords = inv.matmul(&gram.submatrix(&pivots, &all));

        let idx = self.weights.len();
        self.weights.push(nu.to_vec());
        self.depths.push(depth);
        self.labels.push(
            pivots
                .iter()
                .map(|&p| {
                    let (j, src, b) = cands[p];
                    let mut w = vec![j];
                    w.extend(self.labels[src][b].iter().copied());
                    w
                })
                .collect(),
        );
        self.index.insert(nu.to_vec(), idx);
        let k = pivots.len();

        // F_j : V_{ν+α_j} → V_ν
        for j in 0..self.rank {
            let Some(src) = self.index.get(&shifted(nu, &self.alpha[j], 1)).copied() else {
                continue;
            };
            let mut f = Matrix::zeros(k, self.labels[src].len());
            for (c, &(cj, csrc, b)) in cands.iter().enumerate() {
                if cj == j {
                    debug_assert_eq!(csrc, src);
                    for row in 0..k {
                        f.set(row, b, coords.get(row, c).clone());
                    }
                }
            }
            self.lower.insert((src, j), f);
        }
        // E_i : V_ν → V_{ν+α_i}
        for i in 0..self.rank {
            let Some(target) = self.index.get(&shifted(nu, &self.alpha[i], 1)).copied() else {
                continue;
            };
            let mut e = Matrix::zeros(self.labels[target].len(), k);
            for (col, &p) in pivots.iter().enumerate() {
                if let Some(v) = &raised[p][i] {
                    for (row, x) in v.iter().enumerate() {
                        e.set(row, col, x.clone());
                    }
                }
            }
            self.raise.insert((idx, i), e);
        }
        self.grams.push(basis_gram);
        Ok(Some(idx))
    }

    /// Dense `E_i`, `F_i`, `H_i` on the whole module, `i = 0..rank`.
    pub fn simple_generators(&self) -> (Vec<Matrix>, Vec<Matrix>, Vec<Matrix>) {
        let n = self.dim();
        let off = self.offsets();
        let place = |map: &BTreeMap<(usize, usize), Matrix>, i: usize, sign: i64| {
            let mut m = Matrix::zeros(n, n);
            for (&(w, _), block) in map.iter().filter(|((_, k), _)| *k == i) {
                let Some(t) = self.neighbor(w, i, sign) else {
                    continue;
                };
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        let x = block.get(r, c);
                        if !x.is_zero() {
                            m.set(off[t] + r, off[w] + c, x.clone());
                        }
                    }
                }
            }
            m
        };
        let mut es = Vec::with_capacity(self.rank);
        let mut fs = Vec::with_capacity(self.rank);
        let mut hs = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            es.push(place(&self.raise, i, 1));
            fs.push(place(&self.lower, i, -1));
            let mut h = Matrix::zeros(n, n);
            for (w, weight) in self.weights.iter().enumerate() {
                for r in 0..self.labels[w].len() {
                    h.set(off[w] + r, off[w] + r, scalar::int(weight[i]));
                }
            }
            hs.push(h);
        }
        (es, fs, hs)
    }

    /// Block-diagonal Shapovalov Gram matrix of the whole module.
    pub fn full_gram(&self) -> Matrix {
        let n = self.dim();
        let off = self.offsets();
        let mut g = Matrix::zeros(n, n);
        for (w, block) in self.grams.iter().enumerate() {
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    g.set(off[w] + r, off[w] + c, block.get(r, c).clone());
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::roots::{build_root_system, LieType};

    #[test]
    fn sl2_spin_one() {
        let rs = build_root_system(LieType::A, 1).unwrap();
        let b = build_blocks(&rs, &[2], 400).unwrap();
        assert_eq!(b.dim(), 3);
        assert_eq!(b.weights, vec![vec![2], vec![0], vec![-2]]);
        let (e, f, h) = b.simple_generators();
        assert_eq!(e[0].commutator(&f[0]), h[0]);
    }

    #[test]
    fn sl3_defining_rep() {
        let rs = build_root_system(LieType::A, 2).unwrap();
        let b = build_blocks(&rs, &[1, 0], 400).unwrap();
        assert_eq!(b.dim(), 3);
        // f2 v = 0 in V(ω1); the lowest weight is reached through f2 f1.
        assert_eq!(b.labels[2], vec![vec![1, 0]]);
    }

    #[test]
    fn cap_enforced() {
        let rs = build_root_system(LieType::A, 2).unwrap();
        let err = build_blocks(&rs, &[2, 2], 10).unwrap_err();
        assert!(matches!(err, Error::DimensionCap { cap: 10, .. }));
    }

    #[test]
    fn word_labels_roundtrip() {
        assert_eq!(word_label(&[1, 0]), "f2 f1");
        assert_eq!(parse_word("f2 f1").unwrap(), vec![1, 0]);
        assert_eq!(parse_word("1").unwrap(), Vec::<usize>::new());
        assert!(parse_word("g1").is_err());
    }
}
