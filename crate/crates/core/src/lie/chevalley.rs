//! Chevalley bases with exact structure constants.
//!
//! Root vectors for non-simple roots are defined recursively through an
//! extraspecial pair: for `ξ` non-simple let `α_i` be the first simple root
//! with `ξ − α_i` a root, put `β = ξ − α_i`, let `p` be the largest integer
//! with `β − pα_i` a root, and set
//!
//! ```text
//! e_ξ = [e_i, e_β] / (p+1),        f_ξ = [f_β, f_i] / (p+1) = ϖ(e_ξ).
//! ```
//!
//! This fixes every sign (`N_{α_i, β} = p+1` on extraspecial pairs) and
//! makes the Cartan anti-involution `ϖ` map `e_α ↦ f_α` for every root.
//! Structure constants are read off a faithful representation built from
//! the Cartan matrix alone.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::roots::{build_root_system, LieType, Root, RootSystem};
use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{self, Scalar};
use crate::exact::subspace::Subspace;
use crate::hw::engine;

/// Element of the Chevalley basis. Roots are indices into
/// [`RootSystem::positive_roots`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    E(usize),
    H(usize),
    F(usize),
}

/// Sparse coordinate vector over the Chevalley basis.
pub type Sparse = Vec<(usize, Scalar)>;

/// How `e_ξ` is obtained from a simple root vector and a lower root vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRecipe {
    pub root: usize,
    pub simple: usize,
    pub rest: usize,
    pub divisor: i64,
}

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    recipes: Vec<RootRecipe>,
    /// `brackets[x][y]` = coordinates of `[X_x, X_y]`.
    brackets: Vec<Vec<Sparse>>,
    killing: Matrix,
}

/// Signed permutation realizing `ϖ` on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanInvolutionMap {
    images: Vec<(usize, Scalar)>,
}

/// Smallest faithful fundamental representation used for bootstrapping.
fn bootstrap_weight(rs: &RootSystem) -> Vec<i64> {
    let r = rs.rank();
    let mut w = vec![0; r];
    let k = match rs.lie_type() {
        LieType::E if r == 7 => 6,
        LieType::E if r == 8 => 7,
        LieType::F => 3,
        _ => 0,
    };
    w[k] = 1;
    w
}

pub fn root_recipes(rs: &RootSystem) -> Vec<RootRecipe> {
    let r = rs.rank();
    let mut out = Vec::new();
    for (idx, xi) in rs.positive_roots().iter().enumerate().skip(r) {
        let (i, rest) = (0..r)
            .find_map(|i| {
                let mut beta = xi.clone();
                beta[i] -= 1;
                rs.positive_index(&beta).map(|b| (i, b))
            })
            .expect("non-simple positive root has a simple predecessor");
        let p = rs.string_down(&rs.simple_roots()[i], &rs.positive_roots()[rest]);
        out.push(RootRecipe {
            root: idx,
            simple: i,
            rest,
            divisor: p + 1,
        });
    }
    out
}

/// Applies the recipes to simple generator matrices of any representation,
/// returning the matrices of `e_α` and `f_α` for all positive roots.
pub fn extend_root_vectors(
    rs: &RootSystem,
    recipes: &[RootRecipe],
    e_simple: &[Matrix],
    f_simple: &[Matrix],
) -> (Vec<Matrix>, Vec<Matrix>) {
    let mut es: Vec<Matrix> = e_simple.to_vec();
    let mut fs: Vec<Matrix> = f_simple.to_vec();
    es.truncate(rs.rank());
    fs.truncate(rs.rank());
    for rec in recipes {
        debug_assert_eq!(rec.root, es.len());
        let d = scalar::ratio(1, rec.divisor);
        let e = es[rec.simple].commutator(&es[rec.rest]).scale(&d);
        let f = fs[rec.rest].commutator(&fs[rec.simple]).scale(&d);
        es.push(e);
        fs.push(f);
    }
    (es, fs)
}

impl ChevalleyAlgebra {
    pub fn build(lie_type: LieType, rank: usize) -> Result<Self> {
        let rs = build_root_system(lie_type, rank)?;
        chevalley_constants(rs)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn recipes(&self) -> &[RootRecipe] {
        &self.recipes
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn dim(&self) -> usize {
        self.rs.dim_algebra()
    }

    pub fn killing_gram(&self) -> &Matrix {
        &self.killing
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        let p = self.num_positive();
        let r = self.rank();
        if idx < p {
            BasisLabel::E(idx)
        } else if idx < p + r {
            BasisLabel::H(idx - p)
        } else {
            BasisLabel::F(idx - p - r)
        }
    }

    pub fn index(&self, label: BasisLabel) -> usize {
        let p = self.num_positive();
        let r = self.rank();
        match label {
            BasisLabel::E(a) => a,
            BasisLabel::H(i) => p + i,
            BasisLabel::F(a) => p + r + a,
        }
    }

    pub fn e(&self, root: usize) -> usize {
        self.index(BasisLabel::E(root))
    }

    pub fn f(&self, root: usize) -> usize {
        self.index(BasisLabel::F(root))
    }

    pub fn h(&self, i: usize) -> usize {
        self.index(BasisLabel::H(i))
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    pub fn label_name(&self, idx: usize) -> String {
        let coords = |a: usize| {
            let r: &Root = &self.rs.positive_roots()[a];
            r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        };
        match self.label(idx) {
            BasisLabel::E(a) => format!("e[{}]", coords(a)),
            BasisLabel::F(a) => format!("f[{}]", coords(a)),
            BasisLabel::H(i) => format!("h{}", i + 1),
        }
    }

    /// Parses `e[1,1]`, `f[0,1]`, `h2`, and the simple-root shorthands
    /// `e1`, `f2`.
    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        let unknown = || Error::UnknownLabel(text.to_string());
        let (kind, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        if let Some(inner) = rest.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let coords: Vec<i64> = inner
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| unknown()))
                .collect::<Result<_>>()?;
            let a = self.rs.positive_index(&coords).ok_or_else(unknown)?;
            return match kind {
                "e" => Ok(self.e(a)),
                "f" => Ok(self.f(a)),
                _ => Err(unknown()),
            };
        }
        let i: usize = rest.parse().map_err(|_| unknown())?;
        if i == 0 || i > self.rank() {
            return Err(unknown());
        }
        match kind {
            "e" => Ok(self.e(i - 1)),
            "f" => Ok(self.f(i - 1)),
            "h" => Ok(self.h(i - 1)),
            _ => Err(unknown()),
        }
    }

    /// Root-lattice weight of a basis element.
    pub fn weight_of(&self, idx: usize) -> Vec<i64> {
        match self.label(idx) {
            BasisLabel::E(a) => self.rs.positive_roots()[a].clone(),
            BasisLabel::F(a) => self.rs.positive_roots()[a].iter().map(|c| -c).collect(),
            BasisLabel::H(_) => vec![0; self.rank()],
        }
    }

    pub fn bracket_basis(&self, x: usize, y: usize) -> &Sparse {
        &self.brackets[x][y]
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn unit(&self, idx: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[idx] = Scalar::one();
        v
    }

    /// Matrix of `ad x` in the Chevalley basis.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.bracket(x, &self.unit(j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `ϖ`: `e_α ↦ f_α`, `f_α ↦ e_α`, `h_i ↦ h_i`.
    pub fn cartan_antiinvolution(&self) -> CartanInvolutionMap {
        let images = (0..self.dim())
            .map(|idx| {
                let target = match self.label(idx) {
                    BasisLabel::E(a) => BasisLabel::F(a),
                    BasisLabel::F(a) => BasisLabel::E(a),
                    h => h,
                };
                (self.index(target), Scalar::one())
            })
            .collect();
        CartanInvolutionMap { images }
    }

    /// Checks `[X_x, X_y]` against matrices of a representation in which
    /// `basis_ops[k]` represents `X_k`. Returns the number of mismatching
    /// pairs.
    pub fn verify_against_representation(&self, basis_ops: &[Matrix]) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for x in 0..n {
            for y in 0..n {
                let lhs = basis_ops[x].commutator(&basis_ops[y]);
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (k, c) in &self.brackets[x][y] {
                    rhs.add_scaled(c, &basis_ops[*k]);
                }
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Number of basis pairs with `[x,y] ≠ −[y,x]`.
    pub fn antisymmetry_defects(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for x in 0..n {
            for y in x..n {
                let a = self.bracket(&self.unit(x), &self.unit(y));
                let b = self.bracket(&self.unit(y), &self.unit(x));
                if a.iter().zip(&b).any(|(p, q)| !(p + q).is_zero()) {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Number of basis triples `x < y < z` violating the Jacobi identity.
    pub fn jacobi_defects(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for x in 0..n {
            for y in x + 1..n {
                let xy = self.bracket(&self.unit(x), &self.unit(y));
                for z in y + 1..n {
                    let uz = self.unit(z);
                    let yz = self.bracket(&self.unit(y), &uz);
                    let zx = self.bracket(&uz, &self.unit(x));
                    let mut total = self.bracket(&uz, &xy);
                    for (t, v) in total.iter_mut().zip(self.bracket(&self.unit(x), &yz)) {
                        *t += v;
                    }
                    for (t, v) in total.iter_mut().zip(self.bracket(&self.unit(y), &zx)) {
                        *t += v;
                    }
                    if total.iter().any(|c| !c.is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Number of violated Serre relations `ad(e_i)^{1−a_ij} e_j = 0`,
    /// together with their `f` counterparts.
    pub fn serre_defects(&self) -> usize {
        let r = self.rank();
        let mut bad = 0;
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let power = 1 - self.rs.cartan_entry(i, j);
                for (x, y) in [(self.e(i), self.e(j)), (self.f(i), self.f(j))] {
                    let mut v = self.unit(y);
                    for _ in 0..power {
                        v = self.bracket(&self.unit(x), &v);
                    }
                    if v.iter().any(|c| !c.is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Structure-constant table keyed by `[x,y]` label pairs.
    pub fn to_json(&self) -> AlgebraJson {
        let mut table = BTreeMap::new();
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let entry = &self.brackets[x][y];
                if entry.is_empty() {
                    continue;
                }
                let key = format!("[{},{}]", self.label_name(x), self.label_name(y));
                let value: BTreeMap<String, String> = entry
                    .iter()
                    .map(|(k, c)| (self.label_name(*k), scalar::format(c)))
                    .collect();
                table.insert(key, value);
            }
        }
        AlgebraJson {
            lie_type: self.rs.lie_type(),
            rank: self.rank(),
            cartan: self.rs.cartan().to_vec(),
            positive_roots: self.rs.positive_roots().to_vec(),
            labels: (0..self.dim()).map(|i| self.label_name(i)).collect(),
            structure_constants: table,
            killing_gram: self.killing.clone(),
        }
    }

    /// Rebuilds an algebra from its JSON table, checking it against the
    /// root data it declares.
    pub fn from_json(json: &AlgebraJson) -> Result<Self> {
        let rs = build_root_system(json.lie_type, json.rank)?;
        if rs.cartan() != json.cartan.as_slice() || rs.positive_roots() != json.positive_roots.as_slice() {
            return Err(Error::Invalid("cached algebra does not match its root system".into()));
        }
        let recipes = root_recipes(&rs);
        let mut alg = ChevalleyAlgebra {
            brackets: vec![vec![Vec::new(); rs.dim_algebra()]; rs.dim_algebra()],
            killing: json.killing_gram.clone(),
            rs,
            recipes,
        };
        for (key, value) in &json.structure_constants {
            let inner = key
                .strip_prefix('[')
                .and_then(|k| k.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad key {key}")))?;
            // split at the top-level comma
            let split = top_level_comma(inner).ok_or_else(|| Error::Parse(format!("bad key {key}")))?;
            let x = alg.parse_label(&inner[..split])?;
            let y = alg.parse_label(&inner[split + 1..])?;
            let mut entry: Sparse = value
                .iter()
                .map(|(l, c)| Ok((alg.parse_label(l)?, scalar::parse(c)?)))
                .collect::<Result<_>>()?;
            entry.sort_by_key(|(k, _)| *k);
            alg.brackets[x][y] = entry;
        }
        Ok(alg)
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    pub structure_constants: BTreeMap<String, BTreeMap<String, String>>,
    pub killing_gram: Matrix,
}

/// Computes the Chevalley structure constants of the algebra with root
/// system `rs`.
pub fn chevalley_constants(rs: RootSystem) -> Result<ChevalleyAlgebra> {
    let recipes = root_recipes(&rs);
    let blocks = engine::build_blocks(&rs, &bootstrap_weight(&rs), 400)?;
    let (e_simple, f_simple, hs) = blocks.simple_generators();
    let (es, fs) = extend_root_vectors(&rs, &recipes, &e_simple, &f_simple);
    let p = rs.num_positive();
    let r = rs.rank();
    let dim = rs.dim_algebra();
    let mut ops: Vec<Matrix> = Vec::with_capacity(dim);
    ops.extend(es);
    ops.extend(hs.iter().cloned());
    ops.extend(fs);

    let weight = |idx: usize| -> Vec<i64> {
        if idx < p {
            rs.positive_roots()[idx].clone()
        } else if idx < p + r {
            vec![0; r]
        } else {
            rs.positive_roots()[idx - p - r].iter().map(|c| -c).collect()
        }
    };
    let index_of_root = |v: &[i64]| -> Option<usize> {
        if let Some(a) = rs.positive_index(v) {
            return Some(a);
        }
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        rs.positive_index(&neg).map(|a| p + r + a)
    };
    // first nonzero entry of each root-vector matrix
    let anchor: Vec<Option<(usize, usize)>> = ops
        .iter()
        .map(|m| {
            (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !m.get(i, j).is_zero())
        })
        .collect();
    let h_diag: Vec<Vec<Scalar>> = hs
        .iter()
        .map(|h| (0..h.rows()).map(|i| h.get(i, i).clone()).collect())
        .collect();
    let h_space = Subspace::from_vectors(blocks.dim(), &h_diag)?;
    let entry = |x: &Matrix, y: &Matrix, i: usize, j: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..x.cols() {
            let a = x.get(i, k);
            if !a.is_zero() {
                let b = y.get(k, j);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            let c = y.get(i, k);
            if !c.is_zero() {
                let d = x.get(k, j);
                if !d.is_zero() {
                    acc -= c * d;
                }
            }
        }
        acc
    };

    let mut brackets: Vec<Vec<Sparse>> = vec![vec![Vec::new(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            let (xh, yh) = ((p..p + r).contains(&x), (p..p + r).contains(&y));
            let out: Sparse = if xh && yh {
                Vec::new()
            } else if xh || yh {
                let (hi, other, sign) = if xh { (x - p, y, 1) } else { (y - p, x, -1) };
                let c = rs.pair_with_coroot(&weight(other), hi) * sign;
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(other, scalar::int(c))]
                }
            } else {
                let g: Vec<i64> = weight(x).iter().zip(weight(y)).map(|(a, b)| a + b).collect();
                if g.iter().all(|&c| c == 0) {
                    let comm = ops[x].commutator(&ops[y]);
                    let diag: Vec<Scalar> = (0..comm.rows()).map(|i| comm.get(i, i).clone()).collect();
                    let coords = h_space
                        .coordinates(&diag)
                        .ok_or_else(|| Error::Internal("[e_α, f_α] outside the Cartan subalgebra".into()))?;
                    coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (p + i, c))
                        .collect()
                } else if let Some(z) = index_of_root(&g) {
                    let (i, j) = anchor[z].expect("nonzero root vector");
                    let c = entry(&ops[x], &ops[y], i, j) / ops[z].get(i, j);
                    if c.is_zero() {
                        Vec::new()
                    } else {
                        vec![(z, c)]
                    }
                } else {
                    Vec::new()
                }
            };
            brackets[x][y] = out;
        }
    }

    let mut alg = ChevalleyAlgebra {
        rs,
        recipes,
        brackets,
        killing: Matrix::zeros(dim, dim),
    };
    alg.killing = killing_form(&alg);
    Ok(alg)
}

/// `tr(ad x ∘ ad y)` over all basis pairs, using that the form pairs weight
/// `γ` only with weight `−γ`.
fn killing_form(alg: &ChevalleyAlgebra) -> Matrix {
    let dim = alg.dim();
    let weights: Vec<Vec<i64>> = (0..dim).map(|i| alg.weight_of(i)).collect();
    let mut k = Matrix::zeros(dim, dim);
    for x in 0..dim {
        for y in 0..dim {
            if weights[x].iter().zip(&weights[y]).any(|(a, b)| a + b != 0) {
                continue;
            }
            let mut acc = Scalar::zero();
            for z in 0..dim {
                for (w, c1) in &alg.brackets[y][z] {
                    for (u, c2) in &alg.brackets[x][*w] {
                        if *u == z {
                            acc += c1 * c2;
                        }
                    }
                }
            }
            k.set(x, y, acc);
        }
    }
    k
}

impl CartanInvolutionMap {
    pub fn image(&self, idx: usize) -> (usize, &Scalar) {
        let (t, s) = &self.images[idx];
        (*t, s)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); x.len()];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let (t, s) = &self.images[i];
                out[*t] += c * s;
            }
        }
        out
    }

    /// Number of basis pairs violating `ϖ([x,y]) = [ϖ(y), ϖ(x)]`.
    pub fn antiinvolution_defects(&self, alg: &ChevalleyAlgebra) -> usize {
        let n = alg.dim();
        let mut bad = 0;
        for x in 0..n {
            for y in 0..n {
                let (ux, uy) = (alg.unit(x), alg.unit(y));
                let lhs = self.apply(&alg.bracket(&ux, &uy));
                let rhs = alg.bracket(&self.apply(&uy), &self.apply(&ux));
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        bad
    }

    pub fn is_involution(&self) -> bool {
        (0..self.images.len()).all(|i| {
            let (t, s) = &self.images[i];
            let (back, s2) = &self.images[*t];
            *back == i && (s * s2).is_one()
        })
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::E(a) => write!(f, "e#{a}"),
            BasisLabel::H(i) => write!(f, "h{}", i + 1),
            BasisLabel::F(a) => write!(f, "f#{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse_of(alg: &ChevalleyAlgebra, x: &str, y: &str) -> Sparse {
        let (x, y) = (alg.parse_label(x).unwrap(), alg.parse_label(y).unwrap());
        alg.bracket_basis(x, y).clone()
    }

    #[test]
    fn sl2_relations() {
        let alg = ChevalleyAlgebra::build(LieType::A, 1).unwrap();
        assert_eq!(alg.dim(), 3);
        let (e, h, f) = (alg.e(0), alg.h(0), alg.f(0));
        assert_eq!(sparse_of(&alg, "e1", "f1"), vec![(h, scalar::int(1))]);
        assert_eq!(sparse_of(&alg, "h1", "e1"), vec![(e, scalar::int(2))]);
        assert_eq!(sparse_of(&alg, "h1", "f1"), vec![(f, scalar::int(-2))]);
        let k = alg.killing_gram();
        assert_eq!(k.get(e, f), &scalar::int(4));
        assert_eq!(k.get(h, h), &scalar::int(8));
        assert!(k.get(e, e).is_zero());
    }

    #[test]
    fn labels_round_trip() {
        let alg = ChevalleyAlgebra::build(LieType::G, 2).unwrap();
        for i in 0..alg.dim() {
            assert_eq!(alg.parse_label(&alg.label_name(i)).unwrap(), i);
        }
        assert_eq!(alg.parse_label("e2").unwrap(), alg.parse_label("e[0,1]").unwrap());
        assert!(alg.parse_label("e3").is_err());
        assert!(alg.parse_label("e[1,2]").is_err());
        assert!(alg.parse_label("x1").is_err());
    }

    #[test]
    fn axioms_small_types() {
        for (t, r) in [(LieType::A, 2), (LieType::A, 3), (LieType::B, 2), (LieType::C, 3), (LieType::G, 2), (LieType::D, 4)] {
            let alg = ChevalleyAlgebra::build(t, r).unwrap();
            assert_eq!(alg.antisymmetry_defects(), 0, "{t}{r}");
            assert_eq!(alg.jacobi_defects(), 0, "{t}{r}");
            assert_eq!(alg.serre_defects(), 0, "{t}{r}");
            let w = alg.cartan_antiinvolution();
            assert!(w.is_involution());
            assert_eq!(w.antiinvolution_defects(&alg), 0, "{t}{r}");
        }
    }

    #[test]
    fn chevalley_integrality() {
        // [e_α, e_β] = ±(p+1) e_{α+β}
        for (t, r) in [(LieType::B, 3), (LieType::G, 2), (LieType::F, 4)] {
            let alg = ChevalleyAlgebra::build(t, r).unwrap();
            let rs = alg.root_system();
            let p = alg.num_positive();
            for a in 0..p {
                for b in 0..p {
                    let sum: Vec<i64> = rs.positive_roots()[a].iter().zip(&rs.positive_roots()[b]).map(|(x, y)| x + y).collect();
                    let entry = alg.bracket_basis(a, b);
                    match rs.positive_index(&sum) {
                        Some(c) => {
                            let q = rs.string_down(&rs.positive_roots()[a], &rs.positive_roots()[b]);
                            assert_eq!(entry.len(), 1);
                            assert_eq!(entry[0].0, c);
                            assert_eq!(scalar::abs(&entry[0].1), scalar::int(q + 1), "{t}{r} {a} {b}");
                        }
                        None => assert!(entry.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn killing_matches_formula() {
        // K(h_i, h_j) = 2 h^∨ (α_i^∨, α_j^∨) with long roots of length 2
        let alg = ChevalleyAlgebra::build(LieType::A, 2).unwrap();
        let k = alg.killing_gram();
        assert_eq!(k.get(alg.h(0), alg.h(0)), &scalar::int(12));
        assert_eq!(k.get(alg.h(0), alg.h(1)), &scalar::int(-6));
        assert!(k.is_symmetric());
        assert!(k.inverse().is_some());
    }

    #[test]
    fn json_round_trip() {
        let alg = ChevalleyAlgebra::build(LieType::B, 2).unwrap();
        let json = alg.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        let again = ChevalleyAlgebra::from_json(&back).unwrap();
        assert_eq!(again.to_json(), json);
        assert_eq!(again.jacobi_defects(), 0);
    }
}
