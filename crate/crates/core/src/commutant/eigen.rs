//! Joint eigenstructure of a commutative matrix algebra without factoring
//! polynomials over number fields.
//!
//! The radical is the kernel of the trace form `tr(ab)`, so the number of
//! characters over `ℂ` is `dim 𝔄 − dim rad 𝔄`, and the sum of all joint
//! eigenspaces is the joint kernel of the radical. Generalized eigenspaces
//! are separated over `ℚ` by coprime factors of characteristic polynomials;
//! a block whose factor has degree `d > 1` carries `d` conjugate characters.

use nalgebra::DMatrix;
use rand::Rng;
use serde::Serialize;

use super::closure::AlgebraImage;
use crate::error::Result;
use crate::exact::matrix::Matrix;
use crate::exact::poly::Poly;
use crate::exact::scalar::{self, Scalar};
use crate::exact::subspace::{joint_kernel, Subspace};

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenBlock {
    /// Degree of the irreducible-looking factor (number of conjugate
    /// characters the block carries).
    pub degree: usize,
    /// Character values on the algebra basis, when all are rational.
    #[serde(with = "crate::exact::scalar::serde_scalar_option_vec", skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<Scalar>>,
    /// Characteristic factor of each basis element on the block.
    pub factors: Vec<String>,
    pub generalized_dim: usize,
    /// Joint eigenvectors in the block, over `ℚ`.
    pub eigen_dim_rational: usize,
    /// `eigen_dim_rational / degree`.
    #[serde(with = "crate::exact::scalar::serde_scalar")]
    pub eigenspace_dim: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericEigen {
    pub tolerance: f64,
    pub distinct_eigenvalues: usize,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenReport {
    pub method: String,
    pub ambient_dim: usize,
    pub algebra_dim: usize,
    pub radical_dim: usize,
    /// `dim 𝔄 − dim rad 𝔄`: characters over `ℂ`.
    pub character_count: usize,
    /// Dimension of the sum of all joint eigenspaces.
    pub socle_dim: usize,
    pub blocks: Vec<EigenBlock>,
    /// Every joint eigenspace has dimension one.
    pub all_eigenspaces_one: bool,
    /// `Σ degree = character_count` and `Σ generalized_dim = ambient_dim`.
    pub blocks_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericEigen>,
}

/// Coprime factors `(f, m)` of `p` found by Yun's algorithm and the
/// rational root test.
fn coprime_factors(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    for (q, m) in p.squarefree_split()? {
        if q.degree() == 0 {
            continue;
        }
        let mut rest = q.clone();
        for r in q.rational_roots().unwrap_or_default() {
            let lin = Poly::linear(&r);
            out.push((lin.clone(), m));
            rest = rest.div_rem(&lin).0;
        }
        if rest.degree() > 0 {
            out.push((rest.monic(), m));
        }
    }
    Ok(out)
}

fn restrict(space: &Subspace, op: &Matrix) -> Matrix {
    space
        .restrict(op)
        .expect("algebra elements preserve their generalized eigenspaces")
}

/// Splits `V` into blocks on which every basis element has a single
/// characteristic factor.
fn split_blocks(alg: &AlgebraImage) -> Result<Vec<Subspace>> {
    let n = alg.ambient_dim();
    let mut splitters: Vec<Matrix> = alg.basis().to_vec();
    let generic: Vec<Scalar> = (0..alg.dim()).map(|k| scalar::int(k as i64 + 1)).collect();
    splitters.push(alg.element(&generic));
    let mut blocks = vec![Subspace::full(n)];
    for a in &splitters {
        let mut next = Vec::new();
        for b in blocks {
            let local = restrict(&b, a);
            let factors = coprime_factors(&local.char_poly()?)?;
            if factors.len() <= 1 {
                next.push(b);
                continue;
            }
            for (f, m) in factors {
                let kernel = local.eval_poly(&f.pow(m))?.kernel_basis();
                let vectors: Vec<Vec<Scalar>> = kernel.iter().map(|k| b.embed(k)).collect();
                next.push(Subspace::from_vectors(n, &vectors)?);
            }
        }
        blocks = next;
    }
    Ok(blocks)
}

pub fn joint_eigen_analysis(alg: &AlgebraImage, tolerance: Option<f64>, rng: &mut impl Rng) -> Result<EigenReport> {
    let n = alg.ambient_dim();
    let d = alg.dim();
    let trace_form = Matrix::from_fn(d, d, |i, j| alg.basis()[i].matmul(&alg.basis()[j]).trace());
    let radical: Vec<Matrix> = trace_form.kernel_basis().iter().map(|c| alg.element(c)).collect();
    let character_count = d - radical.len();
    let socle = joint_kernel(n, &radical);

    let mut blocks = Vec::new();
    for b in split_blocks(alg)? {
        let mut degree = 1;
        let mut character = Some(Vec::with_capacity(d));
        let mut factors = Vec::with_capacity(d);
        for a in alg.basis() {
            let local = restrict(&b, a);
            let cf = coprime_factors(&local.char_poly()?)?;
            let f = cf.first().map(|(f, _)| f.clone()).unwrap_or_else(Poly::one);
            degree = degree.max(f.degree());
            factors.push(f.to_string());
            match (&mut character, f.degree()) {
                (Some(vals), 1) => vals.push(-f.coeffs()[0].clone()),
                _ => character = None,
            }
        }
        let local_radical: Vec<Matrix> = radical.iter().map(|r| restrict(&b, r)).collect();
        let eigen = joint_kernel(b.dim(), &local_radical).dim();
        blocks.push(EigenBlock {
            degree,
            character,
            factors,
            generalized_dim: b.dim(),
            eigen_dim_rational: eigen,
            eigenspace_dim: scalar::ratio(eigen as i64, degree as i64),
        });
    }
    let degree_sum: usize = blocks.iter().map(|b| b.degree).sum();
    let gen_sum: usize = blocks.iter().map(|b| b.generalized_dim).sum();
    let numeric = numeric_cross_check(alg, character_count, tolerance.unwrap_or(DEFAULT_TOLERANCE), rng);
    Ok(EigenReport {
        method: "exact-rational".into(),
        ambient_dim: n,
        algebra_dim: d,
        radical_dim: radical.len(),
        character_count,
        socle_dim: socle.dim(),
        all_eigenspaces_one: socle.dim() == character_count,
        blocks_consistent: degree_sum == character_count && gen_sum == n,
        blocks,
        numeric: Some(numeric),
    })
}

/// Counts distinct eigenvalues of a random real combination of the basis.
fn numeric_cross_check(alg: &AlgebraImage, characters: usize, tolerance: f64, rng: &mut impl Rng) -> NumericEigen {
    let n = alg.ambient_dim();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for b in alg.basis() {
        let c: f64 = rng.gen_range(-1.0..1.0);
        m += DMatrix::from_row_slice(n, n, &b.to_f64()) * c;
    }
    let scale = m.norm().max(1.0);
    let mut eig: Vec<(f64, f64)> = if n == 0 {
        Vec::new()
    } else {
        m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
    };
    eig.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    let mut reps: Vec<(f64, f64)> = Vec::new();
    for z in eig {
        if !reps.iter().any(|r| ((r.0 - z.0).powi(2) + (r.1 - z.1).powi(2)).sqrt() <= tolerance * scale) {
            reps.push(z);
        }
    }
    let agrees = reps.len() == characters;
    NumericEigen {
        tolerance,
        distinct_eigenvalues: reps.len(),
        agrees,
        warning: (!agrees).then(|| {
            format!(
                "float path found {} distinct eigenvalues, exact path {} characters",
                reps.len(),
                characters
            )
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::closure::close_algebra;
    use crate::commutant::cyclic::seeded_rng;

    #[test]
    fn scalars_one_block() {
        let a = close_algebra(4, &[]).unwrap();
        let r = joint_eigen_analysis(&a, None, &mut seeded_rng(0)).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert_eq!(r.blocks[0].generalized_dim, 4);
        assert_eq!(r.blocks[0].eigenspace_dim, scalar::int(4));
        assert_eq!(r.character_count, 1);
        assert!(!r.all_eigenspaces_one);
    }

    #[test]
    fn irrational_characters() {
        // companion matrix of t² − 2 next to the eigenvalue 3
        let x = Matrix::from_i64(&[&[0, 2, 0], &[1, 0, 0], &[0, 0, 3]]);
        let a = close_algebra(3, &[x]).unwrap();
        let r = joint_eigen_analysis(&a, None, &mut seeded_rng(0)).unwrap();
        assert_eq!(r.character_count, 3);
        assert!(r.all_eigenspaces_one);
        assert!(r.blocks_consistent);
        let degrees: Vec<usize> = r.blocks.iter().map(|b| b.degree).collect();
        assert_eq!(degrees.iter().sum::<usize>(), 3);
        assert!(degrees.contains(&2));
        assert!(r.numeric.unwrap().agrees);
    }

    #[test]
    fn jordan_block() {
        let x = Matrix::from_i64(&[&[2, 1], &[0, 2]]);
        let a = close_algebra(2, &[x]).unwrap();
        let r = joint_eigen_analysis(&a, None, &mut seeded_rng(0)).unwrap();
        assert_eq!(r.radical_dim, 1);
        assert_eq!(r.character_count, 1);
        assert_eq!(r.socle_dim, 1);
        assert!(r.all_eigenspaces_one);
        assert_eq!(r.blocks[0].character, Some(vec![scalar::int(1), scalar::int(2)]));
    }
}
