//! Gaudin Hamiltonians, chain spaces and the realized generator set.

use num::{One, Zero};
use serde::Serialize;

use super::config::{GaudinInstance, Mode};
use super::current::{realize_current_monomial, realize_segal_sugawara, RationalOperatorFunction};
use super::tensor::TensorModule;
use crate::error::Result;
use crate::exact::matrix::Matrix;
use crate::exact::scalar::Scalar;
use crate::exact::subspace::{joint_kernel, Subspace};
use crate::hw::{build_irrep, HighestWeightModule};

/// `Ω_{ab} = Σ Ω^{xy} (X_x)_a (X_y)_b`; for `a = b` the site Casimir.
pub fn omega_pair(inst: &GaudinInstance, tensor: &TensorModule, a: usize, b: usize) -> Matrix {
    let omega = inst.form.canonical_element();
    if a == b {
        return tensor.embed(a, &tensor.factor(a).casimir_matrix(&inst.form));
    }
    let (va, vb) = (tensor.factor(a), tensor.factor(b));
    let mut local = Matrix::zeros(va.dim() * vb.dim(), va.dim() * vb.dim());
    for x in 0..omega.rows() {
        for y in 0..omega.cols() {
            let w = omega.get(x, y);
            if !w.is_zero() {
                local.add_scaled(w, &va.action(x).kron(vb.action(y)));
            }
        }
    }
    tensor.embed_local(&[a, b], &local)
}

/// `μ̂ = Σ_x ⟨μ, X_x⟩ X^x` in Chevalley coordinates.
pub fn twist_element(inst: &GaudinInstance) -> Vec<Scalar> {
    let alg = &inst.algebra;
    let dual = inst.form.dual_bases();
    let mut out = vec![Scalar::zero(); alg.dim()];
    for x in 0..alg.dim() {
        let c = inst.form.pairing(&inst.mu, &alg.unit(x));
        if c.is_zero() {
            continue;
        }
        for (o, d) in out.iter_mut().zip(dual.column(x)) {
            *o += &c * d;
        }
    }
    out
}

/// `H_a = Σ_{b≠a} Ω_{ab}/(z_a − z_b) + (μ̂)_a`.
pub fn gaudin_hamiltonians(inst: &GaudinInstance, tensor: &TensorModule) -> Vec<Matrix> {
    let l = tensor.sites();
    let mu_hat = twist_element(inst);
    let mut omegas: Vec<Vec<Option<Matrix>>> = vec![vec![None; l]; l];
    for a in 0..l {
        for b in a + 1..l {
            omegas[a][b] = Some(omega_pair(inst, tensor, a, b));
        }
    }
    (0..l)
        .map(|a| {
            let mut h = tensor.site_action(a, &mu_hat);
            for b in 0..l {
                if b == a {
                    continue;
                }
                let om = omegas[a.min(b)][a.max(b)].as_ref().expect("filled");
                let c = Scalar::one() / (&inst.z[a] - &inst.z[b]);
                h.add_scaled(&c, om);
            }
            h
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Singular,
    Full,
    Centralizer,
}

#[derive(Clone, Debug)]
pub struct ChainSpace {
    pub kind: ChainKind,
    pub space: Subspace,
    /// Basis of `z_μ(g) ∩ n₊` (general mode), or of `n₊` itself for the
    /// singular space.
    pub annihilators: Vec<Vec<Scalar>>,
}

/// Basis of `z_μ(g) ∩ n₊` from the kernel of `ad μ` and the span of the
/// raising basis.
pub fn centralizer_in_nplus(inst: &GaudinInstance) -> Vec<Vec<Scalar>> {
    let alg = &inst.algebra;
    let n = alg.dim();
    let ad = alg.ad(&inst.mu);
    let kernel = ad.kernel_basis();
    if kernel.is_empty() {
        return Vec::new();
    }
    let ker = Matrix::from_columns(n, &kernel);
    let raising: Vec<Vec<Scalar>> = (0..alg.num_positive()).map(|a| alg.unit(alg.e(a))).collect();
    let nplus = Matrix::from_columns(n, &raising);
    crate::exact::subspace::intersect(&ker, &nplus).basis().columns()
}

pub fn chain_space(inst: &GaudinInstance, tensor: &TensorModule) -> Result<ChainSpace> {
    let alg = &inst.algebra;
    let n = tensor.dim();
    Ok(match inst.mode {
        Mode::Periodic => {
            let ops: Vec<Matrix> = (0..alg.rank()).map(|i| tensor.diagonal_basis(alg.e(i))).collect();
            ChainSpace {
                kind: ChainKind::Singular,
                space: joint_kernel(n, &ops),
                annihilators: (0..alg.rank()).map(|i| alg.unit(alg.e(i))).collect(),
            }
        }
        Mode::Regular => ChainSpace {
            kind: ChainKind::Full,
            space: Subspace::full(n),
            annihilators: centralizer_in_nplus(inst),
        },
        Mode::General => {
            let basis = centralizer_in_nplus(inst);
            let ops: Vec<Matrix> = basis.iter().map(|x| tensor.diagonal(x)).collect();
            ChainSpace {
                kind: ChainKind::Centralizer,
                space: joint_kernel(n, &ops),
                annihilators: basis,
            }
        }
    })
}

/// Where an operator in the generator set comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GeneratorOrigin {
    /// `½·Res_{u=z_a}` of realized `S₁`.
    Hamiltonian { site: usize },
    /// Double-pole coefficient of `S₁` at `z_a`.
    Casimir { site: usize },
    /// Constant term of `S₁`.
    TwistNorm,
    /// `Δ(h_i)`.
    Cartan { index: usize },
    /// Coefficient of a user-supplied monomial.
    Extra { monomial: usize, pole: Option<usize>, order: usize },
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub origin: GeneratorOrigin,
    pub matrix: Matrix,
}

impl Generator {
    pub fn is_quadratic(&self) -> bool {
        matches!(
            self.origin,
            GeneratorOrigin::Hamiltonian { .. } | GeneratorOrigin::Casimir { .. } | GeneratorOrigin::TwistNorm
        )
    }
}

/// Everything realized on `V_{λ⃗}` for one configuration.
#[derive(Clone, Debug)]
pub struct GaudinModel {
    pub instance: GaudinInstance,
    pub tensor: TensorModule,
    pub hamiltonians: Vec<Matrix>,
    pub segal_sugawara: RationalOperatorFunction,
    pub extra: Vec<RationalOperatorFunction>,
    pub chain: ChainSpace,
}

impl GaudinModel {
    /// Builds all site modules directly.
    pub fn build(inst: GaudinInstance) -> Result<Self> {
        let factors = inst
            .weights
            .iter()
            .map(|w| build_irrep(&inst.algebra, w, inst.dim_cap))
            .collect::<Result<Vec<_>>>()?;
        Self::from_modules(inst, factors)
    }

    pub fn from_modules(inst: GaudinInstance, factors: Vec<HighestWeightModule>) -> Result<Self> {
        let tensor = TensorModule::new(factors, Some(inst.dim_cap.saturating_mul(inst.dim_cap)))?;
        let hamiltonians = gaudin_hamiltonians(&inst, &tensor);
        let segal_sugawara = realize_segal_sugawara(&inst, &tensor);
        let extra = inst
            .extra_generators
            .iter()
            .map(|m| realize_current_monomial(&inst, &tensor, m))
            .collect::<Result<Vec<_>>>()?;
        let chain = chain_space(&inst, &tensor)?;
        Ok(GaudinModel {
            instance: inst,
            tensor,
            hamiltonians,
            segal_sugawara,
            extra,
            chain,
        })
    }

    /// Generator set on `V_{λ⃗}`: Hamiltonians, `S₁` scalars, optional
    /// Cartan operators and extra monomial coefficients.
    pub fn generators(&self) -> Vec<Generator> {
        let alg = &self.instance.algebra;
        let mut out = Vec::new();
        for (a, h) in self.hamiltonians.iter().enumerate() {
            out.push(Generator {
                name: format!("H{}", a + 1),
                origin: GeneratorOrigin::Hamiltonian { site: a },
                matrix: h.clone(),
            });
        }
        for a in 0..self.tensor.sites() {
            out.push(Generator {
                name: format!("C{}", a + 1),
                origin: GeneratorOrigin::Casimir { site: a },
                matrix: self.segal_sugawara.coefficient(a, 2),
            });
        }
        out.push(Generator {
            name: "<mu,mu>".into(),
            origin: GeneratorOrigin::TwistNorm,
            matrix: self.segal_sugawara.constant().clone(),
        });
        if self.instance.include_cartan {
            for i in 0..alg.rank() {
                out.push(Generator {
                    name: format!("D(h{})", i + 1),
                    origin: GeneratorOrigin::Cartan { index: i },
                    matrix: self.tensor.diagonal_basis(alg.h(i)),
                });
            }
        }
        for (k, f) in self.extra.iter().enumerate() {
            if !f.constant().is_zero() {
                out.push(Generator {
                    name: format!("X{}[const]", k + 1),
                    origin: GeneratorOrigin::Extra { monomial: k, pole: None, order: 0 },
                    matrix: f.constant().clone(),
                });
            }
            for (&(a, m), c) in f.terms() {
                out.push(Generator {
                    name: format!("X{}[z{}^{}]", k + 1, a + 1, m),
                    origin: GeneratorOrigin::Extra { monomial: k, pole: Some(a), order: m },
                    matrix: c.clone(),
                });
            }
        }
        out
    }

    /// Site Casimir scalars.
    pub fn casimir_scalars(&self) -> Vec<Option<Scalar>> {
        self.tensor
            .factors()
            .iter()
            .map(|m| m.casimir_matrix(&self.instance.form).as_scalar())
            .collect()
    }

    pub fn twist_norm(&self) -> Scalar {
        self.instance.form.pairing(&self.instance.mu, &self.instance.mu)
    }
}
