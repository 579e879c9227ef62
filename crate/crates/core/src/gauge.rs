//! Gauge transforms of module multipliers and module derivations by module
//! automorphisms.

use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, Matrix, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::operators::PairOperator;
use crate::sampling::{nonzero_scalar, random_element, Sampler};

/// An invertible algebra-linear operator on a module with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAutomorphism {
    g: Matrix,
    g_inv: Matrix,
}

impl ModuleAutomorphism {
    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn g_inv(&self) -> &Matrix {
        &self.g_inv
    }

    pub fn compose(&self, other: &ModuleAutomorphism) -> ModuleAutomorphism {
        ModuleAutomorphism { g: &self.g * &other.g, g_inv: &other.g_inv * &self.g_inv }
    }

    pub fn inverse(&self) -> ModuleAutomorphism {
        ModuleAutomorphism { g: self.g_inv.clone(), g_inv: self.g.clone() }
    }

    /// `G op G^{-1}`
    pub fn conjugate(&self, op: &Matrix) -> Matrix {
        &(&self.g * op) * &self.g_inv
    }

    /// `ad_G (op_M, op_A) = (G op_M G^{-1}, op_A)`
    pub fn act(&self, p: &PairOperator) -> PairOperator {
        PairOperator::new(self.conjugate(&p.module_op), p.algebra_op.clone())
    }
}

pub fn make_automorphism(module: &ModuleOverAlgebra, g: Matrix) -> Result<ModuleAutomorphism> {
    if !module.is_a_linear(&g) {
        return Err(Error::NotALinear("automorphism does not commute with the action".into()));
    }
    let g_inv = g.inverse().ok_or(Error::NotInvertible)?;
    Ok(ModuleAutomorphism { g, g_inv })
}

pub fn gauge_multiplier(g: &ModuleAutomorphism, p: &PairOperator) -> PairOperator {
    g.act(p)
}

pub fn gauge_derivation(g: &ModuleAutomorphism, p: &PairOperator) -> PairOperator {
    g.act(p)
}

/// Whether `a = ad_G b`.
pub fn is_equivalent_via(g: &ModuleAutomorphism, a: &PairOperator, b: &PairOperator) -> bool {
    *a == g.act(b)
}

/// `c (id + N)` with `N` a random strictly lower triangular algebra-linear
/// operator and `c` a random nonzero scalar.
pub fn random_automorphism(module: &ModuleOverAlgebra, rng: &mut Sampler) -> ModuleAutomorphism {
    let m = module.dim();
    let lower = Subspace::from_rows(m * m, (0..m).flat_map(|i| (0..i).map(move |j| unit_vec(m * m, i * m + j))));
    let nilpotent = module.endomorphisms().intersect(&lower).expect("same ambient");
    let n = Matrix::from_flat(m, m, random_element(rng, &nilpotent)).expect("square");
    let g = (&Matrix::identity(m) + &n).scale(&nonzero_scalar(rng));
    make_automorphism(module, g).expect("scaled unipotent endomorphisms are automorphisms")
}
