//! Derivations of algebras and modules, the projection `Π : 𝔇(M) → 𝔇(A)` and
//! connections.

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{add_sandwich, int, Echelon, Matrix, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::multiplier::{block_diagonal, fiber_of, Fiber};
use crate::operators::PairOperator;

/// Leibniz rows `op X_i - X_i op - Σ_k X[k][i] act_k` where `op` sits at
/// `op_offset` and the algebra part `X` at `x_offset`.
fn leibniz_rows(ech: &mut Echelon, cols: usize, op_offset: usize, x_offset: usize, act: &[Matrix]) {
    let n = act.len();
    let Some(k) = act.first().map(Matrix::rows) else {
        return;
    };
    let id = Matrix::identity(k);
    for i in 0..n {
        let mut block = Matrix::zeros(k * k, cols);
        add_sandwich(&mut block, op_offset, &id, &act[i], &int(1));
        add_sandwich(&mut block, op_offset, &act[i], &id, &int(-1));
        for (p, a_p) in act.iter().enumerate() {
            let col = x_offset + p * n + i;
            for r in 0..k {
                for c in 0..k {
                    if !a_p[(r, c)].is_zero() {
                        block[(r * k + c, col)] -= &a_p[(r, c)];
                    }
                }
            }
        }
        ech.insert_rows(&block);
    }
}

/// `𝔇(A)` as a subspace of row-major `n x n` matrices.
pub fn derivation_algebra(a: &Algebra) -> Subspace {
    let n = a.dim();
    let ad: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i).clone()).collect();
    let mut ech = Echelon::new(n * n);
    leibniz_rows(&mut ech, n * n, 0, 0, &ad);
    ech.kernel()
}

pub fn is_derivation(a: &Algebra, x: &Matrix) -> bool {
    x.rows() == a.dim() && x.cols() == a.dim() && (0..a.dim()).all(|i| x.commutator(a.ad_basis(i)) == a.ad_map(&x.column(i)))
}

pub fn bracket(x: &Matrix, y: &Matrix) -> Matrix {
    x.commutator(y)
}

pub fn module_bracket(x: &PairOperator, y: &PairOperator) -> PairOperator {
    x.bracket(y)
}

/// `𝔇(M)` over concatenated coordinates `(vec ∇, vec X)`.
pub fn module_derivations(module: &ModuleOverAlgebra) -> Subspace {
    let a = module.base();
    let (n, m) = (a.dim(), module.dim());
    let cols = m * m + n * n;
    let act: Vec<Matrix> = (0..n).map(|i| module.action_basis(i).clone()).collect();
    let ad: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i).clone()).collect();
    let mut ech = Echelon::new(cols);
    leibniz_rows(&mut ech, cols, m * m, m * m, &ad);
    if m > 0 {
        leibniz_rows(&mut ech, cols, 0, m * m, &act);
    }
    ech.kernel()
}

pub fn is_module_derivation(module: &ModuleOverAlgebra, p: &PairOperator) -> bool {
    let a = module.base();
    if !is_derivation(a, &p.algebra_op) || p.module_op.rows() != module.dim() {
        return false;
    }
    (0..a.dim()).all(|i| p.module_op.commutator(module.action_basis(i)) == module.action_of(&p.algebra_op.column(i)))
}

/// `Π(∇, X) = X`
pub fn project_big_pi(p: &PairOperator) -> Matrix {
    p.algebra_op.clone()
}

pub fn fiber_big_pi(module: &ModuleOverAlgebra, x: &Matrix) -> Result<Fiber> {
    let a = module.base();
    if !is_derivation(a, x) {
        return Err(Error::NotADerivation);
    }
    Ok(fiber_of(&module_derivations(module), module.dim(), a.dim(), x))
}

/// Componentwise lift `X -> (diag(X, ..., X), X)` on a free module.
pub fn derivation_injection_free(module: &ModuleOverAlgebra, x: &Matrix) -> Result<PairOperator> {
    let rank = module.free_rank().ok_or(Error::NotFree)?;
    if !is_derivation(module.base(), x) {
        return Err(Error::NotADerivation);
    }
    Ok(PairOperator::new(block_diagonal(x, rank), x.clone()))
}

/// Which section classes a connection belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionFlags {
    pub linear: bool,
    pub a_linear: bool,
    pub lie: bool,
    pub a_lie: bool,
}

/// A linear section of `Π`: `∇_X` for each basis derivation `X`.
#[derive(Clone, Debug)]
pub struct ConnectionSection {
    module: ModuleOverAlgebra,
    base_space: Subspace,
    total_space: Subspace,
    values: Vec<Matrix>,
}

impl ConnectionSection {
    pub fn new(module: &ModuleOverAlgebra, values: Vec<Matrix>) -> Result<Self> {
        let base_space = derivation_algebra(module.base());
        let total_space = module_derivations(module);
        if values.len() != base_space.dim() {
            return Err(Error::DimensionMismatch { expected: base_space.dim(), found: values.len() });
        }
        let n = module.base().dim();
        for (b, nabla) in base_space.basis().iter().zip(&values) {
            let pair = PairOperator::new(nabla.clone(), Matrix::from_flat(n, n, b.clone()).unwrap());
            if total_space.coordinates(&pair.to_coords()).is_none() {
                return Err(Error::NotInSpace("section value is not a module derivation".into()));
            }
        }
        Ok(ConnectionSection { module: module.clone(), base_space, total_space, values })
    }

    pub fn free_lift(module: &ModuleOverAlgebra) -> Result<Self> {
        Self::with_potential(module, None)
    }

    fn with_potential(module: &ModuleOverAlgebra, potential: Option<&[Matrix]>) -> Result<Self> {
        let rank = module.free_rank().ok_or(Error::NotFree)?;
        let n = module.base().dim();
        let base_space = derivation_algebra(module.base());
        let values = base_space
            .basis()
            .iter()
            .enumerate()
            .map(|(j, b)| {
                let lift = block_diagonal(&Matrix::from_flat(n, n, b.clone()).unwrap(), rank);
                match potential {
                    Some(p) => &lift + &p[j],
                    None => lift,
                }
            })
            .collect();
        Self::new(module, values)
    }

    pub fn module(&self) -> &ModuleOverAlgebra {
        &self.module
    }

    pub fn values(&self) -> &[Matrix] {
        &self.values
    }

    pub fn basis_derivations(&self) -> Vec<Matrix> {
        let n = self.module.base().dim();
        self.base_space.basis().iter().map(|b| Matrix::from_flat(n, n, b.clone()).unwrap()).collect()
    }

    /// `∇_X` for any `X ∈ 𝔇(A)`.
    pub fn nabla(&self, x: &Matrix) -> Result<Matrix> {
        let coords = self.base_space.coordinates(x.data()).ok_or(Error::NotADerivation)?;
        let m = self.module.dim();
        let mut out = Matrix::zeros(m, m);
        for (c, v) in coords.iter().zip(&self.values) {
            if !c.is_zero() {
                out = &out + &v.scale(c);
            }
        }
        Ok(out)
    }

    pub fn pair(&self, x: &Matrix) -> Result<PairOperator> {
        Ok(PairOperator::new(self.nabla(x)?, x.clone()))
    }

    /// Matrix from `𝔇(A)` basis coordinates to `𝔇(M)` basis coordinates.
    pub fn assignment(&self) -> Matrix {
        let columns: Vec<_> = self
            .basis_derivations()
            .iter()
            .zip(&self.values)
            .map(|(x, nabla)| {
                let pair = PairOperator::new(nabla.clone(), x.clone());
                self.total_space.coordinates(&pair.to_coords()).expect("validated at construction")
            })
            .collect();
        Matrix::from_columns(self.total_space.dim(), &columns)
    }

    /// `[∇_X, ∇_Y] - ∇_{[X, Y]}`
    pub fn curvature(&self, x: &Matrix, y: &Matrix) -> Result<Matrix> {
        Ok(&self.nabla(x)?.commutator(&self.nabla(y)?) - &self.nabla(&x.commutator(y))?)
    }

    fn is_a_linear(&self) -> Result<bool> {
        let a = self.module.base();
        for i in 0..a.dim() {
            for (x, nabla) in self.basis_derivations().iter().zip(&self.values) {
                if self.nabla(&(a.ad_basis(i) * x))? != self.module.action_basis(i) * nabla {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn is_lie(&self) -> Result<bool> {
        let basis = self.basis_derivations();
        for x in &basis {
            for y in &basis {
                if !self.curvature(x, y)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn flags(&self) -> Result<SectionFlags> {
        let a_linear = self.is_a_linear()?;
        let lie = self.is_lie()?;
        Ok(SectionFlags { linear: true, a_linear, lie, a_lie: a_linear && lie })
    }
}

/// Componentwise lift plus an algebra-linear potential `𝔇(A) → End_A(M)`
/// given on the basis of `𝔇(A)`.
pub fn connection_from_potential(module: &ModuleOverAlgebra, potential: &[Matrix]) -> Result<ConnectionSection> {
    module.free_rank().ok_or(Error::NotFree)?;
    let a = module.base();
    let base_space = derivation_algebra(a);
    if potential.len() != base_space.dim() {
        return Err(Error::DimensionMismatch { expected: base_space.dim(), found: potential.len() });
    }
    for (j, p) in potential.iter().enumerate() {
        if !module.is_a_linear(p) {
            return Err(Error::PotentialNotALinear(format!("value on derivation {j} is not algebra-linear")));
        }
    }
    let combine = |coords: &[num_rational::BigRational]| {
        let mut out = Matrix::zeros(module.dim(), module.dim());
        for (c, p) in coords.iter().zip(potential) {
            if !c.is_zero() {
                out = &out + &p.scale(c);
            }
        }
        out
    };
    let n = a.dim();
    for i in 0..n {
        for (j, b) in base_space.basis().iter().enumerate() {
            let x = Matrix::from_flat(n, n, b.clone()).unwrap();
            let fx = a.ad_basis(i) * &x;
            let coords = base_space.coordinates(fx.data()).ok_or_else(|| Error::NotInSpace("𝔇(A) is not closed under the algebra action".into()))?;
            if combine(&coords) != module.action_basis(i) * &potential[j] {
                return Err(Error::PotentialNotALinear(format!("potential is not algebra-linear at ({i}, {j})")));
            }
        }
    }
    ConnectionSection::with_potential(module, Some(potential))
}

/// `(∇, X) = (X, X) + (∇ - X, 0)` on the adjoint module.
pub fn split_adjoint_derivation(module: &ModuleOverAlgebra, p: &PairOperator) -> Result<(PairOperator, PairOperator)> {
    if !module.is_adjoint() {
        return Err(Error::NotAdjointModule);
    }
    let n = module.base().dim();
    let adjoint_part = PairOperator::new(p.algebra_op.clone(), p.algebra_op.clone());
    let rest = PairOperator::new(&p.module_op - &p.algebra_op, Matrix::zeros(n, n));
    Ok((adjoint_part, rest))
}
