//! Multipliers of algebras and modules, the projection `π : 𝔐(M) → 𝔐(A)` and
//! its sections.

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::exactlin::{add_sandwich, int, kernel_basis, solve, Echelon, Matrix, Scalar, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::operators::PairOperator;

/// Constraint rows of `R ad_i = ad_i R` for the unknown `R` sitting at
/// `offset` inside a system with `cols` unknowns.
fn commuting_rows(ech: &mut Echelon, cols: usize, offset: usize, ops: &[Matrix]) {
    for op in ops {
        let k = op.rows();
        let id = Matrix::identity(k);
        let mut block = Matrix::zeros(k * k, cols);
        add_sandwich(&mut block, offset, &id, op, &int(1));
        add_sandwich(&mut block, offset, op, &id, &int(-1));
        ech.insert_rows(&block);
    }
}

/// `𝔐(A)` as a subspace of row-major `n x n` matrices.
pub fn multiplier_algebra(a: &Algebra) -> Subspace {
    let n = a.dim();
    let ad: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i).clone()).collect();
    let mut ech = Echelon::new(n * n);
    commuting_rows(&mut ech, n * n, 0, &ad);
    ech.kernel()
}

pub fn is_multiplier(a: &Algebra, r: &Matrix) -> bool {
    r.rows() == a.dim() && r.cols() == a.dim() && (0..a.dim()).all(|i| r * a.ad_basis(i) == a.ad_basis(i) * r)
}

/// `R -> R e` and its inverse `f -> ad_f` for a unital algebra.
#[derive(Clone, Debug)]
pub struct UnitalIsomorphism {
    algebra: Algebra,
    unit: AlgebraElement,
}

impl UnitalIsomorphism {
    pub fn unit(&self) -> &AlgebraElement {
        &self.unit
    }

    pub fn apply(&self, r: &Matrix) -> AlgebraElement {
        r.apply(&self.unit)
    }

    pub fn inverse(&self, f: &[Scalar]) -> Matrix {
        self.algebra.ad_map(f)
    }

    /// Matrix from `𝔐(A)` basis coordinates to algebra coordinates.
    pub fn matrix(&self) -> Matrix {
        let space = multiplier_algebra(&self.algebra);
        let n = self.algebra.dim();
        let columns: Vec<Vec<Scalar>> = space.basis().iter().map(|b| self.apply(&Matrix::from_flat(n, n, b.clone()).unwrap())).collect();
        Matrix::from_columns(n, &columns)
    }
}

pub fn unital_iso_e_star(a: &Algebra) -> Result<UnitalIsomorphism> {
    let unit = a.find_unit().ok_or(Error::NoUnit)?;
    Ok(UnitalIsomorphism { algebra: a.clone(), unit })
}

/// `𝔐(M)` over concatenated coordinates `(vec Δ, vec R)`.
pub fn module_multipliers(module: &ModuleOverAlgebra) -> Subspace {
    let a = module.base();
    let (n, m) = (a.dim(), module.dim());
    let cols = m * m + n * n;
    let mut ech = Echelon::new(cols);
    let act: Vec<Matrix> = (0..n).map(|i| module.action_basis(i).clone()).collect();
    let ad: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i).clone()).collect();
    commuting_rows(&mut ech, cols, 0, &act);
    commuting_rows(&mut ech, cols, m * m, &ad);
    // Δ A_i = Σ_k R[k][i] A_k
    let id = Matrix::identity(m);
    for i in 0..n {
        let mut block = Matrix::zeros(m * m, cols);
        add_sandwich(&mut block, 0, &id, &act[i], &int(1));
        for (k, a_k) in act.iter().enumerate() {
            let col = m * m + k * n + i;
            for r in 0..m {
                for c in 0..m {
                    if !a_k[(r, c)].is_zero() {
                        block[(r * m + c, col)] -= &a_k[(r, c)];
                    }
                }
            }
        }
        ech.insert_rows(&block);
    }
    ech.kernel()
}

pub fn is_module_multiplier(module: &ModuleOverAlgebra, p: &PairOperator) -> bool {
    let a = module.base();
    if !is_multiplier(a, &p.algebra_op) || !module.is_a_linear(&p.module_op) {
        return false;
    }
    (0..a.dim()).all(|i| &p.module_op * module.action_basis(i) == module.action_of(&p.algebra_op.column(i)))
}

/// `π(Δ, R) = R`
pub fn project_pi(p: &PairOperator) -> Matrix {
    p.algebra_op.clone()
}

/// A fiber of `π` or `Π`: empty, or a base point plus a space of module
/// operators (row-major `m x m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fiber {
    Empty,
    Affine { base: PairOperator, directions: Subspace },
}

impl Fiber {
    pub fn dim(&self) -> Option<usize> {
        match self {
            Fiber::Empty => None,
            Fiber::Affine { directions, .. } => Some(directions.dim()),
        }
    }
}

/// Slices a joint `(vec op_M, vec op_A)` solution space over a fixed algebra
/// component.
pub(crate) fn fiber_of(space: &Subspace, m: usize, n: usize, algebra_op: &Matrix) -> Fiber {
    let mm = m * m;
    let d = space.dim();
    let tails: Vec<Vec<Scalar>> = space.basis().iter().map(|b| b[mm..].to_vec()).collect();
    let proj = Matrix::from_columns(n * n, &tails);
    let Some(coords) = solve(&proj, algebra_op.data()) else {
        return Fiber::Empty;
    };
    let point = space.combine(&coords);
    let base = PairOperator::new(Matrix::from_flat(m, m, point[..mm].to_vec()).unwrap(), Matrix::from_flat(n, n, point[mm..].to_vec()).unwrap());
    let kernel = if d == 0 { Subspace::zero(0) } else { kernel_basis(&proj) };
    let directions = Subspace::from_rows(mm, kernel.basis().iter().map(|c| space.combine(c)[..mm].to_vec()));
    Fiber::Affine { base, directions }
}

pub fn fiber_pi(module: &ModuleOverAlgebra, r: &Matrix) -> Result<Fiber> {
    let a = module.base();
    if !is_multiplier(a, r) {
        return Err(Error::NotAMultiplier);
    }
    Ok(fiber_of(&module_multipliers(module), module.dim(), a.dim(), r))
}

/// `f -> (A_f, ad_f)`
#[derive(Clone, Debug)]
pub struct AdjointEmbedding {
    module: ModuleOverAlgebra,
}

impl AdjointEmbedding {
    pub fn apply(&self, f: &[Scalar]) -> PairOperator {
        PairOperator::new(self.module.action_of(f), self.module.base().ad_map(f))
    }

    /// Kernel of `f -> (A_f, ad_f)`, computed directly from the stacked map.
    pub fn kernel(&self) -> Subspace {
        let a = self.module.base();
        let columns: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| self.apply(&a.basis_element(i)).to_coords()).collect();
        let rows = self.module.dim().pow(2) + a.dim().pow(2);
        kernel_basis(&Matrix::from_columns(rows, &columns))
    }
}

pub fn adjoint_embedding(module: &ModuleOverAlgebra) -> AdjointEmbedding {
    AdjointEmbedding { module: module.clone() }
}

/// Block-diagonal operator `diag(op, ..., op)` on a free module.
pub(crate) fn block_diagonal(op: &Matrix, rank: usize) -> Matrix {
    let n = op.rows();
    let mut out = Matrix::zeros(n * rank, n * rank);
    for b in 0..rank {
        for i in 0..n {
            for j in 0..n {
                out[(b * n + i, b * n + j)] = op[(i, j)].clone();
            }
        }
    }
    out
}

/// Componentwise lift `R -> (diag(R, ..., R), R)` on a free module.
pub fn multiplier_injection_free(module: &ModuleOverAlgebra, r: &Matrix) -> Result<PairOperator> {
    let rank = module.free_rank().ok_or(Error::NotFree)?;
    if !is_multiplier(module.base(), r) {
        return Err(Error::NotAMultiplier);
    }
    Ok(PairOperator::new(block_diagonal(r, rank), r.clone()))
}

/// A linear section of `π`: module operators assigned to the `𝔐(A)` basis.
#[derive(Clone, Debug)]
pub struct MultiplierSection {
    module: ModuleOverAlgebra,
    base_space: Subspace,
    total_space: Subspace,
    values: Vec<Matrix>,
}

impl MultiplierSection {
    /// `values[j]` is `Δ` for the `j`-th basis multiplier of `𝔐(A)`.
    pub fn new(module: &ModuleOverAlgebra, values: Vec<Matrix>) -> Result<Self> {
        let base_space = multiplier_algebra(module.base());
        let total_space = module_multipliers(module);
        if values.len() != base_space.dim() {
            return Err(Error::DimensionMismatch { expected: base_space.dim(), found: values.len() });
        }
        let n = module.base().dim();
        for (b, delta) in base_space.basis().iter().zip(&values) {
            let pair = PairOperator::new(delta.clone(), Matrix::from_flat(n, n, b.clone()).unwrap());
            if total_space.coordinates(&pair.to_coords()).is_none() {
                return Err(Error::NotInSpace("section value is not a module multiplier".into()));
            }
        }
        Ok(MultiplierSection { module: module.clone(), base_space, total_space, values })
    }

    /// The componentwise lift on a free module.
    pub fn free_lift(module: &ModuleOverAlgebra) -> Result<Self> {
        let rank = module.free_rank().ok_or(Error::NotFree)?;
        let n = module.base().dim();
        let base_space = multiplier_algebra(module.base());
        let values = base_space.basis().iter().map(|b| block_diagonal(&Matrix::from_flat(n, n, b.clone()).unwrap(), rank)).collect();
        Self::new(module, values)
    }

    /// A section built from the base point of each fiber.
    pub fn from_fibers(module: &ModuleOverAlgebra) -> Result<Self> {
        let n = module.base().dim();
        let total = module_multipliers(module);
        let base_space = multiplier_algebra(module.base());
        let mut values = Vec::new();
        for b in base_space.basis() {
            let r = Matrix::from_flat(n, n, b.clone()).unwrap();
            match fiber_of(&total, module.dim(), n, &r) {
                Fiber::Affine { base, .. } => values.push(base.module_op),
                Fiber::Empty => return Err(Error::NotInSpace("π is not surjective".into())),
            }
        }
        Self::new(module, values)
    }

    pub fn values(&self) -> &[Matrix] {
        &self.values
    }

    /// Adds `rho` to the value on basis multiplier `j`.
    pub fn shifted(&self, j: usize, rho: &Matrix) -> Result<Self> {
        let mut values = self.values.clone();
        values[j] = &values[j] + rho;
        Self::new(&self.module, values)
    }

    /// `Δ_R` for any `R ∈ 𝔐(A)`.
    pub fn delta(&self, r: &Matrix) -> Result<Matrix> {
        let coords = self.base_space.coordinates(r.data()).ok_or(Error::NotAMultiplier)?;
        let m = self.module.dim();
        let mut out = Matrix::zeros(m, m);
        for (c, v) in coords.iter().zip(&self.values) {
            if !c.is_zero() {
                out = &out + &v.scale(c);
            }
        }
        Ok(out)
    }

    /// Section as a matrix from `𝔐(A)` basis coordinates to `𝔐(M)` basis
    /// coordinates.
    pub fn assignment(&self) -> Matrix {
        let n = self.module.base().dim();
        let columns: Vec<Vec<Scalar>> = self
            .base_space
            .basis()
            .iter()
            .zip(&self.values)
            .map(|(b, delta)| {
                let pair = PairOperator::new(delta.clone(), Matrix::from_flat(n, n, b.clone()).unwrap());
                self.total_space.coordinates(&pair.to_coords()).expect("validated at construction")
            })
            .collect();
        Matrix::from_columns(self.total_space.dim(), &columns)
    }

    /// `Δ_{f R} = f Δ_R` on algebra basis elements and basis multipliers.
    pub fn is_a_linear(&self) -> Result<bool> {
        let a = self.module.base();
        let n = a.dim();
        for i in 0..n {
            for (b, delta) in self.base_space.basis().iter().zip(&self.values) {
                let r = Matrix::from_flat(n, n, b.clone()).unwrap();
                let fr = a.ad_basis(i) * &r;
                if self.delta(&fr)? != self.module.action_basis(i) * delta {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `G(Δ)_{R', R''} = Δ_{R' R''} - Δ_{R'} Δ_{R''}`
    pub fn residual_g(&self, r1: &Matrix, r2: &Matrix) -> Result<Matrix> {
        Ok(&self.delta(&(r1 * r2))? - &(&self.delta(r1)? * &self.delta(r2)?))
    }

    /// Whether `G(Δ)` vanishes on all basis pairs.
    pub fn is_multiplicative(&self) -> Result<bool> {
        let n = self.module.base().dim();
        let basis: Vec<Matrix> = self.base_space.basis().iter().map(|b| Matrix::from_flat(n, n, b.clone()).unwrap()).collect();
        for r1 in &basis {
            for r2 in &basis {
                if !self.residual_g(r1, r2)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn residual_g(section: &MultiplierSection, r1: &Matrix, r2: &Matrix) -> Result<Matrix> {
    section.residual_g(r1, r2)
}

/// `(Δ, R) = (R, R) + (Δ - R, 0)` on the adjoint module.
pub fn split_adjoint_multiplier(module: &ModuleOverAlgebra, p: &PairOperator) -> Result<(PairOperator, PairOperator)> {
    if !module.is_adjoint() {
        return Err(Error::NotAdjointModule);
    }
    let n = module.base().dim();
    let adjoint_part = PairOperator::new(p.algebra_op.clone(), p.algebra_op.clone());
    let rest = PairOperator::new(&p.module_op - &p.algebra_op, Matrix::zeros(n, n));
    Ok((adjoint_part, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit_vec;
    use crate::fixtures;
    use crate::module::free_module;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn multiplier_algebra_dims() {
        assert_eq!(multiplier_algebra(&fixtures::a1()).dim(), 1);
        assert_eq!(multiplier_algebra(&fixtures::a2()).dim(), 2);
        let m3 = multiplier_algebra(&fixtures::a3());
        assert_eq!(m3.dim(), 2);
        // R(u) = αu + βv, R(v) = αv
        assert!(m3.contains(mat(&[&[1, 0], &[0, 1]]).data()).unwrap());
        assert!(m3.contains(mat(&[&[0, 0], &[1, 0]]).data()).unwrap());
        assert!(!m3.contains(mat(&[&[0, 0], &[0, 1]]).data()).unwrap());
    }

    #[test]
    fn e_star() {
        let iso = unital_iso_e_star(&fixtures::a2()).unwrap();
        assert_eq!(iso.apply(&Matrix::identity(2)), vec![int(1), int(0)]);
        let ad_x = fixtures::a2().ad_map(&[int(0), int(1)]);
        assert_eq!(iso.apply(&ad_x), vec![int(0), int(1)]);
        assert_eq!(iso.inverse(&[int(0), int(1)]), ad_x);
        assert_eq!(iso.matrix().rank(), 2);
        assert_eq!(unital_iso_e_star(&fixtures::a3()).unwrap_err(), Error::NoUnit);
    }

    #[test]
    fn module_multiplier_dims() {
        assert_eq!(module_multipliers(&fixtures::m2()).dim(), 2);
        assert_eq!(module_multipliers(&fixtures::ad3()).dim(), 3);
        assert_eq!(module_multipliers(&fixtures::m2r2()).dim(), 2);
    }

    #[test]
    fn fibers() {
        let m2 = fixtures::m2();
        assert_eq!(fiber_pi(&m2, &Matrix::identity(2)).unwrap().dim(), Some(0));
        let ad3 = fixtures::ad3();
        let Fiber::Affine { base, directions } = fiber_pi(&ad3, &Matrix::identity(2)).unwrap() else {
            panic!("fiber over identity is nonempty");
        };
        assert_eq!(directions.dim(), 1);
        // ρ(u) = v, ρ(v) = 0
        assert_eq!(directions, Subspace::from_rows(4, vec![mat(&[&[0, 0], &[1, 0]]).into_data()]));
        assert!(is_module_multiplier(&ad3, &base));
        assert_eq!(fiber_pi(&ad3, &mat(&[&[0, 0], &[0, 1]])).unwrap_err(), Error::NotAMultiplier);
    }

    #[test]
    fn fiber_over_zero_algebra() {
        let zero = Algebra::new("Z", vec![], vec![]).unwrap();
        let module = ModuleOverAlgebra::new(zero, "Z2", vec!["p".into(), "q".into()], vec![]).unwrap();
        assert_eq!(fiber_pi(&module, &Matrix::zeros(0, 0)).unwrap().dim(), Some(4));
    }

    #[test]
    fn adjoint_embedding_kernels() {
        let v = Subspace::from_rows(2, vec![unit_vec(2, 1)]);
        assert_eq!(adjoint_embedding(&fixtures::ad3()).kernel(), v);
        assert_eq!(adjoint_embedding(&fixtures::m2()).kernel().dim(), 0);
        let a1 = fixtures::a1();
        let emb = adjoint_embedding(&ModuleOverAlgebra::adjoint(&a1));
        assert_eq!(emb.apply(&[int(3)]), PairOperator::new(mat(&[&[3]]), mat(&[&[3]])));
    }

    #[test]
    fn free_injection() {
        let m2r2 = fixtures::m2r2();
        let ad_x = fixtures::a2().ad_map(&[int(0), int(1)]);
        let p = multiplier_injection_free(&m2r2, &ad_x).unwrap();
        assert_eq!(p.module_op, block_diagonal(&ad_x, 2));
        assert!(is_module_multiplier(&m2r2, &p));
        let rank1 = multiplier_injection_free(&fixtures::m2(), &Matrix::identity(2)).unwrap();
        assert!(rank1.module_op.is_identity());
        let rank0 = multiplier_injection_free(&free_module(&fixtures::a2(), 0), &Matrix::identity(2)).unwrap();
        assert_eq!(rank0.module_op.rows(), 0);
        // x acts as zero on Q^2
        let mut action = fixtures::a2().structure().clone();
        action[1] = vec![vec![int(0), int(0)], vec![int(0), int(0)]];
        let not_free = ModuleOverAlgebra::new(fixtures::a2(), "N", vec!["p".into(), "q".into()], action).unwrap();
        assert_eq!(multiplier_injection_free(&not_free, &Matrix::identity(2)).unwrap_err(), Error::NotFree);
    }

    #[test]
    fn residuals() {
        let lift = MultiplierSection::free_lift(&fixtures::m2r2()).unwrap();
        assert!(lift.is_a_linear().unwrap());
        assert!(lift.is_multiplicative().unwrap());
        let m2 = MultiplierSection::from_fibers(&fixtures::m2()).unwrap();
        assert!(m2.is_multiplicative().unwrap());

        let ad3 = fixtures::ad3();
        let section = MultiplierSection::free_lift(&ad3).unwrap();
        assert!(section.is_multiplicative().unwrap());
        let rho = mat(&[&[0, 0], &[1, 0]]);
        let basis = multiplier_algebra(&ad3.base().clone());
        let id_index = basis.coordinates(Matrix::identity(2).data()).unwrap().iter().position(|c| !c.is_zero()).unwrap();
        let shifted = section.shifted(id_index, &rho).unwrap();
        assert!(!shifted.is_multiplicative().unwrap());
        let id = Matrix::identity(2);
        let g = shifted.residual_g(&id, &id).unwrap();
        assert_eq!(g, -&rho);
        assert!(ad3.is_a_linear(&g));
        assert_eq!(shifted.assignment().cols(), 2);
    }

    #[test]
    fn adjoint_split() {
        let ad3 = fixtures::ad3();
        let space = module_multipliers(&ad3);
        let n = 2;
        let mut image = Vec::new();
        let mut fiber = Vec::new();
        for b in space.basis() {
            let p = PairOperator::new(Matrix::from_flat(2, 2, b[..4].to_vec()).unwrap(), Matrix::from_flat(n, n, b[4..].to_vec()).unwrap());
            let (x, y) = split_adjoint_multiplier(&ad3, &p).unwrap();
            assert_eq!(x.add(&y), p);
            image.push(x.to_coords());
            fiber.push(y.module_op.into_data());
        }
        assert_eq!(Subspace::from_rows(8, image).dim(), 2);
        let fiber = Subspace::from_rows(4, fiber);
        assert_eq!(fiber, ad3.hom_into_annihilator());
        let (x, y) = split_adjoint_multiplier(&fixtures::m2(), &PairOperator::zero(2, 2)).unwrap();
        assert!(x.is_zero() && y.is_zero());
        assert_eq!(split_adjoint_multiplier(&fixtures::m2r2(), &PairOperator::zero(4, 2)).unwrap_err(), Error::NotAdjointModule);
    }
}
