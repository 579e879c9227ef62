//! Finite-dimensional modules over an [`Algebra`], coordinatized over the
//! rationals.

use num_traits::Zero;

use crate::algebra::{check_cube, Algebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exactlin::{add_sandwich, int, kernel_basis, Echelon, Matrix, Scalar, Subspace};

/// Coordinates of a module element over the rationals.
pub type ModuleElement = Vec<Scalar>;

/// `action[i][j][k]` is the coefficient of `m_k` in `a_i . m_j`.
pub type ActionTensor = Vec<Vec<Vec<Scalar>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOverAlgebra {
    name: String,
    base: Algebra,
    basis_names: Vec<String>,
    action: ActionTensor,
    act: Vec<Matrix>,
}

impl ModuleOverAlgebra {
    /// Checks `a_i . (a_j . m) = (a_i a_j) . m` on all basis triples.
    pub fn new(base: Algebra, name: impl Into<String>, basis_names: Vec<String>, action: ActionTensor) -> Result<Self> {
        let n = base.dim();
        let m = basis_names.len();
        if action.len() != n {
            return Err(Error::Shape(format!("action: expected {n} blocks, found {}", action.len())));
        }
        for block in &action {
            check_cube(std::slice::from_ref(block), 1, m, "action")?;
        }
        let act: Vec<Matrix> = action
            .iter()
            .map(|block| {
                let mut mat = Matrix::zeros(m, m);
                for (j, coords) in block.iter().enumerate() {
                    for (k, x) in coords.iter().enumerate() {
                        mat[(k, j)] = x.clone();
                    }
                }
                mat
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = &act[i] * &act[j];
                let mut rhs = Matrix::zeros(m, m);
                for (p, c) in base.structure()[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        rhs = &rhs + &act[p].scale(c);
                    }
                }
                if lhs != rhs {
                    let k = (0..m).find(|&k| lhs.column(k) != rhs.column(k)).unwrap_or(0);
                    return Err(Error::NotAModule { i, j, k });
                }
            }
        }
        Ok(ModuleOverAlgebra { name: name.into(), base, basis_names, action, act })
    }

    /// The algebra acting on itself by multiplication.
    pub fn adjoint(base: &Algebra) -> Self {
        let name = format!("ad({})", base.name());
        Self::new(base.clone(), name, base.basis_names().to_vec(), base.structure().clone()).expect("an associative algebra is a module over itself")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn action(&self) -> &ActionTensor {
        &self.action
    }

    /// Matrix of `M -> a_i . M`.
    pub fn action_basis(&self, i: usize) -> &Matrix {
        &self.act[i]
    }

    /// Matrix of `M -> f . M`.
    pub fn action_of(&self, f: &[Scalar]) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (fi, a) in f.iter().zip(&self.act) {
            if !fi.is_zero() {
                out = &out + &a.scale(fi);
            }
        }
        out
    }

    pub fn act(&self, f: &[Scalar], v: &[Scalar]) -> ModuleElement {
        self.action_of(f).apply(v)
    }

    /// `ann_M A = {M : A . M = 0}`
    pub fn ann_of_algebra_in_module(&self) -> Subspace {
        let m = self.dim();
        let mut ech = Echelon::new(m);
        for a in &self.act {
            for r in 0..m {
                ech.insert(a.row(r).to_vec());
            }
        }
        ech.kernel()
    }

    /// `ann_A M = {f : f . M = 0}`
    pub fn ann_of_module_in_algebra(&self) -> Subspace {
        let m = self.dim();
        let columns: Vec<Vec<Scalar>> = self.act.iter().map(|a| a.data().to_vec()).collect();
        kernel_basis(&Matrix::from_columns(m * m, &columns))
    }

    /// `End_A(M)` as a subspace of row-major `m x m` matrices.
    pub fn endomorphisms(&self) -> Subspace {
        let m = self.dim();
        let id = Matrix::identity(m);
        let mut ech = Echelon::new(m * m);
        for a in &self.act {
            let mut block = Matrix::zeros(m * m, m * m);
            add_sandwich(&mut block, 0, &id, a, &int(1));
            add_sandwich(&mut block, 0, a, &id, &int(-1));
            for r in 0..block.rows() {
                ech.insert(block.row(r).to_vec());
            }
        }
        ech.kernel()
    }

    /// `Hom_A(M; ann_M A)`: algebra-linear maps with values in `ann_M A`.
    pub fn hom_into_annihilator(&self) -> Subspace {
        let m = self.dim();
        let target_eqs = self.ann_of_algebra_in_module().equations();
        let mut rows = Vec::new();
        for w in target_eqs.basis() {
            for j in 0..m {
                let mut row = vec![Scalar::zero(); m * m];
                for (r, wr) in w.iter().enumerate() {
                    row[r * m + j] = wr.clone();
                }
                rows.push(row);
            }
        }
        let into_ann = kernel_basis(&Matrix::from_rows(m * m, rows).expect("rows have length m^2"));
        self.endomorphisms().intersect(&into_ann).expect("same ambient")
    }

    pub fn is_a_linear(&self, op: &Matrix) -> bool {
        op.rows() == self.dim() && op.cols() == self.dim() && self.act.iter().all(|a| a * op == op * a)
    }

    /// Whether this is the algebra acting on itself.
    pub fn is_adjoint(&self) -> bool {
        self.dim() == self.base.dim() && self.action == *self.base.structure()
    }

    /// Rank `r` when the module is `A^r` with componentwise multiplication.
    pub fn free_rank(&self) -> Option<usize> {
        let n = self.base.dim();
        if n == 0 {
            return (self.dim() == 0).then_some(0);
        }
        if !self.dim().is_multiple_of(n) {
            return None;
        }
        let rank = self.dim() / n;
        (self.action == free_action(&self.base, rank)).then_some(rank)
    }
}

fn free_action(base: &Algebra, rank: usize) -> ActionTensor {
    let n = base.dim();
    let m = n * rank;
    let s: &StructureTensor = base.structure();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|col| {
                    let (block, j) = (col / n, col % n);
                    let mut coords = vec![Scalar::zero(); m];
                    for k in 0..n {
                        coords[block * n + k] = s[i][j][k].clone();
                    }
                    coords
                })
                .collect()
        })
        .collect()
}

/// `A^rank` with block-diagonal multiplication; basis `b{r}⊗{name}`.
pub fn free_module(base: &Algebra, rank: usize) -> ModuleOverAlgebra {
    let names = (0..rank).flat_map(|r| base.basis_names().iter().map(move |name| format!("b{r}⊗{name}"))).collect();
    let action = free_action(base, rank);
    ModuleOverAlgebra::new(base.clone(), format!("{}^{rank}", base.name()), names, action).expect("free modules satisfy the module axioms")
}

pub fn validate_module(base: &Algebra, name: &str, basis_names: Vec<String>, action: ActionTensor) -> Result<ModuleOverAlgebra> {
    ModuleOverAlgebra::new(base.clone(), name, basis_names, action)
}
