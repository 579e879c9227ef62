//! Operators on an algebra or a module and the finite-dimensional spaces they
//! form.
//!
//! A *carrier* is either the algebra itself or a module over it. Multipliers
//! and derivations of an algebra are single matrices; those of a module are
//! pairs `(module operator, algebra operator)`. Both kinds are coordinatized as
//! the concatenation of the row-major matrices, module part first.

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::derivation::{derivation_algebra, module_derivations};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::multiplier::{module_multipliers, multiplier_algebra};

/// The object playing the role of `U` or `V` in the complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Algebra(Algebra),
    Module(ModuleOverAlgebra),
}

impl Carrier {
    pub fn base(&self) -> &Algebra {
        match self {
            Carrier::Algebra(a) => a,
            Carrier::Module(m) => m.base(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Carrier::Algebra(a) => a.dim(),
            Carrier::Module(m) => m.dim(),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Carrier::Algebra(a) => a.name(),
            Carrier::Module(m) => m.name(),
        }
    }

    /// How algebra basis element `i` acts on carrier values.
    pub fn action_basis(&self, i: usize) -> &Matrix {
        match self {
            Carrier::Algebra(a) => a.ad_basis(i),
            Carrier::Module(m) => m.action_basis(i),
        }
    }

    pub fn action_of(&self, f: &[Scalar]) -> Matrix {
        match self {
            Carrier::Algebra(a) => a.ad_map(f),
            Carrier::Module(m) => m.action_of(f),
        }
    }

    /// Length of the coordinate vector of an operator on this carrier.
    pub fn operator_len(&self) -> usize {
        let n = self.base().dim();
        match self {
            Carrier::Algebra(_) => n * n,
            Carrier::Module(m) => m.dim() * m.dim() + n * n,
        }
    }

    pub fn operator_from_coords(&self, coords: &[Scalar]) -> Operator {
        assert_eq!(coords.len(), self.operator_len(), "operator coordinate length");
        let n = self.base().dim();
        match self {
            Carrier::Algebra(_) => Operator::Algebra(Matrix::from_flat(n, n, coords.to_vec()).unwrap()),
            Carrier::Module(m) => {
                let k = m.dim() * m.dim();
                Operator::Module(PairOperator {
                    module_op: Matrix::from_flat(m.dim(), m.dim(), coords[..k].to_vec()).unwrap(),
                    algebra_op: Matrix::from_flat(n, n, coords[k..].to_vec()).unwrap(),
                })
            }
        }
    }

    /// `f . op`: post-composition with the action of `f` on every component.
    pub fn act_on_operator(&self, f: &[Scalar], op: &Operator) -> Operator {
        match op {
            Operator::Algebra(r) => Operator::Algebra(&self.base().ad_map(f) * r),
            Operator::Module(p) => {
                Operator::Module(PairOperator { module_op: &self.action_of(f) * &p.module_op, algebra_op: &self.base().ad_map(f) * &p.algebra_op })
            }
        }
    }

    pub fn identity_operator(&self) -> Operator {
        let n = self.base().dim();
        match self {
            Carrier::Algebra(_) => Operator::Algebra(Matrix::identity(n)),
            Carrier::Module(m) => Operator::Module(PairOperator { module_op: Matrix::identity(m.dim()), algebra_op: Matrix::identity(n) }),
        }
    }
}

/// `(Δ_R, R)` or `(∇_X, X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairOperator {
    pub module_op: Matrix,
    pub algebra_op: Matrix,
}

impl PairOperator {
    pub fn new(module_op: Matrix, algebra_op: Matrix) -> Self {
        PairOperator { module_op, algebra_op }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        PairOperator { module_op: Matrix::zeros(m, m), algebra_op: Matrix::zeros(n, n) }
    }

    pub fn compose(&self, other: &PairOperator) -> PairOperator {
        PairOperator { module_op: &self.module_op * &other.module_op, algebra_op: &self.algebra_op * &other.algebra_op }
    }

    pub fn bracket(&self, other: &PairOperator) -> PairOperator {
        PairOperator { module_op: self.module_op.commutator(&other.module_op), algebra_op: self.algebra_op.commutator(&other.algebra_op) }
    }

    pub fn add(&self, other: &PairOperator) -> PairOperator {
        PairOperator { module_op: &self.module_op + &other.module_op, algebra_op: &self.algebra_op + &other.algebra_op }
    }

    pub fn sub(&self, other: &PairOperator) -> PairOperator {
        PairOperator { module_op: &self.module_op - &other.module_op, algebra_op: &self.algebra_op - &other.algebra_op }
    }

    pub fn scale(&self, a: &Scalar) -> PairOperator {
        PairOperator { module_op: self.module_op.scale(a), algebra_op: self.algebra_op.scale(a) }
    }

    pub fn is_zero(&self) -> bool {
        self.module_op.is_zero() && self.algebra_op.is_zero()
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        self.module_op.data().iter().chain(self.algebra_op.data()).cloned().collect()
    }
}

/// An element of a multiplier or derivation space of some carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Algebra(Matrix),
    Module(PairOperator),
}

impl Operator {
    fn zip(&self, other: &Operator, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Operator {
        match (self, other) {
            (Operator::Algebra(a), Operator::Algebra(b)) => Operator::Algebra(f(a, b)),
            (Operator::Module(a), Operator::Module(b)) => {
                Operator::Module(PairOperator { module_op: f(&a.module_op, &b.module_op), algebra_op: f(&a.algebra_op, &b.algebra_op) })
            }
            _ => panic!("mixing algebra and module operators"),
        }
    }

    fn map(&self, f: impl Fn(&Matrix) -> Matrix) -> Operator {
        match self {
            Operator::Algebra(a) => Operator::Algebra(f(a)),
            Operator::Module(p) => Operator::Module(PairOperator { module_op: f(&p.module_op), algebra_op: f(&p.algebra_op) }),
        }
    }

    pub fn compose(&self, other: &Operator) -> Operator {
        self.zip(other, |a, b| a * b)
    }

    pub fn bracket(&self, other: &Operator) -> Operator {
        self.zip(other, |a, b| a.commutator(b))
    }

    pub fn add(&self, other: &Operator) -> Operator {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Operator {
        self.map(|a| a.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Operator::Algebra(a) => a.is_zero(),
            Operator::Module(p) => p.is_zero(),
        }
    }

    /// The component acting on carrier values.
    pub fn value_op(&self) -> &Matrix {
        match self {
            Operator::Algebra(a) => a,
            Operator::Module(p) => &p.module_op,
        }
    }

    /// The component acting on the algebra.
    pub fn algebra_op(&self) -> &Matrix {
        match self {
            Operator::Algebra(a) => a,
            Operator::Module(p) => &p.algebra_op,
        }
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        match self {
            Operator::Algebra(a) => a.data().to_vec(),
            Operator::Module(p) => p.to_coords(),
        }
    }

    pub fn as_pair(&self) -> Option<&PairOperator> {
        match self {
            Operator::Module(p) => Some(p),
            Operator::Algebra(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Multiplier,
    Derivation,
}

/// `𝔐(U)` or `𝔇(U)` with its canonical basis and the structure needed by the
/// complexes: products, A-action and the action on carrier values.
#[derive(Clone, Debug)]
pub struct OperatorSpace {
    carrier: Carrier,
    kind: OperatorKind,
    space: Subspace,
    basis_ops: Vec<Operator>,
}

impl OperatorSpace {
    pub fn new(carrier: Carrier, kind: OperatorKind, space: Subspace) -> Self {
        assert_eq!(space.ambient_dim(), carrier.operator_len());
        let basis_ops = space.basis().iter().map(|b| carrier.operator_from_coords(b)).collect();
        OperatorSpace { carrier, kind, space, basis_ops }
    }

    pub fn multipliers(carrier: Carrier) -> Self {
        let space = match &carrier {
            Carrier::Algebra(a) => multiplier_algebra(a),
            Carrier::Module(m) => module_multipliers(m),
        };
        Self::new(carrier, OperatorKind::Multiplier, space)
    }

    pub fn derivations(carrier: Carrier) -> Self {
        let space = match &carrier {
            Carrier::Algebra(a) => derivation_algebra(a),
            Carrier::Module(m) => module_derivations(m),
        };
        Self::new(carrier, OperatorKind::Derivation, space)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Operator] {
        &self.basis_ops
    }

    pub fn element(&self, coords: &[Scalar]) -> Operator {
        self.carrier.operator_from_coords(&self.space.combine(coords))
    }

    pub fn coordinates(&self, op: &Operator) -> Option<Vec<Scalar>> {
        self.space.coordinates(&op.to_coords())
    }

    pub fn contains(&self, op: &Operator) -> bool {
        self.coordinates(op).is_some()
    }

    fn coords_or_err(&self, op: &Operator, what: &str) -> Result<Vec<Scalar>> {
        self.coordinates(op).ok_or_else(|| Error::NotInSpace(format!("{what} leaves {:?} of {}", self.kind, self.carrier.name())))
    }

    /// The space's own product: composition for multipliers, commutator for
    /// derivations. `table[i][j]` holds the coordinates of `b_i * b_j`.
    pub fn product_table(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let d = self.dim();
        let mut table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let op = match self.kind {
                    OperatorKind::Multiplier => self.basis_ops[i].compose(&self.basis_ops[j]),
                    OperatorKind::Derivation => self.basis_ops[i].bracket(&self.basis_ops[j]),
                };
                table[i][j] = self.coords_or_err(&op, "product")?;
            }
        }
        Ok(table)
    }

    /// For each algebra basis element `a_j`, the matrix of `op -> a_j . op` in
    /// this space's basis (column `i` = coordinates of `a_j . b_i`).
    pub fn action_matrices(&self) -> Result<Vec<Matrix>> {
        let n = self.carrier.base().dim();
        let d = self.dim();
        (0..n)
            .map(|j| {
                let f = self.carrier.base().basis_element(j);
                let columns =
                    self.basis_ops.iter().map(|op| self.coords_or_err(&self.carrier.act_on_operator(&f, op), "algebra action")).collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(d, &columns))
            })
            .collect()
    }

    /// Component of each basis element acting on carrier values.
    pub fn value_ops(&self) -> Vec<Matrix> {
        self.basis_ops.iter().map(|op| op.value_op().clone()).collect()
    }

    /// Algebra component of the element with the given coordinates.
    pub fn algebra_part(&self, coords: &[Scalar]) -> Matrix {
        let n = self.carrier.base().dim();
        let mut acc = Matrix::zeros(n, n);
        for (c, op) in coords.iter().zip(&self.basis_ops) {
            if !c.is_zero() {
                acc = &acc + &op.algebra_op().scale(c);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dims_of_fixture_spaces() {
        let cases = [
            (Carrier::Algebra(fixtures::a1()), 1, 0),
            (Carrier::Algebra(fixtures::a2()), 2, 1),
            (Carrier::Algebra(fixtures::a3()), 2, 2),
            (Carrier::Module(fixtures::m2()), 2, 3),
            (Carrier::Module(fixtures::m2r2()), 2, 9),
            (Carrier::Module(fixtures::ad3()), 3, 4),
        ];
        for (carrier, mult, der) in cases {
            assert_eq!(OperatorSpace::multipliers(carrier.clone()).dim(), mult, "M({})", carrier.name());
            assert_eq!(OperatorSpace::derivations(carrier.clone()).dim(), der, "D({})", carrier.name());
        }
    }

    #[test]
    fn spaces_are_closed_under_products_and_action() {
        for carrier in [Carrier::Algebra(fixtures::a3()), Carrier::Module(fixtures::ad3()), Carrier::Module(fixtures::m2r2())] {
            for space in [OperatorSpace::multipliers(carrier.clone()), OperatorSpace::derivations(carrier.clone())] {
                space.product_table().unwrap();
                space.action_matrices().unwrap();
            }
        }
    }
}
