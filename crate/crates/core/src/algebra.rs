//! Finite-dimensional associative commutative algebras given by structure
//! constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{solve, zero_vec, Echelon, Matrix, Scalar, Subspace};

/// Coordinates of an algebra element with respect to the basis.
pub type AlgebraElement = Vec<Scalar>;

/// `structure[i][j][k]` is the coefficient of `b_k` in `b_i * b_j`.
pub type StructureTensor = Vec<Vec<Vec<Scalar>>>;

/// A validated commutative associative algebra over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis_names: Vec<String>,
    structure: StructureTensor,
    ad: Vec<Matrix>,
}

impl Algebra {
    /// Validates commutativity and associativity; the first violated identity
    /// is reported with its basis indices.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, structure: StructureTensor) -> Result<Self> {
        let n = basis_names.len();
        check_cube(&structure, n, n, "products")?;
        for i in 0..n {
            for j in (i + 1)..n {
                if structure[i][j] != structure[j][i] {
                    return Err(Error::NotCommutative { i, j });
                }
            }
        }
        let ad: Vec<Matrix> = (0..n).map(|i| mult_matrix(&structure, i)).collect();
        // (b_i b_j) b_k = b_i (b_j b_k) for all i, j, k
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = ad[k].apply(&structure[i][j]);
                    let right = ad[i].apply(&structure[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(Algebra { name: name.into(), basis_names, structure, ad })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure(&self) -> &StructureTensor {
        &self.structure
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        crate::exactlin::unit_vec(self.dim(), i)
    }

    pub fn multiply(&self, f: &[Scalar], g: &[Scalar]) -> AlgebraElement {
        self.ad_map(f).apply(g)
    }

    /// Matrix of multiplication by the basis element `b_i`.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// Matrix of `g -> f * g`.
    pub fn ad_map(&self, f: &[Scalar]) -> Matrix {
        let n = self.dim();
        assert_eq!(f.len(), n, "algebra element has wrong length");
        let mut m = Matrix::zeros(n, n);
        for (fi, ad) in f.iter().zip(&self.ad) {
            if !fi.is_zero() {
                m = &m + &ad.scale(fi);
            }
        }
        m
    }

    /// `{f : f * A = 0}`, the kernel of `f -> (f b_1, ..., f b_n)`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        let mut ech = Echelon::new(n);
        for j in 0..n {
            for k in 0..n {
                ech.insert((0..n).map(|i| self.structure[i][j][k].clone()).collect());
            }
        }
        ech.kernel()
    }

    /// Kernel of `f -> ad_f` assembled as one `n^2 x n` matrix.
    pub fn ad_kernel(&self) -> Subspace {
        let n = self.dim();
        let columns: Vec<Vec<Scalar>> = self.ad.iter().map(|m| m.data().to_vec()).collect();
        crate::exactlin::kernel_basis(&Matrix::from_columns(n * n, &columns))
    }

    /// The unit element, when one exists.
    pub fn find_unit(&self) -> Option<AlgebraElement> {
        let n = self.dim();
        // e * b_i = b_i: sum_p e_p c[p][i][k] = delta_ik
        let mut system = Matrix::zeros(n * n, n);
        let mut rhs = zero_vec(n * n);
        for i in 0..n {
            for k in 0..n {
                for p in 0..n {
                    system[(i * n + k, p)] = self.structure[p][i][k].clone();
                }
                if i == k {
                    rhs[i * n + k] = num_traits::One::one();
                }
            }
        }
        solve(&system, &rhs)
    }

    pub fn is_unital(&self) -> bool {
        self.find_unit().is_some()
    }
}

/// Multiplication by basis element `i`: column `j` holds `b_i * b_j`.
fn mult_matrix(structure: &StructureTensor, i: usize) -> Matrix {
    let n = structure.len();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            m[(k, j)] = structure[i][j][k].clone();
        }
    }
    m
}

pub(crate) fn check_cube(t: &[Vec<Vec<Scalar>>], outer: usize, inner: usize, what: &str) -> Result<()> {
    if t.len() != outer {
        return Err(Error::Shape(format!("{what}: expected {outer} blocks, found {}", t.len())));
    }
    for (i, block) in t.iter().enumerate() {
        if block.len() != inner {
            return Err(Error::Shape(format!("{what}[{i}]: expected {inner} entries, found {}", block.len())));
        }
        for (j, coords) in block.iter().enumerate() {
            if coords.len() != inner {
                return Err(Error::Shape(format!("{what}[{i}][{j}]: expected {inner} coordinates, found {}", coords.len())));
            }
        }
    }
    Ok(())
}

/// Alias kept for callers that think in terms of validation.
pub fn validate_algebra(name: &str, basis_names: Vec<String>, structure: StructureTensor) -> Result<Algebra> {
    Algebra::new(name, basis_names, structure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};
    use crate::fixtures;

    #[test]
    fn fixtures_validate() {
        assert_eq!(fixtures::a1().dim(), 1);
        assert_eq!(fixtures::a2().dim(), 2);
        assert_eq!(fixtures::a3().dim(), 2);
    }

    #[test]
    fn detects_noncommutative() {
        let mut t = fixtures::a2().structure().clone();
        t[0][1] = vec![int(1), int(0)];
        let err = Algebra::new("bad", vec!["e".into(), "x".into()], t).unwrap_err();
        assert_eq!(err, Error::NotCommutative { i: 0, j: 1 });
    }

    #[test]
    fn detects_nonassociative() {
        // u*u = u + v, u*v = v*u = u, v*v = 0 is commutative but not associative.
        let t = vec![vec![vec![int(1), int(1)], vec![int(1), int(0)]], vec![vec![int(1), int(0)], vec![int(0), int(0)]]];
        let err = Algebra::new("bad", vec!["u".into(), "v".into()], t).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn empty_algebra_is_valid() {
        let a = Algebra::new("zero", vec![], vec![]).unwrap();
        assert_eq!(a.dim(), 0);
        assert_eq!(a.annihilator().dim(), 0);
        assert_eq!(a.find_unit(), Some(vec![]));
    }

    #[test]
    fn shape_errors() {
        let err = Algebra::new("bad", vec!["e".into()], vec![vec![vec![int(1), int(0)]]]).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }

    #[test]
    fn annihilators() {
        assert_eq!(fixtures::a1().annihilator().dim(), 0);
        assert_eq!(fixtures::a2().annihilator().dim(), 0);
        let ann = fixtures::a3().annihilator();
        assert_eq!(ann, Subspace::from_rows(2, vec![unit_vec(2, 1)]));
    }

    #[test]
    fn units() {
        assert_eq!(fixtures::a2().find_unit(), Some(vec![int(1), int(0)]));
        assert_eq!(fixtures::a3().find_unit(), None);
        assert_eq!(fixtures::a1().find_unit(), Some(vec![int(1)]));
    }

    #[test]
    fn ad_examples() {
        let a2 = fixtures::a2();
        assert!(a2.ad_map(&[int(1), int(0)]).is_identity());
        let a3 = fixtures::a3();
        // u -> v, v -> 0
        assert_eq!(a3.ad_map(&[int(1), int(0)]), Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert!(a3.ad_map(&[int(0), int(1)]).is_zero());
    }

    #[test]
    fn ad_kernel_is_annihilator() {
        for a in [fixtures::a1(), fixtures::a2(), fixtures::a3()] {
            assert_eq!(a.ad_kernel(), a.annihilator());
        }
    }

    #[test]
    fn ad_is_multiplicative_on_basis() {
        for a in [fixtures::a1(), fixtures::a2(), fixtures::a3()] {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let fg = a.multiply(&a.basis_element(i), &a.basis_element(j));
                    assert_eq!(a.ad_map(&fg), a.ad_basis(i) * a.ad_basis(j));
                }
            }
        }
    }
}
