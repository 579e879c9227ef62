//! Multiplier cochains `C^q(U, V)`, their tensor product and the Hochschild
//! differential `δ_κ`.
//!
//! A degree-`q` cochain is stored by its values on all `q`-tuples of `𝔐(U)`
//! basis elements (lexicographic order), each value given in the `𝔐(V)` basis:
//! entry `t * b + l` is coordinate `l` of the value on tuple `t`.

use num_traits::{One, Zero};

use crate::complex::{analyze, ComplexReport};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, int, zero_vec, Echelon, Matrix, Scalar, Subspace};
use crate::operators::{Carrier, OperatorSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Scalar>,
}

/// Everything needed to evaluate cochains of one pair `(U, V)`.
#[derive(Clone, Debug)]
pub struct CochainContext {
    u: OperatorSpace,
    v: OperatorSpace,
    u_product: Vec<Vec<Vec<Scalar>>>,
    v_product: Vec<Vec<Vec<Scalar>>>,
    u_action: Vec<Matrix>,
    v_action: Vec<Matrix>,
}

fn compose_table(space: &OperatorSpace) -> Result<Vec<Vec<Vec<Scalar>>>> {
    space.product_table().map_err(|e| Error::NotComposable(e.to_string()))
}

impl CochainContext {
    pub fn new(u: Carrier, v: Carrier) -> Result<Self> {
        if u.base() != v.base() {
            return Err(Error::MixedBaseAlgebra);
        }
        let u = OperatorSpace::multipliers(u);
        let v = OperatorSpace::multipliers(v);
        let u_product = compose_table(&u)?;
        let v_product = compose_table(&v)?;
        let u_action = u.action_matrices()?;
        let v_action = v.action_matrices()?;
        Ok(CochainContext { u, v, u_product, v_product, u_action, v_action })
    }

    pub fn u_space(&self) -> &OperatorSpace {
        &self.u
    }

    pub fn v_space(&self) -> &OperatorSpace {
        &self.v
    }

    fn a(&self) -> usize {
        self.u.dim()
    }

    fn b(&self) -> usize {
        self.v.dim()
    }

    pub fn ambient_dim(&self, q: usize) -> usize {
        self.a().pow(q as u32) * self.b()
    }

    fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &i| acc * self.a() + i)
    }

    fn tuples(&self, q: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let a = self.a();
        let count = a.pow(q as u32);
        (0..count).map(move |mut idx| {
            let mut t = vec![0; q];
            for slot in (0..q).rev() {
                t[slot] = idx % a;
                idx /= a;
            }
            t
        })
    }

    fn value<'c>(&self, c: &'c [Scalar], t: &[usize]) -> &'c [Scalar] {
        let b = self.b();
        let i = self.tuple_index(t);
        &c[i * b..(i + 1) * b]
    }

    /// `x ∘ y` in `𝔐(V)` coordinates.
    fn compose_v(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.b());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), &self.v_product[i][j]);
                }
            }
        }
        out
    }

    /// `C^q` as a subspace of all value arrays; `q < 0` gives the zero space.
    pub fn cochain_space(&self, q: i64) -> Subspace {
        if q < 0 {
            return Subspace::zero(0);
        }
        let q = q as usize;
        let (a, b) = (self.a(), self.b());
        let cols = self.ambient_dim(q);
        let mut ech = Echelon::new(cols);
        // c(.., f η_s, ..) = f c(..)
        for (p, qm) in self.u_action.iter().zip(&self.v_action) {
            for slot in 0..q {
                for t in self.tuples(q) {
                    for l in 0..b {
                        let mut row = zero_vec(cols);
                        let mut moved = t.clone();
                        for k in 0..a {
                            if !p[(k, t[slot])].is_zero() {
                                moved[slot] = k;
                                row[self.tuple_index(&moved) * b + l] += &p[(k, t[slot])];
                            }
                        }
                        let base = self.tuple_index(&t) * b;
                        for lp in 0..b {
                            if !qm[(l, lp)].is_zero() {
                                row[base + lp] -= &qm[(l, lp)];
                            }
                        }
                        ech.insert(row);
                    }
                }
            }
        }
        ech.kernel()
    }

    pub fn contains(&self, c: &Cochain) -> bool {
        self.cochain_space(c.degree as i64).coordinates(&c.values).is_some()
    }

    /// `(c ⊗ c')(η_1..η_{p+q}) = c(η_1..η_p) ∘ c'(η_{p+1}..η_{p+q})`
    pub fn tensor(&self, c: &Cochain, d: &Cochain) -> Cochain {
        let deg = c.degree + d.degree;
        let mut values = Vec::with_capacity(self.ambient_dim(deg));
        for t in self.tuples(deg) {
            values.extend(self.compose_v(self.value(&c.values, &t[..c.degree]), self.value(&d.values, &t[c.degree..])));
        }
        Cochain { degree: deg, values }
    }

    /// Checks `κ ∈ C^1`: a `b x a` matrix whose column `i` is `κ η_i`.
    pub fn validate_kappa(&self, kappa: &Matrix) -> Result<()> {
        if kappa.rows() != self.b() || kappa.cols() != self.a() {
            return Err(Error::Shape(format!("kappa must be {} x {}", self.b(), self.a())));
        }
        if !self.contains(&self.kappa_cochain(kappa)) {
            return Err(Error::NotALinear("kappa is not algebra-linear".into()));
        }
        Ok(())
    }

    pub fn kappa_cochain(&self, kappa: &Matrix) -> Cochain {
        Cochain { degree: 1, values: kappa.transpose().into_data() }
    }

    /// `κ = id` when `𝔐(U) = 𝔐(V)`.
    pub fn identity_kappa(&self) -> Result<Matrix> {
        if self.u.carrier() != self.v.carrier() {
            return Err(Error::Shape("the identity needs U = V".into()));
        }
        Ok(Matrix::identity(self.a()))
    }

    /// `G(κ)(η', η'') = κη' ∘ κη'' - κ(η' ∘ η'')`
    pub fn residual(&self, kappa: &Matrix) -> Cochain {
        let mut values = Vec::with_capacity(self.ambient_dim(2));
        for t in self.tuples(2) {
            let mut v = self.compose_v(&kappa.column(t[0]), &kappa.column(t[1]));
            let back = kappa.apply(&self.u_product[t[0]][t[1]]);
            axpy(&mut v, &int(-1), &back);
            values.extend(v);
        }
        Cochain { degree: 2, values }
    }

    /// First basis pair on which `G(κ)` is nonzero.
    pub fn residual_witness(&self, kappa: &Matrix) -> Option<(usize, usize)> {
        let g = self.residual(kappa);
        self.tuples(2).find(|t| self.value(&g.values, t).iter().any(|x| !x.is_zero())).map(|t| (t[0], t[1]))
    }

    /// The Hochschild rule applied to `c`.
    pub fn delta(&self, kappa: &Matrix, c: &Cochain) -> Cochain {
        let q = c.degree;
        let mut values = Vec::with_capacity(self.ambient_dim(q + 1));
        let tail_sign = if (q + 1).is_multiple_of(2) { int(1) } else { int(-1) };
        for t in self.tuples(q + 1) {
            let mut v = self.compose_v(&kappa.column(t[0]), self.value(&c.values, &t[1..]));
            for r in 1..=q {
                let sign = if r % 2 == 0 { int(1) } else { int(-1) };
                let product = &self.u_product[t[r - 1]][t[r]];
                let mut merged: Vec<usize> = Vec::with_capacity(q);
                merged.extend_from_slice(&t[..r - 1]);
                merged.push(0);
                merged.extend_from_slice(&t[r + 1..]);
                for (k, coef) in product.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    merged[r - 1] = k;
                    axpy(&mut v, &(&sign * coef), self.value(&c.values, &merged));
                }
            }
            let tail = self.compose_v(self.value(&c.values, &t[..q]), &kappa.column(t[q]));
            axpy(&mut v, &tail_sign, &tail);
            values.extend(v);
        }
        Cochain { degree: q + 1, values }
    }

    /// Ranks of `δ^q` and `H^q` for `q = 0..=qmax`; refuses when `G(κ) ≠ 0`.
    pub fn cohomology(&self, kappa: &Matrix, qmax: usize) -> Result<ComplexReport> {
        self.validate_kappa(kappa)?;
        if let Some((i, j)) = self.residual_witness(kappa) {
            return Err(Error::NonzeroResidual { i, j });
        }
        let terms: Vec<Subspace> = (0..=qmax + 1).map(|q| self.cochain_space(q as i64)).collect();
        analyze(&terms, qmax, |q, v| self.delta(kappa, &Cochain { degree: q, values: v.to_vec() }).values)
    }
}

pub fn cochain_space(u: &Carrier, v: &Carrier, q: i64) -> Result<Subspace> {
    Ok(CochainContext::new(u.clone(), v.clone())?.cochain_space(q))
}

pub fn cochain_tensor(ctx: &CochainContext, c: &Cochain, d: &Cochain) -> Cochain {
    ctx.tensor(c, d)
}

pub fn residual_g_kappa(ctx: &CochainContext, kappa: &Matrix) -> Cochain {
    ctx.residual(kappa)
}

pub fn hochschild_delta(ctx: &CochainContext, kappa: &Matrix, c: &Cochain) -> Cochain {
    ctx.delta(kappa, c)
}

pub fn hochschild_cohomology(u: &Carrier, v: &Carrier, kappa: Option<&Matrix>, qmax: usize) -> Result<ComplexReport> {
    let ctx = CochainContext::new(u.clone(), v.clone())?;
    let kappa = match kappa {
        Some(k) => k.clone(),
        None => ctx.identity_kappa()?,
    };
    ctx.cohomology(&kappa, qmax)
}

impl Cochain {
    pub fn zero(ctx: &CochainContext, degree: usize) -> Self {
        Cochain { degree, values: zero_vec(ctx.ambient_dim(degree)) }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Cochain { degree: self.degree, values: self.values.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Cochain) -> Self {
        assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(x, y)| x + y).collect() }
    }

    /// `(-1)^degree`
    pub fn parity_sign(&self) -> Scalar {
        if self.degree.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }
}
