//! Differential forms `Ω^q(U, V)` on the derivations of `U` with values in `V`,
//! with wedge, interior product, Lie derivative and the Cartan differential.
//!
//! A degree-`q` form is stored by its values on strictly increasing `q`-tuples
//! of `𝔇(U)` basis elements (lexicographic order), each value in coordinates
//! of `V`. Values on other tuples follow by alternation.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::complex::{analyze, ComplexReport};
use crate::derivation::{derivation_algebra, derivation_injection_free, ConnectionSection};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, frac, int, is_zero_vec, zero_vec, Echelon, Matrix, Scalar, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::operators::{Carrier, OperatorSpace, PairOperator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub degree: usize,
    pub values: Vec<Scalar>,
}

impl Form {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.values)
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.degree, other.degree);
        Form { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        Form { degree: self.degree, values: self.values.iter().map(|x| x * s).collect() }
    }

    pub fn sign(&self) -> Scalar {
        if self.degree.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }
}

/// `κ : 𝔇(U) → 𝔇(V)` as a matrix between the canonical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerKappa {
    pub matrix: Matrix,
}

fn factorial(k: usize) -> Scalar {
    (1..=k).fold(Scalar::one(), |acc, i| acc * int(i as i64))
}

fn combinations(a: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, a: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..a {
            if a - i < left {
                break;
            }
            cur.push(i);
            go(i + 1, a, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, a, q, &mut Vec::new(), &mut out);
    out
}

/// Sorts `t`, returning the sign of the sorting permutation, or `None` when an
/// index repeats.
fn sort_sign(t: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = t.to_vec();
    let mut negative = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((negative, v))
}

/// Forms over `U` with values in a carrier `V`, where `ξ ∈ 𝔇(U)` acts on
/// values through `anchors[ξ]`.
#[derive(Clone, Debug)]
pub struct FormContext {
    u: OperatorSpace,
    values: Carrier,
    bracket: Vec<Vec<Vec<Scalar>>>,
    u_action: Vec<Matrix>,
    anchors: Vec<Matrix>,
    tuples: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl FormContext {
    fn build(u: OperatorSpace, values: Carrier, anchors: Vec<Matrix>) -> Result<Self> {
        if u.carrier().base() != values.base() {
            return Err(Error::MixedBaseAlgebra);
        }
        let bracket = u.product_table()?;
        let u_action = u.action_matrices()?;
        let a = u.dim();
        let tuples: Vec<Vec<Vec<usize>>> = (0..=a).map(|q| combinations(a, q)).collect();
        let index = tuples.iter().map(|ts| ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect()).collect();
        Ok(FormContext { u, values, bracket, u_action, anchors, tuples, index })
    }

    /// Forms on `𝔇(U)` valued in `V`, with `ξ` acting through the value
    /// component of `κξ`.
    pub fn new(u: Carrier, v: Carrier, kappa: &DerKappa) -> Result<Self> {
        let du = OperatorSpace::derivations(u);
        let dv = OperatorSpace::derivations(v.clone());
        check_kappa(&du, &dv, kappa)?;
        let anchors = (0..du.dim()).map(|k| dv.element(&kappa.matrix.column(k)).value_op().clone()).collect();
        Self::build(du, v, anchors)
    }

    /// Algebra-valued forms on `𝔇(U)`, with `ξ` acting through the algebra
    /// component of `κξ`.
    pub fn scalar_companion(u: Carrier, v: Carrier, kappa: &DerKappa) -> Result<Self> {
        let du = OperatorSpace::derivations(u);
        let dv = OperatorSpace::derivations(v);
        check_kappa(&du, &dv, kappa)?;
        let base = Carrier::Algebra(du.carrier().base().clone());
        let anchors = (0..du.dim()).map(|k| dv.element(&kappa.matrix.column(k)).algebra_op().clone()).collect();
        Self::build(du, base, anchors)
    }

    pub fn u_space(&self) -> &OperatorSpace {
        &self.u
    }

    pub fn values_carrier(&self) -> &Carrier {
        &self.values
    }

    fn a(&self) -> usize {
        self.u.dim()
    }

    fn b(&self) -> usize {
        self.values.dim()
    }

    pub fn ambient_dim(&self, q: usize) -> usize {
        self.tuples.get(q).map_or(0, Vec::len) * self.b()
    }

    pub fn zero(&self, q: usize) -> Form {
        Form { degree: q, values: zero_vec(self.ambient_dim(q)) }
    }

    /// `ω(ξ_{t_1}, ..., ξ_{t_q})` accumulated as `acc += coef * ω(t)`.
    fn add_value(&self, acc: &mut [Scalar], coef: &Scalar, w: &Form, t: &[usize]) {
        if coef.is_zero() {
            return;
        }
        let Some((negative, sorted)) = sort_sign(t) else {
            return;
        };
        let i = self.index[w.degree][&sorted];
        let b = self.b();
        let c = if negative { -coef.clone() } else { coef.clone() };
        axpy(acc, &c, &w.values[i * b..(i + 1) * b]);
    }

    fn value_at(&self, w: &Form, t: &[usize]) -> Vec<Scalar> {
        let mut v = zero_vec(self.b());
        self.add_value(&mut v, &Scalar::one(), w, t);
        v
    }

    /// `Ω^q` inside all value arrays on increasing tuples.
    pub fn form_space(&self, q: i64) -> Subspace {
        if q < 0 || q as usize > self.a() {
            return Subspace::zero(0);
        }
        let q = q as usize;
        let b = self.b();
        let cols = self.ambient_dim(q);
        if q == 0 {
            return Subspace::full(cols);
        }
        let mut ech = Echelon::new(cols);
        // ω(f ξ_k, ξ_{s_1}, ...) = f ω(ξ_k, ξ_{s_1}, ...) for every k and increasing s
        for (j, p) in self.u_action.iter().enumerate() {
            let act = self.values.action_basis(j);
            for k in 0..self.a() {
                for rest in self.tuples_of(q - 1) {
                    let mut t = Vec::with_capacity(q);
                    t.push(k);
                    t.extend_from_slice(rest);
                    for l in 0..b {
                        let mut row = zero_vec(cols);
                        let mut moved = t.clone();
                        for kk in 0..self.a() {
                            if p[(kk, k)].is_zero() {
                                continue;
                            }
                            moved[0] = kk;
                            if let Some((negative, sorted)) = sort_sign(&moved) {
                                let idx = self.index[q][&sorted] * b + l;
                                if negative {
                                    row[idx] -= &p[(kk, k)];
                                } else {
                                    row[idx] += &p[(kk, k)];
                                }
                            }
                        }
                        if let Some((negative, sorted)) = sort_sign(&t) {
                            let ti = self.index[q][&sorted];
                            for lp in 0..b {
                                if !act[(l, lp)].is_zero() {
                                    if negative {
                                        row[ti * b + lp] += &act[(l, lp)];
                                    } else {
                                        row[ti * b + lp] -= &act[(l, lp)];
                                    }
                                }
                            }
                        }
                        if !is_zero_vec(&row) {
                            ech.insert(row);
                        }
                    }
                }
            }
        }
        ech.kernel()
    }

    pub fn contains(&self, w: &Form) -> bool {
        self.form_space(w.degree as i64).coordinates(&w.values).is_some()
    }

    pub fn basis_forms(&self, q: usize) -> Vec<Form> {
        self.form_space(q as i64).basis().iter().map(|v| Form { degree: q, values: v.clone() }).collect()
    }

    /// `(i_ξ ω)(ξ_1..ξ_{q-1}) = q ω(ξ, ξ_1..ξ_{q-1})`
    pub fn interior(&self, xi: &[Scalar], w: &Form) -> Form {
        if w.degree == 0 {
            return self.zero(0);
        }
        let q = w.degree;
        let factor = int(q as i64);
        let mut values = Vec::with_capacity(self.ambient_dim(q - 1));
        let mut t = vec![0; q];
        for rest in self.tuples_of(q - 1) {
            let mut v = zero_vec(self.b());
            t[1..].copy_from_slice(rest);
            for (k, x) in xi.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                t[0] = k;
                self.add_value(&mut v, &(x * &factor), w, &t);
            }
            values.extend(v);
        }
        Form { degree: q - 1, values }
    }

    fn anchor(&self, xi: &[Scalar]) -> Matrix {
        let b = self.b();
        let mut out = Matrix::zeros(b, b);
        for (x, m) in xi.iter().zip(&self.anchors) {
            if !x.is_zero() {
                out = &out + &m.scale(x);
            }
        }
        out
    }

    /// `[ξ, ξ_k]` in `𝔇(U)` coordinates.
    fn bracket_with(&self, xi: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = zero_vec(self.a());
        for (j, x) in xi.iter().enumerate() {
            if !x.is_zero() {
                axpy(&mut out, x, &self.bracket[j][k]);
            }
        }
        out
    }

    fn tuples_of(&self, q: usize) -> &[Vec<usize>] {
        self.tuples.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.a());
        for (k, yk) in y.iter().enumerate() {
            if !yk.is_zero() {
                axpy(&mut out, yk, &self.bracket_with(x, k));
            }
        }
        out
    }

    /// `(L_ξ ω)(t) = (κξ)(ω(t)) - Σ_r ω(.., [ξ, ξ_{t_r}], ..)`
    pub fn lie(&self, xi: &[Scalar], w: &Form) -> Form {
        let q = w.degree;
        let anchor = self.anchor(xi);
        let brackets: Vec<Vec<Scalar>> = (0..self.a()).map(|k| self.bracket_with(xi, k)).collect();
        let b = self.b();
        let mut values = Vec::with_capacity(self.ambient_dim(q));
        for (ti, t) in self.tuples_of(q).iter().enumerate() {
            let mut v = anchor.apply(&w.values[ti * b..(ti + 1) * b]);
            let mut moved = t.clone();
            for r in 0..q {
                for (m, c) in brackets[t[r]].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    moved[r] = m;
                    self.add_value(&mut v, &-c.clone(), w, &moved);
                }
                moved[r] = t[r];
            }
            values.extend(v);
        }
        Form { degree: q, values }
    }

    /// The Cartan formula with prefactor `1/(q+1)`.
    pub fn d(&self, w: &Form) -> Form {
        let q = w.degree;
        if q + 1 > self.a() {
            return self.zero(q + 1);
        }
        let scale = frac(1, q as i64 + 1);
        let b = self.b();
        let mut values = Vec::with_capacity(self.ambient_dim(q + 1));
        for t in self.tuples_of(q + 1) {
            let mut v = zero_vec(b);
            for r in 0..=q {
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, &x)| x).collect();
                let inner = self.value_at(w, &rest);
                let pushed = self.anchors[t[r]].apply(&inner);
                let sign = if r % 2 == 0 { int(1) } else { int(-1) };
                axpy(&mut v, &sign, &pushed);
            }
            for r in 0..=q {
                for s in (r + 1)..=q {
                    let sign = if (r + s) % 2 == 0 { int(1) } else { int(-1) };
                    let mut args: Vec<usize> = Vec::with_capacity(q);
                    args.push(0);
                    args.extend(t.iter().enumerate().filter(|&(i, _)| i != r && i != s).map(|(_, &x)| x));
                    for (m, c) in self.bracket[t[r]][t[s]].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        args[0] = m;
                        self.add_value(&mut v, &(&sign * c), w, &args);
                    }
                }
            }
            values.extend(v.iter().map(|x| x * &scale));
        }
        Form { degree: q + 1, values }
    }

    /// `(d^q)` for `q = 0..=qmax` with ranks and `H^q`.
    pub fn complex(&self, qmax: usize) -> Result<ComplexReport> {
        let terms: Vec<Subspace> = (0..=qmax + 1).map(|q| self.form_space(q as i64)).collect();
        analyze(&terms, qmax, |q, v| self.d(&Form { degree: q, values: v.to_vec() }).values)
    }
}

/// `φ ∧ ω` for an algebra-valued `φ` and a `V`-valued `ω`.
pub fn wedge(scalars: &FormContext, phi: &Form, forms: &FormContext, w: &Form) -> Form {
    let (p, q) = (phi.degree, w.degree);
    let deg = p + q;
    if deg > forms.a() {
        return forms.zero(deg);
    }
    let factor = &(factorial(p) * factorial(q)) / &factorial(deg);
    let b = forms.b();
    let mut values = Vec::with_capacity(forms.ambient_dim(deg));
    for t in forms.tuples_of(deg) {
        let mut v = zero_vec(b);
        for chosen in combinations(deg, p) {
            let rest: Vec<usize> = (0..deg).filter(|i| !chosen.contains(i)).collect();
            // shuffle sign: inversions between chosen and rest positions
            let inversions: usize = chosen.iter().map(|&c| rest.iter().filter(|&&r| r < c).count()).sum();
            let left: Vec<usize> = chosen.iter().map(|&i| t[i]).collect();
            let right: Vec<usize> = rest.iter().map(|&i| t[i]).collect();
            let f = scalars.value_at(phi, &left);
            if is_zero_vec(&f) {
                continue;
            }
            let g = forms.value_at(w, &right);
            let prod = forms.values.action_of(&f).apply(&g);
            let sign = if inversions.is_multiple_of(2) { int(1) } else { int(-1) };
            axpy(&mut v, &sign, &prod);
        }
        values.extend(v.iter().map(|x| x * &factor));
    }
    Form { degree: deg, values }
}

fn check_kappa(du: &OperatorSpace, dv: &OperatorSpace, kappa: &DerKappa) -> Result<()> {
    if du.carrier().base() != dv.carrier().base() {
        return Err(Error::MixedBaseAlgebra);
    }
    let k = &kappa.matrix;
    if k.rows() != dv.dim() || k.cols() != du.dim() {
        return Err(Error::Shape(format!("kappa must be {} x {}", dv.dim(), du.dim())));
    }
    for (p, q) in du.action_matrices()?.iter().zip(dv.action_matrices()?.iter()) {
        if (k * p) != (q * k) {
            return Err(Error::NotALinear("kappa is not algebra-linear".into()));
        }
    }
    Ok(())
}

impl DerKappa {
    pub fn identity(u: &Carrier) -> Self {
        DerKappa { matrix: Matrix::identity(OperatorSpace::derivations(u.clone()).dim()) }
    }

    fn from_sections(module: &ModuleOverAlgebra, pairs: Vec<PairOperator>) -> Result<Self> {
        let dv = OperatorSpace::derivations(Carrier::Module(module.clone()));
        let columns = pairs
            .iter()
            .map(|p| dv.space().coordinates(&p.to_coords()).ok_or_else(|| Error::NotInSpace("lift is not a module derivation".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerKappa { matrix: Matrix::from_columns(dv.dim(), &columns) })
    }

    /// Componentwise lift `𝔇(A) → 𝔇(M)` for a free module.
    pub fn lift(module: &ModuleOverAlgebra) -> Result<Self> {
        let a = module.base();
        let n = a.dim();
        let pairs = derivation_algebra(a)
            .basis()
            .iter()
            .map(|b| derivation_injection_free(module, &Matrix::from_flat(n, n, b.clone()).unwrap()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sections(module, pairs)
    }

    /// `κ X = (∇_X, X)` for a connection.
    pub fn from_connection(connection: &ConnectionSection) -> Result<Self> {
        let pairs = connection.basis_derivations().iter().map(|x| connection.pair(x)).collect::<Result<Vec<_>>>()?;
        Self::from_sections(connection.module(), pairs)
    }
}

/// `F(κ)(ξ', ξ'') = [κξ', κξ''] - κ[ξ', ξ'']` on basis pairs `i < j`, in
/// `𝔇(V)` coordinates.
pub fn curvature_f(u: &Carrier, v: &Carrier, kappa: &DerKappa) -> Result<Vec<((usize, usize), Vec<Scalar>)>> {
    let du = OperatorSpace::derivations(u.clone());
    let dv = OperatorSpace::derivations(v.clone());
    check_kappa(&du, &dv, kappa)?;
    let bu = du.product_table()?;
    let bv = dv.product_table()?;
    let k = &kappa.matrix;
    let mut out = Vec::new();
    for i in 0..du.dim() {
        for j in (i + 1)..du.dim() {
            let (ki, kj) = (k.column(i), k.column(j));
            let mut v = zero_vec(dv.dim());
            for (x, xv) in ki.iter().enumerate() {
                for (y, yv) in kj.iter().enumerate() {
                    if !xv.is_zero() && !yv.is_zero() {
                        axpy(&mut v, &(xv * yv), &bv[x][y]);
                    }
                }
            }
            axpy(&mut v, &int(-1), &k.apply(&bu[i][j]));
            out.push(((i, j), v));
        }
    }
    Ok(out)
}

pub fn curvature_witness(u: &Carrier, v: &Carrier, kappa: &DerKappa) -> Result<Option<(usize, usize)>> {
    Ok(curvature_f(u, v, kappa)?.into_iter().find(|(_, val)| !is_zero_vec(val)).map(|(ij, _)| ij))
}

/// Ranks and `H^q` of `(Ω(U, V), d_κ)`; refuses when `F(κ) ≠ 0`.
pub fn derham_cohomology(u: &Carrier, v: &Carrier, kappa: &DerKappa, qmax: usize) -> Result<ComplexReport> {
    if let Some((i, j)) = curvature_witness(u, v, kappa)? {
        return Err(Error::NonzeroCurvature { i, j });
    }
    FormContext::new(u.clone(), v.clone(), kappa)?.complex(qmax)
}

/// Per-degree result of checking `ω = i_E dω + d i_E ω` with `E = (id, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomotopyRow {
    pub q: usize,
    pub forms: usize,
    pub holds: bool,
}

pub fn euler_coords(module: &ModuleOverAlgebra) -> Result<Vec<Scalar>> {
    let n = module.base().dim();
    let e = PairOperator::new(Matrix::identity(module.dim()), Matrix::zeros(n, n));
    OperatorSpace::derivations(Carrier::Module(module.clone()))
        .space()
        .coordinates(&e.to_coords())
        .ok_or_else(|| Error::NotInSpace("(id, 0) is not a module derivation".into()))
}

pub fn homotopy_check(module: &ModuleOverAlgebra, qmax: usize) -> Result<Vec<HomotopyRow>> {
    let carrier = Carrier::Module(module.clone());
    let ctx = FormContext::new(carrier.clone(), carrier.clone(), &DerKappa::identity(&carrier))?;
    let e = euler_coords(module)?;
    Ok((0..=qmax)
        .map(|q| {
            let forms = ctx.basis_forms(q);
            let holds = forms.iter().all(|w| {
                let lhs = ctx.interior(&e, &ctx.d(w));
                let rhs = if q == 0 { ctx.zero(0) } else { ctx.d(&ctx.interior(&e, w)) };
                lhs.add(&rhs) == *w
            });
            HomotopyRow { q, forms: forms.len(), holds }
        })
        .collect())
}

pub fn form_space(u: &Carrier, v: &Carrier, q: i64) -> Result<Subspace> {
    if u.base() != v.base() {
        return Err(Error::MixedBaseAlgebra);
    }
    let du = OperatorSpace::derivations(u.clone());
    let anchors = vec![Matrix::zeros(v.dim(), v.dim()); du.dim()];
    Ok(FormContext::build(du, v.clone(), anchors)?.form_space(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn a2() -> Carrier {
        Carrier::Algebra(fixtures::a2())
    }

    fn id_ctx(c: &Carrier) -> FormContext {
        FormContext::new(c.clone(), c.clone(), &DerKappa::identity(c)).unwrap()
    }

    #[test]
    fn form_space_dims() {
        let u = a2();
        let dims: Vec<usize> = (0..3).map(|q| form_space(&u, &u, q).unwrap().dim()).collect();
        assert_eq!(dims, vec![2, 1, 0]);
        assert_eq!(form_space(&u, &u, -2).unwrap().dim(), 0);
        let m2 = Carrier::Module(fixtures::m2());
        assert_eq!(form_space(&m2, &m2, 0).unwrap().dim(), 2);
        assert_eq!(form_space(&a2(), &Carrier::Algebra(fixtures::a3()), 0).unwrap_err(), Error::MixedBaseAlgebra);
    }

    #[test]
    fn degree_zero_differential() {
        let ctx = id_ctx(&a2());
        let x = Form { degree: 0, values: vec![int(0), int(1)] };
        let e = Form { degree: 0, values: vec![int(1), int(0)] };
        // dx(X) = X x = x
        assert_eq!(ctx.d(&x).values, vec![int(0), int(1)]);
        assert!(ctx.d(&e).is_zero());
        assert_eq!(ctx.lie(&[int(1)], &x), x);
    }

    #[test]
    fn interior_factor() {
        let u = Carrier::Algebra(fixtures::a3());
        let ctx = id_ctx(&u);
        let w = Form { degree: 2, values: vec![int(1), int(0)] };
        // (i_{ξ_0} ω)(ξ_1) = 2 ω(ξ_0, ξ_1)
        assert_eq!(ctx.interior(&[int(1), int(0)], &w).values, vec![int(0), int(0), int(2), int(0)]);
        let ii = ctx.interior(&[int(1), int(0)], &ctx.interior(&[int(1), int(0)], &w));
        assert!(ii.is_zero());
    }

    #[test]
    fn wedge_of_one_forms() {
        let u = Carrier::Algebra(fixtures::a3());
        let ctx = id_ctx(&u);
        let phi = Form { degree: 1, values: vec![int(1), int(0), int(0), int(0)] };
        let psi = Form { degree: 1, values: vec![int(0), int(0), int(1), int(0)] };
        // ½(φ(ξ_0)ψ(ξ_1) - φ(ξ_1)ψ(ξ_0)) with φ(ξ_0) = u, ψ(ξ_1) = u
        assert_eq!(wedge(&ctx, &phi, &ctx, &psi).values, vec![int(0), frac(1, 2)]);
        assert!(wedge(&ctx, &phi, &ctx, &phi).is_zero());
    }

    #[test]
    fn cohomology_examples() {
        let u = a2();
        assert_eq!(derham_cohomology(&u, &u, &DerKappa::identity(&u), 3).unwrap().h(), vec![1, 0, 0, 0]);
        let a1 = Carrier::Algebra(fixtures::a1());
        assert_eq!(derham_cohomology(&a1, &a1, &DerKappa::identity(&a1), 2).unwrap().h(), vec![1, 0, 0]);
        for m in [fixtures::m2(), fixtures::ad3()] {
            let c = Carrier::Module(m);
            assert_eq!(derham_cohomology(&c, &c, &DerKappa::identity(&c), 3).unwrap().h(), vec![0, 0, 0, 0]);
        }
    }

    #[test]
    fn homotopy_identity() {
        for m in [fixtures::m2(), fixtures::ad3()] {
            assert!(homotopy_check(&m, 3).unwrap().iter().all(|r| r.holds));
        }
    }

    #[test]
    fn curvature_of_lifts_and_potentials() {
        let m2r2 = fixtures::m2r2();
        let lift = DerKappa::lift(&m2r2).unwrap();
        let u = Carrier::Algebra(m2r2.base().clone());
        assert_eq!(curvature_witness(&u, &Carrier::Module(m2r2), &lift).unwrap(), None);

        let b3 = fixtures::square_zero_plane();
        let module = ModuleOverAlgebra::adjoint(&b3);
        let base = derivation_algebra(&b3);
        let ad_x = b3.ad_map(&[int(0), int(1), int(0)]);
        let potential: Vec<Matrix> = base.basis().iter().map(|b| ad_x.scale(&Matrix::from_flat(3, 3, b.clone()).unwrap()[(1, 1)])).collect();
        let conn = crate::derivation::connection_from_potential(&module, &potential).unwrap();
        let kappa = DerKappa::from_connection(&conn).unwrap();
        let (u, v) = (Carrier::Algebra(b3), Carrier::Module(module));
        assert!(curvature_witness(&u, &v, &kappa).unwrap().is_some());
        assert!(matches!(derham_cohomology(&u, &v, &kappa, 1), Err(Error::NonzeroCurvature { .. })));
    }
}
