//! Brute-force recomputation of the solution spaces, cochain and form spaces
//! and their differentials, used to cross-check the main constraint builders.
//!
//! Nothing here shares construction code with the primary path: solution
//! spaces come from evaluating the defining identities on unit unknowns,
//! cochains and forms are stored on all tuples (alternation and
//! multilinearity imposed as explicit equations in every slot), and
//! cohomology is read off by rank-nullity.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::derham::{derham_cohomology, DerKappa};
use crate::derivation::{derivation_algebra, module_derivations};
use crate::error::{Error, Result};
use crate::exactlin::{frac, int, kernel_basis, solve, sub_vec, unit_vec, zero_vec, Matrix, Scalar, Subspace};
use crate::hochschild::hochschild_cohomology;
use crate::module::ModuleOverAlgebra;
use crate::multiplier::{module_multipliers, multiplier_algebra};
use crate::operators::Carrier;

pub const DEFAULT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub statement: String,
    pub primary: usize,
    pub oracle: usize,
}

impl OracleRow {
    pub fn agrees(&self) -> bool {
        self.primary == self.oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub rows: Vec<OracleRow>,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(OracleRow::agrees)
    }

    /// `Err(Mismatch)` for the first disagreeing row.
    pub fn check(&self) -> Result<()> {
        match self.rows.iter().find(|r| !r.agrees()) {
            None => Ok(()),
            Some(r) => Err(Error::Mismatch { statement: r.statement.clone(), primary: r.primary, oracle: r.oracle }),
        }
    }
}

fn nullspace(unknowns: usize, residual: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Subspace {
    let columns: Vec<Vec<Scalar>> = (0..unknowns).map(|i| residual(&unit_vec(unknowns, i))).collect();
    let len = columns.first().map_or(0, Vec::len);
    kernel_basis(&Matrix::from_columns(len, &columns))
}

fn square(v: &[Scalar], n: usize) -> Matrix {
    Matrix::from_flat(n, n, v.to_vec()).expect("square block")
}

fn multiplier_residual(a: &Algebra, r: &Matrix) -> Vec<Scalar> {
    let mut out = Vec::new();
    for i in 0..a.dim() {
        let bi = a.basis_element(i);
        for j in 0..a.dim() {
            let bj = a.basis_element(j);
            out.extend(sub_vec(&r.apply(&a.multiply(&bi, &bj)), &a.multiply(&bi, &r.apply(&bj))));
        }
    }
    out
}

fn derivation_residual(a: &Algebra, x: &Matrix) -> Vec<Scalar> {
    let mut out = Vec::new();
    for i in 0..a.dim() {
        let bi = a.basis_element(i);
        for j in 0..a.dim() {
            let bj = a.basis_element(j);
            let lhs = x.apply(&a.multiply(&bi, &bj));
            let rhs = crate::exactlin::add_vec(&a.multiply(&x.apply(&bi), &bj), &a.multiply(&bi, &x.apply(&bj)));
            out.extend(sub_vec(&lhs, &rhs));
        }
    }
    out
}

fn oracle_multipliers(a: &Algebra) -> Subspace {
    let n = a.dim();
    nullspace(n * n, |v| multiplier_residual(a, &square(v, n)))
}

fn oracle_derivations(a: &Algebra) -> Subspace {
    let n = a.dim();
    nullspace(n * n, |v| derivation_residual(a, &square(v, n)))
}

fn oracle_module_ops(module: &ModuleOverAlgebra, leibniz: bool) -> Subspace {
    let (a, m) = (module.base(), module.dim());
    let n = a.dim();
    nullspace(m * m + n * n, |v| {
        let op = square(&v[..m * m], m);
        let alg = square(&v[m * m..], n);
        let mut out = Vec::new();
        for i in 0..n {
            let bi = a.basis_element(i);
            for j in 0..m {
                let mj = unit_vec(m, j);
                let lhs = op.apply(&module.act(&bi, &mj));
                let pushed = module.act(&alg.apply(&bi), &mj);
                let through = module.act(&bi, &op.apply(&mj));
                if leibniz {
                    out.extend(sub_vec(&lhs, &crate::exactlin::add_vec(&pushed, &through)));
                } else {
                    out.extend(sub_vec(&lhs, &pushed));
                    out.extend(sub_vec(&lhs, &through));
                }
            }
        }
        if leibniz {
            out.extend(derivation_residual(a, &alg));
        } else {
            out.extend(multiplier_residual(a, &alg));
        }
        out
    })
}

/// A basis of operators on a carrier, each stored as its list of blocks.
struct Family {
    shapes: Vec<usize>,
    basis: Vec<Vec<Matrix>>,
    acts: Vec<Vec<Matrix>>,
    columns: Matrix,
}

impl Family {
    fn new(space: &Subspace, carrier: &Carrier) -> Family {
        let base = carrier.base();
        let n = base.dim();
        let (shapes, acts): (Vec<usize>, Vec<Vec<Matrix>>) = match carrier {
            Carrier::Algebra(a) => (vec![n], (0..n).map(|j| vec![a.ad_map(&a.basis_element(j))]).collect()),
            Carrier::Module(m) => (vec![m.dim(), n], (0..n).map(|j| vec![m.action_of(&base.basis_element(j)), base.ad_map(&base.basis_element(j))]).collect()),
        };
        let basis: Vec<Vec<Matrix>> = space.basis().iter().map(|v| Self::unflatten(&shapes, v)).collect();
        let columns = Matrix::from_columns(space.ambient_dim(), space.basis());
        Family { shapes, basis, acts, columns }
    }

    fn unflatten(shapes: &[usize], v: &[Scalar]) -> Vec<Matrix> {
        let mut at = 0;
        shapes
            .iter()
            .map(|&s| {
                let block = square(&v[at..at + s * s], s);
                at += s * s;
                block
            })
            .collect()
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, blocks: &[Matrix]) -> Result<Vec<Scalar>> {
        let flat: Vec<Scalar> = blocks.iter().flat_map(|b| b.data().iter().cloned()).collect();
        solve(&self.columns, &flat).ok_or_else(|| Error::NotInSpace("oracle operator product left the family".into()))
    }

    fn table(&self, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Result<Vec<Vec<Vec<Scalar>>>> {
        self.basis.iter().map(|x| self.basis.iter().map(|y| self.coords(&x.iter().zip(y).map(|(p, q)| f(p, q)).collect::<Vec<_>>())).collect()).collect()
    }

    fn compose_table(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        self.table(|p, q| p * q)
    }

    fn bracket_table(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        self.table(|p, q| &(p * q) - &(q * p))
    }

    /// `act[j][k]`: coordinates of `b_j · η_k`.
    fn action_table(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        self.acts.iter().map(|act| self.basis.iter().map(|op| self.coords(&act.iter().zip(op).map(|(a, o)| a * o).collect::<Vec<_>>())).collect()).collect()
    }
}

/// Tuples of length `q` over `0..a`, lexicographic.
fn all_tuples(a: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..q {
        out = out.into_iter().flat_map(|t| (0..a).map(move |k| [t.clone(), vec![k]].concat())).collect();
    }
    out
}

fn tuple_index(a: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc * a + i)
}

type SparseRow = BTreeMap<usize, Scalar>;

/// Row echelon form over sparse rows; a row's pivot is its first column.
struct SparseEchelon {
    cols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    fn new(cols: usize) -> Self {
        SparseEchelon { cols, rows: BTreeMap::new() }
    }

    fn insert(&mut self, mut row: SparseRow) {
        row.retain(|_, x| !num_traits::Zero::is_zero(x));
        while let Some((&lead, x)) = row.iter().next() {
            let Some(pivot) = self.rows.get(&lead) else {
                self.rows.insert(lead, row);
                return;
            };
            let factor = x / &pivot[&lead];
            for (&c, y) in pivot {
                let entry = row.entry(c).or_insert_with(|| int(0));
                *entry -= &factor * y;
                if num_traits::Zero::is_zero(entry) {
                    row.remove(&c);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// One kernel vector per free column, by back substitution.
    fn kernel(&self) -> Subspace {
        let free = (0..self.cols).filter(|c| !self.rows.contains_key(c));
        let vectors = free.map(|f| {
            let mut x = zero_vec(self.cols);
            x[f] = int(1);
            for (&p, row) in self.rows.iter().rev() {
                let mut acc = int(0);
                for (&c, y) in row.range(p + 1..) {
                    acc += y * &x[c];
                }
                x[p] = -acc / &row[&p];
            }
            x
        });
        Subspace::from_rows(self.cols, vectors)
    }
}

/// Defining equations of maps `U^q -> V` stored on all tuples: multilinear
/// over the algebra in every slot, optionally alternating.
fn multilinear_equations(a: usize, b: usize, q: usize, arg_act: &[Vec<Vec<Scalar>>], val_act: &[Matrix], alternating: bool, mut emit: impl FnMut(SparseRow)) {
    for t in all_tuples(a, q) {
        let here = tuple_index(a, &t);
        if alternating {
            for i in 0..q.saturating_sub(1) {
                let mut s = t.clone();
                s.swap(i, i + 1);
                let there = tuple_index(a, &s);
                for l in 0..b {
                    let mut row = SparseRow::new();
                    *row.entry(here * b + l).or_insert_with(|| int(0)) += int(1);
                    *row.entry(there * b + l).or_insert_with(|| int(0)) += int(1);
                    emit(row);
                }
            }
        }
        for (j, act) in arg_act.iter().enumerate() {
            for slot in 0..q {
                for l in 0..b {
                    let mut row = SparseRow::new();
                    let mut moved = t.clone();
                    for (k, c) in act[t[slot]].iter().enumerate() {
                        moved[slot] = k;
                        *row.entry(tuple_index(a, &moved) * b + l).or_insert_with(|| int(0)) += c;
                    }
                    for lp in 0..b {
                        *row.entry(here * b + lp).or_insert_with(|| int(0)) -= &val_act[j][(l, lp)];
                    }
                    emit(row);
                }
            }
        }
    }
}

struct Multilinear<'f> {
    a: usize,
    b: usize,
    arg_act: &'f [Vec<Vec<Scalar>>],
    val_act: &'f [Matrix],
    alternating: bool,
}

impl Multilinear<'_> {
    fn space(&self, q: usize) -> Subspace {
        let mut ech = SparseEchelon::new(self.a.pow(q as u32) * self.b);
        multilinear_equations(self.a, self.b, q, self.arg_act, self.val_act, self.alternating, |row| ech.insert(row));
        ech.kernel()
    }

    fn equations(&self, q: usize) -> Vec<SparseRow> {
        let mut rows = Vec::new();
        multilinear_equations(self.a, self.b, q, self.arg_act, self.val_act, self.alternating, |row| rows.push(row));
        rows
    }
}

fn satisfies(equations: &[SparseRow], v: &[Scalar]) -> bool {
    equations.iter().all(|row| {
        let mut acc = int(0);
        for (c, x) in row {
            if !num_traits::Zero::is_zero(&v[*c]) {
                acc += x * &v[*c];
            }
        }
        num_traits::Zero::is_zero(&acc)
    })
}

fn combo(table_row: &[Vec<Scalar>], coeffs: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut out = zero_vec(len);
    for (c, v) in coeffs.iter().zip(table_row) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

struct Degrees {
    dims: Vec<usize>,
    ranks: Vec<usize>,
    h: Vec<usize>,
}

/// Dimensions, ranks and rank-nullity cohomology of `d`.
fn degrees(family: &Multilinear, qmax: usize, d: impl Fn(usize, &[Scalar]) -> Vec<Scalar>) -> Result<Degrees> {
    let spaces: Vec<Subspace> = (0..=qmax).map(|q| family.space(q)).collect();
    let mut ranks = Vec::new();
    for q in 0..=qmax {
        let mut ech = SparseEchelon::new(family.a.pow(q as u32 + 1) * family.b);
        let equations = family.equations(q + 1);
        for v in spaces[q].basis() {
            let img = d(q, v);
            if !satisfies(&equations, &img) {
                return Err(Error::NotInSpace(format!("oracle differential leaves degree {}", q + 1)));
            }
            ech.insert(img.into_iter().enumerate().collect());
        }
        ranks.push(ech.rank());
    }
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let h = (0..=qmax).map(|q| dims[q] - ranks[q] - if q == 0 { 0 } else { ranks[q - 1] }).collect();
    Ok(Degrees { dims, ranks, h })
}

fn hochschild_oracle(family: &Family, qmax: usize) -> Result<Degrees> {
    let a = family.dim();
    let compose = family.compose_table()?;
    let action = family.action_table()?;
    let val_act: Vec<Matrix> = action.iter().map(|per_k| Matrix::from_columns(a, per_k)).collect();
    let family = Multilinear { a, b: a, arg_act: &action, val_act: &val_act, alternating: false };
    let compose_vec = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_vec(a);
        for (i, xi) in x.iter().enumerate() {
            let row = combo(&compose[i], y, a);
            for (o, r) in out.iter_mut().zip(row) {
                *o += xi * r;
            }
        }
        out
    };
    degrees(&family, qmax, |q, c| {
        let value = |t: &[usize]| c[tuple_index(a, t) * a..(tuple_index(a, t) + 1) * a].to_vec();
        let mut out = Vec::new();
        for t in all_tuples(a, q + 1) {
            let mut v = compose_vec(&unit_vec(a, t[0]), &value(&t[1..]));
            for r in 1..=q {
                let sign = if r % 2 == 0 { int(1) } else { int(-1) };
                for (k, coef) in compose[t[r - 1]][t[r]].iter().enumerate() {
                    let mut merged = t[..r - 1].to_vec();
                    merged.push(k);
                    merged.extend_from_slice(&t[r + 1..]);
                    let w = value(&merged);
                    for (o, x) in v.iter_mut().zip(w) {
                        *o += &sign * coef * x;
                    }
                }
            }
            let tail = compose_vec(&value(&t[..q]), &unit_vec(a, t[q]));
            let sign = if (q + 1) % 2 == 0 { int(1) } else { int(-1) };
            for (o, x) in v.iter_mut().zip(tail) {
                *o += &sign * x;
            }
            out.extend(v);
        }
        out
    })
}

fn derham_oracle(family: &Family, qmax: usize) -> Result<Degrees> {
    let a = family.dim();
    let b = family.shapes[0];
    let bracket = family.bracket_table()?;
    let action = family.action_table()?;
    let val_act: Vec<Matrix> = family.acts.iter().map(|blocks| blocks[0].clone()).collect();
    let anchors: Vec<&Matrix> = family.basis.iter().map(|op| &op[0]).collect();
    let family = Multilinear { a, b, arg_act: &action, val_act: &val_act, alternating: true };
    let nonzero: Vec<Vec<Vec<(usize, Scalar)>>> = bracket
        .iter()
        .map(|row| row.iter().map(|v| v.iter().cloned().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect()).collect())
        .collect();
    degrees(&family, qmax, |q, w| {
        let value = |t: &[usize]| {
            let i = tuple_index(a, t);
            &w[i * b..(i + 1) * b]
        };
        let scale = frac(1, q as i64 + 1);
        let mut out = Vec::with_capacity(a.pow(q as u32 + 1) * b);
        let mut args = Vec::with_capacity(q + 1);
        for t in all_tuples(a, q + 1) {
            let mut v = zero_vec(b);
            for r in 0..=q {
                args.clear();
                args.extend(t.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, &x)| x));
                let rest = value(&args);
                if rest.iter().all(num_traits::Zero::is_zero) {
                    continue;
                }
                let pushed = anchors[t[r]].apply(rest);
                let sign = if r % 2 == 0 { int(1) } else { int(-1) };
                for (o, x) in v.iter_mut().zip(pushed) {
                    *o += &sign * x;
                }
            }
            for r in 0..=q {
                for s in r + 1..=q {
                    let sign = if (r + s) % 2 == 0 { int(1) } else { int(-1) };
                    for (m, coef) in &nonzero[t[r]][t[s]] {
                        args.clear();
                        args.push(*m);
                        args.extend(t.iter().enumerate().filter(|&(i, _)| i != r && i != s).map(|(_, &x)| x));
                        let factor = &sign * coef;
                        for (o, x) in v.iter_mut().zip(value(&args)) {
                            if !num_traits::Zero::is_zero(x) {
                                *o += &factor * x;
                            }
                        }
                    }
                }
            }
            out.extend(v.into_iter().map(|x| x * &scale));
        }
        out
    })
}

fn push_rows(rows: &mut Vec<OracleRow>, label: &str, what: &str, primary: &[(usize, usize, usize)], oracle: &Degrees) {
    for (q, &(dim, rank, h)) in primary.iter().enumerate() {
        rows.push(OracleRow { statement: format!("{label} dim {what}^{q}"), primary: dim, oracle: oracle.dims[q] });
        rows.push(OracleRow { statement: format!("{label} rank d^{q}"), primary: rank, oracle: oracle.ranks[q] });
        rows.push(OracleRow { statement: format!("{label} H^{q}"), primary: h, oracle: oracle.h[q] });
    }
}

/// Recomputes every dimension for the algebra (and the module, when given)
/// and pairs it with the primary result. Refuses when the summed solution
/// space dimensions exceed `cap`.
pub fn run_oracle(algebra: &Algebra, module: Option<&ModuleOverAlgebra>, qmax: usize, cap: usize) -> Result<OracleReport> {
    let mut carriers = vec![(Carrier::Algebra(algebra.clone()), oracle_multipliers(algebra), oracle_derivations(algebra))];
    if let Some(m) = module {
        carriers.push((Carrier::Module(m.clone()), oracle_module_ops(m, false), oracle_module_ops(m, true)));
    }
    let needed: usize = carriers.iter().map(|(_, mu, de)| mu.dim() + de.dim()).sum();
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut rows = Vec::new();
    for (carrier, mult, der) in &carriers {
        let name = carrier.name().to_string();
        let (pm, pd) = match carrier {
            Carrier::Algebra(a) => (multiplier_algebra(a), derivation_algebra(a)),
            Carrier::Module(m) => (module_multipliers(m), module_derivations(m)),
        };
        let (mlabel, dlabel) = match carrier {
            Carrier::Algebra(_) => ("multipliers", "derivations"),
            Carrier::Module(_) => ("module multipliers", "module derivations"),
        };
        rows.push(OracleRow { statement: format!("{mlabel}[{name}] dim"), primary: pm.dim(), oracle: mult.dim() });
        rows.push(OracleRow { statement: format!("{dlabel}[{name}] dim"), primary: pd.dim(), oracle: der.dim() });

        let hoch = hochschild_cohomology(carrier, carrier, None, qmax)?;
        let primary: Vec<_> = hoch.rows.iter().map(|r| (r.dim, r.rank, r.h)).collect();
        let oracle = hochschild_oracle(&Family::new(mult, carrier), qmax)?;
        push_rows(&mut rows, &format!("hochschild[{name}]"), "C", &primary, &oracle);

        let dr = derham_cohomology(carrier, carrier, &DerKappa::identity(carrier), qmax)?;
        let primary: Vec<_> = dr.rows.iter().map(|r| (r.dim, r.rank, r.h)).collect();
        let oracle = derham_oracle(&Family::new(der, carrier), qmax)?;
        push_rows(&mut rows, &format!("derham[{name}]"), "Omega", &primary, &oracle);
    }
    Ok(OracleReport { rows })
}
