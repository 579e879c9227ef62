//! The invariant suite behind `modan check`.
//!
//! Every structural identity for multipliers, derivations, gauge transforms
//! and the two complexes is evaluated on basis elements and on seeded random
//! elements. Each entry carries a dotted tag; the report is sorted by tag.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::derham::{curvature_witness, homotopy_check, wedge, DerKappa, Form, FormContext};
use crate::derivation::{
    connection_from_potential, derivation_algebra, derivation_injection_free, fiber_big_pi, module_derivations, split_adjoint_derivation, ConnectionSection,
};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, image_basis, int, kernel_basis, solve, unit_vec, Matrix, Scalar, Subspace};
use crate::gauge::{random_automorphism, ModuleAutomorphism};
use crate::hochschild::{Cochain, CochainContext};
use crate::module::ModuleOverAlgebra;
use crate::multiplier::{
    adjoint_embedding, fiber_pi, module_multipliers, multiplier_algebra, multiplier_injection_free, split_adjoint_multiplier, unital_iso_e_star, Fiber,
    MultiplierSection,
};
use crate::operators::{Carrier, PairOperator};
use crate::sampling::{random_coords, random_element, sampler, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub tag: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub qmax: usize,
    pub seed: u64,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn entry(&self, tag: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.tag == tag)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Verdict::Fail(format!($($msg)+)));
        }
    };
}

macro_rules! need_module {
    ($c:expr) => {
        match $c.module {
            Some(m) => m,
            None => return Ok(Verdict::Skip("no module loaded".into())),
        }
    };
}

macro_rules! need_degrees {
    ($c:expr) => {
        if $c.qmax == 0 {
            return Ok(Verdict::Skip("qmax = 0".into()));
        }
    };
}

struct Ctx<'a> {
    algebra: &'a Algebra,
    module: Option<&'a ModuleOverAlgebra>,
    qmax: usize,
    seed: u64,
}

const SAMPLES: usize = 4;

impl Ctx<'_> {
    /// A generator that depends only on the seed and the tag.
    fn rng(&self, tag: &str) -> Sampler {
        let h = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        sampler(self.seed ^ h)
    }

    fn carriers(&self) -> Vec<Carrier> {
        let mut out = vec![Carrier::Algebra(self.algebra.clone())];
        if let Some(m) = self.module {
            out.push(Carrier::Module(m.clone()));
        }
        out
    }
}

fn show(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
}

fn square(v: &[Scalar], n: usize) -> Matrix {
    Matrix::from_flat(n, n, v.to_vec()).expect("square block")
}

fn matrices(space: &Subspace, n: usize) -> Vec<Matrix> {
    space.basis().iter().map(|b| square(b, n)).collect()
}

fn pair_of(v: &[Scalar], m: usize, n: usize) -> PairOperator {
    PairOperator::new(square(&v[..m * m], m), square(&v[m * m..], n))
}

fn pairs(space: &Subspace, m: usize, n: usize) -> Vec<PairOperator> {
    space.basis().iter().map(|b| pair_of(b, m, n)).collect()
}

fn in_space(space: &Subspace, v: &[Scalar]) -> bool {
    space.coordinates(v).is_some()
}

fn has_pair(space: &Subspace, p: &PairOperator) -> bool {
    in_space(space, &p.to_coords())
}

/// Every operator maps `sub` into itself.
fn stable(sub: &Subspace, ops: &[&Matrix]) -> bool {
    ops.iter().all(|op| sub.basis().iter().all(|v| in_space(sub, &op.apply(v))))
}

fn algebra_basis(a: &Algebra) -> Vec<Vec<Scalar>> {
    (0..a.dim()).map(|i| a.basis_element(i)).collect()
}

/// `f . (op_M, op_A) = (f op_M, f op_A)`
fn act_pair(m: &ModuleOverAlgebra, f: &[Scalar], p: &PairOperator) -> PairOperator {
    PairOperator::new(&m.action_of(f) * &p.module_op, &m.base().ad_map(f) * &p.algebra_op)
}

/// `(ρ, 0)` in pair coordinates.
fn padded(n: usize, rho: &[Scalar]) -> Vec<Scalar> {
    let mut v = rho.to_vec();
    v.resize(rho.len() + n * n, int(0));
    v
}

/// Elements of `space` with vanishing algebra part.
fn vertical(space: &Subspace, m: usize, n: usize) -> Result<Subspace> {
    let zeros = Subspace::from_rows(m * m + n * n, (0..m * m).map(|i| unit_vec(m * m + n * n, i)));
    space.intersect(&zeros)
}

fn projection(space: &Subspace, m: usize, n: usize) -> Subspace {
    Subspace::from_rows(n * n, space.basis().iter().map(|b| b[m * m..].to_vec()))
}

// algebra

fn ad_morphism(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let mut rng = c.rng("algebra.ad_morphism");
    let mut samples: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    for f in algebra_basis(a) {
        for g in algebra_basis(a) {
            samples.push((f.clone(), g));
        }
    }
    for _ in 0..SAMPLES {
        samples.push((random_coords(&mut rng, a.dim()), random_coords(&mut rng, a.dim())));
    }
    for (f, g) in &samples {
        ensure!(a.ad_map(&a.multiply(f, g)) == &a.ad_map(f) * &a.ad_map(g), "ad(f g) != ad f ad g at f = {}, g = {}", show(f), show(g));
        ensure!(multiplier_algebra(a).contains(a.ad_map(f).data())?, "ad f is not a multiplier at f = {}", show(f));
    }
    Ok(Verdict::Pass(format!("{} pairs", samples.len())))
}

fn ad_kernel(c: &Ctx) -> Result<Verdict> {
    let (k, ann) = (c.algebra.ad_kernel(), c.algebra.annihilator());
    ensure!(k == ann, "Ker ad has dim {} but ann has dim {}", k.dim(), ann.dim());
    Ok(Verdict::Pass(format!("dim {}", k.dim())))
}

fn unit_characterization(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let n = a.dim();
    let ads: Vec<Vec<Scalar>> = (0..n).map(|i| a.ad_basis(i).data().to_vec()).collect();
    let solvable = solve(&Matrix::from_columns(n * n, &ads), Matrix::identity(n).data()).is_some();
    match a.find_unit() {
        Some(e) => {
            ensure!(solvable, "a unit was found but ad_e = id has no solution");
            ensure!(a.ad_map(&e).is_identity(), "ad_e != id for e = {}", show(&e));
            ensure!(a.annihilator().dim() == 0, "unital algebra with nonzero annihilator");
            Ok(Verdict::Pass(format!("unit {}", show(&e))))
        }
        None => {
            ensure!(!solvable, "ad_e = id is solvable but no unit was found");
            Ok(Verdict::Pass("no unit".into()))
        }
    }
}

fn random_products(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let mut rng = c.rng("algebra.random_products");
    for _ in 0..SAMPLES {
        let (f, g) = (random_coords(&mut rng, a.dim()), random_coords(&mut rng, a.dim()));
        ensure!(a.multiply(&f, &g) == a.ad_map(&f).apply(&g), "f g != ad_f g at f = {}, g = {}", show(&f), show(&g));
        ensure!(a.multiply(&f, &g) == a.multiply(&g, &f), "f g != g f at f = {}, g = {}", show(&f), show(&g));
    }
    Ok(Verdict::Pass(format!("{SAMPLES} samples")))
}

// module

fn module_compatibility(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let a = m.base();
    let mut rng = c.rng("module.random_compatibility");
    for _ in 0..SAMPLES {
        let (f, g, v) = (random_coords(&mut rng, a.dim()), random_coords(&mut rng, a.dim()), random_coords(&mut rng, m.dim()));
        ensure!(m.act(&f, &m.act(&g, &v)) == m.act(&a.multiply(&f, &g), &v), "f(gM) != (fg)M at f = {}, g = {}, M = {}", show(&f), show(&g), show(&v));
    }
    Ok(Verdict::Pass(format!("{SAMPLES} samples")))
}

fn module_unital_annihilators(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let Some(e) = m.base().find_unit() else {
        return Ok(Verdict::Skip("base algebra has no unit".into()));
    };
    if !m.action_of(&e).is_identity() {
        return Ok(Verdict::Skip("unit does not act as the identity".into()));
    }
    ensure!(m.ann_of_algebra_in_module().dim() == 0, "ann_M A is nonzero for a unital action");
    ensure!(m.ann_of_module_in_algebra().is_subspace_of(&m.base().annihilator())?, "ann_A M is not inside ann A");
    Ok(Verdict::Pass("ann_M A = 0, ann_A M in ann A".into()))
}

// multipliers of the algebra

fn multiplier_subalgebra(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let space = multiplier_algebra(a);
    let basis = matrices(&space, a.dim());
    for (i, r1) in basis.iter().enumerate() {
        for (j, r2) in basis.iter().enumerate() {
            ensure!(in_space(&space, (r1 * r2).data()), "R{i} R{j} is not a multiplier");
        }
        ensure!(in_space(&space, Matrix::identity(a.dim()).data()), "identity is not a multiplier");
    }
    Ok(Verdict::Pass(format!("dim {}", space.dim())))
}

fn multiplier_ideals(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let acts: Vec<&Matrix> = (0..a.dim()).map(|i| a.ad_basis(i)).collect();
    for (i, r) in matrices(&multiplier_algebra(a), a.dim()).iter().enumerate() {
        ensure!(stable(&kernel_basis(r), &acts), "Ker R{i} is not an ideal");
        ensure!(stable(&image_basis(r), &acts), "Im R{i} is not an ideal");
    }
    Ok(Verdict::Pass("kernels and images are ideals".into()))
}

fn multiplier_annihilator(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let ann = a.annihilator();
    for (i, r) in matrices(&multiplier_algebra(a), a.dim()).iter().enumerate() {
        ensure!(stable(&ann, &[r]), "R{i} moves ann A");
    }
    Ok(Verdict::Pass(format!("ann A of dim {}", ann.dim())))
}

fn multiplier_commutators(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let ann = a.annihilator();
    let basis = matrices(&multiplier_algebra(a), a.dim());
    for (i, r1) in basis.iter().enumerate() {
        for (j, r2) in basis.iter().enumerate() {
            let comm = r1.commutator(r2);
            ensure!(image_basis(&comm).is_subspace_of(&ann)?, "[R{i}, R{j}] does not map into ann A");
        }
    }
    let note = if ann.dim() == 0 { "all multipliers commute" } else { "commutators land in ann A" };
    Ok(Verdict::Pass(note.into()))
}

fn unital_isomorphism(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let iso = match unital_iso_e_star(a) {
        Ok(iso) => iso,
        Err(Error::NoUnit) => return Ok(Verdict::Skip("algebra has no unit".into())),
        Err(e) => return Err(e),
    };
    let space = multiplier_algebra(a);
    ensure!(space.dim() == a.dim(), "dim M(A) = {} but dim A = {}", space.dim(), a.dim());
    let basis = matrices(&space, a.dim());
    for (i, r) in basis.iter().enumerate() {
        ensure!(&iso.inverse(&iso.apply(r)) == r, "e* is not injective on R{i}");
        for (j, r2) in basis.iter().enumerate() {
            ensure!(iso.apply(&(r * r2)) == a.multiply(&iso.apply(r), &iso.apply(r2)), "e*(R{i} R{j}) != e*R{i} e*R{j}");
        }
    }
    for f in algebra_basis(a) {
        ensure!(iso.apply(&iso.inverse(&f)) == f, "e* is not surjective onto {}", show(&f));
    }
    Ok(Verdict::Pass(format!("bijective and multiplicative, dim {}", a.dim())))
}

fn adjoint_module_kernel(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let emb = adjoint_embedding(m);
    let total = module_multipliers(m);
    for f in algebra_basis(m.base()) {
        ensure!(has_pair(&total, &emb.apply(&f)), "ad of {} is not a module multiplier", show(&f));
    }
    let (k, ann) = (emb.kernel(), m.ann_of_module_in_algebra());
    ensure!(k == ann, "Ker ad has dim {} but ann_A M has dim {}", k.dim(), ann.dim());
    Ok(Verdict::Pass(format!("dim {}", k.dim())))
}

// module multipliers

fn mm_subalgebra(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let n = m.base().dim();
    let space = module_multipliers(m);
    let basis = pairs(&space, m.dim(), n);
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            ensure!(has_pair(&space, &p.compose(q)), "composition of basis pairs {i}, {j} leaves M(M)");
        }
    }
    Ok(Verdict::Pass(format!("dim {}", space.dim())))
}

fn mm_submodules(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let acts: Vec<&Matrix> = (0..m.base().dim()).map(|i| m.action_basis(i)).collect();
    for (i, p) in pairs(&module_multipliers(m), m.dim(), m.base().dim()).iter().enumerate() {
        ensure!(stable(&kernel_basis(&p.module_op), &acts), "kernel of pair {i} is not a submodule");
        ensure!(stable(&image_basis(&p.module_op), &acts), "image of pair {i} is not a submodule");
    }
    Ok(Verdict::Pass("kernels and images are submodules".into()))
}

fn mm_annihilator(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let ann = m.ann_of_algebra_in_module();
    for (i, p) in pairs(&module_multipliers(m), m.dim(), m.base().dim()).iter().enumerate() {
        ensure!(stable(&ann, &[&p.module_op]), "pair {i} moves ann_M A");
    }
    Ok(Verdict::Pass(format!("ann_M A of dim {}", ann.dim())))
}

fn mm_commutators(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let basis = pairs(&module_multipliers(m), m.dim(), m.base().dim());
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            let comm = p.module_op.commutator(&q.module_op);
            for f in algebra_basis(m.base()) {
                for k in 0..m.dim() {
                    let v = m.act(&f, &unit_vec(m.dim(), k));
                    ensure!(crate::exactlin::is_zero_vec(&comm.apply(&v)), "commutator of pairs {i}, {j} is nonzero on A.M");
                }
            }
        }
    }
    Ok(Verdict::Pass("commutators vanish on A.M".into()))
}

fn mm_bundle(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let (md, n) = (m.dim(), m.base().dim());
    let total = module_multipliers(m);
    let hom = m.hom_into_annihilator();
    for rho in hom.basis() {
        ensure!(in_space(&total, &padded(n, rho)), "(rho, 0) is not a module multiplier for rho in Hom_A(M; ann)");
    }
    let vert = vertical(&total, md, n)?;
    for v in vert.basis() {
        ensure!(in_space(&hom, &v[..md * md]), "vertical module multiplier outside Hom_A(M; ann)");
    }
    let image = projection(&total, md, n);
    for r in matrices(&image, n) {
        match fiber_pi(m, &r)? {
            Fiber::Empty => return Ok(Verdict::Fail("empty fiber over a point of Im pi".into())),
            Fiber::Affine { base, directions } => {
                ensure!(directions == hom, "fiber directions have dim {} but Hom_A(M; ann) has dim {}", directions.dim(), hom.dim());
                ensure!(base.algebra_op == r && has_pair(&total, &base), "fiber base point is not over R");
                for d in directions.basis() {
                    let moved = PairOperator::new(&base.module_op + &square(d, md), r.clone());
                    ensure!(has_pair(&total, &moved), "base point plus a direction leaves M(M)");
                }
            }
        }
    }
    Ok(Verdict::Pass(format!("Im pi dim {}, fibers of dim {}", image.dim(), hom.dim())))
}

fn mm_free_lift(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    if m.free_rank().is_none() {
        return Ok(Verdict::Skip("module is not free".into()));
    }
    if !m.base().is_unital() {
        return Ok(Verdict::Skip("free lifts are checked over unital bases only".into()));
    }
    let total = module_multipliers(m);
    let basis = matrices(&multiplier_algebra(m.base()), m.base().dim());
    for (i, r1) in basis.iter().enumerate() {
        let p1 = multiplier_injection_free(m, r1)?;
        ensure!(has_pair(&total, &p1), "lift of R{i} is not a module multiplier");
        for (j, r2) in basis.iter().enumerate() {
            let p2 = multiplier_injection_free(m, r2)?;
            ensure!(multiplier_injection_free(m, &(r1 * r2))? == p1.compose(&p2), "lift does not preserve R{i} R{j}");
        }
    }
    let section = MultiplierSection::free_lift(m)?;
    ensure!(section.is_a_linear()?, "free lift section is not algebra-linear");
    ensure!(section.is_multiplicative()?, "free lift section has a nonzero residual");
    Ok(Verdict::Pass(format!("rank {}", m.free_rank().unwrap_or(0))))
}

fn mm_adjoint_split(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    if !m.is_adjoint() {
        return Ok(Verdict::Skip("module is not adjoint".into()));
    }
    let n = m.base().dim();
    let total = module_multipliers(m);
    let hom = m.hom_into_annihilator();
    let base_dim = multiplier_algebra(m.base()).dim();
    ensure!(total.dim() == base_dim + hom.dim(), "dim M(M) = {} but {} + {}", total.dim(), base_dim, hom.dim());
    for (i, p) in pairs(&total, n, n).iter().enumerate() {
        let (x, y) = split_adjoint_multiplier(m, p)?;
        ensure!(has_pair(&total, &x) && has_pair(&total, &y), "split parts of pair {i} leave M(M)");
        ensure!(y.algebra_op.is_zero() && in_space(&hom, y.module_op.data()), "remainder of pair {i} is not in Hom_A(M; ann)");
        ensure!(x.add(&y) == *p, "split parts of pair {i} do not add up");
    }
    Ok(Verdict::Pass(format!("{} = {} + {}", total.dim(), base_dim, hom.dim())))
}

fn mm_residual(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let section = match MultiplierSection::from_fibers(m) {
        Ok(s) => s,
        Err(Error::NotInSpace(_)) => return Ok(Verdict::Skip("pi is not surjective".into())),
        Err(e) => return Err(e),
    };
    let hom = m.hom_into_annihilator();
    let mut sections = vec![section.clone()];
    let mut rng = c.rng("module_multiplier.residual");
    if hom.dim() > 0 && !section.values().is_empty() {
        let rho = square(&random_element(&mut rng, &hom), m.dim());
        sections.push(section.shifted(0, &rho)?);
    }
    let basis = matrices(&multiplier_algebra(m.base()), m.base().dim());
    for s in &sections {
        for r1 in &basis {
            for r2 in &basis {
                let g = s.residual_g(r1, r2)?;
                ensure!(in_space(&hom, g.data()), "residual G is not in Hom_A(M; ann)");
            }
        }
    }
    Ok(Verdict::Pass(format!("{} sections", sections.len())))
}

// derivations of the algebra

fn derivation_lie(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let space = derivation_algebra(a);
    let basis = matrices(&space, a.dim());
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            ensure!(in_space(&space, x.commutator(y).data()), "[X{i}, X{j}] is not a derivation");
            for z in &basis {
                let jac = &(&x.commutator(&y.commutator(z)) + &y.commutator(&z.commutator(x))) + &z.commutator(&x.commutator(y));
                ensure!(jac.is_zero(), "Jacobi fails");
            }
        }
    }
    Ok(Verdict::Pass(format!("dim {}", space.dim())))
}

fn derivation_kernels(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    for (i, x) in matrices(&derivation_algebra(a), a.dim()).iter().enumerate() {
        let ker = kernel_basis(x);
        let img = image_basis(x);
        for u in ker.basis() {
            for v in ker.basis() {
                ensure!(in_space(&ker, &a.multiply(u, v)), "Ker X{i} is not a subalgebra");
            }
            for w in img.basis() {
                ensure!(in_space(&img, &a.multiply(u, w)), "Im X{i} is not a Ker X{i}-module");
            }
        }
    }
    Ok(Verdict::Pass("kernels are subalgebras, images are modules".into()))
}

fn derivation_annihilator(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let ann = a.annihilator();
    for (i, x) in matrices(&derivation_algebra(a), a.dim()).iter().enumerate() {
        ensure!(stable(&ann, &[x]), "X{i} moves ann A");
    }
    Ok(Verdict::Pass(format!("ann A of dim {}", ann.dim())))
}

fn derivation_matching(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let n = a.dim();
    let mult = multiplier_algebra(a);
    let ders = matrices(&derivation_algebra(a), n);
    for (i, x) in ders.iter().enumerate() {
        for (k, r) in matrices(&mult, n).iter().enumerate() {
            ensure!(in_space(&mult, x.commutator(r).data()), "[X{i}, R{k}] is not a multiplier");
            ensure!(in_space(&derivation_algebra(a), (r * x).data()), "R{k} X{i} is not a derivation");
            for y in &ders {
                let lhs = x.commutator(&(r * y));
                let rhs = &(&x.commutator(r) * y) + &(r * &x.commutator(y));
                ensure!(lhs == rhs, "matching condition fails for X{i}, R{k}");
            }
        }
    }
    Ok(Verdict::Pass("[X, R Y] = [X, R] Y + R [X, Y]".into()))
}

fn derivation_module_structure(c: &Ctx) -> Result<Verdict> {
    let a = c.algebra;
    let space = derivation_algebra(a);
    for f in algebra_basis(a) {
        for x in matrices(&space, a.dim()) {
            ensure!(in_space(&space, (&a.ad_map(&f) * &x).data()), "f X leaves D(A) for f = {}", show(&f));
        }
    }
    if let Some(m) = c.module {
        let total = module_derivations(m);
        for f in algebra_basis(a) {
            for p in pairs(&total, m.dim(), a.dim()) {
                ensure!(has_pair(&total, &act_pair(m, &f, &p)), "f (nabla, X) leaves D(M) for f = {}", show(&f));
            }
        }
    }
    Ok(Verdict::Pass("closed under the algebra action".into()))
}

// module derivations

fn md_lie(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let space = module_derivations(m);
    let basis = pairs(&space, m.dim(), m.base().dim());
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            ensure!(has_pair(&space, &x.bracket(y)), "bracket of pairs {i}, {j} leaves D(M)");
            for z in &basis {
                let jac = x.bracket(&y.bracket(z)).add(&y.bracket(&z.bracket(x))).add(&z.bracket(&x.bracket(y)));
                ensure!(jac.is_zero(), "Jacobi fails");
            }
        }
    }
    Ok(Verdict::Pass(format!("dim {}", space.dim())))
}

fn md_mixed(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let n = m.base().dim();
    let ders_space = module_derivations(m);
    let mult_space = module_multipliers(m);
    let ders = pairs(&ders_space, m.dim(), n);
    for (k, r) in pairs(&mult_space, m.dim(), n).iter().enumerate() {
        for (i, x) in ders.iter().enumerate() {
            ensure!(has_pair(&ders_space, &r.compose(x)), "R{k} X{i} leaves D(M)");
            ensure!(has_pair(&mult_space, &x.bracket(r)), "[X{i}, R{k}] leaves M(M)");
            for y in &ders {
                let lhs = x.bracket(&r.compose(y));
                let rhs = x.bracket(r).compose(y).add(&r.compose(&x.bracket(y)));
                ensure!(lhs == rhs, "componentwise matching fails for X{i}, R{k}");
            }
        }
    }
    Ok(Verdict::Pass("products and brackets land in the right spaces".into()))
}

fn md_kernels(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let a = m.base();
    let ann_m = m.ann_of_algebra_in_module();
    let ann_a = m.ann_of_module_in_algebra();
    for (i, p) in pairs(&module_derivations(m), m.dim(), a.dim()).iter().enumerate() {
        let ker_x = kernel_basis(&p.algebra_op);
        let acts: Vec<Matrix> = ker_x.basis().iter().map(|f| m.action_of(f)).collect();
        let acts: Vec<&Matrix> = acts.iter().collect();
        ensure!(stable(&kernel_basis(&p.module_op), &acts), "Ker nabla of pair {i} is not stable under Ker X");
        ensure!(stable(&image_basis(&p.module_op), &acts), "Im nabla of pair {i} is not stable under Ker X");
        ensure!(stable(&ann_m, &[&p.module_op]), "nabla of pair {i} moves ann_M A");
        ensure!(stable(&ann_a, &[&p.algebra_op]), "X of pair {i} moves ann_A M");
    }
    Ok(Verdict::Pass("kernels, images and annihilators are preserved".into()))
}

fn md_endomorphism_ideal(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let (md, n) = (m.dim(), m.base().dim());
    let total = module_derivations(m);
    let end = m.endomorphisms();
    let lifted = Subspace::from_rows(md * md + n * n, end.basis().iter().map(|rho| padded(n, rho)));
    let vert = vertical(&total, md, n)?;
    ensure!(vert == lifted, "Ker Pi has dim {} but End_A(M) has dim {}", vert.dim(), end.dim());
    for (i, x) in pairs(&total, md, n).iter().enumerate() {
        for rho in end.basis() {
            let br = x.bracket(&PairOperator::new(square(rho, md), Matrix::zeros(n, n)));
            ensure!(has_pair(&lifted, &br), "[X{i}, (rho, 0)] leaves the image of End_A(M)");
        }
    }
    Ok(Verdict::Pass(format!("Ker Pi = End_A(M), dim {}", end.dim())))
}

fn md_bundle(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let (md, n) = (m.dim(), m.base().dim());
    let total = module_derivations(m);
    let end = m.endomorphisms();
    for rho in end.basis() {
        ensure!(in_space(&total, &padded(n, rho)), "(rho, 0) is not a module derivation for rho in End_A(M)");
    }
    for v in vertical(&total, md, n)?.basis() {
        ensure!(in_space(&end, &v[..md * md]), "difference of fiber points is not algebra-linear");
    }
    let image = projection(&total, md, n);
    for x in matrices(&image, n) {
        match fiber_big_pi(m, &x)? {
            Fiber::Empty => return Ok(Verdict::Fail("empty fiber over a point of Im Pi".into())),
            Fiber::Affine { base, directions } => {
                ensure!(directions == end, "fiber directions have dim {} but End_A(M) has dim {}", directions.dim(), end.dim());
                ensure!(base.algebra_op == x && has_pair(&total, &base), "fiber base point is not over X");
                for d in directions.basis() {
                    let moved = PairOperator::new(&base.module_op + &square(d, md), x.clone());
                    ensure!(has_pair(&total, &moved), "base point plus a direction leaves D(M)");
                }
            }
        }
    }
    Ok(Verdict::Pass(format!("Im Pi dim {}, fibers of dim {}", image.dim(), end.dim())))
}

fn md_free_lift(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    if m.free_rank().is_none() {
        return Ok(Verdict::Skip("module is not free".into()));
    }
    if !m.base().is_unital() {
        return Ok(Verdict::Skip("free lifts are checked over unital bases only".into()));
    }
    let total = module_derivations(m);
    let basis = matrices(&derivation_algebra(m.base()), m.base().dim());
    for (i, x) in basis.iter().enumerate() {
        let px = derivation_injection_free(m, x)?;
        ensure!(has_pair(&total, &px), "lift of X{i} is not a module derivation");
        for (j, y) in basis.iter().enumerate() {
            let py = derivation_injection_free(m, y)?;
            ensure!(derivation_injection_free(m, &x.commutator(y))? == px.bracket(&py), "lift does not preserve [X{i}, X{j}]");
        }
    }
    let flags = ConnectionSection::free_lift(m)?.flags()?;
    ensure!(flags.a_lie, "free lift connection is not an algebra-linear Lie section: {flags:?}");
    Ok(Verdict::Pass(format!("rank {}", m.free_rank().unwrap_or(0))))
}

fn md_adjoint_split(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    if !m.is_adjoint() {
        return Ok(Verdict::Skip("module is not adjoint".into()));
    }
    let n = m.base().dim();
    let total = module_derivations(m);
    let end = m.endomorphisms();
    let base_dim = derivation_algebra(m.base()).dim();
    ensure!(total.dim() == base_dim + end.dim(), "dim D(M) = {} but {} + {}", total.dim(), base_dim, end.dim());
    for (i, p) in pairs(&total, n, n).iter().enumerate() {
        let (x, y) = split_adjoint_derivation(m, p)?;
        ensure!(has_pair(&total, &x) && has_pair(&total, &y), "split parts of pair {i} leave D(M)");
        ensure!(y.algebra_op.is_zero() && in_space(&end, y.module_op.data()), "remainder of pair {i} is not in End_A(M)");
        ensure!(x.add(&y) == *p, "split parts of pair {i} do not add up");
    }
    Ok(Verdict::Pass(format!("{} = {} + {}", total.dim(), base_dim, end.dim())))
}

/// Algebra-linear maps `D(A) -> End_A(M)`, one `m x m` block per basis
/// derivation.
fn linear_potentials(m: &ModuleOverAlgebra) -> Subspace {
    let a = m.base();
    let (md, n) = (m.dim(), a.dim());
    let ders = matrices(&derivation_algebra(a), n);
    let space = derivation_algebra(a);
    let d = ders.len();
    let unknowns = d * md * md;
    let columns: Vec<Vec<Scalar>> = (0..unknowns)
        .map(|u| {
            let v = unit_vec(unknowns, u);
            let blocks: Vec<Matrix> = (0..d).map(|j| square(&v[j * md * md..(j + 1) * md * md], md)).collect();
            let mut out = Vec::new();
            for i in 0..n {
                let act = m.action_basis(i);
                for (j, x) in ders.iter().enumerate() {
                    let coords = space.coordinates((a.ad_basis(i) * x).data()).expect("D(A) is an A-module");
                    let mut lhs = Matrix::zeros(md, md);
                    for (k, ck) in coords.iter().enumerate() {
                        lhs = &lhs + &blocks[k].scale(ck);
                    }
                    out.extend((&lhs - &(act * &blocks[j])).into_data());
                    out.extend(act.commutator(&blocks[j]).into_data());
                }
            }
            out
        })
        .collect();
    let len = columns.first().map_or(0, Vec::len);
    kernel_basis(&Matrix::from_columns(len, &columns))
}

fn md_curvature(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    if m.free_rank().is_none() {
        return Ok(Verdict::Skip("connections are built over free modules only".into()));
    }
    let md = m.dim();
    let mut rng = c.rng("module_derivation.curvature");
    let flat = random_element(&mut rng, &linear_potentials(m));
    let potential: Vec<Matrix> = flat.chunks(md * md).map(|b| square(b, md)).collect();
    let conn = connection_from_potential(m, &potential)?;
    let end = m.endomorphisms();
    let basis = conn.basis_derivations();
    for x in &basis {
        for y in &basis {
            ensure!(in_space(&end, conn.curvature(x, y)?.data()), "curvature is not algebra-linear");
        }
    }
    let flags = conn.flags()?;
    ensure!(flags.a_linear, "connection from an algebra-linear potential is not algebra-linear");
    Ok(Verdict::Pass(format!("flat: {}", flags.lie)))
}

// gauge

struct GaugeSamples {
    autos: Vec<ModuleAutomorphism>,
    mults: Vec<PairOperator>,
    ders: Vec<PairOperator>,
    mult_space: Subspace,
    der_space: Subspace,
}

fn gauge_samples(c: &Ctx, m: &ModuleOverAlgebra, tag: &str) -> GaugeSamples {
    let mut rng = c.rng(tag);
    let n = m.base().dim();
    let mult_space = module_multipliers(m);
    let der_space = module_derivations(m);
    let autos = (0..SAMPLES).map(|_| random_automorphism(m, &mut rng)).collect();
    let mut mults = pairs(&mult_space, m.dim(), n);
    let mut ders = pairs(&der_space, m.dim(), n);
    for _ in 0..SAMPLES {
        mults.push(pair_of(&random_element(&mut rng, &mult_space), m.dim(), n));
        ders.push(pair_of(&random_element(&mut rng, &der_space), m.dim(), n));
    }
    GaugeSamples { autos, mults, ders, mult_space, der_space }
}

fn gauge_homomorphism(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let s = gauge_samples(c, m, "gauge.multiplier_homomorphism");
    for g in &s.autos {
        for p in &s.mults {
            ensure!(has_pair(&s.mult_space, &g.act(p)), "ad_G R leaves M(M)");
            for q in &s.mults {
                ensure!(g.act(&p.compose(q)) == g.act(p).compose(&g.act(q)), "ad_G (R' R'') != ad_G R' ad_G R''");
            }
            for f in algebra_basis(m.base()) {
                ensure!(g.act(&act_pair(m, &f, p)) == act_pair(m, &f, &g.act(p)), "ad_G is not algebra-linear on M(M)");
            }
        }
    }
    Ok(Verdict::Pass(format!("{} automorphisms", s.autos.len())))
}

fn gauge_lie(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let s = gauge_samples(c, m, "gauge.derivation_lie");
    for g in &s.autos {
        for x in &s.ders {
            ensure!(has_pair(&s.der_space, &g.act(x)), "ad_G X leaves D(M)");
            for y in &s.ders {
                ensure!(g.act(&x.bracket(y)) == g.act(x).bracket(&g.act(y)), "ad_G [X', X''] != [ad_G X', ad_G X'']");
            }
            for f in algebra_basis(m.base()) {
                ensure!(g.act(&act_pair(m, &f, x)) == act_pair(m, &f, &g.act(x)), "ad_G is not algebra-linear on D(M)");
            }
        }
    }
    Ok(Verdict::Pass(format!("{} automorphisms", s.autos.len())))
}

fn gauge_mixed(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let s = gauge_samples(c, m, "gauge.mixed");
    for g in &s.autos {
        for r in &s.mults {
            for x in &s.ders {
                ensure!(g.act(&r.compose(x)) == g.act(r).compose(&g.act(x)), "ad_G (R X) != ad_G R ad_G X");
                ensure!(g.act(&x.bracket(r)) == g.act(x).bracket(&g.act(r)), "ad_G [X, R] != [ad_G X, ad_G R]");
            }
        }
    }
    Ok(Verdict::Pass(format!("{} automorphisms", s.autos.len())))
}

fn gauge_group(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let s = gauge_samples(c, m, "gauge.group_action");
    for g in &s.autos {
        for h in &s.autos {
            let gh = g.compose(h);
            for p in s.mults.iter().chain(&s.ders) {
                ensure!(gh.act(p) == g.act(&h.act(p)), "ad_(GH) != ad_G ad_H");
            }
        }
        for p in s.mults.iter().chain(&s.ders) {
            ensure!(g.inverse().act(&g.act(p)) == *p, "ad_(G^-1) does not invert ad_G");
        }
    }
    Ok(Verdict::Pass(format!("{} automorphisms", s.autos.len())))
}

fn gauge_base(c: &Ctx) -> Result<Verdict> {
    let m = need_module!(c);
    let s = gauge_samples(c, m, "gauge.base_preserved");
    let hom = m.hom_into_annihilator();
    let end = m.endomorphisms();
    for g in &s.autos {
        for p in &s.mults {
            let moved = g.act(p);
            ensure!(moved.algebra_op == p.algebra_op, "ad_G changes the base of a multiplier");
            ensure!(in_space(&hom, (&moved.module_op - &p.module_op).data()), "ad_G R - R is not in Hom_A(M; ann)");
        }
        for x in &s.ders {
            let moved = g.act(x);
            ensure!(moved.algebra_op == x.algebra_op, "ad_G changes the base of a derivation");
            ensure!(in_space(&end, (&moved.module_op - &x.module_op).data()), "ad_G X - X is not in End_A(M)");
        }
    }
    Ok(Verdict::Pass(format!("{} automorphisms", s.autos.len())))
}

// hochschild

fn cochain_contexts(c: &Ctx) -> Result<Vec<(CochainContext, Matrix)>> {
    c.carriers()
        .into_iter()
        .map(|car| {
            let ctx = CochainContext::new(car.clone(), car)?;
            let id = ctx.identity_kappa()?;
            Ok((ctx, id))
        })
        .collect()
}

fn hochschild_residual(c: &Ctx) -> Result<Verdict> {
    for (ctx, id) in cochain_contexts(c)? {
        ensure!(ctx.residual(&id).is_zero(), "G(id) != 0 on {}", ctx.u_space().carrier().name());
    }
    Ok(Verdict::Pass("G(id) = 0".into()))
}

fn hochschild_squares(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut h = Vec::new();
    for (ctx, id) in cochain_contexts(c)? {
        let report = ctx.cohomology(&id, c.qmax)?;
        let name = ctx.u_space().carrier().name().to_string();
        ensure!(report.closed.iter().all(|&b| b), "delta leaves the cochain spaces on {name}");
        ensure!(report.squares_to_zero.iter().all(|&b| b), "delta delta != 0 on {name}");
        h.push(format!("{name}: H = {:?}", report.h()));
    }
    Ok(Verdict::Pass(h.join("; ")))
}

fn tensor_leibniz_holds(ctx: &CochainContext, id: &Matrix, c1: &Cochain, c2: &Cochain) -> bool {
    let lhs = ctx.delta(id, &ctx.tensor(c1, c2));
    let rhs = ctx.tensor(&ctx.delta(id, c1), c2).add(&ctx.tensor(c1, &ctx.delta(id, c2)).scale(&c1.parity_sign()));
    lhs == rhs
}

fn hochschild_leibniz(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("hochschild.graded_leibniz");
    let top = c.qmax.min(2);
    let mut count = 0;
    for (ctx, id) in cochain_contexts(c)? {
        let spaces: Vec<Subspace> = (0..=top).map(|q| ctx.cochain_space(q as i64)).collect();
        for p in 0..=top {
            for r in 0..=top - p {
                let c1 = Cochain { degree: p, values: random_element(&mut rng, &spaces[p]) };
                let c2 = Cochain { degree: r, values: random_element(&mut rng, &spaces[r]) };
                ensure!(tensor_leibniz_holds(&ctx, &id, &c1, &c2), "graded Leibniz fails in degrees ({p}, {r})");
                count += 1;
            }
        }
    }
    Ok(Verdict::Pass(format!("{count} pairs")))
}

/// The algebra with its basis listed in reverse order.
pub fn reversed_algebra(a: &Algebra) -> Result<Algebra> {
    let n = a.dim();
    let s = a.structure();
    let p = |i: usize| n - 1 - i;
    let structure = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| s[p(i)][p(j)][p(k)].clone()).collect()).collect()).collect();
    let names = (0..n).map(|i| a.basis_names()[p(i)].clone()).collect();
    Algebra::new(a.name(), names, structure)
}

/// The module over [`reversed_algebra`].
pub fn reindexed_module(m: &ModuleOverAlgebra) -> Result<ModuleOverAlgebra> {
    let n = m.base().dim();
    let action = (0..n).map(|i| m.action()[n - 1 - i].clone()).collect();
    ModuleOverAlgebra::new(reversed_algebra(m.base())?, m.name(), m.basis_names().to_vec(), action)
}

fn hochschild_basis_independence(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut pairs = vec![(Carrier::Algebra(c.algebra.clone()), Carrier::Algebra(reversed_algebra(c.algebra)?))];
    if let Some(m) = c.module {
        pairs.push((Carrier::Module(m.clone()), Carrier::Module(reindexed_module(m)?)));
    }
    for (orig, perm) in pairs {
        let h1 = crate::hochschild::hochschild_cohomology(&orig, &orig, None, c.qmax)?.h();
        let h2 = crate::hochschild::hochschild_cohomology(&perm, &perm, None, c.qmax)?.h();
        ensure!(h1 == h2, "H depends on the basis order on {}: {h1:?} vs {h2:?}", orig.name());
    }
    Ok(Verdict::Pass("reversed basis gives equal dims".into()))
}

// de rham

struct FormPair {
    forms: FormContext,
    scalars: FormContext,
    spaces: Vec<Subspace>,
    scalar_spaces: Vec<Subspace>,
}

fn form_contexts(c: &Ctx) -> Result<Vec<FormPair>> {
    c.carriers()
        .into_iter()
        .map(|car| {
            let kappa = DerKappa::identity(&car);
            let forms = FormContext::new(car.clone(), car.clone(), &kappa)?;
            let scalars = FormContext::scalar_companion(car.clone(), car, &kappa)?;
            let spaces = (0..=c.qmax).map(|q| forms.form_space(q as i64)).collect();
            let scalar_spaces = (0..=c.qmax).map(|q| scalars.form_space(q as i64)).collect();
            Ok(FormPair { forms, scalars, spaces, scalar_spaces })
        })
        .collect()
}

fn random_form(rng: &mut Sampler, spaces: &[Subspace], q: usize) -> Form {
    Form { degree: q, values: random_element(rng, &spaces[q]) }
}

/// `i_ξ ω`, or `None` for a 0-form.
fn iota(ctx: &FormContext, xi: &[Scalar], w: &Form) -> Option<Form> {
    (w.degree > 0).then(|| ctx.interior(xi, w))
}

fn basis_vectors(ctx: &FormContext) -> Vec<Vec<Scalar>> {
    let d = ctx.u_space().dim();
    (0..d).map(|k| unit_vec(d, k)).collect()
}

fn derham_curvature(c: &Ctx) -> Result<Verdict> {
    for car in c.carriers() {
        let w = curvature_witness(&car, &car, &DerKappa::identity(&car))?;
        ensure!(w.is_none(), "F(id) != 0 on {} at {w:?}", car.name());
    }
    Ok(Verdict::Pass("F(id) = 0".into()))
}

fn derham_squares(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut h = Vec::new();
    for fp in form_contexts(c)? {
        let report = fp.forms.complex(c.qmax)?;
        let name = fp.forms.values_carrier().name().to_string();
        ensure!(report.closed.iter().all(|&b| b), "d leaves the form spaces on {name}");
        ensure!(report.squares_to_zero.iter().all(|&b| b), "d d != 0 on {name}");
        h.push(format!("{name}: H = {:?}", report.h()));
    }
    Ok(Verdict::Pass(h.join("; ")))
}

fn derham_anticommute(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.interior_anticommute");
    for fp in form_contexts(c)? {
        let ctx = &fp.forms;
        let xis = basis_vectors(ctx);
        for q in 2..=c.qmax {
            let w = random_form(&mut rng, &fp.spaces, q);
            for x in &xis {
                for y in &xis {
                    let s = ctx.interior(x, &ctx.interior(y, &w)).add(&ctx.interior(y, &ctx.interior(x, &w)));
                    ensure!(s.is_zero(), "i i + i i != 0 in degree {q}");
                }
            }
        }
    }
    Ok(Verdict::Pass("i_x i_y = -i_y i_x".into()))
}

fn wedge_degrees(qmax: usize) -> Vec<(usize, usize)> {
    (0..=qmax).flat_map(|p| (0..=qmax - p).map(move |q| (p, q))).collect()
}

fn derham_antiderivation(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.interior_antiderivation");
    for fp in form_contexts(c)? {
        let (sc, fc) = (&fp.scalars, &fp.forms);
        for (p, q) in wedge_degrees(c.qmax) {
            if p + q == 0 {
                continue;
            }
            let phi = random_form(&mut rng, &fp.scalar_spaces, p);
            let w = random_form(&mut rng, &fp.spaces, q);
            for xi in basis_vectors(fc) {
                let lhs = fc.interior(&xi, &wedge(sc, &phi, fc, &w));
                let mut rhs = fc.zero(p + q - 1);
                if let Some(ip) = iota(sc, &xi, &phi) {
                    rhs = rhs.add(&wedge(sc, &ip, fc, &w));
                }
                if let Some(iw) = iota(fc, &xi, &w) {
                    rhs = rhs.add(&wedge(sc, &phi, fc, &iw).scale(&phi.sign()));
                }
                ensure!(lhs == rhs, "antiderivation law fails in degrees ({p}, {q})");
            }
        }
    }
    Ok(Verdict::Pass("i(phi ^ w) = i phi ^ w + (-1)^p phi ^ i w".into()))
}

fn derham_lie_derivation(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.lie_derivation");
    for fp in form_contexts(c)? {
        let (sc, fc) = (&fp.scalars, &fp.forms);
        for (p, q) in wedge_degrees(c.qmax) {
            let phi = random_form(&mut rng, &fp.scalar_spaces, p);
            let w = random_form(&mut rng, &fp.spaces, q);
            for xi in basis_vectors(fc) {
                let lhs = fc.lie(&xi, &wedge(sc, &phi, fc, &w));
                let rhs = wedge(sc, &sc.lie(&xi, &phi), fc, &w).add(&wedge(sc, &phi, fc, &fc.lie(&xi, &w)));
                ensure!(lhs == rhs, "derivation law for L fails in degrees ({p}, {q})");
            }
        }
    }
    Ok(Verdict::Pass("L(phi ^ w) = L phi ^ w + phi ^ L w".into()))
}

fn derham_d_leibniz(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.d_leibniz");
    for fp in form_contexts(c)? {
        let (sc, fc) = (&fp.scalars, &fp.forms);
        for (p, q) in wedge_degrees(c.qmax - 1) {
            let phi = random_form(&mut rng, &fp.scalar_spaces, p);
            let w = random_form(&mut rng, &fp.spaces, q);
            let lhs = fc.d(&wedge(sc, &phi, fc, &w));
            let rhs = wedge(sc, &sc.d(&phi), fc, &w).add(&wedge(sc, &phi, fc, &fc.d(&w)).scale(&phi.sign()));
            ensure!(lhs == rhs, "Leibniz rule for d fails in degrees ({p}, {q})");
        }
    }
    Ok(Verdict::Pass("d(phi ^ w) = d phi ^ w + (-1)^p phi ^ d w".into()))
}

fn derham_lie_interior(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.lie_interior");
    for fp in form_contexts(c)? {
        let ctx = &fp.forms;
        let xis = basis_vectors(ctx);
        for q in 1..=c.qmax {
            let w = random_form(&mut rng, &fp.spaces, q);
            for x in &xis {
                for y in &xis {
                    let lhs = ctx.lie(x, &ctx.interior(y, &w)).sub(&ctx.interior(y, &ctx.lie(x, &w)));
                    ensure!(lhs == ctx.interior(&ctx.bracket(x, y), &w), "[L, i] != i_[,] in degree {q}");
                }
            }
        }
    }
    Ok(Verdict::Pass("[L_x, i_y] = i_[x,y]".into()))
}

fn derham_lie_bracket(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut rng = c.rng("derham.lie_bracket");
    for fp in form_contexts(c)? {
        let ctx = &fp.forms;
        let xis = basis_vectors(ctx);
        for q in 0..=c.qmax {
            let w = random_form(&mut rng, &fp.spaces, q);
            for x in &xis {
                for y in &xis {
                    let lhs = ctx.lie(x, &ctx.lie(y, &w)).sub(&ctx.lie(y, &ctx.lie(x, &w)));
                    ensure!(lhs == ctx.lie(&ctx.bracket(x, y), &w), "[L, L] != L_[,] in degree {q}");
                }
            }
        }
    }
    Ok(Verdict::Pass("[L_x, L_y] = L_[x,y]".into()))
}

fn derham_cartan(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let mut count = 0;
    for fp in form_contexts(c)? {
        let ctx = &fp.forms;
        for q in 0..=c.qmax {
            for w in ctx.basis_forms(q) {
                for xi in basis_vectors(ctx) {
                    let mut rhs = ctx.interior(&xi, &ctx.d(&w));
                    if let Some(iw) = iota(ctx, &xi, &w) {
                        rhs = rhs.add(&ctx.d(&iw));
                    }
                    ensure!(ctx.lie(&xi, &w) == rhs, "L != d i + i d in degree {q}");
                    count += 1;
                }
            }
        }
    }
    Ok(Verdict::Pass(format!("{count} basis pairs")))
}

fn derham_lie_d(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    for fp in form_contexts(c)? {
        let ctx = &fp.forms;
        for q in 0..c.qmax {
            for w in ctx.basis_forms(q) {
                for xi in basis_vectors(ctx) {
                    ensure!(ctx.lie(&xi, &ctx.d(&w)) == ctx.d(&ctx.lie(&xi, &w)), "L d != d L in degree {q}");
                }
            }
        }
    }
    Ok(Verdict::Pass("[L, d] = 0".into()))
}

fn derham_exactness(c: &Ctx) -> Result<Verdict> {
    need_degrees!(c);
    let m = need_module!(c);
    for row in homotopy_check(m, c.qmax)? {
        ensure!(row.holds, "id != i_E d + d i_E in degree {}", row.q);
    }
    let car = Carrier::Module(m.clone());
    let h = crate::derham::derham_cohomology(&car, &car, &DerKappa::identity(&car), c.qmax)?.h();
    ensure!(h.iter().all(|&x| x == 0), "H(M, M) = {h:?} is not zero");
    Ok(Verdict::Pass(format!("H = {h:?}")))
}

type CheckFn = fn(&Ctx) -> Result<Verdict>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("algebra.ad_kernel_is_annihilator", ad_kernel),
    ("algebra.ad_morphism", ad_morphism),
    ("algebra.random_products", random_products),
    ("algebra.unit_characterization", unit_characterization),
    ("derham.cartan_magic", derham_cartan),
    ("derham.curvature_vanishes", derham_curvature),
    ("derham.d_leibniz", derham_d_leibniz),
    ("derham.d_squared", derham_squares),
    ("derham.exactness", derham_exactness),
    ("derham.interior_anticommute", derham_anticommute),
    ("derham.interior_antiderivation", derham_antiderivation),
    ("derham.lie_bracket", derham_lie_bracket),
    ("derham.lie_commutes_with_d", derham_lie_d),
    ("derham.lie_derivation", derham_lie_derivation),
    ("derham.lie_interior", derham_lie_interior),
    ("derivation.algebra_module_structure", derivation_module_structure),
    ("derivation.annihilator_stable", derivation_annihilator),
    ("derivation.kernel_subalgebra", derivation_kernels),
    ("derivation.lie_algebra", derivation_lie),
    ("derivation.multiplier_matching", derivation_matching),
    ("gauge.base_preserved", gauge_base),
    ("gauge.derivation_lie", gauge_lie),
    ("gauge.group_action", gauge_group),
    ("gauge.mixed", gauge_mixed),
    ("gauge.multiplier_homomorphism", gauge_homomorphism),
    ("hochschild.basis_independence", hochschild_basis_independence),
    ("hochschild.delta_squared", hochschild_squares),
    ("hochschild.graded_leibniz", hochschild_leibniz),
    ("hochschild.residual_vanishes", hochschild_residual),
    ("module.random_compatibility", module_compatibility),
    ("module.unital_annihilators", module_unital_annihilators),
    ("module_derivation.adjoint_split", md_adjoint_split),
    ("module_derivation.bundle", md_bundle),
    ("module_derivation.curvature", md_curvature),
    ("module_derivation.endomorphism_ideal", md_endomorphism_ideal),
    ("module_derivation.free_lift", md_free_lift),
    ("module_derivation.kernel_image", md_kernels),
    ("module_derivation.lie_algebra", md_lie),
    ("module_derivation.mixed_products", md_mixed),
    ("module_multiplier.adjoint_split", mm_adjoint_split),
    ("module_multiplier.annihilator_stable", mm_annihilator),
    ("module_multiplier.bundle", mm_bundle),
    ("module_multiplier.commutator_kills_am", mm_commutators),
    ("module_multiplier.free_lift", mm_free_lift),
    ("module_multiplier.kernel_image_submodules", mm_submodules),
    ("module_multiplier.residual", mm_residual),
    ("module_multiplier.subalgebra", mm_subalgebra),
    ("multiplier.adjoint_module_kernel", adjoint_module_kernel),
    ("multiplier.annihilator_stable", multiplier_annihilator),
    ("multiplier.commutator_range", multiplier_commutators),
    ("multiplier.kernel_image_ideals", multiplier_ideals),
    ("multiplier.subalgebra", multiplier_subalgebra),
    ("multiplier.unital_isomorphism", unital_isomorphism),
];

pub fn check_tags() -> Vec<&'static str> {
    CHECKS.iter().map(|(t, _)| *t).collect()
}

/// Runs every check; errors inside a check are reported as failures.
pub fn run_checks(algebra: &Algebra, module: Option<&ModuleOverAlgebra>, qmax: usize, seed: u64) -> CheckReport {
    let ctx = Ctx { algebra, module, qmax, seed };
    let mut entries: Vec<CheckEntry> = CHECKS
        .iter()
        .map(|(tag, f)| {
            let (status, detail) = match f(&ctx) {
                Ok(Verdict::Pass(d)) => (Status::Pass, d),
                Ok(Verdict::Fail(d)) => (Status::Fail, d),
                Ok(Verdict::Skip(d)) => (Status::Skipped, d),
                Err(e) => (Status::Fail, e.to_string()),
            };
            CheckEntry { tag: tag.to_string(), status, detail }
        })
        .collect();
    entries.sort_by(|a, b| a.tag.cmp(&b.tag));
    CheckReport { qmax, seed, entries }
}
