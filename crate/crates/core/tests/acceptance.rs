//! The ten acceptance criteria, one pass/fail line each.

use std::process::ExitCode;

use modan_core::algebra::Algebra;
use modan_core::derham::{derham_cohomology, homotopy_check, wedge, DerKappa, Form, FormContext};
use modan_core::derivation::{derivation_algebra, derivation_injection_free, fiber_big_pi, module_derivations, ConnectionSection};
use modan_core::exactlin::{image_basis, int, is_zero_vec, kernel_basis, unit_vec, Matrix, Scalar, Subspace};
use modan_core::fixtures;
use modan_core::gauge::{make_automorphism, random_automorphism, ModuleAutomorphism};
use modan_core::hochschild::{hochschild_cohomology, Cochain, CochainContext};
use modan_core::module::ModuleOverAlgebra;
use modan_core::multiplier::{adjoint_embedding, fiber_pi, module_multipliers, multiplier_algebra, multiplier_injection_free, unital_iso_e_star, Fiber};
use modan_core::operators::{Carrier, PairOperator};
use modan_core::oracle::{run_oracle, DEFAULT_CAP};
use modan_core::sampling::{random_element, sampler};

type Outcome = Result<String, String>;

macro_rules! require {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: modan_core::error::Error) -> String {
    e.to_string()
}

fn sq(v: &[Scalar], n: usize) -> Matrix {
    Matrix::from_flat(n, n, v.to_vec()).unwrap()
}

fn mats(s: &Subspace, n: usize) -> Vec<Matrix> {
    s.basis().iter().map(|b| sq(b, n)).collect()
}

fn pairs(s: &Subspace, m: usize, n: usize) -> Vec<PairOperator> {
    s.basis().iter().map(|b| PairOperator::new(sq(&b[..m * m], m), sq(&b[m * m..], n))).collect()
}

fn has(s: &Subspace, v: &[Scalar]) -> bool {
    s.coordinates(v).is_some()
}

fn span(n: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
    Subspace::from_rows(n, rows)
}

fn ideal(a: &Algebra, s: &Subspace) -> bool {
    (0..a.dim()).all(|i| s.basis().iter().all(|v| has(s, &a.ad_basis(i).apply(v))))
}

/// `m x m` operators commuting with the action, from the commutation equations.
fn brute_end(m: &ModuleOverAlgebra) -> Subspace {
    let d = m.dim();
    let columns: Vec<Vec<Scalar>> = (0..d * d)
        .map(|u| {
            let op = sq(&unit_vec(d * d, u), d);
            (0..m.base().dim()).flat_map(|i| (&(&op * m.action_basis(i)) - &(m.action_basis(i) * &op)).into_data()).collect()
        })
        .collect();
    kernel_basis(&Matrix::from_columns(m.base().dim() * d * d, &columns))
}

/// Operators in [`brute_end`] with image inside `ann_M A`.
fn brute_hom_ann(m: &ModuleOverAlgebra) -> Subspace {
    let d = m.dim();
    let ann: Vec<Vec<Scalar>> = (0..d).filter(|&k| (0..m.base().dim()).all(|i| is_zero_vec(&m.action_basis(i).column(k)))).map(|k| unit_vec(d, k)).collect();
    let ann = span(d, ann);
    let end = brute_end(m);
    let eqs = ann.equations().basis().to_vec();
    let columns: Vec<Vec<Scalar>> = end
        .basis()
        .iter()
        .map(|b| {
            let op = sq(b, d);
            (0..d).flat_map(|k| eqs.iter().map(|e| e.iter().zip(op.column(k)).map(|(x, y)| x * y).sum::<Scalar>()).collect::<Vec<_>>()).collect()
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    if rows == 0 {
        return end;
    }
    let k = kernel_basis(&Matrix::from_columns(rows, &columns));
    span(d * d, k.basis().iter().map(|c| end.combine(c)).collect())
}

// 1
fn unital_isomorphism() -> Outcome {
    for a in [fixtures::a1(), fixtures::a2()] {
        let space = multiplier_algebra(&a);
        require!(space.dim() == a.dim(), "{}: dim M(A) = {} but dim A = {}", a.name(), space.dim(), a.dim());
        let iso = unital_iso_e_star(&a).map_err(err)?;
        let e = iso.unit().clone();
        let basis = mats(&space, a.dim());
        let images: Vec<Vec<Scalar>> = basis.iter().map(|r| iso.apply(r)).collect();
        for (r, img) in basis.iter().zip(&images) {
            require!(*img == r.apply(&e), "{}: e*(R) != R(e)", a.name());
        }
        require!(span(a.dim(), images.clone()).dim() == a.dim(), "{}: e* is not bijective", a.name());
        for (i, r1) in basis.iter().enumerate() {
            for (j, r2) in basis.iter().enumerate() {
                require!(iso.apply(&(r1 * r2)) == a.multiply(&images[i], &images[j]), "{}: e* not multiplicative on R{i}, R{j}", a.name());
            }
        }
    }
    Ok("A1, A2: dim M(A) = dim A, e* bijective and multiplicative".into())
}

// 2
fn multiplier_structure() -> Outcome {
    let a3 = fixtures::a3();
    let ann = a3.annihilator();
    require!(ann == span(2, vec![vec![int(0), int(1)]]), "ann A3 != span{{v}}");
    let basis = mats(&multiplier_algebra(&a3), 2);
    for r1 in &basis {
        for r2 in &basis {
            require!(image_basis(&r1.commutator(r2)).is_subspace_of(&ann).unwrap(), "A3: [R', R''] A not in ann A");
        }
        require!(ideal(&a3, &kernel_basis(r1)) && ideal(&a3, &image_basis(r1)), "A3: kernel or image is not an ideal");
        require!(ann.basis().iter().all(|v| has(&ann, &r1.apply(v))), "A3: R(ann A) not in ann A");
    }
    let a2 = fixtures::a2();
    require!(a2.annihilator().dim() == 0, "ann A2 != 0");
    let basis2 = mats(&multiplier_algebra(&a2), 2);
    for r1 in &basis2 {
        for r2 in &basis2 {
            require!(r1.commutator(r2).is_zero(), "A2: basis multipliers do not commute");
        }
    }
    Ok(format!("A3: {} basis multipliers, commutators into span{{v}}; A2: all commute", basis.len()))
}

// 3
fn adjoint_kernels() -> Outcome {
    let a3 = fixtures::a3();
    require!(a3.ad_kernel() == a3.annihilator(), "Ker ad != ann A on A3");
    let ad3 = fixtures::ad3();
    let k = adjoint_embedding(&ad3).kernel();
    require!(k == ad3.ann_of_module_in_algebra(), "Ker ad != ann_A M on AD3");
    Ok(format!("A3: Ker ad = ann A (dim {}); AD3: Ker ad = ann_A M (dim {})", a3.ad_kernel().dim(), k.dim()))
}

// 4
fn bundles() -> Outcome {
    let mut notes = Vec::new();
    for (m, hom_dim, end_dim) in [(fixtures::ad3(), 1, 2), (fixtures::m2(), 0, 2)] {
        let (d, n) = (m.dim(), m.base().dim());
        let hom = brute_hom_ann(&m);
        let end = brute_end(&m);
        require!(hom.dim() == hom_dim && end.dim() == end_dim, "{}: Hom dim {} End dim {}", m.name(), hom.dim(), end.dim());
        let mm = module_multipliers(&m);
        for r in mats(&multiplier_algebra(m.base()), n) {
            if let Fiber::Affine { base, directions } = fiber_pi(&m, &r).map_err(err)? {
                require!(directions == hom, "{}: pi fiber directions != Hom_A(M; ann)", m.name());
                for rho in hom.basis() {
                    let p = PairOperator::new(&base.module_op + &sq(rho, d), r.clone());
                    require!(has(&mm, &p.to_coords()), "{}: base + Hom direction leaves M(M)", m.name());
                }
            }
        }
        for (p, q) in pairs(&mm, d, n).iter().zip(pairs(&mm, d, n).iter().skip(1)) {
            if p.algebra_op == q.algebra_op {
                require!(has(&hom, (&p.module_op - &q.module_op).data()), "{}: same-base difference outside Hom", m.name());
            }
        }
        let md = module_derivations(&m);
        for x in mats(&derivation_algebra(m.base()), n) {
            if let Fiber::Affine { base, directions } = fiber_big_pi(&m, &x).map_err(err)? {
                require!(directions == end, "{}: Pi fiber directions != End_A(M)", m.name());
                for rho in end.basis() {
                    let p = PairOperator::new(&base.module_op + &sq(rho, d), x.clone());
                    require!(has(&md, &p.to_coords()), "{}: base + End direction leaves D(M)", m.name());
                }
            }
        }
        for rho in end.basis() {
            let mut v = rho.clone();
            v.extend(vec![int(0); n * n]);
            require!(has(&md, &v), "{}: (rho, 0) not in D(M)", m.name());
        }
        for rho in hom.basis() {
            let mut v = rho.clone();
            v.extend(vec![int(0); n * n]);
            require!(has(&mm, &v), "{}: (rho, 0) not in M(M)", m.name());
        }
        let vertical = |s: &Subspace| {
            let k = kernel_basis(&Matrix::from_columns(n * n, &s.basis().iter().map(|b| b[d * d..].to_vec()).collect::<Vec<_>>()));
            span(d * d, k.basis().iter().map(|c| s.combine(c)[..d * d].to_vec()).collect())
        };
        require!(vertical(&mm) == hom, "{}: Ker pi != Hom_A(M; ann)", m.name());
        require!(vertical(&md) == end, "{}: Ker Pi != End_A(M)", m.name());
        notes.push(format!("{}: Hom {}, End {}", m.name(), hom.dim(), end.dim()));
    }
    Ok(notes.join("; "))
}

// 5
fn dimension_accounting() -> Outcome {
    let ad3 = fixtures::ad3();
    let m2 = fixtures::m2();
    let counts = [
        ("M(AD3)", module_multipliers(&ad3).dim(), multiplier_algebra(ad3.base()).dim(), brute_hom_ann(&ad3).dim(), 3),
        ("D(AD3)", module_derivations(&ad3).dim(), derivation_algebra(ad3.base()).dim(), brute_end(&ad3).dim(), 4),
        ("D(M2)", module_derivations(&m2).dim(), derivation_algebra(m2.base()).dim(), brute_end(&m2).dim(), 3),
    ];
    for (label, total, base, fiber, expected) in counts {
        require!(total == expected && total == base + fiber, "{label}: {total} vs {base} + {fiber}, expected {expected}");
    }
    for m in [fixtures::m2(), fixtures::m2r2()] {
        let n = m.base().dim();
        let (mm, md) = (module_multipliers(&m), module_derivations(&m));
        let rs = mats(&multiplier_algebra(m.base()), n);
        for r1 in &rs {
            let p1 = multiplier_injection_free(&m, r1).map_err(err)?;
            require!(has(&mm, &p1.to_coords()), "{}: lifted multiplier leaves M(M)", m.name());
            for r2 in &rs {
                require!(
                    multiplier_injection_free(&m, &(r1 * r2)).map_err(err)? == p1.compose(&multiplier_injection_free(&m, r2).map_err(err)?),
                    "{}: lift breaks composition",
                    m.name()
                );
            }
        }
        let xs = mats(&derivation_algebra(m.base()), n);
        for x in &xs {
            let p = derivation_injection_free(&m, x).map_err(err)?;
            require!(has(&md, &p.to_coords()), "{}: lifted derivation leaves D(M)", m.name());
            for y in &xs {
                require!(
                    derivation_injection_free(&m, &x.commutator(y)).map_err(err)? == p.bracket(&derivation_injection_free(&m, y).map_err(err)?),
                    "{}: lift breaks brackets",
                    m.name()
                );
            }
        }
    }
    let (mm, md) = (module_multipliers(&ad3), module_derivations(&ad3));
    for r in mats(&multiplier_algebra(ad3.base()), 2) {
        require!(has(&mm, &PairOperator::new(r.clone(), r.clone()).to_coords()), "AD3: (R, R) leaves M(M)");
    }
    let xs = mats(&derivation_algebra(ad3.base()), 2);
    for x in &xs {
        for y in &xs {
            let (px, py) = (PairOperator::new(x.clone(), x.clone()), PairOperator::new(y.clone(), y.clone()));
            require!(has(&md, &px.to_coords()), "AD3: (X, X) leaves D(M)");
            require!(px.bracket(&py) == PairOperator::new(x.commutator(y), x.commutator(y)), "AD3: diagonal lift breaks brackets");
        }
    }
    Ok("3 = 2 + 1, 4 = 2 + 2, 3 = 1 + 2; lifts closed and structure preserving".into())
}

fn leibniz_cochains(ctx: &CochainContext, id: &Matrix, seed: u64) -> Result<usize, String> {
    let mut rng = sampler(seed);
    let spaces: Vec<Subspace> = (0..=3).map(|q| ctx.cochain_space(q)).collect();
    let mut count = 0;
    for p in 0..=3usize {
        for r in 0..=3 - p {
            for _ in 0..3 {
                let c1 = Cochain { degree: p, values: random_element(&mut rng, &spaces[p]) };
                let c2 = Cochain { degree: r, values: random_element(&mut rng, &spaces[r]) };
                let lhs = ctx.delta(id, &ctx.tensor(&c1, &c2));
                let rhs = ctx.tensor(&ctx.delta(id, &c1), &c2).add(&ctx.tensor(&c1, &ctx.delta(id, &c2)).scale(&c1.parity_sign()));
                require!(lhs == rhs, "graded Leibniz fails in degrees ({p}, {r})");
                count += 1;
            }
        }
    }
    Ok(count)
}

// 6
fn hochschild() -> Outcome {
    for a in [fixtures::a1(), fixtures::a2()] {
        let c = Carrier::Algebra(a.clone());
        let ctx = CochainContext::new(c.clone(), c.clone()).map_err(err)?;
        let id = ctx.identity_kappa().map_err(err)?;
        require!(ctx.residual(&id).is_zero(), "{}: G(id) != 0", a.name());
        let report = hochschild_cohomology(&c, &c, None, 4).map_err(err)?;
        for q in 0..=2 {
            let (d0, d1) = (report.matrices[q].as_ref().unwrap(), report.matrices[q + 1].as_ref().unwrap());
            require!((d1 * d0).is_zero(), "{}: delta delta != 0 from degree {q}", a.name());
        }
        let d3 = report.matrices[3].as_ref().unwrap();
        let d4 = report.matrices[4].as_ref().unwrap();
        require!((d4 * d3).is_zero(), "{}: delta delta != 0 from degree 3", a.name());
        leibniz_cochains(&ctx, &id, 7)?;
        let h = hochschild_cohomology(&c, &c, None, 3).map_err(err)?.h();
        require!(h == vec![a.dim(), 0, 0, 0], "{}: H = {h:?}", a.name());
        let oracle = run_oracle(&a, None, 3, DEFAULT_CAP).map_err(err)?;
        for q in 0..=3 {
            let row = oracle.rows.iter().find(|r| r.statement == format!("hochschild[{}] H^{q}", a.name())).unwrap();
            require!(row.agrees() && row.oracle == h[q], "{}: oracle H^{q} = {}", a.name(), row.oracle);
        }
    }
    Ok("A1: H = (1, 0, 0, 0); A2: H = (2, 0, 0, 0); primary and oracle agree".into())
}

fn iota(ctx: &FormContext, xi: &[Scalar], w: &Form) -> Option<Form> {
    (w.degree > 0).then(|| ctx.interior(xi, w))
}

// 7
fn de_rham() -> Outcome {
    let mut rng = sampler(11);
    for c in [Carrier::Algebra(fixtures::a2()), Carrier::Module(fixtures::m2())] {
        let name = c.name().to_string();
        let kappa = DerKappa::identity(&c);
        let f = FormContext::new(c.clone(), c.clone(), &kappa).map_err(err)?;
        let s = FormContext::scalar_companion(c.clone(), c.clone(), &kappa).map_err(err)?;
        let dim = f.u_space().dim();
        let xis: Vec<Vec<Scalar>> = (0..dim).map(|k| unit_vec(dim, k)).collect();
        let spaces: Vec<Subspace> = (0..=3).map(|q| f.form_space(q)).collect();
        let sspaces: Vec<Subspace> = (0..=3).map(|q| s.form_space(q)).collect();
        for q in 0..=3usize {
            for w in f.basis_forms(q) {
                require!(f.d(&f.d(&w)).is_zero(), "{name}: d d != 0 in degree {q}");
                for xi in &xis {
                    let mut magic = f.interior(xi, &f.d(&w));
                    if let Some(iw) = iota(&f, xi, &w) {
                        magic = magic.add(&f.d(&iw));
                    }
                    require!(f.lie(xi, &w) == magic, "{name}: Cartan formula fails in degree {q}");
                    require!(f.lie(xi, &f.d(&w)) == f.d(&f.lie(xi, &w)), "{name}: [L, d] != 0 in degree {q}");
                    if q >= 2 {
                        for eta in &xis {
                            let s2 = f.interior(xi, &f.interior(eta, &w)).add(&f.interior(eta, &f.interior(xi, &w)));
                            require!(s2.is_zero(), "{name}: i i + i i != 0");
                        }
                    }
                }
            }
        }
        for p in 0..=3usize {
            for q in 0..=3 - p {
                let phi = Form { degree: p, values: random_element(&mut rng, &sspaces[p]) };
                let w = Form { degree: q, values: random_element(&mut rng, &spaces[q]) };
                let pw = wedge(&s, &phi, &f, &w);
                for xi in &xis {
                    if p + q > 0 {
                        let mut rhs = f.zero(p + q - 1);
                        if let Some(ip) = iota(&s, xi, &phi) {
                            rhs = rhs.add(&wedge(&s, &ip, &f, &w));
                        }
                        if let Some(iw) = iota(&f, xi, &w) {
                            rhs = rhs.add(&wedge(&s, &phi, &f, &iw).scale(&phi.sign()));
                        }
                        require!(f.interior(xi, &pw) == rhs, "{name}: i is not an antiderivation in ({p}, {q})");
                    }
                    let rhs = wedge(&s, &s.lie(xi, &phi), &f, &w).add(&wedge(&s, &phi, &f, &f.lie(xi, &w)));
                    require!(f.lie(xi, &pw) == rhs, "{name}: L is not a derivation in ({p}, {q})");
                }
                if p + q < 3 {
                    let rhs = wedge(&s, &s.d(&phi), &f, &w).add(&wedge(&s, &phi, &f, &f.d(&w)).scale(&phi.sign()));
                    require!(f.d(&pw) == rhs, "{name}: d is not an antiderivation in ({p}, {q})");
                }
            }
        }
    }
    let a2 = Carrier::Algebra(fixtures::a2());
    let h = derham_cohomology(&a2, &a2, &DerKappa::identity(&a2), 3).map_err(err)?.h();
    require!(h[..2] == [1, 0] && h[2..].iter().all(|&x| x == 0), "H(A2) = {h:?}");
    Ok(format!("A2 and M2: all identities hold for q <= 3; H(A2) = {h:?}"))
}

// 8
fn exactness() -> Outcome {
    let mut notes = Vec::new();
    for m in [fixtures::m2(), fixtures::ad3()] {
        let c = Carrier::Module(m.clone());
        let h = derham_cohomology(&c, &c, &DerKappa::identity(&c), 3).map_err(err)?.h();
        require!(h == vec![0, 0, 0, 0], "{}: H = {h:?}", m.name());
        for row in homotopy_check(&m, 3).map_err(err)? {
            require!(row.holds, "{}: homotopy fails in degree {}", m.name(), row.q);
        }
        notes.push(format!("{}: H = {h:?}", m.name()));
    }
    Ok(notes.join("; "))
}

fn gauge_identities(m: &ModuleOverAlgebra, seed: u64) -> Result<usize, String> {
    let mut rng = sampler(seed);
    let (d, n) = (m.dim(), m.base().dim());
    let (mm, md) = (module_multipliers(m), module_derivations(m));
    let draw = |rng: &mut _, s: &Subspace| {
        let v = random_element(rng, s);
        PairOperator::new(sq(&v[..d * d], d), sq(&v[d * d..], n))
    };
    let autos: Vec<ModuleAutomorphism> = (0..4).map(|_| random_automorphism(m, &mut rng)).collect();
    let mut count = 0;
    for g in &autos {
        for h in &autos {
            let (r1, r2) = (draw(&mut rng, &mm), draw(&mut rng, &mm));
            let (x1, x2) = (draw(&mut rng, &md), draw(&mut rng, &md));
            require!(g.act(&r1.compose(&r2)) == g.act(&r1).compose(&g.act(&r2)), "{}: ad_G not multiplicative", m.name());
            require!(g.act(&x1.bracket(&x2)) == g.act(&x1).bracket(&g.act(&x2)), "{}: ad_G not a Lie map", m.name());
            require!(g.act(&r1.compose(&x1)) == g.act(&r1).compose(&g.act(&x1)), "{}: mixed product not preserved", m.name());
            require!(g.act(&x1.bracket(&r1)) == g.act(&x1).bracket(&g.act(&r1)), "{}: mixed bracket not preserved", m.name());
            require!(g.compose(h).act(&x1) == g.act(&h.act(&x1)), "{}: not a group action", m.name());
            for i in 0..n {
                let f = m.base().basis_element(i);
                let fx = PairOperator::new(&m.action_of(&f) * &x1.module_op, &m.base().ad_map(&f) * &x1.algebra_op);
                let fgx = PairOperator::new(&m.action_of(&f) * &g.act(&x1).module_op, &m.base().ad_map(&f) * &g.act(&x1).algebra_op);
                require!(g.act(&fx) == fgx, "{}: ad_G not algebra-linear", m.name());
            }
            for p in [&r1, &r2, &x1, &x2] {
                require!(g.act(p).algebra_op == p.algebra_op, "{}: base component changed", m.name());
            }
            require!(has(&mm, &g.act(&r1).to_coords()) && has(&md, &g.act(&x1).to_coords()), "{}: ad_G leaves the spaces", m.name());
            count += 1;
        }
    }
    Ok(count)
}

// 9
fn gauge() -> Outcome {
    let m2 = fixtures::m2();
    let e_plus_x = vec![int(1), int(1)];
    let x = vec![int(0), int(1)];
    let g = make_automorphism(&m2, m2.action_of(&e_plus_x)).map_err(err)?;
    let x_partial = Matrix::from_ints(&[&[0, 0], &[0, 1]]);
    let Fiber::Affine { base, directions } = fiber_big_pi(&m2, &x_partial).map_err(err)? else {
        return Err("no connection over x d/dx".into());
    };
    let mut nablas = vec![base.module_op.clone()];
    nablas.extend(directions.basis().iter().map(|rho| &base.module_op + &sq(rho, 2)));
    nablas.push(ConnectionSection::free_lift(&m2).map_err(err)?.nabla(&x_partial).map_err(err)?);
    for nabla in &nablas {
        let moved = g.act(&PairOperator::new(nabla.clone(), x_partial.clone()));
        require!(moved.module_op == nabla - &m2.action_of(&x), "ad_G nabla != nabla - ad_x");
        require!(moved.algebra_op == x_partial, "ad_G changed X");
    }
    let c1 = gauge_identities(&m2, 5)?;
    let c2 = gauge_identities(&fixtures::ad3(), 6)?;
    Ok(format!("M2: ad_(e+x) nabla = nabla - ad_x on {} connections; {} random cases", nablas.len(), c1 + c2))
}

// 10
fn oracle() -> Outcome {
    let mut rows = 0;
    for name in fixtures::NAMES {
        let (a, m) = fixtures::by_name(name).unwrap();
        let report = run_oracle(&a, m.as_ref(), 3, DEFAULT_CAP).map_err(err)?;
        report.check().map_err(|e| format!("{name}: {e}"))?;
        rows += report.rows.len();
    }
    Ok(format!("{rows} dimensions agree across {} fixtures at qmax 3", fixtures::NAMES.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("unital isomorphism", unital_isomorphism),
        ("multiplier structure", multiplier_structure),
        ("adjoint kernels", adjoint_kernels),
        ("bundle fibers", bundles),
        ("dimension accounting", dimension_accounting),
        ("hochschild complex", hochschild),
        ("de rham complex", de_rham),
        ("exactness", exactness),
        ("gauge transformations", gauge),
        ("oracle cross-validation", oracle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
