//! The canonical small algebras and modules used throughout the tests, the
//! acceptance suite and the shipped `fixtures/*.json` files.

use crate::algebra::{Algebra, StructureTensor};
use crate::exactlin::{int, Scalar};
use crate::module::{free_module, ModuleOverAlgebra};

fn tensor(n: usize, products: &[((usize, usize), &[i64])]) -> StructureTensor {
    let mut t = vec![vec![vec![Scalar::from_integer(0.into()); n]; n]; n];
    for &((i, j), coords) in products {
        let v: Vec<Scalar> = coords.iter().map(|&c| int(c)).collect();
        t[i][j] = v.clone();
        t[j][i] = v;
    }
    t
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The rationals themselves: `e * e = e`.
pub fn a1() -> Algebra {
    Algebra::new("A1", names(&["e"]), tensor(1, &[((0, 0), &[1])])).unwrap()
}

/// Dual numbers `Q[x]/(x^2)` with basis `(e, x)`.
pub fn a2() -> Algebra {
    let t = tensor(2, &[((0, 0), &[1, 0]), ((0, 1), &[0, 1]), ((1, 1), &[0, 0])]);
    Algebra::new("A2", names(&["e", "x"]), t).unwrap()
}

/// Non-unital `x Q[x]/(x^3)` with basis `(u, v)`, `u * u = v`.
pub fn a3() -> Algebra {
    let t = tensor(2, &[((0, 0), &[0, 1])]);
    Algebra::new("A3", names(&["u", "v"]), t).unwrap()
}

/// `Q[x, y]/(x, y)^2` with basis `(e, x, y)`; its derivation algebra is `gl_2`,
/// which makes it a convenient source of curved connections.
pub fn square_zero_plane() -> Algebra {
    let t = tensor(3, &[((0, 0), &[1, 0, 0]), ((0, 1), &[0, 1, 0]), ((0, 2), &[0, 0, 1])]);
    Algebra::new("B3", names(&["e", "x", "y"]), t).unwrap()
}

/// Adjoint (free rank one) module of [`a2`].
pub fn m2() -> ModuleOverAlgebra {
    let mut m = free_module(&a2(), 1);
    rename(&mut m, "M2");
    m
}

/// Free rank two module over [`a2`].
pub fn m2r2() -> ModuleOverAlgebra {
    let mut m = free_module(&a2(), 2);
    rename(&mut m, "M2r2");
    m
}

/// Adjoint module of [`a3`].
pub fn ad3() -> ModuleOverAlgebra {
    let base = a3();
    ModuleOverAlgebra::new(base.clone(), "AD3", base.basis_names().to_vec(), base.structure().clone()).unwrap()
}

fn rename(m: &mut ModuleOverAlgebra, name: &str) {
    *m = ModuleOverAlgebra::new(m.base().clone(), name, m.basis_names().to_vec(), m.action().clone()).unwrap();
}

/// Looks a fixture up by its file stem, e.g. `"A2"` or `"AD3"`.
pub fn by_name(name: &str) -> Option<(Algebra, Option<ModuleOverAlgebra>)> {
    Some(match name {
        "A1" => (a1(), None),
        "A2" => (a2(), None),
        "A3" => (a3(), None),
        "B3" => (square_zero_plane(), None),
        "M2" => (a2(), Some(m2())),
        "M2r2" => (a2(), Some(m2r2())),
        "AD3" => (a3(), Some(ad3())),
        _ => return None,
    })
}

pub const NAMES: [&str; 6] = ["A1", "A2", "A3", "M2", "M2r2", "AD3"];
