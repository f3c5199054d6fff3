use serde::{Deserialize, Serialize};

use crate::exactlin::tensor::{apply_on_factor, lift, permutation_map};
use crate::exactlin::{FieldSpec, Matrix};
use crate::report::Report;
use crate::structures::{Action, Algebra, Coaction, Coalgebra, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DkKind {
    ModuleAlgebra,
    ModuleCoalgebra,
    ComoduleAlgebra,
    ComoduleCoalgebra,
}

impl DkKind {
    pub fn name(self) -> &'static str {
        match self {
            DkKind::ModuleAlgebra => "module algebra",
            DkKind::ModuleCoalgebra => "module coalgebra",
            DkKind::ComoduleAlgebra => "comodule algebra",
            DkKind::ComoduleCoalgebra => "comodule coalgebra",
        }
    }
}

/// An algebra or coalgebra carrying an action or coaction of a bialgebra.
/// `map` follows the layouts of `Action` / `Coaction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ingredient {
    ModuleAlgebra { side: Side, algebra: Algebra, action: Matrix },
    ModuleCoalgebra { side: Side, coalgebra: Coalgebra, action: Matrix },
    ComoduleAlgebra { side: Side, algebra: Algebra, coaction: Matrix },
    ComoduleCoalgebra { side: Side, coalgebra: Coalgebra, coaction: Matrix },
}

impl Ingredient {
    pub fn kind(&self) -> DkKind {
        match self {
            Ingredient::ModuleAlgebra { .. } => DkKind::ModuleAlgebra,
            Ingredient::ModuleCoalgebra { .. } => DkKind::ModuleCoalgebra,
            Ingredient::ComoduleAlgebra { .. } => DkKind::ComoduleAlgebra,
            Ingredient::ComoduleCoalgebra { .. } => DkKind::ComoduleCoalgebra,
        }
    }

    pub fn side(&self) -> Side {
        match self {
            Ingredient::ModuleAlgebra { side, .. }
            | Ingredient::ModuleCoalgebra { side, .. }
            | Ingredient::ComoduleAlgebra { side, .. }
            | Ingredient::ComoduleCoalgebra { side, .. } => *side,
        }
    }

    pub fn map(&self) -> &Matrix {
        match self {
            Ingredient::ModuleAlgebra { action, .. } | Ingredient::ModuleCoalgebra { action, .. } => action,
            Ingredient::ComoduleAlgebra { coaction, .. } | Ingredient::ComoduleCoalgebra { coaction, .. } => coaction,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Ingredient::ModuleAlgebra { algebra, .. } | Ingredient::ComoduleAlgebra { algebra, .. } => algebra.dim(),
            Ingredient::ModuleCoalgebra { coalgebra, .. } | Ingredient::ComoduleCoalgebra { coalgebra, .. } => coalgebra.dim(),
        }
    }
}

fn swap_middle(fs: FieldSpec, dims: [usize; 4]) -> Matrix {
    permutation_map(fs, &dims, &[0, 2, 1, 3])
}

/// Checks the (co)module axioms and the compatibility identities of `x` with the bialgebra `(ha, hc)`.
pub fn verify_dk_compat(ha: &Algebra, hc: &Coalgebra, x: &Ingredient) -> Report {
    let side = x.side();
    let mut r = Report::new(format!("verify {} {}", side.name(), x.kind().name()));
    let h = ha.dim();
    let fs = ha.field();
    let n = x.dim();
    let shape_ok = match x {
        Ingredient::ModuleAlgebra { action, .. } | Ingredient::ModuleCoalgebra { action, .. } => {
            action.rows() == n && action.cols() == n * h
        }
        Ingredient::ComoduleAlgebra { coaction, .. } | Ingredient::ComoduleCoalgebra { coaction, .. } => {
            coaction.cols() == n && coaction.rows() == n * h
        }
    };
    if !r.check("shape", shape_ok, &format!("{}x{} structure map", x.map().rows(), x.map().cols())) {
        return r;
    }
    match x {
        Ingredient::ModuleAlgebra { algebra, action, .. } => {
            r.absorb("algebra", algebra.verify());
            r.absorb("module", Action::new(side, action.clone()).verify(ha));
            let mu = &algebra.mul;
            match side {
                Side::Right => {
                    let lhs = action * &lift(mu, 1, h);
                    let step = &swap_middle(fs, [n, n, h, h]) * &lift(&hc.comul, n * n, 1);
                    let rhs = mu * &(&action.kron(action) * &step);
                    r.check_maps("(a b) h = (a h1)(b h2)", &lhs, &rhs, &[n, n, h]);
                    let lhs = action * &algebra.unit.kron(&Matrix::identity(fs, h));
                    r.check_maps("1 h = e(h) 1", &lhs, &(&algebra.unit * &hc.counit), &[h]);
                }
                Side::Left => {
                    let lhs = action * &lift(mu, h, 1);
                    let step = &swap_middle(fs, [h, h, n, n]) * &lift(&hc.comul, 1, n * n);
                    let rhs = mu * &(&action.kron(action) * &step);
                    r.check_maps("h (a b) = (h1 a)(h2 b)", &lhs, &rhs, &[h, n, n]);
                    let lhs = action * &Matrix::identity(fs, h).kron(&algebra.unit);
                    r.check_maps("h 1 = e(h) 1", &lhs, &(&algebra.unit * &hc.counit), &[h]);
                }
            }
        }
        Ingredient::ModuleCoalgebra { coalgebra, action, .. } => {
            r.absorb("coalgebra", coalgebra.verify());
            r.absorb("module", Action::new(side, action.clone()).verify(ha));
            let delta = &coalgebra.comul;
            let (first, second) = match side {
                Side::Right => (delta.kron(&hc.comul), [n, n, h, h]),
                Side::Left => (hc.comul.kron(delta), [h, h, n, n]),
            };
            let lhs = delta * action;
            let rhs = &action.kron(action) * &(&swap_middle(fs, second) * &first);
            let dom = match side {
                Side::Right => [n, h],
                Side::Left => [h, n],
            };
            r.check_maps("comultiplicative: D(c h) = c1 h1 (x) c2 h2", &lhs, &rhs, &dom);
            let rhs = match side {
                Side::Right => coalgebra.counit.kron(&hc.counit),
                Side::Left => hc.counit.kron(&coalgebra.counit),
            };
            r.check_maps("counital: e(c h) = e(c) e(h)", &(&coalgebra.counit * action), &rhs, &dom);
        }
        Ingredient::ComoduleAlgebra { algebra, coaction, .. } => {
            r.absorb("algebra", algebra.verify());
            r.absorb("comodule", Coaction::new(side, coaction.clone()).verify(hc));
            let mu = &algebra.mul;
            let lhs = coaction * mu;
            let (rhs, unit_rhs) = match side {
                Side::Right => (
                    &mu.kron(&ha.mul) * &(&swap_middle(fs, [n, h, n, h]) * &coaction.kron(coaction)),
                    algebra.unit.kron(&ha.unit),
                ),
                Side::Left => (
                    &ha.mul.kron(mu) * &(&swap_middle(fs, [h, n, h, n]) * &coaction.kron(coaction)),
                    ha.unit.kron(&algebra.unit),
                ),
            };
            r.check_maps("multiplicative: rho(a b) = a0 b0 (x) a1 b1", &lhs, &rhs, &[n, n]);
            r.check_maps("unital: rho(1) = 1 (x) 1", &(coaction * &algebra.unit), &unit_rhs, &[1]);
        }
        Ingredient::ComoduleCoalgebra { coalgebra, coaction, .. } => {
            r.absorb("coalgebra", coalgebra.verify());
            r.absorb("comodule", Coaction::new(side, coaction.clone()).verify(hc));
            let delta = &coalgebra.comul;
            let pair = &coaction.kron(coaction) * delta;
            let (lhs, rhs, counit_lhs) = match side {
                Side::Right => (
                    apply_on_factor(delta, 1, h, coaction),
                    apply_on_factor(&ha.mul, n * n, 1, &(&swap_middle(fs, [n, h, n, h]) * &pair)),
                    apply_on_factor(&coalgebra.counit, 1, h, coaction),
                ),
                Side::Left => (
                    apply_on_factor(delta, h, 1, coaction),
                    apply_on_factor(&ha.mul, 1, n * n, &(&swap_middle(fs, [h, n, h, n]) * &pair)),
                    apply_on_factor(&coalgebra.counit, h, 1, coaction),
                ),
            };
            r.check_maps("comultiplicative: c0_1 c0_2 c1 = c1_0 c2_0 c1_1 c2_1", &lhs, &rhs, &[n]);
            r.check_maps("counital: e(c0) c1 = e(c) 1", &counit_lhs, &(&ha.unit * &coalgebra.counit), &[n]);
        }
    }
    r
}
