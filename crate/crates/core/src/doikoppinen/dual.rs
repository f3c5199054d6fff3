use serde::{Deserialize, Serialize};

use crate::duality::{dual_entwining, dual_module_r, DualModule};
use crate::error::{require, require_internal, Result};
use crate::exactlin::Matrix;
use crate::report::Report;
use crate::structures::{ModulePresentation, Side, StructurePresentation};

use super::ingredient::{verify_dk_compat, Ingredient};
use super::structure::{dk_entwining, verify_dk_morphism, DkStructure};

/// How an ingredient passes to the dual bialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualArrow {
    /// Same underlying space; an `H`-coaction becomes an `H*`-action and
    /// vice versa, switching sides.
    SameSpace,
    /// The dual space, with the transposed structure map on the same side.
    Transpose,
}

/// Reindexes between `H`-comodules and `H*`-modules on the same space.
fn reindex(x: &Ingredient, h: usize) -> Ingredient {
    let n = x.dim();
    let map = x.map();
    let fs = map.field();
    let to_action = |side: Side| match side {
        Side::Right => Matrix::from_fn(fs, n, h * n, |k, col| map.get(k * h + col / n, col % n).clone()),
        Side::Left => Matrix::from_fn(fs, n, n * h, |k, col| map.get((col % h) * n + k, col / h).clone()),
    };
    let to_coaction = |side: Side| match side {
        Side::Left => Matrix::from_fn(fs, n * h, n, |row, i| map.get(row / h, (row % h) * n + i).clone()),
        Side::Right => Matrix::from_fn(fs, h * n, n, |row, i| map.get(row % n, i * h + row / n).clone()),
    };
    match x {
        Ingredient::ComoduleAlgebra { side, algebra, .. } => Ingredient::ModuleAlgebra {
            side: side.opposite(),
            algebra: algebra.clone(),
            action: to_action(*side),
        },
        Ingredient::ComoduleCoalgebra { side, coalgebra, .. } => Ingredient::ModuleCoalgebra {
            side: side.opposite(),
            coalgebra: coalgebra.clone(),
            action: to_action(*side),
        },
        Ingredient::ModuleAlgebra { side, algebra, .. } => Ingredient::ComoduleAlgebra {
            side: side.opposite(),
            algebra: algebra.clone(),
            coaction: to_coaction(*side),
        },
        Ingredient::ModuleCoalgebra { side, coalgebra, .. } => Ingredient::ComoduleCoalgebra {
            side: side.opposite(),
            coalgebra: coalgebra.clone(),
            coaction: to_coaction(*side),
        },
    }
}

fn transpose(x: &Ingredient) -> Ingredient {
    match x {
        Ingredient::ModuleAlgebra { side, algebra, action } => Ingredient::ComoduleCoalgebra {
            side: *side,
            coalgebra: algebra.dual(),
            coaction: action.transpose(),
        },
        Ingredient::ModuleCoalgebra { side, coalgebra, action } => Ingredient::ComoduleAlgebra {
            side: *side,
            algebra: coalgebra.dual(),
            coaction: action.transpose(),
        },
        Ingredient::ComoduleAlgebra { side, algebra, coaction } => Ingredient::ModuleCoalgebra {
            side: *side,
            coalgebra: algebra.dual(),
            action: coaction.transpose(),
        },
        Ingredient::ComoduleCoalgebra { side, coalgebra, coaction } => Ingredient::ModuleAlgebra {
            side: *side,
            algebra: coalgebra.dual(),
            action: coaction.transpose(),
        },
    }
}

/// Passes `x` over `H` to an ingredient over `H*`; both ends are verified.
pub fn dualize_ingredient(hopf: &StructurePresentation, x: &Ingredient, arrow: DualArrow) -> Result<(StructurePresentation, Ingredient, Report)> {
    let mut r = Report::new(format!("dualize {} {}", x.side().name(), x.kind().name()));
    r.absorb("input", verify_dk_compat(hopf.algebra()?, hopf.coalgebra()?, x));
    let mut r = require(r)?;
    let dual = hopf.dual();
    let out = match arrow {
        DualArrow::SameSpace => reindex(x, hopf.dim()),
        DualArrow::Transpose => transpose(x),
    };
    r.note(format!("result: {} {}", out.side().name(), out.kind().name()));
    r.absorb("dual", verify_dk_compat(dual.algebra()?, dual.coalgebra()?, &out));
    Ok((dual, out, require_internal(r)?))
}

/// `(H*, C*, A*)` for `(H, A, C)`, with `C*` coacted on by `ρ_Cᵀ` and `A*`
/// acted on by `ϱ_Aᵀ`; its entwining is compared with `ψᵀ`.
pub fn dual_dk(s: &DkStructure) -> Result<(DkStructure, Report)> {
    let mut r = Report::new("dual Doi-Koppinen structure");
    let (e, _) = dk_entwining(s)?;
    let dual = DkStructure::new(
        s.hopf.dual(),
        s.coalgebra.dual(),
        s.action.transpose(),
        s.algebra.dual(),
        s.coaction.transpose(),
    )?;
    r.absorb("dual structure", dual.verify());
    let (de, _) = dk_entwining(&dual)?;
    r.check_maps("dual entwining = transpose of psi", &de.psi, &e.psi.transpose(), &[s.algebra.dim(), s.coalgebra.dim()]);
    let dd = dual_entwining(&e, None, None)?;
    r.check("agrees with the dual entwining", dd.dual == de, "dual entwinings differ");
    Ok((dual, require_internal(r)?))
}

/// `M_r` for a Doi-Koppinen module, checked to be a module over the dual structure.
pub fn dk_dual_module(s: &DkStructure, m: &ModulePresentation) -> Result<DualModule> {
    let (e, _) = dk_entwining(s)?;
    let dd = dual_entwining(&e, None, None)?;
    let out = dual_module_r(&dd, m)?;
    let (dual, _) = dual_dk(s)?;
    let (de, _) = dk_entwining(&dual)?;
    let mut r = out.report.clone();
    r.check("dual entwining is the dual Doi-Koppinen entwining", de == dd.dual, "entwinings differ");
    Ok(DualModule {
        report: require_internal(r)?,
        ..out
    })
}

/// `(β*, δ*, γ*)` from the dual of `t` to the dual of `s`, for a morphism `(β, γ, δ): s -> t`.
pub fn dual_dk_morphism(s: &DkStructure, t: &DkStructure, beta: &Matrix, gamma: &Matrix, delta: &Matrix) -> Result<Report> {
    let mut r = Report::new("dual Doi-Koppinen morphism");
    r.absorb("morphism", verify_dk_morphism(s, t, beta, gamma, delta)?);
    let mut r = require(r)?;
    let (ds, _) = dual_dk(s)?;
    let (dt, _) = dual_dk(t)?;
    r.absorb(
        "dual morphism",
        verify_dk_morphism(&dt, &ds, &beta.transpose(), &delta.transpose(), &gamma.transpose())?,
    );
    Ok(r)
}
