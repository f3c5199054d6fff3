//! Named example structures.

mod hopf;

pub use hopf::*;

use crate::doikoppinen::{
    alt_dk_entwining, check_cointegral, check_integral, coextension_quotient, dk_entwining, verify_dk_compat,
    verify_dk_morphism, DkStructure, HExtension, Ingredient,
};
use crate::entwining::{free_entwined_module, verify_entwined_module, Entwining};
use crate::error::{require, Error, Result};
use crate::exactlin::{FieldSpec, Matrix};
use crate::report::Report;
use crate::structures::{Action, Coaction, ModulePresentation, Side, StructurePresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogObject {
    Structure(StructurePresentation),
    Entwining(Entwining),
    Dk(DkStructure),
    /// A right module algebra and a right comodule coalgebra over `hopf`.
    AltDk {
        hopf: StructurePresentation,
        algebra: Ingredient,
        coalgebra: Ingredient,
    },
    /// An entwined module over the catalog entwining `entwining`.
    Module {
        entwining: String,
        module: ModulePresentation,
    },
    Extension {
        extension: HExtension,
        integral: Matrix,
    },
    Coextension {
        hopf: StructurePresentation,
        coalgebra: crate::structures::Coalgebra,
        action: Matrix,
        cointegral: Matrix,
    },
    /// `(β, γ, δ)` between two catalog Doi-Koppinen structures.
    DkMorphism {
        source: String,
        target: String,
        beta: Matrix,
        gamma: Matrix,
        delta: Matrix,
    },
}

impl CatalogObject {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogObject::Structure(_) => "structure",
            CatalogObject::Entwining(_) => "entwining",
            CatalogObject::Dk(_) => "dk",
            CatalogObject::AltDk { .. } => "alt-dk",
            CatalogObject::Module { .. } => "module",
            CatalogObject::Extension { .. } => "extension",
            CatalogObject::Coextension { .. } => "coextension",
            CatalogObject::DkMorphism { .. } => "dk-morphism",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub field: FieldSpec,
    pub object: CatalogObject,
}

const HOPF: [&str; 5] = ["trivial", "qc2", "qc3", "f5c5", "sweedler4"];
const DUALS: [&str; 3] = ["qc2_dual", "qc3_dual", "f5c5_dual"];
const HOPF_MODULES: [&str; 4] = ["qc2", "qc3", "f5c5", "sweedler4"];
const LONG: [&str; 2] = ["long_poly2_c2", "long_qc2"];
const ALT: [&str; 1] = ["schauenburg_qc2"];
const CLEFT: [&str; 2] = ["qc2", "sweedler4"];

fn f5() -> FieldSpec {
    FieldSpec::Prime(5)
}

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn hopf_by_name(name: &str) -> Option<StructurePresentation> {
    Some(match name {
        "trivial" => trivial(q()),
        "qc2" => cyclic_group_algebra(q(), 2),
        "qc3" => cyclic_group_algebra(q(), 3),
        "f5c5" => cyclic_group_algebra(f5(), 5),
        "sweedler4" => sweedler(q()),
        "qc2_dual" => cyclic_group_algebra(q(), 2).dual(),
        "qc3_dual" => cyclic_group_algebra(q(), 3).dual(),
        "f5c5_dual" => cyclic_group_algebra(f5(), 5).dual(),
        _ => return None,
    })
}

fn description_of_hopf(name: &str) -> String {
    match name {
        "trivial" => "one-dimensional bialgebra k".into(),
        "sweedler4" => "Sweedler's four-dimensional Hopf algebra over Q".into(),
        n if n.ends_with("_dual") => format!("dual Hopf algebra of {}", n.trim_end_matches("_dual")),
        n => format!("group algebra {n}"),
    }
}

/// All entry names in a fixed order.
pub fn catalog_names() -> Vec<String> {
    let mut out: Vec<String> = HOPF.iter().chain(DUALS.iter()).map(|s| s.to_string()).collect();
    out.extend(entwining_names());
    out.extend(module_names());
    out.extend(CLEFT.iter().map(|h| format!("cleft_{h}")));
    out.extend(CLEFT.iter().map(|h| format!("cocleft_{h}")));
    out.extend(["auto_qc3", "auto_sweedler4"].iter().map(|s| s.to_string()));
    out
}

/// Names that resolve to an entwining through `catalog_entwining`: flips,
/// Doi-Koppinen triples and the alternative instance.
pub fn entwining_names() -> Vec<String> {
    let mut out: Vec<String> = HOPF.iter().chain(DUALS.iter()).map(|h| format!("flip_{h}")).collect();
    out.extend(dk_names());
    out.extend(ALT.iter().map(|s| s.to_string()));
    out
}

pub fn dk_names() -> Vec<String> {
    let mut out: Vec<String> = HOPF_MODULES.iter().map(|h| format!("hopfmod_{h}")).collect();
    out.extend(LONG.iter().map(|s| s.to_string()));
    out
}

/// Names of catalog entwined modules.
pub fn module_names() -> Vec<String> {
    let mut out: Vec<String> = HOPF.iter().chain(DUALS.iter()).map(|h| format!("free_flip_{h}")).collect();
    out.extend(dk_names().into_iter().map(|s| format!("free_{s}")));
    out.extend(ALT.iter().map(|s| format!("free_{s}")));
    out.extend(HOPF_MODULES.iter().map(|h| format!("regular_hopfmod_{h}")));
    out
}

/// The Doi-Koppinen structure named by a `hopfmod_*` or `long_*` entry.
pub fn catalog_dk(name: &str) -> Result<DkStructure> {
    dk_by_name(name).ok_or_else(|| unknown(name))
}

fn dk_by_name(name: &str) -> Option<DkStructure> {
    if let Some(h) = name.strip_prefix("hopfmod_") {
        return DkStructure::hopf_modules(hopf_by_name(h)?).ok();
    }
    match name {
        "long_poly2_c2" => DkStructure::long(trivial(q()), truncated_polynomials(q(), 2), grouplike_coalgebra(q(), 2)).ok(),
        "long_qc2" => {
            let h = cyclic_group_algebra(q(), 2);
            DkStructure::long(trivial(q()), h.algebra.clone()?, h.coalgebra.clone()?).ok()
        }
        _ => None,
    }
}

/// `H = QC2`, `A = H*` with `(f ↼ h)(x) = f(h x)`, `C = H*` with `δ_g ↦ δ_g ⊗ g`.
fn schauenburg(fs: FieldSpec, n: usize) -> (StructurePresentation, Ingredient, Ingredient) {
    let hopf = cyclic_group_algebra(fs, n);
    let ha = hopf.algebra.clone().expect("group algebra");
    let hc = hopf.coalgebra.clone().expect("group algebra");
    let mul = &ha.mul;
    let action = Matrix::from_fn(fs, n, n * n, |k, col| mul.get(col / n, (col % n) * n + k).clone());
    let algebra = Ingredient::ModuleAlgebra {
        side: Side::Right,
        algebra: hc.dual(),
        action,
    };
    let coaction = Matrix::from_fn(fs, n * n, n, |row, i| {
        if row == i * n + i {
            fs.one()
        } else {
            fs.zero()
        }
    });
    let coalgebra = Ingredient::ComoduleCoalgebra {
        side: Side::Right,
        coalgebra: ha.dual(),
        coaction,
    };
    (hopf, algebra, coalgebra)
}

/// The entwining named by a flip, Doi-Koppinen or alternative entry.
pub fn catalog_entwining(name: &str) -> Result<Entwining> {
    if let Some(h) = name.strip_prefix("flip_") {
        let s = hopf_by_name(h).ok_or_else(|| unknown(name))?;
        return Ok(Entwining::flip(s.algebra()?.clone(), s.coalgebra()?.clone()));
    }
    if let Some(s) = dk_by_name(name) {
        return Ok(dk_entwining(&s)?.0);
    }
    if name == "schauenburg_qc2" {
        let (h, a, c) = schauenburg(q(), 2);
        return Ok(alt_dk_entwining(&h, &a, &c)?.0);
    }
    Err(unknown(name))
}

fn unknown(name: &str) -> Error {
    Error::Precondition(format!("unknown catalog entry '{name}'"))
}

/// `x ↦ 2x` on the Sweedler algebra, or `g ↦ g²` on `QC3`.
fn automorphism(name: &str) -> Option<(String, Matrix)> {
    match name {
        "auto_qc3" => Some((
            "hopfmod_qc3".into(),
            Matrix::from_ints(q(), &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        )),
        "auto_sweedler4" => Some((
            "hopfmod_sweedler4".into(),
            Matrix::from_ints(q(), &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]),
        )),
        _ => None,
    }
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    let entry = |description: String, field: FieldSpec, object: CatalogObject| CatalogEntry {
        name: name.to_string(),
        description,
        field,
        object,
    };
    if let Some(h) = hopf_by_name(name) {
        return Ok(entry(description_of_hopf(name), h.field, CatalogObject::Structure(h)));
    }
    if let Some(h) = name.strip_prefix("flip_") {
        let e = catalog_entwining(name)?;
        return Ok(entry(format!("flip entwining over {h}"), e.algebra.field(), CatalogObject::Entwining(e)));
    }
    if let Some(s) = dk_by_name(name) {
        let description = match name.strip_prefix("hopfmod_") {
            Some(h) => format!("Hopf modules ({h}, {h}, {h})"),
            None if name == "long_qc2" => "Long dimodules: QC2 as algebra and as coalgebra, trivial bialgebra".into(),
            None => "Long dimodules: k[x]/(x^2) and the grouplike coalgebra on 2 points, trivial bialgebra".into(),
        };
        return Ok(entry(description, s.algebra.field(), CatalogObject::Dk(s)));
    }
    if name == "schauenburg_qc2" {
        let (hopf, algebra, coalgebra) = schauenburg(q(), 2);
        return Ok(entry(
            "alternative Doi-Koppinen instance: QC2* module algebra, QC2* comodule coalgebra".into(),
            q(),
            CatalogObject::AltDk { hopf, algebra, coalgebra },
        ));
    }
    if let Some(rest) = name.strip_prefix("regular_") {
        let s = dk_by_name(rest).filter(|_| rest.starts_with("hopfmod_")).ok_or_else(|| unknown(name))?;
        let h = s.hopf.clone();
        let module = ModulePresentation::both(
            Action::new(Side::Right, h.algebra()?.mul.clone()),
            Coaction::new(Side::Right, h.coalgebra()?.comul.clone()),
        );
        return Ok(entry(
            format!("{} as a Hopf module over itself", rest.trim_start_matches("hopfmod_")),
            h.field,
            CatalogObject::Module {
                entwining: rest.to_string(),
                module,
            },
        ));
    }
    if let Some(rest) = name.strip_prefix("free_") {
        let e = catalog_entwining(rest)?;
        return Ok(entry(
            format!("free entwined module A (x) C over {rest}"),
            e.algebra.field(),
            CatalogObject::Module {
                entwining: rest.to_string(),
                module: free_entwined_module(&e),
            },
        ));
    }
    if let Some(h) = name.strip_prefix("cleft_") {
        if CLEFT.contains(&h) {
            let hopf = hopf_by_name(h).ok_or_else(|| unknown(name))?;
            let n = hopf.dim();
            let extension = HExtension::regular(hopf)?;
            return Ok(entry(
                format!("{h} over its coinvariants with integral id"),
                extension.hopf.field,
                CatalogObject::Extension {
                    integral: Matrix::identity(extension.hopf.field, n),
                    extension,
                },
            ));
        }
    }
    if let Some(h) = name.strip_prefix("cocleft_") {
        if CLEFT.contains(&h) {
            let hopf = hopf_by_name(h).ok_or_else(|| unknown(name))?;
            let n = hopf.dim();
            let fs = hopf.field;
            return Ok(entry(
                format!("{h} acting on itself with cointegral id"),
                fs,
                CatalogObject::Coextension {
                    coalgebra: hopf.coalgebra()?.clone(),
                    action: hopf.algebra()?.mul.clone(),
                    hopf,
                    cointegral: Matrix::identity(fs, n),
                },
            ));
        }
    }
    if let Some((target, m)) = automorphism(name) {
        return Ok(entry(
            format!("Hopf automorphism of {}", target.trim_start_matches("hopfmod_")),
            q(),
            CatalogObject::DkMorphism {
                source: target.clone(),
                target,
                beta: m.clone(),
                gamma: m.clone(),
                delta: m,
            },
        ));
    }
    Err(unknown(name))
}

/// Runs the verification matching the entry's kind.
pub fn verify_entry(entry: &CatalogEntry) -> Result<Report> {
    let mut r = Report::new(format!("catalog {}", entry.name));
    match &entry.object {
        CatalogObject::Structure(s) => {
            r.absorb("structure", s.verify());
        }
        CatalogObject::Entwining(e) => {
            r.absorb("entwining", e.verify());
        }
        CatalogObject::Dk(s) => {
            r.absorb("Doi-Koppinen", s.verify());
        }
        CatalogObject::AltDk { hopf, algebra, coalgebra } => {
            let (ha, hc) = (hopf.algebra()?, hopf.coalgebra()?);
            r.absorb("algebra", verify_dk_compat(ha, hc, algebra));
            r.absorb("coalgebra", verify_dk_compat(ha, hc, coalgebra));
            if r.passed() {
                r.absorb("entwining", alt_dk_entwining(hopf, algebra, coalgebra)?.1);
            }
        }
        CatalogObject::Module { entwining, module } => {
            let e = catalog_entwining(entwining)?;
            r.absorb("entwined module", verify_entwined_module(&e, module));
        }
        CatalogObject::Extension { extension, integral } => {
            let ir = check_integral(extension, integral)?;
            r.absorb("integral", ir.report);
            r.check("integral is cleft", ir.colinear && ir.total && ir.cleft, "not a cleft integral");
        }
        CatalogObject::Coextension {
            hopf,
            coalgebra,
            action,
            cointegral,
        } => {
            let (coext, rep) = coextension_quotient(hopf.clone(), coalgebra.clone(), action.clone())?;
            r.absorb("quotient", rep);
            let cr = check_cointegral(&coext, cointegral)?;
            r.absorb("cointegral", cr.report);
            r.check("cointegral is cocleft", cr.linear && cr.total && cr.cocleft, "not a cocleft cointegral");
        }
        CatalogObject::DkMorphism {
            source,
            target,
            beta,
            gamma,
            delta,
        } => {
            let s = dk_by_name(source).ok_or_else(|| unknown(source))?;
            let t = dk_by_name(target).ok_or_else(|| unknown(target))?;
            r.absorb("morphism", verify_dk_morphism(&s, &t, beta, gamma, delta)?);
        }
    }
    require(r)
}
