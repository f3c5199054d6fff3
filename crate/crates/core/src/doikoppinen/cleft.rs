use crate::error::{expect_dim, require, require_internal, Error, Result};
use crate::exactlin::tensor::swap_map;
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{
    compute_antipode, convolution_inverse, Algebra, Coalgebra, ConvolutionInverse, Side, StructurePresentation,
};

use super::ingredient::{verify_dk_compat, Ingredient};

/// A right `H`-comodule algebra `B` together with its coinvariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HExtension {
    pub hopf: StructurePresentation,
    pub algebra: Algebra,
    /// `B -> B ⊗ H`
    pub coaction: Matrix,
    pub coinvariants: Subspace,
}

/// A right `H`-module coalgebra `D` with its quotient `C = D / D H⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCoextension {
    pub hopf: StructurePresentation,
    pub coalgebra: Coalgebra,
    /// `D ⊗ H -> D`
    pub action: Matrix,
    /// `D H⁺` inside `D`.
    pub kernel: Subspace,
    pub quotient: Coalgebra,
    /// `C ⊗ H -> C`
    pub quotient_action: Matrix,
    /// `π: D -> C`
    pub projection: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralReport {
    pub report: Report,
    pub colinear: bool,
    pub total: bool,
    pub cleft: bool,
    pub inverse: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CointegralReport {
    pub report: Report,
    pub linear: bool,
    pub total: bool,
    pub cocleft: bool,
    pub inverse: Option<Matrix>,
}

/// `{b : ϱ(b) = b ⊗ 1}`, checked to be a unital subalgebra.
pub fn coinvariants(hopf: &StructurePresentation, b: &Algebra, coaction: &Matrix) -> Result<(Subspace, Report)> {
    let (ha, hc) = (hopf.algebra()?, hopf.coalgebra()?);
    let mut r = Report::new("coinvariants");
    let ing = Ingredient::ComoduleAlgebra {
        side: Side::Right,
        algebra: b.clone(),
        coaction: coaction.clone(),
    };
    r.absorb("comodule algebra", verify_dk_compat(ha, hc, &ing));
    let mut r = require(r)?;
    let fs = b.field();
    let trivial = Matrix::identity(fs, b.dim()).kron(&ha.unit);
    let sub = Subspace::kernel_of(&coaction.checked_sub(&trivial)?);
    r.check("contains 1", sub.contains(&b.one()), "unit is not coinvariant");
    'outer: for i in 0..sub.dim() {
        for j in 0..sub.dim() {
            let prod = b.product(&sub.basis_vector(i), &sub.basis_vector(j));
            if !r.check("closed under products", sub.contains(&prod), &format!("product of basis {i} and {j}")) {
                break 'outer;
            }
        }
    }
    Ok((sub, require_internal(r)?))
}

impl HExtension {
    pub fn new(hopf: StructurePresentation, algebra: Algebra, coaction: Matrix) -> Result<Self> {
        let (coinvariants, _) = coinvariants(&hopf, &algebra, &coaction)?;
        Ok(HExtension {
            hopf,
            algebra,
            coaction,
            coinvariants,
        })
    }

    /// `H` over its coinvariants, coacting on itself by `Δ`.
    pub fn regular(hopf: StructurePresentation) -> Result<Self> {
        let a = hopf.algebra()?.clone();
        let co = hopf.coalgebra()?.comul.clone();
        HExtension::new(hopf, a, co)
    }
}

/// Colinearity `ϱ γ = (γ ⊗ id) Δ`, totality `γ(1) = 1`, and convolution invertibility.
pub fn check_integral(ext: &HExtension, gamma: &Matrix) -> Result<IntegralReport> {
    let (ha, hc) = (ext.hopf.algebra()?, ext.hopf.coalgebra()?);
    let h = ha.dim();
    expect_dim("integral rows", ext.algebra.dim(), gamma.rows())?;
    expect_dim("integral columns", h, gamma.cols())?;
    let fs = ha.field();
    let mut r = Report::new("integral");
    let lhs = &ext.coaction * gamma;
    let rhs = &gamma.kron(&Matrix::identity(fs, h)) * &hc.comul;
    let mut colinear_rep = Report::new("integral");
    let colinear = colinear_rep.check_maps("H-colinear", &lhs, &rhs, &[h]);
    let total = gamma.apply(&ha.one()) == ext.algebra.one();
    let inverse = convolution_inverse(hc, &ext.algebra, gamma)?;
    let cleft = matches!(inverse, ConvolutionInverse::TwoSided(_));
    r.note(format!("colinear: {colinear}; total: {total}; convolution: {}", inverse.verdict()));
    r.absorb("colinearity", colinear_rep);
    let inverse = inverse.two_sided().cloned();
    Ok(IntegralReport {
        report: r,
        colinear,
        total,
        cleft,
        inverse,
    })
}

/// `D H⁺`, the coideal check, and the quotient module coalgebra on the
/// complement of the pivot columns.
pub fn coextension_quotient(hopf: StructurePresentation, coalgebra: Coalgebra, action: Matrix) -> Result<(HCoextension, Report)> {
    let (ha, hc) = (hopf.algebra()?.clone(), hopf.coalgebra()?.clone());
    let mut r = Report::new("coextension quotient");
    let ing = Ingredient::ModuleCoalgebra {
        side: Side::Right,
        coalgebra: coalgebra.clone(),
        action: action.clone(),
    };
    r.absorb("module coalgebra", verify_dk_compat(&ha, &hc, &ing));
    let mut r = require(r)?;
    let (d, h) = (coalgebra.dim(), ha.dim());
    let fs = ha.field();
    let h_plus = Subspace::kernel_of(&hc.counit);
    let mut gens = Vec::new();
    for i in 0..d {
        for b in 0..h_plus.dim() {
            let hv = h_plus.basis_vector(b);
            let mut e = vec![fs.zero(); d];
            e[i] = fs.one();
            let tensor = Matrix::column_vector(fs, e).kron(&Matrix::column_vector(fs, hv));
            gens.push((&action * &tensor).column(0));
        }
    }
    let kernel = Subspace::from_vectors(fs, d, &gens);
    let mut coideal_gens = Vec::new();
    for b in 0..kernel.dim() {
        let v = Matrix::column_vector(fs, kernel.basis_vector(b));
        for j in 0..d {
            let mut e = vec![fs.zero(); d];
            e[j] = fs.one();
            let ej = Matrix::column_vector(fs, e);
            coideal_gens.push(v.kron(&ej).column(0));
            coideal_gens.push(ej.kron(&v).column(0));
        }
    }
    let target = Subspace::from_vectors(fs, d * d, &coideal_gens);
    for b in 0..kernel.dim() {
        let v = kernel.basis_vector(b);
        if !r.check("coideal: D(DH+) in DH+ (x) D + D (x) DH+", target.contains(&coalgebra.comul.apply(&v)), &format!("basis vector {b}")) {
            break;
        }
        if !r.check("coideal: e(DH+) = 0", coalgebra.counit.apply(&v)[0].is_zero(), &format!("basis vector {b}")) {
            break;
        }
    }
    let comp = kernel.complement_indices();
    let c = comp.len();
    let projection = Matrix::from_columns(
        fs,
        c,
        &(0..d)
            .map(|j| {
                let mut e = vec![fs.zero(); d];
                e[j] = fs.one();
                let red = kernel.reduce(&e);
                comp.iter().map(|&k| red[k].clone()).collect::<Vec<Scalar>>()
            })
            .collect::<Vec<_>>(),
    );
    let section = Matrix::from_fn(fs, d, c, |row, col| if comp[col] == row { fs.one() } else { fs.zero() });
    let quotient = Coalgebra {
        comul: &(&projection.kron(&projection) * &coalgebra.comul) * &section,
        counit: &coalgebra.counit * &section,
    };
    let quotient_action = &(&projection * &action) * &section.kron(&Matrix::identity(fs, h));
    let qing = Ingredient::ModuleCoalgebra {
        side: Side::Right,
        coalgebra: quotient.clone(),
        action: quotient_action.clone(),
    };
    r.absorb("quotient", verify_dk_compat(&ha, &hc, &qing));
    r.absorb("projection", coalgebra.check_morphism(&quotient, &projection));
    r.check_maps(
        "projection H-linear",
        &(&projection * &action),
        &(&quotient_action * &projection.kron(&Matrix::identity(fs, h))),
        &[d, h],
    );
    let coext = HCoextension {
        hopf,
        coalgebra,
        action,
        kernel,
        quotient,
        quotient_action,
        projection,
    };
    Ok((coext, require_internal(r)?))
}

/// `H`-linearity, totality `ε_H ω = ε_D`, convolution invertibility, and
/// `ω⁻¹(d h) = S(h) ω⁻¹(d)` when invertible.
pub fn check_cointegral(coext: &HCoextension, omega: &Matrix) -> Result<CointegralReport> {
    let (ha, hc) = (coext.hopf.algebra()?, coext.hopf.coalgebra()?);
    let (d, h) = (coext.coalgebra.dim(), ha.dim());
    expect_dim("cointegral rows", h, omega.rows())?;
    expect_dim("cointegral columns", d, omega.cols())?;
    let fs = ha.field();
    let mut r = Report::new("cointegral");
    let mut lin = Report::new("cointegral");
    let linear = lin.check_maps(
        "H-linear",
        &(omega * &coext.action),
        &(&ha.mul * &omega.kron(&Matrix::identity(fs, h))),
        &[d, h],
    );
    let total = &hc.counit * omega == coext.coalgebra.counit;
    let inverse = convolution_inverse(&coext.coalgebra, ha, omega)?;
    let cocleft = matches!(inverse, ConvolutionInverse::TwoSided(_));
    r.note(format!("H-linear: {linear}; total: {total}; convolution: {}", inverse.verdict()));
    r.absorb("linearity", lin);
    let inverse = inverse.two_sided().cloned();
    if let Some(w) = &inverse {
        if linear {
            let s = coext
                .hopf
                .antipode_matrix()?
                .ok_or_else(|| Error::Precondition("H has no antipode".into()))?;
            let lhs = w * &coext.action;
            let rhs = &(&ha.mul * &s.kron(w)) * &swap_map(fs, d, h);
            r.check_maps("inverse(d h) = S(h) inverse(d)", &lhs, &rhs, &[d, h]);
        }
    }
    Ok(CointegralReport {
        report: r,
        linear,
        total,
        cocleft,
        inverse,
    })
}

/// Result of dualizing a coextension: the extension `D*` of `H*` and the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCoextension {
    pub extension: HExtension,
    /// `π*(C*)` inside `D*`.
    pub image: Subspace,
    pub integral: Option<IntegralReport>,
    pub report: Report,
}

/// `D*` as a right `H*`-comodule algebra, its coinvariants compared with
/// `π*(C*)`, and the transposed cointegral as an integral.
pub fn dualize_coextension(coext: &HCoextension, omega: Option<&Matrix>) -> Result<DualCoextension> {
    let mut r = Report::new("dualize coextension");
    let s = coext
        .hopf
        .antipode_matrix()?
        .ok_or_else(|| Error::Precondition("H has no antipode".into()))?;
    if !r.check("antipode bijective", s.inverse().is_some(), "antipode matrix is singular") {
        return Err(Error::Precondition("antipode is not bijective".into()));
    }
    let hdual = coext.hopf.dual();
    let dstar = coext.coalgebra.dual();
    let coaction = coext.action.transpose();
    let extension = HExtension::new(hdual, dstar, coaction)?;
    let image = Subspace::image_of(&coext.projection.transpose());
    r.check("coinvariants of D* = image of C*", extension.coinvariants == image, "subspaces differ");
    let mut integral = None;
    if let Some(w) = omega {
        let co = check_cointegral(coext, w)?;
        if co.cocleft {
            let dual_w = w.transpose();
            let ir = check_integral(&extension, &dual_w)?;
            r.check("transposed cointegral is colinear", ir.colinear, "not colinear");
            r.check("transposed cointegral is total", ir.total, "not total");
            r.check("transposed cointegral is cleft", ir.cleft, "not convolution invertible");
            if let (Some(inv), Some(w_inv)) = (&ir.inverse, &co.inverse) {
                r.check_maps("inverse of transpose = transpose of inverse", inv, &w_inv.transpose(), &[inv.cols()]);
            }
            integral = Some(ir);
        }
    }
    let report = require_internal(r)?;
    Ok(DualCoextension {
        extension,
        image,
        integral,
        report,
    })
}

/// Hopf criterion: `id_H` is a cleft integral iff the antipode exists.
pub fn hopf_criterion(hopf: &StructurePresentation) -> Result<Report> {
    let mut r = Report::new("Hopf criterion");
    let a = hopf.algebra()?;
    let c = hopf.coalgebra()?;
    let ext = HExtension::regular(hopf.clone())?;
    let ir = check_integral(&ext, &Matrix::identity(a.field(), a.dim()))?;
    let antipode = compute_antipode(a, c)?;
    r.note(format!("identity cleft: {}; antipode exists: {}", ir.cleft, antipode.is_some()));
    r.check("cleft iff antipode", ir.cleft == antipode.is_some(), "criterion violated");
    if let (Some(inv), Some(s)) = (&ir.inverse, &antipode) {
        r.check_maps("inverse of identity = antipode", inv, s, &[a.dim()]);
    }
    Ok(r)
}
