//! Dual entwining structures, the dual-module functors and their adjunction.

use crate::entwining::{hom_entwined, hom_entwined_basis, verify_entwined_module, verify_entwining_morphism, Entwining};
use crate::error::{require, require_internal, Error, Result};
use crate::exactlin::{solve_linear, FieldSpec, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{restrict_action, Action, Algebra, Coalgebra, ModulePresentation, PairingPresentation, Side};

/// `(Ã, C̃, φ)` for an entwining `(A, C, ψ)`, with `Ã ⊆ C*` and `C̃ ⊆ A*`
/// given by RREF bases; the dual entwining is written in those bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDatum {
    pub source: Entwining,
    pub a_tilde: Subspace,
    pub c_tilde: Subspace,
    pub dual: Entwining,
    pub report: Report,
}

/// An entwined module obtained as a rational part of a dual space, with its
/// embedding into that dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualModule {
    pub module: ModulePresentation,
    pub subspace: Subspace,
    pub report: Report,
}

fn kron_vec(fs: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    Matrix::column_vector(fs, x.to_vec()).kron(&Matrix::column_vector(fs, y.to_vec())).column(0)
}

/// The matrix of `T` restricted to `x -> y`, in RREF basis coordinates.
pub fn restrict_map(t: &Matrix, x: &Subspace, y: &Subspace) -> Result<Matrix> {
    let fs = t.field();
    let mut out = Matrix::zeros(fs, y.dim(), x.dim());
    for b in 0..x.dim() {
        let image = t.apply(&x.basis_vector(b));
        let coords = y
            .coordinates(&image)
            .ok_or_else(|| Error::Closure(format!("image of basis vector {b} leaves the target subspace")))?;
        for (s, v) in coords.into_iter().enumerate() {
            out.set(s, b, v);
        }
    }
    Ok(out)
}

/// Coordinates of the columns of `target` in the basis given by the columns of `basis`.
fn solve_coordinates(basis: &Matrix, target: &Matrix, what: &str) -> Result<Matrix> {
    let sol = solve_linear(basis, target)?.ok_or_else(|| Error::Closure(what.to_string()))?;
    Ok(sol.particular)
}

fn subalgebra_of_dual(c: &Coalgebra, a_tilde: &Subspace) -> Result<Algebra> {
    let dual = c.dual();
    let fs = c.field();
    let r = a_tilde.dim();
    let eps = c.counit_vec();
    let unit_coords = a_tilde
        .coordinates(&eps)
        .ok_or_else(|| Error::Precondition("the subalgebra of C* must contain the counit".into()))?;
    let mut mul = Matrix::zeros(fs, r, r * r);
    for p in 0..r {
        for q in 0..r {
            let prod = dual.product(&a_tilde.basis_vector(p), &a_tilde.basis_vector(q));
            let coords = a_tilde
                .coordinates(&prod)
                .ok_or_else(|| Error::Closure(format!("subalgebra not closed: product of basis {p} and {q}")))?;
            for (s, v) in coords.into_iter().enumerate() {
                mul.set(s, p * r + q, v);
            }
        }
    }
    Ok(Algebra {
        mul,
        unit: Matrix::column_vector(fs, unit_coords),
    })
}

fn subcoalgebra_of_dual(a: &Algebra, c_tilde: &Subspace) -> Result<Coalgebra> {
    let dual = a.dual();
    let fs = a.field();
    let (r, n) = (c_tilde.dim(), a.dim());
    let pairs: Vec<Vec<Scalar>> = (0..r * r)
        .map(|idx| kron_vec(fs, &c_tilde.basis_vector(idx / r), &c_tilde.basis_vector(idx % r)))
        .collect();
    let basis = Matrix::from_columns(fs, n * n, &pairs);
    let images: Vec<Vec<Scalar>> = (0..r).map(|p| dual.comul.apply(&c_tilde.basis_vector(p))).collect();
    let comul = solve_coordinates(&basis, &Matrix::from_columns(fs, n * n, &images), "subcoalgebra not closed under comultiplication")?;
    let counit = Matrix::from_fn(fs, 1, r, |_, p| {
        let v = c_tilde.basis_vector(p);
        let mut acc = fs.zero();
        for (x, u) in v.iter().zip(a.one().iter()) {
            acc.add_product(x, u);
        }
        acc
    });
    Ok(Coalgebra { comul, counit })
}

/// Builds `(Ã, C̃, φ)`; defaults are the full duals `C*` and `A*`.
pub fn dual_entwining(e: &Entwining, a_tilde: Option<Subspace>, c_tilde: Option<Subspace>) -> Result<DualDatum> {
    let mut r = Report::new("dual entwining");
    r.absorb("source", e.verify());
    let mut r = require(r)?;
    let fs = e.algebra.field();
    let (n, d) = (e.alg_dim(), e.co_dim());
    let a_tilde = a_tilde.unwrap_or_else(|| Subspace::full(fs, d));
    let c_tilde = c_tilde.unwrap_or_else(|| Subspace::full(fs, n));
    if a_tilde.ambient() != d || c_tilde.ambient() != n {
        return Err(Error::Precondition("subspaces must live in C* and A*".into()));
    }
    if a_tilde.dim() == d && c_tilde.dim() == n {
        r.note("full duals: finite-dual = full dual (finite-dimensional regime)");
    }
    let alg = subalgebra_of_dual(&e.coalgebra, &a_tilde)?;
    r.check("counit lies in the subalgebra", true, "");
    r.check("subalgebra closed under convolution", true, "");
    let coalg = subcoalgebra_of_dual(&e.algebra, &c_tilde)?;
    r.check("subcoalgebra closed under comultiplication", true, "");
    let (ra, rc) = (a_tilde.dim(), c_tilde.dim());
    let psi_t = e.psi.transpose();
    let targets: Vec<Vec<Scalar>> = (0..ra * rc)
        .map(|idx| kron_vec(fs, &a_tilde.basis_vector(idx / rc), &c_tilde.basis_vector(idx % rc)))
        .collect();
    let target_basis = Matrix::from_columns(fs, d * n, &targets);
    let mut images = Vec::with_capacity(rc * ra);
    for p in 0..rc {
        for q in 0..ra {
            images.push(psi_t.apply(&kron_vec(fs, &c_tilde.basis_vector(p), &a_tilde.basis_vector(q))));
        }
    }
    let mut phi_cols = Vec::with_capacity(images.len());
    for (idx, img) in images.iter().enumerate() {
        let sol = solve_linear(&target_basis, &Matrix::column_vector(fs, img.clone()))?;
        match sol {
            Some(s) => phi_cols.push(s.particular.column(0)),
            None => {
                return Err(Error::Closure(format!(
                    "psi*(C~ (x) A~) not inside A~ (x) C~: witness pair (f~ {}, g~ {})",
                    idx / ra,
                    idx % ra
                )))
            }
        }
    }
    r.check("closure psi*(C~ (x) A~) in A~ (x) C~", true, "");
    let phi = Matrix::from_columns(fs, ra * rc, &phi_cols);
    let dual = Entwining::new(alg, coalg, phi)?;
    r.absorb("dual entwining", dual.verify());
    let report = require_internal(r)?;
    Ok(DualDatum {
        source: e.clone(),
        a_tilde,
        c_tilde,
        dual,
        report,
    })
}

impl DualDatum {
    /// `(Ã, C)` with `⟨g̃, c⟩ = g̃(c)`.
    pub fn pairing_a_tilde_c(&self) -> PairingPresentation {
        PairingPresentation {
            algebra: self.dual.algebra.clone(),
            coalgebra: self.source.coalgebra.clone(),
            pairing: self.a_tilde.basis().clone(),
        }
    }

    /// `(A, C̃)` with `⟨a, f̃⟩ = f̃(a)`.
    pub fn pairing_a_c_tilde(&self) -> PairingPresentation {
        PairingPresentation {
            algebra: self.source.algebra.clone(),
            coalgebra: self.dual.coalgebra.clone(),
            pairing: self.c_tilde.basis().transpose(),
        }
    }
}

/// `M_r = Rat^{C̃}(_A M*)` with `(a h)(m) = h(m a)` and `(h g̃)(m) = h(m0 g̃(m1))`.
pub fn dual_module_r(dd: &DualDatum, m: &ModulePresentation) -> Result<DualModule> {
    let mut r = Report::new("dual module M_r");
    r.absorb("M", verify_entwined_module(&dd.source, m));
    let mut r = require(r)?;
    let pairing = dd.pairing_a_c_tilde();
    pairing.require_alpha("(A, C~)")?;
    let fs = m.field;
    let dm = m.dim;
    let dc = dd.source.co_dim();
    let left_a = Action::new(Side::Right, m.right_action()?.clone()).dual();
    let cstar_action = m.right_coaction()?.transpose();
    let ra = dd.a_tilde.dim();
    let a_tilde_action = Matrix::from_fn(fs, dm, dm * ra, |k, col| {
        let (i, s) = (col / ra, col % ra);
        let g = dd.a_tilde.basis().row(s);
        let mut acc = fs.zero();
        for (l, gl) in g.iter().enumerate() {
            acc.add_product(gl, cstar_action.get(k, i * dc + l));
        }
        acc
    });
    let rat = pairing.rational_submodule(&left_a)?;
    let action = restrict_action(&Action::new(Side::Right, a_tilde_action), ra, &rat.subspace)?;
    let module = ModulePresentation::both(action, rat.coaction);
    let mut module = module;
    module.dim = rat.subspace.dim();
    r.note(format!("dim M_r = {} of dim M* = {dm}", module.dim));
    r.absorb("M_r", verify_entwined_module(&dd.dual, &module));
    Ok(DualModule {
        module,
        subspace: rat.subspace,
        report: require_internal(r)?,
    })
}

/// `K^r = Rat^C(_Ã K*)` with `(g̃ f)(k) = f(k g̃)` and `(f a)(k) = f(k0 ⟨a, k1⟩)`.
pub fn dual_module_upper_r(dd: &DualDatum, k: &ModulePresentation) -> Result<DualModule> {
    let mut r = Report::new("dual module K^r");
    r.absorb("K", verify_entwined_module(&dd.dual, k));
    let mut r = require(r)?;
    let pairing = dd.pairing_a_tilde_c();
    pairing.require_alpha("(A~, C)")?;
    let fs = k.field;
    let dk = k.dim;
    let n = dd.source.alg_dim();
    let rc = dd.c_tilde.dim();
    let left = Action::new(Side::Right, k.right_action()?.clone()).dual();
    let ctilde_star_action = k.right_coaction()?.transpose();
    let a_action = Matrix::from_fn(fs, dk, dk * n, |row, col| {
        let (i, j) = (col / n, col % n);
        let mut acc = fs.zero();
        for t in 0..rc {
            acc.add_product(dd.c_tilde.basis().get(t, j), ctilde_star_action.get(row, i * rc + t));
        }
        acc
    });
    let rat = pairing.rational_submodule(&left)?;
    let action = restrict_action(&Action::new(Side::Right, a_action), n, &rat.subspace)?;
    let mut module = ModulePresentation::both(action, rat.coaction);
    module.dim = rat.subspace.dim();
    r.note(format!("dim K^r = {} of dim K* = {dk}", module.dim));
    r.absorb("K^r", verify_entwined_module(&dd.source, &module));
    Ok(DualModule {
        module,
        subspace: rat.subspace,
        report: require_internal(r)?,
    })
}

/// Transposes a pairing-valued map: from `F[i][j] = f(m_j)(k_i)` to coordinates in `target`.
fn transpose_into(fs: FieldSpec, values: &Matrix, target: &Subspace) -> Result<Matrix> {
    let rows = values.rows();
    let mut out = Matrix::zeros(fs, target.dim(), rows);
    for i in 0..rows {
        let coords = target
            .coordinates(values.row(i))
            .ok_or_else(|| Error::Closure(format!("functional {i} is not rational")))?;
        for (s, v) in coords.into_iter().enumerate() {
            out.set(s, i, v);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub hom_m_kr: Vec<Matrix>,
    pub hom_k_mr: Vec<Matrix>,
    pub report: Report,
}

/// `Λ: Hom_A^C(M, K^r) -> Hom_Ã^C̃(K, M_r)` and `Γ` in the other direction,
/// checked to be mutually inverse on computed bases.
pub fn adjunction_check(dd: &DualDatum, m: &ModulePresentation, k: &ModulePresentation) -> Result<Adjunction> {
    let mut r = Report::new("adjunction");
    let fs = m.field;
    let mr = dual_module_r(dd, m)?;
    let kr = dual_module_upper_r(dd, k)?;
    let hom_m_kr = hom_entwined_basis(&dd.source, m, &kr.module)?;
    let hom_k_mr = hom_entwined_basis(&dd.dual, k, &mr.module)?;
    r.note(format!("dim Hom(M, K^r) = {}, dim Hom(K, M_r) = {}", hom_m_kr.len(), hom_k_mr.len()));
    let lambda = |f: &Matrix| -> Result<Matrix> {
        let values = &kr.subspace.basis().transpose() * f;
        transpose_into(fs, &values, &mr.subspace)
    };
    let gamma = |g: &Matrix| -> Result<Matrix> {
        let values = &mr.subspace.basis().transpose() * g;
        transpose_into(fs, &values, &kr.subspace)
    };
    for (b, f) in hom_m_kr.iter().enumerate() {
        let lf = lambda(f)?;
        if !r.absorb(&format!("Lambda(f{b})"), hom_entwined(&dd.dual, k, &mr.module, &lf)?) {
            break;
        }
        r.check_maps("Gamma Lambda = id", &gamma(&lf)?, f, &[m.dim]);
    }
    for (b, g) in hom_k_mr.iter().enumerate() {
        let gg = gamma(g)?;
        if !r.absorb(&format!("Gamma(g{b})"), hom_entwined(&dd.source, m, &kr.module, &gg)?) {
            break;
        }
        r.check_maps("Lambda Gamma = id", &lambda(&gg)?, g, &[k.dim]);
    }
    r.check("equal Hom dimensions", hom_m_kr.len() == hom_k_mr.len(), "dimensions differ");
    let mrr = dual_module_upper_r(dd, &mr.module)?;
    let lambda_m = mr.subspace.basis().clone();
    for j in 0..m.dim {
        if !r.check("lambda_M(M) in (M_r)^r", mrr.subspace.contains(&lambda_m.column(j)), &format!("element {j}")) {
            break;
        }
    }
    let krr = dual_module_r(dd, &kr.module)?;
    let lambda_k = kr.subspace.basis().clone();
    for j in 0..k.dim {
        if !r.check("lambda_K(K) in (K^r)_r", krr.subspace.contains(&lambda_k.column(j)), &format!("element {j}")) {
            break;
        }
    }
    Ok(Adjunction {
        hom_m_kr,
        hom_k_mr,
        report: require_internal(r)?,
    })
}

/// `f_r: N_r -> M_r`, `h ↦ h ∘ f`, for an entwined morphism `f: M -> N`.
pub fn dual_morphism_r(dd: &DualDatum, m: &ModulePresentation, n: &ModulePresentation, f: &Matrix) -> Result<Matrix> {
    let rep = hom_entwined(&dd.source, m, n, f)?;
    require(rep)?;
    let mr = dual_module_r(dd, m)?;
    let nr = dual_module_r(dd, n)?;
    restrict_map(&f.transpose(), &nr.subspace, &mr.subspace)
}

/// The dual of an entwining morphism `(γ, δ)`: `(δ*, γ*)` from the dual of
/// the target to the dual of the source.
pub fn dual_entwining_morphism(de: &DualDatum, df: &DualDatum, gamma: &Matrix, delta: &Matrix) -> Result<Report> {
    let mut r = Report::new("dual entwining morphism");
    r.absorb("morphism", verify_entwining_morphism(&de.source, &df.source, gamma, delta));
    let mut r = require(r)?;
    let delta_star = restrict_map(&delta.transpose(), &df.a_tilde, &de.a_tilde)
        .map_err(|e| Error::Closure(format!("delta*(B~) not inside A~: {e}")))?;
    r.check("delta*(B~) in A~", true, "");
    let gamma_star = restrict_map(&gamma.transpose(), &df.c_tilde, &de.c_tilde)
        .map_err(|e| Error::Closure(format!("gamma*(D~) not inside C~: {e}")))?;
    r.check("gamma*(D~) in C~", true, "");
    r.absorb("dual pair", verify_entwining_morphism(&df.dual, &de.dual, &delta_star, &gamma_star));
    Ok(r)
}

/// Dual of the dual with full duals, compared with the original. Reported, not asserted.
pub fn double_dual_report(e: &Entwining) -> Result<Report> {
    let mut r = Report::new("double dual");
    let first = dual_entwining(e, None, None)?;
    let second = dual_entwining(&first.dual, None, None)?;
    let same = second.dual == *e;
    r.note(format!("double dual agrees with the original under evaluation: {same}"));
    Ok(r)
}
