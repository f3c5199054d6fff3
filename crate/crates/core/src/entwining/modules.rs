use crate::error::{expect_dim, require_internal, Error, Result};
use crate::exactlin::tensor::{apply_on_factor, lift};
use crate::exactlin::{solve_linear, FieldSpec, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{Action, Coaction, ModulePresentation, Side};

use super::smash::{build_smash, SmashRing};
use super::structure::Entwining;

/// Compatibility `ϱ(m a) = Σ m0 a_ψ ⊗ m1^ψ` for a right action and right coaction.
pub fn verify_entwined_module(e: &Entwining, m: &ModulePresentation) -> Report {
    let mut r = Report::new("verify entwined module");
    let (rho, varrho) = match (m.right_action(), m.right_coaction()) {
        (Ok(a), Ok(c)) => (a, c),
        (Err(err), _) | (_, Err(err)) => {
            r.check("right action and right coaction present", false, &err.to_string());
            return r;
        }
    };
    if !r.absorb("components", m.verify(Some(&e.algebra), Some(&e.coalgebra))) {
        return r;
    }
    let (d, n, c) = (m.dim, e.alg_dim(), e.co_dim());
    let lhs = varrho * rho;
    let step = lift(varrho, 1, n);
    let step = apply_on_factor(&e.psi, d, 1, &step);
    let rhs = apply_on_factor(rho, 1, c, &step);
    r.check_maps("compatibility rho(m a) = m0 a_psi (x) m1^psi", &lhs, &rhs, &[d, n]);
    r
}

/// `A ⊗ C` with `(a' ⊗ c) a = Σ a' a_ψ ⊗ c^ψ` and coaction `id ⊗ Δ`.
pub fn free_entwined_module(e: &Entwining) -> ModulePresentation {
    let (n, d) = (e.alg_dim(), e.co_dim());
    let fs = e.algebra.field();
    let action = &e.algebra.mul.kron(&Matrix::identity(fs, d)) * &lift(&e.psi, n, 1);
    let coaction = lift(&e.coalgebra.comul, n, 1);
    ModulePresentation::both(Action::new(Side::Right, action), Coaction::new(Side::Right, coaction))
}

/// Entwined module to right module over the smash ring: `m·f = Σ m0 f(m1)`.
pub fn entwined_to_smash(e: &Entwining, m: &ModulePresentation) -> Result<ModulePresentation> {
    let rho = m.right_action()?;
    let varrho = m.right_coaction()?;
    let (dm, n, d) = (m.dim, e.alg_dim(), e.co_dim());
    let s = n * d;
    let fs = e.algebra.field();
    let map = Matrix::from_fn(fs, dm, dm * s, |k, col| {
        let (i, idx) = (col / s, col % s);
        let (p, q) = (idx / d, idx % d);
        let mut acc = fs.zero();
        for t in 0..dm {
            let coef = varrho.get(t * d + q, i);
            if !coef.is_zero() {
                acc.add_product(coef, rho.get(k, t * n + p));
            }
        }
        acc
    });
    let mut out = ModulePresentation::with_action(Action::new(Side::Right, map));
    out.dim = dm;
    Ok(out)
}

/// Right smash-ring module to entwined module: the `A`-action through
/// `a ↦ η ε · a` and the coaction `(α^ψ)^{-1} ρ_M`.
pub fn smash_to_entwined(e: &Entwining, m: &ModulePresentation) -> Result<ModulePresentation> {
    let rho_s = m.right_action()?;
    let (dm, n, d) = (m.dim, e.alg_dim(), e.co_dim());
    let s = n * d;
    expect_dim("smash module action columns", dm * s, rho_s.cols())?;
    let fs = e.algebra.field();
    let eps = e.coalgebra.counit_vec();
    let rho_a = Matrix::from_fn(fs, dm, dm * n, |k, col| {
        let (t, p) = (col / n, col % n);
        let mut acc = fs.zero();
        for (q, eq) in eps.iter().enumerate() {
            acc.add_product(eq, rho_s.get(k, t * s + p * d + q));
        }
        acc
    });
    let alpha = Matrix::from_fn(fs, dm * s, dm * d, |row, col| {
        let (k, idx) = (row / s, row % s);
        let (p, q1) = (idx / d, idx % d);
        let (t, q) = (col / d, col % d);
        if q1 == q {
            rho_a.get(k, t * n + p).clone()
        } else {
            fs.zero()
        }
    });
    let rho_hom = Matrix::from_fn(fs, dm * s, dm, |row, i| {
        let (k, idx) = (row / s, row % s);
        rho_s.get(k, i * s + idx).clone()
    });
    let sol = solve_linear(&alpha, &rho_hom)?
        .ok_or_else(|| Error::Precondition("module is not rational over the smash ring".into()))?;
    if sol.kernel.rows() != 0 {
        return Err(Error::Precondition("alpha map of the smash module is not injective".into()));
    }
    Ok(ModulePresentation::both(
        Action::new(Side::Right, rho_a),
        Coaction::new(Side::Right, sol.particular),
    ))
}

/// Entwined to smash and back, and the reverse round trip, as matrix identities.
pub fn entwined_smash_roundtrip(e: &Entwining, m: &ModulePresentation) -> Result<Report> {
    let mut r = Report::new("entwined/smash round trip");
    let (smash, _) = build_smash(e)?;
    r.absorb("entwined module", verify_entwined_module(e, m));
    if !r.passed() {
        return Err(Error::Unverified(Box::new(r)));
    }
    let sm = entwined_to_smash(e, m)?;
    r.absorb("smash module", sm.verify(Some(&smash.ring), None));
    let back = smash_to_entwined(e, &sm)?;
    let (d, n) = (m.dim, e.alg_dim());
    r.check_maps("action recovered", back.right_action()?, m.right_action()?, &[d, n]);
    r.check_maps("coaction recovered", back.right_coaction()?, m.right_coaction()?, &[d]);
    let again = entwined_to_smash(e, &back)?;
    r.check_maps("smash action recovered", again.right_action()?, sm.right_action()?, &[d, smash.ring.dim()]);
    require_internal(r)
}

pub fn smash_ring_of(e: &Entwining) -> Result<SmashRing> {
    Ok(build_smash(e)?.0)
}

/// Basis of the linear maps `f: k^cols -> k^rows` with `defect(f) = 0`.
pub fn solve_maps(
    fs: FieldSpec,
    rows: usize,
    cols: usize,
    defect: impl Fn(&Matrix) -> Result<Vec<Scalar>>,
) -> Result<Vec<Matrix>> {
    let total = rows * cols;
    let mut columns = Vec::with_capacity(total);
    let mut height = 0;
    for t in 0..total {
        let mut basis = Matrix::zeros(fs, rows, cols);
        basis.set(t / cols, t % cols, fs.one());
        let v = defect(&basis)?;
        height = v.len();
        columns.push(v);
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let kernel = Subspace::kernel_of(&Matrix::from_columns(fs, height, &columns));
    Ok((0..kernel.dim())
        .map(|b| {
            let v = kernel.basis_vector(b);
            Matrix::from_fn(fs, rows, cols, |i, j| v[i * cols + j].clone())
        })
        .collect())
}

fn entwined_defect(e: &Entwining, m: &ModulePresentation, n: &ModulePresentation, f: &Matrix) -> Result<(Matrix, Matrix)> {
    let (na, nc) = (e.alg_dim(), e.co_dim());
    let fs = e.algebra.field();
    let linear = (f * m.right_action()?).checked_sub(&(n.right_action()? * &f.kron(&Matrix::identity(fs, na))))?;
    let colinear = (n.right_coaction()? * f).checked_sub(&(&f.kron(&Matrix::identity(fs, nc)) * m.right_coaction()?))?;
    Ok((linear, colinear))
}

/// A-linearity and C-colinearity of `f: M -> N`.
pub fn hom_entwined(e: &Entwining, m: &ModulePresentation, n: &ModulePresentation, f: &Matrix) -> Result<Report> {
    expect_dim("morphism rows", n.dim, f.rows())?;
    expect_dim("morphism columns", m.dim, f.cols())?;
    let mut r = Report::new("entwined module morphism");
    let (na, fs) = (e.alg_dim(), e.algebra.field());
    let lhs = f * m.right_action()?;
    let rhs = n.right_action()? * &f.kron(&Matrix::identity(fs, na));
    r.check_maps("A-linear f(m a) = f(m) a", &lhs, &rhs, &[m.dim, na]);
    let lhs = n.right_coaction()? * f;
    let rhs = &f.kron(&Matrix::identity(fs, e.co_dim())) * m.right_coaction()?;
    r.check_maps("C-colinear", &lhs, &rhs, &[m.dim]);
    Ok(r)
}

/// Basis of `Hom_A^C(M, N)` from the joint homogeneous system.
pub fn hom_entwined_basis(e: &Entwining, m: &ModulePresentation, n: &ModulePresentation) -> Result<Vec<Matrix>> {
    let fs = e.algebra.field();
    solve_maps(fs, n.dim, m.dim, |f| {
        let (a, b) = entwined_defect(e, m, n, f)?;
        let mut v = a.entries().to_vec();
        v.extend_from_slice(b.entries());
        Ok(v)
    })
}
