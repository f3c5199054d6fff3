use crate::error::{require_internal, Result};
use crate::exactlin::tensor::{apply_on_factor, lift};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{Action, Algebra, Side};

use super::coring::{build_coring, Coring};
use super::structure::Entwining;

/// `Hom(C, A)` with the twisted product `(f·g)(c) = Σ f(c2)_ψ g(c1^ψ)`.
/// Basis `E_{i,k}: c_k ↦ a_i` at index `i * dim C + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashRing {
    pub alg_dim: usize,
    pub co_dim: usize,
    pub ring: Algebra,
    /// `A ⊗ S -> S`, `(a f)(c) = Σ a_ψ f(c^ψ)`
    pub left_action: Matrix,
    /// `S ⊗ A -> S`, `(f a)(c) = f(c) a`
    pub right_action: Matrix,
}

pub fn hom_to_vec(f: &Matrix) -> Vec<Scalar> {
    f.entries().to_vec()
}

pub fn vec_to_hom(fs: FieldSpec, v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(fs, rows, cols, |i, k| v[i * cols + k].clone())
}

pub(crate) fn basis_hom(e: &Entwining, s: usize) -> Matrix {
    let f = e.algebra.field();
    let mut m = Matrix::zeros(f, e.alg_dim(), e.co_dim());
    m.set(s / e.co_dim(), s % e.co_dim(), f.one());
    m
}

/// `μ (id ⊗ g) ψ (id_C ⊗ f) Δ`.
pub fn smash_product(e: &Entwining, f: &Matrix, g: &Matrix) -> Matrix {
    let (n, d) = (e.alg_dim(), e.co_dim());
    let step = apply_on_factor(f, d, 1, &e.coalgebra.comul);
    let step = &e.psi * &step;
    let step = apply_on_factor(g, n, 1, &step);
    &e.algebra.mul * &step
}

/// `c ↦ Σ a_ψ f(c^ψ)`.
fn left_act(e: &Entwining, a: &[Scalar], f: &Matrix) -> Matrix {
    let fs = e.algebra.field();
    let embed = Matrix::identity(fs, e.co_dim()).kron(&Matrix::column_vector(fs, a.to_vec()));
    let step = &e.psi * &embed;
    &e.algebra.mul * &apply_on_factor(f, e.alg_dim(), 1, &step)
}

/// `c ↦ f(c) a`.
fn right_act(e: &Entwining, f: &Matrix, a: &[Scalar]) -> Matrix {
    let fs = e.algebra.field();
    &e.algebra.mul * &f.kron(&Matrix::column_vector(fs, a.to_vec()))
}

pub(crate) fn unit_vector(fs: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| if i == j { fs.one() } else { fs.zero() }).collect()
}

pub fn build_smash(e: &Entwining) -> Result<(SmashRing, Report)> {
    let (n, d) = (e.alg_dim(), e.co_dim());
    let fs = e.algebra.field();
    let s = n * d;
    let basis: Vec<Matrix> = (0..s).map(|i| basis_hom(e, i)).collect();
    let mut mul = Matrix::zeros(fs, s, s * s);
    for (p, fp) in basis.iter().enumerate() {
        for (q, gq) in basis.iter().enumerate() {
            let prod = hom_to_vec(&smash_product(e, fp, gq));
            for (t, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    mul.set(t, p * s + q, v);
                }
            }
        }
    }
    let unit = Matrix::column_vector(fs, hom_to_vec(&(&e.algebra.unit * &e.coalgebra.counit)));
    let mut left_action = Matrix::zeros(fs, s, n * s);
    let mut right_action = Matrix::zeros(fs, s, s * n);
    for j in 0..n {
        let a = unit_vector(fs, n, j);
        for (p, fp) in basis.iter().enumerate() {
            for (t, v) in hom_to_vec(&left_act(e, &a, fp)).into_iter().enumerate() {
                left_action.set(t, j * s + p, v);
            }
            for (t, v) in hom_to_vec(&right_act(e, fp, &a)).into_iter().enumerate() {
                right_action.set(t, p * n + j, v);
            }
        }
    }
    let ring = SmashRing {
        alg_dim: n,
        co_dim: d,
        ring: Algebra { mul, unit },
        left_action,
        right_action,
    };
    let report = verify_smash(e, &ring);
    Ok((ring, require_internal(report)?))
}

pub fn verify_smash(e: &Entwining, sr: &SmashRing) -> Report {
    let mut r = Report::new("build smash ring");
    let (n, s) = (sr.alg_dim, sr.ring.dim());
    let alg = &e.algebra;
    r.absorb("ring", sr.ring.verify());
    r.absorb("left A-module", Action::new(Side::Left, sr.left_action.clone()).verify(alg));
    r.absorb("right A-module", Action::new(Side::Right, sr.right_action.clone()).verify(alg));
    if !r.passed() {
        return r;
    }
    let mu = &sr.ring.mul;
    let (la, ra) = (&sr.left_action, &sr.right_action);
    r.check_maps(
        "bimodule (a f) b = a (f b)",
        &(ra * &lift(la, 1, n)),
        &(la * &lift(ra, n, 1)),
        &[n, s, n],
    );
    r.check_maps("(a f) g = a (f g)", &(mu * &lift(la, 1, s)), &(la * &lift(mu, n, 1)), &[n, s, s]);
    // (f a) g = f (a g): domain S ⊗ A ⊗ S
    r.check_maps("(f a) g = f (a g)", &(mu * &lift(ra, 1, s)), &(mu * &lift(la, s, 1)), &[s, n, s]);
    r.check_maps("(f g) a = f (g a)", &(ra * &lift(mu, 1, n)), &(mu * &lift(ra, s, 1)), &[s, s, n]);
    let one = &sr.ring.unit;
    r.check_maps(
        "a 1 = 1 a",
        &(la * &Matrix::identity(alg.field(), n).kron(one)),
        &(ra * &one.kron(&Matrix::identity(alg.field(), n))),
        &[n],
    );
    r
}

/// `ν: S -> Hom(𝒞, A)`, `f ↦ μ (id ⊗ f)`, and its inverse `h ↦ h (η ⊗ id)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuIso {
    /// `(nA * nA dC) x S`, columns are vectorized `ν(E_s)`.
    pub nu: Matrix,
    /// `S x (nA * nA dC)`
    pub nu_inv: Matrix,
    /// Left `A`-linear maps `𝒞 -> A` inside `Hom(𝒞, A)`.
    pub left_dual: Subspace,
}

fn nu_of(e: &Entwining, f: &Matrix) -> Matrix {
    &e.algebra.mul * &Matrix::identity(e.algebra.field(), e.alg_dim()).kron(f)
}

/// `(h1 ⋆_l h2)(x) = h2(x1 h1(x2))`.
pub fn star_l(coring: &Coring, h1: &Matrix, h2: &Matrix) -> Matrix {
    let big = coring.dim();
    let step = apply_on_factor(h1, big, 1, &coring.comul);
    let step = &coring.right_action * &step;
    h2 * &step
}

pub fn nu_iso(e: &Entwining) -> Result<(NuIso, Report)> {
    let (n, d) = (e.alg_dim(), e.co_dim());
    let fs = e.algebra.field();
    let big = n * d;
    let (coring, _) = build_coring(e)?;
    let (smash, _) = build_smash(e)?;
    let s = smash.ring.dim();
    let cols: Vec<Vec<Scalar>> = (0..s).map(|p| hom_to_vec(&nu_of(e, &basis_hom(e, p)))).collect();
    let hom_dim = n * big;
    let nu = Matrix::from_columns(fs, hom_dim, &cols);
    let restrict = e.algebra.unit.kron(&Matrix::identity(fs, d));
    let mut inv_cols = Vec::with_capacity(hom_dim);
    let mut linearity_cols = Vec::with_capacity(hom_dim);
    for t in 0..hom_dim {
        let h = vec_to_hom(fs, &unit_vector(fs, hom_dim, t), n, big);
        inv_cols.push(hom_to_vec(&(&h * &restrict)));
        let defect = (&h * &coring.left_action).checked_sub(&(&e.algebra.mul * &Matrix::identity(fs, n).kron(&h)))?;
        linearity_cols.push(hom_to_vec(&defect));
    }
    let nu_inv = Matrix::from_columns(fs, s, &inv_cols);
    let left_dual = Subspace::kernel_of(&Matrix::from_columns(fs, n * n * big, &linearity_cols));
    let iso = NuIso { nu, nu_inv, left_dual };
    let report = verify_nu(e, &coring, &smash, &iso);
    Ok((iso, require_internal(report)?))
}

fn verify_nu(e: &Entwining, coring: &Coring, smash: &SmashRing, iso: &NuIso) -> Report {
    let mut r = Report::new("nu isomorphism");
    let (n, big) = (e.alg_dim(), coring.dim());
    let fs = e.algebra.field();
    let s = smash.ring.dim();
    r.check_maps("nu^-1 nu = id", &(&iso.nu_inv * &iso.nu), &Matrix::identity(fs, s), &[s]);
    r.check("image of nu = left A-linear maps", Subspace::image_of(&iso.nu) == iso.left_dual, "image differs");
    for b in 0..iso.left_dual.dim() {
        let v = iso.left_dual.basis_vector(b);
        if !r.check_vectors("nu nu^-1 = id on left dual", vec![b], &iso.nu.apply(&iso.nu_inv.apply(&v)), &v) {
            return r;
        }
    }
    let as_map = |p: usize| vec_to_hom(fs, &iso.nu.column(p), n, big);
    r.check_vectors("nu(unit) = coring counit", vec![], &iso.nu.apply(&smash.ring.one()), &hom_to_vec(&coring.counit));
    'outer: for p in 0..s {
        for q in 0..s {
            let lhs = iso.nu.apply(&smash.ring.basis_product(p, q));
            let rhs = hom_to_vec(&star_l(coring, &as_map(p), &as_map(q)));
            if !r.check_vectors("nu(f g) = nu(f) *_l nu(g)", vec![p, q], &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    for j in 0..n {
        let a = unit_vector(fs, n, j);
        let a_col = Matrix::column_vector(fs, a.clone());
        let left_op = Action::new(Side::Left, smash.left_action.clone()).operator(n, &a);
        let right_op = Action::new(Side::Right, smash.right_action.clone()).operator(n, &a);
        let shift = &coring.right_action * &Matrix::identity(fs, big).kron(&a_col);
        for p in 0..s {
            let f = unit_vector(fs, s, p);
            let lhs = iso.nu.apply(&left_op.apply(&f));
            let rhs = hom_to_vec(&(&as_map(p) * &shift));
            if !r.check_vectors("nu(a f)(x) = nu(f)(x a)", vec![j, p], &lhs, &rhs) {
                return r;
            }
            let lhs = iso.nu.apply(&right_op.apply(&f));
            let rhs = hom_to_vec(&(&e.algebra.mul * &as_map(p).kron(&a_col)));
            if !r.check_vectors("nu(f a) = nu(f) a", vec![p, j], &lhs, &rhs) {
                return r;
            }
        }
    }
    r
}
