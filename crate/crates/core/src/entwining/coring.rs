use crate::error::{require_internal, Result};
use crate::exactlin::tensor::{apply_on_factor, lift};
use crate::exactlin::Matrix;
use crate::report::Report;
use crate::structures::{Action, Side};

use super::structure::Entwining;

/// The coring `A ⊗ C`. Its comultiplication lives on the plain tensor
/// space `A ⊗ C ⊗ A ⊗ C`; balanced identities are compared after the
/// normalization `x ⊗ a ⊗ c ↦ (x a) ⊗ c` onto `(A ⊗ C) ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coring {
    pub alg_dim: usize,
    pub co_dim: usize,
    /// `A ⊗ 𝒞 -> 𝒞`
    pub left_action: Matrix,
    /// `𝒞 ⊗ A -> 𝒞`
    pub right_action: Matrix,
    /// `𝒞 -> A ⊗ C ⊗ A ⊗ C`, `a ⊗ c ↦ a ⊗ c1 ⊗ 1 ⊗ c2`
    pub comul: Matrix,
    /// `𝒞 -> A`, `a ⊗ c ↦ a ε(c)`
    pub counit: Matrix,
}

impl Coring {
    pub fn dim(&self) -> usize {
        self.alg_dim * self.co_dim
    }

    /// `𝒞 ⊗ A ⊗ C -> 𝒞 ⊗ C`, identifying `𝒞 ⊗_A 𝒞` with `𝒞 ⊗ C`.
    pub fn normalizer(&self) -> Matrix {
        self.right_action.kron(&Matrix::identity(self.right_action.field(), self.co_dim))
    }

    /// The comultiplication as a map `𝒞 -> 𝒞 ⊗ C`.
    pub fn normalized_comul(&self) -> Matrix {
        &self.normalizer() * &self.comul
    }
}

pub fn build_coring(e: &Entwining) -> Result<(Coring, Report)> {
    let (n, d) = (e.alg_dim(), e.co_dim());
    let f = e.algebra.field();
    let id_c = Matrix::identity(f, d);
    let left_action = e.algebra.mul.kron(&id_c);
    let right_action = &left_action * &lift(&e.psi, n, 1);
    let insert_unit = Matrix::identity(f, n * d).kron(&e.algebra.unit.kron(&id_c));
    let comul = &insert_unit * &lift(&e.coalgebra.comul, n, 1);
    let counit = Matrix::identity(f, n).kron(&e.coalgebra.counit);
    let coring = Coring {
        alg_dim: n,
        co_dim: d,
        left_action,
        right_action,
        comul,
        counit,
    };
    let report = verify_coring(e, &coring);
    Ok((coring, require_internal(report)?))
}

pub fn verify_coring(e: &Entwining, k: &Coring) -> Report {
    let mut r = Report::new("build coring");
    let (n, d, big) = (k.alg_dim, k.co_dim, k.dim());
    let f = e.algebra.field();
    r.absorb("left module", Action::new(Side::Left, k.left_action.clone()).verify(&e.algebra));
    r.absorb("right module", Action::new(Side::Right, k.right_action.clone()).verify(&e.algebra));
    let lhs = &k.right_action * &lift(&k.left_action, 1, n);
    let rhs = &k.left_action * &lift(&k.right_action, n, 1);
    r.check_maps("bimodule (a x) b = a (x b)", &lhs, &rhs, &[n, big, n]);

    let nd = k.normalized_comul();
    let left_on_pair = k.left_action.kron(&Matrix::identity(f, d));
    r.check_maps(
        "comultiplication left A-linear",
        &(&nd * &k.left_action),
        &(&left_on_pair * &lift(&nd, n, 1)),
        &[n, big],
    );
    let right_on_pair = &k.right_action.kron(&Matrix::identity(f, d)) * &lift(&e.psi, big, 1);
    r.check_maps(
        "comultiplication right A-linear",
        &(&nd * &k.right_action),
        &(&right_on_pair * &lift(&nd, 1, n)),
        &[big, n],
    );
    let lhs = apply_on_factor(&nd, 1, d, &nd);
    let rhs = apply_on_factor(&e.coalgebra.comul, big, 1, &nd);
    r.check_maps("coassociativity over A", &lhs, &rhs, &[big]);
    let id = Matrix::identity(f, big);
    r.check_maps("left counit over A", &apply_on_factor(&k.counit, 1, d, &nd), &id, &[big]);
    r.check_maps("right counit over A", &apply_on_factor(&e.coalgebra.counit, big, 1, &nd), &id, &[big]);
    r.check_maps(
        "counit left A-linear",
        &(&k.counit * &k.left_action),
        &(&e.algebra.mul * &lift(&k.counit, n, 1)),
        &[n, big],
    );
    r.check_maps(
        "counit right A-linear",
        &(&k.counit * &k.right_action),
        &(&e.algebra.mul * &lift(&k.counit, 1, n)),
        &[big, n],
    );
    r
}
