use crate::error::{expect_dim, Error, Result};
use crate::exactlin::tensor::{apply_on_factor, lift, swap_map};
use crate::exactlin::Matrix;
use crate::report::Report;
use crate::structures::{Algebra, Coalgebra};

/// `(A, C, ψ)` with `ψ: C ⊗ A -> A ⊗ C`, an `(nA dC) x (dC nA)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entwining {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub psi: Matrix,
}

impl Entwining {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, psi: Matrix) -> Result<Self> {
        let (n, d) = (algebra.dim(), coalgebra.dim());
        expect_dim("psi rows", n * d, psi.rows())?;
        expect_dim("psi columns", d * n, psi.cols())?;
        if algebra.field() != coalgebra.field() || psi.field() != algebra.field() {
            return Err(Error::Malformed("entwining components over different fields".into()));
        }
        Ok(Entwining { algebra, coalgebra, psi })
    }

    /// `ψ(c ⊗ a) = a ⊗ c`.
    pub fn flip(algebra: Algebra, coalgebra: Coalgebra) -> Self {
        let psi = swap_map(algebra.field(), coalgebra.dim(), algebra.dim());
        Entwining { algebra, coalgebra, psi }
    }

    pub fn alg_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn co_dim(&self) -> usize {
        self.coalgebra.dim()
    }

    /// The four entwining identities, checked as linear maps on basis tensors.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("verify entwining");
        r.absorb("algebra", self.algebra.verify());
        r.absorb("coalgebra", self.coalgebra.verify());
        if !r.passed() {
            return r;
        }
        self.verify_axioms(&mut r);
        r
    }

    pub(crate) fn verify_axioms(&self, r: &mut Report) {
        let (n, d) = (self.alg_dim(), self.co_dim());
        let f = self.algebra.field();
        let (mu, eta) = (&self.algebra.mul, &self.algebra.unit);
        let (delta, eps) = (&self.coalgebra.comul, &self.coalgebra.counit);
        let psi = &self.psi;

        let lhs = psi * &lift(mu, d, 1);
        let rhs = apply_on_factor(mu, 1, d, &apply_on_factor(psi, n, 1, &lift(psi, 1, n)));
        r.check_maps("multiplicative: (ab)_psi c^psi = a_psi b_Psi c^psi^Psi", &lhs, &rhs, &[d, n, n]);

        let lhs = psi * &lift(eta, d, 1);
        let rhs = eta.kron(&Matrix::identity(f, d));
        r.check_maps("unital: psi(c 1) = 1 c", &lhs, &rhs, &[d]);

        let lhs = apply_on_factor(delta, n, 1, psi);
        let rhs = apply_on_factor(psi, 1, d, &apply_on_factor(psi, d, 1, &lift(delta, 1, n)));
        r.check_maps("comultiplicative: a_psi c^psi_1 c^psi_2 = a_psi_Psi c_1^Psi c_2^psi", &lhs, &rhs, &[d, n]);

        let lhs = apply_on_factor(eps, n, 1, psi);
        let rhs = eps.kron(&Matrix::identity(f, n));
        r.check_maps("counital: a_psi e(c^psi) = e(c) a", &lhs, &rhs, &[d, n]);
    }

    /// `ψ` applied to basis tensor `c_k ⊗ a_i`, as a vector of `A ⊗ C`.
    pub fn psi_column(&self, k: usize, i: usize) -> Vec<crate::exactlin::Scalar> {
        self.psi.column(k * self.alg_dim() + i)
    }
}

/// `(γ, δ): (A, C, ψ) -> (B, D, Ψ)`: `(γ ⊗ δ) ψ = Ψ (δ ⊗ γ)`.
pub fn verify_entwining_morphism(e: &Entwining, f: &Entwining, gamma: &Matrix, delta: &Matrix) -> Report {
    let mut r = Report::new("entwining morphism");
    if !r.absorb("gamma", e.algebra.check_morphism(&f.algebra, gamma)) {
        return r;
    }
    if !r.absorb("delta", e.coalgebra.check_morphism(&f.coalgebra, delta)) {
        return r;
    }
    let lhs = &gamma.kron(delta) * &e.psi;
    let rhs = &f.psi * &delta.kron(gamma);
    r.check_maps("gamma(a_psi) delta(c^psi) = gamma(a)_Psi delta(c)^Psi", &lhs, &rhs, &[e.co_dim(), e.alg_dim()]);
    r
}
