use crate::error::{expect_dim, Error, Result};
use crate::exactlin::tensor::permute_factors;
use crate::exactlin::{solve_linear, Matrix, Scalar, Subspace};
use crate::report::Report;

use super::algebra::{Algebra, Coalgebra};
use super::module::{Action, Coaction, Side};

/// A bilinear form `A × C -> k`, `pairing[i][l] = ⟨a_i, c_l⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingPresentation {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub pairing: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harpoon {
    /// `a ⇀ c = Σ c1 ⟨a, c2⟩`
    Left,
    /// `c ↼ a = Σ ⟨a, c1⟩ c2`
    Right,
}

/// A rational submodule with its induced coaction in the coordinates of `subspace`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPart {
    pub subspace: Subspace,
    pub coaction: Coaction,
}

impl PairingPresentation {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, pairing: Matrix) -> Result<Self> {
        expect_dim("pairing rows", algebra.dim(), pairing.rows())?;
        expect_dim("pairing columns", coalgebra.dim(), pairing.cols())?;
        Ok(PairingPresentation {
            algebra,
            coalgebra,
            pairing,
        })
    }

    /// `(C*, C)` with the evaluation pairing.
    pub fn canonical(coalgebra: &Coalgebra) -> Self {
        PairingPresentation {
            algebra: coalgebra.dual(),
            coalgebra: coalgebra.clone(),
            pairing: Matrix::identity(coalgebra.field(), coalgebra.dim()),
        }
    }

    /// `(A, A*)` with the evaluation pairing.
    pub fn of_algebra(algebra: &Algebra) -> Self {
        PairingPresentation {
            algebra: algebra.clone(),
            coalgebra: algebra.dual(),
            pairing: Matrix::identity(algebra.field(), algebra.dim()),
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn co_dim(&self) -> usize {
        self.coalgebra.dim()
    }

    /// `κ: A -> C*`, `a ↦ ⟨a, -⟩`.
    pub fn kappa(&self) -> Matrix {
        self.pairing.transpose()
    }

    /// `⟨ab, c⟩ = Σ ⟨a, c1⟩⟨b, c2⟩` and `⟨1, c⟩ = ε(c)` on basis elements.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("verify measuring pairing");
        if self.pairing.rows() != self.alg_dim() || self.pairing.cols() != self.co_dim() {
            r.check("shape", false, "pairing matrix shape");
            return r;
        }
        r.absorb("algebra", self.algebra.verify());
        r.absorb("coalgebra", self.coalgebra.verify());
        let kappa = self.kappa();
        let n = self.alg_dim();
        let lhs = &kappa * &self.algebra.mul;
        let rhs = &self.coalgebra.comul.transpose() * &kappa.kron(&kappa);
        r.check_maps("multiplicative <ab,c> = <a,c1><b,c2>", &lhs, &rhs, &[n, n]);
        r.check_maps("unital <1,c> = e(c)", &(&kappa * &self.algebra.unit), &self.coalgebra.counit.transpose(), &[1]);
        r
    }

    /// The module structure on `C` given by a harpoon.
    pub fn harpoon_action(&self, side: Harpoon) -> Action {
        let (n, d) = (self.alg_dim(), self.co_dim());
        let f = self.pairing.field();
        let delta = &self.coalgebra.comul;
        match side {
            Harpoon::Left => Action::new(
                Side::Left,
                Matrix::from_fn(f, d, n * d, |j, col| {
                    let (i, k) = (col / d, col % d);
                    let mut acc = f.zero();
                    for l in 0..d {
                        acc.add_product(delta.get(j * d + l, k), self.pairing.get(i, l));
                    }
                    acc
                }),
            ),
            Harpoon::Right => Action::new(
                Side::Right,
                Matrix::from_fn(f, d, d * n, |l, col| {
                    let (k, i) = (col / n, col % n);
                    let mut acc = f.zero();
                    for j in 0..d {
                        acc.add_product(delta.get(j * d + l, k), self.pairing.get(i, j));
                    }
                    acc
                }),
            ),
        }
    }

    pub fn harpoon(&self, side: Harpoon, a: &[Scalar], c: &[Scalar]) -> Result<Vec<Scalar>> {
        expect_dim("harpoon algebra element", self.alg_dim(), a.len())?;
        expect_dim("harpoon coalgebra element", self.co_dim(), c.len())?;
        let act = self.harpoon_action(side);
        Ok(act.operator(self.alg_dim(), a).apply(c))
    }

    pub fn rank(&self) -> usize {
        self.pairing.rank()
    }

    /// Rank criterion: `rank ⟨-,-⟩ = dim C`.
    pub fn alpha_condition(&self) -> Report {
        let mut r = Report::new("alpha-condition");
        let rank = self.rank();
        r.note(format!("pairing rank {rank}, dim C {}", self.co_dim()));
        r.note("finite-dual = full dual (finite-dimensional regime)");
        r.check("rank = dim C", rank == self.co_dim(), &format!("rank {rank} < dim C {}", self.co_dim()));
        r
    }

    pub fn require_alpha(&self, name: &str) -> Result<()> {
        let rank = self.rank();
        if rank == self.co_dim() {
            Ok(())
        } else {
            Err(Error::AlphaCondition {
                pairing: name.to_string(),
                rank,
                dim: self.co_dim(),
            })
        }
    }

    /// `α_M: M ⊗ C -> Hom(A, M)` for `M = k^m`, `m ⊗ c ↦ [a ↦ ⟨a, c⟩ m]`.
    /// Rows use the layout `k * dim A + j` for the value of `e_k` at `a_j`.
    pub fn alpha_map(&self, m: usize) -> Matrix {
        Matrix::identity(self.pairing.field(), m).kron(&self.pairing)
    }

    /// Injectivity of `α_M` for `M = k^m`, decided by a kernel computation.
    pub fn alpha_injective_direct(&self, m: usize) -> bool {
        Subspace::kernel_of(&self.alpha_map(m)).dim() == 0
    }

    /// A left inverse `L` of the pairing matrix, `L P = I`.
    fn left_inverse(&self) -> Result<Matrix> {
        let d = self.co_dim();
        let f = self.pairing.field();
        let sol = solve_linear(&self.pairing.transpose(), &Matrix::identity(f, d))?
            .ok_or_else(|| Error::AlphaCondition {
                pairing: "rational submodule".into(),
                rank: self.rank(),
                dim: d,
            })?;
        Ok(sol.particular.transpose())
    }

    /// `ρ_M: M -> Hom(A, M)` in the layout of `alpha_map`.
    fn rho(&self, action: &Action) -> Matrix {
        let d = action.module_dim();
        let n = self.alg_dim();
        let f = self.pairing.field();
        Matrix::from_fn(f, d * n, d, |row, i| {
            let (k, j) = (row / n, row % n);
            let col = match action.side {
                Side::Left => j * d + i,
                Side::Right => i * n + j,
            };
            action.map.get(k, col).clone()
        })
    }

    /// `Rat^C(_A M)` for a left action (right comodule), or its mirror
    /// `^C Rat(M_A)` for a right action (left comodule).
    pub fn rational_submodule(&self, action: &Action) -> Result<RationalPart> {
        self.require_alpha("rational submodule")?;
        let n = self.alg_dim();
        let (d, c) = (action.module_dim(), self.co_dim());
        expect_dim("module action columns", d * n, action.map.cols())?;
        let f = self.pairing.field();
        let rho = self.rho(action);
        let alpha = self.alpha_map(d);
        let rat = Subspace::preimage(&rho, &Subspace::image_of(&alpha))?;
        let solve = Matrix::identity(f, d).kron(&self.left_inverse()?);
        let r = rat.dim();
        let mut coaction = Matrix::zeros(f, r * c, r);
        for b in 0..r {
            let x = solve.apply(&rho.apply(&rat.basis_vector(b)));
            for l in 0..c {
                let column: Vec<Scalar> = (0..d).map(|k| x[k * c + l].clone()).collect();
                let coords = rat.coordinates(&column).ok_or_else(|| {
                    let mut rep = Report::new("rational submodule");
                    rep.fail("coaction lands in Rat", vec![b, l], &column, &[]);
                    Error::Internal(Box::new(rep))
                })?;
                for (s, v) in coords.into_iter().enumerate() {
                    coaction.set(s * c + l, b, v);
                }
            }
        }
        let coaction = match action.side {
            Side::Left => Coaction::new(Side::Right, coaction),
            Side::Right => Coaction::new(Side::Left, permute_factors(&coaction, &[r, c], &[1, 0])),
        };
        Ok(RationalPart { subspace: rat, coaction })
    }

    /// Intersection of the rational parts for a left action of `self.algebra`
    /// and a right action of `other.algebra` on the same space.
    pub fn birational(&self, left: &Action, other: &PairingPresentation, right: &Action) -> Result<Subspace> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::Precondition("birational part needs a left and a right action".into()));
        }
        let l = self.rational_submodule(left)?.subspace;
        let r = other.rational_submodule(right)?.subspace;
        Ok(l.intersect(&r)?)
    }

    /// The induced action of `A` on a `C`-comodule: `a m = Σ m0 ⟨a, m1⟩` for a
    /// right comodule, `m a = Σ ⟨a, m-1⟩ m0` for a left comodule.
    pub fn comodule_to_module(&self, coaction: &Coaction) -> Result<Action> {
        let d = coaction.module_dim();
        let (n, c) = (self.alg_dim(), self.co_dim());
        expect_dim("coaction rows", d * c, coaction.map.rows())?;
        let f = self.pairing.field();
        Ok(match coaction.side {
            Side::Right => Action::new(
                Side::Left,
                Matrix::from_fn(f, d, n * d, |k, col| {
                    let (j, i) = (col / d, col % d);
                    let mut acc = f.zero();
                    for l in 0..c {
                        acc.add_product(coaction.map.get(k * c + l, i), self.pairing.get(j, l));
                    }
                    acc
                }),
            ),
            Side::Left => Action::new(
                Side::Right,
                Matrix::from_fn(f, d, d * n, |k, col| {
                    let (i, j) = (col / n, col % n);
                    let mut acc = f.zero();
                    for l in 0..c {
                        acc.add_product(coaction.map.get(l * d + k, i), self.pairing.get(j, l));
                    }
                    acc
                }),
            ),
        })
    }
}

/// Restriction of an action to an invariant subspace, in its basis coordinates.
pub fn restrict_action(action: &Action, alg_dim: usize, sub: &Subspace) -> Result<Action> {
    let r = sub.dim();
    let f = action.map.field();
    let mut map = Matrix::zeros(f, r, r * alg_dim);
    for b in 0..r {
        let v = sub.basis_vector(b);
        for j in 0..alg_dim {
            let mut e = vec![f.zero(); alg_dim];
            e[j] = f.one();
            let image = action.operator(alg_dim, &e).apply(&v);
            let coords = sub
                .coordinates(&image)
                .ok_or_else(|| Error::Closure(format!("subspace not invariant under basis element {j}")))?;
            let col = match action.side {
                Side::Right => b * alg_dim + j,
                Side::Left => j * r + b,
            };
            for (s, x) in coords.into_iter().enumerate() {
                map.set(s, col, x);
            }
        }
    }
    Ok(Action::new(action.side, map))
}

/// `⟨ξ(a), d⟩_Q = ⟨a, θ(d)⟩_P` for `P = (A, C)`, `Q = (B, D)`, `ξ: A -> B`, `θ: D -> C`,
/// together with the transfer of (co)multiplicativity under nondegeneracy.
pub fn check_adjoint_pair(p: &PairingPresentation, q: &PairingPresentation, xi: &Matrix, theta: &Matrix) -> Report {
    let mut r = Report::new("adjoint pair");
    let shapes_ok = xi.rows() == q.alg_dim() && xi.cols() == p.alg_dim() && theta.rows() == p.co_dim() && theta.cols() == q.co_dim();
    if !r.check("shape", shapes_ok, "xi: A -> B and theta: D -> C") {
        return r;
    }
    let lhs = &xi.transpose() * &q.pairing;
    let rhs = &p.pairing * theta;
    if !r.check_maps("<xi(a), d> = <a, theta(d)>", &lhs, &rhs, &[q.co_dim()]) {
        return r;
    }
    let xi_alg = p.algebra.check_morphism(&q.algebra, xi).passed();
    let theta_coalg = q.coalgebra.check_morphism(&p.coalgebra, theta).passed();
    r.note(format!("xi algebra morphism: {xi_alg}; theta coalgebra morphism: {theta_coalg}"));
    if xi_alg && p.rank() == p.co_dim() {
        r.absorb("theta (from xi multiplicative)", q.coalgebra.check_morphism(&p.coalgebra, theta));
    }
    if theta_coalg && q.kappa().rank() == q.alg_dim() {
        r.absorb("xi (from theta comultiplicative)", p.algebra.check_morphism(&q.algebra, xi));
    }
    r
}
