use serde::{Deserialize, Serialize};

use crate::error::{expect_dim, Error, Result};
use crate::exactlin::tensor::{apply_on_factor, lift};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::report::Report;

use super::algebra::{Algebra, Coalgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Right: `M ⊗ A -> M`, `dim M x (dim M * dim A)`. Left: `A ⊗ M -> M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub side: Side,
    pub map: Matrix,
}

/// Right: `M -> M ⊗ C`, `(dim M * dim C) x dim M`. Left: `M -> C ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    pub side: Side,
    pub map: Matrix,
}

/// Sparse action entry `(m, a, m', c)`: for a right action `m_m · a_a` gains
/// `c m_{m'}`; for a left action `a_a · m_m` gains `c m_{m'}`.
pub type ActionEntry = (usize, usize, usize, Scalar);
/// Sparse coaction entry `(m, m', c_idx, c)`: `ϱ(m_m)` gains `c m_{m'} ⊗ c_{c_idx}`
/// (right) or `c c_{c_idx} ⊗ m_{m'}` (left).
pub type CoactionEntry = (usize, usize, usize, Scalar);

impl Action {
    pub fn new(side: Side, map: Matrix) -> Self {
        Action { side, map }
    }

    pub fn module_dim(&self) -> usize {
        self.map.rows()
    }

    pub fn algebra_dim(&self) -> usize {
        if self.map.rows() == 0 {
            0
        } else {
            self.map.cols() / self.map.rows()
        }
    }

    pub fn from_entries(field: FieldSpec, side: Side, dim: usize, alg_dim: usize, entries: &[ActionEntry]) -> Result<Self> {
        let mut map = Matrix::zeros(field, dim, dim * alg_dim);
        for (m, a, t, c) in entries {
            if *m >= dim || *t >= dim || *a >= alg_dim {
                return Err(Error::Malformed(format!("action entry ({m}, {a}, {t}) out of range")));
            }
            let col = match side {
                Side::Right => m * alg_dim + a,
                Side::Left => a * dim + m,
            };
            map.entry_mut(*t, col).add_assign_ref(c);
        }
        Ok(Action { side, map })
    }

    pub fn entries(&self, alg_dim: usize) -> Vec<ActionEntry> {
        let dim = self.map.rows();
        let mut out = Vec::new();
        for m in 0..dim {
            for a in 0..alg_dim {
                let col = match self.side {
                    Side::Right => m * alg_dim + a,
                    Side::Left => a * dim + m,
                };
                for t in 0..dim {
                    let c = self.map.get(t, col);
                    if !c.is_zero() {
                        out.push((m, a, t, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// The linear map `m ↦ m·a` (right) or `m ↦ a·m` (left) for `a` in coordinates.
    pub fn operator(&self, alg_dim: usize, a: &[Scalar]) -> Matrix {
        let dim = self.map.rows();
        let f = self.map.field();
        Matrix::from_fn(f, dim, dim, |t, m| {
            let mut acc = f.zero();
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let col = match self.side {
                    Side::Right => m * alg_dim + j,
                    Side::Left => j * dim + m,
                };
                acc.add_product(self.map.get(t, col), aj);
            }
            acc
        })
    }

    pub fn verify(&self, algebra: &Algebra) -> Report {
        let mut r = Report::new(format!("verify {} module", self.side.name()));
        let (d, n) = (self.map.rows(), algebra.dim());
        if self.map.cols() != d * n {
            r.check("shape", false, &format!("{}x{} action for algebra of dim {n}", self.map.rows(), self.map.cols()));
            return r;
        }
        let id = Matrix::identity(algebra.field(), d);
        match self.side {
            Side::Right => {
                let lhs = &self.map * &lift(&self.map, 1, n);
                let rhs = &self.map * &lift(&algebra.mul, d, 1);
                r.check_maps("associativity (m a) b = m (a b)", &lhs, &rhs, &[d, n, n]);
                let unit = &self.map * &lift(&algebra.unit, d, 1);
                r.check_maps("unit m 1 = m", &unit, &id, &[d]);
            }
            Side::Left => {
                let lhs = &self.map * &lift(&self.map, n, 1);
                let rhs = &self.map * &lift(&algebra.mul, 1, d);
                r.check_maps("associativity a (b m) = (a b) m", &lhs, &rhs, &[n, n, d]);
                let unit = &self.map * &lift(&algebra.unit, 1, d);
                r.check_maps("unit 1 m = m", &unit, &id, &[d]);
            }
        }
        r
    }

    /// Dual action on `M*` in the dual basis, on the opposite side.
    pub fn dual(&self) -> Action {
        let d = self.map.rows();
        let n = self.algebra_dim();
        let f = self.map.field();
        let map = match self.side {
            // (a h)(m) = h(m a)
            Side::Right => Matrix::from_fn(f, d, n * d, |k, col| {
                let (j, i) = (col / d, col % d);
                self.map.get(i, k * n + j).clone()
            }),
            // (h a)(m) = h(a m)
            Side::Left => Matrix::from_fn(f, d, d * n, |k, col| {
                let (i, j) = (col / n, col % n);
                self.map.get(i, j * d + k).clone()
            }),
        };
        Action { side: self.side.opposite(), map }
    }
}

impl Coaction {
    pub fn new(side: Side, map: Matrix) -> Self {
        Coaction { side, map }
    }

    pub fn module_dim(&self) -> usize {
        self.map.cols()
    }

    pub fn coalgebra_dim(&self) -> usize {
        if self.map.cols() == 0 {
            0
        } else {
            self.map.rows() / self.map.cols()
        }
    }

    fn row_index(side: Side, dim: usize, co_dim: usize, m: usize, c: usize) -> usize {
        match side {
            Side::Right => m * co_dim + c,
            Side::Left => c * dim + m,
        }
    }

    pub fn from_entries(field: FieldSpec, side: Side, dim: usize, co_dim: usize, entries: &[CoactionEntry]) -> Result<Self> {
        let mut map = Matrix::zeros(field, dim * co_dim, dim);
        for (m, t, ci, c) in entries {
            if *m >= dim || *t >= dim || *ci >= co_dim {
                return Err(Error::Malformed(format!("coaction entry ({m}, {t}, {ci}) out of range")));
            }
            map.entry_mut(Self::row_index(side, dim, co_dim, *t, *ci), *m).add_assign_ref(c);
        }
        Ok(Coaction { side, map })
    }

    pub fn entries(&self, co_dim: usize) -> Vec<CoactionEntry> {
        let dim = self.map.cols();
        let mut out = Vec::new();
        for m in 0..dim {
            for t in 0..dim {
                for ci in 0..co_dim {
                    let c = self.map.get(Self::row_index(self.side, dim, co_dim, t, ci), m);
                    if !c.is_zero() {
                        out.push((m, t, ci, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn verify(&self, coalgebra: &Coalgebra) -> Report {
        let mut r = Report::new(format!("verify {} comodule", self.side.name()));
        let (d, n) = (self.map.cols(), coalgebra.dim());
        if self.map.rows() != d * n {
            r.check("shape", false, &format!("{}x{} coaction for coalgebra of dim {n}", self.map.rows(), self.map.cols()));
            return r;
        }
        let id = Matrix::identity(coalgebra.field(), d);
        match self.side {
            Side::Right => {
                let lhs = apply_on_factor(&self.map, 1, n, &self.map);
                let rhs = apply_on_factor(&coalgebra.comul, d, 1, &self.map);
                r.check_maps("coassociativity", &lhs, &rhs, &[d]);
                let counit = apply_on_factor(&coalgebra.counit, d, 1, &self.map);
                r.check_maps("counit", &counit, &id, &[d]);
            }
            Side::Left => {
                let lhs = apply_on_factor(&self.map, n, 1, &self.map);
                let rhs = apply_on_factor(&coalgebra.comul, 1, d, &self.map);
                r.check_maps("coassociativity", &lhs, &rhs, &[d]);
                let counit = apply_on_factor(&coalgebra.counit, 1, d, &self.map);
                r.check_maps("counit", &counit, &id, &[d]);
            }
        }
        r
    }

    /// Action of `C*` on `M*` on the same side: the transpose.
    pub fn dual(&self) -> Action {
        Action {
            side: self.side,
            map: self.map.transpose(),
        }
    }
}

/// A finite-dimensional space with an optional action and an optional coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub dim: usize,
    pub field: FieldSpec,
    pub action: Option<Action>,
    pub coaction: Option<Coaction>,
}

impl ModulePresentation {
    pub fn zero(field: FieldSpec) -> Self {
        ModulePresentation {
            dim: 0,
            field,
            action: None,
            coaction: None,
        }
    }

    pub fn with_action(action: Action) -> Self {
        ModulePresentation {
            dim: action.module_dim(),
            field: action.map.field(),
            action: Some(action),
            coaction: None,
        }
    }

    pub fn with_coaction(coaction: Coaction) -> Self {
        ModulePresentation {
            dim: coaction.module_dim(),
            field: coaction.map.field(),
            action: None,
            coaction: Some(coaction),
        }
    }

    pub fn both(action: Action, coaction: Coaction) -> Self {
        ModulePresentation {
            dim: action.module_dim(),
            field: action.map.field(),
            action: Some(action),
            coaction: Some(coaction),
        }
    }

    pub fn action(&self) -> Result<&Action> {
        self.action.as_ref().ok_or(Error::MissingPart { kind: "module", part: "action" })
    }

    pub fn coaction(&self) -> Result<&Coaction> {
        self.coaction.as_ref().ok_or(Error::MissingPart { kind: "module", part: "coaction" })
    }

    pub fn right_action(&self) -> Result<&Matrix> {
        match &self.action {
            Some(a) if a.side == Side::Right => Ok(&a.map),
            Some(_) => Err(Error::Precondition("expected a right action".into())),
            None => Err(Error::MissingPart { kind: "module", part: "action" }),
        }
    }

    pub fn right_coaction(&self) -> Result<&Matrix> {
        match &self.coaction {
            Some(c) if c.side == Side::Right => Ok(&c.map),
            Some(_) => Err(Error::Precondition("expected a right coaction".into())),
            None => Err(Error::MissingPart { kind: "module", part: "coaction" }),
        }
    }

    /// Shape checks against the given algebra and coalgebra dimensions.
    pub fn validate(&self, alg_dim: Option<usize>, co_dim: Option<usize>) -> Result<()> {
        if let Some(a) = &self.action {
            let n = alg_dim.ok_or_else(|| Error::Malformed("action without an algebra".into()))?;
            expect_dim("action rows", self.dim, a.map.rows())?;
            expect_dim("action columns", self.dim * n, a.map.cols())?;
        }
        if let Some(c) = &self.coaction {
            let n = co_dim.ok_or_else(|| Error::Malformed("coaction without a coalgebra".into()))?;
            expect_dim("coaction columns", self.dim, c.map.cols())?;
            expect_dim("coaction rows", self.dim * n, c.map.rows())?;
        }
        Ok(())
    }

    pub fn verify(&self, algebra: Option<&Algebra>, coalgebra: Option<&Coalgebra>) -> Report {
        let mut r = Report::new("verify module");
        if let Err(e) = self.validate(algebra.map(Algebra::dim), coalgebra.map(Coalgebra::dim)) {
            r.check("well-formed", false, &e.to_string());
            return r;
        }
        if let (Some(a), Some(alg)) = (&self.action, algebra) {
            r.absorb("action", a.verify(alg));
        }
        if let (Some(c), Some(co)) = (&self.coaction, coalgebra) {
            r.absorb("coaction", c.verify(co));
        }
        r
    }

    /// Dual of a module with a single structure map: an action moves to the
    /// opposite side, a coaction becomes an action of the dual algebra.
    pub fn dual(&self) -> Result<ModulePresentation> {
        match (&self.action, &self.coaction) {
            (Some(a), None) => Ok(ModulePresentation::with_action(a.dual())),
            (None, Some(c)) => Ok(ModulePresentation::with_action(c.dual())),
            (None, None) => Ok(self.clone()),
            (Some(_), Some(_)) => Err(Error::Unsupported(
                "dual of a module with both an action and a coaction; use the entwined dual".into(),
            )),
        }
    }

    /// Transports along `new basis = old basis * q`.
    pub fn change_basis(&self, q: &Matrix, alg_dim: usize, co_dim: usize) -> Result<ModulePresentation> {
        let inv = q.inverse().ok_or_else(|| Error::Precondition("change of basis is not invertible".into()))?;
        let f = self.field;
        let action = self.action.as_ref().map(|a| {
            let ia = Matrix::identity(f, alg_dim);
            let dom = match a.side {
                Side::Right => q.kron(&ia),
                Side::Left => ia.kron(q),
            };
            Action::new(a.side, &(&inv * &a.map) * &dom)
        });
        let coaction = self.coaction.as_ref().map(|c| {
            let ic = Matrix::identity(f, co_dim);
            let cod = match c.side {
                Side::Right => inv.kron(&ic),
                Side::Left => ic.kron(&inv),
            };
            Coaction::new(c.side, &(&cod * &c.map) * q)
        });
        Ok(ModulePresentation {
            dim: self.dim,
            field: f,
            action,
            coaction,
        })
    }
}
