use serde::{Deserialize, Serialize};

use crate::error::{expect_dim, Error, Result};
use crate::exactlin::tensor::{apply_on_factor, permute_factors};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::report::Report;

use super::convolution::compute_antipode;

/// Associative unital algebra by structure constants.
///
/// `mul` is the `n x n^2` matrix of `A ⊗ A -> A`, `unit` the `n x 1` image of 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub mul: Matrix,
    pub unit: Matrix,
}

/// Coassociative counital coalgebra: `comul` is `d^2 x d`, `counit` is `1 x d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub comul: Matrix,
    pub counit: Matrix,
}

/// Sparse structure constant `(i, j, k, c)`.
pub type Quad = (usize, usize, usize, Scalar);

fn check_quad(context: &str, q: &Quad, bounds: [usize; 3]) -> Result<()> {
    if q.0 >= bounds[0] || q.1 >= bounds[1] || q.2 >= bounds[2] {
        return Err(Error::Malformed(format!(
            "{context}: index ({}, {}, {}) out of range {bounds:?}",
            q.0, q.1, q.2
        )));
    }
    Ok(())
}

impl Algebra {
    pub fn new(mul: Matrix, unit: Matrix) -> Result<Self> {
        let n = mul.rows();
        expect_dim("algebra multiplication columns", n * n, mul.cols())?;
        expect_dim("algebra unit rows", n, unit.rows())?;
        expect_dim("algebra unit columns", 1, unit.cols())?;
        Ok(Algebra { mul, unit })
    }

    /// From triples `(i, j, k, c)`: `e_i e_j` gains `c e_k`.
    pub fn from_table(field: FieldSpec, dim: usize, table: &[Quad], unit: Vec<Scalar>) -> Result<Self> {
        let mut mul = Matrix::zeros(field, dim, dim * dim);
        for q in table {
            check_quad("mul", q, [dim, dim, dim])?;
            let e = mul.entry_mut(q.2, q.0 * dim + q.1);
            e.add_assign_ref(&q.3);
        }
        expect_dim("unit length", dim, unit.len())?;
        Algebra::new(mul, Matrix::column_vector(field, unit))
    }

    pub fn table(&self) -> Vec<Quad> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.mul.get(k, i * n + j);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.mul.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mul.column(i * self.dim() + j)
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.mul.get(k, i * n + j);
                    if !m.is_zero() {
                        o.add_product(m, &c);
                    }
                }
            }
        }
        out
    }

    /// Associativity and unit laws on all basis elements.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("verify algebra");
        let n = self.dim();
        let f = self.field();
        let basis = |i: usize| -> Vec<Scalar> { (0..n).map(|j| f.from_i64((i == j) as i64)).collect() };
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let lhs = self.product(&ij, &basis(k));
                    let rhs = self.product(&basis(i), &self.basis_product(j, k));
                    if !r.check_vectors("associativity", vec![i, j, k], &lhs, &rhs) {
                        break 'outer;
                    }
                }
            }
        }
        let one = self.one();
        for i in 0..n {
            let e = basis(i);
            r.check_vectors("left unit", vec![i], &self.product(&one, &e), &e);
            r.check_vectors("right unit", vec![i], &self.product(&e, &one), &e);
        }
        r
    }

    /// Dual coalgebra on `A*` in the dual basis: `Δ = μᵀ`, `ε = ηᵀ`.
    pub fn dual(&self) -> Coalgebra {
        Coalgebra {
            comul: self.mul.transpose(),
            counit: self.unit.transpose(),
        }
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        Algebra {
            mul: permute_factors(&self.mul.transpose(), &[n, n], &[1, 0]).transpose(),
            unit: self.unit.clone(),
        }
    }

    /// `A ⊗ B` with componentwise multiplication.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        // (a⊗b)(a'⊗b') = aa' ⊗ bb': reorder A⊗B⊗A⊗B -> A⊗A⊗B⊗B, then μ⊗μ.
        let reorder = permute_factors(&Matrix::identity(self.field(), n * m * n * m), &[n, m, n, m], &[0, 2, 1, 3]);
        let mul = &self.mul.kron(&other.mul) * &reorder;
        Algebra {
            mul,
            unit: self.unit.kron(&other.unit),
        }
    }

    /// Transports the structure along `new basis = old basis * q` (columns of `q`).
    pub fn change_basis(&self, q: &Matrix) -> Result<Algebra> {
        let inv = q.inverse().ok_or_else(|| Error::Precondition("change of basis is not invertible".into()))?;
        Ok(Algebra {
            mul: &(&inv * &self.mul) * &q.kron(q),
            unit: &inv * &self.unit,
        })
    }

    /// `f: self -> target` preserves products and the unit.
    pub fn check_morphism(&self, target: &Algebra, f: &Matrix) -> Report {
        let mut r = Report::new("algebra morphism");
        if f.rows() != target.dim() || f.cols() != self.dim() {
            r.check("shape", false, &format!("{}x{} map", f.rows(), f.cols()));
            return r;
        }
        let n = self.dim();
        let lhs = f * &self.mul;
        let rhs = &target.mul * &f.kron(f);
        r.check_maps("multiplicative", &lhs, &rhs, &[n, n]);
        r.check_maps("unital", &(f * &self.unit), &target.unit, &[1]);
        r
    }
}

impl Coalgebra {
    pub fn new(comul: Matrix, counit: Matrix) -> Result<Self> {
        let d = comul.cols();
        expect_dim("comultiplication rows", d * d, comul.rows())?;
        expect_dim("counit columns", d, counit.cols())?;
        expect_dim("counit rows", 1, counit.rows())?;
        Ok(Coalgebra { comul, counit })
    }

    /// From triples `(i, j, k, c)`: `Δ(e_i)` gains `c e_j ⊗ e_k`.
    pub fn from_table(field: FieldSpec, dim: usize, table: &[Quad], counit: Vec<Scalar>) -> Result<Self> {
        let mut comul = Matrix::zeros(field, dim * dim, dim);
        for q in table {
            check_quad("comul", q, [dim, dim, dim])?;
            comul.entry_mut(q.1 * dim + q.2, q.0).add_assign_ref(&q.3);
        }
        expect_dim("counit length", dim, counit.len())?;
        Coalgebra::new(comul, Matrix::row_vector(field, counit))
    }

    pub fn table(&self) -> Vec<Quad> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.comul.get(j * d + k, i);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.comul.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    pub fn counit_vec(&self) -> Vec<Scalar> {
        self.counit.row(0).to_vec()
    }

    /// `(Δ ⊗ id)Δ`, the iterated comultiplication `C -> C ⊗ C ⊗ C`.
    pub fn comul3(&self) -> Matrix {
        apply_on_factor(&self.comul, 1, self.dim(), &self.comul)
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("verify coalgebra");
        let d = self.dim();
        let lhs = self.comul3();
        let rhs = apply_on_factor(&self.comul, d, 1, &self.comul);
        r.check_maps("coassociativity", &lhs, &rhs, &[d]);
        let id = Matrix::identity(self.field(), d);
        r.check_maps("left counit", &apply_on_factor(&self.counit, 1, d, &self.comul), &id, &[d]);
        r.check_maps("right counit", &apply_on_factor(&self.counit, d, 1, &self.comul), &id, &[d]);
        r
    }

    /// Convolution algebra `C*`: `μ = Δᵀ`, `η = εᵀ`.
    pub fn dual(&self) -> Algebra {
        Algebra {
            mul: self.comul.transpose(),
            unit: self.counit.transpose(),
        }
    }

    pub fn change_basis(&self, q: &Matrix) -> Result<Coalgebra> {
        let inv = q.inverse().ok_or_else(|| Error::Precondition("change of basis is not invertible".into()))?;
        Ok(Coalgebra {
            comul: &(&inv.kron(&inv) * &self.comul) * q,
            counit: &self.counit * q,
        })
    }

    pub fn check_morphism(&self, target: &Coalgebra, f: &Matrix) -> Report {
        let mut r = Report::new("coalgebra morphism");
        if f.rows() != target.dim() || f.cols() != self.dim() {
            r.check("shape", false, &format!("{}x{} map", f.rows(), f.cols()));
            return r;
        }
        let d = self.dim();
        let lhs = &target.comul * f;
        let rhs = apply_on_factor(f, target.dim(), 1, &apply_on_factor(f, 1, d, &self.comul));
        r.check_maps("comultiplicative", &lhs, &rhs, &[d]);
        r.check_maps("counital", &(&target.counit * f), &self.counit, &[d]);
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl StructureKind {
    pub fn has_algebra(self) -> bool {
        self != StructureKind::Coalgebra
    }

    pub fn has_coalgebra(self) -> bool {
        self != StructureKind::Algebra
    }

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Algebra => "algebra",
            StructureKind::Coalgebra => "coalgebra",
            StructureKind::Bialgebra => "bialgebra",
            StructureKind::Hopf => "hopf",
        }
    }
}

/// An algebra, coalgebra, bialgebra or Hopf algebra with basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructurePresentation {
    pub kind: StructureKind,
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub algebra: Option<Algebra>,
    pub coalgebra: Option<Coalgebra>,
    pub antipode: Option<Matrix>,
}

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl StructurePresentation {
    pub fn from_algebra(labels: Vec<String>, algebra: Algebra) -> Self {
        StructurePresentation {
            kind: StructureKind::Algebra,
            field: algebra.field(),
            labels,
            algebra: Some(algebra),
            coalgebra: None,
            antipode: None,
        }
    }

    pub fn from_coalgebra(labels: Vec<String>, coalgebra: Coalgebra) -> Self {
        StructurePresentation {
            kind: StructureKind::Coalgebra,
            field: coalgebra.field(),
            labels,
            algebra: None,
            coalgebra: Some(coalgebra),
            antipode: None,
        }
    }

    pub fn bialgebra(labels: Vec<String>, algebra: Algebra, coalgebra: Coalgebra) -> Self {
        StructurePresentation {
            kind: StructureKind::Bialgebra,
            field: algebra.field(),
            labels,
            algebra: Some(algebra),
            coalgebra: Some(coalgebra),
            antipode: None,
        }
    }

    pub fn hopf(labels: Vec<String>, algebra: Algebra, coalgebra: Coalgebra, antipode: Option<Matrix>) -> Self {
        StructurePresentation {
            kind: StructureKind::Hopf,
            field: algebra.field(),
            labels,
            algebra: Some(algebra),
            coalgebra: Some(coalgebra),
            antipode,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn algebra(&self) -> Result<&Algebra> {
        self.algebra.as_ref().ok_or(Error::MissingPart {
            kind: self.kind.name(),
            part: "multiplication",
        })
    }

    pub fn coalgebra(&self) -> Result<&Coalgebra> {
        self.coalgebra.as_ref().ok_or(Error::MissingPart {
            kind: self.kind.name(),
            part: "comultiplication",
        })
    }

    /// Shape checks: the parts demanded by `kind` are present, dimensions agree.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.kind.has_algebra() != self.algebra.is_some() {
            return Err(Error::Malformed(format!("{} must {}have a multiplication", self.kind.name(), if self.kind.has_algebra() { "" } else { "not " })));
        }
        if self.kind.has_coalgebra() != self.coalgebra.is_some() {
            return Err(Error::Malformed(format!("{} must {}have a comultiplication", self.kind.name(), if self.kind.has_coalgebra() { "" } else { "not " })));
        }
        if self.antipode.is_some() && self.kind != StructureKind::Hopf {
            return Err(Error::Malformed("only hopf presentations carry an antipode".into()));
        }
        if let Some(a) = &self.algebra {
            expect_dim("algebra dimension", n, a.dim())?;
        }
        if let Some(c) = &self.coalgebra {
            expect_dim("coalgebra dimension", n, c.dim())?;
        }
        if let Some(s) = &self.antipode {
            expect_dim("antipode rows", n, s.rows())?;
            expect_dim("antipode columns", n, s.cols())?;
        }
        for m in [self.algebra.as_ref().map(|a| &a.mul), self.coalgebra.as_ref().map(|c| &c.comul)].into_iter().flatten() {
            if m.field() != self.field {
                return Err(Error::Malformed("structure constants over a different field".into()));
            }
        }
        Ok(())
    }

    /// Exhaustive verification of every axiom demanded by `kind`.
    pub fn verify(&self) -> Report {
        let mut r = Report::new(format!("verify {}", self.kind.name()));
        if let Err(e) = self.validate() {
            r.check("well-formed", false, &e.to_string());
            return r;
        }
        if let Some(a) = &self.algebra {
            r.absorb("algebra", a.verify());
        }
        if let Some(c) = &self.coalgebra {
            r.absorb("coalgebra", c.verify());
        }
        if let (Some(a), Some(c)) = (&self.algebra, &self.coalgebra) {
            r.absorb("bialgebra", verify_bialgebra_compat(a, c));
            if self.kind == StructureKind::Hopf && r.passed() {
                match &self.antipode {
                    Some(s) => {
                        r.absorb("hopf", verify_antipode(a, c, s));
                    }
                    None => {
                        let found = compute_antipode(a, c).ok().flatten();
                        r.check("hopf: antipode exists", found.is_some(), "identity is not convolution invertible");
                        if found.is_some() {
                            r.note("antipode computed as the convolution inverse of the identity");
                        }
                    }
                }
            }
        }
        r
    }

    /// Finite dual; in finite dimension the finite dual is the full dual.
    pub fn dual(&self) -> StructurePresentation {
        let labels = self.labels.iter().map(|l| format!("d[{l}]")).collect();
        let (algebra, coalgebra) = match self.kind {
            StructureKind::Algebra => (None, self.algebra.as_ref().map(Algebra::dual)),
            StructureKind::Coalgebra => (self.coalgebra.as_ref().map(Coalgebra::dual), None),
            _ => (
                self.coalgebra.as_ref().map(Coalgebra::dual),
                self.algebra.as_ref().map(Algebra::dual),
            ),
        };
        let kind = match self.kind {
            StructureKind::Algebra => StructureKind::Coalgebra,
            StructureKind::Coalgebra => StructureKind::Algebra,
            k => k,
        };
        StructurePresentation {
            kind,
            field: self.field,
            labels,
            algebra,
            coalgebra,
            antipode: self.antipode.as_ref().map(Matrix::transpose),
        }
    }

    /// The antipode: the stored one, or the convolution inverse of the identity.
    pub fn antipode_matrix(&self) -> Result<Option<Matrix>> {
        if let Some(s) = &self.antipode {
            return Ok(Some(s.clone()));
        }
        compute_antipode(self.algebra()?, self.coalgebra()?)
    }
}

/// `Δ` and `ε` are algebra morphisms.
pub fn verify_bialgebra_compat(a: &Algebra, c: &Coalgebra) -> Report {
    let mut r = Report::new("bialgebra compatibility");
    let n = a.dim();
    if c.dim() != n {
        r.check("same dimension", false, &format!("{} vs {}", n, c.dim()));
        return r;
    }
    let hh = a.tensor(a);
    r.absorb("comultiplication", a.check_morphism(&hh, &c.comul));
    let ground = Algebra {
        mul: Matrix::identity(a.field(), 1),
        unit: Matrix::identity(a.field(), 1),
    };
    r.absorb("counit", a.check_morphism(&ground, &c.counit));
    r
}

/// `S ⋆ id = id ⋆ S = η ε`.
pub fn verify_antipode(a: &Algebra, c: &Coalgebra, s: &Matrix) -> Report {
    let mut r = Report::new("antipode");
    let n = a.dim();
    let id = Matrix::identity(a.field(), n);
    let unit = &a.unit * &c.counit;
    let left = super::convolution::convolution(c, a, s, &id);
    let right = super::convolution::convolution(c, a, &id, s);
    match (left, right) {
        (Ok(l), Ok(rr)) => {
            r.check_maps("S * id = unit", &l, &unit, &[n]);
            r.check_maps("id * S = unit", &rr, &unit, &[n]);
        }
        (Err(e), _) | (_, Err(e)) => {
            r.check("shape", false, &e.to_string());
        }
    }
    r
}
