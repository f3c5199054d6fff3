use crate::error::{expect_dim, Result};
use crate::exactlin::tensor::apply_on_factor;
use crate::exactlin::{solve_linear, Matrix, Scalar};

use super::algebra::{Algebra, Coalgebra};

/// `f ⋆ g = μ (f ⊗ g) Δ` for `f, g: C -> A`.
pub fn convolution(c: &Coalgebra, a: &Algebra, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    for (name, m) in [("left factor", f), ("right factor", g)] {
        expect_dim(&format!("convolution {name} rows"), a.dim(), m.rows())?;
        expect_dim(&format!("convolution {name} columns"), c.dim(), m.cols())?;
    }
    let step = apply_on_factor(f, 1, c.dim(), &c.comul);
    let step = apply_on_factor(g, a.dim(), 1, &step);
    Ok(&a.mul * &step)
}

/// The unit `η ε` of `(Hom(C, A), ⋆)`.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> Matrix {
    &a.unit * &c.counit
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvolutionInverse {
    TwoSided(Matrix),
    /// `f ⋆ g = ηε` but `g ⋆ f ≠ ηε`.
    RightOnly(Matrix),
    /// `g ⋆ f = ηε` but no right inverse.
    LeftOnly(Matrix),
    NotInvertible,
}

impl ConvolutionInverse {
    pub fn two_sided(&self) -> Option<&Matrix> {
        match self {
            ConvolutionInverse::TwoSided(m) => Some(m),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            ConvolutionInverse::TwoSided(_) => "two-sided inverse",
            ConvolutionInverse::RightOnly(_) => "right inverse only",
            ConvolutionInverse::LeftOnly(_) => "left inverse only",
            ConvolutionInverse::NotInvertible => "not invertible",
        }
    }
}

fn basis_map(a: &Algebra, c: &Coalgebra, idx: usize) -> Matrix {
    let mut e = Matrix::zeros(a.field(), a.dim(), c.dim());
    e.set(idx / c.dim(), idx % c.dim(), a.field().one());
    e
}

/// Matrix of `g ↦ f ⋆ g` (or `g ↦ g ⋆ f`) on `Hom(C, A)`, vectorized row-major.
fn multiplication_operator(c: &Coalgebra, a: &Algebra, f: &Matrix, f_on_left: bool) -> Result<Matrix> {
    let n = a.dim() * c.dim();
    let mut cols = Vec::with_capacity(n);
    for idx in 0..n {
        let e = basis_map(a, c, idx);
        let prod = if f_on_left { convolution(c, a, f, &e)? } else { convolution(c, a, &e, f)? };
        cols.push(prod.entries().to_vec());
    }
    Ok(Matrix::from_columns(a.field(), n, &cols))
}

fn solve_side(c: &Coalgebra, a: &Algebra, f: &Matrix, f_on_left: bool) -> Result<Option<Matrix>> {
    let op = multiplication_operator(c, a, f, f_on_left)?;
    let target: Vec<Scalar> = convolution_unit(c, a).entries().to_vec();
    let sol = solve_linear(&op, &Matrix::column_vector(a.field(), target))?;
    Ok(sol.map(|s| {
        let v = s.particular.column(0);
        Matrix::from_fn(a.field(), a.dim(), c.dim(), |i, k| v[i * c.dim() + k].clone())
    }))
}

/// Right inverse by linear solve, then the left identity is checked.
pub fn convolution_inverse(c: &Coalgebra, a: &Algebra, f: &Matrix) -> Result<ConvolutionInverse> {
    let unit = convolution_unit(c, a);
    if let Some(g) = solve_side(c, a, f, true)? {
        return Ok(if convolution(c, a, &g, f)? == unit {
            ConvolutionInverse::TwoSided(g)
        } else {
            ConvolutionInverse::RightOnly(g)
        });
    }
    Ok(match solve_side(c, a, f, false)? {
        Some(g) => ConvolutionInverse::LeftOnly(g),
        None => ConvolutionInverse::NotInvertible,
    })
}

/// Convolution inverse of the identity, when it is two-sided.
pub fn compute_antipode(a: &Algebra, c: &Coalgebra) -> Result<Option<Matrix>> {
    expect_dim("antipode: coalgebra dimension", a.dim(), c.dim())?;
    let id = Matrix::identity(a.field(), a.dim());
    Ok(convolution_inverse(c, a, &id)?.two_sided().cloned())
}
