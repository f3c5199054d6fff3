//! Tensor-factor bookkeeping on top of dense matrices.
//!
//! A vector of `V1 ⊗ ... ⊗ Vk` is indexed row-major: the last factor varies
//! fastest, matching `Matrix::kron`.

use super::{FieldSpec, Matrix};

pub fn flat_index(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub fn split_index(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// `(I_left ⊗ f ⊗ I_right) * g` without materializing the Kronecker product.
pub fn apply_on_factor(f: &Matrix, left: usize, right: usize, g: &Matrix) -> Matrix {
    let (fr, fc) = (f.rows(), f.cols());
    assert_eq!(g.rows(), left * fc * right, "apply_on_factor: domain size");
    let mut out = Matrix::zeros(g.field(), left * fr * right, g.cols());
    for r in 0..g.rows() {
        let l = r / (fc * right);
        let x = (r / right) % fc;
        let rr = r % right;
        for j in 0..g.cols() {
            let gv = g.get(r, j);
            if gv.is_zero() {
                continue;
            }
            for y in 0..fr {
                let fv = f.get(y, x);
                if !fv.is_zero() {
                    out.entry_mut((l * fr + y) * right + rr, j).add_product(fv, gv);
                }
            }
        }
    }
    out
}

/// `I_left ⊗ f ⊗ I_right` as an explicit matrix.
pub fn lift(f: &Matrix, left: usize, right: usize) -> Matrix {
    let (fr, fc) = (f.rows(), f.cols());
    let mut out = Matrix::zeros(f.field(), left * fr * right, left * fc * right);
    for y in 0..fr {
        for x in 0..fc {
            let v = f.get(y, x);
            if v.is_zero() {
                continue;
            }
            for l in 0..left {
                for rr in 0..right {
                    out.set((l * fr + y) * right + rr, (l * fc + x) * right + rr, v.clone());
                }
            }
        }
    }
    out
}

/// Reorders the row tensor factors of `g`: output factor `t` is input factor `perm[t]`.
pub fn permute_factors(g: &Matrix, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    assert_eq!(g.rows(), dims.iter().product::<usize>(), "permute_factors: row count");
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = Matrix::zeros(g.field(), g.rows(), g.cols());
    let mut out_idx = vec![0; dims.len()];
    for r in 0..g.rows() {
        let idx = split_index(r, dims);
        for (t, &p) in perm.iter().enumerate() {
            out_idx[t] = idx[p];
        }
        let target = flat_index(&out_idx, &out_dims);
        for j in 0..g.cols() {
            let v = g.get(r, j);
            if !v.is_zero() {
                out.set(target, j, v.clone());
            }
        }
    }
    out
}

/// The linear map `V1 ⊗ ... ⊗ Vk -> V_perm[0] ⊗ ...` reordering factors.
pub fn permutation_map(field: FieldSpec, dims: &[usize], perm: &[usize]) -> Matrix {
    permute_factors(&Matrix::identity(field, dims.iter().product()), dims, perm)
}

/// Twist `V ⊗ W -> W ⊗ V`.
pub fn swap_map(field: FieldSpec, v: usize, w: usize) -> Matrix {
    permutation_map(field, &[v, w], &[1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_application_matches_kron() {
        let q = FieldSpec::Rational;
        let f = Matrix::from_ints(q, &[&[1, 2, 0], &[0, -1, 3]]);
        let g = Matrix::from_fn(q, 2 * 3 * 2, 2, |i, j| q.from_i64((i * 7 + j * 3) as i64 % 5 - 2));
        let explicit = &Matrix::identity(q, 2).kron(&f).kron(&Matrix::identity(q, 2)) * &g;
        assert_eq!(apply_on_factor(&f, 2, 2, &g), explicit);
        assert_eq!(lift(&f, 2, 2), Matrix::identity(q, 2).kron(&f).kron(&Matrix::identity(q, 2)));
    }

    #[test]
    fn swap_realizes_twist() {
        let q = FieldSpec::Rational;
        let a = Matrix::from_ints(q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(q, &[&[0, 1, 1], &[2, 0, 1], &[1, 1, 1]]);
        let lhs = &swap_map(q, 2, 3) * &a.kron(&b);
        let rhs = &b.kron(&a) * &swap_map(q, 2, 3);
        assert_eq!(lhs, rhs);
        assert_eq!(split_index(flat_index(&[1, 2, 0], &[2, 3, 4]), &[2, 3, 4]), vec![1, 2, 0]);
    }
}
