use crate::exactlin::{FieldSpec, Matrix};
use crate::structures::{Algebra, Coalgebra, StructurePresentation};

/// Group algebra of the cyclic group of order `n`, basis `g^0, ..., g^{n-1}`.
pub fn cyclic_group_algebra(field: FieldSpec, n: usize) -> StructurePresentation {
    let mut mul = Matrix::zeros(field, n, n * n);
    let mut comul = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        for j in 0..n {
            mul.set((i + j) % n, i * n + j, field.one());
        }
        comul.set(i * n + i, i, field.one());
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, field.one());
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    let antipode = Matrix::from_fn(field, n, n, |r, c| if r == (n - c) % n { field.one() } else { field.zero() });
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    StructurePresentation::hopf(labels, Algebra { mul, unit }, Coalgebra { comul, counit }, Some(antipode))
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
/// The antipode is left to be computed.
pub fn sweedler(field: FieldSpec) -> StructurePresentation {
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mul = Matrix::zeros(field, 4, 16);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b + d >= 2 {
                        continue;
                    }
                    let sign = if b * c == 1 { -1 } else { 1 };
                    mul.set(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), field.from_i64(sign));
                }
            }
        }
    }
    let mut unit = Matrix::zeros(field, 4, 1);
    unit.set(0, 0, field.one());
    let mut comul = Matrix::zeros(field, 16, 4);
    let one = field.one();
    comul.set(0, 0, one.clone());
    comul.set(5, 1, one.clone());
    // Δx = x ⊗ 1 + g ⊗ x
    comul.set(2 * 4, 2, one.clone());
    comul.set(4 + 2, 2, one.clone());
    // Δ(gx) = gx ⊗ g + 1 ⊗ gx
    comul.set(3 * 4 + 1, 3, one.clone());
    comul.set(3, 3, one);
    let counit = Matrix::from_ints(field, &[&[1, 1, 0, 0]]);
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    StructurePresentation::hopf(labels, Algebra { mul, unit }, Coalgebra { comul, counit }, None)
}

/// The one-dimensional bialgebra `k`.
pub fn trivial(field: FieldSpec) -> StructurePresentation {
    let one = Matrix::identity(field, 1);
    StructurePresentation::hopf(
        vec!["1".to_string()],
        Algebra {
            mul: one.clone(),
            unit: one.clone(),
        },
        Coalgebra {
            comul: one.clone(),
            counit: one.clone(),
        },
        Some(one),
    )
}

/// `k × k` with idempotents `e1, e2`.
pub fn diagonal_algebra(field: FieldSpec, n: usize) -> Algebra {
    let mut mul = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        mul.set(i, i * n + i, field.one());
    }
    Algebra {
        mul,
        unit: Matrix::from_fn(field, n, 1, |_, _| field.one()),
    }
}

/// `k[x]/(x^n)`, basis `1, x, ..., x^{n-1}`.
pub fn truncated_polynomials(field: FieldSpec, n: usize) -> Algebra {
    let mut mul = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mul.set(i + j, i * n + j, field.one());
            }
        }
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, field.one());
    Algebra { mul, unit }
}

/// The grouplike coalgebra on `n` points: `Δ c_i = c_i ⊗ c_i`, `ε(c_i) = 1`.
pub fn grouplike_coalgebra(field: FieldSpec, n: usize) -> Coalgebra {
    diagonal_algebra(field, n).dual()
}
