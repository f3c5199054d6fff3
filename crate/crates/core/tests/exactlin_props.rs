use entwine::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rational), Just(FieldSpec::Prime(5)), Just(FieldSpec::Prime(7))]
}

fn scalar(fs: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(move |(n, d)| match fs {
        FieldSpec::Rational => fs.fraction(n, d).unwrap(),
        FieldSpec::Prime(_) => fs.from_i64(n),
    })
}

fn matrix(fs: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(fs), rows * cols)
        .prop_map(move |v| Matrix::from_fn(fs, rows, cols, |i, j| v[i * cols + j].clone()))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in field().prop_flat_map(|fs| (scalar(fs), scalar(fs), scalar(fs)))) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a - &a, a.field().zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn display_parses_back(a in field().prop_flat_map(scalar)) {
        prop_assert_eq!(a.field().parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn inverse_is_two_sided(m in field().prop_flat_map(|fs| matrix(fs, 3, 3))) {
        let id = Matrix::identity(m.field(), 3);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(&m * &inv, id.clone());
                prop_assert_eq!(&inv * &m, id);
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn rank_nullity(m in field().prop_flat_map(|fs| matrix(fs, 3, 5))) {
        let kernel = Subspace::kernel_of(&m);
        prop_assert_eq!(m.rank() + kernel.dim(), 5);
        for i in 0..kernel.dim() {
            prop_assert!(m.apply(&kernel.basis_vector(i)).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(Subspace::image_of(&m).dim(), m.rank());
    }

    #[test]
    fn kron_is_multiplicative((a, b, c, d) in field().prop_flat_map(|fs| {
        (matrix(fs, 2, 2), matrix(fs, 2, 3), matrix(fs, 2, 2), matrix(fs, 3, 2))
    })) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }
}
