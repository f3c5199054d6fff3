use super::{FieldSpec, LinalgError, Matrix, Scalar};

/// A linear subspace of `field^ambient`, stored by its canonical RREF basis.
///
/// Two spanning sets of the same subspace give structurally equal values, so
/// `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `generators`.
    pub fn span(generators: &Matrix) -> Self {
        let (basis, pivots) = generators.rref();
        Subspace {
            ambient: generators.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let rows = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        Subspace::span(&rows)
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace::span(&Matrix::zeros(field, 0, ambient))
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace::span(&Matrix::identity(field, ambient))
    }

    /// `{x : map * x = 0}`.
    pub fn kernel_of(map: &Matrix) -> Self {
        Subspace::span(&map.kernel())
    }

    /// Column space of `map`.
    pub fn image_of(map: &Matrix) -> Self {
        Subspace::span(&map.transpose())
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row(i).to_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "coordinates: ambient dimension");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (t, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in residual.iter_mut().enumerate() {
                let b = self.basis.get(t, j);
                if !b.is_zero() {
                    *r = &*r - &(c * b);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Reduces `v` modulo the subspace: the unique representative vanishing on every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut residual = v.to_vec();
        for (t, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, r) in residual.iter_mut().enumerate() {
                let b = self.basis.get(t, j);
                if !b.is_zero() {
                    *r = &*r - &(&c * b);
                }
            }
        }
        residual
    }

    /// Standard basis indices complementing the pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: usize, context: &'static str) -> Result<(), LinalgError> {
        if self.ambient != other {
            return Err(LinalgError::DimensionMismatch {
                context,
                expected: self.ambient,
                found: other,
            });
        }
        Ok(())
    }

    /// Rows spanning `{y : y . w = 0 for all w in self}`.
    pub fn annihilator(&self) -> Matrix {
        if self.dim() == 0 {
            return Matrix::identity(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient, "sum")?;
        Ok(Subspace::span(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient, "intersect")?;
        let constraints = self.annihilator().vstack(&other.annihilator());
        Ok(Subspace::kernel_of(&constraints))
    }

    /// Image of this subspace under `map`.
    pub fn image(&self, map: &Matrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(map.cols(), "image")?;
        Ok(Subspace::span(&(&self.basis * &map.transpose())))
    }

    /// `{x : map * x in target}`.
    pub fn preimage(map: &Matrix, target: &Subspace) -> Result<Subspace, LinalgError> {
        target.check_ambient(map.rows(), "preimage")?;
        let constraints = &target.annihilator() * map;
        Ok(Subspace::kernel_of(&constraints))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        (0..n).map(|j| q().from_i64((i == j) as i64)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(Subspace::kernel_of(&Matrix::identity(q(), 4)), Subspace::zero(q(), 4));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let u = Subspace::from_vectors(q(), 3, &[e(0, 3), e(1, 3)]);
        let w = Subspace::from_vectors(q(), 3, &[e(1, 3), e(2, 3)]);
        assert_eq!(u.intersect(&w).unwrap(), Subspace::from_vectors(q(), 3, &[e(1, 3)]));
    }

    #[test]
    fn preimage_matches_brute_force() {
        // Over F_5 every vector of the plane can be enumerated.
        let f5 = FieldSpec::prime(5).unwrap();
        let map = Matrix::from_ints(f5, &[&[1, 1], &[0, 0]]);
        let target = Subspace::from_vectors(f5, 2, &[vec![f5.one(), f5.zero()]]);
        let pre = Subspace::preimage(&map, &target).unwrap();
        let mut hits = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                let v = vec![f5.from_i64(a), f5.from_i64(b)];
                if target.contains(&map.apply(&v)) {
                    hits.push(v);
                }
            }
        }
        assert_eq!(pre, Subspace::from_vectors(f5, 2, &hits));
        assert_eq!(pre, Subspace::full(f5, 2));
        let narrow = Subspace::preimage(&map, &Subspace::zero(f5, 2)).unwrap();
        assert_eq!(narrow, Subspace::from_vectors(f5, 2, &[vec![f5.one(), f5.from_i64(-1)]]));
    }

    #[test]
    fn canonical_representative() {
        let a = Subspace::from_vectors(q(), 3, &[vec![q().from_i64(1), q().from_i64(2), q().from_i64(3)], e(2, 3)]);
        let b = Subspace::from_vectors(
            q(),
            3,
            &[vec![q().from_i64(2), q().from_i64(4), q().from_i64(0)], vec![q().from_i64(1), q().from_i64(2), q().from_i64(1)]],
        );
        assert_eq!(a, b);
        let v = vec![q().from_i64(3), q().from_i64(6), q().from_i64(5)];
        let c = a.coordinates(&v).unwrap();
        assert_eq!(c, vec![q().from_i64(3), q().from_i64(5)]);
        assert!(!a.contains(&e(1, 3)));
        assert_eq!(a.reduce(&e(1, 3)), e(1, 3));
        assert_eq!(a.complement_indices(), vec![1]);
    }
}
