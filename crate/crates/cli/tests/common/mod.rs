//! Seeded random instances: coalgebras in random bases, comodules, modules
//! over `C* × k^b` with a known rational part, and measuring pairings of known rank.

use entwine::catalog::{grouplike_coalgebra, truncated_polynomials};
use entwine::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use entwine::structures::{Action, Algebra, Coaction, Coalgebra, PairingPresentation, Side};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    rng: ChaCha8Rng,
    pub field: FieldSpec,
}

/// A coalgebra in a random basis and one of its grouplikes.
pub struct RandomCoalgebra {
    pub coalgebra: Coalgebra,
    pub grouplike: Vec<Scalar>,
}

/// A left or right module over `C* × k^b`; its first `rational_dim`
/// coordinates before the basis change span the rational part.
pub struct RandomModule {
    pub action: Action,
    pub rational_dim: usize,
}

impl Gen {
    pub fn new(field: FieldSpec, seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn side(&mut self) -> Side {
        if self.rng.gen_bool(0.5) {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            FieldSpec::Rational => {
                let num = self.rng.gen_range(-3i64..=3);
                let den = self.rng.gen_range(1i64..=3);
                self.field.fraction(num, den).expect("nonzero denominator")
            }
            FieldSpec::Prime(p) => self.field.from_i64(self.rng.gen_range(0..p as i64)),
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |_, _| self.scalar())
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let q = self.matrix(n, n);
            if q.rank() == n {
                return q;
            }
        }
    }

    /// Grouplike or divided-power coalgebra of dimension at most `max_dim`, in a random basis.
    pub fn coalgebra(&mut self, max_dim: usize) -> RandomCoalgebra {
        let d = 1 + self.below(max_dim);
        let base = if self.rng.gen_bool(0.5) {
            grouplike_coalgebra(self.field, d)
        } else {
            truncated_polynomials(self.field, d).dual()
        };
        let q = self.invertible(d);
        let inv = q.inverse().expect("invertible");
        let e0: Vec<Scalar> = (0..d).map(|i| if i == 0 { self.field.one() } else { self.field.zero() }).collect();
        RandomCoalgebra {
            coalgebra: base.change_basis(&q).expect("invertible"),
            grouplike: inv.apply(&e0),
        }
    }

    /// A direct sum of regular and trivial comodules of total dimension at most `max_dim`, in a random basis.
    pub fn comodule(&mut self, c: &RandomCoalgebra, side: Side, max_dim: usize) -> Coaction {
        let d = c.coalgebra.dim();
        let mut pieces: Vec<Matrix> = Vec::new();
        let mut dim = 0;
        loop {
            let regular = dim + d <= max_dim && self.rng.gen_bool(0.5);
            if regular {
                pieces.push(c.coalgebra.comul.clone());
                dim += d;
            } else if dim < max_dim {
                pieces.push(Matrix::column_vector(self.field, c.grouplike.clone()));
                dim += 1;
            }
            if dim == max_dim || (dim > 0 && self.rng.gen_bool(0.4)) {
                break;
            }
        }
        let mut map = Matrix::zeros(self.field, dim * d, dim);
        let mut offset = 0;
        for p in &pieces {
            let k = p.cols();
            for i in 0..k {
                for m in 0..k {
                    for l in 0..d {
                        let row = match side {
                            Side::Right => (offset + m) * d + l,
                            Side::Left => l * dim + offset + m,
                        };
                        let src = match side {
                            Side::Right => m * d + l,
                            Side::Left => l * k + m,
                        };
                        map.set(row, offset + i, p.get(src, i).clone());
                    }
                }
            }
            offset += k;
        }
        let q = self.invertible(dim);
        let inv = q.inverse().expect("invertible");
        let ic = Matrix::identity(self.field, d);
        let cod = match side {
            Side::Right => inv.kron(&ic),
            Side::Left => ic.kron(&inv),
        };
        Coaction::new(side, &(&cod * &map) * &q)
    }

    /// `A = C* × k^b` paired with `C` through the projection onto `C*`.
    pub fn product_pairing(&mut self, c: &Coalgebra, b: usize) -> PairingPresentation {
        let (fs, d) = (self.field, c.dim());
        let n = d + b;
        let cstar = c.dual();
        let mut mul = Matrix::zeros(fs, n, n * n);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mul.set(k, i * n + j, cstar.mul.get(k, i * d + j).clone());
                }
            }
        }
        for t in d..n {
            mul.set(t, t * n + t, fs.one());
        }
        let unit = Matrix::from_fn(fs, n, 1, |i, _| if i < d { cstar.unit.get(i, 0).clone() } else { fs.one() });
        let pairing = Matrix::from_fn(fs, n, d, |i, l| if i == l { fs.one() } else { fs.zero() });
        PairingPresentation::new(Algebra::new(mul, unit).expect("shapes"), c.clone(), pairing).expect("shapes")
    }

    /// The same algebra paired through the character onto the last `k` factor: rank one.
    pub fn augmented_pairing(&mut self, c: &Coalgebra) -> PairingPresentation {
        let p = self.product_pairing(c, 1);
        let (n, d) = (p.alg_dim(), c.dim());
        let eps = c.counit_vec();
        let pairing = Matrix::from_fn(self.field, n, d, |i, l| if i == n - 1 { eps[l].clone() } else { self.field.zero() });
        PairingPresentation::new(p.algebra, p.coalgebra, pairing).expect("shapes")
    }

    /// Functions on `n` points paired with the grouplike coalgebra on `d` points
    /// through pullback along a random map; the rank is the size of its image.
    pub fn pullback_pairing(&mut self, n: usize, d: usize) -> (PairingPresentation, usize) {
        let fs = self.field;
        let phi: Vec<usize> = (0..d).map(|_| self.below(n)).collect();
        let mut image = phi.clone();
        image.sort_unstable();
        image.dedup();
        let q = self.invertible(d);
        let c = grouplike_coalgebra(fs, d).change_basis(&q).expect("invertible");
        let raw = Matrix::from_fn(fs, n, d, |j, i| if phi[i] == j { fs.one() } else { fs.zero() });
        let a = grouplike_coalgebra(fs, n).dual();
        (PairingPresentation::new(a, c, &raw * &q).expect("shapes"), image.len())
    }

    /// `M = N ⊕ k^extra` over `C* × k`: `C*` acts on the comodule `N`, the `k` factor on `k^extra`.
    pub fn module(&mut self, p: &PairingPresentation, c: &RandomCoalgebra, max_dim: usize) -> RandomModule {
        let side = self.side();
        let n_alg = p.alg_dim();
        let d = c.coalgebra.dim();
        let n1 = 1 + self.below(max_dim.min(4));
        let coaction = self.comodule(c, side.opposite(), n1);
        let base = p.comodule_to_module(&coaction).expect("shapes");
        let n1 = coaction.module_dim();
        let extra = if n_alg > d && n1 < max_dim { self.below(max_dim - n1 + 1) } else { 0 };
        let dim = n1 + extra;
        let fs = self.field;
        let map = Matrix::from_fn(fs, dim, dim * n_alg, |row, col| {
            let (m, a) = match side {
                Side::Right => (col / n_alg, col % n_alg),
                Side::Left => (col % dim, col / dim),
            };
            if row < n1 && m < n1 && a < n_alg {
                let src = match side {
                    Side::Right => m * n_alg + a,
                    Side::Left => a * n1 + m,
                };
                base.map.get(row, src).clone()
            } else if row >= n1 && m == row && a >= d {
                fs.one()
            } else {
                fs.zero()
            }
        });
        let q = self.invertible(dim);
        let inv = q.inverse().expect("invertible");
        let ia = Matrix::identity(fs, n_alg);
        let dom = match side {
            Side::Right => q.kron(&ia),
            Side::Left => ia.kron(&q),
        };
        RandomModule {
            action: Action::new(side, &(&inv * &map) * &dom),
            rational_dim: n1,
        }
    }

    /// The submodule generated by a random vector.
    pub fn cyclic_submodule(&mut self, action: &Action, alg_dim: usize) -> Subspace {
        let dim = action.module_dim();
        let v: Vec<Scalar> = (0..dim).map(|_| self.scalar()).collect();
        let mut sub = Subspace::from_vectors(self.field, dim, &[v]);
        loop {
            let mut gens: Vec<Vec<Scalar>> = (0..sub.dim()).map(|i| sub.basis_vector(i)).collect();
            for j in 0..alg_dim {
                let e: Vec<Scalar> = (0..alg_dim).map(|t| if t == j { self.field.one() } else { self.field.zero() }).collect();
                let op = action.operator(alg_dim, &e);
                for i in 0..sub.dim() {
                    gens.push(op.apply(&sub.basis_vector(i)));
                }
            }
            let next = Subspace::from_vectors(self.field, dim, &gens);
            if next.dim() == sub.dim() {
                return sub;
            }
            sub = next;
        }
    }
}

/// Basis of the module maps `f: M -> L` for two actions of the same algebra on the same side.
pub fn hom_basis(m: &Action, l: &Action, alg_dim: usize) -> Vec<Matrix> {
    let fs = m.map.field();
    let (dm, dl) = (m.module_dim(), l.module_dim());
    let unknowns = dl * dm;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..alg_dim {
        let e: Vec<Scalar> = (0..alg_dim).map(|t| if t == j { fs.one() } else { fs.zero() }).collect();
        let (om, ol) = (m.operator(alg_dim, &e), l.operator(alg_dim, &e));
        for y in 0..dl {
            for i in 0..dm {
                let mut row = vec![fs.zero(); unknowns];
                for x in 0..dm {
                    row[y * dm + x].add_assign_ref(om.get(x, i));
                }
                for z in 0..dl {
                    let neg = fs.zero() - ol.get(y, z).clone();
                    row[z * dm + i].add_assign_ref(&neg);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(fs, rows, unknowns).expect("row lengths");
    let kernel = Subspace::kernel_of(&system);
    (0..kernel.dim())
        .map(|b| {
            let v = kernel.basis_vector(b);
            Matrix::from_fn(fs, dl, dm, |y, x| v[y * dm + x].clone())
        })
        .collect()
}
