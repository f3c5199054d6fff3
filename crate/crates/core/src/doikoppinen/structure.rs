use crate::entwining::{
    basis_hom, build_smash, hom_to_vec, verify_entwined_module, verify_entwining_morphism, Entwining, SmashRing,
};
use crate::error::{expect_dim, require, require_internal, Error, Result};
use crate::exactlin::tensor::{apply_on_factor, lift, permutation_map, permute_factors};
use crate::exactlin::Matrix;
use crate::report::Report;
use crate::structures::{Algebra, Coalgebra, ModulePresentation, Side, StructurePresentation};

use super::ingredient::{verify_dk_compat, Ingredient};

/// `(H, A, C)`: `A` a right `H`-comodule algebra, `C` a right `H`-module coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkStructure {
    pub hopf: StructurePresentation,
    pub algebra: Algebra,
    /// `A -> A ⊗ H`
    pub coaction: Matrix,
    pub coalgebra: Coalgebra,
    /// `C ⊗ H -> C`
    pub action: Matrix,
}

impl DkStructure {
    pub fn new(hopf: StructurePresentation, algebra: Algebra, coaction: Matrix, coalgebra: Coalgebra, action: Matrix) -> Result<Self> {
        let h = hopf.dim();
        expect_dim("comodule algebra coaction rows", algebra.dim() * h, coaction.rows())?;
        expect_dim("comodule algebra coaction columns", algebra.dim(), coaction.cols())?;
        expect_dim("module coalgebra action rows", coalgebra.dim(), action.rows())?;
        expect_dim("module coalgebra action columns", coalgebra.dim() * h, action.cols())?;
        Ok(DkStructure {
            hopf,
            algebra,
            coaction,
            coalgebra,
            action,
        })
    }

    /// `(H, H, H)`: `H` coacting on itself by `Δ` and acting on itself by `μ`.
    pub fn hopf_modules(hopf: StructurePresentation) -> Result<Self> {
        let a = hopf.algebra()?.clone();
        let c = hopf.coalgebra()?.clone();
        let coaction = c.comul.clone();
        let action = a.mul.clone();
        DkStructure::new(hopf, a, coaction, c, action)
    }

    /// `(k, A, C)` with trivial structure maps; its modules are Long dimodules.
    pub fn long(ground: StructurePresentation, algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        expect_dim("ground bialgebra dimension", 1, ground.dim())?;
        let coaction = Matrix::identity(algebra.field(), algebra.dim());
        let action = Matrix::identity(algebra.field(), coalgebra.dim());
        DkStructure::new(ground, algebra, coaction, coalgebra, action)
    }

    pub fn hopf_dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn algebra_ingredient(&self) -> Ingredient {
        Ingredient::ComoduleAlgebra {
            side: Side::Right,
            algebra: self.algebra.clone(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn coalgebra_ingredient(&self) -> Ingredient {
        Ingredient::ModuleCoalgebra {
            side: Side::Right,
            coalgebra: self.coalgebra.clone(),
            action: self.action.clone(),
        }
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("verify Doi-Koppinen structure");
        r.absorb("H", self.hopf.verify());
        if !r.passed() {
            return r;
        }
        if !r.check("H is a bialgebra", self.hopf.algebra.is_some() && self.hopf.coalgebra.is_some(), "H lacks a part") {
            return r;
        }
        let (ha, hc) = (self.hopf.algebra.as_ref().unwrap(), self.hopf.coalgebra.as_ref().unwrap());
        r.absorb("A", verify_dk_compat(ha, hc, &self.algebra_ingredient()));
        r.absorb("C", verify_dk_compat(ha, hc, &self.coalgebra_ingredient()));
        r
    }
}

/// `ψ(c ⊗ a) = Σ a0 ⊗ c a1`.
pub fn dk_entwining(s: &DkStructure) -> Result<(Entwining, Report)> {
    let mut r = Report::new("Doi-Koppinen entwining");
    if !r.absorb("structure", s.verify()) {
        return Err(Error::Unverified(Box::new(r)));
    }
    let (n, d, h) = (s.algebra.dim(), s.coalgebra.dim(), s.hopf_dim());
    let fs = s.algebra.field();
    let step = lift(&s.coaction, d, 1);
    let step = &permutation_map(fs, &[d, n, h], &[1, 0, 2]) * &step;
    let psi = apply_on_factor(&s.action, n, 1, &step);
    let e = Entwining::new(s.algebra.clone(), s.coalgebra.clone(), psi)?;
    r.absorb("entwining", e.verify());
    Ok((e, require_internal(r)?))
}

/// `ψ(c ⊗ a) = Σ a c1 ⊗ c0` for a right module algebra and a right comodule coalgebra.
pub fn alt_dk_entwining(hopf: &StructurePresentation, a: &Ingredient, c: &Ingredient) -> Result<(Entwining, Report)> {
    let mut r = Report::new("alternative Doi-Koppinen entwining");
    let (ha, hc) = (hopf.algebra()?, hopf.coalgebra()?);
    let (algebra, action) = match a {
        Ingredient::ModuleAlgebra {
            side: Side::Right,
            algebra,
            action,
        } => (algebra, action),
        _ => return Err(Error::Precondition("expected a right module algebra".into())),
    };
    let (coalgebra, coaction) = match c {
        Ingredient::ComoduleCoalgebra {
            side: Side::Right,
            coalgebra,
            coaction,
        } => (coalgebra, coaction),
        _ => return Err(Error::Precondition("expected a right comodule coalgebra".into())),
    };
    r.absorb("A", verify_dk_compat(ha, hc, a));
    r.absorb("C", verify_dk_compat(ha, hc, c));
    let r = require(r)?;
    let (n, d, h) = (algebra.dim(), coalgebra.dim(), hopf.dim());
    let fs = algebra.field();
    let step = lift(coaction, 1, n);
    let step = &permutation_map(fs, &[d, h, n], &[2, 1, 0]) * &step;
    let psi = apply_on_factor(action, 1, d, &step);
    let e = Entwining::new(algebra.clone(), coalgebra.clone(), psi)?;
    let mut r = r;
    r.absorb("entwining", e.verify());
    Ok((e, require(r)?))
}

/// `(f·g)(c) = Σ f(c2)_0 g(c1 f(c2)_1)`, computed from the structure maps of `s`.
pub fn koppinen_product(s: &DkStructure, f: &Matrix, g: &Matrix) -> Matrix {
    let (n, d, h) = (s.algebra.dim(), s.coalgebra.dim(), s.hopf_dim());
    let step = apply_on_factor(f, d, 1, &s.coalgebra.comul);
    let step = apply_on_factor(&s.coaction, d, 1, &step);
    let step = permute_factors(&step, &[d, n, h], &[1, 0, 2]);
    let step = apply_on_factor(&s.action, n, 1, &step);
    let step = apply_on_factor(g, n, 1, &step);
    &s.algebra.mul * &step
}

/// The smash ring built from the Koppinen formula, compared table-for-table
/// with the smash ring of the induced entwining.
pub fn koppinen_smash(s: &DkStructure) -> Result<(SmashRing, Report)> {
    let (e, _) = dk_entwining(s)?;
    let (ring, _) = build_smash(&e)?;
    let mut r = Report::new("Koppinen smash");
    let size = ring.ring.dim();
    let fs = s.algebra.field();
    let mut mul = Matrix::zeros(fs, size, size * size);
    for p in 0..size {
        let fp = basis_hom(&e, p);
        for q in 0..size {
            let prod = hom_to_vec(&koppinen_product(s, &fp, &basis_hom(&e, q)));
            for (t, v) in prod.into_iter().enumerate() {
                mul.set(t, p * size + q, v);
            }
        }
    }
    r.check_maps("Koppinen product = entwining smash product", &mul, &ring.ring.mul, &[size, size]);
    Ok((ring, require_internal(r)?))
}

/// Long compatibility `ϱ(m a) = Σ m0 a ⊗ m1`, cross-checked against the flip entwining.
pub fn long_dimodule_check(a: &Algebra, c: &Coalgebra, m: &ModulePresentation) -> Report {
    let mut r = Report::new("Long dimodule");
    let (rho, varrho) = match (m.right_action(), m.right_coaction()) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            r.check("right action and right coaction present", false, &e.to_string());
            return r;
        }
    };
    if !r.absorb("components", m.verify(Some(a), Some(c))) {
        return r;
    }
    let (d, n, k) = (m.dim, a.dim(), c.dim());
    let fs = a.field();
    let lhs = varrho * rho;
    let step = lift(varrho, 1, n);
    let step = &permutation_map(fs, &[d, k, n], &[0, 2, 1]) * &step;
    let rhs = apply_on_factor(rho, 1, k, &step);
    let long = lhs == rhs;
    r.check_maps("rho(m a) = m0 a (x) m1", &lhs, &rhs, &[d, n]);
    let flip = Entwining::flip(a.clone(), c.clone());
    let entwined = verify_entwined_module(&flip, m).passed();
    r.note(format!("entwined over the flip entwining: {entwined}"));
    let mut agree = Report::new("Long dimodule");
    agree.check("agrees with the flip-entwined check", long == entwined, "the two checks disagree");
    r.absorb("identification", agree);
    r
}

/// `Σ γ(a0) ⊗ δ(c a1) = Σ γ(a)0 ⊗ δ(c) γ(a)1`, after checking the components.
pub fn verify_dk_morphism(s: &DkStructure, t: &DkStructure, beta: &Matrix, gamma: &Matrix, delta: &Matrix) -> Result<Report> {
    let mut r = Report::new("Doi-Koppinen morphism");
    let (sa, sc) = (s.hopf.algebra()?, s.hopf.coalgebra()?);
    let (ta, tc) = (t.hopf.algebra()?, t.hopf.coalgebra()?);
    r.absorb("beta multiplicative", sa.check_morphism(ta, beta));
    r.absorb("beta comultiplicative", sc.check_morphism(tc, beta));
    if !r.passed() {
        return Ok(r);
    }
    let (es, _) = dk_entwining(s)?;
    let (et, _) = dk_entwining(t)?;
    r.absorb("entwining square", verify_entwining_morphism(&es, &et, gamma, delta));
    Ok(r)
}
