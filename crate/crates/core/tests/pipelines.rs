use entwine::catalog::{cyclic_group_algebra, sweedler, truncated_polynomials, grouplike_coalgebra};
use entwine::doikoppinen::{dk_entwining, koppinen_smash, DkStructure};
use entwine::duality::{adjunction_check, dual_entwining};
use entwine::entwining::{build_coring, build_smash, entwined_smash_roundtrip, free_entwined_module, nu_iso, Entwining};
use entwine::exactlin::{FieldSpec, Matrix};
use entwine::structures::compute_antipode;

fn q() -> FieldSpec {
    FieldSpec::Rational
}

#[test]
fn sweedler_antipode() {
    let h = sweedler(q());
    let s = compute_antipode(h.algebra().unwrap(), h.coalgebra().unwrap()).unwrap().unwrap();
    let expected = Matrix::from_ints(q(), &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    assert_eq!(s, expected);
}

fn run_pipelines(e: &Entwining) {
    assert!(e.verify().passed(), "{:?}", e.verify());
    build_coring(e).unwrap();
    build_smash(e).unwrap();
    nu_iso(e).unwrap();
    let m = free_entwined_module(e);
    assert!(entwined_smash_roundtrip(e, &m).unwrap().passed());
    let dd = dual_entwining(e, None, None).unwrap();
    assert_eq!(dd.dual.psi, e.psi.transpose());
    adjunction_check(&dd, &m, &free_entwined_module(&dd.dual)).unwrap();
}

#[test]
fn flip_pipelines() {
    let e = Entwining::flip(truncated_polynomials(q(), 2), grouplike_coalgebra(q(), 2));
    run_pipelines(&e);
}

#[test]
fn hopf_module_pipelines() {
    for h in [cyclic_group_algebra(q(), 2), sweedler(q())] {
        let s = DkStructure::hopf_modules(h).unwrap();
        let (e, _) = dk_entwining(&s).unwrap();
        run_pipelines(&e);
        koppinen_smash(&s).unwrap();
    }
}

#[test]
fn dk_dual_transposes_psi() {
    use entwine::doikoppinen::{dk_dual_module, dual_dk, dualize_ingredient, DualArrow};
    use entwine::entwining::free_entwined_module;
    let s = DkStructure::hopf_modules(sweedler(q())).unwrap();
    let (d, rep) = dual_dk(&s).unwrap();
    assert!(rep.passed());
    assert_eq!(d.hopf_dim(), 4);
    let (e, _) = dk_entwining(&s).unwrap();
    dk_dual_module(&s, &free_entwined_module(&e)).unwrap();
    for x in [s.algebra_ingredient(), s.coalgebra_ingredient()] {
        for arrow in [DualArrow::SameSpace, DualArrow::Transpose] {
            dualize_ingredient(&s.hopf, &x, arrow).unwrap();
        }
    }
}
