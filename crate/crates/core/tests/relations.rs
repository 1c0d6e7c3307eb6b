use heisdouble::heisenberg::{verify_relations, Suite};

fn run(s: Suite, d: usize) {
    let r = verify_relations(s, d);
    assert!(
        r.passed(),
        "{s}: {} failures, first {:?}",
        r.failures.len(),
        r.failures.first()
    );
}

#[test]
fn sym_eh_degree_8() {
    run(Suite::SymEh, 8);
}

#[test]
fn sym_other_degree_8() {
    run(Suite::SymOther, 8);
}

#[test]
fn sym_p_degree_8() {
    run(Suite::SymP, 8);
}

#[test]
fn quasi_monomial_degree_8() {
    run(Suite::QuasiM, 8);
}

#[test]
fn quasi_fundamental_degree_8() {
    run(Suite::QuasiF, 8);
}

#[test]
fn quasi_symmetric_monomial_degree_8() {
    run(Suite::QuasiSym, 8);
}

#[test]
fn projective_presentation_degree_8() {
    run(Suite::ProjPresentation, 8);
}

#[test]
fn weyl_degree_20() {
    run(Suite::Weyl, 20);
}
