use heisdouble::heisenberg::{
    faithfulness_witnesses, highest_weight_selftest, lowest_weight_selftest, nonfaithfulness_witness, stone_von_neumann,
};
use heisdouble::instances::{NilcoxeterPair, QuasiPair, SymPair};
use heisdouble::report::Report;

fn ok(r: Report) {
    assert!(r.passed(), "{}: {:?}", r.suite, r.failures.first());
}

#[test]
fn projectors_to_four() {
    for ell in 1..=4 {
        ok(stone_von_neumann(QuasiPair::shared(), ell, 4).unwrap());
        ok(stone_von_neumann(SymPair::shared(), ell, 4).unwrap());
        ok(stone_von_neumann(NilcoxeterPair::shared(), ell, 4).unwrap());
    }
}

#[test]
fn faithfulness_hundred_samples() {
    ok(faithfulness_witnesses(QuasiPair::shared(), 100, 3, 1));
    ok(faithfulness_witnesses(SymPair::shared(), 100, 3, 2));
    ok(faithfulness_witnesses(NilcoxeterPair::shared(), 100, 3, 3));
}

#[test]
fn nonfaithful_on_sym_to_eight() {
    ok(nonfaithfulness_witness(8));
}

#[test]
fn fock_space_selftests() {
    ok(lowest_weight_selftest(QuasiPair::shared(), 5));
    ok(lowest_weight_selftest(SymPair::shared(), 5));
    ok(lowest_weight_selftest(NilcoxeterPair::shared(), 8));
    ok(highest_weight_selftest(QuasiPair::shared(), 5));
    ok(highest_weight_selftest(SymPair::shared(), 5));
    ok(highest_weight_selftest(NilcoxeterPair::shared(), 8));
}
