use heisdouble::combinatorics::partitions;
use heisdouble::rootofunity::{glaisher_check, ideal_split, quotient_heisenberg_check, split_check, z_cross_check};

#[test]
fn quotient_heisenberg_relations() {
    for ell in [2, 3] {
        let r = quotient_heisenberg_check(ell, 6).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
    }
}

#[test]
fn orthogonal_split_to_ten() {
    for ell in 2..=5 {
        let r = split_check(ell, 10).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
        for n in 0..=10 {
            let s = ideal_split(ell, n).unwrap();
            assert_eq!(s.ideal.len() + s.perp.len(), partitions(n).len());
        }
    }
}

#[test]
fn glaisher_to_fifteen() {
    assert!(glaisher_check(15, 5).passed());
}

#[test]
fn power_sum_norms() {
    assert!(z_cross_check(6).passed());
}
