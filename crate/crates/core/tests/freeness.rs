use heisdouble::combinatorics::{compositions, partitions};
use heisdouble::freeness::{closed_form_piece, free_generators, freeness_report, Filtration};
use num_traits::Signed;

const D: usize = 6;

#[test]
fn filtration_matches_closed_form() {
    let f = Filtration::new(D).unwrap();
    for d in 0..=D {
        for n in 0..=d {
            let oracle = closed_form_piece(n, d).unwrap();
            let piece = f.piece(n, d);
            assert!(piece.contains(&oracle) && oracle.contains(piece), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn extreme_levels() {
    let f = Filtration::new(D).unwrap();
    for d in 0..=D {
        assert_eq!(f.piece(0, d).rank(), partitions(d).len());
        assert_eq!(f.piece(d, d).rank(), compositions(d).len());
    }
}

#[test]
fn certificate_up_to_six() {
    let c = free_generators(D).unwrap();
    assert_eq!(c.counts, vec![1, 0, 0, 1, 2, 5, 9]);
    assert!(c.determinants.iter().all(|d| d.abs() == 1.into()));
    let (rep, _) = freeness_report(D).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
}
