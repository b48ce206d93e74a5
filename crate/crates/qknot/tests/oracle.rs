//! Double points of classical and catalog curves against the brute-force oracle.

mod common;

use common::oracle::compare;
use qknot::catalog::entry;
use qknot::curve::{Ambient, MobiusMap, RationalCurve};

fn plane(rows: &[&[i64]]) -> RationalCurve {
    let mut r: Vec<&[i64]> = vec![&[0, 0, 0, 0][..rows[0].len()]];
    r.extend_from_slice(rows);
    r.push(&[0, 0, 0, 0][..rows[0].len()]);
    RationalCurve::from_ints(Ambient::Rp3Slice, &r).unwrap()
}

#[test]
fn nodal_and_solitary_cubics() {
    // y² = x²(x + 1) and y² = x²(x − 1)
    assert_eq!(
        compare(&plane(&[&[0, 0, 0, 1], &[0, 1, 0, -1], &[1, 0, -1, 0]])).unwrap(),
        (1, 0)
    );
    assert_eq!(
        compare(&plane(&[&[0, 0, 0, 1], &[0, 1, 0, 1], &[1, 0, 1, 0]])).unwrap(),
        (1, 0)
    );
}

#[test]
fn cuspidal_cubic() {
    // y² = x³ is [s²t : s³ : t³]; the cusp is not a double point
    assert_eq!(
        compare(&plane(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[1, 0, 0, 0]])).unwrap(),
        (0, 1)
    );
}

#[test]
fn catalog_walls_and_edge() {
    for id in ["deg4-wall-1", "deg4-wall-2", "deg5-edge", "deg3", "deg4a"] {
        // the oracle works in the chart [x:1]; move parameters off [1:0]
        let c = entry(id)
            .unwrap()
            .curve()
            .unwrap()
            .reparam(&MobiusMap::from_ints(2, 1, 1, -3).unwrap());
        let r = compare(&c);
        assert!(r.is_ok(), "{id}: {r:?}");
    }
}

#[test]
fn random_curves_small_sample() {
    let (nontrivial, _) = common::oracle::compare_random(7, 20).unwrap();
    assert!(nontrivial >= 5);
}
