//! The numeric oracle: evaluating symbolic meets at concrete points and
//! cross-checking against honest linear algebra.
//!
//! ```bash
//! cargo run -p gcbrackets --example numeric_check
//! ```

use std::collections::BTreeMap;

use gcbrackets::gc::GcRing;
use gcbrackets::oracle::{classical_meet, evaluate_gc, projective_equal, PointAssignment};
use gcbrackets::poly::{rat, Rational};

fn v(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| rat(c)).collect()
}

fn main() {
    // The symbolic intersection of lines ab and cd in the plane.
    let g = GcRing::new(&["a", "b", "c", "d"], 3).unwrap();
    let ab = g.point(1).join(&g.point(2)).unwrap();
    let cd = g.point(3).join(&g.point(4)).unwrap();
    let meet = ab.meet(&cd).unwrap();
    println!("ab ^ cd = {}", meet);

    // Pin the points: a, b span z = 0 and c, d span x = y.
    let pts = PointAssignment::new(vec![
        v(&[1, 0, 0]),
        v(&[0, 1, 0]),
        v(&[0, 0, 1]),
        v(&[1, 1, 1]),
    ]);
    let evaluated = evaluate_gc(&meet, &pts, &BTreeMap::new()).unwrap();
    println!("evaluated at the configuration: {evaluated:?}");

    // The honest intersection, by rank/nullspace computation.
    let classical = classical_meet(
        &[v(&[1, 0, 0]), v(&[0, 1, 0])],
        &[v(&[0, 0, 1]), v(&[1, 1, 1])],
        3,
    )
    .unwrap();
    assert!(projective_equal(&evaluated, &classical));
    println!("projectively equal to the classical intersection (1 : 1 : 0)");

    // Identical lines have no well-defined meet: the oracle signals it.
    let degenerate = classical_meet(
        &[v(&[1, 0, 0]), v(&[0, 1, 0])],
        &[v(&[1, 0, 0]), v(&[0, 1, 0])],
        3,
    );
    println!("meet of a line with itself: {degenerate:?}");
}
