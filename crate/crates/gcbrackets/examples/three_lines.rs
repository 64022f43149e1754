//! Join and meet in the Grassmann-Cayley ring: when do three lines in the
//! projective plane share a point?
//!
//! ```bash
//! cargo run -p gcbrackets --example three_lines
//! ```

use gcbrackets::gc::GcRing;

fn main() {
    let g = GcRing::new(&["a", "b", "c", "d", "e", "f"], 3).unwrap();
    let p = |i: usize| g.point(i);

    // Lines are joins of points.
    let ad = p(1).join(&p(4)).unwrap();
    let be = p(2).join(&p(5)).unwrap();
    let cf = p(3).join(&p(6)).unwrap();
    println!("ad = {}", ad);
    println!("be = {}", be);

    // The meet of two lines is their intersection point, expressed as a
    // bracket-weighted combination of the first line's points.
    let ab = ad.meet(&be).unwrap();
    println!("ad ^ be = {}", ab);

    // Meeting with the third line drops to degree 0: a bracket polynomial
    // that vanishes exactly when the three lines are concurrent.
    let condition = ab.meet(&cf).unwrap();
    println!("(ad ^ be) ^ cf = {}", condition);

    // A point lies on a line iff the top bracket vanishes.
    let e1_on_e2e3 = p(1).meet(&p(2).join(&p(3)).unwrap()).unwrap();
    println!("a ^ (b*c) = {}", e1_on_e2e3);

    // Joins anticommute degree-wise: a*b = -b*a for points.
    println!("a*b = {}", p(1).join(&p(2)).unwrap());
    println!("b*a = {}", p(2).join(&p(1)).unwrap());
    // And any product with a repeated point dies.
    println!("a*a = {}", p(1).join(&p(1)).unwrap());
}
