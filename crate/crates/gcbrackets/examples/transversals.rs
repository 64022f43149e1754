//! How many lines meet four general lines in P³? Two — derived with formal
//! parameters in the coefficient ring.
//!
//! The same computation is packaged as `gcb demo transversals`; this
//! example walks the library API.
//!
//! ```bash
//! cargo run -p gcbrackets --example transversals
//! ```

use gcbrackets::gc::GcRing;
use gcbrackets::poly::{rat, Block};

fn main() {
    // Eight points spanning four lines, over Q[l, m].
    let g = GcRing::with_params(&["a", "b", "c", "d", "e", "f", "g", "h"], 4, &["l", "m"])
        .unwrap();
    let ring = g.bracket_ring().clone();

    // A transversal meets l1 = a*b at some pencil point p = l·a + m·b.
    let p = g
        .lift(&[(ring.param_poly("l").unwrap(), 1), (ring.param_poly("m").unwrap(), 2)])
        .unwrap();
    let ell2 = g.point(3).join(&g.point(4)).unwrap();
    let ell3 = g.point(5).join(&g.point(6)).unwrap();
    let ell4 = g.point(7).join(&g.point(8)).unwrap();
    println!("p = {}", p);

    // The candidate transversal: span p with l2, cut with l3, span back
    // through p.
    let ell = p.join(&ell2).unwrap().meet(&ell3).unwrap().join(&p).unwrap();

    // It meets l4 iff the top-degree join vanishes: a quadratic in (l, m).
    let formula = ell.join(&ell4).unwrap().top_to_bracket().unwrap();
    let ord = ring.tableau_order();
    let rows = formula.coefficients_by_block(Block::Param, &ord);
    for (m, c) in &rows {
        println!("coeff {}: {}", m.render(ring.table()), ring.straighten(c).unwrap().render());
    }

    // Two roots generically: the discriminant is a nonzero bracket
    // polynomial.
    let qa = ring.straighten(&rows[0].1).unwrap();
    let qb = ring.straighten(&rows[1].1).unwrap();
    let qc = ring.straighten(&rows[2].1).unwrap();
    let disc = &(&qb * &qb) - &(&qa * &qc).scalar_mul(&rat(4));
    let disc_nf = ring.straighten(&disc).unwrap();
    assert!(!disc_nf.is_zero());
    println!("disc = b^2 - 4ac has {} standard tableaux; nonzero", disc_nf.num_terms());
    println!("=> two transversals to four general lines (one when disc = 0,");
    println!("   infinitely many when all three coefficients vanish)");
}
