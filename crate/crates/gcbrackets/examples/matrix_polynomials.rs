//! From brackets to matrix entries and back: the expansion into maximal
//! minors and the greedy subduction that inverts it.
//!
//! ```bash
//! cargo run -p gcbrackets --example matrix_polynomials
//! ```

use gcbrackets::bracket::{BracketRing, Subduction};
use gcbrackets::poly::Poly;

fn main() {
    let r = BracketRing::new(4, 2).unwrap();

    // A bracket names a maximal minor of the generic 4×2 matrix.
    let b12 = r.bracket_poly(&[1, 2]).unwrap();
    let img = r.psi_expand(&b12).unwrap();
    println!("psi([12]) = {}", img.render());

    // Products expand multiplicatively.
    let prod = &b12 * &r.bracket_poly(&[3, 4]).unwrap();
    let img2 = r.psi_expand(&prod).unwrap();
    println!("psi([12][34]) has {} terms", img2.num_terms());

    // Subduction rewrites a matrix polynomial in terms of brackets by
    // peeling minor diagonals off the lexicographic leading term.
    match r.to_bracket_polynomial(&img2).unwrap() {
        Subduction::InRing(h) => {
            println!("toBrackets(psi([12][34])) = {}", h.render());
            assert!(r.prove_equal(&h, &prod).unwrap());
            assert_eq!(r.psi_expand(&h).unwrap(), img2);
            println!("round trip verified: equal in B(4,2), identical under psi");
        }
        Subduction::NotInRing { .. } => unreachable!("image of a bracket polynomial"),
    }

    // Not every matrix polynomial is an invariant: a lone entry is not.
    let x11 = Poly::var(r.matrix_table().clone(), r.matrix_var(1, 1));
    match r.to_bracket_polynomial(&x11).unwrap() {
        Subduction::InRing(_) => unreachable!(),
        Subduction::NotInRing { remainder, .. } => {
            println!("toBrackets(x(1,1)): not in the bracket ring, remainder {}", remainder.render());
        }
    }
}
