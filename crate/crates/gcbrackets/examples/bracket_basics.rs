//! Bracket rings from the ground up: brackets, signs, tableaux, and the
//! tableau order.
//!
//! ```bash
//! cargo run -p gcbrackets --example bracket_basics
//! ```

use gcbrackets::bracket::{BracketRing, SignedBracket};

fn main() {
    // B(6,3): brackets are the 20 maximal minors of a generic 6×3 matrix,
    // one for each 3-subset of the six points.
    let ring = BracketRing::new(6, 3).unwrap();
    println!("{} has {} brackets", ring, ring.num_brackets());

    // Index sequences normalize by sorting; the sign is the permutation's.
    for seq in [vec![1, 4, 5], vec![2, 1, 3], vec![1, 1, 2]] {
        match ring.normalize_bracket(&seq).unwrap() {
            SignedBracket::NonZero { sign, bracket } => {
                let s = if sign > 0 { "+" } else { "-" };
                println!("{seq:?} -> {s}{}", ring.render_bracket(&bracket));
            }
            SignedBracket::Zero => println!("{seq:?} -> 0 (repeated row)"),
        }
    }

    // A bracket monomial is a tableau; standard when its columns are sorted.
    let b = |s: &[usize]| ring.bracket_poly(s).unwrap();
    let standard = &b(&[1, 3, 4]) * &b(&[2, 5, 6]);
    let crooked = &(&b(&[1, 4, 5]) * &b(&[1, 5, 6])) * &b(&[2, 3, 4]);
    for (name, poly) in [("[134][256]", &standard), ("[145][156][234]", &crooked)] {
        let (m, _) = poly.terms().next().unwrap();
        let tableau = ring.tableau_of(m);
        println!(
            "{name}: standard = {}, rows = {:?}",
            tableau.is_standard(),
            tableau
                .rows()
                .iter()
                .map(|r| ring.render_bracket(r))
                .collect::<Vec<_>>()
        );
    }

    // Points can carry names; brackets render with them.
    let named = BracketRing::with_names(&["a", "b", "c", "d"], 2, &[]).unwrap();
    println!(
        "named ring {}: first relation {}",
        named,
        named.relations()[0].render()
    );
}
