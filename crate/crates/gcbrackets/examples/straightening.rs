//! The straightening algorithm: canonical representatives modulo the
//! Plücker relations.
//!
//! ```bash
//! cargo run -p gcbrackets --example straightening
//! ```

use gcbrackets::bracket::BracketRing;

fn main() {
    // The quadratic Plücker relation of Gr(2,4) straightens to zero.
    let r42 = BracketRing::new(4, 2).unwrap();
    let b = |i, j| r42.bracket_poly(&[i, j]).unwrap();
    let pluecker =
        &(&(&b(1, 2) * &b(3, 4)) - &(&b(1, 3) * &b(2, 4))) + &(&b(1, 4) * &b(2, 3));
    println!("straighten([12][34] - [13][24] + [14][23]) = {}", r42.straighten(&pluecker).unwrap());

    // A nonstandard tableau in B(6,3) rewrites as three standard ones.
    let r63 = BracketRing::new(6, 3).unwrap();
    let bb = |s: &[usize]| r63.bracket_poly(s).unwrap();
    let t = &(&bb(&[1, 4, 5]) * &bb(&[1, 5, 6])) * &bb(&[2, 3, 4]);
    println!("T  = {}", t.render());
    let nf = r63.straighten(&t).unwrap();
    println!("nf = {}", nf.render());
    assert!(r63.is_straightened(&nf));

    // The normal form is a normal form: straightening is idempotent, and
    // both sides expand to the same polynomial in the matrix entries.
    assert_eq!(r63.straighten(&nf).unwrap(), nf);
    assert_eq!(r63.psi_expand(&t).unwrap(), r63.psi_expand(&nf).unwrap());
    println!("idempotent and psi-consistent: ok");

    // Equality in B(n,d) is decided by straightening the difference.
    println!(
        "[12][34] = [13][24] in B(4,2)? {}",
        r42.prove_equal(&(&b(1, 2) * &b(3, 4)), &(&b(1, 3) * &b(2, 4))).unwrap()
    );
    println!(
        "3*([12][34]) proportional to [12][34]? c = {:?}",
        r42.prove_proportional(
            &(&b(1, 2) * &b(3, 4)).scalar_mul(&gcbrackets::poly::rat(3)),
            &(&b(1, 2) * &b(3, 4)),
        )
        .unwrap()
        .map(|c| c.to_string())
    );
}
