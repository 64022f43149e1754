//! Desargues' theorem, proved mechanically: two triangles are perspective
//! from a point iff they are perspective from a line (or degenerate).
//!
//! The same computation is packaged as `gcb demo desargues`; this example
//! walks the library API step by step.
//!
//! ```bash
//! cargo run -p gcbrackets --example desargues
//! ```

use gcbrackets::gc::GcRing;
use gcbrackets::poly::rat;

fn main() {
    // Six points in the projective plane: triangles abc and def, with the
    // correspondence a<->d, b<->e, c<->f.
    let g = GcRing::new(&["a", "b", "c", "d", "e", "f"], 3).unwrap();
    let p = |i: usize| g.point(i);
    let (a, b, c, d, e, f) = (p(1), p(2), p(3), p(4), p(5), p(6));

    // Perspective from a line: corresponding sides meet in three points,
    // and those points are collinear iff their join vanishes.
    let pt1 = a.join(&b).unwrap().meet(&d.join(&e).unwrap()).unwrap();
    let pt2 = b.join(&c).unwrap().meet(&e.join(&f).unwrap()).unwrap();
    let pt3 = a.join(&c).unwrap().meet(&d.join(&f).unwrap()).unwrap();
    let line_perspective = pt1.join(&pt2).unwrap().join(&pt3).unwrap();

    // Perspective from a point: the three vertex lines are concurrent iff
    // their double meet vanishes.
    let point_perspective = a
        .join(&d)
        .unwrap()
        .meet(&b.join(&e).unwrap())
        .unwrap()
        .meet(&c.join(&f).unwrap())
        .unwrap();

    let ring = g.bracket_ring();
    let lp = line_perspective.top_to_bracket().unwrap();
    let pp = point_perspective.as_bracket_poly().unwrap();
    println!("linePerspective  = {}", lp.render());
    println!("pointPerspective = {}", pp.render());

    // The two conditions share no bracket factor…
    let (_, factors, cofactor) = ring.factor_limited(&lp);
    println!(
        "factor linePerspective: brackets {:?}, cofactor {}",
        factors.iter().map(|x| ring.render_bracket(x)).collect::<Vec<_>>(),
        cofactor.render()
    );

    // …but after straightening they differ exactly by [abc]·[def].
    let nl = ring.straighten(&lp).unwrap();
    let np = ring.straighten(&pp).unwrap();
    println!("nl = {}", nl.render());
    println!("np = {}", np.render());

    let abc_def = &ring.bracket_poly(&[1, 2, 3]).unwrap() * &ring.bracket_poly(&[4, 5, 6]).unwrap();
    let scale = ring
        .prove_proportional(&(&abc_def * &np), &nl)
        .unwrap()
        .expect("the two conditions are proportional");
    assert_eq!(scale, rat(1));
    println!("[abc]*[def]*np = nl  (verified by straightening)");
    println!("=> perspective from a point iff perspective from a line, or a triangle is degenerate");
}
