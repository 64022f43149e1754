//! Randomized cross-module invariants: the symbolic join/meet against the
//! numeric exterior-algebra backend, and algebraic laws on randomized
//! inputs. All randomness is seeded; failures reproduce.

use std::collections::BTreeMap;

use gcbrackets::bracket::BracketRing;
use gcbrackets::gc::{GcExpression, GcRing};
use gcbrackets::oracle::{
    classical_meet, evaluate_gc, projective_equal, wedge, PointAssignment,
};
use gcbrackets::poly::{rat, Monomial, Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn ring(n: usize, d: usize) -> GcRing {
    let names = names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GcRing::new(&refs, d).unwrap()
}

/// A random homogeneous expression of the given blade degree with small
/// rational coefficients.
fn random_homogeneous(g: &GcRing, degree: usize, rng: &mut ChaCha8Rng) -> GcExpression {
    let n = g.n();
    let mut expr = g.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut idx: Vec<usize> = (1..=n).collect();
        for i in (1..idx.len()).rev() {
            idx.swap(i, rng.gen_range(0..=i));
        }
        idx.truncate(degree);
        idx.sort_unstable();
        let mut blade = g.scalar(rat(rng.gen_range(-4..=4)));
        for &i in &idx {
            blade = blade.join(&g.point(i)).unwrap();
        }
        expr = expr.checked_add(&blade).unwrap();
    }
    expr
}

fn eval(
    e: &GcExpression,
    pts: &PointAssignment,
) -> gcbrackets::oracle::NumericExtensor {
    evaluate_gc(e, pts, &BTreeMap::new()).unwrap()
}

#[test]
fn join_sign_law_formal() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for d in [2usize, 3, 4] {
        let g = ring(d + 2, d);
        for _ in 0..20 {
            let j = rng.gen_range(1..=d);
            let k = rng.gen_range(1..=d);
            let u = random_homogeneous(&g, j, &mut rng);
            let v = random_homogeneous(&g, k, &mut rng);
            let uv = u.join(&v).unwrap();
            let mut vu = v.join(&u).unwrap();
            if (j * k) % 2 == 1 {
                vu = vu.scale(&rat(-1));
            }
            assert_eq!(uv, vu, "join sign law at d={d}, j={j}, k={k}");
        }
    }
}

#[test]
fn join_is_associative_formally() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let g = ring(6, 3);
    for _ in 0..30 {
        let u = random_homogeneous(&g, 1, &mut rng);
        let v = random_homogeneous(&g, 1, &mut rng);
        let w = random_homogeneous(&g, 1, &mut rng);
        let lhs = u.join(&v).unwrap().join(&w).unwrap();
        let rhs = u.join(&v.join(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn join_and_meet_are_bilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let names = names(6);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let g = GcRing::with_params(&refs, 3, &["l", "m"]).unwrap();
    let l = g.bracket_ring().param_poly("l").unwrap();
    for _ in 0..20 {
        let u = random_homogeneous(&g, 2, &mut rng);
        let v = random_homogeneous(&g, 2, &mut rng);
        let w = random_homogeneous(&g, 2, &mut rng);
        let alpha = rat(rng.gen_range(-3..=3));
        // Scalars include a parameter variable.
        let combo = v.scale(&alpha).checked_add(&w.scale_poly(&l).unwrap()).unwrap();
        for op in ["join", "meet"] {
            let apply = |x: &GcExpression, y: &GcExpression| {
                if op == "join" {
                    x.join(y).unwrap()
                } else {
                    x.meet(y).unwrap()
                }
            };
            let lhs = apply(&u, &combo);
            let rhs = apply(&u, &v)
                .scale(&alpha)
                .checked_add(&apply(&u, &w).scale_poly(&l).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "{op} bilinearity");
        }
    }
}

#[test]
fn meet_sign_law_under_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for d in [2usize, 3, 4] {
        let g = ring(d + 2, d);
        for _ in 0..15 {
            let j = rng.gen_range(1..=d);
            let k = rng.gen_range(d.saturating_sub(j).max(1)..=d);
            let u = random_homogeneous(&g, j, &mut rng);
            let v = random_homogeneous(&g, k, &mut rng);
            let uv = u.meet(&v).unwrap();
            let vu = v.meet(&u).unwrap();
            let pts = PointAssignment::random(g.n(), d, &mut rng);
            let mut rhs = eval(&vu, &pts);
            if ((d - j) * (d - k)) % 2 == 1 {
                rhs = rhs.scale(&rat(-1));
            }
            assert_eq!(eval(&uv, &pts), rhs, "meet sign law at d={d}, j={j}, k={k}");
        }
    }
}

#[test]
fn meet_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let g = ring(6, 3);
    let bracket = g.bracket_ring();
    for trial in 0..20 {
        let u = random_homogeneous(&g, 2, &mut rng);
        let v = random_homogeneous(&g, 2, &mut rng);
        let w = random_homogeneous(&g, 2, &mut rng);
        let lhs = u.meet(&v).unwrap().meet(&w).unwrap();
        let rhs = u.meet(&v.meet(&w).unwrap()).unwrap();
        // Total degree 2+2+2−2·3 = 0: compare canonical bracket values.
        let l = bracket.straighten(&lhs.as_bracket_poly().unwrap()).unwrap();
        let r = bracket.straighten(&rhs.as_bracket_poly().unwrap()).unwrap();
        assert_eq!(l, r, "meet associativity (degree 0), trial {trial}");
        // And under evaluation for a degree-1 outcome.
        let x = random_homogeneous(&g, 3, &mut rng);
        let lhs1 = u.meet(&v).unwrap().meet(&x).unwrap();
        let rhs1 = u.meet(&v.meet(&x).unwrap()).unwrap();
        let pts = PointAssignment::random(g.n(), 3, &mut rng);
        assert_eq!(eval(&lhs1, &pts), eval(&rhs1, &pts));
    }
}

#[test]
fn evaluated_join_is_the_wedge() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for d in [2usize, 3, 4] {
        let g = ring(d + 1, d);
        for _ in 0..15 {
            let j = rng.gen_range(1..d);
            let k = rng.gen_range(1..=(d - j));
            let u = random_homogeneous(&g, j, &mut rng);
            let v = random_homogeneous(&g, k, &mut rng);
            let uv = u.join(&v).unwrap();
            let pts = PointAssignment::random(g.n(), d, &mut rng);
            assert_eq!(eval(&uv, &pts), wedge(&eval(&u, &pts), &eval(&v, &pts)));
        }
    }
}

#[test]
fn straighten_difference_lies_in_the_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let r = BracketRing::new(5, 2).unwrap();
    for _ in 0..25 {
        let f = random_bracket_poly(&r, 3, 4, &mut rng);
        let diff = &f - &r.straighten(&f).unwrap();
        assert!(gcbrackets::oracle::random_membership_check(&r, &diff, 12, &mut rng).unwrap());
    }
}

#[test]
fn factor_limited_reassembles() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let r = BracketRing::new(6, 3).unwrap();
    for _ in 0..25 {
        // Plant bracket factors and a scalar on a random polynomial.
        let base = random_bracket_poly(&r, 2, 3, &mut rng);
        if base.is_zero() {
            continue;
        }
        let planted = &(&base * &r.bracket_poly(&[1, 2, 3]).unwrap())
            .scalar_mul(&rat(rng.gen_range(1..=6)))
            * &r.bracket_poly(&[2, 4, 6]).unwrap();
        let (content, factors, cofactor) = r.factor_limited(&planted);
        let mut back = Poly::constant(r.table().clone(), content);
        for b in &factors {
            back = &back * &r.bracket_poly(b.indices()).unwrap();
        }
        assert_eq!(&back * &cofactor, planted);
        assert!(factors.len() >= 2);
    }
}

#[test]
fn content_primitive_and_coefficient_rows_reassemble() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let r = BracketRing::with_names(&["a", "b", "c", "d"], 2, &["l", "m"]).unwrap();
    let ord = r.tableau_order();
    for _ in 0..25 {
        let f = random_parametric_poly(&r, &mut rng);
        let (content, primitive) = f.content_primitive();
        assert_eq!(primitive.scalar_mul(&content), f);
        let mut back = Poly::zero(r.table().clone());
        for (m, c) in f.coefficients_by_block(gcbrackets::poly::Block::Param, &ord) {
            back = &back + &c.mul_term(&m, &Rational::from_integer(1.into()));
        }
        assert_eq!(back, f);
    }
}

#[test]
fn meet_matches_classical_intersection_on_lines_in_the_plane() {
    // The fully symbolic route against the nullspace route, on a clean case:
    // two lines in P^2 spanned by four of five points.
    let g = ring(5, 3);
    let u = g.point(1).join(&g.point(2)).unwrap();
    let v = g.point(3).join(&g.point(4)).unwrap();
    let m = u.meet(&v).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let mut checked = 0;
    while checked < 25 {
        let pts = PointAssignment::random(5, 3, &mut rng);
        let u_span = [pts.row(1).to_vec(), pts.row(2).to_vec()];
        let v_span = [pts.row(3).to_vec(), pts.row(4).to_vec()];
        let Ok(classical) = classical_meet(&u_span, &v_span, 3) else {
            continue;
        };
        assert!(projective_equal(&eval(&m, &pts), &classical));
        checked += 1;
    }
}

fn random_bracket_poly(
    r: &BracketRing,
    degree: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> Poly {
    Poly::from_terms(
        r.table().clone(),
        (0..terms).map(|_| {
            let m = Monomial::from_pairs(
                (0..degree).map(|_| (rng.gen_range(0..r.num_brackets()), 1u32)),
            );
            (m, rat(rng.gen_range(-5..=5)))
        }),
    )
}

fn random_parametric_poly(r: &BracketRing, rng: &mut ChaCha8Rng) -> Poly {
    let nb = r.num_brackets();
    let total = r.table().len();
    Poly::from_terms(
        r.table().clone(),
        (0..4).map(|_| {
            let m = Monomial::from_pairs([
                (rng.gen_range(0..nb), rng.gen_range(0..3u32)),
                (rng.gen_range(nb..total), rng.gen_range(0..3u32)),
            ]);
            (m, Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=4).into()))
        }),
    )
}

#[test]
fn poly_display_roundtrips_through_the_script_layer() {
    // Canonical renderings parse back to the same canonical value.
    let mut env = gcbrackets::script::Environment::new();
    gcbrackets::script::run_script("bracketRing(6, 3)", &mut env).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let r = BracketRing::new(6, 3).unwrap();
    for _ in 0..15 {
        let f = random_bracket_poly(&r, 2, 3, &mut rng);
        if f.is_zero() {
            continue;
        }
        let rendered = f.render();
        let transcript =
            gcbrackets::script::run_script(&rendered, &mut env).unwrap();
        assert_eq!(transcript.last().unwrap().rendered, rendered);
    }
}
