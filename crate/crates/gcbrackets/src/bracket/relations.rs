//! Grassmann-Plücker relations and the general exchange identity behind them.

use std::collections::HashSet;

use itertools::Itertools;
use num_traits::Signed;

use crate::poly::{cmp_polys, rat, Monomial, Poly, Rational};
use crate::Result;

use super::{Bracket, BracketRing};

impl BracketRing {
    /// The multi-element exchange identity: for a prefix `p`, a strictly
    /// increasing window `gamma` of `d+1` indices, and a suffix `s` with
    /// `|p| + |s| = d − 1`,
    ///
    /// ```text
    ///   Σ_{A ⊆ gamma, |A| = d − |p|}  sgn(A) · [p, A] · [gamma∖A, s]  =  0
    /// ```
    ///
    /// where `sgn(A)` is the sign of the shuffle sorting `gamma` into
    /// `(A, gamma∖A)`. Summands with repeated indices vanish. With `|p| =
    /// d−1` and empty `s` this is the classical quadratic Plücker relation;
    /// larger windows give the exchange used to straighten a violating
    /// tableau pair.
    pub fn exchange_relation(
        &self,
        prefix: &[usize],
        gamma: &[usize],
        suffix: &[usize],
    ) -> Result<Poly> {
        debug_assert_eq!(gamma.len(), self.d() + 1);
        debug_assert_eq!(prefix.len() + suffix.len(), self.d() - 1);
        debug_assert!(gamma.windows(2).all(|w| w[0] < w[1]));
        let take = self.d() - prefix.len();
        let mut out = Poly::zero(self.table().clone());
        for positions in (0..gamma.len()).combinations(take) {
            // Sign of the shuffle moving the chosen positions to the front.
            let mut inversions = 0usize;
            let chosen: HashSet<usize> = positions.iter().copied().collect();
            for &i in &positions {
                inversions += (0..i).filter(|j| !chosen.contains(j)).count();
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };

            let mut first = prefix.to_vec();
            first.extend(positions.iter().map(|&i| gamma[i]));
            let mut second: Vec<usize> = (0..gamma.len())
                .filter(|i| !chosen.contains(i))
                .map(|i| gamma[i])
                .collect();
            second.extend_from_slice(suffix);

            let t = &self.bracket_poly(&first)? * &self.bracket_poly(&second)?;
            out = &out + &t.scalar_mul(&rat(sign));
        }
        Ok(out)
    }

    /// The deduplicated Grassmann-Plücker generating set of the ideal
    /// `I(n,d)`: one exchange relation per `((d−1)-subset, (d+1)-subset)`
    /// pair, zero results dropped, duplicates up to sign and scalar merged,
    /// each survivor normalized to primitive with positive leading
    /// coefficient.
    pub fn grassmann_plucker_relations(&self) -> Result<Vec<Poly>> {
        let (n, d) = (self.n(), self.d());
        let ord = self.tableau_order();
        let mut seen: HashSet<Vec<(Monomial, Rational)>> = HashSet::new();
        let mut out: Vec<Poly> = Vec::new();
        if d + 1 > n {
            return Ok(out);
        }
        for prefix in (1..=n).combinations(d - 1) {
            for gamma in (1..=n).combinations(d + 1) {
                let rel = self.exchange_relation(&prefix, &gamma, &[])?;
                if rel.is_zero() {
                    continue;
                }
                let (_, prim) = rel.content_primitive();
                let key: Vec<(Monomial, Rational)> = prim
                    .terms()
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                if seen.insert(key) {
                    out.push(prim);
                }
            }
        }
        out.sort_by(|a, b| cmp_polys(a, b, &ord));
        Ok(out)
    }

    /// The cached straightening basis: one exchange relation per nonstandard
    /// bracket pair, each with the pair as leading monomial (coefficient 1)
    /// and an autoreduced, all-standard tail. These generate the same ideal
    /// as [`grassmann_plucker_relations`](Self::grassmann_plucker_relations)
    /// and form the Gröbner basis that straightening reduces against.
    pub fn relations(&self) -> &[Poly] {
        self.relations.get_or_init(|| {
            self.build_straightening_basis()
                .expect("relation construction cannot fail")
        })
    }

    fn build_straightening_basis(&self) -> Result<Vec<Poly>> {
        let ord = self.tableau_order();
        let mut rels: Vec<Poly> = Vec::new();
        for i in 0..self.num_brackets() {
            for j in 0..self.num_brackets() {
                let (upper, lower) = (self.bracket_at(i), self.bracket_at(j));
                if upper >= lower {
                    continue;
                }
                let violation = (0..self.d())
                    .find(|&c| upper.indices()[c] > lower.indices()[c]);
                let Some(col) = violation else { continue };
                rels.push(self.violation_relation(
                    upper.indices(),
                    lower.indices(),
                    col + 1,
                )?);
            }
        }
        rels.sort_by(|a, b| cmp_polys(a, b, &ord));
        // Autoreduce the tails: any nonstandard trailing monomial rewrites
        // through the other relations' leads. Usually a no-op, since the
        // targeted exchange tails come out standard.
        let snapshot = rels.clone();
        for rel in &mut rels {
            let (lead_m, lead_c) = rel.leading_term(&ord)?;
            let lead = Poly::term(self.table().clone(), lead_m, lead_c);
            let tail = rel.checked_sub(&lead)?;
            *rel = lead.checked_add(&tail.reduce(&snapshot, &ord)?)?;
        }
        Ok(rels)
    }

    /// The exchange relation that rewrites the violating adjacent pair
    /// `(upper, lower)` of a nonstandard tableau, where `upper` is the
    /// lexicographically earlier row and `col` (1-based) its first violating
    /// column. The result is scaled so the product `[upper]·[lower]` appears
    /// with coefficient exactly 1; every other term is smaller in the
    /// tableau order.
    pub(super) fn violation_relation(
        &self,
        upper: &[usize],
        lower: &[usize],
        col: usize,
    ) -> Result<Poly> {
        let t = col;
        debug_assert!(t >= 2, "a violation in column 1 contradicts row sorting");
        debug_assert!(upper[t - 1] > lower[t - 1]);
        let prefix: Vec<usize> = upper[..t - 1].to_vec();
        let suffix: Vec<usize> = lower[t..].to_vec();
        let mut gamma: Vec<usize> = lower[..t].to_vec();
        gamma.extend_from_slice(&upper[t - 1..]);
        debug_assert!(gamma.windows(2).all(|w| w[0] < w[1]));
        let rel = self.exchange_relation(&prefix, &gamma, &suffix)?;

        let pair = Monomial::from_pairs([
            (self.bracket_var(&Bracket(upper.to_vec())), 1),
            (self.bracket_var(&Bracket(lower.to_vec())), 1),
        ]);
        let c = rel.coefficient(&pair);
        debug_assert!(c.abs() == rat(1), "pair term must appear with unit coefficient");
        Ok(rel.scalar_mul(&c.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Bracket;

    /// Brute-force oracle: enumerate all (prefix, window) pairs directly and
    /// dedup primitive forms, independently of the cached path.
    fn enumerate_relation_count(n: usize, d: usize) -> usize {
        let r = BracketRing::new(n, d).unwrap();
        let mut seen = HashSet::new();
        for a in (1..=n).combinations(d - 1) {
            for b in (1..=n).combinations(d + 1) {
                let rel = r.exchange_relation(&a, &b, &[]).unwrap();
                if rel.is_zero() {
                    continue;
                }
                let (_, prim) = rel.content_primitive();
                seen.insert(prim.render());
            }
        }
        seen.len()
    }

    #[test]
    fn unique_relation_for_4_2() {
        let r = BracketRing::new(4, 2).unwrap();
        // ±([12][34] − [13][24] + [14][23]), normalized with positive lead.
        let b = |i, j| r.bracket_poly(&[i, j]).unwrap();
        let pluecker = &(&(&b(1, 2) * &b(3, 4)) - &(&b(1, 3) * &b(2, 4)))
            + &(&b(1, 4) * &b(2, 3));
        let raw = r.grassmann_plucker_relations().unwrap();
        assert_eq!(raw.len(), 1);
        assert_eq!(raw[0], pluecker);
        let basis = r.relations();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], pluecker);
    }

    #[test]
    fn relation_count_5_2() {
        assert_eq!(enumerate_relation_count(5, 2), 5);
        let r = BracketRing::new(5, 2).unwrap();
        assert_eq!(r.grassmann_plucker_relations().unwrap().len(), 5);
        assert_eq!(r.relations().len(), 5);
    }

    #[test]
    fn principal_ring_has_no_relations() {
        let r = BracketRing::new(3, 3).unwrap();
        assert!(r.grassmann_plucker_relations().unwrap().is_empty());
        assert!(r.relations().is_empty());
    }

    #[test]
    fn relation_leading_terms_are_the_nonstandard_tableaux() {
        for (n, d) in [(4, 2), (5, 2), (6, 3)] {
            let r = BracketRing::new(n, d).unwrap();
            let ord = r.tableau_order();
            for rel in r.relations() {
                let lead = rel.leading_monomial(&ord).unwrap();
                let mut nonstandard = 0;
                for (m, _) in rel.terms() {
                    if !r.tableau_of(m).is_standard() {
                        nonstandard += 1;
                        assert_eq!(m, &lead);
                    }
                }
                assert_eq!(nonstandard, 1, "exactly one nonstandard tableau per relation");
            }
            // The raw generating set leads with a nonstandard tableau too
            // (its tails may contain further nonstandard terms).
            for rel in r.grassmann_plucker_relations().unwrap() {
                let lead = rel.leading_monomial(&ord).unwrap();
                assert!(!r.tableau_of(&lead).is_standard());
            }
        }
    }

    #[test]
    fn straightening_basis_leads_cover_all_nonstandard_pairs() {
        let r = BracketRing::new(6, 3).unwrap();
        let ord = r.tableau_order();
        let leads: HashSet<Monomial> = r
            .relations()
            .iter()
            .map(|rel| rel.leading_monomial(&ord).unwrap())
            .collect();
        let mut pairs = 0;
        for i in 0..r.num_brackets() {
            for j in 0..r.num_brackets() {
                let m = Monomial::from_pairs([(i, 1), (j, 1)]);
                if i < j && !r.tableau_of(&m).is_standard() {
                    pairs += 1;
                    assert!(leads.contains(&m));
                }
            }
        }
        assert_eq!(pairs, r.relations().len());
    }

    #[test]
    fn quadric_leading_term_is_nonstandard() {
        let r = BracketRing::new(4, 2).unwrap();
        let ord = r.tableau_order();
        let rel = &r.relations()[0];
        let lead = rel.leading_monomial(&ord).unwrap();
        let expected = Monomial::from_pairs([
            (r.bracket_var(&Bracket(vec![1, 4])), 1),
            (r.bracket_var(&Bracket(vec![2, 3])), 1),
        ]);
        assert_eq!(lead, expected);
        assert!(!r.tableau_of(&lead).is_standard());
    }

    #[test]
    fn exchange_relations_lie_in_the_kernel() {
        // ψ kills every generated relation and every violation relation.
        let r = BracketRing::new(6, 3).unwrap();
        for rel in r.relations().iter().step_by(7) {
            assert!(r.psi_expand(rel).unwrap().is_zero());
        }
        let v = r.violation_relation(&[1, 4, 5], &[2, 3, 6], 2).unwrap();
        assert!(r.psi_expand(&v).unwrap().is_zero());
        let pair = Monomial::from_pairs([
            (r.bracket_var(&Bracket(vec![1, 4, 5])), 1),
            (r.bracket_var(&Bracket(vec![2, 3, 6])), 1),
        ]);
        assert_eq!(v.coefficient(&pair), rat(1));
        // All other terms are smaller in the tableau order.
        let ord = r.tableau_order();
        assert_eq!(v.leading_monomial(&ord).unwrap(), pair);
    }
}
