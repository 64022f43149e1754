//! The straightening algorithm: canonical representatives modulo `I(n,d)`.

use num_traits::Zero;

use crate::poly::Poly;
use crate::Result;

use super::BracketRing;

impl BracketRing {
    /// Rewrites `f` as the unique equivalent combination of standard
    /// tableaux. Parameter variables pass through untouched, and the map is
    /// linear and idempotent.
    ///
    /// The main path reduces against the cached Grassmann-Plücker set under
    /// the tableau order, whose leading monomials are the nonstandard pairs.
    /// A guard then checks standardness; any surviving violation is rewritten
    /// by the targeted exchange relation for its first violating column,
    /// which strictly decreases the offending monomial.
    pub fn straighten(&self, f: &Poly) -> Result<Poly> {
        let ord = self.tableau_order();
        let mut r = f.reduce(self.relations(), &ord)?;
        loop {
            let Some((mono, upper, lower, col)) = self.worst_violation(&r) else {
                return Ok(r);
            };
            let rel = self.violation_relation(&upper, &lower, col)?;
            // Cancel the violating pair inside `mono`: subtract
            // coeff · (mono / [upper][lower]) · rel.
            let pair = rel.leading_monomial(&ord)?;
            let rest = mono.div(&pair);
            let coeff = r.coefficient(&mono);
            r = r.checked_sub(&rel.mul_term(&rest, &coeff))?;
            debug_assert!(r.coefficient(&mono).is_zero());
            r = r.reduce(self.relations(), &ord)?;
        }
    }

    /// The ≺-largest nonstandard bracket monomial of `f`, together with its
    /// first violating adjacent row pair and column.
    fn worst_violation(
        &self,
        f: &Poly,
    ) -> Option<(crate::poly::Monomial, Vec<usize>, Vec<usize>, usize)> {
        let ord = self.tableau_order();
        let mut worst: Option<crate::poly::Monomial> = None;
        for (m, _) in f.terms() {
            if self.tableau_of(m).is_standard() {
                continue;
            }
            worst = Some(match worst {
                None => m.clone(),
                Some(w) => ord.max(&w, m).clone(),
            });
        }
        let m = worst?;
        let tab = self.tableau_of(&m);
        let (row, col) = tab.first_violation().expect("monomial is nonstandard");
        Some((
            m,
            tab.rows()[row].indices().to_vec(),
            tab.rows()[row + 1].indices().to_vec(),
            col,
        ))
    }
}
