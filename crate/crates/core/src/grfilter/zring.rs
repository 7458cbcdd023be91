use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GFilter;
use crate::error::{Error, Result};
use crate::group::GroupElem;

/// Seed used for randomized trials when none is given.
pub const DEFAULT_SEED: u64 = 1;

/// A finitely supported element `Σ r_x x` of `⊕ I_x x ⊆ R[ℤ]`; only
/// nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FilterElement {
    terms: BTreeMap<GroupElem, usize>,
}

impl FilterElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (GroupElem, usize)> + '_ {
        self.terms.iter().map(|(&x, &c)| (x, c))
    }

    pub fn coefficient(&self, x: GroupElem) -> Option<usize> {
        self.terms.get(&x).copied()
    }

    /// Highest degree minus lowest degree plus one; zero for zero.
    pub fn support_width(&self) -> u64 {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64 + 1,
            _ => 0,
        }
    }

    /// The highest-degree term.
    pub fn leading(&self) -> Option<(GroupElem, usize)> {
        self.terms.iter().next_back().map(|(&x, &c)| (x, c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// `ab ≠ 0` already.
    NotNeeded,
    /// `a (c x^degree) b ≠ 0`.
    Found { degree: GroupElem, coeff: usize },
    NoneWithinBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub a: FilterElement,
    pub b: FilterElement,
    pub bound: u64,
    pub outcome: WitnessOutcome,
}

/// Arithmetic in the subring of `R[ℤ]` defined by a filter over `ℤ`.
#[derive(Debug, Clone)]
pub struct ZFilterRing {
    filter: GFilter,
}

impl ZFilterRing {
    pub(super) fn new(filter: GFilter) -> Self {
        ZFilterRing { filter }
    }

    pub fn filter(&self) -> &GFilter {
        &self.filter
    }

    /// `Σ c x` from `(x, c)` pairs; repeated degrees are added.
    pub fn element(&self, terms: &[(GroupElem, usize)]) -> Result<FilterElement> {
        let r = self.filter.coeff_ring();
        let mut out = FilterElement::default();
        for &(x, c) in terms {
            r.check_element(c)?;
            if !self.filter.ideal(x).contains(c) {
                return Err(Error::InvalidElement(format!("coefficient {c} is not in the ideal at degree {x}")));
            }
            self.add_term(&mut out, x, c);
        }
        Ok(out)
    }

    fn add_term(&self, acc: &mut FilterElement, x: GroupElem, c: usize) {
        let r = self.filter.coeff_ring();
        let sum = r.add(acc.terms.get(&x).copied().unwrap_or(r.zero()), c);
        if sum == r.zero() {
            acc.terms.remove(&x);
        } else {
            acc.terms.insert(x, sum);
        }
    }

    pub fn add(&self, a: &FilterElement, b: &FilterElement) -> FilterElement {
        let mut out = a.clone();
        for (x, c) in b.terms() {
            self.add_term(&mut out, x, c);
        }
        out
    }

    pub fn neg(&self, a: &FilterElement) -> FilterElement {
        let r = self.filter.coeff_ring();
        FilterElement {
            terms: a.terms().map(|(x, c)| (x, r.neg(c))).collect(),
        }
    }

    pub fn mul(&self, a: &FilterElement, b: &FilterElement) -> FilterElement {
        let r = self.filter.coeff_ring();
        let mut out = FilterElement::default();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                self.add_term(&mut out, x + y, r.mul(c, d));
            }
        }
        debug_assert!(out.terms().all(|(x, c)| self.filter.ideal(x).contains(c)));
        out
    }

    pub fn degree(&self, a: &FilterElement) -> Option<GroupElem> {
        match (a.terms.keys().next(), a.terms.keys().next_back()) {
            (Some(lo), Some(hi)) if lo == hi => Some(*lo),
            _ => None,
        }
    }

    /// Degrees `0, 1, -1, 2, -2, ..` up to `bound` in absolute value.
    fn degree_order(bound: u64) -> impl Iterator<Item = GroupElem> {
        std::iter::once(0).chain((1..=bound as i64).flat_map(|k| [k, -k]))
    }

    /// Looks for a homogeneous `s = c x^k`, `|k| ≤ bound`, with `asb ≠ 0`.
    /// Degrees are tried in the order `0, 1, -1, ..` and coefficients in
    /// index order. A first pass only asks that the leading coefficients
    /// satisfy `a_top c b_top ≠ 0`, which already forces `asb ≠ 0`; a second
    /// pass multiplies out in full.
    pub fn witness_search(&self, a: &FilterElement, b: &FilterElement, bound: u64) -> Result<WitnessOutcome> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition("witness search needs nonzero elements".into()));
        }
        if !self.mul(a, b).is_zero() {
            return Ok(WitnessOutcome::NotNeeded);
        }
        let r = self.filter.coeff_ring();
        let (_, a_top) = a.leading().expect("nonzero");
        let (_, b_top) = b.leading().expect("nonzero");
        let candidates = |k: GroupElem| self.filter.ideal(k).iter().filter(|&c| c != r.zero()).collect::<Vec<_>>();
        for k in Self::degree_order(bound) {
            for c in candidates(k) {
                if r.mul(r.mul(a_top, c), b_top) != r.zero() {
                    let s = self.element(&[(k, c)])?;
                    assert!(!self.mul(&self.mul(a, &s), b).is_zero(), "leading term did not survive");
                    return Ok(WitnessOutcome::Found { degree: k, coeff: c });
                }
            }
        }
        for k in Self::degree_order(bound) {
            for c in candidates(k) {
                let s = self.element(&[(k, c)])?;
                if !self.mul(&self.mul(a, &s), b).is_zero() {
                    return Ok(WitnessOutcome::Found { degree: k, coeff: c });
                }
            }
        }
        Ok(WitnessOutcome::NoneWithinBound)
    }

    /// A random nonzero element whose support lies in a window of at most
    /// `max_width` consecutive degrees starting in `[-3, 3]`.
    pub fn random_element<G: Rng>(&self, rng: &mut G, max_width: u64) -> Result<FilterElement> {
        let r = self.filter.coeff_ring();
        if r.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        let max_width = max_width.max(1);
        loop {
            let start: GroupElem = rng.random_range(-3..=3);
            let width = rng.random_range(1..=max_width) as GroupElem;
            let mut terms = Vec::new();
            for x in start..start + width {
                let choices = self.filter.ideal(x).to_vec();
                terms.push((x, choices[rng.random_range(0..choices.len())]));
            }
            let e = self.element(&terms)?;
            if !e.is_zero() {
                return Ok(e);
            }
        }
    }

    /// Runs `trials` witness searches on seeded random pairs, each with
    /// degree bound `width(a) + width(b) + 1`.
    pub fn run_trials(&self, trials: usize, max_width: u64, seed: u64) -> Result<Vec<Trial>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(trials);
        for _ in 0..trials {
            let a = self.random_element(&mut rng, max_width)?;
            let b = self.random_element(&mut rng, max_width)?;
            let bound = a.support_width() + b.support_width() + 1;
            let outcome = self.witness_search(&a, &b, bound)?;
            out.push(Trial { a, b, bound, outcome });
        }
        Ok(out)
    }

    /// `c·x^k` terms in ascending degree, e.g. `1·x^-1 + 3·x^2`.
    pub fn display(&self, a: &FilterElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms()
            .map(|(x, c)| format!("{c}·x^{x}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemset::ElemSet;
    use crate::finring::{build_ring, Limits};
    use crate::group::GradingGroup;

    fn full(ring: &str) -> ZFilterRing {
        let r = build_ring(ring, Limits::default()).unwrap();
        GFilter::full(r, GradingGroup::Integers).unwrap().z_ring().unwrap()
    }

    #[test]
    fn laurent_arithmetic() {
        let z = full("gf(2)");
        let a = z.element(&[(0, 1), (1, 1)]).unwrap();
        let b = z.element(&[(-1, 1)]).unwrap();
        assert_eq!(z.mul(&a, &b), z.element(&[(-1, 1), (0, 1)]).unwrap());
        assert_eq!(z.mul(&a, &a), z.element(&[(0, 1), (2, 1)]).unwrap());
        assert!(z.add(&a, &a).is_zero());
        assert_eq!(z.degree(&b), Some(-1));
        assert_eq!(a.support_width(), 2);
        assert_eq!(z.display(&a), "1·x^0 + 1·x^1");
    }

    #[test]
    fn witness_examples() {
        let z = full("gf(2)");
        let a = z.element(&[(0, 1), (1, 1)]).unwrap();
        let b = z.element(&[(-1, 1)]).unwrap();
        assert_eq!(z.witness_search(&a, &b, 3).unwrap(), WitnessOutcome::NotNeeded);
        assert!(matches!(z.witness_search(&a, &z.element(&[]).unwrap(), 3), Err(Error::Precondition(_))));

        // mat(gf(2),2): E11 = 8, E12 = 4, E22 = 1.
        let m = full("mat(gf(2),2)");
        let a = m.element(&[(0, 8)]).unwrap();
        let b = m.element(&[(0, 1)]).unwrap();
        assert!(m.mul(&a, &b).is_zero());
        match m.witness_search(&a, &b, 2).unwrap() {
            WitnessOutcome::Found { degree, coeff } => {
                assert_eq!(degree, 0);
                let s = m.element(&[(degree, coeff)]).unwrap();
                assert_eq!(m.mul(&m.mul(&a, &s), &b), m.element(&[(0, 4)]).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coefficients_must_lie_in_their_ideal() {
        let r = build_ring("gf(2)", Limits::default()).unwrap();
        let f = GFilter::new(
            r,
            GradingGroup::Integers,
            super::super::FilterRule::Subgroup {
                modulus: 2,
                other: ElemSet::from_indices(2, [0]),
            },
        )
        .unwrap();
        let z = f.z_ring().unwrap();
        assert!(z.element(&[(2, 1)]).is_ok());
        assert!(matches!(z.element(&[(1, 1)]), Err(Error::InvalidElement(_))));
    }

    #[test]
    fn trials_are_reproducible() {
        let z = full("gf(4)");
        let one = z.run_trials(20, 3, 7).unwrap();
        let two = z.run_trials(20, 3, 7).unwrap();
        assert_eq!(one, two);
        assert!(one.iter().all(|t| t.outcome != WitnessOutcome::NoneWithinBound));
    }
}
