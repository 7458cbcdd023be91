use std::collections::BTreeSet;

use super::GradedRing;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::group::{GradingGroup, GroupElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradingClassification {
    /// `S_x S_y = S_{xy}` for all `x, y`.
    pub strongly: bool,
    /// `S_x S_{x⁻¹} S_x = S_x` for all `x`.
    pub symmetrically: bool,
    /// `S_x S_{x⁻¹} I_x = I_x = I_x S_{x⁻¹} S_x` for every graded ideal `I`.
    pub ideally_symmetrically: bool,
    /// Every `s ∈ S_x` has local units in `S_x S_{x⁻¹}` and `S_{x⁻¹} S_x`.
    pub nearly_epsilon_strongly: bool,
}

impl GradedRing {
    fn triple(&self, a: &ElemSet, b: &ElemSet, c: &ElemSet) -> ElemSet {
        let ring = self.ring();
        ring.product_set(&ring.product_set(a, b), c)
    }

    pub fn is_strongly_graded(&self) -> bool {
        let ring = self.ring();
        let pairs: Vec<(GroupElem, GroupElem)> = match self.group() {
            GradingGroup::Finite(_) => {
                let all = self.group().finite_elements().expect("finite group");
                all.iter().flat_map(|&x| all.iter().map(move |&y| (x, y))).collect()
            }
            GradingGroup::Integers => {
                // Off the support every S_x is zero, so one representative
                // outside it suffices on the left; on the right we need the
                // support plus every y that lands back in the support.
                let outside = self.support().iter().map(|x| x.abs()).max().unwrap_or(0) + 1;
                let mut left: BTreeSet<GroupElem> = self.support().iter().copied().collect();
                left.insert(outside);
                let mut right: BTreeSet<GroupElem> = self.support().iter().copied().collect();
                for &x in &left {
                    for &z in self.support() {
                        right.insert(z - x);
                    }
                }
                left.iter()
                    .flat_map(|&x| right.iter().map(move |&y| (x, y)))
                    .collect()
            }
        };
        pairs.into_iter().all(|(x, y)| {
            let xy = self.group().op(x, y);
            ring.product_set(&self.component(x), &self.component(y)) == self.component(xy)
        })
    }

    pub fn is_symmetrically_graded(&self) -> bool {
        self.support().iter().all(|&x| {
            let sx = self.component(x);
            let sinv = self.component(self.group().inv(x));
            self.triple(&sx, &sinv, &sx) == sx
        })
    }

    pub fn is_ideally_symmetrically_graded(&self) -> Result<bool> {
        let graded = self.all_graded_ideals()?;
        Ok(graded.iter().all(|i| {
            self.support().iter().all(|&x| {
                let sx = self.component(x);
                let sinv = self.component(self.group().inv(x));
                let ix = self.ideal_component(i.members(), x);
                self.triple(&sx, &sinv, &ix) == ix && self.triple(&ix, &sinv, &sx) == ix
            })
        }))
    }

    pub fn is_nearly_epsilon_strongly_graded(&self) -> bool {
        let ring = self.ring();
        self.support().iter().all(|&x| {
            let sx = self.component(x);
            let sinv = self.component(self.group().inv(x));
            let left_units: Vec<usize> = ring.product_set(&sx, &sinv).iter().collect();
            let right_units: Vec<usize> = ring.product_set(&sinv, &sx).iter().collect();
            let unital = sx.iter().all(|s| {
                left_units.iter().any(|&e| ring.mul(e, s) == s)
                    && right_units.iter().any(|&e| ring.mul(s, e) == s)
            });
            unital
        })
    }

    /// All four grading properties, by exhaustive check. The implication
    /// chain nearly-ε-strong ⇒ ideally symmetric ⇒ symmetric (and strong
    /// with a unit ⇒ nearly-ε-strong) is asserted on the result.
    pub fn classify_grading(&self) -> Result<GradingClassification> {
        let c = GradingClassification {
            strongly: self.is_strongly_graded(),
            symmetrically: self.is_symmetrically_graded(),
            ideally_symmetrically: self.is_ideally_symmetrically_graded()?,
            nearly_epsilon_strongly: self.is_nearly_epsilon_strongly_graded(),
        };
        assert!(
            !c.nearly_epsilon_strongly || c.ideally_symmetrically,
            "nearly epsilon-strong grading that is not ideally symmetric: {c:?}"
        );
        assert!(
            !c.ideally_symmetrically || c.symmetrically,
            "ideally symmetric grading that is not symmetric: {c:?}"
        );
        assert!(
            !(c.strongly && self.ring().unit().is_some()) || c.nearly_epsilon_strongly,
            "unital strong grading that is not nearly epsilon-strong: {c:?}"
        );
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::super::tests::tri2;
    use super::*;
    use crate::finring::{build_ring, Limits};
    use crate::group::FiniteGroup;

    #[test]
    fn triangular_matrices_are_not_symmetric() {
        let c = tri2().classify_grading().unwrap();
        assert_eq!(
            c,
            GradingClassification {
                strongly: false,
                symmetrically: false,
                ideally_symmetrically: false,
                nearly_epsilon_strongly: false,
            }
        );
    }

    #[test]
    fn group_algebra_is_strongly_graded() {
        let ring = build_ring("grpalg(gf(2),cyclic(2))", Limits::default()).unwrap();
        let g = GradingGroup::Finite(FiniteGroup::cyclic(2).unwrap());
        let comps = BTreeMap::from([
            (0, ElemSet::from_indices(4, [0, 2])),
            (1, ElemSet::from_indices(4, [0, 1])),
        ]);
        let s = GradedRing::attach(ring, g, comps).unwrap();
        let c = s.classify_grading().unwrap();
        assert!(c.strongly && c.symmetrically && c.ideally_symmetrically && c.nearly_epsilon_strongly);
    }

    #[test]
    fn trivial_grading_by_trivial_group() {
        let ring = build_ring("mat(gf(2),2)", Limits::default()).unwrap();
        let g = GradingGroup::Finite(FiniteGroup::cyclic(1).unwrap());
        let c = GradedRing::trivial(ring, g).unwrap().classify_grading().unwrap();
        assert!(c.strongly && c.symmetrically && c.ideally_symmetrically && c.nearly_epsilon_strongly);
    }

    #[test]
    fn integer_gradings_of_nonzero_rings_are_never_strong() {
        let ring = build_ring("gf(2)", Limits::default()).unwrap();
        let s = GradedRing::trivial(ring, GradingGroup::Integers).unwrap();
        let c = s.classify_grading().unwrap();
        assert!(!c.strongly);
        assert!(c.symmetrically && c.ideally_symmetrically && c.nearly_epsilon_strongly);
    }

    #[test]
    fn first_row_ring_is_symmetric_but_not_ideally_symmetric() {
        // {[[a, b], [0, 0]]} inside tri(gf(2), 2): idempotent, but the ideal
        // {[[0, b], [0, 0]]} is killed on the right.
        let ring = build_ring("subring(tri(gf(2),2),[0,2,4,6])", Limits::default()).unwrap();
        let s = GradedRing::trivial(ring, GradingGroup::Integers).unwrap();
        let c = s.classify_grading().unwrap();
        assert!(c.symmetrically);
        assert!(!c.ideally_symmetrically);
        assert!(!c.nearly_epsilon_strongly);
    }
}
