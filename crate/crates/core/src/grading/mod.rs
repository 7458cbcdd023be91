//! Group gradings on finite rings: internal direct-sum decompositions
//! `S = ⊕ S_x` with `S_x S_y ⊆ S_{xy}`.

mod classify;
mod prime;

use std::collections::BTreeMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{FiniteRing, Ideal, Limits, RingExpr};
use crate::group::{GradingGroup, GroupElem, GroupExpr};
use crate::syntax::Parser;

pub use classify::GradingClassification;

/// A finite ring with a group grading. The decomposition of every element
/// is tabulated at construction.
#[derive(Debug, Clone)]
pub struct GradedRing {
    ring: FiniteRing,
    group: GradingGroup,
    support: Vec<GroupElem>,
    components: Vec<ElemSet>,
    /// `decomp[s * support.len() + k]` is the component of `s` at `support[k]`.
    decomp: Vec<usize>,
    base: FiniteRing,
    base_embed: Vec<usize>,
}

impl GradedRing {
    /// Validates and attaches a grading. Components not listed are zero;
    /// listed zero components are dropped from the support.
    pub fn attach(ring: FiniteRing, group: GradingGroup, components: BTreeMap<GroupElem, ElemSet>) -> Result<Self> {
        let n = ring.order();
        let mut support = Vec::new();
        let mut comps = Vec::new();
        for (x, set) in components {
            if !group.contains(x) {
                return Err(Error::InvalidGrading(format!("{x} is not an element of the grading group")));
            }
            if set.universe() != n {
                return Err(Error::InvalidGrading(format!("component {x} has the wrong width")));
            }
            if !ring.is_additive_subgroup(&set) {
                return Err(Error::InvalidGrading(format!("component {x} is not an additive subgroup")));
            }
            if set.count() > 1 {
                support.push(x);
                comps.push(set);
            }
        }
        let k = support.len();

        let mut count: u128 = 1;
        for c in &comps {
            count = count.saturating_mul(c.count() as u128);
        }
        if count != n as u128 {
            return Err(Error::InvalidGrading(format!(
                "not a direct sum: component orders multiply to {count}, ring has {n} elements"
            )));
        }

        let lists: Vec<Vec<usize>> = comps.iter().map(|c| c.to_vec()).collect();
        let mut decomp = vec![usize::MAX; n * k.max(1)];
        let mut hit = vec![false; n];
        let mut digits = vec![0usize; k];
        loop {
            let parts: Vec<usize> = (0..k).map(|i| lists[i][digits[i]]).collect();
            let s = parts.iter().fold(ring.zero(), |acc, &p| ring.add(acc, p));
            if hit[s] {
                return Err(Error::InvalidGrading(format!("not a direct sum: element {s} decomposes twice")));
            }
            hit[s] = true;
            for (i, &p) in parts.iter().enumerate() {
                decomp[s * k + i] = p;
            }
            let mut i = 0;
            while i < k {
                digits[i] += 1;
                if digits[i] < lists[i].len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }

        for (i, &x) in support.iter().enumerate() {
            for (j, &y) in support.iter().enumerate() {
                let xy = group.op(x, y);
                let target = support.iter().position(|&z| z == xy);
                for a in lists[i].iter() {
                    for b in lists[j].iter() {
                        let p = ring.mul(*a, *b);
                        let ok = match target {
                            Some(t) => comps[t].contains(p),
                            None => p == ring.zero(),
                        };
                        if !ok {
                            return Err(Error::InvalidGrading(format!(
                                "S_{x} S_{y} is not contained in S_{xy}: {a}·{b} = {p}"
                            )));
                        }
                    }
                }
            }
        }

        let e = group.identity();
        let base_elems: Vec<usize> = match support.iter().position(|&x| x == e) {
            Some(i) => lists[i].clone(),
            None => vec![ring.zero()],
        };
        let base = ring.induced_subring(&base_elems)?;

        Ok(GradedRing {
            ring,
            group,
            support,
            components: comps,
            decomp,
            base,
            base_embed: base_elems,
        })
    }

    /// `S_e = S`.
    pub fn trivial(ring: FiniteRing, group: GradingGroup) -> Result<Self> {
        let e = group.identity();
        let full = ring.full_set();
        Self::attach(ring, group, BTreeMap::from([(e, full)]))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    /// Group elements with a nonzero component, ascending.
    pub fn support(&self) -> &[GroupElem] {
        &self.support
    }

    fn position(&self, x: GroupElem) -> Option<usize> {
        self.support.binary_search(&x).ok()
    }

    /// `S_x` as a set of ring elements; `{0}` off the support.
    pub fn component(&self, x: GroupElem) -> ElemSet {
        match self.position(x) {
            Some(i) => self.components[i].clone(),
            None => self.ring.zero_set(),
        }
    }

    /// The component of `s` at degree `x`.
    pub fn component_of(&self, s: usize, x: GroupElem) -> usize {
        match self.position(x) {
            Some(i) => self.decomp[s * self.support.len() + i],
            None => self.ring.zero(),
        }
    }

    /// The unique decomposition of `s` over the support.
    pub fn homogeneous_components(&self, s: usize) -> Result<BTreeMap<GroupElem, usize>> {
        self.ring.check_element(s)?;
        Ok(self
            .support
            .iter()
            .map(|&x| (x, self.component_of(s, x)))
            .collect())
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self, s: usize) -> Option<GroupElem> {
        if s == self.ring.zero() {
            return None;
        }
        self.support.iter().copied().find(|&x| self.component_of(s, x) == s)
    }

    pub fn is_homogeneous(&self, s: usize) -> bool {
        s == self.ring.zero() || self.degree(s).is_some()
    }

    /// `h(S)`, including zero.
    pub fn homogeneous_elements(&self) -> ElemSet {
        ElemSet::from_indices(self.ring.order(), self.ring.elements().filter(|&s| self.is_homogeneous(s)))
    }

    /// The identity component `S_e` as a subset of the ring.
    pub fn base_set(&self) -> ElemSet {
        ElemSet::from_indices(self.ring.order(), self.base_embed.iter().copied())
    }

    /// `S_e` as a ring in its own right; index `i` is ring element
    /// `base_embedding()[i]`.
    pub fn base_ring(&self) -> &FiniteRing {
        &self.base
    }

    pub fn base_embedding(&self) -> &[usize] {
        &self.base_embed
    }

    pub fn is_graded_set(&self, set: &ElemSet) -> bool {
        set.iter()
            .all(|s| self.support.iter().all(|&x| set.contains(self.component_of(s, x))))
    }

    /// Every member's homogeneous components lie in the ideal.
    pub fn is_graded_ideal(&self, ideal: &Ideal<'_>) -> Result<bool> {
        if ideal.ring() != &self.ring {
            return Err(Error::MismatchedRings);
        }
        Ok(self.is_graded_set(ideal.members()))
    }

    pub fn all_graded_ideals(&self) -> Result<Vec<Ideal<'_>>> {
        Ok(self
            .ring
            .all_ideals()?
            .into_iter()
            .filter(|i| self.is_graded_set(i.members()))
            .collect())
    }

    /// The ideal generated by homogeneous elements; always graded.
    pub fn generate_graded_ideal(&self, gens: &[usize]) -> Result<Ideal<'_>> {
        for &g in gens {
            self.ring.check_element(g)?;
            if !self.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(g));
            }
        }
        let ideal = self.ring.generate_ideal(gens)?;
        assert!(
            self.is_graded_set(ideal.members()),
            "ideal generated by homogeneous elements {gens:?} is not graded"
        );
        Ok(ideal)
    }

    /// `I_x = I ∩ S_x`.
    pub fn ideal_component(&self, set: &ElemSet, x: GroupElem) -> ElemSet {
        set.intersection(&self.component(x))
    }
}

/// Graded-ring file: `ring: <expr> group: <group> component <x>: [..] ..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpec {
    pub ring: RingExpr,
    pub group: GroupExpr,
    pub components: BTreeMap<GroupElem, Vec<usize>>,
}

impl GradedSpec {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        p.expect_keyword("ring")?;
        p.expect_punct(':')?;
        let ring = RingExpr::parse_from(&mut p)?;
        p.expect_keyword("group")?;
        p.expect_punct(':')?;
        let group = GroupExpr::parse_from(&mut p)?;
        let mut components = BTreeMap::new();
        while !p.at_end() {
            p.expect_keyword("component")?;
            let x = p.group_elem()?;
            p.expect_punct(':')?;
            let elems = p.uint_list()?;
            if components.insert(x, elems).is_some() {
                return p.error(format!("component {x} given twice"));
            }
        }
        Ok(GradedSpec { ring, group, components })
    }

    pub fn build(&self, limits: Limits) -> Result<GradedRing> {
        let ring = self.ring.build(limits)?;
        let group = self.group.build()?;
        let mut comps = BTreeMap::new();
        for (&x, elems) in &self.components {
            for &s in elems {
                ring.check_element(s)?;
            }
            comps.insert(x, ElemSet::from_indices(ring.order(), elems.iter().copied()));
        }
        GradedRing::attach(ring, group, comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::build_ring;

    pub(crate) fn tri2() -> GradedRing {
        let ring = build_ring("tri(gf(2),2)", Limits::default()).unwrap();
        // (a11, a12, a22) with E11 = 4, E12 = 2, E22 = 1.
        let comps = BTreeMap::from([
            (0, ElemSet::from_indices(8, [0, 1, 4, 5])),
            (1, ElemSet::from_indices(8, [0, 2])),
        ]);
        GradedRing::attach(ring, GradingGroup::Integers, comps).unwrap()
    }

    #[test]
    fn standard_grading_of_triangular_matrices() {
        let s = tri2();
        assert_eq!(s.support(), &[0, 1]);
        assert_eq!(s.degree(2), Some(1));
        assert_eq!(s.degree(6), None);
        let c = s.homogeneous_components(6).unwrap();
        assert_eq!(c, BTreeMap::from([(0, 4), (1, 2)]));
        assert_eq!(s.homogeneous_components(0).unwrap(), BTreeMap::from([(0, 0), (1, 0)]));
        assert_eq!(s.base_ring().order(), 4);
    }

    #[test]
    fn rejects_non_direct_sum() {
        let ring = build_ring("gf(2)", Limits::default()).unwrap();
        let full = ring.full_set();
        let res = GradedRing::attach(
            ring,
            GradingGroup::Integers,
            BTreeMap::from([(0, full.clone()), (1, full)]),
        );
        assert!(matches!(res, Err(Error::InvalidGrading(_))));
    }

    #[test]
    fn rejects_non_multiplicative() {
        // gf(4) = {0, 1, x, x+1}: putting x in degree 1 of C2 forces x^2 = x+1 into degree 0.
        let ring = build_ring("gf(4)", Limits::default()).unwrap();
        let g = GroupExpr::Cyclic(2).build().unwrap();
        let res = GradedRing::attach(
            ring,
            g,
            BTreeMap::from([(0, ElemSet::from_indices(4, [0, 1])), (1, ElemSet::from_indices(4, [0, 2]))]),
        );
        assert!(matches!(res, Err(Error::InvalidGrading(_))));
    }

    #[test]
    fn trivial_grading_accepted() {
        let ring = build_ring("zmod(6)", Limits::default()).unwrap();
        let s = GradedRing::trivial(ring, GradingGroup::Integers).unwrap();
        assert_eq!(s.support(), &[0]);
        assert_eq!(s.all_graded_ideals().unwrap().len(), s.ring().all_ideals().unwrap().len());
    }

    #[test]
    fn graded_ideals_of_triangular_matrices() {
        let s = tri2();
        assert_eq!(s.all_graded_ideals().unwrap().len(), 5);
        let i = s.generate_graded_ideal(&[2]).unwrap();
        assert_eq!(i.members().to_vec(), vec![0, 2]);
        let j = s.generate_graded_ideal(&[4]).unwrap();
        assert_eq!(j.members().to_vec(), vec![0, 2, 4, 6]);
        assert!(s.generate_graded_ideal(&[]).unwrap().is_zero());
        assert_eq!(s.generate_graded_ideal(&[6]).unwrap_err(), Error::NotHomogeneous(6));
    }

    #[test]
    fn principal_ideal_of_inhomogeneous_element() {
        // <E11 + E12> contains E11 + E12 and E11·(E11+E12)·E22 = E12, hence E11.
        let s = tri2();
        let i = s.ring().generate_ideal(&[6]).unwrap();
        assert_eq!(i.members().to_vec(), vec![0, 2, 4, 6]);
        assert!(s.is_graded_ideal(&i).unwrap());
    }

    #[test]
    fn parse_graded_spec() {
        let src = "ring: tri(gf(2),2)\ngroup: Z\ncomponent 0: [0,1,4,5]\ncomponent 1: [0,2]\n";
        let s = GradedSpec::parse(src).unwrap().build(Limits::default()).unwrap();
        assert_eq!(s.support(), &[0, 1]);
        let dup = "ring: gf(2) group: Z component 0: [0,1] component 0: [0,1]";
        assert!(matches!(GradedSpec::parse(dup), Err(Error::Parse { .. })));
    }
}
