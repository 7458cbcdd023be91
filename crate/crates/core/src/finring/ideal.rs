use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use super::FiniteRing;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// A two-sided ideal of a [`FiniteRing`].
#[derive(Clone)]
pub struct Ideal<'r> {
    ring: &'r FiniteRing,
    members: ElemSet,
}

impl<'r> Ideal<'r> {
    /// Wraps `members` after checking the ideal axioms.
    pub fn new(ring: &'r FiniteRing, members: ElemSet) -> Result<Self> {
        if members.universe() != ring.order() {
            return Err(Error::NotAnIdeal("bitmask has the wrong width".into()));
        }
        if let Some(reason) = ideal_violation(ring, &members) {
            return Err(Error::NotAnIdeal(reason));
        }
        Ok(Ideal { ring, members })
    }

    /// Caller guarantees the ideal axioms.
    pub(crate) fn trusted(ring: &'r FiniteRing, members: ElemSet) -> Self {
        debug_assert!(ideal_violation(ring, &members).is_none());
        Ideal { ring, members }
    }

    pub fn zero(ring: &'r FiniteRing) -> Self {
        Ideal {
            ring,
            members: ring.zero_set(),
        }
    }

    pub fn whole(ring: &'r FiniteRing) -> Self {
        Ideal {
            ring,
            members: ring.full_set(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn into_members(self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.members.count() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.count() < self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_ring(&self, other: &Ideal<'_>) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MismatchedRings)
        }
    }

    pub fn intersection(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.same_ring(other)?;
        Ok(Ideal::trusted(self.ring, self.members.intersection(&other.members)))
    }

    pub fn sum(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.same_ring(other)?;
        Ok(Ideal::trusted(self.ring, self.ring.sum_set(&self.members, &other.members)))
    }

    /// `AB`: the additive closure of all products `ab`.
    pub fn product(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.same_ring(other)?;
        Ok(Ideal::trusted(self.ring, self.ring.product_set(&self.members, &other.members)))
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.ring == other.ring
    }
}

impl Eq for Ideal<'_> {}

impl PartialOrd for Ideal<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.members)
    }
}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.members)
    }
}

fn ideal_violation(ring: &FiniteRing, set: &ElemSet) -> Option<String> {
    if !set.contains(ring.zero()) {
        return Some("does not contain zero".into());
    }
    for a in set.iter() {
        if !set.contains(ring.neg(a)) {
            return Some(format!("not closed under negation at {a}"));
        }
        for b in set.iter() {
            if !set.contains(ring.add(a, b)) {
                return Some(format!("not closed under addition at ({a},{b})"));
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) || !set.contains(ring.mul(a, r)) {
                return Some(format!("not absorbing at ({r},{a})"));
            }
        }
    }
    None
}

impl FiniteRing {
    pub fn is_ideal(&self, set: &ElemSet) -> bool {
        set.universe() == self.order() && ideal_violation(self, set).is_none()
    }

    /// Ideal generated by `gens`: the additive closure of
    /// `A ∪ AS ∪ SA ∪ SAS`, computed as a fixpoint. No unit is assumed.
    pub fn generate_ideal(&self, gens: &[usize]) -> Result<Ideal<'_>> {
        for &g in gens {
            self.check_element(g)?;
        }
        Ok(Ideal::trusted(self, self.ideal_closure(gens.iter().copied())))
    }

    pub(crate) fn ideal_closure<I: IntoIterator<Item = usize>>(&self, gens: I) -> ElemSet {
        let mut members = self.zero_set();
        let mut list = vec![self.zero()];
        let mut queue: Vec<usize> = gens.into_iter().collect();
        while let Some(x) = queue.pop() {
            if !members.insert(x) {
                continue;
            }
            let snapshot = list.len();
            list.push(x);
            for &y in &list[..snapshot] {
                let s = self.add(x, y);
                if !members.contains(s) {
                    queue.push(s);
                }
            }
            let d = self.add(x, x);
            if !members.contains(d) {
                queue.push(d);
            }
            for r in self.elements() {
                let left = self.mul(r, x);
                if !members.contains(left) {
                    queue.push(left);
                }
                let right = self.mul(x, r);
                if !members.contains(right) {
                    queue.push(right);
                }
            }
        }
        members
    }

    /// The complete ideal lattice in canonical (bitmask) order.
    ///
    /// Computed once per ring as the join-closure of the principal ideals.
    pub fn all_ideals(&self) -> Result<Vec<Ideal<'_>>> {
        Ok(self
            .lattice()?
            .iter()
            .map(|m| Ideal::trusted(self, m.clone()))
            .collect())
    }

    pub(crate) fn lattice(&self) -> Result<&[ElemSet]> {
        if let Some(l) = self.lattice.get() {
            return if l.len() > self.limits.max_lattice {
                Err(Error::LatticeCap {
                    cap: self.limits.max_lattice,
                })
            } else {
                Ok(l)
            };
        }
        let computed = self.enumerate_lattice()?;
        Ok(self.lattice.get_or_init(|| computed))
    }

    fn enumerate_lattice(&self) -> Result<Vec<ElemSet>> {
        let cap = self.limits.max_lattice;
        let mut principals: Vec<ElemSet> = self.elements().map(|a| self.ideal_closure([a])).collect();
        principals.sort();
        principals.dedup();

        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut order: Vec<ElemSet> = Vec::new();
        for p in principals.iter() {
            if seen.insert(p.clone()) {
                order.push(p.clone());
            }
        }
        let mut next = 0;
        while next < order.len() {
            if order.len() > cap {
                return Err(Error::LatticeCap { cap });
            }
            let current = order[next].clone();
            next += 1;
            for p in &principals {
                if p.is_subset(&current) {
                    continue;
                }
                let joined = self.sum_set(&current, p);
                if seen.insert(joined.clone()) {
                    order.push(joined);
                }
            }
        }
        if order.len() > cap {
            return Err(Error::LatticeCap { cap });
        }
        order.sort();
        Ok(order)
    }

    /// `AB` for two ideals of this ring.
    pub fn ideal_product<'a>(&'a self, a: &Ideal<'_>, b: &Ideal<'_>) -> Result<Ideal<'a>> {
        if a.ring() != self || b.ring() != self {
            return Err(Error::MismatchedRings);
        }
        Ok(Ideal::trusted(self, self.product_set(a.members(), b.members())))
    }
}
