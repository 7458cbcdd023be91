//! Finite, possibly nonunital, associative rings given by Cayley tables.
//!
//! Elements are indices `0..order`. Every constructor checks the ring axioms
//! exhaustively, so a `FiniteRing` value is always a ring.

mod construct;
mod ideal;
pub(crate) mod prime;

use std::fmt;
use std::sync::OnceLock;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

pub use construct::{build_ring, RingExpr};
pub use ideal::Ideal;
pub use prime::{
    center, is_fully_idempotent, is_prime_ideal, is_prime_ring, is_von_neumann_regular,
    prime_by_element_criterion, prime_by_ideal_pairs, prime_by_m_system,
};

/// Size caps for constructions and enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 256,
            max_lattice: 65536,
        }
    }
}

pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    unit: Option<usize>,
    limits: Limits,
    lattice: OnceLock<Vec<ElemSet>>,
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            order: self.order,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            zero: self.zero,
            unit: self.unit,
            limits: self.limits,
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.order == other.order
                && self.zero == other.zero
                && self.add == other.add
                && self.mul == other.mul)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Builds a ring from row-major `order × order` tables and validates
    /// every axiom.
    pub fn from_tables(order: usize, add: Vec<usize>, mul: Vec<usize>, limits: Limits) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidRing("a ring needs at least one element".into()));
        }
        if order > limits.max_order {
            return Err(Error::OrderCap {
                order: order as u128,
                cap: limits.max_order,
            });
        }
        let cells = order * order;
        if add.len() != cells || mul.len() != cells {
            return Err(Error::InvalidRing(format!(
                "tables must have {cells} entries, got add={} mul={}",
                add.len(),
                mul.len()
            )));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange { index: bad, order });
        }
        let add = add.into_iter().map(|x| x as u32).collect();
        let mul = mul.into_iter().map(|x| x as u32).collect();
        Self::validated(order, add, mul, limits)
    }

    /// Builds a ring from addition and multiplication functions on indices.
    pub fn from_fn<A, M>(order: usize, add: A, mul: M, limits: Limits) -> Result<Self>
    where
        A: Fn(usize, usize) -> usize,
        M: Fn(usize, usize) -> usize,
    {
        if order == 0 {
            return Err(Error::InvalidRing("a ring needs at least one element".into()));
        }
        if order > limits.max_order {
            return Err(Error::OrderCap {
                order: order as u128,
                cap: limits.max_order,
            });
        }
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let s = add(a, b);
                let p = mul(a, b);
                if s >= order || p >= order {
                    return Err(Error::ElementOutOfRange {
                        index: s.max(p),
                        order,
                    });
                }
                at.push(s as u32);
                mt.push(p as u32);
            }
        }
        Self::validated(order, at, mt, limits)
    }

    fn validated(order: usize, add: Vec<u32>, mul: Vec<u32>, limits: Limits) -> Result<Self> {
        let n = order;
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;

        let zero = (0..n)
            .find(|&z| (0..n).all(|x| a(z, x) == x))
            .ok_or_else(|| Error::InvalidRing("addition has no identity".into()))?;
        for x in 0..n {
            for y in 0..x {
                if a(x, y) != a(y, x) {
                    return Err(Error::InvalidRing(format!("addition not commutative at ({x},{y})")));
                }
            }
        }
        let mut neg = vec![0u32; n];
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| a(x, y) == zero)
                .ok_or_else(|| Error::InvalidRing(format!("element {x} has no additive inverse")))?;
            neg[x] = inv as u32;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = a(x, y);
                let pxy = m(x, y);
                for z in 0..n {
                    if a(xy, z) != a(x, a(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "addition not associative at ({x},{y},{z})"
                        )));
                    }
                    if m(pxy, z) != m(x, m(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "multiplication not associative at ({x},{y},{z})"
                        )));
                    }
                    if m(x, a(y, z)) != a(pxy, m(x, z)) {
                        return Err(Error::InvalidRing(format!(
                            "left distributivity fails at ({x},{y},{z})"
                        )));
                    }
                    if m(xy, z) != a(m(x, z), m(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "right distributivity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        let unit = (0..n).find(|&u| (0..n).all(|x| m(u, x) == x && m(x, u) == x));
        Ok(FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            unit,
            limits,
            lattice: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn add_table(&self) -> Vec<usize> {
        self.add.iter().map(|&x| x as usize).collect()
    }

    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&x| x as usize).collect()
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.order)
    }

    pub fn zero_set(&self) -> ElemSet {
        ElemSet::from_indices(self.order, [self.zero])
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// Smallest additive subgroup containing `set`.
    pub fn additive_closure(&self, set: &ElemSet) -> ElemSet {
        let mut members = self.zero_set();
        let mut list = vec![self.zero];
        let mut queue: Vec<usize> = set.iter().collect();
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
            // x + x is not covered by the pairwise step above.
            let d = self.add(x, x);
            if !members.contains(d) {
                queue.push(d);
            }
        }
        members
    }

    /// Additive closure of `{ab : a ∈ A, b ∈ B}`.
    pub fn product_set(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let bs: Vec<usize> = b.iter().collect();
        let mut raw = self.empty_set();
        for x in a.iter() {
            for &y in &bs {
                raw.insert(self.mul(x, y));
            }
        }
        self.additive_closure(&raw)
    }

    /// `{a + b : a ∈ A, b ∈ B}`; the sum of two additive subgroups.
    pub fn sum_set(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let bs: Vec<usize> = b.iter().collect();
        let mut out = self.empty_set();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn is_additive_subgroup(&self, set: &ElemSet) -> bool {
        set.contains(self.zero)
            && set.iter().all(|x| set.iter().all(|y| set.contains(self.add(x, y))))
    }

    /// Ring on `elements` (listed order becomes the new indexing), with the
    /// inherited operations. Fails if the subset is not a subring.
    pub fn induced_subring(&self, elements: &[usize]) -> Result<FiniteRing> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            self.check_element(x)?;
            if pos[x] != usize::MAX {
                return Err(Error::InvalidRing(format!("element {x} listed twice in subring")));
            }
            pos[x] = i;
        }
        if pos[self.zero] == usize::MAX {
            return Err(Error::InvalidRing("subring must contain zero".into()));
        }
        let lookup = |x: usize| -> usize { pos[x] };
        for &x in elements {
            for &y in elements {
                if lookup(self.add(x, y)) == usize::MAX || lookup(self.mul(x, y)) == usize::MAX {
                    return Err(Error::InvalidRing(format!(
                        "subset not closed under ring operations at ({x},{y})"
                    )));
                }
            }
        }
        FiniteRing::from_fn(
            elements.len(),
            |a, b| lookup(self.add(elements[a], elements[b])),
            |a, b| lookup(self.mul(elements[a], elements[b])),
            self.limits,
        )
    }

    /// Returns a copy carrying different caps.
    pub fn with_limits(&self, limits: Limits) -> FiniteRing {
        let mut r = self.clone();
        r.limits = limits;
        r
    }
}
