//! Finite groups by Cayley table, and the grading groups: a finite group or
//! the ordered group of integers.

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Parser, Tok};

/// Group element used as a degree. For a finite group this is an index
/// `0..order`; for the integers it is the integer itself.
pub type GroupElem = i64;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a row-major multiplication table.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("a group needs at least one element".into()));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table must have {} entries, got {}",
                order * order,
                mul.len()
            )));
        }
        if mul.iter().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let m = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; order];
        for x in 0..order {
            inverse[x] = (0..order)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            mul,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic(0) is not a finite group".into()));
        }
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_table(n, mul)
    }

    /// Permutations of `0..n` in lexicographic order, composed as functions:
    /// `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidGroup(format!("sym({n}) is outside the supported range 1..=5")));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let k = perms.len();
        let mut mul = Vec::with_capacity(k * k);
        for s in &perms {
            for t in &perms {
                let comp: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                mul.push(index(&comp));
            }
        }
        Self::from_table(k, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Textual group specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Integers,
    Cyclic(usize),
    Symmetric(usize),
    Tables { order: usize, mul: Vec<usize> },
}

impl GroupExpr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let g = Self::parse_from(&mut p)?;
        p.expect_end()?;
        Ok(g)
    }

    pub(crate) fn parse_from(p: &mut Parser) -> Result<Self> {
        let name = p.ident()?;
        match name.as_str() {
            "Z" => Ok(GroupExpr::Integers),
            "cyclic" => {
                p.expect_punct('(')?;
                let n = p.uint()?;
                p.expect_punct(')')?;
                Ok(GroupExpr::Cyclic(n))
            }
            "sym" => {
                p.expect_punct('(')?;
                let n = p.uint()?;
                p.expect_punct(')')?;
                Ok(GroupExpr::Symmetric(n))
            }
            "tables" => {
                p.expect_punct('{')?;
                let mut order = None;
                let mut mul = None;
                while !p.eat_punct('}') {
                    let key = p.ident()?;
                    p.expect_punct('=')?;
                    match key.as_str() {
                        "order" => order = Some(p.uint()?),
                        "mul" => mul = Some(p.uint_list()?),
                        other => return p.error(format!("unknown group table field `{other}`")),
                    }
                    if !p.eat_punct(';') && !p.is_punct('}') {
                        return p.error("expected `;` or `}`");
                    }
                }
                match (order, mul) {
                    (Some(order), Some(mul)) => Ok(GroupExpr::Tables { order, mul }),
                    _ => p.error("group tables need both `order` and `mul`"),
                }
            }
            other => p.error(format!("unknown group `{other}`")),
        }
    }

    pub fn build(&self) -> Result<GradingGroup> {
        Ok(match self {
            GroupExpr::Integers => GradingGroup::Integers,
            GroupExpr::Cyclic(n) => GradingGroup::Finite(FiniteGroup::cyclic(*n)?),
            GroupExpr::Symmetric(n) => GradingGroup::Finite(FiniteGroup::symmetric(*n)?),
            GroupExpr::Tables { order, mul } => GradingGroup::Finite(FiniteGroup::from_table(*order, mul.clone())?),
        })
    }

    pub fn build_finite(&self) -> Result<FiniteGroup> {
        match self.build()? {
            GradingGroup::Finite(g) => Ok(g),
            GradingGroup::Integers => Err(Error::InvalidGroup("a finite group is required here".into())),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Integers => write!(f, "Z"),
            GroupExpr::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupExpr::Symmetric(n) => write!(f, "sym({n})"),
            GroupExpr::Tables { order, mul } => {
                write!(f, "tables{{order={order}; mul=[")?;
                for (i, x) in mul.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]}}")
            }
        }
    }
}

/// The group a ring is graded by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingGroup {
    Finite(FiniteGroup),
    /// The integers under addition with their natural order.
    Integers,
}

impl GradingGroup {
    pub fn identity(&self) -> GroupElem {
        match self {
            GradingGroup::Finite(g) => g.identity() as GroupElem,
            GradingGroup::Integers => 0,
        }
    }

    pub fn op(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        match self {
            GradingGroup::Finite(g) => g.op(a as usize, b as usize) as GroupElem,
            GradingGroup::Integers => a + b,
        }
    }

    pub fn inv(&self, a: GroupElem) -> GroupElem {
        match self {
            GradingGroup::Finite(g) => g.inv(a as usize) as GroupElem,
            GradingGroup::Integers => -a,
        }
    }

    pub fn contains(&self, a: GroupElem) -> bool {
        match self {
            GradingGroup::Finite(g) => a >= 0 && (a as usize) < g.order(),
            GradingGroup::Integers => true,
        }
    }

    pub fn is_ordered(&self) -> bool {
        match self {
            GradingGroup::Integers => true,
            // A torsion-free finite group is trivial.
            GradingGroup::Finite(g) => g.is_trivial(),
        }
    }

    pub fn finite_elements(&self) -> Option<Vec<GroupElem>> {
        match self {
            GradingGroup::Finite(g) => Some((0..g.order() as GroupElem).collect()),
            GradingGroup::Integers => None,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            GradingGroup::Finite(g) => Some(g),
            GradingGroup::Integers => None,
        }
    }
}

impl crate::syntax::Parser {
    /// A group element literal: an integer.
    pub(crate) fn group_elem(&mut self) -> Result<GroupElem> {
        match self.peek() {
            Some(Tok::Int(_)) => self.int(),
            _ => self.error("expected a group element"),
        }
    }
}
