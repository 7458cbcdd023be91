//! Graded subrings `S = ⊕ I_x x` of group rings `R[G]` cut out by a
//! family of ideals `(I_x)` of `R`.

mod zring;

use std::collections::BTreeMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{is_fully_idempotent, FiniteRing, Limits, RingExpr};
use crate::grading::GradedRing;
use crate::group::{GradingGroup, GroupElem, GroupExpr};
use crate::syntax::Parser;

pub use zring::{FilterElement, Trial, WitnessOutcome, ZFilterRing, DEFAULT_SEED};

/// How `x ↦ I_x` is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterRule {
    /// One additive subgroup per element of a finite group, by index.
    Table(Vec<ElemSet>),
    /// Over `ℤ`: `I_x = R` for `x ∈ nℤ` and `I_x = other` elsewhere.
    Subgroup { modulus: u64, other: ElemSet },
    /// Over `ℤ`: `I_0 = R` and `I_x = ideal` for `x ≠ 0`.
    Constant(ElemSet),
}

#[derive(Debug, Clone)]
pub struct GFilter {
    coeff: FiniteRing,
    group: GradingGroup,
    rule: FilterRule,
}

/// Filter-level verdicts, each computed from the ideals `I_x` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterClassification {
    /// `I_x I_y = I_{xy}` for all `x, y`.
    pub strongly: bool,
    /// `R² = R` and `I_x I_{x⁻¹} I_x = I_x` for all `x`.
    pub symmetric: bool,
    /// `I_x = I_{x⁻¹}` for all `x`.
    pub inverse_equal: bool,
    /// Absorption by every graded ideal of `S`. Decided exhaustively over
    /// finite groups. Over `ℤ` it is only reported for fully idempotent `R`,
    /// where it coincides with `symmetric`.
    pub ideally_symmetric: Option<bool>,
    /// Each `I_x` is s-unital on the left over `I_x I_{x⁻¹}` and on the
    /// right over `I_{x⁻¹} I_x`.
    pub nearly_eps: bool,
    pub r_idempotent: bool,
    pub r_fully_idempotent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `m ∈ Tm` (left) or `m ∈ mT` (right) for every `m ∈ M`.
pub fn is_s_unital_module(ring: &FiniteRing, t: &ElemSet, m: &ElemSet, side: Side) -> Result<bool> {
    if t.universe() != ring.order() || m.universe() != ring.order() {
        return Err(Error::MismatchedRings);
    }
    Ok(m.iter().all(|x| {
        t.iter().any(|s| match side {
            Side::Left => ring.mul(s, x) == x,
            Side::Right => ring.mul(x, s) == x,
        })
    }))
}

impl GFilter {
    /// Checks shapes and `I_e = R`; the filter law is left to
    /// [`GFilter::validate`].
    pub fn new(coeff: FiniteRing, group: GradingGroup, rule: FilterRule) -> Result<Self> {
        let n = coeff.order();
        let full = coeff.full_set();
        let sets: Vec<&ElemSet> = match (&rule, &group) {
            (FilterRule::Table(t), GradingGroup::Finite(g)) => {
                if t.len() != g.order() {
                    return Err(Error::InvalidFilter(format!(
                        "expected {} components, got {}",
                        g.order(),
                        t.len()
                    )));
                }
                if t[g.identity()] != full {
                    return Err(Error::InvalidFilter("the identity component must be the whole ring".into()));
                }
                t.iter().collect()
            }
            (FilterRule::Subgroup { other, .. }, GradingGroup::Integers) => vec![other],
            (FilterRule::Constant(c), GradingGroup::Integers) => vec![c],
            _ => return Err(Error::InvalidFilter("rule does not match the group".into())),
        };
        for s in sets {
            if s.universe() != n || !coeff.is_additive_subgroup(s) {
                return Err(Error::InvalidFilter(format!("{s} is not an additive subgroup")));
            }
        }
        Ok(GFilter { coeff, group, rule })
    }

    /// `I_x = R` for every `x`.
    pub fn full(coeff: FiniteRing, group: GradingGroup) -> Result<Self> {
        let full = coeff.full_set();
        let rule = match &group {
            GradingGroup::Finite(g) => FilterRule::Table(vec![full; g.order()]),
            GradingGroup::Integers => FilterRule::Subgroup {
                modulus: 1,
                other: full,
            },
        };
        Self::new(coeff, group, rule)
    }

    pub fn coeff_ring(&self) -> &FiniteRing {
        &self.coeff
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn rule(&self) -> &FilterRule {
        &self.rule
    }

    /// `I_x`.
    pub fn ideal(&self, x: GroupElem) -> ElemSet {
        match &self.rule {
            FilterRule::Table(t) => t[x as usize].clone(),
            FilterRule::Subgroup { modulus, other } => {
                let in_subgroup = if *modulus == 0 {
                    x == 0
                } else {
                    x.rem_euclid(*modulus as i64) == 0
                };
                if in_subgroup {
                    self.coeff.full_set()
                } else {
                    other.clone()
                }
            }
            FilterRule::Constant(c) => {
                if x == 0 {
                    self.coeff.full_set()
                } else {
                    c.clone()
                }
            }
        }
    }

    /// Group elements covering every behaviour of the rule: all elements
    /// of a finite group; over `ℤ`, one residue per class, together with
    /// enough representatives that sums land in every class.
    fn representatives(&self) -> Vec<GroupElem> {
        match (&self.rule, &self.group) {
            (FilterRule::Subgroup { modulus, .. }, _) if *modulus > 0 => (0..*modulus as i64).collect(),
            (FilterRule::Table(_), g) => g.finite_elements().expect("finite group"),
            _ => vec![-1, 0, 1, 2],
        }
    }

    /// Every `I_x` is an ideal of `R` and `I_x I_y ⊆ I_{xy}` for all `x, y`.
    pub fn validate(&self) -> bool {
        let reps = self.representatives();
        if !reps.iter().all(|&x| self.coeff.is_ideal(&self.ideal(x))) {
            return false;
        }
        reps.iter().all(|&x| {
            reps.iter().all(|&y| {
                let prod = self.coeff.product_set(&self.ideal(x), &self.ideal(y));
                prod.is_subset(&self.ideal(self.group.op(x, y)))
            })
        })
    }

    fn require_valid(&self) -> Result<()> {
        if self.validate() {
            Ok(())
        } else {
            Err(Error::InvalidFilter("the components do not form a filter of ideals".into()))
        }
    }

    /// The subset `⊕ I_x x` of `R[G]` for a finite group, as a graded
    /// ring. Fails if the subset is not closed under multiplication.
    ///
    /// Elements are coefficient tuples in mixed radix, the identity
    /// coordinate most significant, each digit the rank of the coefficient
    /// within `I_x`.
    pub fn build_subring(&self, limits: Limits) -> Result<GradedRing> {
        let GradingGroup::Finite(g) = &self.group else {
            return Err(Error::InvalidFilter("use the Z handle for filters over Z".into()));
        };
        let FilterRule::Table(table) = &self.rule else {
            unreachable!("finite groups carry tables");
        };
        let m = g.order();
        let mut order: u128 = 1;
        for t in table {
            order = order.saturating_mul(t.count() as u128);
        }
        if order > limits.max_order as u128 {
            return Err(Error::OrderCap {
                order,
                cap: limits.max_order,
            });
        }
        let order = order as usize;
        let digits: Vec<Vec<usize>> = table.iter().map(|t| t.to_vec()).collect();
        let rank: Vec<Vec<Option<usize>>> = digits
            .iter()
            .map(|d| {
                let mut r = vec![None; self.coeff.order()];
                for (k, &c) in d.iter().enumerate() {
                    r[c] = Some(k);
                }
                r
            })
            .collect();
        // Identity first, then the other elements in index order.
        let mut coords: Vec<usize> = vec![g.identity()];
        coords.extend((0..m).filter(|&x| x != g.identity()));
        let decode = |mut i: usize| -> Vec<usize> {
            let mut tuple = vec![0; m];
            for &x in coords.iter().rev() {
                let base = digits[x].len();
                tuple[x] = digits[x][i % base];
                i /= base;
            }
            tuple
        };
        let encode = |tuple: &[usize]| -> Option<usize> {
            let mut i = 0;
            for &x in &coords {
                i = i * digits[x].len() + rank[x][tuple[x]]?;
            }
            Some(i)
        };
        let tuples: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let r = &self.coeff;
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in &tuples {
            for b in &tuples {
                let sum: Vec<usize> = (0..m).map(|x| r.add(a[x], b[x])).collect();
                add.push(encode(&sum).expect("components are additive subgroups"));
                let mut prod = vec![r.zero(); m];
                for x in 0..m {
                    for y in 0..m {
                        let z = g.op(x, y);
                        prod[z] = r.add(prod[z], r.mul(a[x], b[y]));
                    }
                }
                match encode(&prod) {
                    Some(i) => mul.push(i),
                    None => {
                        return Err(Error::InvalidFilter(
                            "the subset is not closed under multiplication".into(),
                        ))
                    }
                }
            }
        }
        let ring = FiniteRing::from_tables(order, add, mul, limits)?;
        let mut comps = BTreeMap::new();
        for x in 0..m {
            let members = tuples
                .iter()
                .enumerate()
                .filter(|(_, t)| (0..m).all(|y| y == x || t[y] == r.zero()))
                .map(|(i, _)| i);
            comps.insert(x as GroupElem, ElemSet::from_indices(order, members));
        }
        GradedRing::attach(ring, self.group.clone(), comps)
    }

    /// Arithmetic handle for a filter over `ℤ`.
    pub fn z_ring(&self) -> Result<ZFilterRing> {
        if !matches!(self.group, GradingGroup::Integers) {
            return Err(Error::InvalidFilter("not a filter over Z".into()));
        }
        self.require_valid()?;
        Ok(ZFilterRing::new(self.clone()))
    }

    /// Graded ideals of `S` over a finite group, as families `(K_x)` of
    /// ideals of `R` with `K_x ⊆ I_x`, `I_y K_x ⊆ K_{yx}` and
    /// `K_x I_y ⊆ K_{xy}`.
    fn graded_ideal_families(&self) -> Result<Vec<Vec<ElemSet>>> {
        let elems = self.group.finite_elements().expect("finite group");
        let ideals: Vec<ElemSet> = self
            .coeff
            .all_ideals()?
            .into_iter()
            .map(|i| i.into_members())
            .collect();
        let choices: Vec<Vec<&ElemSet>> = elems
            .iter()
            .map(|&x| {
                let ix = self.ideal(x);
                ideals.iter().filter(|k| k.is_subset(&ix)).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; elems.len()];
        loop {
            let family: Vec<ElemSet> = pick.iter().enumerate().map(|(x, &k)| choices[x][k].clone()).collect();
            let closed = elems.iter().all(|&x| {
                elems.iter().all(|&y| {
                    let (kx, iy) = (&family[x as usize], self.ideal(y));
                    self.coeff
                        .product_set(&iy, kx)
                        .is_subset(&family[self.group.op(y, x) as usize])
                        && self
                            .coeff
                            .product_set(kx, &iy)
                            .is_subset(&family[self.group.op(x, y) as usize])
                })
            });
            if closed {
                out.push(family);
            }
            let mut i = 0;
            loop {
                if i == pick.len() {
                    return Ok(out);
                }
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    /// Classifies the filter from its ideals. Over a finite group every
    /// verdict is cross-checked against the built graded ring.
    pub fn classify(&self) -> Result<FilterClassification> {
        self.require_valid()?;
        let r = &self.coeff;
        let full = r.full_set();
        let reps = self.representatives();
        let inv = |x: GroupElem| self.group.inv(x);
        let triple = |a: &ElemSet, b: &ElemSet, c: &ElemSet| r.product_set(&r.product_set(a, b), c);

        let r_idempotent = r.product_set(&full, &full) == full;
        let r_fully_idempotent = is_fully_idempotent(r)?;
        let strongly = reps.iter().all(|&x| {
            reps.iter()
                .all(|&y| r.product_set(&self.ideal(x), &self.ideal(y)) == self.ideal(self.group.op(x, y)))
        });
        let symmetric = r_idempotent
            && reps.iter().all(|&x| {
                let ix = self.ideal(x);
                triple(&ix, &self.ideal(inv(x)), &ix) == ix
            });
        let inverse_equal = reps.iter().all(|&x| self.ideal(x) == self.ideal(inv(x)));
        let mut nearly_eps = true;
        for &x in &reps {
            let (ix, iinv) = (self.ideal(x), self.ideal(inv(x)));
            nearly_eps &= is_s_unital_module(r, &r.product_set(&ix, &iinv), &ix, Side::Left)?
                && is_s_unital_module(r, &r.product_set(&iinv, &ix), &ix, Side::Right)?;
        }
        let ideally_symmetric = match &self.group {
            GradingGroup::Finite(_) => {
                let elems = self.group.finite_elements().expect("finite group");
                let families = self.graded_ideal_families()?;
                Some(families.iter().all(|k| {
                    elems.iter().all(|&x| {
                        let (ix, iinv, kx) = (self.ideal(x), self.ideal(inv(x)), &k[x as usize]);
                        triple(&ix, &iinv, kx) == *kx && triple(kx, &iinv, &ix) == *kx
                    })
                }))
            }
            GradingGroup::Integers => r_fully_idempotent.then_some(symmetric),
        };
        let c = FilterClassification {
            strongly,
            symmetric,
            inverse_equal,
            ideally_symmetric,
            nearly_eps,
            r_idempotent,
            r_fully_idempotent,
        };
        if r_fully_idempotent {
            assert_eq!(
                symmetric, inverse_equal,
                "fully idempotent coefficients but symmetric != inverse-equal: {c:?}"
            );
            if let Some(ideally) = ideally_symmetric {
                assert_eq!(
                    symmetric, ideally,
                    "fully idempotent coefficients but symmetric != ideally symmetric: {c:?}"
                );
            }
        }
        if let GradingGroup::Finite(_) = self.group {
            let built = self.build_subring(r.limits())?.classify_grading()?;
            assert_eq!(built.strongly, strongly, "strong grading disagrees: {c:?} vs {built:?}");
            assert_eq!(built.symmetrically, symmetric, "symmetry disagrees: {c:?} vs {built:?}");
            assert_eq!(
                Some(built.ideally_symmetrically),
                ideally_symmetric,
                "ideal symmetry disagrees: {c:?} vs {built:?}"
            );
            assert_eq!(
                built.nearly_epsilon_strongly, nearly_eps,
                "near epsilon-strength disagrees: {c:?} vs {built:?}"
            );
        }
        Ok(c)
    }
}

/// Filter file: `ring: <expr> group: <group>` followed by either
/// `I <x> = [gens]` lines (finite group; unlisted components are zero)
/// or a single `pattern subgroup <n> [else [gens]]` /
/// `pattern constant [gens]` line (group `Z`). Each `[gens]` names the
/// ideal of `R` generated by the listed elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterSpec {
    pub ring: RingExpr,
    pub group: GroupExpr,
    pub body: FilterBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterBody {
    Table(BTreeMap<GroupElem, Vec<usize>>),
    Subgroup { modulus: u64, other: Vec<usize> },
    Constant(Vec<usize>),
}

impl FilterSpec {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        p.expect_keyword("ring")?;
        p.expect_punct(':')?;
        let ring = RingExpr::parse_from(&mut p)?;
        p.expect_keyword("group")?;
        p.expect_punct(':')?;
        let group = GroupExpr::parse_from(&mut p)?;
        let body = if p.is_ident("pattern") {
            p.expect_keyword("pattern")?;
            let body = if p.is_ident("subgroup") {
                p.expect_keyword("subgroup")?;
                let modulus = p.uint()? as u64;
                let other = if p.is_ident("else") {
                    p.expect_keyword("else")?;
                    p.uint_list()?
                } else {
                    Vec::new()
                };
                FilterBody::Subgroup { modulus, other }
            } else {
                p.expect_keyword("constant")?;
                FilterBody::Constant(p.uint_list()?)
            };
            p.expect_end()?;
            body
        } else {
            let mut table = BTreeMap::new();
            while !p.at_end() {
                p.expect_keyword("I")?;
                let x = p.group_elem()?;
                p.expect_punct('=')?;
                let gens = p.uint_list()?;
                if table.insert(x, gens).is_some() {
                    return p.error(format!("component {x} given twice"));
                }
            }
            FilterBody::Table(table)
        };
        Ok(FilterSpec { ring, group, body })
    }

    pub fn build(&self, limits: Limits) -> Result<GFilter> {
        let ring = self.ring.build(limits)?;
        let group = self.group.build()?;
        let ideal = |gens: &[usize]| -> Result<ElemSet> { Ok(ring.generate_ideal(gens)?.into_members()) };
        let rule = match (&self.body, &group) {
            (FilterBody::Table(t), GradingGroup::Finite(g)) => {
                let mut table = vec![ring.zero_set(); g.order()];
                for (&x, gens) in t {
                    if !group.contains(x) {
                        return Err(Error::InvalidFilter(format!("{x} is not a group element")));
                    }
                    table[x as usize] = ideal(gens)?;
                }
                FilterRule::Table(table)
            }
            (FilterBody::Subgroup { modulus, other }, GradingGroup::Integers) => FilterRule::Subgroup {
                modulus: *modulus,
                other: ideal(other)?,
            },
            (FilterBody::Constant(c), GradingGroup::Integers) => FilterRule::Constant(ideal(c)?),
            _ => return Err(Error::InvalidFilter("filter body does not match the group".into())),
        };
        GFilter::new(ring, group, rule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::build_ring;
    use crate::group::FiniteGroup;

    fn ring(s: &str) -> FiniteRing {
        build_ring(s, Limits::default()).unwrap()
    }

    fn c(n: usize) -> GradingGroup {
        GradingGroup::Finite(FiniteGroup::cyclic(n).unwrap())
    }

    fn set(n: usize, xs: &[usize]) -> ElemSet {
        ElemSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn validation_examples() {
        let r = ring("gf(2)");
        assert!(GFilter::full(r.clone(), c(2)).unwrap().validate());
        // product(gf(2),gf(2)): (1,0) = 2, (0,1) = 1.
        let p = ring("product(gf(2),gf(2))");
        let left = set(4, &[0, 2]);
        let right = set(4, &[0, 1]);
        let good = GFilter::new(p.clone(), c(3), FilterRule::Table(vec![p.full_set(), left.clone(), left.clone()])).unwrap();
        assert!(good.validate());
        let bad = GFilter::new(p.clone(), c(3), FilterRule::Table(vec![p.full_set(), left, right])).unwrap();
        assert!(!bad.validate());
        assert!(matches!(
            GFilter::new(p.clone(), c(2), FilterRule::Table(vec![set(4, &[0, 2]), p.full_set()])),
            Err(Error::InvalidFilter(_))
        ));
    }

    #[test]
    fn built_orders() {
        let f = GFilter::full(ring("gf(2)"), c(2)).unwrap();
        let s = f.build_subring(Limits::default()).unwrap();
        assert_eq!(s.ring().order(), 4);
        let p = ring("product(gf(2),gf(2))");
        let left = set(4, &[0, 2]);
        let g = GFilter::new(p.clone(), c(3), FilterRule::Table(vec![p.full_set(), left.clone(), left])).unwrap();
        let s = g.build_subring(Limits::default()).unwrap();
        assert_eq!(s.ring().order(), 16);
        assert_eq!(s.component(1).count(), 2);
    }

    #[test]
    fn built_group_algebra_matches_constructor() {
        let f = GFilter::full(ring("gf(2)"), c(2)).unwrap();
        let s = f.build_subring(Limits::default()).unwrap();
        let direct = ring("grpalg(gf(2),cyclic(2))");
        // Both encode (c_e, c_g) with the identity coefficient most significant.
        assert_eq!(s.ring().mul_table(), direct.mul_table());
        assert_eq!(s.ring().add_table(), direct.add_table());
    }

    #[test]
    fn classification_examples() {
        let f = GFilter::full(ring("mat(gf(2),2)"), c(2)).unwrap();
        let k = f.classify().unwrap();
        assert!(k.strongly && k.symmetric && k.inverse_equal && k.nearly_eps && k.r_fully_idempotent);
        assert_eq!(k.ideally_symmetric, Some(true));

        let p = ring("product(gf(2),gf(2))");
        let left = set(4, &[0, 2]);
        let g = GFilter::new(p.clone(), c(3), FilterRule::Table(vec![p.full_set(), left.clone(), left])).unwrap();
        let k = g.classify().unwrap();
        assert!(k.symmetric && k.inverse_equal && k.r_fully_idempotent && !k.strongly);

        let z = GFilter::new(
            ring("gf(2)"),
            GradingGroup::Integers,
            FilterRule::Subgroup {
                modulus: 2,
                other: set(2, &[0]),
            },
        )
        .unwrap();
        assert!(z.validate());
        let k = z.classify().unwrap();
        assert!(k.symmetric && k.nearly_eps);
        assert_eq!(k.ideally_symmetric, Some(true));
    }

    #[test]
    fn s_unital_modules() {
        let z4 = ring("zmod(4)");
        let two = set(4, &[0, 2]);
        assert!(!is_s_unital_module(&z4, &two, &two, Side::Left).unwrap());
        assert!(is_s_unital_module(&z4, &z4.full_set(), &two, Side::Right).unwrap());
        let p = ring("product(gf(2),gf(2))");
        let left = set(4, &[0, 2]);
        assert!(is_s_unital_module(&p, &left, &left, Side::Left).unwrap());
        assert_eq!(
            is_s_unital_module(&p, &set(2, &[0]), &left, Side::Left).unwrap_err(),
            Error::MismatchedRings
        );
    }

    #[test]
    fn first_row_coefficients_give_symmetric_not_ideally_symmetric() {
        // R = {[[a, b], [0, 0]]} is idempotent, and K = {[[0, b], [0, 0]]}
        // satisfies R K = K but K R = 0.
        let r = ring("subring(tri(gf(2),2),[0,2,4,6])");
        let f = GFilter::full(r, c(2)).unwrap();
        let k = f.classify().unwrap();
        assert!(k.symmetric);
        assert_eq!(k.ideally_symmetric, Some(false));
        assert!(!k.nearly_eps);
    }

    #[test]
    fn spec_parsing() {
        let spec = FilterSpec::parse("ring: product(gf(2),gf(2)) group: cyclic(3) I 0 = [3] I 1 = [2] I 2 = [2]").unwrap();
        let f = spec.build(Limits::default()).unwrap();
        assert!(f.validate());
        assert_eq!(f.ideal(1), set(4, &[0, 2]));
        let z = FilterSpec::parse("ring: gf(2)\ngroup: Z\npattern subgroup 2\n").unwrap();
        let f = z.build(Limits::default()).unwrap();
        assert_eq!(f.ideal(3), set(2, &[0]));
        assert_eq!(f.ideal(-4), set(2, &[0, 1]));
        let k = FilterSpec::parse("ring: zmod(4) group: Z pattern constant [2]").unwrap();
        assert_eq!(k.build(Limits::default()).unwrap().ideal(5), set(4, &[0, 2]));
        assert!(FilterSpec::parse("ring: gf(2) group: Z pattern sometimes").is_err());
        let missing_e = FilterSpec::parse("ring: gf(2) group: cyclic(2) I 1 = [1]").unwrap();
        assert!(matches!(missing_e.build(Limits::default()), Err(Error::InvalidFilter(_))));
    }
}
