//! Ideals of the identity component `S_e` and their correspondence with
//! graded ideals of `S`.

use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::Ideal;
use crate::grading::GradedRing;

/// An ideal of the subring `S_e`, stored as a subset of the ambient ring.
#[derive(Clone)]
pub struct BaseIdeal<'g> {
    graded: &'g GradedRing,
    members: ElemSet,
}

impl<'g> BaseIdeal<'g> {
    pub fn new(graded: &'g GradedRing, members: ElemSet) -> Result<Self> {
        let ring = graded.ring();
        if members.universe() != ring.order() {
            return Err(Error::NotAnIdeal("bitmask has the wrong width".into()));
        }
        let base = graded.base_set();
        if !members.is_subset(&base) {
            return Err(Error::NotAnIdeal("not contained in the identity component".into()));
        }
        if !ring.is_additive_subgroup(&members) {
            return Err(Error::NotAnIdeal("not an additive subgroup".into()));
        }
        for a in members.iter() {
            for r in base.iter() {
                if !members.contains(ring.mul(r, a)) || !members.contains(ring.mul(a, r)) {
                    return Err(Error::NotAnIdeal(format!("not absorbing at ({r},{a}) within S_e")));
                }
            }
        }
        Ok(BaseIdeal { graded, members })
    }

    fn trusted(graded: &'g GradedRing, members: ElemSet) -> Self {
        BaseIdeal { graded, members }
    }

    pub fn zero(graded: &'g GradedRing) -> Self {
        Self::trusted(graded, graded.ring().zero_set())
    }

    pub fn whole(graded: &'g GradedRing) -> Self {
        Self::trusted(graded, graded.base_set())
    }

    /// Members as ambient ring elements.
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn is_proper(&self) -> bool {
        self.members != self.graded.base_set()
    }

    pub fn is_subset(&self, other: &BaseIdeal<'_>) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl PartialEq for BaseIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graded, other.graded) && self.members == other.members
    }
}

impl Eq for BaseIdeal<'_> {}

impl fmt::Display for BaseIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

impl fmt::Debug for BaseIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseIdeal{}", self.members)
    }
}

/// One line of a correspondence report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorrespondenceReport {
    pub checks: Vec<Check>,
}

impl CorrespondenceReport {
    fn push(&mut self, name: &'static str, passed: bool, details: String) {
        self.checks.push(Check { name, passed, details });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "check {}: {} ({})", c.name, verdict, c.details)?;
        }
        Ok(())
    }
}

fn first_failure<T, F>(items: &[T], ok: F) -> (bool, Option<String>)
where
    T: fmt::Display,
    F: Fn(&T) -> bool,
{
    match items.iter().find(|t| !ok(t)) {
        Some(t) => (false, Some(t.to_string())),
        None => (true, None),
    }
}

fn detail(count: usize, what: &str, failure: Option<String>) -> String {
    match failure {
        None => format!("{count} {what}"),
        Some(f) => format!("{count} {what}, fails at {f}"),
    }
}

impl GradedRing {
    fn owns(&self, j: &BaseIdeal<'_>) -> Result<()> {
        if std::ptr::eq(self, j.graded) {
            Ok(())
        } else {
            Err(Error::MismatchedRings)
        }
    }

    /// `{x_e : x ∈ X}`.
    pub fn e_component(&self, set: &ElemSet) -> ElemSet {
        let e = self.group().identity();
        ElemSet::from_indices(self.ring().order(), set.iter().map(|s| self.component_of(s, e)))
    }

    /// Every ideal of `S_e`, in canonical order of the ambient bitmask.
    pub fn base_ideals(&self) -> Result<Vec<BaseIdeal<'_>>> {
        let embed = self.base_embedding();
        let n = self.ring().order();
        let mut out: Vec<BaseIdeal<'_>> = self
            .base_ring()
            .all_ideals()?
            .iter()
            .map(|i| BaseIdeal::trusted(self, ElemSet::from_indices(n, i.members().iter().map(|k| embed[k]))))
            .collect();
        out.sort_by(|a, b| a.members.cmp(&b.members));
        Ok(out)
    }

    /// `⟨J⟩`, the ideal of `S` generated by `J`.
    pub fn generated_ideal(&self, j: &BaseIdeal<'_>) -> Result<Ideal<'_>> {
        self.owns(j)?;
        Ok(self.ring().generate_ideal(&j.members.to_vec())?)
    }

    /// `I_e` as an ideal of `S_e`.
    pub fn restrict_to_base(&self, ideal: &Ideal<'_>) -> Result<BaseIdeal<'_>> {
        if ideal.ring() != self.ring() {
            return Err(Error::MismatchedRings);
        }
        Ok(BaseIdeal::trusted(self, ideal.members().intersection(&self.base_set())))
    }

    /// `S_{x⁻¹} J S_x ⊆ J` for every `x`.
    pub fn is_g_invariant(&self, j: &BaseIdeal<'_>) -> Result<bool> {
        self.owns(j)?;
        let ring = self.ring();
        Ok(self.support().iter().all(|&x| {
            let sx = self.component(x);
            let sinv = self.component(self.group().inv(x));
            ring.product_set(&ring.product_set(&sinv, &j.members), &sx).is_subset(&j.members)
        }))
    }

    pub fn invariant_base_ideals(&self) -> Result<Vec<BaseIdeal<'_>>> {
        let mut out = Vec::new();
        for j in self.base_ideals()? {
            if self.is_g_invariant(&j)? {
                out.push(j);
            }
        }
        Ok(out)
    }

    /// `AB ⊆ Q` forces `A ⊆ Q` or `B ⊆ Q`, for `A, B` ranging over the
    /// G-invariant ideals of `S_e`.
    pub fn is_g_prime_ideal(&self, q: &BaseIdeal<'_>) -> Result<bool> {
        self.owns(q)?;
        if !q.is_proper() {
            return Err(Error::NotProper);
        }
        if !self.is_g_invariant(q)? {
            return Err(Error::NotInvariant);
        }
        let invariant = self.invariant_base_ideals()?;
        Ok(self.g_prime_among(q, &invariant))
    }

    fn g_prime_among(&self, q: &BaseIdeal<'_>, invariant: &[BaseIdeal<'_>]) -> bool {
        let escaping: Vec<&BaseIdeal<'_>> = invariant.iter().filter(|a| !a.is_subset(q)).collect();
        escaping.iter().all(|a| {
            escaping
                .iter()
                .all(|b| !self.ring().product_set(&a.members, &b.members).is_subset(&q.members))
        })
    }

    /// `I = ⟨I_e⟩`.
    pub fn is_identity_generated(&self, ideal: &Ideal<'_>) -> Result<bool> {
        if !self.is_graded_ideal(ideal)? {
            return Err(Error::NotGraded);
        }
        let ie = ideal.members().intersection(&self.base_set());
        Ok(self.ring().ideal_closure(ie.iter()) == *ideal.members())
    }

    /// The zero ideal of `S_e` is G-prime.
    pub fn is_g_prime_base(&self) -> Result<bool> {
        if self.base_ring().is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        self.is_g_prime_ideal(&BaseIdeal::zero(self))
    }

    /// Exhaustively checks the bijection between G-invariant ideals of `S_e`
    /// and identity-generated graded ideals of `S`.
    pub fn verify_bijection_identity_generated(&self) -> Result<CorrespondenceReport> {
        let ring = self.ring();
        let base = self.base_ideals()?;
        let invariant = self.invariant_base_ideals()?;
        let graded = self.all_graded_ideals()?;
        let mut identity_generated = Vec::new();
        for i in &graded {
            if self.is_identity_generated(i)? {
                identity_generated.push(i.clone());
            }
        }
        let gen = |j: &BaseIdeal<'_>| ring.ideal_closure(j.members.iter());
        let restrict = |i: &ElemSet| i.intersection(&self.base_set());
        let mut report = CorrespondenceReport::default();

        let (ok, fail) = first_failure(&base, |j| {
            let invariant_here = self.is_g_invariant(j).expect("own ideal");
            invariant_here == (self.e_component(&gen(j)) == j.members)
        });
        report.push("invariance-criterion", ok, detail(base.len(), "ideals of S_e", fail));

        let (ok, fail) = first_failure(&graded, |i| {
            self.is_g_invariant(&BaseIdeal::trusted(self, restrict(i.members()))).expect("own ideal")
        });
        report.push("restriction-invariant", ok, detail(graded.len(), "graded ideals", fail));

        let (ok, fail) = first_failure(&invariant, |j| {
            let g = gen(j);
            self.is_graded_set(&g) && ring.ideal_closure(restrict(&g).iter()) == g
        });
        report.push(
            "generated-is-identity-generated",
            ok,
            detail(invariant.len(), "G-invariant ideals", fail),
        );

        let (ok, fail) = first_failure(&invariant, |j| restrict(&gen(j)) == j.members);
        report.push("restriction-inverts-generation", ok, detail(invariant.len(), "G-invariant ideals", fail));

        let (ok, fail) = first_failure(&identity_generated, |i| {
            ring.ideal_closure(restrict(i.members()).iter()) == *i.members()
        });
        report.push(
            "generation-inverts-restriction",
            ok,
            detail(identity_generated.len(), "identity-generated ideals", fail),
        );

        let inclusion = pairs_preserve_inclusion(&invariant, |j| gen(j), |j| j.members.clone())
            && pairs_preserve_inclusion(&identity_generated, |i| restrict(i.members()), |i| i.members().clone());
        report.push("inclusion-preserved", inclusion, "both directions".to_string());

        report.push(
            "counts",
            invariant.len() == identity_generated.len(),
            format!(
                "invariant={} identity-generated={}",
                invariant.len(),
                identity_generated.len()
            ),
        );
        Ok(report)
    }

    /// Exhaustively checks the bijection between G-invariant ideals of `S_e`
    /// and all graded ideals of `S`, and its restriction to prime ideals.
    /// Requires an ideally symmetric grading.
    pub fn verify_bijection_ideally_symmetric(&self) -> Result<CorrespondenceReport> {
        if !self.is_ideally_symmetrically_graded()? {
            return Err(Error::Hypothesis("the grading is not ideally symmetric".into()));
        }
        let ring = self.ring();
        let full = ring.full_set();
        let invariant = self.invariant_base_ideals()?;
        let graded = self.all_graded_ideals()?;
        let gen = |j: &BaseIdeal<'_>| ring.ideal_closure(j.members.iter());
        let restrict = |i: &ElemSet| i.intersection(&self.base_set());
        let mut report = CorrespondenceReport::default();

        let (ok, fail) = first_failure(&graded, |i| {
            let ie = restrict(i.members());
            ring.product_set(&full, &ie) == *i.members()
                && ring.product_set(&ie, &full) == *i.members()
                && ring.ideal_closure(ie.iter()) == *i.members()
        });
        report.push("generated-by-identity-component", ok, detail(graded.len(), "graded ideals", fail));

        let (ok, fail) = first_failure(&invariant, |j| {
            let g = gen(j);
            self.is_graded_set(&g) && restrict(&g) == j.members
        });
        report.push("restriction-inverts-generation", ok, detail(invariant.len(), "G-invariant ideals", fail));

        let (ok, fail) = first_failure(&graded, |i| {
            let ie = BaseIdeal::trusted(self, restrict(i.members()));
            self.is_g_invariant(&ie).expect("own ideal") && gen(&ie) == *i.members()
        });
        report.push("generation-inverts-restriction", ok, detail(graded.len(), "graded ideals", fail));

        let inclusion = pairs_preserve_inclusion(&invariant, |j| gen(j), |j| j.members.clone())
            && pairs_preserve_inclusion(&graded, |i| restrict(i.members()), |i| i.members().clone());
        report.push("inclusion-preserved", inclusion, "both directions".to_string());

        report.push(
            "counts",
            invariant.len() == graded.len(),
            format!("invariant={} graded={}", invariant.len(), graded.len()),
        );

        let mut g_prime = 0;
        let mut graded_prime = 0;
        let mut failure = None;
        for j in invariant.iter().filter(|j| j.is_proper()) {
            let jp = self.g_prime_among(j, &invariant);
            let lifted = Ideal::new(ring, gen(j))?;
            let lp = self.is_graded_prime_ideal(&lifted)?;
            g_prime += usize::from(jp);
            graded_prime += usize::from(lp);
            if jp != lp && failure.is_none() {
                failure = Some(j.to_string());
            }
        }
        let mut reverse_failure = None;
        for i in graded.iter().filter(|i| i.is_proper()) {
            let ip = self.is_graded_prime_ideal(i)?;
            let ie = BaseIdeal::trusted(self, restrict(i.members()));
            if ip && !self.g_prime_among(&ie, &invariant) && reverse_failure.is_none() {
                reverse_failure = Some(i.to_string());
            }
        }
        let ok = failure.is_none() && reverse_failure.is_none() && g_prime == graded_prime;
        let mut details = format!("G-prime={g_prime} graded-prime={graded_prime}");
        if let Some(f) = failure.or(reverse_failure) {
            details.push_str(&format!(", fails at {f}"));
        }
        report.push("prime-correspondence", ok, details);
        Ok(report)
    }
}

/// `a ⊆ b ⇔ f(a) ⊆ f(b)` over all pairs.
fn pairs_preserve_inclusion<T, F, K>(items: &[T], image: F, key: K) -> bool
where
    F: Fn(&T) -> ElemSet,
    K: Fn(&T) -> ElemSet,
{
    let images: Vec<ElemSet> = items.iter().map(&image).collect();
    let keys: Vec<ElemSet> = items.iter().map(&key).collect();
    (0..items.len()).all(|a| {
        (0..items.len()).all(|b| keys[a].is_subset(&keys[b]) == images[a].is_subset(&images[b]))
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::finring::{build_ring, Limits};
    use crate::group::{FiniteGroup, GradingGroup};

    fn tri2() -> GradedRing {
        crate::grading::GradedSpec::parse("ring: tri(gf(2),2) group: Z component 0: [0,1,4,5] component 1: [0,2]")
            .unwrap()
            .build(Limits::default())
            .unwrap()
    }

    fn f2c2() -> GradedRing {
        let ring = build_ring("grpalg(gf(2),cyclic(2))", Limits::default()).unwrap();
        let g = GradingGroup::Finite(FiniteGroup::cyclic(2).unwrap());
        let comps = BTreeMap::from([
            (0, ElemSet::from_indices(4, [0, 2])),
            (1, ElemSet::from_indices(4, [0, 1])),
        ]);
        GradedRing::attach(ring, g, comps).unwrap()
    }

    #[test]
    fn e_component_projects() {
        let s = tri2();
        assert_eq!(s.e_component(&s.ring().zero_set()), s.ring().zero_set());
        assert_eq!(s.e_component(&s.ring().full_set()), s.base_set());
        // E11 + E12 = 6 projects to E11 = 4.
        assert_eq!(s.e_component(&ElemSet::from_indices(8, [6])).to_vec(), vec![4]);
    }

    #[test]
    fn invariance_in_triangular_matrices() {
        let s = tri2();
        // S_{-1} = 0, so every ideal of the diagonal is invariant.
        let invariant = s.invariant_base_ideals().unwrap();
        assert_eq!(invariant.len(), s.base_ideals().unwrap().len());
        assert_eq!(invariant.len(), 4);
        let e11 = BaseIdeal::new(&s, ElemSet::from_indices(8, [0, 4])).unwrap();
        assert!(s.is_g_invariant(&e11).unwrap());
        // Two nonzero invariant ideals F2 E11 and F2 E22 annihilate each other.
        assert!(!s.is_g_prime_base().unwrap());
    }

    #[test]
    fn base_ideal_validation() {
        let s = tri2();
        assert!(matches!(
            BaseIdeal::new(&s, ElemSet::from_indices(8, [0, 2])),
            Err(Error::NotAnIdeal(_))
        ));
        assert!(matches!(
            BaseIdeal::new(&s, ElemSet::from_indices(8, [0, 5])),
            Err(Error::NotAnIdeal(_))
        ));
        let whole = BaseIdeal::whole(&s);
        assert_eq!(s.is_g_prime_ideal(&whole).unwrap_err(), Error::NotProper);
    }

    #[test]
    fn group_algebra_base_is_g_prime() {
        let s = f2c2();
        assert_eq!(s.invariant_base_ideals().unwrap().len(), 2);
        assert!(s.is_g_prime_base().unwrap());
    }

    #[test]
    fn identity_generated_ideals() {
        let s = tri2();
        assert!(s.is_identity_generated(&Ideal::zero(s.ring())).unwrap());
        let e12 = s.ring().generate_ideal(&[2]).unwrap();
        assert!(!s.is_identity_generated(&e12).unwrap());
    }

    #[test]
    fn identity_generated_bijection_holds() {
        for s in [tri2(), f2c2()] {
            let report = s.verify_bijection_identity_generated().unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn ideally_symmetric_bijection() {
        let report = f2c2().verify_bijection_ideally_symmetric().unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(matches!(
            tri2().verify_bijection_ideally_symmetric(),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn trivial_grading_bijection_is_identity() {
        let ring = build_ring("product(gf(2),gf(3))", Limits::default()).unwrap();
        let s = GradedRing::trivial(ring, GradingGroup::Integers).unwrap();
        let report = s.verify_bijection_ideally_symmetric().unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.check("counts").unwrap().details, "invariant=4 graded=4");
    }

    #[test]
    fn report_format() {
        let report = f2c2().verify_bijection_identity_generated().unwrap();
        let text = report.to_string();
        assert!(text.lines().all(|l| l.starts_with("check ") && l.contains(": PASS (")));
    }
}
