use super::GradedRing;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::prime::escapes;
use crate::finring::Ideal;

impl GradedRing {
    fn proper_graded(&self, p: &Ideal<'_>) -> Result<()> {
        if p.ring() != self.ring() {
            return Err(Error::MismatchedRings);
        }
        if !p.is_proper() {
            return Err(Error::NotProper);
        }
        if !self.is_graded_set(p.members()) {
            return Err(Error::NotGraded);
        }
        Ok(())
    }

    /// For all homogeneous `a, b ∈ T`: `ab ∈ T`, or `asb ∈ T` for some
    /// homogeneous `s`.
    pub fn is_graded_m_system(&self, t: &ElemSet) -> bool {
        let h = self.homogeneous_elements();
        let hs: Vec<usize> = h.iter().collect();
        let members: Vec<usize> = t.intersection(&h).iter().collect();
        // escapes() tests membership in a "forbidden" set, so pass the complement.
        let outside = t.complement();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| escapes(self.ring(), &outside, a, b, hs.iter().copied())))
    }

    /// Graded primeness through the ideal-pair definition over graded ideals.
    pub fn graded_prime_by_ideal_pairs(&self, p: &Ideal<'_>) -> Result<bool> {
        self.proper_graded(p)?;
        let graded = self.all_graded_ideals()?;
        let escaping: Vec<&Ideal<'_>> = graded.iter().filter(|a| !a.is_subset(p)).collect();
        for a in &escaping {
            for b in &escaping {
                if self.ring().product_set(a.members(), b.members()).is_subset(p.members()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For homogeneous `a, b`: `aSb ⊆ P` and `ab ∈ P` force `a ∈ P` or `b ∈ P`.
    pub fn graded_prime_by_element_criterion(&self, p: &Ideal<'_>) -> Result<bool> {
        self.proper_graded(p)?;
        let ring = self.ring();
        let hs: Vec<usize> = self.homogeneous_elements().iter().collect();
        for &a in &hs {
            for &b in &hs {
                let absorbed = p.contains(ring.mul(a, b))
                    && ring.elements().all(|s| p.contains(ring.mul(ring.mul(a, s), b)));
                if absorbed && !p.contains(a) && !p.contains(b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn graded_prime_by_m_system(&self, p: &Ideal<'_>) -> Result<bool> {
        self.proper_graded(p)?;
        Ok(self.is_graded_m_system(&p.members().complement()))
    }

    /// Evaluates all three graded-primeness criteria, asserts that they
    /// agree and returns the verdict.
    pub fn is_graded_prime_ideal(&self, p: &Ideal<'_>) -> Result<bool> {
        let pairs = self.graded_prime_by_ideal_pairs(p)?;
        let element = self.graded_prime_by_element_criterion(p)?;
        let msystem = self.graded_prime_by_m_system(p)?;
        assert!(
            pairs == element && element == msystem,
            "graded primeness criteria disagree on {p}: pairs={pairs} element={element} m-system={msystem}"
        );
        Ok(pairs)
    }

    pub fn is_graded_prime_ring(&self) -> Result<bool> {
        if self.ring().is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        self.is_graded_prime_ideal(&Ideal::zero(self.ring()))
    }
}
