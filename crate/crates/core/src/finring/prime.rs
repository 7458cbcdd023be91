//! Element-level and lattice-level primeness tests.

use super::{FiniteRing, Ideal};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

fn proper_ideal_of<'r>(ring: &'r FiniteRing, p: &Ideal<'_>) -> Result<()> {
    if p.ring() != ring {
        return Err(Error::MismatchedRings);
    }
    if !p.is_proper() {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// Complement of `P` is an m-system: for all `a, b ∉ P`, either `ab ∉ P`
/// or some `s` has `asb ∉ P`.
pub fn prime_by_m_system(ring: &FiniteRing, p: &Ideal<'_>) -> Result<bool> {
    proper_ideal_of(ring, p)?;
    let outside: Vec<usize> = p.members().complement().iter().collect();
    Ok(outside
        .iter()
        .all(|&a| outside.iter().all(|&b| escapes(ring, p.members(), a, b, ring.elements()))))
}

/// `ab ∉ P` or `asb ∉ P` for some `s` drawn from `candidates`.
pub(crate) fn escapes<I: IntoIterator<Item = usize>>(
    ring: &FiniteRing,
    p: &ElemSet,
    a: usize,
    b: usize,
    candidates: I,
) -> bool {
    if !p.contains(ring.mul(a, b)) {
        return true;
    }
    candidates
        .into_iter()
        .any(|s| !p.contains(ring.mul(ring.mul(a, s), b)))
}

/// For all `a, b`: if `aSb ⊆ P` and `ab ∈ P` then `a ∈ P` or `b ∈ P`.
pub fn prime_by_element_criterion(ring: &FiniteRing, p: &Ideal<'_>) -> Result<bool> {
    proper_ideal_of(ring, p)?;
    let members = p.members();
    for a in ring.elements() {
        for b in ring.elements() {
            let absorbed = members.contains(ring.mul(a, b))
                && ring
                    .elements()
                    .all(|s| members.contains(ring.mul(ring.mul(a, s), b)));
            if absorbed && !members.contains(a) && !members.contains(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Definition of primeness: `AB ⊆ P ⇒ A ⊆ P or B ⊆ P` over all ideals.
pub fn prime_by_ideal_pairs(ring: &FiniteRing, p: &Ideal<'_>) -> Result<bool> {
    proper_ideal_of(ring, p)?;
    let lattice = ring.lattice()?;
    let members = p.members();
    let escaping: Vec<&ElemSet> = lattice.iter().filter(|a| !a.is_subset(members)).collect();
    for a in &escaping {
        for b in &escaping {
            if ring.product_set(a, b).is_subset(members) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the proper ideal `P` is prime, decided by the m-system test.
/// [`prime_by_element_criterion`] and [`prime_by_ideal_pairs`] give the
/// same verdict and are exposed for cross-checking.
pub fn is_prime_ideal(ring: &FiniteRing, p: &Ideal<'_>) -> Result<bool> {
    prime_by_m_system(ring, p)
}

pub fn is_prime_ring(ring: &FiniteRing) -> Result<bool> {
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    is_prime_ideal(ring, &Ideal::zero(ring))
}

/// Every ideal satisfies `I² = I`.
///
/// The pairwise criterion `IJ = I ∩ J` is evaluated as well and the two
/// verdicts are asserted to agree.
pub fn is_fully_idempotent(ring: &FiniteRing) -> Result<bool> {
    let lattice = ring.lattice()?;
    let squares = lattice.iter().all(|i| &ring.product_set(i, i) == i);
    let pairwise = lattice
        .iter()
        .all(|i| lattice.iter().all(|j| ring.product_set(i, j) == i.intersection(j)));
    assert_eq!(
        squares, pairwise,
        "I² = I and IJ = I ∩ J disagree on a ring of order {}",
        ring.order()
    );
    Ok(squares)
}

pub fn center(ring: &FiniteRing) -> ElemSet {
    ElemSet::from_indices(
        ring.order(),
        ring.elements()
            .filter(|&z| ring.elements().all(|r| ring.mul(z, r) == ring.mul(r, z))),
    )
}

/// Von Neumann regularity of the subring on `set`: every `a` has some `x`
/// in `set` with `axa = a`.
pub fn is_von_neumann_regular(ring: &FiniteRing, set: &ElemSet) -> bool {
    set.iter().all(|a| {
        set.iter()
            .any(|x| ring.mul(ring.mul(a, x), a) == a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, Limits};

    fn ring(expr: &str) -> FiniteRing {
        build_ring(expr, Limits::default()).unwrap()
    }

    #[test]
    fn prime_ideal_examples() {
        let f2 = ring("gf(2)");
        assert!(is_prime_ideal(&f2, &Ideal::zero(&f2)).unwrap());
        let p = ring("product(gf(2),gf(2))");
        assert!(!is_prime_ideal(&p, &Ideal::zero(&p)).unwrap());
        let z4 = ring("zmod(4)");
        let two = z4.generate_ideal(&[2]).unwrap();
        assert!(is_prime_ideal(&z4, &two).unwrap());
        assert!(prime_by_ideal_pairs(&z4, &two).unwrap());
        assert!(prime_by_element_criterion(&z4, &two).unwrap());
    }

    #[test]
    fn whole_ring_is_rejected() {
        let z4 = ring("zmod(4)");
        assert_eq!(is_prime_ideal(&z4, &Ideal::whole(&z4)).unwrap_err(), Error::NotProper);
        assert_eq!(
            prime_by_ideal_pairs(&z4, &Ideal::whole(&z4)).unwrap_err(),
            Error::NotProper
        );
    }

    #[test]
    fn prime_ring_examples() {
        assert!(is_prime_ring(&ring("mat(gf(2),2)")).unwrap());
        assert!(!is_prime_ring(&ring("product(gf(2),gf(2))")).unwrap());
        assert!(!is_prime_ring(&ring("tri(gf(2),2)")).unwrap());
        assert_eq!(is_prime_ring(&ring("zmod(1)")).unwrap_err(), Error::ZeroRing);
    }

    #[test]
    fn nonunital_even_residues_not_prime() {
        // 2Z/8Z: 4·4 = 0 and 4·s·4 = 0 for every s.
        let r = ring("subring(zmod(8),[0,2,4,6])");
        assert!(!is_prime_ring(&r).unwrap());
    }

    #[test]
    fn full_idempotence() {
        assert!(is_fully_idempotent(&ring("product(gf(2),gf(2))")).unwrap());
        assert!(!is_fully_idempotent(&ring("zmod(4)")).unwrap());
        assert!(is_fully_idempotent(&ring("mat(gf(3),2)")).unwrap());
    }

    #[test]
    fn centers_and_regularity() {
        let m = ring("mat(gf(2),2)");
        let unit = m.unit().unwrap();
        assert_eq!(center(&m).to_vec(), vec![0, unit]);
        let f5 = ring("gf(5)");
        assert!(is_von_neumann_regular(&f5, &f5.full_set()));
        let z4 = ring("zmod(4)");
        assert!(!is_von_neumann_regular(&z4, &z4.full_set()));
    }
}
