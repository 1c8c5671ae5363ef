//! Constructors for principal ideals provably outside the image of phi.
//!
//! Each constructor checks its hypotheses, builds the witness element, and
//! attaches the oracle verdict: the recovered-subgroup rebuild must fail to
//! reproduce the ideal. Callers get the evidence, not just the claim.

use crate::element::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, Subgroup};
use crate::ring::RingDescriptor;
use crate::subspace::{self, IdealSubspace};

/// A witness element x whose principal ideal is not phi(N) for any N,
/// together with the oracle output backing the exclusion.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub element: GroupRingElement,
    pub ideal: IdealSubspace,
    /// Verdict of the phi-image oracle; `None` is the exclusion proof.
    pub phi_preimage: Option<Subgroup>,
    /// Present for the cube construction: the strict chain it certifies.
    pub chain: Option<ChainWitness>,
}

/// Dimensions of the strict chain 0 < x RG < phi(<g^2>).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub inner_dimension: usize,
    pub outer_dimension: usize,
}

impl Counterexample {
    pub fn is_excluded(&self) -> bool {
        self.phi_preimage.is_none()
    }
}

/// First group element of order exactly `target`, obtained by powering the
/// first element whose order is a multiple of it.
fn element_of_order(group: &FiniteAbelianGroup, target: u64) -> Option<usize> {
    (1..group.len()).find_map(|h| {
        let order = group.order_of(h);
        (order % target == 0).then(|| group.pow(h, order / target))
    })
}

fn attach_oracle(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    element: GroupRingElement,
    chain: Option<ChainWitness>,
) -> Result<Counterexample> {
    let ideal = subspace::ideal_generated(ring, group, &[element.clone()])?;
    let phi_preimage = subspace::in_phi_image(&ideal)?;
    Ok(Counterexample { element, ideal, phi_preimage, chain })
}

/// The square witness (g-1)^2 for an order-p element g over F_p, p odd.
///
/// If (g-1)^2 RG were phi(K), mapping the chain phi(<g>) > phi(K) through
/// psi forces K = 1, i.e. (g-1)^2 = 0; but g^2 - 2g + 1 has three distinct
/// support monomials when p > 2.
pub fn square_counterexample(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Counterexample> {
    let p = ring.modulus();
    if !ring.is_field() || p == 2 {
        return Err(Error::NotApplicable("requires an odd prime modulus"));
    }
    if group.is_trivial() {
        return Err(Error::NotApplicable("requires a nontrivial group"));
    }
    if group.support_primes() != [p] {
        return Err(Error::NotApplicable(
            "requires a p-group for the coefficient characteristic p",
        ));
    }
    let g = element_of_order(group, p).expect("a nontrivial p-group has order-p elements");
    let one = GroupRingElement::one(ring, group);
    let x = GroupRingElement::monomial(ring, group, g, 1).sub(&one)?.pow(2);
    attach_oracle(ring, group, x, None)
}

/// The cube witness (g-1)^3 for an order-4 element g over F_2.
///
/// In characteristic 2, (g-1)^2 = g^2 - 1 generates phi(<g^2>), and the cube
/// sits strictly between 0 and that ideal; any phi(K) in between would give
/// a subgroup strictly between 1 and the order-2 group <g^2>.
pub fn cube_counterexample(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Counterexample> {
    if ring.modulus() != 2 {
        return Err(Error::NotApplicable("requires characteristic two"));
    }
    if group.support_primes() != [2] {
        return Err(Error::NotApplicable("requires a 2-group"));
    }
    let Some(g) = element_of_order(group, 4) else {
        return Err(Error::NotApplicable("requires an element of order four"));
    };
    let one = GroupRingElement::one(ring, group);
    let g_minus_one = GroupRingElement::monomial(ring, group, g, 1).sub(&one)?;
    let x = g_minus_one.pow(3);

    let g_squared = group.pow(g, 2);
    let halfway = group.subgroup_generated(&[group.exponents_of(g_squared)])?;
    let outer = subspace::phi(ring, group, &halfway)?;
    let witness = attach_oracle(ring, group, x, None)?;
    // The chain is forced by the construction; breaking it means the ideal
    // arithmetic itself is wrong.
    assert!(witness.ideal.dimension() > 0, "cube of an order-4 element is nonzero");
    assert!(
        outer.contains_subspace(&witness.ideal)
            && outer.dimension() > witness.ideal.dimension(),
        "cube ideal must sit strictly inside phi(<g^2>)"
    );
    Ok(Counterexample {
        chain: Some(ChainWitness {
            inner_dimension: witness.ideal.dimension(),
            outer_dimension: outer.dimension(),
        }),
        ..witness
    })
}

/// The four-term witness (1+f1)(1+f2) in an elementary abelian 2-group of
/// order at least 4 over F_2.
///
/// Both factors square to zero, so the product annihilates any 1+g it were
/// to generate; with ann(1+g) = (1+g)RG that forces x into (1+g)^2 RG = 0.
pub fn four_term_counterexample(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Counterexample> {
    if ring.modulus() != 2 {
        return Err(Error::NotApplicable("requires characteristic two"));
    }
    if group.is_trivial() || group.exponent() != 2 {
        return Err(Error::NotApplicable("requires an elementary abelian 2-group"));
    }
    if group.size() <= 2 {
        return Err(Error::NotApplicable("requires order greater than two"));
    }
    // Exponent 2 and order > 2 force at least two factors.
    let factors = group.orders().len();
    let mut e1 = vec![0u64; factors];
    e1[0] = 1;
    let mut e2 = vec![0u64; factors];
    e2[1] = 1;
    let f1 = group.index_of(&e1)?;
    let f2 = group.index_of(&e2)?;
    let mut coeffs = vec![0u64; group.len()];
    coeffs[group.identity()] = 1;
    coeffs[f1] = 1;
    coeffs[f2] = 1;
    coeffs[group.op(f1, f2)] = 1;
    let x = crate::element::make_element(ring, group, &coeffs)?;
    attach_oracle(ring, group, x, None)
}

/// Whether the augmentation ideal of F_p G is nil, making it the unique
/// prime of RG: it suffices that every factor generator g has g - 1
/// nilpotent, since the g - 1 generate I(G) as an ideal.
pub fn unique_prime_check(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<bool> {
    if !ring.is_field() {
        return Err(Error::NonPrimeModulus(ring.modulus()));
    }
    let one = GroupRingElement::one(ring, group);
    for f in 0..group.orders().len() {
        let mut exponents = vec![0u64; group.orders().len()];
        exponents[f] = 1;
        let g = group.index_of(&exponents)?;
        let x = GroupRingElement::monomial(ring, group, g, 1).sub(&one)?;
        // Nilpotency indices are bounded by |G|: the chain x^k RG stops
        // strictly descending only at zero when x is nilpotent.
        if !x.pow(group.size()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::ring::make_ring;

    /// Independent exclusion oracle: rebuild phi(N) for every subgroup N and
    /// compare echelon bases directly.
    fn excluded_by_sweep(witness: &Counterexample) -> bool {
        let group = witness.ideal.group().clone();
        let ring = witness.ideal.ring().clone();
        group
            .all_subgroups()
            .unwrap()
            .iter()
            .all(|n| subspace::phi(&ring, &group, n).unwrap() != witness.ideal)
    }

    #[test]
    fn square_witness_cyclic_three() {
        let ring = make_ring(3).unwrap();
        let group = make_group(&[3]).unwrap();
        let witness = square_counterexample(&ring, &group).unwrap();
        // (g-1)^2 = g^2 - 2g + 1 = 1 + g + g^2 mod 3.
        assert_eq!(witness.element.coeffs(), &[1, 1, 1]);
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
        assert_eq!(witness.ideal.dimension(), 1);
    }

    #[test]
    fn square_witness_cyclic_five() {
        let ring = make_ring(5).unwrap();
        let group = make_group(&[5]).unwrap();
        let witness = square_counterexample(&ring, &group).unwrap();
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
    }

    #[test]
    fn square_witness_cyclic_nine() {
        let ring = make_ring(3).unwrap();
        let group = make_group(&[9]).unwrap();
        let witness = square_counterexample(&ring, &group).unwrap();
        // g is the order-3 power of the generator, so the support lives on
        // the subgroup {0, 3, 6}.
        assert!(witness.element.support().iter().all(|i| i % 3 == 0));
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
    }

    #[test]
    fn square_hypotheses_enforced() {
        let odd = make_ring(3).unwrap();
        assert!(matches!(
            square_counterexample(&make_ring(2).unwrap(), &make_group(&[2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            square_counterexample(&odd, &make_group(&[2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            square_counterexample(&odd, &make_group(&[]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            square_counterexample(&make_ring(6).unwrap(), &make_group(&[3]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn cube_witness_cyclic_four() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[4]).unwrap();
        let witness = cube_counterexample(&ring, &group).unwrap();
        assert_eq!(witness.element.coeffs(), &[1, 1, 1, 1]);
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
        let chain = witness.chain.unwrap();
        assert_eq!(chain.inner_dimension, 1);
        assert_eq!(chain.outer_dimension, 2);
        // The middle link is (g-1)^2 RG = phi(<g^2>) exactly.
        let one = GroupRingElement::one(&ring, &group);
        let square = GroupRingElement::monomial(&ring, &group, 1, 1)
            .sub(&one)
            .unwrap()
            .pow(2);
        let middle =
            subspace::ideal_generated(&ring, &group, &[square]).unwrap();
        let halfway = group.subgroup_generated(&[vec![2]]).unwrap();
        assert_eq!(middle, subspace::phi(&ring, &group, &halfway).unwrap());
    }

    #[test]
    fn cube_witness_larger_groups() {
        let ring = make_ring(2).unwrap();
        for orders in [vec![8u64], vec![2, 4]] {
            let group = make_group(&orders).unwrap();
            let witness = cube_counterexample(&ring, &group).unwrap();
            assert!(witness.is_excluded());
            assert!(excluded_by_sweep(&witness));
            let chain = witness.chain.unwrap();
            assert!(chain.inner_dimension > 0);
            assert!(chain.inner_dimension < chain.outer_dimension);
        }
    }

    #[test]
    fn cube_hypotheses_enforced() {
        let ring = make_ring(2).unwrap();
        assert!(matches!(
            cube_counterexample(&ring, &make_group(&[2, 2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            cube_counterexample(&ring, &make_group(&[2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            cube_counterexample(&make_ring(3).unwrap(), &make_group(&[4]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            cube_counterexample(&ring, &make_group(&[6]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn four_term_witness_klein() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[2, 2]).unwrap();
        let witness = four_term_counterexample(&ring, &group).unwrap();
        assert_eq!(witness.element.coeffs(), &[1, 1, 1, 1]);
        assert_eq!(witness.ideal.dimension(), 1);
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
    }

    #[test]
    fn four_term_witness_rank_three() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[2, 2, 2]).unwrap();
        let witness = four_term_counterexample(&ring, &group).unwrap();
        assert!(witness.is_excluded());
        assert!(excluded_by_sweep(&witness));
        // x = (1+f1)(1+f2) squares to zero in characteristic 2.
        assert!(witness.element.mul(&witness.element).unwrap().is_zero());
    }

    #[test]
    fn four_term_hypotheses_enforced() {
        let ring = make_ring(2).unwrap();
        assert!(matches!(
            four_term_counterexample(&ring, &make_group(&[2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            four_term_counterexample(&ring, &make_group(&[4]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            four_term_counterexample(&make_ring(3).unwrap(), &make_group(&[2, 2]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn unique_prime_on_p_groups() {
        for (p, orders, expected) in [
            (2u64, vec![4u64], true),
            (2, vec![2, 2], true),
            (3, vec![3], true),
            (3, vec![9], true),
            (5, vec![5], true),
            (3, vec![2], false),
            (2, vec![3], false),
            (5, vec![2, 2], false),
        ] {
            let ring = make_ring(p).unwrap();
            let group = make_group(&orders).unwrap();
            assert_eq!(
                unique_prime_check(&ring, &group).unwrap(),
                expected,
                "modulus {p} group {orders:?}"
            );
        }
    }

    #[test]
    fn unique_prime_generator_check_matches_full_scan() {
        // Oracle: test nilpotency of g - 1 for every g, not just generators.
        for (p, orders) in [
            (2u64, vec![4u64]),
            (2, vec![6]),
            (3, vec![3, 3]),
            (3, vec![4]),
            (5, vec![5]),
            (5, vec![10]),
        ] {
            let ring = make_ring(p).unwrap();
            let group = make_group(&orders).unwrap();
            let one = GroupRingElement::one(&ring, &group);
            let all = (0..group.len()).all(|g| {
                GroupRingElement::monomial(&ring, &group, g, 1)
                    .sub(&one)
                    .unwrap()
                    .pow(group.size())
                    .is_zero()
            });
            assert_eq!(unique_prime_check(&ring, &group).unwrap(), all);
        }
    }

    #[test]
    fn unique_prime_requires_prime_field() {
        assert!(matches!(
            unique_prime_check(&make_ring(4).unwrap(), &make_group(&[2]).unwrap()),
            Err(Error::NonPrimeModulus(4))
        ));
    }
}
