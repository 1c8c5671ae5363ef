//! Quotients RG/J as explicit finite-dimensional algebras. The coordinates
//! of the quotient are the non-pivot columns of the ideal's echelon basis,
//! and multiplication comes from reducing monomial products.

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, Subgroup};
use crate::ring::RingDescriptor;
use crate::subspace::{phi, IdealSubspace};

/// Multiplication table of a finite-dimensional algebra over Z/n:
/// e_a * e_b = sum_k table[(a*dim + b)*dim + k] e_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    modulus: u64,
    dim: usize,
    table: Vec<u64>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, a: usize, b: usize, k: usize) -> u64 {
        self.table[(a * self.dim + b) * self.dim + k]
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|a| (0..d).all(|b| (0..d).all(|k| self.get(a, b, k) == self.get(b, a, k))))
    }

    /// Brute-force associativity on basis triples:
    /// sum_m c(a,b,m) c(m,c,k) = sum_m c(b,c,m) c(a,m,k).
    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        let n = self.modulus;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for k in 0..d {
                        let mut left = 0u64;
                        let mut right = 0u64;
                        for m in 0..d {
                            left = (left + self.get(a, b, m) * self.get(m, c, k)) % n;
                            right = (right + self.get(b, c, m) * self.get(a, m, k)) % n;
                        }
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Structure constants of a group algebra given its multiplication table
/// (entry a*dim+b = index of the product): every product is a basis monomial.
pub fn monomial_structure(modulus: u64, dim: usize, mult_table: &[u32]) -> StructureConstants {
    let mut table = vec![0u64; dim * dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let k = mult_table[a * dim + b] as usize;
            table[(a * dim + b) * dim + k] = 1 % modulus;
        }
    }
    StructureConstants { modulus, dim, table }
}

/// Structure constants of F_p G / J in the non-pivot coordinate basis.
pub fn quotient_structure(ideal: &IdealSubspace) -> Result<StructureConstants> {
    if ideal.is_full() {
        return Err(Error::NotAProperIdeal);
    }
    let group = ideal.group();
    let ring = ideal.ring();
    let n = group.len();
    let free: Vec<usize> = {
        let mut is_pivot = vec![false; n];
        for &c in ideal.pivots() {
            is_pivot[c] = true;
        }
        (0..n).filter(|&c| !is_pivot[c]).collect()
    };
    let dim = free.len();
    let mut table = vec![0u64; dim * dim * dim];
    for (a, &ga) in free.iter().enumerate() {
        for (b, &gb) in free.iter().enumerate() {
            let mut v = vec![0u64; n];
            v[group.op(ga, gb)] = 1;
            ideal.reduce(&mut v);
            for (k, &gk) in free.iter().enumerate() {
                table[(a * dim + b) * dim + k] = v[gk];
            }
        }
    }
    Ok(StructureConstants { modulus: ring.modulus(), dim, table })
}

/// Verifies F_p G / phi(N) is isomorphic to F_p (G/N) as an algebra, by the
/// explicit coordinate relabeling that sends the class of a non-pivot basis
/// monomial to its coset.
pub fn verify_quotient_iso(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    subgroup: &Subgroup,
) -> Result<bool> {
    let ideal = phi(ring, group, subgroup)?;
    let quotient_algebra = quotient_structure(&ideal)?;
    let cosets = group.quotient(subgroup);

    let n = group.len();
    let free: Vec<usize> = {
        let mut is_pivot = vec![false; n];
        for &c in ideal.pivots() {
            is_pivot[c] = true;
        }
        (0..n).filter(|&c| !is_pivot[c]).collect()
    };
    if free.len() != cosets.size() {
        return Ok(false);
    }

    // The relabeling must pair quotient coordinates with cosets bijectively.
    let relabel: Vec<usize> = free.iter().map(|&g| cosets.coset_of(g)).collect();
    let mut seen = vec![false; cosets.size()];
    for &c in &relabel {
        if seen[c] {
            return Ok(false);
        }
        seen[c] = true;
    }

    let dim = quotient_algebra.dim();
    let one = 1 % ring.modulus();
    for a in 0..dim {
        for b in 0..dim {
            let product_coset = cosets.op(group, relabel[a], relabel[b]);
            for k in 0..dim {
                let expected = if relabel[k] == product_coset { one } else { 0 };
                if quotient_algebra.get(a, b, k) != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
