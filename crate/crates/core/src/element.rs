//! Elements of the group ring RG: coefficient vectors over Z/n indexed by
//! group element, with convolution as the product.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{make_group, FiniteAbelianGroup};
use crate::ring::{make_ring, RingDescriptor};

/// An element sum_g c_g * g of the group ring. `coeffs[i]` is the coefficient
/// of the group element with index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ElementData", into = "ElementData")]
pub struct GroupRingElement {
    ring: RingDescriptor,
    group: FiniteAbelianGroup,
    coeffs: Vec<u64>,
}

/// Wire form of a group-ring element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementData {
    pub modulus: u64,
    pub group: Vec<u64>,
    pub coeffs: Vec<u64>,
}

impl TryFrom<ElementData> for GroupRingElement {
    type Error = Error;

    fn try_from(data: ElementData) -> Result<Self> {
        let ring = make_ring(data.modulus)?;
        let group = make_group(&data.group)?;
        make_element(&ring, &group, &data.coeffs)
    }
}

impl From<GroupRingElement> for ElementData {
    fn from(x: GroupRingElement) -> Self {
        ElementData {
            modulus: x.ring.modulus(),
            group: x.group.orders().to_vec(),
            coeffs: x.coeffs,
        }
    }
}

/// Builds an element from coefficients listed in element-index order,
/// normalizing each into 0..n-1.
pub fn make_element(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    coeffs: &[u64],
) -> Result<GroupRingElement> {
    if coeffs.len() != group.len() {
        return Err(Error::CoefficientLength { expected: group.len(), found: coeffs.len() });
    }
    Ok(GroupRingElement {
        ring: ring.clone(),
        group: group.clone(),
        coeffs: coeffs.iter().map(|&c| ring.normalize(c)).collect(),
    })
}

/// Builds an element from signed coefficients.
pub fn make_element_signed(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    coeffs: &[i64],
) -> Result<GroupRingElement> {
    if coeffs.len() != group.len() {
        return Err(Error::CoefficientLength { expected: group.len(), found: coeffs.len() });
    }
    Ok(GroupRingElement {
        ring: ring.clone(),
        group: group.clone(),
        coeffs: coeffs.iter().map(|&c| ring.normalize_signed(c)).collect(),
    })
}

impl GroupRingElement {
    pub fn zero(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> Self {
        GroupRingElement {
            ring: ring.clone(),
            group: group.clone(),
            coeffs: vec![0; group.len()],
        }
    }

    pub fn one(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> Self {
        Self::monomial(ring, group, 0, 1)
    }

    /// The element c * g for a group element index g.
    pub fn monomial(
        ring: &RingDescriptor,
        group: &FiniteAbelianGroup,
        g: usize,
        c: u64,
    ) -> Self {
        let mut coeffs = vec![0; group.len()];
        coeffs[g] = ring.normalize(c);
        GroupRingElement { ring: ring.clone(), group: group.clone(), coeffs }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> u64 {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Indices of group elements with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.group != other.group {
            return Err(Error::IncompatibleOperands);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.ring.add(a, b))
            .collect();
        Ok(GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.ring.sub(a, b))
            .collect();
        Ok(GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.neg(a)).collect();
        GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs }
    }

    pub fn scalar_mul(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect();
        GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut coeffs = vec![0u64; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = self.group.op(i, j);
                coeffs[k] = self.ring.add(coeffs[k], self.ring.mul(a, b));
            }
        }
        Ok(GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(&self.ring, &self.group);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ambient ring");
            }
            base = base.mul(&base).expect("same ambient ring");
            e >>= 1;
        }
        acc
    }

    /// Translate by a group element: g * self. A coordinate permutation.
    pub fn translate(&self, g: usize) -> Self {
        let mut coeffs = vec![0u64; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[self.group.op(g, i)] = a;
        }
        GroupRingElement { ring: self.ring.clone(), group: self.group.clone(), coeffs }
    }

    /// The augmentation: sum of all coefficients, a ring homomorphism to R.
    pub fn augmentation(&self) -> u64 {
        self.coeffs.iter().fold(0, |acc, &c| self.ring.add(acc, c))
    }
}

/// Convolution on raw coefficient slices with a precomputed multiplication
/// table (entry i*n+j = index of g_i * g_j). The workhorse of brute-force
/// scans, which cannot afford per-element allocation of ring/group handles.
pub fn convolve_into(
    ring: &RingDescriptor,
    table: &[u32],
    a: &[u64],
    b: &[u64],
    out: &mut [u64],
) {
    let n = a.len();
    out.fill(0);
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        let row = &table[i * n..(i + 1) * n];
        for j in 0..n {
            if b[j] == 0 {
                continue;
            }
            let k = row[j] as usize;
            out[k] = ring.add(out[k], ring.mul(a[i], b[j]));
        }
    }
}

/// Encodes a coefficient vector as a base-n integer, digit i = coeffs[i].
pub fn encode_coeffs(modulus: u64, coeffs: &[u64]) -> u64 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * modulus + c)
}

/// Inverse of `encode_coeffs`.
pub fn decode_coeffs(modulus: u64, len: usize, mut code: u64) -> Vec<u64> {
    let mut coeffs = Vec::with_capacity(len);
    for _ in 0..len {
        coeffs.push(code % modulus);
        code /= modulus;
    }
    coeffs
}
