//! Exhaustive census of the ideal lattice of F_p G against the
//! subgroup-induced family.
//!
//! Ideals are enumerated as reduced row-echelon forms: pick a pivot-column
//! set, sweep the free entries, keep the subspaces closed under translation
//! by the group generators. The sweep is gated by the subspace count of the
//! ambient space, which explodes quickly; past the gate the census degrades
//! to the phi image alone.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::group::FiniteAbelianGroup;
use crate::ring::RingDescriptor;
use crate::subspace::{self, IdealSubspace};

/// Largest subspace count for which the exhaustive ideal sweep runs.
pub const SUBSPACE_LIMIT: u128 = 1_000_000;

/// Number of k-dimensional subspaces of F_p^n; saturates at `u128::MAX` on
/// overflow, which only matters far past `SUBSPACE_LIMIT`.
pub fn gaussian_binomial(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let p = u128::from(p);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // Each prefix is itself a Gaussian binomial, so the division is exact.
        let Some(pow_high) = p.checked_pow((n - k + i) as u32) else {
            return u128::MAX;
        };
        let Some(next) = acc.checked_mul(pow_high - 1) else {
            return u128::MAX;
        };
        acc = next / (p.pow(i as u32) - 1);
    }
    acc
}

/// Total number of subspaces of F_p^n, saturating.
pub fn count_subspaces(p: u64, n: usize) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(p, n, k)))
}

/// All ideals of F_p G (the unit ideal included), sorted by dimension and
/// then by echelon basis. Errors past the subspace-count gate.
pub fn all_ideals(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Vec<IdealSubspace>> {
    if !ring.is_field() {
        return Err(Error::NonPrimeModulus(ring.modulus()));
    }
    let n = group.len();
    let total = count_subspaces(ring.modulus(), n);
    if total > SUBSPACE_LIMIT {
        return Err(Error::ScanTooLarge { size: total, limit: SUBSPACE_LIMIT });
    }

    // Closure under every monomial follows from closure under one generator
    // per factor; translation by g is the coordinate permutation
    // (x g)[k] = x[k g^-1].
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for f in 0..group.orders().len() {
        let mut exponents = vec![0u64; group.orders().len()];
        exponents[f] = 1;
        let g = group.index_of(&exponents)?;
        let g_inv = group.inverse(g);
        perms.push((0..n).map(|k| group.op(k, g_inv)).collect());
    }

    let mut pivot_sets: Vec<Vec<usize>> = Vec::new();
    for k in 0..=n {
        pivot_sets.extend(combinations(n, k));
    }
    let batches = exec::map_cases(&pivot_sets, |pivots| {
        scan_pivot_set(ring, n, pivots, &perms)
    });

    let mut ideals = Vec::new();
    for rows in batches.into_iter().flatten() {
        // Rows are already echelonized by construction; from_spanning just
        // revalidates and wraps.
        ideals.push(subspace::from_spanning(ring, group, rows)?);
    }
    ideals.sort_by(|a, b| {
        (a.dimension(), a.basis()).cmp(&(b.dimension(), b.basis()))
    });
    Ok(ideals)
}

/// Lexicographic k-subsets of {0, .., n-1}.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![current.clone()];
    loop {
        // Rightmost index that can still move right.
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
        out.push(current.clone());
    }
}

/// Every echelon form with the given pivot columns that is closed under the
/// generator permutations, as raw basis rows.
fn scan_pivot_set(
    ring: &RingDescriptor,
    n: usize,
    pivots: &[usize],
    perms: &[Vec<usize>],
) -> Vec<Vec<Vec<u64>>> {
    let k = pivots.len();
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    // Free entries sit right of their row's pivot, outside pivot columns.
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !is_pivot[c] {
                free.push((r, c));
            }
        }
    }

    let p = ring.modulus();
    let mut digits = vec![0u64; free.len()];
    let mut rows = vec![vec![0u64; n]; k];
    for (r, &pc) in pivots.iter().enumerate() {
        rows[r][pc] = 1;
    }
    let mut out = Vec::new();
    loop {
        for (&d, &(r, c)) in digits.iter().zip(&free) {
            rows[r][c] = d;
        }
        if is_ideal_rows(ring, &rows, pivots, perms) {
            out.push(rows.clone());
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return out;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Whether the echelonized row space is closed under each permutation.
fn is_ideal_rows(
    ring: &RingDescriptor,
    rows: &[Vec<u64>],
    pivots: &[usize],
    perms: &[Vec<usize>],
) -> bool {
    let n = rows.first().map_or(0, Vec::len);
    let mut tmp = vec![0u64; n];
    for perm in perms {
        for row in rows {
            for c in 0..n {
                tmp[c] = row[perm[c]];
            }
            for (r, &pc) in pivots.iter().enumerate() {
                if tmp[pc] != 0 {
                    let factor = tmp[pc];
                    for c in pc..n {
                        let delta = ring.mul(factor, rows[r][c]);
                        tmp[c] = ring.sub(tmp[c], delta);
                    }
                }
            }
            if tmp.iter().any(|&e| e != 0) {
                return false;
            }
        }
    }
    true
}

/// One subgroup's induced ideal in the census listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiImageEntry {
    /// Element indices of the subgroup, ascending.
    pub subgroup: Vec<usize>,
    pub order: usize,
    /// Dimension of phi(N) as a subspace: |G| - |G|/|N|.
    pub dimension: usize,
}

/// Number of non-unit ideals recovering a given subgroup under psi.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberEntry {
    pub subgroup: Vec<usize>,
    pub count: u64,
}

/// Side-by-side census of the subgroup lattice and the ideal lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCensus {
    pub modulus: u64,
    pub group: Vec<u64>,
    pub subgroup_count: usize,
    pub phi_image: Vec<PhiImageEntry>,
    /// Count of non-unit ideals; absent past the exhaustive-sweep gate.
    pub ideal_count: Option<u64>,
    /// Psi-fiber sizes over the subgroup lattice; absent past the gate.
    pub fiber_sizes: Option<Vec<FiberEntry>>,
}

impl LatticeCensus {
    /// Whether every non-unit ideal is subgroup-induced; `None` when the
    /// exhaustive sweep was gated off.
    pub fn image_is_whole_lattice(&self) -> Option<bool> {
        self.ideal_count.map(|c| c == self.subgroup_count as u64)
    }
}

/// Census of F_p G: the phi image always, the full non-unit ideal count and
/// its psi fibers when the subspace count is within `SUBSPACE_LIMIT`.
pub fn ideal_census(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<LatticeCensus> {
    if !ring.is_field() {
        return Err(Error::NonPrimeModulus(ring.modulus()));
    }
    let subgroups = group.all_subgroups()?;
    let mut phi_image = Vec::with_capacity(subgroups.len());
    for sub in &subgroups {
        let ideal = subspace::phi(ring, group, sub)?;
        phi_image.push(PhiImageEntry {
            subgroup: sub.elements().to_vec(),
            order: sub.order(),
            dimension: ideal.dimension(),
        });
    }

    let mut census = LatticeCensus {
        modulus: ring.modulus(),
        group: group.orders().to_vec(),
        subgroup_count: subgroups.len(),
        phi_image,
        ideal_count: None,
        fiber_sizes: None,
    };
    if count_subspaces(ring.modulus(), group.len()) > SUBSPACE_LIMIT {
        return Ok(census);
    }

    let ideals = all_ideals(ring, group)?;
    let mut fibers: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut count = 0u64;
    for ideal in &ideals {
        if ideal.is_full() {
            continue;
        }
        count += 1;
        let sub = subspace::psi(ideal);
        *fibers.entry(sub.elements().to_vec()).or_insert(0) += 1;
    }
    let mut fiber_sizes: Vec<FiberEntry> = fibers
        .into_iter()
        .map(|(subgroup, count)| FiberEntry { subgroup, count })
        .collect();
    fiber_sizes.sort_by(|a, b| {
        (a.subgroup.len(), &a.subgroup).cmp(&(b.subgroup.len(), &b.subgroup))
    });
    census.ideal_count = Some(count);
    census.fiber_sizes = Some(fiber_sizes);
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::ring::make_ring;

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(2, 4, 2), 35);
        assert_eq!(gaussian_binomial(2, 4, 0), 1);
        assert_eq!(gaussian_binomial(3, 3, 1), 13);
        assert_eq!(gaussian_binomial(2, 8, 4), 200_787);
        assert_eq!(gaussian_binomial(5, 2, 1), 6);
        assert_eq!(gaussian_binomial(2, 3, 5), 0);
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(count_subspaces(2, 2), 5);
        assert_eq!(count_subspaces(2, 4), 67);
        assert_eq!(count_subspaces(3, 3), 28);
        // Gate sanity: F_2^9 is already past the sweep limit.
        assert!(count_subspaces(2, 9) > SUBSPACE_LIMIT);
    }

    /// Definitional oracle: enumerate every subset of F_p^dim (as a coeff
    /// bitmask over encodings) closed under addition, scalars, and the
    /// generator translations. Only feasible for the tiniest spaces.
    fn ideals_by_subset_scan(modulus: u64, orders: &[u64]) -> Vec<Vec<u64>> {
        use crate::element::{decode_coeffs, encode_coeffs};
        let ring = make_ring(modulus).unwrap();
        let group = make_group(orders).unwrap();
        let len = group.len();
        let total = (modulus as u32).pow(len as u32) as u64;
        assert!(total <= 16, "oracle is exponential in p^|G|");
        let mut out = Vec::new();
        for mask in 0u32..(1 << total) {
            if mask & 1 == 0 {
                continue; // must contain zero
            }
            let members: Vec<u64> =
                (0..total).filter(|&e| mask >> e & 1 == 1).collect();
            let mut closed = true;
            'check: for &a in &members {
                let va = decode_coeffs(modulus, len, a);
                for &b in &members {
                    let vb = decode_coeffs(modulus, len, b);
                    let sum: Vec<u64> = (0..len)
                        .map(|i| ring.add(va[i], vb[i]))
                        .collect();
                    if mask >> encode_coeffs(modulus, &sum) & 1 == 0 {
                        closed = false;
                        break 'check;
                    }
                }
                for c in 0..modulus {
                    let scaled: Vec<u64> =
                        va.iter().map(|&e| ring.mul(e, c)).collect();
                    if mask >> encode_coeffs(modulus, &scaled) & 1 == 0 {
                        closed = false;
                        break 'check;
                    }
                }
                for g in 0..len {
                    let mut shifted = vec![0u64; len];
                    for (i, &c) in va.iter().enumerate() {
                        shifted[group.op(g, i)] = c;
                    }
                    if mask >> encode_coeffs(modulus, &shifted) & 1 == 0 {
                        closed = false;
                        break 'check;
                    }
                }
            }
            if closed {
                out.push(members);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn all_ideals_matches_subset_oracle() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[2, 2]).unwrap();
        let found = all_ideals(&ring, &group).unwrap();
        let mut encoded: Vec<Vec<u64>> = found
            .iter()
            .map(|ideal| ideal.enumerate_members().unwrap())
            .collect();
        encoded.sort();
        assert_eq!(encoded, ideals_by_subset_scan(2, &[2, 2]));
    }

    #[test]
    fn chain_ring_ideals() {
        // F_3 C_3 is local with maximal ideal (g-1): its ideals are exactly
        // the powers 0, (g-1)^2, (g-1), (1).
        let ring = make_ring(3).unwrap();
        let group = make_group(&[3]).unwrap();
        let found = all_ideals(&ring, &group).unwrap();
        assert_eq!(found.len(), 4);
        let one = crate::element::GroupRingElement::one(&ring, &group);
        let g = crate::element::GroupRingElement::monomial(&ring, &group, 1, 1);
        let t = g.sub(&one).unwrap();
        for (k, ideal) in [(3, 0), (2, 1), (1, 2), (0, 3)] {
            let power =
                subspace::ideal_generated(&ring, &group, &[t.pow(k)]).unwrap();
            assert_eq!(found[ideal], power);
        }
    }

    #[test]
    fn census_of_order_two_is_saturated() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[2]).unwrap();
        let census = ideal_census(&ring, &group).unwrap();
        assert_eq!(census.subgroup_count, 2);
        assert_eq!(census.ideal_count, Some(2));
        assert_eq!(census.image_is_whole_lattice(), Some(true));
        let fibers = census.fiber_sizes.unwrap();
        assert_eq!(fibers.len(), 2);
        assert!(fibers.iter().all(|f| f.count == 1));
    }

    #[test]
    fn census_of_cyclic_four() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[4]).unwrap();
        let census = ideal_census(&ring, &group).unwrap();
        assert_eq!(census.subgroup_count, 3);
        assert_eq!(census.phi_image.len(), 3);
        let dims: Vec<usize> =
            census.phi_image.iter().map(|e| e.dimension).collect();
        assert_eq!(dims, vec![0, 2, 3]);
        // The chain ring F_2[t]/(t^4) has one extra non-unit ideal, (t^3).
        assert_eq!(census.ideal_count, Some(4));
        assert_eq!(census.image_is_whole_lattice(), Some(false));
        let fibers = census.fiber_sizes.unwrap();
        assert_eq!(fibers.iter().map(|f| f.count).sum::<u64>(), 4);
        // The stray ideal has trivial psi.
        assert_eq!(fibers[0].subgroup, vec![0]);
        assert_eq!(fibers[0].count, 2);
    }

    #[test]
    fn census_of_klein_group() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[2, 2]).unwrap();
        let census = ideal_census(&ring, &group).unwrap();
        assert_eq!(census.subgroup_count, 5);
        assert_eq!(census.ideal_count, Some(6));
        let fibers = census.fiber_sizes.unwrap();
        assert_eq!(fibers.iter().map(|f| f.count).sum::<u64>(), 6);
        // Extra ideal: span{1 + f1 + f2 + f1 f2}, with trivial psi.
        assert_eq!(fibers[0].subgroup, vec![0]);
        assert_eq!(fibers[0].count, 2);
    }

    #[test]
    fn census_of_char_three_cyclic_three() {
        let ring = make_ring(3).unwrap();
        let group = make_group(&[3]).unwrap();
        let census = ideal_census(&ring, &group).unwrap();
        assert_eq!(census.subgroup_count, 2);
        assert_eq!(census.ideal_count, Some(3));
        assert_eq!(census.image_is_whole_lattice(), Some(false));
        let fibers = census.fiber_sizes.unwrap();
        assert_eq!(fibers[0].subgroup, vec![0]);
        assert_eq!(fibers[0].count, 2);
        assert_eq!(fibers[1].count, 1);
    }

    #[test]
    fn fibers_cover_phi_image() {
        for (p, orders) in [(2u64, vec![4u64]), (2, vec![2, 2]), (3, vec![3])] {
            let ring = make_ring(p).unwrap();
            let group = make_group(&orders).unwrap();
            let census = ideal_census(&ring, &group).unwrap();
            let fibers = census.fiber_sizes.unwrap();
            for entry in &census.phi_image {
                let fiber = fibers
                    .iter()
                    .find(|f| f.subgroup == entry.subgroup)
                    .expect("phi(N) lands in its own fiber");
                assert!(fiber.count >= 1);
            }
        }
    }

    #[test]
    fn census_degrades_past_gate() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[9]).unwrap();
        let census = ideal_census(&ring, &group).unwrap();
        assert_eq!(census.subgroup_count, 3);
        assert_eq!(census.ideal_count, None);
        assert_eq!(census.fiber_sizes, None);
        assert!(matches!(
            all_ideals(&ring, &group),
            Err(Error::ScanTooLarge { .. })
        ));
    }
}
