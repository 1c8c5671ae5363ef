//! Ideals of F_p G as coefficient subspaces in reduced row-echelon form.
//!
//! The echelon form of a row space is unique, with pivots chosen leftmost,
//! so equal subspaces always carry literally equal basis matrices and
//! structural comparison is plain `==`.

use serde::{Deserialize, Serialize};

use crate::element::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::{make_group, FiniteAbelianGroup, Subgroup};
use crate::ring::{make_ring, RingDescriptor};

/// A subspace of F_p G closed under multiplication by G, stored as a reduced
/// row-echelon basis of coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SubspaceData", into = "SubspaceData")]
pub struct IdealSubspace {
    ring: RingDescriptor,
    group: FiniteAbelianGroup,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Wire form of a subspace: the echelon basis as a row list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceData {
    pub modulus: u64,
    pub group: Vec<u64>,
    pub dimension: usize,
    pub basis: Vec<Vec<u64>>,
}

impl TryFrom<SubspaceData> for IdealSubspace {
    type Error = Error;

    fn try_from(data: SubspaceData) -> Result<Self> {
        let ring = make_ring(data.modulus)?;
        let group = make_group(&data.group)?;
        from_spanning(&ring, &group, data.basis)
    }
}

impl From<IdealSubspace> for SubspaceData {
    fn from(s: IdealSubspace) -> Self {
        SubspaceData {
            modulus: s.ring.modulus(),
            group: s.group.orders().to_vec(),
            dimension: s.basis.len(),
            basis: s.basis,
        }
    }
}

/// Reduces `rows` in place to reduced row-echelon form over F_p and returns
/// the pivot columns. Zero rows are dropped.
pub(crate) fn rref(ring: &RingDescriptor, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = ring.inv(rows[rank][col]).expect("nonzero entry over a prime field");
        for entry in rows[rank].iter_mut() {
            *entry = ring.mul(*entry, inv);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let factor = rows[i][col];
                for c in 0..width {
                    let delta = ring.mul(factor, rows[rank][c]);
                    rows[i][c] = ring.sub(rows[i][c], delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Echelonizes a spanning set into a subspace. The modulus must be prime.
pub fn from_spanning(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    mut rows: Vec<Vec<u64>>,
) -> Result<IdealSubspace> {
    if !ring.is_field() {
        return Err(Error::NonPrimeModulus(ring.modulus()));
    }
    for row in &mut rows {
        if row.len() != group.len() {
            return Err(Error::CoefficientLength { expected: group.len(), found: row.len() });
        }
        for entry in row.iter_mut() {
            *entry = ring.normalize(*entry);
        }
    }
    let pivots = rref(ring, &mut rows);
    Ok(IdealSubspace { ring: ring.clone(), group: group.clone(), basis: rows, pivots })
}

/// The zero subspace.
pub fn zero_subspace(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> Result<IdealSubspace> {
    from_spanning(ring, group, Vec::new())
}

impl IdealSubspace {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.group.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.group.len()
    }

    /// Reduces a coefficient vector modulo the basis, in place.
    pub fn reduce(&self, v: &mut [u64]) {
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            if v[col] != 0 {
                let factor = v[col];
                for c in 0..v.len() {
                    let delta = self.ring.mul(factor, row[c]);
                    v[c] = self.ring.sub(v[c], delta);
                }
            }
        }
    }

    pub fn contains_vec(&self, v: &[u64]) -> bool {
        let mut v: Vec<u64> = v.iter().map(|&c| self.ring.normalize(c)).collect();
        self.reduce(&mut v);
        v.iter().all(|&c| c == 0)
    }

    pub fn contains(&self, x: &GroupRingElement) -> Result<bool> {
        if x.ring() != &self.ring || x.group() != &self.group {
            return Err(Error::IncompatibleOperands);
        }
        Ok(self.contains_vec(x.coeffs()))
    }

    pub fn contains_subspace(&self, other: &IdealSubspace) -> bool {
        other.basis.iter().all(|row| self.contains_vec(row))
    }

    /// Checks closure under multiplication by every group element. It is
    /// enough to check the cyclic-factor generators: they generate G, and
    /// multiplication by a product is the composition of the single steps.
    pub fn is_ideal(&self) -> bool {
        let k = self.group.orders().len();
        (0..k).all(|factor| {
            let mut exps = vec![0u64; k];
            exps[factor] = 1;
            let g = self.group.index_of(&exps).expect("generator exponents are well-formed");
            self.basis.iter().all(|row| {
                let mut translated = vec![0u64; row.len()];
                for (i, &c) in row.iter().enumerate() {
                    translated[self.group.op(g, i)] = c;
                }
                self.contains_vec(&translated)
            })
        })
    }

    /// Basis rows as group-ring elements.
    pub fn basis_elements(&self) -> Vec<GroupRingElement> {
        self.basis
            .iter()
            .map(|row| {
                crate::element::make_element(&self.ring, &self.group, row)
                    .expect("basis rows have ambient length")
            })
            .collect()
    }

    /// Encodings of every member, ascending. Refuses spans above 2^16.
    pub fn enumerate_members(&self) -> Result<Vec<u64>> {
        let p = self.ring.modulus();
        let count = (p as u128).pow(self.dimension() as u32);
        if count > 1 << 16 {
            return Err(Error::ScanTooLarge { size: count, limit: 1 << 16 });
        }
        let n = self.group.len();
        let mut members = Vec::with_capacity(count as usize);
        let mut combo = vec![0u64; self.dimension()];
        loop {
            let mut v = vec![0u64; n];
            for (c, row) in combo.iter().zip(&self.basis) {
                if *c != 0 {
                    for i in 0..n {
                        v[i] = self.ring.add(v[i], self.ring.mul(*c, row[i]));
                    }
                }
            }
            members.push(crate::element::encode_coeffs(p, &v));
            let mut i = 0;
            loop {
                if i == combo.len() {
                    members.sort_unstable();
                    return Ok(members);
                }
                combo[i] += 1;
                if combo[i] < p {
                    break;
                }
                combo[i] = 0;
                i += 1;
            }
        }
    }
}

/// The augmentation ideal: kernel of the coefficient-sum map, spanned by
/// { g - 1 : g in G }.
pub fn augmentation_ideal(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<IdealSubspace> {
    let n = group.len();
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for g in 1..n {
        let mut row = vec![0u64; n];
        row[g] = 1;
        row[0] = ring.neg(1);
        rows.push(row);
    }
    from_spanning(ring, group, rows)
}

/// The subgroup-induced ideal: the ideal of F_p G generated by
/// { h - 1 : h in N }, spanned as a subspace by { (h - 1) g }.
pub fn phi(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    subgroup: &Subgroup,
) -> Result<IdealSubspace> {
    let n = group.len();
    let mut rows = Vec::with_capacity(subgroup.order().saturating_sub(1) * n);
    for &h in subgroup.elements() {
        if h == 0 {
            continue;
        }
        for g in 0..n {
            let mut row = vec![0u64; n];
            let hg = group.op(h, g);
            // (h - 1) g = hg - g; h != 1 so the two indices differ.
            row[hg] = 1;
            row[g] = ring.neg(1);
            rows.push(row);
        }
    }
    from_spanning(ring, group, rows)
}

/// Recovers a subgroup from an ideal: { g in G : g - 1 in J }.
pub fn psi(ideal: &IdealSubspace) -> Subgroup {
    let group = ideal.group();
    let n = group.len();
    let mut members = Vec::new();
    for g in 0..n {
        if g == 0 {
            members.push(0);
            continue;
        }
        let mut v = vec![0u64; n];
        v[g] = 1;
        v[0] = ideal.ring().neg(1);
        if ideal.contains_vec(&v) {
            members.push(g);
        }
    }
    let subgroup = group.subgroup_of_indices(&members);
    // For an ideal the member set is automatically closed:
    // gh - 1 = g(h - 1) + (g - 1) and g^-1 - 1 = -g^-1 (g - 1).
    assert_eq!(
        subgroup.order(),
        members.len(),
        "recovered set is not a subgroup; input subspace is not an ideal"
    );
    subgroup
}

/// The ideal of F_p G generated by the given elements, as a subspace spanned
/// by their translates { g x }.
pub fn ideal_generated(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    generators: &[GroupRingElement],
) -> Result<IdealSubspace> {
    let n = group.len();
    let mut rows = Vec::with_capacity(generators.len() * n);
    for x in generators {
        if x.ring() != ring || x.group() != group {
            return Err(Error::IncompatibleOperands);
        }
        for g in 0..n {
            let mut row = vec![0u64; n];
            for (i, &c) in x.coeffs().iter().enumerate() {
                row[group.op(g, i)] = c;
            }
            rows.push(row);
        }
    }
    from_spanning(ring, group, rows)
}

/// Decides membership of an ideal in the subgroup-induced family: returns
/// the unique subgroup N with J = phi(N) if one exists.
///
/// The candidate is forced: N must be psi(J), so it suffices to rebuild
/// phi(psi(J)) and compare echelon bases.
pub fn in_phi_image(ideal: &IdealSubspace) -> Result<Option<Subgroup>> {
    let candidate = psi(ideal);
    let rebuilt = phi(ideal.ring(), ideal.group(), &candidate)?;
    Ok(if &rebuilt == ideal { Some(candidate) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{make_element, make_element_signed};

    fn setup(n: u64, orders: &[u64]) -> (RingDescriptor, FiniteAbelianGroup) {
        (make_ring(n).unwrap(), make_group(orders).unwrap())
    }

    #[test]
    fn echelon_form_is_canonical() {
        let (ring, group) = setup(5, &[4]);
        let a = from_spanning(&ring, &group, vec![vec![1, 2, 3, 4], vec![0, 1, 1, 0]]).unwrap();
        // The same row space presented by mixed spanning vectors.
        let b = from_spanning(
            &ring,
            &group,
            vec![
                vec![2, 4, 6 % 5, 8 % 5],
                vec![1, 3, 4, 4],
                vec![3, 3, 1, 2], // 3*row1 + 2*row2
            ],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dimension(), 2);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn rejects_composite_modulus() {
        let (ring, group) = setup(6, &[4]);
        assert_eq!(
            zero_subspace(&ring, &group).unwrap_err(),
            Error::NonPrimeModulus(6)
        );
    }

    #[test]
    fn augmentation_ideal_dimension_and_psi() {
        for (p, orders) in [(2u64, vec![2u64]), (3, vec![3]), (5, vec![12]), (2, vec![2, 2, 3])] {
            let (ring, group) = setup(p, &orders);
            let aug = augmentation_ideal(&ring, &group).unwrap();
            assert_eq!(aug.dimension(), group.len() - 1);
            assert!(aug.is_ideal());
            assert_eq!(psi(&aug), group.full_subgroup());
        }
    }

    #[test]
    fn phi_dimension_examples() {
        let (ring, group) = setup(5, &[12]);
        let n = group.subgroup_generated(&[vec![4]]).unwrap();
        let ideal = phi(&ring, &group, &n).unwrap();
        assert_eq!(ideal.dimension(), 8);
        assert!(ideal.is_ideal());

        let trivial = phi(&ring, &group, &group.trivial_subgroup()).unwrap();
        assert!(trivial.is_zero());

        let (ring2, group2) = setup(2, &[2]);
        let full = phi(&ring2, &group2, &group2.full_subgroup()).unwrap();
        assert_eq!(full, augmentation_ideal(&ring2, &group2).unwrap());
    }

    #[test]
    fn phi_is_monotone() {
        let (ring, group) = setup(3, &[12]);
        let small = group.subgroup_generated(&[vec![6]]).unwrap();
        let large = group.subgroup_generated(&[vec![2]]).unwrap();
        let phi_small = phi(&ring, &group, &small).unwrap();
        let phi_large = phi(&ring, &group, &large).unwrap();
        assert!(phi_large.contains_subspace(&phi_small));
        assert!(!phi_small.contains_subspace(&phi_large));
    }

    #[test]
    fn psi_inverts_phi() {
        let (ring, group) = setup(3, &[2, 6]);
        for sub in group.all_subgroups().unwrap() {
            let ideal = phi(&ring, &group, &sub).unwrap();
            assert_eq!(psi(&ideal), sub);
            assert_eq!(
                ideal.dimension(),
                group.len() - group.len() / sub.order()
            );
        }
    }

    #[test]
    fn principal_ideal_examples() {
        let (ring, group) = setup(3, &[3]);
        let x = make_element(&ring, &group, &[1, 1, 1]).unwrap();
        let ideal = ideal_generated(&ring, &group, &[x.clone()]).unwrap();
        assert_eq!(ideal.dimension(), 1);
        assert!(ideal.contains(&x).unwrap());

        let zero = ideal_generated(&ring, &group, &[]).unwrap();
        assert!(zero.is_zero());
        assert!(zero.contains_vec(&[0, 0, 0]));

        let unit = make_element(&ring, &group, &[2, 0, 0]).unwrap();
        assert!(ideal_generated(&ring, &group, &[unit]).unwrap().is_full());
    }

    #[test]
    fn example_element_lies_in_its_induced_ideal() {
        let (ring, group) = setup(5, &[12]);
        let x = make_element(&ring, &group, &[0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3]).unwrap();
        let n = group.subgroup_generated(&[vec![4]]).unwrap();
        let induced = phi(&ring, &group, &n).unwrap();
        assert!(induced.contains(&x).unwrap());
    }

    #[test]
    fn image_decision_examples() {
        let (ring, group) = setup(2, &[2, 2]);
        let aug = augmentation_ideal(&ring, &group).unwrap();
        assert_eq!(in_phi_image(&aug).unwrap(), Some(group.full_subgroup()));

        // x = 1 + f1 + f2 + f1 f2 spans a one-dimensional ideal that does not
        // come from any subgroup.
        let x = make_element(&ring, &group, &[1, 1, 1, 1]).unwrap();
        let ideal = ideal_generated(&ring, &group, &[x]).unwrap();
        assert_eq!(ideal.dimension(), 1);
        assert!(ideal.is_ideal());
        assert_eq!(in_phi_image(&ideal).unwrap(), None);
        // The failure is witnessed by rebuilding: psi gives the trivial
        // subgroup, whose induced ideal is zero.
        let rebuilt = phi(&ring, &group, &psi(&ideal)).unwrap();
        assert!(rebuilt.is_zero());

        let (ring3, group3) = setup(3, &[3]);
        let square = make_element_signed(&ring3, &group3, &[-1, 1, 0])
            .unwrap()
            .pow(2);
        let ideal3 = ideal_generated(&ring3, &group3, &[square]).unwrap();
        assert_eq!(in_phi_image(&ideal3).unwrap(), None);
    }

    #[test]
    fn non_ideal_subspace_detected() {
        let (ring, group) = setup(2, &[2]);
        let line = from_spanning(&ring, &group, vec![vec![1, 0]]).unwrap();
        assert!(!line.is_ideal());
        let ideal = from_spanning(&ring, &group, vec![vec![1, 1]]).unwrap();
        assert!(ideal.is_ideal());
    }

    #[test]
    fn member_enumeration() {
        let (ring, group) = setup(2, &[2]);
        let aug = augmentation_ideal(&ring, &group).unwrap();
        assert_eq!(aug.enumerate_members().unwrap(), vec![0, 3]);

        let (ring5, group5) = setup(5, &[4]);
        let full = ideal_generated(
            &ring5,
            &group5,
            &[make_element(&ring5, &group5, &[1, 0, 0, 0]).unwrap()],
        )
        .unwrap();
        assert_eq!(full.enumerate_members().unwrap().len(), 625);
    }

    #[test]
    fn subspace_json_round_trip() {
        let (ring, group) = setup(5, &[12]);
        let n = group.subgroup_generated(&[vec![4]]).unwrap();
        let ideal = phi(&ring, &group, &n).unwrap();
        let json = serde_json::to_string(&ideal).unwrap();
        let back: IdealSubspace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ideal);
        assert!(json.contains("\"dimension\":8"));
    }
}
