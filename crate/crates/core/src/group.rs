//! Finite abelian groups presented as products of cyclic factors
//! C_{m_1} x ... x C_{m_k}. Elements are exponent vectors, enumerated
//! row-major so that index 0 is the identity.

use crate::error::{Error, Result};
use crate::ring::gcd;

pub const MAX_GROUP_SIZE: u64 = 1 << 20;
pub const MAX_LATTICE_SIZE: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    /// Row-major strides: index = sum of e_i * stride_i.
    strides: Vec<u64>,
    size: u64,
}

/// Builds the direct product of cyclic groups of the given orders (each >= 2,
/// product <= 2^20). The empty list gives the trivial group.
pub fn make_group(orders: &[u64]) -> Result<FiniteAbelianGroup> {
    let mut size: u64 = 1;
    for &m in orders {
        if m < 2 {
            return Err(Error::InvalidGroupOrder(m));
        }
        size = size.checked_mul(m).filter(|&s| s <= MAX_GROUP_SIZE).ok_or(
            Error::GroupTooLarge { size: u64::MAX, limit: MAX_GROUP_SIZE },
        )?;
    }
    let mut strides = vec![1u64; orders.len()];
    for i in (0..orders.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * orders[i + 1];
    }
    Ok(FiniteAbelianGroup { orders: orders.to_vec(), strides, size })
}

impl FiniteAbelianGroup {
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.size as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the element with the given exponents (reduced mod the orders).
    pub fn index_of(&self, exponents: &[u64]) -> Result<usize> {
        if exponents.len() != self.orders.len() {
            return Err(Error::CoefficientLength {
                expected: self.orders.len(),
                found: exponents.len(),
            });
        }
        let mut idx = 0u64;
        for (i, &e) in exponents.iter().enumerate() {
            idx += (e % self.orders[i]) * self.strides[i];
        }
        Ok(idx as usize)
    }

    pub fn exponents_of(&self, index: usize) -> Vec<u64> {
        let mut rem = index as u64;
        let mut exps = Vec::with_capacity(self.orders.len());
        for i in 0..self.orders.len() {
            exps.push(rem / self.strides[i]);
            rem %= self.strides[i];
        }
        exps
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut idx = 0u64;
        for i in 0..self.orders.len() {
            let (ea, eb) = (a / self.strides[i], b / self.strides[i]);
            a %= self.strides[i];
            b %= self.strides[i];
            idx += ((ea + eb) % self.orders[i]) * self.strides[i];
        }
        idx as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut a = a as u64;
        let mut idx = 0u64;
        for i in 0..self.orders.len() {
            let e = a / self.strides[i];
            a %= self.strides[i];
            idx += ((self.orders[i] - e) % self.orders[i]) * self.strides[i];
        }
        idx as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut a = a as u64;
        let mut idx = 0u64;
        for i in 0..self.orders.len() {
            let e = a / self.strides[i];
            a %= self.strides[i];
            idx += (e * (k % self.orders[i]) % self.orders[i]) * self.strides[i];
        }
        idx as usize
    }

    pub fn order_of(&self, a: usize) -> u64 {
        let mut a = a as u64;
        let mut ord = 1u64;
        for i in 0..self.orders.len() {
            let e = a / self.strides[i];
            a %= self.strides[i];
            let factor_order = self.orders[i] / gcd(self.orders[i], e);
            ord = ord / gcd(ord, factor_order) * factor_order;
        }
        ord
    }

    /// The group exponent: least k with g^k = 1 for all g.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |l, &m| l / gcd(l, m) * m)
    }

    /// Primes dividing the group order, ascending.
    pub fn support_primes(&self) -> Vec<u64> {
        let mut primes = Vec::new();
        let mut n = self.size;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                primes.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            primes.push(n);
        }
        primes
    }

    /// Flattened multiplication table, entry a*size+b = op(a, b).
    pub fn multiplication_table(&self) -> Result<Vec<u32>> {
        if self.size > MAX_LATTICE_SIZE {
            return Err(Error::GroupTooLarge { size: self.size, limit: MAX_LATTICE_SIZE });
        }
        let n = self.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(a, b) as u32;
            }
        }
        Ok(table)
    }

    /// The subgroup of elements of p-power order (the p-primary component).
    pub fn sylow_component(&self, p: u64) -> Subgroup {
        let mut elements = Vec::new();
        for a in 0..self.len() {
            let mut ord = self.order_of(a);
            while ord % p == 0 {
                ord /= p;
            }
            if ord == 1 {
                elements.push(a);
            }
        }
        let generators = self.minimal_generators(&elements);
        Subgroup { elements, generators }
    }

    /// Subgroup generated by the given exponent vectors.
    pub fn subgroup_generated(&self, generators: &[Vec<u64>]) -> Result<Subgroup> {
        let mut gen_indices = Vec::with_capacity(generators.len());
        for g in generators {
            gen_indices.push(self.index_of(g)?);
        }
        let elements = self.closure(&gen_indices);
        Ok(Subgroup { elements, generators: generators.to_vec() })
    }

    pub fn subgroup_of_indices(&self, indices: &[usize]) -> Subgroup {
        let elements = self.closure(indices);
        let generators = self.minimal_generators(&elements);
        Subgroup { elements, generators }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0], generators: Vec::new() }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        let elements: Vec<usize> = (0..self.len()).collect();
        let generators = self.minimal_generators(&elements);
        Subgroup { elements, generators }
    }

    /// Closure of a set of element indices under the group operation.
    fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        member[0] = true;
        let mut elements = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(a) = frontier.pop() {
            for &g in seed {
                let b = self.op(a, g);
                if !member[b] {
                    member[b] = true;
                    elements.push(b);
                    frontier.push(b);
                }
            }
        }
        elements.sort_unstable();
        elements
    }

    /// Greedy generating set for a sorted element list: keep adding the first
    /// element not yet generated.
    fn minimal_generators(&self, elements: &[usize]) -> Vec<Vec<u64>> {
        let mut gens: Vec<usize> = Vec::new();
        let mut have: Vec<usize> = vec![0];
        for &a in elements {
            if have.binary_search(&a).is_err() {
                gens.push(a);
                have = self.closure(&gens);
                if have.len() == elements.len() {
                    break;
                }
            }
        }
        gens.iter().map(|&a| self.exponents_of(a)).collect()
    }

    /// Every subgroup, canonically ordered (by order, then element list).
    ///
    /// Seeds with all cyclic subgroups and closes under pairwise join; in an
    /// abelian group every subgroup is a join of cyclic ones, so the fixpoint
    /// is the full lattice.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.size > MAX_LATTICE_SIZE {
            return Err(Error::GroupTooLarge { size: self.size, limit: MAX_LATTICE_SIZE });
        }
        let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        seen.insert(vec![0]);
        for a in 0..self.len() {
            let mut cyc = vec![0usize];
            let mut x = a;
            while x != 0 {
                cyc.push(x);
                x = self.op(x, a);
            }
            cyc.sort_unstable();
            seen.insert(cyc);
        }
        // Pairwise joins: for subgroups A, B of an abelian group the join is
        // the set of products {a*b}.
        loop {
            let current: Vec<Vec<usize>> = seen.iter().cloned().collect();
            let mut grew = false;
            for (i, a) in current.iter().enumerate() {
                for b in current.iter().skip(i + 1) {
                    if a.len() == self.len() || b.len() == self.len() {
                        continue;
                    }
                    let mut join: Vec<usize> = Vec::with_capacity(a.len() * b.len());
                    for &x in a {
                        for &y in b {
                            join.push(self.op(x, y));
                        }
                    }
                    join.sort_unstable();
                    join.dedup();
                    if !seen.contains(&join) {
                        seen.insert(join);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut subgroups: Vec<Subgroup> = seen
            .into_iter()
            .map(|elements| {
                let generators = self.minimal_generators(&elements);
                Subgroup { elements, generators }
            })
            .collect();
        subgroups.sort_by(|a, b| {
            (a.order(), &a.elements).cmp(&(b.order(), &b.elements))
        });
        Ok(subgroups)
    }

    /// Coset decomposition by a subgroup. Representatives are the least
    /// element index in each coset, in ascending order.
    pub fn quotient(&self, subgroup: &Subgroup) -> QuotientGroup {
        assert!(self.is_subgroup(subgroup), "coset decomposition needs a subgroup");
        let mut coset_of = vec![usize::MAX; self.len()];
        let mut reps = Vec::new();
        for a in 0..self.len() {
            if coset_of[a] == usize::MAX {
                let c = reps.len();
                reps.push(a);
                for &s in &subgroup.elements {
                    coset_of[self.op(a, s)] = c;
                }
            }
        }
        QuotientGroup { reps, coset_of }
    }

    pub fn is_subgroup(&self, candidate: &Subgroup) -> bool {
        let elems = &candidate.elements;
        if elems.binary_search(&0).is_err() {
            return false;
        }
        elems.iter().all(|&a| {
            elems.binary_search(&self.inverse(a)).is_ok()
                && elems.iter().all(|&b| elems.binary_search(&self.op(a, b)).is_ok())
        })
    }
}

/// In C_m, the subgroup generated by g^n is generated by g^gcd(m, n).
pub fn cyclic_power_generator(m: u64, n: u64) -> u64 {
    gcd(m, n)
}

/// A subgroup, canonically the sorted list of its element indices. The
/// generator list is informational and does not take part in equality.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<Vec<u64>>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.elements.binary_search(&index).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

/// G/N as a coset table over the parent group's element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    /// Least element index of each coset, ascending; coset 0 is N itself.
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl QuotientGroup {
    pub fn size(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    pub fn op(&self, parent: &FiniteAbelianGroup, a: usize, b: usize) -> usize {
        self.coset_of[parent.op(self.reps[a], self.reps[b])]
    }

    /// Coset multiplication table, entry a*size+b.
    pub fn table(&self, parent: &FiniteAbelianGroup) -> Vec<u32> {
        let n = self.size();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(parent, a, b) as u32;
            }
        }
        table
    }
}
