//! Radicals of RG: closed forms where they exist, a Frobenius-kernel
//! computation over prime fields, and definitional brute-force scans that
//! serve as oracles for everything else.
//!
//! Closed-form landscape for R = Z/n and finite abelian G:
//! - the nilradical is zero iff n is squarefree and no prime in the group
//!   support divides n;
//! - it equals the induced ideal phi(G_p) of the p-primary component iff
//!   n = p is prime and p divides |G|;
//! - otherwise it is nonzero and is not phi(N) for any subgroup N.
//! G is finite, so RG is artinian and the Jacobson radical coincides with
//! the nilradical; it additionally carries an explicit generator recipe:
//! J(R)G together with the multiples r_p (g - 1) over the p-primary
//! components, r_p generating the colon ideal (J(R) : p).

use crate::element::{
    convolve_into, decode_coeffs, encode_coeffs, make_element, GroupRingElement,
};
use crate::error::{Error, Result};
use crate::exec;
use crate::group::{FiniteAbelianGroup, Subgroup};
use crate::ring::RingDescriptor;
use crate::subspace::{from_spanning, phi, IdealSubspace};

/// Cap on |R|^|G| for the definitional element scans.
pub const SCAN_LIMIT: u128 = 1 << 16;

/// How a radical sits relative to the subgroup-induced ideal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// The radical is the zero ideal.
    Zero,
    /// The radical is phi of the p-primary component of G.
    PhiOfSylow { prime: u64, subgroup: Subgroup },
    /// The radical is nonzero and not phi(N) for any subgroup N.
    NoClosedFormInScope,
}

/// Closed-form answer plus whatever concrete data is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub closed_form: ClosedForm,
    /// Human-readable containment facts backing the verdict.
    pub containment_facts: Vec<String>,
    /// Echelon basis of the radical, available over prime fields.
    pub subspace: Option<IdealSubspace>,
    /// Generating set of the radical as an ideal, when one is in scope.
    pub generators: Vec<GroupRingElement>,
}

impl RadicalReport {
    pub fn dimension(&self) -> Option<usize> {
        self.subspace.as_ref().map(IdealSubspace::dimension)
    }
}

/// Whether the augmentation ideal is nil: G must be a p-group for a prime p
/// nilpotent in Z/n (i.e. n a power of p). Trivial G counts vacuously.
pub fn aug_in_nilradical(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> bool {
    group.support_primes().iter().all(|&p| ring.is_nilpotent(p))
}

fn sylow_phi(ring: &RingDescriptor, group: &FiniteAbelianGroup, p: u64) -> IdealSubspace {
    let sylow = group.sylow_component(p);
    phi(ring, group, &sylow).expect("prime modulus admits subspaces")
}

/// Closed form of the nilradical of RG.
pub fn nilradical_closed_form(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> RadicalReport {
    let n = ring.modulus();
    let support = group.support_primes();
    let support_divides: Vec<u64> =
        support.iter().copied().filter(|&p| n % p == 0).collect();

    if ring.is_reduced() && support_divides.is_empty() {
        let subspace = ring
            .is_field()
            .then(|| from_spanning(ring, group, Vec::new()).expect("prime modulus"));
        return RadicalReport {
            closed_form: ClosedForm::Zero,
            containment_facts: vec![format!(
                "Z/{n} is reduced and no prime in the group support divides {n}"
            )],
            subspace,
            generators: Vec::new(),
        };
    }

    if ring.is_field() {
        let p = n;
        let subgroup = group.sylow_component(p);
        let subspace = sylow_phi(ring, group, p);
        let generators = subgroup
            .elements()
            .iter()
            .filter(|&&h| h != 0)
            .map(|&h| {
                let mut coeffs = vec![0u64; group.len()];
                coeffs[h] = 1;
                coeffs[0] = ring.neg(1);
                make_element(ring, group, &coeffs).expect("ambient length")
            })
            .collect();
        return RadicalReport {
            closed_form: ClosedForm::PhiOfSylow { prime: p, subgroup },
            containment_facts: vec![format!(
                "coefficients form the field F_{p} and {p} divides the group order"
            )],
            subspace: Some(subspace),
            generators,
        };
    }

    // Nonzero radical over a composite modulus: outside the induced family.
    let mut facts = Vec::new();
    if !ring.is_reduced() {
        facts.push(format!(
            "contains the scalar multiples {}*RG of the coefficient nilradical",
            ring.nilradical_generator()
        ));
    }
    for &p in &support_divides {
        if ring.is_nilpotent(p) {
            facts.push(format!(
                "contains the induced ideal of the {p}-primary component ({p} is nilpotent in Z/{n})"
            ));
        }
    }
    facts.push(format!(
        "differs from every induced ideal: Z/{n} is {}",
        if ring.is_reduced() { "of composite characteristic" } else { "not reduced" }
    ));
    RadicalReport {
        closed_form: ClosedForm::NoClosedFormInScope,
        containment_facts: facts,
        subspace: None,
        generators: Vec::new(),
    }
}

/// Generators of the Jacobson radical of RG: the scalar radical times G plus
/// the colon multiples r_p (g - 1) over each p-primary component.
pub fn jacobson_generators(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Vec<GroupRingElement> {
    let mut generators = Vec::new();
    let j = ring.jacobson_generator();
    if j != 0 {
        for g in 0..group.len() {
            generators.push(GroupRingElement::monomial(ring, group, g, j));
        }
    }
    for p in group.support_primes() {
        let r = ring.colon_jacobson(p);
        if r == 0 {
            continue;
        }
        for &h in group.sylow_component(p).elements() {
            if h == 0 {
                continue;
            }
            let mut coeffs = vec![0u64; group.len()];
            coeffs[h] = r;
            coeffs[0] = ring.neg(r);
            generators.push(make_element(ring, group, &coeffs).expect("ambient length"));
        }
    }
    generators
}

/// Closed form of the Jacobson radical of RG. RG is finite, hence artinian,
/// so the verdict mirrors the nilradical; the generator recipe is attached.
pub fn jacobson_closed_form(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> RadicalReport {
    let mut report = nilradical_closed_form(ring, group);
    report.generators = jacobson_generators(ring, group);
    report
        .containment_facts
        .push("equals the nilradical: RG is finite, hence artinian".to_string());
    report
}

/// Nilradical of F_p G as the kernel of the iterated Frobenius map.
///
/// In characteristic p the map x -> x^p is F_p-linear and sends the basis
/// monomial g to g^p. An element is nilpotent iff its p^t-th power vanishes
/// once p^t >= |G| (nilpotency indices are bounded by the dimension), so the
/// nilradical is the kernel of a single 0/1 matrix.
pub fn nilradical_frobenius(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<IdealSubspace> {
    if !ring.is_field() {
        return Err(Error::NonPrimeModulus(ring.modulus()));
    }
    let p = ring.modulus();
    let n = group.len();
    let mut q = 1u64;
    while q < n as u64 {
        q *= p;
    }
    // Column g of the matrix is the unit vector at g^q, so the kernel is cut
    // out fiberwise: coordinates mapping to the same image must sum to zero.
    let mut fibers: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for g in 0..n {
        fibers.entry(group.pow(g, q)).or_default().push(g);
    }
    let mut rows = Vec::new();
    for fiber in fibers.values() {
        let first = fiber[0];
        for &g in &fiber[1..] {
            let mut row = vec![0u64; n];
            row[g] = 1;
            row[first] = ring.neg(1);
            rows.push(row);
        }
    }
    from_spanning(ring, group, rows)
}

fn scan_space(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> Result<u64> {
    let size = (ring.modulus() as u128).pow(group.len() as u32);
    if size > SCAN_LIMIT {
        return Err(Error::ScanTooLarge { size, limit: SCAN_LIMIT });
    }
    Ok(size as u64)
}

/// Definitional nilpotent scan: encodings of every x with x^k = 0 for some k,
/// ascending. Refuses scan spaces above 2^16.
pub fn nilpotent_bruteforce(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Vec<u64>> {
    let total = scan_space(ring, group)?;
    let table = group.multiplication_table()?;
    let n = ring.modulus();
    let len = group.len();
    Ok(exec::filter_range(total, |code| {
        // x is nilpotent iff repeated squaring reaches zero; 2^16 bounds every
        // nilpotency index in a scan space of at most 2^16 elements.
        let mut x = decode_coeffs(n, len, code);
        let mut square = vec![0u64; len];
        for _ in 0..17 {
            if x.iter().all(|&c| c == 0) {
                return true;
            }
            convolve_into(ring, &table, &x, &x, &mut square);
            if square == x {
                return false;
            }
            std::mem::swap(&mut x, &mut square);
        }
        false
    }))
}

/// Definitional Jacobson scan: encodings of every x such that 1 - x*y is a
/// unit for all y, ascending. Refuses scan spaces above 2^16.
pub fn jacobson_bruteforce(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
) -> Result<Vec<u64>> {
    let total = scan_space(ring, group)?;
    let table = group.multiplication_table()?;
    let n = ring.modulus();
    let len = group.len();

    // Units of RG, one bit per encoding: x is a unit iff its image in each
    // residue field ring F_p G is one, i.e. the multiplication matrix of the
    // image has full rank (the kernel of RG -> prod F_p G is nilpotent).
    let prime_rings: Vec<RingDescriptor> = ring
        .factors()
        .iter()
        .map(|&(p, _)| crate::ring::make_ring(p).expect("prime factor is a valid modulus"))
        .collect();
    let codes: Vec<u64> = (0..total).collect();
    let unit_flags: Vec<bool> = exec::map_cases(&codes, |&code| {
        let x = decode_coeffs(n, len, code);
        prime_rings.iter().all(|fp| {
            let p = fp.modulus();
            let mut rows = vec![vec![0u64; len]; len];
            for j in 0..len {
                // Coefficient of g_k in x * g_j is x at k * j^-1.
                let j_inv = group.inverse(j);
                for (k, row) in rows.iter_mut().enumerate() {
                    row[j] = x[table[k * len + j_inv] as usize] % p;
                }
            }
            full_rank(fp, rows)
        })
    });

    Ok(exec::filter_range(total, |code| {
        let x = decode_coeffs(n, len, code);
        // Rows x * g_d for each digit position d. Bumping digit d of y adds
        // the row to x*y by bilinearity, so the scan never convolves in full;
        // elements of the radical pay for the whole y sweep, and this loop is
        // the entire cost of the scan.
        let mut translates = vec![0u64; len * len];
        for d in 0..len {
            for j in 0..len {
                translates[d * len + table[j * len + d] as usize] = x[j];
            }
        }
        let mut y = vec![0u64; len];
        let mut product = vec![0u64; len];
        let mut check = vec![0u64; len];
        loop {
            // check = 1 - x*y, entries already reduced so plain branches
            // beat the division in `ring.sub`.
            check[0] = if product[0] <= 1 { 1 - product[0] } else { n + 1 - product[0] };
            for k in 1..len {
                check[k] = if product[k] == 0 { 0 } else { n - product[k] };
            }
            if !unit_flags[encode_coeffs(n, &check) as usize] {
                return false;
            }
            // Advance y through all coefficient vectors in base-n order. A
            // digit that wraps has added its row n times, a net zero, so the
            // product needs no carry correction.
            let mut digit = 0;
            loop {
                if digit == len {
                    return true;
                }
                y[digit] += 1;
                let row = &translates[digit * len..(digit + 1) * len];
                for (entry, &t) in product.iter_mut().zip(row) {
                    let s = *entry + t;
                    *entry = if s >= n { s - n } else { s };
                }
                if y[digit] < n {
                    break;
                }
                y[digit] = 0;
                digit += 1;
            }
        }
    }))
}

fn full_rank(field: &RingDescriptor, mut rows: Vec<Vec<u64>>) -> bool {
    let n = rows.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&i| rows[i][col] != 0) else {
            return false;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero over prime field");
        for i in rank + 1..n {
            if rows[i][col] != 0 {
                let factor = field.mul(rows[i][col], inv);
                for c in col..n {
                    let delta = field.mul(factor, rows[rank][c]);
                    rows[i][c] = field.sub(rows[i][c], delta);
                }
            }
        }
        rank += 1;
    }
    true
}

/// Additive closure of all monomial multiples of the generators: the ideal
/// they generate, as sorted encodings. Refuses scan spaces above 2^16.
pub fn ideal_closure(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    generators: &[GroupRingElement],
) -> Result<Vec<u64>> {
    let total = scan_space(ring, group)?;
    let n = ring.modulus();
    let len = group.len();
    // Monomial multiples c*g*x of the generators; their additive closure is
    // the ideal.
    let mut multiples = std::collections::BTreeSet::new();
    for x in generators {
        if x.ring() != ring || x.group() != group {
            return Err(Error::IncompatibleOperands);
        }
        for g in 0..len {
            let translated = x.translate(g);
            for c in 1..n {
                multiples.insert(encode_coeffs(n, translated.scalar_mul(c).coeffs()));
            }
        }
    }
    let multiples: Vec<Vec<u64>> =
        multiples.into_iter().map(|code| decode_coeffs(n, len, code)).collect();

    let mut member = vec![false; total as usize];
    member[0] = true;
    let mut frontier = vec![0u64];
    while let Some(code) = frontier.pop() {
        let base = decode_coeffs(n, len, code);
        for m in &multiples {
            let sum: Vec<u64> =
                base.iter().zip(m).map(|(&a, &b)| ring.add(a, b)).collect();
            let sum_code = encode_coeffs(n, &sum);
            if !member[sum_code as usize] {
                member[sum_code as usize] = true;
                frontier.push(sum_code);
            }
        }
    }
    Ok((0..total).filter(|&c| member[c as usize]).collect())
}
