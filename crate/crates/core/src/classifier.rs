//! Rank-based classification of principal ideals xRG of F_p C_m against the
//! subgroup-induced family.
//!
//! For x = sum r_i g^i the circulant A_x has entry (row, col) equal to
//! r_{(m-1-row-col) mod m}; its rows carry the coefficient system of xy = z,
//! so rank(A_x) = dim xRG. The augmented matrix for a target g^n - 1 appends
//! the right-hand-side column with +1 at row m-1-n and -1 at row m-1, and
//! solvability is the usual rank equality. The classification protocol for
//! nonzero non-unit x sets d = m - rank(A_x) and checks, in order: d divides
//! m; the d residue-class coefficient sums all vanish; the augmented rank for
//! n = d matches. Success identifies xRG as the induced ideal of <g^d> with
//! quotient F_p C_d.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::element::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::ring::gcd;
use crate::subspace::rref;

/// Outcome of classifying a principal ideal of F_p C_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ZeroElement,
    UnitElement,
    InImage { subgroup: Subgroup },
    NotInImage(ExclusionReason),
}

/// Which classification check failed, in protocol order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExclusionReason {
    DNotDivisor,
    Condition42Failed,
    RankMismatch,
}

impl ExclusionReason {
    pub fn label(self) -> &'static str {
        match self {
            ExclusionReason::DNotDivisor => "d-not-divisor",
            ExclusionReason::Condition42Failed => "condition42-failed",
            ExclusionReason::RankMismatch => "rank-mismatch",
        }
    }
}

/// Full classification record, including the intermediate ranks and sums the
/// verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub m: u64,
    pub rank_a: usize,
    /// m - rank(A_x); the candidate power for the inducing subgroup.
    pub d: u64,
    /// The d residue-class sums, when the divisor check passed.
    pub condition42: Option<Vec<u64>>,
    /// Rank of the augmented matrix for n = d, when computed.
    pub rank_a_tilde: Option<usize>,
    /// "<g^d>" on success.
    pub subgroup_label: Option<String>,
    /// "F_p C_d" on success.
    pub quotient: Option<String>,
}

impl Serialize for ClassificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        let verdict = match &self.verdict {
            Verdict::ZeroElement => "zero-element",
            Verdict::UnitElement => "unit-element",
            Verdict::InImage { .. } => "in-image",
            Verdict::NotInImage(_) => "not-in-image",
        };
        map.serialize_entry("verdict", verdict)?;
        if let Verdict::NotInImage(reason) = &self.verdict {
            map.serialize_entry("reason", reason.label())?;
        }
        map.serialize_entry("d", &self.d)?;
        map.serialize_entry("rank_A", &self.rank_a)?;
        if let Some(rank) = self.rank_a_tilde {
            map.serialize_entry("rank_A_tilde", &rank)?;
        }
        if let Some(sums) = &self.condition42 {
            map.serialize_entry("condition42", sums)?;
        }
        if let Some(label) = &self.subgroup_label {
            map.serialize_entry("subgroup", label)?;
        }
        if let Some(quotient) = &self.quotient {
            map.serialize_entry("quotient", quotient)?;
        }
        map.end()
    }
}

fn cyclic_field_element(x: &GroupRingElement) -> Result<u64> {
    if !x.ring().is_field() {
        return Err(Error::NonPrimeModulus(x.ring().modulus()));
    }
    match x.group().orders() {
        [m] => Ok(*m),
        _ => Err(Error::NonCyclicGroup),
    }
}

/// The circulant matrix A_x, row r = the coefficient vector of the relation
/// for g^{m-1-r}.
pub fn build_circulant(x: &GroupRingElement) -> Result<Vec<Vec<u64>>> {
    let m = cyclic_field_element(x)? as usize;
    let coeffs = x.coeffs();
    Ok((0..m)
        .map(|row| {
            (0..m)
                .map(|col| coeffs[(2 * m - 1 - row - col) % m])
                .collect()
        })
        .collect())
}

/// A_x with the right-hand-side column for the target g^n - 1 appended:
/// +1 at row m-1-n, -1 at row m-1.
pub fn build_augmented(x: &GroupRingElement, n: u64) -> Result<Vec<Vec<u64>>> {
    let m = cyclic_field_element(x)?;
    if n == 0 || n >= m {
        return Err(Error::InvalidPower { power: n, order: m });
    }
    let mut rows = build_circulant(x)?;
    let m = m as usize;
    let n = n as usize;
    for (r, row) in rows.iter_mut().enumerate() {
        let rhs = if r == m - 1 - n {
            1
        } else if r == m - 1 {
            x.ring().neg(1)
        } else {
            0
        };
        row.push(rhs);
    }
    Ok(rows)
}

fn rank_of(x: &GroupRingElement, mut rows: Vec<Vec<u64>>) -> usize {
    rref(x.ring(), &mut rows);
    rows.len()
}

/// dim xRG, the rank of the circulant.
pub fn principal_dimension(x: &GroupRingElement) -> Result<usize> {
    Ok(rank_of(x, build_circulant(x)?))
}

/// Whether g^n - 1 lies in xRG, by the rank criterion.
pub fn contains_power_minus_one(x: &GroupRingElement, n: u64) -> Result<bool> {
    let rank_a = rank_of(x, build_circulant(x)?);
    let rank_tilde = rank_of(x, build_augmented(x, n)?);
    Ok(rank_a == rank_tilde)
}

/// The d = gcd(m, n) residue-class coefficient sums whose vanishing is
/// equivalent to x lying in (g^n - 1)RG.
pub fn condition_sums(x: &GroupRingElement, n: u64) -> Result<Vec<u64>> {
    let m = cyclic_field_element(x)?;
    if n == 0 || n >= m {
        return Err(Error::InvalidPower { power: n, order: m });
    }
    let d = gcd(m, n) as usize;
    let ring = x.ring();
    let coeffs = x.coeffs();
    Ok((0..d)
        .map(|i| {
            coeffs[i..]
                .iter()
                .step_by(d)
                .fold(0u64, |acc, &c| ring.add(acc, c))
        })
        .collect())
}

/// Whether x lies in (g^n - 1)RG, by the residue-class sum criterion.
pub fn in_power_ideal(x: &GroupRingElement, n: u64) -> Result<bool> {
    Ok(condition_sums(x, n)?.iter().all(|&s| s == 0))
}

/// Classifies the principal ideal xRG of F_p C_m against the family of
/// subgroup-induced ideals.
pub fn classify_principal(x: &GroupRingElement) -> Result<ClassificationReport> {
    let m = cyclic_field_element(x)?;
    let p = x.ring().modulus();

    if x.is_zero() {
        return Ok(ClassificationReport {
            verdict: Verdict::ZeroElement,
            m,
            rank_a: 0,
            d: m,
            condition42: None,
            rank_a_tilde: None,
            subgroup_label: None,
            quotient: None,
        });
    }

    let rank_a = rank_of(x, build_circulant(x)?);
    let d = m - rank_a as u64;
    if d == 0 {
        return Ok(ClassificationReport {
            verdict: Verdict::UnitElement,
            m,
            rank_a,
            d,
            condition42: None,
            rank_a_tilde: None,
            subgroup_label: None,
            quotient: None,
        });
    }

    let mut report = ClassificationReport {
        verdict: Verdict::NotInImage(ExclusionReason::DNotDivisor),
        m,
        rank_a,
        d,
        condition42: None,
        rank_a_tilde: None,
        subgroup_label: None,
        quotient: None,
    };

    if m % d != 0 {
        return Ok(report);
    }

    let sums = condition_sums(x, d)?;
    let sums_vanish = sums.iter().all(|&s| s == 0);
    report.condition42 = Some(sums);
    if !sums_vanish {
        report.verdict = Verdict::NotInImage(ExclusionReason::Condition42Failed);
        return Ok(report);
    }

    let rank_tilde = rank_of(x, build_augmented(x, d)?);
    report.rank_a_tilde = Some(rank_tilde);
    if rank_tilde != rank_a {
        report.verdict = Verdict::NotInImage(ExclusionReason::RankMismatch);
        return Ok(report);
    }

    let subgroup = x.group().subgroup_generated(&[vec![d]])?;
    report.subgroup_label = Some(format!("<g^{d}>"));
    report.quotient = Some(format!("F_{p} C_{d}"));
    report.verdict = Verdict::InImage { subgroup };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{make_element, make_element_signed};
    use crate::group::make_group;
    use crate::ring::make_ring;
    use crate::subspace::{ideal_generated, in_phi_image, phi};

    fn element(p: u64, m: u64, coeffs: &[u64]) -> GroupRingElement {
        let ring = make_ring(p).unwrap();
        let group = make_group(&[m]).unwrap();
        make_element(&ring, &group, coeffs).unwrap()
    }

    #[test]
    fn circulant_layout() {
        let x = element(7, 3, &[1, 2, 3]);
        assert_eq!(
            build_circulant(&x).unwrap(),
            vec![vec![3, 2, 1], vec![2, 1, 3], vec![1, 3, 2]]
        );
    }

    #[test]
    fn augmented_column_placement() {
        let x = element(7, 4, &[1, 2, 3, 4]);
        let rows = build_augmented(&x, 2).unwrap();
        let rhs: Vec<u64> = rows.iter().map(|r| r[4]).collect();
        // +1 at row m-1-n = 1, -1 at row m-1 = 3.
        assert_eq!(rhs, vec![0, 1, 0, 6]);
        assert!(matches!(
            build_augmented(&x, 4).unwrap_err(),
            Error::InvalidPower { power: 4, order: 4 }
        ));
    }

    #[test]
    fn circulant_rank_is_principal_dimension() {
        for (p, m) in [(2u64, 6u64), (3, 4), (5, 3)] {
            let ring = make_ring(p).unwrap();
            let group = make_group(&[m]).unwrap();
            for code in 0..p.pow(m as u32) {
                let coeffs = crate::element::decode_coeffs(p, m as usize, code);
                let x = make_element(&ring, &group, &coeffs).unwrap();
                let by_subspace = ideal_generated(&ring, &group, &[x.clone()])
                    .unwrap()
                    .dimension();
                assert_eq!(principal_dimension(&x).unwrap(), by_subspace, "p={p} m={m} {coeffs:?}");
            }
        }
    }

    #[test]
    fn power_membership_examples() {
        let ring = make_ring(2).unwrap();
        let group = make_group(&[4]).unwrap();
        let x = make_element_signed(&ring, &group, &[-1, 0, 1, 0]).unwrap(); // g^2 - 1
        assert!(contains_power_minus_one(&x, 2).unwrap());
        assert!(!contains_power_minus_one(&x, 1).unwrap());
        assert!(in_power_ideal(&x, 2).unwrap());

        // x = 1 + g^2 over F_3 C_4 has even residue-class sums.
        let y = element(3, 4, &[1, 0, 1, 0]);
        assert_eq!(condition_sums(&y, 2).unwrap(), vec![2, 0]);
        assert!(!in_power_ideal(&y, 2).unwrap());
    }

    #[test]
    fn reference_classification() {
        let x = element(5, 12, &[0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3]);
        let report = classify_principal(&x).unwrap();
        assert_eq!(report.rank_a, 8);
        assert_eq!(report.d, 4);
        assert_eq!(report.condition42.as_deref(), Some(&[0, 0, 0, 0][..]));
        assert_eq!(report.rank_a_tilde, Some(8));
        assert_eq!(report.subgroup_label.as_deref(), Some("<g^4>"));
        assert_eq!(report.quotient.as_deref(), Some("F_5 C_4"));
        match &report.verdict {
            Verdict::InImage { subgroup } => assert_eq!(subgroup.elements(), &[0, 4, 8]),
            other => panic!("expected in-image, got {other:?}"),
        }

        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["verdict"], "in-image");
        assert_eq!(json["rank_A"], 8);
        assert_eq!(json["subgroup"], "<g^4>");
        assert_eq!(json["quotient"], "F_5 C_4");
    }

    #[test]
    fn exclusion_reasons() {
        // (g-1)^2 over F_3 C_3 spans one dimension; d = 2 does not divide 3.
        let square = element(3, 3, &[1, 1, 1]);
        let report = classify_principal(&square).unwrap();
        assert_eq!(report.verdict, Verdict::NotInImage(ExclusionReason::DNotDivisor));
        assert_eq!(report.rank_a, 1);
        assert_eq!(report.d, 2);

        // 1 + g^2 over F_3 C_4: d = 2 divides 4 but the sums are nonzero.
        let y = element(3, 4, &[1, 0, 1, 0]);
        let report = classify_principal(&y).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::NotInImage(ExclusionReason::Condition42Failed)
        );
        assert_eq!(report.condition42, Some(vec![2, 0]));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["verdict"], "not-in-image");
        assert_eq!(json["reason"], "condition42-failed");
    }

    #[test]
    fn trivial_verdicts() {
        let zero = element(5, 6, &[0; 6]);
        let report = classify_principal(&zero).unwrap();
        assert_eq!(report.verdict, Verdict::ZeroElement);
        assert_eq!(report.d, 6);

        let unit = element(5, 6, &[2, 0, 0, 0, 0, 0]);
        let report = classify_principal(&unit).unwrap();
        assert_eq!(report.verdict, Verdict::UnitElement);
        assert_eq!(report.rank_a, 6);

        let g_minus_one = element(2, 2, &[1, 1]);
        let report = classify_principal(&g_minus_one).unwrap();
        match report.verdict {
            Verdict::InImage { ref subgroup } => assert_eq!(subgroup.order(), 2),
            ref other => panic!("expected in-image, got {other:?}"),
        }
        assert_eq!(report.subgroup_label.as_deref(), Some("<g^1>"));
    }

    #[test]
    fn preconditions() {
        let ring = make_ring(6).unwrap();
        let group = make_group(&[4]).unwrap();
        let x = make_element(&ring, &group, &[1, 1, 0, 0]).unwrap();
        assert_eq!(classify_principal(&x).unwrap_err(), Error::NonPrimeModulus(6));

        let ring = make_ring(3).unwrap();
        let group = make_group(&[2, 2]).unwrap();
        let x = make_element(&ring, &group, &[1, 1, 0, 0]).unwrap();
        assert_eq!(classify_principal(&x).unwrap_err(), Error::NonCyclicGroup);
    }

    #[test]
    fn verdicts_agree_with_image_decision() {
        for (p, m) in [(2u64, 4u64), (2, 6), (3, 3), (3, 4)] {
            let ring = make_ring(p).unwrap();
            let group = make_group(&[m]).unwrap();
            for code in 0..p.pow(m as u32) {
                let coeffs = crate::element::decode_coeffs(p, m as usize, code);
                let x = make_element(&ring, &group, &coeffs).unwrap();
                let report = classify_principal(&x).unwrap();
                let ideal = ideal_generated(&ring, &group, &[x.clone()]).unwrap();
                let oracle = in_phi_image(&ideal).unwrap();
                match report.verdict {
                    Verdict::ZeroElement => {
                        assert_eq!(oracle, Some(group.trivial_subgroup()));
                    }
                    Verdict::UnitElement => {
                        assert!(ideal.is_full());
                        assert_eq!(oracle, None);
                    }
                    Verdict::InImage { ref subgroup } => {
                        assert_eq!(oracle.as_ref(), Some(subgroup));
                        let induced = phi(&ring, &group, subgroup).unwrap();
                        assert_eq!(induced, ideal);
                    }
                    Verdict::NotInImage(_) => {
                        assert_eq!(oracle, None);
                        assert!(!ideal.is_full() && !ideal.is_zero());
                    }
                }
            }
        }
    }
}
