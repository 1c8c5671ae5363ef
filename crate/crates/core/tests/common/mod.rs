//! Helpers shared by the integration-test targets.

use gring::laurent::{LaurentElement, LaurentVerdict};

/// Divides the polynomial `c[0] + c[1] t + ...` by the monic t^k - 1,
/// returning the quotient when the remainder vanishes. Coefficients are
/// integers, or residues mod p when p > 0.
fn divide_by_power_relation(mut c: Vec<i64>, k: usize, p: u64) -> Option<Vec<i64>> {
    if c.len() <= k {
        return c.iter().all(|&v| reduced(v, p) == 0).then(Vec::new);
    }
    let mut quotient = vec![0i64; c.len() - k];
    for i in (k..c.len()).rev() {
        let coeff = reduced(c[i], p);
        quotient[i - k] = coeff;
        c[i - k] += coeff; // t^i = t^{i-k} * (t^k - 1) + t^{i-k}
        c[i] = 0;
    }
    c.truncate(k);
    c.iter().all(|&v| reduced(v, p) == 0).then_some(quotient)
}

fn reduced(v: i64, p: u64) -> i64 {
    if p == 0 {
        v
    } else {
        v.rem_euclid(p as i64)
    }
}

fn is_unit(v: i64, p: u64) -> bool {
    if p == 0 {
        v == 1 || v == -1
    } else {
        reduced(v, p) != 0
    }
}

/// Classifies xR[g, g^-1] by definition: shift the support to start at
/// exponent 0, then long-divide by t^k - 1 for every k up to the degree,
/// accepting exactly the divisors whose quotient is a single unit monomial.
/// The result must match `classify_laurent`.
pub fn laurent_division_oracle(x: &LaurentElement) -> LaurentVerdict {
    let p = x.modulus();
    let terms = x.terms();
    if terms.is_empty() {
        return LaurentVerdict::ZeroElement;
    }
    let min_exp = *terms.keys().next().expect("nonempty");
    let max_exp = *terms.keys().next_back().expect("nonempty");
    let mut shifted = vec![0i64; (max_exp - min_exp) as usize + 1];
    for (&e, &coeff) in terms {
        shifted[(e - min_exp) as usize] = coeff;
    }

    if shifted.len() == 1 {
        return if is_unit(shifted[0], p) {
            LaurentVerdict::UnitElement
        } else {
            LaurentVerdict::NotInImage
        };
    }

    let mut matching_powers = Vec::new();
    for k in 1..shifted.len() as u64 {
        let Some(quotient) = divide_by_power_relation(shifted.clone(), k as usize, p) else {
            continue;
        };
        let support: Vec<i64> =
            quotient.iter().copied().filter(|&v| reduced(v, p) != 0).collect();
        if let [single] = support.as_slice() {
            if is_unit(*single, p) {
                matching_powers.push(k);
            }
        }
    }
    match matching_powers.as_slice() {
        [] => LaurentVerdict::NotInImage,
        [power] => LaurentVerdict::InImage { power: *power },
        more => panic!("division oracle matched several powers {more:?} for {x:?}"),
    }
}
