//! The infinite cyclic case: RG is the Laurent polynomial ring R[g, g^-1]
//! over Z or a prime field. A principal ideal xRG is subgroup-induced exactly
//! when x = u g^{e_1} - u g^{e_2} for a unit u of R, in which case it is the
//! induced ideal of <g^{e_1 - e_2}>.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Laurent polynomial with integer (modulus 0) or prime-field coefficients.
/// Terms are kept sorted by exponent with zero coefficients dropped; over a
/// field the coefficients are normalized into 1..p-1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LaurentData", into = "LaurentData")]
pub struct LaurentElement {
    modulus: u64,
    terms: BTreeMap<i64, i64>,
}

/// Wire form: exponents are JSON object keys, so they travel as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LaurentData {
    pub modulus: u64,
    pub terms: BTreeMap<String, i64>,
}

impl TryFrom<LaurentData> for LaurentElement {
    type Error = Error;

    fn try_from(data: LaurentData) -> Result<Self> {
        let mut terms = Vec::with_capacity(data.terms.len());
        for (key, coeff) in &data.terms {
            let exponent: i64 = key
                .trim()
                .parse()
                .map_err(|_| Error::InvalidLaurentTerm(key.clone()))?;
            terms.push((exponent, *coeff));
        }
        make_laurent(data.modulus, &terms)
    }
}

impl From<LaurentElement> for LaurentData {
    fn from(x: LaurentElement) -> Self {
        LaurentData {
            modulus: x.modulus,
            terms: x.terms.iter().map(|(&e, &c)| (e.to_string(), c)).collect(),
        }
    }
}

/// Builds a Laurent polynomial from (exponent, coefficient) pairs. Repeated
/// exponents are summed. The modulus must be 0 (integers) or a prime.
pub fn make_laurent(modulus: u64, terms: &[(i64, i64)]) -> Result<LaurentElement> {
    if modulus != 0 && !crate::ring::make_ring(modulus)?.is_field() {
        return Err(Error::NonPrimeModulus(modulus));
    }
    let mut collected: BTreeMap<i64, i64> = BTreeMap::new();
    for &(exponent, coeff) in terms {
        *collected.entry(exponent).or_insert(0) += coeff;
    }
    if modulus != 0 {
        let p = modulus as i64;
        for coeff in collected.values_mut() {
            *coeff = coeff.rem_euclid(p);
        }
    }
    collected.retain(|_, &mut coeff| coeff != 0);
    Ok(LaurentElement { modulus, terms: collected })
}

impl LaurentElement {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> &BTreeMap<i64, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn coeff_is_unit(&self, coeff: i64) -> bool {
        if self.modulus == 0 {
            coeff == 1 || coeff == -1
        } else {
            coeff.rem_euclid(self.modulus as i64) != 0
        }
    }

    fn coeffs_negate(&self, a: i64, b: i64) -> bool {
        if self.modulus == 0 {
            a == -b
        } else {
            (a + b).rem_euclid(self.modulus as i64) == 0
        }
    }
}

/// Verdict for a principal ideal of R[g, g^-1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaurentVerdict {
    ZeroElement,
    UnitElement,
    /// xRG is the induced ideal of <g^power>, power > 0.
    InImage { power: u64 },
    NotInImage,
}

impl LaurentVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            LaurentVerdict::ZeroElement => "zero-element",
            LaurentVerdict::UnitElement => "unit-element",
            LaurentVerdict::InImage { .. } => "in-image",
            LaurentVerdict::NotInImage => "not-in-image",
        }
    }
}

/// Classifies xR[g, g^-1] against the subgroup-induced family: membership
/// demands the two-term shape u g^{e_1} - u g^{e_2} with u a unit.
pub fn classify_laurent(x: &LaurentElement) -> LaurentVerdict {
    let terms: Vec<(i64, i64)> = x.terms.iter().map(|(&e, &c)| (e, c)).collect();
    match terms.as_slice() {
        [] => LaurentVerdict::ZeroElement,
        [(_, coeff)] => {
            if x.coeff_is_unit(*coeff) {
                LaurentVerdict::UnitElement
            } else {
                LaurentVerdict::NotInImage
            }
        }
        [(e_low, c_low), (e_high, c_high)] => {
            if x.coeffs_negate(*c_low, *c_high) && x.coeff_is_unit(*c_high) {
                LaurentVerdict::InImage { power: (e_high - e_low) as u64 }
            } else {
                LaurentVerdict::NotInImage
            }
        }
        _ => LaurentVerdict::NotInImage,
    }
}
