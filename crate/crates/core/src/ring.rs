//! Coefficient rings Z/n. A `RingDescriptor` carries the factored modulus so
//! radical data (squarefree radical, reducedness, colon ideals) comes from
//! closed forms rather than elementwise scans.

use crate::error::{Error, Result};

pub const MAX_MODULUS: u64 = 1 << 31;

/// The ring Z/n with its factored modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    modulus: u64,
    /// Prime factorization of the modulus: (p, multiplicity), p ascending.
    factors: Vec<(u64, u32)>,
    /// Squarefree radical of the modulus, as an integer in 1..=n.
    radical: u64,
}

/// Builds Z/n. Requires 2 <= n <= 2^31.
pub fn make_ring(n: u64) -> Result<RingDescriptor> {
    if n < 2 || n > MAX_MODULUS {
        return Err(Error::InvalidModulus(n));
    }
    let factors = factorize(n);
    let radical = factors.iter().map(|&(p, _)| p).product();
    Ok(RingDescriptor { modulus: n, factors, radical })
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

impl RingDescriptor {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_field(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// True when the modulus is squarefree, i.e. Z/n has no nonzero nilpotents.
    pub fn is_reduced(&self) -> bool {
        self.radical == self.modulus
    }

    pub fn normalize(&self, r: u64) -> u64 {
        r % self.modulus
    }

    /// Normalizes a signed integer into 0..n-1.
    pub fn normalize_signed(&self, r: i64) -> u64 {
        let n = self.modulus as i64;
        (r.rem_euclid(n)) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a % self.modulus + b % self.modulus) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a % self.modulus + self.modulus - b % self.modulus) % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a % self.modulus) * (b % self.modulus) % self.modulus
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.modulus;
        let mut acc = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = a % self.modulus;
        let (g, x, _) = ext_gcd(a as i64, self.modulus as i64);
        if g != 1 {
            return Err(Error::NotAUnit { value: a, modulus: self.modulus });
        }
        Ok(self.normalize_signed(x))
    }

    pub fn is_unit(&self, a: u64) -> bool {
        gcd(a % self.modulus, self.modulus) == 1
    }

    /// True when some nonzero residue annihilates `a` (so 0 counts).
    pub fn is_zero_divisor(&self, a: u64) -> bool {
        gcd(a % self.modulus, self.modulus) != 1
    }

    pub fn is_nilpotent(&self, a: u64) -> bool {
        (a % self.modulus) % self.radical == 0
    }

    /// Generator of the nilradical: the squarefree radical of n, reduced mod n
    /// (0 exactly when the ring is reduced).
    pub fn nilradical_generator(&self) -> u64 {
        self.radical % self.modulus
    }

    /// Generator of the Jacobson radical. Z/n is artinian, so this equals the
    /// nilradical generator.
    pub fn jacobson_generator(&self) -> u64 {
        self.nilradical_generator()
    }

    /// Generator of the colon ideal (J(R) : p) = { r : r*p lies in J(R) }.
    pub fn colon_jacobson(&self, p: u64) -> u64 {
        // J(R) = (rad n), so r*p ∈ J(R) iff (rad n)/gcd(rad n, p) divides r.
        (self.radical / gcd(self.radical, p)) % self.modulus
    }

    /// Residues of the principal ideal (a), ascending.
    pub fn ideal_elements(&self, a: u64) -> Vec<u64> {
        let g = gcd(a % self.modulus, self.modulus);
        if g == self.modulus {
            return vec![0];
        }
        (0..self.modulus / g).map(|k| k * g).collect()
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
