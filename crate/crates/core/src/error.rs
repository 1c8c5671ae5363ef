use std::fmt;

/// Errors reported by the algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Modulus outside 2..=2^31.
    InvalidModulus(u64),
    /// A cyclic factor of order < 2 was supplied.
    InvalidGroupOrder(u64),
    /// Group order exceeds the supported bound for the requested operation.
    GroupTooLarge { size: u64, limit: u64 },
    /// The element scan space |R|^|G| exceeds the brute-force cap.
    ScanTooLarge { size: u128, limit: u128 },
    /// Inversion of a non-unit residue.
    NotAUnit { value: u64, modulus: u64 },
    /// Operands live over different rings or groups.
    IncompatibleOperands,
    /// Coefficient vector length does not match the group order.
    CoefficientLength { expected: usize, found: usize },
    /// The operation needs a prime modulus (a field of scalars).
    NonPrimeModulus(u64),
    /// The operation needs a single-factor cyclic group of order >= 2.
    NonCyclicGroup,
    /// A power exponent outside the range 1..m-1.
    InvalidPower { power: u64, order: u64 },
    /// Quotient structure of the full ring was requested.
    NotAProperIdeal,
    /// Construction hypotheses are not met by the given ring/group.
    NotApplicable(&'static str),
    /// Unknown verification suite name.
    UnknownSuite(String),
    /// A Laurent term whose exponent key is not an integer.
    InvalidLaurentTerm(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(n) => write!(f, "invalid modulus {n} (need 2 <= n <= 2^31)"),
            Error::InvalidGroupOrder(m) => write!(f, "invalid cyclic factor order {m} (need >= 2)"),
            Error::GroupTooLarge { size, limit } => {
                write!(f, "group order {size} exceeds limit {limit}")
            }
            Error::ScanTooLarge { size, limit } => {
                write!(f, "scan space of {size} elements exceeds limit {limit}")
            }
            Error::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit modulo {modulus}")
            }
            Error::IncompatibleOperands => write!(f, "operands belong to different group rings"),
            Error::CoefficientLength { expected, found } => {
                write!(f, "coefficient vector has length {found}, expected {expected}")
            }
            Error::NonPrimeModulus(n) => write!(f, "modulus {n} is not prime"),
            Error::NonCyclicGroup => write!(f, "operation requires a single cyclic factor"),
            Error::InvalidPower { power, order } => {
                write!(f, "power {power} outside 1..{order}")
            }
            Error::NotAProperIdeal => write!(f, "ideal is the full ring; quotient is trivial"),
            Error::NotApplicable(what) => write!(f, "construction not applicable: {what}"),
            Error::UnknownSuite(name) => write!(f, "unknown verification suite '{name}'"),
            Error::InvalidLaurentTerm(key) => {
                write!(f, "Laurent term exponent '{key}' is not an integer")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
