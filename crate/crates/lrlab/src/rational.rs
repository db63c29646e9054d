//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate is arbitrary-precision rational
//! arithmetic, backed by [`num_rational::BigRational`]. Values are always
//! reduced to lowest terms with a positive denominator, and the canonical
//! zero is 0/1; the backing type maintains these invariants on every
//! operation.

use num_bigint::BigInt;

/// An exact rational number: reduced to lowest terms, denominator positive.
pub type Rational = num_rational::BigRational;

/// The rational number `v/1`.
pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The rational number `num/den`, reduced.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational in the text grammar: `3`, `-2`, `1/4`, `-5/7`.
pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
