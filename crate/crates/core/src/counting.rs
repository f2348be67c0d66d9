//! Closed-form counts: Jacobsthal numbers, |T(c)|, |T_p(c)| and the number
//! of 2-bridge knots per crossing number.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{neg_one_pow, pow2};
use crate::word::MIN_CROSSINGS;

pub(crate) fn check_c(c: usize) -> Result<()> {
    if c < MIN_CROSSINGS {
        return Err(Error::CrossingNumberTooSmall { c, min: MIN_CROSSINGS });
    }
    Ok(())
}

/// Exact division that must leave no remainder.
pub(crate) fn divide_exact(num: BigInt, den: i64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Invariant(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// J(n) = (2^n - (-1)^n) / 3.
pub fn jacobsthal(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    divide_exact(pow2(n as u32) - neg_one_pow(n), 3, "jacobsthal")
}

/// t(c) = |T(c)| = J(c - 2).
pub fn count_words(c: usize) -> Result<BigInt> {
    check_c(c)?;
    jacobsthal(c as i64 - 2)
}

/// t_p(c) = |T_p(c)|: J((c-2)/2) for even c, J((c-1)/2) for odd c.
pub fn count_palindromic(c: usize) -> Result<BigInt> {
    check_c(c)?;
    let n = if c.is_multiple_of(2) { (c - 2) / 2 } else { (c - 1) / 2 };
    jacobsthal(n as i64)
}

/// Number of 2-bridge knots with crossing number c, a knot and its mirror
/// image counted once.
pub fn ernst_sumners_count(c: usize) -> Result<BigInt> {
    check_c(c)?;
    let main = pow2(c as u32 - 3);
    let num = match c % 4 {
        0 => main + pow2((c as u32 - 4) / 2),
        1 => main + pow2((c as u32 - 3) / 2),
        2 => main + pow2((c as u32 - 4) / 2) - 1,
        _ => main + pow2((c as u32 - 3) / 2) + 1,
    };
    divide_exact(num, 3, "knot count")
}
