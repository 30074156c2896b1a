//! Exact scalar arithmetic: arbitrary-precision integers and rationals.
//!
//! Everything downstream works over these types; no floating point enters
//! any computation. `Rat` values are kept in lowest terms with a positive
//! denominator by construction (`Ratio` normalizes on creation).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `"p/q"` or `"p"` into a rational (lowest terms enforced by `Ratio`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let d: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as `"p/q"` (always with the denominator, e.g. `"3/1"`).
pub fn render_rat(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Renders a rational as `"p"` when integral, `"p/q"` otherwise.
pub fn render_rat_short(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Builds `num/den` (den > 0) in lowest terms without running a full
/// big-integer gcd: the common factor divides `den`, so it is found from
/// `num mod den`, which stays cheap when the denominator is small. This is
/// the constructor for the hot evaluation paths, where numerators grow
/// linearly in bit length but denominators stay put.
pub fn make_rat(num: Int, den: &Int) -> Rat {
    use num_integer::Integer as _;
    debug_assert!(den.is_positive());
    if den.is_one() {
        return Rat::from_integer(num);
    }
    let r = &num % den;
    let g = r.gcd(den);
    if g.is_one() {
        Rat::new_raw(num, den.clone())
    } else {
        Rat::new_raw(num / &g, den / &g)
    }
}
