//! Exact rational linear algebra: the arithmetic kernel every other module
//! builds on. No floating point anywhere; all results are exact.
//!
//! Scalars are arbitrary-precision rationals ([`Rat`]), matrices are dense
//! ([`Mat`]), subspaces are kept in reduced row-echelon form ([`Subspace`])
//! so that equality of subspaces is equality of canonical bases, and
//! [`Poly`] carries the minimal/characteristic polynomial machinery used by
//! the idempotent-splitting engine.

mod mat;
mod poly;
mod subspace;

pub use mat::Mat;
pub use poly::{factor_rational, min_poly, Poly};
pub use subspace::Subspace;

use num::BigInt;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. (`num::BigRational` maintains these invariants on
/// construction.)
pub type Rat = num::BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact fraction token: `p`, `p/q`, or `-p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Render a rational as `p` or `p/q` (lowest terms, positive denominator).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn parse_and_format_round_trip() {
        let r = parse_rat("2/4").unwrap();
        assert_eq!(r, frac(1, 2));
        assert_eq!(fmt_rat(&r), "1/2");
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(fmt_rat(&rat(0)), "0");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn zero_is_canonical() {
        let z = frac(0, 7);
        assert!(z.is_zero());
        assert_eq!(fmt_rat(&z), "0");
    }
}
