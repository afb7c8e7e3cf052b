//! Writing a rational as ∏ (1 − 1/p_i) over a multiset of primes.

use gg_core::arith::factorize;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// The unique sorted prime multiset with ∏ (1 − 1/p) = q, or `None`.
///
/// The largest prime p of the multiset divides the reduced denominator
/// exactly as often as it occurs, since no p_i − 1 is divisible by it.
/// Peeling that prime off and recursing gives the answer.
pub fn unfat_factor(q: &BigRational) -> Option<Vec<u64>> {
    let mut q = q.clone();
    let mut out = Vec::new();
    loop {
        if q.is_one() {
            out.sort_unstable();
            return Some(out);
        }
        if q <= BigRational::zero() || q > BigRational::one() {
            return None;
        }
        let den = q.denom().to_u64()?;
        let (p, m) = *factorize(den).last()?;
        if (q.numer() % BigInt::from(p)).is_zero() {
            return None;
        }
        let step = BigRational::new(BigInt::from(p), BigInt::from(p - 1));
        for _ in 0..m {
            q *= &step;
            out.push(p);
        }
    }
}

/// Whether the multiset has no repeated prime.
pub fn is_squarefree_multiset(ps: &[u64]) -> bool {
    ps.windows(2).all(|w| w[0] != w[1])
}
