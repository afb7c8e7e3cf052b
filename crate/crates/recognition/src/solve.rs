//! Recovering P_G(s) from values φ_G(t) by an exact linear solve.

use crate::error::{RecognitionError, Result};
use gg_core::arith::divisors;
use gg_core::DirichletPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Solves `Σ_m a_m (n/m)^t = φ(t)` over the divisors m of n = `order`, using
/// the first D rows and checking the rest. The unknowns are indexed by
/// divisors because a_m ≠ 0 forces m | |G|.
pub fn solve_dirichlet(order: u64, rows: &[(u32, BigInt)]) -> Result<DirichletPolynomial> {
    let ms = divisors(order);
    let dn = ms.len();
    if rows.len() < dn {
        return Err(RecognitionError::InsufficientTruncation {
            what: "the coefficient solve (one value of φ per divisor of |G|)",
            needed: dn,
            have: rows.len(),
        });
    }
    let node = |m: u64| BigInt::from(order / m);
    let mut a: Vec<Vec<BigRational>> = rows[..dn]
        .iter()
        .map(|(t, phi)| {
            let mut r: Vec<BigRational> = ms.iter().map(|&m| BigRational::from_integer(node(m).pow(*t))).collect();
            r.push(BigRational::from_integer(phi.clone()));
            r
        })
        .collect();
    for col in 0..dn {
        let piv = (col..dn).find(|&r| !a[r][col].is_zero()).ok_or(RecognitionError::SingularSystem)?;
        a.swap(col, piv);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    let mut coeffs = BTreeMap::new();
    for (i, &m) in ms.iter().enumerate() {
        let v = &a[i][dn];
        if !v.is_integer() {
            return Err(RecognitionError::InconsistentFamily(format!("coefficient a_{m} = {v} is not an integer")));
        }
        coeffs.insert(m, v.to_integer());
    }
    let p = DirichletPolynomial::new(order, coeffs);
    for (t, phi) in &rows[dn..] {
        if &p.phi_at(*t) != phi {
            return Err(RecognitionError::InconsistentFamily(format!("recovered P does not reproduce φ({t})")));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym3() {
        // φ_S3(t) = 6^t − 3^t − 3·2^t + 3
        let phi = |t: u32| BigInt::from(6).pow(t) - BigInt::from(3).pow(t) - 3 * BigInt::from(2).pow(t) + 3;
        let rows: Vec<(u32, BigInt)> = (0..6).map(|t| (t, phi(t))).collect();
        let p = solve_dirichlet(6, &rows).unwrap();
        assert_eq!(p.coeff(1), 1.into());
        assert_eq!(p.coeff(2), (-1).into());
        assert_eq!(p.coeff(3), (-3).into());
        assert_eq!(p.coeff(6), 3.into());
        let mut bad = rows.clone();
        bad[5].1 += 1;
        assert!(solve_dirichlet(6, &bad).is_err());
    }
}
