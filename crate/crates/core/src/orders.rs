//! Exact factored orders for the classical-group families the toolkit
//! reasons about, plus the equal-order scan over a group database.
//!
//! Each cyclotomic-style term q^i +/- 1 is factored by trial division before
//! the terms are combined, so the results stay exact and directly comparable
//! to table data without ever forming the full product.

use thiserror::Error;

use crate::arith::{self, ArithError, FactoredInt};
use crate::db::GroupDatabase;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("rank {0} out of range (need >= 2)")]
    RankRange(u32),
    #[error("alternating degree {0} outside the supported range 5..=40")]
    DegreeRange(u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

fn checked_pow(base: u64, exp: u32) -> Result<u128, OrderError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base as u128)
            .ok_or(OrderError::Arith(ArithError::Overflow))?;
    }
    Ok(acc)
}

fn q_power_factor(q: u64, total_exp: u32) -> Result<FactoredInt, OrderError> {
    let (p, f) = arith::prime_power(q).ok_or(OrderError::NotPrimePower(q))?;
    Ok(FactoredInt::from_factors([(p, f * total_exp)])?)
}

/// The common order of the symplectic and odd-dimensional orthogonal groups
/// of rank n over the field with q elements:
/// q^(n^2) * prod_{i=1..n} (q^(2i) - 1), divided by gcd(2, q - 1).
pub fn symplectic_orthogonal_order(n: u32, q: u64) -> Result<FactoredInt, OrderError> {
    if n < 2 {
        return Err(OrderError::RankRange(n));
    }
    let mut order = q_power_factor(q, n * n)?;
    for i in 1..=n {
        let term = checked_pow(q, 2 * i)? - 1;
        order = order.mul(&FactoredInt::factor(term));
    }
    let d = FactoredInt::factor(arith::gcd(2, q - 1) as u128);
    order
        .checked_div(&d)
        .ok_or(OrderError::Arith(ArithError::Overflow))
}

/// Factored n!/2 via Legendre's prime-exponent formula, minus one power of 2.
pub fn alternating_order(n: u32) -> Result<FactoredInt, OrderError> {
    if !(5..=40).contains(&n) {
        return Err(OrderError::DegreeRange(n));
    }
    let mut pairs = Vec::new();
    for p in 2..=n as u64 {
        if !arith::is_prime(p) {
            continue;
        }
        let mut e: u32 = 0;
        let mut pk = p;
        while pk <= n as u64 {
            e += (n as u64 / pk) as u32;
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
        if p == 2 {
            e -= 1; // index two in the symmetric group
        }
        if e > 0 {
            pairs.push((p, e));
        }
    }
    Ok(FactoredInt::from_factors(pairs)?)
}

/// |L_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1), divided by gcd(n, q-1).
pub fn linear_order(n: u32, q: u64) -> Result<FactoredInt, OrderError> {
    if n < 2 {
        return Err(OrderError::RankRange(n));
    }
    let mut order = q_power_factor(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        let term = checked_pow(q, i)? - 1;
        order = order.mul(&FactoredInt::factor(term));
    }
    let d = FactoredInt::factor(arith::gcd(n as u64, q - 1) as u128);
    order
        .checked_div(&d)
        .ok_or(OrderError::Arith(ArithError::Overflow))
}

/// |U_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - (-1)^i), divided by
/// gcd(n, q+1).
pub fn unitary_order(n: u32, q: u64) -> Result<FactoredInt, OrderError> {
    if n < 2 {
        return Err(OrderError::RankRange(n));
    }
    let mut order = q_power_factor(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        let term = if i % 2 == 0 {
            checked_pow(q, i)? - 1
        } else {
            checked_pow(q, i)? + 1
        };
        order = order.mul(&FactoredInt::factor(term));
    }
    let d = FactoredInt::factor(arith::gcd(n as u64, q + 1) as u128);
    order
        .checked_div(&d)
        .ok_or(OrderError::Arith(ArithError::Overflow))
}

/// Two distinct simple records sharing one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidencePair {
    pub first: String,
    pub second: String,
    pub order: FactoredInt,
}

/// All unordered pairs of distinct simple records with equal orders, in
/// database order.
pub fn coincidence_report(db: &GroupDatabase) -> Vec<CoincidencePair> {
    let simple: Vec<_> = db.records().iter().filter(|r| r.simple).collect();
    let mut pairs = Vec::new();
    for (i, a) in simple.iter().enumerate() {
        for b in &simple[i + 1..] {
            if a.order == b.order {
                pairs.push(CoincidencePair {
                    first: a.name.clone(),
                    second: b.name.clone(),
                    order: a.order.clone(),
                });
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_orthogonal_family() {
        assert_eq!(
            symplectic_orthogonal_order(3, 3).unwrap(),
            FactoredInt::parse("2^9 3^9 5 7 13").unwrap()
        );
        assert_eq!(
            symplectic_orthogonal_order(2, 2).unwrap().value().unwrap(),
            720
        );
        // rank-2 case over an odd field, a single group up to isomorphism
        assert_eq!(
            symplectic_orthogonal_order(2, 3).unwrap().value().unwrap(),
            25920
        );
        assert!(symplectic_orthogonal_order(1, 3).is_err());
        assert!(symplectic_orthogonal_order(2, 6).is_err());
    }

    #[test]
    fn alternating_family() {
        assert_eq!(
            alternating_order(10).unwrap(),
            FactoredInt::parse("2^7 3^4 5^2 7").unwrap()
        );
        assert_eq!(
            alternating_order(5).unwrap(),
            FactoredInt::parse("2^2 3 5").unwrap()
        );
        assert_eq!(alternating_order(8).unwrap().value().unwrap(), 20160);
        assert!(alternating_order(4).is_err());
        // factorial recurrence
        for n in 6..=40u32 {
            let a = alternating_order(n).unwrap();
            let b = alternating_order(n - 1).unwrap().mul(&FactoredInt::factor(n as u128));
            assert_eq!(a, b, "degree {n}");
        }
    }

    #[test]
    fn linear_and_unitary_families() {
        assert_eq!(
            linear_order(6, 3).unwrap(),
            FactoredInt::parse("2^11 3^15 5 7 11^2 13^2").unwrap()
        );
        assert_eq!(
            unitary_order(4, 5).unwrap(),
            FactoredInt::parse("2^7 3^4 5^6 7 13").unwrap()
        );
        assert_eq!(
            linear_order(2, 7).unwrap(),
            FactoredInt::parse("2^3 3 7").unwrap()
        );
        assert_eq!(linear_order(3, 4).unwrap().value().unwrap(), 20160);
        assert_eq!(
            unitary_order(6, 2).unwrap(),
            FactoredInt::parse("2^15 3^6 5 7 11").unwrap()
        );
    }
}
