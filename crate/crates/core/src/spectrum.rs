//! Spectra of finite groups, represented by the antichain of maximal element
//! orders, plus generators for the two families the toolkit can compute
//! directly: alternating groups (via cycle types of even permutations) and
//! the two-dimensional projective special linear groups.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::arith::{self, FactoredInt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("a spectrum must contain at least one element order")]
    Empty,
    #[error("element orders must be positive")]
    Zero,
    #[error("antichain violation: {0} divides {1}")]
    AntichainViolation(u64, u64),
    #[error("1 may only appear in the trivial spectrum {{1}}")]
    TrivialMixed,
    #[error("alternating degree {0} outside the supported range 5..=40")]
    AlternatingRange(u32),
    #[error("{0} is not a prime power >= 4")]
    NotPrimePower(u64),
    #[error("invalid integer list near `{0}`")]
    Syntax(String),
}

/// The maximal element orders of a group under divisibility; determines the
/// full set of element orders as its divisor closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    mu: Vec<u64>,
}

/// Keeps only the elements not properly dividing another element.
pub fn maximal_under_divisibility(values: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let set: BTreeSet<u64> = values.into_iter().collect();
    set.iter()
        .copied()
        .filter(|&m| !set.iter().any(|&n| n != m && n % m == 0))
        .collect()
}

impl Spectrum {
    /// Validates that the given orders form an antichain under divisibility.
    /// Errors identify the first offending pair.
    pub fn new(mu: impl IntoIterator<Item = u64>) -> Result<Self, SpectrumError> {
        let set: BTreeSet<u64> = mu.into_iter().collect();
        if set.is_empty() {
            return Err(SpectrumError::Empty);
        }
        if set.contains(&0) {
            return Err(SpectrumError::Zero);
        }
        if set.contains(&1) && set.len() > 1 {
            return Err(SpectrumError::TrivialMixed);
        }
        let mu: Vec<u64> = set.into_iter().collect();
        for (i, &a) in mu.iter().enumerate() {
            for &b in &mu[i + 1..] {
                if b % a == 0 {
                    return Err(SpectrumError::AntichainViolation(a, b));
                }
            }
        }
        Ok(Self { mu })
    }

    /// Parses a comma-separated ascending list such as `36,78,80,104`.
    pub fn parse(text: &str) -> Result<Self, SpectrumError> {
        let mut values = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: u64 = part
                .parse()
                .map_err(|_| SpectrumError::Syntax(part.into()))?;
            values.push(v);
        }
        Self::new(values)
    }

    pub fn members(&self) -> &[u64] {
        &self.mu
    }

    /// The divisor closure of mu: every order realized by some element.
    pub fn omega(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &m in &self.mu {
            let mut d = 1;
            while d * d <= m {
                if m % d == 0 {
                    out.insert(d);
                    out.insert(m / d);
                }
                d += 1;
            }
        }
        out
    }

    /// True iff some element of the group has order divisible by x.
    pub fn omega_contains(&self, x: u64) -> bool {
        self.mu.iter().any(|&m| m % x == 0)
    }

    /// A maximal order witnessing that x lies in the spectrum.
    pub fn witness(&self, x: u64) -> Option<u64> {
        self.mu.iter().copied().find(|&m| m % x == 0)
    }

    /// Ascending list of all primes dividing some element order.
    pub fn primes(&self) -> Vec<u64> {
        let mut out = BTreeSet::new();
        for &m in &self.mu {
            out.extend(FactoredInt::factor(m as u128).primes());
        }
        out.into_iter().collect()
    }

    /// Comma-separated ascending rendering, the wire format for datasets.
    pub fn render(&self) -> String {
        self.mu
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// All element orders of the alternating group of the given degree, each with
/// a witnessing cycle type: the lcms of the partitions of n whose part count
/// differs from n by an even number (the even-permutation criterion).
pub fn alternating_orders(n: u32) -> Result<BTreeMap<u64, Vec<u64>>, SpectrumError> {
    if !(5..=40).contains(&n) {
        return Err(SpectrumError::AlternatingRange(n));
    }
    let mut witnesses: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut parts: Vec<u64> = Vec::new();

    fn lcm(a: u64, b: u64) -> u64 {
        a / arith::gcd(a, b) * b
    }

    fn recurse(
        remaining: u64,
        max_part: u64,
        parts: &mut Vec<u64>,
        n: u64,
        witnesses: &mut BTreeMap<u64, Vec<u64>>,
    ) {
        if remaining == 0 {
            // even permutation criterion: n minus the number of parts is even
            if (n - parts.len() as u64) % 2 == 0 {
                let order = parts.iter().fold(1, |acc, &p| lcm(acc, p));
                witnesses.entry(order).or_insert_with(|| parts.clone());
            }
            return;
        }
        let mut part = max_part.min(remaining);
        while part >= 1 {
            parts.push(part);
            recurse(remaining - part, part, parts, n, witnesses);
            parts.pop();
            part -= 1;
        }
    }

    recurse(n as u64, n as u64, &mut parts, n as u64, &mut witnesses);
    Ok(witnesses)
}

/// Spectrum of the alternating group of degree n, 5 <= n <= 40.
pub fn alternating_mu(n: u32) -> Result<Spectrum, SpectrumError> {
    let orders = alternating_orders(n)?;
    Spectrum::new(maximal_under_divisibility(orders.into_keys()))
}

/// Spectrum of L2(q) for a prime power q >= 4: the maximal elements of
/// {p, (q-1)/d, (q+1)/d} with d = gcd(2, q-1).
pub fn l2_mu(q: u64) -> Result<Spectrum, SpectrumError> {
    if q < 4 {
        return Err(SpectrumError::NotPrimePower(q));
    }
    let (p, _) = arith::prime_power(q).ok_or(SpectrumError::NotPrimePower(q))?;
    let d = arith::gcd(2, q - 1);
    let candidates = [p, (q - 1) / d, (q + 1) / d];
    Spectrum::new(maximal_under_divisibility(candidates))
}
