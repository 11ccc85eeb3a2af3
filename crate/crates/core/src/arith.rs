//! Exact arithmetic on factored positive integers.
//!
//! Every order that flows through the toolkit is kept as a prime -> exponent
//! map, so divisibility and exponent comparisons are exact. Plain values are
//! computed in 128 bits with explicit overflow signaling instead of silently
//! wrapping.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("syntax error in factored integer near `{0}`")]
    Syntax(String),
    #[error("base {0} is not prime")]
    NotPrime(u64),
    #[error("duplicate base {0}")]
    DuplicateBase(u64),
    #[error("zero exponent on base {0}")]
    ZeroExponent(u64),
    #[error("value exceeds the exact 128-bit range")]
    Overflow,
    #[error("expected a prime modulus, got {0}")]
    ExpectedPrime(u64),
    #[error("{0} is divisible by {1}; multiplicative order undefined")]
    NotCoprime(u64, u64),
}

/// Deterministic trial-division primality test; adequate for the word-sized
/// primes this toolkit handles.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Smallest d >= 1 with a^d = 1 (mod s), for s prime and a not divisible by s.
pub fn mult_order(a: u64, s: u64) -> Result<u64, ArithError> {
    if !is_prime(s) {
        return Err(ArithError::ExpectedPrime(s));
    }
    if a % s == 0 {
        return Err(ArithError::NotCoprime(a, s));
    }
    // The order divides s - 1; scan its divisors in ascending order.
    let mut divisors: Vec<u64> = Vec::new();
    let n = s - 1;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            divisors.push(n / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    for d in divisors {
        if mod_pow(a, d, s) == 1 {
            return Ok(d);
        }
    }
    unreachable!("Fermat guarantees a^(s-1) = 1 mod s");
}

/// If q = p^f for a prime p, returns (p, f).
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = FactoredInt::factor(q as u128);
    let mut it = f.iter();
    match (it.next(), it.next()) {
        (Some((p, e)), None) => Some((p, e)),
        _ => None,
    }
}

/// A positive integer stored as an ordered prime -> exponent map.
/// The empty map represents 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FactoredInt {
    factors: BTreeMap<u64, u32>,
}

impl FactoredInt {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Builds a factored integer from (prime, exponent) pairs, validating
    /// primality, uniqueness and positivity of exponents.
    pub fn from_factors<I>(pairs: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (u64, u32)>,
    {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            if e == 0 {
                return Err(ArithError::ZeroExponent(p));
            }
            if factors.insert(p, e).is_some() {
                return Err(ArithError::DuplicateBase(p));
            }
        }
        Ok(Self { factors })
    }

    /// Parses the `p^e` grammar: terms separated by whitespace, `*` or the
    /// middle dot, each term a prime or `prime^exponent`. The empty string
    /// and `"1"` both denote 1.
    pub fn parse(text: &str) -> Result<Self, ArithError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Self::one());
        }
        let mut pairs = Vec::new();
        for term in trimmed.split(|c: char| c.is_whitespace() || c == '*' || c == '\u{b7}') {
            if term.is_empty() {
                continue;
            }
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => {
                    let b: u64 = b.parse().map_err(|_| ArithError::Syntax(term.into()))?;
                    let e: u32 = e.parse().map_err(|_| ArithError::Syntax(term.into()))?;
                    (b, e)
                }
                None => {
                    let b: u64 = term.parse().map_err(|_| ArithError::Syntax(term.into()))?;
                    (b, 1)
                }
            };
            pairs.push((base, exp));
        }
        Self::from_factors(pairs)
    }

    /// Factors n by trial division. Panics on n = 0.
    pub fn factor(mut n: u128) -> Self {
        assert!(n >= 1, "cannot factor zero");
        let mut factors = BTreeMap::new();
        let mut add = |p: u64, e: u32| {
            if e > 0 {
                factors.insert(p, e);
            }
        };
        let mut e = 0;
        while n % 2 == 0 {
            n /= 2;
            e += 1;
        }
        add(2, e);
        let mut d: u128 = 3;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            add(d as u64, e);
            d += 2;
        }
        if n > 1 {
            add(n as u64, 1);
        }
        Self { factors }
    }

    /// Exact product of all p^e; overflow beyond 128 bits is reported,
    /// never wrapped.
    pub fn value(&self) -> Result<u128, ArithError> {
        let mut acc: u128 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128).ok_or(ArithError::Overflow)?;
            }
        }
        Ok(acc)
    }

    /// True iff self divides other, exponent by exponent.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors
            .iter()
            .all(|(p, e)| other.exponent_of(*p) >= *e)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn support(&self) -> Vec<u64> {
        self.primes().collect()
    }

    pub fn max_prime(&self) -> Option<u64> {
        self.factors.keys().next_back().copied()
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    /// Exact quotient; None when other does not divide self.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.get_mut(&p).expect("divisibility checked");
            *slot -= e;
            if *slot == 0 {
                factors.remove(&p);
            }
        }
        Some(Self { factors })
    }

    pub fn pow(&self, k: u32) -> Self {
        let factors = self.factors.iter().map(|(&p, &e)| (p, e * k)).collect();
        Self { factors }
    }

    /// Canonical rendering: ascending `p^e` terms joined by single spaces,
    /// bare `p` for exponent one, `1` for the empty product.
    pub fn render(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
