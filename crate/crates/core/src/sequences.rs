//! Generators for the integer sequences used throughout the library, and
//! comparison against b-file snapshots.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{euler_phi, factorize, gcd, sqrt_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// All prime factors are `1` or `7 (mod 8)`.
    A058529,
    /// `2^e * m` with `e <= 1` and all prime factors of `m` equal to `1 (mod 8)`.
    A192453,
    /// All prime factors are `1` or `3 (mod 8)`.
    A225771,
    /// `2` is a square modulo `n`.
    A057126,
    /// `phi(n)/2`, with `a(2) = 1`.
    A023022,
    /// `phi(2n)/2`, with `a(1) = 1`.
    A055034,
    /// `a(n) = 6 a(n-1) - a(n-2)`, from `0, 1`.
    A001109,
    /// `a(n) = 6 a(n-1) - a(n-2)`, from `1, 3`.
    A001541,
    /// `a(n) = 6 a(n-1) - a(n-2)`, from `1, 5`.
    A001653,
    /// Triangle `T(n, k) = [gcd(n, k) = 1]`, `1 <= k <= n`, read by rows.
    A054521,
}

impl SequenceId {
    pub const ALL: [SequenceId; 10] = [
        SequenceId::A058529,
        SequenceId::A192453,
        SequenceId::A225771,
        SequenceId::A057126,
        SequenceId::A023022,
        SequenceId::A055034,
        SequenceId::A001109,
        SequenceId::A001541,
        SequenceId::A001653,
        SequenceId::A054521,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SequenceId::A058529 => "A058529",
            SequenceId::A192453 => "A192453",
            SequenceId::A225771 => "A225771",
            SequenceId::A057126 => "A057126",
            SequenceId::A023022 => "A023022",
            SequenceId::A055034 => "A055034",
            SequenceId::A001109 => "A001109",
            SequenceId::A001541 => "A001541",
            SequenceId::A001653 => "A001653",
            SequenceId::A054521 => "A054521",
        }
    }

    /// Index of the first term.
    pub fn offset(&self) -> i64 {
        match self {
            SequenceId::A001109 | SequenceId::A001541 => 0,
            SequenceId::A023022 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    Unsupported(String),
    /// Line number (1-based) and content of an unparsable b-file line.
    BadLine(usize, String),
    /// Indices must be consecutive from the sequence offset.
    BadIndex { expected: i64, found: i64 },
    EmptySnapshot,
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::Unsupported(id) => write!(f, "unsupported sequence {id}"),
            SequenceError::BadLine(n, l) => write!(f, "line {n}: cannot parse {l:?}"),
            SequenceError::BadIndex { expected, found } => {
                write!(f, "expected index {expected}, found {found}")
            }
            SequenceError::EmptySnapshot => f.write_str("snapshot has no terms"),
        }
    }
}

impl FromStr for SequenceId {
    type Err = SequenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| SequenceError::Unsupported(s.into()))
    }
}

/// The first `count` terms, computed from the definition.
pub fn generate(id: SequenceId, count: usize) -> Vec<BigInt> {
    let filtered = |keep: fn(u64) -> bool| -> Vec<BigInt> {
        (1u64..).filter(|&n| keep(n)).take(count).map(BigInt::from).collect()
    };
    match id {
        SequenceId::A058529 => filtered(|n| all_primes_in(n, &[1, 7])),
        SequenceId::A192453 => filtered(|n| {
            let f = factorize(n);
            f.exponent_of(2) <= 1 && f.factors.iter().all(|&(p, _)| p == 2 || p % 8 == 1)
        }),
        SequenceId::A225771 => filtered(|n| all_primes_in(n, &[1, 3])),
        SequenceId::A057126 => filtered(|n| !sqrt_mod(2, n).is_empty()),
        SequenceId::A023022 => (2u64..)
            .take(count)
            .map(|n| BigInt::from(if n == 2 { 1 } else { euler_phi(n) / 2 }))
            .collect(),
        SequenceId::A055034 => (1u64..)
            .take(count)
            .map(|n| BigInt::from(if n == 1 { 1 } else { euler_phi(2 * n) / 2 }))
            .collect(),
        SequenceId::A001109 => six_recurrence(BigInt::zero(), BigInt::one(), count),
        SequenceId::A001541 => six_recurrence(BigInt::one(), BigInt::from(3), count),
        SequenceId::A001653 => six_recurrence(BigInt::one(), BigInt::from(5), count),
        SequenceId::A054521 => (1i64..)
            .flat_map(|n| (1..=n).map(move |k| BigInt::from(i32::from(gcd(n, k) == 1))))
            .take(count)
            .collect(),
    }
}

fn all_primes_in(n: u64, residues: &[u64]) -> bool {
    factorize(n).factors.iter().all(|&(p, _)| residues.contains(&(p % 8)))
}

fn six_recurrence(first: BigInt, second: BigInt, count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (first, second);
    for _ in 0..count {
        let next = BigInt::from(6) * &b - &a;
        out.push(core::mem::replace(&mut a, core::mem::replace(&mut b, next)));
    }
    out
}

/// Parses b-file text: `index value` per line, `#` comments and blank lines ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, SequenceError> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut parts = body.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(i), Some(v), None) => i.parse::<i64>().ok().zip(v.parse::<BigInt>().ok()),
            _ => None,
        };
        out.push(parsed.ok_or_else(|| SequenceError::BadLine(no + 1, line.into()))?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub index: i64,
    pub snapshot: BigInt,
    pub generated: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: SequenceId,
    pub snapshot_len: usize,
    /// Length of the agreeing prefix.
    pub matched: usize,
    pub divergence: Option<Divergence>,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Compares generated terms with snapshot terms, which must be indexed from the offset.
pub fn verify_terms(id: SequenceId, snapshot: &[(i64, BigInt)]) -> Result<VerifyReport, SequenceError> {
    if snapshot.is_empty() {
        return Err(SequenceError::EmptySnapshot);
    }
    for (pos, (index, _)) in snapshot.iter().enumerate() {
        let expected = id.offset() + pos as i64;
        if *index != expected {
            return Err(SequenceError::BadIndex { expected, found: *index });
        }
    }
    let generated = generate(id, snapshot.len());
    let divergence = snapshot
        .iter()
        .zip(&generated)
        .find(|((_, s), g)| s != *g)
        .map(|((index, s), g)| Divergence { index: *index, snapshot: s.clone(), generated: g.clone() });
    let matched = divergence
        .as_ref()
        .map_or(snapshot.len(), |d| (d.index - id.offset()) as usize);
    Ok(VerifyReport { id, snapshot_len: snapshot.len(), matched, divergence })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(id: SequenceId, n: usize) -> Vec<i64> {
        generate(id, n).iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn prefixes() {
        assert_eq!(small(SequenceId::A058529, 5), [1, 7, 17, 23, 31]);
        assert_eq!(small(SequenceId::A001109, 4), [0, 1, 6, 35]);
        assert_eq!(small(SequenceId::A023022, 10), [1, 1, 1, 2, 1, 3, 2, 3, 2, 5]);
        assert_eq!(small(SequenceId::A192453, 6), [1, 2, 17, 34, 41, 73]);
        assert_eq!(small(SequenceId::A192453, 269)[268], 4913);
        assert_eq!(small(SequenceId::A225771, 11), [1, 3, 9, 11, 17, 19, 27, 33, 41, 43, 51]);
        assert_eq!(small(SequenceId::A057126, 12), [1, 2, 7, 14, 17, 23, 31, 34, 41, 46, 47, 49]);
        assert_eq!(small(SequenceId::A001541, 4), [1, 3, 17, 99]);
        assert_eq!(small(SequenceId::A001653, 4), [1, 5, 29, 169]);
        assert_eq!(small(SequenceId::A055034, 8), [1, 1, 1, 2, 2, 2, 3, 4]);
        assert_eq!(small(SequenceId::A054521, 6), [1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn parse_and_verify() {
        let text = "# comment\n1 1\n2 7\n\n3 17\n4 24\n";
        let snap = parse_bfile(text).unwrap();
        let rep = verify_terms(SequenceId::A058529, &snap).unwrap();
        assert_eq!(rep.matched, 3);
        let d = rep.divergence.unwrap();
        assert_eq!((d.index, d.snapshot, d.generated), (4, BigInt::from(24), BigInt::from(23)));
        assert!(parse_bfile("1 x").is_err());
        assert!("A000001".parse::<SequenceId>().is_err());
        assert_eq!("a058529".parse::<SequenceId>(), Ok(SequenceId::A058529));
    }
}
