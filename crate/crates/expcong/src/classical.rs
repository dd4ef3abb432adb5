//! Legendre and Jacobi symbols, their coincidence with the exponential
//! congruence symbol at the Euler exponent `(p-1)/2`, and m-th power residue
//! detection at exponent `(p-1)/m`.

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::{check_cap, DEFAULT_ENUMERATION_CAP};
use crate::symbol::{symbol, SymbolQuery, SymbolValue};

/// Legendre symbol by Euler's criterion: `a^((p-1)/2) mod p` mapped through
/// `{1 → +1, p-1 → -1, 0 → 0}`.
pub fn legendre(a: i64, p: u64) -> Result<SymbolValue> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    let r = arith::mod_pow(a, (p - 1) / 2, p)?;
    Ok(if r == 1 {
        SymbolValue::One
    } else if r == p - 1 {
        SymbolValue::MinusOne
    } else {
        // Euler's criterion only leaves 0, for multiples of p.
        debug_assert_eq!(r, 0);
        SymbolValue::Zero
    })
}

/// Jacobi symbol for odd `n >= 1` by quadratic-reciprocity reduction — no
/// factorization of `n` is needed. `(a/1) = 1` by the empty-product
/// convention, and the value is 0 exactly when `gcd(a, n) > 1`.
pub fn jacobi(a: i64, n: u64) -> Result<SymbolValue> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "Jacobi symbol requires an odd positive modulus, got {n}"
        )));
    }
    let mut a = arith::normalize(a, n)?;
    let mut n = n;
    let mut sign = SymbolValue::One;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            // (2/n) = -1 exactly when n ≡ ±3 (mod 8).
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        // Reciprocity flips the sign when both sides are ≡ 3 (mod 4).
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { SymbolValue::Zero })
}

/// Result of checking `(a/p)_{(p-1)/2} = legendre(a, p)` over all residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoincidenceReport {
    /// The odd prime modulus.
    pub p: u64,
    /// The Euler exponent `(p-1)/2` the symbol was evaluated at.
    pub k: u64,
    /// Residues where the two symbols agree.
    pub agreements: u64,
    /// Residues checked; always `p`.
    pub total: u64,
}

impl CoincidenceReport {
    /// Whether the symbols agreed everywhere.
    pub fn complete(&self) -> bool {
        self.agreements == self.total
    }
}

/// Compares the exponential symbol at the Euler exponent against the
/// Legendre symbol for every residue in `[0, p)`.
pub fn legendre_coincidence(p: u64) -> Result<CoincidenceReport> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    check_cap(p, DEFAULT_ENUMERATION_CAP)?;
    let k = (p - 1) / 2;
    let mut agreements = 0;
    for a in 0..p {
        let s = symbol(&SymbolQuery::new(a as i64, p, k)?);
        if s == legendre(a as i64, p)? {
            agreements += 1;
        }
    }
    Ok(CoincidenceReport {
        p,
        k,
        agreements,
        total: p,
    })
}

/// Whether the unit `a` is an m-th power residue mod the prime `p`, decided
/// by the symbol at exponent `(p-1)/m` being `+1`. Requires `m >= 2` and
/// `m | p-1`. Equivalence with the existence of `b` such that `b^m ≡ a` is
/// covered by the exhaustive-search suites rather than asserted here, which
/// would turn an `O(log p)` test into an `O(p)` one.
pub fn power_residue_test(a: i64, p: u64, m: u64) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if m < 2 {
        return Err(Error::domain("power residue degree must be at least 2"));
    }
    if !(p - 1).is_multiple_of(m) {
        return Err(Error::domain(format!("{m} does not divide p - 1 = {}", p - 1)));
    }
    let a = arith::normalize(a, p)?;
    if a == 0 {
        return Err(Error::NotAUnit {
            value: 0,
            modulus: p,
        });
    }
    let q = SymbolQuery::new(a as i64, p, (p - 1) / m)?;
    Ok(symbol(&q) == SymbolValue::One)
}

/// Joint distribution of the exponential symbol at `k = φ(n)/2` against the
/// Jacobi symbol, over the units mod an odd composite `n`.
///
/// The two are related but not pointwise equal — `a = 7, n = 15` has symbol
/// `+1` and Jacobi `-1` — so this reports the frequency of every value pair
/// instead of asserting equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiCompatReport {
    n: u64,
    k: u64,
    counts: [[u64; 3]; 3],
}

impl JacobiCompatReport {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The exponent φ(n)/2 the symbol was evaluated at.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// How many units attained symbol `s` together with Jacobi value `j`.
    pub fn count(&self, s: SymbolValue, j: SymbolValue) -> u64 {
        self.counts[Self::index(s)][Self::index(j)]
    }

    /// All nine `(symbol, jacobi) → frequency` cells, fixed order.
    pub fn cells(&self) -> impl Iterator<Item = (SymbolValue, SymbolValue, u64)> + '_ {
        const VALUES: [SymbolValue; 3] =
            [SymbolValue::MinusOne, SymbolValue::Zero, SymbolValue::One];
        VALUES.into_iter().flat_map(move |s| {
            VALUES
                .into_iter()
                .map(move |j| (s, j, self.counts[Self::index(s)][Self::index(j)]))
        })
    }

    /// Units where the two symbols coincide.
    pub fn matches(&self) -> u64 {
        self.count(SymbolValue::One, SymbolValue::One)
            + self.count(SymbolValue::Zero, SymbolValue::Zero)
            + self.count(SymbolValue::MinusOne, SymbolValue::MinusOne)
    }

    /// Units scanned: φ(n).
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    fn index(v: SymbolValue) -> usize {
        (v.as_int() + 1) as usize
    }
}

/// Tallies `(symbol(a, n, φ(n)/2), jacobi(a, n))` over every unit `a` mod the
/// odd composite `n`.
pub fn jacobi_compatibility(n: u64) -> Result<JacobiCompatReport> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::domain(format!(
            "expected an odd modulus of at least 3, got {n}"
        )));
    }
    if arith::is_prime(n) {
        return Err(Error::domain(format!(
            "{n} is prime; use legendre_coincidence for prime moduli"
        )));
    }
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    let k = arith::factorize(n)?.euler_phi() / 2;
    let mut counts = [[0u64; 3]; 3];
    for a in 1..n {
        if arith::gcd(a, n) != 1 {
            continue;
        }
        let s = symbol(&SymbolQuery::new(a as i64, n, k)?);
        let j = jacobi(a as i64, n)?;
        counts[JacobiCompatReport::index(s)][JacobiCompatReport::index(j)] += 1;
    }
    Ok(JacobiCompatReport { n, k, counts })
}
