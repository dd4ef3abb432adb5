//! The exponential congruence symbol `(a/n)_k` and its algebraic laws.
//!
//! The symbol is `+1` when `a^k ≡ 1 (mod n)`, `-1` when `a^k ≡ -1 (mod n)`,
//! and `0` otherwise. Three evaluation routes are provided — direct
//! ([`symbol`]), per prime-power factor ([`symbol_via_crt`]), and through the
//! multiplicative order ([`symbol_via_order`]) — which agree on every input.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::arith::{self, FactoredInteger};
use crate::error::{Error, Result};

/// The ternary value of the symbol. Nonzero values occur only for unit
/// residues: a power of `a` can be `±1 (mod n)` only when `gcd(a, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum SymbolValue {
    MinusOne = -1,
    Zero = 0,
    One = 1,
}

impl SymbolValue {
    /// The value as a signed integer in `{-1, 0, 1}`.
    pub fn as_int(self) -> i64 {
        self as i8 as i64
    }

    /// Classifies the residue `r = a^k mod n`: 1 first (so that modulo 2,
    /// where 1 and -1 coincide, the symbol is +1), then `n - 1`, else 0.
    pub(crate) fn classify(r: u64, n: u64) -> SymbolValue {
        if r == 1 {
            SymbolValue::One
        } else if r == n - 1 {
            SymbolValue::MinusOne
        } else {
            SymbolValue::Zero
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        match self.as_int() * rhs.as_int() {
            -1 => SymbolValue::MinusOne,
            0 => SymbolValue::Zero,
            _ => SymbolValue::One,
        }
    }
}

impl Neg for SymbolValue {
    type Output = SymbolValue;

    fn neg(self) -> SymbolValue {
        match self {
            SymbolValue::MinusOne => SymbolValue::One,
            SymbolValue::Zero => SymbolValue::Zero,
            SymbolValue::One => SymbolValue::MinusOne,
        }
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymbolValue::MinusOne => "-1",
            SymbolValue::Zero => "0",
            SymbolValue::One => "+1",
        };
        f.write_str(s)
    }
}

/// A validated symbol query: modulus `n >= 2` (at most 2^62) and exponent
/// `k >= 1`, with the base reduced into `[0, n)` at construction — the symbol
/// depends only on the residue class of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolQuery {
    a: u64,
    n: u64,
    k: u64,
}

impl SymbolQuery {
    /// Validates `n >= 2`, `n <= 2^62`, `k >= 1` and reduces `a` mod `n`.
    pub fn new(a: i64, n: u64, k: u64) -> Result<SymbolQuery> {
        if n < 2 {
            return Err(Error::domain(format!("modulus must be at least 2, got {n}")));
        }
        if k < 1 {
            return Err(Error::domain("exponent must be at least 1"));
        }
        let a = arith::normalize(a, n)?;
        Ok(SymbolQuery { a, n, k })
    }

    /// The base, reduced into `[0, n)`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// The modulus.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The exponent.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// The residue `a^k mod n` that the symbol classifies.
    pub fn power_residue(&self) -> u64 {
        arith::pow_mod(self.a, self.k, self.n)
    }

    /// The same query with the base replaced by `-a`.
    pub fn negated(&self) -> SymbolQuery {
        SymbolQuery {
            a: (self.n - self.a) % self.n,
            ..*self
        }
    }
}

/// Direct evaluation: computes `a^k mod n` and classifies it against 1 and
/// `n - 1`. The `+1` branch is tested first, which settles the degenerate
/// modulus 2 (where `1 ≡ -1`) in favour of `+1`.
pub fn symbol(q: &SymbolQuery) -> SymbolValue {
    SymbolValue::classify(q.power_residue(), q.n())
}

/// Evaluation through the prime-power factorization of `n`: the symbol is the
/// sign that `a^k` attains simultaneously modulo every factor, and 0 when no
/// common sign exists.
///
/// A factor of 2 is satisfied by both signs at once (1 and -1 coincide mod
/// 2), so it constrains nothing; tracking a *set* of admissible signs per
/// factor is what makes this route agree with [`symbol`] for even moduli.
pub fn symbol_via_crt(q: &SymbolQuery, n_factored: &FactoredInteger) -> Result<SymbolValue> {
    if n_factored.value() != q.n() {
        return Err(Error::domain(format!(
            "factorization is of {}, not of the query modulus {}",
            n_factored.value(),
            q.n()
        )));
    }
    let mut plus_everywhere = true;
    let mut minus_everywhere = true;
    for m in n_factored.prime_powers() {
        let r = arith::pow_mod(q.a() % m, q.k(), m);
        plus_everywhere &= r == 1;
        minus_everywhere &= r == m - 1;
        if !plus_everywhere && !minus_everywhere {
            return Ok(SymbolValue::Zero);
        }
    }
    // Both can survive only for n = 2; prefer +1 as the direct route does.
    Ok(if plus_everywhere {
        SymbolValue::One
    } else {
        SymbolValue::MinusOne
    })
}

/// Evaluation through the multiplicative order `d` of `a`: the symbol is `+1`
/// iff `d | k`, and can be `-1` only if `d | 2k` with `d ∤ k`.
///
/// In the latter case `a^k` is checked against `-1` directly rather than
/// inferred: when the unit group is not cyclic, `d | 2k, d ∤ k` only says
/// `a^k` is an element of order 2, of which there may be several (witness
/// `a = 3, n = 8, k = 1`, where `3 ≢ -1` yet `d = 2 | 2k`).
pub fn symbol_via_order(q: &SymbolQuery) -> SymbolValue {
    if arith::gcd(q.a(), q.n()) != 1 {
        return SymbolValue::Zero;
    }
    let factored = arith::factorize(q.n()).expect("query modulus is within bounds");
    let info = arith::multiplicative_order(q.a() as i64, &factored)
        .expect("base was just checked to be a unit");
    if info.divides_k(q.k()) {
        SymbolValue::One
    } else if info.divides_2k(q.k()) && q.power_residue() == q.n() - 1 {
        SymbolValue::MinusOne
    } else {
        SymbolValue::Zero
    }
}

/// The symbol of `-a`, derived from the symbol of `a` by the parity rule
/// `(-a)^k = (-1)^k a^k`: unchanged for even `k`, sign-flipped for odd `k`.
///
/// Modulo 2 the rule is vacuous (`-a ≡ a`), so the symbol is returned
/// unchanged there. The derived value is asserted against direct evaluation
/// of the negated query.
pub fn negate_argument(q: &SymbolQuery) -> SymbolValue {
    let base = symbol(q);
    let derived = if q.k().is_multiple_of(2) || q.n() == 2 {
        base
    } else {
        -base
    };
    assert_eq!(
        derived,
        symbol(&q.negated()),
        "parity rule disagrees with direct evaluation for {q:?}"
    );
    derived
}

/// The symbol of `a^{-1} mod n`, asserted equal to the symbol of `a` (powers
/// of the inverse are inverses of powers, and `±1` are their own inverses).
pub fn invert_argument(q: &SymbolQuery) -> Result<SymbolValue> {
    let inv = arith::mod_inv(q.a() as i64, q.n())?;
    let value = symbol(&SymbolQuery::new(inv as i64, q.n(), q.k())?);
    assert_eq!(
        value,
        symbol(q),
        "inverse symmetry disagrees with direct evaluation for {q:?}"
    );
    Ok(value)
}

/// The symbol of `a^t` at exponent `k`, asserted equal to the symbol of `a`
/// at exponent `t*k` (both classify the same residue `a^{tk}`).
pub fn power_compat(a: i64, t: u64, n: u64, k: u64) -> Result<SymbolValue> {
    if t < 1 {
        return Err(Error::domain("power must be at least 1"));
    }
    let tk = t
        .checked_mul(k)
        .ok_or_else(|| Error::domain("exponent product t*k overflows"))?;
    let base = SymbolQuery::new(a, n, k)?;
    let value = symbol(&SymbolQuery::new(
        arith::pow_mod(base.a(), t, n) as i64,
        n,
        k,
    )?);
    assert_eq!(
        value,
        symbol(&SymbolQuery::new(a, n, tk)?),
        "power compatibility disagrees for a={a} t={t} n={n} k={k}"
    );
    Ok(value)
}

/// Whether `a` lies in the sign subgroup for `(n, k)`: the units whose k-th
/// power is `±1`, i.e. exactly the residues with nonzero symbol. These form
/// a group, and the symbol restricted to it is multiplicative.
pub fn is_in_sign_subgroup(q: &SymbolQuery) -> bool {
    symbol(q) != SymbolValue::Zero
}
