//! Partition of the reduced residues mod `n` by symbol value: the subgroup
//! `R₁` where `a^k ≡ 1`, its coset `R₋₁` where `a^k ≡ -1`, and the remaining
//! units `R₀`, together with closed-form counts for prime moduli and the
//! primitive-root route to the symbol.

use crate::arith;
use crate::error::{Error, Result};
use crate::symbol::{symbol, SymbolQuery, SymbolValue};

/// Default bound on the moduli that enumeration-based operations will scan.
/// Keeps accidental `n` in the billions from looking like a hang; raise it
/// per call (library) or with `--max-n` / `EXPCONG_MAX_N` (CLI).
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

pub(crate) fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceCap {
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// The three symbol classes of the reduced residue system mod `n` at
/// exponent `k`, each sorted ascending. Non-units belong to no class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    n: u64,
    k: u64,
    r_plus: Vec<u64>,
    r_minus: Vec<u64>,
    r_zero: Vec<u64>,
}

impl ResiduePartition {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Units with `a^k ≡ 1 (mod n)` — a subgroup containing 1.
    pub fn r_plus(&self) -> &[u64] {
        &self.r_plus
    }

    /// Units with `a^k ≡ -1 (mod n)` — empty or a coset of `r_plus`.
    pub fn r_minus(&self) -> &[u64] {
        &self.r_minus
    }

    /// Units whose k-th power is neither 1 nor -1.
    pub fn r_zero(&self) -> &[u64] {
        &self.r_zero
    }

    /// Total units classified; equals φ(n).
    pub fn unit_count(&self) -> u64 {
        (self.r_plus.len() + self.r_minus.len() + self.r_zero.len()) as u64
    }

    /// Residues in `[0, n)` excluded from the partition for not being units.
    pub fn non_unit_count(&self) -> u64 {
        self.n - self.unit_count()
    }

    /// The class of a residue, or `None` for non-units.
    pub fn class_of(&self, a: u64) -> Option<SymbolValue> {
        let a = a % self.n;
        for (list, value) in [
            (&self.r_plus, SymbolValue::One),
            (&self.r_minus, SymbolValue::MinusOne),
            (&self.r_zero, SymbolValue::Zero),
        ] {
            if list.binary_search(&a).is_ok() {
                return Some(value);
            }
        }
        None
    }
}

/// Scans every unit mod `n` and classifies it by symbol, under the default
/// enumeration cap.
pub fn enumerate_partition(n: u64, k: u64) -> Result<ResiduePartition> {
    enumerate_partition_with_cap(n, k, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_partition`], with an explicit cap on `n`.
pub fn enumerate_partition_with_cap(n: u64, k: u64, cap: u64) -> Result<ResiduePartition> {
    SymbolQuery::new(0, n, k)?; // validate n and k
    check_cap(n, cap)?;
    let (mut r_plus, mut r_minus, mut r_zero) = (Vec::new(), Vec::new(), Vec::new());
    for a in 1..n {
        if arith::gcd(a, n) != 1 {
            continue;
        }
        match SymbolValue::classify(arith::pow_mod(a, k, n), n) {
            SymbolValue::One => r_plus.push(a),
            SymbolValue::MinusOne => r_minus.push(a),
            SymbolValue::Zero => r_zero.push(a),
        }
    }
    Ok(ResiduePartition {
        n,
        k,
        r_plus,
        r_minus,
        r_zero,
    })
}

/// Closed-form class sizes for an odd prime modulus `p`: with `m = p - 1`
/// and `g = gcd(k, m)`, the `+1` class has exactly `g` elements, and the
/// `-1` class has `g` elements when `g` divides `m/2` and is empty otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeCountReport {
    /// The odd prime modulus.
    pub p: u64,
    /// The symbol exponent.
    pub k: u64,
    /// Group order `m = p - 1`.
    pub m: u64,
    /// `gcd(k, m)`, the size of the `+1` class.
    pub g: u64,
    /// Number of residues with symbol `+1`; always equals `g`.
    pub count_plus: u64,
    /// Number of residues with symbol `-1`; `g` or 0.
    pub count_minus: u64,
    /// Whether `a^k ≡ -1` is solvable, i.e. `g | m/2`.
    pub minus_solvable: bool,
}

/// Computes the class sizes for an odd prime without any enumeration.
pub fn prime_counts(p: u64, k: u64) -> Result<PrimeCountReport> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    if k < 1 {
        return Err(Error::domain("exponent must be at least 1"));
    }
    let m = p - 1;
    let g = arith::gcd(k, m);
    let minus_solvable = (m / 2).is_multiple_of(g);
    Ok(PrimeCountReport {
        p,
        k,
        m,
        g,
        count_plus: g,
        count_minus: if minus_solvable { g } else { 0 },
        minus_solvable,
    })
}

/// Whether some unit `g` has `g^k ≡ -1 (mod n)`. When true, the sign classes
/// together form a group in which the `+1` class has index two, which is
/// asserted: the classes have equal size and `R₋₁ = g·R₁` for `g ∈ R₋₁`.
pub fn index_two_check(n: u64, k: u64) -> Result<bool> {
    index_two_check_with_cap(n, k, DEFAULT_ENUMERATION_CAP)
}

/// As [`index_two_check`], with an explicit cap on `n`.
pub fn index_two_check_with_cap(n: u64, k: u64, cap: u64) -> Result<bool> {
    let partition = enumerate_partition_with_cap(n, k, cap)?;
    let Some(&g) = partition.r_minus().first() else {
        return Ok(false);
    };
    assert_eq!(
        partition.r_plus().len(),
        partition.r_minus().len(),
        "the -1 class must mirror the +1 subgroup (n={n}, k={k})"
    );
    let mut translated: Vec<u64> = partition
        .r_plus()
        .iter()
        .map(|&h| arith::mod_mul(g, h, n))
        .collect();
    translated.sort_unstable();
    assert_eq!(
        translated,
        partition.r_minus(),
        "the -1 class must be a translate of the +1 subgroup (n={n}, k={k})"
    );
    Ok(true)
}

/// Evaluates the symbol modulo an odd prime through a primitive root: writing
/// `a = g^r`, the symbol is `+1` when `kr ≡ 0 (mod p-1)`, `-1` when
/// `kr ≡ (p-1)/2`, else 0. Asserted against direct evaluation. Costs a
/// discrete logarithm, so intended for desk-scale `p`.
pub fn symbol_by_primitive_root(a: i64, p: u64, k: u64) -> Result<SymbolValue> {
    if k < 1 {
        return Err(Error::domain("exponent must be at least 1"));
    }
    let g = arith::primitive_root(p)?;
    let r = arith::discrete_log(a, g, p)?;
    let m = p - 1;
    let kr = (k as u128 * r as u128 % m as u128) as u64;
    let value = if kr == 0 {
        SymbolValue::One
    } else if kr == m / 2 {
        SymbolValue::MinusOne
    } else {
        SymbolValue::Zero
    };
    assert_eq!(
        value,
        symbol(&SymbolQuery::new(a, p, k)?),
        "primitive-root route disagrees with direct evaluation (a={a}, p={p}, k={k})"
    );
    Ok(value)
}
