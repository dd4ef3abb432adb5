//! Exact modular and multiplicative arithmetic: gcd, modular power, integer
//! factorization, totients, multiplicative orders, primitive roots, discrete
//! logarithms, and Chinese-remainder reconstruction.
//!
//! All functions are pure and deterministic. Moduli are capped at
//! [`MODULUS_CAP`] so every intermediate product fits in a `u128` and results
//! are exact without arbitrary-precision arithmetic.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest supported modulus, 2^62. Squaring any residue below this bound
/// stays within `u128`, so all modular products are exact.
pub const MODULUS_CAP: u64 = 1 << 62;

/// Greatest common divisor by Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple. Callers must ensure the result fits in `u64`.
fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Reduces an integer of either sign into the canonical residue range `[0, n)`.
pub fn normalize(a: i64, n: u64) -> Result<u64> {
    check_modulus(n)?;
    Ok(a.rem_euclid(n as i64) as u64)
}

fn check_modulus(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("modulus must be nonzero"));
    }
    if n > MODULUS_CAP {
        return Err(Error::domain(format!(
            "modulus {n} exceeds the supported bound 2^62"
        )));
    }
    Ok(())
}

/// Modular product of residues already reduced mod `n`. Uses plain `u64`
/// arithmetic when the modulus fits in 32 bits (the product cannot overflow)
/// and widens to `u128` otherwise.
#[inline]
pub fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(n >= 1 && a < n && b < n);
    if n <= u32::MAX as u64 {
        (a * b) % n
    } else {
        ((a as u128 * b as u128) % n as u128) as u64
    }
}

/// `a^e mod n` by binary exponentiation; `a` may be any integer and is
/// reduced into `[0, n)` first. For `n = 1` every power is 0.
pub fn mod_pow(a: i64, e: u64, n: u64) -> Result<u64> {
    Ok(pow_mod(normalize(a, n)?, e, n))
}

/// Binary exponentiation on an already-reduced base. Internal fast path that
/// skips the normalization and modulus checks of [`mod_pow`].
pub(crate) fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    debug_assert!(n >= 1 && base < n);
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, n);
        }
        base = mod_mul(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn mod_inv(a: i64, n: u64) -> Result<u64> {
    let a = normalize(a, n)?;
    if n == 1 {
        return Ok(0);
    }
    // Extended Euclid on (a, n); i128 comfortably holds coefficients for
    // moduli up to 2^62.
    let (mut r0, mut r1) = (a as i128, n as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotAUnit {
            value: a,
            modulus: n,
        });
    }
    Ok(s0.rem_euclid(n as i128) as u64)
}

/// Witnesses that make Miller-Rabin deterministic for all 64-bit integers.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality check, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // Miller-Rabin rounds: n - 1 = d * 2^s with d odd.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A positive integer together with its prime-power factorization.
///
/// Constructed only by [`factorize`], which guarantees the invariants: the
/// primes are strictly increasing, each passes [`is_prime`], and the product
/// of the prime powers reconstructs the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// The factored integer itself.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The `(prime, exponent)` pairs in increasing prime order; empty for 1.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The pairwise-coprime prime-power parts `p^e`, increasing in `p`.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    /// Euler's totient: the number of units modulo the value.
    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// Carmichael's function: the least exponent annihilating every unit.
    pub fn carmichael_lambda(&self) -> u64 {
        let mut l = 1;
        for &(p, e) in &self.factors {
            let part = if p == 2 {
                // The unit group mod 2^e is cyclic only for e <= 2; for
                // e >= 3 it is C2 x C_{2^(e-2)}, with exponent 2^(e-2).
                match e {
                    1 => 1,
                    2 => 2,
                    _ => 1u64 << (e - 2),
                }
            } else {
                p.pow(e - 1) * (p - 1)
            };
            // Every partial lcm divides the final value, which is below the
            // modulus cap, so this cannot overflow.
            l = lcm(l, part);
        }
        l
    }
}

/// Complete prime factorization: trial division by small primes, then
/// Brent-cycle Pollard rho splitting with every factor certified by the
/// deterministic primality check.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::domain("cannot factor 0"));
    }
    check_modulus(n)?;
    let value = n;
    let mut n = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let divide_out = |n: &mut u64, p: u64, factors: &mut Vec<(u64, u32)>| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    divide_out(&mut n, 2, &mut factors);
    let mut p = 3;
    while p <= 999 && p * p <= n {
        divide_out(&mut n, p, &mut factors);
        p += 2;
    }
    if n > 1 {
        // Whatever survives trial division has no prime factor below 1000.
        let mut large = Vec::new();
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                large.push(m);
            } else {
                let d = rho_split(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        large.sort_unstable();
        for p in large {
            if let Some(last) = factors.last_mut().filter(|(q, _)| *q == p) {
                last.1 += 1;
            } else {
                factors.push((p, 1));
            }
        }
    }
    Ok(FactoredInteger { value, factors })
}

/// Finds a nontrivial divisor of an odd composite with no small prime factor,
/// using Brent's cycle variant of Pollard rho. Deterministic: the polynomial
/// offset steps through 1, 2, 3, ... until a split succeeds.
fn rho_split(n: u64) -> u64 {
    debug_assert!(!is_prime(n) && n % 2 == 1 && n > 1);
    for c in 1.. {
        let step = |x: u64| {
            let sq = mod_mul(x, x, n);
            if sq + c >= n {
                sq + c - n
            } else {
                sq + c
            }
        };
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (y, y);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = step(y);
                    q = mod_mul(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            // The batched gcd jumped past the split point; replay singly.
            loop {
                ys = step(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Multiplicative order of a unit residue, with the modulus it lives in.
///
/// Divisibility of the order against a symbol exponent `k` is exposed as
/// methods because the order itself does not depend on `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderInfo {
    /// The unit residue, reduced into `[0, modulus)`.
    pub base: u64,
    /// The ambient modulus.
    pub modulus: u64,
    /// Least `d >= 1` with `base^d ≡ 1 (mod modulus)`.
    pub order: u64,
}

impl OrderInfo {
    /// Whether the order divides `k`.
    pub fn divides_k(&self, k: u64) -> bool {
        k.is_multiple_of(self.order)
    }

    /// Whether the order divides `2k` (computed without overflow).
    pub fn divides_2k(&self, k: u64) -> bool {
        (2 * k as u128).is_multiple_of(self.order as u128)
    }
}

/// Least `d >= 1` with `a^d ≡ 1 (mod n)`, found by factoring λ(n) and
/// stripping prime factors while the power stays 1.
pub fn multiplicative_order(a: i64, n: &FactoredInteger) -> Result<OrderInfo> {
    let modulus = n.value();
    if modulus < 2 {
        return Err(Error::domain("order requires a modulus of at least 2"));
    }
    let a = normalize(a, modulus)?;
    if gcd(a, modulus) != 1 {
        return Err(Error::NotAUnit { value: a, modulus });
    }
    let lambda = n.carmichael_lambda();
    let mut d = lambda;
    for &(q, _) in factorize(lambda)?.factors() {
        while d.is_multiple_of(q) && pow_mod(a, d / q, modulus) == 1 {
            d /= q;
        }
    }
    debug_assert_eq!(pow_mod(a, d, modulus), 1);
    Ok(OrderInfo {
        base: a,
        modulus,
        order: d,
    })
}

/// Smallest primitive root modulo an odd prime: the least `g >= 2` whose
/// order is `p - 1`, certified by checking `g^((p-1)/q) ≠ 1` for every prime
/// `q` dividing `p - 1`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    check_modulus(p)?;
    let cofactors: Vec<u64> = factorize(p - 1)?
        .factors()
        .iter()
        .map(|&(q, _)| (p - 1) / q)
        .collect();
    for g in 2..p {
        if cofactors.iter().all(|&e| pow_mod(g, e, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every odd prime has a primitive root")
}

/// Discrete logarithm `r` with `g^r ≡ a (mod p)` by baby-step giant-step,
/// for `g` a primitive root of the odd prime `p`. Memory grows like `√p`;
/// intended for desk-scale primes (up to roughly 10^7).
pub fn discrete_log(a: i64, g: u64, p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    let a = normalize(a, p)?;
    if a == 0 {
        return Err(Error::NotAUnit {
            value: 0,
            modulus: p,
        });
    }
    let g = normalize(g as i64, p)?;
    if g == 0 {
        return Err(Error::NotAUnit {
            value: 0,
            modulus: p,
        });
    }
    let order = p - 1;
    let m = (order as f64).sqrt().ceil() as u64 + 1;
    let mut baby = HashMap::with_capacity(m as usize);
    let mut pow = 1u64;
    for j in 0..m {
        baby.entry(pow).or_insert(j);
        pow = mod_mul(pow, g, p);
    }
    // One giant step multiplies by g^(-m).
    let giant = pow_mod(mod_inv(g as i64, p)?, m, p);
    let mut gamma = a;
    for i in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            return Ok((i * m + j) % order);
        }
        gamma = mod_mul(gamma, giant, p);
    }
    Err(Error::domain(format!(
        "{g} does not generate {a} modulo {p}; is it a primitive root?"
    )))
}

/// Solves a system of congruences `x ≡ rᵢ (mod nᵢ)` with pairwise-coprime
/// moduli, returning `(x, ∏ nᵢ)`. The empty system yields `(0, 1)`.
pub fn crt_combine(congruences: &[(u64, u64)]) -> Result<(u64, u64)> {
    let (mut x, mut n) = (0u64, 1u64);
    for &(r, m) in congruences {
        if m == 0 {
            return Err(Error::domain("congruence modulus must be nonzero"));
        }
        match n.checked_mul(m) {
            Some(prod) if prod <= MODULUS_CAP => {}
            _ => {
                return Err(Error::domain(
                    "product of congruence moduli exceeds the supported bound 2^62",
                ))
            }
        }
        if gcd(n, m) != 1 {
            return Err(Error::domain(format!(
                "congruence moduli are not pairwise coprime (gcd({n}, {m}) > 1)"
            )));
        }
        // Lift x from mod n to mod n*m: x + n*t ≡ r (mod m).
        let r = r % m;
        let diff = (r + m - x % m) % m;
        let t = mod_mul(diff, mod_inv(n as i64 % m as i64, m)?, m);
        x += n * t;
        n *= m;
    }
    Ok((x, n))
}
