//! The symbol as a character-like weight `χ_k(m) = (m/n)_k`: orthogonality
//! sums, twisted exponential sums `S(m)` with their size bound, truncated
//! Dirichlet series `L(s, χ_k)`, and an Euler-product cross-check that shows
//! where the product form holds (χ totally multiplicative) and where the
//! symbol's zero class breaks it.
//!
//! Floating-point policy: `f64` throughout, ascending-index summation, no
//! compensated sums. Magnitudes stay of order φ(n), so the documented
//! tolerances (`1e-9` slack on the sum bound, integral tail bounds on series)
//! dominate the rounding error by many orders of magnitude.

use std::f64::consts::{E, PI, TAU};
use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::{check_cap, enumerate_partition_with_cap, DEFAULT_ENUMERATION_CAP};
use crate::symbol::{symbol, SymbolQuery, SymbolValue};

/// Complex values are ordinary double-precision complex numbers; the JSON
/// layer renders them as `[re, im]` pairs.
pub type ComplexSample = Complex64;

/// Numerical slack allowed when checking `|S(m)|` against the integer bound
/// `|R₁| + |R₋₁|`: covers f64 rounding across desk-scale sums, which stays
/// below 1e-10 even at the enumeration cap.
pub const EXP_SUM_TOLERANCE: f64 = 1e-9;

/// The symbol viewed as an arithmetic function of `m >= 1`: `(m mod n / n)_k`,
/// automatically 0 on non-units.
pub fn chi(m: u64, n: u64, k: u64) -> Result<SymbolValue> {
    if m < 1 {
        return Err(Error::domain("character argument must be at least 1"));
    }
    SymbolQuery::new(0, n, k)?; // validate n and k before reducing m
    let q = SymbolQuery::new((m % n) as i64, n, k)?;
    Ok(symbol(&q))
}

/// `Σ_{a ∈ [0,n)} (a/n)_k` in exact integer arithmetic: equals
/// `|R₁| - |R₋₁|`, which is 0 whenever the `-1` class is inhabited (asserted)
/// and `|R₁| > 0` otherwise.
pub fn orthogonality_sum(n: u64, k: u64) -> Result<i64> {
    orthogonality_sum_with_cap(n, k, DEFAULT_ENUMERATION_CAP)
}

/// As [`orthogonality_sum`], with an explicit cap on `n`.
pub fn orthogonality_sum_with_cap(n: u64, k: u64, cap: u64) -> Result<i64> {
    SymbolQuery::new(0, n, k)?;
    check_cap(n, cap)?;
    let (mut plus, mut minus) = (0i64, 0i64);
    for a in 1..n {
        if arith::gcd(a, n) != 1 {
            continue;
        }
        match SymbolValue::classify(arith::pow_mod(a, k, n), n) {
            SymbolValue::One => plus += 1,
            SymbolValue::MinusOne => minus += 1,
            SymbolValue::Zero => {}
        }
    }
    assert!(
        minus == 0 || plus == minus,
        "sign classes must cancel when -1 is attained (n={n}, k={k})"
    );
    Ok(plus - minus)
}

/// Exact phase index: `a*m mod n` reduced into `[0, n)` for `m` of any sign.
fn phase_index(a: u64, m: i64, n: u64) -> u64 {
    (a as i128 * m as i128).rem_euclid(n as i128) as u64
}

fn phase(t: u64, n: u64) -> Complex64 {
    Complex64::cis(TAU * t as f64 / n as f64)
}

/// The twisted sum `S(m) = Σ_a (a/n)_k e^{2πi a m / n}`, accumulated in
/// ascending `a` with the `+1` and `-1` classes summed separately and then
/// subtracted.
pub fn exp_sum(m: i64, n: u64, k: u64) -> Result<ComplexSample> {
    exp_sum_with_cap(m, n, k, DEFAULT_ENUMERATION_CAP)
}

/// As [`exp_sum`], with an explicit cap on `n`.
pub fn exp_sum_with_cap(m: i64, n: u64, k: u64, cap: u64) -> Result<ComplexSample> {
    SymbolQuery::new(0, n, k)?;
    check_cap(n, cap)?;
    let (mut plus, mut minus) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for a in 1..n {
        if arith::gcd(a, n) != 1 {
            continue;
        }
        match SymbolValue::classify(arith::pow_mod(a, k, n), n) {
            SymbolValue::One => plus += phase(phase_index(a, m, n), n),
            SymbolValue::MinusOne => minus += phase(phase_index(a, m, n), n),
            SymbolValue::Zero => {}
        }
    }
    Ok(plus - minus)
}

/// Outcome of sweeping `|S(m)|` against the bound `|R₁| + |R₋₁|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpSumBoundReport {
    pub n: u64,
    pub k: u64,
    /// Inclusive sweep range for the twist `m`.
    pub m_lo: i64,
    pub m_hi: i64,
    /// `|R₁| + |R₋₁|`, the proven bound on every `|S(m)|`.
    pub class_size: u64,
    /// Largest `|S(m)|` seen.
    pub max_abs: f64,
    /// The `m` attaining it (smallest such on ties).
    pub worst_m: i64,
    /// `max_abs / class_size`; 1 means the bound is attained.
    pub max_ratio: f64,
}

/// Evaluates `S(m)` for every `m` in the range, asserting
/// `|S(m)| <= |R₁| + |R₋₁| + EXP_SUM_TOLERANCE` and reporting the worst case.
///
/// The phases `e^{2πit/n}` are tabulated once per call, so sweeping all `n`
/// twists costs `O(n)` trigonometry plus `O(n·(|R₁|+|R₋₁|))` additions; the
/// per-term values are identical to [`exp_sum`]'s.
pub fn exp_sum_bound_check(n: u64, k: u64, m_range: RangeInclusive<i64>) -> Result<ExpSumBoundReport> {
    exp_sum_bound_check_with_cap(n, k, m_range, DEFAULT_ENUMERATION_CAP)
}

/// As [`exp_sum_bound_check`], with an explicit cap on `n`.
pub fn exp_sum_bound_check_with_cap(
    n: u64,
    k: u64,
    m_range: RangeInclusive<i64>,
    cap: u64,
) -> Result<ExpSumBoundReport> {
    let (&m_lo, &m_hi) = (m_range.start(), m_range.end());
    if m_lo > m_hi {
        return Err(Error::domain(format!("empty twist range {m_lo}..{m_hi}")));
    }
    let partition = enumerate_partition_with_cap(n, k, cap)?;
    let class_size = (partition.r_plus().len() + partition.r_minus().len()) as u64;
    let table: Vec<Complex64> = (0..n).map(|t| phase(t, n)).collect();
    let (mut max_abs, mut worst_m) = (f64::NEG_INFINITY, m_lo);
    for m in m_lo..=m_hi {
        let sum_over = |class: &[u64]| {
            class
                .iter()
                .map(|&a| table[phase_index(a, m, n) as usize])
                .sum::<Complex64>()
        };
        let s = sum_over(partition.r_plus()) - sum_over(partition.r_minus());
        let abs = s.norm();
        assert!(
            abs <= class_size as f64 + EXP_SUM_TOLERANCE,
            "|S({m})| = {abs} exceeds the class-size bound {class_size} (n={n}, k={k})"
        );
        if abs > max_abs {
            (max_abs, worst_m) = (abs, m);
        }
    }
    Ok(ExpSumBoundReport {
        n,
        k,
        m_lo,
        m_hi,
        class_size,
        max_abs,
        worst_m,
        // The classes can never both be empty (1 is always in R₁), but keep
        // the ratio well-defined anyway.
        max_ratio: if class_size == 0 {
            0.0
        } else {
            max_abs / class_size as f64
        },
    })
}

/// A truncated Dirichlet series value with its truncation parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSample {
    /// The evaluation point; `Re(s) > 1`.
    pub s: ComplexSample,
    /// Number of terms summed.
    pub terms: u64,
    /// `Σ_{m=1}^{terms} χ_k(m) m^{-s}`, ascending in `m`.
    pub partial_sum: ComplexSample,
    /// Integral estimate `terms^(1-Re s) / (Re s - 1)` dominating the dropped
    /// tail `Σ_{m>terms} m^{-Re s}`; any longer truncation stays within it.
    pub tail_bound: f64,
}

fn integral_tail_bound(cutoff: u64, sigma: f64) -> f64 {
    (cutoff as f64).powf(1.0 - sigma) / (sigma - 1.0)
}

fn check_convergent(s: Complex64) -> Result<()> {
    // Negated so a NaN real part is rejected too; `s.re <= 1.0` would let
    // NaN through.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(s.re > 1.0) {
        return Err(Error::domain(format!(
            "series requires Re(s) > 1 for convergence, got Re(s) = {}",
            s.re
        )));
    }
    Ok(())
}

/// Partial sum of `L(s, χ_k) = Σ χ_k(m) m^{-s}` over `m <= terms`.
pub fn l_series_partial(s: ComplexSample, n: u64, k: u64, terms: u64) -> Result<SeriesSample> {
    check_convergent(s)?;
    if terms < 1 {
        return Err(Error::domain("series needs at least one term"));
    }
    SymbolQuery::new(0, n, k)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=terms {
        let weight = SymbolValue::classify(arith::pow_mod(m % n, k, n), n);
        if weight == SymbolValue::Zero {
            continue;
        }
        let term = (-s * (m as f64).ln()).exp();
        sum += weight.as_int() as f64 * term;
    }
    Ok(SeriesSample {
        s,
        terms,
        partial_sum: sum,
        tail_bound: integral_tail_bound(terms, s.re),
    })
}

fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; (limit + 1) as usize];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if composite[p as usize] {
            continue;
        }
        primes.push(p);
        let mut multiple = p * p;
        while multiple <= limit {
            composite[multiple as usize] = true;
            multiple += p;
        }
    }
    primes
}

/// The truncated Euler product `∏_{p <= cutoff} (1 - χ_k(p) p^{-s})^{-1}`,
/// ascending in `p`, with unit factors where `χ_k(p) = 0`.
///
/// This equals the series over cutoff-smooth integers only when `χ_k` is
/// totally multiplicative, which fails whenever the zero class `R₀` is
/// inhabited; use [`euler_product_check`] for the comparison with explicit
/// bounds.
pub fn euler_product_partial(s: ComplexSample, n: u64, k: u64, cutoff: u64) -> Result<ComplexSample> {
    euler_product_partial_with_cap(s, n, k, cutoff, DEFAULT_ENUMERATION_CAP)
}

/// As [`euler_product_partial`], with an explicit cap on the sieve size.
pub fn euler_product_partial_with_cap(
    s: ComplexSample,
    n: u64,
    k: u64,
    cutoff: u64,
    cap: u64,
) -> Result<ComplexSample> {
    check_convergent(s)?;
    SymbolQuery::new(0, n, k)?;
    check_cap(cutoff, cap)?;
    let mut product = Complex64::new(1.0, 0.0);
    for p in primes_up_to(cutoff) {
        let weight = SymbolValue::classify(arith::pow_mod(p % n, k, n), n);
        if weight == SymbolValue::Zero {
            continue;
        }
        let p_pow = (-s * (p as f64).ln()).exp();
        product *= (Complex64::new(1.0, 0.0) - weight.as_int() as f64 * p_pow).inv();
    }
    Ok(product)
}

/// Side-by-side evaluation of the truncated Euler product and the truncated
/// Dirichlet series, with the tail bounds that decide whether they should
/// agree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerProductReport {
    pub s: ComplexSample,
    pub n: u64,
    pub k: u64,
    /// Primes up to this bound enter the product.
    pub prime_cutoff: u64,
    /// Terms in the comparison series.
    pub terms: u64,
    /// The truncated product.
    pub product: ComplexSample,
    /// The truncated series.
    pub partial_sum: ComplexSample,
    /// `|product - partial_sum|`.
    pub discrepancy: f64,
    /// Tail bound chargeable to the product truncation (valid when totally
    /// multiplicative: the product then equals the series over smooth m).
    pub product_tail_bound: f64,
    /// Tail bound chargeable to the series truncation.
    pub series_tail_bound: f64,
    /// Whether `χ_k` is totally multiplicative here, i.e. `R₀` is empty.
    pub totally_multiplicative: bool,
    /// `discrepancy <= product_tail_bound + series_tail_bound + slack`.
    pub agrees_within_bounds: bool,
}

impl EulerProductReport {
    /// The bound the discrepancy must respect when the product form is valid.
    pub fn combined_bound(&self) -> f64 {
        self.product_tail_bound + self.series_tail_bound
    }
}

/// Compares product and series truncations. When the zero class is empty the
/// character is totally multiplicative and agreement within the combined
/// tail bounds is asserted; otherwise the (typically large) discrepancy is
/// simply reported — the product form genuinely fails there.
pub fn euler_product_check(
    s: ComplexSample,
    n: u64,
    k: u64,
    prime_cutoff: u64,
    terms: u64,
) -> Result<EulerProductReport> {
    euler_product_check_with_cap(s, n, k, prime_cutoff, terms, DEFAULT_ENUMERATION_CAP)
}

/// As [`euler_product_check`], with an explicit enumeration cap.
pub fn euler_product_check_with_cap(
    s: ComplexSample,
    n: u64,
    k: u64,
    prime_cutoff: u64,
    terms: u64,
    cap: u64,
) -> Result<EulerProductReport> {
    let product = euler_product_partial_with_cap(s, n, k, prime_cutoff, cap)?;
    let series = l_series_partial(s, n, k, terms)?;
    let totally_multiplicative =
        enumerate_partition_with_cap(n, k, cap)?.r_zero().is_empty();
    let discrepancy = (product - series.partial_sum).norm();
    let product_tail_bound = integral_tail_bound(prime_cutoff, s.re);
    // EXP_SUM_TOLERANCE-scale slack absorbs f64 rounding on top of the
    // analytic tails.
    let agrees_within_bounds =
        discrepancy <= product_tail_bound + series.tail_bound + EXP_SUM_TOLERANCE;
    if totally_multiplicative {
        assert!(
            agrees_within_bounds,
            "product and series disagree by {discrepancy} despite a totally \
             multiplicative character (n={n}, k={k})"
        );
    }
    Ok(EulerProductReport {
        s,
        n,
        k,
        prime_cutoff,
        terms,
        product,
        partial_sum: series.partial_sum,
        discrepancy,
        product_tail_bound,
        series_tail_bound: series.tail_bound,
        totally_multiplicative,
        agrees_within_bounds,
    })
}

/// Polynomial coefficients for the Lanczos approximation of Γ (Pugh's
/// analysis, r = 10.900511; accurate to about 16 significant digits).
const GAMMA_DK: [f64; 11] = [
    2.4857408913875355e-5,
    1.0514237858172197,
    -3.4568709722201625,
    4.512277094668948,
    -2.9828522532357664,
    1.056397115771267,
    -1.9542877319164587e-1,
    1.709705434044412e-2,
    -5.719261174043057e-4,
    4.633994733599057e-6,
    -2.7199490848860772e-9,
];

const GAMMA_R: f64 = 10.900511;

/// Constant value for `2 * sqrt(e / pi)`.
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657;

/// Γ(z) for complex z with `Re(z) >= 0.5` (all this crate needs: the
/// completed series evaluates Γ(s/2) with `Re(s) > 1`).
fn complex_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re >= 0.5);
    let mut sum = Complex64::new(GAMMA_DK[0], 0.0);
    for (i, &d) in GAMMA_DK.iter().enumerate().skip(1) {
        sum += d / (z + (i as f64 - 1.0));
    }
    sum * TWO_SQRT_E_OVER_PI * ((z - 0.5 + GAMMA_R) / E).powc(z - 0.5)
}

/// Sample of the completed form `π^{-s/2} Γ(s/2) L(s, χ_k)` with the series
/// truncated at `terms`. Exploratory output only: no functional-equation
/// claim is checked, and the Γ-factor presumes the even-character shape.
pub fn completed_lambda(s: ComplexSample, n: u64, k: u64, terms: u64) -> Result<ComplexSample> {
    let series = l_series_partial(s, n, k, terms)?;
    let gamma_factor = complex_gamma(s / 2.0);
    let pi_factor = (-s / 2.0 * PI.ln()).exp();
    Ok(pi_factor * gamma_factor * series.partial_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn chi_known_values() {
        assert_eq!(chi(2, 5, 2).unwrap(), SymbolValue::MinusOne);
        assert_eq!(chi(1, 9, 4).unwrap(), SymbolValue::One);
        assert_eq!(chi(5, 5, 2).unwrap(), SymbolValue::Zero); // non-unit
        assert_eq!(chi(17, 5, 2).unwrap(), chi(2, 5, 2).unwrap()); // period n
        assert!(chi(0, 5, 2).is_err());
    }

    #[test]
    fn orthogonality_known_values() {
        assert_eq!(orthogonality_sum(5, 2).unwrap(), 0); // {1,4} vs {2,3}
        assert_eq!(orthogonality_sum(15, 2).unwrap(), 4); // -1 unattained
        assert_eq!(orthogonality_sum(3, 1).unwrap(), 0);
    }

    #[test]
    fn orthogonality_matches_partition_counts() {
        for n in 2..=80 {
            for k in 1..=6 {
                let part = enumerate_partition_with_cap(n, k, 1 << 20).unwrap();
                let expected = part.r_plus().len() as i64 - part.r_minus().len() as i64;
                assert_eq!(orthogonality_sum(n, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn exp_sum_known_values() {
        // Twist 0 degenerates to the orthogonality sum.
        assert!(close(exp_sum(0, 5, 2).unwrap(), Complex64::new(0.0, 0.0), 1e-12));
        assert!(close(exp_sum(0, 15, 2).unwrap(), Complex64::new(4.0, 0.0), 1e-12));
        // 2cos(2π/5) - 2cos(4π/5) = √5.
        let s = exp_sum(1, 5, 2).unwrap();
        assert!((s.re - 5f64.sqrt()).abs() <= 1e-9, "got {s}");
        assert!(s.im.abs() <= 1e-9);
    }

    #[test]
    fn exp_sum_symmetries() {
        for n in [5u64, 8, 12, 15, 21] {
            for k in [1u64, 2, 3] {
                for m in 0..n as i64 {
                    let s = exp_sum(m, n, k).unwrap();
                    // Negating the twist conjugates the sum (real weights).
                    let conj = exp_sum(-m, n, k).unwrap();
                    assert!(close(conj, s.conj(), 1e-9), "m={m} n={n} k={k}");
                    // The twist only enters through a*m mod n, so shifting m
                    // by n reproduces the identical float value.
                    assert_eq!(exp_sum(m + n as i64, n, k).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn exp_sum_matches_bound_check_bitwise() {
        for (n, k) in [(5u64, 2u64), (15, 2), (24, 2), (13, 3)] {
            let report = exp_sum_bound_check(n, k, 0..=(n as i64 - 1)).unwrap();
            let mut max_abs = f64::NEG_INFINITY;
            for m in 0..n as i64 {
                max_abs = max_abs.max(exp_sum(m, n, k).unwrap().norm());
            }
            assert_eq!(report.max_abs, max_abs, "n={n} k={k}");
        }
    }

    #[test]
    fn bound_check_known_values() {
        let report = exp_sum_bound_check(5, 2, 0..=4).unwrap();
        assert_eq!(report.class_size, 4);
        assert!((report.max_abs - 5f64.sqrt()).abs() <= 1e-9); // attained at m=1
        assert!(report.max_ratio <= 1.0);

        // All phases are 1 at m = 0: the bound is attained exactly.
        let report = exp_sum_bound_check(15, 2, 0..=0).unwrap();
        assert_eq!(report.class_size, 4);
        assert_eq!(report.max_abs, 4.0);
        assert_eq!(report.max_ratio, 1.0);
        assert_eq!(report.worst_m, 0);

        // A reversed (empty) sweep range must be rejected, not silently
        // reported as vacuously fine.
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 3..=1;
        assert!(exp_sum_bound_check(5, 2, empty).is_err());
    }

    #[test]
    fn l_series_known_values() {
        let one_term = l_series_partial(Complex64::new(2.0, 0.0), 9, 4, 1).unwrap();
        assert!(close(one_term.partial_sum, Complex64::new(1.0, 0.0), 1e-15));

        // Support on {1,4,11,14} mod 15: the first 15 terms have closed form.
        let s = Complex64::new(3.0, 0.0);
        let sample = l_series_partial(s, 15, 2, 15).unwrap();
        let expected = 1.0 + 4f64.powi(-3) + 11f64.powi(-3) + 14f64.powi(-3);
        assert!(close(sample.partial_sum, Complex64::new(expected, 0.0), 1e-15));

        assert!(l_series_partial(Complex64::new(1.0, 0.0), 5, 2, 10).is_err());
        assert!(l_series_partial(Complex64::new(2.0, 0.0), 5, 2, 0).is_err());
    }

    #[test]
    fn l_series_truncations_stay_within_tail_bounds() {
        for sigma in [1.5, 2.0, 3.0] {
            for (n, k) in [(5u64, 2u64), (15, 2), (7, 3)] {
                let s = Complex64::new(sigma, 0.5);
                let short = l_series_partial(s, n, k, 500).unwrap();
                let long = l_series_partial(s, n, k, 1000).unwrap();
                let drift = (short.partial_sum - long.partial_sum).norm();
                assert!(drift <= short.tail_bound, "sigma={sigma} n={n} k={k}");
            }
        }
    }

    #[test]
    fn euler_product_trivial_cases() {
        let s = Complex64::new(2.0, 0.0);
        let empty = euler_product_partial(s, 5, 2, 1).unwrap();
        assert!(close(empty, Complex64::new(1.0, 0.0), 0.0));
        assert!(euler_product_partial(Complex64::new(0.5, 0.0), 5, 2, 10).is_err());
    }

    #[test]
    fn euler_product_agrees_for_the_legendre_character() {
        // Mod 5 at the Euler exponent the zero class is empty, so the
        // product is genuine; the internal assertion also fires on failure.
        let s = Complex64::new(2.0, 0.0);
        let report = euler_product_check(s, 5, 2, 1_000, 10_000).unwrap();
        assert!(report.totally_multiplicative);
        assert!(report.agrees_within_bounds);
        assert!(report.discrepancy <= report.combined_bound());
    }

    #[test]
    fn euler_product_breaks_when_the_zero_class_is_inhabited() {
        // Mod 15 at k = 2 the character vanishes on half the units, so the
        // series keeps terms (4, 14, 16, 49, ...) that no Euler factor can
        // produce; the gap is macroscopic, not a truncation artifact.
        let s = Complex64::new(2.0, 0.0);
        let report = euler_product_check(s, 15, 2, 1_000, 10_000).unwrap();
        assert!(!report.totally_multiplicative);
        assert!(!report.agrees_within_bounds);
        assert!(report.discrepancy > 0.05, "got {}", report.discrepancy);
        assert!(report.discrepancy > 10.0 * report.combined_bound());
    }

    #[test]
    fn gamma_reference_points() {
        let g = |re: f64, im: f64| complex_gamma(Complex64::new(re, im));
        assert!(close(g(1.0, 0.0), Complex64::new(1.0, 0.0), 1e-13));
        assert!(close(g(5.0, 0.0), Complex64::new(24.0, 0.0), 1e-12));
        assert!(close(g(0.5, 0.0), Complex64::new(PI.sqrt(), 0.0), 1e-13));
        // Recurrence Γ(z+1) = zΓ(z) off the real axis.
        let z = Complex64::new(1.5, 2.0);
        assert!(close(complex_gamma(z + 1.0), z * complex_gamma(z), 1e-12));
        // Conjugate symmetry.
        assert!(close(
            complex_gamma(z.conj()),
            complex_gamma(z).conj(),
            1e-13
        ));
    }

    #[test]
    fn completed_form_scales_the_series() {
        // At s = 2 the prefactor is π^{-1}Γ(1) = 1/π.
        let s = Complex64::new(2.0, 0.0);
        let series = l_series_partial(s, 5, 2, 2_000).unwrap();
        let lambda = completed_lambda(s, 5, 2, 2_000).unwrap();
        assert!(close(lambda, series.partial_sum / PI, 1e-12));
    }
}
