//! The counting lower bound on Toffoli gate count, and the inequality
//! `log2((2^n)!) >= n * 2^(n-1)` behind its exponential growth.

use std::f64::consts::{LOG2_E, PI};

use num_bigint::BigUint;

use crate::boolfn::MAX_VARS;
use crate::error::{Error, Result};

/// Largest `n` decided by exact integer comparison by default.
pub const EXACT_LIMIT: usize = 10;
/// Largest `n` the exact route accepts when asked for explicitly.
pub const EXACT_MAX: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    /// Exact comparison of `(n 2^(n-1))^k` against `(2^n)!`.
    Exact,
    /// Outward-rounded interval on `log2((2^n)!)`.
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    /// Some reversible function on `n` lines needs at least this many MCT gates.
    pub lower_bound: u64,
    /// Decided by exact integer comparison.
    pub exact: bool,
    /// The interval straddled an integer and the smaller candidate was taken.
    pub widened: bool,
    /// `n = 1`, where the formula divides by `log 1 = 0`; reported as 1.
    pub degenerate: bool,
}

/// `lo * (lo + 1) * ... * hi` by a balanced product tree.
fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::from(1u32);
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigUint::from(1u32), |acc, k| acc * k);
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// `(2^n)!`.
pub fn factorial_of_pow2(n: usize) -> BigUint {
    range_product(1, 1u64 << n)
}

/// Gates reachable by one MCT gate on `n` lines: `n * 2^(n-1)`.
pub fn one_gate_count_formula(n: usize) -> u64 {
    assert!(n >= 1);
    (n as u64) << (n - 1)
}

/// Interval enclosing `log2(N!)` for `N = 2^n`, from Robbins' bounds
/// `1/(12N+1) < ln N! - (N ln N - N + ln(2 pi N)/2) < 1/(12N)`.
fn log2_factorial_interval(n: usize) -> (f64, f64) {
    let big_n = (1u64 << n) as f64;
    let stirling = big_n * n as f64 - big_n * LOG2_E + 0.5 * ((2.0 * PI).log2() + n as f64);
    let lo = stirling + LOG2_E / (12.0 * big_n + 1.0);
    let hi = stirling + LOG2_E / (12.0 * big_n);
    widen(lo, hi)
}

/// Pads an interval by a relative margin far above accumulated f64 rounding.
fn widen(lo: f64, hi: f64) -> (f64, f64) {
    let pad = |x: f64| x.abs() * 1e-12 + 1e-12;
    (lo - pad(lo), hi + pad(hi))
}

fn check_range(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::UnsupportedN { n, reason: "at least one line is required" });
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    Ok(())
}

fn degenerate_report() -> BoundReport {
    BoundReport { n: 1, lower_bound: 1, exact: true, widened: false, degenerate: true }
}

/// Least `k` with `(n 2^(n-1))^k >= (2^n)!`, using the exact route up to
/// [`EXACT_LIMIT`] and the interval route above.
pub fn lower_bound_toffoli(n: usize) -> Result<BoundReport> {
    let method = if n <= EXACT_LIMIT { BoundMethod::Exact } else { BoundMethod::Interval };
    lower_bound_toffoli_with(n, method)
}

pub fn lower_bound_toffoli_with(n: usize, method: BoundMethod) -> Result<BoundReport> {
    check_range(n)?;
    if n == 1 {
        return Ok(degenerate_report());
    }
    match method {
        BoundMethod::Exact => {
            if n > EXACT_MAX {
                return Err(Error::UnsupportedN { n, reason: "exact bound is limited to n <= 16" });
            }
            Ok(BoundReport {
                n,
                lower_bound: exact_lower_bound(n),
                exact: true,
                widened: false,
                degenerate: false,
            })
        }
        BoundMethod::Interval => {
            let (l_lo, l_hi) = log2_factorial_interval(n);
            let d = (n as f64).log2() + (n - 1) as f64;
            let (d_lo, d_hi) = widen(d, d);
            let (r_lo, r_hi) = widen(l_lo / d_hi, l_hi / d_lo);
            let (k_lo, k_hi) = (r_lo.ceil() as u64, r_hi.ceil() as u64);
            Ok(BoundReport {
                n,
                lower_bound: k_lo,
                exact: false,
                widened: k_lo != k_hi,
                degenerate: false,
            })
        }
    }
}

fn exact_lower_bound(n: usize) -> u64 {
    let target = factorial_of_pow2(n);
    let base = BigUint::from(one_gate_count_formula(n));
    // Starting guess only; the answer is settled by the comparisons below.
    let guess = (target.bits() as f64 / (one_gate_count_formula(n) as f64).log2()).floor() as u64;
    let mut k = guess.max(1);
    let mut power = base.pow(k as u32);
    while power < target {
        power *= &base;
        k += 1;
    }
    while k > 1 {
        let smaller = base.pow((k - 1) as u32);
        if smaller < target {
            break;
        }
        power = smaller;
        k -= 1;
    }
    debug_assert!(power >= target);
    k
}

/// Whether `log2((2^n)!) >= n * 2^(n-1)`, i.e. `(2^n)! >= 2^(n 2^(n-1))`.
///
/// Exact up to `n = 16`; above that an outward interval decides, with the
/// exact route as fallback.
pub fn check_induction_inequality(n: usize) -> Result<bool> {
    check_range(n)?;
    let exponent = one_gate_count_formula(n);
    if n <= EXACT_MAX {
        return Ok(factorial_of_pow2(n).bits() > exponent);
    }
    let (lo, hi) = log2_factorial_interval(n);
    if lo >= exponent as f64 {
        Ok(true)
    } else if hi < exponent as f64 {
        Ok(false)
    } else {
        Ok(factorial_of_pow2(n).bits() > exponent)
    }
}
